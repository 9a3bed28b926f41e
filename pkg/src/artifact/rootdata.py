"""Finite Weyl types with Bourbaki node labels.

Convention: c[i][j] = <alpha_i, alpha_j^vee>, so the simple reflection s_i acts
on coroot coordinates by s_i(alpha_j^vee) = alpha_j^vee - c[i][j] alpha_i^vee.
With this choice B_n has c[n-1][n] = -2 (alpha_n short) and C_n has
c[n][n-1] = -2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from .intlin import Matrix, determinant

TYPE_LABELS = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")
EXCEPTIONAL = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
CLASSICAL = ("A", "B", "C", "D")
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}

_BOND_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}


class RootDatumError(ValueError):
    pass


def _edges(label: str, n: int) -> list[tuple[int, int]]:
    """Simply-laced skeleton of the Dynkin diagram, 1-based."""
    if label in ("A", "B", "C"):
        return [(i, i + 1) for i in range(1, n)]
    if label == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    if label in ("E6", "E7", "E8"):
        return [(1, 3), (2, 4)] + [(i, i + 1) for i in range(3, n)]
    if label == "F4":
        return [(1, 2), (2, 3), (3, 4)]
    if label == "G2":
        return [(1, 2)]
    raise RootDatumError(f"unknown type {label!r}")


def _cartan(label: str, n: int) -> tuple[tuple[int, ...], ...]:
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in _edges(label, n):
        c[i - 1][j - 1] = c[j - 1][i - 1] = -1
    if label == "B":
        c[n - 2][n - 1] = -2
    elif label == "C":
        c[n - 1][n - 2] = -2
    elif label == "F4":
        c[1][2] = -2
    elif label == "G2":
        c[1][0] = -3
    return tuple(tuple(r) for r in c)


@dataclass(frozen=True)
class RootDatum:
    type_label: str
    rank: int
    cartan: Matrix = field(repr=False, compare=False)
    coxeter_m: Matrix = field(repr=False, compare=False)

    def __str__(self) -> str:
        return self.name

    @property
    def name(self) -> str:
        return self.type_label if self.type_label in EXCEPTIONAL else f"{self.type_label}{self.rank}"

    @cached_property
    def generators(self) -> tuple[Matrix, ...]:
        return tuple(simple_reflection_matrix(self, i) for i in range(1, self.rank + 1))

    @cached_property
    def positive_coroots(self) -> tuple[tuple[int, ...], ...]:
        """Positive coroots in simple-coroot coordinates, by orbit closure."""
        n = self.rank
        simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        seen = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(n):
                    ci = self.cartan[i]
                    # s_i v = v - <alpha_i, v> alpha_i^vee
                    pair = sum(ci[j] * v[j] for j in range(n))
                    if pair == 0:
                        continue
                    w = list(v)
                    w[i] -= pair
                    w = tuple(w)
                    if all(x >= 0 for x in w) and w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        return tuple(sorted(seen, key=lambda v: (sum(v), v)))

    @property
    def group_order(self) -> int:
        return weyl_group_order(self.type_label, self.rank)


def root_datum(type_label: str, rank: int | None = None) -> RootDatum:
    label = type_label.upper() if type_label[0].lower() in "abcdefg" else type_label
    if label not in TYPE_LABELS:
        raise RootDatumError(f"unknown type {type_label!r}")
    if label in EXCEPTIONAL:
        fixed = EXCEPTIONAL[label]
        if rank is not None and rank != fixed:
            raise RootDatumError(f"{label} has rank {fixed}, not {rank}")
        rank = fixed
    else:
        if rank is None or rank < _MIN_RANK[label]:
            raise RootDatumError(f"invalid rank {rank} for type {label}")
    c = _cartan(label, rank)
    m = tuple(
        tuple(1 if i == j else _BOND_ORDER[c[i][j] * c[j][i]] for j in range(rank))
        for i in range(rank)
    )
    assert determinant(c) != 0
    return RootDatum(label, rank, c, m)


def parse_datum(text: str) -> RootDatum:
    """'C9', 'E6', 'A 3' style labels."""
    t = text.replace(" ", "").upper()
    if t in EXCEPTIONAL:
        return root_datum(t)
    if t[:1] in CLASSICAL and t[1:].isdigit():
        return root_datum(t[0], int(t[1:]))
    raise RootDatumError(f"cannot parse type label {text!r}")


def simple_reflection_matrix(datum: RootDatum, i: int) -> Matrix:
    """Matrix of s_i on coroot coordinates; column j is s_i(alpha_j^vee)."""
    n = datum.rank
    if not 1 <= i <= n:
        raise RootDatumError(f"generator index {i} out of range 1..{n}")
    ci = datum.cartan[i - 1]
    rows = [[1 if r == col else 0 for col in range(n)] for r in range(n)]
    for col in range(n):
        rows[i - 1][col] -= ci[col]
    return tuple(tuple(r) for r in rows)


def weyl_group_order(label: str, n: int) -> int:
    if label == "A":
        return math.factorial(n + 1)
    if label in ("B", "C"):
        return 2**n * math.factorial(n)
    if label == "D":
        return 2 ** (n - 1) * math.factorial(n)
    return {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152, "G2": 12}[label]
