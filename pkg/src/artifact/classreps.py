"""Minimal-length conjugacy class representatives.

Classical types are indexed by partition data; exceptional types by row
number in the embedded word tables (data/exceptional.json).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Optional, Sequence

from .rootdata import EXCEPTIONAL, RootDatum, parse_datum, root_datum
from .weyl import WeylElement, from_word


class ClassParamsError(ValueError):
    pass


# -- partitions --------------------------------------------------------------

def partitions(n: int, max_part: Optional[int] = None):
    """Weakly decreasing partitions of n, lexicographically descending."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partial_sums(parts: Sequence[int]) -> list[int]:
    """j_1 = 0, j_k = parts[0] + ... + parts[k-2]; length len(parts) + 1."""
    out = [0]
    for x in parts:
        out.append(out[-1] + x)
    return out


# -- class parameters ----------------------------------------------------------

@dataclass(frozen=True)
class ClassParams:
    """Label of a conjugacy class.

    kind A uses beta; kinds B and C use (beta, gamma); D uses (beta, delta, sign);
    exceptional kinds use a 1-based table row.
    """
    type_label: str
    beta: tuple[int, ...] = ()
    gamma: tuple[int, ...] = ()
    delta: tuple[int, ...] = ()
    sign: Optional[str] = None
    row: Optional[int] = None

    @property
    def rank(self) -> int:
        t = self.type_label
        if t in EXCEPTIONAL:
            return EXCEPTIONAL[t]
        if t == "A":
            return sum(self.beta) - 1
        if t in ("B", "C"):
            return sum(self.beta) + sum(self.gamma)
        return sum(self.beta) + sum(self.delta)

    def datum(self) -> RootDatum:
        if self.type_label in EXCEPTIONAL:
            return root_datum(self.type_label)
        return root_datum(self.type_label, self.rank)

    def to_string(self) -> str:
        t = self.type_label
        fmt = lambda p: ",".join(str(x) for x in p)
        if t in EXCEPTIONAL:
            return f"{t}:row={self.row}"
        if t == "A":
            return f"A:beta={fmt(self.beta)}"
        if t in ("B", "C"):
            return f"{t}:beta={fmt(self.beta)};gamma={fmt(self.gamma)}"
        s = f"D:beta={fmt(self.beta)};delta={fmt(self.delta)}"
        if self.sign:
            s += f";sign={self.sign}"
        return s

    __str__ = to_string

    def validate(self, rank: Optional[int] = None) -> "ClassParams":
        t = self.type_label
        if t in EXCEPTIONAL:
            rows = exceptional_table(t)
            if self.row is None or not 1 <= self.row <= len(rows):
                raise ClassParamsError(f"{t} row must be in 1..{len(rows)}")
            return self
        if any(x <= 0 for x in self.beta + self.gamma + self.delta):
            raise ClassParamsError("partition parts must be positive")
        if list(self.beta) != sorted(self.beta, reverse=True):
            raise ClassParamsError("beta must be weakly decreasing")
        if list(self.gamma) != sorted(self.gamma) or list(self.delta) != sorted(self.delta):
            raise ClassParamsError("gamma/delta must be weakly increasing")
        if t == "A":
            if self.gamma or self.delta or self.sign:
                raise ClassParamsError("type A takes only beta")
            if sum(self.beta) < 2:
                raise ClassParamsError("type A needs |beta| = n + 1 >= 2")
        elif t in ("B", "C"):
            if self.delta or self.sign:
                raise ClassParamsError("types B/C take beta and gamma")
            if self.rank < 2:
                raise ClassParamsError("types B/C need rank >= 2")
        elif t == "D":
            if self.gamma:
                raise ClassParamsError("type D takes beta and delta")
            if len(self.delta) % 2:
                raise ClassParamsError("delta needs an even number of parts")
            if self.rank < 4:
                raise ClassParamsError("type D needs rank >= 4")
            if self.sign not in (None, "+", "-"):
                raise ClassParamsError(f"bad sign {self.sign!r}")
            if needs_sign(self.beta, self.delta) != (self.sign is not None):
                raise ClassParamsError(
                    "sign is required exactly when delta is empty and all parts of beta are even")
        else:
            raise ClassParamsError(f"unknown type {t!r}")
        if rank is not None and self.rank != rank:
            raise ClassParamsError(f"{self} has rank {self.rank}, expected {rank}")
        return self


def needs_sign(beta: Sequence[int], delta: Sequence[int]) -> bool:
    return not delta and bool(beta) and all(b % 2 == 0 for b in beta)


def parse_class_params(text: str, rank: Optional[int] = None) -> ClassParams:
    """Parse 'A:beta=4,3,1', 'C:beta=;gamma=2,3,4', 'D:beta=2,2;delta=;sign=-', 'E6:row=20'."""
    try:
        head, _, body = text.strip().partition(":")
        t = head.strip().upper()
        fields = {}
        for item in filter(None, (s.strip() for s in body.split(";"))):
            k, eq, v = item.partition("=")
            if not eq:
                raise ValueError(item)
            fields[k.strip().lower()] = v.strip()
        part = lambda key: tuple(int(x) for x in fields.get(key, "").split(",") if x.strip())
        if t in EXCEPTIONAL:
            p = ClassParams(t, row=int(fields["row"]))
        else:
            p = ClassParams(t, beta=part("beta"), gamma=part("gamma"), delta=part("delta"),
                            sign=fields.get("sign") or None)
        unknown = set(fields) - {"beta", "gamma", "delta", "sign", "row"}
        if unknown:
            raise ValueError(f"unknown fields {sorted(unknown)}")
    except (ValueError, KeyError) as exc:
        raise ClassParamsError(f"cannot parse class spec {text!r}: {exc}") from None
    return p.validate(rank)


def all_class_params(type_label: str, rank: Optional[int] = None) -> list[ClassParams]:
    """Every class label, beta lex-descending, then gamma/delta ascending, + before -."""
    t = type_label.upper()
    if t in EXCEPTIONAL:
        return [ClassParams(t, row=k) for k in range(1, len(exceptional_table(t)) + 1)]
    n = root_datum(t, rank).rank
    out: list[ClassParams] = []
    if t == "A":
        return [ClassParams("A", beta=b) for b in partitions(n + 1)]
    for m in range(n + 1):
        for b in partitions(m):
            for g in partitions(n - m):
                g = tuple(reversed(g))
                if t in ("B", "C"):
                    out.append(ClassParams(t, beta=b, gamma=g))
                elif len(g) % 2 == 0:
                    if needs_sign(b, g):
                        out.append(ClassParams(t, beta=b, delta=g, sign="+"))
                        out.append(ClassParams(t, beta=b, delta=g, sign="-"))
                    else:
                        out.append(ClassParams(t, beta=b, delta=g))
    key2 = lambda p: p.gamma or p.delta
    out.sort(key=key2)
    out.sort(key=lambda p: p.beta, reverse=True)
    return out


# -- derived index sets ------------------------------------------------------

@dataclass(frozen=True)
class DerivedIndexSets:
    """The index sets the closed forms are phrased in; all 1-based subsets of [n]."""
    n: int
    j_beta: tuple[int, ...]
    J_beta: frozenset
    I_beta: frozenset
    j_gamma: tuple[int, ...] = ()
    J_gamma: frozenset = frozenset()
    I_gamma: frozenset = frozenset()
    j_delta: tuple[int, ...] = ()
    I_delta: frozenset = frozenset()


def J_of(beta: Sequence[int]) -> frozenset:
    js = partial_sums(beta)
    return frozenset(i for k, b in enumerate(beta) for i in range(js[k] + 1, js[k] + b))


def I_of(beta: Sequence[int]) -> frozenset:
    # partial sums j_2..j_p together with |beta|
    js = partial_sums(beta)
    return frozenset(js[1:len(beta)]) | {js[-1]}


def index_sets(p: ClassParams) -> DerivedIndexSets:
    n = p.rank
    jb = tuple(partial_sums(p.beta))
    base = dict(n=n, j_beta=jb, J_beta=J_of(p.beta), I_beta=I_of(p.beta))
    if p.type_label in ("B", "C"):
        jg = tuple(partial_sums(p.gamma))
        m = sum(p.beta)
        return DerivedIndexSets(
            **base, j_gamma=jg, J_gamma=frozenset(range(m + 1, n + 1)),
            I_gamma=frozenset(n - jg[k] for k in range(len(p.gamma))))
    if p.type_label == "D":
        jd = tuple(partial_sums(p.delta))
        return DerivedIndexSets(
            **base, j_delta=jd, I_delta=frozenset(n - jd[k] for k in range(len(p.delta))))
    return DerivedIndexSets(**base)


# -- words -----------------------------------------------------------------------

def word_type_A(beta: Sequence[int]) -> tuple[int, ...]:
    """Product of s_j over j in J_beta, increasing."""
    return tuple(sorted(J_of(beta)))


def word_gamma(gamma: Sequence[int], n: int) -> tuple[int, ...]:
    """w_gamma = w_1 ... w_q with w_k = s_{n-j_k} ... s_{n-1} . s_n s_{n-1} ... s_{n-j_{k+1}+1}."""
    js = partial_sums(gamma)
    word: list[int] = []
    for k in range(len(gamma)):
        word += list(range(n - js[k], n))
        word += list(range(n, n - js[k + 1], -1))
    return tuple(word)


def u_word(j: int, n: int) -> tuple[int, ...]:
    """u_0 = s_n, u_1 = s_n s_{n-1}, u_j = s_{n-j} u_{j-1} s_{n-j}."""
    if j == 0:
        return (n,)
    w = (n, n - 1)
    for i in range(2, j + 1):
        w = (n - i,) + w + (n - i,)
    return w


def word_delta(delta: Sequence[int], n: int) -> tuple[int, ...]:
    if not delta:
        return ()
    js = partial_sums(delta)
    tail = lambda k: tuple(n - (js[k] + i) for i in range(1, delta[k]))  # 0-based k

    def v(k):
        return u_word(js[k], n) + tail(k)

    if all(d == 1 for d in delta):
        return sum((u_word(j, n) for j in range(1, len(delta))), ())
    ones = sum(1 for d in delta if d == 1)
    if ones:
        head = sum((u_word(j, n) for j in range(1, ones)), ())
        return head + sum((v(k) for k in range(ones, len(delta))), ())
    head = (n,) + tuple(n - i for i in range(2, delta[0]))
    return head + sum((v(k) for k in range(1, len(delta))), ())


def rep_word(p: ClassParams) -> tuple[int, ...]:
    t = p.type_label
    if t in EXCEPTIONAL:
        return tuple(int(ch) for ch in exceptional_table(t)[p.row - 1]["word"])
    if t == "A":
        return word_type_A(p.beta)
    n = p.rank
    wb = word_type_A(p.beta)
    if t in ("B", "C"):
        return wb + word_gamma(p.gamma, n)
    if p.sign == "-":
        wb = tuple(n if i == n - 1 else i for i in wb)
    return wb + word_delta(p.delta, n)


def representative(p: ClassParams) -> WeylElement:
    return from_word(p.datum(), rep_word(p))


def rep_type_A(beta: Sequence[int]) -> WeylElement:
    return representative(ClassParams("A", beta=tuple(beta)).validate())


def rep_type_BC(beta: Sequence[int], gamma: Sequence[int], rank: int, type_label: str = "C") -> WeylElement:
    p = ClassParams(type_label, beta=tuple(beta), gamma=tuple(gamma)).validate(rank)
    return representative(p)


def rep_type_D(beta: Sequence[int], delta: Sequence[int], sign: Optional[str], rank: int) -> WeylElement:
    p = ClassParams("D", beta=tuple(beta), delta=tuple(delta), sign=sign).validate(rank)
    return representative(p)


# -- exceptional tables --------------------------------------------------------

@lru_cache(maxsize=None)
def _tables() -> dict:
    with resources.files("artifact").joinpath("data/exceptional.json").open() as fh:
        return json.load(fh)


def exceptional_table(type_label: str) -> list[dict]:
    """Rows {word, closure, snf} in table order. Words are digit strings ('' = identity)."""
    t = type_label.upper()
    if t not in EXCEPTIONAL:
        raise ClassParamsError(f"{type_label!r} is not an exceptional type")
    return [dict(r) for r in _tables()["tables"][t]]


def table_version() -> int:
    return _tables()["version"]


def datum_for(label: str) -> RootDatum:
    return parse_datum(label)
