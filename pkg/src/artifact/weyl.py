"""Finite Weyl group elements as integer matrices, plus brute-force oracles."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .intlin import (
    Matrix,
    Vector,
    determinant,
    identity,
    mat_mul,
    mat_sub,
    mat_vec,
    rank,
    unimodular_inverse,
)
from .rootdata import RootDatum

DEFAULT_GROUP_BOUND = 10**6
LENGTH_BFS_BOUND = 50_000


class GroupBoundExceeded(RuntimeError):
    pass


class DatumMismatch(ValueError):
    pass


@dataclass(frozen=True)
class WeylElement:
    """Element of W acting on coroot coordinates. Identity is by matrix only."""
    datum: RootDatum
    matrix: Matrix
    word: Optional[tuple[int, ...]] = field(default=None, compare=False)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return multiply(self, other)

    def __call__(self, v: Sequence[int]) -> Vector:
        return mat_vec(self.matrix, v)

    @property
    def rank(self) -> int:
        return self.datum.rank

    def is_identity(self) -> bool:
        return self.matrix == identity(self.datum.rank)

    def id_minus(self) -> Matrix:
        """Id - w, whose column lattice is Mod(w)."""
        return mat_sub(identity(self.datum.rank), self.matrix)

    def word_string(self) -> str:
        if self.word is None:
            return "?"
        if not self.word:
            return "1"
        return "s_" + "".join(str(i) for i in self.word)


def _check(a: WeylElement, b: WeylElement) -> None:
    if a.datum != b.datum:
        raise DatumMismatch(f"{a.datum} vs {b.datum}")


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    _check(a, b)
    word = a.word + b.word if a.word is not None and b.word is not None else None
    return WeylElement(a.datum, mat_mul(a.matrix, b.matrix), word)


def inverse(a: WeylElement) -> WeylElement:
    word = tuple(reversed(a.word)) if a.word is not None else None
    return WeylElement(a.datum, unimodular_inverse(a.matrix), word)


def conjugate(u: WeylElement, w: WeylElement) -> WeylElement:
    """u w u^-1."""
    return multiply(multiply(u, w), inverse(u))


def parse_word(word) -> tuple[int, ...]:
    """Accept a sequence of ints or the digit shorthand '12342546' / 's_{1234}'."""
    if isinstance(word, str):
        s = word.strip()
        for junk in ("s_", "{", "}", " ", ","):
            s = s.replace(junk, "")
        if s in ("", "e", "id"):
            return ()
        if not s.isdigit():
            raise ValueError(f"cannot parse word {word!r}")
        return tuple(int(ch) for ch in s)
    return tuple(int(i) for i in word)


def from_word(datum: RootDatum, word) -> WeylElement:
    """Left-to-right product, so (1, 2) means s_1 s_2."""
    w = parse_word(word)
    gens = datum.generators
    M = identity(datum.rank)
    for i in w:
        if not 1 <= i <= datum.rank:
            raise ValueError(f"generator {i} out of range for {datum}")
        M = mat_mul(M, gens[i - 1])
    return WeylElement(datum, M, w)


def identity_element(datum: RootDatum) -> WeylElement:
    return WeylElement(datum, identity(datum.rank), ())


def simple_reflection(datum: RootDatum, i: int) -> WeylElement:
    return from_word(datum, (i,))


# -- enumeration -------------------------------------------------------------

@dataclass
class EnumeratedGroup:
    datum: RootDatum
    elements: list[Matrix]
    index: dict  # matrix -> position
    words: list[tuple[int, ...]]  # reduced words from BFS

    def __len__(self) -> int:
        return len(self.elements)

    def element(self, k: int) -> WeylElement:
        return WeylElement(self.datum, self.elements[k], self.words[k])

    def __iter__(self):
        return (self.element(k) for k in range(len(self.elements)))

    def length(self, k: int) -> int:
        return len(self.words[k])


_GROUP_CACHE: dict = {}


def _left_gen(M: Matrix, i: int, cartan: Matrix) -> Matrix:
    # S_i = Id - e_i c_i^T, so S_i @ M only rewrites row i
    ci = cartan[i]
    n = len(M)
    row = tuple(
        M[i][col] - sum(ci[j] * M[j][col] for j in range(n) if ci[j]) for col in range(n)
    )
    return M[:i] + (row,) + M[i + 1:]


def _right_gen(M: Matrix, i: int, cartan: Matrix) -> Matrix:
    # M @ S_i = M - (M e_i) c_i^T
    ci = cartan[i]
    return tuple(tuple(r[j] - ci[j] * r[i] for j in range(len(r))) for r in M)


def enumerate_group(datum: RootDatum, bound: int = DEFAULT_GROUP_BOUND) -> EnumeratedGroup:
    """Closure of {Id} under multiplication by generators (BFS).

    BFS order means each stored word is reduced, so word length is the
    Coxeter length.
    """
    if datum.group_order > bound:
        raise GroupBoundExceeded(f"|W({datum})| = {datum.group_order} exceeds bound {bound}")
    key = (datum.type_label, datum.rank)
    if key in _GROUP_CACHE:
        return _GROUP_CACHE[key]
    n = datum.rank
    cartan = datum.cartan
    start = identity(n)
    elements = [start]
    words: list[tuple[int, ...]] = [()]
    index = {start: 0}
    queue = deque([0])
    while queue:
        k = queue.popleft()
        M = elements[k]
        for i in range(n):
            N = _left_gen(M, i, cartan)
            if N not in index:
                if len(elements) >= bound:
                    raise GroupBoundExceeded(f"group {datum} exceeds bound {bound}")
                index[N] = len(elements)
                elements.append(N)
                words.append((i + 1,) + words[k])
                queue.append(index[N])
    G = EnumeratedGroup(datum, elements, index, words)
    _GROUP_CACHE[key] = G
    return G


def conjugacy_classes(datum: RootDatum, bound: int = DEFAULT_GROUP_BOUND) -> list[list[int]]:
    """Orbits of conjugation, as lists of indices into enumerate_group(datum).

    Conjugating by generators suffices since they generate W.
    """
    G = enumerate_group(datum, bound)
    cartan = datum.cartan
    n = datum.rank
    seen = [False] * len(G)
    classes = []
    for start in range(len(G)):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        stack = [start]
        while stack:
            M = G.elements[stack.pop()]
            for i in range(n):
                k = G.index[_right_gen(_left_gen(M, i, cartan), i, cartan)]
                if not seen[k]:
                    seen[k] = True
                    orbit.append(k)
                    stack.append(k)
        classes.append(sorted(orbit))
    return classes


# -- lengths -----------------------------------------------------------------

def coxeter_length(w: WeylElement) -> int:
    """Number of positive coroots sent to negative ones."""
    return sum(1 for v in w.datum.positive_coroots if any(x < 0 for x in w(v)))


def reflection_length(w: WeylElement) -> int:
    """l_R(w) = dim Mov(w) = rank of (w - Id) over Q."""
    return rank(w.id_minus())


def reflections(datum: RootDatum, bound: int = DEFAULT_GROUP_BOUND) -> set[Matrix]:
    """All conjugates u s_i u^-1, found as the closure of the simple reflections."""
    gens = datum.generators
    found = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for R in frontier:
            for S in gens:
                T = mat_mul(mat_mul(S, R), S)
                if T not in found:
                    found.add(T)
                    nxt.append(T)
        frontier = nxt
        if len(found) > bound:
            raise GroupBoundExceeded("too many reflections")
    return found


def reflection_length_bfs(datum: RootDatum, bound: int = DEFAULT_GROUP_BOUND) -> dict:
    """Matrix -> reflection length for the whole group, by BFS over reflections."""
    G = enumerate_group(datum, bound)
    refl = list(reflections(datum))
    start = identity(datum.rank)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        M = queue.popleft()
        for R in refl:
            N = mat_mul(M, R)
            if N not in dist:
                dist[N] = dist[M] + 1
                queue.append(N)
    assert len(dist) == len(G)
    return dist


def is_cuspidal(w: WeylElement) -> bool:
    """Fix(w) = 0, i.e. det(w - Id) != 0."""
    return determinant(w.id_minus()) != 0


def group_elements(datum: RootDatum, bound: int = DEFAULT_GROUP_BOUND) -> Iterable[WeylElement]:
    return iter(enumerate_group(datum, bound))
