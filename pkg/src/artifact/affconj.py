"""Affine Weyl group W^ = R^vee x| W: conjugacy classes and coconjugation sets.

An element t^lam w acts by p -> w(p) + lam. Products follow
(lam, w)(mu, v) = (lam + w mu, w v).
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .intlin import (
    LatticeBasis,
    Matrix,
    Vector,
    canonical,
    column_lattice,
    identity,
    mat_mul,
    mat_vec,
    reduce_mod,
    smith_normal_form,
    solve_integer,
)
from .modset import fills_move_set, fix_cap_lattice, mov_cap_lattice
from .rootdata import RootDatum
from .weyl import (
    DEFAULT_GROUP_BOUND,
    DatumMismatch,
    WeylElement,
    enumerate_group,
    from_word,
    identity_element,
    inverse,
    multiply,
)

DEFAULT_WINDOW = 4
DEFAULT_ORACLE_RADIUS = 3


def _add(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def _norm(v: Sequence[int]) -> int:
    return max((abs(x) for x in v), default=0)


@dataclass(frozen=True)
class AffineElement:
    """t^lam w; equality ignores the stored word of w."""
    lam: Vector
    w: WeylElement

    def __post_init__(self):
        if len(self.lam) != self.w.rank:
            raise ValueError(f"translation has length {len(self.lam)}, expected {self.w.rank}")
        object.__setattr__(self, "lam", tuple(int(x) for x in self.lam))

    @property
    def datum(self) -> RootDatum:
        return self.w.datum

    def __mul__(self, other: "AffineElement") -> "AffineElement":
        return compose(self, other)

    def __call__(self, p: Sequence[int]) -> Vector:
        return _add(self.w(p), self.lam)

    def key(self) -> tuple:
        return (self.lam, self.w.matrix)

    def affine_matrix(self) -> Matrix:
        """(n+1) x (n+1) block matrix [[w, lam], [0, 1]]."""
        n = self.w.rank
        rows = [tuple(self.w.matrix[i]) + (self.lam[i],) for i in range(n)]
        rows.append((0,) * n + (1,))
        return tuple(rows)

    def to_dict(self) -> dict:
        return {"lambda": list(self.lam), "word": list(word_of(self.w))}

    def __str__(self) -> str:
        return f"t^{list(self.lam)} {self.w.word_string()}"


def translation(datum: RootDatum, lam: Sequence[int]) -> AffineElement:
    return AffineElement(tuple(lam), identity_element(datum))


def spherical(w: WeylElement) -> AffineElement:
    return AffineElement((0,) * w.rank, w)


def affine_element(datum: RootDatum, lam: Sequence[int], word=()) -> AffineElement:
    """t^lam times the word, which may use the affine generator 0."""
    return compose(translation(datum, lam), affine_from_word(datum, word))


def word_of(w: WeylElement) -> tuple[int, ...]:
    if w.word is not None:
        return w.word
    G = enumerate_group(w.datum)
    return G.words[G.index[w.matrix]]


def _check(a: AffineElement, b: AffineElement) -> None:
    if a.datum != b.datum:
        raise DatumMismatch(f"{a.datum} vs {b.datum}")


def compose(a: AffineElement, b: AffineElement) -> AffineElement:
    _check(a, b)
    return AffineElement(_add(a.lam, a.w(b.lam)), multiply(a.w, b.w))


def affine_inverse(a: AffineElement) -> AffineElement:
    wi = inverse(a.w)
    return AffineElement(tuple(-x for x in wi(a.lam)), wi)


def conjugate_affine(y: AffineElement, x: AffineElement) -> AffineElement:
    """y x y^-1."""
    return compose(compose(y, x), affine_inverse(y))


# -- the affine generator s_0 ------------------------------------------------

@lru_cache(maxsize=None)
def _highest_root_data(datum: RootDatum) -> tuple[Vector, tuple[int, ...], int]:
    """Highest root theta (root coordinates) with a word v and index i, theta = v(alpha_i)."""
    n = datum.rank
    c = datum.cartan
    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    found = {r: ((), i) for i, r in enumerate(simple)}
    frontier = list(simple)
    while frontier:
        nxt = []
        for r in frontier:
            v, i0 = found[r]
            for i in range(n):
                # s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i
                pair = sum(r[j] * c[j][i] for j in range(n))
                if pair >= 0:
                    continue
                s = list(r)
                s[i] -= pair
                s = tuple(s)
                if s not in found:
                    found[s] = ((i + 1,) + v, i0)
                    nxt.append(s)
        frontier = nxt
    theta = max(found, key=lambda r: (sum(r), r))
    v, i0 = found[theta]
    return theta, v, i0


def highest_root(datum: RootDatum) -> Vector:
    return _highest_root_data(datum)[0]


def highest_root_coroot(datum: RootDatum) -> Vector:
    """theta^vee in simple-coroot coordinates."""
    _, v, i0 = _highest_root_data(datum)
    e = tuple(1 if k == i0 else 0 for k in range(datum.rank))
    return from_word(datum, v)(e)


def affine_simple_reflection(datum: RootDatum, i: int) -> AffineElement:
    """s_0 = t^{theta^vee} s_theta; s_i for i >= 1 are the finite ones."""
    if i == 0:
        _, v, i0 = _highest_root_data(datum)
        u = from_word(datum, v)
        s_theta = multiply(multiply(u, from_word(datum, (i0 + 1,))), inverse(u))
        s_theta = WeylElement(datum, s_theta.matrix, word_of(WeylElement(datum, s_theta.matrix)))
        return AffineElement(highest_root_coroot(datum), s_theta)
    return spherical(from_word(datum, (i,)))


def affine_from_word(datum: RootDatum, word) -> AffineElement:
    if isinstance(word, str):
        s = word.strip()
        for junk in ("s_", "{", "}", " ", ","):
            s = s.replace(junk, "")
        if s in ("", "e", "id"):
            letters: tuple[int, ...] = ()
        elif s.isdigit():
            letters = tuple(int(ch) for ch in s)
        else:
            raise ValueError(f"cannot parse word {word!r}")
    else:
        letters = tuple(int(i) for i in word)
    x = spherical(identity_element(datum))
    for i in letters:
        if not 0 <= i <= datum.rank:
            raise ValueError(f"generator {i} out of range for affine {datum}")
        x = compose(x, affine_simple_reflection(datum, i))
    return x


# -- conjugacy classes -------------------------------------------------------

@lru_cache(maxsize=4096)
def _lattices(w: WeylElement) -> tuple[LatticeBasis, LatticeBasis, LatticeBasis]:
    return column_lattice(w.id_minus()), mov_cap_lattice(w), fix_cap_lattice(w)


def mod_lattice(w: WeylElement) -> LatticeBasis:
    return _lattices(w)[0]


def _spherical_orbit(w: WeylElement, bound: int) -> tuple:
    """(u, u w u^-1) for every u in W."""
    enumerate_group(w.datum, bound)
    return _orbit_cached(w)


@lru_cache(maxsize=256)
def _orbit_cached(w: WeylElement) -> tuple:
    G = enumerate_group(w.datum)
    return tuple((u, multiply(multiply(u, w), inverse(u))) for u in G)


def box(n: int, R: int) -> Iterator[Vector]:
    return itertools.product(range(-R, R + 1), repeat=n)


def _box_points_in_coset(base: Vector, L: LatticeBasis, R: int) -> list[Vector]:
    """Points nu with |nu| <= R and nu - base in L.

    The canonical basis is in echelon form, so coordinates are fixed pivot by
    pivot: a pivot coordinate runs over its residue class in [-R, R], and the
    coordinates before the next pivot are then forced.
    """
    n = L.ambient_rank
    vecs = canonical(L).vectors
    pivots = [next(i for i, x in enumerate(b) if x) for b in vecs]
    out = []

    def rec(k: int, cur: Vector):
        # coordinates < (next pivot) are final once vectors 0..k-1 are placed
        stop = pivots[k] if k < len(vecs) else n
        if any(abs(cur[i]) > R for i in range(stop)):
            return
        if k == len(vecs):
            out.append(cur)
            return
        b, p = vecs[k], pivots[k]
        lo = -((R + cur[p]) // b[p])
        hi = (R - cur[p]) // b[p]
        for q in range(lo, hi + 1):
            rec(k + 1, tuple(a + q * c for a, c in zip(cur, b)))

    rec(0, tuple(base))
    return out


@dataclass(frozen=True)
class ClassWindow:
    center: AffineElement
    radius: int
    elements: frozenset = field(repr=False)  # AffineElement

    def keys(self) -> set:
        return {e.key() for e in self.elements}

    def __len__(self) -> int:
        return len(self.elements)


def class_window(x: AffineElement, R: int = DEFAULT_WINDOW,
                 bound: int = DEFAULT_GROUP_BOUND) -> ClassWindow:
    """[x] cut down to translations of sup-norm at most R.

    [t^lam w] is the union over u of t^{u(lam + Mod(w))} u w u^-1, and
    u Mod(w) = Mod(u w u^-1).
    """
    seen: dict = {}
    for (_, base), (_, wp) in _orbit_pairs(x, bound).items():
        for nu in _box_points_in_coset(base, mod_lattice(wp), R):
            seen.setdefault((nu, wp.matrix), AffineElement(nu, wp))
    return ClassWindow(x, R, frozenset(seen.values()))


def mov_window(x: AffineElement, R: int = DEFAULT_WINDOW,
               bound: int = DEFAULT_GROUP_BOUND) -> ClassWindow:
    """Superset window with Mod(w) replaced by Mov(w) meet R^vee."""
    seen: dict = {}
    for (_, base), (_, wp) in _orbit_pairs(x, bound).items():
        for nu in _box_points_in_coset(base, _lattices(wp)[1], R):
            seen.setdefault((nu, wp.matrix), AffineElement(nu, wp))
    return ClassWindow(x, R, frozenset(seen.values()))


def fills_affine(x: AffineElement) -> bool:
    """Mod(x) = lam + Mod(w) against Mov(x) meet R^vee = lam + (Mov(w) meet R^vee)."""
    return fills_move_set(x.w)


def component_label(lam: Sequence[int], w: WeylElement) -> tuple:
    """Identifies the component of t^lam w: (w, lam mod Mod(w))."""
    return (w.matrix, reduce_mod(mod_lattice(w), lam))


def components(x: AffineElement, bound: int = DEFAULT_GROUP_BOUND) -> set:
    return {component_label(u(x.lam), wp) for u, wp in _spherical_orbit(x.w, bound)}


def component_count(x: AffineElement, bound: int = DEFAULT_GROUP_BOUND) -> int:
    return len(components(x, bound))


def spherical_class_size(w: WeylElement, bound: int = DEFAULT_GROUP_BOUND) -> int:
    """|[w]_W|, the linearized component count."""
    return len({wp.matrix for _, wp in _spherical_orbit(w, bound)})


def window_components(win: ClassWindow) -> set:
    return {component_label(e.lam, e.w) for e in win.elements}


# -- coconjugation -------------------------------------------------------------

@dataclass(frozen=True)
class Coset:
    """t^{eta + L} u with L = Fix(w') meet R^vee."""
    u: WeylElement
    eta: Vector
    fix_basis: LatticeBasis

    def contains(self, y: AffineElement) -> bool:
        if y.w.matrix != self.u.matrix:
            return False
        return self.fix_basis.contains(_sub(y.lam, self.eta))

    def sample(self, radius: int) -> Iterator[AffineElement]:
        vecs = self.fix_basis.vectors
        for coefs in box(len(vecs), radius):
            mu = self.eta
            for c, v in zip(coefs, vecs):
                if c:
                    mu = tuple(a + c * b for a, b in zip(mu, v))
            yield AffineElement(mu, self.u)

    def to_dict(self) -> dict:
        return {
            "u_word": list(word_of(self.u)),
            "eta": list(self.eta),
            "fix_basis": [list(v) for v in self.fix_basis.vectors],
        }


@dataclass(frozen=True)
class CoconjReport:
    x: AffineElement
    x_prime: AffineElement
    cosets: tuple[Coset, ...]

    @property
    def nonempty(self) -> bool:
        return bool(self.cosets)

    def contains(self, y: AffineElement) -> bool:
        return any(c.contains(y) for c in self.cosets)

    def matching_cosets(self, y: AffineElement) -> list[Coset]:
        return [c for c in self.cosets if c.contains(y)]

    def sample(self, minimum: int = 100, max_radius: int = 6) -> list[AffineElement]:
        """At least `minimum` elements when the set is that large (cuspidal w' gives finite sets)."""
        out: dict = {}
        for r in range(max_radius + 1):
            for c in self.cosets:
                for y in c.sample(r):
                    out.setdefault(y.key(), y)
            if len(out) >= minimum or all(c.fix_basis.rank == 0 for c in self.cosets):
                break
        return list(out.values())

    def to_dict(self) -> dict:
        return {"nonempty": self.nonempty, "cosets": [c.to_dict() for c in self.cosets]}


def coconjugation(x: AffineElement, x_prime: AffineElement,
                  bound: int = DEFAULT_GROUP_BOUND) -> CoconjReport:
    """All y with y x y^-1 = x', as cosets t^{eta_u + Fix(w') meet R^vee} u."""
    _check(x, x_prime)
    wp = x_prime.w
    A = wp.id_minus()
    fix = _lattices(wp)[2]
    cosets = []
    for u, c in _spherical_orbit(x.w, bound):
        if c.matrix != wp.matrix:
            continue
        eta = solve_integer(A, _sub(x_prime.lam, u(x.lam)))
        if eta is None:
            continue
        cosets.append(Coset(u, tuple(eta), fix))
    return CoconjReport(x, x_prime, tuple(cosets))


def are_conjugate(x: AffineElement, x_prime: AffineElement,
                  bound: int = DEFAULT_GROUP_BOUND) -> bool:
    return coconjugation(x, x_prime, bound).nonempty


def centralizer(x: AffineElement, bound: int = DEFAULT_GROUP_BOUND) -> CoconjReport:
    return coconjugation(x, x, bound)


# -- brute-force oracles -----------------------------------------------------

def brute_conjugators(x: AffineElement, x_prime: AffineElement, radius: int = DEFAULT_ORACLE_RADIUS,
                      bound: int = DEFAULT_GROUP_BOUND) -> list[AffineElement]:
    """Every y = t^mu u with |mu| <= radius and y x y^-1 = x', by direct conjugation.

    u x u^-1 comes from the group law; conjugation by t^mu cannot change the
    spherical part, so only u with u w u^-1 = w' go on to the box, where
    t^mu (t^a v) t^-mu = t^{a + mu - v mu} v.
    """
    _check(x, x_prime)
    G = enumerate_group(x.datum, bound)
    out = []
    for u in G:
        z = conjugate_affine(spherical(u), x)
        if z.w.matrix != x_prime.w.matrix:
            continue
        for mu, nu in _affine_image_box(z.w.id_minus(), z.lam, radius, with_args=True):
            if nu == x_prime.lam:
                out.append(AffineElement(mu, u))
    return out


def _solver(A: Matrix):
    dec = smith_normal_form(A)
    n = len(A)
    diag = [dec.S[i][i] for i in range(n)]

    def solve(c: Sequence[int]) -> Optional[Vector]:
        d = mat_vec(dec.U, c)
        y = []
        for di, ci in zip(diag, d):
            if di == 0:
                if ci:
                    return None
                y.append(0)
            elif ci % di:
                return None
            else:
                y.append(ci // di)
        return mat_vec(dec.V, y)

    return solve


def _shorten(mu: Vector, F: LatticeBasis) -> Vector:
    """Move mu within mu + F toward the origin (rounded least squares, then local search)."""
    vecs = F.vectors
    if not vecs:
        return mu
    k = len(vecs)
    G = [[Fraction(sum(a * b for a, b in zip(vi, vj))) for vj in vecs] for vi in vecs]
    rhs = [Fraction(sum(a * b for a, b in zip(vi, mu))) for vi in vecs]
    for c in range(k):
        piv = next(r for r in range(c, k) if G[r][c])
        G[c], G[piv] = G[piv], G[c]
        rhs[c], rhs[piv] = rhs[piv], rhs[c]
        for r in range(k):
            if r != c and G[r][c]:
                f = G[r][c] / G[c][c]
                G[r] = [a - f * b for a, b in zip(G[r], G[c])]
                rhs[r] -= f * rhs[c]
    coef = [round(rhs[i] / G[i][i]) for i in range(k)]
    best = None
    for delta in box(k, 1):
        cand = tuple(m - sum((c + e) * v[i] for c, e, v in zip(coef, delta, vecs)) for i, m in enumerate(mu))
        if best is None or _norm(cand) < _norm(best):
            best = cand
    return best


def _orbit_pairs(x: AffineElement, bound: int) -> dict:
    """Distinct (w', u lam) over u in W, with one u for each."""
    pairs: dict = {}
    for u, wp in _spherical_orbit(x.w, bound):
        pairs.setdefault((wp.matrix, u(x.lam)), (u, wp))
    return pairs


def _pair_radius(wp: WeylElement, base: Vector, R: int) -> int:
    solve = _solver(wp.id_minus())
    F = _lattices(wp)[2]
    best = 0
    # only nu in base + Mod(w') have a witness
    for nu in _box_points_in_coset(base, mod_lattice(wp), R):
        mu = solve(_sub(nu, base))
        best = max(best, _norm(_shorten(mu, F)))
    return best


def oracle_radius(x: AffineElement, R: int, bound: int = DEFAULT_GROUP_BOUND) -> int:
    """Conjugator radius that provably reaches every class element in the R-window.

    t^mu u conjugates x to t^{u lam + (Id - w')mu} w'. For every nu in the
    window an integer witness mu is solved for and shortened modulo
    Fix(w') meet R^vee; the largest witness norm is returned.
    """
    return max(_pair_radius(wp, base, R) for (_, base), (_, wp) in _orbit_pairs(x, bound).items())


def brute_class_window(x: AffineElement, R: int = DEFAULT_WINDOW, radius: Optional[int] = None,
                       bound: int = DEFAULT_GROUP_BOUND) -> set:
    """Keys of {y x y^-1} inside the R-window, y = t^mu u over a box of conjugators.

    u x u^-1 is formed with the group law; conjugating that by t^mu uses the
    expansion t^mu (t^a v) t^-mu = t^{a + mu - v mu} v. Without an explicit
    radius each (w', u lam) gets its own certified radius.
    """
    out = set()
    for (_, base), (u, wp) in _orbit_pairs(x, bound).items():
        z = conjugate_affine(spherical(u), x)
        assert z.key() == (base, wp.matrix)
        r = _pair_radius(wp, base, R) if radius is None else radius
        for nu in _affine_image_box(z.w.id_minus(), z.lam, r):
            if _norm(nu) <= R:
                out.add((nu, wp.matrix))
    return out


def _affine_image_box(A: Matrix, b: Vector, r: int, with_args: bool = False) -> Iterator:
    """b + A mu for every mu in the sup-norm box of radius r, built column by column.

    With with_args the pairs (mu, b + A mu) are produced instead.
    """
    n = len(b)
    cols = [tuple(A[i][j] for i in range(n)) for j in range(len(A[0]))]

    def rec(j: int, mu: tuple, cur: tuple) -> Iterator:
        if j == len(cols):
            yield (mu, cur) if with_args else cur
            return
        c = cols[j]
        for m in range(-r, r + 1):
            yield from rec(j + 1, mu + (m,), tuple(a + m * x for a, x in zip(cur, c)))

    return rec(0, (), tuple(b))


def affine_matrix_conjugate(y: AffineElement, x: AffineElement) -> Matrix:
    """y x y^-1 in the (n+1)-dimensional matrix embedding, as an independent oracle."""
    Y = y.affine_matrix()
    Yi = affine_inverse(y).affine_matrix()
    assert mat_mul(Y, Yi) == identity(len(Y))
    return mat_mul(mat_mul(Y, x.affine_matrix()), Yi)


def parse_affine(datum: RootDatum, text: str) -> AffineElement:
    """'lambda=1,0;word=012' (either part optional), or JSON {lambda, word}."""
    import json

    s = text.strip()
    if s.startswith("{"):
        d = json.loads(s)
        lam = [int(v) for v in d.get("lambda", [0] * datum.rank)]
        return affine_element(datum, lam, [int(i) for i in d.get("word", [])])
    lam: list = [0] * datum.rank
    word = ""
    for part in filter(None, (p.strip() for p in s.split(";"))):
        key, _, val = part.partition("=")
        key = key.strip().lower()
        if key in ("lambda", "lam", "t"):
            lam = [int(v) for v in val.split(",") if v.strip()] if val.strip() else [0] * datum.rank
        elif key in ("word", "w"):
            word = val
        else:
            raise ValueError(f"unknown field {key!r} in {text!r}")
    if len(lam) != datum.rank:
        raise ValueError(f"lambda has {len(lam)} entries, expected {datum.rank}")
    return affine_element(datum, lam, word)
