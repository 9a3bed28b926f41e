"""Exact integer linear algebra on Python ints.

Matrices are tuples of row tuples. Everything here is pure and works with
arbitrarily large entries, which matters for the E8 words where intermediate
SNF entries leave the 64-bit range.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

Matrix = tuple  # tuple[tuple[int, ...], ...]
Vector = tuple  # tuple[int, ...]

INFINITE_INDEX = math.inf


class DimensionError(ValueError):
    pass


class ContainmentError(ValueError):
    pass


# -- small matrix helpers ---------------------------------------------------

def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in r) for r in rows)


def shape(M: Matrix, ncols: Optional[int] = None) -> tuple[int, int]:
    # a matrix with zero rows carries no column count, so callers may pass one
    if len(M) == 0:
        return 0, (ncols or 0)
    return len(M), len(M[0])


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zeros(n: int, m: int) -> Matrix:
    return tuple((0,) * m for _ in range(n))


def transpose(M: Matrix, ncols: Optional[int] = None) -> Matrix:
    n, m = shape(M, ncols)
    return tuple(tuple(M[i][j] for i in range(n)) for j in range(m))


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    if A and len(A[0]) != len(B):
        raise DimensionError(f"cannot multiply {shape(A)} by {shape(B)}")
    Bt = list(zip(*B)) if B else []
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def mat_vec(A: Matrix, v: Sequence[int]) -> Vector:
    if A and len(A[0]) != len(v):
        raise DimensionError(f"cannot apply {shape(A)} to vector of length {len(v)}")
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def mat_sub(A: Matrix, B: Matrix) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_neg(A: Matrix) -> Matrix:
    return tuple(tuple(-a for a in r) for r in A)


def columns(M: Matrix, ncols: Optional[int] = None) -> list[Vector]:
    return list(transpose(M, ncols))


def from_columns(cols: Sequence[Sequence[int]], n: int) -> Matrix:
    """Matrix with the given columns; n fixes the row count when cols is empty."""
    if not cols:
        return tuple(() for _ in range(n))
    return transpose(as_matrix(cols))


def determinant(M: Matrix) -> int:
    """Bareiss fraction-free elimination."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(r) for r in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


# -- Smith normal form ------------------------------------------------------

@dataclass(frozen=True)
class SnfDecomposition:
    """U @ M @ V == S with U, V unimodular and S diagonal in divisibility order."""
    U: Matrix
    S: Matrix
    V: Matrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        k = min(len(self.U), len(self.V))
        return tuple(self.S[i][i] for i in range(k))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _swap_rows(A, i, j):
    A[i], A[j] = A[j], A[i]


def _swap_cols(A, i, j):
    for row in A:
        row[i], row[j] = row[j], row[i]


def _add_row(A, src, dst, q):
    # row_dst += q * row_src
    if q:
        rs, rd = A[src], A[dst]
        for k in range(len(rd)):
            rd[k] += q * rs[k]


def _add_col(A, src, dst, q):
    if q:
        for row in A:
            row[dst] += q * row[src]


def smith_normal_form(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> SnfDecomposition:
    """Smith normal form with transforms.

    Pivot is always the nonzero entry of least absolute value in the active
    block (ties broken by row, then column), so the output is deterministic.
    """
    n, m = shape(M, ncols)
    A = [list(r) for r in M]
    U = [list(r) for r in identity(n)]
    Vt = [list(r) for r in identity(m)]  # column ops on A are row ops on Vt

    for t in range(min(n, m)):
        while True:
            best = None
            for i in range(t, n):
                row = A[i]
                for j in range(t, m):
                    a = row[j]
                    if a and (best is None or abs(a) < best[0]):
                        best = (abs(a), i, j)
            if best is None:
                S = as_matrix(A)
                return SnfDecomposition(as_matrix(U), S, transpose(as_matrix(Vt), m))
            _, i, j = best
            if i != t:
                _swap_rows(A, i, t)
                _swap_rows(U, i, t)
            if j != t:
                _swap_cols(A, j, t)
                _swap_rows(Vt, j, t)
            p = A[t][t]
            dirty = False
            for i in range(t + 1, n):
                if A[i][t]:
                    q = A[i][t] // p
                    _add_row(A, t, i, -q)
                    _add_row(U, t, i, -q)
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, m):
                if A[t][j]:
                    q = A[t][j] // p
                    _add_col(A, t, j, -q)
                    _add_row(Vt, t, j, -q)
                    if A[t][j]:
                        dirty = True
            if dirty:
                continue
            # row and column cleared; enforce divisibility on the rest
            bad = None
            for i in range(t + 1, n):
                for j in range(t + 1, m):
                    if A[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is not None:
                _add_row(A, bad, t, 1)
                _add_row(U, bad, t, 1)
                continue
            if p < 0:
                A[t] = [-x for x in A[t]]
                U[t] = [-x for x in U[t]]
            break
    return SnfDecomposition(as_matrix(U), as_matrix(A), transpose(as_matrix(Vt), m))


def snf_diagonal(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> tuple[int, ...]:
    return smith_normal_form(M, ncols).diagonal


def rank(M: Matrix, ncols: Optional[int] = None) -> int:
    return smith_normal_form(M, ncols).rank


# -- Hermite normal form and lattices ---------------------------------------

def row_hnf(rows: Sequence[Sequence[int]], width: int) -> list[list[int]]:
    """Row-style HNF of the row lattice, zero rows dropped.

    Pivots are positive and the entries above each pivot lie in [0, pivot).
    """
    A = [list(r) for r in rows if any(r)]
    out: list[list[int]] = []
    col = 0
    while A and col < width:
        nz = [r for r in A if r[col]]
        if not nz:
            col += 1
            continue
        rest = [r for r in A if not r[col]]
        # euclid down to a single row carrying the column gcd
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            nxt = [piv]
            for r in nz[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                if r[col]:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            nz = nxt
        piv = nz[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        for r in out:
            q = r[col] // piv[col]
            if q:
                for k in range(width):
                    r[k] -= q * piv[k]
        out.append(piv)
        A = rest
        col += 1
    return out


@dataclass(frozen=True)
class LatticeBasis:
    """Sublattice of Z^n given by the columns of an n x k matrix."""
    ambient_rank: int
    basis: Matrix  # n rows, k columns; k == 0 is the zero lattice
    canonical: bool = False

    @property
    def rank(self) -> int:
        return len(self.basis[0]) if self.basis and self.basis[0] else 0

    @property
    def vectors(self) -> list[Vector]:
        return columns(self.basis, self.rank) if self.rank else []

    def contains(self, v: Sequence[int]) -> bool:
        return solve_integer(self.basis, v, ncols=self.rank) is not None

    def __repr__(self) -> str:
        return f"LatticeBasis(n={self.ambient_rank}, vectors={self.vectors})"


def lattice_from_vectors(vectors: Sequence[Sequence[int]], n: int) -> LatticeBasis:
    """Canonical basis of the lattice spanned by the given (possibly dependent) vectors."""
    H = row_hnf(vectors, n)
    return LatticeBasis(n, from_columns(H, n), canonical=True)


def canonical(L: LatticeBasis) -> LatticeBasis:
    if L.canonical:
        return L
    return lattice_from_vectors(L.vectors, L.ambient_rank)


def column_lattice(M: Matrix, ncols: Optional[int] = None) -> LatticeBasis:
    n, m = shape(M, ncols)
    return lattice_from_vectors(columns(M, m) if m else [], n)


def kernel_lattice(M: Matrix, ncols: Optional[int] = None) -> LatticeBasis:
    """Integer kernel {x in Z^m : Mx = 0}."""
    n, m = shape(M, ncols)
    dec = smith_normal_form(M, m)
    r = dec.rank
    Vcols = columns(dec.V, m) if m else []
    return lattice_from_vectors(Vcols[r:], m)


def saturation(L: LatticeBasis) -> LatticeBasis:
    """(Q-span of L) intersected with Z^n."""
    n = L.ambient_rank
    if L.rank == 0:
        return LatticeBasis(n, from_columns([], n), canonical=True)
    dec = smith_normal_form(L.basis, L.rank)
    Uinv = unimodular_inverse(dec.U)
    return lattice_from_vectors(columns(Uinv)[: dec.rank], n)


def reduce_mod(L: LatticeBasis, v: Sequence[int]) -> Vector:
    """Canonical representative of the coset v + L.

    Uses the echelon shape of the canonical basis: each vector is used once to
    bring its pivot coordinate into [0, pivot).
    """
    if len(v) != L.ambient_rank:
        raise DimensionError(f"vector has length {len(v)}, expected {L.ambient_rank}")
    out = list(v)
    for b in canonical(L).vectors:
        p = next(i for i, x in enumerate(b) if x)
        q = out[p] // b[p]
        if q:
            out = [a - q * c for a, c in zip(out, b)]
    return tuple(out)


def lattice_equal(L1: LatticeBasis, L2: LatticeBasis) -> bool:
    if L1.ambient_rank != L2.ambient_rank:
        raise DimensionError("lattices live in different ambient ranks")
    return canonical(L1).basis == canonical(L2).basis


def lattice_contains(L_sup: LatticeBasis, L_sub: LatticeBasis) -> bool:
    return all(L_sup.contains(v) for v in L_sub.vectors)


def sublattice_index(L_sub: LatticeBasis, L_sup: LatticeBasis):
    """[L_sup : L_sub] as an int, or INFINITE_INDEX when the ranks differ."""
    if L_sub.ambient_rank != L_sup.ambient_rank:
        raise DimensionError("lattices live in different ambient ranks")
    coords = []
    for v in L_sub.vectors:
        x = solve_integer(L_sup.basis, v, ncols=L_sup.rank)
        if x is None:
            raise ContainmentError(f"{v} is not in the super-lattice")
        coords.append(x)
    if L_sub.rank != L_sup.rank:
        return INFINITE_INDEX
    if L_sub.rank == 0:
        return 1
    return math.prod(snf_diagonal(from_columns(coords, L_sup.rank)))


def unimodular_inverse(U: Matrix) -> Matrix:
    """Inverse of a unimodular matrix, computed exactly by Gauss-Jordan over Z."""
    n = len(U)
    A = [list(U[i]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    for c in range(n):
        # euclid on column c among rows c..n-1
        while True:
            nz = [i for i in range(c, n) if A[i][c]]
            if not nz:
                raise ValueError("matrix is singular")
            i0 = min(nz, key=lambda i: (abs(A[i][c]), i))
            A[c], A[i0] = A[i0], A[c]
            done = True
            for i in range(c + 1, n):
                if A[i][c]:
                    q = A[i][c] // A[c][c]
                    _add_row(A, c, i, -q)
                    if A[i][c]:
                        done = False
            if done:
                break
        if abs(A[c][c]) != 1:
            raise ValueError("matrix is not unimodular")
        if A[c][c] < 0:
            A[c] = [-x for x in A[c]]
    for c in range(n - 1, -1, -1):
        for i in range(c):
            if A[i][c]:
                _add_row(A, c, i, -A[i][c])
    return tuple(tuple(r[n:]) for r in A)


def solve_integer(M: Matrix, c: Sequence[int], ncols: Optional[int] = None) -> Optional[Vector]:
    """Some integer x with Mx = c, or None if there is none."""
    n, m = shape(M, ncols)
    if len(c) != n:
        raise DimensionError(f"right-hand side has length {len(c)}, expected {n}")
    dec = smith_normal_form(M, m)
    d = mat_vec(dec.U, c) if n else ()
    y = [0] * m
    for i in range(n):
        di = dec.S[i][i] if i < m else 0
        if di == 0:
            if d[i] != 0:
                return None
        else:
            if d[i] % di:
                return None
            y[i] = d[i] // di
    return mat_vec(dec.V, y) if m else ()


def rational_rank(M: Matrix, ncols: Optional[int] = None) -> int:
    return rank(M, ncols)
