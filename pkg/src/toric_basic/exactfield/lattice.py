"""Z-module algorithms on finitely generated subgroups of Q^n and Q(sqrt d)^n.

Everything reduces to integer matrices: quadratic coordinates are split into
their rational and sqrt(d) parts, then a common denominator is cleared.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .linalg import common_field
from .scalar import rational_parts


def hermite_normal_form(A: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]]]:
    """Row Hermite normal form: returns ``(H, U)`` with ``H = U A``.

    ``H`` is in row echelon form with positive pivots, entries above each
    pivot reduced into ``[0, pivot)``, zero rows last; ``U`` is unimodular.
    """
    H = [[int(x) for x in row] for row in A]
    m = len(H)
    n = len(H[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]

    def sub(rows, i, k, q):
        rows[i] = [x - q * y for x, y in zip(rows[i], rows[k])]

    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if H[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][c]))
            H[r], H[p] = H[p], H[r]
            U[r], U[p] = U[p], U[r]
            clean = True
            for i in range(r + 1, m):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    sub(H, i, r, q)
                    sub(U, i, r, q)
                    clean = clean and not H[i][c]
            if clean:
                break
        if not H[r][c]:
            continue
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = H[i][c] // H[r][c]
            if q:
                sub(H, i, r, q)
                sub(U, i, r, q)
        r += 1
    return H, U


def _split(vectors: Sequence[Sequence], d: int | None) -> list[list[Fraction]]:
    if d is None:
        return [[rational_parts(x)[0] for x in v] for v in vectors]
    return [[p for x in v for p in rational_parts(x)] for v in vectors]


def integer_rows(vectors: Sequence[Sequence]) -> tuple[list[list[int]], int]:
    """Split and scale ``vectors`` to integer rows; returns ``(rows, scale)``."""
    d = common_field(x for v in vectors for x in v)
    rows = _split(vectors, d)
    scale = 1
    for r in rows:
        for x in r:
            scale = lcm(scale, x.denominator)
    return [[int(x * scale) for x in r] for r in rows], scale


def _basis(H: list[list[int]]) -> list[list[int]]:
    return [r for r in H if any(r)]


def _reduce(basis: list[list[int]], v: list[int]) -> list[int] | None:
    """Integer coordinates of ``v`` in an HNF basis, or None if not a member."""
    v = list(v)
    coords = []
    for row in basis:
        c = next(j for j, x in enumerate(row) if x)
        if v[c] % row[c]:
            return None
        q = v[c] // row[c]
        coords.append(q)
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    if any(v):
        return None
    return coords


def zmodule_membership(generators: Sequence[Sequence], v: Sequence) -> bool:
    """True iff ``v`` is an integer combination of ``generators``."""
    if not generators:
        return not any(v)
    rows, _ = integer_rows(list(generators) + [v])
    H, _ = hermite_normal_form(rows[:-1])
    return _reduce(_basis(H), rows[-1]) is not None


def zmodule_equal(gens1: Sequence[Sequence], gens2: Sequence[Sequence]) -> bool:
    """True iff the two generator lists span the same subgroup."""
    allv = list(gens1) + list(gens2)
    if not allv:
        return True
    rows, _ = integer_rows(allv)
    r1, r2 = rows[:len(gens1)], rows[len(gens1):]
    b1 = _basis(hermite_normal_form(r1)[0]) if r1 else []
    b2 = _basis(hermite_normal_form(r2)[0]) if r2 else []
    # HNF of a lattice is unique, so equal lattices give equal bases
    return b1 == b2


def smith_invariants(A: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero elementary divisors of an integer matrix, in divisibility order."""
    M = [[int(x) for x in r] for r in A]
    m = len(M)
    n = len(M[0]) if m else 0
    out = []
    t = 0
    while t < min(m, n):
        nz = [(abs(M[i][j]), i, j) for i in range(t, m) for j in range(t, n) if M[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        M[t], M[i] = M[i], M[t]
        for r in M:
            r[t], r[j] = r[j], r[t]
        while True:
            p = M[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = M[i][t] // p
                if q:
                    M[i] = [x - q * y for x, y in zip(M[i], M[t])]
                if M[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = M[t][j] // p
                if q:
                    for r in M:
                        r[j] -= q * r[t]
                if M[t][j]:
                    dirty = True
            if not dirty:
                bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                            if M[i][j] % p), None)
                if bad is None:
                    break
                # fold the offending row in so the pivot shrinks to a gcd
                M[t] = [x + y for x, y in zip(M[t], M[bad[0]])]
                continue
            nz = [(abs(M[i][j]), i, j) for i in range(t, m) for j in range(t, n)
                  if M[i][j] and (i == t or j == t)]
            _, i, j = min(nz)
            M[t], M[i] = M[i], M[t]
            for r in M:
                r[t], r[j] = r[j], r[t]
        out.append(abs(M[t][t]))
        t += 1
    return out


def relative_elementary_divisors(sub: Sequence[Sequence], gens: Sequence[Sequence]) -> tuple[int, ...]:
    """Elementary divisors of span_Z(sub) inside span_Z(gens).

    Zeros pad the result up to the rank of span_Z(gens); raises ValueError if
    some ``sub`` vector is not in span_Z(gens).
    """
    if not gens:
        return ()
    rows, _ = integer_rows(list(gens) + list(sub))
    basis = _basis(hermite_normal_form(rows[:len(gens)])[0])
    coords = []
    for r in rows[len(gens):]:
        c = _reduce(basis, r)
        if c is None:
            raise ValueError("sub-lattice vector outside the ambient lattice")
        coords.append(c)
    divs = smith_invariants(coords) if coords else []
    return tuple(divs) + (0,) * (len(basis) - len(divs))


def lattice_rank(gens: Sequence[Sequence]) -> int:
    if not gens:
        return 0
    rows, _ = integer_rows(gens)
    return len(_basis(hermite_normal_form(rows)[0]))


def is_primitive(gens: Sequence[Sequence], v: Sequence) -> bool:
    """True iff ``v`` lies in span_Z(gens) and is not a proper multiple there."""
    rows, _ = integer_rows(list(gens) + [v])
    basis = _basis(hermite_normal_form(rows[:-1])[0])
    c = _reduce(basis, rows[-1])
    if c is None:
        return False
    g = 0
    for x in c:
        g = gcd(g, x)
    return g == 1
