"""Gröbner-free checks on R[K]: graded dimensions of R[K]/J and the Koszul
homology of the linear forms acting on R[K].

R[K] has a monomial basis: the monomials whose support is a face of K.  All
computations here are exact ranks of sparse matrices on that basis.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from ..exactfield import sparse_rank
from ..simplicial import SimplicialComplex, mask_of
from .quotient import LinearSystemOfParameters


class FaceMonomials:
    """Degree-graded monomial basis of R[K], built lazily and cached."""

    def __init__(self, K: SimplicialComplex) -> None:
        self.K = K
        self._by_degree: dict[int, list[tuple]] = {0: [(0,) * K.m]}
        self._index: dict[int, dict[tuple, int]] = {}

    def _support_ok(self, e: tuple) -> bool:
        return mask_of(i for i, x in enumerate(e) if x) in self.K.face_masks

    def degree(self, k: int) -> list[tuple]:
        if k < 0:
            return []
        while max(self._by_degree) < k:
            d = max(self._by_degree)
            nxt = set()
            for e in self._by_degree[d]:
                for i in self.K.vertices:
                    c = e[:i] + (e[i] + 1,) + e[i + 1:]
                    if c not in nxt and self._support_ok(c):
                        nxt.add(c)
            self._by_degree[d + 1] = sorted(nxt)
        return self._by_degree[k]

    def index(self, k: int) -> dict[tuple, int]:
        if k not in self._index:
            self._index[k] = {e: i for i, e in enumerate(self.degree(k))}
        return self._index[k]

    def times_form(self, e: tuple, coeffs) -> dict[tuple, object]:
        """e * theta in R[K]: terms leaving the face monomials vanish."""
        out = {}
        for i, c in enumerate(coeffs):
            if not c:
                continue
            t = e[:i] + (e[i] + 1,) + e[i + 1:]
            if self._support_ok(t):
                out[t] = c
        return out


@lru_cache(maxsize=64)
def face_monomials(K: SimplicialComplex) -> FaceMonomials:
    return FaceMonomials(K)


def _form_rows(L: LinearSystemOfParameters) -> list[tuple]:
    return [L.A.row(j) for j in range(L.n)]


def graded_dimension_oracle(K: SimplicialComplex, L: LinearSystemOfParameters, k: int) -> int:
    """dim of (R[K]/J)_k: face monomials of degree k minus the rank of
    (R[K]_{k-1} ⊗ span θ) -> R[K]_k."""
    fm = face_monomials(K)
    target = fm.degree(k)
    if k == 0:
        return len(target)
    idx = fm.index(k)
    forms = _form_rows(L)
    rows = []
    for e in fm.degree(k - 1):
        for th in forms:
            img = fm.times_form(e, th)
            if img:
                rows.append({idx[t]: c for t, c in img.items()})
    return len(target) - sparse_rank(rows)


def _koszul_basis(fm: FaceMonomials, n: int, i: int, k: int) -> list[tuple]:
    if i < 0 or i > n or k - i < 0:
        return []
    return [(S, e) for S in combinations(range(n), i) for e in fm.degree(k - i)]


def _koszul_rank(fm: FaceMonomials, forms, n: int, i: int, k: int) -> int:
    """Rank of d_i : K_{i,k} -> K_{i-1,k}."""
    if i <= 0 or i > n:
        return 0
    src = _koszul_basis(fm, n, i, k)
    tgt = {b: j for j, b in enumerate(_koszul_basis(fm, n, i - 1, k))}
    rows = []
    for S, e in src:
        row: dict[int, object] = {}
        for t, s in enumerate(S):
            rest = S[:t] + S[t + 1:]
            sgn = -1 if t % 2 else 1
            for mono, c in fm.times_form(e, forms[s]).items():
                j = tgt[(rest, mono)]
                v = row.get(j, 0) + sgn * c
                if v:
                    row[j] = v
                else:
                    row.pop(j, None)
        rows.append(row)
    return sparse_rank(rows)


def koszul_homology(K: SimplicialComplex, L: LinearSystemOfParameters, i: int, k: int) -> int:
    """dim H_i of the Koszul complex Λ(span θ) ⊗ R[K] in internal degree k.

    θ_j has internal degree 1, so position (i, k) is Λ^i ⊗ R[K]_{k-i}.
    """
    n = L.n
    if not 0 <= i <= n:
        raise ValueError(f"homological degree {i} outside 0..{n}")
    fm = face_monomials(K)
    forms = _form_rows(L)
    size = len(_koszul_basis(fm, n, i, k))
    return size - _koszul_rank(fm, forms, n, i, k) - _koszul_rank(fm, forms, n, i + 1, k)


@dataclass
class KoszulReport:
    n: int
    max_degree: int
    table: dict[tuple[int, int], int] = field(default_factory=dict)

    def failures(self) -> list[tuple[int, int, int]]:
        """Nonzero entries with i >= 1 (these would contradict freeness)."""
        return [(i, k, v) for (i, k), v in sorted(self.table.items()) if i >= 1 and v]

    def row(self, i: int) -> list[int]:
        return [self.table[(i, k)] for k in range(self.max_degree + 1)]


def koszul_report(K: SimplicialComplex, L: LinearSystemOfParameters, max_degree: int | None = None) -> KoszulReport:
    n = L.n
    top = n if max_degree is None else max_degree
    fm = face_monomials(K)
    forms = _form_rows(L)
    ranks = {(i, k): _koszul_rank(fm, forms, n, i, k)
             for i in range(n + 2) for k in range(top + 1)}
    rep = KoszulReport(n, top)
    for i in range(n + 1):
        for k in range(top + 1):
            size = len(_koszul_basis(fm, n, i, k))
            rep.table[(i, k)] = size - ranks[(i, k)] - ranks[(i + 1, k)]
    return rep
