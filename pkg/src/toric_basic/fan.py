"""Marked fans: validation, ray location and rationality."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Sequence

from .exactfield import (ExactMatrix, common_field, conjugate, determinant,
                         inverse, is_primitive, kernel_basis, lift, normalize,
                         rank, rref, sign, solve, zmodule_membership)
from .exactfield.linalg import dot
from .simplicial import SimplicialComplex

DEFAULT_SAMPLES = 200
SAMPLE_RANGE = 10_000


@dataclass(frozen=True)
class MarkedFan:
    """Dimension ``n``, complex ``K`` on ``m`` vertices, one marking per vertex
    (ghost slots included) and generators of the lattice group."""

    n: int
    K: SimplicialComplex
    markings: tuple[tuple, ...]
    lattice_generators: tuple[tuple, ...]
    field: int | None = None

    def __post_init__(self) -> None:
        if len(self.markings) != self.K.m:
            raise ValueError(f"{len(self.markings)} markings for {self.K.m} vertices")
        for v in list(self.markings) + list(self.lattice_generators):
            if len(v) != self.n:
                raise ValueError(f"vector of length {len(v)} in dimension {self.n}")
        vals = [x for v in list(self.markings) + list(self.lattice_generators) for x in v]
        d = common_field(vals)
        if self.field is not None:
            if d is not None and d != self.field:
                raise ValueError(f"value in Q(sqrt {d}) for a Q(sqrt {self.field}) fan")
            d = self.field
        lifted = lambda vs: tuple(tuple(normalize(lift(x, d)) for x in v) for v in vs)
        object.__setattr__(self, "field", d)
        object.__setattr__(self, "markings", lifted(self.markings))
        object.__setattr__(self, "lattice_generators", lifted(self.lattice_generators))

    @property
    def m(self) -> int:
        return self.K.m

    def marking_matrix(self, ghost_columns: str = "zero") -> ExactMatrix:
        """The n x m matrix with column i = a_i.

        ``ghost_columns="zero"`` zeroes ghost slots (the linear forms only see
        non-ghost rays); ``"keep"`` uses the stored ghost markings.
        """
        cols = [self.markings[i] if (ghost_columns == "keep" or i not in self.K.ghosts)
                else (0,) * self.n for i in range(self.m)]
        return ExactMatrix.from_columns(cols, self.n, field=self.field)

    def facet_matrix(self, facet: Sequence[int]) -> ExactMatrix:
        return ExactMatrix.from_columns([self.markings[i] for i in facet], self.n,
                                        field=self.field)


@dataclass
class CheckResult:
    passed: bool | None  # None = skipped
    witness: Any = None
    note: str | None = None

    def to_dict(self) -> dict:
        status = "skipped" if self.passed is None else ("pass" if self.passed else "fail")
        out: dict = {"status": status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class ValidationReport:
    checks: dict[str, CheckResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks.values())

    def failed(self) -> list[str]:
        return [k for k, c in self.checks.items() if c.passed is False]

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": {k: c.to_dict() for k, c in self.checks.items()}}


def _one_based(face) -> list[int]:
    return [v + 1 for v in face]


def _positively_proportional(u, v) -> bool:
    M = ExactMatrix([list(u), list(v)])
    if rank(M) != 1:
        return False
    return sign(dot(u, v)) > 0


def validate_marked_fan(F: MarkedFan, mode: str = "fast", seed: int = 0,
                        samples: int = DEFAULT_SAMPLES) -> ValidationReport:
    """Run every completeness and marking check; see the README for the list.

    ``mode="exact"`` adds the pairwise cone-intersection test.
    """
    if mode not in ("fast", "exact"):
        raise ValueError(f"unknown mode {mode!r}")
    K, n = F.K, F.n
    rep = ValidationReport()
    chk = rep.checks
    verts = K.vertices

    A = ExactMatrix.from_columns([F.markings[i] for i in verts], n, field=F.field) \
        if verts else None
    r = rank(A) if A is not None else 0
    chk["marking_rank"] = CheckResult(r == n, None if r == n else {"rank": r, "n": n})

    lr = lattice_rank_over_reals(F.lattice_generators, n, F.field)
    chk["lattice_span"] = CheckResult(lr == n, None if lr == n else {"rank": lr, "n": n})

    outside = [i + 1 for i in range(F.m)
               if not zmodule_membership(F.lattice_generators, F.markings[i])]
    chk["lattice_membership"] = CheckResult(not outside, {"vertices": outside} if outside else None)

    bad_rays = []
    for i in verts:
        if not any(F.markings[i]):
            bad_rays.append([i + 1])
    for i, j in combinations(verts, 2):
        if any(F.markings[i]) and any(F.markings[j]) and \
                _positively_proportional(F.markings[i], F.markings[j]):
            bad_rays.append([i + 1, j + 1])
    chk["distinct_rays"] = CheckResult(not bad_rays, {"pairs": bad_rays} if bad_rays else None)

    if not outside:
        nonprim = [i + 1 for i in verts if any(F.markings[i])
                   and not is_primitive(F.lattice_generators, F.markings[i])]
        if nonprim:
            # reported, not rejected: a marking need only generate its ray
            chk["lattice_membership"].note = f"non-primitive markings at vertices {nonprim}"

    dependent = [f for f in K.facets if rank(F.facet_matrix(f)) != len(f)]
    chk["facet_independence"] = CheckResult(
        not dependent, {"facet": _one_based(dependent[0])} if dependent else None)

    wrong = [f for f in K.facets if len(f) != n]
    chk["pure_dimension"] = CheckResult(
        not wrong, {"facet": _one_based(wrong[0]), "size": len(wrong[0]), "n": n} if wrong else None)

    ridges = K.ridges()
    odd = [(rd, fs) for rd, fs in ridges.items() if len(fs) != 2]
    chk["pseudomanifold"] = CheckResult(
        not odd, {"wall": _one_based(odd[0][0]), "facets": len(odd[0][1])} if odd else None)

    geometric = not dependent and not wrong
    if geometric:
        chk["wall_separation"] = _wall_separation(F, ridges)
    else:
        chk["wall_separation"] = CheckResult(None, note="facets not simplicial of dimension n")

    chk["connectivity"] = _connectivity(K, ridges)

    if geometric:
        chk["cover_oracle"] = _cover_oracle(F, seed, samples)
    else:
        chk["cover_oracle"] = CheckResult(None, note="facets not simplicial of dimension n")

    if mode == "exact":
        if geometric:
            chk["cone_intersection"] = _pairwise_intersections(F)
        else:
            chk["cone_intersection"] = CheckResult(None, note="facets not simplicial of dimension n")
    return rep


def lattice_rank_over_reals(gens, n: int, d: int | None) -> int:
    if not gens or n == 0:
        return 0
    return rank(ExactMatrix([list(g) for g in gens], cols=n, field=d))


def _wall_separation(F: MarkedFan, ridges) -> CheckResult:
    facets = F.K.facets
    for wall, fs in ridges.items():
        if len(fs) != 2:
            continue
        signs = []
        for idx in fs:
            (opp,) = [v for v in facets[idx] if v not in wall]
            cols = [F.markings[v] for v in wall] + [F.markings[opp]]
            signs.append(sign(determinant(ExactMatrix.from_columns(cols, F.n, field=F.field))))
        if signs[0] * signs[1] >= 0:
            return CheckResult(False, {"wall": _one_based(wall),
                                       "facets": [_one_based(facets[i]) for i in fs]})
    return CheckResult(True)


def _connectivity(K: SimplicialComplex, ridges) -> CheckResult:
    nf = len(K.facets)
    adj: list[set[int]] = [set() for _ in range(nf)]
    for fs in ridges.values():
        for a, b in combinations(fs, 2):
            adj[a].add(b)
            adj[b].add(a)
    seen = {0}
    stack = [0]
    while stack:
        for b in adj[stack.pop()]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    if len(seen) == nf:
        return CheckResult(True)
    lost = min(set(range(nf)) - seen)
    return CheckResult(False, {"unreached_facet": _one_based(K.facets[lost])})


@dataclass
class _FacetSolver:
    facets: tuple
    inverses: list

    @classmethod
    def of(cls, F: MarkedFan) -> _FacetSolver:
        return cls(F.K.facets, [inverse(F.facet_matrix(f)) for f in F.K.facets])

    def coefficients(self, direction) -> list[tuple]:
        return [M @ direction for M in self.inverses]


def ray_locate(F: MarkedFan, direction: Sequence) -> list[tuple[tuple[int, ...], bool]]:
    """Facets whose cone contains ``direction``, each with an interior flag.

    Facets are 0-based vertex tuples; the flag is True when every
    coefficient is strictly positive.
    """
    if not any(direction):
        raise ValueError("direction must be nonzero")
    out = []
    for f in F.K.facets:
        M = F.facet_matrix(f)
        if rank(M) != len(f):
            continue
        c = solve(M, list(direction))
        if c is None or any(sign(x) < 0 for x in c):
            continue
        out.append((f, all(sign(x) > 0 for x in c)))
    return out


def _cover_oracle(F: MarkedFan, seed: int, samples: int) -> CheckResult:
    if F.n == 0:
        return CheckResult(True, note="R^0 is covered by the zero cone")
    rng = random.Random(seed)
    solver = _FacetSolver.of(F)
    accepted = attempts = 0
    while accepted < samples:
        attempts += 1
        if attempts > 20 * samples:
            return CheckResult(False, note="too many non-generic sample directions")
        v = tuple(rng.randint(-SAMPLE_RANGE, SAMPLE_RANGE) for _ in range(F.n))
        if not any(v):
            continue
        containing = []
        generic = True
        for f, c in zip(solver.facets, solver.coefficients(v)):
            s = [sign(x) for x in c]
            if min(s) < 0:
                continue
            if min(s) == 0:
                generic = False
                break
            containing.append(f)
        if not generic:
            continue
        accepted += 1
        if len(containing) != 1:
            return CheckResult(False, {"direction": [int(x) for x in v],
                                       "cones": [_one_based(f) for f in containing]})
    return CheckResult(True, note=f"{samples} directions, seed {seed}")


# Fourier-Motzkin feasibility over an ordered field

def _fm_feasible(equalities: list[tuple[list, Any]], nonneg: int) -> bool:
    """Is there x >= 0 (``nonneg`` coordinates) with ``row . x = rhs`` for
    every ``(row, rhs)`` in ``equalities``?"""
    aug = ExactMatrix([list(row) + [rhs] for row, rhs in equalities], cols=nonneg + 1)
    R, pivots = rref(aug)
    if nonneg in pivots:
        return False
    free = [j for j in range(nonneg) if j not in pivots]
    pos = {j: k for k, j in enumerate(free)}
    # each inequality: (coeffs over free vars, constant) meaning coeffs.y + const >= 0
    ineqs = []
    for j in range(nonneg):
        if j in pos:
            coeffs = [0] * len(free)
            coeffs[pos[j]] = 1
            ineqs.append((coeffs, 0))
        else:
            row = R[pivots.index(j)]
            ineqs.append(([-row[f] for f in free], row[nonneg]))
    for k in range(len(free)):
        ineqs = _fm_eliminate(ineqs, k)
    return all(sign(c) >= 0 for _, c in ineqs)


def _fm_eliminate(ineqs, k):
    up, low, keep = [], [], []
    for coeffs, c in ineqs:
        s = sign(coeffs[k])
        (up if s > 0 else low if s < 0 else keep).append((coeffs, c))
    out = {}
    for coeffs, c in keep:
        out[_fm_key(coeffs, c)] = (coeffs, c)
    for cu, ku in up:
        for cl, kl in low:
            a, b = cu[k], -cl[k]
            coeffs = [b * x + a * y for x, y in zip(cu, cl)]
            coeffs[k] = 0
            c = b * ku + a * kl
            out[_fm_key(coeffs, c)] = (coeffs, c)
    return list(out.values())


def _fm_key(coeffs, c):
    lead = next((x for x in coeffs if x), None)
    if lead is None:
        return ("const", sign(c))
    scale = 1 / abs(lead)
    return tuple(normalize(x * scale) for x in coeffs) + (normalize(c * scale),)


def _pairwise_intersections(F: MarkedFan) -> CheckResult:
    """cone(I) ∩ cone(J) = cone(I ∩ J) for all facet pairs, decided exactly.

    A violation is a point A_I c = A_J d with c, d >= 0 and positive weight
    on I \\ J, which is a linear feasibility problem.
    """
    n = F.n
    facets = F.K.facets
    for I, J in combinations(facets, 2):
        only = [k for k, v in enumerate(I) if v not in J]
        nv = len(I) + len(J)
        eqs = []
        for row in range(n):
            coeffs = [F.markings[v][row] for v in I] + [-F.markings[v][row] for v in J]
            eqs.append((coeffs, 0))
        eqs.append(([1 if k in only else 0 for k in range(len(I))] + [0] * len(J), 1))
        if _fm_feasible(eqs, nv):
            return CheckResult(False, {"facets": [_one_based(I), _one_based(J)]})
    return CheckResult(True, note=f"{len(facets) * (len(facets) - 1) // 2} facet pairs")


def subspace_is_rational(W: Sequence[Sequence], d: int | None) -> bool:
    """True iff span(W) has a basis of rational vectors.

    Over Q(sqrt d) the rational part of a subspace W is W ∩ conj(W), of
    dimension 2 dim W - dim(W + conj W).
    """
    if d is None:
        return True
    W = [tuple(w) for w in W]
    r = rank(ExactMatrix([list(w) for w in W], field=d)) if W else 0
    if r == 0:
        return True
    Wc = [tuple(conjugate(x) for x in w) for w in W]
    both = rank(ExactMatrix([list(w) for w in W + Wc], field=d))
    return 2 * r - both == r


def is_rational(F: MarkedFan) -> bool:
    """True iff the kernel of e_i -> a_i (all m slots) has a rational basis."""
    return subspace_is_rational(kernel_basis(F.marking_matrix("keep")), F.field)
