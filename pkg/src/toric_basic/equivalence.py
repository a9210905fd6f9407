"""Marked-fan isomorphism, which decides p-equivalence of the corresponding
torus actions (and transverse equivalence of their canonical foliations).

Ghost vertices carry no fan data and are ignored throughout.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .exactfield import (ExactMatrix, format_scalar, inverse, lift, rank,
                         relative_elementary_divisors, zmodule_equal)
from .fan import MarkedFan
from .simplicial import SimplicialComplex, complex_isomorphisms, f_vector, h_vector

GHOST_NOTE = "ghost vertices are ignored when comparing marked fans"


@dataclass(frozen=True)
class FanIsomorphism:
    """sigma: non-ghost vertex of F1 -> vertex of F2 (0-based); phi: n x n."""

    sigma: dict[int, int]
    phi: ExactMatrix

    def to_dict(self, m1: int) -> dict:
        return {
            "sigma": [self.sigma[i] + 1 if i in self.sigma else None for i in range(m1)],
            "phi": [[format_scalar(x) for x in r] for r in self.phi.to_lists()],
        }


@dataclass(frozen=True)
class Fingerprint:
    n: int
    f_vector: tuple[int, ...]
    h_vector: tuple[int, ...]
    adjacency_degrees: tuple[int, ...]
    elementary_divisors: tuple[int, ...]

    def to_dict(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.__dict__.items()}


def _core(K: SimplicialComplex) -> SimplicialComplex:
    """K restricted to its non-ghost vertices, relabelled 0..m'-1."""
    new = {v: i for i, v in enumerate(K.vertices)}
    return SimplicialComplex(len(new), tuple(tuple(new[v] for v in f) for f in K.facets if f))


def _real_markings(F: MarkedFan) -> list[tuple]:
    return [F.markings[i] for i in F.K.vertices]


def invariant_fingerprint(F: MarkedFan) -> Fingerprint:
    """Cheap invariants; equal fingerprints are necessary for isomorphism."""
    K = _core(F.K)
    adj = tuple(sorted(len(K.neighbors[v]) for v in K.vertices))
    if F.n:
        divs = relative_elementary_divisors(_real_markings(F), F.lattice_generators)
    else:
        divs = ()
    return Fingerprint(F.n, f_vector(K), h_vector(K, F.n), adj, divs)


def _common_field(F1: MarkedFan, F2: MarkedFan) -> int | None:
    if F1.field is not None and F2.field is not None and F1.field != F2.field:
        raise ValueError(f"fans over Q(sqrt {F1.field}) and Q(sqrt {F2.field}) "
                         "cannot be compared exactly")
    return F1.field if F1.field is not None else F2.field


def _lift_all(vs, d):
    return [tuple(lift(x, d) for x in v) for v in vs]


def _independent_prefix(vectors: list[tuple], n: int, d) -> list[int]:
    """Indices of the first n linearly independent vectors, greedily."""
    chosen: list[int] = []
    for i, v in enumerate(vectors):
        trial = [vectors[j] for j in chosen] + [v]
        if rank(ExactMatrix(trial, cols=n, field=d)) == len(trial):
            chosen.append(i)
            if len(chosen) == n:
                break
    return chosen


def _candidates(F1: MarkedFan, F2: MarkedFan) -> Iterator[FanIsomorphism]:
    """Every (sigma, phi) with phi solved from an independent set of markings
    and matching all markings; lattice equality is not yet checked."""
    d = _common_field(F1, F2)
    n = F1.n
    verts = list(F1.K.vertices)
    a1 = _lift_all(F1.markings, d)
    a2 = _lift_all(F2.markings, d)
    basis = [verts[j] for j in _independent_prefix([a1[v] for v in verts], n, d)]
    if len(basis) < n:
        return
    B1inv = inverse(ExactMatrix.from_columns([a1[v] for v in basis], n, field=d)) if n else None
    for sigma in complex_isomorphisms(F1.K, F2.K):
        if n:
            B2 = ExactMatrix.from_columns([a2[sigma[v]] for v in basis], n, field=d)
            phi = B2 @ B1inv
        else:
            phi = ExactMatrix([], cols=0, field=d)
        if all(phi @ a1[v] == a2[sigma[v]] for v in verts):
            yield FanIsomorphism(sigma, phi)


def _lattices_match(F1: MarkedFan, F2: MarkedFan, phi: ExactMatrix) -> bool:
    if F1.n == 0:
        return True
    return zmodule_equal([phi @ g for g in F1.lattice_generators], F2.lattice_generators)


def marked_fan_isomorphic(F1: MarkedFan, F2: MarkedFan) -> FanIsomorphism | None:
    """First isomorphism in enumeration order, or None.

    Both fans are assumed valid.  Over different quadratic fields no exact
    comparison is possible and ValueError is raised.
    """
    _common_field(F1, F2)
    if F1.n != F2.n or invariant_fingerprint(F1) != invariant_fingerprint(F2):
        return None
    for iso in _candidates(F1, F2):
        if _lattices_match(F1, F2, iso.phi):
            return iso
    return None


def p_equivalent(F1: MarkedFan, F2: MarkedFan) -> bool:
    return marked_fan_isomorphic(F1, F2) is not None


def verify_isomorphism(F1: MarkedFan, F2: MarkedFan, iso: FanIsomorphism) -> dict[str, bool]:
    """Recheck a witness from scratch: complex map, markings, lattice, phi."""
    K1, K2 = F1.K, F2.K
    s = iso.sigma
    bijective = (sorted(s) == list(K1.vertices)
                 and sorted(s.values()) == list(K2.vertices))
    facets = bijective and sorted(
        tuple(sorted(s[v] for v in f)) for f in K1.facets if f) == sorted(
        tuple(sorted(f)) for f in K2.facets if f)
    d = _common_field(F1, F2)
    phi = iso.phi
    shape = phi.rows == phi.cols == F1.n == F2.n
    invertible = shape and rank(phi) == F1.n
    markings = bijective and shape and all(
        phi @ tuple(lift(x, d) for x in F1.markings[v]) == tuple(lift(x, d) for x in F2.markings[s[v]])
        for v in K1.vertices)
    lattice = shape and _lattices_match(F1, F2, phi)
    return {"complex": bool(facets), "markings": bool(markings),
            "invertible": bool(invertible), "lattice": bool(lattice)}


def orbit_summary(F1: MarkedFan, F2: MarkedFan) -> Counter:
    """Why candidates fail: counts of complex isomorphisms by outcome."""
    out: Counter = Counter()
    good = {tuple(sorted(c.sigma.items())): c for c in _candidates(F1, F2)}
    for sigma in complex_isomorphisms(F1.K, F2.K):
        c = good.get(tuple(sorted(sigma.items())))
        if c is None:
            out["markings"] += 1
        elif not _lattices_match(F1, F2, c.phi):
            out["lattice"] += 1
        else:
            out["ok"] += 1
    return out
