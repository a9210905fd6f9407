"""The graded algebra R[v_1..v_m] / (I_K + J) attached to a marked fan."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..exactfield import ExactMatrix, rank
from ..fan import MarkedFan
from ..simplicial import SimplicialComplex, minimal_nonfaces
from .groebner import groebner_basis, normal_form
from .polynomial import (Monomial, Polynomial, format_monomial, grevlex_key,
                         mono_divides, mono_mul, squarefree, unit)


class LsopError(ValueError):
    """The linear forms fail to be a system of parameters on some facet."""

    def __init__(self, message: str, facet: tuple[int, ...] | None = None) -> None:
        super().__init__(message)
        self.facet = facet


class SocleDegreeError(RuntimeError):
    """The quotient has standard monomials past the expected top degree."""


@dataclass(frozen=True)
class LinearSystemOfParameters:
    """n x m matrix A (ghost columns zero) and the forms sum_i A[j][i] v_i."""

    A: ExactMatrix
    forms: tuple[Polynomial, ...]

    @property
    def n(self) -> int:
        return self.A.rows

    @property
    def m(self) -> int:
        return self.A.cols


def stanley_reisner_ideal(K: SimplicialComplex) -> list[Monomial]:
    """Square-free generators v_I, one per minimal non-face (ghosts included)."""
    return [squarefree(K.m, I) for I in minimal_nonfaces(K)]


def linear_ideal(F: MarkedFan) -> LinearSystemOfParameters:
    A = F.marking_matrix("zero")
    if F.n and rank(A) != F.n:
        raise LsopError(f"marking matrix has rank {rank(A)} < n = {F.n}")
    forms = tuple(Polynomial.linear(list(A.row(j))) for j in range(F.n))
    return LinearSystemOfParameters(A, forms)


def lsop_witness(F: MarkedFan) -> tuple[int, ...] | None:
    """First facet whose marking columns are dependent, or None."""
    A = F.marking_matrix("zero")
    for f in F.K.facets:
        if f and rank(A.select_columns(f)) != len(f):
            return f
    return None


def lsop_check(K: SimplicialComplex, F: MarkedFan) -> bool:
    if K != F.K:
        raise ValueError("complex does not match the fan")
    return lsop_witness(F) is None


@dataclass
class GradedQuotient:
    """Reduced Gröbner basis of I_K + J with its standard monomials by degree."""

    nvars: int
    groebner: list[Polynomial]
    std_monomials: dict[int, list[Monomial]]
    hilbert: tuple[int, ...]
    _lms: list[Monomial] = field(default_factory=list, repr=False)

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.groebner)

    def basis(self) -> list[Monomial]:
        return [e for k in sorted(self.std_monomials) for e in self.std_monomials[k]]

    def is_standard(self, e: Monomial) -> bool:
        return not any(mono_divides(l, e) for l in self._lms)


def standard_monomials(lms: Sequence[Monomial], nvars: int, max_degree: int) -> dict[int, list[Monomial]]:
    """Monomials divisible by no element of ``lms``, by degree, up to the
    first empty degree (or ``max_degree``)."""
    out = {}
    layer = [(0,) * nvars] if not any(mono_divides(l, (0,) * nvars) for l in lms) else []
    k = 0
    while layer and k <= max_degree:
        out[k] = sorted(layer, key=grevlex_key, reverse=True)
        nxt = set()
        for e in layer:
            for i in range(nvars):
                c = mono_mul(e, unit(nvars, i))
                if c not in nxt and not any(mono_divides(l, c) for l in lms):
                    nxt.add(c)
        layer = list(nxt)
        k += 1
    if layer:
        out[k] = sorted(layer, key=grevlex_key, reverse=True)
    return out


def graded_quotient(F: MarkedFan) -> GradedQuotient:
    """Gröbner route to the quotient by I_K + J.

    Pairs are processed up to degree n + 2.  Once some degree <= n + 2 has
    no standard monomials, every monomial of that degree is a leading
    monomial, so the truncated basis is already complete; otherwise the
    quotient is not Artinian of the expected socle degree and this raises.
    """
    K, n, m = F.K, F.n, F.m
    L = linear_ideal(F)
    gens = [Polynomial.monomial(e) for e in stanley_reisner_ideal(K)] + list(L.forms)
    cap = n + 2
    gb = groebner_basis(gens, degree_bound=cap) if gens else []
    lms = [g.leading_monomial() for g in gb]
    std = standard_monomials(lms, m, cap)
    top = max(std)
    if top > n:
        raise SocleDegreeError(
            f"standard monomials in degree {top} > n = {n}: the quotient is not "
            "Artinian with top degree n (fan incomplete or forms not an lsop?)")
    hilbert = tuple(len(std.get(k, [])) for k in range(n + 1))
    return GradedQuotient(m, gb, std, hilbert, lms)


def basic_betti(F: MarkedFan, *, validate: bool = True, seed: int = 0) -> tuple[int, ...]:
    """Dimensions of the basic cohomology in degrees 0, 2, ..., 2n."""
    if validate:
        from ..fan import validate_marked_fan
        rep = validate_marked_fan(F, seed=seed)
        if not rep.ok:
            raise ValueError(f"marked fan fails validation: {rep.failed()}")
    w = lsop_witness(F)
    if w is not None:
        raise LsopError(f"facet {[v + 1 for v in w]} has dependent markings", w)
    return graded_quotient(F).hilbert


def cup_product_table(Q: GradedQuotient) -> dict[tuple[Monomial, Monomial], dict[Monomial, object]]:
    """Products of standard monomials as coordinates in the standard basis."""
    basis = Q.basis()
    table = {}
    for a in basis:
        for b in basis:
            p = Q.normal_form(Polynomial.monomial(mono_mul(a, b)))
            table[(a, b)] = dict(p.terms)
    return table


def ring_presentation(F: MarkedFan, Q: GradedQuotient | None = None) -> dict:
    """Generators, grading, relations and Betti numbers as plain data."""
    K = F.K
    names = [f"v{i + 1}" for i in range(F.m)]
    L = linear_ideal(F)
    Q = Q or graded_quotient(F)
    return {
        "generators": names,
        "degrees": [2] * F.m,
        "monomial_relations": [format_monomial(e, names) for e in stanley_reisner_ideal(K)],
        "linear_relations": [f.format(names) for f in L.forms],
        "groebner_basis": [g.format(names) for g in Q.groebner],
        "standard_monomials": {str(2 * k): [format_monomial(e, names) for e in v]
                               for k, v in sorted(Q.std_monomials.items())},
        "betti": list(Q.hilbert),
    }
