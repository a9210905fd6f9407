"""From a marked fan to complex moment-angle data.

Pipeline: pad the markings with ghost generators until they generate the
lattice group and m - n is even, take Lambda: R^m -> R^n (e_i -> column i),
and choose the complex subspace h with Re(h) = Ker Lambda by pairing
consecutive kernel vectors: (u1, u2) encodes the complex line spanned by
u1 - i*u2, and Re((x + iy)(u1 - i*u2)) = x*u1 + y*u2.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .equivalence import FanIsomorphism, marked_fan_isomorphic
from .exactfield import (ExactMatrix, format_scalar, kernel_basis, rank,
                         zmodule_equal)
from .fan import (CheckResult, MarkedFan, ValidationReport, subspace_is_rational,
                  validate_marked_fan)
from .simplicial import SimplicialComplex, add_ghost_vertices

SEIFERT_NOTE = ("Re(h) is rational: the canonical foliation is a Seifert "
                "fibration over the toric orbifold of the fan")
IRRATIONAL_NOTE = "Re(h) is not rational: the canonical foliation has non-closed leaves"


class RealizationError(RuntimeError):
    """A pipeline stage failed; ``stage`` names it and ``witness`` explains."""

    def __init__(self, stage: str, witness) -> None:
        super().__init__(f"{stage}: {witness}")
        self.stage = stage
        self.witness = witness


def pad_generators(F: MarkedFan) -> list[tuple]:
    """Shortest prefix of the lattice generators that, with the markings
    (ghost slots included), generates the lattice group; then one more copy
    of the first generator if m - n would be odd."""
    gens = list(F.lattice_generators)
    pad: list[tuple] = []
    if F.n:
        for k in range(len(gens) + 1):
            if zmodule_equal(list(F.markings) + gens[:k], gens):
                pad = gens[:k]
                break
    if (F.m + len(pad) - F.n) % 2:
        pad.append(gens[0] if gens else ())
    return pad


def lambda_map(F: MarkedFan, padding: Sequence[Sequence]) -> ExactMatrix:
    """n x m matrix: the markings, then the padding vectors, as columns."""
    cols = list(F.markings) + [tuple(v) for v in padding]
    return ExactMatrix.from_columns(cols, F.n, field=F.field)


def complex_structure_subspace(kernel: Sequence[Sequence]) -> list[tuple[int, int]]:
    """Pair consecutive kernel vectors (0-based indices)."""
    if len(kernel) % 2:
        raise ValueError(f"kernel of odd dimension {len(kernel)} carries no complex structure")
    return [(2 * j, 2 * j + 1) for j in range(len(kernel) // 2)]


def real_part_span(kernel: Sequence[Sequence], pairing: Sequence[tuple[int, int]]) -> list[tuple]:
    """Images under Re of the real basis {w_j, i*w_j} of h, w_j = u_a - i*u_b.

    Re(w_j) = u_a and Re(i*w_j) = u_b, so the list is the paired vectors.
    """
    _check_pairing(kernel, pairing)
    out = []
    for a, b in pairing:
        out += [tuple(kernel[a]), tuple(kernel[b])]
    return out


def _check_pairing(kernel, pairing) -> None:
    seen = [i for p in pairing for i in p]
    if any(len(p) != 2 for p in pairing) or sorted(seen) != list(range(len(kernel))):
        raise ValueError(f"pairing {list(pairing)} does not partition {len(kernel)} kernel vectors")


def quotient_matrix(vectors: Sequence[Sequence], m: int, d: int | None) -> ExactMatrix:
    """Rows: a basis of the annihilator of span(vectors) in (R^m)*."""
    if not vectors:
        return ExactMatrix.identity(m, field=d)
    rows = kernel_basis(ExactMatrix([list(v) for v in vectors], cols=m, field=d))
    return ExactMatrix(rows, cols=m, field=d)


@dataclass
class C2Object:
    """Fan data (with Lambda as its marking matrix) and h as kernel + pairing."""

    fan: MarkedFan
    kernel: list[tuple]
    pairing: list[tuple[int, int]]

    @property
    def m(self) -> int:
        return self.fan.m


def induced_fan(obj: C2Object) -> MarkedFan:
    """Image of the padded fan under the quotient by Re(h)."""
    F = obj.fan
    q = quotient_matrix(real_part_span(obj.kernel, obj.pairing), F.m, F.field)
    cols = q.columns()
    return MarkedFan(q.rows, F.K, tuple(cols), tuple(cols), field=F.field)


def validate_c2_object(obj: C2Object, mode: str = "fast", seed: int = 0) -> ValidationReport:
    F = obj.fan
    d = F.field
    re = real_part_span(obj.kernel, obj.pairing)
    Lam = F.marking_matrix("keep")
    checks: dict[str, CheckResult] = {}

    r = rank(ExactMatrix([list(v) for v in re], cols=F.m, field=d)) if re else 0
    checks["re_injective"] = CheckResult(r == len(re), None if r == len(re) else
                                         f"rank {r} < real dimension {len(re)}")
    bad = next((i for i, u in enumerate(re) if any(Lam @ u)), None)
    if bad is not None:
        checks["re_equals_kernel"] = CheckResult(False, f"Lambda u_{bad + 1} != 0")
    elif r != F.m - F.n:
        checks["re_equals_kernel"] = CheckResult(False, f"dim Re(h) = {r} != m - n = {F.m - F.n}")
    else:
        checks["re_equals_kernel"] = CheckResult(True)

    G = induced_fan(obj)
    rep = validate_marked_fan(G, mode=mode, seed=seed)
    checks["quotient_fan"] = CheckResult(rep.ok, rep.failed() or None)

    checks["cone_bijection"] = _cone_bijection(G)
    return ValidationReport(checks)


def _cone_bijection(G: MarkedFan) -> CheckResult:
    """Facet images stay simplicial and distinct rays stay distinct, so
    distinct faces go to distinct cones."""
    for f in G.K.facets:
        if f and rank(G.facet_matrix(f)) != len(f):
            return CheckResult(False, [v + 1 for v in f])
    verts = G.K.vertices
    for u, v in combinations(verts, 2):
        a, b = G.markings[u], G.markings[v]
        M = ExactMatrix.from_columns([a, b], G.n, field=G.field)
        if rank(M) < 2 and any(x * y > 0 for x, y in zip(a, b) if x and y):
            return CheckResult(False, [u + 1, v + 1])
    return CheckResult(True)


@dataclass
class Realization:
    m: int
    K_padded: SimplicialComplex
    Lambda: ExactMatrix
    kernel: list[tuple]
    pairing: list[tuple[int, int]]
    padding: list[tuple]
    rational: bool
    report: ValidationReport
    padded: MarkedFan
    induced: MarkedFan
    round_trip: FanIsomorphism | None = field(default=None)

    def to_dict(self) -> dict:
        fmt = lambda v: [format_scalar(x) for x in v]
        return {
            "m": self.m,
            "facets": [[v + 1 for v in f] for f in self.K_padded.facets if f],
            "ghosts": sorted(g + 1 for g in self.K_padded.ghosts),
            "lambda": [fmt(r) for r in self.Lambda.to_lists()],
            "kernel": [fmt(u) for u in self.kernel],
            "pairing": [[a + 1, b + 1] for a, b in self.pairing],
            "rational": self.rational,
        }


def realize_moment_angle(F: MarkedFan, *, seed: int = 0, check_input: bool = True) -> Realization:
    if check_input:
        rep = validate_marked_fan(F, seed=seed)
        if not rep.ok:
            raise RealizationError("validate", rep.failed())
    pad = pad_generators(F)
    Lam = lambda_map(F, pad)
    m = Lam.cols
    if (m - F.n) % 2 or rank(Lam) != F.n:
        raise RealizationError("lambda_map", f"m = {m}, n = {F.n}, rank {rank(Lam)}")
    K = add_ghost_vertices(F.K, len(pad))
    padded = MarkedFan(F.n, K, tuple(Lam.columns()), F.lattice_generators, field=F.field)
    kernel = kernel_basis(Lam)
    try:
        pairing = complex_structure_subspace(kernel)
    except ValueError as e:
        raise RealizationError("complex_structure_subspace", str(e)) from None
    obj = C2Object(padded, kernel, pairing)
    report = validate_c2_object(obj, seed=seed)
    if not report.ok:
        raise RealizationError("validate_c2_object", report.failed())
    G = induced_fan(obj)
    iso = marked_fan_isomorphic(G, F)
    if iso is None:
        raise RealizationError("round_trip", "induced fan is not isomorphic to the input")
    return Realization(m, K, Lam, kernel, pairing, pad,
                       subspace_is_rational(kernel, F.field), report, padded, G, iso)


@dataclass(frozen=True)
class QuotientData:
    """q (rows annihilate h'), a basis of h' = Ker q, and rationality."""

    q: ExactMatrix
    h_prime: list[tuple]
    rational: bool

    @property
    def note(self) -> str:
        if not self.h_prime:
            return "h' = 0: the foliation is by points"
        return SEIFERT_NOTE if self.rational else IRRATIONAL_NOTE

    def to_dict(self) -> dict:
        fmt = lambda v: [format_scalar(x) for x in v]
        return {"q": [fmt(r) for r in self.q.to_lists()],
                "h_prime": [fmt(u) for u in self.h_prime],
                "rational": self.rational, "note": self.note}


def real_quotient_data(F: MarkedFan) -> QuotientData:
    """h' = kernel of e_i -> a_i over all m slots of F as given (no padding)."""
    h = kernel_basis(F.marking_matrix("keep"))
    q = quotient_matrix(h, F.m, F.field)
    return QuotientData(q, h, subspace_is_rational(h, F.field))
