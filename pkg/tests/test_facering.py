import pytest
from hypothesis import given, strategies as st

from toric_basic.corpus import (cpn, cross_polytope, ghost_torus, random_octahedron_marking,
                                square, stacked_sphere)
from toric_basic.facering import (LsopError, Polynomial, basic_betti, cup_product_table,
                                  graded_dimension_oracle, graded_quotient, groebner_basis,
                                  koszul_homology, koszul_report, linear_ideal, lsop_check,
                                  normal_form, ring_presentation, stanley_reisner_ideal)
from toric_basic.fan import MarkedFan
from toric_basic.simplicial import h_vector

X = lambda i, m=3: Polynomial.linear([int(j == i) for j in range(m)])


def names(m):
    return [f"v{i + 1}" for i in range(m)]


def fmt(polys, m):
    return [p.format(names(m)) for p in polys]


def test_stanley_reisner_examples():
    assert stanley_reisner_ideal(square().K) == [(1, 0, 1, 0), (0, 1, 0, 1)]
    assert stanley_reisner_ideal(cpn(2).K) == [(1, 1, 1)]
    assert stanley_reisner_ideal(ghost_torus(2).K) == [(1, 0), (0, 1)]


def test_linear_ideal_examples():
    assert fmt(linear_ideal(cpn(2)).forms, 3) == ["v1 - v3", "v2 - v3"]
    assert fmt(linear_ideal(square()).forms, 4) == ["v1 - v3", "v2 - v4"]
    assert linear_ideal(ghost_torus(2)).forms == ()


def test_linear_ideal_rejects_rank_deficient(fixtures):
    with pytest.raises(LsopError):
        linear_ideal(fixtures["rank-deficient"][0])


def test_lsop_check():
    assert lsop_check(cpn(2).K, cpn(2))
    F = MarkedFan(2, cpn(2).K, ((1, 0), (1, 0), (-1, -1)), ((1, 0), (0, 1)))
    assert not lsop_check(F.K, F)
    assert lsop_check(ghost_torus(2).K, ghost_torus(2))
    with pytest.raises(LsopError) as e:
        basic_betti(F, validate=False)
    assert e.value.facet == (0, 1)


def test_groebner_examples():
    v1, v2, v3 = X(0), X(1), X(2)
    gb = groebner_basis([v1 - v3, v2 - v3, v1 * v2 * v3])
    assert fmt(gb, 3) == ["v1 - v3", "v2 - v3", "v3^3"]
    assert fmt(groebner_basis([v1]), 3) == ["v1"]
    w = [X(i, 4) for i in range(4)]
    gb = groebner_basis([w[0] * w[2], w[1] * w[3], w[0] - w[2], w[1] - w[3]])
    assert fmt(gb, 4) == ["v1 - v3", "v2 - v4", "v3^2", "v4^2"]
    with pytest.raises(ValueError):
        groebner_basis([v1 * v2 - v3])


def test_groebner_frozen_against_sympy():
    # reduced bases cross-checked once against sympy.groebner(order="grevlex")
    from toric_basic.corpus import hirzebruch
    Q = graded_quotient(hirzebruch(2))
    assert fmt(Q.groebner, 4) == ["v1 - v3", "v2 + 2*v3 - v4", "v3^2",
                                  "v3*v4 - 1/2*v4^2", "v4^3"]
    Q = graded_quotient(cross_polytope(3))
    assert fmt(Q.groebner, 6) == ["v1 - v2", "v3 - v4", "v5 - v6", "v2^2", "v4^2", "v6^2"]


def test_normal_forms():
    gb = graded_quotient(cpn(2)).groebner
    v1, v2, v3 = X(0), X(1), X(2)
    assert normal_form(v1 * v2, gb).format(names(3)) == "v3^2"
    assert not normal_form(v3 * v3 * v3, gb).terms
    assert normal_form(Polynomial.constant(3, 1), gb).format(names(3)) == "1"


@pytest.mark.parametrize("F, betti", [
    (cpn(2), (1, 1, 1)), (square(), (1, 2, 1)), (ghost_torus(2), (1,)),
    (cpn(4), (1, 1, 1, 1, 1)), (cross_polytope(3), (1, 3, 3, 1)),
    (cross_polytope(4), (1, 4, 6, 4, 1)),
])
def test_basic_betti_examples(F, betti):
    assert basic_betti(F) == betti


def test_standard_monomials_cp2():
    assert graded_quotient(cpn(2)).std_monomials == {0: [(0, 0, 0)], 1: [(0, 0, 1)], 2: [(0, 0, 2)]}


def test_basic_betti_validates(fixtures):
    with pytest.raises(ValueError):
        basic_betti(fixtures["overlapping-cones"][0])


@pytest.mark.parametrize("F, k, dim", [
    (cpn(2), 1, 1), (cpn(2), 0, 1), (square(), 1, 2), (square(), 2, 1), (square(), 3, 0),
])
def test_graded_dimension_oracle(F, k, dim):
    assert graded_dimension_oracle(F.K, linear_ideal(F), k) == dim


def test_koszul_examples():
    F = cpn(2)
    L = linear_ideal(F)
    assert all(koszul_homology(F.K, L, 1, k) == 0 for k in range(5))
    assert koszul_homology(F.K, L, 0, 1) == 1
    assert koszul_homology(F.K, L, 0, 0) == 1
    with pytest.raises(ValueError):
        koszul_homology(F.K, L, 3, 0)


def test_koszul_report_row_zero_is_hilbert():
    F = cross_polytope(3)
    rep = koszul_report(F.K, linear_ideal(F))
    assert rep.row(0) == [1, 3, 3, 1] and rep.failures() == []


def test_koszul_detects_non_regular_sequence():
    # forms with a dependent facet are not an lsop: higher homology appears
    F = MarkedFan(2, cpn(2).K, ((1, 0), (1, 0), (-1, -1)), ((1, 0), (0, 1)))
    assert koszul_report(F.K, linear_ideal(F), 3).failures()


def test_cup_products():
    t = cup_product_table(graded_quotient(cpn(2)))
    assert t[((0, 0, 1), (0, 0, 1))] == {(0, 0, 2): 1}
    assert t[((0, 0, 1), (0, 0, 2))] == {}
    t = cup_product_table(graded_quotient(square()))
    assert t[((0, 0, 1, 0), (0, 0, 0, 1))] == {(0, 0, 1, 1): 1}
    assert t[((0, 0, 1, 0), (0, 0, 1, 0))] == {}
    one = (0, 0, 0, 0)
    for (a, b), prod in t.items():
        if a == one:
            assert prod == {b: 1}


def test_ring_presentation():
    p = ring_presentation(cpn(2))
    assert p["generators"] == ["v1", "v2", "v3"] and p["degrees"] == [2, 2, 2]
    assert p["monomial_relations"] == ["v1*v2*v3"]
    assert p["linear_relations"] == ["v1 - v3", "v2 - v3"]
    assert p["betti"] == [1, 1, 1]
    p = ring_presentation(ghost_torus(2))
    assert p["monomial_relations"] == ["v1", "v2"] and p["betti"] == [1]
    p = ring_presentation(square())
    assert len(p["monomial_relations"]) == 2 and len(p["linear_relations"]) == 2


def _mul_table(Q):
    t = cup_product_table(Q)
    def mul(x, y):
        out = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for e, c in t[(a, b)].items():
                    out[e] = out.get(e, 0) + ca * cb * c
        return {e: c for e, c in out.items() if c}
    return mul


@given(st.integers(0, 10_000), st.data())
def test_cup_product_commutative_and_associative(seed, data):
    F = random_octahedron_marking(seed)
    Q = graded_quotient(F)
    basis = Q.basis()
    mul = _mul_table(Q)
    a, b, c = (data.draw(st.sampled_from(basis)) for _ in range(3))
    ea, eb, ec = {a: 1}, {b: 1}, {c: 1}
    assert mul(ea, eb) == mul(eb, ea)
    assert mul(mul(ea, eb), ec) == mul(ea, mul(eb, ec))


@given(st.integers(0, 10_000))
def test_gb_elements_reduce_to_zero(seed):
    Q = graded_quotient(random_octahedron_marking(seed))
    for g in Q.groebner:
        for i in range(Q.nvars):
            assert not Q.normal_form(g * X(i, Q.nvars)).terms


@given(st.integers(0, 10_000), st.integers(0, 10_000))
def test_hilbert_equals_h_vector_and_oracle(seed, mseed):
    F = stacked_sphere(3, 3, seed, marking_seed=mseed)
    Q = graded_quotient(F)
    L = linear_ideal(F)
    assert Q.hilbert == h_vector(F.K, F.n)
    assert all(Q.hilbert[k] == graded_dimension_oracle(F.K, L, k) for k in range(F.n + 1))
    assert graded_dimension_oracle(F.K, L, F.n + 1) == 0
