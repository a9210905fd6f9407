"""Reduced Gröbner bases (Buchberger with Gebauer-Möller pair pruning) and
normal forms, grevlex order v_1 > ... > v_m, exact field coefficients."""
from __future__ import annotations

from typing import Sequence

from .polynomial import (Monomial, Polynomial, grevlex_key, mono_coprime,
                         mono_div, mono_divides, mono_lcm, mono_mul)

Terms = dict


def _lm(p: Terms) -> Monomial:
    return max(p, key=grevlex_key)


def _monic(p: Terms) -> Terms:
    lc = p[_lm(p)]
    if lc == 1:
        return p
    inv = 1 / lc
    return {e: c * inv for e, c in p.items()}


def _axpy(p: Terms, c, shift: Monomial, g: Terms) -> None:
    """In place: p -= c * x^shift * g."""
    for e, x in g.items():
        k = mono_mul(e, shift)
        v = p.get(k, 0) - c * x
        if v:
            p[k] = v
        else:
            p.pop(k, None)


def _reduce(p: Terms, basis: Sequence[tuple[Monomial, Terms]], full: bool = True) -> Terms:
    """Remainder of ``p`` on division by monic ``basis`` elements."""
    p = dict(p)
    rem: Terms = {}
    while p:
        lm = _lm(p)
        for g_lm, g in basis:
            if mono_divides(g_lm, lm):
                _axpy(p, p[lm], mono_div(lm, g_lm), g)
                break
        else:
            if not full:
                rem.update(p)
                return rem
            rem[lm] = p.pop(lm)
    return rem


def _spoly(f: Terms, f_lm: Monomial, g: Terms, g_lm: Monomial) -> Terms:
    l = mono_lcm(f_lm, g_lm)
    s = {mono_mul(e, mono_div(l, f_lm)): c for e, c in f.items()}
    _axpy(s, 1, mono_div(l, g_lm), g)
    return s


def buchberger(gens: Sequence[Terms], degree_bound: int | None = None) -> list[Terms]:
    """Reduced Gröbner basis of the ideal spanned by ``gens`` (term dicts).

    With ``degree_bound`` only S-pairs of lcm degree <= bound are processed,
    which yields a truncated basis correct in degrees <= bound for
    homogeneous input.
    """
    polys: list[Terms] = []
    lms: list[Monomial] = []
    G: list[int] = []
    B: list[tuple[int, int]] = []

    def update(h: int) -> None:
        nonlocal G, B
        lh = lms[h]
        C = [g for g in G]
        D: list[int] = []
        while C:
            g1 = C.pop(0)
            l1 = mono_lcm(lh, lms[g1])
            if mono_coprime(lh, lms[g1]) or not any(
                    mono_divides(mono_lcm(lh, lms[g2]), l1) for g2 in C + D):
                D.append(g1)
        E = [(h, g) for g in D if not mono_coprime(lh, lms[g])]
        keep = []
        for g1, g2 in B:
            l12 = mono_lcm(lms[g1], lms[g2])
            if mono_divides(lh, l12) and mono_lcm(lms[g1], lh) != l12 \
                    and mono_lcm(lms[g2], lh) != l12:
                continue
            keep.append((g1, g2))
        B = keep + E
        G = [g for g in G if not mono_divides(lh, lms[g])] + [h]

    def add(p: Terms) -> None:
        p = _monic(p)
        polys.append(p)
        lms.append(_lm(p))
        update(len(polys) - 1)

    # homogeneous input: process generators by degree, reducing each first
    for g in sorted((dict(g) for g in gens if g), key=lambda t: grevlex_key(_lm(t))):
        r = _reduce(g, [(lms[i], polys[i]) for i in G])
        if r:
            add(r)

    while B:
        B.sort(key=lambda pr: grevlex_key(mono_lcm(lms[pr[0]], lms[pr[1]])))
        i, j = B.pop(0)
        if degree_bound is not None and sum(mono_lcm(lms[i], lms[j])) > degree_bound:
            continue
        s = _spoly(polys[i], lms[i], polys[j], lms[j])
        r = _reduce(s, [(lms[k], polys[k]) for k in G])
        if r:
            add(r)

    # minimal basis, then interreduce tails
    minimal = [g for g in G if not any(h != g and mono_divides(lms[h], lms[g]) for h in G)]
    out = []
    for g in minimal:
        others = [(lms[h], polys[h]) for h in minimal if h != g]
        tail = dict(polys[g])
        lead = tail.pop(lms[g])
        red = _reduce(tail, others)
        red[lms[g]] = lead
        out.append(_monic(red))
    out.sort(key=lambda t: (sum(_lm(t)), tuple(-x for x in _lm(t))))
    return out


def groebner_basis(gens: Sequence[Polynomial], degree_bound: int | None = None) -> list[Polynomial]:
    """Reduced Gröbner basis, grevlex, sorted by degree then lex on the
    leading monomial (v_1 first)."""
    if not gens:
        return []
    nvars = gens[0].nvars
    if any(not g.is_homogeneous() for g in gens):
        raise ValueError("groebner_basis expects homogeneous generators")
    gb = buchberger([g.terms for g in gens], degree_bound)
    return [Polynomial(nvars, t) for t in gb]


def normal_form(p: Polynomial, gb: Sequence[Polynomial]) -> Polynomial:
    basis = [(g.leading_monomial(), _monic(g.terms)) for g in gb]
    return Polynomial(p.nvars, _reduce(p.terms, basis))
