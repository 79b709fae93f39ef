from __future__ import annotations

import math
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cohitlab.polyspace import (
    DualElement,
    Polynomial,
    enumerate_monomials,
    monomial_key,
    pairing,
)
from cohitlab.steenrod import (
    HitSpan,
    binom_odd,
    hit_span,
    is_annihilated,
    is_hit,
    sq,
    sq_dual,
    sq_monomial,
)


def test_binom_odd_is_lucas():
    for a in range(40):
        for b in range(40):
            want = bool(math.comb(a, b) & 1) if b <= a else False
            assert binom_odd(a, b) == want


def test_sq_on_a_single_variable_power():
    # Sq^t(x^a) = C(a, t) x^{a+t}
    for a in range(1, 12):
        for t in range(0, 14):
            got = sq_monomial(t, (a,))
            want = [(a + t,)] if binom_odd(a, t) else []
            assert got == want


def test_sq_total_degree_and_instability():
    f = Polynomial(3, [(2, 1, 0)])
    assert sq(0, f) == f
    # Sq^t vanishes above the degree (unstable module)
    assert sq(4, f).is_zero()
    assert sq(5, f).is_zero()
    # top square is the Frobenius square
    assert sq(3, f) == f.square()


def test_sq_one_is_the_derivation_on_squares():
    # On x^2k, Sq^1 vanishes; on x^{2k+1} it gives x^{2k+2}
    assert sq(1, Polynomial(2, [(4, 0)])).is_zero()
    assert sq(1, Polynomial(2, [(3, 0)])) == Polynomial(2, [(4, 0)])


@st.composite
def homogeneous_polys(draw, q=3, max_degree=7, max_terms=4):
    n = draw(st.integers(1, max_degree))
    monos = enumerate_monomials(q, n)
    picks = draw(st.lists(st.sampled_from(monos), max_size=max_terms))
    return Polynomial(q, set(picks))


@given(homogeneous_polys(), homogeneous_polys(), st.integers(0, 6))
def test_cartan_formula(f, g, t):
    lhs = sq(t, f * g)
    rhs = Polynomial(3)
    for i in range(t + 1):
        rhs ^= sq(i, f) * sq(t - i, g)
    assert lhs == rhs


@given(homogeneous_polys())
def test_sq1_squared_is_zero(f):
    assert sq(1, sq(1, f)).is_zero()


@given(homogeneous_polys())
def test_adem_relation_sq2_sq2(f):
    # Sq^2 Sq^2 = Sq^3 Sq^1
    assert sq(2, sq(2, f)) == sq(3, sq(1, f))


@given(homogeneous_polys())
def test_adem_relation_sq1_sq2(f):
    # Sq^1 Sq^2 = Sq^3
    assert sq(1, sq(2, f)) == sq(3, f)


def test_dual_action_is_adjoint_exhaustively_in_low_degree():
    q, n, t = 2, 5, 2
    for term in enumerate_monomials(q, n):
        theta = DualElement(q, [term])
        moved = sq_dual(t, theta)
        for m in enumerate_monomials(q, n - t):
            f = Polynomial(q, [m])
            assert pairing(moved, f) == pairing(theta, sq(t, f))


@given(st.integers(1, 4))
def test_dual_action_drops_degree(t):
    theta = DualElement(2, [(3, 2)])
    moved = sq_dual(t, theta)
    assert moved.is_zero() or moved.degree == 5 - t


def test_is_annihilated_examples():
    # single-variable duals: a^(2^k - 1) is killed by every positive square
    assert is_annihilated(DualElement(1, [(1,)]))
    assert is_annihilated(DualElement(1, [(3,)]))
    assert is_annihilated(DualElement(1, [(7,)]))
    # a^(2) is not: <a^(2) Sq^1, x> = <a^(2), x^2> = 1
    assert not is_annihilated(DualElement(1, [(2,)]))
    assert sq_dual(1, DualElement(1, [(2,)])) == DualElement(1, [(1,)])
    assert is_annihilated(DualElement(1, []))


def test_hit_membership_one_variable():
    # Q_n(F2[x]) is nonzero exactly at n = 2^k - 1
    for n in range(1, 33):
        span = hit_span(1, n)
        expected = 0 if (n + 1) & n == 0 else 1
        assert span.rank == expected
        assert is_hit(Polynomial(1, [(n,)])) == (expected == 1)


def test_hit_span_columns_are_sorted_largest_first():
    span = HitSpan(2, 4)
    ascending = sorted(span.columns, key=monomial_key)
    positions = [span.position[m] for m in ascending]
    assert positions == sorted(positions, reverse=True)


def test_round_trips_through_span_coordinates():
    span = hit_span(3, 5)
    rng = random.Random(3)
    monos = enumerate_monomials(3, 5)
    for _ in range(10):
        f = Polynomial(3, set(rng.sample(monos, 4)))
        assert span.to_polynomial(span.to_vector(f)) == f
        theta = DualElement(3, set(rng.sample(monos, 4)))
        assert span.to_dual(span.dual_to_vector(theta)) == theta


def test_normal_form_kills_hit_elements():
    span = hit_span(2, 4)
    f = sq(1, Polynomial(2, [(2, 1)])) ^ sq(2, Polynomial(2, [(1, 1)]))
    assert span.is_hit(f)
    assert span.normal_form(f).is_zero()
    g = Polynomial(2, [(3, 1)])  # a spike: never hit
    assert not span.is_hit(g)
    assert span.normal_form(span.normal_form(g)) == span.normal_form(g)


def test_power_generators_span_the_full_hit_space():
    # Sq^1, Sq^2, Sq^4, ... generate: same span as using every Sq^t
    for q in (1, 2, 3):
        for n in range(1, 11):
            assert HitSpan(q, n, "powers").rank == HitSpan(q, n, "all").rank


def test_primitive_basis_is_annihilated_and_spans_the_kernel():
    span = hit_span(2, 6)
    prims = span.primitive_basis()
    assert len(prims) == len(span.admissible_positions())
    for theta in prims:
        assert is_annihilated(theta)


def test_weight_restriction_presents_the_same_quotient():
    full = HitSpan(4, 9)
    pruned = HitSpan(4, 9, restrict_weight=(3, 1, 1))
    assert pruned.ncols < full.ncols
    assert full.ncols - full.rank == pruned.ncols - pruned.rank


def test_weight_table_splits_the_quotient():
    span = hit_span(3, 7)
    table = span.weight_table()
    total = sum(cols - pivots for cols, pivots in table.values())
    assert total == span.ncols - span.rank


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        HitSpan(2, -1)
    with pytest.raises(ValueError):
        HitSpan(2, 3, "some")
    with pytest.raises(ValueError):
        HitSpan(9, 3)
