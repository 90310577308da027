"""Formal sums, the concatenation product, and the determinant elements."""

from fractions import Fraction

import pytest

from graphdet import (
    DirectedGraph,
    FormalSum,
    GradedElement,
    alpha,
    classify,
    concat_product,
    enumerate_class,
    enumerate_graphs,
    sigma,
    sum_over_subgraphs,
    theta,
    u_sum,
    universal_codim1,
    universal_det,
    x_sum,
)
from graphdet.algebra import class_sum, distinct_permutations

D = DirectedGraph
half = Fraction(1, 2)


def test_formal_sum_basics():
    g = D(2, ((1, 2),))
    s = FormalSum.single(g)
    assert s + FormalSum.zero(2, 1) == s
    assert (0 * s).is_zero
    assert (s - s).is_zero
    assert s.coeff(g) == 1
    assert Fraction(2, 3) * s == FormalSum(2, 1, {g: Fraction(2, 3)})
    with pytest.raises(ValueError):
        s + FormalSum.zero(2, 2)
    with pytest.raises(ValueError):
        FormalSum(2, 1, {D(2, ((1, 2), (2, 1))): 1})


def test_zero_coefficients_are_dropped():
    g, h = D(2, ((1, 2),)), D(2, ((2, 1),))
    s = FormalSum(2, 1, {g: 1, h: 0})
    assert len(s) == 1 and s.coeff(h) == 0
    assert (FormalSum.single(g) + FormalSum.single(g, -1)).is_zero


def test_concat_product():
    a = FormalSum.single(D(2, ((1, 2),)))
    b = FormalSum.single(D(2, ((2, 1),)))
    assert concat_product(a, b) == FormalSum.single(D(2, ((1, 2), (2, 1))))
    assert concat_product(a, b) != concat_product(b, a)
    unit = FormalSum.single(D(2, ()))
    assert concat_product(unit, a) == a
    assert concat_product(a, unit) == a
    with pytest.raises(ValueError):
        concat_product(a, FormalSum.single(D(3, ((1, 2),))))


def test_concat_product_associative():
    gs = [FormalSum.single(g) for g in enumerate_graphs(2, 1)]
    s1 = gs[0] + 2 * gs[1]
    s2 = gs[2] - gs[3]
    s3 = gs[1] + gs[2]
    assert concat_product(concat_product(s1, s2), s3) == concat_product(
        s1, concat_product(s2, s3)
    )


def test_u_and_x_sums():
    quad = list(enumerate_class(2, 2, "SSC", ()))
    x = x_sum(quad)
    assert x == FormalSum(2, 2, {
        D(2, ((1, 1), (2, 2))): 1,
        D(2, ((2, 2), (1, 1))): 1,
        D(2, ((1, 2), (2, 1))): -1,
        D(2, ((2, 1), (1, 2))): -1,
    })
    assert u_sum([], n=2, k=1).is_zero
    with pytest.raises(ValueError):
        u_sum([])
    edgeless = D(2, ())
    assert x_sum([edgeless]) == FormalSum.single(edgeless, 1)  # beta0 = 2


def test_alpha_sigma():
    assert alpha(D(2, ((1, 2), (2, 1)))) == 0
    assert sigma(D(2, ((1, 2), (2, 1)))) == -1
    e = D(2, ())
    assert alpha(e) == 1 and sigma(e) == 1
    assert alpha(D(2, ((1, 2),))) == -1
    assert sigma(D(1, ((1, 1),))) == -1


def test_sum_over_subgraphs():
    cyc = D(2, ((1, 2), (2, 1)))
    assert sum_over_subgraphs(alpha, cyc) == -1
    assert sum_over_subgraphs(sigma, cyc) == 0
    assert sum_over_subgraphs(alpha, D(2, ())) == 1


def test_universal_det_small():
    assert universal_det(2, 1, ()).is_zero  # k < n - |I|
    assert universal_det(3, 1, ()).is_zero
    assert universal_det(1, 1, ()) == FormalSum.single(D(1, ((1, 1),)))
    assert universal_det(2, 2, ()) == FormalSum(2, 2, {
        D(2, ((1, 1), (2, 2))): half,
        D(2, ((2, 2), (1, 1))): half,
        D(2, ((1, 2), (2, 1))): -half,
        D(2, ((2, 1), (1, 2))): -half,
    })
    assert universal_det(2, 1, (1,)) == FormalSum.single(D(2, ((2, 2),)), -1)
    with pytest.raises(ValueError):
        universal_det(2, 1, (3,))


def test_universal_det_support_shape():
    for n, k, I in [(2, 2, ()), (3, 2, (1,)), (3, 3, ()), (2, 3, (2,))]:
        s = universal_det(n, k, I)
        for g, c in s.terms():
            cl = classify(g)
            assert cl.strongly_semiconnected
            assert cl.isolated == frozenset(I)
            # k! * coefficient is a unit
            scaled = c * Fraction(
                [1, 1, 2, 6, 24][k]
            )
            assert scaled.denominator == 1 and abs(scaled) == 1


def test_universal_codim1():
    assert universal_codim1(2, 1, 1, 2) == FormalSum.single(D(2, ((2, 1),)), 1)
    # diagonal case decomposes
    for n, k, i in [(2, 2, 1), (3, 2, 2), (2, 1, 1)]:
        assert universal_codim1(n, k, i, i) == universal_det(n, k, ()) + universal_det(
            n, k, (i,)
        )
    s = universal_codim1(3, 2, 1, 3)
    assert s == FormalSum(3, 2, {
        D(3, ((3, 1), (2, 2))): half,
        D(3, ((2, 2), (3, 1))): half,
        D(3, ((3, 2), (2, 1))): -half,
        D(3, ((2, 1), (3, 2))): -half,
    })


def test_theta_structure():
    th = theta(2)
    assert th.degrees() == [1, 3]
    assert th.part(1) == FormalSum(2, 1, {
        D(2, ((1, 2),)): -1,
        D(2, ((2, 1),)): -1,
        D(2, ((1, 1),)): 1,
        D(2, ((2, 2),)): 1,
    })
    th3 = theta(3)
    assert th3.degrees() == [2, 4]
    with pytest.raises(ValueError):
        theta(1)


def test_graded_element():
    th = theta(2)
    assert th.part(5).is_zero
    assert (th + GradedElement(2)).parts == th.parts
    doubled = 2 * th
    assert doubled.part(1) == 2 * th.part(1)


def test_distinct_permutations():
    assert sorted(distinct_permutations((1, 1, 2))) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert list(distinct_permutations(())) == [()]
    items = ((1, 2), (1, 2), (2, 1))
    perms = list(distinct_permutations(items))
    assert len(perms) == 3 and len(set(perms)) == 3


def test_class_sum_matches_stream_filter():
    for n, k, cls, I in [(2, 2, "SSC", ()), (3, 2, "AC", (1,)), (2, 3, "SSC", None), (3, 2, "AC", None)]:
        fast = class_sum(n, k, cls, I)
        slow = u_sum(enumerate_class(n, k, cls, I), n=n, k=k)
        assert fast == slow
