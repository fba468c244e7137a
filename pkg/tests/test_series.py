"""Puiseux/bivariate series: contract examples, truncation bookkeeping,
and the substitution homomorphism."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tatek.cyclotomic import Cyclotomic, root_of_unity
from tatek.series import BivariateSeries, PuiseuxSeries, hecke_substitute, scale_exponents

q = PuiseuxSeries.monomial(1, 1)
half = Fraction(1, 2)


@st.composite
def series(draw, min_exp=-2, max_exp=4, dens=(1, 2, 3), trunc=4):
    n_terms = draw(st.integers(0, 4))
    terms = {}
    for _ in range(n_terms):
        den = draw(st.sampled_from(dens))
        num = draw(st.integers(min_exp * den, max_exp * den))
        c = draw(st.integers(-3, 3))
        e = Fraction(num, den)
        terms[e] = terms.get(e, 0) + c
    return PuiseuxSeries(terms, trunc)


def test_difference_of_squares():
    a = PuiseuxSeries({0: 1, half: -1})
    b = PuiseuxSeries({0: 1, half: 1})
    assert a * b == PuiseuxSeries({0: 1, 1: -1})


def test_laurent_cancellation():
    assert PuiseuxSeries.monomial(1, -1) * q == PuiseuxSeries.one()


def test_geometric_series_identity():
    T = 10
    geo = PuiseuxSeries({i: 1 for i in range(T + 1)}, T)
    assert (geo * PuiseuxSeries({0: 1, 1: -1})).agrees_with(PuiseuxSeries.one(T))


def test_product_truncation_respects_valuations():
    a = PuiseuxSeries({-1: 1}, 3)  # known through q^3
    b = PuiseuxSeries({2: 1}, 3)
    assert (a * b).truncation == Fraction(2)  # 3 + (-1)
    assert (a * a).truncation == Fraction(2)


def test_unbounded_inputs_stay_exact():
    a = PuiseuxSeries({0: 1, 2: 5})
    assert (a * a).truncation is None


# -- substitution -------------------------------------------------------


def test_substitution_contract_examples():
    assert hecke_substitute(q, 2, 1, 0) == PuiseuxSeries.monomial(1, 2)
    assert hecke_substitute(q, 1, 2, 1) == PuiseuxSeries.monomial(-1, half)
    s = PuiseuxSeries({half: root_of_unity(3, 1), 2: -4}, 5)
    assert hecke_substitute(s, 1, 1, 0) == s


def test_substitution_on_negative_exponents():
    f = PuiseuxSeries.monomial(1, -1)
    out = hecke_substitute(f, 1, 2, 1)
    assert out == PuiseuxSeries.monomial(root_of_unity(2, 1), -half)


@given(series(), series(), st.integers(1, 3), st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_substitution_is_a_ring_homomorphism(a, b, n, k):
    for m in range(k):
        fa, fb = hecke_substitute(a, n, k, m), hecke_substitute(b, n, k, m)
        assert hecke_substitute(a + b, n, k, m) == fa + fb
        assert hecke_substitute(a * b, n, k, m).agrees_with(fa * fb)


@given(series(), st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.integers(1, 3))
@settings(max_examples=40, deadline=None)
def test_substitution_composes(a, n1, k1, n2, k2):
    one_then_two = hecke_substitute(hecke_substitute(a, n1, k1, 0), n2, k2, 0)
    assert one_then_two == hecke_substitute(a, n1 * n2, k1 * k2, 0)


def test_scale_exponents_is_the_cycle_rescaling():
    s = PuiseuxSeries({half: 1, 2: 3}, 4)
    assert scale_exponents(s, 3) == PuiseuxSeries({Fraction(3, 2): 1, 6: 3}, 12)


# -- exp / log / inverse ------------------------------------------------


def test_exp_of_zero():
    assert PuiseuxSeries.zero(5).exp() == PuiseuxSeries.one(5)


def test_exp_log_roundtrip():
    x = PuiseuxSeries({half: 2, 1: -1, 3: Fraction(1, 5)}, 6)
    assert x.exp().log().agrees_with(x)
    u = PuiseuxSeries({0: 1, 1: 3, 2: -2}, 6)
    assert u.log().exp().agrees_with(u)


def test_log_of_geometric_series():
    T = 6
    inv = PuiseuxSeries({0: 1, 1: -1}, T).inv()
    expect = PuiseuxSeries({m: Fraction(1, m) for m in range(1, T + 1)}, T)
    assert inv.log() == expect


@given(series(min_exp=1, max_exp=3, trunc=5), series(min_exp=1, max_exp=3, trunc=5))
@settings(max_examples=30, deadline=None)
def test_exp_turns_sums_into_products(a, b):
    assert (a + b).exp().agrees_with(a.exp() * b.exp())


def test_exp_rejects_constant_terms():
    with pytest.raises(ValueError):
        PuiseuxSeries({0: 1, 1: 1}, 4).exp()
    with pytest.raises(ValueError):
        PuiseuxSeries({-1: 1}, 4).exp()


def test_log_rejects_non_unit_constant():
    with pytest.raises(ValueError):
        PuiseuxSeries({0: 2, 1: 1}, 4).log()


def test_inverse_rejects_nonzero_valuation():
    with pytest.raises(ValueError):
        PuiseuxSeries({1: 1}, 4).inv()
    with pytest.raises(ValueError):
        PuiseuxSeries({-1: 1, 0: 1}, 4).inv()


def test_inverse_with_cyclotomic_unit_constant():
    c = root_of_unity(5, 2) + 1
    s = PuiseuxSeries({0: c, 1: 1}, 4)
    assert (s * s.inv()).agrees_with(PuiseuxSeries.one(4))


# -- bivariate ----------------------------------------------------------


def test_bivariate_exp_generates_partitions():
    sigma = lambda m: sum(d for d in range(1, m + 1) if m % d == 0)
    T = 8
    src = BivariateSeries({m: PuiseuxSeries({0: Fraction(sigma(m), m)}) for m in range(1, T + 1)}, T)
    parts = [1, 1, 2, 3, 5, 7, 11, 15, 22]
    out = src.exp()
    for n, p in enumerate(parts):
        assert out.coefficient(n).coefficient(0).as_fraction() == p


def test_bivariate_log_of_geometric():
    T = 6
    g = BivariateSeries({0: PuiseuxSeries.one(), 1: -PuiseuxSeries.one()}, T).inv()
    L = g.log()
    for m in range(1, T + 1):
        assert L.coefficient(m).coefficient(0).as_fraction() == Fraction(1, m)


def test_bivariate_inverse_roundtrip():
    x = BivariateSeries({0: PuiseuxSeries.one(), 1: q, 2: q * q - 1}, 5)
    assert (x * x.inv()).agrees_with(BivariateSeries.one(5))


def test_bivariate_exp_log_requirements():
    with pytest.raises(ValueError):
        BivariateSeries({0: PuiseuxSeries.one()}, 3).exp()
    with pytest.raises(ValueError):
        BivariateSeries({0: q}, 3).log()


def test_bivariate_exp_is_exponential():
    a = BivariateSeries({1: q}, 4)
    b = BivariateSeries({2: PuiseuxSeries({half: 1})}, 4)
    assert (a + b).exp().agrees_with(a.exp() * b.exp())


def test_dense_product_path_matches_sparse_loop():
    from tatek.series import _dense_rational_product

    rng = __import__("random").Random(17)
    for _ in range(40):
        a_terms = {rng.randint(-3, 20): rng.randint(-9, 9) for _ in range(rng.randint(3, 12))}
        b_terms = {rng.randint(-3, 20): rng.randint(-9, 9) for _ in range(rng.randint(3, 12))}
        trunc = rng.choice([None, 10, 25])
        a = PuiseuxSeries(a_terms, trunc)
        b = PuiseuxSeries(b_terms, trunc)
        product = a * b  # may take either path depending on shape
        slow = {}
        bound = a._product_truncation(b)
        for ea, ca in a.terms.items():
            for eb, cb in b.terms.items():
                e = ea + eb
                if bound is not None and e > bound:
                    continue
                slow[e] = slow.get(e, Cyclotomic.zero()) + ca * cb
        assert product == PuiseuxSeries(slow, bound)
        dense = _dense_rational_product(a, b, bound)
        if dense is not None:
            assert dense == product
