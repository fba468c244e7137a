"""Devoto elements: evaluation, ring operations, orbifold sum, rotation
condition."""

import random
from fractions import Fraction

import pytest

from tatek.devoto import (DevotoElement, check_devoto, epsilon, external_product,
                          random_devoto_element, rescale, restrict_along, trivial_part)
from tatek.groups import (Homomorphism, cyclic_group, identity_hom, perm_from_cycles,
                          symmetric_group, trivial_group)
from tatek.series import PuiseuxSeries

half = Fraction(1, 2)


def sign_element(Z2):
    """The standard valid element: trivial on [e], sign character times
    q^(1/2) on [s]."""
    e = Z2.identity
    s = next(g for g in Z2.elements if g != e)
    return DevotoElement(Z2, {
        (e, e): PuiseuxSeries.one(),
        (e, s): PuiseuxSeries.one(),
        (s, e): PuiseuxSeries.monomial(1, half),
        (s, s): PuiseuxSeries.monomial(-1, half),
    })


def test_eval_contract_examples():
    T = trivial_group()
    one = DevotoElement.constant(T, 1)
    assert one.eval(T.identity, T.identity) == PuiseuxSeries.one()
    x = DevotoElement(T, {(T.identity, T.identity): PuiseuxSeries.monomial(1, 1)})
    assert x.eval(T.identity, T.identity) == PuiseuxSeries.monomial(1, 1)


def test_eval_is_conjugation_invariant():
    S3 = symmetric_group(3)
    x = random_devoto_element(S3, random.Random(2), truncation=2)
    for g in S3.elements:
        for h in S3.centralizer(g):
            for a in S3.elements:
                assert x.eval(g, h) == x.eval(S3.conjugate(a, g), S3.conjugate(a, h))


def test_eval_rejects_noncommuting():
    S3 = symmetric_group(3)
    x = DevotoElement.constant(S3, 1)
    with pytest.raises(ValueError):
        x.eval((1, 0, 2), (0, 2, 1))


def test_denominator_invariant_enforced():
    Z2 = cyclic_group(2)
    e = Z2.identity
    with pytest.raises(ValueError):
        DevotoElement(Z2, {(e, e): PuiseuxSeries.monomial(1, half)})


def test_restriction():
    S3 = symmetric_group(3)
    x = random_devoto_element(S3, random.Random(4), truncation=2)
    assert restrict_along(x, identity_hom(S3)).agrees_with(x)

    T = trivial_group()
    incl = Homomorphism(T, S3, {T.identity: S3.identity})
    y = restrict_along(x, incl)
    assert y.eval(T.identity, T.identity) == x.eval(S3.identity, S3.identity)

    Z2 = cyclic_group(2)
    s = next(g for g in Z2.elements if g != Z2.identity)
    swap = perm_from_cycles(3, [(0, 1)])
    alpha = Homomorphism(Z2, S3, {Z2.identity: S3.identity, s: swap})
    z = restrict_along(x, alpha)
    for h1 in Z2.elements:
        for h2 in Z2.elements:
            assert z.eval(h1, h2) == x.eval(alpha(h1), alpha(h2))


def test_external_product_examples():
    Z2 = cyclic_group(2)
    x = sign_element(Z2)
    one = DevotoElement.constant(Z2, 1)
    assert (x * one).agrees_with(x)

    # scalar q^(1/2) on the [s] summand squares to q under the product
    e = Z2.identity
    s = next(g for g in Z2.elements if g != e)
    half_el = DevotoElement(Z2, {(s, e): PuiseuxSeries.monomial(1, half),
                                 (s, s): PuiseuxSeries.monomial(1, half)})
    prod = external_product(half_el, half_el)
    assert prod.eval((s, s), (e, e)) == PuiseuxSeries.monomial(1, 1)

    # internal product multiplies character values pointwise
    internal = x * x
    for g in Z2.elements:
        for h in Z2.elements:
            assert internal.eval(g, h) == x.eval(g, h) * x.eval(g, h)


def test_rescale():
    T = trivial_group()
    x = DevotoElement.constant(T, PuiseuxSeries.monomial(1, 1))
    assert rescale(x, 1) == x
    y = rescale(x, 2)
    assert y.level == 2
    assert y.eval(T.identity, T.identity) == PuiseuxSeries.monomial(1, half)
    assert rescale(rescale(x, 2), 3) == rescale(x, 6)


def test_epsilon_examples():
    S3 = symmetric_group(3)
    assert epsilon(DevotoElement.constant(S3, 1)) == PuiseuxSeries({0: 3})
    assert epsilon(DevotoElement.constant(S3, 0)).is_zero()
    Z2 = cyclic_group(2)
    # all four commuting pairs of Z/2, averaged with the 1/|G| prefactor
    assert epsilon(sign_element(Z2)) == PuiseuxSeries.one()


def test_check_devoto_examples():
    Z2 = cyclic_group(2)
    e = Z2.identity
    s = next(g for g in Z2.elements if g != e)
    supported_on_e = DevotoElement(Z2, {(e, e): PuiseuxSeries.monomial(2, 1),
                                        (e, s): PuiseuxSeries.monomial(-1, 3)})
    assert check_devoto(supported_on_e) == (True, None)
    assert check_devoto(sign_element(Z2)) == (True, None)
    bad = DevotoElement(Z2, {(s, e): PuiseuxSeries.monomial(1, half),
                             (s, s): PuiseuxSeries.monomial(1, half)})
    ok, witness = check_devoto(bad)
    assert not ok
    assert witness[0][0] == s and witness[1] == half


def test_trivial_part_examples():
    S3 = symmetric_group(3)
    one = DevotoElement.constant(S3, 1)
    assert trivial_part(one, S3.identity) == PuiseuxSeries.one()
    Z2 = cyclic_group(2)
    s = next(g for g in Z2.elements if g != Z2.identity)
    assert trivial_part(sign_element(Z2), s).is_zero()
    # regular character of Z/3 averages to multiplicity 1 at the identity
    Z3 = cyclic_group(3)
    e = Z3.identity
    reg = DevotoElement(Z3, {(e, h): PuiseuxSeries({0: (3 if h == e else 0)})
                             for h in Z3.elements})
    assert trivial_part(reg, e) == PuiseuxSeries.one()


def test_epsilon_integrality_on_valid_elements():
    rng = random.Random(11)
    for maker in (lambda: cyclic_group(2), lambda: cyclic_group(3), lambda: symmetric_group(3)):
        G = maker()
        for _ in range(6):
            x = random_devoto_element(G, rng, truncation=2)
            assert check_devoto(x)[0]
            assert epsilon(x).is_integral()
            for g in G.class_representatives():
                assert trivial_part(x, g).is_integral()


def test_products_of_valid_elements_are_valid():
    rng = random.Random(13)
    for G in (cyclic_group(2), cyclic_group(3)):
        for _ in range(5):
            x = random_devoto_element(G, rng, truncation=2)
            y = random_devoto_element(G, rng, truncation=2)
            assert check_devoto(x * y)[0]
            prod = external_product(x, y)
            assert check_devoto(prod)[0]


def test_restriction_respects_products_and_rescale():
    Z2 = cyclic_group(2)
    rng = random.Random(17)
    x = random_devoto_element(Z2, rng, truncation=2)
    y = random_devoto_element(Z2, rng, truncation=2)
    alpha = identity_hom(Z2)
    assert restrict_along(x * y, alpha).agrees_with(restrict_along(x, alpha) * restrict_along(y, alpha))
    assert restrict_along(rescale(x, 2), alpha) == rescale(restrict_along(x, alpha), 2)


def test_epsilon_of_external_product_with_one():
    # the unit lives over the trivial group (the monoidal unit of the
    # external product); tensoring with it preserves the orbifold sum
    Z2 = cyclic_group(2)
    rng = random.Random(19)
    x = random_devoto_element(Z2, rng, truncation=2)
    one = DevotoElement.constant(trivial_group(), 1)
    assert epsilon(external_product(x, one)).agrees_with(epsilon(x))


def test_random_elements_with_negative_exponents():
    rng = random.Random(29)
    Z3 = cyclic_group(3)
    for _ in range(5):
        x = random_devoto_element(Z3, rng, truncation=2, allow_negative=True)
        assert check_devoto(x)[0]
        assert epsilon(x).is_integral()


def test_higher_level_elements_satisfy_their_rotation_condition():
    rng = random.Random(31)
    for G in (cyclic_group(2), cyclic_group(3), symmetric_group(3)):
        for _ in range(4):
            x = random_devoto_element(G, rng, truncation=2, level=2)
            assert x.level == 2
            assert check_devoto(x)[0]


def test_rescaling_preserves_validity():
    rng = random.Random(37)
    for G in (cyclic_group(3), symmetric_group(3)):
        x = random_devoto_element(G, rng, truncation=2)
        for k in (2, 3, 6):
            y = rescale(x, k)
            assert y.level == k
            assert check_devoto(y)[0]
            # exponent denominators divide level * |g| per summand
            for (g, _), s in y.table.items():
                assert all((e * k * G.order_of(g)).denominator == 1 for e in s.terms)
