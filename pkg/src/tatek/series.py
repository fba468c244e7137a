"""Truncated q-series with rational exponents and cyclotomic coefficients.

A PuiseuxSeries is a finite map {exponent: coefficient} with Fraction
exponents (negatives allowed, finitely many below any bound) plus a
truncation order: terms above the truncation are unknown and dropped.
Binary operations propagate truncation conservatively, so a result is
always correct to its recorded order. A BivariateSeries layers a dummy
variable t on top, with integer t-degrees and PuiseuxSeries coefficients;
exp/log/inverse on it are t-adic.

All values are immutable and all operations pure, so anything here can be
shared freely across threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Mapping, Union

from ._kernel import convolve
from .cyclotomic import Cyclotomic, root_of_unity

Scalar = Union[int, Fraction, Cyclotomic]
Exponent = Union[int, Fraction]

# products of series with this many integral exponents inside this span
# take the dense convolution path
_DENSE_MIN_TERMS = 8
_DENSE_MAX_SPAN = 512


def _as_coeff(c: Scalar) -> Cyclotomic:
    if isinstance(c, Cyclotomic):
        return c
    return Cyclotomic.from_rational(c)


def _min_trunc(a: Fraction | None, b: Fraction | None) -> Fraction | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class PuiseuxSeries:
    """A q-series known exactly up to its truncation order."""

    __slots__ = ("terms", "truncation")

    def __init__(self, terms: Mapping[Exponent, Scalar], truncation: Exponent | None = None):
        trunc = None if truncation is None else Fraction(truncation)
        tidy: dict[Fraction, Cyclotomic] = {}
        for e, c in terms.items():
            e = Fraction(e)
            if trunc is not None and e > trunc:
                continue
            c = _as_coeff(c)
            if not c.is_zero():
                tidy[e] = c
        object.__setattr__(self, "terms", tidy)
        object.__setattr__(self, "truncation", trunc)

    def __setattr__(self, name, value):
        raise AttributeError("PuiseuxSeries values are immutable")

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(truncation: Exponent | None = None) -> "PuiseuxSeries":
        return PuiseuxSeries({}, truncation)

    @staticmethod
    def one(truncation: Exponent | None = None) -> "PuiseuxSeries":
        return PuiseuxSeries({0: 1}, truncation)

    @staticmethod
    def monomial(coeff: Scalar, exponent: Exponent, truncation: Exponent | None = None) -> "PuiseuxSeries":
        return PuiseuxSeries({Fraction(exponent): coeff}, truncation)

    # -- structure ---------------------------------------------------

    @property
    def denominator(self) -> int:
        """Least common denominator of all stored exponents."""
        d = 1
        for e in self.terms:
            d = d * e.denominator // gcd(d, e.denominator)
        return d

    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self) -> Fraction | None:
        """Lowest exponent, or None for the zero series."""
        return min(self.terms) if self.terms else None

    def coefficient(self, exponent: Exponent) -> Cyclotomic:
        return self.terms.get(Fraction(exponent), Cyclotomic.zero())

    def exponents(self) -> list[Fraction]:
        return sorted(self.terms)

    def truncated(self, truncation: Exponent | None) -> "PuiseuxSeries":
        return PuiseuxSeries(self.terms, _min_trunc(self.truncation, None if truncation is None else Fraction(truncation)))

    def is_integral(self) -> bool:
        """True when every exponent is an integer."""
        return all(e.denominator == 1 for e in self.terms)

    # -- ring operations ---------------------------------------------

    def __add__(self, other) -> "PuiseuxSeries":
        other = _coerce_series(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return PuiseuxSeries(out, _min_trunc(self.truncation, other.truncation))

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self) -> "PuiseuxSeries":
        return PuiseuxSeries({e: -c for e, c in self.terms.items()}, self.truncation)

    def __sub__(self, other):
        other = _coerce_series(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "PuiseuxSeries":
        if isinstance(other, (int, Fraction, Cyclotomic)):
            c = _as_coeff(other)
            if c.is_zero():
                return PuiseuxSeries({}, self.truncation)
            return PuiseuxSeries({e: x * c for e, x in self.terms.items()}, self.truncation)
        if not isinstance(other, PuiseuxSeries):
            return NotImplemented
        trunc = self._product_truncation(other)
        fast = _dense_rational_product(self, other, trunc)
        if fast is not None:
            return fast
        out: dict[Fraction, Cyclotomic] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = ea + eb
                if trunc is not None and e > trunc:
                    continue
                c = ca * cb
                s = out.get(e)
                out[e] = c if s is None else s + c
        return PuiseuxSeries(out, trunc)

    def __rmul__(self, other):
        return self.__mul__(other)

    def _product_truncation(self, other: "PuiseuxSeries") -> Fraction | None:
        # a known to Ta times b with valuation vb is known to Ta + vb.
        va, vb = self.valuation(), other.valuation()
        ta = None if self.truncation is None else self.truncation + (vb if vb is not None else 0)
        tb = None if other.truncation is None else other.truncation + (va if va is not None else 0)
        return _min_trunc(ta, tb)

    def __pow__(self, n: int) -> "PuiseuxSeries":
        if n < 0:
            return self.inv() ** (-n)
        out = PuiseuxSeries.one(None)
        for _ in range(n):
            out = out * self
        return out

    # -- analytic operations (truncated) -----------------------------

    def exp(self) -> "PuiseuxSeries":
        """exp of a series with strictly positive valuation."""
        if self.is_zero():
            return PuiseuxSeries.one(self.truncation)
        v = self.valuation()
        if v <= 0:
            raise ValueError("exp needs every exponent positive (zero constant term)")
        if self.truncation is None:
            raise ValueError("exp of an untruncated series does not terminate")
        out = PuiseuxSeries.one(self.truncation)
        term = PuiseuxSeries.one(self.truncation)
        k = 0
        while term.valuation() is not None and k * v <= self.truncation:
            k += 1
            term = (term * self) * Fraction(1, k)
            out = out + term
        return out

    def log(self) -> "PuiseuxSeries":
        """log of a series with constant term 1 and no negative exponents."""
        v = self.valuation()
        if self.coefficient(0) != Cyclotomic.one() or v is None or v < 0:
            raise ValueError("log needs constant term 1")
        u = self - 1
        if u.is_zero():
            return PuiseuxSeries.zero(self.truncation)
        if self.truncation is None:
            raise ValueError("log of an untruncated series does not terminate")
        v = u.valuation()
        out = PuiseuxSeries.zero(self.truncation)
        term = PuiseuxSeries.one(self.truncation)
        k = 0
        while term.valuation() is not None and k * v <= self.truncation:
            k += 1
            term = term * u
            out = out + term * Fraction((-1) ** (k - 1), k)
        return out

    def inv(self) -> "PuiseuxSeries":
        """Multiplicative inverse of a series with invertible constant term
        and valuation zero."""
        c0 = self.coefficient(0)
        if c0.is_zero() or self.valuation() != 0:
            raise ValueError("inverse needs lowest exponent 0 with an invertible constant")
        c0_inv = c0.inverse()
        u = self * c0_inv - 1
        if u.is_zero():
            return PuiseuxSeries({0: c0_inv}, self.truncation)
        if self.truncation is None:
            raise ValueError("inverse of an untruncated series does not terminate")
        v = u.valuation()
        out = PuiseuxSeries.one(self.truncation)
        term = PuiseuxSeries.one(self.truncation)
        k = 0
        while term.valuation() is not None and k * v <= self.truncation:
            k += 1
            term = term * u
            out = out + term * Fraction((-1) ** k)
        return out * c0_inv

    # -- comparison --------------------------------------------------

    def agrees_with(self, other: "PuiseuxSeries", up_to: Exponent | None = None) -> bool:
        """Equality of the parts both series actually know (and at most
        up_to, when given)."""
        bound = _min_trunc(self.truncation, other.truncation)
        if up_to is not None:
            bound = _min_trunc(bound, Fraction(up_to))
        return self.truncated(bound).terms == other.truncated(bound).terms

    def __eq__(self, other) -> bool:
        other = _coerce_series(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms and self.truncation == other.truncation

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        body = " + ".join(f"({c})q^{e}" for e, c in sorted(self.terms.items())) or "0"
        tail = "" if self.truncation is None else f" + O(q^>{self.truncation})"
        return body + tail


def _coerce_series(value) -> PuiseuxSeries:
    if isinstance(value, PuiseuxSeries):
        return value
    if isinstance(value, (int, Fraction, Cyclotomic)):
        return PuiseuxSeries({0: value})
    return NotImplemented


def _dense_rational_product(a: PuiseuxSeries, b: PuiseuxSeries, trunc):
    """Multiply two dense rational-coefficient series with integral
    exponents through the integer convolution kernel; None when the
    inputs do not fit that shape."""
    if len(a.terms) * len(b.terms) < _DENSE_MIN_TERMS:
        return None
    for s in (a, b):
        for e, c in s.terms.items():
            if e.denominator != 1 or c.order != 1:
                return None
    va, vb = int(min(a.terms)), int(min(b.terms))
    span_a = int(max(a.terms)) - va
    span_b = int(max(b.terms)) - vb
    if span_a + span_b > _DENSE_MAX_SPAN:
        return None

    def dense(s, v, span):
        den = 1
        for c in s.terms.values():
            f = c.as_fraction()
            den = den * f.denominator // gcd(den, f.denominator)
        nums = [0] * (span + 1)
        for e, c in s.terms.items():
            f = c.as_fraction()
            nums[int(e) - v] = f.numerator * (den // f.denominator)
        return nums, den

    na, da = dense(a, va, span_a)
    nb, db = dense(b, vb, span_b)
    conv = convolve(na, nb)
    den = da * db
    base = va + vb
    out = {}
    for i, n in enumerate(conv):
        if n:
            e = Fraction(base + i)
            if trunc is not None and e > trunc:
                continue
            out[e] = Cyclotomic.from_rational(Fraction(n, den))
    return PuiseuxSeries(out, trunc)


def hecke_substitute(s: PuiseuxSeries, n: int, k: int, m: int) -> PuiseuxSeries:
    """Send each term c*q^e to c*rho*q^(e*n/k), where rho is the root of
    unity with argument 2*pi*m*e/k. This is the coefficient substitution
    behind the degree-n Hecke operators; it is a ring homomorphism on
    series, and composing (n1,k1,0) with (n2,k2,0) gives (n1*n2,k1*k2,0).
    """
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if not 0 <= m < k:
        raise ValueError("m must lie in [0, k)")
    ratio = Fraction(n, k)
    out: dict[Fraction, Cyclotomic] = {}
    for e, c in s.terms.items():
        arg = Fraction(m * e.numerator, k * e.denominator)
        rho = root_of_unity(arg.denominator, arg.numerator)
        out[e * ratio] = c * rho
    trunc = None if s.truncation is None else s.truncation * ratio
    return PuiseuxSeries(out, trunc)


def scale_exponents(s: PuiseuxSeries, k: int) -> PuiseuxSeries:
    """Multiply every exponent by k (the cycle-length rescaling)."""
    return hecke_substitute(s, k, 1, 0)


class BivariateSeries:
    """Series in a dummy variable t whose coefficients are q-series.

    t-degrees are integers from 0 up to the t-truncation order.
    """

    __slots__ = ("terms", "t_truncation")

    def __init__(self, terms: Mapping[int, PuiseuxSeries], t_truncation: int):
        tidy: dict[int, PuiseuxSeries] = {}
        for n, s in terms.items():
            n = int(n)
            if n < 0:
                raise ValueError("t-degrees must be nonnegative")
            if n > t_truncation:
                continue
            if not isinstance(s, PuiseuxSeries):
                s = _coerce_series(s)
            if s.terms or s.truncation is not None:
                tidy[n] = s
        object.__setattr__(self, "terms", tidy)
        object.__setattr__(self, "t_truncation", int(t_truncation))

    def __setattr__(self, name, value):
        raise AttributeError("BivariateSeries values are immutable")

    @staticmethod
    def zero(t_truncation: int) -> "BivariateSeries":
        return BivariateSeries({}, t_truncation)

    @staticmethod
    def one(t_truncation: int) -> "BivariateSeries":
        return BivariateSeries({0: PuiseuxSeries.one()}, t_truncation)

    def coefficient(self, n: int) -> PuiseuxSeries:
        return self.terms.get(n, PuiseuxSeries.zero())

    def t_valuation(self) -> int | None:
        live = [n for n, s in self.terms.items() if s.terms]
        return min(live) if live else None

    def __add__(self, other) -> "BivariateSeries":
        other = _coerce_bivariate(other)
        if other is NotImplemented:
            return NotImplemented
        trunc = min(self.t_truncation, other.t_truncation)
        out = dict(self.terms)
        for n, s in other.terms.items():
            cur = out.get(n)
            out[n] = s if cur is None else cur + s
        return BivariateSeries(out, trunc)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self) -> "BivariateSeries":
        return BivariateSeries({n: -s for n, s in self.terms.items()}, self.t_truncation)

    def __sub__(self, other):
        other = _coerce_bivariate(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other) -> "BivariateSeries":
        if isinstance(other, (int, Fraction, Cyclotomic, PuiseuxSeries)):
            return BivariateSeries({n: s * other for n, s in self.terms.items()}, self.t_truncation)
        if not isinstance(other, BivariateSeries):
            return NotImplemented
        va, vb = self.t_valuation(), other.t_valuation()
        trunc = min(
            self.t_truncation + (vb if vb is not None else 0),
            other.t_truncation + (va if va is not None else 0),
        )
        out: dict[int, PuiseuxSeries] = {}
        for na, sa in self.terms.items():
            for nb, sb in other.terms.items():
                n = na + nb
                if n > trunc:
                    continue
                prod = sa * sb
                cur = out.get(n)
                out[n] = prod if cur is None else cur + prod
        return BivariateSeries(out, trunc)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, n: int) -> "BivariateSeries":
        if n < 0:
            return self.inv() ** (-n)
        out = BivariateSeries.one(self.t_truncation)
        for _ in range(n):
            out = out * self
        return out

    def exp(self) -> "BivariateSeries":
        """t-adic exponential; the t^0 coefficient must vanish."""
        if self.coefficient(0).terms:
            raise ValueError("exp needs zero constant term in t")
        out = BivariateSeries.one(self.t_truncation)
        term = BivariateSeries.one(self.t_truncation)
        for k in range(1, self.t_truncation + 1):
            term = (term * self) * Fraction(1, k)
            out = out + term
        return out

    def log(self) -> "BivariateSeries":
        """t-adic logarithm; the t^0 coefficient must equal 1."""
        c0 = self.coefficient(0)
        if c0.terms != {Fraction(0): Cyclotomic.one()}:
            raise ValueError("log needs constant term 1 in t")
        u = self - BivariateSeries({0: c0}, self.t_truncation)
        out = BivariateSeries.zero(self.t_truncation)
        term = BivariateSeries.one(self.t_truncation)
        for k in range(1, self.t_truncation + 1):
            term = term * u
            out = out + term * Fraction((-1) ** (k - 1), k)
        return out

    def inv(self) -> "BivariateSeries":
        """t-adic inverse; the t^0 coefficient must be an invertible series."""
        c0 = self.coefficient(0)
        c0_inv = c0.inv()  # raises if not a unit
        u = (self - BivariateSeries({0: c0}, self.t_truncation)) * c0_inv
        out = BivariateSeries.one(self.t_truncation)
        term = BivariateSeries.one(self.t_truncation)
        for k in range(1, self.t_truncation + 1):
            term = term * u
            out = out + term * Fraction((-1) ** k)
        return out * c0_inv

    def agrees_with(self, other: "BivariateSeries", t_order: int | None = None,
                    q_order: Exponent | None = None) -> bool:
        bound = min(self.t_truncation, other.t_truncation)
        if t_order is not None:
            bound = min(bound, t_order)
        for n in range(bound + 1):
            if not self.coefficient(n).agrees_with(other.coefficient(n), up_to=q_order):
                return False
        return True

    def __eq__(self, other) -> bool:
        other = _coerce_bivariate(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms and self.t_truncation == other.t_truncation

    __hash__ = None

    def __repr__(self) -> str:
        body = " + ".join(f"({s!r})t^{n}" for n, s in sorted(self.terms.items())) or "0"
        return body + f" + O(t^>{self.t_truncation})"


def _coerce_bivariate(value):
    if isinstance(value, BivariateSeries):
        return value
    return NotImplemented
