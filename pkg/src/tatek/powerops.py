"""Power operations on commuting-pair class functions.

The topological operation multiplies values over the cycles of a
permutation with exponents stretched by the cycle lengths. The stringy
operation refines it through the orbit traversal: the value at a
commuting wreath pair is the product, over the orbit data, of the value
at (holonomy, multiplier) pushed through the exponent/root-of-unity
substitution. Averaging over transitive pair classes gives the Hecke
operators; averaging over all commuting pairs gives the symmetric powers,
which are also reachable through exp of the Hecke generating series. The
two symmetric-power routes share nothing past the substitution primitive,
so their agreement (checked in the test suite) is a real identity, not a
tautology.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .devoto import DevotoElement, restrict_along
from .groups import FiniteGroup, symmetric_group
from .series import BivariateSeries, PuiseuxSeries, hecke_substitute, scale_exponents
from .wreath import (MINIMAL_CONVENTION, OrbitConvention, WreathElement, WreathGroup,
                     cycles_of, iota_hom, orbit_data, wreath)


class TransitiveClass(NamedTuple):
    """A commuting pair of S_n generating a transitive subgroup, up to
    simultaneous conjugation: N cycles of length k with wrap offset m."""
    orbit_size: int    # N
    cycle_length: int  # k
    shift: int         # m in [0, k)


def transitive_classes(n: int) -> list[TransitiveClass]:
    """All transitive classes for degree n (complete and duplicate-free;
    there are sigma(n) of them)."""
    if n < 1:
        raise ValueError("degree must be positive")
    out = []
    for k in range(1, n + 1):
        if n % k == 0:
            out.extend(TransitiveClass(n // k, k, m) for m in range(k))
    return out


def p_top_eval(G: FiniteGroup, x, w: WreathElement) -> PuiseuxSeries:
    """Value of the topological power operation on the wreath element w.

    x is a class function on G valued in series: either a mapping from
    group elements to PuiseuxSeries or a single series (a constant class
    function). The value is the product over the cycles of w's
    permutation of x at the cycle product, exponents times cycle length.
    """
    base, perm = w.base, w.perm
    if len(base) != len(perm) or any(g not in G for g in base):
        raise ValueError("malformed wreath element")
    out = PuiseuxSeries.one()
    for cycle in cycles_of(perm):
        prod = G.identity
        for point in cycle:
            prod = G.mul(base[point], prod)
        if isinstance(x, PuiseuxSeries):
            value = x
        else:
            # a mapping may be given on class representatives only
            value = x.get(prod)
            if value is None:
                value = x.get(G.class_rep(prod))
            if value is None:
                raise ValueError(f"class function has no value at {prod!r}")
        out = out * scale_exponents(value, len(cycle))
    return out


def s_top_total(x: PuiseuxSeries, t_order: int) -> BivariateSeries:
    """Total topological symmetric power: sum over n of t^n times the
    average of the power-operation values over the symmetric group."""
    v = x.valuation()
    if not x.is_integral() or (v is not None and v < 0):
        raise ValueError("input must have integral exponents bounded below by 0")
    from .groups import trivial_group

    T = trivial_group()
    e = T.identity
    coeffs = {0: PuiseuxSeries.one(x.truncation)}
    factorial = 1
    for n in range(1, t_order + 1):
        factorial *= n
        Sn = symmetric_group(n)
        total = PuiseuxSeries.zero()
        for tau in Sn.elements:
            total = total + p_top_eval(T, x, WreathElement((e,) * n, tau))
        coeffs[n] = total * Fraction(1, factorial)
    return BivariateSeries(coeffs, t_order)


# -- the stringy operation ----------------------------------------------


def _substituted_value(x: DevotoElement, cache: dict, datum) -> PuiseuxSeries:
    k, N, M = datum.cycle_length, datum.orbit_size, datum.shift
    rep = x.group.pair_class_rep(datum.holonomy, datum.multiplier)
    key = (rep, N, k, M)
    got = cache.get(key)
    if got is None:
        got = cache[key] = hecke_substitute(x.table[rep], N, k, M)
    return got


def p_str(x: DevotoElement, n: int, wreath_group: WreathGroup | None = None,
          convention: OrbitConvention = MINIMAL_CONVENTION) -> DevotoElement:
    """The stringy power operation, landing over the wreath product.

    The value at a commuting pair of wreath elements is the product over
    the orbit data of the substituted values of x; x must have level 1
    (and is expected to satisfy the rotation condition, which the output
    then inherits).
    """
    if x.level != 1:
        raise ValueError("power operations take level-1 input")
    G = x.group
    W = wreath_group if wreath_group is not None else wreath(G, n)
    if not (isinstance(W, WreathGroup) and W.base_group is G and W.copies == n):
        raise ValueError("provided wreath group does not match")
    cache: dict = {}
    table = {}
    for (w, c) in W.commuting_pair_classes():
        value = PuiseuxSeries.one()
        for datum in orbit_data(G, w.base, w.perm, c.base, c.perm,
                                convention=convention, check=False):
            value = value * _substituted_value(x, cache, datum)
        table[(w, c)] = value
    return DevotoElement(W, table, level=1)


def hecke_T(x: DevotoElement, n: int) -> DevotoElement:
    """Degree-n Hecke operator: the average over transitive classes of
    the substituted values at (g^k, g^-m h^N)."""
    if x.level != 1:
        raise ValueError("Hecke operators take level-1 input")
    G = x.group
    classes = transitive_classes(n)
    table = {}
    for (g, h) in x.group.commuting_pair_classes():
        total = PuiseuxSeries.zero()
        for N, k, m in classes:
            pair = (G.power(g, k), G.mul(G.power(G.inv(g), m), G.power(h, N)))
            total = total + hecke_substitute(x.eval(*pair), N, k, m)
        table[(g, h)] = total * Fraction(1, n)
    return DevotoElement(G, table, level=1)


def hecke_scalar(s: PuiseuxSeries, n: int) -> PuiseuxSeries:
    """Hecke operator on a bare q-series (the trivial-group case)."""
    total = PuiseuxSeries.zero()
    for N, k, m in transitive_classes(n):
        total = total + hecke_substitute(s, N, k, m)
    return total * Fraction(1, n)


def sym_str(x: DevotoElement, n: int, method: str = "exp") -> DevotoElement:
    """n-th stringy symmetric power.

    brute: average over all commuting pairs of S_n of the product of
    substituted values over the orbits of the pair (through the diagonal
    orbit traversal). exp: coefficient of t^n in exp of the Hecke
    generating series. The two agree exactly; they share no code path
    past the substitution primitive.
    """
    if method == "brute":
        return _sym_brute(x, n)
    if method == "exp":
        return _sym_exp_total(x, n)[n]
    raise ValueError(f"unknown method {method!r}")


def _sym_brute(x: DevotoElement, n: int) -> DevotoElement:
    if x.level != 1:
        raise ValueError("symmetric powers take level-1 input")
    G = x.group
    if n == 0:
        return DevotoElement.constant(G, PuiseuxSeries.one(x.truncation()))
    Sn = symmetric_group(n)
    # orbit parameter profiles (multiset of (k, N, m)) with multiplicities
    profiles: dict[tuple, int] = {}
    for sigma in Sn.elements:
        for tau in Sn.centralizer(sigma):
            e = G.identity
            data = orbit_data(G, (e,) * n, sigma, (e,) * n, tau, check=False)
            key = tuple(sorted((d.cycle_length, d.orbit_size, d.shift) for d in data))
            profiles[key] = profiles.get(key, 0) + 1
    factorial = 1
    for i in range(2, n + 1):
        factorial *= i
    table = {}
    for (g, h) in G.commuting_pair_classes():
        cache: dict = {}

        def substituted(k, N, m):
            got = cache.get((k, N, m))
            if got is None:
                pair = (G.power(g, k), G.mul(G.power(G.inv(g), m), G.power(h, N)))
                got = cache[(k, N, m)] = hecke_substitute(x.eval(*pair), N, k, m)
            return got

        total = PuiseuxSeries.zero()
        for profile, count in profiles.items():
            value = PuiseuxSeries.one()
            for (k, N, m) in profile:
                value = value * substituted(k, N, m)
            total = total + value * count
        table[(g, h)] = total * Fraction(1, factorial)
    return DevotoElement(G, table, level=1)


def _sym_exp_total(x: DevotoElement, t_order: int) -> list[DevotoElement]:
    """All symmetric powers up to t_order via exp of the Hecke series."""
    G = x.group
    hecke = [hecke_T(x, m) for m in range(1, t_order + 1)]
    out_tables: list[dict] = [dict() for _ in range(t_order + 1)]
    for pair in G.commuting_pair_classes():
        gen = BivariateSeries({m: hecke[m - 1].table[pair] for m in range(1, t_order + 1)},
                              t_order)
        total = gen.exp()
        for d in range(t_order + 1):
            out_tables[d][pair] = total.coefficient(d)
    return [DevotoElement(G, table, level=1) for table in out_tables]


def sym_total(x: DevotoElement, t_order: int, method: str = "exp") -> list[DevotoElement]:
    """Symmetric powers 0..t_order as a list (the total symmetric power,
    one Devoto element per t-degree)."""
    if method == "exp":
        return _sym_exp_total(x, t_order)
    if method == "brute":
        return [_sym_brute(x, d) for d in range(t_order + 1)]
    raise ValueError(f"unknown method {method!r}")


def lambda_str_total(x: DevotoElement, t_order: int, method: str = "exp") -> list[DevotoElement]:
    """Total stringy exterior power: the t-adic inverse of the total
    symmetric power, pointwise per pair class."""
    sym = sym_total(x, t_order, method=method)
    G = x.group
    tables: list[dict] = [dict() for _ in range(t_order + 1)]
    for pair in G.commuting_pair_classes():
        series = BivariateSeries({d: sym[d].table[pair] for d in range(t_order + 1)}, t_order)
        inverse = series.inv()
        for d in range(t_order + 1):
            tables[d][pair] = inverse.coefficient(d)
    return [DevotoElement(G, table, level=1) for table in tables]


# -- axiom verification ---------------------------------------------------


class VerificationReport(NamedTuple):
    ok: bool
    checked: int
    failures: tuple[str, ...]

    def __str__(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        body = f"{status} ({self.checked} comparisons)"
        if self.failures:
            body += "\n" + "\n".join("  " + f for f in self.failures)
        return body


def compare_class_functions(a: DevotoElement, b: DevotoElement, label: str = "",
                            up_to=None, min_known=None) -> VerificationReport:
    """Entrywise comparison of two elements over the same group, to the
    common knowledge bound. With min_known set, an entry whose recorded
    truncation falls below that bound counts as a failure (the comparison
    would otherwise silently weaken)."""
    if a.group is not b.group:
        raise ValueError("elements live over different groups")
    failures = []
    checked = 0
    for pair, s in a.table.items():
        checked += 1
        other = b.table[pair]
        if min_known is not None:
            for side, name in ((s, "left"), (other, "right")):
                if side.truncation is not None and side.truncation < min_known:
                    failures.append(f"{label} {name} side only known to "
                                    f"{side.truncation} < {min_known} at {pair!r}")
        if not s.agrees_with(other, up_to=up_to):
            failures.append(f"{label} mismatch at pair class {pair!r}: "
                            f"{s!r} vs {other!r}")
    return VerificationReport(not failures, checked, tuple(failures))


def verify_iterated(x: DevotoElement, n: int, m: int,
                    size_cap: int = 20000) -> VerificationReport:
    """Iterated powers: restricting the degree-(n*m) operation along the
    flattening embedding must equal applying degree m then degree n."""
    if n * m == 1:
        return VerificationReport(True, 0, ())
    G = x.group
    inner = wreath(G, m, size_cap)
    nested = wreath(inner, n, size_cap)
    flat = wreath(G, n * m, size_cap)
    lhs = restrict_along(p_str(x, n * m, wreath_group=flat), iota_hom(nested, flat))
    rhs = p_str(p_str(x, m, wreath_group=inner), n, wreath_group=nested)
    return compare_class_functions(lhs, rhs, label=f"iterated ({n},{m})")
