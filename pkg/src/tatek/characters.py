"""Character-level representation theory for the stringy Euler classes.

Characters are class functions with cyclotomic values. Exterior and
symmetric powers are computed through power sums (Newton's identities),
eigenspace characters of a cyclic action through the orthogonality
projection, and the stringy Euler class of a character assembles, per
class [g], the ordinary Euler factor of the fixed subcharacter with the
exterior-power factors of the rotation eigenspaces at fractional q
powers. The wreath-sum character and the eigenvalue bookkeeping needed to
compare Euler classes with power operations live here too.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping

from .cyclotomic import Cyclotomic, root_of_unity
from .devoto import DevotoElement
from .groups import FiniteGroup
from .powerops import VerificationReport, compare_class_functions, p_str
from .series import PuiseuxSeries
from .wreath import WreathElement, WreathGroup, wreath


def _as_cyc(v) -> Cyclotomic:
    return v if isinstance(v, Cyclotomic) else Cyclotomic.from_rational(v)


class RepCharacter:
    """A class function on a group with cyclotomic values (the character
    of a virtual representation)."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values: Mapping, check_genuine: bool = False):
        table = {}
        for g, v in values.items():
            rep = group.class_rep(g)
            v = _as_cyc(v)
            if rep in table and table[rep] != v:
                raise ValueError(f"conflicting values on the class of {g!r}")
            table[rep] = v
        for rep in group.class_representatives():
            table.setdefault(rep, Cyclotomic.zero())
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "values", table)
        if check_genuine:
            for g in group.class_representatives():
                if self.value(group.inv(g)) != self.value(g).conjugate():
                    raise ValueError("value at inverses is not the conjugate; "
                                     "not a genuine character")

    def __setattr__(self, name, value):
        raise AttributeError("RepCharacter values are immutable")

    @staticmethod
    def trivial(group: FiniteGroup, dim: int = 1) -> "RepCharacter":
        return RepCharacter(group, {g: dim for g in group.class_representatives()})

    @staticmethod
    def regular(group: FiniteGroup) -> "RepCharacter":
        return RepCharacter(group, {group.identity: len(group)})

    @staticmethod
    def permutation(group: FiniteGroup) -> "RepCharacter":
        """Character of the defining permutation action (fixed points)."""
        return RepCharacter(group, {g: sum(1 for i, im in enumerate(g) if im == i)
                                    for g in group.class_representatives()})

    def value(self, g) -> Cyclotomic:
        return self.values[self.group.class_rep(g)]

    def dim(self) -> Fraction:
        return self.value(self.group.identity).as_fraction()

    def __add__(self, other: "RepCharacter") -> "RepCharacter":
        if self.group is not other.group:
            raise ValueError("characters live over different groups")
        return RepCharacter(self.group, {g: v + other.values[g] for g, v in self.values.items()})

    def __mul__(self, other):
        if isinstance(other, RepCharacter):
            if self.group is not other.group:
                raise ValueError("characters live over different groups")
            return RepCharacter(self.group,
                                {g: v * other.values[g] for g, v in self.values.items()})
        return RepCharacter(self.group, {g: v * other for g, v in self.values.items()})

    def conjugate(self) -> "RepCharacter":
        return RepCharacter(self.group, {g: v.conjugate() for g, v in self.values.items()})

    def dual(self) -> "RepCharacter":
        return RepCharacter(self.group, {g: self.value(self.group.inv(g))
                                         for g in self.group.class_representatives()})

    def complexified(self) -> "RepCharacter":
        """Character of the underlying real form's complexification,
        chi + conj(chi)."""
        return self + self.conjugate()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepCharacter):
            return NotImplemented
        return self.group is other.group and self.values == other.values

    __hash__ = None

    def __repr__(self) -> str:
        return f"RepCharacter({self.group.name}, dim {self.values[self.group.identity]})"


# -- eigenspace projections ---------------------------------------------


def eigen_multiplicity(chi: RepCharacter, g, j: int) -> int:
    """Multiplicity of the eigenvalue exp(2*pi*i*j/|g|) of g acting on
    the representation with character chi."""
    l = chi.group.order_of(g)
    if not 0 <= j < l:
        raise ValueError(f"eigenvalue exponent {j} outside [0, {l})")
    acc = Cyclotomic.zero()
    x = chi.group.identity
    for s in range(l):
        acc = acc + chi.value(x) * root_of_unity(l, -j * s)
        x = chi.group.mul(x, g)
    acc = acc * Fraction(1, l)
    if not acc.is_rational() or acc.as_fraction().denominator != 1:
        raise ValueError(f"non-integral eigenspace multiplicity {acc}; "
                         "the character is not genuine on this cyclic group")
    m = int(acc.as_fraction())
    if m < 0:
        raise ValueError(f"negative eigenspace multiplicity {m}")
    return m


def eigen_multiplicity_root(chi: RepCharacter, g, zeta: Cyclotomic) -> int:
    """Multiplicity of an arbitrary root of unity as an eigenvalue of g."""
    l = chi.group.order_of(g)
    if not (zeta ** l == Cyclotomic.one()):
        return 0
    acc = Cyclotomic.zero()
    x = chi.group.identity
    zeta_inv = zeta.inverse()
    power = Cyclotomic.one()
    for s in range(l):
        acc = acc + chi.value(x) * power
        x = chi.group.mul(x, g)
        power = power * zeta_inv
    acc = acc * Fraction(1, l)
    if not acc.is_rational() or acc.as_fraction().denominator != 1:
        raise ValueError(f"non-integral multiplicity {acc}")
    return int(acc.as_fraction())


def age(chi: RepCharacter, g, doubled: bool = False) -> Fraction:
    """Weighted sum of rotation-eigenvalue exponents, sum_j (j/l) d_j over
    nontrivial eigenvalues. `doubled` applies the real-dimension factor 2
    convention; neither convention is privileged."""
    l = chi.group.order_of(g)
    total = Fraction(0)
    for j in range(1, l):
        total += Fraction(j, l) * eigen_multiplicity(chi, g, j)
    return 2 * total if doubled else total


# -- exterior / symmetric powers via power sums ---------------------------


def _power_series_coeffs(power_sum: Callable[[int], Cyclotomic], kind: str,
                         t_order: int) -> list[Cyclotomic]:
    """Coefficients of Lambda_t (kind='lambda') or Sym_t (kind='sym') from
    the power sums, by Newton's identities."""
    coeffs = [Cyclotomic.one()]
    for r in range(1, t_order + 1):
        acc = Cyclotomic.zero()
        for i in range(1, r + 1):
            term = power_sum(i) * coeffs[r - i]
            if kind == "lambda" and i % 2 == 0:
                term = -term
            acc = acc + term
        coeffs.append(acc * Fraction(1, r))
    return coeffs


def lambda_sym_char(chi: RepCharacter, h, kind: str, t_order: int) -> list[Cyclotomic]:
    """Coefficient list of the total exterior (kind='lambda') or symmetric
    (kind='sym') power of chi, evaluated at h: entry r is the character of
    the r-th power at h. Lambda_{-t} times Sym_t is 1 at every h."""
    if kind not in ("lambda", "sym"):
        raise ValueError("kind must be 'lambda' or 'sym'")
    G = chi.group
    powers = [G.identity]
    for _ in range(t_order):
        powers.append(G.mul(powers[-1], h))
    return _power_series_coeffs(lambda i: chi.value(powers[i]), kind, t_order)


def _lambda_at_minus_one(power_sum: Callable[[int], Cyclotomic], dim: int) -> Cyclotomic:
    """Lambda_{-1} = alternating sum of the exterior powers, which kills
    any character with a trivial summand."""
    coeffs = _power_series_coeffs(power_sum, "lambda", dim)
    total = Cyclotomic.zero()
    for r, c in enumerate(coeffs):
        total = total + (c if r % 2 == 0 else -c)
    return total


# -- wreath characters -----------------------------------------------------


def wreath_sum_character(chi: RepCharacter, n: int,
                         wreath_group: WreathGroup | None = None) -> RepCharacter:
    """Character of the n-fold permutation-twisted direct sum: the value
    at (g, sigma) sums chi over the entries at fixed points of sigma."""
    G = chi.group
    W = wreath_group if wreath_group is not None else wreath(G, n)
    values = {}
    for w in W.class_representatives():
        acc = Cyclotomic.zero()
        for i, image in enumerate(w.perm):
            if image == i:
                acc = acc + chi.value(w.base[i])
        values[w] = acc
    return RepCharacter(W, values)


def _wreath_value(G: FiniteGroup, chi: RepCharacter, w: WreathElement) -> Cyclotomic:
    acc = Cyclotomic.zero()
    for i, image in enumerate(w.perm):
        if image == i:
            acc = acc + chi.value(w.base[i])
    return acc


def eigen_cycle_check(chi: RepCharacter, base, perm, zeta: Cyclotomic):
    """Compare the multiplicity of zeta as an eigenvalue of (base, perm)
    on the twisted sum against the sum over k-cycles of the multiplicity
    of zeta^k for the cycle product. Returns (equal, lhs, rhs)."""
    from .groups import cycles_of, perm_inv, perm_mul

    G = chi.group
    n = len(perm)
    w = WreathElement(tuple(base), tuple(perm))

    def wmul(a: WreathElement, b: WreathElement) -> WreathElement:
        sig_inv = perm_inv(a.perm)
        return WreathElement(tuple(G.mul(a.base[i], b.base[sig_inv[i]]) for i in range(n)),
                             perm_mul(a.perm, b.perm))

    e = WreathElement((G.identity,) * n, tuple(range(n)))
    powers = [e]
    x = w
    while x != e:
        powers.append(x)
        x = wmul(x, w)
    L = len(powers)
    if not (zeta ** L == Cyclotomic.one()):
        lhs = 0
    else:
        acc = Cyclotomic.zero()
        zeta_inv = zeta.inverse()
        zp = Cyclotomic.one()
        for s in range(L):
            acc = acc + _wreath_value(G, chi, powers[s]) * zp
            zp = zp * zeta_inv
        acc = acc * Fraction(1, L)
        if not acc.is_rational() or acc.as_fraction().denominator != 1:
            raise ValueError(f"non-integral multiplicity {acc}")
        lhs = int(acc.as_fraction())

    rhs = 0
    for cycle in cycles_of(perm):
        prod = G.identity
        for point in cycle:
            prod = G.mul(base[point], prod)
        rhs += eigen_multiplicity_root(chi, prod, zeta ** len(cycle))
    return lhs == rhs, lhs, rhs


# -- stringy Euler classes --------------------------------------------------


def euler_str(chi: RepCharacter, q_order) -> DevotoElement:
    """Stringy Euler class of a genuine character, as a level-1 element.

    The [g]-summand at h multiplies the ordinary Euler factor of the dual
    fixed subcharacter by the exterior-power factor of each rotation
    eigenspace of the complexification at q^(j/l), for all j with
    j/l within the truncation.
    """
    G = chi.group
    T = Fraction(q_order)
    chi_c = chi.complexified()
    table = {}
    for (g, h) in G.commuting_pair_classes():
        l = G.order_of(g)
        g_powers = [G.identity]
        for _ in range(l - 1):
            g_powers.append(G.mul(g_powers[-1], g))

        h_powers = {0: G.identity}

        def h_power(i: int):
            got = h_powers.get(i)
            if got is None:
                got = h_powers[i] = G.mul(h_powers[i - 1], h)
            return got

        def fixed_dual_power_sum(i: int) -> Cyclotomic:
            hi = G.inv(h_power(i))
            acc = Cyclotomic.zero()
            for gs in g_powers:
                acc = acc + chi.value(G.mul(gs, hi))
            return acc * Fraction(1, l)

        fixed_dim = eigen_multiplicity(chi, g, 0)
        value = PuiseuxSeries({0: _lambda_at_minus_one(fixed_dual_power_sum, fixed_dim)}, T)

        j = 1
        while Fraction(j, l) <= T:
            jm = j % l

            def eigen_power_sum(i: int, jm=jm) -> Cyclotomic:
                # trace of h^i on the zeta_l^jm eigenspace of g, by the
                # orthogonality projection
                hi = h_power(i)
                acc = Cyclotomic.zero()
                for s, gs in enumerate(g_powers):
                    acc = acc + chi_c.value(G.mul(gs, hi)) * root_of_unity(l, -jm * s)
                return acc * Fraction(1, l)

            dim_j = eigen_multiplicity(chi_c, g, jm)
            if dim_j:
                exp = Fraction(j, l)
                coeffs = _power_series_coeffs(eigen_power_sum, "lambda", dim_j)
                factor = PuiseuxSeries(
                    {exp * r: (c if r % 2 == 0 else -c) for r, c in enumerate(coeffs)}, T)
                value = value * factor
            j += 1
        table[(g, h)] = value
    return DevotoElement(G, table, level=1)


def verify_hinfty(chi: RepCharacter, n: int, q_order,
                  size_cap: int = 20000) -> VerificationReport:
    """Euler class of the twisted sum against the power operation of the
    Euler class; exact to the stated q-order."""
    G = chi.group
    W = wreath(G, n, size_cap)
    lhs = euler_str(wreath_sum_character(chi, n, W), q_order)
    rhs = p_str(euler_str(chi, Fraction(q_order) * n), n, wreath_group=W)
    return compare_class_functions(lhs, rhs, label=f"H-infinity n={n}",
                                   up_to=q_order, min_known=q_order)
