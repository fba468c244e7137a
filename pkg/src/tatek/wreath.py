"""Wreath products G wr S_n and the string-orbit traversal.

Elements stay structured as (base tuple, permutation); the multiplication
twists the base tuple by the permutation. `orbit_data` extracts, for a
commuting pair of wreath elements, the combinatorial shadow of the closed
strings: for every orbit of the second element on the cycles of the
first, the cycle length k, orbit size N, accumulated rotation shift M,
cycle-product holonomy, and the return multiplier (an element commuting
with the holonomy). These five numbers drive the power-operation and
Hecke-operator character formulas.

Base-point choices (which element starts a cycle, which cycle starts an
orbit) are configurable; changing them moves (holonomy, multiplier) by
simultaneous conjugation and never changes (k, N, M).
"""

from __future__ import annotations

import itertools
from typing import Callable, NamedTuple, Sequence

from .groups import (DEFAULT_SIZE_CAP, FiniteGroup, Homomorphism, Perm,
                     SizeCapExceeded, cycles_of, identity_perm, perm_inv,
                     perm_mul)


class WreathElement(NamedTuple):
    base: tuple
    perm: Perm


class WreathGroup(FiniteGroup):
    """Fully enumerated wreath product of a base group by S_n."""

    def __init__(self, base_group: FiniteGroup, copies: int,
                 size_cap: int = DEFAULT_SIZE_CAP):
        self.base_group = base_group
        self.copies = copies
        size = len(base_group) ** copies
        for i in range(2, copies + 1):
            size *= i
        if size > size_cap:
            raise SizeCapExceeded(
                f"wreath product would have {size} elements (cap {size_cap})")
        perms = sorted(itertools.permutations(range(copies)))
        elements = [
            WreathElement(base, perm)
            for base in itertools.product(base_group.elements, repeat=copies)
            for perm in perms
        ]
        G = base_group

        def mul(x: WreathElement, y: WreathElement) -> WreathElement:
            sig_inv = perm_inv(x.perm)
            return WreathElement(
                tuple(G.mul(x.base[i], y.base[sig_inv[i]]) for i in range(copies)),
                perm_mul(x.perm, y.perm),
            )

        def inv(x: WreathElement) -> WreathElement:
            return WreathElement(
                tuple(G.inv(x.base[x.perm[j]]) for j in range(copies)),
                perm_inv(x.perm),
            )

        e = WreathElement((G.identity,) * copies, identity_perm(copies))
        super().__init__(elements, mul, inv, e,
                         name=f"{G.name} wr S{copies}",
                         check=size <= 20)


def wreath(base_group: FiniteGroup, copies: int,
           size_cap: int = DEFAULT_SIZE_CAP) -> WreathGroup:
    return WreathGroup(base_group, copies, size_cap)


def centralizer_condition(G: FiniteGroup, w: WreathElement, x: WreathElement) -> bool:
    """The explicit membership test for x in the centralizer of w: the
    permutation parts commute and g_{sigma(tau(i))} h_{tau(i)} equals
    h_{tau(sigma(i))} g_{sigma(i)} for every i."""
    sigma, tau = w.perm, x.perm
    if perm_mul(sigma, tau) != perm_mul(tau, sigma):
        return False
    g, h = w.base, x.base
    for i in range(len(sigma)):
        if G.mul(g[sigma[tau[i]]], h[tau[i]]) != G.mul(h[tau[sigma[i]]], g[sigma[i]]):
            return False
    return True


# -- iterated wreath products -----------------------------------------


def iota(w: WreathElement, inner_degree: int) -> Perm:
    """Flatten an element of S_m wr S_n to a permutation of m*n points,
    identifying (i, j) with i + j*n (0-based). An injective homomorphism."""
    m, n = inner_degree, len(w.perm)
    out = [0] * (m * n)
    for p in range(m * n):
        i, j = p % n, p // n
        i2 = w.perm[i]
        j2 = w.base[i2][j]
        out[p] = i2 + j2 * n
    return tuple(out)


def iota_hom(nested: WreathGroup, flat: WreathGroup) -> Homomorphism:
    """The embedding (G wr S_m) wr S_n -> G wr S_{mn} that flattens both
    the index pairs and the base entries."""
    inner = nested.base_group
    if not isinstance(inner, WreathGroup):
        raise ValueError("source must be an iterated wreath product")
    m, n = inner.copies, nested.copies
    if not (flat.base_group is inner.base_group and flat.copies == m * n):
        raise ValueError("target does not match the flattened shape")
    mapping = {}
    for w in nested.elements:
        base = [None] * (m * n)
        for i in range(n):
            for j in range(m):
                base[i + j * n] = w.base[i].base[j]
        perm_part = WreathElement(tuple(x.perm for x in w.base), w.perm)
        mapping[w] = WreathElement(tuple(base), iota(perm_part, m))
    return Homomorphism(nested, flat, mapping)


def block_sum_hom(product_group: FiniteGroup, left: WreathGroup, right: WreathGroup,
                  target: WreathGroup) -> Homomorphism:
    """(G wr S_n) x (G wr S_m) -> G wr S_{n+m}, juxtaposing base tuples
    and permuting the two blocks separately."""
    n = left.copies
    mapping = {}
    for (a, b) in product_group.elements:
        base = a.base + b.base
        perm = a.perm + tuple(n + i for i in b.perm)
        mapping[(a, b)] = WreathElement(base, perm)
    return Homomorphism(product_group, target, mapping)


def unzip_hom(source: WreathGroup, target_product: FiniteGroup) -> Homomorphism:
    """(G x H) wr S_n -> (G wr S_n) x (H wr S_n), splitting each base pair
    into its two coordinates (the permutation goes to both sides)."""
    mapping = {}
    for w in source.elements:
        firsts = tuple(p[0] for p in w.base)
        seconds = tuple(p[1] for p in w.base)
        mapping[w] = (WreathElement(firsts, w.perm), WreathElement(seconds, w.perm))
    return Homomorphism(source, target_product, mapping)


# -- orbit traversal ---------------------------------------------------


class OrbitDatum(NamedTuple):
    cycle_length: int      # k
    orbit_size: int        # N
    shift: int             # M, in [0, k)
    holonomy: object       # cycle product at the base cycle
    multiplier: object     # return element, commutes with the holonomy


class OrbitConvention(NamedTuple):
    """Base-point choices for the traversal; both callables pick one
    entry of their argument."""
    cycle_start: Callable[[tuple], int]
    orbit_start: Callable[[list], int]


MINIMAL_CONVENTION = OrbitConvention(
    cycle_start=lambda cycle: cycle.index(min(cycle)),
    orbit_start=lambda cycles: min(range(len(cycles)), key=lambda i: min(cycles[i])),
)


def orbit_data(G: FiniteGroup, g_base: Sequence, sigma: Perm, h_base: Sequence,
               tau: Perm, convention: OrbitConvention = MINIMAL_CONVENTION,
               check: bool = True) -> list[OrbitDatum]:
    """Traverse the orbits of (h, tau) on the cycles of (g, sigma).

    Requires (h, tau) to centralize (g, sigma). For each orbit of tau on
    the k-cycles of sigma the traversal starts at a base cycle with cycle
    product g_c and iterates the loop-rotation step around the orbit,
    accumulating the shift and composing the step multipliers; shifts of
    a full cycle length fold into holonomy factors.
    """
    n = len(sigma)
    if not (len(g_base) == len(h_base) == len(tau) == n):
        raise ValueError("base tuples and permutations must have one length")
    w = WreathElement(tuple(g_base), tuple(sigma))
    x = WreathElement(tuple(h_base), tuple(tau))
    if check and not centralizer_condition(G, w, x):
        raise ValueError("second pair does not centralize the first")

    cycles = []
    for cyc in cycles_of(sigma):
        start = convention.cycle_start(cyc)
        cycles.append(cyc[start:] + cyc[:start])
    cycle_at = {}
    for idx, cyc in enumerate(cycles):
        for point in cyc:
            cycle_at[point] = idx

    def step(i_idx: int, j_idx: int):
        """Shift and multiplier for the step reading the loop over cycle
        j = tau(cycle i)."""
        i_cyc, j_cyc = cycles[i_idx], cycles[j_idx]
        m = j_cyc.index(tau[i_cyc[0]])
        s = G.identity
        for r in range(m):
            s = G.mul(s, G.inv(g_base[j_cyc[r]]))
        s = G.mul(s, h_base[j_cyc[m - 1]] if m >= 1 else h_base[j_cyc[-1]])
        return m, s

    def cycle_product(idx: int):
        prod = G.identity
        for point in cycles[idx]:
            prod = G.mul(g_base[point], prod)
        return prod

    seen = set()
    out = []
    for idx in range(len(cycles)):
        if idx in seen:
            continue
        orbit = [idx]
        cur = cycle_at[tau[cycles[idx][0]]]
        while cur != idx:
            orbit.append(cur)
            cur = cycle_at[tau[cycles[cur][0]]]
        seen.update(orbit)
        start_pos = convention.orbit_start([cycles[i] for i in orbit])
        orbit = orbit[start_pos:] + orbit[:start_pos]

        k, size = len(cycles[orbit[0]]), len(orbit)
        total_shift = 0
        u = G.identity
        for r in range(size):
            m, s = step(orbit[r], orbit[(r + 1) % size])
            total_shift += m
            u = G.mul(s, u)
        wraps, shift = divmod(total_shift, k)
        hol = cycle_product(orbit[0])
        u = G.mul(G.power(hol, wraps), u)
        if check and G.mul(u, hol) != G.mul(hol, u):
            raise AssertionError("return multiplier fails to commute with holonomy")
        out.append(OrbitDatum(k, size, shift, hol, u))

    if check:
        assert sum(d.cycle_length * d.orbit_size for d in out) == n
    return out


def orbit_data_for(G: FiniteGroup, w: WreathElement, x: WreathElement,
                   convention: OrbitConvention = MINIMAL_CONVENTION,
                   check: bool = True) -> list[OrbitDatum]:
    return orbit_data(G, w.base, w.perm, x.base, x.perm, convention, check)


# -- the token model of the loop action --------------------------------


class StepToken(NamedTuple):
    """One factor of the loop-space action of a centralizer element: the
    factor at `target` is read from the loop over `source`, rotated by
    `shift` and right-multiplied by `multiplier`."""
    target: int
    source: int
    shift: int
    multiplier: object


def action_tokens(G: FiniteGroup, w: WreathElement, x: WreathElement,
                  convention: OrbitConvention = MINIMAL_CONVENTION) -> list[StepToken]:
    """Tokens of the action of x on the loop factors of w, one per cycle
    of w's permutation (in stored-cycle order)."""
    if not centralizer_condition(G, w, x):
        raise ValueError("second element does not centralize the first")
    sigma, tau = w.perm, x.perm
    cycles = []
    for cyc in cycles_of(sigma):
        start = convention.cycle_start(cyc)
        cycles.append(cyc[start:] + cyc[:start])
    cycle_at = {}
    for idx, cyc in enumerate(cycles):
        for point in cyc:
            cycle_at[point] = idx
    out = []
    for idx, i_cyc in enumerate(cycles):
        j_idx = cycle_at[tau[i_cyc[0]]]
        j_cyc = cycles[j_idx]
        m = j_cyc.index(tau[i_cyc[0]])
        s = G.identity
        for r in range(m):
            s = G.mul(s, G.inv(w.base[j_cyc[r]]))
        s = G.mul(s, x.base[j_cyc[m - 1]] if m >= 1 else x.base[j_cyc[-1]])
        out.append(StepToken(idx, j_idx, m, s))
    return out


def compose_tokens(G: FiniteGroup, w: WreathElement, first: list[StepToken],
                   second: list[StepToken],
                   convention: OrbitConvention = MINIMAL_CONVENTION) -> list[StepToken]:
    """Tokens of acting by `first` then `second`, normalized so shifts lie
    in [0, k) (full-cycle rotations fold into the source cycle product)."""
    cycles = []
    for cyc in cycles_of(w.perm):
        start = convention.cycle_start(cyc)
        cycles.append(cyc[start:] + cyc[:start])

    def cycle_product(idx: int):
        prod = G.identity
        for point in cycles[idx]:
            prod = G.mul(w.base[point], prod)
        return prod

    by_target_second = {t.target: t for t in second}
    by_target_first = {t.target: t for t in first}
    out = []
    for idx in range(len(cycles)):
        t2 = by_target_second[idx]
        t1 = by_target_first[t2.source]
        shift = t2.shift + t1.shift
        mult = G.mul(t1.multiplier, t2.multiplier)
        k = len(cycles[idx])
        wraps, shift = divmod(shift, k)
        if wraps:
            mult = G.mul(G.power(cycle_product(t1.source), wraps), mult)
        out.append(StepToken(idx, t1.source, shift, mult))
    return out
