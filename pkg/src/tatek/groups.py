"""Finite groups by explicit enumeration.

Groups are given by their full element list plus multiplication and
inverse; permutation groups are generated from generator lists, and
direct products compose two groups elementwise. Conjugacy classes,
centralizers and commuting-pair classes (pairs gh = hg up to simultaneous
conjugation) are computed on demand and cached. Class and pair-class
representatives are the first members in enumeration order, which makes
every derived table deterministic.

Elements must be hashable; groups are immutable once built.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Sequence

DEFAULT_SIZE_CAP = 20000

Perm = tuple[int, ...]


class SizeCapExceeded(ValueError):
    """The requested group would exceed the configured element cap."""


# -- permutation helpers (0-based image tuples) -----------------------


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def perm_mul(p: Perm, q: Perm) -> Perm:
    """Composite permutation applying q first: (p*q)(i) = p(q(i))."""
    return tuple(map(p.__getitem__, q))


def perm_inv(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, image in enumerate(p):
        out[image] = i
    return tuple(out)


def perm_from_cycles(degree: int, cycles: Iterable[Sequence[int]]) -> Perm:
    """Build a permutation from 0-based cycles."""
    images = list(range(degree))
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:] + type(cycle)([cycle[0]])):
            if not 0 <= a < degree:
                raise ValueError(f"point {a} outside degree {degree}")
            images[a] = b
    seen = set()
    for cycle in cycles:
        for a in cycle:
            if a in seen:
                raise ValueError("cycles overlap")
            seen.add(a)
    return tuple(images)


def cycles_of(p: Perm, include_fixed: bool = True) -> list[tuple[int, ...]]:
    """Cycles of p, each written minimal point first, sorted by that point."""
    seen = set()
    out = []
    for start in range(len(p)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        point = p[start]
        while point != start:
            cyc.append(point)
            seen.add(point)
            point = p[point]
        if include_fixed or len(cyc) > 1:
            out.append(tuple(cyc))
    return out


# -- the group container ----------------------------------------------


class FiniteGroup:
    """A finite group with a fixed element enumeration."""

    def __init__(self, elements: Iterable, mul: Callable, inv: Callable,
                 identity, name: str | None = None, check: bool = True):
        elements = tuple(elements)
        if identity not in set(elements):
            raise ValueError("identity is not among the elements")
        self.elements = elements
        self.mul = mul
        self.inv = inv
        self.identity = identity
        self.name = name or f"group of order {len(elements)}"
        self._index = {g: i for i, g in enumerate(elements)}
        if len(self._index) != len(elements):
            raise ValueError("duplicate elements")
        self._orders: dict = {}
        self._conjugacy = None
        self._pair_classes = None
        self._pair_rep_map = None
        self._pair_stabilizer_sizes = None
        if check:
            self._check_axioms()

    def _check_axioms(self):
        e = self.identity
        for g in self.elements:
            if self.mul(g, e) != g or self.mul(e, g) != g:
                raise ValueError("identity axiom fails")
            gi = self.inv(g)
            if gi not in self._index or self.mul(g, gi) != e:
                raise ValueError("inverse axiom fails")
        if len(self.elements) <= 20:
            for a, b, c in itertools.product(self.elements, repeat=3):
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                    raise ValueError("associativity fails")

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._index

    def __repr__(self) -> str:
        return f"<{self.name}, order {len(self.elements)}>"

    def index(self, g) -> int:
        return self._index[g]

    def power(self, g, n: int):
        if n < 0:
            return self.power(self.inv(g), -n)
        out = self.identity
        for _ in range(n):
            out = self.mul(out, g)
        return out

    def order_of(self, g) -> int:
        cached = self._orders.get(g)
        if cached is None:
            n, x = 1, g
            while x != self.identity:
                x = self.mul(x, g)
                n += 1
            cached = self._orders[g] = n
        return cached

    def conjugate(self, a, g):
        """a g a^-1."""
        return self.mul(self.mul(a, g), self.inv(a))

    def is_abelian(self) -> bool:
        return all(h == self.conjugate(a, h) for h in self.elements for a in self.elements)

    # -- conjugacy ----------------------------------------------------

    def _conjugacy_data(self):
        if self._conjugacy is None:
            reps = []
            class_members: dict = {}
            rep_of: dict = {}
            to_rep: dict = {}  # g -> t with t g t^-1 = rep_of[g]
            for g in self.elements:
                if g in rep_of:
                    continue
                reps.append(g)
                members = []
                for a in self.elements:
                    m = self.conjugate(a, g)
                    if m not in rep_of:
                        rep_of[m] = g
                        to_rep[m] = self.inv(a)
                        members.append(m)
                class_members[g] = tuple(members)
            centralizers = {
                r: tuple(a for a in self.elements if self.mul(a, r) == self.mul(r, a))
                for r in reps
            }
            self._conjugacy = (tuple(reps), class_members, rep_of, to_rep, centralizers)
        return self._conjugacy

    def class_representatives(self) -> tuple:
        return self._conjugacy_data()[0]

    def conjugacy_class(self, g) -> tuple:
        data = self._conjugacy_data()
        return data[1][data[2][g]]

    def class_rep(self, g):
        return self._conjugacy_data()[2][g]

    def conjugator_to_rep(self, g):
        """t with t g t^-1 equal to the class representative of g."""
        return self._conjugacy_data()[3][g]

    def centralizer(self, g) -> tuple:
        data = self._conjugacy_data()
        rep = data[2][g]
        if g == rep:
            return data[4][rep]
        return tuple(a for a in self.elements if self.mul(a, g) == self.mul(g, a))

    # -- commuting pairs ----------------------------------------------

    def commuting_pair_classes(self) -> tuple:
        """Representatives (g, h) of commuting pairs up to simultaneous
        conjugation; g is a class representative and h runs over
        centralizer-conjugacy representatives inside C_g."""
        self._build_pair_tables()
        return self._pair_classes

    def pair_class_rep(self, g, h) -> tuple:
        """Canonical representative of the simultaneous-conjugacy class
        of the commuting pair (g, h)."""
        if self.mul(g, h) != self.mul(h, g):
            raise ValueError("elements do not commute")
        self._build_pair_tables()
        return self._pair_rep_map[(g, h)]

    def pair_class_size(self, g, h) -> int:
        """Orbit size of the pair class under simultaneous conjugation."""
        self._build_pair_tables()
        rep = self._pair_rep_map[(g, h)]
        return len(self.elements) // self._pair_stabilizer_sizes[rep]

    def _build_pair_tables(self):
        if self._pair_classes is not None:
            return
        reps, _, rep_of, to_rep, centralizers = self._conjugacy_data()
        pair_classes = []
        pair_rep: dict = {}
        stab_sizes: dict = {}
        for r in reps:
            cent = centralizers[r]
            if len(cent) == len(self.elements):
                # r is central: centralizer conjugacy is group conjugacy
                h_rep = dict(rep_of)
                pair_classes.extend((r, h) for h in reps)
                for h in reps:
                    stab_sizes[(r, h)] = len(centralizers[h])
            else:
                h_rep = {}
                for h in cent:
                    if h in h_rep:
                        continue
                    pair_classes.append((r, h))
                    for a in cent:
                        m = self.conjugate(a, h)
                        if m not in h_rep:
                            h_rep[m] = h
                    stab_sizes[(r, h)] = sum(
                        1 for a in cent if self.mul(a, h) == self.mul(h, a))
            # resolve arbitrary pairs with first component in this class:
            # the commuting partners of g = t^-1 r t are t^-1 C_r t
            for g in self.conjugacy_class(r):
                t = to_rep[g]
                t_inv = self.inv(t)
                for c in cent:
                    h0 = self.mul(self.mul(t_inv, c), t)
                    pair_rep[(g, h0)] = (r, h_rep[c])
        self._pair_classes = tuple(dict.fromkeys(pair_classes))
        self._pair_rep_map = pair_rep
        self._pair_stabilizer_sizes = stab_sizes


# -- constructors ------------------------------------------------------


def permutation_group(degree: int, generators: Iterable[Perm], name: str | None = None,
                      size_cap: int = DEFAULT_SIZE_CAP) -> FiniteGroup:
    """The subgroup of the symmetric group generated by the given
    permutations (0-based image tuples), fully enumerated."""
    gens = [tuple(g) for g in generators]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise ValueError(f"not a permutation of degree {degree}: {g}")
    e = identity_perm(degree)
    seen = {e}
    frontier = [e]
    order = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = perm_mul(x, g)
                if y not in seen:
                    if len(seen) >= size_cap:
                        raise SizeCapExceeded(f"size cap {size_cap} exceeded")
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    order.sort()
    G = FiniteGroup(order, perm_mul, perm_inv, e, name=name,
                    check=len(order) <= 60)
    G.degree = degree
    G.generators = tuple(gens)
    return G


def symmetric_group(n: int, size_cap: int = DEFAULT_SIZE_CAP) -> FiniteGroup:
    gens: list[Perm] = []
    if n >= 2:
        gens.append(perm_from_cycles(n, [(0, 1)]))
    if n >= 3:
        gens.append(tuple(list(range(1, n)) + [0]))
    return permutation_group(n, gens, name=f"S{n}", size_cap=size_cap)


def cyclic_group(n: int) -> FiniteGroup:
    gen = tuple(list(range(1, n)) + [0]) if n > 1 else identity_perm(1)
    return permutation_group(max(n, 1), [gen], name=f"Z{n}")


def trivial_group() -> FiniteGroup:
    return permutation_group(1, [], name="1")


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str | None = None,
                   size_cap: int = DEFAULT_SIZE_CAP) -> FiniteGroup:
    if len(G) * len(H) > size_cap:
        raise SizeCapExceeded(f"size cap {size_cap} exceeded")
    elements = [(a, b) for a in G.elements for b in H.elements]

    def mul(x, y):
        return (G.mul(x[0], y[0]), H.mul(x[1], y[1]))

    def inv(x):
        return (G.inv(x[0]), H.inv(x[1]))

    return FiniteGroup(elements, mul, inv, (G.identity, H.identity),
                       name=name or f"{G.name} x {H.name}", check=False)


class Homomorphism:
    """A verified group homomorphism given by its value table."""

    def __init__(self, source: FiniteGroup, target: FiniteGroup, mapping: dict,
                 check: bool = True):
        self.source = source
        self.target = target
        self.mapping = dict(mapping)
        missing = [g for g in source.elements if g not in self.mapping]
        if missing:
            raise ValueError(f"mapping misses {len(missing)} elements")
        for g in source.elements:
            if self.mapping[g] not in target:
                raise ValueError("image outside target group")
        if check:
            for a in source.elements:
                fa = self.mapping[a]
                for b in source.elements:
                    if target.mul(fa, self.mapping[b]) != self.mapping[source.mul(a, b)]:
                        raise ValueError(f"not a homomorphism at {a!r}, {b!r}")

    def __call__(self, g):
        return self.mapping[g]

    def is_injective(self) -> bool:
        return len(set(self.mapping.values())) == len(self.source)


def identity_hom(G: FiniteGroup) -> Homomorphism:
    return Homomorphism(G, G, {g: g for g in G.elements}, check=False)


def hom_from_generator_images(source: FiniteGroup, target: FiniteGroup,
                              images: dict) -> Homomorphism:
    """Extend images of a generating subset to all of the (small) source
    group by closure; fails if the images are inconsistent."""
    table = {source.identity: target.identity}
    table.update(images)
    changed = True
    while changed:
        changed = False
        for a in list(table):
            for b in list(table):
                c = source.mul(a, b)
                img = target.mul(table[a], table[b])
                if c not in table:
                    table[c] = img
                    changed = True
                elif table[c] != img:
                    raise ValueError("generator images are inconsistent")
    return Homomorphism(source, target, table)
