"""Acceptance criteria.

One test per criterion, each printing a pass/fail line with its runtime
against the budget (run with `pytest -s` to see the lines). Every
comparison is exact; the only tolerances are the stated q/t truncation
orders and wall-clock budgets.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

from tatek.characters import RepCharacter, verify_hinfty
from tatek.cyclotomic import root_of_unity
from tatek.devoto import (DevotoElement, check_devoto, epsilon, external_product,
                          random_devoto_element, restrict_along, trivial_part)
from tatek.groups import cyclic_group, direct_product, symmetric_group, trivial_group
from tatek.moonshine import (denominator_check, dmvv_check, jseries,
                             jseries_consistency, replicability_check)
from tatek.powerops import (compare_class_functions, p_str, s_top_total, sym_str,
                            sym_total, verify_iterated)
from tatek.series import BivariateSeries, PuiseuxSeries
from tatek.wreath import (OrbitConvention, block_sum_hom, orbit_data, unzip_hom, wreath)


@contextmanager
def budget(number: int, name: str, limit: float):
    start = time.perf_counter()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number:02d} {name}: FAIL")
        raise
    elapsed = time.perf_counter() - start
    print(f"ACCEPTANCE {number:02d} {name}: PASS ({elapsed:.2f}s, budget {limit:.0f}s)")
    assert elapsed < limit, f"criterion {number} exceeded its {limit}s budget: {elapsed:.2f}s"


def test_criterion_01_generating_identity():
    with budget(1, "generating identity (sym brute = exp, n <= 5)", 60):
        rng = random.Random(2024)
        for G in (trivial_group(), cyclic_group(2)):
            for _ in range(5):
                x = random_devoto_element(G, rng, truncation=2)
                for n in range(6):
                    assert sym_str(x, n, "brute").agrees_with(sym_str(x, n, "exp")), \
                        (G.name, n)


def test_criterion_02_power_operation_axioms():
    with budget(2, "power operation axioms (b), (c), (d)", 120):
        Z2 = cyclic_group(2)
        T1 = trivial_group()
        rng = random.Random(2025)
        x2 = random_devoto_element(Z2, rng, truncation=2)
        # (b): restriction along block juxtaposition splits the operation
        for (n, m) in [(1, 1), (1, 2), (2, 2), (1, 3)]:
            Wn, Wm, Wnm = wreath(Z2, n), wreath(Z2, m), wreath(Z2, n + m)
            prod = direct_product(Wn, Wm)
            lhs = restrict_along(p_str(x2, n + m, Wnm), block_sum_hom(prod, Wn, Wm, Wnm))
            rhs = external_product(p_str(x2, n, Wn), p_str(x2, m, Wm), product_group=prod)
            report = compare_class_functions(lhs, rhs, label=f"axiom (b) {n}+{m}")
            assert report.ok, report.failures[:2]
        # (c): iterated operations flatten along the index embedding
        xt = random_devoto_element(T1, rng, truncation=2)
        assert verify_iterated(xt, 2, 2).ok
        assert verify_iterated(x2, 2, 2).ok
        assert verify_iterated(xt, 2, 3).ok
        # (d): the operation of an external product splits after unzipping
        y2 = random_devoto_element(Z2, rng, truncation=2)
        GH = direct_product(Z2, Z2)
        WGH = wreath(GH, 2, size_cap=2000)
        Wn = wreath(Z2, 2)
        prodW = direct_product(Wn, Wn, size_cap=4000)
        lhs = p_str(external_product(x2, y2, product_group=GH), 2, WGH)
        rhs = restrict_along(
            external_product(p_str(x2, 2, Wn), p_str(y2, 2, Wn), product_group=prodW),
            unzip_hom(WGH, prodW))
        assert compare_class_functions(lhs, rhs, label="axiom (d)").ok


def test_criterion_03_euler_class_is_h_infinity():
    with budget(3, "Euler classes commute with power operations", 60):
        Z3 = cyclic_group(3)
        g = next(x for x in Z3.elements if x != Z3.identity)
        faithful = RepCharacter(Z3, {Z3.identity: 1, g: root_of_unity(3, 1),
                                     Z3.mul(g, g): root_of_unity(3, 2)})
        report = verify_hinfty(faithful, 2, 2)
        assert report.ok, report.failures[:2]
        Z2 = cyclic_group(2)
        s = next(x for x in Z2.elements if x != Z2.identity)
        sign = RepCharacter(Z2, {Z2.identity: 1, s: -1})
        report = verify_hinfty(sign, 3, 1)
        assert report.ok, report.failures[:2]


def test_criterion_04_hecke_closed_form():
    with budget(4, "diagonal traversal reproduces the Hecke closed form", 30):
        for G in (cyclic_group(4), symmetric_group(3)):
            for n in range(1, 7):
                for k in (d for d in range(1, n + 1) if n % d == 0):
                    N = n // k
                    for m in range(k):
                        sigma, tau = [0] * n, [0] * n
                        for j in range(N):
                            for r in range(k):
                                sigma[j * k + r] = j * k + (r + 1) % k
                                tau[j * k + r] = ((j + 1) * k + r if j < N - 1
                                                  else (r + m) % k)
                        for g in G.elements:
                            for h in G.centralizer(g):
                                data = orbit_data(G, (g,) * n, tuple(sigma),
                                                  (h,) * n, tuple(tau))
                                assert len(data) == 1
                                assert tuple(data[0]) == (
                                    k, N, m, G.power(g, k),
                                    G.mul(G.power(G.inv(g), m), G.power(h, N)))


def test_criterion_05_integrality():
    with budget(5, "orbifold sums of valid elements are integral", 30):
        rng = random.Random(2026)
        groups = [cyclic_group(2), cyclic_group(3), symmetric_group(3)]
        elements = []
        for i in range(20):
            G = groups[i % 3]
            x = random_devoto_element(G, rng, truncation=2)
            assert check_devoto(x)[0]
            assert epsilon(x).is_integral(), (G.name, i)
            elements.append(x)
        for x in elements[:6]:
            for n in (2, 3):
                out = sym_str(x, n, "exp")
                assert check_devoto(out)[0]
                for g in x.group.class_representatives():
                    assert trivial_part(out, g).is_integral()


def test_criterion_06_topological_product_formula():
    with budget(6, "total topological power matches the product formula", 10):
        rng = random.Random(2027)
        c = {j: rng.randint(-2, 2) for j in range(7)}
        x = PuiseuxSeries(dict(c), 6)
        lhs = s_top_total(x, 4)
        rhs = BivariateSeries.one(4) * PuiseuxSeries.one(Fraction(6))
        for j, cj in c.items():
            base = BivariateSeries({0: PuiseuxSeries.one(6),
                                    1: PuiseuxSeries.monomial(-1, j, 6)}, 4)
            factor = base.inv() if cj > 0 else base
            for _ in range(abs(cj)):
                rhs = rhs * factor
        assert lhs.agrees_with(rhs, q_order=6)


def test_criterion_07_dmvv_identity():
    with budget(7, "exp of Hecke series equals the Borcherds product", 30):
        rng = random.Random(2028)
        for _ in range(5):
            c = {i: rng.randint(-2, 2) for i in range(25)}
            report = dmvv_check(c, 4, 6)
            assert report.ok, report.witness


def test_criterion_08_moonshine_constants():
    with budget(8, "j-function coefficients from first principles", 5):
        j = jseries(20)
        assert j.coefficient(1) == 196884
        assert j.coefficient(2) == 21493760
        assert j.coefficient(3) == 864299970
        assert jseries_consistency(20).ok


def test_criterion_09_replicability_and_denominator():
    with budget(9, "j - 744 is replicable; denominator formula holds", 60):
        report = replicability_check(jseries(32), 4, 8)
        assert report.ok, str(report)
        den = denominator_check(3)
        assert den.ok, den.witness


def test_criterion_10_witten_exponential_class():
    with budget(10, "symmetric powers of constants give the partition products", 10):
        T1 = trivial_group()
        E = T1.identity
        t_order = 5
        for c in (1, 2, 3):
            x = DevotoElement.constant(T1, PuiseuxSeries({0: c}, 10))
            total = sym_total(x, t_order, method="brute")
            rhs = BivariateSeries.one(t_order)
            for k in range(1, t_order + 1):
                base = BivariateSeries({0: PuiseuxSeries.one(),
                                        k: -PuiseuxSeries.one()}, t_order)
                for _ in range(c):
                    rhs = rhs * base.inv()
            for n in range(t_order + 1):
                assert total[n].eval(E, E).agrees_with(rhs.coefficient(n)), (c, n)


def test_criterion_11_choice_independence():
    from tatek.serialize import devoto_to_json, dumps

    with budget(11, "outputs are byte-identical under permuted base points", 30):
        rng = random.Random(2029)
        Z2 = cyclic_group(2)
        for case in range(3):
            x = random_devoto_element(Z2, rng, truncation=2)
            n = (case % 2) + 2
            W = wreath(Z2, n)
            reference = dumps(devoto_to_json(p_str(x, n, W)))
            for seed in range(3):
                r = random.Random(f"{case}:{seed}")
                convention = OrbitConvention(
                    cycle_start=lambda cyc: r.randrange(len(cyc)),
                    orbit_start=lambda cycles: r.randrange(len(cycles)))
                assert dumps(devoto_to_json(p_str(x, n, W, convention=convention))) \
                    == reference
