"""Acceptance criteria, one test each (``c01`` .. ``c12``).

Two criteria state numbers that disagree with independent computation; for
those the literal number is kept as a strict ``xfail`` beside the passing
oracle-based check, so the discrepancy stays visible in every run.
"""

import itertools
import random
import time

import networkx as nx
import pytest

from cleangraph.analysis import (
    involution_count_m2_formula,
    involutions_m2_classified,
    unit_count_m2_formula,
    units,
)
from cleangraph.formats import decode_graph6, export_graph6
from cleangraph.graphs import complete_graph, copies, disjoint_union, empty_graph, shuriken
from cleangraph.iso import is_isomorphic, verify_bijection
from cleangraph.rings import M2p, Product, QuotPoly, Zn, make_m2p
from cleangraph.theorems import (
    THEOREM_INSTANCES,
    check_cl_iff_cl2,
    check_degree_formula,
    check_m2_structure,
    check_prime_power_criterion,
    check_product_theorem,
    check_shuriken_structure,
    check_uprime_lemma,
    RingCatalog,
    cl2_for,
    cl_for,
    tables_for,
)

from conftest import dual_ops, m2_ops, to_nx, zn_ops

DUAL2 = QuotPoly(2, (0, 0, 1))


def _no_inconclusive(rep):
    return all(i.verdict != "inconclusive" for i in rep.instances)


def _sieve_prime_powers(bound):
    composite = set()
    primes = []
    for i in range(2, bound + 1):
        if i not in composite:
            primes.append(i)
            composite.update(range(i * i, bound + 1, i))
    out = set()
    for p in primes:
        q = p
        while q <= bound:
            out.add(q)
            q *= p
    return sorted(out), primes


def test_c01_small_cl2_examples():
    two_k1 = empty_graph(2)
    two_k1_two_k2 = disjoint_union(two_k1, copies(2, complete_graph(2)))
    for n in (3, 4):
        assert is_isomorphic(cl2_for(Zn(n)), two_k1).verdict
    for n in (7, 9):
        assert is_isomorphic(cl2_for(Zn(n)), two_k1_two_k2).verdict
    assert is_isomorphic(cl2_for(Zn(3)), cl2_for(Zn(4))).verdict
    assert is_isomorphic(cl2_for(Zn(7)), cl2_for(Zn(9))).verdict
    assert nx.is_isomorphic(to_nx(cl2_for(Zn(9))), to_nx(two_k1_two_k2))


def test_c02_four_way_chain():
    chain = [Product(Zn(3), Zn(3)), Product(Zn(3), Zn(4)), Product(Zn(4), Zn(4)), Zn(12)]
    for a, b in itertools.combinations(chain, 2):
        res = is_isomorphic(cl2_for(a), cl2_for(b))
        assert res.verdict and verify_bijection(cl2_for(a), cl2_for(b), res.witness).ok
        assert nx.is_isomorphic(to_nx(cl2_for(a)), to_nx(cl2_for(b)))


def test_c03_z4_versus_dual_numbers():
    rep = check_cl_iff_cl2(RingCatalog([Zn(4), DUAL2]))
    inst = rep.instances[0]
    assert inst.witness["cl2"]["isomorphic"] is True
    rings = inst.witness["rings"]
    assert rings["Z4"]["characteristic"] == 4 and rings["Z4"]["square_zero"] == ["2"]
    assert rings[str(DUAL2)]["characteristic"] == 2 and rings[str(DUAL2)]["square_zero"] == ["x"]
    assert inst.witness["rings_differ_by"] == "characteristic"
    # independent check that no bijection Z4 -> Z2[x]/(x^2) is a ring map
    a_els, a_mul, _, _ = zn_ops(4)
    b_els, b_mul, _, _ = dual_ops(2)
    b_add = lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2)  # noqa: E731
    for perm in itertools.permutations(b_els):
        f = dict(zip(a_els, perm))
        if all(f[(x + y) % 4] == b_add(f[x], f[y]) and f[a_mul(x, y)] == b_mul(f[x], f[y])
               for x in a_els for y in a_els):
            pytest.fail(f"unexpected ring isomorphism {f}")


def test_c04_cl_iff_cl2_over_catalog(catalog):
    assert len(catalog) >= 20 and len(catalog.pairs()) >= 190
    rep = check_cl_iff_cl2(catalog)
    assert rep.instances_checked == len(catalog.pairs())
    assert _no_inconclusive(rep)
    assert rep.suite_verdict == "pass"
    # cross-check the engine on every pair small enough for networkx
    for inst, (a, b) in zip(rep.instances, sorted(catalog.pairs(), key=lambda ab: f"{ab[0]} | {ab[1]}")):
        g1, g2 = cl2_for(a), cl2_for(b)
        if max(g1.order, g2.order) <= 80:
            assert inst.witness["cl2"]["isomorphic"] == nx.is_isomorphic(to_nx(g1), to_nx(g2)), inst.key


def test_c05_degree_formula(catalog):
    rep = check_degree_formula(catalog)
    assert rep.instances_checked == len(catalog)
    assert rep.suite_verdict == "pass"


def test_c06_prime_power_sweep():
    start = time.perf_counter()
    rep = check_prime_power_criterion(200)
    elapsed = time.perf_counter() - start
    sieve, primes = _sieve_prime_powers(200)
    assert rep.summary["prime_powers"] == len(sieve) == 60
    assert rep.summary["primes"] == len(primes) == 46
    assert rep.instances_checked == len(sieve) * (len(sieve) - 1) // 2
    assert rep.suite_verdict == "pass" and _no_inconclusive(rep)
    inst = {i.key: i for i in rep.instances}
    assert inst["{3,4}"].witness == {"isomorphic": True, "predicate": True}
    assert inst["{7,9}"].witness["isomorphic"] and inst["{7,9}"].witness["odd_power_predicate"] == [True]
    assert elapsed < 10


@pytest.mark.xfail(strict=True, reason="literal count 46 counts primes only; 60 prime powers are <= 200")
def test_c06_literal_prime_power_count():
    rep = check_prime_power_criterion(200)
    assert rep.summary["prime_powers"] == 46
    assert rep.instances_checked == 1035


def test_c07_product_theorem_explicit_bijection():
    assert len(THEOREM_INSTANCES) == 20
    rep = check_product_theorem(THEOREM_INSTANCES)
    assert rep.suite_verdict == "pass"
    assert all(i.witness["route"] == "explicit" for i in rep.instances)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_c08_m2_counts_and_involution_families(p):
    els, mul, _, one = m2_ops(p)
    invertible = [m for m in els if (m[0] * m[3] - m[1] * m[2]) % p]
    involutions = {m for m in invertible if mul(m, m) == one}
    assert unit_count_m2_formula(p) == len(invertible) == len(units(make_m2p(p)))
    assert involution_count_m2_formula(p) == len(involutions) == len(units(make_m2p(p)).involutions)
    fam = involutions_m2_classified(p)
    flat = [m for v in fam.values() for m in v]
    assert len(flat) == len(set(flat)) and set(flat) == involutions
    sizes = tuple(len(fam[k]) for k in ("diagonal", "lower", "upper", "general"))
    if p == 2:
        assert sum(sizes) == 4
    if p == 3:
        assert sizes == (4, 4, 4, 2)


@pytest.mark.xfail(strict=True, reason="each family holds one involution at p = 2, so sizes are (1,1,1,1)")
def test_c08_literal_family_sizes_p2():
    fam = involutions_m2_classified(2)
    assert tuple(len(fam[k]) for k in ("diagonal", "lower", "upper", "general")) == (4, 0, 0, 0)


@pytest.mark.parametrize("p, t, n, h, order, limit", [(2, 4, 6, 3, 42, 30), (3, 14, 48, 6, 624, 30)])
def test_c09_m2_shuriken_form(p, t, n, h, order, limit):
    start = time.perf_counter()
    rep = check_m2_structure(p)
    assert rep.suite_verdict == "pass"
    inst = {i.key: i for i in rep.instances}
    assert inst[f"M2(Z{p}) shuriken bijection"].witness == {"t": t, "n": n, "vertices": order}
    assert cl2_for(M2p(p)).order == order
    assert is_isomorphic(cl2_for(M2p(p)), shuriken(t, n, copies(h, complete_graph(2)))).verdict
    assert time.perf_counter() - start < limit


def test_c10_shuriken_structure(catalog):
    rep = check_shuriken_structure(catalog)
    assert rep.instances_checked == len(catalog)
    assert rep.suite_verdict == "pass"


def test_c11_engine_soundness(catalog):
    rng = random.Random(2024)
    for spec in catalog:
        for g in (cl_for(spec), cl2_for(spec)):
            res = is_isomorphic(g, g)
            assert res.verdict and verify_bijection(g, g, res.witness).ok
            for _ in range(20):
                perm = list(range(g.order))
                rng.shuffle(perm)
                h = g.relabeled(perm)
                res = is_isomorphic(g, h)
                assert res.verdict, spec
                assert verify_bijection(g, h, res.witness).ok
            data = export_graph6(g)
            assert data == nx.to_graph6_bytes(to_nx(g), header=False).strip()
            back = decode_graph6(data)
            assert back.adj == g.adj


def test_c12_uprime_lemma(catalog):
    rep = check_uprime_lemma(catalog)
    assert rep.suite_verdict == "pass"
    tiny = [i for i in rep.instances if not i.witness.get("downgraded")]
    assert tiny and all(i.witness["isomorphisms"] > 0 for i in tiny)
    for i in rep.instances:
        a, b = i.witness["involutions"]
        assert a == b
    # every Cl2-isomorphic catalog pair with |U| > 1 appears
    expected = {f"{a} | {b}" for a, b in catalog.pairs()
                if len(tables_for(a).units) > 1 and len(tables_for(b).units) > 1
                and is_isomorphic(cl2_for(a), cl2_for(b)).verdict}
    assert {i.key for i in rep.instances} == expected
