import json

import pytest

from cleangraph.errors import BudgetError
from cleangraph.rings import M2p, Product, QuotPoly, Zn
from cleangraph.theorems import (
    ANCHORS,
    InstanceResult,
    RingCatalog,
    VerificationReport,
    check_cl_iff_cl2,
    check_count_corollary,
    check_degree_formula,
    check_m2_structure,
    check_prime_power_criterion,
    check_product_theorem,
    check_ring_iso_lemma,
    check_shuriken_structure,
    check_uprime_lemma,
    explore_conjecture,
    odd_power_predicate,
    prime_power_predicate,
    prime_powers,
    product_bijection,
    ring_profile,
    run_suite,
)
from cleangraph.clean import cl2
from cleangraph.iso import verify_bijection
from cleangraph.rings import make_zn

import networkx as nx

from conftest import to_nx, zmn_ops


def _by_key(rep):
    return {i.key: i for i in rep.instances}


def test_default_catalog_shape(catalog):
    assert len(catalog) == 31
    assert len(catalog.pairs()) == 465
    assert Zn(25) in catalog.specs and M2p(3) in catalog.specs


def test_catalog_cap():
    with pytest.raises(BudgetError):
        RingCatalog([Zn(50)], max_order=10)


def test_ring_iso_lemma_examples():
    rep = check_ring_iso_lemma()
    assert rep.suite_verdict == "pass"
    inst = _by_key(rep)
    assert inst["Z6 | Z2 x Z3"].witness["crt_map_checked"] is True
    assert inst["Z15 | Z3 x Z5"].witness["cl_square"]["isomorphic"] is True


def test_ring_iso_lemma_rejects_non_crt_pair():
    rep = check_ring_iso_lemma([(Zn(4), Product(Zn(2), Zn(2)))])
    assert rep.suite_verdict == "fail"


def test_cl_iff_cl2_examples():
    cat = RingCatalog([Zn(3), Zn(4), Zn(7), QuotPoly(2, (0, 0, 1))])
    rep = check_cl_iff_cl2(cat)
    inst = _by_key(rep)
    assert inst["Z3 | Z4"].witness["cl2"]["isomorphic"] is True
    assert inst["Z3 | Z4"].witness["cl"]["isomorphic"] is True
    assert inst["Z3 | Z7"].witness["cl2"]["isomorphic"] is False
    assert inst["Z4 | Z2[x]/(x^2)"].witness["rings_differ_by"] == "characteristic"
    assert rep.suite_verdict == "pass"


def test_ring_profile():
    assert ring_profile(Zn(4)) == {"order": 4, "characteristic": 4, "square_zero": ["2"]}
    assert ring_profile(QuotPoly(2, (0, 0, 1))) == {"order": 4, "characteristic": 2, "square_zero": ["x"]}


def test_count_corollary_examples():
    rep = check_count_corollary(pairs=[(Zn(7), Zn(9)), (Product(Zn(3), Zn(4)), Zn(12)), (Zn(3), Zn(3))])
    inst = _by_key(rep)
    assert inst["Z7 | Z9"].witness == {"idempotents": [2, 2], "units": [6, 6]}
    assert inst["Z3 x Z4 | Z12"].witness == {"idempotents": [4, 4], "units": [4, 4]}
    assert rep.suite_verdict == "pass"


def test_uprime_lemma_examples():
    rep = check_uprime_lemma(pairs=[(Zn(7), Zn(9)), (Zn(4), Zn(3)), (Zn(12), Zn(12))])
    inst = _by_key(rep)
    assert inst["Z7 | Z9"].witness["involutions"] == [2, 2]
    g = to_nx(cl2(make_zn(7)))
    want = sum(1 for _ in nx.algorithms.isomorphism.GraphMatcher(g, g).isomorphisms_iter())
    assert inst["Z7 | Z9"].witness["isomorphisms"] == want
    assert inst["Z4 | Z3"].witness["involutions"] == [2, 2]
    assert rep.suite_verdict == "pass"


def test_uprime_lemma_downgrades_large_graphs():
    rep = check_uprime_lemma(pairs=[(M2p(3), M2p(3)), (Zn(2), Zn(2))])
    assert rep.suite_verdict == "pass"
    assert rep.instances[0].witness["downgraded"] is True
    assert any("only one unit" in n for n in rep.notes)
    assert any("checked |U'| only" in n for n in rep.notes)


def test_prime_power_enumeration():
    pps = prime_powers(200)
    assert [q for q, _, _ in pps][:10] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]
    assert len(pps) == 60
    assert sum(1 for _, _, n in pps if n == 1) == 46


def test_predicates():
    assert prime_power_predicate(2, 2, 3, 1)
    assert prime_power_predicate(3, 2, 7, 1)
    assert not prime_power_predicate(5, 2, 13, 1)
    assert not prime_power_predicate(2, 3, 5, 1)  # totients 4 = 4 but p = 2
    assert odd_power_predicate(3, 2, 7, 1) is True
    assert odd_power_predicate(5, 2, 13, 1) is False
    assert odd_power_predicate(7, 1, 9, 1) is None


def test_prime_power_criterion_small():
    rep = check_prime_power_criterion(30)
    assert rep.suite_verdict == "pass"
    inst = _by_key(rep)
    assert inst["{3,4}"].witness == {"isomorphic": True, "predicate": True}
    assert inst["{7,9}"].witness["odd_power_predicate"] == [True]
    assert inst["{13,25}"].witness["isomorphic"] is False


@pytest.mark.parametrize("inst", [(3, 1, 2, 2, 3), (3, 2, 7, 1, 5), (3, 2, 7, 1, 1)])
def test_product_bijection(inst):
    g1, g2, mapping = product_bijection(*inst)
    assert verify_bijection(g1, g2, mapping).ok
    p, n, _, _, k = inst
    els, mul, _, one = zmn_ops(p**n, k)
    idem = sum(1 for e in els if mul(e, e) == e)
    unit = sum(1 for u in els if any(mul(u, v) == one for v in els))
    assert g1.order == g2.order == (idem - 1) * unit


def test_product_theorem_examples():
    rep = check_product_theorem([(3, 1, 2, 2, 3), (3, 2, 7, 1, 5), (3, 2, 7, 1, 1)])
    assert rep.suite_verdict == "pass"
    assert all(i.witness["route"] == "explicit" for i in rep.instances)
    assert _by_key(rep)["(3,2,7,1,5)"].witness["totients_equal"] is True


def test_product_theorem_precondition():
    rep = check_product_theorem([(5, 1, 7, 1, 2)])
    assert rep.suite_verdict == "fail"


def test_conjecture_is_exploratory():
    rep = explore_conjecture([(Zn(3), Zn(3), Zn(5), Zn(5)), (Zn(4), QuotPoly(2, (0, 0, 1)), Zn(3), Zn(3))])
    assert rep.exploratory
    assert rep.instances[0].verdict == "pass" or rep.instances[1].verdict == "pass"
    assert rep.passed


def test_findings_do_not_fail_exploratory_report():
    rep = VerificationReport("product-conjecture", ANCHORS["product-conjecture"],
                             [InstanceResult("a", "finding")], exploratory=True)
    assert rep.suite_verdict == "findings" and rep.passed
    rep.instances.append(InstanceResult("b", "inconclusive"))
    assert rep.suite_verdict == "inconclusive" and not rep.passed


@pytest.mark.parametrize("p, n, t, v", [(2, 6, 4, 42), (3, 48, 14, 624)])
def test_m2_structure(p, n, t, v):
    rep = check_m2_structure(p)
    assert rep.suite_verdict == "pass"
    inst = _by_key(rep)
    assert inst[f"M2(Z{p}) counts"].witness == {"units": [n, n], "involutions": [t, t]}
    assert inst[f"M2(Z{p}) shuriken bijection"].witness == {"t": t, "n": n, "vertices": v}


def test_m2_structure_out_of_scope():
    with pytest.raises(BudgetError, match="vertex cap"):
        check_m2_structure(5)


def test_degree_and_shuriken_small():
    cat = RingCatalog([Zn(12), M2p(2), QuotPoly(3, (0, 0, 1))])
    assert check_degree_formula(cat).suite_verdict == "pass"
    assert check_shuriken_structure(cat).suite_verdict == "pass"


def test_json_schema(tmp_path):
    rep = run_suite(["count-corollary"])[0]
    doc = json.loads(json.dumps(rep.to_dict()))
    assert {"claim_id", "paper_anchor", "instances", "suite_verdict"} <= set(doc)
    for inst in doc["instances"]:
        assert {"key", "verdict", "millis"} <= set(inst)
        assert set(inst) <= {"key", "verdict", "witness", "counterexample", "millis"}
    keys = [i["key"] for i in doc["instances"]]
    assert keys == sorted(keys)


def test_run_suite_unknown_claim():
    with pytest.raises(KeyError):
        run_suite(["no-such-claim"])
