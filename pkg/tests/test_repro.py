import pytest

from eqdim.errors import NTooSmall, ParityMismatch
from eqdim.graph import all_pairs_distances
from eqdim.polytopes import PolytopeClass, generate
from eqdim.repro import TABLES, run_full_repro, verify_empty_w_claims, verify_table, verify_theorem


def test_theorem_t5():
    r = verify_theorem("T", 5)
    assert r.verdict == "verified" and r.kind == "exact-value"
    assert r.data["lower_bound"] == r.data["set_size"] == 10
    assert r.data["certificate_valid"]


def test_odd_r2_reports_lower_bound_only():
    r = verify_theorem("R2", 7)
    assert r.kind == "lower-bound" and r.verdict == "verified"
    assert r.data["lower_bound"] >= 21


def test_n_too_small():
    with pytest.raises(NTooSmall):
        verify_theorem("T", 4)


def test_parity_mismatch():
    with pytest.raises(ParityMismatch):
        verify_theorem("S", 6)
    with pytest.raises(ParityMismatch):
        verify_table("R2", 7)


def test_empty_w_verified_for_r2():
    r = verify_empty_w_claims("R2", 8)
    assert r.verdict == "verified"


def test_empty_w_t_is_repaired_by_shift():
    r = verify_empty_w_claims("T", 6)
    assert r.verdict == "repaired"
    assert "W(a_i, d_{i-1}) -> W(a_i, d_i)" in r.detail


def test_s_table_n7_rows_verify():
    reports = verify_table("S", 7)
    assert all(r.verdict == "verified" for r in reports)
    assert reports[-1].claim == "S.table:coverage"


def test_row_instances_carry_distances():
    g = generate("S", 7)
    d = all_pairs_distances(g)
    r = next(r for r in verify_table("S", 7) if r.claim == "S.table:b0-di:i-even")
    for inst in r.data["instances"]:
        assert d[g.id_of(inst["u"]), g.id_of(inst["x"])] == inst["d_u"]
        assert inst["d_u"] == inst["d_v"]


def test_t_table_repairs_stay_inside_s():
    cls = PolytopeClass("T", 9)
    S = {cls.name(b, i) for b in "ab" for i in range(9)}
    for r in verify_table("T", 9):
        assert r.verdict in ("verified", "repaired")
        for inst in r.data.get("instances", []):
            if inst["d_u"] != inst["d_v"]:
                assert inst["alternates"]
                assert all(a["x"] in S and a["d_u"] == a["d_v"] for a in inst["alternates"])


def test_rows_are_complete_per_group():
    # every row in every table is used by some n in its applicable range
    for tag, table in TABLES.items():
        seen = set()
        for n in range(5, 13):
            if table.applies(n):
                seen |= {r.claim for r in verify_table(tag, n)}
        for row in table.rows:
            assert f"{tag}.table:{row.claim_suffix}" in seen


def test_full_run_small():
    run = run_full_repro(6, ["T"])
    assert run.ok
    claims = [(r.claim, r.n) for r in run.reports]
    assert claims == sorted(claims)
    assert run.dumps() == run_full_repro(6, ["T"]).dumps()


def test_full_run_refuses_small_n():
    with pytest.raises(NTooSmall):
        run_full_repro(4)
