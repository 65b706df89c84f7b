"""Campaign verdicts, report schema, and byte-level determinism."""

import json

import pytest

from rmrings import verifier as vf


def test_akizuki_default_pass():
    r = vf.check_akizuki()
    assert r.verdict == "pass"
    assert r.stats["errors"] == 0
    assert r.stats["trials"] == len(vf.AKIZUKI_CORPUS)
    by_ring = {w["ring"]: w for w in r.witnesses}
    assert by_ring["Z6"]["reduced"] is True
    assert by_ring["Z6"]["field_orders"] == [3, 2]
    assert by_ring["Z4"]["reduced"] is False
    assert "nilpotent" in by_ring["Z4"]


def test_akizuki_bad_descriptor_fails():
    r = vf.check_akizuki(corpus=("Z6", "Zbad"))
    assert r.verdict == "fail"
    assert r.stats["errors"] == 1
    assert any("error" in w for w in r.witnesses)


def test_poly_rm_default_pass():
    r = vf.check_polynomial_rm()
    assert r.verdict == "pass"
    by_ring = {w["ring"]: w["rm_poly"] for w in r.witnesses}
    assert by_ring["Z6"] is True
    assert by_ring["Z4"] is False
    assert by_ring["Z5[x]/(x^2)"] is False
    assert by_ring["Z2[x]/(x^2+x+1)"] is True


def test_reduced_rm_both_orders_pass():
    r = vf.check_reduced_rm(s=14, trials=40, seed=1)
    assert r.verdict == "pass"
    assert r.stats["trials"] == 40
    assert r.stats["cross_checked"] > 0
    r = vf.check_reduced_rm(s=3, trials=40, seed=1)
    assert r.verdict == "pass"


def test_cdr_maximal_order_passes():
    r = vf.check_cdr_dedekind(s=14, trials=60, seed=7)
    assert r.verdict == "pass"
    assert r.stats["containment_pairs"] > 0
    assert r.stats["max_chain"] >= 2


def test_cdr_nonmaximal_order_finds_counterexample():
    r = vf.check_cdr_dedekind(s=3, trials=100, seed=7)
    assert r.verdict == "counterexample_found_as_expected"
    w = r.witnesses[0]
    assert w == {
        "divisor": "(2, 1+w)",
        "ideal": "(2, 2*w)",
        "contains": True,
        "divides": False,
        "invertible": False,
    }


def test_cdr_counterexample_seed_independent():
    # the probe over small principal ideals runs before any random draws
    for seed in (0, 1, 99):
        r = vf.check_cdr_dedekind(s=3, trials=10, seed=seed)
        assert r.verdict == "counterexample_found_as_expected"
        assert r.witnesses[0]["divisor"] == "(2, 1+w)"


def test_ufd_failure_pass():
    r = vf.check_ufd_failure()
    assert r.verdict == "pass"
    summary = r.witnesses[-1]
    assert summary["factorizations"] == "15 = 3*5 = (1+w)*(1-w)"
    assert summary["primes"] == ["(3, 1+w)", "(3, 2+w)", "(5, 1+w)", "(5, 4+w)"]
    assert summary["chain_length"] == 4


def test_cofinite_pass():
    r = vf.check_cofinite(n=20, trials=500, seed=0)
    assert r.verdict == "pass"
    assert r.stats["trials"] == 500
    assert r.stats["max_chain"] == 20


# ------------------------------------------------------------------ registry


def test_run_check_dispatch():
    r = vf.run_check("ufd", {"seed": 3})
    assert r.check == "ufd" and r.params["seed"] == 3


def test_run_check_unknown_id():
    with pytest.raises(ValueError, match="unknown check"):
        vf.run_check("nosuch")


def test_run_check_unknown_param():
    with pytest.raises(ValueError, match="does not take"):
        vf.run_check("ufd", {"bound": 5})
    with pytest.raises(ValueError, match="does not take"):
        vf.run_check("cofinite", {"s": 3})


def test_registry_covers_all_checks():
    assert sorted(vf.CHECKS) == [
        "akizuki",
        "cdr",
        "cofinite",
        "poly-rm",
        "reduced-rm",
        "ufd",
    ]


# ------------------------------------------------------------ report format


def test_report_json_schema():
    r = vf.check_cdr_dedekind(s=3, trials=5, seed=7)
    d = json.loads(r.to_json())
    assert sorted(d) == [
        "check",
        "params",
        "schema_version",
        "stats",
        "verdict",
        "witnesses",
    ]
    assert d["schema_version"] == 1
    assert d["stats"]["ms"] is None
    assert isinstance(d["witnesses"], list)


def test_report_json_is_sorted_and_stable():
    r = vf.check_ufd_failure(seed=0)
    text = r.to_json()
    assert text == json.dumps(json.loads(text), sort_keys=True, indent=2)


@pytest.mark.parametrize(
    "check_id,params",
    [
        ("akizuki", {}),
        ("poly-rm", {}),
        ("reduced-rm", {"s": 14, "trials": 25, "seed": 5}),
        ("reduced-rm", {"s": 3, "trials": 25, "seed": 5}),
        ("cdr", {"s": 14, "trials": 30, "seed": 7}),
        ("cdr", {"s": 3, "trials": 30, "seed": 7}),
        ("cofinite", {"n": 10, "trials": 200, "seed": 2}),
        ("ufd", {"seed": 0}),
    ],
)
def test_reports_byte_identical_across_runs(check_id, params):
    a = vf.run_check(check_id, params).to_json()
    b = vf.run_check(check_id, params).to_json()
    assert a == b


def test_notes_render_in_text_but_not_json():
    r = vf.check_cdr_dedekind(s=3, trials=5, seed=7)
    assert r.notes
    assert "note" not in json.loads(r.to_json())
    text = vf.render_text(r)
    assert "note    :" in text
    assert "check   : cdr" in text
    assert "verdict : counterexample_found_as_expected" in text


def test_render_text_hides_ms():
    r = vf.check_ufd_failure()
    assert "ms=" not in vf.render_text(r)
