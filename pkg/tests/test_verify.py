import pytest

from leibalg.catalog import FAMILIES, CatalogEntry, build
from leibalg.derivations import FAIL, INCONCLUSIVE, PASS
from leibalg.errors import ParameterError
from leibalg.verify import (
    Check,
    VerificationReport,
    check_entry,
    commutator_identity_holds,
    separation_report,
    verify_family,
)


def report(*statuses):
    return VerificationReport("X", (1, 1), [Check("c", 1, "X", s, "") for s in statuses], 0.0)


def test_status_aggregation():
    assert report(PASS, PASS).status == PASS and report(PASS).exit_code == 0
    assert report(PASS, INCONCLUSIVE).exit_code == 2
    assert report(INCONCLUSIVE, FAIL).exit_code == 1
    text = report(PASS, FAIL).format_text()
    assert "overall: FAIL" in text


@pytest.mark.parametrize("fid", [f for f in FAMILIES if f not in ("R_n1_gamma", "R_2n1_gamma")])
def test_every_family_passes_at_small_n(fid):
    n = 3 if fid.startswith("Q") else 5
    rep = verify_family(fid, n, n)
    bad = [c for c in rep.checks if c.status != PASS]
    assert rep.status == PASS, bad


def test_gamma_family_failures_are_only_identity():
    rep = verify_family("R_n1_gamma", 5, 5)
    bad = {(c.name, c.instance) for c in rep.checks if c.status != PASS}
    assert {name for name, _ in bad} == {"leibniz_identity", "fingerprint"}
    # the fingerprint check is inconclusive, not failed, for those instances
    statuses = {c.status for c in rep.checks if c.name == "fingerprint" and c.status != PASS}
    assert statuses == {INCONCLUSIVE}
    ok = [c for c in rep.checks if c.instance.endswith("gamma3=1)") and c.status != PASS]
    assert ok == []


def test_verify_family_errors():
    with pytest.raises(ParameterError):
        verify_family("F1", 5, 4)
    with pytest.raises(ParameterError):
        verify_family("F1", 2, 4)
    with pytest.raises(ParameterError):
        verify_family("Q2n2", 3, 12, max_dim=24)
    with pytest.raises(ParameterError):
        verify_family("R6_2", 5, 5, params={"alpha": 0})


def test_check_entry_names():
    names = [c.name for c in check_entry(CatalogEntry.make("L_2", 5))]
    assert "split_decomposition" in names and "nilradical_certificate" in names


def test_separation_report_consistent():
    rep = separation_report(5, seed=3)
    assert rep.consistent()
    assert len(rep.rows) == 4 and len(rep.pairs) == 6
    assert [r["is_leibniz"] for r in rep.rows] == [True, False, False, False]
    assert "consistent: yes" in rep.format_text()
    rep.pairs[0]["separated"] = not rep.pairs[0]["separated"]
    assert not rep.consistent()


def test_commutator_identity_helper():
    a = build("F2", 5)
    assert commutator_identity_holds(a, (1, 2, 0, 0, 1), (0, 1, 1, 3, 0))
    bad = build("R_n1_gamma", 5, gamma1=1)
    x = (0,) * 5 + (1,)
    e1 = (1,) + (0,) * 5
    assert not commutator_identity_holds(bad, x, e1)
