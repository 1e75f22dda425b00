import pytest

from braidwork.catalog import (
    CheckResult,
    IdentityRecord,
    build_e,
    build_matrix,
    catalog,
    catalog_self_check,
    conjugator_to_reference,
    coxeter_system,
    half_twist_classification,
    tau_word,
    verify_identities,
    verify_identity,
    verify_stabilizer_tables,
    verify_theorem_rows,
)
from braidwork.groups import PERM3_R, PERM3_S, PERM3_T
from braidwork.hurwitz import act_word, stabilizes
from braidwork.words import compose, word


def test_build_matrix_examples():
    m2 = build_matrix(2)
    assert m2.entries == ((1, 3), (3, 1))
    m6 = build_matrix(6)
    assert m6[1, 3] == 1
    for i in range(1, 7):
        for j in range(1, 7):
            assert m6[i, j] == m6[j, i]
            assert m6[i, i] == 1
    with pytest.raises(ValueError):
        build_matrix(1)


def test_build_e_examples():
    m6 = build_matrix(6)
    assert build_e(1, 2, m6).letters == (1, 1, 1)
    assert build_e(1, 3, m6).letters == (2, 1, -2)
    assert build_e(2, 4, m6).letters == (3, 2, -3)
    with pytest.raises(ValueError):
        build_e(2, 2, m6)
    with pytest.raises(ValueError):
        build_e(1, 7, m6)


def test_catalog_contents():
    cat = catalog()
    assert set(cat.coxeter_systems) == {2, 3, 4, 5, 6}
    assert cat.coxeter_systems[3] == (PERM3_S, PERM3_T, PERM3_S)
    assert "e_13@6" in cat.named_braids
    assert "tau_1@5" in cat.named_braids
    assert "c_6" in cat.named_braids
    assert "bwB6_7" in cat.named_braids
    ids = {r.id for r in cat.identities}
    assert "band-reduction/e14@6" in ids
    assert "twist-normality/e12-tau1@5" in ids
    assert "twist-normality/e12-tau1@6" in ids
    assert any(r.id.startswith("halftwist-transversal/row01") for r in cat.identities)


def test_catalog_self_check_passes():
    assert all(r.passed for r in catalog_self_check())


def test_verify_identity_pass_and_corrupted_fail():
    cat = catalog()
    rec = next(r for r in cat.identities if r.id == "band-reduction/e14@6")
    assert verify_identity(rec).status == "verified"
    corrupted = IdentityRecord(
        rec.id, rec.strand_count, rec.lhs, compose(rec.rhs, word(6, 1)), rec.source
    )
    result = verify_identity(corrupted)
    assert result.status == "failed"
    assert "lhs" in result.witness and "rhs" in result.witness
    forms = result.witness["witness_normal_forms"]
    assert "lhs" in forms and "rhs" in forms


def test_full_ledger_verifies_and_flagged_rows_are_named():
    results = verify_identities()
    assert results and all(r.passed for r in results)
    flagged = {r.id: r for r in results if r.witness and "verifying_variant" in r.witness}
    # the two rows with a question in the source tables resolve as computed
    assert flagged["twist-normality/e56"].witness["verifying_variant"].startswith("as written")
    assert flagged["stab-gen/6-3"].witness["verifying_variant"].startswith("generator list")
    # five transversal-table rows and the twist-conjugate row carry emendations
    for rid in ("halftwist-transversal/row05", "halftwist-transversal/row09",
                "halftwist-transversal/row11", "halftwist-transversal/row14",
                "halftwist-transversal/row15", "halftwist-twist/e13-tau1inv@6"):
        assert flagged[rid].witness["verifying_variant"].startswith("emended")


def test_stabilizer_tables():
    results = verify_stabilizer_tables()
    assert results and all(r.passed for r in results)


def test_conjugator_displayed_computations():
    s, t, r = PERM3_S, PERM3_T, PERM3_R
    assert act_word(conjugator_to_reference(3), coxeter_system(3)) == (r, s, s)
    assert act_word(conjugator_to_reference(4), coxeter_system(4)) == (r, t, t, t)
    assert act_word(conjugator_to_reference(5), coxeter_system(5)) == (t, s, s, s, s)
    assert act_word(conjugator_to_reference(6), coxeter_system(6)) == (s, s, t, t, t, t)


def test_sigma2_conjugate_stabilizes_three_strand_system():
    assert stabilizes(word(3, 2, 1, -2), (PERM3_S, PERM3_T, PERM3_S))


def test_theorem_rows():
    assert all(r.passed for r in verify_theorem_rows())


def test_half_twist_classification_counts():
    report = half_twist_classification()
    assert report.orbit_size == 240
    assert report.nontrivial_conjugates == 18
    assert report.distinct_conjugates == 19  # the trivial class rides along
    assert report.passed


def test_tau_word_requires_enough_strands():
    with pytest.raises(ValueError):
        tau_word(1, 4)
    with pytest.raises(ValueError):
        tau_word(3, 8)
