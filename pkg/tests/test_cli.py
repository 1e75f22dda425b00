import json

from braidwork.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(argv, capsys):
    code, out = run(argv + ["--format", "json"], capsys)
    return code, json.loads(out)


def test_verify_identities_exits_zero(capsys):
    code, cert = run_json(["verify", "identities"], capsys)
    assert code == 0
    assert cert["summary"]["failed"] == 0
    assert cert["summary"]["verified"] > 100


def test_verify_conclass_reports_counts(capsys):
    code, cert = run_json(["verify", "conclass"], capsys)
    assert code == 0
    by_id = {r["id"]: r for r in cert["results"]}
    assert by_id["conclass/orbit-240"]["witness"]["orbit_size"] == 240
    assert by_id["conclass/distinct-18"]["witness"]["nontrivial_classes"] == 18


def test_corrupted_ledger_fails_with_witness(tmp_path, capsys):
    ledger_path = tmp_path / "ledger.json"
    code, _ = run(["verify", "identities", "--dump-ledger", str(ledger_path)], capsys)
    assert code == 0
    rows = json.loads(ledger_path.read_text())
    rows[0]["rhs"].append(1)
    bad_path = tmp_path / "bad.json"
    bad_path.write_text(json.dumps(rows))
    code, cert = run_json(["verify", "identities", "--ledger", str(bad_path)], capsys)
    assert code == 1
    failed = [r for r in cert["results"] if r["status"] == "failed"]
    assert failed and "witness_normal_forms" in failed[0]
    assert "lhs" in failed[0] and "rhs" in failed[0]


def test_orbit_sizes(capsys):
    code, cert = run_json(["orbit", "--n", "6", "--coefficient", "s3"], capsys)
    assert code == 0
    assert cert["results"][0]["witness"]["orbit_size"] == 240
    code, cert = run_json(
        ["orbit", "--n", "2", "--coefficient", "s3", "--base", "s,s"], capsys
    )
    assert cert["results"][0]["witness"]["orbit_size"] == 1
    # oracle-backed size for n = 3
    code, cert = run_json(["orbit", "--n", "3", "--coefficient", "s3"], capsys)
    assert cert["results"][0]["witness"]["orbit_size"] == 8


def test_br3_orbit_requires_cap_and_reports_degenerate(capsys):
    code, _ = run(["orbit", "--n", "5", "--coefficient", "br3"], capsys)
    assert code == 2  # usage error: cap required
    code, cert = run_json(
        ["orbit", "--n", "5", "--coefficient", "br3", "--cap", "40"], capsys
    )
    assert code == 0
    assert cert["results"][0]["status"] == "degenerate"


def test_transversal_export(capsys):
    code, cert = run_json(["transversal", "--n", "3"], capsys)
    assert code == 0
    rows = cert["results"][0]["witness"]["transversal"]
    assert len(rows) == 8
    assert rows[0]["word"] == {"n": 3, "word": []}
    assert all(all(x > 0 for x in r["word"]["word"]) for r in rows)


def test_monodromy_anchor_and_expectation(capsys):
    code, cert = run_json(
        ["monodromy", "--family", "cusp", "--expect", '{"n":2,"word":[1,1,1]}'],
        capsys,
    )
    assert code == 0
    assert cert["results"][0]["witness"]["trace"]["word"]["word"] == [1, 1, 1]
    code, cert = run_json(
        ["monodromy", "--family", "cusp", "--expect", '{"n":2,"word":[1]}'], capsys
    )
    assert code == 1


def test_monodromy_through_degeneration_is_degenerate(capsys):
    loop = json.dumps(
        {"kind": "polyline", "points": [{"lam": [1, 0]}, {"lam": [-1, 0]}, {"lam": [1, 0]}]}
    )
    code, cert = run_json(["monodromy", "--family", "tangency", "--loop", loop], capsys)
    assert code == 0
    assert cert["results"][0]["status"] == "degenerate"


def test_admissible_chords(capsys):
    code, cert = run_json(
        ["admissible", "--family", "base", "--k", "2", "--arc", "1:3"], capsys
    )
    assert code == 0
    witness = cert["results"][0]["witness"]
    assert witness["coxeter"] and witness["artin"]
    code, cert = run_json(
        ["admissible", "--family", "base", "--k", "2", "--arc", "1:2"], capsys
    )
    witness = cert["results"][0]["witness"]
    assert not witness["coxeter"]


def test_certificates_are_reproducible(capsys):
    _, first = run_json(["verify", "theorem"], capsys)
    _, second = run_json(["verify", "theorem"], capsys)
    assert first["body_sha256"] == second["body_sha256"]
    stripped = {k: v for k, v in first.items() if k != "body_sha256"}
    for row in stripped["results"]:
        row.pop("timing_ms", None)
    for row in second["results"]:
        row.pop("timing_ms", None)
    assert stripped == {k: v for k, v in second.items() if k != "body_sha256"}


def test_output_file(tmp_path, capsys):
    out = tmp_path / "cert.json"
    code, _ = run(
        ["verify", "theorem", "--format", "json", "--out", str(out)], capsys
    )
    assert code == 0
    data = json.loads(out.read_text())
    assert data["summary"]["failed"] == 0
