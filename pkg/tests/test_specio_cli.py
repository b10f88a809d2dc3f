"""Document parsing, the command-line driver, output caching, and corpus
verification."""

import json
import os
import subprocess
import sys

import pytest

from radhom.errors import ValidationError
from radhom.specio import (canonical_json, load_document, parse_complex,
                           parse_hom, parse_module, parse_ring)
from radhom.verification import bundled_jobs_dir


def run_cli(args, cache_dir, cwd=None):
    env = dict(os.environ)
    env["RADHOM_CACHE_DIR"] = str(cache_dir)
    return subprocess.run([sys.executable, "-m", "radhom.cli"] + args,
                          capture_output=True, text=True, env=env, cwd=cwd)


def job(name):
    return os.path.join(bundled_jobs_dir(), name)


def test_parse_ring_errors_carry_locations():
    with pytest.raises(ValidationError, match="at ring.n"):
        parse_ring({"kind": "zn", "n": 0})
    with pytest.raises(ValidationError, match="unknown ring kind"):
        parse_ring({"kind": "weird"})
    with pytest.raises(ValidationError, match="missing field"):
        parse_ring({"kind": "zn"})


def test_parse_module_checks_ambient_ring():
    ambient = parse_ring({"kind": "zn", "n": 2})
    with pytest.raises(ValidationError, match="differs from ambient"):
        parse_module({"kind": "ring-as-module",
                      "ring": {"kind": "zn", "n": 3}}, ring=ambient)


def test_parse_hom_errors_carry_positions():
    m = parse_module({"kind": "ring-as-module", "ring": {"kind": "zn", "n": 3}})
    with pytest.raises(ValidationError, match="expected 3 image indices"):
        parse_hom([0, 1], m, m)
    with pytest.raises(ValidationError, match=r"hom\[1\].*outside target"):
        parse_hom([0, 7, 2], m, m)


def test_parse_complex_rejects_noncomposing_diffs():
    f2 = {"kind": "ring-as-module", "ring": {"kind": "zn", "n": 2}}
    with pytest.raises(ValidationError):
        parse_complex({"modules": [f2, f2, f2], "diffs": [[0, 1], [0, 1]]})


def test_load_document_errors(tmp_path):
    with pytest.raises(ValidationError, match="cannot read"):
        load_document(str(tmp_path / "absent.json"))
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    with pytest.raises(ValidationError, match="not valid JSON: line"):
        load_document(str(bad))


def test_canonical_json_is_order_independent():
    a = canonical_json({"b": 1, "a": [2, 3]})
    b = canonical_json({"a": [2, 3], "b": 1})
    assert a == b
    assert a.endswith("\n")


def test_job_command_mismatch(tmp_path):
    p = run_cli(["ring-info", "--input", job("quotient-z12.json")], tmp_path)
    assert p.returncode == 1
    d = json.loads(p.stdout)
    assert d["error"]["kind"] == "validation"
    assert "job file is for command" in d["error"]["message"]


def test_ring_info_frozen_values(tmp_path):
    p = run_cli(["ring-info", "--no-cache",
                 "--input", job("ring-z12.json")], tmp_path)
    assert p.returncode == 0
    d = json.loads(p.stdout)
    assert len(d["ideals"]) == 6
    assert d["primes"] == [[0, 3, 6, 9], [0, 2, 4, 6, 8, 10]]
    assert d["radical_ideals"][0] == [0, 6]
    assert len(d["radical_ideals"]) == 4
    assert d["semiring"]["zero"] == 0
    assert d["semiring"]["one"] == 3
    assert d["verdict"] == {"violations": False}


def test_quotient_frozen_values(tmp_path):
    p = run_cli(["semimodule-quotient", "--no-cache",
                 "--input", job("quotient-z12.json")], tmp_path)
    assert p.returncode == 0
    d = json.loads(p.stdout)
    assert d["quotient"] == {"classes": [[0, 2], [1, 3]], "reps": [0, 1]}
    assert d["class_count"] == 2


def test_homology_frozen_values(tmp_path):
    p = run_cli(["complex-homology", "--no-cache",
                 "--input", job("homology-doubling.json")], tmp_path)
    assert p.returncode == 0
    assert json.loads(p.stdout)["class_counts"] == [2, 2]


def test_snake_frozen_values(tmp_path):
    p = run_cli(["snake", "--no-cache",
                 "--input", job("snake-line02.json")], tmp_path)
    assert p.returncode == 0
    d = json.loads(p.stdout)
    les = d["long_exact_sequence"]
    assert les["exact"] is True
    assert les["acyclic"] == {"sub": False, "mid": True, "quot": False}
    assert les["two_of_three"] is None
    assert d["verdict"] == {"violations": False}


def test_cache_modes_are_byte_identical(tmp_path):
    cache = tmp_path / "cache"
    args = ["complex-homology", "--input", job("homology-doubling.json")]
    cold = run_cli(args, cache)
    entries = list(cache.glob("*.json"))
    assert len(entries) == 1
    warm = run_cli(args, cache)
    assert list(cache.glob("*.json")) == entries
    nocache = run_cli(args + ["--no-cache"], cache)
    runs = [cold, warm, nocache]
    assert [p.returncode for p in runs] == [0, 0, 0]
    assert len({p.stdout for p in runs}) == 1


def test_out_flag_matches_stdout(tmp_path):
    out = tmp_path / "report.json"
    args = ["ring-info", "--no-cache", "--input", job("ring-z12.json")]
    direct = run_cli(args, tmp_path / "c1")
    to_file = run_cli(args + ["--out", str(out)], tmp_path / "c2")
    assert to_file.returncode == 0
    assert out.read_text() == direct.stdout


def _plane_table():
    return {
        "kind": "table",
        "ring": {"kind": "zn", "n": 2},
        "size": 4,
        "add": [[i ^ j for j in range(4)] for i in range(4)],
        "action": [[0, 0, 0, 0], [0, 1, 2, 3]],
        "zero": 0,
    }


def _failing_transport_input():
    """Identity line complexes with phi an embedding onto a plane line, psi
    zero, and s the embedding again: a classical homotopy by cancellation
    whose transported pair identity fails."""
    f2 = {"kind": "ring-as-module", "ring": {"kind": "zn", "n": 2}}
    return {
        "source": {"modules": [f2, f2], "diffs": [[0, 1]]},
        "target": {"modules": [_plane_table(), _plane_table()],
                   "diffs": [[0, 1, 2, 3]]},
        "phi": [[0, 2], [0, 2]],
        "psi": [[0, 0], [0, 0]],
        "s": [[0, 2]],
    }


def test_homotopy_violation_exits_2(tmp_path):
    path = tmp_path / "job.json"
    path.write_text(json.dumps(_failing_transport_input()))
    p = run_cli(["homotopy", "--no-cache", "--input", str(path)], tmp_path)
    assert p.returncode == 2
    d = json.loads(p.stdout)
    assert d["ok"] is False
    assert d["pair_identity_failures"] == [[0, 1, 2, 0], [1, 1, 2, 0]]
    assert d["induced_mismatches"] == []
    assert d["verdict"] == {"violations": True}


def test_verify_paper_empty_corpus(tmp_path):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    p = run_cli(["verify-paper", "--no-cache", "--input", str(corpus)],
                tmp_path)
    assert p.returncode == 0
    d = json.loads(p.stdout)
    assert d["summary"] == {"total": 0, "failed": 0}
    assert d["verdict"] == {"violations": False}


def test_verify_paper_bundled_corpus_passes(tmp_path):
    p = run_cli(["verify-paper", "--no-cache",
                 "--input", bundled_jobs_dir()], tmp_path)
    assert p.returncode == 0
    d = json.loads(p.stdout)
    assert d["summary"]["total"] >= 7
    assert d["summary"]["failed"] == 0
    assert all(c["ok"] for c in d["checks"])


def test_verify_paper_flags_bad_and_violating_jobs(tmp_path):
    corpus = tmp_path / "corpus"
    corpus.mkdir()
    (corpus / "bad.json").write_text(json.dumps(
        {"command": "ring-info", "input": {"kind": "zn", "n": 0}}))
    (corpus / "violating.json").write_text(json.dumps(
        {"command": "homotopy", "input": _failing_transport_input()}))
    p = run_cli(["verify-paper", "--no-cache", "--input", str(corpus)],
                tmp_path)
    assert p.returncode == 2
    d = json.loads(p.stdout)
    assert d["summary"] == {"total": 2, "failed": 2}
    kinds = {c["file"]: c["kind"] for c in d["checks"]}
    assert kinds == {"bad.json": "validation",
                     "violating.json": "theorem-violation"}
