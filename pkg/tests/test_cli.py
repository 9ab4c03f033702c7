"""Command-line behavior: exit codes, JSON reports, file handling."""

import json
from pathlib import Path

import pytest

from matroidworks.catalog import fano, graphic_k4
from matroidworks.cli import main
from matroidworks.matroid import (
    matroid_from_bases,
    matroid_from_json_dict,
    matroid_to_json_dict,
)

CORPUS = str(Path(__file__).parent / "data" / "catalog_corpus.json")


def run(capsys, argv):
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def run_json(capsys, argv):
    rc, out, err = run(capsys, argv + ["--format", "json"])
    return rc, json.loads(out), err


def test_info_json_round_trips_matroid(capsys):
    rc, d, _ = run_json(capsys, ["info", "--name", "k4"])
    assert rc == 0
    assert d["n"] == 6
    assert d["rank"] == 3
    assert d["num_bases"] == 16
    assert set(d["flats_by_rank"]) == {"0", "1", "2", "3"}
    assert matroid_from_json_dict(d["matroid"]) == graphic_k4()


def test_info_aut_flag(capsys):
    rc, d, _ = run_json(capsys, ["info", "--name", "fano", "--aut"])
    assert rc == 0
    assert d["automorphism_group_order"] == 168
    rc, d, _ = run_json(capsys, ["info", "--name", "fano"])
    assert "automorphism_group_order" not in d


def test_info_text_mode(capsys):
    rc, out, _ = run(capsys, ["info", "--name", "k4"])
    assert rc == 0
    assert "rank" in out and "3" in out


def test_info_from_file(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(matroid_to_json_dict(fano())))
    rc, d, _ = run_json(capsys, ["info", "--file", str(path)])
    assert rc == 0
    assert d["n"] == 7 and d["num_bases"] == 28


def test_source_required_and_exclusive(capsys):
    rc, _, err = run(capsys, ["info"])
    assert rc == 2
    rc, _, err = run(capsys, ["info", "--name", "k4", "--file", "x.json"])
    assert rc == 2
    rc, _, err = run(capsys, ["info", "--name", "no_such_matroid"])
    assert rc == 2
    assert "no_such_matroid" in err
    rc, _, err = run(capsys, ["info", "--file", "/tmp/definitely_not_here.json"])
    assert rc == 2


def test_malformed_file_reports_position(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"n": 3,\n "bases" []}')
    rc, _, err = run(capsys, ["info", "--file", str(path)])
    assert rc == 2
    assert "line 2" in err


def test_realization_single_characteristic(capsys):
    rc, d, _ = run_json(capsys, ["realization", "--name", "pappus"])
    assert rc == 0
    assert d["verdict"] == "NonEmpty"
    assert len(d["free_variables"]) == 2
    assert d["ideal_generators"] == []
    assert len(d["inequations"]) == 7
    rc, d, _ = run_json(capsys, ["realization", "--name", "fano", "--char", "2"])
    assert rc == 0
    assert d["verdict"] == "NonEmpty"
    assert d["free_variables"] == []


def test_realization_profile(capsys):
    rc, d, _ = run_json(capsys, ["realization", "--name", "fano", "--profile"])
    assert rc == 0
    verdicts = {row["characteristic"]: row["verdict"] for row in d["profile"]}
    assert verdicts == {
        0: "Empty",
        2: "NonEmpty",
        3: "Empty",
        5: "Empty",
        7: "Empty",
        11: "Empty",
        13: "Empty",
    }


def test_realization_no_simplify(capsys):
    rc, d, _ = run_json(
        capsys, ["realization", "--name", "fano", "--char", "2", "--no-simplify"]
    )
    assert rc == 0
    assert d["verdict"] == "NonEmpty"
    assert d["substitutions"] == []


def test_realization_undecided_exit_code(capsys):
    rc, d, _ = run_json(
        capsys, ["realization", "--name", "pappus", "--budget-gb", "1"]
    )
    assert rc == 3
    assert d["verdict"] == "Undecided"


def test_realizable_q_table(capsys):
    rc, d, _ = run_json(
        capsys, ["realizable-q", "--name", "moebius_kantor", "--qmax", "13"]
    )
    assert rc == 0
    table = {row["q"]: row["realizable"] for row in d["table"]}
    assert {q for q, ok in table.items() if ok} == {3, 4, 7, 9, 13}
    rc, _, _ = run(capsys, ["realizable-q", "--name", "k4", "--qmax", "1"])
    assert rc == 2


def test_realizable_q_budget(capsys):
    rc, _, err = run(
        capsys,
        ["realizable-q", "--name", "pappus", "--qmax", "11", "--budget-search", "50"],
    )
    assert rc == 3
    assert "budget" in err.lower()


def test_invariants_k4(capsys):
    rc, d, _ = run_json(capsys, ["invariants", "--name", "k4"])
    assert rc == 0
    assert d["tutte"] == "x^3 + y^3 + 3*x^2 + 4*x*y + 3*y^2 + 2*x + 2*y"
    assert d["num_bases"] == 16
    assert d["characteristic"] == "q^3 - 6*q^2 + 11*q - 6"
    assert d["characteristic_coefficients_abs"] == [1, 6, 11, 6]
    assert d["log_concave"] is True
    assert d["reduced_characteristic"] == "q^2 - 5*q + 6"
    assert d["ingleton_violation"] is None


def test_invariants_vamos_witness(capsys):
    rc, d, _ = run_json(capsys, ["invariants", "--name", "vamos"])
    assert rc == 0
    assert d["ingleton_violation"] == [[1, 2], [3, 4], [5, 6], [7, 8]]


def test_invariants_with_loop(capsys, tmp_path):
    path = tmp_path / "loopy.json"
    m = matroid_from_bases(3, [[1, 2]])
    path.write_text(json.dumps(matroid_to_json_dict(m)))
    rc, d, _ = run_json(capsys, ["invariants", "--file", str(path)])
    assert rc == 0
    assert d["characteristic"] == "0"
    assert d["reduced_characteristic"] is None


def test_chow_summary(capsys):
    rc, d, _ = run_json(capsys, ["chow", "--name", "k4"])
    assert rc == 0
    assert d["graded_dimensions"] == [1, 8, 1]
    assert d["omega_bar"] == [1, -5, 6]
    assert d["reduced_characteristic_descending"] == [1, -5, 6]
    assert d["volumes_match_reduced_characteristic"] is True


def test_chow_pairing_report(capsys):
    rc, d, _ = run_json(capsys, ["chow", "--name", "k4", "--k", "1", "--ell", "beta"])
    assert rc == 0
    assert d["ell"] == "beta"
    assert d["k"] == 1
    assert d["kernel_dimension"] == 7
    assert d["mat1"] == d["mat2"]
    assert d["poincare_nondegenerate"] is True
    assert d["hard_lefschetz_iso"] is True
    assert d["hodge_riemann_definite"] is True


def test_chow_guards(capsys, tmp_path):
    rc, _, err = run(capsys, ["chow", "--name", "k4", "--k", "5"])
    assert rc == 4
    path = tmp_path / "loopy.json"
    path.write_text(json.dumps(matroid_to_json_dict(matroid_from_bases(3, [[1, 2]]))))
    rc, _, err = run(capsys, ["chow", "--file", str(path)])
    assert rc == 4
    assert "loop" in err.lower()


def test_corpus_json(capsys):
    rc, d, _ = run_json(capsys, ["corpus", CORPUS])
    assert rc == 0
    assert (d["total"], d["true"], d["false"]) == (6, 4, 2)


def test_corpus_text_and_filter(capsys):
    rc, out, _ = run(capsys, ["corpus", CORPUS])
    assert rc == 0
    assert "4 of 6 selected entries realizable over characteristic 0" in out
    rc, d, _ = run_json(capsys, ["corpus", CORPUS, "--filter", "rank=3"])
    assert rc == 0
    assert d["selected"] == 5
    statuses = {r["id"]: r["status"] for r in d["results"]}
    assert statuses["vamos"] == "filtered"


def test_corpus_missing_file(capsys):
    rc, _, err = run(capsys, ["corpus", "/tmp/definitely_not_here.json"])
    assert rc == 2


def test_deterministic_output(capsys):
    rc1, out1, _ = run(capsys, ["chow", "--name", "k4", "--format", "json"])
    rc2, out2, _ = run(capsys, ["chow", "--name", "k4", "--format", "json"])
    assert (rc1, out1) == (rc2, out2)
