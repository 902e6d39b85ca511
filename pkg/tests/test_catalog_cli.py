import io
import json

from sepcheck.catalog import build_catalog, catalog_list
from sepcheck.cli import (
    EXIT_ASSERTION,
    EXIT_INPUT,
    EXIT_OK,
    EXIT_REFUSED,
    main,
    run_selftest,
)
from sepcheck.complexes import SimplicialComplex
from sepcheck.maps import SimplicialMap

REQUIRED_IDS = {
    "equator_s1_s2", "equator_s2_s3", "figure_eight_s1_s2",
    "triple_bouquet_s1_s2", "double_wrap_s1", "essential_circle_t2",
    "rp2_identity", "rp2_essential_circle",
}


def test_catalog_has_all_required_entries():
    cat = build_catalog()
    assert REQUIRED_IDS <= set(cat)
    assert len(cat) >= 8


def test_catalog_list_is_sorted_and_carries_expectations():
    entries = catalog_list()
    ids = [e["id"] for e in entries]
    assert ids == sorted(ids)
    by_id = {e["id"]: e for e in entries}
    assert by_id["figure_eight_s1_s2"]["expected"]["beta0_formula"] == 3
    assert by_id["triple_bouquet_s1_s2"]["expected"]["beta0_oracle"] == 4


def test_catalog_entries_roundtrip_through_files(tmp_path):
    for entry in build_catalog().values():
        complexes = {}
        for name, k in entry.complexes.items():
            path = tmp_path / f"{name}.json"
            k.save(path)
            complexes[name] = SimplicialComplex.load(path)
            assert complexes[name] == k
        mpath = tmp_path / f"{entry.id}.json"
        entry.map.save(mpath)
        with open(mpath) as fh:
            back = SimplicialMap.from_json_dict(json.load(fh), complexes)
        assert back.to_json_dict() == entry.map.to_json_dict()


def test_cli_catalog_lists_entries(capsys):
    assert main(["catalog"]) == EXIT_OK
    out = json.loads(capsys.readouterr().out)
    assert len(out) >= 8


def test_cli_analyze_figure_eight_passes(capsys):
    code = main(["analyze", "--entry", "figure_eight_s1_s2"])
    report = json.loads(capsys.readouterr().out)
    assert code == EXIT_OK
    assert report["separation"]["beta0_formula"] == 3
    assert report["separation"]["agreement"]
    assert report["obstruction"]["predicate_thm_final"]
    assert report["eq1_identity"] is True


def test_cli_analyze_refuses_torus(capsys):
    code = main(["analyze", "--entry", "essential_circle_t2"])
    report = json.loads(capsys.readouterr().out)
    assert code == EXIT_REFUSED
    assert report["separation"] == {"refused": "h1_Y_zero"}


def test_cli_analyze_malformed_file_is_input_error(tmp_path, capsys):
    bad = tmp_path / "broken.json"
    bad.write_text("{not json")
    code = main(["analyze", "--map", str(bad)])
    capsys.readouterr()
    assert code == EXIT_INPUT


def test_cli_analyze_unknown_entry_is_input_error(capsys):
    code = main(["analyze", "--entry", "does_not_exist"])
    capsys.readouterr()
    assert code == EXIT_INPUT


def test_cli_analyze_from_files(tmp_path, capsys):
    entry = build_catalog()["equator_s1_s2"]
    args = []
    for name, k in entry.complexes.items():
        path = tmp_path / f"{name}.json"
        k.save(path)
        args += ["--complex", str(path)]
    mpath = tmp_path / "map.json"
    entry.map.save(mpath)
    out_json = tmp_path / "report.json"
    code = main(["analyze", *args, "--map", str(mpath), "--json", str(out_json)])
    printed = capsys.readouterr().out
    assert code == EXIT_OK
    assert json.loads(out_json.read_text()) == json.loads(printed)


def test_cli_oracle_reports_component_count(capsys):
    code = main(["oracle", "--entry", "triple_bouquet_s1_s2"])
    out = json.loads(capsys.readouterr().out)
    assert code == EXIT_OK
    assert out == {"map": "triple_bouquet_s1_s2", "beta0_oracle": 4}


def test_cli_duality_check_entry(capsys):
    code = main(["duality-check", "--entry", "equator_s1_s2"])
    out = json.loads(capsys.readouterr().out)
    assert code == EXIT_OK
    assert all(item["certified"] and item["poincare_duality"] for item in out)


def test_cli_analyze_is_deterministic(capsys):
    assert main(["analyze", "--entry", "figure_eight_s1_s2"]) == EXIT_OK
    first = capsys.readouterr().out
    assert main(["analyze", "--entry", "figure_eight_s1_s2"]) == EXIT_OK
    second = capsys.readouterr().out
    assert first == second


def test_selftest_passes_and_is_deterministic():
    buf1, buf2 = io.StringIO(), io.StringIO()
    assert run_selftest(out=buf1) == EXIT_OK
    assert run_selftest(out=buf2) == EXIT_OK
    assert buf1.getvalue() == buf2.getvalue()
    assert all(line.startswith("PASS") for line in buf1.getvalue().splitlines())


def test_selftest_negative_control_catches_corruption():
    corrupted = build_catalog()
    corrupted["figure_eight_s1_s2"].expected["beta0_formula"] = 99
    buf = io.StringIO()
    assert run_selftest(entries=corrupted, out=buf) == EXIT_ASSERTION
    lines = buf.getvalue().splitlines()
    assert any(line.startswith("FAIL catalog_figure_eight_s1_s2") for line in lines)
