import json
from fractions import Fraction

import pytest

from circumradii.exact_core import Mode, Point, is_general_position
from circumradii.harness.cli import main
from circumradii.harness.experiments import (
    MIRROR_PAIR,
    ROTATED_PAIR,
    ExperimentRecord,
    bezout_check,
    constructed_gap_records,
    experiment_bezout,
    experiment_gap_cases,
    experiment_small_cases,
    read_records,
    small_case_record,
    verify_record_certificate,
    write_records,
)
from circumradii.harness.generate import GenerationTimeout, GeneratorConfig, derive_seed, generate_instance
from circumradii.harness.pointset_io import (
    PointSetFormatError,
    format_pointset,
    load_pointset,
    parse_pointset,
    save_pointset,
)
from circumradii.harness.search import search_extremal
from circumradii.locus_curves import SamePair, radius_locus

# -- generation ---------------------------------------------------------------

def test_generate_examples():
    pts = generate_instance(GeneratorConfig(1, 4, 100))
    assert len(pts) == 4 and len(set(pts)) == 4
    assert is_general_position(pts, Mode.PAPER).ok
    assert all(p.x.denominator == 1 and 0 <= p.x < 100 and 0 <= p.y < 100 for p in pts)
    assert generate_instance(GeneratorConfig(1, 4, 100)) == pts
    with pytest.raises(GenerationTimeout):
        generate_instance(GeneratorConfig(1, 5, 2))


@pytest.mark.parametrize("mode", list(Mode))
def test_generated_sets_pass_in_their_mode(mode):
    for seed in range(10):
        pts = generate_instance(GeneratorConfig(seed, 10, 12, mode))
        assert is_general_position(pts, mode).ok


def test_config_validation():
    for bad in [(-1, 4, 10), (0, -1, 10), (0, 4, 0), (2**64, 4, 10)]:
        with pytest.raises(ValueError):
            GeneratorConfig(*bad)


def test_derive_seed_is_stable_and_label_sensitive():
    assert derive_seed(7, "x", 1) == derive_seed(7, "x", 1)
    assert derive_seed(7, "x", 1) != derive_seed(7, "x", 2)
    assert 0 <= derive_seed(7, "x") < 2**64


# -- point-set files ----------------------------------------------------------

def test_pointset_round_trip(tmp_path):
    pts = [Point.of(Fraction(1, 2), -3), Point.of(0, Fraction(-7, 3))]
    path = tmp_path / "a.pts"
    save_pointset(path, pts, comment="two points")
    assert load_pointset(path) == pts
    text = path.read_text()
    assert text.startswith("pointset 1\n") and "1/2 -3/1" in text


def test_pointset_parse_details():
    text = "pointset 1\n# header comment\n\n1/1 2  # trailing\n  -3/4 +5/1\n"
    assert parse_pointset(text) == [Point.of(1, 2), Point.of(Fraction(-3, 4), 5)]
    assert parse_pointset(format_pointset(MIRROR_PAIR)) == MIRROR_PAIR


@pytest.mark.parametrize(
    "text",
    [
        "pointset 2\n0 0\n",
        "0 0\n1 1\n",
        "pointset 1\n0 0\n0/1 0/3\n",
        "pointset 1\n0.5 1\n",
        "pointset 1\n1/0 1\n",
        "pointset 1\n1 2 3\n",
    ],
)
def test_pointset_errors(text):
    with pytest.raises(PointSetFormatError):
        parse_pointset(text)


# -- experiments --------------------------------------------------------------

def test_small_cases_records_are_reproducible(tmp_path):
    first = experiment_small_cases(4, 5, seed=11)
    again = experiment_small_cases(4, 5, seed=11)
    assert [r.to_json_line() for r in first] == [r.to_json_line() for r in again]
    assert all(r.passed and r.n == 9 for r in first)
    path = tmp_path / "r.jsonl"
    write_records(first, path)
    reloaded = read_records(path)
    assert reloaded == first
    assert all(verify_record_certificate(r) for r in reloaded)


def test_small_cases_rejects_other_k():
    with pytest.raises(ValueError):
        experiment_small_cases(6, 1, 0)


def test_mirror_pair_fails_size_four_check():
    rec = small_case_record(MIRROR_PAIR, 4, "injected", 0, 0, None, Mode.PAPER)
    assert not rec.passed
    assert rec.payload["subset_size"] == 3 and rec.payload["method"] == "exact"
    assert verify_record_certificate(rec)


def test_parallel_workers_match_serial():
    serial = experiment_gap_cases(4, seed=2)
    parallel = experiment_gap_cases(4, seed=2, workers=2)
    assert [r.to_json_line() for r in serial] == [r.to_json_line() for r in parallel]


def test_bezout_trials_pass():
    records = experiment_bezout(4, seed=3)
    assert all(r.passed for r in records)
    for r in records:
        assert r.payload["locus_degrees"][0] <= 6
        assert r.payload["sextic_circle"]["bezout_bound"] <= 12


def test_bezout_on_mirrored_pairs():
    # both loci contain the x-axis, the mirror line of the set
    out = bezout_check(MIRROR_PAIR, [((0, 2), (0, 3)), ((1, 2), (1, 3))], (0, 1, 2), 5)
    assert out["pass"]
    assert out["sextic_sextic"]["status"] in ("FINITE", "COMMON_COMPONENT")
    with pytest.raises(SamePair):
        radius_locus(*MIRROR_PAIR[:2], *MIRROR_PAIR[:2])


def test_bezout_circle_through_shared_point_pairs_is_a_component():
    pts = [Point.of(2, 3), Point.of(3, 19), Point.of(0, 21), Point.of(26, 25)]
    out = bezout_check(pts, [((0, 1), (0, 2)), ((0, 2), (2, 3))], (0, 1, 2), 9)
    assert out["circle_in_locus"] and out["pass"]
    assert out["sextic_circle"]["status"] == "COMMON_COMPONENT"
    out = bezout_check(pts, [((0, 1), (0, 2)), ((0, 2), (2, 3))], (0, 1, 3), 9)
    assert not out["circle_in_locus"] and out["pass"]
    assert out["sextic_circle"]["status"] == "FINITE"


def test_gap_cases_and_constructed_suite():
    records = experiment_gap_cases(10, seed=4)
    assert all(r.passed and not r.payload["no_coincidence"] for r in records)
    assert all(6 <= r.n <= 12 for r in records)
    by_name = {r.experiment: r for r in constructed_gap_records()}
    assert by_name["gap_cases_mirror_pair"].payload["tally"] == {"CASE_CIRCLE": 1, "CASE_LOCUS": 0}
    assert by_name["gap_cases_rotated_pair"].payload["tally"] == {"CASE_CIRCLE": 0, "CASE_LOCUS": 1}
    assert is_general_position(ROTATED_PAIR).ok


def test_record_json_round_trip():
    rec = ExperimentRecord("x", 1, 2, 3, None, "paper", {"pass": False, "v": [1, "2/3"]})
    line = rec.to_json_line()
    assert ExperimentRecord.from_json_line(line) == rec
    assert not rec.passed and " " not in line


# -- search -------------------------------------------------------------------

def test_search_finds_a_four_point_set_without_a_distinct_four_subset():
    best, rec = search_extremal(4, 4, 400, seed=1)
    assert rec.payload["best_subset_size"] == 3 and rec.payload["below_k"]
    assert is_general_position(best).ok
    assert verify_record_certificate(rec)
    again, rec2 = search_extremal(4, 4, 400, seed=1)
    assert again == best and rec2 == rec


def test_search_records_result_for_larger_n():
    best, rec = search_extremal(4, 8, 20, seed=2)
    assert len(best) == 8 and rec.payload["best_subset_size"] >= 1


def test_search_requires_n_below_bound():
    with pytest.raises(ValueError):
        search_extremal(4, 9, 10, seed=0)


# -- CLI ----------------------------------------------------------------------

@pytest.fixture
def mirror_file(tmp_path):
    path = tmp_path / "mirror.pts"
    save_pointset(path, MIRROR_PAIR)
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_check_gp(capsys, tmp_path, mirror_file):
    code, out, _ = run(capsys, ["check-gp", mirror_file])
    assert code == 0 and json.loads(out) == {"ok": True, "witness": None, "mode": "paper"}
    square = tmp_path / "sq.pts"
    save_pointset(square, [(0, 0), (1, 0), (1, 1), (0, 1)])
    code, out, _ = run(capsys, ["check-gp", str(square), "--mode", "strict"])
    assert code == 0 and json.loads(out)["witness"] == [0, 1, 2, 3]


def test_cli_subsets(capsys, mirror_file):
    code, out, _ = run(capsys, ["max-subset", mirror_file])
    assert code == 0 and json.loads(out)["chosen"] == [0, 1, 2]
    code, out, _ = run(capsys, ["greedy", mirror_file, "--order", "3,2,1,0"])
    assert code == 0 and json.loads(out)["chosen"] == [1, 2, 3]
    code, out, _ = run(capsys, ["classify", mirror_file, "--subset", "0,1,2"])
    data = json.loads(out)
    assert code == 0 and data["exclusions"][0]["case"] == "CASE_CIRCLE"


def test_cli_classify_reports_addable_points(capsys, tmp_path):
    path = tmp_path / "four.pts"
    save_pointset(path, [(0, 0), (5, 0), (1, 3), (2, 7)])
    code, out, _ = run(capsys, ["classify", str(path), "--subset", "0,1,2"])
    assert code == 0 and json.loads(out)["exclusions"] == [{"x": 3, "case": None, "addable": True}]


def test_cli_locus_and_intersect(capsys, tmp_path, mirror_file):
    code, out, _ = run(capsys, ["locus", mirror_file, "--pairs", "0,2:0,3", "--emit-coeffs"])
    data = json.loads(out)
    assert code == 0 and data["degree"] <= 6
    coeffs = tmp_path / "c.json"
    coeffs.write_text(out)
    code, out, _ = run(capsys, ["intersect", "--lhs", str(coeffs), "--rhs", "circle:2,1,5", "--shear-seed", "3"])
    data = json.loads(out)
    assert code == 0 and data["status"] == "FINITE" and data["x_root_count"] <= 12
    code, out, _ = run(
        capsys, ["intersect", "--lhs", f"locus:{mirror_file}:0,2:0,3", "--rhs", f"locus:{mirror_file}:1,2:1,3"]
    )
    assert code == 0 and json.loads(out)["status"] == "COMMON_COMPONENT"


def test_cli_unit_circles(capsys):
    code, out, _ = run(capsys, ["intersect", "--lhs", "circle:0,0,1", "--rhs", "circle:1,0,1"])
    data = json.loads(out)
    assert code == 0 and data["x_root_count"] == 1 and data["bezout_bound"] == 4


def test_cli_bounds(capsys):
    code, out, _ = run(capsys, ["bounds", "--k", "6"])
    data = json.loads(out)
    assert code == 0 and data["lemma_m"] == 1826 and data["main_n"] == 1871
    code, _, err = run(capsys, ["bounds", "--k", "3"])
    assert code == 2 and "error" in err


def test_cli_experiment_writes_records(capsys, tmp_path):
    out_file = tmp_path / "bez.jsonl"
    code, _, _ = run(
        capsys,
        ["experiment", "bezout", "--trials", "2", "--seed", "5", "--out", str(out_file), "--quarantine-dir", str(tmp_path)],
    )
    assert code == 0
    assert [r.trial for r in read_records(out_file)] == [0, 1]
    assert not list(tmp_path.glob("quarantine-*"))


def test_cli_experiment_quarantines_failures(capsys, tmp_path):
    argv = ["experiment", "small-cases-4", "--trials", "20", "--seed", "0", "--n", "4", "--grid", "4",
            "--quarantine-dir", str(tmp_path)]
    code, out, err = run(capsys, argv)
    assert code == 1
    path = tmp_path / "quarantine-small-cases-4-0.jsonl"
    assert str(path) in err
    bad = read_records(path)
    assert bad and not any(r.passed for r in bad)
    assert len(out.splitlines()) == 20


def test_cli_search(capsys, tmp_path):
    best = tmp_path / "best.pts"
    code, out, _ = run(capsys, ["search", "--k", "4", "--n", "4", "--iters", "400", "--seed", "1", "--out", str(best)])
    assert code == 0 and json.loads(out)["payload"]["best_subset_size"] == 3
    assert len(load_pointset(best)) == 4


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["no-such-command"],
        ["bounds"],
        ["check-gp", "/nonexistent/file.pts"],
        ["locus", "{mirror}", "--pairs", "0,1"],
        ["locus", "{mirror}", "--pairs", "0,1:0,9"],
        ["locus", "{mirror}", "--pairs", "0,1:1,0"],
        ["intersect", "--lhs", "circle:0,0", "--rhs", "circle:1,0,1"],
        ["greedy", "{mirror}", "--order", "0,1"],
        ["search", "--k", "4", "--n", "9", "--iters", "1", "--seed", "0"],
        ["experiment", "small-cases-4", "--trials", "1", "--seed", "0", "--n", "5", "--grid", "2"],
    ],
)
def test_cli_usage_errors(capsys, mirror_file, argv):
    argv = [a.replace("{mirror}", mirror_file) for a in argv]
    code, _, _ = run(capsys, argv)
    assert code == 2


def test_cli_rejects_non_general_position(capsys, tmp_path):
    path = tmp_path / "sq.pts"
    save_pointset(path, [(0, 0), (1, 0), (1, 1), (0, 1)])
    code, _, err = run(capsys, ["max-subset", str(path)])
    assert code == 2 and "error" in err
