import json
import subprocess
import sys

from groundbound.cli import main, parse_expr
from groundbound.balls import eval_ball
from fractions import Fraction


def run_cli(args, capsys):
    code = main(args)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expression_parser():
    ball = eval_ball(parse_expr("1/sqrt(2)"), 64)
    assert abs(float(ball.center) - 2**-0.5) < 1e-15
    ball = eval_ball(parse_expr("16*e"), 64)
    assert abs(float(ball.center) - 16 * 2.718281828459045) < 1e-12
    ball = eval_ball(parse_expr("(1/2)^(3/4)"), 64)
    assert abs(float(ball.center) - 0.5**0.75) < 1e-15
    ball = eval_ball(parse_expr("sin(pi/7)"), 64)
    assert abs(float(ball.center) - 0.4338837391175581) < 1e-12
    ball = eval_ball(parse_expr("ln(2) - ln(3/2)"), 64)
    assert ball.contains(Fraction("0.2876820724517809274392190059938274315"))


def test_bound_solve_command(capsys):
    code, out, err = run_cli(
        ["bound-solve", "--M", "1", "--B", "1", "--R", "1/sqrt(2)", "--S", "16*e"],
        capsys,
    )
    assert code == 0
    assert "result=22" in out


def test_bound_solve_json(capsys):
    code, out, _ = run_cli(
        ["bound-solve", "--format", "json", "--M", "1", "--B", "1",
         "--R", "1/2", "--S", "32*e"],
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["sections"][0]["records"][0]["result"] == 12


def test_graph_case_command(capsys):
    code, out, _ = run_cli(
        ["graph-case", "--family", "g2", "--s", "3", "--k", "3", "--p", "3"],
        capsys,
    )
    assert code == 0 and "result=39" in out


def test_graph_family_csv(tmp_path, capsys):
    csv_path = tmp_path / "cases.csv"
    code, out, _ = run_cli(
        ["graph-family", "--family", "g2", "--case-csv", str(csv_path)],
        capsys,
    )
    assert code == 0
    lines = csv_path.read_text().splitlines()
    assert lines[0].startswith("family,s,k,r,p,variant,m,M,B,R,S,N,bound")
    assert len(lines) == 9  # header + eight cases


def test_polytope_command(capsys):
    code, out, _ = run_cli(["polytope", "--nmax", "200"], capsys)
    assert code == 0
    assert "result=9" in out and "result=46" in out


def test_datasets_command(capsys):
    code, out, _ = run_cli(["datasets", "--format", "csv"], capsys)
    assert code == 0
    assert "triangle_triple_count,76" in out.replace('"', "")


def test_refine_pair_command(capsys):
    code, out, _ = run_cli(
        ["refine-pair", "--kind", "gamma5", "--k", "31", "--s", "3"], capsys
    )
    assert code == 0
    assert "result=120" in out and "diverge" in out


def test_search_pairs_command(tmp_path, capsys):
    from groundbound.report import parse_pair_table

    pairs_path = tmp_path / "pairs.txt"
    code, out, _ = run_cli(
        ["search-pairs", "--kind", "gamma5", "--kmax", "600",
         "--pairs-out", str(pairs_path)],
        capsys,
    )
    assert code == 0
    text = pairs_path.read_text()
    lines = text.splitlines()
    assert any("k=31|s=3" in line for line in lines)
    records = parse_pair_table(text)
    by_pair = {(r["k"], r["s"]): r for r in records}
    assert by_pair[(31, 3)]["final_bound"] == 120
    assert by_pair[(31, 3)]["refined_KF"] == 8
    assert by_pair[(23, 3)]["bound_K"] == 3091


def test_fekete_command(capsys):
    code, out, _ = run_cli(
        ["fekete", "--field", "Q", "--degree", "2", "--interval=-1/2,1/2"],
        capsys,
    )
    assert code == 0 and "certified" in out
    code, out, _ = run_cli(
        ["fekete", "--field", "sqrt5", "--degree", "2",
         "--interval=-1/4,1/4", "--interval=-1/4,1/4"],
        capsys,
    )
    assert code == 0 and out.count("certified") == 2
    # wrong interval multiplicity for the field
    code, out, err = run_cli(
        ["fekete", "--field", "sqrt5", "--degree", "2", "--interval=-1/4,1/4"],
        capsys,
    )
    assert code == 3


def test_graph_family_g5_needs_range(capsys):
    code, out, err = run_cli(["graph-family", "--family", "g5"], capsys)
    assert code == 3
    code, out, _ = run_cli(
        ["graph-family", "--family", "g5", "--kmin", "3", "--kmax-family", "5"],
        capsys,
    )
    assert code == 0 and "family maximum" in out


def test_usage_error_exit_code(capsys):
    code, out, err = run_cli(["bound-solve", "--M", "1"], capsys)
    assert code == 3
    code, out, err = run_cli(["graph-case", "--family", "g9"], capsys)
    assert code == 3


def test_undecidable_exit_code(capsys):
    # exact tie at N = 5: 5 ln 2 - ln 12 equals ln(8/3); the enclosures
    # never separate, so the solver reports UNDECIDED at the cap
    code, out, err = run_cli(
        ["bound-solve", "--M", "1", "--B", "1", "--R", "1/2", "--S", "8/3",
         "--precision-cap", "512"],
        capsys,
    )
    assert code == 2
    assert "undecidable" in err.lower()


def test_invalid_expression(capsys):
    code, out, err = run_cli(
        ["bound-solve", "--M", "1", "--B", "1", "--R", "1/$", "--S", "16*e"],
        capsys,
    )
    assert code == 3


def test_reproduce_all_small_deterministic(tmp_path):
    # run via subprocess to exercise the entry point end to end
    out1 = tmp_path / "a.txt"
    out2 = tmp_path / "b.txt"
    for out, jobs in ((out1, "1"), (out2, "2")):
        proc = subprocess.run(
            [sys.executable, "-m", "groundbound.cli", "reproduce-all",
             "--kmax", "2000", "--jobs", jobs, "--out", str(out)],
            capture_output=True, text=True, timeout=900,
        )
        assert proc.returncode == 1  # documented divergences are reported
    assert out1.read_bytes() == out2.read_bytes()
    text = out1.read_text()
    assert "degree bound N(14)" in text
    assert text.count("MISMATCH") == 3
