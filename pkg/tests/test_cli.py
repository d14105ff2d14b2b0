"""
Tests for CLI modules
"""

import json
from unittest.mock import patch

import openpyxl
import pytest

from gp_toolkit.cli import (
    export_to_excel,
    print_report,
    report_command,
    rows_to_frame,
    self_test_command,
    write_report,
)
from gp_toolkit.exceptions import ValidationError
from gp_toolkit.graph_cli import (
    cover_command,
    gen_command,
    generate,
    graph_from_source,
    label_check_command,
    parse_vertex_set,
    solve_command,
    verify_command,
)
from gp_toolkit.main import create_parser, main
from gp_toolkit.report.claims import COMPUTED, MATCH, MISMATCH, SKIPPED, ReportRow, computed_row
from gp_toolkit.solver.search import LOWER_BOUND_ONLY, SolveResult


@pytest.fixture
def rows():
    """Report rows covering every status"""
    return [
        ReportRow("grid-gp-3x3", "gp of 2-dim grid patch", "4", "4", MATCH),
        ReportRow("benes-gp-3", "exact gp(BN(3))", "16", "not run", SKIPPED),
        ReportRow("torus-gp-7x7", "gp of C7 x C7", "7 <= value <= 9", "6", MISMATCH),
    ]


def test_rows_to_frame(rows):
    """Test report rows become one DataFrame row each"""
    df = rows_to_frame(rows)
    assert list(df.columns) == ["claim", "topic", "source", "expected", "computed", "status"]
    assert list(df["claim"]) == ["grid-gp-3x3", "benes-gp-3", "torus-gp-7x7"]


def test_print_report(rows, capsys):
    """Test the text table and status tally"""
    print_report(rows)
    out = capsys.readouterr().out
    assert "REPRODUCTION REPORT" in out
    assert "torus-gp-7x7" in out
    assert "mismatch" in out


def test_print_report_empty(capsys):
    """Test printing an empty report"""
    print_report([])
    assert "(no rows)" in capsys.readouterr().out


def test_export_to_excel(rows, tmp_path):
    """Test the workbook holds the rows with status colors"""
    filepath = tmp_path / "report.xlsx"
    export_to_excel(rows, filepath)

    sheet = openpyxl.load_workbook(filepath)["Report"]
    assert sheet.cell(row=1, column=1).value == "claim"
    assert sheet.cell(row=2, column=6).value == MATCH
    assert sheet.cell(row=2, column=1).fill.start_color.rgb.endswith("E2EFDA")
    assert sheet.cell(row=4, column=1).fill.start_color.rgb.endswith("F8CBAD")


def test_export_computed_row(tmp_path):
    """Test computed-only rows get their own color"""
    filepath = tmp_path / "computed.xlsx"
    export_to_excel([computed_row("torus-gp-5x5", "gp of C5 x C5", "5")], filepath)

    sheet = openpyxl.load_workbook(filepath)["Report"]
    assert sheet.cell(row=2, column=6).value == COMPUTED
    assert sheet.cell(row=2, column=4).value == "computed"
    assert sheet.cell(row=2, column=1).fill.start_color.rgb.endswith("DDEBF7")


@patch("gp_toolkit.cli.pd.ExcelWriter")
def test_export_to_excel_io_error(mock_writer, rows):
    """Test Excel export handles IO error"""
    mock_writer.side_effect = Exception("Permission denied")

    with pytest.raises(IOError, match="Failed to export Excel file"):
        export_to_excel(rows, "report.xlsx")


def test_write_report(rows, temp_output_dir):
    """Test JSON and Excel files land in the output directory"""
    paths = write_report(rows, temp_output_dir, "benes", excel=True)
    assert [p.suffix for p in paths] == [".json", ".xlsx"]
    assert all(p.exists() for p in paths)
    assert paths[0].name.startswith("gp_report_benes_")

    payload = json.loads(paths[0].read_text(encoding="utf-8"))
    assert payload["scope"] == "benes"
    assert payload["rows"][1]["status"] == SKIPPED


def test_write_report_json_only(rows, temp_output_dir):
    """Test Excel export is opt-in"""
    paths = write_report(rows, temp_output_dir / "nested", "all")
    assert len(paths) == 1
    assert paths[0].parent.name == "nested"


@patch("gp_toolkit.cli.run_report")
def test_report_command_mismatch(mock_run, config, rows, capsys):
    """Test a mismatch row gives exit code 1 and files are written"""
    mock_run.return_value = rows
    assert report_command(config, "all", "json", seed=3) == 1
    mock_run.assert_called_once_with("all", config=config, seed=3)

    printed = json.loads(capsys.readouterr().out)
    assert [row["claim"] for row in printed] == ["grid-gp-3x3", "benes-gp-3", "torus-gp-7x7"]
    assert len(list(config.output_dir.glob("gp_report_all_*.json"))) == 1


@patch("gp_toolkit.cli.run_report")
def test_report_command_clean(mock_run, config, rows, capsys):
    """Test a report without mismatches exits 0 and --no-save writes nothing"""
    mock_run.return_value = rows[:2]
    assert report_command(config, "benes", "table", write=False) == 0
    assert "grid-gp-3x3" in capsys.readouterr().out
    assert list(config.output_dir.iterdir()) == []


def test_self_test_command(capsys):
    """Test the witness library self-test"""
    assert self_test_command("table") == 0
    out = capsys.readouterr().out
    assert "grid3-ten" in out
    assert "published" in out

    assert self_test_command("json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["torus-seven"]["verdict"] == "general_position"


@pytest.mark.parametrize(
    "expression, n",
    [("cartesian:3x3", 9), ("torus:3x4", 12), ("benes:2", 20), ("butterfly:1", 4), ("cycle:5", 5)],
)
def test_generate(expression, n):
    """Test generator expressions"""
    assert generate(expression).n == n


@pytest.mark.parametrize("expression", ["wheel:3", "path", "path:3x3", "cartesian:3xa", "cycle:"])
def test_generate_rejects_bad_expressions(expression):
    """Test malformed generator expressions"""
    with pytest.raises(ValidationError):
        generate(expression)


def test_graph_from_source_file(tmp_path):
    """Test an existing file wins over generator parsing"""
    path = tmp_path / "square.txt"
    path.write_text("4 4\n0 1\n1 2\n2 3\n3 0\n")
    g = graph_from_source(str(path))
    assert g.name == "square"
    assert g.num_edges == 4


def test_parse_vertex_set():
    """Test ids, coordinates and witness names"""
    g = generate("cartesian:6x6")
    assert parse_vertex_set("[0, 4]", g) == (0, 4)
    assert parse_vertex_set("[[1, 1], [2, 0]]", g) == (7, 12)
    assert parse_vertex_set("grid-four", g) == (1, 6, 8, 13)


@pytest.mark.parametrize(
    "text, message",
    [
        ("nope", "JSON array"),
        ('{"a": 1}', "JSON array"),
        ("[[9, 9]]", "labeled"),
        ('["x"]', "Unsupported"),
    ],
)
def test_parse_vertex_set_errors(text, message):
    """Test malformed vertex sets"""
    with pytest.raises(ValidationError, match=message):
        parse_vertex_set(text, generate("cartesian:3x3"))


def test_parse_vertex_set_needs_labels():
    """Test coordinates on an unlabeled graph"""
    g = generate("cartesian:3x3").with_labels(None)
    with pytest.raises(ValidationError, match="no labeling"):
        parse_vertex_set("[[0, 0]]", g)


def test_gen_command_edges(capsys):
    """Test edge-list output"""
    assert gen_command("path:3", graph_format="edges") == 0
    assert capsys.readouterr().out == "3 2\n0 1\n1 2\n"


def test_gen_command_json_labelings(capsys):
    """Test JSON output with rotated and stripped labels"""
    gen_command("strong:2x2", labeling="rotated")
    payload = json.loads(capsys.readouterr().out)
    assert payload["labels"] == [[0, 0], [1, 1], [1, -1], [2, 0]]

    gen_command("strong:2x2", labeling="none")
    assert json.loads(capsys.readouterr().out)["labels"] is None


def test_gen_command_rotated_needs_lattice():
    """Test rotated labels are refused on non-lattice graphs"""
    with pytest.raises(ValidationError):
        gen_command("benes:1", labeling="rotated")


def test_verify_command(config, capsys):
    """Test verifying a library witness"""
    assert verify_command(config, "cartesian:5x5x5", "grid3-ten", "json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "general_position"
    assert payload["separation_k"] == 3
    assert len(payload["vertices"]) == 10


def test_verify_command_violation(config, capsys):
    """Test a collinear set prints its triple"""
    verify_command(config, "path:5", "[0, 2, 4]", "table")
    out = capsys.readouterr().out
    assert "violated" in out
    assert "[0, 2, 4]" in out


def test_solve_command(config, capsys):
    """Test an optimal solve exits 0 and reports labels"""
    assert solve_command(config, "cartesian:4x4", forced="[[0, 0]]", output_format="json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["size"] == 3
    assert payload["forced"] == [0]
    assert [0, 0] in payload["witness_labels"]


@patch("gp_toolkit.graph_cli.max_general_position")
def test_solve_command_lower_bound(mock_solve, config, capsys):
    """Test a timed-out solve exits 2"""
    mock_solve.return_value = SolveResult(
        status=LOWER_BOUND_ONLY, size=7, witness=tuple(range(7)), nodes_explored=5
    )
    assert solve_command(config, "torus:7x7", hint="torus-seven", time_limit=1.0) == 2
    opts = mock_solve.call_args.args[2]
    assert opts.time_limit == 1.0
    assert len(opts.hint) == 7
    assert "lower_bound_only" in capsys.readouterr().out


def test_label_check_command(config, capsys):
    """Test labeling verdicts through the CLI"""
    label_check_command(config, "strong:4x4", "natural", "json")
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "violated"
    assert payload["counterexample"] == [0, 1, 4]

    label_check_command(config, "strong:4x4", "rotated", "json")
    assert json.loads(capsys.readouterr().out)["verdict"] == "monotone_geodesic"


def test_cover_command_benes(config, capsys):
    """Test the recursive Benes cover and its bound"""
    assert cover_command(config, None, 0, benes_dim=2, output_format="json") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["size"] == 7
    assert payload["bound"]["value"] == 8


def test_cover_command_greedy_exact(config, capsys):
    """Test a greedy cover with the exhaustive minimum"""
    cover_command(config, "path:5", 0, exact=True, output_format="json")
    payload = json.loads(capsys.readouterr().out)
    assert payload["paths"] == [[0, 1, 2, 3, 4]]
    assert payload["exact_size"] == 1
    assert payload["bound"]["value"] == 2


def test_cover_command_needs_graph(config):
    """Test cover without a graph or --benes"""
    with pytest.raises(ValidationError):
        cover_command(config, None, 0)


def test_parser_report_defaults():
    """Test report arguments"""
    args = create_parser().parse_args(["report"])
    assert args.scope == "all"
    assert not args.excel
    assert not args.no_save


def test_main_version(capsys):
    """Test --version"""
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "gp-toolkit" in capsys.readouterr().out


@patch("gp_toolkit.config.load_dotenv")
def test_main_gen(mock_dotenv, mock_env, capsys):
    """Test a full command through main"""
    with pytest.raises(SystemExit) as exc:
        main(["gen", "path:3", "--output", "edges"])
    assert exc.value.code == 0
    assert capsys.readouterr().out == "3 2\n0 1\n1 2\n"


@patch("gp_toolkit.config.load_dotenv")
def test_main_reports_errors(mock_dotenv, mock_env, capsys):
    """Test library errors exit 1 with a message on stderr"""
    with pytest.raises(SystemExit) as exc:
        main(["gen", "wheel:3"])
    assert exc.value.code == 1
    assert "✗ Error" in capsys.readouterr().err


@patch("gp_toolkit.config.load_dotenv")
def test_main_bad_thread_override(mock_dotenv, mock_env, capsys):
    """Test out-of-range overrides are configuration errors"""
    with pytest.raises(SystemExit) as exc:
        main(["--threads", "0", "gen", "path:3"])
    assert exc.value.code == 1
    assert "GP_THREADS" in capsys.readouterr().err


@patch("gp_toolkit.main.dispatch")
def test_main_keyboard_interrupt(mock_dispatch, capsys):
    """Test Ctrl-C exits 130"""
    mock_dispatch.side_effect = KeyboardInterrupt
    with pytest.raises(SystemExit) as exc:
        main(["gen", "path:3"])
    assert exc.value.code == 130
    assert "Operation cancelled by user" in capsys.readouterr().out
