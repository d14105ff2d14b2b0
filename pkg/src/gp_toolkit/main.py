"""
Main CLI entry point for GP Toolkit
"""

import argparse
import sys
from typing import List, Optional

from gp_toolkit import __version__

from .constants import EXIT_ERROR, EXIT_INTERRUPTED
from .exceptions import GeneralPositionError


def create_parser() -> argparse.ArgumentParser:
    """
    Create the main argument parser with subcommands

    Returns:
        ArgumentParser: Main parser with subcommands
    """
    parser = argparse.ArgumentParser(
        prog="gp-toolkit",
        description="General position sets on grids, tori, butterflies and Benes networks",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  gp-toolkit gen cartesian:5x5 --output edges
  gp-toolkit verify cartesian:5x5x5 grid3-ten
  gp-toolkit solve torus:7x7 --hint torus-seven --time-limit 60
  gp-toolkit label-check strong:6x6 --scheme rotated
  gp-toolkit cover --benes 3 --root 0
  gp-toolkit --format json report benes
        """,
    )

    parser.add_argument("-v", "--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--format",
        choices=["table", "json"],
        default="table",
        help="Output format (default: table)",
    )
    parser.add_argument("--seed", type=int, help="Seed for randomized trials (overrides GP_SEED)")
    parser.add_argument("--threads", type=int, help="Worker threads (overrides GP_THREADS)")
    parser.add_argument(
        "--log-level",
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        help="Log level (overrides GP_LOG_LEVEL)",
    )

    subparsers = parser.add_subparsers(
        title="commands",
        description="Available commands",
        dest="command",
        required=True,
        help="Command to execute",
    )

    gen_parser = subparsers.add_parser("gen", help="Generate a graph")
    gen_parser.add_argument("expression", help="Generator expression, e.g. benes:3 or torus:7x7")
    gen_parser.add_argument(
        "--labeling",
        choices=["natural", "rotated", "none"],
        default="natural",
        help="Coordinates to attach (default: natural)",
    )
    gen_parser.add_argument(
        "--output",
        choices=["json", "edges"],
        default="json",
        help="Graph format (default: json)",
    )

    verify_parser = subparsers.add_parser("verify", help="Check a vertex set for general position")
    verify_parser.add_argument("graph", help="Graph file or generator expression")
    verify_parser.add_argument(
        "vertices", help="JSON array of vertex ids or coordinates, or a witness name"
    )

    solve_parser = subparsers.add_parser("solve", help="Find a maximum general position set")
    solve_parser.add_argument("graph", help="Graph file or generator expression")
    solve_parser.add_argument("--forced", help="Vertices that must be in the set (JSON or witness)")
    solve_parser.add_argument("--hint", help="Known general position set used as incumbent")
    solve_parser.add_argument("--time-limit", type=float, help="Time limit in seconds")
    solve_parser.add_argument(
        "--known-upper", type=int, help="Stop once a set of this size is found"
    )

    label_parser = subparsers.add_parser("label-check", help="Check a lattice labeling")
    label_parser.add_argument("graph", help="Lattice expression, e.g. strong:6x6")
    label_parser.add_argument(
        "--scheme",
        choices=["natural", "rotated"],
        default="natural",
        help="Labeling scheme (default: natural)",
    )

    cover_parser = subparsers.add_parser("cover", help="Isometric path cover from a root")
    cover_parser.add_argument("graph", nargs="?", help="Graph file or generator expression")
    cover_parser.add_argument("--root", type=int, required=True, help="Root vertex id")
    cover_parser.add_argument("--benes", type=int, help="Use the recursive cover of BN(r)")
    cover_parser.add_argument(
        "--exact", action="store_true", help="Also compute the minimum cover size (small graphs)"
    )

    report_parser = subparsers.add_parser("report", help="Rerun every reproducible claim")
    report_parser.add_argument(
        "scope",
        nargs="?",
        default="all",
        choices=["all", "grids", "torus", "benes", "boron", "monotone"],
        help="Claim group (default: all)",
    )
    report_parser.add_argument("--excel", action="store_true", help="Also export an Excel file")
    report_parser.add_argument("--no-save", action="store_true", help="Do not write report files")
    report_parser.add_argument(
        "--self-test", action="store_true", help="Only verify the witness library"
    )

    return parser


def dispatch(args: argparse.Namespace) -> int:
    """Run the selected command and return its exit code"""
    from .cli import report_command, self_test_command
    from .config import Config
    from .graph_cli import (
        cover_command,
        gen_command,
        label_check_command,
        solve_command,
        verify_command,
    )
    from .utils.logging import setup_logger

    config = Config()
    if args.threads is not None:
        config.override(threads=args.threads)
    if args.seed is not None:
        config.override(seed=args.seed)
    setup_logger(
        "gp_toolkit",
        level=args.log_level or config.log_level,
        log_file=config.log_file,
        console=True,
    )

    fmt = args.format
    if args.command == "gen":
        return gen_command(args.expression, args.labeling, args.output)
    if args.command == "verify":
        return verify_command(config, args.graph, args.vertices, fmt)
    if args.command == "solve":
        return solve_command(
            config, args.graph, args.forced, args.hint, args.time_limit, args.known_upper, fmt
        )
    if args.command == "label-check":
        return label_check_command(config, args.graph, args.scheme, fmt)
    if args.command == "cover":
        return cover_command(config, args.graph, args.root, args.benes, args.exact, fmt)
    if args.self_test:
        return self_test_command(fmt)
    return report_command(
        config, args.scope, fmt, seed=config.seed, excel=args.excel, write=not args.no_save
    )


def main(argv: Optional[List[str]] = None) -> None:
    """Main entry point for CLI"""
    parser = create_parser()
    args = parser.parse_args(argv)

    try:
        sys.exit(dispatch(args))
    except GeneralPositionError as e:
        from .utils.logging import get_logger

        get_logger("gp_toolkit").error(str(e))
        print(f"\n✗ Error: {e}", file=sys.stderr)
        sys.exit(EXIT_ERROR)
    except KeyboardInterrupt:
        print("\nOperation cancelled by user")
        sys.exit(EXIT_INTERRUPTED)


if __name__ == "__main__":
    main()
