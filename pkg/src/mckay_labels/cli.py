import argparse
import itertools
import json
import logging
import os
import sys
from pathlib import Path

from .algebra.ff import prime_power
from .core.config import Settings, settings
from .core.errors import ExcludedConfiguration, McKayLabelsError, UnsupportedConfiguration
from .core.models import Level, OutputFormat, RunConfig
from .lie import labelcalc
from .lie.rootdata import build_root_datum, build_twist
from .suites import sweep, verify

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_EXCLUDED = 2
EXIT_UNSUPPORTED = 3

logger = logging.getLogger("mckay_labels.cli")


class McKayArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with EXIT_UNSUPPORTED; exit code 2 stays reserved for excluded configurations."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_UNSUPPORTED, f"{self.prog}: error: {message}\n")


def _add_group_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", dest="type_label", required=True, help="Root system type: A-G, or E6/E7/E8/F4/G2")
    p.add_argument("--rank", type=int, help="Rank n (implied by E6, F4, ...)")
    p.add_argument("--w", type=int, default=1, choices=[1, 2, 3], help="Order of the graph automorphism")
    p.add_argument("--kappa", default="all", help="all | square | nonsquare | explicit unit mod p")


def _emit(text: str, output: str = "") -> None:
    if output:
        path = Path(output)
        if not path.is_absolute():
            path = Path(settings.output_dir) / path
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        print(f"Wrote {path}")
    else:
        sys.stdout.write(text)


def _render(records, fmt: OutputFormat, config: dict) -> str:
    if fmt is OutputFormat.CSV:
        return sweep.to_csv(records)
    if fmt is OutputFormat.JSON:
        return sweep.to_json(records, config)
    return sweep.to_table(records)


def _apply_config(path: str) -> None:
    loaded = Settings.load(path)
    for name in Settings.model_fields:
        setattr(settings, name, getattr(loaded, name))
    # worker processes read the same file
    os.environ["MCKAY_LABELS_CONFIG"] = path


def cmd_count(args) -> int:
    e_min, e_max = (args.e, args.e) if args.e is not None else (args.e_min, args.e_max)
    cfg = RunConfig(
        type_label=args.type_label, rank=args.rank, p=args.p, f=args.f, w=args.w,
        e_min=e_min, e_max=e_max, kappa=args.kappa, level=args.level,
        per_central_character=args.per_central, format=args.format,
    )
    records = sweep.evaluate(cfg)
    _emit(_render(records, cfg.format, cfg.model_dump(mode="json")), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = verify.run_suite(args.suite)
    summary = verify.summarize(args.suite, results)
    _emit(json.dumps(summary, indent=2) + "\n", args.output)
    return EXIT_VERIFY_FAILED if summary["failed"] else EXIT_OK


def cmd_report(args) -> int:
    fields = [prime_power(q) for q in args.q]
    ranks = args.ranks or [None]
    configs = sweep.build_grid(args.type_label, ranks, fields, args.levels, w=args.w, kappa=args.kappa, e_max=args.e_max)
    records = sweep.run_grid(configs, jobs=args.jobs)
    config = {
        "type": args.type_label, "ranks": args.ranks, "q": args.q, "w": args.w,
        "levels": [Level(l).value for l in args.levels], "kappa": args.kappa, "e_max": args.e_max,
    }
    _emit(_render(records, OutputFormat(args.format), config), args.output)
    return EXIT_OK


def cmd_labels(args) -> int:
    rd = build_root_datum(args.type_label, args.rank)
    twist = build_twist(rd, args.w)
    q = args.p ** args.f
    g = labelcalc.GaloisParam(args.p, args.e)
    print(f"{twist.name}(q={q}): {labelcalc.label_set_size(twist, q)} labels, "
          f"{labelcalc.count_fixed_labels(twist, q, g)} fixed by e={args.e}")
    for lab in itertools.islice(labelcalc.enumerate_labels(twist, q), args.limit):
        image = labelcalc.galois_act_label(lab, g)
        mark = "*" if image == lab else " "
        print(f"{mark} {labelcalc.format_label(lab):<40} -> {labelcalc.format_label(image)}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = McKayArgumentParser(description="Galois-equivariant McKay counts in defining characteristic")
    parser.add_argument("--log-level", default=None, help="Logging level (default from settings)")
    parser.add_argument("--config", default="", help="Path to a JSON settings file")
    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    # Count
    count_p = subparsers.add_parser("count", help="Total and sigma-fixed p'-counts for one configuration")
    _add_group_args(count_p)
    count_p.add_argument("--p", type=int, required=True, help="Characteristic")
    count_p.add_argument("--f", type=int, default=1, help="q = p^f")
    count_p.add_argument("--e", type=int, help="A single Galois exponent e")
    count_p.add_argument("--e-min", type=int, default=0, help="Smallest e of the range")
    count_p.add_argument("--e-max", type=int, help="Largest e of the range (default 2f)")
    count_p.add_argument("--level", default=Level.B.value, choices=[l.value for l in Level], help="What to count")
    count_p.add_argument("--per-central", action="store_true", help="Break counts down by central character")
    count_p.add_argument("--format", default=OutputFormat.TABLE.value, choices=[f.value for f in OutputFormat])
    count_p.add_argument("--output", default="", help="Write to this file instead of stdout")

    # Verify
    verify_p = subparsers.add_parser("verify", help="Run invariant suites and print a JSON summary")
    verify_p.add_argument("suite", choices=sorted(verify.SUITES) + ["all"], help="Suite to run")
    verify_p.add_argument("--output", default="", help="Write the summary to this file")

    # Report
    report_p = subparsers.add_parser("report", help="Sweep a grid and write CSV or JSON")
    _add_group_args(report_p)
    report_p.add_argument("--ranks", type=int, nargs="*", default=[], help="Ranks to sweep")
    report_p.add_argument("--q", type=int, nargs="*", default=[], help="Field sizes to sweep")
    report_p.add_argument("--levels", nargs="+", default=[Level.B.value], choices=[l.value for l in Level])
    report_p.add_argument("--e-max", type=int, help="Largest e (default 2f per field)")
    report_p.add_argument("--format", default=OutputFormat.CSV.value, choices=[OutputFormat.CSV.value, OutputFormat.JSON.value])
    report_p.add_argument("--jobs", type=int, default=None, help="Worker processes (default from settings)")
    report_p.add_argument("--output", default="", help="Write to this file instead of stdout")

    # Labels
    labels_p = subparsers.add_parser("labels", help="List labels of a small configuration with their sigma-images")
    labels_p.add_argument("--type", dest="type_label", required=True)
    labels_p.add_argument("--rank", type=int)
    labels_p.add_argument("--w", type=int, default=1, choices=[1, 2, 3])
    labels_p.add_argument("--p", type=int, required=True)
    labels_p.add_argument("--f", type=int, default=1)
    labels_p.add_argument("--e", type=int, default=1, help="Galois exponent e")
    labels_p.add_argument("--limit", type=int, default=20, help="Number of labels to print")
    return parser


COMMANDS = {"count": cmd_count, "verify": cmd_verify, "report": cmd_report, "labels": cmd_labels}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.config:
        _apply_config(args.config)
    logging.basicConfig(
        level=(args.log_level or settings.log_level).upper(),
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )

    handler = COMMANDS.get(args.command)
    if handler is None:
        parser.print_help()
        sys.exit(EXIT_OK)
    logger.debug("running %s", args.command)

    try:
        code = handler(args)
    except ExcludedConfiguration as exc:
        print(exc.reason, file=sys.stderr)
        sys.exit(EXIT_EXCLUDED)
    except UnsupportedConfiguration as exc:
        print(exc.reason, file=sys.stderr)
        sys.exit(EXIT_UNSUPPORTED)
    except (McKayLabelsError, ValueError) as exc:
        print(f"Invalid request: {exc}", file=sys.stderr)
        sys.exit(EXIT_UNSUPPORTED)
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        sys.exit(EXIT_VERIFY_FAILED)
    sys.exit(code)


if __name__ == "__main__":
    main()
