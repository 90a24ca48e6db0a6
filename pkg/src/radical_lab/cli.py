"""Command-line front end.

Subcommands: analyze, verify, search, list-suites.  Exit codes: 0 pass,
1 mathematical failure, 2 configuration or usage error, 3 budget
exceeded.  RADICAL_LAB_MAX_SIZE overrides the structure size guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import (
    catalog_from_rings,
    default_catalog,
    module_from_spec,
    module_regular,
    ring_from_spec,
    search_counterexample,
)
from .errors import (
    AxiomViolation,
    ConfigError,
    RadicalLabError,
    SizeGuardExceeded,
    UnknownSuite,
)
from .jsonio import (
    analyze_document,
    dump,
    render_analyze,
    render_search,
    render_suite,
    search_document,
    suite_document,
)
from .limits import default_limits
from .suites import SUITES, run_suite

EXIT_PASS = 0
EXIT_MATH_FAILURE = 1
EXIT_CONFIG = 2
EXIT_BUDGET = 3


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            document = json.load(handle)
    except FileNotFoundError:
        raise ConfigError(path, "file not found")
    except json.JSONDecodeError as exc:
        raise ConfigError(path, f"invalid JSON: {exc}")
    if not isinstance(document, dict):
        raise ConfigError(path, "top-level value must be an object")
    schema = document.get("schema", 1)
    if schema != 1:
        raise ConfigError(f"{path}.schema", f"unsupported schema version {schema!r}")
    return document


def _write_json(path: str, document: dict) -> None:
    Path(path).write_text(dump(document), encoding="utf-8")


def _cmd_analyze(args) -> int:
    config = _load_json(args.config)
    limits = default_limits()
    module_spec = config.get("module")
    ring = None
    if "ring" in config:
        ring = ring_from_spec(config["ring"], limits)
    if module_spec is None:
        if ring is None:
            raise ConfigError("ring", "analyze needs a ring (or an example module)")
        module = module_regular(ring, limits)
    else:
        module = module_from_spec(module_spec, ring, limits)
        ring = module.ring
    document = analyze_document(ring, module, limits)
    print(render_analyze(document))
    if args.json:
        _write_json(args.json, document)
    return EXIT_PASS


def _catalog_from_config(path: str | None, limits):
    if path is None:
        return default_catalog(limits)
    config = _load_json(path)
    ring_specs = config.get("rings")
    if not isinstance(ring_specs, list) or not ring_specs:
        raise ConfigError(f"{path}.rings", "expected a nonempty list of ring specs")
    rings = tuple(
        ring_from_spec(spec, limits, f"rings[{i}]") for i, spec in enumerate(ring_specs)
    )
    include_example = config.get("include_example", False)
    if not isinstance(include_example, bool):
        raise ConfigError(f"{path}.include_example", "expected a boolean")
    return catalog_from_rings(rings, include_example=include_example, limits=limits)


def _cmd_verify(args) -> int:
    limits = default_limits()
    catalog = _catalog_from_config(args.catalog, limits)
    report = run_suite(args.suite, catalog, limits)
    print(render_suite(report))
    if args.json:
        _write_json(args.json, suite_document(report, catalog))
    return EXIT_PASS if report.passed else EXIT_MATH_FAILURE


def _cmd_search(args) -> int:
    config = _load_json(args.config)
    limits = default_limits()
    if "predicate" not in config:
        raise ConfigError(f"{args.config}.predicate", "missing predicate")
    budget = args.budget if args.budget is not None else config.get("budget", 256)
    if not isinstance(budget, int) or budget < 0:
        raise ConfigError("budget", f"expected a non-negative integer, got {budget!r}")
    result = search_counterexample(
        config["predicate"], config.get("generator"), budget, limits
    )
    print(render_search(result))
    if args.json:
        _write_json(args.json, search_document(result, limits))
    return EXIT_PASS if result.found else EXIT_BUDGET


def _cmd_list_suites(args) -> int:
    width = max(len(name) for name in SUITES)
    for name, (description, _) in SUITES.items():
        print(f"{name:<{width}}  {description}")
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radical-lab",
        description="Exhaustive verification engine for radicals of finite rings and modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="full radical report for one structure")
    analyze.add_argument("config", help="JSON file with ring and optional module specs")
    analyze.add_argument("--json", metavar="OUT", help="also write the JSON document")
    analyze.set_defaults(func=_cmd_analyze)

    verify = sub.add_parser("verify", help="run one verification suite")
    verify.add_argument("suite", help="suite name (see list-suites)")
    verify.add_argument("--catalog", metavar="CONFIG", help="catalog override JSON")
    verify.add_argument("--json", metavar="OUT", help="also write the JSON document")
    verify.set_defaults(func=_cmd_verify)

    search = sub.add_parser("search", help="search generated structures for a predicate")
    search.add_argument("config", help="JSON file with predicate/generator/budget")
    search.add_argument("--budget", type=int, help="maximum candidates to examine")
    search.add_argument("--json", metavar="OUT", help="also write the JSON document")
    search.set_defaults(func=_cmd_search)

    list_suites = sub.add_parser("list-suites", help="list verification suites")
    list_suites.set_defaults(func=_cmd_list_suites)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, UnknownSuite, AxiomViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SizeGuardExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except RadicalLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH_FAILURE


if __name__ == "__main__":
    raise SystemExit(main())
