"""Command-line scenario runner.

Usage patterns::

    projphase spin-loop --m 1 --delta 1e-3 --samples 20000
    projphase --scenario pi-jump --out jump.csv --format csv
    projphase chern-finite beta=0.785398 --config base.json
    projphase verify-all --out results/

Every run writes the trace table to ``--out`` (CSV or JSON), a JSON result
envelope next to it (``<name>.result.json``), and, unless ``--no-figures``,
rendered PNG figures alongside. Scenario parameters come from an optional
JSON config file, overridden by ``key=value`` arguments and ``--key value``
flags (later wins). Exit codes: 0 pass, 1 numerical fail, 2 usage error,
3 precondition/covering violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .errors import GeometricPhaseError, PreconditionError
from .report import render_figures, write_envelope, write_trace
from .scenarios import SCENARIOS, ScenarioResult

EXIT_PASS = 0
EXIT_NUMERICAL_FAIL = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


@dataclass
class ScenarioConfig:
    """Fully resolved run configuration: scenario name, validated parameter
    map, and output destination."""

    scenario: str
    parameters: dict
    out: Path
    format: str
    figures: bool = True


class UsageError(Exception):
    pass


def _scenario_epilog() -> str:
    lines = ["scenarios:"]
    for sc in SCENARIOS.values():
        lines.append(f"  {sc.name}: {sc.summary}")
        for key, spec in sc.params.items():
            lines.append(f"      --{key} (default {spec.default!r}): {spec.help}")
        lines.append(f"      trace columns: {sc.column_doc}")
    lines.append("  verify-all: run every scenario at default parameters "
                 "and print a prediction-vs-computed table")
    return "\n".join(lines)


# Flags consumed by the parser itself; anything else spelled --key belongs
# to the scenario parameter map.
_VALUE_FLAGS = {"--scenario", "--config", "--out", "--format", "--seed"}
_BOOL_FLAGS = {"--figures", "--no-figures"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="projphase",
        description="Run reproducible geometric-phase scenarios and write "
                    "traces, result envelopes, and figures.",
        epilog=_scenario_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("scenario", nargs="?", default=None,
                        help="scenario name (or 'verify-all')")
    parser.add_argument("extras", nargs="*", default=[],
                        help="scenario parameters as key=value")
    parser.add_argument("--scenario", dest="scenario_flag", default=None,
                        help="scenario name (alternative to the positional)")
    parser.add_argument("--config", type=Path, default=None,
                        help="JSON file with scenario parameters (flags override)")
    parser.add_argument("--out", type=Path, default=None,
                        help="trace output path (default <scenario>.<format>); "
                             "directory for verify-all")
    parser.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="trace file format")
    parser.add_argument("--seed", type=int, default=None,
                        help="override the scenario's random seed")
    parser.add_argument("--figures", default=True,
                        action=argparse.BooleanOptionalAction,
                        help="render PNG figures next to the trace")
    return parser


def _split_argv(argv: list[str]) -> tuple[list[str], dict[str, str]]:
    """Separate parser-owned arguments from scenario ``--key value`` pairs."""
    core: list[str] = []
    raw: dict[str, str] = {}
    k = 0
    while k < len(argv):
        tok = argv[k]
        if tok in ("-h", "--help") or tok in _BOOL_FLAGS:
            core.append(tok)
        elif tok in _VALUE_FLAGS:
            core.append(tok)
            if k + 1 < len(argv):
                core.append(argv[k + 1])
                k += 1
        elif tok.split("=", 1)[0] in _VALUE_FLAGS:
            core.append(tok)
        elif tok.startswith("--"):
            key = tok[2:]
            if "=" in key:
                key, value = key.split("=", 1)
            else:
                if k + 1 >= len(argv):
                    raise UsageError(f"flag --{key} is missing a value")
                value = argv[k + 1]
                k += 1
            raw[key] = value
        else:
            core.append(tok)
        k += 1
    return core, raw


def _parse_extras(extras: list[str]) -> dict[str, str]:
    raw: dict[str, str] = {}
    for item in extras:
        if "=" not in item:
            raise UsageError(f"expected key=value, got {item!r}")
        key, value = item.split("=", 1)
        raw[key] = value
    return raw


def resolve_config(args, flag_params: dict[str, str]) -> ScenarioConfig:
    name = args.scenario_flag or args.scenario
    if name is None:
        raise UsageError("no scenario given (positional or --scenario)")
    if name != "verify-all" and name not in SCENARIOS:
        known = ", ".join(sorted(SCENARIOS))
        raise UsageError(f"unknown scenario {name!r}; known: {known}, verify-all")

    raw: dict = {}
    if args.config is not None:
        try:
            loaded = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(loaded, dict):
            raise UsageError("config file must hold a JSON object")
        raw.update(loaded)
    raw.update(_parse_extras(args.extras))
    raw.update(flag_params)
    if args.seed is not None:
        raw["seed"] = args.seed

    if name == "verify-all":
        if raw:
            raise UsageError("verify-all takes no scenario parameters")
        out = args.out if args.out is not None else Path("projphase-verify")
        return ScenarioConfig(scenario=name, parameters={}, out=out,
                              format=args.format, figures=args.figures)

    sc = SCENARIOS[name]
    params = {}
    for key, spec in sc.params.items():
        if key in raw:
            value = raw.pop(key)
            params[key] = spec.parse(value) if isinstance(value, str) else value
        else:
            params[key] = spec.default
    if raw:
        bad = ", ".join(sorted(map(str, raw)))
        raise UsageError(f"unknown parameter(s) for {name}: {bad}")
    out = args.out if args.out is not None else Path(f"{name}.{args.format}")
    return ScenarioConfig(scenario=name, parameters=params, out=out,
                          format=args.format, figures=args.figures)


def _summary_line(result: ScenarioResult) -> str:
    status = "PASS" if result.passed else "FAIL"
    return f"{result.scenario}: {result.summary} -> {status}"


def run_one(config: ScenarioConfig) -> ScenarioResult:
    result = SCENARIOS[config.scenario].run(config.parameters)
    config.out.parent.mkdir(parents=True, exist_ok=True)
    write_trace(config.out, config.format, result)
    stem = config.out.with_suffix("")
    write_envelope(stem.with_name(stem.name + ".result.json"), result, config.out)
    if config.figures:
        render_figures(result, stem)
    return result


def run_verify_all(config: ScenarioConfig) -> int:
    outdir = config.out
    outdir.mkdir(parents=True, exist_ok=True)
    results = []
    for name, sc in SCENARIOS.items():
        params = {k: spec.default for k, spec in sc.params.items()}
        sub = ScenarioConfig(
            scenario=name,
            parameters=params,
            out=outdir / f"{name}.{config.format}",
            format=config.format,
            figures=config.figures,
        )
        results.append(run_one(sub))
    width = max(len(r.scenario) for r in results)
    print(f"{'scenario':<{width}}  {'status':<6}  prediction vs computed")
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{r.scenario:<{width}}  {status:<6}  {r.summary}")
    return EXIT_PASS if all(r.passed for r in results) else EXIT_NUMERICAL_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    try:
        core, flag_params = _split_argv(list(argv))
        args = parser.parse_args(core)
        config = resolve_config(args, flag_params)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if config.scenario == "verify-all":
            return run_verify_all(config)
        result = run_one(config)
    except PreconditionError as exc:
        print(f"precondition violation: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except GeometricPhaseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(_summary_line(result))
    return EXIT_PASS if result.passed else EXIT_NUMERICAL_FAIL


if __name__ == "__main__":
    sys.exit(main())
