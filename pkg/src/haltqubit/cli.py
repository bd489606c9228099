"""Command-line front end.

Subcommands: qubit (kernel inspection), scenario (p2/p3 verdicts), sweep
(divergence curve over delta), tm-run (rule-file execution), tm-diag
(diagonalization demo). Exit codes are a total function of the outcome:
0 for success / ComputableA / Halted, 1 for usage and validation errors,
2 for Contradiction, 3 for BudgetExceeded (and for an inconclusive
diagonalization). Numeric output round-trips: JSON floats use the shortest
exact representation, CSV uses 17 significant digits.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .bloch import (
    BlochVector,
    Observable,
    ValidationError,
    bloch_to_density,
    evolve_heisenberg,
    evolve_schrodinger,
    expectation,
    matrix_json,
    rotation_y,
    vector_json,
)
from .diagonal import (
    always_halts,
    always_loops,
    bounded_runner,
    default_corpus,
    diagonalize_demo,
    report_record,
)
from .machine import (
    Classification,
    HaltQubitMachine,
    Picture,
    ScenarioInput,
    ScenarioKind,
    classify,
    delta_grid,
    run_scenario,
    sweep_delta,
    trace_record,
)
from .rules import ParseError, parse_machine
from .turing import DEFAULT_BUDGET, MachineError, RunKind, Tape, run

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONTRADICTION = 2
EXIT_BUDGET = 3


class UsageError(Exception):
    """Bad flags or flag combinations; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the CLI contract reserves 2 for
    # Contradiction, so route usage problems through UsageError instead
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class CliConfig:
    """One validated invocation; exactly one command per run."""

    command: str
    delta: float = math.pi / 2.0
    scenario: ScenarioKind | None = None
    input_spec: str | None = None
    observable_spec: str | None = None
    machine_path: str | None = None
    tape: str = ""
    budget: int = DEFAULT_BUDGET
    start: float = 0.0
    stop: float = 2.0 * math.pi
    step: float = math.pi / 180.0
    fmt: str = "json"
    out: str | None = None
    trace: bool = False
    decider: str = "all"


def _emit(config: CliConfig, text: str) -> None:
    if config.out:
        with open(config.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _parse_vector(spec: str, cls):
    parts = spec.split(",")
    if len(parts) != 3:
        raise UsageError(f"expected a vector x,y,z, got {spec!r}")
    try:
        components = [float(part) for part in parts]
    except ValueError:
        raise UsageError(f"vector components must be decimals, got {spec!r}")
    return cls(*components)  # non-unit input raises ValidationError -> exit 1


def _scenario_input(config: CliConfig) -> ScenarioInput:
    if config.scenario is ScenarioKind.SELF_INPUT:
        if config.input_spec not in (None, "self"):
            raise UsageError("p3 takes no input vector; it feeds the machine "
                             "its own observable")
        return ScenarioInput.self_input()
    if config.input_spec == "self":
        raise UsageError("p2 requires a vector input, `self` selects p3")
    spec = config.input_spec or "0,0,1"
    return ScenarioInput.state_input(_parse_vector(spec, BlochVector))


def _require_json(config: CliConfig) -> None:
    if config.fmt != "json":
        raise UsageError(f"{config.command} emits JSON only")


def cmd_qubit(config: CliConfig) -> int:
    """Evolve one state/observable pair and dump every intermediate value."""
    _require_json(config)
    state = _parse_vector(config.input_spec or "0,0,1", BlochVector)
    observable = _parse_vector(config.observable_spec or "0,0,1", Observable)
    u = rotation_y(config.delta)
    evolved_state = evolve_schrodinger(state, u)
    evolved_observable = evolve_heisenberg(observable, u)
    record = {
        "delta": config.delta,
        "input": vector_json(state),
        "observable": vector_json(observable),
        "unitary": matrix_json(u.matrix),
        "density_input": matrix_json(bloch_to_density(state).matrix),
        "state_schrodinger": vector_json(evolved_state),
        "density_schrodinger": matrix_json(bloch_to_density(evolved_state).matrix),
        "observable_heisenberg": vector_json(evolved_observable),
        "expectation_before": expectation(observable, state),
        "expectation_schrodinger": expectation(observable, evolved_state),
        "expectation_heisenberg": expectation(evolved_observable, state),
    }
    _emit(config, json.dumps(record))
    return EXIT_OK


def cmd_scenario(config: CliConfig) -> int:
    """Run both pictures, print their traces with the verdict, set exit code."""
    _require_json(config)
    scenario = _scenario_input(config)
    machine = HaltQubitMachine(delta=config.delta)
    verdict = classify(machine, scenario)
    lines = []
    for picture in (Picture.SCHRODINGER, Picture.HEISENBERG):
        trace = run_scenario(machine, scenario, picture)
        lines.append(json.dumps(
            trace_record(scenario.kind, config.delta, trace, verdict)))
    _emit(config, "\n".join(lines))
    if verdict.classification is Classification.CONTRADICTION:
        return EXIT_CONTRADICTION
    return EXIT_OK


def cmd_sweep(config: CliConfig) -> int:
    """Classify across a delta grid; CSV by default, JSON on request."""
    if config.fmt not in ("csv", "json"):
        raise UsageError(f"unknown format {config.fmt!r}")
    scenario = _scenario_input(config)
    machine = HaltQubitMachine()
    grid = delta_grid(config.start, config.stop, config.step)
    points = sweep_delta(machine, scenario, grid)
    if config.fmt == "csv":
        rows = ["delta,divergence_angle,classification"]
        rows += [f"{p.delta:.17g},{p.divergence_angle:.17g},{p.classification.value}"
                 for p in points]
        _emit(config, "\n".join(rows))
    else:
        _emit(config, json.dumps([
            {"delta": p.delta, "divergence_angle": p.divergence_angle,
             "classification": p.classification.value}
            for p in points
        ]))
    return EXIT_OK


def cmd_tm(config: CliConfig) -> int:
    """Run a rule file on a tape; JSON outcome plus optional step trace."""
    _require_json(config)
    with open(config.machine_path, encoding="utf-8") as handle:
        source = handle.read()
    machine = parse_machine(source)
    tape = Tape.from_string(config.tape, blank=machine.blank)
    trace_lines: list[str] = []
    on_step = None
    if config.trace:
        def on_step(record):
            trace_lines.append(json.dumps({
                "step": record.step,
                "state": record.state,
                "head": record.head,
                "read": record.read,
                "written": record.written,
                "direction": record.direction,
            }))
    outcome = run(machine, tape, config.budget, on_step)
    summary = json.dumps({
        "kind": outcome.kind.value,
        "steps": outcome.steps,
        "output_symbol": outcome.output_symbol,
        "tape": outcome.final_tape.to_string(),
        "head": outcome.final_tape.head,
        "state": outcome.final_state,
    })
    _emit(config, "\n".join(trace_lines + [summary]))
    if outcome.kind is RunKind.HALTED:
        return EXIT_OK
    return EXIT_BUDGET


def cmd_tm_diag(config: CliConfig) -> int:
    """Run the diagonalization demo for the committed deciders."""
    _require_json(config)
    available = {
        "always-halt": lambda: always_halts,
        "always-loop": lambda: always_loops,
        "budget-runner": lambda: bounded_runner(config.budget),
    }
    if config.decider == "all":
        names = list(available)
    elif config.decider in available:
        names = [config.decider]
    else:
        raise UsageError(f"unknown decider {config.decider!r}")
    corpus = default_corpus()
    reports = []
    for name in names:
        report = diagonalize_demo(available[name](), corpus, config.budget)
        reports.append({"decider": name, **report_record(report)})
    _emit(config, json.dumps({"budget": config.budget, "reports": reports}))
    if all(entry["conclusive"] for entry in reports):
        return EXIT_OK
    return EXIT_BUDGET


def _build_parser() -> _Parser:
    parser = _Parser(prog="haltqubit",
                     description="Dual-picture qubit scenarios and a "
                                 "step-bounded Turing machine engine.")
    sub = parser.add_subparsers(dest="command", required=True)

    qubit = sub.add_parser("qubit", help="evolve one qubit and print the traces")
    qubit.add_argument("--delta", type=float, default=math.pi / 2.0)
    qubit.add_argument("--input", default="0,0,1", help="state vector x,y,z")
    qubit.add_argument("--observable", default="0,0,1", help="observable x,y,z")

    scenario = sub.add_parser("scenario", help="classify a p2/p3 run")
    scenario.add_argument("scenario_id", choices=("p2", "p3"))
    scenario.add_argument("--delta", type=float, default=math.pi / 2.0)
    scenario.add_argument("--input", default=None,
                          help="state vector x,y,z (p2) or `self` (p3)")

    sweep = sub.add_parser("sweep", help="divergence curve over a delta grid")
    sweep.add_argument("scenario_id", choices=("p2", "p3"))
    sweep.add_argument("--start", type=float, default=0.0)
    sweep.add_argument("--stop", type=float, default=2.0 * math.pi)
    sweep.add_argument("--step", type=float, default=math.pi / 180.0)
    sweep.add_argument("--input", default=None)

    tm_run = sub.add_parser("tm-run", help="run a rule file on a tape")
    tm_run.add_argument("--machine", required=True, help="rule file path")
    tm_run.add_argument("--tape", default="", help="initial tape, head at index 0")
    tm_run.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    tm_run.add_argument("--trace", action="store_true",
                        help="emit one JSON line per step")

    tm_diag = sub.add_parser("tm-diag", help="diagonalization demo")
    tm_diag.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    tm_diag.add_argument("--decider", default="all",
                         help="always-halt, always-loop, budget-runner, or all")

    for command in (qubit, scenario, sweep, tm_run, tm_diag):
        command.add_argument("--format", dest="fmt", default=None,
                             choices=("json", "csv"))
        command.add_argument("--out", default=None, help="write output to a file")
    return parser


def _config_from(args: argparse.Namespace) -> CliConfig:
    fields: dict = {"command": args.command}
    if args.fmt is not None:
        fields["fmt"] = args.fmt
    elif args.command == "sweep":
        fields["fmt"] = "csv"
    if args.out is not None:
        fields["out"] = args.out
    if args.command in ("scenario", "sweep"):
        fields["scenario"] = ScenarioKind(args.scenario_id)
        fields["input_spec"] = args.input
    if args.command == "qubit":
        fields["input_spec"] = args.input
        fields["observable_spec"] = args.observable
    if hasattr(args, "delta"):
        fields["delta"] = args.delta
    if args.command == "sweep":
        fields.update(start=args.start, stop=args.stop, step=args.step)
    if args.command == "tm-run":
        fields.update(machine_path=args.machine, tape=args.tape,
                      budget=args.budget, trace=args.trace)
    if args.command == "tm-diag":
        fields.update(budget=args.budget, decider=args.decider)
    return CliConfig(**fields)


_HANDLERS = {
    "qubit": cmd_qubit,
    "scenario": cmd_scenario,
    "sweep": cmd_sweep,
    "tm-run": cmd_tm,
    "tm-diag": cmd_tm_diag,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        config = _config_from(args)
        return _HANDLERS[config.command](config)
    except UsageError as error:
        print(f"usage error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except (ValidationError, MachineError, ParseError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
