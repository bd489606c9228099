"""Halt-qubit observer machine.

The machine holds three registers: a system observable, a halt state, and a
halt observable (all start at (0, 0, 1)), plus a rotation angle delta. A run
rotates the system by delta about the y axis in one of two pictures, flips
the halt register to mark completion, and records expectations against the
system observable.

Two scenarios are exposed, named p2/p3 on the wire (CLI, JSON):
  - state input ("p2"): an external qubit is rotated; the pictures are
    compared as expectation values and always agree.
  - self input ("p3"): the system observable itself is fed back in; the
    state picture yields (sin d, 0, cos d) while the observable picture
    yields (-sin d, 0, cos d), so the evolved vectors disagree unless
    delta is a multiple of pi.

Verdicts are total over {computable_a, computable_b, contradiction}:
computable_a needs the halt flip plus agreement within 1e-9,
contradiction is disagreement past that tolerance, and computable_b
(no halt) is unreachable for this machine but kept so the space is total.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum
from typing import NamedTuple

from .bloch import (
    BlochVector,
    Observable,
    ValidationError,
    evolve_heisenberg,
    evolve_schrodinger,
    expectation,
    rotation_y,
)

DIVERGENCE_TOL = 1e-9      # verdict agreement threshold on angles
EXPECTATION_TOL = 1e-12    # picture identity threshold on expectations


class Picture(Enum):
    SCHRODINGER = "schrodinger"
    HEISENBERG = "heisenberg"


class ScenarioKind(Enum):
    STATE_INPUT = "p2"
    SELF_INPUT = "p3"


class Classification(Enum):
    COMPUTABLE_A = "computable_a"
    COMPUTABLE_B = "computable_b"
    CONTRADICTION = "contradiction"


@dataclass(frozen=True)
class ScenarioInput:
    """Either an external state to rotate or the machine's own observable."""

    kind: ScenarioKind
    state: BlochVector | None = None

    def __post_init__(self) -> None:
        if self.kind is ScenarioKind.STATE_INPUT and self.state is None:
            raise ValidationError("state input scenario requires a state vector")
        if self.kind is ScenarioKind.SELF_INPUT and self.state is not None:
            raise ValidationError("self input scenario carries no state vector")

    @classmethod
    def state_input(cls, state: BlochVector) -> "ScenarioInput":
        return cls(ScenarioKind.STATE_INPUT, state)

    @classmethod
    def self_input(cls) -> "ScenarioInput":
        return cls(ScenarioKind.SELF_INPUT)


@dataclass(frozen=True)
class HaltQubitMachine:
    """Observer machine; fresh registers are exactly (0, 0, 1), delta pi/2."""

    system_observable: Observable = Observable(0.0, 0.0, 1.0)
    halt_state: BlochVector = BlochVector(0.0, 0.0, 1.0)
    halt_observable: Observable = Observable(0.0, 0.0, 1.0)
    delta: float = math.pi / 2.0

    def __post_init__(self) -> None:
        if not math.isfinite(self.delta):
            raise ValidationError(f"delta must be finite, got {self.delta!r}")


@dataclass(frozen=True)
class RunTrace:
    """One picture's run: vectors in, vectors out, halt flip, expectations."""

    picture: Picture
    input_vector: tuple[float, float, float]
    output_vector: tuple[float, float, float]
    halt_state_flipped: bool
    expectation_before: float
    expectation_after: float


@dataclass(frozen=True)
class Verdict:
    classification: Classification
    schrodinger_result: tuple[float, float, float]
    heisenberg_result: tuple[float, float, float]
    divergence_angle: float


class SweepPoint(NamedTuple):
    delta: float
    divergence_angle: float
    classification: Classification


def flip_halt(register):
    """Completion protocol: one application negates the halt register."""
    return type(register)(-register.x, -register.y, -register.z)


def halt_symbol(register) -> str:
    """Classical readout of a halt register: z = +1 is "0", z = -1 is "1"."""
    if abs(register.z - 1.0) <= DIVERGENCE_TOL:
        return "0"
    if abs(register.z + 1.0) <= DIVERGENCE_TOL:
        return "1"
    raise ValidationError(f"halt register is not classical, z = {register.z!r}")


def _flipped(register) -> bool:
    # a completed run must have inverted the register: dot(before, after) = -1
    after = flip_halt(register)
    dot = sum(a * b for a, b in zip(after.components, register.components))
    return abs(dot + 1.0) <= EXPECTATION_TOL


def run_state_scenario(machine: HaltQubitMachine, state: BlochVector,
                       picture: Picture) -> RunTrace:
    """Rotate an external state by delta in the chosen picture."""
    u = rotation_y(machine.delta)
    nu = machine.system_observable
    before = expectation(nu, state)
    if picture is Picture.SCHRODINGER:
        out = evolve_schrodinger(state, u)
        after = expectation(nu, out)
        flipped = _flipped(machine.halt_state)
    else:
        out = evolve_heisenberg(nu, u)
        after = expectation(out, state)
        flipped = _flipped(machine.halt_observable)
    return RunTrace(picture, state.components, out.components, flipped, before, after)


def run_self_scenario(machine: HaltQubitMachine, picture: Picture) -> RunTrace:
    """Feed the system observable back into the machine as the input."""
    nu = machine.system_observable
    mirror = BlochVector(nu.x, nu.y, nu.z)
    u = rotation_y(machine.delta)
    before = expectation(nu, mirror)
    if picture is Picture.SCHRODINGER:
        out = evolve_schrodinger(mirror, u)
        after = expectation(nu, out)
        flipped = _flipped(machine.halt_state)
    else:
        out = evolve_heisenberg(nu, u)
        after = expectation(out, mirror)
        flipped = _flipped(machine.halt_observable)
    return RunTrace(picture, mirror.components, out.components, flipped, before, after)


def run_scenario(machine: HaltQubitMachine, scenario: ScenarioInput,
                 picture: Picture) -> RunTrace:
    if scenario.kind is ScenarioKind.STATE_INPUT:
        return run_state_scenario(machine, scenario.state, picture)
    return run_self_scenario(machine, picture)


def angle_between(a: tuple[float, float, float], b: tuple[float, float, float]) -> float:
    """Angle between unit vectors, stable near 0 and pi.

    Equal to arccos(a . b) in exact arithmetic; the atan2 form keeps float
    noise at roughly machine epsilon instead of its square root.
    """
    diff = math.sqrt(sum((x - y) ** 2 for x, y in zip(a, b)))
    summ = math.sqrt(sum((x + y) ** 2 for x, y in zip(a, b)))
    return 2.0 * math.atan2(diff, summ)


def _clamped_acos(value: float) -> float:
    return math.acos(min(1.0, max(-1.0, value)))


def classify(machine: HaltQubitMachine, scenario: ScenarioInput) -> Verdict:
    """Run both pictures and compare their outcomes.

    State input compares measured expectations (always agreeing), self input
    compares the evolved vectors themselves; disagreement past 1e-9 is a
    contradiction.
    """
    ts = run_scenario(machine, scenario, Picture.SCHRODINGER)
    th = run_scenario(machine, scenario, Picture.HEISENBERG)
    if scenario.kind is ScenarioKind.SELF_INPUT:
        divergence = angle_between(ts.output_vector, th.output_vector)
    else:
        gap = abs(ts.expectation_after - th.expectation_after)
        if gap <= EXPECTATION_TOL:
            divergence = 0.0
        else:
            divergence = abs(_clamped_acos(ts.expectation_after)
                             - _clamped_acos(th.expectation_after))
    if not (ts.halt_state_flipped and th.halt_state_flipped):
        classification = Classification.COMPUTABLE_B  # no halt; unreachable here
    elif divergence <= DIVERGENCE_TOL:
        classification = Classification.COMPUTABLE_A
    else:
        classification = Classification.CONTRADICTION
    return Verdict(classification, ts.output_vector, th.output_vector, divergence)


def sweep_delta(machine: HaltQubitMachine, scenario: ScenarioInput,
                deltas) -> list[SweepPoint]:
    """Classify across rotation angles, one verdict per delta."""
    points = []
    for delta in deltas:
        verdict = classify(replace(machine, delta=delta), scenario)
        points.append(SweepPoint(delta, verdict.divergence_angle,
                                 verdict.classification))
    return points


def delta_grid(start: float, stop: float, step: float) -> list[float]:
    """Inclusive grid start, start + step, ... up to stop (within float slack)."""
    if step <= 0 or not all(math.isfinite(v) for v in (start, stop, step)):
        raise ValidationError("grid requires finite start/stop and a positive step")
    if stop < start:
        raise ValidationError("grid stop must not precede start")
    values = []
    k = 0
    while True:
        delta = start + k * step
        if delta > stop + step * 1e-9:
            break
        values.append(delta)
        k += 1
    return values


def trace_record(scenario: ScenarioKind, delta: float, trace: RunTrace,
                 verdict: Verdict) -> dict:
    """Schema-stable JSON record for one picture's trace plus the verdict."""
    return {
        "scenario": scenario.value,
        "delta": delta,
        "picture": trace.picture.value,
        "input": list(trace.input_vector),
        "output": list(trace.output_vector),
        "halt_flipped": trace.halt_state_flipped,
        "expectation_before": trace.expectation_before,
        "expectation_after": trace.expectation_after,
        "classification": verdict.classification.value,
        "divergence_angle": verdict.divergence_angle,
    }
