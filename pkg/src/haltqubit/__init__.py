"""Dual-picture qubit scenarios, a halt-qubit observer machine, and a
step-bounded Turing machine engine with a diagonalization demo."""

from .bloch import (
    BlochVector,
    DensityMatrix,
    Observable,
    RotationSpec,
    Unitary2,
    ValidationError,
    axis_rotation,
    bloch_to_density,
    density_to_bloch,
    evolve_heisenberg,
    evolve_schrodinger,
    expectation,
    rotation_y,
)
from .diagonal import (
    DiagonalReport,
    Prediction,
    always_halts,
    always_loops,
    bounded_runner,
    default_corpus,
    diagonalize_demo,
    halt_stub,
    loop_stub,
    right_mover,
)
from .machine import (
    Classification,
    HaltQubitMachine,
    Picture,
    RunTrace,
    ScenarioInput,
    ScenarioKind,
    SweepPoint,
    Verdict,
    classify,
    delta_grid,
    flip_halt,
    halt_symbol,
    run_scenario,
    run_self_scenario,
    run_state_scenario,
    sweep_delta,
)
from .rules import (
    ParseError,
    decode_machine,
    encode_machine,
    parse_machine,
    render_machine,
)
from .turing import (
    DEFAULT_BUDGET,
    HALT_STATE,
    START_STATE,
    MachineError,
    Rule,
    RunKind,
    RunOutcome,
    StepRecord,
    Tape,
    TuringMachine,
    run,
    step,
)

__version__ = "0.1.0"
