"""Bounded diagonalization against halting deciders.

A decider is any total procedure mapping (encoded machine, encoded input)
to a halt/loop prediction. The wrapper built here does the opposite of
whatever the decider predicts about the wrapper's own encoding: predicted
to halt, it runs a committed loop stub; predicted to loop, it runs a
rule-less machine that halts in one step. A literal self-embedding wrapper
would need a universal machine, which is out of scope; at desk scale the
wrapper's identity is the loop stub's encoding and the inversion is
mediated by calling the decider directly. Every total decider is therefore
contradicted on the self-applied input, which is the point of the demo.

Observed non-halting is always budget-bounded. A run that was predicted to
halt and merely ran out of budget on the halting branch is reported as
inconclusive rather than as a mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, NamedTuple, Sequence

from .rules import decode_machine, encode_machine
from .turing import (
    DEFAULT_BUDGET,
    Rule,
    RunKind,
    Tape,
    TuringMachine,
    run,
)


class Prediction(Enum):
    HALTS = "predicts-halt"
    LOOPS = "predicts-loop"


Decider = Callable[[str, str], Prediction]


def loop_stub() -> TuringMachine:
    """Machine that loops on its own encoding.

    The first token of any encoding is "states"; one rule steps left off it
    and a second marches left through blank cells forever. Every other
    symbol is unreachable, so the missing-rule halt never fires.
    """
    return TuringMachine(
        states=("h0", "h1"),
        symbols=("states",),
        blank="_",
        rules=(
            Rule("h0", "states", "h0", "states", -1),
            Rule("h0", "_", "h0", "_", -1),
        ),
    )


def halt_stub() -> TuringMachine:
    """Machine with no rules: the missing-rule convention halts it in one step."""
    return TuringMachine(states=("h0", "h1"), symbols=(), blank="_", rules=())


def right_mover() -> TuringMachine:
    """Marches right over blanks forever; halts on any other symbol."""
    return TuringMachine(
        states=("h0", "h1"),
        symbols=(),
        blank="_",
        rules=(Rule("h0", "_", "h0", "_", 1),),
    )


def default_corpus() -> tuple[TuringMachine, ...]:
    """Ordinary machines a decider is graded on before facing the wrapper."""
    return (halt_stub(), right_mover(), loop_stub())


def always_halts(encoded: str, tape_text: str) -> Prediction:
    """Total decider that predicts halting for everything."""
    return Prediction.HALTS


def always_loops(encoded: str, tape_text: str) -> Prediction:
    """Total decider that predicts looping for everything."""
    return Prediction.LOOPS


def bounded_runner(budget: int = DEFAULT_BUDGET) -> Decider:
    """Decider that actually runs the machine for `budget` steps and reports."""

    def decider(encoded: str, tape_text: str) -> Prediction:
        machine = decode_machine(encoded)
        tape = Tape.from_symbols(tape_text.split(), blank=machine.blank)
        outcome = run(machine, tape, budget)
        if outcome.kind is RunKind.HALTED:
            return Prediction.HALTS
        return Prediction.LOOPS

    return decider


class CorpusResult(NamedTuple):
    index: int
    prediction: Prediction
    observed: RunKind
    steps: int
    agreed: bool


@dataclass(frozen=True)
class DiagonalReport:
    """Decider performance on the corpus plus the self-application verdict."""

    corpus: tuple[CorpusResult, ...]
    template_encoding: str
    prediction: Prediction
    observed: RunKind
    steps: int
    mismatch: bool
    conclusive: bool


def _self_run(machine: TuringMachine, encoding: Sequence[str], budget: int):
    tape = Tape.from_symbols(encoding, blank=machine.blank)
    return run(machine, tape, budget)


def diagonalize_demo(candidate_decider: Decider,
                     corpus: Sequence[TuringMachine],
                     budget: int = DEFAULT_BUDGET,
                     *,
                     loop_body: TuringMachine | None = None,
                     halt_body: TuringMachine | None = None) -> DiagonalReport:
    """Confront a total decider with the machine built to contradict it.

    Corpus machines are each run on their own encoding and compared against
    the decider's prediction (rows keep corpus order). The wrapper then asks
    the decider about the template encoding applied to itself and performs
    the inverse under the budget. mismatch is True when prediction and
    bounded observation disagree; conclusive is False only when the halting
    branch could not finish within the budget.
    """
    rows = []
    for index, machine in enumerate(corpus):
        encoding = encode_machine(machine)
        text = " ".join(encoding)
        prediction = candidate_decider(text, text)
        outcome = _self_run(machine, encoding, budget)
        agreed = (prediction is Prediction.HALTS) == \
            (outcome.kind is RunKind.HALTED)
        rows.append(CorpusResult(index, prediction, outcome.kind,
                                 outcome.steps, agreed))

    template = loop_stub() if loop_body is None else loop_body
    halter = halt_stub() if halt_body is None else halt_body
    encoding = encode_machine(template)
    text = " ".join(encoding)
    prediction = candidate_decider(text, text)
    # invert: predicted halting runs the looping body and vice versa
    body = halter if prediction is Prediction.LOOPS else template
    outcome = _self_run(body, encoding, budget)
    mismatch = (prediction is Prediction.HALTS) == \
        (outcome.kind is RunKind.BUDGET_EXCEEDED)
    conclusive = not (prediction is Prediction.LOOPS
                      and outcome.kind is RunKind.BUDGET_EXCEEDED)
    return DiagonalReport(tuple(rows), text, prediction, outcome.kind,
                          outcome.steps, mismatch and conclusive, conclusive)


def report_record(report: DiagonalReport) -> dict:
    """Schema-stable JSON form of a diagonalization report."""
    return {
        "prediction": report.prediction.value,
        "observed": report.observed.value,
        "mismatch": report.mismatch,
        "conclusive": report.conclusive,
        "steps": report.steps,
        "template_encoding": report.template_encoding,
        "corpus": [
            {
                "index": row.index,
                "prediction": row.prediction.value,
                "observed": row.observed.value,
                "steps": row.steps,
                "agreed": row.agreed,
            }
            for row in report.corpus
        ],
    }
