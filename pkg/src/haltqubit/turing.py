"""Classical Turing machine interpreter.

Machines are immutable rule tables over string tokens; tapes are sparse,
unbounded in both directions, one symbol per cell. Execution is
step-bounded: reaching the terminal state h1 halts, exhausting the budget
is reported distinctly (no cycle detection is attempted). A missing rule
is defined behavior, not an error: the machine moves to h1 leaving the
cell and head unchanged, so every valid machine is a total transition
system. run never mutates its input tape; step mutates the tape it is
given and returns it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Callable, Iterable, NamedTuple

START_STATE = "h0"
HALT_STATE = "h1"
DEFAULT_BUDGET = 10**6

# Identifiers and tape symbols share one lexical space: non-empty tokens
# free of whitespace, ';', and '#'; "->" is reserved for rule arrows.
_TOKEN_RE = re.compile(r"[^\s;#]+\Z")
RESERVED_TOKENS = frozenset({"->"})


class MachineError(ValueError):
    """Raised for structurally invalid machines or misuse of the engine."""


def is_token(text: str) -> bool:
    """True when text can serve as a state identifier or tape symbol."""
    return isinstance(text, str) and bool(_TOKEN_RE.match(text)) \
        and text not in RESERVED_TOKENS


class Rule(NamedTuple):
    state: str
    read: str
    next_state: str
    write: str
    move: int  # -1 or +1


class RunKind(Enum):
    HALTED = "halted"
    BUDGET_EXCEEDED = "budget_exceeded"


class StepRecord(NamedTuple):
    """One executed transition; state is the state entered by the step."""

    step: int
    state: str
    head: int
    read: str
    written: str
    direction: int


class Tape:
    """Sparse two-way-infinite tape; cells holding the blank are not stored."""

    __slots__ = ("cells", "head", "blank")

    def __init__(self, cells: dict[int, str] | None = None, head: int = 0,
                 blank: str = "_"):
        if not is_token(blank):
            raise MachineError(f"invalid blank symbol {blank!r}")
        self.blank = blank
        self.head = int(head)
        self.cells: dict[int, str] = {}
        for index, symbol in (cells or {}).items():
            if symbol != blank:
                self.cells[int(index)] = symbol

    @classmethod
    def from_string(cls, text: str, blank: str = "_", head: int = 0) -> "Tape":
        """One character per cell starting at index 0."""
        return cls({i: ch for i, ch in enumerate(text)}, head, blank)

    @classmethod
    def from_symbols(cls, symbols: Iterable[str], blank: str = "_",
                     head: int = 0) -> "Tape":
        """One symbol per cell starting at index 0."""
        return cls(dict(enumerate(symbols)), head, blank)

    def read(self) -> str:
        return self.cells.get(self.head, self.blank)

    def write(self, symbol: str) -> None:
        if symbol == self.blank:
            self.cells.pop(self.head, None)
        else:
            self.cells[self.head] = symbol

    def move(self, direction: int) -> None:
        self.head += direction

    def copy(self) -> "Tape":
        clone = Tape(head=self.head, blank=self.blank)
        clone.cells = dict(self.cells)
        return clone

    def to_string(self) -> str:
        """Contiguous rendering from the leftmost to the rightmost symbol.

        Single-character alphabets render verbatim; wider symbols are
        space-separated. An all-blank tape renders as the empty string.
        """
        if not self.cells:
            return ""
        lo, hi = min(self.cells), max(self.cells)
        symbols = [self.cells.get(i, self.blank) for i in range(lo, hi + 1)]
        joiner = "" if all(len(s) == 1 for s in symbols) else " "
        return joiner.join(symbols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tape):
            return NotImplemented
        return (self.blank, self.head, self.cells) == \
            (other.blank, other.head, other.cells)

    def __repr__(self) -> str:
        return f"Tape(cells={self.cells!r}, head={self.head}, blank={self.blank!r})"


@dataclass(frozen=True)
class TuringMachine:
    """Validated rule table; start state is h0, terminal state is h1."""

    states: tuple[str, ...]
    symbols: tuple[str, ...]
    blank: str
    rules: tuple[Rule, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "states", tuple(self.states))
        object.__setattr__(self, "symbols", tuple(self.symbols))
        object.__setattr__(self, "rules",
                           tuple(Rule(*rule) for rule in self.rules))
        for name in (*self.states, *self.symbols, self.blank):
            if not is_token(name):
                raise MachineError(f"invalid identifier or symbol {name!r}")
        if len(set(self.states)) != len(self.states):
            raise MachineError("duplicate state declaration")
        if len(set(self.symbols)) != len(self.symbols):
            raise MachineError("duplicate symbol declaration")
        for required in (START_STATE, HALT_STATE):
            if required not in self.states:
                raise MachineError(f"machine must declare state {required}")
        alphabet = self.alphabet
        seen: set[tuple[str, str]] = set()
        for rule in self.rules:
            if rule.move not in (-1, 1):
                raise MachineError(f"rule direction must be -1 or +1, got {rule.move!r}")
            if rule.state == HALT_STATE:
                raise MachineError("no rule may leave the terminal state h1")
            if rule.state not in self.states or rule.next_state not in self.states:
                raise MachineError(f"rule uses undeclared state: {rule!r}")
            if rule.read not in alphabet or rule.write not in alphabet:
                raise MachineError(f"rule uses undeclared symbol: {rule!r}")
            key = (rule.state, rule.read)
            if key in seen:
                raise MachineError(f"duplicate rule for {key!r}")
            seen.add(key)

    @property
    def alphabet(self) -> frozenset[str]:
        return frozenset(self.symbols) | {self.blank}

    @cached_property
    def rule_map(self) -> dict[tuple[str, str], Rule]:
        return {(rule.state, rule.read): rule for rule in self.rules}


@dataclass(frozen=True)
class RunOutcome:
    """Result of a bounded run; output_symbol is under the head at halt."""

    kind: RunKind
    output_symbol: str | None
    steps: int
    final_tape: Tape
    final_state: str


def step(machine: TuringMachine, tape: Tape, state: str) -> tuple[Tape, str]:
    """Apply one transition in place; a missing rule moves to h1 unchanged."""
    if state == HALT_STATE:
        raise MachineError("cannot step from the terminal state h1")
    if state not in machine.states:
        raise MachineError(f"unknown state {state!r}")
    rule = machine.rule_map.get((state, tape.read()))
    if rule is None:
        return tape, HALT_STATE
    tape.write(rule.write)
    tape.move(rule.move)
    return tape, rule.next_state


def run(machine: TuringMachine, input_tape: Tape, budget: int = DEFAULT_BUDGET,
        on_step: Callable[[StepRecord], None] | None = None) -> RunOutcome:
    """Iterate step until h1 or the budget runs out; the input tape is kept
    intact and the final tape is returned on the outcome."""
    if not isinstance(budget, int) or budget < 1:
        raise MachineError(f"budget must be a positive integer, got {budget!r}")
    tape = input_tape.copy()
    state = START_STATE
    steps = 0
    while steps < budget:
        head_before = tape.head
        read = tape.read()
        tape, state = step(machine, tape, state)
        steps += 1
        if on_step is not None:
            on_step(StepRecord(steps, state, head_before, read,
                               tape.cells.get(head_before, tape.blank),
                               tape.head - head_before))
        if state == HALT_STATE:
            return RunOutcome(RunKind.HALTED, tape.read(), steps, tape, state)
    return RunOutcome(RunKind.BUDGET_EXCEEDED, None, steps, tape, state)
