"""Line-oriented rule DSL and the tape encoding built on it.

Grammar: statements end at a newline or at a standalone ';' token, and '#'
starts a comment running to the end of the line. Header statements are
`states <id>...`, `symbols <sym>...` (optional), `blank <sym>`; rule
statements have the fixed shape `rule <state> <sym> -> <state> <sym>
<+1|-1>`. Declaration order is preserved, so parse and print are inverse
up to whitespace and comments.

The tape encoding of a machine is its canonical statement stream: the
printed tokens with ';' separators. decode therefore reuses parse, and
anything that would collide with the delimiters (whitespace, ';', '#',
"->") is rejected as an identifier up front.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

from .turing import (
    HALT_STATE,
    MachineError,
    START_STATE,
    Rule,
    TuringMachine,
    is_token,
)

_WORD_RE = re.compile(r"[^\s;]+")
_DIRECTIONS = {"+1": 1, "-1": -1}


class ParseError(ValueError):
    """Syntax or semantic error with the offending line and column."""

    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, column {col}: {message}")
        self.line = line
        self.col = col


class _Token(tuple):
    # (text, line, col) with attribute access kept cheap
    __slots__ = ()

    @property
    def text(self) -> str:
        return self[0]

    @property
    def line(self) -> int:
        return self[1]

    @property
    def col(self) -> int:
        return self[2]


def _statements(source: str) -> Iterator[list[_Token]]:
    """Split into statements: lists of tokens with 1-based positions."""
    for lineno, raw in enumerate(source.splitlines(), 1):
        line = raw.split("#", 1)[0]  # comment runs to end of line
        offset = 0
        for segment in line.split(";"):
            tokens = [_Token((m.group(), lineno, offset + m.start() + 1))
                      for m in _WORD_RE.finditer(segment)]
            if tokens:
                yield tokens
            offset += len(segment) + 1


def _ident(token: _Token, role: str) -> str:
    if not is_token(token.text):
        raise ParseError(token.line, token.col,
                         f"invalid {role} {token.text!r}")
    return token.text


def parse_machine(source: str) -> TuringMachine:
    """Parse DSL text into a validated machine.

    Raises ParseError with line/column for syntax problems (unknown
    statements, wrong arity, bad direction tokens) and for semantic ones
    (missing/duplicate declarations, rules from h1, undeclared states or
    symbols, duplicate rules).
    """
    states: list[str] = []
    symbols: list[str] = []
    blank: _Token | None = None
    rule_stmts: list[list[_Token]] = []
    for stmt in _statements(source):
        keyword = stmt[0]
        args = stmt[1:]
        if keyword.text == "states":
            if not args:
                raise ParseError(keyword.line, keyword.col,
                                 "states statement needs at least one identifier")
            for tok in args:
                name = _ident(tok, "state identifier")
                if name in states:
                    raise ParseError(tok.line, tok.col,
                                     f"duplicate state declaration {name!r}")
                states.append(name)
        elif keyword.text == "symbols":
            if not args:
                raise ParseError(keyword.line, keyword.col,
                                 "symbols statement needs at least one symbol")
            for tok in args:
                name = _ident(tok, "symbol")
                if name in symbols:
                    raise ParseError(tok.line, tok.col,
                                     f"duplicate symbol declaration {name!r}")
                symbols.append(name)
        elif keyword.text == "blank":
            if blank is not None:
                raise ParseError(keyword.line, keyword.col,
                                 "blank declared more than once")
            if len(args) != 1:
                raise ParseError(keyword.line, keyword.col,
                                 "blank statement needs exactly one symbol")
            _ident(args[0], "blank symbol")
            blank = args[0]
        elif keyword.text == "rule":
            if len(args) != 6 or args[2].text != "->":
                raise ParseError(keyword.line, keyword.col,
                                 "rule statement needs: rule <state> <symbol> "
                                 "-> <state> <symbol> <+1|-1>")
            rule_stmts.append(args)
        else:
            raise ParseError(keyword.line, keyword.col,
                             f"unknown statement {keyword.text!r}")

    if not states:
        raise ParseError(1, 1, "missing states declaration")
    if blank is None:
        raise ParseError(1, 1, "missing blank declaration")
    for required in (START_STATE, HALT_STATE):
        if required not in states:
            raise ParseError(1, 1, f"machine must declare state {required}")

    alphabet = set(symbols) | {blank.text}
    rules: list[Rule] = []
    seen: set[tuple[str, str]] = set()
    for args in rule_stmts:
        src, read, _, dst, write, direction = args
        for tok, role in ((src, "state identifier"), (read, "symbol"),
                          (dst, "state identifier"), (write, "symbol")):
            _ident(tok, role)
        if src.text == HALT_STATE:
            raise ParseError(src.line, src.col,
                             "no rule may leave the terminal state h1")
        if src.text not in states:
            raise ParseError(src.line, src.col, f"undeclared state {src.text!r}")
        if dst.text not in states:
            raise ParseError(dst.line, dst.col, f"undeclared state {dst.text!r}")
        if read.text not in alphabet:
            raise ParseError(read.line, read.col, f"undeclared symbol {read.text!r}")
        if write.text not in alphabet:
            raise ParseError(write.line, write.col, f"undeclared symbol {write.text!r}")
        if direction.text not in _DIRECTIONS:
            raise ParseError(direction.line, direction.col,
                             f"direction must be +1 or -1, got {direction.text!r}")
        key = (src.text, read.text)
        if key in seen:
            raise ParseError(src.line, src.col, f"duplicate rule for {key!r}")
        seen.add(key)
        rules.append(Rule(src.text, read.text, dst.text, write.text,
                          _DIRECTIONS[direction.text]))

    return TuringMachine(tuple(states), tuple(symbols), blank.text, tuple(rules))


def _statement_tokens(machine: TuringMachine) -> Iterator[list[str]]:
    yield ["states", *machine.states]
    if machine.symbols:
        yield ["symbols", *machine.symbols]
    yield ["blank", machine.blank]
    for rule in machine.rules:
        yield ["rule", rule.state, rule.read, "->", rule.next_state, rule.write,
               "+1" if rule.move > 0 else "-1"]


def render_machine(machine: TuringMachine) -> str:
    """Canonical DSL text, one statement per line."""
    return "\n".join(" ".join(stmt) for stmt in _statement_tokens(machine)) + "\n"


def encode_machine(machine: TuringMachine) -> tuple[str, ...]:
    """Machine description as tape symbols: canonical tokens with ';' breaks.

    Deterministic and injective over valid machines; decode_machine is the
    inverse. Identifier validity (no whitespace/';'/'#'/'->') is enforced at
    machine construction, re-checked here as the delimiter-collision guard.
    """
    tokens: list[str] = []
    for stmt in _statement_tokens(machine):
        for token in stmt:
            if token != "->" and not is_token(token):
                raise MachineError(
                    f"identifier {token!r} collides with encoding delimiters")
        tokens.extend(stmt)
        tokens.append(";")
    return tuple(tokens)


def decode_machine(encoded: str | Iterable[str]) -> TuringMachine:
    """Inverse of encode_machine; also accepts plain DSL text."""
    text = encoded if isinstance(encoded, str) else " ".join(encoded)
    return parse_machine(text)
