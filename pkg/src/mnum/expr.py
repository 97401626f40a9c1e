"""Expression language for building and combining polymsets.

Grammar (binding tightens downward; all binary operators are
left-associative; parentheses override)::

    program    : statement ((NEWLINE | ';') statement)*
    statement  : NAME '=' expression | expression
    expression : arith (('|' | '&' | '^') arith)*
    arith      : term (('+' | '-') term)*
    term       : factor ('*' factor)*
    factor     : INT | NAME | call | sparse | matrix | '(' expression ')'
    call       : NAME '(' [expression (',' expression)*] ')'
    sparse     : '{' [entry (',' entry)*] '}'      entry : index ':' INT
    index      : '(' INT (',' INT)* [','] ')'
    matrix     : '[' row (',' row)* ']'            row   : '[' INT (',' INT)* ']'

``|`` ``&`` ``^`` are union, intersection, and symmetric difference; ``+``
``-`` are pointwise sum and saturating difference; ``*`` is the convolution
product.  A sparse literal takes its dimension from its index tuples, so a
bare ``{}`` parses but cannot be evaluated (write ``zero(m)``).  A matrix
literal is always 2-dimensional: row index is the first coordinate, column
index the second, both 0-based.  ``#`` starts a comment running to the end
of the line.  Newlines inside brackets do not end a statement.

Functions: card(x) supp(x) hgt(x) sc(x, i...) pd(x, i...) shift(x, i...)
reduce(x, axis) unit(i...) zero(m) one(m) cmp(a, b).
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Any, Iterable, Union

from mnum import peano, semiring
from mnum.polymset import Polymset
from mnum.semiring import TetratomyResult

Value = Union[Polymset, int, TetratomyResult]


class ExprSyntaxError(ValueError):
    """A tokenizer or parser diagnostic with position and expectations."""

    def __init__(
        self, message: str, line: int, column: int, expected: Iterable[str] = ()
    ):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        detail = f"{line}:{column}: {message}"
        if self.expected:
            detail += " (expected {})".format(", ".join(self.expected))
        super().__init__(detail)


class EvalError(ValueError):
    """An evaluation failure carrying the offending node's position."""

    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{line}:{column}: {message}")


class UnsupportedStyle(ValueError):
    """A render style that does not apply to the value."""


# -- tokens ----------------------------------------------------------------

_SYMBOLS = set("(){}[],:;=+-*|&^")
_OPENERS = set("({[")
_CLOSERS = set(")}]")


@dataclass(frozen=True)
class Token:
    kind: str  # "INT", "NAME", "NEWLINE", "EOF", or the symbol itself
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    depth = 0
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch == "\n":
            if depth == 0 and tokens and tokens[-1].kind != "NEWLINE":
                tokens.append(Token("NEWLINE", "\n", line, col))
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(Token("INT", text[start:i], line, col))
            col += i - start
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(Token("NAME", text[start:i], line, col))
            col += i - start
            continue
        if ch in _SYMBOLS:
            if ch in _OPENERS:
                depth += 1
            elif ch in _CLOSERS and depth > 0:
                depth -= 1
            tokens.append(Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


# -- syntax tree -------------------------------------------------------------


@dataclass(frozen=True)
class Literal:
    value: Polymset | None  # None: a bare {} with no inferable dimension
    line: int
    column: int


@dataclass(frozen=True)
class IntLit:
    value: int
    line: int
    column: int


@dataclass(frozen=True)
class Var:
    name: str
    line: int
    column: int


@dataclass(frozen=True)
class Binary:
    op: str
    left: "ExprAst"
    right: "ExprAst"
    line: int
    column: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["ExprAst", ...]
    line: int
    column: int


@dataclass(frozen=True)
class Let:
    name: str
    expr: "ExprAst"
    line: int
    column: int


ExprAst = Union[Literal, IntLit, Var, Binary, Call]
Statement = Union[Let, Literal, IntLit, Var, Binary, Call]


# name -> (min_args, max_args or None for variadic)
FUNCTIONS: dict[str, tuple[int, int | None]] = {
    "card": (1, 1),
    "supp": (1, 1),
    "hgt": (1, 1),
    "sc": (2, None),
    "pd": (2, None),
    "shift": (2, None),
    "reduce": (2, 2),
    "unit": (1, None),
    "zero": (1, 1),
    "one": (1, 1),
    "cmp": (2, 2),
}

_SET_OPS = ("|", "&", "^")
_ADD_OPS = ("+", "-")
_FACTOR_STARTS = ("INT", "NAME", "'('", "'{'", "'['")


class _Parser:
    def __init__(self, tokens: list[Token]):
        self._tokens = tokens
        self._pos = 0

    def _peek(self, ahead: int = 0) -> Token:
        return self._tokens[min(self._pos + ahead, len(self._tokens) - 1)]

    def _advance(self) -> Token:
        tok = self._tokens[self._pos]
        if tok.kind != "EOF":
            self._pos += 1
        return tok

    def _expect(self, kind: str, label: str | None = None) -> Token:
        tok = self._peek()
        if tok.kind != kind:
            raise self._unexpected(tok, (label or f"'{kind}'",))
        return self._advance()

    @staticmethod
    def _unexpected(tok: Token, expected: Iterable[str]) -> ExprSyntaxError:
        found = "end of input" if tok.kind == "EOF" else repr(tok.text)
        return ExprSyntaxError(
            f"unexpected {found}", tok.line, tok.column, expected
        )

    def _skip_newlines(self) -> None:
        while self._peek().kind == "NEWLINE":
            self._advance()

    # -- entry points --

    def program(self) -> list[Statement]:
        statements: list[Statement] = []
        self._skip_newlines()
        while self._peek().kind != "EOF":
            statements.append(self.statement())
            tok = self._peek()
            if tok.kind in ("NEWLINE", ";"):
                self._advance()
                self._skip_newlines()
            elif tok.kind != "EOF":
                raise self._unexpected(tok, ("NEWLINE", "';'", "end of input"))
        return statements

    def single_expression(self) -> ExprAst:
        self._skip_newlines()
        node = self.expression()
        self._skip_newlines()
        tok = self._peek()
        if tok.kind != "EOF":
            raise self._unexpected(tok, ("end of input",))
        return node

    # -- grammar rules --

    def statement(self) -> Statement:
        tok = self._peek()
        if tok.kind == "NAME" and self._peek(1).kind == "=":
            name = self._advance()
            self._advance()  # '='
            return Let(name.text, self.expression(), name.line, name.column)
        return self.expression()

    def expression(self) -> ExprAst:
        left = self.arith()
        while self._peek().kind in _SET_OPS:
            op = self._advance()
            left = Binary(op.kind, left, self.arith(), op.line, op.column)
        return left

    def arith(self) -> ExprAst:
        left = self.term()
        while self._peek().kind in _ADD_OPS:
            op = self._advance()
            left = Binary(op.kind, left, self.term(), op.line, op.column)
        return left

    def term(self) -> ExprAst:
        left = self.factor()
        while self._peek().kind == "*":
            op = self._advance()
            left = Binary(op.kind, left, self.factor(), op.line, op.column)
        return left

    def factor(self) -> ExprAst:
        tok = self._peek()
        if tok.kind == "INT":
            self._advance()
            return IntLit(int(tok.text), tok.line, tok.column)
        if tok.kind == "NAME":
            if self._peek(1).kind == "(":
                return self.call()
            self._advance()
            return Var(tok.text, tok.line, tok.column)
        if tok.kind == "(":
            self._advance()
            node = self.expression()
            self._expect(")")
            return node
        if tok.kind == "{":
            return self.sparse_literal()
        if tok.kind == "[":
            return self.matrix_literal()
        raise self._unexpected(tok, _FACTOR_STARTS)

    def call(self) -> ExprAst:
        name = self._advance()
        self._advance()  # '('
        args: list[ExprAst] = []
        if self._peek().kind != ")":
            args.append(self.expression())
            while self._peek().kind == ",":
                self._advance()
                args.append(self.expression())
        self._expect(")")
        if name.text not in FUNCTIONS:
            raise ExprSyntaxError(
                f"unknown function {name.text!r}",
                name.line,
                name.column,
                sorted(FUNCTIONS),
            )
        lo, hi = FUNCTIONS[name.text]
        if len(args) < lo or (hi is not None and len(args) > hi):
            if hi is None:
                wanted = f"at least {lo} arguments"
            elif lo == hi:
                wanted = f"{lo} argument" + ("s" if lo != 1 else "")
            else:
                wanted = f"{lo} to {hi} arguments"
            raise ExprSyntaxError(
                f"{name.text} expects {wanted}, got {len(args)}",
                name.line,
                name.column,
            )
        return Call(name.text, tuple(args), name.line, name.column)

    def sparse_literal(self) -> Literal:
        brace = self._advance()  # '{'
        if self._peek().kind == "}":
            self._advance()
            return Literal(None, brace.line, brace.column)
        components: list[tuple[tuple[int, ...], int]] = []
        dim: int | None = None
        while True:
            idx_tok = self._peek()
            idx = self.index_tuple()
            if dim is None:
                dim = len(idx)
            elif len(idx) != dim:
                raise ExprSyntaxError(
                    f"index has {len(idx)} components, expected {dim} "
                    "(from the first entry)",
                    idx_tok.line,
                    idx_tok.column,
                )
            self._expect(":")
            mult = self._expect("INT")
            components.append((idx, int(mult.text)))
            tok = self._peek()
            if tok.kind == ",":
                self._advance()
                continue
            self._expect("}")
            break
        pm = Polymset(dim, components)
        return Literal(pm, brace.line, brace.column)

    def index_tuple(self) -> tuple[int, ...]:
        self._expect("(")
        parts = [int(self._expect("INT").text)]
        while self._peek().kind == ",":
            self._advance()
            if self._peek().kind == ")":  # trailing comma
                break
            parts.append(int(self._expect("INT").text))
        self._expect(")")
        return tuple(parts)

    def matrix_literal(self) -> Literal:
        bracket = self._advance()  # '['
        rows: list[list[int]] = []
        width: int | None = None
        while True:
            row_tok = self._expect("[", "'['")
            row = [int(self._expect("INT").text)]
            while self._peek().kind == ",":
                self._advance()
                row.append(int(self._expect("INT").text))
            self._expect("]")
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ExprSyntaxError(
                    f"row has {len(row)} columns, expected {width} "
                    "(from the first row)",
                    row_tok.line,
                    row_tok.column,
                )
            rows.append(row)
            tok = self._peek()
            if tok.kind == ",":
                self._advance()
                continue
            self._expect("]")
            break
        entries = {
            (r, c): v
            for r, row in enumerate(rows)
            for c, v in enumerate(row)
            if v
        }
        return Literal(Polymset(2, entries), bracket.line, bracket.column)


def parse_program(text: str) -> list[Statement]:
    """Parse a sequence of statements (bindings and bare expressions)."""
    return _Parser(tokenize(text)).program()


def parse_expression(text: str) -> ExprAst:
    """Parse exactly one expression."""
    return _Parser(tokenize(text)).single_expression()


# -- evaluation ---------------------------------------------------------------

_BINOPS = {
    "|": operator.or_,
    "&": operator.and_,
    "^": operator.xor,
    "+": operator.add,
    "-": operator.sub,
    "*": operator.mul,
}


def _type_name(value: Any) -> str:
    if isinstance(value, Polymset):
        return "polymset"
    if isinstance(value, bool):
        return "boolean"
    if isinstance(value, int):
        return "integer"
    if isinstance(value, TetratomyResult):
        return "comparison result"
    return type(value).__name__


def _want_polymset(value: Value, what: str, node: ExprAst) -> Polymset:
    if not isinstance(value, Polymset):
        raise EvalError(
            f"{what} must be a polymset, got {_type_name(value)}",
            node.line,
            node.column,
        )
    return value


def _want_int(value: Value, what: str, node: ExprAst) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise EvalError(
            f"{what} must be an integer, got {_type_name(value)}",
            node.line,
            node.column,
        )
    return value


def evaluate(node: ExprAst, env: dict[str, Value]) -> Value:
    """Evaluate one expression against an environment of bindings."""
    if isinstance(node, IntLit):
        return node.value
    if isinstance(node, Literal):
        if node.value is None:
            raise EvalError(
                "'{}' has no inferable dimension; write zero(m)",
                node.line,
                node.column,
            )
        return node.value
    if isinstance(node, Var):
        try:
            return env[node.name]
        except KeyError:
            raise EvalError(
                f"unbound variable {node.name!r}", node.line, node.column
            ) from None
    if isinstance(node, Binary):
        left = _want_polymset(
            evaluate(node.left, env), f"left operand of '{node.op}'", node
        )
        right = _want_polymset(
            evaluate(node.right, env), f"right operand of '{node.op}'", node
        )
        try:
            return _BINOPS[node.op](left, right)
        except ValueError as e:
            raise EvalError(str(e), node.line, node.column) from None
    if isinstance(node, Call):
        args = [evaluate(arg, env) for arg in node.args]
        return _call(node, args)
    raise TypeError(f"not an expression node: {node!r}")


def _index_args(node: Call, args: list[Value]) -> tuple[int, ...]:
    return tuple(
        _want_int(a, f"index component {k + 1} of {node.name}", node)
        for k, a in enumerate(args)
    )


def _call(node: Call, args: list[Value]) -> Value:
    name = node.name
    try:
        if name == "card":
            return _want_polymset(args[0], "argument of card", node).cardinality()
        if name == "supp":
            return _want_polymset(args[0], "argument of supp", node).support()
        if name == "hgt":
            return _want_polymset(args[0], "argument of hgt", node).height()
        if name == "sc":
            pm = _want_polymset(args[0], "first argument of sc", node)
            return peano.sc(pm, _index_args(node, args[1:]))
        if name == "pd":
            pm = _want_polymset(args[0], "first argument of pd", node)
            return peano.pd(pm, _index_args(node, args[1:]))
        if name == "shift":
            pm = _want_polymset(args[0], "first argument of shift", node)
            return pm.shift(_index_args(node, args[1:]))
        if name == "reduce":
            pm = _want_polymset(args[0], "first argument of reduce", node)
            return pm.reduce(_want_int(args[1], "axis", node))
        if name == "unit":
            return semiring.unit(_index_args(node, args))
        if name == "zero":
            return semiring.zero(_want_int(args[0], "dimension", node))
        if name == "one":
            return semiring.one(_want_int(args[0], "dimension", node))
        if name == "cmp":
            a = _want_polymset(args[0], "first argument of cmp", node)
            b = _want_polymset(args[1], "second argument of cmp", node)
            return semiring.compare_tetratomy(a, b)
    except EvalError:
        raise
    except ValueError as e:
        raise EvalError(str(e), node.line, node.column) from None
    raise TypeError(f"unknown function {name!r}")  # unreachable; parser vets


def run_program(
    statements: Iterable[Statement], env: dict[str, Value]
) -> list[Value]:
    """Execute statements in order: bindings update env, bare expressions
    contribute their value to the returned list."""
    outputs: list[Value] = []
    for stmt in statements:
        if isinstance(stmt, Let):
            env[stmt.name] = evaluate(stmt.expr, env)
        else:
            outputs.append(evaluate(stmt, env))
    return outputs


# -- rendering ----------------------------------------------------------------

STYLES = ("sparse", "matrix")


def render(value: Value, style: str = "sparse") -> str:
    """Text for a value, parseable back to an equal value.

    sparse is the canonical entry list; the empty polymset renders as
    ``zero(m)`` so its dimension survives the round trip.  matrix applies
    only to 2-dimensional polymsets and covers the bounding box of the
    support from (0,0); the empty one renders as ``[[0]]``.  Integers render
    as themselves and comparison results as their verdict with sparse
    witnesses.
    """
    if style not in STYLES:
        raise UnsupportedStyle(
            f"unknown style {style!r}; expected one of {', '.join(STYLES)}"
        )
    if isinstance(value, TetratomyResult):
        return str(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return str(value)
    if not isinstance(value, Polymset):
        raise UnsupportedStyle(f"cannot render a {_type_name(value)}")
    if style == "sparse":
        return f"zero({value.dim})" if not value else str(value)
    if value.dim != 2:
        raise UnsupportedStyle(
            f"matrix style needs dimension 2, got {value.dim}"
        )
    if not value:
        return "[[0]]"
    entries = value.to_dict()
    rmax = max(r for r, _ in entries)
    cmax = max(c for _, c in entries)
    rows = (
        "[" + ",".join(str(entries.get((r, c), 0)) for c in range(cmax + 1)) + "]"
        for r in range(rmax + 1)
    )
    return "[" + ",".join(rows) + "]"
