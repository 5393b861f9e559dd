"""
Recursive-descent parser for operator expressions.

Grammar (whitespace, including newlines, is insignificant):

    expression := product (("+" | "-") product)*
    product    := unary ("*" unary)*
    unary      := "-" unary | power
    power      := primary ("^" ["-"] INTEGER)?
    primary    := INTEGER | RATIONAL | NAME | "(" expression ")"

    NAME       := theta | t | dtheta | dt
    RATIONAL   := INTEGER "/" INTEGER      (no spaces inside)

"^" binds tighter than "*", which binds tighter than "+" and "-".
Products are kept in written order; nothing is commuted until evaluation.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from gmdual.core.config import get_config_value
from gmdual.core.constants import DEFAULT_MAX_EXPONENT
from gmdual.core.error_handler import OpSyntaxError

VARIABLES = ("theta", "t")
DERIVATIONS = ("dtheta", "dt")
NAMES = VARIABLES + DERIVATIONS
MAX_NESTING = 100

PRIMARY_START = {"number", "name", "'('"}
UNARY_START = PRIMARY_START | {"'-'"}


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


class OpExpr:
    """Base class of operator-expression syntax trees."""


@dataclass(frozen=True)
class Number(OpExpr):
    value: Fraction


@dataclass(frozen=True)
class Name(OpExpr):
    name: str


@dataclass(frozen=True)
class Power(OpExpr):
    base: OpExpr
    exponent: int


@dataclass(frozen=True)
class Product(OpExpr):
    left: OpExpr
    right: OpExpr


@dataclass(frozen=True)
class Sum(OpExpr):
    left: OpExpr
    right: OpExpr


@dataclass(frozen=True)
class Difference(OpExpr):
    left: OpExpr
    right: OpExpr


@dataclass(frozen=True)
class Negation(OpExpr):
    operand: OpExpr


def tokenize(source: str) -> List[Token]:
    """
    Split ``source`` into tokens, ending with an ``eof`` token.

    Raises:
        OpSyntaxError: On characters outside the grammar or unknown names.
    """
    tokens: List[Token] = []
    line, column = 1, 1
    i = 0
    while i < len(source):
        char = source[i]
        if char == "\n":
            line, column = line + 1, 1
            i += 1
            continue
        if char.isspace():
            column += 1
            i += 1
            continue
        if char.isdigit():
            j = i
            while j < len(source) and source[j].isdigit():
                j += 1
            if j + 1 < len(source) and source[j] == "/" and source[j + 1].isdigit():
                j += 1
                while j < len(source) and source[j].isdigit():
                    j += 1
            tokens.append(Token("number", source[i:j], line, column))
            column += j - i
            i = j
            continue
        if char.isalpha() or char == "_":
            j = i
            while j < len(source) and (source[j].isalnum() or source[j] == "_"):
                j += 1
            word = source[i:j]
            if word not in NAMES:
                raise OpSyntaxError(f"unknown name {word!r}", line, column, NAMES)
            tokens.append(Token("name", word, line, column))
            column += j - i
            i = j
            continue
        if char in "+-*^()":
            tokens.append(Token(f"'{char}'", char, line, column))
            column += 1
            i += 1
            continue
        raise OpSyntaxError(f"unexpected character {char!r}", line, column, UNARY_START)
    tokens.append(Token("eof", "", line, column))
    return tokens


class Parser:
    """
    Parser over a token list; one instance per source string.
    """

    def __init__(self, source: str, max_exponent: Optional[int] = None):
        self.tokens = tokenize(source)
        self.position = 0
        self.depth = 0
        self.max_exponent = max_exponent if max_exponent is not None else get_config_value(
            "oplang.max_exponent", DEFAULT_MAX_EXPONENT
        )

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def advance(self) -> Token:
        token = self.current
        if token.kind != "eof":
            self.position += 1
        return token

    def error(self, message: str, expected, token: Optional[Token] = None) -> OpSyntaxError:
        token = token or self.current
        return OpSyntaxError(message, token.line, token.column, expected)

    def expect(self, kind: str) -> Token:
        if self.current.kind != kind:
            raise self.error(self.describe_unexpected(), {kind})
        return self.advance()

    def describe_unexpected(self) -> str:
        if self.current.kind == "eof":
            return "unexpected end of input"
        return f"unexpected {self.current.text!r}"

    def parse(self) -> OpExpr:
        if self.current.kind == "eof":
            raise self.error("empty expression", UNARY_START)
        tree = self.expression()
        if self.current.kind != "eof":
            raise self.error(self.describe_unexpected(), {"'+'", "'-'", "'*'", "'^'", "eof"})
        return tree

    def enter(self) -> None:
        self.depth += 1
        if self.depth > MAX_NESTING:
            raise self.error("expression nested too deeply", UNARY_START)

    def expression(self) -> OpExpr:
        self.enter()
        tree = self.product()
        while self.current.kind in ("'+'", "'-'"):
            operator = self.advance()
            right = self.product()
            tree = Sum(tree, right) if operator.kind == "'+'" else Difference(tree, right)
        self.depth -= 1
        return tree

    def product(self) -> OpExpr:
        tree = self.unary()
        while self.current.kind == "'*'":
            self.advance()
            tree = Product(tree, self.unary())
        return tree

    def unary(self) -> OpExpr:
        if self.current.kind == "'-'":
            self.enter()
            self.advance()
            tree: OpExpr = Negation(self.unary())
            self.depth -= 1
            return tree
        return self.power()

    def power(self) -> OpExpr:
        base = self.primary()
        if self.current.kind != "'^'":
            return base
        caret = self.advance()
        negative = False
        if self.current.kind == "'-'":
            self.advance()
            negative = True
        token = self.current
        if token.kind != "number" or "/" in token.text:
            raise self.error("exponent must be an integer", {"integer exponent"})
        self.advance()
        exponent = -int(token.text) if negative else int(token.text)

        # Powers of a single name are one monomial; only compound bases are capped.
        if not isinstance(base, Name) and abs(exponent) > self.max_exponent:
            raise self.error(f"exponent {exponent} exceeds the limit {self.max_exponent}", {"smaller exponent"}, token)
        if exponent < 0:
            if isinstance(base, Name) and base.name in DERIVATIONS:
                raise self.error("negative derivation exponent", {"non-negative exponent"}, caret)
            if isinstance(base, Number):
                if base.value == 0:
                    raise self.error("zero raised to a negative power", {"non-negative exponent"}, caret)
            elif not (isinstance(base, Name) and base.name in VARIABLES):
                raise self.error("negative exponent only allowed on theta, t or a number", {"non-negative exponent"}, caret)
        return Power(base, exponent)

    def primary(self) -> OpExpr:
        token = self.current
        if token.kind == "number":
            self.advance()
            numerator, _, denominator = token.text.partition("/")
            if denominator and int(denominator) == 0:
                raise self.error("zero denominator", {"non-zero denominator"}, token)
            return Number(Fraction(int(numerator), int(denominator or 1)))
        if token.kind == "name":
            self.advance()
            return Name(token.text)
        if token.kind == "'('":
            self.advance()
            tree = self.expression()
            self.expect("')'")
            return tree
        raise self.error(self.describe_unexpected(), PRIMARY_START)


def parse(source: str) -> OpExpr:
    """
    Parse an operator expression.

    Args:
        source: Expression text, e.g. ``"theta^2*t*dt - (1/4)*t"``

    Returns:
        OpExpr: Syntax tree with products in written order

    Raises:
        OpSyntaxError: With line, column and the expected-token set.
    """
    return Parser(source).parse()
