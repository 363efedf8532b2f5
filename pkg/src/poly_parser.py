"""Recursive-descent parser for polynomial expressions over Q."""
from fractions import Fraction

from src.errors import ExponentOverflowError, PolynomialSyntaxError, UnknownIdentifierError
from src.poly import DEFAULT_VARS, BiPoly

EXPONENT_CAP = 10**6

# expr   = term *[ ('+' | '-') term ]
# term   = unary *[ ('*' | '/') unary ]     '/' only by a nonzero constant
# unary  = ('-' | '+') unary | power
# power  = atom [ '^' INT ]
# atom   = INT | NAME | '(' expr ')'
#
# Implicit multiplication is not part of the grammar: "2x" fails at the "x".

_SINGLE_CHAR_TOKENS = {"+", "-", "*", "/", "^", "(", ")"}


def parse_poly(text: str, variables: tuple[str, str] = DEFAULT_VARS) -> BiPoly:
    """Parse `text` into a canonical BiPoly in the two named variables."""
    parser = _Parser(text, variables)
    result = parser.parse_expr()
    parser.expect_end()
    return result


class _Token:
    __slots__ = ("kind", "text", "offset")

    def __init__(self, kind: str, text: str, offset: int):
        self.kind = kind
        self.text = text
        self.offset = offset


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    byte_offset = 0

    def advance(count: int) -> None:
        nonlocal i, byte_offset
        byte_offset += len(text[i:i + count].encode("utf-8"))
        i += count

    while i < n:
        ch = text[i]
        if ch.isspace():
            advance(1)
            continue
        if ch.isdigit() and ch.isascii():
            j = i
            while j < n and text[j].isdigit() and text[j].isascii():
                j += 1
            tokens.append(_Token("INT", text[i:j], byte_offset))
            advance(j - i)
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("NAME", text[i:j], byte_offset))
            advance(j - i)
            continue
        if ch in _SINGLE_CHAR_TOKENS:
            tokens.append(_Token(ch, ch, byte_offset))
            advance(1)
            continue
        raise PolynomialSyntaxError(f"Unexpected character '{ch}'", byte_offset)
    tokens.append(_Token("END", "", byte_offset))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: tuple[str, str]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.variables = variables

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_end(self) -> None:
        tok = self.current
        if tok.kind != "END":
            raise PolynomialSyntaxError(f"Unexpected '{tok.text}'", tok.offset)

    def parse_expr(self) -> BiPoly:
        result = self.parse_term()
        while self.current.kind in ("+", "-"):
            op = self.take().kind
            rhs = self.parse_term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def parse_term(self) -> BiPoly:
        result = self.parse_unary()
        while self.current.kind in ("*", "/"):
            op_tok = self.take()
            operand_tok = self.current
            rhs = self.parse_unary()
            if op_tok.kind == "*":
                result = result * rhs
                continue
            if not rhs.is_constant:
                raise PolynomialSyntaxError("Divisor must be a constant", operand_tok.offset)
            divisor = rhs.coefficient(0, 0)
            if divisor == 0:
                raise PolynomialSyntaxError("Division by zero", operand_tok.offset)
            result = result * (1 / divisor)
        return result

    def parse_unary(self) -> BiPoly:
        if self.current.kind == "-":
            self.take()
            return -self.parse_unary()
        if self.current.kind == "+":
            self.take()
            return self.parse_unary()
        return self.parse_power()

    def parse_power(self) -> BiPoly:
        base = self.parse_atom()
        if self.current.kind != "^":
            return base
        self.take()
        tok = self.current
        if tok.kind != "INT":
            raise PolynomialSyntaxError("Exponent must be a nonnegative integer literal", tok.offset)
        self.take()
        exponent = int(tok.text)
        if exponent > EXPONENT_CAP:
            raise ExponentOverflowError(exponent, EXPONENT_CAP, tok.offset)
        return base ** exponent

    def parse_atom(self) -> BiPoly:
        tok = self.current
        if tok.kind == "INT":
            self.take()
            return BiPoly.constant(Fraction(int(tok.text)))
        if tok.kind == "NAME":
            self.take()
            if tok.text == self.variables[0]:
                return BiPoly.x()
            if tok.text == self.variables[1]:
                return BiPoly.y()
            raise UnknownIdentifierError(tok.text, tok.offset)
        if tok.kind == "(":
            self.take()
            inner = self.parse_expr()
            if self.current.kind != ")":
                raise PolynomialSyntaxError("Expected ')'", self.current.offset)
            self.take()
            return inner
        if tok.kind == "END":
            raise PolynomialSyntaxError("Unexpected end of input", tok.offset)
        raise PolynomialSyntaxError(f"Unexpected '{tok.text}'", tok.offset)
