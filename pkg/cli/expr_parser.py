"""
Element expressions.

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := postfix ('*' postfix)*
    postfix := atom (star | '^' int)*
    atom    := complex | rational | gen | '(' expr ')'
    gen     := name ['[' int (',' int)* ']']        name in v u z a g w
    complex := '(' rational ('+'|'-') rational 'i' ')'
    star    := "'"  |  '*' directly before end of input, ')', '+' or '-'

Printing goes through NCPoly.to_text, which only emits forms this grammar accepts.
"""

from dataclasses import dataclass, field
from typing import List, Tuple, Union

import pyparsing as pp

from algebra.errors import (
    ExpressionSyntaxError,
    IndexRangeError,
    ParameterError,
    UnknownGeneratorError,
)
from algebra.ncpoly import NCPoly
from algebra.scalar import Scalar
from algebra.words import Alphabet, GenSym

_RATIONAL = r"\d+(?:/\d+)?"


# ---------- AST ----------

@dataclass
class ScalarLit:
    value: Scalar
    loc: int = field(default=0, compare=False)


@dataclass
class GenRef:
    text: str
    loc: int = field(default=0, compare=False)


@dataclass
class Star:
    child: "ExprAST"


@dataclass
class Power:
    child: "ExprAST"
    exponent: int


@dataclass
class Product:
    factors: List["ExprAST"]


@dataclass
class Sum:
    terms: List[Tuple[int, "ExprAST"]]


ExprAST = Union[ScalarLit, GenRef, Star, Power, Product, Sum]


# ---------- Grammar ----------

def _scalar_action(s, loc, tokens):
    try:
        return ScalarLit(Scalar.from_text(tokens[0]), loc)
    except ParameterError as e:
        # fatal: stops backtracking into the other alternatives
        raise pp.ParseFatalException(s, loc, str(e)) from None


def _postfix_action(tokens):
    node = tokens[0][0]
    for op in tokens[0][1:]:
        node = Power(node, op) if isinstance(op, int) else Star(node)
    return node


def _product_action(tokens):
    factors = list(tokens)
    return factors[0] if len(factors) == 1 else Product(factors)


def _sum_action(tokens):
    items = list(tokens)
    terms: List[Tuple[int, ExprAST]] = []
    sign = 1
    for item in items:
        if isinstance(item, str):
            sign = -1 if item == "-" else 1
        else:
            terms.append((sign, item))
            sign = 1
    if len(terms) == 1 and terms[0][0] == 1:
        return terms[0][1]
    return Sum(terms)


def _build_grammar() -> pp.ParserElement:
    expr = pp.Forward()
    lpar, rpar = pp.Suppress("("), pp.Suppress(")")

    complex_lit = pp.Regex(rf"\(\s*-?{_RATIONAL}\s*[+-]\s*{_RATIONAL}\s*i\s*\)")
    complex_lit.set_parse_action(_scalar_action)
    rational = pp.Regex(_RATIONAL)
    rational.set_parse_action(_scalar_action)
    gen = pp.Regex(r"[vuzagw](?:\[\s*\d+(?:\s*,\s*\d+)*\s*\])?")
    gen.set_parse_action(lambda s, loc, t: GenRef(t[0], loc))
    integer = pp.Regex(r"\d+").set_parse_action(lambda t: int(t[0]))

    atom = complex_lit | rational | gen | (lpar + expr + rpar)
    star = pp.Literal("'") | (pp.Literal("*") + pp.FollowedBy(pp.StringEnd() | pp.one_of(") + -")))
    postfix = pp.Group(atom + pp.ZeroOrMore(star | (pp.Suppress("^") + integer)))
    postfix.set_parse_action(_postfix_action)

    term = postfix + pp.ZeroOrMore(pp.Suppress("*") + postfix)
    term.set_parse_action(_product_action)

    sign = pp.one_of("+ -")
    expr <<= pp.Opt(sign) + term + pp.ZeroOrMore(sign + term)
    expr.set_parse_action(_sum_action)
    return expr


_GRAMMAR = _build_grammar()


def parse_ast(text: str) -> ExprAST:
    try:
        return _GRAMMAR.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        raise ExpressionSyntaxError(f"Cannot parse {text!r}: {e.msg}", e.lineno, e.column) from None


# ---------- Evaluation ----------

def _resolve(ref: GenRef, text: str, alphabet: Alphabet) -> GenSym:
    line, col = pp.lineno(ref.loc, text), pp.col(ref.loc, text)
    try:
        g = GenSym.from_text(ref.text)
    except ParameterError as e:
        raise ExpressionSyntaxError(str(e), line, col) from None
    for i in g.indices:
        if not 1 <= i <= alphabet.n:
            raise IndexRangeError(f"Index {i} of {ref.text} is outside 1..{alphabet.n}", line, col)
    if g not in alphabet:
        raise UnknownGeneratorError(f"Generator {ref.text} is not in {alphabet.name}", line, col)
    return g


def evaluate(node: ExprAST, alphabet: Alphabet, text: str = "") -> NCPoly:
    if isinstance(node, ScalarLit):
        return NCPoly.const(alphabet, node.value)
    if isinstance(node, GenRef):
        return NCPoly.gen(alphabet, _resolve(node, text, alphabet))
    if isinstance(node, Star):
        return evaluate(node.child, alphabet, text).adjoint()
    if isinstance(node, Power):
        return evaluate(node.child, alphabet, text) ** node.exponent
    if isinstance(node, Product):
        result = NCPoly.one(alphabet)
        for f in node.factors:
            result = result * evaluate(f, alphabet, text)
        return result
    total = NCPoly.zero(alphabet)
    for sign, term in node.terms:
        value = evaluate(term, alphabet, text)
        total = total + value if sign > 0 else total - value
    return total


def parse_expr(text: str, target) -> NCPoly:
    """Parse over an Alphabet, or over the alphabet of anything with an `.alphabet`."""
    alphabet = target if isinstance(target, Alphabet) else target.alphabet
    return evaluate(parse_ast(text), alphabet, text)


# ---------- Printing ----------

def format_ast(node: ExprAST) -> str:
    """Text for an AST; parse_ast(format_ast(t)) == t."""
    if isinstance(node, ScalarLit):
        return node.value.to_text()
    if isinstance(node, GenRef):
        return node.text
    if isinstance(node, Star):
        return f"{_wrap(node.child)}'"
    if isinstance(node, Power):
        return f"{_wrap(node.child)}^{node.exponent}"
    if isinstance(node, Product):
        return "*".join(_wrap(f) if isinstance(f, (Sum, Product)) else format_ast(f) for f in node.factors)
    parts = []
    for idx, (sign, term) in enumerate(node.terms):
        body = _wrap(term) if isinstance(term, Sum) else format_ast(term)
        if idx == 0:
            parts.append(body if sign > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if sign > 0 else f" - {body}")
    return "".join(parts)


def _wrap(node: ExprAST) -> str:
    if isinstance(node, GenRef) or (isinstance(node, ScalarLit) and node.value.is_real() and node.value.re >= 0):
        return format_ast(node)
    return f"({format_ast(node)})"
