from fractions import Fraction

import pytest

from ncpoisson.expr import (
    ArityError,
    Bracket,
    DialLeft,
    DialRight,
    ExpressionSyntaxError,
    Generator,
    HbarSymbol,
    Number,
    PermStar,
    ScalarMul,
    Sum,
    Tensor,
    Wedge,
    parse_expression,
    to_source,
)


def test_bracket_of_tensors():
    X, H = Generator("X"), Generator("H")
    assert parse_expression("{X@H, X@H}") == Bracket(Tensor(X, H), Tensor(X, H))


def test_dial_right_node():
    node = parse_expression("(1@x) |- (1@y)")
    assert node == DialRight(Tensor(Number(Fraction(1)), Generator("x")),
                             Tensor(Number(Fraction(1)), Generator("y")))


def test_star_variants():
    assert parse_expression("a -|s b") == DialLeft(Generator("a"), Generator("b"), True)
    assert parse_expression("a -| b") == DialLeft(Generator("a"), Generator("b"), False)


def test_precedence():
    a, b, c = Generator("a"), Generator("b"), Generator("c")
    assert parse_expression("a * b @ c") == PermStar(a, Tensor(b, c))
    assert parse_expression("a ^ b @ c") == Tensor(Wedge(a, b), c)
    assert parse_expression("a + b * c") == Sum(((1, a), (1, PermStar(b, c))))


def test_coefficients_and_h():
    assert parse_expression("1/2 h^3") == ScalarMul(Fraction(1, 2), HbarSymbol(3))
    assert parse_expression("-X") == ScalarMul(Fraction(-1), Generator("X"))
    assert parse_expression("h.X") == parse_expression("h . X")


@pytest.mark.parametrize("source,position", [("{X, {Y", 6), ("(a", 2), ("a +", 3), ("", 0), ("a $ b", 2)])
def test_syntax_errors(source, position):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_expression(source)
    assert info.value.position == position


@pytest.mark.parametrize("source", ["{a}", "[a, b, c]", "{a, b, c}"])
def test_arity_errors(source):
    with pytest.raises(ArityError):
        parse_expression(source)


EXPRESSIONS = [
    "{X@H, X@H}", "(1@x) |- (1@y)", "a - b - c", "-(a + b) * c", "2 h^2.X @ Y - 1/3 h @ H",
    "[X, [Y, H]]", "a |-s b -|s c", "{a ^ b @ c, -2 d}", "x@y@z - y@x@z", "(a)", "3 (a + b)",
    "-1/2 {X, Y}", "h", "a - -b",
]


@pytest.mark.parametrize("source", EXPRESSIONS)
def test_print_parse_round_trip(source):
    node = parse_expression(source)
    assert parse_expression(to_source(node)) == node
