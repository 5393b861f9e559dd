"""
Evaluation of operator-expression syntax trees in the Ore algebra.
"""

from functools import singledispatch

from gmdual.oplang.parser import (
    Difference,
    Name,
    Negation,
    Number,
    OpExpr,
    Power,
    Product,
    Sum,
    parse,
)
from gmdual.ore.algebra import DT, DTHETA, T, THETA, OreOperator, mul

NAME_VALUES = {"theta": THETA, "t": T, "dtheta": DTHETA, "dt": DT}


@singledispatch
def evaluate(tree: OpExpr) -> OreOperator:
    """
    Evaluate a syntax tree to a normal-ordered operator.

    Products are multiplied in written order, so ``dt*t`` and ``t*dt``
    evaluate to different operators.
    """
    raise TypeError(f"Cannot evaluate {type(tree).__name__}")


@evaluate.register
def _(tree: Number) -> OreOperator:
    return OreOperator.constant(tree.value)


@evaluate.register
def _(tree: Name) -> OreOperator:
    return NAME_VALUES[tree.name]


@evaluate.register
def _(tree: Power) -> OreOperator:
    return evaluate(tree.base) ** tree.exponent


@evaluate.register
def _(tree: Product) -> OreOperator:
    return mul(evaluate(tree.left), evaluate(tree.right))


@evaluate.register
def _(tree: Sum) -> OreOperator:
    return evaluate(tree.left) + evaluate(tree.right)


@evaluate.register
def _(tree: Difference) -> OreOperator:
    return evaluate(tree.left) - evaluate(tree.right)


@evaluate.register
def _(tree: Negation) -> OreOperator:
    return -evaluate(tree.operand)


def parse_operator(source: str) -> OreOperator:
    """Parse and evaluate ``source`` in one step."""
    return evaluate(parse(source))
