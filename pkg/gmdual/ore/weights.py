"""
Weight vectors, weighted degrees and symbols.

A weight vector assigns integer weights to theta, t, dtheta and dt. Three
presets are used throughout:

- ``WeightVector.grading(n)``: deg theta = 1, deg t = n, derivations negative
- ``WeightVector.f_filtration()``: theta weighs -1, t 0, dtheta 2, dt 1
- ``WeightVector.order()``: the usual order filtration by derivations

For every preset w(dtheta) + w(theta) >= 0 and w(dt) + w(t) >= 0, so the
commutator terms never rise in weight and the associated graded ring is the
commutative ring Q[theta^±1, t^±1, u, v] (u, v standing for dtheta, dt).
"""

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Mapping, NamedTuple, Optional, Tuple, Union

from gmdual.core.error_handler import ValidationError, VerificationError
from gmdual.ore.algebra import Exponent, OreOperator, Scalar

U_INDEX = 2
V_INDEX = 3


@dataclass(frozen=True)
class WeightVector:
    """Integer weights of theta, t, dtheta and dt."""

    w_theta: int
    w_t: int
    w_dtheta: int
    w_dt: int

    @classmethod
    def grading(cls, n: int) -> "WeightVector":
        """Homogeneity grading deg theta = 1, deg t = n."""
        return cls(1, n, -1, -n)

    @classmethod
    def f_filtration(cls) -> "WeightVector":
        """Filtration in which dtheta has degree two and theta degree -1."""
        return cls(-1, 0, 2, 1)

    @classmethod
    def order(cls) -> "WeightVector":
        """Order filtration by the total number of derivations."""
        return cls(0, 0, 1, 1)

    def weight(self, exponent: Exponent) -> int:
        a, b, p, q = exponent
        return a * self.w_theta + b * self.w_t + p * self.w_dtheta + q * self.w_dt


class WeightedDegree(NamedTuple):
    degree: int
    homogeneous: bool


def weighted_degree(op: OreOperator, weights: WeightVector) -> WeightedDegree:
    """
    Top weighted degree of ``op`` and whether every term attains it.

    Raises:
        VerificationError: For the zero operator ("undefined degree").
    """
    if op.is_zero():
        raise VerificationError("undefined degree", check="weighted_degree", detail="zero operator")
    degrees = [weights.weight(e) for e in op.terms]
    top = max(degrees)
    return WeightedDegree(top, all(d == top for d in degrees))


class SymbolPolynomial:
    """
    Element of the commutative ring Q[theta^±1, t^±1, u, v].

    The term map sends (a, b, p, q) to the coefficient of
    theta^a t^b u^p v^q. Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Exponent, Scalar]] = None):
        cleaned: Dict[Exponent, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            a, b, p, q = (int(e) for e in exponent)
            if p < 0 or q < 0:
                raise ValidationError("negative exponent of u or v", field="exponent", value=exponent)
            key = (a, b, p, q)
            cleaned[key] = cleaned.get(key, Fraction(0)) + Fraction(coefficient)
        self._terms = {k: v for k, v in cleaned.items() if v}

    @classmethod
    def monomial(cls, coefficient: Scalar = 1, a: int = 0, b: int = 0, p: int = 0, q: int = 0) -> "SymbolPolynomial":
        return cls({(a, b, p, q): coefficient})

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit_monomial(self) -> bool:
        """True for a single term c * theta^a t^b without u or v."""
        if len(self._terms) != 1:
            return False
        (_, _, p, q), = self._terms
        return p == 0 and q == 0

    def inverse(self) -> "SymbolPolynomial":
        """Inverse of a unit monomial."""
        if not self.is_unit_monomial():
            raise VerificationError("only unit monomials are invertible", check="symbol")
        ((a, b, _, _), c), = self._terms.items()
        return SymbolPolynomial.monomial(1 / c, -a, -b)

    def by_power(self, index: int) -> Dict[int, "SymbolPolynomial"]:
        """
        Group terms by the power of u (index 2) or v (index 3); the grouped
        coefficients have that variable removed.
        """
        groups: Dict[int, Dict[Exponent, Fraction]] = {}
        for exponent, coefficient in self._terms.items():
            power = exponent[index]
            reduced = list(exponent)
            reduced[index] = 0
            groups.setdefault(power, {})[tuple(reduced)] = coefficient
        return {power: SymbolPolynomial(terms) for power, terms in groups.items()}

    def substitute_u(self, value: "SymbolPolynomial") -> "SymbolPolynomial":
        """Replace u by ``value``."""
        result = SymbolPolynomial()
        for power, coefficient in self.by_power(U_INDEX).items():
            result = result + coefficient * value ** power
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SymbolPolynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "SymbolPolynomial") -> "SymbolPolynomial":
        merged = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            merged[exponent] = merged.get(exponent, Fraction(0)) + coefficient
        return SymbolPolynomial(merged)

    def __neg__(self) -> "SymbolPolynomial":
        return SymbolPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "SymbolPolynomial") -> "SymbolPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["SymbolPolynomial", Scalar]) -> "SymbolPolynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return SymbolPolynomial({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, SymbolPolynomial):
            return NotImplemented
        result: Dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                result[key] = result.get(key, Fraction(0)) + c1 * c2
        return SymbolPolynomial(result)

    def __rmul__(self, other: Scalar) -> "SymbolPolynomial":
        return self * other

    def __pow__(self, exponent: int) -> "SymbolPolynomial":
        if exponent < 0:
            raise ValidationError("negative power of a symbol", field="exponent", value=exponent)
        result = SymbolPolynomial.monomial(1)
        for _ in range(exponent):
            result = result * self
        return result

    def __str__(self) -> str:
        from gmdual.oplang.printer import format_terms
        return format_terms(self._terms, ("theta", "t", "u", "v"))

    def __repr__(self) -> str:
        return f"SymbolPolynomial({str(self)!r})"


def symbol(op: OreOperator, weights: WeightVector) -> SymbolPolynomial:
    """
    Sum of the top-weight terms of ``op`` read commutatively, with dtheta
    becoming u and dt becoming v.

    Raises:
        VerificationError: For the zero operator.
    """
    top = weighted_degree(op, weights).degree
    return SymbolPolynomial({e: c for e, c in op.terms.items() if weights.weight(e) == top})


def is_regular_symbol_pair(first: SymbolPolynomial, second: SymbolPolynomial) -> bool:
    """
    Complete-intersection criterion for a pair of symbols.

    ``second`` must be linear in u with a unit coefficient, so u can be
    eliminated; after substituting for u, ``first`` must have positive degree
    in v with a unit leading coefficient. The quotient by both symbols is then
    free of finite rank over Q[theta^±1, t^±1].
    """
    u_parts = second.by_power(U_INDEX)
    if max(u_parts, default=0) != 1:
        return False
    alpha = u_parts[1]
    if not alpha.is_unit_monomial():
        return False
    beta = u_parts.get(0, SymbolPolynomial())
    u_value = -(beta * alpha.inverse())

    reduced = first.substitute_u(u_value)
    v_parts = reduced.by_power(V_INDEX)
    top: Tuple[int, ...] = tuple(power for power, part in v_parts.items() if not part.is_zero())
    if not top or max(top) < 1:
        return False
    return v_parts[max(top)].is_unit_monomial()
