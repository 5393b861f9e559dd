"""
Exact arithmetic in the Ore algebra D = Q[theta^±1, t^±1]<dtheta, dt>.

Elements are stored in the normal order theta^a t^b dtheta^p dt^q (all
variables to the left of all derivations). The only non-trivial relations are
dtheta*theta = theta*dtheta + 1 and dt*t = t*dt + 1; every other pair of
generators commutes. Because the normal order is canonical, two operators are
equal exactly when their term maps are equal, which is what makes every
identity check in this package decidable by inspection.

Products are computed with the Leibniz rule

    d^p * x^c = sum_k binom(p, k) * (c)_k * x^(c-k) * d^(p-k),

where (c)_k is the falling factorial. The rule holds for negative c too, so
Laurent monomials need no special treatment.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Tuple, Union

from gmdual.core.error_handler import ValidationError

Exponent = Tuple[int, int, int, int]
Scalar = Union[int, Fraction]


@lru_cache(maxsize=4096)
def _leibniz(order: int, power: int) -> Tuple[Tuple[int, int], ...]:
    """
    Non-zero pairs (k, binom(order, k) * (power)_k) for d^order * x^power.
    """
    pairs = []
    falling = 1
    for k in range(order + 1):
        if k > 0:
            falling *= power - k + 1
        if falling == 0:
            break
        pairs.append((k, comb(order, k) * falling))
    return tuple(pairs)


class OreOperator:
    """
    Normal-ordered element of Q[theta^±1, t^±1]<dtheta, dt>.

    Instances are immutable. The term map sends an exponent quadruple
    (a, b, p, q) to the non-zero rational coefficient of
    theta^a t^b dtheta^p dt^q.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Exponent, Scalar]] = None):
        """
        Build an operator from a term map.

        Args:
            terms: Map from (a, b, p, q) to a rational coefficient. Zero
                coefficients are dropped.

        Raises:
            ValidationError: If a derivation exponent is negative.
        """
        cleaned: Dict[Exponent, Fraction] = {}
        for exponent, coefficient in (terms or {}).items():
            a, b, p, q = (int(e) for e in exponent)
            if p < 0 or q < 0:
                raise ValidationError("negative derivation exponent", field="exponent", value=exponent)
            value = Fraction(coefficient)
            if value:
                key = (a, b, p, q)
                cleaned[key] = cleaned.get(key, Fraction(0)) + value
        self._terms = {k: v for k, v in cleaned.items() if v}
        self._hash: Optional[int] = None

    @classmethod
    def _from_clean(cls, terms: Dict[Exponent, Fraction]) -> "OreOperator":
        op = cls.__new__(cls)
        op._terms = terms
        op._hash = None
        return op

    @classmethod
    def monomial(cls, coefficient: Scalar = 1, a: int = 0, b: int = 0, p: int = 0, q: int = 0) -> "OreOperator":
        """
        The operator coefficient * theta^a t^b dtheta^p dt^q.
        """
        return cls({(a, b, p, q): coefficient})

    @classmethod
    def constant(cls, value: Scalar) -> "OreOperator":
        return cls({(0, 0, 0, 0): value})

    @classmethod
    def coerce(cls, value: Union["OreOperator", Scalar]) -> "OreOperator":
        if isinstance(value, OreOperator):
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return cls.constant(value)
        raise TypeError(f"Cannot convert {type(value).__name__} to OreOperator")

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_function(self) -> bool:
        """True if no term carries a derivation."""
        return all(p == 0 and q == 0 for (_, _, p, q) in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def theta_derivation_degree(self) -> int:
        """Highest power of dtheta, or -1 for the zero operator."""
        return max((p for (_, _, p, _) in self._terms), default=-1)

    def dt_degree(self) -> int:
        """Highest power of dt, or -1 for the zero operator."""
        return max((q for (_, _, _, q) in self._terms), default=-1)

    def part(self, predicate) -> "OreOperator":
        """Sub-sum of the terms whose exponent satisfies ``predicate``."""
        return OreOperator._from_clean({e: c for e, c in self._terms.items() if predicate(e)})

    def scale(self, factor: Scalar) -> "OreOperator":
        factor = Fraction(factor)
        if not factor:
            return ZERO
        return OreOperator._from_clean({e: c * factor for e, c in self._terms.items()})

    def __eq__(self, other: object) -> bool:
        if isinstance(other, OreOperator):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == OreOperator.constant(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: Union["OreOperator", Scalar]) -> "OreOperator":
        other = OreOperator.coerce(other)
        merged = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            value = merged.get(exponent, Fraction(0)) + coefficient
            if value:
                merged[exponent] = value
            else:
                merged.pop(exponent, None)
        return OreOperator._from_clean(merged)

    def __radd__(self, other: Scalar) -> "OreOperator":
        return self + other

    def __neg__(self) -> "OreOperator":
        return OreOperator._from_clean({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union["OreOperator", Scalar]) -> "OreOperator":
        return self + (-OreOperator.coerce(other))

    def __rsub__(self, other: Scalar) -> "OreOperator":
        return OreOperator.coerce(other) - self

    def __mul__(self, other: Union["OreOperator", Scalar]) -> "OreOperator":
        if isinstance(other, OreOperator):
            return mul(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "OreOperator":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "OreOperator":
        if exponent < 0:
            # Only Laurent monomials theta^a t^b are units.
            if self.is_monomial() and self.is_function():
                ((a, b, _, _), c), = self._terms.items()
                return OreOperator.monomial(c ** exponent, a * exponent, b * exponent)
            raise ValidationError("negative exponent of a non-invertible operator", field="exponent", value=exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = mul(result, base)
            exponent >>= 1
            if exponent:
                base = mul(base, base)
        return result

    def __str__(self) -> str:
        from gmdual.oplang.printer import to_text
        return to_text(self)

    def __repr__(self) -> str:
        return f"OreOperator({str(self)!r})"


def mul(left: OreOperator, right: OreOperator) -> OreOperator:
    """
    Normal-ordered product ``left * right``.

    Args:
        left: Left factor
        right: Right factor

    Returns:
        OreOperator: The product in normal order
    """
    result: Dict[Exponent, Fraction] = {}
    for (a, b, p, q), c1 in left._terms.items():
        for (c, d, r, s), c2 in right._terms.items():
            coefficient = c1 * c2
            for k1, w1 in _leibniz(p, c):
                for k2, w2 in _leibniz(q, d):
                    key = (a + c - k1, b + d - k2, p - k1 + r, q - k2 + s)
                    result[key] = result.get(key, Fraction(0)) + coefficient * (w1 * w2)
    return OreOperator._from_clean({k: v for k, v in result.items() if v})


def commutator(left: OreOperator, right: OreOperator) -> OreOperator:
    """Return left*right - right*left."""
    return mul(left, right) - mul(right, left)


def transpose(op: OreOperator) -> OreOperator:
    """
    Anti-automorphism fixing theta and t and sending each derivation to its
    negative. theta^a t^b dtheta^p dt^q maps to (-1)^(p+q) dtheta^p dt^q theta^a t^b,
    which is then brought back to normal order.
    """
    result = ZERO
    for (a, b, p, q), coefficient in op._terms.items():
        sign = -1 if (p + q) % 2 else 1
        derivations = OreOperator.monomial(sign * coefficient, 0, 0, p, q)
        result = result + mul(derivations, OreOperator.monomial(1, a, b))
    return result


def iota(op: OreOperator) -> OreOperator:
    """
    Involution theta -> -theta, dtheta -> -dtheta fixing t and dt: each
    coefficient is multiplied by (-1)^(a+p).
    """
    return OreOperator._from_clean({
        (a, b, p, q): (-c if (a + p) % 2 else c)
        for (a, b, p, q), c in op._terms.items()
    })


ZERO = OreOperator._from_clean({})
ONE = OreOperator._from_clean({(0, 0, 0, 0): Fraction(1)})
THETA = OreOperator._from_clean({(1, 0, 0, 0): Fraction(1)})
T = OreOperator._from_clean({(0, 1, 0, 0): Fraction(1)})
DTHETA = OreOperator._from_clean({(0, 0, 1, 0): Fraction(1)})
DT = OreOperator._from_clean({(0, 0, 0, 1): Fraction(1)})
