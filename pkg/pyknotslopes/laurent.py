from __future__ import annotations

from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union


class ZeroPolynomialError(Exception):
    ...


class NonDivisibleError(Exception):
    ...


class NotDivisibleBy4Error(Exception):
    ...


class LaurentPoly:
    """
    Exact single variable Laurent polynomial over the integers.

    Terms are kept sparse as `exponent -> coefficient` with no zero coefficients,
    so two polynomials are equal exactly when their term maps are equal. The
    display variable ("A" for brackets, "q" for Jones polynomials) never takes
    part in equality or hashing.
    """

    __slots__ = ("_terms", "_hash", "variable")

    def __init__(self, terms: Optional[Mapping[int, int]] = None, variable: str = "A"):
        self._terms: Dict[int, int] = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff:
                    self._terms[int(exp)] = int(coeff)
        self._hash = None
        self.variable = variable

    @classmethod
    def _wrap(cls, terms: Dict[int, int], variable: str = "A") -> LaurentPoly:
        # terms must already be canonical, the dict is adopted without a copy
        poly = cls.__new__(cls)
        poly._terms = terms
        poly._hash = None
        poly.variable = variable
        return poly

    @classmethod
    def mono(cls, coeff: int, exp: int, variable: str = "A") -> LaurentPoly:
        if coeff == 0:
            return cls._wrap({}, variable)
        return cls._wrap({int(exp): int(coeff)}, variable)

    @classmethod
    def from_json(cls, pairs: Sequence[Sequence], variable: str = "A") -> LaurentPoly:
        terms = {}
        for exp, coeff in pairs:
            terms[int(exp)] = terms.get(int(exp), 0) + int(coeff)
        return cls(terms, variable)

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    @property
    def maxdeg(self) -> int:
        return self.degree_bounds()[1]

    @property
    def mindeg(self) -> int:
        return self.degree_bounds()[0]

    def is_zero(self) -> bool:
        return not self._terms

    def degree_bounds(self) -> Tuple[int, int]:
        if not self._terms:
            raise ZeroPolynomialError("The zero polynomial has no degree")
        return min(self._terms), max(self._terms)

    def leading_coefficient(self) -> int:
        return self._terms[self.maxdeg]

    def trailing_coefficient(self) -> int:
        return self._terms[self.mindeg]

    def items(self) -> Iterator[Tuple[int, int]]:
        """ Terms in ascending exponent order """
        for exp in sorted(self._terms):
            yield exp, self._terms[exp]

    def shift(self, k: int) -> LaurentPoly:
        """ Multiply by the monomial A^k """
        if k == 0:
            return self
        return LaurentPoly._wrap({e + k: c for e, c in self._terms.items()}, self.variable)

    def invert_variable(self) -> LaurentPoly:
        """ Substitute A -> A^-1 """
        return LaurentPoly._wrap({-e: c for e, c in self._terms.items()}, self.variable)

    def evaluate(self, x: Union[int, float, complex]):
        return sum(c * x**e for e, c in self._terms.items())

    def divide_exact(self, other: LaurentPoly) -> LaurentPoly:
        """
        Return r with r * other == self, or raise NonDivisibleError.

        Long division from the top degree; a remainder narrower than the divisor
        that is still nonzero means no exact quotient exists.
        """
        if other.is_zero():
            raise ZeroDivisionError("Division by the zero polynomial")

        otherLow, otherHigh = other.degree_bounds()
        otherLead = other._terms[otherHigh]
        span = otherHigh - otherLow

        remainder = dict(self._terms)
        quotient: Dict[int, int] = {}
        while remainder:
            high = max(remainder)
            if high - min(remainder) < span:
                raise NonDivisibleError(f"{self} is not divisible by {other}")

            coeff, rest = divmod(remainder[high], otherLead)
            if rest != 0:
                raise NonDivisibleError(f"{self} is not divisible by {other}")

            shift = high - otherHigh
            quotient[shift] = coeff
            for exp, c in other._terms.items():
                key = exp + shift
                value = remainder.get(key, 0) - coeff * c
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)

        return LaurentPoly._wrap(quotient, self.variable)

    def substitute_q(self) -> LaurentPoly:
        """ Rewrite c*A^e as c*q^(-e/4) """
        terms = {}
        for exp, coeff in self._terms.items():
            if exp % 4 != 0:
                raise NotDivisibleBy4Error(
                    f"Exponent {exp} of {self} is not divisible by 4")
            terms[-exp // 4] = coeff
        return LaurentPoly._wrap(terms, "q")

    def to_json(self) -> List[List]:
        return [[exp, str(coeff)] for exp, coeff in self.items()]

    def _coerce(self, other) -> Optional[LaurentPoly]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.mono(other, 0, self.variable)
        return None

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented

        terms = dict(self._terms)
        for exp, coeff in other._terms.items():
            value = terms.get(exp, 0) + coeff
            if value:
                terms[exp] = value
            else:
                terms.pop(exp, None)
        return LaurentPoly._wrap(terms, self.variable)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._wrap({e: -c for e, c in self._terms.items()}, self.variable)

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly._wrap({}, self.variable)
            return LaurentPoly._wrap({e: c * other for e, c in self._terms.items()}, self.variable)
        if not isinstance(other, LaurentPoly):
            return NotImplemented

        terms: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = e1 + e2
                terms[key] = terms.get(key, 0) + c1 * c2
        return LaurentPoly._wrap({e: c for e, c in terms.items() if c}, self.variable)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> LaurentPoly:
        if power < 0:
            if len(self._terms) == 1:
                ((exp, coeff),) = self._terms.items()
                if coeff in {1, -1}:
                    return LaurentPoly.mono(coeff**-power, exp * power, self.variable)
            raise ValueError("Only unit monomials have negative powers")

        result = LaurentPoly.mono(1, 0, self.variable)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"

        string = ""
        for exp in sorted(self._terms, reverse=True):
            coeff = self._terms[exp]
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)

            if exp == 0:
                body = str(magnitude)
            else:
                power = self.variable if exp == 1 else f"{self.variable}^{exp}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"

            if not string:
                string = body if sign == "+" else f"-{body}"
            else:
                string += f" {sign} {body}"
        return string

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}('{self}')"


ZERO = LaurentPoly()
ONE = LaurentPoly.mono(1, 0)
DELTA = LaurentPoly({2: -1, -2: -1})


def mono(coeff: int, exp: int) -> LaurentPoly:
    return LaurentPoly.mono(coeff, exp)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def neg(p: LaurentPoly) -> LaurentPoly:
    return -p


def degree_bounds(p: LaurentPoly) -> Tuple[int, int]:
    return p.degree_bounds()


def divide_exact(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p.divide_exact(q)


def substitute_q(p: LaurentPoly) -> LaurentPoly:
    return p.substitute_q()


def polynomial_record(p: Optional[LaurentPoly]) -> Optional[dict]:
    if p is None:
        return None
    return {"terms": p.to_json(), "text": str(p)}
