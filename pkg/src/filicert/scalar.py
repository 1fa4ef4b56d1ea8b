"""Exact scalar arithmetic underlying every other module.

A :class:`Scalar` is a sparse Laurent polynomial in ``t`` with polynomial
dependence on ``alpha`` over the rationals: a finite map from exponent pairs
``(e_t, e_alpha)`` to nonzero :class:`fractions.Fraction` coefficients.
``e_t`` may be negative (certificate matrices contain ``1/t`` entries);
``alpha`` is never inverted, so ``e_alpha >= 0``.  The zero scalar is the
empty map, and no stored coefficient is zero, so structural equality of the
term maps is exact equality of scalars.

Scalars are immutable values; every operation returns a fresh canonical
scalar, so they are safe to share between concurrent tasks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .errors import NotAUnit, ZeroSpecialization

Rational = Fraction

_Coercible = Union["Scalar", int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact coefficient expected, got {type(value).__name__}")


class Scalar:
    """Element of Q[alpha][t, 1/t], kept in canonical (zero-free) form."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Fraction | int] | None = None):
        canonical: dict[tuple[int, int], Fraction] = {}
        if terms:
            for (e_t, e_alpha), coeff in terms.items():
                if e_alpha < 0:
                    raise ValueError("alpha exponent must be non-negative")
                coeff = _as_fraction(coeff)
                if coeff:
                    canonical[(int(e_t), int(e_alpha))] = coeff
        self._terms = canonical

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rational(cls, value: int | Fraction) -> "Scalar":
        return cls({(0, 0): _as_fraction(value)})

    @classmethod
    def t_power(cls, exponent: int) -> "Scalar":
        return cls({(exponent, 0): Fraction(1)})

    @classmethod
    def alpha_power(cls, exponent: int) -> "Scalar":
        return cls({(0, exponent): Fraction(1)})

    @classmethod
    def term(cls, coeff: int | Fraction, e_t: int = 0, e_alpha: int = 0) -> "Scalar":
        return cls({(e_t, e_alpha): _as_fraction(coeff)})

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(key == (0, 0) for key in self._terms)

    def constant_value(self) -> Fraction:
        """The value of a constant scalar, as an exact rational."""
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self._terms[(0, 0)]

    def iter_terms(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        """Terms in the canonical order: descending (e_t, e_alpha)."""
        for key in sorted(self._terms, reverse=True):
            yield key, self._terms[key]

    def term_count(self) -> int:
        return len(self._terms)

    def symbols(self) -> frozenset[str]:
        used = set()
        for e_t, e_alpha in self._terms:
            if e_t:
                used.add("t")
            if e_alpha:
                used.add("alpha")
        return frozenset(used)

    def min_t_exponent(self) -> int:
        """Smallest t-exponent; 0 for the zero scalar."""
        return min((k[0] for k in self._terms), default=0)

    def max_t_exponent(self) -> int:
        return max((k[0] for k in self._terms), default=0)

    def max_alpha_exponent(self) -> int:
        return max((k[1] for k in self._terms), default=0)

    def has_negative_t_exponent(self) -> bool:
        return self.min_t_exponent() < 0

    def is_unit_monomial(self) -> bool:
        """True iff the scalar is c*t^k with c a nonzero rational."""
        return len(self._terms) == 1 and next(iter(self._terms))[1] == 0

    def unit_parts(self) -> tuple[Fraction, int]:
        """Decompose a unit monomial as (c, k) with value c*t^k."""
        if not self.is_unit_monomial():
            raise NotAUnit(f"not of the form c*t^k: {self}")
        (e_t, _), coeff = next(iter(self._terms.items()))
        return coeff, e_t

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> "Scalar | None":
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar.from_rational(other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms = dict(self._terms)
        for key, coeff in rhs._terms.items():
            new = terms.get(key, Fraction(0)) + coeff
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
        result = Scalar.__new__(Scalar)
        result._terms = terms
        return result

    __radd__ = __add__

    def __neg__(self):
        result = Scalar.__new__(Scalar)
        result._terms = {key: -coeff for key, coeff in self._terms.items()}
        return result

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        terms: dict[tuple[int, int], Fraction] = {}
        for (a_t, a_alpha), a_coeff in self._terms.items():
            for (b_t, b_alpha), b_coeff in rhs._terms.items():
                key = (a_t + b_t, a_alpha + b_alpha)
                new = terms.get(key, Fraction(0)) + a_coeff * b_coeff
                if new:
                    terms[key] = new
                else:
                    terms.pop(key, None)
        result = Scalar.__new__(Scalar)
        result._terms = terms
        return result

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse_unit() ** (-exponent)
        result = ONE
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self._terms == rhs._terms

    def __bool__(self):
        return bool(self._terms)

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    # -- unit inversion and exact division ---------------------------------

    def inverse_unit(self) -> "Scalar":
        """Invert a unit monomial c*t^k; raises :class:`NotAUnit` otherwise."""
        coeff, e_t = self.unit_parts()
        return Scalar({(-e_t, 0): 1 / coeff})

    def exact_div(self, divisor: "Scalar") -> "Scalar":
        """Exact quotient self/divisor; raises ValueError if not divisible."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero scalar")
        if self.is_zero():
            return ZERO
        lead_key = max(divisor._terms)
        lead_coeff = divisor._terms[lead_key]
        remainder = dict(self._terms)
        quotient: dict[tuple[int, int], Fraction] = {}
        steps = 0
        limit = 16 * (len(self._terms) + len(divisor._terms) + 4) ** 2
        while remainder:
            steps += 1
            if steps > limit:
                raise ValueError("not exactly divisible")
            r_key = max(remainder)
            q_alpha = r_key[1] - lead_key[1]
            if q_alpha < 0:
                raise ValueError("not exactly divisible")
            q_key = (r_key[0] - lead_key[0], q_alpha)
            q_coeff = remainder[r_key] / lead_coeff
            quotient[q_key] = quotient.get(q_key, Fraction(0)) + q_coeff
            for (d_t, d_alpha), d_coeff in divisor._terms.items():
                key = (q_key[0] + d_t, q_key[1] + d_alpha)
                new = remainder.get(key, Fraction(0)) - q_coeff * d_coeff
                if new:
                    remainder[key] = new
                else:
                    remainder.pop(key, None)
        return Scalar(quotient)

    # -- evaluation --------------------------------------------------------

    def specialize(self, t_value: int | Fraction,
                   alpha_value: int | Fraction = 0) -> Fraction:
        """Exact evaluation at rational t and alpha.

        Raises :class:`ZeroSpecialization` when t_value = 0 meets a negative
        t-exponent.
        """
        t_value = _as_fraction(t_value)
        alpha_value = _as_fraction(alpha_value)
        if t_value == 0 and self.has_negative_t_exponent():
            raise ZeroSpecialization(f"pole at t = 0 in {self}")
        total = Fraction(0)
        for (e_t, e_alpha), coeff in self._terms.items():
            total += coeff * t_value ** e_t * alpha_value ** e_alpha
        return total

    def eval_t(self, t_value: int | Fraction) -> "Scalar":
        """Substitute a rational for t, keeping alpha symbolic."""
        t_value = _as_fraction(t_value)
        if t_value == 0 and self.has_negative_t_exponent():
            raise ZeroSpecialization(f"pole at t = 0 in {self}")
        terms: dict[tuple[int, int], Fraction] = {}
        for (e_t, e_alpha), coeff in self._terms.items():
            key = (0, e_alpha)
            new = terms.get(key, Fraction(0)) + coeff * t_value ** e_t
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
        result = Scalar.__new__(Scalar)
        result._terms = terms
        return result

    def eval_alpha(self, alpha_value: int | Fraction) -> "Scalar":
        """Substitute a rational for alpha, keeping t symbolic."""
        alpha_value = _as_fraction(alpha_value)
        terms: dict[tuple[int, int], Fraction] = {}
        for (e_t, e_alpha), coeff in self._terms.items():
            key = (e_t, 0)
            new = terms.get(key, Fraction(0)) + coeff * alpha_value ** e_alpha
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
        result = Scalar.__new__(Scalar)
        result._terms = terms
        return result

    def invert_t(self) -> "Scalar":
        """The substitution t -> 1/t (negate every t-exponent)."""
        return Scalar({(-e_t, e_alpha): c for (e_t, e_alpha), c in self._terms.items()})

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        chunks: list[str] = []
        for (e_t, e_alpha), coeff in self.iter_terms():
            factors: list[str] = []
            if e_t:
                factors.append("t" if e_t == 1 else f"t^{e_t}")
            if e_alpha:
                factors.append("alpha" if e_alpha == 1 else f"alpha^{e_alpha}")
            magnitude = abs(coeff)
            if not factors or magnitude != 1:
                factors.insert(0, str(magnitude))
            body = "*".join(factors)
            if not chunks:
                chunks.append(f"-{body}" if coeff < 0 else body)
            else:
                chunks.append(f"- {body}" if coeff < 0 else f"+ {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"Scalar({self})"


ZERO = Scalar()
ONE = Scalar.from_rational(1)
T = Scalar.t_power(1)
ALPHA = Scalar.alpha_power(1)


def as_scalar(value: _Coercible) -> Scalar:
    """Coerce an int, Fraction, or Scalar to a Scalar."""
    if isinstance(value, Scalar):
        return value
    return Scalar.from_rational(_as_fraction(value))


class UniPoly:
    """Univariate polynomial in an auxiliary indeterminate x over Scalars.

    Coefficients are stored by ascending degree with a nonzero leading
    coefficient (the zero polynomial has no coefficients).  Used for
    characteristic polynomials.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar | int | Fraction] = ()):
        cs = [as_scalar(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((ZERO, ONE))

    @classmethod
    def constant(cls, value: Scalar | int | Fraction) -> "UniPoly":
        return cls((as_scalar(value),))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar | int | Fraction]) -> "UniPoly":
        """The monic polynomial with the given roots: prod (x - r)."""
        result = cls((ONE,))
        for root in roots:
            result = result * cls((-as_scalar(root), ONE))
        return result

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == ONE

    def coefficient(self, degree: int) -> Scalar:
        if 0 <= degree < len(self.coeffs):
            return self.coeffs[degree]
        return ZERO

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coefficient(i) + other.coefficient(i) for i in range(size))

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    def evaluate(self, value: Scalar | int | Fraction) -> Scalar:
        """Horner evaluation at a Scalar value of x."""
        value = as_scalar(value)
        total = ZERO
        for coeff in reversed(self.coeffs):
            total = total * value + coeff
        return total

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for degree in range(len(self.coeffs) - 1, -1, -1):
            coeff = self.coeffs[degree]
            if coeff.is_zero():
                continue
            x_part = "" if degree == 0 else ("x" if degree == 1 else f"x^{degree}")
            if not x_part:
                parts.append(f"({coeff})")
            elif coeff == ONE:
                parts.append(x_part)
            else:
                parts.append(f"({coeff})*{x_part}")
        return " + ".join(parts)

    def __repr__(self):
        return f"UniPoly({self})"
