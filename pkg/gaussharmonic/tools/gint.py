# -*- coding: utf-8 -*-
"""
This module contains exact arbitrary-precision arithmetic for Gaussian
integers and Gaussian rationals, and valuations with respect to a
rational integer base.

Rational numbers are represented by 'fractions.Fraction'.

Classes:
    - GaussianInt: The class describes an element a+bi of Z[i].
    - GaussianRational: The class describes an element of Q(i) in canonical form.

Functions:
    - reciprocal: Returns 1/z as canonical Gaussian rational.
    - valuation: Returns the valuation of a rational integer.
    - valuation_int: Returns the valuation of a Gaussian integer.
    - valuation_fraction: Returns the valuation of a rational number.
    - valuation_rat: Returns the valuation of a Gaussian rational.
    - is_p_integral: Checks that a Gaussian rational has no p in its denominator.

Constants:
    - INFINITY: The valuation of zero.

"""


from __future__ import annotations

import logging
import math
import typing as ty
from fractions import Fraction

import gmpy2

from gaussharmonic.tools.tools import GaussianZeroDivisionError, InvalidBaseError


__all__ = (
    'INFINITY', 'Valuation', 'GaussianInt', 'GaussianRational', 'I',
    'reciprocal', 'valuation', 'valuation_int', 'valuation_fraction', 'valuation_rat', 'is_p_integral',
)


logger = logging.getLogger(__name__)


INFINITY = math.inf
Valuation = ty.Union[int, float]


class GaussianInt:
    """
    The class describes an element a+bi of Z[i].

    Instances are immutable and hashable; integers are accepted
    as operands wherever a Gaussian integer is expected.

    Attributes:
        re (int): The real part.
        im (int): The imaginary part.

    Samples:

    .. code-block:: python

        >> GaussianInt(1, 2) * GaussianInt(1, -2)
        5
        >> GaussianInt(3, -1) ** 2
        8-6i
        >> print(GaussianInt(0, -1))
        -i

    """
    __slots__ = ('_re', '_im')

    def __init__(self, re: int = 0, im: int = 0) -> None:
        self._re = int(re)
        self._im = int(im)

    @property
    def re(self) -> int:
        return self._re

    @property
    def im(self) -> int:
        return self._im

    @classmethod
    def coerce(cls, value: ty.Union[GaussianInt, int]) -> GaussianInt:
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int):
            return cls(value, 0)
        return NotImplemented

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self._re, -self._im)

    def norm(self) -> int:
        return self._re * self._re + self._im * self._im

    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def __add__(self, other: ty.Union[GaussianInt, int]) -> GaussianInt:
        other = GaussianInt.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianInt(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other: ty.Union[GaussianInt, int]) -> GaussianInt:
        other = GaussianInt.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianInt(self._re - other._re, self._im - other._im)

    def __rsub__(self, other: ty.Union[GaussianInt, int]) -> GaussianInt:
        other = GaussianInt.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self._re, -self._im)

    def __mul__(self, other: ty.Union[GaussianInt, int]) -> GaussianInt:
        other = GaussianInt.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self._re, self._im, other._re, other._im
        return GaussianInt(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> GaussianInt:
        if exponent < 0:
            msg = f'Negative power {exponent} of a Gaussian integer, use reciprocal() instead.'
            logger.error(msg)
            raise ValueError(msg)
        result, base = GaussianInt(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: ty.Any) -> bool:
        if isinstance(other, int):
            other = GaussianInt(other)
        if isinstance(other, GaussianInt):
            return self._re == other._re and self._im == other._im
        return NotImplemented

    def __hash__(self) -> int:
        # Equal to int values, so real values hash as ints.
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __getstate__(self) -> ty.Tuple[int, int]:
        return self._re, self._im

    def __setstate__(self, state: ty.Tuple[int, int]) -> None:
        self._re, self._im = state

    def __str__(self) -> str:
        if self._im == 0:
            return str(self._re)
        imag = 'i' if abs(self._im) == 1 else f'{abs(self._im)}i'
        if self._re == 0:
            return imag if self._im > 0 else '-' + imag
        return f"{self._re}{'+' if self._im > 0 else '-'}{imag}"

    def __repr__(self) -> str:
        return f'GaussianInt({self._re}, {self._im})'


I = GaussianInt(0, 1)


class GaussianRational:
    """
    The class describes an element of Q(i) in canonical form.

    The value is num/den with a Gaussian integer numerator and a positive
    rational integer denominator, gcd(gcd(|num.re|, |num.im|), den) = 1.
    Every element of Q(i) has exactly one such representative.

    Attributes:
        num (GaussianInt): The numerator.
        den (int): The positive denominator.

    Samples:

    .. code-block:: python

        >> print(GaussianRational(GaussianInt(2, -2), 8))
        (1-i)/4
        >> GaussianRational(3) / GaussianRational(GaussianInt(1, 1))
        GaussianRational(GaussianInt(3, -3), 2)

    """
    __slots__ = ('_num', '_den')

    def __init__(self, num: ty.Union[GaussianInt, int] = 0, den: int = 1) -> None:
        num = GaussianInt.coerce(num)
        den = int(den)
        if den == 0:
            msg = f'Zero denominator for the numerator {num}.'
            logger.error(msg)
            raise GaussianZeroDivisionError(msg)
        if den < 0:
            num, den = -num, -den
        common = math.gcd(math.gcd(num.re, num.im), den)
        if common > 1:
            num, den = GaussianInt(num.re // common, num.im // common), den // common
        self._num = num
        self._den = den

    @property
    def num(self) -> GaussianInt:
        return self._num

    @property
    def den(self) -> int:
        return self._den

    @classmethod
    def coerce(cls, value: ty.Any) -> GaussianRational:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (GaussianInt, int)):
            return cls(value)
        if isinstance(value, Fraction):
            return cls(value.numerator, value.denominator)
        return NotImplemented

    @classmethod
    def from_fractions(cls, re: Fraction, im: Fraction) -> GaussianRational:
        """
        Builds the Gaussian rational re + im*i from two rational numbers.

        """
        re, im = Fraction(re), Fraction(im)
        den = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        return cls(GaussianInt(re.numerator * (den // re.denominator),
                               im.numerator * (den // im.denominator)), den)

    @property
    def real(self) -> Fraction:
        return Fraction(self._num.re, self._den)

    @property
    def imag(self) -> Fraction:
        return Fraction(self._num.im, self._den)

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_gaussian_integer(self) -> bool:
        return self._den == 1

    def __add__(self, other: ty.Any) -> GaussianRational:
        other = GaussianRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self._num * other._den + other._num * self._den, self._den * other._den)

    __radd__ = __add__

    def __sub__(self, other: ty.Any) -> GaussianRational:
        other = GaussianRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self._num * other._den - other._num * self._den, self._den * other._den)

    def __rsub__(self, other: ty.Any) -> GaussianRational:
        other = GaussianRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self._num, self._den)

    def __mul__(self, other: ty.Any) -> GaussianRational:
        other = GaussianRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other: ty.Any) -> GaussianRational:
        other = GaussianRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other: ty.Any) -> GaussianRational:
        other = GaussianRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.reciprocal()

    def __pow__(self, exponent: int) -> GaussianRational:
        if exponent < 0:
            return self.reciprocal() ** -exponent
        return GaussianRational(self._num ** exponent, self._den ** exponent)

    def reciprocal(self) -> GaussianRational:
        """
        Returns 1/q: den * conj(num) / norm(num).

        Raises:
            GaussianZeroDivisionError: If the value is zero.

        """
        if self.is_zero():
            msg = 'Reciprocal of zero in Q(i).'
            logger.error(msg)
            raise GaussianZeroDivisionError(msg)
        return GaussianRational(self._num.conjugate() * self._den, self._num.norm())

    def __eq__(self, other: ty.Any) -> bool:
        other = GaussianRational.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        if self._num.im == 0:
            return hash(Fraction(self._num.re, self._den))
        if self._den == 1:
            return hash(self._num)
        return hash((self._num, self._den))

    def __getstate__(self) -> ty.Tuple[GaussianInt, int]:
        return self._num, self._den

    def __setstate__(self, state: ty.Tuple[GaussianInt, int]) -> None:
        self._num, self._den = state

    def __str__(self) -> str:
        if self._den == 1:
            return str(self._num)
        if self._num.re != 0 and self._num.im != 0:
            return f'({self._num})/{self._den}'
        return f'{self._num}/{self._den}'

    def __repr__(self) -> str:
        return f'GaussianRational({self._num!r}, {self._den})'


def reciprocal(z: ty.Union[GaussianInt, int]) -> GaussianRational:
    """
    Returns 1/z as canonical Gaussian rational conj(z)/norm(z).

    Args:
        z (Union[GaussianInt, int]): Nonzero Gaussian integer.

    Returns:
        GaussianRational: The reciprocal, result * z = 1.

    Raises:
        GaussianZeroDivisionError: If z = 0.

    .. code-block:: python

        >> print(reciprocal(GaussianInt(1, 2)))
        (1-2i)/5
        >> print(reciprocal(GaussianInt(2, 2)))
        (1-i)/4

    """
    z = GaussianInt.coerce(z)
    if z.is_zero():
        msg = 'Reciprocal of the zero Gaussian integer.'
        logger.error(msg)
        raise GaussianZeroDivisionError(msg)
    return GaussianRational(z.conjugate(), z.norm())


def _check_base(b: int) -> None:
    if b < 2:
        msg = f'Valuation base must be >= 2, now {b}.'
        logger.error(msg)
        raise InvalidBaseError(msg)


def valuation(x: int, b: int) -> Valuation:
    """
    Returns the largest t with b^t | x, INFINITY for x = 0.

    Raises:
        InvalidBaseError: If b < 2.

    """
    _check_base(b)
    if x == 0:
        return INFINITY
    return int(gmpy2.remove(abs(x), b)[1])


def valuation_int(z: ty.Union[GaussianInt, int], b: int) -> Valuation:
    """
    Returns the valuation of a Gaussian integer with respect to the rational integer b.

    The valuation is the largest t with b^t dividing both parts,
    which is divisibility of z by b^t in Z[i].

    Args:
        z (Union[GaussianInt, int]): The valuated element.
        b (int): The base, b >= 2 (prime or composite).

    Returns:
        Valuation: Non-negative integer, INFINITY when z = 0.

    Raises:
        InvalidBaseError: If b < 2.

    .. code-block:: python

        >> valuation_int(GaussianInt(50, 25), 5)
        2
        >> valuation_int(GaussianInt(0, 0), 13)
        inf

    """
    z = GaussianInt.coerce(z)
    return min(valuation(z.re, b), valuation(z.im, b))


def valuation_fraction(q: Fraction, b: int) -> Valuation:
    """
    Returns the valuation of a rational number: v_b(numerator) - v_b(denominator).

    Raises:
        InvalidBaseError: If b < 2.

    """
    q = Fraction(q)
    _check_base(b)
    if q == 0:
        return INFINITY
    return valuation(q.numerator, b) - valuation(q.denominator, b)


def valuation_rat(q: ty.Union[GaussianRational, GaussianInt, int, Fraction], b: int) -> Valuation:
    """
    Returns the valuation of a Gaussian rational: valuation_int(num) - v_b(den).

    The congruence q = 0 mod b^t is defined as valuation_rat(q, b) >= t.

    Args:
        q: The valuated element, any value coercible to GaussianRational.
        b (int): The base, b >= 2.

    Returns:
        Valuation: Signed integer, INFINITY when q = 0.

    Raises:
        InvalidBaseError: If b < 2.

    """
    q = GaussianRational.coerce(q)
    _check_base(b)
    if q.is_zero():
        return INFINITY
    return valuation_int(q.num, b) - valuation(q.den, b)


def is_p_integral(q: GaussianRational, p: int) -> bool:
    """
    Checks that the canonical denominator of q is coprime to p.

    """
    return math.gcd(GaussianRational.coerce(q).den, p) == 1
