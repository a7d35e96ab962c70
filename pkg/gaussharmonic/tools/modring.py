# -*- coding: utf-8 -*-
"""
This module contains the arithmetic of the finite ring Z[i]/b^M
(b a rational integer >= 2, M >= 1).

Classes:
    - Modulus: The class describes the modulus b^M.
    - ModGaussian: The class describes a residue of Z[i]/b^M.

Functions:
    - reduce: Reduces a Gaussian integer or a Gaussian rational into Z[i]/b^M.
    - mg_inverse: Returns the inverse of a residue with norm coprime to the base.
    - mg_pow: Returns a power of a residue by square-and-multiply.
    - residue_valuation: Returns the observed exponent of a residue.

"""


from __future__ import annotations

import logging
import math
import typing as ty
from dataclasses import dataclass, field

import gmpy2

from gaussharmonic.tools.tools import InvalidBaseError, MalformedSpecError, NotInvertibleError
from gaussharmonic.tools.gint import GaussianInt, GaussianRational, valuation


__all__ = ('Modulus', 'ModGaussian', 'reduce', 'mg_inverse', 'mg_pow', 'residue_valuation')


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Modulus:
    """
    The class describes the modulus b^M.

    Args:
        base (int): The rational integer base b >= 2.
        exponent (int): The precision M >= 1.

    Attributes:
        modulus (int): b^M, computed on creation.

    Raises:
        InvalidBaseError: If base < 2.
        MalformedSpecError: If exponent < 1.

    """
    base: int
    exponent: int
    modulus: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.base < 2:
            msg = f'Modulus base must be >= 2, now {self.base}.'
            logger.error(msg)
            raise InvalidBaseError(msg)
        if self.exponent < 1:
            msg = f'Modulus exponent must be >= 1, now {self.exponent}.'
            logger.error(msg)
            raise MalformedSpecError(msg)
        object.__setattr__(self, 'modulus', self.base ** self.exponent)

    def __str__(self) -> str:
        return f'{self.base}^{self.exponent}'


class ModGaussian:
    """
    The class describes a residue re+im*i of Z[i]/b^M.

    Components are always reduced into [0, modulus). Instances are
    immutable; arithmetic is allowed only between residues of the
    same modulus, integers are coerced.

    Samples:

    .. code-block:: python

        >> mod = Modulus(5, 4)
        >> ModGaussian(1, 1, mod) ** 4
        ModGaussian(621, 0, 5^4)

    """
    __slots__ = ('_re', '_im', '_modulus')

    def __init__(self, re: int, im: int, modulus: Modulus) -> None:
        self._re = int(re) % modulus.modulus
        self._im = int(im) % modulus.modulus
        self._modulus = modulus

    @property
    def re(self) -> int:
        return self._re

    @property
    def im(self) -> int:
        return self._im

    @property
    def modulus(self) -> Modulus:
        return self._modulus

    @classmethod
    def one(cls, modulus: Modulus) -> ModGaussian:
        return cls(1, 0, modulus)

    @classmethod
    def zero(cls, modulus: Modulus) -> ModGaussian:
        return cls(0, 0, modulus)

    def lift(self) -> GaussianInt:
        """Returns the minimal non-negative lift to Z[i]."""
        return GaussianInt(self._re, self._im)

    def signed(self) -> ty.Tuple[int, int]:
        """Returns the components lifted to the symmetric range (-b^M/2, b^M/2]."""
        half = self._modulus.modulus // 2
        re = self._re - self._modulus.modulus if self._re > half else self._re
        im = self._im - self._modulus.modulus if self._im > half else self._im
        return re, im

    def norm(self) -> int:
        return (self._re * self._re + self._im * self._im) % self._modulus.modulus

    def conjugate(self) -> ModGaussian:
        return ModGaussian(self._re, -self._im, self._modulus)

    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def _coerce(self, other: ty.Any) -> ModGaussian:
        if isinstance(other, ModGaussian):
            if other._modulus != self._modulus:
                msg = f'Residues of different moduli: {self._modulus} and {other._modulus}.'
                logger.error(msg)
                raise MalformedSpecError(msg)
            return other
        if isinstance(other, (GaussianInt, int)):
            return reduce(other, self._modulus)
        return NotImplemented

    def __add__(self, other: ty.Any) -> ModGaussian:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ModGaussian(self._re + other._re, self._im + other._im, self._modulus)

    __radd__ = __add__

    def __sub__(self, other: ty.Any) -> ModGaussian:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ModGaussian(self._re - other._re, self._im - other._im, self._modulus)

    def __rsub__(self, other: ty.Any) -> ModGaussian:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __neg__(self) -> ModGaussian:
        return ModGaussian(-self._re, -self._im, self._modulus)

    def __mul__(self, other: ty.Any) -> ModGaussian:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self._re, self._im, other._re, other._im
        return ModGaussian(a * c - b * d, a * d + b * c, self._modulus)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> ModGaussian:
        return mg_pow(self, exponent)

    def __eq__(self, other: ty.Any) -> bool:
        if isinstance(other, (GaussianInt, int)):
            other = reduce(other, self._modulus)
        if isinstance(other, ModGaussian):
            return (self._modulus == other._modulus
                    and self._re == other._re and self._im == other._im)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._re, self._im, self._modulus))

    def __getstate__(self) -> ty.Tuple[int, int, Modulus]:
        return self._re, self._im, self._modulus

    def __setstate__(self, state: ty.Tuple[int, int, Modulus]) -> None:
        self._re, self._im, self._modulus = state

    def __str__(self) -> str:
        return str(self.lift())

    def __repr__(self) -> str:
        return f'ModGaussian({self._re}, {self._im}, {self._modulus})'


def reduce(value: ty.Union[GaussianInt, GaussianRational, int], modulus: Modulus) -> ModGaussian:
    """
    Reduces a Gaussian integer or a Gaussian rational into Z[i]/b^M.

    A Gaussian rational is reduced as num * inv(den), which requires
    the canonical denominator to be coprime to the base.

    Args:
        value (Union[GaussianInt, GaussianRational, int]): The reduced value.
        modulus (Modulus): The target modulus.

    Returns:
        ModGaussian: The residue.

    Raises:
        NotInvertibleError: If the denominator of a Gaussian rational shares a factor with the base.

    """
    if isinstance(value, GaussianRational):
        if math.gcd(value.den, modulus.base) != 1:
            msg = f'Denominator {value.den} is not invertible modulo {modulus}.'
            logger.error(msg)
            raise NotInvertibleError(msg)
        inv = int(gmpy2.invert(value.den, modulus.modulus))
        return ModGaussian(value.num.re * inv, value.num.im * inv, modulus)
    value = GaussianInt.coerce(value)
    return ModGaussian(value.re, value.im, modulus)


def mg_inverse(x: ModGaussian) -> ModGaussian:
    """
    Returns the inverse of a residue with norm coprime to the base.

    The inverse is conj(x) * inv(norm(x)), a single integer modular
    inverse modulo b^M.

    Args:
        x (ModGaussian): The inverted residue.

    Returns:
        ModGaussian: The residue y with x * y = 1.

    Raises:
        NotInvertibleError: If the norm of x shares a factor with the base.

    .. code-block:: python

        >> mg_inverse(ModGaussian(1, 1, Modulus(3, 1)))
        ModGaussian(2, 1, 3^1)
        >> mg_inverse(ModGaussian(1, 2, Modulus(5, 1)))
        NotInvertibleError: Residue 1+2i with norm 0 is not invertible modulo 5^1.

    """
    modulus = x.modulus
    norm = x.norm()
    if math.gcd(norm, modulus.base) != 1:
        msg = f'Residue {x} with norm {norm} is not invertible modulo {modulus}.'
        logger.error(msg)
        raise NotInvertibleError(msg)
    inv = int(gmpy2.invert(norm, modulus.modulus))
    return ModGaussian(x.re * inv, -x.im * inv, modulus)


def mg_pow(x: ModGaussian, e: int) -> ModGaussian:
    """
    Returns x^e by square-and-multiply, x^0 = 1.

    Raises:
        MalformedSpecError: If e < 0.

    """
    if e < 0:
        msg = f'Negative exponent {e}, invert the residue with mg_inverse first.'
        logger.error(msg)
        raise MalformedSpecError(msg)
    result, base = ModGaussian.one(x.modulus), x
    while e:
        if e & 1:
            result = result * base
        base = base * base
        e >>= 1
    return result


def residue_valuation(x: ModGaussian) -> ty.Tuple[int, bool]:
    """
    Returns the observed exponent of a residue.

    Args:
        x (ModGaussian): The residue modulo b^M.

    Returns:
        Tuple[int, bool]: The largest t <= M with b^t dividing both components
        and the saturation flag t = M, in which case the true valuation is only
        bounded below by M.

    .. code-block:: python

        >> mod = Modulus(7, 6)
        >> residue_valuation(ModGaussian(0, 0, mod))
        (6, True)
        >> residue_valuation(ModGaussian(343, 343, mod))
        (3, False)

    """
    exponent = x.modulus.exponent
    t = min(valuation(x.re, x.modulus.base), valuation(x.im, x.modulus.base), exponent)
    t = int(t)
    return t, t == exponent
