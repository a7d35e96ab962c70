# -*- coding: utf-8 -*-
"""
This module contains the polynomial analogues of the congruences:
the polynomial g_p(x), the product of (x - (n+mi)) over the summed pairs,
its low-order coefficients modulo p^M, the Gaussian binomial coefficients
and the product and Lucas-type congruences built on them.

Classes:
    - UPolyMod: The class describes a univariate polynomial over Z[i]/b^M.
    - PatternReport: The dataclass describes the pattern check of g_p mod p.
    - GaussBinomSpec: The dataclass describes the Gaussian binomial coefficient parameters.
    - LucasReport: The dataclass describes the Lucas-type comparison of two binomials.

Functions:
    - gpoly_mod_p: Returns g_p(x) with coefficients modulo p.
    - gpoly_pattern_check: Returns the pattern report of g_p mod p.
    - gpoly_low_coeffs: Returns the lowest coefficients of g_p(x) modulo p^M.
    - low_coeff_valuations: Returns the observed exponents of a_(r-1), ..., a_(r-4).
    - vieta_check: Checks -a_(r-1)/a_r against the reciprocal sum S_p^(1).
    - gauss_binom: Returns the Gaussian binomial coefficient.
    - shifted_product_check: Checks the shifted product congruence modulo p^5.
    - central_binom_check: Checks the central Gaussian binomial congruence modulo p^5.
    - lucas_check: Returns the Lucas-type comparison report.

"""


from __future__ import annotations

import logging
import typing as ty
from dataclasses import dataclass, field

import numpy as np

from gaussharmonic.tools.tools import (
    Validator, config_manager, LimitExceededError, MalformedSpecError, NotPIntegralError,
)
from gaussharmonic.tools.gint import GaussianInt, GaussianRational, Valuation, is_p_integral, valuation_rat
from gaussharmonic.tools.modring import Modulus, ModGaussian, mg_inverse, residue_valuation
from gaussharmonic.congruences.sums import SumSpec, included_pairs, sum_modular, term_count, require_prime


__all__ = (
    'UPolyMod', 'PatternReport', 'GaussBinomSpec', 'LucasReport',
    'gpoly_mod_p', 'gpoly_pattern_check', 'gpoly_low_coeffs', 'low_coeff_valuations', 'vieta_check',
    'gauss_binom', 'shifted_product_check', 'central_binom_check', 'lucas_check',
)


logger = logging.getLogger(__name__)


###############
# Polynomials #
###############

@dataclass(frozen=True)
class UPolyMod:
    """
    The class describes a univariate polynomial over Z[i]/b^M.

    Coefficient index equals the degree in x; trailing zero coefficients
    are stripped on creation, so the leading coefficient is nonzero
    unless the polynomial is zero.

    Attributes:
        coefficients (Tuple[ModGaussian, ...]): The coefficients, lowest degree first.
        modulus (Modulus): The coefficient modulus.

    """
    coefficients: ty.Tuple[ModGaussian, ...]
    modulus: Modulus

    def __post_init__(self) -> None:
        coefficients = list(self.coefficients)
        while coefficients and coefficients[-1].is_zero():
            coefficients.pop()
        object.__setattr__(self, 'coefficients', tuple(coefficients))

    @property
    def degree(self) -> int:
        """The degree, -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def evaluate(self, x: ty.Union[ModGaussian, GaussianInt, int]) -> ModGaussian:
        """
        Returns the value at x by Horner's rule.

        """
        result = ModGaussian.zero(self.modulus)
        for coefficient in reversed(self.coefficients):
            result = result * x + coefficient
        return result

    def signed_coefficients(self) -> ty.Dict[int, ty.Tuple[int, int]]:
        """
        Returns the nonzero coefficients as exponent -> (re, im) in the symmetric range.

        """
        return {e: c.signed() for e, c in enumerate(self.coefficients) if not c.is_zero()}

    def __str__(self) -> str:
        """
        Renders the polynomial in descending powers of x with signed residues.

        .. code-block:: python

            >> print(gpoly_mod_p(11))
            x^100 + x^80 + x^60 + x^40 + x^20 + 1

        """
        signed = self.signed_coefficients()
        if not signed:
            return '0'
        text = ''
        for e in sorted(signed, reverse=True):
            negative, term = _format_term(signed[e], e)
            if not text:
                text = '-' + term if negative else term
            else:
                text += (' - ' if negative else ' + ') + term
        return text


def _format_term(coefficient: ty.Tuple[int, int], e: int) -> ty.Tuple[bool, str]:
    re, im = coefficient
    monomial = '' if e == 0 else ('x' if e == 1 else f'x^{e}')
    if im:
        return False, f'({GaussianInt(re, im)}){monomial}'
    value = abs(re)
    if value == 1 and monomial:
        return re < 0, monomial
    return re < 0, f'{value}{monomial}'


def _check_gpoly_prime(p: int) -> None:
    require_prime(p)
    limit = config_manager('GPOLY_P_LIMIT')
    if p > limit:
        msg = f'g_p requested for p = {p} above the limit {limit}.'
        logger.error(msg)
        raise LimitExceededError(msg)


def gpoly_mod_p(p: int) -> UPolyMod:
    """
    Returns g_p(x) = product of (x - (n+mi)) over the summed pairs, coefficients modulo p.

    The coefficients are kept in dense numpy arrays of real and imaginary
    parts; each linear factor is multiplied in O(degree).

    Args:
        p (int): Odd prime, p <= GPOLY_P_LIMIT.

    Returns:
        UPolyMod: The polynomial of degree term_count(p) over Z[i]/p.

    Raises:
        MalformedSpecError: If p is not an odd prime.
        LimitExceededError: If p exceeds GPOLY_P_LIMIT.

    """
    _check_gpoly_prime(p)
    degree = term_count(p)
    re = np.zeros(degree + 1, dtype=np.int64)
    im = np.zeros(degree + 1, dtype=np.int64)
    re[0] = 1

    for n, m in included_pairs(p):
        shifted_re = np.concatenate(([0], re[:-1]))
        shifted_im = np.concatenate(([0], im[:-1]))
        re, im = (shifted_re - n * re + m * im) % p, (shifted_im - n * im - m * re) % p

    modulus = Modulus(p, 1)
    logger.info(f'g_{p} computed, degree {degree}.')
    return UPolyMod(tuple(ModGaussian(int(a), int(b), modulus) for a, b in zip(re, im)), modulus)


@dataclass(frozen=True)
class PatternReport:
    """
    The dataclass describes the pattern check of g_p mod p.

    For p = 3 mod 4 the pattern is g_p = 1 + x^(2(p-1)) + ... + x^((p-1)^2);
    for p = 1 mod 4 the support lies on multiples of p-1 up to x^((p-1)(p-3)).

    Attributes:
        p (int): The prime.
        degree (int): The actual degree, the number of summed pairs.
        nominal_degree (int): (p-1)^2.
        holds (bool): Whether the pattern holds.
        real_coefficients (bool): Whether all coefficients are rational residues.
        support (Tuple[int, ...]): Exponents with nonzero coefficients, descending.
        coefficients (Tuple[int, ...]): Signed coefficients at x^(j(p-1)), highest first.

    """
    p: int
    degree: int
    nominal_degree: int
    holds: bool
    real_coefficients: bool
    support: ty.Tuple[int, ...]
    coefficients: ty.Tuple[int, ...]

    @property
    def degree_discrepancy(self) -> bool:
        return self.degree != self.nominal_degree

    def to_dict(self) -> ty.Dict[str, ty.Any]:
        return {
            'p': self.p,
            'degree': self.degree,
            'nominal_degree': self.nominal_degree,
            'degree_discrepancy': self.degree_discrepancy,
            'holds': self.holds,
            'real_coefficients': self.real_coefficients,
            'coefficients': list(self.coefficients),
        }


def gpoly_pattern_check(p: int, poly: ty.Optional[UPolyMod] = None) -> PatternReport:
    """
    Returns the pattern report of g_p mod p; a failed pattern is reported, never raised.

    An already computed g_p may be passed as poly.

    .. code-block:: python

        >> gpoly_pattern_check(17).coefficients
        (1, 3, 6, -7, -2, 4, -6, 2, -6, 4, -2, -7, 6, 3, 1)

    """
    require_prime(p, minimum=7)
    poly = gpoly_mod_p(p) if poly is None else poly
    signed = poly.signed_coefficients()
    step = p - 1
    real = all(im == 0 for _, im in signed.values())

    if p % 4 == 3:
        expected = {2 * step * j: (1, 0) for j in range(step // 2 + 1)}
        holds = signed == expected
    else:
        holds = real and poly.degree == step * (p - 3) and all(e % step == 0 for e in signed)

    nominal = step * step
    if poly.degree != nominal:
        logger.warning(f'g_{p} has degree {poly.degree}, not the nominal (p-1)^2 = {nominal}.')
    if not holds:
        logger.warning(f'g_{p} does not follow the pattern: {poly}.')

    return PatternReport(
        p=p,
        degree=poly.degree,
        nominal_degree=nominal,
        holds=holds,
        real_coefficients=real,
        support=tuple(sorted(signed, reverse=True)),
        coefficients=tuple(signed.get(e, (0, 0))[0] for e in range(poly.degree - poly.degree % step, -1, -step)),
    )


def gpoly_low_coeffs(p: int, count: int = 5, M: int = 5) -> ty.List[ModGaussian]:
    """
    Returns the lowest coefficients of g_p(x) modulo p^M.

    The linear factors are multiplied as power series truncated to degree
    count-1, so the cost is linear in the number of factors.

    Args:
        p (int): Odd prime.
        count (int, optional): Number of coefficients, count >= 5. Defaults to 5.
        M (int, optional): The precision, M >= 5. Defaults to 5.

    Returns:
        List[ModGaussian]: Item j is the coefficient of x^j, that is a_(r-j);
        item 0 is a_r = product of (-(n+mi)).

    Raises:
        MalformedSpecError: If count < 5 or M < 5.

    """
    require_prime(p)
    if count < 5 or M < 5:
        msg = f'Low coefficients need count >= 5 and M >= 5, now count = {count}, M = {M}.'
        logger.error(msg)
        raise MalformedSpecError(msg)

    modulus = Modulus(p, M)
    mod = modulus.modulus
    re = [1] + [0] * (count - 1)
    im = [0] * count
    for n, m in included_pairs(p):
        for j in range(count - 1, 0, -1):
            re[j], im[j] = (re[j - 1] - n * re[j] + m * im[j]) % mod, (im[j - 1] - n * im[j] - m * re[j]) % mod
        re[0], im[0] = (-n * re[0] + m * im[0]) % mod, (-n * im[0] - m * re[0]) % mod

    return [ModGaussian(a, b, modulus) for a, b in zip(re, im)]


def low_coeff_valuations(p: int, M: int = 5) -> ty.Tuple[int, ...]:
    """
    Returns the observed exponents of a_(r-1), ..., a_(r-4) modulo p^M.

    The exponents are at least 4, 3, 2, 1 for p > 5.

    """
    coefficients = gpoly_low_coeffs(p, 5, M)
    return tuple(residue_valuation(coefficients[k])[0] for k in range(1, 5))


def vieta_check(p: int, M: int = 5) -> bool:
    """
    Checks that -a_(r-1)/a_r equals S_p^(1) modulo p^M.

    """
    coefficients = gpoly_low_coeffs(p, 5, M)
    return -coefficients[1] * mg_inverse(coefficients[0]) == sum_modular(SumSpec(p, 1, M))


########################
# Gaussian binomials  #
########################

@dataclass
class GaussBinomSpec:
    # noinspection PyUnresolvedReferences
    """
    The dataclass describes the Gaussian binomial coefficient [A+Bi over C+Di].

    Args:
        A, B, C, D (int): Positive integers with A >= C and B >= D.

    Raises:
        MalformedSpecError: If a field is not positive or A < C or B < D.

    """
    A: int = Validator(minimum=1)
    B: int = Validator(minimum=1)
    C: int = Validator(minimum=1)
    D: int = Validator(minimum=1)

    def __post_init__(self) -> None:
        if self.A < self.C or self.B < self.D:
            msg = f'Gaussian binomial needs A >= C and B >= D, now {self.A}+{self.B}i over {self.C}+{self.D}i.'
            logger.error(msg)
            raise MalformedSpecError(msg)

    def __str__(self) -> str:
        return f'[{GaussianInt(self.A, self.B)} | {GaussianInt(self.C, self.D)}]'


def gauss_binom(spec: GaussBinomSpec) -> GaussianRational:
    """
    Returns the Gaussian binomial coefficient.

    The numerator is the product of (A+Bi - (n+mi)) over 0 <= n < C,
    0 <= m < D; the denominator is the product of (n+mi) over
    1 <= n <= C, 1 <= m <= D. The value is a Gaussian integer only
    in special cases.

    .. code-block:: python

        >> print(gauss_binom(GaussBinomSpec(2, 2, 1, 1)))
        2
        >> print(gauss_binom(GaussBinomSpec(3, 3, 2, 2)))
        39/5

    """
    numerator, denominator = GaussianInt(1), GaussianInt(1)
    for n in range(spec.C):
        for m in range(spec.D):
            numerator = numerator * GaussianInt(spec.A - n, spec.B - m)
    for n in range(1, spec.C + 1):
        for m in range(1, spec.D + 1):
            denominator = denominator * GaussianInt(n, m)
    return GaussianRational(numerator) / denominator


def shifted_product_check(p: int, A: int, B: int) -> bool:
    """
    Checks that the product of (pA + pBi - (n+mi)) equals the product of (n+mi) modulo p^5.

    Both products run over the summed pairs. The congruence is proved for
    p > 5; smaller primes are computed and reported the same way.

    """
    require_prime(p)
    if p <= 5:
        logger.info(f'p = {p} is below the proved range p > 5, the outcome is recorded as data.')
    modulus = Modulus(p, 5)
    shifted, plain = ModGaussian.one(modulus), ModGaussian.one(modulus)
    for n, m in included_pairs(p):
        shifted = shifted * GaussianInt(p * A - n, p * B - m)
        plain = plain * GaussianInt(n, m)
    return shifted == plain


def central_binom_check(p: int, A: int, B: int) -> bool:
    """
    Checks that [pA-1 + (pB-1)i over (p-1) + (p-1)i] = 1 modulo p^5.

    Raises:
        MalformedSpecError: If p is not a prime p = 3 mod 4, p > 3.
        NotPIntegralError: If the binomial is not p-integral.

    """
    require_prime(p, minimum=7)
    if p % 4 != 3:
        msg = f'Central binomial congruence needs p = 3 mod 4, now p = {p}.'
        logger.error(msg)
        raise MalformedSpecError(msg)
    binom = gauss_binom(GaussBinomSpec(p * A - 1, p * B - 1, p - 1, p - 1))
    if not is_p_integral(binom, p):
        msg = f'Binomial {binom} is not {p}-integral.'
        logger.error(msg)
        raise NotPIntegralError(msg)
    return valuation_rat(binom - 1, p) >= 5


@dataclass(frozen=True)
class LucasReport:
    """
    The dataclass describes the comparison of [pA+pBi over pC+pDi] with [A+Bi over C+Di] at p.

    The difference valuation is reported only when both sides are p-integral.

    """
    p: int
    spec: GaussBinomSpec
    lhs: GaussianRational = field(repr=False)
    rhs: GaussianRational = field(repr=False)
    lhs_integral: bool
    rhs_integral: bool
    difference_valuation: ty.Optional[Valuation]

    @property
    def holds(self) -> ty.Optional[bool]:
        if self.difference_valuation is None:
            return None
        return self.difference_valuation >= 3

    def to_dict(self) -> ty.Dict[str, ty.Any]:
        valuation = self.difference_valuation
        return {
            'p': self.p,
            'A': self.spec.A, 'B': self.spec.B, 'C': self.spec.C, 'D': self.spec.D,
            'lhs': str(self.lhs),
            'rhs': str(self.rhs),
            'lhs_integral': self.lhs_integral,
            'rhs_integral': self.rhs_integral,
            'difference_valuation': None if valuation is None else str(valuation),
            'holds': self.holds,
        }


def lucas_check(p: int, A: int, B: int, C: int, D: int) -> LucasReport:
    """
    Returns the Lucas-type comparison report; every outcome is data.

    """
    require_prime(p, minimum=2)
    spec = GaussBinomSpec(A, B, C, D)
    lhs = gauss_binom(GaussBinomSpec(p * spec.A, p * spec.B, p * spec.C, p * spec.D))
    rhs = gauss_binom(spec)
    lhs_integral, rhs_integral = is_p_integral(lhs, p), is_p_integral(rhs, p)

    difference = valuation_rat(lhs - rhs, p) if lhs_integral and rhs_integral else None
    if difference is None:
        logger.warning(f'Binomials for p = {p}, {spec} are not {p}-integral, no congruence is defined.')
    return LucasReport(p, spec, lhs, rhs, lhs_integral, rhs_integral, difference)
