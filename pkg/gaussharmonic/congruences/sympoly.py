# -*- coding: utf-8 -*-
"""
This module contains exact sparse polynomials over Z[i] in the variables
m, n, p and the expansion of the 8-tuple of conjugate reciprocals

    T(m, n, k) = sum over the 8 forms f of 1/f^k,

whose forms are n+im, (p-n)+im, n+i(p-m), (p-n)+i(p-m) and the same
four with m and n swapped. The closed forms of the lowest p-degree
slices of the tuple numerator are verified by multiplying the claimed
factors out and comparing exactly.

Classes:
    - MPoly: The class describes a sparse polynomial in m, n, p over Z[i].
    - SliceMode: The p-degree predicate of truncate_pdeg.
    - TupleExpansion: The dataclass describes the expanded tuple T(m, n, k).

Functions:
    - mp_add: Returns the sum of two polynomials.
    - mp_mul: Returns the product of two polynomials.
    - mp_pow: Returns a power of a polynomial.
    - truncate_pdeg: Returns the terms selected by their p-degree.
    - min_pdeg: Returns the minimal p-degree of a polynomial.
    - linear_forms: Returns the 8 linear forms of the tuple.
    - expand_tuple: Returns numerator and denominator of T(m, n, k).
    - claimed_form: Returns the closed forms of the lowest slices for 1 <= k <= 5.
    - lowest_slice: Returns the lowest p-degree slice of the numerator and the p-free denominator.
    - verify_claimed_form: Checks the closed forms against the expansion.

Constants:
    - M, N, P: The variables m, n, p.

"""


from __future__ import annotations

import logging
import typing as ty
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from types import MappingProxyType

from gaussharmonic.tools.tools import config_manager, EmptyPolynomialError, LimitExceededError, MalformedSpecError
from gaussharmonic.tools.gint import GaussianInt, GaussianRational, I


__all__ = (
    'Exponents', 'MPoly', 'SliceMode', 'TupleExpansion', 'M', 'N', 'P',
    'mp_add', 'mp_mul', 'mp_pow', 'truncate_pdeg', 'min_pdeg',
    'linear_forms', 'expand_tuple', 'claimed_form', 'lowest_slice', 'verify_claimed_form',
)


logger = logging.getLogger(__name__)


Exponents = ty.Tuple[int, int, int]
_VARIABLES = ('m', 'n', 'p')


class MPoly:
    """
    The class describes a sparse polynomial in m, n, p over Z[i].

    The terms map exponent triples (deg_m, deg_n, deg_p) to nonzero
    Gaussian integer coefficients. Instances are immutable; integers
    and Gaussian integers are accepted as constant operands.

    Samples:

    .. code-block:: python

        >> print((M + N) * (M - N))
        m^2 - n^2
        >> print((M + I * N) * (M - I * N))
        m^2 + n^2
        >> print(GaussianInt(2, -2) * M ** 4 * P ** 3)
        (2-2i)m^4p^3

    """
    __slots__ = ('_terms',)

    def __init__(self, terms: ty.Optional[ty.Mapping[Exponents, ty.Union[GaussianInt, int]]] = None) -> None:
        self._terms = {}
        for exponents, coefficient in (terms or {}).items():
            coefficient = GaussianInt.coerce(coefficient)
            if coefficient:
                self._terms[tuple(exponents)] = coefficient

    @classmethod
    def constant(cls, value: ty.Union[GaussianInt, int]) -> MPoly:
        return cls({(0, 0, 0): value})

    @classmethod
    def variable(cls, name: str) -> MPoly:
        if name not in _VARIABLES:
            msg = f"Unknown variable '{name}', available: {', '.join(_VARIABLES)}."
            logger.error(msg)
            raise MalformedSpecError(msg)
        exponents = tuple(int(name == var) for var in _VARIABLES)
        return cls({exponents: 1})

    @classmethod
    def coerce(cls, value: ty.Any) -> MPoly:
        if isinstance(value, MPoly):
            return value
        if isinstance(value, (GaussianInt, int)):
            return cls.constant(value)
        return NotImplemented

    @property
    def terms(self) -> ty.Mapping[Exponents, GaussianInt]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def p_degrees(self) -> ty.Set[int]:
        return {exponents[2] for exponents in self._terms}

    def swap_mn(self) -> MPoly:
        """Returns the polynomial with the variables m and n exchanged."""
        return MPoly({(dn, dm, dp): c for (dm, dn, dp), c in self._terms.items()})

    def evaluate(self, m: int, n: int, p: int) -> GaussianInt:
        """
        Returns the exact value at the integer point (m, n, p).

        """
        total = GaussianInt()
        for (dm, dn, dp), coefficient in self._terms.items():
            total = total + coefficient * (m ** dm * n ** dn * p ** dp)
        return total

    def __add__(self, other: ty.Any) -> MPoly:
        other = MPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mp_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> MPoly:
        return MPoly({exponents: -c for exponents, c in self._terms.items()})

    def __sub__(self, other: ty.Any) -> MPoly:
        other = MPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mp_add(self, -other)

    def __rsub__(self, other: ty.Any) -> MPoly:
        other = MPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mp_add(other, -self)

    def __mul__(self, other: ty.Any) -> MPoly:
        other = MPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return mp_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> MPoly:
        return mp_pow(self, exponent)

    def __eq__(self, other: ty.Any) -> bool:
        other = MPoly.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None

    def __str__(self) -> str:
        if not self._terms:
            return '0'
        text = ''
        for exponents in sorted(self._terms, reverse=True):
            term = _format_term(self._terms[exponents], exponents)
            if not text:
                text = term
            elif term.startswith('-'):
                text += ' - ' + term[1:]
            else:
                text += ' + ' + term
        return text

    def __repr__(self) -> str:
        return f'MPoly({self})'


def _format_term(coefficient: GaussianInt, exponents: Exponents) -> str:
    monomial = ''.join(
        var if degree == 1 else f'{var}^{degree}'
        for var, degree in zip(_VARIABLES, exponents) if degree
    )
    if coefficient == 1:
        return monomial or '1'
    if coefficient == -1:
        return '-' + (monomial or '1')
    return f'({coefficient}){monomial}'


M = MPoly.variable('m')
N = MPoly.variable('n')
P = MPoly.variable('p')


##############
# Arithmetic #
##############

def mp_add(a: MPoly, b: MPoly) -> MPoly:
    """
    Returns a + b, zero coefficients dropped.

    """
    terms = dict(a.terms)
    for exponents, coefficient in b.terms.items():
        terms[exponents] = terms[exponents] + coefficient if exponents in terms else coefficient
    return MPoly(terms)


def mp_mul(a: MPoly, b: MPoly) -> MPoly:
    """
    Returns the exact product a * b.

    Exponent triples of term pairs are added componentwise and equal
    triples merged; the accumulation runs on plain integer pairs.

    """
    acc = {}
    right = [(exponents, c.re, c.im) for exponents, c in b.terms.items()]
    for (am, an, ap), c in a.terms.items():
        ar, ai = c.re, c.im
        for (bm, bn, bp), br, bi in right:
            key = (am + bm, an + bn, ap + bp)
            re, im = ar * br - ai * bi, ar * bi + ai * br
            if key in acc:
                old_re, old_im = acc[key]
                acc[key] = (old_re + re, old_im + im)
            else:
                acc[key] = (re, im)
    return MPoly({key: GaussianInt(re, im) for key, (re, im) in acc.items() if re or im})


def mp_pow(a: MPoly, e: int) -> MPoly:
    """
    Returns a^e by square-and-multiply, a^0 = 1.

    Raises:
        MalformedSpecError: If e < 0.

    """
    if e < 0:
        msg = f'Negative power {e} of a polynomial.'
        logger.error(msg)
        raise MalformedSpecError(msg)
    result, base = MPoly.constant(1), a
    while e:
        if e & 1:
            result = mp_mul(result, base)
        e >>= 1
        if e:
            base = mp_mul(base, base)
    return result


class SliceMode(str, Enum):
    """The p-degree predicate of truncate_pdeg."""
    EQUAL = 'equal'
    AT_MOST = 'at_most'


def truncate_pdeg(poly: MPoly, mode: ty.Union[SliceMode, str], d: ty.Union[int, float]) -> MPoly:
    """
    Returns the terms of the polynomial whose p-degree satisfies the predicate.

    Args:
        poly (MPoly): The source polynomial.
        mode (Union[SliceMode, str]): 'equal' keeps p-degree = d, 'at_most' keeps p-degree <= d.
        d (Union[int, float]): The p-degree bound, d >= 0 (math.inf keeps everything with 'at_most').

    Returns:
        MPoly: The selected terms.

    Raises:
        MalformedSpecError: If d < 0 or the mode is unknown.

    .. code-block:: python

        >> print(truncate_pdeg(M ** 2 + 3 * M * P + P ** 2, 'equal', 0))
        m^2

    """
    if d < 0:
        msg = f'p-degree bound must be >= 0, now {d}.'
        logger.error(msg)
        raise MalformedSpecError(msg)
    try:
        mode = SliceMode(mode)
    except ValueError:
        msg = f"Unknown slice mode '{mode}', available: {', '.join(item.value for item in SliceMode)}."
        logger.error(msg)
        raise MalformedSpecError(msg) from None

    if mode is SliceMode.EQUAL:
        selected = {e: c for e, c in poly.terms.items() if e[2] == d}
    else:
        selected = {e: c for e, c in poly.terms.items() if e[2] <= d}
    return MPoly(selected)


def min_pdeg(poly: MPoly) -> int:
    """
    Returns the minimal p-degree over all terms of the polynomial.

    Raises:
        EmptyPolynomialError: If the polynomial is zero.

    """
    if not poly:
        msg = 'Minimal p-degree of the zero polynomial.'
        logger.error(msg)
        raise EmptyPolynomialError(msg)
    return min(poly.p_degrees())


###################
# Tuple expansion #
###################

@dataclass(frozen=True)
class TupleExpansion:
    """
    The dataclass describes the expanded tuple T(m, n, k) = numerator / denominator.

    Attributes:
        k (int): The power.
        linear_forms (Tuple[MPoly, ...]): The 8 linear forms.
        numerator (MPoly): Sum over j of the product of all powered forms except the j-th.
        denominator (MPoly): Product of all powered forms.

    """
    k: int
    linear_forms: ty.Tuple[MPoly, ...]
    numerator: MPoly
    denominator: MPoly

    def value_at(self, m: int, n: int, p: int) -> GaussianRational:
        """
        Returns numerator / denominator at the integer point (m, n, p).

        """
        return GaussianRational(self.numerator.evaluate(m, n, p)) / self.denominator.evaluate(m, n, p)


def linear_forms() -> ty.Tuple[MPoly, ...]:
    """
    Returns the 8 linear forms of the tuple in their fixed order.

    """
    return (
        N + I * M,
        (P - N) + I * M,
        N + I * (P - M),
        (P - N) + I * (P - M),
        M + I * N,
        (P - M) + I * N,
        M + I * (P - N),
        (P - M) + I * (P - N),
    )


@lru_cache(maxsize=None)
def _expand(k: int) -> TupleExpansion:
    forms = linear_forms()
    powered = [mp_pow(form, k) for form in forms]

    prefix = [MPoly.constant(1)]
    for form in powered:
        prefix.append(mp_mul(prefix[-1], form))
    suffix = [MPoly.constant(1)]
    for form in reversed(powered):
        suffix.append(mp_mul(form, suffix[-1]))
    suffix.reverse()

    numerator = MPoly()
    for j in range(len(powered)):
        numerator = mp_add(numerator, mp_mul(prefix[j], suffix[j + 1]))

    logger.info(f'T(m, n, {k}) expanded: {len(numerator)} numerator and {len(prefix[-1])} denominator terms.')
    return TupleExpansion(k, forms, numerator, prefix[-1])


def expand_tuple(k: int) -> TupleExpansion:
    """
    Returns numerator and denominator of T(m, n, k).

    The numerator is built from prefix and suffix partial products of
    the powered forms, so the 8 products of 7 factors take linear passes.

    Args:
        k (int): The power, 1 <= k <= TUPLE_K_LIMIT.

    Returns:
        TupleExpansion: The forms, the numerator and the denominator.

    Raises:
        MalformedSpecError: If k < 1.
        LimitExceededError: If k exceeds TUPLE_K_LIMIT.

    .. code-block:: python

        >> print(truncate_pdeg(expand_tuple(1).denominator, 'equal', 0))
        m^8 + (4)m^6n^2 + (6)m^4n^4 + (4)m^2n^6 + n^8

    """
    if k < 1:
        msg = f'Tuple power must be >= 1, now {k}.'
        logger.error(msg)
        raise MalformedSpecError(msg)
    limit = config_manager('TUPLE_K_LIMIT')
    if k > limit:
        msg = f'Tuple power {k} exceeds the expansion limit {limit}.'
        logger.error(msg)
        raise LimitExceededError(msg)
    return _expand(k)


################
# Closed forms #
################

def claimed_form(k: int) -> ty.Tuple[MPoly, MPoly]:
    """
    Returns the closed forms of the lowest numerator slice and the p-free denominator slice.

    With s = m^2+n^2 and a = (m^2-2mn-n^2)(m^2+2mn-n^2) = m^4-6m^2n^2+n^4:

    - k = 1: (2-2i) p^3 a over s^4;
    - k = 2: 12i p^2 s^4 a over s^8;
    - k = 3: (-12-12i) p s^8 a over s^12;
    - k = 4: 8 s^12 a over s^16;
    - k = 5: (70-70i) p^3 q q' s^12 over s^20, with
      q, q' = m^4 -+ 4m^3n - 6m^2n^2 +- 4mn^3 + n^4.

    Raises:
        MalformedSpecError: If k is outside 1..5.

    """
    s = M ** 2 + N ** 2
    a = (M ** 2 - 2 * M * N - N ** 2) * (M ** 2 + 2 * M * N - N ** 2)
    if k == 1:
        numerator = GaussianInt(2, -2) * P ** 3 * a
    elif k == 2:
        numerator = 12 * I * P ** 2 * s ** 4 * a
    elif k == 3:
        numerator = GaussianInt(-12, -12) * P * s ** 8 * a
    elif k == 4:
        numerator = 8 * s ** 12 * a
    elif k == 5:
        q = M ** 4 - 4 * M ** 3 * N - 6 * M ** 2 * N ** 2 + 4 * M * N ** 3 + N ** 4
        q_conj = M ** 4 + 4 * M ** 3 * N - 6 * M ** 2 * N ** 2 - 4 * M * N ** 3 + N ** 4
        numerator = GaussianInt(70, -70) * P ** 3 * q * q_conj * s ** 12
    else:
        msg = f'Closed forms are known for 1 <= k <= 5, now k = {k}.'
        logger.error(msg)
        raise MalformedSpecError(msg)
    return numerator, s ** (4 * k)


def lowest_slice(k: int) -> ty.Tuple[int, MPoly, MPoly]:
    """
    Returns the lowest p-degree slice of the tuple numerator and the p-free denominator slice.

    Returns:
        Tuple[int, MPoly, MPoly]: The minimal p-degree d of the numerator,
        the numerator terms of p-degree d and the denominator terms of p-degree 0.

    """
    expansion = expand_tuple(k)
    d = min_pdeg(expansion.numerator)
    return (d,
            truncate_pdeg(expansion.numerator, SliceMode.EQUAL, d),
            truncate_pdeg(expansion.denominator, SliceMode.EQUAL, 0))


def verify_claimed_form(k: int) -> bool:
    """
    Checks the closed forms of claimed_form(k) against the expansion of T(m, n, k).

    """
    claimed_numerator, claimed_denominator = claimed_form(k)
    _, numerator, denominator = lowest_slice(k)
    verified = numerator == claimed_numerator and denominator == claimed_denominator
    if not verified:
        logger.warning(f'Closed form of T(m, n, {k}) does not match the expansion.')
    return verified
