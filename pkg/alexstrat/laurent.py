#!/usr/bin/python
# coding=UTF-8
#
# Alexstrat: Alexander stratifications of finitely presented groups
# Copyright (C) 2026
# All rights reserved.
#
# This code is distributed under the terms of the GNU General Public
# License, Version 3. See the text file "COPYING" for further details
# about the terms of this license.
#
"""Sparse multivariate Laurent polynomials.

Coefficients are integers in the ring Z[t_1^{+-1}, ..., t_r^{+-1}];
rationals and cyclotomic numbers are accepted too, which is what the
binomial-factor search divides with.
"""
from fractions import Fraction
import logging
from numbers import Rational

from alexstrat.const import VARIABLE_PREFIX
from alexstrat.cyclotomic import (
    CyclotomicNumber,
    cyclotomic_field,
)
from alexstrat.utils import InputError


def _display_key(exponents):
    # Graded: total degree first, then the earlier variables first.
    return (sum(exponents), tuple(-e for e in exponents))


def _leading_key(exponents):
    return (sum(exponents), exponents)


def variable_names(generator_names):
    """Variable names t_<name> for a list of generator names."""
    return [f"{VARIABLE_PREFIX}{name}" for name in generator_names]


def _format_monomial(exponents, variables):
    factors = []
    for name, power in zip(variables, exponents):
        if power == 1:
            factors.append(name)
        elif power:
            factors.append(f"{name}^{power}")
    return '*'.join(factors)


def _tidy(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


class LaurentPoly:
    """Canonical sparse map exponent vector -> nonzero coefficient."""

    __slots__ = ('_rank', '_terms')

    def __init__(self, rank, terms=None):
        """Drop zero coefficients and merge repeated exponent vectors."""
        clean = {}
        for exponents, coefficient in (terms or {}).items():
            exponents = tuple(int(e) for e in exponents)
            if len(exponents) != rank:
                raise InputError(f"exponent vector {exponents} does not "
                                 f"have length {rank}")
            total = clean.get(exponents, 0) + coefficient
            if total:
                clean[exponents] = _tidy(total)
            else:
                clean.pop(exponents, None)
        self._rank = rank
        self._terms = clean

    @classmethod
    def constant(cls, rank, value):
        """The constant polynomial value."""
        return cls(rank, {(0,) * rank: value})

    @classmethod
    def monomial(cls, exponents, coefficient=1):
        """coefficient * t^exponents."""
        return cls(len(exponents), {tuple(exponents): coefficient})

    @classmethod
    def variable(cls, index, rank):
        """t_index with a 1-based index."""
        exponents = [0] * rank
        exponents[index - 1] = 1
        return cls.monomial(exponents)

    @classmethod
    def from_terms(cls, rank, pairs):
        """Build from (exponent vector, coefficient) pairs."""
        return cls(rank, {tuple(exponents): coefficient
                          for exponents, coefficient in pairs})

    @property
    def rank(self):
        """Number of variables."""
        return self._rank

    @property
    def terms(self):
        """Copy of the term map."""
        return dict(self._terms)

    def support(self):
        """Exponent vectors with nonzero coefficient, display order."""
        return sorted(self._terms, key=_display_key)

    def support_variables(self):
        """1-based indices of variables with some nonzero exponent."""
        return sorted({i + 1 for exponents in self._terms
                       for i, e in enumerate(exponents) if e})

    def is_zero(self):
        """True for the zero polynomial."""
        return not self._terms

    def is_monomial(self):
        """True for a single term (a unit up to its coefficient)."""
        return len(self._terms) == 1

    def leading_term(self):
        """(exponents, coefficient) largest in graded lexicographic order."""
        exponents = max(self._terms, key=_leading_key)
        return exponents, self._terms[exponents]

    def _check_rank(self, other):
        if self._rank != other.rank:
            raise InputError(f"rank mismatch: {self._rank} != {other.rank}")

    def _lift(self, other):
        if isinstance(other, LaurentPoly):
            self._check_rank(other)
            return other
        if isinstance(other, (Rational, CyclotomicNumber)):
            return LaurentPoly.constant(self._rank, other)
        return None

    def __add__(self, other):
        """Ring addition."""
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for exponents, coefficient in other.terms.items():
            terms[exponents] = terms.get(exponents, 0) + coefficient
        return LaurentPoly(self._rank, terms)

    __radd__ = __add__

    def __neg__(self):
        """Additive inverse."""
        return LaurentPoly(self._rank, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        """Ring subtraction."""
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        """Subtraction with a scalar on the left."""
        return (-self) + other

    def __mul__(self, other):
        """Ring multiplication."""
        other = self._lift(other)
        if other is None:
            return NotImplemented
        terms = {}
        for left, a in self._terms.items():
            for right, b in other.terms.items():
                exponents = tuple(x + y for x, y in zip(left, right))
                terms[exponents] = terms.get(exponents, 0) + a * b
        return LaurentPoly(self._rank, terms)

    __rmul__ = __mul__

    def shift(self, exponents):
        """Multiply by the monomial t^exponents."""
        return LaurentPoly(self._rank, {
            tuple(x + y for x, y in zip(e, exponents)): c
            for e, c in self._terms.items()})

    def substitute_monomials(self, images, rank):
        """
        Substitute t_i -> t^images[i] into a ring with rank variables.

        Args:
            images (Sequence[Sequence[int]]): one exponent vector per variable
            rank (int): number of variables of the target ring

        Returns (LaurentPoly):

        """
        terms = {}
        for exponents, coefficient in self._terms.items():
            target = tuple(sum(e * image[k] for e, image in zip(exponents, images))
                           for k in range(rank))
            terms[target] = terms.get(target, 0) + coefficient
        return LaurentPoly(rank, terms)

    def format(self, variables=None):
        """
        Canonical text form, e.g. '1 - t_x + t_x*t_y'.

        Args:
            variables (Optional[Sequence[str]]): names, t_1..t_r otherwise

        Returns (str):

        """
        if not self._terms:
            return '0'
        variables = variables or [f"{VARIABLE_PREFIX}{i}"
                                  for i in range(1, self._rank + 1)]
        text = ''
        for exponents in self.support():
            coefficient = self._terms[exponents]
            monomial = _format_monomial(exponents, variables)
            if isinstance(coefficient, CyclotomicNumber):
                negative, body = False, f"({coefficient})"
                body = f"{body}*{monomial}" if monomial else body
            else:
                negative = coefficient < 0
                size = abs(coefficient)
                if not monomial:
                    body = str(size)
                elif size == 1:
                    body = monomial
                else:
                    body = f"{size}*{monomial}"
            if not text:
                text = f"-{body}" if negative else body
            else:
                text += f" - {body}" if negative else f" + {body}"
        return text

    def to_json(self):
        """Sorted [exponent vector, coefficient] pairs."""
        output = []
        for exponents in self.support():
            coefficient = self._terms[exponents]
            if isinstance(coefficient, CyclotomicNumber):
                coefficient = coefficient.to_json()
            elif isinstance(coefficient, Fraction):
                coefficient = str(coefficient)
            output.append([list(exponents), coefficient])
        return output

    @classmethod
    def from_json(cls, rank, pairs):
        """Inverse of to_json for integer and rational coefficients."""
        return cls.from_terms(rank, [
            (exponents, Fraction(coefficient) if isinstance(coefficient, str)
             else coefficient) for exponents, coefficient in pairs])

    def __bool__(self):
        """False only for zero."""
        return bool(self._terms)

    def __eq__(self, other):
        """Equality of canonical forms; scalars compare as constants."""
        other = self._lift(other) if not isinstance(other, LaurentPoly) else other
        if other is None:
            return NotImplemented
        return self._rank == other.rank and self._terms == other.terms

    def __hash__(self):
        """Hash consistent with equality."""
        return hash((self._rank, frozenset(self._terms.items())))

    def __str__(self):
        """Canonical text with default variable names."""
        return self.format()

    def __repr__(self):
        """Return a string representation of the polynomial."""
        return f"LaurentPoly({self.format()!r}, rank={self._rank})"


def evaluate_torsion(poly, character):
    """
    Evaluate at a torsion character t_i -> zeta_N^{a_i}.

    The monomial t^lambda goes to zeta_N^{(a . lambda) mod N}, so terms are
    first collected by that exponent.

    Args:
        poly (LaurentPoly): rational coefficients
        character: anything with ``modulus`` and ``exponents`` attributes

    Returns (CyclotomicNumber):

    """
    if len(character.exponents) != poly.rank:
        raise InputError(f"rank mismatch: character of rank "
                         f"{len(character.exponents)} on a polynomial of rank "
                         f"{poly.rank}")
    modulus = character.modulus
    weights = [0] * modulus
    for exponents, coefficient in poly.terms.items():
        power = sum(a * e for a, e in zip(character.exponents, exponents))
        weights[power % modulus] += coefficient
    return cyclotomic_field(modulus).combine_powers(weights)


def _as_field_element(value, field):
    if isinstance(value, CyclotomicNumber):
        return value
    return Fraction(value) if field is None else field.rational(value)


def _coefficient_field(*polys):
    fields = {c.field for poly in polys for c in poly.terms.values()
              if isinstance(c, CyclotomicNumber)}
    if len(fields) > 1:
        raise InputError("polynomials mix coefficients from different "
                         "cyclotomic fields")
    return fields.pop() if fields else None


def divide_exact(dividend, divisor):
    """
    Exact quotient in the Laurent ring, or None when divisor does not divide.

    Both polynomials are shifted to ordinary polynomials whose variables
    each reach exponent 0, divided with graded lexicographic order, and
    the quotient is shifted back. Monomials are units, so the shift does
    not change divisibility. Coefficients live in Q or in the cyclotomic
    field of the inputs.

    Args:
        dividend (LaurentPoly):
        divisor (LaurentPoly):

    Returns (Optional[LaurentPoly]):

    Raises:
        ZeroDivisionError: for the zero divisor

    """
    if divisor.is_zero():
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if dividend.rank != divisor.rank:
        raise InputError(f"rank mismatch: {dividend.rank} != {divisor.rank}")
    rank = dividend.rank
    if dividend.is_zero():
        return LaurentPoly(rank)
    field = _coefficient_field(dividend, divisor)
    low_p = [min(e[i] for e in dividend.terms) for i in range(rank)]
    low_q = [min(e[i] for e in divisor.terms) for i in range(rank)]
    remainder = {tuple(x - y for x, y in zip(e, low_p)):
                 _as_field_element(c, field) for e, c in dividend.terms.items()}
    lowered = divisor.shift([-x for x in low_q])
    lead, lead_coefficient = lowered.leading_term()
    lead_inverse = 1 / _as_field_element(lead_coefficient, field)
    divisor_terms = [(e, _as_field_element(c, field))
                     for e, c in lowered.terms.items()]
    quotient = {}
    while remainder:
        top = max(remainder, key=_leading_key)
        gap = tuple(x - y for x, y in zip(top, lead))
        if any(x < 0 for x in gap):
            return None
        factor = remainder[top] * lead_inverse
        quotient[gap] = factor
        for exponents, coefficient in divisor_terms:
            key = tuple(x + y for x, y in zip(exponents, gap))
            value = remainder.get(key, 0) - factor * coefficient
            if value:
                remainder[key] = value
            else:
                remainder.pop(key, None)
    result = LaurentPoly(rank, quotient).shift(
        [x - y for x, y in zip(low_p, low_q)])
    logging.debug("Exact division gave %s", result)
    return result
