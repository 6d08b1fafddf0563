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
"""Exact arithmetic in the cyclotomic fields Q(zeta_N) = Q[x] / Phi_N(x).

Elements are rational coordinate vectors with respect to the power basis
1, zeta, ..., zeta^(phi(N) - 1).
"""
from fractions import Fraction
from functools import lru_cache
import logging
from numbers import Rational

from sympy import (
    Poly,
    QQ,
    Rational as SympyRational,
    Symbol,
    divisors,
    totient,
)

from alexstrat.const import ZETA_SYMBOL
from alexstrat.utils import InputError

_X = Symbol('x')


def _poly_divide_exact(numerator, denominator):
    """Exact quotient of integer polynomials (low degree first), monic divisor."""
    remainder = list(numerator)
    quotient = [0] * (len(numerator) - len(denominator) + 1)
    top = len(denominator) - 1
    for k in range(len(quotient) - 1, -1, -1):
        coefficient = remainder[k + top]
        quotient[k] = coefficient
        if coefficient:
            for i, value in enumerate(denominator):
                remainder[k + i] -= coefficient * value
    if any(remainder):
        raise ArithmeticError("cyclotomic division left a remainder")
    return quotient


@lru_cache(maxsize=None)
def cyclotomic_polynomial(modulus):
    """
    The cyclotomic polynomial Phi_N.

    Computed as (x^N - 1) divided by Phi_d for every proper divisor d of N.

    Args:
        modulus (int): N >= 1

    Returns (Tuple[int, ...]): integer coefficients, constant term first

    """
    if modulus < 1:
        raise InputError(f"cyclotomic modulus must be >= 1, got {modulus}")
    polynomial = [-1] + [0] * (modulus - 1) + [1]
    for divisor in divisors(modulus):
        if divisor < modulus:
            polynomial = _poly_divide_exact(polynomial,
                                            cyclotomic_polynomial(divisor))
    return tuple(polynomial)


class CyclotomicField:
    """The field Q(zeta_N) with its cached table of powers of zeta."""

    def __init__(self, modulus):
        """Set up Phi_N and the coordinates of zeta^k, k = 0..N-1."""
        self.modulus = modulus
        self.polynomial = cyclotomic_polynomial(modulus)
        self.degree = int(totient(modulus))
        assert self.degree == len(self.polynomial) - 1
        powers = []
        coords = [1] + [0] * (self.degree - 1)
        for _ in range(modulus):
            powers.append(tuple(coords))
            coords = [0] + coords
            top = coords.pop()
            if top:
                for i in range(self.degree):
                    coords[i] -= top * self.polynomial[i]
        self._powers = powers

    def power_coords(self, exponent):
        """Integer coordinates of zeta^exponent."""
        return self._powers[exponent % self.modulus]

    def element(self, coords):
        """Element from a coordinate sequence of length phi(N)."""
        return CyclotomicNumber(self, coords)

    def rational(self, value):
        """Embed a rational number."""
        return CyclotomicNumber(self, [value] + [0] * (self.degree - 1))

    def zero(self):
        """Additive identity."""
        return self.rational(0)

    def one(self):
        """Multiplicative identity."""
        return self.rational(1)

    def root_of_unity(self, exponent):
        """zeta_N^exponent."""
        return CyclotomicNumber(self, self.power_coords(exponent))

    def combine_powers(self, weights):
        """
        Sum of weights[k] * zeta^k over k = 0..N-1.

        Args:
            weights (Sequence[Rational]): length N

        Returns (CyclotomicNumber):

        """
        coords = [0] * self.degree
        for exponent, weight in enumerate(weights):
            if weight:
                for i, value in enumerate(self._powers[exponent]):
                    if value:
                        coords[i] += weight * value
        return CyclotomicNumber(self, coords)

    def __eq__(self, other):
        """Fields are equal when their moduli are."""
        return isinstance(other, CyclotomicField) and other.modulus == self.modulus

    def __hash__(self):
        """Hash on the modulus."""
        return hash(self.modulus)

    def __repr__(self):
        """Return a string representation of the field."""
        return f"CyclotomicField({self.modulus})"


@lru_cache(maxsize=None)
def cyclotomic_field(modulus):
    """Shared CyclotomicField instance for a modulus."""
    logging.debug("Building cyclotomic field Q(zeta_%d)", modulus)
    return CyclotomicField(modulus)


@lru_cache(maxsize=4096)
def _inverse_coords(modulus, coords):
    field = cyclotomic_field(modulus)
    numerator = Poly([SympyRational(c.numerator, c.denominator)
                      for c in reversed(coords)], _X, domain=QQ)
    denominator = Poly(list(reversed(field.polynomial)), _X, domain=QQ)
    inverse = numerator.invert(denominator).all_coeffs()
    inverse = [Fraction(int(c.p), int(c.q)) for c in reversed(inverse)]
    return tuple(inverse + [Fraction(0)] * (field.degree - len(inverse)))


class CyclotomicNumber:
    """An element of Q(zeta_N) in power-basis coordinates."""

    __slots__ = ('field', 'coords')

    def __init__(self, field, coords):
        """Store coordinates as Fractions in lowest terms."""
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != field.degree:
            raise InputError(f"expected {field.degree} coordinates for "
                             f"Q(zeta_{field.modulus}), got {len(coords)}")
        self.field = field
        self.coords = coords

    @property
    def modulus(self):
        """N of the ambient field."""
        return self.field.modulus

    def is_rational(self):
        """True when only the constant coordinate is nonzero."""
        return not any(self.coords[1:])

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.field != self.field:
                raise InputError(f"modulus mismatch: {self.modulus} != "
                                 f"{other.modulus}")
            return other
        if isinstance(other, Rational):
            return self.field.rational(other)
        return None

    def __add__(self, other):
        """Field addition."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CyclotomicNumber(self.field, [a + b for a, b in
                                             zip(self.coords, other.coords)])

    __radd__ = __add__

    def __neg__(self):
        """Additive inverse."""
        return CyclotomicNumber(self.field, [-a for a in self.coords])

    def __sub__(self, other):
        """Field subtraction."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        """Subtraction with a rational on the left."""
        return (-self) + other

    def __mul__(self, other):
        """Field multiplication, reduced modulo Phi_N."""
        if isinstance(other, Rational):
            return CyclotomicNumber(self.field, [a * other for a in self.coords])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        degree = self.field.degree
        product = [0] * (2 * degree - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        product[i + j] += a * b
        phi = self.field.polynomial
        for k in range(len(product) - 1, degree - 1, -1):
            top = product[k]
            if top:
                for i in range(degree):
                    product[k - degree + i] -= top * phi[i]
        return CyclotomicNumber(self.field, product[:degree])

    __rmul__ = __mul__

    def inverse(self):
        """
        Multiplicative inverse via the extended Euclidean algorithm in Q[x].

        Raises:
            ZeroDivisionError: for the zero element

        """
        if not self:
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        if self.is_rational():
            return self.field.rational(1 / self.coords[0])
        return CyclotomicNumber(self.field,
                                _inverse_coords(self.modulus, self.coords))

    def __truediv__(self, other):
        """Field division."""
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        """Rational divided by a field element."""
        return self.inverse() * other

    def __bool__(self):
        """False only for zero."""
        return any(self.coords)

    def __eq__(self, other):
        """Equality with field elements and embedded rationals."""
        if isinstance(other, CyclotomicNumber):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, Rational):
            return self.is_rational() and self.coords[0] == other
        return NotImplemented

    def __hash__(self):
        """Rational elements hash like the rational they equal."""
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.modulus, self.coords))

    def to_json(self):
        """[N, coordinates] with integral coordinates as ints, others 'p/q'."""
        return [self.modulus, [int(c) if c.denominator == 1 else str(c)
                               for c in self.coords]]

    def __str__(self):
        """Render as a polynomial in zeta_N."""
        pieces = []
        for power, value in enumerate(self.coords):
            if not value:
                continue
            symbol = f"{ZETA_SYMBOL}{self.modulus}"
            if power > 1:
                symbol += f"^{power}"
            if power == 0:
                body = str(abs(value))
            elif abs(value) == 1:
                body = symbol
            else:
                body = f"{abs(value)}*{symbol}"
            pieces.append((value < 0, body))
        if not pieces:
            return '0'
        text = ('-' if pieces[0][0] else '') + pieces[0][1]
        for negative, body in pieces[1:]:
            text += (' - ' if negative else ' + ') + body
        return text

    def __repr__(self):
        """Return a string representation of the number."""
        return f"CyclotomicNumber({self}, N={self.modulus})"


class CyclotomicMatrix:
    """Dense matrix over one cyclotomic field; shapes with no columns allowed."""

    def __init__(self, field, entries, cols=None):
        """Store rows of CyclotomicNumber, coercing rationals into the field."""
        self.field = field
        self.entries = [[entry if isinstance(entry, CyclotomicNumber)
                         else field.rational(entry) for entry in row]
                        for row in entries]
        self.rows = len(self.entries)
        self.cols = cols if cols is not None else (
            len(self.entries[0]) if self.entries else 0)
        for row in self.entries:
            if len(row) != self.cols:
                raise InputError("ragged cyclotomic matrix")
            for entry in row:
                if entry.field != field:
                    raise InputError("matrix entries must share one modulus")

    @property
    def modulus(self):
        """N shared by all entries."""
        return self.field.modulus

    def is_zero(self):
        """True when every entry vanishes."""
        return not any(entry for row in self.entries for entry in row)

    def rank(self):
        """See rank_cyclotomic."""
        return rank_cyclotomic(self)

    def to_json(self):
        """Entries as nested [N, coordinates] pairs."""
        return [[entry.to_json() for entry in row] for row in self.entries]


def rank_cyclotomic(matrix):
    """
    Exact rank over Q(zeta_N) by division-free Gaussian elimination.

    Each non-pivot row is replaced by pivot * row - row[c] * pivot_row,
    which scales the row by a nonzero field element and so keeps the
    row space dimension.

    Args:
        matrix (CyclotomicMatrix):

    Returns (int):

    """
    work = [list(row) for row in matrix.entries]
    rows, cols = matrix.rows, matrix.cols
    rank = 0
    for col in range(cols):
        if rank == rows:
            break
        pivot = next((i for i in range(rank, rows) if work[i][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        head = work[rank]
        for i in range(rank + 1, rows):
            lead = work[i][col]
            if lead:
                work[i] = [head[col] * value - lead * top
                           for value, top in zip(work[i], head)]
        rank += 1
    return rank
