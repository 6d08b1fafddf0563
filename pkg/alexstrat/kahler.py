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
"""Binomial-ideal screen for presentations built from one common relator.

When every relator is a product of conjugates u R u^-1 of one word R with
ab(R) = 0, the Fox gradient of relator i is p_i D(R) with p_i the sum of
the monomials ab(u). The first stratum of a Kahler group is a union of
rational planes, so a pencil hypersurface in three or more variables
that has no binomial factor, yet carries torsion points of V_1, is an
obstruction. Every verdict holds within the search bounds only.
"""
from collections import Counter
from dataclasses import (
    dataclass,
    field,
)
from functools import lru_cache
import logging
from math import gcd
from typing import Optional, Tuple

from alexstrat.config import CONFIG
from alexstrat.const import (
    ConfKey,
    ReportField,
    Status,
    WITHIN_BOUNDS_NOTE,
    ZETA_SYMBOL,
)
from alexstrat.cyclotomic import cyclotomic_field
from alexstrat.fox import fox_gradient
from alexstrat.laurent import (
    LaurentPoly,
    divide_exact,
    evaluate_torsion,
    variable_names,
)
from alexstrat.strata import (
    count_torsion_characters,
    stratum_report,
    torsion_characters,
)
from alexstrat.utils import (
    InternalError,
    gcd_all,
    parallel_map,
    require,
)
from alexstrat.words import Word


@dataclass(frozen=True)
class CommonRelatorForm:
    """Relators S_i written as products of conjugates of R."""

    presentation: object
    base: Word
    conjugators: Tuple[Tuple[Word, ...], ...]
    degenerate: bool = False

    def rebuild(self, index):
        """Multiply out relator index (0-based) from its conjugates."""
        word = Word.identity(self.base.rank)
        for conjugator in self.conjugators[index]:
            word = word * conjugator * self.base * conjugator.inverse()
        return word

    def to_json(self):
        """Base relator and conjugator words, by name."""
        names = self.presentation.names
        return {ReportField.BASE: self.base.format(names),
                ReportField.DEGENERATE: self.degenerate,
                ReportField.CONJUGATORS: [[u.format(names) for u in row]
                                for row in self.conjugators]}


@dataclass(frozen=True)
class Binomial:
    """t^exponents - zeta_order^unit_exponent, unit in lowest terms."""

    exponents: Tuple[int, ...]
    unit_order: int
    unit_exponent: int

    def unit(self, modulus=None):
        """The unit as an element of Q(zeta_modulus)."""
        modulus = modulus or self.unit_order
        return cyclotomic_field(modulus).root_of_unity(
            self.unit_exponent * (modulus // self.unit_order))

    def polynomial(self, modulus=None):
        """t^exponents - unit, coefficients in Q(zeta_modulus)."""
        return (LaurentPoly.monomial(self.exponents, cyclotomic_field(
            modulus or self.unit_order).one()) - self.unit(modulus))

    def format(self, variables=None):
        """Text form, e.g. 't_1 - zeta6^5'."""
        monomial = LaurentPoly.monomial(self.exponents).format(variables)
        if self.unit_order == 2:
            return f"{monomial} + 1"
        if self.unit_order == 1:
            unit = '1'
        elif self.unit_exponent == 1:
            unit = f"{ZETA_SYMBOL}{self.unit_order}"
        else:
            unit = f"{ZETA_SYMBOL}{self.unit_order}^{self.unit_exponent}"
        return f"{monomial} - {unit}"

    def to_json(self):
        """Exponent vector and the unit as order and exponent."""
        return {ReportField.EXPONENTS: list(self.exponents),
                ReportField.UNIT: {ReportField.ORDER: self.unit_order,
                                   ReportField.EXPONENTS: self.unit_exponent}}


@dataclass(frozen=True)
class BinomialSearch:
    """Outcome of the bounded binomial-factor search for one polynomial."""

    polynomial: LaurentPoly
    divisors: Tuple[Binomial, ...]
    exhaustive: bool
    factors_fully: bool

    def to_json(self, variables=None):
        """Polynomial, divisors and flags."""
        return {ReportField.POLYNOMIAL: self.polynomial.format(variables),
                ReportField.BINOMIALS: [b.format(variables) for b in self.divisors],
                ReportField.EXHAUSTIVE: self.exhaustive,
                ReportField.FACTORS_FULLY: self.factors_fully}


@dataclass(frozen=True)
class ObstructionReport:
    """Verdict of the screen with the evidence behind it."""

    status: str
    max_degree: int
    max_order: int
    form: Optional[CommonRelatorForm] = None
    searches: Tuple[BinomialSearch, ...] = ()
    witnesses: Tuple = ()
    justification: str = ''
    note: str = field(default=WITHIN_BOUNDS_NOTE)

    @property
    def pencils(self):
        """The pencil polynomials p_1..p_s."""
        return [search.polynomial for search in self.searches]

    def to_json(self):
        """Everything, with polynomials in generator variable names."""
        variables = None
        if self.form is not None:
            variables = variable_names(self.form.presentation.names)
        return {
            ReportField.STATUS: self.status,
            ReportField.BOUNDS: {ReportField.MAX_DEGREE: self.max_degree,
                                 ReportField.MAX_ORDER: self.max_order},
            ReportField.FORM: self.form.to_json() if self.form else None,
            ReportField.PENCILS: [p.format(variables) for p in self.pencils],
            ReportField.SEARCHES: [s.to_json(variables) for s in self.searches],
            ReportField.WITNESSES: [w.to_json() for w in self.witnesses],
            ReportField.JUSTIFICATION: self.justification,
            ReportField.NOTE: self.note,
        }


def _inverse_letter(letter):
    return letter[0], -letter[1]


def _cyclic_core(base):
    """Split a reduced word as a c a^-1 with c cyclically reduced."""
    letters = base.letters
    size = len(letters)
    strip = 0
    while (2 * strip + 1 < size
           and letters[strip] == _inverse_letter(letters[size - 1 - strip])):
        strip += 1
    return Word(letters[:strip], base.rank, reduced=True), letters[strip:size - strip]


def _core_rotations(base):
    """
    Map each cyclic rotation of the core of base to its conjugator.

    With base = a c a^-1 and c = p q, the rotation q p equals
    u base u^-1 for u = (a p)^-1.
    """
    prefix, core = _cyclic_core(base)
    rotations = {}
    for cut in range(len(core)):
        rotation = core[cut:] + core[:cut]
        if rotation not in rotations:
            shift = prefix * Word(core[:cut], base.rank, reduced=True)
            rotations[rotation] = shift.inverse()
    return rotations


def _decomposer(relator, rotations):
    """Memoized decomposition of relator[i:j] into conjugates of the base."""
    letters = relator.letters
    rank = relator.rank
    width = len(next(iter(rotations)))

    @lru_cache(maxsize=None)
    def decompose(start, end):
        if start == end:
            return ()
        conjugator = rotations.get(letters[start:start + width])
        if conjugator is not None and start + width <= end:
            rest = decompose(start + width, end)
            if rest is not None:
                return (conjugator,) + rest
        index, sign = letters[start]
        for stop in range(start + 2, end + 1):
            if letters[stop - 1] != (index, -sign):
                continue
            inner = decompose(start + 1, stop - 1)
            if not inner:
                continue
            rest = decompose(stop, end)
            if rest is None:
                continue
            outer = Word([(index, sign)], rank)
            return tuple(outer * u for u in inner) + rest
        return None

    return decompose


def _decompose(relator, rotations):
    if relator.is_identity():
        return None
    return _decomposer(relator, rotations)(0, len(relator))


def _candidate_bases(relators):
    """
    Subwords of the first relator, longest core first.

    Ties go to cyclically reduced words, then to the words written out
    most often across all relators.
    """
    first = relators[0]
    occurrences = Counter(rel.letters[i:j] for rel in relators
                          for i in range(len(rel))
                          for j in range(i + 1, len(rel) + 1))
    keyed = {}
    for start in range(len(first)):
        for stop in range(start + 1, len(first) + 1):
            letters = first.letters[start:stop]
            if letters not in keyed:
                word = Word(letters, first.rank, reduced=True)
                prefix, core = _cyclic_core(word)
                keyed[letters] = ((-len(core), len(prefix),
                                   -occurrences[letters], start), word)
    return [word for _, word in sorted(keyed.values(), key=lambda kw: kw[0])]


def _core_occurs(word, rotations):
    width = len(next(iter(rotations)))
    return any(word.letters[i:i + width] in rotations
               for i in range(len(word) - width + 1))


def _try_base(presentation, base):
    relators = presentation.relators
    if any(base.abelianize()):
        # D(u R u^-1) = ab(u) D(R) needs ab(R) = 0 unless every relator is R
        if all(rel == base for rel in relators):
            return tuple((Word.identity(base.rank),) for _ in relators)
        return None
    rotations = _core_rotations(base)
    if not all(_core_occurs(rel, rotations) for rel in relators):
        return None
    rows = []
    for relator in relators:
        row = _decompose(relator, rotations)
        if row is None:
            return None
        rows.append(row)
    return tuple(rows)


def detect_common_relator_form(presentation, base=None):
    """
    Find R with every relator a product of conjugates of R.

    Candidates are the hint, or else the subwords of the first relator.
    A conjugate may cancel into R under free reduction as long as a cyclic
    rotation of the core of R stays in the relator; conjugates whose cores
    cancel against each other are not recognised.

    Args:
        presentation (Presentation):
        base (Optional[Word]): hint for R

    Returns (Optional[CommonRelatorForm]): None when no candidate works

    """
    relators = presentation.relators
    if not relators or any(rel.is_identity() for rel in relators):
        return None
    candidates = [base] if base is not None else _candidate_bases(relators)
    for candidate in candidates:
        if candidate.is_identity():
            continue
        rows = _try_base(presentation, candidate)
        if rows is None:
            continue
        degenerate = all(len(row) == 1 and row[0].is_identity() for row in rows)
        form = CommonRelatorForm(presentation, candidate, rows, degenerate)
        for index, relator in enumerate(relators):
            if form.rebuild(index) != relator:
                raise InternalError(f"decomposition of relator {index + 1} "
                                    f"does not multiply back")
        logging.info("Common relator form with base %s (degenerate=%s)",
                     candidate.format(presentation.names), degenerate)
        return form
    logging.info("No common relator form found")
    return None


def pencil_polynomials(form):
    """
    p_i = sum_j ab(u_ij), checked against D(S_i) = p_i D(R).

    Raises:
        InternalError: the factorization identity fails

    Returns (List[LaurentPoly]):

    """
    rank = form.base.rank
    base_gradient = fox_gradient(form.base)
    pencils = []
    for index, row in enumerate(form.conjugators):
        pencil = LaurentPoly(rank)
        for conjugator in row:
            pencil = pencil + LaurentPoly.monomial(conjugator.abelianize())
        gradient = fox_gradient(form.presentation.relators[index])
        if gradient != [pencil * entry for entry in base_gradient]:
            raise InternalError(f"D(S_{index + 1}) is not p_{index + 1} D(R)")
        pencils.append(pencil)
    return pencils


def _primitive(vector):
    common = gcd_all(vector)
    return tuple(v // common for v in vector)


def _sign_normalized(vector):
    first = next((v for v in vector if v), 0)
    return tuple(-v for v in vector) if first < 0 else tuple(vector)


def _candidate_exponents(poly, max_degree):
    support = poly.support()
    directions = set()
    for i, mu in enumerate(support):
        for nu in support[i + 1:]:
            directions.add(_sign_normalized(
                _primitive([a - b for a, b in zip(mu, nu)])))
    candidates = set()
    for direction in directions:
        for multiple in range(1, max_degree + 1):
            vector = tuple(multiple * v for v in direction)
            if max(abs(v) for v in vector) <= max_degree:
                candidates.add(vector)
    return sorted(candidates)


def _reduce_unit(order, exponent):
    common = gcd(order, exponent)
    return order // common, (exponent // common) % (order // common)


def binomial_factor_search(poly, max_degree, max_order, threads=None):
    """
    Bounded search for binomial divisors t^lambda - u of a Laurent polynomial.

    lambda runs over multiples of primitive support differences with
    |lambda|_inf <= max_degree, sign-normalized; u over the max_order-th
    roots of unity. Divisibility is exact division over Q(zeta_max_order).

    Args:
        poly (LaurentPoly): nonzero
        max_degree (int): D >= 1
        max_order (int): Nmax >= 1

    Returns (BinomialSearch):

    """
    require(not poly.is_zero(), "binomial search needs a nonzero polynomial")
    require(max_degree >= 1, "max degree must be >= 1, got %s", max_degree)
    require(max_order >= 1, "max order must be >= 1, got %s", max_order)
    candidates = [Binomial(exponents, *_reduce_unit(max_order, k))
                  for exponents in _candidate_exponents(poly, max_degree)
                  for k in range(max_order)]
    divides = parallel_map(
        lambda b: divide_exact(poly, b.polynomial(max_order)) is not None,
        candidates, threads=threads, desc='binomials')
    divisors = tuple(b for b, found in zip(candidates, divides) if found)
    remaining = poly
    progress = True
    while progress and not remaining.is_monomial():
        progress = False
        for binomial in divisors:
            quotient = divide_exact(remaining, binomial.polynomial(max_order))
            if quotient is not None:
                remaining, progress = quotient, True
                break
    logging.debug("%d binomial divisors of %s within bounds", len(divisors), poly)
    return BinomialSearch(poly, divisors, exhaustive=True,
                          factors_fully=remaining.is_monomial())


def _torsion_witnesses(presentation, pencils, max_order, threshold, budget):
    witnesses = []
    examined = 0
    for modulus in range(2, max_order + 1):
        count = count_torsion_characters(presentation, modulus)
        if examined + count > budget:
            logging.info("Stopping torsion point search at order %d after %d "
                         "characters", modulus, examined)
            break
        examined += count
        for character in torsion_characters(presentation, modulus):
            if character.order != modulus:
                continue
            if any(evaluate_torsion(pencil, character) for pencil in pencils):
                continue
            # All pencils vanish, so M is zero there: the point lies in V_{r-1}
            if stratum_report(presentation, character).in_stratum(
                    presentation.rank - 1):
                witnesses.append(character)
                if len(witnesses) >= threshold:
                    return witnesses
    return witnesses


def kahler_obstruction_report(presentation, max_degree=None, max_order=None,
                              base=None, threads=None):
    """
    Run the binomial-ideal screen on a presentation.

    Args:
        presentation (Presentation):
        max_degree (Optional[int]): D, configured default otherwise
        max_order (Optional[int]): Nmax, configured default otherwise
        base (Optional[Word]): hint for the common relator R

    Returns (ObstructionReport):

    """
    max_degree = max_degree or CONFIG[ConfKey.DEFAULT_MAX_DEGREE]
    max_order = max_order or CONFIG[ConfKey.DEFAULT_MAX_ORDER]
    form = detect_common_relator_form(presentation, base)
    if form is None:
        return ObstructionReport(
            Status.INCONCLUSIVE, max_degree, max_order,
            justification="relators are not products of conjugates of one "
                          "common relator")
    pencils = pencil_polynomials(form)
    searches = tuple(binomial_factor_search(p, max_degree, max_order, threads)
                     for p in pencils)
    if all(search.factors_fully for search in searches):
        return ObstructionReport(
            Status.CONSISTENT, max_degree, max_order, form, searches,
            justification="every pencil polynomial is a monomial times a "
                          "product of binomials; no obstruction found")
    variables = variable_names(presentation.names)
    suspects = [(index, search) for index, search in enumerate(searches, 1)
                if len(search.polynomial.support_variables()) >= 3
                and not search.divisors]
    if not suspects:
        return ObstructionReport(
            Status.INCONCLUSIVE, max_degree, max_order, form, searches,
            justification="some pencil polynomial does not factor into "
                          "binomials, but none has three or more variables "
                          "without a binomial factor")
    threshold = CONFIG[ConfKey.KAHLER_POINT_THRESHOLD]
    witnesses = _torsion_witnesses(presentation, pencils, max_order, threshold,
                                   CONFIG[ConfKey.KAHLER_MAX_CANDIDATES])
    if len(witnesses) < threshold:
        return ObstructionReport(
            Status.INCONCLUSIVE, max_degree, max_order, form, searches,
            tuple(witnesses),
            justification=f"found only {len(witnesses)} torsion points of "
                          f"order <= {max_order} on V(p_1, ..., p_s)")
    index, search = suspects[0]
    justification = (
        f"p_{index} = {search.polynomial.format(variables)} involves "
        f"{len(search.polynomial.support_variables())} variables and has no "
        f"binomial factor t^lambda - u with |lambda|_inf <= {max_degree} and "
        f"u^{max_order} = 1, while V(p_1, ..., p_s) carries {len(witnesses)} "
        f"nontrivial torsion points of order <= {max_order} in "
        f"V_{presentation.rank - 1}, inside V_1")
    logging.info("Obstruction found: %s", justification)
    return ObstructionReport(Status.OBSTRUCTED, max_degree, max_order, form,
                             searches, tuple(witnesses), justification)
