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
"""Torsion characters and membership in the strata V_i and loci W_i.

Depth convention: with corank = r - rank M(chi), chi lies in V_i exactly
when i < corank. The reported depth is the largest such i, i.e.
max(0, corank - 1).
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
import logging
from math import (
    gcd,
    prod,
)
from typing import Tuple

from alexstrat.const import ReportField
from alexstrat.cyclotomic import (
    CyclotomicMatrix,
    cyclotomic_field,
)
from alexstrat.fox import alexander_matrix
from alexstrat.laurent import evaluate_torsion
from alexstrat.presentation import abelianization
from alexstrat.utils import (
    InputError,
    gcd_all,
    parallel_map,
    require,
)


@dataclass(frozen=True)
class TorsionCharacter:
    """Character t_i -> zeta_N^{a_i} of finite order."""

    modulus: int
    exponents: Tuple[int, ...]

    def __post_init__(self):
        """Reduce exponents into Z/N."""
        require(self.modulus >= 1, "character modulus must be >= 1, got %s",
                self.modulus)
        object.__setattr__(self, 'exponents',
                           tuple(int(a) % self.modulus for a in self.exponents))

    @property
    def rank(self):
        """Number of generators r."""
        return len(self.exponents)

    def is_trivial(self):
        """True when every a_i is 0 mod N."""
        return not any(self.exponents)

    def normalized(self):
        """Same character over the least modulus, e.g. (6, (2,)) -> (3, (1,))."""
        common = gcd(self.modulus, gcd_all(self.exponents))
        return TorsionCharacter(self.modulus // common,
                                tuple(a // common for a in self.exponents))

    @property
    def order(self):
        """Multiplicative order of the character."""
        return self.normalized().modulus

    def kills_relators(self, presentation):
        """True when sum_i A_ij a_i = 0 mod N for every relator j."""
        matrix = presentation.exponent_matrix()
        return all(sum(matrix[i][j] * self.exponents[i]
                       for i in range(self.rank)) % self.modulus == 0
                   for j in range(presentation.relator_count))

    def sort_key(self):
        """(N, a) ordering used for deterministic reports."""
        return (self.modulus, self.exponents)

    def to_json(self):
        """Modulus and exponent vector."""
        return {ReportField.MODULUS: self.modulus,
                ReportField.EXPONENTS: list(self.exponents)}

    def __str__(self):
        """Render as N=6,a=1,1."""
        return f"N={self.modulus},a={','.join(map(str, self.exponents))}"


@lru_cache(maxsize=64)
def cached_alexander_matrix(presentation):
    """Alexander matrix, computed once per presentation."""
    return alexander_matrix(presentation)


@lru_cache(maxsize=64)
def cached_abelianization(presentation):
    """Abelianization data, computed once per presentation."""
    return abelianization(presentation)


def _solution_steps(presentation, modulus):
    data = cached_abelianization(presentation)
    steps = []
    for k in range(presentation.rank):
        factor = data.diagonal[k][k] if k < presentation.relator_count else 0
        common = gcd(modulus, factor)
        steps.append([m * (modulus // common) for m in range(common)])
    return steps


def count_torsion_characters(presentation, modulus):
    """Number of characters of order dividing N, without listing them."""
    require(modulus >= 1, "modulus must be >= 1, got %s", modulus)
    return prod(len(step) for step in _solution_steps(presentation, modulus))


def torsion_characters(presentation, modulus):
    """
    Characters of order dividing N, as solutions of A^T a = 0 mod N.

    With U A V = D the solutions are a = U^T b where d_k b_k = 0 mod N,
    so b runs over a product of cyclic solution sets.

    Args:
        presentation (Presentation):
        modulus (int): N >= 1

    Yields (TorsionCharacter): each solution once, lexicographic in a

    """
    require(modulus >= 1, "modulus must be >= 1, got %s", modulus)
    rank = presentation.rank
    left = cached_abelianization(presentation).left
    steps = _solution_steps(presentation, modulus)
    solutions = []
    for coords in product(*steps):
        solutions.append(tuple(sum(left[k][i] * coords[k] for k in range(rank))
                               % modulus for i in range(rank)))
    solutions.sort()
    logging.debug("%d characters of order dividing %d", len(solutions), modulus)
    for exponents in solutions:
        yield TorsionCharacter(modulus, exponents)


def brute_force_torsion_characters(presentation, modulus):
    """Scan all of (Z/N)^r; the reference the Smith-form solver must match."""
    for exponents in product(range(modulus), repeat=presentation.rank):
        character = TorsionCharacter(modulus, exponents)
        if character.kills_relators(presentation):
            yield character


def evaluate_matrix(matrix, character):
    """
    Evaluate an Alexander matrix at a torsion character of its group.

    Args:
        matrix (AlexanderMatrix):
        character (TorsionCharacter):

    Returns (CyclotomicMatrix): over Q(zeta_N) for the least modulus N

    Raises:
        InputError: rank mismatch, or the character does not kill a relator

    """
    if character.rank != matrix.rank:
        raise InputError(f"character of rank {character.rank} for a "
                         f"presentation of rank {matrix.rank}")
    if not character.kills_relators(matrix.presentation):
        raise InputError(f"character {character} is not a character of the "
                         f"group: some relator does not map to 1")
    character = character.normalized()
    field = cyclotomic_field(character.modulus)
    entries = [[evaluate_torsion(poly, character) for poly in row]
               for row in matrix.entries]
    return CyclotomicMatrix(field, entries, cols=matrix.relator_count)


@dataclass(frozen=True)
class StratumReport:
    """Rank of M at a character and what it says about V_i and W_i."""

    character: TorsionCharacter
    rank: int
    generators: int
    betti: int

    @property
    def corank(self):
        """r - rank, the dimension of the cocycle space C^1."""
        return self.generators - self.rank

    dim_c1 = corank

    @property
    def dim_h1(self):
        """dim H^1: corank - 1 off the trivial character, d on it."""
        if self.character.is_trivial():
            return self.betti
        return self.corank - 1

    @property
    def depth(self):
        """Largest i with the character in V_i (0 if none)."""
        return max(0, self.corank - 1)

    def in_stratum(self, index):
        """Membership in V_index: rank < r - index."""
        return index < self.corank

    def in_jumping_locus(self, index):
        """Membership in W_index, V_index corrected at the trivial character."""
        if self.character.is_trivial():
            return index <= self.betti
        return self.in_stratum(index)

    def to_json(self):
        """All fields, character in normalized form."""
        return {
            ReportField.CHARACTER: self.character.to_json(),
            ReportField.RANK: self.rank,
            ReportField.CORANK: self.corank,
            ReportField.DIM_C1: self.dim_c1,
            ReportField.DIM_H1: self.dim_h1,
            ReportField.DEPTH: self.depth,
        }


def stratum_report(presentation, character):
    """
    Rank of the Alexander matrix at a character, with the derived strata data.

    Args:
        presentation (Presentation):
        character (TorsionCharacter):

    Returns (StratumReport):

    """
    evaluated = evaluate_matrix(cached_alexander_matrix(presentation), character)
    return StratumReport(character=character.normalized(),
                         rank=evaluated.rank(),
                         generators=presentation.rank,
                         betti=cached_abelianization(presentation).betti)


def w_membership(presentation, character, index):
    """True when the character lies in W_index (index >= 0)."""
    require(index >= 0, "stratum index must be >= 0, got %s", index)
    return stratum_report(presentation, character).in_jumping_locus(index)


def rank_at_trivial(presentation):
    """Rank of M at the trivial character, equal to r - b_1(X)."""
    trivial = TorsionCharacter(1, (0,) * presentation.rank)
    return stratum_report(presentation, trivial).rank


def torsion_scan(presentation, index, modulus, jumping=False, threads=None):
    """
    Characters of order dividing N lying in V_index (or W_index).

    Args:
        presentation (Presentation):
        index (int): i >= 1
        modulus (int): N >= 1
        jumping (bool): filter by W_index instead of V_index
        threads (Optional[int]): parallel evaluation

    Returns (List[TorsionCharacter]): normalized, in enumeration order

    """
    require(index >= 1, "stratum index must be >= 1, got %s", index)
    characters = list(torsion_characters(presentation, modulus))
    reports = parallel_map(lambda chi: stratum_report(presentation, chi),
                           characters, threads=threads, desc='torsion scan')
    if jumping:
        found = [rep.character for rep in reports if rep.in_jumping_locus(index)]
    else:
        found = [rep.character for rep in reports if rep.in_stratum(index)]
    logging.info("Scan of %s for index %d, N=%d found %d characters",
                 'W' if jumping else 'V', index, modulus, len(found))
    return found
