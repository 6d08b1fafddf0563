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
"""First Betti numbers of finite abelian covers.

Two independent computations: the stratification formula (ranks of the
Alexander matrix over cyclotomic fields, one per character of G) and the
oracle (integer rank of the boundary map of the covering chain complex).
"""
from dataclasses import dataclass
from itertools import product
import logging
from math import prod
from typing import Tuple

import numpy as np

from alexstrat.const import ReportField
from alexstrat.fox import abelianization_images
from alexstrat.strata import (
    TorsionCharacter,
    cached_abelianization,
    cached_alexander_matrix,
    stratum_report,
)
from alexstrat.utils import (
    EpimorphismError,
    InputError,
    InternalError,
    lcm,
    parallel_map,
    require,
)
from alexstrat.utils.linalg import (
    integer_rank,
    invariant_factors,
    smith_normal_form,
)


class FiniteAbelianGroup:
    """Z/d_1 x ... x Z/d_k with elements listed lexicographically."""

    def __init__(self, orders):
        """
        Args:
            orders (Sequence[int]): cyclic orders, each >= 1
        """
        orders = tuple(int(order) for order in orders)
        for order in orders:
            require(order >= 1, "cyclic orders must be >= 1, got %s", order)
        self.orders = orders
        self._elements = [tuple(g) for g in
                          product(*[range(order) for order in orders])]
        self._index = {g: i for i, g in enumerate(self._elements)}

    @property
    def exponent(self):
        """lcm of the cyclic orders."""
        return lcm(*self.orders)

    @property
    def order(self):
        """|G|."""
        return prod(self.orders)

    def elements(self):
        """All elements, zero first."""
        return list(self._elements)

    def index_of(self, element):
        """Position of an element in elements()."""
        return self._index[self.reduce(element)]

    def reduce(self, vector):
        """Reduce a coordinate vector componentwise."""
        return tuple(int(v) % d for v, d in zip(vector, self.orders))

    def zero(self):
        """Identity element."""
        return (0,) * len(self.orders)

    def add(self, first, second):
        """Group operation."""
        return self.reduce([a + b for a, b in zip(first, second)])

    def invariant_factors(self):
        """Invariant factors d_1 | d_2 | ... of G, ones dropped."""
        diagonal = [[order if i == j else 0 for j in range(len(self.orders))]
                    for i, order in enumerate(self.orders)]
        _, smith, _ = smith_normal_form(diagonal, cols=len(self.orders))
        return tuple(value for value in invariant_factors(smith) if value > 1)

    def describe(self):
        """Text form, e.g. 'Z/2 x Z/2'."""
        factors = [f"Z/{order}" for order in self.orders if order > 1]
        return ' x '.join(factors) if factors else 'trivial'

    def __eq__(self, other):
        """Groups compare by their cyclic orders."""
        return isinstance(other, FiniteAbelianGroup) and other.orders == self.orders

    def __hash__(self):
        """Hash on the cyclic orders."""
        return hash(self.orders)

    def __repr__(self):
        """Return a string representation of the group."""
        return f"FiniteAbelianGroup({self.orders})"


@dataclass(frozen=True)
class Epimorphism:
    """alpha: Gamma -> G by the images of the generators."""

    presentation: object
    target: FiniteAbelianGroup
    images: Tuple[Tuple[int, ...], ...]

    def image_of(self, exponents):
        """Image of the abelianized word t^exponents in G."""
        total = [sum(e * image[k] for e, image in zip(exponents, self.images))
                 for k in range(len(self.target.orders))]
        return self.target.reduce(total)

    def to_json(self):
        """Target orders and one image vector per generator."""
        return {ReportField.GROUP: list(self.target.orders),
                ReportField.IMAGES: {name: list(image) for name, image in
                                     zip(self.presentation.names, self.images)}}


@dataclass(frozen=True)
class GroupCharacter:
    """Character g -> prod_k zeta_{d_k}^{c_k g_k} of G."""

    group: FiniteAbelianGroup
    exponents: Tuple[int, ...]

    def is_trivial(self):
        """True for c = 0."""
        return not any(self.exponents)


def validate_epimorphism(presentation, target, images):
    """
    Check that generator images define an epimorphism onto target.

    Args:
        presentation (Presentation):
        target (FiniteAbelianGroup):
        images (Sequence[Sequence[int]]): one vector per generator

    Returns (Epimorphism):

    Raises:
        InputError: wrong number or length of images
        EpimorphismError: a relator has nonzero image, or images do not
            generate G

    """
    images = [list(image) for image in images]
    size = len(target.orders)
    require(len(images) == presentation.rank,
            "expected %s generator images, got %s", presentation.rank,
            len(images))
    for image in images:
        require(len(image) == size,
                "image %s does not have %s coordinates", image, size)
    images = tuple(target.reduce(image) for image in images)
    alpha = Epimorphism(presentation, target, images)
    matrix = presentation.exponent_matrix()
    for j, relator in enumerate(presentation.relators):
        column = [matrix[i][j] for i in range(presentation.rank)]
        if any(alpha.image_of(column)):
            raise EpimorphismError(
                EpimorphismError.NOT_HOMOMORPHISM,
                f"relator {relator.format(presentation.names)} maps to "
                f"{alpha.image_of(column)}")
    # [images | diag(d)] has unit invariant factors iff the images generate G
    generators = [[images[i][k] for i in range(presentation.rank)]
                  + [order if c == k else 0 for c, order in enumerate(target.orders)]
                  for k in range(size)]
    _, smith, _ = smith_normal_form(generators, cols=presentation.rank + size)
    if any(value != 1 for value in invariant_factors(smith)):
        raise EpimorphismError(EpimorphismError.NOT_SURJECTIVE,
                               f"images do not generate {target.describe()}")
    logging.debug("Validated epimorphism onto %s", target.describe())
    return alpha


def cyclic_epimorphism(presentation, modulus, images=None):
    """
    Epimorphism onto Z/n.

    Without images, the generators go to their coordinate on the free
    part of ab(Gamma), which must then have rank 1.

    Args:
        presentation (Presentation):
        modulus (int): n >= 1
        images (Optional[Sequence[int]]): one residue per generator

    Returns (Epimorphism):

    """
    require(modulus >= 1, "cyclic order must be >= 1, got %s", modulus)
    if images is None:
        betti = cached_abelianization(presentation).betti
        require(betti == 1, "default cyclic images need b1 = 1, this group "
                "has b1 = %s; pass the images explicitly", betti)
        images = [row[0] for row in abelianization_images(presentation)]
    return validate_epimorphism(presentation, FiniteAbelianGroup([modulus]),
                                [[value] for value in images])


def characters_of(group):
    """All |G| characters, trivial first, then lexicographic."""
    return [GroupCharacter(group, element) for element in group.elements()]


def pullback_character(alpha, character):
    """
    The character of Gamma given by composing with alpha.

    a_i = sum_k (N / d_k) c_k images[i]_k mod N, N the exponent of G.

    Returns (TorsionCharacter):

    """
    require(character.group == alpha.target,
            "character of %s used with an epimorphism onto %s",
            character.group.describe(), alpha.target.describe())
    modulus = alpha.target.exponent
    scale = [modulus // order for order in alpha.target.orders]
    exponents = [sum(s * c * value for s, c, value in
                     zip(scale, character.exponents, image)) % modulus
                 for image in alpha.images]
    return TorsionCharacter(modulus, tuple(exponents))


def _check_alpha(presentation, alpha):
    require(alpha.presentation == presentation,
            "epimorphism was validated for a different presentation")


def _character_reports(alpha, threads=None):
    presentation = alpha.presentation
    characters = characters_of(alpha.target)
    return parallel_map(
        lambda chi: stratum_report(presentation, pullback_character(alpha, chi)),
        characters, threads=threads, desc='characters')


def betti_cover_formula(presentation, alpha, threads=None):
    """
    b_1 of the cover from the stratification.

    b_1(X) plus, for every nontrivial character chi of G, the excess
    max(0, (r - 1) - rank M(chi o alpha)).

    Returns (int):

    """
    _check_alpha(presentation, alpha)
    rank = presentation.rank
    total = cached_abelianization(presentation).betti
    for report in _character_reports(alpha, threads):
        if not report.character.is_trivial():
            total += max(0, (rank - 1) - report.rank)
    logging.info("Formula b1 for %s cover: %d", alpha.target.describe(), total)
    return total


def betti_cover_cross_check(presentation, alpha, threads=None):
    """b_1 of the cover as sum_{i=1..r} |W_i meet alpha^(G^)|."""
    _check_alpha(presentation, alpha)
    reports = _character_reports(alpha, threads)
    return sum(1 for index in range(1, presentation.rank + 1)
               for report in reports if report.in_jumping_locus(index))


def expanded_rank_by_characters(presentation, alpha, threads=None):
    """Sum over all characters of G of rank M(chi o alpha)."""
    _check_alpha(presentation, alpha)
    return sum(report.rank for report in _character_reports(alpha, threads))


def to_group_ring(poly, alpha):
    """
    Push a Laurent polynomial into Z[G] along alpha.

    Returns (Dict[Tuple[int, ...], int]): element -> nonzero coefficient

    """
    element = {}
    for exponents, coefficient in poly.terms.items():
        image = alpha.image_of(exponents)
        element[image] = element.get(image, 0) + coefficient
    return {g: c for g, c in element.items() if c}


def group_ring_expand(entries, group, cols=None):
    """
    Replace every Z[G] entry by its regular-representation block.

    Block row g, column h holds the coefficient of h - g, so that the
    blocks multiply like the group ring elements they stand for.

    Args:
        entries (List[List[Dict]]): m x n matrix over Z[G]
        group (FiniteAbelianGroup):
        cols (Optional[int]): n, needed when m == 0 or rows are empty

    Returns (numpy.ndarray): (m|G|) x (n|G|), object dtype of Python ints

    """
    size = group.order
    cols = cols if cols is not None else (len(entries[0]) if entries else 0)
    elements = group.elements()
    matrix = np.zeros((len(entries) * size, cols * size), dtype=object)
    for i, row in enumerate(entries):
        for j, element in enumerate(row):
            block = matrix[i * size:(i + 1) * size, j * size:(j + 1) * size]
            for key, coefficient in element.items():
                for g_index, g in enumerate(elements):
                    block[g_index, group.index_of(group.add(g, key))] += coefficient
    return matrix


def _boundary_one(alpha):
    zero = alpha.target.zero()
    row = []
    for image in alpha.images:
        element = {image: 1}
        element[zero] = element.get(zero, 0) - 1
        row.append({g: c for g, c in element.items() if c})
    return group_ring_expand([row], alpha.target, cols=len(alpha.images))


def betti_cover_oracle(presentation, alpha):
    """
    b_1 of the cover from its cellular chain complex.

    (r - 1)|G| + 1 - rank(delta_2), where delta_2 is the expanded Alexander
    matrix pushed into Z[G].

    Raises:
        InternalError: delta_1 o delta_2 != 0, or delta_1 has the wrong
            nullity

    Returns (int):

    """
    _check_alpha(presentation, alpha)
    group = alpha.target
    size = group.order
    rank = presentation.rank
    matrix = cached_alexander_matrix(presentation)
    entries = [[to_group_ring(poly, alpha) for poly in row]
               for row in matrix.entries]
    delta_two = group_ring_expand(entries, group, cols=presentation.relator_count)
    delta_one = _boundary_one(alpha)
    if np.count_nonzero(delta_one.dot(delta_two)):
        raise InternalError(f"chain condition fails for the "
                            f"{group.describe()} cover")
    expected = (rank - 1) * size + 1
    nullity = rank * size - integer_rank(delta_one.tolist(), cols=rank * size)
    if nullity != expected:
        raise InternalError(f"delta_1 has nullity {nullity}, expected "
                            f"{expected}")
    relator_cols = presentation.relator_count * size
    result = expected - integer_rank(delta_two.tolist(), cols=relator_cols)
    logging.info("Oracle b1 for %s cover: %d", group.describe(), result)
    return result


def parse_group(text):
    """
    Parse cyclic orders such as '6' or '2,2'.

    Returns (FiniteAbelianGroup):

    """
    try:
        orders = [int(part) for part in text.replace(' ', '').split(',') if part]
    except ValueError as error:
        raise InputError(f"cannot read group orders from {text!r}") from error
    require(orders, "group needs at least one cyclic order")
    return FiniteAbelianGroup(orders)


def parse_images(text, presentation, group):
    """
    Parse generator images such as 'x:1;y:1' or 'x:1,0;y:0,1'.

    Returns (List[List[int]]): in generator order

    """
    images = {}
    for chunk in text.split(';'):
        if not chunk.strip():
            continue
        name, sep, values = chunk.partition(':')
        name = name.strip()
        require(sep, "image %r must look like name:value", chunk.strip())
        require(name in presentation.names, "unknown generator %r in images",
                name)
        require(name not in images, "generator %r given twice in images", name)
        try:
            images[name] = [int(value) for value in values.split(',')]
        except ValueError as error:
            raise InputError(f"cannot read image values {values!r}") from error
        require(len(images[name]) == len(group.orders),
                "image of %s needs %s coordinates", name, len(group.orders))
    missing = [name for name in presentation.names if name not in images]
    require(not missing, "no image given for %s", ', '.join(missing))
    return [images[name] for name in presentation.names]
