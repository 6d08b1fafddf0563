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
"""Free-group words in normal form.

A letter is a pair (generator index, sign) with 1-based indices, so
x_i is (i, 1) and its inverse is (i, -1).
"""
from alexstrat.const import IDENTITY_TOKEN
from alexstrat.utils import InputError


def _check_letter(letter, rank):
    index, sign = letter
    if sign not in (1, -1):
        raise InputError(f"letter sign must be +1 or -1, got {sign}")
    if not 1 <= index <= rank:
        raise InputError(f"generator index {index} outside 1..{rank}")


def free_reduce(letters, rank):
    """
    Freely reduce a raw letter sequence.

    Args:
        letters (Iterable[Tuple[int, int]]): (index, sign) pairs
        rank (int): ambient free-group rank r

    Returns (Word):

    """
    stack = []
    for letter in letters:
        letter = (int(letter[0]), int(letter[1]))
        _check_letter(letter, rank)
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return Word(stack, rank, reduced=True)


def word_multiply(first, second):
    """Freely reduced concatenation of two words of the same rank."""
    if first.rank != second.rank:
        raise InputError(f"rank mismatch: {first.rank} != {second.rank}")
    return free_reduce(first.letters + second.letters, first.rank)


def word_inverse(word):
    """Return the inverse word; reversal keeps it reduced."""
    return Word([(index, -sign) for index, sign in reversed(word.letters)],
                word.rank, reduced=True)


def abelianize_word(word, rank=None):
    """
    Image of a word in Z^r: signed count of each generator.

    Args:
        word (Word):
        rank (Optional[int]): defaults to the word's rank

    Returns (Tuple[int, ...]):

    """
    rank = rank or word.rank
    exponents = [0] * rank
    for index, sign in word.letters:
        exponents[index - 1] += sign
    return tuple(exponents)


def generator(index, rank, power=1):
    """The word x_index^power."""
    sign = 1 if power > 0 else -1
    return Word([(index, sign)] * abs(power), rank, reduced=True)


def commutator(first, second):
    """[a, b] = a b a^-1 b^-1."""
    return first * second * first.inverse() * second.inverse()


class Word:
    """An element of the free group F_r, stored freely reduced."""

    __slots__ = ('_letters', '_rank')

    def __init__(self, letters, rank, reduced=False):
        """Store letters, reducing them unless the caller vouches they are."""
        if rank < 0:
            raise InputError(f"rank must be nonnegative, got {rank}")
        if reduced:
            self._letters = tuple(letters)
        else:
            self._letters = free_reduce(letters, rank).letters
        self._rank = rank

    @property
    def letters(self):
        """Tuple of (index, sign) letters."""
        return self._letters

    @property
    def rank(self):
        """Rank of the ambient free group."""
        return self._rank

    @classmethod
    def identity(cls, rank):
        """The empty word."""
        return cls((), rank, reduced=True)

    def is_identity(self):
        """True for the empty word."""
        return not self._letters

    def inverse(self):
        """See word_inverse."""
        return word_inverse(self)

    def abelianize(self):
        """See abelianize_word."""
        return abelianize_word(self)

    def syllables(self):
        """Group the word into (index, power) runs."""
        output = []
        for index, sign in self._letters:
            if output and output[-1][0] == index:
                output[-1][1] += sign
            else:
                output.append([index, sign])
        return [tuple(run) for run in output]

    def format(self, names=None):
        """
        Render in the presentation grammar, e.g. 'x y^2 x^-1'.

        Args:
            names (Optional[Sequence[str]]): generator names, x1..xr otherwise

        Returns (str):

        """
        if not self._letters:
            return IDENTITY_TOKEN
        names = names or [f"x{i}" for i in range(1, self._rank + 1)]
        parts = []
        for index, power in self.syllables():
            name = names[index - 1]
            parts.append(name if power == 1 else f"{name}^{power}")
        return ' '.join(parts)

    def __mul__(self, other):
        """Return the reduced product."""
        return word_multiply(self, other)

    def __pow__(self, exponent):
        """Return the reduced power, negative exponents allowed."""
        base = self if exponent >= 0 else self.inverse()
        return free_reduce(base.letters * abs(exponent), self._rank)

    def __len__(self):
        """Length of the reduced word."""
        return len(self._letters)

    def __iter__(self):
        """Iterate over letters."""
        return iter(self._letters)

    def __getitem__(self, item):
        """Slices are words again, single indices are letters."""
        if isinstance(item, slice):
            return Word(self._letters[item], self._rank, reduced=True)
        return self._letters[item]

    def __eq__(self, other):
        """Equality of reduced forms."""
        if not isinstance(other, Word):
            return NotImplemented
        return self._rank == other.rank and self._letters == other.letters

    def __hash__(self):
        """Hash consistent with equality."""
        return hash((self._rank, self._letters))

    def __repr__(self):
        """Return a string representation of the word."""
        return f"Word({self.format()!r}, rank={self._rank})"
