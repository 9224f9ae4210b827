"""Numerical tests on candidate Hilbert functions (O-sequences, unimodality,
SI shape, and the shapes forced by the Lefschetz properties)."""

from __future__ import annotations

import math


def macaulay_bound(h: int, d: int) -> int:
    """Largest admissible value in degree d+1 given value h in degree d."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    if h < 0:
        raise ValueError("value must be >= 0")
    rem = h
    bound = 0
    i = d
    while rem > 0:
        k = i
        while math.comb(k + 1, i) <= rem:
            k += 1
        bound += math.comb(k + 1, i + 1)
        rem -= math.comb(k, i)
        i -= 1
    return bound


def is_O_sequence(seq) -> bool:
    """Macaulay growth: starts at 1, s[1] arbitrary, then bounded."""
    seq = list(seq)
    if not seq:
        return True
    if seq[0] != 1 or any(v < 0 for v in seq):
        return False
    for d in range(1, len(seq) - 1):
        if seq[d + 1] > macaulay_bound(seq[d], d):
            return False
    return True


def first_difference(seq) -> list:
    seq = list(seq)
    return [seq[0]] + [seq[i] - seq[i - 1] for i in range(1, len(seq))]


def is_differentiable_O(seq) -> bool:
    """The first difference is again an O-sequence (never negative)."""
    seq = list(seq)
    if not seq:
        return True
    diff = first_difference(seq)
    if any(v < 0 for v in diff):
        return False
    return is_O_sequence(diff)


def is_unimodal(seq) -> bool:
    seq = list(seq)
    if len(seq) <= 1:
        return True
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq):
        if seq[i + 1] > seq[i]:
            return False
        i += 1
    return True


def is_strictly_unimodal(seq) -> bool:
    """Unimodal, and strictly decreasing once the descent starts."""
    seq = list(seq)
    if len(seq) <= 1:
        return True
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq):
        if seq[i] == 0:
            if seq[i + 1] != 0:
                return False
        elif seq[i + 1] >= seq[i]:
            return False
        i += 1
    return True


def is_SI_sequence(seq) -> bool:
    """Symmetric with a differentiable-O first half."""
    seq = list(seq)
    if len(seq) <= 1:
        return True
    if seq != seq[::-1]:
        return False
    half = seq[:(len(seq) + 1) // 2]
    return is_differentiable_O(half)


def wlp_hilbert_shape(seq) -> bool:
    """Attainability as the Hilbert function of an artinian algebra with
    WLP: the positive part of the first difference is an O-sequence and
    the difference never turns positive again afterwards."""
    seq = list(seq)
    if len(seq) <= 1:
        return True
    if seq[0] != 1 or any(v <= 0 for v in seq):
        return False
    diff = first_difference(seq)
    t = 0
    while t + 1 < len(diff) and diff[t + 1] > 0:
        t += 1
    if not is_O_sequence(diff[:t + 1]):
        return False
    return all(v <= 0 for v in diff[t + 1:])


def hausel_halfcheck(seq) -> bool:
    """Differentiable-O test on the lower half (through one past the
    midpoint), the shape forced on level algebras in characteristic 0."""
    seq = list(seq)
    if not seq:
        return True
    e = len(seq) - 1
    return is_differentiable_O(seq[:(e - 1) // 2 + 2])
