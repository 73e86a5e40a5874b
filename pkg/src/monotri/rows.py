"""Admissible predecessor rows and bottom-up triangle enumeration.

Every triangle class here is defined by conditions between consecutive rows,
so triangles with a prescribed bottom row are generated bottom-up: compute the
admissible rows that may sit directly above a given row, then recurse.  All
enumeration is depth-first in lexicographic order of the successive rows,
which makes every stream deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple

from .triangles import Triangle


class BudgetExceededError(RuntimeError):
    """An enumeration or evaluation exceeded its configured resource budget."""


@dataclass(frozen=True)
class EnumerationLimits:
    """Resource budgets for triangle streams."""

    max_rows_generated: int = 10_000_000
    max_triangles: int = 1_000_000

    def __post_init__(self):
        if self.max_rows_generated <= 0 or self.max_triangles <= 0:
            raise ValueError("enumeration budgets must be positive")


DEFAULT_LIMITS = EnumerationLimits()


class AdmissibleRow(NamedTuple):
    row: tuple[int, ...]
    sc_contribution: int


def row_sign_changes(lower, upper) -> int:
    """Newcomers and sign-changing pairs of ``upper`` against ``lower`` below.

    ``upper`` must be one entry shorter than ``lower``.
    """
    total = 0
    for j in range(len(upper)):
        if lower[j] > upper[j] > lower[j + 1]:
            total += 1
    for j in range(len(upper) - 1):
        if upper[j] == upper[j + 1] == lower[j + 1]:
            total += 1
    return total


def gmt_admissible_rows(lower) -> list[AdmissibleRow]:
    """Rows admissible directly above ``lower`` in a generalized monotone
    triangle, each with its sign-change contribution, in lexicographic order.

    A row l is admissible when the two-row fragment (l above ``lower``)
    satisfies the three class conditions and l contains no three consecutive
    equal entries (such a row admits no further row above it, hence never
    occurs inside a complete triangle).

    The row is filled left to right.  Candidate values for l[j] come from the
    closed interval between lower[j] and lower[j+1]; a value equal to the
    larger element of a strict descent requires an equal entry to its left,
    and a value equal to the smaller element of a strict descent forces the
    next entry to equal it (or is inadmissible at the right edge).  A weakly
    increasing triple below forces l[j-1] < l[j].
    """
    k = tuple(lower)
    m = len(k)
    if m < 2:
        raise ValueError("the lower row needs at least two entries")
    out: list[AdmissibleRow] = []
    last = m - 2

    def fill(j: int, prefix: tuple[int, ...], forced: int | None):
        if j > last:
            out.append(AdmissibleRow(prefix, row_sign_changes(k, prefix)))
            return
        lo, hi = min(k[j], k[j + 1]), max(k[j], k[j + 1])
        candidates = (forced,) if forced is not None else range(lo, hi + 1)
        for v in candidates:
            if not lo <= v <= hi:
                continue
            if v == k[j] and k[j] > k[j + 1] and (j == 0 or prefix[j - 1] != v):
                continue
            if j >= 1 and k[j - 1] <= k[j] <= k[j + 1] and not prefix[j - 1] < v:
                continue
            if j >= 2 and prefix[j - 2] == prefix[j - 1] == v:
                continue
            next_forced = None
            if k[j] > k[j + 1] == v:
                if j == last:
                    continue
                next_forced = v
            fill(j + 1, prefix + (v,), next_forced)

    fill(0, (), None)
    return out


def mt_admissible_rows(lower) -> list[tuple[int, ...]]:
    """Strictly increasing rows interlacing ``lower``: lower[j] <= l[j] <= lower[j+1]."""
    k = tuple(lower)
    m = len(k)
    if m < 2:
        raise ValueError("the lower row needs at least two entries")
    if any(k[j] >= k[j + 1] for j in range(m - 1)):
        raise ValueError("the lower row must be strictly increasing")
    out: list[tuple[int, ...]] = []

    def fill(j: int, prefix: tuple[int, ...]):
        if j == m - 1:
            out.append(prefix)
            return
        lo = k[j] if j == 0 else max(k[j], prefix[j - 1] + 1)
        for v in range(lo, k[j + 1] + 1):
            fill(j + 1, prefix + (v,))

    fill(0, ())
    return out


def dmt_admissible_rows(lower) -> list[tuple[int, ...]]:
    """Rows admissible above ``lower`` in a decreasing monotone triangle.

    Entries satisfy lower[j] >= l[j] >= lower[j+1], no value occurs more than
    twice in l, and no value occurs exactly once in both l and ``lower``.
    """
    k = tuple(lower)
    m = len(k)
    if m < 2:
        raise ValueError("the lower row needs at least two entries")
    if any(k[j] < k[j + 1] for j in range(m - 1)):
        raise ValueError("the lower row must be weakly decreasing")
    out: list[tuple[int, ...]] = []

    def fill(j: int, prefix: tuple[int, ...]):
        if j == m - 1:
            for v in set(prefix):
                if prefix.count(v) == 1 and k.count(v) == 1:
                    return
            out.append(prefix)
            return
        for v in range(k[j + 1], k[j] + 1):
            if prefix.count(v) >= 2:
                continue
            fill(j + 1, prefix + (v,))

    fill(0, ())
    return out


def _stream(bottom, expand: Callable[[tuple[int, ...]], list[tuple[int, ...]]],
            limits: EnumerationLimits) -> Iterator[Triangle]:
    bottom = tuple(bottom)
    if not bottom:
        raise ValueError("the bottom row must not be empty")
    budget = {"rows": limits.max_rows_generated, "triangles": limits.max_triangles}

    def rec(stack: list[tuple[int, ...]]) -> Iterator[Triangle]:
        top = stack[-1]
        if len(top) == 1:
            if budget["triangles"] == 0:
                raise BudgetExceededError("triangle budget exhausted")
            budget["triangles"] -= 1
            yield Triangle(reversed(stack))
            return
        above = expand(top)
        budget["rows"] -= len(above)
        if budget["rows"] < 0:
            raise BudgetExceededError("row generation budget exhausted")
        for row in above:
            stack.append(row)
            yield from rec(stack)
            stack.pop()

    yield from rec([bottom])


def enumerate_gmt(bottom, limits: EnumerationLimits | None = None) -> Iterator[Triangle]:
    """All generalized monotone triangles with the given bottom row,
    depth-first in lexicographic order of the successive rows."""
    return _stream(bottom, lambda row: [ar.row for ar in gmt_admissible_rows(row)],
                   limits or DEFAULT_LIMITS)


def enumerate_mt(bottom, limits: EnumerationLimits | None = None) -> Iterator[Triangle]:
    """All monotone triangles with the given strictly increasing bottom row."""
    bottom = tuple(bottom)
    if any(bottom[j] >= bottom[j + 1] for j in range(len(bottom) - 1)):
        raise ValueError("the bottom row must be strictly increasing")
    return _stream(bottom, mt_admissible_rows, limits or DEFAULT_LIMITS)


def enumerate_dmt(bottom, limits: EnumerationLimits | None = None) -> Iterator[Triangle]:
    """All decreasing monotone triangles with the given weakly decreasing bottom row."""
    bottom = tuple(bottom)
    if any(bottom[j] < bottom[j + 1] for j in range(len(bottom) - 1)):
        raise ValueError("the bottom row must be weakly decreasing")
    # the at-most-twice condition applies to the bottom row itself
    if any(bottom.count(v) > 2 for v in set(bottom)):
        return iter(())
    return _stream(bottom, dmt_admissible_rows, limits or DEFAULT_LIMITS)


def signed_gmt_count(bottom) -> int:
    """Sum of (-1)**sc over all generalized monotone triangles with the given
    bottom row, computed as a running sum without materializing triangles.

    The recursion sums sign-weighted counts over admissible predecessor rows;
    memoization on the row makes repeated subproblems cheap.
    """
    start = tuple(bottom)
    if not start:
        raise ValueError("the bottom row must not be empty")
    memo: dict[tuple[int, ...], int] = {}

    def count(row: tuple[int, ...]) -> int:
        if len(row) == 1:
            return 1
        cached = memo.get(row)
        if cached is not None:
            return cached
        total = 0
        for sub, sc in gmt_admissible_rows(row):
            term = count(sub)
            total += term if sc % 2 == 0 else -term
        memo[row] = total
        return total

    return count(start)
