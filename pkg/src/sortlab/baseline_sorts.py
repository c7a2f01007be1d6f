"""The six baseline sorting algorithms measured alongside heapsort.

Every sort mutates its input list, honors ascending/descending order, and
reports costs through :class:`~sortlab.counting.OpCounters`. Comparator
direction is handled with :mod:`operator` functions so tagged elements
(key + payload) travel through unchanged for stability experiments.
"""

from __future__ import annotations

import operator
import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .counting import OpCounters
from .uhs_sort import SortOrder


class AlgorithmId(Enum):
    """Closed set of measured algorithms."""

    INSERTION = "insertion"
    MERGE = "merge"
    QUICK = "quick"
    BUCKET = "bucket"
    RADIX = "radix"
    BUBBLE = "bubble"
    UHS = "uhs"


class PivotRule(Enum):
    LAST_ELEMENT = "last"
    MEDIAN_OF_THREE = "median3"
    RANDOM_SEEDED = "random"


class KeyDomainError(ValueError):
    """A key falls outside the domain an algorithm requires."""


@dataclass(frozen=True)
class RadixPlan:
    """Digit decomposition for radix sort: ``digits`` passes over base ``base``."""

    base: int = 256
    digits: int = 1

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"radix base must be >= 2, got {self.base}")
        if self.digits < 1:
            raise ValueError(f"radix digit count must be >= 1, got {self.digits}")

    @property
    def key_limit(self) -> int:
        """Exclusive upper bound on sortable keys: base ** digits."""
        return self.base**self.digits

    @classmethod
    def for_max_key(cls, max_key: int, base: int = 256) -> "RadixPlan":
        """Smallest plan covering keys 0..max_key (byte-wise by default)."""
        if max_key < 0:
            raise KeyDomainError(f"radix keys must be non-negative, got max {max_key}")
        if base == 256:
            digits = max(1, (int(max_key).bit_length() + 7) // 8)
        else:
            digits = 1
            while base**digits <= max_key:
                digits += 1
        return cls(base=base, digits=digits)


def _after(order: SortOrder) -> Callable:
    """Strict 'must come later' comparator for the requested order."""
    return operator.gt if order is SortOrder.ASCENDING else operator.lt


def _not_after(order: SortOrder) -> Callable:
    """Non-strict 'may stay first' comparator; ties keep the earlier element."""
    return operator.le if order is SortOrder.ASCENDING else operator.ge


def _insertion_loop(a: list, gt: Callable) -> tuple[int, int]:
    """Insertion-sort ``a`` in place; returns (comparisons, element_moves)."""
    cmp = moves = 0
    for i in range(1, len(a)):
        x = a[i]
        j = i - 1
        while j >= 0:
            cmp += 1
            if gt(a[j], x):
                a[j + 1] = a[j]
                moves += 1
                j -= 1
            else:
                break
        if j + 1 != i:
            a[j + 1] = x
            moves += 1
    return cmp, moves


def insertion_sort(
    elements: list,
    order: SortOrder = SortOrder.ASCENDING,
    counters: OpCounters | None = None,
) -> None:
    """Stable in-place insertion sort. Best case n-1 comparisons, worst n(n-1)/2."""
    cmp, moves = _insertion_loop(elements, _after(order))
    if counters is not None:
        counters.add(comparisons=cmp, element_moves=moves)


def bubble_sort(
    elements: list,
    order: SortOrder = SortOrder.ASCENDING,
    counters: OpCounters | None = None,
) -> None:
    """Stable in-place bubble sort with early exit on a swap-free pass."""
    a = elements
    gt = _after(order)
    cmp = swaps = 0
    end = len(a) - 1
    while end > 0:
        swapped = False
        for j in range(end):
            cmp += 1
            if gt(a[j], a[j + 1]):
                a[j], a[j + 1] = a[j + 1], a[j]
                swaps += 1
                swapped = True
        if not swapped:
            break
        end -= 1
    if counters is not None:
        counters.add(comparisons=cmp, swaps=swaps)


def merge_sort(
    elements: list,
    order: SortOrder = SortOrder.ASCENDING,
    counters: OpCounters | None = None,
) -> None:
    """Stable top-down merge sort using one reusable scratch buffer of n slots.

    The scratch allocation is metered once, so the auxiliary peak is exactly n.
    """
    n = len(elements)
    if n <= 1:
        return
    if counters is None:
        counters = OpCounters()
    le = _not_after(order)
    a = elements
    cmp = moves = peak = 0

    with counters.scratch(n):
        buf = [None] * n

        def rec(lo: int, hi: int, depth: int) -> None:
            nonlocal cmp, moves, peak
            if depth > peak:
                peak = depth
            if hi - lo <= 1:
                return
            mid = (lo + hi) // 2
            rec(lo, mid, depth + 1)
            rec(mid, hi, depth + 1)
            width = mid - lo
            buf[0:width] = a[lo:mid]
            moves += width
            i = 0
            j = mid
            k = lo
            while i < width and j < hi:
                cmp += 1
                x = buf[i]
                y = a[j]
                if le(x, y):
                    a[k] = x
                    i += 1
                else:
                    a[k] = y
                    j += 1
                k += 1
                moves += 1
            while i < width:
                a[k] = buf[i]
                i += 1
                k += 1
                moves += 1
            # any right-run leftovers are already in place

        rec(0, n, 1)

    counters.add(comparisons=cmp, element_moves=moves)
    counters.note_recursion(peak)


def _median3_index(a: list, lo: int, mid: int, hi: int, gt: Callable) -> tuple[int, int]:
    """Index of the median of a[lo], a[mid], a[hi] plus comparisons spent."""
    x, y, z = a[lo], a[mid], a[hi]
    cmp = 1
    if gt(x, y):
        cmp += 1
        if gt(y, z):
            return mid, cmp
        cmp += 1
        return (hi, cmp) if gt(x, z) else (lo, cmp)
    cmp += 1
    if gt(x, z):
        return lo, cmp
    cmp += 1
    return (hi, cmp) if gt(y, z) else (mid, cmp)


def quicksort(
    elements: list,
    order: SortOrder = SortOrder.ASCENDING,
    counters: OpCounters | None = None,
    pivot: PivotRule = PivotRule.RANDOM_SEEDED,
    seed: int = 0,
) -> None:
    """In-place quicksort with Lomuto partition and a configurable pivot rule.

    The smaller side of each partition is recursed and the larger side is
    handled by the loop, so the metered call depth stays within log2(n) + 1
    even on adversarial input. With ``LAST_ELEMENT`` on already-sorted input
    the comparison count is exactly n(n-1)/2.
    """
    n = len(elements)
    if n <= 1:
        return
    if counters is None:
        counters = OpCounters()
    a = elements
    le = _not_after(order)
    gt = _after(order)
    rng = random.Random(seed) if pivot is PivotRule.RANDOM_SEEDED else None
    cmp = swaps = peak = 0

    def rec(lo: int, hi: int, depth: int) -> None:
        nonlocal cmp, swaps, peak
        if depth > peak:
            peak = depth
        while lo < hi:
            if rng is not None:
                k = rng.randint(lo, hi)
                if k != hi:
                    a[k], a[hi] = a[hi], a[k]
                    swaps += 1
            elif pivot is PivotRule.MEDIAN_OF_THREE and hi - lo >= 2:
                m, c = _median3_index(a, lo, (lo + hi) // 2, hi, gt)
                cmp += c
                if m != hi:
                    a[m], a[hi] = a[hi], a[m]
                    swaps += 1
            p = a[hi]
            i = lo
            for j in range(lo, hi):
                cmp += 1
                if le(a[j], p):
                    if i != j:
                        a[i], a[j] = a[j], a[i]
                        swaps += 1
                    i += 1
            if i != hi:
                a[i], a[hi] = a[hi], a[i]
                swaps += 1
            if i - lo < hi - i:
                if i - lo > 0:
                    rec(lo, i - 1, depth + 1)
                lo = i + 1
            else:
                if hi - i > 0:
                    rec(i + 1, hi, depth + 1)
                hi = i - 1

    rec(0, n - 1, 1)
    counters.add(comparisons=cmp, swaps=swaps)
    counters.note_recursion(peak)


def bucket_sort(
    elements: list,
    order: SortOrder = SortOrder.ASCENDING,
    counters: OpCounters | None = None,
    bucket_count: int | None = None,
    key: Callable | None = None,
) -> None:
    """Stable bucket sort for keys in [0, 1); linear on uniformly spread keys.

    Elements scatter into ``bucket_count`` buckets (default n) by key value,
    each bucket is insertion-sorted, and buckets are concatenated back.
    ``key`` extracts the numeric key when elements are key/payload pairs.
    """
    n = len(elements)
    if n == 0:
        return
    if counters is None:
        counters = OpCounters()
    get = key or (lambda v: v)
    for x in elements:
        v = get(x)
        if not 0 <= v < 1:
            raise KeyDomainError(f"bucket sort key {v!r} outside [0, 1)")
    nbuckets = n if bucket_count is None else bucket_count
    if nbuckets < 1:
        raise ValueError(f"bucket_count must be >= 1, got {nbuckets}")
    gt = _after(order)
    cmp = moves = 0

    with counters.scratch(n + nbuckets):
        buckets: list[list] = [[] for _ in range(nbuckets)]
        top = nbuckets - 1
        for x in elements:
            idx = int(get(x) * nbuckets)
            buckets[idx if idx < top else top].append(x)
            moves += 1
        ordered = buckets if order is SortOrder.ASCENDING else reversed(buckets)
        k = 0
        for bucket in ordered:
            c, m = _insertion_loop(bucket, gt)
            cmp += c
            moves += m
            for x in bucket:
                elements[k] = x
                k += 1
                moves += 1

    counters.add(comparisons=cmp, element_moves=moves)


def radix_sort(
    elements: list,
    order: SortOrder = SortOrder.ASCENDING,
    counters: OpCounters | None = None,
    plan: RadixPlan | None = None,
    key: Callable | None = None,
) -> None:
    """Stable LSD radix sort for non-negative integer keys below base**digits.

    Each digit pass runs a counting sort: tally digit occurrences into a
    base-sized counting array, turn tallies into starting offsets, then place
    every element at its new position. Placements are the only counted moves,
    so the total is exactly digits * n, and no key comparison ever happens.
    """
    n = len(elements)
    if n == 0:
        return
    if counters is None:
        counters = OpCounters()
    get = key or (lambda v: v)
    if plan is None:
        plan = RadixPlan.for_max_key(max(get(x) for x in elements))
    limit = plan.key_limit
    for x in elements:
        v = get(x)
        if not isinstance(v, int):
            raise KeyDomainError(f"radix sort requires integer keys, got {v!r}")
        if not 0 <= v < limit:
            raise KeyDomainError(f"radix key {v} outside 0..{limit - 1} for plan {plan}")
    base = plan.base
    pow2 = base & (base - 1) == 0
    bits = base.bit_length() - 1
    moves = 0
    digit_order = range(base) if order is SortOrder.ASCENDING else range(base - 1, -1, -1)

    for p in range(plan.digits):
        with counters.scratch(n + base):
            src = elements[:]  # staging mirror; same positions, not a move
            counts = [0] * base
            if pow2:
                shift = p * bits
                mask = base - 1
                for x in src:
                    counts[(get(x) >> shift) & mask] += 1
                total = 0
                for d in digit_order:
                    counts[d], total = total, total + counts[d]
                for x in src:
                    d = (get(x) >> shift) & mask
                    elements[counts[d]] = x
                    counts[d] += 1
                    moves += 1
            else:
                div = base**p
                for x in src:
                    counts[(get(x) // div) % base] += 1
                total = 0
                for d in digit_order:
                    counts[d], total = total, total + counts[d]
                for x in src:
                    d = (get(x) // div) % base
                    elements[counts[d]] = x
                    counts[d] += 1
                    moves += 1

    counters.add(element_moves=moves)
