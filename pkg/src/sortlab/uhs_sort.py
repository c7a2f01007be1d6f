"""In-place heapsort: build a max-heap, then repeatedly swap the root with
the last live element, shrink the heap boundary, and sift the new root down.

The array is split into a heap prefix and a sorted suffix; each pass moves
one more extreme element across the boundary until one element remains.
Ascending output uses a max-at-root heap, descending uses min-at-root, so
no reversal pass (and no auxiliary storage) is ever needed.
"""

from __future__ import annotations

import operator
from enum import Enum
from typing import Callable

from .counting import OpCounters
from .heap_core import HeapOrder, _sift_down_loop, build, is_heap


class SortOrder(Enum):
    ASCENDING = "asc"
    DESCENDING = "desc"


def heap_order_for(order: SortOrder) -> HeapOrder:
    """Heap direction that leaves extracted elements in final position."""
    return HeapOrder.MAX_AT_ROOT if order is SortOrder.ASCENDING else HeapOrder.MIN_AT_ROOT


def uhs_sort(
    elements: list,
    order: SortOrder = SortOrder.ASCENDING,
    counters: OpCounters | None = None,
    checkpoint: Callable[[list, int], None] | None = None,
) -> None:
    """Sort ``elements`` in place using zero auxiliary element slots.

    The root-vs-last exchange counts as one swap and zero comparisons.
    ``checkpoint``, when given, is called as ``checkpoint(elements, heap_size)``
    after every extraction so tests can audit the prefix-heap/suffix-sorted
    loop invariant mid-sort.
    """
    n = len(elements)
    if n <= 1:
        return
    if counters is None:
        counters = OpCounters()
    heap = build(elements, heap_order_for(order), counters)
    a = elements
    gt = heap._gt
    cmp = swaps = 0
    size = n
    while size > 1:
        size -= 1
        a[0], a[size] = a[size], a[0]
        swaps += 1
        c, s = _sift_down_loop(a, size, 0, gt)
        cmp += c
        swaps += s
        if checkpoint is not None:
            heap.heap_size = size
            checkpoint(a, size)
    heap.heap_size = 0
    counters.add(comparisons=cmp, swaps=swaps)


def sorted_region_invariant(elements, heap_size: int, order: SortOrder = SortOrder.ASCENDING) -> bool:
    """Mid-sort checkpoint: heap prefix, sorted suffix, suffix dominates prefix.

    True iff ``elements[0:heap_size]`` is a valid heap for ``order``,
    ``elements[heap_size:]`` is sorted per ``order``, and every suffix element
    dominates every prefix element (>= for ascending, <= for descending).
    """
    n = len(elements)
    if heap_size > n:
        raise ValueError(f"heap_size {heap_size} exceeds length {n}")
    if not is_heap(elements, heap_size, heap_order_for(order)):
        return False
    suffix_ok = operator.le if order is SortOrder.ASCENDING else operator.ge
    for i in range(heap_size, n - 1):
        if not suffix_ok(elements[i], elements[i + 1]):
            return False
    if 0 < heap_size < n:
        prefix = elements[:heap_size]
        boundary = max(prefix) if order is SortOrder.ASCENDING else min(prefix)
        if not suffix_ok(boundary, elements[heap_size]):
            return False
    return True
