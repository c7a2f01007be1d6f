"""Binary max/min heap over a contiguous element sequence.

The heap occupies ``elements[0:heap_size]`` as a complete binary tree in
breadth-first order (0-based):

    left(i) = 2i + 1, right(i) = 2i + 2, parent(i) = (i - 1) // 2

Every parent dominates its children: ``>=`` for a max-at-root heap, ``<=``
for min-at-root. Slots at or beyond ``heap_size`` belong to the backing
list but are unconstrained.
"""

from __future__ import annotations

import operator
from enum import Enum
from typing import Callable, Iterable

from .counting import OpCounters


class HeapOrder(Enum):
    MAX_AT_ROOT = "max"
    MIN_AT_ROOT = "min"


class EmptyHeapError(IndexError):
    """Raised by peek/pop on a heap with no live elements."""


class HeapIndexError(IndexError):
    """Raised when an index falls outside the live heap prefix."""


# Test-only fault switch: when set, sift_down ignores right children, which
# corrupts the order invariant in a way is_heap detects. Used by the
# verification harness to prove its own checks can catch an injected bug.
_FAULT_SIFT_DOWN_BLIND_RIGHT = False


def left(i: int) -> int:
    """Index of the left child of node ``i``."""
    if i < 0:
        raise ValueError(f"negative node index {i}")
    return 2 * i + 1


def right(i: int) -> int:
    """Index of the right child of node ``i``."""
    if i < 0:
        raise ValueError(f"negative node index {i}")
    return 2 * i + 2


def parent(i: int) -> int:
    """Index of the parent of node ``i``; the root has none."""
    if i <= 0:
        raise ValueError(f"node {i} has no parent")
    return (i - 1) // 2


def node_height(i: int, n: int) -> int:
    """Height of node ``i`` in a complete tree of ``n`` nodes (leaves are 0).

    In a left-filled complete tree the leftmost path of any subtree is a
    deepest path, so the height is the length of the chain of left children
    that stays inside the tree.
    """
    if not 0 <= i < n:
        raise ValueError(f"node {i} not in a tree of {n} nodes")
    h = 0
    j = 2 * i + 1
    while j < n:
        h += 1
        j = 2 * j + 1
    return h


def is_heap(elements, size: int | None = None, order: HeapOrder = HeapOrder.MAX_AT_ROOT) -> bool:
    """True iff every parent dominates its in-range children. Read-only O(n) scan."""
    n = len(elements) if size is None else size
    if n > len(elements):
        raise ValueError(f"size {n} exceeds backing length {len(elements)}")
    dominates = operator.ge if order is HeapOrder.MAX_AT_ROOT else operator.le
    for i in range(1, n):
        if not dominates(elements[(i - 1) >> 1], elements[i]):
            return False
    return True


def _strict_dominance(order: HeapOrder) -> Callable:
    return operator.gt if order is HeapOrder.MAX_AT_ROOT else operator.lt


def _sift_down_loop(a: list, n: int, i: int, gt: Callable) -> tuple[int, int]:
    """Let a[i] descend until both children are dominated.

    Returns (comparisons, swaps). At most two comparisons per level: best
    child vs current, then right child vs best. Ties never swap, and when
    both children tie while dominating the parent the left child wins.
    """
    cmp = swaps = 0
    blind_right = _FAULT_SIFT_DOWN_BLIND_RIGHT
    while True:
        l = 2 * i + 1
        if l >= n:
            break
        best = i
        cmp += 1
        if gt(a[l], a[best]):
            best = l
        r = l + 1
        if r < n and not blind_right:
            cmp += 1
            if gt(a[r], a[best]):
                best = r
        if best == i:
            break
        a[i], a[best] = a[best], a[i]
        swaps += 1
        i = best
    return cmp, swaps


class Heap:
    """Mutable heap state: backing list, live size, and direction.

    The constructor trusts that ``elements[0:heap_size]`` already satisfies
    the order invariant; use :func:`build` to heapify an arbitrary sequence.
    The backing list is aliased, never copied.
    """

    __slots__ = ("elements", "heap_size", "order", "_gt")

    def __init__(
        self,
        elements: list | None = None,
        order: HeapOrder = HeapOrder.MAX_AT_ROOT,
        heap_size: int | None = None,
    ):
        self.elements = [] if elements is None else elements
        self.heap_size = len(self.elements) if heap_size is None else heap_size
        if not 0 <= self.heap_size <= len(self.elements):
            raise ValueError(f"heap_size {self.heap_size} outside 0..{len(self.elements)}")
        self.order = order
        self._gt = _strict_dominance(order)

    def __len__(self) -> int:
        return self.heap_size

    def __repr__(self) -> str:
        live = self.elements[: self.heap_size]
        return f"Heap({live!r}, order={self.order.value})"

    def peek(self):
        """Dominating element (max for max-at-root) without mutation."""
        if self.heap_size == 0:
            raise EmptyHeapError("peek on empty heap")
        return self.elements[0]

    def sift_down(self, i: int, counters: OpCounters | None = None) -> None:
        """Restore the order invariant at ``i``, assuming both subtrees hold it."""
        if not 0 <= i < self.heap_size:
            raise HeapIndexError(f"index {i} outside live heap of size {self.heap_size}")
        cmp, swaps = _sift_down_loop(self.elements, self.heap_size, i, self._gt)
        if counters is not None:
            counters.add(comparisons=cmp, swaps=swaps)

    def _sift_up(self, i: int, counters: OpCounters | None = None) -> int:
        """Let a[i] ascend while it strictly dominates its parent; returns its final index."""
        a = self.elements
        gt = self._gt
        cmp = swaps = 0
        while i > 0:
            p = (i - 1) >> 1
            cmp += 1
            if gt(a[i], a[p]):
                a[i], a[p] = a[p], a[i]
                swaps += 1
                i = p
            else:
                break
        if counters is not None:
            counters.add(comparisons=cmp, swaps=swaps)
        return i

    def push(self, x, counters: OpCounters | None = None) -> None:
        """Insert ``x``: append (reusing any slack slot) then sift up."""
        a = self.elements
        if self.heap_size == len(a):
            a.append(x)
        else:
            a[self.heap_size] = x
        self.heap_size += 1
        if counters is not None:
            counters.add(element_moves=1)
        self._sift_up(self.heap_size - 1, counters)

    def pop_root(self, counters: OpCounters | None = None):
        """Remove and return the dominating element."""
        if self.heap_size == 0:
            raise EmptyHeapError("pop_root on empty heap")
        a = self.elements
        last = self.heap_size - 1
        if last > 0:
            a[0], a[last] = a[last], a[0]
            if counters is not None:
                counters.add(swaps=1)
        self.heap_size = last
        if last > 1:
            self.sift_down(0, counters)
        return a[last]

    def remove_at(self, i: int, counters: OpCounters | None = None):
        """Remove and return the element at live index ``i``.

        The last live element takes its place and is sifted up, or down if
        sifting up did not move it.
        """
        if not 0 <= i < self.heap_size:
            raise HeapIndexError(f"index {i} outside live heap of size {self.heap_size}")
        a = self.elements
        last = self.heap_size - 1
        removed = a[i]
        self.heap_size = last
        if i == last:
            return removed
        a[i], a[last] = a[last], a[i]
        if counters is not None:
            counters.add(swaps=1)
        if self._sift_up(i, counters) == i:
            self.sift_down(i, counters)
        return removed


def build(
    elements: list,
    order: HeapOrder = HeapOrder.MAX_AT_ROOT,
    counters: OpCounters | None = None,
) -> Heap:
    """Heapify ``elements`` in place bottom-up and return the resulting Heap.

    Sift-down runs at indices n//2 - 1 down to 0; everything after the last
    internal node is a one-element heap already. Total comparisons are at
    most 2*(n - 1) because node heights in a complete tree sum to n - 1.
    """
    heap = Heap(elements, order, heap_size=0)
    n = len(elements)
    heap.heap_size = n
    gt = heap._gt
    cmp = swaps = 0
    for i in range(n // 2 - 1, -1, -1):
        c, s = _sift_down_loop(elements, n, i, gt)
        cmp += c
        swaps += s
    if counters is not None:
        counters.add(comparisons=cmp, swaps=swaps)
    return heap


def heapify_iterable(values: Iterable, order: HeapOrder = HeapOrder.MAX_AT_ROOT) -> Heap:
    """Convenience: copy ``values`` into a fresh list and build a heap over it."""
    return build(list(values), order)
