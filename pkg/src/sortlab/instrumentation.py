"""Measurement harness: counted dispatch, stability probing, build-cost audit.

`counted_sort` is the single entry point the benchmarks and the CLI use to run
any algorithm with a fresh operation ledger. `stability_check` hunts for the
smallest reordering witness an algorithm admits, and `build_cost_audit`
confirms the linear bound on bottom-up heap construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, NamedTuple, Sequence

from .baseline_sorts import (
    AlgorithmId,
    PivotRule,
    RadixPlan,
    bubble_sort,
    bucket_sort,
    insertion_sort,
    merge_sort,
    quicksort,
    radix_sort,
)
from .counting import OpCounters
from .heap_core import build, is_heap
from .uhs_sort import SortOrder, uhs_sort

__all__ = [
    "OpCounters",
    "TaggedElement",
    "StabilityVerdict",
    "BuildCostRow",
    "STABILITY_EXPECTED",
    "counted_sort",
    "stability_check",
    "build_cost_audit",
]

# Stability each algorithm is designed to provide; `stability_check` must agree.
STABILITY_EXPECTED: dict[AlgorithmId, bool] = {
    AlgorithmId.INSERTION: True,
    AlgorithmId.MERGE: True,
    AlgorithmId.QUICK: False,
    AlgorithmId.BUCKET: True,
    AlgorithmId.RADIX: True,
    AlgorithmId.BUBBLE: True,
    AlgorithmId.UHS: False,
}


class TaggedElement:
    """A sort key plus the index it started at; orders by key alone.

    Sorting a list of these reveals whether equal keys kept their original
    relative order -- the payload rides along without influencing any
    comparison.
    """

    __slots__ = ("key", "origin")

    def __init__(self, key, origin: int):
        self.key = key
        self.origin = origin

    @staticmethod
    def _k(other):
        return other.key if isinstance(other, TaggedElement) else other

    def __lt__(self, other):
        return self.key < self._k(other)

    def __le__(self, other):
        return self.key <= self._k(other)

    def __gt__(self, other):
        return self.key > self._k(other)

    def __ge__(self, other):
        return self.key >= self._k(other)

    def __eq__(self, other):
        return self.key == self._k(other)

    def __repr__(self):
        return f"<{self.key}:{self.origin}>"


@dataclass(frozen=True)
class StabilityVerdict:
    algorithm: AlgorithmId
    stable: bool
    trials: int
    witness: list | None = None

    def describe(self) -> str:
        if self.stable:
            return f"{self.algorithm.value}: STABLE(trials={self.trials})"
        return f"{self.algorithm.value}: UNSTABLE witness={self.witness}"


class BuildCostRow(NamedTuple):
    n: int
    comparisons: int
    bound: int

    @property
    def ok(self) -> bool:
        return self.comparisons <= self.bound


def counted_sort(
    algorithm: AlgorithmId,
    elements: list,
    order: SortOrder = SortOrder.ASCENDING,
    *,
    seed: int = 0,
    pivot: PivotRule = PivotRule.RANDOM_SEEDED,
    bucket_count: int | None = None,
    radix_plan: RadixPlan | None = None,
    key: Callable | None = None,
) -> tuple[list, OpCounters]:
    """Sort ``elements`` in place with ``algorithm`` under a fresh counter set.

    Returns the (mutated) list and the counters. ``key`` is honored only by
    the distribution sorts (bucket, radix); the comparison sorts order whole
    elements.
    """
    counters = OpCounters()
    if key is not None and algorithm not in (AlgorithmId.BUCKET, AlgorithmId.RADIX):
        raise ValueError(f"{algorithm.value} does not take a key function")
    if algorithm is AlgorithmId.INSERTION:
        insertion_sort(elements, order, counters)
    elif algorithm is AlgorithmId.MERGE:
        merge_sort(elements, order, counters)
    elif algorithm is AlgorithmId.QUICK:
        quicksort(elements, order, counters, pivot=pivot, seed=seed)
    elif algorithm is AlgorithmId.BUCKET:
        bucket_sort(elements, order, counters, bucket_count=bucket_count, key=key)
    elif algorithm is AlgorithmId.RADIX:
        radix_sort(elements, order, counters, plan=radix_plan, key=key)
    elif algorithm is AlgorithmId.BUBBLE:
        bubble_sort(elements, order, counters)
    elif algorithm is AlgorithmId.UHS:
        uhs_sort(elements, order, counters)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")
    return elements, counters


def _tagged_key(t: TaggedElement):
    return t.key


def _stability_breach(arr: Sequence[TaggedElement]) -> bool:
    for i in range(1, len(arr)):
        prev, cur = arr[i - 1], arr[i]
        if prev.key > cur.key:
            raise RuntimeError(f"output not sorted at {i}: {arr!r}")
        if prev.key == cur.key and prev.origin > cur.origin:
            return True
    return False


def _run_tagged(
    algorithm: AlgorithmId, keys: Sequence, seed: int, pivot: PivotRule
) -> list[TaggedElement]:
    arr = [TaggedElement(k, i) for i, k in enumerate(keys)]
    key = _tagged_key if algorithm in (AlgorithmId.BUCKET, AlgorithmId.RADIX) else None
    counted_sort(algorithm, arr, seed=seed, pivot=pivot, key=key)
    return arr


def stability_check(
    algorithm: AlgorithmId,
    trials: int = 10_000,
    max_n: int = 64,
    seed: int = 0,
    pivot: PivotRule = PivotRule.LAST_ELEMENT,
) -> StabilityVerdict:
    """Search for a key sequence the algorithm reorders among equal keys.

    Phase one exhausts every duplicate-bearing sequence over three key values
    up to length six, so an unstable algorithm yields a minimal witness.
    Phase two hammers a stable one with ``trials`` seeded random
    duplicate-heavy arrays up to ``max_n`` elements. Any witness found is
    re-run before being reported.
    """
    examined = 0

    def adapt(raw: Sequence[int], span: int) -> list:
        if algorithm is AlgorithmId.BUCKET:
            return [r / span for r in raw]
        return list(raw)

    for n in range(2, 7):
        for combo in product(range(3), repeat=n):
            if len(set(combo)) == n:
                continue  # all-distinct keys cannot witness anything
            keys = adapt(combo, 4)
            examined += 1
            if _stability_breach(_run_tagged(algorithm, keys, seed, pivot)):
                if not _stability_breach(_run_tagged(algorithm, keys, seed, pivot)):
                    raise RuntimeError(f"witness {keys!r} did not reproduce")
                return StabilityVerdict(algorithm, False, examined, list(keys))

    rng = random.Random(seed)
    for _ in range(trials):
        size = rng.randint(2, max_n)
        top = max(1, size // 4)
        raw = [rng.randint(0, top) for _ in range(size)]
        keys = adapt(raw, top + 1)
        examined += 1
        if _stability_breach(_run_tagged(algorithm, keys, seed, pivot)):
            if not _stability_breach(_run_tagged(algorithm, keys, seed, pivot)):
                raise RuntimeError(f"witness {keys!r} did not reproduce")
            return StabilityVerdict(algorithm, False, examined, keys)

    return StabilityVerdict(algorithm, True, examined, None)


def build_cost_audit(n_values: Sequence[int], seed: int = 0) -> list[BuildCostRow]:
    """Measure bottom-up heap construction against the 2(n-1) comparison bound.

    Each size gets a seeded shuffle of 0..n-1; the resulting array must
    satisfy the heap property, and the row records how the comparison count
    sits against the linear bound.
    """
    rng = random.Random(seed)
    rows = []
    for n in n_values:
        arr = list(range(n))
        rng.shuffle(arr)
        counters = OpCounters()
        build(arr, counters=counters)
        if not is_heap(arr):
            raise RuntimeError(f"construction broke the heap property at n={n}")
        rows.append(BuildCostRow(n, counters.comparisons, 2 * (n - 1) if n > 1 else 0))
    return rows
