import heapq
import math
import random
from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sortlab.counting import OpCounters
from sortlab.heap_core import (
    EmptyHeapError,
    Heap,
    HeapIndexError,
    HeapOrder,
    build,
    heapify_iterable,
    is_heap,
    left,
    node_height,
    parent,
    right,
)
from sortlab.instrumentation import TaggedElement


class TestIndexMath:
    def test_child_formulas_and_roundtrip(self):
        for i in range(1001):
            assert left(i) == 2 * i + 1
            assert right(i) == 2 * i + 2
            assert right(i) == left(i) + 1
            assert parent(left(i)) == i
            assert parent(right(i)) == i

    def test_every_node_maps_to_exactly_one_parent(self):
        # indices 1..n partition into left-children (odd) and right-children (even)
        for j in range(1, 1001):
            p = parent(j)
            assert j in (left(p), right(p))

    def test_root_has_no_parent(self):
        with pytest.raises(ValueError):
            parent(0)
        with pytest.raises(ValueError):
            parent(-3)

    def test_negative_indices_rejected(self):
        with pytest.raises(ValueError):
            left(-1)
        with pytest.raises(ValueError):
            right(-1)


class TestNodeHeight:
    def _oracle(self, i: int, n: int) -> int:
        kids = [c for c in (left(i), right(i)) if c < n]
        if not kids:
            return 0
        return 1 + max(self._oracle(c, n) for c in kids)

    def test_matches_recursive_oracle(self):
        for n in range(1, 130):
            for i in range(n):
                assert node_height(i, n) == self._oracle(i, n), (i, n)

    def test_root_height_is_floor_log2(self):
        for n in range(1, 600):
            assert node_height(0, n) == int(math.log2(n))

    def test_heights_sum_below_n(self):
        # the linear build bound rests on this: total height <= n - 1
        for n in [1, 2, 3, 4, 5, 16, 100, 1000, 4096]:
            total = sum(node_height(i, n) for i in range(n))
            assert total <= n - 1 or n == 1

    def test_out_of_tree_rejected(self):
        with pytest.raises(ValueError):
            node_height(3, 3)
        with pytest.raises(ValueError):
            node_height(-1, 3)
        with pytest.raises(ValueError):
            node_height(0, 0)


def _ancestor_oracle(a, order):
    """True iff every node dominates all its descendants (checked via ancestor walks)."""
    ok = (lambda x, y: x >= y) if order is HeapOrder.MAX_AT_ROOT else (lambda x, y: x <= y)
    for j in range(1, len(a)):
        k = j
        while k > 0:
            k = (k - 1) // 2
            if not ok(a[k], a[j]):
                return False
    return True


class TestIsHeap:
    @pytest.mark.parametrize("order", list(HeapOrder))
    def test_matches_ancestor_oracle_on_permutations(self, order):
        for n in range(7):
            for perm in permutations(range(n)):
                a = list(perm)
                assert is_heap(a, order=order) == _ancestor_oracle(a, order), a

    @pytest.mark.parametrize("order", list(HeapOrder))
    def test_matches_ancestor_oracle_with_duplicates(self, order):
        for n in (4, 7, 10):
            for combo in product((0, 1), repeat=n):
                a = list(combo)
                assert is_heap(a, order=order) == _ancestor_oracle(a, order), a

    def test_prefix_size_argument(self):
        a = [9, 5, 7, 100, 100]
        assert is_heap(a, 3)
        assert not is_heap(a)

    def test_size_beyond_backing_rejected(self):
        with pytest.raises(ValueError):
            is_heap([1, 2], 3)

    def test_trivial_cases(self):
        assert is_heap([])
        assert is_heap([42])
        assert is_heap([3, 3, 3, 3])


class TestSiftDown:
    def test_single_level_left(self):
        h = Heap([1, 5, 3])
        c = OpCounters()
        h.sift_down(0, c)
        assert h.elements == [5, 1, 3]
        assert (c.comparisons, c.swaps) == (2, 1)

    def test_single_level_right(self):
        h = Heap([1, 2, 5])
        c = OpCounters()
        h.sift_down(0, c)
        assert h.elements == [5, 2, 1]
        assert (c.comparisons, c.swaps) == (2, 1)

    def test_full_descent_costs_two_comparisons_per_level(self):
        a = [14 - i for i in range(15)]  # perfect max-heap
        a[0] = -1
        h = Heap(a)
        c = OpCounters()
        h.sift_down(0, c)
        assert is_heap(a)
        assert (c.comparisons, c.swaps) == (6, 3)

    def test_equal_children_left_wins(self):
        a = [TaggedElement(0, 0), TaggedElement(7, 1), TaggedElement(7, 2)]
        Heap(a).sift_down(0)
        assert a[0].origin == 1

    def test_parent_tied_with_children_stays_put(self):
        a = [TaggedElement(7, 0), TaggedElement(7, 1), TaggedElement(3, 2)]
        c = OpCounters()
        Heap(a).sift_down(0, c)
        assert [t.origin for t in a] == [0, 1, 2]
        assert c.swaps == 0

    def test_out_of_range_rejected(self):
        h = Heap([3, 1])
        with pytest.raises(HeapIndexError):
            h.sift_down(2)
        with pytest.raises(HeapIndexError):
            h.sift_down(-1)
        h.heap_size = 0
        with pytest.raises(HeapIndexError):
            h.sift_down(0)

    def test_counters_optional(self):
        a = [1, 9, 2]
        Heap(a).sift_down(0)
        assert is_heap(a)


class TestBuild:
    def test_golden_five_element_example(self):
        a = [1, 2, 3, 4, 5]
        c = OpCounters()
        h = build(a, counters=c)
        assert a == [5, 4, 3, 1, 2]
        assert h.elements is a
        assert len(h) == 5
        assert (c.comparisons, c.swaps) == (6, 3)

    def test_comparison_bound_two_n(self):
        rng = random.Random(11)
        for n in [2, 3, 4, 5, 6, 7, 8, 16, 31, 32, 33, 100, 1024]:
            a = list(range(n))
            rng.shuffle(a)
            c = OpCounters()
            build(a, counters=c)
            assert is_heap(a)
            assert c.comparisons <= 2 * (n - 1), n

    def test_min_max_duality(self):
        rng = random.Random(5)
        for _ in range(50):
            a = [rng.randint(-99, 99) for _ in range(rng.randint(0, 64))]
            mn = a[:]
            build(mn, HeapOrder.MIN_AT_ROOT)
            mx = [-x for x in a]
            build(mx, HeapOrder.MAX_AT_ROOT)
            assert mn == [-x for x in mx]

    def test_all_equal_never_swaps(self):
        a = [7] * 15
        c = OpCounters()
        build(a, counters=c)
        assert c.swaps == 0
        assert c.comparisons > 0

    def test_trivial_sizes_cost_nothing(self):
        for a in ([], [42]):
            c = OpCounters()
            build(a, counters=c)
            assert c.as_dict() == OpCounters().as_dict()

    def test_heapify_iterable_accepts_generators(self):
        h = heapify_iterable(x * x % 7 for x in range(20))
        assert is_heap(h.elements)
        assert len(h) == 20

    @given(st.lists(st.integers()))
    def test_property_build_yields_heap(self, xs):
        build(xs)
        assert is_heap(xs)

    @given(st.lists(st.integers(), max_size=200))
    def test_property_min_build_yields_min_heap(self, xs):
        build(xs, HeapOrder.MIN_AT_ROOT)
        assert is_heap(xs, order=HeapOrder.MIN_AT_ROOT)


class TestHeapLifecycle:
    def test_constructor_validates_heap_size(self):
        with pytest.raises(ValueError):
            Heap([1, 2, 3], heap_size=4)
        with pytest.raises(ValueError):
            Heap([1, 2, 3], heap_size=-1)
        assert len(Heap([5, 1, 2], heap_size=1)) == 1

    def test_peek_and_pop_on_empty_raise(self):
        h = Heap()
        with pytest.raises(EmptyHeapError):
            h.peek()
        with pytest.raises(EmptyHeapError):
            h.pop_root()

    def test_push_counts_frozen_example(self):
        h = Heap([9, 5, 7])
        c = OpCounters()
        h.push(10, c)
        assert h.elements == [10, 9, 7, 5]
        assert (c.comparisons, c.swaps, c.element_moves) == (2, 2, 1)

    def test_pop_single_element_costs_nothing(self):
        h = Heap([5])
        c = OpCounters()
        assert h.pop_root(c) == 5
        assert len(h) == 0
        assert c.swaps == 0 and c.comparisons == 0

    def test_push_reuses_slack_slot(self):
        h = Heap([5, 4, 1])
        assert h.pop_root() == 5
        assert len(h.elements) == 3 and len(h) == 2
        h.push(2)
        assert len(h.elements) == 3 and len(h) == 3
        assert is_heap(h.elements)

    def test_matches_heapq_under_interleaved_ops(self):
        rng = random.Random(99)
        for _ in range(300):
            h = Heap(order=HeapOrder.MIN_AT_ROOT)
            mirror: list = []
            for _ in range(rng.randint(1, 60)):
                if mirror and rng.random() < 0.4:
                    assert h.pop_root() == heapq.heappop(mirror)
                else:
                    v = rng.randint(-50, 50)
                    h.push(v)
                    heapq.heappush(mirror, v)
                if mirror:
                    assert h.peek() == mirror[0]
            drained = [h.pop_root() for _ in range(len(h))]
            assert drained == sorted(mirror)

    def test_max_drain_is_descending(self):
        rng = random.Random(3)
        vals = [rng.randint(0, 20) for _ in range(40)]
        h = heapify_iterable(vals)
        assert [h.pop_root() for _ in range(len(h))] == sorted(vals, reverse=True)

    def test_remove_at_returns_element_and_keeps_heap(self):
        rng = random.Random(17)
        for _ in range(200):
            n = rng.randint(1, 50)
            vals = rng.sample(range(1000), n)
            h = heapify_iterable(vals)
            i = rng.randrange(n)
            removed = h.remove_at(i)
            assert is_heap(h.elements, h.heap_size)
            rest = sorted(h.elements[: h.heap_size])
            expect = sorted(vals)
            expect.remove(removed)
            assert rest == expect

    def test_remove_at_can_need_a_sift_up(self):
        a = [100, 10, 99, 1, 2, 98, 97]
        h = Heap(a)
        assert h.remove_at(3) == 1
        assert is_heap(a, h.heap_size)
        assert sorted(a[: h.heap_size]) == [2, 10, 97, 98, 99, 100]

    def test_remove_last_just_shrinks(self):
        h = Heap([9, 4, 7])
        c = OpCounters()
        assert h.remove_at(2, c) == 7
        assert len(h) == 2
        assert c.as_dict() == OpCounters().as_dict()

    def test_remove_at_validates_index(self):
        h = Heap([9, 4, 7])
        with pytest.raises(HeapIndexError):
            h.remove_at(3)
        with pytest.raises(HeapIndexError):
            h.remove_at(-1)

    def test_repr_shows_only_live_prefix(self):
        h = Heap([9, 4])
        h.pop_root()
        assert repr(h) == "Heap([4], order=max)"  # stale slack slot hidden

    @given(st.lists(st.integers(), max_size=120))
    @settings(max_examples=60)
    def test_property_push_all_drain_sorted(self, xs):
        h = Heap(order=HeapOrder.MIN_AT_ROOT)
        for x in xs:
            h.push(x)
        assert [h.pop_root() for _ in range(len(h))] == sorted(xs)
