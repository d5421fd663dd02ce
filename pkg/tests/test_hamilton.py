"""Tests for Hamiltonian path and cycle construction."""

import random

import pytest

from kingchain import (
    from_edge_list,
    hamiltonian_cycle,
    hamiltonian_path,
    path_ending_at,
    random_tournament,
)
from kingchain.errors import (
    EmptySubsetError,
    NotStrongSubsetError,
    OrderTwoSubsetError,
    TargetNotInSubsetError,
)

from brute import brute_strong_subset


def assert_valid_path(t, path, subset):
    assert sorted(path) == sorted(set(subset))
    for u, v in zip(path, path[1:]):
        assert t.beats(u, v), f"{u} -> {v} missing in path {path}"


def assert_valid_cycle(t, cycle, subset):
    assert len(cycle) >= 3
    assert sorted(cycle) == sorted(set(subset))
    for i, u in enumerate(cycle):
        v = cycle[(i + 1) % len(cycle)]
        assert t.beats(u, v), f"{u} -> {v} missing in cycle {cycle}"


class TestHamiltonianPath:
    def test_transitive_triangle_unique_path(self, transitive_triangle):
        assert hamiltonian_path(transitive_triangle, [0, 1, 2]) == (0, 1, 2)

    def test_three_cycle(self, three_cycle):
        path = hamiltonian_path(three_cycle, [0, 1, 2])
        assert_valid_path(three_cycle, path, [0, 1, 2])

    def test_singleton(self, t4a):
        assert hamiltonian_path(t4a, [2]) == (2,)

    def test_empty(self, t4a):
        with pytest.raises(EmptySubsetError):
            hamiltonian_path(t4a, [])

    def test_deterministic(self):
        t = random_tournament(20, 3)
        assert hamiltonian_path(t, range(20)) == hamiltonian_path(t, range(20))

    def test_random_subsets(self):
        rng = random.Random(11)
        for _ in range(300):
            n = rng.randint(1, 40)
            t = random_tournament(n, rng.randint(0, 10**6))
            subset = [v for v in range(n) if rng.random() < 0.6] or [0]
            assert_valid_path(t, hamiltonian_path(t, subset), subset)


class TestHamiltonianCycle:
    def test_three_cycle(self, three_cycle):
        assert hamiltonian_cycle(three_cycle, [0, 1, 2]) == (0, 1, 2)

    def test_singleton(self, t4a):
        assert hamiltonian_cycle(t4a, [3]) == (3,)

    def test_t4a_spanning(self, t4a):
        cycle = hamiltonian_cycle(t4a, range(4))
        assert_valid_cycle(t4a, cycle, range(4))

    def test_order_two(self, t4a):
        with pytest.raises(OrderTwoSubsetError):
            hamiltonian_cycle(t4a, [0, 1])

    def test_not_strong(self, transitive_triangle):
        with pytest.raises(NotStrongSubsetError):
            hamiltonian_cycle(transitive_triangle, [0, 1, 2])

    def test_absorption_of_dominator_and_dominated(self):
        # Vertex 3 beats the whole seed triangle and 4 loses to all of it, so
        # growth must go through the two-vertex absorption step via 4 -> 3.
        t = from_edge_list(
            5,
            [(0, 1), (1, 2), (2, 0),
             (3, 0), (3, 1), (3, 2),
             (0, 4), (1, 4), (2, 4),
             (4, 3)],
        )
        cycle = hamiltonian_cycle(t, range(5))
        assert_valid_cycle(t, cycle, range(5))
        assert cycle == (0, 1, 2, 4, 3)

    def test_random_strong_subsets(self):
        rng = random.Random(12)
        found = 0
        while found < 150:
            n = rng.randint(3, 30)
            t = random_tournament(n, rng.randint(0, 10**6))
            subset = [v for v in range(n) if rng.random() < 0.7]
            if len(subset) in (0, 2) or not brute_strong_subset(t, subset):
                continue
            found += 1
            cycle = hamiltonian_cycle(t, subset)
            if len(subset) == 1:
                assert cycle == tuple(subset)
            else:
                assert_valid_cycle(t, cycle, subset)


class TestPathEndingAt:
    def test_singleton(self, t4a):
        assert path_ending_at(t4a, [3], 3) == (3,)

    def test_three_cycle_rotation(self, three_cycle):
        assert path_ending_at(three_cycle, [0, 1, 2], 2) == (0, 1, 2)

    def test_target_not_in_subset(self, t4a):
        with pytest.raises(TargetNotInSubsetError):
            path_ending_at(t4a, [0, 1, 2], 3)

    def test_not_strong(self, transitive_triangle):
        with pytest.raises(NotStrongSubsetError):
            path_ending_at(transitive_triangle, [0, 1, 2], 1)

    def test_two_vertex_subset_is_never_strong(self, t4a):
        with pytest.raises(NotStrongSubsetError):
            path_ending_at(t4a, [0, 1], 1)

    def test_always_ends_at_target(self):
        rng = random.Random(13)
        found = 0
        while found < 100:
            n = rng.randint(3, 25)
            t = random_tournament(n, rng.randint(0, 10**6))
            subset = list(range(n))
            if not brute_strong_subset(t, subset):
                continue
            found += 1
            target = rng.choice(subset)
            path = path_ending_at(t, subset, target)
            assert path[-1] == target
            assert_valid_path(t, path, subset)
