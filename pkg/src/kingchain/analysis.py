"""Structural queries: strong connectivity, condensation, kings.

The condensation of a tournament is a transitive tournament, so its strongly
connected components carry a unique total order in which every edge between
two components points from the earlier one to the later one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Iterable, Iterator

from .core import Tournament, mask_to_vertices
from .errors import (
    EmptySubsetError,
    NotAKingError,
    NotStrongError,
    OrderTooSmallError,
    VertexOutOfRangeError,
)


@dataclass(frozen=True)
class KingContext:
    """A king with its out-neighborhood and in-neighborhood, sorted ascending."""

    king: int
    out_set: tuple[int, ...]
    in_set: tuple[int, ...]

    @property
    def out_degree(self) -> int:
        return len(self.out_set)


def _reach_mask(out_masks: tuple[int, ...], seed_mask: int, allowed_mask: int) -> int:
    """Vertices reachable from seed_mask walking only inside allowed_mask."""
    reached = seed_mask & allowed_mask
    frontier = reached
    while frontier:
        grown = 0
        m = frontier
        while m:
            low = m & -m
            m ^= low
            grown |= out_masks[low.bit_length() - 1]
        frontier = grown & allowed_mask & ~reached
        reached |= frontier
    return reached


def _subset_mask(t: Tournament, subset: Iterable[int]) -> int:
    mask = 0
    for v in subset:
        if not 0 <= v < t.n:
            raise VertexOutOfRangeError(f"vertex {v} outside order {t.n}")
        mask |= 1 << v
    return mask


def is_strong(t: Tournament) -> bool:
    """True iff every vertex reaches every other; a single vertex is strong."""
    return is_strong_subset(t, range(t.n))


def is_strong_subset(t: Tournament, subset: Iterable[int]) -> bool:
    """True iff the subtournament induced by `subset` is strongly connected."""
    mask = _subset_mask(t, subset)
    if mask == 0:
        raise EmptySubsetError("strong connectivity of an empty subset is undefined")
    seed = mask & -mask
    if _reach_mask(t.out_masks, seed, mask) != mask:
        return False
    full = (1 << t.n) - 1
    in_masks = tuple(full & ~t.out_masks[v] & ~(1 << v) for v in range(t.n))
    return _reach_mask(in_masks, seed, mask) == mask


def condensation(t: Tournament, subset: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Strong components of the induced subtournament, in domination order.

    Block i beats block j whenever i < j. Vertices inside each block are
    sorted ascending. No block of any tournament ever has exactly two
    vertices, since a 2-vertex tournament is a single arc.
    """
    verts = sorted(set(subset))
    if not verts:
        raise EmptySubsetError("cannot condense an empty subset")
    sub_mask = _subset_mask(t, verts)
    out_masks = t.out_masks

    # Iterative Tarjan; block order is then fixed by the domination comparator,
    # which is total because the condensation is a transitive tournament.
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    neighbors: dict[int, Iterator[int]] = {}
    blocks: list[tuple[int, ...]] = []
    counter = 0
    for root in verts:
        if root in index:
            continue
        dfs = [root]
        while dfs:
            v = dfs[-1]
            if v not in index:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
                neighbors[v] = iter(mask_to_vertices(out_masks[v] & sub_mask))
            advanced = False
            for w in neighbors[v]:
                if w not in index:
                    dfs.append(w)
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            dfs.pop()
            if dfs:
                parent = dfs[-1]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                blocks.append(tuple(sorted(comp)))

    blocks.sort(key=cmp_to_key(lambda a, b: -1 if t.beats(a[0], b[0]) else 1))
    return tuple(blocks)


def is_king(t: Tournament, v: int) -> bool:
    """True iff every other vertex is reached from v by a path of length <= 2."""
    if not 0 <= v < t.n:
        raise VertexOutOfRangeError(f"vertex {v} outside order {t.n}")
    out_masks = t.out_masks
    cover = out_masks[v]
    m = cover
    while m:
        low = m & -m
        m ^= low
        cover |= out_masks[low.bit_length() - 1]
    return cover | 1 << v == (1 << t.n) - 1


def kings(t: Tournament) -> tuple[int, ...]:
    """All kings, ascending. Never empty; a maximum-out-degree vertex is always one."""
    return tuple(v for v in range(t.n) if is_king(t, v))


def king_context(t: Tournament, k: int) -> KingContext:
    """Split the vertex set around king k into its out-set and in-set.

    Requires a strong tournament of order >= 3, so both sets are nonempty.
    """
    if not 0 <= k < t.n:
        raise VertexOutOfRangeError(f"vertex {k} outside order {t.n}")
    if t.n < 3:
        raise OrderTooSmallError(f"king context needs order >= 3, got {t.n}")
    if not is_strong(t):
        raise NotStrongError("tournament is not strongly connected")
    if not is_king(t, k):
        raise NotAKingError(f"vertex {k} is not a king")
    out_mask = t.out_masks[k]
    in_mask = ((1 << t.n) - 1) & ~out_mask & ~(1 << k)
    return KingContext(king=k, out_set=mask_to_vertices(out_mask), in_set=mask_to_vertices(in_mask))
