"""Counting and enumerating states and morphisms of CP(Rel).

States of an ``n``-element set correspond to graphs on its subsets, so

    count_states(n) = sum_i C(n, i) * 2 ** (i * (i - 1) / 2)

The enumerations here give two independent routes to that number: one
walks graphs directly, the other filters every relation on the set for
positivity.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Iterator

import numpy as np

from .errors import BoundExceeded
from .graphcat import Graph
from .relcore import (
    UNIT,
    UNIT_ELEMENT,
    CPMorphism,
    FiniteSet,
    Relation,
    is_cp,
    product_set,
)

BRUTE_FORCE_BOUND = 4
BRUTE_FORCE_HARD_LIMIT = 5

_CHUNK = 1 << 20


@dataclass(frozen=True)
class CensusRow:
    n: int
    rel_states: int
    cp_rel_states: int
    brute_force: int | None = None

    @property
    def matches(self) -> bool | None:
        if self.brute_force is None:
            return None
        return self.brute_force == self.cp_rel_states


def count_states(n: int) -> int:
    if n < 0:
        raise ValueError("n must be non-negative")
    return sum(comb(n, i) * 2 ** (i * (i - 1) // 2) for i in range(n + 1))


def count_morphisms(a: FiniteSet, b: FiniteSet) -> int:
    return count_states(len(a) * len(b))


def enumerate_graphs(a: FiniteSet, b: FiniteSet) -> Iterator[Graph]:
    """Every graph ``a -> b`` exactly once.

    Vertex subsets come in shortlex order (by size, then lexicographically);
    within a subset the non-loop edges are switched on as a binary counter,
    bit ``i`` for the ``i``-th pair in canonical order.
    """
    universe = product_set(a, b).elements
    for size in range(len(universe) + 1):
        for subset in combinations(universe, size):
            vertices = frozenset(subset)
            loops = [(v, v) for v in subset]
            pairs = list(combinations(subset, 2))
            for mask in range(1 << len(pairs)):
                arcs = list(loops)
                for i, (u, w) in enumerate(pairs):
                    if mask >> i & 1:
                        arcs.append((u, w))
                        arcs.append((w, u))
                yield Graph._trusted(a, b, vertices, frozenset(arcs))


def enumerate_state_graphs(x: FiniteSet) -> Iterator[Graph]:
    return enumerate_graphs(UNIT, x)


def enumerate_relations(a: FiniteSet, b: FiniteSet) -> Iterator[Relation]:
    """All ``2 ** (|a| |b|)`` relations, bit ``i`` of the counter selecting
    the ``i``-th pair of ``a x b``."""
    cells = list(product(a.elements, b.elements))
    for mask in range(1 << len(cells)):
        yield Relation._trusted(a, b, frozenset(c for i, c in enumerate(cells) if mask >> i & 1))


def enumerate_cp_morphisms(a: FiniteSet, b: FiniteSet) -> Iterator[CPMorphism]:
    """CP morphisms found by filtering every relation ``a x a -> b x b``."""
    for rel in enumerate_relations(product_set(a, a), product_set(b, b)):
        if is_cp(rel):
            yield CPMorphism._trusted(a, b, rel)


def positive_masks(n: int) -> Iterator[int]:
    """Bitmasks of the positive relations on an ``n``-element set.

    Bit ``i * n + j`` encodes ``R(x_i, x_j)``.  The whole ``2 ** (n * n)``
    space is scanned in vectorised chunks.
    """
    bits = n * n
    total = 1 << bits
    dtype = np.uint32 if bits <= 32 else np.uint64
    for start in range(0, total, _CHUNK):
        m = np.arange(start, min(total, start + _CHUNK), dtype=dtype)
        ok = np.ones(m.shape, dtype=bool)
        for i in range(n):
            diagonal = (m >> (i * n + i)) & 1
            for j in range(n):
                if j == i:
                    continue
                cell = (m >> (i * n + j)) & 1
                if j > i:
                    ok &= cell == ((m >> (j * n + i)) & 1)
                ok &= cell <= diagonal
        yield from (int(x) for x in m[ok])


def count_positive_relations(n: int, bound: int = BRUTE_FORCE_BOUND) -> int:
    if n > bound:
        raise BoundExceeded(f"brute force over {n}-element sets exceeds bound {bound}")
    return sum(1 for _ in positive_masks(n))


def enumerate_positive_relations(x: FiniteSet, bound: int = BRUTE_FORCE_BOUND) -> Iterator[Relation]:
    n = len(x)
    if n > bound:
        raise BoundExceeded(f"brute force over {n}-element sets exceeds bound {bound}")
    cells = list(product(x.elements, x.elements))
    for mask in positive_masks(n):
        yield Relation._trusted(x, x, frozenset(c for i, c in enumerate(cells) if mask >> i & 1))


def graph_of_positive(r: Relation) -> Graph:
    """The state graph of a positive relation on ``X``."""
    vertices = frozenset((UNIT_ELEMENT, x) for x, y in r.pairs if x == y)
    arcs = frozenset(((UNIT_ELEMENT, x), (UNIT_ELEMENT, y)) for x, y in r.pairs)
    return Graph._trusted(UNIT, r.dom, vertices, arcs)


def positive_of_graph(g: Graph) -> Relation:
    """The positive relation of a state graph ``I -> X``."""
    pairs = frozenset((x, y) for (_, x), (_, y) in g.arcs)
    return Relation._trusted(g.cod, g.cod, pairs)


def census(n_max: int, brute_force: bool = False, bound: int = BRUTE_FORCE_HARD_LIMIT) -> list[CensusRow]:
    rows = []
    for n in range(n_max + 1):
        brute = count_positive_relations(n, bound) if brute_force else None
        rows.append(CensusRow(n, 2 ** n, count_states(n), brute))
    return rows


def random_graph(a: FiniteSet, b: FiniteSet, rng) -> Graph:
    """Each vertex of ``a x b`` kept with probability 1/2, then each
    non-loop edge among the kept vertices with probability 1/2."""
    subset = [v for v in product_set(a, b).elements if rng.random() < 0.5]
    arcs = [(v, v) for v in subset]
    for u, w in combinations(subset, 2):
        if rng.random() < 0.5:
            arcs += [(u, w), (w, u)]
    return Graph._trusted(a, b, frozenset(subset), frozenset(arcs))
