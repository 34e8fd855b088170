"""The isomorphism between CP(Rel) and the graph category.

``G`` reads a CP relation as a graph: ``(a, b)`` is a vertex iff
``R(a, a, b, b)`` and ``(a, b) -- (a', b')`` is an edge iff
``R(a, a', b, b')``.  ``C`` goes back the other way.
"""
from __future__ import annotations

from .graphcat import Graph
from .relcore import CPMorphism, Relation, product_set


def functor_G(m: CPMorphism) -> Graph:
    vertices = frozenset((a, b) for (a, a2), (b, b2) in m.rel.pairs if a == a2 and b == b2)
    arcs = frozenset(((a, b), (a2, b2)) for (a, a2), (b, b2) in m.rel.pairs)
    return Graph._trusted(m.dom, m.cod, vertices, arcs)


def functor_C(g: Graph) -> CPMorphism:
    pairs = frozenset(((a, a2), (b, b2)) for (a, b), (a2, b2) in g.arcs)
    rel = Relation._trusted(product_set(g.dom, g.dom), product_set(g.cod, g.cod), pairs)
    return CPMorphism._trusted(g.dom, g.cod, rel)


def roundtrip_check(size_bound: int):
    """Check ``C . G = id`` and ``G . C = id`` on every homset between sets
    of size at most ``size_bound``."""
    from .lawcheck import check_roundtrip

    return check_roundtrip(size_bound)
