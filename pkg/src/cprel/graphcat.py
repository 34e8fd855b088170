"""The category of sets and labelled graphs.

A graph ``A -> B`` has vertices drawn from ``A x B``.  Edges are undirected
and every vertex carries a self-loop.  Internally the edge set is held as
its symmetric set of ordered pairs (``arcs``), which is exactly the
relation ``A x A -> B x B`` of the matching CP morphism, read with the
components regrouped.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import MalformedGraph, ObjectMismatch
from .relcore import (
    UNIT,
    UNIT_ELEMENT,
    FiniteSet,
    Relation,
    associator,
    format_label,
    label_key,
    left_unitor,
    product_set,
    right_unitor,
    swap,
)


class Graph:
    """A morphism ``dom -> cod`` of the graph category.

    ``edges`` may be given as pairs of vertices in either orientation;
    self-loops are added for every vertex and need not be listed.
    """

    __slots__ = ("dom", "cod", "vertices", "arcs")

    def __init__(self, dom: FiniteSet, cod: FiniteSet, vertices: Iterable = (), edges: Iterable = ()):
        vertices = frozenset(tuple(v) for v in vertices)
        for v in vertices:
            if len(v) != 2 or v[0] not in dom or v[1] not in cod:
                raise MalformedGraph(f"vertex {v!r} is not in {dom.name} x {cod.name}")
        arcs = {(v, v) for v in vertices}
        for edge in edges:
            ends = tuple(tuple(v) for v in edge)
            if len(ends) == 1:
                ends = ends * 2
            if len(ends) != 2:
                raise MalformedGraph(f"edge {edge!r} must have one or two endpoints")
            u, w = ends
            if u not in vertices or w not in vertices:
                raise MalformedGraph(f"edge {edge!r} has an endpoint outside the vertex set")
            arcs.add((u, w))
            arcs.add((w, u))
        self._set(dom, cod, vertices, frozenset(arcs))

    def _set(self, dom, cod, vertices, arcs):
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "arcs", arcs)

    @classmethod
    def _trusted(cls, dom, cod, vertices: frozenset, arcs: frozenset) -> Graph:
        self = object.__new__(cls)
        self._set(dom, cod, vertices, arcs)
        return self

    @classmethod
    def empty(cls, dom: FiniteSet, cod: FiniteSet) -> Graph:
        return cls._trusted(dom, cod, frozenset(), frozenset())

    @classmethod
    def complete(cls, dom: FiniteSet, cod: FiniteSet, vertices: Iterable) -> Graph:
        vertices = frozenset(vertices)
        return cls._trusted(dom, cod, vertices, frozenset((u, w) for u in vertices for w in vertices))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def edges(self) -> frozenset:
        """Unordered edges as frozensets; a self-loop is a singleton."""
        return frozenset(frozenset(arc) for arc in self.arcs)

    def non_loop_edges(self) -> list[tuple]:
        """Non-loop edges ``(u, w)`` with ``u < w``, in canonical order."""
        out = [(u, w) for u, w in self.arcs if label_key(u) < label_key(w)]
        return sorted(out, key=label_key)

    def sorted_vertices(self) -> list:
        return sorted(self.vertices, key=label_key)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.dom == other.dom
            and self.cod == other.cod
            and self.vertices == other.vertices
            and self.arcs == other.arcs
        )

    def __hash__(self):
        return hash((self.dom, self.cod, self.vertices, self.arcs))

    def __repr__(self):
        vs = ", ".join(format_label(v) for v in self.sorted_vertices())
        es = ", ".join(f"{format_label(u)}-{format_label(w)}" for u, w in self.non_loop_edges())
        return f"Graph({self.dom.name} -> {self.cod.name}; V={{{vs}}}; E={{{es}}})"

    def check(self) -> None:
        """Re-verify the well-formedness invariants, raising MalformedGraph."""
        for a, b in self.vertices:
            if a not in self.dom or b not in self.cod:
                raise MalformedGraph(f"vertex {(a, b)!r} outside {self.dom.name} x {self.cod.name}")
        for u, w in self.arcs:
            if u not in self.vertices or w not in self.vertices:
                raise MalformedGraph(f"edge {u!r}-{w!r} has an endpoint outside the vertex set")
            if (w, u) not in self.arcs:
                raise MalformedGraph(f"edge {u!r}-{w!r} is not symmetric")
        for v in self.vertices:
            if (v, v) not in self.arcs:
                raise MalformedGraph(f"vertex {v!r} is missing its self-loop")


@dataclass(frozen=True)
class State:
    """A state of ``carrier``: a graph ``I -> carrier``."""

    carrier: FiniteSet
    graph: Graph

    def __post_init__(self):
        if self.graph.dom != UNIT or self.graph.cod != self.carrier:
            raise ObjectMismatch("a state is a graph I -> X")

    @classmethod
    def of(cls, graph: Graph) -> State:
        return cls(graph.cod, graph)


def state_of_morphism(g: Graph) -> State:
    """Map-state duality: the graph ``A -> B`` read as a state of ``A x B``."""
    ab = product_set(g.dom, g.cod)
    vertices = frozenset((UNIT_ELEMENT, v) for v in g.vertices)
    arcs = frozenset(((UNIT_ELEMENT, u), (UNIT_ELEMENT, w)) for u, w in g.arcs)
    return State(ab, Graph._trusted(UNIT, ab, vertices, arcs))


# -- category structure --------------------------------------------------------

def graph_identity(a: FiniteSet) -> Graph:
    return Graph.complete(a, a, ((x, x) for x in a))


def graph_compose(g2: Graph, g1: Graph) -> Graph:
    """``g2 . g1``: glue vertices and edges of ``g1 : A -> B`` and ``g2 : B -> C``
    wherever their ``B`` components agree."""
    if g1.cod != g2.dom:
        raise ObjectMismatch(f"cannot compose: {g1.cod.name} != {g2.dom.name}")
    out_of: dict = {}
    for b, c in g2.vertices:
        out_of.setdefault(b, []).append(c)
    vertices = frozenset((a, c) for a, b in g1.vertices for c in out_of.get(b, ()))
    arcs_out: dict = {}
    for (b, c), (b2, c2) in g2.arcs:
        arcs_out.setdefault((b, b2), []).append((c, c2))
    arcs = frozenset(
        ((a, c), (a2, c2))
        for (a, b), (a2, b2) in g1.arcs
        for c, c2 in arcs_out.get((b, b2), ())
    )
    return Graph._trusted(g1.dom, g2.cod, vertices, arcs)


def graph_tensor(g1: Graph, g2: Graph) -> Graph:
    """``g1 : A -> C`` and ``g2 : B -> D`` give ``A x B -> C x D``; vertex
    ``(a, c)`` with ``(b, d)`` becomes ``((a, b), (c, d))``."""
    dom = product_set(g1.dom, g2.dom)
    cod = product_set(g1.cod, g2.cod)
    vertices = frozenset(((a, b), (c, d)) for a, c in g1.vertices for b, d in g2.vertices)
    arcs = frozenset(
        (((a, b), (c, d)), ((a2, b2), (c2, d2)))
        for (a, c), (a2, c2) in g1.arcs
        for (b, d), (b2, d2) in g2.arcs
    )
    return Graph._trusted(dom, cod, vertices, arcs)


def graph_dagger(g: Graph) -> Graph:
    vertices = frozenset((b, a) for a, b in g.vertices)
    arcs = frozenset(((b, a), (b2, a2)) for (a, b), (a2, b2) in g.arcs)
    return Graph._trusted(g.cod, g.dom, vertices, arcs)


# -- enrichment -------------------------------------------------------------------

def graph_leq(g1: Graph, g2: Graph) -> bool:
    if g1.dom != g2.dom or g1.cod != g2.cod:
        raise ObjectMismatch("graphs compared across different homsets")
    return g1.arcs <= g2.arcs


def graph_join(gs: Iterable[Graph], dom: FiniteSet | None = None, cod: FiniteSet | None = None) -> Graph:
    """Union of a family of parallel graphs.

    The empty family gives the empty graph, so ``dom`` and ``cod`` must be
    passed explicitly in that case.
    """
    gs = list(gs)
    if not gs:
        if dom is None or cod is None:
            raise ValueError("the join of an empty family needs dom and cod")
        return Graph.empty(dom, cod)
    dom = gs[0].dom if dom is None else dom
    cod = gs[0].cod if cod is None else cod
    for g in gs:
        if g.dom != dom or g.cod != cod:
            raise ObjectMismatch("join of graphs between different sets")
    vertices = frozenset().union(*(g.vertices for g in gs))
    arcs = frozenset().union(*(g.arcs for g in gs))
    return Graph._trusted(dom, cod, vertices, arcs)


# -- purity and the embedding of Rel -------------------------------------------------

def is_complete(g: Graph) -> bool:
    return len(g.arcs) == len(g.vertices) ** 2


def is_pure(s: State) -> bool:
    return is_complete(s.graph)


def embed_graph(r: Relation) -> Graph:
    """Send a relation to the complete graph on its pairs."""
    return Graph.complete(r.dom, r.cod, r.pairs)


def graph_symmetry(a: FiniteSet, b: FiniteSet) -> Graph:
    return embed_graph(swap(a, b))


def graph_cup(a: FiniteSet) -> Graph:
    """``I -> A x A``, complete on ``{(*, (x, x))}``."""
    return Graph.complete(UNIT, product_set(a, a), ((UNIT_ELEMENT, (x, x)) for x in a))


def graph_cap(a: FiniteSet) -> Graph:
    return graph_dagger(graph_cup(a))


def graph_associator(a: FiniteSet, b: FiniteSet, c: FiniteSet) -> Graph:
    return embed_graph(associator(a, b, c))


def graph_left_unitor(a: FiniteSet) -> Graph:
    return embed_graph(left_unitor(a))


def graph_right_unitor(a: FiniteSet) -> Graph:
    return embed_graph(right_unitor(a))


# -- coherence relabelling ----------------------------------------------------------

def flatten_label(x):
    """Forget bracketing and unit factors in a product label.

    ``((a, b), c)`` and ``(a, (b, c))`` both become ``(a, b, c)``;
    ``(a, '*')`` becomes ``a``.  The unit element is only dropped inside
    tuples, so ``'*'`` must not be used as an ordinary element of a factor.
    """
    if not isinstance(x, tuple):
        return x
    parts = []
    for y in x:
        y = flatten_label(y)
        if y == UNIT_ELEMENT:
            continue
        parts.extend(y if isinstance(y, tuple) else (y,))
    if len(parts) == 1:
        return parts[0]
    return tuple(parts)


def canonical_set(s: FiniteSet) -> FiniteSet:
    flat = tuple(flatten_label(x) for x in s)
    if len(set(flat)) != len(flat):
        raise ValueError(f"flattening is not injective on {s.name}")
    return FiniteSet(s.name, flat)


def canonicalize(g: Graph) -> Graph:
    """Relabel ``g`` along the associator/unitor bijections into flat labels."""
    dom, cod = canonical_set(g.dom), canonical_set(g.cod)

    def vertex(v):
        return (flatten_label(v[0]), flatten_label(v[1]))

    vertices = frozenset(vertex(v) for v in g.vertices)
    arcs = frozenset((vertex(u), vertex(w)) for u, w in g.arcs)
    return Graph._trusted(dom, cod, vertices, arcs)


def same_up_to_coherence(g1: Graph, g2: Graph) -> bool:
    return canonicalize(g1) == canonicalize(g2)


def all_pairs(vertices) -> list[tuple]:
    """Canonically ordered non-loop vertex pairs."""
    return list(combinations(sorted(vertices, key=label_key), 2))
