"""Finite sets, binary relations and completely positive relations.

Morphisms of Rel are subsets of ``A x B``.  A completely positive morphism
``A -> B`` is a relation ``A x A -> B x B`` satisfying

    R(a1, a2, b1, b2)  =>  R(a2, a1, b2, b1)
    R(a1, a2, b1, b2)  =>  R(a1, a1, b1, b1)

Elements of a product set are tuples, never concatenated strings, so the
encoding stays injective for nested products.  ``(A x B) x C`` and
``A x (B x C)`` are different sets related by :func:`associator`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from typing import Hashable, Iterable, Iterator

from .errors import NotCompletelyPositive, NotPositive, ObjectMismatch, ShapeMismatch

Label = Hashable

UNIT_ELEMENT = "*"


def label_key(x):
    """Total order on labels: strings before tuples, tuples lexicographic."""
    if isinstance(x, tuple):
        return (1, tuple(label_key(y) for y in x))
    return (0, str(x))


def format_label(x) -> str:
    if isinstance(x, tuple):
        return "(" + ",".join(format_label(y) for y in x) + ")"
    return str(x)


@dataclass(frozen=True)
class FiniteSet:
    """A finite set of labels, stored in canonical order.

    The name is cosmetic and takes no part in equality: two sets with the
    same elements are the same object of every category here.
    """

    name: str = field(compare=False)
    elements: tuple

    def __post_init__(self):
        elements = tuple(sorted(self.elements, key=label_key))
        for x, y in zip(elements, elements[1:]):
            if x == y:
                raise ValueError(f"duplicate element {x!r} in set {self.name}")
        object.__setattr__(self, "elements", elements)

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._members

    def __iter__(self) -> Iterator:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self):
        return f"FiniteSet({self.name!r}, {list(self.elements)!r})"


UNIT = FiniteSet("I", (UNIT_ELEMENT,))
EMPTY = FiniteSet("0", ())


def standard_set(n: int, prefix: str = "x") -> FiniteSet:
    """The set ``{x0, ..., x(n-1)}`` used by the exhaustive checks."""
    return FiniteSet(f"{prefix.upper()}{n}", tuple(f"{prefix}{i}" for i in range(n)))


@lru_cache(maxsize=None)
def product_set(a: FiniteSet, b: FiniteSet) -> FiniteSet:
    return FiniteSet(f"{a.name}*{b.name}", tuple(product(a.elements, b.elements)))


@dataclass(frozen=True)
class Relation:
    dom: FiniteSet
    cod: FiniteSet
    pairs: frozenset = frozenset()

    def __post_init__(self):
        pairs = frozenset(self.pairs)
        for x, y in pairs:
            if x not in self.dom:
                raise ValueError(f"{x!r} is not an element of {self.dom.name}")
            if y not in self.cod:
                raise ValueError(f"{y!r} is not an element of {self.cod.name}")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def _trusted(cls, dom, cod, pairs: frozenset) -> Relation:
        # Skips membership validation; callers guarantee pairs lie in dom x cod.
        self = object.__new__(cls)
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "pairs", pairs)
        return self

    @classmethod
    def identity(cls, a: FiniteSet) -> Relation:
        return cls._trusted(a, a, frozenset((x, x) for x in a))

    @classmethod
    def empty(cls, a: FiniteSet, b: FiniteSet) -> Relation:
        return cls._trusted(a, b, frozenset())

    @classmethod
    def full(cls, a: FiniteSet, b: FiniteSet) -> Relation:
        return cls._trusted(a, b, frozenset(product(a, b)))

    @property
    def sorted_pairs(self) -> list:
        return sorted(self.pairs, key=label_key)

    def __contains__(self, pair) -> bool:
        return pair in self.pairs

    def __iter__(self):
        return iter(self.sorted_pairs)

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        shown = ", ".join(f"({format_label(x)},{format_label(y)})" for x, y in self.sorted_pairs)
        return f"Relation({self.dom.name} -> {self.cod.name}: {{{shown}}})"


def compose_rel(s: Relation, r: Relation) -> Relation:
    """``s . r``: first ``r``, then ``s``."""
    if r.cod != s.dom:
        raise ObjectMismatch(f"cannot compose: {r.cod.name} != {s.dom.name}")
    forward: dict = {}
    for b, c in s.pairs:
        forward.setdefault(b, []).append(c)
    pairs = frozenset((a, c) for a, b in r.pairs for c in forward.get(b, ()))
    return Relation._trusted(r.dom, s.cod, pairs)


def converse(r: Relation) -> Relation:
    return Relation._trusted(r.cod, r.dom, frozenset((y, x) for x, y in r.pairs))


def tensor_rel(r: Relation, s: Relation) -> Relation:
    pairs = frozenset(((a, b), (c, d)) for a, c in r.pairs for b, d in s.pairs)
    return Relation._trusted(product_set(r.dom, s.dom), product_set(r.cod, s.cod), pairs)


def union_rel(rs: Iterable[Relation], dom: FiniteSet | None = None, cod: FiniteSet | None = None) -> Relation:
    rs = list(rs)
    if not rs and (dom is None or cod is None):
        raise ValueError("empty union needs explicit dom and cod")
    dom = rs[0].dom if dom is None else dom
    cod = rs[0].cod if cod is None else cod
    for r in rs:
        if r.dom != dom or r.cod != cod:
            raise ObjectMismatch("union of relations between different sets")
    return Relation._trusted(dom, cod, frozenset().union(*(r.pairs for r in rs)))


# -- coherence isomorphisms -------------------------------------------------

def _bijection(dom, cod, f) -> Relation:
    return Relation._trusted(dom, cod, frozenset((x, f(x)) for x in dom))


def associator(a: FiniteSet, b: FiniteSet, c: FiniteSet) -> Relation:
    """``(A x B) x C -> A x (B x C)``."""
    dom = product_set(product_set(a, b), c)
    cod = product_set(a, product_set(b, c))
    return _bijection(dom, cod, lambda x: (x[0][0], (x[0][1], x[1])))


def left_unitor(a: FiniteSet) -> Relation:
    """``I x A -> A``."""
    return _bijection(product_set(UNIT, a), a, lambda x: x[1])


def right_unitor(a: FiniteSet) -> Relation:
    """``A x I -> A``."""
    return _bijection(product_set(a, UNIT), a, lambda x: x[0])


def swap(a: FiniteSet, b: FiniteSet) -> Relation:
    """The symmetry ``A x B -> B x A`` of Rel."""
    return _bijection(product_set(a, b), product_set(b, a), lambda x: (x[1], x[0]))


# -- positivity ----------------------------------------------------------------

def is_positive(r: Relation) -> bool:
    """Symmetric, and every related element is related to itself."""
    if r.dom != r.cod:
        raise ObjectMismatch("positivity is only defined for endo-relations")
    pairs = r.pairs
    for x, y in pairs:
        if (y, x) not in pairs or (x, x) not in pairs:
            return False
    return True


@dataclass(frozen=True)
class PositiveWitness:
    """A factorisation ``r = converse(g) . g`` through ``witness_object``."""

    witness_object: FiniteSet
    g: Relation

    def recompose(self) -> Relation:
        return compose_rel(converse(self.g), self.g)


def positive_witness(r: Relation) -> PositiveWitness:
    """Factor a positive relation through its set of related unordered pairs.

    The witness object has one element per edge ``{x, x'}`` of ``r`` (self
    pairs included, labelled by a 1-tuple) and ``g`` sends ``x`` to every
    edge containing it.
    """
    if not is_positive(r):
        raise NotPositive(f"{r!r} is not positive")
    edges = {tuple(sorted({x, y}, key=label_key)) for x, y in r.pairs}
    witness = FiniteSet(f"E({r.dom.name})", tuple(edges))
    g = Relation._trusted(r.dom, witness, frozenset((x, e) for e in edges for x in e))
    return PositiveWitness(witness, g)


# -- completely positive relations ------------------------------------------

def square_root(s: FiniteSet) -> FiniteSet:
    """Recover ``A`` from ``A x A``; raise ShapeMismatch if ``s`` is not a square."""
    try:
        base = {x[0] for x in s} | {x[1] for x in s}
    except (TypeError, IndexError):
        raise ShapeMismatch(f"{s.name} is not a set of pairs") from None
    a = FiniteSet(s.name, tuple(base))
    if product_set(a, a) != s:
        raise ShapeMismatch(f"{s.name} is not of the form A x A")
    return a


def cp_shape(m: Relation) -> tuple[FiniteSet, FiniteSet]:
    return square_root(m.dom), square_root(m.cod)


def is_cp(m: Relation) -> bool:
    cp_shape(m)
    pairs = m.pairs
    for (a1, a2), (b1, b2) in pairs:
        if ((a2, a1), (b2, b1)) not in pairs:
            return False
        if ((a1, a1), (b1, b1)) not in pairs:
            return False
    return True


def bar(m: Relation) -> Relation:
    """Reindex ``R : A x A -> B x B`` as the endo-relation on ``A x B``.

    ``bar(R)((a1, b1), (a2, b2))`` holds iff ``R((a2, a1), (b2, b1))``.
    """
    a, b = cp_shape(m)
    ab = product_set(a, b)
    pairs = frozenset(((x2, y2), (x1, y1)) for (x1, x2), (y1, y2) in m.pairs)
    return Relation._trusted(ab, ab, pairs)


def unbar(p: Relation, a: FiniteSet, b: FiniteSet) -> Relation:
    """Inverse of :func:`bar`."""
    ab = product_set(a, b)
    if p.dom != ab or p.cod != ab:
        raise ShapeMismatch("expected an endo-relation on A x B")
    pairs = frozenset(((a2, a1), (b2, b1)) for (a1, b1), (a2, b2) in p.pairs)
    return Relation._trusted(product_set(a, a), product_set(b, b), pairs)


@dataclass(frozen=True)
class CPMorphism:
    """A morphism ``dom -> cod`` of CP(Rel)."""

    dom: FiniteSet
    cod: FiniteSet
    rel: Relation

    def __post_init__(self):
        if self.rel.dom != product_set(self.dom, self.dom) or self.rel.cod != product_set(self.cod, self.cod):
            raise ShapeMismatch("underlying relation must be A x A -> B x B")
        if not is_cp(self.rel):
            raise NotCompletelyPositive(repr(self.rel))

    @classmethod
    def _trusted(cls, dom, cod, rel) -> CPMorphism:
        self = object.__new__(cls)
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "rel", rel)
        return self

    @classmethod
    def from_relation(cls, m: Relation) -> CPMorphism:
        a, b = cp_shape(m)
        return cls(a, b, m)

    def __call__(self, a1, a2, b1, b2) -> bool:
        return ((a1, a2), (b1, b2)) in self.rel.pairs


def embed_double(r: Relation) -> CPMorphism:
    """The doubling functor Rel -> CP(Rel), ``f |-> f x f``."""
    pairs = frozenset(((a, a2), (b, b2)) for a, b in r.pairs for a2, b2 in r.pairs)
    rel = Relation._trusted(product_set(r.dom, r.dom), product_set(r.cod, r.cod), pairs)
    return CPMorphism._trusted(r.dom, r.cod, rel)


def cp_identity(a: FiniteSet) -> CPMorphism:
    return CPMorphism._trusted(a, a, Relation.identity(product_set(a, a)))


def cp_compose(s: CPMorphism, r: CPMorphism) -> CPMorphism:
    if r.cod != s.dom:
        raise ObjectMismatch(f"cannot compose: {r.cod.name} != {s.dom.name}")
    return CPMorphism._trusted(r.dom, s.cod, compose_rel(s.rel, r.rel))


def cp_dagger(m: CPMorphism) -> CPMorphism:
    return CPMorphism._trusted(m.cod, m.dom, converse(m.rel))


def cp_tensor(f: CPMorphism, g: CPMorphism) -> CPMorphism:
    """Tensor ``f : A -> B`` with ``g : C -> D`` into ``A x C -> B x D``.

    ``((a, c), (a', c'))`` is related to ``((b, d), (b', d'))`` iff
    ``f(a, a', b, b')`` and ``g(c, c', d, d')``.
    """
    dom = product_set(f.dom, g.dom)
    cod = product_set(f.cod, g.cod)
    pairs = frozenset(
        (((a, c), (a2, c2)), ((b, d), (b2, d2)))
        for (a, a2), (b, b2) in f.rel.pairs
        for (c, c2), (d, d2) in g.rel.pairs
    )
    rel = Relation._trusted(product_set(dom, dom), product_set(cod, cod), pairs)
    return CPMorphism._trusted(dom, cod, rel)
