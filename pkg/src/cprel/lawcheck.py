"""Exhaustive and sampled verification of the CP(Rel) / graph laws.

Each law is a named predicate in :data:`LAWS`.  A check feeds it every
instance drawn from the homsets between ``standard_set(0..k)``, or, once an
instance family outgrows :data:`EXHAUSTIVE_LIMIT`, a seeded random sample.
Failing reports carry the offending arguments as JSON documents, and
:func:`replay` re-evaluates the law on them.

Laws that quantify over composable triples (associativity, contravariance of
the dagger, join preservation by composition) are checked through
composition tables indexed by position in the canonical enumeration of each
homset; graph equality then reduces to integer equality.
"""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import chain, combinations, product

import numpy as np

from .census import (
    BRUTE_FORCE_BOUND,
    count_morphisms,
    count_states,
    enumerate_cp_morphisms,
    enumerate_graphs,
    enumerate_positive_relations,
    enumerate_relations,
    enumerate_state_graphs,
    graph_of_positive,
    positive_of_graph,
    random_graph,
)
from .errors import MalformedGraph
from .functors import functor_C, functor_G
from .graphcat import (
    Graph,
    State,
    embed_graph,
    graph_associator,
    graph_cap,
    graph_compose,
    graph_cup,
    graph_dagger,
    graph_identity,
    graph_join,
    graph_leq,
    graph_left_unitor,
    graph_right_unitor,
    graph_symmetry,
    graph_tensor,
    is_pure,
    same_up_to_coherence,
)
from .relcore import (
    UNIT,
    UNIT_ELEMENT,
    CPMorphism,
    FiniteSet,
    Relation,
    cp_compose,
    cp_dagger,
    cp_identity,
    cp_shape,
    cp_tensor,
    embed_double,
    is_cp,
    standard_set,
    union_rel,
)
from .report import LawReport, merge_reports
from .serialize import (
    graph_from_document,
    graph_to_document,
    relation_from_document,
    relation_to_document,
)

EXHAUSTIVE_LIMIT = 20_000
HOMSET_LIMIT = 5_000
CP_BRUTE_FORCE_BITS = 16
DEFAULT_SAMPLES = 2_000
DEFAULT_SEED = 0

LAWS: dict = {}


def law(name):
    def register(predicate):
        LAWS[name] = predicate
        return predicate

    return register


def _well_formed(g: Graph) -> bool:
    try:
        g.check()
    except MalformedGraph:
        return False
    return True


# -- category ----------------------------------------------------------------

@law("left-identity")
def _left_identity(g):
    return graph_compose(graph_identity(g.cod), g) == g


@law("right-identity")
def _right_identity(g):
    return graph_compose(g, graph_identity(g.dom)) == g


@law("associativity")
def _associativity(g1, g2, g3):
    return graph_compose(g3, graph_compose(g2, g1)) == graph_compose(graph_compose(g3, g2), g1)


@law("compose-well-formed")
def _compose_well_formed(g1, g2):
    return _well_formed(graph_compose(g2, g1))


# -- dagger -------------------------------------------------------------------

@law("dagger-involution")
def _dagger_involution(g):
    return graph_dagger(graph_dagger(g)) == g


@law("dagger-identity")
def _dagger_identity(ida):
    return graph_dagger(graph_identity(ida.dom)) == graph_identity(ida.dom)


@law("dagger-contravariance")
def _dagger_contravariance(g1, g2):
    return graph_dagger(graph_compose(g2, g1)) == graph_compose(graph_dagger(g1), graph_dagger(g2))


@law("dagger-tensor")
def _dagger_tensor(f, g):
    return graph_dagger(graph_tensor(f, g)) == graph_tensor(graph_dagger(f), graph_dagger(g))


# -- monoidal structure ---------------------------------------------------------

@law("tensor-well-formed")
def _tensor_well_formed(f, g):
    return _well_formed(graph_tensor(f, g))


@law("tensor-identity")
def _tensor_identity(ida, idb):
    a, b = ida.dom, idb.dom
    return graph_tensor(graph_identity(a), graph_identity(b)) == graph_identity(graph_tensor(ida, idb).dom)


@law("tensor-unit")
def _tensor_unit(g):
    unit = graph_identity(UNIT)
    return same_up_to_coherence(graph_tensor(g, unit), g) and same_up_to_coherence(graph_tensor(unit, g), g)


@law("interchange")
def _interchange(f1, f2, g1, g2):
    lhs = graph_compose(graph_tensor(f2, g2), graph_tensor(f1, g1))
    rhs = graph_tensor(graph_compose(f2, f1), graph_compose(g2, g1))
    return same_up_to_coherence(lhs, rhs)


@law("symmetry-involution")
def _symmetry_involution(ida, idb):
    a, b = ida.dom, idb.dom
    both = graph_compose(graph_symmetry(b, a), graph_symmetry(a, b))
    return both == graph_identity(graph_symmetry(a, b).dom)


@law("symmetry-naturality")
def _symmetry_naturality(f, g):
    lhs = graph_compose(graph_symmetry(f.cod, g.cod), graph_tensor(f, g))
    rhs = graph_compose(graph_tensor(g, f), graph_symmetry(f.dom, g.dom))
    return same_up_to_coherence(lhs, rhs)


# -- compact structure ----------------------------------------------------------

@law("snake-left")
def _snake_left(ida):
    # A -> A x I -> A x (A x A) -> (A x A) x A -> I x A -> A
    a = ida.dom
    step = graph_dagger(graph_right_unitor(a))
    step = graph_compose(graph_tensor(graph_identity(a), graph_cup(a)), step)
    step = graph_compose(graph_dagger(graph_associator(a, a, a)), step)
    step = graph_compose(graph_tensor(graph_cap(a), graph_identity(a)), step)
    step = graph_compose(graph_left_unitor(a), step)
    return same_up_to_coherence(step, graph_identity(a))


@law("snake-right")
def _snake_right(ida):
    # A -> I x A -> (A x A) x A -> A x (A x A) -> A x I -> A
    a = ida.dom
    step = graph_dagger(graph_left_unitor(a))
    step = graph_compose(graph_tensor(graph_cup(a), graph_identity(a)), step)
    step = graph_compose(graph_associator(a, a, a), step)
    step = graph_compose(graph_tensor(graph_identity(a), graph_cap(a)), step)
    step = graph_compose(graph_right_unitor(a), step)
    return same_up_to_coherence(step, graph_identity(a))


@law("cup-symmetric")
def _cup_symmetric(ida):
    a = ida.dom
    return graph_compose(graph_symmetry(a, a), graph_cup(a)) == graph_cup(a)


@law("cap-is-dagger-of-cup")
def _cap_dagger(ida):
    a = ida.dom
    return graph_cap(a) == graph_dagger(graph_cup(a)) and graph_dagger(graph_cap(a)) == graph_cup(a)


# -- enrichment ---------------------------------------------------------------------

@law("compose-join-left")
def _compose_join_left(f1, f2, g):
    # g . (f1 v f2) = g . f1 v g . f2
    return graph_compose(g, graph_join([f1, f2])) == graph_join([graph_compose(g, f1), graph_compose(g, f2)])


@law("compose-join-right")
def _compose_join_right(f, g1, g2):
    return graph_compose(graph_join([g1, g2]), f) == graph_join([graph_compose(g1, f), graph_compose(g2, f)])


@law("compose-bottom")
def _compose_bottom(g, idx):
    x = idx.dom
    before = graph_compose(g, Graph.empty(x, g.dom)) == Graph.empty(x, g.cod)
    after = graph_compose(Graph.empty(g.cod, x), g) == Graph.empty(g.dom, x)
    return before and after


@law("tensor-join-left")
def _tensor_join_left(f1, f2, g):
    return graph_tensor(graph_join([f1, f2]), g) == graph_join([graph_tensor(f1, g), graph_tensor(f2, g)])


@law("tensor-join-right")
def _tensor_join_right(f, g1, g2):
    return graph_tensor(f, graph_join([g1, g2])) == graph_join([graph_tensor(f, g1), graph_tensor(f, g2)])


@law("tensor-bottom")
def _tensor_bottom(f, idx):
    x = idx.dom
    left = graph_tensor(f, Graph.empty(x, x))
    right = graph_tensor(Graph.empty(x, x), f)
    return not left.vertices and not right.vertices


# -- the isomorphism ----------------------------------------------------------------

@law("roundtrip-CG")
def _roundtrip_cg(m):
    return functor_C(functor_G(m)) == m


@law("roundtrip-GC")
def _roundtrip_gc(g):
    return functor_G(functor_C(g)) == g


@law("roundtrip-bijection")
def _roundtrip_bijection(ida, idb):
    a, b = ida.dom, idb.dom
    graphs = set(enumerate_graphs(a, b))
    images = [functor_G(m) for m in enumerate_cp_morphisms(a, b)]
    return len(graphs) == len(images) == count_morphisms(a, b) and set(images) == graphs


@law("G-identity")
def _g_identity(ida):
    return functor_G(cp_identity(ida.dom)) == graph_identity(ida.dom)


@law("C-identity")
def _c_identity(ida):
    return functor_C(graph_identity(ida.dom)) == cp_identity(ida.dom)


@law("G-composition")
def _g_composition(m1, m2):
    return functor_G(cp_compose(m2, m1)) == graph_compose(functor_G(m2), functor_G(m1))


@law("C-composition")
def _c_composition(g1, g2):
    return functor_C(graph_compose(g2, g1)) == cp_compose(functor_C(g2), functor_C(g1))


@law("G-diagonal")
def _g_diagonal(m1, m2):
    # (S . R)(a, a, c, c)  <=>  exists b. R(a, a, b, b) and S(b, b, c, c)
    composite = cp_compose(m2, m1)
    for a, c in product(m1.dom, m2.cod):
        lhs = composite(a, a, c, c)
        rhs = any(m1(a, a, b, b) and m2(b, b, c, c) for b in m1.cod)
        if lhs != rhs:
            return False
    vertices = {(a, c) for a, c in product(m1.dom, m2.cod) if composite(a, a, c, c)}
    return functor_G(composite).vertices == vertices


@law("G-tensor")
def _g_tensor(m1, m2):
    return functor_G(cp_tensor(m1, m2)) == graph_tensor(functor_G(m1), functor_G(m2))


@law("G-dagger")
def _g_dagger(m):
    return functor_G(cp_dagger(m)) == graph_dagger(functor_G(m))


@law("G-order")
def _g_order(m1, m2):
    joined = CPMorphism._trusted(m1.dom, m1.cod, union_rel([m1.rel, m2.rel]))
    monotone = (m1.rel.pairs <= m2.rel.pairs) == graph_leq(functor_G(m1), functor_G(m2))
    return monotone and functor_G(joined) == graph_join([functor_G(m1), functor_G(m2)])


@law("G-double")
def _g_double(r):
    return functor_G(embed_double(r)) == embed_graph(r)


# -- closure of CP morphisms --------------------------------------------------------

@law("cp-identity-closed")
def _cp_identity_closed(ida):
    return is_cp(cp_identity(ida.dom).rel)


@law("cp-compose-closed")
def _cp_compose_closed(m1, m2):
    return is_cp(cp_compose(m2, m1).rel)


@law("cp-tensor-closed")
def _cp_tensor_closed(m1, m2):
    return is_cp(cp_tensor(m1, m2).rel)


@law("cp-double-closed")
def _cp_double_closed(r):
    return is_cp(embed_double(r).rel)


@law("cp-C-closed")
def _cp_c_closed(g):
    return is_cp(functor_C(g).rel)


# -- states ---------------------------------------------------------------------------

def _subset_state(x: FiniteSet, subset) -> Graph:
    return embed_graph(Relation._trusted(UNIT, x, frozenset((UNIT_ELEMENT, u) for u in subset)))


def pure_by_subsets(g: Graph) -> bool:
    """Brute force: is ``g`` the image of some subset ``U`` of its carrier?"""
    x = g.cod
    subsets = chain.from_iterable(combinations(x.elements, k) for k in range(len(x) + 1))
    return any(_subset_state(x, u) == g for u in subsets)


@law("purity")
def _purity(g):
    return is_pure(State.of(g)) == pure_by_subsets(g)


@law("mixing-anomaly")
def _mixing_anomaly(g1, g2):
    return not is_pure(State.of(g1)) and not is_pure(State.of(g2)) and is_pure(State.of(graph_join([g1, g2])))


@law("census")
def _census(idx):
    x = idx.dom
    n = len(x)
    graphs = list(enumerate_state_graphs(x))
    if len(graphs) != count_states(n) or len(set(graphs)) != len(graphs):
        return False
    if sum(is_pure(State.of(g)) for g in graphs) != 2 ** n:
        return False
    if n <= BRUTE_FORCE_BOUND:
        positives = list(enumerate_positive_relations(x))
        if len(positives) != count_states(n):
            return False
        if any(positive_of_graph(graph_of_positive(r)) != r for r in positives):
            return False
        if {graph_of_positive(r) for r in positives} != set(graphs):
            return False
        if any(graph_of_positive(positive_of_graph(g)) != g for g in graphs):
            return False
    return True


# -- instance sources -----------------------------------------------------------------

def objects(size_bound: int) -> list[FiniteSet]:
    return [standard_set(k) for k in range(size_bound + 1)]


@lru_cache(maxsize=None)
def _graph_homset(a: FiniteSet, b: FiniteSet) -> tuple:
    return tuple(enumerate_graphs(a, b))


@lru_cache(maxsize=None)
def _cp_homset(a: FiniteSet, b: FiniteSet) -> tuple:
    return tuple(enumerate_cp_morphisms(a, b))


@lru_cache(maxsize=None)
def _rel_homset(a: FiniteSet, b: FiniteSet) -> tuple:
    return tuple(enumerate_relations(a, b))


def _random_relation(a, b, rng):
    return Relation._trusted(a, b, frozenset(p for p in product(a, b) if rng.random() < 0.5))


class _Source:
    """Homsets of one kind of morphism: all of them when small, else samples."""

    def __init__(self, kind: str):
        self.kind = kind

    def size(self, a, b) -> int | None:
        if self.kind == "graph":
            n = count_morphisms(a, b)
            return n if n <= HOMSET_LIMIT else None
        if self.kind == "cp":
            small = (len(a) * len(b)) ** 2 <= CP_BRUTE_FORCE_BITS
            return count_morphisms(a, b) if small else None
        if self.kind == "rel":
            return 2 ** (len(a) * len(b)) if len(a) * len(b) <= 12 else None
        raise ValueError(self.kind)

    def all(self, a, b) -> tuple:
        return {"graph": _graph_homset, "cp": _cp_homset, "rel": _rel_homset}[self.kind](a, b)

    def pick(self, a, b, rng):
        if self.size(a, b) is not None:
            return rng.choice(self.all(a, b))
        if self.kind == "graph":
            return random_graph(a, b, rng)
        if self.kind == "cp":
            return functor_C(random_graph(a, b, rng))
        return _random_relation(a, b, rng)


def _encode(x) -> dict:
    if isinstance(x, Graph):
        return {"graph": graph_to_document(x)}
    if isinstance(x, CPMorphism):
        return {"cp": relation_to_document(x.rel)}
    return {"relation": relation_to_document(x)}


def _decode(d: dict):
    if "graph" in d:
        return graph_from_document(d["graph"])
    if "cp" in d:
        rel = relation_from_document(d["cp"])
        return CPMorphism._trusted(*cp_shape(rel), rel)
    return relation_from_document(d["relation"])


def counterexample(name: str, args) -> dict:
    return {"law": name, "args": [_encode(x) for x in args]}


def replay(cx: dict) -> bool:
    """Re-evaluate a recorded instance; ``False`` reproduces the violation."""
    return bool(LAWS[cx["law"]](*(_decode(d) for d in cx["args"])))


def _fail(name, args, checked, seed=None, sampled=False) -> LawReport:
    return LawReport(name, checked, False, counterexample(name, args), seed=seed if sampled else None, sampled=sampled)


def check_law(name, shapes, *, kind="graph", seed=DEFAULT_SEED, samples=DEFAULT_SAMPLES,
              limit=EXHAUSTIVE_LIMIT) -> LawReport:
    """Run law ``name`` over every instance of the given argument shapes.

    A shape is a tuple of ``(dom, cod)`` pairs, one per argument.  Shapes are
    taken smallest first and checked exhaustively while the running total
    stays within ``limit``; the rest contribute ``samples`` seeded draws.
    """
    predicate = LAWS[name]
    source = _Source(kind)

    def shape_size(shape):
        total = 1
        for a, b in shape:
            n = source.size(a, b)
            if n is None:
                return None
            total *= n
        return total

    sized = sorted(((shape_size(s), i, s) for i, s in enumerate(shapes)),
                   key=lambda t: (t[0] is None, t[0] or 0, t[1]))
    budget, checked, leftover = limit, 0, []
    for size, _, shape in sized:
        if size is None or size > budget:
            leftover.append(shape)
            continue
        budget -= size
        for args in product(*(source.all(a, b) for a, b in shape)):
            checked += 1
            if not predicate(*args):
                return _fail(name, args, checked)
    if leftover:
        rng = random.Random(f"{seed}:{name}")
        for _ in range(samples):
            shape = rng.choice(leftover)
            args = [source.pick(a, b, rng) for a, b in shape]
            checked += 1
            if not predicate(*args):
                return _fail(name, args, checked, seed, True)
    return LawReport(name, checked, True, seed=seed if leftover else None, sampled=bool(leftover))


def check_object_law(name, object_tuples) -> LawReport:
    """Run a law whose arguments are objects, passed as identity graphs."""
    predicate = LAWS[name]
    checked = 0
    for objs in object_tuples:
        args = [graph_identity(x) for x in objs]
        checked += 1
        if not predicate(*args):
            return _fail(name, args, checked)
    return LawReport(name, checked, True)


def homs(objs):
    return [((a, b),) for a in objs for b in objs]


def chains(objs, length):
    return [tuple(zip(path, path[1:])) for path in product(objs, repeat=length + 1)]


def pairs_of(objs):
    return [((a, c), (b, d)) for a, c, b, d in product(objs, repeat=4)]


# -- composition tables ---------------------------------------------------------------

class _Violation(Exception):
    def __init__(self, name, args):
        self.name, self.args_ = name, args


class _Tables:
    """Compose, join and dagger as integer tables over enumerated homsets."""

    def __init__(self):
        self._index = {}
        self._compose = {}
        self._join = {}
        self._dagger = {}

    @staticmethod
    def hom(a, b):
        return _graph_homset(a, b)

    def index(self, a, b) -> dict:
        if (a, b) not in self._index:
            self._index[a, b] = {g: i for i, g in enumerate(self.hom(a, b))}
        return self._index[a, b]

    def _lookup(self, g, a, b, law_name, args):
        i = self.index(a, b).get(g)
        if i is None:
            raise _Violation(law_name, args)
        return i

    def compose(self, a, b, c) -> np.ndarray:
        """``T[i, j]`` is the index of ``hom(b, c)[i] . hom(a, b)[j]``."""
        key = (a, b, c)
        if key not in self._compose:
            g2s, g1s = self.hom(b, c), self.hom(a, b)
            t = np.empty((len(g2s), len(g1s)), dtype=np.int32)
            for i, g2 in enumerate(g2s):
                for j, g1 in enumerate(g1s):
                    t[i, j] = self._lookup(graph_compose(g2, g1), a, c, "compose-well-formed", (g1, g2))
            self._compose[key] = t
        return self._compose[key]

    def join(self, a, b) -> np.ndarray:
        if (a, b) not in self._join:
            gs = self.hom(a, b)
            t = np.empty((len(gs), len(gs)), dtype=np.int32)
            for i, g in enumerate(gs):
                for j, h in enumerate(gs):
                    t[i, j] = self._lookup(graph_join([g, h]), a, b, "join-well-formed", (g, h))
            self._join[a, b] = t
        return self._join[a, b]

    def dagger(self, a, b) -> np.ndarray:
        if (a, b) not in self._dagger:
            self._dagger[a, b] = np.array(
                [self._lookup(graph_dagger(g), b, a, "dagger-well-formed", (g,)) for g in self.hom(a, b)],
                dtype=np.int32,
            )
        return self._dagger[a, b]


@law("join-well-formed")
def _join_well_formed(g, h):
    return _well_formed(graph_join([g, h]))


@law("dagger-well-formed")
def _dagger_well_formed(g):
    return _well_formed(graph_dagger(g))


def _tables_feasible(objs) -> bool:
    return all(count_morphisms(a, b) <= HOMSET_LIMIT for a in objs for b in objs)


def _table_law(name, objs, arity, compute):
    """Evaluate ``compute(tables, *objects)`` -> (lhs, rhs, decode) over every
    tuple of ``arity`` objects; ``decode(index_tuple)`` rebuilds the args."""
    tables = _Tables()
    checked = 0
    try:
        for obs in product(objs, repeat=arity):
            lhs, rhs, decode = compute(tables, *obs)
            checked += lhs.size
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                return _fail(name, decode(tuple(int(i) for i in bad[0])), checked)
    except _Violation as v:
        return _fail(v.name, v.args_, checked)
    return LawReport(name, checked, True)


def _associativity_tables(t, a, b, c, d):
    lhs = t.compose(a, c, d)[:, t.compose(a, b, c)]
    rhs = t.compose(a, b, d)[t.compose(b, c, d)]

    def decode(ix):
        i3, i2, i1 = ix
        return (t.hom(a, b)[i1], t.hom(b, c)[i2], t.hom(c, d)[i3])

    return lhs, rhs, decode


def _contravariance_tables(t, a, b, c):
    lhs = t.dagger(a, c)[t.compose(a, b, c)]
    rhs = t.compose(c, b, a)[t.dagger(a, b)[None, :], t.dagger(b, c)[:, None]]

    def decode(ix):
        i2, i1 = ix
        return (t.hom(a, b)[i1], t.hom(b, c)[i2])

    return lhs, rhs, decode


def _join_left_tables(t, a, b, c):
    comp = t.compose(a, b, c)
    lhs = comp[:, t.join(a, b)]
    rhs = t.join(a, c)[comp[:, :, None], comp[:, None, :]]

    def decode(ix):
        ig, i1, i2 = ix
        return (t.hom(a, b)[i1], t.hom(a, b)[i2], t.hom(b, c)[ig])

    return lhs, rhs, decode


def _join_right_tables(t, a, b, c):
    comp = t.compose(a, b, c)
    lhs = comp[t.join(b, c)]
    rhs = t.join(a, c)[comp[:, None, :], comp[None, :, :]]

    def decode(ix):
        i1, i2, if_ = ix
        return (t.hom(a, b)[if_], t.hom(b, c)[i1], t.hom(b, c)[i2])

    return lhs, rhs, decode


def _triple_law(name, objs, arity, compute, shapes, seed, samples):
    if _tables_feasible(objs):
        return _table_law(name, objs, arity, compute)
    return check_law(name, shapes, seed=seed, samples=samples)


# -- suites ---------------------------------------------------------------------------

def check_category_laws(size_bound: int, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> LawReport:
    objs = objects(size_bound)
    parts = [
        check_law("left-identity", homs(objs), seed=seed, samples=samples),
        check_law("right-identity", homs(objs), seed=seed, samples=samples),
        _triple_law("associativity", objs, 4, _associativity_tables, chains(objs, 3), seed, samples),
    ]
    if not _tables_feasible(objs):
        parts.append(check_law("compose-well-formed", chains(objs, 2), seed=seed, samples=samples))
    return merge_reports("category-laws", parts)


def check_roundtrip(size_bound: int, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> LawReport:
    objs = objects(size_bound)
    small = [(a, b) for a in objs for b in objs if (len(a) * len(b)) ** 2 <= CP_BRUTE_FORCE_BITS]
    return merge_reports("roundtrip", [
        check_law("roundtrip-CG", homs(objs), kind="cp", seed=seed, samples=samples),
        check_law("roundtrip-GC", homs(objs), seed=seed, samples=samples),
        check_object_law("roundtrip-bijection", small),
    ])


def check_functoriality(size_bound: int, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> LawReport:
    objs = objects(size_bound)
    same_homset = [((a, b), (a, b)) for a in objs for b in objs]
    kw = dict(seed=seed, samples=samples)
    return merge_reports("functoriality", [
        check_object_law("G-identity", [(a,) for a in objs]),
        check_object_law("C-identity", [(a,) for a in objs]),
        check_law("G-composition", chains(objs, 2), kind="cp", **kw),
        check_law("C-composition", chains(objs, 2), **kw),
        check_law("G-diagonal", chains(objs, 2), kind="cp", **kw),
        check_law("G-tensor", pairs_of(objs), kind="cp", **kw),
        check_law("G-dagger", homs(objs), kind="cp", **kw),
        check_law("G-order", same_homset, kind="cp", **kw),
        check_law("G-double", homs(objs), kind="rel", **kw),
    ])


def check_iso(size_bound: int, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> LawReport:
    return merge_reports("isomorphism", [
        check_roundtrip(size_bound, seed, samples),
        check_functoriality(size_bound, seed, samples),
    ])


def check_enriched_compact(size_bound: int, snake_bound: int = 3, seed: int = DEFAULT_SEED,
                           samples: int = DEFAULT_SAMPLES) -> LawReport:
    objs = objects(size_bound)
    snake_objs = objects(snake_bound)
    kw = dict(seed=seed, samples=samples)
    with_object = [((a, b), (x, x)) for a in objs for b in objs for x in objs]
    two_parallel_then_one = [((a, c), (a, c), (b, d)) for a, c, b, d in product(objs, repeat=4)]
    one_then_two_parallel = [((a, c), (b, d), (b, d)) for a, c, b, d in product(objs, repeat=4)]
    interchange = [
        ((a, b), (b, c), (a2, b2), (b2, c2))
        for a, b, c, a2, b2, c2 in product(objs, repeat=6)
    ]
    dagger = merge_reports("dagger", [
        check_law("dagger-involution", homs(objs), **kw),
        check_object_law("dagger-identity", [(a,) for a in objs]),
        _triple_law("dagger-contravariance", objs, 3, _contravariance_tables, chains(objs, 2), seed, samples),
        check_law("dagger-tensor", pairs_of(objs), **kw),
    ])
    monoidal = merge_reports("monoidal", [
        check_law("tensor-well-formed", pairs_of(objs), **kw),
        check_object_law("tensor-identity", list(product(objs, repeat=2))),
        check_law("tensor-unit", homs(objs), **kw),
        check_law("interchange", interchange, **kw),
        check_object_law("symmetry-involution", list(product(snake_objs, repeat=2))),
        check_law("symmetry-naturality", pairs_of(objs), **kw),
    ])
    compact = merge_reports("compact", [
        check_object_law("snake-left", [(a,) for a in snake_objs]),
        check_object_law("snake-right", [(a,) for a in snake_objs]),
        check_object_law("cup-symmetric", [(a,) for a in snake_objs]),
        check_object_law("cap-is-dagger-of-cup", [(a,) for a in snake_objs]),
    ])
    enrichment = merge_reports("enrichment", [
        _triple_law("compose-join-left", objs, 3, _join_left_tables,
                    [((a, b), (a, b), (b, c)) for a, b, c in product(objs, repeat=3)], seed, samples),
        _triple_law("compose-join-right", objs, 3, _join_right_tables,
                    [((a, b), (b, c), (b, c)) for a, b, c in product(objs, repeat=3)], seed, samples),
        check_law("compose-bottom", with_object, **kw),
        check_law("tensor-join-left", two_parallel_then_one, **kw),
        check_law("tensor-join-right", one_then_two_parallel, **kw),
        check_law("tensor-bottom", with_object, **kw),
    ])
    return merge_reports("enriched-compact", [dagger, monoidal, compact, enrichment])


def check_cp_axioms_closure(size_bound: int, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> LawReport:
    objs = objects(size_bound)
    kw = dict(seed=seed, samples=samples)
    return merge_reports("cp-closure", [
        check_object_law("cp-identity-closed", [(a,) for a in objs]),
        check_law("cp-compose-closed", chains(objs, 2), kind="cp", **kw),
        check_law("cp-tensor-closed", pairs_of(objs), kind="cp", **kw),
        check_law("cp-double-closed", homs(objs), kind="rel", **kw),
        check_law("cp-C-closed", homs(objs), **kw),
    ])


def check_purity_equivalence(size_bound: int) -> LawReport:
    report = check_law("purity", [((UNIT, x),) for x in objects(size_bound)], limit=10 ** 9)
    stats = {}
    for x in objects(size_bound):
        graphs = _graph_homset(UNIT, x)
        stats[f"pure@{len(x)}"] = f"{sum(is_pure(State.of(g)) for g in graphs)}/{len(graphs)}"
    return LawReport(report.law_name, report.instances_checked, report.passed, report.counterexample, stats=stats)


def mixing_instance() -> tuple[Graph, Graph]:
    """The two mixed states on ``{x, y, z}`` whose union is the triangle."""
    x = FiniteSet("X", ("x", "y", "z"))

    def state(*edges):
        return Graph(UNIT, x, [(UNIT_ELEMENT, v) for v in "xyz"],
                     [((UNIT_ELEMENT, u), (UNIT_ELEMENT, w)) for u, w in edges])

    return state(("x", "z"), ("x", "y")), state(("x", "z"), ("z", "y"))


def find_mixing_triples(x: FiniteSet) -> list[tuple[Graph, Graph]]:
    """All ordered pairs of mixed states of ``x`` whose join is pure."""
    graphs = list(enumerate_state_graphs(x))
    return [(g, h) for g in graphs for h in graphs if _mixing_anomaly(g, h)]


def demo_mixing() -> LawReport:
    g1, g2 = mixing_instance()
    if not _mixing_anomaly(g1, g2):
        return _fail("mixing-anomaly", (g1, g2), 1)
    found = find_mixing_triples(standard_set(3))
    checked = 1 + count_states(3) ** 2
    if not found:
        return _fail("mixing-anomaly", (g1, g2), checked)
    return LawReport("mixing-anomaly", checked, True, stats={"anomalous-pairs@3": len(found)})


def check_census(n_max: int = 5) -> LawReport:
    return check_object_law("census", [(x,) for x in objects(n_max)])


def run_all(size_bound: int = 2, snake_bound: int = 3, census_max: int = 5, purity_bound: int = 3,
            seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> list[LawReport]:
    return [
        check_census(census_max),
        check_category_laws(size_bound, seed, samples),
        check_iso(size_bound, seed, samples),
        check_enriched_compact(size_bound, snake_bound, seed, samples),
        check_purity_equivalence(purity_bound),
        demo_mixing(),
        check_cp_axioms_closure(size_bound, seed, samples),
    ]
