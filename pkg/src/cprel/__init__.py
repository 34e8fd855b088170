"""Completely positive relations, CP(Rel), and the isomorphic category of graphs."""
from .census import count_morphisms, count_states, enumerate_positive_relations, enumerate_state_graphs
from .functors import functor_C, functor_G, roundtrip_check
from .graphcat import (
    Graph,
    State,
    embed_graph,
    graph_cap,
    graph_compose,
    graph_cup,
    graph_dagger,
    graph_identity,
    graph_join,
    graph_leq,
    graph_symmetry,
    graph_tensor,
    is_pure,
)
from .relcore import (
    UNIT,
    CPMorphism,
    FiniteSet,
    Relation,
    bar,
    compose_rel,
    converse,
    cp_compose,
    cp_tensor,
    embed_double,
    is_cp,
    is_positive,
    positive_witness,
    product_set,
    tensor_rel,
)
from .report import LawReport

__version__ = "0.1.0"
