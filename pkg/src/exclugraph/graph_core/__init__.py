from .graph import Graph, VertexPermutation
from .operations import complement, or_product
from .families import FamilyKind, FamilySpec, generate_family, parse_family
from .symmetry import (
    AutomorphismGroup,
    automorphism_group,
    find_isomorphism,
    group_order,
    is_self_complementary,
    is_vertex_transitive,
    orbit,
    orbits,
)
from .codec import GraphFormat, codec, parse_graph, serialize_graph, encode_graph6, decode_graph6

__all__ = [
    "Graph",
    "VertexPermutation",
    "complement",
    "or_product",
    "FamilyKind",
    "FamilySpec",
    "generate_family",
    "parse_family",
    "AutomorphismGroup",
    "automorphism_group",
    "find_isomorphism",
    "group_order",
    "is_self_complementary",
    "is_vertex_transitive",
    "orbit",
    "orbits",
    "GraphFormat",
    "codec",
    "parse_graph",
    "serialize_graph",
    "encode_graph6",
    "decode_graph6",
]
