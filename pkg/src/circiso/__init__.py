"""Circulant graphs, Adam's (Type-1) and Type-2 isomorphism, and their orbits."""

from .circulant import CirculantGraph, ConnectionSet, make_graph
from .families import (
    JumpTwoParams,
    PrimeCubeParams,
    base_family_set,
    d_value,
    extended_family_set,
    family_orbit,
    family_set,
    mirror_params,
    r2_family,
)
from .iso import (
    IsoVerdict,
    Type2Orbit,
    adams_orbit,
    adams_witness,
    classify,
    gcd_signature_compatible,
    search_type2,
    t2_orbit,
    v_orbit,
)
from .modring import UnitsGroup, expand_symmetric, gcd, reflexive_reduce, scale_set, units
from .oracle import (
    SearchOutcome,
    SweepReport,
    VertexBijection,
    exhaustive_type2_sweep,
    isomorphic_bruteforce,
    verify_bijection_is_isomorphism,
)
from .transform import (
    LabeledGraph,
    Shear,
    apply_to_graph,
    circulant_image,
    compose,
    image_if_circulant,
    satisfies_equidistance,
)

__all__ = [
    "CirculantGraph",
    "ConnectionSet",
    "IsoVerdict",
    "JumpTwoParams",
    "LabeledGraph",
    "PrimeCubeParams",
    "SearchOutcome",
    "Shear",
    "SweepReport",
    "Type2Orbit",
    "UnitsGroup",
    "VertexBijection",
    "adams_orbit",
    "adams_witness",
    "apply_to_graph",
    "base_family_set",
    "circulant_image",
    "classify",
    "compose",
    "d_value",
    "exhaustive_type2_sweep",
    "expand_symmetric",
    "extended_family_set",
    "family_orbit",
    "family_set",
    "gcd",
    "gcd_signature_compatible",
    "image_if_circulant",
    "isomorphic_bruteforce",
    "make_graph",
    "mirror_params",
    "r2_family",
    "reflexive_reduce",
    "satisfies_equidistance",
    "scale_set",
    "search_type2",
    "t2_orbit",
    "units",
    "v_orbit",
    "verify_bijection_is_isomorphism",
]
