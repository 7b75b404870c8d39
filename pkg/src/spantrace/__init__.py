"""Exact arithmetic for spans of finite group actions.

Core surfaces: finite permutation groups and their G-sets, the span
category with pullback composition and its two trace computations, the
Burnside ring with marks and idempotents, permutation characters and the
cyclic eigenvalue calculus, Grothendieck-Witt forms over the reals and odd
prime fields, and elliptic-curve point counts with obstruction
certificates.
"""

from .burnside import (
    BurnsideElement,
    Span,
    SpanMorphism,
    burnside_basis,
    burnside_one,
    burnside_zero,
    compose,
    euler_characteristic,
    identity_morphism,
    identity_span,
    idempotents,
    is_idempotent,
    marks,
    monoidal_product,
    morphism_from_json,
    morphism_from_span,
    morphism_to_json,
    ring_multiply,
    span_from_json,
    span_iso_equal,
    span_to_json,
    trace_categorical,
    trace_direct,
    zero_morphism,
)
from .cyclic import (
    MultiplicityVector,
    character_of_multiplicities,
    construct_E_I,
    cyclic_injectivity_check,
    has_integer_traces,
    multiplicities_from_character,
    orbit_eigenvalue_profile,
    total_profile,
)
from .ellcurve import (
    BinaryCurveField,
    FrobeniusData,
    ObstructionCertificate,
    PrimeCurveField,
    WeierstrassCurve,
    enumerate_curves,
    extension_count,
    naive_point_count,
    obstruction_certificate,
    parse_field_spec,
    point_count,
)
from .errors import BoundExceededError, DomainError
from .groups import (
    FiniteGroup,
    alternating_group,
    cyclic_group,
    group_from_generators,
    klein_four,
    parse_group_spec,
)
from .gsets import (
    GSet,
    OrbitType,
    coset_gset,
    disjoint_union,
    empty_gset,
    fixed_points,
    gset_from_generator_images,
    gset_from_json,
    gset_to_json,
    is_isomorphic,
    orbit_type,
    point_gset,
    product,
    trivial_gset,
)
from .gw import (
    GWElement,
    OddPrimeField,
    RealField,
    add as gw_add,
    diagonal_form,
    generator as gw_generator,
    gw_zero,
    multiply as gw_multiply,
    rank_signature,
    realize_in_burnside,
    trace_form_C_over_R,
)
from .linrep import (
    IdempotentTraceReport,
    MatrixRep,
    RepElement,
    gal_r_elliptic_check,
    h0_matrix,
    image_character_formula,
    permutation_character,
    permutation_counterexample_search,
    theta,
    theta_of_idempotent,
    trace_character_formula,
    verify_idempotent_trace_theorem,
)
from .rings import PrimeField, PrimePowerRing, Rationals, parse_ring

__version__ = "0.1.0"
