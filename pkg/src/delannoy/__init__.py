"""Exact computations around Delannoy paths: enumeration, Euler-characteristic
integration on ordered tuples, the signed path category, and its Grothendieck
ring."""

from .paths import (
    Path,
    canonical_representative,
    delannoy_number,
    encode_orbit,
    enumerate_paths,
    lift3,
    project_path,
)
from .euler import (
    HalfOpenInterval,
    SchwartzFn,
    cell_count,
    integrate,
    interval_indicator,
    key_indicator,
    multiply,
    pair,
    point_mass,
    pushforward_coordinate,
    refine,
)
from .category import (
    Morphism,
    apply_kernel,
    compose,
    compose_oracle,
    epsilon,
    identity,
    invariant_extension,
    multiplicity_rank,
    projector,
    slice_kernel,
    trace,
)
from .kring import (
    IntValuedPoly,
    KClass,
    KTensorClass,
    adams,
    antipode,
    concat_mul,
    counit,
    dual,
    hilbert_value,
    induce,
    inner,
    lambda_binomial,
    lyndon_weights,
    restrict,
    schur_apply,
    schur_dimension_poly,
    schwartz_class,
    tensor_mul,
)

__version__ = "0.1.0"

__all__ = [
    "Path",
    "canonical_representative",
    "delannoy_number",
    "encode_orbit",
    "enumerate_paths",
    "lift3",
    "project_path",
    "HalfOpenInterval",
    "SchwartzFn",
    "cell_count",
    "integrate",
    "interval_indicator",
    "key_indicator",
    "multiply",
    "pair",
    "point_mass",
    "pushforward_coordinate",
    "refine",
    "Morphism",
    "apply_kernel",
    "compose",
    "compose_oracle",
    "epsilon",
    "identity",
    "invariant_extension",
    "multiplicity_rank",
    "projector",
    "slice_kernel",
    "trace",
    "IntValuedPoly",
    "KClass",
    "KTensorClass",
    "adams",
    "antipode",
    "concat_mul",
    "counit",
    "dual",
    "hilbert_value",
    "induce",
    "inner",
    "lambda_binomial",
    "lyndon_weights",
    "restrict",
    "schur_apply",
    "schur_dimension_poly",
    "schwartz_class",
    "tensor_mul",
]
