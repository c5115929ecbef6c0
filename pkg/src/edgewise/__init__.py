"""Endofunctor words on the simplex category and the subdivisions they induce."""

from .duality import (
    DualityReport,
    duality_selftest,
    interval_dual,
    ordered_hom_delta,
    ordered_hom_interval,
    ordinal_dual,
)
from .homology import (
    ChainComplex,
    ChainComplexError,
    HomologyReport,
    IntegerMatrix,
    WeVerdict,
    chain_complex,
    euler_characteristic,
    homology,
    rank_fraction_free,
    smith_normal_form,
    verdict,
)
from .ordinals import (
    Generator,
    IntervalMap,
    MismatchedObjectsError,
    OrdinalMap,
    compose,
    compose_interval,
    concat_maps,
    concat_objects,
    degeneracy,
    face,
    factorize,
    identity,
    interval_identity,
    interval_maps,
    opposite,
    ordinal_maps,
)
from .simplicial import (
    GammaReport,
    ProductView,
    SimplicialSetView,
    SkeletonGraph,
    StandardSimplexView,
    SubdividedView,
    eta,
    gamma_check,
    label_of,
    mu,
    phi_map,
    product,
    psi_map,
    skeleton,
    standard_simplex,
    subdivide,
)
from .words import (
    BACKWARD,
    C0,
    FORWARD,
    ID,
    NONE,
    OP,
    GeneratorAction,
    MalformedActionError,
    SimplicialInterval,
    Word,
    WordParseError,
    compose_words,
    decompose,
    eval_map,
    eval_object,
    generator_action,
    interval_of,
    is_we_preserving,
    iter_words,
    sum_words,
)

__version__ = "0.1.0"
