"""Finite semihypergroups with exact rational convolution tables.

The submodules cover the core structure (:mod:`semihyper.core`),
constructions from groups and parameters (:mod:`semihyper.construct`),
ideal theory (:mod:`semihyper.ideals`), homomorphisms
(:mod:`semihyper.homs`), invariant means and the dual algebra
(:mod:`semihyper.means`) and text formats (:mod:`semihyper.io`).
"""

from .construct import (
    adjoin_identity,
    adjoin_zero,
    coset_space,
    double_coset_space,
    from_semigroup,
    orbit_space,
    product_semihypergroup,
    three_element_conditions,
    three_element_parametric,
    zero_semigroup,
)
from .core import (
    AxiomReport,
    ConvolutionTable,
    ElementSet,
    Measure,
    Semihypergroup,
    as_rational,
    check_axioms,
    convolve_measures,
    convolve_points,
    find_identity,
    find_involution,
    identity_sidedness,
    is_commutative,
    set_convolve,
    support,
)
from .errors import (
    AxiomError,
    CarrierMismatchError,
    FixtureError,
    FloatInputError,
    GroupError,
    NotAHomomorphismError,
    NotAnIdealError,
    ParameterError,
    ParseError,
    PreconditionError,
    SearchSpaceError,
    SemihypergroupError,
    TheoremViolation,
    UnknownElementError,
)
from .fixtures import FIXTURE_NAMES, builtin_fixture, literal_table
from .groups import (
    AffineAction,
    CayleyTable,
    cyclic_group,
    direct_product,
    inner_action,
    symmetric_group,
    translation_action,
    trivial_action,
)
from .homs import (
    ElementMap,
    enumerate_homomorphisms,
    image_semihypergroup,
    is_homomorphism,
    pull_ideal,
    push_ideal,
    pushforward,
    support_lemma_check,
)
from .ideals import (
    classify,
    ideal_closure,
    is_left_ideal,
    is_minimal_left_ideal,
    is_minimal_right_ideal,
    is_right_ideal,
    kernel,
    kernel_sandwich_check,
    left_ideals,
    minimal_left_ideals,
    minimal_right_ideals,
    principal_left_ideal,
    principal_right_ideal,
    right_ideals,
)
from .io import parse_group, parse_shg, render_group, render_shg
from .means import (
    FunctionVector,
    arens_product,
    duality_check,
    find_invariant_mean,
    introversion,
    introversion_hull_check,
    is_invariant_mean,
    lim_exists_commutative_check,
    right_orbit,
    rim_implies_unique_minimal_left_check,
    translate,
    translation_matrix,
)

__version__ = "0.1.0"
