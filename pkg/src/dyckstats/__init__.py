"""Statistics, bijections and generating functions for Dyck-like lattice paths.

The package exposes five layers:

* ``paths`` -- Dyck and s-ary paths, exhaustive enumeration, pyramid and
  height-residue statistics, distribution tables;
* ``trees`` -- ordered/planted trees and the preorder path correspondence;
* ``bijection`` -- the regrafting bijection carrying exterior pairs to up
  steps at height divisible by 3;
* ``involution`` -- the cut-line standard form and the block-reflection
  involution shifting height-residue classes;
* ``series`` -- exact truncated bivariate series, continued-fraction and
  functional-equation solvers, and identity checkers.

Everything is immutable after construction and safe to share across threads.
"""

from .bijection import (
    RegraftCase,
    regraft,
    regraft_case,
    regraft_inverse,
    regraft_inverse_case,
    regraft_path,
    regraft_path_inverse,
    regraft_tree,
    regraft_tree_inverse,
)
from .errors import (
    BadCharError,
    BelowAxisError,
    CapExceededError,
    DyckstatsError,
    EmptyResidueSetError,
    HeightTooLowError,
    IndexOutOfRangeError,
    InputError,
    InternalError,
    InvalidMError,
    NonBalancedError,
    NonConvergenceError,
    NonPositiveSizeError,
    NotInImageError,
    NotPlantedError,
    NotReflectableError,
    NonUnitDivisorError,
)
from .involution import (
    ResidueClass,
    Segment,
    SegmentKind,
    StandardForm,
    decompose_standard,
    reflect_blocks,
    reflect_segment,
    residue_class,
    residue_shift,
    segment_residue_counts,
)
from .paths import (
    DOWN,
    DYCK_ENUMERATION_CAP,
    SARY_ENUMERATION_CAP,
    UP,
    DistributionTable,
    DyckPath,
    Pyramid,
    SAryPath,
    Step,
    catalan,
    distribution,
    enumerate_dyck,
    enumerate_sary,
    exterior_pair_indices,
    exterior_pairs,
    matched_pairs,
    maximal_pyramids,
    narayana,
    parse_path,
    pyramid_weight,
    render_text,
    sary_distribution,
    sary_exterior_down_steps,
    sary_maximal_pyramids,
    sary_pyramid_weight,
    up_steps_at_residue,
)
from .series import (
    BivariateSeries,
    ConjectureReport,
    ResidueSpec,
    XPoly,
    bounded_height_gf,
    chebyshev_u,
    check_conjectured_identity,
    check_residue_shift_identity,
    check_sary_duality,
    check_zero_residue_quadratic,
    residue_gf,
    residue_gf_brute,
    sary_equation_residual,
    sary_gf,
    scaled_chebyshev,
)
from .trees import (
    EdgeRef,
    OrderedTree,
    PlantedTree,
    decompose_planted,
    edges_at_residue,
    exterior_edges,
    is_bouquet,
    make_bouquet,
    make_chain,
    merge_planted,
    path_to_tree,
    tree_to_path,
)

__version__ = "0.1.0"
