"""Cross-sections of Green's relations on the monoid of order-preserving maps."""

from .errors import (
    BudgetExceeded, ConfigurationError, DomainError, FormatError,
    NotCrossSectionError, NotDecreasingError,
)
from .limits import DEFAULT_LIMITS, Limits
from .transformations import (
    ConvexPartition, CrossSection, GreenRelation, SetPartition, Transformation,
    compose, cross_section_defects, dense_cross_section, enumerate_convex_partitions,
    enumerate_on, fixed_points, green_related, higgins_dual, image,
    is_cross_section, is_order_preserving, kernel, pekhterev_r_section,
)
from .trees import (
    InnerTree, OrderedTree, canonical_bounds, diagram, elementary_decomposition,
    enumerate_decreasing, enumerate_trees, from_shape, inner_tree, is_decreasing,
    is_elementary, left_inner, mirror_tree, omega, render_diagram, render_dot,
    right_inner, skeleton, subordinates, tree_from_levels,
)
from .rsections import (
    partition_tree, phi, phi_semigroup, reconstruct_tree, theta_cardinality,
    theta_set, w_chain,
)
from .lsections import (
    RespectfulTree, alpha, dual_r_cross_section, elementary_from_respectful,
    enumerate_respectful, faithful_marking, hull, is_respectful, l_cross_section,
    respectful_from_elementary, similar,
)
from .classification import classify, oracle_semigroup_iso, skeleton_signature
from .oracle import (
    brute_force_cross_sections, count_summary, verify_description_theorem,
    verify_dual_theorem, verify_l_theorem,
)
