"""Finite-dimensional linear relations: subspace arithmetic, relation algebra,
norms and bounds, and seeded property-verification suites."""

from .errors import DimensionError, DomainError, GeneratorError, LinRelError, PreconditionError
from .harness import TrialConfig, gen_relation, remark24_demo, replay, run_all, run_suite
from .norms import (
    c_constant,
    classify,
    compression,
    graph_inner,
    graph_norm,
    hermitian_report,
    is_hermitian,
    numerical_radius,
    point_norm,
    quotient_norm,
    rel_bound_report,
    relation_norm,
    t_bound_feasible,
    verify_sum_inequalities,
)
from .relation import (
    LinearRelation,
    arens_decompose,
    compress_to_domain,
    dotted_sum,
    equal,
    from_parts,
    graph_of,
    image_of,
    induced_arens,
    induced_hat,
    induced_tilde,
    inverse,
    is_orthogonal,
    make_relation,
    product,
    relation_diff,
    relation_sum,
    representative,
    scalar_mul,
    zero_relation,
)
from .subspace import (
    Subspace,
    complement,
    contains,
    distance,
    intersect,
    project,
    span,
    subspace_sum,
)

__version__ = "0.1.0"
