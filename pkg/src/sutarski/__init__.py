"""Fixed points of functions on finite grid lattices.

The package represents total maps on {1..n}^k, classifies points into up
and down sets, restricts functions to slices, derives per-dimension
direction oracles, maps direction-oracle witnesses back to fixed-point
witnesses, and ships brute-force solvers, seeded instance generators, a
canonical JSON file format, and a command-line front end.
"""

from .lattice import (
    FREE,
    LatticeError,
    LatticeSpec,
    Point,
    Slice,
    SliceDomainError,
    is_i_slice,
    leq,
    slice_points,
)
from .verdict import Verdict
from .tarski import (
    FixedPoint,
    MonotonicityViolation,
    PointClassification,
    RestrictedFunction,
    SliceUniquenessViolation,
    SutSolution,
    TarskiFunction,
    check_fixed_point,
    check_monotonicity_pair,
    check_slice_uniqueness_violation,
    classify,
    restrict,
    verify_sut_solution,
)
from .opdc import (
    DOWN,
    UP,
    ZERO,
    AdjacentUpDown,
    AllZero,
    BoundaryEscape,
    DirectionOracle,
    OpdcSolution,
    TwoZeroPoints,
    check_o1,
    check_ov1,
    check_ov2,
    check_ov3,
    verify_opdc_solution,
)
from .reduction import ContractError, ReducedInstance, map_back, ov2_extract, reduce_to_opdc
from .solvers import (
    FixedPointSummary,
    KleeneResult,
    NonConvergenceError,
    SutAuditReport,
    brute_fixed_points,
    brute_opdc_solutions,
    brute_sut_audit,
    kleene_gfp,
    kleene_lfp,
)
from .generators import (
    GeneratorConfig,
    gen_attractor,
    gen_mutated,
    gen_random_monotone,
    gen_unique_not_super,
    generate,
    monotone_closure,
    rewrite_entries,
)
from .serialization import (
    ParsedWitness,
    ParseError,
    hash_instance,
    hash_oracle,
    parse_instance,
    parse_oracle,
    parse_witness,
    serialize_instance,
    serialize_oracle,
    serialize_witness,
)

__version__ = "0.1.0"
