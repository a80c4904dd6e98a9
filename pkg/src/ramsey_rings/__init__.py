"""Exact Z[i] and Lipschitz-quaternion arithmetic with pigeonhole extraction,
finite sum/product configurations, a large-set description algebra and
backtracking sum-subsystem builders."""

from .builder import Bounds, build_fs_ap, build_fs_fp, build_fs_leftprod, verify_fs_ap, verify_fs_fp, verify_fs_leftprod
from .configs import BlockSystem, IndexSet, Sequence, ap, fp, fs, interleave_gaussian, interleave_quaternion, pp, ps
from .errors import (
    CapExceeded,
    InsufficientBlocks,
    OrderingViolation,
    OutOfDomain,
    ParseError,
    RamseyRingsError,
    RepeatedTerms,
    SearchExhausted,
    SourceTooShort,
    TooFewTerms,
)
from .extraction import common_divisible_blocks, divisible_union_subsystem, extract_divisible_block
from .gaussian import GaussianInt, gi_coset_reps, gi_divides, gi_divrem, gi_norm
from .harness import Coloring, family_coloring, hindman_witness, pspp_check, schur_search
from .large_sets import Ideal, Residue, SetDescription, find_j_witness, member, parse_description
from .quaternion import (
    LipschitzQuat,
    q_left_coset_reps,
    q_left_divrem,
    q_mul,
    q_norm,
    q_right_coset_reps,
    q_right_divrem,
)
from .rings import divides, parse_element

__all__ = [name for name in dir() if not name.startswith("_")]
