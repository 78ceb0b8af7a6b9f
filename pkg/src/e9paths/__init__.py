"""Tensor powers of the level-1 representation of the affine algebra g(E9):
decomposition of the maximal-null-root submodule M_n via straight-weight paths,
with a Littelmann root-operator oracle."""

__version__ = "0.1.0"

from .lattice import (  # noqa: F401
    RationalVector10,
    WeightLabel,
    fundamental_weight,
    from_label,
    inner,
    is_dominant,
    level,
    pair_with_simple_roots,
    reflect,
    simple_root,
    to_label,
)
from .grading import delta_shift, is_initial, k_value, residue3  # noqa: F401
from .straight import classify_maximal, enumerate_straight, maximal_orbit, straight_closure  # noqa: F401
from .littelmann import (  # noqa: F401
    PLPath,
    concat,
    e_op,
    f_op,
    generate_basis_truncated,
    height_profile,
    straight_path,
    tensor_power_truncated,
)
from .decomposer import (  # noqa: F401
    DecompositionTable,
    decompose,
    enumerate_level,
    genfun_coefficients,
    successors,
    verify_addition_lemma,
    verify_subtraction_lemma,
    witness_path,
)
