"""Truncated Weyl modules, CV modules and Demazure flags for current algebras.

Most of the machinery is specific to sl_2; the root-system, character-ring
and tuple-poset layers work for every simple type.
"""

from .charring import (
    DominantWeight,
    FormalCharacter,
    GradedCharacter,
    dominant_multiplicities,
    graded_dim_series,
    irreducible_character,
    tensor_decompose,
    weyl_dim,
)
from .cvengine import (
    ModuleLabel,
    classify_demazure,
    dim_cv,
    dim_truncated,
    flag_length,
    flag_mult_level2_closed,
    flag_multiplicities,
    gamma_identity_check,
    graded_char_cv,
    graded_char_label,
    kernel_is_truncated,
    verify_ses,
)
from .fusion_oracle import (
    MatrixModule,
    evaluation_module,
    fusion_graded_char,
    parameter_independence_check,
    tensor_with_parameters,
)
from .laurent import LaurentPoly, qbinom
from .partitions import Partition, xi_demazure, xi_family, xi_minus, xi_parts, xi_plus
from .poset import maximal_elements, poset_compare
from .rootsys import RootSystem, build_root_system, cartan_matrix

__version__ = "0.1.0"
