"""Loday algebras, their Loday-Poisson algebras ``S(g_Lie) ⊗ g`` and the enveloping dialgebra quantization."""

from .catalog import abelian, heisenberg, l2, sl2, sl2_hemisemidirect
from .files import AlgebraFile, parse_algebra_file, read_algebra, serialize_algebra_file
from .free import check_free_leibniz, free_loday_bracket, multilinear_dimension
from .linear import CommMonomial, ExtMonomial, HPoly, SparseVector, Subspace, span
from .loday import (
    LodayAlgebra,
    Liezation,
    ann_ideal,
    bracket,
    check_leibniz,
    leibnizator,
    liezation,
    load_algebra,
)
from .poisson import (
    check_dual_prepoisson,
    check_poissonization_hom,
    graded_algebra,
    graded_bracket,
    graded_perm_product,
    lp_bracket,
    perm_product,
    poissonization,
    poly_algebra,
    universal_extension,
)
from .quantization import (
    check_dialgebra_axioms,
    classical_limit_check,
    dial_left,
    dial_right,
    pbw_multiply,
    quantum_algebra,
    star_dial_left,
    star_dial_right,
    star_product,
    star_transport,
    symbol,
    symmetrize,
)
