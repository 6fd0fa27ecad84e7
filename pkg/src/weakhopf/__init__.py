"""Exact-arithmetic toolkit for finite-dimensional weak bialgebras."""

from .exactla import QQ, GF, FieldSpec, Matrix, Subspace
from .structure import FiniteAlgebra, FiniteCoalgebra
from .weakbia import (
    WeakBialgebra,
    build_weak_bialgebra,
    counital,
    dualize,
    lemma_suite,
    solve_antipode,
    verify_antipode,
    verify_weak_bialgebra,
)
from .comod import (
    Comodule,
    ComoduleMap,
    TensorComodule,
    associator,
    bimodule_action,
    regular_comodule,
    tensor_map,
    tensor_over_source,
    unit_comodule,
    unitors,
)
from .tannaka import (
    FunctorData,
    WeakBialgebraMap,
    check_isomorphism,
    check_map,
    comonoidal_structure,
    functor_from_map,
    induced_functor,
    reconstruct_coalgebra_map,
    reconstruct_weak_bialgebra_map,
)
from .decomp import (
    DecompositionReport,
    LeftModule,
    decompose,
    direct_sum,
    is_indecomposable,
    split_by_idempotent,
    split_comodule,
    split_module,
)
from .fixtures import (
    GroupoidPresentation,
    enumerate_automorphisms,
    group_algebra,
    groupoid_algebra,
    preset,
)

__version__ = "0.1.0"
