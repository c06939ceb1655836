"""Commutative BCK-algebras: constructions, ideal lattices, prime spectra,
and the compact-open-lattice functor into finite distributive lattices."""

from .core import (
    AXIOM_NAMES,
    BckHomomorphism,
    FiniteCbckAlgebra,
    check_axioms,
    check_homomorphism,
)
from .constructions import (
    CbckUnion,
    DirectProduct,
    cbck_union,
    direct_product,
    standard_chain,
    trivial_algebra,
)
from .ideals import (
    Ideal,
    IdealLattice,
    all_ideals,
    annihilator,
    congruence_from_ideal,
    generated_ideal,
    involution_table,
    is_involutory,
    is_prime,
    is_simple,
    membership_witness,
    prime_ideals,
)
from .trees import (
    PathIdeal,
    RootedTree,
    TreeElement,
    all_rooted_trees,
    compare_lex,
    join_witness,
    principal_ideal,
    tree_ideal_lattice,
    tree_leq,
    tree_meet,
    tree_op,
    tree_prime_ideals,
)
from .lattices import (
    FiniteDistLattice,
    FinitePoset,
    boolean_lattice,
    boolean_plus_top,
    chain_lattice,
    divisor_lattice,
    free_bounded_distributive_2,
    lattice_from_poset,
    lattice_iso,
    lattice_product,
    poset_iso,
)
from .spectra import (
    AlgebraSpectrum,
    FiniteSpace,
    TreeSpectrum,
    check_compact,
    check_compact_iff_fg,
    check_hausdorff,
    check_multiplicative_basis,
    check_noetherian,
    check_priestley,
    check_quasi_sober,
    check_spectral,
    check_T0,
    check_union_homeo,
    closed_points,
    clopen_upset_check,
    compact_open_lattice,
    compact_opens,
    disjoint_union_space,
    homeomorphic,
    maximal_spectrum,
    specialization_order,
    spectrum,
    spectrum_map,
    tree_spectrum,
)
from .kernels import BACKEND

__version__ = "0.1.0"
