"""Sparse Pauli-string composition, Hamiltonian assembly, and Pauli-basis
decomposition, backed by the C++ core."""

from ._core import (
    CooMatrix,
    DecomposeResult,
    PauliError,
    SparseMatrix,
    build_ising,
    build_weighted_sum,
    classify,
    compose,
    compose_diagonal,
    decompose,
    kron_mixed,
    kron_naive,
    kron_tree,
    pauli_coefficient,
    pauli_exponential,
    recompose,
)

__all__ = [
    "CooMatrix",
    "DecomposeResult",
    "PauliError",
    "SparseMatrix",
    "build_ising",
    "build_weighted_sum",
    "classify",
    "compose",
    "compose_diagonal",
    "decompose",
    "kron_mixed",
    "kron_naive",
    "kron_tree",
    "pauli_coefficient",
    "pauli_exponential",
    "recompose",
]
