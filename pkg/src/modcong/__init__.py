"""Exact linear algebra over Z/kZ: congruences, solutions and nullspaces."""

from .branching import LayeredProgram, count_paths_entry, count_paths_explicit
from .crt import combine_nullspaces
from .fp_linalg import RrefResult, nullspace_basis_mod_p, rref_mod_p
from .lifting import (
    InexactDivision,
    LiftDecomposition,
    build_lifted_constraint,
    decompose,
    lift_levels,
    lift_step,
    nullspace_mod_prime_power,
)
from .matrix import (
    GeneratingSet,
    MatModK,
    NotInvertible,
    VecModK,
    determinant_mod_k,
    identity,
    inverse_mod_k,
    mat_mul,
    mat_vec_mul,
    pad_square,
    reduce_entries,
)
from .residue import Modulus, NotAUnit, crt_reconstruct, factorize, mod_inverse
from .solver import Infeasible, Solution, SolveOutcome, embed_lower_modulus, feasible, nullspace, solve, solve_prime_power

__all__ = [
    "GeneratingSet",
    "InexactDivision",
    "Infeasible",
    "LayeredProgram",
    "LiftDecomposition",
    "MatModK",
    "Modulus",
    "NotAUnit",
    "NotInvertible",
    "RrefResult",
    "Solution",
    "SolveOutcome",
    "VecModK",
    "build_lifted_constraint",
    "combine_nullspaces",
    "count_paths_entry",
    "count_paths_explicit",
    "crt_reconstruct",
    "decompose",
    "determinant_mod_k",
    "embed_lower_modulus",
    "factorize",
    "feasible",
    "identity",
    "inverse_mod_k",
    "lift_levels",
    "lift_step",
    "mat_mul",
    "mat_vec_mul",
    "mod_inverse",
    "nullspace",
    "nullspace_basis_mod_p",
    "nullspace_mod_prime_power",
    "pad_square",
    "reduce_entries",
    "rref_mod_p",
    "solve",
    "solve_prime_power",
]
