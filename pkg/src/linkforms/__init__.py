"""Torsion linking forms: matrices, cyclic forms and their classification."""

from .matrices import (
    SymIntMatrix,
    block_decompose,
    complete_to_basis,
    diagonalize,
    invariant_factors,
    primitive_null_vector,
    torsion_factors,
)
from .forms import CyclicForm, FormSum, form_isomorphic, form_split, form_sum, orbit
from .residues import pm_qr_symbol, prime_factorization, q_quadratic
from .classify import (
    DegreeOneVerdict,
    MilnorSet,
    cyclic_form_of_matrix,
    degree_one_verdict,
    hopf_surgery_form,
    is_linked,
    is_quasiprime,
    is_semisimple,
    is_semisimple_by_divisors,
    is_simple,
    milnor_set_cyclic,
    milnor_set_prime_power,
    non_semisimple_representatives,
    stable_equivalent_cyclic,
    table1,
)

__all__ = [
    "SymIntMatrix",
    "block_decompose",
    "complete_to_basis",
    "diagonalize",
    "invariant_factors",
    "primitive_null_vector",
    "torsion_factors",
    "CyclicForm",
    "FormSum",
    "form_isomorphic",
    "form_split",
    "form_sum",
    "orbit",
    "pm_qr_symbol",
    "prime_factorization",
    "q_quadratic",
    "DegreeOneVerdict",
    "MilnorSet",
    "cyclic_form_of_matrix",
    "degree_one_verdict",
    "hopf_surgery_form",
    "is_linked",
    "is_quasiprime",
    "is_semisimple",
    "is_semisimple_by_divisors",
    "is_simple",
    "milnor_set_cyclic",
    "milnor_set_prime_power",
    "non_semisimple_representatives",
    "stable_equivalent_cyclic",
    "table1",
]
