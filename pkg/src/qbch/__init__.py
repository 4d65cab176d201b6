"""Nonbinary quantum BCH codes from cyclotomic-coset data.

Four families of stabilizer codes are constructed from classical BCH
codes whose defining sets are unions of q-ary cyclotomic cosets: two
CSS families (one at non-prime length n = a(q-1), one at prime length),
a Steane-enlarged family, and two Hermitian families over F_{q^2}.
Every algebraic precondition is checked computationally before any
parameters are reported, and small instances can be certified by
independent brute-force distance oracles.
"""

from .cyclotomic import (
    Coset,
    CosetPartition,
    coset_of,
    find_consecutive_coset,
    mult_order,
    partition,
)
from .cyclic_codes import (
    CyclicCode,
    DefiningSet,
    ZeroCodeError,
    bch_designed_distance,
    build_code,
    build_code_complement,
    code_from_residues,
    defining_set,
    dual_defining_set,
    is_euclidean_dual_containing,
    is_hermitian_dual_containing,
)
from .distance_oracle import (
    OracleBudgetError,
    WeightReport,
    css_distance,
    enumerate_min_weight,
    min_weight_search,
    verify_quantum_distance,
)
from .fields import FieldCtx, ZERO, field_for, make_field
from .quantum_constructions import (
    ConstructionError,
    QuantumParams,
    construct_css_I,
    construct_css_II,
    construct_hermitian_IV,
    construct_hermitian_prime,
    construct_steane_III,
    construct_steane_nonprime,
    hermitian_from_cosets,
    singleton_check,
)
from .tables import GENERATORS, TABLES, TableMismatch, generate_table

__all__ = [
    "Coset", "CosetPartition", "coset_of", "find_consecutive_coset",
    "mult_order", "partition",
    "CyclicCode", "DefiningSet", "ZeroCodeError", "bch_designed_distance",
    "build_code", "build_code_complement", "code_from_residues",
    "defining_set", "dual_defining_set", "is_euclidean_dual_containing",
    "is_hermitian_dual_containing",
    "OracleBudgetError", "WeightReport", "css_distance",
    "enumerate_min_weight", "min_weight_search", "verify_quantum_distance",
    "FieldCtx", "ZERO", "field_for", "make_field",
    "ConstructionError", "QuantumParams", "construct_css_I",
    "construct_css_II", "construct_hermitian_IV", "construct_hermitian_prime",
    "construct_steane_III", "construct_steane_nonprime",
    "hermitian_from_cosets", "singleton_check",
    "GENERATORS", "TABLES", "TableMismatch", "generate_table",
]
