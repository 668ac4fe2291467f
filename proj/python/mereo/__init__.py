"""Finite models of parthood: derived relations, sums, axioms and model search."""

from ._core import (
    CatalogError,
    DomainError,
    OrderError,
    ParseError,
    Structure,
    axioms,
    binary_sum,
    boolean_structure,
    canonical_encoding,
    check_all,
    check_axiom,
    check_theory,
    complement,
    count_models,
    derived_theses,
    difference,
    enumerate_models,
    find_model,
    is_acyclic,
    is_locally_transitive,
    is_sum,
    is_sup,
    lattice_report,
    paths_between,
    product,
    sum_of,
    sup_of,
    tarski_check,
    theories,
    theory_axioms,
    to_dot,
    verify_implication,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
