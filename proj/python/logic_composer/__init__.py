"""Compose implications with a shared context, derive inverse and homogenized
problems, and check the built-in triangle problem groups with a numeric
geometry oracle.

The heavy lifting lives in the compiled extension ``logic_composer._core``;
this package re-exports its public surface.
"""

from ._core import (
    BudgetError,
    Formula,
    FormulaParseError,
    ImplicationStructure,
    Triangle,
    __version__,
    are_equivalent,
    atoms,
    check_implication,
    classify,
    compose,
    conditionalize,
    derive_set,
    evaluate,
    find_counterexample,
    find_falsifying,
    homogenize,
    invert_all,
    is_tautology,
    normalize,
    parse,
    predicate,
    sample_triangle,
    schema,
    solve_on_slice,
    to_text,
    truth_table,
    verify_capstone,
    verify_group,
)

__all__ = [
    "BudgetError",
    "Formula",
    "FormulaParseError",
    "ImplicationStructure",
    "Triangle",
    "__version__",
    "are_equivalent",
    "atoms",
    "check_implication",
    "classify",
    "compose",
    "conditionalize",
    "derive_set",
    "evaluate",
    "find_counterexample",
    "find_falsifying",
    "homogenize",
    "invert_all",
    "is_tautology",
    "normalize",
    "parse",
    "predicate",
    "sample_triangle",
    "schema",
    "solve_on_slice",
    "to_text",
    "truth_table",
    "verify_capstone",
    "verify_group",
]
