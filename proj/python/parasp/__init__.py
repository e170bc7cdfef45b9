"""Paraconsistent rule engine: answer sets, 4QL and 4SP well-supported models."""

from ._parasp import (
    EngineError,
    GroundingError,
    HypothesisError,
    Interpretation,
    OracleError,
    ParseError,
    Program,
    answer_sets,
    check_well_supported,
    classify_dialect,
    enumerate_4sp,
    find_correction,
    find_stratification,
    generate_least,
    ground,
    load,
    parse_program,
    run_cli,
    wsm_4ql,
    wsm_4sp,
)

__all__ = [
    "EngineError",
    "GroundingError",
    "HypothesisError",
    "Interpretation",
    "OracleError",
    "ParseError",
    "Program",
    "answer_sets",
    "check_well_supported",
    "classify_dialect",
    "enumerate_4sp",
    "find_correction",
    "find_stratification",
    "generate_least",
    "ground",
    "load",
    "parse_program",
    "run_cli",
    "wsm_4ql",
    "wsm_4sp",
]
