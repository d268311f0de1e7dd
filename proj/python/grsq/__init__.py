"""Exact generalized Reed-Solomon codec over the rationals.

Thin re-export of the pybind11 extension; see the project README for the CLI
and the C++ library.
"""

from ._core import (
    BoundInputs,
    DecodeFailure,
    DecodeOutcome,
    EeaTriple,
    ErrorPattern,
    GeneratorKind,
    GrowthReport,
    GrsCode,
    KeyEqSolution,
    Preset,
    Rat,
    RatMatrix,
    RatPoly,
    bitwidth,
    bitwidth_int,
    bound_codeword,
    bound_eea_input,
    bound_evaluator_poly,
    bound_generator_cauchy,
    bound_generator_vandermonde,
    bound_inputs_for,
    bound_locator_poly,
    bound_parity_check,
    bound_syndrome,
    common_denominator_xi,
    conformance_check,
    corrupt,
    decode,
    eea_with_stop,
    encode,
    enumerate_min_locators,
    forney,
    generator_cauchy,
    generator_vandermonde,
    make_code,
    make_code_with_v,
    make_code_with_v_prime,
    parity_check,
    parse_rational_list,
    solve_key_equation,
    syndrome,
    syndrome_poly,
    verify_system_eq1,
    weights,
)

__all__ = [
    "BoundInputs",
    "DecodeFailure",
    "DecodeOutcome",
    "EeaTriple",
    "ErrorPattern",
    "GeneratorKind",
    "GrowthReport",
    "GrsCode",
    "KeyEqSolution",
    "Preset",
    "Rat",
    "RatMatrix",
    "RatPoly",
    "bitwidth",
    "bitwidth_int",
    "bound_codeword",
    "bound_eea_input",
    "bound_evaluator_poly",
    "bound_generator_cauchy",
    "bound_generator_vandermonde",
    "bound_inputs_for",
    "bound_locator_poly",
    "bound_parity_check",
    "bound_syndrome",
    "common_denominator_xi",
    "conformance_check",
    "corrupt",
    "decode",
    "eea_with_stop",
    "encode",
    "enumerate_min_locators",
    "forney",
    "generator_cauchy",
    "generator_vandermonde",
    "make_code",
    "make_code_with_v",
    "make_code_with_v_prime",
    "parity_check",
    "parse_rational_list",
    "solve_key_equation",
    "syndrome",
    "syndrome_poly",
    "verify_system_eq1",
    "weights",
]
