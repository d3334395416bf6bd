"""Order-preserving suffix trees for integer sequences."""
from .codes import CharCode, InvalidCodeError, code, is_order_isomorphic, phi, shape, shape_from_code
from .oracle import CharacterOracle, build_oracle
from .squares import (
    OpSquare,
    SquareLengthIndex,
    all_op_squares,
    is_op_square,
    non_extendible_squares,
    square_length_index,
)
from .tree import (
    TERMINATOR,
    Locus,
    SuffixTree,
    TreeNotFinalizedError,
    build_tree,
    suf_codes,
    validate_quasi_suffix,
)

__all__ = [
    "CharCode", "InvalidCodeError", "code", "is_order_isomorphic", "phi", "shape",
    "shape_from_code", "CharacterOracle", "build_oracle", "OpSquare", "SquareLengthIndex",
    "all_op_squares", "is_op_square", "non_extendible_squares", "square_length_index",
    "TERMINATOR", "Locus", "SuffixTree", "TreeNotFinalizedError", "build_tree", "suf_codes",
    "validate_quasi_suffix",
]
