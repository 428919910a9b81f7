"""Command-line interface and the expression parser."""

from .parser import (
    ExprSyntaxError,
    MixedSyntax,
    NonIntegerExponent,
    ParsedFoliation,
    parse_ast,
    parse_foliation,
    parse_polynomial,
)

__all__ = [
    "ExprSyntaxError",
    "MixedSyntax",
    "NonIntegerExponent",
    "ParsedFoliation",
    "parse_ast",
    "parse_foliation",
    "parse_polynomial",
]
