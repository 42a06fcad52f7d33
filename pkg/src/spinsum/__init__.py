"""Exact state sum models on surfaces.

Subpackages cover the scalar field, finite dimensional algebras, Frobenius
structures, triangulated surfaces, the contraction engine, involutions for
unoriented surfaces, crossings for spin surfaces, quadratic forms on
homology, and defect lines. The cli module exposes all of it as commands.
"""

from .scalars import (
    ExactScalar,
    as_scalar,
    parse_scalar,
    root_of_unity,
    scalar_conjugate,
    scalar_inverse,
)

__all__ = [
    "ExactScalar",
    "as_scalar",
    "parse_scalar",
    "root_of_unity",
    "scalar_conjugate",
    "scalar_inverse",
]
