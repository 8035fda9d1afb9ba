"""Exact Lie bialgebra calculus on inhomogeneous orthogonal algebras."""

from bialg._bialg import (  # noqa: F401
    Algebra,
    BialgError,
    MultiVector,
    act,
    b_x,
    bracket,
    cohomology_dims,
    covector,
    formula_check,
    gcybe,
    intertwiner_dim,
    invariants_dim,
    make_algebra,
    normalize_row2,
    omega,
    schouten_bracket,
    solve_b_cocycle_dim,
    split2,
    split3,
    triangular_decomposition,
    verify_catalog,
    wedge,
)

__all__ = [
    "Algebra", "BialgError", "MultiVector", "act", "b_x", "bracket",
    "cohomology_dims", "covector", "formula_check", "gcybe", "intertwiner_dim",
    "invariants_dim", "make_algebra", "normalize_row2", "omega",
    "schouten_bracket", "solve_b_cocycle_dim", "split2", "split3",
    "triangular_decomposition", "verify_catalog", "wedge",
]


def default_catalog_dir():
    """Directory of the shipped catalog when installed as a package."""
    import os

    here = os.path.join(os.path.dirname(__file__), "data", "catalog")
    if os.path.isdir(here):
        return here
    return os.environ.get("BIALG_CATALOG_DIR", "data/catalog")
