"""Fundamental groups and characteristic numbers of 4-manifold constructions."""

from ._core import (
    Certificate,
    Error,
    H1,
    Manifold,
    ParseError,
    Presentation,
    SurgerySite,
    V,
    W,
    Word,
    X1,
    X1_tilde,
    Xn,
    block,
    blow_up,
    canonical_relator,
    catalog,
    certify,
    commutator,
    coords,
    coset_index,
    euler_signature,
    fiber_sum,
    format_manifest,
    freedman_model,
    h1,
    prove_word_trivial,
    realize,
    region_check,
    replay,
    run_manifest,
    smith_form,
    torus_surgery,
)

__all__ = [name for name in dir() if not name.startswith("_")]
