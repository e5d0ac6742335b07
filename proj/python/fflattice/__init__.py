"""Lattices of finite abelian groups and elliptic curves over prime fields."""

from ._core import (  # noqa: F401
    AbelianGroup,
    BasisResult,
    CertificationReport,
    CoveringReport,
    CurveGroup,
    DensityReport,
    FflError,
    Lattice,
    build_minimal_basis,
    covering_bounds,
    covering_radius_an_sq,
    curve_group,
    cvp,
    cyclic_basis,
    deep_hole_an,
    gram_det,
    make_group,
    mh_window_scan,
    retract,
    sampled_covering_check,
    span_rank,
    verify_basis,
    zeta,
)
