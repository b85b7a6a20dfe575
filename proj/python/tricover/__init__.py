"""Finite covers, Cheeger cuts and cocycle certificates for triangulated 3-manifolds."""

from ._tricover import (
    CoverTriangulation,
    CutCertificate,
    FiniteGroup,
    FiniteQuotient,
    MultiGraph,
    Triangulation,
    build_cover,
    cayley_graph,
    census,
    census_names,
    certificate_threshold,
    below_certificate_threshold,
    cheeger_exact,
    cheeger_sweep,
    cyclic_quotients,
    homology,
    pigeonhole_bound,
    presentation,
    run_cli,
    search_certificate,
    spectral_brackets,
    surface_profile,
    verify_certificate,
    verify_splitting,
)

__all__ = [name for name in dir() if not name.startswith("_")]
