"""Chromatic polynomials, chromatic zeta products and lattice visibility."""

from ._core import (
    BudgetError,
    CertifiedProduct,
    Estimate,
    Graph,
    InvariantError,
    UsageError,
    chromatic_polynomial,
    conditional_limit,
    convergence_sweep,
    count_colorings,
    count_Hp_visible_residue_tuples,
    cycle_limit_closed_form,
    estimate_conditional,
    estimate_probability,
    exact_probability,
    family,
    is_H_visible,
    is_subgraph,
    parse_graph,
    rearick_ratio,
    render_graph,
    riemann_zeta_inverse,
    selftest,
    visible,
    zeta_H_inverse,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
