"""Qubit cloning and entanglement broadcasting under thermal noise.

Thin re-export of the compiled core. Matrices travel as nested lists of
complex numbers in the |00>, |01>, |10>, |11> basis (first qubit
slower-varying); parameter domains match the command-line tool.
"""

from ._qclone import (
    alpha_singlet,
    boundary_params,
    broadcast_output,
    classical_threshold,
    classify_table1,
    classify_table2,
    clone_single,
    compact_form_check,
    fidelity,
    fidelity_closed_form,
    fidelity_numeric,
    find_eps_boundary,
    is_entangled,
    min_eigenvalue,
    negativity,
    partial_trace,
    partial_transpose,
    pure_qubit,
    scenario_constants,
    shrink_params,
    thermal_qubit,
    thermal_xx,
)

__all__ = [
    "alpha_singlet",
    "boundary_params",
    "broadcast_output",
    "classical_threshold",
    "classify_table1",
    "classify_table2",
    "clone_single",
    "compact_form_check",
    "fidelity",
    "fidelity_closed_form",
    "fidelity_numeric",
    "find_eps_boundary",
    "is_entangled",
    "min_eigenvalue",
    "negativity",
    "partial_trace",
    "partial_transpose",
    "pure_qubit",
    "scenario_constants",
    "shrink_params",
    "thermal_qubit",
    "thermal_xx",
]

__version__ = "1.0.0"
