"""SU(n) coherent-state toolkit.

Thin wrappers over the compiled core: generator matrices, the recursive
L*M*R parameterization and its inverse, coherent states in the fundamental
and size-N symmetric representations, closed-form overlaps, and exact-degree
quadrature over the coset sphere.
"""

import json as _json

from ._core import (
    angles_to_stereo,
    basis_states,
    beta_theta_commutator_deviation,
    cartan_op,
    coherent_state,
    coherent_state_fund,
    coset_volume,
    coset_volume_exact,
    displacement_lambda,
    elementary,
    eta_coeff,
    gauss_decomposition_su2,
    gauss_product_su2,
    haar_random_su,
    herm_exp,
    lambda_set,
    lift_generator,
    lowering_op,
    measure_density,
    metric_diag,
    middle_matrix,
    overlap_closed,
    phase_fixed_state,
    primed_lambda,
    raising_op,
    resolution_of_unity,
    run_checks,
    stereographic_state,
    su2_matrix,
    tensor_power_oracle,
    xi_moment_exact,
    xi_moment_quadrature,
    SparseOperator,
)
from ._core import build_group_element_json as _build_group_element_json
from ._core import decompose_json as _decompose_json


def decompose(u, tol=1e-8):
    """Factor a special unitary into the recursive angle tree.

    Returns a nested dict {"theta", "phi", "left", "right"} whose SU(2)
    leaves are {"theta", "phi1", "phi2"}.
    """
    return _json.loads(_decompose_json(u, tol))


def build_group_element(tree):
    """Rebuild the unitary from a decomposition tree dict."""
    return _build_group_element_json(_json.dumps(tree))


__all__ = [
    "angles_to_stereo",
    "basis_states",
    "beta_theta_commutator_deviation",
    "build_group_element",
    "cartan_op",
    "coherent_state",
    "coherent_state_fund",
    "coset_volume",
    "coset_volume_exact",
    "decompose",
    "displacement_lambda",
    "elementary",
    "eta_coeff",
    "gauss_decomposition_su2",
    "gauss_product_su2",
    "haar_random_su",
    "herm_exp",
    "lambda_set",
    "lift_generator",
    "lowering_op",
    "measure_density",
    "metric_diag",
    "middle_matrix",
    "overlap_closed",
    "phase_fixed_state",
    "primed_lambda",
    "raising_op",
    "resolution_of_unity",
    "run_checks",
    "stereographic_state",
    "su2_matrix",
    "tensor_power_oracle",
    "xi_moment_exact",
    "xi_moment_quadrature",
    "SparseOperator",
]
