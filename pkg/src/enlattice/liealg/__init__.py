"""E_n, its weight modules and invariant forms, built from Picard lattice data."""

from .algebra import Element, LieAlgebra, build_algebra, subalgebra
from .checks import (
    antisymmetry_check,
    e8_jacobi_check,
    gamma_equivariance_check,
    invariance_check,
    jacobi_check,
    module_axiom_check,
    near_support,
)
from .cocycle import SignCocycle, build_cocycle
from .e8 import E8ViaD8, SpinElement, e8_bracket_via_d8, e8_spin_products, e8_via_d8
from .forms import (
    InvariantPairing,
    MomentMap,
    c6_on_weights,
    c6_support,
    f7_on_weights,
    f7_support,
    form_c6,
    form_f7,
    form_q5,
    form_q7,
    invariant_pairing,
    killing_form,
    moment_map,
    product_cn,
    q5_pairing,
    q7_pairing,
    quadruples,
    triangles,
)
from .modules import (
    ModuleKind,
    ModuleVector,
    WeightModule,
    act,
    adjoint_module,
    lines_module,
    minuscule_module,
    rulings_module,
    weights_module,
)

__all__ = [
    "E8ViaD8",
    "Element",
    "InvariantPairing",
    "LieAlgebra",
    "ModuleKind",
    "ModuleVector",
    "MomentMap",
    "SignCocycle",
    "SpinElement",
    "WeightModule",
    "act",
    "adjoint_module",
    "antisymmetry_check",
    "build_algebra",
    "build_cocycle",
    "c6_on_weights",
    "c6_support",
    "e8_bracket_via_d8",
    "e8_jacobi_check",
    "e8_spin_products",
    "e8_via_d8",
    "f7_on_weights",
    "f7_support",
    "form_c6",
    "form_f7",
    "form_q5",
    "form_q7",
    "gamma_equivariance_check",
    "invariance_check",
    "invariant_pairing",
    "jacobi_check",
    "killing_form",
    "lines_module",
    "minuscule_module",
    "module_axiom_check",
    "moment_map",
    "near_support",
    "product_cn",
    "q5_pairing",
    "q7_pairing",
    "quadruples",
    "rulings_module",
    "subalgebra",
    "triangles",
    "weights_module",
]
