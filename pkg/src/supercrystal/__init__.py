"""Crystal bases of lowest weight modules for the orthosymplectic quantum superalgebras of types D(N,1) and B(N,1)."""

from .classical_crystal import (
    ClassicalCrystal,
    decompose_classical_tensor,
    koga_component,
    realize_classical_crystal,
    spin_crystal,
)
from .decomposition import (
    a_value,
    compare,
    main_theorem,
    omega0_formula,
    spin_spin_formula,
    typical_structure_formula,
)
from .module_realization import (
    CheckReport,
    SpinModule,
    check_crystal_lattice,
    check_polarization_contravariance,
    check_relations,
)
from .qfield import LaurentPoly, LaurentRational
from .roots import AlgebraType, ClassicalWeight, Weight, cartan_matrix, root_data
from .summary import DecompositionSummary
from .super_crystal import (
    SuperComponentLabel,
    SuperCrystal,
    TensorCrystal,
    build_omega0,
    crystal_for_weight,
    decompose_super,
    label_super_components,
    spin_module_crystal,
    typical_model,
    zero_arrow_relations,
)

__all__ = [
    "AlgebraType",
    "CheckReport",
    "ClassicalCrystal",
    "ClassicalWeight",
    "DecompositionSummary",
    "LaurentPoly",
    "LaurentRational",
    "SpinModule",
    "SuperComponentLabel",
    "SuperCrystal",
    "TensorCrystal",
    "Weight",
    "a_value",
    "build_omega0",
    "cartan_matrix",
    "check_crystal_lattice",
    "check_polarization_contravariance",
    "check_relations",
    "compare",
    "crystal_for_weight",
    "decompose_classical_tensor",
    "decompose_super",
    "koga_component",
    "label_super_components",
    "main_theorem",
    "omega0_formula",
    "realize_classical_crystal",
    "root_data",
    "spin_crystal",
    "spin_module_crystal",
    "spin_spin_formula",
    "typical_model",
    "typical_structure_formula",
    "zero_arrow_relations",
]
