"""Commuting conjugacy class graphs of finite group families.

Builds the groups explicitly, computes common-neighbourhood (CN) spectra
and energies by brute force, evaluates the catalogued closed forms, and
verifies the two against each other.
"""

from .families import Family, FamilyInstance, instance
from .graphs import CCCGraph, CompleteUnionShape, ccc_graph, predicted_structure
from .groups import (
    ConjClass,
    FiniteGroup,
    build_family_group,
    center,
    conjugacy_classes,
    cyclic_group,
    direct_product,
    load_cayley_table,
    noncentral_classes,
)
from .spectral import (
    EnergyReport,
    Spectrum,
    classify,
    cn_energy,
    cn_matrix,
    complete_graph_energy,
    complete_union_energy,
    complete_union_spectrum,
    eigenvalues_symmetric,
    spectrum,
)
from .formulas import TheoremPrediction, gap_expression, predict
from .verify import SweepConfig, observe_group, run_suite, verify_family, verify_witness

__version__ = "0.1.0"

__all__ = [
    "Family",
    "FamilyInstance",
    "instance",
    "CCCGraph",
    "CompleteUnionShape",
    "ccc_graph",
    "predicted_structure",
    "ConjClass",
    "FiniteGroup",
    "build_family_group",
    "center",
    "conjugacy_classes",
    "cyclic_group",
    "direct_product",
    "load_cayley_table",
    "noncentral_classes",
    "EnergyReport",
    "Spectrum",
    "classify",
    "cn_energy",
    "cn_matrix",
    "complete_graph_energy",
    "complete_union_energy",
    "complete_union_spectrum",
    "eigenvalues_symmetric",
    "spectrum",
    "TheoremPrediction",
    "gap_expression",
    "predict",
    "SweepConfig",
    "observe_group",
    "run_suite",
    "verify_family",
    "verify_witness",
    "__version__",
]
