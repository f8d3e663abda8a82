"""Exact correlators and n-point functions of the Hermitian one-matrix model."""

from ._kernel import BACKEND
from .characters import CharTable, character, power_to_schur, schur_to_power
from .correlators import (
    BasisExpansion,
    bogoliubov_entry,
    bogoliubov_matrix,
    char_connected_correlator,
    char_correlator,
    dif_itz_c,
    evenness_scan,
    free_energy,
    partition_function,
    schur_correlator,
    thooft_substitute,
    un_dimension,
)
from .errors import CapacityError, EngineDisagreement, HermKPError, InconsistencyError, WeightMismatchError
from .hz import epsilon_g, hz_C, hz_c, hz_c_poly, verify_identities
from .kp import a_series, kp_connected_correlator, kp_correlator, npoint, npoint_vs_free_energy
from .partitions import Partition, cell_stats, enumerate_partitions, z_of
from .polyalg import Graded, LaurentSeries, NPoly, TruncSeries, geometric_expand, rising_product
from .wick import connected_correlator, genus_census, wick_correlator

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BasisExpansion",
    "CapacityError",
    "CharTable",
    "EngineDisagreement",
    "Graded",
    "HermKPError",
    "InconsistencyError",
    "LaurentSeries",
    "NPoly",
    "Partition",
    "TruncSeries",
    "WeightMismatchError",
    "a_series",
    "bogoliubov_entry",
    "bogoliubov_matrix",
    "cell_stats",
    "char_connected_correlator",
    "char_correlator",
    "character",
    "connected_correlator",
    "dif_itz_c",
    "enumerate_partitions",
    "epsilon_g",
    "evenness_scan",
    "free_energy",
    "genus_census",
    "geometric_expand",
    "hz_C",
    "hz_c",
    "hz_c_poly",
    "kp_connected_correlator",
    "kp_correlator",
    "npoint",
    "npoint_vs_free_energy",
    "partition_function",
    "power_to_schur",
    "rising_product",
    "schur_correlator",
    "schur_to_power",
    "thooft_substitute",
    "un_dimension",
    "verify_identities",
    "wick_correlator",
    "z_of",
]
