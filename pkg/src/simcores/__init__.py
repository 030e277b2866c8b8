"""Simultaneous core partitions, abacus diagrams and dominant m-Shi alcoves."""
from .abacus import Abacus, AbacusKind, Family, abacus_to_partition, is_flush, partition_to_abacus
from .enumeration import CoreFamily, average_size, brute_force_cores, count_cores, enumerate_cores, max_size
from .errors import DomainError, InvariantError, ResourceCapError
from .partitions import Partition, a_core_of, conjugate, hook_length, is_core, parse_partition
from .paths import LatticePath, anderson_core_to_path, anderson_path_to_core, fms_core_to_path, fms_path_to_core, maj
from .qpoly import IntPolynomial, IntPolynomial2, catalan_C, q_binomial, rational_q_catalan
from .shi import DominantAlcove, ShiConfig, enumerate_dominant, oracle_m_bounded, oracle_m_minimal, right_descents
from .stats import co_skew_length, maj_A, maj_C, skew_length

__version__ = "0.1.0"
