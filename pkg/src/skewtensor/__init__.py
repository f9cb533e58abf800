"""Exact GF(2) tensor decompositions of monomial modules over alpha(r, s)."""

from .bitmat import BitMatrix, Subspace
from .decompose import Certificate, Decomposition, decompose, free_rank, peel_free
from .homology import cosyzygy, omega_power, projective_cover, strip_free, syzygy
from .modules import (GroupSchemeParams, Module, SkewPartition, dual_alpha,
                      dual_group, from_skew_partition, iso_test, tensor_alpha,
                      tensor_group)
from .powerlab import ConjectureViolation, PowerRun, next_odd, pv_sequence
from .qpfit import QuasiPolynomial, fit
from .shapes import CanonicalShape, canonicalize, enumerate_shapes

__version__ = "0.1.0"
