"""qpb: exact arithmetic for poly-Bernoulli families and their q-analogues,
with brute-force combinatorial verification."""

from .exactnum import IntMatrix, QPoly, QRational, TruncatedSeries
from .families import (
    FAMILIES,
    Triangle,
    akiyama_tanigawa,
    at_q_pb,
    c_relative,
    carlitz_beta,
    cenkci_comb_check,
    cenkci_q_pb,
    cenkci_recursion_check,
    classical_pb,
    classical_pb_negk,
    lonesum_q_pb,
    ordered_q_pb,
    pb_recursion_check,
    permmatrix_q_pb,
    q_fubini,
    vesztergombi_q_pb,
)
from .qkernels import (
    q_binomial,
    q_eulerian,
    q_exponential,
    q_factorial,
    q_int,
    q_stirling,
    s2_inv_q,
    s2_q,
    stirling2,
)
from .rook import Board, RookConfig, build_v_matrix, gr_inv, q_rook_number
from .verify import CheckReport, run_suite, sylvester_conjecture

__version__ = "0.1.0"

__all__ = [
    "IntMatrix",
    "QPoly",
    "QRational",
    "TruncatedSeries",
    "FAMILIES",
    "Triangle",
    "akiyama_tanigawa",
    "at_q_pb",
    "c_relative",
    "carlitz_beta",
    "cenkci_comb_check",
    "cenkci_q_pb",
    "cenkci_recursion_check",
    "classical_pb",
    "classical_pb_negk",
    "lonesum_q_pb",
    "ordered_q_pb",
    "pb_recursion_check",
    "permmatrix_q_pb",
    "q_fubini",
    "vesztergombi_q_pb",
    "q_binomial",
    "q_eulerian",
    "q_exponential",
    "q_factorial",
    "q_int",
    "q_stirling",
    "s2_inv_q",
    "s2_q",
    "stirling2",
    "Board",
    "RookConfig",
    "build_v_matrix",
    "gr_inv",
    "q_rook_number",
    "CheckReport",
    "run_suite",
    "sylvester_conjecture",
    "__version__",
]
