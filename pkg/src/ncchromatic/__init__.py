"""Exact computations with chromatic quasi-symmetric functions and unicellular
LLT polynomials of Dyck graphs in WQSym, QSym, Sym, FQSym and WSym over Q(t)."""

from .coeffring import ONE, ZERO, RationalFunction, t
from .dyckgraph import DyckGraph, Graph, enumerate_dyck, parse_graph
from .freealg import LinearCombination, Tensor
from .chromatic import (llt_phicheck, llt_qsym, llt_wqsym, main_identity_check, x1_mt, x_phi,
                        x_phicheck, x_qsym, x_wqsym)

__version__ = "0.1.0"

__all__ = [
    "ONE", "ZERO", "RationalFunction", "t",
    "DyckGraph", "Graph", "enumerate_dyck", "parse_graph",
    "LinearCombination", "Tensor",
    "llt_phicheck", "llt_qsym", "llt_wqsym", "main_identity_check", "x1_mt", "x_phi",
    "x_phicheck", "x_qsym", "x_wqsym",
]
