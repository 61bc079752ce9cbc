"""Linear combinations in the Hopf algebras WQSym, WQSym*, QSym, Sym, FQSym and WSym."""

from .linear import (BASES, Basis, BasisMismatch, LinearCombination, Tensor, element,
                     from_json, one, parse_element, zero)
from .wqsym import (M, N, coproduct, hatS, internal, m_to_phi, m_to_phicheck, n_right_action,
                    pairing, phi_to_m, phicheck_to_m, to_m, wqsym_m_coproduct, wqsym_m_mul,
                    wqsym_to_qsym, wqsymdual_internal)
from .qsym import QF, QM, Lam, S, f_to_m, m_to_f, qsym_m_mul, sym_internal
from .fqsym import F, G, fqsym_internal, iota, iota_star, sym_to_fqsym
from .wsym import OutsideSpan, m, m_to_mt, mt, mt_to_m, wqsym_to_wsym, wsym_m_mul, wsym_to_wqsym

__all__ = [
    "BASES", "Basis", "BasisMismatch", "LinearCombination", "Tensor", "element", "from_json",
    "one", "parse_element", "zero",
    "M", "N", "coproduct", "hatS", "internal", "m_to_phi", "m_to_phicheck", "n_right_action",
    "pairing", "phi_to_m", "phicheck_to_m", "to_m", "wqsym_m_coproduct", "wqsym_m_mul",
    "wqsym_to_qsym", "wqsymdual_internal",
    "QF", "QM", "Lam", "S", "f_to_m", "m_to_f", "qsym_m_mul", "sym_internal",
    "F", "G", "fqsym_internal", "iota", "iota_star", "sym_to_fqsym",
    "OutsideSpan", "m", "m_to_mt", "mt", "mt_to_m", "wqsym_to_wsym", "wsym_m_mul", "wsym_to_wqsym",
]
