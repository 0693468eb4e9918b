"""Exact QSym, NSym, WQSym and FQSym arithmetic with restricted products."""

from .compositions import composition, compositions_of, odot, omega
from .dendriform import belg, prec, preceq, succ, succeq, tvim
from .immaculate import dual_immaculate_creation, dual_immaculate_tableaux
from .nsym import NSymElem, W, perp, ribbon, zabrocki_dual_immaculate
from .qsym import QSymElem, antipode, coproduct, counit, e, fundamental, h, monomial, one
from .words import FQSymElem, WQSymElem, fq_op, g_basis, project, wq_op

__version__ = "0.1.0"

__all__ = [
    "FQSymElem", "NSymElem", "QSymElem", "W", "WQSymElem", "antipode", "belg",
    "composition", "compositions_of", "coproduct", "counit", "dual_immaculate_creation",
    "dual_immaculate_tableaux", "e", "fq_op", "fundamental", "g_basis", "h", "monomial",
    "odot", "omega", "one", "perp", "prec", "preceq", "project", "ribbon", "succ",
    "succeq", "tvim", "wq_op", "zabrocki_dual_immaculate",
]
