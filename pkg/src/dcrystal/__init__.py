"""The crystal B(infinity) of type D_n as marginally large tableaux and as Kostant partitions."""
from .cartan import Root, positive_roots
from .crystalgraph import check_isomorphism, generate
from .isomorphism import psi, psi_inverse
from .kostant import KostantPartition, e_kp, f_kp
from .tableaux import MLTableau, e, f, highest_weight_tableau

__all__ = [
    "KostantPartition",
    "MLTableau",
    "Root",
    "check_isomorphism",
    "e",
    "e_kp",
    "f",
    "f_kp",
    "generate",
    "highest_weight_tableau",
    "positive_roots",
    "psi",
    "psi_inverse",
]
