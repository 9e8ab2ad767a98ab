"""Exact symbolic engine for the dynamical quantum group F_R(GL(n)).

Normal forms, quantum minors, the Hopf algebroid maps, the *-structures and
the cobraiding pairing, together with verification suites for their
identities.
"""

from .nfcore import Algebra, Element, simplify_mod_det
from .parser import ParseError, parse_expr
from .pairing import act_pi, pair
from .scalars import Field
from .suites import SUITE_NAMES, run_suite

__version__ = "0.1.0"

__all__ = ["Algebra", "Element", "Field", "ParseError", "SUITE_NAMES", "act_pi", "pair",
           "parse_expr", "run_suite", "simplify_mod_det"]
