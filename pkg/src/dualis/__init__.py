"""Finite-algebra workbench for the duality of congruential logics with theorems.

The main entry points are re-exported here; the submodules hold the rest.
"""

from .algebra import FiniteAlgebra, is_homomorphism
from .errors import (CarrierTooLarge, DualisError, GateError, HypothesisFailure, NotVerified)
from .logic import LogicPresentation, check_filters, filter_system
from .order import FinitePoset
from .priestley import (SPriestleyMorphism, SPriestleySpace, b_structures, check_dual_morphism,
                        check_dual_space, check_natural_isos, check_xi, dual_morphism, dual_space,
                        verify_space)
from .properties import (check_pc, check_pdi, check_pdi_single_dual, check_pie, check_uddt,
                         quotient_transfer_check)
from .report import Report
from .representation import (build_representation, check_base_independence, check_semilattice_isos,
                             check_representation, s_semilattice)
from .semilattice import MeetSemilattice, distributive_envelope
from .sweeps import characterization_sweep, envelope_sweep
from .terms import Signature, parse_term
from .workbench.document import WorkbenchDocument, parse_document, print_document

__version__ = "0.1.0"
