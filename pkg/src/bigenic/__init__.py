"""Colouring on graphs with two forbidden induced subgraphs.

Gadget constructions from NAE-3SAT, exact solvers to check them at small
scale, and a rule engine classifying pairs (H1, H2).
"""

from .classifier import Verdict, classify, kb_rules, survey
from .errors import BigenicError, InconsistencyError, ResourceLimitError, ValidationError
from .families import parse_family, realize
from .formats import from_graph6, to_graph6
from .graph import Graph, complement, contains_induced, enumerate_graphs

__version__ = "0.1.0"
