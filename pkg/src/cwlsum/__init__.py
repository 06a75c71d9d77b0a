"""Componentwise linearity of sums of monomial ideals.

Exact monomial ideal arithmetic, multigraded Betti numbers, sum criteria,
two-variable fullness theory and full-set assemblies.
"""
from .errors import (AssignmentError, CrossCheckError, CwlError, DegenerateIdealError,
                     ParseError, RingMismatchError)
from .kernels import BACKEND
from .monomial import (Monomial, MonomialIdeal, Ring, colon, component, intersect, ideal_sum,
                       m_power, maximal_ideal, power, product, scale, stats, unit_ideal,
                       zero_ideal)
from .resolution import (BettiTable, betti, betti_oracle_dim2, betti_oracle_lcm_lattice,
                         has_linear_resolution, is_componentwise_linear, is_cwl, reg_value,
                         regularity)
from .verdict import INCONCLUSIVE, Verdict
from .criteria import (check_componentwise_criterion, check_cwl_plus_linear, check_hv_criterion,
                       check_lin_plus_lin, check_nJ_sum, check_prime_product)
from .dim2 import (cwl_ordering, fullness_checks, fullsum_verdict, is_full, is_m_full,
                   order_length_formula, reg_plus_one_verdict)
from .fullset import assemble, assemble_powers, validate_assignment
from .io.parser import parse

__version__ = "0.1.0"
