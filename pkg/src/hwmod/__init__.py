"""Unitarity of highest weight modules for sp(2n,R), su(p,q) and so*(2n).

Exact rational arithmetic throughout.  The main entry points are
:func:`classify`, :func:`scan`, :func:`discrete_recipe` and the
infinitesimal-character tools in :mod:`hwmod.infchar`.
"""

from .classify import LinePosition, Outcome, Verdict, classify, line_position, shape
from .dirac import DiracCertificate, Sign, dirac_difference, dirac_test, scan
from .errors import *  # noqa: F401,F403
from .infchar import (
    Cone,
    DominantParam,
    Parameter,
    Parity,
    YoungDiagram,
    dominant_of,
    edge_points,
    enumerate_parameters,
    enumerate_unitary,
    hasse_rho,
    is_unitary_parameter,
    parameter_of,
    unitary_cones,
    young_of,
)
from .prv import (
    BasicRep,
    Recipe,
    closed_forms,
    discrete_recipe,
    prv_component,
    prv_product_chain,
    weil_coefficient_identity,
)
from .schmid import SchmidModule, basic_schmid, decompose, enumerate_up_to_level, expand
from .weights import (
    Algebra,
    Family,
    Weight,
    beta,
    inner,
    k_dominant,
    lowest_weight,
    make_weight,
    norm_sq,
    parse_weight,
    rho,
    rho_parts,
)

__version__ = "0.1.0"
