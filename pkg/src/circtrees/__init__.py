"""Exact and asymptotic spanning-tree enumeration for circulant graphs.

Functionality is organized along independent, cross-validating routes:

* :mod:`circtrees.graph` -- circulant specs, canonical step folding,
  Laplacians, eigenvalues;
* :mod:`circtrees.exact` -- ground-truth counts via Bareiss fraction-free
  determinants (matrix-tree theorem);
* :mod:`circtrees.chebyshev` -- integer Chebyshev algebra and certified
  closed-form counts for both valency families;
* :mod:`circtrees.arithmetic` -- square-free decompositions
  tau = c n a(n)^2 and the integer sequences a(n);
* :mod:`circtrees.mahler` -- Mahler measures of the associated Laurent
  polynomials, growth ratios, thermodynamic limits;
* :mod:`circtrees.cli` -- the ``circtrees`` command-line tool.
"""

from .arithmetic import (Decomposition, decompose, expected_coefficient,
                         sequence_a, square_free_part)
from .chebyshev import (CertifiedRoots, IntPolynomial, build_even_char,
                        build_odd_char, cheb_eval_large, cheb_t, cheb_u,
                        find_roots, tau_even, tau_even_u_form, tau_odd)
from .errors import (CertificationError, CirctreesError,
                     DisconnectedGraphError, InternalConsistencyError,
                     OracleCeilingError, QuadratureError, RootRefinementError,
                     SpecError, SpecParseError)
from .exact import bareiss_determinant, tau_oracle
from .graph import (CirculantSpec, canonicalize, component_count, eigenvalue,
                    is_connected, laplacian, multiplier_conjugate, parse_spec)
from .mahler import (LaurentSpectrum, MahlerEstimate, ThermoSeries,
                     associated_laurent, asymptotic_ratio,
                     mahler_quadrature, mahler_root_product, thermo_limit)

__version__ = "0.1.0"

__all__ = [
    "CertificationError", "CertifiedRoots", "CirculantSpec", "CirctreesError",
    "Decomposition", "DisconnectedGraphError", "IntPolynomial",
    "InternalConsistencyError", "LaurentSpectrum", "MahlerEstimate",
    "OracleCeilingError", "QuadratureError", "RootRefinementError",
    "SpecError", "SpecParseError", "ThermoSeries", "associated_laurent",
    "asymptotic_ratio", "bareiss_determinant", "build_even_char",
    "build_odd_char", "canonicalize", "cheb_eval_large", "cheb_t", "cheb_u",
    "component_count", "decompose", "eigenvalue", "expected_coefficient",
    "find_roots", "is_connected", "laplacian", "mahler_quadrature",
    "mahler_root_product", "multiplier_conjugate", "parse_spec", "sequence_a",
    "square_free_part", "tau_even", "tau_even_u_form", "tau_odd",
    "tau_oracle", "thermo_limit",
]
