"""Exact class field theory computations for rational function fields
over finite fields: residues of differentials, the Artin-Schreier residue
pairing, cyclic-group cohomology with Herbrand quotients, idele
arithmetic, and norm residue symbols, all at desk scale and with zero
tolerance.
"""

from .adele_idele import (Adele, Idele, constant_ext_places_above,
                          decompose_C0_Gamma, format_adele, format_idele,
                          gamma_generator, idele_degree, lambda_functional,
                          norm_from_constant_ext, parse_adele, parse_idele,
                          place_below)
from .as_pairing import (PlaceClass, WpVerdict, classify_place_in_AS_ext,
                         in_wp_global, psi_global, psi_local,
                         splitting_oracle, splitting_table,
                         verify_local_kernel)
from .cyclic_cohomology import (CyclicModule, check_multiplicativity,
                                galois_unit_module, group_order_of, h0,
                                herbrand_quotient, hminus1, induced_module,
                                semilocal_compare, trivial_Z_module)
from .errors import NonFiniteQuotientError, ParseError, PrecisionError
from .finite_field import (ExtFieldElem, FieldSpec, artin_schreier_solve,
                           embed, field, field_of_order, format_element,
                           frobenius_power, norm_to, parse_element,
                           parse_field, trace_to, unembed)
from .function_field import (Divisor, Place, Poly, RationalFunction,
                             divisor_of, dt_over_dtP, factor, format_poly,
                             format_rational, is_irreducible, local_expand,
                             local_expand_root, monic_irreducibles,
                             parse_place, parse_poly, parse_rational,
                             place_lift, place_root, places_up_to_degree,
                             residue_value, riemann_roch_basis, valuation_at)
from .laurent_series import (LaurentSeries, WpReduction, WpStatus,
                             derivative, format_series, log_derivative_order,
                             parse_series, recompose_in_prime, reduce_mod_wp,
                             residue, substitute, wp)
from .reciprocity import (ConstantExtension, FrobExponent, as_symbol,
                          global_symbol_constant, henselian_check,
                          local_global_diagram_check, local_symbol_unramified,
                          neukirch_map_constant, norm_functoriality_check,
                          v_K_idele)

__version__ = "0.1.0"
