from .polynomials import (X, X_FIELD, X_RING, Polynomial, RationalFunction, polynomial, from_counts, degree,
                          coefficients, coefficient_sum, as_counts, to_strings, is_integral, as_polynomial)
from .rings import (Radicand, Jet, SeriesCoefficient, CoefficientRing, SymbolicRing, SpecializedRing, JetRing,
                    describe)
from .series import (TruncatedSeries, series_add, series_mul, series_scale, pochhammer_inf, pochhammer,
                     extract_poly, export_value)
from .generating import (strict_series, half_F_t, half_Fhat_t, half_tcore_DD, half_F1, half_DD_n1hat,
                         half_DD_n1hat_sum, half_sum_bracket, radical_bracket, gen_F_t, gen_Fhat_t, gen_F1,
                         gen_DD_n1hat, gen_DD_n1hat_sum, gen_tcore_DD, gen_SC_n1hat, gen_SC_n1hat_sum, gen_SC_n1,
                         gen_han, GENERATORS, generate)
from .moments import moment_from_jet, moment_jets, moment_series, first_moment_closed_form
from .identities import q_binomial_sides, heine_sides
