from .precision import precise, to_mpf, log_of_rational
from .dilog import dilog, dilog_reflection
from .expansions import (root_of_unity, pole_term, pole_term_by_roots, finite_term, log_pochhammer_expansion,
                         log_pochhammer_direct, expansion_residual)
from .multiplier import sawtooth, dedekind_sum, dedekind_multiplier, modular_inverse, eta_transform_check
from .arcs import dominant_arc_constants, dominant_arc_magnitude, arc_piece, arc_ratio
from .estimates import (c_fn, a_fn, b_fn, chat_fn, ahat_fn, dd_asymptotic, ddhat_asymptotic, q_n_asymptotic,
                        moment_asymptotics, mean_var_asymptotic, f_moment_expansion, strict_product_expansion,
                        sqrt_c_expansion, first_moment_odd_closed_form)
from .comparison import compare_dd, log_ratios, as_rational

__all__ = ['precise', 'to_mpf', 'log_of_rational', 'dilog', 'dilog_reflection', 'root_of_unity', 'pole_term',
           'pole_term_by_roots', 'finite_term', 'log_pochhammer_expansion', 'log_pochhammer_direct',
           'expansion_residual', 'sawtooth', 'dedekind_sum', 'dedekind_multiplier', 'modular_inverse',
           'eta_transform_check', 'dominant_arc_constants', 'dominant_arc_magnitude', 'arc_piece', 'arc_ratio',
           'c_fn', 'a_fn', 'b_fn', 'chat_fn', 'ahat_fn', 'dd_asymptotic', 'ddhat_asymptotic', 'q_n_asymptotic',
           'moment_asymptotics', 'mean_var_asymptotic', 'f_moment_expansion', 'strict_product_expansion',
           'sqrt_c_expansion', 'first_moment_odd_closed_form', 'compare_dd', 'log_ratios', 'as_rational']
