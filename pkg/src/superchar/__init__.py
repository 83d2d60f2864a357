"""Weight, root and character combinatorics for GL(m|n) in odd characteristic."""
from .borel_chain import (
    SimpleSystem,
    head_weight,
    is_p_typical,
    is_typical,
    lambda_chain,
    odd_reflect,
    simple_system,
    super_longest_check,
    track_highest,
)
from .charring import (
    Character,
    ch_h0,
    ch_h0_chain,
    ch_kac,
    ch_total,
    ch_weyl,
    euler_chi,
    euler_chi0,
    schur_even,
    xi_product,
)
from .errors import SupercharError
from .jantzen import (
    JantzenReport,
    OddIndexMode,
    affine_reflect,
    even_sum,
    jantzen_sum,
    odd_term,
    p_adic_digits,
    steinberg_reduce,
)
from .root_data import GLContext, Root, Weight, pairing, parse_weight, rho_vectors
from .weyl import WeylElement, act, dot_act, longest_element, weyl_group

__version__ = "0.1.0"
