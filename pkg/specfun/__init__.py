from specfun.certified import CertifiedValue, QuadratureSpec
from specfun.gamma import gamma, gamma_ratio, log_gamma
from specfun.mellin import phi_hat, phi_hat_quadrature
from specfun.quadrature import Weight, integrate, integrate_vector
from specfun.zeta import (
    borwein_zeta, euler_maclaurin_zeta, hurwitz_mean_square, hurwitz_tail_series,
    hurwitz_zeta_array, zeta,
)
