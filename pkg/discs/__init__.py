from discs.geometry import EuclideanDisc, PseudoDisc, clip_radius, pseudo_to_euclidean
from discs.radius import (
    distance_certificates, h_eval, h_norm, h_norm_line, prop61_radius, thm21_sharp_disc, thm62_disc,
)
from discs.zeta_disc import batch_certify, certify_zeta, zero_free_grid_check, zeta_F
