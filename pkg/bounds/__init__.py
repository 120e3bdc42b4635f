from bounds.completion import completion_bound, completion_nodes, completion_report, complete_to_admissible
from bounds.constants import ComparisonFactor, E_of_r, Lambda_m_r, theta_psi_r
from bounds.distance import (
    DistanceResult, Target, distance_upper_bound, f_norm, geometric_grid, gram_matrix,
    sharp_distance_from_unconstrained,
)
