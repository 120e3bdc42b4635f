from model.hardy import (
    blaschke, kernel, kernel_norm, mellin_u_check, mellin_u_closed_form, mellin_u_target,
    q_coefficients, u_r_lambda, u_r_lambda_array, u_r_lambda_lead, u_r_lambda_norm2, w_lambda_array,
    w_lambda_norm2,
)
from model.norms import (
    P_norm2, f_A_mellin, f_A_mellin_check, psi1_norm, psi_mellin, psi_mellin_integral, psi_norm_full,
    psi_norm_r, psi_norm_squared, smooth_part_bound, zeta_C_sigma1, zeta_mellin_tail, zeta_psi_norm_bound,
    zeta_square_tail,
)
from model.psi import H_eval, poly_P, psi, psi1_array, psi_array
from model.sequence import (
    AdmissibilityReport, Sequence, admissibility, f_A, f_A_array, g_A, moments,
)
from model.series import SeriesModel, load_model, model_from_dict, zeta_model
