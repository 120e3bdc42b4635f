from linalg.pascal import (
    PascalMatrix, pascal_eigenvalues, pascal_lower_bound, pascal_min_eigenvalue,
    pascal_min_eigenvector, pascal_quadratic_integral, pascal_quadratic_lower_bound,
)
from linalg.triangular import PolyP, solve_triangular, triangular_matrix, xi_display, xi_proof, xi_report
from linalg.vandermonde import (
    abs_sum_bound, row_abs_sums, solve_vandermonde, vandermonde_inverse_exact, vandermonde_matrix,
)
