"""ZeroFree configuration: tolerances, model table, example defaults."""

# Worked example for zeta (center 1/2 + 50i, radius 1.49e-5)
EXAMPLE_LAMBDA = complex(0.01, 50.0)
EXAMPLE_R = 0.49
EXAMPLE_SIGMA1 = 0.4
EXAMPLE_RADIUS = 1.49e-5
EXAMPLE_RADIUS_WINDOW = (1.44e-5, 1.54e-5)

# Special functions
GAMMA_POLE_DIST = 1e-14       # dist(s, Z<=0) below this is a pole
ZETA_POLE_DIST = 1e-14        # |s - 1| below this is a pole
GAMMA_REL_ERR = 2e-14         # Lanczos g=7 in the shifted regime
BORWEIN_MAX_IM = 150.0        # above this |Im s| Euler-Maclaurin takes over
BORWEIN_MAX_TERMS = 220
BORWEIN_MIN_FACTOR = 0.05     # |1 - 2^(1-s)| below this -> Euler-Maclaurin
ZETA_TARGET_ERR = 1e-16
EM_BERNOULLI_TERMS = 30
HURWITZ_SHIFT = 10            # Euler-Maclaurin shift for zeta(s, theta)
HURWITZ_TERMS = 6
PSI_ASYMPTOTIC_FROM = 10.0    # Hurwitz route for psi(t) when t >= this

# Quadrature defaults
QUAD_REL_TOL = 1e-10
QUAD_ABS_TOL = 1e-12
QUAD_MAX_SUBDIVISIONS = 200000
QUAD_INFINITE_MAP_POWER = 2   # t = a / w^q on (0, 1]
PSI_NORM_CUTOFF = 1e5         # T for the ||psi||_r truncation
MELLIN_F_CUTOFF = 2000        # quadrature of f_A t^(s-1) down to min alpha / this
TAIL_STRATEGIES = ("geometric", "bound-driven")

# Small-matrix machinery
MAX_MATRIX_SIZE = 12
DEGENERATE_RATIO = 1e-14      # |p_{m-1}| < this * ||P||_inf is degenerate
QUAD_FORM_MIN_A = 1e-6

# Distance surrogates (Gram systems)
GRAM_COND_LIMIT = 1e12
GRAM_REGULARIZATION = 1e-14   # times trace, only when Cholesky fails
GRAM_TRUNCATION = 5e-4        # largest eps: quadrature on [eps, inf), closed form below
GRAM_CHUNK_VALUES = 2_000_000 # integrand values held per quadrature chunk
GRID_MAX_DENOMINATOR = 10 ** 6   # alpha_i / alpha_j = p / q with q up to this is commensurable
DEFAULT_GRID_SIZE = 8         # geometric:n grid alpha_j = 2^(1-j)
TARGET_KINDS = ("w_lambda", "u_r_lambda", "f_A")
CONSTRAINTS = ("none", "admissible")

# Discs
H_LINE_CUTOFF = 1000.0        # |Im s| up to which ||h|| is integrated on the line
GRID_CHECK_POINTS = (10, 10)  # radii x angles for the zeta sanity grid

# Admissibility
ADMISSIBLE_TOL = 1e-10

# Zeta model. r0 is an exclusive lower bound max(0, sigma1)
ZETA_NOMINAL_R0 = 0.5
MODELS = {
    "zeta": {"sigma0": 0.0, "m_L": 1, "sigma1": EXAMPLE_SIGMA1},
}

# CLI exit codes
EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_DOMAIN = 2
EXIT_NUMERIC = 3

OUTPUT_FORMATS = ("json", "text", "csv")
DEFAULT_GRID_SPEC = "geometric:8"
NORM_MODES = ("paper_bound", "quadrature", "full_norm")
VERIFY_SUITES = ("pascal", "vandermonde", "triangular", "mellin", "completion")

# Verification suites
VERIFY_SEED = 20240611
VERIFY_RANDOM_CASES = 500
VERIFY_QUADRATIC_CASES = 100
VERIFY_PASCAL_MAX_M = 8
VERIFY_TOL = {
    "solve": 1e-10,
    "mellin_psi": 1e-6,
    "mellin_f": 1e-6,
    "mellin_u": 1e-8,
    "quadratic": 1e-8,
}
