"""Exact formal group laws over Q: probability, Boltzmann and universal laws."""

from .boltzmann import (
    EnergeticSet,
    GibbsSeries,
    boltzmann_exp,
    boltzmann_fgl,
    ensemble_average_fgl,
    ensemble_mean_fgl,
    gibbs_series,
    level_law,
)
from .checks import Check, Report, compare_series
from .coeff_ring import (
    QQ,
    ExactRational,
    GeneratorTable,
    GradedPolynomial,
    format_rational,
    poly_add,
    poly_mul,
    poly_substitute,
    rational,
)
from .cobordism import (
    cartier_character,
    cartier_series,
    hurewicz_substitute,
    specialize,
    st_mu,
    universal_fgl,
    universal_log,
    universal_table,
)
from .fgl import (
    AxiomReport,
    FormalGroupLaw,
    fgl_additive,
    fgl_check_axioms,
    fgl_from_exp,
    fgl_from_log,
    fgl_gm,
    fgl_hom_check,
    gm_exp,
    gm_log,
)
from .powerseries import (
    BivariateSeries,
    MultiSeries,
    TruncatedSeries,
    bivariate_substitute,
    divided_power,
    lagrange_inversion,
    series_compose,
    series_exp,
    series_log,
    series_mul,
    series_revert,
    series_scale_argument,
)
from .prob_bridge import (
    Bernoulli,
    FiniteSupport,
    Poisson,
    classical_cumulants,
    fgl_of_distribution,
    kappa,
    mgf,
    moments,
    parse_distribution,
    point_mass,
    st_modulus,
    verify_intertwining,
)
from .symfun import (
    Alphabet,
    gen_E,
    gen_H,
    gen_P,
    h_from_p,
    newton_convert,
    normalize_wp,
    normalize_wp_linear,
    power_sum,
)

__version__ = "0.1.0"
