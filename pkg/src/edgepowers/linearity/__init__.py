"""Linear quotients, Betti numbers and componentwise linearity."""

from .betti import (
    BETTI_CAP,
    BettiTable,
    has_linear_resolution,
    multigraded_betti,
    rank_fraction_free,
    regularity,
)
from .certify import (
    CertificationResult,
    Status,
    certify_linear,
    componentwise_linear_quotients,
    is_componentwise_linear_exact,
)
from .constructions import (
    ConstructionError,
    NotCochordalError,
    PreconditionError,
    append_under_variable,
    certify_peo_lex_components,
    combined_order,
    i2_order,
    peo_lex_component_order,
    prime_times_ideal_order,
    property_star_check,
)
from .quotients import (
    SEARCH_CAP,
    CapExceeded,
    OrderError,
    QuotientOrder,
    check_linear_quotients_order,
    ek_betti,
    find_linear_quotients_order,
)
