from .activation import ACTIVATION_FILTER, ActivationResult, apply_filter, remote_activation_demo
from .discord import (
    DEFAULT_CONFIG,
    DiscordResult,
    MeasurementBasis,
    OptimizerConfig,
    classical_correlation,
    discord,
    discord_result,
)
from .family import (
    Rank2Params,
    family_entanglement,
    make_rank2_state,
    purify_rank2,
    reduced_ac,
    separability_predicate,
    tripartite_predicate,
    zero_discord_predicate,
)
from .measures import (
    concurrence,
    eof_from_concurrence,
    eof_two_qubit,
    mutual_information,
    negativity,
    pi_tangle,
    pi_tangle_terms,
    pt_spectrum,
)
from .structure import (
    CorrelationValues,
    StructureReport,
    Thresholds,
    classify_values,
    correlation_values,
    discord_sum_rule_residual,
    structure_cases,
    koashi_winter_residual,
    koashi_winter_terms,
    predicted_flags,
    structure_classify,
)
