"""Entanglement, discord and coherence of two-qubit X states under local noise."""

from .channels import Channel, ChannelSpec, calibrate, evolve_params, kraus_evolve_pair, kraus_single
from .dynamics import (
    PathKind,
    Thresholds,
    TrajectoryPoint,
    classify_path,
    coherence_crossover,
    entanglement_death,
    locate_region_flips,
    region_thresholds,
    trajectory,
)
from .geometry import existence_grid, sc_map, separable_grid
from .measures import Region, coherence, discord, discord_region, entanglement, intermediate
from .relations import RelationCurve, VerificationReport, relation_D_of_C, relation_E_of_C, verify_relations
from .state import (
    CorrelationVector,
    DomainError,
    ShapeError,
    UnsupportedStateError,
    XStateParams,
    bd_from_r,
    is_physical,
    params_from_density,
    random_physical_state,
    x_from_params,
)

__all__ = [
    "Channel", "ChannelSpec", "calibrate", "evolve_params", "kraus_evolve_pair", "kraus_single",
    "PathKind", "Thresholds", "TrajectoryPoint", "classify_path", "coherence_crossover",
    "entanglement_death", "locate_region_flips", "region_thresholds", "trajectory",
    "existence_grid", "sc_map", "separable_grid",
    "Region", "coherence", "discord", "discord_region", "entanglement", "intermediate",
    "RelationCurve", "VerificationReport", "relation_D_of_C", "relation_E_of_C", "verify_relations",
    "CorrelationVector", "DomainError", "ShapeError", "UnsupportedStateError", "XStateParams",
    "bd_from_r", "is_physical", "params_from_density", "random_physical_state", "x_from_params",
]
