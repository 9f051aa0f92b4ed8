"""Exact eigenvalue multiplicities and class classifiers for alternating groups."""

from .partitions import (
    FrobeniusCoords,
    Partition,
    CycleTypeData,
    check_partition,
    conjugate,
    cycle_type_data,
    dimension,
    format_partition,
    from_frobenius,
    has_distinct_odd_parts,
    is_self_conjugate,
    parse_partition,
    partitions,
    phi,
    to_frobenius,
)
from .characters import (
    AnClass,
    AnIrrep,
    CharacterTable,
    QuadValue,
    an_character,
    an_classes,
    an_irreps,
    character_table_an,
    mn_character,
)
from .multiplicity import (
    BiasResult,
    MultiplicityVector,
    an_multiplicity,
    an_multiplicity_vector,
    bias,
    bias_oracle,
    power_conjugacy,
    power_cycle_type,
    sn_multiplicity,
    sn_multiplicity_oracle,
    sn_multiplicity_vector,
)
from .classify import (
    has_invariant_an,
    has_invariant_sn,
    n_cycle_gap_set,
    n_cycle_gaps,
    unisingular_an,
    unisingular_sn,
)
from .global_classes import (
    GlobalVerdict,
    global_brute_force,
    is_global_class,
    split_class_of,
)
from .acceptance import CriterionResult, run_criteria, run_criterion

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
