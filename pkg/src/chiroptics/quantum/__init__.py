"""Molecular optical activity from transition data."""

from .model import MoleculeModel, mirror_model, truncate_model
from .response import (
    EnsembleSpec,
    MediumCoefficients,
    ResponseParameters,
    dense_medium_correction,
    eigen_index_splitting,
    eigen_indices,
    ensemble_beta,
    ensemble_rotatory_power,
    mixture_rotatory_power,
    response_parameters,
    response_parameters_resonant,
    rotational_strength,
    rotational_strengths,
    rotatory_power_state,
    sum_rule_defect,
)
from .oracle import PlaneWaveDrive, induced_dipoles_closed_form, induced_dipoles_oracle, oracle_mismatch

__all__ = [
    "MoleculeModel", "mirror_model", "truncate_model",
    "EnsembleSpec", "MediumCoefficients", "ResponseParameters",
    "dense_medium_correction", "eigen_index_splitting", "eigen_indices", "ensemble_beta", "ensemble_rotatory_power",
    "mixture_rotatory_power", "response_parameters", "response_parameters_resonant",
    "rotational_strength", "rotational_strengths", "rotatory_power_state", "sum_rule_defect",
    "PlaneWaveDrive", "induced_dipoles_closed_form", "induced_dipoles_oracle", "oracle_mismatch",
]
