"""Optical activity, circular dichroism and polarized-light propagation in chiral media."""

__version__ = "0.1.0"

from .constants import CGS, NATURAL, Units
from .errors import ChiropticsError, RegimeError, RegimeWarning, ResolutionError, ResonanceError, ValidationError
from .polarization import (
    ChiralSlab,
    JonesField,
    PolarizationReadout,
    circular_compose,
    circular_decompose,
    ellipse_axes,
    ellipticity_angle,
    ellipticity_small_angle,
    linear_field,
    polarization_ellipse,
    propagate,
    rotation_angle,
    rotatory_power,
)
from .classical import LorentzGas, MagnetoOpticQuery, faraday_indices, faraday_rotatory_power, faraday_splitting
from .dispersion import (
    CottonBand,
    SpectrumGrid,
    biot_limit,
    cotton_lineshape,
    drude_rotation,
    kk_check,
    kk_consistency_residual,
    kramers_kronig,
)
from . import quantum
