"""Classical dielectric relations and the single-electron Faraday model.

All quantities are CGS-Gaussian. The Lorentz-force term in the Faraday
denominators carries ``1/c`` (``e B omega / (m c)``), as required in
Gaussian units.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .constants import C_CGS, ELECTRON_CHARGE_ESU, ELECTRON_MASS_G
from .errors import RegimeError, RegimeWarning, ResonanceError, ValidationError

#: Relative guard on the Faraday denominators, in units of omega0**2.
RESONANCE_TOL = 1e-9

#: ``4 pi N alpha / 3`` above which the dilute expansion is flagged.
DILUTE_WARN = 0.1


@dataclass(frozen=True)
class LorentzGas:
    """Dilute gas of one-electron atoms bound by ``-m omega0**2 r``."""

    number_density: float
    omega0: float
    charge: float = ELECTRON_CHARGE_ESU
    mass: float = ELECTRON_MASS_G

    def __post_init__(self):
        for name in ("number_density", "omega0", "charge", "mass"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ValidationError(f"{name} must be finite and > 0, got {value}")

    @property
    def plasma_term(self) -> float:
        """``N e**2 / m``."""
        return self.number_density * self.charge**2 / self.mass


@dataclass(frozen=True)
class MagnetoOpticQuery:
    """Probe frequency and static field along the propagation axis (gauss, signed)."""

    omega: float
    b_field: float = 0.0

    def __post_init__(self):
        if not self.omega > 0:
            raise ValidationError(f"omega must be > 0, got {self.omega}")
        if not math.isfinite(self.b_field):
            raise ValidationError("b_field must be finite")


def _faraday_denominators(gas, q, c):
    base = gas.omega0**2 - q.omega**2
    larmor = gas.charge * q.b_field * q.omega / (gas.mass * c)
    return base + larmor, base - larmor


def faraday_indices(gas: LorentzGas, q: MagnetoOpticQuery, c: float = C_CGS) -> tuple[float, float]:
    """Refractive indices ``(n_l, n_r)`` for waves travelling along ``+B``.

    ``n**2 = 1 + 4 pi (N e**2/m) / (omega0**2 - omega**2 +/- e B omega/(m c))``
    with the upper sign for LCP.
    """
    result = []
    for label, den in zip(("LCP", "RCP"), _faraday_denominators(gas, q, c)):
        if abs(den) <= RESONANCE_TOL * gas.omega0**2:
            raise ResonanceError(
                f"{label} denominator vanishes at omega={q.omega:g}, B={q.b_field:g}; "
                "the classical model assumes no resonance"
            )
        n2 = 1.0 + 4.0 * math.pi * gas.plasma_term / den
        if n2 <= 0:
            raise RegimeError(f"{label} wave is evanescent (n^2 = {n2:g} <= 0)")
        result.append(math.sqrt(n2))
    return result[0], result[1]


def faraday_splitting(gas: LorentzGas, q: MagnetoOpticQuery, c: float = C_CGS) -> float:
    """``n_l - n_r`` without cancellation.

    Uses ``n_l**2 - n_r**2 = -8 pi (N e**2/m) L / (D_l D_r)`` with the
    Larmor term ``L = e B omega/(m c)``, so weak splittings in dilute gases
    keep full relative precision.
    """
    n_l, n_r = faraday_indices(gas, q, c)
    d_l, d_r = _faraday_denominators(gas, q, c)
    larmor = 0.5 * (d_l - d_r)
    if larmor == 0.0:
        return 0.0  # no -0.0 at zero field
    return -8.0 * math.pi * gas.plasma_term * larmor / (d_l * d_r) / (n_l + n_r)


def faraday_rotatory_power(gas: LorentzGas, q: MagnetoOpticQuery, lambda_vac: float | None = None,
                           c: float = C_CGS) -> float:
    """Magnetically induced rotatory power ``(pi/lambda)(n_l - n_r)`` in rad/cm.

    ``lambda_vac`` defaults to ``2 pi c / omega``. Negative (levorotatory)
    for ``B > 0`` below resonance.
    """
    if lambda_vac is None:
        lambda_vac = 2.0 * math.pi * c / q.omega
    return math.pi / lambda_vac * faraday_splitting(gas, q, c)


def clausius_mossotti(epsilon: float, number_density: float) -> float:
    """Molecular polarizability ``(3 / 4 pi N)(eps - 1)/(eps + 2)`` in cm^3."""
    if epsilon == -2:
        raise ValidationError("Clausius-Mossotti relation is singular at epsilon = -2")
    if not epsilon > 0:
        raise ValidationError(f"epsilon must be > 0, got {epsilon}")
    if not number_density > 0:
        raise ValidationError(f"number_density must be > 0, got {number_density}")
    return 3.0 / (4.0 * math.pi * number_density) * (epsilon - 1.0) / (epsilon + 2.0)


def local_field_epsilon(number_density: float, alpha: float) -> float:
    """Dielectric constant including the Lorentz local field, ``1 + 4 pi kappa``.

    ``kappa = N alpha / (1 - 4 pi N alpha / 3)``; this inverts
    :func:`clausius_mossotti` exactly.
    """
    x = 4.0 * math.pi * number_density * alpha / 3.0
    if x >= 1:
        raise RegimeError(f"4 pi N alpha / 3 = {x:g} >= 1: local-field catastrophe")
    return 1.0 + 4.0 * math.pi * number_density * alpha / (1.0 - x)


def dilute_epsilon(number_density: float, alpha: float) -> float:
    """Dilute-medium dielectric constant ``1 + 4 pi N alpha``."""
    x = 4.0 * math.pi * number_density * alpha / 3.0
    if x >= 1:
        raise RegimeError(f"4 pi N alpha / 3 = {x:g} >= 1: medium is not dilute")
    if x > DILUTE_WARN:
        warnings.warn(f"4 pi N alpha / 3 = {x:g}; dilute approximation is poor", RegimeWarning, stacklevel=2)
    return 1.0 + 4.0 * math.pi * number_density * alpha


def dilute_index(number_density: float, alpha: float) -> float:
    """``n = sqrt(1 + 4 pi N alpha)`` for a dilute, non-magnetic medium."""
    eps = dilute_epsilon(number_density, alpha)
    if eps <= 0:
        raise RegimeError(f"epsilon = {eps:g} <= 0, no propagating wave")
    return math.sqrt(eps)


def lorentz_polarizability(gas: LorentzGas, omega: float) -> float:
    """Field-free single-electron polarizability ``(e**2/m)/(omega0**2 - omega**2)``."""
    den = gas.omega0**2 - omega**2
    if abs(den) <= RESONANCE_TOL * gas.omega0**2:
        raise ResonanceError(f"omega={omega:g} is at the oscillator resonance")
    return gas.charge**2 / gas.mass / den

