"""Rotational strengths and isotropic Rosenfeld response parameters.

For a molecule in state ``m`` driven at angular frequency ``omega`` the
orientation-averaged induced dipoles are

    d  = alpha E + gamma B - (beta / c) dB/dt
    mu = gamma E + (beta / c) dE/dt

with ``omega_km = omega_k - omega_m``, ``R_km = Im(<m|p|k> . <k|mu|m>)`` and

    alpha = (2 / 3 hbar)   sum_k omega_km |<m|p|k>|**2   / D_km
    beta  = (2 c / 3 hbar) sum_k R_km                    / D_km
    gamma = (2 / 3 hbar)   sum_k omega_km Re(p_mk.mu_km) / D_km

where ``D_km = omega_km**2 - omega**2`` off resonance and
``D_km = omega_km**2 - omega**2 - i omega Gamma_km / 2`` with finite
lifetimes. The lifetime sign makes every absorptive part positive
(``Im alpha > 0`` and ``Im n > 0`` in an absorbing medium); a positive
rotational strength gives a positive circular dichroism band.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from ..constants import CGS, Units
from ..errors import RegimeError, RegimeWarning, ResonanceError, ValidationError
from .model import MoleculeModel

#: Off-resonant path requires ``|omega_km**2 - omega**2| > RESONANCE_RTOL * omega_km**2``.
RESONANCE_RTOL = 1e-6

#: ``|2 pi rho / lambda|`` relative to ``|epsilon|`` above which the eigen-index
#: approximation is flagged.
EIGEN_REGIME_WARN = 0.1


@dataclass(frozen=True)
class ResponseParameters:
    """Rosenfeld parameters of one state at one frequency (CGS: cm^3, cm^4, cm^3)."""

    alpha: complex
    beta: complex
    gamma_param: complex
    state_index: int
    omega: float = math.nan


def rotational_strength(model: MoleculeModel, k: int, m: int) -> float:
    """``R_km = Im(<m|p|k> . <k|mu|m>)`` for the transition between ``k`` and ``m``."""
    model.check_index(k)
    model.check_index(m)
    if k == m:
        raise ValidationError(f"rotational strength needs two distinct states, got k = m = {k}")
    return float(np.imag(np.dot(model.p[m, k], model.mu[k, m])))


def rotational_strengths(model: MoleculeModel) -> np.ndarray:
    """Matrix ``R[k, m]`` of all rotational strengths (zero on the diagonal)."""
    r = np.einsum("mkj,kmj->km", model.p, model.mu).imag
    np.fill_diagonal(r, 0.0)
    return r


def sum_rule_defect(model: MoleculeModel, m: int) -> float:
    """``|sum_k R_km|``, which vanishes when the operator matrices are complete.

    The sum equals ``Im <m|p.mu|m>``, zero whenever ``p.mu`` is Hermitian, as
    it is for genuine position and angular-momentum operators. Truncated
    models generically violate it; that is reported, not raised.
    """
    model.check_index(m)
    return float(abs(rotational_strengths(model)[:, m].sum()))


def _pair_terms(model, m, units):
    """Per-``k`` numerators (``k != m``) shared by both response variants."""
    mask = np.arange(model.n_states) != m
    w_km = model.omega_km(m, units)[mask]
    p_mk = model.p[m][mask]
    mu_km = model.mu[:, m][mask]
    prod = np.einsum("kj,kj->k", p_mk, mu_km)
    p2 = np.einsum("kj,kj->k", p_mk, p_mk.conj()).real
    gamma_km = model.gamma[mask] + model.gamma[m]
    return w_km, p2, prod, gamma_km


def _assemble(model, m, omega, units, w_km, p2, prod, den):
    pref = 2.0 / (3.0 * units.hbar)
    return ResponseParameters(
        alpha=pref * np.sum(w_km * p2 / den),
        beta=units.c * pref * np.sum(prod.imag / den),
        gamma_param=pref * np.sum(w_km * prod.real / den),
        state_index=m,
        omega=omega,
    )


def _check_omega(omega):
    if not (omega >= 0 and math.isfinite(omega)):
        raise ValidationError(f"omega must be finite and >= 0, got {omega}")


def _near_resonance(w_km, omega):
    return np.abs(w_km**2 - omega**2) <= RESONANCE_RTOL * w_km**2


def response_parameters(model: MoleculeModel, m: int, omega: float, units: Units = CGS) -> ResponseParameters:
    """Real Rosenfeld parameters away from every absorption line.

    Raises:
        ResonanceError: ``omega`` is within the guard band of some
            ``|omega_km|``; use :func:`response_parameters_resonant`.
    """
    model.check_index(m)
    _check_omega(omega)
    w_km, p2, prod, _ = _pair_terms(model, m, units)
    hit = _near_resonance(w_km, omega)
    if np.any(hit):
        raise ResonanceError(
            f"omega={omega:g} resonates with a transition of state {m}; "
            "use response_parameters_resonant with nonzero linewidths"
        )
    out = _assemble(model, m, omega, units, w_km, p2, prod, w_km**2 - omega**2)
    return ResponseParameters(float(out.alpha), float(out.beta), float(out.gamma_param), m, omega)


def response_parameters_resonant(model: MoleculeModel, m: int, omega: float,
                                 units: Units = CGS) -> ResponseParameters:
    """Complex Rosenfeld parameters with lifetime-broadened denominators.

    Reduces exactly to :func:`response_parameters` when every
    ``Gamma_km`` is zero.
    """
    model.check_index(m)
    _check_omega(omega)
    w_km, p2, prod, gamma_km = _pair_terms(model, m, units)
    singular = _near_resonance(w_km, omega) & (gamma_km == 0)
    if np.any(singular):
        raise ResonanceError(
            f"omega={omega:g} hits a transition of state {m} with zero linewidth"
        )
    den = (w_km**2 - omega**2) - 1j * omega * gamma_km / 2.0
    return _assemble(model, m, omega, units, w_km, p2, prod, den)


def rotatory_power_prefactor(lambda_vac):
    return 16.0 * math.pi**3 / lambda_vac**2


def rotatory_power_state(beta_m: complex, n_m: float, lambda_vac: float) -> complex:
    """Complex rotatory power ``(16 pi^3 / lambda^2) N_m beta_m`` in rad/cm.

    The real part is the optical rotation per length; the imaginary part is
    the circular-dichroism (ellipticity) density.
    """
    if n_m < 0:
        raise ValidationError(f"number density must be >= 0, got {n_m}")
    if not lambda_vac > 0:
        raise ValidationError(f"lambda_vac must be > 0, got {lambda_vac}")
    return rotatory_power_prefactor(lambda_vac) * n_m * beta_m


@dataclass(frozen=True)
class EnsembleSpec:
    """Number density plus either a temperature or explicit state populations."""

    number_density: float
    temperature: float | None = None
    weights: Sequence[float] | None = None

    def __post_init__(self):
        if not self.number_density > 0:
            raise ValidationError(f"number_density must be > 0, got {self.number_density}")
        if self.weights is None and self.temperature is None:
            raise ValidationError("give a temperature or explicit weights")
        if self.temperature is not None and not self.temperature > 0:
            raise ValidationError(f"temperature must be > 0 K, got {self.temperature}")
        if self.weights is not None:
            w = np.asarray(self.weights, dtype=float)
            if w.ndim != 1 or np.any(w < 0) or not np.all(np.isfinite(w)):
                raise ValidationError("weights must be a 1-d sequence of finite values >= 0")
            if not np.any(w > 0):
                raise ValidationError("all ensemble weights are zero")
            if abs(w.sum() - 1.0) > 1e-12:
                raise ValidationError(f"weights must sum to 1, got {w.sum()!r}")
            object.__setattr__(self, "weights", tuple(w))

    def populations(self, model: MoleculeModel, units: Units = CGS) -> np.ndarray:
        """``P(m)``; explicit weights win over the temperature."""
        if self.weights is not None:
            w = np.asarray(self.weights)
            if w.shape != (model.n_states,):
                raise ValidationError(f"{len(w)} weights given for {model.n_states} states")
            return w
        x = (model.energies - model.energies.min()) / (units.k_b * self.temperature)
        w = np.exp(-x)
        return w / w.sum()


def ensemble_beta(model: MoleculeModel, ensemble: EnsembleSpec, omega: float, units: Units = CGS) -> complex:
    """Population-weighted ``beta = sum_m P(m) beta_m`` (resonant form)."""
    pops = ensemble.populations(model, units)
    total = 0j
    for m in np.flatnonzero(pops):
        total += pops[m] * response_parameters_resonant(model, int(m), omega, units).beta
    return total


def ensemble_rotatory_power(model: MoleculeModel, ensemble: EnsembleSpec, omega: float,
                            units: Units = CGS) -> complex:
    """``[Theta] = (16 pi^3 / lambda^2) N beta`` with ``lambda = 2 pi c / omega``."""
    if not omega > 0:
        raise ValidationError(f"omega must be > 0, got {omega}")
    lambda_vac = 2.0 * math.pi * units.c / omega
    beta = ensemble_beta(model, ensemble, omega, units)
    return rotatory_power_state(beta, ensemble.number_density, lambda_vac)


def mixture_rotatory_power(components, lambda_vac: float) -> complex:
    """Rotatory power of a mixture of species given as ``(N_r, beta_r)`` pairs."""
    total = 0j
    for n_r, beta_r in components:
        if n_r < 0:
            raise ValidationError(f"component density must be >= 0, got {n_r}")
        total += n_r * beta_r
    return rotatory_power_prefactor(lambda_vac) * total


def dense_medium_correction(rotatory_power: complex, n: float) -> complex:
    """Lorentz local-field enhancement ``(n**2 + 2) / 3`` for a dense medium."""
    if not n >= 1:
        raise ValidationError(f"refractive index must be >= 1, got {n}")
    return rotatory_power * (n * n + 2.0) / 3.0


@dataclass(frozen=True)
class MediumCoefficients:
    """Constitutive coefficients ``D = eps E + eta B - (rho/2c) dB/dt``."""

    epsilon: complex
    eta: complex = 0j
    rho: complex = 0j

    @classmethod
    def from_response(cls, params: ResponseParameters, number_density: float):
        """``eps = 1 + 4 pi N alpha``, ``eta = 4 pi N gamma``, ``rho = 8 pi N beta``."""
        n = number_density
        return cls(
            epsilon=1.0 + 4.0 * math.pi * n * params.alpha,
            eta=4.0 * math.pi * n * params.gamma_param,
            rho=8.0 * math.pi * n * params.beta,
        )


def eigen_indices(med: MediumCoefficients, lambda_vac: float) -> tuple[complex, complex]:
    """Indices ``(n_r, n_l)`` of the circular eigenwaves of an optically active medium.

    Solves ``n**2 = eps -/+ 2 pi rho n / lambda`` (wavelength in the medium
    ``lambda / n``) exactly:

        n_l = sqrt(eps + t**2) + t,   n_r = sqrt(eps + t**2) - t,   t = pi rho / lambda

    so ``n_l - n_r = 2 pi rho / lambda`` holds identically. The LCP eigenwave
    has Jones vector ``(1, -i)`` (``E_x/E_y = +i``) and the RCP one ``(1, i)``.
    """
    eps = complex(med.epsilon)
    if eps.real <= 0:
        raise RegimeError(f"Re(epsilon) = {eps.real:g} <= 0: no propagating eigenwaves")
    if not lambda_vac > 0:
        raise ValidationError(f"lambda_vac must be > 0, got {lambda_vac}")
    split = 2.0 * math.pi * complex(med.rho) / lambda_vac
    if abs(split) > EIGEN_REGIME_WARN * abs(eps):
        warnings.warn(
            f"|2 pi rho / lambda| = {abs(split):.3g} is not small against |epsilon| = {abs(eps):.3g}",
            RegimeWarning, stacklevel=2,
        )
    t = split / 2.0
    s = complex(np.sqrt(eps + t * t))
    return s - t, s + t


def eigen_index_splitting(med: MediumCoefficients, lambda_vac: float) -> complex:
    """``n_l - n_r = 2 pi rho / lambda`` without the rounding of the individual indices.

    The difference of the two values from :func:`eigen_indices` is only good
    to ``ulp(n) / |n_l - n_r|`` relative, which matters for weak activity.
    """
    if not lambda_vac > 0:
        raise ValidationError(f"lambda_vac must be > 0, got {lambda_vac}")
    return 2.0 * math.pi * complex(med.rho) / lambda_vac
