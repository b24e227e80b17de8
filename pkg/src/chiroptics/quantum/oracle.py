"""Induced dipoles from explicit first-order time-dependent perturbation theory.

This path never touches the closed-form Rosenfeld sums. It builds the
perturbed state

    Psi_m = [phi_m + sum_k (a_km e^{i w t} + b_km e^{-i w t}) phi_k] e^{-i w_m t}

with ``a_km = <k|h|m> / (2 hbar (w_mk - w))`` and
``b_km = <k|h^+|m> / (2 hbar (w_mk + w))`` for the interaction
``H(t) = (h e^{i w t} + h^+ e^{-i w t}) / 2``, takes expectation values of
``p`` and ``mu`` to first order, and averages over molecular orientations
with the 24 proper rotations of the cube (exact for the rank-2 tensors that
appear at this order).

The interaction is written in multipolar form, ``h = -p.E0 - mu.B0``, with
``E0 = -(i w / c) A`` and ``B0 = -(i w / c)(s x A)`` for vector-potential
amplitude ``A`` and propagation direction ``s``. Magnetic-magnetic
(``mu**2``) contributions to the induced magnetic moment are dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.spatial.transform import Rotation

from ..constants import CGS, Units
from ..errors import ResonanceError, ValidationError
from .model import MoleculeModel
from .response import RESONANCE_RTOL, response_parameters


@dataclass(frozen=True)
class PlaneWaveDrive:
    """Monochromatic drive ``A(t) = Re[A exp(i omega t)]`` travelling along ``direction``."""

    amplitude: tuple
    omega: float
    direction: tuple = (0.0, 0.0, 1.0)

    def __post_init__(self):
        a = np.asarray(self.amplitude, dtype=complex)
        s = np.asarray(self.direction, dtype=float)
        if a.shape != (3,) or s.shape != (3,):
            raise ValidationError("amplitude and direction must be 3-vectors")
        if not self.omega > 0:
            raise ValidationError(f"omega must be > 0, got {self.omega}")
        norm = np.linalg.norm(s)
        if norm == 0:
            raise ValidationError("direction must be nonzero")
        object.__setattr__(self, "amplitude", tuple(a))
        object.__setattr__(self, "direction", tuple(s / norm))

    def fields(self, units: Units = CGS):
        """Complex amplitudes ``(E0, B0)`` with ``X(t) = Re[X0 exp(i omega t)]``."""
        a = np.asarray(self.amplitude)
        s = np.asarray(self.direction)
        k = -1j * self.omega / units.c
        return k * a, k * np.cross(s, a)


@lru_cache(maxsize=1)
def _cube_rotations():
    return Rotation.create_group("O").as_matrix()


def _first_order_phasor(op, h, m, w_mk, omega, hbar):
    """``e^{i w t}`` amplitude of ``<Psi_m|op|Psi_m>`` to first order in ``h``."""
    mask = np.arange(h.shape[0]) != m
    a = h[mask, m] / (2.0 * hbar * (w_mk[mask] - omega))
    b = h.conj().T[mask, m] / (2.0 * hbar * (w_mk[mask] + omega))
    op_mk = op[m][mask]
    # <op>(t) = 2 Re sum_k op_mk (a_k e^{iwt} + b_k e^{-iwt})
    return 2.0 * (op_mk.T @ a + (op_mk.T @ b).conj())


def induced_dipoles_oracle(model: MoleculeModel, m: int, drive: PlaneWaveDrive, units: Units = CGS):
    """Orientation-averaged induced electric and magnetic dipole phasors.

    Returns ``(d, mu)``, complex 3-vectors such that the physical dipoles are
    ``Re[d exp(i omega t)]`` and ``Re[mu exp(i omega t)]``.
    """
    model.check_index(m)
    w_mk = (model.energies[m] - model.energies) / units.hbar
    off = np.arange(model.n_states) != m
    if np.any(np.abs(w_mk[off] ** 2 - drive.omega**2) <= RESONANCE_RTOL * w_mk[off] ** 2):
        raise ResonanceError(
            f"drive at omega={drive.omega:g} is resonant with state {m}; "
            "first-order amplitudes diverge, use the lifetime-broadened parameters"
        )
    e0, b0 = drive.fields(units)
    d_sum = np.zeros(3, complex)
    mu_sum = np.zeros(3, complex)
    rotations = _cube_rotations()
    for rot in rotations:
        p = model.p @ rot.T
        mu = model.mu @ rot.T
        h_e = -(p @ e0)
        h_b = -(mu @ b0)
        d_sum += _first_order_phasor(p, h_e + h_b, m, w_mk, drive.omega, units.hbar)
        mu_sum += _first_order_phasor(mu, h_e, m, w_mk, drive.omega, units.hbar)
    return d_sum / len(rotations), mu_sum / len(rotations)


def induced_dipoles_closed_form(model: MoleculeModel, m: int, drive: PlaneWaveDrive, units: Units = CGS):
    """``d = alpha E + gamma B - (beta/c) dB/dt`` and ``mu = gamma E + (beta/c) dE/dt`` as phasors."""
    params = response_parameters(model, m, drive.omega, units)
    e0, b0 = drive.fields(units)
    iw = 1j * drive.omega
    d = params.alpha * e0 + params.gamma_param * b0 - params.beta / units.c * iw * b0
    mu = params.gamma_param * e0 + params.beta / units.c * iw * e0
    return d, mu


def oracle_mismatch(model: MoleculeModel, m: int, drive: PlaneWaveDrive, units: Units = CGS) -> float:
    """Largest relative difference between the oracle and closed-form dipoles."""
    d1, mu1 = induced_dipoles_oracle(model, m, drive, units)
    d2, mu2 = induced_dipoles_closed_form(model, m, drive, units)
    worst = 0.0
    for a, b in ((d1, d2), (mu1, mu2)):
        scale = max(np.abs(a).max(), np.abs(b).max())
        if scale > 0:
            worst = max(worst, float(np.abs(a - b).max() / scale))
    return worst if math.isfinite(worst) else math.inf
