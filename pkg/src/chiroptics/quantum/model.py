"""Finite molecular model: stationary states plus dipole matrix elements."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..constants import CGS, Units
from ..errors import ValidationError

#: Hermiticity tolerance, relative to the largest matrix element.
HERMITIAN_RTOL = 1e-12


def _frozen(a, dtype):
    a = np.array(a, dtype=dtype, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class MoleculeModel:
    """States ``m`` with energies ``E_m`` and decay rates ``Gamma_m``.

    ``p[m, k]`` is the vector ``<m|p|k>`` and ``mu[k, m]`` the vector
    ``<k|mu|m>``; both arrays have shape ``(n, n, 3)`` and must be Hermitian
    in the state indices. Arrays are stored read-only.

    Attributes:
        energies: state energies (erg in CGS).
        p: electric dipole matrix (esu cm).
        mu: magnetic dipole matrix (erg/G). May already include spin terms.
        gamma: decay rates (rad/s); the pair width is ``gamma[k] + gamma[m]``.
        name: free-form label.
    """

    energies: np.ndarray
    p: np.ndarray
    mu: np.ndarray
    gamma: np.ndarray | None = None
    name: str = ""

    def __post_init__(self):
        energies = _frozen(self.energies, float)
        n = energies.shape[0] if energies.ndim == 1 else -1
        if n < 1:
            raise ValidationError("energies must be a non-empty 1-d sequence")
        gamma = np.zeros(n) if self.gamma is None else self.gamma
        gamma = _frozen(gamma, float)
        p = _frozen(self.p, complex)
        mu = _frozen(self.mu, complex)
        for label, arr in (("p", p), ("mu", mu)):
            if arr.shape != (n, n, 3):
                raise ValidationError(f"{label} must have shape ({n}, {n}, 3), got {arr.shape}")
            if not np.all(np.isfinite(arr)):
                raise ValidationError(f"{label} contains non-finite entries")
            scale = np.abs(arr).max(initial=0.0)
            defect = np.abs(arr - arr.conj().transpose(1, 0, 2))
            if scale and defect.max() > HERMITIAN_RTOL * scale:
                m, k, _ = np.unravel_index(np.argmax(defect), defect.shape)
                raise ValidationError(
                    f"{label} is not Hermitian: <{m}|{label}|{k}> != conj(<{k}|{label}|{m}>)"
                )
        if gamma.shape != (n,):
            raise ValidationError(f"gamma must have length {n}, got shape {gamma.shape}")
        if np.any(gamma < 0) or not np.all(np.isfinite(gamma)):
            raise ValidationError("gamma must be finite and >= 0")
        if not np.all(np.isfinite(energies)):
            raise ValidationError("energies must be finite")
        object.__setattr__(self, "energies", energies)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "mu", mu)

    @property
    def n_states(self) -> int:
        return self.energies.shape[0]

    def check_index(self, m):
        if not (isinstance(m, (int, np.integer)) and 0 <= m < self.n_states):
            raise ValidationError(f"state index {m!r} out of range for {self.n_states} states")

    def omega_km(self, m: int, units: Units = CGS) -> np.ndarray:
        """Transition frequencies ``omega_k - omega_m`` for every ``k``."""
        return (self.energies - self.energies[m]) / units.hbar

    def has_defined_parity(self, atol: float = 0.0) -> bool:
        """True when every permanent electric dipole ``<m|p|m>`` vanishes."""
        diag = np.abs(self.p[np.arange(self.n_states), np.arange(self.n_states)])
        return bool(np.all(diag <= atol))


def mirror_model(model: MoleculeModel) -> MoleculeModel:
    """Parity image of ``model``: ``p -> -p``, ``mu`` unchanged.

    Every rotational strength flips sign while ``|<m|p|k>|**2`` is untouched,
    so ``alpha`` is invariant and ``beta`` changes sign.
    """
    name = model.name[len("mirror of "):] if model.name.startswith("mirror of ") else f"mirror of {model.name}"
    return MoleculeModel(model.energies, -model.p, model.mu, model.gamma, name)


def truncate_model(model: MoleculeModel, keep) -> MoleculeModel:
    """Restrict ``model`` to the states listed in ``keep``.

    The truncated operator matrices are generally no longer complete, so the
    rotational-strength sum rule will show a defect.
    """
    keep = np.asarray(keep, dtype=int)
    ix = np.ix_(keep, keep)
    return MoleculeModel(model.energies[keep], model.p[ix], model.mu[ix], model.gamma[keep],
                         f"{model.name} truncated")
