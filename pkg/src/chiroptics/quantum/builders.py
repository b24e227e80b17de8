"""Ready-made molecular models: analytic toys and random test ensembles.

A random Hermitian pair ``(p_j, mu_j)`` does not in general make
``<m|p.mu|m>`` real, so it violates the rotational-strength sum rule.
:func:`random_complete_model` draws each Cartesian pair from a common
eigenbasis, which makes ``p_j mu_j`` Hermitian for every component (as it
is for ``r_j`` and ``L_j``) while leaving individual transitions chiral.
"""

from __future__ import annotations

import numpy as np
from scipy.stats import unitary_group

from ..constants import HBAR_CGS
from .model import MoleculeModel


def two_state_chiral(omega0=1.0, d=1.0, mu0=1.0, linewidth=0.0, hbar=1.0, name="two-state chiral"):
    """Ground state ``0`` and one excited state at ``hbar*omega0``.

    ``<0|p|1> = (i d, 0, 0)`` and ``<1|mu|0> = (mu0, 0, 0)``, so
    ``R_10 = d * mu0``. ``linewidth`` is the pair width ``Gamma_10``, put
    entirely on the excited state.
    """
    p = np.zeros((2, 2, 3), complex)
    mu = np.zeros((2, 2, 3), complex)
    p[0, 1, 0] = 1j * d
    p[1, 0, 0] = -1j * d
    mu[1, 0, 0] = mu0
    mu[0, 1, 0] = mu0
    return MoleculeModel([0.0, hbar * omega0], p, mu, [0.0, linewidth], name)


def achiral_model(energies, rng=None, name="achiral"):
    """Model with purely real dipole matrices: every rotational strength is zero."""
    rng = np.random.default_rng(rng)
    n = len(energies)
    p = _real_symmetric_vectors(rng, n)
    mu = _real_symmetric_vectors(rng, n)
    return MoleculeModel(energies, p, mu, None, name)


def _real_symmetric_vectors(rng, n):
    a = rng.normal(size=(n, n, 3))
    return 0.5 * (a + a.transpose(1, 0, 2))


def _hermitian_vectors(rng, n):
    a = rng.normal(size=(n, n, 3)) + 1j * rng.normal(size=(n, n, 3))
    a = 0.5 * (a + a.conj().transpose(1, 0, 2))
    return a


def _spread_energies(rng, n, energy_scale):
    # well separated levels keep random drives away from resonances
    gaps = rng.uniform(0.5, 1.5, size=n - 1)
    return energy_scale * np.concatenate([[0.0], np.cumsum(gaps)])


def random_hermitian_model(n, rng=None, p_scale=1.0, mu_scale=1.0, energy_scale=1.0,
                           linewidth=0.0, zero_permanent=True, name="random"):
    """Model with independent random Hermitian ``p`` and ``mu``.

    Satisfies every model invariant but, in general, not the sum rule.
    """
    rng = np.random.default_rng(rng)
    p = p_scale * _hermitian_vectors(rng, n)
    mu = mu_scale * _hermitian_vectors(rng, n)
    if zero_permanent:
        idx = np.arange(n)
        p[idx, idx] = 0.0
    gamma = np.full(n, linewidth / 2.0)
    return MoleculeModel(_spread_energies(rng, n, energy_scale), p, mu, gamma, name)


def random_complete_model(n, rng=None, p_scale=1.0, mu_scale=1.0, energy_scale=1.0,
                          linewidth=0.0, name="random complete"):
    """Random chiral model whose operator matrices obey the closure sum rule."""
    rng = np.random.default_rng(rng)
    p = np.empty((n, n, 3), complex)
    mu = np.empty((n, n, 3), complex)
    for j in range(3):
        u = unitary_group.rvs(n, random_state=rng) if n > 1 else np.eye(1)
        ev_p = rng.normal(size=n)
        ev_mu = rng.normal(size=n)
        p[:, :, j] = p_scale * (u * ev_p) @ u.conj().T
        mu[:, :, j] = mu_scale * (u * ev_mu) @ u.conj().T
    p = 0.5 * (p + p.conj().transpose(1, 0, 2))
    mu = 0.5 * (mu + mu.conj().transpose(1, 0, 2))
    gamma = np.full(n, linewidth / 2.0)
    return MoleculeModel(_spread_energies(rng, n, energy_scale), p, mu, gamma, name)


def cgs_scaled(model: MoleculeModel, energy=5e-12, dipole=1e-18, magnetic=1e-20, name=None):
    """Rescale a natural-unit model (``hbar = 1``) to molecular CGS magnitudes.

    Defaults put a unit gap at 3.1 eV (400 nm), electric dipoles
    at 1 debye and magnetic dipoles near a Bohr magneton. Linewidths scale
    with the frequencies.
    """
    rate = energy / HBAR_CGS
    return MoleculeModel(model.energies * energy, model.p * dipole, model.mu * magnetic,
                         model.gamma * rate, name or model.name)
