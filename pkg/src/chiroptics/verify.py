"""Built-in end-to-end checks of the symmetry and dispersion laws.

Each check returns a :class:`CheckResult`; :func:`run_checks` runs the whole
suite on built-in models (or on a user model where that makes sense).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import NATURAL, Units
from .quantum.builders import random_complete_model, random_hermitian_model
from .quantum.model import MoleculeModel, mirror_model, truncate_model
from .quantum.oracle import PlaneWaveDrive, oracle_mismatch
from .quantum.response import (
    mixture_rotatory_power,
    response_parameters,
    response_parameters_resonant,
    rotational_strengths,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    value: float
    tolerance: float
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: {self.value:.3e} (tol {self.tolerance:.1e})"
        return f"{text} {self.detail}".rstrip()


def sum_rule_check(model: MoleculeModel, tol=1e-12) -> CheckResult:
    """``|sum_k R_km| <= tol * max|R|`` for every state ``m``."""
    r = rotational_strengths(model)
    scale = np.abs(r).max()
    defect = np.abs(r.sum(axis=0))
    worst = int(np.argmax(defect))
    rel = float(defect[worst] / scale) if scale else 0.0
    return CheckResult("sum rule", rel <= tol, rel, tol, f"[worst state {worst}, {model.name}]")


def antisymmetry_check(model: MoleculeModel, tol=1e-14) -> CheckResult:
    r = rotational_strengths(model)
    scale = np.abs(r).max() or 1.0
    err = float(np.abs(r + r.T).max() / scale)
    return CheckResult("R_km + R_mk = 0", err <= tol, err, tol, f"[{model.name}]")


def _omega_scan(model, units, points):
    w = np.abs(model.omega_km(0, units))
    w = w[w > 0]
    return np.geomspace(0.05 * w.min(), 0.7 * w.min(), points) if w.size else np.array([])


def mirror_check(model: MoleculeModel, units: Units = NATURAL, tol=1e-14, points=64) -> CheckResult:
    """``beta(mirror) = -beta`` on an off-resonant frequency grid."""
    image = mirror_model(model)
    worst, scale = 0.0, 0.0
    for omega in _omega_scan(model, units, points):
        b = response_parameters(model, 0, omega, units).beta
        bm = response_parameters(image, 0, omega, units).beta
        worst = max(worst, abs(b + bm))
        scale = max(scale, abs(b))
    rel = worst / scale if scale else worst
    return CheckResult("enantiomer antisymmetry", rel <= tol, rel, tol, f"[{points} frequencies]")


def racemic_check(model: MoleculeModel, units: Units = NATURAL, points=64) -> CheckResult:
    """An equal-density mixture of a model and its mirror rotates by exactly zero."""
    image = mirror_model(model)
    worst = 0.0
    for omega in _omega_scan(model, units, points):
        lam = 2.0 * math.pi * units.c / omega
        b = response_parameters(model, 0, omega, units).beta
        bm = response_parameters(image, 0, omega, units).beta
        worst = max(worst, abs(mixture_rotatory_power([(0.5, b), (0.5, bm)], lam)))
    return CheckResult("racemic zero", worst == 0.0, worst, 0.0, "[exact]")


def spectral_extremes(model: MoleculeModel, m: int = 0, units: Units = NATURAL, points=4000):
    """``|[alpha]|`` at ``1e-3 lambda_min`` and ``1e3 lambda_max``, relative to the band maximum.

    ``lambda_min`` and ``lambda_max`` are the shortest and longest transition
    wavelengths of state ``m``. Rotation is in units of ``N = 1``.
    """
    w = np.abs(model.omega_km(m, units))
    w = np.delete(w, m)
    omegas = np.geomspace(0.3 * w.min(), 3.0 * w.max(), points)

    def alpha(omega):
        beta = response_parameters_resonant(model, m, omega, units).beta
        return (16.0 * math.pi**3 / (2.0 * math.pi * units.c / omega) ** 2 * beta).real

    peak = max(abs(alpha(o)) for o in omegas)
    short = abs(alpha(1e3 * w.max()))
    long_ = abs(alpha(1e-3 * w.min()))
    return short / peak, long_ / peak


def spectral_extremes_check(model: MoleculeModel, units: Units = NATURAL, tol=1e-4) -> CheckResult:
    short, long_ = spectral_extremes(model, 0, units)
    worst = max(short, long_)
    return CheckResult("spectral extremes", worst < tol, worst, tol,
                       f"[short {short:.1e}, long {long_:.1e}]")


def oracle_check(models, units: Units = NATURAL, tol=1e-8, rng=None) -> CheckResult:
    """Perturbation-theory dipoles against the closed-form response, off resonance."""
    rng = np.random.default_rng(rng)
    worst = 0.0
    for model in models:
        w = np.abs(model.omega_km(0, units))
        w = w[w > 0]
        omega = rng.uniform(0.1, 0.8) * w.min()
        amp = rng.normal(size=3) + 1j * rng.normal(size=3)
        direction = rng.normal(size=3)
        worst = max(worst, oracle_mismatch(model, 0, PlaneWaveDrive(tuple(amp), omega, tuple(direction)), units))
    return CheckResult("oracle equivalence", worst <= tol, worst, tol, f"[{len(models)} models]")


def builtin_models(seed=2024):
    rng = np.random.default_rng(seed)
    complete = random_complete_model(6, rng, linewidth=0.05, name="complete 6-state")
    generic = [random_hermitian_model(n, rng, name=f"random {n}-state") for n in (3, 4, 5, 6)]
    return complete, generic


def truncated_fixture(seed=2024):
    """A complete model with its top states dropped: sum rule visibly broken."""
    complete, _ = builtin_models(seed)
    return truncate_model(complete, [0, 1, 2])


def run_checks(model: MoleculeModel | None = None, units: Units = NATURAL):
    """Full suite. ``model`` replaces the built-in complete model when given."""
    complete, generic = builtin_models()
    subject = complete if model is None else model
    results = [
        sum_rule_check(subject),
        antisymmetry_check(subject),
        mirror_check(subject, units),
        racemic_check(subject, units),
        spectral_extremes_check(subject, units),
        oracle_check(generic if model is None else [subject], units, rng=7),
    ]
    for g in generic:
        results.append(antisymmetry_check(g))
    return results
