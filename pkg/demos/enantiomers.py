"""
Enantiomers, racemates and the sum rule
=======================================

A molecule is described by its levels and the electric and magnetic
transition moments between them. Its mirror image flips every magnetic
moment, and with it every rotational strength.
"""

from pathlib import Path

import numpy as np

from chiroptics.constants import CGS
from chiroptics.io import load_model
from chiroptics.quantum import (
    EnsembleSpec,
    ensemble_rotatory_power,
    mirror_model,
    rotational_strengths,
    sum_rule_defect,
)

here = Path(__file__).parent
model = load_model(here / "data" / "complete_model.yaml").model
image = mirror_model(model)
n = 1e18

print("rotational strengths R_km (erg cm^3):")
print(np.array2string(rotational_strengths(model), precision=3))
print("sum rule defect of the ground state:", sum_rule_defect(model, 0))

ground = EnsembleSpec(n, weights=[1.0] + [0.0] * (model.n_states - 1))
w1 = abs(model.omega_km(0, CGS)[1])
print("\nomega / omega_1  [alpha] model    [alpha] mirror   racemate")
for f in (0.2, 0.5, 0.8, 1.5, 3.0):
    a = ensemble_rotatory_power(model, ground, f * w1, CGS)
    b = ensemble_rotatory_power(image, ground, f * w1, CGS)
    print(f"{f:15.1f}  {a.real: .6e}  {b.real: .6e}  {(a + b).real / 2: .1e}")

# Thermal populations matter only when kT approaches the level spacing.
for t in (300.0, 3e4, 3e5):
    th = ensemble_rotatory_power(model, EnsembleSpec(n, temperature=t), 0.5 * w1, CGS)
    print(f"T = {t:8.0f} K: [alpha] = {th.real: .6e} rad/cm")
