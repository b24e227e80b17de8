"""
Faraday rotation in a Lorentz gas
=================================

A static field along the beam splits the binding resonance of each
circular wave. Below the resonance the gas rotates light against the
field, and the sign flips with the field.
"""

import numpy as np

from chiroptics.classical import LorentzGas, MagnetoOpticQuery, faraday_indices, faraday_rotatory_power

gas = LorentzGas(number_density=2.7e19, omega0=3e16)  # ~STP density, UV resonance

print("B (G)      n_l - 1          n_r - 1          [alpha] (rad/cm)")
for b in (-1e4, -1e3, 0.0, 1e3, 1e4):
    q = MagnetoOpticQuery(0.1 * gas.omega0, b)
    n_l, n_r = faraday_indices(gas, q)
    print(f"{b:8.0f}   {n_l - 1:.10e}   {n_r - 1:.10e}   {faraday_rotatory_power(gas, q): .4e}")

# Rotation is linear in B for weak fields; the slope is the Verdet constant.
bs = np.array([1.0, 10.0, 100.0])
alpha = np.array([faraday_rotatory_power(gas, MagnetoOpticQuery(0.1 * gas.omega0, b)) for b in bs])
print("\n[alpha] / B:", alpha / bs)
