"""
A Cotton band and its Kramers-Kronig partner
============================================

Near an absorption band the rotation changes sign and the dichroism
peaks. The two are tied by causality: the rotation curve can be rebuilt
from the dichroism alone.
"""

import math

from chiroptics.constants import CGS
from chiroptics.dispersion import (
    CottonBand,
    SpectrumGrid,
    biot_limit,
    cotton_lineshape,
    drude_rotation,
    kramers_kronig,
    log_omega_grid,
    rms_relative_error,
)
from chiroptics.errors import ResolutionError

band = CottonBand(amplitude=1e-6, lambda0=300e-7, g=0.05)

print("lambda (nm)  [alpha]       [Psi]        Drude        Biot")
for lam_nm in (200, 280, 295, 300, 305, 320, 600, 3000):
    lam = lam_nm * 1e-7
    th = cotton_lineshape(band, lam)
    drude = f"{drude_rotation([band], lam): .4e}" if lam_nm != 300 else "  (band)  "
    print(f"{lam_nm:10d}  {th.real: .4e}  {th.imag: .4e}  {drude}  {biot_limit(band.amplitude, lam): .4e}")

# Rebuild [alpha] from [Psi] on a 6-decade log grid.
c = CGS.c
for points in (1024, 2048, 4096, 16384):
    w = log_omega_grid(2 * math.pi * c / band.lambda0, 6.0, points)
    theta = cotton_lineshape(band, 2 * math.pi * c / w)
    try:
        back = kramers_kronig(SpectrumGrid(w, 1j * theta.imag), "real_from_imag",
                              asymptote=band.short_wavelength_limit)
    except ResolutionError as exc:
        print(f"{points:6d} points: refused ({exc})")
        continue
    print(f"{points:6d} points: rms relative error {rms_relative_error(back.values.real, theta.real):.2e}")

# Sharper bands need finer grids.
w = log_omega_grid(2 * math.pi * c / band.lambda0, 6.0, 4096)
for g in (0.2, 0.05, 0.01):
    b = CottonBand(1e-6, band.lambda0, g)
    theta = cotton_lineshape(b, 2 * math.pi * c / w)
    back = kramers_kronig(SpectrumGrid(w, 1j * theta.imag), "real_from_imag", asymptote=b.short_wavelength_limit)
    print(f"g = {g:<5} rms relative error {rms_relative_error(back.values.real, theta.real):.2e}")
