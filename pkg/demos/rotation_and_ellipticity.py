"""
Rotation and ellipticity of light through a chiral slab
=======================================================

Linear light is the sum of two circular waves. If the medium slows one of
them more than the other, the plane of polarization turns; if it absorbs
one more than the other, the line opens into an ellipse.
"""

import math

import numpy as np

from chiroptics.polarization import (
    ChiralSlab,
    ellipse_axes,
    ellipticity_small_angle,
    linear_field,
    polarization_ellipse,
    propagate,
    rad_per_cm_to_deg_per_dm,
    rotatory_power,
)

# A sugar-solution-like slab: n_l - n_r = 1e-6 at 589 nm, 10 cm long.
lam = 589e-7  # cm
slab = ChiralSlab(1.333 + 1e-6, 1.333, 10.0, lam)

out = propagate(linear_field(0.0), slab)
azimuth, minor, major = polarization_ellipse(out)
print("no dichroism")
print(f"  propagated azimuth  {azimuth:.12f} rad")
print(f"  closed form delta   {ellipse_axes(linear_field(0.0), slab).delta:.12f} rad")
print(f"  minor / major       {minor / major:.1e}")
print(f"  specific rotation   {rad_per_cm_to_deg_per_dm(rotatory_power(slab)):.3f} deg/dm")

# Now let the right-handed wave be absorbed a little more.
print("\nwith circular dichroism")
print("  chi_r - chi_l   psi exact        psi small-angle  relative gap")
for dchi in (1e-9, 1e-8, 1e-7, 1e-6):
    s = ChiralSlab(slab.n_l, complex(1.333, dchi), slab.length, lam)
    r = ellipse_axes(linear_field(0.0), s)
    small = ellipticity_small_angle(s)
    print(f"  {dchi:13.0e}   {r.psi: .6e}   {small: .6e}   {abs(small - r.psi) / abs(r.psi):.2e}")

# The readout does not depend on where the input line points.
deltas = [polarization_ellipse(propagate(linear_field(t), slab))[0] - t for t in np.linspace(-1, 1, 5)]
print("\nrotation for five input azimuths:", np.round([math.remainder(d, math.pi) for d in deltas], 12))
