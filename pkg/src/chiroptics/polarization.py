"""Transverse Jones fields, circular decomposition and chiral-slab propagation.

Conventions used throughout this module:

* Time dependence ``exp(+i omega t)``. A right circularly polarized (RCP)
  wave has Jones vector proportional to ``(1, i)`` and a left one (LCP) to
  ``(1, -i)``.
* Angles in the transverse plane (rotation ``delta``, azimuths) are positive
  in the clockwise sense as seen by an observer facing the oncoming wave,
  i.e. the direction ``(cos t, -sin t)``.
* Complex indices are ``n = n' + i chi`` with ``chi >= 0`` the absorption
  index. Traversing a length ``L`` multiplies a circular amplitude by
  ``exp(-2 pi i n' L / lambda) * exp(-2 pi chi L / lambda)``.
* Lengths and wavelengths are in cm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError

#: Relative tolerance used to decide whether a field is linearly polarized.
LINEAR_TOL = 1e-9


@dataclass(frozen=True)
class JonesField:
    """Complex transverse amplitudes of a monochromatic plane wave."""

    e_x: complex
    e_y: complex
    omega: float | None = None

    def __post_init__(self):
        ex, ey = complex(self.e_x), complex(self.e_y)
        if not (np.isfinite(ex) and np.isfinite(ey)):
            raise ValidationError("field amplitudes must be finite")
        if self.omega is not None and not self.omega > 0:
            raise ValidationError(f"omega must be > 0, got {self.omega}")
        object.__setattr__(self, "e_x", ex)
        object.__setattr__(self, "e_y", ey)

    @property
    def intensity(self) -> float:
        return abs(self.e_x) ** 2 + abs(self.e_y) ** 2

    def as_array(self) -> np.ndarray:
        return np.array([self.e_x, self.e_y])


@dataclass(frozen=True)
class ChiralSlab:
    """Homogeneous circularly birefringent and dichroic slab.

    ``n_l`` and ``n_r`` are the complex indices of the LCP and RCP eigenwaves,
    ``n = Re(n) + i*chi`` with the absorption index ``chi >= 0``.
    """

    n_l: complex
    n_r: complex
    length: float
    lambda_vac: float

    def __post_init__(self):
        n_l, n_r = complex(self.n_l), complex(self.n_r)
        for name, n in (("n_l", n_l), ("n_r", n_r)):
            if not np.isfinite(n):
                raise ValidationError(f"{name} must be finite")
            if n.real < 0:
                raise ValidationError(f"Re({name}) must be >= 0, got {n.real}")
            if n.imag < 0:
                raise ValidationError(f"Im({name}) must be >= 0 (amplifying media not supported), got {n.imag}")
        if not (self.length >= 0 and math.isfinite(self.length)):
            raise ValidationError(f"length must be finite and >= 0, got {self.length}")
        if not self.lambda_vac > 0:
            raise ValidationError(f"lambda_vac must be > 0, got {self.lambda_vac}")
        object.__setattr__(self, "n_l", n_l)
        object.__setattr__(self, "n_r", n_r)

    @property
    def chi_l(self) -> float:
        return self.n_l.imag

    @property
    def chi_r(self) -> float:
        return self.n_r.imag

    @property
    def dichroic_phase(self) -> float:
        """``2 pi chi' L / lambda`` with ``chi' = (chi_r - chi_l)/2``."""
        return math.pi * (self.chi_r - self.chi_l) * self.length / self.lambda_vac


@dataclass(frozen=True)
class PolarizationReadout:
    """Rotation, ellipticity and ellipse semi-axes of an output wave.

    ``minor_axis`` is signed: positive when the RCP component is the weaker
    one (``chi_r > chi_l``), matching the sign of ``psi``.
    """

    delta: float
    psi: float
    major_axis: float
    minor_axis: float


def circular_decompose(field: JonesField) -> tuple[complex, complex]:
    """Split a Jones field into RCP and LCP amplitudes.

    Returns ``(a_r, a_l)`` such that ``field = a_r*(1, i) + a_l*(1, -i)``.
    """
    a_r = 0.5 * (field.e_x - 1j * field.e_y)
    a_l = 0.5 * (field.e_x + 1j * field.e_y)
    return a_r, a_l


def circular_compose(a_r: complex, a_l: complex, omega: float | None = None) -> JonesField:
    """Inverse of :func:`circular_decompose`."""
    return JonesField(a_r + a_l, 1j * (a_r - a_l), omega)


def _component_factor(n: complex, reference: float, length: float, lambda_vac: float) -> complex:
    k = 2.0 * math.pi * length / lambda_vac
    return np.exp(-1j * k * (n.real - reference)) * math.exp(-k * n.imag)


def propagate(field: JonesField, slab: ChiralSlab) -> JonesField:
    """Carry ``field`` through ``slab``; each circular component evolves independently.

    The phases are taken relative to the mean index and the common phase is
    applied last, so the relative phase (the rotation) keeps full precision
    even when ``n L / lambda`` is large.
    """
    mean = 0.5 * (slab.n_l.real + slab.n_r.real)
    a_r, a_l = circular_decompose(field)
    a_r = a_r * _component_factor(slab.n_r, mean, slab.length, slab.lambda_vac)
    a_l = a_l * _component_factor(slab.n_l, mean, slab.length, slab.lambda_vac)
    common = np.exp(-2j * math.pi * mean * slab.length / slab.lambda_vac)
    out = circular_compose(a_r, a_l)
    return JonesField(common * out.e_x, common * out.e_y, field.omega)


def rotation_angle(slab: ChiralSlab) -> float:
    """Rotation of the plane of polarization, ``pi (n_l - n_r) L / lambda`` (rad).

    Positive values are clockwise for an observer facing the source; the
    faster circular component sets the sense.
    """
    return math.pi * (slab.n_l.real - slab.n_r.real) * slab.length / slab.lambda_vac


def rotatory_power(slab: ChiralSlab) -> float:
    """Rotation per unit path length, ``(pi / lambda)(n_l - n_r)`` in rad/cm."""
    if slab.length == 0:
        raise ValidationError("rotatory power undefined at L = 0")
    return rotation_angle(slab) / slab.length


def rad_per_cm_to_deg_per_dm(value):
    """Convert rad/cm to the polarimetry unit degree/dm."""
    return value * (180.0 / math.pi) * 10.0


def ellipticity_angle(slab: ChiralSlab) -> float:
    """Exact ellipticity angle, ``atan(tanh(2 pi chi' L / lambda))``."""
    return math.atan(math.tanh(slab.dichroic_phase))


def ellipticity_small_angle(slab: ChiralSlab) -> float:
    """First-order ellipticity ``(pi / lambda)(chi_r - chi_l) L``.

    Agrees with :func:`ellipticity_angle` to relative order
    ``(2 pi chi' L / lambda)**2``.
    """
    return slab.dichroic_phase


def ellipse_axes(field_in: JonesField, slab: ChiralSlab) -> PolarizationReadout:
    """Closed-form output ellipse for a linearly polarized input.

    The semi-axes are ``a = 2 e0 cosh(u)`` and ``b = 2 e0 sinh(u)`` with
    ``u = 2 pi chi' L / lambda`` and ``2 e0`` the input amplitude, both
    scaled by the mean attenuation ``exp(-pi (chi_l + chi_r) L / lambda)``.
    The major axis lies at ``input azimuth + delta``.
    """
    a_r, a_l = circular_decompose(field_in)
    scale = max(abs(a_r), abs(a_l))
    if scale == 0 or abs(abs(a_r) - abs(a_l)) > LINEAR_TOL * scale:
        raise ValidationError("ellipse_axes requires a linearly polarized, nonzero input field")
    two_e0 = abs(a_r) + abs(a_l)
    mean_decay = math.exp(-math.pi * (slab.chi_l + slab.chi_r) * slab.length / slab.lambda_vac)
    u = slab.dichroic_phase
    return PolarizationReadout(
        delta=rotation_angle(slab),
        psi=ellipticity_angle(slab),
        major_axis=two_e0 * mean_decay * math.cosh(u),
        minor_axis=two_e0 * mean_decay * math.sinh(u),
    )


def polarization_ellipse(field: JonesField) -> tuple[float, float, float]:
    """Azimuth, signed minor axis and major axis of an arbitrary Jones field.

    The azimuth is in ``(-pi/2, pi/2]`` and uses the clockwise-positive
    convention of this module.
    """
    ex, ey = field.e_x, field.e_y
    mean = 0.5 * (abs(ex) ** 2 + abs(ey) ** 2)
    cos_part = 0.5 * (abs(ex) ** 2 - abs(ey) ** 2)
    sin_part = -(ex * ey.conjugate()).real
    radius = math.hypot(cos_part, sin_part)
    azimuth = 0.5 * math.atan2(sin_part, cos_part)
    major = math.sqrt(mean + radius)
    # a * b = |Im(e_x conj(e_y))| keeps the minor axis accurate when it is tiny
    handed = (ex * ey.conjugate()).imag
    minor = abs(handed) / major if major > 0 else 0.0
    return azimuth, math.copysign(minor, handed), major


def linear_field(azimuth: float, amplitude: float = 1.0, omega: float | None = None) -> JonesField:
    """Linearly polarized field at ``azimuth`` (clockwise positive)."""
    return JonesField(amplitude * math.cos(azimuth), -amplitude * math.sin(azimuth), omega)
