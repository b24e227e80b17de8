"""Optical rotatory dispersion: Cotton bands, Drude/Biot laws, Kramers-Kronig.

Wavelength and frequency are tied by ``omega = 2 pi c / lambda``. The
complex rotatory power ``[Theta] = [alpha] + i [Psi]`` is treated as a
causal response of ``omega`` that is analytic in the upper half plane, with
``Theta(-omega) = conj(Theta(omega))``. That gives the pair

    Re Theta(w) - Theta_inf = (2/pi)   P int_0^inf  w' Im Theta(w') / (w'^2 - w^2) dw'
    Im Theta(w)             = -(2w/pi) P int_0^inf (Re Theta(w') - Theta_inf) / (w'^2 - w^2) dw'

where ``Theta_inf`` is the short-wavelength limit of the rotation. It is
zero when the rotational strengths obey their sum rule; a single isolated
band has ``Theta_inf = -A / lambda0**2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import simpson
from scipy.interpolate import make_interp_spline

from .constants import CGS, Units
from .errors import ResolutionError, ResonanceError, ValidationError

#: Minimum samples within the local window around each KK output point.
MIN_LOCAL_POINTS = 4


@dataclass(frozen=True)
class CottonBand:
    """Single optically active absorption band in the wavelength domain.

    Attributes:
        amplitude: ``A = (8 pi / 3 c hbar) N R0 lambda0**2``; its sign is the
            sign of the rotational strength (positive or negative Cotton effect).
        lambda0: band-centre wavelength.
        g: dimensionless width.
    """

    amplitude: float
    lambda0: float
    g: float = 0.0

    def __post_init__(self):
        if not self.lambda0 > 0:
            raise ValidationError(f"lambda0 must be > 0, got {self.lambda0}")
        if not self.g >= 0:
            raise ValidationError(f"g must be >= 0, got {self.g}")

    @classmethod
    def from_transition(cls, number_density, rotational_strength, omega0, linewidth=0.0, units: Units = CGS):
        """Band produced by one transition of frequency ``omega0`` and pair width ``linewidth``.

        ``g = lambda0 * linewidth / (4 pi c)`` is the width that makes
        :func:`cotton_lineshape` identical to the frequency-domain
        response with denominator ``omega0**2 - omega**2 - i omega Gamma / 2``.
        """
        lambda0 = 2.0 * math.pi * units.c / omega0
        amplitude = 8.0 * math.pi / (3.0 * units.c * units.hbar) * number_density * rotational_strength * lambda0**2
        return cls(amplitude, lambda0, lambda0 * linewidth / (4.0 * math.pi * units.c))

    @property
    def short_wavelength_limit(self) -> float:
        """``[alpha]`` as ``lambda -> 0``: ``-A / lambda0**2``."""
        return -self.amplitude / self.lambda0**2


def cotton_lineshape(band: CottonBand, lam):
    """Complex rotatory power ``[alpha] + i [Psi]`` of one band at wavelength(s) ``lam``.

    ``[alpha] = A (l^2 - l0^2) / Q`` and ``[Psi] = A g l l0 / Q`` with
    ``Q = (l^2 - l0^2)^2 + l^2 l0^2 g^2``.
    """
    lam = np.asarray(lam, dtype=float)
    if np.any(lam <= 0):
        raise ValidationError("wavelengths must be > 0")
    l0 = band.lambda0
    diff = lam**2 - l0**2
    q = diff**2 + (lam * l0 * band.g) ** 2
    out = band.amplitude * (diff + 1j * band.g * lam * l0) / q
    return out if out.ndim else complex(out)


def _as_bands(bands):
    out = []
    for b in bands:
        if isinstance(b, CottonBand):
            out.append((b.amplitude, b.lambda0))
        else:
            a, l0 = b
            out.append((float(a), float(l0)))
    return out


def drude_rotation(bands, lam, rtol=1e-6):
    """Drude equation ``sum_k A_k / (lambda^2 - lambda0_k^2)``.

    ``bands`` holds ``(A_k, lambda0_k)`` pairs or :class:`CottonBand`
    objects. Only valid away from every band centre.
    """
    lam = np.asarray(lam, dtype=float)
    total = np.zeros_like(lam)
    for a, l0 in _as_bands(bands):
        if np.any(np.abs(lam - l0) <= rtol * l0):
            raise ResonanceError(f"wavelength within {rtol:g} of band centre {l0:g}; Drude equation invalid")
        total = total + a / (lam**2 - l0**2)
    return total if total.ndim else float(total)


def biot_limit(amplitude, lam):
    """Long-wavelength Biot law ``A / lambda**2``."""
    lam = np.asarray(lam, dtype=float)
    if np.any(lam <= 0):
        raise ValidationError("wavelengths must be > 0")
    out = amplitude / lam**2
    return out if out.ndim else float(out)


@dataclass(frozen=True, eq=False)
class SpectrumGrid:
    """Complex samples on a strictly increasing abscissa.

    ``domain`` is ``"omega"`` (rad/s) or ``"lambda"`` (cm).
    """

    abscissa: np.ndarray
    values: np.ndarray
    domain: str = "omega"
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        x = np.array(self.abscissa, dtype=float)
        v = np.array(self.values, dtype=complex)
        if self.domain not in ("omega", "lambda"):
            raise ValidationError(f"domain must be 'omega' or 'lambda', got {self.domain!r}")
        if x.ndim != 1 or v.shape != x.shape:
            raise ValidationError("abscissa and values must be 1-d arrays of equal length")
        if x.size < 2 or np.any(np.diff(x) <= 0):
            raise ValidationError("abscissa must be strictly increasing with at least 2 points")
        x.setflags(write=False)
        v.setflags(write=False)
        object.__setattr__(self, "abscissa", x)
        object.__setattr__(self, "values", v)

    def to_omega(self, units: Units = CGS) -> "SpectrumGrid":
        if self.domain == "omega":
            return self
        omega = 2.0 * math.pi * units.c / self.abscissa
        return SpectrumGrid(omega[::-1], self.values[::-1], "omega", dict(self.meta))


def _check_resolution(x, window):
    # samples expected within +/- window around x_i, judged from the coarser
    # neighbouring step so that the grid ends are not penalised
    steps = np.diff(x)
    local = np.maximum(np.concatenate([steps[:1], steps]), np.concatenate([steps, steps[-1:]]))
    count = np.floor(2.0 * window * x / local) + 1
    bad = np.flatnonzero(count < MIN_LOCAL_POINTS)
    if bad.size:
        i = bad[0]
        raise ResolutionError(
            f"grid too coarse near omega={x[i]:g}: about {int(count[i])} samples within "
            f"+/-{window:g} relative (need {MIN_LOCAL_POINTS}); {bad.size} points affected"
        )


def _upper_tail_kernel(z, b):
    """``int_b^inf (b^2/x^2 - 1) / (x^2 - w^2) dx`` with ``z = w/b`` in (0, 1]."""
    out = np.empty_like(z)
    small = z < 0.5
    zs = z[small] ** 2
    n = np.arange(1, 40)
    coef = 1.0 / ((2 * n + 1) * (2 * n - 1))
    out[small] = -(2.0 / b) * np.polynomial.polynomial.polyval(zs, coef)
    big = ~small
    zb = z[big]
    with np.errstate(divide="ignore", invalid="ignore"):
        val = ((1.0 - zb**2) * np.arctanh(zb) / zb - 1.0) / (zb * zb * b)
    out[big] = np.where(zb >= 1.0, -1.0 / b, val)
    return out


def _pv_half_line(x, h, upper_power=2, block=512):
    """``P int_0^inf h(x') / (x'^2 - w^2) dx'`` at every grid point ``w = x_i``.

    Uses ``P int_0^inf dx'/(x'^2 - w^2) = 0`` to subtract ``h(w)`` so the
    integrand is regular (its value at ``x' = w`` is ``h'(w) / 2w``). Beyond
    the grid, ``h`` is continued as a constant below ``x[0]`` and as
    ``x**-upper_power`` (``upper_power`` 0 or 2) above ``x[-1]``.

    Returns:
        (total, tails): the integral and the part contributed by the
        extrapolated tails.
    """
    n = x.size
    dh = make_interp_spline(x, h, k=5)(x, 1)
    a, b = x[0], x[-1]
    grid_part = np.empty(n)
    for start in range(0, n, block):
        stop = min(start + block, n)
        wk = x[start:stop, None]
        num = h[None, :] - h[start:stop, None]
        den = (x[None, :] - wk) * (x[None, :] + wk)
        with np.errstate(divide="ignore", invalid="ignore"):
            g = num / den
        rows = np.arange(stop - start)
        g[rows, rows + start] = dh[start:stop] / (2.0 * x[start:stop])
        grid_part[start:stop] = simpson(g, x=x, axis=1)
    # lower tail: constant h(a) on (0, a)
    y = a / x
    with np.errstate(divide="ignore"):
        lower = -(h[0] - h) * np.where(y >= 1.0, 0.0, np.arctanh(np.minimum(y, 1.0)) / x)
    # upper tail: h(b) (b/x)^p on (b, inf)
    z = x / b
    with np.errstate(divide="ignore"):
        t0 = np.where(z >= 1.0, 0.0, np.arctanh(np.minimum(z, 1.0)) / x)
    upper = (h[-1] - h) * t0
    if upper_power == 2:
        upper = upper + h[-1] * _upper_tail_kernel(z, b)
    tails = lower + upper
    return grid_part + tails, tails


def _kk_arrays(x, values, direction, asymptote):
    if direction == "real_from_imag":
        # Im Theta ~ 1/omega far above every band, so omega Im Theta levels off
        total, tails = _pv_half_line(x, x * values.imag, upper_power=0)
        return asymptote + (2.0 / math.pi) * total, (2.0 / math.pi) * tails
    if direction == "imag_from_real":
        total, tails = _pv_half_line(x, values.real - asymptote, upper_power=2)
        return -(2.0 * x / math.pi) * total, -(2.0 * x / math.pi) * tails
    raise ValidationError(f"direction must be 'real_from_imag' or 'imag_from_real', got {direction!r}")


def kramers_kronig(grid: SpectrumGrid, direction: str = "real_from_imag", asymptote: float = 0.0,
                   window: float = 0.02, units: Units = CGS) -> SpectrumGrid:
    """Reconstruct one quadrature of ``[Theta(omega)]`` from the other.

    The output grid keeps the supplied quadrature and replaces the other
    with the transform. ``asymptote`` is ``Theta_inf``. The grid must extend
    well beyond every band; ``meta["tail_fraction"]`` reports the rms share
    of the result that came from the extrapolated tails.

    Raises:
        ResolutionError: fewer than four samples lie within ``+/- window``
            (relative) of some output frequency.
    """
    if direction not in ("real_from_imag", "imag_from_real"):
        raise ValidationError(f"direction must be 'real_from_imag' or 'imag_from_real', got {direction!r}")
    g = grid.to_omega(units)
    x = g.abscissa
    if x[0] <= 0:
        raise ValidationError("omega grid must be strictly positive")
    _check_resolution(x, window)
    result, tails = _kk_arrays(x, g.values, direction, asymptote)
    if direction == "real_from_imag":
        values = result + 1j * g.values.imag
    else:
        values = g.values.real + 1j * result
    scale = _rms(result)
    meta = {"direction": direction, "asymptote": asymptote,
            "tail_fraction": _rms(tails) / scale if scale else 0.0}
    return SpectrumGrid(x, values, "omega", meta)


def _rms(a):
    return float(np.sqrt(np.mean(np.abs(a) ** 2)))


def rms_relative_error(estimate, reference) -> float:
    """``rms(estimate - reference) / rms(reference)``; ``inf`` for a zero reference with nonzero estimate."""
    ref = _rms(reference)
    if ref == 0:
        return 0.0 if _rms(estimate) == 0 else math.inf
    return _rms(np.asarray(estimate) - np.asarray(reference)) / ref


@dataclass(frozen=True)
class KKReport:
    """Outcome of a Kramers-Kronig consistency check."""

    residual: float
    tail_fraction: float
    discretization_estimate: float
    n_points: int

    @property
    def truncation_estimate(self) -> float:
        return self.tail_fraction + self.discretization_estimate


def kk_check(grid: SpectrumGrid, asymptote: float = 0.0, window: float = 0.02, units: Units = CGS) -> KKReport:
    """Compare ``Im Theta`` with the transform of ``Re Theta``.

    The discretization estimate is the rms change of the transform when
    every other sample is dropped, which for this second-order rule is about
    three times the error on the full grid.
    """
    g = grid.to_omega(units)
    kk = kramers_kronig(g, "imag_from_real", asymptote, window)
    residual = rms_relative_error(kk.values.imag, g.values.imag)
    coarse_x = g.abscissa[::2]
    if coarse_x.size >= 8:
        coarse, _ = _kk_arrays(coarse_x, g.values[::2], "imag_from_real", asymptote)
        disc = rms_relative_error(coarse, kk.values.imag[::2])
    else:
        disc = math.inf
    return KKReport(residual, kk.meta["tail_fraction"], disc, int(g.abscissa.size))


def kk_consistency_residual(grid: SpectrumGrid, asymptote: float = 0.0, window: float = 0.02,
                            units: Units = CGS) -> float:
    """rms relative mismatch between ``Im Theta`` and the transform of ``Re Theta``."""
    return kk_check(grid, asymptote, window, units).residual


def log_omega_grid(omega_center, decades=6.0, points=4096):
    """Log-spaced frequencies spanning ``decades`` centred (in log) on ``omega_center``."""
    half = decades / 2.0
    return omega_center * np.logspace(-half, half, points)
