"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 numerical-regime error, 3 failed
verification or KK check.
"""

from __future__ import annotations

import argparse
import contextlib
import math
import sys

import numpy as np

from . import __version__
from .classical import LorentzGas, MagnetoOpticQuery, faraday_indices, faraday_splitting
from .constants import CGS, NM_PER_CM, get_units
from .dispersion import SpectrumGrid, kk_check
from .errors import RegimeError, ResonanceError, ValidationError
from .io import FLAG_OK, load_model, read_spectrum, spectrum_row, write_spectrum, write_table
from .polarization import (
    ChiralSlab,
    JonesField,
    ellipse_axes,
    linear_field,
    polarization_ellipse,
    propagate,
)
from .quantum.model import mirror_model
from .quantum.response import EnsembleSpec, ensemble_beta, mixture_rotatory_power
from .verify import run_checks, truncated_fixture

EXIT_OK, EXIT_VALIDATION, EXIT_REGIME, EXIT_CHECK = 0, 1, 2, 3


def _positive(text):
    value = float(text)
    if not (value > 0 and math.isfinite(value)):
        raise argparse.ArgumentTypeError(f"must be finite and > 0, got {text}")
    return value


def _complex(text):
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def scan_wavelengths(lambda_min, lambda_max, points, log=False):
    """Wavelength grid (in the units given), ascending."""
    if not lambda_min < lambda_max:
        raise ValidationError(f"--lambda-min ({lambda_min}) must be below --lambda-max ({lambda_max})")
    if points < 2:
        raise ValidationError(f"--points must be >= 2, got {points}")
    if log:
        return np.geomspace(lambda_min, lambda_max, points)
    return np.linspace(lambda_min, lambda_max, points)


def _add_scan(p, default_min=150.0, default_max=800.0):
    p.add_argument("--lambda-min", type=_positive, default=default_min, help="shortest wavelength (nm)")
    p.add_argument("--lambda-max", type=_positive, default=default_max, help="longest wavelength (nm)")
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--log", action="store_true", help="log-spaced wavelengths")
    p.add_argument("--output", "-o", default="-", help="output file ('-' for stdout)")


def _open_output(path):
    if path == "-":
        return contextlib.nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8", newline="\n")


def _components(args, units):
    """``[(model, N)]`` from the model files, densities and --racemic."""
    loaded = [load_model(path) for path in args.model]
    for lf in loaded:
        if lf.units.name != units.name:
            raise ValidationError(f"model {lf.model.name!r} is in {lf.units.name} units but --units is {units.name}")
    densities = args.density or []
    if densities and len(densities) not in (1, len(loaded)):
        raise ValidationError(f"{len(densities)} --density values for {len(loaded)} models")
    out = []
    for i, lf in enumerate(loaded):
        n = densities[i if len(densities) > 1 else 0] if densities else lf.number_density
        if n is None:
            raise ValidationError(f"no number density for model {i} ({lf.model.name!r}); pass --density")
        if args.racemic:
            out.append((lf.model, n / 2.0))
            out.append((mirror_model(lf.model), n / 2.0))
        else:
            out.append((lf.model, n))
    return out


def _ensemble(model, n, temperature):
    if temperature is not None:
        return EnsembleSpec(n, temperature=temperature)
    weights = np.zeros(model.n_states)
    weights[int(np.argmin(model.energies))] = 1.0
    return EnsembleSpec(n, weights=weights)


def compute_spectrum(components, wavelengths_cm, units, temperature=None):
    """Rows of ``(lambda, omega, Theta, flag)``; failures become flagged rows."""
    rows = []
    for lam in wavelengths_cm:
        omega = 2.0 * math.pi * units.c / lam
        try:
            parts = [(n, ensemble_beta(model, _ensemble(model, n, temperature), omega, units))
                     for model, n in components]
            rows.append((lam, omega, mixture_rotatory_power(parts, lam), FLAG_OK))
        except ResonanceError:
            rows.append((lam, omega, math.nan, "resonance"))
        except RegimeError:
            rows.append((lam, omega, math.nan, "regime"))
    return rows


def cmd_spectrum(args, focus):
    units = get_units(args.units)
    components = _components(args, units)
    # natural units take the wavelength flags as model length units
    to_len = 1.0 / NM_PER_CM if units is CGS else 1.0
    lam = scan_wavelengths(args.lambda_min, args.lambda_max, args.points, args.log)
    rows = compute_spectrum(components, lam * to_len, units, args.temperature)
    meta = {
        "chiroptics": "complex rotatory power spectrum",
        "focus": focus,
        "units_mode": units.name,
        "models": " ".join(args.model),
        "racemic": "yes" if args.racemic else "no",
        "temperature_K": "ground state" if args.temperature is None else format(args.temperature, ".17g"),
    }
    out = [spectrum_row(l_user, omega, theta, flag) for l_user, (_, omega, theta, flag) in zip(lam, rows)]
    with _open_output(args.output) as fh:
        write_spectrum(fh, out, meta)
    return EXIT_OK


FARADAY_COLUMNS = ("lambda_nm", "omega_rad_s", "n_l", "n_r", "delta_n", "alpha_rad_per_cm",
                   "alpha_deg_per_dm", "sign", "flag")
FARADAY_UNITS = ("nm", "rad/s", "-", "-", "-", "rad/cm", "deg/dm", "-", "-")


def cmd_faraday(args):
    gas_kwargs = {"number_density": args.gas_density, "omega0": args.omega0}
    if args.charge is not None:
        gas_kwargs["charge"] = args.charge
    if args.mass is not None:
        gas_kwargs["mass"] = args.mass
    gas = LorentzGas(**gas_kwargs)
    lam_nm = scan_wavelengths(args.lambda_min, args.lambda_max, args.points, args.log)
    rows = []
    nan = math.nan
    for l_nm in lam_nm:
        lam = l_nm / NM_PER_CM
        omega = 2.0 * math.pi * CGS.c / lam
        try:
            q = MagnetoOpticQuery(omega, args.b_field)
            n_l, n_r = faraday_indices(gas, q, CGS.c)
            split = faraday_splitting(gas, q, CGS.c)
        except ResonanceError:
            rows.append((l_nm, omega, nan, nan, nan, nan, nan, nan, "resonance"))
            continue
        except RegimeError:
            rows.append((l_nm, omega, nan, nan, nan, nan, nan, nan, "evanescent"))
            continue
        alpha = math.pi / lam * split
        rows.append((l_nm, omega, n_l, n_r, split, alpha, alpha * (180.0 / math.pi) * 10.0,
                     float(np.sign(alpha)), FLAG_OK))
    meta = {
        "chiroptics": "Faraday rotation",
        "number_density_cm3": format(args.gas_density, ".17g"),
        "omega0_rad_s": format(args.omega0, ".17g"),
        "b_field_G": format(args.b_field, ".17g"),
    }
    with _open_output(args.output) as fh:
        write_table(fh, FARADAY_COLUMNS, FARADAY_UNITS, rows, meta)
    return EXIT_OK


def cmd_propagate(args):
    if args.field is not None:
        ex, ey = args.field
        field = JonesField(ex, ey)
    else:
        field = linear_field(math.radians(args.azimuth), args.amplitude)
    slab = ChiralSlab(args.n_l, args.n_r, args.length, args.wavelength / NM_PER_CM)
    out = propagate(field, slab)
    azimuth, minor, major = polarization_ellipse(out)
    in_azimuth, _, _ = polarization_ellipse(field)
    delta = math.remainder(azimuth - in_azimuth, math.pi)
    psi = math.atan2(minor, major) if major > 0 else 0.0
    lines = [
        f"e_x_out = {out.e_x.real:.17g} {out.e_x.imag:+.17g}j",
        f"e_y_out = {out.e_y.real:.17g} {out.e_y.imag:+.17g}j",
        f"delta_rad = {delta:.17g}",
        f"psi_rad = {psi:.17g}",
        f"major_axis = {major:.17g}",
        f"minor_axis = {minor:.17g}",
    ]
    try:
        closed = ellipse_axes(field, slab)
    except ValidationError:
        lines.append("closed_form = n/a (input not linearly polarized)")
    else:
        lines += [
            f"closed_form_delta_rad = {closed.delta:.17g}",
            f"closed_form_psi_rad = {closed.psi:.17g}",
            f"closed_form_major_axis = {closed.major_axis:.17g}",
            f"closed_form_minor_axis = {closed.minor_axis:.17g}",
        ]
    print("\n".join(lines))
    return EXIT_OK


def _spectrum_grid(path):
    table = read_spectrum(path)
    ok = table.ok()
    if not np.all(ok):
        bad = int(np.flatnonzero(~ok)[0])
        raise ValidationError(f"{path}: row {bad} is flagged {table.columns['flag'][bad]!r}; KK needs a gap-free spectrum")
    omega = table.columns["omega_rad_s"]
    theta = table.columns["alpha_rad_per_cm"] + 1j * table.columns["psi_rad_per_cm"]
    order = np.argsort(omega)
    return SpectrumGrid(omega[order], theta[order], "omega")


def cmd_kk_check(args):
    grid = _spectrum_grid(args.spectrum)
    if args.asymptote == "auto":
        # far above every band the rotation has settled on its limit
        asymptote = float(grid.values.real[-1])
    else:
        try:
            asymptote = float(args.asymptote)
        except ValueError:
            raise ValidationError(f"--asymptote must be a number or 'auto', got {args.asymptote!r}") from None
    report = kk_check(grid, asymptote, args.window)
    passed = report.residual < args.threshold
    print(f"points = {report.n_points}")
    print(f"asymptote_rad_per_cm = {asymptote:.17g}")
    print(f"rms_residual = {report.residual:.6e}")
    print(f"truncation_estimate = {report.truncation_estimate:.6e}")
    print(f"  tail_fraction = {report.tail_fraction:.6e}")
    print(f"  discretization_estimate = {report.discretization_estimate:.6e}")
    print(f"threshold = {args.threshold:.6e}")
    print("PASS" if passed else "FAIL (spectrum is not Kramers-Kronig consistent at this threshold)")
    return EXIT_OK if passed else EXIT_CHECK


def cmd_verify(args):
    units = get_units(args.units)
    if args.model:
        model = load_model(args.model).model
    elif args.fixture == "truncated":
        model = truncated_fixture()
    else:
        model = None
    results = run_checks(model, units)
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_CHECK


class _Parser(argparse.ArgumentParser):
    # malformed arguments are input errors, not argparse's default status 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_VALIDATION, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chiroptics", description="Optical activity and circular dichroism tools.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, focus in (("ord-spectrum", "alpha"), ("cd-spectrum", "psi")):
        p = sub.add_parser(name, help=f"rotatory power spectrum ({focus} focus)")
        p.add_argument("model", nargs="+", help="model file(s); several files form a mixture")
        _add_scan(p)
        p.add_argument("--units", choices=("cgs", "natural"), default="cgs")
        p.add_argument("--temperature", type=_positive, default=None, help="K; default: ground state only")
        p.add_argument("--density", type=_positive, action="append",
                       help="number density per model (cm^-3); repeat for mixtures")
        p.add_argument("--racemic", action="store_true", help="add the mirror image of each model at equal density")
        p.set_defaults(func=lambda a, f=focus: cmd_spectrum(a, f))

    p = sub.add_parser("faraday", help="magnetically induced rotation of a Lorentz gas")
    _add_scan(p)
    p.add_argument("--gas-density", type=_positive, required=True, help="atoms per cm^3")
    p.add_argument("--omega0", type=_positive, required=True, help="binding frequency (rad/s)")
    p.add_argument("--b-field", type=float, default=0.0, help="field along propagation (G, signed)")
    p.add_argument("--charge", type=_positive, default=None, help="esu; default electron")
    p.add_argument("--mass", type=_positive, default=None, help="g; default electron")
    p.set_defaults(func=cmd_faraday)

    p = sub.add_parser("propagate", help="send a polarized field through a chiral slab")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--field", type=_complex, nargs=2, metavar=("EX", "EY"), help="Jones components, e.g. 1 0.5j")
    group.add_argument("--azimuth", type=float, default=0.0, help="linear input azimuth (deg, clockwise)")
    p.add_argument("--amplitude", type=_positive, default=1.0)
    p.add_argument("--n-l", type=_complex, required=True, help="complex LCP index, e.g. 1.5+1e-7j")
    p.add_argument("--n-r", type=_complex, required=True, help="complex RCP index")
    p.add_argument("--length", type=float, required=True, help="path length (cm)")
    p.add_argument("--wavelength", type=_positive, required=True, help="vacuum wavelength (nm)")
    p.set_defaults(func=cmd_propagate)

    p = sub.add_parser("kk-check", help="Kramers-Kronig consistency of a spectrum file")
    p.add_argument("spectrum")
    p.add_argument("--threshold", type=float, default=1e-3)
    p.add_argument("--asymptote", default="auto",
                   help="short-wavelength limit of [alpha] (rad/cm), or 'auto' for the highest-frequency sample")
    p.add_argument("--window", type=_positive, default=0.02, help="relative resolution window")
    p.set_defaults(func=cmd_kk_check)

    p = sub.add_parser("verify", help="run the built-in invariant checks")
    p.add_argument("--model", default=None, help="check this model file instead of the built-in one")
    p.add_argument("--fixture", choices=("complete", "truncated"), default="complete")
    p.add_argument("--units", choices=("cgs", "natural"), default="natural")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except RegimeError as exc:
        print(f"numerical regime error: {exc}", file=sys.stderr)
        return EXIT_REGIME
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
