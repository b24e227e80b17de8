"""Model files (YAML) and plot-ready spectrum tables.

Model file layout::

    name: toy dimer
    units: cgs              # or natural
    energy_unit: eV         # erg (default) or eV; cgs only
    number_density: 1.0e18  # optional default for scans
    states:
      - {energy: 0.0, gamma: 0.0}
      - {energy: 4.1, gamma: 2.0e13}
    transitions:
      - m: 0
        k: 1
        p:  [[0.0, 1.0e-18], [0.0, 0.0], [0.0, 0.0]]   # <m|p|k>, [re, im] per axis
        mu: [[1.0e-20, 0.0], [0.0, 0.0], [0.0, 0.0]]   # <k|mu|m>

Each transition fills the listed element and its Hermitian partner. Pairs
that are not listed are zero. Decay rates are in rad/s.

Spectrum files are whitespace-delimited text with ``#`` header lines of the
form ``# key: value``. The ``columns`` and ``units`` keys name the columns;
the last column is always ``flag`` (``ok`` or the reason a row has no
value).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
import yaml

from .constants import CGS, ERG_PER_EV, NATURAL, Units, get_units
from .errors import ValidationError
from .quantum.model import MoleculeModel

ENERGY_UNITS = {"erg": 1.0, "ev": ERG_PER_EV}

SPECTRUM_COLUMNS = ("lambda_nm", "omega_rad_s", "alpha_rad_per_cm", "psi_rad_per_cm", "alpha_deg_per_dm", "flag")
SPECTRUM_UNITS = ("nm", "rad/s", "rad/cm", "rad/cm", "deg/dm", "-")

FLAG_OK = "ok"


@dataclass
class ModelFile:
    """A parsed model file: the model plus scan-level settings."""

    model: MoleculeModel
    units: Units = CGS
    number_density: float | None = None


def _complex_vector(raw, where):
    try:
        arr = np.asarray(raw, dtype=float)
    except (TypeError, ValueError):
        raise ValidationError(f"{where}: expected three [re, im] pairs") from None
    if arr.shape != (3, 2):
        raise ValidationError(f"{where}: expected three [re, im] pairs, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{where}: non-finite component")
    return arr[:, 0] + 1j * arr[:, 1]


def model_from_dict(doc: dict) -> ModelFile:
    """Build and validate a model from a parsed model document."""
    if not isinstance(doc, dict):
        raise ValidationError("model file must be a mapping")
    try:
        units = get_units(doc.get("units", "cgs"))
    except (KeyError, ValueError) as exc:
        raise ValidationError(f"unknown units {doc.get('units')!r}") from exc
    unit_name = str(doc.get("energy_unit", "erg")).lower()
    if unit_name not in ENERGY_UNITS:
        raise ValidationError(f"energy_unit must be one of {sorted(ENERGY_UNITS)}, got {unit_name!r}")
    scale = ENERGY_UNITS[unit_name] if units is not NATURAL else 1.0
    states = doc.get("states")
    if not isinstance(states, list) or not states:
        raise ValidationError("'states' must be a non-empty list")
    energies, gamma = [], []
    for i, st in enumerate(states):
        if not isinstance(st, dict) or "energy" not in st:
            raise ValidationError(f"state {i}: needs an 'energy' entry")
        energies.append(float(st["energy"]) * scale)
        gamma.append(float(st.get("gamma", 0.0)))
    n = len(energies)
    p = np.zeros((n, n, 3), complex)
    mu = np.zeros((n, n, 3), complex)
    seen = set()
    for t, tr in enumerate(doc.get("transitions") or []):
        if not isinstance(tr, dict):
            raise ValidationError(f"transition {t}: must be a mapping")
        try:
            m, k = int(tr["m"]), int(tr["k"])
        except (KeyError, TypeError, ValueError):
            raise ValidationError(f"transition {t}: needs integer 'm' and 'k'") from None
        if not (0 <= m < n and 0 <= k < n):
            raise ValidationError(f"transition {t} (m={m}, k={k}): state index out of range for {n} states")
        pair = frozenset((m, k))
        if pair in seen:
            raise ValidationError(f"transition {t} (m={m}, k={k}): pair listed twice")
        seen.add(pair)
        p_mk = _complex_vector(tr.get("p", [[0, 0]] * 3), f"transition {t} (m={m}, k={k}) p")
        mu_km = _complex_vector(tr.get("mu", [[0, 0]] * 3), f"transition {t} (m={m}, k={k}) mu")
        if m == k and (np.any(p_mk.imag) or np.any(mu_km.imag)):
            raise ValidationError(f"transition {t} (m={m}, k={k}): diagonal elements must be real")
        p[m, k], p[k, m] = p_mk, p_mk.conj()
        mu[k, m], mu[m, k] = mu_km, mu_km.conj()
    density = doc.get("number_density")
    if density is not None:
        density = float(density)
        if not density > 0:
            raise ValidationError(f"number_density must be > 0, got {density}")
    model = MoleculeModel(energies, p, mu, gamma, str(doc.get("name", "")))
    return ModelFile(model, units, density)


def load_model(path) -> ModelFile:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = yaml.safe_load(fh)
        except yaml.YAMLError as exc:
            raise ValidationError(f"{path}: not valid YAML ({exc})") from exc
    return model_from_dict(doc)


def _pair(z):
    return [float(z.real), float(z.imag)]


def model_to_dict(model: MoleculeModel, units: Units = CGS, number_density=None) -> dict:
    """Inverse of :func:`model_from_dict`; energies are written in erg."""
    doc = {"name": model.name, "units": units.name, "energy_unit": "erg"}
    if number_density is not None:
        doc["number_density"] = float(number_density)
    doc["states"] = [{"energy": float(e), "gamma": float(g)} for e, g in zip(model.energies, model.gamma)]
    transitions = []
    for m in range(model.n_states):
        for k in range(m, model.n_states):
            p_mk, mu_km = model.p[m, k], model.mu[k, m]
            if np.any(p_mk) or np.any(mu_km):
                transitions.append({"m": m, "k": k, "p": [_pair(z) for z in p_mk], "mu": [_pair(z) for z in mu_km]})
    doc["transitions"] = transitions
    return doc


def dump_model(path, model: MoleculeModel, units: Units = CGS, number_density=None):
    with open(path, "w", encoding="utf-8") as fh:
        yaml.safe_dump(model_to_dict(model, units, number_density), fh, sort_keys=False)


@dataclass
class SpectrumTable:
    """Columns of a spectrum file plus its header metadata."""

    columns: dict
    meta: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.columns["flag"])

    def ok(self):
        return np.asarray(self.columns["flag"]) == FLAG_OK


def _fmt(v):
    if isinstance(v, str):
        return v
    return format(float(v), ".17g")


def write_table(path_or_file, names, units, rows, meta: dict):
    """Write rows (sequences matching ``names``) with a commented header."""
    lines = [f"# {key}: {value}" for key, value in meta.items()]
    lines.append("# columns: " + " ".join(names))
    lines.append("# units: " + " ".join(units))
    for row in rows:
        lines.append(" ".join(_fmt(v) for v in row))
    text = "\n".join(lines) + "\n"
    if hasattr(path_or_file, "write"):
        path_or_file.write(text)
    else:
        with open(path_or_file, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def read_table(path) -> SpectrumTable:
    """Parse a file written by :func:`write_table`. Non-flag columns become float arrays."""
    meta, names, rows = {}, None, []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, sep, value = line[1:].partition(":")
                if sep:
                    meta[key.strip()] = value.strip()
                continue
            if names is None:
                if "columns" not in meta:
                    raise ValidationError(f"{path}: data before the '# columns:' header")
                names = meta["columns"].split()
            parts = line.split()
            if len(parts) != len(names):
                raise ValidationError(f"{path}:{lineno}: expected {len(names)} fields, got {len(parts)}")
            rows.append(parts)
    if names is None:
        if "columns" not in meta:
            raise ValidationError(f"{path}: no '# columns:' header")
        names = meta["columns"].split()
    cols = {}
    for j, name in enumerate(names):
        raw = [r[j] for r in rows]
        if name == "flag":
            cols[name] = raw
        else:
            try:
                cols[name] = np.array(raw, dtype=float)
            except ValueError:
                raise ValidationError(f"{path}: non-numeric entry in column {name!r}") from None
    return SpectrumTable(cols, meta)


def spectrum_row(lambda_nm, omega, theta, flag=FLAG_OK):
    """One spectrum row; rows without a value carry ``nan`` and a non-``ok`` flag."""
    if flag != FLAG_OK:
        nan = math.nan
        return (lambda_nm, omega, nan, nan, nan, flag)
    alpha = float(np.real(theta))
    return (lambda_nm, omega, alpha, float(np.imag(theta)), alpha * (180.0 / math.pi) * 10.0, flag)


def write_spectrum(path_or_file, rows, meta: dict):
    write_table(path_or_file, SPECTRUM_COLUMNS, SPECTRUM_UNITS, rows, meta)


def read_spectrum(path) -> SpectrumTable:
    table = read_table(path)
    missing = [c for c in ("omega_rad_s", "alpha_rad_per_cm", "psi_rad_per_cm", "flag") if c not in table.columns]
    if missing:
        raise ValidationError(f"{path}: missing spectrum columns {missing}")
    return table
