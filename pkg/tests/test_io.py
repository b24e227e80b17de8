import math
from pathlib import Path

import numpy as np
import pytest
import yaml

from chiroptics.constants import CGS, ERG_PER_EV
from chiroptics.errors import ValidationError
from chiroptics.io import (
    FLAG_OK,
    dump_model,
    load_model,
    model_from_dict,
    read_spectrum,
    spectrum_row,
    write_spectrum,
)
from chiroptics.quantum import rotational_strength
from chiroptics.quantum.builders import cgs_scaled, random_hermitian_model

DATA = Path(__file__).resolve().parents[1] / "demos" / "data"


def base_doc():
    return {
        "units": "cgs",
        "energy_unit": "eV",
        "states": [{"energy": 0.0}, {"energy": 2.0, "gamma": 1e13}, {"energy": 3.0}],
        "transitions": [
            {"m": 0, "k": 1, "p": [[0, 1e-18], [0, 0], [0, 0]], "mu": [[1e-20, 0], [0, 0], [0, 0]]},
        ],
    }


def test_toy_model_loads():
    mf = load_model(DATA / "toy_model.yaml")
    m = mf.model
    assert m.energies[1] == pytest.approx(5 * ERG_PER_EV, rel=1e-15)
    assert mf.number_density == 1e18
    assert rotational_strength(m, 1, 0) == pytest.approx(1e-18 * 9.274e-21, rel=1e-15)
    assert m.p[1, 0, 0] == np.conj(m.p[0, 1, 0])


def test_hermitian_completion():
    m = model_from_dict(base_doc()).model
    assert m.p[1, 0, 0] == -1e-18j
    assert m.mu[0, 1, 0] == 1e-20
    assert not np.any(m.p[2])


def test_round_trip(tmp_path):
    m = cgs_scaled(random_hermitian_model(4, 7, zero_permanent=False, linewidth=0.01))
    path = tmp_path / "m.yaml"
    dump_model(path, m, CGS, 2e18)
    back = load_model(path)
    assert back.number_density == 2e18
    for a in ("energies", "p", "mu", "gamma"):
        assert np.array_equal(getattr(back.model, a), getattr(m, a))


@pytest.mark.parametrize("mutate, message", [
    (lambda d: d["transitions"].append(dict(d["transitions"][0], m=1, k=0)), r"m=1, k=0.*twice"),
    (lambda d: d["transitions"].append({"m": 0, "k": 5}), r"m=0, k=5.*out of range"),
    (lambda d: d["transitions"].append({"m": 2, "k": 2, "p": [[0, 1], [0, 0], [0, 0]]}), r"m=2, k=2.*real"),
    (lambda d: d["transitions"].append({"m": 1, "k": 2, "p": [[0, 1], [0, 0]]}), r"m=1, k=2.*pairs"),
    (lambda d: d["states"].append({"gamma": 1.0}), r"state 3"),
    (lambda d: d.update(energy_unit="hartree"), r"energy_unit"),
    (lambda d: d.update(units="si"), r"units"),
    (lambda d: d["states"].__setitem__(1, {"energy": 2.0, "gamma": -1.0}), r"gamma"),
])
def test_validation_messages(mutate, message):
    doc = base_doc()
    mutate(doc)
    with pytest.raises(ValidationError, match=message):
        model_from_dict(doc)


def test_bad_yaml(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("states: [\n")
    with pytest.raises(ValidationError):
        load_model(path)


def test_spectrum_round_trip(tmp_path):
    rng = np.random.default_rng(0)
    rows = [spectrum_row(200 + i, 1e15 * (1 + i), complex(*rng.normal(size=2)) * 1e-3) for i in range(20)]
    rows.append(spectrum_row(300.0, 6e15, math.nan, "resonance"))
    path = tmp_path / "s.tsv"
    write_spectrum(path, rows, {"focus": "alpha"})
    table = read_spectrum(path)
    assert table.meta["focus"] == "alpha"
    assert table.columns["flag"][-1] == "resonance"
    assert math.isnan(table.columns["alpha_rad_per_cm"][-1])
    ok = table.ok()
    assert ok.sum() == 20
    for j, name in enumerate(("lambda_nm", "omega_rad_s", "alpha_rad_per_cm", "psi_rad_per_cm")):
        assert np.array_equal(table.columns[name][ok], [r[j] for r in rows[:20]])
    alpha = table.columns["alpha_rad_per_cm"][ok]
    assert np.allclose(table.columns["alpha_deg_per_dm"][ok], alpha * 1800 / math.pi, rtol=1e-12, atol=0)
    assert np.array_equal(table.columns["alpha_deg_per_dm"][ok], alpha * (180 / math.pi) * 10)


def test_spectrum_row_flag_last():
    row = spectrum_row(1.0, 2.0, 1 + 2j)
    assert row[-1] == FLAG_OK
    assert row[4] == 1.0 * (180 / math.pi) * 10


def test_read_rejects_malformed(tmp_path):
    path = tmp_path / "s.tsv"
    path.write_text("# columns: a b flag\n1 2\n")
    with pytest.raises(ValidationError):
        read_spectrum(path)


def test_model_file_is_yaml_mapping(tmp_path):
    path = tmp_path / "m.yaml"
    path.write_text(yaml.safe_dump([1, 2]))
    with pytest.raises(ValidationError):
        load_model(path)
