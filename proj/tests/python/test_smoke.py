import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import semico

SYSTEMS = Path(os.environ.get("SEMICO_SYSTEMS_DIR",
                              Path(__file__).resolve().parents[2] / "systems"))

BRIDGE = [[1, 4], [2, 5], [1, 3, 5], [2, 3, 4]]


def test_bridge_form_and_diagonal():
    paths = semico.SetFamily(5, BRIDGE)
    form = semico.simple_form_from_paths(paths)
    assert len(form.terms) == 10
    assert form.terms[(1, 2, 3, 4, 5)] == 2
    diagonal = semico.diagonal_coefficients(form)
    assert diagonal.coefficients == [0, 2, 2, -5, 2]
    assert str(diagonal) == "2x^2 + 2x^3 - 5x^4 + 2x^5"


def test_cuts_and_table_round_trip():
    paths = semico.SetFamily(5, BRIDGE)
    table = semico.table_from_paths(paths)
    assert table.bits == "00000000010101110011011101110111"
    assert table([1, 4]) and not table([1, 2])
    cuts = semico.minimal_cut_sets(table)
    assert cuts.sets == [[1, 2], [4, 5], [1, 3, 5], [2, 3, 4]]
    assert semico.table_from_cuts(cuts) == table
    assert semico.minimal_path_sets(table) == paths


def test_signature_and_counts():
    phi1 = semico.table_from_paths(semico.SetFamily(4, [[1, 2], [3, 4]]))
    s = semico.signature_boland(phi1)
    assert s.values == [0, Fraction(2, 3), Fraction(1, 3), 0]
    assert str(s) == "(0, 2/3, 1/3, 0)"
    assert semico.small_counts_from_signature(s) == {
        "alpha1": 0, "alpha2": 2, "beta1": 0, "beta2": 4}


def test_reliability():
    form = semico.simple_form_from_paths(semico.SetFamily(5, BRIDGE))
    assert semico.reliability_exact(form, ["1/2"] * 5) == Fraction(1, 2)
    assert semico.reliability(form, [0.5] * 5) == pytest.approx(0.5)
    assert semico.inclusion_exclusion_exact(
        semico.SetFamily(5, BRIDGE), [Fraction(9, 10)] * 5) == \
        semico.reliability_exact(form, ["0.9"] * 5)


def test_errors():
    with pytest.raises(semico.InputError):
        semico.TruthTable(2, "011")
    with pytest.raises(semico.InputError):
        semico.minimal_path_sets(semico.TruthTable(2, "0110"))
    with pytest.raises(semico.CapacityError):
        semico.TruthTable(30, "0")
    assert issubclass(semico.InputError, ValueError)


def test_run_command_on_bundled_documents():
    document = (SYSTEMS / "bridge.json").read_text()
    code, out = semico.run_command(document, "analyze")
    assert code == 0
    assert "2x^2 + 2x^3 - 5x^4 + 2x^5" in out
    code, out = semico.run_command(document, "signature", "json")
    assert json.loads(out)["signature"] == ["0", "1/5", "3/5", "1/5", "0"]
    for path in sorted(SYSTEMS.glob("*.json")):
        code, _ = semico.run_command(path.read_text(), "verify")
        assert code == 0, path.name


def test_verify_system():
    checks = semico.verify_system(semico.TruthTable(3, "00010111"))
    assert checks and all(passed for _, passed in checks)
