import json
import os
import subprocess
import sys

import pytest

from coalgkit import jsonio
from coalgkit.coalgebra import Coalgebra, CoalgebraMorphism, diagonal_coalgebra, dual_coalgebra, polynomial_quotient_algebra
from coalgkit.dayclosure import SubPresheaf
from coalgkit.errors import ParseError
from coalgkit.fields import GF, QQ
from coalgkit.galois import coset_gset, frobenius_galois_datum
from coalgkit.linalg import Matrix
from coalgkit.polys import Polynomial

F2 = GF(2)
DATA = os.path.join(os.path.dirname(__file__), "..", "demos", "data")


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "coalgkit.cli", *args],
        capture_output=True,
        text=True,
    )
    return proc


def dual_numbers():
    delta = Matrix.zeros(F2, 4, 2)
    delta.data[0][0] = 1
    delta.data[1][1] = 1
    delta.data[2][1] = 1
    return Coalgebra(F2, 2, delta, Matrix(F2, 1, 2, [[1, 0]]))


def test_coalgebra_round_trip():
    for C in (dual_numbers(), diagonal_coalgebra(3, GF(5)),
              dual_coalgebra(polynomial_quotient_algebra(QQ, Polynomial.from_ints(QQ, [-2, 0, 1])))):
        doc = jsonio.coalgebra_to_json(C)
        text = jsonio.canonical_json(doc)
        assert jsonio.coalgebra_from_json(json.loads(text)) == C


def test_morphism_round_trip():
    D = dual_numbers()
    phi = CoalgebraMorphism(D, D, Matrix.identity(F2, 2))
    doc = jsonio.morphism_to_json(phi)
    back = jsonio.morphism_from_json(json.loads(jsonio.canonical_json(doc)))
    assert back.matrix == phi.matrix and back.source == D

    named = jsonio.morphism_to_json(phi, source_name="C", target_name="C")
    resolved = jsonio.morphism_from_json(named, resolve={"C": D}.__getitem__)
    assert resolved.matrix == phi.matrix
    with pytest.raises(ParseError):
        jsonio.morphism_from_json(named)


def test_galois_and_gset_round_trip():
    D = frobenius_galois_datum(2, [1, 1, 1])
    doc = json.loads(jsonio.canonical_json(jsonio.galois_to_json(D)))
    D2 = jsonio.galois_from_json(doc)
    assert D2.table == D.table and D2.L.mult == D.L.mult
    X = coset_gset(D, (0,))
    X2 = jsonio.gset_from_json(json.loads(jsonio.canonical_json(jsonio.gset_to_json(X))), D)
    assert X2.action == X.action


def test_day_documents_round_trip():
    from coalgkit import day

    Z2 = day.cyclic_group_category(F2, 2)
    doc = json.loads(jsonio.canonical_json(jsonio.day_category_to_json(Z2)))
    Z2b = jsonio.day_category_from_json(doc)
    assert Z2b.validate() == [] and Z2b.tensor_obj == Z2.tensor_obj

    F = day.representable(Z2, 1)
    fdoc = json.loads(jsonio.canonical_json(jsonio.day_presheaf_to_json(F)))
    Fb = jsonio.day_presheaf_from_json(fdoc)
    assert Fb.dims == F.dims and Fb.validate() == []

    UC = day.unit_day_coalgebra(Z2)
    cdoc = json.loads(jsonio.canonical_json(jsonio.day_coalgebra_to_json(UC)))
    UCb = jsonio.day_coalgebra_from_json(cdoc)
    assert UCb.validate() == []

    sub = SubPresheaf.from_vectors(F, {1: [[1]]})
    sdoc = json.loads(jsonio.canonical_json(jsonio.day_subpresheaf_to_json(sub)))
    sub2 = jsonio.day_subpresheaf_from_json(sdoc, Fb)
    assert sub2.dims() == sub.dims()


def test_report_round_trip_canonical():
    report = {"b": 1, "a": [1, 2], "nested": {"y": True, "x": None}}
    text = jsonio.canonical_json(report)
    assert jsonio.canonical_json(json.loads(text)) == text


def test_cli_validate_ok():
    proc = run_cli("validate", os.path.join(DATA, "dual_numbers.json"))
    assert proc.returncode == 0
    assert "ok: True" in proc.stdout


def test_cli_grouplikes():
    proc = run_cli("--format", "json", "grouplikes", os.path.join(DATA, "F4dual.json"))
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["count"] == 0 and payload["schema"] == "coalgkit/1"


def test_cli_parse_error_exit_2():
    proc = run_cli("validate", os.path.join(DATA, "garbage.json"))
    assert proc.returncode == 2
    assert "parse error" in proc.stderr


def test_cli_validation_error_exit_3():
    import tempfile

    bad = jsonio.coalgebra_to_json(dual_numbers())
    bad["epsilon"] = ["0", "0"]  # breaks counitality
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
        fh.write(jsonio.canonical_json(bad))
        path = fh.name
    try:
        proc = run_cli("validate", path)
        assert proc.returncode == 3
    finally:
        os.unlink(path)


def test_cli_computation_error_exit_4():
    import tempfile

    # rational factorization above the degree cap propagates as exit 4
    C = dual_coalgebra(
        polynomial_quotient_algebra(QQ, Polynomial.from_ints(QQ, [1] + [0] * 17 + [1]))
    )
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
        fh.write(jsonio.canonical_json(jsonio.coalgebra_to_json(C)))
        path = fh.name
    try:
        proc = run_cli("--degree-cap", "16", "etale", path)
        assert proc.returncode == 4
    finally:
        os.unlink(path)


def test_cli_subgen_and_workspace():
    proc = run_cli(
        "--load", f"C={os.path.join(DATA, 'dual_numbers.json')}",
        "subgen", "C", os.path.join(DATA, "span_t.json"),
    )
    assert proc.returncode == 0
    assert "generated_dim: 2" in proc.stdout


def test_cli_suite_deterministic():
    args = ("--format", "json", "--seed", "5", "suite", "--suite", "hensel", "--suite", "ftc")
    first = run_cli(*args)
    second = run_cli(*args)
    assert first.returncode == 0 and second.returncode == 0
    assert first.stdout == second.stdout
    payload = json.loads(first.stdout)
    assert payload["ok"] is True and payload["schema"] == "coalgkit/1"


def test_cli_env_seed():
    env = dict(os.environ, COALG_KERNEL_SEED="9")
    proc = subprocess.run(
        [sys.executable, "-m", "coalgkit.cli", "--format", "json", "suite", "--suite", "hensel"],
        capture_output=True, text=True, env=env,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["seed"] == 9


def test_cli_day_commands():
    cat = os.path.join(DATA, "day_cat_Z2.json")
    F = os.path.join(DATA, "day_F.json")
    G = os.path.join(DATA, "day_G.json")
    proc = run_cli("--format", "json", "day-convolve", cat, F, G)
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload["verification"]["presheaf-valid"] is True

    proc = run_cli("--format", "json", "day-hom", cat, F, G)
    assert proc.returncode == 0

    proc = run_cli(
        "--format", "json", "day-subgen",
        os.path.join(DATA, "day_graded_coalg.json"),
        os.path.join(DATA, "day_line_t.json"),
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["dims"] == [1, 1]


def test_cli_galois_commands():
    galois = os.path.join(DATA, "galois_F4.json")
    gset = os.path.join(DATA, "gset_regular.json")
    proc = run_cli("--format", "json", "galois-functor", galois, gset)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["coalgebra"]["dim"] == 2

    proc = run_cli("--format", "json", "galois-adjunction", galois, gset)
    assert proc.returncode == 0 and json.loads(proc.stdout)["ok"] is True

    proc = run_cli(
        "--format", "json", "galois-adjunction", galois, os.path.join(DATA, "F4dual.json")
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["ok"] is True
