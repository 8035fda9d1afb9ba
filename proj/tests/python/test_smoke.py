import os

import pytest

import bialg


@pytest.fixture(scope="module")
def alg():
    return bialg.make_algebra(1, 3)


def test_algebra_shape(alg):
    assert alg.dim == 10
    assert alg.dim_v == 4
    assert (alg.p, alg.q) == (1, 3)
    assert "Om01" in alg.labels()


def test_wedge_antisymmetry(alg):
    e1, e2 = alg.e(1), alg.e(2)
    assert bialg.wedge(e1, e2) == -bialg.wedge(e2, e1)
    assert bialg.wedge(e1, e1).is_zero()


def test_kappa_bracket_classes(alg):
    for name, t in [("b_e0", "-1"), ("b_e1", "1"), ("b_e+", "0")]:
        verdict = bialg.gcybe(alg, alg.named(name))
        assert verdict["in_span"]
        assert verdict["t"] == [t]


def test_schouten_anchor(alg):
    b0 = 2 * alg.named("b_e2")
    assert bialg.schouten_bracket(b0, b0) == 4 * bialg.omega(alg)


def test_cohomology_dimensions(alg):
    dims = bialg.cohomology_dims(alg, "L2g", "g")
    assert dims == {"Z": 45, "B": 45, "H": 0, "invariants": 0}
    assert bialg.invariants_dim(alg, "L3g") == 1


def test_intertwiners_and_cocycle_solver(alg):
    assert bialg.intertwiner_dim(alg, "V", "h") == 0
    assert bialg.intertwiner_dim(alg, "h", "h") == 2
    c = bialg.wedge(alg.named("JX+"), alg.named("X+"))
    assert bialg.solve_b_cocycle_dim(alg, c) == 9


def test_symbolic_coefficients(alg):
    r = "alpha" * bialg.wedge(alg.e(1), alg.e(2))
    assert not r.is_rational()
    assert r.variables() == ["alpha"]
    inst = r.substitute({"alpha": "2/3"})
    assert inst.is_rational()


def test_triangular_decomposition(alg):
    b = bialg.wedge(alg.e(1), alg.named("JX+")) + bialg.wedge(
        alg.named("e+"), alg.named("X+")
    )
    d = bialg.triangular_decomposition(alg, b)
    assert d["dim_v0"] == 2
    assert d["h0_subalgebra"]


def test_catalog_verifies(alg):
    summary = bialg.verify_catalog(alg, os.environ["BIALG_CATALOG_DIR"])
    assert summary["total"] == 29
    assert summary["passed"] == 29


def test_json_round_trip(alg):
    r = bialg.wedge(alg.named("e+"), alg.named("X+"))
    doc = alg.to_json(r)
    assert alg.from_json(doc) == r


def test_errors_surface_as_python_exceptions(alg):
    with pytest.raises(bialg.BialgError):
        alg.named("no-such-generator")
