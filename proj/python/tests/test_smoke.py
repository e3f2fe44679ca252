import math

import pytest

import zonoid


SQUARE = {"ambient": 2, "degree": 1, "atoms": [{"w": 1, "v": [[1, 0]]}, {"w": 1, "v": [[0, 1]]}]}


def test_cp2_products():
    st = zonoid.multiply(2, "s", "t")
    assert [(t["monomial"], t["coeff"]) for t in st["terms"]] == [("t^3", "1/3")]
    ss = zonoid.multiply(2, "s", "s")
    assert [(t["monomial"], t["coeff"]) for t in ss["terms"]] == [("t^4", "1/6")]


def test_relations_and_dimensions():
    f2, f3 = zonoid.relations(2)
    assert f2["index"] == 2 and f3["index"] == 3
    beta3 = [t for t in f2["gamma_beta"] if t["beta"] == 3][0]
    assert beta3["coeff"]["coeff"] == "-1/3" and beta3["coeff"]["pi_exp"] == "-2"
    assert zonoid.dimension(4, 4) == 3
    assert zonoid.hankel_matrix(2, 2) == [["6", "2"], ["2", "1"]]


def test_self_intersection_and_fk():
    assert zonoid.self_intersection(3, 2, 1) == ("59/4", "59/4")
    assert zonoid.self_intersection(2, "1/2", "-3/4")[0] == zonoid.self_intersection(2, "1/2", "-3/4")[1]
    assert [zonoid.f_k(k) for k in range(5)] == [1, 0, 2, 0, 6]


def test_sphere():
    assert zonoid.kappa(4) == {"coeff": "1/2", "pi_exp": "2", "value": pytest.approx(math.pi**2 / 2)}
    assert zonoid.sphere_expected_count(2, [1, 1], ["1/2", "1/2"])["coeff"] == "2"
    assert zonoid.sphere_expected_count(2, [1, 1], [0.5, 0.5]) == pytest.approx(2.0)


def test_schubert():
    assert zonoid.lr_coefficients([1], [1]) == {"(2)": 1, "(1,1)": 1}
    assert zonoid.span_dim([1], 2, 2) == 4
    e = zonoid.mc_schubert_shape([[2], [2]], 2, 2, samples=20000, seed=3)
    assert abs(e["mean"] - 0.5) < 3 * e["std_error"]
    assert zonoid.mc_schubert_shape([[2], [1, 1]], 2, 2, samples=2000)["max_sample"] < 1e-10
    assert zonoid.verify_span_decomposition(2, 2, 2)["ok"]


def test_seed_reproducible_across_workers():
    a = zonoid.edeg22(samples=3000, seed=5, workers=1)
    b = zonoid.edeg22(samples=3000, seed=5, workers=3)
    assert a == b


def test_zonoids():
    assert zonoid.mixed_volume({"zonoids": [SQUARE, SQUARE]})["coeff"] == "1"
    assert zonoid.zonoid_length(SQUARE)[0]["coeff"] == "2"
    seg = {"ambient": 2, "degree": 1, "atoms": [{"w": 1, "v": [[1, 0]]}]}
    assert zonoid.volume_of_sum({"zonoids": [SQUARE, seg]})["coeff"] == "2"
    tilted = {"ambient": 2, "degree": 1, "atoms": [{"w": 1.0, "v": [[1, 1]]}]}
    assert zonoid.zonoid_length(tilted)[0] == pytest.approx(math.sqrt(2))


def test_errors():
    with pytest.raises(ValueError):
        zonoid.zonoid_length({"ambient": 2})
    with pytest.raises(ValueError):
        zonoid.multiply(2, "x", "s")
    with pytest.raises(ValueError):
        zonoid.zonoid_length({"ambient": 2, "degree": 1, "atoms": [{"w": 1, "v": [[1, 1]]}]})
