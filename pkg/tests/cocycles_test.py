import orjson
import pytest

from errors import DomainError
from homology.chains import Cochain, characteristic, chain_from_model, evaluate, pi_forget
from homology.cocycles import (
    PHI_PRIME_TERMS,
    a_cochain,
    is_pm_monic,
    is_symmetric_cocycle,
    phi,
    phi_double_prime,
    phi_prime,
    records_to_chain,
    triple_point_bound,
    values_bounded,
)
from homology.complex import SymmetricComplex
from models import ChainModel, TriplePointRecordModel


@pytest.fixture(scope="module")
def c(tilde3, fixtures_dir):
    model = ChainModel.model_validate_json((fixtures_dir / "c.json").read_text(encoding="utf-8"))
    return chain_from_model(model, tilde3.quandle)


@pytest.fixture(scope="module")
def gamma(tilde3, checkerboard, fixtures_dir):
    model = ChainModel.model_validate_json((fixtures_dir / "gamma.json").read_text(encoding="utf-8"))
    return chain_from_model(model, tilde3.quandle, checkerboard)


@pytest.fixture(scope="module")
def c_records(fixtures_dir):
    data = orjson.loads((fixtures_dir / "c_records.json").read_bytes())
    return [TriplePointRecordModel.model_validate(item) for item in data]


def test_a_cochain_leading_term(tilde3):
    A = a_cochain(tilde3.quandle, tilde3.rho, 0, 1, 0)
    assert A((0, 1, 0)) == 1


def test_a_cochains_vanish_on_pairings(tilde3):
    cx = SymmetricComplex(tilde3.quandle, tilde3.rho)
    gens = cx.rho_pair_generators(3)
    for _, (x, y, z) in PHI_PRIME_TERMS:
        A = a_cochain(tilde3.quandle, tilde3.rho, x, y, z)
        assert all(evaluate(A, g) == 0 for g in gens)


def test_cocycle_values_on_c(tilde3, c):
    assert evaluate(phi(tilde3), c) == 1
    assert evaluate(phi_prime(tilde3), c) == 4


def test_cocycle_values_on_pi_gamma(tilde3, gamma):
    projected = pi_forget(gamma)
    assert evaluate(phi(tilde3), projected) == 2
    assert evaluate(phi_double_prime(tilde3), projected) == 8


def test_phi_double_prime_is_phi_prime(tilde3, gamma):
    assert phi_double_prime(tilde3) == phi_prime(tilde3)
    assert evaluate(phi_prime(tilde3), pi_forget(gamma)) == 8


@pytest.mark.parametrize("build", [phi, phi_prime, phi_double_prime])
def test_cocycles_are_symmetric_cocycles(tilde3, build):
    assert is_symmetric_cocycle(build(tilde3), tilde3.quandle, tilde3.rho, "Qrho")


def test_cocycles_vanish_on_subcomplex(tilde3):
    cx = SymmetricComplex(tilde3.quandle, tilde3.rho)
    gens = cx.subcomplex_generators("Qrho", 3)
    for theta in (phi(tilde3), phi_prime(tilde3)):
        assert all(evaluate(theta, g) == 0 for g in gens)


def test_characteristic_function_is_not_a_cocycle(tilde3):
    assert not is_symmetric_cocycle(characteristic((0, 1, 2)), tilde3.quandle, tilde3.rho)


def test_monic_and_bounded(tilde3):
    theta = phi_prime(tilde3)
    assert is_pm_monic(theta, tilde3.quandle, tilde3.rho)
    assert values_bounded(theta)
    assert not values_bounded(2 * theta)
    zero = Cochain(3)
    assert not is_pm_monic(zero, tilde3.quandle, tilde3.rho)
    assert values_bounded(zero)


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_triple_point_bound_scales(tilde3, c_records, m):
    bound = triple_point_bound(c_records * m, tilde3.quandle, tilde3.rho, None, phi_prime(tilde3))
    assert bound == 4 * m


def test_triple_point_bound_edge_cases(tilde3, c_records):
    theta = phi_prime(tilde3)
    assert triple_point_bound([], tilde3.quandle, tilde3.rho, None, theta) == 0
    with pytest.raises(DomainError):
        triple_point_bound(c_records, tilde3.quandle, tilde3.rho, None, 2 * theta)
    with pytest.raises(DomainError):
        triple_point_bound(c_records[:1], tilde3.quandle, tilde3.rho, None, theta)


def test_triple_point_bound_with_region_colors(tilde3, checkerboard, gamma):
    records = [
        TriplePointRecordModel(sign=coeff, y=checkerboard.labels[key[0]], x=list(key[1:]))
        for key, coeff in gamma.items()
    ]
    assert records_to_chain(records, checkerboard) == gamma
    assert triple_point_bound(records, tilde3.quandle, tilde3.rho, checkerboard, phi_double_prime(tilde3)) == 8


def test_records_need_matching_region_colors(checkerboard):
    with pytest.raises(DomainError):
        records_to_chain([TriplePointRecordModel(sign=1, x=[0, 1, 2])], checkerboard)
    with pytest.raises(DomainError):
        records_to_chain([TriplePointRecordModel(sign=1, y="α", x=[0, 1, 2])])
