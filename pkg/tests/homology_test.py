import random

import pytest

from errors import DomainError, ResourceGuardError
from homology.chains import Chain, chain_from_model, pi_forget
from homology.groups import homology, homology_class
from models import ChainModel
from quandles.core import dihedral_quandle
from smith_checks import assert_smith_form


def load_chain(fixtures_dir, name, X, Y=None):
    model = ChainModel.model_validate_json((fixtures_dir / name).read_text(encoding="utf-8"))
    return chain_from_model(model, X, Y)


@pytest.fixture(scope="module")
def h3(tilde3):
    return homology(tilde3.quandle, tilde3.rho, None, "Qrho", 3)


@pytest.fixture(scope="module")
def h3_checkerboard(tilde3, checkerboard):
    return homology(tilde3.quandle, tilde3.rho, checkerboard, "Qrho", 3)


def test_h2_vanishes(tilde3):
    result = homology(tilde3.quandle, tilde3.rho, None, "Qrho", 2)
    assert (result.free_rank, result.torsion) == (0, [])
    assert result.to_model().describe() == "0"
    assert_smith_form(result.relations, result.smith)


def test_h3_is_infinite_cyclic(h3):
    assert (h3.free_rank, h3.torsion) == (1, [])
    assert h3.to_model().describe() == "Z"
    assert_smith_form(h3.relations, h3.smith)


@pytest.mark.slow
def test_h3_with_checkerboard(h3_checkerboard):
    assert (h3_checkerboard.free_rank, h3_checkerboard.torsion) == (1, [3])
    assert_smith_form(h3_checkerboard.relations, h3_checkerboard.smith)


def test_cycle_c_generates(h3, tilde3, fixtures_dir):
    c = load_chain(fixtures_dir, "c.json", tilde3.quandle)
    assert h3.chain_complex.is_cycle(c, "Qrho")
    coords = homology_class(h3, c)
    assert abs(coords.free[0]) == 1
    assert not coords.is_zero


def test_boundaries_are_null_homologous(h3):
    cx = h3.chain_complex
    rng = random.Random(5)
    basis = cx.tuples(4)
    for _ in range(20):
        w = Chain.from_pairs(4, [(rng.choice(basis), rng.randint(-2, 2)) for _ in range(5)])
        assert h3.class_of(cx.boundary(w)).is_zero


def test_subcomplex_chains_are_null_homologous(h3):
    for gen in h3.chain_complex.subcomplex_generators("Qrho", 3)[:50]:
        assert h3.class_of(gen).is_zero


def test_non_cycle_is_rejected(h3):
    with pytest.raises(DomainError):
        h3.class_of(Chain.basis((0, 1, 2)))
    with pytest.raises(DomainError):
        h3.class_of(Chain.basis((0, 1)))


def test_pi_of_gamma_is_twice_c(h3, tilde3, checkerboard, fixtures_dir):
    c = load_chain(fixtures_dir, "c.json", tilde3.quandle)
    gamma = load_chain(fixtures_dir, "gamma.json", tilde3.quandle, checkerboard)
    assert h3.class_of(pi_forget(gamma)).free == [2 * h3.class_of(c).free[0]]


@pytest.mark.slow
def test_gamma_generates_free_part(h3_checkerboard, tilde3, checkerboard, fixtures_dir):
    gamma = load_chain(fixtures_dir, "gamma.json", tilde3.quandle, checkerboard)
    assert h3_checkerboard.chain_complex.is_cycle(gamma, "Qrho")
    coords = h3_checkerboard.class_of(gamma)
    assert abs(coords.free[0]) == 1
    assert coords.torsion_orders == [3]


def test_dihedral_quandle_homology():
    R3 = dihedral_quandle(3)
    assert homology(R3, None, None, "R", 1).free_rank == 1
    h2 = homology(R3, None, None, "Q", 2)
    assert (h2.free_rank, h2.torsion) == (0, [])
    h3 = homology(R3, None, None, "Q", 3)
    assert (h3.free_rank, h3.torsion) == (0, [3])
    for result in (h2, h3):
        assert_smith_form(result.relations, result.smith)


def test_rho_flavor_needs_involution():
    with pytest.raises(DomainError):
        homology(dihedral_quandle(3), None, None, "Qrho", 2)


def test_unknown_flavor_and_degree(tilde3):
    with pytest.raises(DomainError):
        homology(tilde3.quandle, tilde3.rho, None, "Z", 2)
    with pytest.raises(DomainError):
        homology(tilde3.quandle, tilde3.rho, None, "Qrho", 0)


def test_unicode_flavor_name(tilde3):
    result = homology(tilde3.quandle, tilde3.rho, None, "Qρ", 2)
    assert result.flavor == "Qrho"


def test_matrix_guard(tilde3):
    with pytest.raises(ResourceGuardError):
        homology(tilde3.quandle, tilde3.rho, None, "Qrho", 3, max_cells=1000)
