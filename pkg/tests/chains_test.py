import random
from collections import defaultdict

import pytest

from errors import DomainError
from homology.chains import (
    Chain,
    Cochain,
    XSetAction,
    chain_from_model,
    chain_to_model,
    evaluate,
    pi_forget,
    trivial_action,
    verify_xset_action,
)
from homology.complex import SymmetricComplex
from models import ChainModel


def random_chain(rng: random.Random, cx: SymmetricComplex, n: int, terms: int = 4) -> Chain:
    basis = cx.tuples(n)
    return Chain.from_pairs(n, [(rng.choice(basis), rng.randint(-3, 3)) for _ in range(terms)], cx.has_y)


@pytest.fixture(scope="module")
def plain(tilde3):
    return SymmetricComplex(tilde3.quandle, tilde3.rho)


@pytest.fixture(scope="module")
def with_y(tilde3, checkerboard):
    return SymmetricComplex(tilde3.quandle, tilde3.rho, checkerboard)


def test_checkerboard_action(tilde3, checkerboard):
    assert all(checkerboard.act(0, u) == 1 and checkerboard.act(1, u) == 0 for u in range(6))
    assert all(checkerboard.act(checkerboard.act(y, 2), 2) == y for y in range(2))
    assert verify_xset_action(tilde3.quandle, tilde3.rho, checkerboard).passed
    assert checkerboard.index_of("alpha") == 0 and checkerboard.index_of("β") == 1


def test_trivial_action_passes(tilde3):
    assert verify_xset_action(tilde3.quandle, tilde3.rho, trivial_action(tilde3.quandle)).passed


def test_non_equivariant_action_fails(tilde3):
    Y = XSetAction(("p", "q"), ((1, 0, 0, 0, 0, 0), (0, 1, 1, 1, 1, 1)))
    assert not verify_xset_action(tilde3.quandle, tilde3.rho, Y).passed


def test_boundary_of_pair(plain):
    edge = plain.boundary(Chain.basis((0, 1)))
    assert edge == Chain(1, {(0,): 1, (5,): -1})


def test_boundary_in_degree_one_without_y_is_zero(plain, with_y):
    assert plain.boundary(Chain.basis((2,))).is_zero()
    edge = with_y.boundary(Chain.basis((0, 2), has_y=True))
    assert edge == Chain(0, {(0,): -1, (1,): 1}, has_y=True)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_boundary_squares_to_zero(plain, with_y, n):
    rng = random.Random(n)
    for cx in (plain, with_y):
        for _ in range(500):
            z = random_chain(rng, cx, n)
            assert cx.boundary(cx.boundary(z)).is_zero()


def test_boundary_rejects_bad_tuples(plain):
    with pytest.raises(DomainError):
        plain.boundary(Chain.basis((0, 7)))
    with pytest.raises(DomainError):
        plain.boundary(Chain(0, {}))


def test_degenerate_generator_counts(plain):
    assert plain.degenerate_generators(1) == []
    assert len(plain.degenerate_generators(2)) == 6
    assert len(plain.degenerate_generators(3)) == 66


def test_pair_tuple(plain, tilde3):
    assert plain.pair_tuple((0, 1), 2) == (5, 4)
    assert plain.pair_tuple((0, 1), 1) == (3, 1)
    gens = plain.rho_pair_generators(2)
    assert Chain.from_pairs(2, [((0, 1), 1), ((5, 4), 1)]) in gens


@pytest.mark.parametrize("n", [1, 2, 3])
def test_pairing_is_an_involution(plain, with_y, n):
    for cx in (plain, with_y):
        for key in cx.tuples(n):
            for i in cx.pair_indices(n):
                assert cx.pair_tuple(cx.pair_tuple(key, i), i) == key


def test_restricted_pair_range(tilde3):
    cx = SymmetricComplex(tilde3.quandle, tilde3.rho, pair_range="restricted")
    assert list(cx.pair_indices(3)) == [1, 2]
    with pytest.raises(DomainError):
        SymmetricComplex(tilde3.quandle, tilde3.rho, pair_range="sideways")


def subcomplex_membership(cx: SymmetricComplex, flavor: str, n: int):
    """Exact test for w ∈ D_n.

    D^Q is spanned by basis tuples. On each pairing orbit, w ∈ D^ρ pins the signed sum to 0, or to 0 mod 2
    when the orbit is torsion.
    """
    if flavor == "Q":
        return lambda w: all(cx.is_degenerate(key) for key in w.terms)
    classes = cx.quotient_classes("Rrho", n)
    where = {key: (i, sign) for i, cls in enumerate(classes) for key, sign in cls.members}

    def member(w: Chain) -> bool:
        totals = defaultdict(int)
        for key, coeff in w.terms.items():
            i, sign = where[key]
            totals[i] += sign * coeff
        return all(v % 2 == 0 if classes[i].torsion else v == 0 for i, v in totals.items())

    return member


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_every_subcomplex_generator_has_boundary_in_subcomplex(plain, with_y, n):
    for cx in (plain, with_y):
        for flavor, gens in (("Q", cx.degenerate_generators(n)), ("Rrho", cx.rho_pair_generators(n))):
            member = subcomplex_membership(cx, flavor, n - 1)
            for g in gens:
                assert member(cx.boundary(g)), (flavor, g)


@pytest.mark.parametrize("n", [2, 3])
def test_subcomplexes_are_closed_under_boundary(plain, n):
    for flavor, gens in (("Q", plain.degenerate_generators(n)), ("Rrho", plain.rho_pair_generators(n))):
        lattice = plain.subcomplex_lattice(flavor, n - 1)
        edges = [e for e in (plain.boundary(g) for g in gens) if not e.is_zero()]
        if edges:
            _, ok = lattice.solve_many(plain.vectors(edges, n - 1))
            assert ok.all()


def test_membership_rejects_chains_outside_subcomplexes(plain):
    assert not subcomplex_membership(plain, "Q", 2)(Chain.basis((0, 1)))
    assert not subcomplex_membership(plain, "Rrho", 2)(Chain.basis((0, 1)))
    assert subcomplex_membership(plain, "Rrho", 2)(Chain.from_pairs(2, [((0, 1), 1), ((5, 4), 1)]))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_subcomplexes_with_y_are_closed_under_boundary(with_y, n):
    for flavor, gens in (("Q", with_y.degenerate_generators(n)), ("Rrho", with_y.rho_pair_generators(n))):
        edges = [e for e in (with_y.boundary(g) for g in gens) if not e.is_zero()]
        if n == 1:
            assert not edges
        elif edges:
            _, ok = with_y.subcomplex_lattice(flavor, n - 1).solve_many(with_y.vectors(edges, n - 1))
            assert ok.all()


@pytest.mark.parametrize("n", [2, 3, 4])
def test_pi_is_a_chain_map(plain, with_y, n):
    rng = random.Random(10 + n)
    assert pi_forget(Chain.basis((0, 0, 1, 0), has_y=True)) == Chain.basis((0, 1, 0))
    for _ in range(300):
        z = random_chain(rng, with_y, n)
        assert plain.boundary(pi_forget(z)) == pi_forget(with_y.boundary(z))


def test_pi_needs_y_slot():
    with pytest.raises(DomainError):
        pi_forget(Chain.basis((0, 1)))


def test_coboundary_duality(plain):
    rng = random.Random(3)
    basis = plain.tuples(2)
    for _ in range(20):
        theta = Cochain(2, {rng.choice(basis): rng.randint(-2, 2) for _ in range(6)})
        z = random_chain(rng, plain, 3, terms=6)
        assert evaluate(plain.coboundary(theta), z) == evaluate(theta, plain.boundary(z))


def test_chain_arithmetic():
    a = Chain.basis((0, 1, 2))
    b = Chain.basis((2, 1, 0))
    assert (a + b - a) == b
    assert (3 * a).terms == {(0, 1, 2): 3}
    assert (a - a).is_zero()
    assert (-a).items() == [((0, 1, 2), -1)]
    with pytest.raises(DomainError):
        a + Chain.basis((0, 1))


def test_chain_model_round_trip(tilde3, checkerboard, fixtures_dir):
    model = ChainModel.model_validate_json((fixtures_dir / "gamma.json").read_text(encoding="utf-8"))
    gamma = chain_from_model(model, tilde3.quandle, checkerboard)
    assert gamma.has_y and gamma.degree == 3
    assert len(gamma.terms) == 8
    assert gamma.terms[(0, 2, 1, 0)] == -1
    assert chain_from_model(chain_to_model(gamma, checkerboard), tilde3.quandle, checkerboard) == gamma


def test_chain_model_errors(tilde3):
    with pytest.raises(DomainError):
        chain_from_model(ChainModel(degree=2, terms=[{"coeff": 1, "x": [0, 9]}]), tilde3.quandle)
    with pytest.raises(DomainError):
        chain_from_model(ChainModel(degree=2, terms=[{"coeff": 1, "y": "α", "x": [0, 1]}]), tilde3.quandle)
    with pytest.raises(ValueError):
        ChainModel(degree=3, terms=[{"coeff": 1, "x": [0, 1]}])
