"""The cochains A(x,y,z), the cocycles φ, φ′, φ″ on R̃_3, and triple-point bounds."""

import logging

from errors import DomainError
from homology.chains import Chain, Cochain, XSetAction, evaluate, pi_forget
from homology.complex import SymmetricComplex, normalize_flavor
from models import TriplePointRecordModel
from quandles.core import FiniteQuandle, GoodInvolution
from quandles.cosets import TildeExtension, build_tilde_r

logger = logging.getLogger(__name__)

PHI_TERMS = [(1, (0, 1, 0)), (1, (0, 1, 2)), (-1, (0, 2, 1))]

PHI_PRIME_TERMS = [
    (1, (0, 1, 0)),
    (1, (0, 1, 2)),
    (1, (0, 2, 0)),
    (-1, (0, 2, 1)),
    (1, (1, 0, 1)),
    (-1, (1, 0, 2)),
    (1, (1, 2, 0)),
    (1, (1, 2, 1)),
    (1, (2, 0, 1)),
    (1, (2, 0, 2)),
    (-1, (2, 1, 0)),
    (1, (2, 1, 2)),
]

# φ″ and φ′ share one combination.
PHI_DOUBLE_PRIME_TERMS = PHI_PRIME_TERMS


def a_cochain(X: FiniteQuandle, rho: GoodInvolution, x: int, y: int, z: int) -> Cochain:
    """Signed sum of characteristic functions over the eight images of (x,y,z) under the pairings."""
    op = X.op
    rx, ry, rz = rho(x), rho(y), rho(z)
    terms = [
        (1, (x, y, z)),
        (-1, (rx, y, z)),
        (-1, (op(x, y), ry, z)),
        (-1, (op(x, z), op(y, z), rz)),
        (1, (op(rx, y), ry, z)),
        (1, (op(rx, z), op(y, z), rz)),
        (1, (op(op(x, y), z), op(ry, z), rz)),
        (-1, (op(op(rx, y), z), op(ry, z), rz)),
    ]
    values: dict[tuple[int, ...], int] = {}
    for sign, key in terms:
        values[key] = values.get(key, 0) + sign
    return Cochain(3, values)


def combination(X: FiniteQuandle, rho: GoodInvolution, terms: list[tuple[int, tuple[int, int, int]]]) -> Cochain:
    total = Cochain(3)
    for coeff, (x, y, z) in terms:
        total = total + coeff * a_cochain(X, rho, x, y, z)
    return total


def _r3(extension: TildeExtension | None) -> TildeExtension:
    return extension if extension is not None else build_tilde_r(1)


def phi(extension: TildeExtension | None = None) -> Cochain:
    ext = _r3(extension)
    return combination(ext.quandle, ext.rho, PHI_TERMS)


def phi_prime(extension: TildeExtension | None = None) -> Cochain:
    ext = _r3(extension)
    return combination(ext.quandle, ext.rho, PHI_PRIME_TERMS)


def phi_double_prime(extension: TildeExtension | None = None) -> Cochain:
    """Alias of φ′: the same twelve A-terms, evaluated on π of the checkerboard cycles."""
    ext = _r3(extension)
    return combination(ext.quandle, ext.rho, PHI_DOUBLE_PRIME_TERMS)


COCYCLES = {"phi": phi, "phi_prime": phi_prime, "phi_pp": phi_double_prime}


def is_symmetric_cocycle(
    theta: Cochain,
    X: FiniteQuandle,
    rho: GoodInvolution | None,
    flavor: str = "Qrho",
    Y: XSetAction | None = None,
) -> bool:
    """θ∘∂ = 0 on degree n+1 tuples and θ vanishes on the flavor's degree-n generators."""
    flavor = normalize_flavor(flavor)
    cx = SymmetricComplex(X, rho, Y)
    for key in cx.tuples(theta.degree + 1):
        if sum(c * theta(face) for face, c in cx.boundary_of_tuple(key).items()):
            logger.debug("coboundary nonzero at %s", key)
            return False
    for gen in cx.subcomplex_generators(flavor, theta.degree):
        if evaluate(theta, gen):
            logger.debug("does not vanish on generator %s", gen)
            return False
    return True


def is_pm_monic(theta: Cochain, X: FiniteQuandle, rho: GoodInvolution) -> bool:
    """θ(a,b,c) = ±1 whenever a ∉ {b, ρ(b)} and c ∉ {b, ρ(b)}."""
    q = X.size
    for b in range(q):
        excluded = {b, rho(b)}
        for a in range(q):
            if a in excluded:
                continue
            for c in range(q):
                if c not in excluded and abs(theta((a, b, c))) != 1:
                    return False
    return True


def values_bounded(theta: Cochain) -> bool:
    return all(v in (-1, 0, 1) for v in theta.values.values())


def records_to_chain(records: list[TriplePointRecordModel], Y: XSetAction | None = None) -> Chain:
    has_y = Y is not None
    pairs = []
    for record in records:
        if has_y:
            if record.y is None:
                raise DomainError("record is missing its region color", witness=record.x)
            key = (Y.index_of(record.y), *record.x)
        else:
            if record.y is not None:
                raise DomainError("record has a region color but no (X,ρ)-set was given", witness=record.x)
            key = tuple(record.x)
        pairs.append((key, record.sign))
    return Chain.from_pairs(3, pairs, has_y)


def triple_point_bound(
    records: list[TriplePointRecordModel],
    X: FiniteQuandle,
    rho: GoodInvolution,
    Y: XSetAction | None,
    theta: Cochain,
) -> int:
    """|θ(Σ ε·(y, x₁, x₂, x₃))|, a lower bound for the number of triple points."""
    if not values_bounded(theta):
        raise DomainError("cocycle takes values outside {-1, 0, 1}")
    chain = records_to_chain(records, Y)
    if chain.is_zero():
        return 0
    cx = SymmetricComplex(X, rho, Y)
    if not cx.is_cycle(chain, "Qrho"):
        raise DomainError("weighted records do not form a cycle")
    if chain.has_y and not theta.has_y:
        chain = pi_forget(chain)
    return abs(evaluate(theta, chain))
