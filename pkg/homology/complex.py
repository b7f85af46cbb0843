"""Symmetric quandle chain complexes C_*(X)_Y with the subcomplexes D^Q and D^ρ."""

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from errors import DomainError, ResourceGuardError
from homology.chains import Chain, Cochain, Key, XSetAction
from homology.lattice import LatticeBasis, zeros
from quandles.core import FiniteQuandle, GoodInvolution
from settings import settings

logger = logging.getLogger(__name__)

FLAVORS = {
    "R": (False, False),
    "Q": (True, False),
    "Rrho": (False, True),
    "Rρ": (False, True),
    "Qrho": (True, True),
    "Qρ": (True, True),
}


def normalize_flavor(flavor: str) -> str:
    if flavor not in FLAVORS:
        raise DomainError(f"unknown flavor {flavor!r}; expected one of R, Q, Rrho, Qrho")
    return flavor.replace("ρ", "rho")


@dataclass(frozen=True)
class QuotientClass:
    """Orbit of basis tuples under the pairing transforms, signed relative to its representative."""

    representative: Key
    members: tuple[tuple[Key, int], ...]
    killed: bool
    torsion: bool

    def chain(self, has_y: bool) -> Chain:
        return Chain.basis(self.representative, has_y)


class SymmetricComplex:
    def __init__(
        self,
        X: FiniteQuandle,
        rho: GoodInvolution | None = None,
        Y: XSetAction | None = None,
        pair_range: str | None = None,
    ):
        self.X = X
        self.rho = rho
        self.Y = Y
        self.pair_range = pair_range or settings.RHO_PAIR_RANGE
        if self.pair_range not in ("full", "restricted"):
            raise DomainError(f"unknown pair range {self.pair_range!r}")
        self._indices: dict[int, dict[Key, int]] = {}
        self._lattices: dict[tuple[str, int], LatticeBasis] = {}

    @property
    def has_y(self) -> bool:
        return self.Y is not None

    # Basis

    def tuples(self, n: int) -> list[Key]:
        """Basis of C_n in lexicographic order on (y, x₁,…,x_n)."""
        q = self.X.size
        if n < 0:
            return []
        if not self.has_y:
            return [] if n == 0 else list(itertools.product(range(q), repeat=n))
        return [(y, *xs) for y in range(self.Y.size) for xs in itertools.product(range(q), repeat=n)]

    def index(self, n: int) -> dict[Key, int]:
        if n not in self._indices:
            self._indices[n] = {key: i for i, key in enumerate(self.tuples(n))}
        return self._indices[n]

    def _split(self, key: Key) -> tuple[int | None, Key]:
        return (key[0], key[1:]) if self.has_y else (None, key)

    def _join(self, y: int | None, xs) -> Key:
        return (y, *xs) if self.has_y else tuple(xs)

    def check_key(self, key: Key, n: int):
        y, xs = self._split(key)
        if len(xs) != n or any(not 0 <= x < self.X.size for x in xs):
            raise DomainError(f"tuple {key} is not a degree-{n} basis element", witness=list(key))
        if y is not None and not 0 <= y < self.Y.size:
            raise DomainError(f"tuple {key} has an invalid Y entry", witness=list(key))

    # Boundary

    def boundary_of_tuple(self, key: Key) -> dict[Key, int]:
        X = self.X
        y, xs = self._split(key)
        n = len(xs)
        out: dict[Key, int] = {}
        if n == 0 or (n == 1 and not self.has_y):
            return out
        for i in range(1, n + 1):
            sign = -1 if i % 2 else 1
            xi = xs[i - 1]
            face = self._join(y, xs[: i - 1] + xs[i:])
            moved = tuple(X.op(x, xi) for x in xs[: i - 1]) + xs[i:]
            other = self._join(None if y is None else self.Y.act(y, xi), moved)
            out[face] = out.get(face, 0) + sign
            out[other] = out.get(other, 0) - sign
        return {k: v for k, v in out.items() if v}

    def boundary(self, chain: Chain) -> Chain:
        if chain.degree < 1:
            raise DomainError("boundary needs degree >= 1")
        if chain.has_y != self.has_y:
            raise DomainError("chain and complex disagree on the Y slot")
        acc: dict[Key, int] = {}
        for key, coeff in chain.terms.items():
            self.check_key(key, chain.degree)
            for face, c in self.boundary_of_tuple(key).items():
                acc[face] = acc.get(face, 0) + coeff * c
        return Chain(chain.degree - 1, acc, self.has_y)

    def coboundary(self, theta: Cochain) -> Cochain:
        """δθ = θ∘∂ on degree n+1 tuples."""
        values = {}
        for key in self.tuples(theta.degree + 1):
            total = sum(c * theta(face) for face, c in self.boundary_of_tuple(key).items())
            if total:
                values[key] = total
        return Cochain(theta.degree + 1, values, self.has_y)

    # Subcomplexes

    def is_degenerate(self, key: Key) -> bool:
        _, xs = self._split(key)
        return any(xs[k] == xs[k + 1] for k in range(len(xs) - 1))

    def degenerate_generators(self, n: int) -> list[Chain]:
        return [Chain.basis(key, self.has_y) for key in self.tuples(n) if self.is_degenerate(key)]

    def pair_indices(self, n: int) -> range:
        last = n if self.pair_range == "full" else n - 1
        return range(1, last + 1)

    def pair_tuple(self, key: Key, i: int) -> Key:
        """(y·x_i, x₁◁x_i,…,x_{i−1}◁x_i, ρ(x_i), x_{i+1},…,x_n)."""
        if self.rho is None:
            raise DomainError("pairing needs a good involution")
        y, xs = self._split(key)
        xi = xs[i - 1]
        moved = tuple(self.X.op(x, xi) for x in xs[: i - 1]) + (self.rho(xi),) + xs[i:]
        return self._join(None if y is None else self.Y.act(y, xi), moved)

    def rho_pair_generators(self, n: int) -> list[Chain]:
        if self.rho is None:
            raise DomainError("ρ-pair generators need a good involution")
        seen = set()
        out = []
        for key in self.tuples(n):
            for i in self.pair_indices(n):
                other = self.pair_tuple(key, i)
                marker = (min(key, other), max(key, other))
                if marker in seen:
                    continue
                seen.add(marker)
                out.append(Chain.from_pairs(n, [(key, 1), (other, 1)], self.has_y))
        return out

    def subcomplex_generators(self, flavor: str, n: int) -> list[Chain]:
        uses_q, uses_rho = FLAVORS[flavor]
        if uses_rho and self.rho is None:
            raise DomainError(f"flavor {flavor} needs a good involution")
        gens: list[Chain] = []
        if n < 1 or not self.tuples(n):
            return gens
        if uses_q:
            gens.extend(self.degenerate_generators(n))
        if uses_rho:
            gens.extend(self.rho_pair_generators(n))
        return gens

    # Matrices

    def vectors(self, chains: list[Chain], n: int) -> np.ndarray:
        index = self.index(n)
        out = zeros(len(index), len(chains))
        for j, chain in enumerate(chains):
            for key, coeff in chain.terms.items():
                out[index[key], j] += coeff
        return out

    def vector(self, chain: Chain) -> np.ndarray:
        return self.vectors([chain], chain.degree)

    def boundary_matrix(self, n: int) -> np.ndarray:
        rows = self.index(n - 1)
        cols = self.tuples(n)
        out = zeros(len(rows), len(cols))
        for j, key in enumerate(cols):
            for face, c in self.boundary_of_tuple(key).items():
                out[rows[face], j] += c
        return out

    def guard(self, rows: int, cols: int, max_cells: int | None):
        limit = settings.MAX_MATRIX_CELLS if max_cells is None else max_cells
        if rows * cols > limit:
            raise ResourceGuardError(f"matrix of {rows}x{cols} exceeds the {limit}-cell guard")

    def subcomplex_lattice(self, flavor: str, n: int) -> LatticeBasis:
        flavor = normalize_flavor(flavor)
        key = (flavor, n)
        if key not in self._lattices:
            gens = self.subcomplex_generators(flavor, n)
            self._lattices[key] = LatticeBasis(self.vectors(gens, n))
        return self._lattices[key]

    def is_cycle(self, chain: Chain, flavor: str) -> bool:
        """∂z lies in the flavor's subcomplex one degree down."""
        edge = self.boundary(chain)
        if edge.is_zero():
            return True
        return self.subcomplex_lattice(flavor, chain.degree - 1).contains(self.vector(edge))

    # Quotient classes

    def quotient_classes(self, flavor: str, n: int) -> list[QuotientClass]:
        """Signed orbits of basis tuples; an orbit with a degenerate member is killed in Q flavors."""
        flavor = normalize_flavor(flavor)
        uses_q, uses_rho = FLAVORS[flavor]
        if uses_rho and self.rho is None:
            raise DomainError(f"flavor {flavor} needs a good involution")
        indices = list(self.pair_indices(n)) if uses_rho else []
        assigned: set[Key] = set()
        classes = []
        for key in self.tuples(n):
            if key in assigned:
                continue
            signs = {key: 1}
            torsion = False
            frontier = [key]
            while frontier:
                t = frontier.pop()
                for i in indices:
                    u = self.pair_tuple(t, i)
                    if u not in signs:
                        signs[u] = -signs[t]
                        frontier.append(u)
                    elif signs[u] != -signs[t]:
                        torsion = True
            assigned.update(signs)
            killed = uses_q and any(self.is_degenerate(t) for t in signs)
            classes.append(QuotientClass(key, tuple(sorted(signs.items())), killed, torsion))
        return classes
