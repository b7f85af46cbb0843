"""Integral homology of the four symmetric quandle flavors."""

import logging
import time
from dataclasses import dataclass

import numpy as np

from errors import DomainError
from homology.chains import Chain, XSetAction
from homology.complex import FLAVORS, SymmetricComplex, normalize_flavor
from homology.lattice import LatticeBasis, SmithForm, integer_kernel, smith_normal_form, zeros
from models import ClassCoordinatesModel, HomologyGroupModel
from quandles.core import FiniteQuandle, GoodInvolution

logger = logging.getLogger(__name__)


@dataclass
class HomologyResult:
    """H_n = ker(C_n → C_{n−1}/D_{n−1}) / (im ∂_{n+1} + D_n) with an explicit class projector."""

    chain_complex: SymmetricComplex
    flavor: str
    degree: int
    cycles: LatticeBasis
    relations: np.ndarray
    smith: SmithForm

    @property
    def invariants(self) -> list[int]:
        return self.smith.diagonal

    @property
    def free_rank(self) -> int:
        return self.cycles.rank - len(self.invariants)

    @property
    def torsion(self) -> list[int]:
        return [d for d in self.invariants if d > 1]

    def to_model(self) -> HomologyGroupModel:
        return HomologyGroupModel(
            degree=self.degree, flavor=self.flavor, free_rank=self.free_rank, torsion=self.torsion
        )

    def project(self, vectors: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Class coordinates for each column, and a mask of columns that are cycles."""
        coords, ok = self.cycles.solve_many(vectors)
        return self.smith.U.dot(coords) if coords.size else coords, ok

    def class_of(self, z: Chain) -> ClassCoordinatesModel:
        if z.degree != self.degree:
            raise DomainError(f"chain has degree {z.degree}, homology is in degree {self.degree}")
        for key in z.terms:
            self.chain_complex.check_key(key, z.degree)
        projected, ok = self.project(self.chain_complex.vector(z))
        if not ok[0]:
            raise DomainError("chain is not a cycle in this flavor")
        return self.coordinates(projected[:, 0])

    def coordinates(self, column: np.ndarray) -> ClassCoordinatesModel:
        d = self.invariants
        rank = len(d)
        free = [int(v) for v in column[rank:]]
        torsion = [int(column[i]) % d[i] for i in range(rank) if d[i] > 1]
        return ClassCoordinatesModel(free=free, torsion=torsion, torsion_orders=self.torsion)


def _relation_columns(cx: SymmetricComplex, flavor: str, n: int) -> np.ndarray:
    """Columns of ∂_{n+1} and the degree-n subcomplex generators, without zero or repeated columns."""
    index = cx.index(n)
    seen = set()
    columns = []

    def add(sparse: dict):
        items = tuple(sorted((index[k], v) for k, v in sparse.items() if v))
        if not items:
            return
        if items[0][1] < 0:
            items = tuple((i, -v) for i, v in items)
        if items not in seen:
            seen.add(items)
            columns.append(items)

    for key in cx.tuples(n + 1):
        add(cx.boundary_of_tuple(key))
    for gen in cx.subcomplex_generators(flavor, n):
        add(gen.terms)
    out = zeros(len(index), len(columns))
    for j, items in enumerate(columns):
        for i, v in items:
            out[i, j] = v
    return out


def homology(
    X: FiniteQuandle,
    rho: GoodInvolution | None,
    Y: XSetAction | None,
    flavor: str,
    n: int,
    pair_range: str | None = None,
    max_cells: int | None = None,
    chain_complex: SymmetricComplex | None = None,
) -> HomologyResult:
    flavor = normalize_flavor(flavor)
    if FLAVORS[flavor][1] and rho is None:
        raise DomainError(f"flavor {flavor} needs a good involution")
    if n < 1:
        raise DomainError(f"homology degree must be >= 1, got {n}")
    cx = chain_complex or SymmetricComplex(X, rho, Y, pair_range)
    started = time.time()

    size_n = len(cx.tuples(n))
    size_below = len(cx.tuples(n - 1))
    below_gens = cx.subcomplex_generators(flavor, n - 1)
    cx.guard(size_below + size_n + len(below_gens), size_n + len(below_gens), max_cells)
    cx.guard(size_n, len(cx.tuples(n + 1)) + size_n * (n + 1), max_cells)

    # Z_n: first block of ker [∂_n | D_{n-1}]
    stacked = np.hstack([cx.boundary_matrix(n), cx.vectors(below_gens, n - 1)])
    kernel = integer_kernel(stacked)
    cycles = LatticeBasis(kernel[:size_n, :])
    logger.info("Z_%d (%s): rank %d in C_%d of rank %d", n, flavor, cycles.rank, n, size_n)

    # B_n + D_n, reduced to a basis before changing coordinates
    relations = LatticeBasis(_relation_columns(cx, flavor, n))
    coords, ok = cycles.solve_many(relations.basis)
    if not ok.all():
        raise DomainError("relation lattice escapes the cycle lattice")
    smith = smith_normal_form(coords)
    result = HomologyResult(cx, flavor, n, cycles, coords, smith)
    logger.info(
        "H_%d (%s) = %s in %.2fs", n, flavor, result.to_model().describe(), time.time() - started
    )
    return result


def homology_class(result: HomologyResult, z: Chain) -> ClassCoordinatesModel:
    return result.class_of(z)
