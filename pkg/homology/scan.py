"""Search for homologically nontrivial cycles supported on few quotient-basis classes."""

import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from errors import DomainError, ResourceGuardError
from homology.chains import Chain, XSetAction, chain_to_model
from homology.complex import QuotientClass, SymmetricComplex
from homology.groups import HomologyResult, homology
from homology.lattice import LatticeBasis, integer_kernel, rank_mod_prime, zeros
from models import ScanReport
from quandles.core import FiniteQuandle, GoodInvolution
from settings import settings

logger = logging.getLogger(__name__)

FLAVOR = "Qrho"


@dataclass
class ScanContext:
    """Live classes of one degree with the lattice of their integer combinations that are cycles.

    ``cycle_basis`` holds, as columns, a basis of {c : ∂(Σ c_s e_s) ∈ D} in class
    coordinates; ``cycle_classes`` holds the homology class coordinates of each basis column.
    """

    result: HomologyResult
    classes: list[QuotientClass]
    cycle_basis: np.ndarray
    cycle_classes: np.ndarray

    @property
    def chain_complex(self) -> SymmetricComplex:
        return self.result.chain_complex

    def class_chain(self, coefficients) -> Chain:
        pairs = [(self.classes[s].representative, int(v)) for s, v in enumerate(coefficients) if v]
        return Chain.from_pairs(self.result.degree, pairs, self.chain_complex.has_y)


def build_context(
    X: FiniteQuandle,
    rho: GoodInvolution,
    Y: XSetAction | None = None,
    degree: int = 3,
    max_cells: int | None = None,
) -> ScanContext:
    result = homology(X, rho, Y, FLAVOR, degree, max_cells=max_cells)
    cx = result.chain_complex
    classes = [c for c in cx.quotient_classes(FLAVOR, degree) if not c.killed]
    boundaries = np.hstack([cx.vector(cx.boundary(c.chain(cx.has_y))) for c in classes])
    below = cx.subcomplex_lattice(FLAVOR, degree - 1)
    kernel = integer_kernel(np.hstack([boundaries, below.basis]))[: len(classes), :]
    cycle_basis = LatticeBasis(kernel).basis
    context = ScanContext(result, classes, cycle_basis, zeros(result.cycles.rank, 0))
    if cycle_basis.shape[1]:
        chains = [context.class_chain(cycle_basis[:, j]) for j in range(cycle_basis.shape[1])]
        projected, ok = result.project(cx.vectors(chains, degree))
        if not ok.all():
            bad = chains[int(np.flatnonzero(~ok)[0])]
            raise DomainError("class combination is not a cycle", witness=bad.support())
        context.cycle_classes = projected
    logger.info(
        "scan context: %d live classes in degree %d, cycle lattice of rank %d",
        len(classes),
        degree,
        cycle_basis.shape[1],
    )
    return context


def check_support(context: ScanContext, support: tuple[int, ...]) -> tuple[bool, list[Chain]]:
    """Cycles supported on the given classes; returns (any exist, those with a nonzero class)."""
    k = context.cycle_basis.shape[1]
    if k == 0:
        return False, []
    inside = set(support)
    outside = context.cycle_basis[[i for i in range(len(context.classes)) if i not in inside], :]
    if rank_mod_prime(outside) == k:
        return False, []
    combos = integer_kernel(outside)
    if combos.shape[1] == 0:
        return False, []
    coefficients = context.cycle_basis.dot(combos)
    projected = context.cycle_classes.dot(combos)
    has_kernel = False
    found = []
    for j in range(combos.shape[1]):
        if not coefficients[:, j].any():
            continue
        has_kernel = True
        if not context.result.coordinates(projected[:, j]).is_zero:
            found.append(context.class_chain(coefficients[:, j]))
    return has_kernel, found


def _scan_chunk(context: ScanContext, supports: list[tuple[int, ...]]) -> tuple[int, list[tuple[tuple[int, ...], Chain]]]:
    nontrivial = 0
    hits = []
    for support in supports:
        has_kernel, found = check_support(context, support)
        nontrivial += has_kernel
        hits.extend((support, chain) for chain in found)
    return nontrivial, hits


def _partition(items: list, parts: int) -> list[list]:
    size = max(1, math.ceil(len(items) / parts))
    return [items[i : i + size] for i in range(0, len(items), size)]


def _run(context: ScanContext, supports: list[tuple[int, ...]], workers: int):
    if workers <= 1 or len(supports) < 2:
        return _scan_chunk(context, supports)
    nontrivial = 0
    hits = []
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(_scan_chunk, context, chunk) for chunk in _partition(supports, workers)]
        for future in futures:
            count, found = future.result()
            nontrivial += count
            hits.extend(found)
    return nontrivial, hits


def exhaustive_supports(class_count: int, max_support: int, min_support: int = 1) -> list[tuple[int, ...]]:
    return [
        support
        for size in range(min_support, max_support + 1)
        for support in itertools.combinations(range(class_count), size)
    ]


def random_supports(
    class_count: int, max_support: int, min_support: int, trials: int, seed: int
) -> list[tuple[int, ...]]:
    rng = np.random.default_rng(seed)
    supports = []
    for _ in range(trials):
        size = int(rng.integers(min_support, max_support + 1))
        picked = rng.choice(class_count, size=min(size, class_count), replace=False)
        supports.append(tuple(sorted(int(v) for v in picked)))
    return supports


def small_support_null_scan(
    X: FiniteQuandle,
    rho: GoodInvolution,
    Y: XSetAction | None = None,
    degree: int = 3,
    max_support: int = 3,
    mode: str = "exhaustive",
    seed: int | None = None,
    trials: int | None = None,
    min_support: int = 1,
    workers: int | None = None,
    max_supports: int = 5_000_000,
    supports: list[tuple[int, ...]] | None = None,
    context: ScanContext | None = None,
) -> ScanReport:
    if max_support < 1 or min_support < 1 or min_support > max_support:
        raise DomainError(f"invalid support range {min_support}..{max_support}")
    context = context or build_context(X, rho, Y, degree)
    count = len(context.classes)
    workers = settings.SCAN_WORKERS if workers is None else workers

    if supports is not None:
        candidates = [tuple(sorted(s)) for s in supports]
    elif mode == "exhaustive":
        total = sum(math.comb(count, k) for k in range(min_support, max_support + 1))
        if total > max_supports:
            raise ResourceGuardError(f"{total} supports exceed the exhaustive-scan guard of {max_supports}")
        candidates = exhaustive_supports(count, max_support, min_support)
    elif mode == "random":
        seed = settings.SCAN_SEED if seed is None else seed
        trials = settings.SCAN_TRIALS if trials is None else trials
        candidates = random_supports(count, max_support, min_support, trials, seed)
    else:
        raise DomainError(f"unknown scan mode {mode!r}")

    logger.info("scanning %d supports over %d classes with %d worker(s)", len(candidates), count, workers)
    nontrivial, hits = _run(context, candidates, workers)
    hits.sort(key=lambda item: (len(item[0]), item[0], item[1].items()))
    Y_action = context.chain_complex.Y
    counterexamples = [
        {"support": list(support), "chain": chain_to_model(chain, Y_action).model_dump(exclude_none=True)}
        for support, chain in hits
    ]
    return ScanReport(
        mode="explicit" if supports is not None else mode,
        seed=seed if mode == "random" and supports is None else None,
        trials=trials if mode == "random" and supports is None else None,
        degree=context.result.degree,
        max_support=max_support,
        min_support=min_support,
        classes=count,
        supports_checked=len(candidates),
        nontrivial_kernels=nontrivial,
        counterexamples=counterexamples,
    )


def support_of_chain(context: ScanContext, chain: Chain) -> tuple[int, ...]:
    """Indices of the live classes that the chain's tuples belong to."""
    position = {}
    for i, cls in enumerate(context.classes):
        for key, _ in cls.members:
            position[key] = i
    return tuple(sorted({position[key] for key in chain.terms if key in position}))
