"""Coset quandles (G, H, ζ) and the extensions R̃_{2n+1} of dihedral quandles."""

import logging
from dataclasses import dataclass
from typing import NamedTuple

from errors import DomainError
from groups.group_engine import (
    DihedralCoverGroup,
    GeneratedGroup,
    build_g,
    centralizer,
    coset_representative,
    right_cosets,
)
from groups.signed_perm import SignedPermutation, compose, diagonal, inverse, power, strip_signs
from quandles.core import FiniteQuandle, GoodInvolution, dihedral_quandle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CosetData:
    group: GeneratedGroup
    subgroup: GeneratedGroup
    zeta: SignedPermutation
    representatives: tuple[SignedPermutation, ...]


@dataclass(frozen=True)
class QuandleHom:
    source: FiniteQuandle
    target: FiniteQuandle
    mapping: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def is_homomorphism(self) -> bool:
        src = self.source
        return all(
            self.mapping[src.op(x, y)] == self.target.op(self.mapping[x], self.mapping[y])
            for x in range(src.size)
            for y in range(src.size)
        )

    def fibers(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {t: [] for t in range(self.target.size)}
        for x, t in enumerate(self.mapping):
            out[t].append(x)
        return out

    def fiber_size(self) -> int | None:
        """Common fiber size, or None when fibers differ."""
        sizes = {len(f) for f in self.fibers().values()}
        return sizes.pop() if len(sizes) == 1 else None


class TildeExtension(NamedTuple):
    quandle: FiniteQuandle
    rho: GoodInvolution
    projection: QuandleHom


def check_extension(f: QuandleHom) -> bool:
    """Surjective homomorphism with constant fiber size."""
    if not f.is_homomorphism():
        return False
    size = f.fiber_size()
    return size is not None and size > 0


def coset_quandle(
    G: GeneratedGroup,
    H: GeneratedGroup,
    zeta: SignedPermutation,
    representatives: list[SignedPermutation] | None = None,
) -> FiniteQuandle:
    """Quandle on right cosets with Hu ◁ Hv = H u v⁻¹ ζ v."""
    for h in H.elements:
        if h not in G:
            raise DomainError("H is not a subgroup of G", witness=str(h))
    if zeta not in H:
        raise DomainError("ζ is not an element of H", witness=str(zeta))
    for h in H.elements:
        if compose(zeta, h) != compose(h, zeta):
            raise DomainError("ζ does not commute with every element of H", witness=str(h))

    if representatives is None:
        reps = [c.representative for c in right_cosets(G, H)]
    else:
        reps = list(representatives)
        keys = [coset_representative(H, r) for r in reps]
        if len(set(keys)) != len(keys) or len(keys) * H.order != G.order:
            raise DomainError("representatives do not list every right coset exactly once")

    label_of: dict[SignedPermutation, int] = {}
    for label, rep in enumerate(reps):
        for h in H.elements:
            label_of[compose(h, rep)] = label

    table = []
    for u in reps:
        row = []
        for v in reps:
            w = compose(compose(compose(u, inverse(v)), zeta), v)
            row.append(label_of[w])
        table.append(tuple(row))
    logger.debug("coset quandle with %d elements", len(reps))
    return FiniteQuandle(
        tuple(str(i) for i in range(len(reps))),
        tuple(table),
        provenance=CosetData(G, H, zeta, tuple(reps)),
    )


def involution_diagonal(n: int) -> SignedPermutation:
    """d with ρ(Hu) = H·d·u."""
    m = 2 * n + 1
    signs = [-1 if k <= n + 1 else 1 for k in range(1, m + 1)]
    if n % 2 == 0:
        signs[0] = 1
    return diagonal(signs)


def pinned_representatives(G: DihedralCoverGroup) -> list[SignedPermutation]:
    """Coset labels 0..5 of R̃_3 in the pinned ordering."""
    b = G.b
    b2 = compose(b, b)
    return [
        G.elements[0],
        b2,
        b,
        diagonal([-1, -1, 1]),
        compose(b2, diagonal([-1, 1, -1])),
        compose(b, diagonal([-1, -1, 1])),
    ]


def dihedral_projection(quandle: FiniteQuandle, G: DihedralCoverGroup) -> QuandleHom:
    """Coset Hu ↦ k where |u| lies in ⟨|a|⟩·|b|^{-k}."""
    m = G.m
    x = strip_signs(G.a)
    y = strip_signs(G.b)
    base = {G.elements[0], x}
    y_powers = [power(y, k) for k in range(m)]
    mapping = []
    for rep in quandle.provenance.representatives:
        s = strip_signs(rep)
        label = next(k for k in range(m) if compose(s, y_powers[k]) in base)
        mapping.append(label)
    return QuandleHom(quandle, dihedral_quandle(m), tuple(mapping))


def build_tilde_r(n: int, G: DihedralCoverGroup | None = None, max_elements: int | None = None) -> TildeExtension:
    """R̃_{2n+1} with its canonical good involution and projection onto R_{2n+1}."""
    G = build_g(n, max_elements) if G is None else G
    H = centralizer(G, G.a)
    reps = pinned_representatives(G) if n == 1 else None
    quandle = coset_quandle(G, H, G.a, reps)
    coset_data = quandle.provenance

    d = involution_diagonal(n)
    label_of = {}
    for label, rep in enumerate(coset_data.representatives):
        for h in H.elements:
            label_of[compose(h, rep)] = label
    rho = GoodInvolution(tuple(label_of[compose(d, u)] for u in coset_data.representatives))
    projection = dihedral_projection(quandle, G)
    logger.info("built R̃_%d with %d elements", G.m, quandle.size)
    return TildeExtension(quandle, rho, projection)
