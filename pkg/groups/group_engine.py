"""Finite groups of signed permutations: closure, centralizers, cosets, G_{2n+1}."""

import logging
from collections import deque
from dataclasses import dataclass

from errors import DomainError, ResourceGuardError
from groups.signed_perm import (
    SignedPermutation,
    compose,
    diagonal,
    identity,
    inverse,
    power,
    strip_signs,
)
from settings import settings

logger = logging.getLogger(__name__)


class GeneratedGroup:
    """Subgroup of a hyper-octahedral group with an indexed element list."""

    def __init__(self, generators: list[SignedPermutation], elements: list[SignedPermutation]):
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self._index = {g: i for i, g in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return self.elements[0].size

    def __contains__(self, g: SignedPermutation) -> bool:
        return g in self._index

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, g: SignedPermutation) -> int:
        try:
            return self._index[g]
        except KeyError:
            raise DomainError(f"{g} is not an element of the group", witness=str(g)) from None

    def is_subgroup_of(self, other: "GeneratedGroup") -> bool:
        return all(g in other for g in self.elements)


class DihedralCoverGroup(GeneratedGroup):
    """The group G_{2n+1} generated by the canonical pair a, b."""

    def __init__(self, n: int, a: SignedPermutation, b: SignedPermutation, elements: list[SignedPermutation]):
        super().__init__([a, b], elements)
        self.n = n
        self.a = a
        self.b = b

    @property
    def m(self) -> int:
        return 2 * self.n + 1


@dataclass(frozen=True)
class RightCoset:
    subgroup: GeneratedGroup
    representative: SignedPermutation
    members: tuple[SignedPermutation, ...]


@dataclass(frozen=True)
class NormalForm:
    """Decomposition g = prefix · b^j · diagonal with prefix in {1, a}."""

    has_a: bool
    exponent: int
    diagonal: SignedPermutation

    @property
    def prefix(self) -> str:
        return "a" if self.has_a else "1"

    def recompose(self, G: DihedralCoverGroup) -> SignedPermutation:
        head = G.a if self.has_a else identity(G.m)
        return compose(compose(head, power(G.b, self.exponent)), self.diagonal)


def _closure(gens: list[SignedPermutation], max_elements: int) -> list[SignedPermutation]:
    if not gens:
        raise DomainError("closure needs at least one generator")
    size = gens[0].size
    for g in gens:
        if g.size != size:
            raise DomainError(f"generator size mismatch: {g.size} vs {size}", witness=str(g))
    start = identity(size)
    elements = [start]
    seen = {start}
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for s in gens:
            h = compose(g, s)
            if h not in seen:
                seen.add(h)
                elements.append(h)
                queue.append(h)
                if len(elements) > max_elements:
                    raise ResourceGuardError(f"group closure exceeds {max_elements} elements")
    return elements


def generate_closure(gens: list[SignedPermutation], max_elements: int | None = None) -> GeneratedGroup:
    """Breadth-first closure from the identity, generators applied in the given order."""
    limit = settings.MAX_ELEMENTS if max_elements is None else max_elements
    elements = _closure(gens, limit)
    logger.debug("closure of %d generators: %d elements", len(gens), len(elements))
    return GeneratedGroup(list(gens), elements)


def generator_a(n: int) -> SignedPermutation:
    m = 2 * n + 1
    image = [1]
    for k in range(2, m + 1):
        value = m + 2 - k
        image.append(value if value >= n + 2 else -value)
    return SignedPermutation(tuple(image))


def generator_b(n: int) -> SignedPermutation:
    m = 2 * n + 1
    return SignedPermutation((m, *range(1, m)))


def predicted_order(n: int) -> int:
    return (2 * n + 1) * 2 ** (2 * n + 1)


def build_g(n: int, max_elements: int | None = None) -> DihedralCoverGroup:
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    limit = settings.MAX_ELEMENTS if max_elements is None else max_elements
    if predicted_order(n) > limit:
        raise ResourceGuardError(f"G_{2 * n + 1} has {predicted_order(n)} elements, guard is {limit}")
    a, b = generator_a(n), generator_b(n)
    elements = _closure([a, b], limit)
    logger.info("built G_%d with %d elements", 2 * n + 1, len(elements))
    return DihedralCoverGroup(n, a, b, elements)


def subgroup_from_elements(G: GeneratedGroup, elements: list[SignedPermutation]) -> GeneratedGroup:
    """Wrap a subset already known to be a subgroup, keeping G's element order."""
    wanted = set(elements)
    ordered = [g for g in G.elements if g in wanted]
    return GeneratedGroup(ordered, ordered)


def centralizer(G: GeneratedGroup, g: SignedPermutation) -> GeneratedGroup:
    if g not in G:
        raise DomainError(f"{g} is not in the group", witness=str(g))
    members = [h for h in G.elements if compose(g, h) == compose(h, g)]
    return subgroup_from_elements(G, members)


def coset_representative(H: GeneratedGroup, g: SignedPermutation) -> SignedPermutation:
    """Canonical representative of the right coset Hg."""
    return min((compose(h, g) for h in H.elements), key=SignedPermutation.sort_key)


def right_cosets(G: GeneratedGroup, H: GeneratedGroup) -> list[RightCoset]:
    for h in H.elements:
        if h not in G:
            raise DomainError(f"subgroup element {h} is not in G", witness=str(h))
    assigned: set[SignedPermutation] = set()
    cosets = []
    for g in G.elements:
        if g in assigned:
            continue
        members = tuple(compose(h, g) for h in H.elements)
        assigned.update(members)
        rep = min(members, key=SignedPermutation.sort_key)
        cosets.append(RightCoset(H, rep, members))
    cosets.sort(key=lambda c: c.representative.sort_key())
    return cosets


def strip_signs_image(G: GeneratedGroup) -> GeneratedGroup:
    gens = [strip_signs(g) for g in G.generators]
    return generate_closure(gens)


# Diagonal automorphisms: D·a = a·f_a(D) and D·b = b·f_b(D).


def f_a(d: SignedPermutation) -> SignedPermutation:
    signs = d.signs
    m = len(signs)
    return diagonal([signs[0]] + [signs[m + 1 - k] for k in range(2, m + 1)])


def f_b(d: SignedPermutation, times: int = 1) -> SignedPermutation:
    signs = d.signs
    m = len(signs)
    return diagonal([signs[(k - times) % m] for k in range(m)])


def diagonal_product(*parts: SignedPermutation) -> SignedPermutation:
    signs = [1] * parts[0].size
    for d in parts:
        signs = [s * t for s, t in zip(signs, d.signs)]
    return diagonal(signs)


def i_plus(n: int) -> SignedPermutation:
    m = 2 * n + 1
    return diagonal([-1 if k in (n + 1, m) else 1 for k in range(1, m + 1)])


def i_minus(n: int) -> SignedPermutation:
    m = 2 * n + 1
    return diagonal([-1 if k in (1, n + 2) else 1 for k in range(1, m + 1)])


def i_single(n: int, i: int) -> SignedPermutation:
    """All signs -1 except +1 at position i."""
    m = 2 * n + 1
    return diagonal([1 if k == i else -1 for k in range(1, m + 1)])


def normal_form(G: DihedralCoverGroup, g: SignedPermutation) -> NormalForm:
    if g not in G:
        raise DomainError(f"{g} is not in G_{G.m}", witness=str(g))
    b_inv = inverse(G.b)
    a_inv = inverse(G.a)
    for has_a in (False, True):
        rest = compose(a_inv, g) if has_a else g
        for j in range(G.m):
            if rest.is_diagonal():
                return NormalForm(has_a, j, rest)
            rest = compose(b_inv, rest)
    raise DomainError(f"no normal form for {g}", witness=str(g))


def normal_product(G: DihedralCoverGroup, u: NormalForm, v: NormalForm) -> NormalForm:
    """Multiply two normal forms through the commutation formulas alone."""
    m, n = G.m, G.n
    i, j = u.exponent, v.exponent
    if not v.has_a:
        # (pre b^i E)(b^j F) = pre b^{i+j} f_b^j(E) F
        return NormalForm(u.has_a, (i + j) % m, diagonal_product(f_b(u.diagonal, j), v.diagonal))
    bracket = diagonal_product(identity(m), *(f_b(i_plus(n), -k) for k in range(i)))
    tail = diagonal_product(f_b(bracket, j), f_b(f_a(u.diagonal), j), v.diagonal)
    if not u.has_a:
        # (b^i E)(a b^j F) = a b^{j-i} f_b^j(P_i) f_b^j(f_a(E)) F
        return NormalForm(True, (j - i) % m, tail)
    # (a b^i E)(a b^j F) = a^2 b^{j-i} ...; a^2 is diagonal, pushed past b^{j-i}
    a_squared = compose(G.a, G.a)
    return NormalForm(False, (j - i) % m, diagonal_product(f_b(a_squared, j - i), tail))


def commutation_relations_hold(G: DihedralCoverGroup) -> bool:
    """D·a = a·f_a(D) and D·b = b·f_b(D) on the kernel, plus ba = ab⁻¹I₊ and b⁻¹a = abI₋."""
    a, b, n = G.a, G.b, G.n
    for d in G.elements:
        if not d.is_diagonal():
            continue
        if compose(d, a) != compose(a, f_a(d)) or compose(d, b) != compose(b, f_b(d)):
            return False
    b_inv = inverse(b)
    return compose(b, a) == compose(compose(a, b_inv), i_plus(n)) and compose(b_inv, a) == compose(
        compose(a, b), i_minus(n)
    )
