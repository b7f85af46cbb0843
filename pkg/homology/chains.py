"""Integer chains and cochains over tuples (y, x₁,…,x_n) or (x₁,…,x_n), and (X,ρ)-sets."""

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

from errors import DomainError
from models import ChainModel, ChainTermModel, VerificationReport, Violation
from quandles.core import FiniteQuandle, GoodInvolution

Key = tuple[int, ...]


@dataclass(frozen=True)
class XSetAction:
    """Finite set Y with translations ``table[y][x] = y·x``."""

    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    aliases: dict[str, int] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        inverse = [[-1] * len(self.table[0]) for _ in self.labels] if self.labels else []
        for y, row in enumerate(self.table):
            for x, target in enumerate(row):
                inverse[target][x] = y
        object.__setattr__(self, "_inverse", tuple(tuple(row) for row in inverse))

    @property
    def size(self) -> int:
        return len(self.labels)

    def act(self, y: int, x: int) -> int:
        return self.table[y][x]

    def act_inverse(self, y: int, x: int) -> int:
        """y·x⁻¹."""
        return self._inverse[y][x]

    def index_of(self, label: str) -> int:
        if label in self.labels:
            return self.labels.index(label)
        if label in self.aliases:
            return self.aliases[label]
        raise DomainError(f"unknown element {label!r} of Y")


def checkerboard_action(X: FiniteQuandle) -> XSetAction:
    """Y = {α, β}; every translation swaps the two."""
    return XSetAction(
        ("α", "β"),
        (tuple(1 for _ in range(X.size)), tuple(0 for _ in range(X.size))),
        aliases={"alpha": 0, "beta": 1, "a": 0, "b": 1},
    )


def trivial_action(X: FiniteQuandle) -> XSetAction:
    return XSetAction(("*",), (tuple(0 for _ in range(X.size)),))


def verify_xset_action(X: FiniteQuandle, rho: GoodInvolution, Y: XSetAction) -> VerificationReport:
    subject = "(X,ρ)-set"

    def fail(condition: str, witness: list) -> VerificationReport:
        return VerificationReport(subject=subject, passed=False, violations=[Violation(condition=condition, witness=witness)])

    for x in range(X.size):
        if sorted(Y.act(y, x) for y in range(Y.size)) != list(range(Y.size)):
            return fail("translation is a bijection", [x])
    for y in range(Y.size):
        for x1 in range(X.size):
            for x2 in range(X.size):
                expected = Y.act(Y.act(Y.act_inverse(y, x2), x1), x2)
                if Y.act(y, X.op(x1, x2)) != expected:
                    return fail("y·(x1◁x2) = ((y·x2⁻¹)·x1)·x2", [y, x1, x2])
        for x in range(X.size):
            if Y.act(y, rho(x)) != Y.act_inverse(y, x):
                return fail("y·ρ(x) = y·x⁻¹", [y, x])
    return VerificationReport(subject=subject, passed=True, violations=[])


class Chain:
    """Finitely supported integer combination of basis tuples."""

    __slots__ = ("degree", "has_y", "terms")

    def __init__(self, degree: int, terms: dict[Key, int] | None = None, has_y: bool = False):
        self.degree = degree
        self.has_y = has_y
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def from_pairs(cls, degree: int, pairs: Iterable[tuple[Key, int]], has_y: bool = False) -> "Chain":
        acc: dict[Key, int] = defaultdict(int)
        for key, coeff in pairs:
            acc[tuple(key)] += coeff
        return cls(degree, acc, has_y)

    @classmethod
    def basis(cls, key: Key, has_y: bool = False) -> "Chain":
        return cls(len(key) - (1 if has_y else 0), {tuple(key): 1}, has_y)

    def _check(self, other: "Chain"):
        if other.degree != self.degree or other.has_y != self.has_y:
            raise DomainError("chains of different degree or coefficient set")

    def __add__(self, other: "Chain") -> "Chain":
        self._check(other)
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return Chain(self.degree, acc, self.has_y)

    def __neg__(self) -> "Chain":
        return Chain(self.degree, {k: -v for k, v in self.terms.items()}, self.has_y)

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "Chain":
        return Chain(self.degree, {k: scalar * v for k, v in self.terms.items()}, self.has_y)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Chain):
            return NotImplemented
        return (self.degree, self.has_y, self.terms) == (other.degree, other.has_y, other.terms)

    def __repr__(self) -> str:
        return f"Chain(degree={self.degree}, terms={dict(sorted(self.terms.items()))})"

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list[Key]:
        return sorted(self.terms)

    def items(self) -> list[tuple[Key, int]]:
        return sorted(self.terms.items())


class Cochain:
    """Integer function on degree-n tuples; tuples outside the stored map evaluate to 0."""

    __slots__ = ("degree", "has_y", "values")

    def __init__(self, degree: int, values: dict[Key, int] | None = None, has_y: bool = False):
        self.degree = degree
        self.has_y = has_y
        self.values = {k: v for k, v in (values or {}).items() if v}

    def __call__(self, key: Key) -> int:
        return self.values.get(tuple(key), 0)

    def __add__(self, other: "Cochain") -> "Cochain":
        acc = dict(self.values)
        for k, v in other.values.items():
            acc[k] = acc.get(k, 0) + v
        return Cochain(self.degree, acc, self.has_y)

    def __neg__(self) -> "Cochain":
        return Cochain(self.degree, {k: -v for k, v in self.values.items()}, self.has_y)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "Cochain":
        return Cochain(self.degree, {k: scalar * v for k, v in self.values.items()}, self.has_y)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.degree, self.has_y, self.values) == (other.degree, other.has_y, other.values)


def characteristic(key: Key, has_y: bool = False) -> Cochain:
    return Cochain(len(key) - (1 if has_y else 0), {tuple(key): 1}, has_y)


def evaluate(theta: Cochain, chain: Chain) -> int:
    return sum(coeff * theta(key) for key, coeff in chain.terms.items())


def pi_forget(z: Chain) -> Chain:
    """Delete the Y slot: (y, x₁,…,x_n) ↦ (x₁,…,x_n)."""
    if not z.has_y:
        raise DomainError("chain has no Y slot to forget")
    return Chain.from_pairs(z.degree, ((key[1:], coeff) for key, coeff in z.terms.items()))


def chain_from_model(model: ChainModel, X: FiniteQuandle, Y: XSetAction | None = None) -> Chain:
    has_y = any(term.y is not None for term in model.terms)
    if has_y and Y is None:
        raise DomainError("chain has Y entries but no (X,ρ)-set was given")
    pairs = []
    for term in model.terms:
        for x in term.x:
            if not 0 <= x < X.size:
                raise DomainError(f"element {x} outside the quandle", witness=term.x)
        if has_y:
            if term.y is None:
                raise DomainError("every term needs a y entry when any term has one", witness=term.x)
            key = (Y.index_of(term.y), *term.x)
        else:
            key = tuple(term.x)
        pairs.append((key, term.coeff))
    return Chain.from_pairs(model.degree, pairs, has_y=has_y)


def chain_to_model(chain: Chain, Y: XSetAction | None = None) -> ChainModel:
    terms = []
    for key, coeff in chain.items():
        if chain.has_y:
            label = Y.labels[key[0]] if Y is not None else str(key[0])
            terms.append(ChainTermModel(coeff=coeff, y=label, x=list(key[1:])))
        else:
            terms.append(ChainTermModel(coeff=coeff, x=list(key)))
    return ChainModel(degree=chain.degree, terms=terms)
