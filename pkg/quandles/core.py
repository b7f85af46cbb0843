"""Finite quandles given by full operation tables."""

import logging
from dataclasses import dataclass, field
from typing import Any

from errors import DomainError, ResourceGuardError
from models import VerificationReport, Violation
from settings import settings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteQuandle:
    """Element labels plus ``table[x][y] = x ◁ y`` on indices 0..q-1."""

    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    provenance: Any = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        q = len(self.labels)
        if len(self.table) != q or any(len(row) != q for row in self.table):
            raise DomainError(f"operation table must be {q}x{q}")
        for row in self.table:
            for v in row:
                if not 0 <= v < q:
                    raise DomainError(f"table entry {v} outside 0..{q - 1}")
        # x ◁ ȳ, defined when each column is a bijection
        inverse = [[-1] * q for _ in range(q)]
        for y in range(q):
            for x in range(q):
                inverse[self.table[x][y]][y] = x
        object.__setattr__(self, "_inverse", tuple(tuple(row) for row in inverse))

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def op_inverse(self, x: int, y: int) -> int:
        """x ◁ ȳ."""
        return self._inverse[x][y]

    def column(self, y: int) -> tuple[int, ...]:
        return tuple(self.table[x][y] for x in range(self.size))

    def index_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise DomainError(f"unknown element {label!r}") from None


@dataclass(frozen=True)
class GoodInvolution:
    rho: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.rho[x]

    def is_identity(self) -> bool:
        return all(r == x for x, r in enumerate(self.rho))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, e.g. [(0, 3), (1, 4), (2, 5)]."""
        seen = set()
        out = []
        for x in range(len(self.rho)):
            if x in seen or self.rho[x] == x:
                continue
            cycle = [x]
            seen.add(x)
            y = self.rho[x]
            while y != x:
                cycle.append(y)
                seen.add(y)
                y = self.rho[y]
            out.append(tuple(cycle))
        return out

    def describe(self) -> str:
        if self.is_identity():
            return "identity"
        return "".join("(" + " ".join(str(v) for v in c) + ")" for c in self.cycles())


def identity_involution(q: int) -> GoodInvolution:
    return GoodInvolution(tuple(range(q)))


def quandle_from_table(table: list[list[int]], labels: list[str] | None = None) -> FiniteQuandle:
    q = len(table)
    names = tuple(labels) if labels is not None else tuple(str(i) for i in range(q))
    return FiniteQuandle(names, tuple(tuple(int(v) for v in row) for row in table))


def dihedral_quandle(m: int) -> FiniteQuandle:
    if m < 1:
        raise DomainError(f"dihedral quandle order must be >= 1, got {m}")
    table = [[(2 * j - i) % m for j in range(m)] for i in range(m)]
    return quandle_from_table(table)


def trivial_quandle(q: int = 1) -> FiniteQuandle:
    return quandle_from_table([[x for _ in range(q)] for x in range(q)])


def verify_axioms(Q: FiniteQuandle) -> VerificationReport:
    """Check idempotency, right-invertibility and self-distributivity."""
    q = Q.size
    violations = []
    for x in range(q):
        if Q.op(x, x) != x:
            violations.append(Violation(condition="idempotency", witness=[x]))
            break
    for y in range(q):
        if len(set(Q.column(y))) != q:
            violations.append(Violation(condition="right-invertibility", witness=[y]))
            break
    found = False
    for x in range(q):
        for y in range(q):
            xy = Q.op(x, y)
            for z in range(q):
                if Q.op(xy, z) != Q.op(Q.op(x, z), Q.op(y, z)):
                    violations.append(Violation(condition="self-distributivity", witness=[x, y, z]))
                    found = True
                    break
            if found:
                break
        if found:
            break
    return VerificationReport(subject="quandle axioms", passed=not violations, violations=violations)


def is_connected(Q: FiniteQuandle) -> bool:
    """Transitivity of the inner automorphism group, checked from element 0."""
    if Q.size == 0:
        return True
    orbit = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for c in range(Q.size):
            for image in (Q.op(x, c), Q.op_inverse(x, c)):
                if image not in orbit:
                    orbit.add(image)
                    frontier.append(image)
    return len(orbit) == Q.size


def is_involutory(Q: FiniteQuandle) -> bool:
    return all(Q.op(Q.op(x, y), y) == x for x in range(Q.size) for y in range(Q.size))


def verify_good_involution(Q: FiniteQuandle, rho: GoodInvolution | tuple[int, ...]) -> VerificationReport:
    r = rho.rho if isinstance(rho, GoodInvolution) else tuple(rho)
    q = Q.size
    subject = "good involution"
    if sorted(r) != list(range(q)):
        return VerificationReport(
            subject=subject, passed=False, violations=[Violation(condition="permutation", witness=list(r))]
        )
    for x in range(q):
        if r[r[x]] != x:
            return VerificationReport(
                subject=subject, passed=False, violations=[Violation(condition="involution", witness=[x])]
            )
    for x in range(q):
        for y in range(q):
            if Q.op(x, r[y]) != Q.op_inverse(x, y):
                return VerificationReport(
                    subject=subject,
                    passed=False,
                    violations=[Violation(condition="x◁ρ(y) = x◁ȳ", witness=[x, y])],
                )
            if r[Q.op(x, y)] != Q.op(r[x], y):
                return VerificationReport(
                    subject=subject,
                    passed=False,
                    violations=[Violation(condition="ρ(x◁y) = ρ(x)◁y", witness=[x, y])],
                )
    return VerificationReport(subject=subject, passed=True, violations=[])


def enumerate_good_involutions(Q: FiniteQuandle, max_size: int | None = None) -> list[GoodInvolution]:
    """All good involutions, found by propagation and backtracking."""
    limit = settings.MAX_INVOLUTION_SEARCH if max_size is None else max_size
    q = Q.size
    if q > limit:
        raise ResourceGuardError(f"good-involution search limited to {limit} elements, quandle has {q}")
    inverse_columns = {}
    for y in range(q):
        inv = [0] * q
        for x in range(q):
            inv[Q.op(x, y)] = x
        inverse_columns[y] = tuple(inv)
    columns = [Q.column(z) for z in range(q)]
    candidates = [[z for z in range(q) if columns[z] == inverse_columns[y]] for y in range(q)]

    def propagate(assignment: list[int], x: int, z: int) -> list[int] | None:
        result = list(assignment)
        pending = [(x, z)]
        while pending:
            u, v = pending.pop()
            if result[u] == -1:
                if v not in candidates[u]:
                    return None
                result[u] = v
            elif result[u] != v:
                return None
            else:
                continue
            pending.append((v, u))
            for y in range(q):
                pending.append((Q.op(u, y), Q.op(v, y)))
                pending.append((Q.op_inverse(u, y), Q.op_inverse(v, y)))
        return result

    found: list[GoodInvolution] = []

    def search(assignment: list[int]):
        try:
            x = assignment.index(-1)
        except ValueError:
            found.append(GoodInvolution(tuple(assignment)))
            return
        for z in candidates[x]:
            extended = propagate(assignment, x, z)
            if extended is not None:
                search(extended)

    search([-1] * q)
    found.sort(key=lambda g: g.rho)
    logger.debug("found %d good involutions on %d elements", len(found), q)
    return found


def double_action_identity_holds(Q: FiniteQuandle, rho: GoodInvolution) -> bool:
    """(x ◁ y) ◁ y = ρ(x) whenever x is neither y nor ρ(y)."""
    for x in range(Q.size):
        for y in range(Q.size):
            if x in (y, rho(y)):
                continue
            if Q.op(Q.op(x, y), y) != rho(x):
                return False
    return True
