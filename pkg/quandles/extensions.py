"""Symmetric 2-cocycles and the extensions X ×_φ A they define."""

import numpy as np

from errors import DomainError
from models import VerificationReport, Violation
from quandles.core import FiniteQuandle, GoodInvolution
from quandles.cosets import QuandleHom

# A 2-cochain is a q×q integer table phi[x][y]; the coefficient group is Z_modulus, or Z when modulus is None.


def _reduce(value: int, modulus: int | None) -> int:
    return value if not modulus else value % modulus


def verify_symmetric_2cocycle(
    X: FiniteQuandle, rho: GoodInvolution, phi: list[list[int]], modulus: int | None = None
) -> VerificationReport:
    q = X.size
    subject = "symmetric 2-cocycle"

    def fail(condition: str, witness: list[int]) -> VerificationReport:
        return VerificationReport(subject=subject, passed=False, violations=[Violation(condition=condition, witness=witness)])

    for x in range(q):
        if _reduce(phi[x][x], modulus) != 0:
            return fail("φ(x,x) = 0", [x])
    for x1 in range(q):
        for x2 in range(q):
            x12 = X.op(x1, x2)
            for x3 in range(q):
                lhs = phi[x1][x2] + phi[x12][x3]
                rhs = phi[x1][x3] + phi[X.op(x1, x3)][X.op(x2, x3)]
                if _reduce(lhs - rhs, modulus) != 0:
                    return fail("φ(x1,x2) + φ(x1◁x2,x3) = φ(x1,x3) + φ(x1◁x3,x2◁x3)", [x1, x2, x3])
    for x1 in range(q):
        for x2 in range(q):
            if _reduce(phi[x1][x2] + phi[rho(x1)][x2], modulus) != 0:
                return fail("φ(x1,x2) + φ(ρ(x1),x2) = 0", [x1, x2])
            if _reduce(phi[x1][x2] + phi[X.op(x1, x2)][rho(x2)], modulus) != 0:
                return fail("φ(x1,x2) + φ(x1◁x2,ρ(x2)) = 0", [x1, x2])
    return VerificationReport(subject=subject, passed=True, violations=[])


def coboundary_2cocycle(X: FiniteQuandle, psi: list[int], modulus: int | None = None) -> list[list[int]]:
    """δψ(x,y) = ψ(x) − ψ(x◁y); symmetric whenever ψ∘ρ = −ψ."""
    q = X.size
    return [[_reduce(psi[x] - psi[X.op(x, y)], modulus) for y in range(q)] for x in range(q)]


def cocycle_extension(
    X: FiniteQuandle, rho: GoodInvolution, phi: list[list[int]], modulus: int
) -> tuple[FiniteQuandle, GoodInvolution, QuandleHom]:
    """(x,a) ◁ (y,b) = (x◁y, a + φ(x,y)) and ρ̃(x,a) = (ρ(x), −a), on X × Z_modulus."""
    if not modulus or modulus < 1:
        raise DomainError("the extension needs a finite cyclic coefficient group")
    report = verify_symmetric_2cocycle(X, rho, phi, modulus)
    if not report.passed:
        raise DomainError("not a symmetric 2-cocycle", witness=report.violations[0].model_dump())

    def index(x: int, a: int) -> int:
        return x * modulus + a

    q = X.size
    labels = tuple(f"({X.labels[x]},{a})" for x in range(q) for a in range(modulus))
    table = []
    for x in range(q):
        for a in range(modulus):
            table.append(
                tuple(index(X.op(x, y), (a + phi[x][y]) % modulus) for y in range(q) for _ in range(modulus))
            )
    extended = FiniteQuandle(labels, tuple(table))
    rho_tilde = GoodInvolution(tuple(index(rho(x), (-a) % modulus) for x in range(q) for a in range(modulus)))
    projection = QuandleHom(extended, X, tuple(x for x in range(q) for _ in range(modulus)))
    return extended, rho_tilde, projection


def _row_reduce_mod(matrix: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over Z_p (p prime) and the pivot columns."""
    A = np.array(matrix, dtype=np.int64) % p
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def _check_prime(p: int):
    if p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
        raise DomainError(f"coefficients must be Z_p for a prime p, got {p}")


def symmetric_2cocycle_equations(X: FiniteQuandle, rho: GoodInvolution) -> np.ndarray:
    """One row per condition checked by ``verify_symmetric_2cocycle``; column x·q + y is φ(x,y)."""
    q = X.size
    rows = []

    def row(*terms: tuple[int, int, int]):
        out = [0] * (q * q)
        for x, y, coeff in terms:
            out[x * q + y] += coeff
        rows.append(out)

    for x in range(q):
        row((x, x, 1))
    for x1 in range(q):
        for x2 in range(q):
            for x3 in range(q):
                row((x1, x2, 1), (X.op(x1, x2), x3, 1), (x1, x3, -1), (X.op(x1, x3), X.op(x2, x3), -1))
            row((x1, x2, 1), (rho(x1), x2, 1))
            row((x1, x2, 1), (X.op(x1, x2), rho(x2), 1))
    return np.array(rows, dtype=np.int64)


def symmetric_2cocycle_basis(X: FiniteQuandle, rho: GoodInvolution, modulus: int) -> list[list[list[int]]]:
    """Basis of the Z_p-space of symmetric 2-cocycles, each as a q×q table."""
    _check_prime(modulus)
    q = X.size
    A, pivots = _row_reduce_mod(symmetric_2cocycle_equations(X, rho), modulus)
    basis = []
    for free in (c for c in range(q * q) if c not in pivots):
        v = [0] * (q * q)
        v[free] = 1
        for i, c in enumerate(pivots):
            v[c] = int(-A[i, free]) % modulus
        basis.append([v[x * q : (x + 1) * q] for x in range(q)])
    return basis


def is_coboundary(X: FiniteQuandle, phi: list[list[int]], modulus: int) -> bool:
    """φ = δψ for some ψ: X → Z_p."""
    _check_prime(modulus)
    q = X.size
    columns = np.zeros((q * q, q + 1), dtype=np.int64)
    for x in range(q):
        for y in range(q):
            columns[x * q + y, x] += 1
            columns[x * q + y, X.op(x, y)] -= 1
            columns[x * q + y, q] = phi[x][y]
    _, with_phi = _row_reduce_mod(columns, modulus)
    _, without = _row_reduce_mod(columns[:, :q], modulus)
    return len(with_phi) == len(without)
