"""Signed permutation matrices in column-tuple notation.

A signed permutation of size m is stored as a tuple of m nonzero integers. Entry k
(1-based) equals ``ε_k·σ(k)``: column k of the matrix is ``ε_k·e_{σ(k)}``.
"""

import re
from dataclasses import dataclass

import numpy as np

from errors import DomainError

_NOTATION = re.compile(r"^\(\s*([+\-−]?\d+(?:\s*,\s*[+\-−]?\d+)*)\s*\)$")


@dataclass(frozen=True, slots=True)
class SignedPermutation:
    image: tuple[int, ...]

    def __post_init__(self):
        size = len(self.image)
        if size == 0:
            raise DomainError("signed permutation must have size >= 1")
        targets = sorted(abs(v) for v in self.image)
        if targets != list(range(1, size + 1)):
            raise DomainError("targets must form a permutation of 1..m", witness=list(self.image))

    @property
    def size(self) -> int:
        return len(self.image)

    @property
    def signs(self) -> tuple[int, ...]:
        return tuple(1 if v > 0 else -1 for v in self.image)

    @property
    def targets(self) -> tuple[int, ...]:
        return tuple(abs(v) for v in self.image)

    def sort_key(self) -> tuple[tuple[int, int], ...]:
        """Total order on image arrays: lexicographic on (target, sign)."""
        return tuple((abs(v), 1 if v > 0 else -1) for v in self.image)

    def is_diagonal(self) -> bool:
        return all(abs(v) == k for k, v in enumerate(self.image, start=1))

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return compose(self, other)

    def __str__(self) -> str:
        return format_notation(self)

    def matrix(self) -> np.ndarray:
        """Dense integer view for debugging and verification only."""
        m = np.zeros((self.size, self.size), dtype=np.int64)
        for k, v in enumerate(self.image):
            m[abs(v) - 1, k] = 1 if v > 0 else -1
        return m


def identity(m: int) -> SignedPermutation:
    if m < 1:
        raise DomainError(f"identity size must be >= 1, got {m}")
    return SignedPermutation(tuple(range(1, m + 1)))


def diagonal(signs: tuple[int, ...] | list[int]) -> SignedPermutation:
    """Diagonal element I_ε with the given signs."""
    if any(s not in (1, -1) for s in signs):
        raise DomainError("diagonal signs must be +1 or -1", witness=list(signs))
    return SignedPermutation(tuple(s * k for k, s in enumerate(signs, start=1)))


def compose(p: SignedPermutation, q: SignedPermutation) -> SignedPermutation:
    """Matrix product p·q."""
    if p.size != q.size:
        raise DomainError(f"size mismatch: {p.size} vs {q.size}")
    pi = p.image
    return SignedPermutation(tuple(pi[v - 1] if v > 0 else -pi[-v - 1] for v in q.image))


def inverse(p: SignedPermutation) -> SignedPermutation:
    out = [0] * p.size
    for k, v in enumerate(p.image, start=1):
        out[abs(v) - 1] = k if v > 0 else -k
    return SignedPermutation(tuple(out))


def power(p: SignedPermutation, k: int) -> SignedPermutation:
    base = p if k >= 0 else inverse(p)
    result = identity(p.size)
    for _ in range(abs(k)):
        result = compose(result, base)
    return result


def determinant(p: SignedPermutation) -> int:
    # Parity of the underlying permutation from its cycle lengths
    seen = [False] * p.size
    parity = 0
    for start in range(p.size):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = abs(p.image[k]) - 1
            length += 1
        parity += length - 1
    sign = -1 if parity % 2 else 1
    for s in p.signs:
        sign *= s
    return sign


def strip_signs(p: SignedPermutation) -> SignedPermutation:
    return SignedPermutation(p.targets)


def parse_notation(text: str) -> SignedPermutation:
    """Parse the display notation, e.g. ``"(1,3,-2)"``."""
    match = _NOTATION.match(text.strip())
    if not match:
        raise DomainError(f"malformed signed permutation: {text!r}")
    values = [int(tok.strip().replace("−", "-")) for tok in match.group(1).split(",")]
    size = len(values)
    seen = set()
    for v in values:
        if v == 0 or abs(v) > size:
            raise DomainError(f"entry {v} out of range 1..{size}", witness=text)
        if abs(v) in seen:
            raise DomainError(f"repeated magnitude {abs(v)}", witness=text)
        seen.add(abs(v))
    return SignedPermutation(tuple(values))


def format_notation(p: SignedPermutation) -> str:
    return "(" + ",".join(str(v) for v in p.image) + ")"
