"""Gauss codes of (possibly virtual) knot diagrams and their arc structure."""

import re
from dataclasses import dataclass

from errors import DomainError

_TOKEN = re.compile(r"([OU])(\d+)([+\-−])")


@dataclass(frozen=True)
class Visit:
    label: int
    over: bool
    sign: int

    def __str__(self) -> str:
        return f"{'O' if self.over else 'U'}{self.label}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Crossing:
    """Under-arc in/out and over-arc indices of one classical crossing."""

    label: int
    sign: int
    over_arc: int
    in_arc: int
    out_arc: int


@dataclass(frozen=True)
class GaussCode:
    visits: tuple[Visit, ...]
    crossings: tuple[Crossing, ...]
    arc_count: int

    @property
    def is_unknot(self) -> bool:
        return not self.visits

    def __str__(self) -> str:
        return "".join(str(v) for v in self.visits)

    def rotated(self, shift: int) -> "GaussCode":
        if not self.visits:
            return self
        k = shift % len(self.visits)
        return gauss_code_from_visits(self.visits[k:] + self.visits[:k])


def parse_gauss_code(text: str) -> GaussCode:
    """Parse codes like ``"O1+U2+O3+U1+O2+U3+"``; the empty string is the unknot."""
    compact = "".join(text.split())
    visits = []
    position = 0
    for match in _TOKEN.finditer(compact):
        if match.start() != position:
            raise DomainError(f"unexpected text at position {position}: {compact[position:]!r}")
        kind, label, sign = match.groups()
        visits.append(Visit(int(label), kind == "O", 1 if sign == "+" else -1))
        position = match.end()
    if position != len(compact):
        raise DomainError(f"unexpected text at position {position}: {compact[position:]!r}")
    return gauss_code_from_visits(tuple(visits))


def gauss_code_from_visits(visits: tuple[Visit, ...]) -> GaussCode:
    if not visits:
        return GaussCode((), (), 1)
    seen: dict[int, list[Visit]] = {}
    for visit in visits:
        seen.setdefault(visit.label, []).append(visit)
    for label, pair in seen.items():
        if len(pair) != 2:
            raise DomainError(f"crossing {label} appears {len(pair)} time(s), expected 2", witness=label)
        if pair[0].over == pair[1].over:
            raise DomainError(f"crossing {label} needs one over and one under visit", witness=label)
        if pair[0].sign != pair[1].sign:
            raise DomainError(f"crossing {label} has mismatched signs", witness=label)

    under_positions = [p for p, v in enumerate(visits) if not v.over]
    k = len(under_positions)

    def arc_at(position: int) -> int:
        before = sum(1 for u in under_positions if u < position)
        return (before - 1) % k

    over_arc = {v.label: arc_at(p) for p, v in enumerate(visits) if v.over}
    crossings = []
    for j, p in enumerate(under_positions):
        visit = visits[p]
        crossings.append(Crossing(visit.label, visit.sign, over_arc[visit.label], (j - 1) % k, j))
    return GaussCode(tuple(visits), tuple(crossings), k)
