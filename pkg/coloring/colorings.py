"""Counting quandle colorings of Gauss-code diagrams."""

import logging
from collections.abc import Iterator
from dataclasses import dataclass

from coloring.gauss_code import GaussCode
from errors import DomainError
from quandles.core import FiniteQuandle
from quandles.cosets import QuandleHom

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    def is_constant(self) -> bool:
        return len(set(self.colors)) <= 1


def _out_color(Q: FiniteQuandle, sign: int, incoming: int, over: int) -> int:
    return Q.op(incoming, over) if sign > 0 else Q.op_inverse(incoming, over)


def _in_color(Q: FiniteQuandle, sign: int, outgoing: int, over: int) -> int:
    return Q.op_inverse(outgoing, over) if sign > 0 else Q.op(outgoing, over)


def is_valid_coloring(Q: FiniteQuandle, code: GaussCode, coloring: Coloring) -> bool:
    colors = coloring.colors
    if len(colors) != code.arc_count or any(not 0 <= c < Q.size for c in colors):
        return False
    return all(
        colors[c.out_arc] == _out_color(Q, c.sign, colors[c.in_arc], colors[c.over_arc]) for c in code.crossings
    )


def _propagate(Q: FiniteQuandle, code: GaussCode, colors: list[int]) -> bool:
    changed = True
    while changed:
        changed = False
        for c in code.crossings:
            over = colors[c.over_arc]
            if over < 0:
                continue
            incoming, outgoing = colors[c.in_arc], colors[c.out_arc]
            if incoming >= 0:
                expected = _out_color(Q, c.sign, incoming, over)
                if outgoing < 0:
                    colors[c.out_arc] = expected
                    changed = True
                elif outgoing != expected:
                    return False
            elif outgoing >= 0:
                colors[c.in_arc] = _in_color(Q, c.sign, outgoing, over)
                changed = True
    return True


def enumerate_colorings(Q: FiniteQuandle, code: GaussCode) -> Iterator[Coloring]:
    """All valid colorings in lexicographic order of arc colors."""

    def search(colors: list[int]) -> Iterator[Coloring]:
        if not _propagate(Q, code, colors):
            return
        try:
            arc = colors.index(-1)
        except ValueError:
            yield Coloring(tuple(colors))
            return
        for color in range(Q.size):
            trial = list(colors)
            trial[arc] = color
            yield from search(trial)

    found = sorted(search([-1] * code.arc_count), key=lambda col: col.colors)
    yield from found


def count_colorings(Q: FiniteQuandle, code: GaussCode) -> int:
    total = sum(1 for _ in enumerate_colorings(Q, code))
    logger.debug("%s: %d colorings by a %d-element quandle", code, total, Q.size)
    return total


def count_nontrivial_colorings(Q: FiniteQuandle, code: GaussCode) -> int:
    return count_colorings(Q, code) - Q.size


def project_coloring(f: QuandleHom, code: GaussCode, coloring: Coloring) -> Coloring:
    if not is_valid_coloring(f.source, code, coloring):
        raise DomainError("coloring is not valid for the source quandle", witness=list(coloring.colors))
    image = Coloring(tuple(f(c) for c in coloring.colors))
    if not is_valid_coloring(f.target, code, image):
        raise DomainError("image is not a coloring of the target quandle", witness=list(image.colors))
    return image
