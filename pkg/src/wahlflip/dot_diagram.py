"""Riemenschneider dot diagrams.

Row ``i`` holds ``b_i - 1`` dots and starts in the column of the last dot of
row ``i - 1``.  Coordinates are 1-based ``(row, col)`` pairs; row 1 is on top.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate

from .errors import InvalidChain
from .hj_core import Chain, check_hj_chain
from .wahl import is_class_w

Dot = tuple[int, int]


@dataclass(frozen=True)
class DotDiagram:
    rows: tuple[tuple[int, int], ...]  # (start_col, length)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        start, length = self.rows[-1]
        return start + length - 1

    @property
    def n_dots(self) -> int:
        return sum(length for _, length in self.rows)

    def dots(self) -> list[Dot]:
        """All dots in row-major order."""
        return [
            (i, j)
            for i, (start, length) in enumerate(self.rows, 1)
            for j in range(start, start + length)
        ]

    def column_counts(self) -> list[int]:
        # Row i+1 starts in the last column of row i, so a column holds one dot
        # plus one more for every row (other than the last) ending in it.
        counts = [1] * self.n_cols
        for start, length in self.rows[:-1]:
            counts[start + length - 2] += 1
        return counts

    def chain(self) -> Chain:
        return tuple(length + 1 for _, length in self.rows)


@dataclass(frozen=True)
class DeltaPosition:
    row: int
    col: int


def build(chain) -> DotDiagram:
    chain = check_hj_chain(chain)
    starts = accumulate([b - 2 for b in chain[:-1]], initial=1)
    return DotDiagram(tuple(zip(starts, [b - 1 for b in chain])))


def from_dots(dots) -> DotDiagram:
    """Read a set of dots as a staircase diagram.

    Empty rows are dropped and the remaining rows renumbered; columns are
    shifted so the first row starts in column 1.  Raises ``InvalidChain`` if
    the dots do not form a staircase.
    """
    by_row: dict[int, list[int]] = {}
    for i, j in dots:
        by_row.setdefault(i, []).append(j)
    if not by_row:
        raise InvalidChain("no dots")
    rows = []
    for i in sorted(by_row):
        cols = sorted(by_row[i])
        if cols != list(range(cols[0], cols[0] + len(cols))):
            raise InvalidChain(f"row {i} is not contiguous")
        rows.append((cols[0], len(cols)))
    shift = rows[0][0] - 1
    rows = [(s - shift, n) for s, n in rows]
    for (s0, n0), (s1, _) in zip(rows, rows[1:]):
        if s1 != s0 + n0 - 1:
            raise InvalidChain("rows do not form a staircase")
    return DotDiagram(tuple(rows))


def dual_from_diagram(diagram: DotDiagram) -> Chain:
    return tuple([c + 1 for c in diagram.column_counts()])


def step_word(diagram: DotDiagram) -> str:
    """Moves between consecutive dots: ``R`` one column right, ``D`` one row down."""
    return "D".join("R" * (length - 1) for _, length in diagram.rows)


def rotation_fixes(diagram: DotDiagram, center: Dot) -> bool:
    """Whether the half-turn about ``center`` maps the dot set onto itself."""
    dots = set(diagram.dots())
    ci, cj = center
    return center in dots and {(2 * ci - i, 2 * cj - j) for i, j in dots} == dots


def middle_dot(diagram: DotDiagram) -> Dot:
    dots = diagram.dots()
    return dots[len(dots) // 2]


def is_half_turn_symmetric(diagram: DotDiagram) -> bool:
    """Point symmetry about the middle dot, in exact integer coordinates."""
    if diagram.n_dots % 2 == 0:
        return False
    return rotation_fixes(diagram, middle_dot(diagram))


def is_symmetric(diagram: DotDiagram) -> bool:
    """Symmetry of the diagram about its middle dot.

    Reading the step word outwards from the middle dot, the two steps next to
    it are both ``R`` (the three dots of ``[4]``) and every further pair is one
    ``D`` and one ``R``: a dot stacked above the first dot is matched by a dot
    to the right of the last one, and a dot to the left of the first by one
    under the last.  A single dot counts as symmetric.
    """
    if diagram.n_dots % 2 == 0:
        return False
    word = step_word(diagram)
    if not word:
        return True
    half = len(word) // 2
    if word[half - 1 : half + 1] != "RR":
        return False
    return all(word[k] != word[-1 - k] for k in range(half - 1))


def delta_position(chain) -> DeltaPosition:
    # Both class-W moves add one dot at each end of the staircase, so the
    # middle dot in row-major order stays the center of the symmetry.
    is_class_w(chain)
    i, j = middle_dot(build(chain))
    return DeltaPosition(i, j)


def delta_half(chain) -> Chain:
    chain = check_hj_chain(chain)
    delta = delta_position(chain)
    start, _ = build(chain).rows[delta.row - 1]
    return chain[: delta.row - 1] + (delta.col - start + 2,)


def render(diagram: DotDiagram, delta: DeltaPosition | None = None) -> str:
    """ASCII picture: ``o`` dot, ``@`` delta dot, ``.`` empty."""
    lines = []
    for i, (start, length) in enumerate(diagram.rows, 1):
        cells = []
        for j in range(1, diagram.n_cols + 1):
            if not start <= j < start + length:
                cells.append(".")
            elif delta is not None and (i, j) == (delta.row, delta.col):
                cells.append("@")
            else:
                cells.append("o")
        lines.append("".join(cells))
    return "\n".join(lines)
