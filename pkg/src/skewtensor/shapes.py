"""Enumeration of connected skew diagrams up to symmetry.

Diagrams that differ by 180-degree rotation or diagonal flip give isomorphic
(or flip-related) modules, so sweeps work with one representative per orbit
of the Klein four-group those two symmetries generate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modules import GroupSchemeParams, SkewPartition, cells_to_skew


@dataclass(frozen=True)
class CanonicalShape:
    """Orbit representative of a connected skew diagram."""

    cells: tuple
    shape: SkewPartition
    params: GroupSchemeParams      # minimal (r, s) for this shape

    def __str__(self):
        return str(self.shape)


def _normalize(cells) -> tuple:
    di = 1 - min(i for i, _ in cells)
    dj = 1 - min(j for _, j in cells)
    return tuple(sorted((i + di, j + dj) for i, j in cells))


def _orbit(cells):
    cells = list(cells)
    yield _normalize(cells)
    yield _normalize([(-i, -j) for i, j in cells])          # 180 rotation
    yield _normalize([(j, i) for i, j in cells])            # diagonal flip
    yield _normalize([(-j, -i) for i, j in cells])          # both


def canonicalize(shape: SkewPartition) -> CanonicalShape:
    """Deterministic representative of the symmetry orbit of a connected shape."""
    if not shape.is_connected():
        raise ValueError(f"shape {shape} is disconnected")
    rep = min(_orbit(shape.cells()))
    rep_shape = cells_to_skew(rep)
    return CanonicalShape(rep, rep_shape, rep_shape.minimal_params())


def _search(dim: int, max_len: int):
    """Yield connected skew shapes with `dim` cells as interval stacks."""
    results = []

    def rec(rows, used):
        a_prev, b_prev = rows[-1]
        if a_prev == 0 and used == dim:
            results.append(list(rows))
        if used == dim:
            return
        # add a row (a, b] with a <= a_prev, b <= b_prev, overlap b > a_prev,
        # so shared column exists: need b >= a_prev + 1 and a < b
        for b in range(a_prev + 1, b_prev + 1):
            for length in range(1, min(b, max_len, dim - used) + 1):
                a = b - length
                if a > a_prev:
                    continue
                rec(rows + [(a, b)], used + length)

    for length in range(1, min(dim, max_len) + 1):
        # top row may start at any a >= 0; only a small range can ever reach
        # a_n = 0 within the budget, and duplicates are impossible since the
        # full stack determines the shape
        for a in range(0, dim - length + 1):
            rec([(a, a + length)], length)
    return results


def enumerate_shapes(dim: int, max_r: int, max_s: int) -> list:
    """All connected skew diagrams with `dim` cells fitting in alpha(max_r, max_s),
    one per symmetry orbit, sorted by canonical cell list."""
    if dim < 1:
        raise ValueError("dim must be at least 1")
    max_h = 1 << max_r
    max_len = 1 << max_s
    seen = {}
    for rows in _search(dim, max_len):
        cells = []
        for i, (a, b) in enumerate(rows, start=1):
            cells.extend((i, j) for j in range(a + 1, b + 1))
        heights = {}
        for _, j in cells:
            heights[j] = heights.get(j, 0) + 1
        if max(heights.values()) > max_h:
            continue
        rep = min(_orbit(cells))
        if rep in seen:
            continue
        rep_shape = cells_to_skew(rep)
        seen[rep] = CanonicalShape(rep, rep_shape, rep_shape.minimal_params())
    return [seen[k] for k in sorted(seen)]


def render(shape: SkewPartition) -> str:
    """ASCII picture of the diagram, row 1 at the top."""
    cells = set(shape.cells())
    imax = max(i for i, _ in cells)
    jmax = max(j for _, j in cells)
    lines = []
    for i in range(1, imax + 1):
        lines.append("".join("[]" if (i, j) in cells else "  "
                             for j in range(1, jmax + 1)).rstrip())
    return "\n".join(lines)
