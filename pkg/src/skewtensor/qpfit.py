"""Quasi-polynomial fitting for integer sequences.

A quasi-polynomial of period m is a list of m polynomials f_0 ... f_{m-1}
with value f_{n mod m}(n).  Fitting is exact (Fraction arithmetic) and
accepts a candidate only when every residue class is supported by at least
degree + 2 data points — one more than interpolation needs, so every class
contains genuine evidence rather than a forced fit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class QuasiPolynomial:
    """period polynomials, coefficients low-degree first, integer-valued."""

    period: int
    polys: tuple                # period tuples of int coefficients
    offset: int                 # first index the fit covers

    def eval(self, n: int) -> int:
        coeffs = self.polys[n % self.period]
        acc = 0
        for c in reversed(coeffs):
            acc = acc * n + c
        return acc

    def degree(self) -> int:
        return max((len(c) - 1 for c in self.polys), default=0)

    def __str__(self):
        texts = [_poly_str(c) for c in self.polys]
        if self.period == 1:
            return texts[0]
        if self.period == 2:    # bracket notation lists the odd class first
            texts = [texts[1], texts[0]]
        return "[" + ", ".join(texts) + "]"

    def to_json(self):
        return {"period": self.period,
                "polys": [list(c) for c in self.polys],
                "offset": self.offset}

    @classmethod
    def from_json(cls, data) -> "QuasiPolynomial":
        return cls(data["period"], tuple(tuple(c) for c in data["polys"]),
                   data["offset"])


def _poly_str(coeffs) -> str:
    terms = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if c == 0 and not (d == 0 and not terms):
            continue
        if d == 0:
            base = str(abs(c))
        else:
            mon = "x" if d == 1 else f"x^{d}"
            base = mon if abs(c) == 1 else f"{abs(c)}{mon}"
        if not terms:
            terms.append(base if c >= 0 else "-" + base)
        else:
            terms.append(("+ " if c >= 0 else "- ") + base)
    return " ".join(terms) if terms else "0"


def _newton_interpolate(points):
    """Integer-coefficient interpolant through the points, or None."""
    xs = [Fraction(n) for n, _ in points]
    ys = [Fraction(v) for _, v in points]
    k = len(points)
    newton = []
    col = ys
    newton.append(col[0])
    for level in range(1, k):
        col = [(col[i + 1] - col[i]) / (xs[i + level] - xs[i])
               for i in range(len(col) - 1)]
        newton.append(col[0])
    # drop trailing zero divided differences to get the true degree
    while len(newton) > 1 and newton[-1] == 0:
        newton.pop()
    poly = [Fraction(0)]
    for c in reversed(range(len(newton))):
        # poly = poly * (x - xs[c]) + newton[c]
        shifted = [Fraction(0)] + poly
        poly = [shifted[d] - xs[c] * (poly[d] if d < len(poly) else 0)
                for d in range(len(shifted))]
        poly[0] += newton[c]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    if any(c.denominator != 1 for c in poly):
        return None
    return tuple(int(c) for c in poly)


def fit(seq, m_max: int = 4, d_max: int = 3):
    """Minimal-period, then minimal-degree quasi-polynomial through seq.

    seq is a list of (n, value) with consecutive n.  Returns None when no
    candidate within the bounds interpolates all points with the evidence
    bar (every residue class holds >= degree + 2 points) satisfied.
    """
    seq = sorted(seq)
    if not seq:
        return None
    ns = [n for n, _ in seq]
    if ns != list(range(ns[0], ns[0] + len(ns))):
        raise ValueError("sequence indices must be consecutive")
    for m in range(1, m_max + 1):
        classes = [[p for p in seq if p[0] % m == rem] for rem in range(m)]
        if any(not cls for cls in classes):
            continue
        polys = []
        for cls in classes:
            poly = _newton_interpolate(cls)
            if poly is None:
                break
            if len(poly) - 1 > d_max or len(cls) < (len(poly) - 1) + 2:
                break
            polys.append(poly)
        else:
            return QuasiPolynomial(m, tuple(polys), ns[0])
    return None


def evaluate(qp: QuasiPolynomial, n: int) -> int:
    if n < qp.offset:
        raise ValueError(f"index {n} precedes the fitted range ({qp.offset})")
    return qp.eval(n)
