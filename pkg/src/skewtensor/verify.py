"""Self-contained verification of the embedded expected results.

Each checker recomputes from scratch and diffs against the frozen data in
`tabledata`; reports are plain structures shared by the CLI and the test
suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import tabledata
from .decompose import decompose
from .modules import SkewPartition, dual_alpha, from_skew_partition, tensor_alpha
from .powerlab import pv_sequence
from .qpfit import QuasiPolynomial, fit
from .shapes import canonicalize, enumerate_shapes


@dataclass
class CheckResult:
    label: str
    ok: bool
    got: object
    want: object

    def line(self) -> str:
        status = "ok" if self.ok else "MISMATCH"
        out = f"{self.label}: {status}"
        if not self.ok:
            out += f" (got {self.got}, want {self.want})"
        return out


@dataclass
class Report:
    name: str
    checks: list

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self):
        return {"name": self.name, "ok": self.ok,
                "checks": [{"label": c.label, "ok": c.ok,
                            "got": _jsonable(c.got), "want": _jsonable(c.want)}
                           for c in self.checks]}


def _jsonable(v):
    if isinstance(v, QuasiPolynomial):
        return v.to_json()
    if isinstance(v, tuple):
        return list(map(_jsonable, v))
    return v


_DIM_TABLES = {3: tabledata.DIM3_MULTISETS,
               5: tabledata.DIM5_MULTISETS,
               7: tabledata.DIM7_MULTISETS}


def verify_dim_table(dim: int, seed: int = 0) -> Report:
    """Recompute the V (x) V* multiset for every shape of the given dimension."""
    table = _DIM_TABLES[dim]
    by_orbit = {canonicalize(SkewPartition.parse(txt)).cells: (txt, want)
                for txt, want in table.items()}
    checks = []
    for cs in enumerate_shapes(dim, 4, 4):
        entry = by_orbit.get(cs.cells)
        if entry is None:
            checks.append(CheckResult(str(cs.shape), False, "enumerated", "absent"))
            continue
        txt, want = entry
        v = from_skew_partition(cs.shape, cs.params)
        dec = decompose(tensor_alpha(v, dual_alpha(v)), seed=seed)
        checks.append(CheckResult(txt, dec.dims() == sorted(want),
                                  dec.dims(), sorted(want)))
    if len(checks) != len(table):
        checks.append(CheckResult("orbit count", False, len(checks), len(table)))
    return Report(f"dim{dim}", checks)


def _fit_run(txt, rs, n_max, seed):
    shape = SkewPartition.parse(txt)
    from .modules import GroupSchemeParams
    run = pv_sequence(shape, GroupSchemeParams(*rs), n_max=n_max, seed=seed)
    return run, fit(run.sequence)


def _needed_points(period, polys) -> int:
    deg = max(len(c) - 1 for c in polys)
    return period * (deg + 2)


def verify_fit_rows(rows, seed: int = 0, n_max: int | None = None) -> list:
    checks = []
    for txt, rs, period, polys in rows:
        nm = n_max if n_max is not None else _needed_points(period, polys)
        run, got = _fit_run(txt, rs, nm, seed)
        want = QuasiPolynomial(period, tuple(tuple(c) for c in polys), 1)
        ok = (got is not None and got.period == want.period
              and got.polys == want.polys)
        checks.append(CheckResult(f"{txt} over alpha{rs}", ok,
                                  got if got else "no fit", want))
    return checks


def verify_corollaries(seed: int = 0) -> Report:
    return Report("corollaries",
                  verify_fit_rows(tabledata.COROLLARY_FITS, seed=seed))


def verify_table12_subset(seed: int = 0) -> Report:
    return Report("table12-subset",
                  verify_fit_rows(tabledata.TABLE12_SUBSET, seed=seed, n_max=8))


VERIFIERS = {
    "dim3": lambda seed: verify_dim_table(3, seed),
    "dim5": lambda seed: verify_dim_table(5, seed),
    "dim7": lambda seed: verify_dim_table(7, seed),
    "corollaries": verify_corollaries,
    "table12-subset": verify_table12_subset,
}
