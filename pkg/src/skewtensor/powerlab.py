"""Tensor-power pipeline: track the odd summand V_n and the sequence P_V(n).

For odd-dimensional V every tensor power has a unique odd-dimensional
indecomposable summand V_n (with multiplicity 1), and all other summands
are expected to have dimension divisible by 4.  The pipeline computes V_n
iteratively as the odd summand of V_{n-1} (x) V, records dim V_n = P_V(n),
and raises a conjecture-violation error with full evidence the moment a
step breaks the pattern.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .decompose import Decomposition, decompose
from .modules import (GroupSchemeParams, Module, SkewPartition, dual_alpha,
                      dual_group, from_skew_partition, tensor_alpha,
                      tensor_group, trivial_module)


class ConjectureViolation(Exception):
    """A tensor-power step contradicted the expected summand pattern.

    This is a mathematical event, not a bug: the evidence payload carries
    everything needed to reproduce and inspect the step.
    """

    def __init__(self, message: str, evidence: dict):
        super().__init__(message)
        self.evidence = evidence


@dataclass
class StepReport:
    """What the decomposition of V_{n-1} (x) V looked like."""

    n: int
    odd_dim: int
    even_dims: list
    others_div4: bool
    decomposition: Decomposition


@dataclass
class PowerRun:
    """A full tensor-power run for one shape and structure."""

    shape: SkewPartition
    params: GroupSchemeParams
    structure: str              # "alpha" | "group"
    n_max: int
    seed: int
    sequence: list = field(default_factory=list)    # (n, dim V_n)
    steps: list = field(default_factory=list)       # StepReport per n >= 2
    mod4_congruent: bool = True
    trivial_mult_one: bool | None = None            # k-multiplicity in V (x) V*
    partial: bool = False

    def dims(self) -> list:
        return [d for _, d in self.sequence]

    def to_json(self):
        return {
            "shape": str(self.shape),
            "r": self.params.r,
            "s": self.params.s,
            "structure": self.structure,
            "n_max": self.n_max,
            "seed": self.seed,
            "sequence": self.sequence,
            "steps": [{"n": st.n, "odd_dim": st.odd_dim,
                       "even_dims": st.even_dims,
                       "others_div4": st.others_div4}
                      for st in self.steps],
            "mod4_congruent": self.mod4_congruent,
            "trivial_mult_one": self.trivial_mult_one,
            "partial": self.partial,
        }


def _tensor(structure: str):
    if structure == "alpha":
        return tensor_alpha
    if structure == "group":
        return tensor_group
    raise ValueError(f"unknown tensor structure {structure!r}")


def _dual(structure: str):
    return dual_alpha if structure == "alpha" else dual_group


def next_odd(v_prev: Module, v: Module, structure: str = "alpha",
             seed: int = 0, n: int = 0):
    """Odd summand of V_prev (x) V; raises ConjectureViolation if not unique."""
    if v_prev.dim % 2 == 0:
        raise ValueError("previous odd summand has even dimension")
    product = _tensor(structure)(v_prev, v)
    dec = decompose(product, seed=seed, graded_first=(structure == "alpha"))
    odd = [(m, mult) for m, mult, _ in dec.summands if m.dim % 2]
    evens = sorted(m.dim for m, mult, _ in dec.summands
                   for _ in range(mult) if m.dim % 2 == 0)
    if len(odd) != 1 or odd[0][1] != 1:
        raise ConjectureViolation(
            f"expected a unique odd summand with multiplicity 1, found "
            f"{[(m.dim, mult) for m, mult in odd]}",
            evidence={"step": n, "decomposition": dec.to_json(),
                      "structure": structure, "seed": seed,
                      "product_dim": product.dim})
    report = StepReport(n=n, odd_dim=odd[0][0].dim, even_dims=evens,
                        others_div4=all(d % 4 == 0 for d in evens),
                        decomposition=dec)
    return odd[0][0], report


def pv_sequence(shape: SkewPartition, params: GroupSchemeParams,
                structure: str = "alpha", n_max: int = 6,
                seed: int = 0) -> PowerRun:
    """Run the pipeline up to n_max, checking every attached conjecture."""
    v = from_skew_partition(shape, params)
    if v.dim % 2 == 0:
        raise ValueError(f"shape {shape} has even dimension {v.dim}")
    if not shape.is_connected():
        raise ValueError(f"shape {shape} is disconnected")
    if structure == "group":
        v = v.ungraded()
    run = PowerRun(shape, params, structure, n_max, seed,
                   sequence=[(1, v.dim)])
    dim_v = v.dim
    cur = v
    for n in range(2, n_max + 1):
        cur, report = next_odd(cur, v, structure=structure, seed=seed, n=n)
        run.sequence.append((n, cur.dim))
        run.steps.append(report)
        if pow(dim_v, n, 4) != cur.dim % 4:
            run.mod4_congruent = False
        if n == 2:
            vvdual = _tensor(structure)(v, _dual(structure)(v))
            dd = decompose(vvdual, seed=seed,
                           graded_first=(structure == "alpha"))
            triv = trivial_module(params)
            from .modules import iso_test
            mult = sum(mult for m, mult, _ in dd.summands
                       if m.dim == 1 and iso_test(m.ungraded(), triv).isomorphic)
            run.trivial_mult_one = (mult == 1)
    return run


@dataclass
class StructureComparison:
    """Per-step summand-multiset agreement of the two tensor structures."""

    steps: list                 # (n, alpha dims, group dims, equal)

    @property
    def all_equal(self) -> bool:
        return all(eq for _, _, _, eq in self.steps)


def compare_structures(shape: SkewPartition, params: GroupSchemeParams,
                       n_max: int = 2, seed: int = 0) -> StructureComparison:
    """Compare summand-dimension multisets of the two Hopf structures.

    Step n compares the decompositions of V_{n-1} (x) V for each structure
    (with V_1 (x) V* at n = 1 as in the duality conjecture).
    """
    v = from_skew_partition(shape, params)
    steps = []
    da = decompose(tensor_alpha(v, dual_alpha(v)), seed=seed)
    dg = decompose(tensor_group(v.ungraded(), dual_group(v.ungraded())),
                   seed=seed, graded_first=False)
    steps.append((1, da.dims(), dg.dims(), da.dims() == dg.dims()))
    if n_max >= 2 and v.dim % 2:
        cur_a, cur_g = v, v.ungraded()
        for n in range(2, n_max + 1):
            cur_a, ra = next_odd(cur_a, v, "alpha", seed=seed, n=n)
            cur_g, rg = next_odd(cur_g, v.ungraded(), "group", seed=seed, n=n)
            dims_a = ra.decomposition.dims()
            dims_g = rg.decomposition.dims()
            steps.append((n, dims_a, dims_g, dims_a == dims_g))
    return StructureComparison(steps)
