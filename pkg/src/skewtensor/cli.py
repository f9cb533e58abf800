"""Command-line frontend.

Exit codes: 0 success, 1 verification mismatch, 2 conjecture-violation
evidence produced, 3 usage error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import hashlib
import json
import os
import sys

from .decompose import decompose
from .homology import omega_power
from .modules import (GroupSchemeParams, Module, SkewPartition, dual_alpha,
                      dual_group, from_skew_partition, iso_test, tensor_alpha,
                      tensor_group)
from .powerlab import ConjectureViolation, pv_sequence
from .qpfit import fit
from .shapes import enumerate_shapes, render
from .verify import VERIFIERS

SCHEMA_VERSION = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(3)


def _cache_dir(args):
    return (getattr(args, "cache", None)
            or os.environ.get("SKEWTENSOR_CACHE")
            or os.path.join(".", ".skewtensor-cache"))


def _cache_lookup(args, key):
    path = _cache_path(args, key)
    if os.path.exists(path):
        with open(path, "rb") as fh:
            return fh.read()
    return None


def _cache_path(args, key):
    digest = hashlib.sha256(json.dumps(key, sort_keys=True).encode()).hexdigest()
    return os.path.join(_cache_dir(args), digest[:24] + ".json")


def _cache_store(args, key, payload: bytes):
    d = _cache_dir(args)
    os.makedirs(d, exist_ok=True)
    path = _cache_path(args, key)
    tmp = path + ".tmp"
    with open(tmp, "wb") as fh:
        fh.write(payload)
    os.replace(tmp, path)


def _record(key, seed, payload) -> bytes:
    return (json.dumps({"key": key, "seed": seed, "payload": payload},
                       sort_keys=True) + "\n").encode()


def _parse_shape(text: str) -> SkewPartition:
    try:
        return SkewPartition.parse(text)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(3)


def _params(args, shape: SkewPartition) -> GroupSchemeParams:
    if args.r is not None and args.s is not None:
        return GroupSchemeParams(args.r, args.s)
    if args.r is None and args.s is None:
        return shape.minimal_params()
    print("error: give both --r and --s or neither", file=sys.stderr)
    raise SystemExit(3)


def _module(shape, params) -> Module:
    try:
        return from_skew_partition(shape, params)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(3)


def cmd_diagram(args):
    shape = _parse_shape(args.shape)
    print(render(shape))
    return 0


def cmd_decompose(args):
    shape = _parse_shape(args.shape)
    params = _params(args, shape)
    v = _module(shape, params)
    tensor = tensor_alpha if args.structure == "alpha" else tensor_group
    dual = dual_alpha if args.structure == "alpha" else dual_group
    if args.structure == "group":
        v = v.ungraded()
    if args.expr == "VxV*":
        m = tensor(v, dual(v))
    elif args.expr == "VxV":
        m = tensor(v, v)
    elif args.expr == "V^n":
        m = v
        for _ in range(args.nmax - 1):
            m = tensor(m, v)
    else:
        print(f"error: unknown expression {args.expr!r}", file=sys.stderr)
        return 3
    dec = decompose(m, seed=args.seed, graded_first=args.graded)
    payload = dec.to_json()
    payload["schema"] = SCHEMA_VERSION
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"{shape} over alpha({params.r},{params.s}), {args.expr}, "
              f"{args.structure} structure")
        print("summands:", dec.dims())
        if dec.partial:
            print("warning: partial decomposition (resource guard hit)")
    return 0


def _run_powers(shape_text, r, s, structure, n_max, seed):
    shape = SkewPartition.parse(shape_text)
    run = pv_sequence(shape, GroupSchemeParams(r, s), structure=structure,
                      n_max=n_max, seed=seed)
    qp = fit(run.sequence)
    payload = run.to_json()
    payload["fit"] = qp.to_json() if qp else None
    payload["fit_pretty"] = str(qp) if qp else None
    payload["schema"] = SCHEMA_VERSION
    return run, qp, payload


def cmd_powers(args):
    shape = _parse_shape(args.shape)
    params = _params(args, shape)
    key = [str(shape), params.r, params.s, args.structure, "powers",
           args.nmax, SCHEMA_VERSION]
    cached = _cache_lookup(args, [key, args.seed]) if args.cache_enabled else None
    if cached is not None:
        sys.stdout.buffer.write(cached if args.json else b"")
        if not args.json:
            payload = json.loads(cached)["payload"]
            _print_powers(payload)
        return 0
    try:
        run, qp, payload = _run_powers(str(shape), params.r, params.s,
                                       args.structure, args.nmax, args.seed)
    except ConjectureViolation as exc:
        evidence_path = f"conjecture-violation-{shape}.json".replace("/", "_")
        with open(evidence_path, "w") as fh:
            json.dump(exc.evidence, fh, indent=2)
        print(f"conjecture violation: {exc}", file=sys.stderr)
        print(f"evidence written to {evidence_path}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    record = _record(key, args.seed, payload)
    if args.cache_enabled:
        _cache_store(args, [key, args.seed], record)
    if args.json:
        sys.stdout.buffer.write(record)
    else:
        _print_powers(payload)
    return 0


def _print_powers(payload):
    dims = [d for _, d in payload["sequence"]]
    print(f"{payload['shape']} over alpha({payload['r']},{payload['s']}), "
          f"{payload['structure']} structure")
    print("P_V(n):", dims)
    print("fit:", payload["fit_pretty"] or "none within bounds")
    flags = [f"unique_odd=yes",
             f"evens_div4={'yes' if all(st['others_div4'] for st in payload['steps']) else 'NO'}",
             f"mod4_congruent={'yes' if payload['mod4_congruent'] else 'NO'}",
             f"trivial_mult_one={'yes' if payload['trivial_mult_one'] else 'NO'}"]
    print("flags:", " ".join(flags))


def cmd_verify_tables(args):
    verifier = VERIFIERS.get(args.which)
    if verifier is None:
        print(f"error: unknown table {args.which!r}", file=sys.stderr)
        return 3
    report = verifier(args.seed)
    if args.json:
        print(json.dumps(report.to_json(), sort_keys=True))
    else:
        for check in report.checks:
            print(check.line())
        print(f"{report.name}: {'all match' if report.ok else 'MISMATCHES FOUND'}")
    return 0 if report.ok else 1


def _sweep_one(task):
    shape_text, r, s, structure, n_max, seed = task
    try:
        _, qp, payload = _run_powers(shape_text, r, s, structure, n_max, seed)
        return shape_text, payload, None
    except ConjectureViolation as exc:
        return shape_text, None, {"violation": str(exc), "evidence": exc.evidence}
    except Exception as exc:      # isolate per-shape failures
        return shape_text, None, {"error": repr(exc)}


def cmd_sweep(args):
    shapes = enumerate_shapes(args.dim, args.r if args.r else 4,
                              args.s if args.s else 4)
    tasks = []
    for cs in shapes:
        if len(cs.cells) % 2 == 0:
            continue
        tasks.append((str(cs.shape), cs.params.r, cs.params.s,
                      args.structure, args.nmax, args.seed))
    results = []
    if args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as ex:
            results = list(ex.map(_sweep_one, tasks))
    else:
        results = [_sweep_one(t) for t in tasks]
    failures = 0
    violations = 0
    by_shape = {t[0]: t for t in tasks}
    for shape_text, payload, err in results:
        if payload is not None:
            _, r, s, structure, n_max, _ = by_shape[shape_text]
            key = [shape_text, r, s, structure, "powers", n_max,
                   SCHEMA_VERSION]
            if args.cache_enabled:
                _cache_store(args, [key, args.seed],
                             _record(key, args.seed, payload))
            dims = [d for _, d in payload["sequence"]]
            print(f"{shape_text}: {dims}  fit: {payload['fit_pretty']}")
        elif "violation" in err:
            violations += 1
            print(f"{shape_text}: CONJECTURE VIOLATION {err['violation']}")
        else:
            failures += 1
            print(f"{shape_text}: failed {err['error']}")
    if violations:
        return 2
    return 0 if failures == 0 else 1


def cmd_syzygy(args):
    shape = _parse_shape(args.shape)
    params = _params(args, shape)
    v = _module(shape, params)
    w = omega_power(v, args.t)
    print(f"Omega^{args.t}({shape}) over alpha({params.r},{params.s}): "
          f"dim {w.dim}")
    if w.dim == 0:
        print("zero module")
        return 0
    # identify against the catalog of small monomial shapes
    for cs in enumerate_shapes(w.dim, params.r, params.s):
        try:
            cand = from_skew_partition(cs.shape, params)
        except ValueError:
            continue
        verdict = iso_test(w, cand, seed=args.seed)
        if verdict.isomorphic:
            print(f"isomorphic to the monomial module of {cs.shape}")
            return 0
    print("no matching monomial shape found in the catalog")
    return 0


def build_parser() -> _Parser:
    p = _Parser(prog="skewtensor",
                description="monomial modules over alpha(r,s): tensor "
                            "decompositions, syzygies, and tensor-power data")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, cache=True):
        sp.add_argument("--r", type=int, default=None)
        sp.add_argument("--s", type=int, default=None)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--json", action="store_true")
        if cache:
            sp.add_argument("--cache", default=None,
                            help="cache directory (also SKEWTENSOR_CACHE)")
            sp.add_argument("--no-cache", dest="cache_enabled",
                            action="store_false", default=True)

    sp = sub.add_parser("diagram", help="render a skew shape")
    sp.add_argument("shape")
    sp.set_defaults(func=cmd_diagram)

    sp = sub.add_parser("decompose", help="decompose a tensor expression")
    sp.add_argument("shape")
    sp.add_argument("expr", choices=["VxV*", "VxV", "V^n"])
    sp.add_argument("--structure", choices=["alpha", "group"], default="alpha")
    sp.add_argument("--graded", action="store_true", default=True)
    sp.add_argument("--no-graded", dest="graded", action="store_false")
    sp.add_argument("--nmax", type=int, default=2)
    common(sp)
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("powers", help="tensor-power sequence P_V(n) and fit")
    sp.add_argument("shape")
    sp.add_argument("--structure", choices=["alpha", "group"], default="alpha")
    sp.add_argument("--nmax", type=int, default=6)
    common(sp)
    sp.set_defaults(func=cmd_powers)

    sp = sub.add_parser("verify-tables", help="recompute embedded expected data")
    sp.add_argument("which", choices=sorted(VERIFIERS))
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify_tables)

    sp = sub.add_parser("sweep", help="run powers over all shapes of a dimension")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--structure", choices=["alpha", "group"], default="alpha")
    sp.add_argument("--nmax", type=int, default=6)
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("syzygy", help="syzygy / cosyzygy powers of a shape")
    sp.add_argument("shape")
    sp.add_argument("--t", type=int, default=1)
    common(sp, cache=False)
    sp.set_defaults(func=cmd_syzygy)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
