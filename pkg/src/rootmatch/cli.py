"""Command-line front door.

Subcommands: ``catalogue``, ``codim``, ``matrix``, ``match``, ``verify``,
``all``.  Exit codes: 0 success, 1 check failure, 2 configuration error.
All machine output is deterministic for a fixed configuration: reports
carry the tool version, a digest of their inputs, and the seeds used.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from .chamber import enumerate_faces, verify_codim_bounds
from .errors import (
    ExcludedSpaceError,
    FrameFileError,
    MalformedMatrixError,
    NoMatchingError,
    RootmatchError,
    UnknownSpaceError,
)
from .framematrix import (
    build_matrix,
    load_frame,
    random_frames,
    verify_properties,
)
from .matcher import greedy_match, oracle_match, validate
from .modelgeom import (
    ModelSpace,
    exact_commutator,
    diagonal_exact,
    min_bracket_gain,
    pipeline_flat,
    pipeline_perturbed,
    q_subspace,
    random_perturbation_case,
    rotation_generator_exact,
    sample_ratio,
    stabilizer_generators,
    stabilizer_rotation,
    symmetric_pair_exact,
    trace_inner,
)
from .rootdata import Root, catalogue, space as lookup_space


def root_label(root: Root) -> str:
    parts = []
    for idx, c in enumerate(root.coords):
        if not c:
            continue
        mag = abs(c)
        head = "" if mag == 1 else str(mag)
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(f"{sign}{head}e{idx + 1}")
    return "".join(parts)


def column_label(root: Root, slot: int) -> str:
    base = root_label(root)
    return f"{base}[{slot}]" if root.multiplicity > 1 else base


def _digest(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, default=str).encode("utf-8")
    return hashlib.sha256(blob).hexdigest()[:16]


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_report(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


# ---------------------------------------------------------------------------
# catalogue


def cmd_catalogue(args) -> tuple[int, str]:
    spaces = catalogue()
    if args.json:
        lines = []
        for s in spaces:
            entry = {
                "name": s.name,
                "rank": s.rank,
                "dim_x": s.dim_x,
                "dim_k": s.dim_k,
                "dim_m": s.dim_m,
                "columns": s.columns,
                "excluded": s.excluded,
            }
            lines.append(json.dumps(entry))
        return 0, "\n".join(lines) + "\n"
    header = f"{'name':<12}{'rank':>5}{'dimX':>6}{'dimK':>6}{'dimM':>6}{'#roots':>8}{'sum_m':>7}  excluded"
    rows = [header, "-" * len(header)]
    for s in spaces:
        rows.append(
            f"{s.name:<12}{s.rank:>5}{s.dim_x:>6}{s.dim_k:>6}{s.dim_m:>6}"
            f"{len(s.rootsys.positives):>8}{s.columns:>7}  {'yes' if s.excluded else 'no'}"
        )
    return 0, "\n".join(rows) + "\n"


# ---------------------------------------------------------------------------
# codim


def cmd_codim(args) -> tuple[int, str]:
    space = lookup_space(args.space)
    report = verify_codim_bounds(space)
    if args.json:
        obj = {
            "subcommand": "codim",
            "version": __version__,
            "inputs_digest": _digest({"space": args.space}),
            "space": report.space,
            "ktype": report.ktype,
            "rank": report.rank,
            "passed": report.passed,
            "min_codim": report.min_codim,
            "faces": [
                {
                    "simple_subset": list(e.simple_subset),
                    "vanishing_count": e.vanishing_count,
                    "codim": e.codim,
                    "bound": e.bound,
                    "ok": e.ok,
                    "attains_rank": e.attains_rank,
                }
                for e in report.entries
            ],
        }
        return (0 if report.passed else 1), _json_report(obj)
    lines = [
        f"codimension bounds for {report.space} (rank {report.rank}, ktype {report.ktype})"
    ]
    for e in report.entries:
        subset = ",".join(str(i + 1) for i in e.simple_subset)
        status = "ok" if e.ok else "FAIL"
        lines.append(
            f"  S={{{subset}}}  vanishing={e.vanishing_count:>3}  codim={e.codim:>4}"
            f"  bound>={e.bound}  {status}"
        )
    lines.append(f"min codim: {report.min_codim}")
    lines.append("PASS" if report.passed else "FAIL")
    return (0 if report.passed else 1), "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# matrix


def cmd_matrix(args) -> tuple[int, str]:
    space = lookup_space(args.space)
    frame = load_frame(args.frame, space)
    matrix = build_matrix(frame)
    if args.json:
        obj = {
            "rows": matrix.rows,
            "cols": matrix.cols,
            "entries": [list(r) for r in matrix.entries],
            "col_labels": [
                {"root": list(root.coords), "slot": slot, "label": column_label(root, slot)}
                for root, slot in matrix.col_labels
            ],
        }
        return 0, _json_report(obj)
    labels = [column_label(root, slot) for root, slot in matrix.col_labels]
    lines = [f"selection matrix for {space.name}: {matrix.rows} x {matrix.cols}"]
    lines.append("columns: " + " ".join(labels))
    for i, row in enumerate(matrix.entries):
        lines.append(f"row {i}: " + " ".join(str(x) for x in row))
    return 0, "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# match


def _load_matrix_file(path: str) -> list[list[int]]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise FrameFileError(f"cannot read matrix file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FrameFileError(f"matrix file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict) or "entries" not in data:
        raise FrameFileError('matrix file must be an object with an "entries" key')
    entries = data["entries"]
    if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
        raise FrameFileError("entries must be a list of rows")
    if "rows" in data and len(entries) != data["rows"]:
        raise FrameFileError("rows field does not match entries")
    if "cols" in data and any(len(r) != data["cols"] for r in entries):
        raise FrameFileError("cols field does not match entries")
    return [[int(x) for x in r] for r in entries]


def _trace_payload(trace) -> dict:
    return {
        "stages": [
            {
                "stage": s.stage,
                "phase": s.phase,
                "order": list(s.order),
                "top_row": s.top_row,
                "counts": [list(c) for c in s.counts],
                "chosen": [c + 1 for c in s.chosen],
            }
            for s in trace.stages
        ],
        "repairs": [
            {
                "kind": r.kind,
                "stage": r.stage,
                "failing_row": r.failing_row,
                "donor_row": r.donor_row,
                "column_restored": r.column_restored + 1,
                "column_taken": r.column_taken + 1,
            }
            for r in trace.repairs
        ],
    }


def cmd_match(args) -> tuple[int, str]:
    entries = _load_matrix_file(args.input)
    obj: dict = {
        "subcommand": "match",
        "version": __version__,
        "inputs_digest": _digest(entries),
    }
    status = 0
    try:
        result, trace = greedy_match(entries)
        obj["pairs"] = [[j + 1, k + 1] for j, k in result.pairs]
        obj["valid"] = validate(entries, result)
        if not obj["valid"]:
            status = 1
        if args.trace:
            obj["trace"] = _trace_payload(trace)
        if args.oracle:
            oracle = oracle_match(entries)
            obj["oracle_found"] = oracle is not None
            obj["oracle_agrees"] = oracle is not None
            if not obj["oracle_agrees"]:
                status = 1
    except NoMatchingError as exc:
        obj["pairs"] = None
        obj["error"] = "no matching found"
        if args.trace and exc.trace is not None:
            obj["trace"] = _trace_payload(exc.trace)
        if args.oracle:
            oracle = oracle_match(entries)
            obj["oracle_found"] = oracle is not None
        status = 1
    return status, _json_report(obj)


# ---------------------------------------------------------------------------
# verify


def _parse_int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _parse_float_list(text: str) -> list[float]:
    return [float(x) for x in text.split(",") if x.strip()]


def cmd_verify(args) -> tuple[int, str]:
    if not 4 <= args.n <= 8:
        raise FrameFileError("verify needs 4 <= n <= 8")
    seeds = _parse_int_list(args.seeds)
    epsilons = _parse_float_list(args.epsilon)
    model = ModelSpace(args.n)
    space = lookup_space(f"SL({args.n},R)")
    if args.frame:
        frame = load_frame(args.frame, space).vectors
    else:
        frame = random_frames(space, 1, seed=seeds[0], singular_fraction=1.0)[0].vectors

    flat = pipeline_flat(model, frame)
    ratio_per_pair = {}
    for i, v in enumerate(frame):
        for tag, mat in (("prime", flat.primed[i]), ("double_prime", flat.double_primed[i])):
            est = sample_ratio(model, v, mat, args.samples, seeds[0])
            ratio_per_pair[f"v{i + 1}_{tag}"] = est.max_ratio
    ratio_by_seed = []
    v0 = frame[0]
    b0 = flat.primed[0]
    for s in seeds:
        est = sample_ratio(model, v0, b0, args.samples, s)
        ratio_by_seed.append(est.max_ratio)

    pframe, u = random_perturbation_case(model, seeds[0])
    gram_by_eps = {}
    quotients = []
    for eps in epsilons:
        per = pipeline_perturbed(model, pframe, u, eps)
        gram_by_eps[f"{eps:g}"] = per.gram_deviation
        quotients.append(per.gram_deviation / eps)
    slope = max(quotients) if quotients else 0.0
    spread = (
        max(quotients) / min(quotients)
        if quotients and min(quotients) > 0
        else float("inf")
    )

    gains = [min_bracket_gain(model, v) for v in flat.snapped_frame]

    checks = {
        "flat_gram_below_cap": flat.gram_deviation <= 1e-12,
        "ratio_finite": all(np.isfinite(r) for r in ratio_by_seed),
        "ratio_seed_spread_within_2x": (
            max(ratio_by_seed) <= 2.0 * min(ratio_by_seed) if ratio_by_seed else True
        ),
        "eps_scaling_spread_within_10x": spread <= 10.0,
    }
    passed = all(checks.values())
    obj = {
        "subcommand": "verify",
        "version": __version__,
        "inputs_digest": _digest(
            {
                "n": args.n,
                "frame": [[str(x) for x in v] for v in frame],
                "samples": args.samples,
                "seeds": seeds,
                "epsilon": epsilons,
            }
        ),
        "n": args.n,
        "seeds": seeds,
        "samples": args.samples,
        "flat_gram_deviation": flat.gram_deviation,
        "flat_ratio_estimate": max(ratio_per_pair.values()),
        "max_ratio_per_pair": ratio_per_pair,
        "max_ratio_by_seed": ratio_by_seed,
        "gram_deviation_by_epsilon": gram_by_eps,
        "linear_slope_estimate": slope,
        "quotient_spread": spread,
        "min_bracket_gain": gains,
        "checks": checks,
        "passed": passed,
    }
    if args.json:
        return (0 if passed else 1), _json_report(obj)
    lines = [f"model n={args.n} verification"]
    lines.append(f"  flat gram deviation: {flat.gram_deviation:.3e}")
    for pair, value in ratio_per_pair.items():
        lines.append(f"  max ratio {pair}: {value:.4f}")
    lines.append(f"  max ratio by seed: {', '.join(f'{r:.4f}' for r in ratio_by_seed)}")
    for eps, dev in gram_by_eps.items():
        lines.append(f"  gram deviation @ eps={eps}: {dev:.3e}")
    lines.append(f"  linear slope estimate: {slope:.4f}  spread {spread:.3f}")
    for name, ok in checks.items():
        lines.append(f"  {name}: {'ok' if ok else 'FAIL'}")
    lines.append("PASS" if passed else "FAIL")
    return (0 if passed else 1), "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# all


def _sweep_checks(args):
    seeds = _parse_int_list(args.seeds)
    checks: list[tuple[str, bool, str]] = []

    ok = True
    detail = ""
    for s in catalogue():
        total = s.rootsys.total_multiplicity
        bound = s.rank * (s.rank + 1) // 2
        if s.dim_x != s.rank + total or s.dim_k != s.dim_m + total:
            ok, detail = False, f"{s.name}: dimension identity"
            break
        if s.columns < bound or (s.columns == bound) != s.name.startswith("SL("):
            ok, detail = False, f"{s.name}: column bound"
            break
    checks.append(("catalogue_identities", ok, detail))

    ok = True
    detail = ""
    for s in catalogue():
        if s.excluded or not 2 <= s.rank <= 8:
            continue
        report = verify_codim_bounds(s)
        if not report.passed:
            ok, detail = False, f"{s.name}: bound violated"
            break
    checks.append(("codim_bounds_rank_2_to_8", ok, detail))

    ok = True
    detail = ""
    frames_checked = 0
    for s in catalogue():
        if s.excluded or not 2 <= s.rank <= 6:
            continue
        for frame in random_frames(s, args.fuzz_count, seed=seeds[0]):
            matrix = build_matrix(frame)
            report = verify_properties(matrix, s)
            if not report.passed:
                ok, detail = False, f"{s.name}: properties failed: {report.witnesses}"
                break
            try:
                result, _trace = greedy_match(matrix)
            except NoMatchingError:
                ok, detail = False, f"{s.name}: greedy failed"
                break
            if not validate(matrix, result) or oracle_match(matrix) is None:
                ok, detail = False, f"{s.name}: validation or oracle failed"
                break
            frames_checked += 1
        if not ok:
            break
    checks.append(("fuzz_properties_and_matching", ok, detail or f"{frames_checked} frames"))

    ok = True
    detail = ""
    rng = np.random.default_rng(seeds[0])
    for n in range(3, 9):
        t = [Fraction(int(x), int(y)) for x, y in zip(
            rng.integers(-9, 10, size=n), rng.integers(1, 7, size=n)
        )]
        for i in range(n):
            for j in range(i + 1, n):
                got = exact_commutator(rotation_generator_exact(n, i, j), diagonal_exact(t))
                want = [
                    [(t[j] - t[i]) * x for x in row]
                    for row in symmetric_pair_exact(n, i, j)
                ]
                if got != want:
                    ok, detail = False, f"bracket identity failed at n={n}"
                    break
    checks.append(("bracket_identity_exact", ok, detail))

    ok = True
    detail = ""
    for n in (4, 5):
        model = ModelSpace(n)
        basis = model.fperp_basis()
        for a in range(len(basis)):
            for b in range(len(basis)):
                expected = 1.0 if a == b else 0.0
                if abs(trace_inner(basis[a], basis[b]) - expected) > 1e-14:
                    ok, detail = False, f"Gram deviation at n={n}"
    checks.append(("fperp_gram_identity", ok, detail))

    ok = True
    detail = ""
    for n in (4, 5):
        model = ModelSpace(n)
        sl = lookup_space(f"SL({n},R)")
        rng = np.random.default_rng(seeds[0])
        full = tuple(range(sl.rank))
        for face in enumerate_faces(sl):
            if not face.simple_subset or face.simple_subset == full:
                continue
            v = face.witness
            qs = q_subspace(model, v)
            gens = stabilizer_generators(model, v)
            for _ in range(10):
                coeffs = rng.uniform(-2, 2, size=len(gens))
                h = stabilizer_rotation(model, v, coeffs)
                for bmat in qs:
                    moved = h @ bmat @ h.T
                    flat_part = np.linalg.norm(np.einsum("ii->i", moved))
                    if np.arcsin(min(1.0, flat_part)) > 1e-9:
                        ok, detail = False, f"zero-case failed at n={n}"
    checks.append(("stabilizer_zero_case", ok, detail))

    model = ModelSpace(4)
    v = (1, 1, 1, -3)
    b = model.b_matrix(0, 3)
    estimates = [sample_ratio(model, v, b, args.samples, s).max_ratio for s in seeds]
    ok = (
        all(np.isfinite(estimates))
        and max(estimates) <= 2.0 * min(estimates)
    )
    checks.append(
        ("ratio_stability", ok, f"estimates {['%.3f' % e for e in estimates]}")
    )

    epsilons = _parse_float_list(args.epsilon)
    ok = True
    detail = ""
    for s in seeds[:3]:
        frame, u = random_perturbation_case(model, s)
        quots = [
            pipeline_perturbed(model, frame, u, eps).gram_deviation / eps
            for eps in epsilons
        ]
        if min(quots) <= 0 or max(quots) / min(quots) > 10.0:
            ok, detail = False, f"eps scaling spread too wide on seed {s}"
            break
    checks.append(("eps_linear_scaling", ok, detail))

    ok = True
    detail = ""
    for n in (4, 5):
        model_n = ModelSpace(n)
        sl = lookup_space(f"SL({n},R)")
        for frame in random_frames(sl, 25, seed=seeds[0]):
            out = pipeline_flat(model_n, frame.vectors)
            if out.gram_deviation > 1e-12:
                ok, detail = False, f"flat pipeline gram {out.gram_deviation} at n={n}"
                break
            if len(out.members()) != 2 * sl.rank:
                ok, detail = False, f"flat pipeline count at n={n}"
                break
        if not ok:
            break
    checks.append(("flat_pipeline", ok, detail))
    return checks


def cmd_all(args) -> tuple[int, str]:
    checks = _sweep_checks(args)
    passed = all(ok for _name, ok, _detail in checks)
    obj = {
        "subcommand": "all",
        "version": __version__,
        "inputs_digest": _digest(
            {
                "fuzz_count": args.fuzz_count,
                "samples": args.samples,
                "seeds": args.seeds,
                "epsilon": args.epsilon,
            }
        ),
        "checks": [
            {"name": name, "passed": ok, "detail": detail}
            for name, ok, detail in checks
        ],
        "passed": passed,
    }
    if args.json:
        return (0 if passed else 1), _json_report(obj)
    lines = []
    for name, ok, detail in checks:
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
    lines.append("PASS" if passed else "FAIL")
    return (0 if passed else 1), "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootmatch",
        description="selection matrices, column matching, and model verification",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalogue", help="print the space catalogue")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_catalogue)

    p = sub.add_parser("codim", help="verify stabilizer codimension bounds")
    p.add_argument("--space", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_codim)

    p = sub.add_parser("matrix", help="build a selection matrix from a frame file")
    p.add_argument("--space", required=True)
    p.add_argument("--frame", required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("match", help="run the greedy matching on a matrix file")
    p.add_argument("--input", required=True)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("verify", help="numeric pipelines on the SL(n,R) model")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--frame")
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--seeds", default="1,2,3,4,5")
    p.add_argument("--epsilon", default="1e-2,1e-3,1e-4")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("all", help="full verification sweep")
    p.add_argument("--fuzz-count", type=int, default=1000)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seeds", default="1,2,3,4,5")
    p.add_argument("--epsilon", default="1e-2,1e-3,1e-4")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    output = getattr(args, "output", None)
    try:
        code, text = args.func(args)
    except (
        UnknownSpaceError,
        ExcludedSpaceError,
        FrameFileError,
        MalformedMatrixError,
        ValueError,
    ) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except RootmatchError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    _emit(text, output)
    return code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
