"""Command-line entry point: ``spantrees gen|guess|bz|verify-sample``.

Exit codes: 0 ok, 1 sampling check failed, 2 invalid input, 3 fit failure,
4 insufficient data, 5 cross-check mismatch.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from pathlib import Path

import mpmath

from spantrees.asymptotics import DEFAULT_PRECISION, bz_constant, bz_direct
from spantrees.cfinite import RationalGF, fit_gf, required_terms
from spantrees.errors import (
    AmbiguousDominance,
    FitFailure,
    InsufficientData,
    RemovableSingularity,
    SpanTreesError,
    StructureError,
)
from spantrees.graphs import FAMILY_KINDS, FamilySpec
from spantrees.matrix_tree import IntSequence, sequence_vertex_map, spanning_tree_seq, total_leaves_seq
from spantrees.sampler import verify_family_member

log = logging.getLogger("spantrees")

EXIT_OK, EXIT_SAMPLE_FAIL, EXIT_INVALID, EXIT_FIT, EXIT_DATA, EXIT_MISMATCH = 0, 1, 2, 3, 4, 5
CACHE_ENV = "SPANTREES_CACHE_DIR"
CROSS_CHECK_TOL = 1e-8

# Minimal recurrence order + offset observed for each family; the default
# max order adds a margin of 2 on top.
KNOWN_ORDERS = {
    ("path-power", 1, "trees"): 1, ("path-power", 1, "leaves"): 1,
    ("path-power", 2, "trees"): 2, ("path-power", 2, "leaves"): 4,
    ("path-power", 3, "trees"): 5, ("path-power", 3, "leaves"): 11,
    ("path-power", 4, "trees"): 14, ("path-power", 4, "leaves"): 30,
    ("cycle-power", 1, "trees"): 2, ("cycle-power", 1, "leaves"): 2,
    ("cycle-power", 2, "trees"): 6, ("cycle-power", 2, "leaves"): 8,
    ("cycle-power", 3, "trees"): 18, ("cycle-power", 3, "leaves"): 27,
    ("cycle-power", 4, "trees"): 54, ("cycle-power", 4, "leaves"): 81,
    ("grid", 1, "trees"): 1, ("grid", 1, "leaves"): 1,
    ("grid", 2, "trees"): 2, ("grid", 2, "leaves"): 5,
    ("grid", 3, "trees"): 4, ("grid", 3, "leaves"): 9,
    ("grid", 4, "trees"): 8, ("grid", 4, "leaves"): 17,
    ("torus", 3, "trees"): 10, ("torus", 3, "leaves"): 15,
    ("torus", 4, "trees"): 30,
}
FALLBACK_ORDER = 20
# Ratio extrapolation needs a longer run than low-order fits do.
MIN_BZ_TERMS = 40


def default_max_order(fam: FamilySpec, which: str) -> int:
    key_param = next(iter(fam.p.values()), None) if fam.params else None
    known = KNOWN_ORDERS.get((fam.kind, key_param, which))
    return known + 2 if known is not None else FALLBACK_ORDER


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spantrees", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress and cache hits")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p, required=True):
        p.add_argument("--family", choices=FAMILY_KINDS, required=required)
        p.add_argument("--r", type=_positive, help="power for path-power and cycle-power")
        p.add_argument("--a", type=_positive, help="width for grid and torus")
        p.add_argument("--p", type=_positive, help="subdivided-star B-Z target numerator (p*k spokes)")
        p.add_argument("--q", type=_positive, help="subdivided-star B-Z target denominator (q*k + 1 vertices)")

    def common(p):
        p.add_argument("--out", type=Path, help="output file (default: stdout)")
        p.add_argument("--format", dest="fmt", choices=("json", "csv"), default="json")

    gen = sub.add_parser("gen", help="compute spanning-tree or total-leaf sequences")
    family_args(gen)
    gen.add_argument("--which", choices=("trees", "leaves"), default="trees")
    gen.add_argument("--count", type=_positive, help="number of terms (default: enough to fit --max-order)")
    gen.add_argument("--max-order", type=_positive, help="recurrence order the default count must support")
    gen.add_argument("--cache-dir", type=Path, help=f"sequence cache (default: ${CACHE_ENV} or ~/.cache/spantrees)")
    common(gen)

    guess = sub.add_parser("guess", help="fit a rational generating function to a sequence file")
    guess.add_argument("input", type=Path, help="IntSequence JSON file, as written by gen")
    guess.add_argument("--max-order", type=_positive, help="largest recurrence order tried (default: fit what the data allows)")
    common(guess)

    bz = sub.add_parser("bz", help="B-Z constant of a family, pole-based and cross-checked")
    family_args(bz)
    bz.add_argument("--count", type=_positive, help=f"terms per sequence (default: fit needs + 5, at least {MIN_BZ_TERMS})")
    bz.add_argument("--max-order", type=_positive, help="largest recurrence order tried for both sequences")
    bz.add_argument("--precision-bits", type=_positive, default=DEFAULT_PRECISION, help="working precision for roots")
    bz.add_argument("--depth", type=_positive, default=4, help="extrapolation depth of the cross-check")
    bz.add_argument("--cache-dir", type=Path, help="sequence cache, as for gen")
    common(bz)

    vs = sub.add_parser("verify-sample", help="compare Wilson-sampled leaf means with the exact value")
    family_args(vs)
    vs.add_argument("--index", type=_nonnegative, help="member index (default: first with >= 100 vertices)")
    vs.add_argument("--samples", type=_positive, default=400, help="number of Wilson samples")
    vs.add_argument("--seed", type=_nonnegative, default=0, help="root seed for the sample streams")
    vs.add_argument("--k-sigma", type=float, default=4.0, help="pass if |mean - exact| <= k * standard error")
    vs.add_argument("--max-vertices", type=_positive, default=300, help="refuse members larger than this")
    vs.add_argument("--corrupt-exact", action="store_true", help="add 1 to the exact mean (negative control)")
    common(vs)
    return parser


def family_from_args(args) -> FamilySpec:
    needed = {
        "path-power": ("r",), "cycle-power": ("r",), "grid": ("a",), "torus": ("a",),
        "subdivided-star": ("p", "q"),
    }.get(args.family, ())
    params = {}
    for name in ("r", "a", "p", "q"):
        value = getattr(args, name)
        if name in needed:
            if value is None:
                raise SpanTreesError(f"family {args.family} needs --{name}")
            params[name] = value
        elif value is not None:
            raise SpanTreesError(f"family {args.family} does not take --{name}")
    return FamilySpec.create(args.family, **params)


def resolve_cache_dir(flag: Path | None) -> Path:
    if flag is not None:
        return flag
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "spantrees"


def _cache_path(cache_dir: Path, fam: FamilySpec, which: str) -> Path:
    params = "_".join(f"{k}{v}" for k, v in fam.params)
    stem = "_".join(x for x in (fam.kind, params, which) if x)
    return cache_dir / f"{stem}.json"


def cached_sequence(fam: FamilySpec, which: str, count: int, cache_dir: Path) -> IntSequence:
    """Sequence of the first ``count`` members, reusing and extending the cache file.

    Cached terms are never recomputed or rewritten; new terms are appended.
    """
    path = _cache_path(cache_dir, fam, which)
    have: tuple[int, ...] = ()
    if path.exists():
        have = IntSequence.from_json(path.read_text()).terms
        if len(have) >= count:
            log.info("cache hit: %s (%d terms)", path, len(have))
            return IntSequence(fam.kind, fam.start_size, have[:count], fam.p)
        log.info("cache partial: %s has %d of %d terms", path, len(have), count)
    missing = count - len(have)
    if which == "trees":
        extra = spanning_tree_seq(fam, missing, first=len(have))
    else:
        extra = total_leaves_seq(fam, missing, use_transitivity=fam.vertex_transitive, first=len(have))
    full = IntSequence(fam.kind, fam.start_size, have + extra.terms, fam.p)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(full.to_json())
    tmp.replace(path)
    if IntSequence.from_json(path.read_text()).terms[: len(have)] != have:
        raise SpanTreesError(f"cache file {path} changed existing terms")
    return full


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def render_sequence(seq: IntSequence, fmt: str) -> str:
    if fmt == "csv":
        return _csv([("index", "n", "term")] + [(i, seq.start_n + i, str(t)) for i, t in enumerate(seq.terms)])
    return seq.to_json() + "\n"


def render_gf(gf: RationalGF, fmt: str) -> str:
    if fmt == "csv":
        rows = [("degree", "num", "den")]
        for d in range(max(len(gf.num), len(gf.den))):
            rows.append((d, str(gf.num[d]) if d < len(gf.num) else "0", str(gf.den[d]) if d < len(gf.den) else "0"))
        return _csv(rows)
    return gf.to_json() + "\n"


def render_mapping(data: dict, fmt: str) -> str:
    if fmt == "csv":
        return _csv([("key", "value")] + [(k, v) for k, v in data.items()])
    return json.dumps(data, indent=1) + "\n"


def emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)


def cmd_gen(args) -> int:
    fam = family_from_args(args)
    max_order = args.max_order or default_max_order(fam, args.which)
    count = args.count or required_terms(max_order) + 5
    seq = cached_sequence(fam, args.which, count, resolve_cache_dir(args.cache_dir))
    emit(render_sequence(seq, args.fmt), args.out)
    return EXIT_OK


def _largest_supported_order(length: int) -> int:
    order = 0
    while required_terms(order + 1) <= length:
        order += 1
    return order


def cmd_guess(args) -> int:
    try:
        seq = IntSequence.from_json(args.input.read_text())
    except (OSError, ValueError, KeyError) as exc:
        raise SpanTreesError(f"cannot read sequence file {args.input}: {exc}") from exc
    max_order = args.max_order or _largest_supported_order(len(seq))
    if max_order < 1:
        raise InsufficientData(f"{len(seq)} terms are not enough for any order (need {required_terms(1)})")
    gf, rec = fit_gf(seq, max_order)
    log.info("order %d, offset %d, %d guard equations", rec.order, rec.offset, rec.guard_verified)
    emit(render_gf(gf, args.fmt), args.out)
    return EXIT_OK


def compute_bz(fam: FamilySpec, count: int | None, max_order: int | None, precision_bits: int,
               depth: int, cache_dir: Path) -> tuple[dict, bool]:
    """Run the whole pipeline; returns (report, cross-check ok)."""
    mo_t = max_order or default_max_order(fam, "trees")
    mo_l = max_order or default_max_order(fam, "leaves")
    count = count or max(required_terms(mo_t) + 5, required_terms(mo_l) + 5, MIN_BZ_TERMS)
    seq_t = cached_sequence(fam, "trees", count, cache_dir)
    seq_l = cached_sequence(fam, "leaves", count, cache_dir)
    vmap = sequence_vertex_map(fam, seq_t)
    direct = bz_direct(seq_t, seq_l, vmap, depth, family=fam.tag)
    try:
        gf_t, _ = fit_gf(seq_t, min(mo_t, _largest_supported_order(count)))
        gf_l, _ = fit_gf(seq_l, min(mo_l, _largest_supported_order(count)))
        pole = bz_constant(gf_t, gf_l, vmap, precision_bits, family=fam.tag)
    except (FitFailure, StructureError, AmbiguousDominance, RemovableSingularity) as exc:
        log.warning("pole-based method unavailable (%s); using ratio extrapolation", exc)
        return direct.to_dict(), True
    diff = abs(pole.value - direct.value)
    tol = max(mpmath.mpf(CROSS_CHECK_TOL), pole.error_bound + direct.error_bound)
    report = pole.to_dict()
    report["cross_check"] = {
        "value": mpmath.nstr(direct.value, 20),
        "error_bound": mpmath.nstr(direct.error_bound, 5),
        "difference": mpmath.nstr(diff, 5),
    }
    return report, bool(diff <= tol)


def cmd_bz(args) -> int:
    fam = family_from_args(args)
    report, ok = compute_bz(fam, args.count, args.max_order, args.precision_bits, args.depth,
                            resolve_cache_dir(args.cache_dir))
    emit(render_mapping(report, args.fmt), args.out)
    if not ok:
        log.error("pole-based and extrapolated values disagree: %s", report["cross_check"])
        return EXIT_MISMATCH
    return EXIT_OK


def first_index_with(fam: FamilySpec, min_vertices: int) -> int:
    s, t = fam.vertex_map
    return max(0, -(-(min_vertices - t) // s))


def cmd_verify_sample(args) -> int:
    fam = family_from_args(args)
    index = args.index if args.index is not None else first_index_with(fam, 100)
    report = verify_family_member(
        fam, index, args.samples, args.seed, args.k_sigma, args.max_vertices,
        exact_offset=1 if args.corrupt_exact else 0,
    )
    emit(render_mapping(report.to_dict(), args.fmt), args.out)
    return EXIT_OK if report.passed else EXIT_SAMPLE_FAIL


COMMANDS = {"gen": cmd_gen, "guess": cmd_guess, "bz": cmd_bz, "verify-sample": cmd_verify_sample}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return COMMANDS[args.command](args)
    except FitFailure as exc:
        print(f"fit failure: {exc}", file=sys.stderr)
        return EXIT_FIT
    except InsufficientData as exc:
        print(f"insufficient data: {exc}", file=sys.stderr)
        return EXIT_DATA
    except SpanTreesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
