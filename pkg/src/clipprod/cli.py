"""Command-line front end: ``clipprod {int,poly,table,bench,selftest}``."""

from __future__ import annotations

import argparse
import csv
import dataclasses
import json
import random
import sys
import time

from . import clipped_poly as cp
from . import reference as ref
from .clipped_int import EXACT, THEOREM, within_one_unit
from .digits import DigitNat, from_decimal, iclip, oracle_int_product, to_decimal
from .dispatch import (MethodChoice, Settings, applicable, choose, clipped_product,
                       load_settings, predict_muls)
from .poly import ClipRange, ShiftedPoly, clip, format_poly, oracle_full_product, parse_poly, reverse
from .ring import ZZ, counting_wrap, snapshot

OK, VERIFY_FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _range(text: str) -> ClipRange:
    try:
        return ClipRange.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _method(text: str):
    if text == "auto":
        return None
    try:
        return MethodChoice.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _settings(args) -> Settings:
    s = load_settings(args.config) if args.config else Settings()
    changes = {}
    if getattr(args, "base", None) is not None:
        changes["base"] = args.base
    if getattr(args, "guard", None) is not None:
        changes["guard"] = args.guard
    if changes:
        s = dataclasses.replace(s, **changes)
    if s.base < 2:
        raise UsageError("base must be at least 2")
    return s


def _emit(args, out, result: str, method: str, counts=None, check=None):
    row = {"result": result, "method": method}
    if counts is not None:
        row["counts"] = {"muls": counts.muls, "adds": counts.adds}
    if check is not None:
        row["check"] = "pass" if check else "fail"
    if args.format == "json":
        print(json.dumps(row), file=out)
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        keys = ["result", "method"] + (["muls", "adds"] if counts else []) + (["check"] if check is not None else [])
        w.writerow(keys)
        vals = [result, method]
        if counts:
            vals += [counts.muls, counts.adds]
        if check is not None:
            vals.append(row["check"])
        w.writerow(vals)
    else:
        print(result, file=out)
        if counts is not None:
            print(json.dumps(row["counts"]), file=out)
        if check is False:
            print("check failed: result differs from the oracle", file=out)


def _run_product(args, out, f, g, kind):
    settings = _settings(args)
    ring = counting_wrap(ZZ)
    method = args.method
    if method is None:
        if kind == "poly":
            n, m, guard = f.degree + 1, g.degree + 1, 0
        else:
            n, m = len(f.digits), len(g.digits)
            guard = settings.policy().guard(args.range.lo, max(1, min(n, m)), f.base)
        method = choose(settings.cost_model(), max(n, 1), max(m, 1), args.range, kind, guard)
    try:
        result = clipped_product(f, g, args.range, settings, method, ring)
    except ValueError as e:
        raise UsageError(str(e)) from None
    counts = snapshot(ring) if args.count else None
    check = None
    if args.check:
        if kind == "poly":
            check = result == clip(oracle_full_product(f, g), args.range)
        else:
            expected = iclip(oracle_int_product(f, g), args.range)
            check = result == expected or (
                settings.guard == THEOREM and within_one_unit(expected, result, args.range))
    text = format_poly(result) if kind == "poly" else to_decimal(result)
    _emit(args, out, text, method.value, counts, check)
    return VERIFY_FAILED if check is False else OK


def cmd_int(args, out=None) -> int:
    out = out or sys.stdout
    base = _settings(args).base
    try:
        f, g = from_decimal(args.f, base), from_decimal(args.g, base)
    except ValueError as e:
        raise UsageError(f"bad integer operand: {e}") from None
    return _run_product(args, out, f, g, "int")


def cmd_poly(args, out=None) -> int:
    out = out or sys.stdout
    try:
        f, g = parse_poly(args.f), parse_poly(args.g)
    except ValueError as e:
        raise UsageError(f"bad polynomial operand: {e}") from None
    return _run_product(args, out, f, g, "poly")


def table_operands(prec: int):
    """Operands for the count table: the reference matrix pair at prec 16,
    otherwise all-ones integer polynomials of the given prec."""
    if prec == 16:
        return ref.TABLE2_F, ref.TABLE2_G, ref.MATRIX_RING
    ones = ShiftedPoly([1] * prec)
    return ones, ones, ZZ


def table_counts(prec: int) -> dict:
    """Count-mode Karatsuba multiplications for every ``0 <= a <= b <= 2*prec-2``."""
    if prec < 1:
        raise ValueError("prec must be positive")
    f, g, inner = table_operands(prec)
    ring = counting_wrap(inner)
    top = 2 * prec - 2
    cells = {}
    for a in range(top + 1):
        for b in range(a, top + 1):
            ring.reset()
            cp.karatsuba_clipped(f, g, ClipRange(a, b), ring, cp.COUNT_MODE)
            cells[a, b] = ring.mul_count
    return cells


def cmd_table(args, out=None) -> int:
    out = out or sys.stdout
    if args.prec < 1:
        raise UsageError("--prec must be positive")
    cells = table_counts(args.prec)
    top = 2 * args.prec - 2
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["a\\b"] + list(range(top + 1)))
    for a in range(top + 1):
        w.writerow([a] + ["" if b < a else cells[a, b] for b in range(top + 1)])
    return OK


def shape_range(shape: str, n: int, m: int, width: int) -> ClipRange:
    top = n + m - 2
    mid = top // 2
    if shape == "full":
        return ClipRange(0, top)
    if shape == "prefix":
        return ClipRange(0, max(n, m) - 1)
    if shape == "suffix":
        return ClipRange(min(n, m) - 1, top)
    if shape == "middle":
        lo = max(0, mid - width // 2)
        return ClipRange(lo, min(top, lo + width - 1))
    if shape == "singleton":
        return ClipRange(mid, mid)
    if shape == "empty":
        return ClipRange(1, 0)
    raise UsageError(f"unknown shape {shape!r}")


SHAPES = ("prefix", "suffix", "middle", "full", "singleton", "empty")


def _csv_list(text: str, conv=str):
    return [conv(t) for t in text.split(",") if t.strip()]


def bench_rows(sizes, shapes, methods=None, kind="poly", width=8, seed=0,
               predict=False, settings=None):
    """One row per (size, shape, applicable method) with counts and wall time."""
    settings = settings or Settings()
    model = settings.cost_model()
    methods = methods or list(MethodChoice)
    rows = []
    for n, m in sizes:
        rnd = random.Random(f"{seed}:{n}:{m}")
        if kind == "poly":
            f = ShiftedPoly([rnd.randint(1, 10**6) for _ in range(n)])
            g = ShiftedPoly([rnd.randint(1, 10**6) for _ in range(m)])
        else:
            base = settings.base
            f = DigitNat(base, [rnd.randrange(base) for _ in range(n - 1)] + [rnd.randrange(1, base)])
            g = DigitNat(base, [rnd.randrange(base) for _ in range(m - 1)] + [rnd.randrange(1, base)])
        for shape in shapes:
            r = shape_range(shape, n, m, width)
            for method in methods:
                if not applicable(method, n, m, r, kind):
                    continue
                row = {"kind": kind, "method": method.value, "n": n, "m": m, "shape": shape,
                       "lo": r.lo, "hi": r.hi}
                if predict:
                    guard = 0 if kind == "poly" else settings.policy().guard(r.lo, min(n, m), settings.base)
                    row.update(muls=predict_muls(model, method, n, m, r, kind, guard), adds="",
                               seconds="", source="predicted")
                else:
                    ring = counting_wrap(ZZ)
                    t0 = time.perf_counter()
                    clipped_product(f, g, r, settings, method, ring)
                    dt = time.perf_counter() - t0
                    row.update(muls=ring.mul_count, adds=ring.add_count,
                               seconds=f"{dt:.6f}", source="measured")
                rows.append(row)
    return rows


BENCH_COLUMNS = ("kind", "method", "n", "m", "shape", "lo", "hi", "muls", "adds", "seconds", "source")


def cmd_bench(args, out=None) -> int:
    out = out or sys.stdout
    sizes = []
    for tok in _csv_list(args.sizes):
        n, _, m = tok.partition("x")
        try:
            sizes.append((int(n), int(m or n)))
        except ValueError:
            raise UsageError(f"bad size {tok!r}; use N or NxM") from None
    if any(n < 1 or m < 1 for n, m in sizes):
        raise UsageError("sizes must be positive")
    shapes = _csv_list(args.shapes)
    for s in shapes:
        if s not in SHAPES:
            raise UsageError(f"unknown shape {s!r}; choose from {', '.join(SHAPES)}")
    try:
        methods = _csv_list(args.methods, MethodChoice.parse) if args.methods else None
    except ValueError as e:
        raise UsageError(str(e)) from None
    rows = bench_rows(sizes, shapes, methods, args.kind, args.width, args.seed,
                      args.predict, _settings(args))
    w = csv.DictWriter(out, BENCH_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return OK


def _anchor(name, expected, got):
    return {"anchor": name, "ok": expected == got, "expected": str(expected), "got": str(got)}


def selftest_results() -> list[dict]:
    """Check every reference example against freshly computed values."""
    results = []
    f, g = ref.EXAMPLE_F, ref.EXAMPLE_G
    n, m = f.degree + 1, g.degree + 1
    results.append(_anchor("poly.product", ref.EXAMPLE_PRODUCT, cp.full_product(f, g)))
    for r, name, expected in ((ClipRange(2, 3), "poly.clip[2..3]", ref.EXAMPLE_CLIP_2_3),
                              (ClipRange(6, 8), "poly.top[6..8]", ref.EXAMPLE_TOP_6)):
        for method in MethodChoice:
            if applicable(method, n, m, r):
                results.append(_anchor(f"{name}.{method.value}", expected,
                                       clipped_product(f, g, r, method=method)))
    low = ClipRange(0, 3)
    results.append(_anchor("poly.bottom[0..3].unclipped", ref.EXAMPLE_BOTTOM_3_FULL,
                           cp.full_product(clip(f, low), clip(g, low))))
    results.append(_anchor("poly.bottom[0..3]", ref.EXAMPLE_BOTTOM_3, cp.bottom_clipped(f, g, 3)))
    results.append(_anchor("poly.reversed_bottom", ref.EXAMPLE_REVERSED_BOTTOM,
                           cp.bottom_clipped(reverse(f), reverse(g), 2)))
    results.append(_anchor("poly.top_via_reverse", ref.EXAMPLE_TOP_6,
                           cp.top_clipped_via_reverse(f, g, 6)))

    base, r = ref.INT_EXAMPLE_BASE, ClipRange(2, 4)
    x, one = DigitNat.from_int(ref.INT_EXAMPLE, base), DigitNat.from_int(1, base)
    results.append(_anchor("int.clip[2..4]", ref.INT_EXAMPLE_CLIP_2_4, int(iclip(x, r))))
    for method in MethodChoice:
        if applicable(method, 12, 1, r, "int"):
            results.append(_anchor(f"int.clip[2..4].{method.value}", ref.INT_EXAMPLE_CLIP_2_4,
                                   int(clipped_product(x, one, r, method=method))))

    nf, ng, a, b = ref.CLASSICAL_EXAMPLE_SHAPE
    cf, cg = ShiftedPoly(range(1, nf + 1)), ShiftedPoly(range(1, ng + 1))
    ring = counting_wrap(ZZ)
    cp.classical_clipped(cf, cg, ClipRange(a, b), ring)
    results.append(_anchor("counts.classical", ref.CLASSICAL_EXAMPLE_COUNTS, tuple(snapshot(ring))))
    ring = counting_wrap(ZZ)
    cp.clipped_from_bottom(cf, cg, ClipRange(a, b), ring)
    results.append(_anchor("counts.from_bottom", ref.FROM_BOTTOM_EXAMPLE_COUNTS, tuple(snapshot(ring))))

    cells = table_counts(16)
    bad = [(k, v) for k, v in cells.items() if v != ref.table2_cell(*k)]
    results.append({"anchor": "table.prec16", "ok": not bad and len(cells) == 496,
                    "expected": "496 reference cells",
                    "got": "all match" if not bad else f"{len(bad)} differ, first {bad[0]}"})
    return results


def cmd_selftest(args, out=None) -> int:
    out = out or sys.stdout
    results = selftest_results()
    if args.json:
        print(json.dumps(results, indent=1), file=out)
    else:
        for r in results:
            if r["ok"]:
                print(f"PASS {r['anchor']}", file=out)
            else:
                print(f"FAIL {r['anchor']}: expected {r['expected']}, got {r['got']}", file=out)
    return OK if all(r["ok"] for r in results) else VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="clipprod", description="Clipped polynomial and integer products.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", help="key=value settings file")
        sp.add_argument("--format", choices=("plain", "json", "csv"), default="plain")

    def product(sp):
        sp.add_argument("f")
        sp.add_argument("g")
        sp.add_argument("--range", type=_range, required=True, metavar="A..B")
        sp.add_argument("--method", type=_method, default=None,
                        help="auto (default) or one of: " + ", ".join(m.value for m in MethodChoice))
        sp.add_argument("--count", action="store_true", help="also report ring multiplications/additions")
        sp.add_argument("--check", action="store_true", help="compare against the brute-force oracle")
        common(sp)

    sp = sub.add_parser("int", help="clipped product of two decimal integers")
    product(sp)
    sp.add_argument("--base", type=int, default=None)
    sp.add_argument("--guard", choices=(EXACT, THEOREM), default=None)
    sp.set_defaults(run=cmd_int)

    sp = sub.add_parser("poly", help="clipped product of two polynomials (e:c,e:c,...)")
    product(sp)
    sp.set_defaults(run=cmd_poly)

    sp = sub.add_parser("table", help="count-mode Karatsuba multiplication table as CSV")
    sp.add_argument("--prec", type=int, default=16)
    sp.set_defaults(run=cmd_table)

    sp = sub.add_parser("bench", help="counts and timings per method, size and range shape")
    sp.add_argument("--sizes", default="64", help="comma list of N or NxM")
    sp.add_argument("--shapes", default="prefix,middle", help="comma list from " + ",".join(SHAPES))
    sp.add_argument("--methods", default=None, help="comma list of methods (default: all applicable)")
    sp.add_argument("--kind", choices=("poly", "int"), default="poly")
    sp.add_argument("--width", type=int, default=8, help="width of the middle shape")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--base", type=int, default=None)
    sp.add_argument("--guard", choices=(EXACT, THEOREM), default=None)
    sp.add_argument("--predict", action="store_true",
                    help="report predicted multiplication counts without running")
    sp.add_argument("--config")
    sp.set_defaults(run=cmd_bench)

    sp = sub.add_parser("selftest", help="check the reference examples")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(run=cmd_selftest)
    return p


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else USAGE
    try:
        return args.run(args)
    except (UsageError, OSError, ValueError) as e:
        print(f"clipprod: error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
