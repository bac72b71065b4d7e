"""Command-line interface: ``lissatoric braid|verify|classify|sweep|render``."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .braid import BraidWord
from .errors import CriticalPhaseError, LissatoricError, ParameterError
from .invariants import jones_polynomial
from .oracle import (
    PhaseSpec,
    Verdict,
    compare_up_to_mirror,
    default_phase,
    detect_braid_float,
    dump_events,
    enumerate_braid,
    enumerate_events,
    events_by_value,
    is_critical,
    oriented_enumerate_braid,
    phase_sweep,
)
from .render import curve_coords, shadow_svg, write_coords_csv
from .sweep import sweep, write_json, write_tsv
from .symbolic import classify, lissajous_blocks, lissajous_braid, normalize_params

EXIT_OK = 0
EXIT_PARAMS = 2
EXIT_VERIFY = 3
EXIT_IO = 4


def _phase_spec(N: int, q: int, p: int, phase: str | None) -> PhaseSpec:
    spec = default_phase(N, q, p)
    if phase is None:
        return spec
    phi = Fraction(phase)
    if is_critical(N, q, p, phi):
        raise CriticalPhaseError(f"phase {phi} is critical for K({N},{q},{p}); strands meet in space")
    return PhaseSpec(phi, spec.eta)


def cmd_braid(args: argparse.Namespace) -> int:
    N, q, p = args.N, args.q, args.p
    params = normalize_params(N, q, p)
    payload: dict[str, object] = {"params": {"N": N, "q": q, "p": p}, "normalization": params.as_dict()}
    if args.method == "symbolic":
        w = lissajous_braid(N, q, p)
        payload["blocks"] = [{"kind": b.kind, "exponent": b.exponent, "word": str(b.word)} for b in lissajous_blocks(N, q, p)]
    else:
        spec = _phase_spec(N, q, p, args.phase)
        payload["phase"] = {"phi": str(spec.phi), "eta": str(spec.eta)}
        if args.method == "exact":
            events = enumerate_events(N, q, p, spec)
            w = enumerate_braid(N, q, p, spec)
            payload["blocks"] = [
                {"t": str(group[0].t), "word": str(BraidWord(N, tuple((e.gen_index, e.sign) for e in group)))}
                for group in events_by_value(events)
            ]
            if args.events:
                sys.stdout.write(dump_events(events) + "\n")
                return EXIT_OK
        else:
            w = detect_braid_float(N, q, p, phi=float(spec.phi), samples=args.samples, eta=float(spec.eta))
    payload["method"] = args.method
    payload["word"] = str(w)
    payload["length"] = len(w)
    if args.format == "json":
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        print(w)
    return EXIT_OK


_RANK = {
    Verdict.EQUAL: 0,
    Verdict.MIRROR_EQUAL: 1,
    Verdict.JONES_EQUAL: 2,
    Verdict.JONES_MIRROR_EQUAL: 3,
    Verdict.DISTINCT: 4,
}


def cmd_verify(args: argparse.Namespace) -> int:
    N, q, p = args.N, args.q, args.p
    params = normalize_params(N, q, p)
    _, qo, po = params.oriented
    symbolic = lissajous_braid(N, q, p)
    print(f"K({N},{q},{p}) symbolic: {symbolic}")
    if params.swapped:
        print(f"normalised as K({N},{qo},{po}) (q/d even, entries exchanged)")
    verdicts: list[Verdict] = []
    exact_default = None
    for j, spec in enumerate(phase_sweep(N, qo, po, args.phases) if args.phases > 1 else [None]):
        exact = oriented_enumerate_braid(N, q, p, spec)
        if j == 0:
            exact_default = exact
        v = compare_up_to_mirror(symbolic, exact)
        label = "default phase" if spec is None else f"phase {spec.phi}"
        print(f"symbolic vs exact ({label}): {v}")
        verdicts.append(v)
    float_word = detect_braid_float(N, qo, po, samples=args.samples)
    v = compare_up_to_mirror(exact_default, float_word)
    print(f"exact vs float (default phase): {v}")
    verdicts.append(v)
    if params.swapped:
        v = compare_up_to_mirror(symbolic, enumerate_braid(N, q, p))
        print(f"symbolic vs exact K({N},{q},{p}) as given: {v}")
        verdicts.append(v)
    worst = max(verdicts, key=_RANK.__getitem__)
    print(f"weakest agreement: {worst}")
    print(f"verdict: {verdicts[0]}")
    return EXIT_VERIFY if worst is Verdict.DISTINCT else EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    N, q, p = args.N, args.q, args.p
    c = classify(N, q, p)
    report: dict[str, object] = {"N": N, "q": q, "p": p, **c.as_dict()}
    if c.trivial_family:
        report["jones_trivial"] = jones_polynomial(lissajous_braid(N, q, p)) == 1
    if args.format == "json":
        json.dump(report, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for key, value in report.items():
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    rows, skipped = sweep(
        args.N, args.q, args.p_min, args.p_max, parallel=args.parallel, workers=args.workers, check_float=args.float
    )
    writer = write_json if args.format == "json" else write_tsv
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            writer(fh, rows)
    else:
        writer(sys.stdout, rows)
    print(f"{len(rows)} rows, {skipped} skipped", file=sys.stderr)
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    N, q, p = args.N, args.q, args.p
    if not (args.svg or args.coords):
        raise ParameterError("render needs --svg PATH or --coords PATH")
    spec = _phase_spec(N, q, p, args.phase)
    if args.coords:
        phi = float(Fraction(args.phase)) if args.phase is not None else 0.0
        coords = curve_coords(N, q, p, phi=phi, samples=args.samples)
        with open(args.coords, "w", encoding="utf-8", newline="") as fh:
            write_coords_csv(fh, coords)
    if args.svg:
        Path(args.svg).write_text(shadow_svg(N, q, p, spec), encoding="utf-8")
    return EXIT_OK


def _add_triple(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("N", type=int)
    sp.add_argument("q", type=int)
    sp.add_argument("p", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lissatoric", description="Braid words and invariants of Lissajous-toric knots K(N,q,p).")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("braid", help="print the braid word")
    _add_triple(sp)
    sp.add_argument("--method", choices=("symbolic", "exact", "float"), default="symbolic")
    sp.add_argument("--phase", help="braid-frame phase φ, e.g. 1/40 (exact and float methods)")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--events", action="store_true", help="dump crossing events (exact method)")
    sp.add_argument("--samples", type=int, default=None, help="grid size for the float detector")
    sp.set_defaults(func=cmd_braid)

    sp = sub.add_parser("verify", help="compare symbolic, exact and float constructions")
    _add_triple(sp)
    sp.add_argument("--phases", type=int, default=1, help="number of non-critical phases to enumerate")
    sp.add_argument("--samples", type=int, default=None)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("classify", help="report ribbon, periodicity, genus, amphicheirality and trivial-family flags")
    _add_triple(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("sweep", help="tabulate Jones polynomials over a range of p")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--p-min", type=int, required=True)
    sp.add_argument("--p-max", type=int, required=True)
    sp.add_argument("--out", help="output file (default: standard output)")
    sp.add_argument("--format", choices=("tsv", "json"), default="tsv")
    sp.add_argument("--parallel", action="store_true")
    sp.add_argument("--workers", type=int, default=None)
    sp.add_argument("--float", action="store_true", help="also check the float detector on every row")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("render", help="write curve coordinates or a braid-shadow SVG")
    _add_triple(sp)
    sp.add_argument("--svg", help="SVG output path")
    sp.add_argument("--coords", help="CSV output path")
    sp.add_argument("--samples", type=int, default=1000)
    sp.add_argument("--phase", help="braid-frame phase φ (the curve uses 2πφ/N)")
    sp.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParameterError, CriticalPhaseError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except LissatoricError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
