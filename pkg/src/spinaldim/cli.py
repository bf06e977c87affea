"""Deterministic command-line front end.

Data goes to stdout (or --out), diagnostics to stderr.  Exit codes:
0 success, 2 usage error, 3 verification mismatch, 4 budget or cap
refusal.  Identical configurations produce byte-identical output; timing
is only emitted when --timing is passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from . import __version__
from .dimension import dimension_report
from .errors import BudgetExceeded
from .portraits import Portrait
from .synthesis import spectrum_sample, spectrum_svg, synthesize
from .trees import TreeSequence
from .wreath import verify_level_action

USAGE_ERROR = 2
MISMATCH_ERROR = 3
BUDGET_ERROR = 4


@dataclass
class RunConfig:
    command: str
    options: dict = field(default_factory=dict)

    def echo(self) -> dict:
        return {"tool": "spinaldim", "version": __version__, "command": self.command,
                "config": dict(self.options)}


def _nstr(x, digits: int) -> str:
    return mpmath.nstr(x, digits, strip_zeros=False)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_comment(cfg: RunConfig) -> str:
    opts = " ".join(f"{k}={v}" for k, v in cfg.options.items())
    return f"# spinaldim {__version__} {cfg.command} {opts}\n"


def _parse_alpha(text: str) -> Fraction:
    try:
        alpha = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"cannot parse alpha {text!r}") from exc
    if not 0 <= alpha <= 1:
        raise argparse.ArgumentTypeError("alpha must lie in [0, 1]")
    return alpha


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinaldim",
        description="Exact tools for spinal groups on rooted trees",
    )
    parser.add_argument("--version", action="version", version=f"spinaldim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="synthesize a valency sequence for a target")
    p.add_argument("--alpha", required=True, type=_parse_alpha)
    p.add_argument("--terms", required=True, type=int)
    p.add_argument("--strategy", choices=["minimal", "prime-rich"], default="minimal")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--digits", type=int, default=12)
    p.add_argument("--out")

    p = sub.add_parser("dim", help="synthesize, then report partial dimensions")
    p.add_argument("--alpha", required=True, type=_parse_alpha)
    p.add_argument("--terms", required=True, type=int)
    p.add_argument("--levels", required=True, type=int)
    p.add_argument("--strategy", choices=["minimal", "prime-rich"], default="minimal")
    p.add_argument("--precision", type=int, default=128)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--digits", type=int, default=12)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="check a finite level action against its closed form")
    p.add_argument("--seq", required=True)
    p.add_argument("--level", required=True, type=int)
    p.add_argument("--group", choices=["G", "H"], default="G")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=700)
    p.add_argument("--timing", action="store_true")
    p.add_argument("--out")

    p = sub.add_parser("spectrum", help="sample realizable dimensions")
    p.add_argument("--alpha", required=True, type=_parse_alpha)
    p.add_argument("--seq", required=True)
    p.add_argument("--max-den", required=True, type=int)
    p.add_argument("--horizon", required=True, type=int)
    p.add_argument("--svg")
    p.add_argument("--digits", type=int, default=12)
    p.add_argument("--out")

    p = sub.add_parser("portrait", help="dump the labels of a spinal generator")
    p.add_argument("--gen", required=True, choices=["zeta", "psi", "xi", "theta"])
    p.add_argument("--seq", required=True)
    p.add_argument("--depth", required=True, type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")

    return parser


def _cmd_synth(args) -> int:
    if args.terms < 1:
        raise _Usage("terms must be at least 1")
    cfg = RunConfig("synth", {
        "alpha": str(args.alpha), "terms": args.terms, "strategy": args.strategy,
        "digits": args.digits,
    })
    trace = synthesize(args.alpha, args.terms, args.strategy)
    if args.format == "json":
        doc = cfg.echo()
        doc["degenerate"] = trace.degenerate
        doc["dimension"] = 1 if trace.degenerate == "H=G" else (0 if trace.degenerate else None)
        doc["steps"] = [
            {
                "i": s.i, "l": s.l, "window_lo": s.window_lo, "window_hi": s.window_hi,
                "P": str(s.p), "gap": _nstr(mpmath.mpf(s.gap.numerator) / s.gap.denominator,
                                            args.digits),
            }
            for s in trace.steps
        ]
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
        return 0
    lines = [_csv_comment(cfg)]
    lines.append("i,l_i,window_lo,window_hi,P_num,P_den,gap_decimal\n")
    if trace.degenerate is not None:
        lines[0] = lines[0].rstrip("\n") + f" degenerate={trace.degenerate}\n"
    for s in trace.steps:
        gap = _nstr(mpmath.mpf(s.gap.numerator) / s.gap.denominator, args.digits)
        lines.append(f"{s.i},{s.l},{s.window_lo},{s.window_hi},"
                     f"{s.p.numerator},{s.p.denominator},{gap}\n")
    _emit("".join(lines), args.out)
    return 0


def _cmd_dim(args) -> int:
    if args.levels < 1:
        raise _Usage("levels must be at least 1")
    if args.terms < 1:
        raise _Usage("terms must be at least 1")
    if args.levels > args.terms:
        raise _Usage("levels cannot exceed terms")
    if args.alpha in (0, 1):
        raise _Usage("dimension report needs a target strictly between 0 and 1")
    cfg = RunConfig("dim", {
        "alpha": str(args.alpha), "terms": args.terms, "levels": args.levels,
        "strategy": args.strategy, "precision": args.precision, "digits": args.digits,
    })
    trace = synthesize(args.alpha, args.terms, args.strategy)
    seq = trace.sequence()
    report = dimension_report(seq, args.levels, args.precision)
    d = args.digits
    if args.format == "json":
        doc = cfg.echo()
        doc["sequence"] = list(report.sequence)
        doc["rows"] = [
            {
                "n": r.n,
                "alpha_n": str(r.alpha),
                "d_n": _nstr(r.d, d),
                "lower_n": _nstr(r.envelope.lower, d),
                "upper_n": _nstr(r.envelope.upper, d),
                "ratio_n": _nstr(r.envelope.ratio, d),
                "T1": _nstr(r.envelope.t1, d),
                "T2": _nstr(r.envelope.t2, d),
            }
            for r in report.rows
        ]
        doc["liminf_estimate"] = _nstr(report.liminf_estimate, d)
        doc["limsup_estimate"] = _nstr(report.limsup_estimate, d)
        doc["diverged"] = report.diverged
        doc["flagged_levels"] = report.flagged_levels
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
        return 0
    lines = [_csv_comment(cfg)]
    lines.append("n,alpha_n_num,alpha_n_den,d_n,lower_n,upper_n,T1,T2\n")
    for r in report.rows:
        lines.append(
            f"{r.n},{r.alpha.numerator},{r.alpha.denominator},{_nstr(r.d, d)},"
            f"{_nstr(r.envelope.lower, d)},{_nstr(r.envelope.upper, d)},"
            f"{_nstr(r.envelope.t1, d)},{_nstr(r.envelope.t2, d)}\n"
        )
    _emit("".join(lines), args.out)
    return 0


def _cmd_verify(args) -> int:
    try:
        seq = TreeSequence.from_text(args.seq)
    except ValueError as exc:
        raise _Usage(str(exc)) from exc
    if not 1 <= args.level <= len(seq):
        raise _Usage(f"level must lie in 1..{len(seq)}")
    cfg = RunConfig("verify", {
        "seq": seq.to_text(), "level": args.level, "group": args.group,
        "seed": args.seed, "cap": args.cap,
    })
    report = verify_level_action(seq, args.level, args.group, seed=args.seed,
                                 degree_cap=args.cap)
    doc = cfg.echo()
    doc.update(report.to_dict(include_timing=args.timing))
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0 if report.match else MISMATCH_ERROR


def _cmd_spectrum(args) -> int:
    try:
        seq = TreeSequence.from_text(args.seq)
    except ValueError as exc:
        raise _Usage(str(exc)) from exc
    if args.max_den < 1:
        raise _Usage("max denominator must be at least 1")
    if not 0 <= args.horizon <= len(seq):
        raise _Usage(f"horizon must lie in 0..{len(seq)}")
    cfg = RunConfig("spectrum", {
        "alpha": str(args.alpha), "seq": seq.to_text(), "max_den": args.max_den,
        "horizon": args.horizon, "digits": args.digits,
    })
    result = spectrum_sample(args.alpha, seq, args.max_den, args.horizon)
    doc = cfg.echo()
    doc["entries"] = [
        {
            "value": e.text,
            "decimal": _nstr(mpmath.mpf(e.value.numerator) / e.value.denominator,
                             args.digits),
            "provenance": e.provenance,
            "witness": list(e.witness),
            "realization": {"level": e.realization[0], "k": e.realization[1]}
            if e.realization
            else None,
        }
        for e in result.entries
    ]
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(spectrum_svg(result) + "\n")
    return 0


def _cmd_portrait(args) -> int:
    try:
        seq = TreeSequence.from_text(args.seq)
    except ValueError as exc:
        raise _Usage(str(exc)) from exc
    if not 1 <= args.depth <= len(seq):
        raise _Usage(f"depth must lie in 1..{len(seq)}")
    cfg = RunConfig("portrait", {
        "gen": args.gen, "seq": seq.to_text(), "depth": args.depth,
    })
    portrait = Portrait.spinal(args.gen, seq, args.depth)
    if args.format == "json":
        doc = cfg.echo()
        doc["labels"] = portrait.dump_records()
        _emit(json.dumps(doc, indent=2) + "\n", args.out)
        return 0
    text = _csv_comment(cfg) + "".join(line + "\n" for line in portrait.dump_lines())
    _emit(text, args.out)
    return 0


class _Usage(Exception):
    pass


_HANDLERS = {
    "synth": _cmd_synth,
    "dim": _cmd_dim,
    "verify": _cmd_verify,
    "spectrum": _cmd_spectrum,
    "portrait": _cmd_portrait,
}


def main(argv: list[str] | None = None) -> int:
    # synthesized sequences produce very large exact integers
    sys.set_int_max_str_digits(2_000_000)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return _HANDLERS[args.command](args)
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return BUDGET_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
