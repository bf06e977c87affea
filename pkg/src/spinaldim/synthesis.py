"""Valency-sequence synthesis for a target limit and spectrum sampling.

Given a target a in (0,1), each step picks l_i with

    t < (l_i - 2)/l_i < (6 + t)/7,   t = a / P_{i-1},

equivalently l_i in the open interval (2/(1-t), 14/(1-t)) clipped to >= 5.
The interval is never empty (its upper endpoint is seven times the lower),
every choice keeps a < P_i < P_{i-1}, and the gap to the target shrinks by
a factor below 6/7 per step.  All of this is exact rational arithmetic.

The spectrum sampler enumerates rationals q = a/b whose reduced
denominator divides a product of distinct terms (l_j - 2); each such q is
a subgroup dimension witnessed by an index set, and each product q*target
is reachable one construction level down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BudgetExceeded
from .trees import TreeSequence

_MAX_ENTRY_DIGITS = 100_000
_SCAN_CAP = 2_000_000


def window(alpha: Fraction, p_prev: Fraction) -> tuple[int, int]:
    """Inclusive integer range of admissible next valencies.

    Solves t < (l-2)/l < (6+t)/7 with t = alpha/p_prev over the integers
    and clips the result to l >= 5.
    """
    alpha = Fraction(alpha)
    p_prev = Fraction(p_prev)
    if not 0 < alpha < 1:
        raise ValueError("target must lie strictly between 0 and 1")
    if not alpha < p_prev <= 1:
        raise ValueError("running product must lie in (alpha, 1]")
    t = alpha / p_prev
    lo = max(math.floor(2 / (1 - t)) + 1, 5)
    hi = math.ceil(14 / (1 - t)) - 1
    if lo > hi:
        raise RuntimeError(
            f"empty admissible window at t={t}; this contradicts the window algebra"
        )
    return lo, hi


@dataclass
class SynthesisStep:
    i: int
    l: int
    window_lo: int
    window_hi: int
    p: Fraction
    gap: Fraction


@dataclass
class SynthesisTrace:
    alpha: Fraction
    strategy: str
    steps: list[SynthesisStep]
    degenerate: str | None = None

    def sequence(self) -> TreeSequence:
        if self.degenerate is not None:
            raise ValueError(f"degenerate trace ({self.degenerate}) has no sequence")
        marker = f"target={self.alpha}:{self.strategy}"
        return TreeSequence(tuple(s.l for s in self.steps), extends=marker)


def _sieve_primes(limit: int) -> list[int]:
    if limit < 2:
        return []
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for p in range(2, int(math.isqrt(limit)) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    return [int(p) for p in np.nonzero(flags)[0]]


def distinct_prime_factor_counts(lo: int, hi: int) -> np.ndarray:
    """Number of distinct prime factors for every integer in [lo, hi]."""
    if lo < 2 or hi < lo:
        raise ValueError("need 2 <= lo <= hi")
    vals = np.arange(lo, hi + 1, dtype=np.int64)
    counts = np.zeros(len(vals), dtype=np.int16)
    residual = vals.copy()
    for p in _sieve_primes(math.isqrt(hi)):
        start = ((lo + p - 1) // p) * p
        idx = np.arange(start - lo, len(vals), p)
        if idx.size == 0:
            continue
        counts[idx] += 1
        r = residual[idx]
        r //= p
        while True:
            div = r % p == 0
            if not div.any():
                break
            r[div] //= p
        residual[idx] = r
    counts[residual > 1] += 1
    return counts


def _pick_prime_rich(lo: int, hi: int, scan_cap: int) -> int:
    width = hi - lo + 1
    if width > scan_cap:
        raise BudgetExceeded(
            f"prime-rich scan over {width} candidates exceeds cap {scan_cap}",
            required=width,
            limit=scan_cap,
        )
    counts = distinct_prime_factor_counts(lo - 2, hi - 2)
    best = int(np.argmax(counts))
    return lo + best


def synthesize(
    alpha: Fraction,
    terms: int,
    strategy: str = "minimal",
    max_entry_digits: int = _MAX_ENTRY_DIGITS,
    scan_cap: int = _SCAN_CAP,
) -> SynthesisTrace:
    """Choose ``terms`` valencies whose (l-2)/l products approach alpha.

    minimal takes the smallest admissible integer each step; prime-rich
    takes the admissible l whose l - 2 has the most distinct prime
    factors, ties to the smallest.  Entries of the minimal strategy grow
    roughly quadratically per step, so runs are refused once an entry
    would exceed max_entry_digits decimal digits.
    """
    alpha = Fraction(alpha)
    if strategy not in ("minimal", "prime-rich"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if terms < 1:
        raise ValueError("need at least one term")
    if not 0 <= alpha <= 1:
        raise ValueError("target must lie in [0, 1]")
    if alpha == 1:
        return SynthesisTrace(alpha, strategy, [], degenerate="H=G")
    if alpha == 0:
        return SynthesisTrace(alpha, strategy, [], degenerate="H=1")
    steps: list[SynthesisStep] = []
    p_prev = Fraction(1)
    for i in range(terms):
        lo, hi = window(alpha, p_prev)
        if (lo.bit_length() * 0.302) > max_entry_digits:
            raise BudgetExceeded(
                f"entry {i} needs about {int(lo.bit_length() * 0.302)} digits "
                f"(budget {max_entry_digits})",
                required=lo.bit_length(),
                limit=max_entry_digits,
            )
        if strategy == "minimal":
            l = lo
        else:
            l = _pick_prime_rich(lo, hi, scan_cap)
        p = p_prev * Fraction(l - 2, l)
        steps.append(SynthesisStep(i, l, lo, hi, p, p - alpha))
        p_prev = p
    return SynthesisTrace(alpha, strategy, steps)


@dataclass
class MembershipResult:
    status: str  # "yes" | "no_within_horizon"
    witness: tuple[int, ...] | None

    @property
    def found(self) -> bool:
        return self.status == "yes"


def denominator_witness(q: Fraction, seq: TreeSequence, horizon: int) -> MembershipResult:
    """Indices j < horizon whose (l_j - 2) factors absorb q's denominator.

    Strips gcd(b, l_j - 2) from the reduced denominator b once per index;
    distinct indices only.  Monotone in the horizon: a yes stays a yes.
    """
    q = Fraction(q)
    if not 0 <= q <= 1:
        raise ValueError("rational must lie in [0, 1]")
    if horizon > len(seq):
        raise ValueError(f"horizon {horizon} exceeds sequence length {len(seq)}")
    b = q.denominator
    used = []
    for j in range(horizon):
        if b == 1:
            break
        g = math.gcd(b, seq[j] - 2)
        if g > 1:
            used.append(j)
            b //= g
    if b == 1:
        return MembershipResult("yes", tuple(used))
    return MembershipResult("no_within_horizon", None)


@dataclass
class SpectrumEntry:
    value: Fraction
    text: str
    provenance: str  # "L" | "L_alpha"
    witness: tuple[int, ...]
    realization: tuple[int, int] | None  # (level n, count k) with value = k/m_n


@dataclass
class SpectrumResult:
    alpha: Fraction
    sequence: tuple[int, ...]
    max_denominator: int
    horizon: int
    entries: list[SpectrumEntry]


def _realization(q: Fraction, seq: TreeSequence) -> tuple[int, int] | None:
    if q == 0:
        return None
    for n in range(1, len(seq) + 1):
        k = q * seq.level_size(n)
        if k.denominator == 1:
            return n, int(k)
    return None


def spectrum_sample(
    alpha: Fraction,
    seq: TreeSequence,
    max_denominator: int,
    horizon: int,
) -> SpectrumResult:
    """All admissible q = a/b with b <= max_denominator, plus their alpha-multiples."""
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise ValueError("target must lie in [0, 1]")
    if max_denominator < 1:
        raise ValueError("max denominator must be at least 1")
    entries: list[SpectrumEntry] = []
    for b in range(1, max_denominator + 1):
        for a in range(0, b + 1):
            if math.gcd(a, b) != 1:
                continue
            q = Fraction(a, b)
            res = denominator_witness(q, seq, horizon)
            if not res.found:
                continue
            entries.append(
                SpectrumEntry(
                    value=q,
                    text=str(q),
                    provenance="L",
                    witness=res.witness,
                    realization=_realization(q, seq),
                )
            )
            entries.append(
                SpectrumEntry(
                    value=q * alpha,
                    text=f"{q}*alpha",
                    provenance="L_alpha",
                    witness=res.witness,
                    realization=None,
                )
            )
    entries.sort(key=lambda e: (e.value, e.provenance, e.text))
    deduped: list[SpectrumEntry] = []
    for e in entries:
        if deduped and (deduped[-1].value, deduped[-1].provenance, deduped[-1].text) == (
            e.value,
            e.provenance,
            e.text,
        ):
            continue
        deduped.append(e)
    return SpectrumResult(alpha, seq.valencies, max_denominator, horizon, deduped)


def spectrum_svg(result: SpectrumResult) -> str:
    """Self-contained number-line plot of a spectrum sample.

    Entries from the rational family are drawn as ticks above the axis,
    alpha-multiples as diamonds below it.
    """
    width, height = 800, 140
    margin = 40
    axis_y = 70
    span = width - 2 * margin

    def x_of(value: Fraction) -> float:
        return margin + float(value) * span

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<line x1="{margin}" y1="{axis_y}" x2="{width - margin}" y2="{axis_y}" '
        'stroke="black" stroke-width="1.5"/>',
    ]
    for value, name in ((Fraction(0), "0"), (result.alpha, "a"), (Fraction(1), "1")):
        x = x_of(value)
        parts.append(
            f'<line x1="{x:.2f}" y1="{axis_y - 6}" x2="{x:.2f}" y2="{axis_y + 6}" '
            'stroke="black" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{axis_y + 34}" font-size="12" text-anchor="middle">'
            f"{name}</text>"
        )
    for e in result.entries:
        x = x_of(e.value)
        if e.provenance == "L":
            parts.append(
                f'<line x1="{x:.2f}" y1="{axis_y - 18}" x2="{x:.2f}" y2="{axis_y - 2}" '
                f'stroke="#1f5fbf" stroke-width="1.5"><title>{e.text}</title></line>'
            )
        else:
            parts.append(
                f'<path d="M {x:.2f} {axis_y + 4} l 4 6 l -4 6 l -4 -6 z" fill="#bf3f1f">'
                f"<title>{e.text}</title></path>"
            )
    parts.append("</svg>")
    return "\n".join(parts)
