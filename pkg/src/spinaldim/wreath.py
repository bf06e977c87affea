"""Closed-form quotient orders, log-factorials and level-action verification.

The full group of even-labeled automorphisms of a depth-n truncation has
order  prod_{i<n} (l_i!/2)^{m_i}  with m_i the size of level i.  The same
closed form over the shifted sequence (l_i - 2) gives the finitely
generated subgroup's quotients.  ``verify_level_action`` checks the four
generators really produce a group of that order at desk scale, using the
stabilizer chain as the independent counter.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import mpmath
from mpmath import mpf

from .errors import BudgetExceeded, DegreeCapExceeded
from .perms import alt_generators, embedded_alt_generators
from .portraits import Portrait
from .schreier import StabilizerChain
from .trees import TreeSequence

_GUARD_BITS = 32
_EXACT_SUM_LIMIT = 100_000
_lnfact_tables: dict[int, list] = {}


def lnfact(n: int, precision_bits: int = 128) -> mpf:
    """ln(n!) at the requested binary precision.

    Up to n = 100000 this is the exact partial sum of ln k; larger
    arguments (they occur for synthesized sequences, whose entries grow
    very fast) fall back to the log-gamma function at the same precision.
    """
    if n < 0:
        raise ValueError("factorial argument must be nonnegative")
    prec = precision_bits + _GUARD_BITS
    if n <= _EXACT_SUM_LIMIT:
        table = _lnfact_tables.setdefault(prec, [mpmath.mpf(0), mpmath.mpf(0)])
        if n >= len(table):
            with mpmath.workprec(prec):
                acc = table[-1]
                for k in range(len(table), n + 1):
                    acc = acc + mpmath.log(k)
                    table.append(acc)
        return table[n]
    with mpmath.workprec(prec):
        return mpmath.loggamma(mpmath.mpf(n) + 1)


def stirling_envelope(n: int, precision_bits: int = 128) -> tuple[mpf, mpf]:
    """Bounds (lower, upper) with lower <= ln(n!) <= upper.

    lower = 1 + n(ln n - 1), upper = 1 + (n+1)(ln(n+1) - 1); the lower
    bound is attained at n = 1.
    """
    if n < 1:
        raise ValueError("envelope needs n >= 1")
    with mpmath.workprec(precision_bits + _GUARD_BITS):
        lo = 1 + n * (mpmath.log(n) - 1)
        hi = 1 + (n + 1) * (mpmath.log(n + 1) - 1)
        return lo, hi


@dataclass
class QuotientOrder:
    """Order of a truncated quotient, exactly and/or as a natural log."""

    sequence: tuple[int, ...]
    level: int
    exact: int | None
    log_value: mpf
    precision_bits: int


def _estimate_digits(seq: TreeSequence, n: int) -> float:
    total = 0.0
    m = 1
    for l in seq.valencies[:n]:
        try:
            term = math.lgamma(l + 1) / math.log(10) - math.log10(2)
        except OverflowError:
            return math.inf
        total += m * term
        if total > 1e18:
            return math.inf
        m *= l
    return total


def wreath_quotient_order(
    seq: TreeSequence,
    n: int,
    variant: str = "exact",
    precision_bits: int = 128,
    digit_budget: int = 100_000,
) -> QuotientOrder:
    """prod_{i<n} (l_i!/2)^{m_i}, exactly or as a log.

    The exact variant refuses to materialize integers beyond digit_budget
    decimal digits and directs the caller to the log variant instead.
    """
    if variant not in ("exact", "log"):
        raise ValueError(f"unknown variant {variant!r}")
    if n > len(seq):
        raise ValueError(f"level {n} exceeds sequence length {len(seq)}")
    exact = None
    if variant == "exact":
        digits = _estimate_digits(seq, n)
        if digits > digit_budget:
            raise BudgetExceeded(
                f"exact order needs about {digits:.3g} digits (budget {digit_budget}); "
                "use the log variant",
                required=digits,
                limit=digit_budget,
            )
        exact = 1
        m = 1
        for l in seq.valencies[:n]:
            exact *= (math.factorial(l) // 2) ** m
            m *= l
    with mpmath.workprec(precision_bits + _GUARD_BITS):
        ln2 = mpmath.log(2)
        total = mpmath.mpf(0)
        m = 1
        for l in seq.valencies[:n]:
            total += mpmath.mpf(m) * (lnfact(l, precision_bits) - ln2)
            m *= l
    return QuotientOrder(seq.valencies[:n], n, exact, total, precision_bits)


def spinal_group_portraits(seq: TreeSequence, depth: int, which: str) -> list[Portrait]:
    """The four defining generators as portraits of the given depth.

    which="G": rooted tau and sigma of degree l_0 plus the spinal pair
    zeta, psi.  which="H": rooted kappa and rho plus xi, theta, the
    subgroup generators acting as the alternating group on l_i - 2 points
    in every section.
    """
    if which == "G":
        a, b = alt_generators(seq[0])
        return [
            Portrait.rooted(a, seq, depth),
            Portrait.rooted(b, seq, depth),
            Portrait.spinal("zeta", seq, depth),
            Portrait.spinal("psi", seq, depth),
        ]
    if which == "H":
        a, b = embedded_alt_generators(seq[0])
        return [
            Portrait.rooted(a, seq, depth),
            Portrait.rooted(b, seq, depth),
            Portrait.spinal("xi", seq, depth),
            Portrait.spinal("theta", seq, depth),
        ]
    raise ValueError(f"group must be 'G' or 'H', got {which!r}")


@dataclass
class LevelActionReport:
    sequence: tuple[int, ...]
    level: int
    group: str
    expected: int
    measured: int
    match: bool
    seed: int
    degree: int
    elapsed_ms: float = field(repr=False, default=0.0)

    def to_dict(self, include_timing: bool = False) -> dict:
        out = {
            "sequence": list(self.sequence),
            "level": self.level,
            "group": self.group,
            "expected": str(self.expected),
            "measured": str(self.measured),
            "match": self.match,
            "seed": self.seed,
            "degree": self.degree,
            "elapsed_ms": round(self.elapsed_ms, 3) if include_timing else None,
        }
        return out


def verify_level_action(
    seq: TreeSequence,
    n: int,
    which: str = "G",
    seed: int = 0,
    degree_cap: int = 700,
) -> LevelActionReport:
    """Compare the generated level-n action against the closed-form order."""
    if n < 1 or n > len(seq):
        raise ValueError(f"level {n} outside 1..{len(seq)}")
    degree = seq.level_size(n)
    if degree > degree_cap:
        raise DegreeCapExceeded(
            f"level {n} action has degree {degree} > cap {degree_cap}",
            required=degree,
            limit=degree_cap,
        )
    start = time.perf_counter()
    if which == "H":
        target = TreeSequence(tuple(l - 2 for l in seq.valencies[:n]))
    elif which == "G":
        target = TreeSequence(seq.valencies[:n])
    else:
        raise ValueError(f"group must be 'G' or 'H', got {which!r}")
    expected = wreath_quotient_order(target, n, "exact").exact
    portraits = spinal_group_portraits(seq, n, which)
    images = [p.level_permutation(n) for p in portraits]
    chain = StabilizerChain.from_generators(images, seed=seed)
    measured = chain.order()
    elapsed = (time.perf_counter() - start) * 1000.0
    return LevelActionReport(
        sequence=seq.valencies,
        level=n,
        group=which,
        expected=expected,
        measured=measured,
        match=expected == measured,
        seed=seed,
        degree=degree,
        elapsed_ms=elapsed,
    )
