"""Partial Hausdorff-dimension quotients, envelope bounds and rigid products.

All quantities live on a tree with valency sequence {l_i}.  The ambient
quotients use the l_i themselves, the subgroup quotients use l_i - 2, and
the level-n partial dimension is the ratio of the two log-orders:

    d_n = sum_{j<n} m'_j (ln (l_j-2)! - ln 2) / sum_{j<n} m_j (ln l_j! - ln 2)

with m_j = prod_{k<j} l_k and m'_j = prod_{k<j} (l_k - 2).  The envelope
quantities normalize both sides by their top-index exponents; writing
w_j = m_j / m_{n-1} and w'_j = m'_j / m'_{n-1} and splitting each l_j!
as l_j (l_j - 1) (l_j - 2)!, the level-n ratio without the powers of two
is sandwiched by

    lower_n = a/(1 + T1 + T2)   and   upper_n = a * N / ln(Dhat)

where a = m'_{n-1}/m_{n-1}, T1 and T2 divide the log of the split-off
linear factors by E = sum w_j ln (l_j-2)!, and N replaces each ln (l_j-2)!
in ln(Bhat) by its upper Stirling envelope plus one unit for the spare
factor of e per index.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath
from mpmath import mpf

from .trees import TreeSequence
from .wreath import lnfact

_GUARD_BITS = 32
_MIN_PRECISION = 64


def _require_precision(precision_bits: int) -> None:
    if precision_bits < _MIN_PRECISION:
        raise ValueError(f"precision {precision_bits} below the {_MIN_PRECISION}-bit floor")


def _require_subgroup_side(seq: TreeSequence, n: int) -> None:
    for l in seq.valencies[:n]:
        if l < 5:
            raise ValueError(f"valency {l} < 5; the shifted side needs l - 2 >= 3")


def log_quotient(seq: TreeSequence, n: int, shift: int, precision_bits: int) -> mpf:
    """ln of prod_{j<n} ((l_j - shift)!/2)^{prod_{k<j}(l_k - shift)}."""
    with mpmath.workprec(precision_bits + _GUARD_BITS):
        ln2 = mpmath.log(2)
        total = mpmath.mpf(0)
        m = 1
        for l in seq.valencies[:n]:
            total += mpmath.mpf(m) * (lnfact(l - shift, precision_bits) - ln2)
            m *= l - shift
        return total


def alpha_target(seq: TreeSequence, n: int) -> Fraction:
    """prod_{j<n} (l_j - 2)/l_j as an exact rational."""
    out = Fraction(1)
    for l in seq.valencies[:n]:
        out *= Fraction(l - 2, l)
    return out


@dataclass
class EnvelopeRow:
    """Per-level proof quantities for the two-sided dimension estimate."""

    n: int
    alpha_prefix: Fraction
    ratio: mpf
    lower: mpf
    upper: mpf
    t1: mpf
    t2: mpf
    t1_cap: mpf
    sandwich_ok: bool = True
    t_order_ok: bool = True
    t1_cap_ok: bool = True


def envelope_bounds(
    seq: TreeSequence,
    n: int,
    precision_bits: int = 128,
    target: Fraction | None = None,
) -> EnvelopeRow:
    """Normalized two-sided bounds around the level-n quotient ratio.

    ``ratio`` is the quotient of the two log-orders with the powers of two
    dropped; ``lower`` and ``upper`` must bracket it, T2 <= T1 always, and
    for nondecreasing sequences T1 <= 8/l_{n-1}.
    """
    _require_precision(precision_bits)
    _require_subgroup_side(seq, n)
    if not 1 <= n <= len(seq):
        raise ValueError(f"level {n} outside 1..{len(seq)}")
    ls = seq.valencies[:n]
    top = n - 1
    with mpmath.workprec(precision_bits + _GUARD_BITS):
        one = mpmath.mpf(1)
        # top-down cumulative weights w'_j = 1/prod_{k=j..top-1}(l_k - 2), w_j likewise over l_k
        w_sub = [one] * n
        w_full = [one] * n
        for j in range(top - 1, -1, -1):
            w_sub[j] = w_sub[j + 1] / (ls[j] - 2)
            w_full[j] = w_full[j + 1] / ls[j]
        log_bhat = mpmath.mpf(0)
        log_dhat = mpmath.mpf(0)
        u_lin = mpmath.mpf(0)
        v_lin = mpmath.mpf(0)
        e_sub = mpmath.mpf(0)
        stirling_top = mpmath.mpf(0)
        for j, l in enumerate(ls):
            lf_sub = lnfact(l - 2, precision_bits)
            log_bhat += w_sub[j] * lf_sub
            log_dhat += w_full[j] * lnfact(l, precision_bits)
            u_lin += w_full[j] * mpmath.log(l)
            v_lin += w_full[j] * mpmath.log(l - 1)
            e_sub += w_full[j] * lf_sub
            stirling_top += one + w_sub[j] * l * (mpmath.log(l) - 1)
        t1 = u_lin / e_sub
        t2 = v_lin / e_sub
        alpha_prefix = alpha_target(seq, top)
        a = mpmath.mpf(alpha_prefix.numerator) / alpha_prefix.denominator
        ratio = a * log_bhat / log_dhat
        lower = a / (1 + t1 + t2)
        upper = a * stirling_top / log_dhat
        t1_cap = mpmath.mpf(8) / ls[top]
        tol = mpmath.mpf(2) ** (-(precision_bits // 2))
        return EnvelopeRow(
            n=n,
            alpha_prefix=alpha_prefix,
            ratio=ratio,
            lower=lower,
            upper=upper,
            t1=t1,
            t2=t2,
            t1_cap=t1_cap,
            sandwich_ok=bool(lower <= ratio + tol and ratio <= upper + tol),
            t_order_ok=bool(t2 <= t1 + tol),
            t1_cap_ok=bool(t1 <= t1_cap + tol),
        )


@dataclass
class DimensionRow:
    n: int
    log_subgroup: mpf
    log_ambient: mpf
    d: mpf
    alpha: Fraction
    envelope: EnvelopeRow
    in_envelope: bool


@dataclass
class DimensionReport:
    sequence: tuple[int, ...]
    precision_bits: int
    rows: list[DimensionRow]
    liminf_estimate: mpf
    limsup_estimate: mpf
    diverged: bool
    flagged_levels: list[int] = field(default_factory=list)


def partial_dimension(seq: TreeSequence, n: int, precision_bits: int = 128) -> DimensionRow:
    """The level-n quotient d_n together with its envelope row."""
    _require_precision(precision_bits)
    _require_subgroup_side(seq, n)
    if not 1 <= n <= len(seq):
        raise ValueError(f"level {n} outside 1..{len(seq)}; the smallest reported level is 1")
    log_h = log_quotient(seq, n, 2, precision_bits)
    log_g = log_quotient(seq, n, 0, precision_bits)
    env = envelope_bounds(seq, n, precision_bits)
    with mpmath.workprec(precision_bits + _GUARD_BITS):
        d = log_h / log_g
        eps = mpmath.mpf(2) ** (-(precision_bits // 2))
        inside = bool(env.lower * (1 - eps) <= d <= env.upper * (1 + eps))
    return DimensionRow(
        n=n,
        log_subgroup=log_h,
        log_ambient=log_g,
        d=d,
        alpha=alpha_target(seq, n),
        envelope=env,
        in_envelope=inside,
    )


def dimension_report(seq: TreeSequence, levels: int, precision_bits: int = 128) -> DimensionReport:
    """Rows for n = 1..levels plus tail liminf/limsup estimates."""
    if levels < 1:
        raise ValueError("need at least one level")
    if levels > len(seq):
        raise ValueError(f"levels {levels} exceed sequence length {len(seq)}")
    rows = [partial_dimension(seq, n, precision_bits) for n in range(1, levels + 1)]
    tail = rows[len(rows) // 2 :]
    ds = [r.d for r in tail]
    liminf_est = min(ds)
    limsup_est = max(ds)
    with mpmath.workprec(precision_bits + _GUARD_BITS):
        diverged = bool(limsup_est - liminf_est > mpmath.mpf("1e-6"))
    flagged = [r.n for r in rows if not r.in_envelope]
    return DimensionReport(
        sequence=seq.valencies[:levels],
        precision_bits=precision_bits,
        rows=rows,
        liminf_estimate=liminf_est,
        limsup_estimate=limsup_est,
        diverged=diverged,
        flagged_levels=flagged,
    )


@dataclass
class ChainRuleRow:
    n: int
    q_hg: mpf
    q_kh: mpf
    q_kg: mpf
    product: mpf
    abs_err: mpf


def chain_rule_table(
    seq_g: TreeSequence,
    seq_h: TreeSequence,
    seq_k: TreeSequence,
    n_max: int,
    precision_bits: int = 128,
) -> list[ChainRuleRow]:
    """Per-level telescoping check (logK/logG) = (logH/logG)(logK/logH).

    The three sequences must be nested by entrywise subtraction of 2.
    """
    _require_precision(precision_bits)
    if n_max < 1 or n_max > min(len(seq_g), len(seq_h), len(seq_k)):
        raise ValueError("n_max outside the common sequence range")
    for a, b in zip(seq_g.valencies, seq_h.valencies):
        if b != a - 2:
            raise ValueError("middle sequence is not the ambient one shifted by 2")
    for b, c in zip(seq_h.valencies, seq_k.valencies):
        if c != b - 2:
            raise ValueError("inner sequence is not the middle one shifted by 2")
    _require_subgroup_side(seq_h, n_max)
    out = []
    with mpmath.workprec(precision_bits + _GUARD_BITS):
        for n in range(1, n_max + 1):
            lg = log_quotient(seq_g, n, 0, precision_bits)
            lh = log_quotient(seq_h, n, 0, precision_bits)
            lk = log_quotient(seq_k, n, 0, precision_bits)
            q_hg = lh / lg
            q_kh = lk / lh
            q_kg = lk / lg
            prod = q_hg * q_kh
            out.append(
                ChainRuleRow(
                    n=n,
                    q_hg=q_hg,
                    q_kh=q_kh,
                    q_kg=q_kg,
                    product=prod,
                    abs_err=abs(prod - q_kg),
                )
            )
    return out


def rigid_product_dimension(seq: TreeSequence, n: int, k: int) -> Fraction:
    """Exact dimension k/m_n of a product of k level-n rigid vertex stabilizers."""
    m_n = seq.level_size(n)
    if not 1 <= k <= m_n:
        raise ValueError(f"k={k} outside 1..{m_n}")
    return Fraction(k, m_n)


def rigid_product_partial(
    seq: TreeSequence, n: int, k: int, m: int, precision_bits: int = 128
) -> mpf:
    """Level-m quotient of k level-n rigid vertex stabilizers.

    Converges to k/m_n from below as m grows: the numerator only collects
    the tail of the ambient log-order that lies below the chosen vertices.
    """
    _require_precision(precision_bits)
    m_n = seq.level_size(n)
    if not 1 <= k <= m_n:
        raise ValueError(f"k={k} outside 1..{m_n}")
    if not n < m <= len(seq):
        raise ValueError(f"horizon m={m} must satisfy {n} < m <= {len(seq)}")
    with mpmath.workprec(precision_bits + _GUARD_BITS):
        ln2 = mpmath.log(2)
        num = mpmath.mpf(0)
        den = mpmath.mpf(0)
        m_i = 1
        for i, l in enumerate(seq.valencies[:m]):
            term = mpmath.mpf(m_i) * (lnfact(l, precision_bits) - ln2)
            den += term
            if i >= n:
                num += term
            m_i *= l
        return (k * num / m_n) / den
