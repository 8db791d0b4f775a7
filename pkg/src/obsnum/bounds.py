"""Log-space calculators for the Chernoff / slab argument and the h-hat calculus.

All logarithms of probabilities are natural logs evaluated with mpmath at
128 bits.  Slab sizes, h-hat and the w(n) bound use log base 2.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable

import mpmath

PREC = 128
LOG_BASE = 2

# h-hat search stops here and declares the exponent degenerate
_H_CAP = 1 << 256


class UnboundedExponentError(ValueError):
    pass


@dataclass(frozen=True)
class BoundConfig:
    c: float = 1.0
    alpha: float = 0.01
    enc: float = 1.0

    def __post_init__(self):
        if min(self.c, self.alpha, self.enc) <= 0:
            raise ValueError("all bound constants must be positive")


@dataclass
class TailBound:
    log_bound: mpmath.mpf      # natural log of the upper bound on Pr{B >= t}
    mu: mpmath.mpf
    delta: mpmath.mpf
    trivial: bool              # delta <= 0: the bound is just 1


def _mpf(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def log2(n) -> mpmath.mpf:
    """log base 2; exact for powers of two."""
    if isinstance(n, int) and n > 0 and n & (n - 1) == 0:
        return mpmath.mpf(n.bit_length() - 1)
    with mpmath.workprec(PREC):
        return mpmath.log(_mpf(n), 2)


def chernoff_log(mu, delta) -> mpmath.mpf:
    """mu * (delta - (1 + delta) ln(1 + delta)), the log of (e^d / (1+d)^(1+d))^mu."""
    with mpmath.workprec(PREC):
        mu, delta = _mpf(mu), _mpf(delta)
        return mu * (delta - (1 + delta) * mpmath.log1p(delta))


def chernoff_tail_log(m, p, t) -> TailBound:
    """Natural-log Chernoff upper bound on Pr{Binomial(m, p) >= t}."""
    p = Fraction(p) if not isinstance(p, float) else p
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    with mpmath.workprec(PREC):
        mu = _mpf(m) * _mpf(p)
        if mu == 0:
            # B is identically 0
            if t > 0:
                return TailBound(mpmath.ninf, mu, mpmath.inf, False)
            return TailBound(mpmath.mpf(0), mu, mpmath.mpf(0), True)
        delta = _mpf(t) / mu - 1
        if delta <= 0:
            return TailBound(mpmath.mpf(0), mu, delta, True)
        return TailBound(chernoff_log(mu, delta), mu, delta, False)


def binomial_tail_exact(m: int, p, t: int) -> Fraction:
    """Exact Pr{Binomial(m, p) >= t} as a Fraction; m is capped at 40."""
    if m > 40:
        raise ValueError("exact binomial tail is limited to m <= 40")
    p = Fraction(p)
    q = 1 - p
    lo = max(t, 0)
    return sum((math.comb(m, i) * p ** i * q ** (m - i) for i in range(lo, m + 1)), Fraction(0))


def slab_size(n: int, c: float) -> int:
    return max(1, int(mpmath.floor(mpmath.sqrt(c) * log2(n))))


@dataclass
class Lemma1Report:
    n: int
    c: float
    alpha: float
    k: int
    m: int
    log_mu: mpmath.mpf
    log_one_plus_delta: mpmath.mpf
    log_prob_chain: mpmath.mpf          # m - m(ck^2 - 1)/e, the closed form at the end of the chain
    log_prob_chernoff: mpmath.mpf       # the Chernoff bound evaluated directly at (mu, delta)
    obstacle_lower_bound: mpmath.mpf    # (alpha k / log^2 k) * (m / 2)
    trivial: bool
    log_base: int = LOG_BASE

    def to_dict(self) -> dict:
        d = asdict(self)
        return {key: (mpmath.nstr(v, 30) if isinstance(v, mpmath.mpf) else v) for key, v in d.items()}


def lemma1_report(n: int, cfg: BoundConfig = BoundConfig()) -> Lemma1Report:
    """Numbers behind the slab argument for one n, with the user's constants.

    k = floor(sqrt(c) log2 n), m = floor(n / k), mu = m e^{-ck^2},
    delta = e^{ck^2 - 1} - 1.  Everything is kept as logs so that nothing
    overflows for realistic n.
    """
    if n < 3:
        raise ValueError("n must be at least 3")
    with mpmath.workprec(PREC):
        k = slab_size(n, cfg.c)
        m = n // k
        ck2 = _mpf(cfg.c) * k * k
        log_mu = mpmath.log(m) - ck2
        # delta = e^{ck^2-1} - 1, so ln(1+delta) = ck^2 - 1
        log_1pd = ck2 - 1
        trivial = log_1pd <= 0
        chain = m - m * (ck2 - 1) / mpmath.e
        if trivial:
            direct = mpmath.mpf(0)
        else:
            direct = chernoff_log(mpmath.exp(log_mu), mpmath.expm1(log_1pd))
        lk = log2(k) if k > 1 else mpmath.mpf(0)
        lower = (_mpf(cfg.alpha) * k / (lk * lk)) * (mpmath.mpf(m) / 2) if k > 1 else mpmath.mpf(0)
    return Lemma1Report(n, cfg.c, cfg.alpha, k, m, log_mu, log_1pd, chain, direct, lower, trivial)


def default_exponent(cfg: BoundConfig) -> Callable:
    """g(h, n) = enc * h * n * log2(n)^2, the log2 of the counting bound f(h, n)."""
    def g(h, n):
        L = log2(n)
        return _mpf(cfg.enc) * h * n * L * L
    return g


def hhat(n: int, cfg: BoundConfig = BoundConfig(), g: Callable | None = None) -> int:
    """Largest h with g(h, n) <= n^2/4, or 0 when no h >= 1 qualifies."""
    g = g or default_exponent(cfg)
    with mpmath.workprec(PREC):
        limit = mpmath.mpf(n) * n / 4
        if g(1, n) > limit:
            return 0
        lo, hi = 1, 2
        while g(hi, n) <= limit:
            lo, hi = hi, hi * 2
            if hi > _H_CAP:
                raise UnboundedExponentError("exponent never exceeds n^2/4; h-hat is unbounded")
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if g(mid, n) <= limit:
                lo = mid
            else:
                hi = mid
        return lo


def wn_lower_bound(n: int, cfg: BoundConfig = BoundConfig(), g: Callable | None = None) -> mpmath.mpf:
    """n * hhat(ceil(c log2 n)) / (c log2 n); zero means the bound is vacuous."""
    with mpmath.workprec(PREC):
        L = _mpf(cfg.c) * log2(n)
        h = hhat(int(mpmath.ceil(L)), cfg, g)
        return mpmath.mpf(n) * h / L


def bounds_report(n: int, cfg: BoundConfig = BoundConfig()) -> dict:
    rep = lemma1_report(n, cfg)
    h = hhat(n, cfg)
    w = wn_lower_bound(n, cfg)
    return {
        "log_base": LOG_BASE,
        "note": "constant-dependent: c, alpha and enc are user supplied",
        "config": asdict(cfg),
        "lemma1": rep.to_dict(),
        "hhat": h,
        "hhat_vacuous": h == 0,
        "wn_lower_bound": mpmath.nstr(w, 30),
        "wn_vacuous": w == 0,
    }
