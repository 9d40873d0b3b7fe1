"""Driftless zero-rate Black-Scholes call pricing, greeks and implied volatility.

All formulas are for a European call on an asset with dS = sigma0 * S dB
(no drift, no rates, no dividends), so the forward equals the spot and the
at-the-money-forward strike is K = x.  d1 and d2 are computed from
log-moneyness divided by the cumulated volatility s = sigma0*sqrt(T),

    d1 = ln(x/K)/s + s/2,    d2 = ln(x/K)/s - s/2,

which keeps d1 + d2 = 0 and d1*d2 = -s^2/4 exact in floating point at K = x.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import ndtr

from .errors import DomainError, InvalidInput, NumericError

_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)

#: Implied-vol solver: price tolerance (relative to spot) and iteration cap.
IV_PRICE_TOL = 1e-10
IV_MAX_ITER = 100


def norm_pdf(z: float) -> float:
    """Standard normal density."""
    return _INV_SQRT_2PI * math.exp(-0.5 * z * z)


def norm_cdf(z: float) -> float:
    """Standard normal CDF via the complementary error function (abs err ~1e-16)."""
    return float(ndtr(z))


@dataclass(frozen=True)
class MarketSpec:
    """Inputs of a single call: spot, strike, maturity in years, flat volatility."""

    spot: float
    strike: float
    maturity: float
    sigma0: float

    def __post_init__(self):
        for name in ("spot", "strike", "maturity", "sigma0"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise InvalidInput(f"MarketSpec.{name} must be finite and > 0, got {v!r}")

    @property
    def cumulated_vol(self) -> float:
        """sigma0 * sqrt(T), the natural strike-space perturbation variable."""
        return self.sigma0 * math.sqrt(self.maturity)


@dataclass(frozen=True)
class Greeks:
    """Call premium and the derivatives the perturbation formulas consume.

    vega   = dC/dsigma,  vomma = d2C/dsigma2,  vanna = d2C/(dsigma dx),
    dual_gamma = d2C/dK2.
    """

    premium: float
    delta: float
    vega: float
    vomma: float
    vanna: float
    dual_gamma: float
    d1: float
    d2: float


def _d1_d2(m: MarketSpec) -> tuple[float, float]:
    s = m.cumulated_vol
    log_m = math.log(m.spot / m.strike) / s
    return log_m + 0.5 * s, log_m - 0.5 * s


def bs_price(m: MarketSpec) -> float:
    """Call premium x*N(d1) - K*N(d2)."""
    d1, d2 = _d1_d2(m)
    return m.spot * norm_cdf(d1) - m.strike * norm_cdf(d2)


def bs_maturity_derivative(m: MarketSpec) -> float:
    """dC/dT = x*sigma0*phi(d1) / (2*sqrt(T)) (zero-rate form)."""
    d1, _ = _d1_d2(m)
    return m.spot * m.sigma0 * norm_pdf(d1) / (2.0 * math.sqrt(m.maturity))


def bs_greeks(m: MarketSpec) -> Greeks:
    """All closed-form greeks at once.

    vomma = vega*d1*d2/sigma and vanna = -phi(d1)*d2/sigma follow from
    differentiating vega = x*sqrt(T)*phi(d1) in sigma and in x.
    """
    d1, d2 = _d1_d2(m)
    sqrt_t = math.sqrt(m.maturity)
    pdf1 = norm_pdf(d1)
    vega = m.spot * sqrt_t * pdf1
    return Greeks(
        premium=m.spot * norm_cdf(d1) - m.strike * norm_cdf(d2),
        delta=norm_cdf(d1),
        vega=vega,
        vomma=vega * d1 * d2 / m.sigma0,
        vanna=-pdf1 * d2 / m.sigma0,
        dual_gamma=m.spot * pdf1 / (m.strike * m.strike * m.cumulated_vol),
        d1=d1,
        d2=d2,
    )


def implied_vol(price: float, spot: float, strike: float, maturity: float) -> float:
    """Invert the call premium for sigma.

    Safeguarded Newton on sigma (vega step) inside a bisection bracket; the
    starting point is the at-the-money approximation sigma*sqrt(T) ~
    sqrt(2*pi)*price/spot.  Uniqueness comes from vega > 0.

    Raises:
        DomainError: price outside the open no-arbitrage band (max(x-K,0), x).
        NumericError: no convergence after IV_MAX_ITER iterations.
    """
    if not all(math.isfinite(v) and v > 0.0 for v in (spot, strike, maturity)):
        raise InvalidInput("spot, strike and maturity must be finite and > 0")
    if not math.isfinite(price):
        raise InvalidInput(f"price must be finite, got {price!r}")
    intrinsic = max(spot - strike, 0.0)
    if not (intrinsic < price < spot):
        raise DomainError(
            f"price {price} outside the open no-arbitrage band ({intrinsic}, {spot})"
        )

    tol = IV_PRICE_TOL * spot
    sqrt_t = math.sqrt(maturity)
    sigma = max(math.sqrt(2.0 * math.pi) * price / spot / sqrt_t, 1e-8)

    lo, hi = 1e-10, max(1.0, 2.0 * sigma)
    while bs_price(MarketSpec(spot, strike, maturity, hi)) < price:
        hi *= 2.0
        if hi > 1e4:  # price < spot guarantees a root far below this
            raise NumericError("implied_vol failed to bracket the root")
    sigma = min(max(sigma, lo), hi)

    for _ in range(IV_MAX_ITER):
        m = MarketSpec(spot, strike, maturity, sigma)
        diff = bs_price(m) - price
        if abs(diff) <= tol:
            return sigma
        if diff > 0.0:
            hi = sigma
        else:
            lo = sigma
        vega = spot * sqrt_t * norm_pdf(_d1_d2(m)[0])
        if vega > 1e-14:
            candidate = sigma - diff / vega
            if lo < candidate < hi:
                sigma = candidate
                continue
        sigma = 0.5 * (lo + hi)
    raise NumericError(f"implied_vol did not converge in {IV_MAX_ITER} iterations")
