"""Truncated power series over exact rationals.

A RationalSeries is a dense list of rational coefficients (index n = the
coefficient of x^n) together with two small pieces of symbolic baggage that
keep everything exact:

* ``prefactor_sq`` -- the series stands for sqrt(prefactor_sq) * sum c_n x^n.
  This carries the surd sqrt(3) that multiplies the Hartman-Watson
  prefactor expansion without ever rounding it to a float.
* ``offset`` -- an optional symbolic additive constant (currently only
  ``pi^2/2 - 1``, the value of the Hartman-Watson exponent function at its
  expansion point), again kept out of the rational coefficient table.

Every operation below is exact: no floating point enters this module.
Composition is the hot path (order ~100 with thousand-digit rationals), so
it runs fraction-free: each series is scaled to a single integer
denominator and powers of the inner series are built by integer
convolution with a content-gcd reduction per step.  That is roughly two
orders of magnitude faster than naive coefficient-by-coefficient rational
arithmetic at order 100.

Coefficient growth is real: at order 100 the tables held here have
numerators and denominators of several hundred digits, and intermediate
convolutions a few thousand.  DEFAULT_MAX_ORDER caps requests at 128.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rational import Rational, rat, ZERO, ONE, rational_sqrt, _gcd, _lcm, Integer

DEFAULT_MAX_ORDER = 128

OFFSET_NONE = ""
OFFSET_PI2_HALF_MINUS_1 = "pi^2/2-1"
_KNOWN_OFFSETS = (OFFSET_NONE, OFFSET_PI2_HALF_MINUS_1)


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class RationalSeries:
    """Truncated series sqrt(prefactor_sq) * sum_n coeffs[n] x^n (+ offset)."""

    coeffs: tuple
    prefactor_sq: Rational = field(default_factory=lambda: ONE)
    offset: str = OFFSET_NONE

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(rat(c) for c in self.coeffs))
        object.__setattr__(self, "prefactor_sq", rat(self.prefactor_sq))
        if not self.coeffs:
            raise SeriesError("series needs at least the constant coefficient")
        if self.prefactor_sq <= 0:
            raise SeriesError("prefactor_sq must be positive")
        if self.offset not in _KNOWN_OFFSETS:
            raise SeriesError(f"unknown offset flag {self.offset!r}")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Rational:
        return self.coeffs[n]

    def truncate(self, order: int) -> "RationalSeries":
        if order >= self.order:
            pad = (ZERO,) * (order - self.order)
            return RationalSeries(self.coeffs + pad, self.prefactor_sq, self.offset)
        return RationalSeries(self.coeffs[: order + 1], self.prefactor_sq, self.offset)

    def float_coeffs(self):
        return [float(c) for c in self.coeffs]

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:5])
        tail = ", ..." if self.order > 4 else ""
        pf = f", prefactor_sq={self.prefactor_sq}" if self.prefactor_sq != 1 else ""
        off = f", offset={self.offset!r}" if self.offset else ""
        return f"RationalSeries([{head}{tail}], order={self.order}{pf}{off})"


def series_from_terms(terms, order: int, prefactor_sq=1, offset=OFFSET_NONE) -> RationalSeries:
    """Series from a {power: coefficient} mapping, zero-filled to `order`."""
    coeffs = [ZERO] * (order + 1)
    for n, c in terms.items():
        if 0 <= n <= order:
            coeffs[n] = rat(c)
    return RationalSeries(tuple(coeffs), prefactor_sq, offset)


def _common_order(a: RationalSeries, b: RationalSeries) -> int:
    return min(a.order, b.order)


def series_add(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    """Coefficientwise sum, truncated to the smaller order.

    Addition under a square-root prefactor has no rational closed form
    unless the prefactors agree, so mismatched prefactors are an error.
    """
    if a.prefactor_sq != b.prefactor_sq:
        raise SeriesError("cannot add series with different surd prefactors")
    if a.offset and b.offset:
        raise SeriesError("cannot add two offset-carrying series")
    n = _common_order(a, b)
    coeffs = tuple(a.coeffs[i] + b.coeffs[i] for i in range(n + 1))
    return RationalSeries(coeffs, a.prefactor_sq, a.offset or b.offset)


def series_neg(a: RationalSeries) -> RationalSeries:
    if a.offset:
        raise SeriesError("cannot negate an offset-carrying series")
    return RationalSeries(tuple(-c for c in a.coeffs), a.prefactor_sq)


def series_scale(a: RationalSeries, s) -> RationalSeries:
    if a.offset:
        raise SeriesError("cannot scale an offset-carrying series")
    s = rat(s)
    return RationalSeries(tuple(c * s for c in a.coeffs), a.prefactor_sq)


def series_mul(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    """Cauchy product truncated to min(order); surd prefactors multiply."""
    if a.offset or b.offset:
        raise SeriesError("multiply the offset in by hand before calling series_mul")
    n = _common_order(a, b)
    out = [ZERO] * (n + 1)
    for i in range(n + 1):
        ai = a.coeffs[i]
        if ai:
            for j in range(n + 1 - i):
                bj = b.coeffs[j]
                if bj:
                    out[i + j] += ai * bj
    return RationalSeries(tuple(out), a.prefactor_sq * b.prefactor_sq)


def series_div(a: RationalSeries, b: RationalSeries) -> RationalSeries:
    """a/b by the standard triangular recurrence; needs b[0] != 0."""
    if a.offset or b.offset:
        raise SeriesError("offset-carrying series cannot be divided")
    if b.coeffs[0] == 0:
        raise SeriesError("division needs a nonzero constant term in the divisor")
    n = _common_order(a, b)
    inv0 = 1 / b.coeffs[0]
    out = [ZERO] * (n + 1)
    for k in range(n + 1):
        acc = a.coeffs[k]
        for i in range(1, k + 1):
            bi = b.coeffs[i]
            if bi:
                acc -= bi * out[k - i]
        out[k] = acc * inv0
    return RationalSeries(tuple(out), a.prefactor_sq / b.prefactor_sq)


def series_diff(a: RationalSeries) -> RationalSeries:
    if a.order == 0:
        return RationalSeries((ZERO,), a.prefactor_sq)
    return RationalSeries(tuple(a.coeffs[i] * i for i in range(1, a.order + 1)),
                          a.prefactor_sq)


def series_shift_down(a: RationalSeries, k: int = 1) -> RationalSeries:
    """Divide by x^k; the dropped low coefficients must vanish."""
    if any(c != 0 for c in a.coeffs[:k]):
        raise SeriesError("series is not divisible by x^k")
    return RationalSeries(a.coeffs[k:], a.prefactor_sq, a.offset)


# -- fraction-free composition core ------------------------------------------

def _to_scaled(coeffs):
    """(integer coefficient list, common denominator) for a rational list."""
    den = Integer(1)
    for c in coeffs:
        den = _lcm(den, c.denominator)
    return [Integer(c.numerator) * (den // c.denominator) for c in coeffs], den


def _content_reduce(nums, den):
    g = den
    for c in nums:
        if c:
            g = _gcd(g, c)
            if g == 1:
                return nums, den
    return [c // g for c in nums], den // g


def _int_conv(a, b, n):
    out = [Integer(0)] * (n + 1)
    for i in range(n + 1):
        ai = a[i]
        if ai:
            row = b[: n + 1 - i]
            for j, bj in enumerate(row):
                if bj:
                    out[i + j] += ai * bj
    return out


def series_compose(f: RationalSeries, s: RationalSeries) -> RationalSeries:
    """f(s(x)) truncated to min(order).  Requires s(0) = 0.

    Runs as sum_k f_k s^k with the powers of s built by fraction-free
    integer convolution (single running denominator, content-reduced per
    step).  The offset and surd prefactor of f pass through unchanged.
    """
    if s.coeffs[0] != 0:
        raise SeriesError("inner series must have zero constant term")
    if s.prefactor_sq != 1 or s.offset:
        raise SeriesError("inner series must be plain (no surd, no offset)")
    n = _common_order(f, s)
    S, ds = _to_scaled(list(s.coeffs[: n + 1]))
    out = [ZERO] * (n + 1)
    out[0] = f.coeffs[0]
    P, dp = S[:], ds
    kmax = n
    for k in range(1, kmax + 1):
        fk = f.coeffs[k]
        if fk:
            for m in range(k, n + 1):
                if P[m]:
                    out[m] += Rational(fk.numerator * P[m],
                                       fk.denominator * dp)
        if k < kmax:
            P = _int_conv(P, S, n)
            dp = dp * ds
            P, dp = _content_reduce(P, dp)
    return RationalSeries(tuple(out), f.prefactor_sq, f.offset)


def series_sqrt(a: RationalSeries, prefactor_sq=1) -> RationalSeries:
    """Square root of a series, with an optional declared surd factor.

    The result r satisfies r*r == a termwise, where r carries
    ``prefactor_sq``; hence a.coeffs[0]/prefactor_sq must be the square of
    a rational.  Callers split off the surd themselves (for the
    Hartman-Watson prefactor that factor is 3).
    """
    if a.offset:
        raise SeriesError("offset-carrying series has no exact square root")
    if a.prefactor_sq != 1:
        raise SeriesError("sqrt of an already-prefactored series is not supported")
    pf = rat(prefactor_sq)
    c0 = a.coeffs[0] / pf
    r0 = rational_sqrt(c0)
    if r0 is None or r0 == 0:
        raise SeriesError(
            f"constant term {a.coeffs[0]} is not a rational square times {pf}")
    n = a.order
    out = [r0] + [ZERO] * n
    inv = 1 / (2 * r0)
    for k in range(1, n + 1):
        acc = a.coeffs[k] / pf
        for i in range(1, k):
            acc -= out[i] * out[k - i]
        out[k] = acc * inv
    return RationalSeries(tuple(out), pf)


def revert_series(g: RationalSeries) -> RationalSeries:
    """Compositional inverse of g(z) - g(0), by Newton iteration on series.

    Given g with nonzero linear coefficient, returns h with
    g(h(w)) == g(0) + w to the common truncation order.  The iteration
    doubles the attained order each step, so the cost is dominated by one
    composition at full order; classical Lagrange inversion is kept in the
    test-suite as an independent oracle at small orders.
    """
    if g.prefactor_sq != 1 or g.offset:
        raise SeriesError("reversion needs a plain rational series")
    if g.order < 1 or g.coeffs[1] == 0:
        raise SeriesError("vanishing linear coefficient: series not invertible")
    n = g.order
    ghat = RationalSeries((ZERO,) + g.coeffs[1:])
    gprime = series_diff(ghat)
    h = RationalSeries((ZERO, 1 / g.coeffs[1]))
    order = 1
    while order < n:
        order = min(2 * order, n)
        ho = h.truncate(order)
        gh = series_compose(ghat.truncate(order), ho)
        gph = series_compose(gprime.truncate(order), ho)
        resid = list(gh.coeffs)
        resid[1] -= ONE  # g(h(w)) - w
        corr = series_div(RationalSeries(tuple(resid)), gph)
        h = RationalSeries(tuple(a - b for a, b in zip(ho.coeffs, corr.coeffs)))
    return h


def lagrange_revert(g: RationalSeries) -> RationalSeries:
    """Classical Lagrange inversion; O(N^2) series products, oracle use only."""
    if g.order < 1 or g.coeffs[1] == 0:
        raise SeriesError("vanishing linear coefficient: series not invertible")
    n = g.order
    ghat = (ZERO,) + g.coeffs[1:]
    # base = z/ghat(z) as a series (ghat has a simple zero at 0)
    base = series_div(RationalSeries((ONE,) + (ZERO,) * (n - 1)),
                      RationalSeries(ghat[1:]))
    out = [ZERO, base.coeffs[0]]
    power = base
    for k in range(2, n + 1):
        power = series_mul(power, base)
        out.append(power.coeffs[k - 1] / k)
    return RationalSeries(tuple(out))


# -- serialization ------------------------------------------------------------

def series_to_text(a: RationalSeries) -> str:
    """Line-oriented exact dump: header, then one `n num/den` pair per line."""
    lines = [f"# rational-series order={a.order} prefactor_sq={a.prefactor_sq} "
             f"offset={a.offset or 'none'}"]
    for n, c in enumerate(a.coeffs):
        lines.append(f"{n} {c.numerator}/{c.denominator}")
    return "\n".join(lines) + "\n"


def series_from_text(text: str) -> RationalSeries:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("# rational-series"):
        raise SeriesError("missing rational-series header")
    fields = dict(tok.split("=", 1) for tok in lines[0].split()[2:])
    order = int(fields["order"])
    prefactor_sq = rat(fields["prefactor_sq"])
    offset = fields.get("offset", "none")
    offset = OFFSET_NONE if offset == "none" else offset
    coeffs = [ZERO] * (order + 1)
    for ln in lines[1:]:
        idx, frac = ln.split()
        coeffs[int(idx)] = rat(frac)
    return RationalSeries(tuple(coeffs), prefactor_sq, offset)
