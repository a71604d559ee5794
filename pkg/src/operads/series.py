"""Truncated exact power series and the generating-series identities.

Series are stored in the exponential convention, coefficient of t^n equal
to dim(n)/n!.  For the nonsymmetric operads modelled here dim(n) is n!
times the graded dimension, so the coefficients coincide with the
nonsymmetric dimension counts and no second bookkeeping is needed.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


class TruncatedSeries:
    """Power series with zero constant term, exact to a fixed order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs=()):
        if order < 1:
            raise ValueError("order must be >= 1")
        cs = [Fraction(c) for c in coeffs][:order]
        cs += [Fraction(0)] * (order - len(cs))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def t(cls, order):
        return cls(order, [1])

    @classmethod
    def zero(cls, order):
        return cls(order)

    def coeff(self, n):
        """Coefficient of t^n, n >= 1."""
        if not 1 <= n <= self.order:
            raise IndexError("coefficient index out of range")
        return self.coeffs[n - 1]

    def dims(self):
        """n! times the coefficients: the symmetric dimension counts."""
        return [self.coeffs[n - 1] * factorial(n) for n in range(1, self.order + 1)]

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __add__(self, other):
        self._match(other)
        return TruncatedSeries(self.order, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._match(other)
        return TruncatedSeries(self.order, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TruncatedSeries(self.order, [-a for a in self.coeffs])

    def scale(self, c):
        c = Fraction(c)
        return TruncatedSeries(self.order, [c * a for a in self.coeffs])

    __rmul__ = scale

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._match(other)
        n = self.order
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs, start=1):
            if not a:
                continue
            for j, b in enumerate(other.coeffs, start=1):
                if i + j > n:
                    break
                out[i + j - 1] += a * b
        return TruncatedSeries(n, out)

    def alt(self):
        """f(-t), negated: the substitution t -> -t with an outer minus."""
        return TruncatedSeries(
            self.order, [-c if n % 2 == 0 else c for n, c in enumerate(self.coeffs, start=1)]
        )

    def compose(self, inner):
        """self(inner(t)); inner has zero constant term by construction."""
        self._match(inner)
        n = self.order
        out = TruncatedSeries.zero(n)
        power = inner
        for k in range(1, n + 1):
            a = self.coeffs[k - 1]
            if a:
                out = out + power.scale(a)
            if k < n:
                power = power * inner
        return out

    def _match(self, other):
        if self.order != other.order:
            raise ValueError("series orders differ")

    def __repr__(self):
        parts = []
        for n, c in enumerate(self.coeffs, start=1):
            if c:
                parts.append("%s*t^%d" % (c, n))
        return " + ".join(parts) if parts else "0"


def _apply_tail(tail_coeff, u):
    """sum_{k>=1} tail_coeff(k) u^k, truncated at u.order."""
    out = TruncatedSeries.zero(u.order)
    power = u
    for k in range(1, u.order + 1):
        c = tail_coeff(k)
        if c:
            out = out + power.scale(c)
        if k < u.order:
            power = power * u
    return out


def sqrt1m(u):
    """sqrt(1 - u) - 1 as a series with zero constant term."""
    def coeff(k):
        # binomial(1/2, k) * (-1)^k
        num = Fraction(1)
        for i in range(k):
            num *= Fraction(1, 2) - i
        return num / factorial(k) * (-1) ** k
    return _apply_tail(coeff, u)


def log1p(u):
    """log(1 + u)."""
    return _apply_tail(lambda k: Fraction((-1) ** (k + 1), k), u)


def expm1(u):
    """exp(u) - 1."""
    return _apply_tail(lambda k: Fraction(1, factorial(k)), u)


def catalan_series(order):
    """c(t) = (1 - sqrt(1 - 4t)) / 2, coefficients 1, 1, 2, 5, 14, ..."""
    t = TruncatedSeries.t(order)
    return sqrt1m(t.scale(4)).scale(Fraction(-1, 2))


_SERIES_NAMES = ("As", "Com", "Lie", "Mag", "Dup", "Dup!", "Nil", "Sab", "Vect")


def gen_series(name, order):
    """Generating series of a named operad, exact to the given order."""
    t = TruncatedSeries.t(order)
    if name == "As":
        return TruncatedSeries(order, [1] * order)
    if name == "Com":
        return expm1(t)
    if name == "Lie":
        return TruncatedSeries(order, [Fraction(1, n) for n in range(1, order + 1)])
    if name == "Mag":
        return catalan_series(order)
    if name == "Dup":
        c = catalan_series(order)
        # c / (1 - c) = c + c^2 + c^3 + ...
        return _apply_tail(lambda k: Fraction(1), c)
    if name == "Dup!":
        return TruncatedSeries(order, list(range(1, order + 1)))
    if name == "Nil":
        return TruncatedSeries(order, [1, 1])
    if name == "Sab":
        return log1p(catalan_series(order))
    if name == "Vect":
        return t
    raise KeyError("unknown series %r (choose from %s)" % (name, ", ".join(_SERIES_NAMES)))


def series_names():
    return list(_SERIES_NAMES)


def _as_series(s, order):
    return gen_series(s, order) if isinstance(s, str) else s


def check_triple_identity(c, a, p, order):
    """f^A(t) = f^C(f^P(t)) coefficientwise to the given order."""
    fc = _as_series(c, order)
    fa = _as_series(a, order)
    fp = _as_series(p, order)
    return fa == fc.compose(fp)


def check_koszul_dual(p, pdual, order):
    """f^{P!}(-f^P(-t)) = t, exact to the given order."""
    fp = _as_series(p, order)
    fd = _as_series(pdual, order)
    return fd.compose(fp.alt()) == TruncatedSeries.t(order)
