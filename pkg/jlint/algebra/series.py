# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""Truncated power series in s = t - 1 with exact rational coefficients."""
from functools import lru_cache

import sympy as sp

from jlint.algebra.exact import (INFINITY, to_rational, format_rational,
                                 parse_rational, generalized_binomial)
from jlint.algebra.laurent import GRID
from jlint.utils.misc import JlintError


class SeriesAtOne(object):
    r"""
    a_0 + a_1 s + ... + a_N s^N, s = t - 1, known exactly up to the order N
    (inclusive). Binary operations truncate to the smaller order.
    """

    __slots__ = ('order', '_coeffs')

    def __init__(self, order, coeffs=()):
        if order < 0:
            raise JlintError("NEGATIVE_ORDER", f"order must be non-negative, got {order}")
        coeffs = [to_rational(c) for c in list(coeffs)[:order + 1]]
        coeffs += [sp.Integer(0)] * (order + 1 - len(coeffs))
        self.order = order
        self._coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, c, order):
        return cls(order, [c])

    @classmethod
    def zero(cls, order):
        return cls(order)

    @classmethod
    def monomial(cls, k, order, c=1):
        """c s^k."""
        coeffs = [0] * (order + 1)
        if k <= order:
            coeffs[k] = c
        return cls(order, coeffs)

    @property
    def coefficients(self):
        return self._coeffs

    def __getitem__(self, i):
        if i < 0:
            return sp.Integer(0)
        if i > self.order:
            raise JlintError("ORDER_TOO_LOW",
                             f"coefficient {i} requested from a series of order {self.order}")
        return self._coeffs[i]

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, SeriesAtOne):
            return NotImplemented
        return self.order == other.order and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.order, self._coeffs))

    def truncate(self, order):
        if order > self.order:
            raise JlintError("ORDER_TOO_LOW",
                             f"cannot raise the order of a series from {self.order} to {order}")
        return SeriesAtOne(order, self._coeffs)

    def __add__(self, other):
        other = _coerce(other, self.order)
        order = min(self.order, other.order)
        return SeriesAtOne(order, [self[i] + other[i] for i in range(order + 1)])

    __radd__ = __add__

    def __neg__(self):
        return SeriesAtOne(self.order, [-c for c in self._coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other, self.order))

    def __rsub__(self, other):
        return _coerce(other, self.order) - self

    def __mul__(self, other):
        if not isinstance(other, SeriesAtOne):
            c = to_rational(other)
            return SeriesAtOne(self.order, [c * x for x in self._coeffs])
        order = min(self.order, other.order)
        out = [sp.Integer(0)] * (order + 1)
        for i, x in enumerate(self._coeffs[:order + 1]):
            if x == 0:
                continue
            for j in range(order + 1 - i):
                out[i + j] += x * other[j]
        return SeriesAtOne(order, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise JlintError("NEGATIVE_POWER", f"power must be a non-negative int, got {n}")
        out = SeriesAtOne.constant(1, self.order)
        for _ in range(n):
            out = out * self
        return out

    def inverse(self):
        if self._coeffs[0] == 0:
            raise JlintError("DEN_VANISHES_AT_ONE", "series with zero constant term has no inverse")
        return SeriesAtOne.constant(1, self.order) / self

    def __truediv__(self, other):
        if not isinstance(other, SeriesAtOne):
            c = to_rational(other)
            if c == 0:
                raise JlintError("DIVISION_BY_ZERO", "division of a series by 0")
            return SeriesAtOne(self.order, [x / c for x in self._coeffs])
        if other[0] == 0:
            raise JlintError("DEN_VANISHES_AT_ONE", "denominator vanishes at t=1")
        order = min(self.order, other.order)
        out = []
        for n in range(order + 1):
            acc = self[n] - sum((other[j] * out[n - j] for j in range(1, n + 1)), sp.Integer(0))
            out.append(acc / other[0])
        return SeriesAtOne(order, out)

    def valuation(self):
        """Index of the first nonzero coefficient, oo for the zero series."""
        for i, c in enumerate(self._coeffs):
            if c != 0:
                return i
        return INFINITY

    def is_integral(self, order=None):
        order = self.order if order is None else min(order, self.order)
        return all(c.q == 1 for c in self._coeffs[:order + 1])

    def to_json(self):
        return {"order": self.order, "coeffs": [format_rational(c) for c in self._coeffs]}

    @classmethod
    def from_json(cls, data):
        try:
            order, coeffs = int(data["order"]), data["coeffs"]
        except (KeyError, TypeError, ValueError):
            raise JlintError("MALFORMED_SERIES", f"not a serialized series: {data!r}")
        if len(coeffs) != order + 1:
            raise JlintError("MALFORMED_SERIES",
                             f"order {order} needs {order + 1} coefficients, got {len(coeffs)}")
        return cls(order, [parse_rational(c) for c in coeffs])

    def render(self):
        return ", ".join(format_rational(c) for c in self._coeffs)

    def __repr__(self):
        return f"SeriesAtOne(order={self.order}: {self.render()})"


def _coerce(x, order):
    if isinstance(x, SeriesAtOne):
        return x
    return SeriesAtOne.constant(x, order)


@lru_cache(maxsize=1024)
def _binomial_series(e, order):
    coeffs = [sp.Integer(1)]
    for k in range(order):
        coeffs.append(coeffs[-1] * (e - k) / (k + 1))
    return tuple(coeffs)


def expand_power(e, order):
    r"""
    (1 + s)^e to the given order: a_k = C(e, k). For an integer e every
    coefficient is an integer.
    """
    e = to_rational(e)
    if (e * GRID).q != 1:
        raise JlintError("OFF_GRID", f"exponent {e} is not a multiple of 1/{GRID}")
    return SeriesAtOne(order, _binomial_series(e, order))


def expand_laurent(p, order):
    out = [sp.Integer(0)] * (order + 1)
    for k, c in p.items():
        for i, b in enumerate(_binomial_series(sp.Rational(k, GRID), order)):
            out[i] += c * b
    return SeriesAtOne(order, out)


def expand_ratio(num, den, order):
    if den.evaluate_at_one() == 0:
        raise JlintError("DEN_VANISHES_AT_ONE", f"denominator {den} vanishes at t=1")
    return expand_laurent(num, order) / expand_laurent(den, order)


def coefficient_via_derivative(p, n):
    r"""
    a_n = (1/n!) d^n p / dt^n at t=1. Each term c t^e contributes
    c e(e-1)...(e-n+1) / n!.
    """
    if n < 0:
        raise JlintError("NEGATIVE_ORDER", f"n must be non-negative, got {n}")
    total = sp.Integer(0)
    for k, c in p.items():
        total += c * generalized_binomial(sp.Rational(k, GRID), n)
    return total


def whitehead_closed_form(n):
    """Reference coefficients of the Whitehead link's series at t=1."""
    if n < 0:
        raise JlintError("NEGATIVE_ORDER", f"n must be non-negative, got {n}")
    if n <= 2:
        return sp.Integer(0)
    if n == 3:
        return sp.Rational(-3, 2)
    scale = sp.Integer(2) ** (n - 2)
    return sp.Integer(-1) ** n * (scale - 1) / scale
