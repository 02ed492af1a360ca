# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
r"""
Divisibility checks on the Taylor coefficients a_i of Phi at t = 1.

Checkers never raise on a mathematical violation: they return a
ValuationReport whose entries record the measured 2- and 3-adic valuations
against the claimed lattice. Only malformed requests raise.
"""
from collections import namedtuple
from functools import reduce

import sympy as sp

from jlint.algebra.exact import (INFINITY, format_rational, format_valuation,
                                 in_p_power_lattice, padic_valuation)
from jlint.algebra.series import SeriesAtOne, expand_ratio
from jlint.utils.misc import JlintError

BOUNDARY_PROBE = "boundary probe"
RANGE_PROBE = "range probe"
QUOTED_CLAIM = "quoted claim"

Conjecture41Result = namedtuple("Conjecture41Result", ["n", "value", "in_6Z"])


class ValuationEntry(object):
    r"""
    One coefficient tested against a lattice.

    Args:
        - i (int): coefficient index
        - a (Rational): the coefficient itself
        - scale (Rational): the claim is about scale * a
        - lattice (tuple): (p, e) pairs, scale * a must lie in p^e Z for all
                           of them; empty means plain integrality
        - bound (str): human readable claim
        - flag (str or None): set on entries that probe a doubtful claim
    """

    def __init__(self, i, a, bound, scale=1, lattice=(), flag=None):
        self.i = i
        self.a = sp.Rational(a)
        self.scale = sp.Rational(scale)
        self.lattice = tuple(lattice)
        self.bound = bound
        self.flag = flag
        scaled = self.a * self.scale
        self.passed = scaled.q == 1 and all(in_p_power_lattice(scaled, p, e)
                                            for p, e in self.lattice)

    @property
    def v2(self):
        return padic_valuation(self.a, 2)

    @property
    def v3(self):
        return padic_valuation(self.a, 3)

    def to_json(self):
        return {"i": self.i, "a": format_rational(self.a),
                "v2": format_valuation(self.v2), "v3": format_valuation(self.v3),
                "bound": self.bound, "pass": self.passed, "flag": self.flag}


class ValuationReport(object):

    def __init__(self, claim, entries):
        self.claim = claim
        self.entries = list(entries)

    @property
    def verdict(self):
        failed = [e for e in self.entries if not e.passed]
        if any(e.flag is None for e in failed):
            return "fail"
        return "flagged" if failed else "pass"

    @property
    def anomalies(self):
        return [f"i={e.i}: a={format_rational(e.a)} violates {e.bound}"
                + (f" ({e.flag})" if e.flag else "")
                for e in self.entries if not e.passed]

    def entry(self, i):
        for e in self.entries:
            if e.i == i:
                return e
        raise KeyError(i)

    def to_json(self):
        return {"claim": self.claim,
                "entries": [e.to_json() for e in self.entries],
                "verdict": self.verdict,
                "anomalies": self.anomalies}


def _require_order(series, order):
    if series.order < order:
        raise JlintError("ORDER_TOO_LOW",
                         f"check needs order {order}, series has order {series.order}")


def check_eq1_vanishing(series, mu):
    """a_i = 0 for every i <= mu."""
    _require_order(series, mu)
    return all(series[i] == 0 for i in range(mu + 1))


def check_gsl_integrality(series, order=None):
    order = series.order if order is None else order
    _require_order(series, order)
    return series.is_integral(order)


def eq1_report(series, mu):
    """check_eq1_vanishing with the measured coefficients."""
    _require_order(series, mu)
    entries = [ValuationEntry(i, series[i], "a_i = 0", lattice=[(3, INFINITY)])
               for i in range(mu + 1)]
    return ValuationReport(f"eq1 (mu={mu})", entries)


def gsl_report(series, order=None):
    order = series.order if order is None else order
    _require_order(series, order)
    return ValuationReport("gsl integrality",
                           [ValuationEntry(i, series[i], "a_i in Z") for i in range(order + 1)])


def convolve_coefficients(seriesList):
    if not seriesList:
        raise JlintError("EMPTY_PRODUCT", "nothing to convolve")
    return reduce(lambda x, y: x * y, seriesList)


def check_prop1(series, mu):
    r"""
    3-adic claims for a product of mu nontrivial knots: a_i = 0 below 2mu,
    a_i in 3^mu Z for 2mu <= i <= 3mu, a_i in 3^{4mu-i} Z up to 4mu and
    integrality beyond. The i = 3mu entry and the 3mu < i <= 4mu entries are
    flagged probes.
    """
    if mu < 1:
        raise JlintError("INVALID_MU", f"need at least one nontrivial knot, got {mu}")
    _require_order(series, 4 * mu)
    entries = []
    for i in range(series.order + 1):
        a = series[i]
        if i < 2 * mu:
            entries.append(ValuationEntry(i, a, "a_i = 0", lattice=[(3, INFINITY)]))
        elif i <= 3 * mu:
            flag = BOUNDARY_PROBE if i == 3 * mu else None
            entries.append(ValuationEntry(i, a, f"a_i in 3^{mu} Z", lattice=[(3, mu)], flag=flag))
        elif i <= 4 * mu:
            entries.append(ValuationEntry(i, a, f"a_i in 3^{4 * mu - i} Z",
                                          lattice=[(3, 4 * mu - i)], flag=RANGE_PROBE))
        else:
            entries.append(ValuationEntry(i, a, "a_i in Z"))
    return ValuationReport(f"prop1 (mu={mu})", entries)


def check_prop2(series, order=None):
    """2^{n-2} a_n in Z; below n = 2 plain integrality."""
    order = series.order if order is None else order
    _require_order(series, order)
    entries = [ValuationEntry(n, series[n], f"2^{max(n - 2, 0)} a_n in Z",
                              scale=sp.Integer(2) ** max(n - 2, 0))
               for n in range(order + 1)]
    return ValuationReport("prop2", entries)


def check_conjecture41(series, mu, n):
    """n! phi_n, phi_n = (-2)^mu a_{n+mu}, tested for membership in 6Z."""
    from jlint.phi import phi_n

    value = sp.factorial(n) * phi_n(series, mu, n)
    in6Z = in_p_power_lattice(value, 2, 1) and in_p_power_lattice(value, 3, 1)
    return Conjecture41Result(n, value, in6Z)


def conjecture41_report(series, mu, ns):
    entries = []
    for n in ns:
        result = check_conjecture41(series, mu, n)
        entries.append(ValuationEntry(n, result.value, "n! phi_n in 6Z",
                                      lattice=[(2, 1), (3, 1)]))
    return ValuationReport(f"conj41 (mu={mu})", entries)


def check_knot_divisibility(series):
    """a_0 = a_1 = 0 and a_2, a_3 in 3Z for a knot."""
    _require_order(series, 3)
    entries = [ValuationEntry(i, series[i], "a_i = 0", lattice=[(3, INFINITY)]) for i in (0, 1)]
    entries += [ValuationEntry(i, series[i], "a_i in 3Z", lattice=[(3, 1)]) for i in (2, 3)]
    return ValuationReport("knot a_2, a_3 in 3Z", entries)


def check_asl_low_order(series, mu):
    """a_{mu+1} in 3Z and 2 a_{mu+2} in 3Z, reported as flagged probes."""
    _require_order(series, mu + 2)
    entries = [ValuationEntry(mu + 1, series[mu + 1], "a_i in 3Z",
                              lattice=[(3, 1)], flag=QUOTED_CLAIM),
               ValuationEntry(mu + 2, series[mu + 2], "2 a_i in 3Z", scale=2,
                              lattice=[(3, 1)], flag=QUOTED_CLAIM)]
    return ValuationReport(f"asl low order (mu={mu})", entries)


def _as_series(x, order):
    if isinstance(x, SeriesAtOne):
        return x.truncate(order)
    return expand_ratio(x.num, x.den, order)


def double_crossing_identity(F, G, H, K, order=None):
    r"""
    (t+1)(F - G) = (t^2 - t)(H - K). Exact on closed forms; on series, with
    t + 1 = 2 + s and t^2 - t = s + s^2, coefficientwise up to `order`.
    """
    from jlint.phi import PhiResult

    quadruple = (F, G, H, K)
    if all(isinstance(x, PhiResult) for x in quadruple):
        from jlint.algebra.laurent import QuarterLaurent
        t = QuarterLaurent.t()
        left = (t + 1) * (F.num * G.den - G.num * F.den) * H.den * K.den
        right = (t * t - t) * (H.num * K.den - K.num * H.den) * F.den * G.den
        return left == right

    if order is None:
        order = min(x.order for x in quadruple if isinstance(x, SeriesAtOne))
    F, G, H, K = (_as_series(x, order) for x in quadruple)
    diffFG, diffHK = F - G, H - K
    for n in range(order + 1):
        left = 2 * diffFG[n] + diffFG[n - 1]
        right = diffHK[n - 1] + diffHK[n - 2]
        if left != right:
            return False
    return True


def _at(seq, i):
    return sp.Integer(0) if i < 0 else sp.Rational(seq[i])


def recurrence_step(f, g, h, k, n):
    r"""
    a_n(F) from the double crossing change identity:
    a_n(G) + (a_{n-1}(G) - a_{n-1}(F))/2 + (a_{n-1}(H) - a_{n-1}(K))/2
           + (a_{n-2}(H) - a_{n-2}(K))/2.
    `f` needs the coefficients below n; negative indices read as 0.
    """
    half = sp.Rational(1, 2)
    return (_at(g, n)
            + half * (_at(g, n - 1) - _at(f, n - 1))
            + half * (_at(h, n - 1) - _at(k, n - 1))
            + half * (_at(h, n - 2) - _at(k, n - 2)))


def solve_recurrence(g, h, k, order):
    """The unique F satisfying the double crossing change identity with G, H, K."""
    f = []
    for n in range(order + 1):
        f.append(recurrence_step(f, g, h, k, n))
    return SeriesAtOne(order, f)
