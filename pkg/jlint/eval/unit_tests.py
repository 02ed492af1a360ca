# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import random
import unittest
from nose.tools import eq_, ok_

import sympy as sp

from .integrality import (BOUNDARY_PROBE, RANGE_PROBE, QUOTED_CLAIM,
                          ValuationEntry, check_eq1_vanishing,
                          check_gsl_integrality, eq1_report, gsl_report,
                          convolve_coefficients, check_prop1, check_prop2,
                          check_conjecture41, conjecture41_report,
                          check_knot_divisibility, check_asl_low_order,
                          double_crossing_identity, recurrence_step,
                          solve_recurrence)
from ..algebra.exact import padic_valuation
from ..algebra.laurent import QuarterLaurent
from ..algebra.series import SeriesAtOne
from ..corpus import load_corpus
from ..diagram import LinkClass
from ..jones import INVERTED
from ..phi import PhiResult, phi_knot, phi_brunnian, phi_gsl, phi_series
from ..utils.misc import JlintError, set_seed

R = sp.Rational


def random_knot_phi(span=6, maxCoeff=4):
    terms = {}
    for _ in range(random.randint(1, 5)):
        terms[2 * random.randint(-span, span)] = random.randint(-maxCoeff, maxCoeff)
    return PhiResult(QuarterLaurent(terms), QuarterLaurent.constant(1), 1, LinkClass.KNOT)


def random_lattice_series(order):
    r"""a_0 = a_1 = 0 and 2^{n-2} a_n a random integer."""
    coeffs = [0, 0] + [R(random.randint(-50, 50), 2 ** (n - 2)) for n in range(2, order + 1)]
    return SeriesAtOne(order, coeffs)


def crossing_change_quadruple():
    r"""
    Random G, H, K and the F with (t+1)(F - G) = (t^2 - t)(H - K).
    """
    G, H, K = random_knot_phi(), random_knot_phi(), random_knot_phi()
    t = QuarterLaurent.t()
    num = G.num * (t + 1) + (t * t - t) * (H.num - K.num)
    F = PhiResult(num, t + 1, 1, LinkClass.KNOT)
    return F, G, H, K


class TestIntegrality(unittest.TestCase):

    def setUp(self):
        set_seed(1234)
        corpus = load_corpus()
        self.corpus = corpus
        self.trefoil = phi_series(phi_knot(corpus["trefoil_left"], INVERTED), 40)
        self.figure8 = phi_series(phi_knot(corpus["figure8"], INVERTED), 40)
        self.whitehead = phi_series(phi_brunnian(corpus["whitehead"], INVERTED), 40)
        self.borromean = phi_series(phi_brunnian(corpus["borromean"], INVERTED), 40)

    def testEq1(self):
        ok_(check_eq1_vanishing(self.trefoil, 1))
        ok_(check_eq1_vanishing(self.whitehead, 2))
        ok_(check_eq1_vanishing(self.borromean, 3))
        ok_(not check_eq1_vanishing(self.trefoil, 2))
        eq_(eq1_report(self.borromean, 3).verdict, "pass")
        report = eq1_report(self.whitehead, 3)
        eq_(report.verdict, "fail")
        eq_(report.entry(3).a, R(-3, 2))

    def testGslIntegrality(self):
        ok_(check_gsl_integrality(self.trefoil))
        ok_(check_gsl_integrality(self.trefoil * self.figure8))
        ok_(not check_gsl_integrality(self.whitehead))
        ok_(check_gsl_integrality(self.whitehead, 2))
        eq_(gsl_report(self.whitehead, 10).verdict, "fail")
        eq_(gsl_report(self.trefoil ** 3).verdict, "pass")

    def testConvolve(self):
        square = convolve_coefficients([self.trefoil, self.trefoil])
        eq_([square[i] for i in range(4, 9)], [9, 18, 15, 6, 1])
        eq_(convolve_coefficients([self.whitehead]), self.whitehead)
        with self.assertRaises(JlintError) as context:
            convolve_coefficients([])
        eq_(context.exception.code, "EMPTY_PRODUCT")

    def testConvolveMatchesProduct(self):
        corpus = self.corpus
        knots = [corpus[name] for name in ("trefoil_left", "trefoil_right", "figure8")]
        for a in knots:
            for b in knots:
                direct = phi_series(phi_gsl([a, b], INVERTED), 20)
                convolved = convolve_coefficients([phi_series(phi_knot(a, INVERTED), 20),
                                                   phi_series(phi_knot(b, INVERTED), 20)])
                eq_(direct, convolved)

    def testProp1SingleKnot(self):
        report = check_prop1(self.trefoil, 1)
        eq_(report.verdict, "pass")
        eq_(report.entry(3).flag, BOUNDARY_PROBE)
        eq_(report.entry(4).flag, RANGE_PROBE)
        eq_(check_prop1(self.figure8, 1).verdict, "pass")

    def testProp1SquaredTrefoil(self):
        report = check_prop1(self.trefoil ** 2, 2)
        eq_(report.verdict, "flagged")
        entry = report.entry(6)
        eq_(entry.a, 15)
        ok_(not entry.passed)
        eq_(entry.flag, BOUNDARY_PROBE)
        eq_(entry.v3, 1)
        eq_(len(report.anomalies), 1)
        ok_(BOUNDARY_PROBE in report.anomalies[0])
        for i in (4, 5, 7, 8):
            ok_(report.entry(i).passed)

    def testProp1CubedTrefoil(self):
        cube = self.trefoil ** 3
        eq_([cube[i] for i in range(6, 13)], [-27, -81, -108, -81, -36, -9, -1])
        eq_(check_prop1(cube, 3).verdict, "pass")

    def testProp1ZeroSeries(self):
        report = check_prop1(SeriesAtOne.zero(12), 3)
        eq_(report.verdict, "pass")
        eq_(report.anomalies, [])

    def testProp1Errors(self):
        with self.assertRaises(JlintError) as context:
            check_prop1(self.trefoil, 0)
        eq_(context.exception.code, "INVALID_MU")
        with self.assertRaises(JlintError) as context:
            check_prop1(self.trefoil.truncate(3), 1)
        eq_(context.exception.code, "ORDER_TOO_LOW")

    def testProp2(self):
        for series in (self.whitehead, self.borromean, self.trefoil, self.figure8):
            eq_(check_prop2(series.truncate(30)).verdict, "pass")
        with self.assertRaises(JlintError):
            check_prop2(self.whitehead.truncate(5), 10)

    def testProp2IsSharp(self):
        for n in range(3, 31):
            eq_(padic_valuation(self.whitehead[n], 2), -(n - 2))
        for n in range(4, 31, 2):
            eq_(padic_valuation(self.borromean[n], 2), -(n - 2))

    def testProp2Fails(self):
        bad = SeriesAtOne(6, [0, 0, 0, 0, 0, R(1, 16)])
        report = check_prop2(bad)
        eq_(report.verdict, "fail")
        eq_([e.i for e in report.entries if not e.passed], [5])

    def testProp2Closure(self):
        for _ in range(50):
            x, y = random_lattice_series(16), random_lattice_series(16)
            eq_(check_prop2(x).verdict, "pass")
            eq_(check_prop2(x * y).verdict, "pass")
            eq_(check_prop2(x + y).verdict, "pass")

    def testConjecture41(self):
        result = check_conjecture41(self.whitehead, 2, 1)
        eq_((result.value, result.in_6Z), (-6, True))
        result = check_conjecture41(self.whitehead, 2, 2)
        eq_((result.value, result.in_6Z), (6, True))
        result = check_conjecture41(self.whitehead, 2, 3)
        eq_((result.value, result.in_6Z), (-21, False))
        report = conjecture41_report(self.whitehead, 2, [1, 2, 3])
        eq_(report.verdict, "fail")
        eq_(len(report.anomalies), 1)
        eq_(report.to_json()["entries"][2]["a"], "-21")

    def testKnotDivisibility(self):
        eq_(check_knot_divisibility(self.trefoil).verdict, "pass")
        eq_(check_knot_divisibility(self.figure8).verdict, "pass")
        eq_(check_knot_divisibility(self.whitehead).verdict, "fail")

    def testAslLowOrder(self):
        report = check_asl_low_order(self.whitehead, 2)
        eq_(report.verdict, "flagged")
        ok_(all(e.flag == QUOTED_CLAIM for e in report.entries))
        eq_(check_asl_low_order(self.borromean, 3).verdict, "flagged")
        eq_(check_asl_low_order(self.trefoil, 1).verdict, "pass")

    def testValuationEntry(self):
        entry = ValuationEntry(5, R(-7, 8), "2^3 a_n in Z", scale=8)
        ok_(entry.passed)
        eq_(entry.v2, -3)
        eq_(entry.to_json()["a"], "-7/8")
        zero = ValuationEntry(0, 0, "a_i = 0", lattice=[(3, sp.oo)])
        ok_(zero.passed)
        eq_(zero.to_json()["v3"], "inf")
        ok_(not ValuationEntry(1, 3, "a_i = 0", lattice=[(3, sp.oo)]).passed)
        with self.assertRaises(KeyError):
            check_prop2(self.trefoil.truncate(4)).entry(9)


class TestCrossingChange(unittest.TestCase):

    def setUp(self):
        set_seed(1234)

    def testIdentityOnClosedForms(self):
        for _ in range(20):
            F, G, H, K = crossing_change_quadruple()
            ok_(double_crossing_identity(F, G, H, K))
            shifted = PhiResult(F.num + F.den * QuarterLaurent.constant(1), F.den, 1,
                                LinkClass.KNOT)
            ok_(not double_crossing_identity(shifted, G, H, K))

    def testIdentityOnSeries(self):
        for _ in range(20):
            F, G, H, K = crossing_change_quadruple()
            series = [phi_series(x, 12) for x in (F, G, H, K)]
            ok_(double_crossing_identity(*series))
            ok_(double_crossing_identity(F, series[1], H, series[3]))
            perturbed = series[0] + SeriesAtOne.monomial(random.randint(0, 12), 12, R(1, 3))
            ok_(not double_crossing_identity(perturbed, *series[1:]))

    def testRecurrenceRecoversF(self):
        for _ in range(100):
            F, G, H, K = crossing_change_quadruple()
            f, g, h, k = (phi_series(x, 20) for x in (F, G, H, K))
            eq_(solve_recurrence(g, h, k, 20), f)

    def testRecurrenceStep(self):
        F, G, H, K = crossing_change_quadruple()
        f, g, h, k = (phi_series(x, 8) for x in (F, G, H, K))
        for n in range(9):
            eq_(recurrence_step(f, g, h, k, n), f[n])
        zero = SeriesAtOne.zero(4)
        eq_(solve_recurrence(zero, zero, zero, 4), zero)
