# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
r"""
The averaged Jones polynomial Phi(L; t) for knots, Brunnian links and
geometrically split links.

Phi is kept as an exact ratio num / den of QuarterLaurents with
den(1) != 0, so it always has a Taylor series at t = 1.
"""
from itertools import combinations

import sympy as sp

from jlint.algebra.laurent import QuarterLaurent, parse_laurent
from jlint.algebra.series import expand_ratio
from jlint.algebra.exact import format_rational
from jlint.diagram import (LinkClass, delete_components, split_components,
                           is_algebraically_split)
from jlint.jones import jones_reduced, calibrated_convention, DEFAULT_CAP
from jlint.utils.misc import JlintError, log

# Largest component count for which Brunnian-ness is checked on sublinks.
MAX_VALIDATED_MU = 3


class PhiResult(object):
    r"""
    Args:
        - num (QuarterLaurent): numerator
        - den (QuarterLaurent): denominator, nonzero at t=1
        - mu (int): number of components
        - link_class (LinkClass): how Phi was obtained

    Equality compares the rational functions by cross-multiplication.
    """

    def __init__(self, num, den, mu, link_class):
        assert den.evaluate_at_one() != 0
        self.num = num
        self.den = den
        self.mu = mu
        self.link_class = link_class

    def __eq__(self, other):
        if isinstance(other, QuarterLaurent):
            other = PhiResult(other, QuarterLaurent.constant(1), self.mu, self.link_class)
        if not isinstance(other, PhiResult):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def __mul__(self, other):
        return PhiResult(self.num * other.num, self.den * other.den,
                         self.mu + other.mu, LinkClass.GSL)

    def as_laurent(self):
        """The Laurent polynomial num / den, or None if den does not divide num."""
        return self.num.div_exact(self.den)

    def render(self):
        return render_phi(self)

    def __repr__(self):
        return f"PhiResult(mu={self.mu}, {self.link_class.value}: {self.render()})"


def _one():
    return QuarterLaurent.constant(1)


def _cfg(cfg):
    return calibrated_convention() if cfg is None else cfg


def phi_trivial(mu):
    if mu < 0:
        raise JlintError("NEGATIVE_MU", f"component count must be non-negative, got {mu}")
    return PhiResult(_one(), _one(), mu, LinkClass.KNOT if mu == 1 else LinkClass.GSL)


def phi_knot(d, cfg=None, cap=DEFAULT_CAP, workers=1):
    r"""
    Phi(K) = V(K) - 1. The crossing-free unknot keeps Phi = 1, as every
    trivial link does.
    """
    if d.mu != 1:
        raise JlintError("NOT_A_KNOT", f"expected one component, got {d.mu}")
    if d.n_crossings == 0:
        return phi_trivial(1)
    jones = jones_reduced(d, _cfg(cfg), cap=cap, workers=workers)
    return PhiResult(jones - 1, _one(), 1, LinkClass.KNOT)


def phi_brunnian(d, cfg=None, cap=DEFAULT_CAP, workers=1):
    r"""
    Phi(L) = (-1)^{mu-1} V(L) / delta^{mu-1} - 1 with delta = t^{1/2} + t^{-1/2},
    stored over den = (t+1)^{mu-1} after clearing t^{(mu-1)/2}.
    """
    if d.mu < 2:
        raise JlintError("NOT_MULTI_COMPONENT", f"expected at least two components, got {d.mu}")
    if d.n_crossings == 0:
        return phi_trivial(d.mu)
    m = d.mu - 1
    jones = jones_reduced(d, _cfg(cfg), cap=cap, workers=workers)
    num = ((-1) ** m * jones - QuarterLaurent.delta() ** m).shift(2 * m)
    den = (QuarterLaurent.t() + 1) ** m
    return PhiResult(num, den, d.mu, LinkClass.BRUNNIAN_DECLARED)


def _phi_piece(d, cfg, cap, workers):
    if d.mu == 0:
        return phi_trivial(0)
    if d.mu == 1:
        return phi_knot(d, cfg, cap=cap, workers=workers)
    return phi_brunnian(d, cfg, cap=cap, workers=workers)


def phi_gsl(pieces, cfg=None, cap=DEFAULT_CAP, workers=1):
    """Product of the pieces' Phi; an empty list is the empty link."""
    out = phi_trivial(0)
    for piece in pieces:
        out = out * _phi_piece(piece, cfg, cap, workers)
    return PhiResult(out.num, out.den, out.mu, LinkClass.GSL)


def phi_series(phi, order):
    return expand_ratio(phi.num, phi.den, order)


def phi_n(series, mu, n):
    """(-2)^mu a_{n+mu}."""
    if n + mu > series.order:
        raise JlintError("ORDER_TOO_LOW",
                         f"phi_{n} needs order {n + mu}, series has order {series.order}")
    return sp.Integer(-2) ** mu * series[n + mu]


def unlink_jones(k):
    """Jones polynomial of the k-component unlink, (-t^{1/2} - t^{-1/2})^{k-1}."""
    return (-QuarterLaurent.delta()) ** (k - 1)


def validate_brunnian(d, cfg=None, cap=DEFAULT_CAP):
    """True iff every proper sublink has the Jones polynomial of an unlink."""
    cfg = _cfg(cfg)
    everything = set(range(d.mu))
    for k in range(1, d.mu):
        for kept in combinations(range(d.mu), k):
            sublink = delete_components(d, everything - set(kept))
            if jones_reduced(sublink, cfg, cap=cap) != unlink_jones(k):
                log(f"Sublink {kept} is not an unlink")
                return False
    return True


def compute_phi(d, declared=None, cfg=None, cap=DEFAULT_CAP, workers=1):
    r"""
    Phi for the classes it is defined on here: trivial links, knots,
    Brunnian links and split links whose pieces are knots or Brunnian.
    Brunnian-ness is checked on sublinks up to MAX_VALIDATED_MU components,
    where an undeclared link that passes the check is accepted as Brunnian.
    Anything else raises CLASS_UNSUPPORTED.
    """
    declared = LinkClass.from_name(declared)
    cfg = _cfg(cfg)
    if d.mu == 0:
        return phi_trivial(0)
    if d.mu == 1:
        return phi_knot(d, cfg, cap=cap, workers=workers)
    if declared == LinkClass.KNOT:
        raise JlintError("CLASS_UNSUPPORTED", f"declared a knot, diagram has {d.mu} components")
    if not is_algebraically_split(d):
        raise JlintError("CLASS_UNSUPPORTED", "not algebraically split: linking numbers are nonzero")

    pieces = split_components(d)
    if len(pieces) == 1 and declared == LinkClass.BRUNNIAN_DECLARED:
        _require_brunnian(d, cfg, cap)
        return phi_brunnian(d, cfg, cap=cap, workers=workers)
    if len(pieces) == 1 and declared is None and d.mu <= MAX_VALIDATED_MU \
            and validate_brunnian(d, cfg, cap=cap):
        log("All proper sublinks are trivial, treating the link as Brunnian")
        return phi_brunnian(d, cfg, cap=cap, workers=workers)
    if len(pieces) > 1 and declared in (None, LinkClass.GSL, LinkClass.BRUNNIAN_DECLARED):
        for piece in pieces:
            if piece.mu > 1:
                _require_brunnian(piece, cfg, cap)
        return phi_gsl(pieces, cfg, cap=cap, workers=workers)
    raise JlintError("CLASS_UNSUPPORTED",
                     "Phi of a general algebraically split link is not computed; "
                     "declare --class brunnian for Brunnian links")


def _require_brunnian(d, cfg, cap):
    if d.mu > MAX_VALIDATED_MU:
        log(f"Brunnian class of a {d.mu}-component link accepted without validation")
        return
    if not validate_brunnian(d, cfg, cap=cap):
        raise JlintError("CLASS_UNSUPPORTED", "a proper sublink is not trivial, link is not Brunnian")


def render_phi(phi):
    r"""
    Laurent part followed by partial fractions in (t+1), e.g.
    -t^3+3t^2-4t+5+t^{-1}-8(t+1)^{-1}.
    """
    quotient = phi.as_laurent()
    if quotient is not None:
        return quotient.render()
    if not (phi.num.is_integer_grid() and phi.den.is_integer_grid()):
        return f"({phi.num.render()})/({phi.den.render()})"

    t = sp.Symbol('t')
    expr = sp.apart(phi.num.to_sympy(t) / phi.den.to_sympy(t), t)
    laurent, fractions = sp.Integer(0), []
    for term in sp.Add.make_args(expr):
        top, bottom = sp.fraction(sp.together(term))
        bottom = sp.Poly(bottom, t)
        if bottom.is_monomial:
            laurent += term
        else:
            k = bottom.degree()
            if bottom != sp.Poly(bottom.LC() * (t + 1) ** k, t) or sp.Poly(top, t).degree() > 0:
                return f"({phi.num.render()})/({phi.den.render()})"
            fractions.append((k, sp.Rational(top / bottom.LC())))

    out = "" if laurent == 0 else QuarterLaurent.from_sympy(laurent, t).render()
    for k, c in sorted(fractions):
        mag = abs(c)
        coeff = "" if mag == 1 else (format_rational(mag) if mag.q == 1 else f"({format_rational(mag)})")
        sign = "-" if c < 0 else ("+" if out else "")
        out += f"{sign}{coeff}(t+1)^{{-{k}}}"
    return out or "0"


TREFOIL_LEFT_PHI = parse_laurent("-t^4+t^3+t-1")
WHITEHEAD_PHI = PhiResult(parse_laurent("-t^4+2t^3-t^2+t-2+t^{-1}"),
                          parse_laurent("t+1"), 2, LinkClass.BRUNNIAN_DECLARED)
