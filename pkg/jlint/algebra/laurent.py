# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""Laurent polynomials with exponents on the quarter-integer grid.

A QuarterLaurent maps an exponent index k to a rational coefficient and
stands for sum c_k t^{k/4}. The same class holds Kauffman brackets in the
variable A: there the index counts powers of A, and the substitution
A = t^{-1/4} is `invert_variable`.
"""
import re

import sympy as sp

from jlint.algebra.exact import to_rational, format_rational
from jlint.utils.misc import JlintError

GRID = 4

# Returned by div_exact when the quotient is not a Laurent polynomial.
NOT_DIVISIBLE = None

_TERM_RE = re.compile(r'^(?P<coeff>\d+(?:/\d+)?|\(\d+(?:/\d+)?\))?'
                      r'(?:(?P<var>[A-Za-z])'
                      r'(?:\^(?:(?P<int>\d+)|\{(?P<exp>-?\d+(?:/\d+)?)\}))?)?$')


class QuarterLaurent(object):

    __slots__ = ('_terms',)

    def __init__(self, terms=None):
        clean = {}
        for k, c in (terms or {}).items():
            c = to_rational(c)
            if c != 0:
                clean[int(k)] = c
        self._terms = clean

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, c, k):
        return cls({k: c})

    @classmethod
    def from_powers(cls, powers):
        """Build from {exponent of t: coefficient}, exponents in (1/4)Z."""
        terms = {}
        for e, c in powers.items():
            k = to_rational(e) * GRID
            if k.q != 1:
                raise JlintError("OFF_GRID", f"exponent {e} is not a multiple of 1/{GRID}")
            terms[int(k)] = terms.get(int(k), 0) + to_rational(c)
        return cls(terms)

    @classmethod
    def t(cls):
        return cls({GRID: 1})

    @classmethod
    def delta(cls):
        """t^{1/2} + t^{-1/2}."""
        return cls({GRID // 2: 1, -GRID // 2: 1})

    @classmethod
    def from_sympy(cls, expr, variable, grid=GRID):
        terms = {}
        for term in sp.Add.make_args(sp.expand(expr)):
            coeff, exponent = term.as_coeff_exponent(variable)
            if coeff.has(variable) or not coeff.is_Rational:
                raise JlintError("NOT_LAURENT", f"{term} is not a Laurent monomial")
            k = sp.Rational(exponent) * grid
            if k.q != 1:
                raise JlintError("OFF_GRID", f"exponent {exponent} is off the grid")
            terms[int(k)] = terms.get(int(k), 0) + coeff
        return cls(terms)

    def to_sympy(self, variable, grid=GRID):
        return sp.Add(*[c * variable**sp.Rational(k, grid) for k, c in self.items()])

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coefficient(self, k):
        return self._terms.get(k, sp.Integer(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def min_index(self):
        return min(self._terms) if self._terms else None

    def max_index(self):
        return max(self._terms) if self._terms else None

    def is_integer_grid(self):
        return all(k % GRID == 0 for k in self._terms)

    def is_half_grid(self):
        return all(k % (GRID // 2) == 0 for k in self._terms)

    def has_integer_coefficients(self):
        return all(c.q == 1 for c in self._terms.values())

    def __eq__(self, other):
        if not isinstance(other, QuarterLaurent):
            if isinstance(other, (int, sp.Rational)):
                other = QuarterLaurent.constant(other)
            else:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self.items()))

    def __add__(self, other):
        other = _coerce(other)
        terms = dict(self._terms)
        for k, c in other._terms.items():
            terms[k] = terms.get(k, 0) + c
        return QuarterLaurent(terms)

    __radd__ = __add__

    def __neg__(self):
        return QuarterLaurent({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        terms = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                terms[k1 + k2] = terms.get(k1 + k2, 0) + c1 * c2
        return QuarterLaurent(terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise JlintError("NEGATIVE_POWER", f"power must be a non-negative int, got {n}")
        out, base = QuarterLaurent.constant(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        """Multiply by t^{k/4}."""
        return QuarterLaurent({i + k: c for i, c in self._terms.items()})

    def invert_variable(self):
        return QuarterLaurent({-k: c for k, c in self._terms.items()})

    def evaluate_at_one(self):
        return sp.Rational(sum(self._terms.values(), sp.Integer(0)))

    def div_exact(self, d):
        r"""
        Exact division in the Laurent ring. Both operands are shifted into
        Q[x], x = t^{1/4}, with nonzero constant term in the divisor; since
        x does not divide the shifted divisor, Laurent divisibility reduces
        to polynomial divisibility.
        """
        d = _coerce(d)
        if d.is_zero():
            raise JlintError("DIVISION_BY_ZERO", "division by the zero polynomial")
        if self.is_zero():
            return QuarterLaurent()
        x = sp.Symbol('x')
        pShift, dShift = self.min_index(), d.min_index()
        num = sp.Poly.from_dict({(k - pShift,): c for k, c in self._terms.items()}, x, domain='QQ')
        den = sp.Poly.from_dict({(k - dShift,): c for k, c in d._terms.items()}, x, domain='QQ')
        quotient, remainder = num.div(den)
        if not remainder.is_zero:
            return NOT_DIVISIBLE
        return QuarterLaurent({m[0] + pShift - dShift: c
                               for m, c in quotient.as_dict().items()})

    def render(self, variable='t', grid=GRID):
        if not self._terms:
            return "0"
        out = []
        for k, c in sorted(self._terms.items(), reverse=True):
            e = sp.Rational(k, grid)
            mag = abs(c)
            if e == 0:
                body = format_rational(mag)
            else:
                if mag == 1:
                    coeff = ""
                elif mag.q == 1:
                    coeff = format_rational(mag)
                else:
                    coeff = f"({format_rational(mag)})"
                if e == 1:
                    power = variable
                elif e.q == 1 and e > 0:
                    power = f"{variable}^{e}"
                else:
                    power = f"{variable}^{{{format_rational(e)}}}"
                body = coeff + power
            sign = "-" if c < 0 else "+"
            out.append(body if (not out and sign == "+") else sign + body)
        return "".join(out)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"QuarterLaurent({self.render()})"


def _coerce(x):
    if isinstance(x, QuarterLaurent):
        return x
    return QuarterLaurent.constant(x)


def _split_terms(text):
    terms, current, depth = [], "", 0
    for ch in text:
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        if ch in "+-" and depth == 0 and current:
            terms.append(current)
            current = ""
        current += ch
    if current:
        terms.append(current)
    return terms


def parse_laurent(text, variable='t', grid=GRID):
    r"""
    Inverse of QuarterLaurent.render, e.g. "-t^4+t^3+t-1" or
    "t^{7/2}-2t^{5/2}+(3/2)t^{-1/2}".
    """
    source = text
    text = text.replace('−', '-').replace(' ', '').replace('*', '')
    if not text:
        raise JlintError("MALFORMED_POLYNOMIAL", "empty polynomial")
    powers = {}
    for term in _split_terms(text):
        sign = -1 if term.startswith('-') else 1
        body = term.lstrip('+-')
        match = _TERM_RE.match(body)
        if not body or not match or (match.group('var') not in (None, variable)):
            raise JlintError("MALFORMED_POLYNOMIAL", f"cannot parse term {term!r} of {source!r}")
        coeff = match.group('coeff')
        coeff = to_rational(coeff.strip('()')) if coeff else sp.Integer(1)
        if match.group('var') is None:
            exponent = sp.Integer(0)
            if match.group('coeff') is None:
                raise JlintError("MALFORMED_POLYNOMIAL", f"empty term in {source!r}")
        elif match.group('int') is not None:
            exponent = sp.Integer(match.group('int'))
        elif match.group('exp') is not None:
            exponent = to_rational(match.group('exp'))
        else:
            exponent = sp.Integer(1)
        k = exponent * grid
        if k.q != 1:
            raise JlintError("OFF_GRID", f"exponent {exponent} is off the grid")
        powers[int(k)] = powers.get(int(k), 0) + sign * coeff
    return QuarterLaurent(powers)
