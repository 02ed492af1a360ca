# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""Exact rationals, valuations and the binomial primitives everything else uses.

Rationals are `sympy.Rational` values: always gcd-reduced with a positive
denominator, so structural equality is value equality. The valuation of
zero is `sympy.oo`, which compares greater than every integer.
"""
import re

import sympy as sp

from jlint.utils.misc import JlintError

INFINITY = sp.oo

_RATIONAL_RE = re.compile(r'^-?\d+(/\d+)?$')


def to_rational(x):
    if isinstance(x, (float, sp.Float)):
        raise JlintError("NOT_EXACT", f"refusing to convert float {x!r}")
    if isinstance(x, str):
        return parse_rational(x)
    return sp.Rational(x)


def parse_rational(text):
    text = text.strip().replace('−', '-')
    if not _RATIONAL_RE.match(text):
        raise JlintError("MALFORMED_RATIONAL", f"cannot parse {text!r}")
    if '/' in text and int(text.split('/')[1]) == 0:
        raise JlintError("MALFORMED_RATIONAL", f"zero denominator in {text!r}")
    return sp.Rational(text)


def format_rational(x):
    x = sp.Rational(x)
    return str(x.p) if x.q == 1 else f"{x.p}/{x.q}"


def is_integral(x):
    return sp.Rational(x).q == 1


def format_valuation(v):
    return "inf" if v == INFINITY else int(v)


def falling_factorial_div(m, n):
    r"""
    m(m-1)...(m-n+1) / n!, the generalized binomial coefficient C(m, n)
    for an integer m. Any product of n successive integers is divisible
    by n!, so the result is always an integer.
    """
    if n < 0:
        raise JlintError("NEGATIVE_ORDER", f"n must be non-negative, got {n}")
    quotient = sp.ff(sp.Integer(m), n) / sp.factorial(n)
    assert quotient.is_Integer
    return int(quotient)


def generalized_binomial(alpha, k):
    if k < 0:
        raise JlintError("NEGATIVE_ORDER", f"k must be non-negative, got {k}")
    return sp.Rational(sp.ff(to_rational(alpha), k) / sp.factorial(k))


def _check_prime(p):
    if not (isinstance(p, (int, sp.Integer)) and sp.isprime(int(p))):
        raise JlintError("NOT_PRIME", f"{p} is not a prime")
    return int(p)


def padic_valuation(x, p):
    p = _check_prime(p)
    x = to_rational(x)
    if x == 0:
        return INFINITY
    return sp.multiplicity(p, abs(x.p)) - sp.multiplicity(p, x.q)


def in_p_power_lattice(x, p, e):
    r"""
    True iff x is an integer divisible by p^e. For e <= 0 this is plain
    integrality; e = oo only admits x = 0.
    """
    p = _check_prime(p)
    x = to_rational(x)
    if x.q != 1:
        return False
    return bool(padic_valuation(x, p) >= e)
