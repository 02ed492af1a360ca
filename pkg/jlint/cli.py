# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
r"""
jlint command line.

Exit codes: 0 everything passed, 1 input error, 2 a checked claim failed
or was flagged.
"""
import argparse
import csv
import io
import json
import sys

from jlint.algebra.exact import format_rational, format_valuation, padic_valuation
from jlint.corpus import builtin_corpus, load_corpus, CORPUS
from jlint.diagram import (load_pd, disjoint_union, classify, split_components,
                           is_algebraically_split, writhe, to_pd_text)
from jlint.eval import integrality
from jlint.jlint_default_config import set_default_jlint_config
from jlint.jones import jones_reduced, resolve_convention
from jlint.phi import compute_phi, phi_series
from jlint.utils.misc import Globals, JlintError, log, save_logs, show_logs

EXIT_OK, EXIT_INPUT, EXIT_CLAIM = 0, 1, 2
CHECKS = ['eq1', 'prop1', 'prop2', 'conj41', 'gsl', 'knot3', 'asl-low']
CONJ41_SWEEP = range(1, 8)


class JlintArgumentParser(argparse.ArgumentParser):
    """Usage errors are input errors (exit 1), not argparse's exit 2."""

    def error(self, message):
        raise JlintError("USAGE", message)


def parse_args(argv):
    parser = JlintArgumentParser(prog='jlint',
                                 description='Exact averaged Jones polynomials and '
                                 'integrality checks of their Taylor coefficients at t=1.')
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True
    for command, text in [('jones', 'Writhe-normalized Jones polynomial.'),
                          ('phi', 'Averaged Jones polynomial in closed form.'),
                          ('expand', 'Taylor coefficients of Phi at t=1.')]:
        set_default_jlint_config(subparsers.add_parser(command, help=text))

    check = subparsers.add_parser('check', help='Integrality claims on the series of Phi.')
    check.add_argument('which', choices=CHECKS)
    set_default_jlint_config(check)

    corpus = subparsers.add_parser('corpus', help='Built-in diagrams.')
    corpus.add_argument('action', choices=['list', 'show'])
    corpus.add_argument('name', nargs='?', default=None)
    corpus.add_argument('--format', type=str, default='text', choices=['text', 'json'])
    corpus.add_argument('--output', dest='pathOutput', type=str, default=None)
    corpus.add_argument('--verbose', action='store_true')

    examples = subparsers.add_parser('examples', help='Reproduce the worked examples.')
    examples.add_argument('--order', type=int, default=40)
    examples.add_argument('--format', type=str, default='text', choices=['text', 'json'])
    examples.add_argument('--output', dest='pathOutput', type=str, default=None)
    examples.add_argument('--verbose', action='store_true')

    args = parser.parse_args(argv)
    if getattr(args, 'order', 0) < 0:
        raise JlintError("USAGE", "--order must be non-negative")
    if getattr(args, 'gslPower', 1) < 1:
        raise JlintError("USAGE", "--gsl-power must be at least 1")
    return args


def load_input(args):
    if args.corpus is not None and args.pathPD is not None:
        raise JlintError("USAGE", "give either --corpus NAME or FILE, not both")
    if args.corpus is not None:
        d = builtin_corpus(args.corpus)
    elif args.pathPD is not None:
        d = load_pd(args.pathPD)
    else:
        raise JlintError("NO_INPUT", "give --corpus NAME or a PD file")
    out = d
    for _ in range(args.gslPower - 1):
        out = disjoint_union(out, d)
    log(f"Input: mu={out.mu}, {out.n_crossings} crossings, writhe {writhe(out)}")
    return out


def _emit(args, text, data, rows=None):
    if args.format == 'json':
        print(json.dumps(data, indent=2))
    elif args.format == 'csv' and rows is not None:
        writer = csv.writer(sys.stdout, lineterminator='\n')
        writer.writerows(rows)
    else:
        print(text)
    if args.pathOutput is not None:
        save_logs(data, args.pathOutput)
        log(f"Saved JSON to {args.pathOutput}")


def _series_rows(series):
    rows = [["index", "value", "v2", "v3"]]
    for i, a in enumerate(series):
        rows.append([i, format_rational(a), format_valuation(padic_valuation(a, 2)),
                     format_valuation(padic_valuation(a, 3))])
    return rows


def _phi_and_series(args, d, cfg):
    phi = compute_phi(d, args.linkClass, cfg, cap=args.cap, workers=args.workers)
    return phi, phi_series(phi, args.order)


def cmd_jones(args):
    d = load_input(args)
    cfg = resolve_convention(args.convention)
    jones = jones_reduced(d, cfg, cap=args.cap, workers=args.workers, progress=Globals.verbose)
    _emit(args, jones.render(),
          {"mu": d.mu, "convention": cfg.name, "jones": jones.render()})
    return EXIT_OK


def cmd_phi(args):
    d = load_input(args)
    cfg = resolve_convention(args.convention)
    phi = compute_phi(d, args.linkClass, cfg, cap=args.cap, workers=args.workers)
    _emit(args, phi.render(),
          {"mu": phi.mu, "class": phi.link_class.value, "convention": cfg.name,
           "phi": phi.render(), "num": phi.num.render(), "den": phi.den.render()})
    return EXIT_OK


def cmd_expand(args):
    d = load_input(args)
    cfg = resolve_convention(args.convention)
    phi, series = _phi_and_series(args, d, cfg)
    data = dict(series.to_json(), mu=phi.mu, convention=cfg.name)
    _emit(args, series.render(), data, _series_rows(series))
    return EXIT_OK


def _nontrivial_knots(d):
    return sum(1 for p in split_components(d) if p.mu == 1 and p.n_crossings > 0)


def build_report(which, d, phi, series, n=None):
    if which == 'eq1':
        return integrality.eq1_report(series, phi.mu)
    if which == 'prop1':
        return integrality.check_prop1(series, _nontrivial_knots(d))
    if which == 'prop2':
        return integrality.check_prop2(series)
    if which == 'conj41':
        ns = [n] if n is not None else [k for k in CONJ41_SWEEP if k + phi.mu <= series.order]
        return integrality.conjecture41_report(series, phi.mu, ns)
    if which == 'gsl':
        return integrality.gsl_report(series)
    if which == 'knot3':
        if d.mu != 1:
            raise JlintError("NOT_A_KNOT", f"knot3 needs a knot, got {d.mu} components")
        return integrality.check_knot_divisibility(series)
    if which == 'asl-low':
        return integrality.check_asl_low_order(series, phi.mu)
    raise JlintError("USAGE", f"unknown check {which!r}")


def _render_report(report):
    header = ["i", "a", "v2", "v3", "bound", "pass", "flag"]
    rows = [[e.i, format_rational(e.a), format_valuation(e.v2), format_valuation(e.v3),
             e.bound, "yes" if e.passed else "NO", e.flag or ""] for e in report.entries]
    buffer = io.StringIO()
    show_logs(f"Claim: {report.claim}", header, rows, file=buffer)
    print(f"verdict: {report.verdict}", file=buffer)
    for anomaly in report.anomalies:
        print(f"anomaly: {anomaly}", file=buffer)
    return buffer.getvalue().rstrip("\n")


def cmd_check(args):
    d = load_input(args)
    cfg = resolve_convention(args.convention)
    phi, series = _phi_and_series(args, d, cfg)
    report = build_report(args.which, d, phi, series, args.n)
    rows = [["index", "value", "v2", "v3", "pass"]]
    rows += [[e.i, format_rational(e.a), format_valuation(e.v2),
              format_valuation(e.v3), e.passed] for e in report.entries]
    _emit(args, _render_report(report), report.to_json(), rows)
    return EXIT_OK if report.verdict == "pass" else EXIT_CLAIM


def _corpus_row(name, d):
    return [name, d.mu, d.n_crossings, writhe(d), classify(d).value,
            "yes" if is_algebraically_split(d) else "no"]


def cmd_corpus(args):
    if args.action == 'list':
        corpus = load_corpus()
        rows = [_corpus_row(name, d) for name, d in corpus.items()]
        header = ["name", "mu", "crossings", "writhe", "class", "asl"]
        if args.format == 'json':
            _emit(args, None, [dict(zip(header, row)) for row in rows])
        else:
            show_logs(f"{len(rows)} built-in diagrams", header, rows)
            if args.pathOutput is not None:
                save_logs([dict(zip(header, row)) for row in rows], args.pathOutput)
        return EXIT_OK

    if args.name is None:
        raise JlintError("USAGE", "corpus show needs a NAME")
    d = builtin_corpus(args.name)
    name, mu, crossings, w, linkClass, asl = _corpus_row(args.name, d)
    text = (CORPUS[args.name].rstrip("\n")
            + f"\n# mu={mu} crossings={crossings} writhe={w} class={linkClass} asl={asl}")
    _emit(args, text, {"name": name, "pd": to_pd_text(d), "mu": mu, "crossings": crossings,
                       "writhe": w, "class": linkClass, "asl": asl == "yes"})
    return EXIT_OK


def run_examples(order=40):
    r"""
    The reference computations: Phi and series of the left trefoil and the
    Whitehead link, the phi_n counterexample, the squared trefoil 3-adic
    probe and the Borromean vanishing check.
    """
    from jlint.jones import calibrate
    from jlint.phi import phi_knot, phi_brunnian, phi_gsl, phi_n
    import sympy as sp

    corpus = load_corpus()
    cfg = calibrate(corpus)
    trefoil, whitehead = corpus["trefoil_left"], corpus["whitehead"]
    out = {"convention": cfg.name}

    phi = phi_knot(trefoil, cfg)
    series = phi_series(phi, order)
    out["trefoil_left"] = {"phi": phi.render(), "series": series.to_json()["coeffs"][:6]}

    phi = phi_brunnian(whitehead, cfg)
    series = phi_series(phi, order)
    out["whitehead"] = {"phi": phi.render(), "series": series.to_json()["coeffs"][:6],
                        "3! phi_3": format_rational(sp.factorial(3) * phi_n(series, 2, 3)),
                        "phi_7": format_rational(phi_n(series, 2, 7)),
                        "conj41": integrality.conjecture41_report(series, 2, [1, 2, 3]).to_json()}

    square = phi_series(phi_gsl([trefoil, trefoil], cfg), order)
    out["trefoil_squared"] = {"series": square.to_json()["coeffs"][4:9],
                              "prop1": integrality.check_prop1(square, 2).verdict}

    borromean = phi_series(phi_brunnian(corpus["borromean"], cfg), order)
    out["borromean"] = {"eq1": integrality.check_eq1_vanishing(borromean, 3),
                        "prop2": integrality.check_prop2(borromean).verdict}
    return out


def _render_examples(out):
    lines = [f"convention: {out['convention']}"]
    for name in ["trefoil_left", "whitehead", "trefoil_squared", "borromean"]:
        lines.append('-'*50)
        lines.append(name)
        for key, value in out[name].items():
            if isinstance(value, dict):
                value = value.get("verdict")
            elif isinstance(value, list):
                value = ", ".join(value)
            lines.append(f"  {key}: {value}")
    return "\n".join(lines)


def cmd_examples(args):
    out = run_examples(args.order)
    _emit(args, _render_examples(out), out)
    return EXIT_OK


COMMANDS = {'jones': cmd_jones, 'phi': cmd_phi, 'expand': cmd_expand,
            'check': cmd_check, 'corpus': cmd_corpus, 'examples': cmd_examples}


def main(argv):
    try:
        args = parse_args(argv)
        Globals.verbose = args.verbose
        return COMMANDS[args.command](args)
    except JlintError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as error:
        print(f"error: IO_ERROR: {error}", file=sys.stderr)
        return EXIT_INPUT


def run():
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    run()
