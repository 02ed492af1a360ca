#!/usr/bin/env python3 -u
# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.

import argparse
import csv
import os
import os.path as osp

import tqdm

from jlint.algebra.exact import format_rational, format_valuation, padic_valuation
from jlint.corpus import load_corpus
from jlint.eval.integrality import check_prop1, check_prop2
from jlint.jones import resolve_convention
from jlint.phi import phi_gsl, phi_brunnian, phi_series
from jlint.utils.misc import Globals, save_logs, show_logs


def get_parser():
    parser = argparse.ArgumentParser(
        description="tabulate the 3-adic valuations of trefoil powers and the "
        "2-adic valuations of the Whitehead link coefficients."
    )
    parser.add_argument('output', help='directory where the JSON and CSV tables are saved')
    parser.add_argument('--order', type=int, default=30,
                        help='truncation order of the series at t=1')
    parser.add_argument('--maxMu', type=int, default=4,
                        help='largest power of the trefoil')
    parser.add_argument('--convention', type=str, default='auto',
                        choices=['auto', 'plain', 'invert'])
    parser.add_argument('--verbose', action='store_true')
    return parser


def trefoil_rows(trefoil, cfg, order, maxMu):
    rows, verdicts = [], {}
    for mu in tqdm.tqdm(range(1, maxMu + 1), disable=not Globals.verbose):
        series = phi_series(phi_gsl([trefoil] * mu, cfg), max(order, 4 * mu))
        report = check_prop1(series, mu)
        verdicts[f"trefoil^{mu}"] = report.verdict
        for e in report.entries:
            if e.a == 0:
                continue
            rows.append([f"trefoil^{mu}", mu, e.i, format_rational(e.a),
                         format_valuation(e.v2), format_valuation(e.v3),
                         e.bound, e.passed, e.flag or ""])
    return rows, verdicts


def whitehead_rows(whitehead, cfg, order):
    series = phi_series(phi_brunnian(whitehead, cfg), order)
    report = check_prop2(series)
    rows = []
    for e in report.entries:
        if e.a == 0:
            continue
        rows.append(["whitehead", 2, e.i, format_rational(e.a),
                     format_valuation(e.v2), format_valuation(e.v3),
                     e.bound, e.passed, ""])
    # The bound 2^{n-2} a_n in Z is attained when v2(a_n) = -(n-2).
    sharp = all(padic_valuation(series[n], 2) == -(n - 2) for n in range(3, order + 1))
    return rows, {"whitehead": report.verdict, "whitehead sharp": sharp}


def main():
    parser = get_parser()
    args = parser.parse_args()
    Globals.verbose = args.verbose

    corpus = load_corpus(["trefoil_left", "whitehead"])
    cfg = resolve_convention(args.convention)
    print(f"Convention: {cfg.name}")

    rows, verdicts = trefoil_rows(corpus["trefoil_left"], cfg, args.order, args.maxMu)
    moreRows, moreVerdicts = whitehead_rows(corpus["whitehead"], cfg, args.order)
    rows += moreRows
    verdicts.update(moreVerdicts)

    header = ["link", "mu", "i", "a", "v2", "v3", "bound", "pass", "flag"]
    show_logs("Measured valuations", header, rows)
    for name, verdict in verdicts.items():
        print(f"{name}: {verdict}")

    os.makedirs(args.output, exist_ok=True)
    save_logs({"convention": cfg.name, "order": args.order, "verdicts": verdicts,
               "rows": [dict(zip(header, row)) for row in rows]},
              osp.join(args.output, "sharpness.json"))
    with open(osp.join(args.output, "sharpness.csv"), 'w', newline='') as file:
        writer = csv.writer(file)
        writer.writerow(header)
        writer.writerows(rows)
    print(f"Tables saved in {args.output}")


if __name__ == "__main__":
    main()
