# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import argparse

from jlint.jones import DEFAULT_CAP


def get_default_jlint_config():
    parser = set_default_jlint_config(argparse.ArgumentParser())
    return parser.parse_args([])


def set_default_jlint_config(parser):
    group = parser.add_argument_group('Input',
                                      description="The link diagram to work on: "
                                      "a built-in corpus entry or a PD file.")
    group.add_argument('pathPD', type=str, nargs='?', default=None, metavar='FILE',
                       help='Path to a PD file (X a b c d / U / O comp +|- lines).')
    group.add_argument('--corpus', type=str, default=None, metavar='NAME',
                       help='Name of a built-in diagram (see `jlint corpus list`).')
    group.add_argument('--class', dest='linkClass', type=str, default=None,
                       choices=['knot', 'brunnian', 'gsl'],
                       help='Declared link class. Brunnian links must be declared.')
    group.add_argument('--gsl-power', dest='gslPower', type=int, default=1,
                       help='Replace the input by the split union of this many copies.')

    group = parser.add_argument_group('Computation',
                                      description="Exactness is never traded for speed; "
                                      "these only bound and distribute the work.")
    group.add_argument('--order', type=int, default=40,
                       help='Truncation order N of the series at t=1.')
    group.add_argument('-n', dest='n', type=int, default=None,
                       help='Index n of phi_n for the conj41 check. '
                       'If not given, n runs over 1..7.')
    group.add_argument('--convention', type=str, default='auto',
                       choices=['auto', 'plain', 'invert'],
                       help='Jones convention: auto calibrates on the reference '
                       'trefoil and Whitehead link.')
    group.add_argument('--cap', type=int, default=DEFAULT_CAP,
                       help='Largest crossing number accepted by the state sum.')
    group.add_argument('--workers', type=int, default=1,
                       help='Number of processes evaluating the state sum.')

    group = parser.add_argument_group('Output')
    group.add_argument('--format', type=str, default='text',
                       choices=['text', 'json', 'csv'])
    group.add_argument('--output', dest='pathOutput', type=str, default=None,
                       help='Also write the result as JSON to this path.')
    group.add_argument('--verbose', action='store_true',
                       help='Print progress and diagnostics on stderr.')
    return parser
