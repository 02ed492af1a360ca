# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import json
import random
import sys

import numpy as np


class JlintError(ValueError):
    r"""
    Base class of every input or contract error raised by jlint.

    Args:
        - code (str): machine readable error code, e.g. ARC_COUNT
        - message (str): human readable description
    """

    def __init__(self, code, message=""):
        super(JlintError, self).__init__(f"{code}: {message}" if message else code)
        self.code = code
        self.message = message


class Globals(object):
    """Global run switches. The command line fills in proper values."""
    verbose = False


def log(*args):
    if Globals.verbose:
        print(*args, file=sys.stderr)


def save_logs(data, pathLogs):
    with open(pathLogs, 'w') as file:
        json.dump(data, file, indent=2)


def load_logs(pathLogs):
    with open(pathLogs, 'r') as file:
        return json.load(file)


def show_logs(text, header, rows, file=None):
    file = sys.stdout if file is None else file
    widths = [len(h) for h in header]
    for row in rows:
        widths = [max(w, len(str(x))) for w, x in zip(widths, row)]
    formatCommand = ' '.join(['{:>%d}' % (w + 2) for w in widths])

    print('-'*50, file=file)
    print(text, file=file)
    print(formatCommand.format(*header), file=file)
    for row in rows:
        print(formatCommand.format(*[str(x) for x in row]), file=file)
    print('-'*50, file=file)


def set_seed(seed):
    random.seed(seed)
    np.random.seed(seed)
