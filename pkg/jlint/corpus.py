# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
"""Built-in PD codes for the links the integrality checks run on."""
from jlint.diagram import parse_pd
from jlint.utils.misc import JlintError

CORPUS = {
    "unknot": """\
# crossing-free unknot
U
""",
    "trefoil_left": """\
# left-handed trefoil, writhe -3
X 1 4 2 5
X 3 6 4 1
X 5 2 6 3
""",
    "trefoil_right": """\
# right-handed trefoil, writhe +3
X 4 2 5 1
X 6 4 1 3
X 2 6 3 5
""",
    "figure8": """\
# figure-eight knot, writhe 0
X 4 2 5 1
X 8 6 1 5
X 6 3 7 4
X 2 7 3 8
""",
    "hopf_pos": """\
# positive Hopf link, lk = +1
X 1 3 2 4
X 3 1 4 2
""",
    "whitehead": """\
# Whitehead link 5^2_1, lk = 0
X 6 1 7 2
X 10 7 5 8
X 4 5 1 6
X 2 10 3 9
X 8 4 9 3
""",
    "borromean": """\
# Borromean rings: components 1-4, 5-8, 9-12
X 7 4 8 1
X 5 3 6 2
X 11 8 12 5
X 9 7 10 6
X 3 12 4 9
X 1 11 2 10
""",
}


def list_corpus():
    return list(CORPUS)


def builtin_corpus(name):
    if name not in CORPUS:
        raise JlintError("UNKNOWN_NAME",
                         f"no built-in diagram {name!r}, choose from {', '.join(CORPUS)}")
    return parse_pd(CORPUS[name])


def load_corpus(names=None):
    names = list_corpus() if names is None else names
    return {name: builtin_corpus(name) for name in names}
