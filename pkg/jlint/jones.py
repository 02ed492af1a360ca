# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
r"""
Kauffman bracket state sum and the writhe-normalized Jones polynomial.

The bracket is a QuarterLaurent in A (index = power of A). The Jones
polynomial is (-A^3)^{-w} <D> with A = t^{-1/4}; the only free convention
is an optional t -> 1/t applied at the end.
"""
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from multiprocessing import Pool

import tqdm

from jlint.algebra.laurent import QuarterLaurent
from jlint.diagram import writhe
from jlint.utils.misc import JlintError, log
from jlint.utils.union_find import UnionFind

DEFAULT_CAP = 24
STATES_PER_CHUNK = 4096


@dataclass(frozen=True)
class ConventionBundle:
    invert_t: bool = False

    @property
    def name(self):
        return "invert" if self.invert_t else "plain"


PLAIN = ConventionBundle(invert_t=False)
INVERTED = ConventionBundle(invert_t=True)
CONVENTIONS = {"plain": PLAIN, "invert": INVERTED}


def loop_value():
    """-A^2 - A^{-2}."""
    return QuarterLaurent({2: -1, -2: -1})


def _count_states(job):
    r"""
    Histogram of (A-power, loop count) over the states start..stop-1.
    Bit i of a state set means crossing i takes the B-smoothing.
    """
    smoothA, smoothB, nArcs, start, stop = job
    nCrossings = len(smoothA)
    counts = Counter()
    for state in range(start, stop):
        uf = UnionFind(nArcs)
        for i in range(nCrossings):
            pairs = smoothB[i] if (state >> i) & 1 else smoothA[i]
            for x, y in pairs:
                uf.union(x, y)
        counts[(nCrossings - 2 * bin(state).count('1'), uf.num_sets)] += 1
    return counts


def kauffman_bracket(d, cap=DEFAULT_CAP, workers=1, progress=False):
    r"""
    <D> as a sum over all 2^c smoothings: A^{#A - #B} (-A^2 - A^{-2})^{loops - 1},
    one more loop factor per crossing-free component. Normalized so the
    crossing-free unknot has bracket 1.
    """
    if d.mu == 0:
        raise JlintError("EMPTY_DIAGRAM", "the empty link has no Jones polynomial")
    nCrossings = d.n_crossings
    if nCrossings > cap:
        raise JlintError("CAP_EXCEEDED", f"{nCrossings} crossings exceed the cap of {cap}")
    delta = loop_value()
    if nCrossings == 0:
        return delta ** (d.extras - 1)

    index = {a: k for k, a in enumerate(d.arcs())}
    smoothA = [((index[a], index[b]), (index[c], index[e])) for a, b, c, e in d.crossings]
    smoothB = [((index[a], index[e]), (index[b], index[c])) for a, b, c, e in d.crossings]
    nStates = 2 ** nCrossings
    jobs = [(smoothA, smoothB, len(index), start, min(start + STATES_PER_CHUNK, nStates))
            for start in range(0, nStates, STATES_PER_CHUNK)]
    log(f"Bracket state sum: {nStates} states in {len(jobs)} chunks, {workers} worker(s)")

    counts = Counter()
    if workers > 1 and len(jobs) > 1:
        with Pool(workers) as pool:
            for partial in tqdm.tqdm(pool.imap(_count_states, jobs), total=len(jobs),
                                     disable=not progress):
                counts.update(partial)
    else:
        for job in tqdm.tqdm(jobs, disable=not progress):
            counts.update(_count_states(job))

    bracket = QuarterLaurent()
    for (power, loops), n in sorted(counts.items()):
        bracket = bracket + QuarterLaurent.monomial(n, power) * delta ** (loops - 1)
    return bracket * delta ** d.extras


def jones_reduced(d, cfg=PLAIN, cap=DEFAULT_CAP, workers=1, progress=False):
    bracket = kauffman_bracket(d, cap=cap, workers=workers, progress=progress)
    w = writhe(d)
    normalized = QuarterLaurent.monomial((-1) ** (w % 2), -3 * w) * bracket
    # A = t^{-1/4}
    jones = normalized.invert_variable()
    return jones.invert_variable() if cfg.invert_t else jones


def calibrate(corpus, cap=DEFAULT_CAP):
    r"""
    Pick the convention under which the left trefoil and the Whitehead link
    reproduce their reference averaged Jones polynomials.

    Args:
        - corpus (dict): name -> LinkDiagram, must hold trefoil_left and
                         whitehead
    """
    from jlint.phi import (phi_knot, phi_brunnian,
                           TREFOIL_LEFT_PHI, WHITEHEAD_PHI)

    if not corpus or "trefoil_left" not in corpus or "whitehead" not in corpus:
        raise JlintError("CALIBRATION_FAILED",
                         "calibration needs trefoil_left and whitehead")
    for cfg in (PLAIN, INVERTED):
        trefoil = phi_knot(corpus["trefoil_left"], cfg, cap=cap)
        if trefoil != TREFOIL_LEFT_PHI:
            log(f"Convention {cfg.name}: trefoil gives {trefoil.render()}")
            continue
        whitehead = phi_brunnian(corpus["whitehead"], cfg, cap=cap)
        if whitehead != WHITEHEAD_PHI:
            log(f"Convention {cfg.name}: whitehead gives {whitehead.render()}")
            continue
        log(f"Calibrated convention: {cfg.name}")
        return cfg
    raise JlintError("CALIBRATION_FAILED",
                     "no convention reproduces both reference polynomials")


@lru_cache(maxsize=None)
def calibrated_convention():
    from jlint.corpus import load_corpus
    return calibrate(load_corpus(["trefoil_left", "whitehead"]))


def resolve_convention(name):
    if name == "auto":
        return calibrated_convention()
    if name not in CONVENTIONS:
        raise JlintError("UNKNOWN_CONVENTION", f"unknown convention {name!r}")
    return CONVENTIONS[name]
