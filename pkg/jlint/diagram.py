# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
r"""
Oriented link diagrams given by planar diagram (PD) codes.

A crossing X[a, b, c, d] lists its four arcs counterclockwise, starting with
the incoming under-strand; the under-strand runs a -> c. The over-strand
runs either d -> b (positive crossing) or b -> d (negative crossing), which
tracing decides from the neighbouring crossings. Crossing-free unknotted
components are counted separately in `extras`.
"""
from enum import Enum
from itertools import chain

import numpy as np

from jlint.utils.misc import JlintError
from jlint.utils.union_find import UnionFind


class LinkClass(Enum):
    KNOT = "knot"
    BRUNNIAN_DECLARED = "brunnian"
    GSL = "gsl"
    ASL = "asl"
    GENERAL = "general"

    @classmethod
    def from_name(cls, name):
        if name is None or isinstance(name, LinkClass):
            return name
        for item in cls:
            if item.value == name:
                return item
        raise JlintError("UNKNOWN_CLASS", f"unknown link class {name!r}")


def _other_slot(occurrence, slot):
    first, second = occurrence
    return second if first == slot else first


def _check_planar(crossings, occurrences):
    r"""
    Each connected piece with c crossings must bound c + 2 faces. A face is
    an orbit of the darts (i, j) under "cross the arc, then turn to the
    next slot counterclockwise".
    """
    n = len(crossings)
    pieces = UnionFind(n)
    for (i, _), (k, _) in occurrences.values():
        pieces.union(i, k)
    faces = [0] * n
    seen = set()
    for i in range(n):
        for j in range(4):
            if (i, j) in seen:
                continue
            faces[pieces.find(i)] += 1
            dart = (i, j)
            while dart not in seen:
                seen.add(dart)
                ci, cj = _other_slot(occurrences[crossings[dart[0]][dart[1]]], dart)
                dart = (ci, (cj + 1) % 4)
    for group in pieces.groups():
        expected = len(group) + 2
        found = faces[pieces.find(group[0])]
        if found != expected:
            raise JlintError("NON_PLANAR",
                             f"crossings {group} bound {found} faces, "
                             f"a plane diagram needs {expected}")


class LinkDiagram(object):
    r"""
    Args:
        - crossings (list): 4-tuples of positive arc labels
        - extras (int): number of crossing-free unknotted components
        - over_hints (dict): crossing index -> slot (1 or 3) where the
                             over-strand enters. Only consulted for
                             components that never pass under a crossing,
                             whose direction the PD code cannot fix.

    Components are ordered by their smallest arc label, crossing-free
    components last.
    """

    def __init__(self, crossings=(), extras=0, over_hints=None):
        self.crossings = tuple(tuple(int(x) for x in c) for c in crossings)
        self.extras = int(extras)
        assert self.extras >= 0
        for c in self.crossings:
            if len(c) != 4:
                raise JlintError("MALFORMED_LINE", f"crossing {c} does not have 4 arcs")
            if min(c) <= 0:
                raise JlintError("MALFORMED_LINE", f"crossing {c} has a non-positive arc id")
        self._trace(over_hints or {})

    def _trace_from(self, start, occurrences):
        entries, arcs = [], []
        i, j = start
        while True:
            entries.append((i, j))
            exitSlot = (j + 2) % 4
            arc = self.crossings[i][exitSlot]
            arcs.append(arc)
            i, j = _other_slot(occurrences[arc], (i, exitSlot))
            if j == 2:
                raise JlintError("INCONSISTENT_ORIENTATION",
                                 f"arc {arc} runs into crossing {i} against its under-strand")
            if (i, j) == start:
                return entries, arcs

    def _trace(self, hints):
        occurrences = {}
        for i, c in enumerate(self.crossings):
            for j, arc in enumerate(c):
                occurrences.setdefault(arc, []).append((i, j))
        bad = sorted(a for a, occ in occurrences.items() if len(occ) != 2)
        if bad:
            raise JlintError("ARC_COUNT", f"arc ids {bad} do not appear exactly twice")
        _check_planar(self.crossings, occurrences)

        traced, seen = [], set()
        for i in range(len(self.crossings)):
            if i in seen:
                continue
            entries, arcs = self._trace_from((i, 0), occurrences)
            seen.update(ci for ci, cj in entries if cj == 0)
            traced.append((entries, arcs))

        overDone = {ci for entries, _ in traced for ci, cj in entries if cj != 0}
        for i in range(len(self.crossings)):
            if i in overDone:
                continue
            # Over-only component: the PD code leaves its direction free.
            entries, arcs = self._trace_from((i, 1), occurrences)
            hinted = [(ci, cj) for ci, cj in entries if ci in hints]
            if hinted:
                forward = hints[hinted[0][0]] == hinted[0][1]
            else:
                k = arcs.index(min(arcs))
                forward = arcs[(k + 1) % len(arcs)] < arcs[k - 1]
            if not forward:
                entries, arcs = self._trace_from((i, 3), occurrences)
            overDone.update(ci for ci, _ in entries)
            traced.append((entries, arcs))

        traced.sort(key=lambda x: min(x[1]))
        nCrossings = len(self.crossings)
        underComp, overComp, overIn = [None] * nCrossings, [None] * nCrossings, [None] * nCrossings
        components = []
        for index, (entries, arcs) in enumerate(traced):
            for ci, cj in entries:
                if cj == 0:
                    underComp[ci] = index
                else:
                    overComp[ci] = index
                    overIn[ci] = cj
            k = arcs.index(min(arcs))
            components.append(tuple(arcs[k:] + arcs[:k]))

        assert None not in overIn and None not in underComp
        self.components = tuple(components)
        self.under_comp = tuple(underComp)
        self.over_comp = tuple(overComp)
        self.over_in = tuple(overIn)
        self.signs = tuple(1 if s == 3 else -1 for s in overIn)

    @property
    def mu(self):
        return len(self.components) + self.extras

    @property
    def n_crossings(self):
        return len(self.crossings)

    def arcs(self):
        return sorted(set(chain.from_iterable(self.crossings)))

    def max_arc(self):
        return max(chain.from_iterable(self.crossings), default=0)

    def _key(self):
        return (self.crossings, self.extras, self.over_in)

    def __eq__(self, other):
        if not isinstance(other, LinkDiagram):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"LinkDiagram(mu={self.mu}, crossings={list(self.crossings)}, extras={self.extras})"


def _check_components(d, subset):
    subset = set(subset)
    bad = sorted(x for x in subset if not (isinstance(x, int) and 0 <= x < d.mu))
    if bad:
        raise JlintError("INVALID_COMPONENT",
                         f"components {bad} not in 0..{d.mu - 1}")
    return subset


def _check_crossing(d, idx):
    if not (isinstance(idx, int) and 0 <= idx < d.n_crossings):
        raise JlintError("INVALID_CROSSING",
                         f"crossing {idx} not in 0..{d.n_crossings - 1}")


def _rebuild(crossings, hints, unions, scopeArcs, extras):
    r"""
    Merge arcs along `unions`, rename each class to its smallest label and
    turn every class left without a crossing into a crossing-free component.
    """
    labels = sorted(scopeArcs)
    index = {a: k for k, a in enumerate(labels)}
    uf = UnionFind(len(labels))
    for x, y in unions:
        uf.union(index[x], index[y])
    smallest = {}
    for a in labels:
        smallest.setdefault(uf.find(index[a]), a)
    relabel = {a: smallest[uf.find(index[a])] for a in labels}

    newCrossings = [tuple(relabel[x] for x in c) for c in crossings]
    used = set(chain.from_iterable(newCrossings))
    loose = set(relabel.values()) - used
    return LinkDiagram(newCrossings, extras + len(loose), hints)


def parse_pd(text):
    r"""
    Parse the PD text format: `X a b c d` crossings, `U` crossing-free
    unknots, `O comp +|-` orientation overrides and `#` comments.
    """
    crossings, extras, overrides = [], 0, []
    for lineNo, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0]
        line = line.replace('[', ' ').replace(']', ' ').replace(',', ' ').strip()
        if not line:
            continue
        tokens = line.split()
        head, args = tokens[0], tokens[1:]
        try:
            if head == 'X' and len(args) == 4:
                crossing = tuple(int(x) for x in args)
                if min(crossing) <= 0:
                    raise ValueError
                crossings.append(crossing)
            elif head == 'U' and not args:
                extras += 1
            elif head == 'O' and len(args) == 2 and args[1] in ('+', '-'):
                overrides.append((int(args[0]), args[1]))
            else:
                raise ValueError
        except ValueError:
            raise JlintError("MALFORMED_LINE", f"line {lineNo}: {raw.strip()!r}")

    d = LinkDiagram(crossings, extras)
    _check_components(d, [k for k, _ in overrides])
    reverse = [k for k, direction in overrides if direction == '-']
    return reverse_components(d, reverse) if reverse else d


def load_pd(pathFile):
    with open(pathFile, 'r', encoding='utf-8') as file:
        return parse_pd(file.read())


def to_pd_text(d):
    lines = ["X " + " ".join(str(x) for x in c) for c in d.crossings]
    lines += ["U"] * d.extras
    default = LinkDiagram(d.crossings, d.extras)
    for k in range(len(d.components)):
        crossings = [i for i in range(d.n_crossings) if d.over_comp[i] == k]
        if any(d.over_in[i] != default.over_in[i] for i in crossings):
            lines.append(f"O {k} -")
    return "\n".join(lines) + "\n"


def writhe(d):
    return sum(d.signs)


def linking_matrix(d):
    matrix = np.zeros((d.mu, d.mu), dtype=np.int64)
    for u, o, s in zip(d.under_comp, d.over_comp, d.signs):
        if u != o:
            matrix[u, o] += s
            matrix[o, u] += s
    if np.any(matrix % 2):
        raise JlintError("NON_PLANAR", "two components share an odd number of crossings")
    return matrix // 2


def is_algebraically_split(d):
    return not np.any(linking_matrix(d))


def split_components(d):
    r"""
    Split the diagram into pieces that share no crossing. Arcs of each piece
    are renumbered 1..n in their original order; every crossing-free
    component is a piece of its own.
    """
    uf = UnionFind(len(d.components))
    for u, o in zip(d.under_comp, d.over_comp):
        uf.union(u, o)

    pieces = []
    for group in uf.groups():
        members = [i for i in range(d.n_crossings) if d.under_comp[i] in group]
        arcs = sorted(set(chain.from_iterable(d.crossings[i] for i in members)))
        rank = {a: k + 1 for k, a in enumerate(arcs)}
        crossings = [tuple(rank[x] for x in d.crossings[i]) for i in members]
        hints = {k: d.over_in[i] for k, i in enumerate(members)}
        pieces.append(LinkDiagram(crossings, 0, hints))
    pieces += [LinkDiagram(extras=1) for _ in range(d.extras)]
    return pieces


def is_geometrically_split(d):
    return d.mu >= 2 and all(p.mu == 1 for p in split_components(d))


def disjoint_union(d1, d2):
    offset = d1.max_arc()
    shifted = [tuple(x + offset for x in c) for c in d2.crossings]
    hints = dict(enumerate(d1.over_in + d2.over_in))
    return LinkDiagram(d1.crossings + tuple(shifted), d1.extras + d2.extras, hints)


def delete_components(d, subset):
    drop = _check_components(d, subset)
    if not drop:
        return d
    nArcComponents = len(d.components)
    droppedExtras = sum(1 for k in drop if k >= nArcComponents)

    kept, hints, unions = [], {}, []
    for i, c in enumerate(d.crossings):
        under, over = d.under_comp[i] in drop, d.over_comp[i] in drop
        if under and over:
            continue
        if under:
            unions.append((c[1], c[3]))
        elif over:
            unions.append((c[0], c[2]))
        else:
            hints[len(kept)] = d.over_in[i]
            kept.append(c)

    scope = set(chain.from_iterable(arcs for k, arcs in enumerate(d.components)
                                    if k not in drop))
    return _rebuild(kept, hints, unions, scope, d.extras - droppedExtras)


def change_crossing(d, idx):
    """Swap the over- and under-strand of one crossing; its sign flips."""
    _check_crossing(d, idx)
    crossings, hints = list(d.crossings), dict(enumerate(d.over_in))
    a, b, c, e = crossings[idx]
    if d.over_in[idx] == 3:
        crossings[idx], hints[idx] = (e, a, b, c), 1
    else:
        crossings[idx], hints[idx] = (b, c, e, a), 3
    return LinkDiagram(crossings, d.extras, hints)


def smooth_crossing(d, idx):
    r"""
    Oriented smoothing of one crossing: the incoming under-strand continues
    along the outgoing over-strand and vice versa.
    """
    _check_crossing(d, idx)
    c = d.crossings[idx]
    inOver, outOver = c[d.over_in[idx]], c[(d.over_in[idx] + 2) % 4]
    unions = [(c[0], outOver), (inOver, c[2])]
    kept = [x for i, x in enumerate(d.crossings) if i != idx]
    hints = dict(enumerate(s for i, s in enumerate(d.over_in) if i != idx))
    return _rebuild(kept, hints, unions, d.arcs(), d.extras)


def mirror(d):
    crossings, hints = [], {}
    for i, (a, b, c, e) in enumerate(d.crossings):
        if d.over_in[i] == 3:
            crossings.append((e, a, b, c))
            hints[i] = 1
        else:
            crossings.append((b, c, e, a))
            hints[i] = 3
    return LinkDiagram(crossings, d.extras, hints)


def reverse_components(d, subset):
    rev = _check_components(d, subset)
    crossings, hints = [], {}
    for i, (a, b, c, e) in enumerate(d.crossings):
        slot = d.over_in[i]
        if d.under_comp[i] in rev:
            crossings.append((c, e, a, b))
            slot = (slot + 2) % 4
        else:
            crossings.append((a, b, c, e))
        if d.over_comp[i] in rev:
            slot = (slot + 2) % 4
        hints[i] = slot
    return LinkDiagram(crossings, d.extras, hints)


def classify(d, declared=None):
    r"""
    Structural class of a diagram. The empty link counts as split; a
    declared Brunnian class is accepted for algebraically split links.
    """
    declared = LinkClass.from_name(declared)
    if d.mu == 1:
        return LinkClass.KNOT
    if d.mu == 0 or is_geometrically_split(d):
        return LinkClass.GSL
    if not is_algebraically_split(d):
        return LinkClass.GENERAL
    if declared == LinkClass.BRUNNIAN_DECLARED:
        return LinkClass.BRUNNIAN_DECLARED
    return LinkClass.ASL
