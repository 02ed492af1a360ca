# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.


class UnionFind(object):
    r"""
    Disjoint-set forest over the integers 0..n-1 with path halving and
    union by size. `num_sets` is kept up to date by `union`.
    """

    def __init__(self, numElems):
        if numElems < 0:
            raise ValueError("Number of elements must be non-negative")
        self.parents = list(range(numElems))
        self.sizes = [1] * numElems
        self.num_sets = numElems

    def find(self, x):
        parents = self.parents
        while parents[x] != x:
            parents[x] = parents[parents[x]]
            x = parents[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.sizes[rx] < self.sizes[ry]:
            rx, ry = ry, rx
        self.parents[ry] = rx
        self.sizes[rx] += self.sizes[ry]
        self.num_sets -= 1
        return True

    def groups(self):
        out = {}
        for x in range(len(self.parents)):
            out.setdefault(self.find(x), []).append(x)
        return sorted(out.values())
