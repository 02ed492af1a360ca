# Copyright (c) Facebook, Inc. and its affiliates.
#
# This source code is licensed under the MIT license found in the
# LICENSE file in the root directory of this source tree.
import io
import os
import random
import tempfile
import unittest
from nose.tools import eq_, ok_

from .misc import JlintError, save_logs, load_logs, show_logs, set_seed
from .union_find import UnionFind


class TestUnionFind(unittest.TestCase):

    def testSingletons(self):
        uf = UnionFind(5)
        eq_(uf.num_sets, 5)
        eq_(uf.groups(), [[0], [1], [2], [3], [4]])

    def testUnion(self):
        uf = UnionFind(6)
        ok_(uf.union(0, 1))
        ok_(uf.union(1, 2))
        ok_(not uf.union(0, 2))
        ok_(uf.union(4, 5))
        eq_(uf.num_sets, 3)
        eq_(uf.find(0), uf.find(2))
        ok_(uf.find(3) != uf.find(4))
        eq_(uf.groups(), [[0, 1, 2], [3], [4, 5]])

    def testRandomMatchesComponentCount(self):
        set_seed(7)
        for _ in range(50):
            n = random.randint(1, 30)
            uf = UnionFind(n)
            labels = list(range(n))
            for _ in range(random.randint(0, 40)):
                x, y = random.randrange(n), random.randrange(n)
                uf.union(x, y)
                old, new = labels[x], labels[y]
                labels = [new if l == old else l for l in labels]
            eq_(uf.num_sets, len(set(labels)))

    def testEmpty(self):
        eq_(UnionFind(0).num_sets, 0)
        with self.assertRaises(ValueError):
            UnionFind(-1)


class TestMisc(unittest.TestCase):

    def testErrorCarriesCode(self):
        error = JlintError("ARC_COUNT", "arc 3 appears 3 times")
        eq_(error.code, "ARC_COUNT")
        ok_(isinstance(error, ValueError))
        eq_(str(error), "ARC_COUNT: arc 3 appears 3 times")

    def testLogsRoundTrip(self):
        data = {"claim": "prop2", "entries": [{"i": 5, "a": "-7/8"}]}
        with tempfile.TemporaryDirectory() as tmpDir:
            path = os.path.join(tmpDir, "report.json")
            save_logs(data, path)
            eq_(load_logs(path), data)

    def testShowLogs(self):
        buffer = io.StringIO()
        show_logs("Claim", ["i", "a"], [[0, "0"], [3, "-3/2"]], file=buffer)
        lines = buffer.getvalue().splitlines()
        eq_(lines[0], '-'*50)
        eq_(lines[1], "Claim")
        ok_(lines[4].strip().endswith("-3/2"))
        eq_(lines[-1], '-'*50)
