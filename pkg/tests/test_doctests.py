import doctest

import derangetree.cycles
import derangetree.trees


def test_trees_doctests():
    failures, _ = doctest.testmod(derangetree.trees)
    assert failures == 0


def test_cycles_doctests():
    failures, _ = doctest.testmod(derangetree.cycles)
    assert failures == 0
