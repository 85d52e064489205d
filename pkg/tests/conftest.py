"""Shared fixtures: the two small complexes used throughout the tests.

``worked_example`` is a quasi-tree on six vertices whose facet-complement
ideal, relation trees and Betti numbers are all known in closed form;
``near_miss`` looks similar but has no leaf order, which exercises every
negative branch.
"""

import pytest

from srideals import SimplicialComplex


@pytest.fixture
def worked_example() -> SimplicialComplex:
    return SimplicialComplex(6, [(1, 2, 3), (2, 3, 4), (3, 4, 5), (3, 4, 6)])


@pytest.fixture
def near_miss() -> SimplicialComplex:
    return SimplicialComplex(6, [(1, 2, 3), (3, 4, 5), (2, 4, 6)])
