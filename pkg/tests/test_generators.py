from fractions import Fraction

import pytest

from bindlab import generators as gen
from bindlab.graph import GraphError


def test_complete_and_cycle():
    K4 = gen.complete(4)
    assert K4.m == 6 and set(K4.degrees()) == {3}
    C5 = gen.cycle(5)
    assert C5.m == 5 and set(C5.degrees()) == {2}


def test_wheel_is_join_of_k1_and_cycle():
    W = gen.join(gen.complete(1), gen.cycle(4))
    assert W.n == 5 and W.m == 8
    assert W.degree(0) == 4
    assert W.degrees()[1:] == [3, 3, 3, 3]
    assert W == gen.wheel(4)


def test_bipartite_split_multipartite():
    assert gen.complete_bipartite(2, 3).m == 6
    assert gen.star(3).degrees() == [3, 1, 1, 1]
    S = gen.complete_split(3, 2)
    assert S.m == 3 + 6
    assert gen.complete_multipartite(2, 2, 2).m == 12
    assert gen.complete_multipartite(1, 1, 1, 1) == gen.complete(4)


def test_gnp_reproducible_and_extreme_probabilities():
    a = gen.random_gnp(12, Fraction(1, 2), 7)
    b = gen.random_gnp(12, "1/2", 7)
    assert a == b
    assert gen.random_gnp(12, Fraction(1, 2), 8) != a
    assert gen.random_gnp(9, 0, 3).m == 0
    assert gen.random_gnp(9, 1, 3) == gen.complete(9)


def test_gnp_frozen_output():
    # pins the PCG64 raw stream and the lexicographic pair order
    assert gen.random_gnp(8, Fraction(1, 2), 0).to_graph6() == "GTcqg_"


def test_gnp_rejects_bad_input():
    with pytest.raises(GraphError):
        gen.random_gnp(5, Fraction(3, 2), 0)
    with pytest.raises(GraphError):
        gen.random_gnp(5, Fraction(1, 2), -1)
