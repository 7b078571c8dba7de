import itertools

import pytest

from dmx.core import DeltaMatroid, SetSystem, numbered_ground
from dmx.matroid import (
    Matroid,
    MatroidError,
    classify_delta,
    classify_matroid,
    is_bipartite_delta,
    is_eulerian_delta,
    lower_matroid,
    upper_matroid,
)


def matroid(labels, bases):
    return Matroid.from_bases(SetSystem.from_sets(labels, bases))


def uniform(n, r):
    g = numbered_ground(n)
    bases = tuple(
        sum(1 << i for i in combo) for combo in itertools.combinations(range(n), r)
    )
    return Matroid(g, bases)


def test_from_bases_validation():
    m = matroid("123", ["12", "13"])
    assert m.rank == 2
    assert m.bases == (0b011, 0b101)
    with pytest.raises(MatroidError):
        matroid("12", ["1", "12"])
    with pytest.raises(MatroidError):
        # {1,2} and {3,4} fail base exchange
        matroid("1234", ["12", "34"])


def test_independent_sets_and_count():
    m = uniform(3, 2)
    assert m.count_independent_sets() == 7  # everything except {1,2,3}
    assert 0 in m.independent_sets
    assert 0b111 not in m.independent_sets


def test_circuits_canonical_order():
    m = uniform(4, 2)
    assert m.circuits == (0b0111, 0b1011, 0b1101, 0b1110)
    # rank-0 matroid: every singleton is a circuit
    z = Matroid(numbered_ground(2), (0,))
    assert z.circuits == (0b01, 0b10)
    # free matroid has no circuits
    assert uniform(3, 3).circuits == ()


def test_dual_and_cocircuits():
    m = uniform(4, 1)
    d = m.dual()
    assert d.rank == 3
    assert d.dual() == m
    assert m.cocircuits() == d.circuits
    # matroid dual agrees with the twist by the full ground set
    assert set(d.family) == {0b1111 ^ b for b in m.bases}


def test_bipartite():
    assert uniform(4, 2).is_bipartite() is False  # 3-element circuits
    even = matroid("1234", ["12", "13", "14", "23", "24", "34"])
    assert even.circuits == (0b0111, 0b1011, 0b1101, 0b1110)
    assert not even.is_bipartite()
    cycle4 = matroid("1234", ["123", "124", "134", "234"])
    assert cycle4.circuits == (0b1111,)
    assert cycle4.is_bipartite()
    assert uniform(3, 3).is_bipartite()  # vacuous


def test_eulerian_partition():
    # U(2,0): {1},{2} partitions the ground set
    z = Matroid(numbered_ground(2), (0,))
    assert z.eulerian_partition() == (0b01, 0b10)
    assert z.is_eulerian()
    # free matroid on nonempty ground: no circuits, not Eulerian
    assert uniform(2, 2).eulerian_partition() is None
    # empty ground set: empty partition counts
    e = Matroid(numbered_ground(0), (0,))
    assert e.eulerian_partition() == ()
    assert e.is_eulerian()
    # U(4,2): circuits are the four triples, none partition {1,2,3,4}
    assert not uniform(4, 2).is_eulerian()
    # one 4-cycle: the single circuit covers everything
    cycle4 = matroid("1234", ["123", "124", "134", "234"])
    assert cycle4.eulerian_partition() == (0b1111,)


def test_classify_matroid():
    rep = classify_matroid(uniform(3, 2))  # single circuit {1,2,3}, odd
    assert not rep.bipartite and rep.odd_circuit_witness == 0b111
    rep2 = classify_matroid(matroid("1234", ["123", "124", "134", "234"]))
    assert rep2.bipartite and rep2.eulerian
    assert rep2.eulerian_partition == (0b1111,)
    assert rep2.odd_circuit_witness is None


def test_lower_upper_matroid():
    d = DeltaMatroid.from_sets("123", [(), "12", "23", "13", "123"])
    low = lower_matroid(d)
    assert low.bases == (0,)
    high = upper_matroid(d)
    assert high.bases == (0b111,)
    assert isinstance(low, Matroid) and isinstance(high, Matroid)


def test_delta_classification_uses_lower_matroid():
    d = DeltaMatroid.from_sets("12", [(), "12"])
    rep = classify_delta(d)
    assert not rep.bipartite
    assert rep.odd_circuit_witness == 0b01
    assert rep.eulerian
    assert rep.eulerian_partition == (0b01, 0b10)
    assert is_eulerian_delta(d) and not is_bipartite_delta(d)


def test_matroid_minors_stay_matroids():
    m = uniform(4, 2)
    assert isinstance(m.delete(0), Matroid)
    assert isinstance(m.contract(3), Matroid)
    assert m.minor(delete=0b0011).rank == 2
    assert m.minor(contract=0b0011).rank == 0
