import pytest

from dmx.core import (
    DeltaMatroid,
    GroundSet,
    ImproperSystemError,
    SetSystem,
    SymmetricExchangeError,
    exchange_violation,
    exchange_violation_masks,
    family_sort_key,
    loop_complement_checked,
    mask_of,
    numbered_ground,
    validate_delta_matroid,
)


def dm(labels, sets):
    return DeltaMatroid.from_sets(labels, sets)


def test_ground_set_basics():
    g = numbered_ground(3)
    assert g.labels == ("1", "2", "3")
    assert g.size == 3
    assert g.full_mask == 0b111
    assert g.index("2") == 1
    assert g.mask(["1", "3"]) == 0b101
    assert g.labels_of(0b110) == ("2", "3")
    with pytest.raises(KeyError):
        g.index("x")
    with pytest.raises(ValueError):
        GroundSet(("a", "a"))


def test_family_canonicalization():
    s = SetSystem(numbered_ground(2), (0b11, 0b01, 0b11, 0b00))
    assert s.family == (0b00, 0b01, 0b11)
    assert family_sort_key(0b10) < family_sort_key(0b11)
    # cardinality dominates, then index order
    assert sorted([0b11, 0b100, 0b1], key=family_sort_key) == [0b1, 0b100, 0b11]


def test_out_of_range_mask_rejected():
    with pytest.raises(ValueError):
        SetSystem(numbered_ground(1), (0b10,))


def test_equality_ignores_concrete_class():
    s = SetSystem(numbered_ground(2), (0b01, 0b10))
    d = DeltaMatroid(numbered_ground(2), (0b01, 0b10))
    assert s == d
    assert hash(s) == hash(d)
    assert s != SetSystem(GroundSet(("a", "b")), (0b01, 0b10))


def test_render_and_labeled_family():
    d = dm("abc", ["ab", "ac"])
    assert d.render_set(0b011) == "{a,b}"
    assert d.render_set(0) == "{}"
    assert d.labeled_family() == {frozenset("ab"), frozenset("ac")}


def test_exchange_axiom_validation():
    good = SetSystem.from_sets("12", [(), "12"])
    assert exchange_violation(good) is None
    assert isinstance(validate_delta_matroid(good), DeltaMatroid)

    bad = SetSystem.from_sets("123", [(), "123"])
    witness = exchange_violation(bad)
    assert witness == (0b000, 0b111, 0)
    with pytest.raises(SymmetricExchangeError) as exc_info:
        validate_delta_matroid(bad)
    assert exc_info.value.witness == (0b000, 0b111, 0)
    assert "u=1" in str(exc_info.value)


def test_exchange_allows_u_equals_v():
    # {}, {1}: u = v = 1 satisfies the triple
    assert exchange_violation_masks((0b0, 0b1)) is None


def test_empty_family_rejected():
    with pytest.raises(ImproperSystemError):
        validate_delta_matroid(SetSystem(numbered_ground(1), ()))
    with pytest.raises(ImproperSystemError):
        DeltaMatroid(numbered_ground(1), ())


def test_parity():
    assert dm("12", [(), "12"]).parity() == "even"
    assert dm("12", [(), "1"]).parity() == "odd"
    with pytest.raises(ImproperSystemError):
        SetSystem(numbered_ground(1), ()).parity()


def test_loop_and_coloop():
    d = dm("12", ["1", "12"])
    assert d.is_coloop(0)
    assert not d.is_loop(0)
    assert not d.is_coloop(1)
    d2 = dm("12", [(), "2"])
    assert d2.is_loop(0)


def test_twist_and_dual():
    d = dm("12", ["1", "2"])
    t = d.twist(0b01)
    assert t.family == (0b00, 0b11)
    assert isinstance(t, DeltaMatroid)
    assert d.dual() == d.twist(0b11)
    assert d.dual().dual() == d
    with pytest.raises(ValueError):
        d.twist(0b100)


def test_twist_group_law_exhaustive_n3():
    d = dm("123", [(), "12", "23", "13", "123"])
    for a in range(8):
        for b in range(8):
            assert d.twist(a).twist(b) == d.twist(a ^ b)


def test_loop_complement_definition():
    # D + e toggles F u {e} for each F without e
    d = dm("1", [()])
    assert d.loop_complement(0b1).family == (0b0, 0b1)
    d2 = dm("1", [(), "1"])
    assert d2.loop_complement(0b1).family == (0b0,)
    # single-element loop complement is an involution
    assert d2.loop_complement(0b1).loop_complement(0b1) == d2


def test_loop_complement_can_break_exchange():
    d = dm("123", [(), "12", "13", "23", "123"])
    res = loop_complement_checked(d, 0b111)
    assert res.is_delta_matroid == (exchange_violation(res.system) is None)
    if not res.is_delta_matroid:
        with pytest.raises(SymmetricExchangeError):
            res.delta_matroid()


def test_delete_contract_conventions():
    d = dm("12", [(), "12"])
    # element 1 is neither loop nor coloop
    assert d.delete(0).family == (0b0,)
    assert d.contract(0).family == (0b1,)
    # coloop: delete routes to contract
    c = dm("12", ["1", "12"])
    assert c.delete(0) == c.contract(0)
    # loop: contract routes to delete
    l = dm("12", [(), "2"])
    assert l.contract(0) == l.delete(0)


def test_minor_order_independent():
    d = dm("1234", [(), "12", "34", "1234"])
    m1 = d.minor(delete=0b0011, contract=0b1100)
    m2 = d.minor(contract=0b1100).minor(delete=0b0011)
    assert m1.ground.labels == ()
    assert m1 == m2
    with pytest.raises(ValueError):
        d.minor(delete=0b1, contract=0b1)


def test_twist_minor_exchange_identities():
    d = dm("123", [(), "12", "23", "13", "123"])
    for e in range(3):
        bit = 1 << e
        assert d.contract(e) == d.twist(bit).delete(e)
        assert d.delete(e) == d.twist(bit).contract(e)
    for x in range(8):
        assert d.minor(delete=x) == d.dual().minor(contract=x).dual()


def test_restrict():
    d = dm("123", [(), "12", "23", "13", "123"])
    r = d.restrict(0b011)
    assert r.ground.labels == ("1", "2")
    assert r.family == (0b00, 0b11)


def test_direct_sum():
    a = dm("12", ["1", "2"])
    b = dm("ab", [(), "ab"])
    s = a.direct_sum(b)
    assert s.ground.labels == ("1", "2", "a", "b")
    assert s.labeled_family() == {
        frozenset("1"), frozenset("2"),
        frozenset("1ab"), frozenset("2ab"),
    }
    assert isinstance(s, DeltaMatroid)
    with pytest.raises(ValueError):
        a.direct_sum(dm("13", ["1"]))


def test_isomorphism():
    a = dm("12", ["1"])
    b = dm("xy", ["y"])
    assert a.isomorphism(b) == {"1": "y", "2": "x"}
    assert a.isomorphism(dm("xy", [(), "xy"])) is None


def test_mask_of_roundtrip():
    assert mask_of([0, 2]) == 0b101
