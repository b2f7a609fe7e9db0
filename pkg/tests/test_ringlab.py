import itertools

import pytest

from posemiring import constructions as cons
from posemiring import ringlab
from posemiring.core import (
    DomainError,
    StructureError,
    analyze_elements,
    check_conditions,
    find_isomorphism,
    verify_axioms,
)


def brute_force_ring_ideals(R):
    found = set()
    elems = list(R.elements())
    for r in range(1, len(elems) + 1):
        for subset in itertools.combinations(elems, r):
            s = set(subset)
            if 0 not in s:
                continue
            if any(R.add[i][j] not in s for i in s for j in s):
                continue
            if any(R.mul[i][a] not in s for i in s for a in elems):
                continue
            found.add(frozenset(s))
    return found


class TestRingConstruction:
    def test_zn_basics(self):
        R = ringlab.ring_zn(6)
        assert R.order == 6 and R.one == 1
        assert R.mul[2][3] == 0

    def test_zn_caps(self):
        with pytest.raises(DomainError):
            ringlab.ring_zn(1)
        with pytest.raises(DomainError):
            ringlab.ring_zn(513)

    def test_quadratic_field(self):
        # x^2 + x + 1 is irreducible over Z_2: this is the field F_4
        R = ringlab.ring_quadratic(2, 1, 1)
        nonzero = [x for x in R.elements() if x != 0]
        assert all(any(R.mul[x][y] == R.one for y in nonzero) for x in nonzero)

    def test_quadratic_nilpotent(self):
        # Z_2[x]/(x^2): x is nilpotent
        R = ringlab.ring_quadratic(2, 0, 0)
        x = 1
        assert R.names[x] == "x"
        assert R.mul[x][x] == 0

    def test_quadratic_rejects_nonprime(self):
        with pytest.raises(DomainError):
            ringlab.ring_quadratic(4, 0, 0)
        with pytest.raises(DomainError):
            ringlab.ring_quadratic(17, 0, 0)

    def test_product(self):
        R = ringlab.ring_product(ringlab.ring_zn(2), ringlab.ring_zn(3))
        assert R.order == 6
        # Z_2 x Z_3 is isomorphic to Z_6: same number of ideals
        assert len(ringlab.enumerate_ring_ideals(R)) == \
            len(ringlab.enumerate_ring_ideals(ringlab.ring_zn(6)))

    def test_make_ring_grammar(self):
        assert ringlab.make_ring("zn:4").order == 4
        assert ringlab.make_ring("zpx:3:0:1").order == 9
        assert ringlab.make_ring("prod(zn:2,zn:2)").order == 4
        with pytest.raises(StructureError):
            ringlab.make_ring("zq:4")
        with pytest.raises(StructureError):
            ringlab.make_ring("zn:x")

    def test_file_round_trip(self):
        R = ringlab.ring_zn(6)
        S = ringlab.parse_ring_file(ringlab.ring_to_text(R))
        assert S.add == R.add and S.mul == R.mul and S.one == R.one

    def test_file_rejects_invalid_ring(self):
        R = ringlab.ring_zn(4)
        text = ringlab.ring_to_text(R).replace("one 1", "one 2")
        with pytest.raises(StructureError):
            ringlab.parse_ring_file(text)


class TestIdeals:
    @pytest.mark.parametrize("spec", ["zn:8", "zn:12", "zpx:2:0:0",
                                      "prod(zn:2,zn:4)"])
    def test_enumeration_matches_subset_oracle(self, spec):
        R = ringlab.make_ring(spec)
        fast = {i.members for i in ringlab.enumerate_ring_ideals(R)}
        assert fast == brute_force_ring_ideals(R)

    def test_z12_ideal_lattice(self):
        R = ringlab.ring_zn(12)
        ideals = ringlab.enumerate_ring_ideals(R)
        assert len(ideals) == 6
        names = [ringlab.ideal_name(R, i) for i in ideals]
        assert names[0] == "(0)"
        assert names[-1] == "(1)"
        sizes = [len(i.members) for i in ideals]
        assert sizes == [1, 2, 3, 4, 6, 12]

    def test_ideal_ordering_zero_first_ring_last(self):
        for spec in ("zn:9", "zn:16", "zpx:3:0:0"):
            R = ringlab.make_ring(spec)
            ideals = ringlab.enumerate_ring_ideals(R)
            assert ideals[0].members == frozenset({0})
            assert ideals[-1].members == frozenset(R.elements())


class TestIdealSemiring:
    def test_z4_is_nilpotent_chain(self):
        table, ideals = ringlab.ideal_semiring(ringlab.ring_zn(4))
        assert table.order == 3
        chain = cons.adjoin_z1(cons.trivial())
        assert find_isomorphism(table, chain) is not None

    def test_field_gives_trivial(self):
        table, _ = ringlab.ideal_semiring(ringlab.ring_zn(7))
        assert table.order == 2

    def test_product_of_fields_gives_boolean_square(self):
        table, _ = ringlab.ideal_semiring(ringlab.ring_zn(6))
        assert find_isomorphism(table, cons.boolean_power(2)) is not None

    def test_always_valid_posemiring(self):
        for spec in ("zn:12", "zn:16", "zpx:2:1:0", "prod(zn:4,zn:2)"):
            table, _ = ringlab.ideal_semiring(ringlab.make_ring(spec))
            assert verify_axioms(table).valid

    def test_c3_and_c1_hold(self):
        for spec in ("zn:12", "zn:30", "zpx:5:0:0"):
            table, _ = ringlab.ideal_semiring(ringlab.make_ring(spec))
            cond = check_conditions(table)
            assert cond.c1 and cond.c2 and cond.c3


class TestGraphs:
    @pytest.mark.parametrize("spec,expected", [
        ("zn:6", ("complete", (2,))),
        ("zn:8", ("complete", (2,))),
        ("zn:27", ("complete", (2,))),
        ("zn:12", ("two-star", (1, 1))),
        ("zn:7", ("empty", ())),
        ("zpx:2:0:0", ("single-vertex", ())),
    ])
    def test_annihilating_ideal_graph_shapes(self, spec, expected):
        R = ringlab.make_ring(spec)
        _, shape, _ = ringlab.annihilating_ideal_graph(R)
        assert (shape.tag, shape.params) == expected

    def test_zero_divisor_graph_z2xz4(self):
        R = ringlab.make_ring("prod(zn:2,zn:4)")
        _, shape = ringlab.ring_zdgraph(R)
        assert (shape.tag, shape.params) == ("two-star", (1, 2))

    def test_zero_divisor_graph_z2x_z2x_mod_xsq(self):
        # Z_2 x Z_2[x]/(x^2) has the same graph as Z_2 x Z_4
        R = ringlab.make_ring("prod(zn:2,zpx:2:0:0)")
        _, shape = ringlab.ring_zdgraph(R)
        assert (shape.tag, shape.params) == ("two-star", (1, 2))

    def test_zero_divisor_graph_z2_mod_xsq_alone(self):
        _, shape = ringlab.ring_zdgraph(ringlab.make_ring("zpx:2:0:0"))
        assert shape.tag == "single-vertex"

    def test_zero_divisor_graph_z9(self):
        _, shape = ringlab.ring_zdgraph(ringlab.ring_zn(9))
        assert (shape.tag, shape.params) == ("complete", (2,))


class TestRadicals:
    def test_z12(self):
        R = ringlab.ring_zn(12)
        rad = ringlab.radicals(R)
        assert rad.nilradical.members == frozenset({0, 6})
        assert rad.jacobson.members == frozenset({0, 6})
        assert rad.idempotents == frozenset({0, 1, 4, 9})

    def test_maximal_ideals_z12(self):
        R = ringlab.ring_zn(12)
        maxes = {m.members for m in ringlab.maximal_ideals(R)}
        assert maxes == {frozenset({0, 2, 4, 6, 8, 10}),
                         frozenset({0, 3, 6, 9})}

    def test_local(self):
        assert ringlab.is_local(ringlab.ring_zn(8))
        assert ringlab.is_local(ringlab.ring_zn(9))
        assert not ringlab.is_local(ringlab.ring_zn(6))

    def test_jacobson_equals_nilradical_on_finite_rings(self):
        for spec in ("zn:8", "zn:12", "zn:30", "zpx:3:0:0", "zpx:2:1:1"):
            rad = ringlab.radicals(ringlab.make_ring(spec))
            assert rad.nilradical.members == rad.jacobson.members

    def test_nilpotents_nilpotency(self):
        R = ringlab.ring_zn(8)
        assert ringlab.nilpotents(R) == frozenset({0, 2, 4, 6})


class TestElementAnalysisOnIdealSemiring:
    def test_z12_structure(self):
        R = ringlab.ring_zn(12)
        table, ideals = ringlab.ideal_semiring(R)
        members = [i.members for i in ideals]
        six = members.index(frozenset({0, 6}))
        ana = analyze_elements(table)
        assert ana.nilpotency == {six: 2}
        # (6) is the annihilator-graph center: adjacent to everything nontrivial
        graph, shape, _ = ringlab.annihilating_ideal_graph(R)
        assert shape.tag == "two-star"
