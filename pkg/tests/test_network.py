"""Network validation, poset correspondence, and chain enumeration."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cpmax import (
    ChainCapExceeded,
    CycleDetected,
    DuplicateArc,
    IndexOutOfRange,
    NegativeCost,
    Poset,
    SelfLoop,
    ShortCut,
    linear_extension,
    maximal_chains,
    network_from_json,
    network_to_dot,
    network_to_json,
    normalize_shortcuts,
    to_hasse,
    to_poset,
    validate_network,
)
from cpmax.serialize import loads, dumps

from gen import rand_dag_arcs
from oracles import brute_closure, brute_reduction

FIG2_ARCS = [(1, 3), (1, 4), (2, 3), (2, 5), (3, 6), (4, 6), (4, 5)]
FIG2_CHAINS = [
    {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 6}, {2, 5},
]


class TestValidateNetwork:
    def test_two_activity_chain(self):
        net = validate_network([(1, 2)], [1, 1])
        assert net.n == 2
        assert net.covers == frozenset({(1, 2)})

    def test_smallest_cycle(self):
        with pytest.raises(CycleDetected) as err:
            validate_network([(1, 2), (2, 1)], [1, 1])
        assert set(err.value.cycle) == {1, 2}

    def test_shortcut_rejected_with_witness(self):
        with pytest.raises(ShortCut) as err:
            validate_network([(1, 2), (2, 3), (1, 3)], [1, 1, 1])
        assert err.value.arc == (1, 3)
        assert err.value.path == [1, 2, 3]

    def test_shortcut_normalized_on_request(self):
        net = validate_network([(1, 2), (2, 3), (1, 3)], [1, 1, 1],
                               normalize=True)
        assert net.covers == frozenset({(1, 2), (2, 3)})

    def test_self_loop(self):
        with pytest.raises(SelfLoop):
            validate_network([(1, 1)], [1, 1])

    def test_duplicate_arc(self):
        with pytest.raises(DuplicateArc):
            validate_network([(1, 2), (1, 2)], [1, 1])

    def test_negative_cost(self):
        with pytest.raises(NegativeCost):
            validate_network([(1, 2)], [1, "-1/2"])

    def test_arc_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            validate_network([(1, 7)], [1, 1])

    def test_rational_costs_parsed_exactly(self):
        net = validate_network([], ["3/2", "1.5", 2])
        assert net.costs == (Fraction(3, 2), Fraction(3, 2), Fraction(2))


class TestNormalizeShortcuts:
    def test_textbook_reduction(self):
        assert normalize_shortcuts([(1, 2), (2, 3), (1, 3)]) == frozenset(
            {(1, 2), (2, 3)}
        )

    def test_already_reduced(self):
        assert normalize_shortcuts([(1, 2)]) == frozenset({(1, 2)})

    def test_larger_example_against_reachability_oracle(self):
        arcs = [(1, 3), (1, 4), (2, 3), (2, 5), (3, 6), (4, 6), (4, 5), (1, 6)]
        reduced = normalize_shortcuts(arcs, 6)
        assert reduced == frozenset(set(arcs) - {(1, 6)})
        # Reachability must be unchanged.
        assert brute_closure(reduced, 6) == brute_closure(arcs, 6)

    def test_cycle_detected(self):
        with pytest.raises(CycleDetected):
            normalize_shortcuts([(1, 2), (2, 3), (3, 1)])


class TestPosetCorrespondence:
    def test_chain_closure(self):
        net = validate_network([(1, 2), (2, 3)], [1, 1, 1])
        poset = to_poset(net)
        assert poset.relation == frozenset({(1, 2), (2, 3), (1, 3)})

    def test_antichain_closure(self):
        net = validate_network([], [1, 1, 1])
        assert to_poset(net).relation == frozenset()

    def test_figure_network_transitive_pair(self):
        net = validate_network(FIG2_ARCS, [1] * 6)
        poset = to_poset(net)
        assert poset.less(1, 5)  # via 1 < 4 < 5
        assert poset.less(1, 4) and poset.less(4, 5)

    def test_hasse_of_total_order(self):
        poset = Poset(3, frozenset({(1, 2), (2, 3), (1, 3)}))
        assert to_hasse(poset) == frozenset({(1, 2), (2, 3)})

    def test_hasse_of_antichain(self):
        assert to_hasse(Poset(3, frozenset())) == frozenset()

    def test_roundtrip_on_random_dags(self):
        rng = random.Random(42)
        for _ in range(100):
            n = rng.randint(1, 8)
            arcs = rand_dag_arcs(rng, n)
            covers = normalize_shortcuts(arcs, n)
            net = validate_network(covers, [1] * n)
            poset = to_poset(net)
            # Against the independent closure/reduction oracle.
            assert poset.relation == frozenset(brute_closure(arcs, n))
            assert to_hasse(poset) == net.covers
            assert frozenset(brute_reduction(brute_closure(arcs, n))) == net.covers
            assert to_poset(
                validate_network(to_hasse(poset), [1] * n)
            ).relation == poset.relation

    @given(st.integers(2, 7), st.data())
    @settings(max_examples=60, deadline=None, derandomize=True)
    def test_roundtrip_property(self, n, data):
        pair_pool = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)
                     if i != j]
        arcs = data.draw(st.lists(st.sampled_from(pair_pool), max_size=12))
        try:
            covers = normalize_shortcuts(set(arcs), n)
        except CycleDetected:
            return
        net = validate_network(covers, [1] * n)
        assert to_hasse(to_poset(net)) == net.covers


class TestLinearExtension:
    def test_two_below_one_top(self):
        poset = Poset(3, frozenset({(1, 3), (2, 3)}))
        assert linear_extension(poset) == [1, 2, 3]

    def test_antichain_identity(self):
        assert linear_extension(Poset(3, frozenset())) == [1, 2, 3]

    def test_reversed_chain(self):
        poset = Poset(3, frozenset({(3, 2), (2, 1), (3, 1)}))
        assert linear_extension(poset) == [3, 2, 1]

    def test_monotone_on_random_posets(self):
        rng = random.Random(7)
        for _ in range(60):
            n = rng.randint(1, 8)
            covers = normalize_shortcuts(rand_dag_arcs(rng, n), n)
            poset = to_poset(validate_network(covers, [1] * n))
            sigma = linear_extension(poset)
            assert sorted(sigma) == list(range(1, n + 1))
            for i, j in poset.relation:
                assert sigma[i - 1] < sigma[j - 1]


class TestMaximalChains:
    def test_single_chain(self):
        net = validate_network([(1, 2), (2, 3)], [1, 1, 1])
        assert [sorted(c) for c in maximal_chains(net)] == [[1, 2, 3]]

    def test_antichain(self):
        net = validate_network([], [1, 1, 1])
        assert [sorted(c) for c in maximal_chains(net)] == [[1], [2], [3]]

    def test_figure_network(self):
        net = validate_network(FIG2_ARCS, [1] * 6)
        assert [set(c) for c in maximal_chains(net)] == FIG2_CHAINS

    def test_chains_form_antichain_and_are_maximal(self):
        rng = random.Random(11)
        for _ in range(60):
            n = rng.randint(1, 7)
            covers = normalize_shortcuts(rand_dag_arcs(rng, n), n)
            net = validate_network(covers, [1] * n)
            chains = maximal_chains(net)
            poset = to_poset(net)
            for a in chains:
                for b in chains:
                    assert not (a < b)
                # Totally ordered and non-extendable.
                for i in a:
                    for j in a:
                        assert i == j or poset.less(i, j) or poset.less(j, i)
                for x in range(1, n + 1):
                    if x not in a:
                        assert any(
                            not poset.less(x, i) and not poset.less(i, x)
                            for i in a
                        )

    def test_cap(self):
        # Twelve parallel activities give twelve chains, over a cap of 5.
        net = validate_network([], [1] * 12)
        with pytest.raises(ChainCapExceeded):
            maximal_chains(net, cap=5)


class TestSerialization:
    def test_json_roundtrip_with_names(self):
        net = validate_network(FIG2_ARCS, ["1", "2", "3/2", "0.5", "1", "2"],
                               names=list("abcdef"))
        obj = network_to_json(net)
        again = network_from_json(loads(dumps(obj)))
        assert again == net
        assert obj["activities"][2]["cost"] == "3/2"
        assert obj["activities"][3]["cost"] == "1/2"

    def test_dot_contains_costs_and_arcs(self):
        net = validate_network([(1, 2)], ["3/2", 1], names=["dig", "pour"])
        dot = network_to_dot(net)
        assert "dig (3/2)" in dot
        assert "1 -> 2;" in dot

    def test_bad_ids_rejected(self):
        from cpmax import BadParameters

        with pytest.raises(BadParameters):
            network_from_json({
                "activities": [{"id": 2, "cost": "1"}],
                "arcs": [],
            })
