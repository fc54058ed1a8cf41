import pytest

from afsem import fixtures as fx
from afsem.framework import build_framework
from afsem.generators import (
    builtin_generator,
    high_ordinal_probe_set,
    truncate,
    truncation_study,
)
from afsem.scc_semantics import component_trace, enumerate_semantics


class TestFamilies:
    def test_bs_ladder_decoding(self):
        g = builtin_generator("bs_ladder")
        assert [g.decode(i) for i in range(4)] == ["a1", "b1", "a2", "b2"]
        assert set(g.attackers_of("a1")) == {"a2", "b1"}
        assert g.attackers_of("b1") == ()
        assert g.universe_hint == "countably infinite"
        assert g.finitary

    def test_omega_chain_stores_attacks_forward(self):
        g = builtin_generator("omega_chain")
        assert not g.finitary
        assert g.attackers_of("a3") == ()
        assert g.victims_of("a3") == ("a0", "a1", "a2")

    def test_omega_chain_xy_split_storage(self):
        g = builtin_generator("omega_chain_xy")
        assert [g.decode(i) for i in range(3)] == ["x", "y", "a0"]
        assert g.attackers_of("a5") == ("x",)
        assert g.attackers_of("x") == ("y",)
        assert g.victims_of("a2") == ("a0", "a1")

    def test_tree_scc_cross_attack_convention(self):
        g = builtin_generator("tree_scc", {"strings": ("", "0", "1", "10")})
        assert "a0_10" in g.attackers_of("a2_0")
        assert g.attackers_of("a1_e") == ("b1_e", "c1_e")

    def test_tree_scc_validation(self):
        with pytest.raises(ValueError):
            builtin_generator("tree_scc", {"strings": ("", "10")})
        with pytest.raises(ValueError):
            builtin_generator("tree_scc", {"strings": ("", "x")})
        with pytest.raises(ValueError):
            builtin_generator("tree_scc", {})

    def test_tree_scc_cli_string_param(self):
        g = builtin_generator("tree_scc", {"strings": "eps+0+1+10"})
        assert g.params["strings"] == ("", "0", "1", "10")

    def test_high_ordinal_params(self):
        g = builtin_generator("high_ordinal", {"levels": 1, "width": 2})
        assert g.size == 2 * (2 * 3 + 3 * 2)
        with pytest.raises(ValueError):
            builtin_generator("high_ordinal", {"levels": -1})

    def test_unknown_family_and_params(self):
        with pytest.raises(ValueError):
            builtin_generator("nope")
        with pytest.raises(ValueError):
            builtin_generator("bs_ladder", {"stray": 1})

    def test_degenerate_fixtures(self):
        g = builtin_generator("pt")
        assert truncate(g, g.size) == fx.pt()
        assert builtin_generator("sk_f").size == 3


class TestTruncate:
    def test_bs_ladder_8_is_l4(self):
        assert truncate(builtin_generator("bs_ladder"), 8) == fx.l4()

    def test_zero_is_empty(self):
        f = truncate(builtin_generator("bs_ladder"), 0)
        assert f.n == 0

    def test_omega_chain_5_is_ch5(self):
        got = truncate(builtin_generator("omega_chain"), 5)
        want = fx.chain(5)
        assert got.labels == want.labels
        assert got.attacks == want.attacks

    def test_omega_chain_xy_8(self):
        f = truncate(builtin_generator("omega_chain_xy"), 8)
        assert f.labels == ("x", "y", "a0", "a1", "a2", "a3", "a4", "a5")
        assert f.has_attack(f.index_of("x"), f.index_of("a5"))
        assert f.has_attack(f.index_of("y"), f.index_of("x"))

    def test_monotone_in_size(self):
        g = builtin_generator("bs_ladder")
        small, big = truncate(g, 6), truncate(g, 10)
        pairs = lambda f: {  # noqa: E731
            (f.labels[a], f.labels[b]) for a, b in f.attacks
        }
        assert set(small.labels) <= set(big.labels)
        assert pairs(small) <= pairs(big)

    def test_finitary_audit(self):
        for name, params in (
            ("bs_ladder", None),
            ("tree_scc", {"strings": ("", "0", "1", "10")}),
            ("high_ordinal", {"levels": 1, "width": 3}),
        ):
            g = builtin_generator(name, params)
            f = truncate(g, 20 if g.size is None else min(20, g.size))
            for idx, lab in enumerate(f.labels):
                induced = bin(f.attacker_masks[idx]).count("1")
                assert induced <= len(g.attackers_of(lab))

    def test_tree_scc_keeps_component_cycles(self):
        g = builtin_generator("tree_scc", {"strings": ("", "0", "1", "10")})
        f = truncate(g, 36)
        for sig in ("e", "0", "1", "10"):
            cyc = [
                (f"a1_{sig}", f"c2_{sig}"),
                (f"c2_{sig}", f"a2_{sig}"),
                (f"a2_{sig}", f"b1_{sig}"),
                (f"b1_{sig}", f"a1_{sig}"),
            ]
            for u, v in cyc:
                assert f.has_attack(f.index_of(u), f.index_of(v))


class TestHighOrdinal:
    def test_comp_ordinal_weakly_increasing(self):
        g = builtin_generator("high_ordinal", {"levels": 2, "width": 3})
        wave = g.size // 3
        ordinals = []
        for n in (wave, 2 * wave, 3 * wave):
            f = truncate(g, n)
            s = high_ordinal_probe_set(f)
            tr = component_trace(f, s, f.index_of("b0_w"))
            ordinals.append(tr.comp_ordinal)
        assert ordinals == sorted(ordinals)
        assert ordinals[0] < ordinals[-1]


class TestTruncationStudy:
    def test_bs_ladder_cf2_b1_stabilized(self):
        rep = truncation_study(
            builtin_generator("bs_ladder"), "cf2", [4, 8, 12, 16], ["b1"]
        )
        assert rep.tracked["b1"] == ("accepted",) * 4
        assert rep.stabilized["b1"]
        assert rep.extension_counts == (1, 1, 1, 1)

    def test_omega_chain_cf15_a0_not_stabilized(self):
        rep = truncation_study(
            builtin_generator("omega_chain"), "cf1.5", [3, 5, 8], ["a0"]
        )
        assert rep.tracked["a0"] == ("rejected",) * 3
        assert not rep.stabilized["a0"]

    def test_omega_chain_xy_cf15_x_stabilized(self):
        rep = truncation_study(
            builtin_generator("omega_chain_xy"), "cf1.5", [5, 8, 12], ["x"]
        )
        assert rep.tracked["x"] == ("accepted",) * 3
        assert rep.stabilized["x"]

    def test_absent_verdict(self):
        rep = truncation_study(
            builtin_generator("bs_ladder"), "naive", [2, 4], ["a3"]
        )
        assert rep.tracked["a3"] == ("absent", "absent")

    def test_gap_marks_when_level_exceeds_limit(self):
        rep = truncation_study(
            builtin_generator("bs_ladder"), "cf2", [4, 30], ["b1"], limit=24
        )
        assert rep.gaps == (30,)
        assert rep.tracked["b1"] == ("accepted", "gap")
        assert rep.extension_counts[1] is None
        assert not rep.stabilized["b1"]

    def test_k_controls_stabilization(self):
        rep = truncation_study(
            builtin_generator("bs_ladder"), "cf2", [4, 8], ["b1"], k=3
        )
        assert not rep.stabilized["b1"]
        rep = truncation_study(
            builtin_generator("bs_ladder"), "cf2", [4, 8], ["b1"], k=2
        )
        assert rep.stabilized["b1"]


def test_ladder_fixture_agrees_with_spec_figure():
    # Example 1: two strongly connected components, {b1} and the rest
    from afsem.scc import decompose

    f = fx.l4()
    comps = [frozenset(f.labels_of(c)) for c in decompose(f).components]
    assert comps[0] == frozenset({"b1"})
    assert comps[1] == frozenset({"a1", "a2", "a3", "a4", "b2", "b3", "b4"})


def test_l4_semantics_claims():
    f = fx.l4()
    assert set(
        frozenset(labs)
        for labs in enumerate_semantics(f, "cf2").label_sets()
    ) == {frozenset({"b1", "b2", "b3", "b4"})}
