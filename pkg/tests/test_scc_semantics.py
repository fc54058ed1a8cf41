import pytest
from hypothesis import given, settings

from afsem import fixtures as fx
from afsem.errors import FrameworkError
from afsem.framework import build_framework, mask_of, bits_of
from afsem.scc import scc_masks
from afsem.scc_semantics import (
    component_trace,
    delta_lfp,
    delta_step,
    enumerate_semantics,
    is_cf2,
    is_cf15,
    is_icf2,
    is_istg2,
    is_stg2,
    is_stg15,
    reachable_mod,
    separation,
)
from afsem.semantics import enumerate_naive, grounded
from strategies import frameworks
from conftest import SCC_SEMANTICS


def members(es):
    return set(frozenset(labs) for labs in es.label_sets())


class TestCf2Stg2:
    def test_pt_caption(self):
        f = fx.pt()
        assert is_cf2(f, f.indices_of(["a", "b1", "b3"]))
        assert not is_cf2(f, f.indices_of(["a", "b2"]))

    def test_l4_unique_extension(self):
        f = fx.l4()
        b = f.indices_of(["b1", "b2", "b3", "b4"])
        assert is_cf2(f, b) and is_stg2(f, b)

    def test_t3_singleton(self):
        f = fx.t3()
        assert is_cf2(f, f.indices_of("a"))
        assert is_stg2(f, f.indices_of("a"))


class TestReachableMod:
    def test_full_cycle(self):
        f = fx.t3()
        assert reachable_mod(f, f.indices_of("abc"), 0, 2)

    def test_path_needs_middle(self):
        f = fx.t3()
        assert not reachable_mod(f, f.indices_of("ac"), 0, 2)

    def test_reflexive_inside(self):
        f = fx.t3()
        assert reachable_mod(f, f.indices_of("a"), 0, 0)

    def test_endpoint_outside(self):
        f = fx.t3()
        assert not reachable_mod(f, f.indices_of("bc"), 0, 2)


class TestDelta:
    def test_t3_empty_fixed_point(self):
        tr = delta_lfp(fx.t3(), {0})
        assert tr.fixed_point == frozenset()
        assert tr.steps == 0

    def test_l4_erodes_the_a_column(self):
        f = fx.l4()
        tr = delta_lfp(f, f.indices_of(["b1", "b2", "b3", "b4"]))
        stages = [frozenset(f.labels_of(s)) for s in tr.stages]
        assert stages == [
            frozenset(),
            frozenset({"a1"}),
            frozenset({"a1", "a2"}),
            frozenset({"a1", "a2", "a3"}),
            frozenset({"a1", "a2", "a3", "a4"}),
        ]
        assert tr.steps == 4
        assert frozenset(f.labels_of(tr.fixed_point)) == frozenset(
            {"a1", "a2", "a3", "a4"}
        )

    def test_empty_candidate(self):
        tr = delta_lfp(fx.pt(), frozenset())
        assert tr.fixed_point == frozenset()

    def test_requires_conflict_free(self):
        f = fx.t3()
        with pytest.raises(FrameworkError):
            delta_lfp(f, f.indices_of("ab"))

    def test_stages_strictly_increase(self):
        f = fx.l4()
        tr = delta_lfp(f, f.indices_of(["b1", "b2", "b3", "b4"]))
        for earlier, later in zip(tr.stages, tr.stages[1:]):
            assert earlier < later


class TestSeparation:
    def test_t3_unchanged(self):
        assert separation(fx.t3()) == fx.t3()

    def test_edge_framework_isolated(self):
        f = build_framework("ab", [("a", "b")])
        assert separation(f).attacks == frozenset()

    def test_l4_drops_only_the_bridge(self):
        f = fx.l4()
        sep = separation(f)
        dropped = f.attacks - sep.attacks
        assert dropped == {(f.index_of("b1"), f.index_of("a1"))}


class TestTransfinite:
    def test_pt_agrees_with_cf2(self):
        f = fx.pt()
        assert is_icf2(f, f.indices_of(["a", "b1", "b3"]))

    def test_not_conflict_free(self):
        f = fx.t3()
        assert not is_icf2(f, f.indices_of("ab"))

    def test_l4_cf15_witness_rejected(self):
        f = fx.l4()
        assert not is_icf2(f, f.indices_of(["b1", "a2", "a4"]))


class TestComponentTrace:
    def test_t3_stabilizes_immediately(self):
        f = fx.t3()
        tr = component_trace(f, f.indices_of("a"), f.index_of("b"))
        assert [frozenset(f.labels_of(s)) for s in tr.stages] == [
            frozenset("abc")
        ]
        assert tr.comp_ordinal == 0 and tr.survived

    def test_l4_a1_removed_at_step_one(self):
        f = fx.l4()
        tr = component_trace(
            f, f.indices_of(["b1", "b2", "b3", "b4"]), f.index_of("a1")
        )
        assert not tr.survived
        assert tr.comp_ordinal == 1
        assert tr.stages[-1] == frozenset()

    def test_empty_candidate_freezes_component(self):
        f = fx.l4()
        tr = component_trace(f, frozenset(), f.index_of("a2"))
        assert tr.comp_ordinal == 0 and tr.survived
        assert tr.stages[0] == frozenset(
            f.indices_of(["a1", "a2", "a3", "a4", "b2", "b3", "b4"])
        )

    def test_stages_weakly_decrease(self):
        f = fx.l4()
        tr = component_trace(
            f, f.indices_of(["b1", "b2", "b3", "b4"]), f.index_of("a3")
        )
        for earlier, later in zip(tr.stages, tr.stages[1:]):
            assert later <= earlier


class TestPrioritized:
    def test_pt_caption(self):
        f = fx.pt()
        s = f.indices_of(["a", "b2"])
        assert is_cf15(f, s)
        assert not is_stg15(f, s)

    def test_l4_claims(self):
        f = fx.l4()
        assert is_cf15(f, f.indices_of(["b1", "a2", "a4"]))

    def test_wr_claims(self):
        f = fx.wr()
        s = f.indices_of(["a", "b2"])
        assert is_cf15(f, s) and is_stg15(f, s)


class TestEnumerate:
    def test_pt_cf2(self):
        assert members(enumerate_semantics(fx.pt(), "cf2")) == {
            frozenset({"a", "b1", "b3"})
        }

    def test_pt_cf15(self):
        assert members(enumerate_semantics(fx.pt(), "cf1.5")) == {
            frozenset({"a", "b1", "b3"}), frozenset({"a", "b2"}),
        }

    def test_ch5_cf15(self):
        assert members(enumerate_semantics(fx.chain(5), "cf1.5")) == {
            frozenset({"a4"})
        }

    def test_unknown_semantics(self):
        with pytest.raises(ValueError):
            enumerate_semantics(fx.t3(), "stable")

    def test_empty_framework_all_semantics(self):
        f = build_framework([], [])
        from afsem.scc_semantics import ALL_SEMANTICS

        for sem in ALL_SEMANTICS:
            assert members(enumerate_semantics(f, sem)) == {frozenset()}


@given(frameworks(max_args=6))
@settings(max_examples=60)
def test_finite_agreement_of_recursive_and_transfinite(f):
    for s in enumerate_naive(f).member_sets():
        assert is_cf2(f, s) == is_icf2(f, s)
        assert is_stg2(f, s) == is_istg2(f, s)


@given(frameworks(max_args=6))
@settings(max_examples=60)
def test_scc_semantics_subset_of_naive(f):
    naive = members(enumerate_naive(f))
    for sem in SCC_SEMANTICS:
        assert members(enumerate_semantics(f, sem)) <= naive


@given(frameworks(max_args=6))
@settings(max_examples=40)
def test_weak_reinstatement_for_transfinite(f):
    g = grounded(f).members
    for sem in ("icf2", "istg2"):
        for s in enumerate_semantics(f, sem).member_sets():
            assert g <= s


@given(frameworks(max_args=6))
@settings(max_examples=40)
def test_delta_members_attacked_and_monotone(f):
    for s in enumerate_naive(f).member_sets():
        tr = delta_lfp(f, s)
        for d in tr.fixed_point:
            assert any((a, d) in f.attacks for a in s)
        small = frozenset()
        big = tr.stage_at(1)
        assert delta_step(f, s, small) <= delta_step(f, s, big)


@given(frameworks(max_args=6))
@settings(max_examples=40)
def test_lemma2_trace_matches_delta(f):
    for s in enumerate_naive(f).member_sets():
        tr = delta_lfp(f, s)
        for a in range(f.n):
            ct = component_trace(f, s, a)
            for k in range(len(tr.stages)):
                remainder = f.full_mask & ~mask_of(tr.stage_at(k))
                comp = frozenset()
                for cm in scc_masks(f.victim_masks, remainder):
                    if (cm >> a) & 1:
                        comp = frozenset(bits_of(cm))
                        break
                assert ct.stage_at(k) == comp
