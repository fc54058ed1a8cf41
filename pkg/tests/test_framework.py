import pytest
from hypothesis import given

from afsem import fixtures as fx
from afsem.errors import FrameworkError
from afsem.framework import (
    build_framework,
    characteristic,
    conflicts,
    defends,
    is_conflict_free,
    neighborhoods,
    restrict,
    reverse,
)
from strategies import frameworks, frameworks_with_subset


def labset(f, members):
    return set(f.labels_of(members))


class TestBuild:
    def test_minimal(self):
        f = build_framework(["a"], [])
        assert f.labels == ("a",)
        assert f.attacks == frozenset()

    def test_three_cycle(self):
        f = fx.t3()
        assert f.labels == ("a", "b", "c")
        assert f.attacks == {(0, 1), (1, 2), (2, 0)}

    def test_unknown_endpoint(self):
        with pytest.raises(FrameworkError):
            build_framework(["a"], [("a", "b")])

    def test_duplicate_label(self):
        with pytest.raises(FrameworkError):
            build_framework(["a", "a"], [])

    def test_index_order_is_label_order(self):
        f = build_framework(["z", "m", "a"], [])
        assert [f.index_of(lab) for lab in ("z", "m", "a")] == [0, 1, 2]


class TestRestrict:
    def test_induced_subgraph(self):
        f = fx.t3()
        sub = restrict(f, f.indices_of("ab"))
        assert sub.labels == ("a", "b")
        assert sub.attacks == {(0, 1)}
        assert sub.parent_index == (0, 1)

    def test_empty(self):
        sub = restrict(fx.pt(), frozenset())
        assert sub.n == 0 and sub.attacks == frozenset()

    def test_l4_big_component_without_a1(self):
        # the sub-framework behind the cf1.5 check of {b1, a2, a4}
        f = fx.l4()
        sub = restrict(f, f.indices_of(["a2", "a3", "a4", "b2", "b3", "b4"]))
        assert sub.labels == ("a2", "b2", "a3", "b3", "a4", "b4")
        pairs = {
            (sub.labels[a], sub.labels[b]) for a, b in sub.attacks
        }
        assert pairs == {
            ("a3", "a2"), ("a4", "a3"),
            ("a2", "b3"), ("a3", "b4"),
            ("b2", "a2"), ("b3", "a3"), ("b4", "a4"),
        }

    def test_identity_restriction(self):
        f = fx.wr()
        assert restrict(f, range(f.n)) == f

    def test_out_of_range_intersected(self):
        f = fx.t3()
        assert restrict(f, {0, 99}).labels == ("a",)


class TestNeighborhoods:
    def test_t3(self):
        f = fx.t3()
        plus, minus, rng = neighborhoods(f, f.indices_of("a"))
        assert labset(f, plus) == {"b"}
        assert labset(f, minus) == {"c"}
        assert labset(f, rng) == {"a", "b"}

    def test_sk_f_b_has_full_range(self):
        f = fx.sk_f()
        _, _, rng = neighborhoods(f, f.indices_of("b"))
        assert labset(f, rng) == {"a", "b", "c"}

    def test_empty_set(self):
        f = fx.pt()
        assert neighborhoods(f, frozenset()) == (
            frozenset(), frozenset(), frozenset(),
        )


class TestConflictFree:
    def test_singleton(self):
        f = fx.t3()
        assert is_conflict_free(f, f.indices_of("a"))

    def test_attack_inside(self):
        f = fx.t3()
        assert not is_conflict_free(f, f.indices_of("ab"))

    def test_self_attacker(self):
        f = fx.wr()
        assert not is_conflict_free(f, f.indices_of(["b3"]))

    def test_empty_always(self):
        assert is_conflict_free(fx.sk_f(), frozenset())


class TestDefense:
    def test_t3_a_defends_c(self):
        f = fx.t3()
        assert defends(f, f.indices_of("a"), f.index_of("c"))

    def test_empty_defends_nothing_attacked(self):
        f = fx.t3()
        assert not defends(f, frozenset(), f.index_of("a"))

    def test_characteristic_of_empty_is_unattacked(self):
        f = fx.pt()
        assert labset(f, characteristic(f, frozenset())) == {"a"}


class TestConflicts:
    def test_t3(self):
        f = fx.t3()
        want = {
            frozenset(f.indices_of(p)) for p in ("ab", "bc", "ac")
        }
        assert conflicts(f) == want

    def test_empty_framework(self):
        assert conflicts(build_framework([], [])) == frozenset()

    def test_sk_pair_share_conflicts(self):
        f, g = fx.sk_f(), fx.sk_g()
        by_label = lambda fr: {  # noqa: E731
            frozenset(fr.labels[i] for i in pair) for pair in conflicts(fr)
        }
        assert by_label(f) == by_label(g)


@given(frameworks_with_subset())
def test_range_is_set_union_plus(fs):
    f, members = fs
    members = frozenset(i for i in members if i < f.n)
    plus, minus, rng = neighborhoods(f, members)
    assert rng == members | plus
    att_into = frozenset(
        a for (a, b) in f.attacks if b in members
    )
    assert minus == att_into


@given(frameworks())
def test_conflicts_invariant_under_reversal(f):
    assert conflicts(f) == conflicts(reverse(f))


@given(frameworks())
def test_empty_set_conflict_free(f):
    assert is_conflict_free(f, frozenset())


@given(frameworks())
def test_restrict_full_is_identity(f):
    assert restrict(f, range(f.n)) == f
