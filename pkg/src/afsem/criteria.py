"""Checkers for the evaluation criteria, with re-checkable witnesses.

Every failed check carries a witness built from labels only, so it can be
re-verified against the primitive operations without holding on to any
internal state.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import PremiseError
from .framework import Framework, defends, is_conflict_free, restrict
from .scc import DEFAULT_UNATTACKED_CAP, unattacked_sets
from .semantics import ExtensionSet, grounded
from .scc_semantics import enumerate_semantics

REINSTATEMENT_VARIANTS = ("plain", "weak", "cf")
SKEPTICISM_RELATIONS = ("cap", "weak")


@dataclass(frozen=True)
class CriterionReport:
    criterion: str
    holds: bool
    witness: dict[str, Any] | None = None


def check_i_maximality(es: ExtensionSet) -> CriterionReport:
    """Holds iff the extension set is an antichain under inclusion."""
    sets = es.member_sets()
    for i, s1 in enumerate(sets):
        for j, s2 in enumerate(sets):
            if i != j and s1 < s2:
                return CriterionReport(
                    "i-maximality",
                    False,
                    {
                        "smaller": list(es.frame.labels_of(s1)),
                        "larger": list(es.frame.labels_of(s2)),
                    },
                )
    return CriterionReport("i-maximality", True)


def check_reinstatement(
    f: Framework, es: ExtensionSet, variant: str = "plain"
) -> CriterionReport:
    """plain: a defended argument must be in; weak: the grounded extension
    must be contained; cf: a defended argument must be in when adding it
    stays conflict-free."""
    if variant not in REINSTATEMENT_VARIANTS:
        raise ValueError(f"variant must be one of {REINSTATEMENT_VARIANTS}")
    name = {"plain": "reinstatement", "weak": "weak-reinstatement",
            "cf": "cf-reinstatement"}[variant]
    if variant == "weak":
        g = grounded(f).members
        for ext in es.extensions:
            missing = sorted(g - ext.members)
            if missing:
                return CriterionReport(
                    name,
                    False,
                    {
                        "extension": list(ext.labels()),
                        "missing_grounded_member": f.labels[missing[0]],
                    },
                )
        return CriterionReport(name, True)
    for ext in es.extensions:
        for a in range(f.n):
            if a in ext.members or not defends(f, ext.members, a):
                continue
            if variant == "cf" and not is_conflict_free(
                f, ext.members | {a}
            ):
                continue
            return CriterionReport(
                name,
                False,
                {"extension": list(ext.labels()), "defended": f.labels[a]},
            )
    return CriterionReport(name, True)


def check_directionality(
    f: Framework,
    which: str,
    u: frozenset[int] | None = None,
    cap: int = DEFAULT_UNATTACKED_CAP,
    limit: int | None = None,
) -> CriterionReport:
    """Restricting to an unattacked set must commute with taking extensions.

    With no ``u`` given, every unattacked set (up to ``cap``) is tested.
    """
    if u is not None:
        outside_attack = any(
            a not in u and b in u for (a, b) in f.attacks
        )
        if outside_attack:
            raise PremiseError("the given set is attacked from outside")
        candidates = [frozenset(u)]
    else:
        candidates = unattacked_sets(f, cap)
    whole = enumerate_semantics(f, which, limit=limit)
    for uset in candidates:
        restricted_labels = frozenset(f.labels[i] for i in uset)
        sub = restrict(f, uset)
        left = set(frozenset(labs) for labs in
                   enumerate_semantics(sub, which, limit=limit).label_sets())
        right = set(
            frozenset(ext.labels()) & restricted_labels
            for ext in whole.extensions
        )
        if left != right:
            return CriterionReport(
                "directionality",
                False,
                {
                    "unattacked_set": sorted(restricted_labels),
                    "restricted_extensions": _canon(left),
                    "projected_extensions": _canon(right),
                },
            )
    return CriterionReport("directionality", True)


def skepticism_compare(t1: ExtensionSet, t2: ExtensionSet, rel: str) -> bool:
    """cap: the intersection of the first is contained in the intersection
    of the second (intersections over no extensions are the full argument
    set); weak: every extension of the second contains one of the first."""
    if rel not in SKEPTICISM_RELATIONS:
        raise ValueError(f"rel must be one of {SKEPTICISM_RELATIONS}")
    u1 = set(t1.frame.labels)
    u2 = set(t2.frame.labels)
    if u1 != u2:
        raise PremiseError("extension sets range over different arguments")
    sets1 = [frozenset(labs) for labs in t1.label_sets()]
    sets2 = [frozenset(labs) for labs in t2.label_sets()]
    if rel == "cap":
        i1 = frozenset(u1).intersection(*sets1) if sets1 else frozenset(u1)
        i2 = frozenset(u2).intersection(*sets2) if sets2 else frozenset(u2)
        return i1 <= i2
    return all(any(s1 <= s2 for s1 in sets1) for s2 in sets2)


def check_skepticism_adequacy(
    f: Framework,
    g: Framework,
    which: str,
    rel: str,
    limit: int | None = None,
) -> CriterionReport:
    """Under equal conflicts and extra orientation only (attacks of ``g``
    contained in ``f``'s), the semantics on ``f`` must stay at least as
    skeptical as on ``g``."""
    if set(f.labels) != set(g.labels):
        raise PremiseError("frameworks must share their argument set")
    f_pairs = set((f.labels[a], f.labels[b]) for a, b in f.attacks)
    g_pairs = set((g.labels[a], g.labels[b]) for a, b in g.attacks)
    if not g_pairs <= f_pairs:
        raise PremiseError("attacks of the second framework must be "
                           "contained in the first's")
    conf_f = set(frozenset((f.labels[a], f.labels[b])) for a, b in f.attacks)
    conf_g = set(frozenset((g.labels[a], g.labels[b])) for a, b in g.attacks)
    if conf_f != conf_g:
        raise PremiseError("frameworks must have identical conflicts")
    t1 = enumerate_semantics(f, which, limit=limit)
    t2 = enumerate_semantics(g, which, limit=limit)
    ok = skepticism_compare(t1, t2, rel)
    if ok:
        return CriterionReport(f"skepticism-adequacy-{rel}", True)
    witness: dict[str, Any] = {
        "first_extensions": _canon(
            frozenset(labs) for labs in t1.label_sets()
        ),
        "second_extensions": _canon(
            frozenset(labs) for labs in t2.label_sets()
        ),
    }
    if rel == "weak":
        sets1 = [frozenset(labs) for labs in t1.label_sets()]
        for labs in t2.label_sets():
            if not any(s1 <= frozenset(labs) for s1 in sets1):
                witness["uncovered_extension"] = sorted(labs)
                break
    return CriterionReport(f"skepticism-adequacy-{rel}", False, witness)


def _canon(sets) -> list[list[str]]:
    return sorted([sorted(s) for s in sets])
