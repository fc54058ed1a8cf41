"""SCC-recursive and SCC-prioritized semantics.

Membership in cf2/stg2 follows the recursive definitions directly, with
memoization keyed on the restricted argument set.  The transfinite variants
icf2/istg2 are evaluated on finite frameworks through their fixed-point
characterization: iterate the deletion operator to its least fixed point
(at most |A| steps here) and test naive/stage per component of what
survives.  cf1.5/stg1.5 keep the original components and never
re-decompose.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import FrameworkError
from .framework import Framework, bits_of, mask_of
from .scc import scc_masks
from .semantics import (
    ExtensionSet,
    check_size,
    is_cf_mask,
    is_naive_in,
    is_stage_in,
    naive_masks,
)

SCC_SEMANTICS = ("cf2", "stg2", "icf2", "istg2", "cf1.5", "stg1.5")
ALL_SEMANTICS = ("cf", "naive", "grounded", "stage") + SCC_SEMANTICS


@dataclass(frozen=True)
class DeltaTrace:
    """Iteration trace of the deletion operator up to its least fixed point.

    ``stages[k]`` is the k-th iterate starting from the empty set; the
    stages strictly increase and the last one is the fixed point.
    """

    frame: Framework
    stages: tuple[frozenset[int], ...]
    fixed_point: frozenset[int]
    steps: int

    def stage_at(self, k: int) -> frozenset[int]:
        return self.stages[min(k, len(self.stages) - 1)]


@dataclass(frozen=True)
class ComponentTrace:
    """Successive components of one argument while a candidate set erodes
    the framework from above.

    ``stages[k]`` is the argument's component at step k; the trace ends at
    the first step where the argument drops out (``survived`` False) or the
    component stabilizes (``survived`` True).  ``comp_ordinal`` is that
    step index.
    """

    frame: Framework
    argument: int
    stages: tuple[frozenset[int], ...]
    comp_ordinal: int
    survived: bool

    def stage_at(self, k: int) -> frozenset[int]:
        if k < len(self.stages):
            return self.stages[k]
        return self.stages[-1] if self.survived else frozenset()


# ---------------------------------------------------------------------------
# Reachability and the deletion operator.


def _reach_mask(f: Framework, start: int, within: int) -> int:
    """Everything reachable from ``start`` by attacks inside ``within``,
    including ``start`` itself (length-0 paths count)."""
    if not (within >> start) & 1:
        return 0
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for i in bits_of(frontier):
            nxt |= f.victim_masks[i] & within
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def reachable_mod(f: Framework, b_set: Iterable[int], a: int, b: int) -> bool:
    """Directed reachability from ``a`` to ``b`` inside the sub-framework on
    ``b_set``.  Both endpoints must lie in ``b_set``; an argument reaches
    itself whenever it is in ``b_set``."""
    within = _validated(f, b_set)
    if not (0 <= a < f.n and 0 <= b < f.n):
        raise FrameworkError("argument index out of range")
    if not ((within >> a) & 1 and (within >> b) & 1):
        return False
    return bool(_reach_mask(f, a, within) >> b & 1)


def _delta_step_mask(f: Framework, smask: int, dmask: int) -> int:
    """One application of the deletion operator: arguments attacked by the
    candidate set with no return path that avoids the already-deleted."""
    within = f.full_mask & ~dmask
    reach_cache: dict[int, int] = {}
    out = 0
    for a in range(f.n):
        satk = f.attacker_masks[a] & smask
        if not satk:
            continue
        if not (within >> a) & 1:
            out |= 1 << a
            continue
        if a not in reach_cache:
            reach_cache[a] = _reach_mask(f, a, within)
        # a fails to reach some attacker in S (attackers outside ``within``
        # are unreachable by convention).
        if satk & ~(reach_cache[a] & within):
            out |= 1 << a
    return out


def delta_step(
    f: Framework, s: Iterable[int], deleted: Iterable[int]
) -> frozenset[int]:
    """Single step of the deletion operator (monotone in ``deleted``)."""
    return frozenset(
        bits_of(_delta_step_mask(f, _validated(f, s), _validated(f, deleted)))
    )


def delta_lfp(f: Framework, s: Iterable[int]) -> DeltaTrace:
    """Iterate the deletion operator from the empty set to its least fixed
    point; on a finite framework this takes at most |A| strict steps."""
    smask = _validated(f, s)
    if not is_cf_mask(f, smask):
        raise FrameworkError("candidate set must be conflict-free")
    stages = [0]
    while True:
        nxt = _delta_step_mask(f, smask, stages[-1])
        if nxt == stages[-1]:
            break
        stages.append(nxt)
    return DeltaTrace(
        frame=f,
        stages=tuple(frozenset(bits_of(m)) for m in stages),
        fixed_point=frozenset(bits_of(stages[-1])),
        steps=len(stages) - 1,
    )


def separation(f: Framework) -> Framework:
    """Drop every attack that crosses between different components."""
    comps = scc_masks(f.victim_masks, f.full_mask)
    comp_of = {}
    for cid, cmask in enumerate(comps):
        for i in bits_of(cmask):
            comp_of[i] = cid
    kept = [(a, b) for (a, b) in f.attacks if comp_of[a] == comp_of[b]]
    return Framework(f.labels, kept)


# ---------------------------------------------------------------------------
# cf2 / stg2 by the recursive definitions.


def _sccrec_member(
    f: Framework, smask: int, active: int, stage: bool, memo: dict
) -> bool:
    key = (smask, active)
    hit = memo.get(key)
    if hit is not None:
        return hit
    comps = scc_masks(f.victim_masks, active)
    if len(comps) == 0:
        res = smask == 0
    elif len(comps) == 1:
        res = (
            is_stage_in(f, smask, active)
            if stage
            else is_naive_in(f, smask, active)
        )
    else:
        res = True
        for xmask in comps:
            outside = smask & ~xmask
            dmask = 0
            for b in bits_of(xmask):
                if f.attacker_masks[b] & outside:
                    dmask |= 1 << b
            sub_active = xmask & ~dmask
            sx = smask & xmask
            if sx & ~sub_active:
                res = False
                break
            if not _sccrec_member(f, sx, sub_active, stage, memo):
                res = False
                break
    memo[key] = res
    return res


def is_cf2(
    f: Framework, s: Iterable[int], _memo: dict | None = None
) -> bool:
    """Literal recursive evaluation: naive on a single component, otherwise
    recurse per component on what survives attacks from above."""
    return _sccrec_member(
        f, _validated(f, s), f.full_mask, False, {} if _memo is None else _memo
    )


def is_stg2(
    f: Framework, s: Iterable[int], _memo: dict | None = None
) -> bool:
    """Same recursion as cf2 with stage as the single-component base case."""
    return _sccrec_member(
        f, _validated(f, s), f.full_mask, True, {} if _memo is None else _memo
    )


# ---------------------------------------------------------------------------
# icf2 / istg2 through the fixed point of the deletion operator.


def _i_member(f: Framework, smask: int, stage: bool) -> bool:
    if not is_cf_mask(f, smask):
        return False
    trace = delta_lfp(f, bits_of(smask))
    remainder = f.full_mask & ~mask_of(trace.fixed_point)
    if smask & ~remainder:
        return False
    for xmask in scc_masks(f.victim_masks, remainder):
        sx = smask & xmask
        ok = (
            is_stage_in(f, sx, xmask) if stage else is_naive_in(f, sx, xmask)
        )
        if not ok:
            return False
    return True


def is_icf2(f: Framework, s: Iterable[int]) -> bool:
    """Conflict-free and naive on the separation of what survives the
    deletion fixed point; naive decomposes over the disconnected
    components, so each surviving component is tested independently."""
    return _i_member(f, _validated(f, s), stage=False)


def is_istg2(f: Framework, s: Iterable[int]) -> bool:
    """As is_icf2 with stage per surviving component."""
    return _i_member(f, _validated(f, s), stage=True)


def component_trace(f: Framework, s: Iterable[int], a: int) -> ComponentTrace:
    """Follow one argument's component as members of the candidate set
    outside it knock arguments out, until the argument leaves or its
    component stabilizes (the limit rule is unreachable on finite input)."""
    smask = _validated(f, s)
    if not 0 <= a < f.n:
        raise FrameworkError(f"argument index out of range: {a}")
    cur = 0
    for cmask in scc_masks(f.victim_masks, f.full_mask):
        if (cmask >> a) & 1:
            cur = cmask
            break
    stages = [cur]
    survived = True
    while True:
        outside = smask & ~cur
        dmask = 0
        for b in bits_of(cur):
            if f.attacker_masks[b] & outside:
                dmask |= 1 << b
        nxt_active = cur & ~dmask
        nxt = 0
        if (nxt_active >> a) & 1:
            for cmask in scc_masks(f.victim_masks, nxt_active):
                if (cmask >> a) & 1:
                    nxt = cmask
                    break
        if nxt == cur:
            survived = True
            break
        stages.append(nxt)
        if not (nxt >> a) & 1:
            survived = False
            break
        cur = nxt
    return ComponentTrace(
        frame=f,
        argument=a,
        stages=tuple(frozenset(bits_of(m)) for m in stages),
        comp_ordinal=len(stages) - 1,
        survived=survived,
    )


# ---------------------------------------------------------------------------
# cf1.5 / stg1.5: original components, no re-decomposition.


def _prioritized_member(f: Framework, smask: int, stage: bool) -> bool:
    if not is_cf_mask(f, smask):
        return False
    for xmask in scc_masks(f.victim_masks, f.full_mask):
        outside = smask & ~xmask
        dmask = 0
        for b in bits_of(xmask):
            if f.attacker_masks[b] & outside:
                dmask |= 1 << b
        sub_active = xmask & ~dmask
        sx = smask & xmask
        if sx & ~sub_active:
            return False
        ok = (
            is_stage_in(f, sx, sub_active)
            if stage
            else is_naive_in(f, sx, sub_active)
        )
        if not ok:
            return False
    return True


def is_cf15(f: Framework, s: Iterable[int]) -> bool:
    """Conflict-free, and naive per original component on what survives
    attacks from the candidate set outside that component."""
    return _prioritized_member(f, _validated(f, s), stage=False)


def is_stg15(f: Framework, s: Iterable[int]) -> bool:
    """As is_cf15 with stage per original component."""
    return _prioritized_member(f, _validated(f, s), stage=True)


# ---------------------------------------------------------------------------
# Enumeration by candidate filtering.

_PREDICATES = {
    "cf2": lambda f, m, memo: _sccrec_member(f, m, f.full_mask, False, memo),
    "stg2": lambda f, m, memo: _sccrec_member(f, m, f.full_mask, True, memo),
    "icf2": lambda f, m, memo: _i_member(f, m, stage=False),
    "istg2": lambda f, m, memo: _i_member(f, m, stage=True),
    "cf1.5": lambda f, m, memo: _prioritized_member(f, m, stage=False),
    "stg1.5": lambda f, m, memo: _prioritized_member(f, m, stage=True),
}


def enumerate_semantics(
    f: Framework, which: str, limit: int | None = None
) -> ExtensionSet:
    """Enumerate any supported semantics.

    The six SCC-based semantics return only naive extensions, so the naive
    sets are enumerated once and filtered by the membership predicate.
    """
    from . import semantics as base

    if which == "cf":
        return base.enumerate_conflict_free(f, limit)
    if which == "naive":
        return base.enumerate_naive(f, limit)
    if which == "grounded":
        return base.grounded_set(f)
    if which == "stage":
        return base.enumerate_stage(f, limit)
    try:
        pred = _PREDICATES[which]
    except KeyError:
        raise ValueError(
            f"unknown semantics {which!r}; expected one of {ALL_SEMANTICS}"
        ) from None
    check_size(f, limit)
    memo: dict = {}
    members = [
        frozenset(bits_of(m))
        for m in naive_masks(f, f.full_mask)
        if pred(f, m, memo)
    ]
    return ExtensionSet.from_members(f, members, which)


def _validated(f: Framework, indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        if not 0 <= i < f.n:
            raise FrameworkError(f"argument index out of range: {i}")
        mask |= 1 << i
    return mask
