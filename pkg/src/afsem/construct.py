"""Constructive existence algorithms.

Three extension builders, each driven by a finitary enumeration order:
a greedy per-component walk that always yields a cf1.5 extension, a
per-component lexicographically range-maximal selection for stg1.5, and a
two-pass search that first fixes a maximal attainable range and then covers
it, yielding a stage extension.  All of them are deterministic given the
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import LimitError
from .framework import Extension, Framework, bits_of
from .scc import decompose

if TYPE_CHECKING:
    from .generators import Generator

DEFAULT_COMPONENT_LIMIT = 20
DEFAULT_SEARCH_LIMIT = 500_000


@dataclass(frozen=True)
class FinitaryOrder:
    """An enumeration order in which every argument attacks only finitely
    many predecessors.

    ``order`` lists argument labels; ``back_attack_bound[i]`` counts how
    many earlier arguments the i-th one attacks (within the listed prefix).
    """

    order: tuple[str, ...]
    back_attack_bound: tuple[int, ...]

    def position(self, label: str) -> int:
        return self.order.index(label)

    def positions_for(self, f: Framework) -> list[int]:
        """Ord position of each argument index of ``f``; every argument of
        ``f`` must occur in the order."""
        pos = {lab: i for i, lab in enumerate(self.order)}
        missing = [lab for lab in f.labels if lab not in pos]
        if missing:
            raise ValueError(f"order does not cover arguments: {missing}")
        return [pos[lab] for lab in f.labels]


def lemma1_order(source: "Generator | Framework", n: int) -> FinitaryOrder:
    """First ``n`` arguments of the attacker-closing enumeration: seed with
    the next unused argument, then append the not-yet-listed attackers of
    everything listed so far, and repeat.  Every attacker of a listed
    argument lands within the next round, which bounds how far back any
    attack can point.

    A finite source smaller than ``n`` yields its full order.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if isinstance(source, Framework):
        universe: int | None = source.n
        decode = lambda i: source.labels[i]  # noqa: E731
        attackers_of = lambda lab: source.labels_of(  # noqa: E731
            bits_of(source.attacker_masks[source.index_of(lab)])
        )
        attack_test = lambda u, v: source.has_attack(  # noqa: E731
            source.index_of(u), source.index_of(v)
        )
    else:
        if not source.finitary:
            raise ValueError(
                f"generator {source.name!r} is not finitary; "
                "no such ordering exists"
            )
        universe = source.size
        decode = source.decode
        attackers_of = source.attackers_of
        attack_test = lambda u, v: u in source.attackers_of(v)  # noqa: E731

    order: list[str] = []
    seen: set[str] = set()
    seed = 0

    def push(lab: str) -> None:
        order.append(lab)
        seen.add(lab)

    while len(order) < n:
        lab = None
        while universe is None or seed < universe:
            cand = decode(seed)
            seed += 1
            if cand not in seen:
                lab = cand
                break
        if lab is None:
            break
        push(lab)
        if len(order) >= n:
            break
        for x in list(order):
            for atk in attackers_of(x):
                if atk not in seen:
                    push(atk)
                    if len(order) >= n:
                        break
            if len(order) >= n:
                break

    bounds = []
    for i, lab in enumerate(order):
        bounds.append(sum(1 for j in range(i) if attack_test(lab, order[j])))
    return FinitaryOrder(order=tuple(order), back_attack_bound=tuple(bounds))


def _components_in_walk_order(f: Framework, pos: list[int]) -> list[frozenset[int]]:
    """Condensation order; among simultaneously initial components the one
    holding the lowest-positioned argument goes first."""
    dec = decompose(f)
    k = len(dec.components)
    preds: list[set[int]] = [set() for _ in range(k)]
    succs: list[set[int]] = [set() for _ in range(k)]
    for ca, cb in dec.condensation_edges:
        preds[cb].add(ca)
        succs[ca].add(cb)
    key = [min(pos[i] for i in comp) for comp in dec.components]
    ready = sorted((c for c in range(k) if not preds[c]), key=key.__getitem__)
    out: list[frozenset[int]] = []
    while ready:
        c = ready.pop(0)
        out.append(dec.components[c])
        newly = []
        for d in succs[c]:
            preds[d].discard(c)
            if not preds[d]:
                newly.append(d)
        if newly:
            ready.extend(newly)
            ready.sort(key=key.__getitem__)
    return out


def greedy_cf15(f: Framework, ord: FinitaryOrder) -> Extension:
    """Walk components in condensation order and arguments in ``ord`` order,
    adding each unless it attacks itself or conflicts with the set so far.

    Every argument ends up in the set, attacked by it, or attacking an
    earlier chosen member of its own component, which makes the result a
    cf1.5 extension.
    """
    pos = ord.positions_for(f)
    chosen = 0
    for comp in _components_in_walk_order(f, pos):
        for i in sorted(comp, key=pos.__getitem__):
            if (f.selfatk_mask >> i) & 1:
                continue
            if f.conflict_masks[i] & chosen:
                continue
            chosen |= 1 << i
    return Extension(f, frozenset(bits_of(chosen)))


def lex_scc_stg15(
    f: Framework,
    ord: FinitaryOrder,
    component_limit: int = DEFAULT_COMPONENT_LIMIT,
) -> Extension:
    """Per component, exhaustively pick the conflict-free subset of what
    survives attacks from above whose range is lexicographically largest
    (earlier order position = more significant).

    Lexicographic maximality implies subset-maximality of the range, so the
    per-component choice is a stage extension there and the result is a
    stg1.5 extension.
    """
    pos = ord.positions_for(f)
    m = len(ord.order)

    def lex_value(mask: int) -> int:
        # Earlier position = more significant bit, so integer comparison is
        # lexicographic comparison.
        v = 0
        for i in bits_of(mask):
            v |= 1 << (m - 1 - pos[i])
        return v

    chosen = 0
    for comp in _components_in_walk_order(f, pos):
        xmask = 0
        for i in comp:
            xmask |= 1 << i
        outside = chosen & ~xmask
        dmask = 0
        for b in comp:
            if f.attacker_masks[b] & outside:
                dmask |= 1 << b
        active = xmask & ~dmask
        if bin(active).count("1") > component_limit:
            raise LimitError(
                f"component with {bin(active).count('1')} arguments exceeds "
                f"the exhaustive selection limit {component_limit}"
            )
        best = 0
        best_key = (-1, -1)
        for cand in _cf_submasks(f, active):
            rng = 0
            for i in bits_of(cand):
                rng |= f.victim_masks[i]
            rng = (rng | cand) & active
            key = (lex_value(rng), lex_value(cand))
            if key > best_key:
                best, best_key = cand, key
        chosen |= best
    return Extension(f, frozenset(bits_of(chosen)))


def lex_greedy_stage(
    f: Framework,
    ord: FinitaryOrder,
    search_limit: int = DEFAULT_SEARCH_LIMIT,
) -> Extension:
    """Two passes: first decide, argument by argument in ``ord`` order, the
    largest attainable range (an argument joins if some conflict-free set
    covers it together with everything already decided); then find a
    conflict-free set whose range covers the decided set.

    No conflict-free set can strictly out-range the decided set, so the
    result is a stage extension.
    """
    pos = ord.positions_for(f)
    by_pos = sorted(range(f.n), key=pos.__getitem__)
    budget = [search_limit]

    dmask = 0
    for a in by_pos:
        if _cover_witness(f, dmask | (1 << a), pos, budget) is not None:
            dmask |= 1 << a
    smask = _cover_witness(f, dmask, pos, budget)
    if smask is None:  # the last accepted target's witness covers all of D
        raise AssertionError("decided range lost its witness")
    return Extension(f, frozenset(bits_of(smask)))


def _cover_witness(
    f: Framework, targets: int, pos: list[int], budget: list[int]
) -> int | None:
    """Backtracking search for a conflict-free set whose range contains
    ``targets``; branches over each uncovered target's coverers (the target
    itself or one of its attackers)."""

    def rec(uncovered: int, bmask: int) -> int | None:
        budget[0] -= 1
        if budget[0] < 0:
            raise LimitError("witness search budget exceeded")
        if not uncovered:
            return bmask
        t = min(bits_of(uncovered), key=pos.__getitem__)
        cands = [t] + sorted(bits_of(f.attacker_masks[t] & ~(1 << t)),
                             key=pos.__getitem__)
        for c in cands:
            if (f.selfatk_mask >> c) & 1 or f.conflict_masks[c] & bmask:
                continue
            got = rec(
                uncovered & ~(1 << c) & ~f.victim_masks[c], bmask | (1 << c)
            )
            if got is not None:
                return got
        return None

    return rec(targets, 0)


def _cf_submasks(f: Framework, active: int) -> list[int]:
    idx = bits_of(active)
    out = []

    def rec(k: int, chosen: int) -> None:
        if k == len(idx):
            out.append(chosen)
            return
        i = idx[k]
        rec(k + 1, chosen)
        if not (f.selfatk_mask >> i) & 1 and not f.conflict_masks[i] & chosen:
            rec(k + 1, chosen | (1 << i))

    rec(0, 0)
    return out
