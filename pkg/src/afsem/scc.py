"""Strongly connected components, condensation order and unattacked sets."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import LimitError
from .framework import Framework, bits_of, mask_of

DEFAULT_UNATTACKED_CAP = 4096


@dataclass(frozen=True)
class SccDecomposition:
    """Partition into SCCs plus the acyclic condensation.

    ``components`` is listed in a topological order of the condensation,
    initial (unattacked-from-outside) components first.  ``component_of``
    maps argument index -> component id; ``condensation_edges`` holds
    (attacking component, attacked component) id pairs.
    """

    components: tuple[frozenset[int], ...]
    component_of: tuple[int, ...]
    condensation_edges: frozenset[tuple[int, int]]

    def component_containing(self, a: int) -> frozenset[int]:
        return self.components[self.component_of[a]]


def scc_masks(victim_masks: Iterable[int], active: int) -> list[int]:
    """Tarjan over the sub-graph induced by the ``active`` bitmask.

    Returns component bitmasks in a topological order of the condensation
    (initial components first).  Deterministic: roots and neighbours are
    visited in increasing index order.
    """
    victims = list(victim_masks)
    n = len(victims)
    index = [-1] * n
    low = [0] * n
    onstack = [False] * n
    stack: list[int] = []
    counter = 0
    comps: list[int] = []

    for root in range(n):
        if not (active >> root) & 1 or index[root] != -1:
            continue
        # Iterative Tarjan: (node, iterator position over its neighbours).
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                onstack[v] = True
            advanced = False
            neigh = bits_of(victims[v] & active)
            for k in range(pi, len(neigh)):
                w = neigh[k]
                if index[w] == -1:
                    work[-1] = (v, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if onstack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if low[v] == index[v]:
                cmask = 0
                while True:
                    w = stack.pop()
                    onstack[w] = False
                    cmask |= 1 << w
                    if w == v:
                        break
                comps.append(cmask)
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])
    # Tarjan emits a component only after everything it attacks, so the
    # reversed emission order is topological with initial components first.
    comps.reverse()
    return comps


def decompose(f: Framework) -> SccDecomposition:
    comps = scc_masks(f.victim_masks, f.full_mask)
    component_of = [0] * f.n
    for cid, cmask in enumerate(comps):
        for i in bits_of(cmask):
            component_of[i] = cid
    edges = set()
    for a, b in f.attacks:
        ca, cb = component_of[a], component_of[b]
        if ca != cb:
            edges.add((ca, cb))
    return SccDecomposition(
        components=tuple(frozenset(bits_of(c)) for c in comps),
        component_of=tuple(component_of),
        condensation_edges=frozenset(edges),
    )


def d_s(f: Framework, s: Iterable[int], x: Iterable[int]) -> frozenset[int]:
    """Members of ``x`` attacked by an element of ``s`` outside ``x``."""
    smask = mask_of(s)
    xmask = mask_of(x)
    outside = smask & ~xmask
    out = 0
    for b in bits_of(xmask):
        if f.attacker_masks[b] & outside:
            out |= 1 << b
    return frozenset(bits_of(out))


def unattacked_sets(
    f: Framework, cap: int = DEFAULT_UNATTACKED_CAP
) -> list[frozenset[int]]:
    """All U receiving no attack from outside U.

    These are exactly the unions of condensation-ancestor-closed component
    sets, enumerated over the condensation DAG.  Raises LimitError when more
    than ``cap`` such sets exist (the count is exponential in the number of
    components).
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    dec = decompose(f)
    k = len(dec.components)
    preds = [0] * k
    for ca, cb in dec.condensation_edges:
        preds[cb] |= 1 << ca
    results: list[int] = []

    # Components are in topological order, so every predecessor of component
    # i has an id < i and has already been decided when i is reached.
    def rec(i: int, chosen: int) -> None:
        if len(results) > cap:
            return
        if i == k:
            results.append(chosen)
            return
        rec(i + 1, chosen)
        if preds[i] & ~chosen == 0:
            rec(i + 1, chosen | (1 << i))

    rec(0, 0)
    if len(results) > cap:
        raise LimitError(
            f"more than {cap} unattacked sets; raise the cap to enumerate"
        )
    comp_masks = [mask_of(c) for c in dec.components]
    sets = []
    for chosen in results:
        m = 0
        for cid in bits_of(chosen):
            m |= comp_masks[cid]
        sets.append(frozenset(bits_of(m)))
    sets.sort(key=lambda u: (len(u), tuple(sorted(u))))
    return sets
