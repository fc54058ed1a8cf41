"""Conflict-free, naive, grounded and stage semantics on finite frameworks.

Enumeration is depth-first over the conflict structure rather than a raw
2^n scan: naive extensions come from a pivoted Bron-Kerbosch walk over the
compatibility graph, everything else prunes on conflicts.  The mask-level
helpers are shared with the SCC-recursive module, which evaluates the same
base semantics on induced sub-frameworks.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import LimitError
from .framework import Extension, Framework, bits_of, mask_of

DEFAULT_ENUM_LIMIT = 24


@dataclass(frozen=True)
class ExtensionSet:
    """A canonically sorted, duplicate-free collection of extensions."""

    frame: Framework
    extensions: tuple[Extension, ...]
    semantics: str | None = field(default=None, compare=False)

    @staticmethod
    def from_members(
        frame: Framework, members, semantics: str | None = None
    ) -> "ExtensionSet":
        unique = sorted(set(frozenset(m) for m in members), key=sorted)
        return ExtensionSet(
            frame=frame,
            extensions=tuple(Extension(frame, m) for m in unique),
            semantics=semantics,
        )

    def member_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(e.members for e in self.extensions)

    def label_sets(self) -> tuple[tuple[str, ...], ...]:
        return tuple(e.labels() for e in self.extensions)

    def __len__(self) -> int:
        return len(self.extensions)

    def __contains__(self, members) -> bool:
        return frozenset(members) in set(self.member_sets())


def check_size(f: Framework, limit: int | None) -> None:
    limit = DEFAULT_ENUM_LIMIT if limit is None else limit
    if f.n > limit:
        raise LimitError(
            f"framework has {f.n} arguments, enumeration limit is {limit}"
        )


# ---------------------------------------------------------------------------
# Mask-level search primitives (shared with the SCC-recursive semantics).


def cf_masks(f: Framework, active: int) -> list[int]:
    """All conflict-free submasks of ``active``, by depth-first search."""
    idx = bits_of(active)
    conflict = f.conflict_masks
    selfatk = f.selfatk_mask
    out: list[int] = []

    def rec(k: int, chosen: int) -> None:
        if k == len(idx):
            out.append(chosen)
            return
        i = idx[k]
        rec(k + 1, chosen)
        if not (selfatk >> i) & 1 and not conflict[i] & chosen:
            rec(k + 1, chosen | (1 << i))

    rec(0, 0)
    return out


def naive_masks(f: Framework, active: int) -> list[int]:
    """Maximal conflict-free submasks of ``active``.

    Bron-Kerbosch with pivoting on the compatibility graph (the complement
    of the conflict graph) over the non-self-attacking arguments; maximal
    independent sets of the conflict graph are exactly the naive extensions.
    """
    free = active & ~f.selfatk_mask
    compat = {
        i: free & ~f.conflict_masks[i] & ~(1 << i) for i in bits_of(free)
    }
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot = -1
        best = -1
        for u in bits_of(p | x):
            deg = bin(p & compat[u]).count("1")
            if deg > best:
                best, pivot = deg, u
        for v in bits_of(p & ~compat[pivot]):
            expand(r | (1 << v), p & compat[v], x & compat[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, free, 0)
    out.sort()
    return out


def range_mask(f: Framework, smask: int, active: int) -> int:
    """S together with everything S attacks, inside ``active``."""
    plus = 0
    for i in bits_of(smask):
        plus |= f.victim_masks[i]
    return (smask | plus) & active


def is_cf_mask(f: Framework, smask: int) -> bool:
    for i in bits_of(smask):
        if f.victim_masks[i] & smask:
            return False
    return True


def is_naive_in(f: Framework, smask: int, active: int) -> bool:
    """Is ``smask`` a maximal conflict-free set of the sub-framework on
    ``active``?  Maximality reduces to single-argument extension checks."""
    if smask & ~active or not is_cf_mask(f, smask):
        return False
    for x in bits_of(active & ~smask):
        if (f.selfatk_mask >> x) & 1:
            continue
        if not f.conflict_masks[x] & smask:
            return False
    return True


def is_stage_in(f: Framework, smask: int, active: int) -> bool:
    """Is ``smask`` conflict-free with subset-maximal range on ``active``?

    Any range-dominating conflict-free set extends to a naive one with the
    same or larger range, so domination is tested against naive sets only.
    """
    if smask & ~active or not is_cf_mask(f, smask):
        return False
    rng = range_mask(f, smask, active)
    for t in naive_masks(f, active):
        trng = range_mask(f, t, active)
        if rng | trng == trng and rng != trng:
            return False
    return True


# ---------------------------------------------------------------------------
# Public enumerations.


def enumerate_conflict_free(
    f: Framework, limit: int | None = None
) -> ExtensionSet:
    """All conflict-free subsets."""
    check_size(f, limit)
    return ExtensionSet.from_members(
        f, (frozenset(bits_of(m)) for m in cf_masks(f, f.full_mask)), "cf"
    )


def enumerate_naive(f: Framework, limit: int | None = None) -> ExtensionSet:
    """The subset-maximal conflict-free sets."""
    check_size(f, limit)
    return ExtensionSet.from_members(
        f, (frozenset(bits_of(m)) for m in naive_masks(f, f.full_mask)), "naive"
    )


def enumerate_stage(f: Framework, limit: int | None = None) -> ExtensionSet:
    """Conflict-free sets with subset-maximal range.

    Every stage extension is naive, so candidates are the naive sets and
    range-maximality is decided among them.
    """
    check_size(f, limit)
    cands = naive_masks(f, f.full_mask)
    ranges = [range_mask(f, m, f.full_mask) for m in cands]
    keep = []
    for i, m in enumerate(cands):
        ri = ranges[i]
        if not any(
            ri | rj == rj and ri != rj for j, rj in enumerate(ranges) if j != i
        ):
            keep.append(m)
    return ExtensionSet.from_members(
        f, (frozenset(bits_of(m)) for m in keep), "stage"
    )


def grounded(f: Framework) -> Extension:
    """The least fixed point of the defense function, by Kleene iteration
    from the empty set."""
    smask = 0
    while True:
        plus = 0
        for i in bits_of(smask):
            plus |= f.victim_masks[i]
        nxt = 0
        for x in range(f.n):
            if f.attacker_masks[x] & ~plus == 0:
                nxt |= 1 << x
        if nxt == smask:
            return Extension(f, frozenset(bits_of(smask)))
        smask = nxt


def grounded_set(f: Framework) -> ExtensionSet:
    ext = grounded(f)
    return ExtensionSet(f, (ext,), "grounded")
