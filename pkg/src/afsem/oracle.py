"""Definitional brute-force semantics, used only to validate the fast path.

Everything here is a direct transcription of the defining conditions over
all 2^n subsets: quantifiers become subset scans, components come from a
plain double-reachability check, and the recursive/iterated semantics are
re-derived from their definitions without memoization and without sharing
any algorithmic code with the rest of the package (the Framework data type
is the only common carrier).  Precomputed conflict-freeness and range
tables are caches of pure predicates, not search shortcuts.
"""

from __future__ import annotations

import random

from .errors import LimitError
from .framework import Framework, bits_of, build_framework
from .semantics import ExtensionSet

ORACLE_HARD_LIMIT = 15


class _Tables:
    """Per-framework adjacency and per-mask truth tables."""

    def __init__(self, f: Framework):
        if f.n > ORACLE_HARD_LIMIT:
            raise LimitError(
                f"oracle handles at most {ORACLE_HARD_LIMIT} arguments, got {f.n}"
            )
        self.n = f.n
        self.full = (1 << f.n) - 1
        self.att_out = [0] * f.n
        self.att_in = [0] * f.n
        for a, b in f.attacks:
            self.att_out[a] |= 1 << b
            self.att_in[b] |= 1 << a
        size = 1 << f.n
        self.cf = [False] * size
        self.plus = [0] * size
        for mask in range(size):
            ok = True
            plus = 0
            m = mask
            i = 0
            while m:
                if m & 1:
                    plus |= self.att_out[i]
                    if self.att_out[i] & mask:
                        ok = False
                m >>= 1
                i += 1
            self.cf[mask] = ok
            self.plus[mask] = plus

    def rng(self, mask: int, active: int) -> int:
        return (mask | self.plus[mask]) & active

    def submasks(self, active: int):
        sub = active
        while True:
            yield sub
            if sub == 0:
                return
            sub = (sub - 1) & active

    def reach(self, start: int, active: int) -> int:
        if not (active >> start) & 1:
            return 0
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            m = frontier
            i = 0
            while m:
                if m & 1:
                    nxt |= self.att_out[i] & active
                m >>= 1
                i += 1
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def scc_of(self, a: int, active: int) -> int:
        """Mutual-reachability class of ``a`` inside ``active`` (0 when
        ``a`` is not active)."""
        if not (active >> a) & 1:
            return 0
        fwd = self.reach(a, active)
        back = 0
        for b in bits_of(active):
            if (self.reach(b, active) >> a) & 1:
                back |= 1 << b
        return fwd & back

    def sccs(self, active: int) -> list[int]:
        comps = []
        left = active
        while left:
            a = (left & -left).bit_length() - 1
            c = self.scc_of(a, active)
            comps.append(c)
            left &= ~c
        return comps

    # -- base semantics, straight from their definitions ------------------

    def is_naive_in(self, smask: int, active: int) -> bool:
        if smask & ~active or not self.cf[smask]:
            return False
        for t in self.submasks(active):
            if self.cf[t] and t != smask and (t & smask) == smask:
                return False
        return True

    def is_stage_in(self, smask: int, active: int) -> bool:
        if smask & ~active or not self.cf[smask]:
            return False
        r = self.rng(smask, active)
        for t in self.submasks(active):
            if self.cf[t]:
                rt = self.rng(t, active)
                if r | rt == rt and r != rt:
                    return False
        return True

    def characteristic(self, smask: int) -> int:
        plus = self.plus[smask]
        out = 0
        for x in range(self.n):
            if self.att_in[x] & ~plus == 0:
                out |= 1 << x
        return out

    # -- SCC-recursive definitions ----------------------------------------

    def d_of(self, smask: int, xmask: int) -> int:
        out = 0
        outside = smask & ~xmask
        for b in bits_of(xmask):
            if self.att_in[b] & outside:
                out |= 1 << b
        return out

    def sccrec(self, smask: int, active: int, stage: bool) -> bool:
        comps = self.sccs(active)
        if len(comps) == 0:
            return smask == 0
        if len(comps) == 1:
            if stage:
                return self.is_stage_in(smask, active)
            return self.is_naive_in(smask, active)
        for x in comps:
            d = self.d_of(smask, x)
            sub = x & ~d
            sx = smask & x
            if sx & ~sub:
                return False
            if not self.sccrec(sx, sub, stage):
                return False
        return True

    def transfinite(self, smask: int, stage: bool) -> bool:
        """icf2/istg2 from the component-iteration definition: per argument,
        erode its component until the argument leaves or it stabilizes, then
        require naive/stage on the final component."""
        if not self.cf[smask]:
            return False
        for a in range(self.n):
            c = self.scc_of(a, self.full)
            while True:
                nxt = self.scc_of(a, c & ~self.d_of(smask, c))
                if nxt == c or not (nxt >> a) & 1:
                    break
                c = nxt
            if not (nxt >> a) & 1:
                continue
            ok = (
                self.is_stage_in(smask & nxt, nxt)
                if stage
                else self.is_naive_in(smask & nxt, nxt)
            )
            if not ok:
                return False
        return True

    def prioritized(self, smask: int, stage: bool) -> bool:
        if not self.cf[smask]:
            return False
        for x in self.sccs(self.full):
            d = self.d_of(smask, x)
            sub = x & ~d
            sx = smask & x
            if sx & ~sub:
                return False
            ok = (
                self.is_stage_in(sx, sub)
                if stage
                else self.is_naive_in(sx, sub)
            )
            if not ok:
                return False
        return True


def brute_force(f: Framework, which: str) -> ExtensionSet:
    """Exact extension set of any supported semantics by scanning all
    subsets with the definitional predicate.  Hard-limited to 15 arguments."""
    t = _Tables(f)
    size = 1 << f.n
    keep: list[int] = []
    if which == "cf":
        keep = [m for m in range(size) if t.cf[m]]
    elif which == "naive":
        keep = [m for m in range(size) if t.is_naive_in(m, t.full)]
    elif which == "stage":
        keep = [m for m in range(size) if t.is_stage_in(m, t.full)]
    elif which == "grounded":
        fixed = [m for m in range(size) if t.characteristic(m) == m]
        keep = [
            m
            for m in fixed
            if not any(p != m and (p & m) == p for p in fixed)
        ]
    elif which == "cf2":
        keep = [m for m in range(size) if t.sccrec(m, t.full, stage=False)]
    elif which == "stg2":
        keep = [m for m in range(size) if t.sccrec(m, t.full, stage=True)]
    elif which == "icf2":
        keep = [m for m in range(size) if t.transfinite(m, stage=False)]
    elif which == "istg2":
        keep = [m for m in range(size) if t.transfinite(m, stage=True)]
    elif which == "cf1.5":
        keep = [m for m in range(size) if t.prioritized(m, stage=False)]
    elif which == "stg1.5":
        keep = [m for m in range(size) if t.prioritized(m, stage=True)]
    else:
        raise ValueError(f"unknown semantics: {which!r}")
    return ExtensionSet.from_members(
        f, (frozenset(bits_of(m)) for m in keep), which
    )


def random_framework(
    n: int, edge_prob: float, self_attack_prob: float, seed: int
) -> Framework:
    """Seeded random framework with labels a0..a{n-1}; identical across
    runs for identical parameters."""
    if not 1 <= n <= ORACLE_HARD_LIMIT:
        raise ValueError(f"n must be in 1..{ORACLE_HARD_LIMIT}")
    if not (0 <= edge_prob <= 1 and 0 <= self_attack_prob <= 1):
        raise ValueError("probabilities must lie in [0, 1]")
    rng = random.Random(seed)
    labels = [f"a{i}" for i in range(n)]
    attacks = []
    for i in range(n):
        for j in range(n):
            p = self_attack_prob if i == j else edge_prob
            if rng.random() < p:
                attacks.append((labels[i], labels[j]))
    return build_framework(labels, attacks)
