"""Argumentation frameworks and the set algebra everything else builds on.

A framework interns its argument labels to dense indices 0..n-1 in
label-list order; all computations run on index sets, most of them on int
bitmasks.  Frameworks are immutable after construction and safe to share.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .errors import FrameworkError


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def bits_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


class Framework:
    """A finite attack graph over interned argument labels.

    Attributes:
        labels: argument labels, index i holds the label of argument i.
        attacks: frozenset of (attacker, target) index pairs.
        attacker_masks / victim_masks: per-argument bitmask adjacency.
        parent_index: when built by ``restrict``, maps local index -> index
            in the parent framework (identity is represented by ``None``).
    """

    __slots__ = (
        "labels",
        "attacks",
        "attacker_masks",
        "victim_masks",
        "conflict_masks",
        "selfatk_mask",
        "full_mask",
        "parent_index",
        "_index",
    )

    def __init__(
        self,
        labels: Iterable[str],
        attacks: Iterable[tuple[int, int]],
        parent_index: tuple[int, ...] | None = None,
    ):
        self.labels: tuple[str, ...] = tuple(labels)
        n = len(self.labels)
        self._index: dict[str, int] = {lab: i for i, lab in enumerate(self.labels)}
        if len(self._index) != n:
            seen: set[str] = set()
            for lab in self.labels:
                if lab in seen:
                    raise FrameworkError(f"duplicate label: {lab!r}")
                seen.add(lab)
        atk = frozenset(attacks)
        for a, b in atk:
            if not (0 <= a < n and 0 <= b < n):
                raise FrameworkError(f"attack endpoint out of range: ({a}, {b})")
        self.attacks: frozenset[tuple[int, int]] = atk
        attacker = [0] * n
        victim = [0] * n
        selfatk = 0
        for a, b in atk:
            victim[a] |= 1 << b
            attacker[b] |= 1 << a
            if a == b:
                selfatk |= 1 << a
        self.attacker_masks: tuple[int, ...] = tuple(attacker)
        self.victim_masks: tuple[int, ...] = tuple(victim)
        self.conflict_masks: tuple[int, ...] = tuple(
            attacker[i] | victim[i] for i in range(n)
        )
        self.selfatk_mask: int = selfatk
        self.full_mask: int = (1 << n) - 1
        self.parent_index = parent_index

    @property
    def n(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise FrameworkError(f"unknown argument label: {label!r}") from None

    def indices_of(self, labels: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index_of(lab) for lab in labels)

    def labels_of(self, indices: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in sorted(indices))

    def arg_indices(self) -> range:
        return range(self.n)

    def has_attack(self, a: int, b: int) -> bool:
        return bool(self.victim_masks[a] & (1 << b))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Framework)
            and self.labels == other.labels
            and self.attacks == other.attacks
        )

    def __hash__(self) -> int:
        return hash((self.labels, self.attacks))

    def __repr__(self) -> str:
        return f"Framework(|A|={self.n}, |R|={len(self.attacks)})"


@dataclass(frozen=True)
class Extension:
    """A set of argument indices within a fixed framework."""

    frame: Framework
    members: frozenset[int]

    def __post_init__(self) -> None:
        bad = [i for i in self.members if not (0 <= i < self.frame.n)]
        if bad:
            raise FrameworkError(f"extension members out of range: {sorted(bad)}")

    def labels(self) -> tuple[str, ...]:
        return self.frame.labels_of(self.members)

    def sort_key(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def __len__(self) -> int:
        return len(self.members)


def build_framework(
    labels: Iterable[str], attacks: Iterable[tuple[str, str]] = ()
) -> Framework:
    """Intern ``labels`` (kept in list order) and resolve attacks by label.

    Raises FrameworkError on duplicate labels or attack endpoints that do
    not appear in ``labels``.
    """
    labels = tuple(labels)
    index: dict[str, int] = {}
    for lab in labels:
        if lab in index:
            raise FrameworkError(f"duplicate label: {lab!r}")
        index[lab] = len(index)
    pairs = []
    for a, b in attacks:
        if a not in index:
            raise FrameworkError(f"attack endpoint not declared: {a!r}")
        if b not in index:
            raise FrameworkError(f"attack endpoint not declared: {b!r}")
        pairs.append((index[a], index[b]))
    return Framework(labels, pairs)


def restrict(f: Framework, keep: Iterable[int]) -> Framework:
    """Induced sub-framework on ``keep`` (intersected with the argument set).

    Labels are preserved, so results translate back to ``f`` by label; the
    positional mapping is also retained in ``parent_index``.
    """
    kept = sorted(set(keep) & set(range(f.n)))
    old_to_new = {old: new for new, old in enumerate(kept)}
    attacks = [
        (old_to_new[a], old_to_new[b])
        for (a, b) in f.attacks
        if a in old_to_new and b in old_to_new
    ]
    return Framework(
        (f.labels[i] for i in kept), attacks, parent_index=tuple(kept)
    )


def reverse(f: Framework) -> Framework:
    """Same arguments with every attack flipped."""
    return Framework(f.labels, [(b, a) for (a, b) in f.attacks])


def neighborhoods(
    f: Framework, members: Iterable[int]
) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    """Return (attacked-by-S, attackers-of-S, range of S).

    The range is S together with everything S attacks.
    """
    smask = _validated_mask(f, members)
    plus = 0
    minus = 0
    m = smask
    i = 0
    while m:
        if m & 1:
            plus |= f.victim_masks[i]
            minus |= f.attacker_masks[i]
        m >>= 1
        i += 1
    return (
        frozenset(bits_of(plus)),
        frozenset(bits_of(minus)),
        frozenset(bits_of(smask | plus)),
    )


def is_conflict_free(f: Framework, members: Iterable[int]) -> bool:
    """True iff no member attacks a member (self-attacks included)."""
    smask = _validated_mask(f, members)
    m = smask
    i = 0
    while m:
        if m & 1 and f.victim_masks[i] & smask:
            return False
        m >>= 1
        i += 1
    return True


def defends(f: Framework, members: Iterable[int], a: int) -> bool:
    """True iff every attacker of ``a`` is attacked by the set."""
    smask = _validated_mask(f, members)
    if not 0 <= a < f.n:
        raise FrameworkError(f"argument index out of range: {a}")
    return _defended_mask(f, smask) >> a & 1 == 1


def characteristic(f: Framework, members: Iterable[int]) -> frozenset[int]:
    """All arguments defended by the set."""
    smask = _validated_mask(f, members)
    return frozenset(bits_of(_defended_mask(f, smask)))


def conflicts(f: Framework) -> frozenset[frozenset[int]]:
    """Unordered conflicting pairs; a self-attack yields a singleton pair."""
    return frozenset(frozenset((a, b)) for (a, b) in f.attacks)


def _defended_mask(f: Framework, smask: int) -> int:
    plus = 0
    m = smask
    i = 0
    while m:
        if m & 1:
            plus |= f.victim_masks[i]
        m >>= 1
        i += 1
    out = 0
    for x in range(f.n):
        if f.attacker_masks[x] & ~plus == 0:
            out |= 1 << x
    return out


def _validated_mask(f: Framework, members: Iterable[int]) -> int:
    mask = 0
    for i in members:
        if not 0 <= i < f.n:
            raise FrameworkError(f"argument index out of range: {i}")
        mask |= 1 << i
    return mask
