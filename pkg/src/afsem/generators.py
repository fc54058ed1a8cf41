"""Lazily presented countable frameworks and truncation studies.

A generator decodes argument labels in a fixed, documented order and
answers per-argument adjacency queries with finite lists.  Attacks are
stored attacker-side wherever attacker lists are finite; the two chain
families, whose arguments have infinitely many attackers, additionally
enumerate their attacks forward (victim-side), and every attack is
recorded on at least one side.  Truncation takes the induced sub-framework
on the first n decoded arguments.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass, field

from . import fixtures
from .errors import LimitError
from .framework import Framework, build_framework
from .scc_semantics import enumerate_semantics

DEFAULT_STABILIZATION_K = 3

VERDICT_ACCEPTED = "accepted"
VERDICT_REJECTED = "rejected"
VERDICT_ABSENT = "absent"
VERDICT_GAP = "gap"


@dataclass(frozen=True)
class Generator:
    """A countable framework presented by decoding order and finite
    per-argument adjacency lists."""

    name: str
    params: Mapping[str, object]
    size: int | None  # None = countably infinite
    finitary: bool
    _decode: Callable[[int], str]
    _attackers: Callable[[str], tuple[str, ...]]
    _victims: Callable[[str], tuple[str, ...]] = field(
        default=lambda lab: ()
    )

    @property
    def universe_hint(self) -> int | str:
        return "countably infinite" if self.size is None else self.size

    def decode(self, i: int) -> str:
        if i < 0 or (self.size is not None and i >= self.size):
            raise IndexError(f"decode index {i} outside universe")
        return self._decode(i)

    def attackers_of(self, label: str) -> tuple[str, ...]:
        return self._attackers(label)

    def victims_of(self, label: str) -> tuple[str, ...]:
        return self._victims(label)


@dataclass(frozen=True)
class TruncationReport:
    """Per-level credulous verdicts for tracked arguments over growing
    truncations of one generator.

    A level whose enumeration exceeds the size limit is recorded in
    ``gaps`` and its verdicts read "gap".  ``stabilized`` flags arguments
    whose last k verdicts are all "accepted": acceptance witnessed at every
    probed level is positive evidence about the full framework, while a
    rejection on a truncation can always be overturned at a larger level,
    so it is never certified.
    """

    family: str
    params: Mapping[str, object]
    semantics: str
    levels: tuple[int, ...]
    extension_counts: tuple[int | None, ...]
    tracked: Mapping[str, tuple[str, ...]]
    stabilized: Mapping[str, bool]
    gaps: tuple[int, ...]
    k: int


def truncate(g: Generator, n: int) -> Framework:
    """Induced framework on the first ``n`` decoded arguments (clamped to a
    finite universe)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if g.size is not None:
        n = min(n, g.size)
    labels = [g.decode(i) for i in range(n)]
    present = set(labels)
    attacks = []
    for v in labels:
        for u in g.attackers_of(v):
            if u in present:
                attacks.append((u, v))
    for u in labels:
        for w in g.victims_of(u):
            if w in present:
                attacks.append((u, w))
    return build_framework(labels, sorted(set(attacks)))


def truncation_study(
    g: Generator,
    which: str,
    levels: Sequence[int],
    tracked: Sequence[str],
    k: int = DEFAULT_STABILIZATION_K,
    limit: int | None = None,
) -> TruncationReport:
    """Credulous acceptance of ``tracked`` labels at each truncation level,
    with stabilization flags over the trailing ``k`` levels."""
    if k < 1:
        raise ValueError("k must be >= 1")
    verdicts: dict[str, list[str]] = {lab: [] for lab in tracked}
    counts: list[int | None] = []
    gaps: list[int] = []
    for n in levels:
        f = truncate(g, n)
        try:
            es = enumerate_semantics(f, which, limit=limit)
        except LimitError:
            gaps.append(n)
            counts.append(None)
            for lab in tracked:
                verdicts[lab].append(VERDICT_GAP)
            continue
        counts.append(len(es))
        present = set(f.labels)
        accepted = set(
            lab for ext in es.extensions for lab in ext.labels()
        )
        for lab in tracked:
            if lab not in present:
                verdicts[lab].append(VERDICT_ABSENT)
            elif lab in accepted:
                verdicts[lab].append(VERDICT_ACCEPTED)
            else:
                verdicts[lab].append(VERDICT_REJECTED)
    stabilized = {
        lab: len(v) >= k and all(x == VERDICT_ACCEPTED for x in v[-k:])
        for lab, v in verdicts.items()
    }
    return TruncationReport(
        family=g.name,
        params=dict(g.params),
        semantics=which,
        levels=tuple(levels),
        extension_counts=tuple(counts),
        tracked={lab: tuple(v) for lab, v in verdicts.items()},
        stabilized=stabilized,
        gaps=tuple(gaps),
        k=k,
    )


# ---------------------------------------------------------------------------
# Builtin families.


def _bs_ladder() -> Generator:
    """Two-row ladder (1-based rungs), decoded a1, b1, a2, b2, ...

    Attacks: a{i+1} -> a{i}, a{i} -> b{i+1}, b{i} -> a{i}.  Finitary: the
    attackers of a{i} are b{i} and a{i+1}; b{i} is attacked by a{i-1} only.
    """

    def decode(i: int) -> str:
        rung = i // 2 + 1
        return f"a{rung}" if i % 2 == 0 else f"b{rung}"

    def attackers(lab: str) -> tuple[str, ...]:
        kind, i = lab[0], int(lab[1:])
        if kind == "a":
            return (f"b{i}", f"a{i + 1}")
        return (f"a{i - 1}",) if i >= 2 else ()

    return Generator(
        name="bs_ladder",
        params={},
        size=None,
        finitary=True,
        _decode=decode,
        _attackers=attackers,
    )


def _omega_chain() -> Generator:
    """a0, a1, ... with a{i} attacking a{j} exactly when i > j.  Every
    argument has infinitely many attackers, so attacks are enumerated
    forward: each a{i} lists its finitely many victims a0..a{i-1}."""

    def decode(i: int) -> str:
        return f"a{i}"

    def victims(lab: str) -> tuple[str, ...]:
        i = int(lab[1:])
        return tuple(f"a{j}" for j in range(i))

    return Generator(
        name="omega_chain",
        params={},
        size=None,
        finitary=False,
        _decode=decode,
        _attackers=lambda lab: (),
        _victims=victims,
    )


def _omega_chain_xy() -> Generator:
    """The chain plus mutually attacking x, y where x attacks every chain
    argument; decoded x, y, a0, a1, ...

    x's infinitely many outgoing attacks are stored attacker-side: x
    appears in every a{i}'s finite attacker list.
    """

    def decode(i: int) -> str:
        if i == 0:
            return "x"
        if i == 1:
            return "y"
        return f"a{i - 2}"

    def attackers(lab: str) -> tuple[str, ...]:
        if lab == "x":
            return ("y",)
        if lab == "y":
            return ("x",)
        return ("x",)

    def victims(lab: str) -> tuple[str, ...]:
        if lab in ("x", "y"):
            return ()
        i = int(lab[1:])
        return tuple(f"a{j}" for j in range(i))

    return Generator(
        name="omega_chain_xy",
        params={},
        size=None,
        finitary=False,
        _decode=decode,
        _attackers=attackers,
        _victims=victims,
    )


def _tree_label(kind: str, i: int | None, sigma: str) -> str:
    sig = sigma if sigma else "e"
    return f"{kind}_{sig}" if i is None else f"{kind}{i}_{sig}"


def _parse_tree_label(lab: str) -> tuple[str, int | None, str]:
    head, sig = lab.rsplit("_", 1)
    sigma = "" if sig == "e" else sig
    kind = head[0]
    idx = int(head[1:]) if len(head) > 1 else None
    return kind, idx, sigma


def _cross_source(sigma: str, rank: int, tree: frozenset[str], maxdigit: int):
    """The rank-th string (1-based) longer than ``sigma`` and incomparable
    with it, enumerated shortlex with digits in descending order over the
    alphabet 0..maxdigit; returns it only when it belongs to the tree."""
    if not sigma:  # every string extends the empty string
        return None
    digits = [str(d) for d in range(maxdigit, -1, -1)]
    count = 0
    budget = 100_000
    for length in itertools.count(len(sigma) + 1):
        for tup in itertools.product(digits, repeat=length):
            budget -= 1
            if budget < 0:
                return None
            tau = "".join(tup)
            if tau.startswith(sigma):
                continue
            count += 1
            if count == rank:
                return tau if tau in tree else None


def _tree_scc(strings: Iterable[str]) -> Generator:
    """One infinite component per tree node; within the component indexed by
    sigma the 4-cycles a{i} -> c{i+1} -> a{i+1} -> b{i} -> a{i} hang off
    a0 -> d -> c1 with d attacking itself.  Across components, a0 of a
    longer incomparable string tau attacks a{r} of sigma where r is tau's
    rank in sigma's canonical enumeration (see _cross_source); the figure
    convention places the example string "10" at rank 2 for sigma "0".

    Decoding is breadth-first over components (shortlex) then index within
    the component: wave 0 emits a0, b0, d and wave i emits c{i}, a{i}, b{i}.
    """
    tree = frozenset(strings)
    if not tree:
        raise ValueError("tree must contain at least the empty string")
    for s in tree:
        if not all(ch.isdigit() for ch in s):
            raise ValueError(f"tree strings must be decimal digits: {s!r}")
        for k in range(len(s)):
            if s[:k] not in tree:
                raise ValueError(f"tree is not prefix-closed: missing {s[:k]!r}")
    order = sorted(tree, key=lambda s: (len(s), s))
    maxdigit = max((int(ch) for s in tree for ch in s), default=1)
    maxdigit = max(maxdigit, 1)
    ncomp = len(order)

    def decode(i: int) -> str:
        wave, off = divmod(i, 3 * ncomp)
        sigma = order[off // 3]
        slot = off % 3
        if wave == 0:
            kind, idx = (("a", 0), ("b", 0), ("d", None))[slot]
        else:
            kind, idx = (("c", wave), ("a", wave), ("b", wave))[slot]
        return _tree_label(kind, idx, sigma)

    def attackers(lab: str) -> tuple[str, ...]:
        kind, i, sigma = _parse_tree_label(lab)
        if kind == "a":
            assert i is not None
            out = [_tree_label("b", i, sigma)]
            if i >= 1:
                out.append(_tree_label("c", i, sigma))
                tau = _cross_source(sigma, i, tree, maxdigit)
                if tau is not None:
                    out.append(_tree_label("a", 0, tau))
            return tuple(out)
        if kind == "b":
            assert i is not None
            return (_tree_label("a", i + 1, sigma),)
        if kind == "c":
            assert i is not None and i >= 1
            out = [_tree_label("a", i - 1, sigma)]
            if i == 1:
                out.append(_tree_label("d", None, sigma))
            return tuple(out)
        if kind == "d":
            return (_tree_label("a", 0, sigma), _tree_label("d", None, sigma))
        raise ValueError(f"not a tree_scc label: {lab!r}")

    return Generator(
        name="tree_scc",
        params={"strings": tuple(order)},
        size=None,
        finitary=True,
        _decode=decode,
        _attackers=attackers,
    )


def _ho_label(kind: str, i: int, level: int | str) -> str:
    return f"{kind}{i}_{level}"


def _high_ordinal(levels: int, width: int) -> Generator:
    """Stacked eroding blocks: finite levels 0..levels plus a final block
    standing for the limit column (level "w").

    Per level: b{i} -> a{i}, a{i} -> b{i+1}, a{i+1} -> a{i}; levels >= 1
    add d{i} -> e{i} -> c{i}, c{i+1} -> c{i}, d{i} -> d{i+1}, a0 -> d0 and
    c0 -> b0.  Between levels: b{i} of level v attacks e{i} of level v+1,
    which attacks a{i} of level v; the limit block links b0 of level j to
    e{j} of level "w", which attacks a0 of level j.  Decoding interleaves
    width waves across the level blocks.
    """
    if levels < 0:
        raise ValueError("levels must be >= 0")
    if width < 1:
        raise ValueError("width must be >= 1")
    lvls: list[int | str] = list(range(levels + 1)) + ["w"]
    has_cde = set(lvls) - {0}
    wave: list[tuple[str, int | str]] = []
    for lvl in lvls:
        wave.append(("a", lvl))
        wave.append(("b", lvl))
        if lvl in has_cde:
            wave += [("c", lvl), ("d", lvl), ("e", lvl)]
    wavesize = len(wave)

    def decode(k: int) -> str:
        i, off = divmod(k, wavesize)
        kind, lvl = wave[off]
        return _ho_label(kind, i, lvl)

    def parse(lab: str) -> tuple[str, int, int | str]:
        head, lvl = lab.rsplit("_", 1)
        return head[0], int(head[1:]), ("w" if lvl == "w" else int(lvl))

    def attackers(lab: str) -> tuple[str, ...]:
        kind, i, lvl = parse(lab)
        out: list[str] = []
        if kind == "a":
            out.append(_ho_label("b", i, lvl))
            if i + 1 < width:
                out.append(_ho_label("a", i + 1, lvl))
            if lvl != "w" and lvl + 1 <= levels:
                out.append(_ho_label("e", i, lvl + 1))
            if lvl != "w" and i == 0 and lvl < width:
                out.append(_ho_label("e", lvl, "w"))
        elif kind == "b":
            if i >= 1:
                out.append(_ho_label("a", i - 1, lvl))
            if i == 0 and lvl in has_cde:
                out.append(_ho_label("c", 0, lvl))
        elif kind == "c":
            out.append(_ho_label("e", i, lvl))
            if i + 1 < width:
                out.append(_ho_label("c", i + 1, lvl))
        elif kind == "d":
            if i == 0:
                out.append(_ho_label("a", 0, lvl))
            else:
                out.append(_ho_label("d", i - 1, lvl))
        elif kind == "e":
            out.append(_ho_label("d", i, lvl))
            if lvl == "w":
                if i <= levels:
                    out.append(_ho_label("b", 0, i))
            elif lvl >= 1:
                out.append(_ho_label("b", i, lvl - 1))
        else:
            raise ValueError(f"not a high_ordinal label: {lab!r}")
        return tuple(out)

    return Generator(
        name="high_ordinal",
        params={"levels": levels, "width": width},
        size=width * wavesize,
        finitary=True,
        _decode=decode,
        _attackers=attackers,
    )


def high_ordinal_probe_set(f: Framework) -> frozenset[int]:
    """The canonical eroding candidate set for high_ordinal truncations:
    every b, the odd-index c's and the even-index d's present in ``f``."""
    out = set()
    for idx, lab in enumerate(f.labels):
        head, _lvl = lab.rsplit("_", 1)
        kind, i = head[0], int(head[1:])
        if kind == "b":
            out.add(idx)
        elif kind == "c" and i % 2 == 1:
            out.add(idx)
        elif kind == "d" and i % 2 == 0:
            out.add(idx)
    return frozenset(out)


def _degenerate(name: str, f: Framework) -> Generator:
    def attackers(lab: str) -> tuple[str, ...]:
        return f.labels_of(
            i
            for i in range(f.n)
            if f.has_attack(i, f.index_of(lab))
        )

    return Generator(
        name=name,
        params={},
        size=f.n,
        finitary=True,
        _decode=lambda i: f.labels[i],
        _attackers=attackers,
    )


def builtin_generator(
    name: str, params: Mapping[str, object] | None = None
) -> Generator:
    """Construct a builtin family by name.

    Families: bs_ladder, omega_chain, omega_chain_xy, tree_scc (param
    ``strings``: prefix-closed digit strings), high_ordinal (params
    ``levels``, ``width``), plus the finite fixtures pt, wr, sk_f, sk_g.
    """
    params = dict(params or {})
    if name == "bs_ladder":
        _no_params(name, params)
        return _bs_ladder()
    if name == "omega_chain":
        _no_params(name, params)
        return _omega_chain()
    if name == "omega_chain_xy":
        _no_params(name, params)
        return _omega_chain_xy()
    if name == "tree_scc":
        strings = params.pop("strings", None)
        _no_params(name, params)
        if strings is None:
            raise ValueError("tree_scc requires a 'strings' parameter")
        if isinstance(strings, str):
            # CLI form: plus-separated, with "eps" naming the empty string.
            strings = set(
                "" if s == "eps" else s for s in strings.split("+") if s
            ) | {""}
        return _tree_scc(strings)
    if name == "high_ordinal":
        levels = int(params.pop("levels", 1))
        width = int(params.pop("width", 3))
        _no_params(name, params)
        return _high_ordinal(levels, width)
    if name in ("pt", "wr", "sk_f", "sk_g"):
        _no_params(name, params)
        return _degenerate(name, fixtures.FIXTURES[name]())
    raise ValueError(f"unknown generator family: {name!r}")


def _no_params(name: str, leftover: Mapping[str, object]) -> None:
    if leftover:
        raise ValueError(
            f"unexpected parameters for {name}: {sorted(leftover)}"
        )
