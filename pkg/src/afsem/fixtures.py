"""Named example frameworks reused across tests, docs and the CLI."""

from __future__ import annotations

from .framework import Framework, build_framework


def t3() -> Framework:
    """The 3-cycle a -> b -> c -> a."""
    return build_framework("abc", [("a", "b"), ("b", "c"), ("c", "a")])


def pt() -> Framework:
    """Pentagon with a tail: a attacks b0 on a 4-cycle b0..b3."""
    return build_framework(
        ["a", "b0", "b1", "b2", "b3"],
        [("a", "b0"), ("b0", "b1"), ("b1", "b2"), ("b2", "b3"), ("b3", "b0")],
    )


def wr() -> Framework:
    """The pentagon-with-tail variant whose b3 also attacks itself."""
    return build_framework(
        ["a", "b0", "b1", "b2", "b3"],
        [
            ("a", "b0"),
            ("b0", "b1"),
            ("b1", "b2"),
            ("b2", "b3"),
            ("b3", "b0"),
            ("b3", "b3"),
        ],
    )


def sk_f() -> Framework:
    """Mutual attacks a<->b<->c plus the self-attack on c."""
    return build_framework(
        "abc",
        [("a", "b"), ("b", "a"), ("b", "c"), ("c", "b"), ("c", "c")],
    )


def sk_g() -> Framework:
    """Orientation of sk_f's conflicts: a -> b <- c plus c's self-attack."""
    return build_framework("abc", [("a", "b"), ("c", "b"), ("c", "c")])


def chain(n: int) -> Framework:
    """n arguments a0..a{n-1} where higher index attacks lower."""
    labels = [f"a{i}" for i in range(n)]
    attacks = [
        (f"a{i}", f"a{j}") for i in range(n) for j in range(n) if i > j
    ]
    return build_framework(labels, attacks)


def chain_xy(n: int) -> Framework:
    """chain(n) extended by mutually attacking x, y with x attacking every
    chain argument."""
    labels = ["x", "y"] + [f"a{i}" for i in range(n)]
    attacks = [("x", "y"), ("y", "x")]
    attacks += [("x", f"a{i}") for i in range(n)]
    attacks += [
        (f"a{i}", f"a{j}") for i in range(n) for j in range(n) if i > j
    ]
    return build_framework(labels, attacks)


def ladder(pairs: int) -> Framework:
    """First ``pairs`` rungs of the two-row ladder: a{i+1} attacks a{i},
    a{i} attacks b{i+1}, b{i} attacks a{i} (indices 1-based)."""
    labels = []
    for i in range(1, pairs + 1):
        labels += [f"a{i}", f"b{i}"]
    attacks = []
    for i in range(1, pairs + 1):
        attacks.append((f"b{i}", f"a{i}"))
        if i + 1 <= pairs:
            attacks.append((f"a{i + 1}", f"a{i}"))
            attacks.append((f"a{i}", f"b{i + 1}"))
    return build_framework(labels, attacks)


def l4() -> Framework:
    """The 8-argument ladder truncation with rungs 1..4."""
    return ladder(4)


FIXTURES = {
    "t3": t3,
    "pt": pt,
    "wr": wr,
    "sk_f": sk_f,
    "sk_g": sk_g,
    "l4": l4,
}
