"""APX and TGF parsing/serialization plus machine-readable report output.

JSON output is deterministic byte-for-byte: label lists are sorted, object
keys are emitted in fixed order, and nothing iterates an unordered set.
All JSON documents carry a top-level schema version.
"""

from __future__ import annotations

import json
import re
from typing import Any

from .criteria import CriterionReport
from .errors import ParseError
from .framework import Framework, build_framework
from .generators import TruncationReport
from .semantics import ExtensionSet

JSON_SCHEMA_VERSION = 1

_APX_FACT = re.compile(
    r"\s*(?:arg\(\s*([^(),\s]+)\s*\)|att\(\s*([^(),\s]+)\s*,\s*([^(),\s]+)\s*\))\s*\."
)


def parse_apx(text: str) -> Framework:
    """Parse `arg(NAME).` / `att(A,B).` facts; `%` starts a comment.

    Arguments are interned in first-appearance order.  Raises ParseError
    with a line number on junk or on attacks naming undeclared arguments.
    """
    labels: list[str] = []
    seen: set[str] = set()
    attacks: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("%", 1)[0]
        pos = 0
        while pos < len(line):
            if line[pos:].strip() == "":
                break
            m = _APX_FACT.match(line, pos)
            if not m:
                raise ParseError(
                    f"expected arg(...). or att(...,...). near {line[pos:].strip()!r}",
                    lineno,
                )
            if m.group(1) is not None:
                name = m.group(1)
                if name in seen:
                    raise ParseError(f"duplicate argument {name!r}", lineno)
                seen.add(name)
                labels.append(name)
            else:
                a, b = m.group(2), m.group(3)
                for end in (a, b):
                    if end not in seen:
                        raise ParseError(
                            f"attack references undeclared argument {end!r}",
                            lineno,
                        )
                attacks.append((a, b))
            pos = m.end()
    return build_framework(labels, attacks)


def serialize_apx(f: Framework) -> str:
    lines = [f"arg({lab})." for lab in f.labels]
    lines += [
        f"att({f.labels[a]},{f.labels[b]})."
        for a, b in sorted(f.attacks)
    ]
    return "\n".join(lines) + "\n"


def parse_tgf(text: str) -> Framework:
    """Node ids up to a `#` separator line, then `ID ID` edge lines."""
    labels: list[str] = []
    seen: set[str] = set()
    attacks: list[tuple[str, str]] = []
    in_edges = False
    saw_sep = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line == "#":
            if saw_sep:
                raise ParseError("second separator", lineno)
            saw_sep = True
            in_edges = True
            continue
        toks = line.split()
        if not in_edges:
            if len(toks) != 1:
                raise ParseError(
                    f"node line must hold a single id: {line!r}", lineno
                )
            if toks[0] in seen:
                raise ParseError(f"duplicate node {toks[0]!r}", lineno)
            seen.add(toks[0])
            labels.append(toks[0])
        else:
            if len(toks) != 2:
                raise ParseError(
                    f"edge line must hold two ids: {line!r}", lineno
                )
            for t in toks:
                if t not in seen:
                    raise ParseError(f"unknown node {t!r} in edge", lineno)
            attacks.append((toks[0], toks[1]))
    if not saw_sep:
        raise ParseError("missing '#' separator", None)
    return build_framework(labels, attacks)


def serialize_tgf(f: Framework) -> str:
    lines = list(f.labels)
    lines.append("#")
    lines += [
        f"{f.labels[a]} {f.labels[b]}" for a, b in sorted(f.attacks)
    ]
    return "\n".join(lines) + "\n"


def parse_framework(text: str, fmt: str) -> Framework:
    if fmt == "apx":
        return parse_apx(text)
    if fmt == "tgf":
        return parse_tgf(text)
    raise ValueError(f"unknown format {fmt!r}")


# ---------------------------------------------------------------------------
# Report emission.


def _extension_set_doc(es: ExtensionSet) -> dict[str, Any]:
    return {
        "schema": JSON_SCHEMA_VERSION,
        "kind": "extensions",
        "semantics": es.semantics,
        "count": len(es),
        "extensions": [sorted(ext.labels()) for ext in es.extensions],
    }


def _criterion_doc(rep: CriterionReport) -> dict[str, Any]:
    return {
        "schema": JSON_SCHEMA_VERSION,
        "kind": "criterion",
        "criterion": rep.criterion,
        "holds": rep.holds,
        "witness": rep.witness,
    }


def _truncation_doc(rep: TruncationReport) -> dict[str, Any]:
    return {
        "schema": JSON_SCHEMA_VERSION,
        "kind": "truncation",
        "family": rep.family,
        "params": {k: rep.params[k] for k in sorted(rep.params)},
        "semantics": rep.semantics,
        "levels": list(rep.levels),
        "extension_counts": list(rep.extension_counts),
        "tracked": {k: list(rep.tracked[k]) for k in sorted(rep.tracked)},
        "stabilized": {
            k: rep.stabilized[k] for k in sorted(rep.stabilized)
        },
        "gaps": list(rep.gaps),
        "k": rep.k,
    }


def emit_report(
    result: ExtensionSet | CriterionReport | TruncationReport,
    fmt: str = "json",
) -> str:
    """Render a result as stable JSON or a human-readable text block."""
    if isinstance(result, ExtensionSet):
        doc = _extension_set_doc(result)
    elif isinstance(result, CriterionReport):
        doc = _criterion_doc(result)
    elif isinstance(result, TruncationReport):
        doc = _truncation_doc(result)
    else:
        raise TypeError(f"cannot emit {type(result).__name__}")
    if fmt == "json":
        return json.dumps(doc, separators=(",", ":"))
    if fmt != "text":
        raise ValueError(f"unknown output format {fmt!r}")
    return _as_text(doc)


def _as_text(doc: dict[str, Any]) -> str:
    kind = doc["kind"]
    out: list[str] = []
    if kind == "extensions":
        out.append(f"{doc['semantics']}: {doc['count']} extension(s)")
        for ext in doc["extensions"]:
            out.append("  {" + ",".join(ext) + "}")
    elif kind == "criterion":
        out.append(f"{doc['criterion']}: {'holds' if doc['holds'] else 'FAILS'}")
        if doc["witness"]:
            for key in doc["witness"]:
                out.append(f"  {key}: {doc['witness'][key]}")
    else:
        out.append(
            f"{doc['family']} under {doc['semantics']} at levels "
            + ",".join(str(n) for n in doc["levels"])
        )
        out.append(
            "  extensions per level: "
            + ",".join(
                "-" if c is None else str(c)
                for c in doc["extension_counts"]
            )
        )
        for lab in doc["tracked"]:
            flag = "stabilized" if doc["stabilized"][lab] else "not stabilized"
            out.append(
                f"  {lab}: " + ",".join(doc["tracked"][lab]) + f" ({flag})"
            )
        if doc["gaps"]:
            out.append(
                "  levels over the size limit: "
                + ",".join(str(n) for n in doc["gaps"])
            )
    return "\n".join(out) + "\n"
