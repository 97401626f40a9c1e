"""The JSON interchange document for polymsets.

Document shape::

    {
      "dim": 2,
      "entries": [
        [[0, 0], 1],
        [[1, 0], 3]
      ],
      "domain_base": [{"name": "form", "elements": ["cube", "sphere"]}]
    }

Each entries item is an [index, multiplicity] pair.  A canonical document
lists entries in lexicographic index order with no zero multiplicities and
no duplicate indices; loaders accept unsorted input, explicit zeros, and
duplicates (which are summed) and canonicalize.  domain_base is optional
advisory metadata; when present it must have dim domains and every index
must fall inside them.
"""

from __future__ import annotations

import json
from typing import Any

from mnum.polymset import DomainBase, Polymset


class DocumentError(ValueError):
    """A structurally invalid interchange document."""


def encode(pm: Polymset, base: DomainBase | None = None) -> dict[str, Any]:
    """The canonical document for pm, as plain JSON-ready data."""
    doc: dict[str, Any] = {
        "dim": pm.dim,
        "entries": [[list(idx), m] for idx, m in pm.items()],
    }
    if base is not None:
        base.validate(pm)
        doc["domain_base"] = [
            {"name": name, "elements": list(elements)}
            for name, elements in base.domains
        ]
    return doc


def decode(doc: Any) -> tuple[Polymset, DomainBase | None]:
    """Read a document, canonicalizing non-canonical input."""
    if not isinstance(doc, dict):
        raise DocumentError(f"document must be an object, got {type(doc).__name__}")
    if "dim" not in doc:
        raise DocumentError("document is missing 'dim'")
    dim = doc["dim"]
    entries = doc.get("entries", [])
    if not isinstance(entries, (list, tuple)):
        raise DocumentError("'entries' must be a list of [index, multiplicity] pairs")
    components = []
    for item in entries:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise DocumentError(
                f"each entry must be an [index, multiplicity] pair, got {item!r}"
            )
        idx, mult = item
        if not isinstance(idx, (list, tuple)):
            raise DocumentError(f"entry index must be a list, got {idx!r}")
        components.append((tuple(idx), mult))
    try:
        pm = Polymset(dim, components)
    except ValueError as e:
        raise DocumentError(str(e)) from None
    base = None
    if doc.get("domain_base") is not None:
        base = _decode_base(doc["domain_base"])
        try:
            base.validate(pm)
        except ValueError as e:
            raise DocumentError(str(e)) from None
    return pm, base


def _decode_base(raw: Any) -> DomainBase:
    if not isinstance(raw, (list, tuple)):
        raise DocumentError("'domain_base' must be a list of domains")
    pairs = []
    for item in raw:
        if (
            not isinstance(item, dict)
            or not isinstance(item.get("name"), str)
            or not isinstance(item.get("elements"), (list, tuple))
        ):
            raise DocumentError(
                "each domain needs a 'name' string and an 'elements' list, "
                f"got {item!r}"
            )
        if not all(isinstance(e, str) for e in item["elements"]):
            raise DocumentError(f"domain elements must be strings, got {item!r}")
        pairs.append((item["name"], item["elements"]))
    try:
        return DomainBase(pairs)
    except ValueError as e:
        raise DocumentError(str(e)) from None


def format_document(doc: dict[str, Any]) -> str:
    """Stable text form: one entry per line, two-space indent."""
    lines = ["{", f'  "dim": {json.dumps(doc["dim"])},']
    entries = doc.get("entries", [])
    if entries:
        lines.append('  "entries": [')
        for i, entry in enumerate(entries):
            comma = "," if i + 1 < len(entries) else ""
            lines.append(f"    {json.dumps(entry)}{comma}")
        body = "  ]"
    else:
        body = '  "entries": []'
    if doc.get("domain_base") is not None:
        lines.append(body + ",")
        lines.append('  "domain_base": [')
        base = doc["domain_base"]
        for i, domain in enumerate(base):
            comma = "," if i + 1 < len(base) else ""
            lines.append(f"    {json.dumps(domain)}{comma}")
        lines.append("  ]")
    else:
        lines.append(body)
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps(pm: Polymset, base: DomainBase | None = None) -> str:
    """Canonical document text for pm."""
    return format_document(encode(pm, base))


def loads(text: str) -> tuple[Polymset, DomainBase | None]:
    """Parse document text; non-canonical input is canonicalized."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e}") from None
    return decode(doc)


def canonicalize(text: str) -> str:
    """Rewrite document text in canonical form; idempotent."""
    pm, base = loads(text)
    return dumps(pm, base)
