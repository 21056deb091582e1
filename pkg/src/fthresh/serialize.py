"""Report encoding: canonical JSON and a lossless key/value CSV flattening.

Reports are plain nested dicts/lists whose leaves are ints, bools, strings,
or Fractions; Fractions serialize as "num/den" (integers as plain "n").  The
CSV form is two columns, a dotted path and the JSON encoding of the leaf, and
converts back to exactly the same JSON document.  Report keys never look like
integers and never contain dots, which is what makes the flattening lossless.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .monomial import MonomialIdeal
from .polycore import format_rational


def jsonable(value):
    """Normalize a report value tree to JSON-ready types."""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, bool) or isinstance(value, int) or value is None:
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, MonomialIdeal):
        return [list(g) for g in value.generators]
    if isinstance(value, dict):
        out = {}
        for key, val in value.items():
            if not isinstance(key, str) or "." in key or not key:
                raise ValueError(f"report keys must be dot-free strings, got {key!r}")
            out[key] = jsonable(val)
        return out
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


def report_to_json(report) -> str:
    return json.dumps(jsonable(report), sort_keys=True, separators=(",", ":")) + "\n"


def _escape_key(key: str) -> str:
    # dict keys that look like list indices are quoted in the path
    return f"'{key}'" if key.isdigit() else key


def _flatten(value, path: str, rows: list[tuple[str, str]]) -> None:
    if isinstance(value, dict) and value:
        for key in sorted(value):
            part = _escape_key(key)
            _flatten(value[key], f"{path}.{part}" if path else part, rows)
    elif isinstance(value, list) and value:
        for idx, item in enumerate(value):
            _flatten(item, f"{path}.{idx}" if path else str(idx), rows)
    else:
        rows.append((path, json.dumps(value, sort_keys=True)))


def report_to_csv(report) -> str:
    rows: list[tuple[str, str]] = []
    _flatten(jsonable(report), "", rows)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    writer.writerows(rows)
    return buf.getvalue()


def csv_to_report(text: str):
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != ["key", "value"]:
        raise ValueError("not a report CSV (missing key,value header)")
    root: dict | list | None = None

    def is_index(component: str) -> bool:
        return component.isdigit()

    def unescape(component: str) -> str:
        if component.startswith("'") and component.endswith("'"):
            return component[1:-1]
        return component

    def ensure(container, component, trailing):
        nxt = ([] if is_index(trailing) else {})
        if isinstance(container, list):
            idx = int(component)
            while len(container) <= idx:
                container.append(None)
            if container[idx] is None:
                container[idx] = nxt
            return container[idx]
        name = unescape(component)
        if name not in container:
            container[name] = nxt
        return container[name]

    for key, encoded in reader:
        value = json.loads(encoded)
        parts = key.split(".")
        if root is None:
            root = [] if is_index(parts[0]) else {}
        node = root
        for i, part in enumerate(parts[:-1]):
            node = ensure(node, part, parts[i + 1])
        last = parts[-1]
        if isinstance(node, list):
            idx = int(last)
            while len(node) <= idx:
                node.append(None)
            node[idx] = value
        else:
            node[unescape(last)] = value
    return root if root is not None else {}


def monomial_string(exp, variables) -> str:
    if not any(exp):
        return "1"
    parts = []
    for name, e in zip(variables, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def ideal_to_spec(ideal: MonomialIdeal, variables, p: int) -> dict:
    return {
        "p": p,
        "vars": list(variables),
        "generators": [monomial_string(g, variables) for g in ideal.generators],
    }
