"""Edge-list and community-file parsing plus result serialization.

Graph files are whitespace-separated edge lists: one "u v" or "u v w" line
per edge, labels are arbitrary non-whitespace tokens, `#` starts a comment,
and an optional first directive line `%directed` switches edge semantics.
A line holding a single token declares an isolated node.  Community files
hold "label community_id" pairs forming a partition: assigning a label
twice is an error.  Results serialize to a JSON document or to CSV with
header label,score,stderr; floats are written with 12 significant digits
and score rows are sorted by score descending, ties by label.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field

from .errors import FormatError
from .graph import Graph


def _strip(line: str) -> str:
    hash_at = line.find("#")
    if hash_at >= 0:
        line = line[:hash_at]
    return line.strip()


def parse_graph(text: str) -> Graph:
    """Parse edge-list text into a Graph; errors carry 1-based line numbers."""
    directed = False
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: list[tuple[int, int, float]] = []
    seen: set[tuple[int, int]] = set()
    directive_allowed = True

    def node(tok: str) -> int:
        i = index.get(tok)
        if i is None:
            i = len(labels)
            index[tok] = i
            labels.append(tok)
        return i

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if line.startswith("%"):
            if not directive_allowed:
                raise FormatError("directive must precede all edges", line=lineno)
            if line != "%directed":
                raise FormatError(f"unknown directive {line!r}", line=lineno)
            directed = True
            directive_allowed = False
            continue
        directive_allowed = False
        toks = line.split()
        if len(toks) == 1:
            node(toks[0])
            continue
        if len(toks) > 3:
            raise FormatError(f"expected 'u v [w]', got {len(toks)} fields", line=lineno)
        u, v = node(toks[0]), node(toks[1])
        if u == v:
            raise FormatError(f"self-loop on {toks[0]!r}", line=lineno)
        w = 1.0
        if len(toks) == 3:
            try:
                w = float(toks[2])
            except ValueError:
                raise FormatError(f"weight {toks[2]!r} is not a number", line=lineno) from None
            if not w > 0:
                raise FormatError(f"weight must be positive, got {toks[2]}", line=lineno)
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge {toks[0]} {toks[1]}", line=lineno)
        seen.add(key)
        edges.append((u, v, w))
    return Graph(len(labels), edges, directed=directed, labels=labels)


def parse_communities(text: str) -> dict[str, list[str]]:
    """Parse "label community_id" lines into {community_id: [labels]}.

    Community order follows first appearance.  Each label may appear once:
    the consumers are partition-based concepts, so overlap is an error.
    """
    out: dict[str, list[str]] = {}
    seen: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        toks = line.split()
        if len(toks) != 2:
            raise FormatError(f"expected 'label community_id', got {len(toks)} fields", line=lineno)
        label, cid = toks
        if label in seen:
            raise FormatError(f"node {label} assigned to a second community", line=lineno)
        seen.add(label)
        out.setdefault(cid, []).append(label)
    return out


def communities_to_masks(g: Graph, communities: dict[str, list[str]], require_cover: bool = True):
    """Turn label lists into node bitmasks in community order.

    With require_cover every graph node must appear in at least one
    community (needed by partition-based solution concepts).
    """
    index = {lab: i for i, lab in enumerate(g.labels)}
    masks: list[int] = []
    covered = 0
    for cid, members in communities.items():
        mask = 0
        for lab in members:
            if lab not in index:
                raise FormatError(f"community {cid!r} names unknown node {lab!r}")
            mask |= 1 << index[lab]
        masks.append(mask)
        covered |= mask
    if require_cover and covered != (1 << g.n) - 1:
        missing = [g.labels[i] for i in range(g.n) if not (covered >> i) & 1]
        raise FormatError(f"nodes without a community: {', '.join(missing)}")
    return masks


def sig12(x: float) -> float:
    """Round to the 12 significant digits the documents serialize with."""
    return float(f"{float(x):.12g}")


@dataclass
class ResultDocument:
    """Serializable result: measure, params, graph shape, sorted scores, meta."""

    measure: str
    params: dict
    directed: bool
    n: int
    m: int
    scores: list[dict]
    meta: dict = field(default_factory=dict)

    @classmethod
    def build(cls, measure: str, params: dict, g: Graph, result, runtime_ms: float,
              warnings: list[str] | None = None) -> "ResultDocument":
        rows = []
        stderr = result.stderr
        for i, (lab, val) in enumerate(zip(result.labels, result.values)):
            row = {"label": str(lab), "score": sig12(val)}
            if stderr is not None:
                row["stderr"] = sig12(stderr[i])
            rows.append(row)
        rows.sort(key=lambda r: (-r["score"], r["label"]))
        meta = {"method": result.method}
        if result.samples is not None:
            meta["samples"] = result.samples
        if result.seed is not None:
            meta["seed"] = result.seed
        meta["runtime_ms"] = sig12(runtime_ms)
        meta["warnings"] = list(warnings or [])
        return cls(
            measure=measure,
            params={k: (sig12(v) if isinstance(v, float) else v) for k, v in params.items()},
            directed=g.directed,
            n=g.n,
            m=g.m,
            scores=rows,
            meta=meta,
        )

    def to_dict(self) -> dict:
        return {
            "measure": self.measure,
            "params": self.params,
            "directed": self.directed,
            "n": self.n,
            "m": self.m,
            "scores": self.scores,
            "meta": self.meta,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ResultDocument":
        raw = json.loads(text)
        return cls(
            measure=raw["measure"],
            params=raw["params"],
            directed=raw["directed"],
            n=raw["n"],
            m=raw["m"],
            scores=raw["scores"],
            meta=raw["meta"],
        )

    def to_csv(self) -> str:
        lines = ["label,score,stderr"]
        for row in self.scores:
            err = row.get("stderr")
            lines.append(
                f"{row['label']},{row['score']:.12g},{'' if err is None else f'{err:.12g}'}"
            )
        return "\n".join(lines) + "\n"


def write_atomic(path: str, text: str) -> None:
    """Write text to path via a same-directory temp file and os.replace."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", text=True)
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


__all__ = [
    "ResultDocument",
    "communities_to_masks",
    "parse_communities",
    "parse_graph",
    "sig12",
    "write_atomic",
]
