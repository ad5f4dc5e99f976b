"""JSON form of labelled balls.

Every list is sorted and keys are sorted, so writing the same ball twice
gives identical bytes, and load followed by dump is the identity.
"""
from __future__ import annotations

import json
from typing import Any

from .digraph import Digraph, FiniteBall, bfs_depths
from .errors import InputError
from .families.base import LabeledBall

FORMAT_VERSION = 1


def ball_to_dict(lb: LabeledBall) -> dict[str, Any]:
    b = lb.ball
    verts = list(b.graph.vertices)
    return {
        "formatVersion": FORMAT_VERSION,
        "family": lb.family,
        "vertices": verts,
        "labels": {str(v): lb.labels[v] for v in verts},
        "arcs": [list(a) for a in b.graph.sorted_arcs()],
        "center": b.center,
        "radius": b.radius,
        "interior": sorted(b.interior),
        "depth": {str(v): b.depth[v] for v in verts},
        "outComplete": sorted(b.out_complete),
        "inComplete": sorted(b.in_complete),
    }


def dumps(lb: LabeledBall) -> str:
    return json.dumps(ball_to_dict(lb), sort_keys=True, separators=(",", ":")) + "\n"


def ball_from_dict(data: dict[str, Any]) -> LabeledBall:
    """Rebuild a LabeledBall; any structural problem raises InputError."""
    try:
        if data["formatVersion"] != FORMAT_VERSION:
            raise InputError(f"unsupported formatVersion {data['formatVersion']}")
        verts = [int(v) for v in data["vertices"]]
        g = Digraph(verts, [(int(a), int(b)) for a, b in data["arcs"]])
        interior = frozenset(int(v) for v in data["interior"])
        depth = {int(k): int(v) for k, v in data.get("depth", {}).items()}
        if not depth:
            depth = bfs_depths(g, [int(data["center"])])
        oc = frozenset(int(v) for v in data.get("outComplete", interior))
        ic = frozenset(int(v) for v in data.get("inComplete", interior))
        fb = FiniteBall(g, int(data["center"]), int(data["radius"]), interior, depth, oc, ic)
        labels = {int(k): str(v) for k, v in data["labels"].items()}
        return LabeledBall(fb, labels, str(data["family"]))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed ball file: {exc}") from exc


def loads(text: str) -> LabeledBall:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError("ball file must hold a JSON object")
    return ball_from_dict(data)


def save(lb: LabeledBall, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(lb))


def load(path: str) -> LabeledBall:
    try:
        with open(path, encoding="utf-8") as fh:
            return loads(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
