"""Default parameters shipped with the package."""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources


@lru_cache(maxsize=1)
def load_manifest() -> dict:
    text = resources.files("homodigraph").joinpath("data/manifest.json").read_text(encoding="utf-8")
    return json.loads(text)


def family_kind(family: str) -> str:
    if family.startswith("line("):
        return "line"
    head = family.split(":", 1)[0]
    return head if head in load_manifest()["defaults"] else "finite"


def defaults_for(family: str) -> dict:
    return dict(load_manifest()["defaults"][family_kind(family)])
