"""Family spec strings such as ``dl:cp:3@r4``, ``m:3,2@r5`` or ``line(j:2@m4)``.

Grammar::

    spec   := "line(" spec ")" | family ["@" unit int]
    family := "dl:" base | "m:" n "," k | "j:" r | "t:" r | "y:" n
            | "cayley:" n "," k | "tree:" a "," b | "dcycle:" n | base
    base   := "cp:" n | "kb:" m "," n | "cycle:" m | "tree:" a "," b
    unit   := "r" (radius) | "v" (radius, vertex-based M ball)
            | "m" (J half-width) | "d" (Y gluing depth)
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from ..digraph import BipartiteGraph
from ..errors import InputError, SpecParseError
from .base import LabeledBall, finite_ball
from .bipartite import complete, cp, cycle
from .cayley import make_cayley_free_product_ball, make_t_ball
from .dl import make_dl_ball
from .jt import make_j_segment
from .mgraph import make_m_ball
from .operators import line_ball
from .trees import make_directed_cycle, make_directed_tree_ball
from .yn import make_y_ball

_ARITY = {"cp": 1, "kb": 2, "cycle": 1, "tree": 2, "m": 2, "j": 1, "t": 1, "y": 1,
          "cayley": 2, "dcycle": 1}
_UNITS = {"dl": "r", "m": "rv", "j": "m", "t": "r", "y": "d", "cayley": "r", "tree": "r"}
_DEFAULT_EXTENT = {"dl": 4, "m": 4, "j": 4, "t": 3, "y": 2, "cayley": 3, "tree": 4}
# smallest legal value of each parameter
_MIN = {"cp": (1,), "kb": (1, 1), "cycle": (4,), "tree": (1, 1), "m": (3, 2), "j": (1,),
        "t": (1,), "y": (3,), "cayley": (1, 2), "dcycle": (3,)}
_ATOM = re.compile(r"^([a-z]+):(\d+(?:,\d+)*)$")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = ()
    unit: str | None = None
    extent: int | None = None
    base: "FamilySpec | None" = None

    def __str__(self) -> str:
        if self.kind == "line":
            return f"line({self.base})"
        if self.kind == "dl":
            head = f"dl:{self.base}"
        else:
            head = f"{self.kind}:{','.join(map(str, self.params))}"
        if self.unit is not None:
            head += f"@{self.unit}{self.extent}"
        return head


def _atom(text: str) -> tuple[str, tuple[int, ...]]:
    m = _ATOM.match(text)
    if not m:
        raise SpecParseError(f"cannot parse family {text!r}")
    kind = m.group(1)
    params = tuple(int(p) for p in m.group(2).split(","))
    if kind not in _ARITY:
        raise SpecParseError(f"unknown family {kind!r}")
    if len(params) != _ARITY[kind]:
        raise SpecParseError(f"{kind} takes {_ARITY[kind]} parameter(s)")
    low = [lo for v, lo in zip(params, _MIN[kind]) if v < lo]
    if low:
        raise SpecParseError(f"{kind} parameters must be at least {_MIN[kind]}, got {params}")
    if kind == "cycle" and params[0] % 2:
        raise SpecParseError("cycle length must be even")
    return kind, params


def parse_spec(text: str) -> FamilySpec:
    text = text.strip()
    if text.startswith("line(") and text.endswith(")"):
        return FamilySpec("line", base=parse_spec(text[5:-1]))
    body, unit, extent = text, None, None
    if "@" in text:
        body, tail = text.rsplit("@", 1)
        m = re.match(r"^([a-z])(\d+)$", tail)
        if not m:
            raise SpecParseError(f"bad extent {tail!r} in {text!r}")
        unit, extent = m.group(1), int(m.group(2))
    if body.startswith("dl:"):
        kind, params = _atom(body[3:])
        if kind not in ("cp", "kb", "cycle", "tree"):
            raise SpecParseError(f"DL base must be cp, kb, cycle or tree, got {kind!r}")
        fam, base = "dl", FamilySpec(kind, params)
    else:
        kind, params = _atom(body)
        fam, base = kind, None
    if fam in _UNITS:
        if unit is None:
            unit, extent = _UNITS[fam][0], _DEFAULT_EXTENT[fam]
        if unit not in _UNITS[fam]:
            raise SpecParseError(f"{fam} takes extent unit {_UNITS[fam]!r}, got {unit!r}")
    elif unit is not None:
        raise SpecParseError(f"{fam} is finite and takes no extent")
    if fam == "dl":
        return FamilySpec("dl", (), unit, extent, base)
    return FamilySpec(fam, params, unit, extent)


def base_bipartite(spec: FamilySpec) -> BipartiteGraph:
    p = spec.params
    if spec.kind == "cp":
        return cp(*p)
    if spec.kind == "kb":
        return complete(*p)
    if spec.kind == "cycle":
        return cycle(*p)
    raise InputError(f"{spec.kind} is not a finite bipartite base")


def build(spec: FamilySpec | str) -> LabeledBall:
    """Construct the ball described by ``spec``."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    k, p, e = spec.kind, spec.params, spec.extent
    if k == "line":
        inner = build(spec.base)
        fb, arcs = line_ball(inner.ball)
        labels = {i: f"{inner.labels[u]}->{inner.labels[v]}" for i, (u, v) in enumerate(arcs)}
        return LabeledBall(fb, labels, str(spec), {i: a for i, a in enumerate(arcs)})
    if k == "dl":
        b = spec.base
        if b.kind == "tree":
            lb = make_directed_tree_ball(b.params[0], b.params[1], e)
        else:
            lb = make_dl_ball(base_bipartite(b), e)
    elif k == "m":
        lb = make_m_ball(p[0], p[1], e, "vertex" if spec.unit == "v" else "block")
    elif k == "j":
        lb = make_j_segment(p[0], e)
    elif k == "t":
        lb = make_t_ball(p[0], e)
    elif k == "y":
        lb = make_y_ball(p[0], e)
    elif k == "cayley":
        lb = make_cayley_free_product_ball(p[0], p[1], e)
    elif k == "tree":
        lb = make_directed_tree_ball(p[0], p[1], e)
    elif k == "dcycle":
        lb = make_directed_cycle(p[0])
    else:
        bip = base_bipartite(spec)
        g = bip.to_digraph()
        fb = finite_ball(g, [min(g.vertices)])
        xs = set(bip.part_x)
        lb = LabeledBall(fb, {v: f"{'x' if v in xs else 'y'}{v}" for v in g.vertices}, str(spec))
    return LabeledBall(lb.ball, lb.labels, str(spec), lb.keys)
