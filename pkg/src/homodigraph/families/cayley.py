"""Directed Cayley graphs of free products of cyclic groups Z_k * ... * Z_k.

Group elements are kept in normal form: a tuple of ``(generator, exponent)``
pairs with neighbouring generators distinct and exponents in 1..k-1.  The
digraph has an arc g -> g*a_i for every generator.
"""
from __future__ import annotations

import re

from ..errors import InputError
from .base import LabeledBall, implicit_ball

Word = tuple[tuple[int, int], ...]

_TERM = re.compile(r"a(\d+)(?:\^(\d+))?$")


def multiply(g: Word, gen: int, exp: int, k: int) -> Word:
    """Right-multiply ``g`` by ``a_gen ** exp``."""
    exp %= k
    if exp == 0:
        return g
    if g and g[-1][0] == gen:
        e = (g[-1][1] + exp) % k
        return g[:-1] if e == 0 else g[:-1] + ((gen, e),)
    return g + ((gen, exp),)


def word_label(g: Word) -> str:
    if not g:
        return "e"
    return "*".join(f"a{i}" if e == 1 else f"a{i}^{e}" for i, e in g)


def parse_word(label: str, n: int, k: int) -> Word:
    """Inverse of :func:`word_label`; rejects anything not in normal form."""
    if label == "e":
        return ()
    word = []
    for term in label.split("*"):
        m = _TERM.match(term)
        if not m:
            raise InputError(f"malformed group word {label!r}")
        gen, exp = int(m.group(1)), int(m.group(2) or 1)
        if not 1 <= gen <= n or not 1 <= exp <= k - 1:
            raise InputError(f"letter out of range in {label!r}")
        if word and word[-1][0] == gen:
            raise InputError(f"{label!r} is not reduced")
        word.append((gen, exp))
    return tuple(word)


def make_cayley_free_product_ball(n: int, k: int, r: int) -> LabeledBall:
    """Ball of radius ``r`` around the identity.

    For k = 2 each generator is an involution, so g and g*a_i would be joined
    both ways.  A digraph cannot hold that pair, so it is stored once,
    oriented away from the identity (shorter word to longer word);
    :func:`~homodigraph.families.mgraph.star_expand` restores the symmetry.
    """
    if n < 1 or k < 2:
        raise InputError("free product needs n >= 1 and k >= 2")
    gens = range(1, n + 1)

    if k == 2:
        def out_fn(g):
            return [h for h in (multiply(g, i, 1, k) for i in gens) if len(h) > len(g)]

        def in_fn(g):
            return [h for h in (multiply(g, i, 1, k) for i in gens) if len(h) < len(g)]
    else:
        def out_fn(g):
            return [multiply(g, i, 1, k) for i in gens]

        def in_fn(g):
            return [multiply(g, i, -1, k) for i in gens]

    return implicit_ball([()], out_fn, in_fn, r, word_label, f"cayley:{n},{k}")


def make_t_ball(r: int, radius: int) -> LabeledBall:
    """T(r): the free product of r copies of Z_3 (r directed triangles per vertex).

    Every vertex within ``radius - 1`` of the identity has both other corners
    of each of its triangles at distance at most ``radius``, so interior
    triangles are always complete.
    """
    if r < 1:
        raise InputError("T(r) needs r >= 1")
    lb = make_cayley_free_product_ball(r, 3, radius)
    return LabeledBall(lb.ball, lb.labels, f"t:{r}", lb.keys)
