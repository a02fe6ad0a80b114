"""Shuffles and twists of the Farey tree acting on boundary words, and the
piecewise-Moebius approximants of jimm obtained by truncating the XOR mask."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .boundary import FareyInterval, interval_of_prefix, prefix_matrix
from .matrix import Mat, mobius_apply
from .surd import INF

Bits = tuple


# automorphisms as bit-rewriting closures ------------------------------------------------


def shuffle_set(vertices: Iterable[Bits]) -> Callable[[Bits], Bits]:
    """The product of shuffles over a vertex set.

    Bit i of a word is flipped iff the word's own prefix of length i is a
    vertex of the set; shuffles at ancestors are applied after their descendants.
    """
    vs = frozenset(tuple(v) for v in vertices)

    def act(word: Bits) -> Bits:
        w = tuple(word)
        return tuple(b ^ (w[:i] in vs) for i, b in enumerate(w))

    return act


def shuffle(v: Bits) -> Callable[[Bits], Bits]:
    """Swap the two subtrees hanging below the vertex v."""
    return shuffle_set([v])


def twist(v: Bits) -> Callable[[Bits], Bits]:
    """Shuffle every vertex of the branch at v: flips all bits below v."""
    v = tuple(v)
    n = len(v)

    def act(word: Bits) -> Bits:
        w = tuple(word)
        if w[:n] != v:
            return w
        return w[:n] + tuple(1 - b for b in w[n:])

    return act


def compose(*fs):
    def act(word):
        for f in reversed(fs):
            word = f(word)
        return word

    return act


def vertices_up_to(depth: int) -> list[Bits]:
    """Trivalent vertices of the positive half-tree at distance < depth from v* (the empty prefix)."""
    return [v for k in range(depth) for v in itertools.product((0, 1), repeat=k)]


def jimm_mask_bits(n: int) -> Bits:
    """The first n bits of the zig-zag word (01)^w."""
    return tuple(i & 1 for i in range(n))


def jimm_tree_action(word: Bits) -> Bits:
    """XOR with (01)^w: the shuffle of every vertex at odd distance."""
    return tuple(b ^ (i & 1) for i, b in enumerate(word))


def negation_action(word: Bits) -> Bits:
    return tuple(1 - b for b in word)


def count_automorphisms(depth: int) -> int:
    """Order of the group generated by the shuffles at vertices of distance < depth,
    acting on the 2^depth words of that length."""
    from sympy.combinatorics import Permutation, PermutationGroup

    if depth < 1:
        return 1
    if depth > 12:
        raise ValueError("depth is limited to 12")
    leaves = list(itertools.product((0, 1), repeat=depth))
    index = {w: i for i, w in enumerate(leaves)}
    gens = []
    for v in vertices_up_to(depth):
        act = shuffle(v)
        gens.append(Permutation([index[act(w)] for w in leaves]))
    return int(PermutationGroup(gens).order())


# piecewise Moebius approximants --------------------------------------------------------------


@dataclass(frozen=True)
class Piece:
    domain: FareyInterval
    matrix: Mat
    image: FareyInterval
    prefix: Bits


@dataclass(frozen=True)
class PiecewiseMobius:
    pieces: tuple

    def piece_at(self, x) -> Piece:
        for p in self.pieces:
            if p.domain.contains(x):
                return p
        raise ValueError(f"{x} is outside the domain")

    def __call__(self, x):
        return mobius_apply(self.piece_at(x).matrix, x)

    def __len__(self):
        return len(self.pieces)


def _image_interval(m: Mat, dom: FareyInterval) -> FareyInterval:
    a, b = mobius_apply(m, dom.lo), mobius_apply(m, dom.hi)
    if a is INF or (b is not INF and a > b):
        a, b = b, a
    return FareyInterval(a, b)


def jimm_approximant(n: int, domain: str = "0:1", merge: bool = True) -> PiecewiseMobius:
    """XOR with the first n bits of (01)^w, as explicit (interval, matrix) pieces.

    ``domain`` is "0:1" (words starting with 1) or "0:inf" (all positive words).
    Adjacent pieces with the same matrix are merged.
    """
    if n < 1:
        raise ValueError("depth must be >= 1")
    mask = jimm_mask_bits(n)
    starts = [(1,)] if domain == "0:1" else [(0,), (1,)]
    raw = []
    for s in starts:
        for rest in itertools.product((0, 1), repeat=n - 1):
            w = s + rest
            w2 = tuple(b ^ m for b, m in zip(w, mask))
            g, g2 = prefix_matrix(w), prefix_matrix(w2)
            dom = interval_of_prefix(w)
            raw.append(Piece(dom, g2 @ g.inverse(), interval_of_prefix(w2), w))
    raw.sort(key=lambda p: p.domain.lo)
    if not merge:
        return PiecewiseMobius(tuple(raw))
    merged = []
    for p in raw:
        if merged and merged[-1].matrix == p.matrix and merged[-1].domain.hi == p.domain.lo:
            q = merged.pop()
            common = _common_prefix(q.prefix, p.prefix)
            dom = FareyInterval(q.domain.lo, p.domain.hi)
            merged.append(Piece(dom, p.matrix, _image_interval(p.matrix, dom), common))
        else:
            merged.append(p)
    return PiecewiseMobius(tuple(merged))


def _common_prefix(a, b):
    out = []
    for x, y in zip(a, b):
        if x != y:
            break
        out.append(x)
    return tuple(out)


def box_graph(n: int, domain: str = "0:1") -> list[tuple]:
    """Rows (x_lo, x_hi, y_lo, y_hi): the graph of jimm over each piece lies in the box."""
    return [(p.domain.lo, p.domain.hi, p.image.lo, p.image.hi) for p in jimm_approximant(n, domain).pieces]


def _fmt(v):
    return "inf" if v is INF else str(Fraction(v))


def box_graph_csv(n: int, domain: str = "0:1") -> str:
    lines = ["x_lo,x_hi,y_lo,y_hi"]
    for row in box_graph(n, domain):
        lines.append(",".join(_fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def box_graph_svg(n: int, size: int = 512) -> str:
    """SVG of the boxes over [0,1] (y axis pointing up)."""
    rows = box_graph(n, "0:1")
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white" stroke="black"/>',
    ]
    for x0, x1, y0, y1 in rows:
        X0, X1 = float(x0) * size, float(x1) * size
        Y0, Y1 = (1 - float(y1)) * size, (1 - float(y0)) * size
        parts.append(
            f'<rect x="{X0:.4f}" y="{Y0:.4f}" width="{X1 - X0:.4f}" height="{Y1 - Y0:.4f}" '
            'fill="steelblue" fill-opacity="0.5" stroke="navy" stroke-width="0.3"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
