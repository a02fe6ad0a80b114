"""PGL(2,Z) as words in named generators, and the outer automorphism on words and matrices."""

from __future__ import annotations

import re

from .cf import DomainError
from .matrix import IDENTITY, Mat

GENERATORS = {
    "S": Mat(0, 1, -1, 0),
    "L": Mat(1, -1, 1, 0),
    "L2": Mat(1, -1, 1, 0) @ Mat(1, -1, 1, 0),
    "V": Mat(-1, 0, 0, 1),
    "T": Mat(1, 1, 0, 1),
    "Ttilde": Mat(1, 1, 1, 0),
    "U": Mat(0, 1, 1, 0),
    "K": Mat(-1, 1, 0, 1),
}

# projective orders of the torsion generators
_ORDER = {"S": 2, "U": 2, "V": 2, "K": 2, "L": 3, "L2": 3}

_JIMM = {"S": "V", "V": "S", "T": "Ttilde", "Ttilde": "T", "U": "U", "K": "K", "L": "L", "L2": "L2"}

_ALIASES = {"T~": "Ttilde", "Tt": "Ttilde", "Ttilde": "Ttilde"}


class Word(tuple):
    """A reduced word: a tuple of (generator, nonzero exponent) pairs."""

    def __new__(cls, letters=()):
        return super().__new__(cls, reduce_letters(letters))

    @classmethod
    def parse(cls, text: str) -> "Word":
        out = []
        for tok in text.split():
            m = re.fullmatch(r"([A-Za-z]+2?~?)(?:\^\(?(-?\d+)\)?)?", tok)
            if not m:
                raise ValueError(f"bad generator token {tok!r}")
            name = _ALIASES.get(m.group(1), m.group(1))
            if name not in GENERATORS:
                raise ValueError(f"unknown generator {m.group(1)!r}")
            out.append((name, int(m.group(2) or 1)))
        return cls(out)

    def __str__(self):
        parts = []
        for g, e in self:
            name = "T~" if g == "Ttilde" else g
            parts.append(name if e == 1 else f"{name}^{e}")
        return " ".join(parts)

    def __mul__(self, other):
        return Word(tuple(self) + tuple(other))

    def inverse(self) -> "Word":
        return Word([(g, -e) for g, e in reversed(self)])

    def __pow__(self, n: int):
        base = self if n >= 0 else self.inverse()
        return Word(tuple(base) * abs(n))


def reduce_letters(letters):
    out = []
    for g, e in letters:
        if out and out[-1][0] == g:
            e += out.pop()[1]
        if g in _ORDER:
            e %= _ORDER[g]
        if e:
            out.append((g, e))
    return tuple(out)


def word_to_matrix(w) -> Mat:
    m = IDENTITY
    for g, e in Word(w):
        m = m @ (GENERATORS[g] ** e)
    return m


def matrix_to_word(m: Mat, strategy: str = "floor") -> Word:
    """Euclidean decomposition into T-powers and S, with a trailing V when det = -1.

    ``strategy`` picks the integer part used at each step: "floor" peels
    T^floor(a/c), "ceil" peels T^ceil(a/c). Both give valid words.
    """
    det = m.det()
    if abs(det) != 1:
        raise DomainError(f"matrix {m} has determinant {det}, not +-1")
    tail = []
    if det == -1:
        m = m @ GENERATORS["V"]
        tail = [("V", 1)]
    a, b, c, d = m.a, m.b, m.c, m.d
    letters = []
    while c != 0:
        k = a // c if strategy == "floor" else -((-a) // c)
        letters.append(("T", k))
        letters.append(("S", 1))
        # M = T^k S^-1 M' with M' = S T^-k M
        a, b = a - k * c, b - k * d
        a, b, c, d = c, d, -a, -b
    # now M = +-[[1, b'], [0, 1]]
    letters.append(("T", b * a))
    return Word(letters + tail)


def jimm_word(w) -> Word:
    return Word([(_JIMM[g], e) for g, e in Word(w)])


def jimm_matrix(m: Mat, strategy: str = "floor") -> Mat:
    return word_to_matrix(jimm_word(matrix_to_word(m, strategy)))


# presentations: generator images under the automorphism, and relators
PRESENTATIONS = [
    {
        "generators": ["V", "U", "K"],
        "images": {"V": "U V", "U": "U", "K": "K"},
        "relators": ["V V", "U U", "K K", "V U V U", "K U K U K U"],
    },
    {
        "generators": ["V", "U", "L"],
        "images": {"V": "U V", "U": "U", "L": "L"},
        "relators": ["V V", "U U", "L U L U", "V U V U", "L L L"],
    },
    {
        "generators": ["S", "V", "K"],
        "images": {"S": "V", "V": "S", "K": "K"},
        "relators": ["V V", "S S", "K K", "S V S V", "K S V K S V K S V"],
    },
    {
        "generators": ["T", "U"],
        "images": {"T": "T~", "U": "U"},
        "relators": ["U U", "T^-2 U T U T^-2 U T U", "U T U T^-1 U T U T^-1 U T U T^-1"],
    },
    {
        "generators": ["T", "T~"],
        "images": {"T": "T~", "T~": "T"},
        "relators": ["T^-1 T~ T^-1 T~", "T^-3 T~^2 T^-3 T~^2", "T^-2 T~^2 T^-2 T~^2 T^-2 T~^2"],
    },
]


def substitute(relator: str, images: dict) -> Word:
    """Replace each generator of a relator by its image word."""
    out = []
    for g, e in Word.parse(relator):
        key = "T~" if g == "Ttilde" else g
        img = Word.parse(images[key])
        out.extend(img ** e)
    return Word(out)
