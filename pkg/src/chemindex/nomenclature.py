"""Parser for substitutive alkane names ("2,2,4-Trimethylpentane") into
carbon-skeleton trees.

The grammar, after lowercasing, is

    name   := group* parent
    group  := locants '-' multiplier? stem
    locants:= integer ((',' | '.') integer)*

where stems end in 'yl' and multipliers are di/tri/tetra/penta with a
locant count to match. Dots are accepted as locant separators on equal
footing with commas since published tables use both. A group always
starts with a digit and a parent never does, so the parser needs no
backtracking. Locant-free historical names (Tetramethylbutane,
Neopentane and friends) go through an alias table first.

Names are taken at face value: no lowest-locant normalization, no
audit of whether the name is the preferred one for its skeleton. A name
is rejected only when it cannot denote a valid skeleton at all (unknown
words, locant out of range, more than 4 bonds at a carbon).
"""
from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph


class ParseError(ValueError):
    """Name cannot be parsed into a valid alkane skeleton."""


PARENTS = {
    name: length
    for length, name in enumerate(
        [
            "methane", "ethane", "propane", "butane", "pentane",
            "hexane", "heptane", "octane", "nonane", "decane",
            "undecane", "dodecane", "tridecane", "tetradecane", "pentadecane",
            "hexadecane", "heptadecane", "octadecane", "nonadecane", "icosane",
        ],
        start=1,
    )
}

MULTIPLIERS = {"di": 2, "tri": 3, "tetra": 4, "penta": 5}

# branch shape -> (carbon count, edges among branch carbons); vertex 0 of
# the branch is the attachment carbon
BRANCH_SHAPES = {
    "methyl": (1, ()),
    "ethyl": (2, ((0, 1),)),
    "propyl": (3, ((0, 1), (1, 2))),
    "isopropyl": (3, ((0, 1), (0, 2))),
    "butyl": (4, ((0, 1), (1, 2), (2, 3))),
    "isobutyl": (4, ((0, 1), (1, 2), (1, 3))),
    "sec-butyl": (4, ((0, 1), (1, 2), (0, 3))),
    "tert-butyl": (4, ((0, 1), (0, 2), (0, 3))),
}

# spellings as they occur in names, longest first so prefixes never win
_STEM_SPELLINGS = [
    ("tert-butyl", "tert-butyl"),
    ("sec-butyl", "sec-butyl"),
    ("isopropyl", "isopropyl"),
    ("n-propyl", "propyl"),
    ("isobutyl", "isobutyl"),
    ("n-butyl", "butyl"),
    ("methyl", "methyl"),
    ("propyl", "propyl"),
    ("butyl", "butyl"),
    ("ethyl", "ethyl"),
]

ALIASES = {
    "tetramethylbutane": "2,2,3,3-tetramethylbutane",
    "neopentane": "2,2-dimethylpropane",
    "isobutane": "2-methylpropane",
    "isopentane": "2-methylbutane",
    "isooctane": "2,2,4-trimethylpentane",
}


@dataclass(frozen=True)
class AlkaneAst:
    """Parent chain length plus (locant, branch shape) substituents."""

    parent_length: int
    substituents: tuple

    @property
    def carbon_count(self):
        return self.parent_length + sum(
            BRANCH_SHAPES[shape][0] for _, shape in self.substituents
        )


class _Cursor:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def rest(self):
        return self.text[self.pos :]

    def take_integer(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError(f"expected a locant at ...{self.rest()!r}")
        return int(self.text[start : self.pos])

    def take_literal(self, lit):
        if self.text.startswith(lit, self.pos):
            self.pos += len(lit)
            return True
        return False


def parse_name(name):
    """Parse one alkane name into an AlkaneAst. Case-insensitive."""
    lowered = name.strip().lower()
    lowered = ALIASES.get(lowered, lowered)
    if not lowered:
        raise ParseError("empty name")
    cur = _Cursor(lowered)
    substituents = []
    while cur.rest() and cur.rest()[0].isdigit():
        locants = [cur.take_integer()]
        while cur.take_literal(",") or cur.take_literal("."):
            locants.append(cur.take_integer())
        if not cur.take_literal("-"):
            raise ParseError(f"expected '-' after locants in {name!r}")
        count = 1
        for word, repeat in MULTIPLIERS.items():
            if cur.rest().startswith(word):
                # a multiplier must be followed by a known stem, otherwise
                # the word belongs to the stem itself
                tail = cur.rest()[len(word) :]
                if any(tail.startswith(sp) for sp, _ in _STEM_SPELLINGS):
                    cur.pos += len(word)
                    count = repeat
                    break
        for spelling, shape in _STEM_SPELLINGS:
            if cur.take_literal(spelling):
                break
        else:
            raise ParseError(f"unknown substituent stem at ...{cur.rest()!r} in {name!r}")
        if len(locants) != count:
            raise ParseError(
                f"{name!r}: multiplier wants {count} locants, got {len(locants)}"
            )
        substituents.extend((loc, shape) for loc in locants)
        cur.take_literal("-")
    parent = cur.rest()
    if parent not in PARENTS:
        raise ParseError(f"unknown parent chain {parent!r} in {name!r}")
    length = PARENTS[parent]
    for loc, _ in substituents:
        if not 1 <= loc <= length:
            raise ParseError(f"{name!r}: locant {loc} outside chain of length {length}")
    ast = AlkaneAst(parent_length=length, substituents=tuple(substituents))
    to_graph(ast, name=name)  # fail fast on impossible valences
    return ast


def to_graph(ast, name=None):
    """Carbon skeleton of a parsed name: the parent chain is a path,
    each branch hangs off its locant. Degrees above 4 are rejected."""
    label = name if name is not None else str(ast)
    edges = [(i, i + 1) for i in range(ast.parent_length - 1)]
    vertex_count = ast.parent_length
    for locant, shape in ast.substituents:
        size, branch_edges = BRANCH_SHAPES[shape]
        base = vertex_count
        vertex_count += size
        edges.append((locant - 1, base))
        edges.extend((base + a, base + b) for a, b in branch_edges)
    g = Graph(vertex_count, edges)
    bad = [v for v, d in enumerate(g.degrees) if d > 4]
    if bad:
        raise ParseError(f"{label!r} puts more than 4 bonds on carbon {bad[0] + 1}")
    return g


def graph_from_name(name):
    return to_graph(parse_name(name), name=name)


def parse_names_text(text):
    """Names from a text block, one per line; '#' lines are comments."""
    names = []
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        names.append(stripped)
    return names
