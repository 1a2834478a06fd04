"""
Element values and their canonical labels.

Atoms are plain strings. Product constructions build composite elements
(pairs, tagged triples, coproduct injections, digraph arcs) that stay
structured in memory and serialize to canonical label strings:

    Pair(x, y)        -> "(x,y)"
    Tagged(t, x, y)   -> "t:x:y"      (composite children in parentheses)
    Inj(t, x)         -> "t:x"
    Arc(e, x, y)      -> "<e,x,y>"
    int n             -> "#n"

Elements whose label starts with "[" or "{" (morphisms and functions used
as exponential carrier elements) are opaque: parsing them back yields the
label string itself, which re-serializes to the same text.
"""

from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Hashable, Iterable, Iterator, List

Element = Hashable

# Characters that may not appear in an atom label
RESERVED = set(":(),<>[]{}|#")


@dataclass(frozen=True)
class Pair:
    """Plain ordered pair, e.g. a vertex (v, w) of a box product."""
    left: Any
    right: Any


@dataclass(frozen=True)
class Tagged:
    """Element (tag, left, right) of a tagged disjoint union."""
    tag: int
    left: Any
    right: Any


@dataclass(frozen=True)
class Inj:
    """Coproduct injection (tag, value), e.g. (1, v) or (2, e)."""
    tag: int
    value: Any


@dataclass(frozen=True)
class Arc:
    """Arc (e, x, y) of an associated digraph."""
    edge: Any
    tail: Any
    head: Any


class FrozenMap(Mapping):
    """Immutable, hashable dict used for morphism components and functions."""

    __slots__ = ("_data", "_hash")

    def __init__(self, data: Any = ()):
        self._data = dict(data)
        self._hash = None

    def __getitem__(self, key):
        return self._data[key]

    def __iter__(self) -> Iterator:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __contains__(self, key) -> bool:
        return key in self._data

    def __eq__(self, other) -> bool:
        if isinstance(other, FrozenMap):
            return self._data == other._data
        if isinstance(other, Mapping):
            return self._data == dict(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"FrozenMap({self._data!r})"

    def label(self) -> str:
        items = sorted(self._data.items(), key=lambda kv: label(kv[0]))
        return "{" + ",".join(f"{label(k)}->{label(v)}" for k, v in items) + "}"


@lru_cache(maxsize=1 << 16)
def label(element: Element) -> str:
    """Canonical label of an element."""
    if isinstance(element, str):
        return element
    if isinstance(element, Pair):
        return f"({label(element.left)},{label(element.right)})"
    if isinstance(element, Tagged):
        return f"{element.tag}:{_child(element.left)}:{_child(element.right)}"
    if isinstance(element, Inj):
        return f"{element.tag}:{_child(element.value)}"
    if isinstance(element, Arc):
        return f"<{label(element.edge)},{label(element.tail)},{label(element.head)}>"
    if isinstance(element, bool):
        raise TypeError(f"Cannot label element {element!r}")
    if isinstance(element, int):
        return f"#{element}"
    if hasattr(element, "label"):
        return element.label()
    raise TypeError(f"Cannot label element {element!r}")


def _child(element: Element) -> str:
    text = label(element)
    if isinstance(element, (Tagged, Inj)):
        return f"({text})"
    return text


def ordered(elements: Iterable[Element]) -> List[Element]:
    """Elements sorted by canonical label."""
    return sorted(elements, key=label)


def is_atom_label(text: str) -> bool:
    """True if text can be used verbatim as an atom."""
    return bool(text) and not any(c in RESERVED or c.isspace() for c in text)


# =============================================================================
# Parsing
# =============================================================================

class _LabelParser:
    """Recursive-descent parser for canonical labels."""

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> Element:
        value = self._label()
        if self.pos != len(self.text):
            raise ValueError(f"Trailing characters at {self.pos} in {self.text!r}")
        return value

    def _peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, char: str) -> None:
        if self._peek() != char:
            raise ValueError(f"Expected {char!r} at {self.pos} in {self.text!r}")
        self.pos += 1

    def _label(self) -> Element:
        if self._peek() == "#":
            return self._number()
        if self._peek() in ("(", "<", "[", "{"):
            return self._child()
        atom = self._atom()
        if atom.isdigit() and self._peek() == ":":
            self.pos += 1
            left = self._child()
            if self._peek() == ":":
                self.pos += 1
                right = self._child()
                return Tagged(int(atom), left, right)
            return Inj(int(atom), left)
        return atom

    def _child(self) -> Element:
        char = self._peek()
        if char == "(":
            self.pos += 1
            first = self._label()
            if self._peek() == ",":
                self.pos += 1
                second = self._label()
                self._expect(")")
                return Pair(first, second)
            self._expect(")")
            return first
        if char == "<":
            self.pos += 1
            edge = self._label()
            self._expect(",")
            tail = self._label()
            self._expect(",")
            head = self._label()
            self._expect(">")
            return Arc(edge, tail, head)
        if char in ("[", "{"):
            return self._opaque()
        if char == "#":
            return self._number()
        return self._atom()

    def _number(self) -> int:
        self._expect("#")
        start = self.pos
        if self._peek() == "-":
            self.pos += 1
        while self._peek().isdigit():
            self.pos += 1
        digits = self.text[start:self.pos]
        if not digits.lstrip("-"):
            raise ValueError(f"Expected digits at {start} in {self.text!r}")
        return int(digits)

    def _atom(self) -> str:
        start = self.pos
        while self.pos < len(self.text):
            char = self.text[self.pos]
            if char in RESERVED or char.isspace():
                break
            self.pos += 1
        if self.pos == start:
            raise ValueError(f"Empty atom at {start} in {self.text!r}")
        return self.text[start:self.pos]

    def _opaque(self) -> str:
        start = self.pos
        depth = 0
        while self.pos < len(self.text):
            char = self.text[self.pos]
            self.pos += 1
            if char in "[{":
                depth += 1
            elif char in "]}":
                depth -= 1
                if depth == 0:
                    return self.text[start:self.pos]
        raise ValueError(f"Unbalanced brackets in {self.text!r}")


def parse_label(text: str) -> Element:
    """
    Rebuild an element from its canonical label.

    Labels that do not follow the composite grammar are kept as opaque
    string atoms, so label(parse_label(s)) == s for every string s.

    Raises:
        ValueError: If text is empty.
    """
    if not text:
        raise ValueError("Empty label")
    try:
        element = _LabelParser(text).parse()
    except ValueError:
        return text
    if label(element) != text:
        return text
    return element
