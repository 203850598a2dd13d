"""Concrete groups used as edge labels.

Elements are plain immutable Python values (``int`` or ``tuple``); the group
object that owns them knows how to multiply, invert, parse and render them.
Keeping elements as bare values makes them hashable and cheap to compare,
which matters because every orthodoxy test is an equality check.

Supported groups:

* ``CyclicGroup(k)``: residues ``0 .. k-1`` under addition mod ``k``.
* ``IntegerGroup()``: the integers under addition (arbitrary precision).
* ``FreeGroup(g)``: reduced words over generators ``1 .. g``, stored as tuples
  of signed generator indices (``-i`` is the inverse of generator ``i``).
* ``DirectProduct(factors)``: tuples of component elements.
"""

from __future__ import annotations

import random
import re
from abc import ABC, abstractmethod
from typing import Any, Hashable, Sequence

from .errors import ParseError, UsageError

GroupElement = Hashable

_INT_RE = re.compile(r"[+-]?\d+\Z")


class Group(ABC):
    """A group Γ together with a text syntax for its elements."""

    identity: GroupElement

    @abstractmethod
    def contains(self, x: Any) -> bool:
        """Return True if ``x`` is a canonical element of this group."""

    @abstractmethod
    def _mul(self, g, h):
        ...

    @abstractmethod
    def inverse(self, g):
        ...

    @abstractmethod
    def parse(self, text: str) -> GroupElement:
        ...

    @abstractmethod
    def render(self, g) -> str:
        ...

    @abstractmethod
    def spec(self) -> str:
        """Header text naming this group in instance files."""

    @abstractmethod
    def random_element(self, rng: random.Random) -> GroupElement:
        ...

    def op(self, g, h):
        """Return the product ``g·h``."""
        if not (self._quick_check(g) and self._quick_check(h)):
            raise UsageError(f"operands {g!r}, {h!r} are not elements of {self.spec()}")
        return self._mul(g, h)

    def _quick_check(self, x) -> bool:
        return self.contains(x)

    def is_identity(self, g) -> bool:
        return g == self.identity

    def prod(self, elements) -> GroupElement:
        """Ordered product of an iterable of elements."""
        acc = self.identity
        for x in elements:
            acc = self.op(acc, x)
        return acc

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.spec()}>"

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and other.spec() == self.spec()

    def __hash__(self) -> int:
        return hash(self.spec())


def _parse_int(text: str) -> int:
    token = text.strip()
    if not _INT_RE.match(token):
        raise ParseError(f"expected an integer, got {token!r}")
    return int(token)


class CyclicGroup(Group):
    """Z_k written additively; ``CyclicGroup(2)`` is Z2."""

    def __init__(self, k: int):
        if not isinstance(k, int) or k < 2:
            raise UsageError(f"cyclic group order must be an integer >= 2, got {k!r}")
        self.k = k
        self.identity = 0

    def contains(self, x) -> bool:
        return type(x) is int and 0 <= x < self.k

    def _mul(self, g, h):
        return (g + h) % self.k

    def inverse(self, g):
        return (-g) % self.k

    def parse(self, text: str) -> int:
        return _parse_int(text) % self.k

    def render(self, g) -> str:
        return str(g)

    def spec(self) -> str:
        return "z2" if self.k == 2 else f"zk {self.k}"

    def random_element(self, rng):
        return rng.randrange(self.k)


def Z2() -> CyclicGroup:
    return CyclicGroup(2)


class IntegerGroup(Group):
    """The infinite cyclic group Z."""

    identity = 0

    def contains(self, x) -> bool:
        return type(x) is int

    def _mul(self, g, h):
        return g + h

    def inverse(self, g):
        return -g

    def parse(self, text: str) -> int:
        return _parse_int(text)

    def render(self, g) -> str:
        return str(g)

    def spec(self) -> str:
        return "z"

    def random_element(self, rng):
        # identity gets a fair share so that random instances are not all feasible
        return rng.choice((0, 0, 1, -1, 2, -2, 3))


def reduce_word(letters: Sequence[int]) -> tuple[int, ...]:
    """Freely reduce a sequence of signed generator indices."""
    out: list[int] = []
    for a in letters:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


class FreeGroup(Group):
    """Free group on generators ``1 .. rank``."""

    identity: tuple[int, ...] = ()

    def __init__(self, rank: int):
        if not isinstance(rank, int) or rank < 1:
            raise UsageError(f"free group rank must be >= 1, got {rank!r}")
        self.rank = rank

    def contains(self, x) -> bool:
        if type(x) is not tuple:
            return False
        prev = 0
        for a in x:
            if type(a) is not int or a == 0 or abs(a) > self.rank or a == -prev:
                return False
            prev = a
        return True

    def _quick_check(self, x) -> bool:
        return type(x) is tuple

    def _mul(self, g, h):
        # cancel at the junction only; both operands are already reduced
        i = len(g)
        j = 0
        while i > 0 and j < len(h) and g[i - 1] == -h[j]:
            i -= 1
            j += 1
        return g[:i] + h[j:]

    def inverse(self, g):
        return tuple(-a for a in reversed(g))

    def parse(self, text: str) -> tuple[int, ...]:
        tokens = text.split()
        if tokens == ["e"]:
            return ()
        if not tokens:
            raise ParseError("empty free-group word (use 'e' for the identity)")
        letters = []
        for tok in tokens:
            if not _INT_RE.match(tok):
                raise ParseError(f"bad generator token {tok!r}")
            a = int(tok)
            if a == 0 or abs(a) > self.rank:
                raise ParseError(f"generator token {tok!r} out of range for free group of rank {self.rank}")
            letters.append(a)
        return reduce_word(letters)

    def render(self, g) -> str:
        return " ".join(map(str, g)) if g else "e"

    def spec(self) -> str:
        return f"free {self.rank}"

    def random_element(self, rng):
        length = rng.choice((0, 0, 1, 1, 2, 3))
        return reduce_word([rng.choice((1, -1)) * rng.randint(1, self.rank) for _ in range(length)])


def _split_top_level(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced ')' in {text!r}")
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise ParseError(f"unbalanced '(' in {text!r}")
    parts.append(text[start:])
    return parts


class DirectProduct(Group):
    """Componentwise product of groups; elements are tuples."""

    def __init__(self, factors: Sequence[Group]):
        self.factors = tuple(factors)
        self.identity = tuple(f.identity for f in self.factors)

    def contains(self, x) -> bool:
        return (
            type(x) is tuple
            and len(x) == len(self.factors)
            and all(f.contains(c) for f, c in zip(self.factors, x))
        )

    def _quick_check(self, x) -> bool:
        return type(x) is tuple and len(x) == len(self.factors)

    def _mul(self, g, h):
        return tuple(f._mul(a, b) for f, a, b in zip(self.factors, g, h))

    def inverse(self, g):
        return tuple(f.inverse(a) for f, a in zip(self.factors, g))

    def parse(self, text: str):
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ParseError(f"product label must be parenthesized, got {text!r}")
        inner = body[1:-1]
        parts = _split_top_level(inner) if inner.strip() else []
        if len(parts) != len(self.factors):
            raise ParseError(f"expected {len(self.factors)} components, got {len(parts)} in {text!r}")
        return tuple(f.parse(p) for f, p in zip(self.factors, parts))

    def render(self, g) -> str:
        return "(" + ",".join(f.render(c) for f, c in zip(self.factors, g)) + ")"

    def spec(self) -> str:
        return "prod " + ";".join(f.spec() for f in self.factors)

    def random_element(self, rng):
        return tuple(f.random_element(rng) for f in self.factors)


def parse_group(text: str) -> Group:
    """Parse a group header such as ``z2``, ``zk 6``, ``free 2`` or ``prod z2;zk 3``."""
    words = text.split()
    if not words:
        raise ParseError("missing group name")
    kind, rest = words[0], words[1:]
    if kind == "z2" and not rest:
        return CyclicGroup(2)
    if kind == "z" and not rest:
        return IntegerGroup()
    if kind in ("zk", "free") and len(rest) == 1:
        n = _parse_int(rest[0])
        try:
            return CyclicGroup(n) if kind == "zk" else FreeGroup(n)
        except UsageError as exc:
            raise ParseError(str(exc)) from None
    if kind == "prod":
        body = text.strip()[len("prod"):].strip()
        if not body:
            return DirectProduct([])
        factors = []
        for part in body.split(";"):
            if part.split() and part.split()[0] == "prod":
                raise ParseError("nested products are not supported in group headers")
            factors.append(parse_group(part))
        return DirectProduct(factors)
    raise ParseError(f"unknown group {text.strip()!r}")
