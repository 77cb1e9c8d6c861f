"""Multipartitions, nodes, standard tableaux and the permutations d(t)."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import factorial
from typing import Iterator, NamedTuple

Partition = tuple[int, ...]


class MultipartitionParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class IncomparableError(ValueError):
    """Dominance was asked of multipartitions of different size or level."""


class Node(NamedTuple):
    """A box ``(component, row, column)``; 1-based, ordered lexicographically."""

    comp: int
    row: int
    col: int

    def __str__(self):
        return f"({self.comp},{self.row},{self.col})"


@dataclass(frozen=True, order=False)
class Multipartition:
    components: tuple[Partition, ...]

    def __post_init__(self):
        comps = tuple(tuple(int(x) for x in c) for c in self.components)
        if not comps:
            raise ValueError("a multipartition has at least one component")
        for c in comps:
            if any(x <= 0 for x in c):
                raise ValueError(f"partition {c} has non-positive parts")
            if any(c[i] < c[i + 1] for i in range(len(c) - 1)):
                raise ValueError(f"partition {c} is not weakly decreasing")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, *components) -> "Multipartition":
        return cls(tuple(tuple(c) for c in components))

    @classmethod
    def empty(cls, level: int = 1) -> "Multipartition":
        return cls(((),) * level)

    @property
    def level(self) -> int:
        return len(self.components)

    @cached_property
    def size(self) -> int:
        return sum(sum(c) for c in self.components)

    def __len__(self):
        return self.size

    def row_length(self, comp: int, row: int) -> int:
        c = self.components[comp - 1]
        return c[row - 1] if 1 <= row <= len(c) else 0

    def __contains__(self, node) -> bool:
        l, r, c = node
        return 1 <= l <= self.level and 1 <= c <= self.row_length(l, r)

    @cached_property
    def nodes(self) -> tuple[Node, ...]:
        return tuple(
            Node(l, r, c)
            for l, comp in enumerate(self.components, 1)
            for r, length in enumerate(comp, 1)
            for c in range(1, length + 1)
        )

    def remove(self, node: Node) -> "Multipartition":
        if node not in removable_nodes(self):
            raise ValueError(f"{node} is not removable from {self}")
        comps = [list(c) for c in self.components]
        comps[node.comp - 1][node.row - 1] -= 1
        comps[node.comp - 1] = [x for x in comps[node.comp - 1] if x]
        return Multipartition(tuple(tuple(c) for c in comps))

    def add(self, node: Node) -> "Multipartition":
        if node not in addable_nodes(self):
            raise ValueError(f"{node} is not addable to {self}")
        comps = [list(c) for c in self.components]
        comp = comps[node.comp - 1]
        if node.row > len(comp):
            comp.append(1)
        else:
            comp[node.row - 1] += 1
        return Multipartition(tuple(tuple(c) for c in comps))

    def render(self, exponents: bool = True) -> str:
        return "(" + "|".join(_render_partition(c, exponents) for c in self.components) + ")"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Multipartition{self.render(exponents=False)}"


def _render_partition(parts: Partition, exponents: bool) -> str:
    if not exponents:
        return ",".join(map(str, parts))
    out = []
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        out.append(f"{parts[i]}^{j - i}" if j - i > 1 else str(parts[i]))
        i = j
    return ",".join(out)


_PART = re.compile(r"\s*(\d+)(?:\s*\^\s*(\d+))?\s*")


def parse_multipartition(text: str) -> Multipartition:
    """Parse ``(3,2|1^3|2^2)``-style literals.

    An empty segment or ``∅`` is the empty partition. Parse errors carry the
    offending position.
    """
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s.startswith("("):
        raise MultipartitionParseError("expected '('", offset)
    if not s.endswith(")"):
        raise MultipartitionParseError("expected ')'", offset + len(s))
    body = s[1:-1]
    comps = []
    pos = offset + 1
    for segment in body.split("|"):
        comps.append(_parse_segment(segment, pos))
        pos += len(segment) + 1
    try:
        return Multipartition(tuple(comps))
    except ValueError as exc:
        raise ValueError(f"invalid multipartition {text!r}: {exc}") from None


def _parse_segment(segment: str, pos: int) -> Partition:
    if segment.strip() in ("", "∅"):
        return ()
    parts: list[int] = []
    cursor = 0
    for item in segment.split(","):
        m = _PART.fullmatch(item)
        if not m:
            raise MultipartitionParseError(f"malformed part {item.strip()!r}", pos + cursor)
        value = int(m.group(1))
        if value == 0:
            raise MultipartitionParseError("parts must be positive", pos + cursor)
        repeat = int(m.group(2)) if m.group(2) else 1
        parts.extend([value] * repeat)
        cursor += len(item) + 1
    return tuple(parts)


def dominates(lam: Multipartition, mu: Multipartition) -> bool:
    """``lam ⊵ mu`` in the dominance order on multipartitions."""
    if lam.size != mu.size or lam.level != mu.level:
        raise IncomparableError(f"cannot compare {lam} and {mu}")
    before_l = before_m = 0
    for a, b in zip(lam.components, mu.components):
        rows = max(len(a), len(b))
        sl, sm = before_l, before_m
        if sl < sm:
            return False
        for r in range(rows):
            sl += a[r] if r < len(a) else 0
            sm += b[r] if r < len(b) else 0
            if sl < sm:
                return False
        before_l += sum(a)
        before_m += sum(b)
    return True


def removable_nodes(lam: Multipartition) -> list[Node]:
    """Removable nodes, lexicographically decreasing (A_1 > A_2 > ...)."""
    out = []
    for l, comp in enumerate(lam.components, 1):
        for r, length in enumerate(comp, 1):
            if r == len(comp) or comp[r] < length:
                out.append(Node(l, r, length))
    return sorted(out, reverse=True)


def addable_nodes(lam: Multipartition) -> list[Node]:
    """Addable nodes, lexicographically increasing."""
    out = []
    for l, comp in enumerate(lam.components, 1):
        for r in range(1, len(comp) + 2):
            length = comp[r - 1] if r <= len(comp) else 0
            above = comp[r - 2] if r >= 2 else None
            if above is None or above > length:
                out.append(Node(l, r, length + 1))
    return sorted(out)


# --------------------------------------------------------------------------
# Enumeration of (multi)partitions


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``n`` into ``parts`` parts, first part largest first."""
    if parts == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def multipartitions(n: int, level: int) -> tuple[Multipartition, ...]:
    out = []
    for sizes in compositions(n, level):
        stack: list[list[Partition]] = [[]]
        for k in sizes:
            stack = [prefix + [p] for prefix in stack for p in partitions(k)]
        out.extend(Multipartition(tuple(c)) for c in stack)
    return tuple(out)


# --------------------------------------------------------------------------
# Tableaux


@dataclass(frozen=True)
class StandardTableau:
    """A filling of ``shape`` by 1..n; ``rows[l][r]`` is row r+1 of component l+1."""

    shape: Multipartition
    rows: tuple[tuple[tuple[int, ...], ...], ...]
    _positions: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        pos = {}
        if len(self.rows) != self.shape.level:
            raise ValueError("tableau level does not match its shape")
        for l, (comp, part) in enumerate(zip(self.rows, self.shape.components), 1):
            if tuple(len(row) for row in comp) != part:
                raise ValueError("tableau rows do not match the shape")
            for r, row in enumerate(comp, 1):
                for c, k in enumerate(row, 1):
                    pos[k] = Node(l, r, c)
        if sorted(pos) != list(range(1, self.shape.size + 1)):
            raise ValueError("tableau entries must be 1..n, each once")
        object.__setattr__(self, "_positions", pos)

    @classmethod
    def from_nodes(cls, nodes: list[Node] | tuple[Node, ...], shape: Multipartition | None = None):
        """Tableau with entry ``k`` at ``nodes[k-1]``."""
        if shape is None:
            shape = _shape_of(nodes)
        grid = [[list(row) for row in (([0] * p) for p in comp)] for comp in shape.components]
        for k, (l, r, c) in enumerate(nodes, 1):
            grid[l - 1][r - 1][c - 1] = k
        return cls(shape, tuple(tuple(tuple(row) for row in comp) for comp in grid))

    @property
    def size(self) -> int:
        return self.shape.size

    def position(self, k: int) -> Node:
        return self._positions[k]

    @cached_property
    def node_sequence(self) -> tuple[Node, ...]:
        return tuple(self._positions[k] for k in range(1, self.size + 1))

    def entry(self, node: Node) -> int:
        l, r, c = node
        return self.rows[l - 1][r - 1][c - 1]

    def is_standard(self) -> bool:
        for comp in self.rows:
            for r, row in enumerate(comp):
                if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                    return False
                if r and any(comp[r - 1][i] >= row[i] for i in range(len(row))):
                    return False
        return True

    @cached_property
    def dominance_key(self) -> tuple[tuple[int, int], ...]:
        """(component, row) of 1, 2, ..., n; sorting by it extends tableau dominance."""
        return tuple((node.comp, node.row) for node in self.node_sequence)

    def apply(self, perm: "Permutation") -> "StandardTableau | None":
        """Right action of a permutation on entries; ``None`` if the result is not standard."""
        nodes = [None] * self.size
        for k in range(1, self.size + 1):
            nodes[perm(k) - 1] = self._positions[k]
        t = StandardTableau.from_nodes(nodes, self.shape)
        return t if t.is_standard() else None

    def swap(self, r: int) -> "StandardTableau | None":
        """``t(r, r+1)`` if it is standard, else ``None``."""
        a, b = self._positions[r], self._positions[r + 1]
        if a.comp == b.comp and (a.row == b.row or a.col == b.col):
            return None
        nodes = list(self.node_sequence)
        nodes[r - 1], nodes[r] = nodes[r], nodes[r - 1]
        return StandardTableau.from_nodes(nodes, self.shape)

    def __str__(self):
        comps = []
        for comp in self.rows:
            comps.append("/".join(",".join(map(str, row)) for row in comp) or "-")
        return "[" + " | ".join(comps) + "]"

    __repr__ = __str__


def _shape_of(nodes) -> Multipartition:
    level = max((n.comp for n in nodes), default=1)
    rows: dict[tuple[int, int], int] = {}
    for l, r, _ in nodes:
        rows[(l, r)] = rows.get((l, r), 0) + 1
    comps = []
    for l in range(1, level + 1):
        comp = []
        r = 1
        while (l, r) in rows:
            comp.append(rows[(l, r)])
            r += 1
        comps.append(tuple(comp))
    return Multipartition(tuple(comps))


@lru_cache(maxsize=2048)
def standard_tableaux(lam: Multipartition) -> tuple[StandardTableau, ...]:
    """Std(lam), most dominant first (a fixed linear extension of dominance)."""
    seqs = _node_sequences(lam)
    tabs = [StandardTableau.from_nodes(seq, lam) for seq in seqs]
    tabs.sort(key=lambda t: t.dominance_key)
    return tuple(tabs)


def _node_sequences(lam: Multipartition) -> list[tuple[Node, ...]]:
    if lam.size == 0:
        return [()]
    out = []
    for node in removable_nodes(lam):
        for seq in _node_sequences(lam.remove(node)):
            out.append(seq + (node,))
    return out


def count_standard_tableaux(lam: Multipartition) -> int:
    """|Std(lam)| by the hook length formula, independent of the enumeration."""
    result = factorial(lam.size)
    for comp in lam.components:
        conj = [sum(1 for p in comp if p > c) for c in range(comp[0] if comp else 0)]
        for r, length in enumerate(comp):
            for c in range(length):
                result //= (length - c - 1) + (conj[c] - r - 1) + 1
    return result


def initial_tableau(lam: Multipartition) -> StandardTableau:
    """t^lam: entries increase along rows, then down rows, then across components."""
    return StandardTableau.from_nodes(lam.nodes, lam)


def restrict_tableau(t: StandardTableau, m: int) -> StandardTableau:
    """The subtableau containing 1..m."""
    if not 0 <= m <= t.size:
        raise ValueError(f"m={m} out of range 0..{t.size}")
    if m == t.size:
        return t
    nodes = t.node_sequence[:m]
    level = t.shape.level
    shape = _shape_of(nodes) if nodes else Multipartition.empty(level)
    if shape.level < level:
        shape = Multipartition(shape.components + ((),) * (level - shape.level))
    return StandardTableau.from_nodes(nodes, shape)


def tableau_dominates(s: StandardTableau, t: StandardTableau) -> bool:
    """``s ⊵ t``: Shape(s↓m) ⊵ Shape(t↓m) for every m."""
    if s.size != t.size:
        raise IncomparableError("tableaux of different sizes")
    for m in range(1, s.size + 1):
        if not dominates(restrict_tableau(s, m).shape, restrict_tableau(t, m).shape):
            return False
    return True


def restriction_partition(lam: Multipartition) -> dict[Multipartition, list[StandardTableau]]:
    """Std(lam) split by Shape(t↓); keys follow the removable nodes A_1 > A_2 > ..."""
    out = {lam.remove(node): [] for node in removable_nodes(lam)}
    for t in standard_tableaux(lam):
        out[restrict_tableau(t, lam.size - 1).shape].append(t)
    return out


# --------------------------------------------------------------------------
# Permutations


@dataclass(frozen=True)
class Permutation:
    """One-line notation ``image[k-1] = w(k)``.

    Products follow the right action on tableaux: ``t (u w) = (t u) w``, so
    ``u * w`` applies ``u`` first.
    """

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise ValueError(f"{self.image} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def simple(cls, r: int, n: int) -> "Permutation":
        img = list(range(1, n + 1))
        img[r - 1], img[r] = img[r], img[r - 1]
        return cls(tuple(img))

    @classmethod
    def from_word(cls, word, n: int) -> "Permutation":
        w = cls.identity(n)
        for r in word:
            w = w * cls.simple(r, n)
        return w

    def __call__(self, k: int) -> int:
        return self.image[k - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(other(self(k)) for k in range(1, len(self.image) + 1)))

    def length(self) -> int:
        img = self.image
        return sum(1 for i in range(len(img)) for j in range(i + 1, len(img)) if img[i] > img[j])

    def reduced_word(self) -> list[int]:
        """A reduced word ``[r1, ..., rk]`` with ``self = s_r1 * ... * s_rk``."""
        img = list(self.image)
        word = []
        while True:
            for i in range(len(img) - 1):
                if img[i] > img[i + 1]:
                    img[i], img[i + 1] = img[i + 1], img[i]
                    word.append(i + 1)
                    break
            else:
                return word

    def reduced_words(self) -> list[tuple[int, ...]]:
        """Every reduced word, for small n."""
        if self.length() == 0:
            return [()]
        out = []
        img = self.image
        for i in range(len(img) - 1):
            if img[i] > img[i + 1]:
                swapped = list(img)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                out.extend((i + 1,) + w for w in Permutation(tuple(swapped)).reduced_words())
        return out


def tableau_permutation(t: StandardTableau) -> tuple[Permutation, list[int]]:
    """d(t) with ``t = t^lam d(t)``, and one reduced word for it."""
    tl = initial_tableau(t.shape)
    image = [0] * t.size
    for k, node in enumerate(tl.node_sequence, 1):
        image[k - 1] = t.entry(node)
    w = Permutation(tuple(image))
    return w, w.reduced_word()
