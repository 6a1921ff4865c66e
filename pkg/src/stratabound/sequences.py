"""Arrowed binary sequences: an ordered symbol set, 0/1 labels, a bijection.

An arrowed binary sequence (ABS) is a finite totally ordered set of symbols
``T``, a labelling ``delta: T -> {0, 1}``, and a bijection ``pi: T -> T``.
Symbols keep a permanent identity (segment, position, label); reorderings
move symbols around without renaming them.

The length of a sequence counts the pairs (t, t') with t before t',
delta(t) = 0 and delta(t') = 1.  Each symbol also carries a binary expansion
0.b_1 b_2 ... with b_i = delta(pi^{-i}(t)), an eventually periodic word whose
exact rational value drives the canonical ordering of direct sums.

>>> S = minimal_abs_segment(1, 2)
>>> [t.token for t in S.order]
['1^1_1', '0^1_2', '0^1_3']
>>> binary_expansion(S, S.order[0]).value
Fraction(1, 7)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import InternalCheckError, SymbolNotInSequence
from .newton import NewtonPolygon


@dataclass(frozen=True)
class Symbol:
    """Permanent identity of one sequence entry: tau^segment_position with a bit."""

    segment: int
    position: int
    label: int

    def __post_init__(self):
        if self.label not in (0, 1):
            raise ValueError(f"label must be 0 or 1, got {self.label}")
        if self.position < 1 or self.segment < 0:
            raise ValueError(f"bad symbol coordinates ({self.segment}, {self.position})")

    @property
    def token(self) -> str:
        return f"{self.label}^{self.segment}_{self.position}"

    def __repr__(self):
        return self.token


@dataclass(frozen=True)
class BinaryExpansion:
    """Periodic expansion word of one symbol; value is the exact rational."""

    bits: tuple[int, ...]

    @property
    def period(self) -> int:
        return len(self.bits)

    @cached_property
    def value(self) -> Fraction:
        p = self.period
        return Fraction(int("".join(map(str, self.bits)), 2) if p else 0, 2**p - 1)


class ABS:
    """Ordered symbols plus a bijection; immutable once built."""

    __slots__ = ("order", "_pi", "_pos", "_inv", "_hash")

    def __init__(self, order, pi):
        order = tuple(order)
        pi = dict(pi)
        symbols = set(order)
        if len(symbols) != len(order):
            raise ValueError("order contains repeated symbols")
        if set(pi) != symbols or set(pi.values()) != symbols:
            raise ValueError("pi must be a bijection on exactly the ordered symbols")
        self.order = order
        self._pi = pi
        self._pos = {t: z for z, t in enumerate(order, start=1)}
        self._inv = {v: k for k, v in pi.items()}
        self._hash = hash((order, frozenset(pi.items())))

    def __len__(self):
        return len(self.order)

    def __contains__(self, t):
        return t in self._pos

    def __eq__(self, other):
        return isinstance(other, ABS) and self.order == other.order and self._pi == other._pi

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"ABS({' '.join(t.token for t in self.order)})"

    def position(self, t: Symbol) -> int:
        """1-based position of t in the current order."""
        try:
            return self._pos[t]
        except KeyError:
            raise SymbolNotInSequence(f"{t!r} is not in this sequence") from None

    def symbol_at(self, z: int) -> Symbol:
        return self.order[z - 1]

    def delta(self, t: Symbol) -> int:
        if t not in self._pos:
            raise SymbolNotInSequence(f"{t!r} is not in this sequence")
        return t.label

    def pi(self, t: Symbol) -> Symbol:
        try:
            return self._pi[t]
        except KeyError:
            raise SymbolNotInSequence(f"{t!r} is not in this sequence") from None

    def pi_inverse(self, t: Symbol) -> Symbol:
        try:
            return self._inv[t]
        except KeyError:
            raise SymbolNotInSequence(f"{t!r} is not in this sequence") from None

    def arrow_images(self) -> tuple[int, ...]:
        """pi as a permutation of positions: entry z is the position of pi(symbol at z)."""
        return tuple(self._pos[self._pi[t]] for t in self.order)

    def reordered(self, order) -> "ABS":
        """Same symbols and bijection, new order."""
        return ABS(order, self._pi)


def minimal_abs_segment(m: int, n: int, segment: int = 1) -> ABS:
    """The minimal sequence of one coprime segment (m, n).

    Symbols t_1 .. t_{m+n} in that order, the first m labelled 1, and
    pi(t_i) = t_{((i - m - 1) mod (m+n)) + 1}: one cycle shifting by -m.

    >>> S = minimal_abs_segment(2, 7)
    >>> S.arrow_images()
    (8, 9, 1, 2, 3, 4, 5, 6, 7)
    """
    h = m + n
    if h == 0:
        raise ValueError("segment (0, 0) has no symbols")
    syms = [Symbol(segment, i, 1 if i <= m else 0) for i in range(1, h + 1)]
    pi = {syms[i - 1]: syms[(i - m - 1) % h] for i in range(1, h + 1)}
    return ABS(syms, pi)


def binary_expansion(S: ABS, t: Symbol) -> BinaryExpansion:
    """Expansion word b_i = delta(pi^{-i}(t)) over one full pi-orbit of t."""
    bits = []
    cur = t
    while True:
        cur = S.pi_inverse(cur)
        bits.append(cur.label)
        if cur == t:
            return BinaryExpansion(tuple(bits))


def length(S: ABS) -> int:
    """Number of pairs with a 0-labelled symbol ordered before a 1-labelled one.

    >>> length(minimal_abs_segment(2, 7))
    0
    """
    zeros = 0
    total = 0
    for t in S.order:
        if t.label == 0:
            zeros += 1
        else:
            total += zeros
    return total


def direct_sum(*summands: ABS) -> ABS:
    """Merge disjoint sequences, ordered by (expansion value, summand, position).

    The expansion of a symbol is unchanged by the merge (pi stays within each
    summand), and pi is compatible with the merged order because
    b(pi(t)) = (delta(t) + b(t)) / 2 is monotone in the sort key.

    >>> S = direct_sum(minimal_abs_segment(1, 1, 1), minimal_abs_segment(1, 1, 2))
    >>> [t.token for t in S.order]
    ['1^1_1', '1^2_1', '0^1_2', '0^2_2']
    """
    seen = set()
    keyed = []
    pi = {}
    for k, summand in enumerate(summands):
        overlap = seen.intersection(summand.order)
        if overlap:
            raise ValueError(f"summands share symbols: {sorted(t.token for t in overlap)}")
        seen.update(summand.order)
        pi.update({t: summand.pi(t) for t in summand.order})
        for idx, t in enumerate(summand.order):
            keyed.append(((binary_expansion(summand, t).value, k, idx), t))
    keyed.sort(key=lambda item: item[0])
    return ABS([t for _, t in keyed], pi)


def minimal_abs(polygon: NewtonPolygon) -> ABS:
    """Minimal sequence of a polygon: direct sum of its minimal segments.

    Expansion ties across summands can only come from equal segments; anything
    else would break the canonical order, so it is checked outright.
    """
    summands = [
        minimal_abs_segment(seg.m, seg.n, segment=k)
        for k, seg in enumerate(polygon.segments, start=1)
    ]
    by_value: dict[Fraction, tuple[int, int]] = {}
    for k, summand in enumerate(summands):
        seg = polygon.segments[k]
        pair = (seg.m, seg.n)
        for t in summand.order:
            v = binary_expansion(summand, t).value
            other = by_value.setdefault(v, pair)
            if other != pair:
                raise InternalCheckError(
                    f"expansion tie {v} between distinct segments {other} and {pair}"
                )
    return direct_sum(*summands)


def to_binary_sequence(S: ABS) -> tuple[int, ...]:
    """The type of a sequence: its labels read along the order."""
    return tuple(t.label for t in S.order)


def abs_from_binary_sequence(nu) -> ABS:
    """Canonical sequence of a binary word, segment index 0.

    The bijection follows the display-module rules: a 0 at position i maps to
    position #{l <= i : nu(l) = 0}, and the j-th 1 (left to right) maps to
    position d + j where d is the number of zeros.

    >>> abs_from_binary_sequence((1, 1, 0)).arrow_images()
    (2, 3, 1)
    """
    nu = tuple(int(b) for b in nu)
    if any(b not in (0, 1) for b in nu) or not nu:
        raise ValueError(f"need a non-empty 0/1 word, got {nu}")
    d = nu.count(0)
    syms = [Symbol(0, i, b) for i, b in enumerate(nu, start=1)]
    pi = {}
    zeros_seen = 0
    ones_seen = 0
    for i, b in enumerate(nu, start=1):
        if b == 0:
            zeros_seen += 1
            pi[syms[i - 1]] = syms[zeros_seen - 1]
        else:
            ones_seen += 1
            pi[syms[i - 1]] = syms[d + ones_seen - 1]
    return ABS(syms, pi)


def is_admissible(S: ABS) -> bool:
    """True when pi, read as a position permutation, is the canonical one of the type.

    >>> is_admissible(minimal_abs_segment(2, 7))
    True
    """
    canonical = abs_from_binary_sequence(to_binary_sequence(S))
    return S.arrow_images() == canonical.arrow_images()


def render_ascii(S: ABS) -> str:
    """Tokens on one line, then one 'k -> k'' line per position arrow."""
    lines = [" ".join(t.token for t in S.order)]
    for z, image in enumerate(S.arrow_images(), start=1):
        lines.append(f"{z} -> {image}")
    return "\n".join(lines)


def abs_to_json(S: ABS) -> dict:
    return {
        "order": [[t.segment, t.position] for t in S.order],
        "delta": [t.label for t in S.order],
        "pi": [[z, image] for z, image in enumerate(S.arrow_images(), start=1)],
    }


def abs_from_json(data: dict) -> ABS:
    syms = [
        Symbol(seg, pos, label)
        for (seg, pos), label in zip(data["order"], data["delta"], strict=True)
    ]
    pi = {syms[z - 1]: syms[image - 1] for z, image in data["pi"]}
    return ABS(syms, pi)
