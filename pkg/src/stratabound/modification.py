"""Small modifications and the reordering cascade that makes them canonical.

A small modification swaps one 0-labelled symbol with a later 1-labelled
symbol in the order and rewires the bijection so the two swapped symbols
exchange their images.  The cascade then walks the pi-orbit of each swapped
symbol (alpha_n from the 0-symbol, beta_n from the 1-symbol), moving the
marker past a block of the order at every stage and tracking the sets

    A_n = {t not in segment q : t < alpha_n, alpha_{n+1} < pi(t), delta(t) = delta(alpha_n)}
    B_n = {t : beta_n < t, pi(t) < beta_{n+1}, delta(t) = delta(beta_n)}

(the A_0 stage takes no segment exclusion).  The cascade ends when a set
empties; the final sequence is the full modification.  Its verdict is Generic
when the length drops by exactly one.

The sets also satisfy a one-step shortcut (the next A-set is the arrow image
of the previous one filtered by segment and label; the next B-set likewise
without the segment filter), exposed here as :func:`a_members_from_previous`
/ :func:`b_members_from_previous` and checked in tests.  The positional
definitions above are what drive the iteration: for the A-side the shortcut
can differ on non-adjacent pairs whose marker orbit wraps early, while no
B-side divergence is known (sweeps find none).

The never-empties verdict relies on the iteration being a deterministic map
on (current order, stage index mod marker-orbit-length): once that state
repeats with a non-empty set, the cascade provably cycles forever.
"""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass, replace

from .errors import InternalCheckError, InvalidPair, PreconditionViolated
from .sequences import ABS, Symbol, abs_to_json, binary_expansion, length, render_ascii, to_binary_sequence
from .weyl import JWContext, Permutation, binary_to_jw, theta, x_element

GENERIC = "Generic"
NONGENERIC_LENGTH_DROP = "NonGenericLengthDrop"
NONGENERIC_A_NEVER_EMPTY = "NonGenericANeverEmpty"
NONGENERIC_B_NEVER_EMPTY = "NonGenericBNeverEmpty"


@dataclass(frozen=True)
class SmallModPair:
    """A 0-labelled symbol to swap with a later 1-labelled symbol."""

    zero: Symbol
    one: Symbol

    def __post_init__(self):
        if self.zero.label != 0 or self.one.label != 1:
            raise InvalidPair(f"need labels (0, 1), got ({self.zero!r}, {self.one!r})")

    @property
    def spec(self) -> str:
        return f"0:{self.zero.segment}:{self.zero.position},1:{self.one.segment}:{self.one.position}"

    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.zero.segment, self.zero.position, self.one.segment, self.one.position)

    def __str__(self):
        return self.spec


_PAIR_RE = re.compile(r"^0:(\d+):(\d+),1:(\d+):(\d+)$")


def parse_pair(text: str) -> SmallModPair:
    """Parse the compact pair form ``0:r:i,1:q:j``.

    >>> parse_pair("0:1:4,1:2:2").spec
    '0:1:4,1:2:2'
    """
    m = _PAIR_RE.match(text.replace(" ", ""))
    if not m:
        raise InvalidPair(f"cannot parse pair {text!r}; expected 0:r:i,1:q:j")
    r, i, q, j = map(int, m.groups())
    return SmallModPair(Symbol(r, i, 0), Symbol(q, j, 1))


@dataclass(frozen=True)
class Stage:
    """One cascade stage: the sequence after this stage's move, marker, members."""

    kind: str  # "A" or "B"
    index: int
    sequence: ABS
    marker: Symbol
    members: tuple[Symbol, ...]  # in sequence order


@dataclass(frozen=True)
class ModificationTrace:
    source: ABS
    pair: SmallModPair
    small: ABS
    stages: tuple[Stage, ...]
    a: int | None
    b: int | None
    result: ABS | None
    verdict: str | None

    def a_stages(self) -> tuple[Stage, ...]:
        return tuple(s for s in self.stages if s.kind == "A")

    def b_stages(self) -> tuple[Stage, ...]:
        return tuple(s for s in self.stages if s.kind == "B")

    def a_sets(self) -> dict[int, frozenset[Symbol]]:
        return {s.index: frozenset(s.members) for s in self.stages if s.kind == "A"}

    def b_sets(self) -> dict[int, frozenset[Symbol]]:
        return {s.index: frozenset(s.members) for s in self.stages if s.kind == "B"}


def small_modification(S: ABS, pair: SmallModPair) -> ABS:
    """Swap the pair in the order and exchange the two symbols' pi-images.

    Rewiring is sigma composed after pi, where sigma transposes the two
    symbols: arrows into either one land on the other, and the swapped
    symbols' own images trade places exactly when they point at each other.
    """
    i = S.position(pair.zero)
    j = S.position(pair.one)
    if i >= j:
        raise InvalidPair(f"pair {pair} needs the 0-symbol strictly before the 1-symbol")
    order = list(S.order)
    order[i - 1], order[j - 1] = order[j - 1], order[i - 1]

    def sigma(t: Symbol) -> Symbol:
        if t == pair.zero:
            return pair.one
        if t == pair.one:
            return pair.zero
        return t

    pi = {t: sigma(S.pi(t)) for t in order}
    return ABS(order, pi)


def _orbit(S: ABS, start: Symbol) -> list[Symbol]:
    out = [start]
    t = S.pi(start)
    while t != start:
        out.append(t)
        t = S.pi(t)
    return out


def _a_members(current: ABS, marker: Symbol, nxt: Symbol, exclude_segment: int | None) -> tuple[Symbol, ...]:
    pos_marker = current.position(marker)
    pos_next = current.position(nxt)
    return tuple(
        t
        for t in current.order[: pos_marker - 1]
        if t.label == marker.label
        and current.position(current.pi(t)) > pos_next
        and (exclude_segment is None or t.segment != exclude_segment)
    )


def _b_members(current: ABS, marker: Symbol, nxt: Symbol) -> tuple[Symbol, ...]:
    pos_marker = current.position(marker)
    pos_next = current.position(nxt)
    return tuple(
        t
        for t in current.order[pos_marker:]
        if t.label == marker.label and current.position(current.pi(t)) < pos_next
    )


def _move_after(S: ABS, sym: Symbol, target: Symbol) -> ABS:
    # invert (sym, t') for every t' with sym < t' <= target: sym lands just after target
    i = S.position(sym)
    j = S.position(target)
    if i >= j:
        raise InternalCheckError(f"move-after expects {sym!r} strictly before {target!r}")
    order = list(S.order)
    order.insert(j - 1, order.pop(i - 1))
    return S.reordered(order)


def _move_before(S: ABS, sym: Symbol, target: Symbol) -> ABS:
    # invert (t', sym) for every t' with target <= t' < sym: sym lands just before target
    i = S.position(sym)
    j = S.position(target)
    if j >= i:
        raise InternalCheckError(f"move-before expects {target!r} strictly before {sym!r}")
    order = list(S.order)
    order.insert(j - 1, order.pop(i - 1))
    return S.reordered(order)


def a_members_from_previous(
    S0: ABS, previous: Sequence[Symbol], marker: Symbol, excluded_segment: int
) -> frozenset[Symbol]:
    """One-step prediction of the next A-set: arrow images of the previous one,
    dropping symbols of the excluded segment and label mismatches.

    This shortcut agrees with the positional definition used by
    :func:`construction_a` whenever the chosen pair sits in adjacent segments;
    for distant pairs on short arrow orbits the two can differ (the positional
    definition is the one that drives the iteration).
    """
    return frozenset(
        S0.pi(t)
        for t in previous
        if S0.pi(t).segment != excluded_segment and S0.pi(t).label == marker.label
    )


def b_members_from_previous(
    S0: ABS, previous: Sequence[Symbol], marker: Symbol
) -> frozenset[Symbol]:
    """One-step prediction of the next B-set: arrow images filtered by label.

    Unlike the A-side shortcut this one agrees with the positional definition
    on every trace swept so far, adjacent or not; tests assert the agreement.
    """
    return frozenset(S0.pi(t) for t in previous if S0.pi(t).label == marker.label)


def construction_a(S0: ABS, pair: SmallModPair, source: ABS | None = None) -> ModificationTrace:
    """Run the A-phase; returns a partial trace (b and result still unset).

    Records one stage per materialized sequence: stage n holds S^(n), the
    marker alpha_n, and A_n computed in S^(n).  Ends with a = first empty
    index, or verdict NonGenericANeverEmpty when the iteration state repeats.
    """
    orbit = _orbit(S0, pair.zero)
    p = len(orbit)
    q = pair.one.segment
    cap = len(S0) ** 2

    current = S0
    members = _a_members(current, orbit[0], orbit[1 % p], exclude_segment=None)
    stages = [Stage("A", 0, current, orbit[0], members)]
    seen = {(current.order, 0)}
    n = 0
    while members:
        if len(stages) > cap:
            raise InternalCheckError("A-phase exceeded the stage cap without a verdict")
        t_max = members[-1]
        n += 1
        marker = orbit[n % p]
        current = _move_after(current, marker, current.pi(t_max))
        nxt = orbit[(n + 1) % p]
        members = _a_members(current, marker, nxt, exclude_segment=q)
        stages.append(Stage("A", n, current, marker, members))
        state = (current.order, n % p)
        if members and state in seen:
            return ModificationTrace(
                source=source if source is not None else S0,
                pair=pair,
                small=S0,
                stages=tuple(stages),
                a=None,
                b=None,
                result=None,
                verdict=NONGENERIC_A_NEVER_EMPTY,
            )
        seen.add(state)
    return ModificationTrace(
        source=source if source is not None else S0,
        pair=pair,
        small=S0,
        stages=tuple(stages),
        a=n,
        b=None,
        result=None,
        verdict=None,
    )


def construction_b(trace: ModificationTrace) -> ModificationTrace:
    """Run the B-phase on a partial trace and classify the outcome."""
    if trace.a is None:
        raise PreconditionViolated("B-phase needs a completed A-phase (a recorded)")
    if trace.b is not None or trace.verdict is not None:
        raise PreconditionViolated("trace already completed")
    S0 = trace.small
    pair = trace.pair
    orbit = _orbit(S0, pair.one)
    p = len(orbit)
    cap = len(S0) ** 2

    current = trace.stages[-1].sequence
    members = _b_members(current, orbit[0], orbit[1 % p])
    stages = list(trace.stages) + [Stage("B", 0, current, orbit[0], members)]
    seen = {(current.order, 0)}
    n = 0
    while members:
        if len(stages) - len(trace.stages) > cap:
            raise InternalCheckError("B-phase exceeded the stage cap without a verdict")
        t_min = members[0]
        n += 1
        marker = orbit[n % p]
        current = _move_before(current, marker, current.pi(t_min))
        nxt = orbit[(n + 1) % p]
        members = _b_members(current, marker, nxt)
        stages.append(Stage("B", n, current, marker, members))
        state = (current.order, n % p)
        if members and state in seen:
            return replace(trace, stages=tuple(stages), verdict=NONGENERIC_B_NEVER_EMPTY)
        seen.add(state)

    drop = length(trace.source) - length(current)
    if drop < 1:
        raise InternalCheckError(
            f"full modification raised the length ({length(trace.source)} -> {length(current)})"
        )
    verdict = GENERIC if drop == 1 else NONGENERIC_LENGTH_DROP
    return replace(trace, stages=tuple(stages), b=n, result=current, verdict=verdict)


def full_modification(S: ABS, pair: SmallModPair) -> ModificationTrace:
    """Small modification, then the A- and B-phases; classifies the verdict.

    >>> from .newton import parse_polygon
    >>> from .sequences import minimal_abs
    >>> S = minimal_abs(parse_polygon("2,7+3,5"))
    >>> trace = full_modification(S, parse_pair("0:1:4,1:2:2"))
    >>> trace.a, trace.b, trace.verdict
    (1, 2, 'Generic')
    """
    small = small_modification(S, pair)
    partial = construction_a(small, pair, source=S)
    if partial.verdict is not None:
        return partial
    return construction_b(partial)


def eligible_pairs(S: ABS, adjacent_only: bool = False) -> tuple[SmallModPair, ...]:
    """All 0-before-1 pairs of S, sorted by (r, i, q, j).

    With adjacent_only, keep pairs whose segments satisfy q = r + 1 (the only
    candidates that can be generic).
    """
    pairs = []
    for x, t0 in enumerate(S.order):
        if t0.label != 0:
            continue
        for t1 in S.order[x + 1 :]:
            if t1.label != 1:
                continue
            if adjacent_only and t1.segment != t0.segment + 1:
                continue
            pairs.append(SmallModPair(t0, t1))
    return tuple(sorted(pairs, key=SmallModPair.sort_key))


@dataclass(frozen=True)
class CensusRow:
    """One classified pair from a census sweep."""

    polygon: str
    pair: str
    verdict: str
    zero_segment: int
    one_segment: int

    @property
    def adjacent(self) -> bool:
        return self.one_segment == self.zero_segment + 1


def modification_census(max_height: int) -> list[CensusRow]:
    """Classify every valid pair of every polygon up to the height bound."""
    from .newton import enumerate_polygons
    from .sequences import minimal_abs

    rows = []
    for polygon in enumerate_polygons(max_height):
        S = minimal_abs(polygon)
        for pair in eligible_pairs(S):
            trace = full_modification(S, pair)
            rows.append(
                CensusRow(str(polygon), pair.spec, trace.verdict, pair.zero.segment, pair.one.segment)
            )
    return rows


def expansion_sorted_length_bound(S: ABS) -> int:
    """Largest length over orders compatible with the expansion contract.

    Any specialization order must be non-decreasing in binary expansion, so
    sorting by (expansion value, label) with 0 before 1 on ties maximizes the
    number of 0-before-1 pairs.  Used to confirm that never-terminating
    cascades cannot reach length l(S) - 1.
    """
    ordered = sorted(S.order, key=lambda t: (binary_expansion(S, t).value, t.label))
    zeros = 0
    total = 0
    for t in ordered:
        if t.label == 0:
            zeros += 1
        else:
            total += zeros
    return total


def specialization_to_weyl(trace: ModificationTrace, ctx: JWContext) -> tuple[Permutation, Permutation, Permutation]:
    """The type-level data (w', u, eps) of a completed trace.

    eps sends the position of a symbol in the small modification to its
    position in the result; u = x^{-1} eps x must lie in the block subgroup,
    which happens exactly when eps stabilizes {1..d}; and
    w' = u (w s) theta(u^{-1}) is the type of the result.
    """
    if trace.result is None:
        raise PreconditionViolated("needs a trace with a result")
    S = trace.source
    if ctx.h != len(S):
        raise PreconditionViolated(f"context degree {ctx.h} does not match |T(S)| = {len(S)}")
    w = binary_to_jw(to_binary_sequence(S), ctx)
    s = Permutation.transposition(ctx.h, S.position(trace.pair.zero), S.position(trace.pair.one))
    eps = Permutation(tuple(trace.result.position(t) for t in trace.small.order))
    block = set(range(1, ctx.d + 1))
    if {eps(z) for z in block} != block:
        raise PreconditionViolated("reorder permutation does not preserve the block split")
    x = x_element(ctx)
    u = x.inverse() * eps * x
    w_prime = u * (w * s) * theta(u.inverse(), ctx)
    return w_prime, u, eps


def render_trace_ascii(trace: ModificationTrace) -> str:
    """Stage-by-stage diagram: orders with markers, then the final arrows."""
    lines = ["source:", render_ascii(trace.source), f"pair: {trace.pair.spec}", "S^(0):", render_ascii(trace.small)]

    def emit(stage: Stage, k: int):
        members = " ".join(t.token for t in stage.members)
        lines.append(f"S^({k}) {stage.kind}-stage {stage.index}: marker {stage.marker.token}, members {{{members}}}")
        lines.append("  " + " ".join(t.token for t in stage.sequence.order))

    for stage in trace.a_stages():
        emit(stage, stage.index)
    if trace.a is not None:
        lines.append(f"a = {trace.a}")
    for stage in trace.b_stages():
        emit(stage, trace.a + stage.index)
    if trace.b is not None:
        lines.append(f"b = {trace.b}")
    lines.append(f"verdict: {trace.verdict}")
    if trace.result is not None:
        lines.append(f"lengths: {length(trace.source)} -> {length(trace.result)}")
        lines.append("result:")
        lines.append(render_ascii(trace.result))
    return "\n".join(lines)


def trace_to_json(trace: ModificationTrace) -> dict:
    offset = trace.a or 0
    return {
        "source": abs_to_json(trace.source),
        "pair": trace.pair.spec,
        "small": abs_to_json(trace.small),
        "stages": [
            {
                "kind": stage.kind,
                "index": stage.index,
                "global_index": stage.index + (offset if stage.kind == "B" else 0),
                "sequence": abs_to_json(stage.sequence),
                "marker": [stage.marker.segment, stage.marker.position],
                "members": [[t.segment, t.position] for t in stage.members],
            }
            for stage in trace.stages
        ],
        "a": trace.a,
        "b": trace.b,
        "verdict": trace.verdict,
        "result": abs_to_json(trace.result) if trace.result is not None else None,
        "lengths": {
            "source": length(trace.source),
            "result": length(trace.result) if trace.result is not None else None,
        },
    }
