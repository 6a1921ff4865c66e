"""Acceptance gate: the eight release criteria, one test per criterion.

Each test records a PASS/FAIL line for the terminal summary via conftest.
Criterion 7 is expected to fail: generic verdicts do occur for non-adjacent
pairs once a polygon repeats a segment (adjacency is only invariant up to
renaming equal segments), and the assertion states the literal claim anyway.
"""

from __future__ import annotations

import functools
import itertools
import time

import pytest

import golden
from conftest import record_acceptance
from stratabound.boundary import (
    boundary_set,
    boundary_set_oracle,
    verify_curtailment,
    verify_direct_sum,
    verify_duality,
)
from stratabound.modification import (
    GENERIC,
    full_modification,
    modification_census,
    parse_pair,
    specialization_to_weyl,
)
from stratabound.newton import enumerate_polygons, parse_polygon
from stratabound.sequences import (
    abs_from_binary_sequence,
    length,
    minimal_abs,
    to_binary_sequence,
)
from stratabound.weyl import JWContext, Permutation, binary_to_jw, coxeter_length


def criterion(number: int, title: str):
    def decorate(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException as exc:
                first = (str(exc) or type(exc).__name__).splitlines()[0]
                record_acceptance(number, title, False, first[:200])
                raise
            record_acceptance(number, title, True)

        return wrapper

    return decorate


def assert_sequence_matches(S, token_row: str, arrows: tuple[int, ...]):
    assert tuple(t.token for t in S.order) == golden.tokens(token_row)
    assert S.arrow_images() == arrows


@criterion(1, "minimal sequences match the three worked examples bit-exactly")
def test_criterion_1_minimal_sequences():
    start = time.perf_counter()
    for polygon, row, arrows in [
        (golden.POLYGON_17, golden.S_17, golden.S_17_ARROWS),
        (golden.POLYGON_20, golden.S_20, golden.S_20_ARROWS),
        (golden.POLYGON_12, golden.S_12, golden.S_12_ARROWS),
    ]:
        assert_sequence_matches(minimal_abs(parse_polygon(polygon)), row, arrows)
    assert time.perf_counter() - start < 1.0


@criterion(2, "modification traces reproduce both worked cascades exactly")
def test_criterion_2_traces():
    start = time.perf_counter()

    trace = full_modification(
        minimal_abs(parse_polygon(golden.POLYGON_17)), parse_pair(golden.PAIR_17)
    )
    a_sets = {n: {t.token for t in m} for n, m in trace.a_sets().items()}
    b_sets = {n: {t.token for t in m} for n, m in trace.b_sets().items()}
    assert a_sets == {0: {"0^1_5"}, 1: set()}
    # B_1 holds the member 0^2_6, which the stage moves past its marker 0^2_7;
    # a stage set can never contain its own marker, because members must sit
    # strictly beyond the marker for the move to be defined.
    assert b_sets == {0: {"1^2_1"}, 1: {"0^2_6"}, 2: set()}
    b_markers = {s.index: s.marker.token for s in trace.b_stages()}
    assert b_markers[1] == "0^2_7"
    world = {s.index: s for s in trace.a_stages()}
    for st in trace.b_stages():
        if st.index > 0:
            world[trace.a + st.index] = st
    for k in (0, 1, 2):
        assert_sequence_matches(
            world[k].sequence,
            golden.TRACE_17["stage_orders"][k],
            golden.TRACE_17["stage_arrows"][k],
        )
    assert_sequence_matches(trace.result, golden.SPRIME_17, golden.SPRIME_17_ARROWS)
    assert trace.verdict == "Generic"

    trace = full_modification(
        minimal_abs(parse_polygon(golden.POLYGON_20)), parse_pair(golden.PAIR_20)
    )
    assert trace.a == 1
    b_sets = {n: {t.token for t in m} for n, m in trace.b_sets().items()}
    assert b_sets == {
        0: {"1^2_1", "1^3_1"},
        1: {"0^2_3", "0^3_6"},
        2: {"0^2_2"},
        3: {"1^2_1"},
        4: {"0^2_3"},
        5: set(),
    }
    assert_sequence_matches(trace.result, golden.SPRIME_20, golden.SPRIME_20_ARROWS)
    assert trace.verdict == "NonGenericLengthDrop"

    assert time.perf_counter() - start < 1.0


@criterion(3, "both reference polygons yield exactly the six boundary pairs")
def test_criterion_3_boundary_pairs():
    start = time.perf_counter()
    expected = {parse_pair(p) for p in golden.SIX_PAIRS}
    for polygon in (golden.POLYGON_12, golden.POLYGON_17):
        assert boundary_set(parse_polygon(polygon)).pair_set() == expected
    assert time.perf_counter() - start < 1.0


@criterion(4, "boundary sets equal the specialization-order oracle for h <= 8")
def test_criterion_4_oracle_equivalence():
    for poly in enumerate_polygons(8):
        assert boundary_set(poly).types() == boundary_set_oracle(poly).types(), str(poly)


@criterion(5, "sequence length equals Coxeter length for every word, h <= 8")
def test_criterion_5_length_identity():
    start = time.perf_counter()
    for h in range(1, 9):
        for bits in itertools.product((0, 1), repeat=h):
            ctx = JWContext(h=h, c=sum(bits))
            assert length(abs_from_binary_sequence(bits)) == coxeter_length(
                binary_to_jw(bits, ctx)
            )
    assert time.perf_counter() - start < 60.0


@criterion(6, "direct-sum, curtailment and duality verifications all pass")
def test_criterion_6_verification_suites():
    for poly in enumerate_polygons(10):
        if poly.z in (2, 3):
            report = verify_direct_sum(poly)
            assert report.ok, (str(poly), report.witness)
    for poly in enumerate_polygons(12):
        if poly.z != 2:
            continue
        if 2 * poly.segments[1].n >= poly.segments[1].height:
            report = verify_curtailment(poly)
            assert report.ok, (str(poly), report.witness)
        report = verify_duality(poly)
        assert report.ok, (str(poly), report.witness)


@criterion(7, "generic verdicts occur only for adjacent pairs, h <= 10")
def test_criterion_7_adjacency_sweep():
    rows = modification_census(10)
    bad = [r for r in rows if r.verdict == GENERIC and not r.adjacent]
    if bad:
        samples = ", ".join(f"{r.polygon} pair {r.pair}" for r in bad[:3])
        pytest.fail(
            f"{len(bad)} generic verdicts from non-adjacent pairs in {len(rows)} "
            f"traces at h <= 10 (e.g. {samples}). Swapping two equal segments "
            "is a symmetry of the whole cascade, so whenever a polygon repeats "
            "a segment next to the pair, a generic verdict appears at q != r+1; "
            "adjacency only holds after renaming equal segments "
            "(test_modification.py::TestVerdicts::test_generic_implies_adjacent_after_renaming)."
        )


@criterion(8, "every generic trace satisfies the position and type bridge, h <= 8")
def test_criterion_8_weyl_bridge():
    checked = 0
    for poly in enumerate_polygons(8):
        S = minimal_abs(poly)
        ctx = JWContext.for_polygon(poly)
        from stratabound.modification import eligible_pairs

        for pair in eligible_pairs(S):
            trace = full_modification(S, pair)
            if trace.verdict != GENERIC:
                continue
            w_prime, _u, eps = specialization_to_weyl(trace, ctx)
            p_source = Permutation(S.arrow_images())
            s = Permutation.transposition(
                ctx.h, S.position(pair.zero), S.position(pair.one)
            )
            p_result = Permutation(trace.result.arrow_images())
            assert p_result == eps * (p_source * s) * eps.inverse()
            assert w_prime == binary_to_jw(to_binary_sequence(trace.result), ctx)
            checked += 1
    assert checked >= 1000  # h <= 8 supplies over a thousand generic traces
