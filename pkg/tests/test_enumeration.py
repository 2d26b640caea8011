"""Isomorphism-free enumeration and the conjecture scan."""

import json

import pytest

from factorlab.enumeration import (
    connected_keys,
    enumerate_connected,
    enumerate_delta_critical,
    scan_conjectures,
)
from factorlab.graphs import (
    CapabilityError,
    Graph,
    canonical_form,
    complete_graph,
    cycle_graph,
    is_connected,
    parse_graph6,
    to_graph6,
)
from oracles import burnside_graph_count, connected_counts_via_euler


class TestEnumerateConnected:
    def test_small_counts_against_edge_subset_oracle(self):
        # brute force over all 2^(n choose 2) edge subsets, classes by
        # library canonical form (validated independently in test_graphs)
        for n, expected in [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21)]:
            all_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
            classes = set()
            for mask in range(1 << len(all_edges)):
                g = Graph.from_edges(
                    n, [e for i, e in enumerate(all_edges) if mask >> i & 1])
                if is_connected(g):
                    classes.add(canonical_form(g))
            assert len(classes) == expected
            keys = connected_keys(n)
            assert len(keys) == expected
            assert set(keys) == classes

    def test_counts_match_burnside_euler_oracle(self):
        # independent counting oracle: Burnside for all graphs up to iso,
        # inverse Euler transform for the connected ones
        all_counts = [burnside_graph_count(n) for n in range(1, 8)]
        assert all_counts == [1, 2, 4, 11, 34, 156, 1044]
        connected = connected_counts_via_euler(all_counts)
        assert connected == [len(connected_keys(n)) for n in range(1, 8)]

    def test_representatives_are_canonical_and_connected(self):
        for g in enumerate_connected(6):
            assert is_connected(g)
            assert to_graph6(g).encode("ascii") == canonical_form(g)

    def test_pairwise_non_isomorphic(self):
        keys = connected_keys(6)
        assert len(set(keys)) == len(keys)

    def test_sorted_deterministic(self):
        keys = connected_keys(7)
        assert keys == sorted(keys)

    def test_capability_bounds(self):
        with pytest.raises(CapabilityError):
            connected_keys(0)
        with pytest.raises(CapabilityError):
            connected_keys(10)

    def test_parallel_agrees_with_serial(self):
        from factorlab import enumeration

        serial = connected_keys(6)
        enumeration._ALL_CACHE.pop(5, None)
        enumeration._CONNECTED_CACHE.pop(6, None)
        parallel = connected_keys(6, jobs=2)
        assert parallel == serial


class TestEnumerateDeltaCritical:
    def test_n3_exactly_triangle(self):
        crits = list(enumerate_delta_critical(3))
        assert [to_graph6(g) for g in crits] == [to_graph6(complete_graph(3))]

    def test_n4_none(self):
        assert list(enumerate_delta_critical(4)) == []

    def test_n5_fixture(self):
        # frozen from the exhaustive filter: C5, K4 with one edge
        # subdivided, and K5 minus an edge; K5 itself is not critical
        crits = {to_graph6(g) for g in enumerate_delta_critical(5)}
        assert to_graph6(parse_graph6(canonical_form(cycle_graph(5)).decode())) in crits
        assert canonical_form(complete_graph(5)).decode() not in crits
        assert len(crits) == 3

    def test_counts_up_to_seven(self):
        assert [sum(1 for _ in enumerate_delta_critical(n)) for n in (3, 4, 5, 6, 7)] == \
            [1, 0, 3, 0, 22]

    def test_capability(self):
        with pytest.raises(CapabilityError):
            list(enumerate_delta_critical(9))


class TestScanConjectures:
    def test_empty_range(self):
        report = scan_conjectures(0)
        assert report.counts["connected"] == 0
        assert report.records == [] and report.counterexamples == []

    def test_small_scan_content(self):
        report = scan_conjectures(5, delta_ge_half_only=True)
        assert report.counterexamples == []
        assert report.counts["delta_critical"] == 4
        assert report.counts["by_n"]["5"]["delta_critical"] == 3
        for record in report.records:
            assert record["delta_critical"] and record["delta_ge_half"]
            assert record["alpha_le_half"] and record["has_two_factor"]
            assert record["audits"]["vizing-adjacency"] == "pass"

    def test_unfiltered_keeps_all_records(self):
        filtered = scan_conjectures(5, delta_ge_half_only=True)
        unfiltered = scan_conjectures(5, delta_ge_half_only=False)
        assert len(unfiltered.records) >= len(filtered.records)
        assert unfiltered.counterexamples == []

    def test_summary_schema(self):
        summary = scan_conjectures(4).summary_json()
        assert summary["schema"] == "factorlab/1"
        assert summary["kind"] == "scan-summary"

    def test_persistence_and_resume(self, tmp_path):
        out = tmp_path / "scan.jsonl"
        first = scan_conjectures(5, out_path=str(out))
        body = out.read_bytes()
        lines = [json.loads(line) for line in body.decode().splitlines()]
        assert [r["graph6"] for r in lines] == [r["graph6"] for r in first.records]
        # resume: dropping one line forces one recomputation, output identical
        trimmed = body.decode().splitlines()[:-1]
        out.write_text("\n".join(trimmed) + "\n")
        second = scan_conjectures(5, out_path=str(out))
        assert out.read_bytes() == body
        assert second.records == first.records

    def test_determinism_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
        scan_conjectures(5, out_path=str(a))
        scan_conjectures(5, out_path=str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_parallel_scan_agrees_with_serial(self):
        serial = scan_conjectures(5, jobs=1)
        parallel = scan_conjectures(5, jobs=2)
        assert parallel.records == serial.records
        assert parallel.counts == serial.counts

    def test_capability(self):
        with pytest.raises(CapabilityError):
            scan_conjectures(9)
