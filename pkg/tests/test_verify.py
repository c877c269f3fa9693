import json

import pytest

from eigsum import verify
from eigsum.graphs import family_star_plus, from_edge_list, graph6_decode
from eigsum.search import canonical_form, contains_subgraph
from eigsum.spectral import s2
from eigsum.verify import FAIL, INCONCLUSIVE, PASS, VerificationReport

K33 = from_edge_list(6, [(i, j) for i in range(3) for j in range(3, 6)])


def strip_runtime(report):
    d = report.to_json_dict()
    d.pop("runtime_ms")
    return d


class TestReportType:
    def test_fail_requires_counterexample(self):
        with pytest.raises(ValueError):
            VerificationReport("x", FAIL, 1)

    def test_pass_forbids_counterexamples(self):
        with pytest.raises(ValueError):
            VerificationReport("x", PASS, 1, counterexamples=({"graph6": "Bw"},))

    def test_json_round_trip(self):
        r = verify.verify_interlacing(trials=20, n_max=6, seed=3)
        blob = verify.reports_to_json([r])
        back = json.loads(blob)["reports"][0]
        assert back["claim_id"] == r.claim_id
        assert back["status"] == r.status
        assert back["trials"] == r.trials

    def test_csv_summary(self):
        r = verify.verify_delta_spectrum(trials=10, seed=3)
        csv_text = verify.reports_to_csv([r])
        lines = csv_text.strip().splitlines()
        assert lines[0] == "claim_id,status,trials,runtime_ms"
        assert lines[1].startswith("compound-spectrum-ksums,PASS,10,")


class TestStarPlusSuites:
    def test_bounds_small_range(self):
        r = verify.verify_star_plus_bounds(7, 40)
        assert r.status == PASS

    def test_bounds_reject_small_n(self):
        with pytest.raises(ValueError):
            verify.verify_star_plus_bounds(4, 10)

    def test_monotone(self):
        r = verify.verify_monotone_f(3, 20)
        assert r.status == PASS

    def test_monotone_spot_values(self):
        # f decreases: about 0.4384 at a=3 and 0.3187 at a=4
        from fractions import Fraction

        from eigsum.spectral import star_plus_f_bracket

        f3 = star_plus_f_bracket(3, Fraction(1, 2**40)).midpoint_float()
        f4 = star_plus_f_bracket(4, Fraction(1, 2**40)).midpoint_float()
        assert abs(f3 - 0.4384471871911697) < 1e-9
        assert 0.31 < f4 < 0.32
        assert f3 > f4


class TestRandomizedSuites:
    def test_interlacing_passes_and_replays(self):
        r1 = verify.verify_interlacing(trials=120, n_max=9, seed=42)
        r2 = verify.verify_interlacing(trials=120, n_max=9, seed=42)
        assert r1.status == PASS
        assert strip_runtime(r1) == strip_runtime(r2)

    def test_interlacing_hand_example(self):
        # adding the missing edge to K2 + K1 gives the path; (3,1,0) vs (2,0,0)
        from eigsum.spectral import spectrum_of
        from eigsum.graphs import Graph, disjoint_union, path_graph

        g = disjoint_union(from_edge_list(2, [(0, 1)]), Graph(1))
        g2 = Graph(3, g.edges + ((1, 2),))
        before = spectrum_of(g).values
        after = spectrum_of(g2).values
        assert all(after[i] >= before[i] - 1e-9 for i in range(3))
        assert all(before[i] >= after[i + 1] - 1e-9 for i in range(2))

    def test_subadditivity(self):
        r = verify.verify_subadditivity(graph_trials=120, matrix_trials=60, seed=5)
        assert r.status == PASS

    def test_subadditivity_k3_example(self):
        from eigsum.graphs import complete_graph, path_graph
        from eigsum.spectral import s_k
        from eigsum.graphs import Graph

        k3 = complete_graph(3)
        p3 = Graph(3, ((0, 1), (1, 2)))
        closing = Graph(3, ((0, 2),))
        assert s_k(k3, 2) <= s_k(p3, 2) + s_k(closing, 2) + 1e-9
        assert abs(s_k(p3, 2) - 4) < 1e-9  # spectrum (3,1,0)

    def test_delta_spectrum(self):
        r = verify.verify_delta_spectrum(trials=80, seed=7)
        assert r.status == PASS


class TestTreeBound:
    def test_passes(self):
        r = verify.verify_tree_bound(n_max=8)
        assert r.status == PASS
        assert r.parameters["outside_cited_scope_n"] == [2, 3]

    def test_rejects_large(self):
        with pytest.raises(ValueError):
            verify.verify_tree_bound(n_max=12)


class TestSubgraphLemma:
    def test_vacuous_at_five(self):
        r = verify.verify_subgraph_lemma(n_max=5)
        assert r.status == PASS
        assert r.parameters["checked"] == 0

    def test_counterexamples_at_six(self):
        # the claim is false as stated: the 6-vertex complete bipartite graph
        # has S2 = 9 = e exactly, so it is a valid witness for itself and for
        # its one-edge extension, where S2 > e
        r = verify.verify_subgraph_lemma(n_max=6)
        assert r.status == FAIL
        bad = {cx["graph6"] for cx in r.counterexamples}
        assert canonical_form(K33) in bad
        k33_plus = graph6_decode(canonical_form(K33))
        k33_plus = type(k33_plus)(6, k33_plus.edges + ((0, 1),))
        assert any(
            contains_subgraph(graph6_decode(s), K33) is not None for s in bad
        )
        # under the strict-hypothesis variant no counterexample remains
        assert r.parameters["strict_variant_counterexamples"] == 0

    def test_witnesses_are_certified(self):
        r = verify.verify_subgraph_lemma(n_max=5)
        witnesses = r.parameters["witness_classes"]
        assert canonical_form(K33) in witnesses
        for s in witnesses:
            g = graph6_decode(s)
            assert s2(g) <= g.e + 1e-6


class TestCase1Split:
    def test_passes(self):
        r = verify.verify_case1_split(m_max=6)
        assert r.status == PASS
        assert r.parameters["checked_split"] > 0


class TestExtremalSuites:
    def test_min_f_edges(self):
        r = verify.verify_min_f_edges(4, 6)
        assert r.status == PASS

    def test_min_f_vertices(self):
        r = verify.verify_min_f_vertices(4, 6)
        assert r.status == PASS

    def test_laplacian_equality(self):
        r = verify.verify_laplacian_equality_vertices(4, 6)
        assert r.status == PASS
        r = verify.verify_laplacian_equality_edges(4, 6)
        assert r.status == PASS

    def test_max_s2_known_cospectral_flag(self):
        r = verify.verify_max_s2_cycledim(6, 6)
        assert r.status == PASS  # c=1 case is what must hold
        flags = r.parameters["conjecture_flags"]
        assert len(flags) == 1
        assert flags[0]["n"] == 6 and flags[0]["c"] == 3
        # the predicted graph attains the maximum; a cospectral mate ties it
        assert flags[0]["predicted"] in flags[0]["argext"]
        assert len(flags[0]["argext"]) == 2

    def test_double_star_probe(self):
        r = verify.verify_double_star_tree(4, 8)
        assert r.status == PASS
        assert r.parameters["flags"] == []
        assert all(v["matches"] for v in r.parameters["results"].values())


class TestRunner:
    def test_aliases(self):
        r = verify.run_suite("t4", m_lo=4, m_hi=5)
        assert r.claim_id == "min-f-edges"
        assert r.status == PASS

    def test_unknown_suite(self):
        with pytest.raises(KeyError):
            verify.run_suite("nope")

    def test_run_all_with_overrides(self):
        overrides = {
            "star-plus-bounds": {"n_lo": 7, "n_hi": 12},
            "monotone-f": {"a_lo": 3, "a_hi": 8},
            "interlacing": {"trials": 30, "n_max": 7, "seed": 1},
            "subadditivity": {"graph_trials": 30, "matrix_trials": 15, "seed": 1},
            "delta-spectrum": {"trials": 20, "seed": 1},
            "tree-bound": {"n_max": 7},
            "subgraph-lemma": {"n_max": 5},
            "case1-split": {"m_max": 4},
            "min-f-vertices": {"n_lo": 4, "n_hi": 5},
            "min-f-edges": {"m_lo": 4, "m_hi": 5},
            "laplacian-equality-vertices": {"n_lo": 4, "n_hi": 5},
            "laplacian-equality-edges": {"m_lo": 4, "m_hi": 5},
            "max-s2-cycledim": {"n_lo": 5, "n_hi": 6},
            "double-star-tree": {"n_lo": 4, "n_hi": 6},
        }
        reports = verify.run_all(overrides)
        assert len(reports) == len(verify.SUITES)
        statuses = {r.claim_id: r.status for r in reports}
        assert all(s in (PASS, FAIL, INCONCLUSIVE) for s in statuses.values())
        # everything passes at these ranges (the subgraph suite is vacuous there)
        assert all(s == PASS for s in statuses.values())
