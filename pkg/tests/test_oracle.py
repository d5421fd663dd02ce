"""Tests for the brute-force checker and the exhaustive/random harnesses."""

import dataclasses
import json
import random

import pytest

import kingchain.analysis
import kingchain.chain
import kingchain.hamilton
import kingchain.oracle
from kingchain import (
    Insertion,
    brute_is_king_of_induced,
    build_chain,
    exhaustive_check,
    kings,
    random_strong_tournament,
    verify_chain,
)
from kingchain.errors import (
    KingNotInSubsetError,
    MalformedCertificateError,
    OrderOutOfRangeError,
)
from kingchain.oracle import Counterexample, random_stress


def corrupted(chain, **replacements):
    return dataclasses.replace(chain, **replacements)


class TestBruteIsKingOfInduced:
    def test_three_cycle(self, three_cycle):
        assert brute_is_king_of_induced(three_cycle, 0, [0, 1, 2])

    def test_t4a_subchain(self, t4a):
        assert brute_is_king_of_induced(t4a, 1, [0, 1, 3])

    def test_t4a_non_king(self, t4a):
        assert not brute_is_king_of_induced(t4a, 3, [0, 1, 2, 3])

    def test_king_not_in_subset(self, t4a):
        with pytest.raises(KingNotInSubsetError):
            brute_is_king_of_induced(t4a, 1, [0, 2, 3])


class TestVerifyChain:
    def test_t4a_all_pass(self, t4a):
        report = verify_chain(t4a, build_chain(t4a, 1))
        assert report.passed
        assert report.first_failure is None
        assert all(c.passed for c in report.cycle_checks)
        assert all(report.insertion_checks)

    def test_reversed_cycle_fails_only_cycle_check(self, t4a):
        chain = build_chain(t4a, 1)
        bad = corrupted(chain, cycles=(chain.cycles[0], (1, 0, 3, 2)))
        report = verify_chain(t4a, bad)
        assert not report.passed
        check = report.cycle_checks[1]
        assert not check.is_cycle
        assert check.correct_length and check.contains_king and check.king_of_induced
        assert report.cycle_checks[0].passed
        assert report.insertion_checks == (True,)
        assert "not a directed cycle" in report.first_failure

    def test_stale_insertion_vertex_fails_only_linkage(self, t4a):
        chain = build_chain(t4a, 1)
        bad = corrupted(chain, insertions=(Insertion(x=1, y=3, z=0),))
        report = verify_chain(t4a, bad)
        assert not report.passed
        assert all(c.passed for c in report.cycle_checks)
        assert report.insertion_checks == (False,)
        assert report.first_failure.startswith("C3->C4")

    def test_wrong_length_fails_length_check(self, t4a):
        # Shrinking a cycle necessarily also breaks the vertex-set linkage:
        # a simple cycle's length is its vertex count.
        chain = build_chain(t4a, 1)
        bad = corrupted(chain, cycles=(chain.cycles[0], (1, 3, 0)))
        report = verify_chain(t4a, bad)
        assert not report.passed
        check = report.cycle_checks[1]
        assert not check.correct_length
        assert check.is_cycle and check.contains_king and check.king_of_induced
        assert report.cycle_checks[0].passed
        assert report.insertion_checks == (False,)

    def test_missing_king_detected(self, t4a):
        chain = build_chain(t4a, 1)
        bad = corrupted(chain, cycles=((2, 3, 0), chain.cycles[1]))
        report = verify_chain(t4a, bad)
        check = report.cycle_checks[0]
        assert not check.contains_king
        assert not check.king_of_induced

    def test_malformed_wrong_cycle_count(self, t4a):
        chain = build_chain(t4a, 1)
        with pytest.raises(MalformedCertificateError):
            verify_chain(t4a, corrupted(chain, cycles=chain.cycles[:1]))

    def test_malformed_wrong_insertion_count(self, t4a):
        chain = build_chain(t4a, 1)
        with pytest.raises(MalformedCertificateError):
            verify_chain(t4a, corrupted(chain, insertions=()))

    def test_malformed_vertex_out_of_range(self, t4a):
        chain = build_chain(t4a, 1)
        bad = corrupted(chain, cycles=(chain.cycles[0], (1, 9, 3, 0)))
        with pytest.raises(MalformedCertificateError):
            verify_chain(t4a, bad)

    def test_malformed_king_out_of_range(self, t4a):
        chain = build_chain(t4a, 1)
        with pytest.raises(MalformedCertificateError):
            verify_chain(t4a, corrupted(chain, king=7))

    def test_malformed_order_below_three(self, t4a):
        # A zero-cycle certificate for a tiny tournament must not pass vacuously.
        from kingchain import from_edge_list

        tiny = from_edge_list(2, [(0, 1)])
        chain = build_chain(t4a, 1)
        with pytest.raises(MalformedCertificateError):
            verify_chain(tiny, corrupted(chain, cycles=(), insertions=()))

    def test_mutation_sensitivity_random(self):
        # Swapping two non-king vertices of one cycle must trip the cycle
        # check or the linkage check; dropping the last cycle vertex must
        # trip the length check.
        rng = random.Random(31)
        for _ in range(25):
            n = rng.randint(4, 14)
            t = random_strong_tournament(n, rng.randint(0, 10**6))
            chain = build_chain(t, kings(t)[0])
            j = rng.randrange(len(chain.cycles))
            cyc = list(chain.cycles[j])

            shrunk = list(chain.cycles)
            shrunk[j] = tuple(cyc[:-1])
            report = verify_chain(t, corrupted(chain, cycles=tuple(shrunk)))
            assert not report.cycle_checks[j].correct_length
            assert not report.passed

            if len(cyc) >= 4:
                swapped = list(chain.cycles)
                swapped[j] = (cyc[0], cyc[2], cyc[1]) + tuple(cyc[3:])
                report = verify_chain(t, corrupted(chain, cycles=tuple(swapped)))
                assert not report.passed


class TestOracleIndependence:
    def test_verification_never_calls_construction_code(self, t4a, monkeypatch):
        chain = build_chain(t4a, 1)

        def boom(*args, **kwargs):
            raise AssertionError("oracle verification must not call this")

        for mod, name in [
            (kingchain.analysis, "is_king"),
            (kingchain.analysis, "kings"),
            (kingchain.analysis, "is_strong"),
            (kingchain.analysis, "condensation"),
            (kingchain.hamilton, "hamiltonian_path"),
            (kingchain.hamilton, "hamiltonian_cycle"),
            (kingchain.hamilton, "path_ending_at"),
            (kingchain.chain, "build_chain"),
            (kingchain.chain, "extend_cycle"),
            (kingchain.chain, "find_exit_edge"),
            (kingchain.oracle, "build_chain"),
            (kingchain.oracle, "is_strong"),
        ]:
            monkeypatch.setattr(mod, name, boom)

        assert brute_is_king_of_induced(t4a, 1, [0, 1, 3])
        assert verify_chain(t4a, chain).passed


class TestExhaustiveCheck:
    def test_order_three_by_hand(self):
        summary = exhaustive_check(3)
        assert summary.tournaments == 8
        assert summary.strong_tournaments == 2
        assert summary.pairs == 6
        assert summary.failures == 0
        assert summary.counterexample is None

    def test_order_four(self):
        summary = exhaustive_check(4)
        assert (summary.tournaments, summary.strong_tournaments) == (64, 24)
        assert summary.pairs == 72
        assert summary.failures == 0

    def test_jobs_do_not_change_counts(self):
        assert exhaustive_check(4, jobs=1) == exhaustive_check(4, jobs=3)

    def test_order_out_of_range(self):
        with pytest.raises(OrderOutOfRangeError):
            exhaustive_check(2)
        with pytest.raises(OrderOutOfRangeError):
            exhaustive_check(8)

    def test_summary_text(self):
        text = exhaustive_check(3).to_text()
        assert "tournaments=8" in text
        assert "strong=2" in text
        assert "failures=0" in text
        assert text.endswith("\n")

    def test_summary_json(self):
        obj = exhaustive_check(3).to_json_dict()
        assert obj["pairs"] == 6
        assert obj["counterexample_index"] is None


class TestRandomStress:
    def test_zero_failures(self):
        summary = random_stress(10, trials=20, seed=1)
        assert summary.failures == 0
        assert summary.first_failure is None
        assert summary.pairs >= summary.trials

    def test_repeatable(self):
        # Timing fields are excluded from equality; verdicts must match.
        assert random_stress(8, trials=10, seed=5) == random_stress(8, trials=10, seed=5)

    def test_text_output(self):
        text = random_stress(6, trials=3, seed=2).to_text()
        assert "failures=0" in text
        assert "build_seconds_p50=" in text


class TestCounterexampleDump:
    def test_dump_files(self, t4a, tmp_path):
        cx = Counterexample(
            index=41,
            n=4,
            king=1,
            stage="verify",
            detail="C4: synthetic failure for the dump test",
            tournament_text="4\n0 1\n1 2\n1 3\n2 0\n2 3\n3 0\n",
            certificate={"n": 4},
        )
        text_path, json_path = cx.dump(tmp_path)
        assert text_path.read_text().startswith("4\n")
        bundle = json.loads(json_path.read_text())
        assert bundle["index"] == 41
        assert bundle["stage"] == "verify"
        assert bundle["certificate"] == {"n": 4}
