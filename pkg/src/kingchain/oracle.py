"""Independent brute-force verification of cycle-chain certificates.

The certificate checks here are written straight from the definitions and
never call the construction code or the structural-query helpers; the only
shared piece is the tournament container itself. A disagreement between
construction and verification is therefore meaningful.

The two harnesses drive the full pipeline: `exhaustive_check` walks every
labeled tournament of a small order, `random_stress` samples seeded strong
tournaments of arbitrary order. Both report failure counts that are expected
to be zero.
"""

from __future__ import annotations

import json
import multiprocessing
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Iterable, Sequence

from .analysis import is_strong
from .chain import CycleChain, build_chain, certificate_json
from .core import (
    Tournament,
    enumerate_all,
    export,
    pair_count,
    random_strong_tournament,
)
from .errors import (
    KingNotInSubsetError,
    MalformedCertificateError,
    OrderOutOfRangeError,
    TournamentError,
)

EXHAUSTIVE_MIN_ORDER = 3
EXHAUSTIVE_MAX_ORDER = 7


def _two_step_covers(out_masks: tuple[int, ...], king: int, verts: Sequence[int]) -> bool:
    # Literal definition by double loop: every vertex is a direct out-neighbor
    # of the king or beaten by one of the king's out-neighbors in `verts`.
    km = out_masks[king]
    witnesses = [w for w in verts if km >> w & 1]
    for v in verts:
        if v == king:
            continue
        vbit = 1 << v
        if km & vbit:
            continue
        for w in witnesses:
            if out_masks[w] & vbit:
                break
        else:
            return False
    return True


def brute_is_king_of_induced(t: Tournament, king: int, subset: Iterable[int]) -> bool:
    """Check the king definition inside the induced subtournament by double loop."""
    verts = sorted(set(subset))
    if king not in verts:
        raise KingNotInSubsetError(f"vertex {king} not in subset")
    return _two_step_covers(t.out_masks, king, verts)


def _is_directed_cycle(out_masks: tuple[int, ...], cyc: Sequence[int]) -> bool:
    # Distinct vertices, length >= 3, every consecutive edge including the wrap.
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        return False
    prev = cyc[-1]
    for v in cyc:
        if not out_masks[prev] >> v & 1:
            return False
        prev = v
    return True


def _brute_kings(t: Tournament) -> list[int]:
    everyone = list(range(t.n))
    return [v for v in everyone if _two_step_covers(t.out_masks, v, everyone)]


@dataclass(frozen=True)
class CycleCheck:
    """Result of the per-cycle checks for the cycle of expected length `length`."""

    length: int
    is_cycle: bool
    correct_length: bool
    contains_king: bool
    king_of_induced: bool

    @property
    def passed(self) -> bool:
        return (
            self.is_cycle
            and self.correct_length
            and self.contains_king
            and self.king_of_induced
        )


@dataclass(frozen=True)
class VerificationReport:
    """Per-cycle and per-insertion verdicts plus the aggregate outcome."""

    cycle_checks: tuple[CycleCheck, ...]
    insertion_checks: tuple[bool, ...]
    passed: bool
    first_failure: str | None


def verify_chain(t: Tournament, chain: CycleChain) -> VerificationReport:
    """Recheck every certificate clause against the tournament.

    Per cycle: it is a directed cycle of t, has the right length, contains
    the king, and the king rules its induced subtournament. Per consecutive
    pair: the recorded edge (x, y) is consecutive in the earlier cycle, the
    edges x -> z and z -> y exist, z is fresh, and the later cycle's vertex
    set is exactly the earlier one's plus z.
    """
    n = t.n
    k = chain.king
    cycles = chain.cycles
    records = chain.insertions
    if n < 3:
        raise MalformedCertificateError(f"no chain exists for order {n}")
    if not 0 <= k < n:
        raise MalformedCertificateError(f"king {k} outside order {n}")
    if len(cycles) != n - 2:
        raise MalformedCertificateError(
            f"expected {n - 2} cycles for order {n}, certificate has {len(cycles)}"
        )
    if len(records) != len(cycles) - 1:
        raise MalformedCertificateError(
            f"{len(cycles)} cycles need {len(cycles) - 1} insertions, "
            f"certificate has {len(records)}"
        )
    for cyc in cycles:
        for v in cyc:
            if not 0 <= v < n:
                raise MalformedCertificateError(f"cycle vertex {v} outside order {n}")
    for rec in records:
        for v in rec:
            if not 0 <= v < n:
                raise MalformedCertificateError(f"insertion vertex {v} outside order {n}")

    out_masks = t.out_masks
    first_failure: str | None = None
    cycle_checks = []
    for j, cyc in enumerate(cycles):
        want = j + 3
        size = len(cyc)
        is_cycle = _is_directed_cycle(out_masks, cyc)
        correct_length = size == want
        contains_king = k in cyc
        king_of_induced = contains_king and _two_step_covers(out_masks, k, cyc)
        check = CycleCheck(want, is_cycle, correct_length, contains_king, king_of_induced)
        cycle_checks.append(check)
        if first_failure is None and not check.passed:
            if not is_cycle:
                first_failure = f"C{want}: not a directed cycle of the tournament"
            elif not correct_length:
                first_failure = f"C{want}: length {size}, expected {want}"
            elif not contains_king:
                first_failure = f"C{want}: king {k} missing"
            else:
                first_failure = f"C{want}: {k} is not a king of the induced subtournament"

    insertion_checks = []
    prev_set = set(cycles[0])
    for j, rec in enumerate(records):
        prev, nxt = cycles[j], cycles[j + 1]
        size = len(prev)
        consecutive = any(
            prev[i] == rec.x and prev[(i + 1) % size] == rec.y for i in range(size)
        )
        edges_exist = bool(out_masks[rec.x] >> rec.z & 1 and out_masks[rec.z] >> rec.y & 1)
        fresh = rec.z not in prev_set
        nxt_set = set(nxt)
        linked = nxt_set == prev_set | {rec.z}
        prev_set = nxt_set
        ok = consecutive and edges_exist and fresh and linked
        insertion_checks.append(ok)
        if first_failure is None and not ok:
            label = f"C{j + 3}->C{j + 4}"
            if not consecutive:
                first_failure = f"{label}: ({rec.x}, {rec.y}) not consecutive"
            elif not edges_exist:
                first_failure = f"{label}: edges via {rec.z} missing"
            elif not fresh:
                first_failure = f"{label}: vertex {rec.z} not fresh"
            else:
                first_failure = f"{label}: vertex sets do not differ by exactly {{{rec.z}}}"

    passed = first_failure is None
    return VerificationReport(
        cycle_checks=tuple(cycle_checks),
        insertion_checks=tuple(insertion_checks),
        passed=passed,
        first_failure=first_failure,
    )


@dataclass(frozen=True)
class Counterexample:
    """Reproduction bundle for a failure that should be impossible (a bug, not bad input)."""

    index: int
    n: int
    king: int
    stage: str  # "build" or "verify"
    detail: str
    tournament_text: str
    certificate: dict[str, Any] | None

    def dump(self, directory: str | Path) -> tuple[Path, Path]:
        """Write the tournament text and a JSON bundle; returns both paths."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        stem = f"counterexample_n{self.n}_i{self.index}_k{self.king}"
        text_path = directory / f"{stem}.txt"
        json_path = directory / f"{stem}.json"
        text_path.write_text(self.tournament_text)
        json_path.write_text(
            json.dumps(
                {
                    "index": self.index,
                    "n": self.n,
                    "king": self.king,
                    "stage": self.stage,
                    "detail": self.detail,
                    "certificate": self.certificate,
                },
                indent=2,
                sort_keys=True,
            )
            + "\n"
        )
        return text_path, json_path


@dataclass(frozen=True)
class ExhaustiveSummary:
    """Counts from one exhaustive run; equality ignores timing and job count."""

    n: int
    tournaments: int
    strong_tournaments: int
    pairs: int
    failures: int
    counterexample: Counterexample | None
    jobs: int = field(compare=False, default=1)
    elapsed_seconds: float = field(compare=False, default=0.0)

    def to_text(self) -> str:
        lines = [
            f"n={self.n}",
            f"tournaments={self.tournaments}",
            f"strong={self.strong_tournaments}",
            f"pairs={self.pairs}",
            f"failures={self.failures}",
            f"jobs={self.jobs}",
            f"elapsed_seconds={self.elapsed_seconds:.3f}",
        ]
        if self.counterexample is not None:
            lines.append(f"counterexample_index={self.counterexample.index}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "tournaments": self.tournaments,
            "strong": self.strong_tournaments,
            "pairs": self.pairs,
            "failures": self.failures,
            "jobs": self.jobs,
            "elapsed_seconds": self.elapsed_seconds,
            "counterexample_index": None
            if self.counterexample is None
            else self.counterexample.index,
        }


def _check_pair(t: Tournament, king: int, index: int) -> Counterexample | None:
    try:
        chain = build_chain(t, king)
    except TournamentError as exc:
        return Counterexample(
            index=index,
            n=t.n,
            king=king,
            stage="build",
            detail=f"{type(exc).__name__}: {exc}",
            tournament_text=export(t, "text"),
            certificate=None,
        )
    report = verify_chain(t, chain)
    if report.passed:
        return None
    return Counterexample(
        index=index,
        n=t.n,
        king=king,
        stage="verify",
        detail=report.first_failure or "unknown",
        tournament_text=export(t, "text"),
        certificate=certificate_json(t, chain),
    )


def _scan_range(args: tuple[int, int, int]) -> tuple[int, int, int, int, Counterexample | None]:
    """Worker: scan tournament indices [start, stop), abort on first failure."""
    n, start, stop = args
    tournaments = strong = pairs = failures = 0
    found: Counterexample | None = None
    for t in enumerate_all(n, start, stop):
        tournaments += 1
        if not is_strong(t):
            continue
        strong += 1
        for king in _brute_kings(t):
            pairs += 1
            found = _check_pair(t, king, t.bits)
            if found is not None:
                failures += 1
                break
        if found is not None:
            break
    return tournaments, strong, pairs, failures, found


def exhaustive_check(n: int, jobs: int = 1) -> ExhaustiveSummary:
    """Build and verify a chain for every king of every strong tournament of order n.

    With jobs > 1 the enumeration index range is split into disjoint chunks
    scanned by worker processes; counts merge by addition, and the reported
    counterexample (never expected) is the one with the lowest enumeration
    index, so results do not depend on the job count.
    """
    if not EXHAUSTIVE_MIN_ORDER <= n <= EXHAUSTIVE_MAX_ORDER:
        raise OrderOutOfRangeError(
            f"exhaustive check supports {EXHAUSTIVE_MIN_ORDER} <= n <= "
            f"{EXHAUSTIVE_MAX_ORDER}, got {n}"
        )
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    total = 1 << pair_count(n)
    started = time.perf_counter()
    if jobs == 1:
        results = [_scan_range((n, 0, total))]
    else:
        bounds = [total * i // jobs for i in range(jobs + 1)]
        chunks = [(n, bounds[i], bounds[i + 1]) for i in range(jobs)]
        with multiprocessing.Pool(jobs) as pool:
            results = pool.map(_scan_range, chunks)
    tournaments = sum(r[0] for r in results)
    strong = sum(r[1] for r in results)
    pairs = sum(r[2] for r in results)
    failures = sum(r[3] for r in results)
    examples = [r[4] for r in results if r[4] is not None]
    counterexample = min(examples, key=lambda c: c.index) if examples else None
    return ExhaustiveSummary(
        n=n,
        tournaments=tournaments,
        strong_tournaments=strong,
        pairs=pairs,
        failures=failures,
        counterexample=counterexample,
        jobs=jobs,
        elapsed_seconds=time.perf_counter() - started,
    )


@dataclass(frozen=True)
class StressSummary:
    """Counts from one randomized run; equality ignores timing."""

    n: int
    trials: int
    seed: int
    pairs: int
    failures: int
    first_failure: str | None
    build_seconds_p50: float = field(compare=False, default=0.0)
    build_seconds_p90: float = field(compare=False, default=0.0)
    build_seconds_max: float = field(compare=False, default=0.0)
    elapsed_seconds: float = field(compare=False, default=0.0)

    def to_text(self) -> str:
        lines = [
            f"n={self.n}",
            f"trials={self.trials}",
            f"seed={self.seed}",
            f"pairs={self.pairs}",
            f"failures={self.failures}",
            f"build_seconds_p50={self.build_seconds_p50:.6f}",
            f"build_seconds_p90={self.build_seconds_p90:.6f}",
            f"build_seconds_max={self.build_seconds_max:.6f}",
            f"elapsed_seconds={self.elapsed_seconds:.3f}",
        ]
        if self.first_failure is not None:
            lines.append(f"first_failure={self.first_failure}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "pairs": self.pairs,
            "failures": self.failures,
            "first_failure": self.first_failure,
            "build_seconds_p50": self.build_seconds_p50,
            "build_seconds_p90": self.build_seconds_p90,
            "build_seconds_max": self.build_seconds_max,
            "elapsed_seconds": self.elapsed_seconds,
        }


def random_stress(n: int, trials: int, seed: int) -> StressSummary:
    """Stress the pipeline on seeded random strong tournaments.

    Each trial draws random_strong_tournament(n, seed + trial) and runs the
    full build-and-verify pipeline for every king of the instance. Repeating
    a call reproduces the exact same instances and verdicts; only the timing
    fields vary.
    """
    if n < 3:
        raise OrderOutOfRangeError(f"random stress needs n >= 3, got {n}")
    started = time.perf_counter()
    pairs = failures = 0
    first_failure: str | None = None
    build_times: list[float] = []
    for trial in range(trials):
        t = random_strong_tournament(n, seed + trial)
        for king in _brute_kings(t):
            pairs += 1
            t0 = time.perf_counter()
            try:
                chain = build_chain(t, king)
            except TournamentError as exc:
                failures += 1
                if first_failure is None:
                    first_failure = f"trial {trial} king {king}: {type(exc).__name__}: {exc}"
                continue
            build_times.append(time.perf_counter() - t0)
            report = verify_chain(t, chain)
            if not report.passed:
                failures += 1
                if first_failure is None:
                    first_failure = f"trial {trial} king {king}: {report.first_failure}"
    build_times.sort()

    def percentile(q: float) -> float:
        if not build_times:
            return 0.0
        return build_times[min(len(build_times) - 1, int(q * len(build_times)))]

    return StressSummary(
        n=n,
        trials=trials,
        seed=seed,
        pairs=pairs,
        failures=failures,
        first_failure=first_failure,
        build_seconds_p50=percentile(0.50),
        build_seconds_p90=percentile(0.90),
        build_seconds_max=build_times[-1] if build_times else 0.0,
        elapsed_seconds=time.perf_counter() - started,
    )
