"""Machine checks for the structural guarantees of weak and strict saddles.

`check_interchangeability` verifies, for one game, that all weak saddles are
interchangeable (cross products of saddles are saddles) and equivalent
(saddle subgames coincide up to row/column permutation). The remaining
checks cover strict-saddle uniqueness, uniqueness on confrontation games,
the distinct-payoff case, the subgame restriction lemma used by
`find_saddle`, and value/equilibrium consistency of saddles. `run_trials`
drives them over seeded random campaigns and reports replayable witnesses
for any failure: these properties admit no exceptions, so a single failed
trial is a falsification, not noise.
"""

from __future__ import annotations

import enum
import multiprocessing
import time
from dataclasses import dataclass, replace

import numpy as np

from .dominance import DominanceMode
from .equilibrium import embed_strategy, game_value, is_nash, nash_equilibrium
from .errors import GameInputError
from .game import ActionProduct, ZeroSumGame
from .generators import GeneratorConfig, GeneratorKind, generate, trial_seed
from .solver import (
    DEFAULT_SIZE_GUARD,
    SaddleSet,
    all_gsps,
    cross_products,
    enumerate_saddles,
    is_gsp,
    permutation_equivalent,
)


class CheckKind(enum.Enum):
    INTERCHANGEABILITY = "interchangeability"
    STRICT_UNIQUE = "strict_unique"
    CONFRONTATION_UNIQUE = "confrontation_unique"
    DISTINCT_UNIQUE = "distinct_unique"
    SUBGAME_RESTRICTION = "subgame_restriction"
    NASH_CONSISTENCY = "nash_consistency"

    @classmethod
    def from_token(cls, token: str) -> "CheckKind":
        try:
            return cls(token)
        except ValueError:
            raise GameInputError(
                f"unknown check {token!r}; expected one of {[k.value for k in cls]}"
            ) from None


_CHECK_ORDER = tuple(CheckKind)


@dataclass(frozen=True)
class Violation:
    claim: str
    products: tuple[ActionProduct, ActionProduct]

    def describe(self) -> str:
        (r1, c1), (r2, c2) = (
            (p.row_set, p.col_set) for p in self.products
        )
        return f"{self.claim}: {r1}x{c1} vs {r2}x{c2}"


@dataclass(frozen=True)
class InterchangeabilityVerdict:
    game_digest: str
    mode: DominanceMode
    saddles: SaddleSet
    interchange_ok: bool
    equivalence_ok: bool
    witnesses: tuple[tuple[ActionProduct, ActionProduct, object], ...]
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return self.interchange_ok and self.equivalence_ok


@dataclass(frozen=True)
class CheckVerdict:
    ok: bool
    violations: tuple[str, ...] = ()


def check_interchangeability(
    game: ZeroSumGame,
    mode: DominanceMode = DominanceMode.WEAK,
    size_guard: int = DEFAULT_SIZE_GUARD,
) -> InterchangeabilityVerdict:
    """Interchangeability and permutation equivalence over all saddle pairs.

    Under weak (or strict) dominance any violation is a bug witness. The
    weak-require-strict variant is allowed here precisely because it breaks
    these properties; the verdict then documents the counterexample instead
    of asserting.
    """
    saddles = enumerate_saddles(game, mode, size_guard)
    violations: list[Violation] = []
    witnesses = []
    members = saddles.saddles
    for i, s1 in enumerate(members):
        for s2 in members[i + 1 :]:
            for crossed in cross_products(s1, s2):
                if crossed not in saddles:
                    violations.append(Violation("interchangeability", (s1, s2)))
                    break
            sub1, sub2 = game.subgame(s1), game.subgame(s2)
            same_shape = (
                len(s1.row_set) == len(s2.row_set)
                and len(s1.col_set) == len(s2.col_set)
            )
            witness = permutation_equivalent(sub1, sub2) if same_shape else None
            if witness is None or sub1.entry_multiset() != sub2.entry_multiset():
                violations.append(Violation("equivalence", (s1, s2)))
            else:
                witnesses.append((s1, s2, witness))
    return InterchangeabilityVerdict(
        game_digest=game.digest(),
        mode=mode,
        saddles=saddles,
        interchange_ok=not any(v.claim == "interchangeability" for v in violations),
        equivalence_ok=not any(v.claim == "equivalence" for v in violations),
        witnesses=tuple(witnesses),
        violations=tuple(violations),
    )


def check_strict_uniqueness(
    game: ZeroSumGame, size_guard: int = DEFAULT_SIZE_GUARD
) -> bool:
    return len(enumerate_saddles(game, DominanceMode.STRICT, size_guard)) == 1


def check_confrontation_uniqueness(
    game: ZeroSumGame, size_guard: int = DEFAULT_SIZE_GUARD
) -> bool:
    if not game.is_confrontation():
        raise GameInputError("uniqueness check requires a confrontation game")
    return len(enumerate_saddles(game, DominanceMode.WEAK, size_guard)) == 1


def check_distinct_uniqueness(
    game: ZeroSumGame, size_guard: int = DEFAULT_SIZE_GUARD
) -> bool:
    """With pairwise-distinct payoffs the unique weak saddle is the strict one."""
    weak = enumerate_saddles(game, DominanceMode.WEAK, size_guard)
    strict = enumerate_saddles(game, DominanceMode.STRICT, size_guard)
    return len(weak) == 1 and weak.saddles == strict.saddles


def check_nash_consistency(
    game: ZeroSumGame, size_guard: int = DEFAULT_SIZE_GUARD
) -> CheckVerdict:
    """Every weak saddle preserves the game value and carries an equilibrium.

    For each saddle: the subgame's LP value must equal the full game's value
    exactly, and the subgame equilibrium embedded into the full game must
    still be an equilibrium there.
    """
    value = game_value(game)
    problems = []
    for saddle in enumerate_saddles(game, DominanceMode.WEAK, size_guard):
        sub = game.subgame(saddle)
        sub_value = game_value(sub)
        if sub_value != value:
            problems.append(
                f"saddle {saddle.row_set}x{saddle.col_set} has value "
                f"{sub_value}, game has {value}"
            )
            continue
        embedded = embed_strategy(
            nash_equilibrium(sub), saddle, game.rows, game.cols
        )
        if not is_nash(game, embedded):
            problems.append(
                f"embedded equilibrium of saddle {saddle.row_set}x{saddle.col_set} "
                "is not an equilibrium of the full game"
            )
    return CheckVerdict(ok=not problems, violations=tuple(problems))


def _reindex_within(inner: tuple[int, ...], outer: tuple[int, ...]) -> tuple[int, ...]:
    position = {v: i for i, v in enumerate(outer)}
    return tuple(position[v] for v in inner)


def check_subgame_restriction(
    game: ZeroSumGame, outer: ActionProduct, inner: ActionProduct
) -> bool:
    """Does GSP-ness of `inner` transfer between the game and the `outer` subgame?

    Requires inner within outer and outer a weak GSP; returns whether
    "inner is a weak GSP of the game" and "inner (reindexed) is a weak GSP
    of the subgame induced by outer" agree.
    """
    if not outer.contains(inner):
        raise GameInputError("inner product must lie within the outer product")
    if not is_gsp(game, outer, DominanceMode.WEAK):
        raise GameInputError("outer product must be a weak GSP")
    in_game = is_gsp(game, inner, DominanceMode.WEAK)
    reindexed = ActionProduct(
        _reindex_within(inner.row_set, outer.row_set),
        _reindex_within(inner.col_set, outer.col_set),
    )
    in_subgame = is_gsp(game.subgame(outer), reindexed, DominanceMode.WEAK)
    return in_game == in_subgame


@dataclass(frozen=True)
class TrialConfig:
    """A seeded campaign: `trials` generated games, each run through `checks`.

    The generator's own seed field is ignored; trial t plays with
    `trial_seed(seed, t)` so trials can run in any order or in parallel.
    """

    trials: int
    generator: GeneratorConfig
    checks: tuple[CheckKind, ...]
    seed: int

    def __post_init__(self):
        if self.trials < 1:
            raise GameInputError("a campaign needs at least one trial")
        normalized = tuple(k for k in _CHECK_ORDER if k in set(self.checks))
        if not normalized:
            raise GameInputError("a campaign needs at least one check")
        object.__setattr__(self, "checks", normalized)
        confrontational = self.generator.kind in (
            GeneratorKind.CONFRONTATION,
            GeneratorKind.TOURNAMENT,
        )
        if CheckKind.CONFRONTATION_UNIQUE in normalized and not confrontational:
            raise GameInputError(
                "confrontation uniqueness needs a confrontation or tournament generator"
            )


@dataclass(frozen=True)
class FailureWitness:
    trial: int
    seed: int
    game_text: str
    detail: str


@dataclass(frozen=True)
class CheckOutcome:
    check: CheckKind
    passed: int
    failed: int
    first_failure: FailureWitness | None


@dataclass(frozen=True)
class CampaignReport:
    seed: int
    trials: int
    generator: GeneratorConfig
    outcomes: tuple[CheckOutcome, ...]
    duration_seconds: float

    @property
    def all_passed(self) -> bool:
        return all(o.failed == 0 for o in self.outcomes)

    def to_json_dict(self) -> dict:
        """Fixed-key-order dict; identical configs give identical dicts apart
        from duration_seconds."""
        checks = []
        for o in self.outcomes:
            failure = None
            if o.first_failure is not None:
                failure = {
                    "trial": o.first_failure.trial,
                    "seed": o.first_failure.seed,
                    "game": o.first_failure.game_text,
                    "detail": o.first_failure.detail,
                }
            checks.append(
                {
                    "check": o.check.value,
                    "pass": o.passed,
                    "fail": o.failed,
                    "first_failure": failure,
                }
            )
        return {
            "schema_version": "1",
            "seed": self.seed,
            "trials": self.trials,
            "generator": {
                "kind": self.generator.kind.value,
                "rows": self.generator.rows,
                "cols": self.generator.cols,
                "bound": self.generator.bound,
            },
            "checks": checks,
            "all_passed": self.all_passed,
            "duration_seconds": self.duration_seconds,
        }


def _sample_restriction_products(game: ZeroSumGame, campaign_seed: int, trial: int):
    """Deterministically pick a weak GSP and a nested product for one trial."""
    rng = np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(campaign_seed, spawn_key=(trial, 1)))
    )
    gsps = all_gsps(game, DominanceMode.WEAK)
    outer = gsps[int(rng.integers(len(gsps)))]
    row_mask = int(rng.integers(1, 1 << len(outer.row_set)))
    col_mask = int(rng.integers(1, 1 << len(outer.col_set)))
    inner = ActionProduct(
        (v for i, v in enumerate(outer.row_set) if row_mask >> i & 1),
        (v for i, v in enumerate(outer.col_set) if col_mask >> i & 1),
    )
    return outer, inner


def _run_one_check(
    check: CheckKind, game: ZeroSumGame, config: TrialConfig, trial: int
) -> tuple[bool, str]:
    if check is CheckKind.INTERCHANGEABILITY:
        verdict = check_interchangeability(game)
        detail = "; ".join(v.describe() for v in verdict.violations)
        return verdict.ok, detail
    if check is CheckKind.STRICT_UNIQUE:
        ok = check_strict_uniqueness(game)
        return ok, "" if ok else "strict saddle not unique"
    if check is CheckKind.CONFRONTATION_UNIQUE:
        ok = check_confrontation_uniqueness(game)
        return ok, "" if ok else "weak saddle not unique in confrontation game"
    if check is CheckKind.DISTINCT_UNIQUE:
        ok = check_distinct_uniqueness(game)
        return ok, "" if ok else "weak/strict saddles differ on distinct payoffs"
    if check is CheckKind.SUBGAME_RESTRICTION:
        outer, inner = _sample_restriction_products(game, config.seed, trial)
        ok = check_subgame_restriction(game, outer, inner)
        detail = (
            ""
            if ok
            else f"restriction biconditional failed for outer "
            f"{outer.row_set}x{outer.col_set}, inner {inner.row_set}x{inner.col_set}"
        )
        return ok, detail
    verdict = check_nash_consistency(game)
    return verdict.ok, "; ".join(verdict.violations)


def _run_trial(args) -> tuple[int, list[tuple[str, bool, str]]]:
    config, trial = args
    seed = trial_seed(config.seed, trial)
    game = generate(replace(config.generator, seed=seed))
    results = []
    for check in config.checks:
        ok, detail = _run_one_check(check, game, config, trial)
        results.append((check.value, ok, detail))
    return trial, results


def run_trials(config: TrialConfig, jobs: int = 1) -> CampaignReport:
    """Run the campaign; the report does not depend on `jobs`."""
    start = time.perf_counter()
    work = [(config, t) for t in range(config.trials)]
    if jobs > 1 and config.trials > 1:
        with multiprocessing.Pool(jobs) as pool:
            raw = pool.map(_run_trial, work, chunksize=max(1, config.trials // (4 * jobs)))
    else:
        raw = [_run_trial(item) for item in work]
    raw.sort(key=lambda item: item[0])

    passed = {check: 0 for check in config.checks}
    failed = {check: 0 for check in config.checks}
    first_failure: dict[CheckKind, FailureWitness] = {}
    for trial, results in raw:
        for token, ok, detail in results:
            check = CheckKind(token)
            if ok:
                passed[check] += 1
                continue
            failed[check] += 1
            if check not in first_failure:
                seed = trial_seed(config.seed, trial)
                game = generate(replace(config.generator, seed=seed))
                first_failure[check] = FailureWitness(
                    trial=trial, seed=seed, game_text=game.to_text(), detail=detail
                )

    outcomes = tuple(
        CheckOutcome(
            check=check,
            passed=passed[check],
            failed=failed[check],
            first_failure=first_failure.get(check),
        )
        for check in config.checks
    )
    return CampaignReport(
        seed=config.seed,
        trials=config.trials,
        generator=config.generator,
        outcomes=outcomes,
        duration_seconds=time.perf_counter() - start,
    )
