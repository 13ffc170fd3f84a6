"""Sodium-closeness scoring, utility matrices, and top-k extraction.

The per-item health score is a linear closeness measure against a
per-meal sodium target: 1 at an exact match, falling to 0 at zero
sodium or at twice the target. An optional asymmetry knob penalizes
exceeding the target more steeply than undershooting it, for users who
must cap rather than merely meet their sodium intake.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .catalog import MenuItem
from .physio import (
    ScenarioInput,
    SodiumNeed,
    UserProfile,
    UnsupportedAge,
    WeightConvention,
    sodium_need,
)

DEFAULT_MEAL_FRACTION = 1.0 / 3.0


class InvalidFraction(ValueError):
    """meal_fraction outside (0, 1]."""


class ZeroTarget(ValueError):
    """The sodium target is zero; closeness to it is undefined."""


class AxisMismatch(ValueError):
    """Matrices to combine do not share user/item axes."""


class DegenerateWeights(ValueError):
    """All combination weights are zero."""


@dataclass(frozen=True)
class MealBudget:
    """Per-meal sodium target carved out of a daily total."""

    target_mg: float
    source_total_mg: float
    meal_fraction: float


@dataclass(frozen=True)
class UtilityMatrix:
    """Dense users-by-items score grid, every entry in [0, 1]."""

    user_ids: tuple[str, ...]
    item_ids: tuple[str, ...]
    scores: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "user_ids", tuple(self.user_ids))
        object.__setattr__(self, "item_ids", tuple(self.item_ids))
        object.__setattr__(
            self, "scores", tuple(tuple(row) for row in self.scores)
        )
        if len(self.scores) != len(self.user_ids):
            raise ValueError(
                f"{len(self.scores)} rows for {len(self.user_ids)} users"
            )
        for row in self.scores:
            if len(row) != len(self.item_ids):
                raise ValueError(
                    f"row of width {len(row)} for {len(self.item_ids)} items"
                )
            for score in row:
                if not 0.0 <= score <= 1.0:
                    raise ValueError(f"score {score} outside [0, 1]")


@dataclass(frozen=True)
class RankedEntry:
    item_id: str
    score: float
    sodium_mg: float
    distance_km: float


@dataclass(frozen=True)
class RankedList:
    """Entries in descending score; ties broken by distance then item_id."""

    entries: tuple[RankedEntry, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        for prev, cur in zip(self.entries, self.entries[1:]):
            if cur.score > prev.score:
                raise ValueError("entries are not in descending score order")


def meal_budget(need: SodiumNeed, meal_fraction: float = DEFAULT_MEAL_FRACTION) -> MealBudget:
    """Allocate a fraction of the daily sodium total to one meal."""
    if not 0.0 < meal_fraction <= 1.0:
        raise InvalidFraction(f"meal_fraction must be in (0, 1], got {meal_fraction}")
    return MealBudget(
        target_mg=need.total_na * meal_fraction,
        source_total_mg=need.total_na,
        meal_fraction=meal_fraction,
    )


def health_score(
    item_sodium: float, budget: MealBudget, penalty_alpha: float = 1.0
) -> float:
    """Linear closeness of an item's sodium to the per-meal target.

    Returns max(0, 1 - |sodium - target| / target). With
    ``penalty_alpha`` > 1 the deficit above target is scaled by alpha,
    making overshoot cost more than undershoot (the default 1.0 keeps
    the symmetric linear form).
    """
    if item_sodium < 0:
        raise ValueError(f"item_sodium must be non-negative, got {item_sodium}")
    if penalty_alpha <= 0:
        raise ValueError(f"penalty_alpha must be positive, got {penalty_alpha}")
    if budget.target_mg == 0:
        raise ZeroTarget("meal budget target is zero; scores are undefined")
    deviation = item_sodium - budget.target_mg
    if deviation > 0:
        deviation *= penalty_alpha
    return max(0.0, 1.0 - abs(deviation) / budget.target_mg)


def build_utility_matrix(
    profiles: list[UserProfile],
    scenarios: list[ScenarioInput],
    items: list[MenuItem],
    meal_fraction: float = DEFAULT_MEAL_FRACTION,
    convention: WeightConvention = WeightConvention.LBS_ACTIVITY,
    penalty_alpha: float = 1.0,
) -> UtilityMatrix:
    """Score every (user, item) pair against per-user sodium budgets.

    ``scenarios`` pairs positionally with ``profiles``. Physio errors
    fail the whole call, tagged with the offending user_id.
    """
    if len(profiles) != len(scenarios):
        raise ValueError(
            f"{len(profiles)} profiles but {len(scenarios)} scenarios"
        )
    rows = []
    for profile, scenario in zip(profiles, scenarios):
        try:
            need = sodium_need(profile, scenario, convention)
        except UnsupportedAge as exc:
            raise UnsupportedAge(f"user {profile.user_id}: {exc}") from exc
        budget = meal_budget(need, meal_fraction)
        rows.append(
            tuple(health_score(item.sodium_mg, budget, penalty_alpha) for item in items)
        )
    return UtilityMatrix(
        user_ids=tuple(p.user_id for p in profiles),
        item_ids=tuple(i.item_id for i in items),
        scores=tuple(rows),
    )


def combine_matrices(
    matrices: list[UtilityMatrix], weights: list[float]
) -> UtilityMatrix:
    """Entry-wise weighted mean of matrices sharing identical axes.

    Weights are normalized to sum 1; zero-weight matrices drop out, so a
    single effective matrix passes through unchanged. Each output entry
    is clamped into the [min, max] envelope of its inputs, which keeps
    float round-off from ever leaking outside [0, 1].
    """
    if not matrices:
        raise ValueError("need at least one matrix")
    if len(weights) != len(matrices):
        raise ValueError(f"{len(weights)} weights for {len(matrices)} matrices")
    for weight in weights:
        if weight < 0:
            raise ValueError(f"weights must be non-negative, got {weight}")
    axes = (matrices[0].user_ids, matrices[0].item_ids)
    for matrix in matrices[1:]:
        if (matrix.user_ids, matrix.item_ids) != axes:
            raise AxisMismatch("matrices do not share user/item axes")
    total = sum(weights)
    if total <= 0:
        raise DegenerateWeights("all combination weights are zero")

    active = [(m, w / total) for m, w in zip(matrices, weights) if w > 0]
    if len(active) == 1:
        matrix, _ = active[0]
        return UtilityMatrix(axes[0], axes[1], matrix.scores)

    n_users, n_items = len(axes[0]), len(axes[1])
    rows = []
    for u in range(n_users):
        row = []
        for i in range(n_items):
            entries = [m.scores[u][i] for m, _ in active]
            blended = sum(w * m.scores[u][i] for m, w in active)
            row.append(min(max(blended, min(entries)), max(entries)))
        rows.append(tuple(row))
    return UtilityMatrix(axes[0], axes[1], tuple(rows))


def top_k(
    matrix_row: list[float],
    items: list[MenuItem],
    k: int,
    distances: list[float],
) -> RankedList:
    """Highest-k items by score; ties resolve by distance then item_id.

    ``k`` larger than the item count returns everything; ``k`` = 0
    returns an empty list.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if not len(matrix_row) == len(items) == len(distances):
        raise ValueError(
            f"length mismatch: {len(matrix_row)} scores, {len(items)} items, "
            f"{len(distances)} distances"
        )
    order = sorted(
        range(len(items)),
        key=lambda i: (-matrix_row[i], distances[i], items[i].item_id),
    )
    return RankedList(
        entries=tuple(
            RankedEntry(
                item_id=items[i].item_id,
                score=matrix_row[i],
                sodium_mg=items[i].sodium_mg,
                distance_km=distances[i],
            )
            for i in order[: min(k, len(items))]
        )
    )
