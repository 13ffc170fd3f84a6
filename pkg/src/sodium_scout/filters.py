"""Static pre-filters over the item space, plus the context-signal taxonomy.

Two pre-filters shrink the candidate set before any scoring happens:
``filter_exogenous`` keeps items whose restaurant is open at query time
and within the query radius; ``filter_endogenous`` removes items that
collide with the user's allergens or dietary preference. Both return a
:class:`FilterReport` that accounts for every input item, and both are
pure functions safe under any concurrency.

Items failing several predicates are reported under the first applicable
reason in the fixed order closed, out_of_radius, allergen, diet.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime, timezone
from enum import Enum

from .catalog import Catalog, MenuItem, Restaurant, haversine_km
from .physio import Diet, UserProfile

REASON_CLOSED = "closed"
REASON_OUT_OF_RADIUS = "out_of_radius"
REASON_ALLERGEN = "allergen"
REASON_DIET = "diet"

DEFAULT_RADIUS_KM = 30.0


class SignalLayer(str, Enum):
    ENDOGENOUS = "endogenous"
    EXOGENOUS = "exogenous"


class SignalRate(str, Enum):
    STATIC = "static"
    DYNAMIC = "dynamic"


class Observability(str, Enum):
    FULLY = "fully"
    PARTIALLY = "partially"
    UNOBSERVABLE = "unobservable"


@dataclass(frozen=True)
class ContextSignal:
    """One context measurement classified on the layer/rate/observability axes."""

    name: str
    layer: SignalLayer
    rate: SignalRate
    observability: Observability
    value: float | None = None
    unit: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "layer", SignalLayer(self.layer))
        object.__setattr__(self, "rate", SignalRate(self.rate))
        object.__setattr__(self, "observability", Observability(self.observability))
        if self.observability is Observability.UNOBSERVABLE and self.value is not None:
            raise ValueError(f"signal {self.name}: unobservable signals carry no value")


@dataclass(frozen=True)
class QueryContext:
    """Where and when the user is asking, plus the search radius."""

    user_location: tuple[float, float]
    query_time: datetime
    radius_km: float = DEFAULT_RADIUS_KM

    def __post_init__(self) -> None:
        object.__setattr__(self, "user_location", tuple(self.user_location))
        lat, lon = self.user_location
        if not -90.0 <= lat <= 90.0:
            raise ValueError(f"latitude out of range: {lat}")
        if not -180.0 <= lon <= 180.0:
            raise ValueError(f"longitude out of range: {lon}")
        if self.radius_km <= 0:
            raise ValueError(f"radius_km must be positive, got {self.radius_km}")
        if self.query_time.tzinfo is None:
            raise ValueError("query_time must carry an explicit UTC offset")


@dataclass(frozen=True)
class FilterReport:
    """Accounting for one filter pass: every input is kept or listed."""

    input_count: int
    passed_count: int
    exclusions: tuple[tuple[str, str], ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "exclusions", tuple(tuple(e) for e in self.exclusions)
        )
        if self.passed_count + len(self.exclusions) != self.input_count:
            raise ValueError(
                f"report does not balance: {self.passed_count} passed + "
                f"{len(self.exclusions)} excluded != {self.input_count} input"
            )


def is_open(restaurant: Restaurant, t: datetime, tz: timezone | None = None) -> bool:
    """Whether ``t`` falls inside any of the restaurant's weekly intervals.

    ``t`` is converted to ``tz`` (the catalog's hours zone; UTC when not
    given) and matched at minute resolution: open minute inclusive,
    close minute exclusive. No listed hours means never open.
    """
    local = t.astimezone(tz if tz is not None else timezone.utc)
    day = local.weekday()
    minute = local.hour * 60 + local.minute
    return any(
        day == iv_day and open_min <= minute < close_min
        for iv_day, open_min, close_min in restaurant.hours
    )


def filter_exogenous(
    items: list[MenuItem], catalog: Catalog, ctx: QueryContext
) -> tuple[list[MenuItem], FilterReport]:
    """Keep items whose restaurant is open at query time and within radius."""
    kept: list[MenuItem] = []
    exclusions: list[tuple[str, str]] = []
    for item in items:
        restaurant = catalog.restaurants[item.restaurant_id]
        if not is_open(restaurant, ctx.query_time, catalog.hours_tz):
            exclusions.append((item.item_id, REASON_CLOSED))
        elif haversine_km(restaurant.location, ctx.user_location) > ctx.radius_km:
            exclusions.append((item.item_id, REASON_OUT_OF_RADIUS))
        else:
            kept.append(item)
    return kept, FilterReport(len(items), len(kept), tuple(exclusions))


def filter_endogenous(
    items: list[MenuItem], profile: UserProfile
) -> tuple[list[MenuItem], FilterReport]:
    """Drop items colliding with the user's allergens or dietary preference.

    Vegetarian users keep only vegetarian-tagged items and vegan users
    only vegan-tagged ones; ``diet = none`` imposes no diet constraint.
    """
    kept: list[MenuItem] = []
    exclusions: list[tuple[str, str]] = []
    for item in items:
        if profile.allergens & item.allergens:
            exclusions.append((item.item_id, REASON_ALLERGEN))
        elif profile.diet is not Diet.NONE and profile.diet.value not in item.diet_tags:
            exclusions.append((item.item_id, REASON_DIET))
        else:
            kept.append(item)
    return kept, FilterReport(len(items), len(kept), tuple(exclusions))


def scenario_signals(profile: UserProfile, steps: int, floors: int,
                     altitude_ft: float, temperature_f: float) -> list[ContextSignal]:
    """Classify the engine's inputs on the signal taxonomy axes.

    Body metrics are endogenous and static at query timescale; activity
    counters are endogenous but dynamic; weather and elevation are
    exogenous and dynamic. Sweat sodium loss itself is the unobservable
    quantity the whole model estimates.
    """
    return [
        ContextSignal("weight", SignalLayer.ENDOGENOUS, SignalRate.STATIC,
                      Observability.FULLY, profile.weight, "lb"),
        ContextSignal("age", SignalLayer.ENDOGENOUS, SignalRate.STATIC,
                      Observability.FULLY, float(profile.age), "yr"),
        ContextSignal("steps", SignalLayer.ENDOGENOUS, SignalRate.DYNAMIC,
                      Observability.FULLY, float(steps), "count"),
        ContextSignal("floors", SignalLayer.ENDOGENOUS, SignalRate.DYNAMIC,
                      Observability.FULLY, float(floors), "count"),
        ContextSignal("altitude", SignalLayer.EXOGENOUS, SignalRate.DYNAMIC,
                      Observability.FULLY, altitude_ft, "ft"),
        ContextSignal("temperature", SignalLayer.EXOGENOUS, SignalRate.DYNAMIC,
                      Observability.PARTIALLY, temperature_f, "F"),
        ContextSignal("sweat_sodium_loss", SignalLayer.ENDOGENOUS,
                      SignalRate.DYNAMIC, Observability.UNOBSERVABLE),
    ]
