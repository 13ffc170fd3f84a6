"""Physiological sodium-need model.

Maps a user's body metrics plus one day of activity/environment context
onto an estimated daily calorie expenditure and a sodium budget built
from three components:

    km_walked      = 0.762 * steps / 1000
    step_calories  = 0.67 * km_walked * weight
    stair_calories = 0.026 * (floors / 3) * weight
    daily_calories = bmr + step_calories + stair_calories
    basic_na       = 1.2 * daily_calories          [mg]
    temp_na        = 0.74 * celsius, floored at 0  [mg]
    alti_na        = (meters / 300) ** 2.5         [mg]
    total_na       = basic_na + temp_na + alti_na  [mg]

The basal metabolic rate uses the Schofield weight-only equations
(kcal/day, weight in kilograms, four age brackets starting at 10 years).

By default the activity formulas consume weight in pounds while the BMR
consumes kilograms; see :class:`WeightConvention`. All arithmetic stays
in double precision; rounding belongs to presentation layers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum

KG_PER_LB = 0.45359237
M_PER_FT = 0.3048


class Sex(str, Enum):
    MALE = "male"
    FEMALE = "female"


class Diet(str, Enum):
    NONE = "none"
    VEGETARIAN = "vegetarian"
    VEGAN = "vegan"


class WeightConvention(str, Enum):
    """Which unit the activity-calorie formulas consume.

    The source tables list body weight in pounds, and feeding pounds into
    the step/stair formulas reproduces the published magnitude scale, so
    ``LBS_ACTIVITY`` is the default. ``KG_EVERYWHERE`` feeds kilograms
    into every formula instead. BMR always consumes kilograms.
    """

    LBS_ACTIVITY = "lbs-activity"
    KG_EVERYWHERE = "kg-everywhere"


class UnsupportedAge(ValueError):
    """Age below the youngest BMR bracket (10 years); the model is undefined."""


@dataclass(frozen=True)
class UserProfile:
    """Static endogenous state: anthropometrics plus dietary safety tags.

    ``height`` is in centimeters and ``weight`` in pounds, mirroring the
    intake format. ``health_status`` is a free-text tag carried for
    reporting; it enters no equation, and neither does height.
    """

    user_id: str
    height: float
    weight: float
    sex: Sex
    age: int
    health_status: str = ""
    allergens: frozenset[str] = field(default_factory=frozenset)
    diet: Diet = Diet.NONE

    def __post_init__(self) -> None:
        object.__setattr__(self, "sex", Sex(self.sex))
        object.__setattr__(self, "diet", Diet(self.diet))
        object.__setattr__(
            self, "allergens", frozenset(str(a).lower() for a in self.allergens)
        )
        if self.height <= 0:
            raise ValueError(f"height must be positive, got {self.height}")
        if self.weight <= 0:
            raise ValueError(f"weight must be positive, got {self.weight}")
        if self.age < 0:
            raise ValueError(f"age must be non-negative, got {self.age}")


@dataclass(frozen=True)
class ScenarioInput:
    """Dynamic context snapshot for one query.

    ``altitude`` is in feet, ``temperature`` in degrees Fahrenheit, and
    ``location`` is a (latitude, longitude) pair in degrees.
    ``query_time`` must carry an explicit UTC offset.
    """

    steps: int
    floors: int
    altitude: float
    temperature: float
    query_time: datetime
    location: tuple[float, float]

    def __post_init__(self) -> None:
        object.__setattr__(self, "location", tuple(self.location))
        if self.steps < 0:
            raise ValueError(f"steps must be non-negative, got {self.steps}")
        if self.floors < 0:
            raise ValueError(f"floors must be non-negative, got {self.floors}")
        lat, lon = self.location
        if not -90.0 <= lat <= 90.0:
            raise ValueError(f"latitude out of range: {lat}")
        if not -180.0 <= lon <= 180.0:
            raise ValueError(f"longitude out of range: {lon}")
        if self.query_time.tzinfo is None:
            raise ValueError("query_time must carry an explicit UTC offset")


@dataclass(frozen=True)
class SodiumNeed:
    """Computed physiological budget, all in kcal/day and mg/day."""

    bmr: float
    step_calories: float
    stair_calories: float
    daily_calories: float
    basic_na: float
    temp_na: float
    alti_na: float
    total_na: float


def lbs_to_kg(weight_lbs: float) -> float:
    return weight_lbs * KG_PER_LB


def ft_to_m(altitude_ft: float) -> float:
    return altitude_ft * M_PER_FT


def f_to_c(temp_f: float) -> float:
    return (temp_f - 32.0) * 5.0 / 9.0


def km_walked(steps: int) -> float:
    """Distance covered by ``steps`` at the standard 0.762 m stride."""
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    return 0.762 * steps / 1000.0


def step_calories(km: float, weight: float) -> float:
    """Walking energy over ``km`` kilometers: 0.67 kcal per km per unit weight."""
    if km < 0:
        raise ValueError(f"km must be non-negative, got {km}")
    if weight <= 0:
        raise ValueError(f"weight must be positive, got {weight}")
    return 0.67 * km * weight


def stair_calories(floors: int, weight: float) -> float:
    """Climbing energy: 0.026 kcal per (floors / 3) per unit weight.

    ``floors / 3`` uses real division; counts not divisible by three keep
    their fractional part.
    """
    if floors < 0:
        raise ValueError(f"floors must be non-negative, got {floors}")
    if weight <= 0:
        raise ValueError(f"weight must be positive, got {weight}")
    return 0.026 * (floors / 3.0) * weight


# Schofield weight-only coefficients, kcal/day with weight in kg.
# Rows are (minimum age, slope, intercept); bracket bounds are
# lower-inclusive, so age 18 selects the 18-29 row and 30 the 30-59 row.
_SCHOFIELD: dict[Sex, tuple[tuple[int, float, float], ...]] = {
    Sex.MALE: (
        (10, 17.686, 658.2),
        (18, 15.057, 692.2),
        (30, 11.472, 873.1),
        (60, 11.711, 587.7),
    ),
    Sex.FEMALE: (
        (10, 13.384, 692.6),
        (18, 14.818, 486.6),
        (30, 8.126, 845.6),
        (60, 9.082, 658.5),
    ),
}


def schofield_bmr(sex: Sex, age: int, weight_kg: float) -> float:
    """Basal metabolic rate in kcal/day from the Schofield equations.

    Raises :class:`UnsupportedAge` below age 10, where no bracket exists.
    """
    if weight_kg <= 0:
        raise ValueError(f"weight_kg must be positive, got {weight_kg}")
    if age < 10:
        raise UnsupportedAge(
            f"no basal-metabolism bracket for age {age}; supported ages are 10+"
        )
    slope, intercept = 0.0, 0.0
    for min_age, row_slope, row_intercept in _SCHOFIELD[Sex(sex)]:
        if age >= min_age:
            slope, intercept = row_slope, row_intercept
    return slope * weight_kg + intercept


def _activity_weight(profile: UserProfile, convention: WeightConvention) -> float:
    if WeightConvention(convention) is WeightConvention.KG_EVERYWHERE:
        return lbs_to_kg(profile.weight)
    return profile.weight


def daily_calories(
    profile: UserProfile,
    scenario: ScenarioInput,
    convention: WeightConvention = WeightConvention.LBS_ACTIVITY,
) -> float:
    """Total daily expenditure: BMR plus step and stair calories."""
    weight = _activity_weight(profile, convention)
    bmr = schofield_bmr(profile.sex, profile.age, lbs_to_kg(profile.weight))
    return (
        bmr
        + step_calories(km_walked(scenario.steps), weight)
        + stair_calories(scenario.floors, weight)
    )


def temp_na(celsius: float) -> float:
    """Sweat-driven sodium need from ambient temperature, floored at zero.

    A need cannot be negative, so sub-freezing temperatures clamp to 0.
    """
    return max(0.0, 0.74 * celsius)


def alti_na(meters: float) -> float:
    """Altitude-driven sodium need; elevations below sea level clamp to 0."""
    return (max(0.0, meters) / 300.0) ** 2.5


def sodium_need(
    profile: UserProfile,
    scenario: ScenarioInput,
    convention: WeightConvention = WeightConvention.LBS_ACTIVITY,
) -> SodiumNeed:
    """Full sodium budget for one user in one context snapshot."""
    weight = _activity_weight(profile, convention)
    bmr = schofield_bmr(profile.sex, profile.age, lbs_to_kg(profile.weight))
    steps_kcal = step_calories(km_walked(scenario.steps), weight)
    stairs_kcal = stair_calories(scenario.floors, weight)
    calories = bmr + steps_kcal + stairs_kcal
    basic = 1.2 * calories
    from_temp = temp_na(f_to_c(scenario.temperature))
    from_alti = alti_na(ft_to_m(scenario.altitude))
    return SodiumNeed(
        bmr=bmr,
        step_calories=steps_kcal,
        stair_calories=stairs_kcal,
        daily_calories=calories,
        basic_na=basic,
        temp_na=from_temp,
        alti_na=from_alti,
        total_na=basic + from_temp + from_alti,
    )
