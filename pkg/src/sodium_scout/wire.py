"""Wire formats: canonical JSON emission and request parsing.

Every JSON surface (HTTP bodies, batch result files, CLI output) goes
through :func:`dumps_canonical`, which fixes key order to insertion
order and formats every float with exactly four decimal places, so
identical inputs produce identical bytes on any platform.

Parsing distinguishes two failure classes: :class:`MalformedRequest`
for structural problems (bad JSON, missing fields, wrong JSON types),
which the service maps to 400, and ordinary ``ValueError`` family
errors for well-formed values that violate domain rules, mapped to 422.
"""

from __future__ import annotations

import io
import json
from datetime import datetime
from typing import Any

from .catalog import MenuItem
from .filters import FilterReport, QueryContext
from .physio import ScenarioInput, SodiumNeed, UserProfile
from .ranking import MealBudget


class MalformedRequest(ValueError):
    """The payload's structure is wrong: not decodable into the schema."""


def _format_float(value: float) -> str:
    if value == 0.0:
        value = 0.0  # normalize -0.0
    return f"{value:.4f}"


def _emit(value: Any, out: io.StringIO) -> None:
    if value is None:
        out.write("null")
    elif value is True:
        out.write("true")
    elif value is False:
        out.write("false")
    elif isinstance(value, int):
        out.write(str(value))
    elif isinstance(value, float):
        out.write(_format_float(value))
    elif isinstance(value, str):
        out.write(json.dumps(value, ensure_ascii=False))
    elif isinstance(value, dict):
        out.write("{")
        for index, (key, item) in enumerate(value.items()):
            if index:
                out.write(",")
            out.write(json.dumps(str(key), ensure_ascii=False))
            out.write(":")
            _emit(item, out)
        out.write("}")
    elif isinstance(value, (list, tuple)):
        out.write("[")
        for index, item in enumerate(value):
            if index:
                out.write(",")
            _emit(item, out)
        out.write("]")
    else:
        raise TypeError(f"cannot serialize {type(value).__name__}")


def dumps_canonical(value: Any) -> str:
    """Serialize to compact, byte-stable JSON (floats at 4 decimals)."""
    out = io.StringIO()
    _emit(value, out)
    return out.getvalue()


# ---------------------------------------------------------------------------
# parsing helpers

def require_field(obj: dict, key: str, where: str) -> Any:
    if key not in obj:
        raise MalformedRequest(f"{where}: missing field {key!r}")
    return obj[key]


def as_object(value: Any, where: str) -> dict:
    if not isinstance(value, dict):
        raise MalformedRequest(f"{where}: expected a JSON object")
    return value


def as_number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise MalformedRequest(f"{where}: expected a number, got {value!r}")
    return float(value)


def as_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise MalformedRequest(f"{where}: expected an integer, got {value!r}")
    return value


def as_str(value: Any, where: str) -> str:
    if not isinstance(value, str):
        raise MalformedRequest(f"{where}: expected a string, got {value!r}")
    return value


def as_str_list(value: Any, where: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise MalformedRequest(f"{where}: expected a list of strings")
    return value


def as_latlon(value: Any, where: str) -> tuple[float, float]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise MalformedRequest(f"{where}: expected [lat, lon]")
    return (as_number(value[0], where), as_number(value[1], where))


def parse_timestamp(value: Any, where: str) -> datetime:
    """ISO 8601 with explicit UTC offset; a trailing Z means +00:00."""
    text = as_str(value, where)
    if text.endswith(("Z", "z")):
        text = text[:-1] + "+00:00"
    try:
        stamp = datetime.fromisoformat(text)
    except ValueError as exc:
        raise MalformedRequest(f"{where}: invalid timestamp {value!r}") from exc
    if stamp.tzinfo is None:
        raise MalformedRequest(f"{where}: timestamp must include a UTC offset")
    return stamp


def parse_profile(obj: Any, where: str = "profile") -> UserProfile:
    obj = as_object(obj, where)
    return UserProfile(
        user_id=as_str(require_field(obj, "user_id", where), f"{where}.user_id"),
        height=as_number(require_field(obj, "height", where), f"{where}.height"),
        weight=as_number(require_field(obj, "weight", where), f"{where}.weight"),
        sex=as_str(require_field(obj, "sex", where), f"{where}.sex"),
        age=as_int(require_field(obj, "age", where), f"{where}.age"),
        health_status=as_str(obj.get("health_status", ""), f"{where}.health_status"),
        allergens=frozenset(as_str_list(obj.get("allergens", []), f"{where}.allergens")),
        diet=as_str(obj.get("diet", "none"), f"{where}.diet"),
    )


def parse_scenario(obj: Any, where: str = "scenario") -> ScenarioInput:
    obj = as_object(obj, where)
    return ScenarioInput(
        steps=as_int(require_field(obj, "steps", where), f"{where}.steps"),
        floors=as_int(require_field(obj, "floors", where), f"{where}.floors"),
        altitude=as_number(require_field(obj, "altitude", where), f"{where}.altitude"),
        temperature=as_number(
            require_field(obj, "temperature", where), f"{where}.temperature"
        ),
        query_time=parse_timestamp(
            require_field(obj, "query_time", where), f"{where}.query_time"
        ),
        location=as_latlon(require_field(obj, "location", where), f"{where}.location"),
    )


def parse_query(
    obj: Any,
    scenario: ScenarioInput,
    default_radius_km: float = 30.0,
    where: str = "query",
) -> QueryContext:
    """Query context; location and time default to the scenario's."""
    obj = as_object(obj, where) if obj is not None else {}
    location = scenario.location
    if "user_location" in obj:
        location = as_latlon(obj["user_location"], f"{where}.user_location")
    query_time = scenario.query_time
    if "query_time" in obj:
        query_time = parse_timestamp(obj["query_time"], f"{where}.query_time")
    radius = default_radius_km
    if "radius_km" in obj:
        radius = as_number(obj["radius_km"], f"{where}.radius_km")
    return QueryContext(user_location=location, query_time=query_time, radius_km=radius)


# ---------------------------------------------------------------------------
# emission helpers

def wire_profile(profile: UserProfile) -> dict:
    return {
        "user_id": profile.user_id,
        "height": profile.height,
        "weight": profile.weight,
        "sex": profile.sex.value,
        "age": profile.age,
        "health_status": profile.health_status,
        "allergens": sorted(profile.allergens),
        "diet": profile.diet.value,
    }


def wire_scenario(scenario: ScenarioInput) -> dict:
    return {
        "steps": scenario.steps,
        "floors": scenario.floors,
        "altitude": scenario.altitude,
        "temperature": scenario.temperature,
        "query_time": scenario.query_time.isoformat(),
        "location": list(scenario.location),
    }


def wire_sodium_need(need: SodiumNeed) -> dict:
    return {
        "bmr": need.bmr,
        "step_calories": need.step_calories,
        "stair_calories": need.stair_calories,
        "daily_calories": need.daily_calories,
        "basic_na": need.basic_na,
        "temp_na": need.temp_na,
        "alti_na": need.alti_na,
        "total_na": need.total_na,
    }


def wire_budget(budget: MealBudget) -> dict:
    return {
        "target_mg": budget.target_mg,
        "source_total_mg": budget.source_total_mg,
        "meal_fraction": budget.meal_fraction,
    }


def wire_filter_report(report: FilterReport) -> dict:
    return {
        "input_count": report.input_count,
        "passed_count": report.passed_count,
        "exclusions": [[item_id, reason] for item_id, reason in report.exclusions],
    }


def wire_item(item: MenuItem) -> dict:
    record = {
        "item_id": item.item_id,
        "restaurant_id": item.restaurant_id,
        "name": item.name,
        "sodium_mg": item.sodium_mg,
        "calories": item.calories,
        "allergens": sorted(item.allergens),
        "diet_tags": sorted(item.diet_tags),
    }
    if item.price is not None:
        record["price"] = item.price
    return record
