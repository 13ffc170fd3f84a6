"""Item-space management: restaurants, menu items, and catalog snapshots.

A catalog is an immutable snapshot loaded from a UTF-8 json-lines file
with one record per line:

    {"kind": "restaurant", "restaurant_id": ..., "name": ..., "lat": ...,
     "lon": ..., "hours": [[day, open_min, close_min], ...]}
    {"kind": "item", "item_id": ..., "restaurant_id": ..., "name": ...,
     "sodium_mg": ..., "calories": ..., "allergens": [...],
     "diet_tags": [...], "price": ...}

Days are 0-6 with Monday = 0; open/close are minutes of the local day,
open inclusive and close exclusive. ``price`` is optional. Unknown
fields are ignored with a warning. ``save_catalog`` emits records in
restaurant-id then item-id order, so saving a loaded catalog reproduces
a canonically formatted file byte for byte.
"""

from __future__ import annotations

import hashlib
import io
import json
import logging
import math
import random
from dataclasses import dataclass, field
from datetime import datetime, timezone, tzinfo
from pathlib import Path
from typing import IO, Iterable, Union

logger = logging.getLogger(__name__)

EARTH_RADIUS_KM = 6371.0
MINUTES_PER_DAY = 1440

DIET_TAGS = ("vegetarian", "vegan")

_RESTAURANT_FIELDS = ("kind", "restaurant_id", "name", "lat", "lon", "hours")
_ITEM_FIELDS = (
    "kind",
    "item_id",
    "restaurant_id",
    "name",
    "sodium_mg",
    "calories",
    "allergens",
    "diet_tags",
    "price",
)


class ParseError(ValueError):
    """A record could not be decoded; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ValidationError(ValueError):
    """A record decoded fine but violates a value invariant."""


class IntegrityError(ValueError):
    """Cross-record inconsistency: dangling references or duplicate ids."""


@dataclass(frozen=True)
class Restaurant:
    restaurant_id: str
    name: str
    location: tuple[float, float]
    hours: tuple[tuple[int, int, int], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "location", tuple(self.location))
        object.__setattr__(
            self, "hours", tuple(tuple(iv) for iv in self.hours)
        )
        lat, lon = self.location
        if not -90.0 <= lat <= 90.0:
            raise ValidationError(f"restaurant {self.restaurant_id}: latitude {lat}")
        if not -180.0 <= lon <= 180.0:
            raise ValidationError(f"restaurant {self.restaurant_id}: longitude {lon}")
        per_day: dict[int, list[tuple[int, int]]] = {}
        for interval in self.hours:
            if len(interval) != 3:
                raise ValidationError(
                    f"restaurant {self.restaurant_id}: interval {interval!r} "
                    "must be [day, open_min, close_min]"
                )
            day, open_min, close_min = interval
            if not 0 <= day <= 6:
                raise ValidationError(
                    f"restaurant {self.restaurant_id}: day {day} out of range"
                )
            if not (0 <= open_min < close_min <= MINUTES_PER_DAY):
                raise ValidationError(
                    f"restaurant {self.restaurant_id}: bad interval "
                    f"open={open_min} close={close_min}"
                )
            per_day.setdefault(day, []).append((open_min, close_min))
        for day, intervals in per_day.items():
            intervals.sort()
            for (_, prev_close), (next_open, _) in zip(intervals, intervals[1:]):
                if next_open < prev_close:
                    raise ValidationError(
                        f"restaurant {self.restaurant_id}: overlapping hours on day {day}"
                    )


@dataclass(frozen=True)
class MenuItem:
    item_id: str
    restaurant_id: str
    name: str
    sodium_mg: float
    calories: float
    allergens: frozenset[str] = field(default_factory=frozenset)
    diet_tags: frozenset[str] = field(default_factory=frozenset)
    price: float | None = None

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "allergens", frozenset(str(a).lower() for a in self.allergens)
        )
        tags = {str(t).lower() for t in self.diet_tags}
        unknown = tags - set(DIET_TAGS)
        if unknown:
            raise ValidationError(
                f"item {self.item_id}: unknown diet tags {sorted(unknown)}"
            )
        if "vegan" in tags:
            tags.add("vegetarian")  # tag closure: vegan implies vegetarian
        object.__setattr__(self, "diet_tags", frozenset(tags))
        if self.sodium_mg < 0:
            raise ValidationError(
                f"item {self.item_id}: negative sodium {self.sodium_mg}"
            )
        if self.calories < 0:
            raise ValidationError(
                f"item {self.item_id}: negative calories {self.calories}"
            )
        if self.price is not None and self.price < 0:
            raise ValidationError(f"item {self.item_id}: negative price {self.price}")


@dataclass(frozen=True)
class Catalog:
    """Immutable snapshot of the item space.

    ``fingerprint`` is the sha256 of the canonical serialized content and
    identifies the snapshot deterministically; ``built_at`` records the
    wall-clock load time. ``hours_tz`` is the zone in which restaurant
    hours are interpreted (single-region assumption); it is load-time
    configuration, not part of the file format.
    """

    restaurants: dict[str, Restaurant]
    items: dict[str, MenuItem]
    built_at: datetime
    fingerprint: str
    hours_tz: tzinfo = timezone.utc

    @classmethod
    def build(
        cls,
        restaurants: Iterable[Restaurant],
        items: Iterable[MenuItem],
        hours_tz: tzinfo = timezone.utc,
    ) -> "Catalog":
        restaurant_map: dict[str, Restaurant] = {}
        for restaurant in restaurants:
            if restaurant.restaurant_id in restaurant_map:
                raise IntegrityError(
                    f"duplicate restaurant_id {restaurant.restaurant_id}"
                )
            restaurant_map[restaurant.restaurant_id] = restaurant
        item_map: dict[str, MenuItem] = {}
        for item in items:
            if item.item_id in item_map:
                raise IntegrityError(f"duplicate item_id {item.item_id}")
            if item.restaurant_id not in restaurant_map:
                raise IntegrityError(
                    f"item {item.item_id} references unknown restaurant "
                    f"{item.restaurant_id}"
                )
            item_map[item.item_id] = item
        catalog = cls(
            restaurants=restaurant_map,
            items=item_map,
            built_at=datetime.now(timezone.utc),
            fingerprint="",
            hours_tz=hours_tz,
        )
        object.__setattr__(
            catalog,
            "fingerprint",
            hashlib.sha256(_serialize(catalog)).hexdigest(),
        )
        return catalog

    def items_sorted(self) -> list[MenuItem]:
        return [self.items[item_id] for item_id in sorted(self.items)]

    def restaurants_sorted(self) -> list[Restaurant]:
        return [self.restaurants[rid] for rid in sorted(self.restaurants)]


def haversine_km(a: tuple[float, float], b: tuple[float, float]) -> float:
    """Great-circle distance in kilometers (mean Earth radius 6371 km)."""
    lat1, lon1 = math.radians(a[0]), math.radians(a[1])
    lat2, lon2 = math.radians(b[0]), math.radians(b[1])
    dlat = lat2 - lat1
    dlon = lon2 - lon1
    h = math.sin(dlat / 2.0) ** 2 + math.cos(lat1) * math.cos(lat2) * math.sin(dlon / 2.0) ** 2
    return 2.0 * EARTH_RADIUS_KM * math.asin(min(1.0, math.sqrt(h)))


def _restaurant_record(restaurant: Restaurant) -> dict:
    return {
        "kind": "restaurant",
        "restaurant_id": restaurant.restaurant_id,
        "name": restaurant.name,
        "lat": restaurant.location[0],
        "lon": restaurant.location[1],
        "hours": [list(interval) for interval in restaurant.hours],
    }


def _item_record(item: MenuItem) -> dict:
    record = {
        "kind": "item",
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


def _serialize(catalog: Catalog) -> bytes:
    out = io.StringIO()
    for restaurant in catalog.restaurants_sorted():
        out.write(json.dumps(_restaurant_record(restaurant), ensure_ascii=False))
        out.write("\n")
    for item in catalog.items_sorted():
        out.write(json.dumps(_item_record(item), ensure_ascii=False))
        out.write("\n")
    return out.getvalue().encode("utf-8")


def save_catalog(catalog: Catalog, sink: Union[str, Path, IO[bytes]]) -> None:
    """Write the catalog as canonical json-lines (id-sorted, byte-stable)."""
    payload = _serialize(catalog)
    if isinstance(sink, (str, Path)):
        Path(sink).write_bytes(payload)
    else:
        sink.write(payload)


def _require(record: dict, key: str, line_no: int):
    if key not in record:
        raise ParseError(line_no, f"missing field {key!r}")
    return record[key]


def _warn_unknown(record: dict, known: tuple[str, ...], line_no: int) -> None:
    unknown = set(record) - set(known)
    if unknown:
        logger.warning("line %d: ignoring unknown fields %s", line_no, sorted(unknown))


def _coerce_number(value, what: str, line_no: int) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ParseError(line_no, f"{what} must be a number, got {value!r}")
    return float(value)


def load_catalog(
    source: Union[str, Path, bytes, IO[bytes], IO[str]],
    format: str = "json-lines",
    hours_tz: tzinfo = timezone.utc,
) -> Catalog:
    """Load and validate a catalog from a json-lines byte stream.

    Raises :class:`ParseError` for malformed records (with line number),
    :class:`ValidationError` for invariant violations such as negative
    sodium, and :class:`IntegrityError` for dangling restaurant
    references or duplicate ids.
    """
    if format != "json-lines":
        raise ValueError(f"unsupported catalog format {format!r}")
    if isinstance(source, (str, Path)):
        text = Path(source).read_bytes().decode("utf-8")
    elif isinstance(source, bytes):
        text = source.decode("utf-8")
    else:
        raw = source.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw

    restaurants: list[Restaurant] = []
    items: list[MenuItem] = []
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise ParseError(line_no, f"invalid JSON ({exc.msg})") from exc
        if not isinstance(record, dict):
            raise ParseError(line_no, "record must be a JSON object")
        kind = record.get("kind")
        if kind == "restaurant":
            _warn_unknown(record, _RESTAURANT_FIELDS, line_no)
            hours = _require(record, "hours", line_no)
            if not isinstance(hours, list):
                raise ParseError(line_no, "hours must be a list of intervals")
            intervals = []
            for interval in hours:
                if (
                    not isinstance(interval, list)
                    or len(interval) != 3
                    or any(isinstance(v, bool) or not isinstance(v, int) for v in interval)
                ):
                    raise ParseError(
                        line_no,
                        f"hours interval {interval!r} must be [day, open_min, close_min]",
                    )
                intervals.append(tuple(interval))
            restaurants.append(
                Restaurant(
                    restaurant_id=str(_require(record, "restaurant_id", line_no)),
                    name=str(_require(record, "name", line_no)),
                    location=(
                        _coerce_number(_require(record, "lat", line_no), "lat", line_no),
                        _coerce_number(_require(record, "lon", line_no), "lon", line_no),
                    ),
                    hours=tuple(intervals),
                )
            )
        elif kind == "item":
            _warn_unknown(record, _ITEM_FIELDS, line_no)
            allergens = record.get("allergens", [])
            diet_tags = record.get("diet_tags", [])
            if not isinstance(allergens, list) or not isinstance(diet_tags, list):
                raise ParseError(line_no, "allergens and diet_tags must be lists")
            price = record.get("price")
            items.append(
                MenuItem(
                    item_id=str(_require(record, "item_id", line_no)),
                    restaurant_id=str(_require(record, "restaurant_id", line_no)),
                    name=str(_require(record, "name", line_no)),
                    sodium_mg=_coerce_number(
                        _require(record, "sodium_mg", line_no), "sodium_mg", line_no
                    ),
                    calories=_coerce_number(
                        _require(record, "calories", line_no), "calories", line_no
                    ),
                    allergens=frozenset(str(a) for a in allergens),
                    diet_tags=frozenset(str(t) for t in diet_tags),
                    price=None
                    if price is None
                    else _coerce_number(price, "price", line_no),
                )
            )
        else:
            raise ParseError(line_no, f"unknown record kind {kind!r}")
    return Catalog.build(restaurants, items, hours_tz=hours_tz)


_NAME_ADJECTIVES = (
    "Golden", "Rustic", "Coastal", "Sunset", "Harbor", "Canyon", "Verde",
    "Lucky", "Blue", "Copper", "Wild", "Urban", "Old Town", "Silver",
)
_NAME_NOUNS = (
    "Kitchen", "Grill", "Bistro", "Cantina", "Diner", "Table", "Garden",
    "Forno", "House", "Deli", "Tavern", "Noodle Bar",
)
_DISHES = (
    ("Garden Salad", 0.55), ("Lentil Soup", 0.7), ("Grilled Salmon", 0.0),
    ("Chicken Burrito", 0.0), ("Veggie Wrap", 0.8), ("Pepperoni Pizza", 0.0),
    ("Tofu Stir Fry", 0.9), ("Beef Ramen", 0.0), ("Falafel Plate", 0.85),
    ("Club Sandwich", 0.0), ("Black Bean Bowl", 0.75), ("Fish Tacos", 0.0),
    ("Mushroom Risotto", 0.6), ("Pad Thai", 0.2), ("Caesar Salad", 0.3),
    ("Turkey Melt", 0.0), ("Minestrone", 0.8), ("Carnitas Plate", 0.0),
    ("Quinoa Bowl", 0.85), ("Margherita Pizza", 0.6),
)
_ALLERGEN_POOL = (
    "dairy", "egg", "fish", "gluten", "peanut", "sesame", "shellfish",
    "soy", "tree_nut",
)


def generate_synthetic_catalog(
    seed: int,
    n_restaurants: int,
    items_per_restaurant: int,
    region: tuple[float, float, float, float],
    hours_tz: tzinfo = timezone.utc,
) -> Catalog:
    """Deterministic synthetic catalog for a bounding box.

    ``region`` is (lat1, lon1, lat2, lon2); corners may come in any
    order. Sodium per item is drawn from a log-normal (median 800 mg,
    sigma 0.7) clamped to [100, 4000] mg, which yields the long-tailed
    spread the ranking layer is meant to dig through.
    """
    if n_restaurants <= 0 or items_per_restaurant <= 0:
        raise ValueError("counts must be positive")
    lat_lo, lat_hi = sorted((region[0], region[2]))
    lon_lo, lon_hi = sorted((region[1], region[3]))
    rng = random.Random(seed)
    width = max(3, len(str(n_restaurants)))

    restaurants = []
    items = []
    for r_index in range(1, n_restaurants + 1):
        rid = f"r{r_index:0{width}d}"
        name = f"{rng.choice(_NAME_ADJECTIVES)} {rng.choice(_NAME_NOUNS)}"
        lat = rng.uniform(lat_lo, lat_hi)
        lon = rng.uniform(lon_lo, lon_hi)
        open_min = rng.choice((600, 630, 660, 690))
        close_min = rng.choice((1260, 1290, 1320, 1350, 1380))
        closed_day = rng.randrange(7) if rng.random() < 0.2 else None
        split_service = rng.random() < 0.15
        hours = []
        for day in range(7):
            if day == closed_day:
                continue
            if split_service:
                hours.append((day, open_min, 870))
                hours.append((day, 1020, close_min))
            else:
                hours.append((day, open_min, close_min))
        restaurants.append(
            Restaurant(restaurant_id=rid, name=name, location=(lat, lon), hours=tuple(hours))
        )

        for i_index in range(1, items_per_restaurant + 1):
            dish, veg_odds = rng.choice(_DISHES)
            sodium = min(4000.0, max(100.0, rng.lognormvariate(math.log(800.0), 0.7)))
            calories = min(1500.0, max(120.0, sodium * rng.uniform(0.35, 1.1)))
            allergens = frozenset(
                rng.sample(_ALLERGEN_POOL, rng.randrange(1, 4))
                if rng.random() < 0.55
                else ()
            )
            vegetarian = rng.random() < veg_odds
            vegan = vegetarian and rng.random() < 0.4
            tags = frozenset(
                t
                for t, keep in (("vegetarian", vegetarian), ("vegan", vegan))
                if keep
            )
            price = round(rng.uniform(6.0, 28.0), 2) if rng.random() < 0.7 else None
            items.append(
                MenuItem(
                    item_id=f"{rid}-i{i_index:03d}",
                    restaurant_id=rid,
                    name=dish,
                    sodium_mg=round(sodium, 1),
                    calories=round(calories, 1),
                    allergens=allergens,
                    diet_tags=tags,
                    price=price,
                )
            )
    return Catalog.build(restaurants, items, hours_tz=hours_tz)
