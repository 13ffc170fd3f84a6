"""Reference users and scenarios used by the batch runner, tests, and UI.

Three synthetic users (normal, obese, muscle-atrophy) crossed with three
context snapshots: an office workday in Los Angeles, a Yosemite hike,
and a Newport Beach picnic. Query times sit at 12:30 local on a
Wednesday, and the hours zone for the matching catalogs is fixed-offset
UTC-8 to keep daylight-saving out of golden files.
"""

from __future__ import annotations

from datetime import datetime, timedelta, timezone

from .physio import Diet, ScenarioInput, Sex, UserProfile

PACIFIC_FIXED = timezone(timedelta(hours=-8))

QUERY_TIME = datetime(2025, 3, 5, 12, 30, tzinfo=PACIFIC_FIXED)

LOS_ANGELES = (34.05, -118.25)
YOSEMITE = (37.8651, -119.5383)
NEWPORT_BEACH = (33.6189, -117.9289)

# Bounding box spanning the Los Angeles basin down to Newport Beach.
LA_BASIN_BBOX = (33.55, -118.60, 34.25, -117.80)

U1 = UserProfile(
    user_id="U1", height=167, weight=125, sex=Sex.MALE, age=29, health_status="N"
)
U2 = UserProfile(
    user_id="U2", height=190, weight=290, sex=Sex.MALE, age=37, health_status="O"
)
U3 = UserProfile(
    user_id="U3", height=155, weight=85, sex=Sex.FEMALE, age=18, health_status="MA"
)

PROFILES = (U1, U2, U3)

WORKDAY = ScenarioInput(
    steps=2400,
    floors=12,
    altitude=20,
    temperature=70,
    query_time=QUERY_TIME,
    location=LOS_ANGELES,
)
HIKING = ScenarioInput(
    steps=30650,
    floors=207,
    altitude=10700,
    temperature=42,
    query_time=QUERY_TIME,
    location=YOSEMITE,
)
BEACH = ScenarioInput(
    steps=7430,
    floors=31,
    altitude=0,
    temperature=92,
    query_time=QUERY_TIME,
    location=NEWPORT_BEACH,
)

SCENARIOS = (("workday", WORKDAY), ("hiking", HIKING), ("beach", BEACH))

__all__ = [
    "PACIFIC_FIXED",
    "QUERY_TIME",
    "LOS_ANGELES",
    "YOSEMITE",
    "NEWPORT_BEACH",
    "LA_BASIN_BBOX",
    "U1",
    "U2",
    "U3",
    "PROFILES",
    "WORKDAY",
    "HIKING",
    "BEACH",
    "SCENARIOS",
    "Diet",
]
