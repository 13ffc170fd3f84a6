"""Unit and property tests for the physiological model.

Expected values were computed independently by hand-evaluating the
formulas (double precision, conversion factors 0.45359237 kg/lb and
0.3048 m/ft) before the implementation existed.
"""

from datetime import datetime, timezone

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sodium_scout.physio import (
    ScenarioInput,
    Sex,
    UnsupportedAge,
    UserProfile,
    WeightConvention,
    alti_na,
    daily_calories,
    f_to_c,
    ft_to_m,
    km_walked,
    lbs_to_kg,
    schofield_bmr,
    sodium_need,
    stair_calories,
    step_calories,
    temp_na,
)

UTC_NOON = datetime(2025, 3, 5, 12, 0, tzinfo=timezone.utc)


def make_profile(weight=125.0, sex=Sex.MALE, age=29, height=167.0, **kw):
    return UserProfile(
        user_id="t", height=height, weight=weight, sex=sex, age=age, **kw
    )


def make_scenario(steps=0, floors=0, altitude=0.0, temperature=32.0):
    return ScenarioInput(
        steps=steps,
        floors=floors,
        altitude=altitude,
        temperature=temperature,
        query_time=UTC_NOON,
        location=(34.05, -118.25),
    )


# --- conversions -----------------------------------------------------------

def test_conversions_zero_and_identity_points():
    assert lbs_to_kg(0) == 0
    assert f_to_c(32) == 0
    assert ft_to_m(0) == 0


def test_conversion_factors():
    assert lbs_to_kg(1) == pytest.approx(0.45359237, rel=1e-12)
    assert ft_to_m(10700) == pytest.approx(3261.36, rel=1e-12)
    assert f_to_c(212) == pytest.approx(100.0, rel=1e-12)


# --- walking and stairs ----------------------------------------------------

def test_km_walked_points():
    assert km_walked(0) == 0
    assert km_walked(2400) == pytest.approx(1.8288, rel=1e-12)
    assert km_walked(30650) == pytest.approx(23.3553, rel=1e-12)


def test_km_walked_rejects_negative_steps():
    with pytest.raises(ValueError):
        km_walked(-1)


def test_step_calories_points():
    assert step_calories(0, 125) == 0
    assert step_calories(1.8288, 125) == pytest.approx(153.162, rel=1e-12)
    assert step_calories(23.3553, 290) == pytest.approx(4537.93479, rel=1e-12)


def test_step_calories_preconditions():
    with pytest.raises(ValueError):
        step_calories(-0.1, 125)
    with pytest.raises(ValueError):
        step_calories(1.0, 0)


def test_stair_calories_points():
    assert stair_calories(0, 290) == 0
    assert stair_calories(12, 125) == pytest.approx(13.0, rel=1e-12)
    # 207 floors: real division, no truncation to 69.0 would matter here,
    # but 208 floors must not round down to 69 either.
    assert stair_calories(207, 125) == pytest.approx(224.25, rel=1e-12)
    assert stair_calories(208, 125) > stair_calories(207, 125)


# --- Schofield BMR ---------------------------------------------------------

def test_schofield_reference_points():
    # hand evaluation of the published weight-only coefficients
    assert schofield_bmr(Sex.MALE, 29, 56.70) == pytest.approx(1545.9319, abs=1e-4)
    assert schofield_bmr(Sex.MALE, 37, 131.54) == pytest.approx(2382.12688, abs=1e-4)
    assert schofield_bmr(Sex.FEMALE, 18, 38.56) == pytest.approx(1057.98208, abs=1e-4)


def test_schofield_bracket_boundaries_are_lower_inclusive():
    # age 18 must already use the 18-29 row, age 30 the 30-59 row
    assert schofield_bmr(Sex.MALE, 18, 60.0) == pytest.approx(
        15.057 * 60.0 + 692.2, rel=1e-12
    )
    assert schofield_bmr(Sex.MALE, 30, 60.0) == pytest.approx(
        11.472 * 60.0 + 873.1, rel=1e-12
    )
    assert schofield_bmr(Sex.FEMALE, 60, 60.0) == pytest.approx(
        9.082 * 60.0 + 658.5, rel=1e-12
    )


@pytest.mark.parametrize("sex", [Sex.MALE, Sex.FEMALE])
def test_schofield_adjacent_brackets_use_different_rows(sex):
    # non-parallel lines agree at most at one weight, so differing at two
    # weights proves different coefficient rows were selected
    for young, old in [(17, 18), (29, 30), (59, 60)]:
        assert (
            schofield_bmr(sex, young, 50.0) != schofield_bmr(sex, old, 50.0)
            or schofield_bmr(sex, young, 80.0) != schofield_bmr(sex, old, 80.0)
        )


def test_schofield_rejects_children_below_bracket():
    with pytest.raises(UnsupportedAge):
        schofield_bmr(Sex.MALE, 9, 30.0)
    with pytest.raises(UnsupportedAge):
        schofield_bmr(Sex.FEMALE, 0, 4.0)
    # age 10 is the first supported bracket
    assert schofield_bmr(Sex.MALE, 10, 30.0) > 0


def test_schofield_rejects_nonpositive_weight():
    with pytest.raises(ValueError):
        schofield_bmr(Sex.MALE, 29, 0.0)


# --- daily calories --------------------------------------------------------

def test_daily_calories_zero_activity_reduces_to_bmr():
    profile = make_profile()
    expected = schofield_bmr(Sex.MALE, 29, lbs_to_kg(125.0))
    assert daily_calories(profile, make_scenario()) == pytest.approx(
        expected, rel=1e-12
    )


def test_daily_calories_reference_users_workday():
    # independent hand sums, full precision:
    #   U1: 1545.917539... + 153.162 + 13.0
    #   U2: 2382.147384... + 355.33584 + 30.16
    workday = make_scenario(steps=2400, floors=12, altitude=20, temperature=70)
    u1 = make_profile(weight=125, sex=Sex.MALE, age=29)
    u2 = make_profile(weight=290, sex=Sex.MALE, age=37)
    assert daily_calories(u1, workday) == pytest.approx(1712.0795393862502, rel=1e-12)
    assert daily_calories(u2, workday) == pytest.approx(2767.6432239056003, rel=1e-12)


def test_daily_calories_kg_everywhere_convention_scales_activity_down():
    workday = make_scenario(steps=2400, floors=12)
    profile = make_profile()
    lbs = daily_calories(profile, workday, WeightConvention.LBS_ACTIVITY)
    kg = daily_calories(profile, workday, WeightConvention.KG_EVERYWHERE)
    bmr = schofield_bmr(Sex.MALE, 29, lbs_to_kg(125.0))
    # same BMR, activity terms scaled by exactly the kg/lb factor
    assert kg - bmr == pytest.approx((lbs - bmr) * 0.45359237, rel=1e-12)


def test_daily_calories_propagates_unsupported_age():
    with pytest.raises(UnsupportedAge):
        daily_calories(make_profile(age=5), make_scenario())


# --- sodium components -----------------------------------------------------

def test_temp_na_points():
    assert temp_na(0) == 0
    assert temp_na(f_to_c(70)) == pytest.approx(15.622, abs=1e-3)
    assert temp_na(-10) == 0


def test_alti_na_points():
    assert alti_na(0) == 0
    assert alti_na(300) == 1.0
    assert alti_na(ft_to_m(10700)) == pytest.approx(389.67, abs=0.05)
    assert alti_na(-50) == 0


def test_sodium_need_composition():
    need = sodium_need(
        make_profile(),
        make_scenario(steps=2400, floors=12, altitude=20, temperature=70),
    )
    assert need.daily_calories == pytest.approx(
        need.bmr + need.step_calories + need.stair_calories, rel=1e-9
    )
    assert need.basic_na == pytest.approx(1.2 * need.daily_calories, rel=1e-9)
    assert need.total_na == pytest.approx(
        need.basic_na + need.temp_na + need.alti_na, rel=1e-9
    )


def test_sodium_need_zero_context_is_pure_bmr_ratio():
    # zero activity, 0 C, sea level: temp and altitude terms vanish
    need = sodium_need(make_profile(), make_scenario(temperature=32.0, altitude=0.0))
    assert need.temp_na == 0
    assert need.alti_na == 0
    assert need.total_na == pytest.approx(1.2 * need.bmr, rel=1e-12)


def test_basic_na_matches_tabulated_ratio_examples():
    assert 1.2 * 2767 == pytest.approx(3320.4, rel=1e-12)
    assert 1.2 * 3712 == pytest.approx(4454.4, rel=1e-12)


# --- input validation ------------------------------------------------------

def test_profile_validation():
    with pytest.raises(ValueError):
        make_profile(weight=0)
    with pytest.raises(ValueError):
        make_profile(height=-1)
    with pytest.raises(ValueError):
        make_profile(age=-1)


def test_profile_normalizes_allergens_to_lowercase_set():
    profile = make_profile(allergens=frozenset({"Peanut", "peanut", "SOY"}))
    assert profile.allergens == frozenset({"peanut", "soy"})


def test_scenario_validation():
    with pytest.raises(ValueError):
        make_scenario(steps=-1)
    with pytest.raises(ValueError):
        make_scenario(floors=-1)
    with pytest.raises(ValueError):
        ScenarioInput(0, 0, 0, 50, UTC_NOON, (91.0, 0.0))
    with pytest.raises(ValueError):
        ScenarioInput(0, 0, 0, 50, UTC_NOON, (0.0, 181.0))
    with pytest.raises(ValueError):
        ScenarioInput(0, 0, 0, 50, datetime(2025, 3, 5, 12, 0), (0.0, 0.0))


# --- properties ------------------------------------------------------------

profiles_st = st.builds(
    make_profile,
    weight=st.floats(60, 400),
    sex=st.sampled_from([Sex.MALE, Sex.FEMALE]),
    age=st.integers(10, 95),
    height=st.floats(120, 210),
)
scenarios_st = st.builds(
    make_scenario,
    steps=st.integers(0, 60000),
    floors=st.integers(0, 500),
    altitude=st.floats(-500, 15000),
    temperature=st.floats(-30, 120),
)


@given(profile=profiles_st, scenario=scenarios_st)
def test_ratio_law_holds_everywhere(profile, scenario):
    need = sodium_need(profile, scenario)
    assert need.basic_na == pytest.approx(1.2 * need.daily_calories, rel=1e-9)


@given(profile=profiles_st, scenario=scenarios_st)
def test_all_need_fields_non_negative(profile, scenario):
    need = sodium_need(profile, scenario)
    for value in vars(need).values():
        assert value >= 0


@given(
    profile=profiles_st,
    scenario=scenarios_st,
    extra_steps=st.integers(0, 20000),
    extra_floors=st.integers(0, 100),
    extra_alt=st.floats(0, 3000),
    extra_temp=st.floats(0, 30),
    extra_weight=st.floats(0, 80),
)
@settings(max_examples=120)
def test_total_na_monotone_in_every_driver(
    profile, scenario, extra_steps, extra_floors, extra_alt, extra_temp, extra_weight
):
    base = sodium_need(profile, scenario).total_na

    def bumped(**kw):
        merged = dict(
            steps=scenario.steps,
            floors=scenario.floors,
            altitude=scenario.altitude,
            temperature=scenario.temperature,
        )
        merged.update(kw)
        return make_scenario(**merged)

    assert sodium_need(profile, bumped(steps=scenario.steps + extra_steps)).total_na >= base
    assert sodium_need(profile, bumped(floors=scenario.floors + extra_floors)).total_na >= base
    assert sodium_need(profile, bumped(altitude=scenario.altitude + extra_alt)).total_na >= base
    assert sodium_need(profile, bumped(temperature=scenario.temperature + extra_temp)).total_na >= base
    heavier = make_profile(
        weight=profile.weight + extra_weight, sex=profile.sex, age=profile.age,
        height=profile.height,
    )
    assert sodium_need(heavier, scenario).total_na >= base


@given(m=st.floats(1e-3, 1e5))
def test_alti_na_power_law_ratio(m):
    assert alti_na(2 * m) / alti_na(m) == pytest.approx(2**2.5, rel=1e-9)


@given(a=st.floats(0, 60), b=st.floats(0, 60))
def test_temp_na_additive_above_freezing(a, b):
    assert temp_na(a + b) == pytest.approx(temp_na(a) + temp_na(b), rel=1e-9, abs=1e-12)


@given(
    km=st.floats(0, 50),
    weight=st.floats(60, 400),
    scale=st.floats(0.1, 5.0),
)
def test_step_calories_bilinear(km, weight, scale):
    base = step_calories(km, weight)
    assert step_calories(km * scale, weight) == pytest.approx(base * scale, rel=1e-9, abs=1e-12)
    assert step_calories(km, weight * scale) == pytest.approx(base * scale, rel=1e-9, abs=1e-12)
