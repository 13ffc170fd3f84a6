#!/usr/bin/env python3
"""Run the three reference users through the three reference scenarios.

Generates the pinned seed-7 synthetic catalog, runs the full pipeline
for every (user, scenario) pair, and prints the daily-calories / sodium
summary plus the top recommendations per pair.

Usage: python scripts/reproduce_reference_grid.py [--k 3]
"""

import argparse

from sodium_scout import presets
from sodium_scout.catalog import generate_synthetic_catalog
from sodium_scout.engine import RecommendRequest, recommend
from sodium_scout.filters import QueryContext


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=3, help="results to print per pair")
    args = parser.parse_args()

    catalog = generate_synthetic_catalog(
        7, 10, 20, presets.LA_BASIN_BBOX, hours_tz=presets.PACIFIC_FIXED
    )
    print(f"catalog: 10 restaurants, 200 items, version {catalog.fingerprint[:12]}\n")
    print(f"{'user':<6}{'scenario':<10}{'kcal/day':>10}{'sodium mg':>11}")
    rows = []
    for profile in presets.PROFILES:
        for scenario_id, scenario in presets.SCENARIOS:
            request = RecommendRequest(
                profile=profile,
                scenario=scenario,
                query=QueryContext(scenario.location, scenario.query_time, 30.0),
                k=args.k,
            )
            response = recommend(request, catalog)
            need = response.sodium_need
            print(
                f"{profile.user_id:<6}{scenario_id:<10}"
                f"{round(need.daily_calories):>10}{round(need.total_na):>11}"
            )
            rows.append((profile.user_id, scenario_id, response))

    print("\ntop recommendations per pair:")
    for user_id, scenario_id, response in rows:
        print(f"\n  {user_id} / {scenario_id} "
              f"(target {response.budget.target_mg:.0f} mg per meal)")
        if not response.results:
            reasons: dict[str, int] = {}
            for _, reason in response.filter_report.exclusions:
                reasons[reason] = reasons.get(reason, 0) + 1
            print(f"    no matching meals ({reasons})")
        for entry in response.results:
            print(
                f"    {entry.score:.4f}  {entry.name} @ {entry.restaurant_name}"
                f"  ({entry.sodium_mg:.0f} mg, {entry.distance_km:.1f} km)"
            )


if __name__ == "__main__":
    main()
