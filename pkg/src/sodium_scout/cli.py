"""Command-line interface.

Subcommands:
    recommend      one profile + scenario against a catalog, JSON to stdout
    run-scenarios  a grid of profiles x scenarios, JSON files + summary.csv
    gen-catalog    deterministic synthetic catalog to a file or stdout
    serve          HTTP service
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone, tzinfo
from pathlib import Path

from . import engine
from .catalog import generate_synthetic_catalog, load_catalog, save_catalog
from .filters import QueryContext
from .ranking import DEFAULT_MEAL_FRACTION
from . import wire
from .wire import dumps_canonical


def parse_tz(text: str) -> tzinfo:
    """Accept 'UTC', fixed offsets like '-08:00', or IANA zone names."""
    if text.upper() == "UTC":
        return timezone.utc
    if text and text[0] in "+-":
        try:
            return datetime.fromisoformat(f"2000-01-01T00:00:00{text}").tzinfo
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"bad UTC offset {text!r}") from exc
    try:
        from zoneinfo import ZoneInfo

        return ZoneInfo(text)
    except Exception as exc:
        raise argparse.ArgumentTypeError(f"unknown time zone {text!r}") from exc


def parse_bbox(text: str) -> tuple[float, float, float, float]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("bbox must be lat1,lon1,lat2,lon2")
    try:
        lat1, lon1, lat2, lon2 = (float(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad bbox {text!r}") from exc
    return (lat1, lon1, lat2, lon2)


def _load_json(path: str, what: str):
    try:
        return json.loads(Path(path).read_text("utf-8"))
    except json.JSONDecodeError as exc:
        raise wire.MalformedRequest(f"{what} file {path}: invalid JSON ({exc.msg})")


def _cmd_recommend(args: argparse.Namespace) -> int:
    profile = wire.parse_profile(_load_json(args.profile, "profile"))
    scenario = wire.parse_scenario(_load_json(args.scenario, "scenario"))
    catalog = load_catalog(args.catalog, hours_tz=args.hours_tz)
    query = QueryContext(
        user_location=scenario.location,
        query_time=scenario.query_time,
        radius_km=args.radius_km,
    )
    request = engine.RecommendRequest(
        profile=profile,
        scenario=scenario,
        query=query,
        k=args.k,
        meal_fraction=args.meal_fraction,
    )
    response = engine.recommend(request, catalog)
    print(dumps_canonical(engine.wire_response(response)))
    return 0


def _cmd_run_scenarios(args: argparse.Namespace) -> int:
    return engine.run_scenarios(
        args.profiles,
        args.scenarios,
        args.catalog,
        args.out,
        k=args.k,
        meal_fraction=args.meal_fraction,
        radius_km=args.radius_km,
        hours_tz=args.hours_tz,
    )


def _cmd_gen_catalog(args: argparse.Namespace) -> int:
    catalog = generate_synthetic_catalog(
        seed=args.seed,
        n_restaurants=args.restaurants,
        items_per_restaurant=args.items,
        region=args.bbox,
    )
    if args.out == "-":
        save_catalog(catalog, sys.stdout.buffer)
    else:
        save_catalog(catalog, args.out)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import serve

    serve(args.catalog, args.bind, hours_tz=args.hours_tz)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sodium-scout",
        description="Context-aware meal recommendations from a personal sodium budget.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rec = sub.add_parser("recommend", help="rank meals for one profile and scenario")
    rec.add_argument("--profile", required=True, help="profile JSON file")
    rec.add_argument("--scenario", required=True, help="scenario JSON file")
    rec.add_argument("--catalog", required=True, help="catalog json-lines file")
    rec.add_argument("--k", type=int, default=engine.DEFAULT_K)
    rec.add_argument(
        "--meal-fraction",
        type=float,
        default=DEFAULT_MEAL_FRACTION,
        help="share of the daily sodium budget for this meal (default: 1/3)",
    )
    rec.add_argument("--radius-km", type=float, default=30.0)
    rec.add_argument("--hours-tz", type=parse_tz, default=timezone.utc,
                     help="zone for restaurant hours (default: UTC)")
    rec.set_defaults(func=_cmd_recommend)

    run = sub.add_parser("run-scenarios", help="batch-run a profile x scenario grid")
    run.add_argument("--profiles", required=True, help="JSON array of profiles")
    run.add_argument("--scenarios", required=True, help="JSON array of scenarios")
    run.add_argument("--catalog", required=True)
    run.add_argument("--out", required=True, help="output directory")
    run.add_argument("--k", type=int, default=engine.DEFAULT_K)
    run.add_argument("--meal-fraction", type=float, default=DEFAULT_MEAL_FRACTION)
    run.add_argument("--radius-km", type=float, default=30.0)
    run.add_argument("--hours-tz", type=parse_tz, default=timezone.utc)
    run.set_defaults(func=_cmd_run_scenarios)

    gen = sub.add_parser("gen-catalog", help="write a deterministic synthetic catalog")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--restaurants", type=int, required=True)
    gen.add_argument("--items", type=int, required=True,
                     help="items per restaurant")
    gen.add_argument("--bbox", type=parse_bbox, required=True,
                     help="lat1,lon1,lat2,lon2")
    gen.add_argument("--out", default="-", help="output file (default: stdout)")
    gen.set_defaults(func=_cmd_gen_catalog)

    srv = sub.add_parser("serve", help="run the HTTP service")
    srv.add_argument("--catalog", required=True)
    srv.add_argument("--bind", default="127.0.0.1:8000")
    srv.add_argument("--hours-tz", type=parse_tz, default=timezone.utc)
    srv.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"sodium-scout: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
