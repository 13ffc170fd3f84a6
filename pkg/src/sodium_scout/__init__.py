"""Context-aware meal recommendations driven by a personalized sodium budget."""

from .catalog import (
    Catalog,
    IntegrityError,
    MenuItem,
    ParseError,
    Restaurant,
    ValidationError,
    generate_synthetic_catalog,
    haversine_km,
    load_catalog,
    save_catalog,
)
from .engine import (
    RecommendRequest,
    RecommendResponse,
    ResultEntry,
    recommend,
    run_scenarios,
)
from .filters import (
    ContextSignal,
    FilterReport,
    QueryContext,
    filter_endogenous,
    filter_exogenous,
    is_open,
)
from .physio import (
    Diet,
    ScenarioInput,
    Sex,
    SodiumNeed,
    UnsupportedAge,
    UserProfile,
    WeightConvention,
    daily_calories,
    schofield_bmr,
    sodium_need,
)
from .ranking import (
    AxisMismatch,
    DegenerateWeights,
    InvalidFraction,
    MealBudget,
    RankedEntry,
    RankedList,
    UtilityMatrix,
    ZeroTarget,
    build_utility_matrix,
    combine_matrices,
    health_score,
    meal_budget,
    top_k,
)

__version__ = "0.1.0"

__all__ = [
    "Catalog",
    "ContextSignal",
    "Diet",
    "FilterReport",
    "IntegrityError",
    "InvalidFraction",
    "AxisMismatch",
    "DegenerateWeights",
    "MealBudget",
    "MenuItem",
    "ParseError",
    "QueryContext",
    "RankedEntry",
    "RankedList",
    "RecommendRequest",
    "RecommendResponse",
    "Restaurant",
    "ResultEntry",
    "ScenarioInput",
    "Sex",
    "SodiumNeed",
    "UnsupportedAge",
    "UserProfile",
    "UtilityMatrix",
    "ValidationError",
    "WeightConvention",
    "ZeroTarget",
    "build_utility_matrix",
    "combine_matrices",
    "daily_calories",
    "filter_endogenous",
    "filter_exogenous",
    "generate_synthetic_catalog",
    "haversine_km",
    "health_score",
    "is_open",
    "load_catalog",
    "meal_budget",
    "recommend",
    "run_scenarios",
    "save_catalog",
    "schofield_bmr",
    "sodium_need",
    "top_k",
]
