import os
from dataclasses import dataclass

DEFAULT_MAX_POINTS = 100_000
DEFAULT_MAX_COLORING_COMPONENT = 200
DEFAULT_COLORING_NODE_BUDGET = 2_000_000
DEFAULT_ISO_NODE_BUDGET = 200_000
DEFAULT_MAX_ISO_VERTICES = 20_000
DEFAULT_SEED = 20240601
EXHAUSTIVE_TRIPLE_LIMIT = 10**7


@dataclass(frozen=True)
class Limits:
    max_points: int = DEFAULT_MAX_POINTS
    max_coloring_component: int = DEFAULT_MAX_COLORING_COMPONENT
    coloring_node_budget: int = DEFAULT_COLORING_NODE_BUDGET
    iso_node_budget: int = DEFAULT_ISO_NODE_BUDGET
    max_iso_vertices: int = DEFAULT_MAX_ISO_VERTICES

    @classmethod
    def from_env(cls, **overrides):
        env = os.environ.get("RTDG_MAX_POINTS")
        if env and "max_points" not in overrides:
            overrides["max_points"] = int(env)
        return cls(**overrides)


DEFAULT_LIMITS = Limits()
