"""Direct-manipulation engine: covers, mover, layouts, replay and fuzzing."""

import json

from ._core import (
    BoundarySession,
    FuzzReport,
    LayoutError,
    ReplayReport,
    Scene,
    TraceError,
    dist_point_segment,
    fuzz,
    point_in_convex_polygon,
    replay,
    scene_names,
)


class Boundary:
    """BoundaryMessage requests as dicts."""

    def __init__(self):
        self._session = BoundarySession()

    def request(self, type, **fields):
        return json.loads(self._session.handle_line(json.dumps({"type": type, **fields})))


__all__ = [
    "Boundary",
    "BoundarySession",
    "FuzzReport",
    "LayoutError",
    "ReplayReport",
    "Scene",
    "TraceError",
    "dist_point_segment",
    "fuzz",
    "point_in_convex_polygon",
    "replay",
    "scene_names",
]
