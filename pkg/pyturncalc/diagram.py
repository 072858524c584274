"""
Static SVG drawings of turns, arcs and polygons on the unit sphere.

The scene is built first as plain projected polylines (build_scene) and only
then handed to matplotlib, so the geometry can be checked without rendering.
"""
import math
import logging
from io import StringIO
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
import matplotlib
from matplotlib.figure import Figure

from .types import ANTIPODAL_TOL
from .turns import Turn, Arc, E3, unit_vector, representative_arc, rotate_vector
from .pancharatnam import SphericalPolygon

PROJECTIONS = ('orthographic-north', 'orthographic-custom')
MAX_STEP = math.radians(1.0)

SceneObject = Union[Turn, Arc, SphericalPolygon]


class SceneCurve(object):
    """A projected great-circle arc split into visible and hidden runs."""

    def __init__(self, runs: List[Tuple[np.ndarray, bool]], arrow: bool, label: Optional[str] = None):
        # each run is (points of shape (k, 2), visible)
        self.runs = runs
        self.arrow = arrow
        self.label = label

    def points(self) -> np.ndarray:
        return np.concatenate([pts for pts, _ in self.runs])


def sample_arc(tail: np.ndarray, head: np.ndarray, max_step: float = MAX_STEP) -> np.ndarray:
    """
    Points along the minor great-circle arc, spaced no more than max_step apart.
    Antipodal endpoints get a half great circle.
    """
    normal = np.cross(tail, head)
    norm = float(np.linalg.norm(normal))
    length = math.atan2(norm, float(np.dot(tail, head)))
    if norm <= ANTIPODAL_TOL:
        if length < 0.5 * math.pi:
            return np.array([tail, head])
        # antipodes: the half great circle bending towards +e3
        normal = np.cross(tail, E3 if abs(float(tail[2])) < 0.9 else np.array([1.0, 0.0, 0.0]))
        norm = float(np.linalg.norm(normal))
    normal = normal / norm
    steps = max(1, int(math.ceil(length / max_step)))
    return np.array([rotate_vector(normal, length * k / steps, tail) for k in range(steps + 1)])


class DiagramRenderer(object):

    def __init__(
        self,
        projection: str = 'orthographic-north',
        view: Optional[Sequence[float]] = None,
        size_inches: float = 4.0,
        logger: logging.Logger = None,
    ):
        self.logger = logger if logger is not None else logging.getLogger("turncalc")

        if projection not in PROJECTIONS:
            raise ValueError('projection should be one of {}'.format(', '.join(PROJECTIONS)))
        if projection == 'orthographic-custom' and view is None:
            raise ValueError('view is required for the orthographic-custom projection')
        if size_inches <= 0:
            raise ValueError('size_inches should be a positive number')

        self.projection = projection
        self.size_inches = size_inches
        self.view = E3 if projection == 'orthographic-north' else unit_vector(view)
        # screen basis: right, up, towards the viewer
        helper = np.array([0.0, 1.0, 0.0]) if abs(float(self.view[1])) < 0.9 else np.array([1.0, 0.0, 0.0])
        right = np.cross(helper, self.view)
        right = right / np.linalg.norm(right)
        self.basis = np.array([right, np.cross(self.view, right), self.view])

    def project(self, points: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        local = points @ self.basis.T
        return local[:, :2], local[:, 2] >= 0.0

    def _curve(self, tail: np.ndarray, head: np.ndarray, arrow: bool, label: Optional[str]) -> SceneCurve:
        flat, visible = self.project(sample_arc(tail, head))
        runs = []
        start = 0
        for k in range(1, len(flat) + 1):
            if k == len(flat) or visible[k] != visible[start]:
                # runs share their boundary point so the drawn line is continuous
                end = min(k + 1, len(flat))
                runs.append((flat[start:end], bool(visible[start])))
                start = k
        return SceneCurve(runs, arrow, label)

    def build_scene(self, objects: Sequence[SceneObject]) -> List[SceneCurve]:
        curves = []
        for obj in objects:
            if isinstance(obj, Turn):
                arc = representative_arc(obj)
                curves.append(self._curve(arc.tail, arc.head, True, 'turn'))
            elif isinstance(obj, Arc):
                curves.append(self._curve(obj.tail, obj.head, True, 'arc'))
            elif isinstance(obj, SphericalPolygon):
                for tail, head in obj.sides():
                    curves.append(self._curve(tail, head, True, 'side'))
            else:
                raise ValueError('cannot draw object of type {}'.format(type(obj).__name__))
        if self.logger.isEnabledFor(logging.DEBUG):
            self.logger.debug('scene built with {} curves from {} objects'.format(len(curves), len(objects)))
        return curves

    def render_svg(self, objects: Sequence[SceneObject]) -> str:
        curves = self.build_scene(objects)
        fig = Figure(figsize=(self.size_inches, self.size_inches))
        ax = fig.add_axes([0.0, 0.0, 1.0, 1.0])
        ax.set_xlim(-1.1, 1.1)
        ax.set_ylim(-1.1, 1.1)
        ax.set_aspect('equal')
        ax.axis('off')

        angle = np.linspace(0.0, 2.0 * math.pi, 361)
        ax.plot(np.cos(angle), np.sin(angle), color='black', linewidth=0.8)

        for curve in curves:
            for pts, visible in curve.runs:
                ax.plot(pts[:, 0], pts[:, 1], color='tab:blue', linewidth=1.2,
                        linestyle='-' if visible else '--')
            pts = curve.points()
            if curve.arrow and len(pts) >= 2:
                ax.annotate('', xy=tuple(pts[-1]), xytext=tuple(pts[-2]),
                            arrowprops=dict(arrowstyle='-|>', color='tab:blue', linewidth=1.2))

        svg_buffer = StringIO()
        with matplotlib.rc_context({'svg.hashsalt': 'pyturncalc', 'svg.fonttype': 'none'}):
            fig.savefig(svg_buffer, format='svg', metadata={'Date': None}, facecolor='white', edgecolor='none')
        svg_content = svg_buffer.getvalue()
        svg_buffer.close()
        return svg_content


def load_objects(document: dict) -> List[SceneObject]:
    """Objects from {"objects": [{"type": "turn" | "arc" | "polygon", ...}, ...]}."""
    objects = []
    for entry in document.get('objects', []):
        kind = entry.get('type')
        if kind == 'turn':
            objects.append(Turn.from_json(entry))
        elif kind == 'arc':
            objects.append(Arc.from_json(entry))
        elif kind == 'polygon':
            objects.append(SphericalPolygon.from_json(entry))
        else:
            raise ValueError('unknown diagram object type {!r}'.format(kind))
    return objects


def emit_diagram(objects: Sequence[SceneObject], projection: str = 'orthographic-north',
                 view: Optional[Sequence[float]] = None) -> str:
    return DiagramRenderer(projection=projection, view=view).render_svg(objects)
