"""Deterministic SVG emission of figures and construction results.

Output is a pure function of the input: coordinates pass through the exact
decimal approximation (six digits) and all layout arithmetic is done in
rational numbers, so the bytes are identical across runs and platforms.
The y axis is flipped so figures appear in the usual orientation.  Only
the SVG 1.1 elements line, circle, path and text are used.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .errors import NothingToRender
from .geom import Angle, Circle, Figure, Line, Point, Ray, Segment
from .number import Constructible, sqrt_nonneg
from .trace import PropositionResult

_STYLES = {
    "given": 'stroke="#202020" stroke-width="1.8" fill="none"',
    "aux": 'stroke="#9a9a9a" stroke-width="0.9" stroke-dasharray="4 3" fill="none"',
    "result": 'stroke="#1a5fb4" stroke-width="2.2" fill="none"',
}
_POINT_FILL = {"given": "#202020", "aux": "#9a9a9a", "result": "#1a5fb4"}
_DIGITS = 6


def _fr(value: Constructible) -> Fraction:
    return Fraction(value.approx(_DIGITS))


def _fmt(x: Fraction) -> str:
    scaled = x * 100
    n = (scaled.numerator * 2 + scaled.denominator) // (2 * scaled.denominator)
    sign = "-" if n < 0 else ""
    text = str(abs(n)).rjust(3, "0")
    return f"{sign}{text[:-2]}.{text[-2:]}"


def _object_extent(obj) -> list[tuple[Fraction, Fraction]]:
    if isinstance(obj, Point):
        return [(_fr(obj.x), _fr(obj.y))]
    if isinstance(obj, Segment):
        return _object_extent(obj.a) + _object_extent(obj.b)
    if isinstance(obj, (Line, Ray)):
        p = obj.p if isinstance(obj, Line) else obj.origin
        q = obj.q if isinstance(obj, Line) else obj.through
        return _object_extent(p) + _object_extent(q)
    if isinstance(obj, Circle):
        cx, cy = _fr(obj.center.x), _fr(obj.center.y)
        r = _fr(sqrt_nonneg(obj.radius_sq))
        return [(cx - r, cy - r), (cx + r, cy + r)]
    if isinstance(obj, Figure):
        out = []
        for v in obj.vertices:
            out.extend(_object_extent(v))
        return out
    if isinstance(obj, Angle):
        return (_object_extent(obj.vertex) + _object_extent(obj.arm1)
                + _object_extent(obj.arm2))
    return []


class _Canvas:
    def __init__(self, xs, ys, width: Fraction):
        min_x, max_x = min(xs), max(xs)
        min_y, max_y = min(ys), max(ys)
        span_x = max_x - min_x or Fraction(1)
        span_y = max_y - min_y or Fraction(1)
        margin_x = span_x * Fraction(1, 20)
        margin_y = span_y * Fraction(1, 20)
        self.min_x = min_x - margin_x
        self.max_x = max_x + margin_x
        self.min_y = min_y - margin_y
        self.max_y = max_y + margin_y
        self.width = width
        self.scale = width / (self.max_x - self.min_x)
        self.height = (self.max_y - self.min_y) * self.scale

    def to_screen(self, x: Fraction, y: Fraction) -> tuple[Fraction, Fraction]:
        return ((x - self.min_x) * self.scale,
                (self.max_y - y) * self.scale)

    def clip_line(self, p, q) -> Optional[tuple]:
        """Intersection of the infinite line p-q with the viewport box."""
        x1, y1 = p
        x2, y2 = q
        dx, dy = x2 - x1, y2 - y1
        ts = []
        for bound, origin, delta in ((self.min_x, x1, dx), (self.max_x, x1, dx),
                                     (self.min_y, y1, dy), (self.max_y, y1, dy)):
            if delta != 0:
                ts.append((bound - origin) / delta)
        hits = []
        for t in sorted(set(ts)):
            x, y = x1 + dx * t, y1 + dy * t
            if self.min_x <= x <= self.max_x and self.min_y <= y <= self.max_y:
                hits.append((x, y))
        if len(hits) < 2:
            return None
        return hits[0], hits[-1]

    def clip_ray(self, origin, through) -> Optional[tuple]:
        got = self.clip_line(origin, through)
        if got is None:
            return None
        dx = through[0] - origin[0]
        dy = through[1] - origin[1]
        ends = [origin]
        for pt in got:
            if (pt[0] - origin[0]) * dx + (pt[1] - origin[1]) * dy >= 0:
                ends.append(pt)
        far = max(ends, key=lambda pt: (pt[0] - origin[0]) * dx
                  + (pt[1] - origin[1]) * dy)
        return origin, far


def render(objects: dict[str, object],
           roles: Optional[dict[str, str]] = None,
           width: int = 640, labels: bool = True) -> bytes:
    """Render named objects to SVG bytes (deterministic)."""
    drawable = {name: obj for name, obj in objects.items()
                if isinstance(obj, (Point, Segment, Line, Ray, Circle,
                                    Figure, Angle))}
    if not drawable:
        raise NothingToRender("no drawable objects")
    roles = roles or {}

    extent = []
    for obj in drawable.values():
        extent.extend(_object_extent(obj))
    xs = [e[0] for e in extent]
    ys = [e[1] for e in extent]
    canvas = _Canvas(xs, ys, Fraction(width))

    body: list[str] = []
    labelled: list[tuple[Fraction, Fraction, str, str]] = []

    def style_of(name: str) -> str:
        return roles.get(name, "given")

    def emit_segment(p, q, style: str) -> None:
        (x1, y1) = canvas.to_screen(*p)
        (x2, y2) = canvas.to_screen(*q)
        body.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" '
                    f'x2="{_fmt(x2)}" y2="{_fmt(y2)}" {_STYLES[style]}/>')

    for name, obj in drawable.items():
        style = style_of(name)
        if isinstance(obj, Point):
            x, y = canvas.to_screen(_fr(obj.x), _fr(obj.y))
            body.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" '
                        f'fill="{_POINT_FILL[style]}" stroke="none"/>')
            labelled.append((x, y, name, style))
        elif isinstance(obj, Segment):
            emit_segment((_fr(obj.a.x), _fr(obj.a.y)),
                         (_fr(obj.b.x), _fr(obj.b.y)), style)
        elif isinstance(obj, Line):
            got = canvas.clip_line((_fr(obj.p.x), _fr(obj.p.y)),
                                   (_fr(obj.q.x), _fr(obj.q.y)))
            if got:
                emit_segment(*got, style)
        elif isinstance(obj, Ray):
            got = canvas.clip_ray((_fr(obj.origin.x), _fr(obj.origin.y)),
                                  (_fr(obj.through.x), _fr(obj.through.y)))
            if got:
                emit_segment(*got, style)
        elif isinstance(obj, Circle):
            cx, cy = canvas.to_screen(_fr(obj.center.x), _fr(obj.center.y))
            r = _fr(sqrt_nonneg(obj.radius_sq)) * canvas.scale
            body.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
                        f'r="{_fmt(r)}" {_STYLES[style]}/>')
        elif isinstance(obj, Figure):
            pts = [canvas.to_screen(_fr(v.x), _fr(v.y)) for v in obj.vertices]
            path = "M " + " L ".join(f"{_fmt(x)} {_fmt(y)}" for x, y in pts) + " Z"
            body.append(f'<path d="{path}" {_STYLES[style]}/>')
        elif isinstance(obj, Angle):
            emit_segment((_fr(obj.vertex.x), _fr(obj.vertex.y)),
                         (_fr(obj.arm1.x), _fr(obj.arm1.y)), style)
            emit_segment((_fr(obj.vertex.x), _fr(obj.vertex.y)),
                         (_fr(obj.arm2.x), _fr(obj.arm2.y)), style)

    if labels:
        placed: list[tuple[Fraction, Fraction]] = []
        # northeast of the point, shifted clockwise on collision
        offsets = ((6, -6), (6, 12), (-14, 12), (-14, -6))
        min_gap = Fraction(14)
        for x, y, name, style in labelled:
            for dx, dy in offsets:
                ax, ay = x + dx, y + dy
                if all(abs(ax - px) > min_gap or abs(ay - py) > min_gap
                       for px, py in placed):
                    break
            placed.append((ax, ay))
            body.append(f'<text x="{_fmt(ax)}" y="{_fmt(ay)}" '
                        f'font-family="serif" font-size="14" '
                        f'fill="{_POINT_FILL[style]}">{_escape(name)}</text>')

    head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_fmt(canvas.width)}" height="{_fmt(canvas.height)}" '
            f'viewBox="0 0 {_fmt(canvas.width)} {_fmt(canvas.height)}">')
    doc = "\n".join([head, *body, "</svg>"]) + "\n"
    return doc.encode("utf-8")


def _escape(text: str) -> str:
    return (text.replace("&", "&amp;").replace("<", "&lt;")
            .replace(">", "&gt;"))


def render_result(result: PropositionResult, width: int = 640) -> bytes:
    """Render a proposition's named objects with role-based styling.

    Top-level construction steps contribute their circles and drawn lines
    as auxiliary objects, so the figure shows how the result was produced.
    """
    objects = dict(result.objects)
    roles = dict(result.roles)
    known = {id(obj) for obj in objects.values()}
    for n, step in enumerate(result.trace.steps, start=1):
        for oid in step.produced:
            obj = result.tracer.registry.get(oid)
            if id(obj) in known:
                continue
            if isinstance(obj, (Circle, Segment, Line, Ray)):
                name = f"_step{n}_{oid}"
                objects[name] = obj
                roles[name] = "aux"
                known.add(id(obj))
    return render(objects, roles, width)
