"""Helpers shared across the proposition catalogue."""

from __future__ import annotations

from ..errors import PreconditionViolated
from ..geom import (
    Angle,
    Figure,
    Line,
    Point,
    Ray,
    Segment,
    angle_eq,
    collinear,
    content,
    is_parallelogram,
    on_ray_at_sq,
)
from ..number import Constructible
from ..trace import Tracer, Verifier


def side_sign(side: str) -> int:
    if side == "upper":
        return 1
    if side == "lower":
        return -1
    raise PreconditionViolated("side must be 'upper' or 'lower'")


def side_selector(anchor: Point, toward: Point, side: str):
    """Points strictly in the chosen half-plane of the ray anchor->toward."""
    want = side_sign(side)
    d = toward - anchor
    return lambda p: d.cross(p - anchor).sign() == want


def side_name_of(anchor: Point, toward: Point, probe: Point) -> str:
    s = (toward - anchor).cross(probe - anchor).sign()
    if s == 0:
        raise PreconditionViolated("probe point lies on the reference line")
    return "upper" if s > 0 else "lower"


def opposite_side(side: str) -> str:
    return "lower" if side == "upper" else "upper"


def sign_word(s: int) -> str:
    return "upper" if s > 0 else "lower"


def ray_side_word(ray: Ray, ref_from: Point, ref_to: Point,
                  desired_sign: int) -> str:
    """Side word to use on a ray collinear with a reference direction so the
    chosen half-plane has the desired orientation sign relative to the
    reference ray ref_from->ref_to."""
    dir_sign = ray.direction().dot(ref_to - ref_from).sign()
    return sign_word(desired_sign * dir_sign)


def cut_at(tr: Tracer, origin: Point, toward: Point, length_sq: Constructible,
           note: str = "") -> Point:
    """Lay off a length along the ray origin->toward (cites I.3)."""
    p = on_ray_at_sq(Ray(origin, toward), length_sq)
    tr._record("sub", (origin, toward), (p,), note=note or "I.3 cut")
    return p


def cite_midpoint(tr: Tracer, a: Point, b: Point, note: str = "") -> Point:
    p = a.midpoint(b)
    tr._record("sub", (a, b), (p,), note=note or "I.10 bisection")
    return p


def cite_parallel(tr: Tracer, through: Point, l: Line, note: str = "") -> Line:
    d = l.direction()
    out = Line(through, through + d)
    tr._record("sub", (through, l), (out,), note=note or "I.31 parallel")
    return out


def only_point(tr: Tracer, got, note: str, operands=()) -> Point:
    """Record the selection of a unique line intersection."""
    if not isinstance(got, Point):
        raise PreconditionViolated(f"expected a unique intersection for {note}")
    return tr.pick([got], "only", note=note, operands=operands)


def angle_measures(a: Angle) -> tuple[Constructible, Constructible, Constructible]:
    """Squared lengths (vertex->arm1, vertex->arm2, arm1->arm2)."""
    return (a.vertex.dist_sq(a.arm1), a.vertex.dist_sq(a.arm2),
            a.arm1.dist_sq(a.arm2))


def require_triangle(f: Figure) -> None:
    if len(f) != 3:
        raise PreconditionViolated("expected a triangle")
    a, b, c = f.vertices
    if collinear(a, b, c):
        raise PreconditionViolated("degenerate (collinear) triangle")


def require_parallelogram(f: Figure) -> None:
    if not is_parallelogram(f):
        raise PreconditionViolated("expected a parallelogram")


def verify_parallelogram_on_segment(v: Verifier, fig: Figure, ab: Segment,
                                    t_content: Constructible, d: Angle) -> None:
    """The shared I.44 postconditions, checked exactly."""
    v.true("result is a parallelogram", is_parallelogram(fig))
    v.zero("parallelogram content equals the given content",
           content(fig) - t_content)
    ends = {ab.a, ab.b}
    has_side = any({s.a, s.b} == ends for s in fig.sides())
    v.true("the given segment is one full side", has_side)
    vs = fig.vertices
    idx = next(i for i, p in enumerate(vs) if p == ab.a)
    prev_v = vs[idx - 1]
    next_v = vs[(idx + 1) % len(vs)]
    v.true("angle at the segment end equals the given angle",
           angle_eq(Angle(ab.a, prev_v, next_v), d))
