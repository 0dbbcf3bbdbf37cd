"""Book I propositions 1, 2, 3, 9, 10, 11 and 12."""

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
    between,
    intersect_circles,
    intersect_line_circle,
    intersect_lines,
    is_right,
    point_reflect,
    segment_eq,
)
from ..trace import PropositionResult, Tracer, Verifier
from ._common import only_point, side_selector


def p1_equilateral(ab: Segment, side: str = "upper",
                   tracer: Tracer | None = None) -> PropositionResult:
    """On a given finite straight line construct an equilateral triangle."""
    tr = tracer or Tracer("I.1")
    a, b = ab.a, ab.b
    tr.register_input(a)
    tr.register_input(b)
    c1 = tr.circle(a, b)
    c2 = tr.circle(b, a)
    apex = tr.pick(intersect_circles(c1, c2), side_selector(a, b, side),
                   note=f"apex on the {side} side", operands=(c1, c2))
    ca = tr.join(apex, a)
    cb = tr.join(apex, b)
    triangle = Figure([a, b, apex])

    v = Verifier("I.1")
    v.zero("side CA equals AB", ca.length_sq() - ab.length_sq())
    v.zero("side CB equals AB", cb.length_sq() - ab.length_sq())
    v.true("apex lies on the requested side",
           side_selector(a, b, side)(apex))
    return PropositionResult(
        "I.1",
        objects={"A": a, "B": b, "C": apex, "triangle": triangle},
        roles={"A": "given", "B": "given", "C": "result", "triangle": "result"},
        result=triangle, tracer=tr, verification=v.checks)


def p2_place(a: Point, bc: Segment, side: str = "upper",
             tracer: Tracer | None = None) -> PropositionResult:
    """Place at a given point a straight line equal to a given straight line.

    Euclid's construction is free of superposition; that is its whole point.
    When the point coincides with the segment's first endpoint the segment
    itself already answers, and it is returned unchanged (documented
    deviation for the degenerate case the text does not treat).
    """
    tr = tracer or Tracer("I.2")
    b, c = bc.a, bc.b
    for obj in (a, b, c):
        tr.register_input(obj)
    if a == b:
        result = Segment(a, c)
        v = Verifier("I.2")
        v.zero("placed segment equals the given one",
               result.length_sq() - bc.length_sq())
        return PropositionResult(
            "I.2", objects={"A": a, "B": b, "C": c, "AL": result},
            roles={"A": "given", "B": "given", "C": "given", "AL": "result"},
            result=result, tracer=tr, verification=v.checks)

    ab = tr.join(a, b)
    sub = tr.sub("I.1")
    tri = p1_equilateral(ab, side, tracer=sub)
    d = tri.objects["C"]
    tr.attach(sub, operands=(ab,), produced=(d,))
    da = tr.join(d, a)
    db = tr.join(d, b)
    ray_ae = tr.extend(da, "b")  # beyond A, away from D
    ray_bf = tr.extend(db, "b")  # beyond B, away from D
    cgh = tr.circle(b, c)
    dir_bf = b - d
    g = tr.pick(intersect_line_circle(Line(d, b), cgh),
                lambda p: dir_bf.dot(p - b).sign() > 0,
                note="G beyond B on BF", operands=(cgh, ray_bf))
    gkl = tr.circle(d, g)
    dir_ae = a - d
    l = tr.pick(intersect_line_circle(Line(d, a), gkl),
                lambda p: dir_ae.dot(p - a).sign() > 0,
                note="L beyond A on AE", operands=(gkl, ray_ae))
    result = Segment(a, l)

    v = Verifier("I.2")
    v.zero("AL equals BC", result.length_sq() - bc.length_sq())
    v.true("AL starts at the given point", result.a == a)
    v.true("no superposition used", tr.trace.superposition_count == 0)
    return PropositionResult(
        "I.2",
        objects={"A": a, "B": b, "C": c, "D": d, "G": g, "L": l, "AL": result},
        roles={"A": "given", "B": "given", "C": "given",
               "D": "aux", "G": "aux", "L": "result", "AL": "result"},
        result=result, tracer=tr, verification=v.checks)


def p3_cut(greater: Segment, less: Segment,
           tracer: Tracer | None = None) -> PropositionResult:
    """Cut off from the greater of two segments a part equal to the less."""
    if (greater.length_sq() - less.length_sq()).sign() <= 0:
        raise PreconditionViolated("first segment must be strictly greater")
    tr = tracer or Tracer("I.3")
    a, b = greater.a, greater.b
    tr.register_input(a)
    tr.register_input(b)
    sub = tr.sub("I.2")
    placed = p2_place(a, less, tracer=sub)
    d = placed.result.b
    tr.attach(sub, operands=(a,), produced=(d,))
    cdef = tr.circle(a, d)
    toward = b - a
    e = tr.pick(intersect_line_circle(Line(a, b), cdef),
                lambda p: toward.dot(p - a).sign() > 0,
                note="E toward B", operands=(cdef,))

    v = Verifier("I.3")
    v.zero("AE equals the lesser segment",
           Segment(a, e).length_sq() - less.length_sq())
    v.true("E lies strictly between the greater segment's ends",
           between(a, e, b))
    return PropositionResult(
        "I.3",
        objects={"A": a, "B": b, "D": d, "E": e},
        roles={"A": "given", "B": "given", "D": "aux", "E": "result"},
        result=e, tracer=tr, verification=v.checks)


def p9_bisect_angle(angle: Angle, tracer: Tracer | None = None) -> PropositionResult:
    """Bisect a given rectilineal angle."""
    tr = tracer or Tracer("I.9")
    a = angle.vertex
    d = angle.arm1
    for obj in (a, d, angle.arm2):
        tr.register_input(obj)
    cad = tr.circle(a, d)
    arm2_ray = Ray(a, angle.arm2)
    e = tr.pick(intersect_line_circle(arm2_ray.line(), cad),
                arm2_ray.contains, note="E on the second arm", operands=(cad,))
    de = tr.join(d, e)
    # equilateral triangle on DE, apex away from the vertex
    away = "lower" if (e - d).cross(a - d).sign() > 0 else "upper"
    sub = tr.sub("I.1")
    tri = p1_equilateral(de, away, tracer=sub)
    f = tri.objects["C"]
    tr.attach(sub, operands=(de,), produced=(f,))
    tr.join(a, f)
    bisector = Ray(a, f)

    v = Verifier("I.9")
    v.true("the two halves are equal angles",
           angle_eq(Angle(a, d, f), Angle(a, e, f)))
    return PropositionResult(
        "I.9",
        objects={"A": a, "D": d, "E": e, "F": f, "bisector": bisector},
        roles={"A": "given", "D": "given", "E": "aux", "F": "aux",
               "bisector": "result"},
        result=bisector, tracer=tr, verification=v.checks)


def p10_bisect_segment(ab: Segment, tracer: Tracer | None = None) -> PropositionResult:
    """Bisect a given finite straight line."""
    tr = tracer or Tracer("I.10")
    a, b = ab.a, ab.b
    tr.register_input(a)
    tr.register_input(b)
    sub = tr.sub("I.1")
    tri = p1_equilateral(ab, "upper", tracer=sub)
    c = tri.objects["C"]
    tr.attach(sub, operands=(a, b), produced=(c,))
    sub9 = tr.sub("I.9")
    bis = p9_bisect_angle(Angle(c, a, b), tracer=sub9)
    ray = bis.result
    tr.attach(sub9, operands=(c,), produced=(ray.through,))
    d = only_point(tr, intersect_lines(ray.line(), Line(a, b)),
                   "D where the bisector meets AB", operands=(ab,))

    v = Verifier("I.10")
    v.zero("AD equals DB", a.dist_sq(d) - d.dist_sq(b))
    v.true("D is the exact midpoint", d == a.midpoint(b))
    return PropositionResult(
        "I.10",
        objects={"A": a, "B": b, "C": c, "D": d},
        roles={"A": "given", "B": "given", "C": "aux", "D": "result"},
        result=d, tracer=tr, verification=v.checks)


def p11_perp_at(l: Line, c: Point, tracer: Tracer | None = None) -> PropositionResult:
    """Erect a right angle to a given line at a given point on it."""
    if not l.contains(c):
        raise PreconditionViolated("the point must lie on the line")
    tr = tracer or Tracer("I.11")
    tr.register_input(l)
    tr.register_input(c)
    d = l.p if l.p != c else l.q
    tr.register_input(d)
    circ = tr.circle(c, d)
    e = tr.pick(intersect_line_circle(l, circ), lambda p: p != d,
                note="E opposite D", operands=(circ,))
    de = Segment(d, e)
    sub = tr.sub("I.1")
    tri = p1_equilateral(de, "upper", tracer=sub)
    f = tri.objects["C"]
    tr.attach(sub, operands=(d, e), produced=(f,))
    tr.join(f, c)
    result = Line(c, f)

    v = Verifier("I.11")
    v.true("FC is at right angles to the line",
           is_right(Angle(c, f, d)) and is_right(Angle(c, f, e)))
    return PropositionResult(
        "I.11",
        objects={"C": c, "D": d, "E": e, "F": f, "perpendicular": result},
        roles={"C": "given", "D": "aux", "E": "aux", "F": "aux",
               "perpendicular": "result"},
        result=result, tracer=tr, verification=v.checks)


def p12_perp_from(l: Line, c: Point, tracer: Tracer | None = None) -> PropositionResult:
    """Drop a perpendicular to a given line from a point not on it.

    The text takes a point "on the other side" without saying how; here it
    is realized as the reflection of the given point through one of the
    line's defining points, which is a choice.
    """
    if l.contains(c):
        raise PreconditionViolated("the point must lie off the line")
    tr = tracer or Tracer("I.12")
    tr.register_input(l)
    tr.register_input(c)
    d = point_reflect(c, l.p)
    tr.register_input(d)  # the chance point on the other side
    circ = tr.circle(c, d)
    pts = intersect_line_circle(l, circ)
    g = tr.pick(pts, "first", note="G", operands=(circ, l))
    e = tr.pick(pts, "second", note="E", operands=(circ, l))
    sub = tr.sub("I.10")
    mid = p10_bisect_segment(Segment(g, e), tracer=sub)
    h = mid.result
    tr.attach(sub, operands=(g, e), produced=(h,))
    tr.join(c, g)
    ch = tr.join(c, h)
    tr.join(c, e)
    result = Line(c, h)

    v = Verifier("I.12")
    v.true("GH equals HE", segment_eq(Segment(g, h), Segment(h, e)))
    v.true("CG equals CE", segment_eq(Segment(c, g), Segment(c, e)))
    v.true("angles GHC and EHC are equal (I.8)",
           angle_eq(Angle(h, g, c), Angle(h, e, c)))
    v.true("CH is perpendicular to the line",
           is_right(Angle(h, c, g)) and is_right(Angle(h, c, e)))
    return PropositionResult(
        "I.12",
        objects={"C": c, "D": d, "E": e, "G": g, "H": h,
                 "perpendicular": result, "CH": ch},
        roles={"C": "given", "D": "aux", "E": "aux", "G": "aux",
               "H": "result", "perpendicular": "result", "CH": "aux"},
        result=result, tracer=tr, verification=v.checks)
