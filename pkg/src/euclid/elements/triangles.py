"""Book I propositions 22, 23 (with the variant constructions) and 31."""

from __future__ import annotations

from ..errors import PreconditionViolated, TriangleInequalityViolated
from ..geom import (
    Angle,
    Figure,
    Line,
    Point,
    Ray,
    Segment,
    angle_eq,
    intersect_circles,
    parallel,
    point_reflect,
)
from ..number import Constructible
from ..trace import PropositionResult, Tracer, Verifier
from ._common import angle_measures, cut_at, side_selector

P23_STRATEGIES = ("euclid", "proclus", "albertus", "commandinus", "clavius",
                  "campanus")


def _require_triangle_inequality(a: Constructible, b: Constructible,
                                 c: Constructible) -> None:
    for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
        if (x + y - z).sign() <= 0:
            raise TriangleInequalityViolated(
                "two of the lengths taken together must exceed the third")


def _check_lengths(*lengths: Constructible) -> None:
    for l in lengths:
        if l.sign() <= 0:
            raise PreconditionViolated("lengths must be positive")


def p22_triangle(a_len: Constructible, b_len: Constructible, c_len: Constructible,
                 base_ray: Ray, side: str = "upper",
                 tracer: Tracer | None = None) -> PropositionResult:
    """Construct a triangle out of three given lengths.

    Following the classical figure, the second length is laid along the ray
    from its origin; the triangle's sides taken in order from the apex are
    the three given lengths (a, b, c).  With lengths (3, 4, 5) on the
    positive x axis the apex is (0, 3).
    """
    _check_lengths(a_len, b_len, c_len)
    _require_triangle_inequality(a_len, b_len, c_len)
    tr = tracer or Tracer("I.22")
    f = base_ray.origin
    toward = base_ray.through
    tr.register_input(f)
    tr.register_input(toward)
    d = cut_at(tr, f, toward, a_len * a_len, "DF equal to the first length")
    g = cut_at(tr, f, toward, b_len * b_len, "FG equal to the second length")
    h = cut_at(tr, f, toward, (b_len + c_len) * (b_len + c_len),
               "GH equal to the third length")
    dkl = tr.circle(f, d)
    klh = tr.circle(g, h)
    k = tr.pick(intersect_circles(dkl, klh), side_selector(f, toward, side),
                note=f"K on the {side} side", operands=(dkl, klh))
    tr.join(k, f)
    tr.join(k, g)
    triangle = Figure([k, f, g])

    v = Verifier("I.22")
    v.zero("KF equals the first length", k.dist_sq(f) - a_len * a_len)
    v.zero("FG equals the second length", f.dist_sq(g) - b_len * b_len)
    v.zero("GK equals the third length", g.dist_sq(k) - c_len * c_len)
    v.true("the second side lies along the ray from its origin",
           f == base_ray.origin and base_ray.contains(g))
    return PropositionResult(
        "I.22",
        objects={"D": d, "F": f, "G": g, "H": h, "K": k, "triangle": triangle},
        roles={"D": "aux", "F": "given", "G": "result", "H": "aux",
               "K": "result", "triangle": "result"},
        result=triangle, tracer=tr, verification=v.checks)


def place_triangle_on_ray(a_len: Constructible, b_len: Constructible,
                          c_len: Constructible, ray: Ray, side: str = "upper",
                          tracer: Tracer | None = None) -> PropositionResult:
    """The strengthened triangle construction with prescribed placement.

    The first length runs along the ray from its origin; the apex (joined
    to the origin by the third length and to the far end by the second)
    lands on the requested side.
    """
    _check_lengths(a_len, b_len, c_len)
    _require_triangle_inequality(a_len, b_len, c_len)
    tr = tracer or Tracer("I.22+")
    v1 = ray.origin
    toward = ray.through
    tr.register_input(v1)
    tr.register_input(toward)
    v2 = cut_at(tr, v1, toward, a_len * a_len, "first length along the ray")
    m1 = cut_at(tr, v1, toward, c_len * c_len, "marker for the third length")
    m2 = cut_at(tr, v2, point_reflect(v1, v2), b_len * b_len,
                "marker for the second length")
    c1 = tr.circle(v1, m1)
    c2 = tr.circle(v2, m2)
    v3 = tr.pick(intersect_circles(c1, c2), side_selector(v1, toward, side),
                 note=f"apex on the {side} side", operands=(c1, c2))
    tr.join(v1, v2)
    tr.join(v2, v3)
    tr.join(v3, v1)
    triangle = Figure([v1, v2, v3])

    v = Verifier("I.22+")
    v.zero("first side has the first length", v1.dist_sq(v2) - a_len * a_len)
    v.zero("second side has the second length", v2.dist_sq(v3) - b_len * b_len)
    v.zero("third side has the third length", v3.dist_sq(v1) - c_len * c_len)
    v.true("first side runs along the ray from its origin",
           v1 == ray.origin and ray.contains(v2))
    v.true("apex on the requested side", side_selector(v1, toward, side)(v3))
    return PropositionResult(
        "I.22+",
        objects={"V1": v1, "V2": v2, "V3": v3, "triangle": triangle},
        roles={"V1": "given", "V2": "result", "V3": "result",
               "triangle": "result"},
        result=triangle, tracer=tr, verification=v.checks)


# ---------------------------------------------------------------------------
# I.23 and its variants


def p23_copy_angle(target_ray: Ray, model: Angle, side: str = "upper",
                   strategy: str = "euclid",
                   tracer: Tracer | None = None) -> PropositionResult:
    """Construct at the ray's origin an angle equal to the model angle.

    One arm of the result lies along the target ray; the apex lands on the
    requested side.  All strategies satisfy the same postcondition and
    differ only in their construction routes.
    """
    if strategy not in P23_STRATEGIES:
        raise PreconditionViolated(f"unknown I.23 strategy {strategy!r}")
    tr = tracer or Tracer(f"I.23.{strategy}" if strategy != "euclid" else "I.23")
    builder = globals()[f"_p23_{strategy}"]
    apex, on_ray, objects, roles = builder(tr, target_ray, model, side)
    result = Angle(target_ray.origin, on_ray, apex)

    v = Verifier("I.23")
    v.true("constructed angle equals the model angle", angle_eq(result, model))
    v.true("one arm lies along the target ray",
           target_ray.contains(on_ray))
    v.true("apex on the requested side",
           side_selector(target_ray.origin, target_ray.through, side)(apex))
    objects.setdefault("angle", result)
    roles.setdefault("angle", "result")
    return PropositionResult(
        f"I.23.{strategy}", objects=objects, roles=roles,
        result=result, tracer=tr, verification=v.checks)


def _p23_euclid(tr: Tracer, ray: Ray, model: Angle, side: str):
    arm1_sq, arm2_sq, chord_sq = angle_measures(model)
    a = ray.origin
    tr.register_input(a)
    d, e = model.arm1, model.arm2
    tr.register_input(d)
    tr.register_input(e)
    tr.join(d, e)
    f = cut_at(tr, a, ray.through, arm1_sq, "AF equal to CD")
    m1 = cut_at(tr, a, ray.through, arm2_sq, "marker for CE")
    m2 = cut_at(tr, f, point_reflect(a, f), chord_sq, "marker for DE")
    c1 = tr.circle(a, m1)
    c2 = tr.circle(f, m2)
    g = tr.pick(intersect_circles(c1, c2), side_selector(a, ray.through, side),
                note="G", operands=(c1, c2))
    tr.join(a, g)
    tr.join(f, g)
    objects = {"A": a, "D": d, "E": e, "F": f, "G": g}
    roles = {"A": "given", "D": "given", "E": "given", "F": "aux", "G": "result"}
    return g, f, objects, roles


def _p23_proclus(tr: Tracer, ray: Ray, model: Angle, side: str):
    # produce the base both ways, cut off the model arms on the
    # extensions, and intersect two circles about the base's ends
    arm1_sq, arm2_sq, chord_sq = angle_measures(model)
    a = ray.origin
    tr.register_input(a)
    b = cut_at(tr, a, ray.through, arm2_sq, "AB equal to DE")
    ab = tr.join(a, b)
    tr.extend(ab, "a")
    tr.extend(ab, "b")
    f = cut_at(tr, a, point_reflect(b, a), arm1_sq, "FA equal to CD")
    g = cut_at(tr, b, point_reflect(a, b), chord_sq, "BG equal to CE")
    k = tr.circle(a, f)
    l = tr.circle(b, g)
    pts = intersect_circles(k, l)
    m = tr.pick(pts, side_selector(a, ray.through, side), note="M",
                operands=(k, l))
    n = tr.pick(pts, side_selector(a, ray.through,
                                   "lower" if side == "upper" else "upper"),
                note="N", operands=(k, l))
    tr.join(m, a)
    tr.join(m, b)
    tr.join(n, a)
    tr.join(n, b)
    objects = {"A": a, "B": b, "F": f, "G": g, "M": m, "N": n}
    roles = {"A": "given", "B": "aux", "F": "aux", "G": "aux",
             "M": "result", "N": "aux"}
    return m, b, objects, roles


def _p23_albertus(tr: Tracer, ray: Ray, model: Angle, side: str):
    # Albert the Great: adjust the base, extend both ways, and argue the
    # touching and separate circle cases away by I.20.
    arm1_sq, arm2_sq, chord_sq = angle_measures(model)
    a = ray.origin
    tr.register_input(a)
    b = cut_at(tr, a, ray.through, arm2_sq, "AB made equal to GH")
    ab = tr.join(a, b)
    tr.extend(ab, "a")
    c = cut_at(tr, a, point_reflect(b, a), arm1_sq, "AC equal to FG")
    tr.extend(ab, "b")
    e = cut_at(tr, b, point_reflect(a, b), chord_sq, "BE equal to FH")
    c1 = tr.circle(a, c)
    c2 = tr.circle(b, e)
    d = tr.pick(intersect_circles(c1, c2), side_selector(a, ray.through, side),
                note="D (the circles intersect; touching is absurd by I.20)",
                operands=(c1, c2))
    tr.join(d, a)
    tr.join(d, b)
    objects = {"A": a, "B": b, "C": c, "E": e, "D": d}
    roles = {"A": "given", "B": "aux", "C": "aux", "E": "aux", "D": "result"}
    return d, b, objects, roles


def _p23_commandinus(tr: Tracer, ray: Ray, model: Angle, side: str):
    arm1_sq, arm2_sq, chord_sq = angle_measures(model)
    a = ray.origin
    tr.register_input(a)
    tr.join(model.arm1, model.arm2)
    g = cut_at(tr, a, ray.through, arm2_sq, "AG equal to CE")
    m1 = cut_at(tr, a, ray.through, arm1_sq, "marker for CD")
    m2 = cut_at(tr, g, point_reflect(a, g), chord_sq, "marker for ED")
    c1 = tr.circle(a, m1)
    c2 = tr.circle(g, m2)
    f = tr.pick(intersect_circles(c1, c2), side_selector(a, ray.through, side),
                note="F", operands=(c1, c2))
    tr.join(a, f)
    tr.join(f, g)
    objects = {"A": a, "G": g, "F": f}
    roles = {"A": "given", "G": "aux", "F": "result"}
    return f, g, objects, roles


def _p23_clavius(tr: Tracer, ray: Ray, model: Angle, side: str):
    arm1_sq, arm2_sq, chord_sq = angle_measures(model)
    c = ray.origin
    tr.register_input(c)
    i = cut_at(tr, c, ray.through, arm1_sq, "CI equal to EG")
    l = cut_at(tr, c, ray.through, arm2_sq, "CL equal to EH")
    m = cut_at(tr, i, point_reflect(c, i), chord_sq, "IM equal to GH")
    c1 = tr.circle(c, l)
    c2 = tr.circle(i, m)
    k = tr.pick(intersect_circles(c1, c2), side_selector(c, ray.through, side),
                note="K", operands=(c1, c2))
    tr.join(c, k)
    tr.join(i, k)
    objects = {"C": c, "I": i, "L": l, "M": m, "K": k}
    roles = {"C": "given", "I": "aux", "L": "aux", "M": "aux", "K": "result"}
    return k, i, objects, roles


def _p23_campanus(tr: Tracer, ray: Ray, model: Angle, side: str):
    # Campanus: adjoin the first model side backwards, lay the second along
    # the ray, the base beyond it, and cut the two circles.
    arm1_sq, arm2_sq, chord_sq = angle_measures(model)
    f = ray.origin
    tr.register_input(f)
    fe = tr.join(f, ray.through)
    tr.extend(fe, "a")
    d = cut_at(tr, f, point_reflect(ray.through, f), arm1_sq,
               "fd adjoined equal to the first side")
    g = cut_at(tr, f, ray.through, arm2_sq, "fg equal to the second side")
    h = cut_at(tr, g, point_reflect(f, g), chord_sq, "gh equal to the base")
    dk = tr.circle(f, d)
    kh = tr.circle(g, h)
    k = tr.pick(intersect_circles(dk, kh), side_selector(f, ray.through, side),
                note="k", operands=(dk, kh))
    tr.join(k, f)
    tr.join(k, g)
    objects = {"f": f, "d": d, "g": g, "h": h, "k": k}
    roles = {"f": "given", "d": "aux", "g": "aux", "h": "aux", "k": "result"}
    return k, g, objects, roles


# ---------------------------------------------------------------------------
# I.31


def p31_parallel(p: Point, l: Line, tracer: Tracer | None = None) -> PropositionResult:
    """Draw through a given point the straight line parallel to a given line.

    When the point already lies on the line, the line itself is returned
    and the coincidence is recorded (documented deviation).
    """
    tr = tracer or Tracer("I.31")
    tr.register_input(p)
    tr.register_input(l)
    if l.contains(p):
        v = Verifier("I.31")
        v.true("point on the line: the line itself is returned (coincident)",
               True)
        return PropositionResult(
            "I.31", objects={"A": p, "parallel": l},
            roles={"A": "given", "parallel": "result"},
            result=l, tracer=tr, verification=v.checks)

    # the chance point D: the nearer defining point of the line
    if (p.dist_sq(l.p) - p.dist_sq(l.q)).sign() <= 0:
        d, c = l.p, l.q
    else:
        d, c = l.q, l.p
    tr.register_input(d)
    tr.register_input(c)
    ad = tr.join(p, d)
    model = Angle(d, p, c)
    # alternate angles: the copy's apex goes to the side of AD away from C
    side = "lower" if (d - p).cross(c - p).sign() > 0 else "upper"
    sub = tr.sub("I.23")
    copied = p23_copy_angle(Ray(p, d), model, side=side, tracer=sub)
    e = copied.result.arm2
    tr.attach(sub, operands=(ad,), produced=(e,))
    ea = Segment(e, p)
    tr.extend(ea, "b")
    f = point_reflect(e, p)
    tr.register_input(f)  # label on the produced part
    result = Line(e, f)

    v = Verifier("I.31")
    v.true("the drawn line is parallel to the given line", parallel(result, l))
    v.true("the drawn line passes through the given point", result.contains(p))
    v.true("alternate angles are equal (I.27 hypothesis)",
           angle_eq(Angle(p, d, e), Angle(d, p, c)))
    return PropositionResult(
        "I.31",
        objects={"A": p, "D": d, "C": c, "E": e, "F": f, "parallel": result},
        roles={"A": "given", "D": "aux", "C": "aux", "E": "aux", "F": "aux",
               "parallel": "result"},
        result=result, tracer=tr, verification=v.checks)
