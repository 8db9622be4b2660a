"""Sort a handful of orbifold curves into spherical / euclidean / hyperbolic
and print the area of the hyperbolic ones."""
from orbihyp.core import INF
from orbihyp.curves import OrbifoldCurve, canonical_degree, classify, hyperbolic_area

SAMPLES = [
    (0, [2, 2, 3], None),
    (0, [2, 3, 6], None),
    (0, [2, 3, 7], None),
    (0, [5], True),      # teardrop
    (0, [2, 3], True),   # spindle with unequal cone angles
    (0, [INF, INF], None),
    (1, [], None),
    (2, [], None),
]

if __name__ == "__main__":
    for g, marks, on_p1 in SAMPLES:
        c = OrbifoldCurve.from_multiplicities(g, marks)
        cls = classify(c, on_p1)
        line = f"g={g} marks={marks!s:<12} deg={str(canonical_degree(c)):>6}  {cls}"
        if cls.is_hyperbolic:
            line += f"  area = {hyperbolic_area(c).pi_multiple} pi"
        print(line)
