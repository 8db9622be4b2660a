"""Closed-form distance on the model orbifold disk against the graph
oracle, and the Ahlfors-Schwarz ratio for t -> t^m."""
import cmath

from orbihyp.metric import ModelOrbifoldDisk, ahlfors_schwarz_ratio, distance, geodesic_oracle_distance

if __name__ == "__main__":
    p, q = cmath.rect(0.3, 0.2), cmath.rect(0.7, 2.9)
    for n in (1, 2, 3, 5):
        d = ModelOrbifoldDisk(n)
        closed = distance(d, p, q)
        oracle = geodesic_oracle_distance(d, p, q, 256)
        print(f"n={n}: closed form {closed:.6f}  oracle {oracle:.6f}  diff {oracle - closed:+.2e}")

    d = ModelOrbifoldDisk(2)
    for m in (2, 3, 4, 6):
        worst = max(ahlfors_schwarz_ratio(d, m, r / 20) for r in range(1, 20))
        print(f"t^{m} into n=2: largest ratio on the radial grid {worst:.6f}")
