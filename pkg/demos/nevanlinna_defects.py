"""Truncated defects of z -> [1 : z^m] along the hyperplane {w = 0},
with the trajectory over growing radii."""
from orbihyp.core import INF
from orbihyp.nevanlinna import PolynomialCurve, defect_estimate, fmt_residual

if __name__ == "__main__":
    for m in (2, 3, 5):
        f = PolynomialCurve.monomial(m)
        est = defect_estimate(f, [0, 1], l=1, r_max=1e3, points=6)
        traj = " ".join(f"{v:.4f}" for v in est.trajectory)
        print(f"m={m}: delta^1 = {est.value:.6f} (target {1 - 1 / m:.6f}); trajectory {traj}")
    f = PolynomialCurve.of([1, 0, -2], [0, 3, 0, 1])
    est = defect_estimate(f, [1, 1], l=INF)
    print(f"generic hyperplane, untruncated: delta = {est.value:.2e}")
    print("FMT residual at r=10, 1000:", fmt_residual(f, [1, 1], 10.0), fmt_residual(f, [1, 1], 1e3))
