"""List orbifold jet differential generators in one variable."""
from orbihyp.core import INF
from orbihyp.jets import LocalOrbifoldChart, jet_generators, snq_exponents

if __name__ == "__main__":
    for m in (2, 3, INF):
        chart = LocalOrbifoldChart((m,))
        print(f"m={m}, k=3, N=3:")
        for g in jet_generators(chart, 3, 3):
            print(f"   alpha={g.alpha[0]}  x-exponent={g.exponents[0]}")
    print("S^{2,1} on (2,3) with blocks {1},{1}:", snq_exponents(LocalOrbifoldChart((2, 3)), [[1], [1]]))
