"""Degeneracy margins for hyperplane arrangements, and the subset sweep
behind hyperbolic embedding."""
from orbihyp.core import INF
from orbihyp.defect import ArrangementSpec, degeneracy_check, embedding_check

if __name__ == "__main__":
    for ms in ([INF] * 5, [6] * 5, [5] * 5, [INF] * 4 + [2]):
        rep = degeneracy_check(ArrangementSpec.of(2, ms))
        margins = ", ".join(f"{name}: {m}" for name, m in rep.margins)
        print(f"n=2 m={ms}: {'constant' if rep.verdict else 'inconclusive'} ({margins})")

    rep = embedding_check(ArrangementSpec.of(3, [INF] * 7 + [5, 5]), exhaustive=True)
    print(f"n=3, q=9 embedding: {rep.verdict}, {rep.details['subsets_checked']} subsets, "
          f"failing {rep.details['failing_subsets']}")
