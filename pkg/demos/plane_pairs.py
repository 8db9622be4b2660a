"""Smallest multiplicity pairs making two plane curves pass the jet
criterion, plus the elliptic fibration variant."""
from orbihyp.surfaces import bt_criterion, plane_pair_criterion, plane_pair_threshold


def smallest_m2(d1, d2, m1, limit=10_000):
    for m2 in range(2, limit):
        if plane_pair_criterion(d1, d2, m1, m2).verdict:
            return m2
    return None


if __name__ == "__main__":
    rep = plane_pair_criterion(5, 5, 70, 71)
    print(f"quintics (70, 71): margin {rep.margin('margin')}, jet value {rep.margin('jet_criterion')}")
    for d1, d2 in ((4, 4), (4, 5), (5, 5), (6, 6)):
        for m1 in (50, 100, 1000):
            m2 = smallest_m2(d1, d2, m1)
            if m2 is None and plane_pair_threshold(d1, d2) >= d1 + d2:
                m2 = "none, threshold is above d1 + d2"
            print(f"d=({d1},{d2}) m1={m1}: smallest m2 = {m2}")
    print("elliptic fibration, c1^2 - c2 = 5, g(D)=3, m=4:", bt_criterion(5, 0, 3, 4))
