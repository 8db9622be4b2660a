"""Pull the orbifold divisor back to a conic and read off the
hyperbolicity gap."""
from orbihyp.core import INF, format_multiplicity
from orbihyp.pullcurve import IntersectionData, inequality_chain, minimal_structure

# a conic (degree 2) in P^2 against a line of multiplicity 5 and a cubic of
# multiplicity infinity; rows are contact points, columns are components
data = IntersectionData(
    genus=0,
    curve_degree=2,
    ambient_dim=2,
    components=((1, 5), (3, INF)),
    contacts=((2, 0), (0, 3), (0, 3)),
)

if __name__ == "__main__":
    for per in (False, True):
        ms = minimal_structure(data, per)
        chain = inequality_chain(data, per)
        print(f"per_component={per}: m~ = {[format_multiplicity(m) for m in ms]}, gap = {chain.gap}, "
              f"log gap = {chain.log_gap}, chain holds: {chain.holds()}")
