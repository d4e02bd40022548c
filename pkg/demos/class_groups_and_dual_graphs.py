"""Class groups of toric fans, and how the exceptional curves sit inside them.

Three views of the same geometry: the divisor class group computed from ray
relations, the dual graph recording which exceptional rays share a cone, and
an independence certificate proving the exceptional classes generate a free
direct summand.
"""

from cyclotoric import (
    Fan,
    Lattice,
    class_group,
    dual_graph,
    exceptional_independence,
    resolution_pipeline,
)


def show(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def main():
    # The fan of the projective plane: three rays, class group Z.
    plane = Fan(Lattice.standard(2), [(1, 0), (0, 1), (-1, -1)],
                [(0, 1), (1, 2), (0, 2)])
    print("projective plane:", class_group(plane))

    # Its smooth blow-up analogue from a quotient chart: resolve 1/3(1,2).
    rep = resolution_pipeline(3, (1, 2))
    quotient = rep.quotient_fan
    print("resolved 1/3(1,2) chart:", class_group(quotient))

    # The dual graph of the exceptional locus downstairs is a chain.
    graph = dual_graph(quotient, rep.exceptional_quotient)
    print(f"dual graph: {len(graph.vertices)} vertices, "
          f"{len(graph.edges)} edges, {graph.components} component(s)")
    for u, v in sorted(graph.edges):
        print(f"  edge: ray {u} {show(quotient.rays[u])} -- "
              f"ray {v} {show(quotient.rays[v])}")

    # Longer chains come from longer continued fractions.
    rep2 = resolution_pipeline(7, (1, 5))
    g2 = dual_graph(rep2.quotient_fan, rep2.exceptional_quotient)
    degs = sorted(sum(1 for e in g2.edges if i in e) for i in g2.vertices)
    print(f"\n1/7(1,5) chart: {len(g2.vertices)} exceptional rays, "
          f"degree sequence {degs} (a path)")

    # Independence: the exceptional ray classes span a free summand of the
    # class group.  The certificate compares invariant factors with and
    # without the exceptional generators adjoined.
    cert = exceptional_independence(rep2.quotient_fan, rep2.exceptional_quotient)
    print("\nindependence certificate for the 1/7(1,5) chart:")
    print(f"  exceptional rays: {cert.exceptional}")
    print(f"  rank of relation lattice:   {cert.rank_relations}")
    print(f"  rank with classes adjoined: {cert.rank_augmented}")
    print(f"  invariant factors: {cert.invariant_factors_relations} -> "
          f"{cert.invariant_factors_augmented}")
    print(f"  independent: {cert.independent}")

    # The cover fan upstairs gets the same treatment in one line.
    cert_cover = exceptional_independence(rep2.cover_fan, rep2.exceptional_cover)
    print(f"cover fan: {len(cert_cover.exceptional)} exceptional rays, "
          f"independent={cert_cover.independent}")


if __name__ == "__main__":
    main()
