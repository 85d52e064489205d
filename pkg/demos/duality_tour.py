"""Alexander duality in action: duals, complements, and the projdim/reg
exchange, on a handful of small complexes.

Run with:  python3 demos/duality_tour.py
"""

from srideals import (
    GF2,
    RATIONALS,
    SimplicialComplex,
    alexander_dual,
    complement_complex,
    facet_ideal,
    is_cohen_macaulay,
    minimal_nonfaces,
    projdim_and_reg,
    stanley_reisner_ideal,
)


EXAMPLES = {
    "hollow triangle": SimplicialComplex(3, [(1, 2), (1, 3), (2, 3)]),
    "path of edges": SimplicialComplex(4, [(1, 2), (2, 3), (3, 4)]),
    "two disjoint edges": SimplicialComplex(4, [(1, 2), (3, 4)]),
    "quasi-tree": SimplicialComplex(6, [(1, 2, 3), (2, 3, 4), (3, 4, 5), (3, 4, 6)]),
}


def main():
    for name, cx in EXAMPLES.items():
        print(f"== {name}: {cx}")
        nonfaces, flag = minimal_nonfaces(cx)
        print(f"minimal nonfaces: {nonfaces} (flag complex: {flag})")
        dual = alexander_dual(cx)
        print(f"Alexander dual: {dual}")

        # the key identity: the nonface ideal of the dual is the facet
        # ideal of the facet-complement complex
        left = stanley_reisner_ideal(dual)
        right = facet_ideal(complement_complex(cx))
        print(f"I(dual nonfaces) == I(facet complements): {left == right}")

        # the projective dimension of the face ring equals the
        # regularity of the dual's nonface ideal
        ideal = stanley_reisner_ideal(cx)
        if not ideal.is_zero:
            pd, _reg, _ = projdim_and_reg(ideal)
            _pd, reg, _ = projdim_and_reg(left)
            print(f"projdim(face ring) = {pd + 1}, reg(dual ideal) = {reg}")

        # Cohen-Macaulayness of the complex pairs with linearity of the
        # dual ideal
        cm_q = is_cohen_macaulay(cx, RATIONALS)
        cm_2 = is_cohen_macaulay(cx, GF2)
        linear = projdim_and_reg(left)[2]
        print(f"Cohen-Macaulay: QQ={cm_q}, GF(2)={cm_2}; dual ideal linear={linear}")
        print()


if __name__ == "__main__":
    main()
