"""Blade ordering and the Cl(3,0) multiplication table.

Coefficient index -> blade::

    0: 1    1: e1    2: e2    3: e3
    4: e12  5: e13   6: e23   7: e123 (the pseudoscalar, iota)

Each blade is stored as the bitmask of its basis vectors.  The table is
generated once from the canonical-reordering sign rule with e_i^2 = +1.
"""

BLADE_NAMES = ("1", "e1", "e2", "e3", "e12", "e13", "e23", "e123")
BLADE_MASKS = (0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111)
BLADE_GRADES = tuple(bin(mask).count("1") for mask in BLADE_MASKS)
_INDEX_OF_MASK = {mask: i for i, mask in enumerate(BLADE_MASKS)}


def _reorder_sign(a, b):
    # Count transpositions needed to merge the basis vectors of a and b into
    # ascending order; each swap of distinct vectors contributes -1.
    swaps = 0
    a >>= 1
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


def _build_tables():
    index = [[0] * 8 for _ in range(8)]
    sign = [[0] * 8 for _ in range(8)]
    for i, ma in enumerate(BLADE_MASKS):
        for j, mb in enumerate(BLADE_MASKS):
            index[i][j] = _INDEX_OF_MASK[ma ^ mb]
            sign[i][j] = _reorder_sign(ma, mb)
    return tuple(map(tuple, index)), tuple(map(tuple, sign))


PRODUCT_INDEX, PRODUCT_SIGN = _build_tables()
