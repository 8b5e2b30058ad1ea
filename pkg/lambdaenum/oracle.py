from itertools import product
from typing import List

from setfam import up_close_bits

from .errors import GroundTooLarge
from .search import check_ground, pair_order

BRUTE_FORCE_LIMIT = 4


def brute_force_bits(n: int) -> List[int]:
    """
    Maximal linked families found by scanning every self-dual assignment.

    Each complement pair contributes one chosen side; a choice is kept iff the
    chosen sets form an upfamily. Independent of the pruned search.
    """
    check_ground(n)
    if n > BRUTE_FORCE_LIMIT:
        raise GroundTooLarge(f"Brute force is limited to n <= {BRUTE_FORCE_LIMIT}, got n={n}")
    full = (1 << n) - 1
    found = []
    for choice in product((False, True), repeat=len(pair_order(n))):
        bits = 1 << full
        for rep, take_other in zip(pair_order(n), choice):
            bits |= 1 << (full ^ rep if take_other else rep)
        if up_close_bits(bits, n) == bits:
            found.append(bits)
    return sorted(found)
