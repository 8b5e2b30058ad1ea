"""
The extension of a semigroup operation to maximal linked families.

For families a, b over a semigroup S the product a∗b is the upfamily
generated by the unions of a·B_a over A in a and choices B_a in b. The fast
form tests each subset C directly: C is in a∗b iff {s : C/s in b} is in a,
where C/s = {x : s·x in C}.
"""

from itertools import product as cartesian
from math import gcd
from typing import Optional, Sequence

from lambdaenum import GroundTooLarge
from setfam import GroundSet, MaxLinkedFamily, NotMaximalLinked, up_close_bits

from .element import LambdaElement, ground_of, quotient_masks
from .errors import GroundMismatch, NotAUnit, NotMaximal

ORACLE_LIMIT = 5


def _check_same_home(a: LambdaElement, b: LambdaElement) -> None:
    if a.home is not b.home:
        raise GroundMismatch(f"Operands live on {a.home.name} and {b.home.name}")


def _certify(bits: int, ground: GroundSet, what: str) -> MaxLinkedFamily:
    try:
        return MaxLinkedFamily.from_family(MaxLinkedFamily(ground, bits))
    except NotMaximalLinked as e:
        raise NotMaximal(f"{what} is not maximal linked") from e


def product_bits(a_bits: int, b_bits: int, quot) -> int:
    n = quot.shape[1]
    result = 0
    for c in range(1, quot.shape[0]):
        row = quot[c]
        selector = 0
        for s in range(n):
            if b_bits >> int(row[s]) & 1:
                selector |= 1 << s
        if a_bits >> selector & 1:
            result |= 1 << c
    return result


def product(a: LambdaElement, b: LambdaElement) -> LambdaElement:
    """a∗b, certified maximal linked."""
    _check_same_home(a, b)
    bits = product_bits(a.bits, b.bits, quotient_masks(a.home))
    return LambdaElement(_certify(bits, a.family.ground, f"Product on {a.home.name}"), a.home)


def left_translate(home, s: int, mask: int) -> int:
    """Mask of s·B."""
    image = 0
    row = home.table[s]
    while mask:
        low = mask & -mask
        image |= 1 << row[low.bit_length() - 1]
        mask ^= low
    return image


def product_oracle(a: LambdaElement, b: LambdaElement) -> LambdaElement:
    """
    a∗b computed from unions of translates over every selector.

    Only minimal members are needed on both sides since the result is
    upward closed. Exponential in the number of minimal members.
    """
    _check_same_home(a, b)
    home = a.home
    if home.size > ORACLE_LIMIT:
        raise GroundTooLarge(f"The selector oracle is limited to order {ORACLE_LIMIT}, got {home.size}")
    b_minimal = b.family.minimal_sets
    base = 0
    for mask in a.family.minimal_sets:
        points = [s for s in range(home.size) if mask >> s & 1]
        for choice in cartesian(b_minimal, repeat=len(points)):
            union = 0
            for s, chosen in zip(points, choice):
                union |= left_translate(home, s, chosen)
            base |= 1 << union
    bits = up_close_bits(base, home.size)
    return LambdaElement(_certify(bits, a.family.ground, f"Oracle product on {home.name}"), home)


def image_mask(f: Sequence[int], mask: int) -> int:
    image = 0
    for x, y in enumerate(f):
        if mask >> x & 1:
            image |= 1 << y
    return image


def lambda_map(f: Sequence[int], m: MaxLinkedFamily, target: Optional[GroundSet] = None) -> MaxLinkedFamily:
    """
    The induced map λf: m -> ⟨f(M) : M in m⟩.

    Args:
        f: Images of the points of m's ground set
        m: Source family
        target: Ground set of the image (defaults to m's ground set)
    """
    if len(f) != m.n:
        raise GroundMismatch(f"Map has {len(f)} images but the family lives on {m.n} points")
    target = target or m.ground
    if any(not 0 <= y < target.n for y in f):
        raise GroundMismatch(f"Map leaves the target ground set of size {target.n}")
    base = 0
    for mask in m.minimal_sets:
        base |= 1 << image_mask(f, mask)
    return _certify(up_close_bits(base, target.n), target, "Image family")


def affine_image(a: int, b: int, m: LambdaElement) -> LambdaElement:
    """λf(m) for f(x) = a·x + b on the cyclic group Z/n."""
    n = m.home.size
    if tuple(tuple(row) for row in m.home.table) != tuple(tuple((i + j) % n for j in range(n)) for i in range(n)):
        raise GroundMismatch(f"Affine maps need the cyclic group Z/{n}, got {m.home.name}")
    if gcd(a % n, n) != 1:
        raise NotAUnit(f"{a} is not a unit modulo {n}")
    f = [(a * x + b) % n for x in range(n)]
    return LambdaElement(lambda_map(f, m.family, ground_of(m.home)), m.home)
