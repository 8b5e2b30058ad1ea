"""
Backtracking enumeration of maximal linked families on an n-element set.

A maximal linked family is a self-dual monotone predicate on subsets, so the
search walks the complement pairs {A, X minus A} and decides which side is in.
Putting A in forces every superset of A in and every subset of the complement
out; a search state is the pair of bit-vectors (inside, outside) and a branch
dies as soon as they overlap.
"""

import time
from functools import lru_cache
from multiprocessing import Pool
from typing import List, Optional, Tuple

from loguru import logger

from setfam import GroundSet, MaxLinkedFamily, MAX_ENUM_GROUND, GroundSetError, mirror_bits, up_close_bits

from .config import Config
from .errors import GroundTooLarge

# Known values of λ(n); the last two are reference values only.
LAMBDA_NUMBERS = {
    1: 1,
    2: 2,
    3: 4,
    4: 12,
    5: 81,
    6: 2646,
    7: 1422564,
    8: 229809982112,
    9: 423295099074735261880,
}

State = Tuple[int, int, int]
Step = Tuple[int, int, int, int, int]


def check_ground(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise GroundSetError(f"Ground size must be a positive integer, got {n!r}")
    if n > MAX_ENUM_GROUND:
        raise GroundTooLarge(f"Enumeration supports n <= {MAX_ENUM_GROUND}, got n={n}")


@lru_cache(maxsize=None)
def pair_order(n: int) -> Tuple[int, ...]:
    """Representatives of the complement pairs other than {empty, X}.

    The representative is the smaller side (ties broken by mask value); pairs
    are ordered by (cardinality, mask) of the representative so that small sets,
    which constrain the most, are decided first.
    """
    full = (1 << n) - 1
    reps = []
    for mask in range(1, full):
        other = full ^ mask
        if (mask.bit_count(), mask) < (other.bit_count(), other):
            reps.append(mask)
    return tuple(sorted(reps, key=lambda mask: (mask.bit_count(), mask)))


@lru_cache(maxsize=None)
def _steps(n: int) -> Tuple[Step, ...]:
    full = (1 << n) - 1
    steps = []
    for rep in pair_order(n):
        other = full ^ rep
        up_rep = up_close_bits(1 << rep, n)
        up_other = up_close_bits(1 << other, n)
        steps.append((rep, up_rep, mirror_bits(up_rep, n), up_other, mirror_bits(up_other, n)))
    return tuple(steps)


def _root(n: int) -> State:
    full = (1 << n) - 1
    # X is always in, the empty set always out.
    return 1 << full, 1, 0


def _advance(decided: int, pos: int, steps: Tuple[Step, ...]) -> int:
    last = len(steps)
    while pos < last and decided >> steps[pos][0] & 1:
        pos += 1
    return pos


def _count_from(inside: int, outside: int, pos: int, steps: Tuple[Step, ...]) -> int:
    decided = inside | outside
    last = len(steps)
    while pos < last and decided >> steps[pos][0] & 1:
        pos += 1
    if pos == last:
        return 1
    _, up_rep, ban_rep, up_other, ban_other = steps[pos]
    total = 0
    grown, banned = inside | up_rep, outside | ban_rep
    if not grown & banned:
        total += _count_from(grown, banned, pos + 1, steps)
    grown, banned = inside | up_other, outside | ban_other
    if not grown & banned:
        total += _count_from(grown, banned, pos + 1, steps)
    return total


def _collect_from(inside: int, outside: int, pos: int, steps: Tuple[Step, ...], sink: List[int]) -> None:
    decided = inside | outside
    last = len(steps)
    while pos < last and decided >> steps[pos][0] & 1:
        pos += 1
    if pos == last:
        sink.append(inside)
        return
    _, up_rep, ban_rep, up_other, ban_other = steps[pos]
    grown, banned = inside | up_rep, outside | ban_rep
    if not grown & banned:
        _collect_from(grown, banned, pos + 1, steps, sink)
    grown, banned = inside | up_other, outside | ban_other
    if not grown & banned:
        _collect_from(grown, banned, pos + 1, steps, sink)


def split_frontier(n: int, depth: int) -> List[State]:
    """Search states after the first `depth` pair decisions, in a fixed order.

    Subtrees below these states are disjoint and together cover the whole
    search, so they can be processed independently.
    """
    check_ground(n)
    steps = _steps(n)
    states = [_root(n)]
    for _ in range(max(depth, 0)):
        expanded = []
        for inside, outside, pos in states:
            pos = _advance(inside | outside, pos, steps)
            if pos == len(steps):
                expanded.append((inside, outside, pos))
                continue
            _, up_rep, ban_rep, up_other, ban_other = steps[pos]
            for up, ban in ((up_rep, ban_rep), (up_other, ban_other)):
                grown, banned = inside | up, outside | ban
                if not grown & banned:
                    expanded.append((grown, banned, pos + 1))
        states = expanded
    return states


def _count_task(task: Tuple[int, int, int, int]) -> int:
    n, inside, outside, pos = task
    return _count_from(inside, outside, pos, _steps(n))


def _collect_task(task: Tuple[int, int, int, int]) -> List[int]:
    n, inside, outside, pos = task
    sink: List[int] = []
    _collect_from(inside, outside, pos, _steps(n), sink)
    return sink


def _tasks(n: int, split_depth: Optional[int]) -> List[Tuple[int, int, int, int]]:
    depth = Config.SPLIT_DEPTH if split_depth is None else split_depth
    frontier = split_frontier(n, depth)
    logger.debug(f"Split the n={n} search at depth {depth} into {len(frontier)} subtasks")
    return [(n, inside, outside, pos) for inside, outside, pos in frontier]


def count_lambda(n: int, workers: int = 1, split_depth: Optional[int] = None) -> int:
    """
    Count the maximal linked families on an n-element set.

    Args:
        n: Ground size, 1 <= n <= 7
        workers: Number of worker processes; the result does not depend on it
        split_depth: Pair decisions used to split the tree (defaults to Config.SPLIT_DEPTH)

    Returns:
        lambda(n)
    """
    check_ground(n)
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    started = time.perf_counter()
    if workers == 1:
        total = _count_from(*_root(n), _steps(n))
    else:
        with Pool(processes=workers) as pool:
            total = sum(pool.imap_unordered(_count_task, _tasks(n, split_depth)))
    logger.info(f"lambda({n}) = {total} counted in {time.perf_counter() - started:.2f}s with {workers} worker(s)")
    return total


def enumerate_bits(n: int, workers: int = 1, split_depth: Optional[int] = None) -> List[int]:
    """Membership bit-vectors of every maximal linked family, ascending."""
    check_ground(n)
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    started = time.perf_counter()
    if workers == 1:
        found: List[int] = []
        _collect_from(*_root(n), _steps(n), found)
    else:
        found = []
        with Pool(processes=workers) as pool:
            for chunk in pool.imap(_collect_task, _tasks(n, split_depth)):
                found.extend(chunk)
    found.sort()
    logger.info(f"Enumerated {len(found)} maximal linked families on {n} points in {time.perf_counter() - started:.2f}s")
    return found


def enumerate_lambda(ground: GroundSet, workers: int = 1, split_depth: Optional[int] = None) -> List[MaxLinkedFamily]:
    """Every maximal linked family on `ground`, each exactly once, sorted by bit-vector."""
    return [MaxLinkedFamily(ground, bits) for bits in enumerate_bits(ground.n, workers, split_depth)]
