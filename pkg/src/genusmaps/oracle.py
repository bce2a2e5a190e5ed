"""Ground-truth enumeration of rooted maps and hypermaps at tiny sizes.

A hypermap with n darts is a pair of permutations (sigma, alpha) of the
darts generating a transitive group; vertices, hyperedges and faces are
the cycles of sigma, alpha and sigma*alpha, and the genus comes from the
Euler formula.  A map with n edges is the same picture on 2n darts with
alpha a fixed-point-free involution.  Rooted counts are labeled-pair
counts divided by (d-1)!; exactness of that division is itself a check.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations

Perm = tuple[int, ...]  # image array on 0..d-1


class InexactDivisionError(Exception):
    """Labeled pair total not divisible by (d-1)! -- enumeration bug."""


@dataclass(frozen=True)
class OracleResult:
    size: int                  # darts (hypermap) or edges (map)
    counts: tuple[int, ...]    # rooted counts indexed by genus
    labeled_pairs: int         # qualifying (sigma, alpha) pairs


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: dart i -> p[q[i]]."""
    return tuple(p[x] for x in q)

def cycle_count(p: Perm) -> int:
    seen = [False] * len(p)
    c = 0
    for i in range(len(p)):
        if not seen[i]:
            c += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = p[j]
    return c


def is_transitive(sigma: Perm, alpha: Perm) -> bool:
    """Connectivity of the graph with edges i-sigma(i) and i-alpha(i)."""
    d = len(sigma)
    parent = list(range(d))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = d
    for p in (sigma, alpha):
        for i in range(d):
            a, b = find(i), find(p[i])
            if a != b:
                parent[a] = b
                comps -= 1
    return comps == 1


def _check_two_g(two_g: int) -> int:
    if two_g < 0 or two_g % 2:
        raise InexactDivisionError(f"Euler formula gave 2g = {two_g}")
    return two_g // 2


def hypermap_genus(n: int, c_sigma: int, c_alpha: int, c_faces: int) -> int:
    """Euler formula with vertices, hyperedges, faces the cycles of
    sigma, alpha, sigma*alpha: their counts sum to n + 2 - 2g."""
    return _check_two_g(n + 2 - (c_sigma + c_alpha + c_faces))


def map_genus(n_edges: int, c_sigma: int, c_faces: int) -> int:
    """Euler formula 2 - 2g = #v - #e + #f on 2n darts."""
    return _check_two_g(2 - c_sigma + n_edges - c_faces)


def _partitions(n: int, largest: int | None = None) -> list[list[int]]:
    if largest is None:
        largest = n
    if n == 0:
        return [[]]
    out = []
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            out.append([k] + rest)
    return out


def _class_rep(part: list[int]) -> Perm:
    img = []
    start = 0
    for k in part:
        img.extend(list(range(start + 1, start + k)) + [start])
        start += k
    return tuple(img)


def _class_size(n: int, part: list[int]) -> int:
    mult: dict[int, int] = {}
    for k in part:
        mult[k] = mult.get(k, 0) + 1
    denom = 1
    for k, m in mult.items():
        denom *= k**m * math.factorial(m)
    return math.factorial(n) // denom


def _hypermap_class_tally(args: tuple[int, list[int]]) -> list[int]:
    """Genus tallies over all alpha for one sigma conjugacy class."""
    n, part = args
    sigma = _class_rep(part)
    weight = _class_size(n, part)
    c_sigma = len(part)
    tallies = [0] * (n // 2 + 1)
    for alpha in permutations(range(n)):
        if not is_transitive(sigma, alpha):
            continue
        g = hypermap_genus(n, c_sigma, cycle_count(alpha),
                           cycle_count(compose(sigma, alpha)))
        tallies[g] += weight
    return tallies


def count_rooted_hypermaps(n: int, reduce_by_conjugacy: bool | None = None,
                           jobs: int = 1) -> OracleResult:
    """Rooted hypermap counts by genus at n darts.

    The pair count is constant on conjugacy classes of sigma, so by default
    sizes n >= 6 enumerate one sigma per class (weighted by class size)
    instead of the full S_n x S_n product; the result is identical.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    if reduce_by_conjugacy is None:
        reduce_by_conjugacy = n >= 6
    tallies = [0] * (n // 2 + 1)
    if reduce_by_conjugacy:
        work = [(n, part) for part in _partitions(n)]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(_hypermap_class_tally, work))
        else:
            results = [_hypermap_class_tally(w) for w in work]
        for res in results:
            for g, v in enumerate(res):
                tallies[g] += v
    else:
        for sigma in permutations(range(n)):
            c_sigma = cycle_count(sigma)
            for alpha in permutations(range(n)):
                if not is_transitive(sigma, alpha):
                    continue
                g = hypermap_genus(n, c_sigma, cycle_count(alpha),
                                   cycle_count(compose(sigma, alpha)))
                tallies[g] += 1
    return _to_result(n, tallies, math.factorial(n - 1))


def fixed_point_free_involutions(d: int) -> list[Perm]:
    """All fixed-point-free involutions on 0..d-1 (d even)."""
    out: list[Perm] = []

    def rec(img: list[int], free: list[int]) -> None:
        if not free:
            out.append(tuple(img))
            return
        a = free[0]
        for idx in range(1, len(free)):
            b = free[idx]
            img[a], img[b] = b, a
            rec(img, [x for x in free[1:] if x != b])
        # img entries for a/b get overwritten on the next branch
    rec([0] * d, list(range(d)))
    return out


def canonical_involution(d: int) -> Perm:
    return tuple(i + 1 if i % 2 == 0 else i - 1 for i in range(d))


def count_rooted_maps(n: int, fix_involution: bool | None = None) -> OracleResult:
    """Rooted map counts by genus at n edges (2n darts).

    fix_involution replaces the loop over all (2n-1)!! pairings by the
    canonical one, weighting by (2n-1)!!; exact by conjugation symmetry.
    Default: full enumeration up to n = 3, fixed involution beyond.
    """
    if n < 1:
        raise ValueError("n >= 1 required")
    if fix_involution is None:
        fix_involution = n >= 4
    d = 2 * n
    tallies = [0] * (n + 1)
    if fix_involution:
        alphas = [canonical_involution(d)]
        weight = math.prod(range(1, d, 2))  # (2n-1)!!
    else:
        alphas = fixed_point_free_involutions(d)
        weight = 1
    for alpha in alphas:
        for sigma in permutations(range(d)):
            if not is_transitive(sigma, alpha):
                continue
            g = map_genus(n, cycle_count(sigma), cycle_count(compose(sigma, alpha)))
            tallies[g] += weight
    return _to_result(n, tallies, math.factorial(d - 1))


def _to_result(size: int, tallies: list[int], root_count: int) -> OracleResult:
    while len(tallies) > 1 and tallies[-1] == 0:
        tallies.pop()
    counts = []
    for g, v in enumerate(tallies):
        q, r = divmod(v, root_count)
        if r:
            raise InexactDivisionError(f"genus {g}: {v} not divisible by {root_count}")
        counts.append(q)
    return OracleResult(size, tuple(counts), sum(tallies))
