"""Independent oracles used to cross-check the library's exact algorithms.

Everything here recomputes from first principles (subset enumeration, naive
closures, dynamic programming) without touching the code paths under test.
"""

from __future__ import annotations

from itertools import combinations


def naive_closure(table, base, new):
    """Extend a closed set (or seed) with one element and re-close by
    saturating products; in a finite group that already yields a subgroup."""
    elems = set(base)
    queue = [new] if new is not None else list(elems)
    elems.update(queue)
    while queue:
        a = queue.pop()
        row_a = table[a]
        for b in list(elems):
            for c in (row_a[b], table[b][a]):
                if c not in elems:
                    elems.add(c)
                    queue.append(c)
    return frozenset(elems)


def brute_force_subgroups(group) -> set[frozenset[int]]:
    """All subgroups, independently of the lattice module.

    For order <= 12 this literally scans every subset and keeps the ones
    closed under multiplication.  Above that it closes every generating set
    of size <= 4, which is exhaustive because a chain of strictly growing
    subgroups at least doubles the order at each step, so any subgroup of a
    group of order <= 24 is generated by at most 4 elements (2^5 > 24).
    Generators already inside the running closure are skipped: the resulting
    subgroup would repeat a branch without them.
    """
    n = group.order
    table = group.table
    if n <= 12:
        found = set()
        for bits in range(1, 1 << n):
            subset = [i for i in range(n) if bits >> i & 1]
            closed = True
            for a in subset:
                row = table[a]
                for b in subset:
                    if not (bits >> row[b] & 1):
                        closed = False
                        break
                if not closed:
                    break
            if closed:
                found.add(frozenset(subset))
        return found
    if n > 24:
        raise ValueError("brute-force subgroup oracle is limited to order <= 24")
    found = {frozenset([group.identity])}

    def extend(closure, start, depth):
        for x in range(start, n):
            if x in closure:
                continue
            bigger = naive_closure(table, closure, x)
            found.add(bigger)
            if depth < 4:
                extend(bigger, x + 1, depth + 1)

    extend(frozenset([group.identity]), 0, 1)
    return found


def alpha_oracle(adj) -> int:
    """Independence number by scanning all vertex subsets."""
    n = len(adj)
    best = 0
    masks = [sum(1 << w for w in adj[v]) for v in range(n)]
    for bits in range(1 << n):
        if bits.bit_count() <= best:
            continue
        if all(not (bits & masks[v]) for v in range(n) if bits >> v & 1):
            best = bits.bit_count()
    return best


def omega_oracle(adj) -> int:
    """Clique number by scanning all vertex subsets."""
    n = len(adj)
    best = 0
    for bits in range(1 << n):
        if bits.bit_count() <= best:
            continue
        members = [v for v in range(n) if bits >> v & 1]
        if all(w in adj[v] for v, w in combinations(members, 2)):
            best = len(members)
    return best


def chi_oracle(adj) -> int:
    """Chromatic number by cover-with-independent-sets DP over subsets."""
    n = len(adj)
    if n == 0:
        return 0
    masks = [sum(1 << w for w in adj[v]) for v in range(n)]
    full = (1 << n) - 1
    independent = [False] * (1 << n)
    independent[0] = True
    for bits in range(1, 1 << n):
        v = (bits & -bits).bit_length() - 1
        rest = bits & (bits - 1)
        independent[bits] = independent[rest] and not (masks[v] & rest)
    chi = [0] * (1 << n)
    for bits in range(1, 1 << n):
        v = (bits & -bits).bit_length() - 1
        best = n
        # enumerate subsets of bits containing v
        sub = bits
        while sub:
            if sub >> v & 1 and independent[sub]:
                best = min(best, 1 + chi[bits & ~sub])
            sub = (sub - 1) & bits
        chi[bits] = best
    return chi[full]


def min_vertex_cover_oracle(adj) -> int:
    """Smallest vertex cover by scanning all subsets."""
    n = len(adj)
    edges = [(u, v) for u in range(n) for v in adj[u] if u < v]
    best = n
    for bits in range(1 << n):
        if bits.bit_count() >= best:
            continue
        if all(bits >> u & 1 or bits >> v & 1 for u, v in edges):
            best = bits.bit_count()
    return best


def counted_degrees(graph) -> dict[int, int]:
    """Vertex order -> degree, recounted edge by edge from gcds."""
    from math import gcd

    orders = [v.order for v in graph.vertices]
    out = {}
    for i, o in enumerate(orders):
        out[o] = sum(1 for j, p in enumerate(orders) if j != i and gcd(o, p) == 1)
    return out


def element_order_census(group) -> dict[int, int]:
    """Multiset of element orders computed by repeated multiplication."""
    census: dict[int, int] = {}
    for a in range(group.order):
        x = a
        k = 1
        while x != group.identity:
            x = group.table[x][a]
            k += 1
        census[k] = census.get(k, 0) + 1
    return census
