"""Finite posets, the rectangle poset, and their basic subsets.

Elements are dense integer ids ``0..n-1``.  The order relation is stored as
one bitmask per element, so comparability queries cost a shift and a mask.
For the rectangle poset [a]x[b] the coordinate (i, j), with 1 <= i <= a and
1 <= j <= b, maps to id ``(j-1)*a + (i-1)`` (column-major).  That numbering
makes the default linear extension sweep each column bottom-up, which is the
element order used for naming symbolic labels.
"""

from __future__ import annotations

import heapq
from functools import lru_cache
from itertools import combinations

from .errors import PosetError


class FinitePoset:
    """A finite poset given by its (transitively reduced) cover relation.

    Immutable after construction; safe to share between threads.
    """

    __slots__ = (
        "n",
        "names",
        "covers",
        "_up_mask",
        "_down_mask",
        "_up_covers",
        "_down_covers",
        "_topo",
    )

    def __init__(self, n, covers, names=None):
        """Build from dense-id cover pairs.

        Validates acyclicity, rejects duplicate covers, removes transitively
        implied pairs, and precomputes the order relation.
        """
        if names is not None and len(names) != n:
            raise PosetError(f"expected {n} element names, got {len(names)}")
        self.n = n
        self.names = tuple(names) if names is not None else tuple(range(n))

        seen = set()
        for lo, hi in covers:
            if not (0 <= lo < n and 0 <= hi < n):
                raise PosetError(f"cover ({lo}, {hi}) references an undeclared element")
            if lo == hi:
                raise PosetError(f"cycle detected: cover ({lo}, {hi}) is a self-loop")
            if (lo, hi) in seen:
                raise PosetError(f"duplicate cover ({lo}, {hi})")
            seen.add((lo, hi))

        up_adj = [[] for _ in range(n)]
        for lo, hi in seen:
            up_adj[lo].append(hi)
        topo = _topological_order(n, up_adj)

        # Strict up-set masks via the closure of the raw covers.
        strict_up = [0] * n
        for x in reversed(topo):
            m = 0
            for y in up_adj[x]:
                m |= strict_up[y] | (1 << y)
            strict_up[x] = m

        # A cover (x, y) is redundant when some z sits strictly between.
        reduced = set()
        for lo, hi in seen:
            implied = False
            for z in up_adj[lo]:
                if z != hi and (strict_up[z] >> hi) & 1:
                    implied = True
                    break
            if not implied:
                reduced.add((lo, hi))
        if reduced != seen:
            # Reachability is unchanged by the reduction; only adjacency shrinks.
            up_adj = [[] for _ in range(n)]
            for lo, hi in reduced:
                up_adj[lo].append(hi)

        self.covers = frozenset(reduced)
        self._up_mask = tuple(strict_up[x] | (1 << x) for x in range(n))
        down = [1 << x for x in range(n)]
        for x in range(n):
            m = strict_up[x]
            while m:
                y = (m & -m).bit_length() - 1
                down[y] |= 1 << x
                m &= m - 1
        self._down_mask = tuple(down)
        self._up_covers = tuple(tuple(sorted(up_adj[x])) for x in range(n))
        dn_adj = [[] for _ in range(n)]
        for lo, hi in self.covers:
            dn_adj[hi].append(lo)
        self._down_covers = tuple(tuple(sorted(dn_adj[x])) for x in range(n))
        self._topo = _topological_order(n, [list(t) for t in self._up_covers])

    # -- order queries -------------------------------------------------

    def leq(self, x, y):
        """True when x <= y."""
        return bool((self._up_mask[x] >> y) & 1)

    def lt(self, x, y):
        return x != y and self.leq(x, y)

    def comparable(self, x, y):
        return self.leq(x, y) or self.leq(y, x)

    def up_mask(self, x):
        """Bitmask of {y : x <= y}."""
        return self._up_mask[x]

    def down_mask(self, x):
        """Bitmask of {y : y <= x}."""
        return self._down_mask[x]

    def up_covers(self, x):
        """Elements covering x."""
        return self._up_covers[x]

    def down_covers(self, x):
        """Elements covered by x."""
        return self._down_covers[x]

    def elements(self):
        return range(self.n)

    def minimal_elements(self):
        return tuple(x for x in range(self.n) if not self._down_covers[x])

    def maximal_elements(self):
        return tuple(x for x in range(self.n) if not self._up_covers[x])

    def topo_order(self):
        """Deterministic linear extension: ties broken by smallest id."""
        return self._topo

    # -- subset predicates ----------------------------------------------

    def is_antichain(self, subset):
        return all(not self.comparable(x, y) for x, y in combinations(subset, 2))

    def is_ideal(self, subset):
        s = frozenset(subset)
        return all(_mask_subset(self._down_mask[x], s, self.n) for x in s)

    def is_filter(self, subset):
        s = frozenset(subset)
        return all(_mask_subset(self._up_mask[x], s, self.n) for x in s)

    def maximal_chains(self):
        """All maximal chains, each as a tuple from a minimal to a maximal element."""
        out = []
        stack = [(x, (x,)) for x in self.minimal_elements()]
        while stack:
            x, chain = stack.pop()
            ups = self._up_covers[x]
            if not ups:
                out.append(chain)
            else:
                for y in ups:
                    stack.append((y, chain + (y,)))
        return sorted(out)

    def __repr__(self):
        return f"FinitePoset(n={self.n}, covers={sorted(self.covers)})"


class RectanglePoset(FinitePoset):
    """The product of two chains [a]x[b] with componentwise order."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        if a < 1 or b < 1:
            raise PosetError(f"chain lengths must be positive, got ({a}, {b})")
        self.a = a
        self.b = b
        covers = []
        for i in range(1, a + 1):
            for j in range(1, b + 1):
                if i < a:
                    covers.append((rect_id(a, i, j), rect_id(a, i + 1, j)))
                if j < b:
                    covers.append((rect_id(a, i, j), rect_id(a, i, j + 1)))
        names = [None] * (a * b)
        for i in range(1, a + 1):
            for j in range(1, b + 1):
                names[rect_id(a, i, j)] = (i, j)
        super().__init__(a * b, covers, names)

    def id(self, i, j):
        """Dense id of coordinate (i, j)."""
        if not (1 <= i <= self.a and 1 <= j <= self.b):
            raise PosetError(f"coordinate ({i}, {j}) outside [{self.a}]x[{self.b}]")
        return rect_id(self.a, i, j)

    def coord(self, x):
        """Coordinate (i, j) of a dense id."""
        return self.names[x]

    def __repr__(self):
        return f"RectanglePoset({self.a}, {self.b})"


def rect_id(a, i, j):
    return (j - 1) * a + (i - 1)


@lru_cache(maxsize=None)
def product_of_chains(a, b):
    """The rectangle poset [a]x[b]; cached since callers reuse small rectangles."""
    return RectanglePoset(a, b)


def build_poset(covers, elements=None):
    """Build a FinitePoset from cover pairs over arbitrary hashable ids.

    ``elements`` may add isolated elements.  Input is validated (acyclic, no
    duplicate covers, no dangling references) and transitively reduced.
    """
    ids = []
    seen_ids = set()
    if elements is not None:
        for e in elements:
            if e in seen_ids:
                raise PosetError(f"duplicate element {e!r}")
            seen_ids.add(e)
            ids.append(e)
    for lo, hi in covers:
        for e in (lo, hi):
            if e not in seen_ids:
                if elements is not None:
                    raise PosetError(f"cover references undeclared element {e!r}")
                seen_ids.add(e)
                ids.append(e)
    index = {e: k for k, e in enumerate(ids)}
    dense = [(index[lo], index[hi]) for lo, hi in covers]
    return FinitePoset(len(ids), dense, names=ids)


def linear_extension(poset):
    """Deterministic linear extension of ``poset`` (topological, min-id ties)."""
    return poset.topo_order()


def enumerate_antichains(poset):
    """Every antichain of ``poset`` exactly once.

    Sorted by size, then lexicographically by sorted element ids.  Cost is
    O(#antichains * n); intended for desk-scale posets.
    """
    n = poset.n
    comp = [poset.up_mask(x) | poset.down_mask(x) for x in range(n)]
    out = [()]
    stack = [((x,), comp[x]) for x in reversed(range(n))]
    while stack:
        chosen, blocked = stack.pop()
        out.append(chosen)
        for y in range(chosen[-1] + 1, n):
            if not (blocked >> y) & 1:
                stack.append((chosen + (y,), blocked | comp[y]))
    out.sort(key=lambda t: (len(t), t))
    return [frozenset(t) for t in out]


def fibers(a, b):
    """Positive (row) and negative (column) fibers of [a]x[b], as id lists.

    Positive fiber k is {(k, l) : 1 <= l <= b}; negative fiber l is
    {(k, l) : 1 <= k <= a}.
    """
    positive = [[rect_id(a, k, l) for l in range(1, b + 1)] for k in range(1, a + 1)]
    negative = [[rect_id(a, k, l) for k in range(1, a + 1)] for l in range(1, b + 1)]
    return positive, negative


def poset_to_json(poset):
    """Canonical JSON form: dense ids, sorted covers, names when nontrivial."""
    obj = {
        "elements": list(range(poset.n)),
        "covers": [list(c) for c in sorted(poset.covers)],
    }
    if isinstance(poset, RectanglePoset):
        obj["chains"] = [poset.a, poset.b]
        obj["coords"] = [list(poset.coord(x)) for x in range(poset.n)]
    elif poset.names != tuple(range(poset.n)):
        obj["names"] = list(poset.names)
    return obj


def poset_from_json(obj):
    """Read a poset from {"chains": [a, b]} or {"elements": ..., "covers": ...}."""
    if "chains" in obj:
        a, b = obj["chains"]
        return product_of_chains(int(a), int(b))
    covers = [tuple(c) for c in obj.get("covers", [])]
    elements = obj.get("elements")
    return build_poset(covers, elements=elements)


def _topological_order(n, up_adj):
    indeg = [0] * n
    for x in range(n):
        for y in up_adj[x]:
            indeg[y] += 1
    heap = [x for x in range(n) if indeg[x] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        x = heapq.heappop(heap)
        order.append(x)
        for y in up_adj[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                heapq.heappush(heap, y)
    if len(order) != n:
        raise PosetError("cycle detected in cover relation")
    return tuple(order)


def _mask_subset(mask, subset, n):
    while mask:
        y = (mask & -mask).bit_length() - 1
        if y not in subset:
            return False
        mask &= mask - 1
    return True
