"""Equivalence decision and the constructive canonicalizer.

Deciding equivalence is cheap: two identity factorizations of equal degree
and length are connected by elementary moves exactly when their component
signatures coincide.  The constructive half actually exhibits the moves: it
rewrites any identity factorization into a canonical shape and logs every
elementary move along the way, so the claim can be replayed and checked.

Canonical shape: all identity factors first, then one block per component in
ascending order of smallest vertex.  A component with ascending vertices
``v_0 < v_1 < ... < v_{l-1}`` and weight ``w`` becomes the doubled path
``(v_0,v_1)^2 (v_1,v_2)^2 ... (v_{l-2},v_{l-1})^2`` followed by
``w - 2(l-1)`` further copies of ``(v_0,v_1)``.

The planner never searches.  It is built from four verified rewrites:

* bubbling: a factor travels left through inverse moves (or right through
  forward moves), its own value preserved, conjugating what it passes;
* merging: two factors carrying adjacent graph edges combine to create a
  factor for the shortcut edge, shortening a path by one;
* doubled-pair swap: adjacent doubled pairs ``x x y y -> y y x x`` in four
  forward moves, for any transpositions x, y;
* doubled-pair shift: ``x x y y -> x x z z`` with ``z = x y x`` in four
  forward moves, conjugating the right pair by the left.

Every intermediate state is produced by a legal move, so the final move log
is itself the equivalence certificate.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InternalError, PreconditionError
from .factorization import (
    Direction,
    Factor,
    Factorization,
    HurwitzMove,
    MoveCertificate,
    apply_certificate,
    conjugate_factor,
)
from .graph import ComponentSignature, signature


@dataclass(frozen=True)
class CanonicalResult:
    """A rewritten factorization plus the move log that produced it.

    Replaying ``certificate`` over the planner's input yields ``canonical``
    exactly.
    """

    canonical: Factorization
    certificate: MoveCertificate


def hurwitz_equivalent(f1: Factorization, f2: Factorization) -> bool:
    """Decide whether two identity factorizations are move-connected.

    The inputs must live in the same symmetric group, have the same number
    of factors, and both multiply to the identity; anything else is outside
    the theorem's hypotheses and raises an error rather than returning
    false.

    >>> a = Factorization(3, [(1, 2), (1, 2)])
    >>> b = Factorization(3, [(1, 3), (1, 3)])
    >>> hurwitz_equivalent(a, a)
    True
    >>> hurwitz_equivalent(a, b)
    False
    """
    if f1.degree != f2.degree:
        raise PreconditionError(
            f"degree mismatch: {f1.degree} vs {f2.degree}; equivalence is "
            "only defined within one symmetric group"
        )
    if len(f1) != len(f2):
        raise PreconditionError(
            f"length mismatch: {len(f1)} vs {len(f2)}; equivalence requires "
            "the same number of factors"
        )
    if not f1.is_identity_factorization() or not f2.is_identity_factorization():
        raise PreconditionError(
            "theorem precondition violated: both products must be the identity"
        )
    return signature(f1) == signature(f2)


def canonical_shape(sig: ComponentSignature) -> Factorization:
    """Construct the canonical factorization for a signature directly.

    This is the target the planner must reach; building it independently
    from the signature gives a cross-check that costs O(m).
    """
    factors: list[Factor] = [None] * sig.identity_factor_count
    for vertices, weight in sig.components:
        l = len(vertices)
        leftover = weight - 2 * (l - 1)
        if leftover < 0 or leftover % 2:
            raise InternalError(
                f"component {set(vertices)} with weight {weight}: leftover "
                f"{leftover} is not a non-negative even count"
            )
        for t in range(l - 1):
            factors += [(vertices[t], vertices[t + 1])] * 2
        factors += [(vertices[0], vertices[1])] * leftover
    return Factorization(sig.degree, factors)


class _Planner:
    """Mutable factor list plus the move log that shaped it.

    All mutation goes through forward()/inverse(), so the log and the list
    can never disagree.
    """

    def __init__(self, factorization: Factorization):
        self.degree = factorization.degree
        self.factors: list[Factor] = list(factorization.factors)
        self.moves: list[HurwitzMove] = []

    def result(self) -> CanonicalResult:
        return CanonicalResult(
            canonical=Factorization(self.degree, tuple(self.factors)),
            certificate=tuple(self.moves),
        )

    # -- elementary moves --------------------------------------------------

    def forward(self, k: int) -> None:
        f = self.factors
        s, t = f[k], f[k + 1]
        f[k], f[k + 1] = conjugate_factor(s, t), s
        self.moves.append(HurwitzMove(Direction.FORWARD, k))

    def inverse(self, k: int) -> None:
        f = self.factors
        s, t = f[k], f[k + 1]
        f[k], f[k + 1] = t, conjugate_factor(t, s)
        self.moves.append(HurwitzMove(Direction.INVERSE, k))

    # -- verified composite rewrites ---------------------------------------

    def bubble_left(self, j: int, dest: int) -> None:
        """Carry the factor at j to dest <= j, its value preserved."""
        for k in range(j - 1, dest - 1, -1):
            self.inverse(k)

    def swap_cells(self, p: int) -> None:
        """Exchange the doubled pairs at (p, p+1) and (p+2, p+3)."""
        x, y = self.factors[p], self.factors[p + 2]
        self.forward(p + 1)
        self.forward(p)
        self.forward(p + 2)
        self.forward(p + 1)
        assert self.factors[p] == y and self.factors[p + 2] == x

    def shift_cells(self, p: int) -> None:
        """Conjugate the doubled pair at (p+2, p+3) by the one at (p, p+1)."""
        x, y = self.factors[p], self.factors[p + 2]
        self.forward(p + 1)
        self.forward(p + 2)
        self.forward(p + 2)
        self.forward(p + 1)
        assert self.factors[p] == x
        assert self.factors[p + 2] == conjugate_factor(x, y)

    def pair_over_single_left(self, p: int) -> None:
        """Slide the doubled pair at (p, p+1) left past the single at p-1."""
        single = self.factors[p - 1]
        self.inverse(p - 1)
        self.inverse(p)
        assert self.factors[p + 1] == single

    # -- window graph queries ----------------------------------------------

    def _window_adjacency(self, lo: int, hi: int) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {}
        for f in self.factors[lo:hi]:
            assert f is not None
            a, b = f
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        return adj

    @staticmethod
    def _distances(adj: dict[int, set[int]], start: int) -> dict[int, int]:
        dist = {start: 0}
        queue: deque[int] = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        return dist

    def _shortest_path(self, lo: int, hi: int, a: int, b: int) -> list[int]:
        """Lexicographically smallest shortest vertex path a..b, or []."""
        adj = self._window_adjacency(lo, hi)
        if a not in adj or b not in adj:
            return []
        dist = self._distances(adj, b)
        if a not in dist:
            return []
        path = [a]
        v = a
        while v != b:
            v = min(w for w in adj[v] if dist.get(w, -1) == dist[v] - 1)
            path.append(v)
        return path

    def _nearest_source(
        self, lo: int, hi: int, sources: set[int], target: int
    ) -> int:
        """The source vertex closest to target in the window graph; ties go
        to the smallest vertex."""
        adj = self._window_adjacency(lo, hi)
        if target not in adj:
            raise InternalError(
                f"vertex {target} carries no edge in the window; "
                "connectivity invariant broken"
            )
        dist = self._distances(adj, target)
        best = min(
            ((dist[v], v) for v in sources if v in dist), default=None
        )
        if best is None:
            raise InternalError(
                f"no path from {{{target}}} to the spanned vertices; "
                "connectivity invariant broken"
            )
        return best[1]

    # -- the pull rewrite ---------------------------------------------------

    def pull(self, lo: int, hi: int, a: int, b: int) -> None:
        """Make factors[lo] equal (a, b) using moves inside [lo, hi) only.

        Requires a path between a and b in the window graph.  Repeatedly
        merges the first two edges of the current shortest path (strictly
        shortening it, since conjugation by the carried factor cannot touch
        the path's later edges), then bubbles the resulting factor to lo.
        """
        target = (a, b) if a < b else (b, a)
        while True:
            path = self._shortest_path(lo, hi, a, b)
            if not path:
                raise InternalError(
                    f"no path between {a} and {b} in window [{lo},{hi}); "
                    "connectivity invariant broken"
                )
            if len(path) == 2:
                break
            u0, u1, u2 = path[0], path[1], path[2]
            x = (u0, u1) if u0 < u1 else (u1, u0)
            y = (u1, u2) if u1 < u2 else (u2, u1)
            j1 = self.factors.index(x, lo, hi)
            j2 = self.factors.index(y, lo, hi)
            if j1 < j2:
                # carry x right until adjacent to y, then merge forward
                for k in range(j1, j2 - 1):
                    self.forward(k)
                self.forward(j2 - 1)
            else:
                # carry x left until adjacent to y, then merge inverse
                for k in range(j1 - 1, j2, -1):
                    self.inverse(k)
                self.inverse(j2)
        j = self.factors.index(target, lo, hi)
        self.bubble_left(j, lo)

    # -- grouping ------------------------------------------------------------

    def group(self) -> list[tuple[int, int]]:
        """Stable-sort factors into identity-first component blocks.

        Factors from different components are disjoint, and identity factors
        commute with everything, so each executed forward move is a pure
        swap.  Returns the (lo, hi) slot range of each transposition block,
        in ascending component order.
        """
        parent = list(range(self.degree + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for f in self.factors:
            if f is None:
                continue
            ra, rb = find(f[0]), find(f[1])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
        # with min-root unions, find(v) is the component's smallest vertex
        keys = [
            -1 if f is None else find(f[0]) for f in self.factors
        ]
        m = len(keys)
        for end in range(m - 1, 0, -1):
            dirty = False
            for k in range(end):
                if keys[k] > keys[k + 1]:
                    swapped = (self.factors[k + 1], self.factors[k])
                    self.forward(k)
                    assert (self.factors[k], self.factors[k + 1]) == swapped
                    keys[k], keys[k + 1] = keys[k + 1], keys[k]
                    dirty = True
            if not dirty:
                break
        blocks: list[tuple[int, int]] = []
        lo = 0
        while lo < m:
            if keys[lo] == -1:
                lo += 1
                continue
            hi = lo
            while hi < m and keys[hi] == keys[lo]:
                hi += 1
            blocks.append((lo, hi))
            lo = hi
        return blocks

    # -- per-block canonicalization -------------------------------------------

    def canonicalize_block(self, lo: int, hi: int) -> None:
        """Rewrite one component block into its canonical shape.

        The block must hold the transposition factors of a single connected
        component whose subproduct is the identity; both are consequences of
        grouping an identity factorization.
        """
        vertices = sorted({v for f in self.factors[lo:hi] for v in f})
        l = len(vertices)
        w = hi - lo
        leftover = w - 2 * (l - 1)
        if leftover < 0 or leftover % 2:
            raise InternalError(
                f"component {set(vertices)} with weight {w}: leftover "
                f"{leftover} is not a non-negative even count"
            )
        self._build_path(lo, hi, vertices)
        self._normalize_tail(lo, hi, vertices)

    def _build_path(self, lo: int, hi: int, vertices: list[int]) -> None:
        """Stage 1: produce the doubled ascending path cells."""
        l = len(vertices)
        for k in range(1, l):
            spanned = set(vertices[:k])
            target_v = vertices[k]
            suffix_lo = lo + 2 * (k - 1)
            vs = self._nearest_source(suffix_lo, hi, spanned, target_v)
            self.pull(suffix_lo, hi, vs, target_v)
            self.pull(suffix_lo + 1, hi, vs, target_v)
            # walk the doubled pair's lower endpoint up to vertices[k-1]
            s_idx = vertices.index(vs)
            dpos = k - 1
            for c in range(s_idx, k - 1):
                while dpos > c + 1:
                    self.swap_cells(lo + 2 * (dpos - 1))
                    dpos -= 1
                self.shift_cells(lo + 2 * c)
                assert self.factors[lo + 2 * dpos] == (vertices[c + 1], target_v)
                if c < k - 2:
                    self.swap_cells(lo + 2 * dpos)
                    dpos += 1
            assert self.factors[suffix_lo] == (vertices[k - 1], target_v)
            assert self.factors[suffix_lo + 1] == (vertices[k - 1], target_v)

    def _normalize_tail(self, lo: int, hi: int, vertices: list[int]) -> None:
        """Stage 2: convert the leftover weight into (v0, v1) copies."""
        l = len(vertices)
        v01 = (vertices[0], vertices[1])
        path_cells = l - 1
        proc_base = lo + 2 * path_cells
        f_count = 0
        while proc_base + f_count < hi:
            u0 = proc_base + f_count
            factor = self.factors[u0]
            assert factor is not None
            a, b = factor
            # double it: the rest of the unprocessed region multiplies to
            # (a,b), so it connects a to b and a second copy can be pulled
            self.pull(u0 + 1, hi, a, b)
            if (a, b) != v01:
                p = u0
                for _ in range(f_count):
                    self.pair_over_single_left(p)
                    p -= 1
                dpos = path_cells
                i, j = vertices.index(a), vertices.index(b)
                # lower the far endpoint until the pair spans (v_i, v_{i+1})
                for c in range(j - 1, i, -1):
                    while dpos > c + 1:
                        self.swap_cells(lo + 2 * (dpos - 1))
                        dpos -= 1
                    self.shift_cells(lo + 2 * c)
                    assert self.factors[lo + 2 * dpos] == (vertices[i], vertices[c])
                # cascade both endpoints down to (v_0, v_1)
                while i > 0:
                    while dpos > i:
                        self.swap_cells(lo + 2 * (dpos - 1))
                        dpos -= 1
                    self.shift_cells(lo + 2 * (i - 1))
                    assert self.factors[lo + 2 * dpos] == (
                        vertices[i - 1],
                        vertices[i + 1],
                    )
                    self.swap_cells(lo + 2 * dpos)
                    dpos += 1
                    self.shift_cells(lo + 2 * i)
                    assert self.factors[lo + 2 * dpos] == (
                        vertices[i - 1],
                        vertices[i],
                    )
                    i -= 1
                while dpos < path_cells:
                    self.swap_cells(lo + 2 * dpos)
                    dpos += 1
            assert self.factors[proc_base] == v01
            assert self.factors[proc_base + 1] == v01
            f_count += 2


def pull_edge_to_front(
    factorization: Factorization, v1: int, v2: int
) -> CanonicalResult:
    """Rewrite so the first factor is (v1, v2), with the move log.

    The factors must all be transpositions forming a single connected
    component that contains both endpoints.

    >>> f = Factorization(3, [(1, 2), (2, 3)])
    >>> r = pull_edge_to_front(f, 1, 3)
    >>> r.canonical.factors[0]
    (1, 3)
    """
    if v1 == v2:
        raise PreconditionError(f"endpoints must differ, got {v1} twice")
    for v in (v1, v2):
        if not 1 <= v <= factorization.degree:
            raise PreconditionError(
                f"vertex {v} out of range for degree {factorization.degree}"
            )
    if any(f is None for f in factorization.factors):
        raise PreconditionError("identity factors are not allowed here")
    sig = signature(factorization)
    if len(sig.components) != 1:
        raise PreconditionError(
            f"factors must form a single connected component, found "
            f"{len(sig.components)}"
        )
    vertices = sig.components[0][0]
    for v in (v1, v2):
        if v not in vertices:
            raise PreconditionError(f"vertex {v} is not in the component")
    planner = _Planner(factorization)
    planner.pull(0, len(planner.factors), v1, v2)
    return planner.result()


def group_components(factorization: Factorization) -> CanonicalResult:
    """Sort factors into identity-first, component-ordered blocks.

    Identity factors move to the far left; transpositions gather into
    contiguous blocks, one per component, ordered by smallest vertex, with
    the original relative order kept inside each block.  Every move is a
    pure swap of commuting factors.
    """
    if not factorization.is_identity_factorization():
        raise PreconditionError(
            "grouping requires an identity product"
        )
    planner = _Planner(factorization)
    planner.group()
    return planner.result()


def canonical_form(factorization: Factorization) -> CanonicalResult:
    """Rewrite an identity factorization into canonical shape.

    The certificate replays the input to the output exactly.  The result is
    cross-checked against the shape computed directly from the signature; a
    mismatch means a planner bug and raises an internal error rather than
    being corrected silently.

    >>> f = Factorization(3, [(2, 3), (2, 3), (1, 2), (1, 2)])
    >>> canonical_form(f).canonical.factors
    ((1, 2), (1, 2), (2, 3), (2, 3))
    """
    if not factorization.is_identity_factorization():
        raise PreconditionError(
            "canonical form requires an identity product"
        )
    planner = _Planner(factorization)
    for lo, hi in planner.group():
        planner.canonicalize_block(lo, hi)
    result = planner.result()
    expected = canonical_shape(signature(factorization))
    if result.canonical != expected:
        raise InternalError(
            "canonicalizer output does not match the canonical shape; "
            "this is a planner bug"
        )
    if __debug__:
        if apply_certificate(factorization, result.certificate) != result.canonical:
            raise InternalError("certificate does not replay to the output")
    return result
