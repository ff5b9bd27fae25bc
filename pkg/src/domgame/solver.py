"""Exact optimal-play evaluation of the domination game.

The value of a position is the number of moves still to be played when both
sides play optimally: Dominator minimizes, Staller maximizes, and every move
must newly dominate at least one vertex.  A position is fully described by
the set of already-dominated vertices plus whose turn it is, so the solver
memoizes on exactly that pair.  Alpha-beta style integer bound pruning is on
by default and provably returns the same values as the plain recursion;
``prune=False`` switches to unpruned memoized minimax for cross-checking.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, bits

#: Plain-recursion oracle refuses graphs above this order.
ORACLE_ORDER_LIMIT = 12

#: Branch-and-bound domination number refuses graphs above this order.
DOMINATION_ORDER_LIMIT = 30

_BIG = 1 << 30


class Player(Enum):
    DOMINATOR = 0
    STALLER = 1

    @property
    def other(self) -> "Player":
        return Player.STALLER if self is Player.DOMINATOR else Player.DOMINATOR


@dataclass(frozen=True)
class GameState:
    """A game position: dominated-vertex bitmask plus the player to move."""

    dominated: int = 0
    to_move: Player = Player.DOMINATOR


def legal_moves(g: Graph, dominated: int) -> list[int]:
    """Vertices whose closed neighborhood is not yet fully dominated."""
    if dominated & ~g.full_mask:
        raise ValueError("dominated set contains out-of-range vertices")
    und = g.full_mask & ~dominated
    return [v for v in range(g.n) if g.closed[v] & und]


class Solver:
    """Memoized minimax evaluator bound to one graph.

    The transposition table maps (dominated, to_move) to a [lo, hi] interval
    bracketing the true value; completed unpruned subtrees collapse the
    interval to an exact value, pruned subtrees leave the bounds they proved.
    One instance per graph; reusing it across root positions (pre-dominated
    sets, both starters) amortizes the table.
    """

    __slots__ = ("graph", "prune", "_closed", "_full", "_n", "_table")

    def __init__(self, graph: Graph, prune: bool = True):
        self.graph = graph
        self.prune = prune
        self._closed = graph.closed
        self._full = graph.full_mask
        self._n = graph.n
        self._table: dict[int, tuple[int, int]] = {}

    def value(self, dominated: int = 0, to_move: Player = Player.DOMINATOR) -> int:
        """Moves remaining under optimal play from the given position."""
        if dominated & ~self._full:
            raise ValueError("dominated set contains out-of-range vertices")
        limit = (self._full & ~dominated).bit_count() + 1
        return self._search(dominated, to_move.value, -1, limit)

    def best_move(
        self, dominated: int = 0, to_move: Player = Player.DOMINATOR
    ) -> tuple[int, int]:
        """An optimal move and the value after it; smallest vertex id wins ties."""
        und = self._full & ~dominated
        if not und:
            raise ValueError("position is terminal: every vertex is dominated")
        target = self.value(dominated, to_move)
        other = 1 - to_move.value
        for v in range(self._n):
            cv = self._closed[v]
            if cv & und:
                child = dominated | cv
                rest = self._search(
                    child, other, -1, (self._full & ~child).bit_count() + 1
                )
                if 1 + rest == target:
                    return v, rest
        raise AssertionError("no move achieves the computed game value")

    def _search(self, S: int, p: int, alpha: int, beta: int) -> int:
        full = self._full
        if S == full:
            return 0
        key = S << 1 | p
        table = self._table
        prune = self.prune
        ent = table.get(key)
        if ent is not None:
            lo, hi = ent
            if lo == hi:
                return lo
            if prune:
                if lo >= beta:
                    return lo
                if hi <= alpha:
                    return hi
        und = full & ~S
        children = []
        maxc = 0
        for v, cv in enumerate(self._closed):
            newly = (cv & und).bit_count()
            if newly:
                if newly > maxc:
                    maxc = newly
                children.append((-newly << 6 | v, S | cv))
        if ent is None:
            undc = und.bit_count()
            lo = -(-undc // maxc)
            hi = undc
            if prune:
                if lo >= beta:
                    table[key] = (lo, hi)
                    return lo
                if hi <= alpha:
                    table[key] = (lo, hi)
                    return hi
        children.sort()
        search = self._search
        if not prune:
            if p == 0:
                best = 1 + min(search(c, 1, 0, 0) for _, c in children)
            else:
                best = 1 + max(search(c, 0, 0, 0) for _, c in children)
            table[key] = (best, best)
            return best
        if lo > alpha:
            alpha = lo
        if hi < beta:
            beta = hi
        if p == 0:  # Dominator minimizes
            best = _BIG
            bnd = beta
            for _, child in children:
                val = 1 + search(child, 1, alpha - 1, bnd - 1)
                if val < best:
                    best = val
                    if best <= alpha:
                        break
                    if best < bnd:
                        bnd = best
        else:  # Staller maximizes
            best = -1
            bnd = alpha
            for _, child in children:
                val = 1 + search(child, 0, bnd - 1, beta - 1)
                if val > best:
                    best = val
                    if best >= beta:
                        break
                    if best > bnd:
                        bnd = best
        if best <= alpha:
            entry = (lo, best if best < hi else hi)
        elif best >= beta:
            entry = (best if best > lo else lo, hi)
        else:
            entry = (best, best)
        assert entry[0] <= entry[1], "bound bookkeeping broke"
        table[key] = entry
        return best


def game_value(
    g: Graph,
    dominated: int = 0,
    to_move: Player = Player.DOMINATOR,
    prune: bool = True,
) -> int:
    """One-shot game value; build a Solver directly to reuse its table."""
    return Solver(g, prune=prune).value(dominated, to_move)


def gamma_g(g: Graph) -> int:
    """Game domination number: optimal total moves with Dominator starting."""
    return Solver(g).value(0, Player.DOMINATOR)


def gamma_g_prime(g: Graph) -> int:
    """Staller-start game domination number."""
    return Solver(g).value(0, Player.STALLER)


def gamma_g_given(g: Graph, pre: int, starter: Player) -> int:
    """Game value with the vertices of ``pre`` treated as already dominated."""
    return Solver(g).value(pre, starter)


def best_move(
    g: Graph, dominated: int = 0, to_move: Player = Player.DOMINATOR
) -> tuple[int, int]:
    return Solver(g).best_move(dominated, to_move)


def oracle_game_value(
    g: Graph, dominated: int = 0, to_move: Player = Player.DOMINATOR
) -> int:
    """Plain depth-first recursion with no memo and no pruning.

    Deliberately independent of Solver so the two can cross-check each other.
    """
    if g.n > ORACLE_ORDER_LIMIT:
        raise ValueError(f"oracle limited to order <= {ORACLE_ORDER_LIMIT}")
    if dominated & ~g.full_mask:
        raise ValueError("dominated set contains out-of-range vertices")
    closed = g.closed
    full = g.full_mask

    def walk(s: int, p: int) -> int:
        if s == full:
            return 0
        vals = [walk(s | cv, 1 - p) for cv in closed if cv & ~s]
        return 1 + (min(vals) if p == 0 else max(vals))

    return walk(dominated, to_move.value)


def domination_number(g: Graph) -> int:
    """Minimum size of a set whose closed neighborhoods cover every vertex."""
    if g.n > DOMINATION_ORDER_LIMIT:
        raise ValueError(f"domination number limited to order <= {DOMINATION_ORDER_LIMIT}")
    n = g.n
    if n == 0:
        return 0
    closed = g.closed
    full = g.full_mask

    # Greedy cover gives the starting upper bound.
    covered = 0
    best = 0
    while covered != full:
        gain, pick = max(
            ((closed[v] & ~covered).bit_count(), -v) for v in range(n)
        )
        covered |= closed[-pick]
        best += 1

    maxc = max(cv.bit_count() for cv in closed)
    seen: dict[int, int] = {}

    def branch(s: int, size: int) -> None:
        nonlocal best
        if s == full:
            if size < best:
                best = size
            return
        und = full & ~s
        if size + -(-und.bit_count() // maxc) >= best:
            return
        if seen.get(s, _BIG) <= size:
            return
        seen[s] = size
        # Branch on the hardest-to-cover undominated vertex.
        u = min(bits(und), key=lambda w: closed[w].bit_count())
        options = sorted(bits(closed[u]), key=lambda w: -(closed[w] & und).bit_count())
        for v in options:
            branch(s | closed[v], size + 1)

    branch(0, 0)
    return best
