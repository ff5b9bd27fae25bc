"""Constructors for the named graphs and parametric families of the study.

Each family comes with its designated mark (the edge or vertex whose removal
realizes a particular change in game value) and the values the construction
is engineered to achieve, so the verifier can recompute and confirm them.
Vertex numbering is deterministic and documented per constructor.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph
from .solver import Player, Solver

Edge = tuple[int, int]


@dataclass
class MarkedGraph:
    """A graph plus the designated edge or vertex its construction singles out."""

    graph: Graph
    mark: Edge | int | None = None
    labels: dict[str, int] = field(default_factory=dict)

    @property
    def mark_kind(self) -> str | None:
        if self.mark is None:
            return None
        return "edge" if isinstance(self.mark, tuple) else "vertex"

    def without_mark(self) -> Graph:
        """The graph with the marked edge or vertex removed."""
        if self.mark is None:
            raise ValueError("graph carries no mark")
        if isinstance(self.mark, tuple):
            return self.graph.remove_edge(*self.mark)
        return self.graph.remove_vertex(self.mark)[0]


@dataclass
class ClaimedValues:
    """Expected game values before and after removing the mark (None = unclaimed)."""

    gg: int | None = None
    gg_removed: int | None = None
    ggp: int | None = None
    ggp_removed: int | None = None

    def items(self) -> list[tuple[str, int]]:
        pairs = [
            ("gamma_g", self.gg),
            ("gamma_g_removed", self.gg_removed),
            ("gamma_g_prime", self.ggp),
            ("gamma_g_prime_removed", self.ggp_removed),
        ]
        return [(name, val) for name, val in pairs if val is not None]


def path(n: int) -> Graph:
    """P_n with vertices 0..n-1 in path order."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """C_n with vertices 0..n-1 in cyclic order."""
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def graph_Z() -> MarkedGraph:
    """The 9-vertex, 13-edge workhorse graph with its distinguished vertex z.

    Vertices 0..8; z = 8.  An 8-cycle 0-1-2-3-8-7-6-5-0 plus chords 1-6, 2-7,
    3-4, 4-7, 4-8 (vertex 4 is the inner vertex hanging off the cycle).
    """
    edges = [
        (0, 1), (1, 2), (2, 3), (3, 8), (8, 7), (7, 6), (6, 5), (5, 0),
        (1, 6), (2, 7), (3, 4), (4, 7), (4, 8),
    ]
    return MarkedGraph(Graph(9, edges), labels={"z": 8})


def _star_plus_edge(base: int) -> tuple[list[Edge], dict[str, int]]:
    """K_{1,4} with one extra edge between two leaves; center at ``base``."""
    x = base
    edges = [(x, x + 1), (x, x + 2), (x, x + 3), (x, x + 4), (x + 1, x + 2)]
    return edges, {"x": x}


def _with_tails(n: int, edges: list[Edge], x: int, k: int, tail_len: int) -> int:
    """Attach k paths of ``tail_len`` vertices to x (one endpoint merged into x).

    Each tail adds tail_len - 1 fresh vertices; returns the new order.
    """
    for _ in range(k):
        prev = x
        for _ in range(tail_len - 1):
            edges.append((prev, n))
            prev = n
            n += 1
    return n


def family_U(k: int) -> tuple[MarkedGraph, ClaimedValues]:
    """C_6 tied to the star-plus-edge block, with k six-vertex tails at x.

    Vertices: 0..5 the 6-cycle (u = 0), 6 = x, 7..10 the block leaves with
    extra edge 7-8, then 5 vertices per tail.  Mark: the x-incident triangle
    edge 6-7 (removal keeps the graph connected).  Order 11 + 5k.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    edges = [(i, (i + 1) % 6) for i in range(6)]
    block, labels = _star_plus_edge(6)
    edges += block
    edges.append((0, 6))
    n = _with_tails(11, edges, 6, k, 6)
    labels.update({"u": 0})
    mg = MarkedGraph(Graph(n, edges), mark=(6, 7), labels=labels)
    return mg, ClaimedValues(gg=2 * k + 3, gg_removed=2 * k + 5,
                             ggp=2 * k + 4, ggp_removed=2 * k + 6)


def family_V(k: int) -> tuple[MarkedGraph, ClaimedValues]:
    """Like U_k with the 6-cycle replaced by Z (joined z-x).  Order 14 + 5k.

    Vertices: 0..8 = Z (z = 8), 9 = x, 10..13 block leaves with edge 10-11,
    then tails.  Mark: edge 9-10.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    z = graph_Z()
    edges = z.graph.edges()
    block, labels = _star_plus_edge(9)
    edges += block
    edges.append((8, 9))
    n = _with_tails(14, edges, 9, k, 6)
    labels.update({"z": 8})
    mg = MarkedGraph(Graph(n, edges), mark=(9, 10), labels=labels)
    return mg, ClaimedValues(gg=2 * k + 4, gg_removed=2 * k + 6,
                             ggp=2 * k + 5, ggp_removed=2 * k + 7)


def family_Y(k: int) -> tuple[MarkedGraph, ClaimedValues]:
    """C_5 with an ear over t's neighbors and pendant leaves, k 3-vertex tails.

    Vertices: 0..4 the 5-cycle with t = 0, x = 1, x' = 4; y = 5 adjacent to
    x and x'; leaves 6, 7 on x and 8 on t; two vertices per tail at x.
    Mark: edge x'-y = (4, 5).  Order 9 + 2k.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(1, 5), (4, 5), (1, 6), (1, 7), (0, 8)]
    n = _with_tails(9, edges, 1, k, 3)
    labels = {"t": 0, "x": 1, "x'": 4, "y": 5}
    mg = MarkedGraph(Graph(n, edges), mark=(4, 5), labels=labels)
    return mg, ClaimedValues(gg=k + 4, gg_removed=k + 3,
                             ggp=k + 5, ggp_removed=k + 4)


def _duplicate_vertex(edges: list[Edge], v: int, dup: int) -> None:
    """Give ``dup`` the same closed neighborhood as v (forces the v-dup edge)."""
    for a, b in list(edges):
        if a == v:
            edges.append((dup, b))
        elif b == v:
            edges.append((a, dup))
    edges.append((v, dup))


def family_X(k: int) -> tuple[MarkedGraph, ClaimedValues]:
    """Z with z duplicated, tied to a 6-star through both twins.  Order 16 + 5k.

    Vertices: 0..8 = Z (z = 8), 9 = z' (twin of z), 10 = x, 11 = x' plus
    leaves 12..15, edges z-x and z'-x', then 5-vertex tails at x.
    Mark: edge z'-x' = (9, 11).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    edges = graph_Z().graph.edges()
    _duplicate_vertex(edges, 8, 9)
    x = 10
    edges += [(x, 11), (x, 12), (x, 13), (x, 14), (x, 15)]
    edges += [(8, x), (9, 11)]
    n = _with_tails(16, edges, x, k, 6)
    labels = {"z": 8, "z'": 9, "x": x, "x'": 11}
    mg = MarkedGraph(Graph(n, edges), mark=(9, 11), labels=labels)
    return mg, ClaimedValues(gg=2 * k + 6, gg_removed=2 * k + 4,
                             ggp=2 * k + 7, ggp_removed=2 * k + 5)


def family_Q(k: int) -> tuple[MarkedGraph, ClaimedValues]:
    """C_6 with one vertex duplicated, tied to a 6-star.  Order 13 + 5k.

    Vertices: 0..5 the 6-cycle with z = 0, 6 = z' (twin of z), 7 = x,
    8 = x' plus leaves 9..12, edges z-x and z'-x', then tails at x.
    Mark: edge z'-x' = (6, 8).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    edges = [(i, (i + 1) % 6) for i in range(6)]
    _duplicate_vertex(edges, 0, 6)
    x = 7
    edges += [(x, 8), (x, 9), (x, 10), (x, 11), (x, 12)]
    edges += [(0, x), (6, 8)]
    n = _with_tails(13, edges, x, k, 6)
    labels = {"z": 0, "z'": 6, "x": x, "x'": 8}
    mg = MarkedGraph(Graph(n, edges), mark=(6, 8), labels=labels)
    return mg, ClaimedValues(gg=2 * k + 5, gg_removed=2 * k + 3,
                             ggp=2 * k + 6, ggp_removed=2 * k + 4)


def _subdivided_claw(base: int) -> tuple[list[Edge], dict[str, int]]:
    """K_{1,3} centered at ``base`` with one edge subdivided.

    Leaves base+1, base+2; subdivision path base-(base+3)-(base+4).
    The far endpoint base+4 is the designated vertex v (outside N[center]).
    """
    x = base
    edges = [(x, x + 1), (x, x + 2), (x, x + 3), (x + 3, x + 4)]
    return edges, {"x": x, "v": x + 4}


def family_Zk(k: int) -> tuple[MarkedGraph, ClaimedValues]:
    """Z tied to a subdivided claw; removing the claw's far tip drops the value.

    Vertices: 0..8 = Z (z = 8), 9 = x with leaves 10, 11 and subdivision
    9-12-13 (v = 13), edge x-z, then 5-vertex tails at x.  Order 14 + 5k.
    Mark: vertex v = 13.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    edges = graph_Z().graph.edges()
    claw, labels = _subdivided_claw(9)
    edges += claw
    edges.append((8, 9))
    n = _with_tails(14, edges, 9, k, 6)
    labels.update({"z": 8})
    mg = MarkedGraph(Graph(n, edges), mark=13, labels=labels)
    return mg, ClaimedValues(gg=2 * k + 6, gg_removed=2 * k + 4,
                             ggp=2 * k + 7, ggp_removed=2 * k + 5)


def family_W(k: int) -> tuple[MarkedGraph, ClaimedValues]:
    """Like Z_k with C_6 in place of Z.  Order 11 + 5k.  Mark: vertex 10.

    Vertices: 0..5 the 6-cycle (z = 0), 6 = x with leaves 7, 8 and
    subdivision 6-9-10 (v = 10), edge x-z, then tails at x.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    edges = [(i, (i + 1) % 6) for i in range(6)]
    claw, labels = _subdivided_claw(6)
    edges += claw
    edges.append((0, 6))
    n = _with_tails(11, edges, 6, k, 6)
    labels.update({"z": 0})
    mg = MarkedGraph(Graph(n, edges), mark=10, labels=labels)
    return mg, ClaimedValues(gg=2 * k + 5, gg_removed=2 * k + 3,
                             ggp=2 * k + 6, ggp_removed=2 * k + 4)


PARAMETRIC = {
    "U": family_U,
    "V": family_V,
    "Y": family_Y,
    "X": family_X,
    "Q": family_Q,
    "Zk": family_Zk,
    "W": family_W,
}


def _certify_start_vertex(g: Graph, v: int) -> int:
    """Return gamma_g(g), raising if v is not an optimal Dominator start."""
    s = Solver(g)
    total = s.value()
    if 1 + s.value(g.closed[v], Player.STALLER) != total:
        raise ValueError(f"vertex {v} is not an optimal Dominator start")
    return total


def tree_triangle_graph(tree: Graph, v: int) -> tuple[MarkedGraph, ClaimedValues]:
    """Tree with two pendant leaves and a triangle glued at an optimal start v.

    New vertices: leaves n, n+1 and triangle corners n+2, n+3 (both adjacent
    to v and to each other).  Mark: triangle edge (v, n+2); its removal lifts
    the Dominator-start value by one.
    """
    total = _certify_start_vertex(tree, v)
    n = tree.n
    edges = tree.edges()
    edges += [(v, n), (v, n + 1), (v, n + 2), (v, n + 3), (n + 2, n + 3)]
    mg = MarkedGraph(Graph(n + 4, edges), mark=(v, n + 2), labels={"v": v, "y": n + 2})
    return mg, ClaimedValues(gg=total, gg_removed=total + 1)


def leaf_attachment_graph(base: Graph, x: int) -> tuple[MarkedGraph, ClaimedValues]:
    """A pendant leaf at an optimal Dominator start; removing it changes nothing."""
    total = _certify_start_vertex(base, x)
    leaf = base.n
    edges = base.edges() + [(x, leaf)]
    mg = MarkedGraph(Graph(base.n + 1, edges), mark=leaf, labels={"x": x, "v": leaf})
    return mg, ClaimedValues(gg=total, gg_removed=total)


def clique_with_pendants(ell: int) -> tuple[MarkedGraph, ClaimedValues]:
    """K_{ell+2} with a pendant leaf on ell of its vertices; order 2*ell + 2.

    Mark: one of the two leafless clique vertices (vertex ell); deleting it
    leaves the Staller-start value at ell + 1.
    """
    if ell < 1:
        raise ValueError("ell must be >= 1")
    q = ell + 2
    edges = [(i, j) for i in range(q) for j in range(i + 1, q)]
    edges += [(i, q + i) for i in range(ell)]
    mg = MarkedGraph(Graph(q + ell, edges), mark=ell, labels={"v": ell})
    return mg, ClaimedValues(ggp=ell + 1, ggp_removed=ell + 1)


def clique_with_leaves(k: int) -> tuple[MarkedGraph, ClaimedValues]:
    """K_k with a pendant leaf on every clique vertex; mark: clique edge (0, 1)."""
    if k < 4:
        raise ValueError("k must be >= 4")
    edges = [(i, j) for i in range(k) for j in range(i + 1, k)]
    edges += [(i, k + i) for i in range(k)]
    mg = MarkedGraph(Graph(2 * k, edges), mark=(0, 1), labels={})
    return mg, ClaimedValues(ggp=k, ggp_removed=k)


def exceptional_constructions() -> list[tuple[str, MarkedGraph, ClaimedValues]]:
    """The one-off graphs realizing the small edge/vertex removal deltas."""
    entries: list[tuple[str, MarkedGraph, ClaimedValues]] = []

    entries.append(("Z", graph_Z(), ClaimedValues(gg=4, ggp=3)))

    # Two triangles joined by a two-edge matching: edge removal 3 -> 2.
    g = Graph(6, [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4)])
    entries.append(("two-cliques", MarkedGraph(g, mark=(0, 3)),
                    ClaimedValues(gg=3, gg_removed=2)))

    # Tree plus leaves-and-triangle at an optimal start: edge removal lifts by 1.
    p7 = path(7)
    v = Solver(p7).best_move()[0]
    mg, claims = tree_triangle_graph(p7, v)
    entries.append(("tree-triangle-p7", mg, claims))

    # Odd cycles: removing any edge lifts the Staller-start value by 1.
    for ell in (2, 3):
        entries.append((
            f"odd-cycle-{2 * ell + 1}",
            MarkedGraph(cycle(2 * ell + 1), mark=(0, 1)),
            ClaimedValues(ggp=ell, ggp_removed=ell + 1),
        ))

    # Staller-start delta-0 trio.
    entries.append(("c4", MarkedGraph(cycle(4), mark=(0, 1)),
                    ClaimedValues(ggp=2, ggp_removed=2)))
    g = Graph(6, [(0, 1), (1, 2), (2, 3), (1, 4), (1, 5), (4, 5)])
    entries.append(("p4-triangle", MarkedGraph(g, mark=(4, 5), labels={"u": 1}),
                    ClaimedValues(ggp=3, ggp_removed=3)))
    for k in (4, 5):
        mg, claims = clique_with_leaves(k)
        entries.append((f"clique-leaves-{k}", mg, claims))

    # K_{1,4} joined to a triangle plus the extra leaf-to-triangle edge.
    # The source states gamma_g' = 4 and 3 for what is read here as H and H-e;
    # the verifier recomputes and reports both either way.
    g = Graph(8, [(0, 1), (0, 2), (0, 3), (0, 4),
                  (5, 6), (6, 7), (5, 7), (0, 5), (1, 6)])
    entries.append(("star-triangle", MarkedGraph(g, mark=(1, 6)),
                    ClaimedValues(ggp=4, ggp_removed=3)))

    # Vertex-removal delta-0 families.
    p7 = path(7)
    x = Solver(p7).best_move()[0]
    mg, claims = leaf_attachment_graph(p7, x)
    entries.append(("leaf-attach-p7", mg, claims))
    for ell in (1, 2, 3, 4):
        mg, claims = clique_with_pendants(ell)
        entries.append((f"clique-pendants-{ell}", mg, claims))

    # Vertex-removal delta +2 at small Staller-start values.
    g = Graph(7, [(i, (i + 1) % 6) for i in range(6)] + [(0, 6)])
    entries.append(("c6-leaf", MarkedGraph(g, mark=6, labels={"v": 6}),
                    ClaimedValues(ggp=4, ggp_removed=2)))
    z = graph_Z().graph
    g = Graph(10, z.edges() + [(8, 9)])
    entries.append(("z-leaf", MarkedGraph(g, mark=9, labels={"z": 8, "v": 9}),
                    ClaimedValues(ggp=5, ggp_removed=3)))

    return entries


def catalog() -> dict[str, MarkedGraph]:
    """Every named graph addressable from the command line."""
    out: dict[str, MarkedGraph] = {}
    for name, builder in PARAMETRIC.items():
        out[name] = builder(0)[0]
    for name, mg, _ in exceptional_constructions():
        out[name] = mg
    return out
