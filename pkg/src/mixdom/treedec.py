"""Tree decompositions: validation, a min-fill heuristic, and the
normalization into very nice form (singleton leaves, singleton root,
introduce/forget/join bags) consumed by the dynamic programs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph


@dataclass(frozen=True)
class TreeDecomposition:
    """Bags of vertex ids arranged in a tree over bag indices."""

    bags: tuple[frozenset[int], ...]
    edges: tuple[tuple[int, int], ...]  # pairs of bag indices
    root: int = 0

    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def neighbors_of(self, i: int) -> list[int]:
        out = [b for a, b in self.edges if a == i]
        out += [a for a, b in self.edges if b == i]
        return out


@dataclass(frozen=True)
class NiceBag:
    """One bag of a very nice decomposition.

    vertex is the introduced or forgotten vertex for those kinds, else None.
    """

    bag: frozenset[int]
    kind: str  # "leaf" | "introduce" | "forget" | "join"
    vertex: int | None
    children: tuple[int, ...]


class NiceTreeDecomposition:
    """A very nice tree decomposition: binary tree of typed bags.

    Leaf bags are singletons, introduce/forget bags differ from their
    child by exactly one vertex, join bags have two children with bags
    identical to their own, and the root bag is a singleton.
    """

    def __init__(self, nodes: list[NiceBag], root: int):
        self.nodes = tuple(nodes)
        self.root = root
        parent: list[int | None] = [None] * len(nodes)
        for i, node in enumerate(nodes):
            for c in node.children:
                parent[c] = i
        self.parent = tuple(parent)

    def __len__(self) -> int:
        return len(self.nodes)

    def width(self) -> int:
        return max(len(n.bag) for n in self.nodes) - 1

    def as_td(self) -> TreeDecomposition:
        edges = tuple(
            (c, i) for i, node in enumerate(self.nodes) for c in node.children
        )
        return TreeDecomposition(tuple(n.bag for n in self.nodes), edges, self.root)


def validate_td(g: Graph, td: TreeDecomposition) -> list[str]:
    """All violations of the decomposition properties; empty list means ok.

    Checks that the bag graph is a tree, every vertex and edge of g is
    covered by a bag, and each vertex's bags form a connected subtree.
    """
    violations: list[str] = []
    n_bags = len(td.bags)
    for i, bag in enumerate(td.bags):
        for v in bag:
            if not (0 <= v < g.vertex_count):
                raise ValueError(f"bag {i} contains out-of-range vertex {v}")
    for a, b in td.edges:
        if not (0 <= a < n_bags and 0 <= b < n_bags):
            raise ValueError(f"tree edge ({a}, {b}) references a missing bag")
    if not (0 <= td.root < n_bags):
        raise ValueError(f"root {td.root} references a missing bag")

    # tree structure: connected with exactly n_bags - 1 edges
    if len(td.edges) != n_bags - 1:
        violations.append(f"tree has {len(td.edges)} edges for {n_bags} bags")
    adjacency: list[list[int]] = [[] for _ in range(n_bags)]
    for a, b in td.edges:
        adjacency[a].append(b)
        adjacency[b].append(a)
    seen = {td.root}
    stack = [td.root]
    while stack:
        i = stack.pop()
        for j in adjacency[i]:
            if j not in seen:
                seen.add(j)
                stack.append(j)
    if len(seen) != n_bags:
        violations.append("bag tree is not connected")

    covered = set().union(*td.bags) if td.bags else set()
    for v in range(g.vertex_count):
        if v not in covered:
            violations.append(f"vertex {v} appears in no bag")
    for u, v in g.edges:
        if not any(u in bag and v in bag for bag in td.bags):
            violations.append(f"edge ({u}, {v}) is contained in no bag")

    # occurrence connectivity: the bags holding v must form a subtree
    for v in sorted(covered):
        holding = {i for i, bag in enumerate(td.bags) if v in bag}
        start = min(holding)
        reach = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in adjacency[i]:
                if j in holding and j not in reach:
                    reach.add(j)
                    stack.append(j)
        if reach != holding:
            violations.append(f"bags containing vertex {v} are not connected")
    return violations


def min_fill_decompose(g: Graph) -> TreeDecomposition:
    """Heuristic decomposition from a min-fill elimination ordering.

    Repeatedly eliminates the vertex whose neighborhood needs the fewest
    fill edges to become a clique (ties: lower degree, then lower id),
    producing one bag per vertex.  Width is heuristic, not optimal.
    """
    if g.vertex_count == 0:
        return TreeDecomposition((frozenset(),), (), 0)
    adjacency: dict[int, set[int]] = {
        v: set(g.adjacency(v)) for v in range(g.vertex_count)
    }
    bags: list[frozenset[int]] = []
    eliminated_at: dict[int, int] = {}
    bag_neighbors: list[set[int]] = []
    while adjacency:
        best = None
        for v in adjacency:
            nbrs = adjacency[v]
            fill = sum(
                1
                for x in nbrs
                for y in nbrs
                if x < y and y not in adjacency[x]
            )
            key = (fill, len(nbrs), v)
            if best is None or key < best:
                best = key
        v = best[2]
        nbrs = adjacency.pop(v)
        eliminated_at[v] = len(bags)
        bags.append(frozenset(nbrs | {v}))
        bag_neighbors.append(set(nbrs))
        for x in nbrs:
            adjacency[x].discard(v)
            for y in nbrs:
                if y != x:
                    adjacency[x].add(y)

    edges: list[tuple[int, int]] = []
    for i, nbrs in enumerate(bag_neighbors):
        if nbrs:
            # attach below the first neighbor eliminated after this bag
            parent = min(eliminated_at[x] for x in nbrs)
            edges.append((i, parent))
        elif i + 1 < len(bags):
            # isolated remainder (last vertex of a component); chain on
            edges.append((i, i + 1))
    return TreeDecomposition(tuple(bags), tuple(edges), len(bags) - 1)


def make_very_nice(
    td: TreeDecomposition, root: int | None = None
) -> NiceTreeDecomposition:
    """Normalize a valid decomposition into very nice form.

    The tree is rooted at the given bag (default: the decomposition's
    root), every leaf becomes a singleton bag followed by an ascending
    introduce chain, adjacent bags are bridged by forget-then-introduce
    chains, multi-child bags are folded into binary joins, and a final
    forget chain leaves a singleton root (the lowest remaining vertex
    id).  Width is preserved exactly.
    """
    if not td.bags or all(not b for b in td.bags):
        raise ValueError("cannot normalize a decomposition with no vertices")
    top = td.root if root is None else root
    if not (0 <= top < len(td.bags)):
        raise ValueError(f"root {top} references a missing bag")

    adjacency: list[list[int]] = [[] for _ in td.bags]
    for a, b in td.edges:
        adjacency[a].append(b)
        adjacency[b].append(a)

    nodes: list[NiceBag] = []

    def emit(bag: frozenset[int], kind: str, vertex: int | None, children: tuple[int, ...]) -> int:
        nodes.append(NiceBag(bag, kind, vertex, children))
        return len(nodes) - 1

    def fresh_chain(target: frozenset[int]) -> int:
        """Leaf singleton plus introduces, ending with content = target."""
        order = sorted(target)
        idx = emit(frozenset({order[0]}), "leaf", None, ())
        have = {order[0]}
        for v in order[1:]:
            have.add(v)
            idx = emit(frozenset(have), "introduce", v, (idx,))
        return idx

    def bridge(idx: int, target: frozenset[int]) -> int:
        """Forget-then-introduce chain from nodes[idx] to content target."""
        have = set(nodes[idx].bag)
        for v in sorted(have - target):
            have.remove(v)
            idx = emit(frozenset(have), "forget", v, (idx,))
        for v in sorted(target - have):
            have.add(v)
            idx = emit(frozenset(have), "introduce", v, (idx,))
        return idx

    def build(bag_idx: int, parent_idx: int | None) -> int | None:
        """Emit the subtree of bag_idx; returns the index of its top node
        (content equal to the input bag), or None for vertex-less subtrees."""
        bag = td.bags[bag_idx]
        child_tops = []
        for nb in sorted(adjacency[bag_idx]):
            if nb != parent_idx:
                sub = build(nb, bag_idx)
                if sub is not None:
                    child_tops.append(sub)
        if not child_tops:
            return fresh_chain(bag) if bag else None
        aligned = [bridge(c, bag) for c in child_tops]
        idx = aligned[0]
        for other in aligned[1:]:
            idx = emit(bag, "join", None, (idx, other))
        return idx

    top_idx = build(top, None)
    assert top_idx is not None
    remaining = set(nodes[top_idx].bag)
    keep = min(remaining) if remaining else None
    for v in sorted(remaining - ({keep} if keep is not None else set()), reverse=True):
        remaining.remove(v)
        top_idx = emit(frozenset(remaining), "forget", v, (top_idx,))
    return NiceTreeDecomposition(nodes, top_idx)


def postorder_traversal(ntd: NiceTreeDecomposition) -> list[int]:
    """Bag indices with every bag after all of its descendants; root last."""
    order: list[int] = []
    stack: list[tuple[int, bool]] = [(ntd.root, False)]
    while stack:
        idx, expanded = stack.pop()
        if expanded:
            order.append(idx)
        else:
            stack.append((idx, True))
            for c in reversed(ntd.nodes[idx].children):
                stack.append((c, False))
    return order


# -- .td serialization (1-based on disk, 0-based in memory) ----------------


def parse_td(text: str) -> TreeDecomposition:
    """Parse decomposition text: "s td <#bags> <width+1> <n>" header,
    "b <bag-id> <v...>" bag lines, then tree edge lines "i j"."""
    header: tuple[int, int, int] | None = None
    bags: dict[int, frozenset[int]] = {}
    edges: list[tuple[int, int]] = []
    for line_num, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "s":
            if header is not None:
                raise ValueError(f"line {line_num}: duplicate header")
            if len(parts) != 5 or parts[1] != "td":
                raise ValueError(f"line {line_num}: malformed header {line!r}")
            header = (int(parts[2]), int(parts[3]), int(parts[4]))
        elif parts[0] == "b":
            if header is None:
                raise ValueError(f"line {line_num}: bag before header")
            bag_id = int(parts[1])
            if not (1 <= bag_id <= header[0]):
                raise ValueError(f"line {line_num}: bag id {bag_id} out of range")
            vertices = [int(p) for p in parts[2:]]
            for v in vertices:
                if not (1 <= v <= header[2]):
                    raise ValueError(f"line {line_num}: vertex {v} out of range 1..{header[2]}")
            if bag_id - 1 in bags:
                raise ValueError(f"line {line_num}: duplicate bag {bag_id}")
            bags[bag_id - 1] = frozenset(v - 1 for v in vertices)
        else:
            if header is None:
                raise ValueError(f"line {line_num}: edge before header")
            if len(parts) != 2:
                raise ValueError(f"line {line_num}: malformed edge line {line!r}")
            a, b = int(parts[0]), int(parts[1])
            if not (1 <= a <= header[0] and 1 <= b <= header[0]):
                raise ValueError(f"line {line_num}: edge bag id out of range")
            edges.append((a - 1, b - 1))
    if header is None:
        raise ValueError("missing header line")
    if len(bags) != header[0]:
        raise ValueError(f"header declares {header[0]} bags, found {len(bags)}")
    bag_list = tuple(bags[i] for i in range(header[0]))
    width_plus_1 = max((len(b) for b in bag_list), default=0)
    if width_plus_1 != header[1]:
        raise ValueError(
            f"header declares max bag size {header[1]}, found {width_plus_1}"
        )
    return TreeDecomposition(bag_list, tuple(edges), 0)


def write_td(td: TreeDecomposition, vertex_count: int | None = None) -> str:
    n = vertex_count
    if n is None:
        n = max((max(b) + 1 for b in td.bags if b), default=0)
    lines = [f"s td {len(td.bags)} {max((len(b) for b in td.bags), default=0)} {n}"]
    for i, bag in enumerate(td.bags):
        lines.append(" ".join(["b", str(i + 1), *[str(v + 1) for v in sorted(bag)]]))
    lines.extend(f"{a + 1} {b + 1}" for a, b in td.edges)
    return "\n".join(lines) + "\n"


def from_bags(bags: Iterable[Iterable[int]], edges: Iterable[tuple[int, int]], root: int = 0) -> TreeDecomposition:
    """Convenience constructor from plain iterables."""
    return TreeDecomposition(
        tuple(frozenset(b) for b in bags), tuple(edges), root
    )
