"""A six-state dynamic program computing the mixed domination number.

Unlike the nine-state program in dp.py, tables here carry no edge slots:
every edge is settled the moment it is introduced.  A selected edge marks
its endpoints, an edge left undominated is assigned to one endpoint (its
owner) by branching, and only a later selected edge at the owner can
rescue it.  Merged with the observation that the two selected-vertex
states behave identically onward, six vertex states remain:

    1  in the solution
    3  not in the solution, with an incident solution edge
    4  dominated; every incident processed edge dominated or owned elsewhere
    5  undominated; no owned undominated edge
    6  dominated, owning an undominated edge
    7  undominated, owning an undominated edge

Rows map a state tuple to a cost ledger: how many branch outcomes realize
the tuple at each cost.  The counts ride along so that joins can run
through a per-slot downset transform, where two tables multiply pointwise
and the true pair counts come back by inversion; exact integers keep the
inversion lossless.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph
from .treedec import NiceTreeDecomposition, postorder_traversal

CostLedger = dict[int, int]
Rows6 = dict[tuple, CostLedger]

IN_SOLUTION = 1
EDGE_MARK = 3
SETTLED = (1, 3, 4)  # states that survive a forget
PEND_ANY = "0?"  # transform label covering states 5 and 7 together

# Downset basis of the state lattice, in the slot order join6 uses.  The
# lattice: 5 below 4 and 7, both below 6, 3 on top; 1 sits apart since
# membership must agree.  The supremum of two states is their merge.
BASIS = ((1,), (5,), (4, 5), (5, 7), (4, 5, 6, 7), (3, 4, 5, 6, 7))
STATE_TO_BASIS = {
    1: (0,),
    3: (5,),
    4: (2, 4, 5),
    5: (1, 2, 3, 4, 5),
    6: (4, 5),
    7: (3, 4, 5),
}
# inversion: which states each basis coordinate feeds, with signs
BASIS_TO_STATE = {
    0: ((1, 1),),
    1: ((5, 1), (4, -1), (7, -1), (6, 1)),
    2: ((4, 1), (6, -1)),
    3: ((7, 1), (6, -1)),
    4: ((6, 1), (3, -1)),
    5: ((3, 1),),
}


@dataclass(frozen=True)
class SixTable:
    vertices: tuple[int, ...]  # ascending bag vertices, one slot each
    rows: Rows6


@dataclass(frozen=True)
class Run6Result:
    gamma: int
    tables: tuple[SixTable, ...] | None = None


def _add(ledger: CostLedger, cost: int, count: int) -> None:
    ledger[cost] = ledger.get(cost, 0) + count


def _merge(
    dst: Rows6,
    key: tuple,
    ledger: CostLedger,
    shift: int = 0,
    cost_cap: int | None = None,
) -> None:
    tgt = dst.setdefault(key, {})
    for cost, count in ledger.items():
        if cost_cap is not None and cost + shift > cost_cap:
            continue
        _add(tgt, cost + shift, count)
    if not tgt:
        del dst[key]


def leaf6(g: Graph, bag_vertices) -> SixTable:
    bag = tuple(bag_vertices)
    if len(bag) != 1:
        raise ValueError(f"leaf bag must be a single vertex, got {sorted(bag)}")
    return SixTable(bag, {(1,): {1: 1}, (5,): {0: 1}})


def introduce6(
    g: Graph, table: SixTable, v_new: int, cost_cap: int | None = None
) -> SixTable:
    """Extend every row by the new vertex, branching over its membership,
    over each new edge's membership, and over who owns each new edge that
    comes out undominated."""
    if v_new in table.vertices:
        raise ValueError(f"vertex {v_new} is already in the bag")
    vertices = tuple(sorted(table.vertices + (v_new,)))
    pos_new = vertices.index(v_new)
    old_pos = [i for i in range(len(vertices)) if i != pos_new]
    adjacency = set(g.adjacency(v_new))
    nbrs = [i for i in old_pos if vertices[i] in adjacency]
    rows: Rows6 = {}

    for ckey, ledger in table.rows.items():
        budget = None if cost_cap is None else cost_cap - min(ledger)
        base = [0] * len(vertices)
        for cpos, i in enumerate(old_pos):
            base[i] = ckey[cpos]
        for dv in (0, 1):
            for bits in range(1 << len(nbrs)):
                selected = [u for t, u in enumerate(nbrs) if bits >> t & 1]
                if budget is not None and dv + len(selected) > budget:
                    continue
                states = base.copy()
                for u in selected:
                    if states[u] != IN_SOLUTION:
                        states[u] = EDGE_MARK
                if dv:
                    for u in nbrs:
                        if states[u] == 5:
                            states[u] = 4
                        elif states[u] == 7:
                            states[u] = 6
                shift = dv + len(selected)
                if dv or selected:
                    # every unselected new edge is dominated from v's side
                    states[pos_new] = 1 if dv else EDGE_MARK
                    _merge(rows, tuple(states), ledger, shift, cost_cap)
                    continue
                # nothing selected: new edges at already-marked neighbors
                # are dominated, the rest need an owner
                open_edges = [u for u in nbrs if states[u] not in (1, 3)]
                dominated = any(base[u] == IN_SOLUTION for u in nbrs)
                for owners in range(1 << len(open_edges)):
                    branch = states.copy()
                    pend_new = False
                    for t, u in enumerate(open_edges):
                        if owners >> t & 1:
                            pend_new = True
                        elif branch[u] == 4:
                            branch[u] = 6
                        elif branch[u] == 5:
                            branch[u] = 7
                    if dominated:
                        branch[pos_new] = 6 if pend_new else 4
                    else:
                        branch[pos_new] = 7 if pend_new else 5
                    _merge(rows, tuple(branch), ledger, 0, cost_cap)
    return SixTable(vertices, rows)


def forget6(
    table: SixTable, forgotten: int, cost_cap: int | None = None
) -> SixTable:
    """Drop the vertex; rows where it is undominated or still owns an
    undominated edge cannot be completed and disappear."""
    if forgotten not in table.vertices:
        raise ValueError(f"vertex {forgotten} is not in the bag")
    pos = table.vertices.index(forgotten)
    vertices = tuple(v for v in table.vertices if v != forgotten)
    rows: Rows6 = {}
    for key, ledger in table.rows.items():
        if key[pos] in SETTLED:
            _merge(rows, key[:pos] + key[pos + 1:], ledger, 0, cost_cap)
    return SixTable(vertices, rows)


def _supremum(a: int, b: int) -> int | None:
    if (a == IN_SOLUTION) != (b == IN_SOLUTION):
        return None
    if a == IN_SOLUTION:
        return IN_SOLUTION
    if EDGE_MARK in (a, b):
        return EDGE_MARK
    dominated = a in (4, 6) or b in (4, 6)
    pending = a in (6, 7) or b in (6, 7)
    if dominated:
        return 6 if pending else 4
    return 7 if pending else 5


def direct_join6(
    a: SixTable, b: SixTable, cost_cap: int | None = None
) -> SixTable:
    """Reference join: pair every two rows agreeing on membership and
    merge slots to their supremum, counting pairs."""
    if a.vertices != b.vertices:
        raise ValueError("join children must share the same bag")
    rows: Rows6 = {}
    for akey, aled in a.rows.items():
        for bkey, bled in b.rows.items():
            merged = []
            for sa, sb in zip(akey, bkey):
                s = _supremum(sa, sb)
                if s is None:
                    break
                merged.append(s)
            else:
                key = tuple(merged)
                overlap = sum(1 for s in key if s == IN_SOLUTION)
                tgt = rows.setdefault(key, {})
                for ca, na in aled.items():
                    for cb, nb in bled.items():
                        cost = ca + cb - overlap
                        if cost_cap is not None and cost > cost_cap:
                            continue
                        _add(tgt, cost, na * nb)
                if not tgt:
                    del rows[key]
    return SixTable(a.vertices, rows)


def _transform(rows: Rows6, slots: int, mapping: dict) -> Rows6:
    """Apply a per-slot linear map (zeta or its inverse) slot by slot."""
    cur = rows
    for i in range(slots):
        nxt: Rows6 = {}
        for key, ledger in cur.items():
            for target, sign in mapping[key[i]]:
                tgt = nxt.setdefault(key[:i] + (target,) + key[i + 1:], {})
                for cost, count in ledger.items():
                    _add(tgt, cost, sign * count)
        cur = nxt
    return cur


_ZETA_FULL = {s: tuple((b, 1) for b in basis) for s, basis in STATE_TO_BASIS.items()}


def join6(
    a: SixTable,
    b: SixTable,
    stats: dict | None = None,
    cost_cap: int | None = None,
) -> SixTable:
    """Join through the downset transform: transform both tables, multiply
    ledgers pointwise, invert, and shift costs by the doubly selected
    vertices.  Equivalent to direct_join6 but touches at most 6^k
    transform tuples instead of pairing rows quadratically.

    With a cost cap, product entries that can only feed capped-away costs
    are dropped early.  A transform key fixes which slots both sides
    selected (its coordinate-0 slots, each charged doubly), so the final
    cost of an entry is known up to that constant shift and the kept
    entries invert to the exact uncapped counts at costs within the cap.
    """
    if a.vertices != b.vertices:
        raise ValueError("join children must share the same bag")
    k = len(a.vertices)
    za = _transform(a.rows, k, _ZETA_FULL)
    zb = _transform(b.rows, k, _ZETA_FULL)
    if stats is not None:
        stats["transform_tuples"] = len(za.keys() | zb.keys())
    product: Rows6 = {}
    for key in za.keys() & zb.keys():
        led: CostLedger = {}
        cap_here = None
        if cost_cap is not None:
            cap_here = cost_cap + sum(1 for c in key if c == 0)
        for ca, na in za[key].items():
            for cb, nb in zb[key].items():
                if cap_here is not None and ca + cb > cap_here:
                    continue
                _add(led, ca + cb, na * nb)
        if led:
            product[key] = led
    rows: Rows6 = {}
    for key, ledger in _transform(product, k, BASIS_TO_STATE).items():
        overlap = sum(1 for s in key if s == IN_SOLUTION)
        clean = {
            cost: count
            for cost, count in ledger.items()
            if count and (cost_cap is None or cost - overlap <= cost_cap)
        }
        if any(count < 0 for count in clean.values()):
            raise AssertionError(f"negative pair count at {key}")
        if clean:
            rows[key] = {cost - overlap: count for cost, count in clean.items()}
    return SixTable(a.vertices, rows)


def zeta6(rows: Rows6) -> Rows6:
    """Per-slot downset sums on the undominated states: every slot in
    state 7 is relabeled 0? and absorbs the matching state-5 ledger, so a
    0? slot reads "undominated, owning unknown"."""
    slots = len(next(iter(rows))) if rows else 0
    mapping = {s: ((s, 1),) for s in (1, 3, 4, 6)}
    mapping[5] = ((5, 1), (PEND_ANY, 1))
    mapping[7] = ((PEND_ANY, 1),)
    return _transform(rows, slots, mapping)


def moebius6(rows: Rows6, validate: bool = True) -> Rows6:
    """Inverse of zeta6; with validate, reject inputs whose preimage would
    need a negative count somewhere."""
    slots = len(next(iter(rows))) if rows else 0
    mapping = {s: ((s, 1),) for s in (1, 3, 4, 6)}
    mapping[5] = ((5, 1), (7, -1))
    mapping[PEND_ANY] = ((7, 1),)
    out = _transform(rows, slots, mapping)
    cleaned: Rows6 = {}
    for key, ledger in out.items():
        clean = {cost: count for cost, count in ledger.items() if count}
        if validate and any(count < 0 for count in clean.values()):
            raise ValueError(f"negative count at {key}: not a zeta6 image")
        if clean:
            cleaned[key] = clean
    return cleaned


def run6(
    g: Graph,
    ntd: NiceTreeDecomposition,
    tau: list[int] | None = None,
    collect_tables: bool = False,
    cost_cap: int | None = None,
) -> Run6Result:
    """Run the six-state program and return the mixed domination number.

    cost_cap prunes ledger entries above the cap at every bag; the result
    is unchanged as long as the cap is at least the size of some mixed
    dominating set, e.g. greedy_upper_bound.
    """
    if tau is None:
        tau = postorder_traversal(ntd)
    for node in ntd.nodes:
        for v in node.bag:
            if not 0 <= v < g.vertex_count:
                raise ValueError(f"bag vertex {v} is not in the graph")
    seen_vertices: set[int] = set()
    seen_edges: set[int] = set()
    tables: dict[int, SixTable] = {}
    collected: list[SixTable] = []
    for idx in tau:
        node = ntd.nodes[idx]
        if node.kind == "leaf":
            t = leaf6(g, node.bag)
        elif node.kind == "introduce":
            child = tables[node.children[0]]
            seen_edges.update(
                g.edge_id(node.vertex, u)
                for u in child.vertices
                if g.has_edge(node.vertex, u)
            )
            t = introduce6(g, child, node.vertex, cost_cap)
        elif node.kind == "forget":
            t = forget6(tables[node.children[0]], node.vertex, cost_cap)
        elif node.kind == "join":
            t = join6(
                tables[node.children[0]], tables[node.children[1]],
                cost_cap=cost_cap,
            )
        else:
            raise ValueError(f"unknown bag kind {node.kind}")
        if set(t.vertices) != set(node.bag):
            raise ValueError("bag content does not match the operation")
        for c in node.children:
            if not collect_tables:
                del tables[c]
        tables[idx] = t
        if collect_tables:
            collected.append(t)
        seen_vertices.update(t.vertices)
    if seen_vertices != set(range(g.vertex_count)) or seen_edges != set(
        range(g.edge_count)
    ):
        raise ValueError("decomposition does not cover the graph")

    root = tables[tau[-1]]
    gamma: int | None = None
    for key, ledger in root.rows.items():
        if all(s in SETTLED for s in key):
            for cost, count in ledger.items():
                if count and (gamma is None or cost < gamma):
                    gamma = cost
    if gamma is None:
        if cost_cap is not None:
            raise ValueError(f"cost_cap {cost_cap} is below the optimum")
        raise AssertionError("no feasible root row; the full set always dominates")
    return Run6Result(gamma, tuple(collected) if collect_tables else None)
