"""One named check per verified statement.

Every check computes both sides of its inequality or identity exactly and
returns a CheckOutcome with a replayable witness.  Checks never pre-filter
their input: a graph outside a statement's hypotheses yields a first-class
``not_applicable`` outcome, so exhaustive sweeps can feed every graph to
every check.

Depth-valued checks go through a DepthComputer, which optionally computes
every depth in both supported characteristics and records disagreements as
findings (a separate channel from check failures).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .depth import GF2, FieldChoice, depth_ideal, depth_ideal_both
from .graphs import (
    Graph,
    delete_vertices,
    emit_graph6,
    even_connection_graph,
    is_wk3_free,
    path_graph,
    star_packing_number,
    triangles,
    whiskered_triangle,
)
from .ideals import MonomialIdeal, _mul, edge_ideal, ideal_digest, symbolic_square_edge_ideal

__all__ = [
    "HOLDS",
    "FAILS",
    "NOT_APPLICABLE",
    "CheckOutcome",
    "DepthComputer",
    "check_first_power",
    "check_triangle_neighborhood_packing",
    "check_colon_intersection",
    "check_colon_intersection_depth",
    "check_even_connection_depth",
    "check_square_colon_depth",
    "check_square_colon_formula",
    "check_square_depth_bounds",
    "check_sharp_examples",
    "check_symbolic_square",
    "check_generator_order_decomposition",
    "check_packing_deletion_bound",
    "sharp_example_graphs",
]

HOLDS = "holds"
FAILS = "fails"
NOT_APPLICABLE = "not_applicable"


@dataclass
class CheckOutcome:
    """Verdict for one check instance; witness makes failures replayable."""

    check_id: str
    graph_id: str
    status: str
    lhs: object = None
    rhs: object = None
    witness: dict | None = None
    field_char: int | None = None
    elapsed_ms: float = 0.0

    def to_dict(self) -> dict:
        return {
            "check_id": self.check_id,
            "graph_id": self.graph_id,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "witness": self.witness,
            "field_char": self.field_char,
            "elapsed_ms": self.elapsed_ms,
        }


class DepthComputer:
    """Depth evaluations for the harness, with optional dual-field cross checks.

    With cross_check set, every depth is recomputed in the other
    characteristic; mismatches are appended to ``findings`` and never
    silently resolved.  The primary field's value is always returned.
    """

    def __init__(self, field: FieldChoice = GF2, cross_check: bool = False):
        self.field = field
        self.cross_check = cross_check
        self.findings: list[dict] = []
        self.comparisons = 0

    def ideal_depth(self, I: MonomialIdeal) -> int:
        if not self.cross_check:
            return depth_ideal(I, self.field)
        d2, d0 = depth_ideal_both(I)
        self.comparisons += 1
        if d2 != d0:
            self.findings.append(
                {
                    "kind": "field_disagreement",
                    "ideal": ideal_digest(I),
                    "ambient_size": len(I.ambient),
                    "char2": d2,
                    "char0": d0,
                }
            )
        return d2 if self.field.characteristic == 2 else d0


def _as_computer(field) -> DepthComputer:
    if isinstance(field, DepthComputer):
        return field
    return DepthComputer(field)


def _finish(out: CheckOutcome, t0: float) -> CheckOutcome:
    out.elapsed_ms = round((time.perf_counter() - t0) * 1000, 3)
    return out


def _variables_ideal(ambient, names) -> MonomialIdeal:
    gens = []
    for name in names:
        i = ambient.index(name)
        gens.append(tuple(1 if k == i else 0 for k in range(len(ambient))))
    return MonomialIdeal(ambient, tuple(gens))


def _edge_monomial(I: MonomialIdeal, u: str, v: str):
    return _mul(I.var(u), I.var(v))


# ---------------------------------------------------------------------------
# per-graph checks


def check_first_power(G: Graph, field=GF2) -> CheckOutcome:
    """depth of the edge ideal >= packing number + 1."""
    t0 = time.perf_counter()
    gid = emit_graph6(G)
    if not any(G.adj):
        return _finish(CheckOutcome("first_power", gid, NOT_APPLICABLE), t0)
    computer = _as_computer(field)
    pack = star_packing_number(G)
    lhs = computer.ideal_depth(edge_ideal(G))
    rhs = pack.size + 1
    status = HOLDS if lhs >= rhs else FAILS
    witness = {"centers": list(pack.centers)}
    return _finish(
        CheckOutcome("first_power", gid, status, lhs, rhs, witness,
                     computer.field.characteristic), t0
    )


def check_triangle_neighborhood_packing(G: Graph) -> list[CheckOutcome]:
    """Deleting the union of open neighborhoods of a triangle costs the
    packing number at most 2, provided no induced whiskered triangle exists.
    One outcome per triangle."""
    gid = emit_graph6(G)
    tris = triangles(G)
    if not tris or not is_wk3_free(G):
        t0 = time.perf_counter()
        reason = "no triangle" if not tris else "whiskered triangle present"
        return [
            _finish(
                CheckOutcome("triangle_deletion_packing", gid, NOT_APPLICABLE,
                             witness={"reason": reason}), t0
            )
        ]
    base = star_packing_number(G).size
    out = []
    for tri in tris:
        t0 = time.perf_counter()
        drop = set()
        for name in tri:
            i = G.index(name)
            for j in range(G.n):
                if G.adj[i] & (1 << j):
                    drop.add(G.labels[j])
        rest = delete_vertices(G, drop)
        lhs = star_packing_number(rest).size
        rhs = base - 2
        status = HOLDS if lhs >= rhs else FAILS
        witness = {"triangle": list(tri), "deleted": sorted(drop)}
        out.append(
            _finish(CheckOutcome("triangle_deletion_packing", gid, status,
                                 lhs, rhs, witness), t0)
        )
    return out


def check_colon_intersection(G: Graph, edge: tuple[str, str]) -> CheckOutcome:
    """(I : u) meet (I : v) equals the edge ideal of the contracted graph plus
    the common neighbors, as an exact ideal identity."""
    t0 = time.perf_counter()
    u, v = edge
    gid = emit_graph6(G)
    I = edge_ideal(G)
    lhs_ideal = I.colon(I.var(u)).intersect(I.colon(I.var(v)))
    gprime, L = even_connection_graph(G, u, v, ())
    rhs_ideal = edge_ideal(gprime).with_ambient(G.labels) + _variables_ideal(G.labels, L)
    status = HOLDS if lhs_ideal == rhs_ideal else FAILS
    witness = {"edge": [u, v], "L": list(L)}
    if status == FAILS:
        witness["lhs_gens"] = lhs_ideal.pretty()
        witness["rhs_gens"] = rhs_ideal.pretty()
    return _finish(
        CheckOutcome("colon_intersection", gid, status,
                     ideal_digest(lhs_ideal), ideal_digest(rhs_ideal), witness), t0
    )


def _admissible_pool(G: Graph, u: str, v: str) -> list[str]:
    i, j = G.index(u), G.index(v)
    pool_mask = (G.adj[i] | G.adj[j]) & ~(1 << i) & ~(1 << j)
    return [G.labels[k] for k in range(G.n) if pool_mask & (1 << k)]


def check_colon_intersection_depth(G: Graph, edge, A, field=GF2) -> CheckOutcome:
    """depth of (I(G-A):u) meet (I(G-A):v) over the shrunken ring is at least
    the packing number of the original graph."""
    t0 = time.perf_counter()
    u, v = edge
    gid = emit_graph6(G)
    computer = _as_computer(field)
    _validate_admissible(G, u, v, A)
    GA = delete_vertices(G, A)
    IA = edge_ideal(GA)
    J = IA.colon(IA.var(u)).intersect(IA.colon(IA.var(v)))
    lhs = computer.ideal_depth(J)
    rhs = star_packing_number(G).size
    status = HOLDS if lhs >= rhs else FAILS
    witness = {"edge": [u, v], "A": sorted(A)}
    return _finish(
        CheckOutcome("colon_intersection_depth", gid, status, lhs, rhs, witness,
                     computer.field.characteristic), t0
    )


def check_even_connection_depth(G: Graph, edge, A, field=GF2) -> CheckOutcome:
    """Same depth bound, routed through the contracted-graph construction, and
    the identity between the two routes asserted on the way."""
    t0 = time.perf_counter()
    u, v = edge
    gid = emit_graph6(G)
    computer = _as_computer(field)
    gprime, L = even_connection_graph(G, u, v, A)
    GA = delete_vertices(G, A)
    ambient = GA.labels
    K = edge_ideal(gprime).with_ambient(ambient) + _variables_ideal(ambient, L)
    IA = edge_ideal(GA)
    J = IA.colon(IA.var(u)).intersect(IA.colon(IA.var(v)))
    identity = K == J
    lhs = computer.ideal_depth(K)
    rhs = star_packing_number(G).size
    status = HOLDS if identity and lhs >= rhs else FAILS
    witness = {"edge": [u, v], "A": sorted(A), "L": list(L), "identity": identity}
    return _finish(
        CheckOutcome("even_connection_depth", gid, status, lhs, rhs, witness,
                     computer.field.characteristic), t0
    )


def check_square_colon_depth(G: Graph, edge, A, field=GF2) -> CheckOutcome:
    """depth of (I(G-A)^2 : uv) over the shrunken ring is at least the packing
    number minus 2, minus 1 only when no whiskered triangle is induced."""
    t0 = time.perf_counter()
    u, v = edge
    gid = emit_graph6(G)
    computer = _as_computer(field)
    _validate_admissible(G, u, v, A)
    GA = delete_vertices(G, A)
    IA = edge_ideal(GA)
    colon = (IA ** 2).colon(_edge_monomial(IA, u, v))
    lhs = computer.ideal_depth(colon)
    wk3free = is_wk3_free(G)
    rhs = star_packing_number(G).size - (1 if wk3free else 2)
    status = HOLDS if lhs >= rhs else FAILS
    witness = {"edge": [u, v], "A": sorted(A), "wk3_free": wk3free}
    return _finish(
        CheckOutcome("square_colon_depth", gid, status, lhs, rhs, witness,
                     computer.field.characteristic), t0
    )


def check_square_colon_formula(G: Graph, edge, A) -> CheckOutcome:
    """(I(G-A)^2 : uv) computed generator-wise must equal the even-connection
    description: I(G-A) + mixed neighbor products + squares of common
    neighbors.  When the edge is its own component, both collapse to I(G-A)."""
    t0 = time.perf_counter()
    u, v = edge
    gid = emit_graph6(G)
    _validate_admissible(G, u, v, A)
    GA = delete_vertices(G, A)
    IA = edge_ideal(GA)
    lhs_ideal = (IA ** 2).colon(_edge_monomial(IA, u, v))
    i, j = GA.index(u), GA.index(v)
    ni = [GA.labels[k] for k in range(GA.n) if GA.adj[i] & (1 << k)]
    nj = [GA.labels[k] for k in range(GA.n) if GA.adj[j] & (1 << k)]
    common = sorted(set(ni) & set(nj), key=GA.labels.index)
    width = len(GA.labels)
    extra = []
    for p in ni:
        for q in nj:
            if p != q:
                extra.append(_mul(IA.var(p), IA.var(q)))
    for c in common:
        k = GA.labels.index(c)
        extra.append(tuple(2 if t == k else 0 for t in range(width)))
    rhs_ideal = IA + MonomialIdeal(GA.labels, tuple(extra))
    isolated = GA.degree(i) == 1 and GA.degree(j) == 1
    ok = lhs_ideal == rhs_ideal and (not isolated or lhs_ideal == IA)
    witness = {"edge": [u, v], "A": sorted(A), "L": list(common), "isolated_edge_case": isolated}
    if not ok:
        witness["lhs_gens"] = lhs_ideal.pretty()
        witness["rhs_gens"] = rhs_ideal.pretty()
    return _finish(
        CheckOutcome("square_colon_formula", gid, HOLDS if ok else FAILS,
                     ideal_digest(lhs_ideal), ideal_digest(rhs_ideal), witness), t0
    )


_SQUARE_PARTS = ("square_general", "square_wk3_free", "square_triangle_free")


def check_square_depth_bounds(G: Graph, field=GF2, parts=_SQUARE_PARTS) -> list[CheckOutcome]:
    """Lower bounds for depth of the squared edge ideal: packing number minus
    2 in general, minus 1 without induced whiskered triangles, and unchanged
    for triangle-free graphs.  One outcome per requested applicable part."""
    gid = emit_graph6(G)
    computer = _as_computer(field)
    out = []
    if not any(G.adj):
        for part in parts:
            t0 = time.perf_counter()
            out.append(_finish(CheckOutcome(part, gid, NOT_APPLICABLE), t0))
        return out
    t0 = time.perf_counter()
    pack = star_packing_number(G)
    wk3free = is_wk3_free(G)
    trifree = not triangles(G)
    lhs = computer.ideal_depth(edge_ideal(G) ** 2)
    slack = {"square_general": 2, "square_wk3_free": 1, "square_triangle_free": 0}
    applicable = {
        "square_general": True,
        "square_wk3_free": wk3free,
        "square_triangle_free": trifree,
    }
    witness = {"centers": list(pack.centers), "wk3_free": wk3free, "triangle_free": trifree}
    for part in parts:
        if not applicable[part]:
            out.append(_finish(CheckOutcome(part, gid, NOT_APPLICABLE), t0))
            continue
        rhs = pack.size - slack[part]
        status = HOLDS if lhs >= rhs else FAILS
        out.append(
            _finish(CheckOutcome(part, gid, status, lhs, rhs, dict(witness),
                                 computer.field.characteristic), t0)
        )
        t0 = time.perf_counter()
    return out


def sharp_example_graphs() -> list[tuple[str, Graph, int, int, int]]:
    """The three sharpness instances: (name, graph, exact square depth,
    exact packing number, slack of the matching bound)."""
    wk3 = whiskered_triangle()
    return [
        ("whiskered_triangle", wk3, 1, 3, 2),
        ("whiskered_triangle_minus_leaf", delete_vertices(wk3, {"z3"}), 1, 2, 1),
        ("path_p4", path_graph(4), 2, 2, 0),
    ]


def check_sharp_examples(field=GF2) -> list[CheckOutcome]:
    """Exact reproduction of the sharpness table: the depth of each squared
    edge ideal must hit its bound with equality."""
    computer = _as_computer(field)
    out = []
    for name, G, want_depth, want_alpha2, slack in sharp_example_graphs():
        t0 = time.perf_counter()
        gid = emit_graph6(G)
        pack = star_packing_number(G)
        depth = computer.ideal_depth(edge_ideal(G) ** 2)
        ok = depth == want_depth and pack.size == want_alpha2 and depth == pack.size - slack
        witness = {
            "name": name,
            "alpha2": pack.size,
            "alpha2_expected": want_alpha2,
            "centers": list(pack.centers),
            "bound_slack": slack,
        }
        out.append(
            _finish(CheckOutcome("sharp_examples", gid, HOLDS if ok else FAILS,
                                 depth, want_depth, witness,
                                 computer.field.characteristic), t0)
        )
    return out


def check_symbolic_square(G: Graph, field=GF2) -> CheckOutcome:
    """Second symbolic power: equals the ordinary square for triangle-free
    graphs, and its depth is at least the packing number."""
    t0 = time.perf_counter()
    gid = emit_graph6(G)
    if not any(G.adj):
        return _finish(CheckOutcome("symbolic_square", gid, NOT_APPLICABLE), t0)
    computer = _as_computer(field)
    I = edge_ideal(G)
    square = I ** 2
    symbolic = symbolic_square_edge_ideal(G)
    trifree = not triangles(G)
    equal = square == symbolic
    lhs = computer.ideal_depth(symbolic)
    rhs = star_packing_number(G).size
    ok = lhs >= rhs and (equal or not trifree)
    witness = {"triangle_free": trifree, "square_equals_symbolic": equal}
    if trifree and not equal:
        witness["symbolic_only_gens"] = [
            g for g in symbolic.gens if not square.contains(g)
        ]
    return _finish(
        CheckOutcome("symbolic_square", gid, HOLDS if ok else FAILS, lhs, rhs,
                     witness, computer.field.characteristic), t0
    )


def check_generator_order_decomposition(G: Graph, max_edges: int = 8) -> CheckOutcome:
    """Search for a generator order in which each partial-sum colon
    ((I^2 + (u_1..u_{k-1})) : u_k) splits as (I^2 : u_k) plus variables from
    the open neighborhoods of u_k's endpoints."""
    t0 = time.perf_counter()
    gid = emit_graph6(G)
    edges = G.edge_labels()
    m = len(edges)
    if m == 0:
        return _finish(CheckOutcome("order_decomposition", gid, NOT_APPLICABLE,
                                    witness={"reason": "edgeless"}), t0)
    if m > max_edges:
        return _finish(CheckOutcome("order_decomposition", gid, NOT_APPLICABLE,
                                    witness={"reason": f"more than {max_edges} edges"}), t0)
    I = edge_ideal(G)
    I2 = I ** 2
    gens = list(I.gens)
    gen_of_edge = {}
    for u, v in edges:
        gen_of_edge[(u, v)] = _edge_monomial(I, u, v)
    order_of_gen = {g: e for e, g in gen_of_edge.items()}
    pool_of = {}
    for k, g in enumerate(gens):
        u, v = order_of_gen[g]
        pool_of[k] = set(_admissible_pool(G, u, v))
    base_colon = [I2.colon(g) for g in gens]
    width = len(I.ambient)

    def condition(used: frozenset, t: int) -> bool:
        partial = I2 + MonomialIdeal(I.ambient, tuple(gens[k] for k in used))
        left = partial.colon(gens[t])
        linear = [g for g in left.gens if sum(g) == 1]
        for g in linear:
            name = I.ambient[g.index(1)]
            if name not in pool_of[t]:
                return False
        return left == base_colon[t] + MonomialIdeal(I.ambient, tuple(linear))

    dead: set[frozenset] = set()

    def search(used: frozenset):
        if len(used) == m:
            return []
        if used in dead:
            return None
        for t in range(m):
            if t in used:
                continue
            if condition(used, t):
                rest = search(used | {t})
                if rest is not None:
                    return [t] + rest
        dead.add(used)
        return None

    found = search(frozenset())
    ok = found is not None
    witness = {"edges": m}
    if ok:
        witness["order"] = [list(order_of_gen[gens[t]]) for t in found]
    return _finish(
        CheckOutcome("order_decomposition", gid, HOLDS if ok else FAILS,
                     int(ok), 1, witness), t0
    )


def check_packing_deletion_bound(G: Graph, edge, A) -> CheckOutcome:
    """Deleting A together with a closed neighborhood (either endpoint), or
    both closed neighborhoods, lowers the packing number by at most 2."""
    t0 = time.perf_counter()
    u, v = edge
    gid = emit_graph6(G)
    _validate_admissible(G, u, v, A)
    i, j = G.index(u), G.index(v)
    base = star_packing_number(G).size
    rhs = base - 2
    closed_u = {G.labels[k] for k in range(G.n) if G.closed_mask(i) & (1 << k)}
    closed_v = {G.labels[k] for k in range(G.n) if G.closed_mask(j) & (1 << k)}
    variants = {
        "A_plus_closed_u": set(A) | closed_u,
        "A_plus_closed_v": set(A) | closed_v,
        "closed_u_plus_closed_v": closed_u | closed_v,
    }
    values = {
        name: star_packing_number(delete_vertices(G, drop)).size
        for name, drop in variants.items()
    }
    lhs = min(values.values())
    status = HOLDS if lhs >= rhs else FAILS
    witness = {"edge": [u, v], "A": sorted(A), "values": values}
    return _finish(
        CheckOutcome("deletion_bound", gid, status, lhs, rhs, witness), t0
    )


def _validate_admissible(G: Graph, u: str, v: str, A):
    i, j = G.index(u), G.index(v)
    if not G.has_edge(i, j):
        raise ValueError(f"{u!r} {v!r} is not an edge")
    pool = set(_admissible_pool(G, u, v))
    bad = set(A) - pool
    if bad:
        raise ValueError(f"inadmissible deletion set, {sorted(bad)} outside the neighborhood pool")
