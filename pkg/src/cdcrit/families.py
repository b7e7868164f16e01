"""Generators for the constructed graph families.

Every generator returns a :class:`FamilyInstance`: the labelled graph plus
the values the construction is claimed to have (gamma_c, cut-vertex counts,
matching behaviour). Nothing here is trusted; the suites re-derive every
claim with the solver, decomposition and matching modules.

Vertex labels follow the construction names (``c_0``, ``s^1_0``, ``x'``,
``a_2``...), so failures can be traced back to the drawing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import ParameterError, ParityError, PreconditionError
from .graph import Graph, JoinExpr, build, complete_graph, join, mask_of, members

TAGS = ("B0", "B1", "B21", "B22", "G1", "G2", "HL", "F", "X", "G5", "A", "FIG4", "CYCLE", "EXT")


@dataclass(frozen=True)
class Claims:
    gamma_c: int | None = None
    zeta: int | None = None
    zeta0: int | None = None
    critical: bool | None = None
    claw_free: bool | None = None
    min_degree_at_least: int | None = None
    # ell -> expected ell-factor-criticality
    factor_critical: tuple[tuple[int, bool], ...] = ()
    # labels of a set S claimed to violate the odd-component condition
    favaron_witness: tuple[str, ...] | None = None
    favaron_odd: int | None = None

    def to_json(self) -> dict:
        out = {}
        for key in ("gamma_c", "zeta", "zeta0", "critical", "claw_free", "min_degree_at_least", "favaron_odd"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        if self.factor_critical:
            out["factor_critical"] = {str(ell): v for ell, v in self.factor_critical}
        if self.favaron_witness is not None:
            out["favaron_witness"] = list(self.favaron_witness)
        return out


@dataclass(frozen=True)
class FamilyInstance:
    tag: str
    params: dict
    graph: Graph
    claims: Claims
    head: int | None = None  # head vertex for end blocks
    marked: int = 0  # bitset of the marked clique H, when the family has one
    notes: tuple[str, ...] = field(default=())

    def vertices(self, *labels: str) -> list[int]:
        return self.graph.vertices_labeled(*labels)


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ParameterError(msg)


def _piece(n: int, name: str) -> Graph:
    g = complete_graph(n)
    return g.with_labels([f"{name}_{i}" for i in range(1, n + 1)])


def _vertex(label: str) -> Graph:
    return Graph(1, (0,), (label,))


# -- end blocks ---------------------------------------------------------------


def gen_b0(t1: int) -> FamilyInstance:
    """c joined to K_{t1}."""
    _need(t1 >= 1, "B0 needs t1 >= 1")
    e = JoinExpr().add("c", _vertex("c")).add("K", _piece(t1, "k")).chain("c", "K")
    g = join(e)
    return FamilyInstance("B0", {"t1": t1}, g, Claims(gamma_c=1), head=0)


def gen_b1(t2: int) -> FamilyInstance:
    """c, K_{t2}, z_1 joined in a chain."""
    _need(t2 >= 2, "B1 needs t2 >= 2")
    e = JoinExpr().add("c", _vertex("c")).add("K", _piece(t2, "k")).add("z", _vertex("z_1"))
    g = join(e.chain("c", "K", "z"))
    return FamilyInstance("B1", {"t2": t2}, g, Claims(gamma_c=1), head=0)


def gen_b21(t3: int, t4: int) -> FamilyInstance:
    """c, K_{t3}, K_{t4}, z_2 joined in a chain."""
    _need(t3 >= 2 and t4 >= 2, "B21 needs t3, t4 >= 2")
    e = (
        JoinExpr()
        .add("c", _vertex("c"))
        .add("K3", _piece(t3, "k"))
        .add("K4", _piece(t4, "h"))
        .add("z", _vertex("z_2"))
    )
    g = join(e.chain("c", "K3", "K4", "z"))
    return FamilyInstance("B21", {"t3": t3, "t4": t4}, g, Claims(gamma_c=2), head=0)


def gen_b22(m: Sequence[int], r: int = 0) -> FamilyInstance:
    """Complement-of-stars block with head c.

    Inner vertices are the star leaves S, the star centres S' and r extra
    vertices S''. All inner pairs are edges except the star edges s^i_0 s^i_j.
    The head c is adjacent exactly to S.
    """
    m = tuple(m)
    _need(len(m) >= 2, "B22 needs at least two stars (l >= 2)")
    _need(all(mi >= 1 for mi in m), "B22 needs every m_i >= 1")
    _need(r >= 0, "B22 needs r >= 0")
    labels = ["c"]
    leaves: list[int] = []
    star_edges: list[tuple[int, int]] = []
    for i, mi in enumerate(m, start=1):
        centre = len(labels)
        labels.append(f"s^{i}_0")
        for j in range(1, mi + 1):
            leaves.append(len(labels))
            star_edges.append((centre, len(labels)))
            labels.append(f"s^{i}_{j}")
    for j in range(1, r + 1):
        labels.append(f"t_{j}")
    n = len(labels)
    missing = set(star_edges)
    edges = [(u, v) for u in range(1, n) for v in range(u + 1, n) if (u, v) not in missing]
    edges += [(0, s) for s in leaves]
    g = build(n, edges, labels)
    return FamilyInstance("B22", {"m": m, "r": r}, g, Claims(gamma_c=2), head=0)


def gen_end_block(tag: str, **params) -> FamilyInstance:
    gens = {"B0": gen_b0, "B1": gen_b1, "B21": gen_b21, "B22": gen_b22}
    if tag not in gens:
        raise ParameterError(f"unknown end-block tag {tag!r}")
    return gens[tag](**params)


# -- k - 3 cut vertices ------------------------------------------------------


def gen_g1(k: int, l: int, n_l: int, m: Sequence[int] = (1, 1), r: int = 0) -> FamilyInstance:
    """Path c_0 .. c_{k-4}, head c of a complement-of-stars block, one clique link.

    The unit tuple is given by its position ``l`` (1 <= l <= k-3). Writing
    c_{k-3} for the head c, link j (between c_{j-1} and c_j) is the chain
    c_{j-1} v K_{n_l} v c_j when j = l and a single edge otherwise; l = k-3
    is the layout where the clique sits next to the block.
    """
    _need(k >= 4, "G1 needs k >= 4")
    _need(1 <= l <= k - 3, f"G1 needs 1 <= l <= k-3 (the unit tuple has length {k - 3})")
    _need(n_l >= 1, "G1 needs n_l >= 1")
    block = gen_b22(m, r)
    e = JoinExpr()
    for j in range(k - 3):
        e.add(f"c{j}", _vertex(f"c_{j}"))
    e.add("K", _piece(n_l, "k"))
    e.add("B", block.graph)
    for j in range(1, k - 2):
        left = f"c{j - 1}"
        right = f"c{j}" if j < k - 3 else "B"
        if j == l:
            e.chain(left, "K")
            if right == "B":
                e.edge("K", "B", 0, 0)
                for i in range(1, n_l):
                    e.edge("K", "B", i, 0)
            else:
                e.chain("K", right)
        else:
            e.edge(left, right, 0, 0)
    g = join(e)
    claims = Claims(gamma_c=k, zeta=k - 3, critical=True)
    params = {"k": k, "l": l, "n": n_l, "m": tuple(m), "r": r}
    return FamilyInstance("G1", params, g, claims)


def gen_g2(k: int, block: Graph | None = None, head: int | None = None, allow_k4: bool = False) -> FamilyInstance:
    """Path c_0 .. c_{k-4} with an edge from c_{k-4} to the head of a checked block."""
    from .structure import is_b3_block

    _need(k >= 5 or (allow_k4 and k == 4), "G2 needs k >= 5 (k = 4 only with allow_k4)")
    if block is None:
        block, head = default_b3_block()
    if head is None:
        head = block.find("b") if block.labels and "b" in block.labels else 0
    verdict = is_b3_block(block, head)
    if not verdict:
        raise PreconditionError(f"block fails the three-vertex class check: {verdict.witness}")
    labels = [lab if i != head else f"c_{k - 3}" for i, lab in enumerate(block.labels or [f"v_{i}" for i in range(block.n)])]
    e = JoinExpr()
    for j in range(k - 3):
        e.add(f"c{j}", _vertex(f"c_{j}"))
    e.add("B", block.with_labels(labels))
    for j in range(1, k - 3):
        e.edge(f"c{j - 1}", f"c{j}")
    e.edge(f"c{k - 4}", "B", 0, head)
    g = join(e)
    return FamilyInstance("G2", {"k": k}, g, Claims(gamma_c=k, zeta=k - 3, critical=True))


# Smallest block found by searching 2-connected head-labelled graphs with the
# class check (see tests/test_families.py::test_default_b3_block_is_minimal):
# a 5-cycle a_1 p_1 p_2 p_3 a_2 with the head b joined to a_1 and a_2.
_DEFAULT_B3: tuple[int, list[tuple[int, int]], list[str]] | None = (
    6,
    [(0, 1), (0, 2), (1, 2), (1, 3), (3, 4), (4, 5), (5, 2)],
    ["b", "a_1", "a_2", "p_1", "p_2", "p_3"],
)


def default_b3_block() -> tuple[Graph, int]:
    if _DEFAULT_B3 is None:
        raise PreconditionError("no default three-vertex-class block configured")
    n, edges, labels = _DEFAULT_B3
    g = build(n, edges, labels)
    return g, g.find("b")


# -- prescribed cut vertices -------------------------------------------------


def gen_hl_block(ell: int, sizes: Sequence[int] | None = None, pattern: Sequence[int] | None = None) -> FamilyInstance:
    """Head x with layers U_1 .. U_ell.

    {x} u U_1, U_i u U_{i+1} (i <= ell-2) and U_ell are cliques. Vertex j of
    U_{ell-1} sees all of U_ell except vertex pattern[j], which defaults to the
    cyclic choice j mod |U_ell|. Every U_ell vertex must keep a neighbor.
    """
    _need(ell >= 2, "HL needs ell >= 2")
    sizes = tuple(sizes) if sizes is not None else (2,) * ell
    _need(len(sizes) == ell, "HL needs one size per layer")
    _need(all(s >= 2 for s in sizes), "HL layers need at least two vertices")
    last, prev = sizes[-1], sizes[-2]
    pattern = tuple(pattern) if pattern is not None else tuple(j % last for j in range(prev))
    _need(len(pattern) == prev and all(0 <= p < last for p in pattern), "bad missing-edge pattern")
    labels = ["x"]
    layers: list[list[int]] = []
    for i, s in enumerate(sizes, start=1):
        layers.append(list(range(len(labels), len(labels) + s)))
        labels += [f"u^{i}_{j}" for j in range(1, s + 1)]
    edges: set[tuple[int, int]] = set()

    def clique(vs: list[int]) -> None:
        for a in range(len(vs)):
            for b in range(a + 1, len(vs)):
                edges.add((vs[a], vs[b]))

    clique([0] + layers[0])
    for i in range(ell - 2):
        clique(layers[i] + layers[i + 1])
    clique(layers[-1])
    for j, u in enumerate(layers[-2]):
        for t, w in enumerate(layers[-1]):
            if t != pattern[j]:
                edges.add((u, w))
    for t, w in enumerate(layers[-1]):
        if not any((u, w) in edges for u in layers[-2]):
            raise ParameterError(f"pattern leaves u^{ell}_{t + 1} without a neighbor in the previous layer")
    g = build(len(labels), sorted(edges), labels)
    return FamilyInstance("HL", {"ell": ell, "sizes": sizes, "pattern": pattern}, g, Claims(), head=0)


def gen_f(
    p: int,
    q: int,
    r: int,
    h2_sizes: Sequence[int] = (2, 2),
    hr_sizes: Sequence[int] | None = None,
) -> FamilyInstance:
    """p two-layer blocks, a path on q vertices and one r-layer block, heads made a clique."""
    _need(p >= 0, "F needs p >= 0")
    _need(q >= 2, "F needs q >= 2")
    _need(r >= 2, f"F needs r >= 2 (got r={r}; layered blocks need at least two layers)")
    e = JoinExpr()
    heads = []
    for i in range(1, p + 1):
        blk = gen_hl_block(2, h2_sizes).graph
        e.add(f"H{i}", blk.with_labels([f"{lab}#{i}" if lab != "x" else f"c_{i}" for lab in blk.labels]))
        heads.append(f"H{i}")
    path = build(q, [(i, i + 1) for i in range(q - 1)], [f"d_{i}" for i in range(q)])
    e.add("P", path)
    heads.append("P")
    blk = gen_hl_block(r, hr_sizes).graph
    e.add("HR", blk.with_labels([f"{lab}#r" if lab != "x" else f"c_{p + 2}" for lab in blk.labels]))
    heads.append("HR")
    for a in range(len(heads)):
        for b in range(a + 1, len(heads)):
            e.edge(heads[a], heads[b], 0, 0)
    g = join(e)
    claims = Claims(gamma_c=r + q + 3 * p, zeta=p + q, zeta0=p + 2, critical=True)
    return FamilyInstance("F", {"p": p, "q": q, "r": r}, g, claims)


def realizability_params(k: int, zeta: int, zeta0: int) -> tuple[int, int, int]:
    """(p, q, r) of the F instance assigned to a target (k, zeta, zeta0)."""
    return zeta0 - 2, zeta - zeta0 + 2, k - zeta - 2 * zeta0 + 4


def realizability_targets(k_min: int = 4, k_max: int = 8) -> list[tuple[int, int, int]]:
    out = []
    for k in range(k_min, k_max + 1):
        for zeta in range(2, k - 1):
            for zeta0 in range(2, min((k + 2) // 3, zeta) + 1):
                out.append((k, zeta, zeta0))
    return out


# -- matching counterexamples ------------------------------------------------


def gen_x(s: int) -> FamilyInstance:
    """Independent sets A, B and a clique K_s; a_i sees B - b_i and K_s - y_i."""
    _need(s >= 3, "X needs s >= 3")
    labels = [f"a_{i}" for i in range(1, s + 1)] + [f"b_{i}" for i in range(1, s + 1)] + [f"y_{i}" for i in range(1, s + 1)]
    a = list(range(s))
    b = list(range(s, 2 * s))
    y = list(range(2 * s, 3 * s))
    edges = [(y[i], y[j]) for i in range(s) for j in range(i + 1, s)]
    for i in range(s):
        edges += [(a[i], b[j]) for j in range(s) if j != i]
        edges += [(a[i], y[j]) for j in range(s) if j != i]
    g = build(3 * s, edges, labels)
    fc: tuple[tuple[int, bool], ...] = ((1, False),) if s % 2 else ()
    claims = Claims(
        gamma_c=4,
        critical=True,
        min_degree_at_least=s - 1,
        factor_critical=fc,
        favaron_witness=tuple(labels[:s]) if s % 2 else None,
        favaron_odd=s + 1 if s % 2 else None,
    )
    return FamilyInstance("X", {"s": s}, g, claims, marked=mask_of(y))


def gen_g5(l1: int, l2: int) -> FamilyInstance:
    """u, K_{l1}, K_{l2}, x'y' chained; x-x', y-y', w to x' and y', z to x, y, w."""
    _need(l1 >= 2 and l2 >= 2, "G5 needs l1, l2 >= 2")
    if (l1 + l2) % 2:
        raise ParityError("G5 needs l1 + l2 even")
    e = (
        JoinExpr()
        .add("u", _vertex("u"))
        .add("K1", _piece(l1, "k"))
        .add("K2", _piece(l2, "h"))
        .add("P", build(2, [(0, 1)], ["x'", "y'"]))
        .add("x", _vertex("x"))
        .add("y", _vertex("y"))
        .add("z", _vertex("z"))
        .add("w", _vertex("w"))
    )
    e.chain("u", "K1", "K2", "P")
    e.edge("x", "P", 0, 0).edge("y", "P", 0, 1)
    e.chain("w", "P")
    e.chain("z", "x").chain("z", "y").chain("z", "w")
    g = join(e)
    claims = Claims(
        gamma_c=5,
        critical=True,
        min_degree_at_least=2,
        factor_critical=((1, False),),
        favaron_witness=("x'", "y'", "z"),
        favaron_odd=4,
    )
    return FamilyInstance("G5", {"l1": l1, "l2": l2}, g, claims)


def gen_a(t1: int, t2: int) -> FamilyInstance:
    """x_1 v K_{t1} v x_2 v x_3 together with x_1 v K_{t2} v x_3.

    The first chain is read with K_{t1}; t1 must be odd and at least 3.
    """
    _need(t1 >= 3 and t1 % 2 == 1, "A needs odd t1 >= 3")
    _need(t2 >= 2 and t2 % 2 == 0, "A needs even t2 >= 2")
    e = (
        JoinExpr()
        .add("x1", _vertex("x_1"))
        .add("K1", _piece(t1, "k"))
        .add("x2", _vertex("x_2"))
        .add("x3", _vertex("x_3"))
        .add("K2", _piece(t2, "h"))
    )
    e.chain("x1", "K1", "x2", "x3")
    e.chain("x1", "K2", "x3")
    g = join(e)
    marked = mask_of(g.vertices_labeled(*[f"h_{i}" for i in range(1, t2 + 1)], "x_3"))
    claims = Claims(
        gamma_c=3,
        critical=True,
        claw_free=True,
        min_degree_at_least=3,
        factor_critical=((2, False),),
        favaron_witness=("x_1", "x_2"),
        favaron_odd=2,
    )
    return FamilyInstance("A", {"t1": t1, "t2": t2}, g, claims, marked=marked)


def gen_fig4(n: int) -> FamilyInstance:
    """Star K_{1,n} whose leaves see all of K_n except a perfect matching."""
    _need(n >= 2, "FIG4 needs n >= 2")
    labels = ["s_0"] + [f"l_{i}" for i in range(1, n + 1)] + [f"k_{i}" for i in range(1, n + 1)]
    leaves = list(range(1, n + 1))
    kn = list(range(n + 1, 2 * n + 1))
    edges = [(0, v) for v in leaves]
    edges += [(kn[i], kn[j]) for i in range(n) for j in range(i + 1, n)]
    edges += [(leaves[i], kn[j]) for i in range(n) for j in range(n) if i != j]
    g = build(2 * n + 1, edges, labels)
    claims = Claims(gamma_c=3, critical=True, min_degree_at_least=2, factor_critical=((1, False),))
    return FamilyInstance("FIG4", {"n": n}, g, claims)


def gen_cycle(k: int) -> FamilyInstance:
    """C_{k+2}, claimed k-gamma_c-critical; marked clique is the edge c_1 c_2."""
    _need(k >= 1, "CYCLE needs k >= 1")
    n = k + 2
    g = build(n, [(i, (i + 1) % n) for i in range(n)], [f"c_{i}" for i in range(1, n + 1)])
    return FamilyInstance("CYCLE", {"k": k}, g, Claims(gamma_c=k, critical=True), marked=0b11)


def extend_pk(
    base: FamilyInstance | Graph,
    sizes: Sequence[int],
    marked: int | None = None,
    check: bool = True,
) -> FamilyInstance:
    """x_0 v K_{n_1} v ... v K_{n_l} joined into the marked clique H of ``base``.

    The base must be gamma_c-critical with H passing the marked-clique class
    test (checked unless ``check`` is False). The result is claimed to be
    (k + l)-critical.
    """
    from .domination import gamma_c_value
    from .structure import is_pk_member

    sizes = tuple(sizes)
    _need(len(sizes) >= 1 and all(s >= 1 for s in sizes), "EXT needs l >= 1 clique sizes, each >= 1")
    if isinstance(base, FamilyInstance):
        g, h = base.graph, base.marked if marked is None else marked
        base_tag = base.tag
    else:
        g, h, base_tag = base, marked, "graph"
    if not h:
        raise PreconditionError("extension needs a marked clique H")
    if check:
        verdict = is_pk_member(g, h)
        if not verdict:
            raise PreconditionError(f"base fails the marked-clique class check: {verdict.witness}")
        k = verdict.witness["k"]
    else:
        k = gamma_c_value(g)
    e = JoinExpr().add("x0", _vertex("x_0"))
    names = ["x0"]
    for i, s in enumerate(sizes, start=1):
        e.add(f"K{i}", _piece(s, f"q^{i}"))
        names.append(f"K{i}")
    labels = list(g.labels) if g.labels else [f"v_{i}" for i in range(g.n)]
    e.add("G", g.with_labels(labels))
    e.chain(*names)
    e.restricted(names[-1], "G", members(h))
    out = join(e)
    offset = 1 + sum(sizes)
    new_marked = h << offset
    claims = _extension_claims(base_tag, base if isinstance(base, FamilyInstance) else None, sizes, k, out)
    params = {"base": base_tag, "sizes": sizes}
    if isinstance(base, FamilyInstance):
        params = {"base": base_tag, **{f"base.{key}": v for key, v in base.params.items()}, "sizes": sizes}
    return FamilyInstance("EXT", params, out, claims, marked=new_marked)


def _extension_claims(tag: str, base: FamilyInstance | None, sizes: tuple[int, ...], k: int, g: Graph) -> Claims:
    l = len(sizes)
    total = k + l
    if tag == "X" and base is not None and base.params["s"] % 2 and sizes[-1] == 1 and (sum(sizes) % 2 == 1):
        s = base.params["s"]
        y = f"q^{l}_1"
        witness = (y,) + tuple(f"a_{i}" for i in range(1, s + 1))
        return Claims(
            gamma_c=total,
            critical=True,
            min_degree_at_least=2,
            factor_critical=((1, False),),
            favaron_witness=witness,
            favaron_odd=len(witness) + 2,
        )
    if tag == "A" and sum(sizes) % 2 == 1:
        return Claims(
            gamma_c=total,
            critical=True,
            claw_free=True,
            min_degree_at_least=3,
            factor_critical=((2, False),),
            favaron_witness=("x_1", "x_2"),
            favaron_odd=2,
        )
    return Claims(gamma_c=total, critical=True)


# -- compact string specs ----------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Tag plus named integer parameters, e.g. ``F:p=1,q=2,r=2``.

    Tuple parameters use dots (``B22:m=1.2,r=0``). ``EXT`` takes the base tag
    and its parameters plus ``sizes``: ``EXT:base=X,s=3,sizes=2.2.1``.
    """

    tag: str
    params: tuple[tuple[str, object], ...]

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        text = text.strip()
        tag, _, rest = text.partition(":")
        tag = tag.strip().upper()
        if tag not in TAGS:
            raise ParameterError(f"unknown family tag {tag!r}")
        params: list[tuple[str, object]] = []
        if rest.strip():
            for item in rest.split(","):
                key, eq, val = item.partition("=")
                key, val = key.strip(), val.strip()
                if not eq or not key:
                    raise ParameterError(f"malformed parameter {item!r}")
                if key == "base":
                    params.append((key, val.upper()))
                    continue
                try:
                    parsed: object = tuple(int(x) for x in val.split(".")) if "." in val else int(val)
                except ValueError as exc:
                    raise ParameterError(f"parameter {key!r} is not an integer: {val!r}") from exc
                params.append((key, parsed))
        return cls(tag, tuple(params))

    def __str__(self) -> str:
        parts = []
        for key, val in self.params:
            if isinstance(val, tuple):
                val = ".".join(str(x) for x in val)
            parts.append(f"{key}={val}")
        return f"{self.tag}:{','.join(parts)}" if parts else self.tag

    def as_dict(self) -> dict:
        return dict(self.params)


_TUPLE_KEYS = {"m", "sizes", "pattern", "h2_sizes", "hr_sizes"}


def _as_tuple(val: object) -> tuple[int, ...]:
    return val if isinstance(val, tuple) else (val,)


def _kwargs(params: dict) -> dict:
    return {k: (_as_tuple(v) if k in _TUPLE_KEYS else v) for k, v in params.items()}


def generate(spec: FamilySpec | str) -> FamilyInstance:
    if isinstance(spec, str):
        spec = FamilySpec.parse(spec)
    params = spec.as_dict()
    tag = spec.tag
    try:
        if tag == "EXT":
            base_tag = params.pop("base", None)
            if base_tag is None or "sizes" not in params:
                raise ParameterError("EXT needs base=TAG and sizes=n1.n2...")
            sizes = _as_tuple(params.pop("sizes"))
            base = generate(FamilySpec(base_tag, tuple(params.items())))
            return extend_pk(base, sizes)
        simple = {
            "B0": gen_b0,
            "B1": gen_b1,
            "B21": gen_b21,
            "B22": gen_b22,
            "G1": gen_g1,
            "HL": gen_hl_block,
            "F": gen_f,
            "X": gen_x,
            "G5": gen_g5,
            "A": gen_a,
            "FIG4": gen_fig4,
            "CYCLE": gen_cycle,
        }
        if tag == "G1":
            if "n" in params:
                params["n_l"] = params.pop("n")
            return gen_g1(**_kwargs(params))
        if tag == "G2":
            return gen_g2(params.get("k", 5), allow_k4=bool(params.get("allow_k4", 0)))
        return simple[tag](**_kwargs(params))
    except TypeError as exc:
        raise ParameterError(f"bad parameters for {tag}: {exc}") from exc
