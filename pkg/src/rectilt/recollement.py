"""The module-category recollement of a triangular vertex split.

A split of the vertices into an inner part V' and an outer part V'' is
triangular when no path class runs from V' to V''.  The inner and outer
algebras are the full subquivers with their induced relations; the
bimodule tying them together is never materialised separately, it is
read off the glued algebra's crossing path classes.

Functor dictionary (modules as triples (X, Y)_f):

    i_star        X |-> (X, 0)          extension by zero
    i_shriek      (X, Y)_f |-> X        the inner part, a submodule
    i_upper_star  (X, Y)_f |-> Coker f  inner part of the quotient
    j_shriek      Y |-> (N (x) Y, Y)_1  tensor lift
    j_star_upper  (X, Y)_f |-> Y        the outer part
    j_star_lower  Y |-> (0, Y)          extension by zero
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import BoundQuiverAlgebra, Quiver, Relation, build_algebra
from .errors import NotTriangular
from .homology import tor1_right
from .linalg import Mat, col_basis, quotient, solve
from .rep import (
    Morphism,
    Representation,
    SES,
    hom_dim,
    is_isomorphic,
    quotient_rep,
    simple,
)


@dataclass
class RecollementContext:
    algebra: BoundQuiverAlgebra
    inner_vertices: tuple
    outer_vertices: tuple
    inner_algebra: BoundQuiverAlgebra
    outer_algebra: BoundQuiverAlgebra
    crossing_paths: list            # basis indices of V'' -> V' path classes
    _tensor_cache: dict = field(default_factory=dict, repr=False)

    def is_inner(self, v) -> bool:
        return v in self._inner_set

    def __post_init__(self):
        self._inner_set = set(self.inner_vertices)
        self._outer_set = set(self.outer_vertices)


def split_context(algebra: BoundQuiverAlgebra, outer_vertices) -> RecollementContext:
    """Verify triangularity and extract the inner/outer algebras."""
    outer = [str(v) for v in outer_vertices]
    vset = set(algebra.vertices)
    if not set(outer) <= vset:
        raise ValueError("outer vertices not in the algebra")
    outer_set = set(outer)
    inner = tuple(v for v in algebra.vertices if v not in outer_set)
    outer = tuple(v for v in algebra.vertices if v in outer_set)
    inner_set = set(inner)

    crossing = []
    for i, p in enumerate(algebra.basis):
        src, tgt = p.source, algebra.basis_target(i)
        if src in inner_set and tgt in outer_set:
            raise NotTriangular(
                f"path class {p.arrows or p.source} runs from the inner part "
                f"to the outer part")
        if src in outer_set and tgt in inner_set:
            crossing.append(i)

    def subalgebra(part):
        part_set = set(part)
        arrows = [(a.name, a.source, a.target) for a in algebra.arrows
                  if a.source in part_set and a.target in part_set]
        arrow_names = {a[0] for a in arrows}
        rels = [r for r in algebra.relations
                if all(set(p) <= arrow_names for _, p in r.terms)]
        sub = build_algebra(Quiver(part, arrows), rels, algebra.length_cap)
        inside = [i for i, p in enumerate(algebra.basis)
                  if p.source in part_set and algebra.basis_target(i) in part_set]
        assert sub.dimension == len(inside), \
            "subalgebra basis must match the inside path classes"
        return sub

    return RecollementContext(algebra, inner, outer,
                              subalgebra(inner), subalgebra(outer), crossing)


# -- restrictions and zero extensions ------------------------------------


def i_shriek(ctx: RecollementContext, m: Representation) -> Representation:
    """The inner part; a submodule since arrows only run outer -> inner."""
    alg = ctx.inner_algebra
    dims = {v: m.dims[v] for v in ctx.inner_vertices}
    maps = {a.name: m.maps[a.name] for a in alg.arrows}
    return Representation(alg, dims, maps, validate=False)


def j_star_upper(ctx: RecollementContext, m: Representation) -> Representation:
    alg = ctx.outer_algebra
    dims = {v: m.dims[v] for v in ctx.outer_vertices}
    maps = {a.name: m.maps[a.name] for a in alg.arrows}
    return Representation(alg, dims, maps, validate=False)


def i_star(ctx: RecollementContext, x: Representation) -> Representation:
    if x.algebra is not ctx.inner_algebra:
        raise ValueError("i_star expects a module over the inner algebra")
    dims = {v: x.dims[v] for v in ctx.inner_vertices}
    maps = {a.name: x.maps[a.name] for a in ctx.inner_algebra.arrows}
    return Representation(ctx.algebra, dims, maps, validate=False)


def j_star_lower(ctx: RecollementContext, y: Representation) -> Representation:
    if y.algebra is not ctx.outer_algebra:
        raise ValueError("j_star_lower expects a module over the outer algebra")
    dims = {v: y.dims[v] for v in ctx.outer_vertices}
    maps = {a.name: y.maps[a.name] for a in ctx.outer_algebra.arrows}
    return Representation(ctx.algebra, dims, maps, validate=False)


def i_upper_star(ctx: RecollementContext, m: Representation) -> Representation:
    """Quotient by the submodule generated by the outer components."""
    alg = m.algebra
    spans = {v: (Mat.identity(m.dims[v]) if v in ctx._outer_set
                 else Mat.zeros(m.dims[v], 0)) for v in alg.vertices}
    changed = True
    while changed:
        changed = False
        for a in alg.arrows:
            pushed = m.maps[a.name] @ spans[a.source]
            joined = col_basis(Mat.hstack([spans[a.target], pushed]))
            if joined.cols != spans[a.target].cols:
                spans[a.target] = joined
                changed = True
    quot, _ = quotient_rep(m, spans)
    return i_shriek(ctx, quot)


# -- the tensor lift ------------------------------------------------------


class _TensorData:
    """Presentation of (N (x) Y)_v for all inner v: spaces and projections."""

    def __init__(self, ctx: RecollementContext, y: Representation):
        alg = ctx.algebra
        self.ctx = ctx
        self.y = y
        self.per_vertex = {v: [] for v in ctx.inner_vertices}   # (basis idx, source w)
        for b in ctx.crossing_paths:
            tgt = alg.basis_target(b)
            self.per_vertex[tgt].append((b, alg.basis[b].source))
        self.offset = {}
        self.raw_dim = {}
        for v in ctx.inner_vertices:
            off = {}
            total = 0
            for b, w in self.per_vertex[v]:
                off[b] = total
                total += y.dims[w]
            self.offset[v] = off
            self.raw_dim[v] = total
        self.dim = {}
        self.proj = {}
        for v in ctx.inner_vertices:
            rows = self._balancing_rows(v)
            span = Mat.from_rows(rows).transpose() if rows \
                else Mat.zeros(self.raw_dim[v], 0)
            d, p = quotient(self.raw_dim[v], span)
            self.dim[v] = d
            self.proj[v] = p

    def _balancing_rows(self, v):
        alg = self.ctx.algebra
        y = self.y
        rows = []
        for a in self.ctx.outer_algebra.arrows:
            i, j = a.source, a.target
            (a_ix,) = [k for k, p in enumerate(alg.basis) if p.arrows == (a.name,)]
            ya = y.maps[a.name]
            for n, w in self.per_vertex[v]:
                if w != j:
                    continue
                shifted = alg.multiply_basis(n, a_ix)   # crossing paths i -> v
                for q in range(y.dims[i]):
                    row = [Fraction(0)] * self.raw_dim[v]
                    for mm, c in shifted.items():
                        row[self.offset[v][mm] + q] += c
                    for t in range(y.dims[j]):
                        if ya.entries[t][q] != 0:
                            row[self.offset[v][n] + t] -= ya.entries[t][q]
                    if any(x != 0 for x in row):
                        rows.append(row)
        return rows

    def embed(self, v, b, q):
        """Raw coordinate vector of (path b) (x) (y basis q) at vertex v."""
        vec = [Fraction(0)] * self.raw_dim[v]
        vec[self.offset[v][b] + q] = Fraction(1)
        return Mat.column(vec)

    def inner_arrow_map(self, arrow) -> Mat:
        """Induced map (N (x) Y)_src -> (N (x) Y)_tgt for an inner arrow."""
        alg = self.ctx.algebra
        v, v2 = arrow.source, arrow.target
        (b_ix,) = [k for k, p in enumerate(alg.basis) if p.arrows == (arrow.name,)]
        big = [[Fraction(0)] * self.raw_dim[v] for _ in range(self.raw_dim[v2])]
        for n, w in self.per_vertex[v]:
            shifted = alg.multiply_basis(b_ix, n)       # crossing paths w -> v2
            for mm, c in shifted.items():
                for q in range(self.y.dims[w]):
                    big[self.offset[v2][mm] + q][self.offset[v][n] + q] += c
        bigmat = Mat(self.raw_dim[v2], self.raw_dim[v], big)
        rhs = (self.proj[v2] @ bigmat).transpose()
        sol = solve(self.proj[v].transpose(), rhs)
        assert sol is not None, "left multiplication must respect balancing"
        return sol.transpose()


def _tensor_data(ctx: RecollementContext, y: Representation) -> _TensorData:
    key = id(y)
    cached = ctx._tensor_cache.get(key)
    if cached is None or cached.y is not y:
        cached = _TensorData(ctx, y)
        ctx._tensor_cache.clear()
        ctx._tensor_cache[key] = cached
    return cached


def j_shriek(ctx: RecollementContext, y: Representation) -> Representation:
    """(N (x) Y, Y) with identity structure map."""
    if y.algebra is not ctx.outer_algebra:
        raise ValueError("j_shriek expects a module over the outer algebra")
    td = _tensor_data(ctx, y)
    dims = {}
    maps = {}
    for v in ctx.inner_vertices:
        dims[v] = td.dim[v]
    for w in ctx.outer_vertices:
        dims[w] = y.dims[w]
    for a in ctx.outer_algebra.arrows:
        maps[a.name] = y.maps[a.name]
    for a in ctx.algebra.arrows:
        if a.source in ctx._inner_set and a.target in ctx._inner_set:
            maps[a.name] = td.inner_arrow_map(a)
        elif a.source in ctx._outer_set and a.target in ctx._inner_set:
            (c_ix,) = [k for k, p in enumerate(ctx.algebra.basis)
                       if p.arrows == (a.name,)]
            cols = [(td.proj[a.target] @ td.embed(a.target, c_ix, q)).col(0)
                    for q in range(y.dims[a.source])]
            maps[a.name] = Mat(td.dim[a.target], y.dims[a.source],
                               [[cols[j][i] for j in range(len(cols))]
                                for i in range(td.dim[a.target])])
    return Representation(ctx.algebra, dims, maps)


def tensor_rep(ctx: RecollementContext, y: Representation) -> Representation:
    """N (x) Y as a module over the inner algebra."""
    return i_shriek(ctx, j_shriek(ctx, y))


# -- triples ---------------------------------------------------------------


def from_triple(ctx: RecollementContext, x: Representation, y: Representation,
                f: Morphism) -> Representation:
    """Assemble the module (X, Y)_f from a structure map f: N (x) Y -> X."""
    if f.target != x:
        raise ValueError("structure map must land in the inner module")
    td = _tensor_data(ctx, y)
    dims = {}
    maps = {}
    for v in ctx.inner_vertices:
        dims[v] = x.dims[v]
    for w in ctx.outer_vertices:
        dims[w] = y.dims[w]
    for a in ctx.inner_algebra.arrows:
        maps[a.name] = x.maps[a.name]
    for a in ctx.outer_algebra.arrows:
        maps[a.name] = y.maps[a.name]
    for a in ctx.algebra.arrows:
        if a.source in ctx._outer_set and a.target in ctx._inner_set:
            (c_ix,) = [k for k, p in enumerate(ctx.algebra.basis)
                       if p.arrows == (a.name,)]
            v = a.target
            cols = [(f.components[v] @ td.proj[v] @ td.embed(v, c_ix, q)).col(0)
                    for q in range(y.dims[a.source])]
            maps[a.name] = Mat(x.dims[v], y.dims[a.source],
                               [[cols[j][i] for j in range(len(cols))]
                                for i in range(x.dims[v])])
    return Representation(ctx.algebra, dims, maps)


def to_triple(ctx: RecollementContext, m: Representation):
    """(X, Y, f) with X the inner part, Y the outer part, f the action map."""
    x = i_shriek(ctx, m)
    y = j_star_upper(ctx, m)
    td = _tensor_data(ctx, y)
    comps = {}
    for v in ctx.inner_vertices:
        cols = []
        for n, w in td.per_vertex[v]:
            action = m.eval_path(ctx.algebra.basis[n])
            for q in range(y.dims[w]):
                unit = [Fraction(0)] * y.dims[w]
                unit[q] = Fraction(1)
                cols.append((action @ Mat.column(unit)).col(0))
        big = Mat(m.dims[v], td.raw_dim[v],
                  [[cols[j][i] for j in range(len(cols))] for i in range(m.dims[v])])
        sol = solve(td.proj[v].transpose(), big.transpose())
        assert sol is not None, "action map must factor through the balancing quotient"
        comps[v] = sol.transpose()
    f = Morphism(tensor_rep(ctx, y), x, comps)
    return x, y, f


# -- canonical sequence and reports -----------------------------------------


def canonical_sequence(ctx: RecollementContext, m: Representation) -> SES:
    """0 -> i_star i_shriek M -> M -> j_star_lower j_star_upper M -> 0."""
    left = i_star(ctx, i_shriek(ctx, m))
    right = j_star_lower(ctx, j_star_upper(ctx, m))
    inject = Morphism(left, m,
                      {v: Mat.identity(m.dims[v]) for v in ctx.inner_vertices})
    project = Morphism(m, right,
                       {w: Mat.identity(m.dims[w]) for w in ctx.outer_vertices})
    return SES(inject, project)


def bimodule_right(ctx: RecollementContext) -> Representation:
    """The crossing bimodule as a right outer-algebra module."""
    alg = ctx.algebra
    opp = ctx.outer_algebra.opposite()
    by_source = {w: [b for b in ctx.crossing_paths if alg.basis[b].source == w]
                 for w in ctx.outer_vertices}
    dims = {w: len(by_source[w]) for w in ctx.outer_vertices}
    maps = {}
    for a in ctx.outer_algebra.arrows:
        i, j = a.source, a.target     # right action by a: N_j -> N_i
        (a_ix,) = [k for k, p in enumerate(alg.basis) if p.arrows == (a.name,)]
        pos = {b: r for r, b in enumerate(by_source[i])}
        cols = []
        for n in by_source[j]:
            prod = alg.multiply_basis(n, a_ix)
            col = [Fraction(0)] * dims[i]
            for mm, c in prod.items():
                col[pos[mm]] = c
            cols.append(col)
        maps[a.name] = Mat(dims[i], dims[j],
                           [[cols[q][r] for q in range(dims[j])] for r in range(dims[i])])
    return Representation(opp, dims, maps)


def quotient_right_module(ctx: RecollementContext) -> Representation:
    """The inner algebra as a right module over the whole algebra."""
    alg = ctx.algebra
    opp = alg.opposite()
    inner_paths = {v: [] for v in alg.vertices}
    for b, p in enumerate(alg.basis):
        if p.source in ctx._inner_set and alg.basis_target(b) in ctx._inner_set:
            inner_paths[p.source].append(b)
    dims = {v: len(inner_paths[v]) for v in alg.vertices}
    maps = {}
    for a in alg.arrows:
        i, j = a.source, a.target      # right action by a: Q_j -> Q_i
        (a_ix,) = [k for k, p in enumerate(alg.basis) if p.arrows == (a.name,)]
        pos = {b: r for r, b in enumerate(inner_paths[i])}
        cols = []
        for n in inner_paths[j]:
            prod = alg.multiply_basis(n, a_ix)
            col = [Fraction(0)] * dims[i]
            for mm, c in prod.items():
                if mm in pos:          # crossing products die in the quotient
                    col[pos[mm]] = c
            cols.append(col)
        maps[a.name] = Mat(dims[i], dims[j],
                           [[cols[q][r] for q in range(dims[j])] for r in range(dims[i])])
    return Representation(opp, dims, maps)


@dataclass
class ExactnessReport:
    structural: dict
    j_shriek_tor: dict
    i_upper_star_tor: dict

    @property
    def j_shriek_exact(self) -> bool:
        return all(v == 0 for v in self.j_shriek_tor.values())

    @property
    def i_upper_star_exact(self) -> bool:
        return all(v == 0 for v in self.i_upper_star_tor.values())

    def functor_exact(self, name: str) -> bool:
        if name in self.structural:
            return self.structural[name]
        return {"j_!": self.j_shriek_exact, "i*": self.i_upper_star_exact}[name]

    def to_json(self):
        return {
            "structural": self.structural,
            "j_shriek_tor1_on_simples": self.j_shriek_tor,
            "i_upper_star_tor1_on_simples": self.i_upper_star_tor,
            "exact": {
                "i*": self.i_upper_star_exact,
                "i_*": True,
                "i!": True,
                "j_!": self.j_shriek_exact,
                "j*": True,
                "j_*": True,
            },
        }


def check_exactness(ctx: RecollementContext) -> ExactnessReport:
    """Tor_1 certificates against all simples; restrictions are exact as built."""
    nright = bimodule_right(ctx)
    jtor = {w: tor1_right(nright, simple(ctx.outer_algebra, w))
            for w in ctx.outer_vertices}
    qright = quotient_right_module(ctx)
    itor = {v: tor1_right(qright, simple(ctx.algebra, v))
            for v in ctx.algebra.vertices}
    structural = {"i_*": True, "i!": True, "j*": True, "j_*": True}
    return ExactnessReport(structural, jtor, itor)


def verify_recollement_identities(ctx: RecollementContext, lambda_samples,
                                  inner_samples, outer_samples, seed: int = 0):
    """Unit/counit isomorphisms, vanishing composites, adjunction dimensions."""
    checks = []

    def record(name, ok, detail=""):
        checks.append({"check": name, "pass": bool(ok), "detail": detail})

    for y in outer_samples:
        record("i_upper_star(j_shriek Y) = 0",
               i_upper_star(ctx, j_shriek(ctx, y)).is_zero())
        record("i_shriek(j_star_lower Y) = 0",
               i_shriek(ctx, j_star_lower(ctx, y)).is_zero())
        record("j_star_upper(j_shriek Y) iso Y",
               is_isomorphic(j_star_upper(ctx, j_shriek(ctx, y)), y, seed)[0])
        record("j_star_upper(j_star_lower Y) iso Y",
               is_isomorphic(j_star_upper(ctx, j_star_lower(ctx, y)), y, seed)[0])
    for x in inner_samples:
        record("i_upper_star(i_star X) iso X",
               is_isomorphic(i_upper_star(ctx, i_star(ctx, x)), x, seed)[0])
        record("i_shriek(i_star X) iso X",
               is_isomorphic(i_shriek(ctx, i_star(ctx, x)), x, seed)[0])
    for m in lambda_samples:
        for y in outer_samples:
            record("dim Hom(j_! Y, M) = dim Hom(Y, j* M)",
                   hom_dim(j_shriek(ctx, y), m) == hom_dim(y, j_star_upper(ctx, m)))
            record("dim Hom(j* M, Y) = dim Hom(M, j_* Y)",
                   hom_dim(j_star_upper(ctx, m), y) == hom_dim(m, j_star_lower(ctx, y)))
        for x in inner_samples:
            record("dim Hom(i* M, X) = dim Hom(M, i_* X)",
                   hom_dim(i_upper_star(ctx, m), x) == hom_dim(m, i_star(ctx, x)))
            record("dim Hom(i_* X, M) = dim Hom(X, i! M)",
                   hom_dim(i_star(ctx, x), m) == hom_dim(x, i_shriek(ctx, m)))
    return {"checks": checks, "all_pass": all(c["pass"] for c in checks)}


FUNCTOR_NAMES = ("i*", "i_*", "i!", "j_!", "j*", "j_*")


def apply_functor(ctx: RecollementContext, name: str, m: Representation) -> Representation:
    if name == "i*":
        return i_upper_star(ctx, m)
    if name == "i_*":
        return i_star(ctx, m)
    if name == "i!":
        return i_shriek(ctx, m)
    if name == "j_!":
        return j_shriek(ctx, m)
    if name == "j*":
        return j_star_upper(ctx, m)
    if name == "j_*":
        return j_star_lower(ctx, m)
    raise ValueError(f"unknown functor {name!r}; expected one of {FUNCTOR_NAMES}")
