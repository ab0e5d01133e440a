"""Representations of a bound quiver algebra and their morphisms.

A representation assigns a rational vector space to every vertex and a
matrix to every arrow; relation matrices are checked to vanish on
construction, so an invalid module cannot be built.  Morphisms carry one
matrix per vertex and are checked to intertwine the arrow actions.

Decomposition follows the characteristic-zero route: radical of the
endomorphism ring by the trace form, splitting elements found through
minimal-polynomial factorisation, idempotents lifted through the
radical by the cubic Newton step ``e <- 3e^2 - 2e^3``.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction

import sympy

from .algebra import BoundQuiverAlgebra, Path
from .errors import PossibleDivisionAlgebra
from .linalg import Mat, col_basis, kernel_basis, quotient, rank, rref, solve


class Representation:
    __slots__ = ("algebra", "dims", "maps", "_key")

    def __init__(self, algebra: BoundQuiverAlgebra, dims, maps, validate: bool = True):
        self.algebra = algebra
        self.dims = {v: int(dims.get(v, 0)) for v in algebra.vertices}
        if any(d < 0 for d in self.dims.values()):
            raise ValueError("negative dimension")
        full_maps = {}
        for a in algebra.arrows:
            m = maps.get(a.name)
            if m is None:
                m = Mat.zeros(self.dims[a.target], self.dims[a.source])
            if (m.rows, m.cols) != (self.dims[a.target], self.dims[a.source]):
                raise ValueError(f"map for arrow {a.name} has shape {m.rows}x{m.cols}, "
                                 f"expected {self.dims[a.target]}x{self.dims[a.source]}")
            full_maps[a.name] = m
        self.maps = full_maps
        self._key = None
        if validate:
            self._check_relations()

    def _check_relations(self):
        for rel in self.algebra.relations:
            acc = None
            for coeff, arrows in rel.terms:
                src = self.algebra.quiver.arrow(arrows[0]).source
                term = self.eval_path(Path(src, arrows)).scale(coeff)
                acc = term if acc is None else acc + term
            if acc is not None and not acc.is_zero():
                raise ValueError("representation violates a relation")

    def eval_path(self, path: Path) -> Mat:
        """Matrix of a path: arrow maps composed in application order."""
        m = Mat.identity(self.dims[path.source])
        for name in path.arrows:
            m = self.maps[name] @ m
        return m

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def dim_vector(self) -> tuple[int, ...]:
        return tuple(self.dims[v] for v in self.algebra.vertices)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def __eq__(self, other):
        return (isinstance(other, Representation)
                and self.algebra is other.algebra
                and self.dims == other.dims
                and self.maps == other.maps)

    def __hash__(self):
        return hash((id(self.algebra), tuple(sorted(self.dims.items()))))

    def __repr__(self):
        return f"Representation(dims={self.dims})"

    def canonical_key(self):
        """Total order used to sort summands and rosters reproducibly."""
        if self._key is None:
            self._key = (self.total_dim, self.dim_vector(),
                         json.dumps(self.to_json(), sort_keys=True))
        return self._key

    def to_json(self):
        return {"dims": dict(sorted(self.dims.items())),
                "maps": {a.name: self.maps[a.name].to_json() for a in self.algebra.arrows}}

    @classmethod
    def from_json(cls, algebra: BoundQuiverAlgebra, data) -> "Representation":
        dims = {str(v): int(d) for v, d in data["dims"].items()}
        maps = {}
        for a in algebra.arrows:
            rows = dims.get(a.target, 0)
            cols = dims.get(a.source, 0)
            raw = data.get("maps", {}).get(a.name)
            if raw is None:
                continue
            maps[a.name] = Mat.from_json(raw, rows=rows, cols=cols)
        return cls(algebra, dims, maps)


class Morphism:
    __slots__ = ("source", "target", "components")

    def __init__(self, source: Representation, target: Representation, components,
                 validate: bool = True):
        if source.algebra is not target.algebra:
            raise ValueError("morphism between representations of different algebras")
        self.source = source
        self.target = target
        comps = {}
        for v in source.algebra.vertices:
            c = components.get(v)
            if c is None:
                c = Mat.zeros(target.dims[v], source.dims[v])
            if (c.rows, c.cols) != (target.dims[v], source.dims[v]):
                raise ValueError(f"component at {v} has wrong shape")
            comps[v] = c
        self.components = comps
        if validate:
            self._check_intertwines()

    def _check_intertwines(self):
        alg = self.source.algebra
        for a in alg.arrows:
            lhs = self.target.maps[a.name] @ self.components[a.source]
            rhs = self.components[a.target] @ self.source.maps[a.name]
            if lhs != rhs:
                raise ValueError(f"components do not intertwine arrow {a.name}")

    def __eq__(self, other):
        return (isinstance(other, Morphism)
                and self.source == other.source
                and self.target == other.target
                and self.components == other.components)

    def __repr__(self):
        return f"Morphism({self.source.dims} -> {self.target.dims})"

    def compose(self, first: "Morphism") -> "Morphism":
        """self after first."""
        if first.target is not self.source and first.target != self.source:
            raise ValueError("composition mismatch")
        comps = {v: self.components[v] @ first.components[v]
                 for v in self.source.algebra.vertices}
        return Morphism(first.source, self.target, comps, validate=False)

    def add(self, other: "Morphism") -> "Morphism":
        comps = {v: self.components[v] + other.components[v]
                 for v in self.source.algebra.vertices}
        return Morphism(self.source, self.target, comps, validate=False)

    def scale(self, c) -> "Morphism":
        return Morphism(self.source, self.target,
                        {v: m.scale(c) for v, m in self.components.items()},
                        validate=False)

    def is_injective(self) -> bool:
        return all(rank(c) == c.cols for c in self.components.values())

    def is_surjective(self) -> bool:
        return all(rank(c) == c.rows for c in self.components.values())

    def is_invertible(self) -> bool:
        return all(c.rows == c.cols and rank(c) == c.rows
                   for c in self.components.values())

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components.values())

    def to_json(self):
        return {v: self.components[v].to_json() for v in self.source.algebra.vertices}


def identity_morphism(m: Representation) -> Morphism:
    return Morphism(m, m, {v: Mat.identity(m.dims[v]) for v in m.algebra.vertices},
                    validate=False)


def zero_morphism(m: Representation, n: Representation) -> Morphism:
    return Morphism(m, n, {}, validate=False)


def zero_rep(algebra: BoundQuiverAlgebra) -> Representation:
    return Representation(algebra, {}, {}, validate=False)


class SES:
    """A short exact sequence, rank-certified at construction."""

    __slots__ = ("left", "middle", "right", "inject", "project")

    def __init__(self, inject: Morphism, project: Morphism):
        if inject.target is not project.source and inject.target != project.source:
            raise ValueError("inject and project do not share the middle term")
        self.left = inject.source
        self.middle = inject.target
        self.right = project.target
        self.inject = inject
        self.project = project
        self._certify()

    def _certify(self):
        if not self.inject.is_injective():
            raise ValueError("SES: inject is not injective")
        if not self.project.is_surjective():
            raise ValueError("SES: project is not surjective")
        if not self.project.compose(self.inject).is_zero():
            raise ValueError("SES: project o inject is nonzero")
        for v in self.middle.algebra.vertices:
            if self.left.dims[v] + self.right.dims[v] != self.middle.dims[v]:
                raise ValueError("SES: dimensions do not add")
            # image = kernel follows from exact rank bookkeeping
            if rank(self.inject.components[v]) + rank(self.project.components[v]) \
                    != self.middle.dims[v]:
                raise ValueError("SES: rank mismatch at a vertex")


# -- hom spaces ---------------------------------------------------------


def hom_basis(m: Representation, n: Representation) -> list[Morphism]:
    """Canonical basis of Hom(m, n) as solutions of the intertwining system."""
    if m.algebra is not n.algebra:
        raise ValueError("representations over different algebras")
    alg = m.algebra
    offsets = {}
    total = 0
    for v in alg.vertices:
        offsets[v] = total
        total += n.dims[v] * m.dims[v]
    if total == 0:
        return []
    rows = []
    for a in alg.arrows:
        i, j = a.source, a.target
        na, ma = n.maps[a.name], m.maps[a.name]
        for r in range(n.dims[j]):
            for c in range(m.dims[i]):
                row = [Fraction(0)] * total
                # (N_a phi_i)[r, c]
                for k in range(n.dims[i]):
                    coeff = na.entries[r][k]
                    if coeff != 0:
                        row[offsets[i] + k * m.dims[i] + c] += coeff
                # -(phi_j M_a)[r, c]
                for l in range(m.dims[j]):
                    coeff = ma.entries[l][c]
                    if coeff != 0:
                        row[offsets[j] + r * m.dims[j] + l] -= coeff
                if any(x != 0 for x in row):
                    rows.append(row)
    if rows:
        k = kernel_basis(Mat.from_rows(rows))
    else:
        k = Mat.identity(total)
    out = []
    for c in range(k.cols):
        comps = {}
        for v in alg.vertices:
            if n.dims[v] and m.dims[v]:
                base = offsets[v]
                comps[v] = Mat(n.dims[v], m.dims[v],
                               [[k[base + r * m.dims[v] + col, c]
                                 for col in range(m.dims[v])]
                                for r in range(n.dims[v])])
        out.append(Morphism(m, n, comps, validate=False))
    return out


def hom_dim(m: Representation, n: Representation) -> int:
    return len(hom_basis(m, n))


def flatten_morphism(f: Morphism) -> list[Fraction]:
    out = []
    for v in f.source.algebra.vertices:
        for row in f.components[v].entries:
            out.extend(row)
    return out


# -- constructions ------------------------------------------------------


def direct_sum_with_maps(algebra: BoundQuiverAlgebra, mods):
    """Block-diagonal sum with canonical injections and projections."""
    mods = list(mods)
    dims = {v: sum(m.dims[v] for m in mods) for v in algebra.vertices}
    maps = {a.name: Mat.block_diag([m.maps[a.name] for m in mods])
            for a in algebra.arrows}
    total = Representation(algebra, dims, maps, validate=False)
    injections, projections = [], []
    for idx, m in enumerate(mods):
        inj, proj = {}, {}
        for v in algebra.vertices:
            before = sum(x.dims[v] for x in mods[:idx])
            inj_m = Mat.zeros(dims[v], m.dims[v])
            if m.dims[v]:
                ent = [list(r) for r in inj_m.entries]
                for k in range(m.dims[v]):
                    ent[before + k][k] = Fraction(1)
                inj_m = Mat(dims[v], m.dims[v], ent)
            inj[v] = inj_m
            proj[v] = inj_m.transpose()
        injections.append(Morphism(m, total, inj, validate=False))
        projections.append(Morphism(total, m, proj, validate=False))
    return total, injections, projections


def direct_sum(algebra: BoundQuiverAlgebra, mods) -> Representation:
    return direct_sum_with_maps(algebra, mods)[0]


def subrep_from_subspaces(m: Representation, spans: dict) -> tuple[Representation, Morphism]:
    """The subrepresentation with prescribed (arrow-stable) vertex spans."""
    alg = m.algebra
    bases = {v: col_basis(spans.get(v, Mat.zeros(m.dims[v], 0))) for v in alg.vertices}
    dims = {v: bases[v].cols for v in alg.vertices}
    maps = {}
    for a in alg.arrows:
        rhs = m.maps[a.name] @ bases[a.source]
        sol = solve(bases[a.target], rhs)
        if sol is None:
            raise ValueError(f"subspaces are not stable under arrow {a.name}")
        maps[a.name] = sol
    sub = Representation(alg, dims, maps, validate=False)
    incl = Morphism(sub, m, dict(bases))
    return sub, incl


def quotient_rep(m: Representation, spans: dict) -> tuple[Representation, Morphism]:
    """Quotient by the (arrow-stable) vertex spans, with projection."""
    alg = m.algebra
    dims, projs = {}, {}
    for v in alg.vertices:
        d, p = quotient(m.dims[v], spans.get(v, Mat.zeros(m.dims[v], 0)))
        dims[v] = d
        projs[v] = p
    maps = {}
    for a in alg.arrows:
        rhs = (projs[a.target] @ m.maps[a.name]).transpose()
        sol = solve(projs[a.source].transpose(), rhs)
        if sol is None:
            raise ValueError(f"subspaces are not stable under arrow {a.name}")
        maps[a.name] = sol.transpose()
    quot = Representation(alg, dims, maps, validate=False)
    proj = Morphism(m, quot, projs)
    return quot, proj


def kernel(f: Morphism) -> tuple[Representation, Morphism]:
    spans = {v: kernel_basis(f.components[v]) for v in f.source.algebra.vertices}
    return subrep_from_subspaces(f.source, spans)


def image(f: Morphism) -> tuple[Representation, Morphism]:
    spans = {v: f.components[v] for v in f.source.algebra.vertices}
    return subrep_from_subspaces(f.target, spans)


def cokernel(f: Morphism) -> tuple[Representation, Morphism]:
    spans = {v: f.components[v] for v in f.source.algebra.vertices}
    return quotient_rep(f.target, spans)


def pushout(f: Morphism, g: Morphism):
    """Pushout of f: W -> N and g: W -> P along the shared source W.

    Returns ``(e, leg_n, leg_p)`` where ``e = (N + P) / {(f w, -g w)}``.
    """
    if f.source != g.source:
        raise ValueError("pushout legs must share their source")
    alg = f.source.algebra
    total, (inj_n, inj_p), _ = _sum_pair(alg, f.target, g.target)
    h = inj_n.compose(f).add(inj_p.compose(g).scale(-1))
    e, proj = cokernel(h)
    return e, proj.compose(inj_n), proj.compose(inj_p)


def _sum_pair(algebra, n, p):
    total, injs, projs = direct_sum_with_maps(algebra, [n, p])
    return total, injs, projs


# -- standard modules ---------------------------------------------------


def simple(algebra: BoundQuiverAlgebra, v: str) -> Representation:
    return Representation(algebra, {v: 1}, {}, validate=False)


def projective(algebra: BoundQuiverAlgebra, v: str) -> Representation:
    """P(v): basis the path classes starting at v, arrows acting by composition."""
    cache = algebra.__dict__.setdefault("_projective_cache", {})
    if v in cache:
        return cache[v]
    idx = {w: algebra.paths_between(v, w) for w in algebra.vertices}
    dims = {w: len(idx[w]) for w in algebra.vertices}
    maps = {}
    for a in algebra.arrows:
        src_list, tgt_list = idx[a.source], idx[a.target]
        pos = {b: r for r, b in enumerate(tgt_list)}
        (arrow_ix,) = [i for i, p in enumerate(algebra.basis) if p.arrows == (a.name,)]
        cols = []
        for b in src_list:
            prod = algebra.multiply_basis(arrow_ix, b)
            colv = [Fraction(0)] * len(tgt_list)
            for k, c in prod.items():
                colv[pos[k]] = c
            cols.append(colv)
        maps[a.name] = Mat(len(tgt_list), len(src_list),
                           [[cols[j][i] for j in range(len(src_list))]
                            for i in range(len(tgt_list))])
    cache[v] = Representation(algebra, dims, maps)
    return cache[v]


def projective_basis_paths(algebra: BoundQuiverAlgebra, v: str) -> dict[str, list[int]]:
    """Algebra-basis indices that coordinatize P(v) at each vertex."""
    return {w: algebra.paths_between(v, w) for w in algebra.vertices}


def dual(m: Representation) -> Representation:
    """The linear dual, a representation of the opposite algebra."""
    opp = m.algebra.opposite()
    maps = {a.name: m.maps[a.name].transpose() for a in m.algebra.arrows}
    return Representation(opp, dict(m.dims), maps)


def injective(algebra: BoundQuiverAlgebra, v: str) -> Representation:
    """I(v): the dual of the right projective at v."""
    return dual(projective(algebra.opposite(), v))


def regular_module(algebra: BoundQuiverAlgebra) -> Representation:
    return direct_sum(algebra, [projective(algebra, v) for v in algebra.vertices])


def hom_from_projective(algebra: BoundQuiverAlgebra, v: str, m: Representation,
                        vec: list[Fraction]) -> Morphism:
    """The morphism P(v) -> m sending the trivial-path generator to ``vec``."""
    pv = projective(algebra, v)
    idx = projective_basis_paths(algebra, v)
    target_col = Mat.column(vec)
    comps = {}
    for w in algebra.vertices:
        cols = []
        for b in idx[w]:
            path = algebra.basis[b]
            mat = m.eval_path(path)
            cols.append((mat @ target_col).col(0))
        comps[w] = Mat(m.dims[w], len(cols),
                       [[cols[j][i] for j in range(len(cols))] for i in range(m.dims[w])])
    return Morphism(pv, m, comps)


# -- endomorphism rings and decomposition --------------------------------


class _EndRing:
    """End(M) with multiplication table, trace-form radical and semisimple quotient."""

    def __init__(self, m: Representation):
        self.module = m
        self.basis = hom_basis(m, m)
        self.dim = len(self.basis)
        if self.dim == 0:
            return
        cols = [flatten_morphism(f) for f in self.basis]
        n = len(cols[0])
        self.bmat = Mat(n, self.dim, [[cols[j][i] for j in range(self.dim)] for i in range(n)])
        prods = []
        for f in self.basis:
            for g in self.basis:
                prods.append(flatten_morphism(f.compose(g)))
        rhs = Mat(n, len(prods), [[prods[j][i] for j in range(len(prods))] for i in range(n)])
        coords = solve(self.bmat, rhs)
        assert coords is not None, "End(M) must be closed under composition"
        d = self.dim
        self.table = [[[coords[k, i * d + j] for k in range(d)] for j in range(d)]
                      for i in range(d)]
        ident = solve(self.bmat, Mat.column(flatten_morphism(identity_morphism(m))))
        assert ident is not None
        self.one = [ident[k, 0] for k in range(d)]

    def multiply(self, x, y):
        d = self.dim
        out = [Fraction(0)] * d
        for i in range(d):
            if x[i] == 0:
                continue
            for j in range(d):
                if y[j] == 0:
                    continue
                c = x[i] * y[j]
                tab = self.table[i][j]
                for k in range(d):
                    if tab[k] != 0:
                        out[k] += c * tab[k]
        return out

    def radical(self) -> Mat:
        """Basis (columns) of rad End via the trace form tr(L_x L_y)."""
        d = self.dim
        tau = [sum(self.table[mm][k][k] for k in range(d)) for mm in range(d)]
        gram = [[sum(self.table[i][j][mm] * tau[mm] for mm in range(d)) for j in range(d)]
                for i in range(d)]
        return kernel_basis(Mat.from_rows(gram))

    def to_morphism(self, coords) -> Morphism:
        f = zero_morphism(self.module, self.module)
        for c, b in zip(coords, self.basis):
            if c != 0:
                f = f.add(b.scale(c))
        return f


class _Semisimple:
    """End/rad in complement coordinates, with induced multiplication."""

    def __init__(self, ring: _EndRing):
        self.ring = ring
        rad = ring.radical()
        self.rad_dim = rad.cols
        d = ring.dim
        pivots = set()
        if rad.cols:
            _, piv = rref(rad.transpose())
            pivots = set(piv)
        self.comp = [i for i in range(d) if i not in pivots]
        self.dim = len(self.comp)
        basis_cols = [rad.col(j) for j in range(rad.cols)]
        for i in self.comp:
            unit = [Fraction(0)] * d
            unit[i] = Fraction(1)
            basis_cols.append(unit)
        self.change = Mat(d, d, [[basis_cols[k][i] for k in range(d)] for i in range(d)])

    def project(self, coords):
        sol = solve(self.change, Mat.column(coords))
        assert sol is not None
        return [sol[self.rad_dim + k, 0] for k in range(self.dim)]

    def lift(self, s_coords):
        d = self.ring.dim
        out = [Fraction(0)] * d
        for k, i in enumerate(self.comp):
            out[i] = s_coords[k]
        return out

    def multiply(self, x, y):
        return self.project(self.ring.multiply(self.lift(x), self.lift(y)))

    def one(self):
        return self.project(self.ring.one)


def _min_poly(ss: _Semisimple, x):
    """Monic minimal polynomial of x in End/rad, as a Fraction coeff list.

    Coefficients are returned highest degree first.
    """
    powers = [ss.one()]
    current = ss.one()
    while True:
        current = ss.multiply(current, x)
        k = len(powers)
        cols = Mat(ss.dim, k, [[powers[j][i] for j in range(k)] for i in range(ss.dim)])
        sol = solve(cols, Mat.column(current))
        if sol is not None:
            coeffs = [Fraction(1)] + [-sol[k - 1 - i, 0] for i in range(k)]
            return coeffs
        powers.append(current)


def _coprime_split(coeffs):
    """Split a min poly into two coprime factors over Q, or None."""
    t = sympy.Symbol("t")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in coeffs],
                      t, domain="QQ")
    _, factors = poly.factor_list()
    if len(factors) < 2:
        return None
    f = factors[0][0] ** factors[0][1]
    g = sympy.Poly(1, t, domain="QQ")
    for base, mult in factors[1:]:
        g = g * base ** mult
    s, _, h = f.gcdex(g)
    assert h.degree() == 0
    s = s * sympy.Poly(sympy.Rational(1) / h.LC(), t, domain="QQ")
    e_poly = (s * f) % (f * g)
    return [Fraction(int(c.p), int(c.q)) for c in e_poly.all_coeffs()]


def _eval_poly(ss: _Semisimple, coeffs, x):
    acc = [Fraction(0)] * ss.dim
    for c in coeffs:
        acc = ss.multiply(acc, x)
        one = ss.one()
        acc = [a + c * o for a, o in zip(acc, one)]
    return acc


def _split_once(m: Representation, seed: int):
    """One nontrivial direct-summand split of m, or None if indecomposable.

    Raises PossibleDivisionAlgebra when End/rad has dimension > 1 but no
    candidate element yields a coprime minimal-polynomial split.
    """
    ring = _EndRing(m)
    ss = _Semisimple(ring)
    if ss.dim <= 1:
        return None
    candidates = []
    for k in range(ss.dim):
        unit = [Fraction(0)] * ss.dim
        unit[k] = Fraction(1)
        candidates.append(unit)
    rng = random.Random(seed)
    for _ in range(64):
        candidates.append([Fraction(rng.randint(-3, 3)) for _ in range(ss.dim)])
    for x in candidates:
        if all(c == 0 for c in x):
            continue
        mu = _min_poly(ss, x)
        e_coeffs = _coprime_split(mu)
        if e_coeffs is None:
            continue
        e_bar = _eval_poly(ss, e_coeffs, x)
        if all(c == 0 for c in e_bar) or e_bar == ss.one():
            continue
        e = ring.to_morphism(ss.lift(e_bar))
        for _ in range(64):
            e2 = e.compose(e)
            if e2 == e:
                break
            # Newton step doubles the radical-power accuracy
            e = e2.scale(3).add(e2.compose(e).scale(-2))
        else:
            raise AssertionError("idempotent lifting did not converge")
        img, _ = image(e)
        ker, _ = kernel(e)
        if img.total_dim == 0 or ker.total_dim == 0:
            continue
        return img, ker
    raise PossibleDivisionAlgebra(
        f"End/rad has dimension {ss.dim} but no splitting element was found")


def _indecomposable_summands(m: Representation, seed: int) -> list[Representation]:
    if m.total_dim == 0:
        return []
    split = _split_once(m, seed)
    if split is None:
        return [m]
    a, b = split
    return _indecomposable_summands(a, seed) + _indecomposable_summands(b, seed)


def decompose(m: Representation, seed: int = 0) -> list[tuple[Representation, int]]:
    """Krull-Schmidt decomposition: canonical (summand, multiplicity) list."""
    pieces = _indecomposable_summands(m, seed)
    pieces.sort(key=lambda r: r.canonical_key())
    grouped: list[tuple[Representation, int]] = []
    for piece in pieces:
        for k, (rep, count) in enumerate(grouped):
            ok, _ = is_isomorphic(rep, piece, seed)
            if ok:
                grouped[k] = (rep, count + 1)
                break
        else:
            grouped.append((piece, 1))
    return grouped


def is_isomorphic(m: Representation, n: Representation, seed: int = 0):
    """(found, witness): search Hom(m, n) for an invertible element.

    Deterministic given the seed; a returned witness is verified exactly,
    so a positive answer is unconditional.
    """
    if m.algebra is not n.algebra or m.dims != n.dims:
        return False, None
    if m.total_dim == 0:
        return True, zero_morphism(m, n)
    basis = hom_basis(m, n)
    if not basis:
        return False, None
    for f in basis:
        if f.is_invertible():
            return True, f
    rng = random.Random(seed)
    for attempt in range(64):
        spread = 1 if attempt < 16 else (3 if attempt < 48 else 9)
        f = zero_morphism(m, n)
        for b in basis:
            c = rng.randint(-spread, spread)
            if c:
                f = f.add(b.scale(c))
        if f.is_invertible():
            return True, f
    return False, None


def basic_summands(mods, seed: int = 0) -> list[Representation]:
    """One representative per isomorphism class, canonically ordered."""
    out: list[Representation] = []
    for m in sorted(mods, key=lambda r: r.canonical_key()):
        if m.is_zero():
            continue
        if not any(is_isomorphic(m, seen, seed)[0] for seen in out):
            out.append(m)
    return out


def split_off_summand(c: Representation, t: Representation) -> Representation | None:
    """The complement of one direct summand of c isomorphic to t, or None.

    Requires t indecomposable (local endomorphism ring): t is a summand
    of c iff some pair of a map t -> c and a map c -> t composes to an
    invertible endomorphism of t, in which case that pair yields an exact
    splitting idempotent.
    """
    if t.is_zero() or any(c.dims[v] < t.dims[v] for v in c.algebra.vertices):
        return None
    fs = hom_basis(t, c)
    gs = hom_basis(c, t)
    for g in gs:
        for f in fs:
            u = g.compose(f)
            if not u.is_invertible():
                continue
            u_inv = Morphism(t, t, {v: solve(u.components[v],
                                             Mat.identity(t.dims[v]))
                                    for v in t.algebra.vertices}, validate=False)
            e = f.compose(u_inv).compose(g)
            complement, _ = kernel(e)
            return complement
    return None


def in_add_of(m: Representation, classes, seed: int = 0) -> bool:
    """Whether m lies in add(classes); members must be indecomposable.

    Splits off copies of the classes until nothing is left (membership)
    or nothing splits (failure); complete because a nonzero remainder
    with no splittable class has a summand outside every class.
    """
    current = m
    while not current.is_zero():
        for t in classes:
            nxt = split_off_summand(current, t)
            if nxt is not None:
                current = nxt
                break
        else:
            return False
    return True


def add_equal(ms, ns, seed: int = 0) -> bool:
    """add(ms) == add(ns) as sets of indecomposable summand classes."""
    a = basic_summands([p for m in ms for p, _ in decompose(m, seed)], seed)
    b = basic_summands([p for n in ns for p, _ in decompose(n, seed)], seed)
    if len(a) != len(b):
        return False
    used = set()
    for x in a:
        hit = None
        for k, y in enumerate(b):
            if k not in used and is_isomorphic(x, y, seed)[0]:
                hit = k
                break
        if hit is None:
            return False
        used.add(hit)
    return True
