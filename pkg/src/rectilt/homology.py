"""Projective covers, Ext/Tor, the AR translate, and roster enumeration.

Ext^1 classes are realized through the syzygy: a cocycle is a morphism
Omega -> N modulo restrictions of P0 -> N, and the extension with that
class is the pushout of Omega -> P0 along the cocycle.  Tor is computed
against right modules, which are stored as representations of the
opposite algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import BoundQuiverAlgebra, Path
from .errors import CapExceeded
from .linalg import Mat, quotient, rank, solve
from .rep import (
    Morphism,
    Representation,
    SES,
    cokernel,
    direct_sum_with_maps,
    dual,
    flatten_morphism,
    hom_basis,
    hom_from_projective,
    identity_morphism,
    is_isomorphic,
    kernel,
    projective,
    projective_basis_paths,
    pushout,
    quotient_rep,
    subrep_from_subspaces,
    zero_morphism,
    zero_rep,
)


# -- radical and top ------------------------------------------------------


def _arrow_image_spans(m: Representation) -> dict:
    alg = m.algebra
    spans = {}
    for v in alg.vertices:
        cols = [m.maps[a.name] for a in alg.arrows if a.target == v]
        spans[v] = Mat.hstack(cols, rows=m.dims[v]) if cols else Mat.zeros(m.dims[v], 0)
    return spans


def radical(m: Representation) -> tuple[Representation, Morphism]:
    """rad M: at each vertex the sum of incoming arrow images."""
    return subrep_from_subspaces(m, _arrow_image_spans(m))


def top(m: Representation) -> tuple[Representation, Morphism]:
    """M / rad M with its projection; semisimple."""
    return quotient_rep(m, _arrow_image_spans(m))


# -- projective presentations ---------------------------------------------


@dataclass
class ProjectivePresentation:
    module: Representation
    cover: Representation            # P0
    surjection: Morphism             # P0 ->> M
    syzygy: Representation           # Omega
    inclusion: Morphism              # Omega -> P0
    cover_vertices: list[str]        # one entry per indecomposable summand of P0
    second_cover: Representation | None = None     # P1
    second_map: Morphism | None = None             # P1 -> P0
    second_vertices: list[str] = field(default_factory=list)


def projective_cover(m: Representation) -> tuple[Representation, Morphism, list[str]]:
    """Minimal cover: one P(v) per top basis vector, mapped through lifted tops."""
    alg = m.algebra
    t, proj = top(m)
    pieces = []
    vertices = []
    for v in alg.vertices:
        for k in range(t.dims[v]):
            unit = Mat.zeros(t.dims[v], 1)
            ent = [list(r) for r in unit.entries]
            ent[k][0] = Fraction(1)
            unit = Mat(t.dims[v], 1, ent)
            gen = solve(proj.components[v], unit)
            assert gen is not None, "top projection must be surjective"
            pieces.append(hom_from_projective(alg, v, m, gen.col(0)))
            vertices.append(v)
    if not pieces:
        z = zero_rep(alg)
        return z, zero_morphism(z, m), []
    p0, injs, _ = direct_sum_with_maps(alg, [f.source for f in pieces])
    comps = {}
    for v in alg.vertices:
        blocks = [f.components[v] for f in pieces]
        comps[v] = Mat.hstack(blocks, rows=m.dims[v])
    surj = Morphism(p0, m, comps)
    assert surj.is_surjective(), "projective cover failed to surject"
    return p0, surj, vertices


def min_presentation(m: Representation, with_second: bool = False) -> ProjectivePresentation:
    p0, surj, vertices = projective_cover(m)
    omega, incl = kernel(surj)
    pres = ProjectivePresentation(m, p0, surj, omega, incl, vertices)
    if with_second:
        p1, surj1, verts1 = projective_cover(omega)
        pres.second_cover = p1
        pres.second_map = incl.compose(surj1)
        pres.second_vertices = verts1
    return pres


def proj_dim(m: Representation, cap: int | None = None) -> int:
    """Length of the minimal projective resolution; CapExceeded past ``cap``."""
    if cap is None:
        cap = m.algebra.dimension
    current = m
    d = 0
    while True:
        if current.is_zero():
            return max(d - 1, 0)
        _, surj, _ = projective_cover(current)
        omega, _ = kernel(surj)
        if omega.is_zero():
            return d
        if d + 1 > cap:
            raise CapExceeded(f"projective resolution exceeds {cap} steps")
        current = omega
        d += 1


# -- Ext ---------------------------------------------------------------------


@dataclass
class ExtSpace:
    source: Representation
    coefficient: Representation
    presentation: ProjectivePresentation
    dimension: int
    cocycles: list[Morphism]          # Omega -> N, not in the image of restriction


def ext1(m: Representation, n: Representation) -> ExtSpace:
    """Ext^1(m, n) = coker(Hom(P0, n) -> Hom(Omega, n))."""
    pres = min_presentation(m)
    omega_basis = hom_basis(pres.syzygy, n)
    if not omega_basis:
        return ExtSpace(m, n, pres, 0, [])
    p0_basis = hom_basis(pres.cover, n)
    w = len(omega_basis)
    wmat = Mat.from_rows([flatten_morphism(f) for f in omega_basis]).transpose()
    if p0_basis:
        restricted = [flatten_morphism(f.compose(pres.inclusion)) for f in p0_basis]
        rmat_flat = Mat.from_rows(restricted).transpose()
        coords = solve(wmat, rmat_flat)
        assert coords is not None
    else:
        coords = Mat.zeros(w, 0)
    dim, proj = quotient(w, coords)
    # cocycle representatives: the complement coordinates picked by the quotient
    reps = []
    for k in range(dim):
        unit = Mat.zeros(dim, 1)
        ent = [list(r) for r in unit.entries]
        ent[k][0] = Fraction(1)
        sol = solve(proj, Mat(dim, 1, ent))
        assert sol is not None
        f = zero_morphism(pres.syzygy, n)
        for i in range(w):
            if sol[i, 0] != 0:
                f = f.add(omega_basis[i].scale(sol[i, 0]))
        reps.append(f)
    return ExtSpace(m, n, pres, dim, reps)


def ext1_dim(m: Representation, n: Representation) -> int:
    return ext1(m, n).dimension


def _pushout_extension(pres: ProjectivePresentation, cocycle: Morphism) -> SES:
    """0 -> N -> E -> M -> 0 from a cocycle Omega -> N via pushout."""
    mid, leg_n, leg_p0 = pushout(cocycle, pres.inclusion)
    # the unique h: mid -> M with h o leg_p0 = surjection, h o leg_n = 0
    candidates = hom_basis(mid, pres.module)
    rows = [flatten_morphism(f.compose(leg_p0)) + flatten_morphism(f.compose(leg_n))
            for f in candidates]
    want = flatten_morphism(pres.surjection) + flatten_morphism(
        zero_morphism(cocycle.target, pres.module))
    sol = solve(Mat.from_rows(rows).transpose(), Mat.column(want)) if rows else None
    assert sol is not None, "extension middle term must map onto the source"
    target = zero_morphism(mid, pres.module)
    for i, f in enumerate(candidates):
        if sol[i, 0] != 0:
            target = target.add(f.scale(sol[i, 0]))
    return SES(leg_n, target)


def realize_extension(e: ExtSpace, coeffs) -> SES:
    """The extension of e.source by e.coefficient with the given class."""
    coeffs = [Fraction(c) for c in coeffs]
    if len(coeffs) != e.dimension:
        raise ValueError("coefficient list does not match Ext dimension")
    cocycle = zero_morphism(e.presentation.syzygy, e.coefficient)
    for c, f in zip(coeffs, e.cocycles):
        if c:
            cocycle = cocycle.add(f.scale(c))
    return _pushout_extension(e.presentation, cocycle)


def universal_extension(e: ExtSpace) -> SES:
    """One extension 0 -> N^n -> E -> M -> 0 realizing the whole basis.

    The middle term has no further extensions by N: each basis class
    dies after pushing out along the matching projection N^n -> N.
    """
    n = e.dimension
    if n == 0:
        # degenerate: the split sequence 0 -> 0 -> M -> M -> 0
        zero = zero_rep(e.source.algebra)
        return SES(zero_morphism(zero, e.source), identity_morphism(e.source))
    power, injs, _ = direct_sum_with_maps(e.coefficient.algebra, [e.coefficient] * n)
    combined = zero_morphism(e.presentation.syzygy, power)
    for inj, f in zip(injs, e.cocycles):
        combined = combined.add(inj.compose(f))
    return _pushout_extension(e.presentation, combined)


def is_split(ses: SES) -> bool:
    """Split iff the projection admits a section, found by linear solving."""
    cands = hom_basis(ses.right, ses.middle)
    if not cands:
        return ses.right.is_zero()
    rows = [flatten_morphism(ses.project.compose(f)) for f in cands]
    want = flatten_morphism(identity_morphism(ses.right))
    return solve(Mat.from_rows(rows).transpose(), Mat.column(want)) is not None


def ext_k(m: Representation, n: Representation, k: int, cap: int | None = None) -> int:
    """dim Ext^k via Hom applied to the minimal projective resolution."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if cap is None:
        cap = m.algebra.dimension + k + 1
    if k + 1 > cap:
        raise CapExceeded("resolution exceeded the configured step cap")
    # minimal resolution P_0 <- P_1 <- ... <- P_{k+1} (padded with zeros)
    covers = []
    diffs = []   # diffs[i]: P_{i+1} -> P_i
    current = m
    incl_prev = None
    for _ in range(k + 2):
        if current.is_zero():
            break
        p, surj, _ = projective_cover(current)
        omega, incl = kernel(surj)
        if covers:
            diffs.append(incl_prev.compose(surj))
        covers.append(p)
        incl_prev = incl
        current = omega
    zero = zero_rep(m.algebra)
    while len(covers) < k + 2:
        covers.append(zero)
    while len(diffs) < k + 1:
        diffs.append(zero_morphism(covers[len(diffs) + 1], covers[len(diffs)]))

    def dmatrix(i):
        """Hom(P_i, n) -> Hom(P_{i+1}, n), precomposition with diffs[i]."""
        dom = hom_basis(covers[i], n)
        cod = hom_basis(covers[i + 1], n)
        if not dom or not cod:
            return Mat.zeros(len(cod), len(dom))
        cmat = Mat.from_rows([flatten_morphism(f) for f in cod]).transpose()
        cols = [flatten_morphism(f.compose(diffs[i])) for f in dom]
        sol = solve(cmat, Mat.from_rows(cols).transpose())
        assert sol is not None
        return sol

    if k == 0:
        return len(hom_basis(covers[0], n)) - rank(dmatrix(0))
    return len(hom_basis(covers[k], n)) - rank(dmatrix(k)) - rank(dmatrix(k - 1))


# -- tensor products and Tor ------------------------------------------------


def tensor_dim_data(nright: Representation, x: Representation):
    """Quotient data for N (x)_A X with N a representation of A^op."""
    alg = x.algebra
    if nright.algebra is not alg.opposite():
        raise ValueError("left factor must be a representation of the opposite algebra")
    offsets = {}
    total = 0
    for v in alg.vertices:
        offsets[v] = total
        total += nright.dims[v] * x.dims[v]
    rows = []
    for a in alg.arrows:
        i, j = a.source, a.target
        na = nright.maps[a.name]          # N_j -> N_i (right action by a)
        xa = x.maps[a.name]               # X_i -> X_j
        for p in range(nright.dims[j]):
            for q in range(x.dims[i]):
                row = [Fraction(0)] * total
                for r in range(nright.dims[i]):
                    c = na.entries[r][p]
                    if c != 0:
                        row[offsets[i] + r * x.dims[i] + q] += c
                for t in range(x.dims[j]):
                    c = xa.entries[t][q]
                    if c != 0:
                        row[offsets[j] + p * x.dims[j] + t] -= c
                if any(v != 0 for v in row):
                    rows.append(row)
    span = Mat.from_rows(rows).transpose() if rows else Mat.zeros(total, 0)
    dim, proj = quotient(total, span)
    return dim, proj, offsets, total


def tensor_dim(nright: Representation, x: Representation) -> int:
    return tensor_dim_data(nright, x)[0]


def tensor_map(nright: Representation, f: Morphism):
    """(dim_src, dim_tgt, matrix of N (x) f)."""
    dsrc, psrc, off_src, tot_src = tensor_dim_data(nright, f.source)
    dtgt, ptgt, off_tgt, tot_tgt = tensor_dim_data(nright, f.target)
    big = [[Fraction(0)] * tot_src for _ in range(tot_tgt)]
    for v in f.source.algebra.vertices:
        nv = nright.dims[v]
        fv = f.components[v]
        for p in range(nv):
            for r in range(fv.rows):
                for c in range(fv.cols):
                    if fv.entries[r][c] != 0:
                        big[off_tgt[v] + p * fv.rows + r][off_src[v] + p * fv.cols + c] \
                            = fv.entries[r][c]
    bigmat = Mat(tot_tgt, tot_src, big)
    rhs = (ptgt @ bigmat).transpose()
    sol = solve(psrc.transpose(), rhs)
    assert sol is not None, "tensor of a morphism must descend to the quotients"
    return dsrc, dtgt, sol.transpose()


def tor1_right(nright: Representation, s: Representation) -> int:
    """dim Tor_1(N, S) = dim ker(N (x) Omega -> N (x) P0)."""
    pres = min_presentation(s)
    if pres.syzygy.is_zero():
        return 0
    dsrc, _, mat = tensor_map(nright, pres.inclusion)
    return dsrc - rank(mat)


# -- transpose and the AR translate ------------------------------------------


def transpose(m: Representation) -> Representation:
    """Tr M over the opposite algebra, from a minimal presentation.

    Writes the presentation matrix P1 -> P0 as path-class coefficients;
    Hom(-, A) turns those right multiplications into left multiplications
    between the dual projectives, and Tr M is the cokernel.
    """
    alg = m.algebra
    opp = alg.opposite()
    pres = min_presentation(m, with_second=True)
    p0_verts = pres.cover_vertices
    p1_verts = pres.second_vertices
    if not p1_verts:
        return zero_rep(opp)
    d = pres.second_map  # P1 -> P0

    def summand_offsets(verts):
        """Offset of each summand's block inside the stacked vertex spaces."""
        offs = []
        running = {v: 0 for v in alg.vertices}
        for u in verts:
            offs.append(dict(running))
            paths = projective_basis_paths(alg, u)
            for w in alg.vertices:
                running[w] += len(paths[w])
        return offs

    off0 = summand_offsets(p0_verts)
    off1 = summand_offsets(p1_verts)

    r0, _, projs0 = direct_sum_with_maps(opp, [projective(opp, v) for v in p0_verts])
    r1, injs1, _ = direct_sum_with_maps(opp, [projective(opp, u) for u in p1_verts])
    total_map = zero_morphism(r0, r1)
    for l, u in enumerate(p1_verts):
        # the generator of summand l is the trivial path, first in its block
        col = d.components[u].col(off1[l][u])
        for k, v in enumerate(p0_verts):
            paths_vu = projective_basis_paths(alg, v)[u]
            if not paths_vu:
                continue
            coeffs = col[off0[k][u]: off0[k][u] + len(paths_vu)]
            if all(c == 0 for c in coeffs):
                continue
            # left multiplication by the element sum coeffs_b * b of e_u A e_v
            # is the op-morphism P_op(v) -> P_op(u) sending the generator to
            # the class of the reversed paths inside P_op(u) at vertex v
            op_list = projective_basis_paths(opp, u)[v]
            pos_of = {b: q for q, b in enumerate(op_list)}
            vec = [Fraction(0)] * len(op_list)
            for b_idx, b in enumerate(paths_vu):
                path = alg.basis[b]
                rev = Path(alg.quiver.path_target(path), tuple(reversed(path.arrows)))
                for ob, c in opp.path_class(rev).items():
                    vec[pos_of[ob]] += coeffs[b_idx] * c
            leg = hom_from_projective(opp, v, projective(opp, u), vec)
            total_map = total_map.add(injs1[l].compose(leg).compose(projs0[k]))
    coker, _ = cokernel(total_map)
    return coker


def tau(m: Representation) -> Representation:
    """AR translate DTr; zero for projectives."""
    tr = transpose(m)
    if tr.is_zero():
        return zero_rep(m.algebra)
    return dual(tr)


def tau_inverse(m: Representation) -> Representation:
    """Inverse translate TrD; zero for injectives."""
    dm = dual(m)
    tr = transpose(dm)
    if tr.is_zero():
        return zero_rep(m.algebra)
    return tr  # transpose of an A^op-module lives over A again


# -- roster -------------------------------------------------------------------


@dataclass
class RosterEntry:
    module: Representation
    provenance: str      # "projective(v)" or "tau_inverse^k(...)"


@dataclass
class Roster:
    algebra: BoundQuiverAlgebra
    entries: list[RosterEntry]

    @property
    def modules(self) -> list[Representation]:
        return [e.module for e in self.entries]

    def find(self, m: Representation, seed: int = 0) -> int | None:
        for i, entry in enumerate(self.entries):
            if is_isomorphic(entry.module, m, seed)[0]:
                return i
        return None

    def to_json(self):
        return [{"dims": e.module.to_json()["dims"],
                 "maps": e.module.to_json()["maps"],
                 "provenance": e.provenance}
                for e in self.entries]


def roster_from_json(algebra: BoundQuiverAlgebra, data) -> Roster:
    entries = [RosterEntry(Representation.from_json(algebra, item),
                           item.get("provenance", "file"))
               for item in data]
    return Roster(algebra, entries)


def enumerate_roster(algebra: BoundQuiverAlgebra, cap: int = 256, seed: int = 0) -> Roster:
    """Indecomposables as the tau-inverse closure of the projectives.

    Complete for representation-directed algebras; CapExceeded past
    ``cap`` candidates guards against representation-infinite input.
    """
    if cap < len(algebra.vertices):
        raise ValueError("cap must be at least the number of vertices")
    entries: list[RosterEntry] = []
    work: list[tuple[Representation, str, int]] = []
    for v in algebra.vertices:
        p = projective(algebra, v)
        entries.append(RosterEntry(p, f"projective({v})"))
        work.append((p, v, 0))
    pos = 0
    while pos < len(work):
        m, base, gen = work[pos]
        pos += 1
        t = tau_inverse(m)
        if t.is_zero():
            continue
        if any(is_isomorphic(t, e.module, seed)[0] for e in entries):
            continue
        if len(entries) + 1 > cap:
            raise CapExceeded(f"roster exceeded {cap} modules; "
                              "algebra may be representation-infinite")
        entries.append(RosterEntry(t, f"tau_inverse^{gen + 1}(projective({base}))"))
        work.append((t, base, gen + 1))
    entries.sort(key=lambda e: e.module.canonical_key())
    return Roster(algebra, entries)
