"""Gluing and restricting tilting modules across a recollement.

The forward direction builds one universal extension of the lifted inner
tilting module by copies of the tensor-lifted outer one, and certifies
every conclusion: pd <= 1, self-orthogonality, the coresolution, the
partition identity between the glued membership predicates and the trace
partition of the result, and the Ext-projectivity identity.

The backward direction restricts a tilting module to the parts, always
certifying tilting-ness of the outer restriction and reporting which
closure hypotheses (and hence which partition equalities) survive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import HypothesisFailed
from .homology import Roster, enumerate_roster, ext1, ext1_dim, universal_extension
from .rep import (
    Representation,
    SES,
    add_equal,
    basic_summands,
    decompose,
    direct_sum,
    in_add_of,
    injective,
)
from .recollement import (
    RecollementContext,
    check_exactness,
    i_shriek,
    i_star,
    i_upper_star,
    j_shriek,
    j_star_lower,
    j_star_upper,
)
from .tilting import (
    TiltingCertificate,
    ext_projectives,
    gen_member,
    is_tilting,
    partition_roster,
    perp_member,
)


@dataclass
class GluedPairSpec:
    ctx: RecollementContext
    inner_tilting: Representation      # over the inner algebra
    outer_tilting: Representation      # over the outer algebra


def glued_membership(spec: GluedPairSpec, m: Representation) -> str:
    """Classify a module against the glued pair: torsion, free or neither.

    The zero module belongs to every class and is reported torsion.
    """
    ctx = spec.ctx
    torsion = gen_member(spec.inner_tilting, i_upper_star(ctx, m)) \
        and gen_member(spec.outer_tilting, j_star_upper(ctx, m))
    if torsion:
        return "torsion"
    free = perp_member(spec.inner_tilting, i_shriek(ctx, m)) \
        and perp_member(spec.outer_tilting, j_star_upper(ctx, m))
    return "free" if free else "neither"


def glued_pair_is_tilting(spec: GluedPairSpec, roster: Roster | None = None) -> bool:
    """The glued pair is tilting iff every indecomposable injective is torsion."""
    alg = spec.ctx.algebra
    return all(glued_membership(spec, injective(alg, v)) == "torsion"
               for v in alg.vertices)


@dataclass
class GlueCertificate:
    module: Representation                 # basic glued tilting module
    summands: list[Representation]
    ext_dimension: int                     # n = dim Ext^1(i_* T', j_! T'')
    universal: SES
    universal_ext_vanishes: bool           # Ext^1(M, j_! T'') = 0
    tilting: TiltingCertificate
    partition_counts: tuple
    partition_matches_glued: bool
    ext_projectives_match: bool

    @property
    def passed(self) -> bool:
        return (self.universal_ext_vanishes and self.tilting.tilting
                and self.partition_matches_glued and self.ext_projectives_match)

    def to_json(self):
        return {
            "summands": [s.to_json()["dims"] for s in self.summands],
            "summand_count": len(self.summands),
            "ext_dimension": self.ext_dimension,
            "universal_ext_vanishes": self.universal_ext_vanishes,
            "tilting": self.tilting.to_json(),
            "partition_counts": list(self.partition_counts),
            "partition_matches_glued": self.partition_matches_glued,
            "ext_projectives_match": self.ext_projectives_match,
            "passed": self.passed,
        }


def glue_tilting(spec: GluedPairSpec, roster: Roster | None = None,
                 seed: int = 0) -> GlueCertificate:
    """Glue two tilting modules into one over the whole algebra.

    Hypotheses checked up front: the tensor lift must be exact (Tor
    vanishing on outer simples) and both inputs must be tilting; failures
    raise HypothesisFailed naming the culprit.
    """
    ctx = spec.ctx
    exact = check_exactness(ctx)
    if not exact.j_shriek_exact:
        raise HypothesisFailed("j_!", "Tor_1 of the crossing bimodule is nonzero "
                                      "on an outer simple")
    inner_cert = is_tilting(spec.inner_tilting, seed)
    if not inner_cert.tilting:
        raise HypothesisFailed("inner tilting module",
                               f"pd={inner_cert.pd}, ext1={inner_cert.ext1_self}, "
                               f"t3={inner_cert.t3_constructive}")
    outer_cert = is_tilting(spec.outer_tilting, seed)
    if not outer_cert.tilting:
        raise HypothesisFailed("outer tilting module",
                               f"pd={outer_cert.pd}, ext1={outer_cert.ext1_self}, "
                               f"t3={outer_cert.t3_constructive}")

    lifted_inner = i_star(ctx, spec.inner_tilting)
    lifted_outer = j_shriek(ctx, spec.outer_tilting)
    ext_space = ext1(lifted_inner, lifted_outer)
    ses = universal_extension(ext_space)
    middle = ses.middle
    universal_ok = ext1_dim(middle, lifted_outer) == 0

    pieces = [p for p, _ in decompose(lifted_outer, seed)]
    pieces += [p for p, _ in decompose(middle, seed)]
    summands = basic_summands(pieces, seed)
    glued = direct_sum(ctx.algebra, summands)

    tilt_cert = is_tilting(glued, seed)
    if roster is None:
        roster = enumerate_roster(ctx.algebra, seed=seed)
    part = partition_roster(glued, roster)
    matches = True
    for i, m in enumerate(roster.modules):
        want = glued_membership(spec, m)
        got = "torsion" if i in part.torsion else (
            "free" if i in part.free else "neither")
        if want != got:
            matches = False
            break
    torsion_mods = [roster.modules[i] for i in part.torsion]
    projs = ext_projectives(torsion_mods, seed)
    projs_match = add_equal([projs], [glued], seed)

    return GlueCertificate(
        module=glued,
        summands=summands,
        ext_dimension=ext_space.dimension,
        universal=ses,
        universal_ext_vanishes=universal_ok,
        tilting=tilt_cert,
        partition_counts=part.counts(),
        partition_matches_glued=matches,
        ext_projectives_match=projs_match,
    )


# -- restriction ----------------------------------------------------------------


def restricted_pair(ctx: RecollementContext, t: Representation, side: str,
                    roster: Roster | None = None, seed: int = 0):
    """Images of the induced torsion pair under the restriction functors.

    Returns (torsion classes, free classes) as lists of indecomposables.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if roster is None:
        roster = enumerate_roster(ctx.algebra, seed=seed)
    part = partition_roster(t, roster)

    def images(indices, functor):
        pieces = []
        for i in indices:
            img = functor(roster.modules[i])
            pieces += [p for p, _ in decompose(img, seed)]
        return basic_summands(pieces, seed)

    if side == "left":
        tclass = images(part.torsion, lambda m: i_upper_star(ctx, m))
        fclass = images(part.free, lambda m: i_shriek(ctx, m))
    else:
        tclass = images(part.torsion, lambda m: j_star_upper(ctx, m))
        fclass = images(part.free, lambda m: j_star_upper(ctx, m))
    return tclass, fclass


def check_restriction_hypotheses(ctx: RecollementContext, t: Representation,
                                 roster: Roster | None = None, seed: int = 0) -> dict:
    """Closure of both classes under j_* j^* plus exactness of j_*.

    Reports the first witness violating either inclusion.
    """
    if roster is None:
        roster = enumerate_roster(ctx.algebra, seed=seed)
    part = partition_roster(t, roster)
    tlist = [roster.modules[i] for i in part.torsion]
    flist = [roster.modules[i] for i in part.free]
    report = {"torsion_closed": True, "torsion_witness": None,
              "free_closed": True, "free_witness": None,
              "j_star_lower_exact": True}
    for name, cls in (("free", flist), ("torsion", tlist)):
        for m in cls:
            back = j_star_lower(ctx, j_star_upper(ctx, m))
            if not in_add_of(back, cls, seed):
                report[f"{name}_closed"] = False
                report[f"{name}_witness"] = back.to_json()["dims"]
                break
    report["holds"] = report["torsion_closed"] and report["free_closed"]
    return report


@dataclass
class RestrictionResult:
    side: str
    module: Representation
    summands: list[Representation]
    tilting: TiltingCertificate | None
    tilting_verified: bool
    hypotheses: dict
    partition_equal: bool | None
    restricted_classes: tuple | None = None

    def to_json(self):
        return {
            "side": self.side,
            "summands": [s.to_json()["dims"] for s in self.summands],
            "tilting": None if self.tilting is None else self.tilting.to_json(),
            "tilting_verified": self.tilting_verified,
            "hypotheses": self.hypotheses,
            "partition_equal": self.partition_equal,
        }


def restrict_right(ctx: RecollementContext, t: Representation,
                   roster: Roster | None = None, seed: int = 0) -> RestrictionResult:
    """j^*(T) in basic form; tilting-ness holds without any hypothesis.

    The partition equality with (Gen j^*T, perp) is certified only when
    the closure hypotheses hold; its verdict is reported either way.
    """
    if roster is None:
        roster = enumerate_roster(ctx.algebra, seed=seed)
    raw = j_star_upper(ctx, t)
    summands = basic_summands([p for p, _ in decompose(raw, seed)], seed)
    module = direct_sum(ctx.outer_algebra, summands)
    cert = is_tilting(module, seed)
    hyp = check_restriction_hypotheses(ctx, t, roster, seed)
    tclass, fclass = restricted_pair(ctx, t, "right", roster, seed)
    outer_roster = enumerate_roster(ctx.outer_algebra, seed=seed)
    part = partition_roster(module, outer_roster)
    eq = (add_equal(tclass, [outer_roster.modules[i] for i in part.torsion], seed)
          and add_equal(fclass, [outer_roster.modules[i] for i in part.free], seed)
          and not part.neither)
    return RestrictionResult("right", module, summands, cert, True, hyp, eq,
                             (tclass, fclass))


def restrict_left(ctx: RecollementContext, t: Representation,
                  roster: Roster | None = None, seed: int = 0) -> RestrictionResult:
    """i^*(T) in basic form; certified tilting only when i^* is exact.

    When i^* is inexact no exception is raised: the module is returned
    with its tilting-ness flagged unverified.
    """
    if roster is None:
        roster = enumerate_roster(ctx.algebra, seed=seed)
    exact = check_exactness(ctx)
    raw = i_upper_star(ctx, t)
    summands = basic_summands([p for p, _ in decompose(raw, seed)], seed)
    module = direct_sum(ctx.inner_algebra, summands)
    hyp = {"i_upper_star_exact": exact.i_upper_star_exact,
           "tor1_on_simples": exact.i_upper_star_tor}
    if not exact.i_upper_star_exact:
        return RestrictionResult("left", module, summands, None, False, hyp, None)
    cert = is_tilting(module, seed)
    tclass, fclass = restricted_pair(ctx, t, "left", roster, seed)
    inner_roster = enumerate_roster(ctx.inner_algebra, seed=seed)
    part = partition_roster(module, inner_roster)
    eq = (add_equal(tclass, [inner_roster.modules[i] for i in part.torsion], seed)
          and add_equal(fclass, [inner_roster.modules[i] for i in part.free], seed)
          and not part.neither)
    return RestrictionResult("left", module, summands, cert, True, hyp, eq,
                             (tclass, fclass))
