"""The bundled regression corpus: algebras, named modules, rosters, goldens.

Everything is generated programmatically so the files regenerate
byte-identically; golden review happens through version control diffs.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra import Quiver, Relation, build_algebra
from .gluing import GluedPairSpec, glue_tilting
from .homology import enumerate_roster
from .recollement import split_context
from .rep import Representation, direct_sum, projective, simple


def inner_algebra():
    """The two-vertex inner slice: 1 -> 2."""
    return build_algebra(Quiver(["1", "2"], [("a", "1", "2")]), [], 10)


def outer_algebra():
    """The bound three-vertex outer slice: 3 -> 4 -> 5, second arrow kills the first."""
    q = Quiver(["3", "4", "5"], [("alpha", "3", "4"), ("beta", "4", "5")])
    return build_algebra(q, [Relation([(1, ("alpha", "beta"))])], 10)


def glued_algebra():
    """The 11-dimensional triangular glue with crossing arrows gamma, epsilon."""
    q = Quiver(
        ["1", "2", "3", "4", "5"],
        [("delta", "1", "2"), ("gamma", "4", "2"), ("epsilon", "3", "1"),
         ("alpha", "3", "4"), ("beta", "4", "5")],
    )
    rels = [
        Relation([(1, ("alpha", "gamma")), (-1, ("epsilon", "delta"))]),
        Relation([(1, ("alpha", "beta"))]),
    ]
    return build_algebra(q, rels, 10)


def product_algebra():
    """The disjoint union of the slices: the zero-bimodule split."""
    q = Quiver(
        ["1", "2", "3", "4", "5"],
        [("a", "1", "2"), ("alpha", "3", "4"), ("beta", "4", "5")],
    )
    return build_algebra(q, [Relation([(1, ("alpha", "beta"))])], 10)


def mutated_algebra():
    """Product plus a crossing arrow killed by the inner slice: j_! is inexact."""
    q = Quiver(
        ["1", "2", "3", "4", "5"],
        [("a", "1", "2"), ("alpha", "3", "4"), ("beta", "4", "5"),
         ("c", "4", "1")],
    )
    rels = [Relation([(1, ("alpha", "beta"))]), Relation([(1, ("alpha", "c"))])]
    return build_algebra(q, rels, 10)


def _by_dims(roster, dims):
    for m in roster.modules:
        if m.dim_vector() == dims:
            return m
    raise LookupError(f"no roster module with dimension vector {dims}")


def corpus():
    """All fixture objects, keyed the way the files are named."""
    glued = glued_algebra()
    ctx = split_context(glued, ["3", "4", "5"])
    roster = enumerate_roster(glued)
    inn, out = ctx.inner_algebra, ctx.outer_algebra

    t_inner = direct_sum(inn, [projective(inn, "1"), simple(inn, "1")])
    t_outer1 = direct_sum(out, [projective(out, v) for v in ("3", "4", "5")])
    t_outer2 = direct_sum(out, [projective(out, "3"), projective(out, "4"),
                                simple(out, "4")])
    cert1 = glue_tilting(GluedPairSpec(ctx, t_inner, t_outer1), roster)
    cert2 = glue_tilting(GluedPairSpec(ctx, t_inner, t_outer2), roster)
    t_case3 = direct_sum(glued, [
        _by_dims(roster, d) for d in
        [(0, 1, 0, 1, 0), (1, 1, 0, 1, 1), (0, 0, 0, 1, 1),
         (1, 1, 0, 1, 0), (1, 1, 1, 1, 0)]])
    t_case4 = direct_sum(glued, [
        _by_dims(roster, d) for d in
        [(0, 1, 0, 1, 0), (0, 1, 0, 1, 1), (1, 1, 0, 1, 1),
         (0, 0, 0, 1, 1), (1, 1, 1, 1, 0)]])

    product = product_algebra()
    pctx = split_context(product, ["3", "4", "5"])
    pin, pout = pctx.inner_algebra, pctx.outer_algebra
    product_t_inner = direct_sum(pin, [projective(pin, "1"), simple(pin, "1")])
    product_t_outer = direct_sum(pout, [projective(pout, v) for v in ("3", "4", "5")])

    return {
        "algebras": {
            "lambda": glued,
            "inner": inner_algebra(),
            "outer": outer_algebra(),
            "product": product,
            "mutated": mutated_algebra(),
        },
        "ctx": ctx,
        "roster": roster,
        "modules": {
            "T_inner": t_inner,
            "T_outer_case1": t_outer1,
            "T_outer_case2": t_outer2,
            "T_case1": cert1.module,
            "T_case2": cert2.module,
            "T_case3": t_case3,
            "T_case4": t_case4,
            "product_T_inner": product_t_inner,
            "product_T_outer": product_t_outer,
        },
    }


def _dump(path: Path, payload):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def write_corpus(directory) -> list[str]:
    """Write algebra, module and roster files; returns the paths written."""
    directory = Path(directory)
    data = corpus()
    written = []
    for name, alg in data["algebras"].items():
        path = directory / f"{name}.json"
        _dump(path, alg.to_json())
        written.append(str(path))
    module_algebra = {
        "T_inner": "lambda.json", "T_outer_case1": "lambda.json",
        "T_outer_case2": "lambda.json", "T_case1": "lambda.json",
        "T_case2": "lambda.json", "T_case3": "lambda.json",
        "T_case4": "lambda.json", "product_T_inner": "product.json",
        "product_T_outer": "product.json",
    }
    for name, mod in data["modules"].items():
        payload = {"algebra": module_algebra[name], **mod.to_json()}
        path = directory / "modules" / f"{name}.json"
        _dump(path, payload)
        written.append(str(path))
    for name, alg in (("lambda", data["algebras"]["lambda"]),
                      ("inner", data["algebras"]["inner"]),
                      ("outer", data["algebras"]["outer"])):
        roster = data["roster"] if name == "lambda" else enumerate_roster(alg)
        path = directory / f"roster_{name}.json"
        _dump(path, roster.to_json())
        written.append(str(path))
    return written


GOLDEN_COMMANDS = {
    "roster_lambda": ["ar", "roster", "{d}/lambda.json"],
    "exactness": ["rec", "check", "{d}/lambda.json", "--outer", "3,4,5"],
    "case1": ["rec", "glue", "{d}/lambda.json", "--outer", "3,4,5",
              "--inner-tilting", "{d}/modules/T_inner.json",
              "--outer-tilting", "{d}/modules/T_outer_case1.json"],
    "case2": ["rec", "glue", "{d}/lambda.json", "--outer", "3,4,5",
              "--inner-tilting", "{d}/modules/T_inner.json",
              "--outer-tilting", "{d}/modules/T_outer_case2.json"],
    "case3": ["rec", "restrict", "{d}/lambda.json", "--outer", "3,4,5",
              "--tilting", "{d}/modules/T_case3.json", "--side", "right"],
    "case4": ["rec", "restrict", "{d}/lambda.json", "--outer", "3,4,5",
              "--tilting", "{d}/modules/T_case4.json", "--side", "right"],
    "tilting_case1": ["tilting", "check", "{d}/lambda.json", "T_case1"],
    "partition_case1": ["torsion", "partition", "{d}/lambda.json", "T_case1",
                        "--roster", "{d}/roster_lambda.json"],
    "product_glue": ["rec", "glue", "{d}/product.json", "--outer", "3,4,5",
                     "--inner-tilting", "{d}/modules/product_T_inner.json",
                     "--outer-tilting", "{d}/modules/product_T_outer.json"],
    "negative_glue": ["rec", "glue", "{d}/mutated.json", "--outer", "3,4,5",
                      "--inner-tilting", "{d}/modules/product_T_inner.json",
                      "--outer-tilting", "{d}/modules/product_T_outer.json"],
}


def regen_goldens(directory) -> list[str]:
    """Rewrite the corpus and every golden output; returns paths written."""
    from .cli import run_capture

    directory = Path(directory)
    written = write_corpus(directory)
    for name, argv in GOLDEN_COMMANDS.items():
        args = [a.format(d=str(directory)) for a in argv]
        code, payload = run_capture(args)
        golden = {"argv": [a.replace(str(directory), "fixtures") for a in args],
                  "exit_code": code, "output": payload}
        path = directory / "goldens" / f"{name}.json"
        _dump(path, golden)
        written.append(str(path))
    return written
