#!/usr/bin/env python3
# Copyright 2026 The braidhopf Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the negative and invalid scenario corpus.

Every file under scenarios/negative/ changes exactly one structure constant
of a passing declaration and runs one checker on it, so the run must exit 1
with that check named.  Files under scenarios/invalid/ must be refused at
load (exit 2).

    tools/make_negatives.py [--out scenarios]
"""

import argparse
import json
import pathlib

SCHEMA = "braidhopf-scenario/1"

# Sweedler's H4 has basis 1, g, x, gx (indices 0..3); its context has a trivial
# grading so every entry is a legal perturbation.
H4 = {"H": {"example": "sweedler"}}


def h4_module(kind, base="adjoint", which="mu_l", row=0, col=0, delta="1", derived_kind=None):
    mods = {"base": {"over": "H", "derived": base}}
    if derived_kind:
        mods["base"]["kind"] = derived_kind
    mods["bad"] = {"perturb": "base", "which": which, "row": row, "col": col, "delta": delta, "candidate": True}
    return mods


def scenario(name, description, checks, **sections):
    doc = {"schema": SCHEMA, "name": name, "description": description}
    doc.update(sections)
    doc["checks"] = checks
    return doc


def negatives():
    out = {}

    def add(kind, description, checks, **sections):
        out[kind] = scenario("negative_" + kind, description, checks, **sections)

    bad_h = {"H": {"example": "sweedler"},
             "bad": {"perturb": "H", "which": "m", "row": 2, "col": 5, "delta": "1", "candidate": True}}
    add("structure", "H4 with g*g gaining an x term.",
        [{"name": "broken", "kind": "structure", "of": "bad"}], structures=bad_h)
    add("antipode", "H4 with S(x) changed.",
        [{"name": "broken", "kind": "antipode", "of": "bad"}],
        structures={"H": {"example": "sweedler"},
                    "bad": {"perturb": "H", "which": "S", "row": 3, "col": 2, "delta": "1", "candidate": True}})
    add("equal", "Associativity written in the DSL, evaluated on a perturbed product.",
        [{"name": "associative", "kind": "equal", "context": "bad",
          "lhs": "bad.m o (bad.m x id(bad))", "rhs": "bad.m o (id(bad) x bad.m)"}], structures=bad_h)

    reg = lambda which, row, col: {"reg": {"over": "H", "derived": "regular"},
                                   "bad": {"perturb": "reg", "which": which, "row": row, "col": col,
                                           "delta": "1", "candidate": True}}
    for kind, which, row, col, what in [
        ("hopf_module", "mu_l", 0, 5, "left action g.g"),
        ("right_hopf_module", "nu_r", 0, 1, "right coaction of g"),
        ("twofold", "mu_r", 2, 0, "right action 1.1"),
        ("coinvariants", "nu_l", 0, 2, "left coaction of x"),
        ("side_conversions", "mu_l", 1, 0, "left action 1.1"),
    ]:
        add(kind, "Regular H4 Hopf module with the " + what + " perturbed.",
            [{"name": "broken", "kind": kind, "over": "H", "module": "bad"}], structures=H4, modules=reg(which, row, col))

    add("structure_theorem", "Structure theorem on a regular module whose coaction is off by one entry.",
        [{"name": "broken", "kind": "structure_theorem", "over": "H", "modules": ["bad"], "max_dim": 1}],
        structures=H4, modules=reg("nu_l", 0, 2))
    add("tensor_over_h", "Tensor and cotensor over H4 with a perturbed right action on N.",
        [{"name": "broken", "kind": "tensor_over_h", "over": "H", "right": "bad", "left": "reg"}],
        structures=H4, modules=reg("mu_r", 2, 0))
    add("hopf_module_braiding", "Hopf-module braiding with one leg carrying a perturbed action.",
        [{"name": "broken", "kind": "hopf_module_braiding", "over": "H", "modules": ["bad", "reg", "reg"]}],
        structures=H4, modules=reg("mu_l", 0, 5))
    add("hopf_bimodule", "Regular H4 bimodule with the right coaction perturbed.",
        [{"name": "broken", "kind": "hopf_bimodule", "over": "H", "module": "bad"}],
        structures=H4, modules=reg("nu_r", 0, 1))
    add("hbm_braiding", "Hopf-bimodule braiding with a perturbed right action.",
        [{"name": "broken", "kind": "hbm_braiding", "over": "H", "modules": ["bad", "reg", "reg"]}],
        structures=H4, modules=reg("mu_r", 2, 0))
    add("yd_equivalence", "Equivalence round trip on a perturbed Hopf bimodule.",
        [{"name": "broken", "kind": "yd_equivalence", "over": "H", "bimodules": ["bad"], "crossed": ["ad"]}],
        structures=H4, modules={**reg("mu_l", 0, 5), "ad": {"over": "H", "derived": "adjoint"}})

    ad = lambda which, row, col: {"ad": {"over": "H", "derived": "adjoint"},
                                  "unit": {"over": "H", "derived": "unit_crossed"},
                                  "bad": {"perturb": "ad", "which": which, "row": row, "col": col,
                                          "delta": "1", "candidate": True}}
    add("crossed_module", "Adjoint crossed module over H4 with the action g.x perturbed.",
        [{"name": "broken", "kind": "crossed_module", "over": "H", "module": "bad"}],
        structures=H4, modules=ad("mu_r", 0, 6))
    add("left_crossed_module", "Left crossed module X^S of the H4 adjoint module with its coaction perturbed.",
        [{"name": "broken", "kind": "left_crossed_module", "over": "H", "module": "bad"}],
        structures=H4, modules={"ad": {"over": "H", "derived": "adjoint"},
                                "left": {"over": "H", "derived": "side_convert", "of": "ad", "variant": "X^S"},
                                "bad": {"perturb": "left", "which": "nu_l", "row": 2, "col": 0,
                                        "delta": "1", "candidate": True}})
    add("yd_braiding", "Crossed-module braiding on a perturbed adjoint module.",
        [{"name": "broken", "kind": "yd_braiding", "over": "H", "modules": ["bad", "ad", "unit"]}],
        structures=H4, modules=ad("nu_r", 2, 0))
    add("schauenburg", "Schauenburg factorization with a perturbed Hopf bimodule.",
        [{"name": "broken", "kind": "schauenburg", "over": "H", "modules": ["reg", "bad"]}],
        structures=H4, modules=reg("nu_r", 0, 1))
    add("relative_antipode", "Relative antipode identities on a perturbed Hopf bimodule.",
        [{"name": "broken", "kind": "relative_antipode", "over": "H", "modules": ["bad", "reg"]}],
        structures=H4, modules=reg("mu_l", 0, 5))

    g2 = {"G": {"example": "group_algebra(2)"}, "H4": {"example": "sweedler"}}
    pmaps = {"inj": {"dom": "G", "cod": "H4", "matrix": [[1, 0], [0, 1], [0, 0], [0, 0]]},
             "proj": {"dom": "H4", "cod": "G", "matrix": [[1, 0, 1, 0], [0, 1, 0, 0]]}}
    pbad = {"P": {"over": "G", "bialgebra": "H4", "inj": "inj", "proj": "proj", "candidate": True}}
    for kind, key in [("projection", "projection"), ("projection_theorem", "projections")]:
        ref = ["P"] if key == "projections" else "P"
        add(kind, "H4 over k[Z/2] with the projection sending x to 1 instead of 0.",
            [{"name": "broken", "kind": kind, key: ref}], structures=g2, maps=pmaps, projections=pbad)

    # x*x = x keeps inj and proj bialgebra maps but breaks the bialgebra the
    # projection induces.
    add("hbm_bialgebra", "H4 with x*x = x, still projecting onto k[Z/2].",
        [{"name": "broken", "kind": "hbm_bialgebra", "projection": "P"}],
        structures={"G": {"example": "group_algebra(2)"}, "H4": {"example": "sweedler"},
                    "bad": {"perturb": "H4", "which": "m", "row": 2, "col": 10, "delta": "1", "candidate": True}},
        maps={"inj": {"dom": "G", "cod": "bad", "matrix": [[1, 0], [0, 1], [0, 0], [0, 0]]},
              "proj": {"dom": "bad", "cod": "G", "matrix": [[1, 0, 0, 0], [0, 1, 0, 0]]}},
        projections={"P": {"over": "G", "bialgebra": "bad", "inj": "inj", "proj": "proj", "candidate": True}})

    # Braided line B3 over k[Z/3] in F7; the line's crossed structure has a
    # perturbed coaction on x.
    line = {"G": {"example": "braided_line(3,7)", "part": "group"},
            "X": {"example": "braided_line(3,7)", "part": "plain", "candidate": True}}
    lmods = {"line": {"over": "G", "derived": "line_crossed", "example": "braided_line(3,7)"},
             "bad": {"perturb": "line", "which": "nu_r", "row": 3, "col": 1, "delta": "1", "candidate": True}}
    lbia = {"B": {"over": "G", "module": "bad", "algebra": "X", "candidate": True}}
    for kind in ["crossed_bialgebra", "admissible"]:
        add(kind, "B3 over k[Z/3] with the coaction of x gaining a 1 x x term.",
            [{"name": "broken", "kind": kind, "bialgebra": "B"}],
            structures=line, modules=lmods, bialgebras=lbia)
    add("bosonization", "Bosonization of B3 with one coaction entry perturbed.",
        [{"name": "broken", "kind": "bosonization", "bialgebras": ["B"]}],
        structures=line, modules=lmods, bialgebras=lbia)
    return out


def invalid():
    out = {}
    out["float_literal"] = scenario(
        "invalid_float_literal", "A floating-point literal in a matrix.", [],
        objects={"V": {"basis": [["v", 0]]}},
        maps={"half": {"dom": "V", "cod": "V", "matrix": [[0.5]]}})
    out["bicharacter_order"] = scenario(
        "invalid_bicharacter_order", "chi(e1, e1) = 2 has order 3 in F7, not dividing 2.", [],
        context={"field": {"prime": 7}, "group": [2], "bicharacter": [["2"]]})
    out["dangling_reference"] = scenario(
        "invalid_dangling_reference", "A check naming a structure that is not declared.",
        [{"name": "axioms", "kind": "structure", "of": "nowhere"}])
    out["failed_validator"] = scenario(
        "invalid_failed_validator", "A perturbed structure not marked as a candidate.", [],
        structures={"H": {"example": "sweedler"},
                    "bad": {"perturb": "H", "which": "m", "row": 2, "col": 5, "delta": "1"}})
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "scenarios"))
    args = ap.parse_args()
    root = pathlib.Path(args.out)
    for sub, docs in [("negative", negatives()), ("invalid", invalid())]:
        d = root / sub
        d.mkdir(parents=True, exist_ok=True)
        for stem, doc in sorted(docs.items()):
            (d / (stem + ".json")).write_text(json.dumps(doc, indent=2) + "\n")


if __name__ == "__main__":
    main()
