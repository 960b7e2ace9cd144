"""Command line front end.

Arrangement files are JSON objects with fields
    dimension      integer (required)
    characters     list of integer vectors, expanded over roots of unity
    hypersurfaces  list of {"character": [...], "value": "p/q"}
    chain          optional list of cocharacter vectors, outermost first
    name           optional string
At least one of characters/hypersurfaces must be present; values are
rationals in [0, 1) written as strings, never floats.

Exit codes: 0 ok, 1 domain error (with a machine-readable error object),
2 internal error.
"""

import argparse
import json
import sys
from fractions import Fraction

from .arrangement import (Arrangement, build_poset, essentialize, find_chain,
                          layer_leq, make_hypersurface, verify_chain)
from .errors import InfeasibleError, ParseError, ToricArrError
from .fixtures import EXAMPLES, standard_chain
from .invariants import (betti_numbers, chain_hrms, cohomology_ideal,
                         generator_labels, h2_image, hilbert_series,
                         lcs_ideal, lcs_ranks, pi1_presentation,
                         topological_complexity)
from .rootmaps import homological_root_hom
from .tracer import stage_monodromy
from .words import pair_list


def _parse_value(s):
    try:
        v = Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational value {s!r}: {exc}") from None
    if not 0 <= v < 1:
        raise ParseError(f"value {s!r} outside [0, 1)")
    return v


def load_arrangement_data(data):
    """Build (arrangement, chain-or-None, name) from a parsed JSON object."""
    if not isinstance(data, dict):
        raise ParseError("arrangement file must be a JSON object")
    try:
        dim = int(data["dimension"])
    except (KeyError, TypeError, ValueError):
        raise ParseError("missing or bad 'dimension'") from None
    chars = data.get("characters")
    hyps = data.get("hypersurfaces")
    if chars is None and hyps is None:
        raise ParseError("need 'characters' or 'hypersurfaces'")
    try:
        collected = []
        if chars is not None:
            arr = Arrangement.from_characters(
                dim, [tuple(int(c) for c in chi) for chi in chars])
            collected.extend(arr.hypersurfaces)
        if hyps is not None:
            for h in hyps:
                chi = tuple(int(c) for c in h["character"])
                collected.append(make_hypersurface(chi, _parse_value(h["value"])))
        arr = Arrangement.from_hypersurfaces(dim, collected)
    except ToricArrError:
        raise
    except Exception as exc:
        raise ParseError(f"bad arrangement data: {exc}") from None
    chain = data.get("chain")
    if chain is not None:
        chain = [tuple(int(c) for c in y) for y in chain]
    return arr, chain, data.get("name")


def load_arrangement(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from None
    return load_arrangement_data(data)


def _get_chain(arr, chain_spec, strict_only=False):
    """Essentialize, then verify the given chain or search for one."""
    ess, extra = essentialize(arr)
    if chain_spec is None:
        chain_spec = find_chain(ess, strict_only=strict_only)
        if chain_spec is None:
            raise InfeasibleError("no fibration chain found")
    chain = verify_chain(ess, chain_spec)
    if chain.classification == "invalid":
        raise InfeasibleError(f"chain is not valid: {chain.failure}")
    if strict_only and not chain.is_strict():
        raise InfeasibleError("arrangement has no certified strict chain; "
                              "this invariant needs degree-one stages")
    return chain, extra


def _gen_name(label):
    if label[0] == "axis":
        return f"y(0,{label[1]})"
    return f"y({label[1]},{label[2]})"


def _u_text(u, labels):
    terms = []
    for c, lab in zip(u, labels):
        if c == 0:
            continue
        name = _gen_name(lab)
        terms.append(name if c == 1 else f"{c}*{name}")
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# Subcommand payload builders: each returns a JSON-ready dict


def cmd_poset(arr, chain_spec, args):
    poset = build_poset(arr)
    layers = poset.all_layers()
    index = {x: i for i, x in enumerate(layers)}
    payload = {
        "dimension": arr.dim,
        "layers": [{"codim": x.codim(),
                    "lattice": [list(r) for r in x.lattice],
                    "phases": [str(p) for p in x.phases]} for x in layers],
        "covers": sorted([index[x], index[y]] for x, y in poset.covers()),
    }
    lines = [f"poset of layers: {len(layers)} elements"]
    for i, x in enumerate(layers):
        eqs = ", ".join(f"{list(r)}={p}" for r, p in zip(x.lattice, x.phases))
        lines.append(f"  [{i}] codim {x.codim()}" + (f": {eqs}" if eqs else ""))
    lines.append("covers: " + " ".join(f"{a}<{b}" for a, b in payload["covers"]))
    return payload, "\n".join(lines)


def cmd_classify(arr, chain_spec, args):
    ess, extra = essentialize(arr)
    spec = chain_spec if chain_spec is not None else find_chain(ess)
    if spec is None:
        payload = {"classification": "unknown", "chain": None}
        return payload, "classification: unknown (no chain found)"
    chain = verify_chain(ess, spec)
    payload = {
        "classification": chain.classification,
        "chain": [list(y) for y in spec],
        "torus_factors": extra,
    }
    if chain.classification != "invalid":
        payload["fiber_ranks"] = list(chain.fiber_ranks())
    text = f"classification: {chain.classification}\nchain: {spec}"
    return payload, text


def cmd_hrm(arr, chain_spec, args):
    chain, _ = _get_chain(arr, chain_spec, strict_only=True)
    js = [args.stage] if args.stage else list(range(2, chain.arrangement.dim + 1))
    stages = []
    lines = []
    for j in js:
        h = homological_root_hom(chain, j)
        stages.append({
            "stage": j,
            "n": h.n,
            "pairs": [list(p) for p in pair_list(h.n)],
            "rows": [{"label": list(lab), "coords": list(r.coords)}
                     for lab, r in zip(h.row_labels, h.rows)],
            "base_classes": [list(c) for c in h.base_classes],
        })
        lines.append(f"stage {j} (n={h.n}):")
        for lab, r in zip(h.row_labels, h.rows):
            terms = [f"{c}*A{p}" for p, c in zip(pair_list(h.n), r.coords) if c]
            lines.append(f"  {_gen_name(lab)} -> " + (" + ".join(terms) or "0"))
    return {"stages": stages}, "\n".join(lines)


def cmd_trace(arr, chain_spec, args):
    chain, _ = _get_chain(arr, chain_spec)
    if args.stage:
        js = [args.stage]
    elif args.all:
        js = list(range(2, chain.arrangement.dim + 1))
    else:
        raise ParseError("trace needs --stage j or --all")
    eps = Fraction(args.epsilon)
    stages = []
    lines = []
    for j in js:
        traces = []
        for res in stage_monodromy(chain, j, epsilon=eps):
            traces.append({
                "label": list(res.label),
                "word": res.word_roots.serialize(),
                "permutation": list(res.permutation),
                "linking": {"pairs": [list(p) for p in pair_list(res.n)],
                            "coords": list(res.linking.coords)},
            })
            lines.append(f"stage {j} {_gen_name(res.label)}: "
                         f"{res.word_roots.serialize() or '1'}")
        stages.append({"stage": j, "n": traces and traces[0] and
                       len(traces[0]["permutation"]), "traces": traces})
    return {"stages": stages}, "\n".join(lines)


def _monodromy(chain, epsilon):
    return {j: stage_monodromy(chain, j, epsilon=epsilon)
            for j in range(2, chain.arrangement.dim + 1)}


def cmd_pi1(arr, chain_spec, args):
    chain, extra = _get_chain(arr, chain_spec)
    pres = pi1_presentation(chain, _monodromy(chain, Fraction(args.epsilon)))
    names = pres.generator_names()
    payload = {
        "generators": names,
        "free_torus_factors": extra,
        "relations": [{"lhs": lhs.serialize(), "rhs": rhs.serialize()}
                      for lhs, rhs in pres.relations],
    }
    lines = ["generators: " + " ".join(names)]
    lines += [f"  {lhs.serialize()} = {rhs.serialize() or '1'}"
              for lhs, rhs in pres.relations]
    return payload, "\n".join(lines)


def cmd_lcs(arr, chain_spec, args):
    chain, _ = _get_chain(arr, chain_spec, strict_only=True)
    rels = lcs_ideal(chain_hrms(chain), first_rank=chain.fiber_rank(1))
    labels = generator_labels(chain.fiber_ranks())
    payload = {
        "generators": [_gen_name(lab) for lab in labels],
        "relations": [{"stage": r.stage, "base": list(r.base_label),
                       "fiber_index": r.fiber_index, "u": list(r.u),
                       "y": r.y} for r in rels],
        "lcs_ranks": lcs_ranks(chain.fiber_ranks(), args.depth),
    }
    lines = [f"[{_u_text(r.u, labels)}, {_gen_name(labels[r.y])}]"
             for r in rels]
    lines.append("lcs ranks: " + " ".join(map(str, payload["lcs_ranks"])))
    return payload, "\n".join(lines)


def cmd_cohomology(arr, chain_spec, args):
    chain, _ = _get_chain(arr, chain_spec, strict_only=True)
    coh = cohomology_ideal(h2_image(chain_hrms(chain),
                                    first_rank=chain.fiber_rank(1)))
    labels = list(coh.generator_labels)
    pairs = pair_list(coh.n_generators)
    payload = {
        "generators": [_gen_name(lab) for lab in labels],
        "pairs": [list(p) for p in pairs],
        "ideal_basis": [list(v) for v in coh.ideal_basis],
    }
    lines = [f"degree-2 ideal: {len(coh.ideal_basis)} basis elements over "
             f"{len(labels)} generators"]
    for v in coh.ideal_basis:
        terms = [(f"{c}*" if c != 1 else "")
                 + f"{_gen_name(labels[i - 1])}^{_gen_name(labels[j - 1])}"
                 for (i, j), c in zip(pairs, v) if c]
        lines.append("  " + " + ".join(terms))
    return payload, "\n".join(lines)


def cmd_betti(arr, chain_spec, args):
    chain, extra = _get_chain(arr, chain_spec, strict_only=True)
    betti = betti_numbers(chain.fiber_ranks())
    for _ in range(extra):  # ambient torus factors: multiply by (1 + t)
        betti = [a + b for a, b in zip(betti + [0], [0] + betti)]
    payload = {"fiber_ranks": list(chain.fiber_ranks()),
               "torus_factors": extra, "betti": betti}
    return payload, "betti: " + " ".join(map(str, betti))


def cmd_tc(arr, chain_spec, args):
    tc = topological_complexity(arr)
    return {"tc": tc}, f"tc: {tc}"


EXAMPLE_ALIASES = {
    "exA": "example-a",
    "circuit-6-3": "circuit-6-3", "circuit-4-2": "circuit-4-2",
    "circuit-6-2": "circuit-6-2",
    "typeC-1": "type-c-1", "typeC-2": "type-c-2",
    "typeC-3": "type-c-3", "typeC-4": "type-c-4",
}


def example_file(name):
    key = EXAMPLE_ALIASES.get(name, name)
    if key not in EXAMPLES:
        known = sorted(set(EXAMPLE_ALIASES) | set(EXAMPLES))
        raise ParseError(f"unknown example {name!r}; known: {', '.join(known)}")
    arr = EXAMPLES[key]()
    kind = ("example-a" if key == "example-a"
            else "circuit" if key.startswith("circuit") else "type-c")
    chain = standard_chain(kind, arr)
    return {
        "name": key,
        "dimension": arr.dim,
        "hypersurfaces": [{"character": list(h.chi0), "value": str(h.value)}
                          for h in arr.hypersurfaces],
        "chain": [list(y) for y in chain],
    }


COMMANDS = {
    "poset": cmd_poset,
    "classify": cmd_classify,
    "hrm": cmd_hrm,
    "trace": cmd_trace,
    "pi1": cmd_pi1,
    "lcs": cmd_lcs,
    "cohomology": cmd_cohomology,
    "betti": cmd_betti,
    "tc": cmd_tc,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="toricarr",
        description="Exact invariants of supersolvable toric arrangements")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_file=True):
        if needs_file:
            p.add_argument("file", help="arrangement JSON file")
        p.add_argument("--format", choices=("json", "text"), default="text")
        p.add_argument("--epsilon", default="1/8",
                       help="tracer scale margin, a rational (default 1/8)")
        p.add_argument("--seed", type=int, default=0,
                       help="deterministic tracer tie-break seed")

    for name in COMMANDS:
        p = sub.add_parser(name)
        common(p)
        if name == "hrm":
            p.add_argument("--stage", type=int, default=0)
        if name == "trace":
            p.add_argument("--stage", type=int, default=0)
            p.add_argument("--all", action="store_true")
        if name == "lcs":
            p.add_argument("--depth", type=int, default=4,
                           help="number of lcs ranks to report")
    p = sub.add_parser("example")
    p.add_argument("name")
    p.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "example":
            payload = example_file(args.name)
            print(json.dumps(payload, indent=2, sort_keys=True))
            return 0
        arr, chain_spec, _ = load_arrangement(args.file)
        payload, text = COMMANDS[args.command](arr, chain_spec, args)
        if args.format == "json":
            print(json.dumps(payload, indent=2, sort_keys=True))
        else:
            print(text)
        return 0
    except ToricArrError as exc:
        print(json.dumps({"error": exc.payload()}, sort_keys=True))
        return 1
    except Exception as exc:  # internal error
        print(json.dumps({"error": {"category": "internal",
                                    "message": f"{type(exc).__name__}: {exc}"}},
                         sort_keys=True))
        return 2


if __name__ == "__main__":
    sys.exit(main())
