"""Command-line frontend exposing every operation with JSON or text output.

Exit codes: 0 success, 1 domain answers of the form "this morphism/object
does not exist" (machine readable as {"error": code, "detail": ...} in JSON
mode), 2 malformed input or flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import DomainError, HassettError, InputError, MarkIndexError, WeightSyntaxError
from .kapranov import (
    detect_losev_manin,
    feasible_cremona_degrees,
    kapranov_aut,
    kapranov_centers,
    kapranov_tower,
    kapranov_weights,
)
from .moduli import (
    aut_descriptor_coarse,
    aut_descriptor_stack,
    boundary_divisors,
    contracted_divisors,
    forgetful_exists,
    reduction_exists,
)
from .perms import admissible_group, is_admissible, signature_preserving_group
from .weights import (
    WeightData,
    can_coincide,
    parse_weight_data,
    signature,
)


def _load_weight_data(spec: str) -> WeightData:
    """Accept inline JSON, a file path, or '-' for stdin."""
    if spec == "-":
        text = sys.stdin.read()
    elif spec.lstrip().startswith("{"):
        text = spec
    else:
        path = Path(spec)
        if not path.is_file():
            raise WeightSyntaxError(f"no such weight-data file: {spec}")
        text = path.read_text(encoding="utf-8")
    return parse_weight_data(text)


def _indices(text: str) -> tuple[int, ...]:
    toks = [t.strip() for t in text.split(",") if t.strip()]
    if not toks:
        raise MarkIndexError(f"expected a comma-separated index list, got {text!r}")
    try:
        return tuple(int(t) for t in toks)
    except ValueError:
        raise MarkIndexError(f"expected integers in the index list, got {text!r}") from None


def _weights_line(data: WeightData) -> str:
    return " ".join(str(w) for w in data.weights)


def _descriptor_text(d) -> list[str]:
    lines = []
    if d.special is not None:
        lines.append(f"special factor: {d.special}" + (" (flagged: classical case)" if d.flagged else ""))
    if d.torus_rank:
        lines.append(f"torus rank: {d.torus_rank}")
    if d.symmetric_factors:
        lines.append("symmetric factors: " + " x ".join(f"S_{k}" for k in d.symmetric_factors))
    if d.finite_part_order is not None:
        lines.append(f"finite part order: {d.finite_part_order}")
    if d.components_witness is not None:
        lines.append("components: " + " ".join("{" + ",".join(map(str, c)) + "}" for c in d.components_witness))
    if d.is_trivial:
        lines.append("trivial group")
    return lines


def _cmd_validate(args):
    data = _load_weight_data(args.inp)
    payload = data.to_doc()
    text = [f"valid weight data: g={data.genus}, n={data.n}", f"weights: {_weights_line(data)}"]
    return payload, text


def _cmd_coincide(args):
    data = _load_weight_data(args.inp)
    subset = _indices(args.set)
    ok = can_coincide(data, subset)
    total = data.sum_of(subset)
    payload = {"set": sorted(set(subset)), "sum": str(total), "can_coincide": ok}
    text = [f"sum over {sorted(set(subset))} = {total}: " + ("may coincide" if ok else "may not coincide")]
    return payload, text


def _cmd_signature(args):
    data = _load_weight_data(args.inp)
    sig = signature(data, args.min_size)
    subsets = [list(s) for s in sig.ordered()]
    payload = {"min_size": sig.min_size, "subsets": subsets}
    text = [f"signature (min size {sig.min_size}): {len(subsets)} subsets"]
    text += ["  {" + ",".join(map(str, s)) + "}" for s in subsets]
    return payload, text


def _cmd_admissible(args):
    data = _load_weight_data(args.inp)
    ok = is_admissible(data, args.i, args.j)
    payload = {"i": args.i, "j": args.j, "admissible": ok}
    text = [f"transposition {args.i} <-> {args.j}: " + ("admissible" if ok else "not admissible")]
    return payload, text


def _cmd_group(args):
    data = _load_weight_data(args.inp)
    group = admissible_group(data)
    payload = {
        "n": group.n,
        "generators": [list(p) for p in group.generators],
        "components": [list(c) for c in group.components],
        "order": str(group.order),
    }
    text = [
        f"admissible group on {group.n} markings, order {group.order}",
        "generators: " + (" ".join(f"({i} {j})" for i, j in group.generators) or "none"),
        "components: " + " ".join("{" + ",".join(map(str, c)) + "}" for c in group.components),
    ]
    return payload, text


def _cmd_oracle(args):
    data = _load_weight_data(args.inp)
    oracle = signature_preserving_group(data)
    payload = {
        "n": oracle.n,
        "order": str(oracle.order),
        "elements": [
            {"one_line": list(p.image), "cycles": p.cycle_string()} for p in oracle.elements
        ],
    }
    text = [f"signature-preserving permutations: order {oracle.order}"]
    text += ["  " + p.cycle_string() for p in oracle.elements]
    return payload, text


def _keep_indices(args, data: WeightData) -> tuple[int, ...]:
    if args.keep is not None:
        return _indices(args.keep)
    dropped = set(_indices(args.drop))
    for i in dropped:
        data.check_index(i)
    return tuple(k for k in range(1, data.n + 1) if k not in dropped)


def _cmd_forgetful(args):
    from .errors import ForgetfulUndefinedError

    data = _load_weight_data(args.inp)
    keep = _keep_indices(args, data)
    if not forgetful_exists(data, keep):
        kept_sum = 2 * data.genus - 2 + data.sum_of(keep)
        raise ForgetfulUndefinedError(
            f"keeping markings {sorted(set(keep))} leaves 2g - 2 + sum = {kept_sum}, not positive"
        )
    kept = sorted(set(keep))
    target = WeightData(data.genus, tuple(data.weights[k - 1] for k in kept))
    payload = {"keep": kept, "weights": target.to_doc()}
    text = [
        f"forgetful morphism keeping {kept} is defined",
        f"target weights: {_weights_line(target)}",
    ]
    return payload, text


def _cmd_reduce(args):
    from .errors import NotReductionError

    data = _load_weight_data(args.inp)
    target = _load_weight_data(args.to)
    if not reduction_exists(data, target):
        raise NotReductionError("the source weights do not dominate the target componentwise")
    payload = {"reduction": True}
    text = ["reduction morphism is defined"]
    return payload, text


def _cmd_contracted(args):
    data = _load_weight_data(args.inp)
    target = _load_weight_data(args.to)
    divisors = contracted_divisors(data, target)
    payload = {"contracted": [list(s) for s in divisors]}
    text = [f"{len(divisors)} contracted divisors"]
    text += ["  {" + ",".join(map(str, s)) + "}" for s in divisors]
    return payload, text


def _cmd_boundary(args):
    data = _load_weight_data(args.inp)
    divisors = boundary_divisors(data)
    payload = {"divisors": [d.to_dict() for d in divisors]}
    text = [f"{len(divisors)} boundary strata"]
    for d in divisors:
        if d.kind == "irr":
            text.append("  irreducible-nodal locus")
        elif d.kind == "nodal":
            text.append(f"  nodal h={d.h} P={{{','.join(map(str, d.part))}}}")
        else:
            text.append(f"  collision S={{{','.join(map(str, d.part))}}}")
    return payload, text


def _cmd_aut(args):
    data = _load_weight_data(args.inp)
    desc = aut_descriptor_coarse(data)
    return desc.to_dict(), _descriptor_text(desc)


def _cmd_aut_stack(args):
    data = _load_weight_data(args.inp)
    desc = aut_descriptor_stack(data)
    return desc.to_dict(), _descriptor_text(desc)


def _stage_dict(n, r, s, weights, centers, rank):
    return {
        "r": r,
        "s": s,
        "weights": [str(w) for w in weights.weights],
        "centers": [list(c.points) for c in centers],
        "rank": rank,
        "aut": kapranov_aut(n, r, s).to_dict(),
    }


def _cmd_kapranov(args):
    n = args.n
    if (args.r is None) != (args.s is None):
        raise InputError("--r and --s must be given together")
    if args.r is not None:
        weights = kapranov_weights(n, args.r, args.s)
        centers = kapranov_centers(n, args.r, args.s)
        rank = next(
            st.picard_rank for st in kapranov_tower(n) if (st.step.r, st.step.s) == (args.r, args.s)
        )
        payload = _stage_dict(n, args.r, args.s, weights, centers, rank)
        text = [
            f"step ({args.r},{args.s}) of the n={n} tower",
            f"weights: {_weights_line(weights)}",
            f"centers ({len(centers)}): " + (" ".join("{" + ",".join(map(str, c.points)) + "}" for c in centers) or "none"),
            f"cumulative picard rank: {rank}",
        ] + _descriptor_text(kapranov_aut(n, args.r, args.s))
        return payload, text
    stages = kapranov_tower(n)
    payload = {
        "n": n,
        "steps": [
            _stage_dict(n, st.step.r, st.step.s, st.weights, st.centers, st.picard_rank)
            for st in stages
        ],
    }
    text = [f"blow-up tower for n={n}: {len(stages)} steps, final rank {stages[-1].picard_rank}"]
    for st in stages:
        desc = kapranov_aut(n, st.step.r, st.step.s)
        aut = desc.special if desc.special else (
            (f"(C*)^{desc.torus_rank} x " if desc.torus_rank else "")
            + " x ".join(f"S_{k}" for k in desc.symmetric_factors)
        )
        text.append(
            f"  ({st.step.r},{st.step.s}) weights [{_weights_line(st.weights)}] "
            f"centers {len(st.centers)} rank {st.picard_rank} aut {aut}"
        )
    return payload, text


def _cmd_losev_manin(args):
    data = _load_weight_data(args.inp)
    m = detect_losev_manin(data)
    payload = {"losev_manin": m}
    text = [f"Losev-Manin space of {m} light markings" if m is not None else "not a Losev-Manin datum"]
    return payload, text


def _cmd_cremona(args):
    degrees = feasible_cremona_degrees(args.n, args.r_class)
    payload = {
        "n": args.n,
        "r_class": args.r_class,
        "degrees": [
            {"d": d, "multiplicities": [list(page) for page in profile]}
            for d, profile in sorted(degrees.items())
        ],
    }
    text = [f"feasible degrees for n={args.n}, r class {args.r_class}: "
            + " ".join(str(d) for d in sorted(degrees))]
    for d, profile in sorted(degrees.items()):
        if profile:
            text.append(
                f"  d={d}: " + " ".join(f"mult {m} along size-{h} spans" for h, m in profile)
            )
        else:
            text.append(f"  d={d}: base point free")
    return payload, text


_COMMANDS = {
    "validate": (_cmd_validate, "parse and validate a weight-data document"),
    "coincide": (_cmd_coincide, "may the markings in --set lie at one point?"),
    "signature": (_cmd_signature, "coincidence subsets of size >= --min-size"),
    "admissible": (_cmd_admissible, "is the transposition --i <-> --j admissible?"),
    "group": (_cmd_group, "group generated by the admissible transpositions"),
    "oracle": (_cmd_oracle, "exhaustive signature-preserving permutation set (n <= 8)"),
    "forgetful": (_cmd_forgetful, "does the forgetful morphism exist? (--keep or --drop)"),
    "reduce": (_cmd_reduce, "does a reduction morphism onto --to exist?"),
    "contracted": (_cmd_contracted, "divisors contracted by the reduction onto --to"),
    "boundary": (_cmd_boundary, "boundary strata of the weight datum"),
    "aut": (_cmd_aut, "automorphism descriptor of the coarse space (g >= 1)"),
    "aut-stack": (_cmd_aut_stack, "automorphism descriptor of the stack (g >= 1)"),
    "kapranov": (_cmd_kapranov, "blow-up schedule for --n (optionally one --r --s step)"),
    "losev-manin": (_cmd_losev_manin, "detect the Losev-Manin weight datum"),
    "cremona": (_cmd_cremona, "feasible self-map degrees for --n and --r-class"),
}

_NEEDS_IN = {
    "validate", "coincide", "signature", "admissible", "group", "oracle",
    "forgetful", "reduce", "contracted", "boundary", "aut", "aut-stack",
    "losev-manin",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hassett",
        description="exact combinatorics of weighted pointed-curve moduli spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in _COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("json", "text"), default="json")
        if name in _NEEDS_IN:
            p.add_argument(
                "--in", dest="inp", required=True,
                help="weight data: inline JSON, a file path, or - for stdin",
            )
        if name == "coincide":
            p.add_argument("--set", required=True, help="comma-separated marking indices")
        if name == "signature":
            p.add_argument("--min-size", type=int, default=2)
        if name == "admissible":
            p.add_argument("--i", type=int, required=True)
            p.add_argument("--j", type=int, required=True)
        if name == "forgetful":
            g = p.add_mutually_exclusive_group(required=True)
            g.add_argument("--keep", help="indices to keep, comma separated")
            g.add_argument("--drop", help="indices to drop, comma separated")
        if name in ("reduce", "contracted"):
            p.add_argument("--to", required=True, help="target weight data (same forms as --in)")
        if name == "kapranov":
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--r", type=int)
            p.add_argument("--s", type=int)
            p.add_argument("--list", action="store_true", help="print the full schedule (default)")
        if name == "cremona":
            p.add_argument("--n", type=int, required=True)
            p.add_argument("--r-class", dest="r_class", choices=("1", "2+"), required=True)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler, _ = _COMMANDS[args.command]
    fmt = args.format
    try:
        payload, text = handler(args)
    except HassettError as exc:
        if fmt == "json":
            print(json.dumps({"error": exc.code, "detail": str(exc)}, indent=2))
        else:
            print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 2 if isinstance(exc, InputError) else 1
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text))
    return 0


if __name__ == "__main__":
    sys.exit(main())
