"""Command line front end.

Root indices are 1-based: ``--word 1,2,1,2`` is the word (alpha_1, alpha_2,
alpha_1, alpha_2).  Exit codes: 0 on success, 1 on a domain error (reported as
JSON on stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from importlib import resources
from itertools import combinations, product
from typing import Callable, Sequence

from .bs_word import BSWord, analyze, canonical_class, format_combination, o_basis_matrix
from .chow_ring import CycleClass, chow_ring, pairing_matrix
from .cones import (
    effective_cone_2cycles,
    effective_cone_divisors,
    is_ample,
    is_globally_generated,
    nef2_cone,
    nef_divisor_cone,
    ray_intersection_matrix,
)
from .errors import BottSamelsonError
from .logfano import log_fano_certificate
from .orbits import aut_stabilization, dense_orbit_criterion
from .polyhedra import contains
from .richardson import intersection_desing
from .root_system import CartanMatrix, RootSystem


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed word {text!r}; expected comma-separated integers like 1,2,1")


def _pairs(d: int) -> list[str]:
    return [",".join(map(str, p)) for p in combinations(range(1, d + 1), 2)]


def _cycle_text(d: int, vec) -> str:
    return CycleClass.from_vector(d, 2, vec).text()


def _num(x):
    return int(x) if getattr(x, "denominator", 1) == 1 else str(x)


# --- subcommands: each returns (json_payload, text) -------------------------


def cmd_analyze(rs, args):
    bsw = analyze(args.word, rs)
    out = bsw.to_json()
    out["o_basis"] = [[_num(c) for c in row] for row in o_basis_matrix(bsw)]
    out["anticanonical"] = [_num(c) for c in canonical_class(bsw)]
    lines = [
        f"type {rs.name}, word {list(bsw.word)}, d = {bsw.d}",
        f"reduced steps: {list(bsw.reduced_step)}",
        f"Demazure product: length {bsw.w.length}, reduced word {list(bsw.w.reduced_word)}",
        f"non-reduced positions: {list(bsw.sigma_positions)}",
        f"-K = {canonical_class(bsw).text()}",
    ]
    return out, "\n".join(lines)


def cmd_eff_div(rs, args):
    rep = effective_cone_divisors(analyze(args.word, rs))
    lines = []
    for g, e in zip(rep.generators, rep.extremal):
        lines.append(f"{g.text():<40} {'extremal' if e else 'redundant'}")
    for s in rep.sigmas:
        comps = ", ".join(f"{m} {c}" for c, m in zip(s.components, s.multiplicities)) or "none"
        lines.append(f"Sigma{s.position}: subtracted components {comps}")
    lines.append(f"{rep.extremal_count} extremal rays")
    return rep.to_json(), "\n".join(lines)


def cmd_nef_div(rs, args):
    bsw = analyze(args.word, rs)
    cone = nef_divisor_cone(bsw)
    out = {"type": rs.name, "word": list(bsw.word), "rays": cone.to_json()}
    lines = [f"O_{i}(1) = {format_combination(r, lambda k: f'X{k + 1}')}" for i, r in enumerate(cone.rays, 1)]
    if args.cls is not None:
        if len(args.cls) != bsw.d:
            raise BottSamelsonError("class length does not match word", length=len(args.cls), d=bsw.d)
        out["class"] = list(args.cls)
        out["ample"] = is_ample(bsw, args.cls)
        out["globally_generated"] = is_globally_generated(bsw, args.cls)
        lines.append(f"class ample: {out['ample']}, globally generated: {out['globally_generated']}")
    return out, "\n".join(lines)


def cmd_eff2(rs, args):
    bsw = analyze(args.word, rs)
    cone = effective_cone_2cycles(bsw)
    out = {"type": rs.name, "word": list(bsw.word), "basis": _pairs(bsw.d), "rays": cone.to_json()}
    return out, "\n".join(_cycle_text(bsw.d, r) for r in cone.rays)


def cmd_nef2(rs, args):
    bsw = analyze(args.word, rs)
    eff = effective_cone_2cycles(bsw)
    nef = nef2_cone(bsw)
    out = {
        "type": rs.name,
        "word": list(bsw.word),
        "basis": _pairs(bsw.d),
        "rays": nef.to_json(),
        "eff2_rays": eff.to_json(),
        "eff2_intersection_matrix": [[_num(x) for x in row] for row in ray_intersection_matrix(bsw, eff.rays)],
        "contained_in_eff2": all(contains(eff, r) for r in nef.rays),
    }
    lines = [_cycle_text(bsw.d, r) for r in nef.rays]
    lines.append(f"contained in Eff_2: {out['contained_in_eff2']}")
    return out, "\n".join(lines)


def cmd_chow(rs, args):
    bsw = analyze(args.word, rs)
    ring = chow_ring(bsw)
    pairs = {f"{j},{i}": ring.beta_pairing(j, i) for j in range(1, bsw.d + 1) for i in range(1, j)}
    squares = {str(j): ring.square(j).to_json() for j in range(1, bsw.d + 1)} if bsw.d >= 2 else {}
    out = {"type": rs.name, "word": list(bsw.word), "beta_pairings": pairs, "squares": squares}
    lines = [f"x{j}^2 = {ring.square(j).text()}" for j in range(1, bsw.d + 1)] if bsw.d >= 2 else []
    return out, "\n".join(lines)


def cmd_pairing(rs, args):
    bsw = analyze(args.word, rs)
    k = args.k if args.k is not None else bsw.d // 2
    mat = pairing_matrix(bsw, k)
    out = {
        "type": rs.name,
        "word": list(bsw.word),
        "k": k,
        "rows": [",".join(map(str, m)) for m in combinations(range(1, bsw.d + 1), k)],
        "cols": [",".join(map(str, m)) for m in combinations(range(1, bsw.d + 1), bsw.d - k)],
        "matrix": [[_num(x) for x in row] for row in mat],
    }
    return out, "\n".join(" ".join(f"{x:>4}" for x in row) for row in out["matrix"])


def cmd_orbit(rs, args):
    bsw = analyze(args.word, rs)
    rep = dense_orbit_criterion(bsw, args.subword)
    out = rep.to_json()
    out.update(type=rs.name, word=list(bsw.word))
    lines = [f"subword {list(rep.subword)}, characters {out['characters']}, rank {rep.rank}: {rep.verdict}"]
    if rs.finite:
        out["aut_stabilization"] = aut_stabilization(bsw)
        lines.append(f"prefix generates G: {out['aut_stabilization']}")
    return out, "\n".join(lines)


def cmd_logfano(rs, args):
    bsw = analyze(args.word, rs)
    cert = log_fano_certificate(bsw, args.M)
    out = cert.to_json()
    out.update(type=rs.name, word=list(bsw.word))
    lines = [
        f"a = {list(cert.a)}, M = {cert.M}",
        f"Delta = {cert.delta.text()}",
        f"-K = {cert.anticanonical.text()}",
        f"checks: {cert.checks}",
    ]
    return out, "\n".join(lines)


def cmd_richardson(rs, args):
    rep = intersection_desing(rs, args.word_u, args.word_v)
    lines = [
        f"concatenated word {list(rep.concatenated.word)}",
        f"w: length {rep.w.length}, reduced word {list(rep.w.reduced_word)}",
        f"fiber dimension {rep.fiber_dimension}",
        f"torus orbit closure: {rep.orbit.verdict}",
    ]
    if rep.warning:
        lines.append("warning: " + rep.warning)
    return rep.to_json(), "\n".join(lines)


def _corpus_words(rs, args):
    if args.sample is not None:
        rng = random.Random(args.seed)
        for _ in range(args.sample):
            n = rng.randint(0, args.max_len)
            yield tuple(rng.randint(1, rs.rank) for _ in range(n))
        return
    for n in range(args.max_len + 1):
        yield from product(range(1, rs.rank + 1), repeat=n)


def corpus_report(bsw: BSWord) -> dict:
    rep = {"word": list(bsw.word), "reduced": bsw.is_reduced}
    try:
        eff = effective_cone_divisors(bsw)
        rep["eff_div"] = {"generators": eff.to_json()["generators"], "extremal_count": eff.extremal_count}
    except BottSamelsonError as e:
        rep["eff_div"] = e.to_json()
    rep["dense_orbit"] = dense_orbit_criterion(bsw).verdict
    rep["log_fano"] = log_fano_certificate(bsw).ok
    return rep


def cmd_corpus(rs, args):
    reports = [corpus_report(analyze(w, rs)) for w in _corpus_words(rs, args)]
    out = {"type": rs.name, "max_len": args.max_len, "reports": reports}
    lines = []
    for r in reports:
        eff = r["eff_div"]
        cnt = eff.get("extremal_count", eff.get("error"))
        lines.append(f"{','.join(map(str, r['word'])) or '-':<16} eff rays {cnt}, orbit {r['dense_orbit']}, log Fano {r['log_fano']}")
    return out, "\n".join(lines)


COMMANDS: dict[str, tuple[Callable, str]] = {
    "analyze": (cmd_analyze, "prefix Demazure products and basic data"),
    "eff-div": (cmd_eff_div, "effective cone of divisors"),
    "nef-div": (cmd_nef_div, "nef cone of divisors; optional ampleness test"),
    "eff2": (cmd_eff2, "effective cone of codimension-two cycles (reduced words)"),
    "nef2": (cmd_nef2, "nef cone of codimension-two classes (reduced words, d = 4)"),
    "chow": (cmd_chow, "Chow ring structure constants"),
    "pairing": (cmd_pairing, "intersection pairing matrix A^k x A^(d-k)"),
    "orbit": (cmd_orbit, "dense B-orbit criterion"),
    "logfano": (cmd_logfano, "log Fano certificate"),
    "richardson": (cmd_richardson, "Richardson desingularization data"),
    "corpus": (cmd_corpus, "sweep all words up to a length"),
}


def load_schema(name: str) -> dict:
    """Published JSON schema for a subcommand's output (``"error"`` for stderr reports)."""
    return json.loads(resources.files("bottsamelson").joinpath("schemas", f"{name}.json").read_text())


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--type", help="Cartan type such as A2, C2, G2, E8")
    src.add_argument("--cartan-file", help='JSON file {"rank": n, "matrix": [[...]]}')
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")

    parser = argparse.ArgumentParser(prog="bott-samelson", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_)
        if name == "richardson":
            p.add_argument("--word-u", type=parse_word, required=True)
            p.add_argument("--word-v", type=parse_word, required=True)
        elif name == "corpus":
            p.add_argument("--max-len", type=int, required=True)
            p.add_argument("--sample", type=int, help="number of random words instead of a full sweep")
        else:
            p.add_argument("--word", type=parse_word, required=True)
        if name == "nef-div":
            p.add_argument("--class", dest="cls", type=parse_word, help="X-coefficients to test")
        if name == "pairing":
            p.add_argument("--k", type=int)
        if name == "orbit":
            p.add_argument("--subword", type=parse_word, help="positions of a reduced subword")
        if name == "logfano":
            p.add_argument("--M", type=int)
    return parser


def load_root_system(args) -> RootSystem:
    if args.type:
        return RootSystem.from_type(args.type)
    return RootSystem(CartanMatrix.load(args.cartan_file))


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        rs = load_root_system(args)
        payload, text = COMMANDS[args.command][0](rs, args)
    except BottSamelsonError as e:
        stderr.write(json.dumps(e.to_json(), sort_keys=True, default=str) + "\n")
        return 1
    except OSError as e:
        stderr.write(json.dumps({"error": "io_error", "message": str(e)}) + "\n")
        return 1
    if args.format == "json":
        stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        stdout.write(text + "\n")
    return 0


def main() -> None:
    sys.exit(run())
