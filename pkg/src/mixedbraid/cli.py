"""Command-line interface: ``mixedbraid <command> --parts 2,2 --degrees 3,5 ...``.

Exit codes: 0 success, 1 a verification check failed, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from typing import Iterable, Sequence

from . import linalg as la
from .analysis import image_finiteness
from .braid import BraidWord, MixedBraidSpec, Twist, parse_word, relations_general
from .burau import (
    burau_word,
    duality_transform,
    evaluate,
    reduced_burau,
    theta_via_reduced,
)
from .cover import (
    Character,
    CoverSpec,
    chevalley_weil_signature,
    eigenspace_dim,
    genus,
    infinity_order,
    primed_characters,
)
from .rep import (
    DegenerateCharacter,
    ThetaRep,
    gram_determinant_check,
    gram_matrix,
    is_irreducible,
    linear_relation_check,
    matrix_to_json,
    signature_from_gram,
    tau_power_check,
    theta_generator_reflection,
    verify_unitary,
)

COMMANDS = ("gram", "rep", "burau", "cover", "verify", "analyze")
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_tuple(text: str, what: str) -> tuple[int, ...]:
    try:
        out = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"{what} must be a comma separated list of integers, got {text!r}") from None
    if not out:
        raise UsageError(f"{what} is empty")
    return out


@dataclass(frozen=True)
class JobConfig:
    command: str
    parts: tuple[int, ...]
    degrees: tuple[int, ...] | None = None
    rho: tuple[int, ...] | str | None = None  # exponents k_j, or "all"
    word: str | None = None
    gen: str | None = None
    reduced: bool = False
    output: str = "text"
    precision: int | None = None
    jobs: int = 1

    KEYS = ("command", "parts", "degrees", "rho", "word", "gen", "reduced", "output", "precision", "jobs")

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.output not in ("json", "text"):
            raise UsageError(f"output must be json or text, got {self.output!r}")
        if self.precision is not None and self.precision < 32:
            raise UsageError("precision must be at least 32 bits")
        if self.jobs < 1:
            raise UsageError("jobs must be positive")

    # parsing --------------------------------------------------------------

    @classmethod
    def from_mapping(cls, data: dict[str, str]) -> "JobConfig":
        unknown = set(data) - set(cls.KEYS)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        if "command" not in data or "parts" not in data:
            raise UsageError("config needs at least command and parts")
        rho: tuple[int, ...] | str | None = None
        if data.get("rho"):
            rho = "all" if data["rho"].strip() == "all" else _int_tuple(data["rho"], "rho")
        try:
            precision = int(data["precision"]) if data.get("precision") else None
            jobs = int(data.get("jobs") or 1)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return cls(
            command=data["command"].strip(),
            parts=_int_tuple(data["parts"], "parts"),
            degrees=_int_tuple(data["degrees"], "degrees") if data.get("degrees") else None,
            rho=rho,
            word=data.get("word") or None,
            gen=data.get("gen") or None,
            reduced=str(data.get("reduced", "false")).lower() in ("1", "true", "yes"),
            output=(data.get("output") or "text").strip(),
            precision=precision,
            jobs=jobs,
        )

    @classmethod
    def parse(cls, text: str) -> "JobConfig":
        """Parse ``key = value`` lines; blank lines and ``#`` comments are ignored."""
        return cls.from_mapping(_parse_kv(text))

    def serialize(self) -> str:
        """Canonical text form: fixed key order, defaults omitted."""
        lines = []
        for key in self.KEYS:
            value = getattr(self, key)
            default = _DEFAULTS.get(key)
            if value is None or (key in _DEFAULTS and value == default):
                continue
            if isinstance(value, tuple):
                value = ",".join(map(str, value))
            elif isinstance(value, bool):
                value = "true" if value else "false"
            lines.append(f"{key}={value}")
        return "\n".join(lines) + "\n"

    # domain objects -------------------------------------------------------

    def spec(self) -> MixedBraidSpec:
        try:
            return MixedBraidSpec(self.parts)
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    def cover(self) -> CoverSpec:
        if self.degrees is None:
            raise UsageError(f"{self.command} needs --degrees")
        try:
            return CoverSpec(self.spec(), self.degrees)
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    def characters(self, require: bool = True) -> list[Character]:
        c = self.cover()
        if self.rho is None:
            if require:
                raise UsageError(f"{self.command} needs --rho or --all-rho")
            return []
        if self.rho == "all":
            return list(primed_characters(c))
        try:
            return [Character(c, self.rho)]
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    def braid_word(self, raw_ok: bool = False) -> BraidWord:
        text = self.word if self.word is not None else self.gen
        if text is None:
            raise UsageError(f"{self.command} needs --word or --gen")
        try:
            w = parse_word(text)
            if raw_ok and not any(isinstance(g, Twist) for g, _ in w):
                w = parse_word(text, raw=True)
            w.validate(self.spec())
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return w


_DEFAULTS = {f.name: f.default for f in fields(JobConfig) if f.default is not None}


def _parse_kv(text: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for n, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"config line {n}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out


# --- rendering ------------------------------------------------------------


def _matrix_text(A) -> str:
    rows = [[x.to_text() if hasattr(x, "to_text") else str(x) for x in row] for row in A]
    width = max((len(s) for row in rows for s in row), default=0)
    return "\n".join("  ".join(s.ljust(width) for s in row).rstrip() for row in rows)


def _emit_matrix(cfg: JobConfig, title: str, A) -> str:
    if cfg.output == "json":
        return json.dumps({"object": title, **matrix_to_json(A, cfg.precision)}, sort_keys=True)
    text = f"{title}\n{_matrix_text(A)}"
    if cfg.precision is not None:
        floats = matrix_to_json(A, cfg.precision)["complex"]
        text += f"\n(complex, {cfg.precision}-bit)\n" + "\n".join(
            "  ".join(f"{re:+.12g}{im:+.12g}i" for re, im in row) for row in floats
        )
    return text


# --- commands -------------------------------------------------------------


def cmd_gram(cfg: JobConfig) -> tuple[int, str]:
    outs = []
    for rho in cfg.characters():
        try:
            M = gram_matrix(rho.cover, rho)
        except DegenerateCharacter as exc:
            raise UsageError(f"domain error: {exc}") from None
        outs.append(_emit_matrix(cfg, f"gram rho={rho}", M))
    return EXIT_OK, "\n".join(outs)


def cmd_rep(cfg: JobConfig) -> tuple[int, str]:
    w = cfg.braid_word()
    outs = []
    for rho in cfg.characters():
        try:
            A = ThetaRep(rho.cover, rho).word(w)
        except DegenerateCharacter as exc:
            raise UsageError(
                f"domain error: {exc}. The representation matrices need rho_j * rho_k != 1"
            ) from None
        outs.append(_emit_matrix(cfg, f"theta rho={rho} word={w}", A))
    return EXIT_OK, "\n".join(outs)


def cmd_burau(cfg: JobConfig) -> tuple[int, str]:
    spec = cfg.spec()
    w = cfg.braid_word(raw_ok=True)
    try:
        M = reduced_burau(w, spec) if cfg.reduced else burau_word(w, spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    label = "reduced burau" if cfg.reduced else "burau"
    if cfg.rho is not None:
        outs = [
            _emit_matrix(cfg, f"{label} word={w} at rho={rho}", evaluate(M, rho))
            for rho in cfg.characters()
        ]
        return EXIT_OK, "\n".join(outs)
    if cfg.output == "json":
        return EXIT_OK, json.dumps(
            {"object": label, "dim": len(M), "entries": [[p.to_text() for p in row] for row in M]},
            sort_keys=True,
        )
    return EXIT_OK, f"{label} word={w}\n{_matrix_text(M)}"


def cmd_cover(cfg: JobConfig) -> tuple[int, str]:
    c = cfg.cover()
    f, e = infinity_order(c)
    summary = {"parts": list(c.parts), "degrees": list(c.degrees), "order": c.group_order,
               "f": f, "e": e, "genus": genus(c)}
    chars = []
    for rho in cfg.characters(require=False):
        row = {"rho": list(rho.exps), "dim": eigenspace_dim(c, rho)}
        if rho.primed:
            row["signature"] = list(chevalley_weil_signature(c, rho))
        chars.append(row)
    if chars:
        summary["characters"] = chars
    if cfg.output == "json":
        return EXIT_OK, json.dumps(summary, sort_keys=True)
    lines = [f"genus={summary['genus']} f={f} e={e} |Gamma|={c.group_order}"]
    for row in chars:
        sig = f" signature={tuple(row['signature'])}" if "signature" in row else ""
        lines.append(f"rho={tuple(row['rho'])} dim={row['dim']}{sig}")
    return EXIT_OK, "\n".join(lines)


def cmd_analyze(cfg: JobConfig) -> tuple[int, str]:
    rows = []
    for rho in cfg.characters():
        v = image_finiteness(rho.cover, rho)
        rows.append({"rho": list(rho.exps), "verdict": v.tag.value, "witness": v.witness,
                     "pair": list(v.pair) if v.pair else None})
    if cfg.output == "json":
        return EXIT_OK, json.dumps(rows, sort_keys=True)
    lines = []
    for r in rows:
        extra = f" witness block {r['witness']} (n, d) = {tuple(r['pair'])}" if r["witness"] else ""
        lines.append(f"rho={tuple(r['rho'])} {r['verdict']}{extra}")
    return EXIT_OK, "\n".join(lines)


PASS, FAIL, SKIP = "pass", "fail", "skip"


def verify_character(rho: Character) -> dict[str, str]:
    """Run every applicable check for one character; values are pass/fail/skip."""
    c = rho.cover
    out: dict[str, str] = {}

    def record(name: str, ok: bool) -> None:
        out[name] = PASS if ok else FAIL

    record("determinant", gram_determinant_check(c, rho))
    M = gram_matrix(c, rho)
    degenerate_infinity = rho.total_angle() == 0
    if degenerate_infinity:
        record("rank", la.rank(M) == c.spec.n - 2)
        record("linear_relation", linear_relation_check(c, rho))
    else:
        record("rank", la.rank(M) == eigenspace_dim(c, rho))
        pos, neg = signature_from_gram(M)
        # the Hodge pair (r, s) counts the negative directions of this form first
        record("signature", chevalley_weil_signature(c, rho) == (neg, pos))
    if not rho.admissible:
        for name in ("construction", "unitary", "relations", "duality", "reduced_duality",
                     "tau_power", "irreducible"):
            out[name] = SKIP
        return out
    rep = ThetaRep(c, rho)
    gens = c.spec.mixed_generators()
    record("construction", all(
        la.equal(rep.generator(g), theta_generator_reflection(c, rho, g, M)) for g in gens))
    record("unitary", all(verify_unitary(rep.generator(g), M) for g in gens))
    record("relations", all(la.equal(rep.word(a), rep.word(b)) for a, b in relations_general(c.spec)))
    if rho.nondegenerate and not degenerate_infinity:
        _, ok = duality_transform(c, rho)
        record("duality", ok)
    else:
        out["duality"] = SKIP
    record("reduced_duality", all(
        la.equal(theta_via_reduced(c, rho, BraidWord(((g, 1),))), rep.generator(g)) for g in gens))
    record("tau_power", tau_power_check(c, rho))
    record("irreducible", is_irreducible(c, rho))
    return out


def _verify_task(args: tuple) -> dict[str, str]:
    parts, degrees, exps = args
    return verify_character(Character(CoverSpec.of(parts, degrees), exps))


def run_verify(chars: Sequence[Character], jobs: int = 1) -> list[dict[str, str]]:
    tasks = [(rho.cover.parts, rho.cover.degrees, rho.exps) for rho in chars]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_task, tasks))  # map keeps input order
    return [_verify_task(t) for t in tasks]


def cmd_verify(cfg: JobConfig) -> tuple[int, str]:
    chars = cfg.characters()
    for rho in chars:
        if not rho.primed:
            raise UsageError(f"domain error: character {rho} has some rho_j = 1")
    results = run_verify(chars, cfg.jobs)
    failed = any(FAIL in r.values() for r in results)
    if cfg.output == "json":
        text = json.dumps(
            [{"rho": list(rho.exps), "checks": r, "ok": FAIL not in r.values()}
             for rho, r in zip(chars, results)],
            sort_keys=True,
        )
    else:
        lines = []
        for rho, r in zip(chars, results):
            status = "FAIL" if FAIL in r.values() else "ok"
            detail = " ".join(f"{k}={v}" for k, v in r.items())
            lines.append(f"rho={rho} {status}: {detail}")
        text = "\n".join(lines)
    return (EXIT_FAIL if failed else EXIT_OK), text


HANDLERS = {
    "gram": cmd_gram,
    "rep": cmd_rep,
    "burau": cmd_burau,
    "cover": cmd_cover,
    "verify": cmd_verify,
    "analyze": cmd_analyze,
}


# --- argument parsing -----------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixedbraid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--config", help="file of key=value lines; flags override it")
        p.add_argument("--parts", help="block sizes, e.g. 2,2")
        p.add_argument("--degrees", help="cyclic degrees, e.g. 3,5")
        group = p.add_mutually_exclusive_group()
        group.add_argument("--rho", help="character exponents k_j with rho_j = zeta_{d_j}^(-k_j)")
        group.add_argument("--all-rho", action="store_true", help="every character with all rho_j != 1")
        p.add_argument("--word", help="braid word such as 's1 A1,2^-1 s3'")
        p.add_argument("--gen", help="a single generator such as s1 or A1,2")
        p.add_argument("--reduced", action="store_true", help="burau: reduced representation")
        p.add_argument("--output", choices=("json", "text"))
        p.add_argument("--precision", type=int, help="also print complex floats at this many bits")
        p.add_argument("--jobs", type=int, help="worker processes for character sweeps")
    return parser


def config_from_args(ns: argparse.Namespace) -> JobConfig:
    data: dict[str, str] = {}
    if ns.config:
        try:
            with open(ns.config, encoding="utf-8") as fh:
                data.update(_parse_kv(fh.read()))
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}") from None
    data["command"] = ns.command
    for key in ("parts", "degrees", "rho", "word", "gen", "output"):
        value = getattr(ns, key)
        if value is not None:
            data[key] = value
    if ns.all_rho:
        data["rho"] = "all"
    if ns.reduced:
        data["reduced"] = "true"
    if ns.precision is not None:
        data["precision"] = str(ns.precision)
    if ns.jobs is not None:
        data["jobs"] = str(ns.jobs)
    return JobConfig.from_mapping(data)


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(None if argv is None else list(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = config_from_args(ns)
        code, text = HANDLERS[cfg.command](cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
