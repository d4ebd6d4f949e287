"""Command-line front end.

    liecomplexity generate --cf "2;(1)" --len 13
    liecomplexity profile  --cf "2;(1)" --n 0..20 --methods bruteforce,rauzy,formula
    liecomplexity rauzy    --morphism "0->01,1->10" --seed-symbol 0 --n 4 --format dot
    liecomplexity formula  --cf "3;(2)" --n 4
    liecomplexity verify   --cf "3;(2)" --n 1..40

Exit codes: 0 ok, 2 usage, 3 digits exhausted, 4 saturation failure,
5 method disagreement or failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from . import export
from .complexity import METHODS, check_agreement, profile
from .errors import LieComplexityError, SpecParseError, VerificationFailure
from .rauzy import lie_cycles, rauzy_graph
from .sources import (DEFAULT_MORPHIC_LENGTH, DEFAULT_PREFIX_CAP, WordSource,
                      parse_morphism)
from .sturmian import (SlopeSpec, denominators_until, normalize, semistandard_prefix,
                       standard_prefix)
from .verify import Check, index_set_of_conjugates, verify_conjugate_closure
from .words import read_word

COMMANDS = ("generate", "profile", "rauzy", "formula", "verify")
FORMATS = ("csv", "json", "dot")


class UsageError(LieComplexityError):
    exit_code = 2
    kind = "usage"


def parse_range(text: str) -> Tuple[int, int]:
    """``"a..b"`` (inclusive) or a single integer."""
    lo, sep, hi = text.strip().partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise SpecParseError(f"bad range {text!r}; expected 'a..b' or 'n'") from None
    if a < 0 or b < a:
        raise SpecParseError(f"bad range {text!r}; need 0 <= a <= b")
    return a, b


@dataclass
class RunConfig:
    command: str
    cf: Optional[str] = None
    word_file: Optional[str] = None
    alphabet: str = "01"
    morphism: Optional[str] = None
    seed_symbol: Optional[str] = None
    n_range: Tuple[int, int] = (0, 0)
    length: Optional[int] = None
    methods: Tuple[str, ...] = METHODS
    out: Optional[str] = None
    fmt: Optional[str] = None
    prefix_cap: int = DEFAULT_PREFIX_CAP
    prefix_len: int = DEFAULT_MORPHIC_LENGTH
    _spec: Optional[SlopeSpec] = field(default=None, repr=False)

    def validate(self) -> None:
        given = [x for x in (self.cf, self.word_file, self.morphism) if x is not None]
        if len(given) != 1:
            raise UsageError("exactly one of --cf, --word-file, --morphism is required")
        if self.morphism is not None and not self.seed_symbol:
            raise UsageError("--morphism needs --seed-symbol")
        if self.command == "rauzy" and self.n_range[0] < 1:
            raise UsageError("rauzy needs n >= 1")
        if self.command in ("formula",) and self.cf is None:
            raise UsageError("formula requires a --cf source")
        if self.command == "profile" and "formula" in self.methods and self.cf is None:
            raise UsageError("formula method requires a --cf source")
        if self.command == "generate" and self.length is None:
            raise UsageError("generate needs --len")
        allowed = {"generate": (None,), "profile": ("csv", "json"),
                   "rauzy": ("dot", "json"), "formula": ("csv", "json"),
                   "verify": ("csv", "json")}[self.command]
        if self.fmt is not None and self.fmt not in allowed:
            raise UsageError(f"{self.command} does not support --format {self.fmt}")

    @property
    def ns(self) -> range:
        return range(self.n_range[0], self.n_range[1] + 1)

    @property
    def spec(self) -> Optional[SlopeSpec]:
        """The normalized slope of a ``--cf`` source."""
        if self.cf is None:
            return None
        if self._spec is None:
            self._spec = normalize(SlopeSpec.parse(self.cf))[0]
        return self._spec

    def source(self) -> WordSource:
        if self.cf is not None:
            return WordSource.sturmian(SlopeSpec.parse(self.cf), prefix_cap=self.prefix_cap)
        if self.morphism is not None:
            length = max(self.prefix_len, self.length or 0)
            return WordSource.morphism(parse_morphism(self.morphism), self.seed_symbol, length)
        try:
            word = read_word(self.word_file, self.alphabet)
        except ValueError as exc:
            raise SpecParseError(str(exc)) from None
        return WordSource.literal(word)


def _index_set_checks(cfg: RunConfig, source: WordSource) -> List[Check]:
    spec = cfg.spec
    top = cfg.n_range[1]
    checks = []
    table = denominators_until(spec, top)
    for k in range(1, table.k_max):
        d_next = spec.d(k + 1)
        expected = {d_next + 1} if k == 1 else {d_next + 1, d_next + 2}
        res = index_set_of_conjugates(source, standard_prefix(spec, k).word)
        checks.append(_index_check(f"index_set:s_{k}", table[k], res, expected))
        if k >= 2:
            for l in range(1, spec.d(k)):
                w = semistandard_prefix(spec, k, l).word
                res = index_set_of_conjugates(source, w)
                checks.append(_index_check(f"index_set:s_{k},{l}", len(w), res, {1, 2}))
    return checks


def _index_check(name, n, res, expected) -> Check:
    flag = "" if res.certified else " UNCERTIFIED"
    return Check(name, n, set(res.values) == expected,
                 f"got={sorted(res.values)} expected={sorted(expected)}{flag}")


def _verify_checks(cfg: RunConfig) -> List[Check]:
    src = cfg.source()
    checks: List[Check] = []
    for n in cfg.ns:
        if n < 1:
            continue
        row = profile(src, [n], ("bruteforce", "rauzy"))[0]
        checks.append(Check("bound", n, row.bound_ok,
                            f"L={row.lie_bruteforce} delta_p+1={row.delta_p + 1}"))
        checks.append(Check("cycles_equal_classes", n,
                            row.lie_rauzy == row.lie_bruteforce,
                            f"rauzy={row.lie_rauzy} bruteforce={row.lie_bruteforce}"))
        cycles = lie_cycles(rauzy_graph(src, n))
        used = [e for c in cycles for e in c.walk]
        checks.append(Check("cycles_edge_disjoint", n, len(used) == len(set(used)),
                            f"cycles={len(cycles)}"))
        if cfg.cf is not None and n >= 2:
            checks.extend(verify_conjugate_closure(src, n, cfg.spec).checks)
    if cfg.cf is not None:
        checks.extend(_index_set_checks(cfg, src))
    return checks


def run(cfg: RunConfig, stdout=None) -> int:
    """Execute one command; returns the process exit status."""
    stdout = stdout or sys.stdout
    cfg.validate()
    status = 0
    failure: Optional[LieComplexityError] = None
    if cfg.command == "generate":
        text = cfg.source().prefix(cfg.length) + "\n"
    elif cfg.command == "profile":
        rows = profile(cfg.source(), cfg.ns, cfg.methods,
                       spec=cfg.spec if "formula" in cfg.methods else None)
        if cfg.fmt == "json":
            text = export.profile_json(rows, source=cfg.source().describe())
        else:
            text = export.profile_csv(rows)
        try:
            check_agreement(rows)
        except LieComplexityError as exc:
            failure = exc
    elif cfg.command == "formula":
        rows = profile(cfg.source(), cfg.ns, ("formula",), spec=cfg.spec)
        if cfg.fmt == "json":
            text = export.profile_json(rows, export.FORMULA_FIELDS, source=str(cfg.spec))
        else:
            text = export.profile_csv(rows, export.FORMULA_FIELDS)
    elif cfg.command == "rauzy":
        src = cfg.source()
        graphs = [rauzy_graph(src, n) for n in cfg.ns]
        if cfg.fmt == "json":
            text = export.graph_json(graphs, source=src.describe())
        else:
            text = "".join(export.graph_dot(g) for g in graphs)
    else:
        checks = _verify_checks(cfg)
        if cfg.fmt == "json":
            text = export.checks_json(checks, source=cfg.source().describe())
        else:
            text = export.checks_csv(checks)
        bad = [c for c in checks if not c.ok]
        if bad:
            failure = VerificationFailure(
                f"{len(bad)} checks failed; first: {bad[0].name} at n={bad[0].n}: {bad[0].detail}")

    if cfg.out and cfg.out != "-":
        Path(cfg.out).write_text(text, encoding="utf-8")
    else:
        stdout.write(text)
    if failure is not None:
        _report(failure)
        status = failure.exit_code
    return status


def _report(exc: LieComplexityError) -> None:
    print(json.dumps({"error": exc.kind, "exit_code": exc.exit_code, "message": str(exc)}),
          file=sys.stderr)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_argument_group("word source")
    src.add_argument("--cf", help='continued fraction, e.g. "2;(1)" for the Fibonacci slope')
    src.add_argument("--word-file", help="file holding one line of symbols")
    src.add_argument("--alphabet", default="01", help="symbols allowed in --word-file")
    src.add_argument("--morphism", help='rules such as "0->01,1->0"')
    src.add_argument("--seed-symbol", help="start symbol of the morphism fixed point")
    src.add_argument("--prefix-len", type=int, default=DEFAULT_MORPHIC_LENGTH,
                     help="symbols generated for morphism sources")
    src.add_argument("--prefix-cap", type=int, default=DEFAULT_PREFIX_CAP,
                     help="largest Sturmian prefix tried during saturation")
    common.add_argument("--n", default="0", help="length or inclusive range a..b")
    common.add_argument("--methods", default=",".join(METHODS))
    common.add_argument("--out", help="output path (default stdout)")
    common.add_argument("--format", dest="fmt", choices=FORMATS)

    parser = argparse.ArgumentParser(prog="liecomplexity", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "generate":
            p.add_argument("--len", dest="length", type=int, required=True)
    return parser


def config_from_args(argv: Optional[Sequence[str]] = None) -> RunConfig:
    args = build_parser().parse_args(argv)
    methods = tuple(m.strip() for m in args.methods.split(",") if m.strip())
    unknown = set(methods) - set(METHODS)
    if unknown or not methods:
        raise UsageError(f"unknown methods {sorted(unknown)}; choose from {list(METHODS)}")
    n_range = parse_range(args.n) if args.command != "generate" else (0, 0)
    return RunConfig(
        command=args.command, cf=args.cf, word_file=args.word_file,
        alphabet=args.alphabet, morphism=args.morphism, seed_symbol=args.seed_symbol,
        n_range=n_range, length=getattr(args, "length", None), methods=methods,
        out=args.out, fmt=args.fmt, prefix_cap=args.prefix_cap, prefix_len=args.prefix_len,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        cfg = config_from_args(argv)
        return run(cfg)
    except LieComplexityError as exc:
        _report(exc)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
