"""Command-line front end.

Subcommands: build, code, verify, search, export, import.  Global
flags on every subcommand: --cap, --dlog-bound, --format {text,doc},
--seed.  Exit codes: 0 success, 1 verification failure, 2 usage or
parse error.  Output is deterministic for a fixed configuration (the
seed is part of every document), so doc-format runs are byte-identical
across invocations.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import bridges, cyclic, serialize
from .cyclic import DEFAULT_CAP, CapExceededError
from .fields import DEFAULT_DLOG_BOUND, FieldError, FieldTower, is_prime
from .linalg import GFqMatrix
from .normal import find_normal
from .poly import UnivariatePoly, gcd
from .qpoly import QPolynomial

SEARCH_ENUM_LIMIT = 1 << 16  # largest q^n swept exhaustively without --sample


@dataclass
class RunConfig:
    p: int
    m: int
    n: int
    cap: int = DEFAULT_CAP
    dlog_bound: int = DEFAULT_DLOG_BOUND
    fmt: str = "text"
    seed: int = 0

    @property
    def q(self) -> int:
        return self.p**self.m

    def doc(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "n": self.n,
            "q": self.q,
            "cap": self.cap,
            "dlog_bound": self.dlog_bound,
            "seed": self.seed,
        }


class UsageError(ValueError):
    """Bad arguments or unparseable values; maps to exit code 2."""


def prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise UsageError(f"q must be at least 2, got {q}")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise UsageError(f"q = {q} is not a prime power")
    return p, m


def _tower(cfg: RunConfig) -> FieldTower:
    try:
        return FieldTower(cfg.p, cfg.m, cfg.n)
    except FieldError as e:
        raise UsageError(str(e)) from None


def _parse_lambda(value: str, tower: FieldTower, basis, bound: int):
    """A check element given as normal coordinates or as a power 'g^s'."""
    if value.startswith("g^"):
        try:
            s = int(value[2:])
        except ValueError:
            raise UsageError(f"bad primitive-power syntax: {value!r}") from None
        if s < 0:
            raise UsageError("primitive power must be nonnegative")
        if tower.r - 1 > bound:
            raise UsageError("field exceeds the discrete-log bound for g^s input")
        gamma = tower.primitive_element()
        return bridges.CheckElement(tower, tower.ext.pow(gamma.value, s))
    coords = serialize.parse_vector(value, tower.base)
    if len(coords) != tower.n:
        raise UsageError(f"expected {tower.n} coordinates, got {len(coords)}")
    lam = basis.from_coords(coords)
    if lam.value == 0:
        raise UsageError("check element must be nonzero")
    return bridges.CheckElement(tower, lam.value)


# -- subcommand handlers (each returns lines, doc, exit code) -----------------


def cmd_build(cfg: RunConfig) -> tuple[list[str], dict, int]:
    tower = _tower(cfg)
    basis = find_normal(tower)
    gamma = tower.primitive_element()
    lines = [
        f"tower GF({cfg.p}) <= GF({cfg.q}) <= GF({cfg.q}^{cfg.n})",
        f"base_poly: {serialize.format_vector(tower.base_poly)}",
        f"ext_poly: {serialize.format_vector(tower.ext_poly)}",
        f"normal element: {serialize.format_vector(tower.ext.decode(basis.alpha))}",
        f"primitive element: {serialize.format_vector(tower.ext.decode(gamma.value))}",
        "conjugate coordinate matrix (column i = alpha^(q^i)):",
        str(basis.basis_matrix),
    ]
    doc = {
        "config": cfg.doc(),
        "base_poly": list(tower.base_poly),
        "ext_poly": list(tower.ext_poly),
        "normal_element": list(tower.ext.decode(basis.alpha)),
        "primitive_element": list(tower.ext.decode(gamma.value)),
        "conjugate_matrix": [list(r) for r in basis.basis_matrix.entries],
    }
    return lines, doc, 0


def _code_from_source(source: str, value: str, cfg: RunConfig, tower: FieldTower, basis):
    """Resolve any representation to (code, input-specific extras)."""
    n = tower.n
    try:
        if source == "g":
            g = serialize.parse_poly(value, tower.base)
            return cyclic.code_from_generator(g, n)
        if source == "h":
            h = serialize.parse_poly(value, tower.base)
            return cyclic.code_from_parity_check(h, n)
        if source == "lambda":
            lam = _parse_lambda(value, tower, basis, cfg.dlog_bound)
            rows = bridges.code_from_lambda(lam)
            g = cyclic.generator_from_vectors(tower.base, rows, n)
            code = cyclic.code_from_generator(g, n)
            std = (
                cyclic.standard_generator_matrix(code).row_space_rows()
                if code.k
                else ()
            )
            if rows != std:
                raise UsageError("check element does not define a cyclic code (internal)")
            return code
        if source == "ell":
            coeffs = serialize.parse_vector(value, tower.base)
            ell = QPolynomial.from_coeffs(tower, coeffs)
            rows = bridges.matrix_code_basis(ell)
            g = cyclic.generator_from_vectors(tower.base, rows, n)
            code = cyclic.code_from_generator(g, n)
            std = (
                cyclic.standard_generator_matrix(code).row_space_rows()
                if code.k
                else ()
            )
            if rows != std:
                raise UsageError("image code is not cyclic (internal)")
            return code
    except (ValueError, FieldError) as e:
        if isinstance(e, UsageError):
            raise
        raise UsageError(str(e)) from None
    raise UsageError(f"unknown source {source!r}")


def cmd_code(cfg: RunConfig, source: str, value: str) -> tuple[list[str], dict, int]:
    tower = _tower(cfg)
    basis = find_normal(tower)
    code = _code_from_source(source, value, cfg, tower, basis)
    n = tower.n

    # cross-validate the representations before printing anything
    rep = bridges.verify_equivalence(code.g, n, basis, cfg.cap)
    if not rep.passed:
        lines = ["representation cross-validation FAILED:"] + rep.lines()
        return lines, {"config": cfg.doc(), "report": rep.to_doc()}, 1

    summary = cyclic.report(code, cfg.cap)
    ell = bridges.ell_from_generator(code.g, n, tower)
    lam_doc: dict | str
    if code.h.degree <= n - 1:
        lam = bridges.lambda_from_parity_check(code.h, basis)
        lam_coords = lam.normal_coords(basis)
        lam_text = serialize.format_vector(lam_coords)
        if tower.r - 1 <= cfg.dlog_bound:
            s = tower.discrete_log(tower.primitive_element(), lam.value, cfg.dlog_bound)
            lam_text += f" (= g^{s})"
            lam_doc = {"coords": list(lam_coords), "log": s}
        else:
            lam_doc = {"coords": list(lam_coords)}
    else:
        lam_text = "(none: full-space code)"
        lam_doc = "unsupported"

    d_text = str(summary.d) if summary.d is not None else "not computed (cap)"
    lines = [
        f"[n, k, d] = [{summary.n}, {summary.k}, {d_text}]",
        f"g: {code.g}",
        f"h: {code.h}",
        f"ell: {serialize.format_vector(ell.coeffs)}",
        f"lambda: {lam_text}",
    ]
    if code.k:
        lines.append("generator matrix (rows x^i * g):")
        lines.append(str(code.generator_matrix))
    else:
        lines.append("generator matrix: (zero code)")
    doc = {
        "config": cfg.doc(),
        "n": summary.n,
        "k": summary.k,
        "d": summary.d,
        "g": list(code.g.coeffs),
        "h": list(code.h.coeffs),
        "ell": list(ell.coeffs),
        "lambda": lam_doc,
        "generator_matrix": [list(r) for r in code.generator_matrix.entries]
        if code.k
        else [],
    }
    return lines, doc, 0


def _parse_n_range(text: str) -> list[int]:
    if "-" in text:
        lo, _, hi = text.partition("-")
        try:
            lo, hi = int(lo), int(hi)
        except ValueError:
            raise UsageError(f"bad length range {text!r}") from None
        if lo < 1 or hi < lo:
            raise UsageError(f"bad length range {text!r}")
        return list(range(lo, hi + 1))
    try:
        n = int(text)
    except ValueError:
        raise UsageError(f"bad length {text!r}") from None
    if n < 1:
        raise UsageError("length must be positive")
    return [n]


def cmd_verify(cfg: RunConfig, qs: list[int], n_range: list[int]) -> tuple[list[str], dict, int]:
    lines: list[str] = []
    runs = []
    all_passed = True
    for q in qs:
        p, m = prime_power(q)
        for n in n_range:
            sub = RunConfig(p, m, n, cfg.cap, cfg.dlog_bound, cfg.fmt, cfg.seed)
            tower = _tower(sub)
            basis = find_normal(tower)
            reports = []
            for g in cyclic.divisors_of_xn_minus_1(tower):
                rep = bridges.verify_equivalence(g, n, basis, cfg.cap)
                reports.append(rep)
                all_passed = all_passed and rep.passed
                lines.extend(rep.lines())
            runs.append(
                {
                    "q": q,
                    "n": n,
                    "divisors": len(reports),
                    "passed": all(r.passed for r in reports),
                    "reports": [r.to_doc() for r in reports],
                }
            )
            lines.append(
                f"== q={q} n={n}: {len(reports)} divisors, "
                + ("all PASS" if runs[-1]["passed"] else "FAILURES above")
            )
    lines.append("VERIFY " + ("PASS" if all_passed else "FAIL"))
    doc = {
        "q": qs,
        "n": n_range,
        "cap": cfg.cap,
        "dlog_bound": cfg.dlog_bound,
        "seed": cfg.seed,
        "runs": runs,
        "passed": all_passed,
    }
    return lines, doc, 0 if all_passed else 1


def cmd_search(
    cfg: RunConfig, min_d: int, max_results: int, sample: int | None
) -> tuple[list[str], dict, int]:
    tower = _tower(cfg)
    n, q = tower.n, tower.q
    total = q**n
    if sample is None and total > SEARCH_ENUM_LIMIT:
        raise UsageError(
            f"{total} candidate coefficient vectors; rerun with --sample COUNT (seeded)"
        )
    if sample is None:
        candidates = range(1, total)
    else:
        rng = random.Random(cfg.seed)
        candidates = sorted({rng.randrange(1, total) for _ in range(sample)})

    f = cyclic.xn_minus_1(tower.base, n)
    seen: dict[tuple[int, ...], None] = {}
    for packed in candidates:
        digits = []
        v = packed
        for _ in range(n):
            v, d = divmod(v, q)
            digits.append(d)
        g = gcd(f, UnivariatePoly(tower.base, digits))
        key = tuple(g.coeffs)
        if key not in seen:
            seen[key] = None

    results = []
    for key in seen:
        g = UnivariatePoly(tower.base, key)
        code = cyclic.code_from_generator(g, n)
        if code.k == 0:
            continue
        try:
            d = cyclic.minimum_distance(code, cfg.cap)
        except CapExceededError:
            continue  # never report an unverified distance
        if d >= min_d:
            ell = bridges.ell_from_generator(g, n, tower)
            results.append((code.k, d, g.to_int(), g, ell))
    results.sort(key=lambda t: (-t[0], -t[1], t[2]))
    results = results[:max_results]

    lines = [f"search q={q} n={n} min-d={min_d} seed={cfg.seed}"]
    if sample is not None:
        lines[0] += f" sample={sample}"
    header = f"{'ell':<{2 * n + 6}} {'g':<{2 * n + 2}} [n,k,d]"
    lines.append(header)
    for k, d, _, g, ell in results:
        lines.append(
            f"{serialize.format_vector(ell.coeffs):<{2 * n + 6}} {str(g):<{2 * n + 2}} "
            f"[{n},{k},{d}]"
        )
    if not results:
        lines.append("(no codes found)")
    doc = {
        "config": cfg.doc(),
        "min_d": min_d,
        "sample": sample,
        "results": [
            {"ell": list(ell.coeffs), "g": list(g.coeffs), "n": n, "k": k, "d": d}
            for k, d, _, g, ell in results
        ],
    }
    return lines, doc, 0


def cmd_export(
    cfg: RunConfig, source: str, value: str, which: str, path: str
) -> tuple[list[str], dict, int]:
    tower = _tower(cfg)
    basis = find_normal(tower)
    code = _code_from_source(source, value, cfg, tower, basis)
    if which == "standard":
        if code.k == 0:
            raise UsageError("the zero code has no standard generator matrix")
        mat = cyclic.standard_generator_matrix(code)
    elif which == "G":
        mat = bridges.image_code_generator_matrix(
            bridges.ell_from_generator(code.g, tower.n, tower)
        )
    elif which == "G1":
        mat = cyclic.g1_matrix(code)
    else:
        raise UsageError(f"unknown matrix kind {which!r}")
    serialize.export_matrix(mat, path)
    lines = [f"wrote {mat.rows}x{mat.cols} matrix to {path}"]
    doc = {"config": cfg.doc(), "path": path, "rows": mat.rows, "cols": mat.cols}
    return lines, doc, 0


def cmd_import(cfg: RunConfig | None, path: str) -> tuple[list[str], dict, int]:
    tower = _tower(cfg) if cfg is not None else None
    try:
        with open(path, "r", encoding="ascii") as fh:
            mat = serialize.load_matrix(fh.read(), tower)
    except OSError as e:
        raise UsageError(str(e)) from None
    except ValueError as e:
        raise UsageError(f"{path}: {e}") from None
    lines = [
        f"imported {mat.rows}x{mat.cols} matrix over GF({mat.field.size}), rank {mat.rank()}",
        str(mat),
    ]
    doc = {
        "rows": mat.rows,
        "cols": mat.cols,
        "q": mat.field.size,
        "rank": mat.rank(),
        "entries": [list(r) for r in mat.entries],
    }
    return lines, doc, 0


# -- argument plumbing ---------------------------------------------------------


def _common_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap")
    sp.add_argument(
        "--dlog-bound", type=int, default=DEFAULT_DLOG_BOUND, help="discrete-log bound"
    )
    sp.add_argument("--format", choices=("text", "doc"), default="text")
    sp.add_argument("--seed", type=int, default=0, help="seed for sampled sweeps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qpolycodes",
        description="cyclic codes from linearized-polynomial images and check elements",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("build", help="construct a field tower and report it")
    sp.add_argument("p", type=int)
    sp.add_argument("m", type=int)
    sp.add_argument("n", type=int)
    _common_flags(sp)

    sp = sub.add_parser("code", help="report a code from any representation")
    sp.add_argument("--from", dest="source", required=True, choices=("g", "h", "lambda", "ell"))
    sp.add_argument("--value", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, default=2)
    _common_flags(sp)

    sp = sub.add_parser("verify", help="run the equivalence suite over divisors of x^n - 1")
    sp.add_argument("--q", type=int, action="append", default=None)
    sp.add_argument("--n", default="7", help="length or inclusive range like 2-8")
    _common_flags(sp)

    sp = sub.add_parser("search", help="search image codes meeting a distance threshold")
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--min-d", dest="min_d", type=int, required=True)
    sp.add_argument("--max-results", dest="max_results", type=int, default=20)
    sp.add_argument("--sample", type=int, default=None)
    _common_flags(sp)

    sp = sub.add_parser("export", help="write a generator matrix to a file")
    sp.add_argument("--from", dest="source", required=True, choices=("g", "h", "lambda", "ell"))
    sp.add_argument("--value", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--matrix", choices=("standard", "G", "G1"), default="standard")
    sp.add_argument("path")
    _common_flags(sp)

    sp = sub.add_parser("import", help="read a matrix file back")
    sp.add_argument("path")
    sp.add_argument("--q", type=int, default=None, help="validate against this field")
    sp.add_argument("--n", type=int, default=1)
    _common_flags(sp)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        if args.command == "build":
            if not is_prime(args.p):
                raise UsageError(f"{args.p} is not prime")
            cfg = RunConfig(args.p, args.m, args.n, args.cap, args.dlog_bound, args.format, args.seed)
            lines, doc, code = cmd_build(cfg)
        elif args.command == "code":
            p, m = prime_power(args.q)
            cfg = RunConfig(p, m, args.n, args.cap, args.dlog_bound, args.format, args.seed)
            lines, doc, code = cmd_code(cfg, args.source, args.value)
        elif args.command == "verify":
            qs = args.q if args.q else [2]
            for q in qs:
                prime_power(q)
            cfg = RunConfig(*prime_power(qs[0]), 1, args.cap, args.dlog_bound, args.format, args.seed)
            lines, doc, code = cmd_verify(cfg, qs, _parse_n_range(args.n))
        elif args.command == "search":
            p, m = prime_power(args.q)
            cfg = RunConfig(p, m, args.n, args.cap, args.dlog_bound, args.format, args.seed)
            lines, doc, code = cmd_search(cfg, args.min_d, args.max_results, args.sample)
        elif args.command == "export":
            p, m = prime_power(args.q)
            cfg = RunConfig(p, m, args.n, args.cap, args.dlog_bound, args.format, args.seed)
            lines, doc, code = cmd_export(cfg, args.source, args.value, args.matrix, args.path)
        elif args.command == "import":
            cfg = None
            if args.q is not None:
                p, m = prime_power(args.q)
                cfg = RunConfig(p, m, args.n, args.cap, args.dlog_bound, args.format, args.seed)
            lines, doc, code = cmd_import(cfg, args.path)
        else:  # pragma: no cover
            raise UsageError(f"unknown command {args.command!r}")
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    if args.format == "doc":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
