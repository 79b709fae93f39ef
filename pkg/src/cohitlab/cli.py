"""Command-line front end: JSON reports, a persistent result cache, and
named verification suites.

Every subcommand prints one JSON object (or a plain-text table with
``--out table``) and exits 0 on success, 1 when a verification suite
mismatches its stored expectations, 2 on usage or input errors, and 3 when a
computation refuses to start or finish inside the configured column budget.

Results of the heavier commands are cached under ``$COHITLAB_CACHE``
(default ``.cohitlab/``) as small JSON entries keyed by operation,
arguments, and a hash of the engine's ordering conventions, so stale
entries from an incompatible build are ignored rather than trusted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import tempfile
import time
from pathlib import Path

from . import cohit, glaction, transferlab
from .cohit import EngineConfig, ResourceLimit
from .lambda_algebra import adem_reduce, ext_dim, is_cycle, psi
from .polyspace import DualElement, alpha, minimal_spike, mu, weight_vector
from .steenrod import is_annihilated

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_RESOURCES = 3

SCHEMA_VERSION = 1
# Ordering and sign-free conventions the numeric results depend on; any
# change invalidates cached entries via the hash below.
CONVENTIONS = (
    "monomials=weight-desc-then-lex-desc",
    "pivots=largest-column-first",
    "lambda=admissible-iff-doubling",
    "psi=prepend-first-factor",
)


def convention_hash() -> str:
    blob = f"{SCHEMA_VERSION}:" + ";".join(CONVENTIONS)
    return hashlib.sha256(blob.encode()).hexdigest()[:12]


def code_version() -> str:
    try:
        from importlib.metadata import version

        return version("cohitlab")
    except Exception:
        return "unknown"


# ---------------------------------------------------------------------------
# result cache (entry = schema + key + payload + provenance)
# ---------------------------------------------------------------------------


def _cache_name(op: str, key: dict) -> str:
    blob = json.dumps({"op": op, **key}, sort_keys=True)
    digest = hashlib.sha256(blob.encode()).hexdigest()[:16]
    return f"cli_{op}_{digest}.json"


def _cache_path(config: EngineConfig, op: str, key: dict) -> Path:
    return Path(config.cache_dir) / _cache_name(op, key)


def cache_fetch(config: EngineConfig, op: str, key: dict) -> dict | None:
    """Stored payload for (op, key), or None when absent or incompatible."""
    if not config.use_cache:
        return None
    try:
        with open(_cache_path(config, op, key)) as fh:
            entry = json.load(fh)
    except (OSError, ValueError):
        return None
    if entry.get("schema") != SCHEMA_VERSION:
        return None
    stored = entry.get("key", {})
    if stored.get("conventions") != convention_hash():
        return None
    if any(stored.get(k) != v for k, v in key.items()):
        return None
    return _unpack_matrices(entry.get("payload"))


def cache_put(config: EngineConfig, op: str, key: dict, payload: dict) -> None:
    if not config.use_cache:
        return
    entry = {
        "schema": SCHEMA_VERSION,
        "key": {**key, "op": op, "conventions": convention_hash()},
        "payload": _pack_matrices(payload),
        "provenance": {
            "code_version": code_version(),
            "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        },
    }
    path = _cache_path(config, op, key)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            json.dump(entry, fh, sort_keys=True)
        os.replace(tmp, path)
    except OSError:
        return


def _pack_matrices(payload: dict) -> dict:
    """Hex-encode bit matrices for compact storage."""
    if "matrix" in payload and isinstance(payload["matrix"], list):
        rows = payload["matrix"]
        packed = [
            format(sum(1 << i for i, c in enumerate(row) if c), "x")
            for row in rows
        ]
        out = dict(payload)
        out["matrix_hex"] = packed
        out["matrix_cols"] = payload.get("codomain_dim", 0)
        del out["matrix"]
        return out
    return payload


def _unpack_matrices(payload):
    if isinstance(payload, dict) and "matrix_hex" in payload:
        cols = payload.get("matrix_cols", 0)
        rows = []
        for hx in payload["matrix_hex"]:
            bits = int(hx, 16)
            rows.append([(bits >> i) & 1 for i in range(cols)])
        out = dict(payload)
        out["matrix"] = rows
        del out["matrix_hex"]
        del out["matrix_cols"]
        return out
    return payload


# ---------------------------------------------------------------------------
# subcommand handlers: return (payload, exit_code)
# ---------------------------------------------------------------------------


def _parse_omega(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad weight vector {text!r}; expected e.g. 3,1,1")
    if any(x < 0 for x in parts):
        raise UsageError(f"bad weight vector {text!r}; entries must be >= 0")
    return parts


class UsageError(ValueError):
    pass


def _require(args, *names: str) -> None:
    for name in names:
        if getattr(args, name, None) is None:
            raise UsageError(f"--{name} is required for this command")


def _load_dual(args) -> DualElement:
    _require(args, "file")
    try:
        with open(args.file) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}")
    except ValueError as exc:
        raise UsageError(f"{args.file} is not valid JSON: {exc}")
    try:
        element = DualElement.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{args.file} is not a dual element: {exc}")
    if args.q is not None and args.q != element.q:
        raise UsageError(
            f"--q {args.q} disagrees with the file's variable count {element.q}"
        )
    return element


def cmd_cohit(args, config):
    _require(args, "q", "n")
    key = {"q": args.q, "n": args.n}
    cached = cache_fetch(config, "cohit", key)
    if cached is not None:
        return cached, EXIT_OK
    basis = cohit.cohit_basis(args.q, args.n, config=config)
    payload = {
        "q": args.q,
        "n": args.n,
        "dim": len(basis),
        "basis": [list(m) for m in basis],
    }
    cache_put(config, "cohit", key, payload)
    return payload, EXIT_OK


def cmd_weight(args, config):
    _require(args, "q", "n")
    if args.omega:
        omega = _parse_omega(args.omega)
        key = {"q": args.q, "n": args.n, "omega": list(omega)}
        cached = cache_fetch(config, "weight", key)
        if cached is not None:
            return cached, EXIT_OK
        dim, basis = cohit.weight_subquotient(args.q, args.n, omega, config)
        payload = {
            "q": args.q,
            "n": args.n,
            "omega": list(omega),
            "dim": dim,
            "basis": [list(m) for m in basis],
        }
        cache_put(config, "weight", key, payload)
        return payload, EXIT_OK
    key = {"q": args.q, "n": args.n}
    cached = cache_fetch(config, "weight_table", key)
    if cached is not None:
        return cached, EXIT_OK
    table = cohit.weight_table(args.q, args.n, config)
    payload = {
        "q": args.q,
        "n": args.n,
        "weights": {cohit.weight_key(w): d for w, d in sorted(table.items())},
        "total": sum(table.values()),
    }
    cache_put(config, "weight_table", key, payload)
    return payload, EXIT_OK


def cmd_invariants(args, config):
    _require(args, "q", "n")
    omega = _parse_omega(args.omega) if args.omega else None
    key = {
        "q": args.q,
        "n": args.n,
        "group": args.group,
        "omega": list(omega) if omega else None,
    }
    cached = cache_fetch(config, "invariants", key)
    if cached is not None:
        return cached, EXIT_OK
    payload = glaction.invariants(
        args.q, args.n, args.group, omega=omega, config=config
    ).to_json()
    cache_put(config, "invariants", key, payload)
    return payload, EXIT_OK


def cmd_coinvariants(args, config):
    _require(args, "q", "n")
    key = {"q": args.q, "n": args.n, "group": args.group}
    cached = cache_fetch(config, "coinvariants", key)
    if cached is not None:
        return cached, EXIT_OK
    payload = glaction.coinvariants(args.q, args.n, args.group, config).to_json()
    cache_put(config, "coinvariants", key, payload)
    return payload, EXIT_OK


def cmd_primitives(args, config):
    _require(args, "q", "n")
    key = {"q": args.q, "n": args.n}
    cached = cache_fetch(config, "primitives", key)
    if cached is not None:
        return cached, EXIT_OK
    span = cohit.span_for(args.q, args.n, config)
    vectors = span.primitive_vectors()
    payload = {
        "q": args.q,
        "n": args.n,
        "dim": len(vectors),
        "representatives": [
            span.to_dual(v).to_json()["terms"] for v in vectors
        ],
    }
    cache_put(config, "primitives", key, payload)
    return payload, EXIT_OK


def cmd_annihilated(args, config):
    element = _load_dual(args)
    payload = {
        "q": element.q,
        "degree": element.degree,
        "terms": len(element.terms),
        "annihilated": is_annihilated(element),
    }
    return payload, EXIT_OK


def cmd_kameko(args, config):
    _require(args, "q", "n")
    if (args.n - args.q) % 2 or args.n < args.q:
        raise UsageError(
            f"halving map needs n = 2m + q; n={args.n}, q={args.q} do not fit"
        )
    key = {"q": args.q, "n": args.n}
    cached = cache_fetch(config, "kameko", key)
    if cached is not None:
        return cached, EXIT_OK
    km = cohit.kameko_matrix(args.q, args.n, config)
    kernel = km.kernel_coordinates()
    payload = {
        "q": args.q,
        "n": args.n,
        "target_degree": km.target_degree,
        "domain_dim": km.domain.dim,
        "codomain_dim": km.codomain.dim,
        "rank": km.rank(),
        "surjective": km.is_surjective(),
        "kernel_dim": len(kernel),
    }
    cache_put(config, "kameko", key, payload)
    return payload, EXIT_OK


def cmd_psi(args, config):
    element = _load_dual(args)
    if element.is_zero():
        raise UsageError("the zero element has no chain image worth printing")
    image = adem_reduce(psi(element))
    payload = {
        "q": element.q,
        "degree": element.degree,
        "words": [list(w) for w in image.sorted_words()],
        "is_cycle": image.is_zero() or is_cycle(image),
    }
    return payload, EXIT_OK


def cmd_ext(args, config):
    _require(args, "q", "n")
    key = {"s": args.q, "n": args.n}
    cached = cache_fetch(config, "ext", key)
    if cached is not None:
        return cached, EXIT_OK
    payload = {"s": args.q, "n": args.n, "dim": ext_dim(args.q, args.n)}
    cache_put(config, "ext", key, payload)
    return payload, EXIT_OK


def cmd_transfer(args, config):
    _require(args, "q", "n")
    key = {"q": args.q, "n": args.n}
    cached = cache_fetch(config, "transfer", key)
    if cached is not None:
        return cached, EXIT_OK
    payload = transferlab.verdict(args.q, args.n, config).to_json()
    cache_put(config, "transfer", key, payload)
    return payload, EXIT_OK


def cmd_verify(args, config):
    names = args.suites or ["all"]
    if names == ["all"]:
        names = list(transferlab.SUITE_NAMES)
    for name in names:
        if name not in transferlab.SUITE_NAMES:
            raise UsageError(
                f"unknown suite {name!r}; choose from "
                f"{', '.join(transferlab.SUITE_NAMES)} or 'all'"
            )
    stretch = os.environ.get("COHITLAB_STRETCH") == "1"
    reports = transferlab.verify_all(
        tuple(names), config, stretch=stretch, jobs=args.jobs
    )
    payload = {
        "suites": [r.to_json() for r in reports],
        "passed": all(r.passed for r in reports),
        "complete": all(r.complete for r in reports),
    }
    code = EXIT_OK if payload["passed"] else EXIT_MISMATCH
    return payload, code


def cmd_spike(args, config):
    _require(args, "q", "n")
    m = minimal_spike(args.q, args.n)
    payload = {
        "q": args.q,
        "n": args.n,
        "mu": mu(args.n) if args.n > 0 else 0,
        "spike": list(m) if m is not None else None,
        "weight": list(weight_vector(m)) if m is not None else None,
    }
    return payload, EXIT_OK


def cmd_mu(args, config):
    _require(args, "n")
    payload = {"n": args.n, "alpha": alpha(args.n), "mu": mu(args.n)}
    return payload, EXIT_OK


HANDLERS = {
    "cohit": cmd_cohit,
    "weight": cmd_weight,
    "invariants": cmd_invariants,
    "coinvariants": cmd_coinvariants,
    "primitives": cmd_primitives,
    "annihilated": cmd_annihilated,
    "kameko": cmd_kameko,
    "psi": cmd_psi,
    "ext": cmd_ext,
    "transfer": cmd_transfer,
    "verify": cmd_verify,
    "spike": cmd_spike,
    "mu": cmd_mu,
}


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def emit(payload: dict, out: str) -> None:
    if out == "json":
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))
        return
    if "suites" in payload:
        for suite in payload["suites"]:
            print(f"suite {suite['name']}: "
                  f"{'pass' if suite['passed'] else 'FAIL'}"
                  f"{'' if suite['complete'] else ' (partial)'}")
            for check in suite["checks"]:
                line = f"  [{check['status']}] {check['name']}"
                if check["detail"]:
                    line += f" -- {check['detail']}"
                print(line)
        print(f"passed: {payload['passed']}")
        print(f"complete: {payload['complete']}")
        return
    for key in sorted(payload):
        value = payload[key]
        if isinstance(value, list) and value and isinstance(value[0], list):
            print(f"{key}:")
            for row in value:
                print("  " + " ".join(str(x) for x in row))
        elif isinstance(value, dict):
            print(f"{key}:")
            for k in sorted(value):
                print(f"  {k}: {value[k]}")
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{key}:")
            for item in value:
                print("  " + json.dumps(item, sort_keys=True))
        else:
            print(f"{key}: {value}")


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, help="number of variables (or word length)")
    common.add_argument("--n", type=int, help="internal degree")
    common.add_argument(
        "--omega", help="weight vector as comma-separated counts, e.g. 3,1,1"
    )
    common.add_argument(
        "--group",
        choices=("sigma", "gl"),
        default="gl",
        help="permutations only, or the full linear group",
    )
    common.add_argument("--file", help="JSON file holding one element")
    common.add_argument(
        "--out", choices=("json", "table"), default="json", help="output format"
    )
    common.add_argument(
        "--no-cache", action="store_true", help="disable the result cache"
    )
    common.add_argument(
        "--max-cols",
        type=int,
        default=1 << 21,
        help="refuse degrees with more monomials than this",
    )
    common.add_argument(
        "--jobs", type=int, default=1, help="parallel workers for suite runs"
    )

    parser = argparse.ArgumentParser(
        prog="cohitlab",
        description=(
            "Hit-problem quotients, linear-group fixed points, admissible-word "
            "homology, and rank-q transfer verdicts over GF(2)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    descriptions = {
        "cohit": "basis and dimension of the degree-n quotient",
        "weight": "weight table, or one weight subquotient with --omega",
        "invariants": "fixed classes of the quotient under the chosen group",
        "coinvariants": "dual classes modulo the group action",
        "primitives": "duals killed by every positive square",
        "annihilated": "test one dual element from --file",
        "kameko": "halving map Q_n -> Q_{(n-q)/2}: rank and kernel",
        "psi": "chain image of a dual element from --file, reduced",
        "ext": "homology dimension at word length --q, degree --n",
        "transfer": "transfer verdict at (--q, --n)",
        "verify": "run named verification suites",
        "spike": "minimal spike of degree n in q variables",
        "mu": "alpha and mu of a degree",
    }
    for name, desc in descriptions.items():
        p = sub.add_parser(name, parents=[common], help=desc, description=desc)
        if name == "verify":
            p.add_argument(
                "suites",
                nargs="*",
                metavar="SUITE",
                help=f"one of {', '.join(transferlab.SUITE_NAMES)}, or 'all'",
            )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = EngineConfig(
        use_cache=not args.no_cache, max_columns=args.max_cols
    )
    handler = HANDLERS[args.command]
    try:
        payload, code = handler(args, config)
    except UsageError as exc:
        print(f"cohitlab {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimit as exc:
        emit({"error": "resource-limit", "detail": str(exc)}, args.out)
        return EXIT_RESOURCES
    emit(payload, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
