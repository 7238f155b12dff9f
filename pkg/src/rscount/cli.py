"""Command-line frontend: counts, tables, identity verification, censuses, series.

All subcommands build their entire output in memory and write it in one call,
so output is deterministic byte-for-byte and never partial on error.

Exit codes: 0 success/agreement, 2 invalid arguments, 3 count or identity
disagreement, 4 enumeration-bound refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .census import CensusKind, EnumerationBoundError, census_count
from .closedform import Family, GroupSpec, rs_count
from .genfun import (
    Identity,
    admissible_parity,
    gf_count,
    symbolic_count_polynomials,
    verify_identity,
)
from .numbertheory import as_prime_power
from .oracle import oracle_count

#: JSON schema version stamped on every JSON object this tool prints.
SCHEMA = 1

_EXIT_OK = 0
_EXIT_USAGE = 2
_EXIT_DISAGREE = 3
_EXIT_BOUND = 4

#: Families whose symbolic polynomial depends on the parity of the field size.
_PARITY_FAMILIES = {
    Family.SL,
    Family.SU,
    Family.SP,
    Family.SO_ODD,
    Family.SO_PLUS,
    Family.SO_MINUS,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rscount",
        description=(
            "Count regular semisimple conjugacy classes in finite classical "
            "groups by closed formula, generating-function coefficient "
            "extraction, and brute-force enumeration."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tokens = [f.value for f in Family]

    p_count = sub.add_parser("count", help="count classes for one group")
    p_count.add_argument("--group", required=True, choices=tokens)
    p_count.add_argument(
        "--n", required=True, type=int,
        help="rank parameter n (matrix size 2n for sp, ambient dimension 2n or 2n+1 for the so families)",
    )
    p_count.add_argument("--q", required=True, type=int)
    p_count.add_argument(
        "--method", default="formula", choices=["formula", "genfun", "oracle", "all"]
    )

    p_table = sub.add_parser("table", help="counts for ranks 1..n-max")
    p_table.add_argument("--group", required=True, choices=tokens)
    p_table.add_argument("--q", required=True, type=int)
    p_table.add_argument("--n-max", required=True, type=int, dest="n_max")
    p_table.add_argument("--format", default="csv", choices=["csv", "json"])
    p_table.add_argument(
        "--with-oracle",
        action="store_true",
        help="add enumeration counts and an agreement column (cells beyond the "
        "enumeration bound are left empty)",
    )

    p_verify = sub.add_parser("verify", help="expand and compare series identities")
    p_verify.add_argument(
        "--identity",
        required=True,
        choices=[i.value for i in Identity] + ["all"],
        help="identity token, or 'all' to run every identity admissible at q",
    )
    p_verify.add_argument("--q", required=True, type=int)
    p_verify.add_argument("--terms", default=10, type=int)

    p_census = sub.add_parser("census", help="irreducible-polynomial census table")
    p_census.add_argument("--kind", required=True, choices=[k.value for k in CensusKind])
    p_census.add_argument("--q", required=True, type=int)
    p_census.add_argument("--d-max", required=True, type=int, dest="d_max")
    p_census.add_argument("--method", default="formula", choices=["formula", "enumerate"])

    p_series = sub.add_parser(
        "series", help="counts as integer polynomials in the field size"
    )
    p_series.add_argument("--family", required=True, choices=tokens)
    p_series.add_argument("--terms", required=True, type=int, help="largest rank to print")
    p_series.add_argument(
        "--char",
        choices=["odd", "even"],
        help="field-size parity (required for sl, su, sp, and the so families)",
    )

    return parser


def _warn_composite_q(q: int) -> None:
    if q >= 2 and as_prime_power(q) is None:
        print(
            f"warning: q={q} is not a prime power; formula values are polynomial "
            "extrapolations, not group counts",
            file=sys.stderr,
        )


def _cmd_count(args) -> tuple[int, str]:
    family = Family.from_token(args.group)
    spec = GroupSpec(family, args.n, args.q)
    _warn_composite_q(args.q)
    base = {"schema": SCHEMA, "group": family.token, "n": args.n, "q": args.q}
    if args.method == "all":
        formula = rs_count(spec)
        genfun = gf_count(spec)
        oracle = oracle_count(spec)
        agree = formula == genfun == oracle.count
        payload = dict(
            base,
            method="all",
            counts={"formula": formula, "genfun": genfun, "oracle": oracle.count},
            enumerated=oracle.witness_count,
            agree=agree,
        )
        return (
            _EXIT_OK if agree else _EXIT_DISAGREE,
            json.dumps(payload) + "\n",
        )
    if args.method == "formula":
        payload = dict(base, method="formula", count=rs_count(spec))
    elif args.method == "genfun":
        payload = dict(base, method="genfun", count=gf_count(spec))
    else:
        result = oracle_count(spec)
        payload = dict(
            base, method="oracle", count=result.count, enumerated=result.witness_count
        )
    return _EXIT_OK, json.dumps(payload) + "\n"


def _cmd_table(args) -> tuple[int, str]:
    family = Family.from_token(args.group)
    if args.n_max < 1:
        raise ValueError("--n-max must be >= 1")
    _warn_composite_q(args.q)
    rows = []
    for n in range(1, args.n_max + 1):
        spec = GroupSpec(family, n, args.q)
        row: dict = {"n": n, "count": rs_count(spec)}
        if args.with_oracle:
            try:
                result = oracle_count(spec)
                row["oracle"] = result.count
                row["agree"] = result.count == row["count"]
            except EnumerationBoundError:
                row["oracle"] = None
                row["agree"] = None
        rows.append(row)
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "group": family.token,
            "q": args.q,
            "rows": rows,
        }
        return _EXIT_OK, json.dumps(payload) + "\n"
    header = "n,count,oracle,agree" if args.with_oracle else "n,count"
    lines = [header]
    for row in rows:
        if args.with_oracle:
            oracle = "" if row["oracle"] is None else str(row["oracle"])
            agree = "" if row["agree"] is None else str(row["agree"]).lower()
            lines.append(f"{row['n']},{row['count']},{oracle},{agree}")
        else:
            lines.append(f"{row['n']},{row['count']}")
    return _EXIT_OK, "\n".join(lines) + "\n"


def _cmd_verify(args) -> tuple[int, str]:
    if args.terms < 1:
        raise ValueError("--terms must be >= 1")
    _warn_composite_q(args.q)
    if args.identity != "all":
        identity = Identity.from_token(args.identity)
        parity = admissible_parity(identity)
        if (parity == "odd" and args.q % 2 == 0) or (parity == "even" and args.q % 2 == 1):
            raise ValueError(
                f"identity {identity.token} requires {parity} field size, got q={args.q}"
            )
        report = verify_identity(identity, args.q, args.terms)
        payload = {"schema": SCHEMA, **report.to_json()}
        return (
            _EXIT_OK if report.passed else _EXIT_DISAGREE,
            json.dumps(payload) + "\n",
        )
    reports = []
    skipped = []
    all_pass = True
    for identity in Identity:
        parity = admissible_parity(identity)
        if (parity == "odd" and args.q % 2 == 0) or (parity == "even" and args.q % 2 == 1):
            skipped.append(
                {
                    "identity": identity.token,
                    "note": f"stated for {parity} field sizes only",
                }
            )
            continue
        report = verify_identity(identity, args.q, args.terms)
        all_pass = all_pass and report.passed
        reports.append(report.to_json())
    payload = {
        "schema": SCHEMA,
        "q": args.q,
        "terms": args.terms,
        "reports": reports,
        "skipped": skipped,
    }
    return (_EXIT_OK if all_pass else _EXIT_DISAGREE), json.dumps(payload) + "\n"


def _cmd_census(args) -> tuple[int, str]:
    kind = CensusKind.from_token(args.kind)
    if args.d_max < 1:
        raise ValueError("--d-max must be >= 1")
    if as_prime_power(args.q) is None:
        raise ValueError(f"census requires a prime-power field size, got q={args.q}")
    lines = ["kind,q,d,count"]
    for d in range(1, args.d_max + 1):
        cell = census_count(kind, args.q, d, method=args.method)
        lines.append(f"{kind.value},{args.q},{d},{cell.count}")
    return _EXIT_OK, "\n".join(lines) + "\n"


def _cmd_series(args) -> tuple[int, str]:
    family = Family.from_token(args.family)
    if args.terms < 1:
        raise ValueError("--terms must be >= 1")
    if family in _PARITY_FAMILIES:
        if args.char is None:
            raise ValueError(
                f"family {family.token} needs --char odd|even (its polynomial "
                "depends on the field-size parity)"
            )
        q_odd = args.char == "odd"
    else:
        q_odd = False
    polys = symbolic_count_polynomials(family, args.terms, q_odd=q_odd)
    lines = [f"{n}: {polys[n]}" for n in range(1, args.terms + 1)]
    return _EXIT_OK, "\n".join(lines) + "\n"


_DISPATCH = {
    "count": _cmd_count,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "census": _cmd_census,
    "series": _cmd_series,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text = _DISPATCH[args.command](args)
    except EnumerationBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_BOUND
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE
    sys.stdout.write(text)
    return code


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
