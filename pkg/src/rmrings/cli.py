"""Command-line front end: ring inspection, ideal arithmetic, campaigns."""

from __future__ import annotations

import argparse
import json
import sys

from . import cofinring as cf
from . import finring as fr
from . import quadorder as qo
from .verifier import FAIL, render_text, run_check


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rmrings",
        description="exact ideal arithmetic and theorem checks for restricted-minimum rings",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ring", help="inspect a finite commutative ring")
    p.add_argument("descriptor", help='ring descriptor, e.g. "Z6[x]/(x^2)" or "Z2 * Z3"')
    p.add_argument("--ideals", action="store_true", help="list every ideal")
    p.add_argument("--nilradical", action="store_true", help="nilradical and its primality")
    p.add_argument("--socle", action="store_true", help="sum of the minimal ideals")
    p.add_argument("--primes", action="store_true", help="list the prime ideals")
    p.add_argument("--decompose", action="store_true", help="field decomposition or witness")
    p.add_argument("--length", action="store_true", help="composition length")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("order", help="ideal arithmetic in Z[sqrt(-s)]")
    p.add_argument("order_text", metavar="order", help='e.g. "Z[sqrt(-14)]"')
    p.add_argument("--factor", metavar="IDEAL", help='factor an ideal, e.g. "(15, 0+15*w)"')
    p.add_argument("--divides", nargs=2, metavar=("I", "J"), help="does I divide J")
    p.add_argument("--quotient", metavar="IDEAL", help="describe the residue ring mod IDEAL")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("cofin", help="the ring of finite and cofinite sets")
    p.add_argument("--chain", type=int, metavar="N", help="ascending chain of N ideals")
    p.add_argument("--project", metavar="SET", help='image mod the socle, e.g. "~{1,2}"')
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run a theorem campaign")
    p.add_argument("check_id", help="akizuki | reduced-rm | cdr | poly-rm | cofinite | ufd")
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--bound", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--json", action="store_true")
    return parser


def _emit(payload: dict, lines: list[str], as_json: bool) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))


def cmd_ring(args) -> int:
    actions = ("ideals", "nilradical", "socle", "primes", "decompose", "length")
    if not any(getattr(args, a) for a in actions):
        print("error: pick at least one of " + ", ".join("--" + a for a in actions), file=sys.stderr)
        return 2
    R = fr.parse_ring(args.descriptor)
    payload: dict = {"ring": R.descriptor, "order": R.order}
    lines = [f"ring: {R.descriptor} (order {R.order})"]
    if args.ideals:
        ideals = fr.enumerate_ideals(R)
        payload["ideals"] = [fr.format_ideal(R, I) for I in ideals]
        lines.append(f"ideals: {len(ideals)}")
        lines.extend(f"  {fr.format_ideal(R, I)}" for I in ideals)
    if args.nilradical:
        nil = fr.nilradical(R)
        is_prime = any(P.members == nil.members for P in fr.prime_spectrum(R))
        payload["nilradical"] = fr.format_ideal(R, nil)
        payload["nilradical_prime"] = is_prime
        lines.append(f"nilradical: {fr.format_ideal(R, nil)}")
        lines.append(f"nilradical prime: {'yes' if is_prime else 'no'}")
        if not is_prime:
            pair = fr.prime_witness(R, nil)
            if pair is not None:
                a, b = pair
                prod = R.mul(a, b)
                text = (
                    f"({R.format_element(a)}) * ({R.format_element(b)})"
                    f" = {R.format_element(prod)}"
                )
                payload["witness"] = text
                lines.append(f"witness: {text}")
    if args.socle:
        soc = fr.socle(R)
        payload["socle"] = fr.format_ideal(R, soc)
        payload["semisimple"] = soc.size == R.order
        lines.append(f"socle: {fr.format_ideal(R, soc)}")
        lines.append(f"semisimple: {'yes' if soc.size == R.order else 'no'}")
    if args.primes:
        primes = fr.prime_spectrum(R)
        payload["primes"] = [fr.format_ideal(R, P) for P in primes]
        lines.append(f"primes: {len(primes)}")
        lines.extend(f"  {fr.format_ideal(R, P)}" for P in primes)
    if args.decompose:
        dec = fr.decompose_fields(R)
        if dec.ok:
            assert dec.field_orders is not None
            payload["field_orders"] = list(dec.field_orders)
            lines.append("fields of orders: " + ", ".join(map(str, dec.field_orders)))
        else:
            assert dec.nilpotent_witness is not None
            w = R.format_element(dec.nilpotent_witness)
            payload["nilpotent_witness"] = w
            lines.append(f"not reduced, nilpotent witness: {w}")
    if args.length:
        n = fr.composition_length(R)
        payload["composition_length"] = n
        lines.append(f"composition length: {n}")
    _emit(payload, lines, args.json)
    return 0


def cmd_order(args) -> int:
    if not (args.factor or args.divides or args.quotient):
        print("error: pick one of --factor, --divides, --quotient", file=sys.stderr)
        return 2
    order = qo.parse_order(args.order_text)
    payload: dict = {"order": f"Z[sqrt(-{order.s})]"}
    lines: list[str] = []
    if args.factor:
        I = qo.parse_ideal(order, args.factor)
        res = qo.factor_into_maximals(order, I)
        payload["ideal"] = qo.format_ideal(I)
        if res.ok:
            assert res.factors is not None
            prod = order.unit_ideal()
            for P in res.factors:
                prod = qo.ideal_mul(order, prod, P)
            payload["factors"] = [qo.format_ideal(P) for P in res.factors]
            payload["product_check"] = prod == I
            lines.append(f"factors of {qo.format_ideal(I)}:")
            lines.extend(f"  {qo.format_ideal(P)}" for P in res.factors)
            lines.append(f"product check: {'ok' if prod == I else 'MISMATCH'}")
        else:
            assert res.stuck_at is not None
            payload["cdr_failure"] = {
                "stuck_at": qo.format_ideal(res.stuck_at),
                "divisor": qo.format_ideal(res.failed_divisor) if res.failed_divisor else None,
                "reason": res.reason,
            }
            lines.append(f"no factorisation: stuck at {qo.format_ideal(res.stuck_at)}")
            if res.failed_divisor is not None:
                lines.append(f"failed divisor: {qo.format_ideal(res.failed_divisor)}")
            lines.append(f"reason: {res.reason}")
    if args.divides:
        I = qo.parse_ideal(order, args.divides[0])
        J = qo.parse_ideal(order, args.divides[1])
        d = qo.divides(order, I, J)
        payload["I"] = qo.format_ideal(I)
        payload["J"] = qo.format_ideal(J)
        payload["divides"] = d.divides
        payload["witness"] = qo.format_ideal(d.witness) if d.witness else None
        payload["candidate"] = qo.format_ideal(d.candidate)
        if d.divides:
            lines.append(f"divides: yes, witness {qo.format_ideal(d.candidate)}")
        else:
            lines.append(f"divides: no (colon candidate {qo.format_ideal(d.candidate)})")
    if args.quotient:
        I = qo.parse_ideal(order, args.quotient)
        Q = qo.quotient_ring(order, I)
        payload["quotient"] = Q.descriptor
        payload["quotient_order"] = Q.order
        payload["field"] = qo.is_maximal_ideal(order, I)
        lines.append(f"quotient: {Q.descriptor}")
        lines.append(f"order: {Q.order}")
        lines.append(f"field: {'yes' if qo.is_maximal_ideal(order, I) else 'no'}")
    _emit(payload, lines, args.json)
    return 0


def cmd_cofin(args) -> int:
    if args.chain is None and args.project is None:
        print("error: pick --chain or --project", file=sys.stderr)
        return 2
    payload: dict = {}
    lines: list[str] = []
    if args.chain is not None:
        chain = cf.ascending_chain(args.chain)
        gens = [cf.format_boolset(I.gens[0]) for I in chain]
        strict = all(
            not cf.ideal_member(chain[k], cf.finite(range(1, k + 3)))
            for k in range(len(chain) - 1)
        )
        payload["chain"] = gens
        payload["strict"] = strict
        lines.append(f"ascending chain of {len(chain)} principal ideals:")
        lines.extend(f"  I({g})" for g in gens)
        lines.append(f"strictly ascending: {'yes' if strict else 'no'}")
    if args.project is not None:
        x = cf.parse_boolset(args.project)
        bit = cf.soc_projection(x)
        payload["set"] = cf.format_boolset(x)
        payload["projection"] = bit
        lines.append(f"{cf.format_boolset(x)} mod socle = {bit}")
    _emit(payload, lines, args.json)
    return 0


def cmd_verify(args) -> int:
    params = {}
    for name in ("s", "trials", "bound", "seed"):
        value = getattr(args, name)
        if value is not None:
            params[name] = value
    report = run_check(args.check_id, params)
    if args.json:
        print(report.to_json())
    else:
        print(render_text(report))
    return 1 if report.verdict == FAIL else 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    handlers = {"ring": cmd_ring, "order": cmd_order, "cofin": cmd_cofin, "verify": cmd_verify}
    try:
        return handlers[args.command](args)
    except (fr.RingParseError, fr.CapExceeded, qo.StepCapExceeded, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def entry(argv: list[str] | None = None) -> None:
    raise SystemExit(main(argv))


if __name__ == "__main__":
    raise SystemExit(main())
