"""Command-line interface: ``weylext <verb> [options]``.

Exit status is 0 when every requested value was computed (zero included),
2 when some value is Unsupported and 1 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import alcove, certifiers, engine as eng, oracle, partitions, transfer
from .alcove import Weight
from .params import FieldParams


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_ints(text: str) -> list[int]:
    cleaned = text.strip().strip("()[]")
    if not cleaned:
        return []
    try:
        return [int(x) for x in cleaned.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"cannot parse {text!r} as a list of integers") from None


def parse_range(text: str | None) -> tuple[int, int] | None:
    if text is None:
        return None
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise UsageError(f"bad degree range {text!r}; use A..B") from None
    if lo_i < 0 or hi_i < lo_i:
        raise UsageError(f"bad degree range {text!r}")
    return lo_i, hi_i


def _params(args) -> FieldParams:
    if args.p is None:
        raise UsageError("--p is required")
    l = args.p if args.l is None else args.l
    try:
        return FieldParams(args.p, l)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _weight2(text: str) -> Weight:
    vals = parse_ints(text)
    if len(vals) == 1:
        vals.append(0)
    if len(vals) != 2:
        raise UsageError(f"expected a rank-2 weight, got {text!r}")
    try:
        return Weight(vals)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _partition(text: str) -> partitions.Partition:
    try:
        return partitions.Partition(parse_ints(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def _make_engine() -> eng.Engine:
    cache_dir = os.environ.get("WEYLEXT_CACHE_DIR")
    return eng.Engine(cache_dir=cache_dir) if cache_dir else eng.default_engine()


# --- verbs -------------------------------------------------------------------

def _ext_rows(engine, kind, lam, mu, params, rng, want_trace):
    if rng is None:
        rng = (0, max(0, eng.top_degree(lam, mu, params)))
    rows = []
    for m in range(rng[0], rng[1] + 1):
        val = engine.query(eng.ExtQuery(kind, lam, mu, m, params), want_trace=want_trace)
        rows.append((m, val))
    return rows


def _render_rows(args, header, rows, out):
    """rows: list of (dict of columns, ExtValue or None)."""
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for cols, _ in rows:
            w.writerow([cols[h] for h in header])
        out.write(buf.getvalue())
        return
    if args.format == "json":
        items = []
        for cols, val in rows:
            item = dict(cols)
            if val is not None and args.trace:
                item["trace"] = val.trace
            items.append(item)
        out.write(_dump({"convention": eng.CONVENTION, "results": items}) + "\n")
        return
    out.write(f"# {eng.CONVENTION}\n")
    for cols, val in rows:
        out.write("  ".join(f"{h}={cols[h]}" for h in header) + "\n")
        if val is not None and args.trace:
            for step in val.trace:
                out.write(f"    {_dump(step)}\n")


def cmd_ext(args, out):
    engine = _make_engine()
    if args.query:
        try:
            data = json.loads(args.query)
            queries = data if isinstance(data, list) else [data]
            results = [engine.query(eng.ExtQuery.from_json(q)) for q in queries]
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"bad query: {exc}") from None
        payload = [r.to_json(trace=True) for r in results]
        out.write(_dump(payload if isinstance(data, list) else payload[0]) + "\n")
        engine.save()
        return 2 if any(r.status == eng.UNSUPPORTED for r in results) else 0
    lam, mu, params = _weight2(args.lam), _weight2(args.mu), _params(args)
    if sum(lam) != sum(mu):
        raise UsageError("weights of different degree")
    rng = parse_range(args.m)
    rows = _ext_rows(engine, args.kind, lam, mu, params, rng, args.trace)
    engine.save()
    if args.format == "csv":
        rendered = [({"m": m, "dim": v.dim}, v) for m, v in rows]
        _render_rows(args, ["m", "dim"], rendered, out)
    else:
        rendered = [({"m": m, "dim": v.dim, "status": v.status}, v) for m, v in rows]
        _render_rows(args, ["m", "dim", "status"], rendered, out)
    return 2 if any(v.status == eng.UNSUPPORTED for _, v in rows) else 0


def cmd_transfer(args, out):
    lam, mu, params = _partition(args.lam), _partition(args.mu), _params(args)
    if lam.size != mu.size:
        raise UsageError("partitions of different sizes")
    rng = parse_range(args.m)
    if rng is None:
        if len(lam) <= 2 and len(mu) <= 2:
            top = eng.top_degree(lam.padded(2), mu.padded(2), params)
        else:
            top = 0
        rng = (0, max(0, top))
    results = []
    for i in range(rng[0], rng[1] + 1):
        try:
            if args.side == transfer.HECKE:
                res = transfer.specht_ext(lam, mu, i, params)
            else:
                value, rules, caveats = transfer.schur_ext(lam, mu, i, params, kind=args.kind)
                res = transfer.TransferResult(value, True, rules, caveats, (lam, mu))
        except transfer.UnsupportedRank as exc:
            res = transfer.TransferResult(None, False, [], [str(exc)], (lam, mu))
        results.append((i, res))
    unsupported = any(r.window_ok and r.value is None for _, r in results)
    if args.format == "json":
        out.write(_dump({
            "convention": eng.CONVENTION,
            "side": args.side,
            "results": [dict(r.to_json(), m=i) for i, r in results],
        }) + "\n")
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "value", "window_ok"])
        for i, r in results:
            w.writerow([i, "" if r.value is None else r.value, int(r.window_ok)])
        out.write(buf.getvalue())
    else:
        out.write(f"# {eng.CONVENTION}\n")
        for i, r in results:
            out.write(f"m={i}  value={r.value}  window_ok={r.window_ok}  rules={','.join(r.rules)}\n")
            for c in r.caveats:
                out.write(f"    caveat: {c}\n")
    return 2 if unsupported else 0


def cmd_hom(args, out):
    lam, mu, params = _weight2(args.lam), _weight2(args.mu), _params(args)
    if sum(lam) != sum(mu):
        raise UsageError("weights of different degree")
    val = eng.hom_base_gl2(lam, mu, params)
    _emit(args, out, {"hom": val, "convention": eng.CONVENTION}, str(val))
    return 0


def _emit(args, out, payload, text):
    if args.format == "json":
        out.write(_dump(payload) + "\n")
    else:
        out.write(text + "\n")


def cmd_certify_cp(args, out):
    lam, mu = _partition(args.lam), _partition(args.mu)
    if args.p is None:
        raise UsageError("--p is required")
    cert = certifiers.carter_payne_certificate(lam, mu, args.p, args.l)
    payload = None if cert is None else cert.to_json()
    _emit(args, out, {"certificate": payload}, "none" if cert is None else _dump(payload))
    return 0


def cmd_certify_fm(args, out):
    lam, mu = _partition(args.lam), _partition(args.mu)
    if args.p is None:
        raise UsageError("--p is required")
    try:
        cert = certifiers.fayers_martin_certificate(lam, mu, args.p, window=args.window, emax=args.emax)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = None if cert is None else cert.to_json()
    _emit(args, out, {"certificate": payload}, "none" if cert is None else _dump(payload))
    return 0


def cmd_mullineux(args, out):
    lam = _partition(args.lam)
    try:
        img = partitions.mullineux(lam, args.l)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, out, {"mullineux": list(img)}, ",".join(map(str, img)))
    return 0


def cmd_dvalue(args, out):
    vals = parse_ints(args.lam)
    n = args.n or len(vals)
    if n < len(vals):
        raise UsageError("rank smaller than the number of entries")
    vals += [0] * (n - len(vals))
    val = alcove.d_value(Weight(vals), args.l)
    _emit(args, out, {"d": val}, str(val))
    return 0


def cmd_blocks(args, out):
    lam, mu = parse_ints(args.lam), parse_ints(args.mu)
    n = max(len(lam), len(mu))
    lam += [0] * (n - len(lam))
    mu += [0] * (n - len(mu))
    val = alcove.same_block_candidate(lam, mu, args.l)
    _emit(args, out, {"same_block_candidate": val}, str(val).lower())
    return 0


def cmd_cut(args, out):
    lam, mu = _partition(args.lam), _partition(args.mu)
    if lam.size != mu.size:
        raise UsageError("partitions of different sizes")
    finder = alcove.find_vertical_cut if args.vertical else alcove.find_horizontal_cut
    cut = finder(lam, mu)
    payload = None if cut is None else cut.to_json()
    text = "none" if cut is None else " ; ".join(f"{list(a)}/{list(b)}" for a, b in cut.blocks)
    _emit(args, out, {"cut": payload}, text)
    return 0


def cmd_gldim(args, out):
    val = transfer.global_dimension(args.n, args.r, args.l)
    _emit(args, out, {"global_dimension": val}, "unknown" if val is None else str(val))
    return 0


def cmd_koppinen(args, out):
    mu, lam = parse_ints(args.mu), parse_ints(args.lam)
    if args.p is None:
        raise UsageError("--p is required")
    try:
        orbit = alcove.koppinen_orbit(mu, lam, args.p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    items = sorted((list(w) for w in orbit), reverse=True)
    _emit(args, out, {"orbit": items}, " ".join(",".join(map(str, w)) for w in items))
    return 0


def cmd_wen(args, out):
    try:
        simple, nabla = certifiers.wen_dims(parse_ints(args.lam), args.d, args.i, args.l)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, out, {"simple_target": simple, "nabla_target": nabla}, f"{simple} {nabla}")
    return 0


def cmd_euler(args, out):
    engine = _make_engine()
    lam, mu, params = _weight2(args.lam), _weight2(args.mu), _params(args)
    if lam == mu:
        raise UsageError("the Euler check needs distinct weights")
    try:
        ok = engine.euler_check(lam, mu, params)
    except eng.UnsupportedQuery as exc:
        _emit(args, out, {"euler": None, "reason": str(exc)}, f"unsupported: {exc}")
        return 2
    engine.save()
    _emit(args, out, {"euler": ok}, str(ok).lower())
    return 0


def cmd_oracle(args, out):
    params = _params(args)
    try:
        if args.dump:
            _emit(args, out, oracle.DualWeylModule(args.c, params).to_json(), _dump(oracle.DualWeylModule(args.c, params).to_json()))
            return 0
        fn = oracle.oracle_hom_to_simple if args.simple else oracle.oracle_hom_dim
        val = fn(args.c, args.c2, params)
    except (ValueError, NotImplementedError) as exc:
        raise UsageError(str(exc)) from None
    _emit(args, out, {"hom": val}, str(val))
    return 0


def cmd_table(args, out):
    engine = _make_engine()
    params = _params(args)
    rng = parse_range(args.m)
    pts = sorted(Weight(x.padded(2)) for x in partitions.partitions_of(args.r, 2))
    pairs = [(lam, mu) for lam in pts for mu in pts]
    budget = 0
    for lam, mu in pairs:
        hi = rng[1] if rng else max(0, eng.top_degree(lam, mu, params))
        lo = rng[0] if rng else 0
        budget += hi - lo + 1
    if budget > args.cap:
        raise UsageError(f"table would have {budget} rows, above the cap {args.cap}")

    def work(pair):
        return pair, _ext_rows(engine, args.kind, pair[0], pair[1], params, rng, False)

    if args.jobs > 1:
        with ThreadPoolExecutor(args.jobs) as pool:
            done = list(pool.map(work, pairs))
    else:
        done = [work(pair) for pair in pairs]
    engine.save()
    rows = []
    status_bad = False
    for (lam, mu), ext_rows in done:
        for m, v in ext_rows:
            status_bad |= v.status == eng.UNSUPPORTED
            cols = {"lambda": f"({lam[0]},{lam[1]})", "mu": f"({mu[0]},{mu[1]})", "m": m, "dim": v.dim, "status": v.status}
            rows.append((cols, None))
    _render_rows(args, ["lambda", "mu", "m", "dim", "status"], rows, out)
    return 2 if status_bad else 0


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="weylext", description="Ext groups for GL2 and related certificates.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def add(name, fn, help_text, *opts):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=fn)
        sp.add_argument("--format", choices=["json", "csv", "text"], default="text")
        for opt in opts:
            opt(sp)
        return sp

    lam = lambda sp: sp.add_argument("--lambda", dest="lam", required=True)
    mu = lambda sp: sp.add_argument("--mu", required=True)
    field = lambda sp: (sp.add_argument("--p", type=int), sp.add_argument("--l", type=int))
    degrees = lambda sp: sp.add_argument("--m", help="degree or range A..B")
    trace = lambda sp: sp.add_argument("--trace", action="store_true")
    kind = lambda sp: sp.add_argument("--kind", choices=list(eng.KINDS), default=eng.NABLA_NABLA)
    ell = lambda sp: sp.add_argument("--l", type=int, required=True)

    sp = add("ext", cmd_ext, "dimensions of Ext^m between rank-2 modules", field, degrees, trace, kind)
    sp.add_argument("--lambda", dest="lam")
    sp.add_argument("--mu")
    sp.add_argument("--query", help="JSON query object or list")
    sp = add("transfer", cmd_transfer, "Schur or Hecke side Ext for partitions", lam, mu, field, degrees, trace, kind)
    sp.add_argument("--side", choices=[transfer.SCHUR, transfer.HECKE], default=transfer.HECKE)
    add("hom", cmd_hom, "rank-2 Hom classification", lam, mu, field)
    add("certify-cp", cmd_certify_cp, "local reflection certificate", lam, mu, field)
    sp = add("certify-fm", cmd_certify_fm, "tableau coefficient certificate", lam, mu, field)
    sp.add_argument("--window", type=int, default=8)
    sp.add_argument("--emax", type=int, default=16)
    add("mullineux", cmd_mullineux, "Mullineux image", lam, ell)
    sp = add("dvalue", cmd_dvalue, "wall count d(lambda)", lam, ell)
    sp.add_argument("--n", type=int, help="rank (defaults to the number of entries)")
    add("blocks", cmd_blocks, "linkage residue test", lam, mu, ell)
    sp = add("cut", cmd_cut, "finest horizontal (or vertical) cut", lam, mu)
    sp.add_argument("--vertical", action="store_true")
    sp = add("gldim", cmd_gldim, "global dimension of S(n, r)", ell)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    add("koppinen", cmd_koppinen, "dominant dot-orbit around a Steinberg weight", lam, mu, field)
    sp = add("wen", cmd_wen, "Ext dimensions for commuting reflections", lam, ell)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--i", type=int, required=True)
    add("euler-check", cmd_euler, "alternating sum of Ext dimensions", lam, mu, field)
    sp = add("oracle-hom", cmd_oracle, "Hom by linear algebra", field)
    sp.add_argument("--c", type=int, required=True)
    sp.add_argument("--c2", type=int, default=0)
    sp.add_argument("--simple", action="store_true", help="target the simple module L(c2)")
    sp.add_argument("--dump", action="store_true", help="print the action matrices of nabla(c)")
    sp = add("table", cmd_table, "all Ext dimensions in one degree", field, degrees, kind)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--cap", type=int, default=200_000)
    sp.add_argument("--jobs", type=int, default=1)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "ext" and not args.query and (args.lam is None or args.mu is None):
        parser.error("ext needs --lambda and --mu (or --query)")
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"weylext {args.verb}: error: {exc}", file=sys.stderr)
        return 1


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
