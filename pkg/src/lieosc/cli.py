"""Command line front end.

Subcommands mirror the library operations: root data, orthogonal root
sets, the degree invariant, dimensions and multiplicities, spanning
condition checks, the elimination pipelines and verification of the
bundled reference tables.  Everything is exact; --json switches the
output to a machine form with the envelope {"command", "result"}.

Exit codes: 0 ok, 1 reference table mismatch, 2 parse or usage error,
3 dimension cap exceeded.
"""

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import golden
from .chevmod import (CONDITIONS, MODULE_DIM_CAP, build_module,
                      chevalley_basis, check_condition, verify_prop_d)
from .classify import (bms_tables, composite_pipeline, hermitian_cases,
                       hermitian_redundancy, parse_descriptor, record_for,
                       scan_pools, simple_pipeline, taut_composites)
from .dadok import k_invariant
from .osc import SCAN_DIM_CAP, classify_C_tables, sphere_transitive
from .rootsys import build_root_datum, dominant_and_dual
from .sorth import build_sorth
from .weights import (DimCapExceeded, decomposition_count, weight_system,
                      weyl_dim)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_DIM_CAP = 3

SCHEMA_FILE = os.path.join(os.path.dirname(__file__), "cli_schema.json")


class CliError(ValueError):
  pass


# --------------------------------------------------------------------------
# formatting helpers

def _jval(x):
  if isinstance(x, Fraction):
    return int(x) if x.denominator == 1 else str(x)
  if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
    return x
  if isinstance(x, (list, tuple)):
    return [_jval(v) for v in x]
  if isinstance(x, dict):
    return {str(k): _jval(v) for k, v in x.items()}
  return str(x)


def theta_str(v):
  parts = []
  for i, c in enumerate(v):
    if not c:
      continue
    t = "θ%d" % (i + 1)
    if c == 1:
      term = t
    elif c == -1:
      term = "-" + t
    else:
      term = "%s%s" % (c, t)
    if parts and not term.startswith("-"):
      term = "+" + term
    parts.append(term)
  return "".join(parts) or "0"


_TOKEN = re.compile(r"([+-]?)(\d+(?:/\d+)?)?(?:θ|theta)(\d+)")


def parse_theta_expr(text, dim):
  """Sum of coefficient-scaled basis vectors, e.g. "θ1+θ2" or "2theta1"."""
  s = text.replace(" ", "")
  out = [Fraction(0)] * dim
  pos = 0
  for mo in _TOKEN.finditer(s):
    if mo.start() != pos:
      break
    pos = mo.end()
    sign = -1 if mo.group(1) == "-" else 1
    coef = Fraction(mo.group(2)) if mo.group(2) else Fraction(1)
    idx = int(mo.group(3))
    if not 1 <= idx <= dim:
      raise CliError("θ%d out of range, ambient dimension is %d" % (idx, dim))
    out[idx - 1] += sign * coef
  if pos != len(s) or pos == 0:
    raise CliError("cannot parse weight expression %r" % text)
  return tuple(out)


def _parse_desc(text):
  try:
    return parse_descriptor(text)
  except ValueError as e:
    raise CliError(str(e))


def _datum(tname):
  try:
    return build_root_datum(tname)
  except (KeyError, ValueError, AssertionError):
    raise CliError("unknown type %r" % tname)


def _validated(text):
  s1, factors = _parse_desc(text)
  for tname, labels in factors:
    d = _datum(tname)
    if len(labels) != d.rank or any(x < 0 for x in labels):
      raise CliError("labels %r do not fit type %s" % (list(labels), tname))
  return s1, factors


def _single(text):
  s1, factors = _validated(text)
  if s1 or len(factors) != 1:
    raise CliError("expected a single simple factor, got %r" % text)
  tname, labels = factors[0]
  return build_root_datum(tname), tname, labels


def _labels_arg(d, text):
  try:
    labels = tuple(int(x) for x in text.split(","))
  except ValueError:
    raise CliError("cannot parse labels %r" % text)
  if len(labels) != d.rank:
    raise CliError("expected %d labels, got %d" % (d.rank, len(labels)))
  return labels


def _weight_from_args(d, args, default_zero=False):
  if args.theta is not None:
    tv = parse_theta_expr(args.theta, d.ambient_dim)
    v = d.from_theta(tv)
    labels = d.labels_of(v)
    if any(x.denominator != 1 for x in labels):
      raise CliError("%r is not a weight of the lattice" % args.theta)
    return tuple(int(x) for x in labels)
  if args.labels is not None:
    return _labels_arg(d, args.labels)
  if default_zero:
    return (0,) * d.rank
  raise CliError("give a weight via --theta or --labels")


# --------------------------------------------------------------------------
# simple inspection commands

def cmd_roots(args):
  d = _datum(args.type)
  simple = [d.to_theta(a) for a in d.simple_roots]
  pos = [d.to_theta(a) for a in d.positive_roots]
  fund = [d.to_theta(d.weight_coords(
      tuple(1 if j == i else 0 for j in range(d.rank))))
      for i in range(d.rank)]
  high = d.to_theta(d.highest_root)
  result = {"type": args.type, "rank": d.rank, "ambient_dim": d.ambient_dim,
            "positive_roots": pos, "simple_roots": simple,
            "highest_root": high, "fundamental_weights": fund}
  lines = ["%s: rank %d, %d positive roots" % (args.type, d.rank, len(pos)),
           "simple roots:    " + "  ".join(theta_str(a) for a in simple),
           "highest root:    " + theta_str(high),
           "fundamental wts: " + "  ".join(theta_str(w) for w in fund)]
  return EXIT_OK, result, lines


def cmd_sorth(args):
  d = _datum(args.type)
  b = build_sorth(d)
  betas = [d.to_theta(x) for x in b.betas]
  result = {"type": args.type, "betas": betas}
  lines = ["%s: %d strongly orthogonal roots" % (args.type, len(betas))]
  lines += ["  β%d = %s" % (i + 1, theta_str(v)) for i, v in enumerate(betas)]
  return EXIT_OK, result, lines


def cmd_k(args):
  s1, factors = _validated(args.rep)
  rec = record_for(factors, s1=s1)
  result = {"descriptor": rec.descriptor, "k": rec.k,
            "repr_type": rec.repr_type}
  return EXIT_OK, result, ["k=%s, %s" % (rec.k, rec.repr_type.capitalize())]


def cmd_type(args):
  s1, factors = _validated(args.rep)
  rec = record_for(factors, s1=s1)
  result = {"descriptor": rec.descriptor, "repr_type": rec.repr_type}
  return EXIT_OK, result, [rec.repr_type.capitalize()]


def cmd_dim(args):
  s1, factors = _validated(args.rep)
  dim = 2 if s1 else 1
  for tname, labels in factors:
    dim *= weyl_dim(build_root_datum(tname), labels)
  return EXIT_OK, {"descriptor": args.rep, "dim": dim}, [str(dim)]


def cmd_mult(args):
  d, tname, labels = _single(args.rep)
  mu = _weight_from_args(d, args, default_zero=True)
  ws = weight_system(d, labels, *((args.dim_cap,) if args.dim_cap else ()))
  m = ws.mult(mu)
  result = {"descriptor": args.rep, "weight_labels": list(mu), "mult": m,
            "weight_theta": theta_str(d.to_theta(d.weight_coords(mu)))}
  return EXIT_OK, result, ["mult=%d" % m]


def cmd_nsum(args):
  if ":" in args.target:
    d, tname, labels = _single(args.target)
    if args.theta is None and args.labels is None:
      v = d.weight_coords(labels)
    else:
      v = d.weight_coords(_weight_from_args(d, args))
  else:
    d = _datum(args.target)
    v = d.weight_coords(_weight_from_args(d, args))
  n, wits = decomposition_count(d, v)
  result = {"type": str(d.lie_type), "weight": theta_str(d.to_theta(v)),
            "n": n,
            "pairs": [[theta_str(d.to_theta(x)) for x in w[1:]]
                      for w in wits]}
  return EXIT_OK, result, ["N=%d" % n]


# --------------------------------------------------------------------------
# module-level checks

def _module_for(d, labels, dim_cap):
  return build_module(chevalley_basis(d), labels, dim_cap or MODULE_DIM_CAP)


def cmd_check(args):
  d, tname, labels = _single(args.rep)
  m = _module_for(d, labels, args.dim_cap)
  try:
    holds, witness = check_condition(m, args.cond)
  except ValueError as e:
    raise CliError(str(e))
  result = {"descriptor": args.rep, "cond": args.cond, "holds": holds,
            "witness": list(witness) if witness else None}
  if holds:
    lines = ["%s holds for %s" % (args.cond, args.rep)]
  else:
    w = theta_str(d.to_theta(d.weight_coords(witness)))
    result["witness_theta"] = w
    lines = ["%s fails for %s: weight %s not covered" %
             (args.cond, args.rep, w)]
  return EXIT_OK, result, lines


def cmd_prop_d(args):
  d, tname, labels = _single(args.rep)
  b = build_sorth(d)
  kv = k_invariant(d, b, labels)
  m = _module_for(d, labels, args.dim_cap)
  rep = verify_prop_d(m, b, kv)
  result = {"descriptor": args.rep, "ok": rep.ok, "k": rep.k,
            "monomial_powers": list(rep.n_parts),
            "monomial_nonzero": rep.monomial_nonzero,
            "in_level_k": rep.in_level_k,
            "outside_level_k_minus_1": rep.outside_level_km1,
            "exact": rep.exact}
  lines = ["k=%d, monomial powers %s" % (rep.k, list(rep.n_parts)),
           "lowest weight vector reached: %s" % rep.monomial_nonzero,
           "inside level-%d span: %s" % (rep.k, rep.in_level_k),
           "outside level-%d span: %s (%s)" %
           (rep.k - 1, rep.outside_level_km1,
            "exact" if rep.exact else "certified at level 2"),
           "verdict: %s" % ("ok" if rep.ok else "FAILED")]
  return EXIT_OK, result, lines


def cmd_transitive(args):
  d, tname, labels = _single(args.rep)
  b = build_sorth(d)
  t = sphere_transitive(d, b, labels, args.dim_cap or MODULE_DIM_CAP)
  word = "transitive" if t else "not transitive"
  return EXIT_OK, {"descriptor": args.rep, "transitive": t}, [word]


# --------------------------------------------------------------------------
# pipelines

def _record_json(r):
  return {"factors": [{"type": t, "labels": list(l)} for t, l in r.factors],
          "descriptor": r.descriptor, "repr_type": r.repr_type, "k": r.k,
          "status": r.status,
          "verdicts": [{"passed": v.passed, "filter": v.filter_name,
                        "witness": v.witness} for v in r.verdicts]}


def cmd_classify(args):
  if args.which == "simple":
    recs = simple_pipeline(args.rank_cap, args.dim_cap or MODULE_DIM_CAP,
                           full=True)
  else:
    recs = composite_pipeline(args.rank_cap,
                              args.dim_cap or SCAN_DIM_CAP)
  counts = {}
  lines = []
  for r in recs:
    counts[r.status] = counts.get(r.status, 0) + 1
    tag = r.filter_name or "-"
    lines.append("%-34s %-26s %s" % (r.descriptor, r.status, tag))
  lines.append("")
  lines.append("%d entries: %s" % (
      len(recs), ", ".join("%s %d" % (s, n) for s, n in sorted(counts.items()))))
  if args.which == "simple":
    surv = [r.descriptor for r in recs if r.status == "candidate"]
    lines.append("survivors: " + ", ".join(surv))
  result = {"which": args.which, "records": [_record_json(r) for r in recs],
            "counts": counts}
  return EXIT_OK, result, lines


# --------------------------------------------------------------------------
# reference table verification

def _diff_sets(got, want, label):
  out = []
  for x in sorted(set(want) - set(got)):
    out.append("%s: missing %s" % (label, (x,)))
  for x in sorted(set(got) - set(want)):
    out.append("%s: extra %s" % (label, (x,)))
  return out


def _table_a(args):
  g = golden.load("sorth_appendix_a.json")
  computed, diff = {}, []
  for tname in sorted(g["types"]):
    d = _datum(tname)
    betas = [list(v) for v in (d.to_theta(x) for x in build_sorth(d).betas)]
    computed[tname] = betas
    want = [list(golden.frac_vec(v)) for v in g["types"][tname]["betas"]]
    if betas != want:
      diff.append("%s: orthogonal set mismatch" % tname)
  return computed, diff


def _table_b1(args):
  g = golden.load("k_table_appendix_b.json")
  computed, diff = {}, []
  for tname in sorted(g["types"]):
    d = _datum(tname)
    b = build_sorth(d)
    ks, self_dual = [], True
    for i in range(d.rank):
      unit = tuple(1 if j == i else 0 for j in range(d.rank))
      ks.append(int(k_invariant(d, b, unit).k))
      self_dual &= dominant_and_dual(d, unit)[2]
    duality = "self" if self_dual else "diagram"
    computed[tname] = {"k": ks, "duality": duality}
    want = g["types"][tname]
    if ks != want["k"]:
      diff.append("%s: k row %s != %s" % (tname, ks, want["k"]))
    if duality != want["duality"]:
      diff.append("%s: duality %s != %s" % (tname, duality, want["duality"]))
  return computed, diff


def _cond_rows(entries):
  return [(e.type, tuple(e.labels), int(e.k), e.rtype) for e in entries]


def _golden_cond_rows(name):
  g = golden.load(name)
  return [(e["type"], tuple(e["labels"]), e["k"], e["repr_type"])
          for e in g["entries"]]


def _table_cond(which):
  name = {"chalf": "c_half_classif.json", "c1": "c1_classif.json",
          "c1half": "c1half_classif.json"}[which]

  def fn(args):
    tabs = classify_C_tables(args.rank_cap, args.dim_cap or SCAN_DIM_CAP)
    entries = {"chalf": tabs.c_half, "c1": tabs.c1,
               "c1half": tabs.c1half}[which]
    got = _cond_rows(entries)
    computed = [{"type": t, "labels": list(l), "k": k, "repr_type": r}
                for t, l, k, r in got]
    return computed, _diff_sets(got, _golden_cond_rows(name), which)
  return fn


def _table_k4(args):
  g = golden.load("lemma_k4.json")
  want = {(i["type"], tuple(i["labels"])): i["filter"]
          for i in g["instances"]}
  recs = simple_pipeline(args.rank_cap, args.dim_cap or MODULE_DIM_CAP,
                         full=True)
  computed, diff = [], []
  got_keys = set()
  for r in recs:
    (tname, labels), = r.factors
    got_keys.add((tname, labels))
    computed.append({"type": tname, "labels": list(labels),
                     "filter": r.filter_name, "status": r.status})
    if (tname, labels) not in want:
      diff.append("extra entry %s:%s" % (tname, list(labels)))
    elif want[tname, labels] != r.filter_name:
      diff.append("%s:%s routed to %s, table says %s" %
                  (tname, list(labels), r.filter_name, want[tname, labels]))
  for key in sorted(want.keys() - got_keys):
    diff.append("missing entry %s:%s" % (key[0], list(key[1])))
  return computed, diff


def _table_survivors(args):
  g = golden.load("prop_simple_survivors.json")
  want = [(e["type"], tuple(e["labels"])) for e in g["survivors"]]
  surv = simple_pipeline(args.rank_cap, args.dim_cap or MODULE_DIM_CAP)
  got = [r.factors[0] for r in surv]
  computed = [{"type": t, "labels": list(l)} for t, l in got]
  return computed, _diff_sets(got, want, "survivors")


def _table_bms(args):
  g = golden.load("bms_spheres.json")
  computed = bms_tables(scan_pools(args.rank_cap), args.rank_cap)
  diff = []
  for key in ("table1", "table2"):
    if json.dumps(computed[key], sort_keys=True) != \
       json.dumps(g[key], sort_keys=True):
      diff.append("%s mismatch" % key)
  return computed, diff


def _composites(args):
  pools = scan_pools(args.rank_cap)
  survivors = simple_pipeline(args.rank_cap)
  return taut_composites(pools, survivors, args.rank_cap)


def _table_c(args):
  g = golden.load("appendix_c_tables.json")["tables"]
  tables, _ = _composites(args)
  computed, diff = {}, []
  for tab in ("C.1", "C.2", "C.3", "C.4"):
    computed[tab] = [{"id": rid, "instances": insts}
                     for rid, insts in tables[tab]]
    want = {row["id"]: row["instances"] for row in g[tab]}
    got = dict(tables[tab])
    for rid in sorted(want.keys() | got.keys()):
      if got.get(rid) != want.get(rid):
        diff.append("%s row %s mismatch" % (tab, rid))
  return computed, diff


def _table_pairs(args):
  g = golden.load("prop_pairs.json")["rows"]
  _, pairs = _composites(args)
  computed = [{"id": rid, "instances": insts} for rid, insts in pairs]
  want = {row["id"]: row["instances"] for row in g}
  got = dict(pairs)
  diff = []
  for rid in sorted(want.keys() | got.keys()):
    if got.get(rid) != want.get(rid):
      diff.append("pairs row %s mismatch" % rid)
  return computed, diff


TABLES = {"a": _table_a, "b1": _table_b1, "chalf": _table_cond("chalf"),
          "c1": _table_cond("c1"), "c1half": _table_cond("c1half"),
          "k4": _table_k4, "survivors": _table_survivors, "bms": _table_bms,
          "c": _table_c, "pairs": _table_pairs}


def cmd_tables(args):
  computed, diff = TABLES[args.which](args)
  result = {"which": args.which, "computed": computed,
            "match": not diff, "diff": diff}
  lines = []
  if not args.verify:
    lines.append(json.dumps(_jval(computed), indent=1, sort_keys=True))
    return EXIT_OK, result, lines
  lines += diff
  lines.append("%s: %s" % (args.which, "ok" if not diff else
                           "%d mismatches" % len(diff)))
  return (EXIT_OK if not diff else EXIT_MISMATCH), result, lines


def cmd_hermitian(args):
  cases = hermitian_cases()
  rows, diff = [], []
  for h, kind in cases:
    r = hermitian_redundancy(h)
    got = ("circle_redundant" if r["circle_redundant"] else
           "gamma_orthogonal" if r["gamma_orthogonal"] else "neither")
    rows.append({"name": h.name, "ambient": h.ambient,
                 "circle_redundant": r["circle_redundant"],
                 "gamma_orthogonal": r["gamma_orthogonal"]})
    if r["circle_redundant"] == r["gamma_orthogonal"]:
      diff.append("%s: flags not mutually exclusive" % h.name)
    if args.verify and got != kind:
      diff.append("%s: computed %s, table says %s" % (h.name, got, kind))
  lines = ["%-16s %-8s circle_redundant=%-5s gamma_orthogonal=%s" %
           (r["name"], r["ambient"], r["circle_redundant"],
            r["gamma_orthogonal"]) for r in rows]
  lines += diff
  result = {"cases": rows, "match": not diff, "diff": diff}
  if args.verify:
    lines.append("hermitian: %s" % ("ok" if not diff else
                                    "%d mismatches" % len(diff)))
    return (EXIT_OK if not diff else EXIT_MISMATCH), result, lines
  return EXIT_OK, result, lines


# --------------------------------------------------------------------------
# wiring

HANDLERS = {"roots": cmd_roots, "sorth": cmd_sorth, "k": cmd_k,
            "type": cmd_type, "dim": cmd_dim, "mult": cmd_mult,
            "nsum": cmd_nsum, "check": cmd_check, "prop-d": cmd_prop_d,
            "transitive": cmd_transitive, "classify": cmd_classify,
            "tables": cmd_tables, "hermitian": cmd_hermitian}


def build_parser():
  common = argparse.ArgumentParser(add_help=False)
  common.add_argument("--json", action="store_true",
                      help="machine readable output")
  common.add_argument("--dim-cap", type=int, default=None, metavar="N",
                      help="explicit module dimension cap")
  common.add_argument("--rank-cap", type=int, default=8, metavar="N",
                      help="largest simple rank scanned")
  common.add_argument("--data-dir", default=None, metavar="PATH",
                      help="reference table directory (or $%s)" %
                      golden.ENV_VAR)
  p = argparse.ArgumentParser(
      prog="lieosc",
      description="exact computations for osculating spaces of compact "
                  "group orbits")
  sub = p.add_subparsers(dest="command", required=True)

  sp = sub.add_parser("roots", parents=[common],
                      help="root datum of a simple type")
  sp.add_argument("type")
  sp = sub.add_parser("sorth", parents=[common],
                      help="strongly orthogonal root cascade")
  sp.add_argument("type")
  for name, help_text in (("k", "degree invariant and representation type"),
                          ("type", "real / quaternionic / complex"),
                          ("dim", "dimension of the representation")):
    sp = sub.add_parser(name, parents=[common], help=help_text)
    sp.add_argument("rep", help="descriptor such as B3:[0,0,1] or "
                                "S1*A1:[1]*C3:[1,0,0]")
  sp = sub.add_parser("mult", parents=[common],
                      help="multiplicity of a weight")
  sp.add_argument("rep")
  sp.add_argument("--theta", default=None, help='weight like "θ1+θ2"')
  sp.add_argument("--labels", default=None, help='weight labels "0,1,0"')
  sp = sub.add_parser("nsum", parents=[common],
                      help="number of two-root sum decompositions")
  sp.add_argument("target", help="type name or descriptor")
  sp.add_argument("--theta", default=None)
  sp.add_argument("--labels", default=None)
  sp = sub.add_parser("check", parents=[common],
                      help="osculating spanning condition")
  sp.add_argument("--cond", required=True, choices=sorted(CONDITIONS))
  sp.add_argument("rep")
  sp = sub.add_parser("prop-d", parents=[common],
                      help="orthogonal-monomial degree certificate")
  sp.add_argument("rep")
  sp = sub.add_parser("transitive", parents=[common],
                      help="sphere transitivity of the action")
  sp.add_argument("rep")
  sp = sub.add_parser("classify", parents=[common],
                      help="elimination pipelines")
  sp.add_argument("which", choices=("simple", "composite"))
  sp = sub.add_parser("tables", parents=[common],
                      help="print or verify a bundled table")
  sp.add_argument("--which", required=True, choices=sorted(TABLES))
  sp.add_argument("--verify", action="store_true",
                  help="diff computed values against the bundled table")
  sp = sub.add_parser("hermitian", parents=[common],
                      help="circle redundancy for the hermitian cases")
  sp.add_argument("--verify", action="store_true")
  return p


def run_cli(argv):
  parser = build_parser()
  try:
    args = parser.parse_args(argv)
  except SystemExit as e:
    return e.code if isinstance(e.code, int) else EXIT_PARSE
  saved = os.environ.get(golden.ENV_VAR)
  if args.data_dir:
    os.environ[golden.ENV_VAR] = args.data_dir
  try:
    code, result, lines = HANDLERS[args.command](args)
  except CliError as e:
    print("error: %s" % e, file=sys.stderr)
    return EXIT_PARSE
  except DimCapExceeded as e:
    print("error: dimension cap exceeded (%s)" % e, file=sys.stderr)
    return EXIT_DIM_CAP
  finally:
    if args.data_dir:
      if saved is None:
        os.environ.pop(golden.ENV_VAR, None)
      else:
        os.environ[golden.ENV_VAR] = saved
  if args.json:
    print(json.dumps({"command": args.command, "result": _jval(result)},
                     sort_keys=True))
  else:
    for ln in lines:
      print(ln)
  return code


def main():
  sys.exit(run_cli(sys.argv[1:]))


if __name__ == "__main__":
  main()
