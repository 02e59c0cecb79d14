"""Candidate enumeration, the elimination pipeline, and table assembly.

The simple side enumerates real invariant-four weights and runs each
through a fixed cascade of obstructions; the composite side assembles
the candidate tables from the scanned condition pools.  Reps are
addressed by descriptor strings such as "B3:[1,0,1]", factors joined
with "*" and a circle factor written "S1".
"""

from dataclasses import dataclass
from fractions import Fraction

from .chevmod import MODULE_DIM_CAP, build_module, chevalley_basis
from .dadok import COMPLEX, QUATERNIONIC, REAL, k_invariant, repr_type
from .golden import load as load_golden, parse_frac
from .linalg import dot, solve, vadd
from .osc import (SCAN_DIM_CAP, SCAN_TYPES, FilterVerdict, c2_mu_filter,
                  c2_weight_obstruction, classify_C_tables, cor_2b_filter,
                  e8_freudenthal_filter, lemma_N_filter, sphere_transitive)
from .rootsys import build_root_datum, canonical_labels, dominant_and_dual
from .sorth import build_sorth
from .weights import weyl_dim

CIRCLE = "S1"

STATUS_CANDIDATE = "candidate"
STATUS_ELIMINATED = "eliminated"
STATUS_SYMMETRIC = "symmetric_space_excluded"
STATUS_COHOM_ONE = "cohomogeneity_one"


# --------------------------------------------------------------------------
# descriptors

def descriptor(tname, labels):
  return "%s:[%s]" % (tname, ",".join(str(x) for x in labels))


def parse_descriptor(text):
  """Split a composite descriptor into a circle flag and simple factors."""
  s1 = False
  factors = []
  for part in text.split("*"):
    if part == CIRCLE:
      s1 = True
      continue
    tname, sep, lab = part.partition(":")
    if not sep or not lab.startswith("[") or not lab.endswith("]"):
      raise ValueError("bad descriptor %r" % text)
    try:
      labels = tuple(int(x) for x in lab[1:-1].split(","))
    except ValueError:
      raise ValueError("bad descriptor %r" % text)
    factors.append((tname, labels))
  if not factors:
    raise ValueError("bad descriptor %r" % text)
  return s1, factors


def composite(factors, s1=False):
  parts = sorted(descriptor(t, l) for t, l in factors)
  if s1:
    parts = [CIRCLE] + parts
  return "*".join(parts)


def _dual_factors(factors):
  out = []
  for tname, lab in factors:
    d = build_root_datum(tname)
    _, dual, _ = dominant_and_dual(d, lab)
    out.append((tname, tuple(dual)))
  return out


def canonical_composite(factors, s1=False):
  """Descriptor of the rep or its dual, whichever sorts higher."""
  return max(composite(factors, s1), composite(_dual_factors(factors), s1))


# --------------------------------------------------------------------------
# candidate records

@dataclass(frozen=True)
class CandidateRecord:
  """One rep moving through a pipeline.

  status is one of candidate, eliminated, symmetric_space_excluded or
  cohomogeneity_one; an eliminated record carries the failing verdict.
  """
  factors: tuple
  repr_type: str
  k: object
  verdicts: tuple
  status: str

  @property
  def s1(self):
    return self.factors and self.factors[0][0] == CIRCLE

  @property
  def descriptor(self):
    simple = [f for f in self.factors if f[0] != CIRCLE]
    return composite(simple, s1=self.s1)

  @property
  def filter_name(self):
    return self.verdicts[-1].filter_name if self.verdicts else None


def record_for(factors, s1=False, verdicts=(), status=STATUS_CANDIDATE):
  k_total = Fraction(0)
  rtypes = []
  for tname, lab in factors:
    d = build_root_datum(tname)
    b = build_sorth(d)
    k_total += k_invariant(d, b, lab).k
    rtypes.append(repr_type(d, b, lab))
  if s1 or COMPLEX in rtypes:
    rt = COMPLEX
  elif rtypes.count(QUATERNIONIC) % 2:
    rt = QUATERNIONIC
  else:
    rt = REAL
  facs = ((CIRCLE, ()),) if s1 else ()
  facs = facs + tuple((t, tuple(l)) for t, l in factors)
  return CandidateRecord(facs, rt, k_total, tuple(verdicts), status)


# --------------------------------------------------------------------------
# enumeration of the real invariant-four weights

def _labels_with_k(d, b, target):
  kf = []
  for i in range(d.rank):
    unit = tuple(1 if j == i else 0 for j in range(d.rank))
    kf.append(int(k_invariant(d, b, unit).k))
  out = []

  def rec(i, left, acc):
    if i == d.rank:
      if left == 0:
        out.append(tuple(acc))
      return
    m = 0
    while m * kf[i] <= left:
      rec(i + 1, left - m * kf[i], acc + [m])
      m += 1

  rec(0, target, [])
  return out


def enumerate_k4_real(rank_cap=8):
  """Canonical real weights of invariant four, one record per class."""
  out = []
  for tname in SCAN_TYPES:
    d = build_root_datum(tname)
    if d.rank > rank_cap:
      continue
    b = build_sorth(d)
    seen = set()
    for labels in _labels_with_k(d, b, 4):
      canon = canonical_labels(d, labels)
      if canon in seen:
        continue
      seen.add(canon)
      if repr_type(d, b, canon) != REAL:
        continue
      out.append(record_for([(tname, canon)]))
  return out


# --------------------------------------------------------------------------
# the elimination cascade

def _is_symmetric_isotropy(tname, labels):
  # isotropy weights of the rank-two symmetric pairs with invariant four
  fixed = {("A1", (4,)), ("A3", (0, 2, 0)), ("A7", (0, 0, 0, 1, 0, 0, 0)),
           ("C2", (0, 2)), ("C4", (0, 0, 0, 1)),
           ("D8", (0, 0, 0, 0, 0, 0, 1, 0))}
  if (tname, labels) in fixed:
    return True
  fam, n = tname[0], int(tname[1:])
  twice_vec = labels == (2,) + (0,) * (n - 1)
  return twice_vec and (fam == "B" and n >= 3 or fam == "D" and n >= 4)


# quaternionic partners whose product with the quaternionic line is the
# isotropy rep of a Wolf space
WOLF_SP1_PARTNERS = ("A1:[3]", "A5:[0,0,1,0,0]", "C3:[0,0,1]",
                     "D6:[0,0,0,0,1,0]", "E7:[0,0,0,0,0,0,1]")


def _mu_weight_obstruction(d, tname, labels):
  # chosen mu with both lambda+mu and lambda-mu outside the root sums
  if (tname, labels) == ("A2", (2, 2)):
    return d.labels_of((-1, 1))
  if (tname, labels) == ("G2", (0, 2)):
    return d.labels_of((1, 0))
  if (tname, labels) == ("B3", (0, 1, 1)):
    v = (Fraction(3, 2), Fraction(-3, 2), Fraction(1, 2))
    return d.labels_of(d.from_theta(v))
  return None


def _mu_span_witness(d, tname, labels):
  # weight spaces searched for a vector with deficient second span
  fam, n = tname[0], int(tname[1:])
  if (tname, labels) in (("B3", (0, 0, 2)), ("G2", (2, 0))):
    return (0,) * d.rank
  d4 = (tname, labels) == ("D4", (0, 0, 1, 1))
  dn_l3 = fam == "D" and n >= 5 and labels == (0, 0, 1) + (0,) * (n - 3)
  if d4 or dn_l3:
    theta1 = (Fraction(1),) + (Fraction(0),) * (d.ambient_dim - 1)
    return d.labels_of(d.from_theta(theta1))
  return None


def eliminate_simple(d, b, labels, dim_cap=MODULE_DIM_CAP):
  """First obstruction that rejects the weight, or a survivor verdict."""
  tname = str(d.lie_type)
  labels = tuple(labels)
  if _is_symmetric_isotropy(tname, labels):
    return FilterVerdict(False, "wolf", None)
  v = cor_2b_filter(d, b, labels)
  if not v.passed:
    return v
  mu = _mu_weight_obstruction(d, tname, labels)
  if mu is not None:
    v = c2_weight_obstruction(d, labels, mu)
    assert not v.passed, (tname, labels)
    return FilterVerdict(False, "mu_obstruction", v.witness)
  if tname == "E8" and labels == (1,) + (0,) * 7:
    # keyed before the generic count bound: the multiplicity estimate at
    # a nonzero weight is the recorded certificate for this rep
    v = e8_freudenthal_filter()
    assert not v.passed
    return v
  v = lemma_N_filter(d, labels)
  if not v.passed:
    return v
  mu = _mu_span_witness(d, tname, labels)
  if mu is not None:
    m = build_module(chevalley_basis(d), labels, dim_cap)
    v = c2_mu_filter(m, mu)
    assert not v.passed, (tname, labels)
    return v
  return FilterVerdict(True, "survivor", None)


def simple_pipeline(rank_cap=8, dim_cap=MODULE_DIM_CAP, full=False):
  """Run every real invariant-four weight through the cascade.

  Returns the surviving records; full=True returns every record with its
  terminal status instead.
  """
  records = []
  for rec in enumerate_k4_real(rank_cap):
    (tname, labels), = rec.factors
    d = build_root_datum(tname)
    b = build_sorth(d)
    v = eliminate_simple(d, b, labels, dim_cap)
    if v.filter_name == "wolf":
      status = STATUS_SYMMETRIC
    elif v.passed:
      status = STATUS_CANDIDATE
    else:
      status = STATUS_ELIMINATED
    records.append(CandidateRecord(rec.factors, rec.repr_type, rec.k,
                                   (v,), status))
  if full:
    return records
  return [r for r in records if r.status == STATUS_CANDIDATE]


# --------------------------------------------------------------------------
# pools drawn from the condition scan

@dataclass(frozen=True)
class Pools:
  so: dict        # m -> orthogonal vector factor, m != 2, 4
  sp: dict        # n -> symplectic vector factor
  g2: tuple
  spin7: tuple
  spin9: tuple
  quat_c1: tuple  # quaternionic first-order entries beyond the half list
  c1half: tuple


def scan_pools(rank_cap=8, dim_cap=SCAN_DIM_CAP):
  tabs = classify_C_tables(rank_cap, dim_cap)
  so, sp = {}, {}
  g2 = spin7 = spin9 = None
  for e in tabs.c_half:
    fac = (e.type, tuple(e.labels))
    if e.rtype == QUATERNIONIC:
      d = build_root_datum(e.type)
      sp[weyl_dim(d, e.labels) // 2] = fac
    elif fac == ("G2", (1, 0)):
      g2 = fac
    elif fac == ("B3", (0, 0, 1)):
      spin7 = fac
    else:
      d = build_root_datum(e.type)
      so[weyl_dim(d, e.labels)] = fac
  quat_c1 = []
  for e in tabs.c1:
    fac = (e.type, tuple(e.labels))
    if e.rtype == REAL:
      assert spin9 is None
      spin9 = fac
    else:
      quat_c1.append(fac)
  c1half = [(e.type, tuple(e.labels)) for e in tabs.c1half]
  assert g2 and spin7 and spin9
  assert sorted(so) == [3, 5, 6] + list(range(7, 2 * rank_cap + 2))
  assert sorted(sp) == list(range(1, rank_cap + 1))
  return Pools(so, sp, g2, spin7, spin9, tuple(quat_c1), tuple(c1half))


def _so_factors(p, m):
  # the rank-two orthogonal group splits into two quaternionic lines
  if m == 4:
    return [p.sp[1], p.sp[1]]
  return [p.so[m]]


def _su_vec(n):
  assert n >= 2
  fac = ("A%d" % (n - 1), (1,) + (0,) * (n - 2))
  d = build_root_datum(fac[0])
  b = build_sorth(d)
  want = QUATERNIONIC if n == 2 else COMPLEX
  assert repr_type(d, b, fac[1]) == want
  assert int(k_invariant(d, b, fac[1]).k) == 1
  return fac


# --------------------------------------------------------------------------
# table assembly

def taut_composites(pools, survivors, rank_cap=8):
  """The four candidate tables plus the orbit-equivalent pairs.

  Returns ({"C.1": [(row_id, [descriptor, ...]), ...], ...},
           [(row_id, [{"left":…, "right":…}, …]), …]).
  """
  p = pools
  cap = rank_cap
  so_ms = list(range(3, 2 * cap + 2))
  tables = {}

  rows = []
  rows.append(("spin9_circle", [composite([p.spin9], s1=True)]))
  rows.append(("u2_spn", [composite([p.sp[1], p.sp[n]], s1=True)
                          for n in range(2, cap + 1)]))
  cubic = ("A1", (3,))
  assert cubic in p.quat_c1
  rows.append(("su2_cubic_spn", [composite([cubic, p.sp[n]])
                                 for n in range(2, cap + 1)]))
  tables["C.1"] = rows

  rows = []
  rows.append(("sun_spm", [canonical_composite([_su_vec(n), p.sp[m]])
                           for n in range(3, cap + 2)
                           for m in range(2, cap + 1)]))
  rows.append(("un_spm", [canonical_composite([_su_vec(n), p.sp[m]], s1=True)
                          for n in range(3, cap + 2)
                          for m in range(2, cap + 1)]))
  rows.append(("som_sp1spn", [composite(_so_factors(p, m) + [p.sp[1], p.sp[n]])
                              for m in so_ms for n in range(2, cap + 1)]))
  rows.append(("som_g2", [composite(_so_factors(p, m) + [p.g2])
                          for m in so_ms]))
  rows.append(("som_spin7", [composite(_so_factors(p, m) + [p.spin7])
                             for m in so_ms if m != 3]))
  rows.append(("som_spin9", [composite(_so_factors(p, m) + [p.spin9])
                             for m in so_ms]))
  tables["C.2"] = rows

  rows = []
  # exceptional pairs need the half condition on at least one side
  ex = [p.g2, p.spin7, p.spin9]
  for i, a in enumerate(ex):
    for fac in ex[i:]:
      if a == p.spin9 and fac == p.spin9:
        continue
      rows.append(("pair_%s_%s" % (a[0].lower(), fac[0].lower()),
                   [composite([a, fac])]))
  rows.append(("sp1spn_g2", [composite([p.sp[1], p.sp[n], p.g2])
                             for n in range(2, cap + 1)]))
  rows.append(("sp1spn_spin7", [composite([p.sp[1], p.sp[n], p.spin7])
                                for n in range(2, cap + 1)]))
  tables["C.3"] = rows

  rows = []
  order = ["A5", "B5", "D6", "C3", "E7"]
  quat = {fac[0]: fac for fac in p.quat_c1 if fac != cubic}
  assert sorted(quat) == sorted(order)
  names = {"A5": "spn_su6_l3", "B5": "spn_spin11", "D6": "spn_spin12",
           "C3": "spn_sp3_l3", "E7": "spn_e7"}
  row_map = {}
  for tn in order:
    fac = quat[tn]
    n_min = 2 if descriptor(*fac) in WOLF_SP1_PARTNERS else 1
    row_map[tn] = (names[tn], [composite([p.sp[n], fac])
                               for n in range(n_min, cap + 1)])
  halves = {fac[0]: fac for fac in p.c1half}
  rows.append(row_map["A5"])
  rows.append(row_map["B5"])
  rows.append(row_map["D6"])
  rows.append(("sp1_spin13", [composite([p.sp[1], halves["B6"]])]))
  rows.append(("sp1_sp2_11", [composite([p.sp[1], halves["C2"]])]))
  rows.append(row_map["C3"])
  rows.append(row_map["E7"])
  rows.append(("simple_survivors",
               [r.descriptor for r in survivors]))
  tables["C.4"] = rows

  pairs = []
  pairs.append(("su_su_mixed", [
      {"left": canonical_composite([
          _su_vec(n), ("A%d" % (m - 1), (0,) * (m - 2) + (1,))]),
       "right": canonical_composite([_su_vec(n), _su_vec(m)], s1=True)}
      for n in range(2, cap + 2) for m in range(n + 1, cap + 2)]))
  odd_l2 = [("A%d" % (n - 1), (0, 1) + (0,) * (n - 3))
            for n in range(5, cap + 2, 2)]
  pairs.append(("su_odd_l2", [
      {"left": canonical_composite([fac]),
       "right": canonical_composite([fac], s1=True)} for fac in odd_l2]))
  hs = ("D5", (0, 0, 0, 1, 0))
  pairs.append(("spin10_hs", [{"left": canonical_composite([hs]),
                               "right": canonical_composite([hs], s1=True)}]))
  pairs.append(("so2_spin7", [{"left": composite([p.spin7], s1=True),
                               "right": composite([p.so[8]], s1=True)}]))
  pairs.append(("so2_g2", [{"left": composite([p.g2], s1=True),
                            "right": composite([p.so[7]], s1=True)}]))
  pairs.append(("so3_spin7", [{"left": composite([p.so[3], p.spin7]),
                               "right": composite([p.so[3], p.so[8]])}]))
  return tables, pairs


def composite_pipeline(rank_cap=8, dim_cap=SCAN_DIM_CAP, survivors=None):
  """Candidate records for the composite tables and the pair list.

  Emits the union of the four tables plus the left column of the pair
  rows as candidates, one record per canonical descriptor in stable
  order, followed by the products of two orthogonal vector factors the
  two-real-factor rule admits but the symmetric-space discussion
  removes, marked symmetric_space_excluded.
  """
  pools = scan_pools(rank_cap, dim_cap)
  if survivors is None:
    survivors = simple_pipeline(rank_cap)
  tables, pairs = taut_composites(pools, survivors, rank_cap)
  seen = []
  for tab in ("C.1", "C.2", "C.3", "C.4"):
    for _, descs in tables[tab]:
      seen.extend(descs)
  for _, insts in pairs:
    seen.extend(i["left"] for i in insts)
  assert len(set(seen)) == len(seen)
  records = []
  for text in seen:
    s1, factors = parse_descriptor(text)
    records.append(record_for(factors, s1=s1))
  taken = set(seen)
  real_facs = [pools.so[m] for m in sorted(pools.so)]
  real_facs += [pools.g2, pools.spin7, pools.spin9]
  for i, a in enumerate(real_facs):
    for fac in real_facs[i:]:
      if a == fac == pools.spin9:
        continue
      text = composite([a, fac])
      if text in taken:
        continue
      s1, factors = parse_descriptor(text)
      records.append(record_for(factors, s1=s1,
                                 status=STATUS_SYMMETRIC))
  return records


# --------------------------------------------------------------------------
# transitive sphere actions

def bms_tables(pools, rank_cap=8, dim_cap=MODULE_DIM_CAP):
  """Groups transitive on spheres, split by a circle or line extension."""
  p = pools
  cap = rank_cap

  def check(fac):
    d = build_root_datum(fac[0])
    b = build_sorth(d)
    assert sphere_transitive(d, b, fac[1], dim_cap), fac
    rt = repr_type(d, b, fac[1])
    dim = weyl_dim(d, fac[1])
    return dim if rt == REAL else 2 * dim

  t1 = []
  for m in sorted(p.so):
    t1.append({"group": "so", "param": m, "type": p.so[m][0],
               "labels": list(p.so[m][1]), "sphere_dim": check(p.so[m]) - 1})
  for name, fac in (("g2", p.g2), ("spin7", p.spin7), ("spin9", p.spin9)):
    t1.append({"group": name, "param": None, "type": fac[0],
               "labels": list(fac[1]), "sphere_dim": check(fac) - 1})
  for n in range(1, cap + 1):
    # the line factor acts by quaternionic scalars, so transitivity is
    # inherited from the symplectic vector factor
    dim = check(p.sp[n])
    t1.append({"group": "sp1sp", "param": n,
               "factors": [{"type": p.sp[1][0], "labels": list(p.sp[1][1])},
                           {"type": p.sp[n][0], "labels": list(p.sp[n][1])}],
               "sphere_dim": dim - 1})
  t2 = []
  for grp, circ in (("su", False), ("s1_su", True)):
    for n in range(2, cap + 2):
      fac = _su_vec(n)
      t2.append({"group": grp, "param": n, "type": fac[0],
                 "labels": list(fac[1]), "circle": circ,
                 "sphere_dim": check(fac) - 1})
  for grp, circ in (("sp", False), ("s1_sp", True)):
    for n in range(1, cap + 1):
      t2.append({"group": grp, "param": n, "type": p.sp[n][0],
                 "labels": list(p.sp[n][1]), "circle": circ,
                 "sphere_dim": check(p.sp[n]) - 1})
  return {"table1": t1, "table2": t2}


# --------------------------------------------------------------------------
# circle factor reductions for the hermitian cases

@dataclass(frozen=True)
class HermitianPairData:
  """A circle extension candidate inside a hermitian ambient group."""
  name: str
  ambient: str
  compact_positive_roots: tuple
  noncompact_orthogonal_set: tuple


def hermitian_redundancy(h):
  """Decide how a circle factor interacts with the isotropy roots.

  circle_redundant: some rational combination of isotropy roots restores
  the circle weight on every gamma.  gamma_orthogonal: the sum of the
  gammas is orthogonal to every isotropy root, so it never does.
  """
  d0 = h.compact_positive_roots
  gammas = h.noncompact_orthogonal_set
  rows = [[dot(a, g) for a in d0] for g in gammas]
  rhs = [Fraction(1)] * len(gammas)
  circle = solve(rows, rhs) is not None
  total = gammas[0]
  for g in gammas[1:]:
    total = vadd(total, g)
  orth = all(dot(total, a) == 0 for a in d0)
  return {"circle_redundant": circle, "gamma_orthogonal": orth}


AMBIENT_TYPES = {"SU5": "A4", "SO10": "D5", "E6": "E6", "SP3": "C3",
                 "SO12": "D6", "SU6": "A5", "E7": "E7"}


def hermitian_cases(directory=None):
  """The shipped case data, validated against the ambient root system."""
  raw = load_golden("hermitian_pairs.json", directory)
  cases = []
  for c in raw["cases"]:
    d0 = tuple(tuple(parse_frac(x) for x in row) for row in c["delta0_plus"])
    gam = tuple(tuple(parse_frac(x) for x in row) for row in c["gammas"])
    d = build_root_datum(AMBIENT_TYPES[c["ambient"]])
    for v in d0 + gam:
      assert d.is_root(d.from_theta(v)), (c["name"], v)
    for i in range(len(gam)):
      for j in range(i + 1, len(gam)):
        for sign in (1, -1):
          w = tuple(a + sign * b for a, b in zip(gam[i], gam[j]))
          assert not d.is_root(d.from_theta(w)), (c["name"], i, j)
    cases.append((HermitianPairData(c["name"], c["ambient"], d0, gam),
                  c["kind"]))
  return cases
