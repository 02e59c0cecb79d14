"""Obstruction filters and the onefold spanning-condition scan.

Each filter either passes a candidate through or stops it with a witness.
The witnesses are exact: an uncovered weight, a vector whose second
osculating span misses part of the module, or a multiplicity exceeding a
word-count bound.  Filters never prove a condition holds; the exact
module checks in chevmod do that.
"""

from dataclasses import dataclass
from fractions import Fraction
import random

from .chevmod import (MODULE_DIM_CAP, build_module, chevalley_basis,
                      check_condition, span_u, words_between)
from .dadok import COMPLEX, QUATERNIONIC, REAL, k_invariant, repr_type
from .linalg import ONE, ZERO, SpanBuilder, nullspace
from .rootsys import build_root_datum, canonical_labels, dominant_and_dual
from .sorth import build_sorth
from .weights import (DimCapExceeded, decomposition_count, is_weight_of,
                      weight_system, weyl_dim, zero_weight_mult)

SCAN_DIM_CAP = 256


@dataclass(frozen=True)
class FilterVerdict:
  passed: bool
  filter_name: str
  witness: object = None


def _in_root_lattice(coords):
  return all(c.denominator == 1 for c in coords)


def _n_count(d, coords):
  if not _in_root_lattice(coords):
    return 0
  n, _ = decomposition_count(d, coords)
  return n


def _coverage(d, coords, level):
  """Upper bound for the word-image dimension at displacement coords."""
  zero = all(c == 0 for c in coords)
  if level == 0:
    return 1 if zero else 0
  if level == 1:
    return (1 if zero else 0) + (1 if d.is_root(coords) else 0)
  return (1 if zero else 0) + _n_count(d, coords)


def k_bound_filter(d, b, labels):
  """Degree bound on candidates by representation type."""
  kv = k_invariant(d, b, labels)
  rt = repr_type(d, b, labels)
  allowed = {REAL: (2, 4), QUATERNIONIC: (1,), COMPLEX: (1, 2)}[rt]
  k = kv.k
  if k.denominator == 1 and int(k) in allowed:
    return FilterVerdict(True, "k_bound")
  return FilterVerdict(False, "k_bound", {"k": k, "type": rt})


def c2_weight_obstruction(d, lam_labels, mu_labels):
  """A weight space no second-order word from either end can reach."""
  lam_labels, mu_labels = tuple(lam_labels), tuple(mu_labels)
  assert is_weight_of(d, lam_labels, mu_labels), (lam_labels, mu_labels)
  if mu_labels == lam_labels or mu_labels == tuple(-x for x in lam_labels):
    return FilterVerdict(True, "c2_weight")
  lam = d.weight_coords(lam_labels)
  mu = d.weight_coords(mu_labels)
  n_minus = _n_count(d, tuple(a - b for a, b in zip(lam, mu)))
  n_plus = _n_count(d, tuple(a + b for a, b in zip(lam, mu)))
  if n_minus == 0 and n_plus == 0:
    return FilterVerdict(False, "c2_weight", {"mu": mu_labels})
  return FilterVerdict(True, "c2_weight")


def _long_elements(d, b):
  return [beta for beta in b.betas if d.pairing(beta, beta) == d.long_norm]


def cor_2b_filter(d, b, labels):
  """Root-pattern obstructions built from the orthogonal long-root set.

  Branch (a) handles twice-the-highest-root weights against a second long
  element of the set; the second branch matches (3 beta_i + beta_j)/2
  patterns and tests the reflected companion weight.
  """
  labels = tuple(labels)
  lam = d.weight_coords(labels)
  longs = _long_elements(d, b)
  # branch (a)
  twice = tuple(2 * x for x in d.highest_root)
  if lam == twice and len(longs) >= 2:
    for beta in longs[1:]:
      mu = d.labels_of(beta)
      if is_weight_of(d, labels, mu):
        sub = c2_weight_obstruction(d, labels, mu)
        if not sub.passed:
          return FilterVerdict(False, "cor2b_a", {"mu": mu})
  # branch (b): lambda = (3 beta_i + beta_j)/2 with companion (beta_i - 3 beta_j)/2
  for bi in longs:
    for bj in longs:
      if bi == bj:
        continue
      cand = tuple(Fraction(3 * x + y, 2) for x, y in zip(bi, bj))
      if cand != lam:
        continue
      mu_coords = tuple(Fraction(x - 3 * y, 2) for x, y in zip(bi, bj))
      mu = d.labels_of(mu_coords)
      if all(c.denominator == 1 for c in mu) and is_weight_of(d, labels, mu):
        sub = c2_weight_obstruction(d, labels, mu)
        if not sub.passed:
          return FilterVerdict(False, "cor2b_roots1", {"mu": tuple(int(c) for c in mu)})
  return FilterVerdict(True, "cor2b")


def lemma_N_filter(d, labels):
  """Zero-weight multiplicity against the two-root decomposition count."""
  labels = tuple(labels)
  lam = d.weight_coords(labels)
  if not _in_root_lattice(lam):
    return FilterVerdict(True, "lemma_N", {"note": "weight not in the root lattice"})
  m0 = zero_weight_mult(d, labels)
  if m0 == 0:
    return FilterVerdict(True, "lemma_N")
  n, _ = decomposition_count(d, lam)
  if m0 > n:
    return FilterVerdict(False, "lemma_N", {"zero_mult": m0, "n_count": n})
  return FilterVerdict(True, "lemma_N")


# --- per-vector second-order span filter ------------------------------------


def _full_pair_check(m, v):
  """U^2 v + U^2 T(v) against the whole module; None when it spans."""
  res = span_u(m, [v], 2)
  if not res.is_full():
    res = span_u(m, [m.t_apply(v)], 2, into=res)
  if res.is_full():
    return None
  return res.uncovered()[0]


def _mu_vector(m, mu, coords):
  return {tuple(mu): tuple(coords)}


def _word_rows(m, mu, nu):
  """Coefficient rows of all second-order word images V_mu -> V_nu.

  Each row is the flattened m_nu x m_mu matrix of one word (including the
  conjugated-seed words); the row span over Q determines the reachable
  space at nu for every seed vector simultaneously.
  """
  mu, nu = tuple(mu), tuple(nu)
  mats = list(words_between(m, mu, nu, 2))
  tmat = m.t_matrices()[mu]
  neg = tuple(-x for x in mu)
  for w in words_between(m, neg, nu, 2):
    mats.append(tuple(tuple(sum((row[k] * tmat[k][j] for k in range(len(tmat))), ZERO)
                            for j in range(len(tmat[0])))
                      for row in w))
  rows = [tuple(x for row in mat for x in row) for mat in mats]
  return rows


def _rational_kernel_vector(rows, ncols):
  ns = nullspace(tuple(rows), ncols)
  return ns[0] if ns else None


def _minor_witness(reduced, r, m_mu):
  """Rational coords where every r x r minor of the reduced rows vanishes."""
  import itertools
  import sympy

  cs = sympy.symbols(f"c0:{m_mu}", rational=True)
  mat = sympy.Matrix([[sum(sympy.Rational(row[t * m_mu + j]) * cs[j] for j in range(m_mu))
                       for t in range(r)] for row in reduced])
  minors = set()
  for comb in itertools.combinations(range(mat.rows), r):
    expr = sympy.expand(mat[list(comb), :].det())
    if expr != 0:
      minors.add(expr)
  if not minors:
    return (1,) + (0,) * (m_mu - 1)
  minors = list(minors)
  grid = [0, 1, -1, 2, -2, Fraction(1, 2), Fraction(-1, 2), 3, -3]
  for lead in range(m_mu):
    subs_fixed = {cs[i]: 0 for i in range(lead)}
    subs_fixed[cs[lead]] = 1
    free = list(cs[lead + 1:])
    polys = [sympy.expand(mm.subs(subs_fixed)) for mm in minors]
    polys = [p for p in polys if p != 0]
    if not polys:
      return tuple(0 for _ in range(lead)) + (1,) + tuple(0 for _ in free)
    if not free:
      continue
    try:
      sols = sympy.solve(polys, free, dict=True)
    except Exception:
      sols = []
    for sol in sols:
      vals = [sol.get(v, None) for v in free]
      if any(v is None for v in vals):
        # parametric family; specialize the remaining freedom
        for g in grid:
          trial = [sympy.nsimplify(v.subs({fv: g for fv in free if fv not in sol}), rational=True)
                   if v is not None else sympy.Rational(g) for v in vals]
          if all(v.is_rational for v in trial):
            vals = trial
            break
        else:
          continue
      if all(getattr(v, "is_rational", False) for v in vals):
        out = [Fraction(0)] * lead + [Fraction(1)]
        out.extend(Fraction(int(sympy.fraction(v)[0]), int(sympy.fraction(v)[1])) for v in vals)
        return tuple(out)
    # grid fallback over the free variables
    if len(free) <= 2:
      for point in itertools.product(grid, repeat=len(free)):
        if all(sympy.Rational(p.subs(dict(zip(free, point)))) == 0 for p in polys):
          return tuple(0 for _ in range(lead)) + (1,) + tuple(Fraction(g) for g in point)
  return None


def c2_mu_filter(m, mu_labels, rng_seed=20240814):
  """Search V_mu for a vector whose paired second-order span misses V.

  Fast candidates are tried first with the exact span test; after that
  each target weight is examined through the linear or determinantal
  locus of its word images, and any root of the locus is certified by an
  independent exact span computation.
  """
  mu = tuple(mu_labels)
  assert mu in m.dims, (m.highest, mu)
  m_mu = m.dims[mu]

  def verdict_fail(coords, nu):
    return FilterVerdict(False, "c2_mu",
                         {"mu": mu, "coords": tuple(coords), "uncovered": nu})

  quick = list(m.space_basis(mu))
  rng = random.Random(rng_seed)
  for i in range(m_mu):
    for j in range(i + 1, m_mu):
      for s in (ONE, -ONE):
        quick.append({mu: tuple((ONE if k == i else ZERO) + (s if k == j else ZERO)
                                for k in range(m_mu))})
  for _ in range(4):
    quick.append({mu: tuple(Fraction(rng.randint(-3, 3)) for _ in range(m_mu))})
  def norm(coords):
    # scale so the leading entry is one; keeps the try-set and the
    # conjugation chain from walking through scalar multiples forever
    lead = next((x for x in coords if x), None)
    if lead is None:
      return tuple(coords)
    return tuple(x / lead for x in coords)

  tried = set()
  for v in quick:
    coords = norm(v[mu])
    if not any(coords) or coords in tried:
      continue
    tried.add(coords)
    nu = _full_pair_check(m, {mu: coords})
    if nu is not None:
      return verdict_fail(coords, nu)
    tv = m.t_apply({mu: coords})
    tvc = tv.get(tuple(-x for x in mu))
    if tvc and any(tvc) and tuple(-x for x in mu) == mu:
      tvc = norm(tvc)
      if tvc not in tried:
        quick.append({mu: tvc})

  # systematic pass: targets ordered by multiplicity then depth
  targets = sorted(m.spaces, key=lambda w: (m.dims[w], m.spaces.index(w)))
  for nu in targets:
    r = m.dims[nu]
    rows = _word_rows(m, mu, nu)
    sb = SpanBuilder(r * m_mu)
    for row in rows:
      sb.add(row)
    if sb.rank < r:
      # rank deficit for every seed vector
      coords = (ONE,) + (ZERO,) * (m_mu - 1)
      check = _full_pair_check(m, _mu_vector(m, mu, coords))
      assert check is not None
      return verdict_fail(coords, check)
    reduced = [tuple(row) for row in sb.rows]
    if r == 1:
      kern = _rational_kernel_vector(reduced, m_mu)
      if kern is not None:
        check = _full_pair_check(m, _mu_vector(m, mu, kern))
        assert check is not None, (mu, nu, kern)
        return verdict_fail(kern, check)
    elif r <= 3 and m_mu <= 4:
      coords = _minor_witness(reduced, r, m_mu)
      if coords is not None and any(coords):
        check = _full_pair_check(m, _mu_vector(m, mu, coords))
        assert check is not None, (mu, nu, coords)
        return verdict_fail(coords, check)
  return FilterVerdict(True, "c2_mu", {"note": "no rational witness found"})


E8_MU_MULT = 7  # multiplicity of theta_6 + theta_5 in the 3875-dim module


def e8_freudenthal_filter():
  """Multiplicity overflow at a root-orbit weight of the E8 3875."""
  d = build_root_datum("E8")
  labels = (1, 0, 0, 0, 0, 0, 0, 0)
  ws = weight_system(d, labels)
  mu_theta = [0] * 8
  mu_theta[4] = 1
  mu_theta[5] = 1
  mu = d.labels_of(d.from_theta(mu_theta))
  mu = tuple(int(c) for c in mu)
  mult = ws.mult(mu)
  assert mult == E8_MU_MULT, mult
  lam = d.weight_coords(labels)
  muc = d.weight_coords(mu)
  cov = (_coverage(d, tuple(a - b for a, b in zip(lam, muc)), 2)
         + _coverage(d, tuple(a + b for a, b in zip(lam, muc)), 2))
  assert cov == 2, cov
  if mult > cov:
    return FilterVerdict(False, "e8_freudenthal",
                         {"mu": mu, "mult": mult, "coverage": cov})
  return FilterVerdict(True, "e8_freudenthal")


# --- sphere transitivity ----------------------------------------------------


def transitive_mult_one(d, labels, rt):
  """Combinatorial transitivity test for multiplicity-free modules."""
  ws = weight_system(d, labels)
  lam = tuple(labels)
  if any(ws.mult(w) != 1 for w in ws.weights):
    return None
  lamc = d.weight_coords(lam)
  for w in ws.weights:
    wc = d.weight_coords(w)
    if rt == REAL:
      if w == lam or w == tuple(-x for x in lam):
        continue
      if not (d.is_root(tuple(a - b for a, b in zip(lamc, wc)))
              or d.is_root(tuple(a + b for a, b in zip(lamc, wc)))):
        return False
    else:
      if w == lam:
        continue
      if not d.is_root(tuple(a - b for a, b in zip(lamc, wc))):
        return False
  return True


def sphere_transitive(d, b, labels, dim_cap=MODULE_DIM_CAP):
  """Transitivity on the unit sphere of the module (or its real form)."""
  rt = repr_type(d, b, labels)
  dim = weyl_dim(d, labels)
  if dim <= dim_cap:
    m = build_module(chevalley_basis(d), labels, dim_cap)
    if rt == REAL:
      ok, _ = check_condition(m, "c1")
      return ok
    return span_u(m, [m.highest_vector()], 1).is_full()
  res = transitive_mult_one(d, labels, rt)
  if res is None:
    raise DimCapExceededForTransitivity(dim)
  return res


class DimCapExceededForTransitivity(RuntimeError):
  pass


# --- the onefold scan -------------------------------------------------------

SCAN_TYPES = (["A%d" % n for n in range(1, 9)]
              + ["B%d" % n for n in range(3, 9)]
              + ["C%d" % n for n in range(2, 9)]
              + ["D%d" % n for n in range(4, 9)]
              + ["G2", "F4", "E6", "E7", "E8"])


@dataclass(frozen=True)
class ScanEntry:
  type: str
  labels: tuple
  k: int
  rtype: str


@dataclass(frozen=True)
class CTables:
  c_half: tuple
  c1: tuple
  c1half: tuple


def _k_candidates(d, b, k_max):
  """Dominant nonzero weights with additive degree at most k_max."""
  ks = [k_invariant(d, b, tuple(1 if j == i else 0 for j in range(d.rank))).k
        for i in range(d.rank)]
  assert all(k.denominator == 1 and k >= 1 for k in ks)
  ks = [int(k) for k in ks]
  out = []

  def rec(i, labels, tot):
    if i == d.rank:
      if tot > 0:
        out.append(tuple(labels))
      return
    m = 0
    while tot + m * ks[i] <= k_max:
      rec(i + 1, labels + [m], tot + m * ks[i])
      m += 1

  rec(0, [], 0)
  return out, ks


def coverage_obstruction(d, ws, labels, cond_levels):
  """Sound spanning refutation from word-count bounds; None if inconclusive."""
  la, lb = cond_levels
  lam = d.weight_coords(labels)
  low = tuple(-x for x in lam)
  for w in sorted(ws.weights):
    mult = ws.mult(w)
    wc = d.weight_coords(w)
    bound = (_coverage(d, tuple(a - b for a, b in zip(wc, lam)), la)
             + _coverage(d, tuple(a - b for a, b in zip(wc, low)), lb))
    if mult > bound:
      return w
  return None


_COND_LEVELS = {"chalf": (1, 0), "c1": (1, 1), "c1half": (2, 1), "c2": (2, 2)}


def _condition_holds(d, labels, cond, dim_cap):
  ws = weight_system(d, labels)
  wit = coverage_obstruction(d, ws, labels, _COND_LEVELS[cond])
  if wit is not None:
    return False
  dim = weyl_dim(d, labels)
  if dim > dim_cap:
    raise DimCapExceeded(dim, dim_cap)
  m = build_module(chevalley_basis(d), labels, dim_cap)
  ok, _ = check_condition(m, cond)
  return ok


def classify_C_tables(rank_cap=8, dim_cap=SCAN_DIM_CAP):
  """Scan the simple types for the three onefold condition lists.

  Candidates are dominant self-dual weights with additive degree at most
  three, deduplicated along diagram symmetries.  A half list, then the
  first-order list among the rest, then the 3/2 list among the degree-3
  quaternionic remainder.
  """
  c_half, c1, c1half = [], [], []
  for tname in SCAN_TYPES:
    d = build_root_datum(tname)
    if d.rank > rank_cap:
      continue
    b = build_sorth(d)
    cands, _ = _k_candidates(d, b, 3)
    seen = set()
    for labels in cands:
      _, _, self_dual = dominant_and_dual(d, labels)
      if not self_dual:
        continue
      canon = canonical_labels(d, labels)
      if canon in seen:
        continue
      seen.add(canon)
      kv = k_invariant(d, b, canon)
      rt = repr_type(d, b, canon)
      entry = ScanEntry(tname, canon, int(kv.k), rt)
      if _condition_holds(d, canon, "chalf", dim_cap):
        c_half.append(entry)
      elif _condition_holds(d, canon, "c1", dim_cap):
        c1.append(entry)
      elif rt == QUATERNIONIC and int(kv.k) == 3 and _condition_holds(d, canon, "c1half", dim_cap):
        c1half.append(entry)
  return CTables(tuple(c_half), tuple(c1), tuple(c1half))
