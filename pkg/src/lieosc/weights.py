"""Weight systems, multiplicities, and decomposition counts.

Weights are handled as Dynkin label tuples; <w, alpha_i^vee> is then just
w[i], which keeps the saturated-set walk and the recursive multiplicity
formula free of conversions.  Multiplicities are stored on dominant
representatives only; orbit sizes come from the stabilizer parabolic.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootsys import _to_dominant, build_root_datum, rho_coords

WEIGHT_COUNT_CAP = 200_000


class DimCapExceeded(RuntimeError):
  def __init__(self, dim, cap):
    super().__init__(f"representation dimension {dim} exceeds cap {cap}")
    self.dim = dim
    self.cap = cap


def weyl_dim(d, labels):
  rho = rho_coords(d)
  lam = d.weight_coords(labels)
  num = den = Fraction(1)
  for a in d.positive_roots:
    num *= d.pairing(tuple(x + y for x, y in zip(lam, rho)), a)
    den *= d.pairing(rho, a)
  dim = num / den
  assert dim.denominator == 1
  return int(dim)


def _alpha_labels(d, i):
  return tuple(d.cartan[i])


def _all_weights(d, labels, cap):
  """Every weight of the module, walked down simple-root strings.

  w - alpha_i is a weight iff the alpha_i string through w extends
  below w, i.e. q = p + <w, alpha_i^vee> >= 1 with p counted upward
  through levels already known.
  """
  alphas = [_alpha_labels(d, i) for i in range(d.rank)]
  known = {tuple(labels)}
  level = [tuple(labels)]
  while level:
    nxt = []
    for w in level:
      for i in range(d.rank):
        p = 0
        probe = tuple(a + b for a, b in zip(w, alphas[i]))
        while probe in known:
          p += 1
          probe = tuple(a + b for a, b in zip(probe, alphas[i]))
        if p + w[i] >= 1:
          down = tuple(a - b for a, b in zip(w, alphas[i]))
          if down not in known:
            known.add(down)
            nxt.append(down)
            if len(known) > cap:
              raise DimCapExceeded(len(known), cap)
    level = nxt
  return known


# --- Weyl group orders ------------------------------------------------------

_W_ORDER_E = {6: 51840, 7: 2903040, 8: 696729600}


def _factorial(n):
  out = 1
  for k in range(2, n + 1):
    out *= k
  return out


def _component_weyl_order(cartan, nodes):
  """|W| of the subsystem on one connected set of Dynkin nodes."""
  n = len(nodes)
  if n == 1:
    return 2
  deg = {}
  mult = {}
  for a in nodes:
    nb = [b for b in nodes if b != a and cartan[a][b] != 0]
    deg[a] = len(nb)
    for b in nb:
      mult[(a, b)] = cartan[a][b] * cartan[b][a]
  mx = max(mult.values())
  if mx == 3:
    return 12  # G2
  if mx == 2:
    # F4 iff the double edge sits between two interior nodes
    if n == 4:
      inner = [e for e, m in mult.items() if m == 2 and deg[e[0]] == 2 and deg[e[1]] == 2]
      if inner:
        return 1152
    return _factorial(n) * 2 ** n  # B or C, same order
  forks = [a for a in nodes if deg[a] == 3]
  if not forks:
    return _factorial(n + 1)  # A
  assert len(forks) == 1
  # branch lengths at the fork distinguish D from E
  fork = forks[0]
  lens = []
  for b in [x for x in nodes if cartan[fork][x] != 0 and x != fork]:
    ln, prev, cur = 1, fork, b
    while True:
      nb = [x for x in nodes if x not in (prev, cur) and cartan[cur][x] != 0]
      if not nb:
        break
      prev, cur = cur, nb[0]
      ln += 1
    lens.append(ln)
  lens.sort()
  if lens[:2] == [1, 1]:
    return _factorial(n) * 2 ** (n - 1)  # D
  return _W_ORDER_E[n]


def weyl_order(d, zero_nodes=None):
  nodes = list(range(d.rank)) if zero_nodes is None else list(zero_nodes)
  if not nodes:
    return 1
  seen = set()
  order = 1
  for a in nodes:
    if a in seen:
      continue
    comp = [a]
    seen.add(a)
    queue = [a]
    while queue:
      x = queue.pop()
      for b in nodes:
        if b not in seen and d.cartan[x][b] != 0:
          seen.add(b)
          comp.append(b)
          queue.append(b)
    order *= _component_weyl_order(d.cartan, comp)
  return order


def orbit_size(d, dom_labels):
  """|W . mu| for dominant mu via the stabilizer parabolic."""
  zero = [i for i, m in enumerate(dom_labels) if m == 0]
  return weyl_order(d) // weyl_order(d, zero)


def weyl_orbit(d, dom_labels):
  """All weights in the orbit of a dominant weight, as label tuples."""
  seen = {tuple(dom_labels)}
  queue = [tuple(dom_labels)]
  while queue:
    w = queue.pop()
    for i in range(d.rank):
      if w[i] > 0:
        s = tuple(w[j] - w[i] * d.cartan[i][j] for j in range(d.rank))
        if s not in seen:
          seen.add(s)
          queue.append(s)
  assert len(seen) == orbit_size(d, dom_labels)
  return seen


# --- weight systems ---------------------------------------------------------


@dataclass(frozen=True)
class WeightSystem:
  datum: object
  highest: tuple
  dim: int
  dominant_mults: dict   # dominant labels -> multiplicity
  weights: frozenset     # all weights, label tuples

  def mult(self, labels):
    dom = _to_dominant(self.datum, tuple(labels))
    return self.dominant_mults.get(dom, 0)

  def is_weight(self, labels):
    return tuple(labels) in self.weights


def _freudenthal(d, labels, weights):
  """Multiplicities on dominant weights, highest first by depth."""
  lam = d.weight_coords(labels)
  rho = rho_coords(d)
  lam_rho = tuple(x + y for x, y in zip(lam, rho))
  norm_top = d.pairing(lam_rho, lam_rho)
  dominant = [w for w in weights if all(x >= 0 for x in w)]
  depth = {}
  for w in dominant:
    diff = tuple(a - b for a, b in zip(labels, w))
    coords = d.weight_coords(diff)
    h = sum(coords)
    assert h.denominator == 1
    depth[w] = int(h)
  dominant.sort(key=lambda w: depth[w])
  mults = {}
  pos_labels = [d.labels_of(a) for a in d.positive_roots]
  pos_coords = list(d.positive_roots)
  for w in dominant:
    if depth[w] == 0:
      mults[w] = 1
      continue
    nu = d.weight_coords(w)
    nu_rho = tuple(x + y for x, y in zip(nu, rho))
    c = norm_top - d.pairing(nu_rho, nu_rho)
    assert c != 0
    total = Fraction(0)
    for alab, acoy in zip(pos_labels, pos_coords):
      k = 1
      probe = tuple(a + k * b for a, b in zip(w, alab))
      while probe in weights:
        dom = _to_dominant(d, probe)
        m = mults.get(dom)
        assert m is not None, "multiplicity needed before it was computed"
        shifted = tuple(x + k * y for x, y in zip(nu, acoy))
        total += m * d.pairing(shifted, acoy)
        k += 1
        probe = tuple(a + k * b for a, b in zip(w, alab))
    m = 2 * total / c
    assert m.denominator == 1 and m > 0
    mults[w] = int(m)
  return mults


@lru_cache(maxsize=512)
def _weight_system_cached(tname, labels, dim_cap):
  d = build_root_datum(tname)
  dim = weyl_dim(d, labels)
  if dim > dim_cap:
    raise DimCapExceeded(dim, dim_cap)
  weights = _all_weights(d, labels, WEIGHT_COUNT_CAP)
  mults = _freudenthal(d, labels, weights)
  total = sum(orbit_size(d, w) * m for w, m in mults.items())
  assert total == dim, (tname, labels, total, dim)
  return WeightSystem(d, tuple(labels), dim, mults, frozenset(weights))


def weight_system(d, labels, dim_cap=200_000):
  return _weight_system_cached(str(d.lie_type), tuple(int(x) for x in labels), dim_cap)


def is_weight_of(d, labels, mu_labels):
  """Weight test without enumerating: dominant mu <= lambda in the root cone."""
  dom = _to_dominant(d, tuple(mu_labels))
  diff = tuple(a - b for a, b in zip(labels, dom))
  coords = d.weight_coords(diff)
  return all(c.denominator == 1 and c >= 0 for c in coords)


def zero_weight_mult(d, labels):
  zero = (0,) * d.rank
  if not is_weight_of(d, labels, zero):
    return 0
  return weight_system(d, labels).mult(zero)


# --- decomposition counts --------------------------------------------------


def decomposition_count(d, v):
  """N(v): is v a root, plus unordered root pairs summing to v.

  v must lie in the root lattice (integer root coords).  The pair
  alpha = beta is allowed once, when v = 2 alpha.
  """
  v = tuple(v)
  assert all(Fraction(x).denominator == 1 for x in v)
  witnesses = []
  n = 0
  if d.is_root(v):
    n += 1
    witnesses.append(("root", v))
  half = tuple(Fraction(x, 2) for x in v)
  seen = set()
  for a in d.all_roots():
    b = tuple(x - y for x, y in zip(v, a))
    if d.is_root(b) and a != b:
      key = tuple(sorted([a, b]))
      if key not in seen:
        seen.add(key)
        witnesses.append(("pair", key[0], key[1]))
        n += 1
  if d.is_root(half):
    n += 1
    witnesses.append(("pair", half, half))
  return n, witnesses
