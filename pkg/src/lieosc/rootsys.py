"""Irreducible root systems over exact rationals.

Internal coordinates: roots and weights live in the simple-root basis as
tuples of Fraction ("root coords"); Dynkin labels (fundamental-weight
coordinates) are integer tuples.  Each datum also carries the ambient
"theta" realization used by the classical tables: A_n inside R^{n+1},
B_n/C_n/D_n inside R^n, F4 inside R^4, the E series inside R^8.  G2 has
no convenient orthogonal model, so its theta coordinates are simply the
simple-root coordinates together with the Gram matrix of the form.

Long roots are normalized to squared length 2 (for C_n the ambient form
is 1/2 times the Euclidean one to arrange this).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .linalg import ONE, ZERO, SpanBuilder, frac, mat_inv, solve, vec

FAMILIES = "ABCDEFG"

EXPECTED_POS_COUNT = {
  "A": lambda n: n * (n + 1) // 2,
  "B": lambda n: n * n,
  "C": lambda n: n * n,
  "D": lambda n: n * (n - 1),
  "G": lambda n: 6,
  "F": lambda n: 24,
  "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
}


@dataclass(frozen=True, order=True)
class LieType:
  family: str
  rank: int

  def __str__(self):
    return f"{self.family}{self.rank}"


def lie_type(family, rank):
  if family not in FAMILIES:
    raise ValueError(f"unknown family {family!r}")
  ok = {
    "A": rank >= 1, "B": rank >= 2, "C": rank >= 2, "D": rank >= 3,
    "E": rank in (6, 7, 8), "F": rank == 4, "G": rank == 2,
  }[family]
  if not ok:
    raise ValueError(f"rank {rank} not valid for family {family}")
  return LieType(family, rank)


def parse_type(s):
  s = s.strip()
  if not s or s[0].upper() not in FAMILIES or not s[1:].isdigit():
    raise ValueError(f"cannot parse Lie type {s!r}")
  return lie_type(s[0].upper(), int(s[1:]))


def _theta_simple_roots(t):
  """Simple roots as ambient theta vectors, plus the ambient Gram matrix."""
  f, n = t.family, t.rank
  half = Fraction(1, 2)

  def e(i, dim):
    return tuple(ONE if j == i else ZERO for j in range(dim))

  def diff(i, j, dim):
    return tuple((ONE if k == i else ZERO) - (ONE if k == j else ZERO) for k in range(dim))

  if f == "A":
    dim = n + 1
    simples = [diff(i, i + 1, dim) for i in range(n)]
    gram = _diag_gram(dim, ONE)
  elif f == "B":
    dim = n
    simples = [diff(i, i + 1, dim) for i in range(n - 1)] + [e(n - 1, dim)]
    gram = _diag_gram(dim, ONE)
  elif f == "C":
    dim = n
    simples = [diff(i, i + 1, dim) for i in range(n - 1)] + [vec([2 if j == n - 1 else 0 for j in range(dim)])]
    gram = _diag_gram(dim, half)  # long roots 2 theta_i then have norm 2
  elif f == "D":
    dim = n
    simples = [diff(i, i + 1, dim) for i in range(n - 1)]
    last = [ZERO] * dim
    last[n - 2] = ONE
    last[n - 1] = ONE
    simples.append(tuple(last))
    gram = _diag_gram(dim, ONE)
  elif f == "F":
    dim = 4
    simples = [
      diff(1, 2, dim),
      diff(2, 3, dim),
      e(3, dim),
      (half, -half, -half, -half),
    ]
    gram = _diag_gram(dim, ONE)
  elif f == "E":
    dim = 8
    a1 = (half, -half, -half, -half, -half, -half, -half, half)
    a2 = vec([1, 1, 0, 0, 0, 0, 0, 0])
    chain = [diff(i + 1, i, dim) for i in range(6)]  # theta_{i+2} - theta_{i+1}
    simples = [a1, a2] + chain[: n - 2]
    gram = _diag_gram(dim, ONE)
  else:  # G2: stay in simple-root coordinates
    dim = 2
    simples = [vec([1, 0]), vec([0, 1])]
    gram = ((Fraction(2, 3), Fraction(-1)), (Fraction(-1), Fraction(2)))
  return simples, gram


def _diag_gram(dim, c):
  return tuple(tuple(c if i == j else ZERO for j in range(dim)) for i in range(dim))


def _gram_dot(gram, u, v):
  total = ZERO
  for i, ui in enumerate(u):
    if ui:
      row = gram[i]
      total += ui * sum((row[j] * vj for j, vj in enumerate(v) if vj), ZERO)
  return total


def _close_positive(cartan, rank):
  """All positive roots in root coords, built level by level from the simples.

  For a root r at the current height and simple i, the alpha_i string
  through r has p - q = -<r, alpha_i^vee>; q is read off from the levels
  already built, which decides whether r + alpha_i is a root.
  """
  simples = [tuple(ONE if j == i else ZERO for j in range(rank)) for i in range(rank)]
  roots = set(simples)
  level = list(simples)
  out = list(simples)
  while level:
    nxt = []
    for r in level:
      for i in range(rank):
        pair = sum(r[j] * cartan[j][i] for j in range(rank))  # <r, alpha_i^vee>
        q = 0
        probe = tuple(a - b for a, b in zip(r, simples[i]))
        while probe in roots:
          q += 1
          probe = tuple(a - b for a, b in zip(probe, simples[i]))
        if q - pair > 0:
          cand = tuple(a + b for a, b in zip(r, simples[i]))
          if cand not in roots:
            roots.add(cand)
            nxt.append(cand)
            out.append(cand)
    level = nxt
  return out


class RootDatum:
  """Everything derivable from one simple-root realization.

  Attributes are to be treated as read-only.
  """

  def __init__(self, t):
    self.lie_type = t
    self.rank = t.rank
    self.flags = ("d3_isomorphic_a3",) if (t.family, t.rank) == ("D", 3) else ()
    theta_simples, gram = _theta_simple_roots(t)
    self.theta_simples = tuple(theta_simples)
    self.ambient_gram = gram
    self.ambient_dim = len(gram)
    n = t.rank
    form = tuple(
      tuple(_gram_dot(gram, theta_simples[i], theta_simples[j]) for j in range(n))
      for i in range(n)
    )
    cartan = tuple(
      tuple(2 * form[i][j] / form[j][j] for j in range(n)) for i in range(n)
    )
    assert all(x.denominator == 1 for row in cartan for x in row)
    self.form = form
    self.cartan = tuple(tuple(int(x) for x in row) for row in cartan)
    self.simple_roots = tuple(
      tuple(ONE if j == i else ZERO for j in range(n)) for i in range(n)
    )
    pos = _close_positive(self.cartan, n)
    expected = EXPECTED_POS_COUNT[t.family](n)
    assert len(pos) == expected, (t, len(pos), expected)
    self.positive_roots = tuple(tuple(frac(x) for x in r) for r in pos)
    self._pos_set = frozenset(self.positive_roots)
    self._root_set = self._pos_set | frozenset(tuple(-x for x in r) for r in self.positive_roots)
    cinv = mat_inv(tuple(tuple(frac(x) for x in row) for row in self.cartan))
    self.fundamental_weights = tuple(cinv[i] for i in range(n))  # row i of C^-1
    self.weyl_vector = (1,) * n  # Dynkin labels of rho
    norms = sorted({self.pairing(r, r) for r in self.positive_roots})
    self.long_norm = norms[-1]
    assert self.long_norm == 2
    dominant_long = [
      r for r in self.positive_roots
      if self.pairing(r, r) == self.long_norm and all(self.cartan_pairing(r, a) >= 0 for a in self.simple_roots)
    ]
    assert len(dominant_long) == 1
    self.highest_root = dominant_long[0]

  # --- pairings ---------------------------------------------------------

  def pairing(self, x, y):
    total = ZERO
    for i, xi in enumerate(x):
      if xi:
        row = self.form[i]
        total += xi * sum((row[j] * yj for j, yj in enumerate(y) if yj), ZERO)
    return total

  def cartan_pairing(self, x, alpha):
    """<x, alpha^vee> = 2 (x, alpha) / (alpha, alpha)."""
    return 2 * self.pairing(x, alpha) / self.pairing(alpha, alpha)

  def is_root(self, v):
    return tuple(v) in self._root_set

  def all_roots(self):
    return self._root_set

  def height(self, v):
    return sum(v)

  # --- coordinate changes ----------------------------------------------

  def labels_of(self, v):
    """Dynkin labels <v, alpha_i^vee> of a root-coords vector."""
    out = []
    for i in range(self.rank):
      out.append(sum(v[j] * self.cartan[j][i] for j in range(self.rank)))
    return tuple(out)

  def weight_coords(self, labels):
    """Root coords of a weight given by Dynkin labels."""
    n = self.rank
    out = [ZERO] * n
    for i, m in enumerate(labels):
      if m:
        fw = self.fundamental_weights[i]
        for j in range(n):
          out[j] += m * fw[j]
    return tuple(out)

  def to_theta(self, v):
    out = [ZERO] * self.ambient_dim
    for i, c in enumerate(v):
      if c:
        for j, x in enumerate(self.theta_simples[i]):
          out[j] += c * x
    return tuple(out)

  def from_theta(self, tv):
    tv = vec(tv)
    if len(tv) != self.ambient_dim:
      raise ValueError(f"expected {self.ambient_dim} theta coordinates")
    rows = tuple(zip(*self.theta_simples))  # ambient_dim x rank
    x = solve(rows, tv)
    if x is None and self.lie_type.family == "A":
      # A-family weights live in the quotient modulo (1,...,1)
      mean = sum(tv) / len(tv)
      x = solve(rows, tuple(c - mean for c in tv))
    if x is None:
      raise ValueError("vector is not in the span of the simple roots")
    return x


@lru_cache(maxsize=None)
def build_root_datum(t):
  if isinstance(t, str):
    t = parse_type(t)
  return RootDatum(t)


# --- dominance and duality ----------------------------------------------


def _to_dominant(d, labels):
  m = list(labels)
  n = d.rank
  while True:
    i = next((k for k in range(n) if m[k] < 0), None)
    if i is None:
      return tuple(m)
    c = m[i]
    for j in range(n):
      m[j] -= c * d.cartan[i][j]


def dominant_and_dual(d, labels):
  """Dominant orbit representative, dual weight, and a self-duality flag."""
  dom = _to_dominant(d, labels)
  dual = _to_dominant(d, tuple(-x for x in labels))
  return dom, dual, dom == dual


def lowest_weight_labels(d, labels):
  """Labels of s0(lambda) = -lambda^*, the lowest weight of the module."""
  _, dual, _ = dominant_and_dual(d, labels)
  return tuple(-x for x in dual)


# --- queries --------------------------------------------------------------


class RootQuery(NamedTuple):
  is_root: bool
  is_long: bool
  highest_root: tuple
  string: tuple  # (p, q) along the optional direction, else None


def root_string(d, mu, alpha):
  """(p, q) of the alpha-string mu + p alpha ... mu - q alpha inside Delta u {0}."""
  mu = tuple(mu)
  alpha = tuple(alpha)
  member = lambda v: d.is_root(v) or all(x == 0 for x in v)
  assert member(mu) and d.is_root(alpha)
  p = 0
  probe = tuple(a + b for a, b in zip(mu, alpha))
  while member(probe):
    p += 1
    probe = tuple(a + b for a, b in zip(probe, alpha))
  q = 0
  probe = tuple(a - b for a, b in zip(mu, alpha))
  while member(probe):
    q += 1
    probe = tuple(a - b for a, b in zip(probe, alpha))
  return p, q


def root_query(d, v, along=None):
  v = vec(v)
  s = root_string(d, v, along) if along is not None else None
  return RootQuery(
    is_root=d.is_root(v),
    is_long=d.pairing(v, v) == d.long_norm,
    highest_root=d.highest_root,
    string=s,
  )


def reflect(d, v, alpha):
  """s_alpha(v) in root coords."""
  c = d.cartan_pairing(v, alpha)
  return tuple(x - c * a for x, a in zip(v, alpha))


def rho_coords(d):
  return d.weight_coords(d.weyl_vector)


# --- diagram symmetries -----------------------------------------------------


def diagram_automorphisms(d):
  """All permutations s of simple indices with C[s(i)][s(j)] = C[i][j]."""
  n, cart = d.rank, d.cartan
  perms = []

  def extend(partial, used):
    i = len(partial)
    if i == n:
      perms.append(tuple(partial))
      return
    for j in range(n):
      if j in used:
        continue
      if any(cart[partial[a]][j] != cart[a][i] or cart[j][partial[a]] != cart[i][a]
             for a in range(i)):
        continue
      partial.append(j)
      used.add(j)
      extend(partial, used)
      partial.pop()
      used.discard(j)

  extend([], set())
  return perms


def is_theta_integral(d, labels):
  theta = d.to_theta(d.weight_coords(labels))
  return all(c.denominator == 1 for c in theta)


def canonical_labels(d, labels):
  """Representative of the diagram-symmetry orbit of a dominant weight.

  Integral orbit vectors are preferred, then the lex-largest label tuple;
  this keeps e.g. a vector representation ahead of its spinor partners.
  """
  labels = tuple(labels)
  best = None
  for perm in diagram_automorphisms(d):
    cand = [0] * d.rank
    for i, m in enumerate(labels):
      cand[perm[i]] = m
    cand = tuple(cand)
    key = (is_theta_integral(d, cand), cand)
    if best is None or key > best:
      best = key
  return best[1]
