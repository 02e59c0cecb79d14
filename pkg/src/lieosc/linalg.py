"""Exact linear algebra over the rationals.

Vectors are tuples of Fraction, matrices are tuples of row tuples.
There is deliberately no floating point here: span ranks feed
classification verdicts, so everything has to be exact.
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x):
  return x if isinstance(x, Fraction) else Fraction(x)


def vec(xs):
  return tuple(frac(x) for x in xs)


def vadd(u, v):
  return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u, v):
  return tuple(a - b for a, b in zip(u, v, strict=True))


def vneg(u):
  return tuple(-a for a in u)


def vscale(c, u):
  c = frac(c)
  return tuple(c * a for a in u)


def is_zero(u):
  return all(a == 0 for a in u)


def dot(u, v):
  return sum((a * b for a, b in zip(u, v, strict=True)), ZERO)


class SpanBuilder:
  """Incremental reduced row echelon span over Q.

  add() reduces the vector against the current rows and keeps it when a
  new pivot appears; contains() is a pure reduction test.
  """

  def __init__(self, dim):
    self.dim = dim
    self.rows = []    # normalized rows, zero left of pivot, pivot 1
    self.pivots = []  # pivot column per row, strictly increasing

  @property
  def rank(self):
    return len(self.rows)

  def is_full(self):
    return len(self.rows) == self.dim

  def residual(self, v):
    v = list(v)
    for row, p in zip(self.rows, self.pivots):
      c = v[p]
      if c:
        for j in range(p, self.dim):
          if row[j]:
            v[j] -= c * row[j]
    return v

  def contains(self, v):
    return not any(self.residual(v))

  def add(self, v):
    r = self.residual(v)
    p = next((j for j in range(self.dim) if r[j]), None)
    if p is None:
      return False
    inv = ONE / r[p]
    new = tuple(x * inv for x in r)
    # back-substitution keeps entries small across many adds
    for i, row in enumerate(self.rows):
      c = row[p]
      if c:
        self.rows[i] = tuple(a - c * b for a, b in zip(row, new))
    k = 0
    while k < len(self.pivots) and self.pivots[k] < p:
      k += 1
    self.rows.insert(k, new)
    self.pivots.insert(k, p)
    return True

  def add_all(self, vs):
    for v in vs:
      self.add(v)
    return self


def rank_of(rows, dim):
  sb = SpanBuilder(dim)
  sb.add_all(rows)
  return sb.rank


def identity_mat(n):
  return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def mat_vec(m, v):
  return tuple(dot(row, v) for row in m)


def mat_mul(a, b):
  bt = tuple(zip(*b))
  return tuple(tuple(dot(row, col) for col in bt) for row in a)


def transpose(m):
  return tuple(zip(*m))


def mat_inv(m):
  n = len(m)
  aug = [list(row) + list(identity_mat(n)[i]) for i, row in enumerate(m)]
  for col in range(n):
    piv = next((r for r in range(col, n) if aug[r][col]), None)
    if piv is None:
      raise ValueError("singular matrix")
    aug[col], aug[piv] = aug[piv], aug[col]
    inv = ONE / aug[col][col]
    aug[col] = [x * inv for x in aug[col]]
    for r in range(n):
      if r != col and aug[r][col]:
        c = aug[r][col]
        aug[r] = [x - c * y for x, y in zip(aug[r], aug[col])]
  return tuple(tuple(row[n:]) for row in aug)


def solve(rows, rhs):
  """One exact solution x of (rows) x = rhs, or None when inconsistent.

  Free variables are set to zero.
  """
  nr = len(rows)
  nc = len(rows[0]) if nr else 0
  aug = [list(r) + [b] for r, b in zip(rows, rhs, strict=True)]
  piv_cols = []
  rr = 0
  for col in range(nc):
    piv = next((r for r in range(rr, nr) if aug[r][col]), None)
    if piv is None:
      continue
    aug[rr], aug[piv] = aug[piv], aug[rr]
    inv = ONE / aug[rr][col]
    aug[rr] = [x * inv for x in aug[rr]]
    for r in range(nr):
      if r != rr and aug[r][col]:
        c = aug[r][col]
        aug[r] = [x - c * y for x, y in zip(aug[r], aug[rr])]
    piv_cols.append(col)
    rr += 1
    if rr == nr:
      break
  for r in range(rr, nr):
    if aug[r][nc]:
      return None
  x = [ZERO] * nc
  for r, col in enumerate(piv_cols):
    x[col] = aug[r][nc]
  return tuple(x)


def solve_columns(cols, target):
  """Coefficients c with sum c_i cols[i] = target, or None."""
  if not cols:
    return None if any(target) else ()
  rows = tuple(zip(*cols))
  return solve(rows, target)


def nullspace(rows, nc):
  """Basis of {x : (rows) x = 0}, free-variable convention."""
  nr = len(rows)
  m = [list(r) for r in rows]
  piv_cols = []
  rr = 0
  for col in range(nc):
    piv = next((r for r in range(rr, nr) if m[r][col]), None)
    if piv is None:
      continue
    m[rr], m[piv] = m[piv], m[rr]
    inv = ONE / m[rr][col]
    m[rr] = [x * inv for x in m[rr]]
    for r in range(nr):
      if r != rr and m[r][col]:
        c = m[r][col]
        m[r] = [x - c * y for x, y in zip(m[r], m[rr])]
    piv_cols.append(col)
    rr += 1
  basis = []
  pivset = set(piv_cols)
  for free in range(nc):
    if free in pivset:
      continue
    v = [ZERO] * nc
    v[free] = ONE
    for r, col in enumerate(piv_cols):
      v[col] = -m[r][free]
    basis.append(tuple(v))
  return basis
