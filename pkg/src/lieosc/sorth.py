"""Strongly orthogonal root sets B = {beta_1, ..., beta_s}.

The construction walks down the root system: take the highest root of
the current subsystem, pass to its orthogonal complement, repeat.  When
the complement splits into several pieces the order in which rank-one
pieces are emitted matters for reproducing the reference tables, so the
cascade below fixes it:

  * one irreducible piece: its unique dominant long root;
  * exactly two pieces, exactly one of rank one: that +-zeta first;
  * two or more pieces, all of rank one: prefer the root whose theta
    support sits inside the support of the previous beta, then a root
    with all theta coordinates nonnegative (sum before difference),
    breaking remaining ties by theta-lex order;
  * anything else raises StructuralSurpriseError rather than guessing.
"""

from dataclasses import dataclass

from .linalg import SpanBuilder, vec
from .rootsys import reflect, rho_coords


class StructuralSurpriseError(RuntimeError):
  """An orthogonal complement split in a shape the cascade does not cover."""


@dataclass(frozen=True)
class StronglyOrthogonalSet:
  betas: tuple          # root coords, in emission order
  provenance: tuple     # (tag, depth) per beta, tag in {highest_root, zeta}


@dataclass(frozen=True)
class SorthReport:
  valid: bool
  strongly_orthogonal: bool
  pairwise: tuple         # pairwise strong-orthogonality matrix
  chamber_reversed: bool  # product of reflections sends rho to -rho
  fw_in_span: tuple       # per fundamental weight, membership in span(B)


def _components(d, pos):
  comps = []
  remaining = list(pos)
  while remaining:
    seed = remaining.pop(0)
    comp = [seed]
    changed = True
    while changed:
      changed = False
      for r in list(remaining):
        if any(d.pairing(r, c) != 0 for c in comp):
          comp.append(r)
          remaining.remove(r)
          changed = True
    comps.append(comp)
  return comps


def _highest_of(d, comp_pos):
  """Unique dominant long root of a subsystem given its positive part."""
  pos_set = set(comp_pos)
  sums = {tuple(a + b for a, b in zip(x, y)) for x in comp_pos for y in comp_pos}
  simples = [r for r in comp_pos if r not in sums]
  dominant = [r for r in comp_pos if all(d.pairing(r, s) >= 0 for s in simples)]
  top = max(d.pairing(r, r) for r in dominant)
  longs = [r for r in dominant if d.pairing(r, r) == top]
  assert len(longs) == 1, (comp_pos, longs)
  return longs[0]


def _theta_support(d, v):
  return frozenset(i for i, x in enumerate(d.to_theta(v)) if x != 0)


def _pick_zeta(d, candidates, prev_beta):
  if prev_beta is not None:
    prev_sup = _theta_support(d, prev_beta)
    sub = [z for z in candidates if _theta_support(d, z) <= prev_sup]
    if sub:
      candidates = sub
  nonneg = [z for z in candidates if all(x >= 0 for x in d.to_theta(z))]
  if nonneg:
    candidates = nonneg
  return max(candidates, key=lambda z: d.to_theta(z))


def _descend(d, sigma, prev_beta, depth, betas, prov):
  if not sigma:
    return
  pos = [r for r in d.positive_roots if r in sigma]
  comps = _components(d, pos)
  singles = [c for c in comps if len(c) == 1]
  if len(comps) == 1:
    beta, tag = _highest_of(d, comps[0]), "highest_root"
  elif len(comps) == 2 and len(singles) == 1:
    beta, tag = singles[0][0], "zeta"
  elif len(singles) == len(comps):
    beta, tag = _pick_zeta(d, [c[0] for c in singles], prev_beta), "zeta"
  else:
    shape = sorted(len(c) for c in comps)
    raise StructuralSurpriseError(
      f"{d.lie_type}: complement split into positive-part sizes {shape}")
  betas.append(beta)
  prov.append((tag, depth))
  nxt = frozenset(r for r in sigma if d.pairing(r, beta) == 0)
  _descend(d, nxt, beta, depth + 1, betas, prov)


def build_sorth(d):
  betas, prov = [], []
  _descend(d, frozenset(d.all_roots()), None, 0, betas, prov)
  return StronglyOrthogonalSet(tuple(betas), tuple(prov))


def verify_sorth(d, b):
  betas = b.betas
  s = len(betas)
  pairwise = []
  strong = True
  for i in range(s):
    row = []
    for j in range(s):
      if i == j:
        row.append(True)
        continue
      plus = tuple(x + y for x, y in zip(betas[i], betas[j]))
      minus = tuple(x - y for x, y in zip(betas[i], betas[j]))
      ok = d.pairing(betas[i], betas[j]) == 0 and not d.is_root(plus) and not d.is_root(minus)
      strong &= ok
      row.append(ok)
    pairwise.append(tuple(row))
  v = rho_coords(d)
  for beta in betas:
    v = reflect(d, v, beta)
  chamber = all(x == -y for x, y in zip(v, rho_coords(d)))
  span = SpanBuilder(d.rank)
  span.add_all(vec(beta) for beta in betas)
  fw_in = tuple(span.contains(fw) for fw in d.fundamental_weights)
  ok = strong and chamber and all(d.is_root(beta) for beta in betas)
  return SorthReport(ok, strong, tuple(pairwise), chamber, fw_in)


def in_span(d, b, v):
  span = SpanBuilder(d.rank)
  span.add_all(vec(beta) for beta in b.betas)
  return span.contains(vec(v))
