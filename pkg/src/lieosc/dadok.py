"""The copolarity-style invariant k(lambda) and representation types.

k(lambda) = sum_i ((lambda, beta_i) - (s0 lambda, beta_i)) / (beta_i, beta_i)
over the strongly orthogonal set B, where s0 lambda = -lambda^* is the
lowest weight.  For self-dual lambda this is sum_i <lambda, beta_i^vee>,
hence a nonnegative integer on dominant weights; it is returned as an
exact rational in general because linearity arguments use it off the
span of B as well.
"""

from dataclasses import dataclass
from fractions import Fraction

from .linalg import SpanBuilder, vec
from .rootsys import dominant_and_dual

REAL = "real"
QUATERNIONIC = "quaternionic"
COMPLEX = "complex"


@dataclass(frozen=True)
class KValue:
  k: Fraction
  n_parts: tuple
  in_span_B: bool


def k_invariant(d, b, labels):
  lam = d.weight_coords(labels)
  low = d.weight_coords(tuple(-x for x in dominant_and_dual(d, labels)[1]))
  parts = []
  for beta in b.betas:
    bb = d.pairing(beta, beta)
    parts.append((d.pairing(lam, beta) - d.pairing(low, beta)) / bb)
  span = SpanBuilder(d.rank)
  span.add_all(vec(beta) for beta in b.betas)
  in_span = span.contains(lam)
  kv = KValue(sum(parts, Fraction(0)), tuple(parts), in_span)
  if in_span:
    assert kv.k.denominator == 1 and all(p.denominator == 1 for p in parts)
    if all(m >= 0 for m in labels):
      assert all(p >= 0 for p in parts) and (kv.k > 0 or not any(labels))
  return kv


def repr_type(d, b, labels):
  """Real, quaternionic or complex, cross-checked two ways.

  lambda lies in span(B) iff lambda is self-dual; disagreement between
  the two routes would mean a broken B and must never happen.
  """
  kv = k_invariant(d, b, labels)
  _, _, self_dual = dominant_and_dual(d, labels)
  if kv.in_span_B != self_dual:
    raise AssertionError(
      f"span membership {kv.in_span_B} disagrees with self-duality {self_dual}")
  if not self_dual:
    return COMPLEX
  return REAL if kv.k % 2 == 0 else QUATERNIONIC
