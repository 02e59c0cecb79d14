from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lieosc.osc import SCAN_TYPES
from lieosc.rootsys import canonical_labels, dominant_and_dual
from lieosc.weights import weyl_order

ROOT_COUNTS = {"A": lambda n: n * (n + 1), "B": lambda n: 2 * n * n,
               "C": lambda n: 2 * n * n, "D": lambda n: 2 * n * (n - 1),
               "G": lambda n: 12, "F": lambda n: 48,
               "E": lambda n: {6: 72, 7: 126, 8: 240}[n]}


@pytest.mark.parametrize("tname", SCAN_TYPES)
def test_root_counts(datum, tname):
  d = datum(tname)
  fam, n = tname[0], int(tname[1:])
  assert len(d.positive_roots) * 2 == ROOT_COUNTS[fam](n)
  assert len(d.all_roots()) == 2 * len(d.positive_roots)


@pytest.mark.parametrize("tname", SCAN_TYPES)
def test_positive_roots_sum_to_twice_weyl_vector(datum, tname):
  # sum of positive roots = 2 rho
  d = datum(tname)
  total = [Fraction(0)] * d.rank
  for a in d.positive_roots:
    total = [x + y for x, y in zip(total, a)]
  assert tuple(total) == tuple(2 * x for x in d.weight_coords(d.weyl_vector))


@pytest.mark.parametrize("tname", SCAN_TYPES)
def test_cartan_pairings_integral(datum, tname):
  d = datum(tname)
  for a in d.positive_roots:
    labels = d.labels_of(a)
    assert all(Fraction(x).denominator == 1 for x in labels)


@pytest.mark.parametrize("tname", SCAN_TYPES)
def test_theta_round_trip(datum, tname):
  d = datum(tname)
  for a in list(d.simple_roots) + [d.highest_root]:
    assert d.from_theta(d.to_theta(a)) == tuple(a)


@pytest.mark.parametrize("tname", SCAN_TYPES)
def test_highest_root_dominates(datum, tname):
  d = datum(tname)
  labels = d.labels_of(d.highest_root)
  assert all(x >= 0 for x in labels)


def test_root_reflection_closure(datum):
  # s_beta(alpha) stays a root, checked on a midsize exceptional system
  d = datum("F4")
  roots = sorted(d.all_roots())

  def pairing(a, b):
    bt = d.to_theta(b)
    at = d.to_theta(a)
    nb = sum(x * x for x in bt)
    return 2 * sum(x * y for x, y in zip(at, bt)) / nb

  for a in roots[:12]:
    for b in roots:
      c = pairing(a, b)
      img = tuple(x - c * y for x, y in zip(a, b))
      assert d.is_root(img)


_CACHE = {}


def _datum(tname):
  from lieosc import build_root_datum
  if tname not in _CACHE:
    _CACHE[tname] = build_root_datum(tname)
  return _CACHE[tname]


@settings(derandomize=True, max_examples=40, deadline=None)
@given(st.sampled_from(["A3", "B3", "C3", "D4", "G2"]),
       st.lists(st.integers(-4, 4), min_size=2, max_size=4))
def test_dominant_and_dual_invariants(tname, raw):
  d = _datum(tname)
  labels = tuple((raw * d.rank)[:d.rank])
  dom, dual, self_dual = dominant_and_dual(d, labels)
  assert all(x >= 0 for x in dom)
  assert self_dual == (tuple(dom) == tuple(dual))
  # dominant representative has the same Weyl orbit, so same dual twice
  assert dominant_and_dual(d, dom)[0] == tuple(dom)
  assert dominant_and_dual(d, dual)[1] == tuple(dom)


def test_canonical_labels_idempotent(datum):
  for tname, labels in (("D4", (1, 0, 0, 0)), ("D4", (0, 0, 1, 0)),
                        ("D4", (0, 0, 0, 1)), ("A3", (1, 0, 0)),
                        ("E6", (1, 0, 0, 0, 0, 0))):
    d = datum(tname)
    c = canonical_labels(d, labels)
    assert canonical_labels(d, c) == c


def test_canonical_labels_d4_orbits(datum):
  # vector and both half-spin reps share one class; the adjoint is alone
  d = datum("D4")
  tri = {canonical_labels(d, (1, 0, 0, 0)), canonical_labels(d, (0, 0, 1, 0)),
         canonical_labels(d, (0, 0, 0, 1))}
  assert len(tri) == 1
  assert canonical_labels(d, (0, 1, 0, 0)) == (0, 1, 0, 0)


def test_weyl_order_values(datum):
  assert weyl_order(datum("A3")) == 24
  assert weyl_order(datum("B3")) == 48
  assert weyl_order(datum("D4")) == 192
  assert weyl_order(datum("G2")) == 12
  assert weyl_order(datum("F4")) == 1152
