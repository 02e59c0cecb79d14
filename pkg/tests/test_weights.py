"""Weight systems, dimensions, multiplicities, two-root decompositions."""

from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from lieosc.rootsys import build_root_datum
from lieosc.weights import (DimCapExceeded, decomposition_count, is_weight_of,
                            orbit_size, weight_system, weyl_dim, weyl_orbit,
                            zero_weight_mult)

_CACHE = {}


def _d(tname):
  if tname not in _CACHE:
    _CACHE[tname] = build_root_datum(tname)
  return _CACHE[tname]


def _unit(rank, i):
  return tuple(1 if j == i else 0 for j in range(rank))


# --- dimensions --------------------------------------------------------------

DIM_CHECKS = [
    ("G2", (1, 0), 7),
    ("F4", (0, 0, 0, 1), 26),
    ("E6", (1, 0, 0, 0, 0, 0), 27),
    ("E7", (0, 0, 0, 0, 0, 0, 1), 56),
    ("B3", (0, 0, 1), 8),
    ("B4", (0, 0, 0, 1), 16),
    ("A1", (2,), 3),
    ("A2", (1, 1), 8),
    ("C3", (0, 0, 1), 14),
    ("D5", (0, 0, 0, 0, 1), 16),
    ("E8", (1, 0, 0, 0, 0, 0, 0, 0), 3875),
    ("E8", (0, 0, 0, 0, 0, 0, 0, 1), 248),
]


@pytest.mark.parametrize("tname,labels,dim", DIM_CHECKS)
def test_weyl_dim_spot_checks(tname, labels, dim):
  assert weyl_dim(_d(tname), labels) == dim


def test_weyl_dim_trivial_and_adjoint():
  for tname, adj in [("A3", (1, 0, 1)), ("B3", (0, 1, 0)), ("C3", (2, 0, 0)),
                     ("D4", (0, 1, 0, 0)), ("G2", (0, 1)), ("F4", (1, 0, 0, 0))]:
    d = _d(tname)
    assert weyl_dim(d, (0,) * d.rank) == 1
    assert weyl_dim(d, adj) == len(d.all_roots()) + d.rank
    assert d.labels_of(d.highest_root) == adj


# --- zero-weight multiplicities ----------------------------------------------

def test_mult0_c_n_lambda2():
  for n in range(2, 9):
    d = _d("C%d" % n)
    assert zero_weight_mult(d, _unit(n, 1)) == n - 1


def test_mult0_third_exterior_power():
  # Lambda^3 of the odd orthogonal vector module
  for n in range(4, 9):
    d = _d("B%d" % n)
    assert zero_weight_mult(d, _unit(n, 2)) == n


def test_mult0_fourth_exterior_power():
  # Lambda^4: rank 4 realizes it as twice the spin label
  assert zero_weight_mult(_d("B4"), (0, 0, 0, 2)) == 6
  for n in range(5, 9):
    d = _d("B%d" % n)
    assert zero_weight_mult(d, _unit(n, 3)) == comb(n, 2)


def test_mult0_adjoint_is_rank():
  for tname in ["A4", "B3", "C4", "D5", "G2", "F4"]:
    d = _d(tname)
    assert zero_weight_mult(d, d.labels_of(d.highest_root)) == d.rank


def test_mult0_e8_3875():
  assert zero_weight_mult(_d("E8"), _unit(8, 0)) == 35


def test_mult0_e7_1539():
  assert zero_weight_mult(_d("E7"), _unit(7, 5)) == 27


# --- two-root decomposition counts -------------------------------------------

def _theta_vec(d, coeffs):
  v = [Fraction(0)] * d.ambient_dim
  for i, c in coeffs.items():
    v[i] = Fraction(c)
  return d.from_theta(v)


def test_ncount_c_n_two_plus_two():
  for n in range(2, 9):
    d = _d("C%d" % n)
    v = _theta_vec(d, {0: 2, 1: 2})
    assert decomposition_count(d, v)[0] == 2


def test_ncount_f4_twice_theta1():
  d = _d("F4")
  v = _theta_vec(d, {0: 2})
  n, wits = decomposition_count(d, v)
  assert n == 4
  assert all(w[0] == "pair" for w in wits)


def test_ncount_theta_sum_four():
  for fam in ("C", "D"):
    for n in range(4, 9):
      d = _d("%s%d" % (fam, n))
      v = _theta_vec(d, {0: 1, 1: 1, 2: 1, 3: 1})
      assert decomposition_count(d, v)[0] == 3


def test_ncount_e7_interior_case():
  # the 1539-dim module: the orbit weight theta8-theta7+theta6+theta5 splits
  # into one integer pair plus four half-sum pairs, five in total; the value 17
  # is the count for the highest root theta8-theta7 itself, not for this weight
  d = _d("E7")
  v = _theta_vec(d, {7: 1, 6: -1, 5: 1, 4: 1})
  n, wits = decomposition_count(d, v)
  assert n == 5
  kinds = sorted(w[0] for w in wits)
  assert kinds == ["pair"] * 5
  def integral(alpha):
    return all(x.denominator == 1 for x in d.to_theta(alpha))
  integer_pairs = [w for w in wits if integral(w[1]) and integral(w[2])]
  assert len(integer_pairs) == 1
  assert zero_weight_mult(d, _unit(7, 5)) == 27  # 27 > 5: the bound still cuts
  assert decomposition_count(d, d.highest_root)[0] == 17


def test_ncount_e8_extreme_weights():
  d = _d("E8")
  lam = d.weight_coords(_unit(8, 0))
  mu = _theta_vec(d, {4: 1, 5: 1})
  for v in (tuple(a - b for a, b in zip(lam, mu)),
            tuple(a + b for a, b in zip(lam, mu))):
    n, wits = decomposition_count(d, v)
    assert n == 1
    assert len(wits) == 1


def test_ncount_single_root():
  d = _d("G2")
  for alpha in d.positive_roots:
    n, wits = decomposition_count(d, alpha)
    assert any(w[0] == "root" and w[1] == alpha for w in wits)
    assert n >= 1


def test_ncount_witness_sums():
  d = _d("F4")
  v = _theta_vec(d, {0: 2})
  _, wits = decomposition_count(d, v)
  for w in wits:
    if w[0] == "pair":
      assert tuple(a + b for a, b in zip(w[1], w[2])) == v
      assert d.is_root(w[1]) and d.is_root(w[2])
    else:
      assert w[1] == v


# --- weight system consistency -----------------------------------------------

ORBIT_CHECK_REPS = [
    ("A3", (1, 0, 1)), ("B3", (0, 0, 1)), ("B4", (1, 0, 0, 1)),
    ("C3", (0, 0, 1)), ("C4", (0, 1, 0, 0)), ("D4", (0, 0, 1, 0)),
    ("G2", (0, 1)), ("F4", (0, 0, 0, 1)), ("A5", (0, 0, 1, 0, 0)),
    ("B5", (0, 0, 0, 0, 1)),
]


@pytest.mark.parametrize("tname,labels", ORBIT_CHECK_REPS)
def test_orbit_sizes_account_for_dimension(tname, labels):
  d = _d(tname)
  ws = weight_system(d, labels)
  total = sum(orbit_size(d, mu) * m for mu, m in ws.dominant_mults.items())
  assert total == ws.dim == weyl_dim(d, labels)


@pytest.mark.parametrize("tname,labels", ORBIT_CHECK_REPS)
def test_mult_constant_on_orbits(tname, labels):
  d = _d(tname)
  ws = weight_system(d, labels)
  for mu, m in ws.dominant_mults.items():
    orb = weyl_orbit(d, mu)
    assert len(orb) == orbit_size(d, mu)
    assert all(ws.mult(w) == m for w in orb)


def test_orbit_of_zero():
  d = _d("D4")
  assert weyl_orbit(d, (0, 0, 0, 0)) == {(0, 0, 0, 0)}
  assert orbit_size(d, (0, 0, 0, 0)) == 1


def test_highest_weight_mult_one():
  for tname, labels in ORBIT_CHECK_REPS:
    ws = weight_system(_d(tname), labels)
    assert ws.mult(labels) == 1
    assert ws.highest == tuple(labels)


def test_is_weight_of():
  d = _d("B3")
  assert is_weight_of(d, (0, 0, 1), (0, 0, 1))
  assert is_weight_of(d, (0, 0, 1), (0, 0, -1))
  assert not is_weight_of(d, (0, 0, 1), (1, 0, 0))
  assert not is_weight_of(d, (1, 0, 0), (0, 0, 1))  # not even in the lattice


def test_dim_cap_exceeded():
  d = _d("E8")
  with pytest.raises(DimCapExceeded):
    weight_system(d, (1, 0, 0, 0, 0, 0, 0, 0), dim_cap=100)
  try:
    weight_system(d, (1, 0, 0, 0, 0, 0, 0, 0), dim_cap=100)
  except DimCapExceeded as exc:
    assert exc.dim == 3875 and exc.cap == 100


# --- randomized properties ---------------------------------------------------

_PROP_TYPES = ["A2", "A3", "B2", "B3", "C3", "D4", "G2"]


@settings(derandomize=True, deadline=None, max_examples=30)
@given(st.data())
def test_random_rep_orbit_identity(data):
  tname = data.draw(st.sampled_from(_PROP_TYPES))
  d = _d(tname)
  labels = tuple(data.draw(st.lists(st.integers(0, 2), min_size=d.rank,
                                    max_size=d.rank)))
  if weyl_dim(d, labels) > 3000:
    return
  ws = weight_system(d, labels)
  total = sum(orbit_size(d, mu) * m for mu, m in ws.dominant_mults.items())
  assert total == ws.dim


@settings(derandomize=True, deadline=None, max_examples=30)
@given(st.data())
def test_random_weight_symmetry(data):
  # the weight set of a module is stable under negation exactly when the
  # highest weight is self-dual; multiplicities transfer either way
  tname = data.draw(st.sampled_from(_PROP_TYPES))
  d = _d(tname)
  labels = tuple(data.draw(st.lists(st.integers(0, 2), min_size=d.rank,
                                    max_size=d.rank)))
  if weyl_dim(d, labels) > 3000:
    return
  from lieosc.rootsys import dominant_and_dual
  _, dual, self_dual = dominant_and_dual(d, labels)
  ws = weight_system(d, labels)
  wsd = weight_system(d, dual)
  for mu, m in ws.dominant_mults.items():
    neg = tuple(-x for x in mu)
    assert wsd.mult(neg) == m
    if self_dual:
      assert ws.mult(neg) == m
