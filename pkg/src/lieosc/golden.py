"""Loaders for the bundled reference tables.

The JSON files under data/ hold the reference content the package is
checked against: orthogonal root sets, degree tables, the condition
lists, the degree-4 candidate table, composite tables, sphere rows,
exclusion data and the hermitian boundary cases.  Numbers appear as
strings ("3/2") so nothing is ever read back through floats.
"""

import json
import os
from fractions import Fraction

ENV_VAR = "LIEOSC_DATA_DIR"

FILES = (
  "sorth_appendix_a.json",
  "k_table_appendix_b.json",
  "c_half_classif.json",
  "c1_classif.json",
  "c1half_classif.json",
  "bms_spheres.json",
  "lemma_k4.json",
  "prop_simple_survivors.json",
  "appendix_c_tables.json",
  "prop_pairs.json",
  "wolf_symmetric_exclusion.json",
  "hermitian_pairs.json",
)


def data_dir():
  override = os.environ.get(ENV_VAR)
  if override:
    return override
  return os.path.join(os.path.dirname(__file__), "data")


def load(name, directory=None):
  assert name in FILES, name
  path = os.path.join(directory or data_dir(), name)
  with open(path, "r", encoding="utf-8") as fh:
    return json.load(fh)


def parse_frac(x):
  if isinstance(x, int):
    return Fraction(x)
  return Fraction(x)


def frac_vec(xs):
  return tuple(parse_frac(x) for x in xs)


def frac_vecs(xss):
  return tuple(frac_vec(xs) for xs in xss)
