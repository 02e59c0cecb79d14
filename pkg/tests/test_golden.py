"""Integrity checks for the shipped reference tables."""

import json
import os
from fractions import Fraction

import pytest

from lieosc import golden


def test_all_files_present_and_json():
  base = golden.data_dir()
  for name in golden.FILES:
    path = os.path.join(base, name)
    assert os.path.isfile(path), name
    with open(path) as fh:
      json.load(fh)


def test_load_rejects_unknown_name():
  with pytest.raises(AssertionError):
    golden.load("not_a_table.json")


def test_parse_frac():
  assert golden.parse_frac("3") == 3
  assert golden.parse_frac("-1/2") == Fraction(-1, 2)
  assert golden.frac_vec(["1", "0", "-3/2"]) == (1, 0, Fraction(-3, 2))
  assert golden.frac_vecs([["1"], ["2"]]) == ((1,), (2,))


def test_data_dir_env_override(tmp_path, monkeypatch):
  monkeypatch.setenv(golden.ENV_VAR, str(tmp_path))
  assert golden.data_dir() == str(tmp_path)
  monkeypatch.delenv(golden.ENV_VAR)
  assert os.path.isdir(golden.data_dir())


def test_directory_argument_beats_env(monkeypatch):
  packaged = os.path.join(os.path.dirname(golden.__file__), "data")
  monkeypatch.setenv(golden.ENV_VAR, "/nonexistent")
  g = golden.load("prop_simple_survivors.json", directory=packaged)
  assert len(g["survivors"]) == 4


def test_sorth_table_shape():
  g = golden.load("sorth_appendix_a.json")
  assert len(g["types"]) == 33
  for tname, row in g["types"].items():
    betas = golden.frac_vecs(row["betas"])
    assert betas, tname
    dim = len(betas[0])
    assert all(len(v) == dim for v in betas)


def test_k_table_shape():
  g = golden.load("k_table_appendix_b.json")
  assert len(g["types"]) == 33
  for tname, row in g["types"].items():
    rank = int(tname[1:])
    assert len(row["k"]) == rank, tname
    assert row["duality"] in ("self", "diagram")
    assert all(isinstance(k, int) and k >= 1 for k in row["k"])


def test_condition_lists_shapes():
  sizes = {"c_half_classif.json": 24, "c1_classif.json": 7,
           "c1half_classif.json": 2}
  for name, n in sizes.items():
    g = golden.load(name)
    assert len(g["entries"]) == n, name
    for e in g["entries"]:
      assert set(e) == {"type", "labels", "k", "repr_type"}
      assert e["repr_type"] in ("real", "quaternionic", "complex")


def test_condition_lists_disjoint():
  # each rep is recorded at the first level where the spanning condition holds,
  # so the three lists never share an entry
  half = {(e["type"], tuple(e["labels"]))
          for e in golden.load("c_half_classif.json")["entries"]}
  one = {(e["type"], tuple(e["labels"]))
         for e in golden.load("c1_classif.json")["entries"]}
  onehalf = {(e["type"], tuple(e["labels"]))
             for e in golden.load("c1half_classif.json")["entries"]}
  assert not (half & one)
  assert not (half & onehalf)
  assert not (one & onehalf)


def test_k4_table_shape():
  g = golden.load("lemma_k4.json")
  assert len(g["rows"]) == 45
  assert len(g["instances"]) == 121
  row_ids = {r["id"] for r in g["rows"]}
  assert len(row_ids) == 45
  used = {i["row"] for i in g["instances"]}
  assert used == row_ids  # every family is instantiated at rank <= 8


def test_survivors_shape():
  g = golden.load("prop_simple_survivors.json")
  got = {(s["type"], tuple(s["labels"])) for s in g["survivors"]}
  assert got == {
      ("B3", (1, 0, 1)),
      ("B4", (1, 0, 0, 1)),
      ("B7", (0, 0, 0, 0, 0, 0, 1)),
      ("B8", (0, 0, 0, 0, 0, 0, 0, 1)),
  }


def test_appendix_c_shape():
  g = golden.load("appendix_c_tables.json")
  assert g["rank_cap"] == 8
  t = g["tables"]
  assert {k: len(v) for k, v in t.items()} == {
      "C.1": 3, "C.2": 6, "C.3": 7, "C.4": 8}
  counts = {k: sum(len(r["instances"]) for r in v) for k, v in t.items()}
  assert counts == {"C.1": 15, "C.2": 247, "C.3": 19, "C.4": 42}


def test_prop_pairs_shape():
  g = golden.load("prop_pairs.json")
  assert g["rank_cap"] == 8
  assert len(g["rows"]) == 6
  assert sum(len(r["instances"]) for r in g["rows"]) == 35


def test_bms_shape():
  g = golden.load("bms_spheres.json")
  assert len(g["table1"]) == 25
  assert len(g["table2"]) == 32


def test_hermitian_shape():
  g = golden.load("hermitian_pairs.json")
  assert len(g["cases"]) == 7
  kinds = [c["kind"] for c in g["cases"]]
  assert kinds.count("circle_redundant") == 3
  assert kinds.count("gamma_orthogonal") == 4
  ambients = {c["ambient"] for c in g["cases"]}
  assert ambients == {"SU5", "SO10", "E6", "SP3", "SO12", "SU6", "E7"}
