import pytest

from lieosc.chevmod import MODULE_DIM_CAP, build_module, chevalley_basis
from lieosc.classify import (bms_tables, composite_pipeline, scan_pools,
                             simple_pipeline)
from lieosc.osc import classify_C_tables
from lieosc.rootsys import build_root_datum
from lieosc.sorth import build_sorth


@pytest.fixture(scope="session")
def datum():
  cache = {}

  def get(tname):
    if tname not in cache:
      cache[tname] = build_root_datum(tname)
    return cache[tname]
  return get


@pytest.fixture(scope="session")
def sorth_of(datum):
  cache = {}

  def get(tname):
    if tname not in cache:
      cache[tname] = build_sorth(datum(tname))
    return cache[tname]
  return get


@pytest.fixture(scope="session")
def basis_of(datum):
  cache = {}

  def get(tname):
    if tname not in cache:
      cache[tname] = chevalley_basis(datum(tname))
    return cache[tname]
  return get


@pytest.fixture(scope="session")
def module_of(basis_of):
  cache = {}

  def get(tname, labels, dim_cap=MODULE_DIM_CAP):
    key = (tname, tuple(labels))
    if key not in cache:
      cache[key] = build_module(basis_of(tname), labels, dim_cap)
    return cache[key]
  return get


# the expensive pipeline products, computed once per session

@pytest.fixture(scope="session")
def simple_records():
  return simple_pipeline(8, full=True)


@pytest.fixture(scope="session")
def survivors(simple_records):
  return [r for r in simple_records if r.status == "candidate"]


@pytest.fixture(scope="session")
def ctables():
  return classify_C_tables(8)


@pytest.fixture(scope="session")
def pools():
  return scan_pools(8)


@pytest.fixture(scope="session")
def bms(pools):
  return bms_tables(pools, 8)


@pytest.fixture(scope="session")
def composite_records(survivors):
  return composite_pipeline(8, survivors=survivors)
