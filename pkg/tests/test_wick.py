import pytest

from hermkp import _kernel
from hermkp.errors import CapacityError
from hermkp.partitions import Partition, enumerate_partitions, partitions_up_to
from hermkp.wick import (
    MAX_WICK_WEIGHT, connected_correlator, connected_wick_census, double_factorial,
    genus_census, gs_exponent, wick_correlator,
)
from printed_tables import DEGREE_6, poly


def test_census_totals_are_double_factorials():
    for lam in partitions_up_to(10):
        if lam.weight % 2 == 0:
            assert genus_census(lam).total == double_factorial(lam.weight - 1)


def test_genus_is_integral_and_euler_characteristic():
    for lam in partitions_up_to(10):
        if lam.weight % 2 or not lam:
            continue
        census = genus_census(lam)
        for faces in census.connected_by_faces:
            # V - E + F = 2 - 2g for a connected map
            chi = len(lam) - lam.weight // 2 + faces
            assert chi % 2 == 0 and chi <= 2
            assert census.genus(faces) == (2 - chi) // 2


def test_one_face_single_vertex_counts():
    # gluings of a 2n-gon into a sphere are counted by Catalan numbers
    catalan = [1, 1, 2, 5, 14, 42, 132]
    for n in range(1, 7):
        assert genus_census(Partition((2 * n,))).by_faces[n + 1] == catalan[n]


@pytest.mark.parametrize("lam, gs, value", DEGREE_6)
def test_degree_six_table(lam, gs, value):
    got = wick_correlator(Partition(lam))
    assert got.poly == poly(value) and got.gs_exp == gs == gs_exponent(lam)


def test_odd_weight_vanishes():
    assert wick_correlator(Partition((3,))).is_zero()
    assert wick_correlator(Partition((2, 1))).is_zero()


@pytest.mark.skipif(_kernel.compiled_census_chunk is None, reason="compiled kernel not built")
def test_compiled_and_python_kernels_agree():
    for n in range(2, 13, 2):
        for lam in enumerate_partitions(n):
            for first in range(1, n):
                assert _kernel.compiled_census_chunk(tuple(lam), first) == \
                    _kernel.python_census_chunk(tuple(lam), first)


def test_parallel_census_is_deterministic():
    lam = Partition((4, 3, 2, 1, 1, 1))
    serial = genus_census(lam, workers=1)
    parallel = genus_census(lam, workers=2)
    assert serial.by_faces == parallel.by_faces
    assert serial.connected_by_faces == parallel.connected_by_faces
    assert serial.to_json() == parallel.to_json()


def test_connected_by_census_equals_cumulant():
    for lam in partitions_up_to(10):
        if lam and lam.weight % 2 == 0:
            assert connected_wick_census(lam) == connected_correlator(lam)


def test_capacity_ceiling():
    with pytest.raises(CapacityError):
        genus_census(Partition((MAX_WICK_WEIGHT + 2,)))


def test_listed_censuses():
    assert genus_census(Partition((2,))).by_faces == {2: 1}
    assert genus_census(Partition((4,))).by_faces == {3: 2, 1: 1}
    assert genus_census(Partition((6,))).by_faces == {4: 5, 2: 10}
    assert wick_correlator(Partition((2, 2, 2))).poly == poly("N^6+6N^4+8N^2")


def test_listed_cumulants():
    from hermkp.polyalg import Graded
    assert connected_correlator(Partition((2,))) == Graded(poly("N^2"), 0)
    assert connected_correlator(Partition((1, 1))) == Graded(poly("N"), -1)
    assert connected_correlator(Partition((2, 2))) == Graded(poly("2N^2"), 0)


def test_connected_correlators_have_nonnegative_integer_coefficients():
    for lam in partitions_up_to(12):
        if lam and lam.weight % 2 == 0:
            c = connected_correlator(lam).poly
            assert c.is_integral() and all(v >= 0 for v in c.coeffs.values()), lam


def test_pure_python_fallback_is_selectable():
    import os
    import subprocess
    import sys
    code = ("import hermkp; from hermkp.wick import wick_correlator; "
            "print(hermkp.BACKEND, wick_correlator((4, 2)).pretty())")
    env = dict(os.environ, HERMKP_PURE_PYTHON="1")
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env, check=True)
    assert proc.stdout.split()[0] == "python"
    assert proc.stdout.split(maxsplit=1)[1].strip() == wick_correlator(Partition((4, 2))).pretty()
