"""Tests for the parametric family generators."""

import math
import random

import pytest

from circiso.circulant import ConnectionSet, make_graph
from circiso.families import (
    JumpTwoParams,
    PrimeCubeParams,
    base_family_set,
    d_value,
    extended_family_set,
    family_orbit,
    family_set,
    mirror_params,
    r2_family,
)
from circiso.iso import adams_witness
from circiso.transform import Shear, circulant_image

G1715 = {
    1: (7, 17, 228, 262, 473, 507, 718, 752),
    2: (7, 122, 123, 367, 368, 612, 613, 857),
    3: (7, 18, 227, 263, 472, 508, 717, 753),
    4: (7, 87, 158, 332, 403, 577, 648, 822),
    5: (7, 53, 192, 298, 437, 543, 682, 788),
    6: (7, 52, 193, 297, 438, 542, 683, 787),
    7: (7, 88, 157, 333, 402, 578, 647, 823),
}


def test_d_value_examples():
    assert d_value(PrimeCubeParams(p=3, n=1, x=1, y=0, i=2)) == 4
    assert d_value(PrimeCubeParams(p=7, n=5, x=3, y=2, i=2)) == 122
    for p, n, x, y in [(3, 1, 2, 0), (5, 2, 3, 1), (7, 1, 4, 3)]:
        assert d_value(PrimeCubeParams(p=p, n=n, x=x, y=y, i=1)) == x + y * p


def test_d_value_1715_row():
    values = [d_value(PrimeCubeParams(p=7, n=5, x=3, y=2, i=i)) for i in range(1, 8)]
    assert values == [17, 122, 227, 332, 437, 542, 647]


def test_base_family_set_examples():
    assert base_family_set(PrimeCubeParams(p=3, n=1, x=1, y=0, i=1)).jumps == (1, 3, 8, 10)
    assert base_family_set(PrimeCubeParams(p=3, n=2, x=2, y=0, i=3)).jumps == (3, 8, 10, 26)
    assert base_family_set(PrimeCubeParams(p=7, n=5, x=3, y=2, i=1)).jumps == G1715[1]


def test_base_family_full_form_adjoins_p_and_mirror():
    full = base_family_set(PrimeCubeParams(p=7, n=5, x=3, y=2, i=1)).expanded()
    assert 7 in full and 1708 in full
    assert len(full) == 2 * 7 + 2


def test_family_param_validation():
    with pytest.raises(ValueError):
        PrimeCubeParams(p=4, n=1, x=1, y=0)
    with pytest.raises(ValueError):
        PrimeCubeParams(p=3, n=1, x=5, y=0)
    with pytest.raises(ValueError):
        PrimeCubeParams(p=3, n=1, x=1, y=3)
    with pytest.raises(ValueError):
        PrimeCubeParams(p=3, n=1, x=1, y=0, i=4)
    with pytest.raises(ValueError):
        PrimeCubeParams(p=2, n=2, x=1, y=0, i=3)


def test_p2_specific_validation():
    with pytest.raises(ValueError):
        PrimeCubeParams(p=2, n=2, x=2, y=1)  # x forced to 1 when p = 2
    with pytest.raises(ValueError):
        PrimeCubeParams(p=2, n=1, x=1, y=0)  # order 8 collapses
    with pytest.raises(ValueError):
        PrimeCubeParams(p=2, n=3, x=1, y=1)  # x + 2y = 3 = n is degenerate
    with pytest.raises(ValueError):
        PrimeCubeParams(p=2, n=3, x=1, y=4)  # x + 2y = 9 = 3n is degenerate


def test_extended_reduces_to_base_with_extra_one():
    params = PrimeCubeParams(p=3, n=1, x=1, y=0, i=1, extras=(1,))
    assert extended_family_set(params) == base_family_set(PrimeCubeParams(p=3, n=1, x=1, y=0))


def test_extended_family_set_with_two_extras():
    params = PrimeCubeParams(p=3, n=1, x=1, y=0, i=1, extras=(1, 2))
    assert extended_family_set(params).jumps == (1, 3, 6, 8, 10)


def test_extended_family_rejects_bad_extras():
    with pytest.raises(ValueError):
        PrimeCubeParams(p=3, n=1, x=1, y=0, extras=(2, 4))  # gcd 2
    with pytest.raises(ValueError):
        extended_family_set(PrimeCubeParams(p=3, n=1, x=1, y=0))  # extras absent
    with pytest.raises(ValueError):
        base_family_set(PrimeCubeParams(p=3, n=1, x=1, y=0, extras=(1,)))  # extras present


def test_extended_family_detects_jump_collision():
    # p * (n*p^2 - 1) lands on the mirror class of p itself
    with pytest.raises(ValueError, match="collision"):
        extended_family_set(PrimeCubeParams(p=3, n=1, x=1, y=0, extras=(1, 8)))


def test_family_orbit_27_matches_reference_table():
    orbit = family_orbit(PrimeCubeParams(p=3, n=1, x=1, y=0))
    assert [s.jumps for s in orbit] == [(1, 3, 8, 10), (3, 4, 5, 13), (2, 3, 7, 11)]


def test_family_orbit_250_x3_matches_reference_table():
    orbit = family_orbit(PrimeCubeParams(p=5, n=2, x=3, y=0))
    assert [s.jumps for s in orbit] == [
        (3, 5, 47, 53, 97, 103),
        (5, 17, 33, 67, 83, 117),
        (5, 13, 37, 63, 87, 113),
        (5, 7, 43, 57, 93, 107),
        (5, 23, 27, 73, 77, 123),
    ]


def test_family_orbit_1715():
    orbit = family_orbit(PrimeCubeParams(p=7, n=5, x=3, y=2))
    assert [s.jumps for s in orbit] == [G1715[i] for i in range(1, 8)]


def test_family_orbit_wraps_start_index():
    base = family_orbit(PrimeCubeParams(p=3, n=1, x=1, y=0, i=1))
    shifted = family_orbit(PrimeCubeParams(p=3, n=1, x=1, y=0, i=2))
    assert shifted == base[1:] + base[:1]


@pytest.mark.parametrize(
    "params",
    [
        PrimeCubeParams(p=3, n=1, x=1, y=0),
        PrimeCubeParams(p=3, n=3, x=1, y=2),
        PrimeCubeParams(p=5, n=1, x=2, y=0),
        PrimeCubeParams(p=3, n=2, x=2, y=1, extras=(1, 2)),
    ],
)
def test_orbit_members_are_shear_images_of_the_base(params):
    orbit = family_orbit(params)
    base = make_graph(params.modulus, orbit[0])
    for j, member in enumerate(orbit):
        if j == 0:
            continue
        image = circulant_image(Shear(params.modulus, params.p, j * params.n), base)
        assert image is not None and image.connection_set == member


def test_generated_sets_are_connected_and_contain_p():
    rng = random.Random(7)
    for _ in range(25):
        p = rng.choice([3, 5, 7])
        n = rng.randint(1, 3)
        x = rng.randint(1, p - 1)
        y = rng.randint(0, n * p - 1)
        i = rng.randint(1, p)
        s = base_family_set(PrimeCubeParams(p=p, n=n, x=x, y=y, i=i))
        g = make_graph(s.n, s)
        assert g.is_connected()
        assert p in s.jumps
        assert [r for r in s.jumps if r % p == 0] == [p]


def test_r2_family_examples():
    r, s = r2_family(JumpTwoParams(n=2, s=1, evens=(1,)))
    assert (r.jumps, s.jumps) == ((1, 2, 7), (2, 3, 5))
    r, s = r2_family(JumpTwoParams(n=2, s=2, evens=(1,)))
    assert (r.jumps, s.jumps) == ((2, 3, 5), (1, 2, 7))
    r, s = r2_family(JumpTwoParams(n=3, s=1, evens=(1, 2)))
    assert (r.jumps, s.jumps) == ((1, 2, 4, 11), (2, 4, 5, 7))


def test_r2_family_rejects_degenerate_s():
    with pytest.raises(ValueError):
        JumpTwoParams(n=3, s=2, evens=(1,))  # n = 2s - 1
    with pytest.raises(ValueError):
        JumpTwoParams(n=2, s=3, evens=(1,))  # 2s - 1 > 2n - 1
    with pytest.raises(ValueError):
        JumpTwoParams(n=2, s=1, evens=(2, 4))  # gcd 2


def test_r2_pair_is_a_shear_image_and_non_adams():
    r, s = r2_family(JumpTwoParams(n=2, s=1, evens=(1,)))
    g, h = make_graph(16, r), make_graph(16, s)
    image = circulant_image(Shear(16, 2, 2), g)
    assert image is not None and image.connection_set == s
    assert adams_witness(g, h) is None


def test_p2_family_dispatches_to_jump_two_construction():
    params = PrimeCubeParams(p=2, n=2, x=1, y=0)
    orbit = family_orbit(params)
    pair = r2_family(JumpTwoParams(n=2, s=1, evens=(1,)))
    assert tuple(orbit) == pair
    # high y mirrors back onto the same pair
    mirrored = family_orbit(PrimeCubeParams(p=2, n=2, x=1, y=3))
    assert set(mirrored) == set(pair)
    # d_i sits inside member i
    for i in (1, 2):
        d = d_value(PrimeCubeParams(p=2, n=2, x=1, y=0, i=i))
        member = family_set(PrimeCubeParams(p=2, n=2, x=1, y=0, i=i))
        assert min(d % 16, (16 - d) % 16) in member.jumps


def test_mirror_params_examples():
    m1 = mirror_params(PrimeCubeParams(p=3, n=1, x=1, y=0))
    assert (m1.x, m1.y) == (2, 2) and m1.x + m1.y * m1.p == 8
    m2 = mirror_params(PrimeCubeParams(p=5, n=1, x=2, y=0))
    assert m2.x + m2.y * m2.p == 23
    m3 = mirror_params(PrimeCubeParams(p=3, n=2, x=1, y=1))
    assert m3.x + m3.y * m3.p == 14


def test_mirror_params_is_an_involution_and_preserves_sets():
    cases = [
        PrimeCubeParams(p=3, n=1, x=1, y=0),
        PrimeCubeParams(p=5, n=1, x=2, y=0, i=3),
        PrimeCubeParams(p=3, n=2, x=1, y=1, i=2),
        PrimeCubeParams(p=7, n=1, x=3, y=2),
    ]
    for params in cases:
        mirrored = mirror_params(params)
        assert mirror_params(mirrored) == params
        assert base_family_set(params) == base_family_set(mirrored)


def test_mirror_identity_with_extras():
    params = PrimeCubeParams(p=3, n=2, x=2, y=1, i=2, extras=(1, 2))
    assert extended_family_set(params) == extended_family_set(mirror_params(params))


def test_family_sets_never_silently_merge():
    rng = random.Random(11)
    for _ in range(40):
        p = rng.choice([3, 5, 7])
        n = rng.randint(1, 3)
        x = rng.randint(1, p - 1)
        y = rng.randint(0, n * p - 1)
        s = base_family_set(PrimeCubeParams(p=p, n=n, x=x, y=y, i=rng.randint(1, p)))
        assert len(s.jumps) == p + 1
        assert len(s.expanded()) == 2 * p + 2


def test_connection_sets_distinct_within_an_orbit():
    for params in (
        PrimeCubeParams(p=3, n=2, x=1, y=3),
        PrimeCubeParams(p=5, n=1, x=4, y=2),
        PrimeCubeParams(p=2, n=3, x=1, y=0),
    ):
        orbit = family_orbit(params)
        assert len(set(orbit)) == len(orbit) == params.p
        assert all(isinstance(s, ConnectionSet) for s in orbit)
        assert all(math.gcd(s.n, params.p) == params.p for s in orbit)
