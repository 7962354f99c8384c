import pytest
from hypothesis import given, strategies as st

from fermatrep.halfplane import (
    INVERT,
    HalfPlanePoint,
    Invert,
    Shift,
    apply,
    is_reduced,
    reduce,
    replay,
    step_matrix,
)
from fermatrep.psl2z import IDENTITY, UnimodularMatrix, compose

SHIFT_2 = UnimodularMatrix(1, 2, 0, 1)
INVERSION = UnimodularMatrix(0, -1, 1, 0)


def divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            out.append(n // d)
        d += 1
    return sorted(set(out))


@st.composite
def points(draw):
    d = draw(st.sampled_from([1, 3]))
    p = draw(st.integers(-400, 400))
    q = draw(st.sampled_from(divisors(p * p + d)))
    return HalfPlanePoint(p, q, d)


words = st.lists(
    st.one_of(st.builds(Shift, st.integers(-5, 5)), st.just(INVERT)), max_size=8
)


def test_point_validation():
    with pytest.raises(ValueError):
        HalfPlanePoint(0, 1, 2)
    with pytest.raises(ValueError):
        HalfPlanePoint(0, 0, 1)
    with pytest.raises(ValueError):
        HalfPlanePoint(0, -1, 1)
    with pytest.raises(ValueError):
        HalfPlanePoint(1, 3, 1)  # 3 does not divide 2


def test_apply_examples():
    assert apply(SHIFT_2, HalfPlanePoint(0, 1, 1)) == HalfPlanePoint(2, 1, 1)
    assert apply(INVERSION, HalfPlanePoint(2, 5, 1)) == HalfPlanePoint(-2, 1, 1)
    assert apply(INVERSION, HalfPlanePoint(0, 1, 1)) == HalfPlanePoint(0, 1, 1)


@given(points(), words)
def test_action_preserves_the_family(z, word):
    # the HalfPlanePoint constructor re-checks positivity and divisibility
    for step in word:
        z = apply(step_matrix(step), z)


@given(points(), words, words)
def test_apply_is_a_group_action(z, word_a, word_b):
    a = replay(word_a)
    b = replay(word_b)
    assert apply(compose(a, b), z) == apply(a, apply(b, z))


@pytest.mark.parametrize(
    "point, expected",
    [
        (HalfPlanePoint(0, 1, 1), True),  # i
        (HalfPlanePoint(1, 2, 3), True),  # corner (1 + sqrt(-3))/2
        (HalfPlanePoint(-1, 2, 3), False),  # mirrored corner is excluded
        (HalfPlanePoint(0, 1, 3), True),  # sqrt(-3)
        (HalfPlanePoint(2, 5, 1), False),  # |z| < 1
        (HalfPlanePoint(3, 2, 1), False),  # outside the strip
    ],
)
def test_is_reduced(point, expected):
    assert is_reduced(point) is expected


def test_reduce_examples():
    z = HalfPlanePoint(0, 1, 1)
    res = reduce(z)
    assert res.reduced == z
    assert res.U == IDENTITY
    assert res.word == ()
    assert res.step_count == 0

    res = reduce(HalfPlanePoint(2, 5, 1))
    assert res.reduced == HalfPlanePoint(0, 1, 1)
    assert res.U == UnimodularMatrix(2, -1, 1, 0)
    assert res.word == (INVERT, Shift(2))

    z = HalfPlanePoint(5, 14, 3)
    res = reduce(z)
    assert res.reduced == HalfPlanePoint(1, 2, 3)
    assert apply(res.U, z) == res.reduced


@given(points())
def test_reduce_soundness_and_idempotence(z):
    res = reduce(z)
    assert is_reduced(res.reduced)
    assert apply(res.U, z) == res.reduced
    assert replay(res.word) == res.U
    assert res.step_count == len(res.word)
    again = reduce(res.reduced)
    assert again.U == IDENTITY
    assert again.word == ()


@given(points())
def test_reduce_step_bound_and_monotone_progress(z):
    res = reduce(z)
    assert res.step_count <= 4 * z.Q.bit_length() + 8
    current = z
    for step in res.word:
        before = current
        current = apply(step_matrix(step), current)
        if isinstance(step, Invert):
            # inversions shrink Q except for the final mirror along |z| = 1
            on_arc = before.P * before.P + before.D == before.Q * before.Q
            assert current.Q < before.Q or on_arc
    assert current == res.reduced


def test_replay_examples():
    assert replay([]) == IDENTITY
    assert replay([INVERT, Shift(2)]) == UnimodularMatrix(2, -1, 1, 0)
    assert replay([Shift(1), Shift(-1)]) == IDENTITY


def test_reduce_matches_oracle_on_small_points():
    from fermatrep.oracle import reduced_equivalents

    for d in (1, 3):
        for q in range(1, 13):
            for p in range(-12, 13):
                if (p * p + d) % q:
                    continue
                z = HalfPlanePoint(p, q, d)
                assert reduced_equivalents(z, 30) == {reduce(z).reduced}
