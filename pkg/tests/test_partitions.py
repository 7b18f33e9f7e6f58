import itertools

import pytest
from hypothesis import given, strategies as st

from conftest import bell_recurrence, brute_partitions
from ncrooks.errors import (
    GapError,
    InvalidRGF,
    OverlapError,
    ParseError,
    SizeMismatch,
    TrivialInput,
)
from ncrooks.partitions import (
    TRIVIAL,
    SetPartition,
    atomic_factor,
    coarser_eq,
    enumerate_partitions,
    format_partition,
    format_rgf,
    from_rgf,
    is_atomic,
    is_rgf,
    is_unsplitable,
    normalize,
    parse_partition,
    parse_rgf,
    shift,
    slash,
    slash_all,
    split,
    split_all,
    to_rgf,
    unsplitable_factor,
)

P = parse_partition


def test_normalize_examples():
    assert normalize([{2, 4, 5, 9}, {7, 8}, {1, 3, 6}]) == P("136|2459|78")
    assert normalize([{2, 4, 5, 9}, {7, 8}, {1, 3, 6}]).blocks == (
        (1, 3, 6),
        (2, 4, 5, 9),
        (7, 8),
    )
    assert normalize([]) == TRIVIAL
    assert normalize([{3, 1}, {2}]).blocks == ((1, 3), (2,))


def test_normalize_errors():
    with pytest.raises(OverlapError):
        normalize([{1, 2}, {2, 3}])
    with pytest.raises(GapError):
        normalize([{1, 3}])
    with pytest.raises(GapError):
        normalize([{0, 1}])


def test_constructor_rejects_nonstandard_form():
    with pytest.raises(ValueError):
        SetPartition(3, ((2,), (1, 3)))
    with pytest.raises(ValueError):
        SetPartition(2, ((2, 1),))


def test_enumerate_order_n3():
    assert [str(p) for p in enumerate_partitions(3)] == ["123", "12|3", "13|2", "1|23", "1|2|3"]
    assert [to_rgf(p) for p in enumerate_partitions(3)] == [
        (1, 1, 1),
        (1, 1, 2),
        (1, 2, 1),
        (1, 2, 2),
        (1, 2, 3),
    ]
    assert list(enumerate_partitions(0)) == [TRIVIAL]


@pytest.mark.parametrize("n", range(0, 9))
def test_enumeration_matches_brute_force(n):
    got = list(enumerate_partitions(n))
    assert len(got) == len(set(got)) == bell_recurrence(n)
    assert set(got) == set(brute_partitions(n))
    words = [to_rgf(p) for p in got]
    assert words == sorted(words)


def test_bell_5():
    assert sum(1 for _ in enumerate_partitions(5)) == 52


def test_rgf_examples():
    assert to_rgf(P("124|36|5")) == (1, 1, 2, 1, 3, 2)
    assert to_rgf(P("1|2|3")) == (1, 2, 3)
    assert to_rgf(P("136|2459|78")) == (1, 2, 1, 2, 2, 1, 3, 3, 2)
    assert from_rgf((1, 1, 2, 1, 3, 2)) == P("124|36|5")
    assert from_rgf(()) == TRIVIAL
    assert from_rgf((1, 1, 2, 1, 3, 2, 1, 2, 1)) == P("12479|368|5")


@pytest.mark.parametrize("bad", [(2,), (1, 3), (1, 2, 4), (0,)])
def test_from_rgf_rejects(bad):
    with pytest.raises(InvalidRGF):
        from_rgf(bad)


@pytest.mark.parametrize("n", range(0, 9))
def test_rgf_round_trip(n):
    for pi in enumerate_partitions(n):
        assert from_rgf(to_rgf(pi)) == pi
    for word in itertools.product(range(1, n + 1), repeat=n):
        if is_rgf(word) and n <= 6:
            assert to_rgf(from_rgf(word)) == word


def test_shift():
    assert shift(P("12"), 3) == ((4, 5),)
    assert shift(TRIVIAL, 5) == ()
    assert shift(P("13|2"), 2) == ((3, 5), (4,))


def test_slash_examples():
    assert slash(P("1"), P("12")) == P("1|23")
    assert slash(P("13|2"), P("12")) == P("13|2|45")
    assert slash(TRIVIAL, P("13|2")) == P("13|2")
    assert slash(P("13|2"), TRIVIAL) == P("13|2")


def test_split_examples():
    assert split(P("124|36|5"), P("13|2")) == P("12479|368|5")
    assert split(P("124|36|5"), TRIVIAL) == P("124|36|5")
    assert split(P("1"), P("1")) == P("12")


def _all_upto(total):
    for a in range(total + 1):
        for b in range(total + 1 - a):
            for c in range(total + 1 - a - b):
                yield a, b, c


def test_products_associative_with_identity():
    parts = {n: list(enumerate_partitions(n)) for n in range(7)}
    for a, b, c in _all_upto(6):
        for x in parts[a]:
            for y in parts[b]:
                for z in parts[c]:
                    assert slash(slash(x, y), z) == slash(x, slash(y, z))
                    assert split(split(x, y), z) == split(x, split(y, z))
    for n in range(5):
        for x in parts[n]:
            assert slash(TRIVIAL, x) == slash(x, TRIVIAL) == x
            assert split(TRIVIAL, x) == split(x, TRIVIAL) == x


def test_atomic_examples():
    assert is_atomic(P("13|2"))
    assert is_atomic(P("123"))
    assert not is_atomic(P("1|23"))
    assert not is_atomic(TRIVIAL)


def test_atomic_factor_examples():
    assert atomic_factor(P("1|2|3")) == [P("1")] * 3
    assert atomic_factor(P("1|23")) == [P("1"), P("12")]
    assert atomic_factor(P("13|2|45")) == [P("13|2"), P("12")]
    with pytest.raises(TrivialInput):
        atomic_factor(TRIVIAL)


def test_unsplitable_examples():
    assert is_unsplitable(P("1|2|3"))
    assert is_unsplitable(P("1|23"))
    assert not is_unsplitable(P("12|3"))
    assert not is_unsplitable(TRIVIAL)
    # RGF 112 = 1 . 12, and RGF 12 is the partition 1|2
    assert unsplitable_factor(P("12|3")) == [P("1"), P("1|2")]
    assert unsplitable_factor(P("1|23")) == [P("1|23")]
    assert unsplitable_factor(P("123")) == [P("1")] * 3
    with pytest.raises(TrivialInput):
        unsplitable_factor(TRIVIAL)


def _brute_slash_decomposable(pi):
    """Try every nontrivial pair of smaller partitions."""
    for m in range(1, pi.n):
        for a in brute_partitions(m):
            for b in brute_partitions(pi.n - m):
                if slash(a, b) == pi:
                    return True
    return False


def _brute_split_decomposable(pi):
    for m in range(1, pi.n):
        for a in brute_partitions(m):
            for b in brute_partitions(pi.n - m):
                if split(a, b) == pi:
                    return True
    return False


@pytest.mark.parametrize("n", range(1, 6))
def test_predicates_against_product_search(n):
    for pi in brute_partitions(n):
        assert is_atomic(pi) == (not _brute_slash_decomposable(pi))
        assert is_unsplitable(pi) == (not _brute_split_decomposable(pi))


@pytest.mark.parametrize("n", range(1, 9))
def test_factorizations_fold_back(n):
    for pi in enumerate_partitions(n):
        fa = atomic_factor(pi)
        assert slash_all(fa) == pi and all(map(is_atomic, fa))
        assert is_atomic(pi) == (len(fa) == 1)
        fu = unsplitable_factor(pi)
        assert split_all(fu) == pi and all(map(is_unsplitable, fu))
        assert is_unsplitable(pi) == (len(fu) == 1)


def test_coarser_eq_examples():
    assert coarser_eq(P("123"), P("13|2"))
    assert coarser_eq(P("13|2"), P("13|2"))
    assert not coarser_eq(P("12|3"), P("13|2"))
    with pytest.raises(SizeMismatch):
        coarser_eq(P("12"), P("123"))


@pytest.mark.parametrize("n", range(1, 6))
def test_coarser_eq_is_a_partial_order(n):
    parts = list(enumerate_partitions(n))
    bottom = from_rgf(tuple(range(1, n + 1)))
    top = from_rgf((1,) * n)
    for a in parts:
        assert coarser_eq(a, a)
        assert coarser_eq(a, bottom) and coarser_eq(top, a)
        for b in parts:
            if a != b and coarser_eq(a, b):
                assert not coarser_eq(b, a)
    if n <= 4:
        for a, b, c in itertools.product(parts, repeat=3):
            if coarser_eq(a, b) and coarser_eq(b, c):
                assert coarser_eq(a, c)


def test_coarser_eq_n6_transitivity_sampled_by_chains():
    parts = list(enumerate_partitions(6))
    above = {p: [q for q in parts if coarser_eq(q, p)] for p in parts[::7]}
    for p, ups in above.items():
        for q in ups:
            for r in parts:
                if coarser_eq(r, q):
                    assert coarser_eq(r, p)


def test_text_format():
    assert format_partition(TRIVIAL) == "()"
    assert format_partition(P("1,3,6|2,4,5,9|7,8")) == "136|2459|78"
    ten = from_rgf(tuple(range(1, 11)))
    assert format_partition(ten) == "1|2|3|4|5|6|7|8|9|10"
    assert parse_partition(format_partition(ten)) == ten
    big = from_rgf((1, 2, 1, 3, 3, 1, 2, 4, 1, 2, 4))
    assert format_partition(big) == "1,3,6,9|2,7,10|4,5|8,11"
    assert parse_partition(format_partition(big)) == big
    assert parse_partition("2,1|3") == P("12|3")


@pytest.mark.parametrize("text,pos", [("1|2|x", 4), ("12||3", 3), ("1,a|2", 2)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_partition(text)
    assert info.value.position == pos


def test_parse_rejects_non_partitions():
    with pytest.raises(ParseError):
        parse_partition("12|2")
    with pytest.raises(ParseError):
        parse_partition("13")


def test_rgf_text():
    assert format_rgf((1, 1, 2)) == "112"
    assert format_rgf(()) == "()"
    assert format_rgf(tuple(range(1, 11))) == "1,2,3,4,5,6,7,8,9,10"
    assert parse_rgf("1,2,3,4,5,6,7,8,9,10") == tuple(range(1, 11))
    with pytest.raises(InvalidRGF):
        parse_rgf("13")


@st.composite
def rgfs(draw, max_len=10):
    n = draw(st.integers(0, max_len))
    word = []
    for _ in range(n):
        word.append(draw(st.integers(1, max(word, default=0) + 1)))
    return tuple(word)


@given(rgfs(), rgfs())
def test_split_is_rgf_concatenation(r, s):
    pi, sigma = from_rgf(r), from_rgf(s)
    assert to_rgf(split(pi, sigma)) == r + s


@given(rgfs(), rgfs())
def test_slash_blocks(r, s):
    pi, sigma = from_rgf(r), from_rgf(s)
    tau = slash(pi, sigma)
    assert tau.n == pi.n + sigma.n
    assert tau.blocks == pi.blocks + shift(sigma, pi.n)
    if pi.n and sigma.n:
        assert not is_atomic(tau)
        assert not is_unsplitable(split(pi, sigma))


@given(rgfs(12))
def test_text_round_trip(r):
    pi = from_rgf(r)
    assert parse_partition(format_partition(pi)) == pi
    assert parse_rgf(format_rgf(r)) == r
