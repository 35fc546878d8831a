import random
from array import array

import pytest
from oracles import naive_find

from seqmatch import (ALGORITHM_NAMES, BYTE, DNA4, ZERO, Capability,
                      HashScheme, ReusableSkipTable, dispatch_search,
                      naive_search, random16_text, resolve_algorithm,
                      search_al, search_hal, search_kmp_basic, search_l,
                      search_nhal, search_sf)

ALL = [(name, resolve_algorithm(name)) for name in ALGORITHM_NAMES]

# the bundled small.txt triples with oracle-derived positions
TRIPLES = [
    (b"Now's the time for all good men and women to come to the aid of their country.",
     b"time", 10),
    (b"Now's the time for all good men and women to come to the aid of their country.",
     b"timid", None),
    (b"Now's the time for all good men and women to come to the aid of their country.",
     b"try.", 74),
    (b"babcbabcabcaabcabcabcacabc", b"abcabcacab", 15),
    (b"aaaaaaabcabcadefg", b"abcad", 9),
    (b"aaaaaaabcabcadefg", b"ab", 6),
]


@pytest.mark.parametrize("name, fn", ALL, ids=[n for n, _ in ALL])
@pytest.mark.parametrize("text, pattern, expected", TRIPLES,
                         ids=[t[1].decode() for t in TRIPLES])
def test_regression_triples(name, fn, text, pattern, expected):
    assert naive_find(text, pattern) == expected
    assert fn(text, pattern).position == expected


@pytest.mark.parametrize("name, fn", ALL, ids=[n for n, _ in ALL])
def test_edges(name, fn):
    assert fn(b"abc", b"abc").position == 0
    assert fn(b"abc", b"abd").position is None
    assert fn(b"ab", b"abc").position is None  # text shorter than pattern
    assert fn(b"abc", b"").position == 0       # empty pattern matches at 0
    assert fn(b"", b"a").position is None
    assert fn(b"ab", b"ab").position == 0
    assert fn(b"xxxxab", b"ab").position == 4  # match flush at the end
    assert fn(b"zzzq", b"q").position == 3     # size-1 pattern
    assert fn(b"uuuuuuuuuua", b"bcdabcdabcd").position is None


def test_skip_shift_example_strings():
    # the two illustration texts for the shift-on-tail-mismatch idea
    for text in (b"......uuuuuuuuuua....", b"......uuuuuuuuuue...."):
        for name, fn in ALL:
            assert fn(text, b"bcdabcdabcd").position is None, name


@pytest.mark.parametrize("name, fn", ALL, ids=[n for n, _ in ALL])
def test_first_match_is_returned(name, fn):
    text = b"abab" * 10
    assert fn(text, b"ab").position == 0
    assert fn(text, b"bab").position == 1
    assert fn(b"aaaa", b"aa").position == 0


def test_fuzz_all_algorithms_agree_with_oracle():
    rng = random.Random(1234)
    for _ in range(1500):
        sigma = rng.choice([b"ab", b"acgt", b"abcdefghijklmnopqrstuvwxyz",
                            bytes(range(256))])
        n = rng.randint(1, 250)
        m = rng.randint(1, 24)
        text = bytes(rng.choices(sigma, k=n))
        if rng.random() < 0.5 and m <= n:
            start = rng.randrange(n - m + 1)
            pattern = text[start:start + m]
        else:
            pattern = bytes(rng.choices(sigma, k=m))
        want = naive_find(text, pattern)
        assert naive_search(text, pattern).position == want
        for name, fn in ALL:
            assert fn(text, pattern).position == want, (name, text, pattern)


def test_search_l_accepts_one_shot_iterators():
    text = b"the quick brown fox"
    assert search_l(iter(text), b"brown").position == 10
    assert search_l((x for x in text), b"quick").position == 4
    assert search_l(iter(b""), b"a").position is None
    assert search_l(iter(text), iter(b"fox")).position == 16


def test_str_inputs_work_everywhere():
    for fn in (search_sf, search_kmp_basic, search_l, search_al, search_hal):
        assert fn("mississippi", "issip").position == 4
        assert fn("mississippi", "zzz").position is None


class _ConstantScheme(HashScheme):
    """Degenerate scheme: everything hashes to 0."""

    hash_range_max = 1
    suffix_size = 1

    def hash(self, seq, pos):
        return 0


def test_degenerate_scheme_is_still_correct():
    rng = random.Random(5)
    scheme = _ConstantScheme()
    for _ in range(200):
        text = bytes(rng.choices(b"abc", k=rng.randint(1, 120)))
        m = rng.randint(1, 10)
        pattern = (text[:m] if rng.random() < 0.5 and m <= len(text)
                   else bytes(rng.choices(b"abc", k=m)))
        assert search_hal(text, pattern, scheme).position == \
            naive_find(text, pattern)


def test_zero_scheme_falls_back_to_forward_search():
    text, pattern = b"abcabcabd", b"cabd"
    assert search_hal(text, pattern, ZERO).position == 5
    # suffix larger than the pattern: same fallback
    assert search_hal(b"acgtacgt", b"gt", DNA4).position == 2


def test_hal_identity_scheme_equals_al():
    rng = random.Random(6)
    for _ in range(200):
        text = bytes(rng.choices(b"abcd", k=rng.randint(1, 150)))
        pattern = bytes(rng.choices(b"abcd", k=rng.randint(1, 12)))
        assert (search_al(text, pattern).position
                == search_hal(text, pattern, BYTE).position)


def test_nhal_restores_its_table():
    table = ReusableSkipTable()
    text = random16_text(4000, seed=11)
    first = text[100:140]
    assert search_nhal(text, first, table).position == 100
    assert all(v == 0 for v in table.slots)
    # a second search through the same table is unaffected by the first
    second = text[2222:2230]
    assert search_nhal(text, second, table).position == \
        naive_find(text, second)
    assert all(v == 0 for v in table.slots)


def test_nhal_restores_on_not_found():
    table = ReusableSkipTable()
    assert search_nhal(array("H", [1, 2, 3]), array("H", [9, 9]),
                       table).position is None
    assert all(v == 0 for v in table.slots)


def test_nhal_matches_hal_mod256_on_16bit_data():
    table = ReusableSkipTable()
    rng = random.Random(12)
    text = random16_text(3000, seed=12)
    for _ in range(60):
        m = rng.randint(1, 20)
        if rng.random() < 0.6:
            start = rng.randrange(len(text) - m)
            pattern = text[start:start + m]
        else:
            pattern = array("H", [rng.randrange(1 << 16) for _ in range(m)])
        assert (search_nhal(text, pattern, table).position
                == search_hal(text, pattern).position)


def test_nhal_rejects_out_of_domain_patterns():
    with pytest.raises(ValueError):
        search_nhal([1, 2, 3], [1 << 16])
    with pytest.raises(ValueError):
        search_nhal([1, 2, 3], [-1, 2])


def test_dispatch_capability_routing():
    text = b"some text with a needle in it"
    assert dispatch_search(text, b"needle").position == 17
    assert dispatch_search(text, b"needle",
                           Capability.FORWARD).position == 17
    assert dispatch_search(iter(text), b"needle").position == 17
    assert dispatch_search(text, b"needle",
                           Capability.RANDOM_ACCESS, DNA4).position == 17
    # unknown element types route through the zero scheme to the
    # forward search
    objs = [(1, 2), (3, 4), (5, 6)]
    assert dispatch_search(objs, [(3, 4)]).position == 1


def test_dispatch_word_sequences():
    words = b"to be or not to be that is the question".split()
    assert dispatch_search(words, [b"not", b"to", b"be"]).position == 3
    assert dispatch_search(words, [b"banana"]).position is None


def test_resolve_algorithm_rejects_unknown_names():
    with pytest.raises(ValueError):
        resolve_algorithm("boyer")


def test_searches_run_concurrently():
    from concurrent.futures import ThreadPoolExecutor

    rng = random.Random(31)
    text = bytes(rng.choices(b"abcdef", k=50_000))
    jobs = []
    for _ in range(12):
        start = rng.randrange(len(text) - 20)
        jobs.append(text[start:start + 20])
    # one table per job: concurrent nhal calls need distinct tables
    tables = [ReusableSkipTable() for _ in jobs]

    def run(i):
        pattern = jobs[i]
        return (search_hal(text, pattern).position,
                search_l(text, pattern).position,
                search_nhal(text, pattern, tables[i]).position)

    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(run, range(len(jobs))))
    for pattern, (a, b, c) in zip(jobs, results):
        want = naive_find(text, pattern)
        assert a == b == c == want
