"""Sequence searches built on failure links and hashed skip loops.

Every search shares one contract: return the smallest offset ``k`` with
``text[k:k+m]`` equal to the pattern elementwise, or not-found.  ``sf``
is the optimized straightforward scan.  ``kmp`` and its streamlined
form ``l`` never re-read text and bound element comparisons by ``2n``;
``l`` additionally needs only a single forward pass, so it accepts
one-shot iterators.  ``al``/``hal`` keep those bounds but add a skip
loop that advances the alignment by occurrence-table lookups, probing
one hashed window per stop instead of comparing elements; ``nhal``
drops the hash in favor of a full 16-bit-alphabet table whose entries
are skewed so that zero means "default shift", letting one zero-filled
table be reused across searches.

Conventions: empty patterns match at offset 0; texts shorter than the
pattern report not-found; size-1 patterns always use a plain linear
scan.  Searches never mutate their inputs and may run concurrently,
except that one ``ReusableSkipTable`` serves one search at a time.
"""

from array import array
from dataclasses import dataclass
from enum import Enum

from .errors import EmptyPattern
from .schemes import BYTE, DNA2, DNA3, DNA4, DNA5, default_scheme_for
from .tables import compute_forward_index, compute_next, compute_skip

_INT_ARRAY_TYPECODES = frozenset("bBhHiIlLqQ")


@dataclass(frozen=True)
class SearchOutcome:
    """Offset of the first match (or None), plus operation counts when
    the run was instrumented."""

    position: "int | None"
    counts: "object | None" = None

    @property
    def found(self):
        return self.position is not None


class Capability(Enum):
    """How a text sequence may be traversed."""

    FORWARD = "forward"
    RANDOM_ACCESS = "random-access"


def naive_search(text, pattern):
    """Reference scan: try every alignment in order, first match wins.

    Deliberately unrelated to the table-driven searches; self-tests and
    the benchmark cross-check lean on it as an independent baseline.
    """
    n = len(text)
    m = len(pattern)
    if m == 0:
        return SearchOutcome(0)
    for k in range(n - m + 1):
        if text[k:k + m] == pattern:
            return SearchOutcome(k)
    return SearchOutcome(None)


def _linear_scan(text, first):
    # size-1 patterns: plain find, no tables
    k = 0
    for x in text:
        if x == first:
            return k
        k += 1
    return None


def _sf(text, pattern):
    n = len(text)
    m = len(pattern)
    if m == 0:
        return 0
    if n < m:
        return None
    first = pattern[0]
    if m == 1:
        return _linear_scan(text, first)
    limit = n - m
    k = 0
    while k <= limit:
        while text[k] != first:  # scan for a plausible start
            k += 1
            if k > limit:
                return None
        j = 1
        k += 1
        while text[k] == pattern[j]:  # verify the rest
            k += 1
            j += 1
            if j == m:
                return k - m
        k -= j - 1  # realign one position past the old start
    return None


def search_sf(text, pattern):
    """Optimized straightforward search; O(m*n) worst case.

    >>> search_sf("abc", "abc").position
    0
    >>> search_sf("abc", "abd").position is None
    True
    """
    return SearchOutcome(_sf(text, pattern))


def _kmp(text, pattern):
    n = len(text)
    m = len(pattern)
    if m == 0:
        return 0
    if n < m:
        return None
    shifts = compute_next(pattern)
    j = 0
    k = 0
    while j < m and k < n:
        while j >= 0 and text[k] != pattern[j]:
            j = shifts[j]
        k += 1
        j += 1
    if j == m:
        return k - m
    return None


def search_kmp_basic(text, pattern):
    """Textbook failure-link search; O(m + n), comparisons <= 2n."""
    return SearchOutcome(_kmp(text, pattern))


def _l(text, index):
    positions = index.positions
    shifts = index.shifts
    m = len(positions)
    first = positions[0]
    step = iter(text).__next__
    if m == 1:
        k = 0
        try:
            while True:
                if step() == first:
                    return k
                k += 1
        except StopIteration:
            return None
    # `cur` is the element under the cursor, `k` its position.  Running
    # off the end anywhere means no match, hence the blanket handler.
    k = 0
    try:
        cur = step()
        while True:
            while cur != first:  # scan
                cur = step()
                k += 1
            j = 1  # verify positions 1 .. m-1
            cur = step()
            k += 1
            while cur == positions[j]:
                j += 1
                if j == m:
                    return k - m + 1
                cur = step()
                k += 1
            while True:  # recover through the failure links
                j = shifts[j]
                if j < 0:
                    cur = step()
                    k += 1
                    break
                if j == 0:
                    break
                while cur == positions[j]:
                    j += 1
                    if j == m:
                        return k - m + 1
                    cur = step()
                    k += 1
    except StopIteration:
        return None


def search_l(text, pattern):
    """Forward-only linear search: one pass over ``text``, comparisons
    <= 2n.

    Both arguments may be arbitrary iterables (including one-shot
    iterators); the pattern alone is materialized.

    >>> search_l(iter("Now's the time..."), "time").position
    10
    """
    try:
        index = compute_forward_index(pattern)
    except EmptyPattern:
        return SearchOutcome(0)
    return SearchOutcome(_l(text, index))


def _hal(text, pattern, scheme):
    n = len(text)
    m = len(pattern)
    if m == 0:
        return 0
    s = scheme.suffix_size
    if s == 0 or m < s:
        # scheme cannot cover a probe window; use the forward search
        return _l(text, compute_forward_index(pattern))
    if n < m:
        return None
    first = pattern[0]
    if m == 1:
        return _linear_scan(text, first)
    shifts = compute_next(pattern)
    table = compute_skip(pattern, scheme, n)
    skip = table.shifts
    mismatch_shift = table.mismatch_shift
    adjustment = table.adjustment
    # Inline the hash into the probe where the element type allows it:
    # byte values index the 256-entry table as-is; wider int elements
    # keep the fold mask in the loop.
    fold = scheme.fold_mask
    direct = None
    if fold is not None:
        if isinstance(text, (bytes, bytearray)):
            direct = skip
        elif isinstance(text, array):
            if text.typecode == "B":
                direct = skip
            elif text.typecode not in _INT_ARRAY_TYPECODES:
                fold = None
        else:
            fold = None
    hash_ = scheme.hash
    # k is the text position translated by -n, so exit tests compare
    # against zero and `large` entries force an exit by sheer size.
    # The skip loop itself runs on pos = n + k, hoisting the base
    # addition out of the hot path.
    k = -n
    while True:
        k += m - 1
        if k >= 0:
            return None
        pos = n + k
        if direct is not None:
            while pos < n:
                pos += direct[text[pos]]
        elif fold is not None:
            while pos < n:
                pos += skip[text[pos] & fold]
        else:
            while pos < n:
                pos += skip[hash_(text, pos)]
        k = pos - n
        if k < m:
            return None  # ran off the end without a tail match
        k -= adjustment
        if text[n + k] != first:
            k += mismatch_shift
            continue
        j = 1
        while True:
            k += 1
            if text[n + k] != pattern[j]:
                break
            j += 1
            if j == m:
                return n + k - m + 1
        if mismatch_shift > j:
            k += mismatch_shift - j
            continue
        while True:  # recover through the failure links
            j = shifts[j]
            if j < 0:
                k += 1
                break
            if j == 0:
                break
            while text[n + k] == pattern[j]:
                k += 1
                j += 1
                if j == m:
                    return n + k - m
                if k == 0:
                    return None


def search_hal(text, pattern, scheme=None):
    """Hashed skip-loop search over a random-access text.

    Probes the hash of the window ending each candidate alignment and
    only falls into comparison work when it matches the pattern tail's
    hash.  With no ``scheme``, the default for the element type
    applies; schemes whose window cannot fit the pattern fall back to
    the forward search.  Comparisons stay <= 2n regardless of scheme
    quality.
    """
    if scheme is None:
        scheme = default_scheme_for(text)
    return SearchOutcome(_hal(text, pattern, scheme))


def search_al(text, pattern):
    """Skip-loop search specialized to byte/character elements.

    Same machinery as ``search_hal`` with the identity byte hash: the
    probe inspects the single element under the pattern's last
    position.
    """
    return SearchOutcome(_hal(text, pattern, BYTE))


class ReusableSkipTable:
    """Full 16-bit-alphabet shift storage, zero-filled between searches.

    During a search, entries are stored skewed by ``-(m - s + 1)`` so a
    zero denotes the default shift; every entry the search wrote is
    restored to zero before it returns.  One instance can therefore be
    reused indefinitely, paying the 65536-slot initialization once.
    One search at a time per instance.
    """

    size = 1 << 16

    def __init__(self):
        self.slots = [0] * self.size


def _nhal(text, pattern, table):
    n = len(text)
    m = len(pattern)
    if m == 0:
        return 0
    if n < m:
        return None
    if min(pattern) < 0 or max(pattern) >= table.size:
        raise ValueError("pattern symbols exceed the table's 16-bit domain")
    first = pattern[0]
    if m == 1:
        return _linear_scan(text, first)
    shifts = compute_next(pattern)
    slots = table.slots
    skew = m  # suffix size 1, so the default shift is m - 1 + 1
    try:
        for j in range(m - 1):
            slots[pattern[j]] = m - 1 - j - skew
        tail = pattern[m - 1]
        mismatch_shift = slots[tail] + skew
        large = n + 1
        adjustment = large + m - 1
        slots[tail] = large - skew
        k = -n
        while True:
            k += m - 1
            if k >= 0:
                return None
            pos = n + k
            while pos < n:
                pos += slots[text[pos]] + skew
            k = pos - n
            if k < m:
                return None
            k -= adjustment
            if text[n + k] != first:
                k += mismatch_shift
                continue
            j = 1
            while True:
                k += 1
                if text[n + k] != pattern[j]:
                    break
                j += 1
                if j == m:
                    return n + k - m + 1
            if mismatch_shift > j:
                k += mismatch_shift - j
                continue
            while True:
                j = shifts[j]
                if j < 0:
                    k += 1
                    break
                if j == 0:
                    break
                while text[n + k] == pattern[j]:
                    k += 1
                    j += 1
                    if j == m:
                        return n + k - m
                    if k == 0:
                        return None
    finally:
        for j in range(m):
            slots[pattern[j]] = 0


def search_nhal(text, pattern, table=None):
    """Non-hashed skip-loop search for integer symbols below 2**16.

    ``table`` is the reusable skewed storage; pass one explicitly to
    amortize its initialization across searches (a fresh table is made
    when omitted).  The table is restored to all zeros on every exit
    path, so consecutive searches never see each other's entries.
    """
    if table is None:
        table = ReusableSkipTable()
    return SearchOutcome(_nhal(text, pattern, table))


def dispatch_search(text, pattern, capability=None, scheme=None):
    """Route to the forward search or the hashed skip-loop search.

    Forward capability always means ``search_l``.  Random access uses
    ``search_hal`` with the supplied scheme, or with the default
    registered for the element type; the zero sentinel scheme (and any
    pattern shorter than the scheme's window) lands back on the forward
    search.  When ``capability`` is omitted, sequences offering both
    ``len`` and indexing count as random access and anything merely
    iterable as forward.
    """
    if capability is None:
        cls = type(text)
        capability = (Capability.RANDOM_ACCESS
                      if hasattr(cls, "__len__") and hasattr(cls, "__getitem__")
                      else Capability.FORWARD)
    if capability is Capability.FORWARD:
        return search_l(text, pattern)
    if scheme is None:
        scheme = default_scheme_for(text)
    return search_hal(text, pattern, scheme)


ALGORITHM_NAMES = ("sf", "kmp", "l", "al", "hal", "hal2", "hal3", "hal4",
                   "hal5", "nhal")

_DNA_HAL = {"hal2": DNA2, "hal3": DNA3, "hal4": DNA4, "hal5": DNA5}


def resolve_algorithm(name, scheme=None, nhal_table=None):
    """Bind an algorithm name to a ``(text, pattern) -> SearchOutcome``
    callable.

    ``scheme`` only affects "hal"; hal2..hal5 carry fixed DNA schemes,
    and "nhal" reuses ``nhal_table`` across calls when one is given.
    """
    if name == "sf":
        return search_sf
    if name == "kmp":
        return search_kmp_basic
    if name == "l":
        return search_l
    if name == "al":
        return search_al
    if name == "hal":
        return lambda text, pattern: search_hal(text, pattern, scheme)
    if name in _DNA_HAL:
        dna = _DNA_HAL[name]
        return lambda text, pattern: search_hal(text, pattern, dna)
    if name == "nhal":
        table = nhal_table if nhal_table is not None else ReusableSkipTable()
        return lambda text, pattern: search_nhal(text, pattern, table)
    raise ValueError(f"unknown algorithm {name!r}")
