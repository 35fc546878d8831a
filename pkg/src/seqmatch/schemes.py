"""Hash schemes that parameterize the skip-loop searches.

A scheme bundles a table size (``hash_range_max``), the number of
trailing elements it reads per probe (``suffix_size``), and
``hash(seq, pos)`` mapping the window ``seq[pos-suffix_size+1 .. pos]``
into ``[0, hash_range_max)``.  The one hard requirement is
compatibility with element equality: equal windows must hash equal.
Hash quality beyond that only affects speed, never correctness, so the
built-ins lean toward cheap arithmetic.
"""

from .errors import WindowUnderflow


def _val(x):
    """Integer value of a symbol: ints pass through, characters use ord."""
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        return ord(x)
    return x.__index__()


class HashScheme:
    """Base class; subclasses override the attributes and ``hash``."""

    hash_range_max = 0
    suffix_size = 0
    # When set, hash(seq, i) == _val(seq[i]) & fold_mask, so the skip
    # loop may inline the lookup for int-valued sequences.
    fold_mask = None

    def hash(self, seq, pos):
        raise NotImplementedError


class ZeroScheme(HashScheme):
    """Sentinel scheme with no usable hash; forces the forward search."""

    def hash(self, seq, pos):
        return 0


class ByteScheme(HashScheme):
    """Identity hash over byte-valued (or single-character) elements."""

    hash_range_max = 256
    suffix_size = 1
    fold_mask = 255

    def hash(self, seq, pos):
        return _val(seq[pos]) & 255


class Mod256Scheme(HashScheme):
    """Low eight bits of a wide integer symbol (16-bit alphabets and up)."""

    hash_range_max = 256
    suffix_size = 1
    fold_mask = 255

    def hash(self, seq, pos):
        return _val(seq[pos]) & 255


# The DNA schemes fold several trailing symbols into one bucket by
# adding shifted copies of their values.  They were built for 4-letter
# alphabets with long patterns but accept any byte-valued data.

class DnaScheme2(HashScheme):
    hash_range_max = 64
    suffix_size = 2

    def hash(self, seq, pos):
        return (_val(seq[pos - 1]) + (_val(seq[pos]) << 3)) & 63


class DnaScheme3(HashScheme):
    hash_range_max = 512
    suffix_size = 3

    def hash(self, seq, pos):
        return (_val(seq[pos - 2]) + (_val(seq[pos - 1]) << 3)
                + (_val(seq[pos]) << 6)) & 511


class DnaScheme4(HashScheme):
    hash_range_max = 256
    suffix_size = 4

    def hash(self, seq, pos):
        return (_val(seq[pos - 3]) + (_val(seq[pos - 2]) << 2)
                + (_val(seq[pos - 1]) << 4) + (_val(seq[pos]) << 6)) & 255


class DnaScheme5(HashScheme):
    hash_range_max = 256
    suffix_size = 5

    def hash(self, seq, pos):
        return (_val(seq[pos - 4]) + (_val(seq[pos - 3]) << 2)
                + (_val(seq[pos - 2]) << 4) + (_val(seq[pos - 1]) << 6)
                + (_val(seq[pos]) << 8)) & 255


class WordHeadScheme(HashScheme):
    """First character of a word element; equal words share a head."""

    hash_range_max = 256
    suffix_size = 1

    def hash(self, seq, pos):
        word = seq[pos]
        if len(word) == 0:
            return 0
        return _val(word[0]) & 255


def hash_window(scheme, seq, pos):
    """Hash the window of ``scheme.suffix_size`` elements ending at ``pos``.

    Bounds-checked front end over ``scheme.hash``; the searches call
    the scheme directly once the window is known to fit.
    """
    if pos < scheme.suffix_size - 1:
        raise WindowUnderflow(
            f"position {pos} leaves no room for a "
            f"{scheme.suffix_size}-element window")
    return scheme.hash(seq, pos)


BYTE = ByteScheme()
MOD256 = Mod256Scheme()
DNA2 = DnaScheme2()
DNA3 = DnaScheme3()
DNA4 = DnaScheme4()
DNA5 = DnaScheme5()
WORD_HEAD = WordHeadScheme()
ZERO = ZeroScheme()

SCHEMES = {
    "byte": BYTE,
    "mod256": MOD256,
    "dna2": DNA2,
    "dna3": DNA3,
    "dna4": DNA4,
    "dna5": DNA5,
    "word": WORD_HEAD,
    "zero": ZERO,
}


def default_scheme_for(text):
    """Static element-type association used by ``dispatch_search``.

    Bytes and plain strings get the identity byte hash, integer
    elements the low-byte fold, word sequences the word-head hash, and
    anything else the zero sentinel (which routes to the forward
    search).
    """
    if isinstance(text, (bytes, bytearray, memoryview, str)):
        return BYTE
    try:
        first = text[0]
    except (IndexError, TypeError, KeyError):
        return ZERO
    if isinstance(first, int):
        return MOD256
    if isinstance(first, (str, bytes, bytearray)):
        # bare strings/bytes were handled above, so elements here are
        # whole words
        return WORD_HEAD
    return ZERO
