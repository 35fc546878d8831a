import doctest

import seqmatch.search
import seqmatch.tables


def test_module_doctests():
    for mod in (seqmatch.tables, seqmatch.search):
        failed, attempted = doctest.testmod(mod)
        assert attempted > 0
        assert failed == 0, mod.__name__
