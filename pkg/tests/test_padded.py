from stacker.automata import fixed_suffix_product, from_regex, is_pad_stable, pad_triple, triple_alphabet, unpad

AT = ("a", "A", "t", "T")


def test_pad_triple():
    assert pad_triple("a", "t", "") == (("a", "t", "$"),)
    assert pad_triple("", "", "") == ()
    assert pad_triple("aa", "t", "ttt") == (("a", "t", "t"), ("a", "$", "t"), ("$", "$", "t"))


def test_unpad_inverts_pad_triple():
    assert unpad(pad_triple("aTa", "t", "AAta")) == ("aTa", "t", "AAta")


def test_pad_stability():
    assert is_pad_stable(pad_triple("ab", "", "b"))
    assert not is_pad_stable((("$", "a", "a"), ("a", "$", "$")))
    assert not is_pad_stable((("$", "$", "$"),))


def test_triple_alphabet_excludes_all_pads():
    alphabet = triple_alphabet(("a", "A"))
    assert len(alphabet) == 26
    assert ("$", "$", "$") not in alphabet


def test_fixed_suffix_product():
    language = from_regex(".*aa", AT)
    fsa = fixed_suffix_product(language, "t", "AAta", AT)
    assert fsa.accepts(pad_triple("aa", "t", "AAta"))
    assert fsa.accepts(pad_triple("taa", "t", "AAta"))
    assert fsa.accepts(pad_triple("ttaaaaa", "t", "AAta"))
    assert not fsa.accepts(pad_triple("a", "t", "AAta"))
    assert not fsa.accepts(pad_triple("aa", "t", "AAtA"))
    assert not fsa.accepts(pad_triple("aa", "T", "AAta"))
    assert not fsa.accepts(pad_triple("aa", "t", "AAt"))
