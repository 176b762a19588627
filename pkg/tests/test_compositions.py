import pytest

from arndt.compositions import (ANTIPALINDROMIC, ARNDT, Family, flip_class,
                                is_antipalindromic, is_arndt, is_k_arndt,
                                is_k_block_arndt,
                                is_reduced_ap_representative)
from arndt.counting import compositions_of


def test_is_arndt():
    assert is_arndt((2, 1, 2, 1))
    assert is_arndt(())
    assert not is_arndt((1, 1, 2))
    assert is_arndt((3, 1, 2))          # trailing unpaired part is free
    assert not is_arndt((1, 2))


def test_is_k_arndt():
    assert is_k_arndt((5, 1, 4), 3)
    assert is_k_arndt((1, 2), -3)       # 1 > 2 - 3
    assert not is_k_arndt((5, 2), 3)
    for n in range(11):
        for comp in compositions_of(n):
            assert is_k_arndt(comp, 0) == is_arndt(comp)


def test_is_k_block_arndt():
    assert is_k_block_arndt((4, 2, 1, 2, 1), 3)
    assert is_k_block_arndt((5, 3, 1, 1), 3)    # trailing (1) vacuous
    assert not is_k_block_arndt((5, 1, 1, 1), 3)
    assert not is_k_block_arndt((4, 1, 2, 3), 3)
    for n in range(9):
        for comp in compositions_of(n):
            assert is_k_block_arndt(comp, 1)
            assert is_k_block_arndt(comp, 2) == is_arndt(comp)


def test_is_k_block_arndt_rejects_bad_k():
    with pytest.raises(ValueError):
        is_k_block_arndt((3, 1), 0)


def test_is_antipalindromic():
    assert is_antipalindromic((1, 2, 6, 3, 2))
    assert is_antipalindromic(())
    assert not is_antipalindromic((1, 2, 1))
    assert is_antipalindromic((7,))     # middle index exempt


def test_is_reduced_ap_representative():
    assert is_reduced_ap_representative((2, 3, 6, 2, 1))
    assert not is_reduced_ap_representative((1, 2, 6, 3, 2))
    assert is_reduced_ap_representative((5,))
    assert is_reduced_ap_representative(())


def test_flip_class_worked_example():
    cls = flip_class((1, 2, 6, 3, 2))
    assert cls == {(1, 2, 6, 3, 2), (2, 2, 6, 3, 1), (1, 3, 6, 2, 2),
                   (2, 3, 6, 2, 1)}
    assert sum(is_reduced_ap_representative(c) for c in cls) == 1


def test_flip_class_small():
    assert flip_class((7,)) == {(7,)}
    assert flip_class((3, 1)) == {(3, 1), (1, 3)}


def test_flip_class_rejects_non_antipalindromic():
    with pytest.raises(ValueError):
        flip_class((1, 2, 1))


@pytest.mark.parametrize("n", range(11))
def test_flip_class_sizes(n):
    for comp in compositions_of(n):
        if is_antipalindromic(comp):
            cls = flip_class(comp)
            assert len(cls) == 1 << (len(comp) // 2)
            assert sum(is_reduced_ap_representative(c) for c in cls) == 1


def test_family_validation():
    assert ARNDT.member((2, 1))
    assert Family("k-arndt", -2).member((1, 2))
    assert Family("block-arndt", 3).member((5, 3, 1, 1))
    assert ANTIPALINDROMIC.member((1, 2, 6, 3, 2))
    assert Family("all").member((1, 1, 1))
    with pytest.raises(ValueError):
        Family("k-arndt")               # k required
    with pytest.raises(ValueError):
        Family("block-arndt", 0)        # k >= 1
    with pytest.raises(ValueError):
        Family("arndt", 2)              # no parameter
    with pytest.raises(ValueError):
        Family("fibonacci")
