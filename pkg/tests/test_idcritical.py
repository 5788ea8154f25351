from bindlab import generators as gen
from bindlab.factors import covered_oracle, is_fractional_ab_covered
from bindlab.graph import delete_vertices, is_independent
from bindlab.idcritical import (
    SizeProfile,
    id_critical_profile,
    is_id_critical_covered,
    is_id_critical_covered_maximal_profile,
    residual_verdict,
)

from conftest import all_subsets


def brute_idcc(G, ab, include_empty=True):
    for I in all_subsets(G.n):
        if not I and not include_empty:
            continue
        if is_independent(G, I) and not covered_oracle(delete_vertices(G, I).graph, ab).covered:
            return False
    return True


def test_k2():
    v = is_id_critical_covered(gen.complete(2), (1, 1))
    assert not v.holds
    assert v.failing_set.members() == (0,)
    assert v.inner.witness.S.members() == ()
    assert v.inner.witness.T.members() == (1,)


def test_c5_fails_at_empty_set():
    v = is_id_critical_covered(gen.cycle(5), (1, 1))
    assert not v.holds and v.failing_set.members() == ()


def test_k7():
    assert is_id_critical_covered(gen.complete(7), (2, 2)).holds


def test_profiles():
    assert id_critical_profile(gen.complete(7), (2, 2)) == {0: SizeProfile(1, 0), 1: SizeProfile(7, 0)}
    assert id_critical_profile(gen.cycle(5), (1, 1))[0] == SizeProfile(0, 1)
    assert id_critical_profile(gen.path(3), (1, 1))[0] == SizeProfile(0, 1)
    assert is_id_critical_covered_maximal_profile is id_critical_profile


def test_exclude_empty_set():
    # C_4 minus one vertex is P_3, which has no fractional [1,1]-factor
    assert not is_id_critical_covered(gen.cycle(4), (1, 1), include_empty=False).holds
    # K_3 is not [1,1]-covered, but every K_3 - v is K_2
    K3 = gen.complete(3)
    v = is_id_critical_covered(K3, (1, 1))
    assert not v.holds and v.failing_set.members() == ()
    assert is_id_critical_covered(K3, (1, 1), include_empty=False).holds


def test_matches_brute_force(atlas_small):
    for G in atlas_small:
        for ab in [(1, 1), (1, 2), (2, 2), (2, 3)]:
            v = is_id_critical_covered(G, ab)
            assert v.holds == brute_idcc(G, ab), (G.edges, ab)


def test_witness_in_original_labels(atlas_small):
    for G in atlas_small[::5]:
        for ab in [(1, 2), (2, 2)]:
            v = is_id_critical_covered(G, ab)
            if v.holds:
                assert is_fractional_ab_covered(G, ab).covered
                for u in range(G.n):
                    assert is_fractional_ab_covered(delete_vertices(G, [u]).graph, ab).covered
                continue
            I = v.failing_set
            assert is_independent(G, I)
            assert residual_verdict(G, I, ab) == v.inner
            w = v.inner.witness
            assert not (w.S.mask | w.T.mask) & I.mask
