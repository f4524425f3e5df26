use sgvariety::band::free_band;
use sgvariety::corpus::{exhaustive, standard, CorpusItem, DEFAULT_SEED};
use sgvariety::hierarchy::*;
use sgvariety::{Budget, FiniteSemigroup};

fn corpus() -> Vec<CorpusItem> {
    standard(DEFAULT_SEED, &Budget::default()).unwrap()
}

fn assert_complete(r: AgreementReport) {
    assert!(r.complete(), "{}: {:?} / skipped {:?}", r.suite, r.disagreements, r.skipped);
}

#[test]
fn main_theorem_m1_everywhere() {
    assert_complete(verify_main_theorem(&corpus(), 1, &Budget::default()));
}

#[test]
fn da_routes_agree() {
    assert_complete(verify_da_equivalence(&corpus()));
}

#[test]
fn nil_corner_m2_m3() {
    let c = corpus();
    assert_complete(verify_nil_corner(&c, 2));
    assert_complete(verify_nil_corner(&c, 3));
}

#[test]
fn generator_bound() {
    assert_complete(verify_generator_bound(&corpus()));
}

#[test]
fn r2_identity_matches_usual() {
    assert_complete(verify_r2_identity(&corpus(), &Budget::default()));
}

#[test]
fn chain_and_duality() {
    for item in exhaustive(4) {
        let s = &item.semigroup;
        let op = s.opposite();
        for m in 1..5 {
            let r = in_rm(s, m).unwrap();
            if r {
                assert!(in_rm(s, m + 1).unwrap());
                assert!(in_da(s, DaRoute::Regular).unwrap());
            }
            assert_eq!(r, in_lm(&op, m).unwrap());
        }
    }
}

#[test]
fn report_levels_are_monotone() {
    for item in corpus().iter().step_by(7) {
        let r = classify(&item.semigroup, 5).unwrap();
        for w in r.levels.windows(2) {
            assert!(!w[0].r || w[1].r);
            assert!(!w[0].l || w[1].l);
        }
        if !r.in_da {
            assert!(r.min_r.is_none() && r.min_l.is_none());
        }
    }
}

#[test]
fn strictness_witnesses() {
    let lz = FiniteSemigroup::left_zero(2);
    assert!(in_rm(&lz, 2).unwrap() && !in_rm(&lz, 1).unwrap());
    let rz = FiniteSemigroup::right_zero(2);
    assert!(in_lm(&rz, 2).unwrap() && !in_lm(&rz, 1).unwrap());
    let fb2 = free_band(2).unwrap().semigroup;
    assert!(in_rm(&fb2, 3).unwrap() && in_lm(&fb2, 3).unwrap());
    assert!(!in_rm(&fb2, 2).unwrap() && !in_lm(&fb2, 2).unwrap());
    let fb3 = free_band(3).unwrap().semigroup;
    assert!(in_rm(&fb3, 4).unwrap() && in_lm(&fb3, 4).unwrap());
    assert!(!in_rm(&fb3, 3).unwrap() && !in_lm(&fb3, 3).unwrap());
}

#[test]
fn classify_free_band_two() {
    let r = classify(&free_band(2).unwrap().semigroup, 5).unwrap();
    assert_eq!((r.min_r, r.min_l), (Some(3), Some(3)));
}

#[test]
fn local_trivial_is_li() {
    use sgvariety::malcev::VarietyPredicate;
    use sgvariety::omega::IdentitySet;
    let li = IdentitySet::builtin("LI").unwrap();
    let trivial_monoid = VarietyPredicate::monoid("I_M", |s| Ok(s.order() == 1));
    for item in exhaustive(4) {
        let s = &item.semigroup;
        assert_eq!(in_local(s, &trivial_monoid).unwrap(), li.satisfied_by(s, &Budget::default()).unwrap());
    }
}
