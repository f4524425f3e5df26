use proptest::prelude::*;
use sgvariety::band::{phi, phi_identity, Word};
use sgvariety::corpus::{standard, CorpusItem, DEFAULT_SEED};
use sgvariety::omega::{eval, Assignment, IdentitySet, Notation, TermArena, TermId};
use sgvariety::{Budget, FiniteSemigroup};
use std::collections::HashSet;
use std::sync::OnceLock;

fn corpus() -> &'static [CorpusItem] {
    static C: OnceLock<Vec<CorpusItem>> = OnceLock::new();
    C.get_or_init(|| standard(DEFAULT_SEED, &Budget::default()).unwrap())
}

#[derive(Clone, Debug)]
enum T {
    Var(u8),
    Cat(Box<T>, Box<T>),
    Om(Box<T>),
    OmM1(Box<T>),
}

fn arb_term() -> impl Strategy<Value = T> {
    let leaf = (0u8..3).prop_map(T::Var);
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| T::Cat(Box::new(a), Box::new(b))),
            inner.clone().prop_map(|a| T::Om(Box::new(a))),
            inner.prop_map(|a| T::OmM1(Box::new(a))),
        ]
    })
}

fn build(a: &mut TermArena, t: &T) -> TermId {
    match t {
        T::Var(k) => a.var(["x", "y", "z"][*k as usize]),
        T::Cat(l, r) => {
            let (l, r) = (build(a, l), build(a, r));
            a.concat(l, r)
        }
        T::Om(c) => {
            let c = build(a, c);
            a.omega(c)
        }
        T::OmM1(c) => {
            let c = build(a, c);
            a.omega_minus_one(c)
        }
    }
}

fn assignment(s: &FiniteSemigroup, vals: &[usize]) -> Assignment {
    ["x", "y", "z"].iter().zip(vals).fold(Assignment::new(), |acc, (n, v)| acc.bind(n, v % s.order()))
}

fn holds(set: &str, s: &FiniteSemigroup) -> bool {
    IdentitySet::parse(set).unwrap().satisfied_by(s, &Budget::default()).unwrap()
}

#[test]
fn idempotency_is_band() {
    for item in corpus() {
        let s = &item.semigroup;
        assert_eq!(holds("x x = x", s), s.is_band(), "{}", item.id);
    }
}

#[test]
fn left_zero_identities() {
    for item in corpus() {
        let s = &item.semigroup;
        let lz = s.is_band() && s.elements().all(|x| s.elements().all(|y| s.mul(x, y) == x));
        assert_eq!(IdentitySet::builtin("LZ").unwrap().satisfied_by(s, &Budget::default()).unwrap(), lz, "{}", item.id);
    }
}

#[test]
fn r_identity_on_bands_is_r_triviality() {
    let r = IdentitySet::builtin("R").unwrap();
    let mut bands = 0;
    for item in corpus().iter().filter(|i| i.semigroup.is_band()) {
        bands += 1;
        let s = &item.semigroup;
        assert_eq!(r.satisfied_by(s, &Budget::default()).unwrap(), s.is_r_trivial(), "{}", item.id);
    }
    assert!(bands > 10);
}

#[test]
fn phi_dag_stays_small() {
    let mut prev_tree = 0;
    for m in 2..=6 {
        let mut a = TermArena::new();
        let id = phi_identity(&mut a, m, false).unwrap();
        let nodes = a.reachable(&[id.lhs, id.rhs]).len();
        let tree = a.tree_size(id.rhs);
        assert!(nodes <= 4 * m * m * m, "m = {m}: {nodes} nodes");
        assert!(tree > prev_tree);
        prev_tree = tree;
    }
    let mut a = TermArena::new();
    let id = phi_identity(&mut a, 6, false).unwrap();
    let mirrored = phi_identity(&mut a, 6, true).unwrap();
    assert_eq!(a.reachable(&[id.lhs, id.rhs]).len(), 79);
    assert_eq!(a.reachable(&[id.lhs, id.rhs, mirrored.lhs, mirrored.rhs]).len(), 104);
    assert_eq!((a.tree_size(id.lhs), a.tree_size(id.rhs)), (1372, 3399));
}

#[test]
fn shared_subterms_are_one_node() {
    let mut a = TermArena::new();
    let t = a.parse_term("(x y)^w x (x y)^w").unwrap();
    let u = a.parse_term("(x y)^w").unwrap();
    assert_eq!(a.reachable(&[t]).len(), 6);
    assert!(a.reachable(&[t]).contains(&u));
    let x3 = phi(&mut a, &Word::parse("x3").unwrap());
    let x3x3 = phi(&mut a, &Word::parse("x3 x3").unwrap());
    assert_eq!(a.reachable(&[x3x3]).len(), a.reachable(&[x3]).len() + 1);
}

#[test]
fn ascii_and_unicode_agree() {
    let mut a = TermArena::new();
    let t = a.parse_term("(x^(w-1) y)^w").unwrap();
    assert_eq!(a.render_with(t, Notation::Ascii), "(x^(w-1) y)^w");
    let u = a.parse_term(&a.render_with(t, Notation::Unicode)).unwrap();
    assert_eq!(t, u);
}

#[test]
fn parse_errors() {
    let mut a = TermArena::new();
    for bad in ["", "(x", "x^", "x^v", "x )", "= x"] {
        assert!(a.parse_term(bad).is_err(), "{bad:?}");
    }
    assert!(a.parse_identity("x y").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn render_parse_round_trip(t in arb_term()) {
        let mut a = TermArena::new();
        let id = build(&mut a, &t);
        for notation in [Notation::Ascii, Notation::Unicode] {
            let text = a.render_with(id, notation);
            let back = a.parse_term(&text).unwrap();
            prop_assert_eq!(a.render_with(back, Notation::Ascii), a.render_with(id, Notation::Ascii));
            // concatenation is re-associated to the left, so compare values too
            let s = &corpus()[text.len() % corpus().len()].semigroup;
            let asg = assignment(s, &[0, 1, 2]);
            prop_assert_eq!(eval(s, &a, back, &asg).unwrap(), eval(s, &a, id, &asg).unwrap());
        }
    }

    #[test]
    fn eval_is_a_morphism(u in arb_term(), v in arb_term(), pick in 0usize..10_000, vals in prop::collection::vec(0usize..64, 3)) {
        let s = &corpus()[pick % corpus().len()].semigroup;
        let mut a = TermArena::new();
        let (tu, tv) = (build(&mut a, &u), build(&mut a, &v));
        let uv = a.concat(tu, tv);
        let asg = assignment(s, &vals);
        let (x, y) = (eval(s, &a, tu, &asg).unwrap(), eval(s, &a, tv, &asg).unwrap());
        prop_assert_eq!(eval(s, &a, uv, &asg).unwrap(), s.mul(x, y));
        let w = a.omega(tu);
        prop_assert_eq!(eval(s, &a, w, &asg).unwrap(), s.omega_power(x));
        let w1 = a.omega_minus_one(tu);
        let e = eval(s, &a, w1, &asg).unwrap();
        prop_assert_eq!(s.mul(e, x), s.omega_power(x));
    }

    #[test]
    fn hash_consing_has_no_duplicates(t in arb_term(), u in arb_term()) {
        let mut a = TermArena::new();
        let x = build(&mut a, &t);
        let n = a.len();
        let again = build(&mut a, &t);
        prop_assert_eq!(x, again);
        prop_assert_eq!(a.len(), n);
        let y = build(&mut a, &u);
        let reach = a.reachable(&[x, y]);
        let distinct: HashSet<_> = reach.iter().map(|&t| a.node(t)).collect();
        prop_assert_eq!(distinct.len(), reach.len());
    }
}
