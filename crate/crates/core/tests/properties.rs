mod common;

use std::collections::BTreeSet;

use common::{cyclic_group, first_non_associative, loop5, relabel_loop, steiner_loops};
use proptest::prelude::*;
use proptest::sample::select;
use steiner_core::explorer::{commutative_canonical, steiner_normalize};
use steiner_core::{
    affine_ag23, are_isomorphic, bose, canonical_form, check_identity, cyclic_sts13, eval_term, fano,
    is_steiner_loop, is_steiner_quasigroup, loop_to_quasigroup, loop_to_sts, parse_identity, parse_term,
    projective, quasigroup_to_loop, quasigroup_to_sts, steiner_loop_10, sts_to_loop, sts_to_quasigroup,
    subloop_generated, validate_sts, Assignment, Builtin, CayleyTable, Identity, LoopTable, QuasigroupTable,
    Term, TripleSystem,
};

fn systems() -> Vec<TripleSystem> {
    vec![
        TripleSystem::new(0, vec![]).unwrap(),
        TripleSystem::new(1, vec![]).unwrap(),
        TripleSystem::new(3, vec![[0, 1, 2]]).unwrap(),
        fano(),
        affine_ag23(),
        cyclic_sts13(),
        projective(3).unwrap(),
        bose(2).unwrap(),
    ]
}

fn relabelled_system() -> impl Strategy<Value = (TripleSystem, Vec<usize>)> {
    select(systems()).prop_flat_map(|s| {
        let perm = Just((0..s.v()).collect::<Vec<_>>()).prop_shuffle();
        (Just(s), perm)
    })
}

/// A loop from the corpus with its non-identity elements shuffled.
fn relabelled_loop() -> impl Strategy<Value = LoopTable> {
    let mut loops: Vec<LoopTable> = steiner_loops().into_iter().map(|(_, t)| t).collect();
    loops.extend((1..=8).map(cyclic_group));
    loops.push(loop5());
    select(loops).prop_flat_map(|t| {
        let n = t.order();
        Just((1..n).collect::<Vec<_>>()).prop_shuffle().prop_map(move |rest| {
            let mut perm = vec![0];
            perm.extend(rest);
            relabel_loop(&t, &perm)
        })
    })
}

fn term(vars: &'static [char], with_one: bool) -> impl Strategy<Value = Term> {
    let leaf = if with_one {
        prop_oneof![4 => select(vars).prop_map(Term::var), 1 => Just(Term::One)].boxed()
    } else {
        select(vars).prop_map(Term::var).boxed()
    };
    leaf.prop_recursive(5, 24, 2, |inner| (inner.clone(), inner).prop_map(|(a, b)| Term::product(a, b)))
}

fn assignment(t: &Term, values: &[usize]) -> Assignment {
    Assignment(t.variables().into_iter().zip(values.iter().copied()).collect())
}

fn steiner_loop_for_eval() -> impl Strategy<Value = LoopTable> {
    select(vec![steiner_loop_10(), sts_to_loop(&cyclic_sts13()).unwrap(), sts_to_loop(&fano()).unwrap()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conversions_round_trip((s, perm) in relabelled_system()) {
        let s = s.relabel(&perm).unwrap();
        prop_assert!(validate_sts(s.v(), s.blocks()).valid);
        if s.v() > 0 {
            let q = sts_to_quasigroup(&s).unwrap();
            prop_assert!(is_steiner_quasigroup(&q));
            prop_assert_eq!(&quasigroup_to_sts(&q).unwrap(), &s);
            let t = quasigroup_to_loop(&q).unwrap();
            prop_assert!(is_steiner_loop(&t));
            prop_assert_eq!(&loop_to_quasigroup(&t).unwrap(), &q);
            prop_assert_eq!(&loop_to_sts(&t).unwrap(), &s);
            prop_assert_eq!(&sts_to_loop(&s).unwrap(), &t);
        }
    }

    #[test]
    fn isomorphism_is_found_both_ways((s, perm) in relabelled_system()) {
        let t = s.relabel(&perm).unwrap();
        let forward = are_isomorphic(&s, &t).unwrap();
        prop_assert_eq!(&s.relabel(&forward).unwrap(), &t);
        let back = are_isomorphic(&t, &s).unwrap();
        prop_assert_eq!(&t.relabel(&back).unwrap(), &s);
        // The labelling search is exponential in (v - 1) / 2.
        if s.v() <= 9 {
            prop_assert_eq!(canonical_form(&s).0, canonical_form(&t).0);
        }
    }

    #[test]
    fn terms_print_and_parse_back(t in term(&['x', 'y', 'z', 'w'], true)) {
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t.clone());
        let i = Identity::new(t.clone(), Term::product(t.clone(), Term::var('a')));
        prop_assert_eq!(parse_identity(&i.to_string()).unwrap(), i);
    }

    #[test]
    fn steiner_normal_form_is_idempotent_and_sound(
        t in term(&['x', 'y', 'z'], true),
        table in steiner_loop_for_eval(),
        seed in proptest::collection::vec(any::<usize>(), 3),
    ) {
        let n = steiner_normalize(&t);
        prop_assert_eq!(steiner_normalize(&n), n.clone());
        prop_assert!(n.leaves() <= t.leaves());
        let values: Vec<usize> = seed.iter().map(|s| s % table.order()).collect();
        let a = assignment(&t, &values);
        prop_assert_eq!(eval_term(&t, &table, &a).unwrap(), eval_term(&n, &table, &a).unwrap());
    }

    #[test]
    fn commutative_canonical_preserves_values_in_commutative_loops(
        t in term(&['x', 'y', 'z'], false),
        seed in proptest::collection::vec(any::<usize>(), 3),
    ) {
        let table = steiner_loop_10();
        let c = commutative_canonical(&t);
        prop_assert_eq!(commutative_canonical(&c), c.clone());
        let values: Vec<usize> = seed.iter().map(|s| s % 10).collect();
        let a = assignment(&t, &values);
        prop_assert_eq!(eval_term(&t, &table, &a).unwrap(), eval_term(&c, &table, &a).unwrap());
    }

    #[test]
    fn subloop_generation_is_a_closure_operator(
        t in relabelled_loop(),
        gens in proptest::collection::vec(any::<usize>(), 0..4),
        extra in any::<usize>(),
    ) {
        let n = t.order();
        let gens: Vec<usize> = gens.iter().map(|g| g % n).collect();
        let closed = subloop_generated(&t, &gens).unwrap();
        prop_assert!(closed.contains(&0));
        prop_assert!(gens.iter().all(|g| closed.contains(g)));
        prop_assert_eq!(&subloop_generated(&t, &closed).unwrap(), &closed);
        let mut more = gens.clone();
        more.push(extra % n);
        let bigger: BTreeSet<usize> = subloop_generated(&t, &more).unwrap().into_iter().collect();
        prop_assert!(closed.iter().all(|c| bigger.contains(c)));
        for &a in &closed {
            for &b in &closed {
                prop_assert!(closed.binary_search(&t.mul(a, b)).is_ok());
            }
        }
    }

    #[test]
    fn steiner_laws_match_the_table_predicate(t in relabelled_loop()) {
        let comm = check_identity(&Builtin::SteinerComm.identity(), &t).unwrap().holds;
        let key = check_identity(&Builtin::SteinerKey.identity(), &t).unwrap().holds;
        prop_assert_eq!(comm && key, is_steiner_loop(&t));
    }

    #[test]
    fn associativity_matches_the_nested_loop_oracle(t in relabelled_loop()) {
        let report = check_identity(&Builtin::Assoc.identity(), &t).unwrap();
        let oracle = first_non_associative(&t);
        prop_assert_eq!(report.holds, oracle.is_none());
        let witness = report.counterexample.map(|a| {
            let v: Vec<usize> = a.values().collect();
            (v[0], v[1], v[2])
        });
        prop_assert_eq!(witness, oracle);
    }

    #[test]
    fn validation_matches_the_quasigroup_predicate(
        (s, perm) in relabelled_system(),
        block in any::<usize>(),
        slot in 0usize..3,
        point in any::<usize>(),
    ) {
        prop_assume!(s.v() >= 3);
        let s = s.relabel(&perm).unwrap();
        let v = s.v();
        let mut blocks = s.blocks().to_vec();
        let i = block % blocks.len();
        blocks[i][slot] = point % v;
        let report = validate_sts(v, &blocks);
        // Rebuild the product from the blocks; any coverage defect shows up
        // as a missing or conflicting entry.
        let mut entries: Vec<Option<usize>> = vec![None; v * v];
        let mut consistent = true;
        for x in 0..v {
            entries[x * v + x] = Some(x);
        }
        for &[a, b, c] in &blocks {
            if a == b || b == c || a == c {
                consistent = false;
                continue;
            }
            for (x, y, z) in [(a, b, c), (b, a, c), (a, c, b), (c, a, b), (b, c, a), (c, b, a)] {
                match entries[x * v + y] {
                    None => entries[x * v + y] = Some(z),
                    Some(old) if old == z => {}
                    Some(_) => consistent = false,
                }
            }
        }
        let table = if consistent && entries.iter().all(Option::is_some) {
            let flat: Vec<usize> = entries.into_iter().map(Option::unwrap).collect();
            QuasigroupTable::new(v, &flat).ok()
        } else {
            None
        };
        let steiner = table.as_ref().is_some_and(is_steiner_quasigroup);
        prop_assert_eq!(report.valid, steiner);
    }
}
