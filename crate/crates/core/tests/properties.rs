use dspkit::genericity::{
    formal_assignment, gcd_obstruction, is_generic, rational_assignment, trace_condition, Mode,
};
use dspkit::jnf::{Jnf, MultiplicityVector};
use dspkit::reduction::{decide, psi_step, psi_step_variants};
use dspkit::rigidity::{antipassage_targets, defect, passage, rebalance_two};
use dspkit::{ConjugacyShape, JnfTuple, Partition, Pmv};
use proptest::prelude::*;

fn partition_of(n: u64) -> impl Strategy<Value = Partition> {
    // Cut points in 1..n give a composition of n; sorting gives a partition.
    proptest::collection::btree_set(1..n.max(2), 0..n as usize).prop_map(move |cuts| {
        let mut raw = Vec::new();
        let mut prev = 0;
        for c in cuts.into_iter().filter(|&c| c < n) {
            raw.push(c - prev);
            prev = c;
        }
        raw.push(n - prev);
        Partition::normalize(&raw)
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    (1u64..=40).prop_flat_map(partition_of)
}

fn pmv(max_n: u64, max_entries: usize) -> impl Strategy<Value = Pmv> {
    (2u64..=max_n, 2..=max_entries).prop_flat_map(|(n, k)| {
        proptest::collection::vec(partition_of(n), k)
            .prop_map(|ps| Pmv::new(ps.into_iter().map(MultiplicityVector::new).collect()).unwrap())
    })
}

fn jnf_of(n: u64) -> impl Strategy<Value = Jnf> {
    partition_of(n).prop_flat_map(|sizes| {
        sizes
            .parts()
            .iter()
            .map(|&s| partition_of(s))
            .collect::<Vec<_>>()
            .prop_map(|slots| Jnf::new(slots).unwrap())
    })
}

fn jnf_tuple(max_n: u64, max_entries: usize) -> impl Strategy<Value = JnfTuple> {
    (2u64..=max_n, 2..=max_entries).prop_flat_map(|(n, k)| {
        proptest::collection::vec(jnf_of(n), k).prop_map(|e| JnfTuple::new(e).unwrap())
    })
}

proptest! {
    #[test]
    fn dual_is_an_involution(p in partition()) {
        let d = p.dual();
        prop_assert_eq!(d.size(), p.size());
        prop_assert_eq!(d.first() as usize, p.len());
        prop_assert_eq!(d.dual(), p);
    }

    #[test]
    fn d_is_even_and_bounded(p in partition()) {
        let m = MultiplicityVector::new(p);
        let n = m.size();
        prop_assert_eq!(m.d() % 2, 0);
        prop_assert!(m.d() <= n * n - n);
        prop_assert!(m.r() < n);
        prop_assert_eq!(m.d() == 0, m.is_scalar());
    }

    #[test]
    fn jnf_d_is_even_and_bounded(j in (1u64..=12).prop_flat_map(jnf_of)) {
        let n = j.size();
        prop_assert_eq!(j.d() % 2, 0);
        prop_assert!(j.d() <= n * n - n);
    }

    #[test]
    fn corresponding_diagonal_keeps_r_and_d(j in (1u64..=14).prop_flat_map(jnf_of)) {
        let m = j.corresponding_diagonal();
        prop_assert_eq!(m.size(), j.size());
        prop_assert_eq!(m.r(), j.r());
        prop_assert_eq!(m.d(), j.d());
    }

    #[test]
    fn defect_is_constant_along_traces(t in pmv(15, 5)) {
        let defects = decide(&t).defects();
        prop_assert!(defects.iter().all(|&x| x == defect(&t)));
    }

    #[test]
    fn jnf_defect_is_constant_along_traces(t in jnf_tuple(10, 4)) {
        let defects = decide(&t).defects();
        prop_assert!(defects.iter().all(|&x| x == defect(&t)));
    }

    #[test]
    fn size_strictly_drops(t in pmv(15, 5)) {
        let trace = decide(&t);
        prop_assert!(trace.steps.len() as u64 <= t.n());
        prop_assert!(trace.steps.windows(2).all(|w| w[1].n() < w[0].n()));
    }

    #[test]
    fn crosscheck_with_corresponding_diagonal(t in jnf_tuple(10, 3)) {
        let diag = t.corresponding_diagonal();
        prop_assert_eq!(defect(&t), defect(&diag));
        prop_assert_eq!(decide(&t).solvable(), decide(&diag).solvable());
    }

    #[test]
    fn tie_variants_share_the_diagonal_step(t in jnf_tuple(10, 3)) {
        if let Ok(variants) = psi_step_variants(&t) {
            let expected = psi_step(&t.corresponding_diagonal()).unwrap();
            for v in &variants {
                prop_assert_eq!(&v.corresponding_diagonal(), &expected);
                prop_assert_eq!(decide(v).solvable(), decide(&expected).solvable());
            }
        }
    }

    #[test]
    fn passage_round_trip(p in partition()) {
        let x = MultiplicityVector::new(p);
        if let Ok(y) = passage(&x) {
            prop_assert_eq!(y.r(), x.r());
            prop_assert!(y.d() < x.d());
            prop_assert!(antipassage_targets(&y).contains(&x));
        }
        for z in antipassage_targets(&x) {
            prop_assert_eq!(passage(&z).unwrap(), x.clone());
        }
    }

    #[test]
    fn rebalance_keeps_r_and_drops_d(
        (n, b, w) in (4u64..60)
            .prop_flat_map(|n| (Just(n), 1..=n / 2 - 1))
            .prop_flat_map(|(n, b)| (Just(n), Just(b), 1..=b))
    ) {
        let first = MultiplicityVector::from_raw(&[n - b, b]);
        let second = MultiplicityVector::from_raw(&[n - w, w]);
        let (x, y) = rebalance_two(&first, &second).unwrap();
        prop_assert_eq!(x.r() + y.r(), first.r() + second.r());
        prop_assert!(x.d() + y.d() < first.d() + second.d());
    }

    #[test]
    fn additive_relations_are_multiplicative_relations(t in pmv(7, 3), seed in any::<u64>()) {
        let a = rational_assignment(&t, Mode::Additive, 0, seed);
        prop_assume!(a.validate().is_ok());
        prop_assert!(trace_condition(&a));
        let additive = is_generic(&a).unwrap();
        let mut m = a.clone();
        m.mode = Mode::Multiplicative;
        let multiplicative = is_generic(&m).unwrap();
        if !additive.generic {
            prop_assert!(!multiplicative.generic);
        }
        if additive.generic && multiplicative.generic {
            prop_assert_eq!(additive.cases, multiplicative.cases);
        }
    }

    #[test]
    fn formal_assignments_are_generic_without_common_divisor(t in pmv(9, 4), seed in any::<u64>()) {
        let a = formal_assignment(&t, Mode::Additive, 0, seed);
        prop_assert!(trace_condition(&a));
        prop_assert_eq!(is_generic(&a).unwrap().generic, gcd_obstruction(&t).is_none());
    }
}
