use proptest::prelude::*;
use spfiber::hyperoctahedral::{irr_dim, ConjClassLabel, SignedPermutation};
use spfiber::orbit_geometry::{component_nonempty, flag_dim, orbit_dim, richardson};
use spfiber::partitions::{enumerate_q, type_c_collapse};
use spfiber::springer_map::{default_padding, springer_orbit, springer_trace_padded};
use spfiber::{Bipartition, Partition, SymComposition, TypeCPartition};

fn partition(max_size: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_size.max(1), 0..=max_size)
        .prop_map(Partition::from_unsorted)
}

fn bipartition(max: usize) -> impl Strategy<Value = Bipartition> {
    (partition(max), partition(max)).prop_map(|(a, b)| Bipartition::new(a, b))
}

fn signed_perm(d: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((0..d).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(any::<bool>(), d))
        .prop_map(|(p, f)| SignedPermutation::new(p, f).unwrap())
}

fn triple() -> impl Strategy<Value = (SignedPermutation, SignedPermutation, SignedPermutation)> {
    (0usize..=6).prop_flat_map(|d| (signed_perm(d), signed_perm(d), signed_perm(d)))
}

fn composition() -> impl Strategy<Value = SymComposition> {
    (0usize..=3, prop::collection::vec(0usize..=3, 4)).prop_map(|(n, v)| {
        let mut entries: Vec<usize> = v[..n].to_vec();
        entries.push(2 * v[3]);
        entries.extend(v[..n].iter().rev());
        SymComposition::new(entries).unwrap()
    })
}

proptest! {
    #[test]
    fn dual_is_an_involution(p in partition(12)) {
        prop_assert_eq!(p.dual().dual(), p.clone());
        prop_assert_eq!(p.dual().size(), p.size());
    }

    #[test]
    fn partition_text_roundtrip(p in partition(12)) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }

    #[test]
    fn bipartition_text_roundtrip(b in bipartition(6)) {
        prop_assert_eq!(b.to_string().parse::<Bipartition>().unwrap(), b.clone());
        prop_assert_eq!(b.dual().dual(), b);
    }

    #[test]
    fn composition_text_roundtrip(c in composition()) {
        prop_assert_eq!(c.to_string().parse::<SymComposition>().unwrap(), c);
    }

    #[test]
    fn class_label_roundtrip((w, _, _) in triple()) {
        let label = w.cycle_type();
        prop_assert_eq!(label.to_string().parse::<ConjClassLabel>().unwrap(), label);
    }

    #[test]
    fn group_axioms((a, b, c) in triple()) {
        let ab_c = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let a_bc = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert!(a.multiply(&a.inverse()).unwrap().is_identity());
        prop_assert_eq!(a.multiply(&SignedPermutation::identity(a.rank())).unwrap(), a.clone());
    }

    #[test]
    fn cycle_type_is_a_class_function((w, g, _) in triple()) {
        let conj = g.multiply(&w).unwrap().multiply(&g.inverse()).unwrap();
        prop_assert_eq!(conj.cycle_type(), w.cycle_type());
        prop_assert_eq!(w.inverse().cycle_type(), w.cycle_type());
    }

    #[test]
    fn springer_orbit_is_type_c_and_padding_stable(rho in bipartition(5), extra in 0usize..6) {
        let a = springer_orbit(&rho).unwrap();
        prop_assert_eq!(a.size(), 2 * rho.size());
        let padded = springer_trace_padded(&rho, default_padding(&rho) + extra).unwrap();
        prop_assert_eq!(padded.orbit, a);
    }

    #[test]
    fn collapse_is_type_c_and_below(p in partition(10)) {
        let p = if p.size() % 2 == 1 { Partition::from_unsorted(p.parts().iter().copied().chain([1])) } else { p };
        let c = type_c_collapse(&p).unwrap();
        prop_assert!(c.is_type_c());
        prop_assert!(c.dominance_leq(&p).unwrap());
        if p.is_type_c() {
            prop_assert_eq!(c.into_partition(), p);
        }
    }

    #[test]
    fn richardson_self_check(c in composition()) {
        let r = richardson(&c).unwrap();
        prop_assert_eq!(orbit_dim(&r), 2 * flag_dim(&c));
        prop_assert!(component_nonempty(&TypeCPartition::new(Partition::from_unsorted(vec![1; c.total()])).unwrap(), &c).unwrap());
    }

    #[test]
    fn degrees_are_positive(rho in bipartition(4)) {
        prop_assert!(irr_dim(&rho) >= 1);
    }
}

#[test]
fn enumerate_q_sizes() {
    let binomial = |n: usize, k: usize| (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1));
    for n in 0..=3 {
        for d in 0..=4 {
            let q = enumerate_q(n, 2 * d).unwrap();
            assert_eq!(q.len(), binomial(d + n, n));
            assert!(q.windows(2).all(|w| w[0] > w[1]));
        }
    }
}
