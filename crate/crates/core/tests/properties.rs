//! Randomized invariants.

use exuniv::lr::{lr_coefficient, multi_lr_coefficient, product_set};
use exuniv::partition::{parse_partition, Partition, PartitionFamily};
use exuniv::repn::{Permutation, YoungBasis};
use exuniv::tableau::{enumerate_standard, tableau_from_content_vector};
use proptest::prelude::*;

fn partition(max_size: usize, max_rows: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=max_size.max(1), 0..=max_rows)
        .prop_map(Partition::from_unsorted)
        .prop_filter("size bound", move |p| p.size() <= max_size)
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_one_line(v).unwrap())
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(l in partition(12, 12)) {
        prop_assert_eq!(l.conjugate().conjugate(), l.clone());
        prop_assert_eq!(l.classify().self_conjugate, l == l.conjugate());
        prop_assert_eq!(l.conjugate().size(), l.size());
    }

    #[test]
    fn hook_kind_matches_definition(l in partition(12, 12)) {
        let n = l.size();
        let r = l.rows().saturating_sub(1);
        let is_hook_form = n >= 3 && l.part(1) == n - r && (2..=l.rows()).all(|i| l.part(i) == 1) && r > 0 && r + 1 < n;
        prop_assert_eq!(l.classify().kind.is_hook(), is_hook_form);
        prop_assert_eq!(l.classify().kind == exuniv::partition::PartitionKind::Proper, l.part(2) > 1);
    }

    #[test]
    fn partwise_sum_is_commutative_and_associative(a in partition(10, 5), b in partition(10, 5), c in partition(10, 5)) {
        prop_assert_eq!(a.partwise_sum(&b), b.partwise_sum(&a));
        prop_assert_eq!(a.partwise_sum(&b).partwise_sum(&c), a.partwise_sum(&b.partwise_sum(&c)));
    }

    #[test]
    fn text_round_trips(l in partition(15, 8)) {
        prop_assert_eq!(parse_partition(&l.to_string()).unwrap(), l);
    }

    #[test]
    fn cartan_coefficient_is_one(a in partition(6, 4), b in partition(6, 4)) {
        prop_assert_eq!(lr_coefficient(&a, &b, &a.partwise_sum(&b)), 1);
    }

    #[test]
    fn multi_coefficient_ignores_order(
        members in prop::collection::vec(partition(4, 3), 1..=3),
        pick in any::<prop::sample::Index>(),
    ) {
        let total: usize = members.iter().map(Partition::size).sum();
        let fam = PartitionFamily::with_default_d(members.clone());
        let ps = product_set(&fam, total.max(1)).unwrap();
        if !ps.members.is_empty() {
            let nu = &ps.members[pick.index(ps.members.len())];
            let mut rev = members.clone();
            rev.reverse();
            let fam_rev = PartitionFamily::with_default_d(rev);
            let c = multi_lr_coefficient(&fam, nu);
            prop_assert_eq!(c, multi_lr_coefficient(&fam_rev, nu));
            prop_assert_eq!(c, ps.coefficient(nu));
        }
    }

    #[test]
    fn orthogonal_form_is_a_homomorphism(
        shape in partition(6, 4).prop_filter("nonempty", |p| p.size() >= 2),
        seed in any::<u64>(),
    ) {
        let n = shape.size();
        let runner_perm = |s: u64| {
            let mut v: Vec<usize> = (1..=n).collect();
            let mut x = s;
            for i in (1..n).rev() {
                x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                v.swap(i, (x >> 33) as usize % (i + 1));
            }
            Permutation::from_one_line(v).unwrap()
        };
        let a = runner_perm(seed);
        let b = runner_perm(seed ^ 0x9e3779b97f4a7c15);
        let basis = YoungBasis::new(&shape).unwrap();
        let lhs = basis.permutation(&a.compose(&b));
        let rhs = basis.permutation(&a) * basis.permutation(&b);
        let dev = (lhs - rhs).iter().fold(0.0f64, |m, x| m.max(x.abs()));
        prop_assert!(dev < 1e-9);
    }

    #[test]
    fn permutation_words_reassemble(s in permutation(7)) {
        let w = s.adjacent_word();
        prop_assert_eq!(Permutation::from_adjacent_word(7, &w).unwrap(), s.clone());
        prop_assert_eq!(s.compose(&s.inverse()), Permutation::identity(7));
    }

    #[test]
    fn content_vectors_round_trip(shape in partition(10, 5).prop_filter("nonempty", |p| p.size() >= 1), pick in any::<prop::sample::Index>()) {
        let ts = enumerate_standard(&shape).unwrap();
        let t = &ts[pick.index(ts.len())];
        prop_assert_eq!(&tableau_from_content_vector(&t.content_vector()).unwrap(), t);
    }
}
