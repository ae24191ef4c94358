use num_bigint::BigInt;
use proptest::prelude::*;

use qhook::identities as ids;
use qhook::partitions::{self, Constraint, Partition};
use qhook::series::{Series, Sign};
use qhook::verify;

fn small_series(max_len: usize) -> impl Strategy<Value = Series> {
    prop::collection::vec(-50i64..=50, 1..=max_len).prop_map(|v| Series::from_i64s(&v))
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

proptest! {
    #[test]
    fn distributive_commutative_associative(a in small_series(10), b in small_series(10), c in small_series(10)) {
        prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn scale_and_neg_agree(a in small_series(10), k in -7i64..=7) {
        prop_assert_eq!(a.scale(k).neg(), a.scale(-k));
        prop_assert_eq!(a.scale(k), &a * &Series::monomial(k, 0, a.trunc()));
    }

    #[test]
    fn shift_is_monomial_product(a in small_series(12), e in 0usize..15) {
        prop_assert_eq!(a.shift(e), &a * &Series::monomial(1, e, a.trunc()));
    }

    #[test]
    fn infinite_products_are_truncation_compatible(
        base in 1usize..6, step in 1usize..4, s in sign(), big in 20usize..60, small in 0usize..20,
    ) {
        let full = Series::pochhammer_infinite(base, s, step, big);
        prop_assert_eq!(full.truncate(small), Series::pochhammer_infinite(base, s, step, small));
    }

    #[test]
    fn finite_products_are_truncation_compatible(
        base in 0usize..5, n in 0usize..10, s in sign(), big in 20usize..40, small in 0usize..20,
    ) {
        let full = Series::pochhammer_finite(base, s, n, big);
        prop_assert_eq!(full.truncate(small), Series::pochhammer_finite(base, s, n, small));
    }

    #[test]
    fn sylvester_monomial_specialisations(x in 0usize..6, trunc in 0usize..80) {
        prop_assert_eq!(ids::sylvester_rhs(x, trunc), ids::sylvester_lhs(x, trunc));
    }
}

#[test]
fn odd_part_counts_match_enumeration() {
    let odd = Series::pochhammer_infinite(1, Sign::Plus, 2, 45).invert().unwrap();
    for n in 0..=45 {
        let brute = partitions::enumerate(n, Constraint::TRegular(2)).count();
        assert_eq!(odd.coeffs()[n], BigInt::from(brute), "n = {n}");
    }
}

#[test]
fn unrestricted_counts_match_euler_product() {
    let p = Series::pochhammer_infinite(1, Sign::Plus, 1, 45).invert().unwrap();
    for n in 0..=45 {
        let brute = partitions::enumerate(n, Constraint::Unrestricted).count();
        assert_eq!(p.coeffs()[n], BigInt::from(brute), "n = {n}");
    }
    assert_eq!(p.coeffs()[45], BigInt::from(89134));
}

#[test]
fn d3_series_matches_brute_force() {
    let h = ids::d3_table(45);
    for (n, v) in h.iter().enumerate() {
        assert_eq!(*v, BigInt::from(partitions::d3_brute(n)), "n = {n}");
    }
}

#[test]
fn injection_is_injective_and_cardinality_holds() {
    for n in 5..=40 {
        let domain: Vec<Partition> = partitions::enumerate(n - 1, Constraint::DistinctMin(3)).collect();
        let mut images: Vec<(usize, Partition)> = domain.iter().map(|p| partitions::injection(p).unwrap()).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), domain.len(), "n = {n}");
        let codomain: usize = (0..=n - 5)
            .map(|i| partitions::enumerate(i, Constraint::DistinctMin(3)).count())
            .sum();
        assert!(domain.len() <= codomain, "n = {n}");
    }
}

#[test]
fn n_five_domain_is_single_part() {
    let domain: Vec<Partition> = partitions::enumerate(4, Constraint::DistinctMin(3)).collect();
    assert_eq!(domain, vec![Partition::new(vec![4]).unwrap()]);
    assert_eq!(partitions::injection(&domain[0]).unwrap(), (0, Partition::empty()));
}

#[test]
fn b22_simplification_at_200() {
    assert_eq!(ids::b22(200), ids::b22_simplified(200));
}

#[test]
fn f_forms_agree_at_200() {
    assert_eq!(ids::f_series(200), ids::f_product_form(200));
}

#[test]
fn sylvester_expansions_at_200() {
    assert_eq!(ids::syl2_lhs(200), ids::syl2_rhs(200));
    assert_eq!(ids::syl3_lhs(200), ids::syl3_rhs(200));
}

fn decrement(s: &Series, at: usize) -> Series {
    let mut c = s.coeffs().to_vec();
    c[at] -= 1;
    Series::from_coeffs(c)
}

#[test]
fn perturbed_identities_report_the_perturbed_index() {
    let n = 120;
    let pairs = [
        (ids::euler_lhs(n), ids::euler_rhs(n)),
        (ids::b22(n), ids::b22_simplified(n)),
        (ids::syl3_lhs(n), ids::syl3_rhs(n)),
        (ids::f_series(n), ids::f_product_form(n)),
    ];
    for (lhs, rhs) in &pairs {
        for at in [0, 7, 64, n] {
            let r = verify::check_equal("perturbed", lhs, &decrement(rhs, at), n).unwrap();
            assert_eq!(r.failing_indices(), [at]);
        }
    }
}

#[test]
fn perturbed_inequalities_report_the_perturbed_index() {
    // Lower the larger side where the two sides touch.
    let n = 100;
    let d = ids::b22(n) - ids::b21(n);
    let zero = Series::zero(n);
    // B22 - B21 vanishes at n = 5..=8
    let r = verify::check_coeffwise_geq("thm3", &decrement(&d, 6), &zero, 5, n).unwrap();
    assert_eq!(r.failing_indices(), [6]);
    let s = ids::s_series(n);
    let r = verify::check_coeffwise_geq("s", &decrement(&s, 2), &zero, 0, n).unwrap();
    assert_eq!(r.failing_indices(), [2]);
}
