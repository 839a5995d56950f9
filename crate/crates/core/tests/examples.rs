//! Worked examples, checked through the public API.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;

use tsumset::denumerant::{rho_batch, rho_brackets, rho_h, rho_total, snn_count, Simplex};
use tsumset::extremal::{asymptotic_report, verify, ExtremalInstance};
use tsumset::frobenius::{exceptional_set, frobenius_brackets, frobenius_t, FrobeniusBrackets};
use tsumset::lattice::{
    caratheodory_cover_check, delta_delta, empirical_structure_index, extremal_points,
    hull_size_poly_check, lattice_span, parse_lambda, parse_points, rho_h_d, rho_total_d,
    structured_rhs_d, t_sumset_d, zd_bound_formula, LatticePointSet, Point,
};
use tsumset::structure::{
    bound_mt1, bound_mt2, bound_yz, h_plus_minus, ht_exact, is_structured, long_interval_check,
    structured_rhs, t_sumset, Analyzer,
};
use tsumset::threeset::ThreeSet;
use tsumset::{normalize, Caps, Count, Error, IntegerSet};

fn set(text: &str) -> IntegerSet {
    text.parse().unwrap()
}

fn lps(text: &str) -> LatticePointSet {
    LatticePointSet::new(parse_points(text).unwrap()).unwrap()
}

fn c(n: u64) -> Count {
    Count::from(n)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn normalization() {
    let (s, rec) = normalize(&[3, 6, 9, 15]).unwrap();
    assert_eq!(s.elements(), &[0, 1, 2, 4]);
    assert_eq!((rec.shift, rec.scale), (3, 3));
    assert_eq!(rec.apply(&s), vec![3, 6, 9, 15]);
}

#[test]
fn representation_counts() {
    let a = set("0,3,5");
    assert_eq!(rho_h(&a, 2, 8), c(1));
    assert_eq!(rho_h(&a, 3, 15), c(1));
    assert_eq!(rho_h(&a, 5, 15), c(2));
    assert_eq!(rho_total(&a, 7), c(0));
    assert_eq!(rho_total(&a, 15), c(2));
    assert_eq!(rho_total(&a, 0), c(1));

    let t = rho_batch(&set("0,1"), 3, &Caps::default()).unwrap();
    assert_eq!(t.values, vec![c(1); 4]);
    let t = rho_batch(&a, 2, &Caps::default()).unwrap();
    let support: Vec<u64> = (0..=10).filter(|&n| t.get(n) > c(0)).collect();
    assert_eq!(support, vec![0, 3, 5, 6, 8, 10]);

    assert_eq!(snn_count(&set("0,3,5,7"), 4), c(3));
    assert_eq!(snn_count(&set("0,4,6,7,9"), 11), c(16));

    let s = Simplex::new(vec![2, 3], q(6, 1)).unwrap();
    assert_eq!((s.count(), s.volume(), s.outer_volume()), (c(7), q(3, 1), q(121, 12)));
    let s = Simplex::new(vec![1, 1], q(2, 1)).unwrap();
    assert_eq!((s.count(), s.volume()), (c(6), q(2, 1)));
    assert!(Simplex::new(vec![1, 0], q(2, 1)).is_err());

    assert_eq!(rho_brackets(&a, 25).unwrap(), (q(1, 1), q(31, 15)));
    assert_eq!(rho_brackets(&a, 10).unwrap(), (q(0, 1), q(16, 15)));
    assert_eq!(rho_brackets(&set("0,2,3"), 5).unwrap(), (q(1, 3), q(3, 2)));
    assert!(matches!(rho_brackets(&a, 9), Err(Error::Domain(_))));
}

#[test]
fn exceptional_sets() {
    let a = set("0,3,5");
    let e = exceptional_set(&a, 1).unwrap();
    assert_eq!((e.members.clone(), e.frobenius_t), (vec![1, 2, 4, 7], 7));
    let e = exceptional_set(&a, 2).unwrap();
    let mut expect: Vec<u64> = (0..=14).collect();
    expect.extend([16, 17, 19, 22]);
    assert_eq!(e.members, expect);
    assert_eq!(frobenius_t(&a, 2).unwrap(), 22);

    let e = exceptional_set(&set("0,1,4"), 1).unwrap();
    assert!(e.is_empty() && e.frobenius_t == 0);

    let fr = frobenius_t(&set("0,1,6,7"), 6).unwrap();
    assert_eq!(fr, 13);

    let b = FrobeniusBrackets::new(&a, 2).unwrap();
    assert_eq!((b.lower.clone(), b.upper.clone()), (q(8, 1), q(25, 1)));
    assert!(b.contains(22));
    let (_, upper) = frobenius_brackets(&a, 1).unwrap();
    assert_eq!(upper, q(10, 1));
    assert!(FrobeniusBrackets::new(&set("0,1,6,7"), 6).unwrap().contains(13));
}

#[test]
fn structure_in_z() {
    let a = set("0,3,5");
    assert_eq!(t_sumset(&a, 2, 1), vec![0, 3, 5, 6, 8, 10]);
    assert_eq!(structured_rhs(&a, 2, 1).unwrap(), vec![0, 3, 5, 6, 8, 10]);
    assert_eq!(t_sumset(&a, 0, 1), vec![0]);
    assert_eq!(structured_rhs(&set("0,1"), 4, 1).unwrap(), vec![0, 1, 2, 3, 4]);

    let x = set("0,1,6,7");
    assert!(!t_sumset(&x, 5, 6).contains(&17));
    assert!(structured_rhs(&x, 5, 6).unwrap().contains(&17));
    let r = is_structured(&x, 5, 6).unwrap();
    assert!(!r.structured && r.witnesses.contains(&17));
    assert!(is_structured(&x, bound_mt1(&x, 6).unwrap(), 6).unwrap().structured);

    assert_eq!(ht_exact(&a, 3).unwrap(), 1);
    assert_eq!(ht_exact(&x, 6).unwrap(), 17);
    assert_eq!(ht_exact(&set("0,1"), 1).unwrap(), 1);

    assert_eq!(bound_mt1(&a, 1).unwrap(), 8);
    assert_eq!(bound_mt1(&a, 2).unwrap(), 18);
    assert_eq!(bound_mt1(&set("0,1"), 1).unwrap(), 2);
    assert_eq!(bound_mt1(&x, 6).unwrap(), 40);
    assert_eq!(h_plus_minus(&a, 1).unwrap(), (4, 4));
    assert_eq!(h_plus_minus(&a, 2).unwrap(), (9, 9));
    assert_eq!(bound_yz(&a, 2), 8);
    assert_eq!(bound_yz(&x, 1), 10);
    let (cst, bound) = bound_mt2(&x, 6).unwrap();
    assert!(cst > 0.0 && bound >= ht_exact(&x, 6).unwrap());

    assert!(long_interval_check(&a, 1).unwrap());
    assert!(long_interval_check(&x, 6).unwrap());
    let an = Analyzer::new(&x, 6, &Caps::default()).unwrap();
    assert!(an.longest_run_at_mt1().unwrap() >= 7);
}

#[test]
fn extremal_family() {
    let inst = ExtremalInstance::build(7, 2, 2).unwrap();
    assert_eq!(inst.set.elements(), &[0, 1, 6, 7]);
    assert_eq!((inst.t.clone(), inst.g), (BigUint::from(6u32), 17));
    let inst0 = ExtremalInstance::build(5, 2, 0).unwrap();
    assert_eq!(inst0.set.elements(), &[0, 1, 4, 5]);
    assert_eq!((inst0.t.clone(), inst0.g), (BigUint::one(), 3));
    assert!(ExtremalInstance::build(7, 4, 1).is_err());

    let r = verify(&inst, &Caps::default()).unwrap();
    assert!(r.passed && r.rho_at_g == c(6) && !r.structured_at_witness_h);
    let inst = ExtremalInstance::build(9, 2, 3).unwrap();
    assert_eq!((inst.set.elements(), inst.t.clone(), inst.g), (&[0, 1, 8, 9][..], BigUint::from(10u32), 31));
    assert!(verify(&inst, &Caps::default()).unwrap().passed);

    let rec = asymptotic_report(25).unwrap();
    assert_eq!((rec.ell, rec.r), (4, 5));
    let rec = asymptotic_report(9).unwrap();
    assert_eq!((rec.ell, rec.r), (2, 3));
    assert!(asymptotic_report(4).is_err());
}

#[test]
fn three_element_sets() {
    let t = ThreeSet::new(3, 5).unwrap();
    assert_eq!((t.rho_closed(15), t.rho_closed(7), t.rho_closed(0)), (c(2), c(0), c(1)));
    assert_eq!((t.frobenius_t_closed(1), t.frobenius_t_closed(2)), (7, 22));
    assert_eq!((t.exceptional_size_closed(1), t.exceptional_size_closed(2)), (c(4), c(19)));
    let caps = Caps::default();
    assert!(t.shift_identity_check(2, &caps).unwrap() && t.shift_identity_check(1, &caps).unwrap());
    assert!(t.always_structured_check(2, 40, &caps).unwrap());
    let s = ThreeSet::new(2, 3).unwrap();
    assert_eq!((s.frobenius_t_closed(1), s.exceptional_size_closed(1)), (1, c(1)));
    assert!(s.always_structured_check(1, 10, &caps).unwrap());
    let u = ThreeSet::new(4, 7).unwrap();
    assert!(u.shift_identity_check(3, &caps).unwrap());
    assert!(u.always_structured_check(3, 40, &caps).unwrap());
    assert!(u.reciprocity_check());
}

#[test]
fn lattice_examples() {
    let tri = lps("0,0;1,0;0,1");
    let sq = lps("0,0;2,0;0,2;1,1");
    let caps = Caps::default();
    assert_eq!(extremal_points(&sq), vec![vec![0, 0], vec![0, 2], vec![2, 0]]);
    assert_eq!(extremal_points(&tri).len(), 3);
    assert_eq!(lattice_span(&sq).index(), Some(BigUint::from(2u32)));
    assert!(lattice_span(&sq).contains(&[3, 5]) && !lattice_span(&sq).contains(&[3, 4]));
    assert_eq!(lattice_span(&tri).index(), Some(BigUint::one()));

    assert_eq!(rho_h_d(&tri, 2, &[1, 1]), c(1));
    assert_eq!(rho_h_d(&sq, 5, &[0, 0]), c(1));
    assert_eq!(rho_h_d(&sq, 2, &[2, 2]), c(2));
    assert_eq!(rho_total_d(&tri, &[2, 1]).unwrap(), c(1));
    assert_eq!(rho_total_d(&tri, &[-1, 0]).unwrap(), c(0));
    assert_eq!(rho_total_d(&sq, &[2, 2]).unwrap(), c(2));

    let one = LatticePointSet::from_integer_set(&set("0,3,5"));
    let s = delta_delta(&one);
    assert_eq!((s.delta, s.big_delta), (3.0, 5.0));
    let s = delta_delta(&tri);
    assert_eq!((s.direction.clone(), s.ratio.as_str()), (vec![1, 1], "1"));
    assert_eq!(delta_delta(&lps("0,0;1,0")).ratio, "1");

    assert_eq!(t_sumset_d(&tri, 3, 1, &caps).unwrap().len(), 10);
    assert_eq!(structured_rhs_d(&tri, 3, 1, &caps).unwrap().len(), 10);
    assert_eq!(t_sumset_d(&tri, 0, 1, &caps).unwrap(), vec![vec![0, 0]]);
    assert_eq!(structured_rhs_d(&tri, 0, 1, &caps).unwrap(), vec![vec![0, 0]]);
    assert_eq!(t_sumset_d(&sq, 4, 1, &caps).unwrap(), structured_rhs_d(&sq, 4, 1, &caps).unwrap());

    assert_eq!(empirical_structure_index(&tri, 1, 12, &caps).unwrap().h_star, Some(1));
    assert!(empirical_structure_index(&sq, 1, 15, &caps).unwrap().h_star.is_some());
    assert!(empirical_structure_index(&tri, 3, 15, &caps).unwrap().h_star.is_some());

    let phi: BTreeMap<Point, BigRational> =
        tri.extremal_points().iter().map(|v| (v.clone(), BigRational::one())).collect();
    assert_eq!(zd_bound_formula(&tri, 1, &phi).unwrap().value, 3);
    assert!(zd_bound_formula(&tri, 1, &BTreeMap::new()).is_err());

    assert!(caratheodory_cover_check(&tri, &parse_lambda("2").unwrap(), 10_000, &caps).unwrap().held);
    assert!(caratheodory_cover_check(&sq, &parse_lambda("3").unwrap(), 10_000, &caps).unwrap().held);
    let pent = lps("0,0;2,0;3,2;1,3;-1,2");
    assert!(caratheodory_cover_check(&pent, &parse_lambda("2").unwrap(), 10_000, &caps).unwrap().held);

    let p = hull_size_poly_check(&tri, 1, 0, 10, &caps).unwrap();
    assert_eq!(p.hull_minus_exceptional.tail_start, Some(0));
    let p = hull_size_poly_check(&one, 1, 0, 10, &caps).unwrap();
    assert!(p.hull_minus_exceptional.conclusive);
    let p = hull_size_poly_check(&tri, 1, 0, 1, &caps).unwrap();
    assert!(!p.hull_minus_exceptional.conclusive);
}
