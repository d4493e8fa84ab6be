mod common;

use courant_core::catalog;
use courant_core::cohomology::{Cochain, CochainComplex};
use courant_core::document::{parse_document, serialize_document};
use courant_core::linalg::{FieldSpec, Matrix, Scalar};
use proptest::prelude::*;

use common::*;

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(FieldSpec::PrimeField(2)),
        Just(FieldSpec::PrimeField(3)),
        Just(FieldSpec::PrimeField(5)),
    ]
}

fn matrix_strategy() -> impl Strategy<Value = Matrix> {
    (field_strategy(), 1usize..=5, 1usize..=5).prop_flat_map(|(field, rows, cols)| {
        proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |xs| {
            let rows: Vec<Vec<Scalar>> = xs
                .chunks(cols)
                .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
                .collect();
            Matrix::from_rows(field, rows).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rank_nullity(m in matrix_strategy()) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for k in &kernel {
            prop_assert!(m.mul_vec(k).unwrap().iter().all(Scalar::is_zero));
        }
        let (r, pivots) = m.rref();
        prop_assert_eq!(r.rref().0, r);
        prop_assert_eq!(pivots.len(), m.rank());
    }

    #[test]
    fn solve_recovers_consistent_systems(m in matrix_strategy(), seed in any::<u64>()) {
        let mut rng = rng(seed);
        let x = random_vector(&mut rng, m.field(), m.cols());
        let b = m.mul_vec(&x).unwrap();
        let y = m.solve(&b).unwrap().expect("system is consistent");
        prop_assert_eq!(m.mul_vec(&y).unwrap(), b);
    }

    #[test]
    fn prime_field_axioms(p in prop::sample::select(vec![2u64, 3, 5, 7, 101]), a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
        let f = FieldSpec::prime(p).unwrap();
        let (a, b, c) = (f.from_i64(a), f.from_i64(b), f.from_i64(c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
        prop_assert_eq!(f.parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn rational_text_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let q = FieldSpec::Rationals;
        let x = q.parse_scalar(&format!("{n}/{d}")).unwrap();
        prop_assert_eq!(q.parse_scalar(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn coboundary_squares_to_zero(index in 0usize..24, degree in 0usize..=2, seed in any::<u64>()) {
        let reps = catalog::representations(FieldSpec::Rationals);
        let (_, rep) = &reps[index % reps.len()];
        let complex = CochainComplex::new(rep).unwrap();
        let psi = random_cochain(&mut rng(seed), rep, degree);
        let d = complex.coboundary(&psi).unwrap();
        prop_assert!(complex.coboundary(&d).unwrap().is_zero());
        let m = complex.coboundary_matrix(degree).unwrap();
        prop_assert_eq!(m.mul_vec(psi.flat()).unwrap(), d.flat().to_vec());
    }

    #[test]
    fn coboundaries_have_preimages(index in 0usize..24, degree in 1usize..=2, seed in any::<u64>()) {
        let reps = catalog::representations(FieldSpec::Rationals);
        let (_, rep) = &reps[index % reps.len()];
        let complex = CochainComplex::new(rep).unwrap();
        let psi = random_cochain(&mut rng(seed), rep, degree - 1);
        let f = complex.coboundary(&psi).unwrap();
        let pre = complex.is_coboundary(&f).unwrap().expect("δψ is a coboundary");
        prop_assert_eq!(complex.coboundary(&pre).unwrap(), f.clone());
        let shifted = &f + &complex.coboundary(&random_cochain(&mut rng(seed ^ 1), rep, degree - 1)).unwrap();
        let w = complex.cohomologous(&shifted, &f).unwrap().expect("same class");
        prop_assert_eq!(complex.coboundary(&w).unwrap(), &shifted - &f);
    }

    #[test]
    fn class_coordinates_are_linear(index in 0usize..24, seed in any::<u64>()) {
        let reps = catalog::representations(FieldSpec::Rationals);
        let (_, rep) = &reps[index % reps.len()];
        let complex = CochainComplex::new(rep).unwrap();
        let report = complex.cohomology(2).unwrap();
        let z = complex.cocycle_space(2).unwrap();
        let mut rng = rng(seed);
        let f1 = Cochain::from_flat(rep, 2, random_combination(&mut rng, FieldSpec::Rationals, z.ambient_dim(), z.basis())).unwrap();
        let f2 = Cochain::from_flat(rep, 2, random_combination(&mut rng, FieldSpec::Rationals, z.ambient_dim(), z.basis())).unwrap();
        let (c1, c2) = (report.class_coordinates(&f1).unwrap(), report.class_coordinates(&f2).unwrap());
        let sum: Vec<Scalar> = c1.iter().zip(&c2).map(|(a, b)| a + b).collect();
        prop_assert_eq!(report.class_coordinates(&(&f1 + &f2)).unwrap(), sum);
        for (k, r) in report.representatives.iter().enumerate() {
            let coords = report.class_coordinates(r).unwrap();
            prop_assert!(coords.iter().enumerate().all(|(i, s)| s.is_one() == (i == k) && (s.is_one() || s.is_zero())));
        }
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>()) {
        let text = fuzz_document(&mut rng(seed));
        let doc = parse_document(&text).unwrap();
        let canonical = serialize_document(&doc);
        prop_assert_eq!(parse_document(&canonical).unwrap(), doc);
        prop_assert_eq!(serialize_document(&parse_document(&canonical).unwrap()), canonical);
    }
}
