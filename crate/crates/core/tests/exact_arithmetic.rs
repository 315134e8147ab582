use hopf_exact::exactalg::{
    is_nilpotent, mat_kernel, mat_kronecker, scalar_arith, ArithOp, ExactMatrix, FieldDescriptor, FieldScalar,
    Rational, Scalar, Subspace,
};
use proptest::prelude::*;

fn fields() -> Vec<FieldDescriptor> {
    vec![
        FieldDescriptor::rational(),
        FieldDescriptor::cyclotomic(3).unwrap(),
        FieldDescriptor::cyclotomic(12).unwrap(),
        FieldDescriptor::prime(7).unwrap(),
    ]
}

/// A scalar built from small rational coefficients in the power basis.
fn scalar(f: &FieldDescriptor, coeffs: &[(i64, i64)]) -> Scalar {
    let rats: Vec<Rational> = coeffs.iter().take(f.degree()).map(|&(n, d)| Rational::new(n, d)).collect();
    match f.characteristic() {
        0 => f.from_rational_coeffs(&rats),
        p => f.from_i64(coeffs[0].0.rem_euclid(p as i64)),
    }
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-20i64..=20, 1i64..=9), 4)
}

fn matrix(f: &FieldDescriptor, rows: usize, cols: usize, vals: &[i64]) -> ExactMatrix {
    let data: Vec<Vec<Scalar>> = (0..rows).map(|r| (0..cols).map(|c| f.from_i64(vals[r * cols + c])).collect()).collect();
    ExactMatrix::from_rows(f, data).unwrap()
}

proptest! {
    #[test]
    fn field_axioms(a in coeffs(), b in coeffs(), c in coeffs(), which in 0usize..4) {
        let f = &fields()[which];
        let (a, b, c) = (scalar(f, &a), scalar(f, &b), scalar(f, &c));
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.add(&a, &f.zero()), a.clone());
        prop_assert_eq!(f.mul(&a, &f.one()), a.clone());
        prop_assert!(f.is_zero(&f.sub(&a, &a)));
        if !f.is_zero(&a) {
            let inv = f.inv(&a).unwrap();
            prop_assert!(f.is_one(&f.mul(&a, &inv)));
        } else {
            prop_assert!(f.inv(&a).is_none());
        }
    }

    #[test]
    fn literals_round_trip(a in coeffs(), which in 0usize..4) {
        let f = &fields()[which];
        let x = scalar(f, &a);
        prop_assert_eq!(f.parse_literal(&f.format(&x)).unwrap(), x);
    }

    #[test]
    fn rank_nullity(rows in 1usize..5, cols in 1usize..6, vals in prop::collection::vec(-3i64..=3, 30), which in 0usize..4) {
        let f = &fields()[which];
        let m = matrix(f, rows, cols, &vals);
        let k = mat_kernel(&m);
        prop_assert_eq!(m.rank() + k.dim(), cols);
        for v in k.basis() {
            prop_assert!(m.apply(v).iter().all(|x| f.is_zero(x)));
        }
    }

    #[test]
    fn kronecker_associative_and_mixed_product(vals in prop::collection::vec(-3i64..=3, 24)) {
        let f = FieldDescriptor::rational();
        let a = matrix(&f, 2, 2, &vals[0..4]);
        let b = matrix(&f, 2, 3, &vals[4..10]);
        let c = matrix(&f, 1, 2, &vals[10..12]);
        let ab_c = mat_kronecker(&mat_kronecker(&a, &b).unwrap(), &c).unwrap();
        let a_bc = mat_kronecker(&a, &mat_kronecker(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        let a2 = matrix(&f, 2, 2, &vals[12..16]);
        let b2 = matrix(&f, 3, 2, &vals[16..22]);
        let lhs = mat_kronecker(&a, &b).unwrap().mul(&mat_kronecker(&a2, &b2).unwrap()).unwrap();
        let rhs = mat_kronecker(&a.mul(&a2).unwrap(), &b.mul(&b2).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn subspaces_are_canonical(vals in prop::collection::vec(-4i64..=4, 12), s in 1i64..5) {
        let f = FieldDescriptor::rational();
        let vs: Vec<Vec<Scalar>> = vals.chunks(4).map(|c| c.iter().map(|&x| f.from_i64(x)).collect()).collect();
        let scaled: Vec<Vec<Scalar>> = vs.iter().rev().map(|v| v.iter().map(|x| f.mul(x, &f.from_i64(s))).collect()).collect();
        let a = Subspace::from_vectors(&f, 4, vs.clone());
        let b = Subspace::from_vectors(&f, 4, scaled);
        prop_assert_eq!(&a, &b);
        for v in &vs {
            prop_assert!(a.contains(v));
        }
    }

    #[test]
    fn strictly_upper_triangular_is_nilpotent(vals in prop::collection::vec(-5i64..=5, 16), which in 0usize..4) {
        let f = &fields()[which];
        let mut m = ExactMatrix::zeros(f, 4, 4);
        for r in 0..4 {
            for c in r + 1..4 {
                m.set(r, c, f.from_i64(vals[r * 4 + c]));
            }
        }
        prop_assert!(is_nilpotent(&m).unwrap());
        prop_assert!(!is_nilpotent(&m.add(&ExactMatrix::identity(f, 4)).unwrap()).unwrap());
    }
}

#[test]
fn scalar_examples() {
    let q4 = FieldDescriptor::cyclotomic(4).unwrap();
    let z = FieldScalar::new(&q4, q4.zeta().unwrap());
    let zz = scalar_arith(&z, &z, ArithOp::Mul).unwrap();
    assert_eq!(zz.value, q4.from_i64(-1));

    let q = FieldDescriptor::rational();
    let sum = scalar_arith(
        &FieldScalar::parse(&q, "2/3").unwrap(),
        &FieldScalar::parse(&q, "1/3").unwrap(),
        ArithOp::Add,
    )
    .unwrap();
    assert!(q.is_one(&sum.value));

    let f5 = FieldDescriptor::prime(5).unwrap();
    let p = scalar_arith(&FieldScalar::parse(&f5, "3").unwrap(), &FieldScalar::parse(&f5, "4").unwrap(), ArithOp::Mul)
        .unwrap();
    assert_eq!(p.value, f5.from_i64(2));

    assert!(scalar_arith(&z, &sum, ArithOp::Add).is_err());
    assert!(scalar_arith(&sum, &FieldScalar::parse(&q, "0").unwrap(), ArithOp::Div).is_err());
    assert!(FieldDescriptor::prime(6).is_err());
}

#[test]
fn kernel_examples() {
    let q = FieldDescriptor::rational();
    assert_eq!(mat_kernel(&ExactMatrix::identity(&q, 3)).dim(), 0);
    assert!(mat_kernel(&ExactMatrix::zeros(&q, 2, 2)).is_full());
    let k = mat_kernel(&ExactMatrix::from_i64(&q, &[&[1, 1], &[1, 1]]));
    assert_eq!(k, Subspace::from_vectors(&q, 2, vec![vec![q.one(), q.from_i64(-1)]]));
}

#[test]
fn kronecker_examples() {
    let q = FieldDescriptor::rational();
    let i6 = mat_kronecker(&ExactMatrix::identity(&q, 2), &ExactMatrix::identity(&q, 3)).unwrap();
    assert!(i6.is_identity() && i6.rows() == 6);
    let a = ExactMatrix::from_i64(&q, &[&[1, 2], &[3, 4]]);
    assert_eq!(mat_kronecker(&a, &ExactMatrix::identity(&q, 1)).unwrap(), a);
    let n = ExactMatrix::from_i64(&q, &[&[0, 1], &[0, 0]]);
    let nn = mat_kronecker(&n, &n).unwrap();
    for r in 0..4 {
        for c in 0..4 {
            assert_eq!(q.is_one(nn.get(r, c)), (r, c) == (0, 3));
        }
    }
}

#[test]
fn nilpotent_examples() {
    let q = FieldDescriptor::rational();
    assert!(!is_nilpotent(&ExactMatrix::identity(&q, 3)).unwrap());
    let j = ExactMatrix::from_i64(&q, &[&[1, 1], &[0, 1]]);
    assert!(is_nilpotent(&j.sub(&ExactMatrix::identity(&q, 2)).unwrap()).unwrap());
    assert!(is_nilpotent(&ExactMatrix::zeros(&q, 2, 3)).is_err());
}
