use hopf_exact::coradical::{
    coradical, coradical_filtration, dual_chevalley_check, grouplikes, simple_subcoalgebras, wedge,
};
use hopf_exact::corpus::{self, build_corpus};
use hopf_exact::exactalg::{ExactMatrix, FieldDescriptor, Subspace};
use hopf_exact::hopfcore::{
    antipode_power, convolution, drinfeld_double, dual, pivotal_check, smash_pivot, smash_with_s2, tensor_product,
    verify_hopf, HopfAlgebraData, SparseMap,
};

fn q() -> FieldDescriptor {
    FieldDescriptor::rational()
}

fn entry(name: &str) -> HopfAlgebraData {
    corpus::find(name).unwrap().build().unwrap()
}

#[test]
fn corrupted_group_table_fails_antipode() {
    let f = q();
    let good = corpus::group_algebra_cyclic(&f, 2);
    assert!(verify_hopf(&good).all_pass());
    // g·g = g instead of 1
    let mult = SparseMap::from_triples(
        &f,
        4,
        2,
        [(0, 0), (1, 1), (2, 1), (3, 1)].into_iter().map(|(x, y)| (x, y, f.one())),
    );
    let bad = HopfAlgebraData::new(
        f.clone(),
        good.basis_labels.clone(),
        mult,
        good.unit.clone(),
        good.comult.clone(),
        good.counit.clone(),
        good.antipode.clone(),
    )
    .unwrap();
    let report = verify_hopf(&bad);
    let anti = report.get("antipode").unwrap();
    assert!(anti.is_failure());
    assert!(format!("{:?}", anti.status).contains("basis 1"));
}

#[test]
fn every_corpus_entry_is_a_hopf_algebra() {
    for e in build_corpus() {
        let h = e.build().unwrap();
        let r = verify_hopf(&h);
        assert!(r.all_pass(), "{}: {}", e.name, r.render());
        assert_eq!(h.dim, e.expected.dim, "{}", e.name);
        assert_eq!(dual(&h).unwrap().dim, h.dim);
    }
}

#[test]
fn dual_examples() {
    let c2 = corpus::group_algebra_cyclic(&q(), 2);
    let d = dual(&c2).unwrap();
    assert!(verify_hopf(&d).all_pass());
    assert!(antipode_power(&d, 1).unwrap().is_identity());
    // characters (1±g)/2 are orthogonal idempotents of the convolution algebra
    assert_eq!(grouplikes(&d).unwrap().len(), 2);

    let h4 = entry("H4");
    let dd = dual(&dual(&h4).unwrap()).unwrap();
    assert_eq!((dd.mult, dd.unit, dd.comult, dd.counit, dd.antipode), (h4.mult, h4.unit, h4.comult, h4.counit, h4.antipode));
}

#[test]
fn tensor_examples() {
    let c2 = corpus::group_algebra_cyclic(&q(), 2);
    let k = tensor_product(&c2, &c2).unwrap();
    let klein = corpus::group_algebra(
        &q(),
        (0..4).map(|i| i.to_string()).collect(),
        &(0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect::<Vec<Vec<usize>>>(),
    );
    assert_eq!(k.mult, klein.mult);
    assert_eq!(k.comult, klein.comult);
    assert_eq!(k.antipode, klein.antipode);

    let trivial = corpus::group_algebra_cyclic(&q(), 1);
    let h4 = entry("H4");
    let ht = tensor_product(&h4, &trivial).unwrap();
    assert_eq!((ht.mult.clone(), ht.comult.clone(), ht.antipode.clone()), (h4.mult.clone(), h4.comult.clone(), h4.antipode.clone()));

    let big = entry("dual-kS3-x-T2");
    assert_eq!(big.dim, 24);
    assert!(verify_hopf(&big).all_pass());
    assert!(tensor_product(&h4, &entry("T2-F5")).is_err());
}

#[test]
fn convolution_examples() {
    let h4 = entry("H4");
    let id = h4.identity();
    let ue = h4.unit_counit();
    assert_eq!(convolution(&h4, &id, &h4.antipode).unwrap(), ue);
    let c3 = corpus::group_algebra_cyclic(&q(), 3);
    let f = ExactMatrix::from_i64(&q(), &[&[1, 2, 0], &[0, -1, 5], &[3, 0, 1]]);
    assert_eq!(convolution(&c3, &c3.unit_counit(), &f).unwrap(), f);
    let c2 = corpus::group_algebra_cyclic(&q(), 2);
    let sq = convolution(&c2, &c2.identity(), &c2.identity()).unwrap();
    assert_eq!(sq, ExactMatrix::from_i64(&q(), &[&[1, 1], &[0, 0]]));
}

#[test]
fn antipode_power_examples() {
    let s3 = entry("kS3");
    assert!(antipode_power(&s3, 2).unwrap().is_identity());
    let t3 = entry("T3");
    assert!(antipode_power(&t3, 0).unwrap().is_identity());
    let f = t3.f();
    let x = t3.basis(3);
    let s2x = antipode_power(&t3, 2).unwrap().apply(&x);
    assert_eq!(s2x, t3.scale(&f.zeta_pow(-1).unwrap(), &x));
    let a = antipode_power(&t3, 3).unwrap().mul(&antipode_power(&t3, -5).unwrap()).unwrap();
    assert_eq!(a, antipode_power(&t3, -2).unwrap());
}

#[test]
fn double_examples() {
    let c2 = corpus::group_algebra_cyclic(&q(), 2);
    let dd = drinfeld_double(&c2).unwrap();
    assert_eq!(dd.double.dim, 4);
    let u = &dd.drinfeld_element;
    assert_eq!(dd.double.mul(u, u), dd.double.unit);

    let h4 = entry("H4");
    let dd = drinfeld_double(&h4).unwrap();
    let d = &dd.double;
    assert_eq!(d.dim, 16);
    let s2 = antipode_power(d, 2).unwrap();
    let conj = d.two_sided_matrix(&dd.drinfeld_element, &dd.drinfeld_inverse);
    assert_eq!(conj, s2);
    for e in build_corpus().iter().filter(|e| e.expected.dim <= 6) {
        let h = e.build().unwrap();
        assert_eq!(drinfeld_double(&h).unwrap().double.dim, h.dim * h.dim, "{}", e.name);
    }
}

#[test]
fn smash_examples() {
    let s3 = entry("kS3");
    let sm = smash_with_s2(&s3).unwrap();
    assert_eq!((sm.mult.clone(), sm.comult.clone()), (s3.mult.clone(), s3.comult.clone()));

    let h4 = entry("H4");
    let sm = smash_with_s2(&h4).unwrap();
    assert_eq!(sm.dim, 8);
    let pivot = smash_pivot(&h4, &sm);
    let s2 = antipode_power(&sm, 2).unwrap();
    let inv = sm.antipode_of(&pivot);
    assert_eq!(sm.two_sided_matrix(&pivot, &inv), s2);
    assert!(pivotal_check(&sm).unwrap().is_some());
    assert_eq!(smash_with_s2(&entry("T3")).unwrap().dim, 27);
}

#[test]
fn grouplike_and_pivotal_examples() {
    assert_eq!(grouplikes(&entry("kC4")).unwrap().len(), 4);
    let t3 = entry("T3");
    let g = grouplikes(&t3).unwrap();
    assert_eq!(g.len(), 3);
    for (i, v) in g.iter().enumerate() {
        assert!((0..3).any(|k| *v == t3.basis(k)), "grouplike {i}");
    }
    assert_eq!(grouplikes(&entry("dual-kS3")).unwrap().len(), 2);
    assert_eq!(pivotal_check(&entry("kS3")).unwrap(), Some(entry("kS3").one()));
    let p = pivotal_check(&t3).unwrap().unwrap();
    assert_eq!(t3.two_sided_matrix(&p, &t3.antipode_of(&p)), antipode_power(&t3, 2).unwrap());
}

#[test]
fn coradical_examples() {
    assert_eq!(coradical(&entry("kS3")).unwrap().dim(), 6);
    let h4 = entry("H4");
    let h0 = coradical(&h4).unwrap();
    assert_eq!(h0, Subspace::from_vectors(h4.f(), 4, vec![h4.basis(0), h4.basis(1)]));
    assert_eq!(coradical(&entry("T3")).unwrap().dim(), 3);
    assert!(wedge(&h0, &h0, &h4).is_full());
    let z = Subspace::zero(h4.f(), 4);
    assert_eq!(wedge(&z, &z, &h4).dim(), 0);

    assert_eq!(coradical_filtration(&entry("kS3")).unwrap().dims(), vec![6]);
    assert_eq!(coradical_filtration(&h4).unwrap().dims(), vec![2, 4]);
    let t3 = coradical_filtration(&entry("T3")).unwrap();
    assert_eq!((t3.dims(), t3.loewy_length), (vec![3, 6, 9], 3));

    assert!(dual_chevalley_check(&entry("kC6")).unwrap());
    assert!(dual_chevalley_check(&h4).unwrap());
    assert!(dual_chevalley_check(&entry("dual-kS3-x-T2")).unwrap());
    assert!(!dual_chevalley_check(&entry("dual-D-H4")).unwrap());

    let sizes: Vec<usize> = simple_subcoalgebras(&entry("dual-kS3")).unwrap().iter().map(|b| b.size).collect();
    let mut sorted = sizes.clone();
    sorted.sort();
    assert_eq!(sorted, vec![1, 1, 2]);
    assert_eq!(simple_subcoalgebras(&h4).unwrap().len(), 2);
}
