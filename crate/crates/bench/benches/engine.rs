use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use summand_core::frobenius::{kunz_check, FrobeniusContext};
use summand_core::module::{minimal_resolution, BaseRing, FPModule};
use summand_core::poly::parse_polynomial;
use summand_core::symbolic::{symbolic_power, Separator};
use summand_core::{Field, Ideal, MonomialOrder, Ring};

fn twisted_cubic(c: &mut Criterion) {
    let ring = Ring::new(Field::Rational, &["x", "y", "z", "w"], MonomialOrder::GrevLex).unwrap();
    let gens = ["x*z - y^2", "x*w - y*z", "y*w - z^2"];
    c.bench_function("gb/twisted-cubic", |b| {
        b.iter(|| {
            let ideal = Ideal::from_strs(&ring, &gens).unwrap();
            black_box(ideal.groebner_basis().unwrap().polys().len())
        })
    });
}

fn residue_field(c: &mut Criterion) {
    let ring = Ring::new(Field::Rational, &["x1", "x2", "x3", "x4"], MonomialOrder::GrevLex).unwrap();
    let base = BaseRing::polynomial(&ring);
    let vars: Vec<_> = ["x1", "x2", "x3", "x4"].iter().map(|v| parse_polynomial(v, &ring).unwrap()).collect();
    let k = FPModule::cyclic(&base, &vars).unwrap();
    c.bench_function("resolution/residue-field-4", |b| b.iter(|| black_box(minimal_resolution(&k, None).unwrap().betti)));
}

fn monomial_curve(c: &mut Criterion) {
    let ring = Ring::new(Field::Rational, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
    let prime = Ideal::from_strs(&ring, &["y^2 - x*z", "x^3 - y*z", "x^2*y - z^2"]).unwrap();
    c.bench_function("symbolic/curve-square", |b| {
        b.iter(|| black_box(symbolic_power(&prime, 2, &Separator::Auto).unwrap().ideal.gens().len()))
    });
}

fn kunz(c: &mut Criterion) {
    let ring = Ring::new(Field::prime(3).unwrap(), &["x", "y"], MonomialOrder::GrevLex).unwrap();
    let ideal = Ideal::from_strs(&ring, &["y^2 - x^3"]).unwrap();
    c.bench_function("kunz/cusp-f3", |b| {
        b.iter(|| {
            let ctx = FrobeniusContext::new(&ideal).unwrap();
            black_box(kunz_check(&ctx).unwrap().minimal_generators)
        })
    });
}

criterion_group!(benches, twisted_cubic, residue_field, monomial_curve, kunz);
criterion_main!(benches);
