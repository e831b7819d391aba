//! Acceptance suite: each test checks one criterion at its stated
//! tolerance (always exact) and prints one pass/fail line.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use adelman::adel::Adel;
use adelman::audit;
use adelman::category::AdditiveCategory;
use adelman::homology::HomologyFunctor;
use adelman::zfree::{FreeMorphism, FreeObject, ZFree};
use adelman::zmat;
use adelman::zmod::{embedding, free_resolution_object, invariant_factors, PresentedGroup, Zmod};

const SEED: u64 = 0xADE1;

fn report(number: u32, title: &str, ok: bool) {
    println!(
        "acceptance {number} ({title}): {}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "acceptance criterion {number} failed");
}

fn torsion(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

/// The worked object A = (Z^2 --(4 0; 0 1)--> Z^2 --(1; 2)--> Z).
fn object_a(adel: &Adel<ZFree>) -> adelman::adel::AdelObject<ZFree> {
    adel.object(
        FreeMorphism::new(zmat![[4, 0], [0, 1]]),
        FreeMorphism::new(zmat![[1], [2]]),
    )
    .unwrap()
}

#[test]
fn criterion_1_homology_of_the_worked_objects() {
    let adel = Adel::new(ZFree);
    let h = HomologyFunctor::new(Zmod);
    let e = embedding();

    let t0 = Instant::now();
    let inv_a = invariant_factors(&h.hat_object(&e, &object_a(&adel)));
    let within_a = t0.elapsed() < Duration::from_secs(1);

    let b = adel
        .object(FreeMorphism::new(zmat![[2]]), FreeMorphism::zero(1, 0))
        .unwrap();
    let t0 = Instant::now();
    let inv_b = invariant_factors(&h.hat_object(&e, &b));
    let within_b = t0.elapsed() < Duration::from_secs(1);

    let ok = inv_a.free_rank == 0
        && inv_a.torsion == torsion(&[2])
        && inv_b.free_rank == 0
        && inv_b.torsion == torsion(&[2])
        && within_a
        && within_b;
    report(1, "homology of the worked objects is Z/2", ok);
}

#[test]
fn criterion_2_nonzero_morphism_with_zero_image() {
    let adel = Adel::new(ZFree);
    let h = HomologyFunctor::new(Zmod);
    let e = embedding();
    let t0 = Instant::now();

    let source = adel
        .object(FreeMorphism::zero(0, 1), FreeMorphism::new(zmat![[2]]))
        .unwrap();
    let target = adel.include(&FreeObject::new(1));
    let f = adel
        .morphism(
            source.clone(),
            target,
            FreeMorphism::zero(0, 0),
            FreeMorphism::identity(1),
            FreeMorphism::zero(1, 0),
        )
        .unwrap();

    let nonzero_in_adel = adel.is_zero_morphism(&f).is_none();
    let image = h.hat_morphism(&e, &f);
    let zero = Zmod.zero_morphism(image.dom(), image.cod());
    let image_is_zero = Zmod.morphisms_equal(&image, &zero);
    let source_homology_trivial = invariant_factors(&h.hat_object(&e, &source)).is_trivial();
    let within = t0.elapsed() < Duration::from_secs(1);

    report(
        2,
        "[0,1,0] is nonzero but has zero homology image",
        nonzero_in_adel && image_is_zero && source_homology_trivial && within,
    );
}

#[test]
fn criterion_3_free_resolution_recovers_z_mod_6() {
    let h = HomologyFunctor::new(Zmod);
    let group = PresentedGroup::new(zmat![[6]]);
    let obj = free_resolution_object(&group);
    let shape_ok = obj.x0().mat() == &zmat![[6]]
        && obj.x1().mat().rows() == 1
        && obj.x1().mat().cols() == 0;
    let inv = invariant_factors(&h.hat_object(&embedding(), &obj));
    report(
        3,
        "free resolution of Z/6 has homology Z/6",
        shape_ok && inv.free_rank == 0 && inv.torsion == torsion(&[6]),
    );
}

#[test]
fn criterion_4_randomized_adelman_suite() {
    let t0 = Instant::now();
    let suite = audit::adel_suite(SEED, 200);
    let within = t0.elapsed() < Duration::from_secs(60);
    for check in &suite.checks {
        if check.fail > 0 {
            println!("  failing check: {} ({} failures)", check.name, check.fail);
        }
    }
    report(
        4,
        "200-instance Adelman invariant suite",
        suite.failures() == 0 && within,
    );
}

#[test]
fn criterion_5_randomized_homology_suite() {
    let t0 = Instant::now();
    let suite = audit::homology_suite(SEED, 100);
    let within = t0.elapsed() < Duration::from_secs(30);
    for check in &suite.checks {
        if check.fail > 0 {
            println!("  failing check: {} ({} failures)", check.name, check.fail);
        }
    }
    report(
        5,
        "100-instance homology invariant suite",
        suite.failures() == 0 && within,
    );
}

#[test]
fn criterion_6_randomized_linear_algebra_suite() {
    let t0 = Instant::now();
    let suite = audit::linalg_suite(SEED, 500);
    let within = t0.elapsed() < Duration::from_secs(30);
    for check in &suite.checks {
        if check.fail > 0 {
            println!("  failing check: {} ({} failures)", check.name, check.fail);
        }
    }
    report(
        6,
        "500-instance exact linear algebra suite",
        suite.failures() == 0 && within,
    );
}
