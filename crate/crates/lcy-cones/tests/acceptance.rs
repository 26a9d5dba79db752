//! Acceptance suite: one test per criterion, each running over the full
//! desk grid (every boundary length with all depth vectors within the
//! per-chain and total bounds, one representative per dihedral symmetry
//! class). Every check is an exact identity; there are no tolerances
//! anywhere. Each test prints a one-line summary (visible with
//! `--nocapture`).

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use lcy_cones::arith::{Int, XorShift};
use lcy_cones::cones::{
    self, c_prime_cone, cone_of_curves, n6_system_check, nef_cone, surface_cones,
    verify_curve_cone, RationalCone,
};
use lcy_cones::coxeter::{
    self, chamber_reduce, is_in_chamber, sigma_membership, simple_roots, DomainMembership,
};
use lcy_cones::lattice::{self, RationalClassVector};
use lcy_cones::surface::{duals, CurveKind, SurfaceModel};
use lcy_cones::verify::desk_grid;
use lcy_cones::ClassVector;

fn build(n: usize, p: &[usize]) -> SurfaceModel {
    SurfaceModel::build_family(n, p).expect("grid model builds")
}

/// Nef cones are reused between criteria; the computation is deterministic,
/// so caching is purely a matter of speed.
fn cached_nef(n: usize, p: &[usize]) -> RationalCone {
    static CACHE: OnceLock<Mutex<HashMap<(usize, Vec<usize>), RationalCone>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&(n, p.to_vec())) {
        return hit.clone();
    }
    let model = build(n, p);
    let nef = nef_cone(&model).expect("nef cone");
    cache
        .lock()
        .unwrap()
        .insert((n, p.to_vec()), nef.clone());
    nef
}

fn model_seed(n: usize, p: &[usize]) -> u64 {
    let mut s = 0x9E37_79B9_7F4A_7C15u64 ^ (n as u64);
    for &d in p {
        s = s.rotate_left(7) ^ (d as u64 + 0x100);
    }
    s
}

/// Criterion 1: the Gram-inverse dual of the family curve basis reproduces
/// the closed-form dual expressions coordinate-for-coordinate, exactly. For
/// n=2 everything matches except the dual of F_2, which is emitted flagged
/// with both values; for n=6 the chain duals match the telescoping divisors
/// (the auxiliary basis part has no published closed form).
#[test]
fn criterion_01_dual_basis_reproduction() {
    let mut compared = 0usize;
    let mut flagged = 0usize;
    for (n, p) in desk_grid() {
        let model = build(n, &p);
        let basis = duals::family_basis(&model).unwrap();
        let labels = duals::family_basis_labels(&model).unwrap();
        let computed = model.form.dual_basis(&basis).unwrap();
        let closed = duals::closed_form_duals(&model).unwrap();
        for entry in &closed {
            let pos = labels.iter().position(|l| l == &entry.label).unwrap();
            let closed_rat = RationalClassVector::from_integer(&entry.value);
            if entry.flagged {
                assert_eq!(n, 2, "only the n=2 dual of F_2 is a known discrepancy");
                assert_ne!(
                    computed[pos], closed_rat,
                    "n={n} p={p:?} {}: the flagged published expression should differ",
                    entry.label
                );
                flagged += 1;
            } else {
                assert_eq!(
                    computed[pos], closed_rat,
                    "n={n} p={p:?} {}",
                    entry.label
                );
                compared += 1;
            }
        }
        // Exactness of the dual itself: B*_i . B_j = delta, as rationals.
        for (i, d) in computed.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                let pairing = model.form.pair_rational(b, d).unwrap();
                assert_eq!(pairing.is_one(), i == j);
                assert!(pairing.is_one() || pairing.is_zero());
            }
        }
    }
    println!("criterion 1 PASS: {compared} closed-form duals exact, {flagged} flagged (n=2 F_2*)");
}

/// Criterion 2: the generator lists generate the cone of curves. For
/// n <= 5 every dual-basis element receives an exact nonnegative-rational
/// certificate over the generators; for n=6 the generation is certified by
/// the quotient inequality system (the published argument for that case).
#[test]
fn criterion_02_curve_cone_generation() {
    let mut certified = 0usize;
    for (n, p) in desk_grid() {
        let model = build(n, &p);
        if n <= 5 {
            let report = verify_curve_cone(&model).unwrap();
            assert!(
                report.all_effective(),
                "n={n} p={p:?}: some dual element has no certificate"
            );
            let curves = cone_of_curves(&model).unwrap();
            let gens = curves.ray_coords();
            let basis = duals::family_basis(&model).unwrap();
            let dualbasis = model.form.dual_basis(&basis).unwrap();
            for ((label, cert), dual) in report.entries.iter().zip(&dualbasis) {
                // The certificate reproduces the dual element exactly.
                let coeffs = cert.coefficients.as_ref().unwrap();
                let mut acc = vec![lcy_cones::Rat::zero(); model.form.rank];
                for (c, g) in coeffs.iter().zip(&gens) {
                    for (a, v) in acc.iter_mut().zip(g) {
                        *a += c * v;
                    }
                }
                assert_eq!(acc, dual.coords, "n={n} p={p:?} {label}");
                assert!(coeffs.iter().all(|c| !c.is_negative()));
                certified += 1;
            }
        } else {
            let report = n6_system_check(&model).unwrap();
            assert!(
                report.all_passed(),
                "n=6 p={p:?}: {} {}",
                report.duality_detail,
                report.quotient_detail
            );
            certified += 1;
        }
    }
    println!("criterion 2 PASS: {certified} generation certificates");
}

/// Criterion 3: double dualization is the identity on every grid model's
/// cone of curves.
#[test]
fn criterion_03_biduality() {
    let mut models = 0usize;
    for (n, p) in desk_grid() {
        let model = build(n, &p);
        let curves = cone_of_curves(&model).unwrap();
        let nef = cached_nef(n, &p);
        let back = cones::dual_cone(&model.form, &nef).unwrap();
        assert!(
            cones::cone_equal(&curves, &back).unwrap(),
            "n={n} p={p:?}: dual of dual differs from the curve cone"
        );
        models += 1;
    }
    println!("criterion 3 PASS: biduality on {models} models");
}

/// Criterion 4: structural invariants: K + D = 0; the curve basis is
/// unimodular; the ambient form has hyperbolic signature; adjunction
/// C^2 - C.D = -2 for the inventory; the chain incidence pattern
/// D_i . E_{i,j} = [j = p_i].
#[test]
fn criterion_04_structural_invariants() {
    let mut models = 0usize;
    for (n, p) in desk_grid() {
        let model = build(n, &p);
        let report = model.validate_configuration();
        assert!(
            report.all_passed(),
            "n={n} p={p:?}: {:?}",
            report
                .entries
                .iter()
                .filter(|e| !e.passed)
                .collect::<Vec<_>>()
        );
        // Spot assertions straight from the definition, independent of the
        // validator's bookkeeping.
        assert!(model.canonical.add(&model.boundary_total()).is_zero());
        let basis = duals::family_basis(&model).unwrap();
        let det = lattice::determinant(&model.form.gram_of(&basis).unwrap()).unwrap();
        assert!(det.abs().is_one());
        assert_eq!(
            lattice::signature(&model.form.gram).unwrap(),
            (1, model.form.rank - 1, 0)
        );
        for i in 1..=n {
            for j in 1..=p[i - 1] {
                let di = model.class_of(&format!("D_{i}")).unwrap();
                let e = model.class_of(&format!("E_{{{i},{j}}}")).unwrap();
                let want = Int::from((j == p[i - 1]) as i64);
                assert_eq!(model.form.pair(&di, &e).unwrap(), want);
            }
        }
        models += 1;
    }
    println!("criterion 4 PASS: structural invariants on {models} models");
}

/// Criterion 5: the boundary-orthogonal sublattice is generated by the
/// interior (-2)-classes with index exactly 1.
#[test]
fn criterion_05_boundary_complement_generation() {
    let mut models = 0usize;
    for (n, p) in desk_grid() {
        let model = build(n, &p);
        let complement = model
            .form
            .orthogonal_complement(&model.boundary_classes())
            .unwrap();
        let roots: Vec<ClassVector> = model
            .curves_of_kind(CurveKind::InteriorMinusTwo)
            .iter()
            .map(|c| c.cls.clone())
            .collect();
        let cert = model.form.is_generated_by(&complement, &roots).unwrap();
        assert!(cert.generates, "n={n} p={p:?}");
        assert!(cert.index.unwrap().is_one(), "n={n} p={p:?}");
        models += 1;
    }
    println!("criterion 5 PASS: boundary complement generation on {models} models");
}

/// Criterion 6: the n=6 system for depths up to 3: the telescoping-divisor
/// duality identities, the relation among the five auxiliary classes, and
/// the equality of the six-inequality cone with the orthant image in the
/// rank-four quotient.
#[test]
fn criterion_06_n6_system() {
    let mut models = 0usize;
    for (n, p) in desk_grid() {
        if n != 6 || p.iter().any(|&d| d > 3) {
            continue;
        }
        let model = build(n, &p);
        let report = n6_system_check(&model).unwrap();
        assert!(report.duality_identities, "p={p:?}: {}", report.duality_detail);
        assert!(report.relation_holds, "p={p:?}");
        assert!(
            report.quotient_cone_matches,
            "p={p:?}: {}",
            report.quotient_detail
        );
        models += 1;
    }
    assert!(models > 0);
    println!("criterion 6 PASS: quotient system on {models} n=6 models");
}

/// Criterion 7: on 1000 pseudorandom integer classes per model with
/// coordinates in [-5, 5], filtered to the positive cone, chamber reduction
/// terminates within 10000 iterations, lands in the chamber, replays
/// exactly, and conserves the square and the boundary pairings.
#[test]
fn criterion_07_weyl_machinery() {
    let mut reduced = 0usize;
    for (n, p) in desk_grid() {
        let model = build(n, &p);
        let rs = simple_roots(&model);
        let ample = surface_cones::ample_reference(&model).unwrap();
        let boundary = model.boundary_classes();
        let mut rng = XorShift::new(model_seed(n, &p));
        for _ in 0..1000 {
            let x = ClassVector::new(
                (0..model.form.rank)
                    .map(|_| Int::from(rng.range_i64(-5, 5)))
                    .collect(),
            );
            if model.form.self_pair(&x).unwrap().is_negative()
                || model.form.pair(&x, &ample).unwrap().is_negative()
            {
                continue;
            }
            let trace = chamber_reduce(&rs, &x, 10_000).expect("terminates within the cap");
            assert!(is_in_chamber(&rs, &trace.output).unwrap());
            assert_eq!(trace.replay(&rs).unwrap(), trace.output);
            assert_eq!(
                model.form.self_pair(&trace.output).unwrap(),
                model.form.self_pair(&x).unwrap()
            );
            for b in &boundary {
                assert_eq!(
                    model.form.pair(&trace.output, b).unwrap(),
                    model.form.pair(&x, b).unwrap()
                );
            }
            reduced += 1;
        }
    }
    assert!(reduced > 0);
    println!("criterion 7 PASS: {reduced} chamber reductions verified");
}

/// Criterion 8: fundamental-domain membership around a fixed interior point
/// y: (a) y itself is verified to radius 5; (b) every sampled class whose
/// membership verifies to radius 3 pairs nonnegatively with every simple
/// root (the single-reflection closed form (x.a)(a.y) >= 0 forces it), and
/// reflecting a sample out of the chamber is caught as a violation.
#[test]
fn criterion_08_sigma_membership() {
    let mut verified_samples = 0usize;
    let mut violations = 0usize;
    for (n, p) in desk_grid() {
        let model = build(n, &p);
        let rs = simple_roots(&model);
        let y = surface_cones::ample_reference(&model).unwrap();

        let at_y = sigma_membership(&model, &y, &y, 5, &[]).unwrap();
        assert_eq!(
            at_y.status,
            DomainMembership::VerifiedToRadius(5),
            "n={n} p={p:?}"
        );

        let nef = cached_nef(n, &p);
        let samples: Vec<ClassVector> = nef
            .rays
            .iter()
            .take(6)
            .cloned()
            .chain([y.clone()])
            .collect();
        for x in &samples {
            let result = sigma_membership(&model, &y, x, 3, &[]).unwrap();
            if let DomainMembership::VerifiedToRadius(r) = result.status {
                assert_eq!(r, 3);
                for d in &rs.simple_roots {
                    assert!(
                        !model.form.pair(x, d).unwrap().is_negative(),
                        "n={n} p={p:?}: verified point outside the chamber"
                    );
                }
                verified_samples += 1;
            }
        }

        // Negative control: push a sample out of the chamber across the
        // first root not orthogonal to it; the single reflection must be a
        // witness.
        for x in &samples {
            let cross = rs
                .simple_roots
                .iter()
                .position(|d| model.form.pair(x, d).unwrap().is_positive());
            if let Some(ix) = cross {
                let moved = coxeter::reflect(&model.form, &rs.simple_roots[ix], x).unwrap();
                let result = sigma_membership(&model, &y, &moved, 3, &[]).unwrap();
                match result.status {
                    DomainMembership::Violated(word) => {
                        let image = coxeter::replay_word(&model, &word, &moved, &[]).unwrap();
                        assert!(
                            model.form.pair(&image, &y).unwrap()
                                < model.form.pair(&moved, &y).unwrap()
                        );
                        violations += 1;
                    }
                    other => panic!("n={n} p={p:?}: expected violation, got {other:?}"),
                }
                break;
            }
        }
    }
    assert!(verified_samples > 0 && violations > 0);
    println!(
        "criterion 8 PASS: {verified_samples} verified samples in the chamber, {violations} witnessed violations"
    );
}

/// Criterion 9: the inertia-based definiteness classification agrees with a
/// brute-force principal-minor oracle on 10000 random symmetric integer
/// matrices of dimension up to 4 with entries in [-3, 3].
#[test]
fn criterion_09_definiteness_oracle() {
    fn minor_oracle(m: &[Vec<Int>]) -> lattice::Definiteness {
        let n = m.len();
        let mut strict = true;
        let mut weak = true;
        for mask in 1u32..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let sub: Vec<Vec<Int>> = idx
                .iter()
                .map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect())
                .collect();
            let det = lattice::determinant(&sub).unwrap();
            let signed = if idx.len() % 2 == 0 { det } else { -det };
            if !signed.is_positive() {
                strict = false;
            }
            if signed.is_negative() {
                weak = false;
            }
        }
        if strict {
            lattice::Definiteness::NegativeDefinite
        } else if weak {
            lattice::Definiteness::NegativeSemidefinite
        } else {
            lattice::Definiteness::Other
        }
    }

    let mut rng = XorShift::new(0xACCE_97ED);
    let mut counts = [0usize; 3];
    for trial in 0..10_000 {
        let n = (trial % 4) + 1;
        let mut m = vec![vec![Int::zero(); n]; n];
        for i in 0..n {
            for j in 0..=i {
                let v = Int::from(rng.range_i64(-3, 3));
                m[i][j] = v.clone();
                m[j][i] = v;
            }
        }
        let fast = lattice::definiteness(&m).unwrap();
        assert_eq!(fast, minor_oracle(&m), "matrix {m:?}");
        counts[match fast {
            lattice::Definiteness::NegativeDefinite => 0,
            lattice::Definiteness::NegativeSemidefinite => 1,
            lattice::Definiteness::Other => 2,
        }] += 1;
        let (pos, neg, zero) = lattice::signature(&m).unwrap();
        assert_eq!(pos + neg + zero, n);
    }
    assert!(counts.iter().all(|&c| c > 0), "all classes exercised: {counts:?}");
    println!(
        "criterion 9 PASS: 10000 matrices ({} definite, {} semidefinite, {} other)",
        counts[0], counts[1], counts[2]
    );
}

/// Criterion 10: the span-restricted cones are rational polyhedral with
/// explicit finite ray lists for every singleton and every pair of disjoint
/// interior (-1)-curves: every returned ray is nef and lies in the span of
/// the boundary with the chosen curves.
#[test]
fn criterion_10_c_prime_cones() {
    let mut cones_checked = 0usize;
    for (n, p) in desk_grid() {
        let model = build(n, &p);
        let minus_ones: Vec<String> = model
            .curves_of_kind(CurveKind::ExceptionalMinusOne)
            .iter()
            .map(|c| c.label.clone())
            .collect();
        let mut selections: Vec<Vec<String>> =
            minus_ones.iter().map(|l| vec![l.clone()]).collect();
        for i in 0..minus_ones.len() {
            for j in i + 1..minus_ones.len() {
                let a = model.class_of(&minus_ones[i]).unwrap();
                let b = model.class_of(&minus_ones[j]).unwrap();
                if model.form.pair(&a, &b).unwrap().is_zero() {
                    selections.push(vec![minus_ones[i].clone(), minus_ones[j].clone()]);
                }
            }
        }

        for labels in &selections {
            let cone = c_prime_cone(&model, labels).unwrap();
            // Explicit finite ray list, each ray nef and inside the
            // nonnegative span of the boundary with the chosen curves.
            let span_gens: Vec<Vec<Int>> = model
                .boundary_classes()
                .iter()
                .map(|c| c.coords.clone())
                .chain(
                    labels
                        .iter()
                        .map(|l| model.class_of(l).unwrap().coords.clone()),
                )
                .collect();
            for ray in &cone.rays {
                for c in &model.curves {
                    assert!(
                        !model.form.pair(ray, &c.cls).unwrap().is_negative(),
                        "n={n} p={p:?} {labels:?}: ray not nef"
                    );
                }
                assert!(
                    cones::simplex::express_nonneg(&span_gens, &ray.coords).is_ok(),
                    "n={n} p={p:?} {labels:?}: ray escapes the span cone"
                );
            }
            cones_checked += 1;
        }
    }
    println!("criterion 10 PASS: {cones_checked} span-restricted cones verified");
}
