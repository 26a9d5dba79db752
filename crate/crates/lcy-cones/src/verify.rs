//! Consolidated verification suites over the family grid: per-model checks
//! of the structural configuration, dual bases, cone generation, biduality,
//! boundary-complement generation and the n=6 quotient system, plus the
//! finite-ray certificates for the nef cones.
//!
//! Reports are deterministic: for a fixed `(n, p)` the serialized report is
//! byte-identical across runs (timing is never part of a report).

use serde::{Deserialize, Serialize};

use crate::arith::rat_to_string;
use crate::cones::{self, surface_cones};
use crate::lattice::{self, RationalClassVector};
use crate::surface::{duals, CurveKind, SurfaceModel, SurfaceError};
use crate::ClassVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// Reserved for documented discrepancies in the published formulas,
    /// never for engine errors.
    Flagged,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub n: usize,
    pub p: Vec<usize>,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn has_fail(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    fn push(&mut self, name: &str, status: CheckStatus, detail: String) {
        self.checks.push(CheckResult {
            name: name.into(),
            status,
            detail,
        });
    }

    fn pass_fail(&mut self, name: &str, ok: bool, detail: String) {
        self.push(
            name,
            if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            detail,
        );
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("model n={} p={:?}\n", self.n, self.p);
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "PASS",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Flagged => "FLAGGED",
            };
            out.push_str(&format!("  [{tag}] {}", c.name));
            if !c.detail.is_empty() {
                out.push_str(&format!(" - {}", c.detail));
            }
            out.push('\n');
        }
        out
    }
}

/// Runs every check suite for one family model.
pub fn run_family_suite(n: usize, p: &[usize]) -> Result<SuiteReport, SurfaceError> {
    let model = SurfaceModel::build_family(n, p)?;
    let mut report = SuiteReport {
        n,
        p: p.to_vec(),
        checks: Vec::new(),
    };

    // Structural validation (anticanonicity, adjunction, cycle, incidence,
    // basis determinant, signature).
    let validation = model.validate_configuration();
    let failing: Vec<String> = validation
        .entries
        .iter()
        .filter(|e| !e.passed)
        .map(|e| format!("{}: {}", e.name, e.detail))
        .collect();
    report.pass_fail("configuration", validation.all_passed(), failing.join("; "));

    // Dual basis against the closed forms.
    dual_basis_check(&model, &mut report);

    // Cone-of-curves generation.
    match model.n {
        6 => match surface_cones::n6_system_check(&model) {
            Ok(n6) => {
                report.pass_fail(
                    "curve_cone_generation",
                    n6.all_passed(),
                    "generation certified via the quotient inequality system".into(),
                );
                report.pass_fail(
                    "n6_system",
                    n6.all_passed(),
                    [n6.duality_detail.as_str(), n6.quotient_detail.as_str()]
                        .iter()
                        .filter(|s| !s.is_empty())
                        .cloned()
                        .collect::<Vec<_>>()
                        .join("; "),
                );
            }
            Err(e) => report.pass_fail("curve_cone_generation", false, e.to_string()),
        },
        _ => match surface_cones::verify_curve_cone(&model) {
            Ok(cert) => {
                let missing: Vec<&str> = cert
                    .entries
                    .iter()
                    .filter(|(_, c)| !c.member)
                    .map(|(l, _)| l.as_str())
                    .collect();
                report.pass_fail(
                    "curve_cone_generation",
                    cert.all_effective(),
                    if missing.is_empty() {
                        format!("{} dual elements certified effective", cert.entries.len())
                    } else {
                        format!("no certificate for: {}", missing.join(", "))
                    },
                );
            }
            Err(e) => report.pass_fail("curve_cone_generation", false, e.to_string()),
        },
    }

    // The published n=2 generator list shows a single auxiliary curve while
    // the construction names two; both are included.
    if model.n == 2 {
        report.push(
            "curve_cone_generator_list",
            CheckStatus::Flagged,
            "published list shows one auxiliary curve; both F_1 and F_2 are included \
             and the generation certificate covers them"
                .into(),
        );
    }

    // Biduality of the curve cone.
    {
        let curves = surface_cones::cone_of_curves(&model).expect("family model");
        let nef = cones::dual_cone(&model.form, &curves).expect("dual");
        let back = cones::dual_cone(&model.form, &nef).expect("bidual");
        let equal = cones::cone_equal(&curves, &back).expect("same rank");
        report.pass_fail(
            "biduality",
            equal,
            format!("nef cone has {} extreme rays", nef.rays.len()),
        );
    }

    // Boundary complement generated by the interior (-2)-classes, index 1.
    {
        let complement = model
            .form
            .orthogonal_complement(&model.boundary_classes())
            .expect("rank matches");
        let roots: Vec<ClassVector> = model
            .curves_of_kind(CurveKind::InteriorMinusTwo)
            .iter()
            .map(|c| c.cls.clone())
            .collect();
        match model.form.is_generated_by(&complement, &roots) {
            Ok(cert) => {
                let index = cert
                    .index
                    .as_ref()
                    .map(rat_to_string)
                    .unwrap_or_else(|| "undefined".into());
                report.pass_fail(
                    "boundary_complement_generation",
                    cert.generates,
                    format!("index {index}"),
                );
            }
            Err(e) => report.pass_fail("boundary_complement_generation", false, e.to_string()),
        }
    }

    Ok(report)
}

fn dual_basis_check(model: &SurfaceModel, report: &mut SuiteReport) {
    let basis = match duals::family_basis(model) {
        Ok(b) => b,
        Err(e) => {
            report.pass_fail("dual_basis", false, e.to_string());
            return;
        }
    };
    let labels = duals::family_basis_labels(model).expect("basis exists");
    let computed = match model.form.dual_basis(&basis) {
        Ok(d) => d,
        Err(e) => {
            report.pass_fail("dual_basis", false, e.to_string());
            return;
        }
    };
    let closed = match duals::closed_form_duals(model) {
        Ok(c) => c,
        Err(e) => {
            report.pass_fail("dual_basis", false, e.to_string());
            return;
        }
    };

    let mut mismatches = Vec::new();
    let mut flagged_detail = None;
    let mut compared = 0usize;
    for entry in &closed {
        let pos = labels
            .iter()
            .position(|l| l == &entry.label)
            .expect("closed-form label is a basis label");
        let closed_rat = RationalClassVector::from_integer(&entry.value);
        let agree = computed[pos] == closed_rat;
        if entry.flagged {
            // Documented discrepancy: report both values verbatim.
            let computed_str: Vec<String> = computed[pos]
                .coords
                .iter()
                .map(rat_to_string)
                .collect();
            let closed_str: Vec<String> = entry
                .value
                .coords
                .iter()
                .map(|x| x.to_string())
                .collect();
            flagged_detail = Some(format!(
                "{}: Gram-inverse dual {:?} vs published expression {:?}{}",
                entry.label,
                computed_str,
                closed_str,
                if agree { " (unexpectedly equal)" } else { "" }
            ));
            continue;
        }
        compared += 1;
        if !agree {
            mismatches.push(entry.label.clone());
        }
    }

    let detail_tail = if model.n == 6 {
        " (chain duals; the auxiliary part of the basis has no published closed form)"
    } else if model.n == 4 {
        " (auxiliary duals paired with the chains their curves pass through)"
    } else {
        ""
    };
    report.pass_fail(
        "dual_basis",
        mismatches.is_empty(),
        if mismatches.is_empty() {
            format!("{compared} closed forms reproduced exactly{detail_tail}")
        } else {
            format!("mismatches: {}", mismatches.join(", "))
        },
    );
    if let Some(detail) = flagged_detail {
        report.push("dual_basis_f2", CheckStatus::Flagged, detail);
    }
}

/// The finite data certifying the Mori-Dream-Space property: the ambient
/// lattice is the full divisor class group (unimodular, hyperbolic
/// signature, rank bookkeeping), and the nef cone has an explicit finite
/// list of extreme rays. Semiampleness of nef divisors holds on these
/// families by the split-Hodge-structure argument and is recorded as a
/// citation rather than machine-checked.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MdsCertificate {
    pub n: usize,
    pub p: Vec<usize>,
    pub rank: usize,
    pub picard_structure: bool,
    pub nef_rays: Vec<ClassVector>,
    pub curve_rays: Vec<ClassVector>,
    pub semiample_note: String,
}

pub fn mds_certificate(n: usize, p: &[usize]) -> Result<MdsCertificate, SurfaceError> {
    let model = SurfaceModel::build_family(n, p)?;
    let base_rank = SurfaceModel::base_surface(n)?.form.rank;
    let total: usize = p.iter().sum();
    let det_ok = lattice::is_unimodular(&model.form.gram).expect("square");
    let sig_ok = lattice::signature(&model.form.gram).expect("symmetric")
        == (1, model.form.rank - 1, 0);
    let rank_ok = model.form.rank == base_rank + total;
    let curves = surface_cones::cone_of_curves(&model).expect("family model");
    let nef = cones::dual_cone(&model.form, &curves).expect("dual");
    Ok(MdsCertificate {
        n,
        p: p.to_vec(),
        rank: model.form.rank,
        picard_structure: det_ok && sig_ok && rank_ok,
        nef_rays: nef.rays,
        curve_rays: curves.rays,
        semiample_note: "nef implies semiample on the split-structure surface; \
                         cited, not machine-checked"
            .into(),
    })
}

/// Runs suites for several models, possibly concurrently; each suite is
/// internally sequential and the reports come back in input order, so the
/// output is identical to a sequential run.
pub fn run_suites(jobs: &[(usize, Vec<usize>)]) -> Vec<Result<SuiteReport, SurfaceError>> {
    let threads = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(jobs.len().max(1));
    if threads <= 1 || jobs.len() <= 1 {
        return jobs.iter().map(|(n, p)| run_family_suite(*n, p)).collect();
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut slots: Vec<Option<Result<SuiteReport, SurfaceError>>> = Vec::new();
    slots.resize_with(jobs.len(), || None);
    let slots = std::sync::Mutex::new(&mut slots);
    std::thread::scope(|scope| {
        for _ in 0..threads {
            scope.spawn(|| loop {
                let ix = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if ix >= jobs.len() {
                    break;
                }
                let (n, p) = &jobs[ix];
                let report = run_family_suite(*n, p);
                slots.lock().unwrap()[ix] = Some(report);
            });
        }
    });
    slots
        .into_inner()
        .unwrap()
        .iter_mut()
        .map(|s| s.take().expect("every job ran"))
        .collect()
}

/// The desk-scale verification grid: for every boundary length, all depth
/// vectors within the per-chain bound and the total bound, one
/// representative per dihedral symmetry class of the chain arrangement
/// (models related by rotating or reflecting the boundary cycle are
/// isometric, so every check result transfers).
pub fn desk_grid() -> Vec<(usize, Vec<usize>)> {
    desk_grid_bounded(4, 14)
}

pub fn desk_grid_bounded(max_depth: usize, max_total: usize) -> Vec<(usize, Vec<usize>)> {
    let mut out = Vec::new();
    // The n=1 family needs three blowups for the flex before the chain
    // starts, so its depth range sits two above the per-chain bound.
    for p1 in 3..=(max_depth + 2).min(max_total) {
        out.push((1, vec![p1]));
    }
    for n in 2..=6 {
        let mut stack = vec![Vec::<usize>::new()];
        while let Some(prefix) = stack.pop() {
            if prefix.len() == n {
                let total: usize = prefix.iter().sum();
                if total <= max_total && is_canonical_under_dihedral(&prefix) {
                    out.push((n, prefix));
                }
                continue;
            }
            for d in (1..=max_depth).rev() {
                let mut next = prefix.clone();
                next.push(d);
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

/// True when `p` is the lexicographically smallest vector in its orbit
/// under the dihedral action on chain positions.
fn is_canonical_under_dihedral(p: &[usize]) -> bool {
    let n = p.len();
    let mut candidate = p.to_vec();
    for flip in [false, true] {
        let base: Vec<usize> = if flip {
            p.iter().rev().copied().collect()
        } else {
            p.to_vec()
        };
        for shift in 0..n {
            let rotated: Vec<usize> = (0..n).map(|i| base[(i + shift) % n]).collect();
            if rotated < candidate {
                candidate = rotated;
            }
        }
    }
    candidate == *p
}
