//! Root systems, Weyl reflections, fundamental-chamber reduction, bounded
//! orbit enumeration and fundamental-domain membership.
//!
//! The reflection in a root `a` with `a^2 = -2` is `s_a(b) = b + (a.b) a`.
//! The simple roots of a family model are its interior (-2)-curves; the
//! Weyl group they generate is infinite in general, so every group-level
//! statement here is a bounded-radius procedure that reports the radius it
//! checked.

use num_bigint::Sign;
use num_traits::{Signed, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

use crate::arith::Int;
use crate::cones::surface_cones;
use crate::lattice::{ClassVector, IntersectionForm, LatticeError};
use crate::surface::{CurveKind, SurfaceModel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("reflection vector must have self-intersection -2, got {0}")]
    NotARoot(Int),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the reference class is not in the interior of the nef cone: {0}")]
    YNotInterior(String),
    #[error("chamber reduction exceeded {max_iter} iterations")]
    MaxIterExceeded {
        max_iter: usize,
        partial: Box<ReductionTrace>,
    },
    #[error("extra generator {label} does not preserve the configuration: {reason}")]
    BadExtraGenerator { label: String, reason: String },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

pub type Result<T> = std::result::Result<T, CoxeterError>;

/// Simple roots of a model together with the form they reflect under.
#[derive(Debug, Clone)]
pub struct RootSystemData {
    pub form: IntersectionForm,
    pub simple_roots: Vec<ClassVector>,
    pub labels: Vec<String>,
}

/// The simple roots: every interior (-2)-curve of the inventory, in
/// inventory order (chain roots first, then the central curves).
pub fn simple_roots(model: &SurfaceModel) -> RootSystemData {
    let mut roots = Vec::new();
    let mut labels = Vec::new();
    for c in model.curves_of_kind(CurveKind::InteriorMinusTwo) {
        roots.push(c.cls.clone());
        labels.push(c.label.clone());
    }
    RootSystemData {
        form: model.form.clone(),
        simple_roots: roots,
        labels,
    }
}

impl RootSystemData {
    fn check_rank(&self, v: &ClassVector) -> Result<()> {
        if v.rank() != self.form.rank {
            return Err(CoxeterError::DimensionMismatch {
                expected: self.form.rank,
                got: v.rank(),
            });
        }
        Ok(())
    }
}

/// `s_a(b) = b + (a.b) a`; requires `a^2 = -2`.
pub fn reflect(form: &IntersectionForm, root: &ClassVector, b: &ClassVector) -> Result<ClassVector> {
    let sq = form.self_pair(root)?;
    if sq != Int::from(-2) {
        return Err(CoxeterError::NotARoot(sq));
    }
    let c = form.pair(root, b)?;
    Ok(b.add(&root.scale(&c)))
}

/// Membership in the fundamental chamber: `x . d >= 0` for every simple root.
pub fn is_in_chamber(rs: &RootSystemData, x: &ClassVector) -> Result<bool> {
    rs.check_rank(x)?;
    for d in &rs.simple_roots {
        if rs.form.pair(x, d)?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A chamber-reduction run: the word of simple-root indices applied left to
/// right carries `input` to `output`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub input: ClassVector,
    pub word: Vec<usize>,
    pub output: ClassVector,
    pub iterations: usize,
}

impl ReductionTrace {
    /// Replays the word on the input; used by callers to confirm the trace.
    pub fn replay(&self, rs: &RootSystemData) -> Result<ClassVector> {
        let mut x = self.input.clone();
        for &ix in &self.word {
            x = reflect(&rs.form, &rs.simple_roots[ix], &x)?;
        }
        Ok(x)
    }
}

/// Repeatedly reflects in the lowest-indexed simple root pairing negatively
/// with `x` until `x` lies in the fundamental chamber. Terminates for `x` in
/// the closure of the positive cone; the iteration cap guards everything
/// else.
pub fn chamber_reduce(rs: &RootSystemData, x: &ClassVector, max_iter: usize) -> Result<ReductionTrace> {
    rs.check_rank(x)?;
    let mut current = x.clone();
    let mut word = Vec::new();
    let mut iterations = 0usize;
    loop {
        let violated = rs
            .simple_roots
            .iter()
            .position(|d| rs.form.pair(&current, d).expect("rank checked").is_negative());
        let ix = match violated {
            Some(ix) => ix,
            None => {
                return Ok(ReductionTrace {
                    input: x.clone(),
                    word,
                    output: current,
                    iterations,
                })
            }
        };
        if iterations >= max_iter {
            return Err(CoxeterError::MaxIterExceeded {
                max_iter,
                partial: Box::new(ReductionTrace {
                    input: x.clone(),
                    word,
                    output: current,
                    iterations,
                }),
            });
        }
        current = reflect(&rs.form, &rs.simple_roots[ix], &current)?;
        word.push(ix);
        iterations += 1;
    }
}

/// All classes obtainable from the seeds by at most `radius` simple
/// reflections, deduplicated, in a canonical order.
pub fn orbit_ball(rs: &RootSystemData, seeds: &[ClassVector], radius: usize) -> Result<Vec<ClassVector>> {
    for s in seeds {
        rs.check_rank(s)?;
    }
    let mut seen: BTreeSet<ClassVector> = seeds.iter().cloned().collect();
    let mut frontier: Vec<ClassVector> = seeds.to_vec();
    for _ in 0..radius {
        let mut next = Vec::new();
        for x in &frontier {
            for d in &rs.simple_roots {
                let y = reflect(&rs.form, d, x)?;
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    Ok(seen.into_iter().collect())
}

/// A user-supplied symmetry beyond the Weyl group: an integer matrix acting
/// on column coordinate vectors, required to preserve the form and fix every
/// boundary class.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct ExtraGenerator {
    pub label: String,
    #[serde(with = "crate::arith::serde_int_mat")]
    pub matrix: Vec<Vec<Int>>,
}

impl ExtraGenerator {
    pub fn apply(&self, v: &ClassVector) -> ClassVector {
        let n = self.matrix.len();
        let mut out = vec![Int::zero(); n];
        for (i, row) in self.matrix.iter().enumerate() {
            out[i] = crate::arith::dot(row, &v.coords);
        }
        ClassVector::new(out)
    }

    fn validate(&self, model: &SurfaceModel) -> Result<()> {
        let rank = model.form.rank;
        if self.matrix.len() != rank || self.matrix.iter().any(|r| r.len() != rank) {
            return Err(CoxeterError::BadExtraGenerator {
                label: self.label.clone(),
                reason: "matrix dimensions do not match the ambient rank".into(),
            });
        }
        // Form preservation on the standard basis pairs.
        for i in 0..rank {
            let ei = unit(rank, i);
            let gei = self.apply(&ei);
            for j in 0..rank {
                let ej = unit(rank, j);
                let gej = self.apply(&ej);
                if model.form.pair(&gei, &gej)? != model.form.gram[i][j] {
                    return Err(CoxeterError::BadExtraGenerator {
                        label: self.label.clone(),
                        reason: format!("does not preserve the pairing at ({i},{j})"),
                    });
                }
            }
        }
        for b in model.boundary_classes() {
            if self.apply(&b) != b {
                return Err(CoxeterError::BadExtraGenerator {
                    label: self.label.clone(),
                    reason: "does not fix the boundary classes".into(),
                });
            }
        }
        Ok(())
    }
}

fn unit(rank: usize, i: usize) -> ClassVector {
    let mut v = vec![Int::zero(); rank];
    v[i] = Int::from(1);
    ClassVector::new(v)
}

/// Outcome of the bounded fundamental-domain membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomainMembership {
    /// No group element in the ball strictly decreased `x . y`.
    VerifiedToRadius(usize),
    /// The word (generator labels, applied left to right) strictly
    /// decreases `x . y`.
    Violated(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainMembershipResult {
    pub status: DomainMembership,
    pub witness: Option<Vec<String>>,
}

/// Tests membership of `x` in the fundamental domain
/// `{x : g x . y >= x . y for all g}` up to the given word radius over the
/// simple reflections and any extra generators.
///
/// For a single reflection `s_a` the defining inequality collapses to the
/// closed form `(x . a)(a . y) >= 0`, which is how radius-one elements are
/// evaluated (and cross-checked against the direct computation).
pub fn sigma_membership(
    model: &SurfaceModel,
    y: &ClassVector,
    x: &ClassVector,
    radius: usize,
    extra: &[ExtraGenerator],
) -> Result<DomainMembershipResult> {
    let rs = simple_roots(model);
    rs.check_rank(y)?;
    rs.check_rank(x)?;
    for g in extra {
        g.validate(model)?;
    }
    // y must be strictly inside the nef cone: positive square and positive
    // degree on every curve generator.
    if !model.form.self_pair(y)?.is_positive() {
        return Err(CoxeterError::YNotInterior("y^2 <= 0".into()));
    }
    for c in &model.curves {
        if !model.form.pair(y, &c.cls)?.is_positive() {
            return Err(CoxeterError::YNotInterior(format!(
                "y . {} <= 0",
                c.label
            )));
        }
    }

    let base = model.form.pair(x, y)?;

    // Radius one over the simple roots via the closed form.
    if radius >= 1 {
        for (d, label) in rs.simple_roots.iter().zip(&rs.labels) {
            let xa = model.form.pair(x, d)?;
            let ay = model.form.pair(d, y)?;
            let closed = &xa * &ay;
            debug_assert_eq!(
                model.form.pair(&reflect(&model.form, d, x)?, y).unwrap() - &base,
                closed.clone(),
                "closed form matches the direct evaluation"
            );
            if closed.sign() == Sign::Minus {
                return Ok(DomainMembershipResult {
                    status: DomainMembership::Violated(vec![label.clone()]),
                    witness: Some(vec![label.clone()]),
                });
            }
        }
    }

    // Breadth-first over the orbit of x, deduplicating by image vector.
    let mut seen: BTreeSet<ClassVector> = BTreeSet::new();
    seen.insert(x.clone());
    let mut frontier: Vec<(ClassVector, Vec<String>)> = vec![(x.clone(), Vec::new())];
    for _level in 1..=radius {
        let mut next = Vec::new();
        for (v, word) in &frontier {
            let mut images: Vec<(ClassVector, String)> = Vec::new();
            for (d, label) in rs.simple_roots.iter().zip(&rs.labels) {
                images.push((reflect(&model.form, d, v)?, label.clone()));
            }
            for g in extra {
                images.push((g.apply(v), g.label.clone()));
            }
            for (img, label) in images {
                if !seen.insert(img.clone()) {
                    continue;
                }
                let mut w = word.clone();
                w.push(label);
                if model.form.pair(&img, y)? < base {
                    return Ok(DomainMembershipResult {
                        status: DomainMembership::Violated(w.clone()),
                        witness: Some(w),
                    });
                }
                next.push((img, w));
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }

    Ok(DomainMembershipResult {
        status: DomainMembership::VerifiedToRadius(radius),
        witness: None,
    })
}

/// Replays a violation word on `x` (labels resolve to simple roots first,
/// then extra generators).
pub fn replay_word(
    model: &SurfaceModel,
    word: &[String],
    x: &ClassVector,
    extra: &[ExtraGenerator],
) -> Result<ClassVector> {
    let rs = simple_roots(model);
    let mut v = x.clone();
    for label in word {
        if let Some(ix) = rs.labels.iter().position(|l| l == label) {
            v = reflect(&model.form, &rs.simple_roots[ix], &v)?;
        } else if let Some(g) = extra.iter().find(|g| &g.label == label) {
            v = g.apply(&v);
        } else {
            return Err(CoxeterError::BadExtraGenerator {
                label: label.clone(),
                reason: "unknown generator label in word".into(),
            });
        }
    }
    Ok(v)
}

/// Ample class used as the default interior reference for the family.
pub fn default_interior_point(model: &SurfaceModel) -> Result<ClassVector> {
    surface_cones::ample_reference(model)
        .map_err(|e| CoxeterError::YNotInterior(e.to_string()))
}
