//! Blowup families of log Calabi-Yau surface pairs as lattice models.
//!
//! A `SurfaceModel` holds the ambient intersection form, the canonical
//! class, the cyclically ordered boundary and the full labeled curve
//! inventory of one member of the six families: a base pair (projective
//! plane, quadric, Hirzebruch surface or a del Pezzo of degree five or six)
//! blown up `p_i` times at a marked point `q_i` of each boundary component.
//! Every blowup adds an exceptional basis vector with square -1, subtracts
//! it from each curve through the center, and adds it to the canonical
//! class; the strict-transform bookkeeping is entirely class-level.

mod base;
pub mod duals;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::Int;
use crate::lattice::{self, ClassVector, IntersectionForm, LatticeError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("unsupported boundary length {0} (supported: 1..=6)")]
    UnsupportedN(usize),
    #[error("unknown curve label {0}")]
    UnknownLabel(String),
    #[error("curves {0} and {1} cannot share a point (intersection {2})")]
    InconsistentIncidence(String, String, Int),
    #[error("invalid blowup depth vector: {0}")]
    InvalidDepth(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

pub type Result<T> = std::result::Result<T, SurfaceError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    Boundary,
    ExceptionalMinusOne,
    InteriorMinusTwo,
    InteriorExtra,
}

/// A labeled curve class in the inventory.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRecord {
    pub label: String,
    pub kind: CurveKind,
    #[serde(rename = "coords")]
    pub cls: ClassVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupStep {
    pub incident: Vec<String>,
    pub new_label: String,
}

/// One family member. `curves` is the full inventory (boundary components
/// first, then the exceptional chains, then the auxiliary curves);
/// `boundary` lists the labels of the boundary cycle in order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceModel {
    pub n: usize,
    pub p: Vec<usize>,
    #[serde(flatten)]
    pub form: IntersectionForm,
    pub canonical: ClassVector,
    pub boundary: Vec<String>,
    pub curves: Vec<CurveRecord>,
    pub history: Vec<BlowupStep>,
}

impl SurfaceModel {
    /// The unblown base pair of the family with `n` boundary components,
    /// together with its auxiliary curves.
    pub fn base_surface(n: usize) -> Result<SurfaceModel> {
        let data = base::base_data(n).ok_or(SurfaceError::UnsupportedN(n))?;
        let labels: Vec<String> = data.labels.iter().map(|s| s.to_string()).collect();
        let gram: Vec<Vec<Int>> = data
            .gram
            .iter()
            .map(|row| row.iter().map(|&v| Int::from(v)).collect())
            .collect();
        let form = IntersectionForm::new(labels, gram)?;
        let canonical = ClassVector::from_i64(data.canonical);
        let mut curves: Vec<CurveRecord> = Vec::new();
        let mut boundary = Vec::new();
        for (label, coords) in data.boundary {
            boundary.push(label.to_string());
            curves.push(CurveRecord {
                label: label.to_string(),
                kind: CurveKind::Boundary,
                cls: ClassVector::from_i64(coords),
            });
        }
        for f in data.f_curves {
            curves.push(CurveRecord {
                label: f.label.to_string(),
                kind: CurveKind::InteriorExtra,
                cls: ClassVector::from_i64(f.coords),
            });
        }
        let mut model = SurfaceModel {
            n,
            p: vec![0; n],
            form,
            canonical,
            boundary,
            curves,
            history: Vec::new(),
        };
        model.reclassify();
        Ok(model)
    }

    /// Executes the full blowup schedule of the family: at each boundary
    /// component `i` the first blowup is centered on `D_i` together with
    /// every auxiliary curve through `q_i`, and each of the `p_i - 1`
    /// further blowups on `D_i` and the latest exceptional curve. The n=1
    /// flex tangency keeps the auxiliary curve incident for the first three
    /// steps.
    pub fn build_family(n: usize, p: &[usize]) -> Result<SurfaceModel> {
        let data = base::base_data(n).ok_or(SurfaceError::UnsupportedN(n))?;
        if p.len() != n {
            return Err(SurfaceError::InvalidDepth(format!(
                "expected {n} depths, got {}",
                p.len()
            )));
        }
        if p.iter().any(|&x| x == 0) {
            return Err(SurfaceError::InvalidDepth(
                "every chain depth must be at least 1".into(),
            ));
        }
        if n == 1 && p[0] < 3 {
            return Err(SurfaceError::InvalidDepth(
                "the n=1 family needs depth at least 3 for the flex tangency".into(),
            ));
        }

        let mut model = SurfaceModel::base_surface(n)?;
        for (idx, &depth) in p.iter().enumerate() {
            let i = idx + 1;
            for j in 1..=depth {
                let mut incident = vec![format!("D_{i}")];
                if j > 1 {
                    incident.push(format!("E_{{{i},{}}}", j - 1));
                }
                for f in data.f_curves {
                    if f.meets.contains(&i) && j <= f.tangency {
                        incident.push(f.label.to_string());
                    }
                }
                model = model.blow_up(
                    &incident,
                    &format!("e_{{{i},{j}}}"),
                    &format!("E_{{{i},{j}}}"),
                )?;
            }
        }
        model.p = p.to_vec();

        // Canonical inventory order: boundary cycle, chains by (i, j), then
        // the auxiliary curves (the order the generator lists are printed
        // in, and the order the simple roots are consumed in).
        let mut ordered = Vec::with_capacity(model.curves.len());
        for label in &model.boundary {
            ordered.push(model.curve(label).expect("boundary resolves").clone());
        }
        for (idx, &depth) in p.iter().enumerate() {
            for j in 1..=depth {
                let label = format!("E_{{{},{j}}}", idx + 1);
                ordered.push(model.curve(&label).expect("chain resolves").clone());
            }
        }
        for f in data.f_curves {
            ordered.push(model.curve(f.label).expect("auxiliary resolves").clone());
        }
        debug_assert_eq!(ordered.len(), model.curves.len());
        model.curves = ordered;
        Ok(model)
    }

    /// Single blowup at a point shared by the listed curves: the ambient
    /// rank grows by one (new basis vector of square -1), incident classes
    /// lose the new exceptional, the canonical class gains it, and the
    /// exceptional curve joins the inventory.
    pub fn blow_up(
        &self,
        incident_labels: &[String],
        basis_label: &str,
        curve_label: &str,
    ) -> Result<SurfaceModel> {
        let mut indices = Vec::with_capacity(incident_labels.len());
        for label in incident_labels {
            let ix = self
                .curves
                .iter()
                .position(|c| &c.label == label)
                .ok_or_else(|| SurfaceError::UnknownLabel(label.clone()))?;
            indices.push(ix);
        }
        for (a, &ia) in indices.iter().enumerate() {
            for &ib in &indices[a + 1..] {
                let p = self
                    .form
                    .pair(&self.curves[ia].cls, &self.curves[ib].cls)?;
                if !p.is_positive() {
                    return Err(SurfaceError::InconsistentIncidence(
                        self.curves[ia].label.clone(),
                        self.curves[ib].label.clone(),
                        p,
                    ));
                }
            }
        }

        let old_rank = self.form.rank;
        let mut labels = self.form.basis_labels.clone();
        labels.push(basis_label.to_string());
        let mut gram: Vec<Vec<Int>> = self
            .form
            .gram
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.push(Int::zero());
                r
            })
            .collect();
        let mut last = vec![Int::zero(); old_rank + 1];
        last[old_rank] = -Int::one();
        gram.push(last);
        let form = IntersectionForm::new(labels, gram)?;

        let extend = |v: &ClassVector, hit: bool| {
            let mut coords = v.coords.clone();
            coords.push(if hit { -Int::one() } else { Int::zero() });
            ClassVector::new(coords)
        };

        let mut curves: Vec<CurveRecord> = self
            .curves
            .iter()
            .enumerate()
            .map(|(ix, c)| CurveRecord {
                label: c.label.clone(),
                kind: c.kind,
                cls: extend(&c.cls, indices.contains(&ix)),
            })
            .collect();
        curves.push(CurveRecord {
            label: curve_label.to_string(),
            kind: CurveKind::ExceptionalMinusOne,
            cls: {
                let mut coords = vec![Int::zero(); old_rank + 1];
                coords[old_rank] = Int::one();
                ClassVector::new(coords)
            },
        });

        let mut canonical = self.canonical.coords.clone();
        canonical.push(Int::one());

        let mut history = self.history.clone();
        history.push(BlowupStep {
            incident: incident_labels.to_vec(),
            new_label: curve_label.to_string(),
        });

        let mut model = SurfaceModel {
            n: self.n,
            p: self.p.clone(),
            form,
            canonical: ClassVector::new(canonical),
            boundary: self.boundary.clone(),
            curves,
            history,
        };
        model.reclassify();
        Ok(model)
    }

    /// Reassigns curve kinds from the current classes: boundary labels keep
    /// their kind, everything else is classified by self-intersection and
    /// boundary pairings.
    fn reclassify(&mut self) {
        let boundary_classes: Vec<ClassVector> = self
            .boundary
            .iter()
            .map(|l| self.curve(l).expect("boundary label resolves").cls.clone())
            .collect();
        let d = boundary_sum(&boundary_classes, self.form.rank);
        for c in self.curves.iter_mut() {
            if self.boundary.contains(&c.label) {
                c.kind = CurveKind::Boundary;
                continue;
            }
            let sq = self.form.self_pair(&c.cls).expect("rank matches");
            let to_d = self.form.pair(&c.cls, &d).expect("rank matches");
            let to_each_zero = boundary_classes
                .iter()
                .all(|b| self.form.pair(&c.cls, b).expect("rank matches").is_zero());
            let to_each_nonneg = boundary_classes.iter().all(|b| {
                !self
                    .form
                    .pair(&c.cls, b)
                    .expect("rank matches")
                    .is_negative()
            });
            c.kind = if sq == Int::from(-1) && to_d.is_one() && to_each_nonneg {
                CurveKind::ExceptionalMinusOne
            } else if sq == Int::from(-2) && to_each_zero {
                CurveKind::InteriorMinusTwo
            } else {
                CurveKind::InteriorExtra
            };
        }
    }

    pub fn curve(&self, label: &str) -> Option<&CurveRecord> {
        self.curves.iter().find(|c| c.label == label)
    }

    pub fn class_of(&self, label: &str) -> Result<ClassVector> {
        self.curve(label)
            .map(|c| c.cls.clone())
            .ok_or_else(|| SurfaceError::UnknownLabel(label.to_string()))
    }

    pub fn boundary_classes(&self) -> Vec<ClassVector> {
        self.boundary
            .iter()
            .map(|l| self.curve(l).expect("boundary label resolves").cls.clone())
            .collect()
    }

    /// The class of the whole boundary `D = sum D_i = -K`.
    pub fn boundary_total(&self) -> ClassVector {
        boundary_sum(&self.boundary_classes(), self.form.rank)
    }

    /// True once every chain has been blown up at least once.
    pub fn is_family(&self) -> bool {
        self.p.iter().all(|&x| x >= 1)
    }

    /// Curves of the given kind in inventory order.
    pub fn curves_of_kind(&self, kind: CurveKind) -> Vec<&CurveRecord> {
        self.curves.iter().filter(|c| c.kind == kind).collect()
    }

    /// Euler characteristic `chi(L) = 1 + (L^2 + L.D)/2`; flags the
    /// half-integer case, which signals that `L` is not a genuine
    /// line-bundle class for this check.
    pub fn riemann_roch_chi(&self, l: &ClassVector) -> Result<ChiValue> {
        chi_of(&self.form, &self.boundary_total(), l).map_err(SurfaceError::from)
    }

    /// Classifies an arbitrary class against the boundary.
    pub fn classify_curve(&self, c: &ClassVector) -> Result<ClassRole> {
        let sq = self.form.self_pair(c)?;
        let d = self.boundary_total();
        let to_d = self.form.pair(c, &d)?;
        let boundary_classes = self.boundary_classes();
        let each_nonneg = boundary_classes
            .iter()
            .all(|b| !self.form.pair(c, b).expect("rank checked").is_negative());
        let each_zero = boundary_classes
            .iter()
            .all(|b| self.form.pair(c, b).expect("rank checked").is_zero());
        if sq == Int::from(-1) && each_nonneg && to_d.is_one() {
            return Ok(ClassRole::InteriorMinusOne);
        }
        if sq == Int::from(-2) && each_zero {
            return Ok(ClassRole::InteriorMinusTwo);
        }
        if boundary_classes.iter().any(|b| b == c) {
            return Ok(ClassRole::BoundaryLike);
        }
        Ok(ClassRole::Other)
    }

    /// Structural validation: anticanonicity, adjunction, the boundary
    /// cycle, chain and auxiliary-curve incidence, the curve basis, and the
    /// signature of the ambient form.
    pub fn validate_configuration(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let d = self.boundary_total();
        let boundary_classes = self.boundary_classes();

        // (a) K + D = 0.
        {
            let sum = self.canonical.add(&d);
            report.push(
                "anticanonical_boundary",
                sum.is_zero(),
                format!("K + D = {:?}", sum.coords),
            );
        }

        // (b) adjunction: C^2 - C.D = -2 for smooth rational inventory
        // curves; the n=1 boundary is a nodal cubic of arithmetic genus one,
        // where the same quantity is 0.
        {
            let mut ok = true;
            let mut detail = String::new();
            for c in &self.curves {
                let expected = if self.n == 1 && self.boundary.contains(&c.label) {
                    Int::zero()
                } else {
                    Int::from(-2)
                };
                let sq = self.form.self_pair(&c.cls).expect("rank matches");
                let cd = self.form.pair(&c.cls, &d).expect("rank matches");
                if &sq - &cd != expected {
                    ok = false;
                    detail = format!("{}: C^2 - C.D = {}", c.label, sq - cd);
                    break;
                }
            }
            report.push("adjunction", ok, detail);
        }

        // (c) boundary cycle pairings.
        {
            let mut ok = true;
            let mut detail = String::new();
            match self.n {
                1 => {
                    if boundary_classes[0] != self.canonical.neg() {
                        ok = false;
                        detail = "D_1 is not anticanonical".into();
                    }
                }
                2 => {
                    let p = self
                        .form
                        .pair(&boundary_classes[0], &boundary_classes[1])
                        .expect("rank matches");
                    if p != Int::from(2) {
                        ok = false;
                        detail = format!("D_1 . D_2 = {p}");
                    }
                }
                _ => {
                    for i in 0..self.n {
                        for j in 0..self.n {
                            if i == j {
                                continue;
                            }
                            let adjacent = (i + 1) % self.n == j || (j + 1) % self.n == i;
                            let p = self
                                .form
                                .pair(&boundary_classes[i], &boundary_classes[j])
                                .expect("rank matches");
                            let want = if adjacent { Int::one() } else { Int::zero() };
                            if p != want {
                                ok = false;
                                detail =
                                    format!("D_{} . D_{} = {p}", i + 1, j + 1);
                            }
                        }
                    }
                }
            }
            report.push("boundary_cycle", ok, detail);
        }

        // (d) chain and auxiliary-curve incidence (family models only).
        if self.is_family() {
            let (ok, detail) = self.check_incidence();
            report.push("incidence", ok, detail);
        } else {
            report.push("incidence", true, "no blowups yet".into());
        }

        // (e) the curve basis is unimodular.
        if self.is_family() {
            match duals::family_basis(self) {
                Ok(basis) => {
                    let gram = self.form.gram_of(&basis).expect("rank matches");
                    let det = lattice::determinant(&gram).expect("square");
                    report.push(
                        "basis_unimodular",
                        det.abs().is_one(),
                        format!("det = {det}"),
                    );
                }
                Err(e) => report.push("basis_unimodular", false, e.to_string()),
            }
        } else {
            report.push("basis_unimodular", true, "no blowups yet".into());
        }

        // (f) hyperbolic signature of the full form.
        {
            let sig = lattice::signature(&self.form.gram).expect("symmetric");
            let want = (1, self.form.rank - 1, 0);
            report.push("signature", sig == want, format!("{sig:?}"));
        }

        report
    }

    /// Expected incidence numbers for a completed family, checked exactly.
    fn check_incidence(&self) -> (bool, String) {
        let data = match base::base_data(self.n) {
            Some(d) => d,
            None => return (false, "unsupported n".into()),
        };
        let chain = |i: usize, j: usize| self.class_of(&format!("E_{{{i},{j}}}"));
        for i in 1..=self.n {
            let di = match self.class_of(&format!("D_{i}")) {
                Ok(c) => c,
                Err(e) => return (false, e.to_string()),
            };
            for j in 1..=self.p[i - 1] {
                let e = match chain(i, j) {
                    Ok(c) => c,
                    Err(err) => return (false, err.to_string()),
                };
                // D_i meets only the last exceptional of its own chain.
                let want = if j == self.p[i - 1] { 1 } else { 0 };
                let got = self.form.pair(&di, &e).expect("rank matches");
                if got != Int::from(want) {
                    return (false, format!("D_{i} . E_{{{i},{j}}} = {got}, want {want}"));
                }
                for s in 1..=self.n {
                    if s == i {
                        continue;
                    }
                    let ds = self.class_of(&format!("D_{s}")).expect("resolves");
                    let got = self.form.pair(&ds, &e).expect("rank matches");
                    if !got.is_zero() {
                        return (false, format!("D_{s} . E_{{{i},{j}}} = {got}, want 0"));
                    }
                }
                // Chain adjacency within a chain, disjointness across.
                for s in 1..=self.n {
                    for t in 1..=self.p[s - 1] {
                        if (s, t) <= (i, j) {
                            continue;
                        }
                        let other = chain(s, t).expect("resolves");
                        let got = self.form.pair(&e, &other).expect("rank matches");
                        let want = if s == i && t == j + 1 { 1 } else { 0 };
                        if got != Int::from(want) {
                            return (
                                false,
                                format!("E_{{{i},{j}}} . E_{{{s},{t}}} = {got}, want {want}"),
                            );
                        }
                    }
                }
            }
        }
        // Auxiliary curves: interior after the blowups, attached to each of
        // their chains at the tangency position, and pairwise separated
        // according to the base classes minus the shared centers.
        for (fi, f) in data.f_curves.iter().enumerate() {
            let fc = match self.class_of(f.label) {
                Ok(c) => c,
                Err(e) => return (false, e.to_string()),
            };
            for i in 1..=self.n {
                let di = self.class_of(&format!("D_{i}")).expect("resolves");
                let got = self.form.pair(&fc, &di).expect("rank matches");
                if !got.is_zero() {
                    return (false, format!("{} . D_{i} = {got}, want 0", f.label));
                }
                for j in 1..=self.p[i - 1] {
                    let e = chain(i, j).expect("resolves");
                    let want = if f.meets.contains(&i) && j == f.tangency.min(self.p[i - 1]) {
                        1
                    } else {
                        0
                    };
                    let got = self.form.pair(&fc, &e).expect("rank matches");
                    if got != Int::from(want) {
                        return (
                            false,
                            format!("{} . E_{{{i},{j}}} = {got}, want {want}", f.label),
                        );
                    }
                }
            }
            for g in &data.f_curves[fi + 1..] {
                let gc = self.class_of(g.label).expect("resolves");
                let base_pairing = {
                    let a = ClassVector::from_i64(f.coords);
                    let b = ClassVector::from_i64(g.coords);
                    let base = SurfaceModel::base_surface(self.n).expect("base exists");
                    base.form.pair(&a, &b).expect("rank matches")
                };
                let shared = f.meets.iter().filter(|i| g.meets.contains(i)).count();
                let want = base_pairing - Int::from(shared as i64);
                let got = self.form.pair(&fc, &gc).expect("rank matches");
                if got != want {
                    return (
                        false,
                        format!("{} . {} = {got}, want {want}", f.label, g.label),
                    );
                }
            }
        }
        (true, String::new())
    }
}

fn boundary_sum(classes: &[ClassVector], rank: usize) -> ClassVector {
    let mut d = ClassVector::zero(rank);
    for b in classes {
        d = d.add(b);
    }
    d
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiValue {
    Integral(Int),
    NonIntegral,
}

/// `chi(L) = 1 + (L^2 + L.D)/2` for a form with `-K = D`.
pub fn chi_of(
    form: &IntersectionForm,
    boundary_total: &ClassVector,
    l: &ClassVector,
) -> lattice::Result<ChiValue> {
    let sq = form.self_pair(l)?;
    let ld = form.pair(l, boundary_total)?;
    let twice = sq + ld;
    if twice.is_odd() {
        return Ok(ChiValue::NonIntegral);
    }
    Ok(ChiValue::Integral(Int::one() + twice / 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassRole {
    InteriorMinusOne,
    InteriorMinusTwo,
    BoundaryLike,
    Other,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct ValidationReport {
    pub entries: Vec<ValidationEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationEntry {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl ValidationReport {
    fn push(&mut self, name: &str, passed: bool, detail: String) {
        self.entries.push(ValidationEntry {
            name: name.to_string(),
            passed,
            detail,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn entry(&self, name: &str) -> Option<&ValidationEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m3() -> SurfaceModel {
        SurfaceModel::build_family(3, &[1, 1, 1]).unwrap()
    }

    fn m1() -> SurfaceModel {
        SurfaceModel::build_family(1, &[3]).unwrap()
    }

    #[test]
    fn base_surfaces_exist_and_validate() {
        for n in 1..=6 {
            let base = SurfaceModel::base_surface(n).unwrap();
            let report = base.validate_configuration();
            for name in ["anticanonical_boundary", "adjunction", "boundary_cycle"] {
                let e = report.entry(name).unwrap();
                assert!(e.passed, "n={n} {name}: {}", e.detail);
            }
        }
        assert!(matches!(
            SurfaceModel::base_surface(7),
            Err(SurfaceError::UnsupportedN(7))
        ));
    }

    #[test]
    fn n6_base_relation() {
        // F_{1,4} + F_{2,5} + F_{3,6} = F_{1,3,5} + F_{2,4,6} on the base.
        let base = SurfaceModel::base_surface(6).unwrap();
        let lhs = base
            .class_of("F_{1,4}")
            .unwrap()
            .add(&base.class_of("F_{2,5}").unwrap())
            .add(&base.class_of("F_{3,6}").unwrap());
        let rhs = base
            .class_of("F_{1,3,5}")
            .unwrap()
            .add(&base.class_of("F_{2,4,6}").unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn n5_pentagon_gram() {
        let base = SurfaceModel::base_surface(5).unwrap();
        let g = base.form.gram_of(&base.boundary_classes()).unwrap();
        for i in 0..5 {
            for j in 0..5 {
                let adjacent = (i + 1) % 5 == j || (j + 1) % 5 == i;
                let want = if i == j {
                    -1
                } else if adjacent {
                    1
                } else {
                    0
                };
                assert_eq!(g[i][j], Int::from(want), "({i},{j})");
            }
        }
    }

    #[test]
    fn n3_base_anticanonical() {
        let base = SurfaceModel::base_surface(3).unwrap();
        assert_eq!(base.canonical, ClassVector::from_i64(&[-3]));
        assert!(base.canonical.add(&base.boundary_total()).is_zero());
    }

    #[test]
    fn blow_up_corner_and_single() {
        let base = SurfaceModel::base_surface(3).unwrap();
        let m = base
            .blow_up(&["D_1".into()], "e", "E")
            .unwrap();
        assert_eq!(m.class_of("D_1").unwrap(), ClassVector::from_i64(&[1, -1]));
        assert_eq!(m.canonical, ClassVector::from_i64(&[-3, 1]));
        assert_eq!(m.class_of("E").unwrap(), ClassVector::from_i64(&[0, 1]));

        // Corner blowup passes the incidence precheck (D_1 . D_2 = 1).
        let corner = base.blow_up(&["D_1".into(), "D_2".into()], "e", "E");
        assert!(corner.is_ok());

        // Disjoint curves cannot share a point.
        let m6 = SurfaceModel::base_surface(6).unwrap();
        let bad = m6.blow_up(&["D_1".into(), "D_4".into()], "e", "E");
        assert!(matches!(bad, Err(SurfaceError::InconsistentIncidence(..))));

        let unknown = base.blow_up(&["D_9".into()], "e", "E");
        assert!(matches!(unknown, Err(SurfaceError::UnknownLabel(_))));
    }

    #[test]
    fn m3_inventory_classes() {
        let m = m3();
        assert_eq!(m.form.rank, 4);
        assert_eq!(m.curves.len(), 7);
        assert_eq!(m.class_of("D_1").unwrap(), ClassVector::from_i64(&[1, -1, 0, 0]));
        assert_eq!(m.class_of("E_{1,1}").unwrap(), ClassVector::from_i64(&[0, 1, 0, 0]));
        let f = m.class_of("F").unwrap();
        assert_eq!(f, ClassVector::from_i64(&[1, -1, -1, -1]));
        assert_eq!(m.form.self_pair(&f).unwrap(), Int::from(-2));
        for i in 1..=3 {
            let di = m.class_of(&format!("D_{i}")).unwrap();
            assert!(m.form.pair(&f, &di).unwrap().is_zero());
            let e = m.class_of(&format!("E_{{{i},1}}")).unwrap();
            assert_eq!(m.form.pair(&f, &e).unwrap(), Int::one());
        }
        assert!(m.validate_configuration().all_passed());
    }

    #[test]
    fn m1_flex_tangency_classes() {
        let m = m1();
        assert_eq!(
            m.class_of("D_1").unwrap(),
            ClassVector::from_i64(&[3, -1, -1, -1])
        );
        assert_eq!(
            m.class_of("F").unwrap(),
            ClassVector::from_i64(&[1, -1, -1, -1])
        );
        assert_eq!(
            m.class_of("E_{1,1}").unwrap(),
            ClassVector::from_i64(&[0, 1, -1, 0])
        );
        assert_eq!(
            m.class_of("E_{1,2}").unwrap(),
            ClassVector::from_i64(&[0, 0, 1, -1])
        );
        assert_eq!(
            m.class_of("E_{1,3}").unwrap(),
            ClassVector::from_i64(&[0, 0, 0, 1])
        );
        assert!(m.validate_configuration().all_passed());

        // Deeper chains keep F incident to exactly the first three centers.
        let m5 = SurfaceModel::build_family(1, &[5]).unwrap();
        assert_eq!(
            m5.class_of("F").unwrap(),
            ClassVector::from_i64(&[1, -1, -1, -1, 0, 0])
        );
        assert!(m5.validate_configuration().all_passed());
    }

    #[test]
    fn family_rank_bookkeeping() {
        let m = SurfaceModel::build_family(6, &[1; 6]).unwrap();
        assert_eq!(m.form.rank, 4 + 6);
        let m = SurfaceModel::build_family(4, &[2, 1, 3, 1]).unwrap();
        assert_eq!(m.form.rank, 2 + 7);
    }

    #[test]
    fn build_family_rejects_bad_depths() {
        assert!(matches!(
            SurfaceModel::build_family(3, &[1, 0, 1]),
            Err(SurfaceError::InvalidDepth(_))
        ));
        assert!(matches!(
            SurfaceModel::build_family(1, &[2]),
            Err(SurfaceError::InvalidDepth(_))
        ));
        assert!(matches!(
            SurfaceModel::build_family(3, &[1, 1]),
            Err(SurfaceError::InvalidDepth(_))
        ));
    }

    #[test]
    fn build_family_is_deterministic() {
        let a = SurfaceModel::build_family(5, &[2, 1, 1, 2, 1]).unwrap();
        let b = SurfaceModel::build_family(5, &[2, 1, 1, 2, 1]).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn model_json_round_trip() {
        let m = SurfaceModel::build_family(2, &[2, 1]).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        let back: SurfaceModel = serde_json::from_str(&json).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn misassigned_auxiliary_fails_incidence() {
        // Reassigning F_2 on the n=2 base to the fiber class A makes it meet
        // the boundary, which the incidence check rejects.
        let mut m = SurfaceModel::build_family(2, &[1, 1]).unwrap();
        let fiber_like = ClassVector::from_i64(&[0, 1, 0, 0]);
        m.curves
            .iter_mut()
            .find(|c| c.label == "F_2")
            .unwrap()
            .cls = fiber_like;
        let report = m.validate_configuration();
        assert!(!report.entry("incidence").unwrap().passed);
    }

    #[test]
    fn riemann_roch_values() {
        let m = m3();
        assert_eq!(
            m.riemann_roch_chi(&ClassVector::zero(4)).unwrap(),
            ChiValue::Integral(Int::one())
        );
        let h = ClassVector::from_i64(&[1, 0, 0, 0]);
        assert_eq!(
            m.riemann_roch_chi(&h).unwrap(),
            ChiValue::Integral(Int::from(3))
        );
        let f = m.class_of("F").unwrap();
        assert_eq!(
            m.riemann_roch_chi(&f).unwrap(),
            ChiValue::Integral(Int::zero())
        );
    }

    #[test]
    fn chi_flags_non_integral_input() {
        // An artificial odd form: L^2 + L.D odd is impossible on a genuine
        // surface lattice (K is characteristic), so exercise the flag with a
        // synthetic form.
        let form = IntersectionForm::diagonal(vec!["x".into()], &[1]);
        let l = ClassVector::from_i64(&[1]);
        let d = ClassVector::from_i64(&[0]);
        assert_eq!(chi_of(&form, &d, &l).unwrap(), ChiValue::NonIntegral);
    }

    #[test]
    fn classify_curve_cases() {
        let m = m3();
        let e1 = ClassVector::from_i64(&[0, 1, 0, 0]);
        assert_eq!(m.classify_curve(&e1).unwrap(), ClassRole::InteriorMinusOne);
        let f = ClassVector::from_i64(&[1, -1, -1, -1]);
        assert_eq!(m.classify_curve(&f).unwrap(), ClassRole::InteriorMinusTwo);
        let h = ClassVector::from_i64(&[1, 0, 0, 0]);
        assert_eq!(m.classify_curve(&h).unwrap(), ClassRole::Other);
        let d1 = m.class_of("D_1").unwrap();
        assert_eq!(m.classify_curve(&d1).unwrap(), ClassRole::BoundaryLike);
    }

    #[test]
    fn validation_passes_on_mixed_depths() {
        for (n, p) in [
            (1usize, vec![4usize]),
            (2, vec![3, 1]),
            (3, vec![2, 1, 3]),
            (4, vec![1, 2, 1, 2]),
            (5, vec![2, 2, 1, 1, 1]),
            (6, vec![2, 1, 1, 2, 1, 1]),
        ] {
            let m = SurfaceModel::build_family(n, &p).unwrap();
            let report = m.validate_configuration();
            assert!(
                report.all_passed(),
                "n={n} p={p:?}: {:?}",
                report
                    .entries
                    .iter()
                    .filter(|e| !e.passed)
                    .collect::<Vec<_>>()
            );
        }
    }
}
