//! Rational polyhedral cones under an intersection form: dual cones via
//! exact double description, constructive membership certificates, extremal
//! ray filtering and cone equality.
//!
//! The surface-specific cones (cone of curves, nef cone, boundary faces) are
//! in [`surface_cones`].

pub mod dd;
pub mod simplex;
pub mod surface_cones;

use num_traits::Signed;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, Int, Rat};
use crate::lattice::{ClassVector, IntersectionForm, LatticeError};

pub use surface_cones::{
    c_prime_cone, cone_of_curves, n6_system_check, nef_cone, nefe_prime, verify_curve_cone,
    CurveConeReport, N6Report, NefePrimeFace,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConeError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("model was not produced by the family builder: {0}")]
    ModelNotFromFamily(String),
    #[error("curves {0} and {1} are not disjoint")]
    NotDisjoint(String, String),
    #[error("curve {0} is not an interior (-1)-curve")]
    NotMinusOne(String),
    #[error("operation requires a boundary of length 6, got {0}")]
    WrongN(usize),
    #[error("unknown curve label {0}")]
    UnknownLabel(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Surface(#[from] crate::surface::SurfaceError),
}

pub type Result<T> = std::result::Result<T, ConeError>;

/// Finitely generated cone: primitive integer ray generators, optionally
/// with a cached halfspace description. Halfspaces are stored as classes `h`
/// and evaluated through the form, `x` satisfying `h . x >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalCone {
    pub ambient_rank: usize,
    pub rays: Vec<ClassVector>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub halfspaces: Option<Vec<ClassVector>>,
}

impl RationalCone {
    /// Builds a cone from generators: vectors are made primitive, deduped
    /// and sorted. Zero vectors are dropped.
    pub fn from_rays(ambient_rank: usize, rays: Vec<ClassVector>) -> Self {
        let mut cleaned: Vec<ClassVector> = rays
            .into_iter()
            .filter(|r| !r.is_zero())
            .map(|mut r| {
                arith::make_primitive(&mut r.coords);
                r
            })
            .collect();
        cleaned.sort();
        cleaned.dedup();
        RationalCone {
            ambient_rank,
            rays: cleaned,
            halfspaces: None,
        }
    }

    pub fn zero(ambient_rank: usize) -> Self {
        RationalCone {
            ambient_rank,
            rays: Vec::new(),
            halfspaces: None,
        }
    }

    pub fn ray_coords(&self) -> Vec<Vec<Int>> {
        self.rays.iter().map(|r| r.coords.clone()).collect()
    }

    fn check_rank(&self, v: &ClassVector) -> Result<()> {
        if v.rank() != self.ambient_rank {
            return Err(ConeError::DimensionMismatch {
                expected: self.ambient_rank,
                got: v.rank(),
            });
        }
        Ok(())
    }
}

/// Constructive membership answer: either an explicit nonnegative rational
/// combination over the cone's rays, or an integer separating functional
/// (a class, evaluated through the form) that is nonnegative on every ray
/// and strictly negative on the query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeMembershipCertificate {
    pub member: bool,
    pub coefficients: Option<Vec<Rat>>,
    pub separating_functional: Option<ClassVector>,
}

impl ConeMembershipCertificate {
    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::Map::new();
        obj.insert("member".into(), self.member.into());
        if let Some(c) = &self.coefficients {
            obj.insert(
                "coefficients".into(),
                c.iter().map(arith::rat_to_string).collect::<Vec<_>>().into(),
            );
        }
        if let Some(f) = &self.separating_functional {
            obj.insert(
                "separating_functional".into(),
                f.coords.iter().map(|x| x.to_string()).collect::<Vec<_>>().into(),
            );
        }
        serde_json::Value::Object(obj)
    }
}

/// The dual cone `{x : x . r >= 0 for all rays r}` under the form, computed
/// by exact double description. The result caches the defining halfspaces
/// (the input rays). A cached halfspace description of the input doubles as
/// the candidate-ray seed for the output (`h . r >= 0` for every ray means
/// the halfspace classes lie in the dual).
pub fn dual_cone(form: &IntersectionForm, cone: &RationalCone) -> Result<RationalCone> {
    let mut constraints = Vec::with_capacity(cone.rays.len());
    for r in &cone.rays {
        cone.check_rank(r)?;
        constraints.push(form.functional(r)?);
    }
    let hints: Vec<Vec<Int>> = cone
        .halfspaces
        .as_deref()
        .unwrap_or(&[])
        .iter()
        .map(|h| h.coords.clone())
        .collect();
    let out = dd::cone_from_constraints_with_hints(cone.ambient_rank, &constraints, &[], &hints);
    let rays = out
        .generators()
        .into_iter()
        .map(ClassVector::new)
        .collect();
    let mut dual = RationalCone::from_rays(cone.ambient_rank, rays);
    dual.halfspaces = Some(cone.rays.clone());
    Ok(dual)
}

/// Exact membership with certificate.
pub fn contains(
    form: &IntersectionForm,
    cone: &RationalCone,
    x: &ClassVector,
) -> Result<ConeMembershipCertificate> {
    cone.check_rank(x)?;
    match simplex::express_nonneg(&cone.ray_coords(), &x.coords) {
        Ok(coefficients) => Ok(ConeMembershipCertificate {
            member: true,
            coefficients: Some(coefficients),
            separating_functional: None,
        }),
        Err(covector) => {
            let class = form.class_of_functional(&covector)?;
            Ok(ConeMembershipCertificate {
                member: false,
                coefficients: None,
                separating_functional: Some(class),
            })
        }
    }
}

/// Membership of a rational point: scales to a primitive integer direction
/// (membership in a cone is invariant under positive scaling), then rescales
/// the coefficients so they reproduce the original point exactly.
pub fn contains_rational(
    form: &IntersectionForm,
    cone: &RationalCone,
    x: &[Rat],
) -> Result<ConeMembershipCertificate> {
    let (scaled, factor) = arith::clear_denominators_scaled(x);
    let mut cert = contains(form, cone, &ClassVector::new(scaled))?;
    if let Some(coeffs) = cert.coefficients.as_mut() {
        for c in coeffs.iter_mut() {
            *c *= &factor;
        }
    }
    Ok(cert)
}

/// Removes rays that are nonnegative combinations of the others.
pub fn extremal_rays(cone: &RationalCone) -> RationalCone {
    let mut keep: Vec<ClassVector> = cone.rays.clone();
    let mut i = 0;
    while i < keep.len() {
        let others: Vec<Vec<Int>> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, r)| r.coords.clone())
            .collect();
        if simplex::express_nonneg(&others, &keep[i].coords).is_ok() {
            keep.remove(i);
        } else {
            i += 1;
        }
    }
    RationalCone {
        ambient_rank: cone.ambient_rank,
        rays: keep,
        halfspaces: None,
    }
}

/// Mutual containment of the generating rays.
pub fn cone_equal(c1: &RationalCone, c2: &RationalCone) -> Result<bool> {
    if c1.ambient_rank != c2.ambient_rank {
        return Err(ConeError::DimensionMismatch {
            expected: c1.ambient_rank,
            got: c2.ambient_rank,
        });
    }
    let r1 = c1.ray_coords();
    let r2 = c2.ray_coords();
    for r in &r1 {
        if simplex::express_nonneg(&r2, r).is_err() {
            return Ok(false);
        }
    }
    for r in &r2 {
        if simplex::express_nonneg(&r1, r).is_err() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks a cached halfspace description against the rays: every ray must
/// satisfy every halfspace, and the two descriptions must cut out the same
/// cone (verified by converting back and forth).
pub fn check_double_description(form: &IntersectionForm, cone: &RationalCone) -> Result<bool> {
    let halfspaces = match &cone.halfspaces {
        Some(h) => h,
        None => return Ok(true),
    };
    for r in &cone.rays {
        for h in halfspaces {
            if form.pair(h, r)?.is_negative() {
                return Ok(false);
            }
        }
    }
    let from_halfspaces = {
        let constraints: Vec<Vec<Int>> = halfspaces
            .iter()
            .map(|h| form.functional(h))
            .collect::<std::result::Result<_, _>>()?;
        let out = dd::cone_from_constraints(cone.ambient_rank, &constraints, &[]);
        RationalCone::from_rays(
            cone.ambient_rank,
            out.generators().into_iter().map(ClassVector::new).collect(),
        )
    };
    cone_equal(cone, &from_halfspaces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn dot_form(rank: usize) -> IntersectionForm {
        IntersectionForm::diagonal(
            (0..rank).map(|i| format!("x{i}")).collect(),
            &vec![1i64; rank],
        )
    }

    fn cone(rank: usize, rays: &[&[i64]]) -> RationalCone {
        RationalCone::from_rays(
            rank,
            rays.iter().map(|r| ClassVector::from_i64(r)).collect(),
        )
    }

    #[test]
    fn dual_cone_planar_example() {
        let f = dot_form(2);
        let c = cone(2, &[&[1, 0], &[1, 2]]);
        let d = dual_cone(&f, &c).unwrap();
        assert_eq!(d.rays, cone(2, &[&[0, 1], &[2, -1]]).rays);
        assert!(check_double_description(&f, &d).unwrap());
    }

    #[test]
    fn dual_of_full_space_is_origin() {
        let f = dot_form(2);
        let c = cone(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]);
        let d = dual_cone(&f, &c).unwrap();
        assert!(d.rays.is_empty());
    }

    #[test]
    fn biduality_planar() {
        let f = dot_form(2);
        let c = cone(2, &[&[1, 0], &[1, 2]]);
        let dd1 = dual_cone(&f, &c).unwrap();
        let dd2 = dual_cone(&f, &dd1).unwrap();
        assert!(cone_equal(&c, &dd2).unwrap());
    }

    #[test]
    fn certificate_json_uses_fraction_strings() {
        let f = dot_form(2);
        let c = cone(2, &[&[1, 1], &[1, -1]]);
        let cert = contains(&f, &c, &ClassVector::from_i64(&[1, 0])).unwrap();
        let json = cert.to_json();
        assert_eq!(json["member"], serde_json::json!(true));
        assert_eq!(json["coefficients"], serde_json::json!(["1/2", "1/2"]));
    }

    #[test]
    fn membership_certificates() {
        let f = dot_form(2);
        let c = cone(2, &[&[1, 0], &[1, 2]]);
        let cert = contains(&f, &c, &ClassVector::from_i64(&[1, 2])).unwrap();
        assert!(cert.member);
        assert_eq!(
            cert.coefficients.unwrap(),
            vec![Rat::zero(), Rat::from_integer(Int::from(1))]
        );

        let cert = contains(&f, &c, &ClassVector::from_i64(&[-1, -5])).unwrap();
        assert!(!cert.member);
        let w = cert.separating_functional.unwrap();
        for r in &c.rays {
            assert!(!f.pair(&w, r).unwrap().is_negative());
        }
        assert!(f
            .pair(&w, &ClassVector::from_i64(&[-1, -5]))
            .unwrap()
            .is_negative());
    }

    #[test]
    fn extremal_ray_filtering() {
        let c = cone(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        let e = extremal_rays(&c);
        assert_eq!(e.rays, cone(2, &[&[1, 0], &[0, 1]]).rays);

        let single = cone(2, &[&[1, 1]]);
        assert_eq!(extremal_rays(&single).rays, single.rays);
    }

    #[test]
    fn cone_equality() {
        let a = cone(2, &[&[1, 0], &[0, 1]]);
        let b = cone(2, &[&[0, 1], &[1, 0], &[2, 3]]);
        assert!(cone_equal(&a, &b).unwrap());
        let c = cone(2, &[&[1, 0]]);
        assert!(!cone_equal(&a, &c).unwrap());
    }

    #[test]
    fn dual_under_nontrivial_form() {
        // Nef cone of n=3, p=(1,1,1): the dual of the 7-generator curve cone
        // under diag(1,-1,-1,-1) is spanned by H and H - e_i.
        let f = IntersectionForm::diagonal(
            vec!["H".into(), "e1".into(), "e2".into(), "e3".into()],
            &[1, -1, -1, -1],
        );
        let curves = cone(
            4,
            &[
                &[1, -1, 0, 0],
                &[1, 0, -1, 0],
                &[1, 0, 0, -1],
                &[0, 1, 0, 0],
                &[0, 0, 1, 0],
                &[0, 0, 0, 1],
                &[1, -1, -1, -1],
            ],
        );
        let nef = dual_cone(&f, &curves).unwrap();
        assert_eq!(
            nef.rays,
            cone(4, &[&[1, -1, 0, 0], &[1, 0, -1, 0], &[1, 0, 0, -1], &[1, 0, 0, 0]]).rays
        );
        // H and -K are nef, e_1 is not.
        let h = ClassVector::from_i64(&[1, 0, 0, 0]);
        assert!(contains(&f, &nef, &h).unwrap().member);
        let minus_k = ClassVector::from_i64(&[3, -1, -1, -1]);
        assert!(contains(&f, &nef, &minus_k).unwrap().member);
        let e1 = ClassVector::from_i64(&[0, 1, 0, 0]);
        assert!(!contains(&f, &nef, &e1).unwrap().member);

        let bidual = dual_cone(&f, &nef).unwrap();
        assert!(cone_equal(&curves, &bidual).unwrap());
    }
}
