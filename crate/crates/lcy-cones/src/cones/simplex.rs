//! Exact rational feasibility for cone membership.
//!
//! Decides whether `x` is a nonnegative rational combination of the given
//! generators by phase-one simplex with Bland's rule (which cannot cycle).
//! The failure branch extracts the dual multipliers, giving an integer
//! covector `w` with `w . g >= 0` for every generator and `w . x < 0`: a
//! constructive separating functional in the sense of Farkas' lemma.

use num_traits::{One, Signed, Zero};

use crate::arith::{self, Int, Rat};

/// `Ok`: coefficients expressing `x` over the generators.
/// `Err`: integer covector separating `x` from the cone.
pub fn express_nonneg(generators: &[Vec<Int>], x: &[Int]) -> Result<Vec<Rat>, Vec<Int>> {
    let dim = x.len();
    let k = generators.len();

    // Row-sign normalization so every right-hand side is nonnegative.
    let mut flip = vec![false; dim];
    let mut rhs: Vec<Rat> = Vec::with_capacity(dim);
    for (i, xi) in x.iter().enumerate() {
        flip[i] = xi.is_negative();
        let v = if flip[i] { -xi } else { xi.clone() };
        rhs.push(Rat::from_integer(v));
    }

    // Tableau columns: k generator coefficients, then dim artificials.
    // Objective: minimize the sum of artificials.
    let cols = k + dim;
    let mut a: Vec<Vec<Rat>> = (0..dim)
        .map(|i| {
            let mut row: Vec<Rat> = (0..k)
                .map(|j| {
                    let v = generators[j][i].clone();
                    Rat::from_integer(if flip[i] { -v } else { v })
                })
                .collect();
            for j in 0..dim {
                row.push(if j == i { Rat::one() } else { Rat::zero() });
            }
            row
        })
        .collect();
    let mut basis: Vec<usize> = (0..dim).map(|i| k + i).collect();

    // Reduced-cost row for the phase-one objective, kept explicitly.
    // cost[j] = c_j - sum_i y_i a_ij with c = (0..0, 1..1); start from the
    // artificial basis: y = 1 on every row.
    let mut cost: Vec<Rat> = (0..cols)
        .map(|j| {
            let mut s = Rat::zero();
            for row in a.iter() {
                s += &row[j];
            }
            let c = if j >= k { Rat::one() } else { Rat::zero() };
            c - s
        })
        .collect();
    let mut objective: Rat = -rhs.iter().sum::<Rat>();

    loop {
        // Bland's rule: lowest-index column with negative reduced cost.
        let entering = (0..cols).find(|&j| cost[j].is_negative());
        let entering = match entering {
            Some(j) => j,
            None => break,
        };
        // Ratio test, ties broken by lowest basis variable index.
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..dim {
            if !a[i][entering].is_positive() {
                continue;
            }
            let ratio = &rhs[i] / &a[i][entering];
            let better = match &best {
                None => true,
                Some(b) => {
                    ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                }
            };
            if better {
                best = Some(ratio);
                leave = Some(i);
            }
        }
        let leave = match leave {
            Some(i) => i,
            // Unbounded phase-one objective cannot happen (bounded below by
            // zero); defensive break.
            None => break,
        };

        // Pivot.
        let piv = a[leave][entering].clone();
        for v in a[leave].iter_mut() {
            *v = &*v / &piv;
        }
        rhs[leave] = &rhs[leave] / &piv;
        for i in 0..dim {
            if i == leave || a[i][entering].is_zero() {
                continue;
            }
            let f = a[i][entering].clone();
            let src = a[leave].clone();
            for (v, s) in a[i].iter_mut().zip(&src) {
                *v -= &f * s;
            }
            let d = &f * &rhs[leave];
            rhs[i] -= d;
        }
        if !cost[entering].is_zero() {
            let f = cost[entering].clone();
            for (v, s) in cost.iter_mut().zip(&a[leave]) {
                *v -= &f * s;
            }
            objective -= &f * &rhs[leave];
        }
        basis[leave] = entering;
    }

    if objective.is_zero() {
        let mut coeffs = vec![Rat::zero(); k];
        for (i, &b) in basis.iter().enumerate() {
            if b < k {
                coeffs[b] = rhs[i].clone();
            }
        }
        debug_assert!(verify_combination(generators, &coeffs, x));
        Ok(coeffs)
    } else {
        // Dual multipliers: y_i = 1 - cost[artificial_i]; in the original
        // row signs, w'_i = (+/-) y_i satisfies w' . g_j <= 0 for all j and
        // w' . x > 0, so w = -w' separates.
        let y: Vec<Rat> = (0..dim).map(|i| Rat::one() - &cost[k + i]).collect();
        let w_rat: Vec<Rat> = y
            .iter()
            .zip(&flip)
            .map(|(yi, &fl)| if fl { -yi.clone() } else { yi.clone() })
            .map(|v| -v)
            .collect();
        let w = arith::clear_denominators(&w_rat);
        debug_assert!(verify_separation(generators, &w, x));
        Err(w)
    }
}

pub fn verify_combination(generators: &[Vec<Int>], coeffs: &[Rat], x: &[Int]) -> bool {
    if coeffs.iter().any(Signed::is_negative) {
        return false;
    }
    let dim = x.len();
    let mut acc = vec![Rat::zero(); dim];
    for (c, g) in coeffs.iter().zip(generators) {
        if c.is_zero() {
            continue;
        }
        for (a, v) in acc.iter_mut().zip(g) {
            *a += c * v;
        }
    }
    acc.iter()
        .zip(x)
        .all(|(a, b)| *a == Rat::from_integer(b.clone()))
}

pub fn verify_separation(generators: &[Vec<Int>], w: &[Int], x: &[Int]) -> bool {
    generators.iter().all(|g| !arith::dot(w, g).is_negative())
        && arith::dot(w, x).is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ints;

    fn gens(data: &[&[i64]]) -> Vec<Vec<Int>> {
        data.iter().map(|r| ints(r)).collect()
    }

    #[test]
    fn ray_is_member_with_unit_coefficient() {
        let g = gens(&[&[1, 0], &[1, 2]]);
        let c = express_nonneg(&g, &ints(&[1, 2])).unwrap();
        assert_eq!(c, vec![Rat::zero(), Rat::one()]);
    }

    #[test]
    fn interior_point_membership() {
        let g = gens(&[&[1, 0], &[1, 2]]);
        let c = express_nonneg(&g, &ints(&[3, 2])).unwrap();
        assert!(verify_combination(&g, &c, &ints(&[3, 2])));
    }

    #[test]
    fn outside_point_gets_separator() {
        let g = gens(&[&[1, 0], &[1, 2]]);
        let w = express_nonneg(&g, &ints(&[-1, 0])).unwrap_err();
        assert!(verify_separation(&g, &w, &ints(&[-1, 0])));
    }

    #[test]
    fn zero_is_always_member() {
        let g = gens(&[&[1, 0], &[0, 1]]);
        let c = express_nonneg(&g, &ints(&[0, 0])).unwrap();
        assert!(c.iter().all(Zero::is_zero));
    }

    #[test]
    fn empty_generator_list() {
        let g: Vec<Vec<Int>> = Vec::new();
        assert!(express_nonneg(&g, &ints(&[0, 0])).is_ok());
        assert!(express_nonneg(&g, &ints(&[1, 0])).is_err());
    }

    #[test]
    fn randomized_round_trip() {
        let mut rng = crate::arith::XorShift::new(31);
        for _ in 0..200 {
            let dim = rng.range_i64(2, 4) as usize;
            let k = rng.range_i64(1, 5) as usize;
            let g: Vec<Vec<Int>> = (0..k)
                .map(|_| (0..dim).map(|_| Int::from(rng.range_i64(-4, 4))).collect())
                .collect();
            let x: Vec<Int> = (0..dim).map(|_| Int::from(rng.range_i64(-6, 6))).collect();
            match express_nonneg(&g, &x) {
                Ok(c) => assert!(verify_combination(&g, &c, &x)),
                Err(w) => assert!(verify_separation(&g, &w, &x)),
            }
        }
    }
}
