//! Incremental double description over exact integers.
//!
//! A cone is held as (lineality basis, extreme rays modulo lineality).
//! Constraints `c . x >= 0` (or `= 0`) are inserted one at a time; a
//! constraint that meets the lineality space splits off one lineality
//! generator, otherwise rays are classified by sign and adjacent
//! positive/negative pairs are combined on the hyperplane. Adjacency is the
//! combinatorial test: two rays are adjacent iff no third ray's tight set
//! contains the intersection of theirs.
//!
//! Constraints are consumed in a deterministic most-cutting-first order
//! (the unprocessed constraint violated by the most current rays, ties by
//! position in the lexicographically sorted input): second duals routinely
//! have thousands of facet-defining constraints around a cone with a
//! handful of rays, and that order keeps the intermediate ray sets near the
//! final size where a fixed lexicographic sweep makes them explode.
//! Constraints that become valid for the current cone are retired without
//! any combination work, which is sound because cutting only shrinks the
//! cone.
//!
//! Output is canonical regardless of insertion order: the lineality basis is
//! the Hermite-reduced kernel of the whole constraint system, and every ray
//! is projected rationally onto the orthogonal complement of the lineality
//! space, made primitive and sorted.

use num_traits::{Signed, Zero};

use crate::arith::{self, Int, Rat};
use crate::lattice;

/// V-description produced by [`cone_from_constraints`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DdResult {
    pub rays: Vec<Vec<Int>>,
    pub lineality: Vec<Vec<Int>>,
}

impl DdResult {
    /// Rays plus both signs of each lineality generator: a plain generator
    /// list for the same cone.
    pub fn generators(&self) -> Vec<Vec<Int>> {
        let mut out = self.rays.clone();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(arith::neg_vec(l));
        }
        out
    }
}

/// Sign pattern of one ray against every inequality constraint, as two
/// bitsets (tight / negative) plus the vector itself.
#[derive(Debug, Clone)]
struct Ray {
    v: Vec<Int>,
    tight: Vec<u64>,
    neg: Vec<u64>,
}

fn bit(bits: &[u64], i: usize) -> bool {
    bits[i / 64] & (1 << (i % 64)) != 0
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

/// `sup & mask` contains `sub & mask`.
fn masked_superset(sup: &[u64], sub: &[u64], mask: &[u64]) -> bool {
    sup.iter()
        .zip(sub)
        .zip(mask)
        .all(|((s, t), m)| (t & m) & !s == 0)
}

/// Computes the cone `{x : ineq . x >= 0, eq . x = 0}` as lineality plus
/// extreme rays. `dim` is the ambient dimension.
pub fn cone_from_constraints(
    dim: usize,
    inequalities: &[Vec<Int>],
    equalities: &[Vec<Int>],
) -> DdResult {
    cone_from_constraints_with_hints(dim, inequalities, equalities, &[])
}

/// Constraint systems with very many inequalities around a cone with few
/// extreme rays (second duals, where every constraint is facet-defining)
/// are solved by candidate completion instead of incremental insertion;
/// `hints` may carry candidate members of the cone to seed that search.
pub fn cone_from_constraints_with_hints(
    dim: usize,
    inequalities: &[Vec<Int>],
    equalities: &[Vec<Int>],
    hints: &[Vec<Int>],
) -> DdResult {
    let mut ineqs: Vec<Vec<Int>> = inequalities
        .iter()
        .filter(|c| !arith::is_zero_vec(c))
        .map(|c| {
            let mut v = c.clone();
            arith::make_primitive(&mut v);
            v
        })
        .collect();
    ineqs.sort();
    ineqs.dedup();
    let mut eqs: Vec<Vec<Int>> = equalities
        .iter()
        .filter(|c| !arith::is_zero_vec(c))
        .cloned()
        .collect();
    eqs.sort();
    eqs.dedup();

    if eqs.is_empty() && ineqs.len() > 64 {
        if let Some(result) = completion::solve(dim, &ineqs, hints) {
            return result;
        }
    }

    let mut state = State::full_space(dim, ineqs.len());
    for eq in &eqs {
        state.add_equality(eq);
    }
    state.run(&ineqs);
    state.canonicalize(&ineqs, &eqs, dim)
}

struct State {
    lineality: Vec<Vec<Int>>,
    rays: Vec<Ray>,
    words: usize,
    processed: Vec<u64>,
}

impl State {
    fn full_space(dim: usize, total_ineqs: usize) -> Self {
        let words = total_ineqs.div_ceil(64).max(1);
        let lineality = (0..dim)
            .map(|i| {
                let mut v = vec![Int::zero(); dim];
                v[i] = Int::from(1);
                v
            })
            .collect();
        State {
            lineality,
            rays: Vec::new(),
            words,
            processed: vec![0; total_ineqs.div_ceil(64).max(1)],
        }
    }

    fn make_ray(&self, v: Vec<Int>, ineqs: &[Vec<Int>]) -> Ray {
        let mut tight = vec![0u64; self.words];
        let mut neg = vec![0u64; self.words];
        for (i, c) in ineqs.iter().enumerate() {
            let d = arith::dot(c, &v);
            if d.is_zero() {
                set_bit(&mut tight, i);
            } else if d.is_negative() {
                set_bit(&mut neg, i);
            }
        }
        Ray { v, tight, neg }
    }

    /// Picks a lineality generator not orthogonal to `c`, sign-normalized so
    /// that `c . l0 > 0`, and removes it from the basis; shears everything
    /// else onto `c = 0`.
    fn split_lineality(&mut self, c: &[Int]) -> Option<Vec<Int>> {
        let pos = self
            .lineality
            .iter()
            .position(|l| !arith::dot(c, l).is_zero())?;
        let mut l0 = self.lineality.remove(pos);
        let mut d = arith::dot(c, &l0);
        if d.is_negative() {
            l0 = arith::neg_vec(&l0);
            d = -d;
        }
        for l in self.lineality.iter_mut() {
            let s = arith::dot(c, l);
            if s.is_zero() {
                continue;
            }
            for (x, y) in l.iter_mut().zip(&l0) {
                *x = &*x * &d - &s * y;
            }
            arith::make_primitive_signed(l);
        }
        for ray in self.rays.iter_mut() {
            let s = arith::dot(c, &ray.v);
            if s.is_zero() {
                continue;
            }
            // d*r - s*l0 is a positive multiple of r modulo lineality.
            for (x, y) in ray.v.iter_mut().zip(&l0) {
                *x = &*x * &d - &s * y;
            }
            arith::make_primitive(&mut ray.v);
        }
        Some(l0)
    }

    /// Equalities are handled before any inequality, while the ray set is
    /// still empty: either the lineality space shrinks or (for a dependent
    /// equality) nothing changes.
    fn add_equality(&mut self, c: &[Int]) {
        debug_assert!(self.rays.is_empty());
        let _ = self.split_lineality(c);
    }

    fn run(&mut self, ineqs: &[Vec<Int>]) {
        let m = ineqs.len();
        // Phase one: reduce the lineality space. Constraints are taken in
        // input order; each either splits off a generator or waits for the
        // ray phase.
        for (idx, c) in ineqs.iter().enumerate() {
            if self.lineality.is_empty() {
                break;
            }
            if let Some(l0) = self.split_lineality(c) {
                self.rays.push(Ray {
                    v: l0,
                    tight: vec![0; self.words],
                    neg: vec![0; self.words],
                });
                // Shearing moved every ray, so recompute all sign patterns.
                let vs: Vec<Vec<Int>> = self.rays.iter().map(|r| r.v.clone()).collect();
                self.rays = vs.into_iter().map(|v| self.make_ray(v, ineqs)).collect();
                set_bit(&mut self.processed, idx);
            }
        }

        // Phase two: greedy cutting.
        loop {
            // Retire constraints that the current cone already satisfies.
            let mut best: Option<(usize, usize)> = None; // (count, index)
            for i in 0..m {
                if bit(&self.processed, i) {
                    continue;
                }
                let count = self.rays.iter().filter(|r| bit(&r.neg, i)).count();
                if count == 0 {
                    set_bit(&mut self.processed, i);
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bc, _)) => count > bc,
                };
                if better {
                    best = Some((count, i));
                }
            }
            let (_, cut_ix) = match best {
                Some(b) => b,
                None => return, // everything processed or satisfied
            };
            self.cut(cut_ix, &ineqs[cut_ix], ineqs);
            if std::env::var_os("LCY_DD_DEBUG").is_some() {
                eprintln!(
                    "dd: cut {cut_ix}, rays now {}, processed {}",
                    self.rays.len(),
                    (0..ineqs.len()).filter(|&i| bit(&self.processed, i)).count()
                );
            }
        }
    }

    fn cut(&mut self, idx: usize, c: &[Int], ineqs: &[Vec<Int>]) {
        // Necessary condition for adjacency: the common tight set must span
        // at least dim - lineality - 2 dimensions, so its cardinality must
        // reach that bound. A cheap popcount filter before the subset scan.
        let dim = self.rays.first().map_or(0, |r| r.v.len());
        let needed = (dim - self.lineality.len()).saturating_sub(2);
        let mut kept: Vec<Ray> = Vec::new();
        let mut created: Vec<Vec<Int>> = Vec::new();
        for (pi, p) in self.rays.iter().enumerate() {
            if bit(&p.neg, idx) {
                continue;
            }
            kept.push(p.clone());
            if bit(&p.tight, idx) {
                continue;
            }
            // p is strictly positive on c: combine with adjacent negatives.
            let sp = arith::dot(c, &p.v);
            for (mi, mray) in self.rays.iter().enumerate() {
                if !bit(&mray.neg, idx) {
                    continue;
                }
                if !self.adjacent(pi, mi, needed) {
                    continue;
                }
                let sm = arith::dot(c, &mray.v);
                let mut v: Vec<Int> = p
                    .v
                    .iter()
                    .zip(&mray.v)
                    .map(|(pv, mv)| &sp * mv - &sm * pv)
                    .collect();
                arith::make_primitive(&mut v);
                created.push(v);
            }
        }
        set_bit(&mut self.processed, idx);
        for v in created {
            kept.push(self.make_ray(v, ineqs));
        }
        self.rays = kept;
    }

    /// Combinatorial adjacency of rays `a` and `b` relative to the processed
    /// constraints.
    fn adjacent(&self, a: usize, b: usize, needed_common: usize) -> bool {
        let ra = &self.rays[a];
        let rb = &self.rays[b];
        let common: Vec<u64> = ra
            .tight
            .iter()
            .zip(&rb.tight)
            .zip(&self.processed)
            .map(|((x, y), m)| x & y & m)
            .collect();
        let count: u32 = common.iter().map(|w| w.count_ones()).sum();
        if (count as usize) < needed_common {
            return false;
        }
        for (i, r) in self.rays.iter().enumerate() {
            if i == a || i == b {
                continue;
            }
            if masked_superset(&r.tight, &common, &self.processed) {
                return false;
            }
        }
        true
    }

    fn canonicalize(self, ineqs: &[Vec<Int>], eqs: &[Vec<Int>], dim: usize) -> DdResult {
        let mut all_rows: Vec<Vec<Int>> = ineqs.to_vec();
        all_rows.extend(eqs.iter().cloned());
        let lineality = lattice::integer_kernel(&all_rows, dim);

        let mut rays: Vec<Vec<Int>> = self
            .rays
            .into_iter()
            .map(|r| project_off_lineality(&r.v, &lineality))
            .filter(|r| !arith::is_zero_vec(r))
            .collect();
        rays.sort();
        rays.dedup();
        DdResult { rays, lineality }
    }
}

/// Output-sensitive dual for pointed cones cut out by many inequalities.
///
/// Extreme rays are discovered by purifying feasible points to vertices and
/// certified complete through exact Farkas checks: once every facet of the
/// discovered cone is a nonnegative combination of the input constraints,
/// the two cones coincide.
mod completion {
    use super::{DdResult, Int};
    use crate::arith;
    use crate::cones::simplex;
    use crate::lattice;
    use num_traits::{Signed, Zero};
    use std::collections::BTreeSet;

    pub(super) fn solve(dim: usize, ineqs: &[Vec<Int>], hints: &[Vec<Int>]) -> Option<DdResult> {
        // Only pointed cones: the kernel of the constraint matrix must be 0.
        if !lattice::integer_kernel(ineqs, dim).is_empty() {
            return None;
        }
        let constraint_set: BTreeSet<&Vec<Int>> = ineqs.iter().collect();

        let feasible = |x: &[Int]| ineqs.iter().all(|c| !arith::dot(c, x).is_negative());

        let mut rays: BTreeSet<Vec<Int>> = BTreeSet::new();
        for h in hints {
            if arith::is_zero_vec(h) || !feasible(h) {
                continue;
            }
            if let Some(v) = purify(dim, ineqs, h, None) {
                rays.insert(v);
            }
        }

        let mut rounds = 0usize;
        loop {
            rounds += 1;
            if rounds > 4 * dim + 2 * rays.len() + 16 {
                return None; // safety valve; incremental fallback takes over
            }
            let current: Vec<Vec<Int>> = rays.iter().cloned().collect();
            let facets = super::cone_from_constraints(dim, &current, &[]);
            let mut candidates = facets.rays.clone();
            for l in &facets.lineality {
                candidates.push(l.clone());
                candidates.push(arith::neg_vec(l));
            }

            let mut grew = false;
            for g in &candidates {
                if constraint_set.contains(g) {
                    continue;
                }
                let w = match simplex::express_nonneg(ineqs, g) {
                    Ok(_) => continue, // valid inequality for the cone
                    Err(w) => w,
                };
                // w is feasible and violates g, so it exposes a missing ray.
                debug_assert!(feasible(&w));
                for bias in [Some(g), None] {
                    if let Some(v) = purify(dim, ineqs, &w, bias) {
                        if rays.insert(v) {
                            grew = true;
                            break;
                        }
                    }
                }
                if grew {
                    break;
                }
                return None; // no progress; fall back to incremental
            }
            if !grew {
                let rays: Vec<Vec<Int>> = rays.into_iter().collect();
                return Some(DdResult {
                    rays,
                    lineality: Vec::new(),
                });
            }
        }
    }

    /// Walks a feasible point to an extreme ray: while the tight constraints
    /// leave more than the ray's own direction free, move along a free
    /// direction until another constraint becomes tight. The move
    /// `(-(s*.w)) x + (s*.x) w` is an all-integer positive combination, so
    /// feasibility and exactness are preserved. With an objective `g`, the
    /// direction sign that does not increase `g . x` is preferred.
    fn purify(dim: usize, ineqs: &[Vec<Int>], start: &[Int], g: Option<&Vec<Int>>) -> Option<Vec<Int>> {
        let mut x = start.to_vec();
        arith::make_primitive(&mut x);
        for _ in 0..=2 * dim {
            let tight: Vec<Vec<Int>> = ineqs
                .iter()
                .filter(|c| arith::dot(c, &x).is_zero())
                .cloned()
                .collect();
            let null = lattice::integer_kernel(&tight, dim);
            if null.len() <= 1 {
                return Some(x);
            }
            // A free direction independent of x itself.
            let mut dir = null
                .iter()
                .find(|v| !parallel(v, &x))
                .expect("nullspace of dimension >= 2 has an independent vector")
                .clone();
            arith::make_primitive(&mut dir);
            if let Some(g) = g {
                if arith::dot(g, &dir).is_positive() {
                    dir = arith::neg_vec(&dir);
                }
            }
            match limit(ineqs, &x, &dir) {
                Some((sx, sd)) => step(&mut x, &dir, &sx, &sd),
                None => {
                    let back = arith::neg_vec(&dir);
                    match limit(ineqs, &x, &back) {
                        Some((sx, sd)) => step(&mut x, &back, &sx, &sd),
                        // Both directions recede: a lineality direction,
                        // impossible in a pointed cone.
                        None => return None,
                    }
                }
            }
        }
        None
    }

    fn parallel(a: &[Int], b: &[Int]) -> bool {
        // Vanishing of all 2x2 minors, with no scaling assumptions.
        for i in 0..a.len() {
            for j in i + 1..a.len() {
                if &a[i] * &b[j] != &a[j] * &b[i] {
                    return false;
                }
            }
        }
        true
    }

    /// First constraint hit when moving from `x` along `dir`: minimizes
    /// `(c.x)/(-c.dir)` over constraints with `c.dir < 0`. Returns the
    /// pairings `(c.x, c.dir)` of the limiting constraint.
    fn limit(ineqs: &[Vec<Int>], x: &[Int], dir: &[Int]) -> Option<(Int, Int)> {
        let mut best: Option<(Int, Int)> = None;
        for c in ineqs {
            let cd = arith::dot(c, dir);
            if !cd.is_negative() {
                continue;
            }
            let cx = arith::dot(c, x);
            let better = match &best {
                None => true,
                // cx/(-cd) < bx/(-bd)  <=>  cx * (-bd) < bx * (-cd)
                Some((bx, bd)) => &cx * -bd < bx * (-&cd),
            };
            if better {
                best = Some((cx, cd));
            }
        }
        best
    }

    fn step(x: &mut Vec<Int>, dir: &[Int], sx: &Int, sd: &Int) {
        // x <- (-s.dir) x + (s.x) dir, tight at the limiting constraint.
        for (xi, di) in x.iter_mut().zip(dir) {
            *xi = &*xi * (-sd) + sx * di;
        }
        arith::make_primitive(x);
    }
}

/// Canonical representative of a ray modulo the lineality space: the
/// rational orthogonal projection onto its complement, cleared to a
/// primitive integer vector.
fn project_off_lineality(ray: &[Int], lineality: &[Vec<Int>]) -> Vec<Int> {
    if lineality.is_empty() {
        let mut v = ray.to_vec();
        arith::make_primitive(&mut v);
        return v;
    }
    // Gram matrix of the lineality basis under the standard dot product is
    // positive definite, hence invertible.
    let k = lineality.len();
    let mut gram = vec![vec![Int::zero(); k]; k];
    for i in 0..k {
        for j in 0..k {
            gram[i][j] = arith::dot(&lineality[i], &lineality[j]);
        }
    }
    let rhs: Vec<Rat> = (0..k)
        .map(|i| Rat::from_integer(arith::dot(&lineality[i], ray)))
        .collect();
    let coeffs = solve_pd(&gram, &rhs);
    let mut proj: Vec<Rat> = ray
        .iter()
        .map(|x| Rat::from_integer(x.clone()))
        .collect();
    for (c, l) in coeffs.iter().zip(lineality) {
        for (x, y) in proj.iter_mut().zip(l) {
            *x -= c * y;
        }
    }
    arith::clear_denominators(&proj)
}

fn solve_pd(a: &[Vec<Int>], b: &[Rat]) -> Vec<Rat> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row = arith::rat_vec(&a[i]);
            row.push(b[i].clone());
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("positive definite Gram matrix");
        m.swap(col, pivot);
        let d = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &d;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            let src = m[col].clone();
            for (x, s) in m[r].iter_mut().zip(&src) {
                *x -= &f * s;
            }
        }
    }
    (0..n).map(|i| m[i][n].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ints;

    fn rows(data: &[&[i64]]) -> Vec<Vec<Int>> {
        data.iter().map(|r| ints(r)).collect()
    }

    #[test]
    fn plane_quadrant() {
        let out = cone_from_constraints(2, &rows(&[&[1, 0], &[0, 1]]), &[]);
        assert!(out.lineality.is_empty());
        assert_eq!(out.rays, rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn dual_of_two_dimensional_cone() {
        // Constraints from rays (1,0) and (1,2) of the primal: the dual cone
        // under the standard dot product is spanned by (0,1) and (2,-1).
        let out = cone_from_constraints(2, &rows(&[&[1, 0], &[1, 2]]), &[]);
        assert!(out.lineality.is_empty());
        assert_eq!(out.rays, rows(&[&[0, 1], &[2, -1]]));
    }

    #[test]
    fn halfplane_has_lineality() {
        let out = cone_from_constraints(2, &rows(&[&[1, 0]]), &[]);
        assert_eq!(out.lineality, rows(&[&[0, 1]]));
        assert_eq!(out.rays, rows(&[&[1, 0]]));
    }

    #[test]
    fn no_constraints_is_full_space() {
        let out = cone_from_constraints(3, &[], &[]);
        assert_eq!(out.lineality.len(), 3);
        assert!(out.rays.is_empty());
    }

    #[test]
    fn opposite_constraints_make_hyperplane() {
        let out = cone_from_constraints(2, &rows(&[&[1, 1], &[-1, -1]]), &[]);
        assert_eq!(out.lineality, rows(&[&[1, -1]]));
        assert!(out.rays.is_empty());
    }

    #[test]
    fn equality_restricts_to_subspace() {
        // x + y + z = 0, x >= 0, y >= 0 inside the plane.
        let out = cone_from_constraints(3, &rows(&[&[1, 0, 0], &[0, 1, 0]]), &rows(&[&[1, 1, 1]]));
        assert!(out.lineality.is_empty());
        assert_eq!(out.rays.len(), 2);
        for r in &out.rays {
            assert!(arith::dot(&ints(&[1, 1, 1]), r).is_zero());
        }
    }

    #[test]
    fn simplicial_orthant_dim4() {
        let out = cone_from_constraints(
            4,
            &rows(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
            &[],
        );
        assert_eq!(out.rays.len(), 4);
    }

    #[test]
    fn redundant_constraints_are_harmless() {
        let out = cone_from_constraints(
            2,
            &rows(&[&[1, 0], &[0, 1], &[1, 1], &[2, 1], &[1, 2]]),
            &[],
        );
        assert_eq!(out.rays, rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn canonical_output_independent_of_order() {
        let a = rows(&[&[3, -1, 2], &[1, 4, 0], &[0, 1, 1], &[2, 2, -1]]);
        let mut b = a.clone();
        b.reverse();
        let out_a = cone_from_constraints(3, &a, &[]);
        let out_b = cone_from_constraints(3, &b, &[]);
        assert_eq!(out_a, out_b);
    }

    #[test]
    fn rays_satisfy_their_constraints() {
        let mut rng = crate::arith::XorShift::new(99);
        for _ in 0..60 {
            let m = rng.range_i64(1, 5) as usize;
            let cs: Vec<Vec<Int>> = (0..m)
                .map(|_| {
                    ints(&[
                        rng.range_i64(-3, 3),
                        rng.range_i64(-3, 3),
                        rng.range_i64(-3, 3),
                    ])
                })
                .collect();
            let out = cone_from_constraints(3, &cs, &[]);
            for r in &out.rays {
                for c in &cs {
                    assert!(!arith::dot(c, r).is_negative(), "ray {r:?} vs {c:?}");
                }
            }
            for l in &out.lineality {
                for c in &cs {
                    assert!(arith::dot(c, l).is_zero());
                }
            }
        }
    }

    /// Membership cross-check against the simplex oracle on random cones:
    /// the DD rays of `{x : Cx >= 0}` generate exactly the points the
    /// constraint system accepts.
    #[test]
    fn dd_agrees_with_simplex_membership() {
        use crate::cones::simplex::express_nonneg;
        let mut rng = crate::arith::XorShift::new(4242);
        for _ in 0..40 {
            let dim = rng.range_i64(2, 4) as usize;
            let mcount = rng.range_i64(1, 6) as usize;
            let cs: Vec<Vec<Int>> = (0..mcount)
                .map(|_| (0..dim).map(|_| Int::from(rng.range_i64(-3, 3))).collect())
                .collect();
            let out = cone_from_constraints(dim, &cs, &[]);
            let gens = out.generators();
            for _ in 0..20 {
                let x: Vec<Int> = (0..dim).map(|_| Int::from(rng.range_i64(-5, 5))).collect();
                let satisfies = cs.iter().all(|c| !arith::dot(c, &x).is_negative());
                let member = express_nonneg(&gens, &x).is_ok();
                assert_eq!(satisfies, member, "x={x:?} cs={cs:?} gens={gens:?}");
            }
        }
    }
}
