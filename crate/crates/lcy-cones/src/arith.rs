//! Arbitrary-precision scalars and the small vector helpers shared by the
//! lattice and cone modules.
//!
//! Integers serialize as decimal strings and rationals as `"num/den"`
//! strings so that JSON round-trips are safe at any magnitude.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Convenience constructor used pervasively in tests and tables.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn ints(vs: &[i64]) -> Vec<Int> {
    vs.iter().map(|&v| Int::from(v)).collect()
}

/// Plain dot product of two coordinate vectors (no intersection form).
pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add_scaled(target: &mut [Int], scale: &Int, src: &[Int]) {
    for (t, s) in target.iter_mut().zip(src) {
        *t += scale * s;
    }
}

pub fn neg_vec(v: &[Int]) -> Vec<Int> {
    v.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(v: &[Int]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Divides the vector by the gcd of its entries. The zero vector is left
/// untouched. The direction (overall sign) is preserved.
pub fn make_primitive(v: &mut [Int]) {
    let mut g = Int::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

/// Primitive representative with the first nonzero entry positive. Only
/// meaningful for vectors considered up to sign (lineality generators,
/// functionals defining hyperplanes).
pub fn make_primitive_signed(v: &mut [Int]) {
    make_primitive(v);
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -&*x;
            }
        }
    }
}

/// Primitive integer vector pointing in the same direction as the rational
/// input (zero stays zero).
pub fn clear_denominators(v: &[Rat]) -> Vec<Int> {
    clear_denominators_scaled(v).0
}

/// Like [`clear_denominators`], also returning the positive rational `s`
/// with `input = s * integer_vector`.
pub fn clear_denominators_scaled(v: &[Rat]) -> (Vec<Int>, Rat) {
    let mut l = Int::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let mut out: Vec<Int> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let mut content = Int::zero();
    for x in &out {
        content = content.gcd(x);
    }
    if content.is_zero() {
        return (out, Rat::one());
    }
    for x in out.iter_mut() {
        *x = &*x / &content;
    }
    (out, Rat::new(content, l))
}

pub fn rat_vec(v: &[Int]) -> Vec<Rat> {
    v.iter().map(|x| Rat::from_integer(x.clone())).collect()
}

pub fn all_integral(v: &[Rat]) -> bool {
    v.iter().all(|x| x.is_integer())
}

pub fn rat_to_string(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_string(s: &str) -> Option<Rat> {
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.parse().ok()?;
            let d: Int = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => {
            let n: Int = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// serde adapters for integer vectors / matrices as decimal strings.
pub mod serde_int_vec {
    use super::Int;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Int], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(v.iter().map(|x| x.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Int>, D::Error> {
        let raw: Vec<String> = Vec::deserialize(de)?;
        raw.iter()
            .map(|s| s.parse::<Int>().map_err(serde::de::Error::custom))
            .collect()
    }
}

pub mod serde_int_mat {
    use super::Int;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &[Vec<Int>], ser: S) -> Result<S::Ok, S::Error> {
        ser.collect_seq(
            m.iter()
                .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
        )
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Vec<Int>>, D::Error> {
        let raw: Vec<Vec<String>> = Vec::deserialize(de)?;
        raw.iter()
            .map(|row| {
                row.iter()
                    .map(|s| s.parse::<Int>().map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

/// Deterministic xorshift generator for randomized property tests and the
/// pseudorandom sampling required by the verification suites. Not a crypto
/// PRNG; chosen for reproducibility across platforms.
#[derive(Clone, Debug)]
pub struct XorShift(u64);

impl XorShift {
    pub fn new(seed: u64) -> Self {
        XorShift(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    /// Uniform in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }
}
