//! Lattice-point counts of dilates, the Ehrhart polynomial and the h*-vector.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lpm::Lpm;
use crate::polytope::dimension;

/// Largest number of candidate points the naive counter will visit.
pub const NAIVE_LIMIT: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    /// dynamic programme over prefix sums
    Prefix,
    /// enumeration of the whole box `[0,t]^n`
    Naive,
}

/// `#(tP ∩ Z^n)`.
pub fn count_lattice_points(m: &Lpm, t: u64) -> BigUint {
    let (lo, hi) = m.height_bounds();
    let t = t as usize;
    let k = m.k();
    // ways[s] = number of prefixes x_1..x_i with sum s
    let mut ways = vec![BigUint::zero(); t * k + 1];
    ways[0] = BigUint::one();
    for i in 1..=m.n() {
        let (a, b) = (t * lo[i], t * hi[i]);
        let mut next = vec![BigUint::zero(); t * k + 1];
        // running window sum over the previous row
        let mut window = BigUint::zero();
        let prev_lo = t * lo[i - 1];
        let prev_hi = t * hi[i - 1];
        for s in 0..=b {
            if s >= prev_lo && s <= prev_hi {
                window += &ways[s];
            }
            if s > t {
                let old = s - t - 1;
                if old >= prev_lo && old <= prev_hi {
                    window -= &ways[old];
                }
            }
            if s >= a {
                next[s] = window.clone();
            }
        }
        ways = next;
    }
    ways[t * k].clone()
}

/// Count by brute-force enumeration; used as a reference.
pub fn count_lattice_points_naive(m: &Lpm, t: u64) -> Result<BigUint> {
    let n = m.n();
    let total = (t + 1).checked_pow(n as u32).filter(|&c| c <= NAIVE_LIMIT);
    if total.is_none() {
        return Err(Error::SizeGuard { limit: NAIVE_LIMIT as usize });
    }
    let (lo, hi) = m.height_bounds();
    let t = t as usize;
    let mut x = vec![0usize; n];
    let mut count = 0u64;
    loop {
        let mut s = 0;
        let ok = (1..=n).all(|i| {
            s += x[i - 1];
            t * lo[i] <= s && s <= t * hi[i]
        });
        if ok {
            count += 1;
        }
        // odometer step
        let mut j = 0;
        while j < n && x[j] == t {
            x[j] = 0;
            j += 1;
        }
        if j == n {
            break;
        }
        x[j] += 1;
    }
    Ok(BigUint::from(count))
}

pub fn count_with(m: &Lpm, t: u64, method: CountMethod) -> Result<BigUint> {
    match method {
        CountMethod::Prefix => Ok(count_lattice_points(m, t)),
        CountMethod::Naive => count_lattice_points_naive(m, t),
    }
}

/// Polynomial with rational coefficients, `coeffs[j]` multiplying `t^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartPolynomial {
    pub coeffs: Vec<BigRational>,
}

impl EhrhartPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn eval(&self, t: u64) -> BigRational {
        let t = BigRational::from_integer(BigInt::from(t));
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &t + c)
    }

    /// Leading coefficient times `d!`, the normalized volume.
    pub fn normalized_volume(&self) -> BigRational {
        let d = self.degree();
        let fact: BigInt = (1..=d).map(BigInt::from).product();
        &self.coeffs[d] * BigRational::from_integer(fact)
    }
}

/// Interpolate the counts at `t = 0..=d` where `d` is the dimension.
pub fn ehrhart_polynomial(m: &Lpm) -> EhrhartPolynomial {
    let d = dimension(m);
    let ys: Vec<BigRational> = (0..=d as u64)
        .map(|t| BigRational::from_integer(BigInt::from(count_lattice_points(m, t))))
        .collect();
    EhrhartPolynomial { coeffs: interpolate(&ys) }
}

/// Coefficients of the polynomial of degree `< ys.len()` through `(j, ys[j])`.
fn interpolate(ys: &[BigRational]) -> Vec<BigRational> {
    let len = ys.len();
    let mut coeffs = vec![BigRational::zero(); len];
    for (j, y) in ys.iter().enumerate() {
        // basis polynomial prod_{i != j} (t - i) / (j - i)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for i in (0..len).filter(|&i| i != j) {
            let shift = BigRational::from_integer(BigInt::from(i));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (p, c) in basis.iter().enumerate() {
                next[p + 1] += c;
                next[p] -= c * &shift;
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(j as i64 - i as i64));
        }
        let scale = y / denom;
        for (p, c) in basis.iter().enumerate() {
            coeffs[p] += c * &scale;
        }
    }
    coeffs
}

/// h* from the counts at `t = 0..=d`: the truncation of `(1-z)^(d+1) * sum L(t) z^t`.
pub fn hstar_from_counts(counts: &[BigUint]) -> Result<Vec<u64>> {
    let d = counts.len() - 1;
    let mut out = Vec::with_capacity(d + 1);
    for j in 0..=d {
        let mut h = BigInt::zero();
        for i in 0..=j {
            let term = BigInt::from(binomial(d as u64 + 1, i as u64)) * BigInt::from(counts[j - i].clone());
            if i % 2 == 0 {
                h += term;
            } else {
                h -= term;
            }
        }
        if h.is_negative() {
            return Err(Error::NegativityViolation { index: j, value: h.to_string() });
        }
        out.push(h.to_u64().ok_or_else(|| Error::Consistency(format!("h*_{j} overflows")))?);
    }
    Ok(out)
}

pub fn hstar_from_ehrhart(m: &Lpm) -> Result<Vec<u64>> {
    let d = dimension(m);
    let counts: Vec<BigUint> = (0..=d as u64).map(|t| count_lattice_points(m, t)).collect();
    hstar_from_counts(&counts)
}
