//! Exact arithmetic in cyclotomic fields.
//!
//! A value is stored in `Q(zeta_n)` in the power basis `1, z, .., z^(phi(n)-1)`
//! modulo the n-th cyclotomic polynomial, always with `n` lowered to the
//! conductor. Equal values therefore have identical representations.

mod modp;
mod parse;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use modp::ModPReduction;
pub use parse::parse;

use crate::error::{Error, Result};
use crate::numtheory::{euler_phi, gcd, lcm, mod_inverse, prime_factors, units_mod};

fn phi_cache() -> &'static Mutex<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    if let Some(p) = phi_cache().lock().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Phi_d for proper divisors d
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &den);
        }
    }
    let arc = Arc::new(num);
    phi_cache().lock().unwrap().insert(n, arc.clone());
    arc
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = r[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                r[i + j] -= c * dj;
            }
        }
    }
    q
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Reduces a dense exponent vector (index = power of `zeta_n`) modulo `Phi_n`.
fn reduce_dense(n: u64, mut dense: Vec<BigRational>) -> Vec<BigRational> {
    let phi = cyclotomic_polynomial(n);
    let deg = phi.len() - 1;
    for i in (deg..dense.len()).rev() {
        if dense[i].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut dense[i]);
        for (j, &pj) in phi.iter().enumerate().take(deg) {
            if pj != 0 {
                dense[i - deg + j] -= &c * rat(pj);
            }
        }
    }
    dense.resize(deg, BigRational::zero());
    dense
}

/// An exact element of a cyclotomic field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycNum {
    n: u64,
    coeffs: Vec<BigRational>,
}

impl CycNum {
    pub fn zero() -> CycNum {
        CycNum {
            n: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> CycNum {
        CycNum::from_int(1)
    }

    pub fn from_int(a: i64) -> CycNum {
        CycNum {
            n: 1,
            coeffs: vec![rat(a)],
        }
    }

    pub fn from_bigint(a: BigInt) -> CycNum {
        CycNum {
            n: 1,
            coeffs: vec![BigRational::from_integer(a)],
        }
    }

    pub fn from_rational(a: BigRational) -> CycNum {
        CycNum {
            n: 1,
            coeffs: vec![a],
        }
    }

    pub fn from_fraction(num: i64, den: i64) -> CycNum {
        CycNum::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `E(n)^k`.
    pub fn root_of_unity(n: u64, k: i64) -> CycNum {
        assert!(n > 0);
        let mut dense = vec![BigRational::zero(); n as usize];
        dense[k.rem_euclid(n as i64) as usize] = BigRational::one();
        CycNum::from_dense(n, dense)
    }

    /// Builds `sum_j dense[j] * zeta_n^j` (any length; indices taken mod n).
    pub fn from_dense(n: u64, dense: Vec<BigRational>) -> CycNum {
        let mut folded = vec![BigRational::zero(); n as usize];
        for (j, c) in dense.into_iter().enumerate() {
            if !c.is_zero() {
                folded[j % n as usize] += c;
            }
        }
        let coeffs = reduce_dense(n, folded);
        CycNum::canonical(n, coeffs)
    }

    /// `sum_k m[k] * E(n)^k` for integer multiplicities.
    pub fn from_int_dense(n: u64, m: &[i64]) -> CycNum {
        CycNum::from_dense(n, m.iter().map(|&a| rat(a)).collect())
    }

    fn canonical(mut n: u64, mut coeffs: Vec<BigRational>) -> CycNum {
        if coeffs.iter().all(|c| c.is_zero()) {
            return CycNum::zero();
        }
        loop {
            let mut changed = false;
            for p in prime_factors(n) {
                if let Some((m, c)) = descend(n, &coeffs, p) {
                    n = m;
                    coeffs = c;
                    changed = true;
                    break;
                }
            }
            if !changed {
                break;
            }
        }
        CycNum { n, coeffs }
    }

    /// The conductor: the least `n` (never 2 mod 4) with the value in `Q(zeta_n)`.
    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// Power-basis coefficients in `Q(zeta_conductor)`.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.n == 1 {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|i| i.to_i64())
    }

    /// True when every power-basis coefficient is an integer, i.e. the value
    /// is an algebraic integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Dense representation in `Q(zeta_m)` for a multiple `m` of the conductor,
    /// reduced modulo `Phi_m`.
    pub fn lifted(&self, m: u64) -> Vec<BigRational> {
        assert!(
            m % self.n == 0,
            "modulus {m} is not a multiple of {}",
            self.n
        );
        let step = (m / self.n) as usize;
        let mut dense = vec![BigRational::zero(); m as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[j * step] += c;
            }
        }
        reduce_dense(m, dense)
    }

    fn combine(
        &self,
        other: &CycNum,
        f: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> CycNum {
        if self.n == other.n {
            let c = self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect();
            return CycNum::canonical(self.n, c);
        }
        let m = lcm(self.n, other.n);
        let a = self.lifted(m);
        let b = other.lifted(m);
        let c = a.iter().zip(&b).map(|(x, y)| f(x, y)).collect();
        CycNum::canonical(m, c)
    }

    pub fn scale(&self, r: &BigRational) -> CycNum {
        if r.is_zero() {
            return CycNum::zero();
        }
        CycNum {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> CycNum {
        self.scale(&rat(k))
    }

    fn mul_ref(&self, other: &CycNum) -> CycNum {
        if self.n == 1 {
            return other.scale(&self.coeffs[0]);
        }
        if other.n == 1 {
            return self.scale(&other.coeffs[0]);
        }
        let m = lcm(self.n, other.n);
        let (a, b) = if self.n == m && other.n == m {
            (self.coeffs.clone(), other.coeffs.clone())
        } else {
            (self.lifted(m), other.lifted(m))
        };
        let mut dense = vec![BigRational::zero(); m as usize];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    dense[(i + j) % m as usize] += x * y;
                }
            }
        }
        CycNum::canonical(m, reduce_dense(m, dense))
    }

    /// Applies the field automorphism `zeta_n -> zeta_n^k` (for `k` coprime to the conductor).
    pub fn galois(&self, k: i64) -> Result<CycNum> {
        let n = self.n;
        if n == 1 {
            return Ok(self.clone());
        }
        let kk = k.rem_euclid(n as i64) as u64;
        if gcd(kk, n) != 1 {
            return Err(Error::NotUnit(kk, n));
        }
        Ok(self.galois_unchecked(kk))
    }

    fn galois_unchecked(&self, k: u64) -> CycNum {
        let n = self.n;
        let mut dense = vec![BigRational::zero(); n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                dense[(j as u64 * k % n) as usize] += c;
            }
        }
        CycNum {
            n,
            coeffs: reduce_dense(n, dense),
        }
    }

    pub fn conj(&self) -> CycNum {
        if self.n == 1 {
            return self.clone();
        }
        self.galois_unchecked(self.n - 1)
    }

    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// `|v|^2 = v * conj(v)`.
    pub fn abs_squared(&self) -> CycNum {
        self * &self.conj()
    }

    pub fn pow(&self, e: u32) -> CycNum {
        let mut r = CycNum::one();
        for _ in 0..e {
            r = &r * self;
        }
        r
    }

    pub fn field_stabilizer(&self) -> GaloisStabilizer {
        let units = units_mod(self.n)
            .into_iter()
            .filter(|&k| self.galois_unchecked(k) == *self)
            .collect();
        GaloisStabilizer { n: self.n, units }
    }

    /// Distinct Galois conjugates, in order of first appearance over units `k = 1, 2, ..`.
    pub fn galois_orbit(&self) -> Vec<CycNum> {
        let mut out: Vec<CycNum> = Vec::new();
        for k in units_mod(self.n) {
            let c = if self.n == 1 {
                self.clone()
            } else {
                self.galois_unchecked(k)
            };
            if !out.contains(&c) {
                out.push(c);
            }
        }
        out
    }

    /// `[Q(v) : Q]`.
    pub fn field_degree(&self) -> usize {
        euler_phi(self.n) as usize / self.field_stabilizer().units.len()
    }

    /// Norm from `Q(v)` to `Q`.
    pub fn norm(&self) -> BigRational {
        let mut prod = CycNum::one();
        for c in self.galois_orbit() {
            prod = &prod * &c;
        }
        prod.as_rational().cloned().expect("norm is rational")
    }

    /// The p-part `|N(v)|_p^(1/[Q(v):Q])` as an exact rational power of `p`.
    pub fn value_p_part(&self, p: u64) -> Result<PPart> {
        if self.is_zero() {
            return Err(Error::ZeroValue);
        }
        let orbit = self.galois_orbit();
        let mut prod = CycNum::one();
        for c in &orbit {
            prod = &prod * c;
        }
        let norm = prod.as_rational().cloned().expect("norm is rational");
        let val = |x: &BigInt| -> i64 {
            let mut x = x.abs();
            let pb = BigInt::from(p);
            let mut e = 0;
            while (&x % &pb).is_zero() {
                x /= &pb;
                e += 1;
            }
            e
        };
        let e = val(norm.numer()) - val(norm.denom());
        Ok(PPart::new(p, e, orbit.len() as i64))
    }

    /// Floating point approximation `(re, im)`; for display only.
    pub fn approx(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let a = 2.0 * std::f64::consts::PI * j as f64 / self.n as f64;
            re += v * a.cos();
            im += v * a.sin();
        }
        (re, im)
    }

    /// Canonical text form in `E(n)` notation.
    pub fn format(&self) -> String {
        let mut terms: Vec<String> = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = fmt_rational(c);
            let t = if j == 0 {
                cs
            } else {
                let root = if j == 1 {
                    format!("E({})", self.n)
                } else {
                    format!("E({})^{}", self.n, j)
                };
                if c.is_one() {
                    root
                } else if *c == -BigRational::one() {
                    format!("-{root}")
                } else {
                    format!("{cs}*{root}")
                }
            };
            terms.push(t);
        }
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut s = terms[0].clone();
        for t in &terms[1..] {
            if t.starts_with('-') {
                s.push_str(t);
            } else {
                s.push('+');
                s.push_str(t);
            }
        }
        s
    }
}

fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Tries to express a value of `Q(zeta_n)` in `Q(zeta_{n/p})`.
fn descend(n: u64, coeffs: &[BigRational], p: u64) -> Option<(u64, Vec<BigRational>)> {
    if n % (p * p) == 0 {
        if coeffs
            .iter()
            .enumerate()
            .any(|(j, c)| j as u64 % p != 0 && !c.is_zero())
        {
            return None;
        }
        let m = n / p;
        let phi_m = euler_phi(m) as usize;
        let c: Vec<BigRational> = (0..phi_m).map(|s| coeffs[s * p as usize].clone()).collect();
        return Some((m, c));
    }
    // p exactly divides n: zeta_n = zeta_p^s zeta_m^t with s m + t p = 1 (mod n)
    let m = n / p;
    let s = mod_inverse(m as i64, p as i64).unwrap() as u64;
    let t = if m == 1 {
        0
    } else {
        mod_inverse(p as i64, m as i64).unwrap() as u64
    };
    let mut parts: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); m as usize]; p as usize];
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let j = j as u64;
        let a = (j * s % p) as usize;
        let e = if m == 1 { 0 } else { (j * t % m) as usize };
        parts[a][e] += c;
    }
    let parts: Vec<Vec<BigRational>> = parts.into_iter().map(|d| reduce_dense(m, d)).collect();
    if parts[1..].iter().any(|w| *w != parts[1]) {
        return None;
    }
    let c = parts[0].iter().zip(&parts[1]).map(|(a, b)| a - b).collect();
    Some((m, c))
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format())
    }
}

impl Ord for CycNum {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for CycNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for CycNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.format())
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

impl<'a> Add<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn add(self, o: &CycNum) -> CycNum {
        self.combine(o, |a, b| a + b)
    }
}

impl<'a> Sub<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn sub(self, o: &CycNum) -> CycNum {
        self.combine(o, |a, b| a - b)
    }
}

impl<'a> Mul<&'a CycNum> for &'a CycNum {
    type Output = CycNum;
    fn mul(self, o: &CycNum) -> CycNum {
        self.mul_ref(o)
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for CycNum {
    type Output = CycNum;
    fn add(self, o: CycNum) -> CycNum {
        &self + &o
    }
}

impl Sub for CycNum {
    type Output = CycNum;
    fn sub(self, o: CycNum) -> CycNum {
        &self - &o
    }
}

impl Mul for CycNum {
    type Output = CycNum;
    fn mul(self, o: CycNum) -> CycNum {
        &self * &o
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl std::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::zero(), |a, b| &a + &b)
    }
}

/// Units modulo `n` fixing a value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GaloisStabilizer {
    pub n: u64,
    pub units: Vec<u64>,
}

impl GaloisStabilizer {
    /// The stabilizer viewed inside `(Z/m)^x` for a multiple `m` of `n`.
    pub fn lift(&self, m: u64) -> Vec<u64> {
        assert!(m % self.n == 0);
        units_mod(m)
            .into_iter()
            .filter(|k| self.units.binary_search(&(k % self.n)).is_ok() || self.n == 1)
            .collect()
    }

    pub fn is_full(&self) -> bool {
        self.units.len() as u64 == euler_phi(self.n)
    }
}

/// True iff `Q(v) = Q(w)`, comparing Galois stabilizers over a common modulus.
pub fn same_field(v: &CycNum, w: &CycNum) -> bool {
    let m = lcm(v.conductor(), w.conductor());
    v.field_stabilizer().lift(m) == w.field_stabilizer().lift(m)
}

/// Field generated by a set of values, as the common stabilizer over the lcm of conductors.
pub fn common_stabilizer(values: &[CycNum]) -> GaloisStabilizer {
    let m = values.iter().fold(1u64, |acc, v| lcm(acc, v.conductor()));
    let mut units = units_mod(m);
    for v in values {
        let lifted = v.field_stabilizer().lift(m);
        units.retain(|k| lifted.binary_search(k).is_ok());
    }
    GaloisStabilizer { n: m, units }
}

/// True iff the fields generated by two value sets coincide.
pub fn same_field_of_sets(a: &[CycNum], b: &[CycNum]) -> bool {
    let sa = common_stabilizer(a);
    let sb = common_stabilizer(b);
    let m = lcm(sa.n, sb.n);
    sa.lift(m) == sb.lift(m)
}

/// `p^(num/den)` with the exponent in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PPart {
    pub p: u64,
    pub num: i64,
    pub den: i64,
}

impl PPart {
    pub fn new(p: u64, num: i64, den: i64) -> PPart {
        let g = num.gcd(&den).max(1);
        PPart {
            p,
            num: num / g,
            den: den / g,
        }
    }

    pub fn integer(p: u64, e: i64) -> PPart {
        PPart { p, num: e, den: 1 }
    }

    pub fn is_integral_power(&self) -> bool {
        self.den == 1
    }

    /// The value as an integer, when the exponent is a nonnegative integer.
    pub fn as_integer(&self) -> Option<u128> {
        if self.den == 1 && self.num >= 0 {
            Some((self.p as u128).pow(self.num as u32))
        } else {
            None
        }
    }

    pub fn times(&self, o: &PPart) -> PPart {
        assert_eq!(self.p, o.p);
        PPart::new(
            self.p,
            self.num * o.den + o.num * self.den,
            self.den * o.den,
        )
    }
}

impl fmt::Display for PPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_integer() {
            Some(v) => write!(f, "{v}"),
            None if self.den == 1 => write!(f, "{}^{}", self.p, self.num),
            None => write!(f, "{}^({}/{})", self.p, self.num, self.den),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> CycNum {
        parse(s).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(
            cyclotomic_polynomial(105)
                .iter()
                .filter(|&&a| a == -2)
                .count(),
            2
        );
    }

    #[test]
    fn conductor_reduction() {
        assert_eq!(c("1/2-1/2*E(3)-1/2*E(3)^2"), CycNum::one());
        assert_eq!(c("E(4)^2"), CycNum::from_int(-1));
        assert_eq!(CycNum::root_of_unity(6, 1).conductor(), 3);
        assert_eq!(CycNum::root_of_unity(10, 3).conductor(), 5);
        let s5 = c("E(5)+E(5)^4");
        assert_eq!(s5.conductor(), 5);
        assert!(s5.is_real());
        // sqrt(-7) lives in Q(zeta_7)
        let a = c("E(7)+E(7)^2+E(7)^4");
        let t = &a.scale_int(2) + &CycNum::one();
        assert_eq!(&t * &t, CycNum::from_int(-7));
        // sqrt(2) = E(8) - E(8)^3 has conductor 8
        let r2 = c("E(8)-E(8)^3");
        assert_eq!(&r2 * &r2, CycNum::from_int(2));
        assert_eq!(r2.conductor(), 8);
        // mixed-modulus sum collapsing to a rational
        assert_eq!(&c("E(3)") + &c("E(3)^2"), CycNum::from_int(-1));
        assert_eq!(&c("E(15)^5") + &c("E(15)^10"), CycNum::from_int(-1));
    }

    #[test]
    fn galois_and_fields() {
        let a = c("E(7)+E(7)^2+E(7)^4");
        let abar = a.conj();
        assert_eq!(abar, c("E(7)^3+E(7)^5+E(7)^6"));
        assert_eq!(a.galois(3).unwrap(), abar);
        assert_eq!(a.galois(2).unwrap(), a);
        assert!(a.galois(7).is_err());
        assert!(same_field(&a, &abar));
        assert!(!same_field(&CycNum::one(), &a));
        assert_eq!(c("E(4)").conj(), c("-E(4)"));
        assert_eq!(a.field_degree(), 2);
        assert!(a.field_stabilizer().units == vec![1, 2, 4]);
    }

    #[test]
    fn p_parts() {
        assert_eq!(c("2*E(4)").value_p_part(2).unwrap(), PPart::integer(2, 1));
        assert_eq!(
            c("E(7)+E(7)^2+E(7)^4").value_p_part(7).unwrap(),
            PPart::integer(7, 0)
        );
        assert_eq!(c("-3").value_p_part(3).unwrap(), PPart::integer(3, 1));
        assert_eq!(
            c("E(8)-E(8)^3").value_p_part(2).unwrap(),
            PPart::new(2, 1, 2)
        );
        assert!(CycNum::zero().value_p_part(2).is_err());
    }

    #[test]
    fn format_round_trip() {
        for s in [
            "0",
            "1",
            "-1/2",
            "E(4)",
            "-E(7)-E(7)^2",
            "3+2*E(7)^2-E(7)^4",
            "1/3*E(9)^2",
        ] {
            let v = c(s);
            assert_eq!(c(&v.format()), v);
        }
        assert_eq!(c("E(4)").format(), "E(4)");
    }
}
