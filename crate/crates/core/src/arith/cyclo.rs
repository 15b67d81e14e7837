//! Exact arithmetic in cyclotomic fields Q(ζ_m).
//!
//! An element is stored in the power basis `1, ζ, …, ζ^{φ(m)-1}` of Q(ζ_m),
//! i.e. as the unique representative of degree < φ(m) modulo the m-th
//! cyclotomic polynomial. Coefficients are integer numerators over one
//! positive common denominator, kept coprime. Values that turn out to be
//! rational are moved to conductor 1.

use std::borrow::Cow;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rat;
use crate::error::{Error, Result};

fn cyclo_cache() -> &'static Mutex<HashMap<u32, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Coefficients (ascending) of the m-th cyclotomic polynomial Φ_m.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<i64>> {
    assert!(m > 0, "cyclotomic polynomial of conductor 0");
    if let Some(p) = cyclo_cache().lock().unwrap().get(&m) {
        return p.clone();
    }
    // x^m - 1 divided by Φ_d for every proper divisor d.
    let mut poly = vec![0i64; m as usize + 1];
    poly[0] = -1;
    poly[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            let divisor = cyclotomic_polynomial(d);
            poly = div_monic_i64(&poly, &divisor);
        }
    }
    let poly = Arc::new(poly);
    cyclo_cache().lock().unwrap().insert(m, poly.clone());
    poly
}

fn div_monic_i64(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Euler's totient, the degree of Q(ζ_m) over Q.
pub fn euler_phi(m: u32) -> usize {
    cyclotomic_polynomial(m).len() - 1
}

fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// Reduces an integer polynomial in ζ modulo Φ_m, returning φ(m) coefficients.
fn reduce_mod_phi(m: u32, mut dense: Vec<BigInt>) -> Vec<BigInt> {
    let phi_poly = cyclotomic_polynomial(m);
    let phi = phi_poly.len() - 1;
    if dense.len() < phi {
        dense.resize(phi, BigInt::zero());
        return dense;
    }
    for d in (phi..dense.len()).rev() {
        if dense[d].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut dense[d]);
        for (k, &pk) in phi_poly[..phi].iter().enumerate() {
            if pk != 0 {
                dense[d - phi + k] -= &c * pk;
            }
        }
    }
    dense.truncate(phi);
    dense
}

/// An exact element of a cyclotomic field.
#[derive(Clone, Debug)]
pub struct CycloNum {
    m: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloNum {
    /// Builds Σ coeff·ζ_m^exp from a sparse exponent map.
    pub fn new(m: u32, terms: &[(u32, Rat)]) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroConductor);
        }
        let mut den = BigInt::one();
        for (e, c) in terms {
            if *e >= m {
                return Err(Error::ExponentRange { exp: *e, conductor: m });
            }
            den = den.lcm(c.denom());
        }
        let mut dense = vec![BigInt::zero(); m as usize];
        for (e, c) in terms {
            dense[*e as usize] += c.numer() * (&den / c.denom());
        }
        Ok(Self::from_parts(m, reduce_mod_phi(m, dense), den))
    }

    fn from_parts(m: u32, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut x = CycloNum { m, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() && !g.is_zero() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
        if self.m != 1 && self.num.iter().skip(1).all(Zero::is_zero) {
            let c0 = self.num.first().cloned().unwrap_or_default();
            self.m = 1;
            self.num = vec![c0];
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
        }
    }

    pub fn from_rat(q: Rat) -> Self {
        Self::from_parts(1, vec![q.numer().clone()], q.denom().clone())
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_parts(1, vec![BigInt::from(k)], BigInt::one())
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// ζ_m^k for any integer k.
    pub fn zeta(m: u32, k: i64) -> Self {
        assert!(m > 0, "conductor must be positive");
        let e = k.rem_euclid(m as i64) as usize;
        let mut dense = vec![BigInt::zero(); m as usize];
        dense[e] = BigInt::one();
        Self::from_parts(m, reduce_mod_phi(m, dense), BigInt::one())
    }

    /// 2cos(2πk/m) = ζ_m^k + ζ_m^{-k}.
    pub fn two_cos(m: u32, k: i64) -> Self {
        &Self::zeta(m, k) + &Self::zeta(m, -k)
    }

    pub fn conductor(&self) -> u32 {
        self.m
    }

    /// Power-basis coefficient of ζ^e (zero beyond φ(m)).
    pub fn coeff(&self, e: usize) -> Rat {
        match self.num.get(e) {
            Some(c) => Rat::new(c.clone(), self.den.clone()),
            None => Rat::zero(),
        }
    }

    /// Nonzero power-basis coefficients keyed by exponent.
    pub fn coeff_map(&self) -> BTreeMap<u32, Rat> {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u32, Rat::new(c.clone(), self.den.clone())))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.m == 1 && self.den.is_one() && self.num[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.m == 1
    }

    pub fn to_rational(&self) -> Option<Rat> {
        self.is_rational().then(|| self.coeff(0))
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.den.is_one()).then(|| self.num[0].clone())
    }

    /// Re-expresses the value in Q(ζ_big) where `m` divides `big`.
    /// Rational values stay at conductor 1.
    pub fn embed(&self, big: u32) -> CycloNum {
        let mut e = self.embed_raw(big);
        e.normalize();
        e
    }

    fn embed_raw(&self, big: u32) -> CycloNum {
        assert!(big.is_multiple_of(self.m), "conductor {} does not divide {}", self.m, big);
        if big == self.m {
            return self.clone();
        }
        let step = (big / self.m) as usize;
        let mut dense = vec![BigInt::zero(); big as usize];
        for (e, c) in self.num.iter().enumerate() {
            dense[e * step] = c.clone();
        }
        // Stored un-normalized: the caller wants this exact conductor.
        CycloNum {
            m: big,
            num: reduce_mod_phi(big, dense),
            den: self.den.clone(),
        }
    }

    /// Numerators and denominator at the given conductor; used as an exact hash key.
    pub fn key_at(&self, big: u32) -> (Vec<BigInt>, BigInt) {
        let e = self.embed_raw(big);
        (e.num, e.den)
    }

    fn aligned<'a>(a: &'a CycloNum, b: &'a CycloNum) -> (u32, Cow<'a, CycloNum>, Cow<'a, CycloNum>) {
        if a.m == b.m {
            return (a.m, Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let m = lcm(a.m, b.m);
        let ea = if a.m == m { Cow::Borrowed(a) } else { Cow::Owned(a.embed_raw(m)) };
        let eb = if b.m == m { Cow::Borrowed(b) } else { Cow::Owned(b.embed_raw(m)) };
        (m, ea, eb)
    }

    fn add_signed(&self, other: &CycloNum, negate: bool) -> CycloNum {
        let (m, a, b) = Self::aligned(self, other);
        let num = if a.den == b.den {
            a.num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| if negate { x - y } else { x + y })
                .collect::<Vec<_>>()
        } else {
            a.num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| {
                    let (l, r) = (x * &b.den, y * &a.den);
                    if negate { l - r } else { l + r }
                })
                .collect()
        };
        let den = if a.den == b.den { a.den.clone() } else { &a.den * &b.den };
        Self::from_parts(m, num, den)
    }

    fn mul_impl(&self, other: &CycloNum) -> CycloNum {
        if self.m == 1 {
            return other.scale_parts(&self.num[0], &self.den);
        }
        if other.m == 1 {
            return self.scale_parts(&other.num[0], &other.den);
        }
        let (m, a, b) = Self::aligned(self, other);
        let mut prod = vec![BigInt::zero(); a.num.len() + b.num.len() - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Self::from_parts(m, reduce_mod_phi(m, prod), &a.den * &b.den)
    }

    fn scale_parts(&self, n: &BigInt, d: &BigInt) -> CycloNum {
        Self::from_parts(self.m, self.num.iter().map(|c| c * n).collect(), &self.den * d)
    }

    /// Multiplication by a rational scalar.
    pub fn scale(&self, q: &Rat) -> CycloNum {
        self.scale_parts(q.numer(), q.denom())
    }

    /// The Galois automorphism ζ_m ↦ ζ_m^k; requires gcd(k, m) = 1.
    pub fn galois(&self, k: u32) -> CycloNum {
        assert!(k.gcd(&self.m) == 1, "galois exponent {k} not a unit mod {}", self.m);
        if self.m == 1 {
            return self.clone();
        }
        let m = self.m as usize;
        let mut dense = vec![BigInt::zero(); m];
        for (e, c) in self.num.iter().enumerate() {
            dense[(e * k as usize) % m] += c;
        }
        Self::from_parts(self.m, reduce_mod_phi(self.m, dense), self.den.clone())
    }

    /// Complex conjugation, ζ_m ↦ ζ_m^{m-1}.
    pub fn conj(&self) -> CycloNum {
        if self.m == 1 {
            return self.clone();
        }
        self.galois(self.m - 1)
    }

    /// Multiplicative inverse via the product of the nontrivial Galois conjugates.
    pub fn inverse(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::DivByZero);
        }
        if self.m == 1 {
            return Ok(Self::from_parts(1, vec![self.den.clone()], self.num[0].clone()));
        }
        let mut others = CycloNum::one();
        for k in 2..self.m {
            if k.gcd(&self.m) == 1 {
                others = &others * &self.galois(k);
            }
        }
        let norm = (self * &others)
            .to_rational()
            .expect("field norm is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn checked_div(&self, other: &CycloNum) -> Result<CycloNum> {
        Ok(self * &other.inverse()?)
    }

    /// Floating-point image in C as (re, im); diagnostics only.
    pub fn to_complex(&self) -> (f64, f64) {
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let (mut re, mut im) = (0.0, 0.0);
        for (e, c) in self.num.iter().enumerate() {
            let angle = 2.0 * std::f64::consts::PI * e as f64 / self.m as f64;
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.m == other.m {
            return self.den == other.den && self.num == other.num;
        }
        // Normalized values with different conductors can still coincide.
        let (_, a, b) = Self::aligned(self, other);
        a.num.iter().zip(&b.num).all(|(x, y)| x * &b.den == y * &a.den)
    }
}

impl Eq for CycloNum {}

impl Ord for CycloNum {
    /// Lexicographic order of power-basis coefficients at the common conductor.
    /// Total only among values whose conductors all divide one field, e.g. the
    /// character values of a single group.
    fn cmp(&self, other: &Self) -> Ordering {
        let (_, a, b) = Self::aligned(self, other);
        for (x, y) in a.num.iter().zip(&b.num) {
            match (x * &b.den).cmp(&(y * &a.den)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for CycloNum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&CycloNum> for &CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                $body(self, rhs)
            }
        }
        impl $tr<CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                $body(&self, &rhs)
            }
        }
        impl $tr<&CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                $body(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &CycloNum, b: &CycloNum| a.add_signed(b, false));
forward_binop!(Sub, sub, |a: &CycloNum, b: &CycloNum| a.add_signed(b, true));
forward_binop!(Mul, mul, |a: &CycloNum, b: &CycloNum| a.mul_impl(b));

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            m: self.m,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeff_map() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            if e == 0 {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                write!(f, "z{}^{}", self.m, e)?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycloJson {
    conductor: u32,
    coeffs: BTreeMap<u32, String>,
}

impl Serialize for CycloNum {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycloJson {
            conductor: self.m,
            coeffs: self.coeff_map().into_iter().map(|(e, c)| (e, c.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycloNum {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = CycloJson::deserialize(d)?;
        let terms = raw
            .coeffs
            .iter()
            .map(|(e, c)| c.parse::<Rat>().map(|q| (*e, q)))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(D::Error::custom)?;
        CycloNum::new(raw.conductor, &terms).map_err(D::Error::custom)
    }
}
