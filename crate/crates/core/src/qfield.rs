//! Exact arithmetic over the coefficient field of the generic parameter q.
//!
//! Values live in Q(z) where z = q^(1/D) for a per-value scale D >= 1;
//! fractional powers of q (needed for half-integer contents) become integer
//! powers of z.  Representation invariants:
//! - `LaurentPoly` maps exponents to nonzero `BigInt` coefficients; the zero
//!   polynomial is the empty map.
//! - `RationalFn` keeps `den` a polynomial with nonzero constant term and
//!   positive leading coefficient, `gcd(num, den) = 1` (including integer
//!   content), and the scale minimal (the gcd of all exponents and D is 1).
//! Canonical forms make `==` structural equality and JSON output stable
//! across runs.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use serde_json::{Map, Value};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QError {
    #[error("division by zero")]
    DivideByZero,
    #[error("exact division failed: {0}")]
    NotDivisible(String),
    #[error("pole at evaluation point {0}")]
    PoleAtPoint(String),
}

// ---- Laurent polynomials ----

/// A Laurent polynomial with integer coefficients, sum of coeff * z^exp.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, BigInt::one())
    }

    pub fn monomial(exp: i64, coeff: BigInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        LaurentPoly { coeffs }
    }

    pub fn from_int(v: i64) -> Self {
        Self::monomial(0, BigInt::from(v))
    }

    /// The variable itself, z = q^(1/D) at whatever scale the context uses.
    pub fn var() -> Self {
        Self::monomial(1, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeff(0).is_one()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn insert_term(coeffs: &mut BTreeMap<i64, BigInt>, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match coeffs.get_mut(&exp) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    coeffs.remove(&exp);
                }
            }
            None => {
                coeffs.insert(exp, coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &other.coeffs {
            Self::insert_term(&mut coeffs, *e, c.clone());
        }
        LaurentPoly { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &other.coeffs {
            Self::insert_term(&mut coeffs, *e, -c.clone());
        }
        LaurentPoly { coeffs }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                Self::insert_term(&mut coeffs, e1 + e2, c1 * c2);
            }
        }
        LaurentPoly { coeffs }
    }

    pub fn shift(&self, by: i64) -> Self {
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (e + by, c.clone())).collect() }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplies all exponents by `factor` (moving between scales).
    pub fn stretch(&self, factor: i64) -> Self {
        assert!(factor > 0);
        LaurentPoly { coeffs: self.coeffs.iter().map(|(e, c)| (e * factor, c.clone())).collect() }
    }

    /// Divides all exponents by `factor`; caller guarantees divisibility.
    fn compress(&self, factor: i64) -> Self {
        assert!(factor > 0);
        LaurentPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(e, c)| {
                    debug_assert_eq!(e % factor, 0);
                    (e / factor, c.clone())
                })
                .collect(),
        }
    }

    /// Gcd of all exponents (0 when no term has a nonzero exponent).
    fn exponent_gcd(&self) -> i64 {
        self.coeffs.keys().fold(0i64, |g, e| g.gcd(e))
    }

    pub fn content(&self) -> BigInt {
        self.coeffs.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact division; `Err(NotDivisible)` if `other` does not divide `self`.
    pub fn exact_div(&self, other: &Self) -> Result<Self, QError> {
        if other.is_zero() {
            return Err(QError::DivideByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let sa = self.min_exp().unwrap();
        let sb = other.min_exp().unwrap();
        let a = dense_from(&self.shift(-sa));
        let b = dense_from(&other.shift(-sb));
        match dense_exact_div(&a, &b) {
            Some(q) => Ok(dense_to(&q).shift(sa - sb)),
            None => Err(QError::NotDivisible(format!("{} by {}", self, other))),
        }
    }

    /// Evaluates at a nonzero rational point (substituting the variable).
    pub fn evaluate(&self, point: &BigRational) -> Result<BigRational, QError> {
        if point.is_zero() && self.min_exp().map_or(false, |m| m < 0) {
            return Err(QError::PoleAtPoint(point.to_string()));
        }
        let mut acc = BigRational::zero();
        for (e, c) in &self.coeffs {
            acc += BigRational::from(c.clone()) * rat_pow(point, *e);
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (e, c) in &self.coeffs {
            map.insert(e.to_string(), Value::String(c.to_string()));
        }
        Value::Object(map)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let (sign, mag) = if c.is_negative() { ("-", -c.clone()) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{}", mag)?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{}*z", mag)?,
                (_, true) => write!(f, "z^{}", e)?,
                (_, false) => write!(f, "{}*z^{}", mag, e)?,
            }
        }
        Ok(())
    }
}

/// Raises a rational to an integer power; negative powers invert.
pub fn rat_pow(base: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mut b = if e < 0 { base.recip() } else { base.clone() };
    let mut n = e.unsigned_abs();
    let mut acc = BigRational::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &b;
        }
        n >>= 1;
        if n > 0 {
            b = &b * &b;
        }
    }
    acc
}

// ---- dense polynomial helpers (for gcd), lowest coefficient first ----

fn dense_from(p: &LaurentPoly) -> Vec<BigInt> {
    debug_assert!(p.min_exp().map_or(true, |m| m >= 0));
    let deg = p.max_exp().unwrap_or(0) as usize;
    let mut v = vec![BigInt::zero(); deg + 1];
    for (e, c) in p.terms() {
        v[*e as usize] = c.clone();
    }
    v
}

fn dense_to(v: &[BigInt]) -> LaurentPoly {
    let mut coeffs = BTreeMap::new();
    for (e, c) in v.iter().enumerate() {
        if !c.is_zero() {
            coeffs.insert(e as i64, c.clone());
        }
    }
    LaurentPoly { coeffs }
}

fn dense_trim(v: &mut Vec<BigInt>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn dense_content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn dense_scale_down(v: &mut [BigInt], by: &BigInt) {
    for c in v.iter_mut() {
        *c = &*c / by;
    }
}

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
fn dense_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let lead = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate() {
            let delta = &lead * bc;
            r[i + shift] = &r[i + shift] - delta;
        }
        dense_trim(&mut r);
        if r.is_empty() {
            break;
        }
    }
    r
}

/// Gcd in Z[z] with positive leading coefficient (primitive PRS, content kept).
fn dense_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    dense_trim(&mut a);
    dense_trim(&mut b);
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let ca = dense_content(&a);
    let cb = dense_content(&b);
    let content = ca.gcd(&cb);
    dense_scale_down(&mut a, &ca);
    dense_scale_down(&mut b, &cb);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let mut r = dense_prem(&a, &b);
        if r.is_empty() {
            break;
        }
        let cr = dense_content(&r);
        dense_scale_down(&mut r, &cr);
        a = b;
        b = r;
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
    }
    if b.last().map_or(false, |c| c.is_negative()) {
        for c in b.iter_mut() {
            *c = -&*c;
        }
    }
    for c in b.iter_mut() {
        *c = &*c * &content;
    }
    b
}

fn dense_exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut r = a.to_vec();
    dense_trim(&mut r);
    let mut b = b.to_vec();
    dense_trim(&mut b);
    if b.is_empty() {
        return None;
    }
    if r.is_empty() {
        return Some(vec![]);
    }
    if r.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let dr = r.len() - 1;
        let (quot, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = dr - db;
        q[shift] = quot.clone();
        for (i, bc) in b.iter().enumerate() {
            let delta = &quot * bc;
            r[i + shift] = &r[i + shift] - delta;
        }
        dense_trim(&mut r);
        if r.is_empty() {
            return Some(q);
        }
    }
    None
}

// ---- rational functions ----

/// A ratio of Laurent polynomials in z = q^(1/scale), kept in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
    scale: u32,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly, scale: u32) -> Result<Self, QError> {
        if den.is_zero() {
            return Err(QError::DivideByZero);
        }
        assert!(scale >= 1);
        let mut r = RationalFn { num, den, scale };
        r.normalize();
        Ok(r)
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self::new(p, LaurentPoly::one(), 1).unwrap()
    }

    pub fn from_laurent_scaled(p: LaurentPoly, scale: u32) -> Self {
        Self::new(p, LaurentPoly::one(), scale).unwrap()
    }

    pub fn zero() -> Self {
        Self::from_laurent(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(v))
    }

    /// q^e for integer e.
    pub fn q_power_int(e: i64) -> Self {
        Self::from_laurent(LaurentPoly::monomial(e, BigInt::one()))
    }

    /// q^e for rational e; the scale becomes the denominator of e.
    pub fn q_power(e: &BigRational) -> Self {
        let den = e.denom().clone();
        let scale = u32::try_from(&den).expect("exponent denominator fits u32");
        let z_exp = i64::try_from(e.numer()).expect("exponent numerator fits i64");
        Self::new(LaurentPoly::monomial(z_exp, BigInt::one()), LaurentPoly::one(), scale).unwrap()
    }

    /// q - q^-1, the ubiquitous structure constant.
    pub fn q_minus_qinv() -> Self {
        Self::from_laurent(
            LaurentPoly::monomial(1, BigInt::one()).add(&LaurentPoly::monomial(-1, -BigInt::one())),
        )
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Some(p) when the value is a Laurent polynomial over Z (unit denominator).
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.num = LaurentPoly::zero();
            self.den = LaurentPoly::one();
            self.scale = 1;
            return;
        }
        // Anchor the denominator at constant term != 0.
        let dshift = self.den.min_exp().unwrap();
        if dshift != 0 {
            self.den = self.den.shift(-dshift);
            self.num = self.num.shift(-dshift);
        }
        let nshift = self.num.min_exp().unwrap();
        let num0 = self.num.shift(-nshift);
        let g = dense_gcd(&dense_from(&num0), &dense_from(&self.den));
        let g = dense_to(&g);
        if !g.is_one() {
            self.num = num0.exact_div(&g).unwrap().shift(nshift);
            self.den = self.den.exact_div(&g).unwrap();
        }
        if self.den.coeff(self.den.max_exp().unwrap()).is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
        // Minimize the scale: divide exponents by their common gcd with it.
        if self.scale > 1 {
            let eg = self.num.exponent_gcd().gcd(&self.den.exponent_gcd());
            let d = if eg == 0 { i64::from(self.scale) } else { eg.gcd(&i64::from(self.scale)) };
            if d > 1 {
                self.num = self.num.compress(d);
                self.den = self.den.compress(d);
                self.scale /= d as u32;
            }
        }
    }

    /// Rewrites to a larger scale (a multiple of the current one).
    fn at_scale(&self, scale: u32) -> Self {
        assert_eq!(scale % self.scale, 0);
        let f = i64::from(scale / self.scale);
        if f == 1 {
            return self.clone();
        }
        RationalFn { num: self.num.stretch(f), den: self.den.stretch(f), scale }
    }

    fn common_scale(&self, other: &Self) -> u32 {
        self.scale.lcm(&other.scale)
    }

    pub fn add(&self, other: &Self) -> Self {
        let s = self.common_scale(other);
        let a = self.at_scale(s);
        let b = other.at_scale(s);
        Self::new(a.num.mul(&b.den).add(&b.num.mul(&a.den)), a.den.mul(&b.den), s).unwrap()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFn { num: self.num.neg(), den: self.den.clone(), scale: self.scale }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let s = self.common_scale(other);
        let a = self.at_scale(s);
        let b = other.at_scale(s);
        // Monomial factors cannot share a polynomial divisor with a canonical
        // denominator, so skip the gcd and only fix content, sign and scale.
        if a.den.is_one() && a.num.term_count() == 1 {
            return Self::monomial_times(&a.num, &b, s);
        }
        if b.den.is_one() && b.num.term_count() == 1 {
            return Self::monomial_times(&b.num, &a, s);
        }
        Self::new(a.num.mul(&b.num), a.den.mul(&b.den), s).unwrap()
    }

    fn monomial_times(mono: &LaurentPoly, f: &Self, scale: u32) -> Self {
        let mut num = f.num.mul(mono);
        let mut den = f.den.clone();
        let g = num.content().gcd(&den.content());
        if !g.is_one() {
            num = num.exact_div(&LaurentPoly::monomial(0, g.clone())).unwrap();
            den = den.exact_div(&LaurentPoly::monomial(0, g)).unwrap();
        }
        let mut r = RationalFn { num, den, scale };
        // Content division preserves den(0) != 0 and the positive sign; only
        // the scale can still be non-minimal.
        if r.scale > 1 {
            let eg = r.num.exponent_gcd().gcd(&r.den.exponent_gcd());
            let d = if eg == 0 { i64::from(r.scale) } else { eg.gcd(&i64::from(r.scale)) };
            if d > 1 {
                r.num = r.num.compress(d);
                r.den = r.den.compress(d);
                r.scale /= d as u32;
            }
        }
        r
    }

    pub fn inverse(&self) -> Result<Self, QError> {
        if self.is_zero() {
            return Err(QError::DivideByZero);
        }
        Self::new(self.den.clone(), self.num.clone(), self.scale)
    }

    pub fn div(&self, other: &Self) -> Result<Self, QError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Substitutes the internal variable z by an exact rational point.
    pub fn evaluate_at(&self, point: &BigRational) -> Result<BigRational, QError> {
        let d = self.den.evaluate(point)?;
        if d.is_zero() {
            return Err(QError::PoleAtPoint(point.to_string()));
        }
        Ok(self.num.evaluate(point)? / d)
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        map.insert("num".into(), self.num.to_json());
        map.insert("den".into(), self.den.to_json());
        map.insert("scale".into(), Value::from(self.scale));
        Value::Object(map)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({}) / ({})", self.num, self.den)?;
        }
        if self.scale > 1 {
            write!(f, " [z = q^(1/{})]", self.scale)?;
        }
        Ok(())
    }
}

// ---- matrices over the rational function field ----

/// Dense matrix over `RationalFn`, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<RationalFn>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![RationalFn::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, RationalFn::one());
        }
        m
    }

    pub fn get(&self, r: usize, c: usize) -> &RationalFn {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RationalFn) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries =
            self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let entries =
            self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn scalar_mul(&self, s: &RationalFn) -> Self {
        let entries = self.entries.iter().map(|e| e.mul(s)).collect();
        Matrix { rows: self.rows, cols: self.cols, entries }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[RationalFn]) -> Vec<RationalFn> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![RationalFn::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let a = self.get(r, c);
                if a.is_zero() {
                    continue;
                }
                out[r] = out[r].add(&a.mul(x));
            }
        }
        out
    }

    pub fn trace(&self) -> RationalFn {
        assert_eq!(self.rows, self.cols);
        let mut t = RationalFn::zero();
        for i in 0..self.rows {
            t = t.add(self.get(i, i));
        }
        t
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self, QError> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(QError::DivideByZero)?;
            if pivot != col {
                for c in 0..n {
                    let tmp = a.get(pivot, c).clone();
                    a.set(pivot, c, a.get(col, c).clone());
                    a.set(col, c, tmp);
                    let tmp = inv.get(pivot, c).clone();
                    inv.set(pivot, c, inv.get(col, c).clone());
                    inv.set(col, c, tmp);
                }
            }
            let pinv = a.get(col, col).inverse()?;
            for c in 0..n {
                a.set(col, c, a.get(col, c).mul(&pinv));
                inv.set(col, c, inv.get(col, c).mul(&pinv));
            }
            for r in 0..n {
                if r == col || a.get(r, col).is_zero() {
                    continue;
                }
                let f = a.get(r, col).clone();
                for c in 0..n {
                    let na = a.get(r, c).sub(&f.mul(a.get(col, c)));
                    a.set(r, c, na);
                    let ni = inv.get(r, c).sub(&f.mul(inv.get(col, c)));
                    inv.set(r, c, ni);
                }
            }
        }
        Ok(inv)
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.rows)
            .map(|r| Value::Array((0..self.cols).map(|c| self.get(r, c).to_json()).collect()))
            .collect();
        Value::Array(rows)
    }
}

// ---- matrices over Q (for specializations at a rational point) ----

/// Dense matrix over `BigRational`, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![BigRational::zero(); rows * cols] }
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c) + a * other.get(k, c);
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Rank by exact Gaussian elimination (destructive on a copy).
    pub fn rank(&self) -> usize {
        let mut a = self.entries.clone();
        let (rows, cols) = (self.rows, self.cols);
        let at = |a: &Vec<BigRational>, r: usize, c: usize| a[r * cols + c].clone();
        let mut rank = 0;
        for col in 0..cols {
            let pivot = (rank..rows).find(|&r| !a[r * cols + col].is_zero());
            let Some(p) = pivot else { continue };
            for c in 0..cols {
                a.swap(p * cols + c, rank * cols + c);
            }
            let pv = at(&a, rank, col);
            for r in 0..rows {
                if r == rank || a[r * cols + col].is_zero() {
                    continue;
                }
                let f = &a[r * cols + col] / &pv;
                for c in col..cols {
                    let v = &a[r * cols + c] - &f * &a[rank * cols + c];
                    a[r * cols + c] = v;
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        rank
    }
}
