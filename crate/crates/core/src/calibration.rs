//! Intertwining operators and formal Hecke algebra elements.
//!
//! The intertwiner tau_i = T_i - (q - q^-1) x_{i+1} / (x_{i+1} - x_i) acts on
//! a seminormal module by the T_i matrix with its diagonal removed; it swaps
//! the i-th and (i+1)-th weight components.  Products tau_w specialize at a
//! weight to elements of the finite Hecke algebra, computed here in the basis
//! {T_w} with exact rational function coefficients.

use crate::combinatorics::Permutation;
use crate::qfield::{Matrix, RationalFn};
use crate::seminormal::SeminormalModule;
use num::rational::BigRational;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalibrationError {
    #[error("intertwiner tau_{i} is undefined at a weight whose components {i} and {} coincide", i + 1)]
    UndefinedIntertwiner { i: usize },
}

// ---- the intertwiner matrices ----

/// Matrix of tau_i on a seminormal module: the T_i matrix with zero diagonal.
pub fn tau_matrix(m: &SeminormalModule, i: usize) -> Matrix {
    let mut t = m.t_matrix(i).clone();
    for l in 0..m.dim() {
        t.set(l, l, RationalFn::zero());
    }
    t
}

/// The scalar by which tau_i tau_i acts on the weight (a, b) = (q^{e_i}, q^{e_{i+1}}):
/// (q b - q^-1 a)(q a - q^-1 b) / ((b - a)(a - b)).
fn tau_square_scalar(ei: &BigRational, ei1: &BigRational) -> RationalFn {
    let a = RationalFn::q_power(ei);
    let b = RationalFn::q_power(ei1);
    let q = RationalFn::q_power_int(1);
    let qi = RationalFn::q_power_int(-1);
    let num = q.mul(&b).sub(&qi.mul(&a)).mul(&q.mul(&a).sub(&qi.mul(&b)));
    let den = b.sub(&a).mul(&a.sub(&b));
    num.div(&den).expect("distinct weight components")
}

/// Verifies the intertwiner identities on a module: weight exchange against
/// the x's, the square scalar, and the braid and commutation relations.
pub fn verify_tau_identities(m: &SeminormalModule) -> crate::seminormal::RelationReport {
    use crate::seminormal::RelationReport;
    let mut report = RelationReport::default();
    let n = m.n();
    let dim = m.dim();
    let taus: Vec<Matrix> = (1..n).map(|i| tau_matrix(m, i)).collect();

    for i in 1..n {
        let tau = &taus[i - 1];
        // x_i tau_i = tau_i x_{i+1} and x_{i+1} tau_i = tau_i x_i.
        let a = m.x_matrix(i).mul(tau) == tau.mul(&m.x_matrix(i + 1));
        let b = m.x_matrix(i + 1).mul(tau) == tau.mul(&m.x_matrix(i));
        report.checks.push(crate::seminormal::RelationCheck {
            name: format!("tau_{} exchanges x_{} and x_{}", i, i, i + 1),
            ok: a && b,
        });
        // x_j tau_i = tau_i x_j for j outside {i, i+1}.
        let mut distant = true;
        for j in 1..=n {
            if j == i || j == i + 1 {
                continue;
            }
            if m.x_matrix(j).mul(tau) != tau.mul(&m.x_matrix(j)) {
                distant = false;
            }
        }
        report.checks.push(crate::seminormal::RelationCheck {
            name: format!("tau_{} fixes distant x's", i),
            ok: distant,
        });
        // tau_i^2 acts on v_L by the square scalar of the weight of L.
        let sq = tau.mul(tau);
        let mut expect = Matrix::zero(dim, dim);
        for l in 0..dim {
            let e = m.weight(l);
            expect.set(l, l, tau_square_scalar(&e[i - 1], &e[i]));
        }
        report.checks.push(crate::seminormal::RelationCheck {
            name: format!("tau_{} squared is the weight scalar", i),
            ok: sq == expect,
        });
    }

    for i in 1..n {
        for j in (i + 2)..n {
            let ok = taus[i - 1].mul(&taus[j - 1]) == taus[j - 1].mul(&taus[i - 1]);
            report.checks.push(crate::seminormal::RelationCheck {
                name: format!("tau_{} tau_{} commute", i, j),
                ok,
            });
        }
    }
    for i in 1..n.saturating_sub(1) {
        let a = &taus[i - 1];
        let b = &taus[i];
        let ok = a.mul(&b.mul(a)) == b.mul(&a.mul(b));
        report.checks.push(crate::seminormal::RelationCheck {
            name: format!("tau braid {} {}", i, i + 1),
            ok,
        });
    }
    report
}

// ---- formal Hecke algebra elements ----

/// An element of the finite Hecke algebra in the basis {T_w}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HAlgElement {
    n: usize,
    terms: BTreeMap<Permutation, RationalFn>,
}

impl HAlgElement {
    pub fn zero(n: usize) -> Self {
        HAlgElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        let mut e = Self::zero(n);
        e.add_term(Permutation::identity(n), RationalFn::one());
        e
    }

    pub fn t_generator(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.add_term(Permutation::transposition(n, i), RationalFn::one());
        e
    }

    /// T_{i_1} ... T_{i_p}.
    pub fn from_t_word(n: usize, word: &[usize]) -> Self {
        let mut e = Self::one(n);
        for &i in word.iter().rev() {
            e = e.left_mul_t(i);
        }
        e
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, RationalFn> {
        &self.terms
    }

    pub fn coeff(&self, w: &Permutation) -> RationalFn {
        self.terms.get(w).cloned().unwrap_or_else(RationalFn::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, w: Permutation, c: RationalFn) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(w);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.neg());
        }
        out
    }

    pub fn scale(&self, s: &RationalFn) -> Self {
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul(s));
        }
        out
    }

    /// Left multiplication by T_i: T_i T_w is T_{s_i w} when that is longer,
    /// and T_{s_i w} + (q - q^-1) T_w otherwise.
    pub fn left_mul_t(&self, i: usize) -> Self {
        let qmqi = RationalFn::q_minus_qinv();
        let mut out = Self::zero(self.n);
        for (w, c) in &self.terms {
            let siw = w.left_mul_s(i);
            out.add_term(siw, c.clone());
            if w.has_left_descent(i) {
                out.add_term(w.clone(), qmqi.mul(c));
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (u, cu) in &self.terms {
            let mut part = other.scale(cu);
            for &i in u.lexmin_reduced_word().iter().rev() {
                part = part.left_mul_t(i);
            }
            out = out.add(&part);
        }
        out
    }

    /// The matrix of this element on a seminormal module.
    pub fn to_matrix(&self, m: &SeminormalModule) -> Matrix {
        let dim = m.dim();
        let mut out = Matrix::zero(dim, dim);
        for (w, c) in &self.terms {
            let word = w.lexmin_reduced_word();
            for l in 0..dim {
                let mut v = vec![RationalFn::zero(); dim];
                v[l] = c.clone();
                let v = m.apply_word(&word, &v);
                for (r, val) in v.into_iter().enumerate() {
                    if !val.is_zero() {
                        out.set(r, l, out.get(r, l).add(&val));
                    }
                }
            }
        }
        out
    }
}

// ---- tau-word specializations ----

/// Permutes a weight: (w.t)_i = t_{w^-1(i)}.
pub fn act_on_weight(w: &Permutation, t: &[BigRational]) -> Vec<BigRational> {
    let winv = w.inverse();
    (1..=t.len()).map(|i| t[(winv.apply(i as u32) - 1) as usize].clone()).collect()
}

/// The element tau_{i_1} ... tau_{i_p} specialized at the weight, expanded in
/// the basis {T_w}.  The weight lists doubled contents, t_i = q^{e_i}.
pub fn tau_word_element(
    n: usize,
    word: &[usize],
    weight: &[BigRational],
) -> Result<HAlgElement, CalibrationError> {
    assert_eq!(weight.len(), n);
    let qmqi = RationalFn::q_minus_qinv();
    let mut elt = HAlgElement::one(n);
    let mut u = weight.to_vec();
    for &i in word.iter().rev() {
        if u[i - 1] == u[i] {
            return Err(CalibrationError::UndefinedIntertwiner { i });
        }
        let xi = RationalFn::q_power(&u[i - 1]);
        let xi1 = RationalFn::q_power(&u[i]);
        let scalar = qmqi
            .mul(&xi1)
            .div(&xi1.sub(&xi))
            .expect("distinct weight components");
        elt = elt.left_mul_t(i).sub(&elt.scale(&scalar));
        u.swap(i - 1, i);
    }
    Ok(elt)
}

/// Checks tau_{w_0} = sum_w (-q)^(l(w_0) - l(w)) T_w at the weight of a
/// single row with doubled base content e0, i.e. (e0, e0+2, ..., e0+2(n-1)).
pub fn check_longest_element_identity(
    n: usize,
    doubled_base: &BigRational,
) -> Result<bool, CalibrationError> {
    assert!(n <= 5, "longest element expansion limited to n <= 5");
    let two = BigRational::from(num::bigint::BigInt::from(2));
    let weight: Vec<BigRational> = (0..n)
        .map(|k| doubled_base + &two * BigRational::from(num::bigint::BigInt::from(k as i64)))
        .collect();
    let w0 = Permutation::from_images((1..=n as u32).rev().collect());
    let lw0 = w0.length();
    let tau = tau_word_element(n, &w0.lexmin_reduced_word(), &weight)?;
    let mut expect = HAlgElement::zero(n);
    for w in Permutation::all(n) {
        let k = lw0 - w.length();
        let mut c = RationalFn::q_power_int(k as i64);
        if k % 2 == 1 {
            c = c.neg();
        }
        expect = expect.add(&HAlgElement::zero(n).tap_add(w, c));
    }
    Ok(tau == expect)
}

impl HAlgElement {
    fn tap_add(mut self, w: Permutation, c: RationalFn) -> Self {
        self.add_term(w, c);
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{bruhat_leq, Partition, PlacedSkewShape, SkewShape};
    use crate::seminormal::build_module;
    use num::bigint::BigInt;

    fn placed(l: &str, m: &str) -> PlacedSkewShape {
        let shape =
            SkewShape::new(Partition::parse(l).unwrap(), Partition::parse(m).unwrap()).unwrap();
        PlacedSkewShape::auto(shape).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from(BigInt::from(n))
    }

    fn generic_weight(n: usize) -> Vec<BigRational> {
        // Pairwise distinct with pairwise distinct differences.
        [0i64, 5, 11, 18, 26].iter().take(n).map(|&e| rat(e)).collect()
    }

    #[test]
    fn tau_matrices_have_zero_diagonal() {
        let m = build_module(&placed("2,2", ""));
        for i in 1..m.n() {
            let tau = tau_matrix(&m, i);
            for l in 0..m.dim() {
                assert!(tau.get(l, l).is_zero());
            }
        }
    }

    #[test]
    fn tau_identities_on_small_shapes() {
        for (l, mu) in [("2,1", ""), ("2,2", ""), ("3,1", ""), ("2,2", "1")] {
            let m = build_module(&placed(l, mu));
            let report = verify_tau_identities(&m);
            assert!(report.all_ok(), "{}/{} failed: {:?}", l, mu, report.failures());
        }
        let shape =
            SkewShape::new(Partition::parse("3,1").unwrap(), Partition::parse("2").unwrap())
                .unwrap();
        let p = PlacedSkewShape::new(
            shape,
            vec![rat(-1), BigRational::new(BigInt::from(1), BigInt::from(2))],
        )
        .unwrap();
        let report = verify_tau_identities(&build_module(&p));
        assert!(report.all_ok(), "failed: {:?}", report.failures());
    }

    #[test]
    fn hecke_algebra_quadratic_relation() {
        let t1 = HAlgElement::t_generator(3, 1);
        let sq = t1.mul(&t1);
        let expect = t1.scale(&RationalFn::q_minus_qinv()).add(&HAlgElement::one(3));
        assert_eq!(sq, expect);
        // Braid relation in the algebra.
        let a = HAlgElement::from_t_word(3, &[1, 2, 1]);
        let b = HAlgElement::from_t_word(3, &[2, 1, 2]);
        assert_eq!(a, b);
    }

    #[test]
    fn simple_intertwiner_expansion() {
        // At weight (0, 5): tau_1 = T_1 - (q - q^-1) q^5 / (q^5 - 1).
        let elt = tau_word_element(2, &[1], &generic_weight(2)).unwrap();
        assert!(elt.coeff(&Permutation::transposition(2, 1)).is_one());
        let expect = RationalFn::q_minus_qinv()
            .mul(&RationalFn::q_power_int(5))
            .div(&RationalFn::q_power_int(5).sub(&RationalFn::one()))
            .unwrap()
            .neg();
        assert_eq!(elt.coeff(&Permutation::identity(2)), expect);
    }

    #[test]
    fn undefined_intertwiner_is_reported() {
        let weight = vec![rat(0), rat(0)];
        assert_eq!(
            tau_word_element(2, &[1], &weight),
            Err(CalibrationError::UndefinedIntertwiner { i: 1 })
        );
    }

    #[test]
    fn triangular_with_unit_leading_coefficient() {
        for w in Permutation::all(4) {
            let word = w.lexmin_reduced_word();
            let elt = tau_word_element(4, &word, &generic_weight(4)).unwrap();
            assert!(elt.coeff(&w).is_one(), "leading coefficient of {}", w);
            for u in elt.terms().keys() {
                assert!(bruhat_leq(u, &w), "{} outside the lower set of {}", u, w);
            }
        }
    }

    #[test]
    fn reduced_word_independence() {
        let t = generic_weight(3);
        let a = tau_word_element(3, &[1, 2, 1], &t).unwrap();
        let b = tau_word_element(3, &[2, 1, 2], &t).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn length_additive_factorization() {
        // w = u v with l(w) = l(u) + l(v): tau_w|_t = tau_u|_{v.t} tau_v|_t.
        let t = generic_weight(3);
        let u = Permutation::from_word(3, &[1]);
        let v = Permutation::from_word(3, &[2, 1]);
        let w = u.compose(&v);
        assert_eq!(w.length(), u.length() + v.length());
        let whole = tau_word_element(3, &w.lexmin_reduced_word(), &t).unwrap();
        let vt = act_on_weight(&v, &t);
        let left = tau_word_element(3, &u.lexmin_reduced_word(), &vt).unwrap();
        let right = tau_word_element(3, &v.lexmin_reduced_word(), &t).unwrap();
        assert_eq!(whole, left.mul(&right));
    }

    #[test]
    fn longest_element_expansion() {
        for n in 2..=3 {
            assert!(check_longest_element_identity(n, &rat(0)).unwrap());
            assert!(check_longest_element_identity(n, &rat(7)).unwrap());
        }
    }

    #[test]
    fn tau_word_matches_module_action() {
        // On a module, the algebra element of tau_{s_i} at the weight of L
        // reproduces the tau_i matrix column at L.
        let m = build_module(&placed("2,1", ""));
        let i = 2;
        let tau = tau_matrix(&m, i);
        for l in 0..m.dim() {
            let elt = tau_word_element(m.n(), &[i], m.weight(l)).unwrap();
            let mat = elt.to_matrix(&m);
            for r in 0..m.dim() {
                assert_eq!(mat.get(r, l), tau.get(r, l), "entry ({}, {})", r, l);
            }
        }
    }
}
