//! Seminormal modules: for each placed skew shape, the module with basis
//! indexed by standard tableaux on which the x_i act diagonally through the
//! contents and each T_i acts on at most two basis vectors.
//!
//! Matrices act on column vectors; the column index is the input tableau.
//! Tableaux are sorted by their word against the placed box order, and the
//! weight of a tableau is the vector of doubled contents (2 c(L(1)), ...,
//! 2 c(L(n))), so that x_i scales v_L by q^(2 c(L(i))).

use crate::combinatorics::{
    enumerate_standard_tableaux, PlacedSkewShape, StandardTableau,
};
use crate::qfield::{rat_pow, Matrix, QError, RationalFn, RationalMatrix};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};
use std::collections::BTreeMap;

/// A seminormal module over the affine Hecke algebra.
#[derive(Clone, Debug)]
pub struct SeminormalModule {
    placed: PlacedSkewShape,
    tableaux: Vec<StandardTableau>,
    /// Doubled contents per tableau: entry j-1 is 2 c(L(j)).
    weights: Vec<Vec<BigRational>>,
    /// Index of s_i L per generator and tableau, None when nonstandard.
    s_action: Vec<Vec<Option<usize>>>,
    t_mats: Vec<Matrix>,
    x_diags: Vec<Vec<RationalFn>>,
}

impl SeminormalModule {
    pub fn placed(&self) -> &PlacedSkewShape {
        &self.placed
    }

    pub fn n(&self) -> usize {
        self.placed.n_boxes()
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[StandardTableau] {
        &self.tableaux
    }

    /// Doubled contents of tableau index l.
    pub fn weight(&self, l: usize) -> &[BigRational] {
        &self.weights[l]
    }

    /// Least common denominator of the doubled contents.  Every matrix entry
    /// and x-weight of the module lives at a scale dividing this.
    pub fn module_scale(&self) -> u32 {
        let lcm = self
            .weights
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, e| acc.lcm(e.denom()));
        u32::try_from(&lcm).expect("small denominators")
    }

    pub fn t_matrix(&self, i: usize) -> &Matrix {
        &self.t_mats[i - 1]
    }

    /// Diagonal of the x_i action.
    pub fn x_diagonal(&self, i: usize) -> &[RationalFn] {
        &self.x_diags[i - 1]
    }

    pub fn x_matrix(&self, i: usize) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zero(d, d);
        for l in 0..d {
            m.set(l, l, self.x_diags[i - 1][l].clone());
        }
        m
    }

    /// Index of s_i applied to tableau l, when standard.
    pub fn s_index(&self, i: usize, l: usize) -> Option<usize> {
        self.s_action[i - 1][l]
    }

    pub fn index_of(&self, t: &StandardTableau) -> Option<usize> {
        self.tableaux.iter().position(|u| u == t)
    }

    /// Applies T_i to a coefficient vector (two nonzero entries per column).
    pub fn apply_t(&self, i: usize, v: &[RationalFn]) -> Vec<RationalFn> {
        let t = &self.t_mats[i - 1];
        let mut out = vec![RationalFn::zero(); self.dim()];
        for (l, coeff) in v.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let d = t.get(l, l).mul(coeff);
            out[l] = out[l].add(&d);
            if let Some(p) = self.s_action[i - 1][l] {
                let o = t.get(p, l).mul(coeff);
                out[p] = out[p].add(&o);
            }
        }
        out
    }

    /// Applies T_{i_1} ... T_{i_p} (rightmost letter first).
    pub fn apply_word(&self, word: &[usize], v: &[RationalFn]) -> Vec<RationalFn> {
        let mut v = v.to_vec();
        for &i in word.iter().rev() {
            v = self.apply_t(i, &v);
        }
        v
    }
}

/// Builds the seminormal module of a placed skew shape.
pub fn build_module(placed: &PlacedSkewShape) -> SeminormalModule {
    let n = placed.n_boxes();
    let order = placed.cells().to_vec();
    let mut tableaux = enumerate_standard_tableaux(placed.shape());
    tableaux.sort_by_key(|t| t.word(&order).images().to_vec());
    let dim = tableaux.len();

    let two = BigRational::from(BigInt::from(2));
    let weights: Vec<Vec<BigRational>> = tableaux
        .iter()
        .map(|t| {
            (1..=n as u32)
                .map(|j| &two * placed.content_of(t.cell_of(j)))
                .collect()
        })
        .collect();

    let word_index: BTreeMap<Vec<u32>, usize> = tableaux
        .iter()
        .enumerate()
        .map(|(idx, t)| (t.word(&order).images().to_vec(), idx))
        .collect();

    let mut s_action = Vec::new();
    let mut t_mats = Vec::new();
    for i in 1..n {
        let mut col_partner = vec![None; dim];
        let mut m = Matrix::zero(dim, dim);
        for (l, t) in tableaux.iter().enumerate() {
            let ei = &weights[l][i - 1];
            let ei1 = &weights[l][i];
            // 1 - q^(e_i - e_{i+1}) is nonzero on valid placements.
            let dia = RationalFn::q_minus_qinv()
                .div(&RationalFn::one().sub(&RationalFn::q_power(&(ei - ei1))))
                .expect("distinct consecutive contents");
            m.set(l, l, dia.clone());
            let swapped = t.swap_values(i as u32);
            if swapped.is_standard() {
                let p = word_index[&swapped.word(&order).images().to_vec()];
                col_partner[l] = Some(p);
                let off = RationalFn::q_power_int(-1).add(&dia);
                m.set(p, l, off);
            }
        }
        s_action.push(col_partner);
        t_mats.push(m);
    }

    let x_diags: Vec<Vec<RationalFn>> = (0..n)
        .map(|j| (0..dim).map(|l| RationalFn::q_power(&weights[l][j])).collect())
        .collect();

    SeminormalModule { placed: placed.clone(), tableaux, weights, s_action, t_mats, x_diags }
}

// ---- defining relations ----

#[derive(Clone, Debug)]
pub struct RelationCheck {
    pub name: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    fn push(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push(RelationCheck { name: name.into(), ok });
    }

    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.ok).map(|c| c.name.as_str()).collect()
    }
}

/// The default exponent sample for the commutation-with-monomials check:
/// all gamma in {-1,0,1,2}^n.
pub fn default_gamma_sample(n: usize) -> Vec<Vec<i64>> {
    let vals = [-1i64, 0, 1, 2];
    let mut out = Vec::with_capacity(4usize.pow(n as u32));
    let mut idx = vec![0usize; n];
    loop {
        out.push(idx.iter().map(|&k| vals[k]).collect());
        let mut j = 0;
        loop {
            if j == n {
                return out;
            }
            idx[j] += 1;
            if idx[j] < 4 {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

/// Verifies every defining relation of the affine Hecke algebra on the
/// module: quadratic, braid, commutations between T's and monomials in the
/// x's (on the gamma sample), and the relations involving the rotation
/// element omega.
pub fn verify_defining_relations(
    m: &SeminormalModule,
    gamma_sample: Option<&[Vec<i64>]>,
) -> RelationReport {
    let n = m.n();
    let dim = m.dim();
    let mut report = RelationReport::default();
    let qmqi = RationalFn::q_minus_qinv();

    // T_i^2 = (q - q^-1) T_i + 1.
    for i in 1..n {
        let t = m.t_matrix(i);
        let lhs = t.mul(t);
        let rhs = t.scalar_mul(&qmqi).add(&Matrix::identity(dim));
        report.push(format!("quadratic T_{}", i), lhs == rhs);
    }

    // Distant braid: T_i T_j = T_j T_i for |i - j| > 1.
    for i in 1..n {
        for j in (i + 2)..n {
            let a = m.t_matrix(i);
            let b = m.t_matrix(j);
            report.push(format!("commuting T_{} T_{}", i, j), a.mul(b) == b.mul(a));
        }
    }

    // Adjacent braid: T_i T_{i+1} T_i = T_{i+1} T_i T_{i+1}.
    for i in 1..n.saturating_sub(1) {
        let a = m.t_matrix(i);
        let b = m.t_matrix(i + 1);
        report.push(
            format!("braid T_{} T_{}", i, i + 1),
            a.mul(&b.mul(a)) == b.mul(&a.mul(b)),
        );
    }

    // x_i x_j = x_j x_i (diagonal, but checked).
    let mut xs_commute = true;
    for i in 1..=n {
        for j in (i + 1)..=n {
            if m.x_matrix(i).mul(&m.x_matrix(j)) != m.x_matrix(j).mul(&m.x_matrix(i)) {
                xs_commute = false;
            }
        }
    }
    report.push("x's commute", xs_commute);

    // x_{i+1} = T_i x_i T_i.
    for i in 1..n {
        let t = m.t_matrix(i);
        report.push(
            format!("x_{} = T_{} x_{} T_{}", i + 1, i, i, i),
            m.x_matrix(i + 1) == t.mul(&m.x_matrix(i).mul(t)),
        );
    }

    // x_j T_i = T_i x_j for j outside {i, i+1}.
    for i in 1..n {
        for j in 1..=n {
            if j == i || j == i + 1 {
                continue;
            }
            let t = m.t_matrix(i);
            if m.x_matrix(j).mul(t) != t.mul(&m.x_matrix(j)) {
                report.push(format!("x_{} T_{} commutation", j, i), false);
            }
        }
    }
    report.push("x T distant commutation", true);

    // Monomial commutation: for x^gamma = prod x_j^(gamma_j), entrywise
    //   q^<gamma, e_P> T_PL = T_PL q^<s_i gamma, e_L>
    //     + delta_PL (q - q^-1) (q^<gamma, e_L> - q^<s_i gamma, e_L>)
    //       q^(e_L(i+1)) / (q^(e_L(i+1)) - q^(e_L(i))).
    let default_sample;
    let sample: &[Vec<i64>] = match gamma_sample {
        Some(s) => s,
        None => {
            default_sample = default_gamma_sample(n);
            &default_sample
        }
    };
    let mut monomial_ok = true;
    'gamma: for gamma in sample {
        let dots: Vec<BigRational> = (0..dim)
            .map(|l| {
                m.weight(l)
                    .iter()
                    .zip(gamma.iter())
                    .map(|(e, &g)| e * BigRational::from(BigInt::from(g)))
                    .sum()
            })
            .collect();
        for i in 1..n {
            for l in 0..dim {
                let e = m.weight(l);
                let shift = BigRational::from(BigInt::from(gamma[i - 1] - gamma[i]))
                    * (&e[i] - &e[i - 1]);
                let dot_sigma_l = &dots[l] + &shift;
                let q_dot_sigma_l = RationalFn::q_power(&dot_sigma_l);
                let t = m.t_matrix(i);
                // Diagonal entry.
                let corr = qmqi
                    .mul(&RationalFn::q_power(&dots[l]).sub(&q_dot_sigma_l))
                    .mul(&RationalFn::q_power(&e[i]))
                    .div(&RationalFn::q_power(&e[i]).sub(&RationalFn::q_power(&e[i - 1])))
                    .expect("distinct consecutive contents");
                let lhs = RationalFn::q_power(&dots[l]).mul(t.get(l, l));
                let rhs = t.get(l, l).mul(&q_dot_sigma_l).add(&corr);
                if lhs != rhs {
                    monomial_ok = false;
                    break 'gamma;
                }
                // Off-diagonal entry.
                if let Some(p) = m.s_index(i, l) {
                    let lhs = RationalFn::q_power(&dots[p]).mul(t.get(p, l));
                    let rhs = t.get(p, l).mul(&q_dot_sigma_l);
                    if lhs != rhs {
                        monomial_ok = false;
                        break 'gamma;
                    }
                }
            }
        }
    }
    report.push(format!("monomial commutation ({} exponent vectors)", sample.len()), monomial_ok);

    // Rotation element omega = x_n T_{n-1}^-1 ... T_1^-1.
    if n == 1 {
        report.push("omega = x_1", true);
        return report;
    }
    let tinv: Vec<Matrix> = (1..n)
        .map(|i| m.t_matrix(i).sub(&Matrix::identity(dim).scalar_mul(&qmqi)))
        .collect();
    for i in 1..n {
        report.push(
            format!("T_{} inverse", i),
            m.t_matrix(i).mul(&tinv[i - 1]) == Matrix::identity(dim),
        );
    }
    let mut omega = m.x_matrix(n);
    for i in (1..n).rev() {
        omega = omega.mul(&tinv[i - 1]);
    }
    let omega_inv = omega.inverse().expect("omega invertible");

    // Conjugation shifts the finite generators cyclically; T_0 is defined by
    // the i = 1 case and must close the cycle.
    let t0 = omega.mul(&m.t_matrix(1).mul(&omega_inv));
    let mut cycle_ok = true;
    for i in 2..n {
        if omega.mul(&m.t_matrix(i).mul(&omega_inv)) != *m.t_matrix(i - 1) {
            cycle_ok = false;
        }
    }
    if omega.mul(&t0.mul(&omega_inv)) != *m.t_matrix(n - 1) {
        cycle_ok = false;
    }
    report.push("omega conjugation cycle", cycle_ok);

    // x_n x_1^-1 = T_0 T_{n-1} ... T_2 T_1 T_2 ... T_{n-1}.
    let mut rhs = t0.clone();
    for i in (2..n).rev() {
        rhs = rhs.mul(m.t_matrix(i));
    }
    rhs = rhs.mul(m.t_matrix(1));
    for i in 2..n {
        rhs = rhs.mul(m.t_matrix(i));
    }
    let x1_inv = m.x_matrix(1).inverse().expect("x invertible");
    report.push("x_n x_1^-1 relation", m.x_matrix(n).mul(&x1_inv) == rhs);

    // omega^n = x_1 ... x_n.
    let mut pow = Matrix::identity(dim);
    for _ in 0..n {
        pow = pow.mul(&omega);
    }
    let mut xprod = Matrix::identity(dim);
    for j in 1..=n {
        xprod = xprod.mul(&m.x_matrix(j));
    }
    report.push("omega^n = x_1 ... x_n", pow == xprod);

    report
}

// ---- commutant at a specialization point ----

/// Evaluates f at the point q = z0^scale; f's own scale must divide `scale`.
pub fn evaluate_at_q(f: &RationalFn, z0: &BigRational, scale: u32) -> Result<BigRational, QError> {
    let d = f.scale();
    debug_assert!(scale % d == 0, "entry scale {} outside module scale {}", d, scale);
    f.evaluate_at(&rat_pow(z0, (scale / d) as i64))
}

/// Evaluates every entry of a matrix at the point q = z0^scale.
pub fn specialize_matrix(
    mat: &Matrix,
    z0: &BigRational,
    scale: u32,
) -> Result<RationalMatrix, QError> {
    let mut out = RationalMatrix::zero(mat.rows, mat.cols);
    for r in 0..mat.rows {
        for c in 0..mat.cols {
            out.set(r, c, evaluate_at_q(mat.get(r, c), z0, scale)?);
        }
    }
    Ok(out)
}

/// Dimension of the joint commutant of specialized {x_i} and {T_i} actions.
///
/// x-weight vectors cut the unknown matrix down to entries joining equal
/// weights; the T equations then determine the rank.
pub fn commutant_dimension_from_parts(
    weights: &[Vec<BigRational>],
    t_specialized: &[RationalMatrix],
    dim: usize,
) -> usize {
    let mut unknowns: Vec<(usize, usize)> = Vec::new();
    let mut slot: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for p in 0..dim {
        for l in 0..dim {
            if weights[p] == weights[l] {
                slot.insert((p, l), unknowns.len());
                unknowns.push((p, l));
            }
        }
    }
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for t in t_specialized {
        for p in 0..dim {
            for l in 0..dim {
                let mut row = vec![BigRational::zero(); unknowns.len()];
                let mut nonzero = false;
                // (XT - TX)_{pl} = sum_k X_pk T_kl - T_pk X_kl.
                for k in 0..dim {
                    if let Some(&s) = slot.get(&(p, k)) {
                        let v = t.get(k, l).clone();
                        if !v.is_zero() {
                            row[s] = &row[s] + &v;
                            nonzero = true;
                        }
                    }
                    if let Some(&s) = slot.get(&(k, l)) {
                        let v = t.get(p, k).clone();
                        if !v.is_zero() {
                            row[s] = &row[s] - &v;
                            nonzero = true;
                        }
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    let mut eq = RationalMatrix::zero(rows.len(), unknowns.len());
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            eq.set(r, c, v.clone());
        }
    }
    unknowns.len() - eq.rank()
}

/// Commutant dimension of a module with all entries evaluated at q = z0^scale,
/// where scale is the module scale.
pub fn commutant_dimension(m: &SeminormalModule, z0: &BigRational) -> Result<usize, QError> {
    let dim = m.dim();
    let scale = m.module_scale();
    let weights: Vec<Vec<BigRational>> = (0..dim)
        .map(|l| {
            (1..=m.n())
                .map(|i| evaluate_at_q(&m.x_diagonal(i)[l], z0, scale))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let ts: Vec<RationalMatrix> = (1..m.n())
        .map(|i| specialize_matrix(m.t_matrix(i), z0, scale))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(commutant_dimension_from_parts(&weights, &ts, dim))
}

/// The set of x-weight vectors of the module, evaluated at q = z0^scale.
/// Pass a common multiple of the module scales when comparing across modules.
pub fn specialized_weight_set(
    m: &SeminormalModule,
    z0: &BigRational,
    scale: u32,
) -> Result<std::collections::BTreeSet<Vec<BigRational>>, QError> {
    (0..m.dim())
        .map(|l| {
            (1..=m.n())
                .map(|i| evaluate_at_q(&m.x_diagonal(i)[l], z0, scale))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect()
}

/// Checks that each specialized T_i satisfies (M - q)(M + q^-1) = 0 with
/// complementary ranks, where q = z0^scale.
pub fn spectral_check(m: &SeminormalModule, z0: &BigRational) -> Result<bool, QError> {
    let dim = m.dim();
    let scale = m.module_scale();
    let qv = rat_pow(z0, scale as i64);
    let qinv = BigRational::one() / &qv;
    for i in 1..m.n() {
        let t = specialize_matrix(m.t_matrix(i), z0, scale)?;
        let mut a = t.clone();
        let mut b = t.clone();
        for d in 0..dim {
            a.set(d, d, a.get(d, d) - &qv);
            b.set(d, d, b.get(d, d) + &qinv);
        }
        if !a.mul(&b).is_zero() || a.rank() + b.rank() != dim {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{Partition, SkewShape};

    fn placed(l: &str, m: &str) -> PlacedSkewShape {
        let shape =
            SkewShape::new(Partition::parse(l).unwrap(), Partition::parse(m).unwrap()).unwrap();
        PlacedSkewShape::auto(shape).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// (q - q^-1) / (1 - q^(2d)).
    fn dia(d: i64) -> RationalFn {
        RationalFn::q_minus_qinv()
            .div(&RationalFn::one().sub(&RationalFn::q_power_int(2 * d)))
            .unwrap()
    }

    /// q^-1 + dia(d).
    fn off(d: i64) -> RationalFn {
        RationalFn::q_power_int(-1).add(&dia(d))
    }

    fn qq() -> RationalFn {
        RationalFn::q_power_int(1)
    }

    fn mqi() -> RationalFn {
        RationalFn::q_power_int(-1).neg()
    }

    /// Locates the basis index of the tableau sending cell -> value.
    fn locate(m: &SeminormalModule, entries: &[((usize, usize), u32)]) -> usize {
        let t = StandardTableau::new(
            m.placed().shape().clone(),
            entries.iter().copied().collect(),
        );
        m.index_of(&t).expect("tableau in basis")
    }

    /// Reads the matrix of T_i against a reordered basis.
    fn permuted(m: &Matrix, order: &[usize]) -> Matrix {
        let k = order.len();
        let mut out = Matrix::zero(k, k);
        for r in 0..k {
            for c in 0..k {
                out.set(r, c, m.get(order[r], order[c]).clone());
            }
        }
        out
    }

    #[test]
    fn single_row_acts_by_q() {
        let m = build_module(&placed("3", ""));
        assert_eq!(m.dim(), 1);
        for i in 1..3 {
            assert_eq!(m.t_matrix(i).get(0, 0), &qq());
        }
    }

    #[test]
    fn two_row_hook_matrices() {
        let m = build_module(&placed("2,1", ""));
        assert_eq!(m.dim(), 2);
        let row = locate(&m, &[((1, 1), 1), ((1, 2), 2), ((2, 1), 3)]);
        let col = locate(&m, &[((1, 1), 1), ((1, 2), 3), ((2, 1), 2)]);
        let order = [row, col];

        let t1 = permuted(m.t_matrix(1), &order);
        let mut expect = Matrix::zero(2, 2);
        expect.set(0, 0, qq());
        expect.set(1, 1, mqi());
        assert_eq!(t1, expect);

        let t2 = permuted(m.t_matrix(2), &order);
        let mut expect = Matrix::zero(2, 2);
        expect.set(0, 0, dia(2));
        expect.set(1, 1, dia(-2));
        expect.set(0, 1, off(-2));
        expect.set(1, 0, off(2));
        assert_eq!(t2, expect);
    }

    #[test]
    fn two_component_hook_matrices() {
        // Bottom domino with contents -1, 0 and a detached box with content 2.
        let m = build_module(&placed("3,2", "2"));
        assert_eq!(m.dim(), 3);
        let v1 = locate(&m, &[((2, 1), 1), ((2, 2), 2), ((1, 3), 3)]);
        let v2 = locate(&m, &[((2, 1), 1), ((2, 2), 3), ((1, 3), 2)]);
        let v3 = locate(&m, &[((2, 1), 2), ((2, 2), 3), ((1, 3), 1)]);
        assert_eq!([v1, v2, v3], [0, 1, 2]);

        let c1 = -1i64;
        let c2 = 0i64;
        let c3 = 2i64;
        let t1 = m.t_matrix(1);
        let mut expect = Matrix::zero(3, 3);
        expect.set(0, 0, qq());
        expect.set(1, 1, dia(c1 - c3));
        expect.set(1, 2, off(c3 - c1));
        expect.set(2, 1, off(c1 - c3));
        expect.set(2, 2, dia(c3 - c1));
        assert_eq!(t1, &expect);

        let t2 = m.t_matrix(2);
        let mut expect = Matrix::zero(3, 3);
        expect.set(0, 0, dia(c2 - c3));
        expect.set(0, 1, off(c3 - c2));
        expect.set(1, 0, off(c2 - c3));
        expect.set(1, 1, dia(c3 - c2));
        expect.set(2, 2, qq());
        assert_eq!(t2, &expect);
    }

    #[test]
    fn three_component_matrices() {
        // Three detached boxes with contents -2, 0, 2.
        let m = build_module(&placed("3,2,1", "2,1"));
        assert_eq!(m.dim(), 6);
        let bot = (3, 1);
        let mid = (2, 2);
        let top = (1, 3);
        let v = [
            locate(&m, &[(bot, 1), (mid, 2), (top, 3)]),
            locate(&m, &[(bot, 2), (mid, 1), (top, 3)]),
            locate(&m, &[(bot, 1), (mid, 3), (top, 2)]),
            locate(&m, &[(bot, 2), (mid, 3), (top, 1)]),
            locate(&m, &[(bot, 3), (mid, 1), (top, 2)]),
            locate(&m, &[(bot, 3), (mid, 2), (top, 1)]),
        ];
        let (d12, d13, d23) = (-2i64, -4i64, -2i64);

        let block = |m: &mut Matrix, a: usize, b: usize, d_ab: i64| {
            m.set(a, a, dia(d_ab));
            m.set(b, b, dia(-d_ab));
            m.set(a, b, off(-d_ab));
            m.set(b, a, off(d_ab));
        };

        let t1 = permuted(m.t_matrix(1), &v);
        let mut expect = Matrix::zero(6, 6);
        block(&mut expect, 0, 1, d12);
        block(&mut expect, 2, 3, d13);
        block(&mut expect, 4, 5, d23);
        assert_eq!(t1, expect);

        let t2 = permuted(m.t_matrix(2), &v);
        let mut expect = Matrix::zero(6, 6);
        block(&mut expect, 0, 2, d23);
        block(&mut expect, 1, 4, d13);
        block(&mut expect, 3, 5, d12);
        assert_eq!(t2, expect);
    }

    #[test]
    fn relations_hold_on_small_shapes() {
        for (l, mu) in [("2,1", ""), ("2,2", ""), ("3,1", ""), ("2,2", "1"), ("1,1,1", "")] {
            let m = build_module(&placed(l, mu));
            let report = verify_defining_relations(&m, None);
            assert!(report.all_ok(), "{}/{} failed: {:?}", l, mu, report.failures());
        }
    }

    #[test]
    fn relations_hold_on_fractional_pages() {
        let shape =
            SkewShape::new(Partition::parse("3,1").unwrap(), Partition::parse("2").unwrap())
                .unwrap();
        let p = PlacedSkewShape::new(shape, vec![rat(-1, 1), rat(1, 2)]).unwrap();
        let m = build_module(&p);
        assert_eq!(m.dim(), 2);
        let report = verify_defining_relations(&m, None);
        assert!(report.all_ok(), "failed: {:?}", report.failures());

        let shape =
            SkewShape::new(Partition::parse("3,2,1").unwrap(), Partition::parse("2,1").unwrap())
                .unwrap();
        let p = PlacedSkewShape::new(shape, vec![rat(-4, 1), rat(0, 1), rat(4, 1)]).unwrap();
        let report = verify_defining_relations(&build_module(&p), None);
        assert!(report.all_ok(), "failed: {:?}", report.failures());
    }

    #[test]
    fn single_box_omega() {
        let m = build_module(&placed("1", ""));
        assert_eq!(m.dim(), 1);
        let report = verify_defining_relations(&m, None);
        assert!(report.all_ok());
    }

    #[test]
    fn commutant_is_one_dimensional() {
        let z0 = rat(2, 1);
        for (l, mu) in [("2,1", ""), ("2,2", ""), ("3,1", "")] {
            let m = build_module(&placed(l, mu));
            assert_eq!(commutant_dimension(&m, &z0).unwrap(), 1);
        }
    }

    #[test]
    fn doubled_module_has_four_dimensional_commutant() {
        let z0 = rat(2, 1);
        let m = build_module(&placed("2,1", ""));
        let dim = m.dim();
        let weights: Vec<Vec<BigRational>> = (0..2 * dim)
            .map(|l| {
                (1..=m.n())
                    .map(|i| evaluate_at_q(&m.x_diagonal(i)[l % dim], &z0, 1).unwrap())
                    .collect()
            })
            .collect();
        let ts: Vec<RationalMatrix> = (1..m.n())
            .map(|i| {
                let t = specialize_matrix(m.t_matrix(i), &z0, 1).unwrap();
                let mut big = RationalMatrix::zero(2 * dim, 2 * dim);
                for r in 0..dim {
                    for c in 0..dim {
                        big.set(r, c, t.get(r, c).clone());
                        big.set(r + dim, c + dim, t.get(r, c).clone());
                    }
                }
                big
            })
            .collect();
        assert_eq!(commutant_dimension_from_parts(&weights, &ts, 2 * dim), 4);
    }

    #[test]
    fn specialized_generators_have_split_spectrum() {
        let z0 = rat(2, 1);
        let m = build_module(&placed("2,2", ""));
        assert!(spectral_check(&m, &z0).unwrap());
        let shape =
            SkewShape::new(Partition::parse("3,1").unwrap(), Partition::parse("2").unwrap())
                .unwrap();
        let p = PlacedSkewShape::new(shape, vec![rat(-1, 1), rat(1, 2)]).unwrap();
        let m = build_module(&p);
        assert!(spectral_check(&m, &z0).unwrap());
    }
}
