//! Characters of the finite Hecke subalgebra acting on calibrated modules.
//!
//! The traces of the block-cycle elements T_{gamma_beta}, one per composition
//! beta of n, determine a module's restriction to the subalgebra generated by
//! T_1, ..., T_{n-1}.  Those traces obey a borderstrip chain expansion whose
//! weights do not depend on the content function, so restriction
//! multiplicities can be solved from character data alone; they coincide with
//! Littlewood-Richardson coefficients, computed here independently by the
//! lattice-word counting rule.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, ToPrimitive};
use thiserror::Error;

use crate::combinatorics::{diag, Cell, Partition, PlacedSkewShape, SkewShape};
use crate::qfield::{LaurentPoly, Matrix, QError, RationalFn};
use crate::seminormal::{build_module, SeminormalModule};

#[derive(Debug, Clone, Error)]
pub enum CharacterError {
    #[error("character system for n = {n} has no invertible square subsystem")]
    SingularSystem { n: usize },
    #[error("solved multiplicity of {nu} is not a nonnegative integer: {value}")]
    BadMultiplicity { nu: String, value: String },
    #[error("character equation fails at block sizes {beta:?}")]
    Inconsistent { beta: Vec<usize> },
    #[error("solved multiplicity of {nu} is {solved}, lattice-word rule gives {oracle}")]
    OracleMismatch { nu: String, solved: u64, oracle: u64 },
    #[error(transparent)]
    Algebra(#[from] QError),
}

/// All compositions of n in lexicographic order (2^(n-1) of them for n >= 1).
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for rest in compositions(n - first) {
            let mut c = vec![first];
            c.extend(rest);
            out.push(c);
        }
    }
    out
}

/// Reduced word of gamma_beta: the block of size b at offset o is the cycle
/// (o+1, o+2, ..., o+b), contributing the letters o+1, ..., o+b-1.
pub fn gamma_word(beta: &[usize]) -> Vec<usize> {
    let mut word = Vec::new();
    let mut offset = 0usize;
    for &b in beta {
        for j in 1..b {
            word.push(offset + j);
        }
        offset += b;
    }
    word
}

/// Trace of T_{i_1} ... T_{i_p} on the module, for any generator word.
pub fn trace_of_t_word(m: &SeminormalModule, word: &[usize]) -> RationalFn {
    let dim = m.dim();
    let mut total = RationalFn::zero();
    for l in 0..dim {
        let mut e = vec![RationalFn::zero(); dim];
        e[l] = RationalFn::one();
        let v = m.apply_word(word, &e);
        total = total.add(&v[l]);
    }
    total
}

/// Trace of T_{gamma_beta} on the module.
pub fn trace_on_gamma(m: &SeminormalModule, beta: &[usize]) -> RationalFn {
    assert_eq!(beta.iter().sum::<usize>(), m.n());
    trace_of_t_word(m, &gamma_word(beta))
}

/// Borderstrip weight of a skew shape: zero unless every diagonal holds at
/// most one box, else (q - q^-1)^(cc - 1) times the product over connected
/// components of q^(cols - 1) (-q^-1)^(rows - 1).
pub fn delta_weight(shape: &SkewShape) -> LaurentPoly {
    let cells = shape.cells();
    if cells.is_empty() {
        return LaurentPoly::one();
    }
    let mut seen = BTreeSet::new();
    for &cell in &cells {
        if !seen.insert(diag(cell)) {
            return LaurentPoly::zero();
        }
    }
    let comps = shape.components();
    let q_minus_qinv = LaurentPoly::monomial(1, BigInt::from(1))
        .add(&LaurentPoly::monomial(-1, BigInt::from(-1)));
    let mut out = q_minus_qinv.pow((comps.len() - 1) as u32);
    for comp in &comps {
        let rows = comp.iter().map(|c| c.0).collect::<BTreeSet<_>>().len() as i64;
        let cols = comp.iter().map(|c| c.1).collect::<BTreeSet<_>>().len() as i64;
        let sign = if (rows - 1) % 2 == 1 { -1 } else { 1 };
        out = out.mul(&LaurentPoly::monomial((cols - 1) - (rows - 1), BigInt::from(sign)));
    }
    out
}

/// Partitions kappa with inner <= kappa <= outer and |kappa| = |inner| + add.
pub(crate) fn grown_partitions(inner: &Partition, outer: &Partition, add: usize) -> Vec<Partition> {
    fn go(
        row: usize,
        remaining: usize,
        prev: u32,
        inner: &Partition,
        outer: &Partition,
        acc: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == outer.len() {
            if remaining == 0 {
                out.push(Partition::new(acc.clone()).expect("weakly decreasing by construction"));
            }
            return;
        }
        let lo = inner.part(row);
        let hi = outer.part(row).min(prev);
        for v in lo..=hi {
            let grow = (v - lo) as usize;
            if grow > remaining {
                break;
            }
            acc.push(v);
            go(row + 1, remaining - grow, v, inner, outer, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    go(0, add, u32::MAX, inner, outer, &mut acc, &mut out);
    out
}

/// Character value as a borderstrip chain sum: over all partition chains from
/// mu up to lambda with step sizes given by beta, the product of the step
/// weights.  Depends only on the underlying skew shape, not the contents.
pub fn borderstrip_character(placed: &PlacedSkewShape, beta: &[usize]) -> LaurentPoly {
    fn go(inner: &Partition, outer: &Partition, beta: &[usize]) -> LaurentPoly {
        if beta.is_empty() {
            // step sizes force inner == outer here
            return LaurentPoly::one();
        }
        let mut total = LaurentPoly::zero();
        for kappa in grown_partitions(inner, outer, beta[0]) {
            let step = SkewShape::new(kappa.clone(), inner.clone()).expect("nested by construction");
            let d = delta_weight(&step);
            if d.is_zero() {
                continue;
            }
            total = total.add(&d.mul(&go(&kappa, outer, &beta[1..])));
        }
        total
    }
    let shape = placed.shape();
    assert_eq!(beta.iter().sum::<usize>(), shape.n_boxes());
    go(shape.mu(), shape.lambda(), beta)
}

/// Cells in reverse reading order: rows top to bottom, right to left in a row.
fn reverse_reading_cells(shape: &SkewShape) -> Vec<Cell> {
    let mut cells = shape.cells();
    cells.sort_by_key(|&(r, c)| (r, Reverse(c)));
    cells
}

/// Backtracking enumeration of semistandard fillings along the reverse
/// reading order, with optional content bound and lattice-word pruning.
/// Calls the sink with the content vector of each completed filling.
fn fill_semistandard(
    shape: &SkewShape,
    order: &[Cell],
    idx: usize,
    max_value: u32,
    content_bound: Option<&[u32]>,
    lattice: bool,
    counts: &mut [u32],
    values: &mut BTreeMap<Cell, u32>,
    sink: &mut dyn FnMut(&[u32]),
) {
    if idx == order.len() {
        sink(counts);
        return;
    }
    let (r, c) = order[idx];
    let mut hi = max_value;
    if shape.contains_cell((r, c + 1)) {
        hi = hi.min(values[&(r, c + 1)]);
    }
    let lo = if r > 1 && shape.contains_cell((r - 1, c)) {
        values[&(r - 1, c)] + 1
    } else {
        1
    };
    for v in lo..=hi {
        let vi = (v - 1) as usize;
        if let Some(bound) = content_bound {
            if vi >= bound.len() || counts[vi] >= bound[vi] {
                continue;
            }
        }
        if lattice && v > 1 && counts[vi] >= counts[vi - 1] {
            continue;
        }
        counts[vi] += 1;
        values.insert((r, c), v);
        fill_semistandard(
            shape,
            order,
            idx + 1,
            max_value,
            content_bound,
            lattice,
            counts,
            values,
            sink,
        );
        values.remove(&(r, c));
        counts[vi] -= 1;
    }
}

/// Littlewood-Richardson coefficient by the lattice-word rule: the number of
/// semistandard fillings of lambda/mu with content nu whose reverse reading
/// word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lambda.contains(mu) || lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("containment checked");
    let order = reverse_reading_cells(&shape);
    let bound: Vec<u32> = nu.parts().to_vec();
    let mut counts = vec![0u32; nu.len().max(1)];
    let mut values = BTreeMap::new();
    let mut total = 0u64;
    fill_semistandard(
        &shape,
        &order,
        0,
        nu.len() as u32,
        Some(&bound),
        true,
        &mut counts,
        &mut values,
        &mut |_| total += 1,
    );
    total
}

/// Block-cycle character values of the irreducible modules of the finite
/// subalgebra, with a precomputed solver that recovers multiplicities from a
/// trace vector.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    betas: Vec<Vec<usize>>,
    partitions: Vec<Partition>,
    values: Vec<Vec<RationalFn>>,
    selected: Vec<usize>,
    solver: Matrix,
}

impl CharacterTable {
    /// Builds the table from the straight-shape modules with default contents.
    pub fn new(n: usize) -> Result<Self, CharacterError> {
        assert!(n >= 1);
        let betas = compositions(n);
        let partitions = Partition::all_of(n);
        let npart = partitions.len();
        let mut values = Vec::with_capacity(npart);
        for nu in &partitions {
            let placed = PlacedSkewShape::auto(SkewShape::straight(nu.clone()))
                .expect("straight shapes always place");
            let m = build_module(&placed);
            values.push(betas.iter().map(|b| trace_on_gamma(&m, b)).collect::<Vec<_>>());
        }
        // greedy echelon scan: keep the first compositions whose rows are
        // independent, until the system is square
        let mut selected = Vec::new();
        let mut reduced: Vec<Vec<RationalFn>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for bidx in 0..betas.len() {
            if selected.len() == npart {
                break;
            }
            let mut row: Vec<RationalFn> =
                (0..npart).map(|p| values[p][bidx].clone()).collect();
            for (prev, &pc) in reduced.iter().zip(&pivots) {
                if row[pc].is_zero() {
                    continue;
                }
                let f = row[pc].div(&prev[pc])?;
                for (entry, base) in row.iter_mut().zip(prev) {
                    *entry = entry.sub(&f.mul(base));
                }
            }
            if let Some(pc) = row.iter().position(|v| !v.is_zero()) {
                selected.push(bidx);
                pivots.push(pc);
                reduced.push(row);
            }
        }
        if selected.len() < npart {
            return Err(CharacterError::SingularSystem { n });
        }
        let mut square = Matrix::zero(npart, npart);
        for (j, &bidx) in selected.iter().enumerate() {
            for p in 0..npart {
                square.set(j, p, values[p][bidx].clone());
            }
        }
        let solver = square.inverse()?;
        Ok(CharacterTable { n, betas, partitions, values, selected, solver })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn betas(&self) -> &[Vec<usize>] {
        &self.betas
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// Table lookup of the irreducible character value at T_{gamma_beta}.
    pub fn irreducible_value(&self, nu: &Partition, beta: &[usize]) -> &RationalFn {
        let p = self.partitions.iter().position(|x| x == nu).expect("partition of n");
        let b = self.betas.iter().position(|x| x == beta).expect("composition of n");
        &self.values[p][b]
    }
}

/// Restriction multiplicities of a module over the finite subalgebra: solves
/// the trace vector against the irreducible table, verifies the decomposition
/// on every composition, and cross-checks against the lattice-word rule.
pub fn restriction_multiplicities_with(
    m: &SeminormalModule,
    table: &CharacterTable,
) -> Result<BTreeMap<Partition, u64>, CharacterError> {
    assert_eq!(m.n(), table.n());
    let traces: Vec<RationalFn> =
        table.betas.iter().map(|b| trace_on_gamma(m, b)).collect();
    let rhs: Vec<RationalFn> =
        table.selected.iter().map(|&j| traces[j].clone()).collect();
    let solved = table.solver.mul_vec(&rhs);
    let mut mult = Vec::with_capacity(solved.len());
    for (p, val) in solved.iter().enumerate() {
        let constant = val.as_laurent().and_then(|l| {
            if l.is_zero() {
                Some(0u64)
            } else if l.term_count() == 1 && l.max_exp() == Some(0) {
                l.coeff(0).to_u64()
            } else {
                None
            }
        });
        match constant {
            Some(v) => mult.push(v),
            None => {
                return Err(CharacterError::BadMultiplicity {
                    nu: table.partitions[p].to_string(),
                    value: val.to_json().to_string(),
                })
            }
        }
    }
    for (b, beta) in table.betas.iter().enumerate() {
        let mut s = RationalFn::zero();
        for (p, &mv) in mult.iter().enumerate() {
            if mv == 0 {
                continue;
            }
            s = s.add(&table.values[p][b].mul(&RationalFn::from_int(mv as i64)));
        }
        if s != traces[b] {
            return Err(CharacterError::Inconsistent { beta: beta.clone() });
        }
    }
    let shape = m.placed().shape();
    let mut out = BTreeMap::new();
    for (p, &mv) in mult.iter().enumerate() {
        let oracle = lr_coefficient(shape.lambda(), shape.mu(), &table.partitions[p]);
        if mv != oracle {
            return Err(CharacterError::OracleMismatch {
                nu: table.partitions[p].to_string(),
                solved: mv,
                oracle,
            });
        }
        if mv != 0 {
            out.insert(table.partitions[p].clone(), mv);
        }
    }
    Ok(out)
}

/// Convenience form of restriction_multiplicities_with that builds the
/// character table for the module's box count on the fly.
pub fn restriction_multiplicities(
    m: &SeminormalModule,
) -> Result<BTreeMap<Partition, u64>, CharacterError> {
    let table = CharacterTable::new(m.n())?;
    restriction_multiplicities_with(m, &table)
}

/// Symmetric polynomial in a fixed number of variables with Laurent
/// coefficients, stored as exponent-vector monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, LaurentPoly>,
}

impl SymmetricPolynomial {
    pub fn zero(nvars: usize) -> Self {
        SymmetricPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        let mut out = Self::zero(nvars);
        out.add_term(vec![0; nvars], &LaurentPoly::one());
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &LaurentPoly)> {
        self.terms.iter()
    }

    fn add_term(&mut self, exps: Vec<u32>, c: &LaurentPoly) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        let cur = self.terms.remove(&exps).unwrap_or_else(LaurentPoly::zero);
        let v = cur.add(c);
        if !v.is_zero() {
            self.terms.insert(exps, v);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), &v.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, &c1.mul(c2));
            }
        }
        out
    }

    /// Invariance under every adjacent variable swap.
    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.nvars.saturating_sub(1) {
            for (exps, coeff) in &self.terms {
                let mut sw = exps.clone();
                sw.swap(i, i + 1);
                if self.terms.get(&sw) != Some(coeff) {
                    return false;
                }
            }
        }
        true
    }
}

/// Schur polynomial of a (possibly skew) shape: the monomial sum over
/// semistandard fillings with entries bounded by nvars.
pub fn schur_polynomial(shape: &SkewShape, nvars: usize) -> SymmetricPolynomial {
    let order = reverse_reading_cells(shape);
    let mut counts = vec![0u32; nvars];
    let mut values = BTreeMap::new();
    let mut out = SymmetricPolynomial::zero(nvars);
    fill_semistandard(
        shape,
        &order,
        0,
        nvars as u32,
        None,
        false,
        &mut counts,
        &mut values,
        &mut |c: &[u32]| out.add_term(c.to_vec(), &LaurentPoly::one()),
    );
    debug_assert!(out.is_symmetric());
    out
}

/// The polynomial q_r: the hook expansion with coefficient
/// (-q^-1)^(r-m) q^(m-1) on the hook (m, 1^(r-m)).
pub fn qr_polynomial(r: usize, nvars: usize) -> SymmetricPolynomial {
    assert!(r >= 1);
    let mut out = SymmetricPolynomial::zero(nvars);
    for m in 1..=r {
        let mut parts = vec![m as u32];
        parts.extend(std::iter::repeat(1u32).take(r - m));
        let hook = Partition::new(parts).expect("hook parts are decreasing");
        let sign = if (r - m) % 2 == 1 { -1 } else { 1 };
        let coeff = LaurentPoly::monomial((m as i64 - 1) - (r - m) as i64, BigInt::from(sign));
        out = out.add(&schur_polynomial(&SkewShape::straight(hook), nvars).scale(&coeff));
    }
    debug_assert!(out.is_symmetric());
    out
}

/// Product q_{beta_1} ... q_{beta_l}.
pub fn qbeta_polynomial(beta: &[usize], nvars: usize) -> SymmetricPolynomial {
    let mut out = SymmetricPolynomial::one(nvars);
    for &b in beta {
        out = out.mul(&qr_polynomial(b, nvars));
    }
    out
}

/// Checks q_beta * s_mu = sum over lambda of the borderstrip character of
/// lambda/mu times s_lambda, both sides expanded in nvars variables.
pub fn schur_and_qr_check(mu: &Partition, beta: &[usize], nvars: usize) -> bool {
    let n: usize = beta.iter().sum();
    assert!(nvars >= mu.size() + n);
    let lhs = qbeta_polynomial(beta, nvars)
        .mul(&schur_polynomial(&SkewShape::straight(mu.clone()), nvars));
    let mut rhs = SymmetricPolynomial::zero(nvars);
    for lambda in Partition::all_of(mu.size() + n) {
        if !lambda.contains(mu) {
            continue;
        }
        let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("containment checked");
        let placed = PlacedSkewShape::auto(shape).expect("default contents always place");
        let coeff = borderstrip_character(&placed, beta);
        if coeff.is_zero() {
            continue;
        }
        rhs = rhs.add(&schur_polynomial(&SkewShape::straight(lambda), nvars).scale(&coeff));
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_standard_tableaux, ContentsSpec, Permutation};
    use num::BigRational;

    fn part(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn placed(lambda: &str, mu: &str, contents: ContentsSpec) -> PlacedSkewShape {
        let shape = SkewShape::new(part(lambda), part(mu)).unwrap();
        PlacedSkewShape::from_spec(shape, &contents).unwrap()
    }

    fn auto_module(lambda: &str, mu: &str) -> SeminormalModule {
        build_module(&placed(lambda, mu, ContentsSpec::Auto))
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn compositions_and_gamma_words() {
        assert_eq!(
            compositions(3),
            vec![vec![1, 1, 1], vec![1, 2], vec![2, 1], vec![3]]
        );
        assert_eq!(compositions(5).len(), 16);
        assert_eq!(gamma_word(&[3]), vec![1, 2]);
        assert_eq!(gamma_word(&[2, 2]), vec![1, 3]);
        assert!(gamma_word(&[1, 1, 1]).is_empty());
        let cycle = Permutation::from_word(3, &gamma_word(&[3]));
        assert_eq!(cycle.images(), &[2, 3, 1]);
    }

    #[test]
    fn block_cycle_traces_on_rows_and_columns() {
        let row = auto_module("2", "");
        assert_eq!(trace_on_gamma(&row, &[2]), RationalFn::q_power_int(1));
        assert_eq!(trace_on_gamma(&row, &[1, 1]), RationalFn::one());
        let col = auto_module("1,1", "");
        assert_eq!(trace_on_gamma(&col, &[2]), RationalFn::q_power_int(-1).neg());
        let hook = auto_module("2,1", "");
        assert_eq!(trace_on_gamma(&hook, &[1, 1, 1]), RationalFn::from_int(2));
    }

    #[test]
    fn delta_weight_examples() {
        let single = SkewShape::straight(part("1"));
        assert_eq!(delta_weight(&single), LaurentPoly::one());
        let vertical = SkewShape::straight(part("1,1"));
        assert_eq!(delta_weight(&vertical), LaurentPoly::monomial(-1, BigInt::from(-1)));
        let horizontal = SkewShape::straight(part("2"));
        assert_eq!(delta_weight(&horizontal), LaurentPoly::monomial(1, BigInt::from(1)));
        let square = SkewShape::straight(part("2,2"));
        assert!(delta_weight(&square).is_zero());
        let corner = SkewShape::new(part("2,2"), part("1")).unwrap();
        assert_eq!(delta_weight(&corner), LaurentPoly::from_int(-1));
        let split = SkewShape::new(part("3,1"), part("2")).unwrap();
        let q_minus_qinv = LaurentPoly::monomial(1, BigInt::from(1))
            .add(&LaurentPoly::monomial(-1, BigInt::from(-1)));
        assert_eq!(delta_weight(&split), q_minus_qinv);
    }

    #[test]
    fn hook_character_matches_delta() {
        let p = placed("2,1", "", ContentsSpec::Auto);
        assert_eq!(borderstrip_character(&p, &[3]), LaurentPoly::from_int(-1));
        let m = build_module(&p);
        assert_eq!(trace_on_gamma(&m, &[3]), RationalFn::from_int(-1));
    }

    #[test]
    fn characters_match_traces_on_sample_shapes() {
        let samples = vec![
            placed("2,1", "", ContentsSpec::Auto),
            placed("2,2", "", ContentsSpec::Auto),
            placed("2,2", "1", ContentsSpec::Auto),
            placed(
                "3,1",
                "2",
                ContentsSpec::Explicit(vec![rat(-1), BigRational::new(1.into(), 2.into())]),
            ),
            placed("3,2,1", "2,1", ContentsSpec::Explicit(vec![rat(-2), rat(0), rat(2)])),
        ];
        for p in samples {
            let m = build_module(&p);
            for beta in compositions(m.n()) {
                let lhs = trace_on_gamma(&m, &beta);
                let rhs = RationalFn::from_laurent(borderstrip_character(&p, &beta));
                assert_eq!(lhs, rhs, "beta {:?} on {:?}", beta, p.shape());
            }
        }
    }

    #[test]
    fn trace_is_placement_independent() {
        let spread = [
            ContentsSpec::Auto,
            ContentsSpec::Explicit(vec![rat(-4), rat(0), rat(4)]),
            ContentsSpec::Explicit(vec![
                rat(-2),
                BigRational::new(1.into(), 2.into()),
                BigRational::new(5.into(), 2.into()),
            ]),
        ];
        let modules: Vec<SeminormalModule> = spread
            .iter()
            .map(|c| build_module(&placed("3,2,1", "2,1", c.clone())))
            .collect();
        for beta in compositions(3) {
            let reference = trace_on_gamma(&modules[0], &beta);
            for m in &modules[1..] {
                assert_eq!(trace_on_gamma(m, &beta), reference, "beta {:?}", beta);
            }
        }
    }

    #[test]
    fn lattice_word_rule_goldens() {
        assert_eq!(lr_coefficient(&part("2,1"), &part("1"), &part("2")), 1);
        assert_eq!(lr_coefficient(&part("2,1"), &part("1"), &part("1,1")), 1);
        assert_eq!(lr_coefficient(&part("3,2,1"), &Partition::empty(), &part("3,2,1")), 1);
        assert_eq!(lr_coefficient(&part("3,2,1"), &part("2,1"), &part("2,1")), 2);
        assert_eq!(lr_coefficient(&part("4,2"), &part("2,1"), &part("2,1")), 1);
        assert_eq!(lr_coefficient(&part("2,2"), &part("1"), &part("2,1")), 1);
        // size mismatch and non-containment give zero
        assert_eq!(lr_coefficient(&part("2,1"), &part("2"), &part("2")), 0);
        assert_eq!(lr_coefficient(&part("2,1"), &part("1,1,1"), &Partition::empty()), 0);
    }

    #[test]
    fn lattice_word_rule_symmetry_and_strips() {
        for n in 1..=6usize {
            for lambda in Partition::all_of(n) {
                for k in 0..=n {
                    for mu in Partition::all_of(k) {
                        if !lambda.contains(&mu) {
                            continue;
                        }
                        for nu in Partition::all_of(n - k) {
                            assert_eq!(
                                lr_coefficient(&lambda, &mu, &nu),
                                lr_coefficient(&lambda, &nu, &mu),
                                "{} {} {}",
                                lambda,
                                mu,
                                nu
                            );
                        }
                        // single-row nu: multiplicity 1 exactly on horizontal strips
                        let nu = Partition::new(vec![(n - k) as u32]).unwrap();
                        let shape = SkewShape::new(lambda.clone(), mu.clone()).unwrap();
                        let cols: Vec<usize> = shape.cells().iter().map(|c| c.1).collect();
                        let horizontal =
                            cols.iter().collect::<BTreeSet<_>>().len() == cols.len();
                        let expect = if n == k || horizontal { 1 } else { 0 };
                        assert_eq!(lr_coefficient(&lambda, &mu, &nu), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn schur_product_cross_check() {
        // s_(2,1) * s_(2,1) in six variables against the lattice-word rule
        let s21 = schur_polynomial(&SkewShape::straight(part("2,1")), 6);
        let product = s21.mul(&s21);
        let mut expansion = SymmetricPolynomial::zero(6);
        for lambda in Partition::all_of(6) {
            let c = lr_coefficient(&lambda, &part("2,1"), &part("2,1"));
            if c == 0 {
                continue;
            }
            let s = schur_polynomial(&SkewShape::straight(lambda), 6);
            expansion = expansion.add(&s.scale(&LaurentPoly::from_int(c as i64)));
        }
        assert_eq!(product, expansion);
    }

    #[test]
    fn restriction_decompositions() {
        let table2 = CharacterTable::new(2).unwrap();
        let mults = restriction_multiplicities_with(&auto_module("2,1", "1"), &table2).unwrap();
        let expect: BTreeMap<Partition, u64> =
            [(part("2"), 1), (part("1,1"), 1)].into_iter().collect();
        assert_eq!(mults, expect);

        let table3 = CharacterTable::new(3).unwrap();
        let straight = restriction_multiplicities_with(&auto_module("2,1", ""), &table3).unwrap();
        assert_eq!(straight, [(part("2,1"), 1)].into_iter().collect());

        let skew = restriction_multiplicities_with(&auto_module("3,2,1", "2,1"), &table3).unwrap();
        let expect: BTreeMap<Partition, u64> =
            [(part("3"), 1), (part("2,1"), 2), (part("1,1,1"), 1)].into_iter().collect();
        assert_eq!(skew, expect);

        // dimension bookkeeping and placement independence
        let dim_sum: usize = skew
            .iter()
            .map(|(nu, &mv)| {
                mv as usize
                    * enumerate_standard_tableaux(&SkewShape::straight(nu.clone())).len()
            })
            .sum();
        assert_eq!(dim_sum, auto_module("3,2,1", "2,1").dim());
        let stretched = build_module(&placed(
            "3,2,1",
            "2,1",
            ContentsSpec::Explicit(vec![rat(-4), rat(0), rat(4)]),
        ));
        assert_eq!(restriction_multiplicities_with(&stretched, &table3).unwrap(), skew);
    }

    #[test]
    fn qr_and_schur_identities() {
        assert_eq!(qr_polynomial(1, 3), schur_polynomial(&SkewShape::straight(part("1")), 3));
        let q2 = qr_polynomial(2, 2);
        let expect = schur_polynomial(&SkewShape::straight(part("2")), 2)
            .scale(&LaurentPoly::monomial(1, BigInt::from(1)))
            .add(
                &schur_polynomial(&SkewShape::straight(part("1,1")), 2)
                    .scale(&LaurentPoly::monomial(-1, BigInt::from(-1))),
            );
        assert_eq!(q2, expect);
        assert!(schur_and_qr_check(&Partition::empty(), &[2], 2));
        assert!(schur_and_qr_check(&part("1"), &[2], 3));
        assert!(schur_and_qr_check(&part("2"), &[1, 1], 4));
        assert!(schur_and_qr_check(&part("1"), &[2, 1], 4));
    }
}
