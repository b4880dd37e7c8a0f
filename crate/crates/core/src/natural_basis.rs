//! The T-word basis n_L = T_{u_L} v_C and its straightening relations.
//!
//! With C the column reading tableau and u_L = w_L w_C^-1, the vectors
//! n_L = T_{u_L} v_C form a basis on which the generators act with Laurent
//! polynomial coefficients.  The change of basis to the seminormal one is
//! triangular for the Bruhat-Chevalley order on the u_L, with diagonal
//! coefficient kappa_L.  Snake relations straighten T_k n_P when k, k+1 sit
//! side by side in a row of P.

use crate::combinatorics::{
    bruhat_lower_set, column_reading_tableau, Cell, Permutation, SkewShape, StandardTableau,
};
use crate::qfield::{Matrix, QError, RationalFn};
use crate::seminormal::SeminormalModule;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NaturalBasisError {
    #[error("inconsistent scaling chain: {0}")]
    Inconsistent(String),
    #[error("triangularity violated: {0}")]
    Triangularity(String),
    #[error("entry ({row}, {col}) of {generator} is not a Laurent polynomial: {value}")]
    IntegralityFailure { generator: String, row: usize, col: usize, value: String },
    #[error(transparent)]
    Algebra(#[from] QError),
}

/// Change of basis between the seminormal and the T-word basis.
pub struct BasisChange {
    /// Column l holds n_L in seminormal coordinates.
    pub a: Matrix,
    pub a_inv: Matrix,
    /// Diagonal coefficient of n_L at v_L.
    pub kappa: Vec<RationalFn>,
    /// The permutations u_L and reduced words for them.
    pub u: Vec<Permutation>,
    pub u_words: Vec<Vec<usize>>,
    /// Index of the column reading tableau in the module basis.
    pub c_index: usize,
}

/// Computes the T-word basis, verifying triangularity along the way.
pub fn natural_basis(m: &SeminormalModule) -> Result<BasisChange, NaturalBasisError> {
    let dim = m.dim();
    let order = m.placed().shape().cells();
    let c_tab = column_reading_tableau(m.placed().shape());
    let c_index = m
        .index_of(&c_tab)
        .ok_or_else(|| NaturalBasisError::Inconsistent("column tableau not in basis".into()))?;
    let wc_inv = c_tab.word(&order).inverse();
    let u: Vec<Permutation> =
        m.tableaux().iter().map(|t| t.word(&order).compose(&wc_inv)).collect();
    let u_words: Vec<Vec<usize>> = u.iter().map(|w| w.lexmin_reduced_word()).collect();
    let lengths: Vec<usize> = u.iter().map(|w| w.length()).collect();

    // kappa by scaling up along chains: kappa_{s_i Q} = (q^-1 + (T_i)_QQ) kappa_Q.
    let mut kappa: Vec<Option<RationalFn>> = vec![None; dim];
    kappa[c_index] = Some(RationalFn::one());
    let mut queue = vec![c_index];
    while let Some(l) = queue.pop() {
        let kl = kappa[l].clone().expect("queued with value");
        for i in 1..m.n() {
            if let Some(p) = m.s_index(i, l) {
                if lengths[p] != lengths[l] + 1 {
                    continue;
                }
                let step = RationalFn::q_power_int(-1).add(m.t_matrix(i).get(l, l));
                let val = step.mul(&kl);
                match &kappa[p] {
                    Some(existing) if *existing != val => {
                        return Err(NaturalBasisError::Inconsistent(format!(
                            "two chains to tableau {} disagree",
                            p
                        )));
                    }
                    Some(_) => {}
                    None => {
                        kappa[p] = Some(val);
                        queue.push(p);
                    }
                }
            }
        }
    }
    let kappa: Vec<RationalFn> = kappa
        .into_iter()
        .enumerate()
        .map(|(l, k)| {
            k.ok_or_else(|| NaturalBasisError::Inconsistent(format!("tableau {} unreachable", l)))
        })
        .collect::<Result<_, _>>()?;

    // Columns n_L = T_{u_L} v_C, with support below u_L and kappa_L on the
    // diagonal.
    let mut a = Matrix::zero(dim, dim);
    for l in 0..dim {
        let mut e_c = vec![RationalFn::zero(); dim];
        e_c[c_index] = RationalFn::one();
        let v = m.apply_word(&u_words[l], &e_c);
        if v[l] != kappa[l] {
            return Err(NaturalBasisError::Triangularity(format!(
                "diagonal coefficient of column {} differs from its scaling factor",
                l
            )));
        }
        let lower = bruhat_lower_set(&u[l]);
        for (r, val) in v.iter().enumerate() {
            if !val.is_zero() && !lower.contains(&u[r]) {
                return Err(NaturalBasisError::Triangularity(format!(
                    "column {} supported outside the lower set at row {}",
                    l, r
                )));
            }
            a.set(r, l, val.clone());
        }
    }
    let a_inv = a.inverse()?;
    Ok(BasisChange { a, a_inv, kappa, u, u_words, c_index })
}

// ---- generator actions ----

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    T(usize),
    X(usize),
}

impl std::fmt::Display for Generator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Generator::T(i) => write!(f, "T_{}", i),
            Generator::X(i) => write!(f, "x_{}", i),
        }
    }
}

fn require_integral(n: &Matrix, generator: &Generator) -> Result<(), NaturalBasisError> {
    for r in 0..n.rows {
        for c in 0..n.cols {
            if n.get(r, c).as_laurent().is_none() {
                return Err(NaturalBasisError::IntegralityFailure {
                    generator: generator.to_string(),
                    row: r,
                    col: c,
                    value: n.get(r, c).to_string(),
                });
            }
        }
    }
    Ok(())
}

/// The matrix of a generator on the T-word basis.  T entries are always
/// required to be Laurent polynomials; x entries only when every content of
/// the placement is an integer.
pub fn action_in_natural_basis(
    m: &SeminormalModule,
    bc: &BasisChange,
    gen: Generator,
) -> Result<Matrix, NaturalBasisError> {
    let mat = match gen {
        Generator::T(i) => m.t_matrix(i).clone(),
        Generator::X(i) => m.x_matrix(i),
    };
    let n = bc.a_inv.mul(&mat.mul(&bc.a));
    let enforce = match gen {
        Generator::T(_) => true,
        Generator::X(_) => m.placed().contents().iter().all(|c| c.is_integer()),
    };
    if enforce {
        require_integral(&n, &gen)?;
    }
    Ok(n)
}

/// Checks T_d n_L = n_{s_d L} on upward steps and (q - q^-1) n_L + n_{s_d L}
/// on downward ones, for every L with s_d L standard.
pub fn verify_natural_action_steps(m: &SeminormalModule, bc: &BasisChange) -> bool {
    let dim = m.dim();
    let qmqi = RationalFn::q_minus_qinv();
    let col = |l: usize| -> Vec<RationalFn> {
        (0..dim).map(|r| bc.a.get(r, l).clone()).collect()
    };
    for l in 0..dim {
        for d in 1..m.n() {
            if let Some(p) = m.s_index(d, l) {
                let lhs = m.apply_t(d, &col(l));
                let rhs: Vec<RationalFn> = if bc.u[p].length() == bc.u[l].length() + 1 {
                    col(p)
                } else {
                    col(l)
                        .iter()
                        .zip(col(p).iter())
                        .map(|(a, b)| qmqi.mul(a).add(b))
                        .collect()
                };
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// Checks T_i n_C = -q^-1 n_C whenever i and i+1 share a column of C.
pub fn verify_column_relations(m: &SeminormalModule) -> bool {
    let dim = m.dim();
    let c_tab = column_reading_tableau(m.placed().shape());
    let c_index = match m.index_of(&c_tab) {
        Some(i) => i,
        None => return false,
    };
    let mut e_c = vec![RationalFn::zero(); dim];
    e_c[c_index] = RationalFn::one();
    for i in 1..m.n() {
        if c_tab.cell_of(i as u32).1 != c_tab.cell_of(i as u32 + 1).1 {
            continue;
        }
        let lhs = m.apply_t(i, &e_c);
        let rhs: Vec<RationalFn> = e_c
            .iter()
            .map(|v| v.mul(&RationalFn::q_power_int(-1)).neg())
            .collect();
        if lhs != rhs {
            return false;
        }
    }
    true
}

// ---- snakes ----

/// The snake through an adjacent row pair: the pair, the boxes above the
/// right one, and the boxes below the left one.  Labels refer to C.
#[derive(Clone, Debug)]
pub struct Snake {
    pub pivot: Cell,
    pub cells: Vec<Cell>,
    /// C-labels of the pivot and the boxes below it (consecutive).
    pub a_labels: Vec<u32>,
    /// C-labels of the boxes above the right box and the right box itself.
    pub b_labels: Vec<u32>,
    /// The entries k, k+1 sit side by side in the row-reading refill.
    pub k: u32,
}

/// All snakes of a shape, one per horizontally adjacent cell pair.
pub fn snakes(shape: &SkewShape) -> Vec<Snake> {
    let c_tab = column_reading_tableau(shape);
    let mut out = Vec::new();
    for &(r, c) in &shape.cells() {
        if !shape.contains_cell((r, c + 1)) {
            continue;
        }
        let mut above_right: Vec<Cell> = (1..r)
            .filter(|&rr| shape.contains_cell((rr, c + 1)))
            .map(|rr| (rr, c + 1))
            .collect();
        above_right.sort_unstable();
        let below_left: Vec<Cell> = ((r + 1)..)
            .take_while(|&rr| shape.contains_cell((rr, c)))
            .map(|rr| (rr, c))
            .collect();
        let mut a_labels: Vec<u32> = std::iter::once((r, c))
            .chain(below_left.iter().copied())
            .map(|cell| c_tab.value_at(cell))
            .collect();
        a_labels.sort_unstable();
        let mut b_labels: Vec<u32> = above_right
            .iter()
            .copied()
            .chain(std::iter::once((r, c + 1)))
            .map(|cell| c_tab.value_at(cell))
            .collect();
        b_labels.sort_unstable();
        debug_assert!(a_labels.windows(2).all(|w| w[1] == w[0] + 1));
        debug_assert!(b_labels.windows(2).all(|w| w[1] == w[0] + 1));
        debug_assert_eq!(*b_labels.first().unwrap(), a_labels.last().unwrap() + 1);
        let k = a_labels[0] + above_right.len() as u32;
        let mut cells = vec![(r, c), (r, c + 1)];
        cells.extend(above_right);
        cells.extend(below_left);
        cells.sort_unstable();
        out.push(Snake { pivot: (r, c), cells, a_labels, b_labels, k });
    }
    out.sort_by_key(|s| s.pivot);
    out
}

/// One term of a snake relation: the shuffle u, its coefficient, and the
/// filling u C.
#[derive(Clone, Debug)]
pub struct GarnirTerm {
    pub coeff: RationalFn,
    pub shuffle: Permutation,
    pub tableau: StandardTableau,
}

pub(crate) fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut v = 1usize;
    for j in 0..k {
        v = v * (n - j) / (j + 1);
    }
    v
}

/// All terms of the snake relation sum_u (-q)^(N - l(u)) T_u n_C = 0, where u
/// runs over the permutations of the snake labels increasing on both halves
/// and N is the maximal shuffle length.
pub fn garnir_terms(shape: &SkewShape, snake: &Snake) -> Vec<GarnirTerm> {
    let n = shape.n_boxes();
    let c_tab = column_reading_tableau(shape);
    let na = snake.a_labels.len();
    let nb = snake.b_labels.len();
    let total = na + nb;
    let lo = snake.a_labels[0];
    let big_n = binom(total, 2) - binom(na, 2) - binom(nb, 2);

    let mut out = Vec::new();
    // A shuffle is determined by the image set of the A-labels.
    let labels: Vec<u32> = (lo..lo + total as u32).collect();
    let mut chosen = vec![false; total];
    fn rec(
        start: usize,
        left: usize,
        chosen: &mut Vec<bool>,
        emit: &mut dyn FnMut(&Vec<bool>),
    ) {
        if left == 0 {
            emit(chosen);
            return;
        }
        for j in start..=(chosen.len() - left) {
            chosen[j] = true;
            rec(j + 1, left - 1, chosen, emit);
            chosen[j] = false;
        }
    }
    let mut emit = |chosen: &Vec<bool>| {
        let mut images: Vec<u32> = (1..=n as u32).collect();
        let image_a: Vec<u32> =
            (0..total).filter(|&j| chosen[j]).map(|j| labels[j]).collect();
        let image_b: Vec<u32> =
            (0..total).filter(|&j| !chosen[j]).map(|j| labels[j]).collect();
        for (src, dst) in snake.a_labels.iter().zip(image_a.iter()) {
            images[(*src - 1) as usize] = *dst;
        }
        for (src, dst) in snake.b_labels.iter().zip(image_b.iter()) {
            images[(*src - 1) as usize] = *dst;
        }
        let u = Permutation::from_images(images);
        let len = u.length();
        let mut coeff = RationalFn::q_power_int((big_n - len) as i64);
        if (big_n - len) % 2 == 1 {
            coeff = coeff.neg();
        }
        let values: BTreeMap<Cell, u32> = c_tab
            .values()
            .iter()
            .map(|(&cell, &v)| (cell, u.apply(v)))
            .collect();
        let tableau = StandardTableau::new(shape.clone(), values);
        out.push(GarnirTerm { coeff, shuffle: u, tableau });
    };
    rec(0, na, &mut chosen, &mut emit);
    out
}

/// Verifies a snake relation on the module and its structure: the shuffle
/// count, the unique nonstandard term with unit coefficient, and the
/// vanishing of the alternating sum.
pub fn verify_garnir_relation(m: &SeminormalModule, snake: &Snake) -> bool {
    let shape = m.placed().shape();
    let terms = garnir_terms(shape, snake);
    let na = snake.a_labels.len();
    let nb = snake.b_labels.len();
    if terms.len() != binom(na + nb, na) {
        return false;
    }
    let nonstandard: Vec<&GarnirTerm> =
        terms.iter().filter(|t| !t.tableau.is_standard()).collect();
    if nonstandard.len() != 1 || !nonstandard[0].coeff.is_one() {
        return false;
    }
    let dim = m.dim();
    let c_index = match m.index_of(&column_reading_tableau(shape)) {
        Some(i) => i,
        None => return false,
    };
    let mut sum = vec![RationalFn::zero(); dim];
    for t in &terms {
        let mut e_c = vec![RationalFn::zero(); dim];
        e_c[c_index] = t.coeff.clone();
        let v = m.apply_word(&t.shuffle.lexmin_reduced_word(), &e_c);
        for (s, val) in sum.iter_mut().zip(v.into_iter()) {
            *s = s.add(&val);
        }
    }
    sum.iter().all(|v| v.is_zero())
}

/// (q^m - q^-m) / (q - q^-1).
pub fn quantum_integer(m: i64) -> RationalFn {
    RationalFn::q_power_int(m)
        .sub(&RationalFn::q_power_int(-m))
        .div(&RationalFn::q_minus_qinv())
        .expect("nonzero denominator")
}

/// [p]! = [1][2]...[p].
pub fn quantum_factorial(p: usize) -> RationalFn {
    let mut v = RationalFn::one();
    for m in 1..=p as i64 {
        v = v.mul(&quantum_integer(m));
    }
    v
}

/// Checks sum_{w in S_A x S_B} (-q)^(l(w_A w_B) - l(w)) T_w n_C
/// = (-1)^(l(w_A w_B)) [|A|]! [|B|]! n_C on the module.  Each term
/// contributes (-1)^(l(w_A w_B)) q^(l(w_A w_B) - 2 l(w)) since both snake
/// halves sit in columns of C.
pub fn verify_quantum_factorial(m: &SeminormalModule, snake: &Snake) -> bool {
    let shape = m.placed().shape();
    let n = shape.n_boxes();
    let dim = m.dim();
    let c_index = match m.index_of(&column_reading_tableau(shape)) {
        Some(i) => i,
        None => return false,
    };
    let na = snake.a_labels.len();
    let nb = snake.b_labels.len();
    let top = binom(na, 2) + binom(nb, 2);
    let mut sum = vec![RationalFn::zero(); dim];
    for alpha in Permutation::all(na) {
        for beta in Permutation::all(nb) {
            let mut images: Vec<u32> = (1..=n as u32).collect();
            for (j, &src) in snake.a_labels.iter().enumerate() {
                images[(src - 1) as usize] =
                    snake.a_labels[(alpha.apply(j as u32 + 1) - 1) as usize];
            }
            for (j, &src) in snake.b_labels.iter().enumerate() {
                images[(src - 1) as usize] =
                    snake.b_labels[(beta.apply(j as u32 + 1) - 1) as usize];
            }
            let w = Permutation::from_images(images);
            let len = alpha.length() + beta.length();
            let mut coeff = RationalFn::q_power_int((top - len) as i64);
            if (top - len) % 2 == 1 {
                coeff = coeff.neg();
            }
            let mut e_c = vec![RationalFn::zero(); dim];
            e_c[c_index] = coeff;
            let v = m.apply_word(&w.lexmin_reduced_word(), &e_c);
            for (s, val) in sum.iter_mut().zip(v.into_iter()) {
                *s = s.add(&val);
            }
        }
    }
    let mut scalar = quantum_factorial(na).mul(&quantum_factorial(nb));
    if top % 2 == 1 {
        scalar = scalar.neg();
    }
    for (r, s) in sum.iter().enumerate() {
        let expect = if r == c_index { scalar.clone() } else { RationalFn::zero() };
        if *s != expect {
            return false;
        }
    }
    true
}
