//! Gluing of placed shape pairs and checks on the module induced from the
//! pair: dimension count, weight multisets over block coset representatives,
//! and traces on the block cycles.  Also enumerates connected ribbons and
//! checks the ribbon decomposition of the principal series at the standard
//! weight.

use std::collections::{BTreeMap, BTreeSet};

use num::BigRational;
use thiserror::Error;

use crate::calibration::HAlgElement;
use crate::characters::{
    compositions, gamma_word, grown_partitions, trace_of_t_word, trace_on_gamma,
};
use crate::combinatorics::{
    diag, enumerate_standard_tableaux, Cell, Partition, Permutation, PlacedSkewShape, SkewShape,
};
use crate::natural_basis::binom;
use crate::qfield::RationalFn;
use crate::seminormal::{build_module, RelationCheck, RelationReport, SeminormalModule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InductionError {
    #[error("{which} gluing fails: {reason}")]
    IncompatibleContents { which: &'static str, reason: String },
}

/// The two ways of attaching a second placed shape after the last box of a
/// first one.  The attached copy of the second shape is translated so that
/// its first box lands immediately above (vertical) or immediately to the
/// right of (horizontal) the last box of the first; contents ride along
/// unchanged, so the combined content function restricts to the factors.
#[derive(Clone, Debug)]
pub struct GluedPair {
    pub theta: PlacedSkewShape,
    pub phi: PlacedSkewShape,
    pub vertical: PlacedSkewShape,
    pub horizontal: PlacedSkewShape,
    /// Row and column translation applied to the second shape's cells.
    pub vertical_shift: (i64, i64),
    pub horizontal_shift: (i64, i64),
}

fn glue_one(
    theta: &PlacedSkewShape,
    phi: &PlacedSkewShape,
    above: bool,
) -> Result<(PlacedSkewShape, (i64, i64)), InductionError> {
    let which = if above { "vertical" } else { "horizontal" };
    let err = |reason: String| InductionError::IncompatibleContents { which, reason };
    let &(ar, ac) = theta.cells().last().expect("shapes are nonempty");
    let &(fr, fc) = phi.cells().first().expect("shapes are nonempty");
    let target = if above {
        (ar as i64 - 1, ac as i64)
    } else {
        (ar as i64, ac as i64 + 1)
    };
    let shift = (target.0 - fr as i64, target.1 - fc as i64);
    let mut content_map: BTreeMap<(i64, i64), BigRational> = BTreeMap::new();
    for (cell, cont) in theta.cells().iter().zip(theta.contents()) {
        content_map.insert((cell.0 as i64, cell.1 as i64), cont.clone());
    }
    for (cell, cont) in phi.cells().iter().zip(phi.contents()) {
        let moved = (cell.0 as i64 + shift.0, cell.1 as i64 + shift.1);
        if content_map.insert(moved, cont.clone()).is_some() {
            return Err(err(format!("shapes overlap at {:?}", moved)));
        }
    }
    let cells: BTreeSet<(i64, i64)> = content_map.keys().copied().collect();
    let (shape, off) = SkewShape::from_cells(&cells)
        .ok_or_else(|| err("the union is not a skew diagram".into()))?;
    let contents_bare: Vec<BigRational> = shape
        .cells()
        .iter()
        .map(|&(r, c)| content_map[&(r as i64 + off.0, c as i64 + off.1)].clone())
        .collect();
    let placed = PlacedSkewShape::new(shape, contents_bare).map_err(|e| err(e.to_string()))?;
    Ok((placed, shift))
}

/// Builds both gluings of the pair; errors when either candidate fails the
/// placement conditions under the combined contents.
pub fn glue_shapes(
    theta: &PlacedSkewShape,
    phi: &PlacedSkewShape,
) -> Result<GluedPair, InductionError> {
    let (vertical, vertical_shift) = glue_one(theta, phi, true)?;
    let (horizontal, horizontal_shift) = glue_one(theta, phi, false)?;
    Ok(GluedPair {
        theta: theta.clone(),
        phi: phi.clone(),
        vertical,
        horizontal,
        vertical_shift,
        horizontal_shift,
    })
}

/// Minimal length representatives of the cosets of the block subgroup
/// S_k x S_(n-k): permutations increasing on both blocks, one per k-subset
/// of images, in subset order.
pub fn minimal_block_reps(n: usize, k: usize) -> Vec<Permutation> {
    assert!(k <= n && n <= 32);
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let mut images: Vec<u32> =
            (1..=n as u32).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        images.extend((1..=n as u32).filter(|i| mask & (1 << (i - 1)) == 0));
        out.push(Permutation::from_images(images));
    }
    out
}

/// Weight multiset of a module: its tableau weight tuples with multiplicity.
pub fn module_weight_multiset(m: &SeminormalModule) -> BTreeMap<Vec<BigRational>, usize> {
    let mut out = BTreeMap::new();
    for l in 0..m.dim() {
        *out.entry(m.weight(l).to_vec()).or_insert(0) += 1;
    }
    out
}

/// Weight multiset of the module induced from the pair: every block
/// representative translate of every concatenated pair of factor weights.
pub fn induced_weight_multiset(
    theta_m: &SeminormalModule,
    phi_m: &SeminormalModule,
) -> BTreeMap<Vec<BigRational>, usize> {
    let k = theta_m.n();
    let n = k + phi_m.n();
    let inverses: Vec<Permutation> =
        minimal_block_reps(n, k).iter().map(|w| w.inverse()).collect();
    let mut out = BTreeMap::new();
    for l in 0..theta_m.dim() {
        for p in 0..phi_m.dim() {
            let mut base = theta_m.weight(l).to_vec();
            base.extend_from_slice(phi_m.weight(p));
            for winv in &inverses {
                let tuple: Vec<BigRational> =
                    (1..=n as u32).map(|i| base[winv.apply(i) as usize - 1].clone()).collect();
                *out.entry(tuple).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Trace of T_(gamma_beta) on the module induced from the pair.  Expands
/// T_gamma T_w over minimal block representatives w and keeps the terms
/// whose block-sorted part returns to w; the block remainder z = z1 z2 then
/// contributes the product of the factor traces.
pub fn induced_character(
    theta_m: &SeminormalModule,
    phi_m: &SeminormalModule,
    beta: &[usize],
) -> RationalFn {
    let k = theta_m.n();
    let n = k + phi_m.n();
    assert_eq!(beta.iter().sum::<usize>(), n);
    let gamma = HAlgElement::from_t_word(n, &gamma_word(beta));
    let mut theta_traces: BTreeMap<Permutation, RationalFn> = BTreeMap::new();
    let mut phi_traces: BTreeMap<Permutation, RationalFn> = BTreeMap::new();
    let mut total = RationalFn::zero();
    for w in minimal_block_reps(n, k) {
        let prod = gamma.mul(&HAlgElement::from_t_word(n, &w.lexmin_reduced_word()));
        for (y, c) in prod.terms() {
            let mut images: Vec<u32> = y.images()[..k].to_vec();
            images.sort_unstable();
            let mut tail: Vec<u32> = y.images()[k..].to_vec();
            tail.sort_unstable();
            images.extend(tail);
            if Permutation::from_images(images) != w {
                continue;
            }
            let z = w.inverse().compose(y);
            let z1 = Permutation::from_images(z.images()[..k].to_vec());
            let z2 = Permutation::from_images(
                z.images()[k..].iter().map(|&v| v - k as u32).collect(),
            );
            let t1 = theta_traces
                .entry(z1)
                .or_insert_with_key(|p| trace_of_t_word(theta_m, &p.lexmin_reduced_word()))
                .clone();
            let t2 = phi_traces
                .entry(z2)
                .or_insert_with_key(|p| trace_of_t_word(phi_m, &p.lexmin_reduced_word()))
                .clone();
            total = total.add(&c.mul(&t1).mul(&t2));
        }
    }
    total
}

/// Runs the decomposition checks for the pair: the binomial dimension count,
/// the weight multiset identity over block representatives, and the trace
/// identity for every composition of n.
pub fn verify_induction_decomposition(
    theta: &PlacedSkewShape,
    phi: &PlacedSkewShape,
) -> Result<RelationReport, InductionError> {
    let k = theta.n_boxes();
    let n = k + phi.n_boxes();
    assert!(n <= 7, "supported up to 7 boxes total");
    let pair = glue_shapes(theta, phi)?;
    let theta_m = build_module(theta);
    let phi_m = build_module(phi);
    let vert_m = build_module(&pair.vertical);
    let horiz_m = build_module(&pair.horizontal);
    let mut checks = vec![RelationCheck {
        name: "dimension count".into(),
        ok: binom(n, k) * theta_m.dim() * phi_m.dim() == vert_m.dim() + horiz_m.dim(),
    }];
    let mut glued = module_weight_multiset(&vert_m);
    for (tuple, count) in module_weight_multiset(&horiz_m) {
        *glued.entry(tuple).or_insert(0) += count;
    }
    checks.push(RelationCheck {
        name: "weight multiset".into(),
        ok: induced_weight_multiset(&theta_m, &phi_m) == glued,
    });
    for beta in compositions(n) {
        let lhs = induced_character(&theta_m, &phi_m, &beta);
        let rhs = trace_on_gamma(&vert_m, &beta).add(&trace_on_gamma(&horiz_m, &beta));
        checks.push(RelationCheck { name: format!("trace at blocks {:?}", beta), ok: lhs == rhs });
    }
    Ok(RelationReport { checks })
}

/// All connected ribbons with n boxes, up to translation: one lattice path
/// of right and up steps per bit pattern, so 2^(n-1) distinct shapes.
pub fn enumerate_connected_ribbons(n: usize) -> Vec<SkewShape> {
    assert!((1..=63).contains(&n));
    let mut out: Vec<SkewShape> = Vec::new();
    for mask in 0u64..(1 << (n - 1)) {
        let mut cells = BTreeSet::new();
        let (mut r, mut c) = (0i64, 0i64);
        cells.insert((r, c));
        for step in 0..n - 1 {
            if mask & (1 << step) != 0 {
                r -= 1;
            } else {
                c += 1;
            }
            cells.insert((r, c));
        }
        let (shape, _) = SkewShape::from_cells(&cells).expect("ribbon paths are skew diagrams");
        out.push(shape);
    }
    out.sort();
    out.dedup();
    out
}

fn partitions_in_box(rows: usize, cols: u32) -> Vec<Partition> {
    fn rec(rows_left: usize, maxp: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).expect("weakly decreasing by construction"));
        if rows_left == 0 {
            return;
        }
        for p in 1..=maxp {
            cur.push(p);
            rec(rows_left - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// Connected n-box ribbons found by filtering every skew diagram inside an
/// n x n box and canonicalizing by translation; cross-checks the lattice
/// path generator.
pub fn ribbons_by_filter(n: usize) -> Vec<SkewShape> {
    assert!(n >= 1);
    let mut found: BTreeSet<SkewShape> = BTreeSet::new();
    for lambda in partitions_in_box(n, n as u32) {
        if lambda.size() < n {
            continue;
        }
        for mu in grown_partitions(&Partition::empty(), &lambda, lambda.size() - n) {
            let shape = SkewShape::new(lambda.clone(), mu).expect("grown inside lambda");
            let cells = shape.cells();
            let diags: BTreeSet<i64> = cells.iter().map(|&cell| diag(cell)).collect();
            if diags.len() != n || shape.components().len() != 1 {
                continue;
            }
            let signed: BTreeSet<(i64, i64)> =
                cells.iter().map(|&(r, c)| (r as i64, c as i64)).collect();
            let (canonical, _) = SkewShape::from_cells(&signed).expect("cells of a valid shape");
            found.insert(canonical);
        }
    }
    found.into_iter().collect()
}

/// Checks the ribbon decomposition of the principal series with contents
/// 0..n-1 along the boxes: standard tableau counts sum to n! and the ribbon
/// weight tuples exhaust the permutation orbit of (0, 2, ..., 2(n-1)).
pub fn principal_series_decomposition(n: usize) -> RelationReport {
    assert!((1..=7).contains(&n));
    let ribbons = enumerate_connected_ribbons(n);
    let mut checks = vec![RelationCheck {
        name: "ribbon count".into(),
        ok: ribbons.len() == 1 << (n - 1),
    }];
    let mut total = 0usize;
    let mut weights: BTreeMap<Vec<BigRational>, usize> = BTreeMap::new();
    for shape in &ribbons {
        // box_i sits on the i-th diagonal, so its content i-1 is its index
        // in box order
        let pos: BTreeMap<Cell, usize> =
            shape.cells().iter().copied().enumerate().map(|(i, cell)| (cell, i)).collect();
        for tab in enumerate_standard_tableaux(shape) {
            total += 1;
            let tuple: Vec<BigRational> = (1..=n as u32)
                .map(|v| BigRational::from_integer((2 * pos[&tab.cell_of(v)] as i64).into()))
                .collect();
            *weights.entry(tuple).or_insert(0) += 1;
        }
    }
    let factorial: usize = (1..=n).product();
    checks.push(RelationCheck { name: "tableau count".into(), ok: total == factorial });
    let mut orbit: BTreeMap<Vec<BigRational>, usize> = BTreeMap::new();
    for w in Permutation::all(n) {
        let winv = w.inverse();
        let tuple: Vec<BigRational> = (1..=n as u32)
            .map(|i| BigRational::from_integer((2 * (winv.apply(i) as i64 - 1)).into()))
            .collect();
        *orbit.entry(tuple).or_insert(0) += 1;
    }
    checks.push(RelationCheck { name: "weight multiset".into(), ok: weights == orbit });
    RelationReport { checks }
}
