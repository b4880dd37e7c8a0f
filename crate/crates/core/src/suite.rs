//! The combined verification battery: twelve named checks covering the
//! defining relations, the displayed matrix goldens, the interval property,
//! the intertwiner calculus, snake relations, integrality, characters,
//! restriction, induction, ribbons, and irreducibility.  The runner executes
//! the checks on a small thread pool and reports results in listing order.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num::BigRational;

use crate::calibration::{check_longest_element_identity, verify_tau_identities};
use crate::catalog::{catalog_glue_pairs, catalog_shapes};
use crate::characters::{
    borderstrip_character, compositions, grown_partitions, lr_coefficient,
    restriction_multiplicities_with, trace_on_gamma, CharacterTable,
};
use crate::combinatorics::{
    enumerate_standard_tableaux, verify_interval_bijection, Partition, PlacedSkewShape, SkewShape,
    StandardTableau,
};
use crate::induction::{
    enumerate_connected_ribbons, principal_series_decomposition, ribbons_by_filter,
    verify_induction_decomposition,
};
use crate::natural_basis::{
    action_in_natural_basis, natural_basis, snakes, verify_column_relations,
    verify_garnir_relation, verify_natural_action_steps, verify_quantum_factorial, Generator,
};
use crate::qfield::{Matrix, RationalFn};
use crate::seminormal::{build_module, commutant_dimension, verify_defining_relations, SeminormalModule};

/// Outcome of one named criterion.
#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

type CriterionFn = fn() -> Result<String, String>;

/// The criteria in reporting order.
pub fn criteria() -> Vec<(&'static str, CriterionFn)> {
    vec![
        ("relation suite", relation_suite as CriterionFn),
        ("matrix goldens", case_goldens),
        ("interval bijection", interval_bijection),
        ("longest intertwiner expansion", longest_element_expansion),
        ("intertwiner identities", tau_identities),
        ("snake relations", garnir_suite),
        ("natural basis integrality", integrality),
        ("border strip characters", character_agreement),
        ("restriction multiplicities", restriction_suite),
        ("induced module decomposition", induction_decompositions),
        ("ribbon decomposition", ribbon_decomposition),
        ("irreducibility and weight separation", irreducibility),
    ]
}

/// Runs every criterion and returns results in listing order.  Worker count
/// comes from HECKE_SUITE_THREADS, defaulting to the available parallelism.
pub fn run_suite() -> Vec<CriterionResult> {
    let specs = criteria();
    let workers = std::env::var("HECKE_SUITE_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&k| k >= 1)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1))
        .min(specs.len());
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<CriterionResult>>> =
        specs.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= specs.len() {
                    break;
                }
                let (name, f) = specs[i];
                let start = Instant::now();
                let outcome = catch_unwind(AssertUnwindSafe(f))
                    .unwrap_or_else(|_| Err("check panicked".into()));
                let millis = start.elapsed().as_millis();
                let (passed, detail) = match outcome {
                    Ok(d) => (true, d),
                    Err(d) => (false, d),
                };
                *slots[i].lock().unwrap() =
                    Some(CriterionResult { name, passed, detail, millis });
            });
        }
    });
    slots.into_iter().map(|s| s.into_inner().unwrap().expect("criterion ran")).collect()
}

fn label(p: &PlacedSkewShape) -> String {
    let contents: Vec<String> = p.contents().iter().map(|c| c.to_string()).collect();
    format!("{} [{}]", p.shape(), contents.join(","))
}

fn relation_suite() -> Result<String, String> {
    let shapes = catalog_shapes();
    for p in &shapes {
        let report = verify_defining_relations(&build_module(p), None);
        if !report.all_ok() {
            return Err(format!("{}: {:?}", label(p), report.failures()));
        }
    }
    Ok(format!("defining and rotation relations hold on {} placed shapes", shapes.len()))
}

/// (q - q^-1) / (1 - q^(2d)).
fn dia(d: i64) -> RationalFn {
    RationalFn::q_minus_qinv()
        .div(&RationalFn::one().sub(&RationalFn::q_power_int(2 * d)))
        .expect("nonzero content gap")
}

/// q^-1 + dia(d).
fn off(d: i64) -> RationalFn {
    RationalFn::q_power_int(-1).add(&dia(d))
}

fn locate(m: &SeminormalModule, entries: &[((usize, usize), u32)]) -> usize {
    let t = StandardTableau::new(m.placed().shape().clone(), entries.iter().copied().collect());
    m.index_of(&t).expect("tableau in basis")
}

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

fn auto_placed(lambda: &str, mu: &str) -> PlacedSkewShape {
    let shape = SkewShape::new(
        Partition::parse(lambda).expect("valid partition"),
        Partition::parse(mu).expect("valid partition"),
    )
    .expect("mu inside lambda");
    PlacedSkewShape::auto(shape).expect("default contents always place")
}

fn case_goldens() -> Result<String, String> {
    let q = RationalFn::q_power_int(1);
    let mqi = RationalFn::q_power_int(-1).neg();

    let m = build_module(&auto_placed("3", ""));
    for i in 1..3 {
        if m.t_matrix(i).get(0, 0) != &q {
            return Err(format!("single row: T_{} is not q", i));
        }
    }

    let m = build_module(&auto_placed("2,1", ""));
    let row = locate(&m, &[((1, 1), 1), ((1, 2), 2), ((2, 1), 3)]);
    let col = locate(&m, &[((1, 1), 1), ((1, 2), 3), ((2, 1), 2)]);
    let order = [row, col];
    let mut expect = Matrix::zero(2, 2);
    expect.set(0, 0, q.clone());
    expect.set(1, 1, mqi.clone());
    if permuted(m.t_matrix(1), &order) != expect {
        return Err("hook: T_1 mismatch".into());
    }
    let mut expect = Matrix::zero(2, 2);
    expect.set(0, 0, dia(2));
    expect.set(1, 1, dia(-2));
    expect.set(0, 1, off(-2));
    expect.set(1, 0, off(2));
    if permuted(m.t_matrix(2), &order) != expect {
        return Err("hook: T_2 mismatch".into());
    }

    let m = build_module(&auto_placed("3,2", "2"));
    let (c1, c2, c3) = (-1i64, 0i64, 2i64);
    let mut expect = Matrix::zero(3, 3);
    expect.set(0, 0, q.clone());
    expect.set(1, 1, dia(c1 - c3));
    expect.set(1, 2, off(c3 - c1));
    expect.set(2, 1, off(c1 - c3));
    expect.set(2, 2, dia(c3 - c1));
    if m.t_matrix(1) != &expect {
        return Err("domino and box: T_1 mismatch".into());
    }
    let mut expect = Matrix::zero(3, 3);
    expect.set(0, 0, dia(c2 - c3));
    expect.set(0, 1, off(c3 - c2));
    expect.set(1, 0, off(c2 - c3));
    expect.set(1, 1, dia(c3 - c2));
    expect.set(2, 2, q.clone());
    if m.t_matrix(2) != &expect {
        return Err("domino and box: T_2 mismatch".into());
    }

    let m = build_module(&auto_placed("3,2,1", "2,1"));
    let (bot, mid, top) = ((3, 1), (2, 2), (1, 3));
    let v = [
        locate(&m, &[(bot, 1), (mid, 2), (top, 3)]),
        locate(&m, &[(bot, 2), (mid, 1), (top, 3)]),
        locate(&m, &[(bot, 1), (mid, 3), (top, 2)]),
        locate(&m, &[(bot, 2), (mid, 3), (top, 1)]),
        locate(&m, &[(bot, 3), (mid, 1), (top, 2)]),
        locate(&m, &[(bot, 3), (mid, 2), (top, 1)]),
    ];
    let (d12, d13, d23) = (-2i64, -4i64, -2i64);
    let block = |mat: &mut Matrix, a: usize, b: usize, d_ab: i64| {
        mat.set(a, a, dia(d_ab));
        mat.set(b, b, dia(-d_ab));
        mat.set(a, b, off(-d_ab));
        mat.set(b, a, off(d_ab));
    };
    let mut expect = Matrix::zero(6, 6);
    block(&mut expect, 0, 1, d12);
    block(&mut expect, 2, 3, d13);
    block(&mut expect, 4, 5, d23);
    if permuted(m.t_matrix(1), &v) != expect {
        return Err("three boxes: T_1 mismatch".into());
    }
    let mut expect = Matrix::zero(6, 6);
    block(&mut expect, 0, 2, d23);
    block(&mut expect, 1, 4, d13);
    block(&mut expect, 3, 5, d12);
    if permuted(m.t_matrix(2), &v) != expect {
        return Err("three boxes: T_2 mismatch".into());
    }

    Ok("displayed 1-, 2-, 3-, and 6-dimensional matrices reproduced entrywise".into())
}

fn interval_bijection() -> Result<String, String> {
    let shapes = catalog_shapes();
    for p in &shapes {
        let rep = verify_interval_bijection(p.shape()).map_err(|e| e.to_string())?;
        if !rep.ok {
            return Err(format!(
                "{}: {} tableaux vs interval of {}",
                label(p),
                rep.n_tableaux,
                rep.interval_size
            ));
        }
    }
    Ok(format!("word map hits the weak-order interval exactly on {} shapes", shapes.len()))
}

fn longest_element_expansion() -> Result<String, String> {
    for n in 2..=4usize {
        for base in [0i64, 5] {
            let b = BigRational::from_integer(base.into());
            match check_longest_element_identity(n, &b) {
                Ok(true) => {}
                Ok(false) => {
                    return Err(format!("n = {}, doubled base {}: expansion mismatch", n, base))
                }
                Err(e) => return Err(format!("n = {}, doubled base {}: {}", n, base, e)),
            }
        }
    }
    Ok("longest intertwiner expands with coefficients (-q)^(l(w_0)-l(w)) for n = 2, 3, 4".into())
}

fn tau_identities() -> Result<String, String> {
    let shapes = catalog_shapes();
    for p in &shapes {
        let report = verify_tau_identities(&build_module(p));
        if !report.all_ok() {
            return Err(format!("{}: {:?}", label(p), report.failures()));
        }
    }
    Ok(format!("exchange, square, commuting, and braid identities hold on {} modules", shapes.len()))
}

fn garnir_suite() -> Result<String, String> {
    let shapes = catalog_shapes();
    let mut snake_count = 0usize;
    for p in &shapes {
        let m = build_module(p);
        if !verify_column_relations(&m) {
            return Err(format!("{}: column relation fails", label(p)));
        }
        for snake in snakes(p.shape()) {
            snake_count += 1;
            if !verify_garnir_relation(&m, &snake) {
                return Err(format!("{}: shuffle sum at pivot {:?}", label(p), snake.pivot));
            }
            if !verify_quantum_factorial(&m, &snake) {
                return Err(format!(
                    "{}: factorial eigenvalue at pivot {:?}",
                    label(p),
                    snake.pivot
                ));
            }
        }
    }
    Ok(format!("column, shuffle, and factorial relations hold across {} snakes", snake_count))
}

fn integrality() -> Result<String, String> {
    let shapes = catalog_shapes();
    let mut integral_contents = 0usize;
    for p in &shapes {
        let m = build_module(p);
        let bc = natural_basis(&m).map_err(|e| format!("{}: {}", label(p), e))?;
        if !verify_natural_action_steps(&m, &bc) {
            return Err(format!("{}: step relations fail", label(p)));
        }
        for i in 1..m.n() {
            action_in_natural_basis(&m, &bc, Generator::T(i))
                .map_err(|e| format!("{}: {}", label(p), e))?;
        }
        if p.contents().iter().all(|c| c.is_integer()) {
            for i in 1..=m.n() {
                action_in_natural_basis(&m, &bc, Generator::X(i))
                    .map_err(|e| format!("{}: {}", label(p), e))?;
            }
            integral_contents += 1;
        }
    }
    Ok(format!(
        "T entries integral on all shapes, x entries integral on {} integer-content shapes",
        integral_contents
    ))
}

fn character_agreement() -> Result<String, String> {
    let shapes = catalog_shapes();
    let mut count = 0usize;
    for p in &shapes {
        let m = build_module(p);
        for beta in compositions(m.n()) {
            let lhs = trace_on_gamma(&m, &beta);
            let rhs = RationalFn::from_laurent(borderstrip_character(p, &beta));
            if lhs != rhs {
                return Err(format!("{}: blocks {:?}", label(p), beta));
            }
            count += 1;
        }
    }
    Ok(format!("border strip sums match traces in {} module-composition cases", count))
}

fn restriction_suite() -> Result<String, String> {
    let mut tables: BTreeMap<usize, CharacterTable> = BTreeMap::new();
    let mut pairs = 0usize;
    let mut witness: Option<(Partition, Partition, Partition, u64)> = None;
    for size in 1..=6usize {
        for lambda in Partition::all_of(size) {
            for msize in 0..size {
                for mu in grown_partitions(&Partition::empty(), &lambda, msize) {
                    let boxes = size - msize;
                    let shape =
                        SkewShape::new(lambda.clone(), mu.clone()).expect("mu inside lambda");
                    let placed =
                        PlacedSkewShape::auto(shape).expect("default contents always place");
                    let m = build_module(&placed);
                    if !tables.contains_key(&boxes) {
                        tables.insert(
                            boxes,
                            CharacterTable::new(boxes).map_err(|e| e.to_string())?,
                        );
                    }
                    let table = &tables[&boxes];
                    let mults = restriction_multiplicities_with(&m, table)
                        .map_err(|e| format!("{}/{}: {}", lambda, mu, e))?;
                    for nu in Partition::all_of(boxes) {
                        let solved = mults.get(&nu).copied().unwrap_or(0);
                        let oracle = lr_coefficient(&lambda, &mu, &nu);
                        if solved != oracle {
                            return Err(format!(
                                "{}/{} at {}: solved {} vs rule {}",
                                lambda, mu, nu, solved, oracle
                            ));
                        }
                        if solved >= 2 && witness.is_none() {
                            witness = Some((lambda.clone(), mu.clone(), nu, solved));
                        }
                    }
                    pairs += 1;
                }
            }
        }
    }
    match witness {
        Some((l, m, n, c)) => Ok(format!(
            "{} skew restrictions match the lattice-word rule; multiplicity {} at {}/{} -> {}",
            pairs, c, l, m, n
        )),
        None => Err("no multiplicity of 2 or more was exercised".into()),
    }
}

fn induction_decompositions() -> Result<String, String> {
    let pairs = catalog_glue_pairs();
    for (theta, phi) in &pairs {
        let report = verify_induction_decomposition(theta, phi)
            .map_err(|e| format!("{} * {}: {}", label(theta), label(phi), e))?;
        if !report.all_ok() {
            return Err(format!(
                "{} * {}: {:?}",
                label(theta),
                label(phi),
                report.failures()
            ));
        }
    }
    Ok(format!("dimension, weight, and trace checks pass on {} glued pairs", pairs.len()))
}

fn ribbon_decomposition() -> Result<String, String> {
    let factorials = [1usize, 2, 6, 24, 120, 720, 5040];
    for n in 1..=7usize {
        let ribbons = enumerate_connected_ribbons(n);
        if ribbons.len() != 1 << (n - 1) {
            return Err(format!("n = {}: {} ribbons", n, ribbons.len()));
        }
        if ribbons_by_filter(n) != ribbons {
            return Err(format!("n = {}: filter and path generators disagree", n));
        }
        let total: usize = ribbons.iter().map(|r| enumerate_standard_tableaux(r).len()).sum();
        if total != factorials[n - 1] {
            return Err(format!("n = {}: tableau count {} != {}!", n, total, n));
        }
        let report = principal_series_decomposition(n);
        if !report.all_ok() {
            return Err(format!("n = {}: {:?}", n, report.failures()));
        }
    }
    Ok("2^(n-1) ribbons carry n! tableaux and the full weight orbit for n <= 7".into())
}

fn irreducibility() -> Result<String, String> {
    let shapes = catalog_shapes();
    let q0 = BigRational::from_integer(2.into());
    let mut owner: BTreeMap<Vec<BigRational>, usize> = BTreeMap::new();
    for (idx, p) in shapes.iter().enumerate() {
        let m = build_module(p);
        let dim = commutant_dimension(&m, &q0).map_err(|e| format!("{}: {}", label(p), e))?;
        if dim != 1 {
            return Err(format!("{}: commutant dimension {}", label(p), dim));
        }
        for l in 0..m.dim() {
            if let Some(&prev) = owner.get(m.weight(l)) {
                return Err(if prev == idx {
                    format!("{}: repeated weight inside the module", label(p))
                } else {
                    format!("weight tuple shared by {} and {}", label(&shapes[prev]), label(p))
                });
            }
            owner.insert(m.weight(l).to_vec(), idx);
        }
    }
    Ok(format!(
        "commutants are scalars and weight sets are pairwise disjoint across {} modules",
        shapes.len()
    ))
}
