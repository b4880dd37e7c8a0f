//! Shapes, placements, tableaux and permutations.
//!
//! Boxes of a skew shape are numbered along diagonals from southwest to
//! northeast (diagonal ascending, then row ascending, so within a diagonal
//! the more-northeast box gets the smaller number).  A placed shape orders
//! pages first: boxes sort by (fractional part of content, diagonal, row).
//! Cell coordinates are 1-based (row, column) in matrix orientation.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShapeError {
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("placement violation: {0}")]
    PlacementViolation(String),
    #[error("shape has {n} boxes, exceeding the supported bound {max}")]
    ShapeTooLarge { n: usize, max: usize },
}

// ---- partitions ----

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, ShapeError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::InvalidShape(format!("parts not weakly decreasing: {:?}", parts)));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, row: usize) -> u32 {
        self.0.get(row).copied().unwrap_or(0)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    pub fn parse(s: &str) -> Result<Self, ShapeError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        match parts {
            Ok(p) => Self::new(p),
            Err(e) => Err(ShapeError::InvalidShape(format!("cannot parse '{}': {}", s, e))),
        }
    }

    /// All partitions of n, in lexicographically decreasing part order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p as u32);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

// ---- skew shapes ----

pub type Cell = (usize, usize);

pub fn diag(cell: Cell) -> i64 {
    cell.1 as i64 - cell.0 as i64
}

/// The skew shape lambda/mu.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    lambda: Partition,
    mu: Partition,
}

impl SkewShape {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self, ShapeError> {
        if !lambda.contains(&mu) {
            return Err(ShapeError::InvalidShape(format!("{} not contained in {}", mu, lambda)));
        }
        Ok(SkewShape { lambda, mu })
    }

    pub fn straight(lambda: Partition) -> Self {
        SkewShape { lambda, mu: Partition::empty() }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn n_boxes(&self) -> usize {
        self.lambda.size() - self.mu.size()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        let (r, c) = cell;
        r >= 1 && c >= 1 && c <= self.lambda.part(r - 1) as usize && c > self.mu.part(r - 1) as usize
    }

    /// Cells in box order: diagonal ascending, then row ascending.
    pub fn cells(&self) -> Vec<Cell> {
        let mut cells = Vec::new();
        for r in 1..=self.lambda.len() {
            for c in (self.mu.part(r - 1) + 1)..=self.lambda.part(r - 1) {
                cells.push((r, c as usize));
            }
        }
        cells.sort_by_key(|&cell| (diag(cell), cell.0));
        cells
    }

    /// Edge-connected components, ordered southwest to northeast.
    pub fn components(&self) -> Vec<Vec<Cell>> {
        let cells = self.cells();
        let set: BTreeSet<Cell> = cells.iter().copied().collect();
        let mut seen: BTreeSet<Cell> = BTreeSet::new();
        let mut comps = Vec::new();
        for &start in &cells {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            seen.insert(start);
            while let Some((r, c)) = stack.pop() {
                let mut neighbors = vec![(r + 1, c), (r, c + 1)];
                if r > 1 {
                    neighbors.push((r - 1, c));
                }
                if c > 1 {
                    neighbors.push((r, c - 1));
                }
                for nb in neighbors {
                    if set.contains(&nb) && seen.insert(nb) {
                        comp.push(nb);
                        stack.push(nb);
                    }
                }
            }
            comp.sort_by_key(|&cell| (diag(cell), cell.0));
            comps.push(comp);
        }
        comps
    }

    /// Reconstructs a shape from an absolute cell set; returns the shape and
    /// the (row, col) offset such that absolute = relative + offset.
    /// None when the set is not a skew diagram.
    pub fn from_cells(cells: &BTreeSet<(i64, i64)>) -> Option<(SkewShape, (i64, i64))> {
        if cells.is_empty() {
            return Some((SkewShape::straight(Partition::empty()), (0, 0)));
        }
        let rmin = cells.iter().map(|c| c.0).min().unwrap();
        let rmax = cells.iter().map(|c| c.0).max().unwrap();
        let cmin = cells.iter().map(|c| c.1).min().unwrap();
        // Row intervals; empty interior rows are allowed only when the rows
        // below start strictly left of where the rows above end.
        let mut intervals: Vec<Option<(i64, i64)>> = Vec::new();
        for r in rmin..=rmax {
            let cols: Vec<i64> = cells.iter().filter(|c| c.0 == r).map(|c| c.1).collect();
            if cols.is_empty() {
                intervals.push(None);
                continue;
            }
            let a = *cols.iter().min().unwrap();
            let b = *cols.iter().max().unwrap();
            if (b - a + 1) as usize != cols.len() {
                return None;
            }
            intervals.push(Some((a, b)));
        }
        let nonempty: Vec<(usize, (i64, i64))> =
            intervals.iter().enumerate().filter_map(|(i, iv)| iv.map(|v| (i, v))).collect();
        for w in nonempty.windows(2) {
            let (i1, (a1, b1)) = w[0];
            let (i2, (a2, b2)) = w[1];
            if a1 < a2 || b1 < b2 {
                return None;
            }
            if i2 > i1 + 1 && a1 - 1 < b2 {
                return None;
            }
        }
        let nrows = (rmax - rmin + 1) as usize;
        let mut lambda = vec![0u32; nrows];
        let mut mu = vec![0u32; nrows];
        let mut filler = 0i64;
        for i in (0..nrows).rev() {
            match intervals[i] {
                Some((a, b)) => {
                    lambda[i] = (b - cmin + 1) as u32;
                    mu[i] = (a - cmin) as u32;
                    filler = b - cmin + 1;
                }
                None => {
                    lambda[i] = filler as u32;
                    mu[i] = filler as u32;
                }
            }
        }
        let lambda = Partition::new(lambda).ok()?;
        let mu = Partition::new(mu).ok()?;
        let shape = SkewShape::new(lambda, mu).ok()?;
        if shape.n_boxes() != cells.len() {
            return None;
        }
        Some((shape, (rmin - 1, cmin - 1)))
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mu.is_empty() {
            write!(f, "{}", self.lambda)
        } else {
            write!(f, "{}/{}", self.lambda, self.mu)
        }
    }
}

// ---- placed skew shapes ----

fn fractional_part(x: &BigRational) -> BigRational {
    x - x.floor()
}

/// A skew shape with a content attached to every box, satisfying the
/// placement conditions: for boxes i < j (in the placed numbering) whose
/// contents differ by an integer, (1) c_j >= c_i, (2) c_j = c_i + 1 exactly
/// when the boxes sit on adjacent diagonals, (3) c_i = c_j exactly when they
/// share a diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlacedSkewShape {
    shape: SkewShape,
    cells: Vec<Cell>,
    contents: Vec<BigRational>,
    scale: u32,
}

#[derive(Clone, Debug)]
pub enum ContentsSpec {
    /// Content = column - row.
    Auto,
    /// Explicit contents listed against the bare box order of the shape.
    Explicit(Vec<BigRational>),
}

impl PlacedSkewShape {
    /// Builds a placement from contents listed in the shape's bare box order.
    pub fn new(shape: SkewShape, contents_bare: Vec<BigRational>) -> Result<Self, ShapeError> {
        let bare = shape.cells();
        if contents_bare.len() != bare.len() {
            return Err(ShapeError::PlacementViolation(format!(
                "expected {} contents, got {}",
                bare.len(),
                contents_bare.len()
            )));
        }
        let by_cell: BTreeMap<Cell, BigRational> =
            bare.iter().copied().zip(contents_bare.iter().cloned()).collect();
        let mut cells = bare;
        cells.sort_by(|&a, &b| {
            let pa = fractional_part(&by_cell[&a]);
            let pb = fractional_part(&by_cell[&b]);
            pa.cmp(&pb).then(diag(a).cmp(&diag(b))).then(a.0.cmp(&b.0))
        });
        let contents: Vec<BigRational> = cells.iter().map(|c| by_cell[c].clone()).collect();
        for j in 0..cells.len() {
            for i in 0..j {
                let ci = &contents[i];
                let cj = &contents[j];
                if !(cj - ci).is_integer() {
                    continue;
                }
                let di = diag(cells[i]);
                let dj = diag(cells[j]);
                if cj < ci {
                    return Err(ShapeError::PlacementViolation(format!(
                        "boxes {} and {} on the same page have decreasing contents {} > {}",
                        i + 1,
                        j + 1,
                        ci,
                        cj
                    )));
                }
                let adjacent = (di - dj).abs() == 1;
                let step_one = cj - ci == BigRational::one();
                if adjacent != step_one {
                    return Err(ShapeError::PlacementViolation(format!(
                        "boxes {} and {} have contents {}, {} on diagonals {}, {}",
                        i + 1,
                        j + 1,
                        ci,
                        cj,
                        di,
                        dj
                    )));
                }
                if (ci == cj) != (di == dj) {
                    return Err(ShapeError::PlacementViolation(format!(
                        "boxes {} and {} have contents {}, {} on diagonals {}, {}",
                        i + 1,
                        j + 1,
                        ci,
                        cj,
                        di,
                        dj
                    )));
                }
            }
        }
        let scale = contents
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scale = u32::try_from(&scale)
            .map_err(|_| ShapeError::PlacementViolation("content denominators too large".into()))?;
        Ok(PlacedSkewShape { shape, cells, contents, scale })
    }

    pub fn from_spec(shape: SkewShape, spec: &ContentsSpec) -> Result<Self, ShapeError> {
        match spec {
            ContentsSpec::Auto => Self::auto(shape),
            ContentsSpec::Explicit(v) => Self::new(shape, v.clone()),
        }
    }

    /// The standard placement: content = column - row.
    pub fn auto(shape: SkewShape) -> Result<Self, ShapeError> {
        let contents = shape
            .cells()
            .iter()
            .map(|&c| BigRational::from(BigInt::from(diag(c))))
            .collect();
        Self::new(shape, contents)
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn n_boxes(&self) -> usize {
        self.cells.len()
    }

    /// Cells in the placed numbering (page, diagonal, row).
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Contents aligned with `cells()`.
    pub fn contents(&self) -> &[BigRational] {
        &self.contents
    }

    pub fn content_of(&self, cell: Cell) -> &BigRational {
        let idx = self.cells.iter().position(|&c| c == cell).expect("cell in shape");
        &self.contents[idx]
    }

    /// Least common denominator of all contents (the scale D with z = q^(1/D)).
    pub fn scale(&self) -> u32 {
        self.scale
    }
}

impl fmt::Display for PlacedSkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} with contents (", self.shape)?;
        for (i, c) in self.contents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

// ---- permutations ----

/// A permutation of {1..n} in one-line notation; composition acts on the left,
/// (w * v)(x) = w(v(x)).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Self {
        let n = images.len() as u32;
        let mut seen = vec![false; n as usize];
        for &v in &images {
            assert!(v >= 1 && v <= n && !seen[(v - 1) as usize], "not a permutation: {:?}", images);
            seen[(v - 1) as usize] = true;
        }
        Permutation { images }
    }

    pub fn transposition(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n);
        let mut images: Vec<u32> = (1..=n as u32).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[(x - 1) as usize]
    }

    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        Permutation { images: other.images.iter().map(|&x| self.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u32; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[(v - 1) as usize] = i as u32 + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i as u32 + 1)
    }

    pub fn length(&self) -> usize {
        let mut inv = 0;
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Left multiplication by s_i (swaps the values i and i+1).
    pub fn left_mul_s(&self, i: usize) -> Self {
        let i = i as u32;
        Permutation {
            images: self
                .images
                .iter()
                .map(|&v| {
                    if v == i {
                        i + 1
                    } else if v == i + 1 {
                        i
                    } else {
                        v
                    }
                })
                .collect(),
        }
    }

    /// Right multiplication by s_i (swaps positions i and i+1).
    pub fn right_mul_s(&self, i: usize) -> Self {
        let mut images = self.images.clone();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// True when left multiplication by s_i shortens, i.e. i appears after i+1.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i as u32) > inv.apply(i as u32 + 1)
    }

    /// The lexicographically smallest reduced word (letters for left-to-right
    /// composition: w = s_{i_1} ... s_{i_p}).
    pub fn lexmin_reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        'outer: while !w.is_identity() {
            for i in 1..w.n() {
                if w.has_left_descent(i) {
                    word.push(i);
                    w = w.left_mul_s(i);
                    continue 'outer;
                }
            }
            unreachable!("non-identity permutation without left descent");
        }
        word
    }

    /// Composes the word s_{i_1} ... s_{i_p} into a permutation of {1..n}.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut w = Permutation::identity(n);
        for &i in word.iter().rev() {
            w = w.left_mul_s(i);
        }
        w
    }

    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Permutation>) {
            if rest.is_empty() {
                out.push(Permutation { images: cur.clone() });
                return;
            }
            for k in 0..rest.len() {
                let v = rest.remove(k);
                cur.push(v);
                rec(rest, cur, out);
                cur.pop();
                rest.insert(k, v);
            }
        }
        let mut out = Vec::new();
        rec(&mut (1..=n as u32).collect(), &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v)?;
        }
        write!(f, ")")
    }
}

/// All elements below w in Bruhat-Chevalley order (subword products of a
/// reduced word of w).
pub fn bruhat_lower_set(w: &Permutation) -> BTreeSet<Permutation> {
    let word = w.lexmin_reduced_word();
    let mut set = BTreeSet::new();
    set.insert(Permutation::identity(w.n()));
    for &i in &word {
        let extra: Vec<Permutation> = set.iter().map(|u| u.right_mul_s(i)).collect();
        set.extend(extra);
    }
    set
}

pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> bool {
    if u.length() > w.length() {
        return false;
    }
    bruhat_lower_set(w).contains(u)
}

/// Left weak order: u <= w iff l(w) = l(u) + l(w u^-1).
pub fn left_weak_leq(u: &Permutation, w: &Permutation) -> bool {
    w.length() == u.length() + w.compose(&u.inverse()).length()
}

// ---- standard tableaux ----

/// A bijective filling of a skew shape by 1..n, increasing along rows and
/// down columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    shape: SkewShape,
    values: BTreeMap<Cell, u32>,
}

impl StandardTableau {
    pub fn new(shape: SkewShape, values: BTreeMap<Cell, u32>) -> Self {
        StandardTableau { shape, values }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn value_at(&self, cell: Cell) -> u32 {
        self.values[&cell]
    }

    pub fn cell_of(&self, value: u32) -> Cell {
        *self
            .values
            .iter()
            .find(|(_, &v)| v == value)
            .map(|(c, _)| c)
            .expect("value present")
    }

    pub fn values(&self) -> &BTreeMap<Cell, u32> {
        &self.values
    }

    pub fn is_standard(&self) -> bool {
        for (&(r, c), &v) in &self.values {
            if self.shape.contains_cell((r, c + 1)) && self.values[&(r, c + 1)] < v {
                return false;
            }
            if self.shape.contains_cell((r + 1, c)) && self.values[&(r + 1, c)] < v {
                return false;
            }
        }
        true
    }

    /// Swaps the entries i and i+1 (result may be nonstandard).
    pub fn swap_values(&self, i: u32) -> Self {
        let values = self
            .values
            .iter()
            .map(|(&c, &v)| {
                let nv = if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                };
                (c, nv)
            })
            .collect();
        StandardTableau { shape: self.shape.clone(), values }
    }

    /// The word w(i) = entry of box_i against the given box order.
    pub fn word(&self, order: &[Cell]) -> Permutation {
        Permutation::from_images(order.iter().map(|c| self.values[c]).collect())
    }

    /// The word against the bare box order of the shape.
    pub fn bare_word(&self) -> Permutation {
        self.word(&self.shape.cells())
    }
}

/// All standard tableaux of the shape, sorted by bare word.
pub fn enumerate_standard_tableaux(shape: &SkewShape) -> Vec<StandardTableau> {
    let cells = shape.cells();
    let n = cells.len();
    let mut out = Vec::new();
    let mut values: BTreeMap<Cell, u32> = BTreeMap::new();
    fn rec(
        shape: &SkewShape,
        cells: &[Cell],
        n: usize,
        next: u32,
        values: &mut BTreeMap<Cell, u32>,
        out: &mut Vec<StandardTableau>,
    ) {
        if next as usize > n {
            out.push(StandardTableau::new(shape.clone(), values.clone()));
            return;
        }
        for &(r, c) in cells {
            if values.contains_key(&(r, c)) {
                continue;
            }
            let left_ok = c == 1 || !shape.contains_cell((r, c - 1)) || values.contains_key(&(r, c - 1));
            let up_ok = r == 1 || !shape.contains_cell((r - 1, c)) || values.contains_key(&(r - 1, c));
            if left_ok && up_ok {
                values.insert((r, c), next);
                rec(shape, cells, n, next + 1, values, out);
                values.remove(&(r, c));
            }
        }
    }
    rec(shape, &cells, n, 1, &mut values, &mut out);
    out.sort_by_key(|t| t.bare_word().images().to_vec());
    out
}

/// Column reading tableau: components southwest to northeast, columns left to
/// right within a component, top to bottom within a column.
pub fn column_reading_tableau(shape: &SkewShape) -> StandardTableau {
    let mut values = BTreeMap::new();
    let mut next = 1u32;
    for comp in shape.components() {
        let mut cols: Vec<usize> = comp.iter().map(|c| c.1).collect();
        cols.sort_unstable();
        cols.dedup();
        for col in cols {
            let mut rows: Vec<usize> = comp.iter().filter(|c| c.1 == col).map(|c| c.0).collect();
            rows.sort_unstable();
            for r in rows {
                values.insert((r, col), next);
                next += 1;
            }
        }
    }
    StandardTableau::new(shape.clone(), values)
}

/// Row reading tableau: components northeast to southwest, rows top to bottom
/// within a component, left to right within a row.
pub fn row_reading_tableau(shape: &SkewShape) -> StandardTableau {
    let mut values = BTreeMap::new();
    let mut next = 1u32;
    for comp in shape.components().into_iter().rev() {
        let mut rows: Vec<usize> = comp.iter().map(|c| c.0).collect();
        rows.sort_unstable();
        rows.dedup();
        for row in rows {
            let mut cols: Vec<usize> = comp.iter().filter(|c| c.0 == row).map(|c| c.1).collect();
            cols.sort_unstable();
            for c in cols {
                values.insert((row, c), next);
                next += 1;
            }
        }
    }
    StandardTableau::new(shape.clone(), values)
}

// ---- the interval property ----

pub const INTERVAL_MAX_BOXES: usize = 7;

#[derive(Clone, Debug)]
pub struct IntervalReport {
    pub n_tableaux: usize,
    pub interval_size: usize,
    pub ok: bool,
}

/// Checks that L -> w_L is a bijection from standard tableaux onto the left
/// weak order interval [w_C, w_R].
pub fn verify_interval_bijection(shape: &SkewShape) -> Result<IntervalReport, ShapeError> {
    let n = shape.n_boxes();
    if n > INTERVAL_MAX_BOXES {
        return Err(ShapeError::ShapeTooLarge { n, max: INTERVAL_MAX_BOXES });
    }
    let tableaux = enumerate_standard_tableaux(shape);
    let words: BTreeSet<Permutation> = tableaux.iter().map(|t| t.bare_word()).collect();
    let wc = column_reading_tableau(shape).bare_word();
    let wr = row_reading_tableau(shape).bare_word();
    let interval: BTreeSet<Permutation> = Permutation::all(n)
        .into_iter()
        .filter(|w| left_weak_leq(&wc, w) && left_weak_leq(w, &wr))
        .collect();
    let ok = words == interval && words.len() == tableaux.len();
    Ok(IntervalReport { n_tableaux: tableaux.len(), interval_size: interval.len(), ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }

    fn shape(l: &str, m: &str) -> SkewShape {
        SkewShape::new(part(l), part(m)).unwrap()
    }

    fn rats(v: &[(i64, i64)]) -> Vec<BigRational> {
        v.iter().map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d))).collect()
    }

    #[test]
    fn partition_basics() {
        assert_eq!(part("3,2,1").size(), 6);
        assert!(part("3,2").contains(&part("2,2")));
        assert!(!part("3,2").contains(&part("1,1,1")));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(Partition::all_of(4).len(), 5);
        assert_eq!(Partition::all_of(6).len(), 11);
    }

    #[test]
    fn box_order_follows_diagonals() {
        let s = shape("2,2", "");
        assert_eq!(s.cells(), vec![(2, 1), (1, 1), (2, 2), (1, 2)]);
        let s = shape("3,1", "");
        assert_eq!(s.cells(), vec![(2, 1), (1, 1), (1, 2), (1, 3)]);
    }

    #[test]
    fn large_example_box_order_and_components() {
        let s = shape("9,7,7,4,2,1", "5,4,4,3");
        assert_eq!(s.n_boxes(), 14);
        let expect = vec![
            (6, 1),
            (5, 1),
            (5, 2),
            (4, 4),
            (3, 5),
            (2, 5),
            (3, 6),
            (2, 6),
            (3, 7),
            (1, 6),
            (2, 7),
            (1, 7),
            (1, 8),
            (1, 9),
        ];
        assert_eq!(s.cells(), expect);
        let comps = s.components();
        assert_eq!(comps.len(), 3);
        assert_eq!(comps[0].len(), 3);
        assert_eq!(comps[1], vec![(4, 4)]);
        assert_eq!(comps[2].len(), 10);
    }

    #[test]
    fn large_example_tableau_word() {
        let s = shape("9,7,7,4,2,1", "5,4,4,3");
        let entries: Vec<(Cell, u32)> = vec![
            ((6, 1), 11),
            ((5, 1), 6),
            ((5, 2), 8),
            ((4, 4), 2),
            ((3, 5), 7),
            ((2, 5), 1),
            ((3, 6), 13),
            ((2, 6), 5),
            ((1, 6), 3),
            ((3, 7), 14),
            ((2, 7), 10),
            ((1, 7), 4),
            ((1, 8), 9),
            ((1, 9), 12),
        ];
        let t = StandardTableau::new(s, entries.into_iter().collect());
        assert!(t.is_standard());
        assert_eq!(
            t.bare_word().images(),
            &[11, 6, 8, 2, 7, 1, 13, 5, 14, 3, 10, 4, 9, 12]
        );
    }

    #[test]
    fn large_example_placements() {
        let s = shape("9,7,7,4,2,1", "5,4,4,3");
        let integral = rats(&[
            (-7, 1),
            (-6, 1),
            (-5, 1),
            (-2, 1),
            (0, 1),
            (1, 1),
            (1, 1),
            (2, 1),
            (2, 1),
            (3, 1),
            (3, 1),
            (4, 1),
            (5, 1),
            (6, 1),
        ]);
        let p = PlacedSkewShape::new(s.clone(), integral.clone()).unwrap();
        assert_eq!(p.cells(), s.cells().as_slice());
        assert_eq!(p.contents(), integral.as_slice());
        assert_eq!(p.scale(), 1);

        let fractional = rats(&[
            (-7, 1),
            (-6, 1),
            (-5, 1),
            (-3, 2),
            (1, 2),
            (3, 2),
            (3, 2),
            (5, 2),
            (5, 2),
            (7, 2),
            (7, 2),
            (9, 2),
            (11, 2),
            (13, 2),
        ]);
        let p = PlacedSkewShape::new(s.clone(), fractional.clone()).unwrap();
        assert_eq!(p.cells(), s.cells().as_slice());
        assert_eq!(p.contents(), fractional.as_slice());
        assert_eq!(p.scale(), 2);
    }

    #[test]
    fn placement_rejections() {
        // Same content on different diagonals.
        let s = shape("2,2", "");
        assert!(matches!(
            PlacedSkewShape::new(s, rats(&[(0, 1), (0, 1), (1, 1), (1, 1)])),
            Err(ShapeError::PlacementViolation(_))
        ));
        // Adjacent diagonals must step by exactly one.
        let s = shape("2", "");
        assert!(PlacedSkewShape::new(s.clone(), rats(&[(0, 1), (5, 1)])).is_err());
        assert!(PlacedSkewShape::new(s, rats(&[(0, 1), (1, 1)])).is_ok());
        // Distant diagonals must not step by one.
        let s = shape("3,1", "2");
        assert!(PlacedSkewShape::new(s.clone(), rats(&[(0, 1), (1, 1)])).is_err());
        assert!(PlacedSkewShape::new(s, rats(&[(0, 1), (2, 1)])).is_ok());
        // Stretched placements stay monotone with the diagonal.
        let s = shape("3,2,1", "2,1");
        assert!(PlacedSkewShape::new(s.clone(), rats(&[(-4, 1), (0, 1), (4, 1)])).is_ok());
        assert!(PlacedSkewShape::new(s, rats(&[(4, 1), (0, 1), (-4, 1)])).is_err());
    }

    #[test]
    fn auto_contents_match_diagonals() {
        let p = PlacedSkewShape::auto(shape("3,2", "")).unwrap();
        let expect = rats(&[(-1, 1), (0, 1), (0, 1), (1, 1), (2, 1)]);
        // Bare order of (3,2): (2,1) (1,1) (2,2) (1,2) (1,3): diags -1,0,0,1,2.
        assert_eq!(p.contents(), expect.as_slice());
    }

    #[test]
    fn reading_tableaux_words() {
        let s = shape("2,2", "");
        assert_eq!(column_reading_tableau(&s).bare_word().images(), &[2, 1, 4, 3]);
        assert_eq!(row_reading_tableau(&s).bare_word().images(), &[3, 1, 4, 2]);
        let s = shape("3,1", "");
        assert_eq!(column_reading_tableau(&s).bare_word().images(), &[2, 1, 3, 4]);
        assert_eq!(row_reading_tableau(&s).bare_word().images(), &[4, 1, 2, 3]);
        let s = shape("4", "");
        assert!(column_reading_tableau(&s).bare_word().is_identity());
        assert!(row_reading_tableau(&s).bare_word().is_identity());
    }

    #[test]
    fn tableau_enumeration_counts() {
        assert_eq!(enumerate_standard_tableaux(&shape("2,1", "")).len(), 2);
        assert_eq!(enumerate_standard_tableaux(&shape("2,2", "")).len(), 2);
        assert_eq!(enumerate_standard_tableaux(&shape("3,1", "")).len(), 3);
        assert_eq!(enumerate_standard_tableaux(&shape("3,2,1", "")).len(), 16);
        // Three disconnected boxes: every filling is standard.
        assert_eq!(enumerate_standard_tableaux(&shape("3,2,1", "2,1")).len(), 6);
        let ts = enumerate_standard_tableaux(&shape("2,2", ""));
        assert_eq!(ts[0].bare_word().images(), &[2, 1, 4, 3]);
        assert_eq!(ts[1].bare_word().images(), &[3, 1, 4, 2]);
    }

    #[test]
    fn permutation_algebra() {
        let w = Permutation::from_images(vec![3, 1, 4, 2]);
        assert_eq!(w.length(), 3);
        assert_eq!(w.lexmin_reduced_word(), vec![2, 1, 3]);
        assert_eq!(Permutation::from_word(4, &[2, 1, 3]), w);
        assert_eq!(w.compose(&w.inverse()), Permutation::identity(4));
        let u = Permutation::from_word(4, &[1]);
        let v = Permutation::from_word(4, &[1, 2]);
        assert!(bruhat_leq(&u, &v));
        assert!(!left_weak_leq(&u, &v));
        assert!(left_weak_leq(&Permutation::from_word(4, &[2]), &v));
    }

    #[test]
    fn bruhat_and_weak_order_differ_on_hook_interval() {
        // For (3,1) the Bruhat interval [s_1, s_3 s_2 s_1] strictly contains
        // the three tableau words; the left weak interval is exactly them.
        let w_top = Permutation::from_images(vec![4, 1, 2, 3]);
        let stray = Permutation::from_images(vec![2, 1, 4, 3]);
        assert!(bruhat_leq(&stray, &w_top));
        assert!(!left_weak_leq(&stray, &w_top));
        let report = verify_interval_bijection(&shape("3,1", "")).unwrap();
        assert!(report.ok);
        assert_eq!(report.n_tableaux, 3);
    }

    #[test]
    fn interval_bijection_small_shapes() {
        for (l, m) in [("2,2", ""), ("3,2", ""), ("2,2,1", ""), ("3,2", "2"), ("3,2,1", "2,1")] {
            let report = verify_interval_bijection(&shape(l, m)).unwrap();
            assert!(report.ok, "interval failed for {}/{}", l, m);
        }
        assert!(matches!(
            verify_interval_bijection(&shape("4,4", "")),
            Err(ShapeError::ShapeTooLarge { .. })
        ));
    }

    #[test]
    fn cell_set_recognizer() {
        let cells: BTreeSet<(i64, i64)> =
            [(0, 2), (1, 1), (1, 2), (2, 1), (2, 2)].into_iter().collect();
        let (s, off) = SkewShape::from_cells(&cells).unwrap();
        assert_eq!(s, shape("2,2,2", "1"));
        assert_eq!(off, (-1, 0));
        // Same-diagonal pair with nothing between is not a skew diagram.
        let bad: BTreeSet<(i64, i64)> = [(1, 1), (2, 2)].into_iter().collect();
        assert!(SkewShape::from_cells(&bad).is_none());
        // Interior empty row, allowed when the gap condition holds.
        let gap: BTreeSet<(i64, i64)> = [(1, 2), (1, 3), (3, 1)].into_iter().collect();
        let (s, off) = SkewShape::from_cells(&gap).unwrap();
        assert_eq!(s, shape("3,1,1", "1,1"));
        assert_eq!(off, (0, 0));
        // Row below overlapping the row above across an empty row is not.
        let bad: BTreeSet<(i64, i64)> = [(1, 1), (3, 1)].into_iter().collect();
        assert!(SkewShape::from_cells(&bad).is_none());
    }
}
