//! Root systems, invariant bilinear forms, Weyl reflections and orbits.
//!
//! Everything is exact: root coordinates are integers in the simple-root
//! basis, weights are rational vectors in the fundamental-weight basis,
//! and the invariant form is a rational Gram matrix normalized so that
//! long roots have squared length 2 at unit scale.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use crate::error::Error;
use crate::{Result, Q};

/// Simple Lie algebra series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Long/short classification of a root with respect to the form.
///
/// In simply-laced systems every root is long.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LengthClass {
    Long,
    Short,
}

/// A root in the simple-root basis. Coordinates of an actual root are
/// integers and share one sign.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coords: Vec<i64>,
    length: LengthClass,
}

impl Root {
    /// Coordinates in the simple-root basis.
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn length_class(&self) -> LengthClass {
        self.length
    }

    pub fn is_long(&self) -> bool {
        self.length == LengthClass::Long
    }

    /// Sum of the simple-root coordinates.
    pub fn coord_sum(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// The same root expressed in the fundamental-weight basis.
    pub fn to_weight(&self, datum: &CartanDatum) -> Weight {
        let r = datum.rank();
        let coords = (0..r)
            .map(|j| {
                let s: i64 = (0..r).map(|i| self.coords[i] * datum.cartan[i][j]).sum();
                q_int(s)
            })
            .collect();
        Weight { coords }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.unsigned_abs();
            if a != 1 {
                write!(f, "{a}")?;
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A weight in the fundamental-weight basis, with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<Q>,
}

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| q_int(c)).collect(),
        }
    }

    pub fn zero(rank: usize) -> Self {
        Weight {
            coords: vec![Q::zero(); rank],
        }
    }

    pub fn coords(&self) -> &[Q] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// True iff every fundamental coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.denom().is_one())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scaled(&self, factor: &Q) -> Weight {
        Weight {
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Cartan data for a simple algebra: series, rank, Cartan matrix and the
/// derived coordinate machinery (symmetrizer, basis conversion, root list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    series: Series,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    node_labels: Vec<String>,
    // (alpha_i, alpha_i)/2 at unit scale; 1 on long nodes.
    symmetrizer: Vec<Q>,
    // Inverse transpose of the Cartan matrix: fundamental -> simple-root coords.
    weight_to_root: Vec<Vec<Q>>,
    roots: Vec<Root>,
}

impl CartanDatum {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        check_rank(series, rank)?;
        let cartan = cartan_matrix(series, rank);
        let symmetrizer = symmetrizer(&cartan);
        let weight_to_root = invert_transpose(&cartan);
        let node_labels = (1..=rank).map(|i| format!("a{i}")).collect();
        let mut datum = CartanDatum {
            series,
            rank,
            cartan,
            node_labels,
            symmetrizer,
            weight_to_root,
            roots: Vec::new(),
        };
        datum.roots = close_positive_roots(&datum);
        Ok(datum)
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan matrix entry a_ij = 2(α_i,α_j)/(α_j,α_j), zero-based.
    pub fn cartan_entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn node_labels(&self) -> &[String] {
        &self.node_labels
    }

    /// Exact determinant of the Cartan matrix.
    pub fn cartan_determinant(&self) -> i64 {
        det_i64(&self.cartan)
    }

    /// Simple root α_i (zero-based index).
    pub fn simple_root(&self, i: usize) -> Root {
        let mut coords = vec![0i64; self.rank];
        coords[i] = 1;
        Root {
            length: length_of(self, &coords),
            coords,
        }
    }

    /// (α_i, α_i)/2 at unit scale.
    pub fn symmetrizer(&self) -> &[Q] {
        &self.symmetrizer
    }

    /// Express a weight in simple-root coordinates (exact).
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<Q> {
        (0..self.rank)
            .map(|i| {
                let mut acc = Q::zero();
                for j in 0..self.rank {
                    acc += &self.weight_to_root[i][j] * &w.coords[j];
                }
                acc
            })
            .collect()
    }

    /// Membership test against the full root system (either sign).
    pub fn is_root(&self, candidate: &Root) -> bool {
        let pos: Vec<i64> = if candidate.coords.iter().all(|&c| c <= 0) {
            candidate.coords.iter().map(|&c| -c).collect()
        } else {
            candidate.coords.clone()
        };
        self.roots.iter().any(|r| r.coords == pos)
    }

    pub(crate) fn positive_roots_cached(&self) -> &[Root] {
        &self.roots
    }
}

/// Invariant bilinear form: the Gram matrix of the simple roots scaled by
/// a nonzero rational. At unit scale long roots have squared length 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantForm {
    datum: CartanDatum,
    scale: Q,
    gram: Vec<Vec<Q>>,
}

impl InvariantForm {
    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn scale(&self) -> &Q {
        &self.scale
    }

    /// Scaled Gram matrix (α_i, α_j).
    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    /// (v, w) for two weights.
    pub fn pair(&self, v: &Weight, w: &Weight) -> Q {
        let wr = self.datum.weight_to_root_coords(w);
        let mut acc = Q::zero();
        for ((vc, d), wc) in v.coords.iter().zip(&self.datum.symmetrizer).zip(&wr) {
            acc += vc * d * wc;
        }
        acc * &self.scale
    }

    /// (v, α) for a weight and a root.
    pub fn pair_root(&self, v: &Weight, alpha: &Root) -> Q {
        let mut acc = Q::zero();
        for ((vc, d), &rc) in v
            .coords
            .iter()
            .zip(&self.datum.symmetrizer)
            .zip(&alpha.coords)
        {
            if rc != 0 {
                acc += vc * d * q_int(rc);
            }
        }
        acc * &self.scale
    }

    /// |v|² = (v, v).
    pub fn norm_sq(&self, v: &Weight) -> Q {
        self.pair(v, v)
    }

    /// (α, β) for two roots.
    #[allow(clippy::needless_range_loop)]
    pub fn pair_roots(&self, a: &Root, b: &Root) -> Q {
        let mut acc = Q::zero();
        for i in 0..self.datum.rank {
            for j in 0..self.datum.rank {
                if a.coords[i] != 0 && b.coords[j] != 0 {
                    acc += q_int(a.coords[i] * b.coords[j]) * &self.gram[i][j];
                }
            }
        }
        acc
    }

    /// |α|² for a root.
    pub fn root_norm_sq(&self, alpha: &Root) -> Q {
        self.pair_roots(alpha, alpha)
    }
}

/// Parse a Dynkin spec of the form `<letter><rank>`, e.g. `G2` or `A4`.
pub fn parse_dynkin(spec: &str) -> Result<CartanDatum> {
    let s = spec.trim();
    let mut chars = s.chars();
    let letter = chars
        .next()
        .ok_or_else(|| Error::BadDynkinSpec(spec.to_string()))?;
    let series = match letter.to_ascii_uppercase() {
        'A' => Series::A,
        'B' => Series::B,
        'C' => Series::C,
        'D' => Series::D,
        'E' => Series::E,
        'F' => Series::F,
        'G' => Series::G,
        _ => return Err(Error::UnknownSeries(letter.to_string())),
    };
    let rest = chars.as_str();
    let rank: usize = rest
        .parse()
        .map_err(|_| Error::BadDynkinSpec(spec.to_string()))?;
    CartanDatum::new(series, rank)
}

/// The full positive system in deterministic order: by height, then
/// lexicographically on simple-root coordinates.
pub fn positive_roots(datum: &CartanDatum) -> Vec<Root> {
    datum.roots.clone()
}

/// Invariant form with the given scale; at scale 1, (α,α) = 2 for long roots.
pub fn invariant_form(datum: &CartanDatum, scale: Q) -> Result<InvariantForm> {
    if scale.is_zero() {
        return Err(Error::ZeroScale);
    }
    let r = datum.rank;
    let gram = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| q_int(datum.cartan[i][j]) * &datum.symmetrizer[j] * &scale)
                .collect()
        })
        .collect();
    Ok(InvariantForm {
        datum: datum.clone(),
        scale,
        gram,
    })
}

/// Half sum of positive roots: the all-ones vector in the fundamental basis.
pub fn delta(datum: &CartanDatum) -> Weight {
    Weight {
        coords: vec![Q::one(); datum.rank],
    }
}

/// Coroot pairing (v, α∨) = 2(v,α)/(α,α); independent of the form scale.
pub fn coroot_pairing(v: &Weight, alpha: &Root, form: &InvariantForm) -> Q {
    let num = form.pair_root(v, alpha);
    let den = form.root_norm_sq(alpha);
    q_int(2) * num / den
}

/// Reflection σ_α(v) = v − (v,α∨)α, computed exactly.
pub fn reflect(v: &Weight, alpha: &Root, form: &InvariantForm) -> Result<Weight> {
    if !form.datum.is_root(alpha) {
        return Err(Error::NotARoot(alpha.to_string()));
    }
    Ok(reflect_unchecked(v, alpha, form))
}

pub(crate) fn reflect_unchecked(v: &Weight, alpha: &Root, form: &InvariantForm) -> Weight {
    let k = coroot_pairing(v, alpha, form);
    let aw = alpha.to_weight(&form.datum);
    v.sub(&aw.scaled(&k))
}

/// Full W-orbit of a weight, closed under simple reflections; sorted output.
///
/// Fails with `OrbitCapExceeded` if the orbit grows past `cap`.
pub fn weyl_orbit(
    v: &Weight,
    datum: &CartanDatum,
    form: &InvariantForm,
    cap: usize,
) -> Result<Vec<Weight>> {
    let simples: Vec<Root> = (0..datum.rank).map(|i| datum.simple_root(i)).collect();
    let mut seen: BTreeSet<Weight> = BTreeSet::new();
    seen.insert(v.clone());
    let mut queue: VecDeque<Weight> = VecDeque::new();
    queue.push_back(v.clone());
    while let Some(w) = queue.pop_front() {
        for s in &simples {
            let img = reflect_unchecked(&w, s, form);
            if seen.insert(img.clone()) {
                if seen.len() > cap {
                    return Err(Error::OrbitCapExceeded { cap });
                }
                queue.push_back(img);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

fn check_rank(series: Series, rank: usize) -> Result<()> {
    let (ok, expected) = match series {
        Series::A => (rank >= 1, "r >= 1"),
        Series::B => (rank >= 2, "r >= 2"),
        Series::C => (rank >= 3, "r >= 3"),
        Series::D => (rank >= 4, "r >= 4"),
        Series::E => ((6..=8).contains(&rank), "r in 6..=8"),
        Series::F => (rank == 4, "r = 4"),
        Series::G => (rank == 2, "r = 2"),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::RankOutOfRange {
            series: series.letter(),
            rank,
            expected,
        })
    }
}

fn cartan_matrix(series: Series, rank: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; rank]; rank];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match series {
        Series::A => {
            for i in 0..rank.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        Series::B => {
            for i in 0..rank - 1 {
                link(i, i + 1);
            }
            // last node short: a_{r-1,r} = -2
            a[rank - 2][rank - 1] = -2;
        }
        Series::C => {
            for i in 0..rank - 1 {
                link(i, i + 1);
            }
            // last node long: a_{r,r-1} = -2
            a[rank - 1][rank - 2] = -2;
        }
        Series::D => {
            for i in 0..rank - 2 {
                link(i, i + 1);
            }
            link(rank - 3, rank - 1);
        }
        Series::E => {
            // Bourbaki numbering: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
            link(0, 2);
            link(2, 3);
            link(3, 4);
            link(4, 5);
            link(1, 3);
            if rank >= 7 {
                link(5, 6);
            }
            if rank == 8 {
                link(6, 7);
            }
        }
        Series::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
            // double bond, nodes 3 and 4 short
            a[1][2] = -2;
        }
        Series::G => {
            // node 1 long, node 2 short
            a[0][1] = -3;
            a[1][0] = -1;
        }
    }
    a
}

/// d_i = (α_i,α_i)/2 at unit scale, normalized so long nodes get 1.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<Q> {
    let r = cartan.len();
    let mut d: Vec<Option<Q>> = vec![None; r];
    d[0] = Some(Q::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let di = d[i].clone().unwrap();
        for j in 0..r {
            if i != j && cartan[i][j] != 0 && d[j].is_none() {
                // a_ij d_j = a_ji d_i
                d[j] = Some(&di * q_int(cartan[j][i]) / q_int(cartan[i][j]));
                queue.push_back(j);
            }
        }
    }
    let mut d: Vec<Q> = d.into_iter().map(|x| x.unwrap()).collect();
    let max = d.iter().cloned().max().unwrap();
    for x in &mut d {
        *x /= &max;
    }
    d
}

#[allow(clippy::needless_range_loop)] // row pairs are indexed simultaneously
fn invert_transpose(cartan: &[Vec<i64>]) -> Vec<Vec<Q>> {
    let r = cartan.len();
    // m = cartan transposed, augmented with the identity
    let mut m: Vec<Vec<Q>> = (0..r)
        .map(|i| {
            let mut row: Vec<Q> = (0..r).map(|j| q_int(cartan[j][i])).collect();
            row.extend((0..r).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for col in 0..r {
        let pivot = (col..r)
            .find(|&i| !m[i][col].is_zero())
            .expect("Cartan matrix is invertible");
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for x in &mut m[col] {
            *x /= &p;
        }
        for i in 0..r {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..2 * r {
                    let sub = &m[col][j] * &f;
                    m[i][j] -= sub;
                }
            }
        }
    }
    m.into_iter().map(|row| row[r..].to_vec()).collect()
}

#[allow(clippy::needless_range_loop)]
fn det_i64(a: &[Vec<i64>]) -> i64 {
    let r = a.len();
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .map(|row| row.iter().map(|&x| q_int(x)).collect())
        .collect();
    let mut det = Q::one();
    for col in 0..r {
        let Some(pivot) = (col..r).find(|&i| !m[i][col].is_zero()) else {
            return 0;
        };
        if pivot != col {
            m.swap(col, pivot);
            det = -det;
        }
        det *= &m[col][col];
        let p = m[col][col].clone();
        for i in col + 1..r {
            if !m[i][col].is_zero() {
                let f = &m[i][col] / &p;
                for j in col..r {
                    let sub = &m[col][j] * &f;
                    m[i][j] -= sub;
                }
            }
        }
    }
    debug_assert!(det.denom().is_one());
    let n = det.numer();
    i64::try_from(n.clone()).expect("Cartan determinant fits in i64")
}

#[allow(clippy::needless_range_loop)]
fn length_of(datum: &CartanDatum, coords: &[i64]) -> LengthClass {
    let mut norm = Q::zero();
    for i in 0..datum.rank {
        for j in 0..datum.rank {
            if coords[i] != 0 && coords[j] != 0 {
                norm += q_int(coords[i] * coords[j])
                    * q_int(datum.cartan[i][j])
                    * &datum.symmetrizer[j];
            }
        }
    }
    if norm == q_int(2) {
        LengthClass::Long
    } else {
        LengthClass::Short
    }
}

fn close_positive_roots(datum: &CartanDatum) -> Vec<Root> {
    let r = datum.rank;
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..r {
        let mut c = vec![0i64; r];
        c[i] = 1;
        seen.insert(c.clone());
        queue.push_back(c);
    }
    while let Some(b) = queue.pop_front() {
        for j in 0..r {
            let pairing: i64 = (0..r).map(|i| b[i] * datum.cartan[i][j]).sum();
            let mut nb = b.clone();
            nb[j] -= pairing;
            if seen.insert(nb.clone()) {
                queue.push_back(nb);
            }
        }
    }
    let mut roots: Vec<Root> = seen
        .into_iter()
        .filter(|c| c.iter().all(|&x| x >= 0) && c.iter().any(|&x| x > 0))
        .map(|coords| Root {
            length: length_of(datum, &coords),
            coords,
        })
        .collect();
    roots.sort_by(|a, b| {
        a.coord_sum()
            .cmp(&b.coord_sum())
            .then_with(|| a.coords.cmp(&b.coords))
    });
    roots
}

pub(crate) fn q_int(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

/// Parse a rational like `-2`, `7/3`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Q::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Q::from_integer(n))
    }
}
