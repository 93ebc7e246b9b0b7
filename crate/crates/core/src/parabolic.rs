//! Gradings induced by crossed Dynkin diagrams.
//!
//! Crossing a nonempty node set S_× turns the positive system into a
//! |k|-grading: the height of a root is the sum of its coordinates over
//! the crossed nodes, the Levi factor collects the height-0 roots, and
//! f* is the height-1 layer of the nilradical. The grading element is
//! represented by its pairing functional (the crossed coordinate sum),
//! never as a matrix.

use std::collections::BTreeSet;

use num::{Signed, Zero};

use crate::error::Error;
use crate::lie::{CartanDatum, InvariantForm, Root, Weight};
use crate::{Result, Q};

/// A simple algebra together with a nonempty crossed node set (1-based
/// externally, stored 0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParabolicDatum {
    datum: CartanDatum,
    crossed: BTreeSet<usize>,
}

impl ParabolicDatum {
    /// `crossed` uses 1-based node indices, as in the CLI `--cross` flag.
    pub fn new(datum: CartanDatum, crossed: &[usize]) -> Result<Self> {
        let rank = datum.rank();
        if crossed.is_empty() || crossed.iter().any(|&c| c == 0 || c > rank) {
            return Err(Error::BadCrossing { rank });
        }
        Ok(ParabolicDatum {
            datum,
            crossed: crossed.iter().map(|&c| c - 1).collect(),
        })
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    /// Zero-based crossed node indices, sorted.
    pub fn crossed(&self) -> impl Iterator<Item = usize> + '_ {
        self.crossed.iter().copied()
    }

    pub fn is_crossed(&self, node: usize) -> bool {
        self.crossed.contains(&node)
    }

    /// Zero-based uncrossed node indices, sorted.
    pub fn uncrossed(&self) -> Vec<usize> {
        (0..self.datum.rank())
            .filter(|i| !self.crossed.contains(i))
            .collect()
    }

    /// Height of a root: its coordinate sum over crossed nodes.
    pub fn root_height(&self, root: &Root) -> i64 {
        self.crossed.iter().map(|&i| root.coords()[i]).sum()
    }
}

/// The |k|-grading induced by a crossing: depth, layers, Levi data, δ₀.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingReport {
    pd: ParabolicDatum,
    depth: usize,
    layers: Vec<Vec<Root>>,
    levi_roots: Vec<Root>,
    delta0: Weight,
}

impl GradingReport {
    pub fn parabolic(&self) -> &ParabolicDatum {
        &self.pd
    }

    pub fn datum(&self) -> &CartanDatum {
        self.pd.datum()
    }

    /// Largest j with g_j ≠ 0.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// Positive roots of height j (1-based layer index); g_{-j} is the
    /// negative mirror.
    pub fn layer(&self, j: usize) -> &[Root] {
        &self.layers[j - 1]
    }

    pub fn layers(&self) -> &[Vec<Root>] {
        &self.layers
    }

    /// Positive roots of the Levi factor (height 0).
    pub fn levi_roots(&self) -> &[Root] {
        &self.levi_roots
    }

    /// Half sum of the Levi positive roots.
    pub fn delta0(&self) -> &Weight {
        &self.delta0
    }

    pub fn height_of(&self, root: &Root) -> i64 {
        self.pd.root_height(root)
    }
}

/// Compute the full grading report for a crossing.
pub fn grading(pd: &ParabolicDatum, _form: &InvariantForm) -> GradingReport {
    let datum = pd.datum();
    let mut layers: Vec<Vec<Root>> = Vec::new();
    let mut levi_roots = Vec::new();
    for root in datum.positive_roots_cached() {
        let h = pd.root_height(root);
        debug_assert!(h >= 0);
        if h == 0 {
            levi_roots.push(root.clone());
        } else {
            let h = h as usize;
            if layers.len() < h {
                layers.resize(h, Vec::new());
            }
            layers[h - 1].push(root.clone());
        }
    }
    let depth = layers.len();
    debug_assert!(depth > 0, "crossing is nonempty, so the depth is positive");
    let mut half_sum = Weight::zero(datum.rank());
    for r in &levi_roots {
        half_sum = half_sum.add(&r.to_weight(datum));
    }
    let delta0 = half_sum.scaled(&Q::new(1.into(), 2.into()));
    GradingReport {
        pd: pd.clone(),
        depth,
        layers,
        levi_roots,
        delta0,
    }
}

/// The height-1 roots: directions α with g_α ⊂ f*.
pub fn f_star_roots(report: &GradingReport) -> Vec<Root> {
    report.layer(1).to_vec()
}

/// Half sum of the Levi positive roots.
pub fn delta0(report: &GradingReport, _form: &InvariantForm) -> Weight {
    report.delta0.clone()
}

/// One irreducible Levi component of f*, indexed by its crossed node.
///
/// The component collects the height-1 roots supported on one crossed
/// node; as a Levi module its weights are the negatives of those roots,
/// with highest weight −β for the crossed simple root β.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FStarComponent {
    /// Zero-based crossed node carrying this component.
    pub crossed_node: usize,
    /// Height-1 roots with unit coordinate on `crossed_node`.
    pub roots: Vec<Root>,
    /// Highest weight of the component as a Levi module: −β_i.
    pub highest_weight: Weight,
}

impl FStarComponent {
    /// Weight multiset of the component: negated height-1 roots, each
    /// with multiplicity one.
    pub fn weights(&self, datum: &CartanDatum) -> Vec<Weight> {
        self.roots
            .iter()
            .map(|r| Weight::zero(datum.rank()).sub(&r.to_weight(datum)))
            .collect()
    }

    pub fn dim(&self) -> usize {
        self.roots.len()
    }
}

/// Irreducible Levi components of f*, one per crossed node, ordered by node.
///
/// A height-1 root has coordinate 1 on exactly one crossed node and 0 on
/// the others, and Levi reflections preserve crossed coordinates, so the
/// grouping by supporting node is exactly the grouping by Levi orbit.
pub fn f_star_components(report: &GradingReport) -> Vec<FStarComponent> {
    let datum = report.datum();
    report
        .parabolic()
        .crossed()
        .map(|node| {
            let roots: Vec<Root> = report
                .layer(1)
                .iter()
                .filter(|r| r.coords()[node] == 1)
                .cloned()
                .collect();
            debug_assert!(!roots.is_empty());
            let beta = datum.simple_root(node);
            let highest_weight = Weight::zero(datum.rank()).sub(&beta.to_weight(datum));
            FStarComponent {
                crossed_node: node,
                roots,
                highest_weight,
            }
        })
        .collect()
}

/// True iff (v, α∨) is a nonnegative integer for every uncrossed simple α.
///
/// Fails on non-integral input.
pub fn is_p_dominant(v: &Weight, report: &GradingReport) -> Result<bool> {
    if !v.is_integral() {
        return Err(Error::NonIntegralWeight(v.to_string()));
    }
    Ok(report
        .parabolic()
        .uncrossed()
        .iter()
        .all(|&i| !v.coords()[i].is_negative()))
}

/// Eigenvalue of the grading element on a weight: the crossed coordinate
/// sum after conversion to the simple-root basis. Linear; equals the
/// height on roots.
pub fn geometric_weight(v: &Weight, report: &GradingReport) -> Q {
    let rc = report.datum().weight_to_root_coords(v);
    report
        .parabolic()
        .crossed()
        .fold(Q::zero(), |acc, i| acc + &rc[i])
}
