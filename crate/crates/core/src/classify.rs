//! Existence classification of standard invariant operators and the
//! labelled BGG Hasse graphs of the example geometries.
//!
//! An operator of order k from V_λ to V_μ = V_{λ+kα} exists whenever α is
//! a long height-1 direction, k = −(λ+δ,α∨) is a positive integer and both
//! weights are p-dominant. Hasse edges run from lower to higher Bruhat
//! length; the (λ,μ) roles in the order formula are swapped per edge so
//! that k comes out positive.

use num::{One, Signed, Zero};

use crate::casimir::{ladder, psi_eigenvalue};
use crate::error::Error;
use crate::lie::{coroot_pairing, delta, q_int, InvariantForm, LengthClass, Root, Weight};
use crate::parabolic::{is_p_dominant, GradingReport};
use crate::{weyl_orbit, Result, Q};

/// Default Weyl-orbit cap; the largest rank-6 Weyl group fits exactly.
pub const DEFAULT_WEYL_CAP: usize = 51_840;

/// Why a direction fails the existence test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectReason {
    /// g_α is not contained in f*.
    HeightNotOne { height: i64 },
    /// α is short and the construction requires a long root.
    ShortRoot,
    /// k = −(λ+δ,α∨) is zero or negative.
    KNonPositive { k: Q },
    /// k = −(λ+δ,α∨) is not an integer.
    KNonInteger { k: Q },
    /// λ + kα is not p-dominant.
    TargetNotDominant { target: Weight },
}

impl std::fmt::Display for RejectReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RejectReason::HeightNotOne { height } => write!(f, "height {height} != 1"),
            RejectReason::ShortRoot => write!(f, "short root"),
            RejectReason::KNonPositive { k } => write!(f, "k = {k} <= 0"),
            RejectReason::KNonInteger { k } => write!(f, "k = {k} not an integer"),
            RejectReason::TargetNotDominant { target } => {
                write!(f, "target {target} not p-dominant")
            }
        }
    }
}

/// A classified standard operator: source, target, direction, order and
/// the per-step Ψ eigenvalue ladder (which telescopes to zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorDescriptor {
    pub source: Weight,
    pub target: Weight,
    pub direction: Root,
    pub order: i64,
    pub eigen_ladder: Vec<Q>,
    /// The long/height-1 rule held, so the operator is produced by the
    /// universal construction.
    pub constructed: bool,
}

/// Outcome of `classify_pair`: a descriptor or a machine-readable reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Operator(OperatorDescriptor),
    Rejected(RejectReason),
}

impl Classification {
    pub fn operator(&self) -> Option<&OperatorDescriptor> {
        match self {
            Classification::Operator(d) => Some(d),
            Classification::Rejected(_) => None,
        }
    }
}

/// Test a (λ, α) pair against the four existence conditions.
pub fn classify_pair(
    lambda: &Weight,
    alpha: &Root,
    report: &GradingReport,
    form: &InvariantForm,
) -> Result<Classification> {
    if !lambda.is_integral() {
        return Err(Error::NonIntegralWeight(lambda.to_string()));
    }
    if !is_p_dominant(lambda, report)? {
        return Err(Error::NotPDominant(lambda.to_string()));
    }
    if !form.datum().is_root(alpha) || alpha.coords().iter().any(|&c| c < 0) {
        return Err(Error::NotARoot(alpha.to_string()));
    }

    // k decides whether any operator can sit in this direction at all, so
    // it is diagnosed first; height and length are the construction gates
    let d = delta(form.datum());
    let k = -coroot_pairing(&lambda.add(&d), alpha, form);
    if !k.denom().is_one() {
        return Ok(Classification::Rejected(RejectReason::KNonInteger { k }));
    }
    if !k.is_positive() {
        return Ok(Classification::Rejected(RejectReason::KNonPositive { k }));
    }
    let height = report.height_of(alpha);
    if height != 1 {
        return Ok(Classification::Rejected(RejectReason::HeightNotOne {
            height,
        }));
    }
    if alpha.length_class() == LengthClass::Short {
        return Ok(Classification::Rejected(RejectReason::ShortRoot));
    }
    let k_int = i64::try_from(k.numer().clone()).expect("operator order fits in i64");
    let target = lambda.add(&alpha.to_weight(form.datum()).scaled(&k));
    if !is_p_dominant(&target, report)? {
        return Ok(Classification::Rejected(RejectReason::TargetNotDominant {
            target,
        }));
    }

    let eigen_ladder = ladder(lambda, alpha, k_int, form);
    Ok(Classification::Operator(OperatorDescriptor {
        source: lambda.clone(),
        target,
        direction: alpha.clone(),
        order: k_int,
        eigen_ladder,
        constructed: true,
    }))
}

/// Edge rendering style; full arrows are the constructed operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeStyle {
    Full,
    Dotted,
}

/// Annotation for edges outside the construction but known to exist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeNote {
    /// Order-1 operators along short directions exist by the general
    /// first-order theory even though the long-root construction skips them.
    FirstOrderBySlso,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseEdge {
    pub from: usize,
    pub to: usize,
    pub label: Root,
    pub order: i64,
    pub constructed: bool,
    pub style: EdgeStyle,
    pub note: Option<EdgeNote>,
}

/// Labelled BGG Hasse graph: p-dominant shifted-orbit weights with
/// single-reflection, length-increasing edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseGraph {
    pub vertices: Vec<(Weight, usize)>,
    pub edges: Vec<HasseEdge>,
}

impl HasseGraph {
    /// Number of vertices per Bruhat length.
    pub fn level_sizes(&self) -> Vec<usize> {
        let max = self.vertices.iter().map(|(_, l)| *l).max().unwrap_or(0);
        let mut sizes = vec![0usize; max + 1];
        for (_, l) in &self.vertices {
            sizes[*l] += 1;
        }
        sizes
    }
}

/// BGG vertices for a g-dominant seed Λ: the p-dominant weights in
/// {w(Λ+δ) − δ}, each with its inversion-count length.
pub fn bgg_vertices(
    seed: &Weight,
    report: &GradingReport,
    form: &InvariantForm,
    cap: usize,
) -> Result<Vec<(Weight, usize)>> {
    if !seed.is_integral() {
        return Err(Error::NonIntegralWeight(seed.to_string()));
    }
    if seed.coords().iter().any(|c| c.is_negative()) {
        return Err(Error::NotGDominant(seed.to_string()));
    }
    let datum = form.datum();
    let d = delta(datum);
    let orbit = weyl_orbit(&seed.add(&d), datum, form, cap)?;
    let positive = datum.positive_roots_cached();
    let mut vertices: Vec<(Weight, usize)> = Vec::new();
    for x in orbit {
        let v = x.sub(&d);
        if is_p_dominant(&v, report)? {
            let length = positive
                .iter()
                .filter(|beta| coroot_pairing(&x, beta, form).is_negative())
                .count();
            vertices.push((v, length));
        }
    }
    vertices.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    Ok(vertices)
}

/// Connect BGG vertices: an edge for every length-increasing single
/// reflection, labelled with its direction root and operator order.
pub fn bgg_edges(
    vertices: &[(Weight, usize)],
    report: &GradingReport,
    form: &InvariantForm,
) -> HasseGraph {
    let datum = form.datum();
    let d = delta(datum);
    let positive = datum.positive_roots_cached();
    let mut edges = Vec::new();
    for (i, (from, lf)) in vertices.iter().enumerate() {
        for (j, (to, lt)) in vertices.iter().enumerate() {
            if *lt != lf + 1 {
                continue;
            }
            let shifted = from.add(&d);
            for alpha in positive {
                let k = coroot_pairing(&shifted, alpha, form);
                if !k.is_positive() {
                    continue;
                }
                let image = shifted.sub(&alpha.to_weight(datum).scaled(&k));
                if image != to.add(&d) {
                    continue;
                }
                debug_assert!(k.denom().is_one());
                let order = i64::try_from(k.numer().clone()).expect("edge order fits in i64");
                let long = alpha.is_long();
                let constructed = long && report.height_of(alpha) == 1;
                let note = (!long && order == 1).then_some(EdgeNote::FirstOrderBySlso);
                edges.push(HasseEdge {
                    from: i,
                    to: j,
                    label: alpha.clone(),
                    order,
                    constructed,
                    style: if constructed {
                        EdgeStyle::Full
                    } else {
                        EdgeStyle::Dotted
                    },
                    note,
                });
                break;
            }
        }
    }
    HasseGraph {
        vertices: vertices.to_vec(),
        edges,
    }
}

/// Recomputed eigenvalue ladder of a descriptor, with its (zero) sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TelescopingReport {
    pub ladder: Vec<Q>,
    pub sum: Q,
}

/// Recompute the Ψ eigenvalue ladder of a classified operator and check
/// that it telescopes to exactly zero.
pub fn telescoping_report(
    desc: &OperatorDescriptor,
    form: &InvariantForm,
) -> Result<TelescopingReport> {
    let alpha_w = desc.direction.to_weight(form.datum());
    let mut ladder = Vec::with_capacity(desc.order as usize);
    for j in 1..=desc.order {
        let prev = desc.source.add(&alpha_w.scaled(&q_int(j - 1)));
        let next = desc.source.add(&alpha_w.scaled(&q_int(j)));
        ladder.push(psi_eigenvalue(&prev, &next, form));
    }
    let sum = ladder.iter().fold(Q::zero(), |acc, c| acc + c);
    if !sum.is_zero() {
        return Err(Error::InternalAssertion(format!(
            "eigenvalue ladder sums to {sum}, expected 0"
        )));
    }
    if ladder != desc.eigen_ladder {
        return Err(Error::InternalAssertion(
            "stored ladder disagrees with recomputation".to_string(),
        ));
    }
    Ok(TelescopingReport { ladder, sum })
}
