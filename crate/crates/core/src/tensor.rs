//! Weight multiplicities and tensor-product decomposition over a Levi factor.
//!
//! The Levi factor of a parabolic is reductive: a semisimple part on the
//! uncrossed nodes plus a centre. All computations here work on ambient
//! weight coordinates — the central components ride along unchanged
//! because they are orthogonal to the Levi root span, so Freudenthal's
//! recursion and Klimyk's formula apply verbatim.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};

use crate::error::Error;
use crate::lie::{q_int, CartanDatum, InvariantForm, Root, Weight};
use crate::parabolic::GradingReport;
use crate::{Result, Q, Z};

/// One isotypic component of a tensor product decomposition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IsotypicComponent {
    pub highest_weight: Weight,
    pub multiplicity: u32,
}

/// A root subsystem acting as the semisimple part of a Levi factor.
///
/// `from_report` restricts to the uncrossed nodes of a crossing; `full`
/// treats the whole algebra as its own Levi, which is how the plain
/// tensor calculus of a simple algebra is exercised.
#[derive(Debug, Clone)]
pub struct LeviContext {
    datum: CartanDatum,
    form: InvariantForm,
    nodes: Vec<usize>,
    positive: Vec<Root>,
    delta_levi: Weight,
}

impl LeviContext {
    pub fn from_report(report: &GradingReport, form: &InvariantForm) -> Self {
        Self::on_nodes(report.datum(), form, report.parabolic().uncrossed())
    }

    pub fn full(datum: &CartanDatum, form: &InvariantForm) -> Self {
        Self::on_nodes(datum, form, (0..datum.rank()).collect())
    }

    fn on_nodes(datum: &CartanDatum, form: &InvariantForm, nodes: Vec<usize>) -> Self {
        let positive: Vec<Root> = datum
            .positive_roots_cached()
            .iter()
            .filter(|r| {
                r.coords()
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || nodes.contains(&i))
            })
            .cloned()
            .collect();
        let mut half = Weight::zero(datum.rank());
        for r in &positive {
            half = half.add(&r.to_weight(datum));
        }
        let delta_levi = half.scaled(&Q::new(1.into(), 2.into()));
        LeviContext {
            datum: datum.clone(),
            form: form.clone(),
            nodes,
            positive,
            delta_levi,
        }
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn form(&self) -> &InvariantForm {
        &self.form
    }

    /// Active (uncrossed) simple nodes, zero-based.
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// Positive roots of the subsystem.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Half sum of the subsystem's positive roots.
    pub fn delta_levi(&self) -> &Weight {
        &self.delta_levi
    }

    /// (v, α_n∨) ≥ 0 for every active node n. In the fundamental basis the
    /// pairing is just the n-th coordinate.
    pub fn is_dominant(&self, v: &Weight) -> bool {
        self.nodes.iter().all(|&n| !v.coords()[n].is_negative())
    }

    pub fn is_dominant_integral(&self, v: &Weight) -> bool {
        self.nodes
            .iter()
            .all(|&n| !v.coords()[n].is_negative() && v.coords()[n].denom().is_one())
    }

    fn reflect_simple(&self, v: &Weight, node: usize) -> Weight {
        let k = v.coords()[node].clone();
        let alpha = self.datum.simple_root(node).to_weight(&self.datum);
        v.sub(&alpha.scaled(&k))
    }

    /// Bring `v` to the strictly dominant chamber of the subsystem.
    ///
    /// Returns the dominant representative and the sign of the Weyl element
    /// used, or `None` if `v` lies on a wall.
    pub fn dominate_strict(&self, v: &Weight) -> Option<(Weight, i32)> {
        let mut w = v.clone();
        let mut sign = 1i32;
        loop {
            let mut moved = false;
            for &n in &self.nodes {
                let c = &w.coords()[n];
                if c.is_zero() {
                    return None;
                }
                if c.is_negative() {
                    w = self.reflect_simple(&w, n);
                    sign = -sign;
                    moved = true;
                }
            }
            if !moved {
                return Some((w, sign));
            }
        }
    }

    /// Weight multiset of the irreducible with highest weight `lambda`,
    /// by Freudenthal's recursion on the subsystem. Central coordinates of
    /// `lambda` are carried through unchanged.
    pub fn weight_multiset(&self, lambda: &Weight) -> Result<Vec<(Weight, u64)>> {
        if !self.is_dominant_integral(lambda) {
            return Err(Error::NotLeviDominant(lambda.to_string()));
        }
        let lam_shift = lambda.add(&self.delta_levi);
        let lam_norm = self.form.norm_sq(&lam_shift);

        let mut known: BTreeMap<Weight, u64> = BTreeMap::new();
        known.insert(lambda.clone(), 1);
        let mut frontier: Vec<Weight> = vec![lambda.clone()];
        let simple_weights: Vec<Weight> = self
            .nodes
            .iter()
            .map(|&n| self.datum.simple_root(n).to_weight(&self.datum))
            .collect();

        while !frontier.is_empty() {
            let mut next: Vec<Weight> = Vec::new();
            for parent in &frontier {
                for sw in &simple_weights {
                    let nu = parent.sub(sw);
                    if known.contains_key(&nu) {
                        continue;
                    }
                    let m = self.freudenthal_step(&nu, &lam_norm, &known);
                    known.insert(nu.clone(), m);
                    if m > 0 {
                        next.push(nu);
                    }
                }
            }
            next.sort();
            next.dedup();
            frontier = next;
        }

        Ok(known.into_iter().filter(|(_, m)| *m > 0).collect())
    }

    fn freudenthal_step(&self, nu: &Weight, lam_norm: &Q, known: &BTreeMap<Weight, u64>) -> u64 {
        let nu_shift = nu.add(&self.delta_levi);
        let denom = lam_norm - self.form.norm_sq(&nu_shift);
        let mut numer = Q::zero();
        for alpha in &self.positive {
            let alpha_w = alpha.to_weight(&self.datum);
            let mut t = 1i64;
            loop {
                let up = nu.add(&alpha_w.scaled(&q_int(t)));
                // anything never visited has multiplicity zero and every
                // higher weight was visited before nu
                let m = match known.get(&up) {
                    Some(&m) => m,
                    None => break,
                };
                if m > 0 {
                    numer += q_int(m as i64) * self.form.pair_root(&up, alpha);
                }
                t += 1;
            }
        }
        numer *= q_int(2);
        if denom.is_zero() {
            debug_assert!(numer.is_zero());
            return 0;
        }
        let m = numer / denom;
        debug_assert!(m.denom().is_one() && !m.is_negative());
        u64::try_from(m.numer().clone()).unwrap_or(0)
    }

    /// Dimension of the irreducible with highest weight `lambda`, by the
    /// Weyl dimension formula on the subsystem (exact).
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<Z> {
        if !self.is_dominant(lambda) {
            return Err(Error::NotLeviDominant(lambda.to_string()));
        }
        let shifted = lambda.add(&self.delta_levi);
        let mut dim = Q::one();
        for alpha in &self.positive {
            dim *=
                self.form.pair_root(&shifted, alpha) / self.form.pair_root(&self.delta_levi, alpha);
        }
        debug_assert!(dim.denom().is_one());
        Ok(dim.numer().clone())
    }

    /// Klimyk's formula: decompose V_λ ⊗ M where `module_weights` is the full
    /// weight multiset of M. Each weight ν contributes the sign-corrected
    /// dominant representative of λ+ν+δ_levi; wall hits drop out.
    pub fn klimyk(
        &self,
        lambda: &Weight,
        module_weights: &[(Weight, u64)],
    ) -> Result<Vec<IsotypicComponent>> {
        if !self.is_dominant_integral(lambda) {
            return Err(Error::NotLeviDominant(lambda.to_string()));
        }
        let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
        for (nu, mult) in module_weights {
            let t = lambda.add(nu).add(&self.delta_levi);
            if let Some((dom, sign)) = self.dominate_strict(&t) {
                let mu = dom.sub(&self.delta_levi);
                *acc.entry(mu).or_insert(0) += sign as i64 * *mult as i64;
            }
        }
        let mut out = Vec::new();
        for (mu, m) in acc {
            if m < 0 {
                return Err(Error::InternalAssertion(format!(
                    "negative multiplicity {m} for component {mu}"
                )));
            }
            if m > 0 {
                out.push(IsotypicComponent {
                    highest_weight: mu,
                    multiplicity: m as u32,
                });
            }
        }
        Ok(out)
    }
}

/// Decompose a tensor factor against V_λ over the Levi factor of a crossing.
///
/// `module_weights` must be the full weight multiset (with multiplicities)
/// of the factor, e.g. from [`LeviContext::weight_multiset`] or the negated
/// root list of an f* component.
pub fn klimyk_decompose(
    lambda: &Weight,
    module_weights: &[(Weight, u64)],
    report: &GradingReport,
    form: &InvariantForm,
) -> Result<Vec<IsotypicComponent>> {
    LeviContext::from_report(report, form).klimyk(lambda, module_weights)
}
