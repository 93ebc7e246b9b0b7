//! Symbolic expansion of the universal order-k operator formulae.
//!
//! The order-k operator is generated by the two-term recurrence
//!
//! ```text
//! R(k, j+1) = D ∘ R(k, j) + j(k−j) Γ ⊗ R(k, j−1),   R(k,0) = id, R(k,1) = D
//! ```
//!
//! and the fully expanded result is a sum of nested words
//! D^{a0}(Γ D^{a1}(Γ … D^{am} s)) with positive integer coefficients. A
//! word is encoded as the composition (a0, …, am); each Γ insertion
//! consumes two derivative orders, so Σaᵢ + 2m = k.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};

use crate::error::Error;
use crate::{Result, Z};

/// Default cap on the expansion order.
pub const DEFAULT_ORDER_CAP: u32 = 32;

/// What the Γ symbol stands for in the expanded formulae.
pub const GAMMA_SEMANTICS: &str = "G = -(1/2)|alpha|^2 r, the curvature correction tensor; \
scaling the form so that -(1/2)|alpha|^2 = 1 makes G = r";

/// One nested word with its positive integer coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaTerm {
    pub coeff: Z,
    /// Composition (a0, …, am): m Γ insertions, aᵢ derivatives per slot.
    pub word: Vec<u32>,
}

impl UniversalFormula {
    /// What Γ stands for under the chosen normalization.
    pub fn gamma_semantics(&self) -> &'static str {
        GAMMA_SEMANTICS
    }
}

impl FormulaTerm {
    /// Number of Γ insertions.
    pub fn gamma_degree(&self) -> usize {
        self.word.len() - 1
    }

    /// Σaᵢ + 2m, the total derivative order of the word.
    pub fn total_order(&self) -> u32 {
        self.word.iter().sum::<u32>() + 2 * (self.word.len() as u32 - 1)
    }
}

/// Canonical expanded form of the order-k operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalFormula {
    pub order: u32,
    /// Terms grouped by Γ-degree, descending lexicographic within a group.
    pub terms: Vec<FormulaTerm>,
}

/// Output formats for [`render`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Latex,
    Json,
}

fn term_key(word: &[u32]) -> (usize, Vec<i64>) {
    // descending lex realized by negating coordinates under ascending sort
    (word.len(), word.iter().map(|&a| -(a as i64)).collect())
}

fn collect_terms(map: BTreeMap<Vec<u32>, Z>) -> Vec<FormulaTerm> {
    let mut terms: Vec<FormulaTerm> = map
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(word, coeff)| FormulaTerm { coeff, word })
        .collect();
    terms.sort_by_key(|t| term_key(&t.word));
    terms
}

/// The intermediate operators R(k, j) for j = 0..=k, fully expanded.
pub fn expand_rows(k: u32, cap: u32) -> Result<Vec<Vec<FormulaTerm>>> {
    if k > cap {
        return Err(Error::OrderCapExceeded { order: k, cap });
    }
    let rows = raw_rows(k);
    Ok(rows.into_iter().map(collect_terms).collect())
}

fn raw_rows(k: u32) -> Vec<BTreeMap<Vec<u32>, Z>> {
    let mut rows: Vec<BTreeMap<Vec<u32>, Z>> = Vec::with_capacity(k as usize + 1);
    rows.push(BTreeMap::from([(vec![0u32], Z::one())]));
    if k == 0 {
        return rows;
    }
    rows.push(BTreeMap::from([(vec![1u32], Z::one())]));
    for j in 1..k {
        let mut next: BTreeMap<Vec<u32>, Z> = BTreeMap::new();
        for (word, coeff) in &rows[j as usize] {
            let mut w = word.clone();
            w[0] += 1;
            *next.entry(w).or_insert_with(Z::zero) += coeff;
        }
        let factor = BigInt::from(j) * BigInt::from(k - j);
        for (word, coeff) in &rows[(j - 1) as usize] {
            let mut w = Vec::with_capacity(word.len() + 1);
            w.push(0);
            w.extend_from_slice(word);
            *next.entry(w).or_insert_with(Z::zero) += coeff * &factor;
        }
        rows.push(next);
    }
    rows
}

/// Expand the order-k universal formula with the default cap.
pub fn expand_dk(k: u32) -> Result<UniversalFormula> {
    expand_dk_capped(k, DEFAULT_ORDER_CAP)
}

pub fn expand_dk_capped(k: u32, cap: u32) -> Result<UniversalFormula> {
    let mut rows = expand_rows(k, cap)?;
    let terms = rows.pop().expect("rows are never empty");
    Ok(UniversalFormula { order: k, terms })
}

fn dpow(a: u32, latex: bool) -> String {
    match (a, latex) {
        (1, _) => "D".to_string(),
        (n, false) => format!("D^{n}"),
        (n, true) => format!("D^{{{n}}}"),
    }
}

fn gpow(g: u32, latex: bool) -> String {
    let sym = if latex { "\\Gamma" } else { "G" };
    match (g, latex) {
        (1, _) => sym.to_string(),
        (n, false) => format!("{sym}^{n}"),
        (n, true) => format!("{sym}^{{{n}}}"),
    }
}

fn render_word(word: &[u32], latex: bool) -> String {
    let m = word.len() - 1;
    let mut out = String::new();
    let mut open = 0;
    let mut i = 0;
    while i < m {
        if word[i] > 0 {
            out.push_str(&dpow(word[i], latex));
            out.push('(');
            open += 1;
        }
        let mut run = 1;
        while i + run < m && word[i + run] == 0 {
            run += 1;
        }
        out.push_str(&gpow(run as u32, latex));
        out.push(' ');
        i += run;
    }
    let tail = word[m];
    if tail > 0 {
        out.push_str(&dpow(tail, latex));
        if tail > 1 {
            out.push(' ');
        }
    }
    out.push('s');
    for _ in 0..open {
        out.push(')');
    }
    out
}

fn render_sum(f: &UniversalFormula, latex: bool) -> String {
    let mut parts = Vec::with_capacity(f.terms.len());
    for t in &f.terms {
        let w = render_word(&t.word, latex);
        if t.coeff.is_one() {
            parts.push(w);
        } else {
            parts.push(format!("{} {}", t.coeff, w));
        }
    }
    parts.join(" + ")
}

/// Render a formula as plain text, a LaTeX align-environment body, or JSON.
pub fn render(f: &UniversalFormula, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => render_sum(f, false),
        RenderFormat::Latex => format!(
            "\\mathcal{{D}}_{{{}}} s &= {}",
            f.order,
            render_sum(f, true)
        ),
        RenderFormat::Json => to_json(f).to_string(),
    }
}

/// JSON form: `{schema, order, gamma, terms: [{coeff, word}]}` with
/// string-encoded coefficients (they outgrow fixed-width integers).
pub fn to_json(f: &UniversalFormula) -> serde_json::Value {
    serde_json::json!({
        "schema": "standop.formula/1",
        "order": f.order,
        "gamma": GAMMA_SEMANTICS,
        "terms": f.terms.iter().map(|t| {
            serde_json::json!({
                "coeff": t.coeff.to_string(),
                "word": t.word,
            })
        }).collect::<Vec<_>>(),
    })
}

/// Parse the JSON produced by [`to_json`].
pub fn from_json(s: &str) -> Result<UniversalFormula> {
    let bad = |m: &str| Error::InternalAssertion(format!("formula json: {m}"));
    let v: serde_json::Value =
        serde_json::from_str(s).map_err(|e| bad(&format!("parse error: {e}")))?;
    let order = v["order"].as_u64().ok_or_else(|| bad("missing order"))? as u32;
    let mut terms = Vec::new();
    for t in v["terms"].as_array().ok_or_else(|| bad("missing terms"))? {
        let coeff: Z = t["coeff"]
            .as_str()
            .and_then(|c| c.parse().ok())
            .ok_or_else(|| bad("bad coeff"))?;
        let word: Vec<u32> = t["word"]
            .as_array()
            .ok_or_else(|| bad("bad word"))?
            .iter()
            .map(|a| a.as_u64().map(|x| x as u32))
            .collect::<Option<_>>()
            .ok_or_else(|| bad("bad word entry"))?;
        terms.push(FormulaTerm { coeff, word });
    }
    Ok(UniversalFormula { order, terms })
}

/// Factorization witness for one nonlinear term: the operand order of
/// each Γ together with the matching linear-term coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationEntry {
    pub term: FormulaTerm,
    pub factors: Vec<(u32, Z)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationReport {
    pub order: u32,
    pub entries: Vec<FactorizationEntry>,
}

/// Operand orders of the Γ insertions of a word, innermost last.
fn gamma_operand_orders(word: &[u32]) -> Vec<u32> {
    let m = word.len() - 1;
    (1..=m)
        .map(|i| word[i..].iter().sum::<u32>() + 2 * (m - i) as u32)
        .collect()
}

/// Check that every coefficient with ≥ 2 Γ insertions factors as the
/// product of the linear coefficients with the same Γ operand orders.
pub fn factorization_check(k: u32, cap: u32) -> Result<FactorizationReport> {
    let f = expand_dk_capped(k, cap)?;
    // linear coefficients indexed by the operand order of the single Γ
    let mut linear: BTreeMap<u32, Z> = BTreeMap::new();
    for t in &f.terms {
        if t.gamma_degree() == 1 {
            linear.insert(t.word[1], t.coeff.clone());
        }
    }
    let mut entries = Vec::new();
    for t in &f.terms {
        if t.gamma_degree() < 2 {
            continue;
        }
        let mut product = Z::one();
        let mut factors = Vec::new();
        for q in gamma_operand_orders(&t.word) {
            let c = linear.get(&q).ok_or_else(|| {
                Error::InternalAssertion(format!("no linear term with operand order {q}"))
            })?;
            product *= c;
            factors.push((q, c.clone()));
        }
        if product != t.coeff {
            return Err(Error::InternalAssertion(format!(
                "factorization fails for word {:?}: coefficient {} but product {}",
                t.word, t.coeff, product
            )));
        }
        entries.push(FactorizationEntry {
            term: t.clone(),
            factors,
        });
    }
    Ok(FactorizationReport { order: k, entries })
}

fn combinations(n: u32, l: u32) -> Vec<Vec<u32>> {
    // l-subsets of 1..=n in lexicographic order
    let mut out = Vec::new();
    if l == 0 {
        out.push(Vec::new());
        return out;
    }
    if l > n {
        return out;
    }
    let mut idx: Vec<u32> = (1..=l).collect();
    loop {
        out.push(idx.clone());
        let mut i = l as i64 - 1;
        while i >= 0 && idx[i as usize] == n - (l - 1 - i as u32) {
            i -= 1;
        }
        if i < 0 {
            break;
        }
        idx[i as usize] += 1;
        for j in (i as usize + 1)..l as usize {
            idx[j] = idx[j - 1] + 1;
        }
    }
    out
}

/// Evaluate the closed summed form of the order-k operator: a direct sum
/// over Γ-insertion position sets 1 ≤ i₁ < … < i_ℓ ≤ m (ℓ + m = k), each
/// term weighted by the product of the per-insertion recurrence factors.
/// Returns true iff the aggregate equals [`expand_dk`].
pub fn summed_form_check(k: u32, cap: u32) -> Result<bool> {
    if k > cap {
        return Err(Error::OrderCapExceeded { order: k, cap });
    }
    let mut acc: BTreeMap<Vec<u32>, Z> = BTreeMap::new();
    for l in 0..=(k / 2) {
        let m = k - l;
        for pos in combinations(m, l) {
            // word, outermost slot first
            let mut word = Vec::with_capacity(l as usize + 1);
            if l == 0 {
                word.push(m);
            } else {
                word.push(m - pos[l as usize - 1]);
                for t in (1..l as usize).rev() {
                    word.push(pos[t] - pos[t - 1] - 1);
                }
                word.push(pos[0] - 1);
            }
            let mut weight = Z::one();
            for (t, &p) in pos.iter().enumerate() {
                // operand order of the t-th insertion, counted from inside:
                // p−1−t derivatives below it plus 2t from the inner Γs
                let q = (p - 1) + t as u32;
                weight *= BigInt::from(q + 1) * BigInt::from(k - 1 - q);
            }
            *acc.entry(word).or_insert_with(Z::zero) += weight;
        }
    }
    let direct = UniversalFormula {
        order: k,
        terms: collect_terms(acc),
    };
    Ok(direct == expand_dk_capped(k, cap)?)
}

/// A flattened word: factors (D^{p₁}Γ)…(D^{p_m}Γ) applied to D^q s.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FlatTerm {
    pub coeff: Z,
    pub factors: Vec<u32>,
    pub tail: u32,
}

/// Expand the derivatives of Γ by the formal product rule: every D
/// distributes over the Γ factors and the trailing D^q s, slot order
/// preserved, coefficients aggregated over identical flat words.
pub fn leibniz_expand(f: &UniversalFormula) -> Vec<FlatTerm> {
    let mut acc: BTreeMap<(Vec<u32>, u32), Z> = BTreeMap::new();
    for t in &f.terms {
        let m = t.word.len() - 1;
        let mut state: BTreeMap<(Vec<u32>, u32), Z> = BTreeMap::new();
        state.insert((Vec::new(), t.word[m]), Z::one());
        for i in (0..m).rev() {
            // apply one Γ
            let mut next: BTreeMap<(Vec<u32>, u32), Z> = BTreeMap::new();
            for ((ps, q), c) in state {
                let mut nps = Vec::with_capacity(ps.len() + 1);
                nps.push(0);
                nps.extend_from_slice(&ps);
                *next.entry((nps, q)).or_insert_with(Z::zero) += c;
            }
            state = next;
            // then a_i derivatives, one at a time
            for _ in 0..t.word[i] {
                let mut next: BTreeMap<(Vec<u32>, u32), Z> = BTreeMap::new();
                for ((ps, q), c) in &state {
                    for slot in 0..ps.len() {
                        let mut nps = ps.clone();
                        nps[slot] += 1;
                        *next.entry((nps, *q)).or_insert_with(Z::zero) += c;
                    }
                    *next.entry((ps.clone(), q + 1)).or_insert_with(Z::zero) += c;
                }
                state = next;
            }
        }
        for ((ps, q), c) in state {
            *acc.entry((ps, q)).or_insert_with(Z::zero) += c * &t.coeff;
        }
    }
    let mut out: Vec<FlatTerm> = acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|((factors, tail), coeff)| FlatTerm {
            coeff,
            factors,
            tail,
        })
        .collect();
    out.sort_by(|a, b| {
        (a.factors.len(), &a.factors, a.tail).cmp(&(b.factors.len(), &b.factors, b.tail))
    });
    out
}
