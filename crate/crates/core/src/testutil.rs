//! Brute-force oracles and frozen reference data for the test suites.
//!
//! Everything here exists to check the main code paths by an independent
//! route; nothing in the library proper may call into this module.

use std::collections::BTreeMap;

use num::{BigInt, One, Zero};

use crate::lie::{CartanDatum, Series, Weight};
use crate::tensor::{IsotypicComponent, LeviContext};
use crate::{Q, Z};

/// Weyl group order from the standard product formulas.
pub fn weyl_order(datum: &CartanDatum) -> u64 {
    let r = datum.rank() as u32;
    let fact = |n: u32| -> u64 { (1..=n as u64).product::<u64>().max(1) };
    match datum.series() {
        Series::A => fact(r + 1),
        Series::B | Series::C => 2u64.pow(r) * fact(r),
        Series::D => 2u64.pow(r - 1) * fact(r),
        Series::E => match r {
            6 => 51_840,
            7 => 2_903_040,
            8 => 696_729_600,
            _ => unreachable!(),
        },
        Series::F => 1152,
        Series::G => 12,
    }
}

/// All nonempty crossed node sets (1-based) for a given rank.
pub fn all_crossings(rank: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << rank) {
        let nodes: Vec<usize> = (0..rank)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| i + 1)
            .collect();
        out.push(nodes);
    }
    out
}

/// Decompose V_λ ⊗ M by brute force: form the full product character and
/// repeatedly strip the character of the component generated by the
/// current maximal weight. Independent of the Klimyk sign-sum route.
pub fn character_product_decompose(
    ctx: &LeviContext,
    lambda: &Weight,
    module_weights: &[(Weight, u64)],
) -> Vec<IsotypicComponent> {
    let char_v = ctx.weight_multiset(lambda).expect("dominant lambda");
    let mut product: BTreeMap<Weight, i64> = BTreeMap::new();
    for (a, ma) in &char_v {
        for (b, mb) in module_weights {
            *product.entry(a.add(b)).or_insert(0) += (*ma * *mb) as i64;
        }
    }
    let mut out = Vec::new();
    while let Some(top) = max_weight(ctx, &product) {
        let mult = product[&top];
        assert!(mult > 0, "character subtraction went negative at {top}");
        assert!(
            ctx.is_dominant(&top),
            "maximal weight {top} is not dominant"
        );
        for (w, m) in ctx.weight_multiset(&top).expect("dominant component") {
            let e = product.entry(w).or_insert(0);
            *e -= mult * m as i64;
            assert!(*e >= 0, "negative multiplicity while stripping {top}");
        }
        product.retain(|_, m| *m != 0);
        out.push(IsotypicComponent {
            highest_weight: top,
            multiplicity: mult as u32,
        });
    }
    out.sort();
    out
}

fn max_weight(ctx: &LeviContext, multiset: &BTreeMap<Weight, i64>) -> Option<Weight> {
    multiset
        .iter()
        .filter(|(_, m)| **m != 0)
        .map(|(w, _)| w)
        .max_by(|a, b| {
            let pa = levi_height(ctx, a);
            let pb = levi_height(ctx, b);
            pa.cmp(&pb).then_with(|| a.cmp(b))
        })
        .cloned()
}

fn levi_height(ctx: &LeviContext, w: &Weight) -> Q {
    // (w, δ_levi) at unit scale strictly increases under a dominating
    // reflection, so a maximum over a W_levi-stable multiset is dominant
    ctx.form().pair(w, ctx.delta_levi()) / ctx.form().scale()
}

/// Sparse exact polynomial in two commuting variables, used to check the
/// product-rule expansion under derivation semantics.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Z>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2::default()
    }

    pub fn monomial(xdeg: u32, ydeg: u32, coeff: Z) -> Self {
        let mut p = Poly2::default();
        if !coeff.is_zero() {
            p.terms.insert((xdeg, ydeg), coeff);
        }
        p
    }

    pub fn add_assign(&mut self, other: &Poly2) {
        for (k, v) in &other.terms {
            let e = self.terms.entry(*k).or_insert_with(Z::zero);
            *e += v;
            if e.is_zero() {
                self.terms.remove(k);
            }
        }
    }

    pub fn mul(&self, other: &Poly2) -> Poly2 {
        let mut out = Poly2::default();
        for ((xa, ya), ca) in &self.terms {
            for ((xb, yb), cb) in &other.terms {
                let e = out.terms.entry((xa + xb, ya + yb)).or_insert_with(Z::zero);
                *e += ca * cb;
            }
        }
        out.terms.retain(|_, c| !c.is_zero());
        out
    }

    pub fn scale(&self, c: &Z) -> Poly2 {
        let mut out = Poly2::default();
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(*k, v * c);
        }
        out
    }

    /// Formal derivative in x.
    pub fn d_dx(&self) -> Poly2 {
        let mut out = Poly2::default();
        for ((x, y), c) in &self.terms {
            if *x > 0 {
                out.terms.insert((x - 1, *y), c * BigInt::from(*x));
            }
        }
        out
    }
}

/// Degree large enough that no derivative in the order-8 tables vanishes.
const EVAL_DEGREE: u32 = 9;

/// Γ evaluated as y·x^9 under derivation semantics.
pub fn gamma_poly() -> Poly2 {
    Poly2::monomial(EVAL_DEGREE, 1, Z::one())
}

/// s evaluated as x^9.
pub fn s_poly() -> Poly2 {
    Poly2::monomial(EVAL_DEGREE, 0, Z::one())
}

/// Evaluate a nested word D^{a0}(Γ D^{a1}(… D^{am} s)) with D = d/dx.
pub fn eval_nested_word(word: &[u32]) -> Poly2 {
    let m = word.len() - 1;
    let mut acc = s_poly();
    for _ in 0..word[m] {
        acc = acc.d_dx();
    }
    for i in (0..m).rev() {
        acc = gamma_poly().mul(&acc);
        for _ in 0..word[i] {
            acc = acc.d_dx();
        }
    }
    acc
}

/// Evaluate a flat word (D^{p1}Γ)…(D^{pm}Γ)·D^q s with D = d/dx.
pub fn eval_flat_word(factors: &[u32], tail: u32) -> Poly2 {
    let mut acc = s_poly();
    for _ in 0..tail {
        acc = acc.d_dx();
    }
    for &p in factors.iter().rev() {
        let mut g = gamma_poly();
        for _ in 0..p {
            g = g.d_dx();
        }
        acc = g.mul(&acc);
    }
    acc
}

/// One table row: an integer coefficient with its word composition.
pub type GoldenTerm = (i64, Vec<u32>);

/// Frozen reference coefficient tables for the expansions of orders
/// 1..=8; words use the (a0,…,am) composition encoding.
pub fn golden_tables() -> Vec<(u32, Vec<GoldenTerm>)> {
    vec![
        (1, vec![(1, vec![1])]),
        (2, vec![(1, vec![2]), (1, vec![0, 0])]),
        (3, vec![(1, vec![3]), (2, vec![1, 0]), (2, vec![0, 1])]),
        (
            4,
            vec![
                (1, vec![4]),
                (3, vec![2, 0]),
                (4, vec![1, 1]),
                (3, vec![0, 2]),
                (9, vec![0, 0, 0]),
            ],
        ),
        (
            5,
            vec![
                (1, vec![5]),
                (4, vec![3, 0]),
                (6, vec![2, 1]),
                (6, vec![1, 2]),
                (4, vec![0, 3]),
                (24, vec![1, 0, 0]),
                (16, vec![0, 1, 0]),
                (24, vec![0, 0, 1]),
            ],
        ),
        (
            6,
            vec![
                (1, vec![6]),
                (5, vec![4, 0]),
                (8, vec![3, 1]),
                (9, vec![2, 2]),
                (8, vec![1, 3]),
                (5, vec![0, 4]),
                (45, vec![2, 0, 0]),
                (40, vec![1, 1, 0]),
                (25, vec![0, 2, 0]),
                (64, vec![1, 0, 1]),
                (40, vec![0, 1, 1]),
                (45, vec![0, 0, 2]),
                (225, vec![0, 0, 0, 0]),
            ],
        ),
        (
            7,
            vec![
                (1, vec![7]),
                (6, vec![5, 0]),
                (10, vec![4, 1]),
                (12, vec![3, 2]),
                (12, vec![2, 3]),
                (10, vec![1, 4]),
                (6, vec![0, 5]),
                (72, vec![3, 0, 0]),
                (72, vec![2, 1, 0]),
                (120, vec![2, 0, 1]),
                (60, vec![1, 2, 0]),
                (100, vec![1, 1, 1]),
                (36, vec![0, 3, 0]),
                (60, vec![0, 2, 1]),
                (120, vec![1, 0, 2]),
                (72, vec![0, 1, 2]),
                (72, vec![0, 0, 3]),
                (720, vec![1, 0, 0, 0]),
                (432, vec![0, 1, 0, 0]),
                (432, vec![0, 0, 1, 0]),
                (720, vec![0, 0, 0, 1]),
            ],
        ),
        (
            8,
            vec![
                (1, vec![8]),
                (7, vec![6, 0]),
                (12, vec![5, 1]),
                (15, vec![4, 2]),
                (16, vec![3, 3]),
                (15, vec![2, 4]),
                (12, vec![1, 5]),
                (7, vec![0, 6]),
                (105, vec![4, 0, 0]),
                (112, vec![3, 1, 0]),
                (192, vec![3, 0, 1]),
                (105, vec![2, 2, 0]),
                (180, vec![2, 1, 1]),
                (84, vec![1, 3, 0]),
                (225, vec![2, 0, 2]),
                (144, vec![1, 2, 1]),
                (49, vec![0, 4, 0]),
                (84, vec![0, 3, 1]),
                (180, vec![1, 1, 2]),
                (105, vec![0, 2, 2]),
                (192, vec![1, 0, 3]),
                (112, vec![0, 1, 3]),
                (105, vec![0, 0, 4]),
                (1575, vec![2, 0, 0, 0]),
                (1260, vec![1, 1, 0, 0]),
                (1344, vec![1, 0, 1, 0]),
                (735, vec![0, 2, 0, 0]),
                (2304, vec![1, 0, 0, 1]),
                (784, vec![0, 1, 1, 0]),
                (735, vec![0, 0, 2, 0]),
                (1344, vec![0, 1, 0, 1]),
                (1260, vec![0, 0, 1, 1]),
                (1575, vec![0, 0, 0, 2]),
                (11025, vec![0, 0, 0, 0, 0]),
            ],
        ),
    ]
}
