//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its elapsed time and asserting the stated runtime budget.
//!
//! Run with `cargo test -p standop-cli --test acceptance -- --nocapture`.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use standop_core::testutil::{all_crossings, character_product_decompose, golden_tables};
use standop_core::{
    bgg_edges, bgg_vertices, classify_pair, coroot_pairing, delta, f_star_components,
    gamma_coefficient, grading, invariant_form, parse_dynkin, positive_roots, psi_spectrum,
    reflect, Classification, GradingReport, InvariantForm, LeviContext, ParabolicDatum, Weight, Q,
    Z,
};

fn binary(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_standop"))
        .args(args)
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "{:?} failed", args);
    String::from_utf8(out.stdout).unwrap()
}

fn setup(spec: &str, crossed: &[usize], scale: Q) -> (GradingReport, InvariantForm) {
    let datum = parse_dynkin(spec).unwrap();
    let form = invariant_form(&datum, scale).unwrap();
    let pd = ParabolicDatum::new(datum, crossed).unwrap();
    (grading(&pd, &form), form)
}

fn finish(criterion: u32, what: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("criterion {criterion:02} PASS: {what} ({elapsed:?})");
    assert!(
        elapsed < budget,
        "criterion {criterion} exceeded its {budget:?} budget: {elapsed:?}"
    );
}

#[test]
fn criterion_01_golden_formula_tables() {
    let t = Instant::now();
    for (k, table) in golden_tables() {
        let json = binary(&["expand", "--order", &k.to_string(), "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        let mut got: Vec<(String, Vec<u32>)> = v["terms"]
            .as_array()
            .unwrap()
            .iter()
            .map(|t| {
                (
                    t["coeff"].as_str().unwrap().to_string(),
                    t["word"]
                        .as_array()
                        .unwrap()
                        .iter()
                        .map(|a| a.as_u64().unwrap() as u32)
                        .collect(),
                )
            })
            .collect();
        got.sort();
        let mut expect: Vec<(String, Vec<u32>)> = table
            .iter()
            .map(|(c, w)| (c.to_string(), w.clone()))
            .collect();
        expect.sort();
        assert_eq!(got, expect, "order {k} term set");
    }
    // classical-notation spot checks, whitespace-normalized
    let normalize = |s: &str| s.chars().filter(|c| !c.is_whitespace()).collect::<String>();
    let d3 = binary(&["expand", "--order", "3"]);
    assert_eq!(normalize(d3.trim()), normalize("D^3 s + 2 D(G s) + 2 G Ds"));
    let d4 = binary(&["expand", "--order", "4"]);
    assert_eq!(
        normalize(d4.trim()),
        normalize("D^4s + 3D^2(G s) + 4D(G Ds) + 3 G D^2 s + 9 G^2 s")
    );
    let d5 = binary(&["expand", "--order", "5"]);
    assert_eq!(
        normalize(d5.trim()),
        normalize(
            "D^5 s + 4 D^3(G s) + 6 D^2(G Ds) + 6 D(G D^2 s) + 4 G D^3 s \
             + 24 D(G^2 s) + 16 G D(G s) + 24 G^2 Ds"
        )
    );
    finish(
        1,
        "orders 1..8 match the reference tables exactly",
        t,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_02_g2_structure() {
    let t = Instant::now();
    let g2 = parse_dynkin("G2").unwrap();
    let roots = positive_roots(&g2);
    let coords: BTreeSet<&[i64]> = roots.iter().map(|r| r.coords()).collect();
    for expected in [
        &[1i64, 1][..], // a3 = a1 + a2
        &[1, 2],        // a4 = a1 + 2a2
        &[1, 3],        // a5 = a1 + 3a2
        &[2, 3],        // a6 = 2a1 + 3a2
    ] {
        assert!(coords.contains(expected), "missing root {expected:?}");
    }

    let (borel, _) = setup("G2", &[1, 2], Q::one());
    assert_eq!(borel.depth(), 5);
    let dims: Vec<usize> = borel.layers().iter().map(|l| l.len()).collect();
    assert_eq!(dims, vec![2, 1, 1, 1, 1]);

    let (one, _) = setup("G2", &[1], Q::one());
    assert_eq!(one.depth(), 2);
    let g1: Vec<&[i64]> = one.layer(1).iter().map(|r| r.coords()).collect();
    assert_eq!(g1, vec![&[1, 0][..], &[1, 1], &[1, 2], &[1, 3]]);
    let g2_layer: Vec<&[i64]> = one.layer(2).iter().map(|r| r.coords()).collect();
    assert_eq!(g2_layer, vec![&[2, 3][..]]);

    let (two, _) = setup("G2", &[2], Q::one());
    assert_eq!(two.depth(), 3);
    finish(
        2,
        "G2 roots and the three gradings",
        t,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_03_lagrangian_contact() {
    let t = Instant::now();
    for n in 1..=5usize {
        let spec = format!("A{}", n + 1);
        let (report, _) = setup(&spec, &[1, n + 1], Q::one());
        assert_eq!(report.depth(), 2, "{spec}");
        assert_eq!(report.layer(2).len(), 1, "{spec}");
        let comps = f_star_components(&report);
        assert_eq!(comps.len(), 2, "{spec}");
        assert_eq!(comps[0].dim(), n, "{spec}");
        assert_eq!(comps[1].dim(), n, "{spec}");
        assert_eq!(report.layer(1).len(), 2 * n, "{spec}");
    }
    finish(
        3,
        "contact gradings split 2x n with one-dimensional top",
        t,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_04_conformal_odd_chain() {
    let t = Instant::now();
    for n in 2..=4usize {
        let spec = format!("B{n}");
        let (report, form) = setup(&spec, &[1], Q::one());
        let seed = Weight::zero(n);
        let verts = bgg_vertices(&seed, &report, &form, 100_000).unwrap();
        assert_eq!(verts.len(), 2 * n, "{spec} vertex count");
        let graph = bgg_edges(&verts, &report, &form);
        assert_eq!(graph.level_sizes(), vec![1; 2 * n], "{spec} chain shape");
        assert_eq!(graph.edges.len(), 2 * n - 1, "{spec} edge count");
        let short_idx: Vec<usize> = graph
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.label.is_long())
            .map(|(i, _)| i)
            .collect();
        assert_eq!(short_idx, vec![n - 1], "{spec} short edge must be middle");
        for (i, e) in graph.edges.iter().enumerate() {
            assert_eq!(e.constructed, i != n - 1, "{spec} edge {i}");
        }
    }
    finish(
        4,
        "B2..B4 crossed {1} chains with middle short edge dotted",
        t,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_05_g2_borel_hasse_with_oracle() {
    let t = Instant::now();
    let (report, form) = setup("G2", &[1, 2], Q::one());
    let seed = Weight::zero(2);
    let verts = bgg_vertices(&seed, &report, &form, 100_000).unwrap();
    assert_eq!(verts.len(), 12);
    let graph = bgg_edges(&verts, &report, &form);
    assert_eq!(graph.level_sizes(), vec![1, 2, 2, 2, 2, 2, 1]);
    for e in &graph.edges {
        assert_eq!(e.constructed, e.label.coords() == [1, 0]);
    }

    // brute-force oracle: fresh orbit closure of delta, then a pairwise
    // reflection scan for the edges
    let datum = report.datum().clone();
    let d = delta(&datum);
    let mut orbit = BTreeSet::from([d.clone()]);
    let mut queue = vec![d.clone()];
    while let Some(v) = queue.pop() {
        for beta in positive_roots(&datum) {
            let img = reflect(&v, &beta, &form).unwrap();
            if orbit.insert(img.clone()) {
                queue.push(img);
            }
        }
    }
    assert_eq!(orbit.len(), 12);
    let oracle_vertices: BTreeSet<Weight> = orbit.iter().map(|x| x.sub(&d)).collect();
    let got_vertices: BTreeSet<Weight> = graph.vertices.iter().map(|(w, _)| w.clone()).collect();
    assert_eq!(got_vertices, oracle_vertices);

    let mut oracle_edges = BTreeSet::new();
    let length = |x: &Weight| -> usize {
        positive_roots(&datum)
            .iter()
            .filter(|beta| coroot_pairing(&x.add(&d), beta, &form).is_negative())
            .count()
    };
    for from in &oracle_vertices {
        for beta in positive_roots(&datum) {
            let img = reflect(&from.add(&d), &beta, &form).unwrap().sub(&d);
            if oracle_vertices.contains(&img) && length(&img) == length(from) + 1 {
                oracle_edges.insert((from.clone(), img, beta.coords().to_vec()));
            }
        }
    }
    let got_edges: BTreeSet<(Weight, Weight, Vec<i64>)> = graph
        .edges
        .iter()
        .map(|e| {
            (
                graph.vertices[e.from].0.clone(),
                graph.vertices[e.to].0.clone(),
                e.label.coords().to_vec(),
            )
        })
        .collect();
    assert_eq!(got_edges, oracle_edges);
    finish(
        5,
        "G2 Borel graph equals the brute-force orbit oracle",
        t,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_06_telescoping_invariance() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    let specs = [
        "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2",
    ];
    let mut checked = 0usize;
    'outer: loop {
        for spec in specs {
            let datum = parse_dynkin(spec).unwrap();
            let form = invariant_form(&datum, Q::one()).unwrap();
            for crossing in all_crossings(datum.rank()) {
                let pd = ParabolicDatum::new(datum.clone(), &crossing).unwrap();
                let report = grading(&pd, &form);
                let coords: Vec<i64> = (0..datum.rank()).map(|_| rng.gen_range(0..3)).collect();
                let seed = Weight::from_ints(&coords);
                let verts = bgg_vertices(&seed, &report, &form, 100_000).unwrap();
                let graph = bgg_edges(&verts, &report, &form);
                for e in graph.edges.iter().filter(|e| e.constructed && e.order <= 6) {
                    let lam = &graph.vertices[e.to].0;
                    let c = classify_pair(lam, &e.label, &report, &form).unwrap();
                    let desc = c.operator().expect("constructed edge classifies");
                    let k = desc.order;
                    // per-step ladder telescopes to zero
                    let sum: Q = desc.eigen_ladder.iter().fold(Q::zero(), |a, b| a + b);
                    assert!(sum.is_zero(), "{spec} {crossing:?}");
                    // cumulative coefficients obey 2 c_j = |alpha|^2 j (j-k)
                    let mut cumulative = Q::zero();
                    for (j, step) in desc.eigen_ladder.iter().enumerate() {
                        cumulative += step;
                        let cj =
                            gamma_coefficient(&desc.source, &desc.direction, j as i64 + 1, &form)
                                .unwrap();
                        assert_eq!(cumulative, cj, "{spec} {crossing:?} j={}", j + 1);
                        let jq = Q::from_integer((j as i64 + 1).into());
                        let kq = Q::from_integer(k.into());
                        let expect = form.root_norm_sq(&desc.direction)
                            * &jq
                            * (&jq - &kq)
                            * Q::new(1.into(), 2.into());
                        assert_eq!(cj, expect);
                    }
                    checked += 1;
                    if checked >= 200 {
                        break 'outer;
                    }
                }
            }
        }
    }
    assert!(checked >= 200);
    finish(
        6,
        "200 randomized operator ladders telescope exactly",
        t,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_07_simple_root_identity() {
    let t = Instant::now();
    let specs = [
        "A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C3", "C4", "C5", "C6",
        "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2",
    ];
    for spec in specs {
        let datum = parse_dynkin(spec).unwrap();
        let form = invariant_form(&datum, Q::one()).unwrap();
        let d = delta(&datum);
        for i in 0..datum.rank() {
            let beta = datum.simple_root(i);
            let lhs = Q::from_integer(2.into()) * form.pair_root(&d, &beta);
            assert_eq!(lhs, form.root_norm_sq(&beta), "{spec} node {}", i + 1);
        }
    }
    finish(
        7,
        "2(delta,beta) = |beta|^2 on every supported algebra",
        t,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_08_scale_robustness() {
    let t = Instant::now();
    let scales = ["1", "-2", "7/3"];
    let cases = [
        ("A1", vec![1usize], vec![-3i64]),
        ("A2", vec![1], vec![-4, 1]),
        ("B2", vec![1], vec![-5, 2]),
        ("B3", vec![1], vec![-3, 0, 1]),
        ("G2", vec![1], vec![-4, 0]),
        ("G2", vec![1, 2], vec![-4, -3]),
        ("C3", vec![3], vec![0, 1, -4]),
    ];
    for (spec, crossing, lam_coords) in &cases {
        let lam = Weight::from_ints(lam_coords);
        let baseline = {
            let (report, form) = setup(spec, crossing, Q::one());
            positive_roots(report.datum())
                .iter()
                .map(|alpha| classify_pair(&lam, alpha, &report, &form).unwrap())
                .collect::<Vec<_>>()
        };
        for scale_str in &scales {
            let scale = standop_core::lie::parse_q(scale_str).unwrap();
            let (report, form) = setup(spec, crossing, scale.clone());
            for (alpha, base) in positive_roots(report.datum()).iter().zip(&baseline) {
                let got = classify_pair(&lam, alpha, &report, &form).unwrap();
                match (base, &got) {
                    (Classification::Operator(x), Classification::Operator(y)) => {
                        assert_eq!(x.order, y.order, "{spec} scale {scale_str}");
                        assert_eq!(x.target, y.target);
                        assert_eq!(x.constructed, y.constructed);
                        for (cx, cy) in x.eigen_ladder.iter().zip(&y.eigen_ladder) {
                            assert_eq!(cx * &scale, cy.clone(), "eigenvalues scale linearly");
                        }
                    }
                    (Classification::Rejected(x), Classification::Rejected(y)) => {
                        assert_eq!(std::mem::discriminant(x), std::mem::discriminant(y));
                    }
                    _ => panic!("{spec}: existence changed at scale {scale_str}"),
                }
            }
        }
    }
    finish(
        8,
        "classification identical at scales 1, -2, 7/3",
        t,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_09_klimyk_oracle_equivalence() {
    let t = Instant::now();
    let cases = [
        ("A2", vec![1usize]),
        ("A3", vec![1]),
        ("A3", vec![2]),
        ("A4", vec![1, 4]),
        ("B2", vec![1]),
        ("B3", vec![1]),
        ("B3", vec![3]),
        ("B4", vec![1]),
        ("C3", vec![1]),
        ("C3", vec![3]),
        ("C4", vec![1]),
        ("D4", vec![1]),
        ("G2", vec![1]),
        ("G2", vec![2]),
    ];
    let mut count = 0usize;
    for (spec, crossing) in &cases {
        let datum = parse_dynkin(spec).unwrap();
        let form = invariant_form(&datum, Q::one()).unwrap();
        let pd = ParabolicDatum::new(datum.clone(), crossing).unwrap();
        let report = grading(&pd, &form);
        let ctx = LeviContext::from_report(&report, &form);
        assert!(ctx.nodes().len() <= 3, "{spec}: Levi rank within bounds");
        for a in 0..3i64 {
            for b in 0..2i64 {
                let coords: Vec<i64> = (0..datum.rank())
                    .map(|i| if i % 2 == 0 { a } else { b })
                    .collect();
                let lam = Weight::from_ints(&coords);
                if !ctx.is_dominant_integral(&lam) {
                    continue;
                }
                for (i, comp) in f_star_components(&report).iter().enumerate() {
                    let dim_l = ctx.weyl_dim(&lam).unwrap();
                    if dim_l.clone() * Z::from(comp.dim()) > Z::from(500) {
                        continue;
                    }
                    let weights: Vec<(Weight, u64)> =
                        comp.weights(&datum).into_iter().map(|w| (w, 1)).collect();
                    let got = ctx.klimyk(&lam, &weights).unwrap();
                    let expect = character_product_decompose(&ctx, &lam, &weights);
                    assert_eq!(got, expect, "{spec} {crossing:?} comp {i} λ={lam}");
                    assert!(
                        got.iter().all(|c| c.multiplicity == 1),
                        "{spec} {crossing:?}: multiplicity violation"
                    );
                    // the spectrum path enforces the same and attaches eigenvalues
                    let s = psi_spectrum(&lam, i, &report, &form).unwrap();
                    assert_eq!(s.entries.len(), got.len());
                    count += 1;
                }
            }
        }
    }
    assert!(count >= 50, "only {count} decompositions checked");
    finish(
        9,
        "f*⊗V decompositions match the character oracle, multiplicity free",
        t,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_10_factorization_property() {
    let t = Instant::now();
    for k in 2..=12u32 {
        standop_core::formula::factorization_check(k, 32).unwrap();
    }
    let spot = |k: u32, word: &[u32], coeff: i64| {
        let f = standop_core::expand_dk(k).unwrap();
        let found = f.terms.iter().find(|t| t.word == word).unwrap();
        assert_eq!(found.coeff, Z::from(coeff));
    };
    spot(4, &[0, 0, 0], 9); // 3 * 3
    spot(5, &[0, 1, 0], 16); // 4 * 4
    spot(6, &[1, 0, 1], 64); // 8 * 8
    finish(
        10,
        "nonlinear coefficients factor through order 12",
        t,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_11_summed_form_equivalence() {
    let t = Instant::now();
    for k in 0..=8u32 {
        assert!(
            standop_core::formula::summed_form_check(k, 32).unwrap(),
            "k={k}"
        );
    }
    finish(
        11,
        "closed summed form reproduces the recurrence to order 8",
        t,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_12_sl2_ladder() {
    let t = Instant::now();
    let (report, form) = setup("A1", &[1], Q::one());
    let alpha = report.datum().simple_root(0);
    for k in 1..=10i64 {
        let lam = Weight::from_ints(&[-(k + 1)]);
        let c = classify_pair(&lam, &alpha, &report, &form).unwrap();
        let d = c.operator().expect("ladder operator exists");
        assert_eq!(d.order, k);
        assert_eq!(d.target, Weight::from_ints(&[k - 1]));
        assert!(d.constructed);
    }
    finish(
        12,
        "A1 Borel yields the order-k derivative family",
        t,
        Duration::from_secs(1),
    );
}
