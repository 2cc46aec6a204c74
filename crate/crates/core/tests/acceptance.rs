//! Acceptance suite: every criterion is one test that prints a PASS line;
//! all comparisons are exact (arbitrary-precision integer equality).
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the
//! per-criterion lines.

mod common;

use common::{chain_denominator_naive, random_layered_graph};
use layered_hilbert::graph::{gen_boolean, gen_complete, gen_subspace, LayeredGraph};
use layered_hilbert::hilbert::{
    closed_complete, closed_dual_complete, closed_dual_lnq, closed_lnq, closed_qn,
    denominator_chains, denominator_mobius, dual_series, hilbert_series,
    hilbert_series_with_method, invert_zeta, mobius_table, q_binomial, vertex_series,
    zeta_inverse_from_mobius, zeta_matrix, CompleteSpec, Method, DEFAULT_CHAIN_CAP,
};
use layered_hilbert::oracle::count_words;
use layered_hilbert::series::{IntPoly, IntSeries};
use num_bigint::BigInt;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const COMPLETE_SPECS: [&[u64]; 4] = [&[2, 1], &[2, 2, 1], &[3, 2, 1], &[2, 3, 2, 1]];
const SUBSPACE_PARAMS: [(u32, u64); 4] = [(1, 2), (2, 2), (3, 2), (2, 3)];

fn assert_series_eq(label: &str, a: &IntSeries, b: &IntSeries) {
    assert_eq!(a.coeffs(), b.coeffs(), "{label}");
}

#[test]
fn criterion_1_subset_lattice_series() {
    for n in 1..=6u32 {
        let g = gen_boolean(n);
        let engine = hilbert_series(&g, 10);
        let closed = closed_qn(n).expand(10);
        assert_series_eq(&format!("boolean n={n}: engine vs closed form"), &engine.series, &closed);
        assert_eq!(engine.denominator, *closed_qn(n).den(), "boolean n={n}: denominator");
    }
    for n in 1..=4u32 {
        let g = gen_boolean(n);
        let counts = count_words(&g, 8);
        let series = hilbert_series(&g, 8).series;
        assert_eq!(counts.counts(), series.coeffs(), "boolean n={n}: basis-word counts");
    }
    println!("criterion 1 PASS: subset-lattice series match the closed form (n <= 6, T = 10) and the word counts (n <= 4, T = 8)");
}

#[test]
fn criterion_2_subspace_lattice_series() {
    for (n, q) in SUBSPACE_PARAMS {
        let g = gen_subspace(n, q).unwrap();
        let mobius = hilbert_series_with_method(&g, 8, Method::Mobius, DEFAULT_CHAIN_CAP).unwrap();
        let chains = hilbert_series_with_method(&g, 8, Method::Chains, DEFAULT_CHAIN_CAP).unwrap();
        let closed = closed_lnq(n, q);
        let oracle = count_words(&g, 8);
        assert_eq!(mobius.denominator, chains.denominator, "L({n},{q}): denominators");
        assert_eq!(mobius.denominator, *closed.den(), "L({n},{q}): closed denominator");
        assert_series_eq(&format!("L({n},{q}): mobius vs chains"), &mobius.series, &chains.series);
        assert_series_eq(&format!("L({n},{q}): mobius vs closed"), &mobius.series, &closed.expand(8));
        assert_eq!(oracle.counts(), mobius.series.coeffs(), "L({n},{q}): word counts");
    }
    println!("criterion 2 PASS: subspace-lattice series agree across mobius, chains, closed form, and word counts (T = 8)");
}

#[test]
fn criterion_3_complete_graph_series() {
    // D for C[2,2,1] re-derived first by the independent chain oracle
    // over the levels-only order (every vertex dominates every vertex of
    // lower level in a complete layered graph).
    let levels = [2u32, 2, 1, 1, 0];
    let gt: Vec<Vec<bool>> = levels
        .iter()
        .map(|&a| levels.iter().map(|&b| a > b).collect())
        .collect();
    let rederived = chain_denominator_naive(&levels, &gt);
    assert_eq!(rederived, [1, -5, 6, -2], "C[2,2,1] denominator from first principles");

    for sizes in COMPLETE_SPECS {
        let g = gen_complete(sizes).unwrap();
        let spec = CompleteSpec::new(sizes.to_vec()).unwrap();
        let closed = closed_complete(&spec);
        let mobius = denominator_mobius(&g);
        let chains = denominator_chains(&g, DEFAULT_CHAIN_CAP).unwrap();
        assert_eq!(mobius, chains, "C{sizes:?}: chain vs mobius denominator");
        assert_eq!(mobius, *closed.den(), "C{sizes:?}: closed denominator");
        let oracle = count_words(&g, 8);
        assert_eq!(
            oracle.counts(),
            hilbert_series(&g, 8).series.coeffs(),
            "C{sizes:?}: word counts"
        );
    }
    let g = gen_complete(&[2, 2, 1]).unwrap();
    assert_eq!(denominator_mobius(&g), IntPoly::from_ints(&rederived));
    println!("criterion 3 PASS: complete-graph series agree across closed form, chains, mobius, and word counts; D(C[2,2,1]) re-derived independently");
}

#[test]
fn criterion_4_free_algebra_degeneration() {
    for n in 1..=5u32 {
        let mut sizes = vec![1u64; n as usize];
        sizes.push(1);
        let g = gen_complete(&sizes).unwrap();
        let h = hilbert_series(&g, 12).series;
        for k in 0..=12u32 {
            assert_eq!(
                h.coeff(k as usize),
                &BigInt::from(n).pow(k),
                "free algebra on {n} generators, degree {k}"
            );
        }
    }
    println!("criterion 4 PASS: one-vertex-per-level graphs give the free-algebra series h_k = n^k (n <= 5, k <= 12)");
}

#[test]
fn criterion_5_q_equals_1_degeneration() {
    for n in 0..=6u32 {
        let expected = IntPoly::one().sub(
            &IntPoly::monomial(1, 1).mul(&IntPoly::from_ints(&[2, -1]).pow(n)),
        );
        assert_eq!(*closed_lnq(n, 1).den(), expected, "q = 1 degeneration at n = {n}");
    }
    println!("criterion 5 PASS: the subspace closed form at q = 1 degenerates to the subset-lattice denominator (n <= 6)");
}

/// The subspace dual sum with its leading factor t dropped; kept to show
/// that the factor is forced by the Koszul identity.
fn dual_lnq_missing_leading_t(n: u32, q: u64) -> IntPoly {
    let qb = BigInt::from(q);
    let mut sum = IntPoly::zero();
    for m in 0..n {
        let mut prod = IntPoly::constant(q_binomial(n, m, q).unwrap());
        let mut qpow = qb.clone();
        for _ in 1..n - m {
            prod = prod.mul(&IntPoly::from_coeffs(vec![BigInt::one(), qpow.clone()]));
            qpow *= &qb;
        }
        sum = sum.add(&prod);
    }
    IntPoly::one().add(&sum)
}

#[test]
fn criterion_6_koszul_duality() {
    let truncation = 12;
    let mut graphs: Vec<LayeredGraph> = (1..=6).map(gen_boolean).collect();
    for (n, q) in SUBSPACE_PARAMS {
        graphs.push(gen_subspace(n, q).unwrap());
    }
    for sizes in COMPLETE_SPECS {
        graphs.push(gen_complete(sizes).unwrap());
    }
    for g in &graphs {
        let h = hilbert_series(g, truncation).series;
        let dual = dual_series(g, truncation);
        assert!(
            h.mul(&dual.series.substitute_neg()).is_one(),
            "Koszul identity h(t) h^!(-t) = 1 for {g}"
        );
        let p = dual
            .polynomial
            .as_ref()
            .unwrap_or_else(|| panic!("dual polynomial exists for {g}"));
        assert_series_eq(
            &format!("dual polynomial expands to the dual series for {g}"),
            &IntSeries::from_poly(p, truncation),
            &dual.series,
        );
    }
    for (n, q) in SUBSPACE_PARAMS {
        let g = gen_subspace(n, q).unwrap();
        let engine = dual_series(&g, truncation).polynomial.unwrap();
        let closed = closed_dual_lnq(n, q);
        let without_t = dual_lnq_missing_leading_t(n, q);
        assert_eq!(engine, closed, "dual closed form for L({n},{q})");
        assert_ne!(
            engine, without_t,
            "the t-less dual variant unexpectedly matches for L({n},{q})"
        );
        println!(
            "criterion 6 NOTE: the L({n},{q}) dual closed form needs its leading factor t: without it the sum gives {without_t}, while the division route D(-t)/(1+t) gives {engine}"
        );
    }
    for sizes in COMPLETE_SPECS {
        let g = gen_complete(sizes).unwrap();
        let spec = CompleteSpec::new(sizes.to_vec()).unwrap();
        assert_eq!(
            dual_series(&g, truncation).polynomial.unwrap(),
            closed_dual_complete(&spec),
            "dual closed form for C{sizes:?}"
        );
    }
    println!("criterion 6 PASS: Koszul identity holds to T = 12 on all criteria-1..3 graphs; dual polynomials match the closed forms, whose leading-t factor is forced (the t-less variant fails)");
}

#[test]
fn criterion_7_mobius_structure() {
    let mut graphs: Vec<LayeredGraph> = (1..=5).map(gen_boolean).collect();
    for (n, q) in SUBSPACE_PARAMS {
        graphs.push(gen_subspace(n, q).unwrap());
    }
    for sizes in COMPLETE_SPECS {
        graphs.push(gen_complete(sizes).unwrap());
    }
    for g in &graphs {
        assert!(g.vertex_count() <= 32, "criterion covers graphs up to 32 vertices");
        let z = zeta_matrix(g);
        let inv = invert_zeta(&z);
        assert!(z.matrix().mul(&inv).is_identity(), "zeta * zeta^-1 = I for {g}");
        assert!(inv.mul(z.matrix()).is_identity(), "zeta^-1 * zeta = I for {g}");
        let factored = zeta_inverse_from_mobius(g, &mobius_table(g));
        assert_eq!(inv, factored, "inverse entries factor as mu * t^gap for {g}");
    }
    for n in 1..=5u32 {
        let g = gen_boolean(n);
        for (v, w, mu) in mobius_table(&g).pairs() {
            let gap = g.level(v) - g.level(w);
            let expected = if gap.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
            assert_eq!(*mu, expected, "boolean mu on a gap-{gap} interval");
        }
    }
    for (n, q) in SUBSPACE_PARAMS {
        let g = gen_subspace(n, q).unwrap();
        for (v, w, mu) in mobius_table(&g).pairs() {
            let d = g.level(v) - g.level(w);
            let mut expected = BigInt::from(q).pow(d * d.saturating_sub(1) / 2);
            if d % 2 == 1 {
                expected = -expected;
            }
            assert_eq!(*mu, expected, "subspace mu on a codim-{d} interval of L({n},{q})");
        }
    }
    println!("criterion 7 PASS: zeta inversion is exact on all graphs up to 32 vertices, entries factor as mu(v,w) t^(|v|-|w|), and both mu closed forms hold");
}

#[test]
fn criterion_8_randomized_structural_invariants() {
    let truncation = 6;
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for trial in 0..100 {
        let g = random_layered_graph(&mut rng, 20, 3);
        let result = hilbert_series(&g, truncation);
        assert!(result.denominator.coeff(0).is_one(), "trial {trial}: D(0) = 1");
        assert_eq!(
            result.denominator.coeff(1),
            -BigInt::from(g.vertex_count()),
            "trial {trial}: D'(0) = -|V|"
        );
        assert!(result.series.coeff(0).is_one(), "trial {trial}: h_0 = 1");
        assert_eq!(
            result.series.coeff(1),
            &BigInt::from(g.positive_count()),
            "trial {trial}: h_1 = |V+|"
        );
        assert_eq!(
            count_words(&g, truncation).counts(),
            result.series.coeffs(),
            "trial {trial}: word counts match the series"
        );
        let table = vertex_series(&g, truncation);
        let mut total = IntSeries::one(truncation);
        for (id, s) in table.iter() {
            if g.level(g.index_of(id).unwrap()) > 0 {
                total = total.add(s);
            }
        }
        assert_series_eq(
            &format!("trial {trial}: vertex-series partition"),
            &total,
            &result.series,
        );
    }
    println!("criterion 8 PASS: structural invariants hold on 100 random layered graphs (<= 20 vertices, <= 4 levels, T = 6)");
}
