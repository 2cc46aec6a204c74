//! The series engine.
//!
//! Two independent routes compute the denominator polynomial `D(t)` with
//! `h(t) = (1 - t)/D(t)`:
//!
//! - the Möbius route: `D = 1 - t * sum_{v >= w} mu(v,w) t^(|v|-|w|)`,
//!   using the classical Möbius numbers of the reachability order (the
//!   t-power of a chain depends only on its endpoints, so the deformation
//!   factors out of the inverse zeta matrix);
//! - the chain route: `D = 1 + sum (-1)^len t^(top - bottom + 1)` over all
//!   strictly decreasing vertex chains, enumerated explicitly.
//!
//! The zeta matrix itself can also be inverted by the finite Neumann sum
//! `I - N + N^2 - ...` (N strictly upper triangular), which the tests hold
//! against the Möbius factorization entry by entry.
//!
//! On top of the graph routes sit the closed forms for the three built-in
//! families, their Koszul duals, and Gaussian binomials.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{GenError, LayeredGraph};
use crate::series::{IntPoly, IntSeries, RationalFn, SeriesError};

/// Default series truncation degree.
pub const DEFAULT_TRUNCATION: usize = 12;
/// Default cap on enumerated chains; chain counts grow exponentially.
pub const DEFAULT_CHAIN_CAP: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HilbertError {
    #[error("chain enumeration exceeds the cap of {cap} chains")]
    ChainBudgetExceeded { cap: u64 },
    #[error("q-binomial arguments out of range: need 0 <= k <= n, got n = {n}, k = {k}")]
    OutOfRange { n: u32, k: u32 },
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Which route produced a `HilbertResult`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Mobius,
    Chains,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Mobius => write!(f, "mobius"),
            Method::Chains => write!(f, "chains"),
        }
    }
}

/// Square matrix of integer polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<IntPoly>,
}

impl PolyMatrix {
    pub fn zero(size: usize) -> Self {
        PolyMatrix {
            size,
            entries: vec![IntPoly::zero(); size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = PolyMatrix::zero(size);
        for i in 0..size {
            m.set(i, i, IntPoly::one());
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &IntPoly {
        &self.entries[row * self.size + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: IntPoly) {
        self.entries[row * self.size + col] = value;
    }

    pub fn add(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, other.size);
        PolyMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, other.size);
        PolyMatrix {
            size: self.size,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut out = PolyMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.set(i, j, out.get(i, j).add(&a.mul(b)));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(IntPoly::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == PolyMatrix::identity(self.size)
    }
}

/// The matrix with entry `t^(|v|-|w|)` when `v >= w` and 0 otherwise,
/// indexed by vertices in canonical (nonincreasing level) order. Upper
/// triangular with unit diagonal in that order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaMatrix {
    ids: Vec<String>,
    matrix: PolyMatrix,
}

impl ZetaMatrix {
    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }
}

pub fn zeta_matrix(g: &LayeredGraph) -> ZetaMatrix {
    let n = g.vertex_count();
    let mut matrix = PolyMatrix::zero(n);
    for v in 0..n {
        for w in 0..n {
            if g.geq_idx(v, w) {
                let gap = (g.level(v) - g.level(w)) as usize;
                matrix.set(v, w, IntPoly::monomial(1, gap));
            }
        }
    }
    ZetaMatrix {
        ids: g.vertices().iter().map(|v| v.id.clone()).collect(),
        matrix,
    }
}

/// Inverts the zeta matrix by the finite Neumann sum `I - N + N^2 - ...`
/// where `N = zeta - I` is strictly upper triangular and nilpotent.
pub fn invert_zeta(z: &ZetaMatrix) -> PolyMatrix {
    let n = z.matrix.size();
    let identity = PolyMatrix::identity(n);
    let nilpotent = z.matrix.sub(&identity);
    let mut inv = identity.clone();
    let mut power = identity;
    let mut negative = true;
    loop {
        power = power.mul(&nilpotent);
        if power.is_zero() {
            return inv;
        }
        inv = if negative {
            inv.sub(&power)
        } else {
            inv.add(&power)
        };
        negative = !negative;
    }
}

/// Classical Möbius numbers `mu(v, w)` of the reachability order, for all
/// comparable pairs (vertex indices in the graph's canonical order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusTable {
    values: BTreeMap<(usize, usize), BigInt>,
}

impl MobiusTable {
    /// `mu(v, w)` by vertex index; `None` when `v >= w` fails.
    pub fn get(&self, v: usize, w: usize) -> Option<&BigInt> {
        self.values.get(&(v, w))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.values.iter().map(|(&(v, w), m)| (v, w, m))
    }
}

/// Möbius numbers via the defining recursion: `mu(v,v) = 1` and, for
/// `v > w`, `sum_{v >= u >= w} mu(u, w) = 0`.
pub fn mobius_table(g: &LayeredGraph) -> MobiusTable {
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| g.level(i));
    let mut values = BTreeMap::new();
    for &v in &order {
        for w in 0..n {
            if v == w {
                values.insert((v, w), BigInt::one());
            } else if g.reaches(v, w) {
                // Every u with v > u >= w sits at a strictly lower level
                // than v, so mu(u, w) is already present.
                let mut acc = BigInt::zero();
                for u in 0..n {
                    if g.reaches(v, u) && g.geq_idx(u, w) {
                        acc += &values[&(u, w)];
                    }
                }
                values.insert((v, w), -acc);
            }
        }
    }
    MobiusTable { values }
}

/// Rebuilds the inverse zeta matrix from the Möbius factorization
/// `mu(v, w) * t^(|v|-|w|)`. Must agree with `invert_zeta` entrywise.
pub fn zeta_inverse_from_mobius(g: &LayeredGraph, table: &MobiusTable) -> PolyMatrix {
    let n = g.vertex_count();
    let mut out = PolyMatrix::zero(n);
    for (v, w, mu) in table.pairs() {
        let gap = (g.level(v) - g.level(w)) as usize;
        out.set(v, w, IntPoly::monomial(mu.clone(), gap));
    }
    out
}

/// Denominator via the Möbius route:
/// `D(t) = 1 - t * sum_{v >= w} mu(v,w) t^(|v|-|w|)`.
pub fn denominator_mobius(g: &LayeredGraph) -> IntPoly {
    let table = mobius_table(g);
    let top = g.top_level() as usize;
    let mut by_gap = vec![BigInt::zero(); top + 1];
    for (v, w, mu) in table.pairs() {
        by_gap[(g.level(v) - g.level(w)) as usize] += mu;
    }
    let mut coeffs = vec![BigInt::zero(); top + 2];
    coeffs[0] = BigInt::one();
    for (gap, total) in by_gap.into_iter().enumerate() {
        coeffs[gap + 1] = -total;
    }
    IntPoly::from_coeffs(coeffs)
}

/// Denominator via explicit enumeration of all strictly decreasing chains
/// `v_1 > ... > v_len`: each contributes `(-1)^len t^(|v_1|-|v_len|+1)`.
///
/// Chain counts explode on wide posets, so enumeration aborts once `cap`
/// chains have been visited.
pub fn denominator_chains(g: &LayeredGraph, cap: u64) -> Result<IntPoly, HilbertError> {
    struct Walk {
        down: Vec<Vec<usize>>,
        coeffs: Vec<BigInt>,
        visited: u64,
        cap: u64,
    }

    impl Walk {
        fn extend(
            &mut self,
            g: &LayeredGraph,
            start_level: u32,
            current: usize,
            len: usize,
        ) -> Result<(), HilbertError> {
            self.visited += 1;
            if self.visited > self.cap {
                return Err(HilbertError::ChainBudgetExceeded { cap: self.cap });
            }
            let exp = (start_level - g.level(current)) as usize + 1;
            if len % 2 == 1 {
                self.coeffs[exp] -= 1;
            } else {
                self.coeffs[exp] += 1;
            }
            for i in 0..self.down[current].len() {
                let w = self.down[current][i];
                self.extend(g, start_level, w, len + 1)?;
            }
            Ok(())
        }
    }

    let n = g.vertex_count();
    let top = g.top_level() as usize;
    let mut coeffs = vec![BigInt::zero(); top + 2];
    coeffs[0] = BigInt::one();
    let mut walk = Walk {
        down: (0..n)
            .map(|v| (0..n).filter(|&w| g.reaches(v, w)).collect())
            .collect(),
        coeffs,
        visited: 0,
        cap,
    };
    for v in 0..n {
        walk.extend(g, g.level(v), v, 1)?;
    }
    Ok(IntPoly::from_coeffs(walk.coeffs))
}

/// A computed Hilbert series: the denominator `D(t)`, the truncated
/// expansion of `(1 - t)/D(t)`, and the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertResult {
    pub denominator: IntPoly,
    pub series: IntSeries,
    pub method: Method,
}

fn expand_from_denominator(den: &IntPoly, truncation: usize, method: Method) -> HilbertResult {
    let series = RationalFn::new(IntPoly::from_ints(&[1, -1]), den.clone())
        .expect("denominators always have constant term 1")
        .expand(truncation);
    HilbertResult {
        denominator: den.clone(),
        series,
        method,
    }
}

/// Hilbert series by the default (Möbius) route.
pub fn hilbert_series(g: &LayeredGraph, truncation: usize) -> HilbertResult {
    let den = denominator_mobius(g);
    expand_from_denominator(&den, truncation, Method::Mobius)
}

/// Hilbert series by a chosen route; the chain route respects `chain_cap`.
pub fn hilbert_series_with_method(
    g: &LayeredGraph,
    truncation: usize,
    method: Method,
    chain_cap: u64,
) -> Result<HilbertResult, HilbertError> {
    let den = match method {
        Method::Mobius => denominator_mobius(g),
        Method::Chains => denominator_chains(g, chain_cap)?,
    };
    Ok(expand_from_denominator(&den, truncation, method))
}

/// Per-vertex series `h_v(t)`, one entry per vertex in canonical order,
/// with `h_* = 1`. Satisfies `1 + sum_{v in V+} h_v = h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSeriesTable {
    entries: Vec<(String, IntSeries)>,
}

impl VertexSeriesTable {
    pub fn get(&self, id: &str) -> Option<&IntSeries> {
        self.entries
            .iter()
            .find(|(vid, _)| vid == id)
            .map(|(_, s)| s)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &IntSeries)> {
        self.entries.iter().map(|(id, s)| (id.as_str(), s))
    }
}

/// Vertex series by the descending recursion
/// `h_v = (t + ... + t^|v|) h - sum_{v > w > *} t^(|v|-|w|) h_w`,
/// processed in increasing level so every `h_w` on the right is known.
/// The sum excludes both `w = v` and `w = *`.
pub fn vertex_series(g: &LayeredGraph, truncation: usize) -> VertexSeriesTable {
    let h = hilbert_series(g, truncation).series;
    let n = g.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| g.level(i));
    let mut table: Vec<Option<IntSeries>> = vec![None; n];
    for &v in &order {
        let lv = g.level(v) as usize;
        if lv == 0 {
            table[v] = Some(IntSeries::one(truncation));
            continue;
        }
        // t + t^2 + ... + t^|v|, expanded rather than divided by (t - 1).
        let mut ladder = vec![BigInt::zero(); lv + 1];
        for c in ladder.iter_mut().skip(1) {
            *c = BigInt::one();
        }
        let mut s = IntSeries::from_poly(&IntPoly::from_coeffs(ladder), truncation).mul(&h);
        for (w, hw) in table.iter().enumerate() {
            if g.reaches(v, w) && g.level(w) >= 1 {
                let gap = lv - g.level(w) as usize;
                let shifted = IntSeries::from_poly(&IntPoly::monomial(1, gap), truncation)
                    .mul(hw.as_ref().expect("lower levels already computed"));
                s = s.sub(&shifted);
            }
        }
        table[v] = Some(s);
    }
    VertexSeriesTable {
        entries: g
            .vertices()
            .iter()
            .zip(table)
            .map(|(v, s)| (v.id.clone(), s.expect("every vertex visited")))
            .collect(),
    }
}

/// Koszul-dual series `1/h(-t)`, plus the exact polynomial `D(-t)/(1+t)`
/// whenever that division is exact. `polynomial = None` means the dual
/// series is reported without any polynomiality claim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualResult {
    pub series: IntSeries,
    pub polynomial: Option<IntPoly>,
}

pub fn dual_series(g: &LayeredGraph, truncation: usize) -> DualResult {
    let h = hilbert_series(g, truncation);
    let series = h
        .series
        .substitute_neg()
        .inverse()
        .expect("h(0) = 1, so h(-t) is invertible");
    let polynomial = h
        .denominator
        .substitute_neg()
        .div_exact(&IntPoly::from_ints(&[1, 1]))
        .ok();
    DualResult { series, polynomial }
}

/// Gaussian binomial coefficient at an integer `q >= 1`, by the q-Pascal
/// recursion; `q = 1` gives the ordinary binomial.
pub fn q_binomial(n: u32, k: u32, q: u64) -> Result<BigInt, HilbertError> {
    if k > n {
        return Err(HilbertError::OutOfRange { n, k });
    }
    let q = BigInt::from(q);
    // row[j] = [i choose j]_q, grown one row at a time.
    let mut row = vec![BigInt::one()];
    for _ in 1..=n {
        let mut next = vec![BigInt::one()];
        let mut qpow = BigInt::one();
        for j in 1..row.len() {
            qpow *= &q;
            next.push(&row[j - 1] + &qpow * &row[j]);
        }
        next.push(BigInt::one());
        row = next;
    }
    Ok(row[k as usize].clone())
}

/// Verifies the q-binomial theorem
/// `prod_{i=0}^{m-1} (1 + x q^i) = sum_j [m choose j]_q q^(j(j-1)/2) x^j`
/// at an integer point.
pub fn qbinomial_theorem_check(m: u32, q: u64, x: i64) -> bool {
    let qb = BigInt::from(q);
    let x = BigInt::from(x);
    let mut lhs = BigInt::one();
    let mut qpow = BigInt::one();
    for _ in 0..m {
        lhs *= BigInt::one() + &x * &qpow;
        qpow *= &qb;
    }
    let mut rhs = BigInt::zero();
    for j in 0..=m {
        let coeff = q_binomial(m, j, q).expect("j <= m");
        rhs += coeff * qb.pow(j * j.saturating_sub(1) / 2) * x.pow(j);
    }
    lhs == rhs
}

/// Closed form for the subset-lattice family: `(1 - t)/(1 - t(2 - t)^n)`.
pub fn closed_qn(n: u32) -> RationalFn {
    let core = IntPoly::from_ints(&[2, -1]).pow(n);
    let den = IntPoly::one().sub(&IntPoly::monomial(1, 1).mul(&core));
    RationalFn::new(IntPoly::from_ints(&[1, -1]), den).expect("constant term 1")
}

/// Closed form for the subspace-lattice family:
/// `(1 - t) / (1 - t * sum_m [n choose m]_q prod_{i=0}^{n-m-1} (1 - t q^i))`.
pub fn closed_lnq(n: u32, q: u64) -> RationalFn {
    let qb = BigInt::from(q);
    let mut sum = IntPoly::zero();
    for m in 0..=n {
        let binom = q_binomial(n, m, q).expect("m <= n");
        let mut prod = IntPoly::constant(binom);
        let mut qpow = BigInt::one();
        for _ in 0..n - m {
            // factor (1 - t q^i)
            let factor = IntPoly::from_coeffs(vec![BigInt::one(), -&qpow]);
            prod = prod.mul(&factor);
            qpow *= &qb;
        }
        sum = sum.add(&prod);
    }
    let den = IntPoly::one().sub(&IntPoly::monomial(1, 1).mul(&sum));
    RationalFn::new(IntPoly::from_ints(&[1, -1]), den).expect("constant term 1")
}

/// Level sizes `[m_n, ..., m_1, m_0]` of a complete layered graph; the
/// bottom size must be 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompleteSpec {
    sizes: Vec<u64>,
}

impl CompleteSpec {
    pub fn new(sizes: Vec<u64>) -> Result<Self, GenError> {
        match sizes.last() {
            Some(1) => {}
            Some(&other) => return Err(GenError::BottomLevelNotSingleton(other)),
            None => return Err(GenError::BottomLevelNotSingleton(0)),
        }
        if let Some(pos) = sizes.iter().position(|&c| c == 0) {
            return Err(GenError::EmptyLevel(pos));
        }
        Ok(CompleteSpec { sizes })
    }

    /// Top-first list as given.
    pub fn sizes(&self) -> &[u64] {
        &self.sizes
    }

    pub fn top_level(&self) -> u32 {
        (self.sizes.len() - 1) as u32
    }

    /// `m_level`, indexing from the bottom.
    fn size_at(&self, level: u32) -> BigInt {
        BigInt::from(self.sizes[self.sizes.len() - 1 - level as usize])
    }
}

/// Closed form for complete layered graphs:
/// `D = 1 - sum_{k=0}^n sum_{a=k}^n (-1)^k c(a,k) t^(k+1)` with
/// `c(a,0) = m_a` and
/// `c(a,k) = m_a (m_{a-1} - 1) ... (m_{a-k+1} - 1) m_{a-k}` for k >= 1.
pub fn closed_complete(spec: &CompleteSpec) -> RationalFn {
    let n = spec.top_level();
    let mut coeffs = vec![BigInt::zero(); n as usize + 2];
    coeffs[0] = BigInt::one();
    for k in 0..=n {
        let mut total = BigInt::zero();
        for a in k..=n {
            let mut c = spec.size_at(a);
            if k >= 1 {
                for j in 1..k {
                    c *= spec.size_at(a - j) - 1;
                }
                c *= spec.size_at(a - k);
            }
            total += c;
        }
        if k % 2 == 1 {
            total = -total;
        }
        // D picks up -(-1)^k c(a,k) t^(k+1)
        coeffs[k as usize + 1] = -total;
    }
    let den = IntPoly::from_coeffs(coeffs);
    RationalFn::new(IntPoly::from_ints(&[1, -1]), den).expect("constant term 1")
}

/// Koszul dual of the subspace-lattice series, as a polynomial:
/// `1 + t * sum_{m=0}^{n-1} [n choose m]_q prod_{i=1}^{n-m-1} (1 + t q^i)`.
///
/// Note the leading factor `t` and the product starting at `i = 1`; this
/// is the form forced by `H(A,t) H(A^!,-t) = 1`, and it is what the tests
/// hold the division route `D(-t)/(1+t)` against.
pub fn closed_dual_lnq(n: u32, q: u64) -> IntPoly {
    let qb = BigInt::from(q);
    let mut sum = IntPoly::zero();
    for m in 0..n {
        let binom = q_binomial(n, m, q).expect("m < n");
        let mut prod = IntPoly::constant(binom);
        let mut qpow = qb.clone();
        for _ in 1..n - m {
            let factor = IntPoly::from_coeffs(vec![BigInt::one(), qpow.clone()]);
            prod = prod.mul(&factor);
            qpow *= &qb;
        }
        sum = sum.add(&prod);
    }
    IntPoly::one().add(&IntPoly::monomial(1, 1).mul(&sum))
}

/// Koszul dual of the complete-graph series, as a polynomial:
/// `1 + sum_{k=1}^n sum_{a=k}^n m_a (m_{a-1} - 1) ... (m_{a-k+1} - 1) t^k`.
pub fn closed_dual_complete(spec: &CompleteSpec) -> IntPoly {
    let n = spec.top_level();
    let mut coeffs = vec![BigInt::zero(); n as usize + 1];
    coeffs[0] = BigInt::one();
    for k in 1..=n {
        let mut total = BigInt::zero();
        for a in k..=n {
            let mut c = spec.size_at(a);
            for j in 1..k {
                c *= spec.size_at(a - j) - 1;
            }
            total += c;
        }
        coeffs[k as usize] = total;
    }
    IntPoly::from_coeffs(coeffs)
}

#[derive(Serialize, Deserialize)]
struct HilbertResultRepr {
    denominator: IntPoly,
    #[serde(with = "crate::series::biglist")]
    series: Vec<BigInt>,
    truncation: usize,
    method: Method,
}

impl Serialize for HilbertResult {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        HilbertResultRepr {
            denominator: self.denominator.clone(),
            series: self.series.coeffs().to_vec(),
            truncation: self.series.truncation(),
            method: self.method,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for HilbertResult {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = HilbertResultRepr::deserialize(de)?;
        if repr.series.len().checked_sub(1) != Some(repr.truncation) {
            return Err(D::Error::custom("series length must equal truncation + 1"));
        }
        Ok(HilbertResult {
            denominator: repr.denominator,
            series: IntSeries::from_coeff_vec(repr.series),
            method: repr.method,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct DualResultRepr {
    #[serde(with = "crate::series::biglist")]
    series: Vec<BigInt>,
    truncation: usize,
    dual_polynomial: Option<IntPoly>,
}

impl Serialize for DualResult {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        DualResultRepr {
            series: self.series.coeffs().to_vec(),
            truncation: self.series.truncation(),
            dual_polynomial: self.polynomial.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for DualResult {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = DualResultRepr::deserialize(de)?;
        if repr.series.len().checked_sub(1) != Some(repr.truncation) {
            return Err(D::Error::custom("series length must equal truncation + 1"));
        }
        Ok(DualResult {
            series: IntSeries::from_coeff_vec(repr.series),
            polynomial: repr.dual_polynomial,
        })
    }
}
