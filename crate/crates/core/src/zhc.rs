//! `Z_{a,b}(t̄; x̄ | s̄; ȳ)` as sums over partitions of two of its four sets.
//!
//! Every formula is a finite sum of products of `K_n` and `f`-products. The
//! sums are exact, so all six agree bit for bit at any validated point.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{concat, f_prod, int, pick, shift, sign, Rational, VarSet};
use crate::error::{Error, Result};
use crate::khc::k_value;

/// The coupling and the four ordered variable sets of `Z_{a,b}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointConfig {
    #[serde(with = "crate::arith::serde_text")]
    pub c: Rational,
    #[serde(with = "crate::arith::serde_text::vec")]
    pub t: VarSet,
    #[serde(with = "crate::arith::serde_text::vec")]
    pub x: VarSet,
    #[serde(with = "crate::arith::serde_text::vec")]
    pub s: VarSet,
    #[serde(with = "crate::arith::serde_text::vec")]
    pub y: VarSet,
}

impl PointConfig {
    /// Builds a validated point.
    ///
    /// No two entries of `t̄ ∪ x̄ ∪ s̄ ∪ ȳ` may differ by `0` or `±c`. Points
    /// that also avoid `±2c` (as sampled ones do) keep every term of every
    /// representation finite; otherwise a single representation may still hit
    /// a pole and report it.
    pub fn new(c: Rational, t: VarSet, x: VarSet, s: VarSet, y: VarSet) -> Result<Self> {
        let pt = PointConfig { c, t, x, s, y };
        pt.validate()?;
        Ok(pt)
    }

    pub fn validate(&self) -> Result<()> {
        if self.c.is_zero() {
            return Err(Error::ZeroCoupling);
        }
        if self.t.len() != self.x.len() || self.s.len() != self.y.len() {
            return Err(Error::SizeMismatch(format!(
                "need #t = #x and #s = #y, got {}, {}, {}, {}",
                self.t.len(),
                self.x.len(),
                self.s.len(),
                self.y.len()
            )));
        }
        let labelled: Vec<(char, usize, &Rational)> = [('t', &self.t), ('x', &self.x), ('s', &self.s), ('y', &self.y)]
            .into_iter()
            .flat_map(|(name, set)| set.iter().enumerate().map(move |(i, v)| (name, i, v)))
            .collect();
        for (i, (n1, i1, v1)) in labelled.iter().enumerate() {
            for (n2, i2, v2) in &labelled[i + 1..] {
                if let Some(k) = forbidden_multiple(v1, v2, &self.c, 1) {
                    return Err(Error::DegeneratePoint(format!(
                        "{n1}[{i1}] - {n2}[{i2}] = {k}c (c = {})",
                        self.c
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn a(&self) -> usize {
        self.t.len()
    }

    pub fn b(&self) -> usize {
        self.s.len()
    }
}

/// `Some(k)` when `u - v = k·c` for some `|k| <= reach`.
pub(crate) fn forbidden_multiple(u: &Rational, v: &Rational, c: &Rational, reach: i64) -> Option<i64> {
    let d = u - v;
    (-reach..=reach).find(|&k| d == c * int(k))
}

/// A split of `{0, …, n-1}` into labelled parts of prescribed sizes. Each part
/// is sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSplit {
    pub parts: Vec<Vec<usize>>,
}

impl SubsetSplit {
    /// Part `I`.
    pub fn first(&self) -> &[usize] {
        &self.parts[0]
    }

    /// Part `II`.
    pub fn second(&self) -> &[usize] {
        &self.parts[1]
    }
}

/// Every way to split `{0, …, set_size-1}` into labelled subsets of the given
/// sizes; the count is the multinomial coefficient.
pub fn partitions(set_size: usize, part_sizes: &[usize]) -> Result<impl Iterator<Item = SubsetSplit>> {
    if part_sizes.iter().sum::<usize>() != set_size {
        return Err(Error::SizeMismatch(format!(
            "part sizes {part_sizes:?} do not add up to {set_size}"
        )));
    }
    let mut out = Vec::new();
    split_rec(
        &(0..set_size).collect::<Vec<_>>(),
        part_sizes,
        &mut Vec::new(),
        &mut out,
    );
    Ok(out.into_iter())
}

fn split_rec(remaining: &[usize], sizes: &[usize], prefix: &mut Vec<Vec<usize>>, out: &mut Vec<SubsetSplit>) {
    match sizes {
        [] => out.push(SubsetSplit { parts: prefix.clone() }),
        [size, rest @ ..] => {
            for chosen in remaining.iter().copied().combinations(*size) {
                let left: Vec<usize> = remaining.iter().copied().filter(|i| !chosen.contains(i)).collect();
                prefix.push(chosen);
                split_rec(&left, rest, prefix, out);
                prefix.pop();
            }
        }
    }
}

fn two_way(set_size: usize, first: usize) -> impl Iterator<Item = SubsetSplit> {
    partitions(set_size, &[first, set_size - first]).expect("sizes add up by construction")
}

/// The six sum-over-partitions representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumFormulaId {
    /// partitions of `w̄ = {s̄, x̄}`
    RhcIhc,
    RhcIhcTwin,
    /// partitions of `η̄ = {ȳ+c, t̄}`
    AlRhcIhc,
    AlRhcIhcTwin,
    /// partitions of `t̄` and `x̄`
    Gf,
    /// partitions of `s̄` and `ȳ`
    SGf,
}

impl SumFormulaId {
    pub const ALL: [SumFormulaId; 6] = [
        SumFormulaId::RhcIhc,
        SumFormulaId::RhcIhcTwin,
        SumFormulaId::AlRhcIhc,
        SumFormulaId::AlRhcIhcTwin,
        SumFormulaId::Gf,
        SumFormulaId::SGf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SumFormulaId::RhcIhc => "RHC_IHC",
            SumFormulaId::RhcIhcTwin => "RHC_IHC_TWIN",
            SumFormulaId::AlRhcIhc => "AL_RHC_IHC",
            SumFormulaId::AlRhcIhcTwin => "AL_RHC_IHC_TWIN",
            SumFormulaId::Gf => "GF",
            SumFormulaId::SGf => "S_GF",
        }
    }

    /// Number of partition terms summed at size `(a, b)`.
    pub fn term_count(self, a: usize, b: usize) -> u128 {
        match self {
            SumFormulaId::RhcIhc | SumFormulaId::RhcIhcTwin => binomial(a + b, b),
            SumFormulaId::AlRhcIhc | SumFormulaId::AlRhcIhcTwin => binomial(a + b, a),
            SumFormulaId::Gf => (0..=a).map(|n| binomial(a, n).pow(2)).sum(),
            SumFormulaId::SGf => (0..=b).map(|n| binomial(b, n).pow(2)).sum(),
        }
    }
}

impl fmt::Display for SumFormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SumFormulaId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        SumFormulaId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(&s.replace('-', "_")))
            .ok_or_else(|| format!("unknown sum formula {s:?}"))
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `Z_{a,0} = K_a(x̄|t̄)`, `Z_{0,b} = K_b(ȳ|s̄)`, `Z_{0,0} = 1`.
pub fn z_small(pt: &PointConfig) -> Result<Rational> {
    match (pt.a(), pt.b()) {
        (_, 0) => k_value(&pt.x, &pt.t, &pt.c),
        (0, _) => k_value(&pt.y, &pt.s, &pt.c),
        (a, b) => Err(Error::NotBoundaryCase { a, b }),
    }
}

/// `Z_{a,b}` by one of the six partition sums.
pub fn z_sum(rep: SumFormulaId, pt: &PointConfig) -> Result<Rational> {
    match rep {
        SumFormulaId::RhcIhc => rhc_ihc(pt, false),
        SumFormulaId::RhcIhcTwin => rhc_ihc(pt, true),
        SumFormulaId::AlRhcIhc => al_rhc_ihc(pt, false),
        SumFormulaId::AlRhcIhcTwin => al_rhc_ihc(pt, true),
        SumFormulaId::Gf => gf(pt),
        SumFormulaId::SGf => s_gf(pt),
    }
}

/// `w̄ = {s̄, x̄}`
pub fn w_set(pt: &PointConfig) -> VarSet {
    concat(&pt.s, &pt.x)
}

/// `η̄ = {ȳ + c, t̄}`
pub fn eta_set(pt: &PointConfig) -> VarSet {
    concat(&shift(&pt.y, &pt.c), &pt.t)
}

// (-1)^b Σ K_b(s̄-c|w̄_I) K_a(w̄_II|t̄) K_b(ȳ|w̄_I) f(w̄_I,w̄_II)
// twin: the first factor becomes (-1)^a K_a(w̄_II-c|x̄)
fn rhc_ihc(pt: &PointConfig, twin: bool) -> Result<Rational> {
    let (a, b, c) = (pt.a(), pt.b(), &pt.c);
    let w = w_set(pt);
    let minus_c = -c.clone();
    let s_shift = shift(&pt.s, &minus_c);
    let mut total = Rational::zero();
    for split in two_way(a + b, b) {
        let w1 = pick(&w, split.first());
        let w2 = pick(&w, split.second());
        let lead = if twin {
            k_value(&shift(&w2, &minus_c), &pt.x, c)?
        } else {
            k_value(&s_shift, &w1, c)?
        };
        total += lead * k_value(&w2, &pt.t, c)? * k_value(&pt.y, &w1, c)? * f_prod(&w1, &w2, c)?;
    }
    Ok(sign(if twin { a } else { b }) * total)
}

// (-1)^a f(ȳ,x̄) f(s̄,t̄) Σ K_a(t̄-c|η̄_I) K_a(x̄|η̄_I) K_b(η̄_II-c|s̄) f(η̄_I,η̄_II)
// twin: (-1)^b and K_b(η̄_II-c|ȳ+c) in place of K_a(t̄-c|η̄_I)
fn al_rhc_ihc(pt: &PointConfig, twin: bool) -> Result<Rational> {
    let (a, b, c) = (pt.a(), pt.b(), &pt.c);
    let eta = eta_set(pt);
    let minus_c = -c.clone();
    let t_shift = shift(&pt.t, &minus_c);
    let y_shift = shift(&pt.y, c);
    let mut total = Rational::zero();
    for split in two_way(a + b, a) {
        let e1 = pick(&eta, split.first());
        let e2 = pick(&eta, split.second());
        let e2_shift = shift(&e2, &minus_c);
        let lead = if twin {
            k_value(&e2_shift, &y_shift, c)?
        } else {
            k_value(&t_shift, &e1, c)?
        };
        total += lead * k_value(&pt.x, &e1, c)? * k_value(&e2_shift, &pt.s, c)? * f_prod(&e1, &e2, c)?;
    }
    let pre = f_prod(&pt.y, &pt.x, c)? * f_prod(&pt.s, &pt.t, c)?;
    Ok(sign(if twin { b } else { a }) * pre * total)
}

// Σ_n (-1)^n f(s̄,t̄_I) f(ȳ,x̄_II) f(t̄_I,t̄_II) f(x̄_II,x̄_I)
//     × K_n(x̄_I|t̄_I) K_{a-n}(x̄_II|t̄_II-c) K_{b+n}(ȳ, t̄_I-c | s̄, x̄_I)
fn gf(pt: &PointConfig) -> Result<Rational> {
    let (a, c) = (pt.a(), &pt.c);
    let minus_c = -c.clone();
    let mut total = Rational::zero();
    for n in 0..=a {
        for ts in two_way(a, n) {
            let t1 = pick(&pt.t, ts.first());
            let t2 = pick(&pt.t, ts.second());
            let t1_shift = shift(&t1, &minus_c);
            let t2_shift = shift(&t2, &minus_c);
            let pre_t = f_prod(&pt.s, &t1, c)? * f_prod(&t1, &t2, c)?;
            let big_left = concat(&pt.y, &t1_shift);
            for xs in two_way(a, n) {
                let x1 = pick(&pt.x, xs.first());
                let x2 = pick(&pt.x, xs.second());
                let term = f_prod(&pt.y, &x2, c)?
                    * f_prod(&x2, &x1, c)?
                    * k_value(&x1, &t1, c)?
                    * k_value(&x2, &t2_shift, c)?
                    * k_value(&big_left, &concat(&pt.s, &x1), c)?;
                total += sign(n) * &pre_t * term;
            }
        }
    }
    Ok(total)
}

// Σ_n (-1)^n f(s̄_II,t̄) f(ȳ_I,x̄) f(s̄_I,s̄_II) f(ȳ_II,ȳ_I)
//     × K_n(ȳ_I|s̄_I) K_{b-n}(ȳ_II+c|s̄_II) K_{a+n}(s̄_I, x̄ | ȳ_I+c, t̄)
fn s_gf(pt: &PointConfig) -> Result<Rational> {
    let (b, c) = (pt.b(), &pt.c);
    let mut total = Rational::zero();
    for n in 0..=b {
        for ss in two_way(b, n) {
            let s1 = pick(&pt.s, ss.first());
            let s2 = pick(&pt.s, ss.second());
            let pre_s = f_prod(&s2, &pt.t, c)? * f_prod(&s1, &s2, c)?;
            let big_left = concat(&s1, &pt.x);
            for ys in two_way(b, n) {
                let y1 = pick(&pt.y, ys.first());
                let y2 = pick(&pt.y, ys.second());
                let term = f_prod(&y1, &pt.x, c)?
                    * f_prod(&y2, &y1, c)?
                    * k_value(&y1, &s1, c)?
                    * k_value(&shift(&y2, c), &s2, c)?
                    * k_value(&big_left, &concat(&shift(&y1, c), &pt.t), c)?;
                total += sign(n) * &pre_s * term;
            }
        }
    }
    Ok(total)
}

/// Both sides of the shift identity relating the first factors of the
/// `w̄`-sum and its twin, for the split `w̄_I = {s̄_I, x̄_II}`,
/// `w̄_II = {s̄_II, x̄_I}`:
///
/// ```text
/// (-1)^a K_a(w̄_II - c | x̄)   and   (-1)^b K_b(s̄ - c | w̄_I)
/// ```
pub fn twin_identity_sides(pt: &PointConfig, split: &SubsetSplit) -> Result<(Rational, Rational)> {
    let (a, b, c) = (pt.a(), pt.b(), &pt.c);
    let w = w_set(pt);
    let minus_c = -c.clone();
    let w1 = pick(&w, split.first());
    let w2 = pick(&w, split.second());
    let lhs = sign(a) * k_value(&shift(&w2, &minus_c), &pt.x, c)?;
    let rhs = sign(b) * k_value(&shift(&pt.s, &minus_c), &w1, c)?;
    Ok((lhs, rhs))
}
