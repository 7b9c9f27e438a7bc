#![allow(dead_code)]

use hc_core::arith::{int, Rational, VarSet};
use hc_core::sampler::Sampler;
use hc_core::PointConfig;

pub fn v(xs: &[i64]) -> VarSet {
    xs.iter().map(|&n| int(n)).collect()
}

/// `c = 1, t̄ = {0}, x̄ = {3}, s̄ = {5}, ȳ = {7}`
pub fn canonical() -> PointConfig {
    PointConfig::new(int(1), v(&[0]), v(&[3]), v(&[5]), v(&[7])).unwrap()
}

/// `n` entries each for `x̄` and `ȳ`, plus `extra` more, all mutually
/// admissible.
pub fn k_point(sampler: &mut Sampler, n: usize, extra: usize, c: &Rational) -> (VarSet, VarSet, VarSet) {
    let vars = sampler.fresh(&[], c, 2 * n + extra).unwrap();
    (vars[..n].to_vec(), vars[n..2 * n].to_vec(), vars[2 * n..].to_vec())
}
