//! The gl(2) highest coefficient `K_n(x̄|ȳ)`, i.e. the six-vertex partition
//! function with domain wall boundary conditions.
//!
//! Three independent evaluations are provided (Izergin determinant,
//! symmetrization over `x̄`, and expansion over the poles in `y_n`) together
//! with the residue at `x_n = y_n`. `K_0 = 1`.

use itertools::Itertools;
use num::{One, Zero};

use crate::arith::{
    delta_plain, delta_prime, det_exact, f_fn, f_prod, g_fn, prod_over, t_fn, without, Rational, ScalarFn,
};
use crate::error::{Error, Result};

fn check_sizes(x: &[Rational], y: &[Rational]) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::SizeMismatch(format!(
            "K_n needs #x = #y, got {} and {}",
            x.len(),
            y.len()
        )));
    }
    Ok(())
}

/// Izergin determinant: `Δ'(x̄) Δ(ȳ) h(x̄,ȳ) det t(x_j, y_k)`.
///
/// Fails when some `x_j - y_k` is `0` or `-c`; use [`k_value`] for the latter.
pub fn k_det(x: &[Rational], y: &[Rational], c: &Rational) -> Result<Rational> {
    check_sizes(x, y)?;
    if x.is_empty() {
        return Ok(Rational::one());
    }
    let matrix = x
        .iter()
        .map(|xj| y.iter().map(|yk| t_fn(xj, yk, c)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let pre = delta_prime(x, c)? * delta_plain(y, c)? * prod_over(ScalarFn::H, x, y, c)?;
    Ok(pre * det_exact(&matrix))
}

/// `K_n` at any point free of the poles `x_j = y_k`.
///
/// Pairs with `x_j = y_k - c` make the determinant form indeterminate. They
/// are removed one at a time with `K_{n+1}(x̄, z-c | ȳ, z) = -K_n(x̄|ȳ)` before
/// the determinant is taken. With distinct entries the pairing is unique.
pub fn k_value(x: &[Rational], y: &[Rational], c: &Rational) -> Result<Rational> {
    check_sizes(x, y)?;
    let mut xs = x.to_vec();
    let mut ys = y.to_vec();
    let mut negate = false;
    while let Some((j, k)) = xs
        .iter()
        .enumerate()
        .find_map(|(j, xj)| ys.iter().position(|yk| xj - yk + c == Rational::zero()).map(|k| (j, k)))
    {
        xs.remove(j);
        ys.remove(k);
        negate = !negate;
    }
    let v = k_det(&xs, &ys, c)?;
    Ok(if negate { -v } else { v })
}

/// Symmetrization over `x̄` of
/// `prod_j g(x_j,y_j) prod_{j>k} f(x_j,y_k) f(x_k,x_j)`.
///
/// Sums `n!` terms; meant as an oracle for small `n`.
pub fn k_sym(x: &[Rational], y: &[Rational], c: &Rational) -> Result<Rational> {
    check_sizes(x, y)?;
    let n = x.len();
    let mut total = Rational::zero();
    for perm in (0..n).permutations(n) {
        let xs: Vec<&Rational> = perm.iter().map(|&i| &x[i]).collect();
        let mut term = Rational::one();
        for j in 0..n {
            term *= g_fn(xs[j], &y[j], c)?;
            for k in 0..j {
                term *= f_fn(xs[j], &y[k], c)? * f_fn(xs[k], xs[j], c)?;
            }
        }
        total += term;
    }
    Ok(total)
}

/// Expansion of `K_n` over its poles in `y_n`:
///
/// ```text
/// K_n(x̄|ȳ) = Σ_p g(x_p,y_n) f(x_p, ȳ∖y_n) f(x̄∖x_p, x_p) K_{n-1}(x̄∖x_p | ȳ∖y_n)
/// ```
///
/// applied recursively down to `K_0 = 1`.
pub fn k_pole_expand(x: &[Rational], y: &[Rational], c: &Rational) -> Result<Rational> {
    check_sizes(x, y)?;
    let n = x.len();
    if n == 0 {
        return Ok(Rational::one());
    }
    let yn = &y[n - 1];
    let y_rest = &y[..n - 1];
    let mut total = Rational::zero();
    for p in 0..n {
        let xp = &x[p];
        let x_rest = without(x, p);
        let term = g_fn(xp, yn, c)?
            * f_prod(std::slice::from_ref(xp), y_rest, c)?
            * f_prod(&x_rest, std::slice::from_ref(xp), c)?
            * k_pole_expand(&x_rest, y_rest, c)?;
        total += term;
    }
    Ok(total)
}

/// Residue of `x_n ↦ K_n(x̄|ȳ)` at `x_n = y_n`:
///
/// ```text
/// c f(y_n, ȳ∖y_n) f(x̄∖x_n, y_n) K_{n-1}(x̄∖x_n | ȳ∖y_n)
/// ```
///
/// The sign is that of `K_1 = g(x, y) = c/(x - y)`; it is also what the
/// expansion over the poles in `y_n` implies.
///
/// `x_rest` holds the `n - 1` fixed entries of `x̄`; the free one is paired
/// with the last entry of `y`.
pub fn k_residue_at_coincidence(x_rest: &[Rational], y: &[Rational], c: &Rational) -> Result<Rational> {
    if y.is_empty() || x_rest.len() + 1 != y.len() {
        return Err(Error::SizeMismatch(format!(
            "residue needs n >= 1 with n - 1 fixed x entries, got {} and {}",
            x_rest.len(),
            y.len()
        )));
    }
    let n = y.len();
    let yn = &y[n - 1];
    let y_rest = &y[..n - 1];
    Ok(c * f_prod(std::slice::from_ref(yn), y_rest, c)?
        * f_prod(x_rest, std::slice::from_ref(yn), c)?
        * k_det(x_rest, y_rest, c)?)
}
