//! Contour-integral representations of `Z_{a,b}` evaluated by residues, and
//! the pole structure of `Z` in `s_b`.
//!
//! Every integral here has the shape
//!
//! ```text
//! prefactor / ((2πic)^k k!) ∮ G(z̄) L(z̄) F_k(z̄) dz̄,   F_k(z̄) = Π_{j≠l} f(z_j, z_l)^{-1}
//! ```
//!
//! where `L` is the product of linking factors `f(z_j, q)` (or `f(q, z_j)`)
//! over a finite pole set `Q`, and `G` is a product of `K_n` that is regular on
//! and inside the contour. Only `L` has poles inside, all simple, so the
//! integral is a sum over `k`-subsets `P ⊂ Q`. Each of the `k!` orderings of
//! `P` gives the same residue, cancelling `1/k!`. A linking factor
//! `f(z, q)` has residue `+c` at `z = q` and `f(q, z)` has `-c`, which cancels
//! against `c^k`. Orderings that put two variables on the same pole vanish
//! because `F_k` does.

use std::fmt;
use std::str::FromStr;

use num::{One, Zero};

use crate::arith::{concat, f_fn, f_prod, g_fn, int, pick, shift, sign, solve_exact, without, Rational, VarSet};
use crate::error::{Error, Result};
use crate::khc::k_value;
use crate::zhc::{eta_set, forbidden_multiple, partitions, w_set, z_sum, PointConfig, SumFormulaId};

/// The four contour-integral representations, plus the integral
/// `INT_OR_FOR_TWIN` rewritten and evaluated outside the original contour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntegralFormulaId {
    /// `b`-fold, contour around `w̄`
    IntOrFor,
    /// `b`-fold, contour around `η̃ = {ȳ, t̄-c}`
    IntAlFor,
    /// `a`-fold, contour around `w̄`
    IntOrForTwin,
    /// `a`-fold, contour around `η̄ = {ȳ+c, t̄}`
    IntAlForTwin,
    /// `a`-fold, contour around `ξ̄ = {t̄, x̄+c}`
    IntOrForTwinOutside,
}

impl IntegralFormulaId {
    pub const ALL: [IntegralFormulaId; 5] = [
        IntegralFormulaId::IntOrFor,
        IntegralFormulaId::IntAlFor,
        IntegralFormulaId::IntOrForTwin,
        IntegralFormulaId::IntAlForTwin,
        IntegralFormulaId::IntOrForTwinOutside,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IntegralFormulaId::IntOrFor => "INT_OR_FOR",
            IntegralFormulaId::IntAlFor => "INT_AL_FOR",
            IntegralFormulaId::IntOrForTwin => "INT_OR_FOR_TWIN",
            IntegralFormulaId::IntAlForTwin => "INT_AL_FOR_TWIN",
            IntegralFormulaId::IntOrForTwinOutside => "INT_OR_FOR_TWIN_OUTSIDE",
        }
    }

    /// The sum formula the residue evaluation reproduces.
    pub fn sum_counterpart(self) -> SumFormulaId {
        match self {
            IntegralFormulaId::IntOrFor => SumFormulaId::RhcIhc,
            IntegralFormulaId::IntAlFor => SumFormulaId::AlRhcIhcTwin,
            IntegralFormulaId::IntOrForTwin => SumFormulaId::RhcIhcTwin,
            IntegralFormulaId::IntAlForTwin => SumFormulaId::AlRhcIhc,
            IntegralFormulaId::IntOrForTwinOutside => SumFormulaId::Gf,
        }
    }

    /// Number of pole subsets summed at size `(a, b)`.
    pub fn term_count(self, a: usize, b: usize) -> u128 {
        use crate::zhc::binomial;
        match self {
            IntegralFormulaId::IntOrFor | IntegralFormulaId::IntAlFor => binomial(a + b, b),
            IntegralFormulaId::IntOrForTwin | IntegralFormulaId::IntAlForTwin => binomial(a + b, a),
            IntegralFormulaId::IntOrForTwinOutside => binomial(2 * a, a),
        }
    }
}

impl fmt::Display for IntegralFormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IntegralFormulaId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        IntegralFormulaId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(&s.replace('-', "_")))
            .ok_or_else(|| format!("unknown integral formula {s:?}"))
    }
}

/// `F_k(z̄) = Π_{j≠l} f(z_j, z_l)^{-1}`.
pub fn f_product(z: &[Rational], c: &Rational) -> Result<Rational> {
    let mut acc = Rational::one();
    for (j, zj) in z.iter().enumerate() {
        for (l, zl) in z.iter().enumerate() {
            if j != l {
                acc /= f_fn(zj, zl, c)?;
            }
        }
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Linking {
    /// `f(z_j, q)`, residue `+c`
    VariableFirst,
    /// `f(q, z_j)`, residue `-c`
    PoleFirst,
}

struct ContourIntegral<'a> {
    fold: usize,
    poles: VarSet,
    linking: Linking,
    prefactor: Rational,
    c: &'a Rational,
}

impl ContourIntegral<'_> {
    fn link(&self, z: &Rational, q: &Rational) -> Result<Rational> {
        match self.linking {
            Linking::VariableFirst => f_fn(z, q, self.c),
            Linking::PoleFirst => f_fn(q, z, self.c),
        }
    }

    fn evaluate<G>(&self, integrand: G) -> Result<Rational>
    where
        G: Fn(&[Rational]) -> Result<Rational>,
    {
        let n = self.poles.len();
        if self.fold > n {
            return Err(Error::SizeMismatch(format!(
                "{}-fold integral around only {n} poles",
                self.fold
            )));
        }
        let mut total = Rational::zero();
        for split in partitions(n, &[self.fold, n - self.fold])? {
            let chosen = pick(&self.poles, split.first());
            // linking factors left over once each z_j = p_j has used its own
            let mut rest = Rational::one();
            for (j, p) in chosen.iter().enumerate() {
                for (m, q) in self.poles.iter().enumerate() {
                    if m != split.first()[j] {
                        rest *= self.link(p, q)?;
                    }
                }
            }
            rest *= f_product(&chosen, self.c)?;
            total += integrand(&chosen)? * rest;
        }
        let residue_sign = match self.linking {
            Linking::VariableFirst => Rational::one(),
            Linking::PoleFirst => sign(self.fold),
        };
        Ok(&self.prefactor * residue_sign * total)
    }
}

/// `Z_{a,b}` from one of the contour-integral representations, evaluated as a
/// residue sum.
pub fn z_integral(rep: IntegralFormulaId, pt: &PointConfig) -> Result<Rational> {
    let (a, b, c) = (pt.a(), pt.b(), &pt.c);
    let minus_c = -c.clone();
    let al_prefactor = || -> Result<Rational> { Ok(f_prod(&pt.y, &pt.x, c)? * f_prod(&pt.s, &pt.t, c)?) };
    match rep {
        IntegralFormulaId::IntOrFor => {
            // K_b(s̄-c|z̄) K_b(ȳ|z̄) K_{a+b}(w̄|t̄, z̄+c) f(z̄, w̄)
            let w = w_set(pt);
            let s_shift = shift(&pt.s, &minus_c);
            ContourIntegral {
                fold: b,
                poles: w.clone(),
                linking: Linking::VariableFirst,
                prefactor: int(1),
                c,
            }
            .evaluate(|z| {
                Ok(k_value(&s_shift, z, c)? * k_value(&pt.y, z, c)? * k_value(&w, &concat(&pt.t, &shift(z, c)), c)?)
            })
        }
        IntegralFormulaId::IntAlFor => {
            // K_b(z̄|s̄) K_b(z̄|ȳ+c) K_{a+b}(x̄, z̄ | η̃+c) f(η̃, z̄)
            let eta_tilde = concat(&pt.y, &shift(&pt.t, &minus_c));
            let eta_tilde_up = shift(&eta_tilde, c);
            let y_shift = shift(&pt.y, c);
            ContourIntegral {
                fold: b,
                poles: eta_tilde,
                linking: Linking::PoleFirst,
                prefactor: sign(b) * al_prefactor()?,
                c,
            }
            .evaluate(|z| {
                Ok(k_value(z, &pt.s, c)? * k_value(z, &y_shift, c)? * k_value(&concat(&pt.x, z), &eta_tilde_up, c)?)
            })
        }
        IntegralFormulaId::IntOrForTwin => {
            // K_a(z̄|x̄+c) K_a(z̄|t̄) K_{a+b}(ȳ, z̄-c | w̄) f(w̄, z̄)
            let w = w_set(pt);
            let x_shift = shift(&pt.x, c);
            ContourIntegral {
                fold: a,
                poles: w.clone(),
                linking: Linking::PoleFirst,
                prefactor: sign(a),
                c,
            }
            .evaluate(|z| {
                Ok(k_value(z, &x_shift, c)?
                    * k_value(z, &pt.t, c)?
                    * k_value(&concat(&pt.y, &shift(z, &minus_c)), &w, c)?)
            })
        }
        IntegralFormulaId::IntAlForTwin => {
            // K_a(t̄-c|z̄) K_a(x̄|z̄) K_{a+b}(η̄-c | s̄, z̄) f(z̄, η̄)
            let eta = eta_set(pt);
            let eta_down = shift(&eta, &minus_c);
            let t_shift = shift(&pt.t, &minus_c);
            ContourIntegral {
                fold: a,
                poles: eta,
                linking: Linking::VariableFirst,
                prefactor: al_prefactor()?,
                c,
            }
            .evaluate(|z| {
                Ok(k_value(&t_shift, z, c)? * k_value(&pt.x, z, c)? * k_value(&eta_down, &concat(&pt.s, z), c)?)
            })
        }
        IntegralFormulaId::IntOrForTwinOutside => {
            // (-1)^{a+b} f(ȳ, w̄) ∮ K_a(t̄-c|z̄) K_a(x̄|z̄) K_{a+b}(w̄ | ȳ+c, z̄) f(z̄, ξ̄)
            let w = w_set(pt);
            let xi = concat(&pt.t, &shift(&pt.x, c));
            let t_shift = shift(&pt.t, &minus_c);
            let y_shift = shift(&pt.y, c);
            ContourIntegral {
                fold: a,
                poles: xi,
                linking: Linking::VariableFirst,
                prefactor: sign(a + b) * f_prod(&pt.y, &w, c)?,
                c,
            }
            .evaluate(|z| Ok(k_value(&t_shift, z, c)? * k_value(&pt.x, z, c)? * k_value(&w, &concat(&y_shift, z), c)?))
        }
    }
}

/// Residues `r_m` of `u ↦ Σ_m r_m / (u - p_m)` fitted to exact samples.
///
/// The first `#poles` samples determine the residues through a Cauchy system;
/// any further samples must be reproduced exactly.
pub fn pole_decompose(samples: &[(Rational, Rational)], poles: &[Rational]) -> Result<Vec<Rational>> {
    let n = poles.len();
    if samples.len() < n {
        return Err(Error::SizeMismatch(format!(
            "{} samples cannot fix {n} residues",
            samples.len()
        )));
    }
    for (i, (u, _)) in samples.iter().enumerate() {
        if samples[..i].iter().any(|(v, _)| v == u) {
            return Err(Error::SingularSystem);
        }
        if poles.contains(u) {
            return Err(Error::DegeneratePoint(format!("sample abscissa {u} sits on a pole")));
        }
    }
    let (square, extra) = samples.split_at(n);
    let matrix: Vec<Vec<Rational>> = square
        .iter()
        .map(|(u, _)| poles.iter().map(|p| (u - p).recip()).collect())
        .collect();
    let rhs: Vec<Rational> = square.iter().map(|(_, v)| v.clone()).collect();
    let residues = solve_exact(&matrix, &rhs)?;
    for (u, v) in extra {
        if &partial_fraction_value(poles, &residues, u) != v {
            return Err(Error::InconsistentSamples);
        }
    }
    Ok(residues)
}

/// `Σ_m r_m / (u - p_m)`
pub fn partial_fraction_value(poles: &[Rational], residues: &[Rational], u: &Rational) -> Rational {
    poles.iter().zip(residues).map(|(p, r)| r / (u - p)).sum()
}

/// Abscissae starting at 10⁴ that keep a distance other than `0, ±c, ±2c`
/// from every entry of `avoid`.
pub fn fresh_abscissae(avoid: &[Rational], c: &Rational, count: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count);
    let mut u = int(10_000);
    while out.len() < count {
        if avoid.iter().all(|v| forbidden_multiple(&u, v, c, 2).is_none()) {
            out.push(u.clone());
        }
        u += int(1);
    }
    out
}

/// `s_b ↦ Z_{a,b}` written as `Σ_m r_m / (s_b - p_m)` over the poles `ȳ ∪ t̄`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoleExpansion {
    pub poles: VarSet,
    pub residues: Vec<Rational>,
}

impl PoleExpansion {
    pub fn value_at(&self, u: &Rational) -> Rational {
        partial_fraction_value(&self.poles, &self.residues, u)
    }

    pub fn residue_at(&self, pole: &Rational) -> Option<&Rational> {
        self.poles.iter().position(|p| p == pole).map(|i| &self.residues[i])
    }
}

/// Evaluator used to sample `Z` when extracting residues.
pub fn default_evaluator(pt: &PointConfig) -> Result<Rational> {
    z_sum(SumFormulaId::RhcIhc, pt)
}

fn with_last_s(pt: &PointConfig, value: Rational) -> Result<PointConfig> {
    let mut s = pt.s.clone();
    *s.last_mut().expect("b >= 1") = value;
    PointConfig::new(pt.c.clone(), pt.t.clone(), pt.x.clone(), s, pt.y.clone())
}

fn others_than_last_s(pt: &PointConfig) -> VarSet {
    let b = pt.b();
    pt.t.iter()
        .chain(&pt.x)
        .chain(&pt.s[..b - 1])
        .chain(&pt.y)
        .cloned()
        .collect()
}

/// Residues of `s_b ↦ Z_{a,b}` at `ȳ ∪ t̄` (in that order), from `a + b`
/// samples of `eval` plus `extra` further samples that must match.
pub fn s_last_expansion<E>(pt: &PointConfig, extra: usize, eval: E) -> Result<PoleExpansion>
where
    E: Fn(&PointConfig) -> Result<Rational>,
{
    if pt.b() == 0 {
        return Err(Error::SizeMismatch("Z has no s variable when b = 0".into()));
    }
    let poles = concat(&pt.y, &pt.t);
    let abscissae = fresh_abscissae(&others_than_last_s(pt), &pt.c, poles.len() + extra);
    let samples = abscissae
        .into_iter()
        .map(|u| {
            let v = eval(&with_last_s(pt, u.clone())?)?;
            Ok((u, v))
        })
        .collect::<Result<Vec<_>>>()?;
    let residues = pole_decompose(&samples, &poles)?;
    Ok(PoleExpansion { poles, residues })
}

/// Checks that the simple-pole expansion of `s_b ↦ Z` fitted on `a + b`
/// samples reproduces `Z` at `fresh` further abscissae, and at `s_b` itself.
pub fn pole_structure_check(pt: &PointConfig, fresh: usize) -> Result<bool> {
    let expansion = s_last_expansion(pt, 0, default_evaluator)?;
    let avoid = concat(
        &others_than_last_s(pt),
        &fresh_abscissae(&others_than_last_s(pt), &pt.c, expansion.poles.len()),
    );
    for u in fresh_abscissae(&avoid, &pt.c, fresh) {
        if expansion.value_at(&u) != default_evaluator(&with_last_s(pt, u.clone())?)? {
            return Ok(false);
        }
    }
    Ok(expansion.value_at(pt.s.last().unwrap()) == default_evaluator(pt)?)
}

/// Residue of `Z_{a,b}` at `s_b = y_b` predicted from `Z_{a,b-1}`:
///
/// ```text
/// -c f(y_b, s̄∖s_b) f(ȳ∖y_b, y_b) f(y_b, x̄) Z_{a,b-1}(t̄; x̄ | s̄∖s_b; ȳ∖y_b)
/// ```
pub fn rec_triv_rhs<E>(pt: &PointConfig, eval: E) -> Result<Rational>
where
    E: Fn(&PointConfig) -> Result<Rational>,
{
    let b = pt.b();
    if b == 0 {
        return Err(Error::SizeMismatch("residue at s_b = y_b needs b >= 1".into()));
    }
    let c = &pt.c;
    let yb = std::slice::from_ref(&pt.y[b - 1]);
    let s_rest = &pt.s[..b - 1];
    let y_rest = &pt.y[..b - 1];
    let smaller = PointConfig::new(c.clone(), pt.t.clone(), pt.x.clone(), s_rest.to_vec(), y_rest.to_vec())?;
    Ok(-c.clone() * f_prod(yb, s_rest, c)? * f_prod(y_rest, yb, c)? * f_prod(yb, &pt.x, c)? * eval(&smaller)?)
}

/// Residue of `Z_{a,b}` at `s_b = t_a` predicted from `Z_{a-1,b}`:
///
/// ```text
/// c f(s̄∖s_b, t_a) f(t_a, t̄∖t_a) Σ_p g(x_p, t_a) f(x̄∖x_p, x_p) Z_{a-1,b}(t̄∖t_a; x̄∖x_p | {s̄∖s_b, x_p}; ȳ)
/// ```
pub fn rec_nontriv_rhs<E>(pt: &PointConfig, eval: E) -> Result<Rational>
where
    E: Fn(&PointConfig) -> Result<Rational>,
{
    let (a, b, c) = (pt.a(), pt.b(), &pt.c);
    if a == 0 || b == 0 {
        return Err(Error::SizeMismatch("residue at s_b = t_a needs a, b >= 1".into()));
    }
    let ta = &pt.t[a - 1];
    let t_rest = &pt.t[..a - 1];
    let s_rest = &pt.s[..b - 1];
    let ta1 = std::slice::from_ref(ta);
    let mut sum = Rational::zero();
    for p in 0..a {
        let xp = &pt.x[p];
        let x_rest = without(&pt.x, p);
        let mut s_new = s_rest.to_vec();
        s_new.push(xp.clone());
        let smaller = PointConfig::new(c.clone(), t_rest.to_vec(), x_rest.clone(), s_new, pt.y.clone())
            .map_err(|e| Error::DegeneratePoint(format!("substituting x_{p} into s: {e}")))?;
        sum += g_fn(xp, ta, c)? * f_prod(&x_rest, std::slice::from_ref(xp), c)? * eval(&smaller)?;
    }
    Ok(c * f_prod(s_rest, ta1, c)? * f_prod(ta1, t_rest, c)? * sum)
}

/// Extracts the residue at `s_b = y_b` from samples and compares it with
/// [`rec_triv_rhs`].
pub fn verify_recursion_triv(pt: &PointConfig) -> Result<bool> {
    let expansion = s_last_expansion(pt, 1, default_evaluator)?;
    let residue = &expansion.residues[pt.b() - 1];
    Ok(*residue == rec_triv_rhs(pt, default_evaluator)?)
}

/// Extracts the residue at `s_b = t_a` from samples and compares it with
/// [`rec_nontriv_rhs`].
pub fn verify_recursion_nontriv(pt: &PointConfig) -> Result<bool> {
    if pt.a() == 0 {
        return Err(Error::SizeMismatch("residue at s_b = t_a needs a >= 1".into()));
    }
    let expansion = s_last_expansion(pt, 1, default_evaluator)?;
    let residue = &expansion.residues[pt.b() + pt.a() - 1];
    Ok(*residue == rec_nontriv_rhs(pt, default_evaluator)?)
}

fn moved_last(set: &[Rational], index: usize) -> VarSet {
    let mut out = without(set, index);
    out.push(set[index].clone());
    out
}

/// `Z_{a,b}` rebuilt from `Z_{a,0} = K_a(x̄|t̄)` through the residues in
/// `s_b` alone, using that `Z` is symmetric in `ȳ` and `t̄` and vanishes as
/// `s_b → ∞`.
pub fn z_recursive(pt: &PointConfig) -> Result<Rational> {
    let (a, b, c) = (pt.a(), pt.b(), &pt.c);
    if b == 0 {
        return k_value(&pt.x, &pt.t, c);
    }
    let sb = &pt.s[b - 1];
    let mut total = Rational::zero();
    for m in 0..b {
        let moved = PointConfig::new(
            c.clone(),
            pt.t.clone(),
            pt.x.clone(),
            pt.s.clone(),
            moved_last(&pt.y, m),
        )?;
        total += rec_triv_rhs(&moved, z_recursive)? / (sb - &pt.y[m]);
    }
    for l in 0..a {
        let moved = PointConfig::new(
            c.clone(),
            moved_last(&pt.t, l),
            pt.x.clone(),
            pt.s.clone(),
            pt.y.clone(),
        )?;
        total += rec_nontriv_rhs(&moved, z_recursive)? / (sb - &pt.t[l]);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn v(xs: &[i64]) -> VarSet {
        xs.iter().map(|&n| int(n)).collect()
    }

    fn canonical() -> PointConfig {
        PointConfig::new(int(1), v(&[0]), v(&[3]), v(&[5]), v(&[7])).unwrap()
    }

    #[test]
    fn integral_small_cases() {
        let p01 = PointConfig::new(int(1), vec![], vec![], v(&[5]), v(&[7])).unwrap();
        assert_eq!(z_integral(IntegralFormulaId::IntOrFor, &p01).unwrap(), ratio(1, 2));
        let pt = canonical();
        for rep in IntegralFormulaId::ALL {
            assert_eq!(z_integral(rep, &pt).unwrap(), ratio(9, 40), "{rep}");
        }
    }

    #[test]
    fn f_product_vanishes_on_repeats() {
        let c = int(1);
        assert_eq!(f_product(&[], &c).unwrap(), int(1));
        assert_eq!(f_product(&v(&[4]), &c).unwrap(), int(1));
        // f(5,3)^{-1} f(3,5)^{-1} = (2/3)(2)
        assert_eq!(f_product(&v(&[5, 3]), &c).unwrap(), ratio(4, 3));
        assert!(f_product(&v(&[2, 2]), &c).is_err());
    }

    #[test]
    fn pole_decompose_examples() {
        let c = int(1);
        let seven = int(7);
        let samples: Vec<_> = [1, 2]
            .iter()
            .map(|&s| (int(s), g_fn(&seven, &int(s), &c).unwrap()))
            .collect();
        assert_eq!(samples[0].1, ratio(1, 6));
        assert_eq!(samples[1].1, ratio(1, 5));
        assert_eq!(
            pole_decompose(&samples, std::slice::from_ref(&seven)).unwrap(),
            vec![int(-1)]
        );

        let zeros: Vec<_> = (0..3).map(|i| (int(100 + i), int(0))).collect();
        assert_eq!(pole_decompose(&zeros, &v(&[1, 2, 3])).unwrap(), vec![int(0); 3]);

        let repeated = vec![(int(1), int(1)), (int(1), int(2))];
        assert_eq!(pole_decompose(&repeated, &v(&[5, 6])), Err(Error::SingularSystem));
        let bad = vec![(int(1), int(1)), (int(2), int(5))];
        assert_eq!(pole_decompose(&bad, &[seven]), Err(Error::InconsistentSamples));
    }

    #[test]
    fn canonical_residues_in_s() {
        let expansion = s_last_expansion(&canonical(), 1, default_evaluator).unwrap();
        assert_eq!(expansion.poles, v(&[7, 0]));
        assert_eq!(expansion.residues, vec![ratio(-5, 12), ratio(1, 12)]);
        assert_eq!(expansion.value_at(&int(5)), ratio(9, 40));
    }

    #[test]
    fn recursions_at_canonical_point() {
        let pt = canonical();
        assert_eq!(rec_triv_rhs(&pt, default_evaluator).unwrap(), ratio(-5, 12));
        assert_eq!(rec_nontriv_rhs(&pt, default_evaluator).unwrap(), ratio(1, 12));
        assert!(verify_recursion_triv(&pt).unwrap());
        assert!(verify_recursion_nontriv(&pt).unwrap());
        let p01 = PointConfig::new(int(1), vec![], vec![], v(&[5]), v(&[7])).unwrap();
        assert!(verify_recursion_triv(&p01).unwrap());
        assert!(verify_recursion_nontriv(&p01).is_err());
    }

    #[test]
    fn recursion_rebuilds_z11() {
        assert_eq!(z_recursive(&canonical()).unwrap(), ratio(9, 40));
    }

    #[test]
    fn abscissae_avoid_exclusion_zone() {
        let avoid = v(&[10_000, 10_003]);
        let got = fresh_abscissae(&avoid, &int(1), 3);
        assert_eq!(got, v(&[10_006, 10_007, 10_008]));
    }
}
