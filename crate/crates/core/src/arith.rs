//! Exact rational scalars and the four two-point functions everything else is
//! built from:
//!
//! ```text
//! g(x,y) = c/(x-y)            f(x,y) = (x-y+c)/(x-y)
//! h(x,y) = (x-y+c)/c          t(x,y) = c^2/((x-y)(x-y+c))
//! ```
//!
//! Products over sets follow the usual shorthand: `f(A, B)` is the product of
//! `f(a, b)` over all `a` in `A` and `b` in `B`, and an empty set on either side
//! gives 1.

use std::str::FromStr;

use num::{BigInt, BigRational, Integer, One, Zero};

use crate::error::{Error, Result};

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// An ordered list of spectral parameters. Distinctness is checked where a
/// whole configuration is validated, not here.
pub type VarSet = Vec<Rational>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p/q` or `p` with an optional leading minus and no whitespace.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = || Error::ParseRational(text.to_string());
    let (neg, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let digits = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        BigInt::from_str(s).map_err(|_| err())
    };
    let (num, den) = match body.split_once('/') {
        Some((p, q)) => (digits(p)?, digits(q)?),
        None => (digits(body)?, BigInt::one()),
    };
    if den.is_zero() {
        return Err(err());
    }
    let num = if neg { -num } else { num };
    Ok(Rational::new(num, den))
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Serde adapters storing rationals in their canonical text form.
pub mod serde_text {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    use super::{format_rational, parse_rational, Rational};

    pub fn serialize<S: Serializer>(value: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(de)?;
        parse_rational(&text).map_err(D::Error::custom)
    }

    pub mod vec {
        use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        use super::super::{format_rational, parse_rational, Rational};

        pub fn serialize<S: Serializer>(values: &[Rational], ser: S) -> Result<S::Ok, S::Error> {
            let mut seq = ser.serialize_seq(Some(values.len()))?;
            for v in values {
                seq.serialize_element(&format_rational(v))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rational>, D::Error> {
            let texts = Vec::<String>::deserialize(de)?;
            texts
                .iter()
                .map(|t| parse_rational(t).map_err(D::Error::custom))
                .collect()
        }
    }
}

fn coincidence(func: &'static str, x: &Rational, y: &Rational, c: &Rational) -> Error {
    Error::DivisionByCoincidence {
        func,
        x: format_rational(x),
        y: format_rational(y),
        c: format_rational(c),
    }
}

pub fn g_fn(x: &Rational, y: &Rational, c: &Rational) -> Result<Rational> {
    let d = x - y;
    if d.is_zero() {
        return Err(coincidence("g", x, y, c));
    }
    Ok(c / d)
}

pub fn f_fn(x: &Rational, y: &Rational, c: &Rational) -> Result<Rational> {
    let d = x - y;
    if d.is_zero() {
        return Err(coincidence("f", x, y, c));
    }
    Ok((&d + c) / d)
}

pub fn h_fn(x: &Rational, y: &Rational, c: &Rational) -> Result<Rational> {
    if c.is_zero() {
        return Err(Error::ZeroCoupling);
    }
    Ok((x - y + c) / c)
}

pub fn t_fn(x: &Rational, y: &Rational, c: &Rational) -> Result<Rational> {
    let d = x - y;
    let e = &d + c;
    if d.is_zero() || e.is_zero() {
        return Err(coincidence("t", x, y, c));
    }
    Ok(c * c / (d * e))
}

/// Selects one of the four two-point functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScalarFn {
    G,
    F,
    H,
    T,
}

impl ScalarFn {
    pub fn eval(self, x: &Rational, y: &Rational, c: &Rational) -> Result<Rational> {
        match self {
            ScalarFn::G => g_fn(x, y, c),
            ScalarFn::F => f_fn(x, y, c),
            ScalarFn::H => h_fn(x, y, c),
            ScalarFn::T => t_fn(x, y, c),
        }
    }
}

/// Double product of `func` over `left × right`.
pub fn prod_over(func: ScalarFn, left: &[Rational], right: &[Rational], c: &Rational) -> Result<Rational> {
    let mut acc = Rational::one();
    for x in left {
        for y in right {
            acc *= func.eval(x, y, c)?;
        }
    }
    Ok(acc)
}

/// Shorthand for the most common product, `f(left, right)`.
pub fn f_prod(left: &[Rational], right: &[Rational], c: &Rational) -> Result<Rational> {
    prod_over(ScalarFn::F, left, right, c)
}

/// `prod_{j<k} g(y_j, y_k)`
pub fn delta_plain(y: &[Rational], c: &Rational) -> Result<Rational> {
    let mut acc = Rational::one();
    for j in 0..y.len() {
        for k in j + 1..y.len() {
            acc *= g_fn(&y[j], &y[k], c)?;
        }
    }
    Ok(acc)
}

/// `prod_{j>k} g(x_j, x_k)`
pub fn delta_prime(x: &[Rational], c: &Rational) -> Result<Rational> {
    let mut acc = Rational::one();
    for j in 0..x.len() {
        for k in 0..j {
            acc *= g_fn(&x[j], &x[k], c)?;
        }
    }
    Ok(acc)
}

/// `(-1)^n` as a rational.
pub fn sign(n: usize) -> Rational {
    if n.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Copy of `set` with every element moved by `delta`.
pub fn shift(set: &[Rational], delta: &Rational) -> VarSet {
    set.iter().map(|v| v + delta).collect()
}

/// Elements of `set` at the given positions.
pub fn pick(set: &[Rational], indices: &[usize]) -> VarSet {
    indices.iter().map(|&i| set[i].clone()).collect()
}

pub fn concat(a: &[Rational], b: &[Rational]) -> VarSet {
    a.iter().chain(b).cloned().collect()
}

/// `set` without its element at `index`.
pub fn without(set: &[Rational], index: usize) -> VarSet {
    set.iter()
        .enumerate()
        .filter(|&(i, _)| i != index)
        .map(|(_, v)| v.clone())
        .collect()
}

fn lcm_of_denominators(row: &[Rational]) -> BigInt {
    row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Exact determinant.
///
/// Sizes up to 2 are expanded directly. Larger matrices are scaled row by row
/// to integers and reduced with Bareiss' fraction-free elimination, so every
/// intermediate division is exact.
pub fn det_exact(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n), "det_exact needs a square matrix");
    match n {
        0 => return Rational::one(),
        1 => return m[0][0].clone(),
        2 => return &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {}
    }

    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|row| {
            let l = lcm_of_denominators(row);
            let ints = row.iter().map(|v| v.numer() * (&l / v.denom())).collect();
            scale *= &l;
            ints
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }

    let det = Rational::new(a[n - 1][n - 1].clone(), scale);
    if negate {
        -det
    } else {
        det
    }
}

/// Solves `m · v = rhs` exactly by Gaussian elimination.
pub fn solve_exact(m: &[Vec<Rational>], rhs: &[Rational]) -> Result<Vec<Rational>> {
    let n = m.len();
    if rhs.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(Error::SizeMismatch(format!(
            "linear system needs a square matrix matching rhs length {}",
            rhs.len()
        )));
    }
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut row = row.clone();
            row.push(r.clone());
            row
        })
        .collect();

    for k in 0..n {
        let pivot = (k..n).find(|&i| !a[i][k].is_zero()).ok_or(Error::SingularSystem)?;
        a.swap(k, pivot);
        let inv = a[k][k].recip();
        for entry in &mut a[k][k..] {
            *entry *= &inv;
        }
        let pivot_row = a[k].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == k || row[k].is_zero() {
                continue;
            }
            let factor = row[k].clone();
            for (entry, p) in row[k..].iter_mut().zip(&pivot_row[k..]) {
                *entry -= &factor * p;
            }
        }
    }
    Ok(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;
    use proptest::prelude::*;

    fn r(p: i64) -> Rational {
        int(p)
    }

    #[test]
    fn scalar_functions_on_worked_values() {
        let one = r(1);
        assert_eq!(g_fn(&r(3), &r(1), &one).unwrap(), ratio(1, 2));
        assert_eq!(g_fn(&r(1), &r(3), &one).unwrap(), ratio(-1, 2));
        assert_eq!(g_fn(&r(5), &r(0), &r(2)).unwrap(), ratio(2, 5));
        assert_eq!(f_fn(&r(5), &r(3), &one).unwrap(), ratio(3, 2));
        assert_eq!(f_fn(&r(3), &r(5), &one).unwrap(), ratio(1, 2));
        for y in [-4, 0, 9] {
            for c in [1, 3, -2] {
                assert_eq!(f_fn(&r(y + c), &r(y), &r(c)).unwrap(), r(2));
            }
        }
        assert_eq!(h_fn(&r(7), &r(5), &one).unwrap(), r(3));
        assert_eq!(t_fn(&r(7), &r(5), &one).unwrap(), ratio(1, 6));
        assert_eq!(t_fn(&r(-1), &r(5), &one).unwrap(), ratio(1, 30));
    }

    #[test]
    fn poles_are_reported() {
        let one = r(1);
        assert!(matches!(
            g_fn(&r(2), &r(2), &one),
            Err(Error::DivisionByCoincidence { func: "g", .. })
        ));
        assert!(f_fn(&r(2), &r(2), &one).is_err());
        assert!(t_fn(&r(2), &r(3), &one).is_err());
        assert!(t_fn(&r(2), &r(2), &one).is_err());
        assert_eq!(h_fn(&r(2), &r(3), &r(0)), Err(Error::ZeroCoupling));
        let err = prod_over(ScalarFn::G, &[r(1), r(4)], &[r(4)], &one).unwrap_err();
        assert_eq!(
            err,
            Error::DivisionByCoincidence {
                func: "g",
                x: "4".into(),
                y: "4".into(),
                c: "1".into()
            }
        );
    }

    #[test]
    fn set_products() {
        let one = r(1);
        assert_eq!(prod_over(ScalarFn::F, &[], &[r(5), r(7)], &one).unwrap(), r(1));
        assert_eq!(
            prod_over(ScalarFn::G, &[r(7)], &[r(5), r(3)], &one).unwrap(),
            ratio(1, 8)
        );
        assert_eq!(
            prod_over(ScalarFn::H, &[r(7), r(-1)], &[r(5), r(3)], &one).unwrap(),
            r(225)
        );
    }

    #[test]
    fn deltas() {
        let one = r(1);
        assert_eq!(delta_plain(&[r(5), r(3)], &one).unwrap(), ratio(1, 2));
        assert_eq!(delta_prime(&[r(7), r(-1)], &one).unwrap(), ratio(-1, 8));
        assert_eq!(delta_plain(&[r(4)], &one).unwrap(), r(1));
        assert_eq!(delta_prime(&[], &one).unwrap(), r(1));
    }

    #[test]
    fn determinants() {
        let id: Vec<Vec<Rational>> = (0..3)
            .map(|i| (0..3).map(|j| if i == j { r(1) } else { r(0) }).collect())
            .collect();
        assert_eq!(det_exact(&id), r(1));
        let m = vec![vec![ratio(1, 6), ratio(1, 20)], vec![ratio(1, 30), ratio(1, 12)]];
        assert_eq!(det_exact(&m), ratio(11, 900));
        assert_eq!(det_exact(&[vec![r(1), r(2)], vec![r(2), r(4)]]), r(0));
        assert_eq!(det_exact(&[]), r(1));
        // zero leading pivot forces a row swap
        let m = vec![vec![r(0), r(1), r(2)], vec![r(3), r(0), r(1)], vec![r(1), r(1), r(0)]];
        assert_eq!(det_exact(&m), r(7));
        let singular = vec![
            vec![r(1), r(2), r(3)],
            vec![r(2), r(4), r(6)],
            vec![ratio(1, 3), r(0), r(5)],
        ];
        assert_eq!(det_exact(&singular), r(0));
    }

    fn leibniz(m: &[Vec<Rational>]) -> Rational {
        let n = m.len();
        (0..n)
            .permutations(n)
            .map(|p| {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| p[i] > p[j])
                    .count();
                let term: Rational = (0..n).map(|i| m[i][p[i]].clone()).product();
                sign(inversions) * term
            })
            .sum()
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-30i64..30, 1i64..12).prop_map(|(p, q)| ratio(p, q))
    }

    fn square(n: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
        prop::collection::vec(prop::collection::vec(small_rational(), n), n)
    }

    proptest! {
        #[test]
        fn det_matches_leibniz(m in (0usize..=4).prop_flat_map(square)) {
            prop_assert_eq!(det_exact(&m), leibniz(&m));
        }

        #[test]
        fn solve_inverts_product(
            m in square(3),
            v in prop::collection::vec(small_rational(), 3),
        ) {
            prop_assume!(!det_exact(&m).is_zero());
            let rhs: Vec<Rational> = m
                .iter()
                .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
                .collect();
            prop_assert_eq!(solve_exact(&m, &rhs).unwrap(), v);
        }

        #[test]
        fn rational_text_round_trip(v in small_rational()) {
            prop_assert_eq!(parse_rational(&format_rational(&v)).unwrap(), v);
        }

        #[test]
        fn shift_identities(
            x in small_rational(),
            y in small_rational(),
            c in small_rational(),
        ) {
            let d = &x - &y;
            prop_assume!(!c.is_zero());
            prop_assume!(!d.is_zero() && d != c && d != -c.clone() && d != c.clone() * int(2));
            let xc = &x - &c;
            prop_assert_eq!(g_fn(&x, &y, &c)?, -g_fn(&y, &x, &c)?);
            prop_assert_eq!(h_fn(&xc, &y, &c)?, g_fn(&x, &y, &c)?.recip());
            prop_assert_eq!(f_fn(&xc, &y, &c)?, f_fn(&y, &x, &c)?.recip());
            prop_assert_eq!(t_fn(&xc, &y, &c)?, t_fn(&y, &x, &c)?);
            prop_assert_eq!(f_fn(&x, &y, &c)?, Rational::one() + g_fn(&x, &y, &c)?);
            prop_assert_eq!(t_fn(&x, &y, &c)?, g_fn(&x, &y, &c)? / h_fn(&x, &y, &c)?);
            prop_assert_eq!(h_fn(&x, &y, &c)?, f_fn(&x, &y, &c)? / g_fn(&x, &y, &c)?);
        }
    }

    #[test]
    fn parse_rejects_malformed_text() {
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("42").unwrap(), r(42));
        for bad in ["", "-", "1/0", " 1", "+1", "1/-2", "1.5", "1/", "/2", "--1"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should be rejected");
        }
        assert_eq!(format_rational(&ratio(4, 2)), "2");
        assert_eq!(format_rational(&ratio(-9, 40)), "-9/40");
    }
}
