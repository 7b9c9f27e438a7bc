//! `Z_{a,b}` straight from its definition as a vertex-model partition function.
//!
//! Horizontal lines carry `s̄` (bottom rows) then `x̄`, vertical lines carry `ȳ`
//! (dotted, left columns) then `t̄`. Boundary colors: left edge all 2; right
//! edge 3 on `s̄` rows and 1 on `x̄` rows; bottom edge 3 under `ȳ` and 2 under
//! `t̄`; top edge 2 over `ȳ` and 1 over `t̄`.
//!
//! Two evaluations are provided: a depth-first enumeration of all edge
//! colorings and a row-by-row transfer contraction.

use std::collections::HashMap;
use std::fmt;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{f_fn, g_fn, Rational};
use crate::error::{Error, Result};
use crate::zhc::PointConfig;

/// Default cap on `rows * columns` for [`z_lattice_enum`].
pub const DEFAULT_ENUM_BUDGET: usize = 16;

/// Edge color, one of 1, 2, 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Color(u8);

impl Color {
    pub const ALL: [Color; 3] = [Color(1), Color(2), Color(3)];

    pub fn new(value: u8) -> Result<Self> {
        if (1..=3).contains(&value) {
            Ok(Color(value))
        } else {
            Err(Error::InvalidLattice(format!("color {value} outside 1..=3")))
        }
    }

    pub fn value(self) -> u8 {
        self.0
    }

    fn index(self) -> usize {
        (self.0 - 1) as usize
    }
}

impl TryFrom<u8> for Color {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        Color::new(value)
    }
}

impl From<Color> for u8 {
    fn from(c: Color) -> u8 {
        c.0
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Column {
    #[serde(with = "crate::arith::serde_text")]
    pub param: Rational,
    pub dotted: bool,
}

/// Boundary colors. `left`/`right` are indexed by row (bottom first),
/// `bottom`/`top` by column (left first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Boundary {
    pub left: Vec<Color>,
    pub right: Vec<Color>,
    pub bottom: Vec<Color>,
    pub top: Vec<Color>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSpec {
    #[serde(with = "crate::arith::serde_text")]
    pub c: Rational,
    pub columns: Vec<Column>,
    /// Row parameters, bottom row first.
    #[serde(with = "crate::arith::serde_text::vec")]
    pub rows: Vec<Rational>,
    pub boundary: Boundary,
}

impl LatticeSpec {
    /// The lattice whose partition function is `Z_{a,b}(t̄; x̄ | s̄; ȳ)`.
    pub fn canonical(pt: &PointConfig) -> Self {
        let (a, b) = (pt.a(), pt.b());
        let columns =
            pt.y.iter()
                .map(|p| Column {
                    param: p.clone(),
                    dotted: true,
                })
                .chain(pt.t.iter().map(|p| Column {
                    param: p.clone(),
                    dotted: false,
                }))
                .collect();
        let rows = pt.s.iter().chain(&pt.x).cloned().collect();
        let repeat = |v: u8, n: usize| std::iter::repeat_n(Color(v), n);
        LatticeSpec {
            c: pt.c.clone(),
            columns,
            rows,
            boundary: Boundary {
                left: repeat(2, a + b).collect(),
                right: repeat(3, b).chain(repeat(1, a)).collect(),
                bottom: repeat(3, b).chain(repeat(2, a)).collect(),
                top: repeat(2, b).chain(repeat(1, a)).collect(),
            },
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (nr, nc) = (self.rows.len(), self.columns.len());
        let bd = &self.boundary;
        if bd.left.len() != nr || bd.right.len() != nr || bd.bottom.len() != nc || bd.top.len() != nc {
            return Err(Error::InvalidLattice(format!(
                "boundary sizes (left {}, right {}, bottom {}, top {}) do not fit a {nr}x{nc} grid",
                bd.left.len(),
                bd.right.len(),
                bd.bottom.len(),
                bd.top.len()
            )));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len() * self.columns.len()
    }
}

/// Baxter's classification of the nonzero vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexKind {
    /// all four edges equal
    A,
    /// colors pass straight through
    B,
    /// colors exchange
    C,
}

pub fn vertex_kind(dotted: bool, left: Color, right: Color, bottom: Color, top: Color) -> Option<VertexKind> {
    if left == right && right == bottom && bottom == top {
        return Some(VertexKind::A);
    }
    if left == right && bottom == top {
        return Some(VertexKind::B);
    }
    let exchange = if dotted {
        left == top && right == bottom
    } else {
        left == bottom && right == top
    };
    exchange.then_some(VertexKind::C)
}

/// Statistical weight of one vertex. Regular vertices carry `f(row, col)` and
/// `g(row, col)`; dotted ones carry `f(col, row)` and `g(col, row)`.
#[allow(clippy::too_many_arguments)]
pub fn vertex_weight(
    dotted: bool,
    left: Color,
    right: Color,
    bottom: Color,
    top: Color,
    row_param: &Rational,
    col_param: &Rational,
    c: &Rational,
) -> Result<Rational> {
    let (u, v) = if dotted {
        (col_param, row_param)
    } else {
        (row_param, col_param)
    };
    match vertex_kind(dotted, left, right, bottom, top) {
        Some(VertexKind::A) => f_fn(u, v, c),
        Some(VertexKind::B) => Ok(Rational::one()),
        Some(VertexKind::C) => g_fn(u, v, c),
        None => Ok(Rational::zero()),
    }
}

#[derive(Debug, Clone)]
struct Move {
    right: Color,
    top: Color,
    weight: Rational,
    kind: VertexKind,
}

/// Nonzero moves of every vertex, indexed by `[row][col][3*left + bottom]`.
fn move_tables(spec: &LatticeSpec) -> Result<Vec<Vec<Vec<Vec<Move>>>>> {
    spec.rows
        .iter()
        .map(|row| {
            spec.columns
                .iter()
                .map(|col| {
                    let mut table = vec![Vec::new(); 9];
                    for left in Color::ALL {
                        for bottom in Color::ALL {
                            for right in Color::ALL {
                                for top in Color::ALL {
                                    let Some(kind) = vertex_kind(col.dotted, left, right, bottom, top) else {
                                        continue;
                                    };
                                    let weight =
                                        vertex_weight(col.dotted, left, right, bottom, top, row, &col.param, &spec.c)?;
                                    table[3 * left.index() + bottom.index()].push(Move {
                                        right,
                                        top,
                                        weight,
                                        kind,
                                    });
                                }
                            }
                        }
                    }
                    Ok(table)
                })
                .collect()
        })
        .collect()
}

struct Enumerator<'a, F> {
    spec: &'a LatticeSpec,
    moves: Vec<Vec<Vec<Vec<Move>>>>,
    vertical: Vec<Color>,
    kinds: Vec<VertexKind>,
    visit: F,
    count: usize,
}

impl<F: FnMut(&[VertexKind], &Rational)> Enumerator<'_, F> {
    fn descend(&mut self, vertex: usize, horizontal: Color, weight: Rational) {
        let ncols = self.spec.columns.len();
        let nrows = self.spec.rows.len();
        if vertex == nrows * ncols {
            self.count += 1;
            (self.visit)(&self.kinds, &weight);
            return;
        }
        let (r, col) = (vertex / ncols, vertex % ncols);
        let left = if col == 0 {
            self.spec.boundary.left[r]
        } else {
            horizontal
        };
        let bottom = self.vertical[col];
        let options = self.moves[r][col][3 * left.index() + bottom.index()].clone();
        for mv in options {
            if col + 1 == ncols && mv.right != self.spec.boundary.right[r] {
                continue;
            }
            if r + 1 == nrows && mv.top != self.spec.boundary.top[col] {
                continue;
            }
            self.vertical[col] = mv.top;
            self.kinds.push(mv.kind);
            self.descend(vertex + 1, mv.right, &weight * &mv.weight);
            self.kinds.pop();
            self.vertical[col] = bottom;
        }
    }
}

fn degenerate_grid_value(spec: &LatticeSpec) -> Option<Rational> {
    let bd = &spec.boundary;
    let ok = if spec.rows.is_empty() {
        bd.bottom == bd.top
    } else if spec.columns.is_empty() {
        bd.left == bd.right
    } else {
        return None;
    };
    Some(if ok { Rational::one() } else { Rational::zero() })
}

/// Calls `visit` with the vertex kinds (row-major, bottom row first) and the
/// weight of every nonzero configuration. Returns the number of
/// configurations visited.
pub fn for_each_configuration<F>(spec: &LatticeSpec, budget: usize, visit: F) -> Result<usize>
where
    F: FnMut(&[VertexKind], &Rational),
{
    spec.validate()?;
    if spec.vertex_count() > budget {
        return Err(Error::BudgetExceeded {
            vertices: spec.vertex_count(),
            budget,
        });
    }
    let mut visit = visit;
    if let Some(v) = degenerate_grid_value(spec) {
        if v.is_zero() {
            return Ok(0);
        }
        visit(&[], &v);
        return Ok(1);
    }
    let mut walker = Enumerator {
        spec,
        moves: move_tables(spec)?,
        vertical: spec.boundary.bottom.clone(),
        kinds: Vec::with_capacity(spec.vertex_count()),
        visit,
        count: 0,
    };
    walker.descend(0, Color(2), Rational::one());
    Ok(walker.count)
}

/// Sum over all internal edge colorings of the product of vertex weights,
/// limited to `rows * columns <= budget`.
pub fn z_lattice_enum_with_budget(spec: &LatticeSpec, budget: usize) -> Result<Rational> {
    let mut total = Rational::zero();
    for_each_configuration(spec, budget, |_, w| total += w)?;
    Ok(total)
}

pub fn z_lattice_enum(spec: &LatticeSpec) -> Result<Rational> {
    z_lattice_enum_with_budget(spec, DEFAULT_ENUM_BUDGET)
}

/// Row-by-row contraction. Also returns the largest number of partial states
/// held at once.
pub fn z_lattice_transfer_with_stats(spec: &LatticeSpec) -> Result<(Rational, usize)> {
    spec.validate()?;
    if let Some(v) = degenerate_grid_value(spec) {
        return Ok((v, 1));
    }
    let moves = move_tables(spec)?;
    let bd = &spec.boundary;
    let mut peak = 1;
    let mut words: HashMap<Vec<Color>, Rational> = HashMap::from([(bd.bottom.clone(), Rational::one())]);

    for (r, row_moves) in moves.iter().enumerate() {
        let mut partial: HashMap<(Vec<Color>, Color), Rational> =
            words.into_iter().map(|(w, v)| ((w, bd.left[r]), v)).collect();
        for (col, table) in row_moves.iter().enumerate() {
            let mut next: HashMap<(Vec<Color>, Color), Rational> = HashMap::new();
            for ((word, horizontal), value) in partial {
                for mv in &table[3 * horizontal.index() + word[col].index()] {
                    let mut w = word.clone();
                    w[col] = mv.top;
                    *next.entry((w, mv.right)).or_insert_with(Rational::zero) += &value * &mv.weight;
                }
            }
            next.retain(|_, v| !v.is_zero());
            peak = peak.max(next.len());
            partial = next;
        }
        words = partial
            .into_iter()
            .filter(|((_, h), _)| *h == bd.right[r])
            .map(|((w, _), v)| (w, v))
            .collect();
    }
    let value = words.remove(&bd.top).unwrap_or_else(Rational::zero);
    Ok((value, peak))
}

pub fn z_lattice_transfer(spec: &LatticeSpec) -> Result<Rational> {
    Ok(z_lattice_transfer_with_stats(spec)?.0)
}

/// A 9x9 operator on two color spaces, indexed by `3*i + j`.
pub type RMatrix = Vec<Vec<Rational>>;

/// `R(x,y) = I + g(x,y) P`.
pub fn r_matrix(x: &Rational, y: &Rational, c: &Rational) -> Result<RMatrix> {
    let g = g_fn(x, y, c)?;
    let mut m = vec![vec![Rational::zero(); 9]; 9];
    for j in 0..3 {
        for k in 0..3 {
            m[3 * j + k][3 * j + k] += Rational::one();
            m[3 * j + k][3 * k + j] += &g;
        }
    }
    Ok(m)
}

type Op27 = Vec<Vec<Rational>>;

// Embeds a two-space operator into the triple product, acting on spaces
// (p, q) with p < q.
fn embed(r: &RMatrix, p: usize, q: usize) -> Op27 {
    let digits = |i: usize| [i / 9, (i / 3) % 3, i % 3];
    let mut out = vec![vec![Rational::zero(); 27]; 27];
    for (i, row) in out.iter_mut().enumerate() {
        let di = digits(i);
        for (j, entry) in row.iter_mut().enumerate() {
            let dj = digits(j);
            let spectator = 3 - p - q;
            if di[spectator] != dj[spectator] {
                continue;
            }
            *entry = r[3 * di[p] + di[q]][3 * dj[p] + dj[q]].clone();
        }
    }
    out
}

fn mul(a: &Op27, b: &Op27) -> Op27 {
    let n = a.len();
    let mut out = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Checks `R12(x,y) R13(x,z) R23(y,z) = R23(y,z) R13(x,z) R12(x,y)` exactly.
pub fn yang_baxter_check(x: &Rational, y: &Rational, z: &Rational, c: &Rational) -> Result<bool> {
    yang_baxter_check_with(r_matrix, x, y, z, c)
}

/// Same check for an arbitrary two-space operator family.
pub fn yang_baxter_check_with<R>(r: R, x: &Rational, y: &Rational, z: &Rational, c: &Rational) -> Result<bool>
where
    R: Fn(&Rational, &Rational, &Rational) -> Result<RMatrix>,
{
    let r12 = embed(&r(x, y, c)?, 0, 1);
    let r13 = embed(&r(x, z, c)?, 0, 2);
    let r23 = embed(&r(y, z, c)?, 1, 2);
    let lhs = mul(&mul(&r12, &r13), &r23);
    let rhs = mul(&mul(&r23, &r13), &r12);
    Ok(lhs == rhs)
}
