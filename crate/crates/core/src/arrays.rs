//! The array combinatorics for types A and D: abbreviated projective arrays
//! `P_l`, the join-irreducible arrays `S(w)` (rows cut off by the window
//! entries), the predecessor-closure dichotomy with the (alpha, beta)
//! scalar pattern at the doubled fork, and the conversion of a closed
//! subarray into the corresponding factor module of `P_l`.
//!
//! Cells store signed symbols: a symbol `s >= -1` sits on the
//! vertex `s`, a symbol `s <= -2` sits on the vertex `-s`, and the fused
//! cell carries one basis vector on each fork vertex `1` and `-1`.

use crate::linalg::Matrix;
use crate::pi::Quiver;
use crate::rep::ModuleRep;
use crate::scalar::Scalar;
use crate::weyl::{CartanType, Family, JirrClass, WeylElement, WeylError};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Plain(i32),
    Fused,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Closure {
    Predecessor,
    /// `(alpha, beta) = (1, 0)`
    AlphaBeta10,
    /// `(alpha, beta) = (0, 1)`
    AlphaBeta01,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrayShape {
    pub cartan: CartanType,
    pub ell: i32,
    pub rows: Vec<Vec<Cell>>,
    pub closure: Closure,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrayError {
    Weyl(WeylError),
    NotClosed(Closure),
}

impl fmt::Display for ArrayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArrayError::Weyl(e) => write!(f, "{e}"),
            ArrayError::NotClosed(c) => write!(f, "subarray is not {c:?}-closed"),
        }
    }
}

impl std::error::Error for ArrayError {}

impl From<WeylError> for ArrayError {
    fn from(e: WeylError) -> Self {
        ArrayError::Weyl(e)
    }
}

impl ArrayShape {
    pub fn cell_count(&self) -> usize {
        self.rows
            .iter()
            .flatten()
            .map(|c| match c {
                Cell::Plain(_) => 1,
                Cell::Fused => 2,
            })
            .sum()
    }

    /// Box-array text rendering, one row per line; the fused cell prints
    /// as `1/-1` and an empty row as `.`.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            if row.is_empty() {
                out.push('.');
            } else {
                let cells: Vec<String> = row
                    .iter()
                    .map(|c| match c {
                        Cell::Plain(s) => s.to_string(),
                        Cell::Fused => "1/-1".to_string(),
                    })
                    .collect();
                out.push_str(&cells.join(" "));
            }
            out.push('\n');
        }
        out
    }

    /// CSV rows `row,col,symbol` (1-indexed positions).
    pub fn render_csv(&self) -> String {
        let mut out = String::from("row,col,symbol\n");
        for (r, row) in self.rows.iter().enumerate() {
            for (c, cell) in row.iter().enumerate() {
                let sym = match cell {
                    Cell::Plain(s) => s.to_string(),
                    Cell::Fused => "1/-1".to_string(),
                };
                out.push_str(&format!("{},{},{}\n", r + 1, c + 1, sym));
            }
        }
        out
    }
}

/// The full abbreviated array of the projective `P_l`.
pub fn projective_array(cartan: CartanType, ell: i32) -> Result<ArrayShape, ArrayError> {
    cartan.require_supported()?;
    let n = cartan.rank as i32;
    let rows: Vec<Vec<Cell>> = match cartan.family {
        Family::A => {
            // row r: l+r-1 down to r, exactly l cells, for r = 1..n+1-l
            (1..=(n + 1 - ell))
                .map(|r| (r..=(ell + r - 1)).rev().map(Cell::Plain).collect())
                .collect()
        }
        Family::D if ell == 1 || ell == -1 => {
            // row r: r, r-1, .., 2, then the fork cell on vertex l*(-1)^(r+1)
            (1..=(n - 1))
                .map(|r| {
                    let mut row: Vec<Cell> = (2..=r).rev().map(Cell::Plain).collect();
                    let end = if r % 2 == 1 { ell } else { -ell };
                    row.push(Cell::Plain(end));
                    row
                })
                .collect()
        }
        Family::D => {
            // row r has columns c = 1..n+l-2 with value v = l+r-c:
            // plain v for v >= 2, the fused cell at v = 1, plain v-2 below
            (1..=(n - ell))
                .map(|r| {
                    (1..=(n + ell - 2))
                        .map(|c| {
                            let v = ell + r - c;
                            if v >= 2 {
                                Cell::Plain(v)
                            } else if v == 1 {
                                Cell::Fused
                            } else {
                                Cell::Plain(v - 2)
                            }
                        })
                        .collect()
                })
                .collect()
        }
        Family::E => unreachable!(),
    };
    Ok(ArrayShape {
        cartan,
        ell,
        rows,
        closure: Closure::Predecessor,
    })
}

/// The array `S(w)` of a join-irreducible element, with its closure flag.
pub fn jw_array(w: &WeylElement) -> Result<ArrayShape, ArrayError> {
    let JirrClass::Jirr { descent_type, .. } = w.classify_jirr() else {
        return Err(ArrayError::Weyl(WeylError::NotJoinIrreducible(
            w.window.clone(),
        )));
    };
    let ell = descent_type;
    let n = w.cartan.rank as i32;
    let win = &w.window;
    let rows: Vec<Vec<Cell>> = match w.cartan.family {
        Family::A => {
            // row r ends at i_{l+r}: cells l+r-1 down to i_{l+r}
            (1..=(n + 1 - ell))
                .map(|r| {
                    let im = win[(ell + r - 1) as usize];
                    (im..=(ell + r - 1)).rev().map(Cell::Plain).collect()
                })
                .collect()
        }
        Family::D if ell == 1 || ell == -1 => {
            // row r ends at i'_{r+1} = max(i_{r+1}, (-1)^(r+1) l)
            (1..=(n - 1))
                .map(|r| {
                    let m = r + 1;
                    let sign = if m % 2 == 0 { ell } else { -ell };
                    let iprime = win[(m - 1) as usize].max(sign);
                    if iprime >= 2 {
                        (iprime..=r).rev().map(Cell::Plain).collect()
                    } else {
                        let mut row: Vec<Cell> = (2..=r).rev().map(Cell::Plain).collect();
                        row.push(Cell::Plain(sign));
                        row
                    }
                })
                .collect()
        }
        Family::D => {
            // row r is C(m, j) for m = l+r-1, j = i_{l+r}; the row is
            // empty when j > m (equivalently, when i'_m = m the row
            // starting at m-1 is empty).
            (1..=(n - ell))
                .map(|r| {
                    let m = ell + r - 1;
                    let j = win[(ell + r - 1) as usize];
                    if j > m {
                        Vec::new()
                    } else if j >= 1 {
                        (j..=m).rev().map(Cell::Plain).collect()
                    } else if j == -1 {
                        let mut row: Vec<Cell> = (2..=m).rev().map(Cell::Plain).collect();
                        row.push(Cell::Plain(-1));
                        row
                    } else if j == -2 {
                        let mut row: Vec<Cell> = (2..=m).rev().map(Cell::Plain).collect();
                        row.push(Cell::Fused);
                        row
                    } else {
                        let mut row: Vec<Cell> = (2..=m).rev().map(Cell::Plain).collect();
                        row.push(Cell::Fused);
                        row.extend(((j + 1)..=-2).rev().map(Cell::Plain));
                        row
                    }
                })
                .collect()
        }
        Family::E => unreachable!(),
    };
    let mut shape = ArrayShape {
        cartan: w.cartan,
        ell,
        rows,
        closure: Closure::Predecessor,
    };
    shape.closure = detect_closure(&shape)?;
    Ok(shape)
}

/// One node of the grid model of `P_l`: a cell position plus, at a fused
/// slot, which fork half (0 = plain, +-1 = the fork vertex).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Node {
    row: i32,
    col: i32,
    half: i32,
}

/// Arrow coefficient as a function of (alpha, beta).
#[derive(Debug, Clone, Copy)]
enum Coef {
    One,
    MinusOne,
    Alpha,
    Beta,
    MinusAlpha,
}

impl Coef {
    fn eval<F: Scalar>(self, alpha: i64, beta: i64) -> F {
        match self {
            Coef::One => F::from_int(1),
            Coef::MinusOne => F::from_int(-1),
            Coef::Alpha => F::from_int(alpha),
            Coef::Beta => F::from_int(beta),
            Coef::MinusAlpha => F::from_int(-alpha),
        }
    }

    fn is_zero_at(self, alpha: i64, beta: i64) -> bool {
        match self {
            Coef::One | Coef::MinusOne => false,
            Coef::Alpha | Coef::MinusAlpha => alpha == 0,
            Coef::Beta => beta == 0,
        }
    }
}

struct GridModel {
    /// node and its quiver vertex label
    nodes: Vec<(Node, i32)>,
    arrows: Vec<(Node, Node, Coef)>,
}

/// The full grid model of `P_l`: nodes with vertex labels and labeled grid
/// arrows. The underlying quiver arrow of a grid arrow is recovered from the
/// endpoint vertex labels (the doubled Dynkin quiver has at most one arrow
/// between two vertices).
fn grid_model(cartan: CartanType, ell: i32) -> GridModel {
    let n = cartan.rank as i32;
    let mut nodes: Vec<(Node, i32)> = Vec::new();
    let mut arrows: Vec<(Node, Node, Coef)> = Vec::new();
    let node = |row: i32, col: i32, half: i32| Node { row, col, half };
    match cartan.family {
        Family::A => {
            for r in 1..=(n + 1 - ell) {
                for c in 1..=ell {
                    let v = ell + r - c;
                    nodes.push((node(r, c, 0), v));
                    if c < ell {
                        arrows.push((node(r, c, 0), node(r, c + 1, 0), Coef::One));
                    }
                    if r < n + 1 - ell {
                        arrows.push((node(r, c, 0), node(r + 1, c, 0), Coef::One));
                    }
                }
            }
        }
        Family::D if ell == 1 || ell == -1 => {
            for r in 1..=(n - 1) {
                for c in 1..=r {
                    let v = if c < r {
                        r + 1 - c
                    } else if r % 2 == 1 {
                        ell
                    } else {
                        -ell
                    };
                    nodes.push((node(r, c, 0), v));
                    if c < r {
                        arrows.push((node(r, c, 0), node(r, c + 1, 0), Coef::One));
                    }
                    if r < n - 1 {
                        arrows.push((node(r, c, 0), node(r + 1, c, 0), Coef::One));
                    }
                }
            }
        }
        Family::D => {
            let width = n + ell - 2;
            for r in 1..=(n - ell) {
                let eps = if r % 2 == 1 { 1 } else { -1 };
                let has_next_row = r < n - ell;
                for c in 1..=width {
                    let v = ell + r - c;
                    if v == 1 {
                        nodes.push((node(r, c, 1), 1));
                        nodes.push((node(r, c, -1), -1));
                    } else {
                        let vertex = if v >= 2 { v } else { -(v - 2) };
                        nodes.push((node(r, c, 0), vertex));
                    }
                    if v >= 3 || v <= -1 {
                        // plain region away from the fork column
                        if c < width {
                            arrows.push((node(r, c, 0), node(r, c + 1, 0), Coef::One));
                        }
                        if has_next_row {
                            arrows.push((node(r, c, 0), node(r + 1, c, 0), Coef::One));
                        }
                    } else if v == 2 {
                        // right into the fused slot, identity onto both halves
                        arrows.push((node(r, c, 0), node(r, c + 1, 1), Coef::One));
                        arrows.push((node(r, c, 0), node(r, c + 1, -1), Coef::One));
                        if has_next_row {
                            arrows.push((node(r, c, 0), node(r + 1, c, 0), Coef::One));
                        }
                    } else if v == 1 {
                        // out of the fused slot: right to the -2 cell carries
                        // +1 from the eps-half and -1 from the other; down to
                        // the 2-cell carries alpha from the eps-half and beta
                        // from the other
                        if c < width {
                            arrows.push((node(r, c, eps), node(r, c + 1, 0), Coef::One));
                            arrows.push((node(r, c, -eps), node(r, c + 1, 0), Coef::MinusOne));
                        }
                        if has_next_row {
                            arrows.push((node(r, c, eps), node(r + 1, c, 0), Coef::Alpha));
                            arrows.push((node(r, c, -eps), node(r + 1, c, 0), Coef::Beta));
                        }
                    } else {
                        // v == 0: the -2 cell; down enters the next fused
                        // slot with beta onto the eps-half of the NEXT row
                        // and -alpha onto the other half
                        if c < width {
                            arrows.push((node(r, c, 0), node(r, c + 1, 0), Coef::One));
                        }
                        if has_next_row {
                            let eps_next = -eps;
                            arrows.push((node(r, c, 0), node(r + 1, c, eps_next), Coef::Beta));
                            arrows.push((
                                node(r, c, 0),
                                node(r + 1, c, -eps_next),
                                Coef::MinusAlpha,
                            ));
                        }
                    }
                }
            }
        }
        Family::E => unreachable!(),
    }
    GridModel { nodes, arrows }
}

/// Present nodes of a shape, in grid coordinates.
fn present_nodes(shape: &ArrayShape) -> std::collections::HashSet<Node> {
    let mut present = std::collections::HashSet::new();
    for (r, row) in shape.rows.iter().enumerate() {
        for (c, cell) in row.iter().enumerate() {
            let (row_i, col_i) = (r as i32 + 1, c as i32 + 1);
            match cell {
                Cell::Fused => {
                    present.insert(Node {
                        row: row_i,
                        col: col_i,
                        half: 1,
                    });
                    present.insert(Node {
                        row: row_i,
                        col: col_i,
                        half: -1,
                    });
                }
                Cell::Plain(s) => {
                    // a fork symbol occupying the fused slot is one half
                    let is_fork_half = shape.cartan.family == Family::D
                        && shape.ell >= 2
                        && (*s == 1 || *s == -1);
                    let half = if is_fork_half { *s } else { 0 };
                    present.insert(Node {
                        row: row_i,
                        col: col_i,
                        half,
                    });
                }
            }
        }
    }
    present
}

/// Determine the closure flag of a shape: plain predecessor-closure if it
/// holds, otherwise whichever of (1,0) / (0,1) holds.
pub fn detect_closure(shape: &ArrayShape) -> Result<Closure, ArrayError> {
    let model = grid_model(shape.cartan, shape.ell);
    let present = present_nodes(shape);
    let closed_at = |alpha: i64, beta: i64| -> bool {
        model
            .arrows
            .iter()
            .all(|(from, to, coef)| {
                !present.contains(to) || coef.is_zero_at(alpha, beta) || present.contains(from)
            })
    };
    let plain = model
        .arrows
        .iter()
        .all(|(from, to, _)| !present.contains(to) || present.contains(from));
    if plain {
        return Ok(Closure::Predecessor);
    }
    if closed_at(1, 0) {
        return Ok(Closure::AlphaBeta10);
    }
    if closed_at(0, 1) {
        return Ok(Closure::AlphaBeta01);
    }
    Err(ArrayError::NotClosed(Closure::Predecessor))
}

/// Instantiate a closed subarray as the corresponding factor module of
/// `P_l`. Predecessor-closed shapes use `(alpha, beta) = (1, 0)` (any
/// choice gives isomorphic modules); flagged shapes use their scalars.
pub fn array_to_module<F: Scalar>(
    shape: &ArrayShape,
    quiver: &Quiver,
) -> Result<ModuleRep<F>, ArrayError> {
    let (alpha, beta): (i64, i64) = match shape.closure {
        Closure::Predecessor | Closure::AlphaBeta10 => (1, 0),
        Closure::AlphaBeta01 => (0, 1),
    };
    let flagged = detect_closure(shape)?;
    let ok = matches!(flagged, Closure::Predecessor) || flagged == shape.closure;
    if !ok {
        return Err(ArrayError::NotClosed(shape.closure));
    }

    let model = grid_model(shape.cartan, shape.ell);
    let present = present_nodes(shape);
    let vertex_of_node: std::collections::HashMap<Node, i32> =
        model.nodes.iter().copied().collect();
    let nv = quiver.vertex_count();
    let mut dims = vec![0usize; nv];
    let mut index: std::collections::HashMap<Node, (usize, usize)> =
        std::collections::HashMap::new();
    let mut ordered: Vec<Node> = present.iter().copied().collect();
    ordered.sort_by_key(|n| (n.row, n.col, n.half));
    for node in ordered {
        let label = vertex_of_node[&node];
        let v = quiver.vertex_index(label).expect("grid vertex in quiver");
        index.insert(node, (v, dims[v]));
        dims[v] += 1;
    }
    let mut maps: Vec<Matrix<F>> = quiver
        .arrows
        .iter()
        .map(|a| Matrix::zero(dims[a.tgt], dims[a.src]))
        .collect();
    for (from, to, coef) in &model.arrows {
        if let (Some(&(vf, kf)), Some(&(vt, kt))) = (index.get(from), index.get(to)) {
            let c: F = coef.eval(alpha, beta);
            if c.is_zero() {
                continue;
            }
            let arrow = quiver
                .arrows
                .iter()
                .position(|a| a.src == vf && a.tgt == vt)
                .expect("grid arrows follow quiver edges");
            maps[arrow][(kt, kf)] = c;
        }
    }
    let rep = ModuleRep { dims, maps };
    debug_assert!(rep.validate(quiver), "array module violates the relations");
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pi::PiAlgebra;
    use crate::rep::{is_isomorphic, projective_rep, IsoOutcome};
    use crate::Q;

    fn a(n: usize) -> CartanType {
        CartanType::new(Family::A, n).unwrap()
    }

    fn d(n: usize) -> CartanType {
        CartanType::new(Family::D, n).unwrap()
    }

    #[test]
    fn a_projective_arrays() {
        let p = projective_array(a(2), 1).unwrap();
        assert_eq!(p.render_text(), "1\n2\n");
        let p = projective_array(a(3), 2).unwrap();
        assert_eq!(p.render_text(), "2 1\n3 2\n");
        assert_eq!(p.cell_count(), 4);
    }

    #[test]
    fn d_projective_array_fork() {
        let p = projective_array(d(4), 1).unwrap();
        assert_eq!(p.render_text(), "1\n2 -1\n3 2 1\n");
        let p = projective_array(d(4), -1).unwrap();
        assert_eq!(p.render_text(), "-1\n2 1\n3 2 -1\n");
        let p = projective_array(d(4), 2).unwrap();
        assert_eq!(p.render_text(), "2 1/-1 -2 -3\n3 2 1/-1 -2\n");
        assert_eq!(p.cell_count(), 10);
    }

    #[test]
    fn cell_counts_match_algebra_dims() {
        for (t, labels) in [
            (a(2), vec![1, 2]),
            (a(3), vec![1, 2, 3]),
            (a(4), vec![1, 2, 3, 4]),
            (a(5), vec![1, 2, 3, 4, 5]),
            (d(4), vec![-1, 1, 2, 3]),
            (d(5), vec![-1, 1, 2, 3, 4]),
        ] {
            let pi: PiAlgebra<Q> = PiAlgebra::build(t).unwrap();
            for l in labels {
                let arr = projective_array(t, l).unwrap();
                let v = pi.quiver.vertex_index(l).unwrap();
                assert_eq!(arr.cell_count(), pi.tgt_slice(v).len(), "dim P_{l} of {t:?}");
            }
        }
    }

    #[test]
    fn full_arrays_convert_to_projectives() {
        for (t, labels) in [
            (a(2), vec![1, 2]),
            (a(3), vec![1, 2, 3]),
            (d(4), vec![-1, 1, 2, 3]),
        ] {
            let pi: PiAlgebra<Q> = PiAlgebra::build(t).unwrap();
            for l in labels {
                let arr = projective_array(t, l).unwrap();
                let m: ModuleRep<Q> = array_to_module(&arr, &pi.quiver).unwrap();
                let v = pi.quiver.vertex_index(l).unwrap();
                let p = projective_rep(&pi, v);
                assert_eq!(
                    is_isomorphic(&pi.quiver, &m, &p, 5).unwrap(),
                    IsoOutcome::Isomorphic,
                    "P_{l} of {t:?}"
                );
            }
        }
    }

    #[test]
    fn jw_array_a5_worked_example() {
        let w = WeylElement::from_window(a(5), vec![3, 5, 1, 2, 4, 6]).unwrap();
        let s = jw_array(&w).unwrap();
        assert_eq!(s.render_text(), "2 1\n3 2\n4\n.\n");
        assert_eq!(s.closure, Closure::Predecessor);
        let pi: PiAlgebra<Q> = PiAlgebra::build(a(5)).unwrap();
        let m: ModuleRep<Q> = array_to_module(&s, &pi.quiver).unwrap();
        assert_eq!(m.dims, vec![1, 2, 1, 1, 0]);
    }

    #[test]
    fn jw_array_d6_type1_worked_example() {
        let w = WeylElement::from_window(d(6), vec![5, -3, -1, 2, 4, 6]).unwrap();
        let s = jw_array(&w).unwrap();
        assert_eq!(s.render_text(), "1\n2 -1\n3 2\n4\n.\n");
    }

    #[test]
    fn jw_array_d6_pair_worked_example() {
        // S(w) is (0,1)-predecessor-closed, S(w') is (1,0)
        let w = WeylElement::from_window(d(6), vec![-3, 4, -5, 1, 2, 6]).unwrap();
        let s = jw_array(&w).unwrap();
        assert_eq!(s.render_text(), "2 1/-1 -2 -3 -4\n3 2 1\n4 3 2\n.\n");
        assert_eq!(s.closure, Closure::AlphaBeta01);

        let wp = WeylElement::from_window(d(6), vec![3, 4, -5, -2, 1, 6]).unwrap();
        let sp = jw_array(&wp).unwrap();
        assert_eq!(sp.render_text(), "2 1/-1 -2 -3 -4\n3 2 1/-1\n4 3 2 1\n.\n");
        assert_eq!(sp.closure, Closure::AlphaBeta10);
    }

    #[test]
    fn closure_dichotomy_d4() {
        // alpha-beta closure is flagged exactly when {1,2} lies among the
        // absolute values after the descent
        let c = d(4);
        for w in crate::weyl::WeylGroup::enumerate(c).unwrap().elements {
            let JirrClass::Jirr { descent_type, .. } = w.classify_jirr() else {
                continue;
            };
            if descent_type == 1 || descent_type == -1 {
                continue;
            }
            let s = jw_array(&w).unwrap();
            let tail: Vec<i32> = w.window[(descent_type as usize)..]
                .iter()
                .map(|x| x.abs())
                .collect();
            let both = tail.contains(&1) && tail.contains(&2);
            assert_eq!(both, s.closure != Closure::Predecessor, "w = {:?}", w.window);
        }
    }

    #[test]
    fn jw_modules_match_jmap_d4_spotcheck() {
        use crate::ideals::Calculus;
        let c: Calculus<Q> = Calculus::new(d(4)).unwrap();
        for window in [vec![3, 4, 1, 2], vec![-3, 4, -1, 2], vec![1, 2, -4, -3]] {
            let w = WeylElement::from_window(d(4), window.clone()).unwrap();
            let s = jw_array(&w).unwrap();
            let m: ModuleRep<Q> = array_to_module(&s, &c.pi.quiver).unwrap();
            let id = c.group.id_of(&w).unwrap();
            let j = c.jmap(id).unwrap();
            assert_eq!(
                is_isomorphic(&c.pi.quiver, &m, &j, 5).unwrap(),
                IsoOutcome::Isomorphic,
                "window {window:?}"
            );
        }
    }
}
