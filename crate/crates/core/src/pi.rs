//! The preprojective algebra of a simply-laced type, constructed degree by
//! degree: the path algebra of the doubled quiver modulo the ideal generated
//! by the vertex relations `sum_a (a a* - a* a)`.
//!
//! Degree d+1 is built as the quotient of (degree d basis x arrows) by the
//! image of (degree d-1 basis x relations), which keeps every intermediate
//! space bounded by `dim Pi`. Paths compose left to right (`p q` is "p then
//! q"), so left modules live on sources: the basis vector `b` of a left
//! module slice sits at the vertex `src(b)`.

use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::weyl::{CartanType, Family, WeylError};

/// An arrow of the doubled quiver. `unstarred` marks the chosen orientation;
/// its reverse is `opp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QArrow {
    pub src: usize,
    pub tgt: usize,
    pub opp: usize,
    pub unstarred: bool,
}

#[derive(Debug, Clone)]
pub struct Quiver {
    pub cartan: CartanType,
    /// Vertex labels: `1..n` for A_n, `[-1, 1, .., n-1]` for D_n.
    pub labels: Vec<i32>,
    pub arrows: Vec<QArrow>,
}

impl Quiver {
    pub fn new(cartan: CartanType) -> Result<Quiver, WeylError> {
        cartan.require_supported()?;
        let n = cartan.rank;
        let (labels, edges): (Vec<i32>, Vec<(usize, usize)>) = match cartan.family {
            Family::A => (
                (1..=n as i32).collect(),
                (0..n - 1).map(|i| (i, i + 1)).collect(),
            ),
            Family::D => {
                // vertex ids: 0 = label -1, k = label k for 1 <= k <= n-1
                let mut labels = vec![-1_i32];
                labels.extend(1..n as i32);
                let mut edges = vec![(1, 2), (0, 2)];
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
                (labels, edges)
            }
            Family::E => unreachable!(),
        };
        let mut arrows = Vec::with_capacity(2 * edges.len());
        for (s, t) in edges {
            let x = arrows.len();
            arrows.push(QArrow {
                src: s,
                tgt: t,
                opp: x + 1,
                unstarred: true,
            });
            arrows.push(QArrow {
                src: t,
                tgt: s,
                opp: x,
                unstarred: false,
            });
        }
        Ok(Quiver {
            cartan,
            labels,
            arrows,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertex_index(&self, label: i32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.src == v)
            .map(|(i, _)| i)
    }

    /// Sign of an arrow in the preprojective relation: +1 on the chosen
    /// orientation, -1 on the reverses.
    pub fn eps(&self, a: usize) -> i64 {
        if self.arrows[a].unstarred {
            1
        } else {
            -1
        }
    }

    /// Adjacency of the underlying Dynkin diagram, for the Euler form.
    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.arrows
            .iter()
            .filter(|a| a.unstarred)
            .map(|a| (a.src, a.tgt))
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct BasisElt {
    pub degree: usize,
    pub src: usize,
    pub tgt: usize,
    /// `Some((p, a))` means this element is the class of `p * a`.
    pub parent: Option<(usize, usize)>,
}

type SparseVec<F> = Vec<(usize, F)>;

pub struct PiAlgebra<F> {
    pub quiver: Quiver,
    pub basis: Vec<BasisElt>,
    /// `right_mul[a][b]` = coordinates of `b * a`.
    right_mul: Vec<Vec<SparseVec<F>>>,
    /// `left_mul[a][b]` = coordinates of `a * b`.
    left_mul: Vec<Vec<SparseVec<F>>>,
}

impl<F: Scalar> PiAlgebra<F> {
    pub fn build(cartan: CartanType) -> Result<PiAlgebra<F>, WeylError> {
        let quiver = Quiver::new(cartan)?;
        let nv = quiver.vertex_count();
        let na = quiver.arrows.len();

        let mut basis: Vec<BasisElt> = (0..nv)
            .map(|v| BasisElt {
                degree: 0,
                src: v,
                tgt: v,
                parent: None,
            })
            .collect();
        for (i, a) in quiver.arrows.iter().enumerate() {
            basis.push(BasisElt {
                degree: 1,
                src: a.src,
                tgt: a.tgt,
                parent: Some((a.src, i)),
            });
        }

        let mut right_mul: Vec<Vec<SparseVec<F>>> = vec![vec![Vec::new(); basis.len()]; na];
        let mut left_mul: Vec<Vec<SparseVec<F>>> = vec![vec![Vec::new(); basis.len()]; na];
        for (i, a) in quiver.arrows.iter().enumerate() {
            right_mul[i][a.src] = vec![(nv + i, F::one())];
            left_mul[i][a.tgt] = vec![(nv + i, F::one())];
        }

        let mut prev: Vec<usize> = (0..nv).collect();
        let mut cur: Vec<usize> = (nv..nv + na).collect();
        // degree bound: Loewy length is h - 1, so the top degree is h - 2
        let max_degree = cartan.coxeter_number().saturating_sub(2);

        for degree in 1.. {
            assert!(
                degree <= max_degree + 1,
                "graded construction failed to terminate by the Coxeter bound"
            );
            // coordinates of (degree d basis) x arrows
            let mut coords: Vec<(usize, usize)> = Vec::new();
            let mut coord_of = std::collections::HashMap::new();
            for &b in &cur {
                for a in 0..na {
                    if quiver.arrows[a].src == basis[b].tgt {
                        coord_of.insert((b, a), coords.len());
                        coords.push((b, a));
                    }
                }
            }
            // relation rows: p * rho_j for p of degree d-1 with tgt(p) = j
            let mut rows: Vec<Vec<F>> = Vec::new();
            for &p in &prev {
                let j = basis[p].tgt;
                let mut row = vec![F::zero(); coords.len()];
                let mut nonzero = false;
                for a in quiver.arrows_from(j).collect::<Vec<_>>() {
                    let sign = F::from_int(quiver.eps(a));
                    let aop = quiver.arrows[a].opp;
                    for (b, c) in &right_mul[a][p] {
                        let k = coord_of[&(*b, aop)];
                        row[k] = row[k].clone() + sign.clone() * c.clone();
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
            let ncoords = coords.len();
            let mut rel = Matrix::from_rows(rows, ncoords);
            let pivots = rel.rref();
            let pivot_row: std::collections::HashMap<usize, usize> =
                pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();

            // new basis = non-pivot coordinates
            let base_id = basis.len();
            let mut new_ids: Vec<usize> = Vec::new();
            let mut new_of_coord: Vec<Option<usize>> = vec![None; ncoords];
            for (k, &(b, a)) in coords.iter().enumerate() {
                if !pivot_row.contains_key(&k) {
                    let id = base_id + new_ids.len();
                    new_of_coord[k] = Some(id);
                    new_ids.push(id);
                    basis.push(BasisElt {
                        degree: degree + 1,
                        src: basis[b].src,
                        tgt: quiver.arrows[a].tgt,
                        parent: Some((b, a)),
                    });
                }
            }
            let coord_class = |k: usize| -> SparseVec<F> {
                match new_of_coord[k] {
                    Some(id) => vec![(id, F::one())],
                    None => {
                        let r = pivot_row[&k];
                        let mut v = Vec::new();
                        for k2 in 0..ncoords {
                            if let Some(id) = new_of_coord[k2] {
                                let c = rel[(r, k2)].clone();
                                if !c.is_zero() {
                                    v.push((id, -c));
                                }
                            }
                        }
                        v
                    }
                }
            };

            // extend multiplication tables to the new basis size
            for a in 0..na {
                right_mul[a].resize(basis.len(), Vec::new());
                left_mul[a].resize(basis.len(), Vec::new());
            }
            // right multiplication on the current degree
            for &b in &cur {
                for a in 0..na {
                    if quiver.arrows[a].src == basis[b].tgt {
                        right_mul[a][b] = coord_class(coord_of[&(b, a)]);
                    }
                }
            }
            // left multiplication on the current degree: a * (p * c) = (a * p) * c
            for &b in &cur {
                let (p, c) = basis[b].parent.expect("degree >= 1 has a parent");
                for a in 0..na {
                    if quiver.arrows[a].tgt == basis[b].src {
                        let mut acc: Vec<F> = vec![F::zero(); basis.len()];
                        for (q, coef) in &left_mul[a][p] {
                            for (r, coef2) in &right_mul[c][*q] {
                                acc[*r] = acc[*r].clone() + coef.clone() * coef2.clone();
                            }
                        }
                        left_mul[a][b] = acc
                            .into_iter()
                            .enumerate()
                            .filter(|(_, x)| !x.is_zero())
                            .collect();
                    }
                }
            }

            if new_ids.is_empty() {
                break;
            }
            prev = cur;
            cur = new_ids;
        }

        Ok(PiAlgebra {
            quiver,
            basis,
            right_mul,
            left_mul,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn loewy_top_degree(&self) -> usize {
        self.basis.iter().map(|b| b.degree).max().unwrap_or(0)
    }

    /// Coordinates of `a * x` for an arrow `a` and an element `x`.
    pub fn left_mul_arrow(&self, a: usize, x: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (b, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (r, coef) in &self.left_mul[a][b] {
                out[*r] = out[*r].clone() + c.clone() * coef.clone();
            }
        }
        out
    }

    pub fn right_mul_arrow(&self, a: usize, x: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (b, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (r, coef) in &self.right_mul[a][b] {
                out[*r] = out[*r].clone() + c.clone() * coef.clone();
            }
        }
        out
    }

    /// Full left-multiplication matrix of a basis element.
    pub fn left_mul_basis(&self, b: usize) -> Matrix<F> {
        match self.basis[b].parent {
            None => {
                // idempotent e_v: projection onto src = v coordinates
                let v = self.basis[b].src;
                Matrix::from_fn(self.dim(), self.dim(), |i, j| {
                    if i == j && self.basis[j].src == v {
                        F::one()
                    } else {
                        F::zero()
                    }
                })
            }
            Some((p, c)) => {
                // b = p * c, so b * y = p * (c * y)
                let lp = self.left_mul_basis(p);
                let mut lc: Matrix<F> = Matrix::zero(self.dim(), self.dim());
                for j in 0..self.dim() {
                    for (r, coef) in &self.left_mul[c][j] {
                        lc[(*r, j)] = coef.clone();
                    }
                }
                lp.mul(&lc)
            }
        }
    }

    /// Left multiplication by an arbitrary element, as a matrix.
    pub fn left_mul_elt(&self, x: &[F]) -> Matrix<F> {
        let mut out: Matrix<F> = Matrix::zero(self.dim(), self.dim());
        for (b, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.left_mul_basis(b).scale(c));
            }
        }
        out
    }

    /// Left multiplication by the idempotent `e_v`: zero out all coordinates
    /// whose source vertex is not `v`.
    pub fn project_src(&self, v: usize, x: &[F]) -> Vec<F> {
        x.iter()
            .enumerate()
            .map(|(b, c)| {
                if self.basis[b].src == v {
                    c.clone()
                } else {
                    F::zero()
                }
            })
            .collect()
    }

    /// Basis ids of `e_i Pi e_j` (src = i, tgt = j).
    pub fn hom_slice(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&b| self.basis[b].src == i && self.basis[b].tgt == j)
            .collect()
    }

    /// Basis ids of `Pi e_v` (all paths into v).
    pub fn tgt_slice(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].tgt == v).collect()
    }

    /// Basis ids of `e_v Pi` (all paths out of v).
    pub fn src_slice(&self, v: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&b| self.basis[b].src == v).collect()
    }

    /// Nakayama permutation: `soc(Pi e_v) = S_{nu(v)}`, read off the socle
    /// vertex of each left projective.
    pub fn nakayama(&self) -> Vec<usize> {
        let top = self.loewy_top_degree();
        (0..self.vertex_count())
            .map(|v| {
                let socle: Vec<usize> = self
                    .tgt_slice(v)
                    .into_iter()
                    .filter(|&b| self.basis[b].degree == top)
                    .collect();
                assert_eq!(socle.len(), 1, "projective socle must be simple");
                self.basis[socle[0]].src
            })
            .collect()
    }

    /// The symmetric Euler form
    /// `<x, y> = 2 sum_i x_i y_i - sum_edges (x_i y_j + x_j y_i)`.
    pub fn euler_form(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut acc = 0;
        for v in 0..self.vertex_count() {
            acc += 2 * x[v] * y[v];
        }
        for (i, j) in self.quiver.edge_pairs() {
            acc -= x[i] * y[j] + x[j] * y[i];
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{CartanType, Family};
    use crate::Q;
    use num_traits::Zero;

    fn pi(fam: Family, n: usize) -> PiAlgebra<Q> {
        PiAlgebra::build(CartanType::new(fam, n).unwrap()).unwrap()
    }

    fn expected_dim(fam: Family, n: usize) -> usize {
        // cell counts of the abbreviated projective arrays
        match fam {
            Family::A => n * (n + 1) * (n + 2) / 6,
            Family::D => n * (n - 1) + (2..n).map(|l| (n - l) * (n + l - 1)).sum::<usize>(),
            Family::E => unreachable!(),
        }
    }

    #[test]
    fn dimensions_match_projective_cell_counts() {
        for (fam, n) in [
            (Family::A, 2),
            (Family::A, 3),
            (Family::A, 4),
            (Family::A, 5),
            (Family::D, 4),
            (Family::D, 5),
        ] {
            let p = pi(fam, n);
            assert_eq!(p.dim(), expected_dim(fam, n), "{fam:?}_{n}");
            assert_eq!(
                p.basis.iter().filter(|b| b.degree == 0).count(),
                p.vertex_count()
            );
            // Loewy length h - 1
            assert_eq!(p.loewy_top_degree(), p.quiver.cartan.coxeter_number() - 2);
        }
    }

    #[test]
    fn a2_two_cycles_vanish() {
        let p = pi(Family::A, 2);
        assert_eq!(p.dim(), 4);
        let x_id = 2usize; // deg-1 basis follows the two idempotents
        let y_id = 3usize;
        let mut x = vec![Q::zero(); 4];
        x[x_id] = Q::from_int(1);
        let mut y = vec![Q::zero(); 4];
        y[y_id] = Q::from_int(1);
        // arrow 0 = x: 1->2, arrow 1 = y: 2->1
        assert!(p.right_mul_arrow(1, &x).iter().all(|c| c.is_zero()));
        assert!(p.right_mul_arrow(0, &y).iter().all(|c| c.is_zero()));
    }

    #[test]
    fn left_right_associativity() {
        // (a * x) * b == a * (x * b) for all arrows a, b and basis x
        for (fam, n) in [(Family::A, 3), (Family::D, 4)] {
            let p = pi(fam, n);
            let na = p.quiver.arrows.len();
            for a in 0..na {
                for b in 0..na {
                    for x in 0..p.dim() {
                        let mut v = vec![Q::zero(); p.dim()];
                        v[x] = Q::from_int(1);
                        let lhs = p.right_mul_arrow(b, &p.left_mul_arrow(a, &v));
                        let rhs = p.left_mul_arrow(a, &p.right_mul_arrow(b, &v));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn relations_vanish_in_every_degree() {
        for (fam, n) in [(Family::A, 3), (Family::A, 4), (Family::D, 4)] {
            let p = pi(fam, n);
            for x in 0..p.dim() {
                let mut v = vec![Q::zero(); p.dim()];
                v[x] = Q::from_int(1);
                let j = p.basis[x].tgt;
                let mut acc = vec![Q::zero(); p.dim()];
                for a in p.quiver.arrows_from(j).collect::<Vec<_>>() {
                    let sign = Q::from_int(p.quiver.eps(a));
                    let step = p.right_mul_arrow(a, &v);
                    let step = p.right_mul_arrow(p.quiver.arrows[a].opp, &step);
                    for k in 0..p.dim() {
                        acc[k] = acc[k].clone() + sign.clone() * step[k].clone();
                    }
                }
                assert!(acc.iter().all(|c| c.is_zero()), "{fam:?}_{n} at basis {x}");
            }
        }
    }

    #[test]
    fn nakayama_permutation() {
        // A_3: the diagram flip 1 <-> 3; D_4 (n even): identity
        let p = pi(Family::A, 3);
        assert_eq!(p.nakayama(), vec![2, 1, 0]);
        let p = pi(Family::D, 4);
        assert_eq!(p.nakayama(), vec![0, 1, 2, 3]);
        // D_5 (n odd): swaps the fork vertices -1 and 1
        let p = pi(Family::D, 5);
        assert_eq!(p.nakayama(), vec![1, 0, 2, 3, 4]);
    }

    #[test]
    fn euler_form_a2() {
        let p = pi(Family::A, 2);
        assert_eq!(p.euler_form(&[1, 1], &[1, 1]), 2);
        assert_eq!(p.euler_form(&[1, 0], &[1, 0]), 2);
        assert_eq!(p.euler_form(&[1, 0], &[0, 1]), -1);
    }
}
