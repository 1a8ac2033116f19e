//! Quiver representations of the doubled quiver and the functor toolkit:
//! Hom spaces, radicals and socles, projective presentations, Ext^1 with
//! explicit extension middle terms, the Auslander-Reiten translate via
//! D Tr on minimal presentations, duality, Fac/Sub membership, and the
//! isomorphism test.
//!
//! A representation carries one matrix per arrow, `maps[a]: V_src -> V_tgt`.
//! The corresponding left Pi-module action of an arrow `a` is `maps[a.opp]`,
//! so the preprojective relation at a vertex `i` reads
//! `sum_{a: src(a)=i} eps(a) maps[a.opp] maps[a] = 0`.

use crate::linalg::{Matrix, QuotientSpace, Subspace};
use crate::pi::{PiAlgebra, Quiver};
use crate::scalar::{Scalar, SmallRng};

#[derive(Clone)]
pub struct ModuleRep<F> {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix<F>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    IsoUndecided,
}

impl std::fmt::Display for RepError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RepError::IsoUndecided => write!(
                f,
                "isomorphism test undecided: no invertible hom found and no separating invariant"
            ),
        }
    }
}

impl std::error::Error for RepError {}

impl<F: Scalar> ModuleRep<F> {
    pub fn zero(quiver: &Quiver) -> Self {
        let dims = vec![0; quiver.vertex_count()];
        let maps = quiver
            .arrows
            .iter()
            .map(|a| Matrix::zero(dims[a.tgt], dims[a.src]))
            .collect();
        ModuleRep { dims, maps }
    }

    pub fn simple(quiver: &Quiver, v: usize) -> Self {
        let mut dims = vec![0; quiver.vertex_count()];
        dims[v] = 1;
        let maps = quiver
            .arrows
            .iter()
            .map(|a| Matrix::zero(dims[a.tgt], dims[a.src]))
            .collect();
        ModuleRep { dims, maps }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn dims_i64(&self) -> Vec<i64> {
        self.dims.iter().map(|&d| d as i64).collect()
    }

    /// Check the preprojective relations at every vertex.
    pub fn validate(&self, quiver: &Quiver) -> bool {
        for i in 0..quiver.vertex_count() {
            let mut acc: Matrix<F> = Matrix::zero(self.dims[i], self.dims[i]);
            for a in quiver.arrows_from(i) {
                let sign = F::from_int(quiver.eps(a));
                let comp = self.maps[quiver.arrows[a].opp].mul(&self.maps[a]);
                acc = acc.add(&comp.scale(&sign));
            }
            if !acc.is_zero() {
                return false;
            }
        }
        true
    }

    pub fn direct_sum(quiver: &Quiver, parts: &[&ModuleRep<F>]) -> Self {
        let nv = quiver.vertex_count();
        let mut dims = vec![0; nv];
        for p in parts {
            for v in 0..nv {
                dims[v] += p.dims[v];
            }
        }
        let maps = quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zero(dims[a.tgt], dims[a.src]);
                let mut ro = 0;
                let mut co = 0;
                for p in parts {
                    let blk = &p.maps[ai];
                    for i in 0..blk.rows {
                        for j in 0..blk.cols {
                            m[(ro + i, co + j)] = blk[(i, j)].clone();
                        }
                    }
                    ro += p.dims[a.tgt];
                    co += p.dims[a.src];
                }
                m
            })
            .collect();
        ModuleRep { dims, maps }
    }

    /// Dual module via the swap anti-automorphism `a <-> a*`:
    /// the dual acts along `a` by the transpose of the `a.opp` map.
    pub fn dual(&self, quiver: &Quiver) -> ModuleRep<F> {
        let maps = quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, _)| self.maps[quiver.arrows[ai].opp].transpose())
            .collect();
        ModuleRep {
            dims: self.dims.clone(),
            maps,
        }
    }
}

/// A homomorphism of representations: one block per vertex.
#[derive(Clone)]
pub struct RepHom<F> {
    pub blocks: Vec<Matrix<F>>,
}

impl<F: Scalar> RepHom<F> {
    pub fn compose(&self, inner: &RepHom<F>) -> RepHom<F> {
        RepHom {
            blocks: self
                .blocks
                .iter()
                .zip(&inner.blocks)
                .map(|(o, i)| o.mul(i))
                .collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols)
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows)
    }

    pub fn is_invertible(&self) -> bool {
        self.blocks.iter().all(|b| b.is_invertible())
    }

    pub fn scale_add(&self, c: &F, other: &RepHom<F>) -> RepHom<F> {
        RepHom {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| b.add(&a.scale(c)))
                .collect(),
        }
    }

    pub fn zero_like(&self) -> RepHom<F> {
        RepHom {
            blocks: self
                .blocks
                .iter()
                .map(|b| Matrix::zero(b.rows, b.cols))
                .collect(),
        }
    }

    fn flat(&self) -> Vec<F> {
        let mut v = Vec::new();
        for b in &self.blocks {
            for i in 0..b.rows {
                v.extend(b.row(i).iter().cloned());
            }
        }
        v
    }
}

/// Basis of `Hom(M, N)` by solving the intertwining equations.
pub fn hom_basis<F: Scalar>(quiver: &Quiver, m: &ModuleRep<F>, n: &ModuleRep<F>) -> Vec<RepHom<F>> {
    let nv = quiver.vertex_count();
    // unknowns: per vertex, the block N_v x M_v, row-major
    let mut offset = vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offset[nv];
    if unknowns == 0 {
        return Vec::new();
    }
    let mut rows: Vec<Vec<F>> = Vec::new();
    for (ai, a) in quiver.arrows.iter().enumerate() {
        let (s, t) = (a.src, a.tgt);
        // phi_t * f_a - g_a * phi_s = 0, one equation per (row of N_t, col of M_s)
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = vec![F::zero(); unknowns];
                let mut nonzero = false;
                for k in 0..m.dims[t] {
                    let coef = m.maps[ai][(k, c)].clone();
                    if !coef.is_zero() {
                        let idx = offset[t] + r * m.dims[t] + k;
                        row[idx] = row[idx].clone() + coef;
                        nonzero = true;
                    }
                }
                for k in 0..n.dims[s] {
                    let coef = n.maps[ai][(r, k)].clone();
                    if !coef.is_zero() {
                        let idx = offset[s] + k * m.dims[s] + c;
                        row[idx] = row[idx].clone() - coef;
                        nonzero = true;
                    }
                }
                if nonzero {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(rows, unknowns);
    let kernel = system.kernel();
    (0..kernel.rows)
        .map(|k| {
            let sol = kernel.row(k);
            let blocks = (0..nv)
                .map(|v| {
                    Matrix::from_fn(n.dims[v], m.dims[v], |r, c| {
                        sol[offset[v] + r * m.dims[v] + c].clone()
                    })
                })
                .collect();
            RepHom { blocks }
        })
        .collect()
}

pub fn hom_dim<F: Scalar>(quiver: &Quiver, m: &ModuleRep<F>, n: &ModuleRep<F>) -> usize {
    hom_basis(quiver, m, n).len()
}

pub fn end_dim<F: Scalar>(quiver: &Quiver, m: &ModuleRep<F>) -> usize {
    hom_dim(quiver, m, m)
}

pub fn is_brick<F: Scalar>(quiver: &Quiver, m: &ModuleRep<F>) -> bool {
    !m.is_zero() && end_dim(quiver, m) == 1
}

/// A collection of vertex subspaces closed under all arrow maps.
#[derive(Clone)]
pub struct SubRep<F> {
    pub spaces: Vec<Subspace<F>>,
}

impl<F: Scalar> SubRep<F> {
    pub fn zero(m: &ModuleRep<F>) -> Self {
        SubRep {
            spaces: m.dims.iter().map(|&d| Subspace::zero(d)).collect(),
        }
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(|s| s.dim()).sum()
    }

    pub fn contains(&self, other: &SubRep<F>) -> bool {
        self.spaces
            .iter()
            .zip(&other.spaces)
            .all(|(a, b)| a.contains_subspace(b))
    }

    /// Close the given vertex subspaces under all arrow maps of `m`.
    pub fn generated(quiver: &Quiver, m: &ModuleRep<F>, seeds: &[Vec<Vec<F>>]) -> Self {
        let mut spaces: Vec<Subspace<F>> = m.dims.iter().map(|&d| Subspace::zero(d)).collect();
        let mut work: Vec<(usize, Vec<F>)> = Vec::new();
        for (v, vecs) in seeds.iter().enumerate() {
            for vec in vecs {
                if spaces[v].insert(vec) {
                    work.push((v, vec.clone()));
                }
            }
        }
        while let Some((v, vec)) = work.pop() {
            for (ai, a) in quiver.arrows.iter().enumerate() {
                if a.src != v {
                    continue;
                }
                let img = m.maps[ai].apply(&vec);
                if spaces[a.tgt].insert(&img) {
                    work.push((a.tgt, img));
                }
            }
        }
        SubRep { spaces }
    }

    /// The induced representation on the subspaces, with the inclusion hom.
    pub fn induced(&self, quiver: &Quiver, m: &ModuleRep<F>) -> (ModuleRep<F>, RepHom<F>) {
        let dims: Vec<usize> = self.spaces.iter().map(|s| s.dim()).collect();
        let maps = quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut out = Matrix::zero(dims[a.tgt], dims[a.src]);
                for (j, bvec) in self.spaces[a.src].basis_vectors().iter().enumerate() {
                    let img = m.maps[ai].apply(bvec);
                    debug_assert!(self.spaces[a.tgt].contains(&img), "not arrow-closed");
                    for (i, c) in self.spaces[a.tgt].coords(&img).into_iter().enumerate() {
                        out[(i, j)] = c;
                    }
                }
                out
            })
            .collect();
        let blocks = (0..quiver.vertex_count())
            .map(|v| {
                let mut inc = Matrix::zero(m.dims[v], dims[v]);
                for (j, bvec) in self.spaces[v].basis_vectors().iter().enumerate() {
                    for (i, c) in bvec.iter().enumerate() {
                        inc[(i, j)] = c.clone();
                    }
                }
                inc
            })
            .collect();
        (ModuleRep { dims, maps }, RepHom { blocks })
    }

    /// The quotient representation `m / self`, with the projection hom.
    pub fn quotient(&self, quiver: &Quiver, m: &ModuleRep<F>) -> (ModuleRep<F>, RepHom<F>) {
        let quos: Vec<QuotientSpace<F>> = self
            .spaces
            .iter()
            .map(|s| QuotientSpace::new(s.clone()))
            .collect();
        let dims: Vec<usize> = quos.iter().map(|q| q.dim()).collect();
        let maps = quiver
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut out = Matrix::zero(dims[a.tgt], dims[a.src]);
                for j in 0..dims[a.src] {
                    let mut coords = vec![F::zero(); dims[a.src]];
                    coords[j] = F::one();
                    let lifted = quos[a.src].lift(&coords);
                    let img = m.maps[ai].apply(&lifted);
                    for (i, c) in quos[a.tgt].project(&img).into_iter().enumerate() {
                        out[(i, j)] = c;
                    }
                }
                out
            })
            .collect();
        let blocks = (0..quiver.vertex_count())
            .map(|v| {
                let mut pr = Matrix::zero(dims[v], m.dims[v]);
                for j in 0..m.dims[v] {
                    let mut e = vec![F::zero(); m.dims[v]];
                    e[j] = F::one();
                    for (i, c) in quos[v].project(&e).into_iter().enumerate() {
                        pr[(i, j)] = c;
                    }
                }
                pr
            })
            .collect();
        (ModuleRep { dims, maps }, RepHom { blocks })
    }
}

/// Kernel of a hom as a subrep of its source.
pub fn kernel_subrep<F: Scalar>(f: &RepHom<F>, source: &ModuleRep<F>) -> SubRep<F> {
    let spaces = f
        .blocks
        .iter()
        .zip(&source.dims)
        .map(|(b, &d)| {
            let k = b.kernel();
            Subspace::from_spanning(d, &(0..k.rows).map(|i| k.row_vec(i)).collect::<Vec<_>>())
        })
        .collect();
    SubRep { spaces }
}

/// Image of a hom as a subrep of its target.
pub fn image_subrep<F: Scalar>(f: &RepHom<F>, target: &ModuleRep<F>) -> SubRep<F> {
    let spaces = f
        .blocks
        .iter()
        .zip(&target.dims)
        .map(|(b, &d)| {
            let cols: Vec<Vec<F>> = (0..b.cols)
                .map(|j| (0..b.rows).map(|i| b[(i, j)].clone()).collect())
                .collect();
            Subspace::from_spanning(d, &cols)
        })
        .collect();
    SubRep { spaces }
}

/// The radical `rad M`: at each vertex, the sum of images of incoming arrow
/// maps.
pub fn radical<F: Scalar>(quiver: &Quiver, m: &ModuleRep<F>) -> SubRep<F> {
    let spaces = (0..quiver.vertex_count())
        .map(|v| {
            let mut vecs: Vec<Vec<F>> = Vec::new();
            for (ai, a) in quiver.arrows.iter().enumerate() {
                if a.tgt == v {
                    for j in 0..m.dims[a.src] {
                        let col: Vec<F> =
                            (0..m.dims[v]).map(|i| m.maps[ai][(i, j)].clone()).collect();
                        vecs.push(col);
                    }
                }
            }
            Subspace::from_spanning(m.dims[v], &vecs)
        })
        .collect();
    SubRep { spaces }
}

/// The socle: at each vertex, the common kernel of all outgoing arrow maps.
pub fn socle<F: Scalar>(quiver: &Quiver, m: &ModuleRep<F>) -> SubRep<F> {
    let spaces = (0..quiver.vertex_count())
        .map(|v| {
            let mut rows: Vec<Vec<F>> = Vec::new();
            for (ai, a) in quiver.arrows.iter().enumerate() {
                if a.src == v {
                    for i in 0..m.dims[a.tgt] {
                        rows.push(m.maps[ai].row_vec(i));
                    }
                }
            }
            if rows.is_empty() {
                return Subspace::full(m.dims[v]);
            }
            let k = Matrix::from_rows(rows, m.dims[v]).kernel();
            Subspace::from_spanning(
                m.dims[v],
                &(0..k.rows).map(|i| k.row_vec(i)).collect::<Vec<_>>(),
            )
        })
        .collect();
    SubRep { spaces }
}

/// Top generators of `m`: lifted basis vectors of `m / rad m`, as
/// (vertex, vector) pairs. Deterministic order: vertex-major.
pub fn top_generators<F: Scalar>(quiver: &Quiver, m: &ModuleRep<F>) -> Vec<(usize, Vec<F>)> {
    let rad = radical(quiver, m);
    let mut gens = Vec::new();
    for v in 0..quiver.vertex_count() {
        let quo = QuotientSpace::new(rad.spaces[v].clone());
        for k in 0..quo.dim() {
            let mut coords = vec![F::zero(); quo.dim()];
            coords[k] = F::one();
            gens.push((v, quo.lift(&coords)));
        }
    }
    gens
}

/// Left projective `Pi e_v` as a representation. Vertex spaces are indexed
/// by the basis of `e_j Pi e_v`, in algebra-basis order.
pub fn projective_rep<F: Scalar>(pi: &PiAlgebra<F>, v: usize) -> ModuleRep<F> {
    let quiver = &pi.quiver;
    let nv = quiver.vertex_count();
    let slice: Vec<Vec<usize>> = (0..nv).map(|j| pi.hom_slice(j, v)).collect();
    let dims: Vec<usize> = slice.iter().map(|s| s.len()).collect();
    let pos: std::collections::HashMap<usize, usize> = slice
        .iter()
        .flat_map(|s| s.iter().enumerate().map(|(k, &b)| (b, k)))
        .collect();
    let maps = quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            // the map along `a` is the left action of a.opp, which moves the
            // source of a basis path from src(a) to tgt(a)
            let aop = quiver.arrows[ai].opp;
            let mut out = Matrix::zero(dims[a.tgt], dims[a.src]);
            for (j, &b) in slice[a.src].iter().enumerate() {
                let mut x = vec![F::zero(); pi.dim()];
                x[b] = F::one();
                let img = pi.left_mul_arrow(aop, &x);
                for (bid, c) in img.into_iter().enumerate() {
                    if !c.is_zero() {
                        debug_assert_eq!(pi.basis[bid].src, a.tgt);
                        out[(pos[&bid], j)] = c;
                    }
                }
            }
            out
        })
        .collect();
    ModuleRep { dims, maps }
}

/// Evaluate the action of an algebra basis element `b` on a vector of `m`
/// living at vertex `tgt(b)`; the result lives at `src(b)`.
pub fn act_basis<F: Scalar>(pi: &PiAlgebra<F>, m: &ModuleRep<F>, b: usize, vec: &[F]) -> Vec<F> {
    match pi.basis[b].parent {
        None => vec.to_vec(),
        Some((p, a)) => {
            // (p a) acts as p after a; the arrow a acts through maps[a.opp]
            let step = m.maps[pi.quiver.arrows[a].opp].apply(vec);
            act_basis(pi, m, p, &step)
        }
    }
}

/// The hom `Pi e_v -> m` sending `e_v` to `gen` (an element of `m` at `v`).
pub fn hom_from_projective<F: Scalar>(
    pi: &PiAlgebra<F>,
    v: usize,
    m: &ModuleRep<F>,
    gen: &[F],
) -> RepHom<F> {
    let quiver = &pi.quiver;
    let blocks = (0..quiver.vertex_count())
        .map(|j| {
            let slice = pi.hom_slice(j, v);
            let mut out = Matrix::zero(m.dims[j], slice.len());
            for (col, &b) in slice.iter().enumerate() {
                let val = act_basis(pi, m, b, gen);
                for (i, c) in val.into_iter().enumerate() {
                    out[(i, col)] = c;
                }
            }
            out
        })
        .collect();
    RepHom { blocks }
}

/// A minimal projective presentation `P1 -> P0 -> M -> 0`.
pub struct Presentation<F> {
    pub p0_vertices: Vec<usize>,
    pub p1_vertices: Vec<usize>,
    pub p0: ModuleRep<F>,
    pub p1: ModuleRep<F>,
    /// The cover `P0 -> M`.
    pub cover: RepHom<F>,
    /// The presentation map `P1 -> P0`.
    pub syzygy_map: RepHom<F>,
    /// `matrix_elts[beta][gamma]` is the element of `e_{i_beta} Pi e_{j_gamma}`
    /// (as a full algebra vector) describing the map `P1 -> P0`.
    pub matrix_elts: Vec<Vec<Vec<F>>>,
    /// Kernel of the cover as a subrep of P0 (the syzygy).
    pub syzygy: SubRep<F>,
}

/// Direct sum of projectives with a hom onto `m` hitting the generators.
fn projective_cover_onto<F: Scalar>(
    pi: &PiAlgebra<F>,
    m: &ModuleRep<F>,
    gens: &[(usize, Vec<F>)],
) -> (Vec<usize>, ModuleRep<F>, RepHom<F>) {
    let quiver = &pi.quiver;
    let verts: Vec<usize> = gens.iter().map(|&(v, _)| v).collect();
    let parts: Vec<ModuleRep<F>> = verts.iter().map(|&v| projective_rep(pi, v)).collect();
    let part_refs: Vec<&ModuleRep<F>> = parts.iter().collect();
    let p = ModuleRep::direct_sum(quiver, &part_refs);
    let homs: Vec<RepHom<F>> = gens
        .iter()
        .map(|(v, g)| hom_from_projective(pi, *v, m, g))
        .collect();
    let blocks = (0..quiver.vertex_count())
        .map(|j| {
            let mut out = Matrix::zero(m.dims[j], p.dims[j]);
            let mut col = 0;
            for (h, part) in homs.iter().zip(&parts) {
                let blk = &h.blocks[j];
                for jj in 0..part.dims[j] {
                    for i in 0..m.dims[j] {
                        out[(i, col + jj)] = blk[(i, jj)].clone();
                    }
                }
                col += part.dims[j];
            }
            out
        })
        .collect();
    (verts, p, RepHom { blocks })
}

pub fn presentation<F: Scalar>(pi: &PiAlgebra<F>, m: &ModuleRep<F>) -> Presentation<F> {
    let quiver = &pi.quiver;
    let gens0 = top_generators(quiver, m);
    let (p0_vertices, p0, cover) = projective_cover_onto(pi, m, &gens0);
    debug_assert!(cover.is_surjective());
    let syzygy = kernel_subrep(&cover, &p0);
    let (krep, kinc) = syzygy.induced(quiver, &p0);
    let gens1 = top_generators(quiver, &krep);
    let gens1_in_p0: Vec<(usize, Vec<F>)> = gens1
        .iter()
        .map(|(v, g)| (*v, kinc.blocks[*v].apply(g)))
        .collect();
    let (p1_vertices, p1, syzygy_map) = projective_cover_onto(pi, &p0, &gens1_in_p0);

    // matrix elements: the image of the beta-th generator decomposed into
    // the P0 summands, each an element of e_{i_beta} Pi e_{j_gamma}
    let mut matrix_elts = Vec::with_capacity(p1_vertices.len());
    for (beta, (_, g)) in gens1_in_p0.iter().enumerate() {
        let vb = p1_vertices[beta];
        let mut row = Vec::with_capacity(p0_vertices.len());
        let mut offset = 0;
        for &jg in &p0_vertices {
            let slice = pi.hom_slice(vb, jg);
            let mut elt = vec![F::zero(); pi.dim()];
            for (k, &bid) in slice.iter().enumerate() {
                elt[bid] = g[offset + k].clone();
            }
            offset += slice.len();
            row.push(elt);
        }
        matrix_elts.push(row);
    }

    Presentation {
        p0_vertices,
        p1_vertices,
        p0,
        p1,
        cover,
        syzygy_map,
        matrix_elts,
        syzygy,
    }
}

/// `dim Ext^1(X, Y)` via `Hom(K, Y)` modulo restrictions of `Hom(P0, Y)`.
pub fn ext1_dim<F: Scalar>(pi: &PiAlgebra<F>, x: &ModuleRep<F>, y: &ModuleRep<F>) -> usize {
    ext1_with_witness(pi, x, y).0
}

/// Witness of a nonzero Ext class: the presentation of X, the syzygy rep,
/// and a hom `K -> Y` not factoring through the projective cover.
pub type ExtWitness<F> = (Presentation<F>, ModuleRep<F>, RepHom<F>);

/// As `ext1_dim`, also returning a witness when the dimension is > 0.
pub fn ext1_with_witness<F: Scalar>(
    pi: &PiAlgebra<F>,
    x: &ModuleRep<F>,
    y: &ModuleRep<F>,
) -> (usize, Option<ExtWitness<F>>) {
    let quiver = &pi.quiver;
    if x.is_zero() || y.is_zero() {
        return (0, None);
    }
    let pres = presentation(pi, x);
    let (krep, kinc) = pres.syzygy.induced(quiver, &pres.p0);
    let homs_ky = hom_basis(quiver, &krep, y);
    if homs_ky.is_empty() {
        return (0, None);
    }
    // restrictions of Hom(P0, Y) along K -> P0; Hom(Pi e_v, Y) = Y_v
    let mut restricted: Vec<Vec<F>> = Vec::new();
    for (k, &v) in pres.p0_vertices.iter().enumerate() {
        for bi in 0..y.dims[v] {
            let mut gen = vec![F::zero(); y.dims[v]];
            gen[bi] = F::one();
            let h = hom_from_projective(pi, v, y, &gen);
            let mut blocks = Vec::with_capacity(quiver.vertex_count());
            for j in 0..quiver.vertex_count() {
                let mut out = Matrix::zero(y.dims[j], pres.p0.dims[j]);
                let mut col = 0;
                for (k2, &v2) in pres.p0_vertices.iter().enumerate() {
                    let w = pi.hom_slice(j, v2).len();
                    if k2 == k {
                        for jj in 0..w {
                            for i in 0..y.dims[j] {
                                out[(i, col + jj)] = h.blocks[j][(i, jj)].clone();
                            }
                        }
                    }
                    col += w;
                }
                blocks.push(out);
            }
            let p0_to_y = RepHom { blocks };
            restricted.push(p0_to_y.compose(&kinc).flat());
        }
    }
    let amb = homs_ky[0].flat().len();
    if amb == 0 {
        return (0, None);
    }
    let image = Subspace::from_spanning(amb, &restricted);
    let mut span = image.clone();
    let mut witness = None;
    for h in &homs_ky {
        let f = h.flat();
        if witness.is_none() && !image.contains(&f) {
            witness = Some(h.clone());
        }
        span.insert(&f);
    }
    let dim = span.dim() - image.dim();
    let w = witness.map(|h| (pres, krep, h));
    (dim, w)
}

/// The middle term of an extension `0 -> Y -> E -> X -> 0` built by pushout
/// of the syzygy inclusion along a cocycle `K -> Y`.
fn pushout_middle<F: Scalar>(
    pi: &PiAlgebra<F>,
    x: &ModuleRep<F>,
    y: &ModuleRep<F>,
    pres: &Presentation<F>,
    krep: &ModuleRep<F>,
    xi: &RepHom<F>,
) -> ModuleRep<F> {
    let quiver = &pi.quiver;
    let (_, kinc) = pres.syzygy.induced(quiver, &pres.p0);
    // E = (Y + P0) / {(xi(k), -k) : k in K}
    let sum = ModuleRep::direct_sum(quiver, &[y, &pres.p0]);
    let mut seeds: Vec<Vec<Vec<F>>> = vec![Vec::new(); quiver.vertex_count()];
    for v in 0..quiver.vertex_count() {
        for j in 0..krep.dims[v] {
            let mut e = vec![F::zero(); krep.dims[v]];
            e[j] = F::one();
            let top = xi.blocks[v].apply(&e);
            let bot = kinc.blocks[v].apply(&e);
            let mut vec = Vec::with_capacity(sum.dims[v]);
            vec.extend(top);
            vec.extend(bot.into_iter().map(|c| -c));
            seeds[v].push(vec);
        }
    }
    // the graph is a submodule already; `generated` just echelonizes it
    let graph = SubRep::generated(quiver, &sum, &seeds);
    debug_assert_eq!(graph.total_dim(), krep.total_dim());
    let (e, _) = graph.quotient(quiver, &sum);
    debug_assert_eq!(e.total_dim(), x.total_dim() + y.total_dim());
    debug_assert!(e.validate(quiver));
    e
}

/// The middle term of `0 -> Y -> E -> X -> 0` for one nonzero class.
pub fn extension_middle<F: Scalar>(
    pi: &PiAlgebra<F>,
    x: &ModuleRep<F>,
    y: &ModuleRep<F>,
) -> Option<ModuleRep<F>> {
    let (dim, witness) = ext1_with_witness(pi, x, y);
    if dim == 0 {
        return None;
    }
    let (pres, krep, xi) = witness.expect("nonzero ext has a witness");
    Some(pushout_middle(pi, x, y, &pres, &krep, &xi))
}

/// Middle terms of `0 -> Y -> E -> X -> 0`, one per basis cocycle of
/// `Ext^1(X, Y)`.
pub fn extensions<F: Scalar>(
    pi: &PiAlgebra<F>,
    x: &ModuleRep<F>,
    y: &ModuleRep<F>,
) -> Vec<ModuleRep<F>> {
    let quiver = &pi.quiver;
    if x.is_zero() || y.is_zero() {
        return Vec::new();
    }
    let pres = presentation(pi, x);
    let (krep, kinc) = pres.syzygy.induced(quiver, &pres.p0);
    let homs_ky = hom_basis(quiver, &krep, y);
    if homs_ky.is_empty() {
        return Vec::new();
    }
    let mut restricted: Vec<Vec<F>> = Vec::new();
    for (k, &v) in pres.p0_vertices.iter().enumerate() {
        for bi in 0..y.dims[v] {
            let mut gen = vec![F::zero(); y.dims[v]];
            gen[bi] = F::one();
            let h = hom_from_projective(pi, v, y, &gen);
            let mut blocks = Vec::with_capacity(quiver.vertex_count());
            for j in 0..quiver.vertex_count() {
                let mut out = Matrix::zero(y.dims[j], pres.p0.dims[j]);
                let mut col = 0;
                for (k2, &v2) in pres.p0_vertices.iter().enumerate() {
                    let w = pi.hom_slice(j, v2).len();
                    if k2 == k {
                        for jj in 0..w {
                            for i in 0..y.dims[j] {
                                out[(i, col + jj)] = h.blocks[j][(i, jj)].clone();
                            }
                        }
                    }
                    col += w;
                }
                blocks.push(out);
            }
            restricted.push(RepHom { blocks }.compose(&kinc).flat());
        }
    }
    let amb = homs_ky[0].flat().len();
    let image = Subspace::from_spanning(amb, &restricted);
    // pick hom basis vectors that successively enlarge the span: one
    // representative per basis cocycle
    let mut span = image.clone();
    let mut out = Vec::new();
    for h in &homs_ky {
        if span.insert(&h.flat()) {
            out.push(pushout_middle(pi, x, y, &pres, &krep, h));
        }
    }
    out
}

/// Auslander-Reiten translate `tau M = D Tr M` from a minimal presentation.
pub fn tau<F: Scalar>(pi: &PiAlgebra<F>, m: &ModuleRep<F>) -> ModuleRep<F> {
    let quiver = &pi.quiver;
    if m.is_zero() {
        return ModuleRep::zero(quiver);
    }
    let pres = presentation(pi, m);
    if pres.p1_vertices.is_empty() {
        return ModuleRep::zero(quiver); // projective
    }
    let d1_parts: Vec<ModuleRep<F>> = pres
        .p1_vertices
        .iter()
        .map(|&i| dual_right_projective(pi, i))
        .collect();
    let d0_parts: Vec<ModuleRep<F>> = pres
        .p0_vertices
        .iter()
        .map(|&i| dual_right_projective(pi, i))
        .collect();
    let d1 = ModuleRep::direct_sum(quiver, &d1_parts.iter().collect::<Vec<_>>());
    let d0 = ModuleRep::direct_sum(quiver, &d0_parts.iter().collect::<Vec<_>>());
    debug_assert!(d1.validate(quiver) && d0.validate(quiver));

    // connecting map D(f^t): D(P1^t) -> D(P0^t); at vertex j the
    // (gamma, beta) block is the transpose of left multiplication by
    // matrix_elts[beta][gamma]: e_{j_gamma} Pi e_j -> e_{i_beta} Pi e_j
    let blocks: Vec<Matrix<F>> = (0..quiver.vertex_count())
        .map(|j| {
            let col_offsets: Vec<usize> = {
                let mut offs = Vec::new();
                let mut acc = 0;
                for &ib in &pres.p1_vertices {
                    offs.push(acc);
                    acc += pi.hom_slice(ib, j).len();
                }
                offs
            };
            let mut out = Matrix::zero(d0.dims[j], d1.dims[j]);
            let mut row_off = 0;
            for (gamma, &jg) in pres.p0_vertices.iter().enumerate() {
                let to = pi.hom_slice(jg, j);
                for (beta, &ib) in pres.p1_vertices.iter().enumerate() {
                    let from = pi.hom_slice(ib, j);
                    let lx = pi.left_mul_elt(&pres.matrix_elts[beta][gamma]);
                    let pos_from: std::collections::HashMap<usize, usize> =
                        from.iter().enumerate().map(|(k, &b)| (b, k)).collect();
                    // restrict lx to e_{jg} Pi e_j -> e_{ib} Pi e_j
                    for (c, &b) in to.iter().enumerate() {
                        for (&b2, &r2) in pos_from.iter() {
                            let coef = lx[(b2, b)].clone();
                            if !coef.is_zero() {
                                // transposed placement
                                out[(row_off + c, col_offsets[beta] + r2)] = coef;
                            }
                        }
                    }
                }
                row_off += to.len();
            }
            out
        })
        .collect();
    let connecting = RepHom { blocks };
    let ker = kernel_subrep(&connecting, &d1);
    let (tau_m, _) = ker.induced(quiver, &d1);
    debug_assert!(tau_m.validate(quiver));
    tau_m
}

/// `D(e_i Pi)` as a left module: vertex space j is `(e_i Pi e_j)^*`, and the
/// map along an arrow `a` is the transpose of right multiplication by
/// `a.opp` restricted to the slices.
fn dual_right_projective<F: Scalar>(pi: &PiAlgebra<F>, i: usize) -> ModuleRep<F> {
    let quiver = &pi.quiver;
    let dims: Vec<usize> = (0..quiver.vertex_count())
        .map(|j| pi.hom_slice(i, j).len())
        .collect();
    let maps = quiver
        .arrows
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            let aop = quiver.arrows[ai].opp;
            let from = pi.hom_slice(i, a.tgt);
            let to = pi.hom_slice(i, a.src);
            let pos_to: std::collections::HashMap<usize, usize> =
                to.iter().enumerate().map(|(k, &b)| (b, k)).collect();
            // g: e_i Pi e_tgt -> e_i Pi e_src, w -> w * a.opp
            let mut g = Matrix::zero(to.len(), from.len());
            for (j, &b) in from.iter().enumerate() {
                let mut x = vec![F::zero(); pi.dim()];
                x[b] = F::one();
                let img = pi.right_mul_arrow(aop, &x);
                for (bid, c) in img.into_iter().enumerate() {
                    if !c.is_zero() {
                        g[(pos_to[&bid], j)] = c;
                    }
                }
            }
            g.transpose()
        })
        .collect();
    ModuleRep { dims, maps }
}

pub fn tau_minus<F: Scalar>(pi: &PiAlgebra<F>, m: &ModuleRep<F>) -> ModuleRep<F> {
    // tau^- = dual . tau . dual, since the swap anti-automorphism exchanges
    // the two module categories and D Tr becomes Tr D
    let quiver = &pi.quiver;
    tau(pi, &m.dual(quiver)).dual(quiver)
}

pub fn is_tau_rigid<F: Scalar>(pi: &PiAlgebra<F>, m: &ModuleRep<F>) -> bool {
    let t = tau(pi, m);
    t.is_zero() || hom_dim(&pi.quiver, m, &t) == 0
}

pub fn is_tau_minus_rigid<F: Scalar>(pi: &PiAlgebra<F>, m: &ModuleRep<F>) -> bool {
    let t = tau_minus(pi, m);
    t.is_zero() || hom_dim(&pi.quiver, &t, m) == 0
}

/// `m` lies in `Fac n`: the trace of `n` in `m` is all of `m`.
pub fn in_fac<F: Scalar>(quiver: &Quiver, m: &ModuleRep<F>, n: &ModuleRep<F>) -> bool {
    if m.is_zero() {
        return true;
    }
    let homs = hom_basis(quiver, n, m);
    let mut trace: Vec<Subspace<F>> = m.dims.iter().map(|&d| Subspace::zero(d)).collect();
    for h in &homs {
        for v in 0..quiver.vertex_count() {
            for j in 0..n.dims[v] {
                let col: Vec<F> = (0..m.dims[v]).map(|i| h.blocks[v][(i, j)].clone()).collect();
                trace[v].insert(&col);
            }
        }
    }
    trace.iter().zip(&m.dims).all(|(s, &d)| s.dim() == d)
}

/// `m` lies in `Sub n`: the common kernel of all homs `m -> n` is zero.
pub fn in_sub<F: Scalar>(quiver: &Quiver, m: &ModuleRep<F>, n: &ModuleRep<F>) -> bool {
    if m.is_zero() {
        return true;
    }
    let homs = hom_basis(quiver, m, n);
    for v in 0..quiver.vertex_count() {
        if m.dims[v] == 0 {
            continue;
        }
        let mut rows: Vec<Vec<F>> = Vec::new();
        for h in &homs {
            for i in 0..n.dims[v] {
                rows.push(h.blocks[v].row_vec(i));
            }
        }
        let krnl = Matrix::from_rows(rows, m.dims[v]).kernel();
        if krnl.rows > 0 {
            return false;
        }
    }
    true
}

/// Radical of `End(m)` by the trace form (valid in characteristic zero):
/// kernel of the Gram matrix `(f, g) -> trace(f g)`.
pub fn end_radical_basis<F: Scalar>(quiver: &Quiver, m: &ModuleRep<F>) -> Vec<RepHom<F>> {
    let ends = hom_basis(quiver, m, m);
    let k = ends.len();
    if k == 0 {
        return Vec::new();
    }
    let trace = |h: &RepHom<F>| -> F {
        let mut acc = F::zero();
        for b in &h.blocks {
            for i in 0..b.rows.min(b.cols) {
                acc = acc + b[(i, i)].clone();
            }
        }
        acc
    };
    let gram = Matrix::from_fn(k, k, |i, j| trace(&ends[i].compose(&ends[j])));
    let kerm = gram.kernel();
    (0..kerm.rows)
        .map(|r| {
            let coef = kerm.row(r);
            let mut acc = ends[0].zero_like();
            for (i, c) in coef.iter().enumerate() {
                acc = ends[i].scale_add(c, &acc);
            }
            acc
        })
        .collect()
}

/// `X / rad X_{End(X)}`: quotient by the sum of images of radical
/// endomorphisms.
pub fn top_over_end<F: Scalar>(quiver: &Quiver, m: &ModuleRep<F>) -> ModuleRep<F> {
    let rad = end_radical_basis(quiver, m);
    let mut sub = SubRep::zero(m);
    for g in &rad {
        let img = image_subrep(g, m);
        for v in 0..sub.spaces.len() {
            sub.spaces[v] = sub.spaces[v].sum(&img.spaces[v]);
        }
    }
    let (q, _) = sub.quotient(quiver, m);
    q
}

/// `soc X_{End(X)}`: the common kernel of the radical endomorphisms.
pub fn soc_over_end<F: Scalar>(quiver: &Quiver, m: &ModuleRep<F>) -> ModuleRep<F> {
    let rad = end_radical_basis(quiver, m);
    let mut spaces: Vec<Subspace<F>> = m.dims.iter().map(|&d| Subspace::full(d)).collect();
    for g in &rad {
        let ker = kernel_subrep(g, m);
        for v in 0..spaces.len() {
            spaces[v] = intersect(&spaces[v], &ker.spaces[v]);
        }
    }
    let sub = SubRep { spaces };
    let (s, _) = sub.induced(quiver, m);
    s
}

pub fn intersect<F: Scalar>(a: &Subspace<F>, b: &Subspace<F>) -> Subspace<F> {
    let (da, db) = (a.dim(), b.dim());
    if da == 0 || db == 0 {
        return Subspace::zero(a.ambient);
    }
    let mut cols = Matrix::zero(a.ambient, da + db);
    for (j, v) in a.basis_vectors().iter().enumerate() {
        for (i, c) in v.iter().enumerate() {
            cols[(i, j)] = c.clone();
        }
    }
    for (j, v) in b.basis_vectors().iter().enumerate() {
        for (i, c) in v.iter().enumerate() {
            cols[(i, da + j)] = -c.clone();
        }
    }
    let k = cols.kernel();
    let vecs: Vec<Vec<F>> = (0..k.rows)
        .map(|r| {
            let coef = &k.row(r)[..da];
            a.linear_combination(coef)
        })
        .collect();
    Subspace::from_spanning(a.ambient, &vecs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IsoOutcome {
    Isomorphic,
    NotIsomorphic,
}

/// Per-vertex dimension profile of the radical series, a cheap isomorphism
/// invariant that separates modules with equal dimension vectors.
pub fn radical_series_profile<F: Scalar>(quiver: &Quiver, m: &ModuleRep<F>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        let rad = radical(quiver, &cur);
        out.push(rad.spaces.iter().map(|s| s.dim()).collect());
        let (next, _) = rad.induced(quiver, &cur);
        if next.total_dim() == cur.total_dim() {
            break;
        }
        cur = next;
    }
    out
}

/// Per-vertex socle series profile, the dual invariant.
pub fn socle_series_profile<F: Scalar>(quiver: &Quiver, m: &ModuleRep<F>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        let soc = socle(quiver, &cur);
        out.push(soc.spaces.iter().map(|s| s.dim()).collect());
        let (next, _) = soc.quotient(quiver, &cur);
        if next.total_dim() == cur.total_dim() {
            break;
        }
        cur = next;
    }
    out
}

/// Isomorphism test: dimension-vector filter, then a search for an
/// invertible hom (each basis vector, seeded small random combinations,
/// a small deterministic grid). If no invertible hom is found and no
/// invariant separates the modules, the outcome is `Err(IsoUndecided)`
/// rather than a guess.
pub fn is_isomorphic<F: Scalar>(
    quiver: &Quiver,
    m: &ModuleRep<F>,
    n: &ModuleRep<F>,
    seed: u64,
) -> Result<IsoOutcome, RepError> {
    if m.dims != n.dims {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    if m.total_dim() == 0 {
        return Ok(IsoOutcome::Isomorphic);
    }
    if radical_series_profile(quiver, m) != radical_series_profile(quiver, n)
        || socle_series_profile(quiver, m) != socle_series_profile(quiver, n)
    {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    let homs = hom_basis(quiver, m, n);
    if homs.is_empty() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    for h in &homs {
        if h.is_invertible() {
            return Ok(IsoOutcome::Isomorphic);
        }
    }
    let mut rng = SmallRng::new(seed);
    for _ in 0..64 {
        let mut acc = homs[0].zero_like();
        for h in &homs {
            let c = F::from_int(rng.small_int(4));
            acc = h.scale_add(&c, &acc);
        }
        if acc.is_invertible() {
            return Ok(IsoOutcome::Isomorphic);
        }
    }
    if homs.len() <= 4 {
        let vals: Vec<i64> = vec![-2, -1, 0, 1, 2];
        let k = homs.len();
        let mut idx = vec![0usize; k];
        loop {
            let mut acc = homs[0].zero_like();
            for (h, &i) in homs.iter().zip(&idx) {
                acc = h.scale_add(&F::from_int(vals[i]), &acc);
            }
            if acc.is_invertible() {
                return Ok(IsoOutcome::Isomorphic);
            }
            let mut p = 0;
            while p < k {
                idx[p] += 1;
                if idx[p] < vals.len() {
                    break;
                }
                idx[p] = 0;
                p += 1;
            }
            if p == k {
                break;
            }
        }
    }
    // separating invariants certify non-isomorphism
    if end_dim(quiver, m) != end_dim(quiver, n)
        || hom_dim(quiver, m, n) != hom_dim(quiver, n, m)
        || radical(quiver, m).total_dim() != radical(quiver, n).total_dim()
        || socle(quiver, m).total_dim() != socle(quiver, n).total_dim()
    {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    Err(RepError::IsoUndecided)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{CartanType, Family};
    use crate::Q;

    fn pi_a2() -> PiAlgebra<Q> {
        PiAlgebra::build(CartanType::new(Family::A, 2).unwrap()).unwrap()
    }

    fn pi_a3() -> PiAlgebra<Q> {
        PiAlgebra::build(CartanType::new(Family::A, 3).unwrap()).unwrap()
    }

    #[test]
    fn projectives_have_simple_top() {
        for pi in [pi_a2(), pi_a3()] {
            for v in 0..pi.vertex_count() {
                let p = projective_rep(&pi, v);
                assert!(p.validate(&pi.quiver));
                let gens = top_generators(&pi.quiver, &p);
                assert_eq!(gens.len(), 1);
                assert_eq!(gens[0].0, v);
            }
        }
    }

    #[test]
    fn a2_projective_is_string() {
        let pi = pi_a2();
        let p1 = projective_rep(&pi, 0);
        assert_eq!(p1.dims, vec![1, 1]);
        assert_eq!(p1.maps[0].rank() + p1.maps[1].rank(), 1);
        assert!(is_brick(&pi.quiver, &p1));
    }

    #[test]
    fn hom_between_simples() {
        let pi = pi_a2();
        let s1: ModuleRep<Q> = ModuleRep::simple(&pi.quiver, 0);
        let s2 = ModuleRep::simple(&pi.quiver, 1);
        assert_eq!(hom_dim(&pi.quiver, &s1, &s2), 0);
        assert_eq!(end_dim(&pi.quiver, &s1), 1);
    }

    #[test]
    fn ext_between_simples_a2() {
        let pi = pi_a2();
        let s1: ModuleRep<Q> = ModuleRep::simple(&pi.quiver, 0);
        let s2 = ModuleRep::simple(&pi.quiver, 1);
        assert_eq!(ext1_dim(&pi, &s1, &s1), 0);
        assert_eq!(ext1_dim(&pi, &s2, &s2), 0);
        assert_eq!(ext1_dim(&pi, &s1, &s2), 1);
        assert_eq!(ext1_dim(&pi, &s2, &s1), 1);
        // the extension 0 -> S2 -> E -> S1 -> 0 is the string P_1 = 1-over-2
        let e = extension_middle(&pi, &s1, &s2).unwrap();
        let p1 = projective_rep(&pi, 0);
        assert_eq!(
            is_isomorphic(&pi.quiver, &e, &p1, 7).unwrap(),
            IsoOutcome::Isomorphic
        );
    }

    #[test]
    fn tau_of_projectives_vanishes() {
        for pi in [pi_a2(), pi_a3()] {
            for v in 0..pi.vertex_count() {
                let p = projective_rep(&pi, v);
                assert!(tau(&pi, &p).is_zero());
                assert!(is_tau_rigid(&pi, &p));
            }
        }
    }

    #[test]
    fn tau_of_simples_a2_swaps_them() {
        // Pi(A_2) is selfinjective Nakayama with rad^2 = 0: tau S_1 = S_2
        let pi = pi_a2();
        let s1: ModuleRep<Q> = ModuleRep::simple(&pi.quiver, 0);
        let t = tau(&pi, &s1);
        assert_eq!(t.dims, vec![0, 1]);
        assert!(t.validate(&pi.quiver));
        let s2: ModuleRep<Q> = ModuleRep::simple(&pi.quiver, 1);
        assert_eq!(tau(&pi, &s2).dims, vec![1, 0]);
        // and tau^- goes back
        assert_eq!(tau_minus(&pi, &t).dims, s1.dims);
    }

    #[test]
    fn fac_and_sub_basics() {
        let pi = pi_a2();
        let s1: ModuleRep<Q> = ModuleRep::simple(&pi.quiver, 0);
        let p1 = projective_rep(&pi, 0);
        assert!(in_fac(&pi.quiver, &s1, &p1));
        assert!(!in_fac(&pi.quiver, &p1, &s1));
        let z = ModuleRep::zero(&pi.quiver);
        assert!(in_fac(&pi.quiver, &z, &s1));
        let s2 = ModuleRep::simple(&pi.quiver, 1);
        assert!(in_sub(&pi.quiver, &s2, &p1));
        assert!(!in_sub(&pi.quiver, &s1, &p1));
    }

    #[test]
    fn dual_is_involutive_and_flips_strings() {
        let pi = pi_a2();
        let p1 = projective_rep(&pi, 0);
        let d = p1.dual(&pi.quiver);
        assert!(d.validate(&pi.quiver));
        let dd = d.dual(&pi.quiver);
        assert_eq!(
            is_isomorphic(&pi.quiver, &p1, &dd, 3).unwrap(),
            IsoOutcome::Isomorphic
        );
        // dual of the string 1-over-2 is the string 2-over-1
        let p2 = projective_rep(&pi, 1);
        assert_eq!(
            is_isomorphic(&pi.quiver, &d, &p2, 3).unwrap(),
            IsoOutcome::Isomorphic
        );
        for v in 0..2 {
            let s: ModuleRep<Q> = ModuleRep::simple(&pi.quiver, v);
            assert_eq!(
                is_isomorphic(&pi.quiver, &s.dual(&pi.quiver), &s, 3).unwrap(),
                IsoOutcome::Isomorphic
            );
        }
    }

    #[test]
    fn end_of_middle_projective_a3() {
        let pi = pi_a3();
        let p2 = projective_rep(&pi, 1);
        assert_eq!(end_dim(&pi.quiver, &p2), 2);
        let t = top_over_end(&pi.quiver, &p2);
        assert!(!t.is_zero());
        let s2 = ModuleRep::simple(&pi.quiver, 1);
        assert!(in_fac(&pi.quiver, &s2, &t));
    }

    #[test]
    fn simples_not_isomorphic() {
        let pi = pi_a2();
        let s1: ModuleRep<Q> = ModuleRep::simple(&pi.quiver, 0);
        let s2 = ModuleRep::simple(&pi.quiver, 1);
        assert_eq!(
            is_isomorphic(&pi.quiver, &s1, &s2, 1).unwrap(),
            IsoOutcome::NotIsomorphic
        );
        assert_eq!(
            is_isomorphic(&pi.quiver, &s1, &s1, 1).unwrap(),
            IsoOutcome::Isomorphic
        );
    }
}
