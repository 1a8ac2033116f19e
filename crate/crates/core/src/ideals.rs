//! The ideal calculus of the preprojective algebra: the two-sided ideals
//! `I_i = Pi (1 - e_i) Pi`, their products `I(w)` over reduced words, the
//! layer modules attached to Hasse arrows of weak order, the irreducible
//! module maps `J(j) = (Pi/I(j)) e_i` and `M(m) = I(m) e_i`, stone reduction
//! to a simple, and the doubleton extension order.
//!
//! Everything is bundled in a [`Calculus`] that owns the enumerated group,
//! the weak-order lattice, and the algebra, and memoizes `I(w)` per element
//! and layers per arrow.

use crate::lattice::{FiniteLattice, LatticeError};
use crate::linalg::Subspace;
use crate::pi::PiAlgebra;
use crate::rep::{
    self, ext1_dim, extension_middle, hom_dim, image_subrep, is_isomorphic, presentation,
    IsoOutcome, ModuleRep, SubRep,
};
use crate::scalar::Scalar;
use crate::weyl::{CartanType, JirrClass, WeylError, WeylGroup};
use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

#[derive(Debug)]
pub enum CalculusError {
    Weyl(WeylError),
    Lattice(LatticeError),
    NotReducedWord(Vec<i32>),
    NotJoinIrreducible(usize),
    NotMeetIrreducible(usize),
    StoneReductionDiverged { steps: usize },
    IsoUndecided,
}

impl fmt::Display for CalculusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CalculusError::Weyl(e) => write!(f, "{e}"),
            CalculusError::Lattice(e) => write!(f, "{e}"),
            CalculusError::NotReducedWord(w) => {
                write!(f, "word {w:?} is not reduced: an ideal step failed to shrink")
            }
            CalculusError::NotJoinIrreducible(e) => {
                write!(f, "element {e} is not join-irreducible")
            }
            CalculusError::NotMeetIrreducible(e) => {
                write!(f, "element {e} is not meet-irreducible")
            }
            CalculusError::StoneReductionDiverged { steps } => {
                write!(f, "stone reduction did not reach a simple within {steps} steps")
            }
            CalculusError::IsoUndecided => write!(f, "{}", rep::RepError::IsoUndecided),
        }
    }
}

impl std::error::Error for CalculusError {}

impl From<WeylError> for CalculusError {
    fn from(e: WeylError) -> Self {
        CalculusError::Weyl(e)
    }
}

impl From<LatticeError> for CalculusError {
    fn from(e: LatticeError) -> Self {
        CalculusError::Lattice(e)
    }
}

/// Build the weak-order lattice of an enumerated group: arrows `w s_i -> w`
/// for every right descent.
pub fn weak_order_lattice(group: &WeylGroup) -> Result<FiniteLattice, LatticeError> {
    let mut covers = Vec::new();
    for e in 0..group.order() {
        for k in 0..group.simple_labels.len() {
            let f = group.right_mul[e][k];
            if group.lengths[f] < group.lengths[e] {
                covers.push((e, f));
            }
        }
    }
    FiniteLattice::build(group.order(), &covers)
}

/// Layer isomorphism classes: the class representatives and the class
/// index of every Hasse arrow.
pub type LayerClasses<F> = (Vec<Rc<ModuleRep<F>>>, Vec<usize>);

pub struct Calculus<F> {
    pub group: WeylGroup,
    pub lattice: FiniteLattice,
    pub pi: PiAlgebra<F>,
    pub iso_seed: u64,
    ideal_cache: RefCell<Vec<Option<Rc<Subspace<F>>>>>,
    layer_cache: RefCell<HashMap<usize, Rc<ModuleRep<F>>>>,
    ideal_rep_cache: RefCell<Vec<Option<Rc<ModuleRep<F>>>>>,
    quot_rep_cache: RefCell<Vec<Option<Rc<ModuleRep<F>>>>>,
}

impl<F: Scalar> Calculus<F> {
    pub fn new(cartan: CartanType) -> Result<Calculus<F>, CalculusError> {
        let group = WeylGroup::enumerate(cartan)?;
        let lattice = weak_order_lattice(&group)?;
        let pi = PiAlgebra::build(cartan)?;
        let n = group.order();
        Ok(Calculus {
            group,
            lattice,
            pi,
            iso_seed: 0xC0FFEE,
            ideal_cache: RefCell::new(vec![None; n]),
            layer_cache: RefCell::new(HashMap::new()),
            ideal_rep_cache: RefCell::new(vec![None; n]),
            quot_rep_cache: RefCell::new(vec![None; n]),
        })
    }

    /// Vertex index of a simple-reflection label (they share the label set).
    pub fn vertex_of_label(&self, label: i32) -> usize {
        self.pi
            .quiver
            .vertex_index(label)
            .expect("simple labels match quiver vertices")
    }

    /// The simple-reflection label turning `lower` into `upper`:
    /// `upper = lower * s_label`.
    pub fn arrow_gen(&self, arrow: usize) -> i32 {
        let a = self.lattice.arrows[arrow];
        for (k, &label) in self.group.simple_labels.iter().enumerate() {
            if self.group.right_mul[a.lower][k] == a.upper {
                return label;
            }
        }
        unreachable!("cover pairs differ by a simple reflection")
    }

    /// One ideal step: `N -> I_i N`, the left submodule generated by
    /// `(1 - e_i) N`, closed under left multiplication by arrows.
    pub fn ideal_apply(&self, label: i32, n: &Subspace<F>) -> Subspace<F> {
        let v = self.vertex_of_label(label);
        let dim = self.pi.dim();
        let mut out: Subspace<F> = Subspace::zero(dim);
        let mut work: Vec<Vec<F>> = Vec::new();
        for b in n.basis_vectors() {
            let mut proj = b.clone();
            for (k, c) in proj.iter_mut().enumerate() {
                if self.pi.basis[k].src == v {
                    *c = F::zero();
                }
            }
            if out.insert(&proj) {
                work.push(proj);
            }
        }
        while let Some(vec) = work.pop() {
            for a in 0..self.pi.quiver.arrows.len() {
                let img = self.pi.left_mul_arrow(a, &vec);
                if out.insert(&img) {
                    work.push(img);
                }
            }
        }
        out
    }

    /// `I(w)` for the element with the given id, memoized; computed by
    /// peeling left descents: `I(s_i v) = I_i I(v)`.
    pub fn ideal(&self, w: usize) -> Rc<Subspace<F>> {
        if let Some(s) = &self.ideal_cache.borrow()[w] {
            return Rc::clone(s);
        }
        let result = if self.group.lengths[w] == 0 {
            Rc::new(Subspace::full(self.pi.dim()))
        } else {
            let elt = &self.group.elements[w];
            // smallest left-descent label
            let (label, smaller) = self
                .group
                .cartan
                .simple_labels()
                .into_iter()
                .find_map(|l| {
                    let s = crate::weyl::WeylElement::simple_reflection(self.group.cartan, l)
                        .expect("valid label");
                    let prod = s.multiply(elt).expect("same type");
                    if prod.length() < elt.length() {
                        Some((l, self.group.id_of(&prod).expect("group element")))
                    } else {
                        None
                    }
                })
                .expect("non-identity element has a left descent");
            let sub = self.ideal(smaller);
            Rc::new(self.ideal_apply(label, &sub))
        };
        self.ideal_cache.borrow_mut()[w] = Some(Rc::clone(&result));
        result
    }

    /// Evaluate `I_{i_1} ... I_{i_k}` along an explicit word, right to left,
    /// failing if some step does not strictly decrease the dimension (which
    /// happens exactly when the word is not reduced).
    pub fn ideal_of_word(&self, letters: &[i32]) -> Result<Subspace<F>, CalculusError> {
        let mut cur = Subspace::full(self.pi.dim());
        for &l in letters.iter().rev() {
            let next = self.ideal_apply(l, &cur);
            if next.dim() >= cur.dim() {
                return Err(CalculusError::NotReducedWord(letters.to_vec()));
            }
            cur = next;
        }
        Ok(cur)
    }

    /// `I(w)` along a given word for `w`: the word must be reduced and must
    /// evaluate to `w`; the result agrees with the memoized ideal.
    pub fn ideal_of(&self, w: usize, letters: &[i32]) -> Result<Subspace<F>, CalculusError> {
        let elt = crate::weyl::WeylElement::evaluate_word(self.group.cartan, letters)?;
        if self.group.id_of(&elt) != Some(w) || letters.len() != self.group.lengths[w] {
            return Err(CalculusError::NotReducedWord(letters.to_vec()));
        }
        let sub = self.ideal_of_word(letters)?;
        debug_assert_eq!(&sub, self.ideal(w).as_ref());
        Ok(sub)
    }

    /// The layer `L(a) = I(w) / I(w s_i)` of a Hasse arrow `w s_i -> w`,
    /// realized on the `e_i` slice; memoized per arrow.
    pub fn layer(&self, arrow: usize) -> Rc<ModuleRep<F>> {
        if let Some(l) = self.layer_cache.borrow().get(&arrow) {
            return Rc::clone(l);
        }
        let a = self.lattice.arrows[arrow];
        let label = self.arrow_gen(arrow);
        let v = self.vertex_of_label(label);
        let big = self.ideal(a.lower);
        let small = self.ideal(a.upper);
        let rep = self.subquotient_rep(v, &big, Some(&small));
        debug_assert!(!rep.is_zero());
        debug_assert!(rep.validate(&self.pi.quiver));
        let rc = Rc::new(rep);
        self.layer_cache.borrow_mut().insert(arrow, Rc::clone(&rc));
        rc
    }

    /// `J(j) = (Pi / I(j)) e_i` for the unique arrow `j -> j s_i`.
    pub fn jmap(&self, j: usize) -> Result<ModuleRep<F>, CalculusError> {
        let JirrClass::Jirr { descent_type, .. } = self.group.elements[j].classify_jirr() else {
            return Err(CalculusError::NotJoinIrreducible(j));
        };
        let v = self.vertex_of_label(descent_type);
        let full = Subspace::full(self.pi.dim());
        let ij = self.ideal(j);
        Ok(self.subquotient_rep(v, &full, Some(&ij)))
    }

    /// `M(m) = I(m) e_i` for the unique arrow `m s_i -> m`.
    pub fn mmap(&self, m: usize) -> Result<ModuleRep<F>, CalculusError> {
        let Some((ascent, _)) = self.group.elements[m].classify_mirr() else {
            return Err(CalculusError::NotMeetIrreducible(m));
        };
        let v = self.vertex_of_label(ascent);
        let im = self.ideal(m);
        Ok(self.subquotient_rep(v, &im, None))
    }

    /// The representation carried by `(A e_v) / (B e_v)` for nested left
    /// submodules `B <= A <= Pi`.
    pub fn subquotient_rep(
        &self,
        v: usize,
        big: &Subspace<F>,
        small: Option<&Subspace<F>>,
    ) -> ModuleRep<F> {
        let quiver = &self.pi.quiver;
        let p = rep::projective_rep(&self.pi, v);
        let slice_of = |sub: &Subspace<F>| -> SubRep<F> {
            let spaces = (0..quiver.vertex_count())
                .map(|j| {
                    let slice = self.pi.hom_slice(j, v);
                    let mut vecs = Vec::new();
                    for b in sub.basis_vectors() {
                        let vec: Vec<F> = slice.iter().map(|&bid| b[bid].clone()).collect();
                        vecs.push(vec);
                    }
                    Subspace::from_spanning(slice.len(), &vecs)
                })
                .collect();
            SubRep { spaces }
        };
        let suba = slice_of(big);
        let (arep, _) = suba.induced(quiver, &p);
        match small {
            None => arep,
            Some(sm) => {
                let subb = slice_of(sm);
                // express B inside A's coordinates
                let spaces = (0..quiver.vertex_count())
                    .map(|j| {
                        let vecs: Vec<Vec<F>> = subb.spaces[j]
                            .basis_vectors()
                            .iter()
                            .map(|bv| suba.spaces[j].coords(bv))
                            .collect();
                        Subspace::from_spanning(suba.spaces[j].dim(), &vecs)
                    })
                    .collect();
                let (q, _) = SubRep { spaces }.quotient(quiver, &arep);
                q
            }
        }
    }

    /// The regular module `Pi = sum_v Pi e_v` as a representation.
    pub fn regular_rep(&self) -> ModuleRep<F> {
        let parts: Vec<ModuleRep<F>> = (0..self.pi.vertex_count())
            .map(|v| rep::projective_rep(&self.pi, v))
            .collect();
        ModuleRep::direct_sum(&self.pi.quiver, &parts.iter().collect::<Vec<_>>())
    }

    /// `I(w)` as a representation (memoized).
    pub fn ideal_rep(&self, w: usize) -> Rc<ModuleRep<F>> {
        if let Some(r) = &self.ideal_rep_cache.borrow()[w] {
            return Rc::clone(r);
        }
        let ideal = self.ideal(w);
        let parts: Vec<ModuleRep<F>> = (0..self.pi.vertex_count())
            .map(|v| self.subquotient_rep(v, &ideal, None))
            .collect();
        let r = Rc::new(ModuleRep::direct_sum(
            &self.pi.quiver,
            &parts.iter().collect::<Vec<_>>(),
        ));
        self.ideal_rep_cache.borrow_mut()[w] = Some(Rc::clone(&r));
        r
    }

    /// `Pi / I(w)` as a representation (memoized).
    pub fn quotient_rep(&self, w: usize) -> Rc<ModuleRep<F>> {
        if let Some(r) = &self.quot_rep_cache.borrow()[w] {
            return Rc::clone(r);
        }
        let ideal = self.ideal(w);
        let parts: Vec<ModuleRep<F>> = (0..self.pi.vertex_count())
            .map(|v| self.subquotient_rep(v, &Subspace::full(self.pi.dim()), Some(&ideal)))
            .collect();
        let r = Rc::new(ModuleRep::direct_sum(
            &self.pi.quiver,
            &parts.iter().collect::<Vec<_>>(),
        ));
        self.quot_rep_cache.borrow_mut()[w] = Some(Rc::clone(&r));
        r
    }

    /// Membership in the torsion class `Tors(w) = Fac I(w)`.
    pub fn in_tors(&self, m: &ModuleRep<F>, w: usize) -> bool {
        rep::in_fac(&self.pi.quiver, m, &self.ideal_rep(w))
    }

    /// Membership in the torsion-free class `Torf(w) = Sub(Pi/I(w))`.
    pub fn in_torf(&self, m: &ModuleRep<F>, w: usize) -> bool {
        rep::in_sub(&self.pi.quiver, m, &self.quotient_rep(w))
    }

    /// Layers grouped into isomorphism classes: the representatives (first
    /// arrow wins) and the class index of every arrow.
    pub fn layer_classes(&self) -> Result<LayerClasses<F>, CalculusError> {
        let mut reps: Vec<Rc<ModuleRep<F>>> = Vec::new();
        let mut class_of = vec![usize::MAX; self.lattice.arrows.len()];
        for arrow in 0..self.lattice.arrows.len() {
            let l = self.layer(arrow);
            let mut found = None;
            for (k, r) in reps.iter().enumerate() {
                match is_isomorphic(&self.pi.quiver, &l, r, self.iso_seed) {
                    Ok(IsoOutcome::Isomorphic) => {
                        found = Some(k);
                        break;
                    }
                    Ok(IsoOutcome::NotIsomorphic) => {}
                    Err(_) => return Err(CalculusError::IsoUndecided),
                }
            }
            class_of[arrow] = match found {
                Some(k) => k,
                None => {
                    reps.push(Rc::clone(&l));
                    reps.len() - 1
                }
            };
        }
        Ok((reps, class_of))
    }

    /// Greedy stone reduction: repeatedly pick the smallest vertex label
    /// with `Hom(L, S_i) != 0` and replace `L` by `I_i (x) L` until a simple
    /// is reached. Returns the label sequence; errors past `l(w_0)` steps.
    pub fn reduce_stone_to_simple(&self, l: &ModuleRep<F>) -> Result<Vec<i32>, CalculusError> {
        let quiver = &self.pi.quiver;
        let max_steps = self.group.lengths[self.group.longest_id()];
        let mut cur = l.clone();
        let mut seq = Vec::new();
        while cur.total_dim() > 1 {
            if seq.len() >= max_steps {
                return Err(CalculusError::StoneReductionDiverged { steps: seq.len() });
            }
            let rad = rep::radical(quiver, &cur);
            let (vertex, label) = (0..quiver.vertex_count())
                .filter(|&v| cur.dims[v] > rad.spaces[v].dim())
                .map(|v| (v, quiver.labels[v]))
                .min_by_key(|&(_, l)| l)
                .expect("nonzero module has a top");
            cur = self.ideal_tensor(vertex, &cur);
            seq.push(label);
        }
        Ok(seq)
    }

    /// `I_i (x)_Pi M`, the cokernel of `I_i P_1 -> I_i P_0` over a minimal
    /// projective presentation of `M`.
    pub fn ideal_tensor(&self, v: usize, m: &ModuleRep<F>) -> ModuleRep<F> {
        let quiver = &self.pi.quiver;
        let s_id = self
            .group
            .id_of(
                &crate::weyl::WeylElement::simple_reflection(self.group.cartan, quiver.labels[v])
                    .expect("valid label"),
            )
            .expect("simple reflection in group");
        let ii = self.ideal(s_id);
        let pres = presentation(&self.pi, m);
        // I_i P as a subrep of P: per summand, the slice of I_i
        let sub_of = |verts: &[usize], p: &ModuleRep<F>| -> SubRep<F> {
            let mut spaces: Vec<Vec<Vec<F>>> = vec![Vec::new(); quiver.vertex_count()];
            for (j, space) in spaces.iter_mut().enumerate() {
                let mut offset = 0;
                for &pv in verts {
                    let slice = self.pi.hom_slice(j, pv);
                    for b in ii.basis_vectors() {
                        let mut vec = vec![F::zero(); p.dims[j]];
                        let mut nonzero = false;
                        for (k, &bid) in slice.iter().enumerate() {
                            if !b[bid].is_zero() {
                                vec[offset + k] = b[bid].clone();
                                nonzero = true;
                            }
                        }
                        if nonzero {
                            space.push(vec);
                        }
                    }
                    offset += slice.len();
                }
            }
            SubRep {
                spaces: spaces
                    .iter()
                    .zip(&p.dims)
                    .map(|(vecs, &d)| Subspace::from_spanning(d, vecs))
                    .collect(),
            }
        };
        let sub0 = sub_of(&pres.p0_vertices, &pres.p0);
        let sub1 = sub_of(&pres.p1_vertices, &pres.p1);
        let (rep1, inc1) = sub1.induced(quiver, &pres.p1);
        let (rep0, _) = sub0.induced(quiver, &pres.p0);
        // restrict the presentation map to the ideal slices
        let blocks = (0..quiver.vertex_count())
            .map(|j| {
                let big = pres.syzygy_map.blocks[j].mul(&inc1.blocks[j]);
                let mut out = crate::linalg::Matrix::zero(rep0.dims[j], rep1.dims[j]);
                for c in 0..rep1.dims[j] {
                    let col: Vec<F> = (0..big.rows).map(|r| big[(r, c)].clone()).collect();
                    debug_assert!(sub0.spaces[j].contains(&col));
                    for (r, x) in sub0.spaces[j].coords(&col).into_iter().enumerate() {
                        out[(r, c)] = x;
                    }
                }
                out
            })
            .collect();
        let restricted = rep::RepHom { blocks };
        let img = image_subrep(&restricted, &rep0);
        let (coker, _) = img.quotient(quiver, &rep0);
        debug_assert!(coker.validate(quiver));
        coker
    }

    /// Doubleton test for a pair of layer classes: both Ext groups are
    /// one-dimensional and both extension middle terms are again layers.
    /// Returns the class indices of the middle terms `E` (extension of Y by
    /// X) and `F` (extension of X by Y) when the pair is a doubleton.
    pub fn doubleton(
        &self,
        classes: &[Rc<ModuleRep<F>>],
        x: usize,
        y: usize,
    ) -> Result<Option<(usize, usize)>, CalculusError> {
        let (mx, my) = (&classes[x], &classes[y]);
        if ext1_dim(&self.pi, my, mx) != 1 || ext1_dim(&self.pi, mx, my) != 1 {
            return Ok(None);
        }
        // 0 -> X -> E -> Y -> 0 and 0 -> Y -> F -> X -> 0
        let e = extension_middle(&self.pi, my, mx).expect("ext is 1-dimensional");
        let fm = extension_middle(&self.pi, mx, my).expect("ext is 1-dimensional");
        let find = |m: &ModuleRep<F>| -> Result<Option<usize>, CalculusError> {
            for (k, r) in classes.iter().enumerate() {
                match is_isomorphic(&self.pi.quiver, m, r, self.iso_seed) {
                    Ok(IsoOutcome::Isomorphic) => return Ok(Some(k)),
                    Ok(IsoOutcome::NotIsomorphic) => {}
                    Err(_) => return Err(CalculusError::IsoUndecided),
                }
            }
            Ok(None)
        };
        let (ke, kf) = (find(&e)?, find(&fm)?);
        Ok(match (ke, kf) {
            (Some(a), Some(b)) => Some((a, b)),
            _ => None,
        })
    }

    /// The doubleton extension order on layer classes: the transitive
    /// closure of `X > E, X > F, Y > E, Y > F` over all doubletons.
    /// `result[i][j]` iff class i > class j strictly.
    pub fn doubleton_order(
        &self,
        classes: &[Rc<ModuleRep<F>>],
    ) -> Result<Vec<Vec<bool>>, CalculusError> {
        let n = classes.len();
        let mut gt = vec![vec![false; n]; n];
        for x in 0..n {
            for y in (x + 1)..n {
                if let Some((e, fm)) = self.doubleton(classes, x, y)? {
                    for lo in [e, fm] {
                        gt[x][lo] = true;
                        gt[y][lo] = true;
                    }
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                if gt[i][k] {
                    for j in 0..n {
                        if gt[k][j] {
                            gt[i][j] = true;
                        }
                    }
                }
            }
        }
        for (i, row) in gt.iter().enumerate() {
            assert!(!row[i], "doubleton order must be irreflexive");
        }
        Ok(gt)
    }

    /// Euler-form cross-check:
    /// `dim Ext^1(L, L) = 2 dim End(L) - <dim L, dim L>`.
    pub fn euler_cross_check(&self, l: &ModuleRep<F>) -> bool {
        let d = l.dims_i64();
        let lhs = ext1_dim(&self.pi, l, l) as i64;
        let rhs = 2 * rep::end_dim(&self.pi.quiver, l) as i64 - self.pi.euler_form(&d, &d);
        lhs == rhs
    }

    pub fn is_stone(&self, l: &ModuleRep<F>) -> bool {
        rep::is_brick(&self.pi.quiver, l) && ext1_dim(&self.pi, l, l) == 0
    }

    pub fn simple_rep(&self, label: i32) -> ModuleRep<F> {
        ModuleRep::simple(&self.pi.quiver, self.vertex_of_label(label))
    }

    pub fn hom_dim(&self, m: &ModuleRep<F>, n: &ModuleRep<F>) -> usize {
        hom_dim(&self.pi.quiver, m, n)
    }
}

impl Calculus<crate::Q> {
    /// The memoized I(w) table as JSON, keyed by window, for the on-disk
    /// cache.
    pub fn export_ideal_table(&self) -> serde_json::Value {
        let mut entries = Vec::new();
        for w in 0..self.group.order() {
            if self.ideal_cache.borrow()[w].is_some() {
                let ideal = self.ideal(w);
                entries.push(serde_json::json!({
                    "window": self.group.elements[w].window,
                    "ideal": crate::export::json_submodule(self, &ideal),
                }));
            }
        }
        serde_json::json!({"format": 1, "entries": entries})
    }

    /// Warm the I(w) cache from a previously exported table; entries that
    /// fail to parse or belong to unknown windows are ignored.
    pub fn import_ideal_table(&self, table: &serde_json::Value) {
        if table.get("format").and_then(|f| f.as_u64()) != Some(1) {
            return;
        }
        let Some(entries) = table.get("entries").and_then(|e| e.as_array()) else {
            return;
        };
        for entry in entries {
            let Some(window) = entry.get("window").and_then(|w| w.as_array()) else {
                continue;
            };
            let window: Option<Vec<i32>> =
                window.iter().map(|x| x.as_i64().map(|v| v as i32)).collect();
            let Some(window) = window else { continue };
            let Ok(elt) = crate::weyl::WeylElement::from_window(self.group.cartan, window) else {
                continue;
            };
            let Some(id) = self.group.id_of(&elt) else {
                continue;
            };
            let Some(ideal_json) = entry.get("ideal") else {
                continue;
            };
            if let Some(sub) = crate::export::submodule_from_json(self, ideal_json) {
                self.ideal_cache.borrow_mut()[id] = Some(Rc::new(sub));
            }
        }
    }
}
