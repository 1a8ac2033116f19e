//! Generic finite-lattice machinery: meets and joins over reachability
//! bitsets, join/meet-irreducibles, congruence closure, polygons, the FPoly
//! and SFPoly quivers, the forcing order, arrow labellings, canonical
//! join/meet representations, and the structural checks (congruence
//! uniformity, semidistributivity, polygonality).

use crate::bits::{Bits, UnionFind};
use std::collections::HashMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    NoJoin(usize, usize),
    NoMeet(usize, usize),
    NoMinimum,
    NoMaximum,
    NotPolygonal { lower: usize, upper: usize },
    PolygonTooLarge { bottom: usize, top: usize },
    ForcingComponentWithoutJirr { component: Vec<usize> },
}

impl fmt::Display for LatticeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeError::NoJoin(x, y) => write!(f, "elements {x} and {y} have no unique join"),
            LatticeError::NoMeet(x, y) => write!(f, "elements {x} and {y} have no unique meet"),
            LatticeError::NoMinimum => write!(f, "poset has no unique minimum"),
            LatticeError::NoMaximum => write!(f, "poset has no unique maximum"),
            LatticeError::NotPolygonal { lower, upper } => {
                write!(f, "interval [{lower}, {upper}] is not a polygon")
            }
            LatticeError::PolygonTooLarge { bottom, top } => write!(
                f,
                "polygon [{bottom}, {top}] has chains longer than a hexagon's; \
                 no forcing schematic is defined for it"
            ),
            LatticeError::ForcingComponentWithoutJirr { component } => write!(
                f,
                "FPoly component {component:?} does not contain exactly one j -> j* arrow \
                 (congruence uniformity failure)"
            ),
        }
    }
}

impl std::error::Error for LatticeError {}

/// A Hasse arrow `upper -> lower` (cover arrows point downward, the
/// Hasse-quiver convention used throughout).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HasseArrow {
    pub upper: usize,
    pub lower: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolygonShape {
    Square,
    Hexagon,
    Other,
}

/// An interval whose open part is two disjoint nonempty chains. Chains are
/// listed bottom-up; `left` starts at the smaller cover of `bottom`.
#[derive(Debug, Clone)]
pub struct Polygon {
    pub bottom: usize,
    pub top: usize,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Polygon {
    pub fn shape(&self) -> PolygonShape {
        match (self.left.len(), self.right.len()) {
            (1, 1) => PolygonShape::Square,
            (2, 2) => PolygonShape::Hexagon,
            _ => PolygonShape::Other,
        }
    }
}

/// A lattice congruence as a partition of the element set, in canonical form
/// (each element labelled by the least member of its class).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CongruencePartition {
    pub class_of: Vec<usize>,
}

impl CongruencePartition {
    pub fn discrete(n: usize) -> Self {
        CongruencePartition {
            class_of: (0..n).collect(),
        }
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// `self` refines `other`: every class of `self` lies inside a class of
    /// `other`. In Con(L) this is `self <= other`.
    pub fn refines(&self, other: &CongruencePartition) -> bool {
        let mut image: HashMap<usize, usize> = HashMap::new();
        for i in 0..self.class_of.len() {
            match image.entry(self.class_of[i]) {
                std::collections::hash_map::Entry::Vacant(e) => {
                    e.insert(other.class_of[i]);
                }
                std::collections::hash_map::Entry::Occupied(e) => {
                    if *e.get() != other.class_of[i] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn class_count(&self) -> usize {
        let mut seen: Vec<usize> = self.class_of.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// The set of Hasse arrows contracted by this congruence.
    pub fn contracted_arrows(&self, lat: &FiniteLattice) -> Vec<usize> {
        (0..lat.arrows.len())
            .filter(|&a| self.same(lat.arrows[a].upper, lat.arrows[a].lower))
            .collect()
    }
}

impl fmt::Debug for CongruencePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut classes: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, &c) in self.class_of.iter().enumerate() {
            classes.entry(c).or_default().push(i);
        }
        let mut keys: Vec<_> = classes.keys().copied().collect();
        keys.sort_unstable();
        let mut list = f.debug_list();
        for k in keys {
            list.entry(&classes[&k]);
        }
        list.finish()
    }
}

/// Finite lattice over dense element ids `0..n`. Hasse arrows are exactly
/// the cover relations; `downset[x]` is the principal order ideal of `x`.
pub struct FiniteLattice {
    pub n: usize,
    pub arrows: Vec<HasseArrow>,
    arrow_index: HashMap<(usize, usize), usize>,
    pub up_covers: Vec<Vec<usize>>,
    pub down_covers: Vec<Vec<usize>>,
    pub downset: Vec<Bits>,
    pub upset: Vec<Bits>,
    pub minimum: usize,
    pub maximum: usize,
    join_table: Vec<u32>,
    meet_table: Vec<u32>,
}

impl FiniteLattice {
    /// Build from cover pairs `(upper, lower)`. Fails if any pair of elements
    /// lacks a unique meet or join.
    pub fn build(n: usize, covers: &[(usize, usize)]) -> Result<FiniteLattice, LatticeError> {
        let mut up_covers = vec![Vec::new(); n];
        let mut down_covers = vec![Vec::new(); n];
        for &(u, l) in covers {
            up_covers[l].push(u);
            down_covers[u].push(l);
        }
        for v in up_covers.iter_mut().chain(down_covers.iter_mut()) {
            v.sort_unstable();
            v.dedup();
        }

        // Down-sets by propagation in topological (longest-path) order.
        let mut order: Vec<usize> = (0..n).collect();
        let depth = longest_path_depths(n, &down_covers);
        order.sort_by_key(|&x| depth[x]);
        let mut downset = vec![Bits::new(n); n];
        let mut upset = vec![Bits::new(n); n];
        for &x in &order {
            let mut d = Bits::new(n);
            d.set(x);
            for &c in &down_covers[x] {
                d.or_assign(&downset[c]);
            }
            downset[x] = d;
        }
        for &x in order.iter().rev() {
            let mut u = Bits::new(n);
            u.set(x);
            for &c in &up_covers[x] {
                u.or_assign(&upset[c]);
            }
            upset[x] = u;
        }

        let minimum = (0..n)
            .find(|&x| upset[x].count() == n)
            .ok_or(LatticeError::NoMinimum)?;
        let maximum = (0..n)
            .find(|&x| downset[x].count() == n)
            .ok_or(LatticeError::NoMaximum)?;

        let mut arrows: Vec<HasseArrow> = covers
            .iter()
            .map(|&(u, l)| HasseArrow { upper: u, lower: l })
            .collect();
        arrows.sort_by_key(|a| (a.upper, a.lower));
        arrows.dedup();
        let arrow_index = arrows
            .iter()
            .enumerate()
            .map(|(i, a)| ((a.upper, a.lower), i))
            .collect();

        let mut lat = FiniteLattice {
            n,
            arrows,
            arrow_index,
            up_covers,
            down_covers,
            downset,
            upset,
            minimum,
            maximum,
            join_table: Vec::new(),
            meet_table: Vec::new(),
        };
        lat.build_tables()?;
        Ok(lat)
    }

    fn build_tables(&mut self) -> Result<(), LatticeError> {
        let n = self.n;
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for x in 0..n {
            for y in x..n {
                let j = self.bound_of(x, y, true)?;
                let m = self.bound_of(x, y, false)?;
                join[x * n + y] = j as u32;
                join[y * n + x] = j as u32;
                meet[x * n + y] = m as u32;
                meet[y * n + x] = m as u32;
            }
        }
        self.join_table = join;
        self.meet_table = meet;
        Ok(())
    }

    fn bound_of(&self, x: usize, y: usize, upper: bool) -> Result<usize, LatticeError> {
        let cand = if upper {
            self.upset[x].and(&self.upset[y])
        } else {
            self.downset[x].and(&self.downset[y])
        };
        // the bound is the unique candidate lying below (resp. above) all others
        let mut best: Option<usize> = None;
        for z in cand.iter() {
            let dominates = if upper {
                cand.is_subset(&self.upset[z])
            } else {
                cand.is_subset(&self.downset[z])
            };
            if dominates {
                best = Some(z);
                break;
            }
        }
        best.ok_or(if upper {
            LatticeError::NoJoin(x, y)
        } else {
            LatticeError::NoMeet(x, y)
        })
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join_table[x * self.n + y] as usize
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet_table[x * self.n + y] as usize
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.downset[y].get(x)
    }

    pub fn arrow_id(&self, upper: usize, lower: usize) -> Option<usize> {
        self.arrow_index.get(&(upper, lower)).copied()
    }

    /// Join-irreducibles with their unique lower cover `j_*`.
    pub fn jirr(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .filter(|&x| self.down_covers[x].len() == 1)
            .map(|x| (x, self.down_covers[x][0]))
            .collect()
    }

    /// Meet-irreducibles with their unique upper cover `m^*`.
    pub fn mirr(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .filter(|&x| self.up_covers[x].len() == 1)
            .map(|x| (x, self.up_covers[x][0]))
            .collect()
    }

    /// Smallest congruence identifying a cover pair, by fixpoint closure:
    /// merge the pair, then saturate `a = b  =>  a v c = b v c, a ^ c = b ^ c`.
    /// This is the brute-force oracle; forcing in production goes through
    /// FPoly instead.
    pub fn con(&self, x: usize, y: usize) -> CongruencePartition {
        let n = self.n;
        let mut uf = UnionFind::new(n);
        let mut pending: Vec<(usize, usize)> = Vec::new();
        if uf.union(x, y) {
            pending.push((x, y));
        }
        while let Some((a, b)) = pending.pop() {
            for c in 0..n {
                let (ja, jb) = (self.join(a, c), self.join(b, c));
                if uf.union(ja, jb) {
                    pending.push((ja, jb));
                }
                let (ma, mb) = (self.meet(a, c), self.meet(b, c));
                if uf.union(ma, mb) {
                    pending.push((ma, mb));
                }
            }
        }
        CongruencePartition {
            class_of: uf.canonical(),
        }
    }

    pub fn con_arrow(&self, arrow: usize) -> CongruencePartition {
        let a = self.arrows[arrow];
        self.con(a.upper, a.lower)
    }

    /// Every polygon, enumerated from bottom elements and cover pairs.
    /// Returns an error if some such interval is not a polygon.
    pub fn polygons(&self) -> Result<Vec<Polygon>, LatticeError> {
        let mut out = Vec::new();
        for x in 0..self.n {
            let ups = &self.up_covers[x];
            for i in 0..ups.len() {
                for j in (i + 1)..ups.len() {
                    out.push(self.polygon_above(x, ups[i], ups[j])?);
                }
            }
        }
        Ok(out)
    }

    fn polygon_above(&self, x: usize, y1: usize, y2: usize) -> Result<Polygon, LatticeError> {
        let top = self.join(y1, y2);
        let interior: Vec<usize> = self
            .downset[top]
            .and(&self.upset[x])
            .iter()
            .filter(|&z| z != x && z != top)
            .collect();
        let not_polygon = || LatticeError::NotPolygonal { lower: x, upper: top };
        // interior must split into two chains, one through y1 and one through y2
        let chain_from = |start: usize| -> Result<Vec<usize>, LatticeError> {
            let mut chain = vec![start];
            loop {
                let cur = *chain.last().unwrap();
                let nexts: Vec<usize> = self.up_covers[cur]
                    .iter()
                    .copied()
                    .filter(|&u| u != top && self.leq(u, top))
                    .collect();
                match nexts.len() {
                    0 => return Ok(chain),
                    1 => chain.push(nexts[0]),
                    _ => return Err(not_polygon()),
                }
            }
        };
        let left = chain_from(y1.min(y2))?;
        let right = chain_from(y1.max(y2))?;
        if left.len() + right.len() != interior.len() {
            return Err(not_polygon());
        }
        for &z in left.iter().chain(&right) {
            if !interior.contains(&z) {
                return Err(not_polygon());
            }
        }
        // chains must actually reach the top
        for chain in [&left, &right] {
            let last = *chain.last().unwrap();
            if !self.up_covers[last].contains(&top) {
                return Err(not_polygon());
            }
        }
        Ok(Polygon {
            bottom: x,
            top,
            left,
            right,
        })
    }

    /// Polygonality: both cover conditions of the definition.
    pub fn check_polygonal(&self) -> bool {
        for x in 0..self.n {
            let ups = &self.up_covers[x];
            for i in 0..ups.len() {
                for j in (i + 1)..ups.len() {
                    if self.polygon_above(x, ups[i], ups[j]).is_err() {
                        return false;
                    }
                }
            }
            let downs = &self.down_covers[x];
            for i in 0..downs.len() {
                for j in (i + 1)..downs.len() {
                    let bot = self.meet(downs[i], downs[j]);
                    // dual polygon: open interval (bot, x) must be two chains;
                    // reuse the upward scan from bot
                    let mut found = false;
                    for a in 0..self.up_covers[bot].len() {
                        for b in (a + 1)..self.up_covers[bot].len() {
                            let (y1, y2) =
                                (self.up_covers[bot][a], self.up_covers[bot][b]);
                            if self.join(y1, y2) == x {
                                if let Ok(p) = self.polygon_above(bot, y1, y2) {
                                    if p.top == x {
                                        found = true;
                                    }
                                }
                            }
                        }
                    }
                    if !found {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The arrows of FPoly(L) out of the arrows of one polygon. Bottom arrows
    /// point to the opposite top arrow and all side arrows; dually for top
    /// arrows. Polygons bigger than hexagons are rejected.
    fn fpoly_arrows_of(
        &self,
        p: &Polygon,
        strong: bool,
    ) -> Result<Vec<(usize, usize)>, LatticeError> {
        if matches!(p.shape(), PolygonShape::Other) {
            return Err(LatticeError::PolygonTooLarge {
                bottom: p.bottom,
                top: p.top,
            });
        }
        let aid = |u: usize, l: usize| self.arrow_id(u, l).expect("cover arrow exists");
        let chain_arrows = |chain: &[usize]| -> Vec<usize> {
            // arrows of a chain, bottom-up: y1 -> x, y2 -> y1, .., top -> yk
            let mut ids = vec![aid(chain[0], p.bottom)];
            for w in chain.windows(2) {
                ids.push(aid(w[1], w[0]));
            }
            ids.push(aid(p.top, *chain.last().unwrap()));
            ids
        };
        let lc = chain_arrows(&p.left);
        let rc = chain_arrows(&p.right);
        let (lb, lt) = (lc[0], *lc.last().unwrap());
        let (rb, rt) = (rc[0], *rc.last().unwrap());
        let sides: Vec<usize> = lc[1..lc.len() - 1]
            .iter()
            .chain(&rc[1..rc.len() - 1])
            .copied()
            .collect();
        let mut out = vec![(lb, rt), (rt, lb), (rb, lt), (lt, rb)];
        if !strong {
            for &s in &sides {
                out.push((lb, s));
                out.push((rb, s));
                out.push((lt, s));
                out.push((rt, s));
            }
        }
        Ok(out)
    }

    /// FPoly(L): quiver on Hasse arrows, adjacency lists by arrow id.
    pub fn fpoly(&self) -> Result<Vec<Vec<usize>>, LatticeError> {
        self.poly_quiver(false)
    }

    /// SFPoly(L): only the bottom <-> opposite-top pairs.
    pub fn sfpoly(&self) -> Result<Vec<Vec<usize>>, LatticeError> {
        self.poly_quiver(true)
    }

    fn poly_quiver(&self, strong: bool) -> Result<Vec<Vec<usize>>, LatticeError> {
        let mut adj = vec![Vec::new(); self.arrows.len()];
        for p in self.polygons()? {
            for (a, b) in self.fpoly_arrows_of(&p, strong)? {
                adj[a].push(b);
            }
        }
        for v in &mut adj {
            v.sort_unstable();
            v.dedup();
        }
        Ok(adj)
    }

    /// Join-irreducible and meet-irreducible labels per Hasse arrow:
    /// `j = meet{z : z <= x, z !<= y}` and `m = join{z : z >= y, z !>= x}`.
    pub fn arrow_labels(&self) -> Vec<(usize, usize)> {
        self.arrows
            .iter()
            .map(|a| {
                let jset = self.downset[a.upper].and_not(&self.downset[a.lower]);
                let j = jset
                    .iter()
                    .fold(None, |acc: Option<usize>, z| {
                        Some(acc.map_or(z, |m| self.meet(m, z)))
                    })
                    .expect("nonempty: x itself qualifies");
                let mset = self.upset[a.lower].and_not(&self.upset[a.upper]);
                let m = mset
                    .iter()
                    .fold(None, |acc: Option<usize>, z| {
                        Some(acc.map_or(z, |x| self.join(x, z)))
                    })
                    .expect("nonempty: y itself qualifies");
                (j, m)
            })
            .collect()
    }

    /// Canonical join representation: the join-irreducible labels on arrows
    /// starting at `x` (downward).
    pub fn canonical_join_rep(&self, x: usize, labels: &[(usize, usize)]) -> Vec<usize> {
        let mut reps: Vec<usize> = self.down_covers[x]
            .iter()
            .map(|&y| labels[self.arrow_id(x, y).unwrap()].0)
            .collect();
        reps.sort_unstable();
        reps
    }

    /// Canonical meet representation: meet-irreducible labels on arrows
    /// ending at `x` (coming from above).
    pub fn canonical_meet_rep(&self, x: usize, labels: &[(usize, usize)]) -> Vec<usize> {
        let mut reps: Vec<usize> = self.up_covers[x]
            .iter()
            .map(|&u| labels[self.arrow_id(u, x).unwrap()].1)
            .collect();
        reps.sort_unstable();
        reps
    }

    /// Congruence uniformity, verified from the definition via the closure
    /// oracle: `j -> con(j, j*)` and `m -> con(m^*, m)` are injective.
    pub fn check_congruence_uniform(&self) -> bool {
        let jirr = self.jirr();
        let jcons: Vec<CongruencePartition> =
            jirr.iter().map(|&(j, js)| self.con(j, js)).collect();
        for i in 0..jcons.len() {
            for k in (i + 1)..jcons.len() {
                if jcons[i] == jcons[k] {
                    return false;
                }
            }
        }
        let mirr = self.mirr();
        let mcons: Vec<CongruencePartition> =
            mirr.iter().map(|&(m, ms)| self.con(ms, m)).collect();
        for i in 0..mcons.len() {
            for k in (i + 1)..mcons.len() {
                if mcons[i] == mcons[k] {
                    return false;
                }
            }
        }
        true
    }

    /// Semidistributivity by direct enumeration of both laws.
    pub fn check_semidistributive(&self) -> bool {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.join(x, y) == self.join(x, z)
                        && self.join(x, self.meet(y, z)) != self.join(x, y)
                    {
                        return false;
                    }
                    if self.meet(x, y) == self.meet(x, z)
                        && self.meet(x, self.join(y, z)) != self.meet(x, y)
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The forcing order on join-irreducibles via the strongly connected
    /// components of FPoly. Every component must contain exactly one arrow of
    /// the form `j -> j_*`.
    pub fn forcing_poset(&self) -> Result<ForcingPoset, LatticeError> {
        let adj = self.fpoly()?;
        let comp_of = scc(&adj);
        let ncomp = comp_of.iter().copied().max().map_or(0, |m| m + 1);

        let jirr = self.jirr();
        let mut jirr_arrow_in_comp: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
        for &(j, js) in &jirr {
            let a = self.arrow_id(j, js).unwrap();
            jirr_arrow_in_comp[comp_of[a]].push(j);
        }
        let mut comp_jirr = vec![usize::MAX; ncomp];
        for (c, js) in jirr_arrow_in_comp.iter().enumerate() {
            match js.as_slice() {
                [j] => comp_jirr[c] = *j,
                _ => {
                    let members: Vec<usize> =
                        (0..adj.len()).filter(|&a| comp_of[a] == c).collect();
                    return Err(LatticeError::ForcingComponentWithoutJirr {
                        component: members,
                    });
                }
            }
        }

        // reachability between components (condensation is a DAG)
        let mut comp_adj: Vec<Vec<usize>> = vec![Vec::new(); ncomp];
        for (a, outs) in adj.iter().enumerate() {
            for &b in outs {
                if comp_of[a] != comp_of[b] {
                    comp_adj[comp_of[a]].push(comp_of[b]);
                }
            }
        }
        let mut reach: Vec<Bits> = (0..ncomp)
            .map(|c| {
                let mut b = Bits::new(ncomp);
                b.set(c);
                b
            })
            .collect();
        // iterate to fixpoint; component counts are small
        let mut changed = true;
        while changed {
            changed = false;
            for c in 0..ncomp {
                let mut acc = reach[c].clone();
                for &d in &comp_adj[c] {
                    acc.or_assign(&reach[d]);
                }
                if acc != reach[c] {
                    reach[c] = acc;
                    changed = true;
                }
            }
        }

        Ok(ForcingPoset {
            jirr_elements: jirr.iter().map(|&(j, _)| j).collect(),
            comp_of_arrow: comp_of,
            comp_jirr,
            reach,
        })
    }
}

/// The forcing order: vertices are join-irreducible elements, one per
/// strongly connected component of FPoly; `j >= j'` iff the component of
/// `j -> j_*` reaches that of `j' -> j'_*`.
pub struct ForcingPoset {
    pub jirr_elements: Vec<usize>,
    pub comp_of_arrow: Vec<usize>,
    pub comp_jirr: Vec<usize>,
    reach: Vec<Bits>,
}

impl ForcingPoset {
    fn comp_of_jirr(&self, j: usize) -> usize {
        self.comp_jirr
            .iter()
            .position(|&x| x == j)
            .expect("join-irreducible element")
    }

    /// `j` forces `j2`, i.e. `con(j, j_*) >= con(j2, j2_*)`.
    pub fn forces(&self, j: usize, j2: usize) -> bool {
        let (c, d) = (self.comp_of_jirr(j), self.comp_of_jirr(j2));
        self.reach[c].get(d)
    }

    pub fn len(&self) -> usize {
        self.jirr_elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jirr_elements.is_empty()
    }

    /// Hasse cover pairs `(greater, smaller)` of the forcing order.
    pub fn hasse_pairs(&self) -> Vec<(usize, usize)> {
        let js = &self.jirr_elements;
        let mut pairs = Vec::new();
        for &a in js {
            for &b in js {
                if a != b && self.forces(a, b) && !self.forces(b, a) {
                    let strictly_between = js.iter().any(|&c| {
                        c != a
                            && c != b
                            && self.forces(a, c)
                            && !self.forces(c, a)
                            && self.forces(c, b)
                            && !self.forces(b, c)
                    });
                    if !strictly_between {
                        pairs.push((a, b));
                    }
                }
            }
        }
        pairs.sort_unstable();
        pairs
    }
}

fn longest_path_depths(n: usize, down_covers: &[Vec<usize>]) -> Vec<usize> {
    let mut depth = vec![usize::MAX; n];
    fn rec(x: usize, down: &[Vec<usize>], depth: &mut Vec<usize>) -> usize {
        if depth[x] != usize::MAX {
            return depth[x];
        }
        let d = down[x]
            .iter()
            .map(|&c| rec(c, down, depth) + 1)
            .max()
            .unwrap_or(0);
        depth[x] = d;
        d
    }
    for x in 0..n {
        rec(x, down_covers, &mut depth);
    }
    depth
}

/// Tarjan strongly connected components; returns the component id per vertex.
pub fn scc(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut comp = vec![usize::MAX; n];
    let mut counter = 0usize;
    let mut ncomp = 0usize;

    // iterative Tarjan to avoid deep recursion
    enum Frame {
        Enter(usize),
        Resume(usize, usize),
    }
    for start in 0..n {
        if index[start] != usize::MAX {
            continue;
        }
        let mut frames = vec![Frame::Enter(start)];
        while let Some(frame) = frames.pop() {
            match frame {
                Frame::Enter(v) => {
                    index[v] = counter;
                    low[v] = counter;
                    counter += 1;
                    stack.push(v);
                    on_stack[v] = true;
                    frames.push(Frame::Resume(v, 0));
                }
                Frame::Resume(v, mut i) => {
                    let mut descended = false;
                    while i < adj[v].len() {
                        let w = adj[v][i];
                        i += 1;
                        if index[w] == usize::MAX {
                            frames.push(Frame::Resume(v, i));
                            frames.push(Frame::Enter(w));
                            descended = true;
                            break;
                        } else if on_stack[w] {
                            low[v] = low[v].min(index[w]);
                        }
                    }
                    if descended {
                        continue;
                    }
                    if low[v] == index[v] {
                        loop {
                            let w = stack.pop().unwrap();
                            on_stack[w] = false;
                            comp[w] = ncomp;
                            if w == v {
                                break;
                            }
                        }
                        ncomp += 1;
                    }
                    if let Some(Frame::Resume(p, _)) = frames.last() {
                        let p = *p;
                        low[p] = low[p].min(low[v]);
                    }
                }
            }
        }
    }
    comp
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 2-chain
    fn chain2() -> FiniteLattice {
        FiniteLattice::build(2, &[(1, 0)]).unwrap()
    }

    /// Boolean square: 0 < {1,2} < 3
    fn square() -> FiniteLattice {
        FiniteLattice::build(4, &[(1, 0), (2, 0), (3, 1), (3, 2)]).unwrap()
    }

    /// pentagon N5: 0 < 1 < 2 < 4, 0 < 3 < 4
    fn n5() -> FiniteLattice {
        FiniteLattice::build(5, &[(1, 0), (2, 1), (4, 2), (3, 0), (4, 3)]).unwrap()
    }

    #[test]
    fn chain_basics() {
        let l = chain2();
        assert_eq!(l.jirr().len(), 1);
        assert_eq!(l.mirr().len(), 1);
        assert_eq!(l.join(0, 1), 1);
        assert_eq!(l.meet(0, 1), 0);
        let f = l.forcing_poset().unwrap();
        assert_eq!(f.len(), 1);
    }

    #[test]
    fn square_polygon_and_con() {
        let l = square();
        let polys = l.polygons().unwrap();
        assert_eq!(polys.len(), 1);
        assert_eq!(polys[0].shape(), PolygonShape::Square);
        assert!(l.check_polygonal());
        // con of a top arrow also identifies the opposite bottom pair
        let con = l.con(3, 1);
        assert!(con.same(2, 0));
        assert!(!con.same(1, 0));
        assert_eq!(l.con(2, 2), CongruencePartition::discrete(4));
    }

    /// diamond M3: 0 < {1,2,3} < 4
    fn m3() -> FiniteLattice {
        FiniteLattice::build(5, &[(1, 0), (2, 0), (3, 0), (4, 1), (4, 2), (4, 3)]).unwrap()
    }

    #[test]
    fn semidistributivity_check() {
        // the pentagon satisfies both semidistributive laws; the diamond
        // fails them
        assert!(n5().check_semidistributive());
        assert!(!m3().check_semidistributive());
        assert!(square().check_semidistributive());
    }

    #[test]
    fn square_fpoly_matches_schematic() {
        let l = square();
        // arrows sorted by (upper, lower): 0:(1,0) 1:(2,0) 2:(3,1) 3:(3,2)
        let f = l.fpoly().unwrap();
        // a=3->1 opposite d=2->0; b=1->0 opposite c=3->2
        assert_eq!(f[l.arrow_id(3, 1).unwrap()], vec![l.arrow_id(2, 0).unwrap()]);
        assert_eq!(f[l.arrow_id(2, 0).unwrap()], vec![l.arrow_id(3, 1).unwrap()]);
        let s = l.sfpoly().unwrap();
        assert_eq!(s, f);
    }

    #[test]
    fn join_table_agrees_with_bruteforce() {
        let l = n5();
        for x in 0..5 {
            for y in 0..5 {
                // brute force: unique minimal common upper bound
                let ubs: Vec<usize> = (0..5)
                    .filter(|&z| l.leq(x, z) && l.leq(y, z))
                    .collect();
                let mins: Vec<usize> = ubs
                    .iter()
                    .copied()
                    .filter(|&z| ubs.iter().all(|&w| l.leq(z, w) || !l.leq(w, z)))
                    .filter(|&z| ubs.iter().all(|&w| !l.leq(w, z) || w == z))
                    .collect();
                assert_eq!(mins, vec![l.join(x, y)]);
            }
        }
    }
}
