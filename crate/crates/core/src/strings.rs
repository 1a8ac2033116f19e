//! Non-revisiting walks on the doubled type-A quiver and their string
//! modules, which exhaust the layers in type A, together with the subfactor
//! order on strings.
//!
//! A walk covers an interval of vertices with one orientation choice per
//! edge. The modules are thin (every vertex space is at most a line), so
//! submodules are spanned by subsets of the cell basis and the subfactor
//! relation reduces to oriented subwalk containment.

use crate::linalg::Matrix;
use crate::pi::Quiver;
use crate::rep::ModuleRep;
use crate::scalar::Scalar;
use crate::weyl::{CartanType, Family, WeylError};

/// A walk on consecutive vertices `lo..=hi`; `down[k]` records whether the
/// edge between `lo+k` and `lo+k+1` is oriented from `lo+k` to `lo+k+1`
/// (i.e. the module map points toward the larger vertex).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StringWalk {
    pub lo: i32,
    pub hi: i32,
    pub down: Vec<bool>,
    /// false for the canonical orientation, true for the formal reverse;
    /// both present the same module.
    pub reversed: bool,
}

impl StringWalk {
    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn reverse(&self) -> StringWalk {
        StringWalk {
            lo: self.lo,
            hi: self.hi,
            down: self.down.clone(),
            reversed: !self.reversed,
        }
    }

    /// Walks are identified with their reverses.
    pub fn canonical(&self) -> StringWalk {
        StringWalk {
            reversed: false,
            ..self.clone()
        }
    }
}

/// All non-revisiting walks of `A_n`, one per interval and orientation
/// pattern, up to reversal. Count: `sum_{1<=i<=j<=n} 2^(j-i)`.
pub fn string_walks(cartan: CartanType) -> Result<Vec<StringWalk>, WeylError> {
    if cartan.family != Family::A {
        return Err(WeylError::Unsupported(cartan));
    }
    let n = cartan.rank as i32;
    let mut out = Vec::new();
    for lo in 1..=n {
        for hi in lo..=n {
            let edges = (hi - lo) as usize;
            for mask in 0..(1u32 << edges) {
                let down = (0..edges).map(|k| mask >> k & 1 == 1).collect();
                out.push(StringWalk {
                    lo,
                    hi,
                    down,
                    reversed: false,
                });
            }
        }
    }
    Ok(out)
}

/// The string module of a walk: one line per visited vertex, identity maps
/// along the oriented edges.
pub fn string_module<F: Scalar>(walk: &StringWalk, quiver: &Quiver) -> ModuleRep<F> {
    let nv = quiver.vertex_count();
    let mut dims = vec![0usize; nv];
    let vidx = |label: i32| quiver.vertex_index(label).expect("walk vertex");
    for v in walk.lo..=walk.hi {
        dims[vidx(v)] = 1;
    }
    let mut maps: Vec<Matrix<F>> = quiver
        .arrows
        .iter()
        .map(|a| Matrix::zero(dims[a.tgt], dims[a.src]))
        .collect();
    for (k, &down) in walk.down.iter().enumerate() {
        let (u, w) = (walk.lo + k as i32, walk.lo + k as i32 + 1);
        let (from, to) = if down { (u, w) } else { (w, u) };
        let arrow = quiver
            .arrows
            .iter()
            .position(|a| a.src == vidx(from) && a.tgt == vidx(to))
            .expect("edge of the quiver");
        maps[arrow][(0, 0)] = F::one();
    }
    ModuleRep { dims, maps }
}

/// Is `a` an oriented contiguous subwalk of `b`? For thin strings this is
/// exactly the subfactor relation. Walks are stored with ascending vertex
/// intervals, which already identifies a walk with its reverse, so the
/// orientation flags must match literally.
pub fn is_subwalk(a: &StringWalk, b: &StringWalk) -> bool {
    if a.lo < b.lo || a.hi > b.hi {
        return false;
    }
    let off = (a.lo - b.lo) as usize;
    (0..a.down.len()).all(|k| a.down[k] == b.down[off + k])
}

/// Strict subfactor order matrix: `gt[i][j]` iff walk j is a proper
/// subfactor of walk i.
pub fn subfactor_order(walks: &[StringWalk]) -> Vec<Vec<bool>> {
    let n = walks.len();
    let mut gt = vec![vec![false; n]; n];
    for (i, a) in walks.iter().enumerate() {
        for (j, b) in walks.iter().enumerate() {
            if i != j && is_subwalk(b, a) {
                gt[i][j] = true;
            }
        }
    }
    gt
}
