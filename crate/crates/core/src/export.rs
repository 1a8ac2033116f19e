//! Stable exports: DOT for the Hasse, FPoly, SFPoly, and forcing quivers,
//! and JSON for the forcing poset, modules, and regular-module subspaces.
//! All outputs are sorted by id so runs are byte-identical.

use crate::ideals::Calculus;
use crate::lattice::FiniteLattice;
use crate::linalg::{Matrix, Subspace};
use crate::rep::ModuleRep;
use crate::weyl::WeylGroup;
use crate::Q;
use num_traits::{One, Zero};

fn window_name(group: &WeylGroup, e: usize) -> String {
    let w: Vec<String> = group.elements[e].window.iter().map(|x| x.to_string()).collect();
    w.join(",")
}

/// What to print on Hasse arrows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArrowLabels {
    None,
    Jirr,
    Mirr,
    Layer,
}

/// DOT of the weak-order Hasse quiver; arrows point from the covering
/// element to the covered one.
pub fn dot_hasse(calc: &Calculus<Q>, labels: ArrowLabels) -> String {
    let lat = &calc.lattice;
    let group = &calc.group;
    let mut out = String::from("digraph hasse {\n  rankdir=TB;\n");
    for e in 0..lat.n {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", e, window_name(group, e)));
    }
    let lattice_labels = match labels {
        ArrowLabels::Jirr | ArrowLabels::Mirr => Some(lat.arrow_labels()),
        _ => None,
    };
    for (i, a) in lat.arrows.iter().enumerate() {
        let label = match labels {
            ArrowLabels::None => String::new(),
            ArrowLabels::Jirr => {
                let (j, _) = lattice_labels.as_ref().unwrap()[i];
                format!(" [label=\"{}\"]", window_name(group, j))
            }
            ArrowLabels::Mirr => {
                let (_, m) = lattice_labels.as_ref().unwrap()[i];
                format!(" [label=\"{}\"]", window_name(group, m))
            }
            ArrowLabels::Layer => {
                let l = calc.layer(i);
                format!(" [label=\"{}\"]", dims_name(&l))
            }
        };
        out.push_str(&format!("  n{} -> n{}{};\n", a.upper, a.lower, label));
    }
    out.push_str("}\n");
    out
}

fn dims_name(m: &ModuleRep<Q>) -> String {
    let d: Vec<String> = m.dims.iter().map(|x| x.to_string()).collect();
    format!("({})", d.join(","))
}

/// DOT of a quiver on Hasse arrows (FPoly or SFPoly).
pub fn dot_arrow_quiver(lat: &FiniteLattice, adj: &[Vec<usize>], name: &str) -> String {
    let mut out = format!("digraph {name} {{\n");
    for (i, a) in lat.arrows.iter().enumerate() {
        out.push_str(&format!("  a{} [label=\"{}->{}\"];\n", i, a.upper, a.lower));
    }
    for (i, outs) in adj.iter().enumerate() {
        for &j in outs {
            out.push_str(&format!("  a{i} -> a{j};\n"));
        }
    }
    out.push_str("}\n");
    out
}

/// DOT of the forcing order on join-irreducibles (Hasse cover arrows).
pub fn dot_forcing(calc: &Calculus<Q>) -> Result<String, crate::lattice::LatticeError> {
    let forcing = calc.lattice.forcing_poset()?;
    let mut out = String::from("digraph forcing {\n");
    for &j in &forcing.jirr_elements {
        out.push_str(&format!(
            "  n{} [label=\"{}\"];\n",
            j,
            window_name(&calc.group, j)
        ));
    }
    for (a, b) in forcing.hasse_pairs() {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    Ok(out)
}

/// JSON of the forcing poset: vertices carry windows; relations are the
/// Hasse cover pairs.
pub fn json_forcing(calc: &Calculus<Q>) -> Result<serde_json::Value, crate::lattice::LatticeError> {
    let forcing = calc.lattice.forcing_poset()?;
    let vertices: Vec<serde_json::Value> = forcing
        .jirr_elements
        .iter()
        .map(|&j| serde_json::json!({"id": j, "window": calc.group.elements[j].window}))
        .collect();
    let covers: Vec<serde_json::Value> = forcing
        .hasse_pairs()
        .into_iter()
        .map(|(a, b)| serde_json::json!([a, b]))
        .collect();
    Ok(serde_json::json!({"vertices": vertices, "covers": covers}))
}

fn q_to_string(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn q_from_string(s: &str) -> Option<Q> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().ok()?;
    let d: num_bigint::BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Q::new(n, d))
}

/// JSON of a module: the dimension vector plus one matrix per arrow with
/// exact rational entries as strings. Round-trips bit-exactly.
pub fn json_module(m: &ModuleRep<Q>) -> serde_json::Value {
    let maps: Vec<serde_json::Value> = m
        .maps
        .iter()
        .map(|mat| {
            let rows: Vec<Vec<String>> = (0..mat.rows)
                .map(|i| mat.row(i).iter().map(q_to_string).collect())
                .collect();
            serde_json::json!({"rows": mat.rows, "cols": mat.cols, "entries": rows})
        })
        .collect();
    serde_json::json!({"dims": m.dims, "maps": maps})
}

pub fn module_from_json(v: &serde_json::Value) -> Option<ModuleRep<Q>> {
    let dims: Vec<usize> = v
        .get("dims")?
        .as_array()?
        .iter()
        .map(|x| x.as_u64().map(|u| u as usize))
        .collect::<Option<_>>()?;
    let maps = v
        .get("maps")?
        .as_array()?
        .iter()
        .map(|mv| {
            let rows = mv.get("rows")?.as_u64()? as usize;
            let cols = mv.get("cols")?.as_u64()? as usize;
            let mut mat = Matrix::zero(rows, cols);
            for (i, row) in mv.get("entries")?.as_array()?.iter().enumerate() {
                for (j, e) in row.as_array()?.iter().enumerate() {
                    mat[(i, j)] = q_from_string(e.as_str()?)?;
                }
            }
            Some(mat)
        })
        .collect::<Option<Vec<_>>>()?;
    Some(ModuleRep { dims, maps })
}

/// JSON of a submodule of the regular module: basis columns listed per
/// degree of the graded algebra basis.
pub fn json_submodule(calc: &Calculus<Q>, sub: &Subspace<Q>) -> serde_json::Value {
    let top = calc.pi.loewy_top_degree();
    let by_degree: Vec<serde_json::Value> = (0..=top)
        .map(|d| {
            let ids: Vec<usize> = (0..calc.pi.dim())
                .filter(|&b| calc.pi.basis[b].degree == d)
                .collect();
            let vectors: Vec<Vec<String>> = sub
                .basis_vectors()
                .iter()
                .map(|v| ids.iter().map(|&b| q_to_string(&v[b])).collect())
                .collect();
            serde_json::json!({"degree": d, "basis_ids": ids, "vectors": vectors})
        })
        .collect();
    serde_json::json!({"ambient_dim": calc.pi.dim(), "dim": sub.dim(), "by_degree": by_degree})
}

pub fn submodule_from_json(calc: &Calculus<Q>, v: &serde_json::Value) -> Option<Subspace<Q>> {
    let ambient = v.get("ambient_dim")?.as_u64()? as usize;
    if ambient != calc.pi.dim() {
        return None;
    }
    let dim = v.get("dim")?.as_u64()? as usize;
    let mut vectors: Vec<Vec<Q>> = vec![vec![Q::zero(); ambient]; dim];
    for dv in v.get("by_degree")?.as_array()? {
        let ids: Vec<usize> = dv
            .get("basis_ids")?
            .as_array()?
            .iter()
            .map(|x| x.as_u64().map(|u| u as usize))
            .collect::<Option<_>>()?;
        for (k, row) in dv.get("vectors")?.as_array()?.iter().enumerate() {
            for (pos, e) in row.as_array()?.iter().enumerate() {
                vectors[k][ids[pos]] = q_from_string(e.as_str()?)?;
            }
        }
    }
    Some(Subspace::from_spanning(ambient, &vectors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{CartanType, Family};

    fn calc() -> Calculus<Q> {
        Calculus::new(CartanType::new(Family::A, 2).unwrap()).unwrap()
    }

    #[test]
    fn module_json_round_trip() {
        let c = calc();
        let p = crate::rep::projective_rep(&c.pi, 0);
        let j = json_module(&p);
        let back = module_from_json(&j).unwrap();
        assert_eq!(back.dims, p.dims);
        for (a, b) in back.maps.iter().zip(&p.maps) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn submodule_json_round_trip() {
        let c = calc();
        let s1 = c
            .group
            .id_of(&crate::weyl::WeylElement::from_window(c.group.cartan, vec![2, 1, 3]).unwrap())
            .unwrap();
        let ideal = c.ideal(s1);
        let j = json_submodule(&c, &ideal);
        let back = submodule_from_json(&c, &j).unwrap();
        assert_eq!(&back, ideal.as_ref());
    }

    #[test]
    fn dot_outputs_are_stable() {
        let c = calc();
        let d1 = dot_hasse(&c, ArrowLabels::Layer);
        let d2 = dot_hasse(&c, ArrowLabels::Layer);
        assert_eq!(d1, d2);
        assert!(d1.contains("digraph hasse"));
        let f = dot_forcing(&c).unwrap();
        assert_eq!(f.matches(" -> ").count(), 4); // A2 forcing order has 4 covers
    }
}
