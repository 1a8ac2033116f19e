//! Machine verification of the headline correspondences at desk scale: the
//! bijection diagram, the labelling coincidence, layers = bricks = stones,
//! forcing order vs doubleton extension order, torsion generation by
//! incoming layers, polygon label configurations, stone reduction, and the
//! congruence-closure oracle for forcing.
//!
//! Every check is deterministic for a fixed isomorphism-test seed and
//! reports a reproducible counterexample on failure.

use crate::ideals::{Calculus, CalculusError};
use crate::lattice::PolygonShape;
use crate::rep::{
    self, ext1_dim, extension_middle, is_isomorphic, soc_over_end, top_over_end, IsoOutcome,
};
use crate::scalar::Scalar;
use crate::strings;
use crate::weyl::{CartanType, Family};
use serde::Serialize;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check: String,
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    pub status: Status,
    pub elapsed_ms: u128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<serde_json::Value>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Bijections,
    Labelling,
    LayerBrickStone,
    ForcingIso,
    TorsGeneration,
    PolygonConfig,
    StoneReduction,
    ConOracle,
}

impl Check {
    pub fn name(&self) -> &'static str {
        match self {
            Check::Bijections => "bijections",
            Check::Labelling => "labelling",
            Check::LayerBrickStone => "layer_brick_stone",
            Check::ForcingIso => "forcing_iso",
            Check::TorsGeneration => "tors_generation",
            Check::PolygonConfig => "polygon_config",
            Check::StoneReduction => "stone_reduction",
            Check::ConOracle => "con_oracle",
        }
    }

    pub fn all() -> Vec<Check> {
        vec![
            Check::Bijections,
            Check::Labelling,
            Check::LayerBrickStone,
            Check::ForcingIso,
            Check::TorsGeneration,
            Check::PolygonConfig,
            Check::StoneReduction,
            Check::ConOracle,
        ]
    }

    pub fn by_name(name: &str) -> Option<Check> {
        Check::all().into_iter().find(|c| c.name() == name)
    }
}

fn fam_name(cartan: CartanType) -> String {
    format!("{:?}", cartan.family)
}

fn fail(check: Check, cartan: CartanType, start: Instant, cex: serde_json::Value) -> CheckReport {
    CheckReport {
        check: check.name().to_string(),
        family: fam_name(cartan),
        rank: cartan.rank,
        status: Status::Fail,
        elapsed_ms: start.elapsed().as_millis(),
        counterexample: Some(cex),
    }
}

fn pass(check: Check, cartan: CartanType, start: Instant) -> CheckReport {
    CheckReport {
        check: check.name().to_string(),
        family: fam_name(cartan),
        rank: cartan.rank,
        status: Status::Pass,
        elapsed_ms: start.elapsed().as_millis(),
        counterexample: None,
    }
}

fn skipped(check: Check, cartan: CartanType) -> CheckReport {
    CheckReport {
        check: check.name().to_string(),
        family: fam_name(cartan),
        rank: cartan.rank,
        status: Status::Skipped,
        elapsed_ms: 0,
        counterexample: None,
    }
}

fn window_of<F: Scalar>(calc: &Calculus<F>, e: usize) -> serde_json::Value {
    serde_json::json!(calc.group.elements[e].window)
}

pub fn run_check<F: Scalar>(calc: &Calculus<F>, check: Check) -> Result<CheckReport, CalculusError> {
    match check {
        Check::Bijections => verify_bijections(calc),
        Check::Labelling => verify_labelling(calc),
        Check::LayerBrickStone => verify_layer_brick_stone(calc),
        Check::ForcingIso => verify_forcing_iso(calc),
        Check::TorsGeneration => verify_tors_generation(calc),
        Check::PolygonConfig => verify_polygon_config(calc),
        Check::StoneReduction => verify_stone_reduction(calc),
        Check::ConOracle => verify_con_oracle(calc),
    }
}

/// Counts and explicit bijections of the big diagram: join-irreducibles,
/// meet-irreducibles, layers, J- and M-modules, the End-quotient triangles,
/// tau-rigidity, and the torsion-class identification `Fac M(m) = Tors(m)`.
pub fn verify_bijections<F: Scalar>(calc: &Calculus<F>) -> Result<CheckReport, CalculusError> {
    let start = Instant::now();
    let check = Check::Bijections;
    let cartan = calc.group.cartan;
    let quiver = &calc.pi.quiver;

    let jirr = calc.group.jirr_ids();
    let mirr = calc.group.mirr_ids();
    let counts = calc.group.count_jirr();
    if counts.total_formula != counts.total_enumerated
        || jirr.len() as u64 != counts.total_formula
        || mirr.len() != jirr.len()
    {
        return Ok(fail(
            check,
            cartan,
            start,
            serde_json::json!({"reason": "count mismatch", "jirr": jirr.len(), "mirr": mirr.len(), "formula": counts.total_formula}),
        ));
    }
    let (classes, class_of) = calc.layer_classes()?;
    if classes.len() != jirr.len() {
        return Ok(fail(
            check,
            cartan,
            start,
            serde_json::json!({"reason": "layer class count", "layers": classes.len(), "jirr": jirr.len()}),
        ));
    }

    let class_of_module = |m: &rep::ModuleRep<F>| -> Result<Option<usize>, CalculusError> {
        for (k, r) in classes.iter().enumerate() {
            match is_isomorphic(quiver, m, r, calc.iso_seed) {
                Ok(IsoOutcome::Isomorphic) => return Ok(Some(k)),
                Ok(IsoOutcome::NotIsomorphic) => {}
                Err(_) => return Err(CalculusError::IsoUndecided),
            }
        }
        Ok(None)
    };

    // j -> layer(j -> j_*) must be a bijection onto layer classes
    let mut jlayer_class = Vec::with_capacity(jirr.len());
    for &j in &jirr {
        let js = calc.lattice.down_covers[j][0];
        let arrow = calc.lattice.arrow_id(j, js).expect("jirr arrow");
        jlayer_class.push(class_of[arrow]);
    }
    {
        let mut seen = jlayer_class.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != jirr.len() {
            return Ok(fail(
                check,
                cartan,
                start,
                serde_json::json!({"reason": "j -> layer not injective"}),
            ));
        }
    }
    // dually for meet-irreducibles
    let mut mlayer_class = Vec::with_capacity(mirr.len());
    for &m in &mirr {
        let ms = calc.lattice.up_covers[m][0];
        let arrow = calc.lattice.arrow_id(ms, m).expect("mirr arrow");
        mlayer_class.push(class_of[arrow]);
    }
    {
        let mut seen = mlayer_class.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != mirr.len() {
            return Ok(fail(
                check,
                cartan,
                start,
                serde_json::json!({"reason": "m -> layer not injective"}),
            ));
        }
    }

    // M(m): indecomposable tau-rigid, End-top recovers the layer,
    // Fac M(m) = Tors(m), and the images are pairwise non-isomorphic
    let mut mmods = Vec::with_capacity(mirr.len());
    for (k, &m) in mirr.iter().enumerate() {
        let mm = calc.mmap(m)?;
        if !rep::is_tau_rigid(&calc.pi, &mm) {
            return Ok(fail(
                check,
                cartan,
                start,
                serde_json::json!({"reason": "M(m) not tau-rigid", "m": window_of(calc, m)}),
            ));
        }
        let t = top_over_end(quiver, &mm);
        match class_of_module(&t)? {
            Some(c) if c == mlayer_class[k] => {}
            other => {
                return Ok(fail(
                    check,
                    cartan,
                    start,
                    serde_json::json!({"reason": "top_over_end(M(m)) is not the layer of m^* -> m", "m": window_of(calc, m), "got_class": other}),
                ));
            }
        }
        // Fac M(m) equals Tors(m): mutual generation
        let im_rep = calc.ideal_rep(m);
        if !rep::in_fac(quiver, &im_rep, &mm) || !calc.in_tors(&mm, m) {
            return Ok(fail(
                check,
                cartan,
                start,
                serde_json::json!({"reason": "Fac M(m) differs from Tors(m)", "m": window_of(calc, m)}),
            ));
        }
        mmods.push(mm);
    }
    for i in 0..mmods.len() {
        for k in (i + 1)..mmods.len() {
            if let Ok(IsoOutcome::Isomorphic) =
                is_isomorphic(quiver, &mmods[i], &mmods[k], calc.iso_seed)
            {
                return Ok(fail(
                    check,
                    cartan,
                    start,
                    serde_json::json!({"reason": "M images not distinct", "m1": window_of(calc, mirr[i]), "m2": window_of(calc, mirr[k])}),
                ));
            }
        }
    }

    // J(j): indecomposable tau-minus-rigid, End-socle recovers the layer,
    // and Sub J(j) is the torsion-free class of j
    let mut jmods = Vec::with_capacity(jirr.len());
    for (k, &j) in jirr.iter().enumerate() {
        let jm = calc.jmap(j)?;
        if !rep::is_tau_minus_rigid(&calc.pi, &jm) {
            return Ok(fail(
                check,
                cartan,
                start,
                serde_json::json!({"reason": "J(j) not tau-minus-rigid", "j": window_of(calc, j)}),
            ));
        }
        let s = soc_over_end(quiver, &jm);
        match class_of_module(&s)? {
            Some(c) if c == jlayer_class[k] => {}
            other => {
                return Ok(fail(
                    check,
                    cartan,
                    start,
                    serde_json::json!({"reason": "soc_over_end(J(j)) is not the layer of j -> j_*", "j": window_of(calc, j), "got_class": other}),
                ));
            }
        }
        // Sub J(j) = Torf(j): mutual cogeneration
        let qj = calc.quotient_rep(j);
        if !rep::in_sub(quiver, &qj, &jm) || !calc.in_torf(&jm, j) {
            return Ok(fail(
                check,
                cartan,
                start,
                serde_json::json!({"reason": "Sub J(j) differs from Torf(j)", "j": window_of(calc, j)}),
            ));
        }
        jmods.push(jm);
    }
    for i in 0..jmods.len() {
        for k in (i + 1)..jmods.len() {
            if let Ok(IsoOutcome::Isomorphic) =
                is_isomorphic(quiver, &jmods[i], &jmods[k], calc.iso_seed)
            {
                return Ok(fail(
                    check,
                    cartan,
                    start,
                    serde_json::json!({"reason": "J images not distinct", "j1": window_of(calc, jirr[i]), "j2": window_of(calc, jirr[k])}),
                ));
            }
        }
    }

    // tau-duality across the dual: dual(M(m)) is tau-minus-rigid
    for mm in &mmods {
        if !rep::is_tau_minus_rigid(&calc.pi, &mm.dual(quiver)) {
            return Ok(fail(
                check,
                cartan,
                start,
                serde_json::json!({"reason": "dual of a tau-rigid M(m) is not tau-minus-rigid"}),
            ));
        }
    }

    Ok(pass(check, cartan, start))
}

/// Thm: the layer label equals the layer of the lattice join-irreducible
/// label, arrow by arrow; and two arrows share a congruence iff they share
/// a layer (via SFPoly components).
pub fn verify_labelling<F: Scalar>(calc: &Calculus<F>) -> Result<CheckReport, CalculusError> {
    let start = Instant::now();
    let check = Check::Labelling;
    let cartan = calc.group.cartan;
    let (_, class_of) = calc.layer_classes()?;
    let labels = calc.lattice.arrow_labels();
    for (arrow, &(j, _)) in labels.iter().enumerate() {
        let js = calc.lattice.down_covers[j][0];
        let jarrow = calc.lattice.arrow_id(j, js).expect("jirr cover arrow");
        if class_of[arrow] != class_of[jarrow] {
            let a = calc.lattice.arrows[arrow];
            return Ok(fail(
                check,
                cartan,
                start,
                serde_json::json!({
                    "reason": "layer(arrow) differs from layer(j -> j_*)",
                    "upper": window_of(calc, a.upper),
                    "lower": window_of(calc, a.lower),
                    "label": window_of(calc, j),
                }),
            ));
        }
    }
    // con(a) = con(a') iff same layer, via SFPoly path-connectivity
    let sfpoly = calc.lattice.sfpoly()?;
    let comp = crate::lattice::scc(&sfpoly);
    for a in 0..class_of.len() {
        for b in (a + 1)..class_of.len() {
            if (comp[a] == comp[b]) != (class_of[a] == class_of[b]) {
                return Ok(fail(
                    check,
                    cartan,
                    start,
                    serde_json::json!({"reason": "congruence classes differ from layer classes", "arrows": [a, b]}),
                ));
            }
        }
    }
    Ok(pass(check, cartan, start))
}

/// Thm: every layer is a brick and a stone; in type A the layers exhaust
/// the string modules.
pub fn verify_layer_brick_stone<F: Scalar>(
    calc: &Calculus<F>,
) -> Result<CheckReport, CalculusError> {
    let start = Instant::now();
    let check = Check::LayerBrickStone;
    let cartan = calc.group.cartan;
    let quiver = &calc.pi.quiver;
    let (classes, _) = calc.layer_classes()?;
    for (k, l) in classes.iter().enumerate() {
        if !rep::is_brick(quiver, l) || !calc.is_stone(l) || !calc.euler_cross_check(l) {
            return Ok(fail(
                check,
                cartan,
                start,
                serde_json::json!({"reason": "layer not a stone", "class": k, "dims": l.dims}),
            ));
        }
    }
    if cartan.family == Family::A {
        let walks = strings::string_walks(cartan)?;
        if walks.len() != classes.len() {
            return Ok(fail(
                check,
                cartan,
                start,
                serde_json::json!({"reason": "string count differs from layer count", "strings": walks.len(), "layers": classes.len()}),
            ));
        }
        let mut matched = vec![false; classes.len()];
        for w in &walks {
            let m: rep::ModuleRep<F> = strings::string_module(w, quiver);
            let mut hit = None;
            for (k, r) in classes.iter().enumerate() {
                if let Ok(IsoOutcome::Isomorphic) = is_isomorphic(quiver, &m, r, calc.iso_seed) {
                    hit = Some(k);
                    break;
                }
            }
            match hit {
                Some(k) if !matched[k] => matched[k] = true,
                _ => {
                    return Ok(fail(
                        check,
                        cartan,
                        start,
                        serde_json::json!({"reason": "string module not matched bijectively", "walk": format!("{w:?}")}),
                    ));
                }
            }
        }
        if !matched.iter().all(|&b| b) {
            return Ok(fail(
                check,
                cartan,
                start,
                serde_json::json!({"reason": "some layer is not a string"}),
            ));
        }
    }
    Ok(pass(check, cartan, start))
}

/// Thm: `j -> layer(j -> j_*)` is an isomorphism from the forcing order to
/// the doubleton extension order; in type A the latter is the opposite of
/// the subfactor order on strings.
pub fn verify_forcing_iso<F: Scalar>(calc: &Calculus<F>) -> Result<CheckReport, CalculusError> {
    let start = Instant::now();
    let check = Check::ForcingIso;
    let cartan = calc.group.cartan;
    let quiver = &calc.pi.quiver;
    let (classes, class_of) = calc.layer_classes()?;
    let forcing = calc.lattice.forcing_poset()?;
    let gt = calc.doubleton_order(&classes)?;
    let jirr = forcing.jirr_elements.clone();
    let jclass: Vec<usize> = jirr
        .iter()
        .map(|&j| {
            let js = calc.lattice.down_covers[j][0];
            class_of[calc.lattice.arrow_id(j, js).unwrap()]
        })
        .collect();
    for (a, &ja) in jirr.iter().enumerate() {
        for (b, &jb) in jirr.iter().enumerate() {
            if a == b {
                continue;
            }
            let forces = forcing.forces(ja, jb);
            let ext_gt = gt[jclass[a]][jclass[b]];
            if forces != ext_gt {
                return Ok(fail(
                    check,
                    cartan,
                    start,
                    serde_json::json!({
                        "reason": "forcing and doubleton orders disagree",
                        "j": window_of(calc, ja),
                        "j2": window_of(calc, jb),
                        "forcing": forces,
                        "doubleton": ext_gt,
                    }),
                ));
            }
        }
    }
    if cartan.family == Family::A {
        // doubleton order = opposite subfactor order on strings
        let walks = strings::string_walks(cartan)?;
        let sub_gt = strings::subfactor_order(&walks);
        // match walks to classes
        let mut walk_of_class = vec![usize::MAX; classes.len()];
        for (wi, w) in walks.iter().enumerate() {
            let m: rep::ModuleRep<F> = strings::string_module(w, quiver);
            for (k, r) in classes.iter().enumerate() {
                if let Ok(IsoOutcome::Isomorphic) = is_isomorphic(quiver, &m, r, calc.iso_seed) {
                    walk_of_class[k] = wi;
                    break;
                }
            }
        }
        for x in 0..classes.len() {
            for y in 0..classes.len() {
                if x == y {
                    continue;
                }
                // x > y in doubleton order iff x is a proper subfactor of y
                let dd = gt[x][y];
                let sf = sub_gt[walk_of_class[y]][walk_of_class[x]];
                if dd != sf {
                    return Ok(fail(
                        check,
                        cartan,
                        start,
                        serde_json::json!({
                            "reason": "doubleton order differs from opposite subfactor order",
                            "x": format!("{:?}", walks[walk_of_class[x]]),
                            "y": format!("{:?}", walks[walk_of_class[y]]),
                        }),
                    ));
                }
            }
        }
    }
    Ok(pass(check, cartan, start))
}

/// Thm: `Tors(w)` is generated by the layers on arrows into `w`, and
/// `Torf(w)` by the layers on arrows out of `w`.
pub fn verify_tors_generation<F: Scalar>(
    calc: &Calculus<F>,
) -> Result<CheckReport, CalculusError> {
    let start = Instant::now();
    let check = Check::TorsGeneration;
    let cartan = calc.group.cartan;
    let (classes, class_of) = calc.layer_classes()?;
    let n = calc.group.order();

    // membership tables, exploiting monotonicity: {v : L in Tors(v)} is
    // down-closed, {v : L in Torf(v)} is up-closed
    let by_length_desc = {
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(calc.group.lengths[v]));
        order
    };
    let mut in_tors = vec![vec![false; n]; classes.len()];
    for (k, l) in classes.iter().enumerate() {
        for &v in &by_length_desc {
            let inherited = calc.lattice.up_covers[v]
                .iter()
                .any(|&u| in_tors[k][u]);
            in_tors[k][v] = inherited || calc.in_tors(l, v);
        }
    }
    let mut in_torf = vec![vec![false; n]; classes.len()];
    for (k, l) in classes.iter().enumerate() {
        for &v in by_length_desc.iter().rev() {
            let inherited = calc.lattice.down_covers[v]
                .iter()
                .any(|&u| in_torf[k][u]);
            in_torf[k][v] = inherited || calc.in_torf(l, v);
        }
    }

    for w in 0..n {
        // incoming arrows u -> w (u covers w)
        let incoming: Vec<usize> = calc.lattice.up_covers[w]
            .iter()
            .map(|&u| class_of[calc.lattice.arrow_id(u, w).unwrap()])
            .collect();
        let candidates: Vec<usize> = (0..n)
            .filter(|&v| incoming.iter().all(|&k| in_tors[k][v]))
            .collect();
        let join = candidates
            .iter()
            .copied()
            .reduce(|a, b| calc.lattice.join(a, b))
            .unwrap_or(calc.lattice.minimum);
        if join != w || !candidates.contains(&w) {
            return Ok(fail(
                check,
                cartan,
                start,
                serde_json::json!({"reason": "Tors(w) not generated by incoming layers", "w": window_of(calc, w), "join": window_of(calc, join)}),
            ));
        }
        // outgoing arrows w -> y
        let outgoing: Vec<usize> = calc.lattice.down_covers[w]
            .iter()
            .map(|&y| class_of[calc.lattice.arrow_id(w, y).unwrap()])
            .collect();
        let candidates: Vec<usize> = (0..n)
            .filter(|&v| outgoing.iter().all(|&k| in_torf[k][v]))
            .collect();
        let meet = candidates
            .iter()
            .copied()
            .reduce(|a, b| calc.lattice.meet(a, b))
            .unwrap_or(calc.lattice.maximum);
        if meet != w || !candidates.contains(&w) {
            return Ok(fail(
                check,
                cartan,
                start,
                serde_json::json!({"reason": "Torf(w) not generated by outgoing layers", "w": window_of(calc, w), "meet": window_of(calc, meet)}),
            ));
        }
    }
    Ok(pass(check, cartan, start))
}

/// Prop: every polygon is a square or hexagon with the crossing label
/// pattern; hexagon sides are the two extensions of the doubleton formed by
/// the bottom labels.
pub fn verify_polygon_config<F: Scalar>(calc: &Calculus<F>) -> Result<CheckReport, CalculusError> {
    let start = Instant::now();
    let check = Check::PolygonConfig;
    let cartan = calc.group.cartan;
    let quiver = &calc.pi.quiver;
    let (classes, class_of) = calc.layer_classes()?;
    let aid = |u: usize, l: usize| calc.lattice.arrow_id(u, l).expect("cover");
    for p in calc.lattice.polygons()? {
        let lc = &p.left;
        let rc = &p.right;
        let x = class_of[aid(lc[0], p.bottom)];
        let y = class_of[aid(rc[0], p.bottom)];
        let top_left = class_of[aid(p.top, *lc.last().unwrap())];
        let top_right = class_of[aid(p.top, *rc.last().unwrap())];
        match p.shape() {
            PolygonShape::Square => {
                if top_left != y || top_right != x {
                    return Ok(fail(
                        check,
                        cartan,
                        start,
                        serde_json::json!({"reason": "square labels not crossing", "bottom": window_of(calc, p.bottom)}),
                    ));
                }
            }
            PolygonShape::Hexagon => {
                let e = class_of[aid(lc[1], lc[0])];
                let f = class_of[aid(rc[1], rc[0])];
                if top_left != y || top_right != x {
                    return Ok(fail(
                        check,
                        cartan,
                        start,
                        serde_json::json!({"reason": "hexagon top labels not crossing", "bottom": window_of(calc, p.bottom)}),
                    ));
                }
                let (mx, my) = (&classes[x], &classes[y]);
                if ext1_dim(&calc.pi, my, mx) != 1 || ext1_dim(&calc.pi, mx, my) != 1 {
                    return Ok(fail(
                        check,
                        cartan,
                        start,
                        serde_json::json!({"reason": "hexagon Ext groups not one-dimensional", "bottom": window_of(calc, p.bottom)}),
                    ));
                }
                // 0 -> X -> E -> Y -> 0 on the left side, 0 -> Y -> F -> X -> 0
                let em = extension_middle(&calc.pi, my, mx).expect("ext dim 1");
                let fm = extension_middle(&calc.pi, mx, my).expect("ext dim 1");
                let ok_e = matches!(
                    is_isomorphic(quiver, &em, &classes[e], calc.iso_seed),
                    Ok(IsoOutcome::Isomorphic)
                );
                let ok_f = matches!(
                    is_isomorphic(quiver, &fm, &classes[f], calc.iso_seed),
                    Ok(IsoOutcome::Isomorphic)
                );
                if !ok_e || !ok_f {
                    return Ok(fail(
                        check,
                        cartan,
                        start,
                        serde_json::json!({"reason": "hexagon sides are not the doubleton extensions", "bottom": window_of(calc, p.bottom)}),
                    ));
                }
                // doubleton Hom-vanishing
                if calc.hom_dim(mx, my) != 0 || calc.hom_dim(my, mx) != 0 {
                    return Ok(fail(
                        check,
                        cartan,
                        start,
                        serde_json::json!({"reason": "doubleton Hom spaces nonzero", "bottom": window_of(calc, p.bottom)}),
                    ));
                }
            }
            PolygonShape::Other => {
                return Ok(fail(
                    check,
                    cartan,
                    start,
                    serde_json::json!({"reason": "polygon of unexpected shape", "bottom": window_of(calc, p.bottom), "top": window_of(calc, p.top)}),
                ));
            }
        }
    }
    Ok(pass(check, cartan, start))
}

/// Lemma: every layer reduces to a simple within `l(w_0)` ideal twists.
pub fn verify_stone_reduction<F: Scalar>(
    calc: &Calculus<F>,
) -> Result<CheckReport, CalculusError> {
    let start = Instant::now();
    let check = Check::StoneReduction;
    let cartan = calc.group.cartan;
    let bound = calc.group.lengths[calc.group.longest_id()];
    let (classes, _) = calc.layer_classes()?;
    for (k, l) in classes.iter().enumerate() {
        match calc.reduce_stone_to_simple(l) {
            Ok(seq) if seq.len() <= bound => {}
            Ok(seq) => {
                return Ok(fail(
                    check,
                    cartan,
                    start,
                    serde_json::json!({"reason": "sequence exceeds l(w0)", "class": k, "len": seq.len()}),
                ));
            }
            Err(e) => {
                return Ok(fail(
                    check,
                    cartan,
                    start,
                    serde_json::json!({"reason": format!("{e}"), "class": k}),
                ));
            }
        }
    }
    Ok(pass(check, cartan, start))
}

/// The congruence-closure definition of forcing agrees with the FPoly
/// reachability order on join-irreducibles. Quadratic in the group order;
/// run for ranks up to 3 and skipped above.
pub fn verify_con_oracle<F: Scalar>(calc: &Calculus<F>) -> Result<CheckReport, CalculusError> {
    let start = Instant::now();
    let check = Check::ConOracle;
    let cartan = calc.group.cartan;
    if cartan.rank > 3 {
        return Ok(skipped(check, cartan));
    }
    let forcing = calc.lattice.forcing_poset()?;
    let jirr = calc.lattice.jirr();
    let cons: Vec<crate::lattice::CongruencePartition> = jirr
        .iter()
        .map(|&(j, js)| calc.lattice.con(j, js))
        .collect();
    for (a, &(ja, _)) in jirr.iter().enumerate() {
        for (b, &(jb, _)) in jirr.iter().enumerate() {
            if a == b {
                continue;
            }
            // ja forces jb iff con(jb) refines con(ja)
            let oracle = cons[b].refines(&cons[a]);
            let poly = forcing.forces(ja, jb);
            if oracle != poly {
                return Ok(fail(
                    check,
                    cartan,
                    start,
                    serde_json::json!({
                        "reason": "closure oracle disagrees with FPoly forcing",
                        "j": window_of(calc, ja),
                        "j2": window_of(calc, jb),
                    }),
                ));
            }
        }
    }
    Ok(pass(check, cartan, start))
}

/// Run a list of checks, optionally across threads (each worker owns its
/// own `Calculus`); reports are returned in the canonical check order.
pub fn run_suite(
    cartan: CartanType,
    checks: &[Check],
    threads: usize,
    seed: u64,
) -> Result<Vec<CheckReport>, CalculusError> {
    let threads = threads.max(1);
    if threads == 1 {
        let mut calc: Calculus<crate::Q> = Calculus::new(cartan)?;
        calc.iso_seed = seed;
        let mut out = Vec::new();
        for &c in checks {
            out.push(run_check(&calc, c)?);
        }
        return Ok(out);
    }
    let chunks: Vec<Vec<Check>> = (0..threads)
        .map(|t| {
            checks
                .iter()
                .enumerate()
                .filter(|(i, _)| i % threads == t)
                .map(|(_, &c)| c)
                .collect()
        })
        .collect();
    let results: Vec<Result<Vec<(Check, CheckReport)>, CalculusError>> =
        std::thread::scope(|scope| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|chunk| {
                    scope.spawn(move || {
                        let mut calc: Calculus<crate::Q> = Calculus::new(cartan)?;
                        calc.iso_seed = seed;
                        let mut out = Vec::new();
                        for c in chunk {
                            out.push((c, run_check(&calc, c)?));
                        }
                        Ok(out)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
    let mut tagged: Vec<(Check, CheckReport)> = Vec::new();
    for r in results {
        tagged.extend(r?);
    }
    // canonical order regardless of thread count
    tagged.sort_by_key(|(c, _)| checks.iter().position(|x| x == c).unwrap_or(usize::MAX));
    Ok(tagged.into_iter().map(|(_, r)| r).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn calc(fam: Family, n: usize) -> Calculus<Q> {
        Calculus::new(CartanType::new(fam, n).unwrap()).unwrap()
    }

    #[test]
    fn a2_full_suite_passes() {
        let c = calc(Family::A, 2);
        for check in Check::all() {
            let r = run_check(&c, check).unwrap();
            assert_eq!(r.status, Status::Pass, "{}: {:?}", r.check, r.counterexample);
        }
    }

    #[test]
    fn suite_runner_is_thread_count_invariant() {
        let t = CartanType::new(Family::A, 2).unwrap();
        let one = run_suite(t, &Check::all(), 1, 7).unwrap();
        let four = run_suite(t, &Check::all(), 4, 7).unwrap();
        let names: Vec<_> = one.iter().map(|r| (&r.check, r.status)).collect();
        let names4: Vec<_> = four.iter().map(|r| (&r.check, r.status)).collect();
        assert_eq!(names, names4);
    }
}
