#![allow(dead_code)]

//! Shared golden labelling tables for the integration and acceptance tests.

use weylpi_core::ideals::Calculus;
use weylpi_core::rep::{is_isomorphic, IsoOutcome, ModuleRep};
use weylpi_core::strings::{string_module, StringWalk};
use weylpi_core::weyl::WeylElement;
use weylpi_core::Q;

/// A displayed layer label: a simple or a string by interval and
/// orientation (down = toward the larger vertex).
pub enum Label {
    S(i32),
    Str(i32, i32, Vec<bool>),
}

impl Label {
    pub fn module(&self, calc: &Calculus<Q>) -> ModuleRep<Q> {
        match self {
            Label::S(k) => calc.simple_rep(*k),
            Label::Str(lo, hi, down) => string_module(&walk(*lo, *hi, down), &calc.pi.quiver),
        }
    }
}

pub fn walk(lo: i32, hi: i32, down: &[bool]) -> StringWalk {
    StringWalk {
        lo,
        hi,
        down: down.to_vec(),
        reversed: false,
    }
}

pub fn check_labelling(calc: &Calculus<Q>, golden: &[(Vec<i32>, Vec<i32>, Label)]) {
    assert_eq!(golden.len(), calc.lattice.arrows.len(), "arrow count");
    for (upper, lower, label) in golden {
        let u = calc
            .group
            .id_of(&WeylElement::from_window(calc.group.cartan, upper.clone()).unwrap())
            .unwrap();
        let l = calc
            .group
            .id_of(&WeylElement::from_window(calc.group.cartan, lower.clone()).unwrap())
            .unwrap();
        let arrow = calc
            .lattice
            .arrow_id(u, l)
            .unwrap_or_else(|| panic!("{upper:?} does not cover {lower:?}"));
        let layer = calc.layer(arrow);
        let expected = label.module(calc);
        assert_eq!(
            is_isomorphic(&calc.pi.quiver, &layer, &expected, 7).unwrap(),
            IsoOutcome::Isomorphic,
            "layer of {upper:?} -> {lower:?}"
        );
    }
}

/// The six arrows of the A_2 hexagon with their displayed layers.
pub fn a2_golden() -> Vec<(Vec<i32>, Vec<i32>, Label)> {
    use Label::*;
    vec![
        (vec![3, 2, 1], vec![3, 1, 2], S(1)),
        (vec![3, 1, 2], vec![1, 3, 2], Str(1, 2, vec![true])),
        (vec![1, 3, 2], vec![1, 2, 3], S(2)),
        (vec![3, 2, 1], vec![2, 3, 1], S(2)),
        (vec![2, 3, 1], vec![2, 1, 3], Str(1, 2, vec![false])),
        (vec![2, 1, 3], vec![1, 2, 3], S(1)),
    ]
}

/// All 36 arrows of the A_3 weak order with their displayed layers.
pub fn a3_golden() -> Vec<(Vec<i32>, Vec<i32>, Label)> {
    use Label::*;
    let t = |b: &[u8]| b.iter().map(|&x| x == 1).collect::<Vec<bool>>();
    vec![
        (vec![2, 1, 3, 4], vec![1, 2, 3, 4], S(1)),
        (vec![1, 3, 2, 4], vec![1, 2, 3, 4], S(2)),
        (vec![1, 2, 4, 3], vec![1, 2, 3, 4], S(3)),
        (vec![2, 3, 1, 4], vec![2, 1, 3, 4], Str(1, 2, t(&[0]))),
        (vec![2, 1, 4, 3], vec![2, 1, 3, 4], S(3)),
        (vec![3, 1, 2, 4], vec![1, 3, 2, 4], Str(1, 2, t(&[1]))),
        (vec![1, 3, 4, 2], vec![1, 3, 2, 4], Str(2, 3, t(&[0]))),
        (vec![2, 1, 4, 3], vec![1, 2, 4, 3], S(1)),
        (vec![1, 4, 2, 3], vec![1, 2, 4, 3], Str(2, 3, t(&[1]))),
        (vec![2, 3, 4, 1], vec![2, 3, 1, 4], Str(1, 3, t(&[0, 0]))),
        (vec![3, 2, 1, 4], vec![2, 3, 1, 4], S(2)),
        (vec![3, 2, 1, 4], vec![3, 1, 2, 4], S(1)),
        (vec![3, 1, 4, 2], vec![3, 1, 2, 4], Str(2, 3, t(&[0]))),
        (vec![2, 4, 1, 3], vec![2, 1, 4, 3], Str(1, 3, t(&[0, 1]))),
        (vec![3, 1, 4, 2], vec![1, 3, 4, 2], Str(1, 2, t(&[1]))),
        (vec![1, 4, 3, 2], vec![1, 3, 4, 2], S(3)),
        (vec![1, 4, 3, 2], vec![1, 4, 2, 3], S(2)),
        (vec![4, 1, 2, 3], vec![1, 4, 2, 3], Str(1, 3, t(&[1, 1]))),
        (vec![3, 2, 4, 1], vec![2, 3, 4, 1], S(2)),
        (vec![2, 4, 3, 1], vec![2, 3, 4, 1], S(3)),
        (vec![3, 2, 4, 1], vec![3, 2, 1, 4], Str(1, 3, t(&[0, 0]))),
        (vec![3, 4, 1, 2], vec![3, 1, 4, 2], Str(1, 3, t(&[1, 0]))),
        (vec![2, 4, 3, 1], vec![2, 4, 1, 3], Str(1, 2, t(&[0]))),
        (vec![4, 2, 1, 3], vec![2, 4, 1, 3], Str(2, 3, t(&[1]))),
        (vec![4, 1, 3, 2], vec![1, 4, 3, 2], Str(1, 3, t(&[1, 1]))),
        (vec![4, 2, 1, 3], vec![4, 1, 2, 3], S(1)),
        (vec![4, 1, 3, 2], vec![4, 1, 2, 3], S(2)),
        (vec![3, 4, 2, 1], vec![3, 2, 4, 1], Str(2, 3, t(&[0]))),
        (vec![4, 2, 3, 1], vec![2, 4, 3, 1], Str(2, 3, t(&[1]))),
        (vec![3, 4, 2, 1], vec![3, 4, 1, 2], S(1)),
        (vec![4, 3, 1, 2], vec![3, 4, 1, 2], S(3)),
        (vec![4, 2, 3, 1], vec![4, 2, 1, 3], Str(1, 2, t(&[0]))),
        (vec![4, 3, 1, 2], vec![4, 1, 3, 2], Str(1, 2, t(&[1]))),
        (vec![4, 3, 2, 1], vec![3, 4, 2, 1], S(3)),
        (vec![4, 3, 2, 1], vec![4, 2, 3, 1], S(2)),
        (vec![4, 3, 2, 1], vec![4, 3, 1, 2], S(1)),
    ]
}

/// The Hasse quiver of the forcing order on join-irreducibles of A_3, as
/// displayed: simples on top, the four 3-dimensional strings at the bottom.
/// Pairs are (greater, smaller).
pub fn a3_forcing_golden() -> Vec<(StringWalk, StringWalk)> {
    let s = |v: i32| walk(v, v, &[]);
    let w2 = |lo: i32, d: u8| walk(lo, lo + 1, &[d == 1]);
    let w3 = |d0: u8, d1: u8| walk(1, 3, &[d0 == 1, d1 == 1]);
    vec![
        (s(1), w2(1, 1)),
        (s(1), w2(1, 0)),
        (s(2), w2(1, 1)),
        (s(2), w2(1, 0)),
        (s(2), w2(2, 1)),
        (s(2), w2(2, 0)),
        (s(3), w2(2, 1)),
        (s(3), w2(2, 0)),
        (w2(1, 1), w3(1, 1)),
        (w2(1, 1), w3(1, 0)),
        (w2(1, 0), w3(0, 1)),
        (w2(1, 0), w3(0, 0)),
        (w2(2, 1), w3(0, 1)),
        (w2(2, 1), w3(1, 1)),
        (w2(2, 0), w3(0, 0)),
        (w2(2, 0), w3(1, 0)),
    ]
}
