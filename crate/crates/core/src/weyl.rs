//! Simply-laced Weyl groups of types A and D as signed-permutation groups:
//! window notation, length, covers, join-irreducible classification, the
//! canonical reduced expressions for join-irreducibles, and full enumeration
//! with dense element ids.
//!
//! Elements are one-line windows. In type `A_n` a window is a permutation of
//! `{1..n+1}`; in type `D_n` it is `[i_1,..,i_n]` where `|i_1|,..,|i_n|` is a
//! permutation of `1..n` and the number of negative entries is even. Products
//! compose as functions: `(uv)(i) = u(v(i))`.

use std::collections::HashMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    D,
    E,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeylError {
    InvalidRank(Family, usize),
    Unsupported(CartanType),
    TypeMismatch,
    BadWindow(Vec<i32>),
    NotJoinIrreducible(Vec<i32>),
    NotReduced(Vec<i32>),
}

impl fmt::Display for WeylError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylError::InvalidRank(fam, n) => write!(f, "invalid rank {n} for family {fam:?}"),
            WeylError::Unsupported(t) => write!(
                f,
                "type {:?}_{} is not supported by this build (only A and D are)",
                t.family, t.rank
            ),
            WeylError::TypeMismatch => write!(f, "elements of different Cartan types"),
            WeylError::BadWindow(w) => write!(f, "not a valid window: {w:?}"),
            WeylError::NotJoinIrreducible(w) => write!(f, "{w:?} is not join-irreducible"),
            WeylError::NotReduced(word) => write!(f, "word {word:?} is not reduced"),
        }
    }
}

impl std::error::Error for WeylError {}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self, WeylError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => rank == 6,
        };
        if !ok {
            return Err(WeylError::InvalidRank(family, rank));
        }
        Ok(CartanType { family, rank })
    }

    /// Only A and D carry the window/array combinatorics of this crate.
    pub fn require_supported(&self) -> Result<(), WeylError> {
        match self.family {
            Family::A | Family::D => Ok(()),
            Family::E => Err(WeylError::Unsupported(*self)),
        }
    }

    /// Simple-reflection labels: `1..n` for A_n, `[-1, 1, 2, .., n-1]` for D_n.
    pub fn simple_labels(&self) -> Vec<i32> {
        match self.family {
            Family::A => (1..=self.rank as i32).collect(),
            Family::D => {
                let mut v = vec![-1_i32];
                v.extend(1..self.rank as i32);
                v
            }
            Family::E => Vec::new(),
        }
    }

    pub fn window_len(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::D => self.rank,
            Family::E => 0,
        }
    }

    pub fn group_order(&self) -> u64 {
        let n = self.rank as u32;
        match self.family {
            Family::A => (1..=n as u64 + 1).product(),
            Family::D => (1..=n as u64).product::<u64>() * (1u64 << (n - 1)),
            Family::E => 51840,
        }
    }

    /// Coxeter number.
    pub fn coxeter_number(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::D => 2 * self.rank - 2,
            Family::E => 12,
        }
    }

    /// Closed-form number of join-irreducible elements.
    pub fn jirr_count_formula(&self) -> u64 {
        let n = self.rank as u32;
        match self.family {
            Family::A => 2u64.pow(n + 1) - n as u64 - 2,
            Family::D => 3u64.pow(n) - n as u64 * 2u64.pow(n - 1) - n as u64 - 1,
            Family::E => 0,
        }
    }

    /// Closed-form count of join-irreducibles of the given descent type.
    pub fn jirr_count_of_type(&self, ell: i32) -> u64 {
        let n = self.rank as u64;
        match self.family {
            Family::A => binomial(n + 1, ell as u64) - 1,
            Family::D => {
                if ell == 1 || ell == -1 {
                    2u64.pow(self.rank as u32 - 1) - 1
                } else {
                    2u64.pow((n - ell as u64) as u32) * binomial(n, ell as u64) - 1
                }
            }
            Family::E => 0,
        }
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub cartan: CartanType,
    pub window: Vec<i32>,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.window.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Join-irreducibility verdict: the unique descent type when it exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JirrClass {
    NotJirr,
    Jirr { descent_type: i32, lower: WeylElement },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedWord {
    pub letters: Vec<i32>,
}

impl WeylElement {
    pub fn identity(cartan: CartanType) -> Result<Self, WeylError> {
        cartan.require_supported()?;
        Ok(WeylElement {
            cartan,
            window: (1..=cartan.window_len() as i32).collect(),
        })
    }

    pub fn from_window(cartan: CartanType, window: Vec<i32>) -> Result<Self, WeylError> {
        cartan.require_supported()?;
        let n = cartan.window_len();
        let bad = || WeylError::BadWindow(window.clone());
        if window.len() != n {
            return Err(bad());
        }
        let mut seen = vec![false; n];
        let mut negatives = 0;
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a - 1] {
                return Err(bad());
            }
            seen[a - 1] = true;
            if x < 0 {
                negatives += 1;
            }
        }
        match cartan.family {
            Family::A => {
                if negatives != 0 {
                    return Err(bad());
                }
            }
            Family::D => {
                if negatives % 2 != 0 {
                    return Err(bad());
                }
            }
            Family::E => unreachable!(),
        }
        Ok(WeylElement { cartan, window })
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(k, &x)| x == k as i32 + 1)
    }

    /// The image of a signed point under this element (`w(-l) = -w(l)`).
    pub fn image(&self, point: i32) -> i32 {
        let a = point.unsigned_abs() as usize;
        let v = self.window[a - 1];
        if point < 0 {
            -v
        } else {
            v
        }
    }

    /// Product under `(uv)(i) = u(v(i))`.
    pub fn multiply(&self, other: &WeylElement) -> Result<WeylElement, WeylError> {
        if self.cartan != other.cartan {
            return Err(WeylError::TypeMismatch);
        }
        let window = (1..=self.window.len() as i32)
            .map(|i| self.image(other.image(i)))
            .collect();
        Ok(WeylElement {
            cartan: self.cartan,
            window,
        })
    }

    pub fn inverse(&self) -> WeylElement {
        let n = self.window.len();
        let mut window = vec![0; n];
        for (k, &x) in self.window.iter().enumerate() {
            let a = x.unsigned_abs() as usize;
            window[a - 1] = if x < 0 { -(k as i32 + 1) } else { k as i32 + 1 };
        }
        WeylElement {
            cartan: self.cartan,
            window,
        }
    }

    pub fn simple_reflection(cartan: CartanType, label: i32) -> Result<WeylElement, WeylError> {
        let id = WeylElement::identity(cartan)?;
        id.right_multiply_simple(label)
    }

    /// `w * s_label` (window-local rewrite).
    pub fn right_multiply_simple(&self, label: i32) -> Result<WeylElement, WeylError> {
        let mut window = self.window.clone();
        match (self.cartan.family, label) {
            (Family::A, l) if l >= 1 && (l as usize) < window.len() => {
                window.swap(l as usize - 1, l as usize);
            }
            (Family::D, -1) => {
                let (a, b) = (window[0], window[1]);
                window[0] = -b;
                window[1] = -a;
            }
            (Family::D, l) if l >= 1 && (l as usize) < window.len() => {
                window.swap(l as usize - 1, l as usize);
            }
            _ => return Err(WeylError::BadWindow(vec![label])),
        }
        Ok(WeylElement {
            cartan: self.cartan,
            window,
        })
    }

    /// Coxeter length: inversion count for A, the signed count for D.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let n = w.len();
        let mut len = 0;
        for l in 0..n {
            for m in (l + 1)..n {
                if w[l] > w[m] {
                    len += 1;
                }
                if self.cartan.family == Family::D && -w[l] > w[m] {
                    len += 1;
                }
            }
        }
        len
    }

    /// Whether `s_label` is a right descent, i.e. `l(w s) < l(w)`.
    pub fn is_descent(&self, label: i32) -> bool {
        match (self.cartan.family, label) {
            (Family::A, l) => self.window[l as usize - 1] > self.window[l as usize],
            (Family::D, -1) => -self.window[0] > self.window[1],
            (Family::D, l) => self.window[l as usize - 1] > self.window[l as usize],
            (Family::E, _) => unreachable!(),
        }
    }

    /// All right descents, with the covered elements `w s_i`; label order is
    /// increasing (for D: `-1` first).
    pub fn lower_covers(&self) -> Vec<(i32, WeylElement)> {
        self.cartan
            .simple_labels()
            .into_iter()
            .filter(|&l| self.is_descent(l))
            .map(|l| (l, self.right_multiply_simple(l).unwrap()))
            .collect()
    }

    /// Right ascents, with the covering elements `w s_i`.
    pub fn upper_covers(&self) -> Vec<(i32, WeylElement)> {
        self.cartan
            .simple_labels()
            .into_iter()
            .filter(|&l| !self.is_descent(l))
            .map(|l| (l, self.right_multiply_simple(l).unwrap()))
            .collect()
    }

    pub fn classify_jirr(&self) -> JirrClass {
        let covers = self.lower_covers();
        if covers.len() == 1 && !self.is_identity() {
            let (descent_type, lower) = covers.into_iter().next().unwrap();
            JirrClass::Jirr {
                descent_type,
                lower,
            }
        } else {
            JirrClass::NotJirr
        }
    }

    /// Meet-irreducible check: exactly one upper cover; returns the ascent
    /// label and `m^* = m s_i`.
    pub fn classify_mirr(&self) -> Option<(i32, WeylElement)> {
        let mut ups = self.upper_covers();
        if ups.len() == 1 {
            Some(ups.remove(0))
        } else {
            None
        }
    }

    pub fn longest_element(cartan: CartanType) -> Result<WeylElement, WeylError> {
        cartan.require_supported()?;
        let n = cartan.window_len() as i32;
        let window = match cartan.family {
            Family::A => (1..=n).rev().collect(),
            Family::D => {
                if cartan.rank.is_multiple_of(2) {
                    (1..=n).map(|i| -i).collect()
                } else {
                    // w0 = -1 composed with the diagram flip when n is odd
                    let mut w: Vec<i32> = (1..=n).map(|i| -i).collect();
                    w[0] = 1;
                    w
                }
            }
            Family::E => unreachable!(),
        };
        Ok(WeylElement { cartan, window })
    }

    /// Evaluate a word of simple reflections left to right.
    pub fn evaluate_word(cartan: CartanType, letters: &[i32]) -> Result<WeylElement, WeylError> {
        let mut w = WeylElement::identity(cartan)?;
        // (s_{a_1} ... s_{a_k}) = ((s_{a_1} ... s_{a_{k-1}}) * s_{a_k})
        for &l in letters {
            w = w.right_multiply_simple(l)?;
        }
        Ok(w)
    }

    /// A deterministic reduced word: smallest descent label stripped from the
    /// right, recursively.
    pub fn reduced_word(&self) -> ReducedWord {
        let mut letters = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while !w.is_identity() {
            let (l, lower) = w.lower_covers().into_iter().next().unwrap();
            letters.push(l);
            w = lower;
        }
        letters.reverse();
        ReducedWord { letters }
    }

    /// The canonical factored reduced word of a join-irreducible element.
    ///
    /// Type A of descent type `l`: `w = x_{n+1} x_n ... x_{l+1}` with
    /// `x_m = s_{i_m} s_{i_m+1} .. s_{m-1}` (empty when `i_m = m`).
    /// Type D splits into the `l = ±1` shape and the general shape driven by
    /// `j_m = i_m + #{m' >= m : |i_{m'}| <= |i_m|}`.
    pub fn jirr_reduced_word(&self) -> Result<ReducedWord, WeylError> {
        let JirrClass::Jirr { descent_type, .. } = self.classify_jirr() else {
            return Err(WeylError::NotJoinIrreducible(self.window.clone()));
        };
        let w = &self.window;
        let mut letters: Vec<i32> = Vec::new();
        match self.cartan.family {
            Family::A => {
                let n1 = w.len(); // n + 1
                for m in ((descent_type as usize + 1)..=n1).rev() {
                    let im = w[m - 1];
                    letters.extend(im..=(m as i32 - 1));
                }
            }
            Family::D => {
                let n = w.len();
                if descent_type == 1 || descent_type == -1 {
                    let ell = descent_type;
                    for m in (2..=n).rev() {
                        let im = w[m - 1];
                        if im >= 2 {
                            letters.extend(im..=(m as i32 - 1));
                        } else {
                            let sign = if m % 2 == 0 { ell } else { -ell };
                            letters.push(sign);
                            letters.extend(2..=(m as i32 - 1));
                        }
                    }
                } else {
                    let ell = descent_type as usize;
                    for m in ((ell + 1)..=n).rev() {
                        let im = w[m - 1];
                        let jm = im
                            + (m..=n).filter(|&mp| w[mp - 1].abs() <= im.abs()).count() as i32;
                        if jm > 0 {
                            letters.extend(im..=(m as i32 - 1));
                        } else if jm == 0 {
                            let negs = (m..=n).filter(|&mp| w[mp - 1] < 0).count();
                            let eps = if negs % 2 == 0 { 1 } else { -1 };
                            letters.push(eps);
                            letters.extend(2..=(m as i32 - 1));
                        } else if jm == -1 {
                            letters.push(-1);
                            letters.extend(1..=(m as i32 - 1));
                        } else {
                            letters.extend((2..=-jm).rev());
                            letters.push(-1);
                            letters.extend(1..=(m as i32 - 1));
                        }
                    }
                }
            }
            Family::E => unreachable!(),
        }
        let word = ReducedWord { letters };
        debug_assert_eq!(word.letters.len(), self.length());
        debug_assert_eq!(
            &WeylElement::evaluate_word(self.cartan, &word.letters).unwrap(),
            self
        );
        Ok(word)
    }
}

/// Per-type breakdown of join-irreducible counts, checked two ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JirrCount {
    pub total_formula: u64,
    pub total_enumerated: u64,
    pub by_type: Vec<(i32, u64)>,
}

/// The whole group, enumerated by BFS over right multiplication and interned
/// into dense ids sorted by (length, window).
pub struct WeylGroup {
    pub cartan: CartanType,
    pub elements: Vec<WeylElement>,
    pub lengths: Vec<usize>,
    index: HashMap<Vec<i32>, usize>,
    /// `right_mul[e][k]` is the id of `elements[e] * s` for the k-th simple label.
    pub right_mul: Vec<Vec<usize>>,
    pub simple_labels: Vec<i32>,
}

impl WeylGroup {
    pub fn enumerate(cartan: CartanType) -> Result<WeylGroup, WeylError> {
        cartan.require_supported()?;
        let labels = cartan.simple_labels();
        let id = WeylElement::identity(cartan)?;
        let mut seen: HashMap<Vec<i32>, usize> = HashMap::new();
        let mut elements = vec![id.clone()];
        seen.insert(id.window.clone(), 0);
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for &l in &labels {
                let next = elements[e].right_multiply_simple(l)?;
                if !seen.contains_key(&next.window) {
                    seen.insert(next.window.clone(), elements.len());
                    elements.push(next);
                    queue.push_back(elements.len() - 1);
                }
            }
        }
        elements.sort_by(|a, b| {
            (a.length(), &a.window).cmp(&(b.length(), &b.window))
        });
        let index: HashMap<Vec<i32>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.window.clone(), i))
            .collect();
        let lengths: Vec<usize> = elements.iter().map(|e| e.length()).collect();
        let right_mul = elements
            .iter()
            .map(|e| {
                labels
                    .iter()
                    .map(|&l| index[&e.right_multiply_simple(l).unwrap().window])
                    .collect()
            })
            .collect();
        Ok(WeylGroup {
            cartan,
            elements,
            lengths,
            index,
            right_mul,
            simple_labels: labels,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn id_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(&w.window).copied()
    }

    pub fn label_pos(&self, label: i32) -> usize {
        self.simple_labels
            .iter()
            .position(|&l| l == label)
            .expect("valid simple label")
    }

    pub fn right_mul_label(&self, e: usize, label: i32) -> usize {
        self.right_mul[e][self.label_pos(label)]
    }

    pub fn identity_id(&self) -> usize {
        0
    }

    pub fn longest_id(&self) -> usize {
        self.order() - 1
    }

    /// `v <= w` in right weak order, by the length formula
    /// `l(w) = l(v) + l(v^{-1} w)`.
    pub fn weak_leq(&self, v: usize, w: usize) -> bool {
        let vi = self.elements[v].inverse();
        let prod = vi.multiply(&self.elements[w]).unwrap();
        self.lengths[v] + prod.length() == self.lengths[w]
    }

    /// Enumerated and closed-form join-irreducible counts (with per-type split).
    pub fn count_jirr(&self) -> JirrCount {
        let mut by_type: Vec<(i32, u64)> = self
            .cartan
            .simple_labels()
            .into_iter()
            .map(|l| (l, 0))
            .collect();
        let mut total = 0;
        for e in &self.elements {
            if let JirrClass::Jirr { descent_type, .. } = e.classify_jirr() {
                total += 1;
                let slot = by_type
                    .iter_mut()
                    .find(|(l, _)| *l == descent_type)
                    .unwrap();
                slot.1 += 1;
            }
        }
        JirrCount {
            total_formula: self.cartan.jirr_count_formula(),
            total_enumerated: total,
            by_type,
        }
    }

    /// Ids of all join-irreducible elements.
    pub fn jirr_ids(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| matches!(self.elements[i].classify_jirr(), JirrClass::Jirr { .. }))
            .collect()
    }

    /// Ids of all meet-irreducible elements.
    pub fn mirr_ids(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&i| self.elements[i].classify_mirr().is_some())
            .collect()
    }

    /// All reduced words of an element (descent recursion). Exponential in
    /// general; meant for the small ranks where exhaustiveness is required.
    pub fn all_reduced_words(&self, e: usize) -> Vec<Vec<i32>> {
        if self.lengths[e] == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (l, lower) in self.elements[e].lower_covers() {
            let lid = self.id_of(&lower).unwrap();
            for mut word in self.all_reduced_words(lid) {
                word.push(l);
                out.push(word);
            }
        }
        out
    }

    /// Deterministically sampled reduced words (random descent walks with a
    /// fixed seed); duplicates possible, which is fine for well-definedness
    /// sweeps.
    pub fn sample_reduced_words(&self, e: usize, count: usize, seed: u64) -> Vec<Vec<i32>> {
        let mut rng = crate::scalar::SmallRng::new(seed ^ (e as u64).wrapping_mul(0x9E3779B97F4A7C15));
        (0..count)
            .map(|_| {
                let mut word = Vec::with_capacity(self.lengths[e]);
                let mut cur = self.elements[e].clone();
                while !cur.is_identity() {
                    let covers = cur.lower_covers();
                    let pick = (rng.next_u64() % covers.len() as u64) as usize;
                    let (l, lower) = covers.into_iter().nth(pick).unwrap();
                    word.push(l);
                    cur = lower;
                }
                word.reverse();
                word
            })
            .collect()
    }
}
