//! Weyl group elements, inversion sets, minimal coset representatives,
//! Bruhat order and parabolic longest elements.
//!
//! Conventions, pinned by the fixtures in the tests below: a word
//! `[i1, i2, ..., it]` denotes the composition `(i1) o (i2) o ... o (it)` of
//! simple reflections acting on the left, so the leftmost letter acts last.
//! Schubert cells sit in bijection with the right cosets `W_p \ W`; the
//! minimal representative criterion is `w^{-1}(a_j)` positive for every
//! unmarked `j`, equivalently no unmarked simple root lies in the inversion
//! set `D(w) = D+ n w(D-)`.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::dynkin::Node;
use crate::error::{Error, Result};
use crate::roots::{Root, RootSystem};

/// Default guard on coset enumeration size.
pub const DEFAULT_COSET_CAP: usize = 2_000_000;

/// Square integer matrix, row major, acting on simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub(crate) struct Mat {
    n: usize,
    a: Vec<i64>,
}

impl Mat {
    fn identity(n: usize) -> Self {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        Mat { n, a }
    }

    fn mul(&self, other: &Mat) -> Mat {
        let n = self.n;
        let mut a = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.a[i * n + k];
                if x != 0 {
                    for j in 0..n {
                        a[i * n + j] += x * other.a[k * n + j];
                    }
                }
            }
        }
        Mat { n, a }
    }

    fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        (0..n)
            .map(|i| (0..n).map(|j| self.a[i * n + j] * v[j]).sum())
            .collect()
    }
}

/// Reflection matrix of the simple root at coordinate `j`: row `j` becomes
/// `delta_jm - C_mj` (subtract the Cartan pairing from the `j`-th coefficient).
fn simple_matrix(rs: &RootSystem, j: usize) -> Mat {
    let n = rs.rank();
    let mut m = Mat::identity(n);
    for col in 0..n {
        m.a[j * n + col] = if col == j { 1 - rs.cartan()[col][j] } else { -rs.cartan()[col][j] };
    }
    m
}

/// A Weyl group element. Identity is the matrix; the stored word is the
/// lexicographically least reduced word and serves as a witness only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    mat: Mat,
    inv: Mat,
    word: Vec<Node>,
    inversions: Vec<usize>, // sorted indices into rs.positive_roots()
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        let id = Mat::identity(rs.rank());
        WeylElement { mat: id.clone(), inv: id, word: Vec::new(), inversions: Vec::new() }
    }

    pub fn simple(rs: &RootSystem, node: Node) -> Result<Self> {
        let j = rs.simple_position(node)?;
        let m = simple_matrix(rs, j);
        Ok(WeylElement {
            mat: m.clone(),
            inv: m,
            word: vec![node],
            inversions: vec![rs.simple_root_index(node)?],
        })
    }

    /// Build from a (not necessarily reduced) word of node labels.
    pub fn from_word(rs: &RootSystem, word: &[Node]) -> Result<Self> {
        let mut w = WeylElement::identity(rs);
        for &node in word {
            let s = WeylElement::simple(rs, node)?;
            w = compose(rs, &w, &s)?;
        }
        Ok(w)
    }

    pub(crate) fn from_mat(rs: &RootSystem, mat: Mat, inv: Mat) -> Self {
        let inversions = inversions_of(rs, &inv);
        let word = canonical_word(rs, &mat, &inversions);
        WeylElement { mat, inv, word, inversions }
    }

    pub fn length(&self) -> usize {
        self.inversions.len()
    }

    pub fn is_identity(&self) -> bool {
        self.inversions.is_empty()
    }

    /// Lexicographically least reduced word, leftmost letter acting last.
    pub fn word(&self) -> &[Node] {
        &self.word
    }

    /// Sorted indices of `D(w)` into the positive-root list.
    pub fn inversion_indices(&self) -> &[usize] {
        &self.inversions
    }

    /// The inversion set `D(w) = {a > 0 : w^{-1}(a) < 0}` as roots.
    pub fn inversion_set(&self, rs: &RootSystem) -> Vec<Root> {
        self.inversions.iter().map(|&i| rs.root(i).clone()).collect()
    }

    /// Action on simple-root coordinates.
    pub fn apply(&self, coeffs: &[i64]) -> Result<Vec<i64>> {
        if coeffs.len() != self.mat.n {
            return Err(Error::RankMismatch);
        }
        Ok(self.mat.apply(coeffs))
    }

    /// Action of the inverse on simple-root coordinates.
    pub fn apply_inverse(&self, coeffs: &[i64]) -> Result<Vec<i64>> {
        if coeffs.len() != self.inv.n {
            return Err(Error::RankMismatch);
        }
        Ok(self.inv.apply(coeffs))
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        WeylElement::from_mat(rs, self.inv.clone(), self.mat.clone())
    }

    /// Recompute the inversion set from the matrix (cache check).
    pub fn recompute_inversions(&self, rs: &RootSystem) -> Vec<usize> {
        inversions_of(rs, &self.inv)
    }

    /// Simple-root nodes in `D(w)`: the `j` with `l((j)w) < l(w)`.
    pub fn left_descents(&self, rs: &RootSystem) -> Vec<Node> {
        rs.diagram()
            .nodes()
            .iter()
            .copied()
            .filter(|&node| {
                let idx = rs.simple_root_index(node).expect("node of this system");
                self.inversions.binary_search(&idx).is_ok()
            })
            .collect()
    }
}

fn inversions_of(rs: &RootSystem, inv: &Mat) -> Vec<usize> {
    (0..rs.positive_roots().len())
        .filter(|&i| {
            let image = inv.apply(rs.root(i).coeffs());
            image.iter().all(|&c| c <= 0)
        })
        .collect()
}

/// The lexicographically least reduced word, by repeatedly stripping the
/// smallest left descent. Deletion-property bookkeeping is implicit: the
/// word is rebuilt from the matrix, never maintained by rewriting.
fn canonical_word(rs: &RootSystem, mat: &Mat, inversions: &[usize]) -> Vec<Node> {
    let mut word = Vec::with_capacity(inversions.len());
    let mut cur = mat.clone();
    let mut cur_inv_set: HashSet<usize> = inversions.iter().copied().collect();
    while !cur_inv_set.is_empty() {
        let node = rs
            .diagram()
            .nodes()
            .iter()
            .copied()
            .find(|&n| cur_inv_set.contains(&rs.simple_root_index(n).unwrap()))
            .expect("nonempty inversion set has a simple root");
        let j = rs.simple_position(node).unwrap();
        let s = simple_matrix(rs, j);
        cur = s.mul(&cur);
        word.push(node);
        // D((j)w) = (j)(D(w) \ {a_j}).
        let aj = rs.simple_root_index(node).unwrap();
        cur_inv_set = cur_inv_set
            .into_iter()
            .filter(|&i| i != aj)
            .map(|i| {
                let refl = rs.reflect_coeffs(rs.root(i).coeffs(), j);
                rs.index_of(&refl).expect("reflection of a non-simple inversion is positive")
            })
            .collect();
    }
    debug_assert_eq!(cur, Mat::identity(rs.rank()));
    word
}

/// Compose `u o v` (u acts after v).
pub fn compose(rs: &RootSystem, u: &WeylElement, v: &WeylElement) -> Result<WeylElement> {
    if u.mat.n != v.mat.n || u.mat.n != rs.rank() {
        return Err(Error::RankMismatch);
    }
    Ok(WeylElement::from_mat(rs, u.mat.mul(&v.mat), v.inv.mul(&u.inv)))
}

/// Minimal-representative test for the right coset `W_p w`, where `W_p` is
/// generated by the reflections at nodes outside the marked set `I`.
pub fn is_min_rep(rs: &RootSystem, w: &WeylElement, marked: &BTreeSet<Node>) -> bool {
    rs.diagram().nodes().iter().all(|&node| {
        marked.contains(&node) || {
            let idx = rs.simple_root_index(node).expect("node of this system");
            w.inversions.binary_search(&idx).is_err()
        }
    })
}

/// Table of minimal coset representatives with successor lookup.
#[derive(Debug, Clone)]
pub struct CosetTable {
    marked: BTreeSet<Node>,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<usize>, usize>, // keyed by inversion set
    parents: Vec<Vec<(usize, Node)>>,  // BFS links: (parent, appended letter)
}

impl CosetTable {
    pub fn marked(&self) -> &BTreeSet<Node> {
        &self.marked
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w.inversion_indices()).copied()
    }

    pub fn parents_of(&self, i: usize) -> &[(usize, Node)] {
        &self.parents[i]
    }
}

/// Enumerate all minimal representatives of `W_p \ W` of length at most
/// `max_length` (all of them when absent), by breadth-first search appending
/// simple reflections on the right: minimal representatives are closed under
/// right descents, so every representative is reached. Deduplication is by
/// inversion set.
pub fn enumerate_min_reps(
    rs: &RootSystem,
    marked: &BTreeSet<Node>,
    max_length: Option<usize>,
) -> Result<CosetTable> {
    enumerate_min_reps_capped(rs, marked, max_length, DEFAULT_COSET_CAP)
}

/// As [`enumerate_min_reps`] with an explicit size guard.
pub fn enumerate_min_reps_capped(
    rs: &RootSystem,
    marked: &BTreeSet<Node>,
    max_length: Option<usize>,
    cap: usize,
) -> Result<CosetTable> {
    let elements = bfs_min_reps(rs, marked, max_length, cap, |_, _| true)?;
    Ok(build_table(rs, marked, elements))
}

pub(crate) fn build_table(
    rs: &RootSystem,
    marked: &BTreeSet<Node>,
    mut elements: Vec<WeylElement>,
) -> CosetTable {
    elements.sort_by(|a, b| (a.length(), a.word()).cmp(&(b.length(), b.word())));
    let index: HashMap<Vec<usize>, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, w)| (w.inversions.clone(), i))
        .collect();
    let mut parents = vec![Vec::new(); elements.len()];
    for (i, w) in elements.iter().enumerate() {
        for &node in rs.diagram().nodes() {
            // w = v o (node) with l(v) = l(w) - 1 iff w(a_node) < 0.
            let j = rs.simple_position(node).unwrap();
            let mut e = vec![0i64; rs.rank()];
            e[j] = 1;
            if w.mat.apply(&e).iter().all(|&c| c <= 0) {
                let s = simple_matrix(rs, j);
                let vmat = w.mat.mul(&s);
                let vinv = s.mul(&w.inv);
                let v = WeylElement::from_mat(rs, vmat, vinv);
                if let Some(&p) = index.get(&v.inversions) {
                    parents[i].push((p, node));
                }
            }
        }
    }
    CosetTable { marked: marked.clone(), elements, index, parents }
}

/// BFS core. `admit(rs, added_root_index)` can veto the newly added inversion
/// root, pruning the branch (used for the horizontal enumeration, where the
/// admitted set is a lower order ideal).
pub(crate) fn bfs_min_reps(
    rs: &RootSystem,
    marked: &BTreeSet<Node>,
    max_length: Option<usize>,
    cap: usize,
    mut admit: impl FnMut(&RootSystem, usize) -> bool,
) -> Result<Vec<WeylElement>> {
    let simple_indices: Vec<(Node, usize, usize)> = rs
        .diagram()
        .nodes()
        .iter()
        .map(|&n| {
            (n, rs.simple_position(n).unwrap(), rs.simple_root_index(n).unwrap())
        })
        .collect();
    let unmarked_simple_indices: BTreeSet<usize> = simple_indices
        .iter()
        .filter(|(n, _, _)| !marked.contains(n))
        .map(|&(_, _, idx)| idx)
        .collect();

    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out: Vec<WeylElement> = Vec::new();
    let mut frontier = vec![WeylElement::identity(rs)];
    seen.insert(Vec::new());
    let mut length = 0usize;
    while !frontier.is_empty() {
        out.extend(frontier.iter().cloned());
        if out.len() > cap {
            return Err(Error::EnumerationCapExceeded { cap });
        }
        if max_length.is_some_and(|m| length >= m) {
            break;
        }
        let mut next = Vec::new();
        for w in &frontier {
            for &(_, j, _) in &simple_indices {
                let mut e = vec![0i64; rs.rank()];
                e[j] = 1;
                let image = w.mat.apply(&e);
                if image.iter().all(|&c| c >= 0) {
                    // l(w o (node)) = l(w) + 1; D grows by w(a_node).
                    let added = rs.index_of(&image).expect("positive image is a root");
                    if unmarked_simple_indices.contains(&added) || !admit(rs, added) {
                        continue;
                    }
                    let mut inv_key = w.inversions.clone();
                    match inv_key.binary_search(&added) {
                        Ok(_) => unreachable!("added inversion is new"),
                        Err(pos) => inv_key.insert(pos, added),
                    }
                    if seen.insert(inv_key) {
                        let s = simple_matrix(rs, j);
                        next.push(WeylElement::from_mat(
                            rs,
                            w.mat.mul(&s),
                            s.mul(&w.inv),
                        ));
                    }
                }
            }
        }
        frontier = next;
        length += 1;
    }
    Ok(out)
}

/// Bruhat order `v <= w`, via the lifting property on left descents.
pub fn bruhat_leq(rs: &RootSystem, v: &WeylElement, w: &WeylElement) -> Result<bool> {
    if v.mat.n != rs.rank() || w.mat.n != rs.rank() {
        return Err(Error::RankMismatch);
    }
    Ok(bruhat_rec(rs, v.clone(), w.clone()))
}

fn bruhat_rec(rs: &RootSystem, v: WeylElement, w: WeylElement) -> bool {
    if v.length() > w.length() {
        return false;
    }
    if w.is_identity() {
        return v.is_identity();
    }
    let node = w.left_descents(rs)[0];
    let s = WeylElement::simple(rs, node).expect("node of this system");
    let sw = compose(rs, &s, &w).expect("same system");
    let aj = rs.simple_root_index(node).unwrap();
    if v.inversions.binary_search(&aj).is_ok() {
        let sv = compose(rs, &s, &v).expect("same system");
        bruhat_rec(rs, sv, sw)
    } else {
        bruhat_rec(rs, v, sw)
    }
}

/// Longest element of the standard parabolic subgroup generated by the
/// simple reflections at `generators` (identity when empty).
pub fn longest_element(rs: &RootSystem, generators: &BTreeSet<Node>) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    loop {
        let next = generators.iter().copied().find(|&node| {
            let j = rs.simple_position(node).expect("node of this system");
            let mut e = vec![0i64; rs.rank()];
            e[j] = 1;
            w.mat.apply(&e).iter().all(|&c| c >= 0)
        });
        match next {
            Some(node) => {
                let s = WeylElement::simple(rs, node).unwrap();
                w = compose(rs, &w, &s).unwrap();
            }
            None => return w,
        }
    }
}

/// Map the minimal representative of a coset of the parabolic generated by
/// `generators` to the maximal one: `w0(W_J) . w`, with additive lengths.
pub fn min_to_max(
    rs: &RootSystem,
    w: &WeylElement,
    generators: &BTreeSet<Node>,
) -> Result<WeylElement> {
    for &node in generators {
        let idx = rs.simple_root_index(node)?;
        if w.inversions.binary_search(&idx).is_ok() {
            return Err(Error::NotMinimalRepresentative);
        }
    }
    let w0 = longest_element(rs, generators);
    let out = compose(rs, &w0, w)?;
    debug_assert_eq!(out.length(), w0.length() + w.length());
    Ok(out)
}

/// Project onto the minimal representative of the coset `W_p w`, stripping
/// left descents outside the marked set.
pub fn min_rep_of_coset(
    rs: &RootSystem,
    w: &WeylElement,
    marked: &BTreeSet<Node>,
) -> WeylElement {
    let mut cur = w.clone();
    loop {
        let descent = cur
            .left_descents(rs)
            .into_iter()
            .find(|node| !marked.contains(node));
        match descent {
            Some(node) => {
                let s = WeylElement::simple(rs, node).unwrap();
                cur = compose(rs, &s, &cur).unwrap();
            }
            None => return cur,
        }
    }
}
