//! Parabolic contexts, Schubert data, the horizontality test, enumeration of
//! the horizontal set, Hasse posets, and reconstruction of a Weyl element
//! from its inversion set.

use std::collections::{BTreeMap, BTreeSet};

use crate::dynkin::{parse_diagram, MarkedDiagram, Node};
use crate::error::{Error, Result};
use crate::roots::{GradingElement, Root, RootSystem};
use crate::weyl::{
    self, bfs_min_reps, bruhat_leq, is_min_rep, WeylElement, DEFAULT_COSET_CAP,
};

/// A root system with a marked node set `I`, the grading element
/// `E = sum of S^i over I`, and the induced eigenspace decomposition.
#[derive(Debug, Clone)]
pub struct ParabolicContext {
    root_system: RootSystem,
    marked: BTreeSet<Node>,
    grading: GradingElement,
    eigenspaces: BTreeMap<i64, Vec<Root>>,
    key: String,
}

impl ParabolicContext {
    pub fn new(md: MarkedDiagram) -> Self {
        let key = md.render();
        let marked = md.marked().clone();
        let root_system = RootSystem::new(md.diagram);
        let grading = GradingElement::new(marked.clone());
        let eigenspaces = root_system
            .eigenspaces(&grading)
            .expect("marked nodes belong to the diagram");
        ParabolicContext { root_system, marked, grading, eigenspaces, key }
    }

    pub fn from_spec(text: &str) -> Result<Self> {
        Ok(Self::new(parse_diagram(text)?))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn marked(&self) -> &BTreeSet<Node> {
        &self.marked
    }

    pub fn grading(&self) -> &GradingElement {
        &self.grading
    }

    pub fn eigenspaces(&self) -> &BTreeMap<i64, Vec<Root>> {
        &self.eigenspaces
    }

    /// Canonical spec string; doubles as the context fingerprint.
    pub fn key(&self) -> &str {
        &self.key
    }

    /// `dim G/P`: number of positive roots of positive grade.
    pub fn dimension(&self) -> usize {
        self.eigenspaces.values().map(|v| v.len()).sum()
    }

    /// Roots of grade one (the horizontal directions).
    pub fn grade_one(&self) -> &[Root] {
        self.eigenspaces.get(&1).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// The context is cominuscule exactly when grade one is everything.
    pub fn is_cominuscule(&self) -> bool {
        self.eigenspaces.keys().all(|&g| g == 1)
    }

    /// Unmarked nodes: generator set of the parabolic subgroup `W_p`.
    pub fn unmarked(&self) -> BTreeSet<Node> {
        self.root_system
            .diagram()
            .nodes()
            .iter()
            .copied()
            .filter(|n| !self.marked.contains(n))
            .collect()
    }
}

/// A Schubert variety datum attached to a minimal coset representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertDatum {
    w: WeylElement,
    delta: Vec<Root>,
    dim: usize,
    grade_profile: Vec<i64>,
    rho_e: i64,
    horizontal: bool,
    context_key: String,
}

impl SchubertDatum {
    pub fn weyl(&self) -> &WeylElement {
        &self.w
    }

    /// The inversion set `D(w)`, sorted by height then lexicographically.
    pub fn delta(&self) -> &[Root] {
        &self.delta
    }

    /// `dim X_w = |D(w)| = l(w)`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sorted multiset `{a(E) : a in D(w)}`.
    pub fn grade_profile(&self) -> &[i64] {
        &self.grade_profile
    }

    /// `rho_w(E) = sum of a(E) over D(w)`.
    pub fn rho_e(&self) -> i64 {
        self.rho_e
    }

    pub fn horizontal(&self) -> bool {
        self.horizontal
    }

    pub fn context_key(&self) -> &str {
        &self.context_key
    }
}

/// Build the datum of a minimal representative: dimension, grade profile,
/// `rho_w(E)` and the horizontality flag.
///
/// Horizontality is decided by the grade profile (every grade equals one);
/// the arithmetic form `rho_w(E) = |w|` is checked against it.
pub fn datum(ctx: &ParabolicContext, w: &WeylElement) -> Result<SchubertDatum> {
    let rs = ctx.root_system();
    if !is_min_rep(rs, w, ctx.marked()) {
        return Err(Error::NotMinimalRepresentative);
    }
    let delta = w.inversion_set(rs);
    let mut grade_profile: Vec<i64> = delta
        .iter()
        .map(|a| rs.grade(a, ctx.grading()).expect("root of this system"))
        .collect();
    grade_profile.sort_unstable();
    let rho_e: i64 = grade_profile.iter().sum();
    let dim = delta.len();
    let horizontal = grade_profile.iter().all(|&g| g == 1);
    assert_eq!(
        horizontal,
        rho_e == dim as i64,
        "grade-profile and rho_w(E) horizontality tests disagree"
    );
    Ok(SchubertDatum {
        w: w.clone(),
        delta,
        dim,
        grade_profile,
        rho_e,
        horizontal,
        context_key: ctx.key().to_string(),
    })
}

/// Enumerate the horizontal Schubert data, ordered by (dim, word).
///
/// With `prune` the BFS cuts a branch as soon as a non-grade-one root enters
/// the inversion set; this is exhaustive because sub-Schubert varieties of
/// horizontal Schubert varieties are horizontal, so the horizontal set is a
/// lower order ideal. Without `prune` the search runs to the length cap
/// `|D(g^1)|` (horizontality forces `dim <= dim g^1`) and filters afterward.
pub fn enumerate_hsv(ctx: &ParabolicContext, prune: bool) -> Result<Vec<SchubertDatum>> {
    enumerate_hsv_capped(ctx, prune, DEFAULT_COSET_CAP)
}

/// As [`enumerate_hsv`] with an explicit enumeration guard.
pub fn enumerate_hsv_capped(
    ctx: &ParabolicContext,
    prune: bool,
    cap: usize,
) -> Result<Vec<SchubertDatum>> {
    let rs = ctx.root_system();
    let cap_len = ctx.grade_one().len();
    let elements = if prune {
        bfs_min_reps(rs, ctx.marked(), Some(cap_len), cap, |rs, added| {
            rs.grade(rs.root(added), ctx.grading()).expect("root of this system") == 1
        })?
    } else {
        bfs_min_reps(rs, ctx.marked(), Some(cap_len), cap, |_, _| true)?
    };
    let mut data: Vec<SchubertDatum> = elements
        .iter()
        .map(|w| datum(ctx, w).expect("BFS produces minimal representatives"))
        .filter(|d| d.horizontal)
        .collect();
    data.sort_by(|a, b| (a.dim, a.w.word()).cmp(&(b.dim, b.w.word())));
    Ok(data)
}

/// All Schubert data of the context (the full coset table), ordered by
/// (dim, word).
pub fn enumerate_all(
    ctx: &ParabolicContext,
    max_length: Option<usize>,
) -> Result<Vec<SchubertDatum>> {
    let table = weyl::enumerate_min_reps(ctx.root_system(), ctx.marked(), max_length)?;
    let mut data: Vec<SchubertDatum> = table
        .elements()
        .iter()
        .map(|w| datum(ctx, w).expect("table holds minimal representatives"))
        .collect();
    data.sort_by(|a, b| (a.dim, a.w.word()).cmp(&(b.dim, b.w.word())));
    Ok(data)
}

/// Cover-relation edge list on the given data: pairs `(v, w)` with
/// `dim w = dim v + 1` and `v <= w` in Bruhat order, as indices into `data`.
pub fn hasse_edges(
    ctx: &ParabolicContext,
    data: &[SchubertDatum],
) -> Result<Vec<(usize, usize)>> {
    let rs = ctx.root_system();
    if data.iter().any(|d| d.context_key != ctx.key()) {
        return Err(Error::MixedContexts);
    }
    let mut edges = Vec::new();
    for (i, lo) in data.iter().enumerate() {
        for (j, hi) in data.iter().enumerate() {
            if hi.dim == lo.dim + 1 && bruhat_leq(rs, &lo.w, &hi.w)? {
                edges.push((i, j));
            }
        }
    }
    Ok(edges)
}

/// Maximal elements of `data` under Bruhat order, as indices.
pub fn maximal_elements(ctx: &ParabolicContext, data: &[SchubertDatum]) -> Result<Vec<usize>> {
    let rs = ctx.root_system();
    let mut out = Vec::new();
    for (i, d) in data.iter().enumerate() {
        let mut maximal = true;
        for (j, e) in data.iter().enumerate() {
            if i != j && e.dim > d.dim && bruhat_leq(rs, &d.w, &e.w)? {
                maximal = false;
                break;
            }
        }
        if maximal {
            out.push(i);
        }
    }
    Ok(out)
}

/// Reconstruct the unique `w` with inversion set `S`, if it exists: repeatedly
/// extract a simple root `a_j` from `S`, replace `S` by `(j)(S \ {a_j})`, and
/// append `j` to the word being peeled off the left.
pub fn weyl_from_root_subset(ctx: &ParabolicContext, subset: &[Root]) -> Result<WeylElement> {
    let rs = ctx.root_system();
    let mut current: BTreeSet<usize> = BTreeSet::new();
    for root in subset {
        let idx = rs.index_of(root.coeffs()).ok_or(Error::NotARoot)?;
        current.insert(idx);
    }
    let target: Vec<usize> = current.iter().copied().collect();

    let mut word = Vec::with_capacity(current.len());
    while !current.is_empty() {
        let node = rs
            .diagram()
            .nodes()
            .iter()
            .copied()
            .find(|&n| current.contains(&rs.simple_root_index(n).expect("diagram node")))
            .ok_or(Error::NotAnInversionSet)?;
        let j = rs.simple_position(node).unwrap();
        let aj = rs.simple_root_index(node).unwrap();
        current = current
            .into_iter()
            .filter(|&i| i != aj)
            .map(|i| {
                let refl = rs.reflect_coeffs(rs.root(i).coeffs(), j);
                rs.index_of(&refl)
                    .expect("simple reflection fixes the other positive roots")
            })
            .collect();
        word.push(node);
    }
    let w = WeylElement::from_word(rs, &word)?;
    if w.inversion_indices() != target.as_slice() {
        return Err(Error::NotAnInversionSet);
    }
    Ok(w)
}
