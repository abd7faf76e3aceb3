//! Positive-root generation, grading elements and eigenspace decompositions.
//!
//! Roots are stored purely in simple-root coordinates (no Euclidean
//! embedding); every downstream formula is Cartan-integer arithmetic. The
//! coordinate order is the diagram's node labels sorted ascending.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::dynkin::{DynkinDiagram, Node};
use crate::error::{Error, Result};

/// A root: integer coefficients over the simple roots, all of one sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        let pos = coeffs.iter().any(|&c| c > 0);
        let neg = coeffs.iter().any(|&c| c < 0);
        if pos == neg {
            // both => mixed signs; neither => zero vector
            return Err(Error::MixedSigns);
        }
        Ok(Root(coeffs))
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// Sum of coefficients.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// Node labels carrying a nonzero coefficient.
    pub fn support(&self, diagram: &DynkinDiagram) -> BTreeSet<Node> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| diagram.node_at(i))
            .collect()
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.height(), &self.0).cmp(&(other.height(), &other.0))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A grading element `T = sum of S^i over the support`, where `{S^i}` is the
/// basis of the Cartan subalgebra dual to the simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingElement {
    support: BTreeSet<Node>,
}

impl GradingElement {
    pub fn new(support: BTreeSet<Node>) -> Self {
        GradingElement { support }
    }

    pub fn support(&self) -> &BTreeSet<Node> {
        &self.support
    }
}

/// A generated root system. Immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    diagram: DynkinDiagram,
    cartan: Vec<Vec<i64>>,
    positive: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    symmetrizer: Vec<i64>,
}

impl RootSystem {
    /// Generate all positive roots by the standard closure algorithm: start
    /// from the simple roots and add `a + a_j` whenever the root-string test
    /// permits. The list is sorted by height then lexicographically, and that
    /// order is part of the stable output contract.
    pub fn new(diagram: DynkinDiagram) -> Self {
        let r = diagram.rank();
        let cartan = diagram.cartan_matrix();
        let mut set: BTreeSet<Vec<i64>> = BTreeSet::new();
        for i in 0..r {
            let mut v = vec![0i64; r];
            v[i] = 1;
            set.insert(v);
        }
        loop {
            let mut added = Vec::new();
            for alpha in &set {
                for j in 0..r {
                    // p = how far the j-string extends downward from alpha.
                    let mut p = 0i64;
                    let mut down = alpha.clone();
                    loop {
                        down[j] -= 1;
                        if set.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..r).map(|k| alpha[k] * cartan[k][j]).sum();
                    if p - pairing > 0 {
                        let mut up = alpha.clone();
                        up[j] += 1;
                        if !set.contains(&up) {
                            added.push(up);
                        }
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            set.extend(added);
        }
        let mut positive: Vec<Root> = set.into_iter().map(Root).collect();
        positive.sort();
        let index = positive
            .iter()
            .enumerate()
            .map(|(i, root)| (root.0.clone(), i))
            .collect();
        let symmetrizer = diagram.symmetrizer();
        RootSystem { diagram, cartan, positive, index, symmetrizer }
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.positive[index]
    }

    /// Index of a positive root, if it is one.
    pub fn index_of(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        if self.index.contains_key(coeffs) {
            return true;
        }
        let neg: Vec<i64> = coeffs.iter().map(|c| -c).collect();
        self.index.contains_key(&neg)
    }

    pub fn simple_position(&self, node: Node) -> Result<usize> {
        self.diagram.position(node).ok_or(Error::NodeNotInDiagram(node))
    }

    /// The simple root attached to a node label.
    pub fn simple_root(&self, node: Node) -> Result<Root> {
        let pos = self.simple_position(node)?;
        let mut v = vec![0i64; self.rank()];
        v[pos] = 1;
        Ok(Root(v))
    }

    /// Index of the simple root attached to a node label.
    pub fn simple_root_index(&self, node: Node) -> Result<usize> {
        let root = self.simple_root(node)?;
        Ok(self.index_of(root.coeffs()).expect("simple root is positive"))
    }

    /// Cartan pairing `<alpha, a_j^v> = sum_k m^k C_kj` at coordinate `j`.
    pub(crate) fn pairing_at(&self, coeffs: &[i64], j: usize) -> i64 {
        (0..self.rank()).map(|k| coeffs[k] * self.cartan[k][j]).sum()
    }

    pub(crate) fn reflect_coeffs(&self, coeffs: &[i64], j: usize) -> Vec<i64> {
        let c = self.pairing_at(coeffs, j);
        let mut out = coeffs.to_vec();
        out[j] -= c;
        out
    }

    /// Simple reflection `s_node(alpha) = alpha - <alpha, a_node^v> a_node`.
    pub fn reflect(&self, alpha: &Root, node: Node) -> Result<Root> {
        if alpha.coeffs().len() != self.rank() {
            return Err(Error::RankMismatch);
        }
        if !self.is_root(alpha.coeffs()) {
            return Err(Error::NotARoot);
        }
        let j = self.simple_position(node)?;
        Root::new(self.reflect_coeffs(alpha.coeffs(), j))
    }

    /// Grade `alpha(T) = sum of coefficients over the support of T`.
    pub fn grade(&self, alpha: &Root, t: &GradingElement) -> Result<i64> {
        if alpha.coeffs().len() != self.rank() {
            return Err(Error::RankMismatch);
        }
        let mut sum = 0;
        for &node in t.support() {
            let pos = self.simple_position(node)?;
            sum += alpha.coeffs()[pos];
        }
        Ok(sum)
    }

    /// Partition of the positive roots by positive grade. Grade-0 positive
    /// roots are omitted: together with the Cartan they form the reductive
    /// degree-0 part; negative grades come from negating the listed roots.
    pub fn eigenspaces(&self, t: &GradingElement) -> Result<BTreeMap<i64, Vec<Root>>> {
        let mut out: BTreeMap<i64, Vec<Root>> = BTreeMap::new();
        for alpha in &self.positive {
            let g = self.grade(alpha, t)?;
            if g > 0 {
                out.entry(g).or_default().push(alpha.clone());
            }
        }
        Ok(out)
    }
}
