//! Dynkin diagrams: construction, parsing, validation and decomposition.
//!
//! Diagrams are stored as labeled multigraphs. Node labels follow these
//! reference conventions for each simple type:
//!
//! * `A_r` (r >= 1): path `1 - 2 - ... - r`.
//! * `B_r` (r >= 3): path with a double edge `(r-1, r)`; node `r` is short.
//!   `B2` is accepted as input and canonicalized to `C2`.
//! * `C_r` (r >= 2): path with a double edge `(r-1, r)`; node `r-1` is short.
//! * `D_r` (r >= 4): path `1 - ... - (r-2)` with tips `r-1`, `r` on node `r-2`.
//! * `E6/E7/E8`: path `1 - 3 - 4 - 5 - ...` with node `2` attached to node `4`.
//! * `F4`: path `1 - 2 = 3 - 4` with nodes `3`, `4` short.
//! * `G2`: triple edge `1 = 2` with node `1` short. Arrow conventions for
//!   `G2` vary in the literature; node 1 short is fixed here and the tests
//!   pin it.
//!
//! Semisimple (disconnected) diagrams are first class; operations that need
//! connectedness state it as a precondition.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::roots::Root;

/// Node label. Parsed diagrams use `1..=r`; subdiagrams keep original labels.
pub type Node = usize;

/// An edge of the diagram. `short_end` is set exactly when `multiplicity >= 2`
/// and names the short-root endpoint (the arrow target).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub a: Node,
    pub b: Node,
    pub multiplicity: u8,
    pub short_end: Option<Node>,
}

impl Edge {
    fn single(a: Node, b: Node) -> Self {
        Edge { a, b, multiplicity: 1, short_end: None }
    }

    fn multiple(long: Node, short: Node, multiplicity: u8) -> Self {
        Edge { a: long, b: short, multiplicity, short_end: Some(short) }
    }

    pub fn touches(&self, n: Node) -> bool {
        self.a == n || self.b == n
    }

    pub fn other(&self, n: Node) -> Node {
        if self.a == n {
            self.b
        } else {
            self.a
        }
    }
}

/// A connected component with its recognized type.
///
/// `canonical[k]` is the original node label sitting at position `k+1` of the
/// type's reference labeling, so `canonical` realizes the isomorphism with the
/// standard diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub letter: char,
    pub rank: usize,
    pub canonical: Vec<Node>,
}

impl Component {
    /// Type name such as `"B3"`.
    pub fn name(&self) -> String {
        format!("{}{}", self.letter, self.rank)
    }

    /// 1-based position of `node` in the reference labeling.
    pub fn position_of(&self, node: Node) -> Option<usize> {
        self.canonical.iter().position(|&n| n == node).map(|k| k + 1)
    }

    pub fn contains(&self, node: Node) -> bool {
        self.canonical.contains(&node)
    }

    pub fn nodes(&self) -> BTreeSet<Node> {
        self.canonical.iter().copied().collect()
    }
}

/// A (possibly disconnected) Dynkin diagram. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    nodes: Vec<Node>, // sorted ascending
    edges: Vec<Edge>,
    components: Vec<Component>,
}

impl DynkinDiagram {
    /// Build a simple diagram of the given type with nodes `1..=rank`.
    pub fn simple(letter: char, rank: usize) -> Result<Self> {
        check_rank(letter, rank)?;
        let mut edges = Vec::new();
        match letter {
            'A' => {
                for i in 1..rank {
                    edges.push(Edge::single(i, i + 1));
                }
            }
            'B' => {
                for i in 1..rank - 1 {
                    edges.push(Edge::single(i, i + 1));
                }
                edges.push(Edge::multiple(rank - 1, rank, 2));
            }
            'C' => {
                for i in 1..rank - 1 {
                    edges.push(Edge::single(i, i + 1));
                }
                edges.push(Edge::multiple(rank, rank - 1, 2));
            }
            'D' => {
                for i in 1..rank - 2 {
                    edges.push(Edge::single(i, i + 1));
                }
                edges.push(Edge::single(rank - 2, rank - 1));
                edges.push(Edge::single(rank - 2, rank));
            }
            'E' => {
                edges.push(Edge::single(1, 3));
                for i in 3..rank {
                    edges.push(Edge::single(i, i + 1));
                }
                edges.push(Edge::single(2, 4));
            }
            'F' => {
                edges.push(Edge::single(1, 2));
                edges.push(Edge::multiple(2, 3, 2));
                edges.push(Edge::single(3, 4));
            }
            'G' => {
                edges.push(Edge::multiple(2, 1, 3));
            }
            _ => return Err(Error::UnknownType(letter)),
        }
        Self::from_parts((1..=rank).collect(), edges)
    }

    /// Build from explicit nodes and edges, recognizing component types.
    pub(crate) fn from_parts(mut nodes: Vec<Node>, edges: Vec<Edge>) -> Result<Self> {
        nodes.sort_unstable();
        nodes.dedup();
        let components = recognize(&nodes, &edges)?;
        Ok(DynkinDiagram { nodes, edges, components })
    }

    /// Disjoint union; node labels must already be disjoint.
    pub(crate) fn union(parts: Vec<DynkinDiagram>) -> Result<Self> {
        let mut nodes = Vec::new();
        let mut edges = Vec::new();
        for p in parts {
            nodes.extend(p.nodes);
            edges.extend(p.edges);
        }
        Self::from_parts(nodes, edges)
    }

    pub fn rank(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() == 1
    }

    pub fn contains(&self, node: Node) -> bool {
        self.nodes.binary_search(&node).is_ok()
    }

    /// 0-based coordinate position of a node label (nodes sorted ascending).
    pub fn position(&self, node: Node) -> Option<usize> {
        self.nodes.binary_search(&node).ok()
    }

    pub fn node_at(&self, position: usize) -> Node {
        self.nodes[position]
    }

    pub fn component_of(&self, node: Node) -> Result<&Component> {
        self.components
            .iter()
            .find(|c| c.contains(node))
            .ok_or(Error::NodeNotInDiagram(node))
    }

    pub fn neighbors(&self, node: Node) -> Vec<Node> {
        let mut out: Vec<Node> = self
            .edges
            .iter()
            .filter(|e| e.touches(node))
            .map(|e| e.other(node))
            .collect();
        out.sort_unstable();
        out
    }

    /// Cartan matrix in coordinate order: `C[i][j] = 2(a_i, a_j)/(a_j, a_j)`.
    ///
    /// A multiplicity-m edge contributes `-m` in the long-root row / short-root
    /// column and `-1` in the transposed slot.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let r = self.rank();
        let mut c = vec![vec![0i64; r]; r];
        for (i, row) in c.iter_mut().enumerate().take(r) {
            row[i] = 2;
        }
        for e in &self.edges {
            let pa = self.position(e.a).expect("edge endpoint in diagram");
            let pb = self.position(e.b).expect("edge endpoint in diagram");
            match e.short_end {
                None => {
                    c[pa][pb] = -1;
                    c[pb][pa] = -1;
                }
                Some(s) => {
                    let (ps, pl) = if s == e.a { (pa, pb) } else { (pb, pa) };
                    c[pl][ps] = -(e.multiplicity as i64);
                    c[ps][pl] = -1;
                }
            }
        }
        c
    }

    /// Symmetrizer `d` with `d_i C_ij = d_j C_ji`, normalized so that the
    /// minimum over each connected component is 1.
    pub fn symmetrizer(&self) -> Vec<i64> {
        let mut d = vec![1i64; self.rank()];
        for comp in &self.components {
            if let Some(e) = self
                .edges
                .iter()
                .find(|e| e.multiplicity >= 2 && comp.contains(e.a))
            {
                let short = e.short_end.expect("multi-edge has a short end");
                let long = e.other(short);
                // Nodes on the long side of the multi-edge scale by the
                // multiplicity; one multi-edge per component in finite type.
                let mut stack = vec![long];
                let mut seen = BTreeSet::from([short, long]);
                while let Some(n) = stack.pop() {
                    d[self.position(n).unwrap()] = e.multiplicity as i64;
                    for m in self.neighbors(n) {
                        if (n, m) != (long, short) && (n, m) != (short, long) && seen.insert(m) {
                            stack.push(m);
                        }
                    }
                }
            }
        }
        d
    }

    /// Whether the simple root at `node` is short: strictly smaller squared
    /// length than some other root in its component.
    pub fn is_short(&self, node: Node) -> Result<bool> {
        let comp = self.component_of(node)?;
        let d = self.symmetrizer();
        let mine = d[self.position(node).unwrap()];
        let max = comp
            .canonical
            .iter()
            .map(|&n| d[self.position(n).unwrap()])
            .max()
            .unwrap();
        Ok(mine < max)
    }

    /// Induced subdiagram on `keep`, retaining original labels.
    pub fn subdiagram(&self, keep: &BTreeSet<Node>) -> Result<DynkinDiagram> {
        if keep.is_empty() {
            return Err(Error::EmptyNodeSet);
        }
        for &n in keep {
            if !self.contains(n) {
                return Err(Error::NodeNotInDiagram(n));
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep.contains(&e.a) && keep.contains(&e.b))
            .cloned()
            .collect();
        DynkinDiagram::from_parts(keep.iter().copied().collect(), edges)
    }

    /// Highest root of a connected diagram, in coordinate order.
    pub fn highest_root(&self) -> Result<Root> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let comp = &self.components[0];
        let table = highest_root_table(comp.letter, comp.rank);
        let mut coeffs = vec![0i64; self.rank()];
        for (k, &node) in comp.canonical.iter().enumerate() {
            coeffs[self.position(node).unwrap()] = table[k];
        }
        Root::new(coeffs)
    }

    /// Cominuscule test for a marked node of a connected diagram: the marked
    /// coefficient of the highest root equals 1.
    pub fn is_cominuscule(&self, marked: Node) -> Result<bool> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let pos = self.position(marked).ok_or(Error::NodeNotInDiagram(marked))?;
        Ok(self.highest_root()?.coeffs()[pos] == 1)
    }
}

/// A diagram together with a non-empty set of marked nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedDiagram {
    pub diagram: DynkinDiagram,
    marked: BTreeSet<Node>,
}

impl MarkedDiagram {
    pub fn new(diagram: DynkinDiagram, marked: BTreeSet<Node>) -> Result<Self> {
        if marked.is_empty() {
            return Err(Error::EmptyMarking);
        }
        for &n in &marked {
            if !diagram.contains(n) {
                return Err(Error::NodeNotInDiagram(n));
            }
        }
        Ok(MarkedDiagram { diagram, marked })
    }

    pub fn marked(&self) -> &BTreeSet<Node> {
        &self.marked
    }

    /// Canonical spec string, one `TYPE RANK{marks}` per component joined by
    /// `" x "`. Marks are rewritten into each component's reference labeling,
    /// so the output re-parses to the same diagram up to node relabeling.
    pub fn render(&self) -> String {
        self.diagram
            .components()
            .iter()
            .map(|comp| {
                let marks: Vec<String> = comp
                    .canonical
                    .iter()
                    .enumerate()
                    .filter(|(_, n)| self.marked.contains(n))
                    .map(|(k, _)| (k + 1).to_string())
                    .collect();
                format!("{}{{{}}}", comp.name(), marks.join(","))
            })
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

fn check_rank(letter: char, rank: usize) -> Result<()> {
    let ok = match letter {
        'A' => rank >= 1,
        'B' | 'C' => rank >= 2,
        'D' => rank >= 4,
        'E' => (6..=8).contains(&rank),
        'F' => rank == 4,
        'G' => rank == 2,
        _ => return Err(Error::UnknownType(letter)),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::RankOutOfRange { letter, rank })
    }
}

fn highest_root_table(letter: char, rank: usize) -> Vec<i64> {
    match letter {
        'A' => vec![1; rank],
        'B' => {
            let mut v = vec![2; rank];
            v[0] = 1;
            v
        }
        'C' => {
            let mut v = vec![2; rank];
            v[rank - 1] = 1;
            v
        }
        'D' => {
            let mut v = vec![2; rank];
            v[0] = 1;
            v[rank - 2] = 1;
            v[rank - 1] = 1;
            v
        }
        'E' => match rank {
            6 => vec![1, 2, 2, 3, 2, 1],
            7 => vec![2, 2, 3, 4, 3, 2, 1],
            8 => vec![2, 3, 4, 6, 5, 4, 3, 2],
            _ => unreachable!("E rank validated at construction"),
        },
        'F' => vec![2, 3, 4, 2],
        'G' => vec![3, 2],
        _ => unreachable!("type letter validated at construction"),
    }
}

/// Recognize the connected components of a labeled graph as simple types.
fn recognize(nodes: &[Node], edges: &[Edge]) -> Result<Vec<Component>> {
    let mut adj: BTreeMap<Node, Vec<Node>> = nodes.iter().map(|&n| (n, Vec::new())).collect();
    for e in edges {
        if !adj.contains_key(&e.a) || !adj.contains_key(&e.b) || e.a == e.b {
            return Err(Error::NotDynkin);
        }
        adj.get_mut(&e.a).unwrap().push(e.b);
        adj.get_mut(&e.b).unwrap().push(e.a);
    }
    for v in adj.values_mut() {
        v.sort_unstable();
        let before = v.len();
        v.dedup();
        if v.len() != before {
            return Err(Error::NotDynkin); // parallel edges beyond a marked multi-edge
        }
    }

    let mut unseen: BTreeSet<Node> = nodes.iter().copied().collect();
    let mut components = Vec::new();
    while let Some(&start) = unseen.iter().next() {
        let mut comp = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(n) = stack.pop() {
            if comp.insert(n) {
                unseen.remove(&n);
                stack.extend(adj[&n].iter().copied());
            }
        }
        let comp_edges: Vec<&Edge> = edges
            .iter()
            .filter(|e| comp.contains(&e.a))
            .collect();
        if comp_edges.len() + 1 != comp.len() {
            return Err(Error::NotDynkin); // cycles
        }
        components.push(recognize_component(&comp, &comp_edges, &adj)?);
    }
    Ok(components)
}

fn recognize_component(
    comp: &BTreeSet<Node>,
    edges: &[&Edge],
    adj: &BTreeMap<Node, Vec<Node>>,
) -> Result<Component> {
    let deg = |n: Node| adj[&n].len();
    let multi: Vec<&&Edge> = edges.iter().filter(|e| e.multiplicity >= 2).collect();
    if multi.len() > 1 {
        return Err(Error::NotDynkin);
    }

    if let Some(e) = multi.first() {
        if comp.iter().any(|&n| deg(n) > 2) {
            return Err(Error::NotDynkin);
        }
        let short = e.short_end.ok_or(Error::NotDynkin)?;
        let long = e.other(short);
        if e.multiplicity == 3 {
            if comp.len() != 2 {
                return Err(Error::NotDynkin);
            }
            return Ok(Component { letter: 'G', rank: 2, canonical: vec![short, long] });
        }
        if e.multiplicity > 3 {
            return Err(Error::NotDynkin);
        }
        if comp.len() == 2 {
            // B2 and C2 coincide; canonicalized to C2 (short node first).
            return Ok(Component { letter: 'C', rank: 2, canonical: vec![short, long] });
        }
        return if deg(short) == 1 {
            // Short node terminal: B_r, path ends at the short node.
            let far = path_end_away_from(short, comp, adj)?;
            let path = walk_path(far, comp, adj);
            Ok(Component { letter: 'B', rank: comp.len(), canonical: path })
        } else if deg(long) == 1 {
            // Long node terminal: C_r, path ends at the long node.
            let far = path_end_away_from(long, comp, adj)?;
            let path = walk_path(far, comp, adj);
            Ok(Component { letter: 'C', rank: comp.len(), canonical: path })
        } else {
            // Interior double edge: F4.
            if comp.len() != 4 {
                return Err(Error::NotDynkin);
            }
            let x = *adj[&long].iter().find(|&&n| n != short).unwrap();
            let y = *adj[&short].iter().find(|&&n| n != long).unwrap();
            if deg(x) != 1 || deg(y) != 1 {
                return Err(Error::NotDynkin);
            }
            Ok(Component { letter: 'F', rank: 4, canonical: vec![x, long, short, y] })
        };
    }

    // Simply laced.
    let branch: Vec<Node> = comp.iter().copied().filter(|&n| deg(n) >= 3).collect();
    match branch.len() {
        0 => {
            if comp.len() == 1 {
                let n = *comp.iter().next().unwrap();
                return Ok(Component { letter: 'A', rank: 1, canonical: vec![n] });
            }
            let mut ends: Vec<Node> = comp.iter().copied().filter(|&n| deg(n) == 1).collect();
            ends.sort_unstable();
            let path = walk_path(ends[0], comp, adj);
            Ok(Component { letter: 'A', rank: comp.len(), canonical: path })
        }
        1 => {
            let b = branch[0];
            if deg(b) != 3 {
                return Err(Error::NotDynkin);
            }
            let mut arms: Vec<Vec<Node>> = adj[&b]
                .iter()
                .map(|&first| walk_arm(b, first, adj))
                .collect();
            // Sort by (length, end label) so ties are broken deterministically.
            arms.sort_by_key(|a| (a.len(), *a.last().unwrap()));
            let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
            match lens.as_slice() {
                [1, 1, _] => {
                    let r = comp.len();
                    // For D4 all three arms tie; take the smallest end label
                    // as the path arm so D4 comes out as [1, 2, 3, 4].
                    let (path_arm, tip_a, tip_b) = if lens == [1, 1, 1] {
                        (&arms[0], arms[1][0], arms[2][0])
                    } else {
                        (&arms[2], arms[0][0], arms[1][0])
                    };
                    let mut canonical: Vec<Node> =
                        path_arm.iter().rev().copied().collect();
                    canonical.push(b);
                    let mut tips = [tip_a, tip_b];
                    tips.sort_unstable();
                    canonical.extend(tips);
                    Ok(Component { letter: 'D', rank: r, canonical })
                }
                [1, 2, 2] => Ok(Component {
                    letter: 'E',
                    rank: 6,
                    canonical: vec![
                        arms[1][1], arms[0][0], arms[1][0], b, arms[2][0], arms[2][1],
                    ],
                }),
                [1, 2, 3] => Ok(Component {
                    letter: 'E',
                    rank: 7,
                    canonical: vec![
                        arms[1][1], arms[0][0], arms[1][0], b, arms[2][0], arms[2][1],
                        arms[2][2],
                    ],
                }),
                [1, 2, 4] => Ok(Component {
                    letter: 'E',
                    rank: 8,
                    canonical: vec![
                        arms[1][1], arms[0][0], arms[1][0], b, arms[2][0], arms[2][1],
                        arms[2][2], arms[2][3],
                    ],
                }),
                _ => Err(Error::NotDynkin),
            }
        }
        _ => Err(Error::NotDynkin),
    }
}

/// End of the path farthest from `from` (the unique terminal node != from).
fn path_end_away_from(
    from: Node,
    comp: &BTreeSet<Node>,
    adj: &BTreeMap<Node, Vec<Node>>,
) -> Result<Node> {
    comp.iter()
        .copied()
        .find(|&n| n != from && adj[&n].len() == 1)
        .ok_or(Error::NotDynkin)
}

/// Walk a simple path starting from a terminal node.
fn walk_path(start: Node, comp: &BTreeSet<Node>, adj: &BTreeMap<Node, Vec<Node>>) -> Vec<Node> {
    let mut path = vec![start];
    let mut prev = start;
    let mut cur = start;
    while path.len() < comp.len() {
        let next = *adj[&cur].iter().find(|&&n| n != prev).unwrap();
        path.push(next);
        prev = cur;
        cur = next;
    }
    path
}

/// Walk away from the branch node `b` starting at `first`, returning the arm
/// from the node adjacent to `b` out to the end.
fn walk_arm(b: Node, first: Node, adj: &BTreeMap<Node, Vec<Node>>) -> Vec<Node> {
    let mut arm = vec![first];
    let mut prev = b;
    let mut cur = first;
    while let Some(&next) = adj[&cur].iter().find(|&&n| n != prev) {
        arm.push(next);
        prev = cur;
        cur = next;
    }
    arm
}

/// Parse a diagram-spec string.
///
/// Grammar (whitespace-insensitive ASCII):
///
/// ```text
/// spec   := simple ( "x" simple )*
/// simple := TYPE RANK "{" INT ("," INT)* "}"
/// TYPE   := "A" | "B" | "C" | "D" | "E" | "F" | "G"
/// ```
///
/// Product specs are relabeled left to right, offsetting node labels by the
/// cumulative rank; marked labels are local to each factor.
pub fn parse_diagram(text: &str) -> Result<MarkedDiagram> {
    let mut s = Scanner { bytes: text.as_bytes(), pos: 0 };
    let mut parts = Vec::new();
    let mut marked = BTreeSet::new();
    let mut offset = 0usize;
    loop {
        let (diagram, marks) = parse_simple(&mut s)?;
        let rank = diagram.rank();
        let shifted = shift_labels(diagram, offset);
        for m in marks {
            marked.insert(m + offset);
        }
        parts.push(shifted);
        offset += rank;
        s.skip_ws();
        match s.peek() {
            None => break,
            Some(b'x') | Some(b'X') => {
                s.pos += 1;
            }
            Some(c) => {
                return Err(s.syntax(format!("expected 'x' or end of input, found '{}'", c as char)))
            }
        }
    }
    MarkedDiagram::new(DynkinDiagram::union(parts)?, marked)
}

fn parse_simple(s: &mut Scanner) -> Result<(DynkinDiagram, Vec<Node>)> {
    s.skip_ws();
    let letter = match s.peek() {
        Some(c) if c.is_ascii_alphabetic() => {
            s.pos += 1;
            c.to_ascii_uppercase() as char
        }
        Some(c) => return Err(s.syntax(format!("expected type letter, found '{}'", c as char))),
        None => return Err(s.syntax("expected type letter, found end of input".into())),
    };
    if !"ABCDEFG".contains(letter) {
        return Err(Error::UnknownType(letter));
    }
    s.skip_ws();
    let rank = s.integer()?;
    let diagram = DynkinDiagram::simple(letter, rank)?;
    s.skip_ws();
    s.expect(b'{')?;
    let mut marks = Vec::new();
    s.skip_ws();
    if s.peek() == Some(b'}') {
        return Err(Error::EmptyMarking);
    }
    loop {
        s.skip_ws();
        let m = s.integer()?;
        if m < 1 || m > rank {
            return Err(Error::MarkOutOfRange { mark: m, rank });
        }
        marks.push(m);
        s.skip_ws();
        match s.peek() {
            Some(b',') => s.pos += 1,
            Some(b'}') => {
                s.pos += 1;
                break;
            }
            Some(c) => return Err(s.syntax(format!("expected ',' or '}}', found '{}'", c as char))),
            None => return Err(s.syntax("expected ',' or '}', found end of input".into())),
        }
    }
    Ok((diagram, marks))
}

fn shift_labels(d: DynkinDiagram, offset: usize) -> DynkinDiagram {
    if offset == 0 {
        return d;
    }
    let nodes = d.nodes.iter().map(|n| n + offset).collect();
    let edges = d
        .edges
        .into_iter()
        .map(|e| Edge {
            a: e.a + offset,
            b: e.b + offset,
            multiplicity: e.multiplicity,
            short_end: e.short_end.map(|s| s + offset),
        })
        .collect();
    let components = d
        .components
        .into_iter()
        .map(|c| Component {
            letter: c.letter,
            rank: c.rank,
            canonical: c.canonical.into_iter().map(|n| n + offset).collect(),
        })
        .collect();
    DynkinDiagram { nodes, edges, components }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Scanner<'_> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(format!("expected '{}'", c as char)))
        }
    }

    fn integer(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax("expected an integer".into()));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.syntax("integer too large".into()))
    }

    fn syntax(&self, msg: String) -> Error {
        Error::Syntax { pos: self.pos, msg }
    }
}
