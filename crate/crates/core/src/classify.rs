//! Smoothness classification of horizontal Schubert varieties: split the
//! inversion set over the marked nodes, rebuild the candidate subdiagram from
//! the support of each part, and compare against the subdiagram's positive
//! grade. A horizontal Schubert variety is smooth exactly when every part
//! matches, in which case it is the product of the cominuscule factors.

use std::collections::{BTreeMap, BTreeSet};

use crate::dynkin::{Component, DynkinDiagram, Node};
use crate::error::{Error, Result};
use crate::roots::{Root, RootSystem};
use crate::schubert::{ParabolicContext, SchubertDatum};

/// A cominuscule factor `X(D')` of a smooth horizontal Schubert variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub nodes: BTreeSet<Node>,
    pub marked: Node,
    pub type_label: String,
    pub dim: usize,
}

/// Verdict of the classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothnessReport {
    pub smooth: bool,
    pub factors: Vec<Factor>,
    /// On failure, a root in the symmetric difference between some part of
    /// the inversion set and the matching subdiagram grade.
    pub witness: Option<Root>,
}

/// Split `D(w)` of a horizontal datum over the marked nodes: each grade-one
/// root has coefficient 1 at exactly one marked node and 0 at the others.
pub fn split_delta(
    ctx: &ParabolicContext,
    d: &SchubertDatum,
) -> Result<BTreeMap<Node, Vec<Root>>> {
    if !d.horizontal() {
        return Err(Error::NotHorizontal);
    }
    let rs = ctx.root_system();
    let mut parts: BTreeMap<Node, Vec<Root>> =
        ctx.marked().iter().map(|&i| (i, Vec::new())).collect();
    for alpha in d.delta() {
        let carrier = ctx
            .marked()
            .iter()
            .copied()
            .find(|&i| alpha.coeffs()[rs.simple_position(i).unwrap()] == 1)
            .expect("grade-one root has a unique marked coefficient 1");
        parts.get_mut(&carrier).unwrap().push(alpha.clone());
    }
    Ok(parts)
}

/// Decide smoothness of a horizontal Schubert datum and emit its product
/// decomposition into cominuscule subdiagram factors.
///
/// For each nonempty part: the candidate subdiagram `D'` is the connected
/// component through the marked node of the support of the part; the part
/// must equal the positive-grade root set of `D'`. Disconnected support is
/// an immediate mismatch (the witness is any root supported off the marked
/// component). The converse direction, product of homogeneously embedded
/// cominuscule factors implies smooth, makes this a decision procedure.
pub fn classify_smooth(ctx: &ParabolicContext, d: &SchubertDatum) -> Result<SmoothnessReport> {
    let rs = ctx.root_system();
    let parts = split_delta(ctx, d)?;
    let mut factors = Vec::new();
    for (&i, part) in &parts {
        if part.is_empty() {
            continue;
        }
        let mut support: BTreeSet<Node> = BTreeSet::new();
        for alpha in part {
            support.extend(alpha.support(rs.diagram()));
        }
        let full = rs.diagram().subdiagram(&support)?;
        let comp = full.component_of(i)?.clone();
        let sub = rs.diagram().subdiagram(&comp.nodes())?;
        let expected = subdiagram_positive_grade(rs.diagram(), &sub, i);

        let actual: BTreeSet<Vec<i64>> =
            part.iter().map(|a| a.coeffs().to_vec()).collect();
        if actual != expected {
            let mut sym: Vec<Vec<i64>> =
                actual.symmetric_difference(&expected).cloned().collect();
            sym.sort_by_key(|v| (v.iter().sum::<i64>(), v.clone()));
            let witness = Root::new(sym[0].clone()).expect("roots have uniform sign");
            return Ok(SmoothnessReport { smooth: false, factors: Vec::new(), witness: Some(witness) });
        }

        let sub_comp = sub.component_of(i)?;
        assert!(
            sub.is_cominuscule(i).unwrap_or(false),
            "matched factor must be cominuscule for horizontal data"
        );
        factors.push(Factor {
            nodes: comp.nodes(),
            marked: i,
            type_label: factor_label(sub_comp, i)?,
            dim: part.len(),
        });
    }
    Ok(SmoothnessReport { smooth: true, factors, witness: None })
}

/// Positive roots of the subdiagram with coefficient at least 1 at the marked
/// node, embedded into ambient coordinates.
fn subdiagram_positive_grade(
    ambient: &DynkinDiagram,
    sub: &DynkinDiagram,
    marked: Node,
) -> BTreeSet<Vec<i64>> {
    let sub_rs = RootSystem::new(sub.clone());
    let mpos = sub.position(marked).expect("marked node in subdiagram");
    sub_rs
        .positive_roots()
        .iter()
        .filter(|a| a.coeffs()[mpos] >= 1)
        .map(|a| {
            let mut v = vec![0i64; ambient.rank()];
            for (k, &c) in a.coeffs().iter().enumerate() {
                v[ambient.position(sub.node_at(k)).unwrap()] = c;
            }
            v
        })
        .collect()
}

/// Standard cominuscule catalogue. The marked position is taken in the
/// component's reference labeling; for type A the path is enumerated from the
/// end with the smaller original label.
pub fn factor_label(comp: &Component, marked: Node) -> Result<String> {
    let pos = comp.position_of(marked).ok_or(Error::NodeNotInDiagram(marked))?;
    let r = comp.rank;
    let label = match comp.letter {
        'A' => format!("Gr({},{})", pos, r + 1),
        'B' if pos == 1 => format!("Q^{}", 2 * r - 1),
        'C' if pos == r => format!("LG({},{})", r, 2 * r),
        'D' if pos == 1 => format!("Q^{}", 2 * r - 2),
        'D' if pos == r - 1 || pos == r => format!("S_{} (spinor)", r),
        'E' if r == 6 && (pos == 1 || pos == 6) => "OP^2".to_string(),
        'E' if r == 7 && pos == 7 => "Freudenthal".to_string(),
        _ => return Err(Error::NonCominusculeFactor),
    };
    Ok(label)
}
