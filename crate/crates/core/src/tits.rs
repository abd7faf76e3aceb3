//! Tits correspondences for Schubert varieties: the line-ruling parabolic,
//! coset projection of maximal representatives, and the cone swept out by the
//! horizontal lines through a point.
//!
//! The cone is built from explicit inversion-set formulas
//! (`D(v) = {a : a(E) = 0, a(F) > 0}` and `D(w) = {a_i} u (i)D(v)`) rather
//! than by geometric sweeping; `tits_transform` exists separately so the two
//! constructions cross-check each other.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::dynkin::Node;
use crate::roots::{GradingElement, Root};
use crate::schubert::{datum, ParabolicContext, SchubertDatum};
use crate::weyl::{min_rep_of_coset, WeylElement};

/// The parabolic `Q` ruling `G/P_i` by lines: marked at the diagram
/// neighbors of `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineRuling {
    pub base: Node,
    /// `I(q)`: nodes adjacent to the base node.
    pub ruling_marked: BTreeSet<Node>,
}

impl LineRuling {
    pub fn grading(&self) -> GradingElement {
        GradingElement::new(self.ruling_marked.clone())
    }
}

/// Line-ruling parabolic of a maximal parabolic context.
pub fn line_parabolic(ctx: &ParabolicContext) -> Result<LineRuling> {
    let base = maximal_node(ctx)?;
    let ruling_marked = ctx.root_system().diagram().neighbors(base).into_iter().collect();
    Ok(LineRuling { base, ruling_marked })
}

/// Project a maximal representative of a `W_q`-coset to the Schubert datum of
/// the same coset in the target context (Tits transform of a Schubert
/// variety along `G/P <- G/(P n Q) -> G/Q`).
pub fn tits_transform(
    ctx: &ParabolicContext,
    q_marked: &BTreeSet<Node>,
    w_max: &WeylElement,
) -> Result<SchubertDatum> {
    let rs = ctx.root_system();
    // Maximal representative: every generator of W_q is a left descent.
    for &node in rs.diagram().nodes() {
        if !q_marked.contains(&node) {
            let idx = rs.simple_root_index(node)?;
            if w_max.inversion_indices().binary_search(&idx).is_err() {
                return Err(Error::NotMaximalRepresentative);
            }
        }
    }
    let w = min_rep_of_coset(rs, w_max, ctx.marked());
    datum(ctx, &w)
}

/// The Schubert variety swept out by the horizontal lines through a point of
/// `G/P_i`: `D(v)` collects the grade-zero roots positive on the ruling
/// grading `F`, and `D(w) = {a_i} u (i)D(v)`; `w` is reconstructed from the
/// root set and has `dim = 1 + |D(v)|`.
pub fn lines_cone(ctx: &ParabolicContext) -> Result<SchubertDatum> {
    let base = maximal_node(ctx)?;
    let ruling = line_parabolic(ctx)?;
    let rs = ctx.root_system();
    let f = ruling.grading();

    let delta_v: Vec<&Root> = rs
        .positive_roots()
        .iter()
        .filter(|a| {
            let ge = rs.grade(a, ctx.grading()).expect("root of this system");
            let gf = rs.grade(a, &f).expect("root of this system");
            ge == 0 && gf > 0
        })
        .collect();

    let mut delta_w = vec![rs.simple_root(base)?];
    for a in &delta_v {
        delta_w.push(rs.reflect(a, base)?);
    }

    let w = crate::schubert::weyl_from_root_subset(ctx, &delta_w)
        .map_err(|e| Error::ReconstructionFailed(format!("cone inversion set: {e}")))?;
    let d = datum(ctx, &w)?;
    if d.dim() != 1 + delta_v.len() {
        return Err(Error::ReconstructionFailed(format!(
            "cone dimension {} != 1 + |D(v)| = {}",
            d.dim(),
            1 + delta_v.len()
        )));
    }
    Ok(d)
}

/// Horizontality verdict for the cone of lines, paired with an independently
/// computed short-root flag for the base node. The two satisfy
/// `horizontal <=> not short`; callers (and the acceptance suite) check that
/// equivalence rather than this function asserting it.
pub fn cone_is_horizontal(ctx: &ParabolicContext) -> Result<(bool, bool)> {
    let base = maximal_node(ctx)?;
    let horizontal = lines_cone(ctx)?.horizontal();
    let short = ctx.root_system().diagram().is_short(base)?;
    Ok((horizontal, short))
}

fn maximal_node(ctx: &ParabolicContext) -> Result<Node> {
    if ctx.marked().len() != 1 {
        return Err(Error::NotMaximalParabolic);
    }
    Ok(*ctx.marked().iter().next().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::{longest_element, min_to_max};

    fn ctx(spec: &str) -> ParabolicContext {
        ParabolicContext::from_spec(spec).unwrap()
    }

    fn delta_coeffs(d: &SchubertDatum) -> BTreeSet<Vec<i64>> {
        d.delta().iter().map(|r| r.coeffs().to_vec()).collect()
    }

    #[test]
    fn line_parabolics() {
        assert_eq!(line_parabolic(&ctx("A3{2}")).unwrap().ruling_marked, BTreeSet::from([1, 3]));
        assert_eq!(line_parabolic(&ctx("G2{1}")).unwrap().ruling_marked, BTreeSet::from([2]));
        assert_eq!(line_parabolic(&ctx("F4{3}")).unwrap().ruling_marked, BTreeSet::from([2, 4]));
        assert_eq!(line_parabolic(&ctx("A3{1,3}")), Err(Error::NotMaximalParabolic));
    }

    #[test]
    fn cones() {
        let a3 = ctx("A3{2}");
        let d = lines_cone(&a3).unwrap();
        assert_eq!(d.dim(), 3);
        assert!(d.horizontal());
        assert_eq!(
            delta_coeffs(&d),
            BTreeSet::from([vec![0, 1, 0], vec![1, 1, 0], vec![0, 1, 1]])
        );

        let g2 = ctx("G2{1}");
        let d = lines_cone(&g2).unwrap();
        assert_eq!(d.dim(), 2);
        assert!(!d.horizontal());
        assert_eq!(delta_coeffs(&d), BTreeSet::from([vec![1, 0], vec![3, 1]]));

        let b3 = ctx("B3{3}");
        let d = lines_cone(&b3).unwrap();
        assert_eq!(d.dim(), 3);
        assert!(!d.horizontal());
        assert_eq!(
            delta_coeffs(&d),
            BTreeSet::from([vec![0, 0, 1], vec![0, 1, 2], vec![1, 1, 2]])
        );
    }

    #[test]
    fn cone_horizontality_vs_short_root() {
        for (spec, horizontal, short) in [
            ("B3{1}", true, false),
            ("B3{3}", false, true),
            ("G2{2}", true, false),
            ("G2{1}", false, true),
            ("C3{3}", true, false),
            ("C3{1}", false, true),
        ] {
            let (h, s) = cone_is_horizontal(&ctx(spec)).unwrap();
            assert_eq!((h, s), (horizontal, short), "{spec}");
        }
    }

    #[test]
    fn transform_matches_direct_cone() {
        for spec in ["A3{2}", "B3{1}", "B3{3}", "G2{1}", "C3{2}"] {
            let c = ctx(spec);
            let rs = c.root_system();
            let ruling = line_parabolic(&c).unwrap();
            let q_gens: BTreeSet<Node> = rs
                .diagram()
                .nodes()
                .iter()
                .copied()
                .filter(|n| !ruling.ruling_marked.contains(n))
                .collect();
            // Sigma in G/Q is the coset of the longest element of W_p.
            let w0p = longest_element(rs, &c.unmarked());
            let v_min = min_rep_of_coset(rs, &w0p, &ruling.ruling_marked);
            let w_max = min_to_max(rs, &v_min, &q_gens).unwrap();
            let transformed = tits_transform(&c, &ruling.ruling_marked, &w_max).unwrap();
            assert_eq!(transformed, lines_cone(&c).unwrap(), "{spec}");
        }
    }

    #[test]
    fn transform_point_coset() {
        // T(Q/Q): the projection of w0(W_q) lands in the coset of the simple
        // reflection at the base node.
        for spec in ["A2{1}", "A3{2}", "B3{2}", "G2{1}"] {
            let c = ctx(spec);
            let rs = c.root_system();
            let base = *c.marked().iter().next().unwrap();
            let ruling = line_parabolic(&c).unwrap();
            let q_gens: BTreeSet<Node> = rs
                .diagram()
                .nodes()
                .iter()
                .copied()
                .filter(|n| !ruling.ruling_marked.contains(n))
                .collect();
            let w0q = longest_element(rs, &q_gens);
            let projected = min_rep_of_coset(rs, &w0q, c.marked());
            let si = WeylElement::simple(rs, base).unwrap();
            assert_eq!(projected, si, "{spec}");
        }
    }

    #[test]
    fn transform_rejects_non_maximal() {
        let c = ctx("A3{2}");
        let rs = c.root_system();
        let ruling = line_parabolic(&c).unwrap();
        let e = WeylElement::identity(rs);
        assert_eq!(
            tits_transform(&c, &ruling.ruling_marked, &e),
            Err(Error::NotMaximalRepresentative)
        );
        // (1) lacks the W_q generator (2) among its left descents.
        let s1 = WeylElement::simple(rs, 1).unwrap();
        assert_eq!(
            tits_transform(&c, &ruling.ruling_marked, &s1),
            Err(Error::NotMaximalRepresentative)
        );
    }
}
