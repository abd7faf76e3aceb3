//! Module-level invariants: structural properties promised by each module
//! beyond the acceptance criteria, checked exhaustively at small rank.

use std::collections::{BTreeMap, BTreeSet};

use shv_core::classify::classify_smooth;
use shv_core::dynkin::{parse_diagram, DynkinDiagram, Node};
use shv_core::isotropic::{enumerate_og2, IsotropicSchubert};
use shv_core::roots::{GradingElement, Root, RootSystem};
use shv_core::schubert::{
    datum, enumerate_all, enumerate_hsv, weyl_from_root_subset, ParabolicContext,
};
use shv_core::tits::{line_parabolic, lines_cone, tits_transform};
use shv_core::weyl::{
    bruhat_leq, compose, enumerate_min_reps, longest_element, min_rep_of_coset, min_to_max,
    WeylElement,
};

fn diagram(spec: &str) -> DynkinDiagram {
    parse_diagram(spec).unwrap().diagram
}

fn ctx(spec: &str) -> ParabolicContext {
    ParabolicContext::from_spec(spec).unwrap()
}

fn whole_group(rs: &RootSystem) -> Vec<WeylElement> {
    let all: BTreeSet<Node> = rs.diagram().nodes().iter().copied().collect();
    enumerate_min_reps(rs, &all, None).unwrap().elements().to_vec()
}

const SIMPLE_RANK4: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2",
];

const SIMPLE_RANK6: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C2", "C3", "C4",
    "C5", "C6", "D4", "D5", "D6", "E6", "F4", "G2",
];

fn all_markings(rank: usize) -> Vec<Vec<usize>> {
    (1u32..(1 << rank))
        .map(|mask| (1..=rank).filter(|k| mask & (1 << (k - 1)) != 0).collect())
        .collect()
}

#[test]
fn dynkin_subdiagram_cartan_is_principal_submatrix() {
    for name in ["A8", "B8", "C8", "D8", "E8", "F4", "G2"] {
        let d = diagram(&format!("{name}{{1}}"));
        let cartan = d.cartan_matrix();
        let rank = d.rank();
        for mask in 1u32..(1 << rank) {
            let keep: BTreeSet<Node> = (1..=rank).filter(|k| mask & (1 << (k - 1)) != 0).collect();
            let sub = d.subdiagram(&keep).unwrap();
            let sub_cartan = sub.cartan_matrix();
            let keep_vec: Vec<Node> = keep.iter().copied().collect();
            for (i, &ni) in keep_vec.iter().enumerate() {
                for (j, &nj) in keep_vec.iter().enumerate() {
                    assert_eq!(
                        sub_cartan[i][j],
                        cartan[d.position(ni).unwrap()][d.position(nj).unwrap()],
                        "{name}, subset {keep_vec:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn dynkin_cominuscule_closed_list() {
    // {(A_r, any), (B_r, 1), (C_r, r), (D_r, 1 | r-1 | r), (E6, 1 | 6), (E7, 7)}.
    let types: Vec<(char, usize)> = {
        let mut v = Vec::new();
        for r in 1..=8 {
            v.push(('A', r));
        }
        for r in 3..=8 {
            v.push(('B', r));
        }
        for r in 2..=8 {
            v.push(('C', r));
        }
        for r in 4..=8 {
            v.push(('D', r));
        }
        v.extend([('E', 6), ('E', 7), ('E', 8), ('F', 4), ('G', 2)]);
        v
    };
    for (letter, rank) in types {
        let d = diagram(&format!("{letter}{rank}{{1}}"));
        for node in 1..=rank {
            let expected = match letter {
                'A' => true,
                'B' => node == 1,
                'C' => node == rank,
                'D' => node == 1 || node == rank - 1 || node == rank,
                'E' if rank == 6 => node == 1 || node == 6,
                'E' if rank == 7 => node == 7,
                _ => false,
            };
            assert_eq!(
                d.is_cominuscule(node).unwrap(),
                expected,
                "{letter}{rank} node {node}"
            );
        }
    }
}

#[test]
fn dynkin_symmetrizer_symmetrizes() {
    for name in SIMPLE_RANK6 {
        let d = diagram(&format!("{name}{{1}}"));
        let c = d.cartan_matrix();
        let sym = d.symmetrizer();
        // d_j C_ij = d_i C_ji: column scaling by the squared root lengths
        // symmetrizes (the B3 fixture d = (2,2,1) pins this index order).
        for i in 0..d.rank() {
            for j in 0..d.rank() {
                assert_eq!(sym[j] * c[i][j], sym[i] * c[j][i], "{name} ({i},{j})");
            }
        }
        assert_eq!(sym.iter().min(), Some(&1), "{name}: normalized");
    }
}

#[test]
fn dynkin_highest_root_is_maximum_of_generated_set() {
    for name in ["A5", "A8", "B8", "C8", "D8", "E6", "E7", "E8", "F4", "G2"] {
        let d = diagram(&format!("{name}{{1}}"));
        let rs = RootSystem::new(d.clone());
        let max = rs.positive_roots().last().unwrap();
        assert_eq!(&d.highest_root().unwrap(), max, "{name}");
        // The maximum dominates coefficientwise, so it is the highest root.
        for a in rs.positive_roots() {
            assert!(
                a.coeffs().iter().zip(max.coeffs()).all(|(x, y)| x <= y),
                "{name}: root order maximum"
            );
        }
    }
}

#[test]
fn roots_reflection_involution_rank6() {
    for name in SIMPLE_RANK6 {
        let rs = RootSystem::new(diagram(&format!("{name}{{1}}")));
        for alpha in rs.positive_roots() {
            for &node in rs.diagram().nodes() {
                let once = rs.reflect(alpha, node).unwrap();
                let twice = rs.reflect(&once, node).unwrap();
                assert_eq!(&twice, alpha, "{name}");
            }
        }
    }
}

#[test]
fn roots_grade_additivity_off_support() {
    for name in SIMPLE_RANK4 {
        let rs = RootSystem::new(diagram(&format!("{name}{{1}}")));
        let rank = rs.rank();
        for marks in all_markings(rank) {
            let t = GradingElement::new(marks.iter().copied().collect());
            for alpha in rs.positive_roots() {
                for &node in rs.diagram().nodes() {
                    if !marks.contains(&node) {
                        let image = rs.reflect(alpha, node).unwrap();
                        assert_eq!(
                            rs.grade(&image, &t).unwrap(),
                            rs.grade(alpha, &t).unwrap(),
                            "{name} {marks:?}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn roots_eigenspaces_partition() {
    for name in SIMPLE_RANK4 {
        let rs = RootSystem::new(diagram(&format!("{name}{{1}}")));
        for marks in all_markings(rs.rank()) {
            let t = GradingElement::new(marks.iter().copied().collect());
            let graded: usize = rs.eigenspaces(&t).unwrap().values().map(|v| v.len()).sum();
            let zero = rs
                .positive_roots()
                .iter()
                .filter(|a| rs.grade(a, &t).unwrap() == 0)
                .count();
            assert_eq!(graded + zero, rs.positive_roots().len(), "{name} {marks:?}");
        }
    }
}

#[test]
fn roots_cominuscule_single_grade() {
    let cominuscule = [
        ("A4{2}", 2),
        ("B4{1}", 1),
        ("C4{4}", 4),
        ("D4{1}", 1),
        ("D4{3}", 3),
        ("D4{4}", 4),
    ];
    for (spec, _) in cominuscule {
        let c = ctx(spec);
        let keys: Vec<i64> = c.eigenspaces().keys().copied().collect();
        assert_eq!(keys, vec![1], "{spec}");
    }
}

#[test]
fn weyl_prepend_identity() {
    // l((j)w) = l(w) + 1 implies D((j)w) = {a_j} u (j) D(w).
    for name in ["A3", "B3", "C3", "G2"] {
        let c = ctx(&format!("{name}{{1}}"));
        let rs = c.root_system();
        for w in whole_group(rs) {
            for &j in rs.diagram().nodes() {
                let s = WeylElement::simple(rs, j).unwrap();
                let jw = compose(rs, &s, &w).unwrap();
                if jw.length() == w.length() + 1 {
                    let mut expected: BTreeSet<Vec<i64>> = w
                        .inversion_set(rs)
                        .iter()
                        .map(|a| rs.reflect(a, j).unwrap().coeffs().to_vec())
                        .collect();
                    expected.insert(rs.simple_root(j).unwrap().coeffs().to_vec());
                    let actual: BTreeSet<Vec<i64>> = jw
                        .inversion_set(rs)
                        .iter()
                        .map(|a| a.coeffs().to_vec())
                        .collect();
                    assert_eq!(actual, expected, "{name}, w = {:?}, j = {j}", w.word());
                }
            }
        }
    }
}

#[test]
fn weyl_bruhat_matches_reflection_cover_closure() {
    for name in ["A2", "B2", "G2", "A3"] {
        let rs = RootSystem::new(diagram(&format!("{name}{{1}}")));
        let group = whole_group(&rs);
        let n = group.len();
        let index: BTreeMap<Vec<Node>, usize> =
            group.iter().enumerate().map(|(i, w)| (w.word().to_vec(), i)).collect();

        // All reflections, as conjugates of the simple ones.
        let mut reflections: Vec<WeylElement> = Vec::new();
        for w in &group {
            for &j in rs.diagram().nodes() {
                let s = WeylElement::simple(&rs, j).unwrap();
                let t = compose(&rs, &compose(&rs, w, &s).unwrap(), &w.inverse(&rs)).unwrap();
                if !reflections.contains(&t) {
                    reflections.push(t);
                }
            }
        }

        // Cover relation: y = t x with l(y) = l(x) + 1; then close transitively.
        let mut leq = vec![vec![false; n]; n];
        for (i, _) in group.iter().enumerate() {
            leq[i][i] = true;
        }
        for (i, x) in group.iter().enumerate() {
            for (j, y) in group.iter().enumerate() {
                if y.length() == x.length() + 1 {
                    let t = compose(&rs, y, &x.inverse(&rs)).unwrap();
                    if reflections.contains(&t) {
                        leq[i][j] = true;
                    }
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    let row_k = leq[k].clone();
                    leq[i].iter_mut().zip(&row_k).for_each(|(x, &y)| *x |= y);
                }
            }
        }

        for (i, x) in group.iter().enumerate() {
            for (j, y) in group.iter().enumerate() {
                assert_eq!(
                    bruhat_leq(&rs, x, y).unwrap(),
                    leq[i][j],
                    "{name}: {:?} <= {:?}",
                    x.word(),
                    y.word()
                );
            }
        }
        let _ = index;
    }
}

#[test]
fn weyl_coset_cardinalities() {
    for name in SIMPLE_RANK4 {
        let d = diagram(&format!("{name}{{1}}"));
        let rs = RootSystem::new(d.clone());
        let order = whole_group(&rs).len();
        for marks in all_markings(rs.rank()) {
            let marked: BTreeSet<Node> = marks.iter().copied().collect();
            let complement: BTreeSet<Node> =
                d.nodes().iter().copied().filter(|n| !marked.contains(n)).collect();
            let sub_order = if complement.is_empty() {
                1
            } else {
                whole_group(&RootSystem::new(d.subdiagram(&complement).unwrap())).len()
            };
            let table = enumerate_min_reps(&rs, &marked, None).unwrap();
            assert_eq!(table.len() * sub_order, order, "{name} {marks:?}");
        }
    }
}

#[test]
fn weyl_longest_element_length_counts_parabolic_roots() {
    for name in SIMPLE_RANK4 {
        let d = diagram(&format!("{name}{{1}}"));
        let rs = RootSystem::new(d.clone());
        for marks in all_markings(rs.rank()) {
            let gens: BTreeSet<Node> = marks.iter().copied().collect();
            let w0 = longest_element(&rs, &gens);
            let supported = rs
                .positive_roots()
                .iter()
                .filter(|a| a.support(&d).iter().all(|n| gens.contains(n)))
                .count();
            assert_eq!(w0.length(), supported, "{name} {marks:?}");
        }
    }
}

#[test]
fn schubert_reconstruction_inverts_inversion_set() {
    for name in SIMPLE_RANK4 {
        for node in 1..=diagram(&format!("{name}{{1}}")).rank() {
            let c = ctx(&format!("{name}{{{node}}}"));
            let table = enumerate_min_reps(c.root_system(), c.marked(), None).unwrap();
            for w in table.elements() {
                let back = weyl_from_root_subset(&c, &w.inversion_set(c.root_system())).unwrap();
                assert_eq!(&back, w, "{name}{{{node}}}");
            }
        }
    }
}

#[test]
fn schubert_cominuscule_contexts_are_fully_horizontal() {
    for spec in ["A3{2}", "A4{2}", "B4{1}", "C3{3}", "D4{1}", "D4{4}"] {
        let c = ctx(spec);
        assert!(c.is_cominuscule(), "{spec}");
        let hsv = enumerate_hsv(&c, true).unwrap();
        let table = enumerate_min_reps(c.root_system(), c.marked(), None).unwrap();
        assert_eq!(hsv.len(), table.len(), "{spec}: whole coset table is horizontal");
    }
}

#[test]
fn classify_factor_dims_sum_and_subdiagram_round_trip() {
    for name in SIMPLE_RANK4 {
        let d = diagram(&format!("{name}{{1}}"));
        for node in 1..=d.rank() {
            let c = ctx(&format!("{name}{{{node}}}"));
            let _rs = c.root_system();

            for datum_ref in enumerate_hsv(&c, true).unwrap().iter() {
                let report = classify_smooth(&c, datum_ref).unwrap();
                if report.smooth {
                    let total: usize = report.factors.iter().map(|f| f.dim).sum();
                    assert_eq!(total, datum_ref.dim(), "{name}{{{node}}}: factor dims");
                }
            }

            // Every connected subdiagram through the marked node has a
            // positive-grade root set realizing a Schubert variety; when that
            // datum is horizontal, it classifies smooth with exactly this
            // factor, and horizontality coincides with cominuscularity.
            let rank = d.rank();
            for mask in 1u32..(1 << rank) {
                let subset: BTreeSet<Node> =
                    (1..=rank).filter(|k| mask & (1 << (k - 1)) != 0).collect();
                if !subset.contains(&node) {
                    continue;
                }
                let sub = d.subdiagram(&subset).unwrap();
                if !sub.is_connected() {
                    continue;
                }
                let sub_rs = RootSystem::new(sub.clone());
                let mpos = sub.position(node).unwrap();
                let delta: Vec<Root> = sub_rs
                    .positive_roots()
                    .iter()
                    .filter(|a| a.coeffs()[mpos] >= 1)
                    .map(|a| {
                        let mut v = vec![0i64; d.rank()];
                        for (k, &cc) in a.coeffs().iter().enumerate() {
                            v[d.position(sub.node_at(k)).unwrap()] = cc;
                        }
                        Root::new(v).unwrap()
                    })
                    .collect();
                let w = weyl_from_root_subset(&c, &delta)
                    .unwrap_or_else(|e| panic!("{name}{{{node}}} {subset:?}: {e}"));
                let dat = datum(&c, &w).unwrap();
                assert_eq!(
                    dat.horizontal(),
                    sub.is_cominuscule(node).unwrap(),
                    "{name}{{{node}}} {subset:?}: horizontal <=> cominuscule"
                );
                if dat.horizontal() {
                    let report = classify_smooth(&c, &dat).unwrap();
                    assert!(report.smooth, "{name}{{{node}}} {subset:?}");
                    assert_eq!(report.factors.len(), 1);
                    assert_eq!(report.factors[0].nodes, subset, "{name}{{{node}}}");
                }
            }
        }
    }
}

#[test]
fn tits_cone_agrees_with_transform_everywhere() {
    for name in SIMPLE_RANK4 {
        let d = diagram(&format!("{name}{{1}}"));
        for node in 1..=d.rank() {
            let c = ctx(&format!("{name}{{{node}}}"));
            let rs = c.root_system();
            let ruling = line_parabolic(&c).unwrap();
            let q_gens: BTreeSet<Node> = rs
                .diagram()
                .nodes()
                .iter()
                .copied()
                .filter(|n| !ruling.ruling_marked.contains(n))
                .collect();
            let w0p = longest_element(rs, &c.unmarked());
            let v_min = min_rep_of_coset(rs, &w0p, &ruling.ruling_marked);
            let w_max = min_to_max(rs, &v_min, &q_gens).unwrap();
            let transformed = tits_transform(&c, &ruling.ruling_marked, &w_max).unwrap();
            assert_eq!(transformed, lines_cone(&c).unwrap(), "{name}{{{node}}}");

            // The point coset: W_p w0(W_q) = W_p (node).
            let w0q = longest_element(rs, &q_gens);
            let projected = min_rep_of_coset(rs, &w0q, c.marked());
            assert_eq!(
                projected,
                WeylElement::simple(rs, node).unwrap(),
                "{name}{{{node}}}: point coset"
            );
        }
    }
}

#[test]
fn tits_simply_laced_cones_horizontal() {
    for spec in [
        "A1{1}", "A2{1}", "A3{1}", "A3{2}", "A4{2}", "D4{1}", "D4{2}", "D4{3}", "E6{1}",
        "E6{2}", "E6{3}", "E6{4}",
    ] {
        let d = lines_cone(&ctx(spec)).unwrap();
        assert!(d.horizontal(), "{spec}");
    }
}

#[test]
fn isotropic_containment_matches_bruhat_statistics() {
    // The dimension-graded relation counts of the oracle's containment order
    // agree with the Bruhat order on the root side.
    for m in 5usize..=10 {
        let spec = shv_core::crosscheck::og2_context_spec(m).unwrap();
        let c = ctx(&spec);
        let rs = c.root_system();
        let data = enumerate_all(&c, None).unwrap();

        let mut weyl_counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for x in &data {
            for y in &data {
                if x != y && bruhat_leq(rs, x.weyl(), y.weyl()).unwrap() {
                    *weyl_counts.entry((x.dim(), y.dim())).or_default() += 1;
                }
            }
        }

        let classes: Vec<IsotropicSchubert> = enumerate_og2(m).unwrap();
        let mut oracle_counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for x in &classes {
            for y in &classes {
                if x != y && x.leq(y) {
                    *oracle_counts.entry((x.dimension(), y.dimension())).or_default() += 1;
                }
            }
        }

        assert_eq!(oracle_counts, weyl_counts, "m = {m}");
    }
}

#[test]
fn hasse_edges_close_to_bruhat() {
    // The transitive closure of the cover edges recovers the Bruhat order on
    // the reported subset (the quotient poset is graded by length).
    use shv_core::schubert::hasse_edges;
    for spec in ["B3{2}", "D4{2}", "F4{3}"] {
        let c = ctx(spec);
        let rs = c.root_system();
        let data = enumerate_all(&c, None).unwrap();
        let n = data.len();
        let edges = hasse_edges(&c, &data).unwrap();
        let mut reach = vec![vec![false; n]; n];
        for i in 0..n {
            reach[i][i] = true;
        }
        for &(a, b) in &edges {
            reach[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    let row_k = reach[k].clone();
                    reach[i].iter_mut().zip(&row_k).for_each(|(x, &y)| *x |= y);
                }
            }
        }
        for (i, x) in data.iter().enumerate() {
            for (j, y) in data.iter().enumerate() {
                assert_eq!(
                    reach[i][j],
                    bruhat_leq(rs, x.weyl(), y.weyl()).unwrap(),
                    "{spec}: [{i}] vs [{j}]"
                );
            }
        }
    }
}

#[test]
fn coset_table_parent_links() {
    // Every non-identity element has at least one BFS parent one step down,
    // reached by appending the recorded letter.
    for spec in ["B3{2}", "A3{2}", "G2{1}"] {
        let c = ctx(spec);
        let rs = c.root_system();
        let table = enumerate_min_reps(rs, c.marked(), None).unwrap();
        for (i, w) in table.elements().iter().enumerate() {
            if w.is_identity() {
                continue;
            }
            let parents = table.parents_of(i);
            assert!(!parents.is_empty(), "{spec}: element {i} has no parent");
            for &(p, letter) in parents {
                let parent = &table.elements()[p];
                assert_eq!(parent.length() + 1, w.length());
                let s = WeylElement::simple(rs, letter).unwrap();
                assert_eq!(&compose(rs, parent, &s).unwrap(), w, "{spec}");
            }
        }
    }
}

#[test]
fn classical_coset_counts() {
    // Known Schubert-class counts of some familiar varieties.
    let count = |spec: &str| {
        let c = ctx(spec);
        enumerate_min_reps(c.root_system(), c.marked(), None).unwrap().len()
    };
    assert_eq!(count("A4{2}"), 10); // Gr(2,5)
    assert_eq!(count("D5{1}"), 10); // quadric Q^8
    assert_eq!(count("B4{1}"), 8); // quadric Q^7
    assert_eq!(count("C4{4}"), 16); // LG(4,8)
    assert_eq!(count("D5{5}"), 16); // spinor S_5
    assert_eq!(count("E6{1}"), 27); // the Cayley plane
    assert_eq!(count("E6{6}"), 27);
    assert_eq!(count("E7{7}"), 56); // the Freudenthal variety
}

#[test]
fn cayley_plane_classifies() {
    // E6{1} is cominuscule: all 27 classes horizontal; the top class is the
    // whole space, smooth with a single OP^2 factor of dimension 16.
    let c = ctx("E6{1}");
    assert!(c.is_cominuscule());
    let data = enumerate_hsv(&c, true).unwrap();
    assert_eq!(data.len(), 27);
    let top = data.last().unwrap();
    assert_eq!(top.dim(), 16);
    let report = classify_smooth(&c, top).unwrap();
    assert!(report.smooth);
    assert_eq!(report.factors[0].type_label, "OP^2");
}

#[test]
fn classify_runs_on_all_markings_rank3() {
    // Multi-marked contexts: smooth reports have cominuscule factors whose
    // dimensions sum to the class dimension; failures carry a witness.
    for name in ["A1", "A2", "A3", "B3", "C3", "G2", "C2"] {
        let d = diagram(&format!("{name}{{1}}"));
        for marks in all_markings(d.rank()) {
            let spec = format!(
                "{name}{{{}}}",
                marks.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
            );
            let c = ctx(&spec);
            for datum_ref in enumerate_hsv(&c, true).unwrap().iter() {
                let report = classify_smooth(&c, datum_ref).unwrap();
                if report.smooth {
                    let total: usize = report.factors.iter().map(|f| f.dim).sum();
                    assert_eq!(total, datum_ref.dim(), "{spec}");
                    assert!(report.witness.is_none());
                } else {
                    assert!(report.witness.is_some(), "{spec}");
                }
            }
        }
    }
}
