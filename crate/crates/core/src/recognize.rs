//! Membership test for the C-family by peeling off the last construction
//! class.
//!
//! The class added last is a set of false twins that is independent and
//! joined to every other vertex. Removing it and complementing what is left
//! undoes one construction step, so repeated peeling recovers the defining
//! sequence in reverse.

use std::collections::BTreeMap;

use crate::composition::Composition;
use crate::construct::build_by_recurrence;
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    MemberOfCEven,
    MemberOfCOddOnly,
    NotACGraph,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::MemberOfCEven => "member-of-C-even",
            Verdict::MemberOfCOddOnly => "member-of-C-odd-only",
            Verdict::NotACGraph => "not-a-C-graph",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelReport {
    /// Recovered parts in construction order (reverse of peel order). For a
    /// failed recognition this holds the peels made before the failure.
    pub sequence: Vec<usize>,
    /// 0-based recovered class per input vertex; `None` for vertices never
    /// peeled.
    pub class_of: Vec<Option<usize>>,
    pub verdict: Verdict,
}

impl PeelReport {
    pub fn is_even(&self) -> bool {
        self.sequence.len().is_multiple_of(2)
    }
}

/// Groups vertices by identical open neighbourhoods; classes are listed by
/// smallest member and each class is sorted.
pub fn false_twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let mut by_nbhd: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 0..g.order() {
        by_nbhd.entry(g.neighbors(v).collect()).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = by_nbhd.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    classes
}

/// Twin classes that can be the last construction class: independent and
/// adjacent to every vertex outside. Dominating vertices each form such a
/// singleton class; they are pairwise interchangeable, so only the smallest
/// is returned. Ordered by smallest member.
pub fn qualifying_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen_dominating = false;
    false_twin_classes(g)
        .into_iter()
        .filter(|class| g.degree(class[0]) == n - class.len())
        .filter(|class| {
            if class.len() == 1 {
                !std::mem::replace(&mut seen_dominating, true)
            } else {
                true
            }
        })
        .collect()
}

fn residue_after(g: &Graph, h: &[usize]) -> (Vec<usize>, Graph) {
    let mut in_h = vec![false; g.order()];
    for &v in h {
        in_h[v] = true;
    }
    let keep: Vec<usize> = (0..g.order()).filter(|&v| !in_h[v]).collect();
    let residue = g.induced(&keep).complement();
    (keep, residue)
}

/// One peel: the qualifying class containing the smallest label, and the
/// residue `complement(g - H)` with vertices kept in relative order.
///
/// Returns `None` when no class qualifies or `g` is empty.
pub fn peel_step(g: &Graph) -> Option<(Vec<usize>, Graph)> {
    let h = qualifying_classes(g).into_iter().next()?;
    let (_, residue) = residue_after(g, &h);
    Some((h, residue))
}

/// Peel sets in original labels, last construction class first.
type Peeling = Vec<Vec<usize>>;

struct Search {
    complete: Vec<Peeling>,
    /// Longest prefix reached by a failing branch, for diagnostics.
    stuck: Peeling,
}

/// Enumerates every complete peeling. A peel choice is ambiguous only when
/// a dominating vertex competes with a larger class; a wrong choice leaves
/// a residue with no qualifying class, so dead branches are cut after one
/// step and unambiguous stretches run iteratively.
fn search(g: &Graph, labels: Vec<usize>, mut prefix: Peeling, out: &mut Search) {
    let mut current = g.clone();
    let mut labels = labels;
    loop {
        if current.order() == 0 {
            out.complete.push(prefix);
            return;
        }
        let viable: Vec<(Vec<usize>, Vec<usize>, Graph)> = qualifying_classes(&current)
            .into_iter()
            .map(|h| {
                let (keep, residue) = residue_after(&current, &h);
                (h, keep, residue)
            })
            .filter(|(_, _, r)| r.order() == 0 || !qualifying_classes(r).is_empty())
            .collect();
        match viable.len() {
            0 => {
                if prefix.len() > out.stuck.len() {
                    out.stuck = prefix;
                }
                return;
            }
            1 => {
                let (h, keep, residue) = viable.into_iter().next().expect("one entry");
                prefix.push(h.iter().map(|&v| labels[v]).collect());
                labels = keep.iter().map(|&v| labels[v]).collect();
                current = residue;
            }
            _ => {
                for (h, keep, residue) in viable {
                    let mut next = prefix.clone();
                    next.push(h.iter().map(|&v| labels[v]).collect());
                    let sub_labels = keep.iter().map(|&v| labels[v]).collect();
                    search(&residue, sub_labels, next, out);
                }
                return;
            }
        }
    }
}

fn search_all(g: &Graph) -> Search {
    let mut found = Search {
        complete: Vec::new(),
        stuck: Vec::new(),
    };
    if g.order() > 0 {
        search(g, (0..g.order()).collect(), Vec::new(), &mut found);
    }
    found
}

/// Largest label of each peel, in peel order. Construction appends classes
/// at the top of the label range, so on an unrelabeled C-graph the true
/// peeling maximizes this key.
fn label_key(p: &Peeling) -> Vec<usize> {
    p.iter().map(|peel| peel.iter().copied().max().unwrap_or(0)).collect()
}

/// Every defining sequence of `g`, distinct and sorted by length then
/// lexicographically. Empty when `g` is not a C-graph.
///
/// Even-length representations are not always unique: whenever
/// `α₂ = 1`, `α₃ ≥ 2` and `α₃ ≠ α₁ + 1`, swapping the roles of the two
/// sides of the complete bipartite prefix `C(α₁, 1, α₃)` gives
/// `C(α₃ - 1, 1, α₁ + 1, α₄, ...)`, an isomorphic graph.
pub fn representations(g: &Graph) -> Vec<Vec<usize>> {
    let mut seqs: Vec<Vec<usize>> = search_all(g)
        .complete
        .iter()
        .map(|p| p.iter().rev().map(Vec::len).collect())
        .collect();
    seqs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    seqs.dedup();
    seqs
}

/// The other even composition whose C-graph is isomorphic to `C(c)`, if
/// any. See [`representations`].
pub fn isomorphic_partner(c: &Composition) -> Option<Composition> {
    let a = c.parts();
    if a.len() < 4 || !a.len().is_multiple_of(2) || a[1] != 1 || a[2] < 2 || a[2] == a[0] + 1 {
        return None;
    }
    let mut parts = vec![a[2] - 1, 1, a[0] + 1];
    parts.extend_from_slice(&a[3..]);
    Some(Composition::new(parts).expect("parts stay positive"))
}

/// Recovers a defining sequence, preferring even length, and checks it by
/// rebuilding the graph. Among several even representations the one that
/// follows the input labelling is taken (see [`label_key`]).
pub fn recognize(g: &Graph) -> PeelReport {
    let n = g.order();
    let found = search_all(g);
    let even = found
        .complete
        .iter()
        .filter(|p| p.len() % 2 == 0)
        .max_by_key(|p| label_key(p));
    let chosen = even
        .or_else(|| found.complete.iter().max_by_key(|p| label_key(p)))
        .cloned();
    let failed = chosen.is_none();
    let peels = chosen.unwrap_or(found.stuck);

    let m = peels.len();
    let sequence: Vec<usize> = peels.iter().rev().map(Vec::len).collect();
    let mut class_of = vec![None; n];
    for (step, peel) in peels.iter().enumerate() {
        for &v in peel {
            class_of[v] = Some(m - 1 - step);
        }
    }

    let verdict = if failed || !rebuild_matches(g, &sequence, &class_of) {
        Verdict::NotACGraph
    } else if m % 2 == 0 {
        Verdict::MemberOfCEven
    } else {
        Verdict::MemberOfCOddOnly
    };
    PeelReport {
        sequence,
        class_of,
        verdict,
    }
}

/// Rebuilds `C(sequence)` and maps input vertices onto construction
/// positions class by class, in label order.
fn rebuild_matches(g: &Graph, sequence: &[usize], class_of: &[Option<usize>]) -> bool {
    if sequence.is_empty() {
        return false;
    }
    let built = build_by_recurrence(sequence);
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&v| (class_of[v], v));
    // order[i] is the input vertex placed at construction position i
    let mut position = vec![0; g.order()];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    match g.permuted(&position) {
        Ok(relabeled) => relabeled == built,
        Err(_) => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::build_cgraph;

    #[test]
    fn twin_classes() {
        assert_eq!(false_twin_classes(&Graph::cycle(4)), vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(false_twin_classes(&Graph::complete(2)), vec![vec![0], vec![1]]);
        let c = Composition::new(vec![3, 2, 2, 3]).unwrap();
        let (g, _) = build_cgraph(&c).unwrap();
        assert!(false_twin_classes(&g).contains(&vec![7, 8, 9]));
    }

    #[test]
    fn peel_examples() {
        let (h, residue) = peel_step(&Graph::complete(3)).unwrap();
        assert_eq!(h, vec![0]);
        assert_eq!(residue, Graph::empty(2));
        let (h, residue) = peel_step(&Graph::empty(3)).unwrap();
        assert_eq!(h, vec![0, 1, 2]);
        assert_eq!(residue.order(), 0);
        assert!(peel_step(&Graph::path(4)).is_none());
    }

    #[test]
    fn recognition_examples() {
        let c = Composition::new(vec![3, 2, 2, 3]).unwrap();
        let r = recognize(&build_cgraph(&c).unwrap().0);
        assert_eq!(r.sequence, vec![3, 2, 2, 3]);
        assert_eq!(r.verdict, Verdict::MemberOfCEven);

        let r = recognize(&Graph::complete(3));
        assert_eq!(r.sequence, vec![2, 1]);
        assert_eq!(r.verdict, Verdict::MemberOfCEven);

        let r = recognize(&Graph::cycle(4));
        assert_eq!(r.sequence, vec![1, 1, 2]);
        assert_eq!(r.verdict, Verdict::MemberOfCOddOnly);

        assert_eq!(recognize(&Graph::path(4)).verdict, Verdict::NotACGraph);
        assert_eq!(recognize(&Graph::cycle(5)).verdict, Verdict::NotACGraph);
        assert_eq!(recognize(&Graph::empty(0)).verdict, Verdict::NotACGraph);
    }

    #[test]
    fn edgeless_graph_is_a_single_step() {
        let r = recognize(&Graph::empty(3));
        assert_eq!(r.sequence, vec![3]);
        assert_eq!(r.verdict, Verdict::MemberOfCOddOnly);
    }

    #[test]
    fn disconnected_union_is_rejected() {
        let g = Graph::complete(2).disjoint_union(&Graph::complete(3));
        assert_eq!(recognize(&g).verdict, Verdict::NotACGraph);
    }

    #[test]
    fn dominating_vertex_does_not_derail_the_peel() {
        // C(3, 2): the clique vertices are dominating singletons competing
        // with the true last class {3, 4}
        let c = Composition::new(vec![3, 2]).unwrap();
        let (g, _) = build_cgraph(&c).unwrap();
        assert_eq!(qualifying_classes(&g), vec![vec![0], vec![3, 4]]);
        assert_eq!(recognize(&g).sequence, vec![3, 2]);
        let c = Composition::new(vec![1, 1, 1, 1]).unwrap();
        assert_eq!(recognize(&build_cgraph(&c).unwrap().0).sequence, vec![1, 1, 1, 1]);
    }

    #[test]
    fn star_has_both_parities() {
        // K_{1,3} = C(1, 3) = C(2, 1, 1); the even form is reported
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = recognize(&star);
        assert_eq!(r.sequence, vec![1, 3]);
        assert_eq!(r.verdict, Verdict::MemberOfCEven);
        let mut degrees = build_by_recurrence(&[2, 1, 1]).degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 1, 3]);
    }

    #[test]
    fn bipartite_prefix_has_two_even_forms() {
        let c = Composition::new(vec![1, 1, 3, 1]).unwrap();
        let partner = isomorphic_partner(&c).unwrap();
        assert_eq!(partner.parts(), &[2, 1, 2, 1]);
        assert_eq!(isomorphic_partner(&partner).unwrap(), c);
        let (g, _) = build_cgraph(&c).unwrap();
        let (h, _) = build_cgraph(&partner).unwrap();
        assert_eq!(recognize(&g).sequence, vec![1, 1, 3, 1]);
        assert_eq!(recognize(&h).sequence, vec![2, 1, 2, 1]);
        let reps = representations(&g);
        assert_eq!(reps, representations(&h));
        assert!(reps.contains(&vec![1, 1, 3, 1]) && reps.contains(&vec![2, 1, 2, 1]));
        assert!(isomorphic_partner(&Composition::new(vec![1, 1, 2, 1]).unwrap()).is_none());
    }

    #[test]
    fn class_labels_follow_construction_order() {
        // classes here are told apart by their neighbourhoods
        let c = Composition::new(vec![3, 2, 2, 3]).unwrap();
        let (g, part) = build_cgraph(&c).unwrap();
        let r = recognize(&g);
        for v in 0..g.order() {
            assert_eq!(r.class_of[v], Some(part.class_of(v)));
        }
        // in C(2, 1) = K_3 every vertex is interchangeable; only sizes matter
        let r = recognize(&Graph::complete(3));
        let mut sizes = vec![0; r.sequence.len()];
        for c in r.class_of.iter().flatten() {
            sizes[*c] += 1;
        }
        assert_eq!(sizes, r.sequence);
    }
}
