//! Strong components, extended cycles and clique cuts.
//!
//! Two length conventions coexist: a path's length counts arcs, while a
//! cycle's length counts vertices (so a directed 5-cycle has length 5).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::config::{find_subset, mask_members, OracleCap};
use crate::digraph::{Digraph, VertexSet};
use crate::error::{Error, Result};

/// Strong components of a digraph and their condensation.
///
/// Components are indexed in a topological order of the condensation: every
/// arc between components goes from a lower to a higher index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongDecomposition {
    components: Vec<VertexSet>,
    component_of: Vec<usize>,
    condensation: Digraph,
}

impl StrongDecomposition {
    pub fn components(&self) -> &[VertexSet] {
        &self.components
    }

    pub fn component(&self, index: usize) -> &VertexSet {
        &self.components[index]
    }

    pub fn count(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, v: usize) -> usize {
        self.component_of[v]
    }

    pub fn condensation(&self) -> &Digraph {
        &self.condensation
    }

    pub fn is_trivial(&self, index: usize) -> bool {
        self.components[index].len() == 1
    }

    pub fn is_strong(&self) -> bool {
        self.components.len() <= 1
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.count() {
            Ok(())
        } else {
            Err(Error::ComponentIndex {
                index,
                count: self.count(),
            })
        }
    }

    /// Components no outside vertex dominates into.
    pub fn initial_components(&self) -> Vec<usize> {
        (0..self.count())
            .filter(|&c| self.condensation.in_neighbors(c).is_empty())
            .collect()
    }

    pub fn is_initial(&self, index: usize) -> Result<bool> {
        self.check_index(index)?;
        Ok(self.condensation.in_neighbors(index).is_empty())
    }

    /// `(K-, K+)` of a component: the other components that reach it, and
    /// those it reaches. Both lists are sorted.
    pub fn reach_sets(&self, index: usize) -> Result<(Vec<usize>, Vec<usize>)> {
        self.check_index(index)?;
        let reached = self.condensation.bfs_from(index);
        let after: Vec<usize> = (0..self.count())
            .filter(|&c| c != index && reached[c].is_some())
            .collect();
        let before: Vec<usize> = self
            .condensation
            .inverse()
            .bfs_from(index)
            .iter()
            .enumerate()
            .filter(|&(c, d)| c != index && d.is_some())
            .map(|(c, _)| c)
            .collect();
        Ok((before, after))
    }

    /// Union of the vertex sets of the listed components.
    pub fn vertices_of(&self, indices: &[usize]) -> VertexSet {
        indices.iter().flat_map(|&c| self.components[c].iter()).collect()
    }
}

/// Tarjan's algorithm, iterative.
pub fn strong_components(d: &Digraph) -> StrongDecomposition {
    let n = d.n();
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut stack = Vec::new();
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut next_index = 0;
    // (vertex, position in its out-neighbor list)
    let mut calls: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        calls.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut pos)) = calls.last_mut() {
            let outs = d.out_neighbors(v);
            if *pos < outs.len() {
                let w = outs[*pos];
                *pos += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    calls.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            calls.pop();
            if let Some(&(parent, _)) = calls.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                let mut comp = Vec::new();
                loop {
                    let w = stack.pop().expect("tarjan stack holds the root");
                    on_stack[w] = false;
                    comp.push(w);
                    if w == v {
                        break;
                    }
                }
                found.push(comp);
            }
        }
    }

    // Tarjan completes sink components first.
    found.reverse();
    let components: Vec<VertexSet> = found.into_iter().map(VertexSet::from).collect();
    let mut component_of = vec![0; n];
    for (c, comp) in components.iter().enumerate() {
        for v in comp.iter() {
            component_of[v] = c;
        }
    }
    let count = components.len();
    let mut adj = vec![false; count * count];
    for (u, v) in d.arcs() {
        let (cu, cv) = (component_of[u], component_of[v]);
        if cu != cv {
            adj[cu * count + cv] = true;
        }
    }
    StrongDecomposition {
        components,
        component_of,
        condensation: Digraph::from_matrix(count, adj),
    }
}

/// An ordered partition `(X1, ..., Xk)` exhibiting an extended cycle: each
/// part is stable, `Xi` strictly dominates `X(i+1 mod k)`, and there are no
/// other arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExtendedCycleCertificate {
    parts: Vec<VertexSet>,
}

impl ExtendedCycleCertificate {
    /// Wraps parts as given; use [`ExtendedCycleCertificate::validate`] to
    /// check them.
    pub fn new(parts: Vec<VertexSet>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn part_sizes(&self) -> Vec<usize> {
        self.parts.iter().map(VertexSet::len).collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.parts.iter().flat_map(VertexSet::iter).collect()
    }

    pub fn is_odd_ge5(&self) -> bool {
        self.k() >= 5 && self.k() % 2 == 1
    }

    /// Rotated to start at the part holding the smallest vertex.
    pub fn canonical(mut self) -> Self {
        if let Some(first) = (0..self.parts.len()).min_by_key(|&i| VertexSet::min(&self.parts[i])) {
            self.parts.rotate_left(first);
        }
        self
    }

    /// The same partition read against the inverse digraph.
    pub fn reversed(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        Self { parts }.canonical()
    }

    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Self {
        Self {
            parts: self.parts.iter().map(|p| p.iter().map(&map).collect()).collect(),
        }
    }

    /// One vertex per part (the smallest), in cycle order. In an extended
    /// cycle with at least three parts this is an induced directed cycle.
    pub fn representative_cycle(&self) -> Vec<usize> {
        self.parts.iter().filter_map(VertexSet::min).collect()
    }

    /// The digraph on `0..n` whose arcs are exactly `Xi x X(i+1)`.
    pub fn rebuild(&self, n: usize) -> Result<Digraph> {
        let k = self.k();
        let arcs: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                let next = &self.parts[(i + 1) % k];
                self.parts[i]
                    .iter()
                    .flat_map(move |u| next.iter().map(move |v| (u, v)))
            })
            .collect();
        Digraph::new(n, arcs)
    }

    /// Checks the certificate against all of `d`.
    pub fn validate(&self, d: &Digraph) -> std::result::Result<(), String> {
        self.validate_on(d, &d.vertex_set())
    }

    /// Checks that the parts cover exactly `region` and that `d[region]` is
    /// the extended cycle they describe.
    pub fn validate_on(&self, d: &Digraph, region: &VertexSet) -> std::result::Result<(), String> {
        let k = self.k();
        if k < 3 {
            return Err(format!("extended cycle needs at least 3 parts, got {k}"));
        }
        let mut part_of: HashMap<usize, usize> = HashMap::new();
        for (i, part) in self.parts.iter().enumerate() {
            if part.is_empty() {
                return Err(format!("part X{} is empty", i + 1));
            }
            for v in part.iter() {
                if v >= d.n() {
                    return Err(format!("vertex {v} out of range"));
                }
                if let Some(j) = part_of.insert(v, i) {
                    return Err(format!("vertex {v} lies in parts X{} and X{}", j + 1, i + 1));
                }
            }
        }
        if self.vertex_set() != *region {
            return Err("parts do not cover the expected vertex set".into());
        }
        for u in region.iter() {
            for v in region.iter() {
                if u == v {
                    continue;
                }
                let (pu, pv) = (part_of[&u], part_of[&v]);
                let expected = pv == (pu + 1) % k;
                if d.arc(u, v) != expected {
                    return Err(if pu == pv {
                        format!("part X{} is not stable ({u} -> {v})", pu + 1)
                    } else if expected {
                        format!("missing arc {u} -> {v} from X{} to X{}", pu + 1, pv + 1)
                    } else {
                        format!("unexpected arc {u} -> {v} from X{} to X{}", pu + 1, pv + 1)
                    });
                }
            }
        }
        Ok(())
    }
}

/// Recognizes an extended cycle with at least three parts.
///
/// In such a digraph a vertex of `Xi` has in-neighborhood `X(i-1)` and
/// out-neighborhood `X(i+1)`, so the parts are exactly the classes of
/// vertices sharing both neighborhoods. The classes are chained along
/// out-neighborhoods and every link is then checked in both directions.
pub fn recognize_extended_cycle(d: &Digraph) -> Option<ExtendedCycleCertificate> {
    let n = d.n();
    if n < 3 {
        return None;
    }
    let mut class_ids: HashMap<(&[usize], &[usize]), usize> = HashMap::new();
    let mut class_of = vec![0; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in d.vertices() {
        let key = (d.in_neighbors(v), d.out_neighbors(v));
        let id = *class_ids.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        class_of[v] = id;
        classes[id].push(v);
    }
    let k = classes.len();
    if k < 3 {
        return None;
    }
    let start = class_of[0];
    let mut order = vec![start];
    let mut visited = vec![false; k];
    visited[start] = true;
    let mut cur = start;
    loop {
        let rep = classes[cur][0];
        let outs = d.out_neighbors(rep);
        let &first = outs.first()?;
        let next = class_of[first];
        if outs != classes[next].as_slice() || d.in_neighbors(classes[next][0]) != classes[cur].as_slice() {
            return None;
        }
        if next == start {
            break;
        }
        if visited[next] {
            return None;
        }
        visited[next] = true;
        order.push(next);
        cur = next;
    }
    if order.len() != k {
        return None;
    }
    let cert = ExtendedCycleCertificate::new(
        order
            .into_iter()
            .map(|c| VertexSet::from(classes[c].clone()))
            .collect(),
    );
    debug_assert!(cert.validate(d).is_ok());
    Some(cert)
}

/// An extended cycle with an odd number of parts, at least five.
pub fn is_odd_extended_cycle_ge5(d: &Digraph) -> Option<ExtendedCycleCertificate> {
    recognize_extended_cycle(d).filter(ExtendedCycleCertificate::is_odd_ge5)
}

/// A vertex set inducing a semicomplete digraph whose removal disconnects.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CliqueCutCertificate {
    pub cut: VertexSet,
}

impl CliqueCutCertificate {
    pub fn validate(&self, d: &Digraph) -> bool {
        verify_clique_cut(d, &self.cut)
    }
}

/// `D[B]` is semicomplete and `D - B` is nonempty and disconnected.
pub fn verify_clique_cut(d: &Digraph, cut: &VertexSet) -> bool {
    let Ok(inside) = d.induced(cut) else {
        return false;
    };
    let Ok(rest) = d.remove(cut) else {
        return false;
    };
    inside.digraph.is_semicomplete() && rest.digraph.n() > 0 && !rest.digraph.is_connected()
}

/// If `d[set]` is exactly a directed cycle (no other arcs), its vertices in
/// cycle order starting from the smallest.
pub fn induced_directed_cycle_order(d: &Digraph, set: &[usize]) -> Option<Vec<usize>> {
    let k = set.len();
    if k < 2 {
        return None;
    }
    let mut inside = vec![false; d.n()];
    for &v in set {
        inside[v] = true;
    }
    let mut succ = HashMap::with_capacity(k);
    for &v in set {
        let mut outs = d.out_neighbors(v).iter().filter(|&&w| inside[w]);
        let ins = d.in_neighbors(v).iter().filter(|&&w| inside[w]).count();
        match (outs.next(), outs.next(), ins) {
            (Some(&w), None, 1) => {
                succ.insert(v, w);
            }
            _ => return None,
        }
    }
    let start = *set.iter().min()?;
    let mut order = vec![start];
    let mut cur = succ[&start];
    while cur != start {
        if order.len() == k {
            return None;
        }
        order.push(cur);
        cur = succ[&cur];
    }
    (order.len() == k).then_some(order)
}

fn find_induced_directed_cycle(d: &Digraph, cap: OracleCap, step: usize) -> Result<Option<VertexSet>> {
    cap.check(d.n())?;
    Ok((5..=d.n()).step_by(step).find_map(|k| {
        find_subset(d.n(), k, |mask| {
            let members = mask_members(mask);
            induced_directed_cycle_order(d, &members).map(|_| VertexSet::from(members))
        })
    }))
}

/// Subset search for `S` with `|S|` odd and at least 5 such that `d[S]` is
/// a directed cycle with no further arcs. Smaller cycles are found first.
pub fn find_induced_odd_directed_cycle_ge5(d: &Digraph, cap: OracleCap) -> Result<Option<VertexSet>> {
    find_induced_directed_cycle(d, cap, 2)
}

/// As [`find_induced_odd_directed_cycle_ge5`], any length at least 5.
pub fn find_induced_directed_cycle_ge5(d: &Digraph, cap: OracleCap) -> Result<Option<VertexSet>> {
    find_induced_directed_cycle(d, cap, 1)
}

/// Subset search for `S` with `|S|` odd and at least 5 such that `U(d)[S]`
/// is a chordless cycle but `d[S]` is not a directed cycle.
pub fn find_induced_nonoriented_odd_cycle_ge5(d: &Digraph, cap: OracleCap) -> Result<Option<VertexSet>> {
    cap.check(d.n())?;
    let g = d.underlying_graph();
    Ok((5..=d.n()).step_by(2).find_map(|k| {
        find_subset(d.n(), k, |mask| {
            let members = mask_members(mask);
            let hole = g.chordless_cycle_order(&members).is_some();
            (hole && induced_directed_cycle_order(d, &members).is_none()).then(|| VertexSet::from(members))
        })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(k: usize) -> Digraph {
        Digraph::new(k, (0..k).map(|i| (i, (i + 1) % k))).unwrap()
    }

    fn path(k: usize) -> Digraph {
        Digraph::new(k, (1..k).map(|i| (i - 1, i))).unwrap()
    }

    /// Vertex 0 dominates every vertex of the directed 5-cycle on 1..=5.
    fn apex_c5() -> Digraph {
        Digraph::new(6, (1..=5).map(|i| (i, i % 5 + 1)).chain((1..=5).map(|i| (0, i)))).unwrap()
    }

    fn figure_two() -> Digraph {
        ExtendedCycleCertificate::new(vec![
            [0, 1].into(),
            [2].into(),
            [3, 4, 5].into(),
            [6, 7].into(),
            [8].into(),
        ])
        .rebuild(9)
        .unwrap()
    }

    #[test]
    fn strong_components_examples() {
        let sd = strong_components(&cycle(5));
        assert_eq!(sd.count(), 1);
        assert_eq!(sd.component(0).len(), 5);
        assert_eq!(sd.initial_components(), vec![0]);
        assert_eq!(sd.reach_sets(0).unwrap(), (vec![], vec![]));

        let sd = strong_components(&path(3));
        assert_eq!(sd.count(), 3);
        assert_eq!(
            sd.components(),
            &[
                VertexSet::singleton(0),
                VertexSet::singleton(1),
                VertexSet::singleton(2)
            ]
        );
        assert_eq!(sd.condensation().arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(sd.initial_components(), vec![sd.component_of(0)]);
        let (before, _) = sd.reach_sets(sd.component_of(2)).unwrap();
        assert_eq!(before, vec![sd.component_of(0), sd.component_of(1)]);
    }

    #[test]
    fn apex_over_c5_components() {
        let d = apex_c5();
        let sd = strong_components(&d);
        assert_eq!(sd.count(), 2);
        let apex = sd.component_of(0);
        let ring = sd.component_of(1);
        assert_eq!(sd.component(apex), &VertexSet::singleton(0));
        assert_eq!(sd.component(ring), &VertexSet::from([1, 2, 3, 4, 5]));
        assert_eq!(sd.condensation().arcs().collect::<Vec<_>>(), vec![(apex, ring)]);
        assert_eq!(sd.reach_sets(ring).unwrap(), (vec![apex], vec![]));
        assert_eq!(sd.initial_components(), vec![apex]);
    }

    #[test]
    fn reach_sets_rejects_bad_index() {
        let sd = strong_components(&path(2));
        assert_eq!(
            sd.reach_sets(2),
            Err(Error::ComponentIndex { index: 2, count: 2 })
        );
    }

    #[test]
    fn figure_two_is_recognized() {
        let d = figure_two();
        let cert = recognize_extended_cycle(&d).unwrap();
        assert_eq!(cert.part_sizes(), vec![2, 1, 3, 2, 1]);
        assert_eq!(cert.parts()[0], VertexSet::from([0, 1]));
        assert!(is_odd_extended_cycle_ge5(&d).is_some());
        assert_eq!(cert.rebuild(9).unwrap(), d);
    }

    #[test]
    fn directed_cycles_are_extended_cycles() {
        for k in 3..8 {
            let cert = recognize_extended_cycle(&cycle(k)).unwrap();
            assert_eq!(cert.k(), k);
            assert!(cert.parts().iter().all(|p| p.len() == 1));
        }
        assert!(is_odd_extended_cycle_ge5(&cycle(6)).is_none());
        assert_eq!(is_odd_extended_cycle_ge5(&cycle(5)).unwrap().k(), 5);
    }

    #[test]
    fn transitive_triangle_is_not_an_extended_cycle() {
        let tt = Digraph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(recognize_extended_cycle(&tt).is_none());
        let digon = Digraph::new(2, [(0, 1), (1, 0)]).unwrap();
        assert!(recognize_extended_cycle(&digon).is_none());
    }

    #[test]
    fn certificate_validation_reports_reasons() {
        let d = cycle(5);
        let bad =
            ExtendedCycleCertificate::new(vec![[0].into(), [2].into(), [1].into(), [3].into(), [4].into()]);
        assert!(bad.validate(&d).unwrap_err().contains("arc"));
        let short = ExtendedCycleCertificate::new(vec![[0, 2].into(), [1, 3, 4].into()]);
        assert!(short.validate(&d).is_err());
    }

    #[test]
    fn reversed_certificate_fits_inverse() {
        let d = figure_two();
        let cert = recognize_extended_cycle(&d).unwrap();
        let rev = cert.reversed();
        assert!(rev.validate(&d.inverse()).is_ok());
        assert_eq!(recognize_extended_cycle(&d.inverse()).unwrap(), rev);
    }

    #[test]
    fn clique_cut_examples() {
        assert!(verify_clique_cut(&path(3), &VertexSet::singleton(1)));
        assert!(!verify_clique_cut(&cycle(5), &VertexSet::new()));
        let d = Digraph::new(7, apex_c5().arcs().chain([(0, 6)])).unwrap();
        assert!(verify_clique_cut(&d, &VertexSet::singleton(0)));
        // Removing everything leaves nothing to disconnect.
        assert!(!verify_clique_cut(&path(2), &VertexSet::from([0, 1])));
    }

    #[test]
    fn odd_directed_cycle_search() {
        let cap = OracleCap::DEFAULT;
        assert_eq!(
            find_induced_odd_directed_cycle_ge5(&cycle(5), cap).unwrap(),
            Some(VertexSet::from([0, 1, 2, 3, 4]))
        );
        let chorded = cycle(5).with_arcs([(0, 2)]).unwrap();
        assert_eq!(find_induced_odd_directed_cycle_ge5(&chorded, cap).unwrap(), None);
        assert_eq!(find_induced_odd_directed_cycle_ge5(&path(7), cap).unwrap(), None);
        assert_eq!(
            find_induced_odd_directed_cycle_ge5(&path(7), OracleCap::new(6).unwrap()),
            Err(Error::NotComputed { n: 7, cap: 6 })
        );
    }

    #[test]
    fn nonoriented_odd_cycle_search() {
        let cap = OracleCap::DEFAULT;
        assert_eq!(
            find_induced_nonoriented_odd_cycle_ge5(&cycle(5), cap).unwrap(),
            None
        );
        let flipped = Digraph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(
            find_induced_nonoriented_odd_cycle_ge5(&flipped, cap).unwrap(),
            Some(VertexSet::from([0, 1, 2, 3, 4]))
        );
        let complete = Digraph::new(
            5,
            (0..5).flat_map(|u| (0..5).filter(move |&v| v != u).map(move |v| (u, v))),
        )
        .unwrap();
        assert_eq!(
            find_induced_nonoriented_odd_cycle_ge5(&complete, cap).unwrap(),
            None
        );
    }

    #[test]
    fn directed_cycle_order_rejects_digons() {
        let d = cycle(5).with_arcs([(1, 0)]).unwrap();
        assert_eq!(induced_directed_cycle_order(&d, &[0, 1, 2, 3, 4]), None);
        assert_eq!(
            induced_directed_cycle_order(&cycle(5), &[0, 1, 2, 3, 4]),
            Some(vec![0, 1, 2, 3, 4])
        );
    }
}
