//! Reference implementations used only by the tests. Each one follows a
//! definition directly and shares no code with the library routine it
//! checks.

#![allow(dead_code)]

use arclocal::classes::Pattern;
use arclocal::digraph::{Digraph, UndirectedGraph};
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

pub fn adjacent(d: &Digraph, u: usize, v: usize) -> bool {
    d.arc(u, v) || d.arc(v, u)
}

fn distinct4(a: usize, b: usize, c: usize, e: usize) -> bool {
    a != b && a != c && a != e && b != c && b != e && c != e
}

/// In-neighbors of adjacent vertices are adjacent: for distinct `x, y, u, v`
/// with `u`, `v` adjacent, `x -> u` and `y -> v`, the vertices `x` and `y`
/// are adjacent.
pub fn in_condition(d: &Digraph) -> bool {
    let n = d.n();
    for u in 0..n {
        for v in 0..n {
            if u == v || !adjacent(d, u, v) {
                continue;
            }
            for x in 0..n {
                for y in 0..n {
                    if distinct4(x, y, u, v) && d.arc(x, u) && d.arc(y, v) && !adjacent(d, x, y) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// The mirror condition on out-neighbors.
pub fn out_condition(d: &Digraph) -> bool {
    let n = d.n();
    for u in 0..n {
        for v in 0..n {
            if u == v || !adjacent(d, u, v) {
                continue;
            }
            for x in 0..n {
                for y in 0..n {
                    if distinct4(x, y, u, v) && d.arc(u, x) && d.arc(v, y) && !adjacent(d, x, y) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn pattern_arcs(p: Pattern, [a, b, c, e]: [usize; 4]) -> [(usize, usize); 3] {
    match p {
        Pattern::H1 => [(a, b), (b, c), (e, c)],
        Pattern::H2 => [(b, a), (b, c), (c, e)],
        Pattern::H3 => [(a, b), (b, c), (c, e)],
        Pattern::H4 => [(b, a), (b, c), (e, c)],
        Pattern::AntiCirculant => [(a, b), (c, b), (c, e)],
    }
}

fn tuple_violates(d: &Digraph, p: Pattern, t: [usize; 4]) -> bool {
    let [a, _, _, e] = t;
    distinct4(t[0], t[1], t[2], t[3])
        && pattern_arcs(p, t).iter().all(|&(x, y)| d.arc(x, y))
        && match p {
            Pattern::AntiCirculant => !d.arc(e, a),
            _ => !adjacent(d, a, e),
        }
}

/// The first violating 4-tuple over all ordered tuples, in `(v2, v3, v1, v4)`
/// lexicographic order.
pub fn brute_violation(d: &Digraph, p: Pattern) -> Option<[usize; 4]> {
    let n = d.n();
    for b in 0..n {
        for c in 0..n {
            for a in 0..n {
                for e in 0..n {
                    if tuple_violates(d, p, [a, b, c, e]) {
                        return Some([a, b, c, e]);
                    }
                }
            }
        }
    }
    None
}

/// All-pairs reachability by Floyd-Warshall.
pub fn reachability(d: &Digraph) -> Vec<Vec<bool>> {
    let n = d.n();
    let mut r: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| u == v || d.arc(u, v)).collect())
        .collect();
    for k in 0..n {
        let via = r[k].clone();
        for row in r.iter_mut() {
            if row[k] {
                for (cell, &hop) in row.iter_mut().zip(&via) {
                    *cell |= hop;
                }
            }
        }
    }
    r
}

/// Connectivity of the underlying graph by union-find.
pub fn weakly_connected(d: &Digraph) -> bool {
    let n = d.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (u, v) in d.arcs() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        parent[a] = b;
    }
    (0..n).filter(|&v| find(&mut parent, v) == v).count() <= 1
}

/// Bipartiteness of `U(d)` by trying every 2-coloring.
pub fn brute_bipartite(d: &Digraph) -> bool {
    let n = d.n();
    assert!(n <= 16);
    (0u32..1 << n).any(|mask| d.arcs().all(|(u, v)| (mask >> u & 1) != (mask >> v & 1)))
}

/// Extended cycle recognition by trying every labeling `V -> Z_k`, `k >= 3`,
/// with every label used: `u -> v` must hold exactly when `f(v) = f(u) + 1`.
/// Returns the parts starting from the part of vertex 0.
pub fn brute_extended_cycle(d: &Digraph) -> Option<Vec<Vec<usize>>> {
    let n = d.n();
    for k in 3..=n {
        let mut label = vec![0usize; n];
        if assign(d, k, 1, &mut label) {
            let mut parts = vec![Vec::new(); k];
            for v in 0..n {
                parts[label[v]].push(v);
            }
            return Some(parts);
        }
    }
    None
}

fn assign(d: &Digraph, k: usize, next: usize, label: &mut [usize]) -> bool {
    let n = d.n();
    if next == n {
        let mut used = vec![false; k];
        for &l in label.iter() {
            used[l] = true;
        }
        return used.iter().all(|&u| u);
    }
    for l in 0..k {
        label[next] = l;
        let consistent = (0..next).all(|u| {
            d.arc(u, next) == ((label[u] + 1) % k == l) && d.arc(next, u) == ((l + 1) % k == label[u])
        });
        if consistent && assign(d, k, next + 1, label) {
            return true;
        }
    }
    false
}

/// A random chordal graph: the intersection graph of random subtrees of a
/// random tree.
pub fn random_chordal(rng: &mut impl Rng, n: usize) -> UndirectedGraph {
    let t = rng.random_range(2..=2 * n);
    let mut tree_adj = vec![Vec::new(); t];
    for i in 1..t {
        let p = rng.random_range(0..i);
        tree_adj[i].push(p);
        tree_adj[p].push(i);
    }
    let subtrees: Vec<Vec<bool>> = (0..n)
        .map(|_| {
            let mut inside = vec![false; t];
            let mut frontier = vec![rng.random_range(0..t)];
            inside[frontier[0]] = true;
            let target = rng.random_range(1..=t);
            let mut size = 1;
            while size < target {
                let Some(&x) = frontier.choose(rng) else { break };
                let fresh: Vec<usize> = tree_adj[x].iter().copied().filter(|&y| !inside[y]).collect();
                match fresh.choose(rng) {
                    Some(&y) => {
                        inside[y] = true;
                        frontier.push(y);
                        size += 1;
                    }
                    None => frontier.retain(|&z| z != x),
                }
            }
            inside
        })
        .collect();
    let edges = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| (0..t).any(|x| subtrees[u][x] && subtrees[v][x]));
    UndirectedGraph::new(n, edges.collect::<Vec<_>>()).unwrap()
}

/// Chordality by repeatedly removing a simplicial vertex.
pub fn is_chordal(g: &UndirectedGraph) -> bool {
    let mut alive: Vec<bool> = vec![true; g.n()];
    for _ in 0..g.n() {
        let simplicial = (0..g.n()).find(|&v| {
            alive[v] && {
                let nb: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| alive[u]).collect();
                nb.iter().all(|&a| nb.iter().all(|&b| a == b || g.has_edge(a, b)))
            }
        });
        match simplicial {
            Some(v) => alive[v] = false,
            None => return false,
        }
    }
    true
}

/// Every simple undirected graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = UndirectedGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        UndirectedGraph::new(n, edges.collect::<Vec<_>>()).unwrap()
    })
}

/// 2-colorability of an undirected graph by trying every coloring.
pub fn graph_bipartite(g: &UndirectedGraph) -> bool {
    (0u32..1 << g.n()).any(|mask| g.edges().all(|(u, v)| (mask >> u & 1) != (mask >> v & 1)))
}

pub fn shuffled_labels(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
