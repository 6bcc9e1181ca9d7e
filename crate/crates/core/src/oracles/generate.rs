//! Constructions and seeded random generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classes::{find_pattern_violation, DigraphClass, Pattern};
use crate::digraph::{Digraph, VertexSet};
use crate::error::{Error, Result};
use crate::structure::ExtendedCycleCertificate;

/// `C[X1, ..., Xk]` with `|Xi| = sizes[i]`; parts take consecutive labels.
pub fn make_extended_cycle(sizes: &[usize]) -> Result<(Digraph, ExtendedCycleCertificate)> {
    if sizes.len() < 3 {
        return Err(Error::InvalidArgument(format!(
            "an extended cycle needs at least 3 parts, got {}",
            sizes.len()
        )));
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::InvalidArgument(format!("part {} is empty", i + 1)));
    }
    let mut parts = Vec::with_capacity(sizes.len());
    let mut next = 0;
    for &size in sizes {
        parts.push((next..next + size).collect::<VertexSet>());
        next += size;
    }
    let cert = ExtendedCycleCertificate::new(parts);
    Ok((cert.rebuild(next)?, cert))
}

/// `D[H_0, ..., H_{n-1}]`: each vertex `i` of `d` is replaced by a copy of
/// `parts[i]`, and every arc `i -> j` becomes all arcs from the copy of
/// `parts[i]` to the copy of `parts[j]`. Copies are labeled consecutively.
pub fn compose(d: &Digraph, parts: &[Digraph]) -> Result<Digraph> {
    if parts.len() != d.n() {
        return Err(Error::InvalidArgument(format!(
            "composition needs {} parts, got {}",
            d.n(),
            parts.len()
        )));
    }
    let mut offsets = Vec::with_capacity(parts.len() + 1);
    offsets.push(0);
    for p in parts {
        offsets.push(offsets.last().copied().unwrap_or(0) + p.n());
    }
    let total = offsets[parts.len()];
    let offsets = &offsets;
    let span = move |i: usize| offsets[i]..offsets[i + 1];
    let inner = parts
        .iter()
        .enumerate()
        .flat_map(|(i, p)| p.arcs().map(move |(u, v)| (u + offsets[i], v + offsets[i])));
    let outer = d
        .arcs()
        .flat_map(|(i, j)| span(i).flat_map(move |u| span(j).map(move |v| (u, v))));
    Digraph::new(total, inner.chain(outer).collect::<Vec<_>>())
}

/// Composition with edgeless parts of the given sizes.
pub fn make_extension(d: &Digraph, sizes: &[usize]) -> Result<Digraph> {
    let parts: Vec<Digraph> = sizes.iter().map(|&s| Digraph::empty(s)).collect();
    compose(d, &parts)
}

/// Independent random choices per unordered pair: a digon with probability
/// `p_digon`, otherwise a single arc of uniformly random direction with
/// probability `p_arc`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomModel {
    pub n: usize,
    pub p_arc: f64,
    pub p_digon: f64,
    pub seed: u64,
}

impl RandomModel {
    pub fn new(n: usize, p_arc: f64, p_digon: f64, seed: u64) -> Result<Self> {
        let model = Self {
            n,
            p_arc,
            p_digon,
            seed,
        };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, p) in [("p_arc", self.p_arc), ("p_digon", self.p_digon)] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidArgument(format!(
                    "{name} = {p} is not a probability"
                )));
            }
        }
        Ok(())
    }

    pub fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

fn sample_pairs(rng: &mut impl Rng, n: usize, p_arc: f64, p_digon: f64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p_digon) {
                arcs.extend([(u, v), (v, u)]);
            } else if rng.random_bool(p_arc) {
                arcs.push(if rng.random_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
    }
    Digraph::new(n, arcs).expect("sampled arcs are in range and loop-free")
}

pub fn random_digraph(model: &RandomModel) -> Result<Digraph> {
    model.validate()?;
    Ok(sample_pairs(
        &mut model.rng(),
        model.n,
        model.p_arc,
        model.p_digon,
    ))
}

/// Rejection sampling: draws up to `max_tries` digraphs from one seeded
/// stream and returns the first member of `class`.
pub fn random_class_member(
    model: &RandomModel,
    class: DigraphClass,
    max_tries: usize,
) -> Result<Option<Digraph>> {
    model.validate()?;
    let mut rng = model.rng();
    Ok((0..max_tries)
        .map(|_| sample_pairs(&mut rng, model.n, model.p_arc, model.p_digon))
        .find(|d| class.contains(d)))
}

/// Adds an arc between the endpoints of each violation until none is left.
pub fn repair_into_class(d: &Digraph, class: DigraphClass, rng: &mut impl Rng) -> Digraph {
    let mut current = d.clone();
    while let Some(w) = class.violation(&current) {
        let [v1, _, _, v4] = w.vertices;
        let arc = if rng.random_bool(0.5) { (v1, v4) } else { (v4, v1) };
        current = current.with_arcs([arc]).expect("witness vertices are in range");
    }
    current
}

fn random_semicomplete(rng: &mut impl Rng, vertices: &[usize], arcs: &mut Vec<(usize, usize)>, p_digon: f64) {
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if rng.random_bool(p_digon) {
                arcs.extend([(u, v), (v, u)]);
            } else if rng.random_bool(0.5) {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
    }
}

fn relabel_randomly(rng: &mut impl Rng, d: &Digraph) -> Digraph {
    let mut perm: Vec<usize> = d.vertices().collect();
    perm.shuffle(rng);
    Digraph::new(d.n(), d.arcs().map(|(u, v)| (perm[u], perm[v]))).expect("permutation keeps arcs valid")
}

/// A candidate built around an odd extended cycle `Q` with `V1 -> Q`
/// strictly, a bipartite `V3` below, and optional pendant vertices hanging
/// off `V1` (which create clique cuts). Membership is not guaranteed; the
/// caller filters.
pub fn assemble_in_candidate(rng: &mut impl Rng, n: usize) -> Digraph {
    if n < 5 {
        return sample_pairs(rng, n, 0.5, 0.1);
    }
    let mut ks: Vec<usize> = (5..=n).step_by(2).collect();
    ks.truncate(3);
    let k = ks[rng.random_range(0..ks.len())];
    let q_size = rng.random_range(k..=n.min(k + 3));
    let rest = n - q_size;
    let a = rng.random_range(0..=rest);
    let b = rng.random_range(0..=rest - a);
    let c = rest - a - b;

    let mut next = 0;
    let mut take = |count: usize| {
        let block: Vec<usize> = (next..next + count).collect();
        next += count;
        block
    };
    let mut sizes = vec![1; k];
    for _ in k..q_size {
        sizes[rng.random_range(0..k)] += 1;
    }
    let parts: Vec<Vec<usize>> = sizes.iter().map(|&s| take(s)).collect();
    let v1 = take(a);
    let v3 = take(b);
    let pendants = take(c);

    let mut arcs = Vec::new();
    for i in 0..k {
        for &u in &parts[i] {
            for &v in &parts[(i + 1) % k] {
                arcs.push((u, v));
            }
        }
    }
    random_semicomplete(rng, &v1, &mut arcs, 0.2);
    for &u in &v1 {
        for part in &parts {
            arcs.extend(part.iter().map(|&v| (u, v)));
        }
    }
    // V3: a random bipartite digraph, fed by whole parts of Q and by V1.
    let side: Vec<bool> = v3.iter().map(|_| rng.random_bool(0.5)).collect();
    let p_cross = rng.random_range(0.2..0.8);
    for (i, &u) in v3.iter().enumerate() {
        for (j, &v) in v3.iter().enumerate().skip(i + 1) {
            if side[i] != side[j] && rng.random_bool(p_cross) {
                arcs.push(if rng.random_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
    }
    for &y in &v3 {
        if rng.random_bool(0.6) {
            let part = &parts[rng.random_range(0..k)];
            arcs.extend(part.iter().map(|&x| (x, y)));
        }
        for &u in &v1 {
            if rng.random_bool(0.3) {
                arcs.push((u, y));
            }
        }
    }
    for (i, &w) in pendants.iter().enumerate() {
        let mut attached = false;
        for &u in &v1 {
            if rng.random_bool(0.5) {
                attached = true;
                arcs.push(if rng.random_bool(0.5) { (u, w) } else { (w, u) });
            }
        }
        if let Some(&u) = v1.first().filter(|_| !attached) {
            arcs.push((u, w));
        }
        for &x in &pendants[..i] {
            if rng.random_bool(0.3) {
                arcs.push(if rng.random_bool(0.5) { (x, w) } else { (w, x) });
            }
        }
    }
    let d = Digraph::new(n, arcs).expect("assembled arcs are valid");
    relabel_randomly(rng, &d)
}

/// A connected random digraph: a random spanning tree with random arc
/// directions plus independent extra pairs.
pub fn random_connected(rng: &mut impl Rng, n: usize, p_extra: f64, p_digon: f64) -> Digraph {
    let mut arcs = Vec::new();
    for v in 1..n {
        let u = rng.random_range(0..v);
        arcs.push(if rng.random_bool(0.5) { (u, v) } else { (v, u) });
    }
    let extra = sample_pairs(rng, n, p_extra, p_digon);
    let d = Digraph::new(n, arcs.into_iter().chain(extra.arcs()).collect::<Vec<_>>()).expect("valid arcs");
    relabel_randomly(rng, &d)
}

/// Candidates for arc-locally semicomplete digraphs, drawn from the shapes
/// that class is known to contain plus repaired random digraphs.
fn als_candidate(rng: &mut impl Rng, n: usize) -> Digraph {
    match rng.random_range(0..5) {
        0 => {
            // Extension of a directed path or cycle.
            let k = rng.random_range(2..=n.min(6));
            let mut sizes = vec![1; k];
            for _ in k..n {
                sizes[rng.random_range(0..k)] += 1;
            }
            let closed = k >= 3 && rng.random_bool(0.5);
            let base = Digraph::new(k, (1..k).map(|i| (i - 1, i)).chain(closed.then_some((k - 1, 0))))
                .expect("valid");
            relabel_randomly(rng, &make_extension(&base, &sizes).expect("arity matches"))
        }
        1 => {
            let mut arcs = Vec::new();
            random_semicomplete(rng, &(0..n).collect::<Vec<_>>(), &mut arcs, 0.2);
            Digraph::new(n, arcs).expect("valid")
        }
        2 => {
            // Semicomplete bipartite.
            let left = rng.random_range(1..n);
            let mut arcs = Vec::new();
            for u in 0..left {
                for v in left..n {
                    match rng.random_range(0..3) {
                        0 => arcs.push((u, v)),
                        1 => arcs.push((v, u)),
                        _ => arcs.extend([(u, v), (v, u)]),
                    }
                }
            }
            relabel_randomly(rng, &Digraph::new(n, arcs).expect("valid"))
        }
        _ => {
            let p = rng.random_range(0.05..0.5);
            let d = random_connected(rng, n, p, 0.1);
            repair_into_class(&d, DigraphClass::ArcLocallySemicomplete, rng)
        }
    }
}

/// A reproducible population of connected members of `class` with vertex
/// counts drawn uniformly from `sizes`.
///
/// Candidates rotate between plain rejection sampling, repaired random
/// digraphs, and structured assemblies around odd extended cycles; only
/// candidates the recognizer accepts are kept. Out-semicomplete members are
/// inverses of in-semicomplete ones.
pub fn random_connected_members(
    class: DigraphClass,
    sizes: std::ops::RangeInclusive<usize>,
    count: usize,
    seed: u64,
) -> Vec<Digraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = Vec::with_capacity(count);
    let mut attempt = 0usize;
    while found.len() < count {
        attempt += 1;
        assert!(
            attempt <= count.saturating_mul(1000).max(100_000),
            "generator stalled for {class}"
        );
        let n = rng.random_range(sizes.clone());
        let candidate = match class {
            DigraphClass::ArcLocallySemicomplete => als_candidate(&mut rng, n),
            _ => match attempt % 4 {
                0 => {
                    let p = rng.random_range(0.1..0.45);
                    random_connected(&mut rng, n, p, 0.05)
                }
                1 => {
                    let p = rng.random_range(0.05..0.6);
                    let d = random_connected(&mut rng, n, p, 0.15);
                    repair_into_class(&d, DigraphClass::InSemicomplete, &mut rng)
                }
                _ => assemble_in_candidate(&mut rng, n),
            },
        };
        let candidate = match class {
            DigraphClass::OutSemicomplete => candidate.inverse(),
            _ => candidate,
        };
        if candidate.is_connected() && class.contains(&candidate) {
            found.push(candidate);
        }
    }
    found
}

/// Whether `d` avoids `pattern`; a convenience for generator filters.
pub fn avoids(d: &Digraph, pattern: Pattern) -> bool {
    find_pattern_violation(d, pattern).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::edgelist::serialize;

    #[test]
    fn figure_two_construction() {
        let (d, cert) = make_extended_cycle(&[2, 1, 3, 2, 1]).unwrap();
        assert_eq!(d.n(), 9);
        assert_eq!(d.arc_count(), 2 + 3 + 6 + 2 + 2);
        assert_eq!(cert.part_sizes(), vec![2, 1, 3, 2, 1]);
        assert!(cert.validate(&d).is_ok());
    }

    #[test]
    fn extended_cycle_preconditions() {
        assert!(make_extended_cycle(&[1, 1]).is_err());
        assert!(make_extended_cycle(&[1, 0, 1]).is_err());
        let (c5, _) = make_extended_cycle(&[1; 5]).unwrap();
        assert_eq!(
            c5.arcs().collect::<Vec<_>>(),
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
        );
    }

    #[test]
    fn extension_of_an_arc_is_one_way_complete_bipartite() {
        let arc = Digraph::new(2, [(0, 1)]).unwrap();
        let d = make_extension(&arc, &[2, 3]).unwrap();
        assert_eq!(d.n(), 5);
        assert_eq!(d.arc_count(), 6);
        assert!(d.arcs().all(|(u, v)| u < 2 && v >= 2));
    }

    #[test]
    fn composition_over_one_vertex_is_identity() {
        let part = Digraph::new(3, [(0, 1), (2, 1)]).unwrap();
        assert_eq!(
            compose(&Digraph::empty(1), std::slice::from_ref(&part)).unwrap(),
            part
        );
        assert!(compose(&Digraph::empty(2), &[part]).is_err());
    }

    #[test]
    fn extension_of_c5_is_the_extended_cycle() {
        let (c5, _) = make_extended_cycle(&[1; 5]).unwrap();
        let sizes = [2, 1, 3, 2, 1];
        assert_eq!(
            make_extension(&c5, &sizes).unwrap(),
            make_extended_cycle(&sizes).unwrap().0
        );
    }

    #[test]
    fn random_digraphs_are_reproducible() {
        let model = RandomModel::new(6, 0.4, 0.2, 7).unwrap();
        let a = serialize(&random_digraph(&model).unwrap());
        let b = serialize(&random_digraph(&model).unwrap());
        assert_eq!(a, b);
        let full = RandomModel::new(5, 1.0, 1.0, 1).unwrap();
        assert_eq!(random_digraph(&full).unwrap().arc_count(), 20);
        assert!(RandomModel::new(3, 1.5, 0.0, 0).is_err());
    }

    #[test]
    fn rejection_sampled_member_is_in_class() {
        let model = RandomModel::new(8, 0.3, 0.05, 11).unwrap();
        let d = random_class_member(&model, DigraphClass::InSemicomplete, 10_000)
            .unwrap()
            .unwrap();
        assert!(avoids(&d, Pattern::H1));
    }

    #[test]
    fn repair_converges() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let d = random_connected(&mut rng, 7, 0.3, 0.1);
            let fixed = repair_into_class(&d, DigraphClass::ArcLocallySemicomplete, &mut rng);
            assert!(DigraphClass::ArcLocallySemicomplete.contains(&fixed));
            assert!(d.arcs().all(|(u, v)| fixed.arc(u, v)));
        }
    }

    #[test]
    fn member_populations_are_members_and_reproducible() {
        for class in [
            DigraphClass::InSemicomplete,
            DigraphClass::OutSemicomplete,
            DigraphClass::ArcLocallySemicomplete,
        ] {
            let a = random_connected_members(class, 6..=8, 30, 5);
            assert!(a.iter().all(|d| d.is_connected() && class.contains(d)));
            assert_eq!(a, random_connected_members(class, 6..=8, 30, 5));
        }
    }
}
