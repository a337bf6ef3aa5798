//! Exact isomorphism by backtracking, pruned by vertex profiles (degree and
//! distance histogram) and by pairwise distance consistency. Intended for
//! graphs on a dozen or so vertices.

use super::Graph;

const UNREACHABLE: usize = usize::MAX;

struct Profiled {
    dist: Vec<Vec<usize>>,
    profile: Vec<Vec<usize>>,
}

impl Profiled {
    fn new(g: &Graph) -> Self {
        let k = g.order();
        let dist: Vec<Vec<usize>> = (0..k)
            .map(|v| {
                g.bfs_distances(v)
                    .into_iter()
                    .map(|d| d.unwrap_or(UNREACHABLE))
                    .collect()
            })
            .collect();
        let profile = dist
            .iter()
            .enumerate()
            .map(|(v, row)| {
                let mut hist = vec![0usize; k + 1];
                let mut unreachable = 0;
                for &d in row {
                    if d == UNREACHABLE {
                        unreachable += 1;
                    } else {
                        hist[d] += 1;
                    }
                }
                let mut p = vec![g.degree(v), unreachable];
                p.extend(hist);
                p
            })
            .collect();
        Profiled { dist, profile }
    }

    fn sorted_profiles(&self) -> Vec<Vec<usize>> {
        let mut p = self.profile.clone();
        p.sort();
        p
    }
}

/// Isomorphism-invariant fingerprint: sorted per-vertex profiles, each
/// extended with the sorted degrees of the neighbours.
pub(crate) fn invariant_key(g: &Graph) -> Vec<Vec<usize>> {
    let p = Profiled::new(g);
    let mut key: Vec<Vec<usize>> = p
        .profile
        .into_iter()
        .enumerate()
        .map(|(v, mut prof)| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            prof.extend(nd);
            prof
        })
        .collect();
    key.sort();
    key
}

/// A vertex bijection `σ` with `u ~ v ⇔ σ(u) ~ σ(v)`, if one exists.
/// `σ[v]` is the image in `g2` of vertex `v` of `g1`.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    if g1.order() != g2.order() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let a = Profiled::new(g1);
    let b = Profiled::new(g2);
    if a.sorted_profiles() != b.sorted_profiles() {
        return None;
    }
    let mut search = Search::new(g1, &a, g2, &b);
    search.run(false);
    search.found.into_iter().next()
}

/// Every automorphism of `g`, in lexicographic order of the image vectors.
pub fn automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    let p = Profiled::new(g);
    let mut search = Search::new(g, &p, g, &p);
    search.run(true);
    search.found.sort();
    search.found
}

struct Search<'a> {
    g1: &'a Graph,
    a: &'a Profiled,
    g2: &'a Graph,
    b: &'a Profiled,
    order: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
    found: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(g1: &'a Graph, a: &'a Profiled, g2: &'a Graph, b: &'a Profiled) -> Self {
        let k = g1.order();
        // Visit vertices with rare profiles first, then grow along edges so
        // each new vertex is constrained by already-mapped neighbours.
        let mut order = Vec::with_capacity(k);
        let rarity = |v: usize| a.profile.iter().filter(|p| **p == a.profile[v]).count();
        let mut placed = vec![false; k];
        while order.len() < k {
            let next = (0..k)
                .filter(|&v| !placed[v])
                .min_by_key(|&v| {
                    let linked = order.iter().filter(|&&u| g1.has_edge(u, v)).count();
                    (usize::MAX - linked, rarity(v), v)
                })
                .expect("unplaced vertex");
            placed[next] = true;
            order.push(next);
        }
        Search {
            g1,
            a,
            g2,
            b,
            order,
            image: vec![usize::MAX; k],
            used: vec![false; k],
            found: Vec::new(),
        }
    }

    fn run(&mut self, all: bool) {
        self.extend(0, all);
    }

    fn extend(&mut self, depth: usize, all: bool) -> bool {
        if depth == self.order.len() {
            self.found.push(self.image.clone());
            return !all;
        }
        let v = self.order[depth];
        for w in 0..self.g2.order() {
            if self.used[w] || self.a.profile[v] != self.b.profile[w] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                let iu = self.image[u];
                self.g1.has_edge(u, v) == self.g2.has_edge(iu, w)
                    && self.a.dist[u][v] == self.b.dist[iu][w]
            });
            if !consistent {
                continue;
            }
            self.image[v] = w;
            self.used[w] = true;
            let done = self.extend(depth + 1, all);
            self.used[w] = false;
            self.image[v] = usize::MAX;
            if done {
                return true;
            }
        }
        false
    }
}
