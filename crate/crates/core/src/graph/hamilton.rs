use serde::Serialize;

use super::{Cost, SwitchingGraph};
use crate::error::{Error, Result};

/// Largest arm count accepted by the exact solver (`2^k * k` states).
pub const EXACT_SOLVER_CAP: usize = 18;

/// A Hamiltonian path `order[0] -> … -> order[k-1]` and its weight.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HamiltonianPath {
    pub order: Vec<usize>,
    /// `Σ c[order[j]][order[j+1]]`, summed left to right.
    pub weight: Cost,
    /// Whether `weight` is the true minimum.
    pub exact: bool,
}

impl HamiltonianPath {
    /// Checks that `order` is a permutation of the graph's arms and that
    /// `weight` matches it.
    pub fn validate(&self, g: &SwitchingGraph) -> Result<()> {
        let k = g.arms();
        let mut seen = vec![false; k];
        if self.order.len() != k {
            return Err(Error::BadPath(format!("{} vertices for {k} arms", self.order.len())));
        }
        for &v in &self.order {
            if v >= k || std::mem::replace(&mut seen[v], true) {
                return Err(Error::BadPath(format!("{:?} is not a permutation", self.order)));
            }
        }
        if g.walk_cost(&self.order) != self.weight {
            return Err(Error::BadPath("weight does not match the order".into()));
        }
        Ok(())
    }
}

/// Exact shortest Hamiltonian path with free endpoints by dynamic
/// programming over (visited set, current vertex).
///
/// Among minimum-weight paths the lexicographically smallest vertex order is
/// returned. The weight is infinite when every Hamiltonian path uses a
/// forbidden edge.
pub fn shortest_hamiltonian_path_exact(g: &SwitchingGraph) -> Result<HamiltonianPath> {
    let k = g.arms();
    if k > EXACT_SOLVER_CAP {
        return Err(Error::TooLarge { k, cap: EXACT_SOLVER_CAP });
    }
    if k == 1 {
        return Ok(HamiltonianPath { order: vec![0], weight: Cost::ZERO, exact: true });
    }
    let full = (1usize << k) - 1;
    // togo[mask * k + v]: cheapest way to visit every vertex outside `mask`
    // starting from v, where v is in mask
    let mut togo = vec![Cost::INFINITY; (full + 1) * k];
    for v in 0..k {
        togo[full * k + v] = Cost::ZERO;
    }
    for mask in (1..full).rev() {
        for v in 0..k {
            if mask & (1 << v) == 0 {
                continue;
            }
            let mut best = Cost::INFINITY;
            for u in 0..k {
                if mask & (1 << u) != 0 {
                    continue;
                }
                let c = g.cost(v, u) + togo[(mask | (1 << u)) * k + u];
                if c < best {
                    best = c;
                }
            }
            togo[mask * k + v] = best;
        }
    }

    let start = (0..k).min_by_key(|&v| (togo[(1 << v) * k + v], v)).expect("k >= 1");
    let mut order = Vec::with_capacity(k);
    order.push(start);
    let mut mask = 1usize << start;
    let mut at = start;
    while mask != full {
        let target = togo[mask * k + at];
        let next = (0..k)
            .filter(|&u| mask & (1 << u) == 0)
            .find(|&u| g.cost(at, u) + togo[(mask | (1 << u)) * k + u] == target)
            .expect("optimal successor exists");
        mask |= 1 << next;
        order.push(next);
        at = next;
    }
    let weight = g.walk_cost(&order);
    Ok(HamiltonianPath { order, weight, exact: true })
}

/// Approximate shortest Hamiltonian path for metric graphs.
///
/// Builds a minimum spanning tree, pairs its odd-degree vertices greedily by
/// weight, walks an Eulerian circuit of the union, shortcuts repeated
/// vertices and drops the heaviest edge of the resulting tour. The plain
/// doubled-tree tour is built the same way and the lighter of the two paths
/// is returned, which keeps the result within twice the optimum.
pub fn shortest_hamiltonian_path_approx(g: &SwitchingGraph) -> Result<HamiltonianPath> {
    if !g.is_metric() {
        return Err(Error::NotMetric);
    }
    let k = g.arms();
    if k <= 2 {
        let order: Vec<usize> = (0..k).collect();
        let weight = g.walk_cost(&order);
        return Ok(HamiltonianPath { order, weight, exact: true });
    }
    let tree = minimum_spanning_tree(g);

    let mut degree = vec![0usize; k];
    for &(a, b) in &tree {
        degree[a] += 1;
        degree[b] += 1;
    }
    let odd: Vec<usize> = (0..k).filter(|&v| degree[v] % 2 == 1).collect();
    let mut multigraph = tree.clone();
    multigraph.extend(greedy_matching(g, &odd));
    let christofides = tour_to_path(g, shortcut(&eulerian_circuit(k, &multigraph)));

    let doubled = tour_to_path(g, preorder(k, &tree));

    let best = if doubled.1 < christofides.1 { doubled } else { christofides };
    let mut order = best.0;
    if order.first() > order.last() {
        order.reverse();
    }
    let weight = g.walk_cost(&order);
    Ok(HamiltonianPath { order, weight, exact: false })
}

/// Exact solver up to [`EXACT_SOLVER_CAP`] arms, approximation above it.
pub fn shortest_hamiltonian_path(g: &SwitchingGraph) -> Result<HamiltonianPath> {
    if g.arms() <= EXACT_SOLVER_CAP {
        shortest_hamiltonian_path_exact(g)
    } else {
        shortest_hamiltonian_path_approx(g)
    }
}

// Prim's algorithm from vertex 0; ties go to the lowest vertex index.
fn minimum_spanning_tree(g: &SwitchingGraph) -> Vec<(usize, usize)> {
    let k = g.arms();
    let mut in_tree = vec![false; k];
    let mut best: Vec<(Cost, usize)> = (0..k).map(|v| (g.cost(0, v), 0)).collect();
    in_tree[0] = true;
    let mut edges = Vec::with_capacity(k - 1);
    for _ in 1..k {
        let v = (0..k)
            .filter(|&v| !in_tree[v])
            .min_by_key(|&v| (best[v].0, v))
            .expect("vertices remain");
        in_tree[v] = true;
        edges.push((best[v].1, v));
        for u in 0..k {
            if !in_tree[u] && g.cost(v, u) < best[u].0 {
                best[u] = (g.cost(v, u), v);
            }
        }
    }
    edges
}

fn greedy_matching(g: &SwitchingGraph, vertices: &[usize]) -> Vec<(usize, usize)> {
    let mut pairs: Vec<(Cost, usize, usize)> = Vec::new();
    for (a, &u) in vertices.iter().enumerate() {
        for &v in &vertices[a + 1..] {
            pairs.push((g.cost(u, v), u, v));
        }
    }
    pairs.sort();
    let mut used = vec![false; g.arms()];
    let mut out = Vec::with_capacity(vertices.len() / 2);
    for (_, u, v) in pairs {
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            out.push((u, v));
        }
    }
    out
}

// Hierholzer's algorithm on an edge list with all degrees even.
fn eulerian_circuit(k: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for (id, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, id));
        adj[b].push((a, id));
    }
    for list in &mut adj {
        list.sort();
        list.reverse();
    }
    let mut used = vec![false; edges.len()];
    let mut stack = vec![0usize];
    let mut circuit = Vec::with_capacity(edges.len() + 1);
    while let Some(&v) = stack.last() {
        let mut advanced = false;
        while let Some((u, id)) = adj[v].pop() {
            if !used[id] {
                used[id] = true;
                stack.push(u);
                advanced = true;
                break;
            }
        }
        if !advanced {
            circuit.push(stack.pop().expect("non-empty"));
        }
    }
    circuit.reverse();
    circuit
}

fn shortcut(walk: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; walk.iter().max().map_or(0, |m| m + 1)];
    walk.iter().copied().filter(|&v| !std::mem::replace(&mut seen[v], true)).collect()
}

fn preorder(k: usize, tree: &[(usize, usize)]) -> Vec<usize> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &(a, b) in tree {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; k];
    let mut out = Vec::with_capacity(k);
    let mut stack = vec![0usize];
    while let Some(v) = stack.pop() {
        if std::mem::replace(&mut seen[v], true) {
            continue;
        }
        out.push(v);
        let mut children: Vec<usize> = adj[v].iter().copied().filter(|&u| !seen[u]).collect();
        children.sort_unstable_by(|a, b| b.cmp(a));
        stack.extend(children);
    }
    out
}

// Close `tour` into a cycle and delete its heaviest edge.
fn tour_to_path(g: &SwitchingGraph, tour: Vec<usize>) -> (Vec<usize>, Cost) {
    let n = tour.len();
    let mut cut = 0;
    let mut heaviest = Cost::ZERO;
    for i in 0..n {
        let c = g.cost(tour[i], tour[(i + 1) % n]);
        if c > heaviest {
            heaviest = c;
            cut = i;
        }
    }
    // the path starts right after the removed edge
    let order: Vec<usize> = (0..n).map(|s| tour[(cut + 1 + s) % n]).collect();
    let weight = g.walk_cost(&order);
    (order, weight)
}
