use super::{Cost, SwitchingGraph};

/// Shortest-path closure of a switching graph together with one
/// minimum-weight path for every pair.
#[derive(Debug, Clone)]
pub struct MetricClosure {
    pub graph: SwitchingGraph,
    // next[i*k + j]: vertex after i on the stored i -> j path
    next: Vec<Option<usize>>,
}

/// Floyd–Warshall closure. Only strict improvements replace an entry, so a
/// metric input comes back unchanged with every stored path being the
/// direct edge.
pub fn metric_closure(g: &SwitchingGraph) -> MetricClosure {
    let k = g.arms();
    let mut dist: Vec<Cost> = (0..k * k).map(|idx| g.cost(idx / k, idx % k)).collect();
    let mut next: Vec<Option<usize>> = (0..k * k)
        .map(|idx| {
            let (i, j) = (idx / k, idx % k);
            if i == j || dist[idx].is_finite() {
                Some(j)
            } else {
                None
            }
        })
        .collect();
    for via in 0..k {
        for i in 0..k {
            let d_iv = dist[i * k + via];
            if d_iv.is_infinite() {
                continue;
            }
            for j in 0..k {
                let candidate = d_iv + dist[via * k + j];
                if candidate < dist[i * k + j] {
                    dist[i * k + j] = candidate;
                    next[i * k + j] = next[i * k + via];
                }
            }
        }
    }
    MetricClosure { graph: SwitchingGraph::from_flat(k, dist), next }
}

impl MetricClosure {
    /// Stored shortest path `i -> … -> j` including both endpoints, or
    /// `None` when `j` is unreachable.
    pub fn path(&self, i: usize, j: usize) -> Option<Vec<usize>> {
        let k = self.graph.arms();
        let mut out = vec![i];
        let mut at = i;
        while at != j {
            at = self.next[at * k + j]?;
            out.push(at);
            if out.len() > k {
                unreachable!("closure path longer than k vertices");
            }
        }
        Some(out)
    }

    /// Largest number of intermediate vertices on any stored path.
    pub fn max_intermediates(&self) -> usize {
        let k = self.graph.arms();
        (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .filter_map(|(i, j)| self.path(i, j))
            .map(|p| p.len().saturating_sub(2))
            .max()
            .unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(rows: &[Vec<f64>]) -> SwitchingGraph {
        SwitchingGraph::from_f64(rows).unwrap()
    }

    #[test]
    fn shortcut_through_middle_vertex() {
        let graph = g(&[vec![0.0, 1.0, 5.0], vec![1.0, 0.0, 1.0], vec![5.0, 1.0, 0.0]]);
        let c = metric_closure(&graph);
        assert_eq!(c.graph.cost(0, 2), Cost(2.0));
        assert_eq!(c.path(0, 2).unwrap(), vec![0, 1, 2]);
        assert_eq!(c.path(2, 0).unwrap(), vec![2, 1, 0]);
        assert_eq!(c.max_intermediates(), 1);
        assert!(c.graph.is_metric());
    }

    #[test]
    fn metric_graph_unchanged_and_idempotent() {
        let graph = g(&[vec![0.0, 1.0, 2.0], vec![1.0, 0.0, 1.0], vec![2.0, 1.0, 0.0]]);
        let c = metric_closure(&graph);
        assert_eq!(c.graph, graph);
        assert_eq!(c.path(0, 2).unwrap(), vec![0, 2]);
        assert_eq!(c.max_intermediates(), 0);
        assert_eq!(metric_closure(&c.graph).graph, c.graph);
    }

    #[test]
    fn unreachable_pairs_stay_infinite() {
        let inf = f64::INFINITY;
        let graph = g(&[
            vec![0.0, 1.0, inf, inf],
            vec![1.0, 0.0, inf, inf],
            vec![inf, inf, 0.0, 3.0],
            vec![inf, inf, 3.0, 0.0],
        ]);
        let c = metric_closure(&graph);
        assert_eq!(c.graph.cost(0, 3), Cost::INFINITY);
        assert!(c.path(0, 3).is_none());
        assert_eq!(c.path(2, 3).unwrap(), vec![2, 3]);
    }

    #[test]
    fn infinite_edge_bridged() {
        let inf = f64::INFINITY;
        let graph = g(&[vec![0.0, 2.0, inf], vec![2.0, 0.0, 0.5], vec![inf, 0.5, 0.0]]);
        let c = metric_closure(&graph);
        assert_eq!(c.graph.cost(0, 2), Cost(2.5));
        assert_eq!(c.path(0, 2).unwrap(), vec![0, 1, 2]);
    }
}
