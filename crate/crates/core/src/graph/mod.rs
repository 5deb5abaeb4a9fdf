//! Switching graphs: symmetric switching-cost matrices with possibly
//! infinite (forbidden) edges, their metric closure, shortest Hamiltonian
//! paths and the budget indices derived from them.

mod closure;
mod hamilton;
mod indices;

pub use closure::{metric_closure, MetricClosure};
pub use hamilton::{
    shortest_hamiltonian_path, shortest_hamiltonian_path_approx, shortest_hamiltonian_path_exact,
    HamiltonianPath, EXACT_SOLVER_CAP,
};
pub use indices::{budget_indices, floor_index, unit_index, BudgetIndices};

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Non-negative extended real switching cost. `Cost::INFINITY` marks a
/// forbidden switch and absorbs addition.
#[derive(Clone, Copy, PartialEq, Default)]
pub struct Cost(f64);

impl Cost {
    pub const ZERO: Cost = Cost(0.0);
    pub const INFINITY: Cost = Cost(f64::INFINITY);

    /// `None` for NaN or negative input; `f64::INFINITY` maps to `Cost::INFINITY`.
    pub fn new(value: f64) -> Option<Cost> {
        if value.is_nan() || value < 0.0 {
            None
        } else {
            // `+ 0.0` folds -0.0 into 0.0 so equality agrees with the total order
            Some(Cost(value + 0.0))
        }
    }

    pub fn is_finite(self) -> bool {
        self.0.is_finite()
    }

    pub fn is_infinite(self) -> bool {
        !self.is_finite()
    }

    /// Raw value; `f64::INFINITY` for forbidden switches.
    pub fn value(self) -> f64 {
        self.0
    }
}

impl Eq for Cost {}

impl PartialOrd for Cost {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cost {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl Add for Cost {
    type Output = Cost;
    fn add(self, rhs: Cost) -> Cost {
        Cost(self.0 + rhs.0)
    }
}

impl std::iter::Sum for Cost {
    fn sum<I: Iterator<Item = Cost>>(iter: I) -> Cost {
        iter.fold(Cost::ZERO, |a, b| a + b)
    }
}

impl fmt::Debug for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_finite() {
            write!(f, "{}", self.0)
        } else {
            f.write_str("inf")
        }
    }
}

impl Serialize for Cost {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_finite() {
            s.serialize_f64(self.0)
        } else {
            s.serialize_str("inf")
        }
    }
}

impl<'de> Deserialize<'de> for Cost {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Cost, D::Error> {
        struct CostVisitor;
        impl Visitor<'_> for CostVisitor {
            type Value = Cost;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative number or \"inf\"")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Cost, E> {
                if v.is_finite() {
                    Cost::new(v).ok_or_else(|| E::custom(format!("negative cost {v}")))
                } else {
                    Err(E::custom("use the string \"inf\" for infinite costs"))
                }
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Cost, E> {
                Ok(Cost(v as f64))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Cost, E> {
                Cost::new(v as f64).ok_or_else(|| E::custom(format!("negative cost {v}")))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Cost, E> {
                if v == "inf" {
                    Ok(Cost::INFINITY)
                } else {
                    Err(E::custom(format!("unknown cost token {v:?}")))
                }
            }
        }
        d.deserialize_any(CostVisitor)
    }
}

/// Complete undirected switching graph over `k` arms.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct SwitchingGraph {
    k: usize,
    cost: Vec<Cost>,
}

/// JSON form: `{"k": 3, "cost": [[0, 1, "inf"], ...]}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    k: usize,
    cost: Vec<Vec<Cost>>,
}

impl TryFrom<GraphJson> for SwitchingGraph {
    type Error = Error;
    fn try_from(json: GraphJson) -> Result<Self> {
        if json.cost.len() != json.k {
            return Err(Error::NotSquare);
        }
        SwitchingGraph::new(json.cost)
    }
}

impl From<SwitchingGraph> for GraphJson {
    fn from(g: SwitchingGraph) -> Self {
        GraphJson { k: g.k, cost: g.rows() }
    }
}

impl fmt::Debug for SwitchingGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SwitchingGraph").field("k", &self.k).field("cost", &self.rows()).finish()
    }
}

impl SwitchingGraph {
    /// Validates a square cost matrix: zero diagonal, symmetric entries.
    pub fn new(rows: Vec<Vec<Cost>>) -> Result<Self> {
        let k = rows.len();
        if k == 0 || rows.iter().any(|r| r.len() != k) {
            return Err(Error::NotSquare);
        }
        for (i, row) in rows.iter().enumerate() {
            if row[i] != Cost::ZERO {
                return Err(Error::NonzeroDiagonal { i });
            }
            for j in 0..i {
                if row[j] != rows[j][i] {
                    return Err(Error::Asymmetric { i: j, j: i });
                }
            }
        }
        Ok(SwitchingGraph { k, cost: rows.into_iter().flatten().collect() })
    }

    /// Same as [`SwitchingGraph::new`] for plain floats; `f64::INFINITY`
    /// marks a forbidden switch.
    pub fn from_f64(rows: &[Vec<f64>]) -> Result<Self> {
        let mut out = Vec::with_capacity(rows.len());
        for (i, row) in rows.iter().enumerate() {
            let mut r = Vec::with_capacity(row.len());
            for (j, &x) in row.iter().enumerate() {
                r.push(Cost::new(x).ok_or(Error::NegativeCost { i, j })?);
            }
            out.push(r);
        }
        Self::new(out)
    }

    /// Every switch costs 1.
    pub fn unit(k: usize) -> Self {
        let cost = (0..k * k)
            .map(|idx| if idx / k == idx % k { Cost::ZERO } else { Cost(1.0) })
            .collect();
        SwitchingGraph { k, cost }
    }

    pub(crate) fn from_flat(k: usize, cost: Vec<Cost>) -> Self {
        debug_assert_eq!(cost.len(), k * k);
        SwitchingGraph { k, cost }
    }

    pub fn arms(&self) -> usize {
        self.k
    }

    pub fn cost(&self, i: usize, j: usize) -> Cost {
        self.cost[i * self.k + j]
    }

    pub fn rows(&self) -> Vec<Vec<Cost>> {
        self.cost.chunks(self.k).map(|r| r.to_vec()).collect()
    }

    /// Whether every entry equals 1 off the diagonal.
    pub fn is_unit(&self) -> bool {
        (0..self.k).all(|i| (0..self.k).all(|j| i == j || self.cost(i, j) == Cost(1.0)))
    }

    /// Triangle inequality `c[i][j] <= c[i][l] + c[l][j]` for all triples.
    pub fn is_metric(&self) -> bool {
        let k = self.k;
        for i in 0..k {
            for j in (i + 1)..k {
                let direct = self.cost(i, j);
                for l in 0..k {
                    if l == i || l == j {
                        continue;
                    }
                    if direct > self.cost(i, l) + self.cost(l, j) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `max_{i,j} c[i][j]`.
    pub fn max_cost(&self) -> Cost {
        self.cost.iter().copied().max().unwrap_or(Cost::ZERO)
    }

    /// `max_i min_{j != i} c[i][j]`; zero for a single arm.
    pub fn max_min_cost(&self) -> Cost {
        (0..self.k)
            .filter_map(|i| (0..self.k).filter(|&j| j != i).map(|j| self.cost(i, j)).min())
            .max()
            .unwrap_or(Cost::ZERO)
    }

    /// Total cost of visiting `order` in sequence.
    pub fn walk_cost(&self, order: &[usize]) -> Cost {
        order.windows(2).map(|w| self.cost(w[0], w[1])).sum()
    }
}
