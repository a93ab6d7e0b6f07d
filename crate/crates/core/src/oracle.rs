//! Brute-force dominating-set counts on small graphs.
//!
//! Vertex subsets are bit masks; every subset is visited in increasing mask
//! order and tallied by popcount. Coverage of a mask is the OR of two table
//! lookups (low half and high half of the vertex set), so the inner loop does
//! constant work per subset.

use num_bigint::BigInt;

use crate::dompoly::{Family, GraphSpec};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

pub const MAX_ORACLE_VERTICES: usize = 26;

/// Undirected simple graph on at most [`MAX_ORACLE_VERTICES`] vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallGraph {
    n: usize,
    adjacency: Vec<u32>,
}

impl SmallGraph {
    /// Graph with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORACLE_VERTICES {
            return Err(Error::TooManyVertices { n });
        }
        Ok(Self {
            n,
            adjacency: vec![0; n],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        let all = g.all_vertices();
        for (i, row) in g.adjacency.iter_mut().enumerate() {
            *row = all & !(1 << i);
        }
        Ok(g)
    }

    /// Builds a graph from an edge list; loops are ignored.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (a, b) in edges {
            assert!(
                a < n && b < n,
                "edge ({a}, {b}) out of range for {n} vertices"
            );
            if a != b {
                g.adjacency[a] |= 1 << b;
                g.adjacency[b] |= 1 << a;
            }
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `adjacency()[i]` has bit `j` set iff `i ~ j`.
    pub fn adjacency(&self) -> &[u32] {
        &self.adjacency
    }

    /// Closed neighbourhood of `v` as a mask.
    pub fn closed_neighbourhood(&self, v: usize) -> u32 {
        self.adjacency[v] | (1 << v)
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.adjacency[v].count_ones()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency[a] & (1 << b) != 0
    }

    pub fn all_vertices(&self) -> u32 {
        low_bits(self.n)
    }

    /// Vertices covered by the subset `set`.
    pub fn coverage(&self, set: u32) -> u32 {
        (0..self.n)
            .filter(|&v| set & (1 << v) != 0)
            .fold(0, |acc, v| acc | self.closed_neighbourhood(v))
    }

    pub fn is_dominating(&self, set: u32) -> bool {
        self.coverage(set) == self.all_vertices()
    }
}

fn low_bits(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// `P_n^ℓ` or `C_n^ℓ` as an explicit graph.
pub fn build_power_graph(spec: GraphSpec) -> Result<SmallGraph> {
    let GraphSpec { family, n, ell } = spec;
    if ell == 0 {
        return Err(Error::ZeroPower);
    }
    let mut g = SmallGraph::empty(n)?;
    for i in 0..n {
        for j in (i + 1)..n {
            let gap = j - i;
            let dist = match family {
                Family::Path => gap,
                Family::Cycle => gap.min(n - gap),
            };
            if dist <= ell {
                g.adjacency[i] |= 1 << j;
                g.adjacency[j] |= 1 << i;
            }
        }
    }
    Ok(g)
}

/// Coverage of every subset of `vertices` (ascending), indexed by the packed subset.
fn coverage_table(g: &SmallGraph, vertices: &[usize]) -> Vec<u32> {
    let mut table = vec![0u32; 1 << vertices.len()];
    for m in 1..table.len() {
        let low = m.trailing_zeros() as usize;
        table[m] = table[m & (m - 1)] | g.closed_neighbourhood(vertices[low]);
    }
    table
}

/// Counts, by size, subsets of `candidates` whose coverage contains `required`.
fn tally(g: &SmallGraph, required: u32, candidates: u32) -> Vec<u64> {
    let chosen: Vec<usize> = (0..g.n).filter(|&v| candidates & (1 << v) != 0).collect();
    let split = chosen.len().min(13);
    let (lo_vertices, hi_vertices) = chosen.split_at(split);
    let lo = coverage_table(g, lo_vertices);
    let hi = coverage_table(g, hi_vertices);
    let mut counts = vec![0u64; g.n + 1];
    for (h, &hi_cov) in hi.iter().enumerate() {
        let h_size = h.count_ones() as usize;
        for (l, &lo_cov) in lo.iter().enumerate() {
            if (hi_cov | lo_cov) & required == required {
                counts[h_size + l.count_ones() as usize] += 1;
            }
        }
    }
    counts
}

fn widen(counts: Vec<u64>) -> IntPolynomial {
    IntPolynomial::from_coeffs(counts.into_iter().map(BigInt::from).collect())
}

/// `γ(G, x)` by exhaustive enumeration.
pub fn brute_domination_poly(g: &SmallGraph) -> IntPolynomial {
    widen(tally(g, g.all_vertices(), g.all_vertices()))
}

/// Counts subsets dominating every vertex with index `≥ exempt_prefix`.
pub fn brute_relaxed_domination_poly(
    g: &SmallGraph,
    exempt_prefix: usize,
) -> Result<IntPolynomial> {
    if exempt_prefix > g.n {
        return Err(Error::ExemptPrefixTooLarge {
            prefix: exempt_prefix,
            n: g.n,
        });
    }
    let required = g.all_vertices() & !low_bits(exempt_prefix);
    Ok(widen(tally(g, required, g.all_vertices())))
}

/// Dominating sets of `g` that are subsets of `candidates`.
pub fn brute_domination_poly_within(g: &SmallGraph, candidates: u32) -> IntPolynomial {
    widen(tally(g, g.all_vertices(), candidates & g.all_vertices()))
}
