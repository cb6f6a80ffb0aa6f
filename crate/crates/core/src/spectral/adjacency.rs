use super::{ConnectionSet, SpectralError};
use crate::group::Group;

/// Symmetric 0/1 adjacency matrix with cached neighbour lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyMatrix {
    n: usize,
    entries: Vec<u8>,
    neighbors: Vec<Vec<u32>>,
}

impl AdjacencyMatrix {
    /// From explicit rows; entries must be 0 or 1.
    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self, SpectralError> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(SpectralError::NotSquare);
            }
            if row.iter().any(|&x| x > 1) {
                return Err(SpectralError::NotBinary);
            }
            entries.extend_from_slice(row);
        }
        Ok(Self::from_entries(n, entries))
    }

    fn from_entries(n: usize, entries: Vec<u8>) -> Self {
        let neighbors = (0..n)
            .map(|i| (0..n).filter(|&j| entries[i * n + j] == 1).map(|j| j as u32).collect())
            .collect();
        AdjacencyMatrix { n, entries, neighbors }
    }

    /// Cycle graph `C_n`.
    pub fn cycle(n: usize) -> Self {
        let mut entries = vec![0u8; n * n];
        for i in 0..n {
            entries[i * n + (i + 1) % n] = 1;
            entries[((i + 1) % n) * n + i] = 1;
        }
        Self::from_entries(n, entries)
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let entries = (0..n * n).map(|k| u8::from(k / n != k % n)).collect();
        Self::from_entries(n, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i * self.n + j]
    }

    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.neighbors[i]
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(<[u8]>::to_vec).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> usize {
        (0..self.n).map(|i| self.get(i, i) as usize).sum()
    }

    /// `trace(A²)`, i.e. twice the edge count for a simple graph.
    pub fn trace_of_square(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum()
    }

    /// Common row sum, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.neighbors.first().map_or(0, Vec::len);
        self.neighbors.iter().all(|r| r.len() == d).then_some(d)
    }

    /// Checks symmetry and that every row sums to `degree`.
    pub fn validate(&self, degree: usize) -> Result<(), SpectralError> {
        if !self.is_symmetric() {
            return Err(SpectralError::AsymmetricInput);
        }
        for (row, nb) in self.neighbors.iter().enumerate() {
            if nb.len() != degree {
                return Err(SpectralError::DegreeMismatch { row, sum: nb.len(), degree });
            }
        }
        Ok(())
    }

    /// Rows and columns permuted: entry `(i,j)` of the result is entry `(perm[i], perm[j])`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let n = self.n;
        let entries = (0..n * n).map(|k| self.get(perm[k / n], perm[k % n])).collect();
        Self::from_entries(n, entries)
    }

    /// Number of edges in a shortest cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for root in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[root] = 0;
            let mut queue = std::collections::VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.neighbors[v] {
                    let w = w as usize;
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for &w in &self.neighbors[v] {
                if !std::mem::replace(&mut seen[w as usize], true) {
                    stack.push(w as usize);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Adjacency of `Cay(G, S)`: `g ~ h` iff `h·g⁻¹ ∈ S`.
pub fn cayley_adjacency(group: &Group, set: &ConnectionSet) -> AdjacencyMatrix {
    let n = group.order();
    let mut entries = vec![0u8; n * n];
    for g in 0..n {
        for &s in set.elements() {
            entries[g * n + group.mul(s, g)] = 1;
        }
    }
    AdjacencyMatrix::from_entries(n, entries)
}
