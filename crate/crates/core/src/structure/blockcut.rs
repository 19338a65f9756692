//! Biconnected components (blocks), cut vertices and the block-cut tree.

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

/// Blocks and cut vertices of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockCutTree {
    /// Edge set of every block, each sorted.
    pub blocks: Vec<Vec<Edge>>,
    /// Cut vertices in ascending order.
    pub cut_vertices: Vec<usize>,
    /// For each block, the cut vertices it contains (ascending).
    pub block_cuts: Vec<Vec<usize>>,
}

impl BlockCutTree {
    /// Vertices of block `b` in ascending order.
    pub fn block_vertices(&self, b: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.blocks[b].iter().flat_map(|&(x, y)| [x, y]).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Number of blocks containing cut vertex `c`.
    pub fn cut_degree(&self, c: usize) -> usize {
        self.block_cuts.iter().filter(|cs| cs.contains(&c)).count()
    }

    /// True iff the block-cut tree is a path: every block meets at most two
    /// cut vertices and every cut vertex lies in exactly two blocks.
    pub fn is_path(&self) -> bool {
        self.block_cuts.iter().all(|c| c.len() <= 2) && self.cut_vertices.iter().all(|&c| self.cut_degree(c) == 2)
    }

    /// Node count of the tree (blocks plus cut vertices) and its edge count.
    pub fn tree_size(&self) -> (usize, usize) {
        (
            self.blocks.len() + self.cut_vertices.len(),
            self.block_cuts.iter().map(Vec::len).sum(),
        )
    }
}

/// Block decomposition by iterative DFS with low points. Requires a connected graph.
pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut blocks: Vec<Vec<Edge>> = Vec::new();
    let mut edge_stack: Vec<Edge> = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // frames: (vertex, parent, next neighbor slot)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(frame) = stack.last_mut() {
            let (u, parent, slot) = *frame;
            if slot < g.degree(u) {
                frame.2 += 1;
                let w = g.neighbors(u)[slot];
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    edge_stack.push(edge(u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((w, u, 0));
                } else if disc[w] < disc[u] {
                    edge_stack.push(edge(u, w));
                    low[u] = low[u].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        if p != root {
                            is_cut[p] = true;
                        }
                        let target = edge(p, u);
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == target {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }

    blocks.sort();
    let cut_vertices: Vec<usize> = (0..n).filter(|&v| is_cut[v]).collect();
    let mut tree = BlockCutTree {
        blocks,
        cut_vertices,
        block_cuts: Vec::new(),
    };
    tree.block_cuts = (0..tree.blocks.len())
        .map(|b| tree.block_vertices(b).into_iter().filter(|v| is_cut[*v]).collect())
        .collect();
    Ok(tree)
}
