//! Biconnected components and block-cut trees of small undirected graphs
//! given as adjacency lists.

use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockNode {
    /// A biconnected component, listed by its vertices in discovery order.
    Block(Vec<usize>),
    /// An articulation vertex.
    Cut(usize),
}

/// Block-cut tree of an undirected graph: one node per biconnected component
/// and per articulation vertex, with an edge whenever the component contains
/// the vertex. Each node carries a label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockTree {
    nodes: Vec<BlockNode>,
    edges: Vec<(usize, usize)>,
    labels: Vec<bool>,
}

impl BlockTree {
    /// Builds the tree (a forest for disconnected input) in linear time.
    /// Isolated vertices belong to no block.
    pub fn new(adj: &[Vec<usize>]) -> BlockTree {
        BlockTree::from_csr(&Csr::from_lists(adj))
    }

    /// As [`BlockTree::new`], for `n` vertices joined by undirected `edges`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> BlockTree {
        BlockTree::from_csr(&Csr::from_edges(n, edges.iter().copied()))
    }

    pub(crate) fn from_edge_iter(n: usize, edges: impl Iterator<Item = (usize, usize)> + Clone) -> BlockTree {
        BlockTree::from_csr(&Csr::from_edges(n, edges))
    }

    fn from_csr(adj: &Csr) -> BlockTree {
        let blocks = components(adj);
        let n = adj.len();
        let mut membership = vec![0usize; n];
        for b in &blocks {
            for &v in b {
                membership[v] += 1;
            }
        }
        let mut nodes: Vec<BlockNode> = Vec::with_capacity(blocks.len());
        let mut cut_node = vec![usize::MAX; n];
        let mut edges = Vec::new();
        for b in blocks {
            let id = nodes.len();
            nodes.push(BlockNode::Block(Vec::new()));
            for &v in &b {
                if membership[v] > 1 {
                    if cut_node[v] == usize::MAX {
                        cut_node[v] = nodes.len();
                        nodes.push(BlockNode::Cut(v));
                    }
                    edges.push((id, cut_node[v]));
                }
            }
            nodes[id] = BlockNode::Block(b);
        }
        let labels = vec![false; nodes.len()];
        BlockTree { nodes, edges, labels }
    }

    pub fn nodes(&self) -> &[BlockNode] {
        &self.nodes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> &[bool] {
        &self.labels
    }

    /// Labels exactly the nodes on tree paths between two terminal nodes,
    /// by repeatedly pruning non-terminal leaves. A lone terminal labels
    /// only itself.
    pub fn label_between(&mut self, terminal: &[bool]) {
        let k = self.nodes.len();
        let adj = Csr::from_edges(k, self.edges.iter().copied());
        let mut degree: Vec<usize> = (0..k).map(|i| adj[i].len()).collect();
        let mut alive = vec![true; k];
        let mut queue: VecDeque<usize> = (0..k).filter(|&i| !terminal[i] && degree[i] <= 1).collect();
        while let Some(i) = queue.pop_front() {
            if !alive[i] {
                continue;
            }
            alive[i] = false;
            for &j in &adj[i] {
                if alive[j] {
                    degree[j] -= 1;
                    if !terminal[j] && degree[j] <= 1 {
                        queue.push_back(j);
                    }
                }
            }
        }
        self.labels = alive;
    }

    /// Vertices of every labelled block.
    pub fn labelled_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.nodes
            .iter()
            .zip(&self.labels)
            .filter(|(_, &l)| l)
            .flat_map(|(node, _)| match node {
                BlockNode::Block(vs) => vs.as_slice(),
                BlockNode::Cut(_) => &[],
            })
            .copied()
    }
}

/// Undirected adjacency lists packed into one buffer.
struct Csr {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Csr {
    fn from_lists(lists: &[Vec<usize>]) -> Csr {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0);
        for l in lists {
            offsets.push(offsets.last().unwrap() + l.len());
        }
        Csr {
            offsets,
            targets: lists.concat(),
        }
    }

    fn from_edges(n: usize, edges: impl Iterator<Item = (usize, usize)> + Clone) -> Csr {
        let mut offsets = vec![0; n + 1];
        for (a, b) in edges.clone() {
            offsets[a + 1] += 1;
            offsets[b + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let mut fill = offsets.clone();
        let mut targets = vec![0; offsets[n]];
        for (a, b) in edges {
            targets[fill[a]] = b;
            fill[a] += 1;
            targets[fill[b]] = a;
            fill[b] += 1;
        }
        Csr { offsets, targets }
    }

    fn len(&self) -> usize {
        self.offsets.len() - 1
    }
}

impl std::ops::Index<usize> for Csr {
    type Output = [usize];

    fn index(&self, v: usize) -> &[usize] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }
}

/// Tarjan's algorithm with an explicit edge stack, iterative so deep graphs
/// cannot overflow the call stack.
pub fn biconnected_components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    components(&Csr::from_lists(adj))
}

fn components(adj: &Csr) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::with_capacity(adj.targets.len() / 2);
    let mut in_block = vec![false; n];
    let mut blocks = Vec::new();
    // (vertex, parent, next neighbour index)
    let mut frames: Vec<(usize, usize, usize)> = Vec::with_capacity(n);
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        frames.push((root, usize::MAX, 0));
        while let Some(frame) = frames.last_mut() {
            let (v, parent, idx) = *frame;
            if idx < adj[v].len() {
                frame.2 += 1;
                let w = adj[v][idx];
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            let Some(&(u, _, _)) = frames.last() else {
                continue;
            };
            low[u] = low[u].min(low[v]);
            if low[v] >= disc[u] {
                let mut block = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    for c in [a, b] {
                        if !in_block[c] {
                            in_block[c] = true;
                            block.push(c);
                        }
                    }
                    if (a, b) == (u, v) {
                        break;
                    }
                }
                for &c in &block {
                    in_block[c] = false;
                }
                blocks.push(block);
            }
        }
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adj(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
        let mut a = vec![Vec::new(); n];
        for &(u, v) in edges {
            a[u].push(v);
            a[v].push(u);
        }
        a
    }

    fn sorted(mut blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        blocks.iter_mut().for_each(|b| b.sort_unstable());
        blocks.sort();
        blocks
    }

    #[test]
    fn path_splits_into_bridges() {
        let g = adj(3, &[(0, 1), (1, 2)]);
        assert_eq!(sorted(biconnected_components(&g)), vec![vec![0, 1], vec![1, 2]]);
        let t = BlockTree::new(&g);
        assert_eq!(t.nodes().len(), 3);
        assert!(t.nodes().contains(&BlockNode::Cut(1)));
    }

    #[test]
    fn bowtie_has_one_articulation_vertex() {
        let g = adj(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(sorted(biconnected_components(&g)), vec![vec![0, 1, 2], vec![2, 3, 4]]);
    }

    #[test]
    fn cycle_is_one_block() {
        let g = adj(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert_eq!(sorted(biconnected_components(&g)), vec![vec![0, 1, 2, 3]]);
        assert!(BlockTree::new(&g).edges().is_empty());
    }

    #[test]
    fn pruning_keeps_the_path_between_terminals() {
        // 0-1-2-3 with a pendant 1-4
        let g = adj(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]);
        let mut t = BlockTree::new(&g);
        let terminal: Vec<bool> = t
            .nodes()
            .iter()
            .map(|n| matches!(n, BlockNode::Block(vs) if vs.contains(&0) || vs.contains(&3)))
            .collect();
        t.label_between(&terminal);
        let mut vs: Vec<usize> = t.labelled_vertices().collect();
        vs.sort_unstable();
        vs.dedup();
        assert_eq!(vs, vec![0, 1, 2, 3]);
    }
}
