//! Minimal max-flow (Edmonds-Karp) used for the vertex-disjoint path
//! counts of the Holt-Klee check. Graphs here have at most a few dozen
//! nodes, so BFS augmentation is plenty.

pub struct FlowNetwork {
    to: Vec<usize>,
    cap: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            to: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, cap: i64) {
        let e = self.to.len();
        self.to.push(v);
        self.cap.push(cap);
        self.adj[u].push(e);
        self.to.push(u);
        self.cap.push(0);
        self.adj[v].push(e + 1);
    }

    pub fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        let mut total = 0;
        loop {
            // BFS for a shortest augmenting path.
            let mut parent_edge = vec![usize::MAX; self.adj.len()];
            let mut queue = std::collections::VecDeque::new();
            parent_edge[source] = usize::MAX - 1;
            queue.push_back(source);
            while let Some(u) = queue.pop_front() {
                for &e in &self.adj[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && parent_edge[v] == usize::MAX {
                        parent_edge[v] = e;
                        queue.push_back(v);
                    }
                }
            }
            if parent_edge[sink] == usize::MAX {
                return total;
            }
            let mut bottleneck = i64::MAX;
            let mut v = sink;
            while v != source {
                let e = parent_edge[v];
                bottleneck = bottleneck.min(self.cap[e]);
                v = self.to[e ^ 1];
            }
            let mut v = sink;
            while v != source {
                let e = parent_edge[v];
                self.cap[e] -= bottleneck;
                self.cap[e ^ 1] += bottleneck;
                v = self.to[e ^ 1];
            }
            total += bottleneck;
        }
    }
}
