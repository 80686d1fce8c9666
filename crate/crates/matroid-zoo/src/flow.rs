use std::collections::VecDeque;

/// Residual network pushing one unit per augmentation. Arcs are scanned in
/// insertion order, which makes every run deterministic.
#[derive(Debug, Clone)]
pub(crate) struct FlowNet {
    to: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNet {
    pub fn new(nodes: usize) -> Self {
        FlowNet { to: Vec::new(), cap: Vec::new(), adj: vec![Vec::new(); nodes] }
    }

    pub fn add_arc(&mut self, u: usize, v: usize, cap: u32) -> usize {
        let id = self.to.len();
        self.to.push(v);
        self.cap.push(cap);
        self.adj[u].push(id);
        self.to.push(u);
        self.cap.push(0);
        self.adj[v].push(id + 1);
        id
    }

    pub fn flow(&self, arc: usize) -> u32 {
        self.cap[arc ^ 1]
    }

    pub fn close(&mut self, arc: usize) {
        self.cap[arc] = 0;
    }

    /// Pushes one unit from `s` to `t` along a shortest residual path.
    pub fn augment(&mut self, s: usize, t: usize) -> bool {
        let mut via = vec![usize::MAX; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &a in &self.adj[u] {
                let w = self.to[a];
                if self.cap[a] > 0 && !seen[w] {
                    seen[w] = true;
                    via[w] = a;
                    queue.push_back(w);
                }
            }
        }
        if !seen[t] {
            return false;
        }
        let mut v = t;
        while v != s {
            let a = via[v];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            v = self.to[a ^ 1];
        }
        true
    }
}
