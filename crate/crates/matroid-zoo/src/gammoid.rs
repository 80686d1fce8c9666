use matroid_core::{Matroid, ValueOrder};

use crate::flow::FlowNet;
use crate::{LineOrder, ZooError};

fn reach(vertices: usize, arcs: &[(usize, usize)], start: &[usize], forward: bool) -> Vec<bool> {
    let mut adj = vec![Vec::new(); vertices];
    for &(u, v) in arcs {
        if forward {
            adj[u].push(v);
        } else {
            adj[v].push(u);
        }
    }
    let mut seen = vec![false; vertices];
    let mut stack: Vec<usize> = start.to_vec();
    for &s in start {
        seen[s] = true;
    }
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

fn check_vertex(v: usize, vertices: usize) -> Result<(), ZooError> {
    if v >= vertices {
        return Err(ZooError::OutOfRange { what: "vertex", id: v, limit: vertices });
    }
    Ok(())
}

fn check_terminals(terminals: &[usize], vertices: usize) -> Result<(), ZooError> {
    let mut used = vec![false; vertices];
    for &t in terminals {
        check_vertex(t, vertices)?;
        if std::mem::replace(&mut used[t], true) {
            return Err(ZooError::RepeatedTerminal(t));
        }
    }
    Ok(())
}

/// Gammoid: terminal sets linked to the sources by vertex-disjoint paths.
/// Element `e` is the terminal vertex `terminals[e]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammoidInstance {
    vertices: usize,
    arcs: Vec<(usize, usize)>,
    sources: Vec<usize>,
    terminals: Vec<usize>,
    mu: usize,
}

impl GammoidInstance {
    /// `mu` is the caller's bound on the exchangeability; it is not verified here.
    pub fn new(
        vertices: usize,
        arcs: Vec<(usize, usize)>,
        sources: Vec<usize>,
        terminals: Vec<usize>,
        mu: usize,
    ) -> Result<Self, ZooError> {
        for &(u, v) in &arcs {
            check_vertex(u, vertices)?;
            check_vertex(v, vertices)?;
        }
        for &s in &sources {
            check_vertex(s, vertices)?;
        }
        check_terminals(&terminals, vertices)?;
        if mu == 0 {
            return Err(ZooError::Invalid("exchangeability bound must be at least 1".into()));
        }
        let mut arcs = arcs;
        arcs.sort_unstable();
        arcs.dedup();
        arcs.retain(|&(u, v)| u != v);
        let mut sources = sources;
        sources.sort_unstable();
        sources.dedup();
        let reached = reach(vertices, &arcs, &sources, true);
        if let Some(&t) = terminals.iter().find(|&&t| !reached[t]) {
            return Err(ZooError::Unreachable(t));
        }
        Ok(GammoidInstance { vertices, arcs, sources, terminals, mu })
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    pub fn terminal(&self, e: usize) -> usize {
        self.terminals[e]
    }

    /// Split network over the arcs accepted by `keep`; returns it with the super sink id.
    fn network(&self, keep: impl Fn(usize, usize) -> bool) -> (FlowNet, Vec<Option<usize>>) {
        let v = self.vertices;
        let mut net = FlowNet::new(2 * v + 2);
        for x in 0..v {
            net.add_arc(2 * x, 2 * x + 1, 1);
        }
        let mut arc_ids = vec![None; self.arcs.len()];
        for (i, &(a, b)) in self.arcs.iter().enumerate() {
            if keep(a, b) {
                arc_ids[i] = Some(net.add_arc(2 * a + 1, 2 * b, 1));
            }
        }
        for &s in &self.sources {
            net.add_arc(2 * v, 2 * s, 1);
        }
        (net, arc_ids)
    }

    fn link(&self, net: &mut FlowNet, e: usize) -> bool {
        let (src, sink) = (2 * self.vertices, 2 * self.vertices + 1);
        let arc = net.add_arc(2 * self.terminals[e] + 1, sink, 1);
        if net.augment(src, sink) {
            true
        } else {
            net.close(arc);
            false
        }
    }

    /// 𝓟_X: one path (source first, terminal last) per element of `x`, aligned
    /// with `x`. Built only from arcs lying on some source-to-X walk, linking X in
    /// value order.
    pub fn canonical_path_system(&self, order: &ValueOrder, x: &[usize]) -> Result<Vec<Vec<usize>>, ZooError> {
        let ends: Vec<usize> = x.iter().map(|&e| self.terminals[e]).collect();
        let from_s = reach(self.vertices, &self.arcs, &self.sources, true);
        let to_x = reach(self.vertices, &self.arcs, &ends, false);
        let (mut net, arc_ids) = self.network(|a, b| from_s[a] && to_x[b]);
        for e in order.sorted(x) {
            if !self.link(&mut net, e) {
                return Err(ZooError::Dependent(x.to_vec()));
            }
        }
        let mut pred = vec![None; self.vertices];
        for (i, &(a, b)) in self.arcs.iter().enumerate() {
            if let Some(id) = arc_ids[i] {
                if net.flow(id) > 0 {
                    pred[b] = Some(a);
                }
            }
        }
        let mut paths = Vec::with_capacity(x.len());
        for &end in &ends {
            let mut path = vec![end];
            let mut at = end;
            while let Some(p) = pred[at] {
                path.push(p);
                at = p;
                if path.len() > self.vertices {
                    return Err(ZooError::Internal("flow decomposition revisits a vertex"));
                }
            }
            if self.sources.binary_search(&at).is_err() {
                return Err(ZooError::Internal("path does not start at a source"));
            }
            path.reverse();
            paths.push(path);
        }
        Ok(paths)
    }
}

impl Matroid for GammoidInstance {
    fn ground_size(&self) -> usize {
        self.terminals.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        self.greedy(set).len() == set.len()
    }

    fn greedy(&self, candidates: &[usize]) -> Vec<usize> {
        let (mut net, _) = self.network(|_, _| true);
        candidates.iter().copied().filter(|&e| self.link(&mut net, e)).collect()
    }
}

/// Gammoid with arc capacities and a single source: a terminal set is
/// independent when a flow can deliver one unit to each of its terminals.
/// Terminals carry a left-to-right order, trusted as given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcGammoidInstance {
    vertices: usize,
    source: usize,
    arcs: Vec<(usize, usize, usize)>,
    terminals: Vec<usize>,
    line: LineOrder,
}

impl ArcGammoidInstance {
    /// Element `i` is terminal vertex `left_to_right[i]`, at position `i + 1`.
    pub fn new(
        vertices: usize,
        source: usize,
        arcs: Vec<(usize, usize, usize)>,
        left_to_right: Vec<usize>,
    ) -> Result<Self, ZooError> {
        let line = LineOrder::from_sequence((0..left_to_right.len()).collect());
        Self::with_line(vertices, source, arcs, left_to_right, line)
    }

    pub(crate) fn with_line(
        vertices: usize,
        source: usize,
        arcs: Vec<(usize, usize, usize)>,
        terminals: Vec<usize>,
        line: LineOrder,
    ) -> Result<Self, ZooError> {
        check_vertex(source, vertices)?;
        for &(u, v, c) in &arcs {
            check_vertex(u, vertices)?;
            check_vertex(v, vertices)?;
            if c == 0 {
                return Err(ZooError::ZeroCapacity(vec![u, v]));
            }
        }
        check_terminals(&terminals, vertices)?;
        if terminals.contains(&source) {
            return Err(ZooError::Invalid("the source cannot be a terminal".into()));
        }
        let plain: Vec<(usize, usize)> = arcs.iter().map(|&(u, v, _)| (u, v)).collect();
        let reached = reach(vertices, &plain, &[source], true);
        if let Some(&t) = terminals.iter().find(|&&t| !reached[t]) {
            return Err(ZooError::Unreachable(t));
        }
        let mut arcs = arcs;
        arcs.sort_unstable();
        Ok(ArcGammoidInstance { vertices, source, arcs, terminals, line })
    }

    pub fn line(&self) -> &LineOrder {
        &self.line
    }

    fn network(&self) -> FlowNet {
        let mut net = FlowNet::new(self.vertices + 1);
        for &(u, v, c) in &self.arcs {
            net.add_arc(u, v, c.min(u32::MAX as usize) as u32);
        }
        net
    }
}

impl Matroid for ArcGammoidInstance {
    fn ground_size(&self) -> usize {
        self.terminals.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        self.greedy(set).len() == set.len()
    }

    fn greedy(&self, candidates: &[usize]) -> Vec<usize> {
        let mut net = self.network();
        let sink = self.vertices;
        let mut kept = Vec::new();
        for &e in candidates {
            let arc = net.add_arc(self.terminals[e], sink, 1);
            if net.augment(self.source, sink) {
                kept.push(e);
            } else {
                net.close(arc);
            }
        }
        kept
    }
}
