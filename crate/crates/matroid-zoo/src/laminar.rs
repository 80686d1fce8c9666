use matroid_core::Matroid;

use crate::{ArcGammoidInstance, LineOrder, ZooError};

#[derive(Debug, Clone, PartialEq, Eq)]
struct Node {
    parent: Option<usize>,
    cap: usize,
    depth: usize,
    members: Vec<usize>,
}

/// Laminar matroid: |X ∩ L| ≤ c(L) for every set L of a laminar family.
///
/// The ground set and singletons are added when missing (capacity n and 1),
/// and singleton capacities are clamped to 1. Terminals are laid out left to
/// right by a depth-first walk of the family tree with children ordered by
/// their smallest element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaminarInstance {
    nodes: Vec<Node>,
    leaf: Vec<usize>,
    line: LineOrder,
}

impl LaminarInstance {
    pub fn new(n: usize, sets: &[Vec<usize>], caps: &[usize]) -> Result<Self, ZooError> {
        if sets.len() != caps.len() {
            return Err(ZooError::CountMismatch { what: "laminar capacities", expected: sets.len(), got: caps.len() });
        }
        let mut family: Vec<(Vec<usize>, usize)> = Vec::with_capacity(sets.len() + n + 1);
        for (set, &cap) in sets.iter().zip(caps) {
            let mut s = set.clone();
            s.sort_unstable();
            if let Some(&e) = s.iter().find(|&&e| e >= n) {
                return Err(ZooError::OutOfRange { what: "element", id: e, limit: n });
            }
            let len = s.len();
            s.dedup();
            if s.is_empty() || s.len() != len {
                return Err(ZooError::MalformedSet(set.clone()));
            }
            if cap == 0 {
                return Err(ZooError::ZeroCapacity(s));
            }
            family.push((s, cap));
        }
        let mut sorted_sets: Vec<&Vec<usize>> = family.iter().map(|(s, _)| s).collect();
        sorted_sets.sort();
        if let Some(w) = sorted_sets.windows(2).find(|w| w[0] == w[1]) {
            return Err(ZooError::DuplicateSet(w[0].clone()));
        }
        let present: std::collections::HashSet<Vec<usize>> = family.iter().map(|(s, _)| s.clone()).collect();
        let all: Vec<usize> = (0..n).collect();
        if n > 0 && !present.contains(&all) {
            family.push((all, n));
        }
        for e in 0..n {
            // with n = 1 the ground set is itself the singleton
            if n > 1 && !present.contains(&vec![e]) {
                family.push((vec![e], 1));
            }
        }
        for (s, cap) in family.iter_mut() {
            if s.len() == 1 {
                *cap = 1;
            }
        }
        // Larger sets first; a set's parent is the current deepest set holding its elements.
        family.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(&b.0)));
        let mut nodes: Vec<Node> = Vec::with_capacity(family.len());
        let mut deepest: Vec<Option<usize>> = vec![None; n];
        let mut leaf = vec![usize::MAX; n];
        for (s, cap) in family {
            let parent = deepest[s[0]];
            if let Some(&bad) = s.iter().find(|&&e| deepest[e] != parent) {
                let other = deepest[bad].or(parent).map(|p| nodes[p].members.clone()).unwrap_or_default();
                return Err(ZooError::NotLaminar { first: other, second: s });
            }
            if let Some(p) = parent {
                if nodes[p].members.len() == s.len() {
                    return Err(ZooError::NotLaminar { first: nodes[p].members.clone(), second: s });
                }
            }
            let id = nodes.len();
            let depth = parent.map_or(1, |p| nodes[p].depth + 1);
            for &e in &s {
                deepest[e] = Some(id);
            }
            if s.len() == 1 {
                leaf[s[0]] = id;
            }
            nodes.push(Node { parent, cap, depth, members: s });
        }
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); nodes.len()];
        for (id, node) in nodes.iter().enumerate() {
            if let Some(p) = node.parent {
                children[p].push(id);
            }
        }
        for c in children.iter_mut() {
            c.sort_by_key(|&id| nodes[id].members[0]);
        }
        let mut sequence = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..nodes.len()).filter(|&id| nodes[id].parent.is_none()).rev().collect();
        while let Some(id) = stack.pop() {
            if nodes[id].members.len() == 1 && children[id].is_empty() {
                sequence.push(nodes[id].members[0]);
            }
            stack.extend(children[id].iter().rev());
        }
        Ok(LaminarInstance { nodes, leaf, line: LineOrder::from_sequence(sequence) })
    }

    pub fn line(&self) -> &LineOrder {
        &self.line
    }

    pub fn terminal_count(&self) -> usize {
        self.leaf.len()
    }

    /// Depth of x∨y for terminal positions, where the source sits at depth 0,
    /// the ground set at depth 1 and sentinels join everything at the source.
    pub fn join_depth(&self, a: usize, b: usize) -> usize {
        let (Some(ea), Some(eb)) = (self.line.element(a), self.line.element(b)) else {
            return 0;
        };
        let (mut x, mut y) = (self.leaf[ea], self.leaf[eb]);
        while x != y {
            if self.nodes[x].depth >= self.nodes[y].depth {
                x = self.nodes[x].parent.expect("terminals share the ground-set root");
            } else {
                y = self.nodes[y].parent.expect("terminals share the ground-set root");
            }
        }
        self.nodes[x].depth
    }

    /// π_J(y) for terminal positions: `j` holds sorted positions and must be nonempty.
    pub fn representative(&self, j: &[usize], y: usize) -> Result<usize, ZooError> {
        if j.is_empty() {
            return Err(ZooError::Invalid("representative of an empty set".into()));
        }
        if j.binary_search(&y).is_ok() {
            return Ok(y);
        }
        let (pre, nex) = crate::pre_nex(j, self.leaf.len(), y);
        if self.join_depth(y, pre) > self.join_depth(y, nex) {
            Ok(pre)
        } else {
            Ok(nex)
        }
    }

    /// Family sets with capacities, ground set first.
    pub fn sets(&self) -> Vec<(Vec<usize>, usize)> {
        self.nodes.iter().map(|nd| (nd.members.clone(), nd.cap)).collect()
    }

    fn admit(&self, used: &mut [usize], e: usize) -> bool {
        let mut at = Some(self.leaf[e]);
        while let Some(id) = at {
            if used[id] >= self.nodes[id].cap {
                return false;
            }
            at = self.nodes[id].parent;
        }
        let mut at = Some(self.leaf[e]);
        while let Some(id) = at {
            used[id] += 1;
            at = self.nodes[id].parent;
        }
        true
    }

    /// The same matroid as an arc-capacitated gammoid on the family tree.
    pub fn to_arc_gammoid(&self) -> ArcGammoidInstance {
        let source = self.nodes.len();
        let mut arcs = Vec::with_capacity(self.nodes.len());
        for (id, node) in self.nodes.iter().enumerate() {
            let tail = node.parent.unwrap_or(source);
            arcs.push((tail, id, node.cap));
        }
        let terminals: Vec<usize> = (1..=self.leaf.len()).map(|p| self.leaf[self.line.element(p).unwrap()]).collect();
        let elements: Vec<usize> = (1..=self.leaf.len()).map(|p| self.line.element(p).unwrap()).collect();
        let mut by_element = vec![0; self.leaf.len()];
        for (i, &e) in elements.iter().enumerate() {
            by_element[e] = terminals[i];
        }
        ArcGammoidInstance::with_line(source + 1, source, arcs, by_element, self.line.clone())
            .expect("tree digraph reaches every terminal")
    }
}

impl Matroid for LaminarInstance {
    fn ground_size(&self) -> usize {
        self.leaf.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        let mut used = vec![0; self.nodes.len()];
        set.iter().all(|&e| self.admit(&mut used, e))
    }

    fn greedy(&self, candidates: &[usize]) -> Vec<usize> {
        let mut used = vec![0; self.nodes.len()];
        candidates.iter().copied().filter(|&e| self.admit(&mut used, e)).collect()
    }
}
