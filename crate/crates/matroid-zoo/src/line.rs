/// Left-to-right placement of terminals at positions `1..=n`; positions 0 and
/// n+1 are the sentinels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineOrder {
    position: Vec<usize>,
    at: Vec<usize>,
}

impl LineOrder {
    /// `left_to_right[i]` is the element at position `i + 1`.
    pub fn from_sequence(left_to_right: Vec<usize>) -> Self {
        let mut position = vec![0; left_to_right.len()];
        for (i, &e) in left_to_right.iter().enumerate() {
            position[e] = i + 1;
        }
        LineOrder { position, at: left_to_right }
    }

    pub fn len(&self) -> usize {
        self.at.len()
    }

    pub fn is_empty(&self) -> bool {
        self.at.is_empty()
    }

    pub fn position(&self, element: usize) -> usize {
        self.position[element]
    }

    /// Element at `pos`, or `None` for a sentinel.
    pub fn element(&self, pos: usize) -> Option<usize> {
        if pos == 0 || pos > self.at.len() {
            None
        } else {
            Some(self.at[pos - 1])
        }
    }

    /// Sorted positions of a set of elements.
    pub fn positions(&self, set: &[usize]) -> Vec<usize> {
        let mut p: Vec<usize> = set.iter().map(|&e| self.position[e]).collect();
        p.sort_unstable();
        p
    }
}

/// (pre_{J+y}(y), nex_{J+y}(y)) for sorted positions `j` on a line of `n`
/// terminals. `y` itself is ignored if it belongs to `j`.
pub fn pre_nex(j: &[usize], n: usize, y: usize) -> (usize, usize) {
    let below = j.partition_point(|&p| p < y);
    let pre = if below == 0 { 0 } else { j[below - 1] };
    let above = j.partition_point(|&p| p <= y);
    let nex = if above == j.len() { n + 1 } else { j[above] };
    (pre, nex)
}
