//! Double-ended priority queue backed by a binary min-max heap.
//!
//! Nodes on even depths are no larger than all their descendants, nodes on
//! odd depths no smaller. The minimum sits at the root and the maximum is one
//! of the root's children.

#[derive(Debug, Clone)]
pub struct MinMaxHeap<T> {
    data: Vec<T>,
}

impl<T> Default for MinMaxHeap<T> {
    fn default() -> Self {
        MinMaxHeap { data: Vec::new() }
    }
}

#[inline]
fn on_min_level(i: usize) -> bool {
    (usize::BITS - (i + 1).leading_zeros() - 1).is_multiple_of(2)
}

impl<T: Ord> MinMaxHeap<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(capacity: usize) -> Self {
        MinMaxHeap {
            data: Vec::with_capacity(capacity),
        }
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn peek_min(&self) -> Option<&T> {
        self.data.first()
    }

    pub fn peek_max(&self) -> Option<&T> {
        self.max_index().map(|i| &self.data[i])
    }

    fn max_index(&self) -> Option<usize> {
        match self.data.len() {
            0 => None,
            1 => Some(0),
            2 => Some(1),
            _ => Some(if self.data[1] >= self.data[2] { 1 } else { 2 }),
        }
    }

    pub fn push(&mut self, item: T) {
        self.data.push(item);
        let i = self.data.len() - 1;
        if i == 0 {
            return;
        }
        let parent = (i - 1) / 2;
        if on_min_level(i) {
            if self.data[i] > self.data[parent] {
                self.data.swap(i, parent);
                self.bubble_up(parent, |a, b| a > b);
            } else {
                self.bubble_up(i, |a, b| a < b);
            }
        } else if self.data[i] < self.data[parent] {
            self.data.swap(i, parent);
            self.bubble_up(parent, |a, b| a < b);
        } else {
            self.bubble_up(i, |a, b| a > b);
        }
    }

    pub fn pop_min(&mut self) -> Option<T> {
        if self.data.is_empty() {
            return None;
        }
        let item = self.data.swap_remove(0);
        if !self.data.is_empty() {
            self.trickle_down(0, |a, b| a < b);
        }
        Some(item)
    }

    pub fn pop_max(&mut self) -> Option<T> {
        let i = self.max_index()?;
        let item = self.data.swap_remove(i);
        if i < self.data.len() {
            self.trickle_down(i, |a, b| a > b);
        }
        Some(item)
    }

    /// Moves `i` towards the root across grandparent links while `better`
    /// says it beats its grandparent.
    fn bubble_up(&mut self, mut i: usize, better: impl Fn(&T, &T) -> bool) {
        while i > 2 {
            let grandparent = ((i - 1) / 2 - 1) / 2;
            if better(&self.data[i], &self.data[grandparent]) {
                self.data.swap(i, grandparent);
                i = grandparent;
            } else {
                break;
            }
        }
    }

    /// Restores order below `i`, which sits on a level whose nodes must beat
    /// their descendants under `better`.
    fn trickle_down(&mut self, mut i: usize, better: impl Fn(&T, &T) -> bool) {
        let len = self.data.len();
        loop {
            let first_child = 2 * i + 1;
            if first_child >= len {
                return;
            }
            // best among children and grandchildren
            let mut best = first_child;
            let candidates = [
                first_child + 1,
                2 * first_child + 1,
                2 * first_child + 2,
                2 * (first_child + 1) + 1,
                2 * (first_child + 1) + 2,
            ];
            for c in candidates {
                if c < len && better(&self.data[c], &self.data[best]) {
                    best = c;
                }
            }
            if !better(&self.data[best], &self.data[i]) {
                return;
            }
            self.data.swap(best, i);
            if best <= first_child + 1 {
                // a direct child: its subtree was already ordered
                return;
            }
            let parent = (best - 1) / 2;
            if better(&self.data[parent], &self.data[best]) {
                self.data.swap(parent, best);
            }
            i = best;
        }
    }
}
