use serde::Serialize;

/// How many failing tuples a sweep keeps. The count of failures is always
/// exact.
pub const WITNESS_CAP: usize = 64;

/// Failing tuples of a brute-force sweep, in lexicographic order of the
/// sweep. The first item is the lexicographically minimal witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witnesses<T> {
    pub items: Vec<T>,
    pub total: usize,
}

impl<T> Default for Witnesses<T> {
    fn default() -> Self {
        Witnesses {
            items: Vec::new(),
            total: 0,
        }
    }
}

impl<T> Witnesses<T> {
    pub fn push(&mut self, w: T) {
        self.total += 1;
        if self.items.len() < WITNESS_CAP {
            self.items.push(w);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn first(&self) -> Option<&T> {
        self.items.first()
    }

    pub fn truncated(mut self, limit: usize) -> Self {
        self.items.truncate(limit);
        self
    }
}
