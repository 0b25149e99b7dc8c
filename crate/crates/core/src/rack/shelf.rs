use serde::Serialize;

use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::report::Witnesses;

/// A finite set with a binary operation `x ◁ y`, stored as a table
/// `op[x][y]` of element indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteShelf {
    elements: Vec<String>,
    op: Vec<Vec<usize>>,
}

impl FiniteShelf {
    /// Validates only the table shape and bounds; use [`check_shelf`] for the
    /// axioms.
    pub fn new(elements: Vec<String>, op: Vec<Vec<usize>>) -> Result<Self> {
        let n = elements.len();
        if op.len() != n || op.iter().any(|r| r.len() != n) {
            return Err(Error::Validation(format!("operation table is not {n}x{n}")));
        }
        for (x, row) in op.iter().enumerate() {
            if let Some(y) = row.iter().position(|&v| v >= n) {
                return Err(Error::Validation(format!("entry ({x},{y}) = {} out of range", row[y])));
            }
        }
        Ok(FiniteShelf { elements, op })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.op
    }

    /// `x ◁ y`
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.op[x][y]
    }

    /// The right translation `x ↦ x ◁ y` as an image list.
    pub fn column(&self, y: usize) -> Vec<usize> {
        (0..self.len()).map(|x| self.op[x][y]).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShelfReport {
    pub is_shelf: bool,
    pub is_rack: bool,
    pub is_quandle: bool,
    /// Triples `(x, y, z)` with `(x◁y)◁z ≠ (x◁z)◁(y◁z)`.
    pub distributivity: Witnesses<(usize, usize, usize)>,
    /// Elements `y` whose right translation is not a bijection.
    pub non_bijective: Witnesses<usize>,
    /// Elements with `x ◁ x ≠ x`.
    pub non_idempotent: Witnesses<usize>,
}

pub fn check_shelf(s: &FiniteShelf) -> ShelfReport {
    let n = s.len();
    let mut distributivity = Witnesses::default();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if s.op(s.op(x, y), z) != s.op(s.op(x, z), s.op(y, z)) {
                    distributivity.push((x, y, z));
                }
            }
        }
    }
    let mut non_bijective = Witnesses::default();
    for y in 0..n {
        let mut hit = vec![false; n];
        for x in 0..n {
            hit[s.op(x, y)] = true;
        }
        if hit.contains(&false) {
            non_bijective.push(y);
        }
    }
    let mut non_idempotent = Witnesses::default();
    for x in (0..n).filter(|&x| s.op(x, x) != x) {
        non_idempotent.push(x);
    }
    let is_shelf = distributivity.is_empty();
    let is_rack = is_shelf && non_bijective.is_empty();
    let is_quandle = is_rack && non_idempotent.is_empty();
    ShelfReport {
        is_shelf,
        is_rack,
        is_quandle,
        distributivity,
        non_bijective,
        non_idempotent,
    }
}

/// `x ◁ y = y⁻¹ x y` on the elements of `g`.
pub fn conjugation_rack(g: &FiniteGroup) -> FiniteShelf {
    let n = g.order();
    let op = (0..n).map(|x| (0..n).map(|y| g.conj(x, y)).collect()).collect();
    FiniteShelf::new(g.elements().to_vec(), op).expect("conjugation table is in range")
}

/// `x ◁ y = 2y − x` on Z/n.
pub fn dihedral_quandle(n: usize) -> Result<FiniteShelf> {
    if n == 0 {
        return Err(Error::Argument("dihedral quandle needs n ≥ 1".into()));
    }
    let op = (0..n).map(|x| (0..n).map(|y| (2 * y + n - x) % n).collect()).collect();
    FiniteShelf::new((0..n).map(|i| i.to_string()).collect(), op)
}

/// `x ◁ y = x` on `n` elements.
pub fn trivial_quandle(n: usize) -> FiniteShelf {
    let op = (0..n).map(|x| vec![x; n]).collect();
    FiniteShelf::new((0..n).map(|i| i.to_string()).collect(), op).expect("in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    // Independent brute-force reference: literal axioms, no shared helpers.
    fn brute_is_quandle(op: &[Vec<usize>]) -> bool {
        let n = op.len();
        let mut ok = true;
        for x in 0..n {
            ok &= op[x][x] == x;
            for y in 0..n {
                ok &= (0..n).filter(|&w| op[w][y] == x).count() == 1;
                for z in 0..n {
                    ok &= op[op[x][y]][z] == op[op[x][z]][op[y][z]];
                }
            }
        }
        ok
    }

    #[test]
    fn trivial_shelf_is_quandle() {
        let r = check_shelf(&trivial_quandle(3));
        assert!(r.is_shelf && r.is_rack && r.is_quandle);
    }

    #[test]
    fn dihedral_r3() {
        let r3 = dihedral_quandle(3).unwrap();
        assert_eq!(r3.op(0, 1), 2);
        assert!(brute_is_quandle(r3.table()));
        assert!(check_shelf(&r3).is_quandle);
    }

    #[test]
    fn dihedral_columns_are_involutions() {
        let r4 = dihedral_quandle(4).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(r4.op(r4.op(x, y), y), x);
            }
        }
        assert_eq!(dihedral_quandle(1).unwrap().len(), 1);
        assert!(dihedral_quandle(0).is_err());
    }

    #[test]
    fn constant_column_is_a_shelf_but_not_a_rack() {
        // 0◁0 = 1, everything else returns its first argument
        let s = FiniteShelf::new(vec!["0".into(), "1".into()], vec![vec![1, 0], vec![1, 1]]).unwrap();
        let r = check_shelf(&s);
        assert!(r.is_shelf);
        assert!(!r.is_rack);
        assert_eq!(r.non_bijective.first(), Some(&0));
    }

    #[test]
    fn non_shelf_witness() {
        // column 0 swaps, column 1 fixes: (0◁0)◁0 = 0 but (0◁0)◁(0◁0) = 1◁1 = 1
        let s = FiniteShelf::new(vec!["0".into(), "1".into()], vec![vec![1, 0], vec![0, 1]]).unwrap();
        let r = check_shelf(&s);
        assert!(!r.is_shelf && !r.is_rack && !r.is_quandle);
        assert_eq!(r.distributivity.first(), Some(&(0, 0, 0)));
    }

    #[test]
    fn conjugation_racks() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let c = conjugation_rack(&z2);
        assert!((0..2).all(|x| (0..2).all(|y| c.op(x, y) == x)));
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let c = conjugation_rack(&s3);
        let ix = |l: &str| s3.index_of(l).unwrap();
        assert_eq!(c.op(ix("(12)"), ix("(13)")), ix("(23)"));
        for g in [s3, FiniteGroup::symmetric(4).unwrap(), FiniteGroup::cyclic(5).unwrap()] {
            assert!(check_shelf(&conjugation_rack(&g)).is_quandle);
        }
    }

    #[test]
    fn malformed_tables() {
        assert!(FiniteShelf::new(vec!["a".into()], vec![vec![1]]).is_err());
        assert!(FiniteShelf::new(vec!["a".into()], vec![]).is_err());
    }
}
