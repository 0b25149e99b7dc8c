use std::collections::{HashMap, VecDeque};

use super::Perm;
use crate::error::{Error, Result};

/// A finite group stored as a Cayley table. Axioms are verified on
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    elements: Vec<String>,
    mul: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Builds a group from labels and a multiplication table, checking
    /// closure, associativity, a two-sided identity and two-sided inverses.
    pub fn from_table(elements: Vec<String>, mul: Vec<Vec<usize>>) -> Result<Self> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::Validation("a group needs at least one element".into()));
        }
        if mul.len() != n || mul.iter().any(|r| r.len() != n) {
            return Err(Error::Validation(format!("multiplication table is not {n}x{n}")));
        }
        if let Some((a, b)) = cells(n).find(|&(a, b)| mul[a][b] >= n) {
            return Err(Error::Validation(format!("table entry ({a},{b}) out of range")));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::Validation(format!(
                            "not associative at ({}, {}, {})",
                            elements[a], elements[b], elements[c]
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| Error::Validation("no identity element".into()))?;
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| mul[a][b] == identity && mul[b][a] == identity)
                    .ok_or_else(|| Error::Validation(format!("{} has no inverse", elements[a])))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = elements.iter().find(|l| !seen.insert(l.as_str())) {
            return Err(Error::Validation(format!("duplicate element label {dup:?}")));
        }
        Ok(FiniteGroup {
            elements,
            mul,
            identity,
            inverse,
        })
    }

    pub fn trivial() -> Self {
        FiniteGroup::from_table(vec!["e".into()], vec![vec![0]]).expect("trivial group")
    }

    /// Z/n written additively, elements labelled `0..n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("cyclic group of order 0".into()));
        }
        let labels = (0..n).map(|i| i.to_string()).collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(labels, mul)
    }

    /// The symmetric group on `{1..n}`, elements in lexicographic order of
    /// their one-line notation and labelled in cycle notation. The product
    /// `gh` applies `g` first.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 6 {
            return Err(Error::Argument(format!(
                "symmetric group S_{n} not supported (1 ≤ n ≤ 6)"
            )));
        }
        let mut perms = Vec::new();
        let mut current: Vec<usize> = (0..n).collect();
        loop {
            perms.push(Perm::from_images(current.clone()).expect("permutation"));
            if !next_permutation(&mut current) {
                break;
            }
        }
        let points: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        Ok(FiniteGroup::from_perm_list(&perms, &points))
    }

    /// The subgroup of Sym(points) generated by `generators`, enumerated
    /// breadth-first from the identity. Returns the group together with the
    /// permutation realizing each element.
    pub fn generated_by(points: &[String], generators: &[Perm]) -> Result<(Self, Vec<Perm>)> {
        let n = points.len();
        if let Some(g) = generators.iter().find(|g| g.degree() != n) {
            return Err(Error::Argument(format!("generator {g} does not act on {n} points")));
        }
        let mut perms = vec![Perm::identity(n)];
        let mut index: HashMap<Perm, usize> = HashMap::from([(Perm::identity(n), 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let p = perms[i].then(g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), perms.len());
                    queue.push_back(perms.len());
                    perms.push(p);
                }
            }
        }
        Ok((FiniteGroup::from_perm_list(&perms, points), perms))
    }

    fn from_perm_list(perms: &[Perm], points: &[String]) -> Self {
        let index: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mul = perms
            .iter()
            .map(|a| perms.iter().map(|b| index[&a.then(b)]).collect())
            .collect();
        let labels = perms.iter().map(|p| p.cycle_label(points)).collect();
        FiniteGroup::from_table(labels, mul).expect("permutation groups satisfy the group axioms")
    }

    /// Parses `trivial`, `cyclic:<n>`, `symmetric:<n>`, `Z<n>` or `S<n>`.
    pub fn named(name: &str) -> Result<Self> {
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Argument(format!("bad group size in {name:?}")))
        };
        if name == "trivial" {
            Ok(FiniteGroup::trivial())
        } else if let Some(n) = name.strip_prefix("cyclic:").or_else(|| name.strip_prefix('Z')) {
            FiniteGroup::cyclic(parse(n)?)
        } else if let Some(n) = name.strip_prefix("symmetric:").or_else(|| name.strip_prefix('S')) {
            FiniteGroup::symmetric(parse(n)?)
        } else {
            Err(Error::Argument(format!("unknown group {name:?}")))
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, g: usize) -> &str {
        &self.elements[g]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|l| l == label)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g⁻¹ x g`
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn is_abelian(&self) -> bool {
        cells(self.order()).all(|(a, b)| self.mul[a][b] == self.mul[b][a])
    }
}

fn cells(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_orders() {
        for (n, order) in [(1, 1), (2, 2), (3, 6), (4, 24)] {
            assert_eq!(FiniteGroup::symmetric(n).unwrap().order(), order);
        }
    }

    #[test]
    fn s3_conjugation_of_transpositions() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let t12 = s3.index_of("(12)").unwrap();
        let t13 = s3.index_of("(13)").unwrap();
        assert_eq!(s3.label(s3.conj(t12, t13)), "(23)");
        assert_eq!(s3.label(s3.identity()), "()");
        assert!(!s3.is_abelian());
    }

    #[test]
    fn table_validation() {
        let labels = vec!["a".to_string(), "b".to_string()];
        // no identity: constant table
        assert!(FiniteGroup::from_table(labels.clone(), vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(FiniteGroup::from_table(labels.clone(), vec![vec![0, 2], vec![1, 0]]).is_err());
        let z2 = FiniteGroup::from_table(labels, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.inv(1), 1);
    }

    #[test]
    fn named_groups() {
        assert_eq!(FiniteGroup::named("Z3").unwrap().order(), 3);
        assert_eq!(FiniteGroup::named("symmetric:4").unwrap().order(), 24);
        assert!(FiniteGroup::named("Q8").is_err());
    }

    #[test]
    fn generated_subgroup() {
        let points: Vec<String> = (0..4).map(|i| i.to_string()).collect();
        let rot = Perm::from_images(vec![1, 2, 3, 0]).unwrap();
        let (g, perms) = FiniteGroup::generated_by(&points, &[rot]).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        assert!(perms[0].is_identity());
    }
}
