//! Finite groups given by multiplication tables.

use crate::error::{Error, Result};

/// A finite group on `{0, .., n-1}`. `table[a][b]` is the product `ab`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl Group {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(Error::NotAGroup("table is not a closed n x n array".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
            inverse.push(inv);
        }
        let labels = (0..n).map(|i| format!("g{i}")).collect();
        Ok(Group {
            table,
            identity,
            inverse,
            labels,
        })
    }

    pub fn from_fn(n: usize, mul: impl Fn(usize, usize) -> usize) -> Result<Self> {
        Self::new((0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order(), "label count");
        self.labels = labels;
        self
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// `C_n` with element `i` standing for `g^i`.
    pub fn cyclic(n: usize) -> Self {
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{i}"),
            })
            .collect();
        Self::from_fn(n, |a, b| (a + b) % n)
            .expect("cyclic group")
            .with_labels(labels)
    }

    /// Direct product; element `(a, b)` has index `a * |other| + b`.
    pub fn product(&self, other: &Group) -> Self {
        let m = other.order();
        let labels = (0..self.order() * m)
            .map(|i| format!("({},{})", self.labels[i / m], other.labels[i % m]))
            .collect();
        Self::from_fn(self.order() * m, |x, y| {
            self.mul(x / m, y / m) * m + other.mul(x % m, y % m)
        })
        .expect("product of groups")
        .with_labels(labels)
    }

    /// `S_3` as `{r^i s^j}` with index `i + 3j`, `r = (0 1 2)`, `s = (1 2)`,
    /// and `s r = r^2 s`.
    pub fn s3() -> Self {
        let labels = ["1", "r", "r^2", "s", "rs", "r^2s"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Self::from_fn(6, |x, y| {
            let (i, j) = (x % 3, x / 3);
            let (k, l) = (y % 3, y / 3);
            // r^i s^j r^k s^l = r^{i + (-1)^j k} s^{j+l}
            let rot = if j == 0 { (i + k) % 3 } else { (i + 3 - k) % 3 };
            rot + 3 * ((j + l) % 2)
        })
        .expect("S3")
        .with_labels(labels)
    }

    /// Dihedral group of order `2n`: `r^i s^j` at index `i + n j`.
    pub fn dihedral(n: usize) -> Self {
        Self::from_fn(2 * n, |x, y| {
            let (i, j) = (x % n, x / n);
            let (k, l) = (y % n, y / n);
            let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
            rot + n * ((j + l) % 2)
        })
        .expect("dihedral group")
    }

    /// Quaternion group: index `4 s + u` is `(-1)^s` times unit `u` of `1, i, j, k`.
    pub fn quaternion() -> Self {
        // unit products as (sign, unit)
        const T: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        Self::from_fn(8, |x, y| {
            let (s, t) = T[x % 4][y % 4];
            ((x / 4 + y / 4 + s) % 2) * 4 + t
        })
        .expect("Q8")
    }

    /// One representative of every isomorphism class of groups of order at
    /// most 8.
    pub fn all_up_to_order_8() -> Vec<(String, Group)> {
        let c2 = Self::cyclic(2);
        let v4 = c2.product(&c2);
        vec![
            ("C1".into(), Self::trivial()),
            ("C2".into(), c2.clone()),
            ("C3".into(), Self::cyclic(3)),
            ("C4".into(), Self::cyclic(4)),
            ("C2xC2".into(), v4.clone()),
            ("C5".into(), Self::cyclic(5)),
            ("C6".into(), Self::cyclic(6)),
            ("S3".into(), Self::s3()),
            ("C7".into(), Self::cyclic(7)),
            ("C8".into(), Self::cyclic(8)),
            ("C4xC2".into(), Self::cyclic(4).product(&c2)),
            ("C2xC2xC2".into(), v4.product(&c2)),
            ("D4".into(), Self::dihedral(4)),
            ("Q8".into(), Self::quaternion()),
        ]
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Checks that `elems` is a subgroup.
    pub fn is_subgroup(&self, elems: &[usize]) -> bool {
        elems.contains(&self.identity)
            && elems
                .iter()
                .all(|&a| elems.contains(&self.inv(a)) && elems.iter().all(|&b| elems.contains(&self.mul(a, b))))
    }

    /// The subgroup on `elems` (in the given order), keeping labels.
    pub fn subgroup(&self, elems: &[usize]) -> Result<Group> {
        if !self.is_subgroup(elems) {
            return Err(Error::NotAGroup("elements do not form a subgroup".into()));
        }
        let pos = |x: usize| elems.iter().position(|&e| e == x).expect("closed");
        let table = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        let labels = elems.iter().map(|&e| self.labels[e].clone()).collect();
        Ok(Group::new(table)?.with_labels(labels))
    }

    /// Left translate of a subset bitmask: `gA`.
    pub fn translate_mask(&self, g: usize, mask: u64) -> u64 {
        let mut out = 0;
        for a in 0..self.order() {
            if mask >> a & 1 == 1 {
                out |= 1 << self.mul(g, a);
            }
        }
        out
    }

    /// Checks that `phi` (a table on the elements) is an automorphism.
    pub fn is_automorphism(&self, phi: &[usize]) -> bool {
        let n = self.order();
        let mut seen = vec![false; n];
        for &x in phi {
            if x >= n || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        (0..n).all(|a| (0..n).all(|b| phi[self.mul(a, b)] == self.mul(phi[a], phi[b])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_groups() {
        assert!(Group::new(vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(Group::new(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(Group::new(vec![]).is_err());
    }

    #[test]
    fn catalog_orders() {
        for (name, g) in Group::all_up_to_order_8() {
            assert!(g.order() <= 8, "{name}");
        }
        assert!(!Group::s3().is_abelian());
        assert!(!Group::quaternion().is_abelian());
        assert!(!Group::dihedral(4).is_abelian());
        // Q8 has a unique element of order 2
        let q = Group::quaternion();
        let involutions = (0..8).filter(|&a| a != 0 && q.mul(a, a) == 0).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn s3_relations() {
        let g = Group::s3();
        let (r, s) = (1, 3);
        assert_eq!(g.mul(s, r), g.mul(2, s));
        assert_eq!(g.mul(r, s), 4);
        assert!(g.is_subgroup(&[0, 1, 2]));
        assert!(g.is_subgroup(&[0, 3]));
        assert!(!g.is_subgroup(&[0, 1]));
    }
}
