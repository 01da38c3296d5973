//! Finite groups given by a multiplication table.

use crate::error::{Error, Result};

/// An element of a [`FiniteGroup`], identified by its row in the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(pub usize);

impl GroupElement {
    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates closure, associativity, identity and inverses.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {a} has {} entries, expected {n}", row.len())));
            }
            if let Some(b) = row.iter().position(|&c| c >= n) {
                return Err(Error::NotAGroup(format!("{a}*{b} = {} is not an element", row[b])));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        let inverses = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| table[a][b] == identity && table[b][a] == identity)
                    .ok_or_else(|| Error::NotAGroup(format!("{a} has no inverse")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FiniteGroup { table, identity, inverses })
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::cyclic(1)
    }

    /// `Z/n` with element `k` standing for `g^k`.
    pub fn cyclic(n: usize) -> FiniteGroup {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(table).expect("cyclic tables are groups")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(self.identity)
    }

    pub fn mul(&self, a: GroupElement, b: GroupElement) -> GroupElement {
        GroupElement(self.table[a.0][b.0])
    }

    /// Product of a word, the identity for the empty word.
    pub fn product(&self, word: &[GroupElement]) -> GroupElement {
        word.iter().fold(self.identity(), |acc, &g| self.mul(acc, g))
    }

    pub fn inv(&self, a: GroupElement) -> GroupElement {
        GroupElement(self.inverses[a.0])
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + Clone {
        (0..self.order()).map(GroupElement)
    }

    pub fn pairs(&self) -> Vec<(GroupElement, GroupElement)> {
        self.elements().flat_map(|a| self.elements().map(move |b| (a, b))).collect()
    }

    pub fn triples(&self) -> Vec<(GroupElement, GroupElement, GroupElement)> {
        self.pairs()
            .into_iter()
            .flat_map(|(a, b)| self.elements().map(move |c| (a, b, c)))
            .collect()
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
}

/// Storage indexed by ordered pairs of group elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ByPair<T> {
    order: usize,
    items: Vec<T>,
}

impl<T> ByPair<T> {
    pub fn build(group: &FiniteGroup, mut f: impl FnMut(GroupElement, GroupElement) -> T) -> ByPair<T> {
        let items = group.pairs().into_iter().map(|(a, b)| f(a, b)).collect();
        ByPair { order: group.order(), items }
    }

    pub fn try_build<E>(
        group: &FiniteGroup,
        mut f: impl FnMut(GroupElement, GroupElement) -> std::result::Result<T, E>,
    ) -> std::result::Result<ByPair<T>, E> {
        let items = group.pairs().into_iter().map(|(a, b)| f(a, b)).collect::<std::result::Result<_, E>>()?;
        Ok(ByPair { order: group.order(), items })
    }

    pub fn get(&self, a: GroupElement, b: GroupElement) -> &T {
        &self.items[a.0 * self.order + b.0]
    }

    pub fn iter(&self) -> impl Iterator<Item = ((GroupElement, GroupElement), &T)> {
        let n = self.order;
        self.items.iter().enumerate().map(move |(k, t)| ((GroupElement(k / n), GroupElement(k % n)), t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_inverses() {
        let z2 = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(z2.identity(), GroupElement(0));
        assert_eq!(z2.inv(GroupElement(1)), GroupElement(1));
        let z3 = FiniteGroup::cyclic(3);
        assert_eq!(z3.inv(GroupElement(1)), GroupElement(2));
        assert_eq!(z3.product(&[GroupElement(1), GroupElement(1), GroupElement(1)]), z3.identity());
    }

    #[test]
    fn non_group_tables_are_rejected() {
        let bad = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]);
        assert!(matches!(bad, Err(Error::NotAGroup(_))));
        let no_identity = FiniteGroup::from_table(vec![vec![0, 0], vec![0, 0]]);
        assert!(matches!(no_identity, Err(Error::NotAGroup(_))));
        assert!(FiniteGroup::from_table(vec![vec![0, 2], vec![1, 0]]).is_err());
    }

    #[test]
    fn symmetric_group_s3() {
        // permutations of {0,1,2} in lexicographic order, composed right to left
        let perms: Vec<[usize; 3]> =
            vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let table = perms
            .iter()
            .map(|p| {
                perms
                    .iter()
                    .map(|q| {
                        let r = [p[q[0]], p[q[1]], p[q[2]]];
                        perms.iter().position(|s| *s == r).unwrap()
                    })
                    .collect()
            })
            .collect();
        let s3 = FiniteGroup::from_table(table).unwrap();
        assert_eq!(s3.order(), 6);
        assert_ne!(s3.mul(GroupElement(1), GroupElement(2)), s3.mul(GroupElement(2), GroupElement(1)));
        for g in s3.elements() {
            assert_eq!(s3.mul(g, s3.inv(g)), s3.identity());
        }
    }
}
