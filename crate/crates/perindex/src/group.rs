//! Finite-group arithmetic: abelian groups presented by invariant factors and
//! general groups presented by explicit Cayley tables.
//!
//! Elements are addressed by index. For abelian groups the indexing is
//! lexicographic on tuples (last coordinate fastest), and every structure
//! built on top of a group addresses elements through that single index
//! space.

use std::sync::Arc;

use crate::arith;
use crate::error::{Error, Result};

/// Hard ceiling on the order of any group materialized as a Cayley table.
pub const DEFAULT_GROUP_CAP: usize = 4096;

/// Shared handle to a Cayley-table group.
pub type GroupRef = Arc<FiniteGroup>;

/// A finite abelian group `Z/d_1 x ... x Z/d_k` given by its list of moduli.
///
/// The moduli are not required to form a divisibility chain; any list of
/// positive integers is accepted. An empty list is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
    order: u64,
}

impl FiniteAbelianGroup {
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        let mut order = 1u64;
        for &d in &factors {
            if d == 0 {
                return Err(Error::InvalidInput(
                    "invariant factors must be positive".into(),
                ));
            }
            order = order
                .checked_mul(d)
                .ok_or_else(|| Error::ResourceLimit("group order overflows u64".into()))?;
        }
        Ok(FiniteAbelianGroup { factors, order })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup {
            factors: Vec::new(),
            order: 1,
        }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn exponent(&self) -> u64 {
        self.factors.iter().fold(1, |acc, &d| arith::lcm(acc, d))
    }

    /// Decode an element index into its coordinate tuple.
    pub fn tuple_of_index(&self, idx: usize) -> Vec<u64> {
        debug_assert!((idx as u64) < self.order);
        let mut rem = idx as u64;
        let mut tuple = vec![0u64; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            tuple[i] = rem % self.factors[i];
            rem /= self.factors[i];
        }
        tuple
    }

    /// Encode a coordinate tuple (entries reduced mod d_i) into its index.
    pub fn index_of_tuple(&self, tuple: &[u64]) -> usize {
        debug_assert_eq!(tuple.len(), self.factors.len());
        let mut idx = 0u64;
        for (i, &x) in tuple.iter().enumerate() {
            idx = idx * self.factors[i] + (x % self.factors[i]);
        }
        idx as usize
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let ta = self.tuple_of_index(a);
        let tb = self.tuple_of_index(b);
        let sum: Vec<u64> = ta
            .iter()
            .zip(&tb)
            .zip(&self.factors)
            .map(|((&x, &y), &d)| (x + y) % d)
            .collect();
        self.index_of_tuple(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let t = self.tuple_of_index(a);
        let n: Vec<u64> = t
            .iter()
            .zip(&self.factors)
            .map(|(&x, &d)| (d - x) % d)
            .collect();
        self.index_of_tuple(&n)
    }

    /// k-fold sum of the element at `a`.
    pub fn scale_element(&self, a: usize, k: u64) -> usize {
        let t = self.tuple_of_index(a);
        let s: Vec<u64> = t
            .iter()
            .zip(&self.factors)
            .map(|(&x, &d)| (x % d).wrapping_mul(k % d) % d)
            .collect();
        self.index_of_tuple(&s)
    }

    /// Index of the standard generator of the i-th cyclic factor.
    pub fn generator(&self, axis: usize) -> usize {
        let mut t = vec![0u64; self.factors.len()];
        if self.factors[axis] > 1 {
            t[axis] = 1;
        }
        self.index_of_tuple(&t)
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let t = self.tuple_of_index(a);
        t.iter()
            .zip(&self.factors)
            .fold(1, |acc, (&x, &d)| arith::lcm(acc, arith::additive_order(x, d)))
    }

    pub fn to_table(&self) -> Result<FiniteGroup> {
        self.to_table_with_cap(DEFAULT_GROUP_CAP)
    }

    pub fn to_table_with_cap(&self, cap: usize) -> Result<FiniteGroup> {
        if self.order > cap as u64 {
            return Err(Error::ResourceLimit(format!(
                "group of order {} exceeds cap {}",
                self.order, cap
            )));
        }
        let n = self.order as usize;
        let mut table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = self.add(i, j);
            }
        }
        Ok(FiniteGroup::from_flat_unchecked(n, table))
    }
}

/// A finite group of order `n` given by its full Cayley table, with the
/// identity at index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    abelian: bool,
}

impl FiniteGroup {
    /// Validate and adopt an explicit Cayley table. Checks the identity
    /// position, the Latin-square property and full associativity, and
    /// reports the first violated identity.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty Cayley table".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInput(format!(
                    "Cayley table row {i} has length {} but the table has {n} rows",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::InvalidInput(format!(
                        "table[{i}][{j}] = {v} is out of range 0..{n}"
                    )));
                }
            }
        }
        for i in 0..n {
            if rows[0][i] != i {
                return Err(Error::Verification(format!(
                    "identity violated: table[0][{i}] = {} but expected {i}",
                    rows[0][i]
                )));
            }
            if rows[i][0] != i {
                return Err(Error::Verification(format!(
                    "identity violated: table[{i}][0] = {} but expected {i}",
                    rows[i][0]
                )));
            }
        }
        for i in 0..n {
            let mut seen = vec![false; n];
            for j in 0..n {
                if seen[rows[i][j]] {
                    return Err(Error::Verification(format!(
                        "row {i} is not a permutation: value {} repeats",
                        rows[i][j]
                    )));
                }
                seen[rows[i][j]] = true;
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for i in 0..n {
                if seen[rows[i][j]] {
                    return Err(Error::Verification(format!(
                        "column {j} is not a permutation: value {} repeats",
                        rows[i][j]
                    )));
                }
                seen[rows[i][j]] = true;
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = rows[x][y];
                for z in 0..n {
                    if rows[xy][z] != rows[x][rows[y][z]] {
                        return Err(Error::Verification(format!(
                            "associativity violated at triple ({x}, {y}, {z}): \
                             ({x}*{y})*{z} = {} but {x}*({y}*{z}) = {}",
                            rows[xy][z], rows[x][rows[y][z]]
                        )));
                    }
                }
            }
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in rows {
            flat.extend_from_slice(row);
        }
        Ok(Self::from_flat_unchecked(n, flat))
    }

    /// Adopt a table known to be a valid group (constructed internally).
    pub(crate) fn from_flat_unchecked(n: usize, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), n * n);
        let mut inverse = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                if table[i * n + j] == 0 {
                    inverse[i] = j;
                    break;
                }
            }
        }
        let mut abelian = true;
        'outer: for i in 0..n {
            for j in i + 1..n {
                if table[i * n + j] != table[j * n + i] {
                    abelian = false;
                    break 'outer;
                }
            }
        }
        FiniteGroup {
            n,
            table,
            inverse,
            abelian,
        }
    }

    pub fn trivial() -> Self {
        Self::from_flat_unchecked(1, vec![0])
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        self.abelian
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|i| self.table[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn power(&self, a: usize, k: u64) -> usize {
        let mut acc = 0usize;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Least k >= 1 with x^k = e. Always divides the group order.
    pub fn element_order(&self, x: usize) -> u64 {
        let mut acc = x;
        let mut k = 1u64;
        while acc != 0 {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        (0..self.n).fold(1, |acc, x| arith::lcm(acc, self.element_order(x)))
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        self.direct_product_with_cap(other, DEFAULT_GROUP_CAP)
    }

    /// Componentwise product with index pairing `(i, j) -> i*|G2| + j`.
    pub fn direct_product_with_cap(&self, other: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
        let n = self
            .n
            .checked_mul(other.n)
            .filter(|&n| n <= cap)
            .ok_or_else(|| {
                Error::ResourceLimit(format!(
                    "product of orders {} and {} exceeds cap {cap}",
                    self.n, other.n
                ))
            })?;
        let mut table = vec![0usize; n * n];
        for i1 in 0..self.n {
            for i2 in 0..other.n {
                let a = i1 * other.n + i2;
                for j1 in 0..self.n {
                    for j2 in 0..other.n {
                        let b = j1 * other.n + j2;
                        table[a * n + b] = self.mul(i1, j1) * other.n + other.mul(i2, j2);
                    }
                }
            }
        }
        Ok(Self::from_flat_unchecked(n, table))
    }

    /// Partition of element indices into conjugacy classes, each sorted.
    /// Classes are ordered by their smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut classes = Vec::new();
        for x in 0..self.n {
            if seen[x] {
                continue;
            }
            let mut class = Vec::new();
            for g in 0..self.n {
                let c = self.mul(self.inv(g), self.mul(x, g));
                if !seen[c] {
                    seen[c] = true;
                    class.push(c);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        classes
    }

    /// Elements commuting with `x`, ascending.
    pub fn centralizer(&self, x: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&g| self.mul(g, x) == self.mul(x, g))
            .collect()
    }
}

/// A subgroup of a Cayley-table group, kept as a sorted list of member
/// indices together with a handle on the parent.
#[derive(Debug, Clone)]
pub struct Subgroup {
    parent: GroupRef,
    members: Vec<usize>,
}

impl Subgroup {
    /// Wrap a member list without checking closure; consumers that require a
    /// genuine subgroup validate before use.
    pub fn from_members(parent: GroupRef, members: Vec<usize>) -> Self {
        let mut members = members;
        members.sort_unstable();
        members.dedup();
        Subgroup { parent, members }
    }

    pub fn parent(&self) -> &GroupRef {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Relabel the subgroup as a standalone group. Returns the group and the
    /// member list mapping new indices back to parent indices.
    ///
    /// Panics if the member list is not closed under products; callers that
    /// accept untrusted lists check with [`is_subgroup`] first.
    pub fn to_group(&self) -> (FiniteGroup, Vec<usize>) {
        let h = self.members.len();
        let mut pos = vec![usize::MAX; self.parent.order()];
        for (new, &old) in self.members.iter().enumerate() {
            pos[old] = new;
        }
        let mut table = vec![0usize; h * h];
        for (i, &a) in self.members.iter().enumerate() {
            for (j, &b) in self.members.iter().enumerate() {
                let p = self.parent.mul(a, b);
                assert_ne!(pos[p], usize::MAX, "subgroup member list is not closed");
                table[i * h + j] = pos[p];
            }
        }
        (FiniteGroup::from_flat_unchecked(h, table), self.members.clone())
    }
}

/// Closure of a generating set under products and inverses.
pub fn subgroup_generated(parent: &GroupRef, gens: &[usize]) -> Result<Subgroup> {
    let n = parent.order();
    for &g in gens {
        if g >= n {
            return Err(Error::InvalidInput(format!(
                "generator index {g} out of range 0..{n}"
            )));
        }
    }
    let mut member = vec![false; n];
    member[0] = true;
    let mut stack: Vec<usize> = Vec::new();
    for &g in gens {
        if !member[g] {
            member[g] = true;
            stack.push(g);
        }
    }
    // In a finite group, closing the generator words under right
    // multiplication already contains all inverses.
    while let Some(x) = stack.pop() {
        for &g in gens {
            let y = parent.mul(x, g);
            if !member[y] {
                member[y] = true;
                stack.push(y);
            }
        }
    }
    let members: Vec<usize> = (0..n).filter(|&i| member[i]).collect();
    Ok(Subgroup {
        parent: parent.clone(),
        members,
    })
}

/// Whether a sorted member list is closed under products and inverses and
/// contains the identity.
pub fn is_subgroup(parent: &FiniteGroup, members: &[usize]) -> bool {
    if members.binary_search(&0).is_err() {
        return false;
    }
    for &a in members {
        if a >= parent.order() || members.binary_search(&parent.inv(a)).is_err() {
            return false;
        }
        for &b in members {
            if members.binary_search(&parent.mul(a, b)).is_err() {
                return false;
            }
        }
    }
    true
}
