//! Arithmetic of Z/N-valued 2-cocycles on finite groups.
//!
//! A cocycle stores additive exponents: the complex-valued cocycle is
//! `w^{table[x][y]}` for `w` a primitive N-th root of unity. All class-level
//! computations (antisymmetrization, radical, period) are exact integer
//! arithmetic; no floating point enters this module.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{is_subgroup, FiniteAbelianGroup, GroupRef, Subgroup};
use crate::snf;

/// Largest group order accepted by the brute-force period computation.
pub const BRUTEFORCE_CAP: usize = 64;

/// Period data of a cocycle class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassInvariants {
    /// Order of the class: least k >= 1 with k*[a] = 0.
    pub period: u64,
    pub is_trivial: bool,
}

impl ClassInvariants {
    fn new(period: u64) -> Self {
        ClassInvariants {
            period,
            is_trivial: period == 1,
        }
    }
}

/// A normalized 2-cocycle with values in Z/N, stored as a |G| x |G| table of
/// exponents.
#[derive(Debug, Clone)]
pub struct Cocycle {
    group: GroupRef,
    modulus: u64,
    table: Vec<u64>,
}

impl Cocycle {
    /// Adopt a table of exponents (entries are reduced mod N) and check the
    /// normalization and cocycle identities.
    pub fn from_entries(group: GroupRef, modulus: u64, entries: Vec<u64>) -> Result<Self> {
        let c = Self::from_entries_unchecked(group, modulus, entries)?;
        c.check()?;
        Ok(c)
    }

    pub(crate) fn from_entries_unchecked(
        group: GroupRef,
        modulus: u64,
        entries: Vec<u64>,
    ) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidInput("cocycle modulus must be >= 1".into()));
        }
        let n = group.order();
        if entries.len() != n * n {
            return Err(Error::InvalidInput(format!(
                "cocycle table has {} entries but the group has order {n}",
                entries.len()
            )));
        }
        let table = entries.into_iter().map(|v| v % modulus).collect();
        Ok(Cocycle {
            group,
            modulus,
            table,
        })
    }

    pub fn trivial(group: GroupRef, modulus: u64) -> Result<Self> {
        let n = group.order();
        Self::from_entries_unchecked(group, modulus, vec![0; n * n])
    }

    pub fn group(&self) -> &GroupRef {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn value(&self, x: usize, y: usize) -> u64 {
        self.table[x * self.group.order() + y]
    }

    pub fn entries(&self) -> &[u64] {
        &self.table
    }

    /// Full check of normalization and the cocycle identity; reports the
    /// first violated identity.
    pub fn check(&self) -> Result<()> {
        let n = self.group.order();
        let m = self.modulus;
        for x in 0..n {
            if self.value(0, x) != 0 {
                return Err(Error::Verification(format!(
                    "normalization violated at (e, {x}): expected 0, found {}",
                    self.value(0, x)
                )));
            }
            if self.value(x, 0) != 0 {
                return Err(Error::Verification(format!(
                    "normalization violated at ({x}, e): expected 0, found {}",
                    self.value(x, 0)
                )));
            }
        }
        for x in 0..n {
            for y in 0..n {
                let xy = self.group.mul(x, y);
                let axy = self.value(x, y);
                for z in 0..n {
                    let lhs = (axy + self.value(xy, z)) % m;
                    let rhs = (self.value(y, z) + self.value(x, self.group.mul(y, z))) % m;
                    if lhs != rhs {
                        return Err(Error::Verification(format!(
                            "cocycle identity violated at triple ({x}, {y}, {z}): \
                             a(x,y)+a(xy,z) = {lhs} but a(y,z)+a(x,yz) = {rhs} (mod {m})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether normalization and the cocycle identity hold.
    pub fn validate(&self) -> bool {
        self.check().is_ok()
    }

    fn require_compatible(&self, other: &Cocycle) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::InvalidInput(format!(
                "modulus mismatch: {} vs {}",
                self.modulus, other.modulus
            )));
        }
        if !Arc::ptr_eq(&self.group, &other.group) && *self.group != *other.group {
            return Err(Error::InvalidInput(
                "cocycles live on different groups".into(),
            ));
        }
        Ok(())
    }

    /// Pointwise sum mod N.
    pub fn add(&self, other: &Cocycle) -> Result<Cocycle> {
        self.require_compatible(other)?;
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(&a, &b)| (a + b) % self.modulus)
            .collect();
        Ok(Cocycle {
            group: self.group.clone(),
            modulus: self.modulus,
            table,
        })
    }

    /// k-fold pointwise sum mod N; k may be negative.
    pub fn scale(&self, k: i64) -> Cocycle {
        let m = self.modulus as i128;
        let k = (k as i128).rem_euclid(m) as u64;
        let table = self
            .table
            .iter()
            .map(|&a| (a as u128 * k as u128 % self.modulus as u128) as u64)
            .collect();
        Cocycle {
            group: self.group.clone(),
            modulus: self.modulus,
            table,
        }
    }

    pub fn sub(&self, other: &Cocycle) -> Result<Cocycle> {
        self.add(&other.scale(-1))
    }

    /// The pairing b(x,y) = a(x,y) - a(y,x) mod N as a flat |G| x |G| table.
    /// Only defined over abelian groups, where it is biadditive, alternating
    /// and a class invariant.
    pub fn antisymmetrize(&self) -> Result<Vec<u64>> {
        if !self.group.is_abelian() {
            return Err(Error::Unsupported(
                "antisymmetrization requires an abelian group".into(),
            ));
        }
        let n = self.group.order();
        let m = self.modulus;
        let mut beta = vec![0u64; n * n];
        for x in 0..n {
            for y in 0..n {
                beta[x * n + y] = (self.value(x, y) + m - self.value(y, x)) % m;
            }
        }
        Ok(beta)
    }

    /// The radical: elements x with a(x,y) = a(y,x) for all y. A subgroup of
    /// square index in G.
    pub fn radical(&self) -> Result<Subgroup> {
        let beta = self.antisymmetrize()?;
        let n = self.group.order();
        let members: Vec<usize> = (0..n)
            .filter(|&x| (0..n).all(|y| beta[x * n + y] == 0))
            .collect();
        if !is_subgroup(&self.group, &members) {
            return Err(Error::InternalConsistency(
                "radical is not a subgroup; the input cocycle is not valid".into(),
            ));
        }
        if n % members.len() != 0
            || arith::isqrt_exact((n / members.len()) as u64).is_none()
        {
            return Err(Error::InternalConsistency(format!(
                "radical index {} in group of order {n} is not a perfect square",
                n / members.len()
            )));
        }
        crate::group::subgroup_generated(&self.group, &members)
    }

    /// Class period on an abelian group: the order of the antisymmetrized
    /// pairing, i.e. the least k with k*b = 0 mod N.
    pub fn period_abelian(&self) -> Result<ClassInvariants> {
        let beta = self.antisymmetrize()?;
        let m = self.modulus;
        let mut period = 1u64;
        for &v in &beta {
            period = arith::lcm(period, arith::additive_order(v, m));
        }
        let n = self.group.order() as u64;
        let exp = self.group.exponent();
        if exp % period != 0 || n % period != 0 {
            return Err(Error::InternalConsistency(format!(
                "period {period} does not divide the group exponent {exp}"
            )));
        }
        Ok(ClassInvariants::new(period))
    }

    /// Coboundary membership matrix: rows indexed by pairs (x,y), columns by
    /// elements, encoding f(x) + f(y) - f(xy).
    fn coboundary_matrix(&self) -> snf::IntMat {
        let n = self.group.order();
        let mut mat = snf::IntMat::zeros(n * n, n);
        for x in 0..n {
            for y in 0..n {
                let r = x * n + y;
                mat.add_to(r, x, 1);
                mat.add_to(r, y, 1);
                mat.add_to(r, self.group.mul(x, y), -1);
            }
        }
        mat
    }

    /// Class period by brute force, valid on any group of order <= 64:
    /// the least k such that k*a bounds, decided by solving f(x)+f(y)-f(xy)
    /// = k*a(x,y) over Z/(N*|G|). Enlarging the value modulus to N*|G| is
    /// sufficient because a bounding f can always be chosen with values in
    /// roots of unity of order dividing N*|G|.
    pub fn period_bruteforce(&self) -> Result<ClassInvariants> {
        let n = self.group.order();
        if n > BRUTEFORCE_CAP {
            return Err(Error::ResourceLimit(format!(
                "brute-force period needs |G| <= {BRUTEFORCE_CAP}, got {n}"
            )));
        }
        let m = (self.modulus as i128) * (n as i128);
        let candidates = arith::divisors_sorted(n as u64);
        let rhs: Vec<Vec<i128>> = candidates
            .iter()
            .map(|&k| {
                let mut b = Vec::with_capacity(n * n);
                for x in 0..n {
                    for y in 0..n {
                        let e = self.value(x, y) as i128;
                        b.push((k as i128 * e * n as i128).rem_euclid(m));
                    }
                }
                b
            })
            .collect();
        let solvable = snf::solvable_mod_all(self.coboundary_matrix(), rhs, m);
        for (i, &k) in candidates.iter().enumerate() {
            if solvable[i] {
                return Ok(ClassInvariants::new(k));
            }
        }
        Err(Error::InternalConsistency(
            "no divisor of |G| kills the class; the input cocycle is not valid".into(),
        ))
    }

    /// Whether the class is trivial, i.e. the cocycle bounds.
    pub fn is_trivial_class(&self) -> Result<bool> {
        Ok(self.period_bruteforce()?.is_trivial)
    }

    /// Whether two cocycles define the same class, decided by testing that
    /// their difference bounds.
    pub fn same_class(&self, other: &Cocycle) -> Result<bool> {
        self.sub(other)?.is_trivial_class()
    }

    /// Restriction to a subgroup, relabeled as a standalone group.
    pub fn restrict(&self, sub: &Subgroup) -> Result<Cocycle> {
        if !Arc::ptr_eq(sub.parent(), &self.group) && **sub.parent() != *self.group {
            return Err(Error::InvalidInput(
                "subgroup belongs to a different group".into(),
            ));
        }
        if !is_subgroup(&self.group, sub.members()) {
            return Err(Error::InvalidInput(
                "member list is not closed under products and inverses".into(),
            ));
        }
        let (h, members) = sub.to_group();
        let hn = h.order();
        let mut table = Vec::with_capacity(hn * hn);
        for &a in &members {
            for &b in &members {
                table.push(self.value(a, b));
            }
        }
        Cocycle::from_entries_unchecked(Arc::new(h), self.modulus, table)
    }
}

/// The coboundary of a function f: G -> Z/N with f(e) = 0, i.e.
/// (x,y) -> f(x) + f(y) - f(xy). Always a valid cocycle of trivial class.
pub fn coboundary(group: &GroupRef, modulus: u64, f: &[u64]) -> Result<Cocycle> {
    let n = group.order();
    if f.len() != n {
        return Err(Error::InvalidInput(format!(
            "coboundary function has {} values but the group has order {n}",
            f.len()
        )));
    }
    if modulus == 0 {
        return Err(Error::InvalidInput("modulus must be >= 1".into()));
    }
    if f[0] % modulus != 0 {
        return Err(Error::InvalidInput(
            "coboundary function must vanish at the identity".into(),
        ));
    }
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let v = (f[x] % modulus + f[y] % modulus + modulus
                - f[group.mul(x, y)] % modulus)
                % modulus;
            table.push(v);
        }
    }
    Cocycle::from_entries_unchecked(group.clone(), modulus, table)
}

/// A bilinear pairing on an abelian group, presented by a rank x rank integer
/// matrix mod N. The induced map (x,y) -> sum b_ij x_i y_j is a 2-cocycle.
#[derive(Debug, Clone)]
pub struct BilinearForm {
    group: FiniteAbelianGroup,
    modulus: u64,
    matrix: Vec<u64>,
}

impl BilinearForm {
    /// Checks well-definedness: b_ij * d_i = b_ij * d_j = 0 mod N.
    pub fn new(group: FiniteAbelianGroup, modulus: u64, matrix: Vec<Vec<u64>>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidInput("modulus must be >= 1".into()));
        }
        let k = group.rank();
        if matrix.len() != k || matrix.iter().any(|row| row.len() != k) {
            return Err(Error::InvalidInput(format!(
                "bilinear matrix must be {k} x {k} to match the group rank"
            )));
        }
        let mut flat = Vec::with_capacity(k * k);
        for (i, row) in matrix.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                let v = v % modulus;
                let di = group.factors()[i] as u128;
                let dj = group.factors()[j] as u128;
                if (v as u128 * di) % modulus as u128 != 0
                    || (v as u128 * dj) % modulus as u128 != 0
                {
                    return Err(Error::InvalidInput(format!(
                        "entry b[{i}][{j}] = {v} is not well defined: \
                         {v}*d_{i} or {v}*d_{j} is nonzero mod {modulus}"
                    )));
                }
                flat.push(v);
            }
        }
        Ok(BilinearForm {
            group,
            modulus,
            matrix: flat,
        })
    }

    /// Seeded random well-defined form: each entry is drawn uniformly from
    /// the multiples of N / gcd(N, d_i, d_j).
    pub fn random(group: FiniteAbelianGroup, modulus: u64, seed: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidInput("modulus must be >= 1".into()));
        }
        let k = group.rank();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut matrix = vec![vec![0u64; k]; k];
        for i in 0..k {
            for j in 0..k {
                let g = arith::gcd(
                    modulus,
                    arith::gcd(group.factors()[i], group.factors()[j]),
                );
                let step = modulus / g;
                let u = rng.gen_range(0..g);
                matrix[i][j] = (u * step) % modulus;
            }
        }
        Self::new(group, modulus, matrix)
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn matrix(&self) -> Vec<Vec<u64>> {
        let k = self.group.rank();
        (0..k)
            .map(|i| self.matrix[i * k..(i + 1) * k].to_vec())
            .collect()
    }

    /// Evaluate the pairing on two element indices.
    pub fn eval(&self, x: usize, y: usize) -> u64 {
        let k = self.group.rank();
        let tx = self.group.tuple_of_index(x);
        let ty = self.group.tuple_of_index(y);
        let m = self.modulus as u128;
        let mut acc = 0u128;
        for i in 0..k {
            for j in 0..k {
                acc = (acc + self.matrix[i * k + j] as u128 * (tx[i] as u128 % m)
                    % m
                    * (ty[j] as u128 % m))
                    % m;
            }
        }
        acc as u64
    }

    /// The induced cocycle on the Cayley table of the group.
    pub fn cocycle(&self) -> Result<Cocycle> {
        let table_group = Arc::new(self.group.to_table()?);
        self.cocycle_on(table_group)
    }

    /// Same, but reusing an existing Cayley table of this group.
    pub fn cocycle_on(&self, table_group: GroupRef) -> Result<Cocycle> {
        let n = self.group.order() as usize;
        if table_group.order() != n {
            return Err(Error::InvalidInput(
                "Cayley table does not match the abelian group".into(),
            ));
        }
        let mut entries = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                entries.push(self.eval(x, y));
            }
        }
        Cocycle::from_entries_unchecked(table_group, self.modulus, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z2_squared_nondegenerate() -> Cocycle {
        let g = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        let b = BilinearForm::new(g, 2, vec![vec![0, 1], vec![0, 0]]).unwrap();
        b.cocycle().unwrap()
    }

    fn z4_squared(b12: u64, modulus: u64) -> Cocycle {
        let g = FiniteAbelianGroup::new(vec![4, 4]).unwrap();
        let b = BilinearForm::new(g, modulus, vec![vec![0, b12], vec![0, 0]]).unwrap();
        b.cocycle().unwrap()
    }

    #[test]
    fn trivial_cocycle_validates() {
        let g: GroupRef = Arc::new(
            FiniteAbelianGroup::new(vec![2, 2]).unwrap().to_table().unwrap(),
        );
        let c = Cocycle::trivial(g, 4).unwrap();
        assert!(c.validate());
    }

    #[test]
    fn broken_normalization_is_rejected() {
        let g: GroupRef = Arc::new(
            FiniteAbelianGroup::new(vec![2]).unwrap().to_table().unwrap(),
        );
        let mut entries = vec![0u64; 4];
        entries[1] = 1; // a(e, x) = 1
        let c = Cocycle::from_entries_unchecked(g, 2, entries).unwrap();
        let err = c.check().unwrap_err();
        assert!(err.to_string().contains("normalization"));
        assert!(err.to_string().contains("(e, 1)"));
    }

    #[test]
    fn bilinear_cocycle_validates() {
        // Bilinearity implies the cocycle identity; confirm by enumeration.
        let c = z2_squared_nondegenerate();
        assert!(c.validate());
        // a((a,b),(c,d)) = a*d mod 2
        let g = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                let tx = g.tuple_of_index(x);
                let ty = g.tuple_of_index(y);
                assert_eq!(c.value(x, y), (tx[0] * ty[1]) % 2);
            }
        }
    }

    #[test]
    fn ill_defined_form_is_rejected() {
        let g = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        // 1 * d_1 = 2 != 0 mod 4.
        assert!(BilinearForm::new(g, 4, vec![vec![0, 1], vec![0, 0]]).is_err());
    }

    #[test]
    fn coboundary_is_trivial_class() {
        let g: GroupRef = Arc::new(
            FiniteAbelianGroup::new(vec![2]).unwrap().to_table().unwrap(),
        );
        // Over Z/2 every f with f(e)=0 gives the zero table: a(g,g)=2f(g)=0.
        for fg in 0..2u64 {
            let c = coboundary(&g, 2, &[0, fg]).unwrap();
            assert!(c.entries().iter().all(|&v| v == 0));
        }

        let g3: GroupRef = Arc::new(
            FiniteAbelianGroup::new(vec![2, 2, 2])
                .unwrap()
                .to_table()
                .unwrap(),
        );
        let f: Vec<u64> = (0..8).map(|i| (i as u64 * 3) % 4).collect();
        let mut f = f;
        f[0] = 0;
        let c = coboundary(&g3, 4, &f).unwrap();
        assert!(c.validate());
        assert!(c.is_trivial_class().unwrap());
    }

    #[test]
    fn add_scale_behave() {
        let a = z2_squared_nondegenerate();
        let t = Cocycle::trivial(a.group().clone(), 2).unwrap();
        assert_eq!(a.add(&t).unwrap().entries(), a.entries());
        assert!(a.scale(2).entries().iter().all(|&v| v == 0));
        // Modulus mismatch is refused.
        let t4 = Cocycle::trivial(a.group().clone(), 4).unwrap();
        assert!(a.add(&t4).is_err());
    }

    #[test]
    fn scaling_halves_the_period() {
        let c = z4_squared(1, 4);
        assert_eq!(c.period_abelian().unwrap().period, 4);
        assert_eq!(c.scale(2).period_abelian().unwrap().period, 2);
    }

    #[test]
    fn antisymmetrization_of_z2_squared() {
        let c = z2_squared_nondegenerate();
        let beta = c.antisymmetrize().unwrap();
        let g = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                let tx = g.tuple_of_index(x);
                let ty = g.tuple_of_index(y);
                let expected = (tx[0] * ty[1] + tx[1] * ty[0]) % 2; // ad - bc mod 2
                assert_eq!(beta[x * 4 + y], expected);
            }
        }
    }

    #[test]
    fn symmetric_cocycle_has_zero_beta() {
        let g = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        let b = BilinearForm::new(g, 2, vec![vec![1, 1], vec![1, 0]]).unwrap();
        let c = b.cocycle().unwrap();
        assert!(c.antisymmetrize().unwrap().iter().all(|&v| v == 0));
        assert_eq!(c.radical().unwrap().order(), 4);
    }

    #[test]
    fn radical_cases() {
        let g: GroupRef = Arc::new(
            FiniteAbelianGroup::new(vec![2, 2]).unwrap().to_table().unwrap(),
        );
        let t = Cocycle::trivial(g, 2).unwrap();
        assert_eq!(t.radical().unwrap().order(), 4);

        let nd = z2_squared_nondegenerate();
        assert_eq!(nd.radical().unwrap().members(), &[0]);

        // (Z/4)^2 with b12 = 2: radical is 2G = {(0,0),(0,2),(2,0),(2,2)}.
        let c = z4_squared(2, 4);
        let r = c.radical().unwrap();
        assert_eq!(r.members(), &[0, 2, 8, 10]);
        assert_eq!(16 / r.order(), 4);
    }

    #[test]
    fn periods_agree_between_routes() {
        let nd = z2_squared_nondegenerate();
        assert_eq!(nd.period_abelian().unwrap().period, 2);
        assert_eq!(nd.period_bruteforce().unwrap().period, 2);

        let c = z4_squared(1, 4);
        assert_eq!(c.period_bruteforce().unwrap().period, 4);

        let g: GroupRef = Arc::new(
            FiniteAbelianGroup::new(vec![2, 2]).unwrap().to_table().unwrap(),
        );
        let t = Cocycle::trivial(g, 2).unwrap();
        assert_eq!(t.period_abelian().unwrap().period, 1);
        assert_eq!(t.period_bruteforce().unwrap().period, 1);
        assert!(t.period_abelian().unwrap().is_trivial);
    }

    #[test]
    fn bruteforce_respects_cap() {
        let g = FiniteAbelianGroup::new(vec![128]).unwrap();
        let c = Cocycle::trivial(Arc::new(g.to_table().unwrap()), 2).unwrap();
        assert!(matches!(
            c.period_bruteforce(),
            Err(Error::ResourceLimit(_))
        ));
    }

    #[test]
    fn restriction_cases() {
        let c = z4_squared(1, 4);
        let g = c.group().clone();

        // Restrict to the trivial subgroup.
        let e = crate::group::subgroup_generated(&g, &[]).unwrap();
        let ce = c.restrict(&e).unwrap();
        assert_eq!(ce.group().order(), 1);
        assert!(ce.validate());

        // Restrict to the whole group: same table.
        let whole = crate::group::subgroup_generated(&g, &(0..16).collect::<Vec<_>>()).unwrap();
        let cw = c.restrict(&whole).unwrap();
        assert_eq!(cw.entries(), c.entries());

        // A proper subgroup: period divides the full period.
        let ab = FiniteAbelianGroup::new(vec![4, 4]).unwrap();
        let x = ab.index_of_tuple(&[1, 0]);
        let h = crate::group::subgroup_generated(&g, &[x]).unwrap();
        let ch = c.restrict(&h).unwrap();
        assert!(ch.validate());
        assert_eq!(4 % ch.period_abelian().unwrap().period, 0);

        // Non-closed member lists are refused.
        let bogus = Subgroup::from_members(g.clone(), vec![0, 1, 2]);
        assert!(c.restrict(&bogus).is_err());
    }

    #[test]
    fn class_equality_by_difference() {
        let c = z2_squared_nondegenerate();
        let f: Vec<u64> = vec![0, 1, 1, 0];
        let perturbed = c.add(&coboundary(c.group(), 2, &f).unwrap()).unwrap();
        assert!(c.same_class(&perturbed).unwrap());
        let t = Cocycle::trivial(c.group().clone(), 2).unwrap();
        assert!(!c.same_class(&t).unwrap());
    }

    #[test]
    fn random_forms_are_well_defined() {
        for seed in 0..20 {
            let g = FiniteAbelianGroup::new(vec![2, 4, 3]).unwrap();
            let b = BilinearForm::random(g, 12, seed).unwrap();
            let c = b.cocycle().unwrap();
            assert!(c.validate());
        }
    }
}
