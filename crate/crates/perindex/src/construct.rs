//! Construction of certified instances: for admissible targets (m, n),
//! meaning m divides n with the same prime divisors, build a finite abelian group
//! and cocycle whose class has period exactly m and representation index
//! exactly n, together with an explicit irreducible representation of
//! degree n witnessing the index.
//!
//! The building block for a prime power p^t is the group (Z/p^t)^2 with the
//! cocycle induced by the elementary bilinear form b_12 = N/p^t; its radical
//! is trivial, its class has period p^t, and the clock/shift pair generates
//! an irreducible representation of degree p^t. Orthogonal sums of blocks
//! multiply degrees and take lcms of periods, which realizes any admissible
//! pair.

use crate::arith;
use crate::cocycle::{BilinearForm, ClassInvariants, Cocycle, BRUTEFORCE_CAP};
use crate::error::{Error, Result};
use crate::group::{subgroup_generated, FiniteAbelianGroup, GroupRef};
use crate::twisted::{
    rep_index, roots_of_unity, CMat, DegreeProfile, ProjectiveRep, TwistedAlgebra,
};

/// Per-prime data of an admissible pair: m = prod p^r, n = prod p^s with
/// s = k*r + g, k >= 1 and 0 <= g < r.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeComponent {
    pub p: u64,
    pub r: u32,
    pub s: u32,
    pub k: u32,
    pub g: u32,
}

/// An elementary block (Z/p^t)^2 of the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub p: u64,
    pub t: u32,
}

impl Block {
    pub fn side(&self) -> u64 {
        arith::pow_u64(self.p, self.t)
    }
}

/// A constructed group-and-cocycle pair targeting period m and index n.
#[derive(Debug, Clone)]
pub struct PeriodIndexInstance {
    pub m: u64,
    pub n: u64,
    pub group: FiniteAbelianGroup,
    pub table: GroupRef,
    pub bilinear: BilinearForm,
    pub cocycle: Cocycle,
    pub components: Vec<PrimeComponent>,
    pub blocks: Vec<Block>,
}

/// Decompose an admissible pair into per-prime components.
pub fn admissible_components(m: u64, n: u64) -> Result<Vec<PrimeComponent>> {
    if m == 0 || n == 0 {
        return Err(Error::Inadmissible("period and index must be >= 1".into()));
    }
    if n % m != 0 {
        let offender = arith::factorize(m)
            .into_iter()
            .map(|(p, _)| p)
            .find(|&p| {
                let vm = arith::factorize(m)
                    .iter()
                    .find(|&&(q, _)| q == p)
                    .map(|&(_, e)| e)
                    .unwrap_or(0);
                let vn = arith::factorize(n)
                    .iter()
                    .find(|&&(q, _)| q == p)
                    .map(|&(_, e)| e)
                    .unwrap_or(0);
                vn < vm
            })
            .unwrap_or(0);
        return Err(Error::Inadmissible(format!(
            "period {m} does not divide index {n} (fails at prime {offender})"
        )));
    }
    let fm = arith::factorize(m);
    let fn_ = arith::factorize(n);
    for &(p, _) in &fn_ {
        if !fm.iter().any(|&(q, _)| q == p) {
            return Err(Error::Inadmissible(format!(
                "prime {p} divides the index but not the period"
            )));
        }
    }
    // m | n already implies every prime of m divides n.
    let mut components = Vec::new();
    for &(p, r) in &fm {
        let s = fn_
            .iter()
            .find(|&&(q, _)| q == p)
            .map(|&(_, e)| e)
            .expect("prime of m divides n");
        let k = s / r;
        let g = s % r;
        components.push(PrimeComponent { p, r, s, k, g });
    }
    Ok(components)
}

/// The elementary cocycle on (Z/p^t)^2: induced by the bilinear form with
/// b_12 = N/p^t and zeros elsewhere. Its radical is trivial and its class
/// has period p^t.
pub fn symplectic_cocycle(t: u32, p: u64, modulus: u64) -> Result<(FiniteAbelianGroup, Cocycle)> {
    let d = arith::pow_u64(p, t);
    if modulus == 0 || modulus % d != 0 {
        return Err(Error::InvalidInput(format!(
            "modulus {modulus} is not divisible by p^t = {d}"
        )));
    }
    let group = FiniteAbelianGroup::new(vec![d, d])?;
    let form = BilinearForm::new(
        group.clone(),
        modulus,
        vec![vec![0, modulus / d], vec![0, 0]],
    )?;
    let cocycle = form.cocycle()?;
    Ok((group, cocycle))
}

/// Build the instance for an admissible pair: one block (Z/p^r)^2 per unit
/// of k plus a (Z/p^g)^2 block when g > 0, per prime; the cocycle is the
/// orthogonal sum of the elementary forms over the common modulus
/// N = lcm of the block sides.
pub fn period_index_instance(m: u64, n: u64) -> Result<PeriodIndexInstance> {
    let components = admissible_components(m, n)?;
    let mut blocks = Vec::new();
    for c in &components {
        for _ in 0..c.k {
            blocks.push(Block { p: c.p, t: c.r });
        }
        if c.g > 0 {
            blocks.push(Block { p: c.p, t: c.g });
        }
    }
    let modulus = blocks.iter().fold(1u64, |acc, b| arith::lcm(acc, b.side()));

    let mut factors = Vec::new();
    for b in &blocks {
        factors.push(b.side());
        factors.push(b.side());
    }
    let group = FiniteAbelianGroup::new(factors)?;
    let rank = group.rank();
    let mut matrix = vec![vec![0u64; rank]; rank];
    for (i, b) in blocks.iter().enumerate() {
        matrix[2 * i][2 * i + 1] = modulus / b.side();
    }
    let bilinear = BilinearForm::new(group.clone(), modulus, matrix)?;
    let expected_order = (n as u128) * (n as u128);
    if group.order() as u128 != expected_order {
        return Err(Error::InternalConsistency(format!(
            "constructed group has order {} but n^2 = {expected_order}",
            group.order()
        )));
    }
    let cocycle = bilinear.cocycle()?;
    let table = cocycle.group().clone();
    Ok(PeriodIndexInstance {
        m,
        n,
        group,
        table,
        bilinear,
        cocycle,
        components,
        blocks,
    })
}

/// The degree-d irreducible representation of the elementary cocycle on
/// (Z/p^t)^2, d = p^t: the first generator maps to the cyclic shift matrix,
/// the second to the clock matrix diag(z^j) with z = w^{N/d}, and a general
/// element (a,b) to z^{-ab} S^a C^b (shift power first). All entries are
/// exact roots of unity.
pub fn heisenberg_rep(t: u32, p: u64, cocycle: &Cocycle) -> Result<ProjectiveRep> {
    let d = arith::pow_u64(p, t);
    let modulus = cocycle.modulus();
    let (_group, expected) = symplectic_cocycle(t, p, modulus)?;
    if cocycle.group().order() as u64 != d * d || cocycle.entries() != expected.entries() {
        return Err(Error::InvalidInput(
            "cocycle is not the elementary bilinear cocycle on (Z/p^t)^2".into(),
        ));
    }
    let matrices = heisenberg_block_matrices(d, modulus);
    ProjectiveRep::new(cocycle.clone(), matrices)
}

/// Matrices of the elementary block representation, indexed by a*d + b.
fn heisenberg_block_matrices(d: u64, modulus: u64) -> Vec<CMat> {
    let omega = roots_of_unity(modulus);
    let scale = modulus / d;
    let du = d as usize;
    let mut out = Vec::with_capacity((d * d) as usize);
    for a in 0..d {
        for b in 0..d {
            let mut mat = CMat::zeros(du, du);
            for i in 0..d {
                let j = (i + a) % d;
                // z^{b*j - a*b} with z = w^{scale}.
                let e = ((b * j) % d + d - (a * b) % d) % d;
                mat[(i as usize, j as usize)] = omega[(e * scale % modulus) as usize];
            }
            out.push(mat);
        }
    }
    out
}

/// The tensor product of the per-block representations: an irreducible
/// representation of degree n for the instance cocycle.
pub fn instance_rep(instance: &PeriodIndexInstance) -> Result<ProjectiveRep> {
    let modulus = instance.cocycle.modulus();
    let block_mats: Vec<Vec<CMat>> = instance
        .blocks
        .iter()
        .map(|b| heisenberg_block_matrices(b.side(), modulus))
        .collect();
    let n = instance.table.order();
    let mut matrices = Vec::with_capacity(n);
    for idx in 0..n {
        let tuple = instance.group.tuple_of_index(idx);
        let mut acc = CMat::identity(1, 1);
        for (bi, block) in instance.blocks.iter().enumerate() {
            let a = tuple[2 * bi];
            let b = tuple[2 * bi + 1];
            let m = &block_mats[bi][(a * block.side() + b) as usize];
            acc = acc.kronecker(m);
        }
        matrices.push(acc);
    }
    ProjectiveRep::new(instance.cocycle.clone(), matrices)
}

/// One named pass/fail entry of a certificate.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

/// A rank-2 subgroup witnessing the period lower bound at one prime: the
/// restriction of the cocycle to H = <x, y> has period p^r.
#[derive(Debug, Clone)]
pub struct RestrictionWitness {
    pub prime: u64,
    pub expected_period: u64,
    pub x: usize,
    pub y: usize,
    pub subgroup_order: usize,
    pub restricted_period: u64,
}

/// Outcome of building and checking one instance.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub instance: PeriodIndexInstance,
    pub seed: u64,
    pub computed_period: Option<u64>,
    pub computed_index: Option<u64>,
    pub degree_profile: Option<DegreeProfile>,
    pub checks: Vec<Check>,
    pub witnesses: Vec<RestrictionWitness>,
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

/// Number of decomposition attempts (seed, seed+1, ...) before giving up.
const DECOMPOSE_RETRIES: u64 = 8;

pub(crate) fn decompose_with_retries(
    algebra: &TwistedAlgebra,
    seed: u64,
) -> Result<DegreeProfile> {
    let mut last = None;
    for attempt in 0..DECOMPOSE_RETRIES {
        match algebra.decompose_degrees(seed.wrapping_add(attempt)) {
            Ok(profile) => return Ok(profile),
            Err(Error::IllConditioned(msg)) => last = Some(msg),
            Err(other) => return Err(other),
        }
    }
    Err(Error::IllConditioned(last.unwrap_or_default()))
}

/// Build the instance for (m, n) and run the full battery of checks,
/// returning a certificate that enumerates every outcome. Sub-check failures
/// are recorded, not raised.
pub fn certify(m: u64, n: u64, seed: u64) -> Result<Certificate> {
    let instance = period_index_instance(m, n)?;
    let mut checks = Vec::new();
    let mut witnesses = Vec::new();
    let order = instance.table.order();

    checks.push(Check::new(
        "group_order_is_index_squared",
        order as u64 == n * n,
        format!("|G| = {order}, n^2 = {}", n * n),
    ));

    let cocycle_ok = instance.cocycle.check();
    checks.push(Check::new(
        "cocycle_valid",
        cocycle_ok.is_ok(),
        match &cocycle_ok {
            Ok(()) => "normalization and cocycle identity hold".into(),
            Err(e) => e.to_string(),
        },
    ));

    let computed_period = match instance.cocycle.period_abelian() {
        Ok(ClassInvariants { period, .. }) => {
            checks.push(Check::new(
                "period_matches",
                period == m,
                format!("computed period {period}, target {m}"),
            ));
            Some(period)
        }
        Err(e) => {
            checks.push(Check::new("period_matches", false, e.to_string()));
            None
        }
    };

    if order <= BRUTEFORCE_CAP {
        match instance.cocycle.period_bruteforce() {
            Ok(ClassInvariants { period, .. }) => checks.push(Check::new(
                "period_bruteforce_matches",
                period == m,
                format!("brute-force period {period}, target {m}"),
            )),
            Err(e) => checks.push(Check::new("period_bruteforce_matches", false, e.to_string())),
        }
    }

    match instance.cocycle.radical() {
        Ok(radical) => checks.push(Check::new(
            "radical_trivial",
            radical.order() == 1,
            format!("radical has order {}", radical.order()),
        )),
        Err(e) => checks.push(Check::new("radical_trivial", false, e.to_string())),
    }

    let algebra = TwistedAlgebra::new(instance.cocycle.clone());
    let regular_count = match algebra.alpha_regular_classes() {
        Ok(classes) => Some(classes.len()),
        Err(e) => {
            checks.push(Check::new("regular_classes", false, e.to_string()));
            None
        }
    };

    let (degree_profile, computed_index) = match decompose_with_retries(&algebra, seed) {
        Ok(profile) => {
            let index = rep_index(&profile);
            checks.push(Check::new(
                "degree_profile_single_block",
                profile.entries() == [(n, 1)],
                format!("profile {:?}, expected [({n}, 1)]", profile.entries()),
            ));
            checks.push(Check::new(
                "index_matches",
                index == n,
                format!("computed index {index}, target {n}"),
            ));
            checks.push(Check::new(
                "wedderburn_dimension",
                profile.sum_of_squares() == order as u64,
                format!(
                    "sum of degree squares {} vs |G| = {order}",
                    profile.sum_of_squares()
                ),
            ));
            if let Some(rc) = regular_count {
                checks.push(Check::new(
                    "wedderburn_class_count",
                    profile.irreducible_count() == rc,
                    format!(
                        "{} irreducibles vs {rc} regular classes",
                        profile.irreducible_count()
                    ),
                ));
            }
            (Some(profile), Some(index))
        }
        Err(e) => {
            checks.push(Check::new("degree_profile_single_block", false, e.to_string()));
            (None, None)
        }
    };

    if let (Some(p), Some(i)) = (computed_period, computed_index) {
        checks.push(Check::new(
            "period_divides_index",
            i % p == 0,
            format!("period {p}, index {i}"),
        ));
        checks.push(Check::new(
            "prime_support_equal",
            arith::prime_support(p) == arith::prime_support(i),
            format!(
                "period primes {:?}, index primes {:?}",
                arith::prime_support(p),
                arith::prime_support(i)
            ),
        ));
    }

    match instance_rep(&instance) {
        Ok(rep) => {
            let law_error = rep.law_error();
            let identity_error = rep.identity_error();
            checks.push(Check::new(
                "witness_rep_valid",
                rep.verify(),
                format!("max law error {law_error:.3e}, identity error {identity_error:.3e}"),
            ));
            checks.push(Check::new(
                "witness_rep_degree",
                rep.degree() as u64 == n,
                format!("witness degree {}, target {n}", rep.degree()),
            ));
            match rep.commutant_dimension() {
                Ok(dim) => checks.push(Check::new(
                    "witness_rep_irreducible",
                    dim == 1,
                    format!("commutant dimension {dim}"),
                )),
                Err(e) => checks.push(Check::new("witness_rep_irreducible", false, e.to_string())),
            }
        }
        Err(e) => checks.push(Check::new("witness_rep_valid", false, e.to_string())),
    }

    for component in &instance.components {
        let target = arith::pow_u64(component.p, component.r);
        match restriction_witness(&instance, component.p, target) {
            Some(w) => {
                checks.push(Check::new(
                    &format!("restriction_period_p{}", component.p),
                    w.restricted_period == target,
                    format!(
                        "H = <{}, {}> of order {}, restricted period {}, target {target}",
                        w.x, w.y, w.subgroup_order, w.restricted_period
                    ),
                ));
                witnesses.push(w);
            }
            None => checks.push(Check::new(
                &format!("restriction_period_p{}", component.p),
                false,
                format!("no rank-2 subgroup with restricted period {target} found"),
            )),
        }
    }

    Ok(Certificate {
        instance,
        seed,
        computed_period,
        computed_index,
        degree_profile,
        checks,
        witnesses,
    })
}

/// Search for x of order p^r and y with b(p^{r-1} x, y) != 0 such that the
/// restriction to <x, y> has period exactly p^r.
fn restriction_witness(
    instance: &PeriodIndexInstance,
    p: u64,
    target: u64,
) -> Option<RestrictionWitness> {
    let group = &instance.group;
    let table = &instance.table;
    let cocycle = &instance.cocycle;
    let n = table.order();
    let beta = cocycle.antisymmetrize().ok()?;
    for x in 1..n {
        if group.element_order(x) != target {
            continue;
        }
        let marker = group.scale_element(x, target / p);
        for y in 1..n {
            if beta[marker * n + y] == 0 {
                continue;
            }
            let sub = subgroup_generated(table, &[x, y]).ok()?;
            let restricted = cocycle.restrict(&sub).ok()?;
            let period = restricted.period_abelian().ok()?.period;
            if period == target {
                return Some(RestrictionWitness {
                    prime: p,
                    expected_period: target,
                    x,
                    y,
                    subgroup_order: sub.order(),
                    restricted_period: period,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility_rules() {
        assert!(admissible_components(1, 1).unwrap().is_empty());
        assert!(admissible_components(2, 3).is_err());
        assert!(admissible_components(4, 2).is_err());
        assert!(admissible_components(2, 6).is_err());
        let c = admissible_components(2, 4).unwrap();
        assert_eq!(c, vec![PrimeComponent { p: 2, r: 1, s: 2, k: 2, g: 0 }]);
        let c = admissible_components(12, 24).unwrap();
        assert_eq!(
            c,
            vec![
                PrimeComponent { p: 2, r: 2, s: 3, k: 1, g: 1 },
                PrimeComponent { p: 3, r: 1, s: 1, k: 1, g: 0 },
            ]
        );
    }

    #[test]
    fn symplectic_block_properties() {
        let (_, c) = symplectic_cocycle(1, 2, 2).unwrap();
        assert_eq!(c.radical().unwrap().order(), 1);
        assert_eq!(c.period_abelian().unwrap().period, 2);

        let (_, c) = symplectic_cocycle(1, 3, 3).unwrap();
        assert_eq!(c.period_abelian().unwrap().period, 3);
        let alg = TwistedAlgebra::new(c);
        let profile = alg.decompose_degrees(0).unwrap();
        assert_eq!(profile.entries(), &[(3, 1)]);
        assert_eq!(profile.sum_of_squares(), 9);

        // t = 0: trivial group, trivial cocycle, one-dimensional witness.
        let (g, c) = symplectic_cocycle(0, 5, 1).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(c.period_abelian().unwrap().period, 1);
        let rep = heisenberg_rep(0, 5, &c).unwrap();
        assert_eq!(rep.degree(), 1);
        assert!(rep.verify());

        assert!(symplectic_cocycle(2, 2, 2).is_err());
    }

    #[test]
    fn instance_shapes() {
        let inst = period_index_instance(2, 4).unwrap();
        assert_eq!(inst.group.factors(), &[2, 2, 2, 2]);
        assert_eq!(inst.cocycle.modulus(), 2);
        assert_eq!(inst.cocycle.period_abelian().unwrap().period, 2);

        let inst = period_index_instance(6, 12).unwrap();
        assert_eq!(inst.group.factors(), &[2, 2, 2, 2, 3, 3]);
        assert_eq!(inst.cocycle.modulus(), 6);
        assert_eq!(inst.group.order(), 144);
        assert_eq!(inst.cocycle.period_abelian().unwrap().period, 6);

        let inst = period_index_instance(1, 1).unwrap();
        assert_eq!(inst.group.order(), 1);
    }

    #[test]
    fn pauli_pair_anticommutes() {
        let (_, c) = symplectic_cocycle(1, 2, 2).unwrap();
        let rep = heisenberg_rep(1, 2, &c).unwrap();
        assert_eq!(rep.degree(), 2);
        // Generators: (1,0) -> index 2 (shift), (0,1) -> index 1 (clock).
        let x = rep.matrix(2).clone();
        let z = rep.matrix(1).clone();
        let anti = &x * &z + &z * &x;
        assert!(anti.iter().all(|v| v.norm() < 1e-12));
        assert!(rep.verify());
    }

    #[test]
    fn clock_shift_rep_is_exact_for_z3() {
        let (_, c) = symplectic_cocycle(1, 3, 3).unwrap();
        let rep = heisenberg_rep(1, 3, &c).unwrap();
        assert_eq!(rep.degree(), 3);
        assert!(rep.law_error() < 1e-12);
        assert!(rep.is_irreducible().unwrap());
    }

    #[test]
    fn heisenberg_rejects_other_cocycles() {
        let (_, c) = symplectic_cocycle(1, 2, 2).unwrap();
        let trivial = Cocycle::trivial(c.group().clone(), 2).unwrap();
        assert!(heisenberg_rep(1, 2, &trivial).is_err());
    }

    #[test]
    fn rep_fails_against_wrong_class() {
        // Matrices of the elementary cocycle checked against the trivial
        // class must violate the law for some pair.
        let (_, c) = symplectic_cocycle(1, 2, 2).unwrap();
        let rep = heisenberg_rep(1, 2, &c).unwrap();
        let trivial = Cocycle::trivial(c.group().clone(), 2).unwrap();
        let wrong = ProjectiveRep::new(trivial, rep.matrices().to_vec()).unwrap();
        assert!(!wrong.verify());
    }

    #[test]
    fn certify_small_instances() {
        let cert = certify(2, 2, 0).unwrap();
        assert!(cert.is_valid(), "failing checks: {:?}", cert
            .checks
            .iter()
            .filter(|c| !c.passed)
            .collect::<Vec<_>>());
        assert_eq!(cert.computed_period, Some(2));
        assert_eq!(cert.computed_index, Some(2));
        assert_eq!(
            cert.degree_profile.as_ref().unwrap().entries(),
            &[(2, 1)]
        );

        let cert = certify(2, 4, 0).unwrap();
        assert!(cert.is_valid());
        assert_eq!(cert.computed_index, Some(4));
        assert_eq!(
            cert.degree_profile.as_ref().unwrap().entries(),
            &[(4, 1)]
        );

        let cert = certify(1, 1, 0).unwrap();
        assert!(cert.is_valid());
    }

    #[test]
    fn certify_rejects_inadmissible_pairs() {
        assert!(matches!(certify(2, 3, 0), Err(Error::Inadmissible(_))));
    }
}
