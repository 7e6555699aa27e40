//! The twisted group algebra of a finite group and a Z/N-valued 2-cocycle:
//! basis elements u_x with product u_x u_y = w^{a(x,y)} u_{xy}.
//!
//! Irreducible degrees are extracted numerically (seeded random self-adjoint
//! central element, eigenvalue clustering) and certified by two exact integer
//! identities: the degree squares sum to |G| and the block count equals the
//! number of regular conjugacy classes. The center itself is computed
//! exactly: the commutant constraints tie coefficients along conjugation
//! orbits with root-of-unity phases, so each surviving orbit contributes one
//! basis vector with integer phase exponents.

use std::f64::consts::TAU;

use nalgebra::DMatrix;
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith;
use crate::cocycle::Cocycle;
use crate::error::{Error, Result};
use crate::group::DEFAULT_GROUP_CAP;

pub type Complex64 = Complex<f64>;
pub type CMat = DMatrix<Complex64>;

/// Eigenvalue clustering and rank tolerance.
pub const TOL_EIG: f64 = 1e-8;
/// Entrywise tolerance for the twisted multiplication law.
pub const TOL_REP: f64 = 1e-10;

/// All N-th roots of unity as w^k for k = 0..N.
pub fn roots_of_unity(n: u64) -> Vec<Complex64> {
    (0..n)
        .map(|k| Complex64::from_polar(1.0, TAU * k as f64 / n as f64))
        .collect()
}

/// A central basis vector of the twisted group algebra: supported on one
/// conjugacy class, with coefficient w^{exponent} on each member.
#[derive(Debug, Clone)]
pub struct CentralBasisVector {
    pub class_rep: usize,
    /// (element index, exponent of w) pairs, one per class member.
    pub support: Vec<(usize, u64)>,
}

/// The twisted group algebra C^a[G].
#[derive(Debug, Clone)]
pub struct TwistedAlgebra {
    cocycle: Cocycle,
}

impl TwistedAlgebra {
    pub fn new(cocycle: Cocycle) -> Self {
        TwistedAlgebra { cocycle }
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    pub fn dimension(&self) -> usize {
        self.cocycle.group().order()
    }

    /// Left multiplication by u_x in the basis {u_y}: the matrix with entry
    /// w^{a(x,y)} at (xy, y).
    pub fn left_multiplier(&self, x: usize) -> CMat {
        let g = self.cocycle.group();
        let n = g.order();
        let omega = roots_of_unity(self.cocycle.modulus());
        let mut m = CMat::zeros(n, n);
        for y in 0..n {
            m[(g.mul(x, y), y)] = omega[self.cocycle.value(x, y) as usize];
        }
        m
    }

    /// All left multiplication operators. Dense |G| x |G| matrices, one per
    /// element; intended for small groups.
    pub fn regular_representation(&self) -> Result<Vec<CMat>> {
        let n = self.dimension();
        if n > DEFAULT_GROUP_CAP {
            return Err(Error::ResourceLimit(format!(
                "regular representation needs |G| <= {DEFAULT_GROUP_CAP}, got {n}"
            )));
        }
        Ok((0..n).map(|x| self.left_multiplier(x)).collect())
    }

    /// Conjugacy classes whose elements x satisfy a(x,g) = a(g,x) for every
    /// g centralizing x. Regularity is verified to be constant on each class
    /// rather than assumed.
    pub fn alpha_regular_classes(&self) -> Result<Vec<Vec<usize>>> {
        let g = self.cocycle.group();
        let classes = g.conjugacy_classes();
        let mut regular_classes = Vec::new();
        for class in classes {
            let flags: Vec<bool> = class
                .iter()
                .map(|&x| {
                    g.centralizer(x)
                        .into_iter()
                        .all(|c| self.cocycle.value(x, c) == self.cocycle.value(c, x))
                })
                .collect();
            if flags.iter().any(|&f| f != flags[0]) {
                return Err(Error::InternalConsistency(format!(
                    "regularity is not constant on the class of {}; \
                     the cocycle does not satisfy the cocycle identity",
                    class[0]
                )));
            }
            if flags[0] {
                regular_classes.push(class);
            }
        }
        Ok(regular_classes)
    }

    /// Exact basis of the center. A central element sum c_y u_y must satisfy
    /// c_b = c_a w^{a(a,x) - a(x,b)} for b = x^{-1} a x; propagating these
    /// phases along each conjugacy class either determines one basis vector
    /// per class or forces the class coefficients to vanish.
    pub fn center_basis(&self) -> Result<Vec<CentralBasisVector>> {
        let g = self.cocycle.group();
        let n = g.order();
        let m = self.cocycle.modulus();
        let classes = g.conjugacy_classes();
        let mut basis = Vec::new();
        let mut phase = vec![None::<u64>; n];
        for class in &classes {
            for &e in class {
                phase[e] = None;
            }
            let rep = class[0];
            phase[rep] = Some(0);
            let mut stack = vec![rep];
            let mut alive = true;
            'class: while let Some(a) = stack.pop() {
                let pa = phase[a].unwrap();
                for x in 0..n {
                    let b = g.mul(g.inv(x), g.mul(a, x));
                    let pb =
                        (pa + self.cocycle.value(a, x) + m - self.cocycle.value(x, b)) % m;
                    match phase[b] {
                        None => {
                            phase[b] = Some(pb);
                            stack.push(b);
                        }
                        Some(old) if old != pb => {
                            alive = false;
                            break 'class;
                        }
                        _ => {}
                    }
                }
            }
            if alive {
                let support = class.iter().map(|&e| (e, phase[e].unwrap())).collect();
                basis.push(CentralBasisVector {
                    class_rep: rep,
                    support,
                });
            }
        }
        Ok(basis)
    }

    /// Numerical block decomposition: draw a seeded random self-adjoint
    /// central element, cluster the eigenvalues of its left multiplication
    /// operator, and read one irreducible degree d off each d^2-dimensional
    /// block. The result is certified against the exact identities.
    pub fn decompose_degrees(&self, seed: u64) -> Result<DegreeProfile> {
        self.decompose_degrees_with(seed, TOL_EIG)
    }

    pub fn decompose_degrees_with(&self, seed: u64, tol_eig: f64) -> Result<DegreeProfile> {
        let g = self.cocycle.group();
        let n = g.order();
        if n > DEFAULT_GROUP_CAP {
            return Err(Error::ResourceLimit(format!(
                "decomposition needs |G| <= {DEFAULT_GROUP_CAP}, got {n}"
            )));
        }
        let center = self.center_basis()?;
        let regular = self.alpha_regular_classes()?;
        if center.len() != regular.len() {
            return Err(Error::InternalConsistency(format!(
                "center dimension {} does not match the regular class count {}",
                center.len(),
                regular.len()
            )));
        }

        // Random central element with per-class complex coefficients.
        let omega = roots_of_unity(self.cocycle.modulus());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut coeff = vec![Complex64::new(0.0, 0.0); n];
        for vector in &center {
            let c = Complex64::new(rng.gen_range(-1.0..=1.0), rng.gen_range(-1.0..=1.0));
            for &(e, exp) in &vector.support {
                coeff[e] = c * omega[exp as usize];
            }
        }

        // H = (L_z + L_z^*) / 2 acts as a real scalar on each simple block.
        let mut lz = CMat::zeros(n, n);
        for x in 0..n {
            if coeff[x] == Complex64::new(0.0, 0.0) {
                continue;
            }
            for y in 0..n {
                lz[(g.mul(x, y), y)] += coeff[x] * omega[self.cocycle.value(x, y) as usize];
            }
        }
        let h = (&lz + lz.adjoint()).scale(0.5);
        let mut eigen: Vec<f64> = h.symmetric_eigenvalues().iter().copied().collect();
        eigen.sort_by(|a, b| a.partial_cmp(b).unwrap());

        let mut cluster_sizes = Vec::new();
        let mut current = 1usize;
        for i in 1..eigen.len() {
            if eigen[i] - eigen[i - 1] > tol_eig {
                cluster_sizes.push(current);
                current = 1;
            } else {
                current += 1;
            }
        }
        cluster_sizes.push(current);

        if cluster_sizes.len() != center.len() {
            return Err(Error::IllConditioned(format!(
                "seed {seed} produced {} eigenvalue clusters for {} central blocks; \
                 retry with a different seed",
                cluster_sizes.len(),
                center.len()
            )));
        }
        let mut degrees = Vec::with_capacity(cluster_sizes.len());
        for size in cluster_sizes {
            match arith::isqrt_exact(size as u64) {
                Some(d) => degrees.push(d),
                None => {
                    return Err(Error::InternalConsistency(format!(
                        "central block of dimension {size} is not a perfect square"
                    )))
                }
            }
        }
        let profile = DegreeProfile::from_degrees(degrees);
        if profile.sum_of_squares() != n as u64 {
            return Err(Error::InternalConsistency(format!(
                "degree squares sum to {} but |G| = {n}",
                profile.sum_of_squares()
            )));
        }
        if profile.irreducible_count() != regular.len() {
            return Err(Error::InternalConsistency(format!(
                "found {} irreducibles but {} regular classes",
                profile.irreducible_count(),
                regular.len()
            )));
        }
        Ok(profile)
    }
}

/// Multiset of irreducible degrees with multiplicities, ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    entries: Vec<(u64, usize)>,
}

impl DegreeProfile {
    pub fn from_degrees(mut degrees: Vec<u64>) -> Self {
        degrees.sort_unstable();
        let mut entries: Vec<(u64, usize)> = Vec::new();
        for d in degrees {
            match entries.last_mut() {
                Some((deg, mult)) if *deg == d => *mult += 1,
                _ => entries.push((d, 1)),
            }
        }
        DegreeProfile { entries }
    }

    /// (degree, multiplicity) pairs, ascending by degree.
    pub fn entries(&self) -> &[(u64, usize)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn sum_of_squares(&self) -> u64 {
        self.entries
            .iter()
            .map(|&(d, m)| d * d * m as u64)
            .sum()
    }

    /// Total number of irreducibles (with multiplicity).
    pub fn irreducible_count(&self) -> usize {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    /// Some(d) when every irreducible has the same degree d.
    pub fn common_degree(&self) -> Option<u64> {
        if self.entries.len() == 1 {
            Some(self.entries[0].0)
        } else {
            None
        }
    }
}

/// The representation index: gcd of the irreducible degrees.
pub fn rep_index(profile: &DegreeProfile) -> u64 {
    profile
        .entries
        .iter()
        .fold(0, |acc, &(d, _)| arith::gcd(acc, d))
}

/// A degree-d projective representation: one unitary matrix per group
/// element, satisfying pi(x) pi(y) = w^{a(x,y)} pi(xy).
#[derive(Debug, Clone)]
pub struct ProjectiveRep {
    cocycle: Cocycle,
    degree: usize,
    matrices: Vec<CMat>,
}

impl ProjectiveRep {
    pub fn new(cocycle: Cocycle, matrices: Vec<CMat>) -> Result<Self> {
        let n = cocycle.group().order();
        if matrices.len() != n {
            return Err(Error::InvalidInput(format!(
                "expected {n} matrices, got {}",
                matrices.len()
            )));
        }
        let degree = matrices
            .first()
            .map(|m| m.nrows())
            .ok_or_else(|| Error::InvalidInput("empty matrix family".into()))?;
        if degree == 0 {
            return Err(Error::InvalidInput("matrices must be nonempty".into()));
        }
        for m in &matrices {
            if m.nrows() != degree || m.ncols() != degree {
                return Err(Error::InvalidInput(format!(
                    "inconsistent matrix dimensions: expected {degree} x {degree}"
                )));
            }
        }
        Ok(ProjectiveRep {
            cocycle,
            degree,
            matrices,
        })
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.cocycle
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrices(&self) -> &[CMat] {
        &self.matrices
    }

    pub fn matrix(&self, x: usize) -> &CMat {
        &self.matrices[x]
    }

    /// Max entrywise deviation of pi(e) from the identity.
    pub fn identity_error(&self) -> f64 {
        let d = self.degree;
        let mut err: f64 = 0.0;
        for i in 0..d {
            for j in 0..d {
                let expect = if i == j {
                    Complex64::new(1.0, 0.0)
                } else {
                    Complex64::new(0.0, 0.0)
                };
                err = err.max((self.matrices[0][(i, j)] - expect).norm());
            }
        }
        err
    }

    /// Max entrywise deviation from the twisted law over all pairs.
    pub fn law_error(&self) -> f64 {
        let g = self.cocycle.group();
        let n = g.order();
        let omega = roots_of_unity(self.cocycle.modulus());
        (0..n)
            .into_par_iter()
            .map(|x| {
                let mut local: f64 = 0.0;
                for y in 0..n {
                    let product = self.matrix(x) * self.matrix(y);
                    let twisted =
                        self.matrix(g.mul(x, y)) * omega[self.cocycle.value(x, y) as usize];
                    let diff = product - twisted;
                    local = local.max(diff.iter().fold(0.0f64, |a, c| a.max(c.norm())));
                }
                local
            })
            .reduce(|| 0.0, f64::max)
    }

    pub fn verify(&self) -> bool {
        self.verify_with(TOL_REP)
    }

    /// True iff the twisted law holds entrywise within `tol` and pi(e) = I.
    pub fn verify_with(&self, tol: f64) -> bool {
        self.identity_error() <= tol && self.law_error() <= tol
    }

    /// Dimension of the commutant {M : M pi(x) = pi(x) M for all x},
    /// computed as the rank of the averaged conjugation projector
    /// (1/|G|) sum_x kron(pi(x), conj(pi(x))). The scalar ambiguity of a
    /// projective representation cancels in each summand.
    pub fn commutant_dimension(&self) -> Result<usize> {
        self.commutant_dimension_with(TOL_EIG)
    }

    pub fn commutant_dimension_with(&self, tol: f64) -> Result<usize> {
        if !self.verify() {
            return Err(Error::InvalidInput(
                "matrices do not satisfy the twisted law for this cocycle".into(),
            ));
        }
        let n = self.cocycle.group().order();
        let d = self.degree;
        let dd = d * d;
        // Fixed chunking keeps the floating-point summation order, and with
        // it the output, independent of the thread schedule.
        let chunk = 32;
        let partials: Vec<CMat> = (0..n.div_ceil(chunk))
            .into_par_iter()
            .map(|c| {
                let mut acc = CMat::zeros(dd, dd);
                for x in c * chunk..((c + 1) * chunk).min(n) {
                    acc += self.matrix(x).kronecker(&self.matrix(x).conjugate());
                }
                acc
            })
            .collect();
        let mut phi = CMat::zeros(dd, dd);
        for p in partials {
            phi += p;
        }
        phi.unscale_mut(n as f64);
        let phi = (&phi + phi.adjoint()).scale(0.5);
        let eigen = phi.symmetric_eigenvalues();
        for &ev in eigen.iter() {
            if ev > tol.sqrt() && (ev - 1.0).abs() > tol.sqrt() {
                return Err(Error::IllConditioned(format!(
                    "projector eigenvalue {ev} is neither 0 nor 1"
                )));
            }
        }
        Ok(eigen.iter().filter(|&&ev| ev > 0.5).count())
    }

    /// True iff the commutant is one-dimensional.
    pub fn is_irreducible(&self) -> Result<bool> {
        Ok(self.commutant_dimension()? == 1)
    }

    /// Block-diagonal direct sum with another representation of the same
    /// cocycle.
    pub fn direct_sum(&self, other: &ProjectiveRep) -> Result<ProjectiveRep> {
        if self.cocycle.modulus() != other.cocycle.modulus()
            || self.cocycle.entries() != other.cocycle.entries()
        {
            return Err(Error::InvalidInput(
                "direct sum requires the same cocycle".into(),
            ));
        }
        let d = self.degree + other.degree;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| {
                let mut m = CMat::zeros(d, d);
                m.view_mut((0, 0), (self.degree, self.degree)).copy_from(a);
                m.view_mut(
                    (self.degree, self.degree),
                    (other.degree, other.degree),
                )
                .copy_from(b);
                m
            })
            .collect();
        ProjectiveRep::new(self.cocycle.clone(), matrices)
    }
}
