//! Integer matrix diagonalization by unimodular row/column operations,
//! used to decide solvability of `A x = b (mod m)` over the integers.
//!
//! Row operations are mirrored onto the right-hand sides; column operations
//! only reparametrize the unknowns and need no tracking.

/// Dense row-major integer matrix.
#[derive(Debug, Clone)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<i128>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> i128 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn add_to(&mut self, r: usize, c: usize, v: i128) {
        self.data[r * self.cols + c] += v;
    }
}

/// Result of diagonalizing `A` while applying the same row operations to a
/// set of right-hand-side columns.
#[derive(Debug)]
pub struct DiagonalizedSystem {
    rows: usize,
    cols: usize,
    /// Diagonal entries `a[i][i]` for `i < cols` after elimination.
    diag: Vec<i128>,
    /// Transformed right-hand sides, one Vec per original column.
    rhs: Vec<Vec<i128>>,
}

impl DiagonalizedSystem {
    /// Whether `A x = b (mod m)` is solvable for the `idx`-th right-hand side.
    pub fn solvable_mod(&self, idx: usize, modulus: i128) -> bool {
        assert!(modulus >= 1);
        let b = &self.rhs[idx];
        for i in 0..self.rows {
            let c = b[i].rem_euclid(modulus);
            if i < self.cols {
                // diag[i]*x == c (mod m) has a solution iff gcd(diag[i], m) | c.
                let s = (self.diag[i].unsigned_abs() as i128).rem_euclid(modulus);
                let g = if s == 0 { modulus } else { gcd_i128(s, modulus) };
                if c % g != 0 {
                    return false;
                }
            } else if c != 0 {
                return false;
            }
        }
        true
    }
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Diagonalize `mat` in place, mirroring row operations on `rhs` columns.
///
/// After the call every off-diagonal entry is zero, so the system decouples
/// into `diag[i] * x_i = rhs[i]` plus zero rows.
pub fn diagonalize_with_rhs(mut mat: IntMat, rhs: Vec<Vec<i128>>) -> DiagonalizedSystem {
    let rows = mat.rows();
    let cols = mat.cols();
    for b in &rhs {
        assert_eq!(b.len(), rows, "rhs length must match row count");
    }
    let mut rhs = rhs;
    let r = rows.min(cols);

    for k in 0..r {
        'pivot: loop {
            // Smallest-magnitude nonzero entry of the trailing submatrix.
            let mut best: Option<(usize, usize, i128)> = None;
            for i in k..rows {
                for j in k..cols {
                    let v = mat.get(i, j);
                    if v != 0 && best.is_none_or(|(_, _, bv)| v.abs() < bv.abs()) {
                        best = Some((i, j, v));
                    }
                }
            }
            let Some((pi, pj, _)) = best else {
                // Trailing submatrix is zero: done.
                return finish(mat, rhs, rows, cols);
            };
            swap_rows(&mut mat, &mut rhs, k, pi);
            swap_cols(&mut mat, k, pj);
            let p = mat.get(k, k);

            let mut clean = true;
            for i in k + 1..rows {
                let v = mat.get(i, k);
                if v != 0 {
                    let q = v.div_euclid(p);
                    if q != 0 {
                        row_sub(&mut mat, &mut rhs, i, k, q);
                    }
                    if mat.get(i, k) != 0 {
                        clean = false;
                    }
                }
            }
            for j in k + 1..cols {
                let v = mat.get(k, j);
                if v != 0 {
                    let q = v.div_euclid(p);
                    if q != 0 {
                        col_sub(&mut mat, j, k, q);
                    }
                    if mat.get(k, j) != 0 {
                        clean = false;
                    }
                }
            }
            if clean {
                break 'pivot;
            }
            // A Euclidean remainder smaller than the pivot now exists;
            // re-select and continue.
        }
    }
    finish(mat, rhs, rows, cols)
}

fn finish(mat: IntMat, rhs: Vec<Vec<i128>>, rows: usize, cols: usize) -> DiagonalizedSystem {
    let diag = (0..rows.min(cols)).map(|i| mat.get(i, i)).collect::<Vec<_>>();
    let mut diag = diag;
    diag.resize(cols, 0);
    DiagonalizedSystem {
        rows,
        cols,
        diag,
        rhs,
    }
}

fn swap_rows(mat: &mut IntMat, rhs: &mut [Vec<i128>], a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..mat.cols() {
        let (x, y) = (mat.get(a, j), mat.get(b, j));
        mat.set(a, j, y);
        mat.set(b, j, x);
    }
    for col in rhs.iter_mut() {
        col.swap(a, b);
    }
}

fn swap_cols(mat: &mut IntMat, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..mat.rows() {
        let (x, y) = (mat.get(i, a), mat.get(i, b));
        mat.set(i, a, y);
        mat.set(i, b, x);
    }
}

/// row[i] -= q * row[k]
fn row_sub(mat: &mut IntMat, rhs: &mut [Vec<i128>], i: usize, k: usize, q: i128) {
    for j in 0..mat.cols() {
        let v = mat.get(i, j) - q * mat.get(k, j);
        mat.set(i, j, v);
    }
    for col in rhs.iter_mut() {
        col[i] -= q * col[k];
    }
}

/// col[j] -= q * col[k]
fn col_sub(mat: &mut IntMat, j: usize, k: usize, q: i128) {
    for i in 0..mat.rows() {
        let v = mat.get(i, j) - q * mat.get(i, k);
        mat.set(i, j, v);
    }
}

/// Convenience wrapper: solvability of `mat * x = rhs[i] (mod m)` for each rhs.
pub fn solvable_mod_all(mat: IntMat, rhs: Vec<Vec<i128>>, modulus: i128) -> Vec<bool> {
    let n = rhs.len();
    let sys = diagonalize_with_rhs(mat, rhs);
    (0..n).map(|i| sys.solvable_mod(i, modulus)).collect()
}
