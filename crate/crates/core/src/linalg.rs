//! Small exact linear algebra over `Q(i)`: 2x2 matrices and Gauss-Jordan
//! elimination with first-nonzero pivoting, giving a canonical reduced
//! row-echelon form.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;
use crate::{Error, Result};

/// A 2x2 matrix over `Q(i)`, row-major.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "[[Scalar; 2]; 2]", from = "[[Scalar; 2]; 2]")]
pub struct Mat2 {
    pub e: [[Scalar; 2]; 2],
}

impl From<Mat2> for [[Scalar; 2]; 2] {
    fn from(m: Mat2) -> Self {
        m.e
    }
}

impl From<[[Scalar; 2]; 2]> for Mat2 {
    fn from(e: [[Scalar; 2]; 2]) -> Self {
        Mat2 { e }
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.e[0][0], self.e[0][1], self.e[1][0], self.e[1][1]
        )
    }
}

impl Mat2 {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Self {
        Mat2 { e: [[a, b], [c, d]] }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(
            Scalar::from_int(a),
            Scalar::from_int(b),
            Scalar::from_int(c),
            Scalar::from_int(d),
        )
    }

    pub fn identity() -> Self {
        Mat2::from_ints(1, 0, 0, 1)
    }

    pub fn diag(a: Scalar, d: Scalar) -> Self {
        Mat2::new(a, Scalar::zero(), Scalar::zero(), d)
    }

    pub fn det(&self) -> Scalar {
        &(&self.e[0][0] * &self.e[1][1]) - &(&self.e[0][1] * &self.e[1][0])
    }

    pub fn trace(&self) -> Scalar {
        &self.e[0][0] + &self.e[1][1]
    }

    pub fn mul(&self, rhs: &Mat2) -> Mat2 {
        let mut out = [[Scalar::zero(), Scalar::zero()], [Scalar::zero(), Scalar::zero()]];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = &(&self.e[i][0] * &rhs.e[0][j]) + &(&self.e[i][1] * &rhs.e[1][j]);
            }
        }
        Mat2 { e: out }
    }

    pub fn scale(&self, s: &Scalar) -> Mat2 {
        Mat2::new(
            s * &self.e[0][0],
            s * &self.e[0][1],
            s * &self.e[1][0],
            s * &self.e[1][1],
        )
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2::new(
            self.e[0][0].clone(),
            self.e[1][0].clone(),
            self.e[0][1].clone(),
            self.e[1][1].clone(),
        )
    }

    pub fn inverse(&self) -> Result<Mat2> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let di = d.inv()?;
        Ok(Mat2::new(
            &self.e[1][1] * &di,
            &(-&self.e[0][1]) * &di,
            &(-&self.e[1][0]) * &di,
            &self.e[0][0] * &di,
        ))
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }

    pub fn is_scalar_matrix(&self) -> bool {
        self.e[0][1].is_zero() && self.e[1][0].is_zero() && self.e[0][0] == self.e[1][1]
    }

    /// Equality up to a nonzero scalar factor (equality in `PGL2`).
    pub fn proj_eq(&self, other: &Mat2) -> bool {
        for i in 0..2 {
            for j in 0..2 {
                if !self.e[i][j].is_zero() {
                    let lam = match other.e[i][j].checked_div(&self.e[i][j]) {
                        Ok(l) => l,
                        Err(_) => return false,
                    };
                    if lam.is_zero() {
                        return false;
                    }
                    return (0..2).all(|a| {
                        (0..2).all(|b| &lam * &self.e[a][b] == other.e[a][b])
                    });
                }
            }
        }
        // zero matrix only projectively equals the zero matrix
        other.e.iter().flatten().all(Scalar::is_zero)
    }

    /// Canonical representative: first nonzero entry scaled to 1.
    pub fn canonical(&self) -> Mat2 {
        for i in 0..2 {
            for j in 0..2 {
                if !self.e[i][j].is_zero() {
                    let inv = self.e[i][j].inv().expect("nonzero entry");
                    return self.scale(&inv);
                }
            }
        }
        self.clone()
    }
}

/// Reduced row-echelon form in place; returns the pivot columns.
///
/// Pivoting takes the first row with a nonzero entry in the current
/// column, so the result is the canonical RREF of the row span.
pub fn rref(rows: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let nr = rows.len();
    let nc = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(pr) = (r..nr).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inv().expect("pivot nonzero");
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..nr {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    let sub = &f * p;
                    *x = &*x - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Exact nullspace basis of the matrix given by `rows` (each of length
/// `ncols`). Basis vectors are indexed by the free columns in order.
pub fn kernel(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![Scalar::zero(); ncols];
        v[fc] = Scalar::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -&m[ri][fc];
        }
        basis.push(v);
    }
    basis
}

/// Solve `rows * x = rhs` exactly. Returns a particular solution (free
/// variables set to zero) together with a kernel basis, or `None` when
/// the system is inconsistent.
pub fn solve_affine(
    rows: &[Vec<Scalar>],
    rhs: &[Scalar],
) -> Option<(Vec<Scalar>, Vec<Vec<Scalar>>)> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Scalar>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut part = vec![Scalar::zero(); ncols];
    for (ri, &pc) in pivots.iter().enumerate() {
        part[pc] = aug[ri][ncols].clone();
    }
    Some((part, kernel(rows, ncols)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> Scalar {
        t.parse().unwrap()
    }

    #[test]
    fn rref_is_canonical_for_span() {
        // {f, g} and {f+g, g} have the same RREF
        let f = vec![s("1"), s("2"), s("0")];
        let g = vec![s("0"), s("1"), s("3")];
        let fg = vec![s("1"), s("3"), s("3")];
        let mut a = vec![f.clone(), g.clone()];
        let mut b = vec![fg, g];
        rref(&mut a);
        rref(&mut b);
        assert_eq!(a, b);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        let rows = vec![vec![s("1"), s("0")], vec![s("0"), s("1")]];
        assert!(kernel(&rows, 2).is_empty());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let rows = vec![vec![s("1"), s("2"), s("3")], vec![s("2"), s("4"), s("6")]];
        let ker = kernel(&rows, 3);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            for r in &rows {
                let mut acc = Scalar::zero();
                for (a, b) in r.iter().zip(v) {
                    acc = &acc + &(a * b);
                }
                assert!(acc.is_zero());
            }
        }
    }

    #[test]
    fn mat2_inverse_round_trip() {
        let m = Mat2::from_ints(1, 2, 3, 5);
        assert_eq!(m.mul(&m.inverse().unwrap()), Mat2::identity());
    }

    #[test]
    fn proj_eq_scaling() {
        let m = Mat2::from_ints(1, 2, 0, 1);
        assert!(m.proj_eq(&m.scale(&s("-7/3"))));
        assert!(!m.proj_eq(&Mat2::identity()));
    }

    #[test]
    fn solve_affine_consistency() {
        let rows = vec![vec![s("1"), s("1")], vec![s("0"), s("1")]];
        let (p, k) = solve_affine(&rows, &[s("3"), s("1")]).unwrap();
        assert_eq!(p, vec![s("2"), s("1")]);
        assert!(k.is_empty());
        assert!(solve_affine(
            &[vec![s("1"), s("1")], vec![s("2"), s("2")]],
            &[s("1"), s("3")]
        )
        .is_none());
    }
}
