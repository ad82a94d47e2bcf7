//! Small exact linear algebra over [`Scalar`]: fixed-size vectors and
//! matrices plus a rational Gaussian-elimination kernel used for rank and
//! nullspace computations.

use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Exact 2-vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: Scalar,
    pub y: Scalar,
}

impl Vec2 {
    pub fn new(x: Scalar, y: Scalar) -> Self {
        Vec2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Vec2::new(Scalar::from_int(x), Scalar::from_int(y))
    }

    pub fn zero() -> Self {
        Vec2::new(Scalar::zero(), Scalar::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, o: &Vec2) -> Scalar {
        &self.x * &o.x + &self.y * &o.y
    }

    /// 2D cross product `self.x * o.y - self.y * o.x`.
    pub fn cross(&self, o: &Vec2) -> Scalar {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn parallel(&self, o: &Vec2) -> bool {
        self.cross(o).is_zero()
    }

    pub fn add(&self, o: &Vec2) -> Vec2 {
        Vec2::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &Vec2) -> Vec2 {
        Vec2::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn neg(&self) -> Vec2 {
        Vec2::new(-&self.x, -&self.y)
    }

    pub fn scale(&self, s: &Scalar) -> Vec2 {
        Vec2::new(&self.x * s, &self.y * s)
    }

    pub fn norm_sq(&self) -> Scalar {
        self.dot(self)
    }
}

impl fmt::Debug for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Exact 3-vector.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vec3 {
    pub x: Scalar,
    pub y: Scalar,
    pub z: Scalar,
}

impl Vec3 {
    pub fn new(x: Scalar, y: Scalar, z: Scalar) -> Self {
        Vec3 { x, y, z }
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Vec3::new(Scalar::from_int(x), Scalar::from_int(y), Scalar::from_int(z))
    }

    pub fn zero() -> Self {
        Vec3::new(Scalar::zero(), Scalar::zero(), Scalar::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn dot(&self, o: &Vec3) -> Scalar {
        &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    /// Minkowski product `x3*y3 - x1*y1 - x2*y2`.
    pub fn minkowski_dot(&self, o: &Vec3) -> Scalar {
        &self.z * &o.z - &self.x * &o.x - &self.y * &o.y
    }

    pub fn cross(&self, o: &Vec3) -> Vec3 {
        Vec3::new(
            &self.y * &o.z - &self.z * &o.y,
            &self.z * &o.x - &self.x * &o.z,
            &self.x * &o.y - &self.y * &o.x,
        )
    }

    pub fn add(&self, o: &Vec3) -> Vec3 {
        Vec3::new(&self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }

    pub fn sub(&self, o: &Vec3) -> Vec3 {
        Vec3::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }

    pub fn neg(&self) -> Vec3 {
        Vec3::new(-&self.x, -&self.y, -&self.z)
    }

    pub fn norm_sq(&self) -> Scalar {
        self.dot(self)
    }
}

impl fmt::Debug for Vec3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.x, self.y, self.z)
    }
}

/// Exact 2x2 matrix, row major.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Mat2 {
    pub rows: [[Scalar; 2]; 2],
}

impl Mat2 {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Self {
        Mat2 { rows: [[a, b], [c, d]] }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(
            Scalar::from_int(a),
            Scalar::from_int(b),
            Scalar::from_int(c),
            Scalar::from_int(d),
        )
    }

    pub fn zero() -> Self {
        Mat2::from_ints(0, 0, 0, 0)
    }

    pub fn identity() -> Self {
        Mat2::from_ints(1, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Scalar::is_zero)
    }

    /// Outer product `a bᵀ`.
    pub fn outer(a: &Vec2, b: &Vec2) -> Mat2 {
        Mat2::new(&a.x * &b.x, &a.x * &b.y, &a.y * &b.x, &a.y * &b.y)
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        let mut m = self.clone();
        for i in 0..2 {
            for j in 0..2 {
                m.rows[i][j] = &m.rows[i][j] + &o.rows[i][j];
            }
        }
        m
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Mat2 {
        let mut m = self.clone();
        for r in m.rows.iter_mut().flatten() {
            *r = -&*r;
        }
        m
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2::new(
            self.rows[0][0].clone(),
            self.rows[1][0].clone(),
            self.rows[0][1].clone(),
            self.rows[1][1].clone(),
        )
    }

    pub fn det(&self) -> Scalar {
        &self.rows[0][0] * &self.rows[1][1] - &self.rows[0][1] * &self.rows[1][0]
    }

    pub fn mul_vec(&self, v: &Vec2) -> Vec2 {
        Vec2::new(
            &self.rows[0][0] * &v.x + &self.rows[0][1] * &v.y,
            &self.rows[1][0] * &v.x + &self.rows[1][1] * &v.y,
        )
    }

    /// `xᵀ M y`.
    pub fn bilinear(&self, x: &Vec2, y: &Vec2) -> Scalar {
        x.dot(&self.mul_vec(y))
    }

    /// `xᵀ M x`.
    pub fn quad_form(&self, x: &Vec2) -> Scalar {
        self.bilinear(x, x)
    }

    /// Symmetric part `(M + Mᵀ)/2`; has the same quadratic form as `M`.
    pub fn symmetrize(&self) -> Mat2 {
        let half = Scalar::ratio(1, 2);
        let t = self.transpose();
        let mut m = self.add(&t);
        for r in m.rows.iter_mut().flatten() {
            *r = &*r * &half;
        }
        m
    }

    pub fn is_diagonal(&self) -> bool {
        self.rows[0][1].is_zero() && self.rows[1][0].is_zero()
    }

    pub fn is_antidiagonal(&self) -> bool {
        self.rows[0][0].is_zero() && self.rows[1][1].is_zero()
    }
}

/// Exact 3x3 matrix, row major.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Mat3 {
    pub rows: [[Scalar; 3]; 3],
}

impl Mat3 {
    pub fn from_rows(rows: [[Scalar; 3]; 3]) -> Self {
        Mat3 { rows }
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Mat3 {
            rows: rows.map(|r| r.map(Scalar::from_int)),
        }
    }

    pub fn zero() -> Self {
        Mat3::from_ints([[0; 3]; 3])
    }

    pub fn identity() -> Self {
        Mat3::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn diag(a: i64, b: i64, c: i64) -> Self {
        Mat3::from_ints([[a, 0, 0], [0, b, 0], [0, 0, c]])
    }

    /// Cross-product matrix: `skew(q) v = q x v`.
    pub fn skew(q: &Vec3) -> Mat3 {
        let z = Scalar::zero;
        Mat3::from_rows([
            [z(), -&q.z, q.y.clone()],
            [q.z.clone(), z(), -&q.x],
            [-&q.y, q.x.clone(), z()],
        ])
    }

    pub fn add(&self, o: &Mat3) -> Mat3 {
        let mut m = self.clone();
        for i in 0..3 {
            for j in 0..3 {
                m.rows[i][j] = &m.rows[i][j] + &o.rows[i][j];
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &Vec3) -> Vec3 {
        Vec3::new(
            &self.rows[0][0] * &v.x + &self.rows[0][1] * &v.y + &self.rows[0][2] * &v.z,
            &self.rows[1][0] * &v.x + &self.rows[1][1] * &v.y + &self.rows[1][2] * &v.z,
            &self.rows[2][0] * &v.x + &self.rows[2][1] * &v.y + &self.rows[2][2] * &v.z,
        )
    }

    pub fn det(&self) -> Scalar {
        let r = &self.rows;
        &r[0][0] * &(&r[1][1] * &r[2][2] - &r[1][2] * &r[2][1])
            - &r[0][1] * &(&r[1][0] * &r[2][2] - &r[1][2] * &r[2][0])
            + &r[0][2] * &(&r[1][0] * &r[2][1] - &r[1][1] * &r[2][0])
    }
}

/// Reduced row echelon form in place; returns the pivot column per row.
pub fn rref(m: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let nrows = m.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = m[0].len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].checked_recip().expect("pivot is nonzero");
        for c in col..ncols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..nrows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..ncols {
                    m[r][c] = &m[r][c] - &(&f * &m[row][c]);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank of a rational matrix.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of the right nullspace of `rows` (each row a linear functional).
pub fn nullspace(rows: &[Vec<Scalar>], ncols: usize) -> Vec<Vec<Scalar>> {
    let mut m: Vec<Vec<Scalar>> = rows.to_vec();
    for r in &m {
        assert_eq!(r.len(), ncols);
    }
    let pivots = rref(&mut m);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![Scalar::zero(); ncols];
        v[free] = Scalar::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -&m[r][free];
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_and_dot() {
        let a = Vec3::from_ints(1, 0, 0);
        let b = Vec3::from_ints(0, 1, 0);
        assert_eq!(a.cross(&b), Vec3::from_ints(0, 0, 1));
        assert!(a.dot(&b).is_zero());
    }

    #[test]
    fn skew_matches_cross() {
        let q = Vec3::from_ints(2, -3, 5);
        let v = Vec3::from_ints(7, 1, -4);
        assert_eq!(Mat3::skew(&q).mul_vec(&v), q.cross(&v));
    }

    #[test]
    fn nullspace_of_plane_pair() {
        // x + y = 0 and z = 0 in 3 columns: nullspace spanned by (1, -1, 0).
        let rows = vec![
            vec![Scalar::from_int(1), Scalar::from_int(1), Scalar::zero()],
            vec![Scalar::zero(), Scalar::zero(), Scalar::from_int(1)],
        ];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert_eq!(&v[0] + &v[1], Scalar::zero());
        assert!(v[2].is_zero());
    }

    #[test]
    fn rank_counts_independent_rows() {
        let rows = vec![
            vec![Scalar::from_int(1), Scalar::from_int(2)],
            vec![Scalar::from_int(2), Scalar::from_int(4)],
        ];
        assert_eq!(rank(&rows), 1);
    }

    #[test]
    fn quad_form_minkowski() {
        let m = Mat2::from_ints(1, 0, 0, -1);
        assert!(m.quad_form(&Vec2::from_ints(3, 3)).is_zero());
        assert_eq!(m.quad_form(&Vec2::from_ints(2, 1)), Scalar::from_int(3));
    }
}
