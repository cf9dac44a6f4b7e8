//! Small exact linear algebra: integer 3-vectors and 3×3 matrices for the
//! homogeneous objects, and Gaussian elimination over ℚ for the conic and
//! fixed-point systems.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Vec3 = [BigInt; 3];
pub type Mat3 = [[BigInt; 3]; 3];

pub fn vec3(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Vec3 {
    [x.into(), y.into(), z.into()]
}

pub fn cross(a: &Vec3, b: &Vec3) -> Vec3 {
    [&a[1] * &b[2] - &a[2] * &b[1], &a[2] * &b[0] - &a[0] * &b[2], &a[0] * &b[1] - &a[1] * &b[0]]
}

pub fn dot(a: &Vec3, b: &Vec3) -> BigInt {
    &a[0] * &b[0] + &a[1] * &b[1] + &a[2] * &b[2]
}

pub fn is_zero(v: &Vec3) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn scale(v: &Vec3, k: &BigInt) -> Vec3 {
    [&v[0] * k, &v[1] * k, &v[2] * k]
}

/// `a·u + b·v`
pub fn lin_comb(a: &BigInt, u: &Vec3, b: &BigInt, v: &Vec3) -> Vec3 {
    [a * &u[0] + b * &v[0], a * &u[1] + b * &v[1], a * &u[2] + b * &v[2]]
}

pub fn det3(a: &Vec3, b: &Vec3, c: &Vec3) -> BigInt {
    dot(a, &cross(b, c))
}

/// Divides by the gcd of the entries and makes the first nonzero entry
/// positive. Returns `None` for the zero vector.
pub fn primitive<const N: usize>(v: [BigInt; N]) -> Option<[BigInt; N]> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return None;
    }
    let first = v.iter().find(|x| !x.is_zero())?;
    let g = if first.is_negative() { -g } else { g };
    Some(v.map(|x| x / &g))
}

/// Clears denominators of a rational vector, keeping proportionality.
pub fn integerize<const N: usize>(v: &[BigRational; N]) -> [BigInt; N] {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    std::array::from_fn(|i| (&v[i] * BigRational::from_integer(l.clone())).to_integer())
}

pub fn integerize_slice(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
}

pub fn mat_vec(m: &Mat3, v: &Vec3) -> Vec3 {
    std::array::from_fn(|i| dot(&m[i], v))
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j] + &a[i][2] * &b[2][j]))
}

pub fn transpose(m: &Mat3) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()))
}

pub fn det(m: &Mat3) -> BigInt {
    det3(&m[0], &m[1], &m[2])
}

/// Adjugate: `m · adj(m) = det(m) · I`.
pub fn adjugate(m: &Mat3) -> Mat3 {
    let cols: [Vec3; 3] = std::array::from_fn(|j| [m[0][j].clone(), m[1][j].clone(), m[2][j].clone()]);
    // rows of adj are cross products of pairs of columns
    [cross(&cols[1], &cols[2]), cross(&cols[2], &cols[0]), cross(&cols[0], &cols[1])]
}

pub fn identity() -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| if i == j { BigInt::one() } else { BigInt::zero() }))
}

pub fn from_columns(cols: &[Vec3; 3]) -> Mat3 {
    std::array::from_fn(|i| std::array::from_fn(|j| cols[j][i].clone()))
}

pub fn column(m: &Mat3, j: usize) -> Vec3 {
    [m[0][j].clone(), m[1][j].clone(), m[2][j].clone()]
}

pub fn flatten(m: &Mat3) -> [BigInt; 9] {
    std::array::from_fn(|k| m[k / 3][k % 3].clone())
}

pub fn unflatten(v: [BigInt; 9]) -> Mat3 {
    let mut it = v.into_iter();
    std::array::from_fn(|_| std::array::from_fn(|_| it.next().expect("nine entries")))
}

/// True when `a = λ·b` for some nonzero λ (both assumed nonzero).
pub fn proportional(a: &[BigInt], b: &[BigInt]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if &a[i] * &b[j] != &a[j] * &b[i] {
                return false;
            }
        }
    }
    // a zero where b is nonzero is caught above unless every other entry is 0
    a.iter().zip(b).all(|(x, y)| x.is_zero() == y.is_zero())
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(rows: &mut [Vec<BigRational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..ncols {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<BigRational>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of the right nullspace `{x : rows·x = 0}`.
pub fn nullspace(rows: &[Vec<BigRational>], ncols: usize) -> Vec<Vec<BigRational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![BigRational::zero(); ncols];
            x[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = -m[r][f].clone();
            }
            x
        })
        .collect()
}

/// Integer nullspace of an integer matrix (basis vectors made primitive).
pub fn int_nullspace(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let q: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().cloned().map(BigRational::from_integer).collect()).collect();
    nullspace(&q, ncols).into_iter().map(|v| integerize_slice(&v)).collect()
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
