//! Exact dense linear algebra over rationals, sized for desk-scale systems
//! (dimension at most five in practice).

use crate::rat::Rat;
use num_traits::{One, Signed, Zero};

/// Determinant by fraction-free-ish Gaussian elimination on a copy.
pub fn det(a: &[Vec<Rat>]) -> Rat {
    let n = a.len();
    debug_assert!(a.iter().all(|r| r.len() == n));
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut sign = Rat::one();
    let mut prod = Rat::one();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            return Rat::zero();
        };
        if p != col {
            m.swap(p, col);
            sign = -sign;
        }
        let pv = m[col][col].clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
        prod *= pv;
    }
    sign * prod
}

/// Rank by Gaussian elimination on a copy. Rows may be fewer or more than columns.
pub fn rank(a: &[Vec<Rat>]) -> usize {
    if a.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let rows = m.len();
    let cols = m[0].len();
    let mut rk = 0;
    for col in 0..cols {
        if rk == rows {
            break;
        }
        let pivot = (rk..rows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(p, rk);
        let pv = m[rk][col].clone();
        for r in rk + 1..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            for c in col..cols {
                let sub = &f * &m[rk][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
        rk += 1;
    }
    rk
}

/// Solves the square system `a x = b`. Returns `None` when `a` is singular.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    debug_assert_eq!(b.len(), n);
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot, col);
        let pv = m[col][col].clone();
        for c in col..=n {
            m[col][c] = &m[col][c] / &pv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..=n {
                let sub = &f * &m[col][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Any particular solution of `a x = b` for a (possibly wide) consistent system;
/// free variables are pinned to zero. Deterministic pivot order keeps the
/// result canonical for fixed input. Returns `None` when inconsistent.
pub fn solve_any(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    if rows == 0 {
        return Some(Vec::new());
    }
    let cols = a[0].len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rk = 0;
    for col in 0..cols {
        if rk == rows {
            break;
        }
        let pivot = (rk..rows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(p, rk);
        let pv = m[rk][col].clone();
        for c in col..=cols {
            m[rk][c] = &m[rk][c] / &pv;
        }
        for r in 0..rows {
            if r == rk || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..=cols {
                let sub = &f * &m[rk][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
        pivot_cols.push(col);
        rk += 1;
    }
    // Inconsistent if a zero row has non-zero rhs.
    for r in rk..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &col) in pivot_cols.iter().enumerate() {
        x[col] = m[row][cols].clone();
    }
    Some(x)
}

/// One non-zero vector orthogonal to every row of `a`, or `None` if the rows
/// span the full space. The vector is scaled to primitive integer entries.
pub fn nullspace_vector(a: &[Vec<Rat>], cols: usize) -> Option<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let rows = m.len();
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut rk = 0;
    for col in 0..cols {
        if rk == rows {
            break;
        }
        let pivot = (rk..rows).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(p, rk);
        let pv = m[rk][col].clone();
        for c in col..cols {
            m[rk][c] = &m[rk][c] / &pv;
        }
        for r in 0..rows {
            if r == rk || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for c in col..cols {
                let sub = &f * &m[rk][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
        pivot_of_col[col] = Some(rk);
        rk += 1;
    }
    let free = (0..cols).find(|&c| pivot_of_col[c].is_none())?;
    let mut v = vec![Rat::zero(); cols];
    v[free] = Rat::one();
    for col in 0..cols {
        if let Some(row) = pivot_of_col[col] {
            v[col] = -m[row][free].clone();
        }
    }
    Some(primitive_scale(&v))
}

/// Scales a rational vector to coprime integer entries with the first non-zero
/// entry's sign preserved.
pub fn primitive_scale(v: &[Rat]) -> Vec<Rat> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut lcm = BigInt::from(1);
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = BigInt::from(0);
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter().map(|x| Rat::from(x / &g)).collect()
}

/// Matrix-vector product.
pub fn mat_vec(a: &[Vec<Rat>], x: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|row| row.iter().zip(x).map(|(c, v)| c * v).sum())
        .collect()
}

/// Matrix product.
pub fn mat_mul(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let n = a.len();
    let k = b.len();
    let m = if k == 0 { 0 } else { b[0].len() };
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        for j in 0..m {
            let mut s = Rat::zero();
            for l in 0..k {
                s += &a[i][l] * &b[l][j];
            }
            out[i][j] = s;
        }
    }
    out
}

/// Transpose.
pub fn transpose(a: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if a.is_empty() {
        return Vec::new();
    }
    let rows = a.len();
    let cols = a[0].len();
    (0..cols)
        .map(|j| (0..rows).map(|i| a[i][j].clone()).collect())
        .collect()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(a: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = a.len();
    let cols: Vec<Vec<Rat>> = (0..n)
        .map(|j| {
            let e: Vec<Rat> = (0..n)
                .map(|i| if i == j { Rat::one() } else { Rat::zero() })
                .collect();
            solve(a, &e)
        })
        .collect::<Option<Vec<_>>>()?;
    Some(transpose(&cols))
}

/// Dot product.
pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Signum helper used by orientation predicates.
pub fn sign(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}
