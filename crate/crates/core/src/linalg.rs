//! Dense linear algebra over the prime field F_p.

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let (mut b, mut e) = (a as u64 % p as u64, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Inverse of a square matrix, or `None` when singular.
pub fn invert(m: &[Vec<u32>], p: u32) -> Option<Vec<Vec<u32>>> {
    let n = m.len();
    let mut a: Vec<Vec<u32>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<u32> = row.iter().map(|x| x % p).collect();
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, piv);
        let inv = inv_mod(a[col][col], p);
        for x in a[col].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..n {
            if r != col && a[r][col] != 0 {
                let k = a[r][col];
                for c in 0..2 * n {
                    a[r][c] = (a[r][c] + p * p - k * a[col][c] % p) % p;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Rank of a list of row vectors.
pub fn rank(rows: &[Vec<u32>], p: u32) -> usize {
    let mut e = Echelon::new(p);
    rows.iter().filter(|r| e.insert(r, ()).is_none()).count()
}

/// Basis of {x : Σ_j rows[i][j] x_j = 0 for all i} in `dim` variables.
pub fn nullspace(rows: &[Vec<u32>], dim: usize, p: u32) -> Vec<Vec<u32>> {
    let mut a: Vec<Vec<u32>> = rows.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..dim {
        let Some(piv) = (row..a.len()).find(|&r| a[r][col] != 0) else { continue };
        a.swap(row, piv);
        let inv = inv_mod(a[row][col], p);
        for x in a[row].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..a.len() {
            if r != row && a[r][col] != 0 {
                let k = a[r][col];
                for c in 0..dim {
                    a[r][c] = (a[r][c] + p * p - k * a[row][c] % p) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u32; dim];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[r][f]) % p;
            }
            v
        })
        .collect()
}

/// Incrementally built row-echelon basis where each row carries a payload
/// that records how it was formed.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    p: u32,
    rows: Vec<(usize, Vec<u32>, T)>,
}

impl<T: Clone> Echelon<T> {
    pub fn new(p: u32) -> Self {
        Echelon { p, rows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> impl Iterator<Item = (&[u32], &T)> {
        self.rows.iter().map(|(_, v, t)| (v.as_slice(), t))
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(c, _, _)| *c).collect()
    }

    /// Writes v = Σ c_i row_i + residue and returns (residue, coefficients).
    pub fn reduce(&self, v: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let p = self.p;
        let mut r: Vec<u32> = v.iter().map(|x| x % p).collect();
        let mut coeffs = vec![0u32; self.rows.len()];
        for (i, (piv, row, _)) in self.rows.iter().enumerate() {
            let k = r[*piv];
            if k != 0 {
                coeffs[i] = k;
                for (x, y) in r.iter_mut().zip(row) {
                    *x = (*x + p * p - k * y % p) % p;
                }
            }
        }
        (r, coeffs)
    }

    /// Inserts v unless it lies in the span; on success returns `None`,
    /// otherwise returns the coefficients expressing v in the current rows.
    pub fn insert(&mut self, v: &[u32], payload: T) -> Option<Vec<u32>> {
        let (r, coeffs) = self.reduce(v);
        match r.iter().position(|&x| x != 0) {
            None => Some(coeffs),
            Some(piv) => {
                let inv = inv_mod(r[piv], self.p);
                let row: Vec<u32> = r.iter().map(|x| x * inv % self.p).collect();
                self.rows.push((piv, row, payload));
                self.rows.sort_by_key(|(c, _, _)| *c);
                None
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).0.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        let m = vec![vec![1, 2, 0], vec![0, 1, 4], vec![3, 0, 2]];
        let inv = invert(&m, 5).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let s: u32 = (0..3).map(|k| m[i][k] * inv[k][j]).sum::<u32>() % 5;
                assert_eq!(s, u32::from(i == j));
            }
        }
        assert!(invert(&[vec![1, 1], vec![1, 1]], 2).is_none());
    }

    #[test]
    fn nullspace_dimension() {
        let rows = vec![vec![1, 1, 0, 0], vec![0, 0, 1, 1]];
        let ns = nullspace(&rows, 4, 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for r in &rows {
                assert_eq!(r.iter().zip(v).map(|(a, b)| a * b).sum::<u32>() % 3, 0);
            }
        }
        assert_eq!(rank(&rows, 3), 2);
    }
}
