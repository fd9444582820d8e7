//! Arithmetic and linear algebra over a prime field `F_p`.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        debug_assert!(is_prime(p));
        Field { p }
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero mod {}", self.p);
        self.pow(a, self.p - 2)
    }

    pub fn elem(self, a: u64) -> u64 {
        a % self.p
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(self) -> u64 {
        let factors = prime_factors(self.p - 1);
        (2..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, (self.p - 1) / q) != 1))
            .unwrap_or(1)
    }

    /// Row echelon form in place; returns the pivot columns.
    pub fn rref(self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, pr);
            let inv = self.inv(rows[r][c]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c] == 0 {
                    continue;
                }
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = self.sub(*x, self.mul(f, y));
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of `{v : A v = 0}` for an `n × m` matrix given by rows.
    pub fn kernel(self, a: &[Vec<u64>], m: usize) -> Vec<Vec<u64>> {
        let mut rows = a.to_vec();
        let pivots = self.rref(&mut rows);
        let free: Vec<usize> = (0..m).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0; m];
                v[f] = 1;
                for (row, &pc) in rows.iter().zip(&pivots) {
                    v[pc] = self.neg(row[f]);
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI - A)`, lowest degree first, via
    /// reduction to Hessenberg form.
    pub fn charpoly(self, a: &[Vec<u64>]) -> Vec<u64> {
        let n = a.len();
        let mut h = a.to_vec();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            let t = self.inv(h[m][m - 1]);
            for i in m + 1..n {
                let u = self.mul(h[i][m - 1], t);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = self.mul(u, h[m][j]);
                    h[i][j] = self.sub(h[i][j], v);
                }
                for row in h.iter_mut() {
                    let v = self.mul(u, row[i]);
                    row[m] = self.add(row[m], v);
                }
            }
        }
        // p[k] is the characteristic polynomial of the leading k × k block
        let mut p: Vec<Vec<u64>> = vec![vec![1]];
        for m in 0..n {
            let prev = &p[m];
            let mut next = vec![0u64; m + 2];
            for (k, &c) in prev.iter().enumerate() {
                next[k + 1] = self.add(next[k + 1], c);
                next[k] = self.sub(next[k], self.mul(h[m][m], c));
            }
            let mut t = 1;
            for i in (0..m).rev() {
                t = self.mul(t, h[i + 1][i]);
                let f = self.mul(h[i][m], t);
                if f == 0 {
                    continue;
                }
                for (k, &c) in p[i].iter().enumerate() {
                    next[k] = self.sub(next[k], self.mul(f, c));
                }
            }
            p.push(next);
        }
        p.pop().expect("non-empty")
    }

    pub fn eval(self, poly: &[u64], x: u64) -> u64 {
        poly.iter()
            .rev()
            .fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// All roots in `F_p`, ascending, by exhaustive evaluation.
    pub fn roots(self, poly: &[u64]) -> Vec<u64> {
        (0..self.p).filter(|&x| self.eval(poly, x) == 0).collect()
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Least prime `p ≡ 1 (mod e)` with `p² > 4·order`.
pub(crate) fn dixon_prime(exponent: u64, order: u64) -> u64 {
    let mut p = exponent + 1;
    loop {
        if is_prime(p) && (p as u128) * (p as u128) > 4 * order as u128 {
            return p;
        }
        p += exponent;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> Field {
        Field::new(p)
    }

    /// Leibniz expansion of det(xI - A) evaluated at x, as an oracle.
    fn det_at(fd: Field, a: &[Vec<u64>], x: u64) -> u64 {
        let n = a.len();
        let m: Vec<Vec<u64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let d = if i == j { x } else { 0 };
                        fd.sub(d, a[i][j])
                    })
                    .collect()
            })
            .collect();
        fn rec(fd: Field, m: &[Vec<u64>], cols: &mut Vec<usize>, row: usize) -> u64 {
            if row == m.len() {
                return 1;
            }
            let mut total = 0;
            for idx in 0..cols.len() {
                let c = cols.remove(idx);
                let sign_neg = idx % 2 == 1;
                let term = fd.mul(m[row][c], rec(fd, m, cols, row + 1));
                total = if sign_neg {
                    fd.sub(total, term)
                } else {
                    fd.add(total, term)
                };
                cols.insert(idx, c);
            }
            total
        }
        rec(fd, &m, &mut (0..n).collect(), 0)
    }

    #[test]
    fn charpoly_matches_determinant() {
        let fd = f(31);
        let mats = [
            vec![vec![0, 1, 0], vec![0, 0, 1], vec![5, 0, 0]],
            vec![vec![2, 3, 4, 1], vec![0, 0, 7, 9], vec![1, 0, 0, 2], vec![4, 4, 0, 30]],
            vec![vec![0, 0, 0], vec![0, 0, 0], vec![1, 0, 0]],
            vec![vec![3]],
        ];
        for a in &mats {
            let cp = fd.charpoly(a);
            assert_eq!(cp.len(), a.len() + 1);
            for x in 0..31 {
                assert_eq!(fd.eval(&cp, x), det_at(fd, a, x));
            }
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let fd = f(7);
        let a = vec![vec![1, 2, 3, 4], vec![0, 1, 5, 2]];
        let k = fd.kernel(&a, 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &a {
                let s = row.iter().zip(v).fold(0, |acc, (&x, &y)| fd.add(acc, fd.mul(x, y)));
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn primes_and_roots() {
        assert_eq!(dixon_prime(2, 6), 5);
        assert_eq!(dixon_prime(30, 60), 31);
        assert_eq!(dixon_prime(6, 24), 13);
        assert_eq!(f(13).primitive_root(), 2);
        assert_eq!(f(7).primitive_root(), 3);
        // (x - 2)(x - 5) mod 11
        assert_eq!(f(11).roots(&[10, 4, 1]), vec![2, 5]);
        assert_eq!(prime_factors(360), vec![2, 3, 5]);
    }
}
