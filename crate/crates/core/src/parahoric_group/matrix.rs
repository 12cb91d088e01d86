//! Block-diagonal matrices over `Z/p^h` packed into sixteen bytes.

/// Up to sixteen entries, row-major per block, each reduced mod its block's modulus.
pub type Element = [u8; 16];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Block {
    pub dim: usize,
    pub offset: usize,
    pub p: u32,
    pub h: u32,
    pub modulus: u32,
    /// Entries are classes modulo scalar units.
    pub projective: bool,
}

impl Block {
    pub fn new(dim: usize, offset: usize, p: u32, h: u32, projective: bool) -> Self {
        Block {
            dim,
            offset,
            p,
            h,
            modulus: p.pow(h),
            projective,
        }
    }

    #[inline]
    pub fn at(&self, e: &Element, i: usize, j: usize) -> u32 {
        e[self.offset + i * self.dim + j] as u32
    }

    #[inline]
    fn set(&self, e: &mut Element, i: usize, j: usize, v: u32) {
        e[self.offset + i * self.dim + j] = v as u8;
    }

    fn load(&self, e: &Element) -> [[u32; 4]; 4] {
        let mut a = [[0u32; 4]; 4];
        for (i, row) in a.iter_mut().enumerate().take(self.dim) {
            for (j, x) in row.iter_mut().enumerate().take(self.dim) {
                *x = self.at(e, i, j);
            }
        }
        a
    }

    fn store(&self, e: &mut Element, a: &[[u32; 4]; 4]) {
        for (i, row) in a.iter().enumerate().take(self.dim) {
            for (j, &x) in row.iter().enumerate().take(self.dim) {
                self.set(e, i, j, x);
            }
        }
    }

    #[inline]
    pub fn is_unit(&self, x: u32) -> bool {
        !x.is_multiple_of(self.p)
    }

    /// Scales so that the first unit entry in row-major order is 1.
    fn normalize(&self, e: &mut Element) {
        if !self.projective {
            return;
        }
        let n = self.dim * self.dim;
        let first = (0..n)
            .map(|k| e[self.offset + k] as u32)
            .find(|&x| self.is_unit(x));
        if let Some(u) = first {
            let s = inv_mod(u, self.modulus).expect("unit");
            for k in 0..n {
                let x = e[self.offset + k] as u32;
                e[self.offset + k] = (x * s % self.modulus) as u8;
            }
        }
    }
}

pub fn inv_mod(a: u32, m: u32) -> Option<u32> {
    let (mut r0, mut r1) = (m as i64, (a % m) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i64) as u32)
}

pub fn pow_mod(base: u32, mut exp: u64, m: u32) -> u32 {
    let (mut acc, mut b) = (1u64 % m as u64, base as u64 % m as u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m as u64;
        }
        b = b * b % m as u64;
        exp >>= 1;
    }
    acc as u32
}

/// `b^e` for a possibly negative exponent; `b` must be a unit.
pub fn pow_signed(base: u32, exp: i64, m: u32) -> u32 {
    if exp >= 0 {
        pow_mod(base, exp as u64, m)
    } else {
        pow_mod(inv_mod(base, m).expect("unit"), (-exp) as u64, m)
    }
}

/// Largest `v` with `p^v | x`, or `None` for zero.
pub fn p_valuation(x: u32, p: u32, h: u32) -> Option<u32> {
    let m = p.pow(h);
    let mut x = x % m;
    if x == 0 {
        return None;
    }
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    Some(v)
}

/// A generator of the cyclic group of units mod `p^h` (p odd).
pub fn primitive_root(p: u32, h: u32) -> u32 {
    let m = p.pow(h);
    let order = (p - 1) as u64 * p.pow(h - 1) as u64;
    let mut primes = Vec::new();
    let mut n = order;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            primes.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    (2..m)
        .find(|&g| g % p != 0 && primes.iter().all(|&q| pow_mod(g, order / q, m) != 1))
        .expect("odd prime powers have primitive roots")
}

pub fn identity(blocks: &[Block]) -> Element {
    let mut e = [0u8; 16];
    for b in blocks {
        for i in 0..b.dim {
            b.set(&mut e, i, i, 1);
        }
    }
    e
}

pub fn normalize(blocks: &[Block], e: &mut Element) {
    for b in blocks {
        b.normalize(e);
    }
}

pub fn mul(blocks: &[Block], x: &Element, y: &Element) -> Element {
    let mut out = [0u8; 16];
    for b in blocks {
        let (d, m) = (b.dim, b.modulus);
        for i in 0..d {
            for j in 0..d {
                let mut s = 0u32;
                for k in 0..d {
                    s += b.at(x, i, k) * b.at(y, k, j);
                }
                b.set(&mut out, i, j, s % m);
            }
        }
    }
    normalize(blocks, &mut out);
    out
}

pub fn inverse(blocks: &[Block], x: &Element) -> Element {
    let mut out = [0u8; 16];
    for b in blocks {
        let (d, m) = (b.dim, b.modulus);
        let mut a = b.load(x);
        let mut r = [[0u32; 4]; 4];
        for (i, row) in r.iter_mut().enumerate().take(d) {
            row[i] = 1;
        }
        for c in 0..d {
            let piv = (c..d)
                .find(|&i| b.is_unit(a[i][c]))
                .expect("invertible matrix");
            a.swap(c, piv);
            r.swap(c, piv);
            let s = inv_mod(a[c][c], m).expect("unit pivot");
            for j in 0..d {
                a[c][j] = a[c][j] * s % m;
                r[c][j] = r[c][j] * s % m;
            }
            for i in 0..d {
                if i != c && a[i][c] != 0 {
                    let f = a[i][c];
                    for j in 0..d {
                        a[i][j] = (a[i][j] + m * m - f * a[c][j]) % m;
                        r[i][j] = (r[i][j] + m * m - f * r[c][j]) % m;
                    }
                }
            }
        }
        b.store(&mut out, &r);
    }
    normalize(blocks, &mut out);
    out
}

pub fn commutator(blocks: &[Block], x: &Element, y: &Element) -> Element {
    let xy = mul(blocks, x, y);
    let xi = inverse(blocks, x);
    let yi = inverse(blocks, y);
    mul(blocks, &mul(blocks, &xy, &xi), &yi)
}

/// Canonical label of the coset `x B` where `B` is the upper triangular
/// subgroup: column echelon form with the lowest unit entry of each column
/// as pivot, scaled to 1, and earlier pivot rows cleared.
pub fn coset_key(blocks: &[Block], x: &Element) -> u128 {
    let mut key = 0u128;
    for b in blocks {
        let (d, m) = (b.dim, b.modulus);
        let mut a = b.load(x);
        let mut pivots = [0usize; 4];
        for j in 0..d {
            for i in 0..j {
                let c = a[pivots[i]][j];
                if c != 0 {
                    for row in a.iter_mut().take(d) {
                        row[j] = (row[j] + m * m - c * row[i]) % m;
                    }
                }
            }
            let piv = (0..d)
                .rev()
                .find(|&r| b.is_unit(a[r][j]))
                .expect("invertible matrix");
            let s = inv_mod(a[piv][j], m).expect("unit pivot");
            for row in a.iter_mut().take(d) {
                row[j] = row[j] * s % m;
            }
            pivots[j] = piv;
        }
        for (i, row) in a.iter().enumerate().take(d) {
            for (j, &v) in row.iter().enumerate().take(d) {
                key |= (v as u128) << (8 * (b.offset + i * d + j));
            }
        }
    }
    key
}

/// Diagonal of `x = L D U` with `L` lower and `U` upper unitriangular, when
/// every leading principal minor is a unit.
pub fn ldu_diagonal(blocks: &[Block], x: &Element) -> Option<Element> {
    let mut out = [0u8; 16];
    for b in blocks {
        let (d, m) = (b.dim, b.modulus);
        let mut a = b.load(x);
        let mut diag = [[0u32; 4]; 4];
        for k in 0..d {
            if !b.is_unit(a[k][k]) {
                return None;
            }
            diag[k][k] = a[k][k];
            let s = inv_mod(a[k][k], m)?;
            for i in k + 1..d {
                let f = a[i][k] * s % m;
                for j in k..d {
                    a[i][j] = (a[i][j] + m * m - f * a[k][j]) % m;
                }
            }
        }
        b.store(&mut out, &diag);
    }
    normalize(blocks, &mut out);
    Some(out)
}

/// Reduces every entry to the modulus of depth `h - 1`.
pub fn reduce(blocks: &[Block], reduced: &[Block], x: &Element) -> Element {
    let mut out = [0u8; 16];
    for (b, r) in blocks.iter().zip(reduced) {
        for k in 0..b.dim * b.dim {
            out[b.offset + k] = (x[b.offset + k] as u32 % r.modulus) as u8;
        }
    }
    normalize(reduced, &mut out);
    out
}
