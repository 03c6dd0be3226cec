//! Arithmetic, polynomials, and small dense linear algebra modulo a prime
//! that fits in 64 bits.

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

pub fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, m: u64) -> u64 {
    pow_mod(a, m - 2, m)
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map(|s| s <= n).unwrap_or(false) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

// ---- polynomials over GF(ell), coefficients lowest-first ----

pub fn poly_trim(p: &mut Vec<u64>) {
    while p.len() > 1 && *p.last().unwrap() == 0 {
        p.pop();
    }
}

pub fn poly_is_zero(p: &[u64]) -> bool {
    p.iter().all(|&c| c == 0)
}

pub fn poly_mul(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, m), m);
        }
    }
    poly_trim(&mut out);
    out
}

pub fn poly_rem(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], m);
    while r.len() > db && !poly_is_zero(&r) {
        let factor = mul_mod(*r.last().unwrap(), lead_inv, m);
        let shift = r.len() - 1 - db;
        if factor != 0 {
            for i in 0..=db {
                r[shift + i] = sub_mod(r[shift + i], mul_mod(factor, b[i], m), m);
            }
        }
        r.pop();
        poly_trim(&mut r);
        if r.len() <= db {
            break;
        }
    }
    poly_trim(&mut r);
    r
}

pub fn poly_gcd(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !poly_is_zero(&b) {
        let r = poly_rem(&a, &b, m);
        a = b;
        b = r;
    }
    // monic normalization
    if !poly_is_zero(&a) {
        let inv = inv_mod(*a.last().unwrap(), m);
        for c in a.iter_mut() {
            *c = mul_mod(*c, inv, m);
        }
    }
    a
}

/// base^e modulo the polynomial f.
pub fn poly_pow_mod(base: &[u64], mut e: u64, f: &[u64], m: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, f, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &b, m), f, m);
        }
        b = poly_rem(&poly_mul(&b, &b, m), f, m);
        e >>= 1;
    }
    acc
}

/// All roots in GF(ell) of a polynomial whose relevant part splits into
/// distinct linear factors, by gcd with x^ell - x followed by deterministic
/// split-by-shift.
pub fn poly_roots(f: &[u64], m: u64) -> Vec<u64> {
    let mut f = f.to_vec();
    poly_trim(&mut f);
    if f.len() <= 1 {
        return Vec::new();
    }
    // strip the content of x dividing f: root 0
    let mut roots = Vec::new();
    if f[0] == 0 {
        roots.push(0);
        while f[0] == 0 && f.len() > 1 {
            f.remove(0);
        }
    }
    // g = gcd(f, x^m - x) keeps exactly the distinct linear factors
    let xm = poly_pow_mod(&[0, 1], m, &f, m);
    let mut diff = xm;
    if diff.len() < 2 {
        diff.resize(2, 0);
    }
    diff[1] = sub_mod(diff[1], 1, m);
    poly_trim(&mut diff);
    let g = poly_gcd(&f, &diff, m);
    if g.len() > 1 {
        split_linear(&g, m, &mut roots);
    }
    roots.sort_unstable();
    roots
}

fn split_linear(g: &[u64], m: u64, roots: &mut Vec<u64>) {
    if g.len() == 2 {
        // x + c = 0
        let c = g[0];
        let lead_inv = inv_mod(g[1], m);
        roots.push(sub_mod(0, mul_mod(c, lead_inv, m), m));
        return;
    }
    // deterministic shifts a = 0, 1, 2, ... until (x+a)^((m-1)/2) - 1 splits g
    for a in 0u64.. {
        let shifted = vec![a % m, 1];
        let mut h = poly_pow_mod(&shifted, (m - 1) / 2, g, m);
        if h.is_empty() {
            h = vec![0];
        }
        h[0] = sub_mod(h[0], 1, m);
        let mut h = h;
        poly_trim(&mut h);
        let d = poly_gcd(g, &h, m);
        if d.len() > 1 && d.len() < g.len() {
            split_linear(&d, m, roots);
            let q = poly_div_exact(g, &d, m);
            split_linear(&q, m, roots);
            return;
        }
        assert!(a < 4 * m, "failed to split a product of linear factors");
    }
}

fn poly_div_exact(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    // long division, remainder must vanish
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], m);
    let mut q = vec![0u64; r.len() - db];
    while r.len() > db {
        let factor = mul_mod(*r.last().unwrap(), lead_inv, m);
        let shift = r.len() - 1 - db;
        q[shift] = factor;
        for i in 0..=db {
            r[shift + i] = sub_mod(r[shift + i], mul_mod(factor, b[i], m), m);
        }
        r.pop();
        poly_trim(&mut r);
        if r.len() <= db && poly_is_zero(&r) {
            break;
        }
    }
    q
}

// ---- dense matrices over GF(ell) ----

#[derive(Clone, Debug)]
pub struct ModMat {
    pub n: usize,
    pub a: Vec<u64>,
}

impl ModMat {
    pub fn zero(n: usize) -> Self {
        ModMat { n, a: vec![0; n * n] }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.a[i * self.n + j] = v;
    }

    pub fn mul(&self, other: &ModMat, m: u64) -> ModMat {
        let n = self.n;
        let mut out = ModMat::zero(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.at(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    let y = other.at(k, j);
                    if y != 0 {
                        let idx = i * n + j;
                        out.a[idx] = add_mod(out.a[idx], mul_mod(x, y, m), m);
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self, m: u64) -> u64 {
        let mut t = 0;
        for i in 0..self.n {
            t = add_mod(t, self.at(i, i), m);
        }
        t
    }

    /// Matrix-vector product A v.
    pub fn apply(&self, v: &[u64], m: u64) -> Vec<u64> {
        let n = self.n;
        let mut out = vec![0u64; n];
        for i in 0..n {
            let mut acc = 0u64;
            for j in 0..n {
                let x = self.at(i, j);
                if x != 0 && v[j] != 0 {
                    acc = add_mod(acc, mul_mod(x, v[j], m), m);
                }
            }
            out[i] = acc;
        }
        out
    }
}

/// Characteristic polynomial via Newton's identities from power-sum traces;
/// requires ell > n. Returned lowest-first with leading coefficient 1.
pub fn char_poly(a: &ModMat, m: u64) -> Vec<u64> {
    let n = a.n;
    assert!((n as u64) < m, "modulus must exceed the dimension");
    // power sums s_1..s_n
    let mut powers = Vec::with_capacity(n);
    let mut cur = a.clone();
    for _ in 0..n {
        powers.push(cur.trace(m));
        cur = cur.mul(a, m);
    }
    // e_k by Newton: k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} s_i
    let mut e = vec![0u64; n + 1];
    e[0] = 1;
    for k in 1..=n {
        let mut acc = 0u64;
        for i in 1..=k {
            let term = mul_mod(e[k - i], powers[i - 1], m);
            if i % 2 == 1 {
                acc = add_mod(acc, term, m);
            } else {
                acc = sub_mod(acc, term, m);
            }
        }
        e[k] = mul_mod(acc, inv_mod(k as u64, m), m);
    }
    // char poly = sum (-1)^k e_k x^(n-k)
    let mut cp = vec![0u64; n + 1];
    for k in 0..=n {
        let coeff = if k % 2 == 0 { e[k] } else { sub_mod(0, e[k], m) };
        cp[n - k] = coeff;
    }
    cp
}

/// Basis of the kernel of A, as column vectors.
pub fn kernel(a: &ModMat, m: u64) -> Vec<Vec<u64>> {
    let n = a.n;
    let mut mat = a.a.clone();
    let mut pivot_cols = Vec::new();
    let mut row = 0usize;
    for col in 0..n {
        let mut pr = None;
        for r in row..n {
            if mat[r * n + col] != 0 {
                pr = Some(r);
                break;
            }
        }
        let Some(pr) = pr else { continue };
        for j in 0..n {
            mat.swap(pr * n + j, row * n + j);
        }
        let inv = inv_mod(mat[row * n + col], m);
        for j in 0..n {
            mat[row * n + j] = mul_mod(mat[row * n + j], inv, m);
        }
        for r in 0..n {
            if r != row && mat[r * n + col] != 0 {
                let f = mat[r * n + col];
                for j in 0..n {
                    let s = mul_mod(f, mat[row * n + j], m);
                    mat[r * n + j] = sub_mod(mat[r * n + j], s, m);
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let mut basis = Vec::new();
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    for &fc in &free {
        let mut v = vec![0u64; n];
        v[fc] = 1;
        for (ri, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = sub_mod(0, mat[ri * n + fc], m);
        }
        basis.push(v);
    }
    basis
}
