//! Arithmetic in `F_q` and `F_q[T]`, enough to enumerate monic irreducible
//! polynomials. Elements of `F_q`, `q = p^k`, are encoded as integers in
//! `0..q` whose base-`p` digits are the coefficients of a polynomial in a
//! fixed generator.

/// `Some((p, k))` when `q = p^k` with `p` prime and `k >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = smallest_prime_factor(q);
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && smallest_prime_factor(n) == n
}

fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    n
}

#[derive(Debug, Clone)]
pub struct FiniteField {
    p: u64,
    degree: u32,
    q: u64,
    // Monic irreducible of degree `degree` over F_p, low to high, without
    // the leading 1. Empty for prime fields.
    reduction: Vec<u64>,
}

impl FiniteField {
    /// Panics unless `q` is a prime power; callers validate first.
    pub fn new(q: u64) -> Self {
        let (p, degree) = prime_power(q).expect("field order must be a prime power");
        let reduction = if degree == 1 {
            Vec::new()
        } else {
            let prime_field = FiniteField {
                p,
                degree: 1,
                q: p,
                reduction: Vec::new(),
            };
            let mut found = None;
            for index in 0..p.pow(degree) {
                let poly = monic_from_index(index, degree as usize, p);
                if prime_field.is_irreducible(&poly) {
                    found = Some(poly[..degree as usize].to_vec());
                    break;
                }
            }
            found.expect("an irreducible polynomial of every degree exists")
        };
        Self {
            p,
            degree,
            q,
            reduction,
        }
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    fn digits(&self, x: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.degree as usize);
        let mut x = x;
        for _ in 0..self.degree {
            out.push(x % self.p);
            x /= self.p;
        }
        out
    }

    fn pack_digits(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.degree == 1 {
            return (a + b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.pack_digits(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.degree == 1 {
            return (self.p - a % self.p) % self.p;
        }
        let d: Vec<u64> = self
            .digits(a)
            .iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        self.pack_digits(&d)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if self.degree == 1 {
            return ((a as u128 * b as u128) % self.p as u128) as u64;
        }
        let k = self.degree as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // alpha^k = -(reduction)
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c != 0 {
                prod[top] = 0;
                for (i, r) in self.reduction.iter().enumerate() {
                    let idx = top - k + i;
                    prod[idx] = (prod[idx] + self.p * self.p - c * r % self.p) % self.p;
                }
            }
        }
        self.pack_digits(&prod[..k])
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.q - 2)
    }

    fn trim(poly: &mut Vec<u64>) {
        while poly.len() > 1 && *poly.last().unwrap() == 0 {
            poly.pop();
        }
    }

    /// Remainder of `a` modulo `m` (`m` nonzero).
    pub fn poly_rem(&self, a: &[u64], m: &[u64]) -> Vec<u64> {
        let mut r = a.to_vec();
        Self::trim(&mut r);
        let dm = m.len() - 1;
        let lead_inv = self.inv(m[dm]);
        while r.len() > dm && !(r.len() == 1 && r[0] == 0) {
            let shift = r.len() - 1 - dm;
            let factor = self.mul(*r.last().unwrap(), lead_inv);
            for (i, &c) in m.iter().enumerate() {
                r[shift + i] = self.sub(r[shift + i], self.mul(factor, c));
            }
            r.pop();
            Self::trim(&mut r);
        }
        if r.is_empty() {
            r.push(0);
        }
        r
    }

    pub fn poly_mul_mod(&self, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
        let mut prod = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = self.add(prod[i + j], self.mul(x, y));
            }
        }
        self.poly_rem(&prod, m)
    }

    fn poly_pow_mod(&self, base: &[u64], mut exp: u64, m: &[u64]) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = self.poly_rem(base, m);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.poly_mul_mod(&acc, &b, m);
            }
            b = self.poly_mul_mod(&b, &b, m);
            exp >>= 1;
        }
        acc
    }

    fn poly_gcd(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        Self::trim(&mut a);
        Self::trim(&mut b);
        while !(b.len() == 1 && b[0] == 0) {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        a
    }

    /// Rabin's test: a monic `f` of degree `n` is irreducible iff
    /// `T^(q^n) = T mod f` and `gcd(T^(q^(n/r)) - T, f) = 1` for every
    /// prime `r | n`.
    pub fn is_irreducible(&self, f: &[u64]) -> bool {
        let n = f.len() - 1;
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let t = vec![0, 1];
        // frob[i] = T^(q^i) mod f
        let mut frob = vec![self.poly_rem(&t, f)];
        for i in 1..=n {
            let next = self.poly_pow_mod(&frob[i - 1], self.q, f);
            frob.push(next);
        }
        let mut last = frob[n].clone();
        Self::trim(&mut last);
        if last != self.poly_rem(&t, f) {
            return false;
        }
        let mut m = n;
        let mut r = 2;
        while m > 1 {
            if m.is_multiple_of(r) {
                while m.is_multiple_of(r) {
                    m /= r;
                }
                let mut diff = frob[n / r].clone();
                diff.resize(diff.len().max(2), 0);
                diff[1] = self.sub(diff[1], 1);
                Self::trim(&mut diff);
                let g = self.poly_gcd(f, &diff);
                if g.len() > 1 {
                    return false;
                }
            }
            r += 1;
        }
        true
    }

    /// Monic polynomials of degree `degree` that are irreducible, in
    /// ascending index order (see [`monic_index`]).
    pub fn monic_irreducibles(&self, degree: usize) -> Vec<Vec<u64>> {
        let count = self.q.pow(degree as u32);
        (0..count)
            .map(|idx| monic_from_index(idx, degree, self.q))
            .filter(|f| self.is_irreducible(f))
            .collect()
    }
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-`q` digits of `index`, low to high.
pub fn monic_from_index(mut index: u64, degree: usize, q: u64) -> Vec<u64> {
    let mut poly = Vec::with_capacity(degree + 1);
    for _ in 0..degree {
        poly.push(index % q);
        index /= q;
    }
    poly.push(1);
    poly
}

/// Inverse of [`monic_from_index`].
pub fn monic_index(poly: &[u64], q: u64) -> u64 {
    poly[..poly.len() - 1]
        .iter()
        .rev()
        .fold(0, |acc, &c| acc * q + c)
}
