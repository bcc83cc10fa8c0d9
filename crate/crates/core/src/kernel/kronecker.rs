use crate::error::{domain, Result};

/// Real primitive character `n -> (D/n)` attached to a fundamental
/// discriminant `D`, or the trivial character for `D = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KroneckerCharacter {
    modulus: i64,
}

impl KroneckerCharacter {
    pub fn new(discriminant: i64) -> Result<Self> {
        if !is_fundamental_discriminant(discriminant) {
            return Err(domain(format!(
                "{discriminant} is neither 1 nor a fundamental discriminant"
            )));
        }
        Ok(Self {
            modulus: discriminant,
        })
    }

    pub fn trivial() -> Self {
        Self { modulus: 1 }
    }

    /// The discriminant `D`.
    pub fn discriminant(&self) -> i64 {
        self.modulus
    }

    /// The period `|D|`.
    pub fn conductor(&self) -> u64 {
        self.modulus.unsigned_abs()
    }

    pub fn is_trivial(&self) -> bool {
        self.modulus == 1
    }

    pub fn eval(&self, n: u64) -> i8 {
        kronecker(self.modulus, n)
    }
}

/// Kronecker symbol `(D/n)` for `n >= 1`.
pub fn kronecker_chi(discriminant: i64, n: i64) -> Result<i8> {
    if n <= 0 {
        return Err(domain(format!("kronecker_chi: n = {n} must be positive")));
    }
    Ok(kronecker(discriminant, n as u64))
}

pub(crate) fn kronecker(d: i64, n: u64) -> i8 {
    let twos = n.trailing_zeros();
    let odd = n >> twos;
    let mut sign = 1;
    if twos > 0 {
        if d % 2 == 0 {
            return 0;
        }
        let at_two = match d.rem_euclid(8) {
            1 | 7 => 1,
            _ => -1,
        };
        if twos % 2 == 1 {
            sign = at_two;
        }
    }
    sign * jacobi(d.rem_euclid(odd as i64) as u64, odd)
}

/// Jacobi symbol `(a/n)` for odd `n`, by quadratic reciprocity.
fn jacobi(mut a: u64, mut n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    a %= n;
    let mut result = 1;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a %= n;
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// Trial division up to `sqrt|d|`.
pub fn is_squarefree(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    let mut m = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// `D = 1`, or `D = 1 mod 4` squarefree, or `D = 4m` with `m = 2, 3 mod 4`
/// squarefree.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 1 {
        return true;
    }
    if d == 0 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m)
        }
        _ => false,
    }
}
