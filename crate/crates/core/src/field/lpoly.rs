use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{domain, Error, Result};

/// Integer numerator `P(T) = a_0 + a_1 T + ... + a_{2g} T^{2g}` of the zeta
/// function of a function field, `Z(T) = P(T) / ((1 - T)(1 - qT))` with
/// `T = q^(-s)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LPolynomial {
    coefficients: Vec<BigInt>,
}

impl LPolynomial {
    /// Requires `a_0 = 1` and an even degree. The functional symmetry
    /// depends on `q` and is checked by [`LPolynomial::symmetry_violation`].
    pub fn new(coefficients: Vec<BigInt>) -> Result<Self> {
        match coefficients.first() {
            None => return Err(domain("L-polynomial has no coefficients")),
            Some(a0) if !a0.is_one() => {
                return Err(domain(format!(
                    "L-polynomial constant term is {a0}, expected 1"
                )))
            }
            _ => {}
        }
        if coefficients.len().is_multiple_of(2) {
            return Err(domain(format!(
                "L-polynomial has odd degree {}",
                coefficients.len() - 1
            )));
        }
        Ok(Self { coefficients })
    }

    pub fn from_i64(coefficients: &[i64]) -> Result<Self> {
        Self::new(coefficients.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        Self {
            coefficients: vec![BigInt::one()],
        }
    }

    /// Skips every check. Only meant for building deliberately invalid
    /// inputs in tests.
    #[doc(hidden)]
    pub fn from_coefficients_unchecked(coefficients: Vec<BigInt>) -> Self {
        Self { coefficients }
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn genus(&self) -> usize {
        self.degree() / 2
    }

    /// First index `i` where `a_{2g-i} = q^(g-i) a_i` fails, if any.
    ///
    /// For `i > g` the relation is read as `q^(i-g) a_{2g-i} = a_i` so that
    /// everything stays integral.
    pub fn symmetry_violation(&self, q: u64) -> Option<usize> {
        let two_g = self.degree();
        let g = two_g / 2;
        let q = BigInt::from(q);
        let a = &self.coefficients;
        (0..=two_g).find(|&i| {
            if i <= g {
                a[two_g - i] != q.pow((g - i) as u32) * &a[i]
            } else {
                q.pow((i - g) as u32) * &a[two_g - i] != a[i]
            }
        })
    }

    pub(crate) fn check_symmetry(&self, q: u64) -> Result<()> {
        match self.symmetry_violation(q) {
            None => Ok(()),
            Some(index) => Err(Error::Symmetry {
                q,
                g: self.genus(),
                index,
                mirror: self.degree() - index,
            }),
        }
    }

    /// Coefficients as binary64, for numerical evaluation.
    pub fn coefficients_f64(&self) -> Vec<f64> {
        self.coefficients
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect()
    }
}

impl fmt::Display for LPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coefficients.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

/// Diagnostic raised when a coefficient exceeds the Weil bound
/// `|a_i| <= C(2g, i) q^(i/2)`. Not fatal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeilBoundWarning {
    pub index: usize,
    pub coefficient: BigInt,
}

impl fmt::Display for WeilBoundWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient a_{} = {} exceeds the Weil bound",
            self.index, self.coefficient
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LPolynomialFromCounts {
    pub lpoly: LPolynomial,
    pub warnings: Vec<WeilBoundWarning>,
}

/// Builds `P(T)` from the point counts `N_1, ..., N_g` over `F_{q^m}`.
///
/// With power sums `p_m = q^m + 1 - N_m` of the inverse roots, Newton's
/// identities give `m a_m = -sum_{i=1}^m a_{m-i} p_i` for `m <= g`; the
/// upper half follows from `a_{2g-i} = q^(g-i) a_i`.
pub fn lpoly_from_point_counts(
    q: u64,
    genus: usize,
    counts: &[u64],
) -> Result<LPolynomialFromCounts> {
    if counts.len() != genus {
        return Err(domain(format!(
            "expected {genus} point counts for genus {genus}, got {}",
            counts.len()
        )));
    }
    let qb = BigInt::from(q);
    let power_sums: Vec<BigInt> = counts
        .iter()
        .enumerate()
        .map(|(i, &n)| qb.pow(i as u32 + 1) + 1 - BigInt::from(n))
        .collect();

    let mut a = vec![BigInt::zero(); 2 * genus + 1];
    a[0] = BigInt::one();
    for m in 1..=genus {
        let mut acc = BigInt::zero();
        for i in 1..=m {
            acc += &a[m - i] * &power_sums[i - 1];
        }
        let (quot, rem) = (-acc).div_rem(&BigInt::from(m));
        if !rem.is_zero() {
            return Err(domain(format!(
                "point counts give a non-integral coefficient a_{m}"
            )));
        }
        a[m] = quot;
    }
    for i in 0..genus {
        a[2 * genus - i] = qb.pow((genus - i) as u32) * &a[i];
    }

    let warnings = (1..=genus)
        .filter_map(|i| {
            // |a_i|^2 <= C(2g, i)^2 q^i
            let binom = binomial(2 * genus, i);
            let bound_sq = &binom * &binom * qb.pow(i as u32);
            let ai = a[i].abs();
            (&ai * &ai > bound_sq).then(|| WeilBoundWarning {
                index: i,
                coefficient: a[i].clone(),
            })
        })
        .collect();

    Ok(LPolynomialFromCounts {
        lpoly: LPolynomial { coefficients: a },
        warnings,
    })
}

fn binomial(n: usize, k: usize) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}
