use std::fmt;

use num_complex::Complex64;

use super::finite::{is_prime, monic_index, FiniteField};
use super::{FieldDescriptor, FunctionFieldDescriptor, NumberFieldDescriptor, NumberFieldKind};
use crate::error::{domain, Result};
use crate::kernel::POLE_RADIUS;

/// How a rational prime decomposes in a quadratic field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SplittingType {
    /// Two places, each with residue field `F_p`.
    Split,
    /// One place with residue field `F_{p^2}`.
    Inert,
    /// One place with residue field `F_p`.
    Ramified,
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplittingType::Split => "split",
            SplittingType::Inert => "inert",
            SplittingType::Ramified => "ramified",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PlaceKind {
    /// A finite place of a number field above the rational prime `p`.
    /// `splitting` is `None` over `Q`; `branch` tells apart the two places
    /// above a split prime.
    RationalPrime {
        p: u64,
        splitting: Option<SplittingType>,
        branch: u8,
    },
    /// The finite place of `F_q(T)` attached to a monic irreducible
    /// polynomial, coefficients low to high in the encoding of
    /// [`FiniteField`].
    MonicIrreducible { coefficients: Vec<u64> },
    /// The place at infinity of `F_q(T)`.
    Infinite,
}

/// A finite place `v` together with the size `q_v` of its residue field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Place {
    pub kind: PlaceKind,
    pub residual_cardinality: u64,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            PlaceKind::RationalPrime {
                p, splitting: None, ..
            } => write!(f, "({p})"),
            PlaceKind::RationalPrime {
                p,
                splitting: Some(SplittingType::Split),
                branch,
            } => write!(f, "({p}) split #{}", branch + 1),
            PlaceKind::RationalPrime {
                p,
                splitting: Some(kind),
                ..
            } => write!(f, "({p}) {kind}"),
            PlaceKind::MonicIrreducible { coefficients } => {
                let mut terms = Vec::new();
                for (i, &c) in coefficients.iter().enumerate().rev() {
                    if c == 0 {
                        continue;
                    }
                    let coeff = if c == 1 && i > 0 {
                        String::new()
                    } else {
                        c.to_string()
                    };
                    terms.push(match i {
                        0 => coeff,
                        1 => format!("{coeff}T"),
                        _ => format!("{coeff}T^{i}"),
                    });
                }
                f.write_str(&terms.join("+"))
            }
            PlaceKind::Infinite => f.write_str("inf"),
        }
    }
}

/// Decomposition of the prime `p` in a quadratic field: ramified iff
/// `p | D`, otherwise split or inert as `chi_D(p) = +1` or `-1`.
pub fn splitting_type(field: &NumberFieldDescriptor, p: u64) -> Result<SplittingType> {
    if !is_prime(p) {
        return Err(domain(format!("{p} is not prime")));
    }
    if field.kind == NumberFieldKind::Rationals {
        return Err(domain("splitting_type needs a quadratic field"));
    }
    Ok(match field.character().eval(p) {
        0 => SplittingType::Ramified,
        1 => SplittingType::Split,
        _ => SplittingType::Inert,
    })
}

fn places_above(field: &NumberFieldDescriptor, p: u64) -> Vec<Place> {
    let prime = |splitting, branch, q_v| Place {
        kind: PlaceKind::RationalPrime {
            p,
            splitting,
            branch,
        },
        residual_cardinality: q_v,
    };
    match field.kind {
        NumberFieldKind::Rationals => vec![prime(None, 0, p)],
        NumberFieldKind::Quadratic { .. } => {
            let kind = splitting_type(field, p).expect("p is prime");
            match kind {
                SplittingType::Split => vec![prime(Some(kind), 0, p), prime(Some(kind), 1, p)],
                SplittingType::Inert => vec![prime(Some(kind), 0, p * p)],
                SplittingType::Ramified => vec![prime(Some(kind), 0, p)],
            }
        }
    }
}

fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// All places with `q_v <= norm_bound`, ordered by `q_v`, then by prime and
/// branch (number fields) or with the infinite place first and polynomials
/// by coefficient index (function fields).
///
/// Curve fields of positive genus carry no model to enumerate places from
/// and are rejected.
pub fn enumerate_places(field: &FieldDescriptor, norm_bound: u64) -> Result<Vec<Place>> {
    match field {
        FieldDescriptor::Number(nf) => {
            let mut places: Vec<Place> = primes_up_to(norm_bound)
                .into_iter()
                .flat_map(|p| places_above(nf, p))
                .filter(|v| v.residual_cardinality <= norm_bound)
                .collect();
            places.sort_by_key(|v| match v.kind {
                PlaceKind::RationalPrime { p, branch, .. } => (v.residual_cardinality, p, branch),
                _ => unreachable!(),
            });
            Ok(places)
        }
        FieldDescriptor::Function(ff) => {
            if !ff.is_rational() {
                return Err(domain(format!(
                    "places of the genus-{} curve field are not enumerable without a curve model",
                    ff.genus()
                )));
            }
            Ok(rational_function_field_places(ff, norm_bound))
        }
    }
}

fn rational_function_field_places(ff: &FunctionFieldDescriptor, norm_bound: u64) -> Vec<Place> {
    let q = ff.q();
    let mut places = Vec::new();
    if q > norm_bound {
        return places;
    }
    places.push(Place {
        kind: PlaceKind::Infinite,
        residual_cardinality: q,
    });
    let field = FiniteField::new(q);
    let mut degree = 1usize;
    let mut q_v = q;
    while q_v <= norm_bound {
        let mut polys = field.monic_irreducibles(degree);
        polys.sort_by_key(|f| monic_index(f, q));
        places.extend(polys.into_iter().map(|coefficients| Place {
            kind: PlaceKind::MonicIrreducible { coefficients },
            residual_cardinality: q_v,
        }));
        degree += 1;
        q_v = match q_v.checked_mul(q) {
            Some(v) => v,
            None => break,
        };
    }
    places
}

fn check_membership(field: &FieldDescriptor, place: &Place) -> Result<()> {
    let ok = match (field, &place.kind) {
        (FieldDescriptor::Number(nf), PlaceKind::RationalPrime { p, .. }) => {
            is_prime(*p) && places_above(nf, *p).contains(place)
        }
        (FieldDescriptor::Function(ff), PlaceKind::Infinite) => {
            place.residual_cardinality == ff.q()
        }
        (FieldDescriptor::Function(ff), PlaceKind::MonicIrreducible { coefficients }) => {
            let degree = coefficients.len().saturating_sub(1) as u32;
            degree >= 1
                && coefficients.last() == Some(&1)
                && coefficients.iter().all(|&c| c < ff.q())
                && ff.q().checked_pow(degree) == Some(place.residual_cardinality)
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(domain(format!("place {place} does not belong to {field}")))
    }
}

fn factor(q_v: u64, s: Complex64) -> Result<Complex64> {
    let denom = 1.0 - (-s * (q_v as f64).ln()).exp();
    if denom.norm() < POLE_RADIUS {
        return Err(domain(format!(
            "1 - {q_v}^(-s) is within {POLE_RADIUS} of 0 at s = {s}"
        )));
    }
    Ok(1.0 / denom)
}

/// `(1 - q_v^(-s))^(-1)` for a single place.
pub fn local_euler_factor(
    field: &FieldDescriptor,
    place: &Place,
    s: Complex64,
) -> Result<Complex64> {
    check_membership(field, place)?;
    factor(place.residual_cardinality, s)
}

/// Product of the local factors over every place above the rational prime
/// `p`: `(1 - p^-s)^-2` (split), `(1 - p^-2s)^-1` (inert) or
/// `(1 - p^-s)^-1` (ramified, and over `Q`).
pub fn prime_euler_factor(
    field: &NumberFieldDescriptor,
    p: u64,
    s: Complex64,
) -> Result<Complex64> {
    if !is_prime(p) {
        return Err(domain(format!("{p} is not prime")));
    }
    places_above(field, p)
        .iter()
        .try_fold(Complex64::new(1.0, 0.0), |acc, v| {
            Ok(acc * factor(v.residual_cardinality, s)?)
        })
}

/// `prod_{q_v <= norm_bound} (1 - q_v^(-s))^(-1)`, for `Re s > 1`.
pub fn truncated_euler_product(
    field: &FieldDescriptor,
    s: Complex64,
    norm_bound: u64,
) -> Result<Complex64> {
    if s.re <= 1.0 {
        return Err(domain(format!(
            "the Euler product needs Re s > 1, got s = {s}"
        )));
    }
    enumerate_places(field, norm_bound)?
        .iter()
        .try_fold(Complex64::new(1.0, 0.0), |acc, v| {
            Ok(acc * factor(v.residual_cardinality, s)?)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{make_quadratic, make_rational_function_field, make_rationals};
    use crate::kernel::kronecker_chi;
    use crate::Error;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn norms(places: &[Place]) -> Vec<u64> {
        places.iter().map(|v| v.residual_cardinality).collect()
    }

    // Number of solutions of x^2 = D mod p, for odd p not dividing D.
    fn square_roots_mod(d: i64, p: u64) -> usize {
        (0..p)
            .filter(|x| ((x * x) as i64 - d).rem_euclid(p as i64) == 0)
            .count()
    }

    #[test]
    fn splitting_in_gaussian_field() {
        let gauss = make_quadratic(-1).unwrap();
        assert_eq!(splitting_type(&gauss, 5).unwrap(), SplittingType::Split);
        assert_eq!(splitting_type(&gauss, 3).unwrap(), SplittingType::Inert);
        assert_eq!(splitting_type(&gauss, 2).unwrap(), SplittingType::Ramified);
        assert!(matches!(splitting_type(&gauss, 9), Err(Error::Domain(_))));
        assert!(splitting_type(&make_rationals(), 5).is_err());
    }

    #[test]
    fn splitting_matches_square_root_count() {
        // Odd p not dividing D splits iff x^2 = D has two roots mod p.
        for d in [-1, -3, 5, 2, 3, -5] {
            let nf = make_quadratic(d).unwrap();
            for p in primes_up_to(200).into_iter().filter(|&p| p > 2) {
                let kind = splitting_type(&nf, p).unwrap();
                if nf.discriminant % p as i64 == 0 {
                    assert_eq!(kind, SplittingType::Ramified);
                    continue;
                }
                let expected = if square_roots_mod(nf.discriminant, p) == 2 {
                    SplittingType::Split
                } else {
                    SplittingType::Inert
                };
                assert_eq!(kind, expected, "d = {d}, p = {p}");
            }
        }
    }

    #[test]
    fn ramified_primes_are_discriminant_divisors() {
        for (d, ramified) in [
            (-1, vec![2]),
            (5, vec![5]),
            (2, vec![2]),
            (-3, vec![3]),
            (3, vec![2, 3]),
        ] {
            let nf = make_quadratic(d).unwrap();
            let found: Vec<u64> = primes_up_to(100)
                .into_iter()
                .filter(|&p| splitting_type(&nf, p).unwrap() == SplittingType::Ramified)
                .collect();
            assert_eq!(found, ramified, "d = {d}");
        }
    }

    #[test]
    fn enumerations() {
        let q: FieldDescriptor = make_rationals().into();
        assert_eq!(norms(&enumerate_places(&q, 10).unwrap()), vec![2, 3, 5, 7]);

        let gauss: FieldDescriptor = make_quadratic(-1).unwrap().into();
        let places = enumerate_places(&gauss, 10).unwrap();
        assert_eq!(norms(&places), vec![2, 5, 5, 9]);

        let f2: FieldDescriptor = make_rational_function_field(2).unwrap().into();
        let places = enumerate_places(&f2, 4).unwrap();
        let labels: Vec<String> = places.iter().map(|v| v.to_string()).collect();
        assert_eq!(labels, vec!["inf", "T", "T+1", "T^2+T+1"]);
        assert_eq!(norms(&places), vec![2, 2, 2, 4]);

        assert!(enumerate_places(&q, 1).unwrap().is_empty());
    }

    #[test]
    fn local_factors() {
        let q: FieldDescriptor = make_rationals().into();
        let two = &enumerate_places(&q, 2).unwrap()[0];
        let v = local_euler_factor(&q, two, c(2.0, 0.0)).unwrap();
        assert!((v.re - 4.0 / 3.0).abs() < 1e-15);

        let gauss: FieldDescriptor = make_quadratic(-1).unwrap().into();
        let nine = enumerate_places(&gauss, 9)
            .unwrap()
            .into_iter()
            .find(|v| v.residual_cardinality == 9)
            .unwrap();
        let v = local_euler_factor(&gauss, &nine, c(2.0, 0.0)).unwrap();
        assert!((v.re - 81.0 / 80.0).abs() < 1e-15);
        // twisted factorization (1 - p^-s)^-1 (1 - chi(p) p^-s)^-1 at p = 3
        let twisted = 1.0 / ((1.0 - 1.0 / 9.0) * (1.0 + 1.0 / 9.0));
        assert!((v.re - twisted).abs() < 1e-15);

        let f5: FieldDescriptor = make_rational_function_field(5).unwrap().into();
        let linear = &enumerate_places(&f5, 5).unwrap()[1];
        let v = local_euler_factor(&f5, linear, c(2.0, 0.0)).unwrap();
        assert!((v.re - 25.0 / 24.0).abs() < 1e-15);

        // a place of another field is refused
        assert!(local_euler_factor(&q, &nine, c(2.0, 0.0)).is_err());
        assert!(local_euler_factor(&gauss, linear, c(2.0, 0.0)).is_err());
        // 1 - 2^(-s) vanishes at s = 0
        assert!(local_euler_factor(&q, two, c(0.0, 0.0)).is_err());
    }

    #[test]
    fn prime_factors_match_twisted_factorization() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for d in [-1, -3, 5, 2] {
            let nf = make_quadratic(d).unwrap();
            for _ in 0..10 {
                let s = c(rng.gen_range(1.05..4.0), rng.gen_range(-20.0..20.0));
                for p in primes_up_to(200) {
                    let chi = f64::from(kronecker_chi(nf.discriminant, p as i64).unwrap());
                    let ps = (-s * (p as f64).ln()).exp();
                    let want = 1.0 / ((1.0 - ps) * (1.0 - chi * ps));
                    let got = prime_euler_factor(&nf, p, s).unwrap();
                    assert!(
                        (got - want).norm() <= 1e-12 * want.norm(),
                        "d = {d}, p = {p}, s = {s}"
                    );
                }
            }
        }
    }

    #[test]
    fn truncated_products() {
        let q: FieldDescriptor = make_rationals().into();
        let z3 = 1.202_056_903_159_594_2;
        let v = truncated_euler_product(&q, c(3.0, 0.0), 100).unwrap();
        assert!((v.re - z3).abs() < 5.1e-5);

        let mut last = 0.0;
        for bound in [10, 100, 1000, 10_000] {
            let v = truncated_euler_product(&q, c(2.0, 0.0), bound).unwrap().re;
            assert!(v > last && v < std::f64::consts::PI.powi(2) / 6.0);
            last = v;
        }

        let f5: FieldDescriptor = make_rational_function_field(5).unwrap().into();
        let v = truncated_euler_product(&f5, c(2.0, 0.0), 25).unwrap();
        assert!(v.re < 125.0 / 96.0 && 125.0 / 96.0 - v.re < 5e-3);

        assert!(matches!(
            truncated_euler_product(&q, c(1.0, 3.0), 100),
            Err(Error::Domain(_))
        ));
    }
}
