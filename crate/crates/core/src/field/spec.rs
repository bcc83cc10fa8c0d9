//! Field-spec strings:
//!
//! ```text
//! Q
//! Q(sqrt=<d>)
//! Fq(T)?q=<q>
//! curve?q=<q>&L=<a0,a1,...,a2g>
//! curve?q=<q>&N=<N1,...,Ng>
//! ```

use num_bigint::BigInt;

use super::{
    lpoly_from_point_counts, make_curve_function_field, make_quadratic,
    make_rational_function_field, make_rationals, FieldDescriptor, LPolynomial, WeilBoundWarning,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct ParsedField {
    pub field: FieldDescriptor,
    /// Weil-bound diagnostics from `N=` point counts.
    pub warnings: Vec<WeilBoundWarning>,
}

fn parse_error(token: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        token: token.to_string(),
        reason: reason.into(),
    }
}

fn number<T: std::str::FromStr>(token: &str, what: &str) -> Result<T> {
    token
        .trim()
        .parse()
        .map_err(|_| parse_error(token, format!("expected {what}")))
}

fn number_list<T: std::str::FromStr>(token: &str, what: &str) -> Result<Vec<T>> {
    if token.trim().is_empty() {
        return Ok(Vec::new());
    }
    token.split(',').map(|t| number(t, what)).collect()
}

/// Parses a field spec. Construction errors (non-squarefree `d`, asymmetric
/// L-polynomials, ...) are passed through unchanged.
pub fn parse_field_spec(spec: &str) -> Result<ParsedField> {
    let spec = spec.trim();
    let plain = |field: FieldDescriptor| ParsedField {
        field,
        warnings: Vec::new(),
    };

    if spec == "Q" {
        return Ok(plain(make_rationals().into()));
    }
    if let Some(rest) = spec.strip_prefix("Q(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| parse_error(spec, "missing closing `)`"))?;
        let d = inner
            .strip_prefix("sqrt=")
            .ok_or_else(|| parse_error(inner, "expected `sqrt=<d>`"))?;
        let d: i64 = number(d, "an integer d")?;
        return Ok(plain(make_quadratic(d)?.into()));
    }

    let (head, query) = spec.split_once('?').ok_or_else(|| {
        parse_error(
            spec,
            "expected `Q`, `Q(sqrt=d)`, `Fq(T)?...` or `curve?...`",
        )
    })?;
    let mut q = None;
    let mut lcoeffs = None;
    let mut counts = None;
    for pair in query.split('&') {
        let (key, value) = pair
            .split_once('=')
            .ok_or_else(|| parse_error(pair, "expected `key=value`"))?;
        let slot_taken = match key {
            "q" => q
                .replace(number::<u64>(value, "a prime power q")?)
                .is_some(),
            "L" if head == "curve" => lcoeffs
                .replace(number_list::<BigInt>(value, "integer coefficients")?)
                .is_some(),
            "N" if head == "curve" => counts
                .replace(number_list::<u64>(value, "nonnegative point counts")?)
                .is_some(),
            _ => return Err(parse_error(key, format!("unknown parameter for `{head}`"))),
        };
        if slot_taken {
            return Err(parse_error(key, "parameter given twice"));
        }
    }
    let q = q.ok_or_else(|| parse_error(query, "missing `q=`"))?;

    match head {
        "Fq(T)" => Ok(plain(make_rational_function_field(q)?.into())),
        "curve" => match (lcoeffs, counts) {
            (Some(coeffs), None) => {
                let lpoly = LPolynomial::new(coeffs)?;
                Ok(plain(make_curve_function_field(q, lpoly)?.into()))
            }
            (None, Some(counts)) => {
                let built = lpoly_from_point_counts(q, counts.len(), &counts)?;
                Ok(ParsedField {
                    field: make_curve_function_field(q, built.lpoly)?.into(),
                    warnings: built.warnings,
                })
            }
            _ => Err(parse_error(
                query,
                "curve needs exactly one of `L=` or `N=`",
            )),
        },
        _ => Err(parse_error(head, "unknown field family")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::covolume;

    fn token_of(err: Error) -> String {
        match err {
            Error::Parse { token, .. } => token,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn accepted_forms() {
        assert_eq!(
            parse_field_spec("Q").unwrap().field,
            make_rationals().into()
        );
        let gauss = parse_field_spec("Q(sqrt=-1)").unwrap().field;
        assert_eq!(covolume(&gauss).to_string(), "2");
        assert_eq!(
            parse_field_spec("Fq(T)?q=4").unwrap().field,
            make_rational_function_field(4).unwrap().into()
        );
        let curve = parse_field_spec("curve?q=5&L=1,3,5").unwrap().field;
        let from_counts = parse_field_spec("curve?N=9&q=5").unwrap();
        assert_eq!(curve, from_counts.field);
        assert!(from_counts.warnings.is_empty());
        let genus0 = parse_field_spec("curve?q=3&N=").unwrap().field;
        assert_eq!(genus0, make_rational_function_field(3).unwrap().into());
    }

    #[test]
    fn errors_name_the_offending_token() {
        assert_eq!(token_of(parse_field_spec("Q(sqrt=x)").unwrap_err()), "x");
        assert_eq!(
            token_of(parse_field_spec("Q(cbrt=2)").unwrap_err()),
            "cbrt=2"
        );
        assert_eq!(token_of(parse_field_spec("Fq(T)?p=5").unwrap_err()), "p");
        assert_eq!(
            token_of(parse_field_spec("curve?q=5&L=1,x,5").unwrap_err()),
            "x"
        );
        assert_eq!(token_of(parse_field_spec("R").unwrap_err()), "R");
        assert_eq!(token_of(parse_field_spec("K?q=5").unwrap_err()), "K");
        assert_eq!(
            token_of(parse_field_spec("Fq(T)?q=5&q=7").unwrap_err()),
            "q"
        );
    }

    #[test]
    fn construction_errors_pass_through() {
        assert!(matches!(
            parse_field_spec("Q(sqrt=12)"),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            parse_field_spec("Fq(T)?q=6"),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            parse_field_spec("curve?q=5&L=1,3,7"),
            Err(Error::Symmetry { index: 0, .. })
        ));
    }
}
