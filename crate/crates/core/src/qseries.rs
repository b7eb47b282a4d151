//! Exact truncated q-series arithmetic over arbitrary-precision integers.
//!
//! A [`TruncatedSeries`] holds coefficients of q^0 .. q^N for a fixed
//! truncation order N; all arithmetic is exact and order-checked.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A power series truncated at a fixed order: `coeffs[n]` is the exact
/// coefficient of q^n for 0 <= n <= order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// The constant series c + 0q + ... up to the given order.
    pub fn constant(c: i64, order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::from(c);
        TruncatedSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(1, order)
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the q^0 term");
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    fn check_order(&self, other: &TruncatedSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(TruncatedSeries { coeffs })
    }

    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_order(other)?;
        let n = self.order();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(TruncatedSeries { coeffs })
    }

    /// Multiplicative inverse by forward substitution. The constant term
    /// must be a unit (+1 or -1) so the inverse stays integral.
    pub fn invert(&self) -> Result<TruncatedSeries> {
        let c0 = &self.coeffs[0];
        if c0 != &BigInt::one() && c0 != &(-BigInt::one()) {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        let n = self.order();
        let mut inv = vec![BigInt::zero(); n + 1];
        inv[0] = c0.clone(); // 1/1 = 1, 1/(-1) = -1
        for m in 1..=n {
            // sum_{i=0}^{m} a_i * b_{m-i} = 0  =>  b_m = -c0 * sum_{i>=1} a_i b_{m-i}
            let mut acc = BigInt::zero();
            for i in 1..=m {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &inv[m - i];
                }
            }
            inv[m] = -c0 * acc;
        }
        Ok(TruncatedSeries { coeffs: inv })
    }

    pub fn pow(&self, e: u32) -> TruncatedSeries {
        let mut acc = TruncatedSeries::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self).unwrap();
        }
        acc
    }
}

/// The truncated finite product prod_{i>=0} (1 - q^{a + i*step}) with
/// factors beyond the truncation order dropped. `step >= 1`.
pub fn pochhammer(a: usize, step: usize, order: usize) -> TruncatedSeries {
    assert!(step >= 1, "pochhammer step must be positive");
    let mut acc = TruncatedSeries::one(order);
    let mut m = a;
    while m <= order {
        // multiply by (1 - q^m) in place
        let mut coeffs = acc.coeffs.clone();
        for n in m..=order {
            let sub = acc.coeffs[n - m].clone();
            coeffs[n] -= sub;
        }
        acc = TruncatedSeries { coeffs };
        m += step;
    }
    acc
}

/// Generating function for k-elongated partition diamonds:
/// (q^2; q^2)_inf^k / (q; q)_inf^{3k+1}, truncated.
pub fn diamond_gf(k: usize, order: usize) -> Result<TruncatedSeries> {
    let num = pochhammer(2, 2, order).pow(k as u32);
    let den = pochhammer(1, 1, order).pow(3 * k as u32 + 1).invert()?;
    num.mul(&den)
}

/// Generating function for overpartitions:
/// (-q; q)_inf / (q; q)_inf = prod (1 + q^m) / (1 - q^m), truncated.
pub fn overpartition_gf(order: usize) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(order);
    for m in 1..=order {
        // multiply by (1 + q^m)
        let mut coeffs = acc.coeffs.clone();
        for n in m..=order {
            let add = acc.coeffs[n - m].clone();
            coeffs[n] += add;
        }
        acc = TruncatedSeries { coeffs };
    }
    acc.mul(&pochhammer(1, 1, order).invert()?)
}

/// Bivariate overpartition generating function
/// prod (1 + z q^m) / (1 - q^m): returns T with T[n][s] the number of
/// overpartitions of n with exactly s overlined parts, 0 <= n <= order.
pub fn bivariate_over_gf(order: usize) -> Vec<Vec<BigInt>> {
    let smax = order + 1;
    let mut t = vec![vec![BigInt::zero(); smax]; order + 1];
    t[0][0] = BigInt::one();
    for m in 1..=order {
        // multiply by (1 + z q^m)
        for n in (m..=order).rev() {
            for s in (1..smax).rev() {
                let add = t[n - m][s - 1].clone();
                t[n][s] += add;
            }
        }
        // divide by (1 - q^m): T'[n][s] = T[n][s] + T'[n-m][s]
        for n in m..=order {
            for s in 0..smax {
                let add = t[n - m][s].clone();
                t[n][s] += add;
            }
        }
    }
    t
}

/// Evaluates a product expression over Pochhammer symbols, e.g.
/// `POCH(2,2)^2 * POCH(1,1)^-7` or `POCH(2,2)^2 / POCH(1,1)^7`.
/// Factors are joined by `*` or `/`; an exponent is an optional signed
/// integer after `^`. Inverted factors must have unit constant term.
pub fn eval_expression(expr: &str, order: usize) -> Result<TruncatedSeries> {
    let mut acc = TruncatedSeries::one(order);
    let mut rest = expr.trim();
    let mut divide_next = false;
    let mut first = true;
    while !rest.is_empty() {
        if !first {
            divide_next = match rest.chars().next() {
                Some('*') => false,
                Some('/') => true,
                _ => return Err(Error::Parse(format!("expected * or / before {rest:?}"))),
            };
            rest = rest[1..].trim_start();
        }
        first = false;
        let (factor, tail) = parse_factor(rest, order)?;
        rest = tail.trim_start();
        let factor = if divide_next { factor.invert()? } else { factor };
        acc = acc.mul(&factor)?;
    }
    if first {
        return Err(Error::Parse("empty expression".into()));
    }
    Ok(acc)
}

fn parse_factor<'a>(input: &'a str, order: usize) -> Result<(TruncatedSeries, &'a str)> {
    let rest = input
        .strip_prefix("POCH(")
        .ok_or_else(|| Error::Parse(format!("expected POCH(a,b) at {input:?}")))?;
    let close = rest
        .find(')')
        .ok_or_else(|| Error::Parse(format!("unterminated POCH in {input:?}")))?;
    let args = &rest[..close];
    let mut it = args.split(',').map(str::trim);
    let a: usize = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad POCH arguments {args:?}")))?;
    let b: usize = it
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse(format!("bad POCH arguments {args:?}")))?;
    if it.next().is_some() || b == 0 {
        return Err(Error::Parse(format!("bad POCH arguments {args:?}")));
    }
    let mut rest = &rest[close + 1..];
    let mut exp: i64 = 1;
    if let Some(tail) = rest.strip_prefix('^') {
        let end = tail
            .char_indices()
            .take_while(|&(i, c)| c.is_ascii_digit() || (i == 0 && c == '-'))
            .count();
        exp = tail[..end]
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in {input:?}")))?;
        rest = &tail[end..];
    }
    let base = pochhammer(a, b, order);
    let series = if exp >= 0 {
        base.pow(exp as u32)
    } else {
        base.invert()?.pow((-exp) as u32)
    };
    Ok((series, rest))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{diamonds_any, overpartitions, partitions};

    fn coeff_i64(s: &TruncatedSeries, n: usize) -> i64 {
        use num_traits::ToPrimitive;
        s.coeff(n).to_i64().unwrap()
    }

    #[test]
    fn euler_inverse_counts_partitions() {
        let s = pochhammer(1, 1, 20).invert().unwrap();
        for n in 0..=10 {
            assert_eq!(coeff_i64(&s, n), partitions(n as i64).len() as i64, "n = {n}");
        }
    }

    #[test]
    fn overpartition_series_matches_enumeration() {
        let s = overpartition_gf(12).unwrap();
        for n in 0..=9 {
            assert_eq!(
                coeff_i64(&s, n),
                overpartitions(n as i64).len() as i64,
                "n = {n}"
            );
        }
    }

    #[test]
    fn diamond_series_matches_enumeration() {
        let s1 = diamond_gf(1, 8).unwrap();
        for n in 0..=5 {
            assert_eq!(
                coeff_i64(&s1, n),
                diamonds_any(n as i64, 1).len() as i64,
                "k = 1, n = {n}"
            );
        }
        assert_eq!(coeff_i64(&s1, 1), 4);
        let s2 = diamond_gf(2, 6).unwrap();
        for n in 0..=4 {
            assert_eq!(
                coeff_i64(&s2, n),
                diamonds_any(n as i64, 2).len() as i64,
                "k = 2, n = {n}"
            );
        }
    }

    #[test]
    fn bivariate_marginals() {
        let order = 10;
        let t = bivariate_over_gf(order);
        let total = overpartition_gf(order).unwrap();
        for n in 0..=order {
            let row_sum: BigInt = t[n].iter().sum();
            assert_eq!(&row_sum, total.coeff(n), "n = {n}");
        }
        // T[n][s] oracle against direct enumeration
        for n in 0..=7i64 {
            let ops = overpartitions(n);
            for s in 0..=(n as usize + 1).min(t[0].len() - 1) {
                let cnt = ops.iter().filter(|o| o.mark_count() == s).count();
                assert_eq!(
                    t[n as usize][s],
                    BigInt::from(cnt),
                    "n = {n}, s = {s}"
                );
            }
        }
    }

    #[test]
    fn invert_is_two_sided() {
        let s = pochhammer(1, 1, 15);
        let prod = s.mul(&s.invert().unwrap()).unwrap();
        assert_eq!(prod, TruncatedSeries::one(15));
    }

    #[test]
    fn invert_requires_unit() {
        let s = TruncatedSeries::constant(2, 5);
        assert!(matches!(s.invert(), Err(Error::NonUnitConstant(_))));
        let neg = TruncatedSeries::constant(-1, 5);
        assert_eq!(neg.invert().unwrap(), neg);
    }

    #[test]
    fn order_mismatch_rejected() {
        let a = TruncatedSeries::one(4);
        let b = TruncatedSeries::one(5);
        assert!(matches!(a.mul(&b), Err(Error::OrderMismatch { .. })));
    }

    #[test]
    fn expression_parser() {
        let direct = diamond_gf(2, 10).unwrap();
        let parsed = eval_expression("POCH(2,2)^2 / POCH(1,1)^7", 10).unwrap();
        assert_eq!(parsed, direct);
        let parsed = eval_expression("POCH(2,2)^2 * POCH(1,1)^-7", 10).unwrap();
        assert_eq!(parsed, direct);
        assert!(eval_expression("POCH(1,0)", 5).is_err());
        assert!(eval_expression("", 5).is_err());
        assert!(eval_expression("POCH(1,1) POCH(1,1)", 5).is_err());
    }
}
