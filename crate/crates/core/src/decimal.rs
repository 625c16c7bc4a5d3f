//! Exact handling of fractional weights.
//!
//! Decimal weights are scaled by a common power of ten so every index is
//! evaluated on integers. An index of weight degree `k` computed on weights
//! scaled by `10^d` is the true value times `10^(d·k)`; [`format_scaled`]
//! undoes that without rounding.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indices::IndexKind;
use crate::quotient::WeightAssignment;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledWeights {
    pub weights: WeightAssignment,
    /// Every weight was multiplied by `10^decimals`.
    pub decimals: u32,
}

impl ScaledWeights {
    /// Exact decimal rendering of an index computed from these weights.
    pub fn render(&self, raw: u128, kind: IndexKind) -> String {
        format_scaled(raw, self.decimals * kind.weight_degree())
    }
}

fn split(text: &str) -> Result<(u128, u128, u32)> {
    let bad = || Error::BadWeight(text.to_string());
    let (int, frac) = text.trim().split_once('.').unwrap_or((text.trim(), ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    let digits = |s: &str| -> Result<u128> {
        if s.is_empty() {
            Ok(0)
        } else if s.bytes().all(|b| b.is_ascii_digit()) {
            s.parse().map_err(|_| bad())
        } else {
            Err(bad())
        }
    };
    Ok((digits(int)?, digits(frac)?, frac.len() as u32))
}

/// Parses nonnegative decimal strings for `w`, `w'` and `λ'` into integer
/// weights over a shared power-of-ten scale.
pub fn parse_decimal_weights(
    g: &Graph,
    w: &[&str],
    w_prime: &[&str],
    lambda_prime: &[&str],
) -> Result<ScaledWeights> {
    let parsed: Vec<Vec<(u128, u128, u32)>> = [w, w_prime, lambda_prime]
        .iter()
        .map(|col| col.iter().map(|s| split(s)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let decimals = parsed.iter().flatten().map(|p| p.2).max().unwrap_or(0);
    let scale = |&(int, frac, places): &(u128, u128, u32)| -> Result<u128> {
        let unit = 10u128.checked_pow(decimals).ok_or(Error::Overflow)?;
        let pad = 10u128
            .checked_pow(decimals - places)
            .ok_or(Error::Overflow)?;
        int.checked_mul(unit)
            .and_then(|x| frac.checked_mul(pad).and_then(|f| x.checked_add(f)))
            .ok_or(Error::Overflow)
    };
    let mut cols = parsed
        .iter()
        .map(|col| col.iter().map(scale).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let lambda_prime = cols.pop().unwrap();
    let w_prime = cols.pop().unwrap();
    let w = cols.pop().unwrap();
    Ok(ScaledWeights {
        weights: WeightAssignment::new(g, w, w_prime, lambda_prime)?,
        decimals,
    })
}

/// `raw / 10^places` written out exactly, trailing zeros dropped.
pub fn format_scaled(raw: u128, places: u32) -> String {
    if places == 0 {
        return raw.to_string();
    }
    let digits = raw.to_string();
    let places = places as usize;
    let padded = if digits.len() <= places {
        format!("{}{}", "0".repeat(places + 1 - digits.len()), digits)
    } else {
        digits
    };
    let (int, frac) = padded.split_at(padded.len() - places);
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        int.to_string()
    } else {
        format!("{int}.{frac}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::weighted_index;

    #[test]
    fn formatting() {
        assert_eq!(format_scaled(12345, 0), "12345");
        assert_eq!(format_scaled(12345, 2), "123.45");
        assert_eq!(format_scaled(12300, 2), "123");
        assert_eq!(format_scaled(5, 3), "0.005");
        assert_eq!(format_scaled(0, 3), "0");
    }

    #[test]
    fn half_weights_on_k2() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        let scaled = parse_decimal_weights(&g, &["0.5", "3"], &["1.25"], &["2"]).unwrap();
        assert_eq!(scaled.decimals, 2);
        assert_eq!(scaled.weights.w, vec![50, 300]);
        // Sz = 1.25 * 0.5 * 3 = 1.875
        let raw = weighted_index(&g, &scaled.weights, IndexKind::Sz).unwrap();
        assert_eq!(scaled.render(raw, IndexKind::Sz), "1.875");
        // PI_v = 1.25 * 3.5 = 4.375
        let raw = weighted_index(&g, &scaled.weights, IndexKind::PiV).unwrap();
        assert_eq!(scaled.render(raw, IndexKind::PiV), "4.375");
    }

    #[test]
    fn rejects_junk() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        for junk in ["-1", "1e3", ".", "abc", "1.2.3"] {
            assert!(
                parse_decimal_weights(&g, &[junk, "1"], &["1"], &["1"]).is_err(),
                "{junk}"
            );
        }
    }
}
