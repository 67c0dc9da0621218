//! Student t and Fisher F distribution functions built on the incomplete
//! beta, with bisection inverses.

use super::special::regularized_incomplete_beta;
use super::StatsError;

/// Absolute tolerance on the argument for the bisection inverses.
pub const CRITICAL_TOLERANCE: f64 = 1e-10;

fn check_df(df: f64) -> Result<(), StatsError> {
    if df > 0.0 && df.is_finite() {
        Ok(())
    } else {
        Err(StatsError::Domain(format!(
            "degrees of freedom must be positive and finite, got {df}"
        )))
    }
}

fn check_alpha(alpha: f64) -> Result<(), StatsError> {
    if alpha > 0.0 && alpha < 1.0 {
        Ok(())
    } else {
        Err(StatsError::InvalidAlpha(alpha))
    }
}

/// `P(T > t)` for `t ≥ 0`, the upper tail without cancellation.
fn t_upper_tail(t: f64, df: f64) -> Result<f64, StatsError> {
    let x = df / (df + t * t);
    Ok(0.5 * regularized_incomplete_beta(x, 0.5 * df, 0.5)?)
}

/// Student t cumulative distribution `P(T ≤ t)`.
pub fn t_cdf(t: f64, df: f64) -> Result<f64, StatsError> {
    check_df(df)?;
    if t.is_nan() {
        return Err(StatsError::Domain("t is NaN".into()));
    }
    let tail = t_upper_tail(t.abs(), df)?;
    Ok(if t >= 0.0 { 1.0 - tail } else { tail })
}

/// Survival function `P(T > t)`.
pub fn t_sf(t: f64, df: f64) -> Result<f64, StatsError> {
    check_df(df)?;
    if t.is_nan() {
        return Err(StatsError::Domain("t is NaN".into()));
    }
    let tail = t_upper_tail(t.abs(), df)?;
    Ok(if t >= 0.0 { tail } else { 1.0 - tail })
}

/// Fisher F cumulative distribution `P(F ≤ f)` with `d1`, `d2` degrees of
/// freedom.
pub fn f_cdf(f: f64, d1: f64, d2: f64) -> Result<f64, StatsError> {
    check_df(d1)?;
    check_df(d2)?;
    if f.is_nan() {
        return Err(StatsError::Domain("F is NaN".into()));
    }
    if f <= 0.0 {
        return Ok(0.0);
    }
    if f.is_infinite() {
        return Ok(1.0);
    }
    regularized_incomplete_beta(d1 * f / (d1 * f + d2), 0.5 * d1, 0.5 * d2)
}

/// Survival function `P(F > f)`, computed through the complementary beta
/// so small tails keep their precision.
pub fn f_sf(f: f64, d1: f64, d2: f64) -> Result<f64, StatsError> {
    check_df(d1)?;
    check_df(d2)?;
    if f.is_nan() {
        return Err(StatsError::Domain("F is NaN".into()));
    }
    if f <= 0.0 {
        return Ok(1.0);
    }
    if f.is_infinite() {
        return Ok(0.0);
    }
    regularized_incomplete_beta(d2 / (d2 + d1 * f), 0.5 * d2, 0.5 * d1)
}

/// Finds `x ≥ 0` with `sf(x) = target` for a decreasing `sf`, expanding
/// the bracket then bisecting.
fn invert_upper_tail(
    target: f64,
    sf: impl Fn(f64) -> Result<f64, StatsError>,
) -> Result<f64, StatsError> {
    let mut lo = 0.0;
    let mut hi = 1.0;
    while sf(hi)? > target {
        lo = hi;
        hi *= 2.0;
        if hi > 1e300 {
            return Err(StatsError::Domain("critical value out of range".into()));
        }
    }
    while hi - lo > CRITICAL_TOLERANCE {
        let mid = 0.5 * (lo + hi);
        if sf(mid)? > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Critical value `t*` with `P(T > t*) = alpha / tails`.
pub fn t_critical(df: f64, alpha: f64, tails: u8) -> Result<f64, StatsError> {
    check_df(df)?;
    check_alpha(alpha)?;
    if tails != 1 && tails != 2 {
        return Err(StatsError::Domain(format!(
            "tails must be 1 or 2, got {tails}"
        )));
    }
    invert_upper_tail(alpha / f64::from(tails), |t| t_upper_tail(t, df))
}

/// Critical value `f*` with `P(F > f*) = alpha`.
pub fn f_critical(d1: f64, d2: f64, alpha: f64) -> Result<f64, StatsError> {
    check_df(d1)?;
    check_df(d2)?;
    check_alpha(alpha)?;
    invert_upper_tail(alpha, |f| f_sf(f, d1, d2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn t_cdf_symmetry_and_center() {
        assert_eq!(t_cdf(0.0, 7.0).unwrap(), 0.5);
        for t in [0.3, 1.7, 4.0] {
            let up = t_cdf(t, 5.0).unwrap();
            let down = t_cdf(-t, 5.0).unwrap();
            assert_relative_eq!(up + down, 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn t_cdf_cauchy_case() {
        // df = 1 is Cauchy: F(t) = 1/2 + atan(t)/π
        for t in [-3.0, -0.5, 0.2, 10.0] {
            let want = 0.5 + f64::atan(t) / std::f64::consts::PI;
            assert_relative_eq!(t_cdf(t, 1.0).unwrap(), want, epsilon = 1e-13);
        }
    }

    #[test]
    fn t_cdf_df2_closed_form() {
        // df = 2: F(t) = 1/2 + t / (2√(2 + t²))
        for t in [-2.0f64, 0.7, 3.3] {
            let want = 0.5 + t / (2.0 * (2.0 + t * t).sqrt());
            assert_relative_eq!(t_cdf(t, 2.0).unwrap(), want, epsilon = 1e-13);
        }
    }

    #[test]
    fn t_sf_complements_cdf() {
        for t in [-1.5, 0.0, 2.2] {
            assert_relative_eq!(
                t_sf(t, 9.0).unwrap() + t_cdf(t, 9.0).unwrap(),
                1.0,
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn infinite_t() {
        assert_eq!(t_cdf(f64::INFINITY, 4.0).unwrap(), 1.0);
        assert_eq!(t_cdf(f64::NEG_INFINITY, 4.0).unwrap(), 0.0);
    }

    #[test]
    fn f_cdf_with_two_numerator_df() {
        // d1 = 2: P(F ≤ f) = 1 − (1 + 2f/d2)^(−d2/2)
        for f in [0.1, 1.0, 5.0] {
            let d2: f64 = 9.0;
            let want = 1.0 - (1.0 + 2.0 * f / d2).powf(-d2 / 2.0);
            assert_relative_eq!(f_cdf(f, 2.0, d2).unwrap(), want, epsilon = 1e-13);
            assert_relative_eq!(f_sf(f, 2.0, d2).unwrap(), 1.0 - want, epsilon = 1e-13);
        }
    }

    #[test]
    fn t_squared_is_f() {
        // T² ~ F(1, df)
        for t in [0.4f64, 1.9, 3.1] {
            let two_sided = 2.0 * t_sf(t, 12.0).unwrap();
            assert_relative_eq!(f_sf(t * t, 1.0, 12.0).unwrap(), two_sided, epsilon = 1e-13);
        }
    }

    #[test]
    fn table_critical_values() {
        assert!((t_critical(58.0, 0.05, 2).unwrap() - 2.0017).abs() < 5e-4);
        assert!((t_critical(58.0, 0.05, 1).unwrap() - 1.6716).abs() < 5e-4);
        assert!((t_critical(1e6, 0.05, 2).unwrap() - 1.95996).abs() < 1e-3);
        assert!((f_critical(3.0, 116.0, 0.05).unwrap() - 2.6828).abs() < 1e-3);
    }

    #[test]
    fn critical_round_trip() {
        for df in [1.0, 3.5, 29.0, 58.0, 400.0] {
            for alpha in [0.01, 0.05, 0.2] {
                let t = t_critical(df, alpha, 2).unwrap();
                assert!((t_cdf(t, df).unwrap() - (1.0 - alpha / 2.0)).abs() < 1e-8);
                let f = f_critical(df, 2.0 * df, alpha).unwrap();
                assert!((f_sf(f, df, 2.0 * df).unwrap() - alpha).abs() < 1e-8);
            }
        }
    }

    #[test]
    fn cdfs_are_monotone_on_grids() {
        let mut prev_t = 0.0;
        let mut prev_f = 0.0;
        for k in 0..=400 {
            let x = -10.0 + 0.05 * k as f64;
            let t = t_cdf(x, 6.0).unwrap();
            assert!(t >= prev_t);
            prev_t = t;
            let f = f_cdf(x.max(0.0), 4.0, 11.0).unwrap();
            assert!(f >= prev_f);
            prev_f = f;
        }
    }

    #[test]
    fn bad_arguments() {
        assert!(t_cdf(1.0, 0.0).is_err());
        assert!(t_critical(10.0, 0.0, 2).is_err());
        assert!(t_critical(10.0, 1.0, 2).is_err());
        assert!(t_critical(10.0, 0.05, 3).is_err());
        assert!(f_critical(-1.0, 3.0, 0.05).is_err());
    }
}
