//! Sturm-guided bisection producing an isolating interval for a positive
//! root, with an exact sign change as the witness.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{rat, rat_int, sign_of, LaurentPoly, Rational};
use crate::realroots::sturm::{cauchy_bound, SturmChain};

/// A rational interval witnessing a positive real root: either `lo < hi`
/// with opposite nonzero signs of the (squarefree part of the) target
/// polynomial at the endpoints, or `lo == hi` at an exact rational root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn point(x: Rational) -> Self {
        RootInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    /// Re-checks the witness against `p` by exact evaluation: a point
    /// interval must be a root of `p`; otherwise the squarefree part of `p`
    /// must change sign over the interval and the endpoints must be
    /// positive.
    pub fn verify_against(&self, p: &LaurentPoly) -> bool {
        if self.lo <= rat_int(0) {
            return false;
        }
        if self.is_point() {
            return p.eval(&self.lo).is_ok_and(|v| v.is_zero());
        }
        if self.lo >= self.hi {
            return false;
        }
        let Ok(sf) = p.squarefree_part() else {
            return false;
        };
        let s_lo = sf.eval(&self.lo).map_or(0, |v| sign_of(&v));
        let s_hi = sf.eval(&self.hi).map_or(0, |v| sign_of(&v));
        s_lo != 0 && s_hi != 0 && s_lo != s_hi
    }
}

/// Finds an interval of width at most `width` containing at least one
/// positive root of `p`. Deterministic: bisection always splits at the exact
/// midpoint and always descends into the leftmost half that still contains a
/// root, starting from `(0, cauchy_bound]`. A rational root hit by a
/// midpoint (or a linear squarefree part) is returned as a point interval.
///
/// Errors when `p` has no positive root or `width <= 0`.
pub fn isolate_positive_root(p: &LaurentPoly, width: &Rational) -> Result<RootInterval> {
    if width <= &rat_int(0) {
        return Err(Error::InvalidInput(
            "interval width must be positive".into(),
        ));
    }
    let sf = p.squarefree_part()?;
    let chain = SturmChain::from_squarefree(sf.clone())?;
    if chain.count_positive() == 0 {
        return Err(Error::InvalidInput(
            "polynomial has no positive real root to isolate".into(),
        ));
    }
    // A linear squarefree part has its root available exactly.
    if sf.degree() == Some(1) {
        let root = -(&sf.coeff_at(0) / &sf.coeff_at(1));
        return Ok(RootInterval::point(root));
    }

    let mut lo = rat_int(0);
    let mut hi = cauchy_bound(&sf)?;
    let half = rat(1, 2);
    loop {
        // Invariant: (lo, hi] contains at least one root and sf(lo) != 0.
        if !lo.is_zero() && hi.clone() - lo.clone() <= *width {
            let s_lo = sign_of(&sf.eval(&lo).expect("ordinary polynomial"));
            let s_hi = sign_of(&sf.eval(&hi).expect("ordinary polynomial"));
            if s_hi == 0 {
                return Ok(RootInterval::point(hi));
            }
            if s_lo != s_hi {
                return Ok(RootInterval { lo, hi });
            }
            // Equal signs: an even number of roots inside; keep splitting
            // until a single sign change separates out.
        }
        let mid = (lo.clone() + hi.clone()) * half.clone();
        if sf.eval(&mid).expect("ordinary polynomial").is_zero() {
            return Ok(RootInterval::point(mid));
        }
        if chain.count_in_halfopen(&lo, &mid) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(min: i64, coeffs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_int_coeffs(min, coeffs)
    }

    #[test]
    fn golden_ratio_conjugate_interval() {
        // t^2 - 3t + 1, width 1/4: lands on (1/4, 1/2) with signs 5/16, -1/4
        let p = lp(0, &[1, -3, 1]);
        let iv = isolate_positive_root(&p, &rat(1, 4)).unwrap();
        assert_eq!(
            iv,
            RootInterval {
                lo: rat(1, 4),
                hi: rat(1, 2)
            }
        );
        assert!(iv.verify_against(&p));
    }

    #[test]
    fn linear_root_is_exact() {
        let iv = isolate_positive_root(&lp(0, &[-2, 1]), &rat_int(1000)).unwrap();
        assert_eq!(iv, RootInterval::point(rat_int(2)));
        assert!(iv.verify_against(&lp(0, &[-2, 1])));
    }

    #[test]
    fn midpoint_hit_becomes_point() {
        // (t - 3)(t^2 + 1) = t^3 - 3t^2 + t - 3: bisection from (0, 4]
        // reaches midpoint 3 exactly.
        let p = lp(0, &[-3, 1, -3, 1]);
        let iv = isolate_positive_root(&p, &rat_int(1)).unwrap();
        assert_eq!(iv, RootInterval::point(rat_int(3)));
        assert!(iv.verify_against(&p));
    }

    #[test]
    fn rejects_rootless_and_bad_width() {
        assert!(isolate_positive_root(&lp(0, &[1, -1, 1]), &rat(1, 2)).is_err());
        assert!(isolate_positive_root(&lp(0, &[1, -3, 1]), &rat_int(0)).is_err());
    }

    #[test]
    fn narrow_width_keeps_sign_change() {
        let p = lp(0, &[1, -3, 1]);
        let w = rat(1, 1 << 20);
        let iv = isolate_positive_root(&p, &w).unwrap();
        assert!(iv.width() <= w);
        assert!(iv.verify_against(&p));
    }

    #[test]
    fn double_root_verified_through_squarefree_part() {
        // (t^2 - 3t + 1)^2 has the same distinct roots; the sign change is
        // checked on the squarefree part.
        let p = lp(0, &[1, -3, 1]);
        let sq = &p * &p;
        let iv = isolate_positive_root(&sq, &rat(1, 64)).unwrap();
        assert!(iv.verify_against(&sq));
    }
}
