//! Shared test support: an independent brute-force positive-root counter
//! and deterministic random polynomial generation.
//!
//! The oracle never touches the Sturm/Descartes machinery it is used to
//! check: it counts sign changes of the squarefree part over `(0, B]` by
//! recursive bisection down to width `2^-30`, pruning subintervals whose
//! rational interval-arithmetic enclosure excludes zero.

use biorder::exactnum::{rat, rat_int, LaurentPoly, Rational};
use num_traits::{Signed, Zero};
use rand::Rng;

const ORACLE_WIDTH_LOG2: u32 = 30;
const ORACLE_NODE_BUDGET: usize = 400_000;

fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Horner evaluation of `p` over the interval `[a, b]` in exact interval
/// arithmetic. Returns an enclosure of `p([a, b])`.
fn interval_eval(p: &LaurentPoly, a: &Rational, b: &Rational) -> (Rational, Rational) {
    assert_eq!(p.min_degree(), 0, "oracle works on ordinary polynomials");
    let (mut lo, mut hi) = (rat_int(0), rat_int(0));
    for c in p.coeffs().iter().rev() {
        // (lo, hi) * [a, b] + c
        let candidates = [&lo * a, &lo * b, &hi * a, &hi * b];
        let mut new_lo = candidates[0].clone();
        let mut new_hi = candidates[0].clone();
        for cand in &candidates[1..] {
            if cand < &new_lo {
                new_lo = cand.clone();
            }
            if cand > &new_hi {
                new_hi = cand.clone();
            }
        }
        lo = new_lo + c;
        hi = new_hi + c;
    }
    (lo, hi)
}

fn count_in(
    p: &LaurentPoly,
    a: &Rational,
    b: &Rational,
    sa: i8,
    sb: i8,
    floor: &Rational,
    budget: &mut usize,
) -> usize {
    assert!(*budget > 0, "oracle node budget exhausted");
    *budget -= 1;
    let (lo, hi) = interval_eval(p, a, b);
    if lo.is_positive() || hi.is_negative() {
        return 0;
    }
    if &(b - a) <= floor {
        return usize::from(sa != sb);
    }
    let mid = (a + b) / rat_int(2);
    let vm = p.eval(&mid).expect("ordinary polynomial");
    if vm.is_zero() {
        // Exact rational root at the midpoint. Roots of a squarefree
        // polynomial are isolated, so step off it by a quarter floor and
        // count the two open sides.
        let delta = floor / rat_int(4);
        let left_end = &mid - &delta;
        let right_end = &mid + &delta;
        let sl = sign(&p.eval(&left_end).expect("ordinary polynomial"));
        let sr = sign(&p.eval(&right_end).expect("ordinary polynomial"));
        assert!(
            sl != 0 && sr != 0,
            "oracle resolution exceeded at a root cluster"
        );
        return count_in(p, a, &left_end, sa, sl, floor, budget)
            + 1
            + count_in(p, &right_end, b, sr, sb, floor, budget);
    }
    let sm = sign(&vm);
    count_in(p, a, &mid, sa, sm, floor, budget) + count_in(p, &mid, b, sm, sb, floor, budget)
}

/// Brute-force count of distinct positive real roots, independent of the
/// Sturm implementation.
pub fn oracle_count_positive_roots(p: &LaurentPoly) -> usize {
    let sf = p.squarefree_part().expect("nonzero polynomial");
    let coeffs = sf.coeffs();
    let lead = coeffs.last().expect("nonzero").abs();
    let mut max = rat_int(0);
    for c in &coeffs[..coeffs.len() - 1] {
        let m = c.abs();
        if m > max {
            max = m;
        }
    }
    let bound = rat_int(1) + max / lead;
    let s0 = sign(&sf.eval(&rat_int(0)).expect("ordinary polynomial"));
    let sb = sign(&sf.eval(&bound).expect("ordinary polynomial"));
    assert!(s0 != 0, "oracle requires a nonzero constant term");
    assert!(sb != 0, "Cauchy bound is strictly beyond all roots");
    let floor = rat(1, 1i64 << ORACLE_WIDTH_LOG2);
    let mut budget = ORACLE_NODE_BUDGET;
    count_in(&sf, &rat_int(0), &bound, s0, sb, &floor, &mut budget)
}

/// Random integer polynomial with `1 <= deg <= max_deg`, coefficients in
/// `[-max_coeff, max_coeff]`, nonzero constant and leading terms.
pub fn random_int_poly(rng: &mut impl Rng, max_deg: usize, max_coeff: i64) -> LaurentPoly {
    let deg = rng.gen_range(1..=max_deg);
    let mut coeffs: Vec<i64> = (0..=deg)
        .map(|_| rng.gen_range(-max_coeff..=max_coeff))
        .collect();
    while coeffs[0] == 0 {
        coeffs[0] = rng.gen_range(-max_coeff..=max_coeff);
    }
    let last = coeffs.len() - 1;
    while coeffs[last] == 0 {
        coeffs[last] = rng.gen_range(-max_coeff..=max_coeff);
    }
    LaurentPoly::from_int_coeffs(0, &coeffs)
}

#[allow(dead_code)]
pub fn lp(min: i64, coeffs: &[i64]) -> LaurentPoly {
    LaurentPoly::from_int_coeffs(min, coeffs)
}
