//! Exact big-integer evaluation of bound formulas, classical Ramsey values,
//! the Kővári–Sós–Turán threshold, and the blow-up lower-bound construction.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut res = BigUint::one();
    for i in 0..k {
        res = res * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    res
}

/// Binomial coefficient with an arbitrarily large top and small `k`.
pub fn binomial_big(n: &BigUint, k: u64) -> BigUint {
    if BigUint::from(k) > *n {
        return BigUint::zero();
    }
    let mut res = BigUint::one();
    for i in 0..k {
        res = res * (n - BigUint::from(i)) / BigUint::from(i + 1);
    }
    res
}

/// A bound formula with its parameters. Values are evaluated exactly in
/// integer arithmetic; unknown absolute constants are inputs, never guessed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BoundFormula {
    /// `ceil(c * n^(4 + eps))` with `eps = eps_num / eps_den`.
    Thm11 {
        c: u64,
        eps_num: u32,
        eps_den: u32,
        n: u64,
    },
    /// `n^(c * t)`.
    Thm12 { c: u32, t: u32, n: u64 },
    /// `binom(s+t, s)^300 * s * n`.
    Thm13Internal { s: u64, t: u64, n: u64 },
    /// `(24 s^3)^(s t) * n`.
    GjsPrior { s: u64, t: u64, n: u64 },
    /// `R(s r, s) * s * n` with `r = binom(s+t, s)^10`; the Ramsey value
    /// comes from [`RamseyTable`] and is flagged when it is only an upper
    /// bound.
    Remark { s: u64, t: u64, n: u64 },
    /// `binom(s+t, s)^300`.
    Lemma33Threshold { s: u64, t: u64 },
    /// `binom(s+t, s)^10`.
    Lemma32Threshold { s: u64, t: u64 },
    /// `binom(s+t, s)^8`.
    Lemma35Threshold { s: u64, t: u64 },
    /// `s^(150 t)`.
    Lemma37Threshold { s: u64, t: u64 },
    /// `d * n^(c * r * ceil(log2 r))`. The real exponent `c r log r` is
    /// rendered with `ceil(log2 r)` so the value stays an exact integer
    /// upper bound.
    Thm41 { d: u64, c: u32, r: u64, n: u64 },
}

/// An exactly evaluated bound. `exact` is false when a classical Ramsey
/// value had to fall back to its binomial upper bound.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EvaluatedBound {
    pub value: BigUint,
    pub exact: bool,
    pub note: Option<String>,
}

impl EvaluatedBound {
    fn exact(value: BigUint) -> Self {
        EvaluatedBound {
            value,
            exact: true,
            note: None,
        }
    }
}

fn pow_u32(base: BigUint, exp: u64) -> Result<BigUint> {
    let exp: u32 = exp
        .try_into()
        .map_err(|_| Error::Precondition(format!("exponent {exp} too large")))?;
    Ok(base.pow(exp))
}

/// Smallest integer `r` with `x <= r^q`.
fn ceil_nth_root(x: &BigUint, q: u32) -> BigUint {
    let r = x.nth_root(q);
    if &r.pow(q) == x {
        r
    } else {
        r + BigUint::one()
    }
}

fn ceil_log2(r: u64) -> u32 {
    assert!(r >= 1);
    if r == 1 {
        0
    } else {
        64 - (r - 1).leading_zeros()
    }
}

pub fn eval_bound(f: &BoundFormula) -> Result<EvaluatedBound> {
    match *f {
        BoundFormula::Thm11 {
            c,
            eps_num,
            eps_den,
            n,
        } => {
            if eps_den == 0 {
                return Err(Error::Precondition("eps denominator must be nonzero".into()));
            }
            // c * n^(4 + p/q) = (c^q * n^(4q + p))^(1/q), rounded up.
            let q = eps_den;
            let p = eps_num;
            let inner = BigUint::from(c).pow(q) * pow_u32(BigUint::from(n), 4 * q as u64 + p as u64)?;
            let mut out = EvaluatedBound::exact(ceil_nth_root(&inner, q));
            if p != 0 {
                out.note = Some("value is the exact ceiling of the real-valued bound".into());
            }
            Ok(out)
        }
        BoundFormula::Thm12 { c, t, n } => Ok(EvaluatedBound::exact(pow_u32(
            BigUint::from(n),
            c as u64 * t as u64,
        )?)),
        BoundFormula::Thm13Internal { s, t, n } => Ok(EvaluatedBound::exact(
            binomial(s + t, s).pow(300) * s * n,
        )),
        BoundFormula::GjsPrior { s, t, n } => {
            let base = BigUint::from(24u64) * BigUint::from(s).pow(3);
            Ok(EvaluatedBound::exact(pow_u32(base, s * t)? * n))
        }
        BoundFormula::Remark { s, t, n } => {
            let r = binomial(s + t, s).pow(10);
            let sr = BigUint::from(s) * &r;
            let ramsey = RamseyTable::get_big(&sr, &BigUint::from(s));
            let value = &ramsey.value * s * n;
            Ok(EvaluatedBound {
                value,
                exact: ramsey.exact,
                note: if ramsey.exact {
                    None
                } else {
                    Some(format!(
                        "classical Ramsey value R({sr}, {s}) replaced by its binomial upper bound"
                    ))
                },
            })
        }
        BoundFormula::Lemma33Threshold { s, t } => {
            Ok(EvaluatedBound::exact(binomial(s + t, s).pow(300)))
        }
        BoundFormula::Lemma32Threshold { s, t } => {
            Ok(EvaluatedBound::exact(binomial(s + t, s).pow(10)))
        }
        BoundFormula::Lemma35Threshold { s, t } => {
            Ok(EvaluatedBound::exact(binomial(s + t, s).pow(8)))
        }
        BoundFormula::Lemma37Threshold { s, t } => Ok(EvaluatedBound::exact(pow_u32(
            BigUint::from(s),
            150 * t,
        )?)),
        BoundFormula::Thm41 { d, c, r, n } => {
            if r < 1 {
                return Err(Error::Precondition("r must be at least 1".into()));
            }
            let exp = c as u64 * r * ceil_log2(r) as u64;
            let mut out = EvaluatedBound::exact(BigUint::from(d) * pow_u32(BigUint::from(n), exp)?);
            out.note = Some("exponent uses ceil(log2 r)".into());
            Ok(out)
        }
    }
}

/// A classical two-color Ramsey value, tagged with whether it is exact or
/// the binomial upper bound `binom(a+b-2, a-1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RamseyBound {
    pub value: BigUint,
    pub exact: bool,
}

/// The handful of exactly known small classical Ramsey numbers, with the
/// binomial upper bound as fallback everywhere else.
pub struct RamseyTable;

/// Known exact values of R(a, b) for 3 <= a <= b.
const EXACT_RAMSEY: &[(u64, u64, u64)] = &[
    (3, 3, 6),
    (3, 4, 9),
    (3, 5, 14),
    (3, 6, 18),
    (3, 7, 23),
    (3, 8, 28),
    (3, 9, 36),
    (4, 4, 18),
    (4, 5, 25),
];

impl RamseyTable {
    pub fn get(a: u64, b: u64) -> RamseyBound {
        Self::get_big(&BigUint::from(a), &BigUint::from(b))
    }

    pub fn get_big(a: &BigUint, b: &BigUint) -> RamseyBound {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        if lo.is_zero() {
            // R(0, b): the empty graph is a red K_0 in any coloring.
            return RamseyBound {
                value: BigUint::zero(),
                exact: true,
            };
        }
        if lo.is_one() {
            return RamseyBound {
                value: BigUint::one(),
                exact: true,
            };
        }
        if *lo == BigUint::from(2u32) {
            return RamseyBound {
                value: hi.clone(),
                exact: true,
            };
        }
        if let (Some(la), Some(hb)) = (lo.to_u64(), hi.to_u64()) {
            for &(x, y, v) in EXACT_RAMSEY {
                if (la, hb) == (x, y) {
                    return RamseyBound {
                        value: BigUint::from(v),
                        exact: true,
                    };
                }
            }
        }
        // binom(a+b-2, a-1); the smaller side gives the small k.
        let k = (lo - BigUint::one()).to_u64().expect("small side fits u64");
        let top = lo + hi - BigUint::from(2u32);
        RamseyBound {
            value: binomial_big(&top, k),
            exact: false,
        }
    }
}

/// True iff `edges` strictly exceeds the Kővári–Sós–Turán bound
/// `(t-1)^(1/t) (m-t+1) m^(1-1/t) + (t-1) m` on the edge count of a
/// `K_{t,t}`-free bipartite graph with parts of size `m`. Exact integer
/// comparison via `t`-th powers.
pub fn kst_edge_bound_exceeded(t: usize, m: usize, edges: usize) -> bool {
    assert!(t >= 1 && m >= 1);
    let slack = edges as i128 - ((t - 1) * m) as i128;
    if slack <= 0 {
        return false;
    }
    let lhs = BigUint::from(slack as u128).pow(t as u32);
    let rhs = BigUint::from((t - 1) as u64)
        * BigUint::from(m.saturating_sub(t - 1) as u64).pow(t as u32)
        * BigUint::from(m as u64).pow(t as u32 - 1);
    lhs > rhs
}

/// Smallest `m` such that `lambda * m^2` strictly exceeds the KST bound, so
/// a bipartite graph with parts of size `m` and `lambda * m^2` edges is
/// forced to contain `K_{t,t}`.
///
/// `lambda` is interpreted exactly as the rational its float bits denote;
/// the comparison itself is exact. Always terminates since the left side
/// grows quadratically against an `m^(2 - 1/t)` bound.
pub fn kst_min_part_size(t: usize, lambda: f64) -> usize {
    assert!(t >= 1, "t must be at least 1");
    assert!(
        lambda > 0.0 && lambda < 1.0,
        "lambda must lie strictly between 0 and 1"
    );
    let lam = BigRational::from_float(lambda).expect("finite lambda");
    let mut m = t;
    loop {
        // lambda m^2 - (t-1) m must exceed (m-t+1) ((t-1) m^(t-1))^(1/t).
        let lhs = &lam * BigRational::from_integer((m * m).into())
            - BigRational::from_integer(((t - 1) * m).into());
        if lhs.is_positive() {
            let lhs_pow = pow_rational(&lhs, t as u32);
            let rhs = BigRational::from_integer(
                (num_bigint::BigInt::from((m - t + 1) as u64).pow(t as u32)
                    * num_bigint::BigInt::from((t - 1) as u64)
                    * num_bigint::BigInt::from(m as u64).pow(t as u32 - 1))
                .clone(),
            );
            if lhs_pow > rhs {
                return m;
            }
        }
        m += 1;
    }
}

fn pow_rational(x: &BigRational, e: u32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..e {
        out *= x;
    }
    out
}

/// Both sides of the chain-shrinking inequality
/// `s^2 t / (s+t)^3 * binom(t+l, t)^50 >= binom(t + ceil(2l/3), t)^50`
/// as exact rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainInequality {
    pub holds: bool,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

pub fn check_chain_inequality(s: u64, t: u64, l: u64) -> Result<ChainInequality> {
    if !(2 <= l && l <= s && s <= t * t) {
        return Err(Error::Precondition(format!(
            "need 2 <= l <= s <= t^2; got l={l}, s={s}, t={t}"
        )));
    }
    let big = |x: BigUint| num_bigint::BigInt::from(x);
    let lhs = BigRational::new(
        big(BigUint::from(s) * s * t * binomial(t + l, t).pow(50)),
        big(BigUint::from(s + t).pow(3)),
    );
    let ceil_two_thirds = (2 * l).div_ceil(3);
    let rhs = BigRational::from_integer(big(binomial(t + ceil_two_thirds, t).pow(50)));
    Ok(ChainInequality {
        holds: lhs >= rhs,
        lhs,
        rhs,
    })
}

/// Replaces each vertex of `base` by an ordered block of `block_size`
/// vertices. Pairs inside a block get `intra_color`; pairs across blocks
/// inherit the base color of their block pair.
pub fn blowup_construction(
    base: &EdgeColoring,
    block_size: usize,
    intra_color: usize,
) -> Result<EdgeColoring> {
    if block_size < 1 {
        return Err(Error::Precondition("block size must be at least 1".into()));
    }
    if intra_color >= base.n_colors() {
        return Err(Error::BadColor {
            color: intra_color,
            n_colors: base.n_colors(),
        });
    }
    let m = base.n_vertices();
    let n = m * block_size;
    let mut out = EdgeColoring::new(n, base.n_colors())?;
    for u in 0..n {
        for v in (u + 1)..n {
            let (bu, bv) = (u / block_size, v / block_size);
            let color = if bu == bv {
                intra_color
            } else {
                base.color(bu, bv)
            };
            out.set_color(u, v, color)?;
        }
    }
    Ok(out)
}

/// The two-coloring of K_5 with a red 5-cycle and blue complement: the
/// classical witness that 5 vertices avoid both a red and a blue triangle.
pub fn pentagon_base() -> EdgeColoring {
    let mut c = EdgeColoring::uniform(5, 2, crate::coloring::BLUE).expect("valid");
    for i in 0..5 {
        let (u, v) = (i, (i + 1) % 5);
        c.set_color(u.min(v), u.max(v), crate::coloring::RED).expect("valid");
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigUint::from(6u32));
        assert_eq!(binomial(10, 0), BigUint::one());
        assert_eq!(binomial(5, 7), BigUint::zero());
        assert_eq!(
            binomial_big(&BigUint::from(100u32), 3),
            binomial(100, 3)
        );
    }

    #[test]
    fn thm13_digit_count() {
        let v = eval_bound(&BoundFormula::Thm13Internal { s: 2, t: 2, n: 1 }).unwrap();
        assert_eq!(v.value, BigUint::from(6u32).pow(300) * 2u32);
        assert_eq!(v.value.to_string().len(), 234);
        assert!(v.exact);
    }

    #[test]
    fn gjs_prior_small_value() {
        let v = eval_bound(&BoundFormula::GjsPrior { s: 2, t: 1, n: 1 }).unwrap();
        assert_eq!(v.value, BigUint::from(36864u32));
    }

    #[test]
    fn linear_formulas_double_in_n() {
        for m in [1u64, 3, 10] {
            for make in [
                |n| BoundFormula::Thm13Internal { s: 3, t: 2, n },
                |n| BoundFormula::GjsPrior { s: 2, t: 2, n },
                |n| BoundFormula::Remark { s: 2, t: 2, n },
            ] {
                let once = eval_bound(&make(m)).unwrap().value;
                let twice = eval_bound(&make(2 * m)).unwrap().value;
                assert_eq!(twice, once * 2u32);
            }
        }
    }

    #[test]
    fn thm11_integer_epsilon_is_plain_power() {
        let v = eval_bound(&BoundFormula::Thm11 {
            c: 3,
            eps_num: 1,
            eps_den: 1,
            n: 2,
        })
        .unwrap();
        assert_eq!(v.value, BigUint::from(3u32 * 32));
    }

    #[test]
    fn thm11_fractional_epsilon_takes_ceiling() {
        // 2^(4.5) = 22.62... -> 23.
        let v = eval_bound(&BoundFormula::Thm11 {
            c: 1,
            eps_num: 1,
            eps_den: 2,
            n: 2,
        })
        .unwrap();
        assert_eq!(v.value, BigUint::from(23u32));
    }

    #[test]
    fn thm12_and_thm41_exact_scaling() {
        let a = eval_bound(&BoundFormula::Thm12 { c: 2, t: 3, n: 5 }).unwrap().value;
        assert_eq!(a, BigUint::from(5u64).pow(6));
        let b = eval_bound(&BoundFormula::Thm41 { d: 7, c: 1, r: 4, n: 3 }).unwrap().value;
        // exponent = 1 * 4 * ceil(log2 4) = 8.
        assert_eq!(b, BigUint::from(7u64) * BigUint::from(3u64).pow(8));
    }

    #[test]
    fn ramsey_table_exact_and_fallback() {
        assert_eq!(RamseyTable::get(3, 3), RamseyBound { value: 6u32.into(), exact: true });
        assert_eq!(RamseyTable::get(5, 4), RamseyBound { value: 25u32.into(), exact: true });
        assert_eq!(RamseyTable::get(2, 9).value, BigUint::from(9u32));
        let fb = RamseyTable::get(5, 5);
        assert!(!fb.exact);
        assert_eq!(fb.value, binomial(8, 4));
        // The fallback dominates every exact value it could replace.
        for &(a, b, v) in EXACT_RAMSEY {
            assert!(binomial(a + b - 2, a - 1) >= BigUint::from(v));
        }
    }

    #[test]
    fn thm13_equals_lemma33_times_sn() {
        for (s, t, n) in [(2, 2, 3u64), (3, 2, 5), (4, 3, 1)] {
            let whole = eval_bound(&BoundFormula::Thm13Internal { s, t, n }).unwrap().value;
            let thresh = eval_bound(&BoundFormula::Lemma33Threshold { s, t }).unwrap().value;
            assert_eq!(whole, thresh * s * n);
        }
    }

    #[test]
    fn kst_examples() {
        assert_eq!(kst_min_part_size(1, 0.3), 1);
        assert_eq!(kst_min_part_size(2, 0.5), 7);
    }

    #[test]
    fn kst_monotone() {
        // Nonincreasing in lambda, nondecreasing in t.
        let lams = [0.2, 0.4, 0.6, 0.8];
        for t in 1..=3 {
            for w in lams.windows(2) {
                assert!(kst_min_part_size(t, w[0]) >= kst_min_part_size(t, w[1]));
            }
        }
        for t in 1..3 {
            assert!(kst_min_part_size(t, 0.5) <= kst_min_part_size(t + 1, 0.5));
        }
    }

    #[test]
    fn chain_inequality_cases() {
        let good = check_chain_inequality(4, 4, 4).unwrap();
        assert!(good.holds);
        let bad = check_chain_inequality(2, 2, 2).unwrap();
        assert!(!bad.holds);
        assert!(bad.lhs < bad.rhs);
        assert!(check_chain_inequality(5, 2, 3).is_err());
    }

    #[test]
    fn blowup_single_block_is_monochromatic() {
        let base = EdgeColoring::uniform(1, 2, 1).unwrap();
        let b = blowup_construction(&base, 4, 0).unwrap();
        assert_eq!(b.n_vertices(), 4);
        for u in 0..4 {
            for v in (u + 1)..4 {
                assert_eq!(b.color(u, v), 0);
            }
        }
    }

    #[test]
    fn blowup_inherits_block_colors() {
        let base = pentagon_base();
        let b = blowup_construction(&base, 3, 0).unwrap();
        for u in 0..15 {
            for v in (u + 1)..15 {
                let (bu, bv) = (u / 3, v / 3);
                let expected = if bu == bv { 0 } else { base.color(bu, bv) };
                assert_eq!(b.color(u, v), expected);
            }
        }
    }
}
