//! Integer helpers: exact square roots, factorization, squarefree parts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Trial-division bound used for every factorization.
pub const FACTOR_BUDGET: u64 = 1_000_000;
/// Iterations of Brent's rho per split of a cofactor above the trial bound.
pub const RHO_BUDGET: u64 = 1 << 18;

pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    Some(BigRational::new(exact_sqrt(q.numer())?, exact_sqrt(q.denom())?))
}

/// Miller–Rabin with the first twelve prime bases, deterministic below 3.3·10²⁴.
pub fn is_probable_prime(n: &BigInt) -> bool {
    let two = BigInt::from(2);
    if n < &two {
        return false;
    }
    let bases = [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for b in bases {
        let b = BigInt::from(b);
        if *n == b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let nm1: BigInt = n - 1;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'bases: for b in bases {
        let mut x = BigInt::from(b).modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of the odd composite `n`, or `None` within budget.
fn brent_rho(n: &BigInt) -> Option<BigInt> {
    for c in 1u32..=8 {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let (mut y, mut r, mut q) = (BigInt::from(2), 1u64, BigInt::one());
        let (mut x, mut ys) = (y.clone(), y.clone());
        let mut g = BigInt::one();
        let mut steps = 0u64;
        while g.is_one() && steps < RHO_BUDGET {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..(r - k).min(128) {
                    y = f(&y);
                    q = q * (&x - &y).abs() % n;
                }
                g = q.gcd(n);
                k += 128;
            }
            steps += r;
            r *= 2;
        }
        if &g == n {
            // batch overshot: step back one at a time
            loop {
                ys = f(&ys);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && &g != n {
            return Some(g);
        }
    }
    None
}

/// Prime factorization of `|n|`: trial division up to `FACTOR_BUDGET`,
/// then Brent's rho on the cofactor with `RHO_BUDGET` iterations per split.
pub fn trial_factor(n: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    let mut m = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    if m.is_zero() {
        return Ok(out);
    }
    let mut p: u64 = 2;
    while p <= FACTOR_BUDGET {
        let bp = BigInt::from(p);
        if &bp * &bp > m {
            break;
        }
        let mut e = 0;
        while (&m % &bp).is_zero() {
            m /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let mut pending = vec![m];
    while let Some(m) = pending.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            match out.iter_mut().find(|(q, _)| *q == m) {
                Some((_, e)) => *e += 1,
                None => out.push((m, 1)),
            }
            continue;
        }
        if let Some(r) = exact_sqrt(&m) {
            pending.push(r.clone());
            pending.push(r);
            continue;
        }
        let f = brent_rho(&m).ok_or_else(|| Error::FactorizationBudget(m.to_string()))?;
        pending.push(&m / &f);
        pending.push(f);
    }
    out.sort();
    Ok(out)
}

/// `n = k²·d` with `d` squarefree (carrying the sign of `n`).
pub fn squarefree_split(n: &BigInt) -> Result<(BigInt, BigInt)> {
    if n.is_zero() {
        return Ok((BigInt::zero(), BigInt::zero()));
    }
    let mut k = BigInt::one();
    let mut d = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    for (p, e) in trial_factor(n)? {
        k *= p.pow(e / 2);
        if e % 2 == 1 {
            d *= p;
        }
    }
    Ok((k, d))
}

/// Squarefree integer `d` with `q = r²·d` for some rational `r`, as `(r, d)`.
pub fn rational_squarefree_big(q: &BigRational) -> Result<(BigRational, BigInt)> {
    let (k, d) = squarefree_split(&(q.numer() * q.denom()))?;
    Ok((BigRational::new(k, q.denom().clone()), d))
}

/// As `rational_squarefree_big`, with `d` fitting a machine word.
pub fn rational_squarefree(q: &BigRational) -> Result<(BigRational, i64)> {
    let (r, d) = rational_squarefree_big(q)?;
    let d64 = d.to_i64().ok_or_else(|| Error::Unsupported(format!("extension discriminant {d} too large")))?;
    Ok((r, d64))
}

pub fn lcm_all<'a>(it: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |a, b| a.lcm(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn factors_small() {
        assert_eq!(trial_factor(&b(360)).unwrap(), vec![(b(2), 3), (b(3), 2), (b(5), 1)]);
        assert_eq!(trial_factor(&b(-97)).unwrap(), vec![(b(97), 1)]);
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_split(&b(-72)).unwrap(), (b(6), b(-2)));
        assert_eq!(squarefree_split(&b(49)).unwrap(), (b(7), b(1)));
        let (r, d) = rational_squarefree(&BigRational::new(b(8), b(3))).unwrap();
        assert_eq!(d, 6);
        assert_eq!(&r * &r * BigRational::from_integer(b(d)), BigRational::new(b(8), b(3)));
    }

    #[test]
    fn budget_exceeded_on_large_semiprime() {
        // 2^89 − 1 and 2^107 − 1 are prime, far beyond the rho budget
        let p = (BigInt::one() << 89u32) - 1;
        let q = (BigInt::one() << 107u32) - 1;
        assert!(matches!(trial_factor(&(&p * &q)), Err(Error::FactorizationBudget(_))));
        assert_eq!(trial_factor(&(&p * &p)).unwrap(), vec![(p, 2)]);
    }

    #[test]
    fn rho_splits_cofactors_beyond_trial_bound() {
        let p = b(1_000_003);
        let q = b(1_000_033);
        let r = b(998_244_353);
        assert_eq!(trial_factor(&(&p * &q * &r * 12)).unwrap(), vec![(b(2), 2), (b(3), 1), (p, 1), (q, 1), (r, 1)]);
        assert!(is_probable_prime(&((BigInt::one() << 61u32) - 1)));
        assert!(!is_probable_prime(&b(3_215_031_751)));
    }

    #[test]
    fn square_roots() {
        assert_eq!(exact_sqrt(&b(144)), Some(b(12)));
        assert_eq!(exact_sqrt(&b(145)), None);
        assert_eq!(rational_sqrt(&BigRational::new(b(9), b(4))), Some(BigRational::new(b(3), b(2))));
    }
}
