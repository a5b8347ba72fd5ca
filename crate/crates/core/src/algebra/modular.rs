//! Multi-modular reduced row echelon form for rational matrices.
//!
//! Each prime gives an echelon form over `Z/p`; primes whose pivot set
//! differs from the best one seen are discarded. Entries are lifted by CRT
//! and rational reconstruction, and the result is accepted only after every
//! kernel vector it defines is checked against the input exactly, which
//! pins the rank and hence the whole reduced form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::sync::{Mutex, OnceLock};

use super::scalar::ExactScalar;

/// Prime count after which the caller falls back to exact elimination.
const MAX_PRIMES: usize = 4000;
const BATCH: usize = 4;

/// Primes below `2^15.5`, enough to test 31-bit candidates.
fn small_primes() -> &'static [u64] {
    static SMALL: OnceLock<Vec<u64>> = OnceLock::new();
    SMALL.get_or_init(|| {
        let n = 46_341usize;
        let mut sieve = vec![true; n + 1];
        let mut out = Vec::new();
        for i in 2..=n {
            if sieve[i] {
                out.push(i as u64);
                (i * i..=n).step_by(i).for_each(|j| sieve[j] = false);
            }
        }
        out
    })
}

fn is_prime(n: u64) -> bool {
    n >= 2 && small_primes().iter().take_while(|&&d| d * d <= n).all(|&d| n % d != 0)
}

/// The `i`-th 31-bit prime counting down from `2^31`, memoized.
fn prime(i: usize) -> u64 {
    static LARGE: Mutex<Vec<u64>> = Mutex::new(Vec::new());
    let mut v = LARGE.lock().unwrap_or_else(|e| e.into_inner());
    while v.len() <= i {
        let mut c = v.last().copied().unwrap_or(1 << 31) - 1;
        while !is_prime(c) {
            c -= 1;
        }
        v.push(c);
    }
    v[i]
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("reduced")
}

/// Reduced echelon form mod `p`: pivot columns and the nonzero rows.
fn rref_mod(rows: &[Vec<BigInt>], cols: usize, p: u64) -> (Vec<usize>, Vec<Vec<u64>>) {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| reduce(x, p)).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, k);
        let inv = inv_mod(m[r][c], p);
        for x in m[r].iter_mut().skip(c) {
            *x = *x * inv % p;
        }
        let pr = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pr).skip(c) {
                if y != 0 {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (pivots, m)
}

/// `a/b ≡ x (mod m)` with `|a|, |b| ≤ √(m/2)`.
fn rational_reconstruct(x: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound = (m >> 1u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), x.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// Reduced row echelon form of an integer matrix given by rows, or `None`
/// when the prime budget runs out.
pub fn modular_rref(rows: &[Vec<BigInt>], cols: usize) -> Option<(Vec<Vec<ExactScalar>>, Vec<usize>)> {
    let mut pivots: Option<Vec<usize>> = None;
    // residues combined so far, entry-wise, and their modulus
    let mut acc: Vec<Vec<BigInt>> = Vec::new();
    let mut modulus = BigInt::one();
    let mut used = 0;
    let mut last: Option<Vec<Vec<BigRational>>> = None;
    while used < MAX_PRIMES {
        for _ in 0..BATCH {
            let p = prime(used);
            used += 1;
            let (piv, red) = rref_mod(rows, cols, p);
            match &pivots {
                Some(cur) if piv.len() < cur.len() || (piv.len() == cur.len() && piv > *cur) => continue,
                Some(cur) if *cur == piv => {
                    // Garner step: x ← x + M·((r − x)·M⁻¹ mod p)
                    let pb = BigInt::from(p);
                    let minv = BigInt::from(inv_mod(reduce(&modulus, p), p));
                    for (arow, rrow) in acc.iter_mut().zip(&red) {
                        for (a, &r) in arow.iter_mut().zip(rrow) {
                            let diff = (BigInt::from(r) - &*a).mod_floor(&pb);
                            let k = (diff * &minv).mod_floor(&pb);
                            *a += &modulus * k;
                        }
                    }
                    modulus *= &pb;
                }
                _ => {
                    acc = red.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
                    modulus = BigInt::from(p);
                    pivots = Some(piv);
                    last = None;
                }
            }
        }
        let piv = pivots.as_ref()?;
        let mut lifted: Vec<Vec<BigRational>> = Vec::with_capacity(acc.len());
        let mut ok = true;
        'rows: for arow in &acc {
            let mut out = Vec::with_capacity(cols);
            for a in arow {
                match rational_reconstruct(a, &modulus) {
                    Some(q) => out.push(q),
                    None => {
                        ok = false;
                        break 'rows;
                    }
                }
            }
            lifted.push(out);
        }
        if !ok {
            continue;
        }
        // accept two consecutive agreeing lifts that pass the exact check
        if last.as_ref() == Some(&lifted) && verify(rows, cols, piv, &lifted) {
            let out = lifted.into_iter().map(|r| r.into_iter().map(ExactScalar::from_rational).collect()).collect();
            return Some((out, piv.clone()));
        }
        last = Some(lifted);
    }
    None
}

/// Every kernel vector defined by the candidate form annihilates the rows.
fn verify(rows: &[Vec<BigInt>], cols: usize, pivots: &[usize], red: &[Vec<BigRational>]) -> bool {
    let mut is_pivot = vec![false; cols];
    for &c in pivots {
        is_pivot[c] = true;
    }
    for (i, &c) in pivots.iter().enumerate() {
        // pivot entry must be 1 and entries left of it 0
        if !red[i][c].is_one() || red[i][..c].iter().any(|x| !x.is_zero()) {
            return false;
        }
    }
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -red[i][free].clone();
        }
        let den = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let vi: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(den.clone())).to_integer()).collect();
        for row in rows {
            let s = row.iter().zip(&vi).filter(|(a, b)| !a.is_zero() && !b.is_zero()).fold(BigInt::zero(), |s, (a, b)| s + a * b);
            if !s.is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn reconstruction() {
        let m = BigInt::from(1_000_003i64) * BigInt::from(998_244_353i64);
        let q = BigRational::new(BigInt::from(-37), BigInt::from(91));
        let inv = BigInt::from(91).extended_gcd(&m).x.mod_floor(&m);
        let x = (BigInt::from(-37) * inv).mod_floor(&m);
        assert_eq!(rational_reconstruct(&x, &m), Some(q));
    }

    #[test]
    fn small_rref() {
        let rows = ints(&[&[2, 4, 6], &[1, 2, 4], &[3, 6, 10]]);
        let (r, piv) = modular_rref(&rows, 3).unwrap();
        assert_eq!(piv, vec![0, 2]);
        assert_eq!(r[0], vec![ExactScalar::one(), ExactScalar::from_i64(2), ExactScalar::zero()]);
        assert_eq!(r[1], vec![ExactScalar::zero(), ExactScalar::zero(), ExactScalar::one()]);
    }

    #[test]
    fn fractional_entries() {
        let rows = ints(&[&[3, 7, 1, 0], &[5, -2, 0, 1]]);
        let (r, piv) = modular_rref(&rows, 4).unwrap();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(r[0][2], ExactScalar::from_ratio(2, 41));
        assert_eq!(r[0][3], ExactScalar::from_ratio(7, 41));
        assert_eq!(r[1][2], ExactScalar::from_ratio(5, 41));
        assert_eq!(r[1][3], ExactScalar::from_ratio(-3, 41));
    }
}
