//! Integer primality and factorization: trial division, Miller–Rabin with a
//! strong Lucas test beyond the deterministic range, Pollard–Brent.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const SMALL_PRIMES: [u64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

const TRIAL_LIMIT: u64 = 10_000;

fn mulmod64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod64(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod64(acc, a, m);
        }
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic primality for all `u64`.
pub fn is_probable_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES[..12] {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'outer: for &a in &SMALL_PRIMES[..12] {
        let mut x = powmod64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod64(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn miller_rabin(n: &BigUint, base: u64) -> bool {
    let one = BigUint::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    let mut x = BigUint::from(base).modpow(&d, n);
    if x == one || x == nm1 {
        return true;
    }
    for _ in 1..s {
        x = x.modpow(&BigUint::from(2u32), n);
        if x == nm1 {
            return true;
        }
    }
    false
}

fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut result = 1;
    let three = BigInt::from(3);
    let five = BigInt::from(5);
    let eight = BigInt::from(8);
    let four = BigInt::from(4);
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1;
            let r = n.mod_floor(&eight);
            if r == three || r == five {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.mod_floor(&four) == three && n.mod_floor(&four) == three {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Strong Lucas probable-prime test with Selfridge parameters.
fn strong_lucas(n: &BigUint) -> bool {
    let nn = BigInt::from(n.clone());
    if n.sqrt().pow(2) == *n {
        return false;
    }
    let mut d = BigInt::from(5);
    loop {
        match jacobi(&d, &nn) {
            -1 => break,
            0 => {
                if d.abs() != nn {
                    return false;
                }
            }
            _ => {}
        }
        let two = BigInt::from(2);
        d = if d.is_positive() { -(d + two) } else { -(d - two) };
    }
    let p = BigInt::one();
    let q: BigInt = (BigInt::one() - &d) / BigInt::from(4);
    let np1: BigInt = &nn + BigInt::one();
    let s = np1.trailing_zeros().unwrap_or(0);
    let k = &np1 >> s;
    let md = |x: BigInt| x.mod_floor(&nn);
    let half = |x: BigInt| {
        let x = if x.is_odd() { x + &nn } else { x };
        md(x >> 1)
    };
    // Binary Lucas chain for U_k, V_k, Q^k.
    let (mut u, mut v, mut qk) = (BigInt::one(), p.clone(), md(q.clone()));
    let bits = k.bits();
    for i in (0..bits - 1).rev() {
        u = md(&u * &v);
        v = md(&v * &v - 2 * &qk);
        qk = md(&qk * &qk);
        if k.bit(i) {
            let nu = half(&p * &u + &v);
            let nv = half(&d * &u + &p * &v);
            u = nu;
            v = nv;
            qk = md(&qk * &q);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = md(&v * &v - 2 * &qk);
        if v.is_zero() {
            return true;
        }
        qk = md(&qk * &qk);
    }
    false
}

/// Primality: deterministic below `3.3e24`, Baillie–PSW above.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_probable_prime_u64(small);
    }
    for &p in &SMALL_PRIMES {
        if (n % p).is_zero() {
            return false;
        }
    }
    let bound: BigUint = "3317044064679887385961981".parse().unwrap();
    if *n < bound {
        return SMALL_PRIMES[..13].iter().all(|&a| miller_rabin(n, a));
    }
    miller_rabin(n, 2) && strong_lucas(n)
}

fn gcd64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

fn brent_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    for c in 1..n {
        let f = |x: u64| (mulmod64(x, x, n) + c) % n;
        let (mut y, mut g, mut r, mut q) = (2u64, 1u64, 1u64, 1u64);
        let m = 128;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..m.min(r - k) {
                    y = f(y);
                    q = mulmod64(q, x.abs_diff(y), n);
                }
                g = gcd64(q, n);
                k += m;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                g = gcd64(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    n
}

fn brent_big(n: &BigUint) -> BigUint {
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut y, mut g, mut r, mut q) = (BigUint::from(2u32), BigUint::one(), 1u64, BigUint::one());
        let m = 128u64;
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..m.min(r - k) {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1u32;
    }
}

fn split(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    let d = match n.to_u64() {
        Some(small) => BigUint::from(brent_u64(small)),
        None => brent_big(&n),
    };
    let rest = &n / &d;
    split(d, out);
    split(rest, out);
}

/// Prime factorization of a positive integer, primes ascending.
pub fn factor_integer(n: &BigUint) -> Vec<(BigUint, u32)> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut n = n.clone();
    let mut primes = Vec::new();
    let mut p = 2u64;
    while p < TRIAL_LIMIT && BigUint::from(p * p) <= n {
        while (&n % p).is_zero() {
            n /= p;
            primes.push(BigUint::from(p));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    split(n, &mut primes);
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for q in primes {
        match out.last_mut() {
            Some((last, e)) if *last == q => *e += 1,
            _ => out.push((q, 1)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: u64) -> Vec<(u64, u32)> {
        factor_integer(&BigUint::from(n))
            .into_iter()
            .map(|(p, e)| (p.to_u64().unwrap(), e))
            .collect()
    }

    #[test]
    fn small_factorizations() {
        assert_eq!(f(60), vec![(2, 2), (3, 1), (5, 1)]);
        assert_eq!(f(186), vec![(2, 1), (3, 1), (31, 1)]);
        assert_eq!(f(1), vec![]);
        assert_eq!(f(97), vec![(97, 1)]);
    }

    #[test]
    fn large_semiprimes() {
        let a = 1_000_000_007u64;
        let b = 998_244_353u64;
        assert_eq!(f(a * b), vec![(b, 1), (a, 1)]);
        let big = BigUint::from(a) * BigUint::from(b) * BigUint::from(1_000_000_009u64);
        let fac = factor_integer(&big);
        assert_eq!(fac.len(), 3);
        assert!(fac.iter().all(|(p, _)| is_prime(p)));
    }

    #[test]
    fn primality_agrees_with_sieve() {
        let limit = 5000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (n, &expected) in sieve.iter().enumerate() {
            assert_eq!(is_probable_prime_u64(n as u64), expected, "{n}");
        }
    }

    #[test]
    fn big_primes_and_pseudoprimes() {
        let m61 = (BigUint::one() << 61) - 1u32;
        assert!(is_prime(&m61));
        let m127 = (BigUint::one() << 127) - 1u32;
        assert!(is_prime(&m127));
        assert!(!is_prime(&(&m127 * &m61)));
        // Strong pseudoprime to many bases.
        let spp: BigUint = "3825123056546413051".parse().unwrap();
        assert!(!is_prime(&spp));
        assert!(strong_lucas(&m127));
    }
}
