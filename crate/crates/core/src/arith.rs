//! Elementary integer helpers shared by the lattice and arithmetic layers.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::group_ring::{Int, Rational};

pub fn gcd(a: Int, b: Int) -> Int {
    a.gcd(&b)
}

pub fn lcm(a: Int, b: Int) -> Int {
    a.lcm(&b)
}

/// Returns `(g, s, t)` with `g = gcd(a, b) >= 0` and `s·a + t·b = g`.
pub fn ext_gcd(a: Int, b: Int) -> (Int, Int, Int) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1, 0);
    let (mut t0, mut t1) = (0, 1);
    while r1 != 0 {
        let q = Integer::div_floor(&r0, &r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

pub fn is_prime(n: Int) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization of `|n|` as `(p, e)` pairs in increasing order of `p`.
pub fn factorize(n: Int) -> Vec<(Int, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: Int) -> Vec<Int> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_squarefree(n: Int) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

/// Positive divisors of `n != 0`, ascending.
pub fn divisors(n: Int) -> Vec<Int> {
    let mut out = vec![1];
    for (p, e) in factorize(n) {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn sigma1(n: Int) -> Int {
    divisors(n).into_iter().sum()
}

/// `p`-adic valuation of a nonzero integer.
pub fn valuation(n: Int, p: Int) -> u32 {
    assert!(n != 0, "valuation of zero");
    let mut n = n;
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// `p`-adic valuation of a nonzero rational.
pub fn rational_valuation(x: &Rational, p: Int) -> i32 {
    valuation(*x.numer(), p) as i32 - valuation(*x.denom(), p) as i32
}

/// `p`-part of a nonzero integer.
pub fn prime_part(n: Int, p: Int) -> Int {
    p.pow(valuation(n, p))
}

/// Odd part of a nonzero integer, taken positive.
pub fn odd_part(n: Int) -> Int {
    n.abs() / prime_part(n, 2)
}

/// gcd of a finite set of rationals: gcd of numerators over lcm of
/// denominators. Nonnegative; zero for an all-zero set.
pub fn rational_gcd<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> Rational {
    let mut num: Int = 0;
    let mut den: Int = 1;
    for x in xs {
        if x.is_zero() {
            continue;
        }
        num = gcd(num, *x.numer());
        den = lcm(den, *x.denom());
    }
    Rational::new(num, den).abs()
}

/// Chinese remainder for pairwise coprime moduli; returns the residue in `[0, ∏m)`.
pub fn crt(residues: &[(Int, Int)]) -> Int {
    let mut acc = 0;
    let mut modulus = 1;
    for &(r, m) in residues {
        let (g, s, _) = ext_gcd(modulus, m);
        debug_assert_eq!(g, 1, "moduli must be coprime");
        // acc + modulus·k ≡ r (mod m)
        let k = ((r - acc).mod_floor(&m) * s).mod_floor(&m);
        acc += modulus * k;
        modulus *= m;
        acc = acc.mod_floor(&modulus);
    }
    acc
}

/// Kronecker symbol `(d / n)` for `n >= 1`.
pub fn kronecker(d: Int, n: Int) -> i32 {
    assert!(n >= 1, "kronecker symbol needs n >= 1");
    let mut n = n;
    let mut result = 1;
    while n % 2 == 0 {
        n /= 2;
        let r = d.mod_floor(&8);
        match r {
            0 | 2 | 4 | 6 => return 0,
            1 | 7 => {}
            _ => result = -result,
        }
    }
    result * jacobi(d, n)
}

/// Jacobi symbol `(a / n)` for odd `n >= 1`.
pub fn jacobi(a: Int, n: Int) -> i32 {
    debug_assert!(n >= 1 && n % 2 == 1);
    let mut a = a.mod_floor(&n);
    let mut n = n;
    let mut result = 1;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let r = n % 8;
            if r == 3 || r == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n == 1 {
        result
    } else {
        0
    }
}
