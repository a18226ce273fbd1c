//! Oracles shared by the integration suites. Each recomputes a quantity
//! from first principles without calling the library routine under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_integer::Integer;
use tame_fitting::modules::AbelianTauModule;
use tame_fitting::{GroupRingElement, Int, Rational};

pub fn q(n: Int, d: Int) -> Rational {
    Rational::new(n, d)
}

/// Quadratic character of `Q(√D)` evaluated at a positive `a` coprime to `D`,
/// by factoring `a` and using Euler's criterion at odd primes.
pub fn chi(d: Int, a: Int) -> i32 {
    let mut a = a;
    let mut value = 1;
    let mut p = 2;
    while a > 1 {
        if p * p > a {
            p = a;
        }
        while a % p == 0 {
            a /= p;
            value *= if p == 2 {
                match d.rem_euclid(8) {
                    1 | 7 => 1,
                    3 | 5 => -1,
                    _ => 0,
                }
            } else {
                let mut acc: Int = 1;
                let mut base = d.rem_euclid(p);
                let mut e = (p - 1) / 2;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = acc * base % p;
                    }
                    base = base * base % p;
                    e >>= 1;
                }
                match acc {
                    0 => 0,
                    1 => 1,
                    _ => -1,
                }
            };
        }
        p += 1;
    }
    value
}

/// `ζ_{Q(√D)}(−1) = ζ(−1)·L(−1, χ_D)` with `L(−1, χ) = −B_{2,χ}/2` and
/// `B_{2,χ} = D·Σ_{a=1}^{D} χ(a)·(a²/D² − a/D + 1/6)`.
pub fn bernoulli_zeta_oracle(d: Int) -> Rational {
    let mut b2 = Rational::from(0);
    for a in 1..=d {
        if a.gcd(&d) != 1 {
            continue;
        }
        let x = q(a, d);
        b2 += Rational::from(chi(d, a) as Int) * (x * x - x + q(1, 6));
    }
    b2 *= Rational::from(d);
    q(-1, 12) * (-b2 / Rational::from(2))
}

/// Largest `N ≤ 512` with `Gal(L(μ_N)/L)` of exponent dividing 2, checked on
/// the full group `(Z/N)^×` (or its subgroup fixing `√D` when `D | N`).
/// Also confirms every such `N` divides the maximum.
pub fn w2_oracle(d: Option<Int>) -> Int {
    let good = |n: Int| {
        (1..n.max(2))
            .filter(|&a| a.gcd(&n) == 1)
            .filter(|&a| match d {
                Some(d) if n % d == 0 => chi(d, a) == 1,
                _ => true,
            })
            .all(|a| (a * a) % n == 1 % n)
    };
    let all: Vec<Int> = (1..=512).filter(|&n| good(n)).collect();
    let max = *all.iter().max().unwrap();
    assert!(
        all.iter().all(|n| max % n == 0),
        "exponent-2 moduli are not a divisor lattice"
    );
    max
}

pub fn enumerate(d: &[Int]) -> Vec<Vec<Int>> {
    let mut out = vec![vec![]];
    for &di in d {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..di).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// `(x + y·τ)·v` on `⊕ Z/dᵢ`.
pub fn act(m: &AbelianTauModule, x: Int, y: Int, v: &[Int]) -> Vec<Int> {
    let d = m.invariant_factors();
    let u = m.tau_action();
    (0..d.len())
        .map(|i| {
            let tv: Int = (0..d.len()).map(|j| u[i][j] * v[j]).sum();
            (x * v[i] + y * tv).rem_euclid(d[i])
        })
        .collect()
}

pub struct BruteForce {
    pub fixed: Int,
    pub minus: Int,
    pub h1: Int,
    pub h2: Int,
}

pub fn brute_force(m: &AbelianTauModule) -> BruteForce {
    let elems = enumerate(m.invariant_factors());
    let zero = vec![0; m.rank()];
    let fixed = elems.iter().filter(|v| act(m, 1, -1, v) == zero).count() as Int;
    let minus = elems.iter().filter(|v| act(m, 1, 1, v) == zero).count() as Int;
    let img_minus: BTreeSet<_> = elems.iter().map(|v| act(m, 1, -1, v)).collect();
    let img_plus: BTreeSet<_> = elems.iter().map(|v| act(m, 1, 1, v)).collect();
    BruteForce {
        fixed,
        minus,
        h1: minus / img_minus.len() as Int,
        h2: fixed / img_plus.len() as Int,
    }
}

/// Whether `x` kills every generator of `M`.
pub fn annihilates(m: &AbelianTauModule, x: &GroupRingElement) -> bool {
    let (a, b) = (x.c_one().to_integer(), x.c_tau().to_integer());
    let r = m.rank();
    (0..r).all(|j| {
        let e: Vec<Int> = (0..r).map(|i| Int::from(i == j)).collect();
        act(m, a, b, &e).iter().all(|&c| c == 0)
    })
}
