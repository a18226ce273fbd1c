//! Seeded random instances for the property suites.
//!
//! Modules are drawn two ways: rejection sampling of a random well-defined
//! `τ`-matrix until it squares to the identity, and direct sums of cyclic and
//! swap blocks conjugated by random elementary automorphisms. The second route
//! reaches free summands that the first rarely hits.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::group_ring::{GroupRingElement, Int};
use crate::ideal::GroupRingIdeal;
use crate::intmat::Matrix;
use crate::modules::AbelianTauModule;

pub use rand::SeedableRng;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const MAX_RANK: usize = 3;
pub const MAX_FACTOR: Int = 16;

/// Square roots of 1 modulo `d`.
pub fn involutive_units(d: Int) -> Vec<Int> {
    (0..d).filter(|&u| (u * u - 1).rem_euclid(d) == 0).collect()
}

/// A divisibility chain `d₁ | d₂ | …` drawn from `choices`.
fn random_chain(rng: &mut SeededRng, rank: usize, choices: &[Int]) -> Vec<Int> {
    loop {
        let mut chain: Vec<Int> = (0..rank).map(|_| *choices.choose(rng).unwrap()).collect();
        chain.sort_unstable();
        if chain.windows(2).all(|w| w[1] % w[0] == 0) {
            return chain;
        }
    }
}

fn identity(r: usize) -> Matrix {
    (0..r)
        .map(|i| (0..r).map(|j| Int::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let r = a.len();
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| (0..r).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Smallest `k > 0` making `e_j ↦ e_j + k·eᵢ` well defined, i.e. `d_j·k ≡ 0 (mod dᵢ)`.
fn elementary_step(d: &[Int], i: usize, j: usize) -> Int {
    d[i] / crate::arith::gcd(d[i], d[j])
}

fn reduce_rows(d: &[Int], m: &Matrix) -> Matrix {
    m.iter()
        .enumerate()
        .map(|(i, row)| row.iter().map(|x| x.rem_euclid(d[i])).collect())
        .collect()
}

fn block_involution(rng: &mut SeededRng, d: &[Int]) -> Matrix {
    let r = d.len();
    let mut u = identity(r);
    let mut i = 0;
    while i < r {
        if i + 1 < r && d[i] == d[i + 1] && rng.gen_bool(0.4) {
            u[i][i] = 0;
            u[i + 1][i + 1] = 0;
            u[i][i + 1] = 1;
            u[i + 1][i] = 1;
            i += 2;
        } else {
            u[i][i] = *involutive_units(d[i]).choose(rng).unwrap();
            i += 1;
        }
    }
    // conjugate by a few elementary automorphisms P = I + k·E_ij
    for _ in 0..rng.gen_range(0..=2 * r) {
        if r < 2 {
            break;
        }
        let i = rng.gen_range(0..r);
        let j = (i + rng.gen_range(1..r)) % r;
        let k = elementary_step(d, i, j) * rng.gen_range(1..=3);
        let mut p = identity(r);
        p[i][j] = k;
        let mut p_inv = identity(r);
        p_inv[i][j] = -k;
        u = reduce_rows(d, &mat_mul(&p_inv, &mat_mul(&u, &p)));
    }
    u
}

fn rejection_involution(rng: &mut SeededRng, d: &[Int], tries: usize) -> Option<Matrix> {
    let r = d.len();
    for _ in 0..tries {
        let u: Matrix = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let step = elementary_step(d, i, j);
                        step * rng.gen_range(0..d[i] / step)
                    })
                    .collect()
            })
            .collect();
        if AbelianTauModule::new(d.to_vec(), u.clone()).is_ok() {
            return Some(u);
        }
    }
    None
}

fn module_with_factors(rng: &mut SeededRng, d: Vec<Int>) -> AbelianTauModule {
    let u = if rng.gen_bool(0.5) {
        rejection_involution(rng, &d, 64)
    } else {
        None
    }
    .unwrap_or_else(|| block_involution(rng, &d));
    AbelianTauModule::new(d, u).expect("sampled τ-action is a well-defined involution")
}

/// Rank 1 to 3, invariant factors at most 16.
pub fn random_module(rng: &mut SeededRng) -> AbelianTauModule {
    let rank = rng.gen_range(1..=MAX_RANK);
    let choices: Vec<Int> = (2..=MAX_FACTOR).collect();
    let d = random_chain(rng, rank, &choices);
    module_with_factors(rng, d)
}

/// A module whose invariant factors are powers of 2 up to 16.
pub fn random_two_power_module(rng: &mut SeededRng) -> AbelianTauModule {
    let rank = rng.gen_range(1..=MAX_RANK);
    let d = random_chain(rng, rank, &[2, 4, 8, 16]);
    module_with_factors(rng, d)
}

/// `Z/w` with `τ` acting by a random square root of 1, `w ≤ max_w`.
pub fn random_cyclic_module(rng: &mut SeededRng, max_w: Int) -> AbelianTauModule {
    let w = rng.gen_range(2..=max_w);
    let u = *involutive_units(w).choose(rng).unwrap();
    AbelianTauModule::cyclic(w, u).expect("u² ≡ 1")
}

/// A random ideal of finite index in `Z[G]`, generated by one to three
/// elements with coefficients in `[-bound, bound]`.
pub fn random_integral_ideal(rng: &mut SeededRng, bound: Int) -> GroupRingIdeal {
    loop {
        let count = rng.gen_range(1..=3);
        let gens: Vec<_> = (0..count)
            .map(|_| {
                GroupRingElement::from_ints(
                    rng.gen_range(-bound..=bound),
                    rng.gen_range(-bound..=bound),
                )
            })
            .collect();
        if let Ok(ideal) = GroupRingIdeal::from_generators(&gens) {
            if ideal.index_in_r().is_ok() {
                return ideal;
            }
        }
    }
}

/// A 2-group `⊕ Z/2^{cᵢ}` (rank 1 to 4, `cᵢ ≤ 5`) with trivial action and
/// an element of order exactly 2.
pub fn random_two_group_instance(rng: &mut SeededRng) -> (AbelianTauModule, Vec<Int>) {
    let rank = rng.gen_range(1..=4);
    let mut exps: Vec<u32> = (0..rank).map(|_| rng.gen_range(1..=5)).collect();
    exps.sort_unstable();
    let d: Vec<Int> = exps.iter().map(|&c| 1 << c).collect();
    let m = loop {
        let m: Vec<Int> = d
            .iter()
            .map(|&di| if rng.gen_bool(0.5) { di / 2 } else { 0 })
            .collect();
        if m.iter().any(|&x| x != 0) {
            break m;
        }
    };
    (AbelianTauModule::trivial(d).expect("2-power chain"), m)
}
