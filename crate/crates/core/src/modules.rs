//! Finite `Z[G]`-modules, given either by a relation matrix over `Z[G]` or
//! as an abelian group `⊕ Z/dᵢ` together with the integer matrix of `τ`.
//!
//! Everything here is deliberately direct (minors, congruence kernels,
//! Smith counting) since it serves as the oracle layer for the ideal
//! identities checked by the verifier.

use std::fmt::Write as _;

use itertools::Itertools;
use num_integer::Integer;

use crate::arith::{ext_gcd, gcd, valuation};
use crate::error::{Error, Result};
use crate::group_ring::{ComponentPair, GroupRingElement, Int, Rational};
use crate::ideal::GroupRingIdeal;
use crate::intmat::{self, Matrix};

/// Largest number of generators for which Fitting minors are enumerated.
pub const MAX_MINOR_GENERATORS: usize = 4;

/// Default bound on `|M|` for [`AbelianTauModule::annihilator_bruteforce`].
pub const DEFAULT_ANNIHILATOR_BOUND: Int = 1_000_000;

/// A finitely presented `Z[G]`-module: the cokernel of the map
/// `R^m → R^n` whose columns are `relation_columns`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModulePresentation {
    generators: usize,
    relation_columns: Vec<Vec<GroupRingElement>>,
}

/// `⊕ Z/dᵢ` with `d₁ | d₂ | …` and `τ` acting by the integer matrix `U`:
/// `τ·e_j = Σᵢ U_ij·e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianTauModule {
    invariant_factors: Vec<Int>,
    tau_action: Matrix,
}

/// `(|M^G|, |M⁻|, |M^{1−τ}|, |M^{1+τ}|)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubOrders {
    pub fixed: Int,
    pub minus: Int,
    pub image_one_minus_tau: Int,
    pub image_one_plus_tau: Int,
}

impl FiniteModulePresentation {
    pub fn new(generators: usize, relation_columns: Vec<Vec<GroupRingElement>>) -> Result<Self> {
        if relation_columns.len() < generators {
            return Err(Error::InvalidModule(format!(
                "{} relation columns for {} generators",
                relation_columns.len(),
                generators
            )));
        }
        for col in &relation_columns {
            if col.len() != generators {
                return Err(Error::InvalidModule(
                    "relation column of wrong length".into(),
                ));
            }
            if col.iter().any(|g| !g.is_integral()) {
                return Err(Error::InvalidModule(
                    "relation entries must lie in Z[G]".into(),
                ));
            }
        }
        Ok(FiniteModulePresentation {
            generators,
            relation_columns,
        })
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relation_columns(&self) -> &[Vec<GroupRingElement>] {
        &self.relation_columns
    }

    /// Relations expanded over the Z-basis `(1, τ)` of each free summand:
    /// every column contributes itself and its τ-translate.
    fn integer_relations(&self) -> Vec<Vec<Int>> {
        let coords = |g: &GroupRingElement| (g.c_one().to_integer(), g.c_tau().to_integer());
        self.relation_columns
            .iter()
            .flat_map(|col| {
                let direct = col.iter().flat_map(|g| {
                    let (a, b) = coords(g);
                    [a, b]
                });
                let shifted = col.iter().flat_map(|g| {
                    let (a, b) = coords(g);
                    [b, a]
                });
                [direct.collect::<Vec<_>>(), shifted.collect::<Vec<_>>()]
            })
            .collect()
    }

    /// Order of the cokernel as an abelian group, `None` when infinite.
    pub fn cokernel_order(&self) -> Option<Int> {
        intmat::lattice_index(2 * self.generators, &self.integer_relations())
    }

    /// Ideal generated by all `n × n` minors of the relation matrix.
    pub fn fitting_ideal(&self) -> Result<GroupRingIdeal> {
        let n = self.generators;
        if n > MAX_MINOR_GENERATORS {
            return Err(Error::TooManyGenerators(n, MAX_MINOR_GENERATORS));
        }
        if self.cokernel_order().is_none() {
            return Err(Error::InfiniteCokernel);
        }
        let minors: Vec<GroupRingElement> = (0..self.relation_columns.len())
            .combinations(n)
            .map(|cols| {
                let square: Vec<Vec<GroupRingElement>> = (0..n)
                    .map(|i| cols.iter().map(|&j| self.relation_columns[j][i]).collect())
                    .collect();
                group_ring_determinant(&square)
            })
            .collect();
        GroupRingIdeal::from_generators(&minors)
    }
}

/// Determinant over the commutative ring `Q[G]` by cofactor expansion.
pub fn group_ring_determinant(m: &[Vec<GroupRingElement>]) -> GroupRingElement {
    match m.len() {
        0 => GroupRingElement::one(),
        1 => m[0][0],
        n => {
            let mut acc = GroupRingElement::zero();
            for j in 0..n {
                let minor: Vec<Vec<GroupRingElement>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(k, _)| k != j)
                            .map(|(_, x)| *x)
                            .collect()
                    })
                    .collect();
                let term = m[0][j] * group_ring_determinant(&minor);
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

impl AbelianTauModule {
    /// Validates the invariant-factor chain and checks that `U` is a
    /// well-defined endomorphism squaring to the identity. Entries of
    /// row `i` are stored reduced mod `dᵢ`.
    pub fn new(invariant_factors: Vec<Int>, tau_action: Matrix) -> Result<Self> {
        let r = invariant_factors.len();
        let bad = |msg: String| Err(Error::InvalidModule(msg));
        if invariant_factors.iter().any(|&d| d < 2) {
            return bad("invariant factors must be at least 2".into());
        }
        if invariant_factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return bad("invariant factors must form a divisibility chain".into());
        }
        if tau_action.len() != r || tau_action.iter().any(|row| row.len() != r) {
            return bad(format!("τ-action must be a {r}×{r} matrix"));
        }
        let d = &invariant_factors;
        let u: Matrix = tau_action
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().map(|x| x.mod_floor(&d[i])).collect())
            .collect();
        for i in 0..r {
            for j in 0..r {
                if (d[j] * u[i][j]) % d[i] != 0 {
                    return bad(format!(
                        "τ-action is not well defined on generator {}",
                        j + 1
                    ));
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                let sq: Int = (0..r).map(|k| u[i][k] * u[k][j]).sum();
                let delta = Int::from(i == j);
                if (sq - delta) % d[i] != 0 {
                    return bad("τ-action does not square to the identity".into());
                }
            }
        }
        Ok(AbelianTauModule {
            invariant_factors: invariant_factors.clone(),
            tau_action: u,
        })
    }

    /// `Z/w` with `τ` acting as multiplication by `u`.
    pub fn cyclic(w: Int, u: Int) -> Result<Self> {
        Self::new(vec![w], vec![vec![u]])
    }

    /// `⊕ Z/dᵢ` with trivial `τ`.
    pub fn trivial(invariant_factors: Vec<Int>) -> Result<Self> {
        let r = invariant_factors.len();
        let id = (0..r)
            .map(|i| (0..r).map(|j| Int::from(i == j)).collect())
            .collect();
        Self::new(invariant_factors, id)
    }

    pub fn invariant_factors(&self) -> &[Int] {
        &self.invariant_factors
    }

    pub fn tau_action(&self) -> &Matrix {
        &self.tau_action
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn order(&self) -> Int {
        self.invariant_factors.iter().product()
    }

    /// `|ker A|` for the endomorphism with integer matrix `A`, which equals
    /// `[Z^r : A·Z^r + D·Z^r]`.
    fn kernel_order(&self, a: &Matrix) -> Int {
        let r = self.rank();
        let mut gens: Vec<Vec<Int>> = (0..r).map(|j| (0..r).map(|i| a[i][j]).collect()).collect();
        for (i, &d) in self.invariant_factors.iter().enumerate() {
            let mut col = vec![0; r];
            col[i] = d;
            gens.push(col);
        }
        intmat::lattice_index(r, &gens).expect("D has full rank")
    }

    fn shifted(&self, sign: Int) -> Matrix {
        let r = self.rank();
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| self.tau_action[i][j] + sign * Int::from(i == j))
                    .collect()
            })
            .collect()
    }

    pub fn sub_orders(&self) -> SubOrders {
        let order = self.order();
        let fixed = self.kernel_order(&self.shifted(-1));
        let minus = self.kernel_order(&self.shifted(1));
        SubOrders {
            fixed,
            minus,
            image_one_minus_tau: order / fixed,
            image_one_plus_tau: order / minus,
        }
    }

    /// `(|H¹(G, M)|, |H²(G, M)|) = (|M⁻/M^{1−τ}|, |M^G/M^{1+τ}|)`.
    pub fn cohomology_orders(&self) -> (Int, Int) {
        let s = self.sub_orders();
        (
            s.minus / s.image_one_minus_tau,
            s.fixed / s.image_one_plus_tau,
        )
    }

    /// Presentation on the invariant-factor generators: relations `dᵢ·eᵢ`
    /// and `τ·e_j − Σᵢ U_ij·eᵢ`.
    pub fn presentation(&self) -> FiniteModulePresentation {
        let r = self.rank();
        let mut cols = Vec::with_capacity(2 * r);
        for (i, &d) in self.invariant_factors.iter().enumerate() {
            let mut col = vec![GroupRingElement::zero(); r];
            col[i] = GroupRingElement::from(d);
            cols.push(col);
        }
        for j in 0..r {
            let col = (0..r)
                .map(|i| {
                    let tau = if i == j { 1 } else { 0 };
                    GroupRingElement::from_ints(-self.tau_action[i][j], tau)
                })
                .collect();
            cols.push(col);
        }
        FiniteModulePresentation::new(r, cols).expect("well-formed by construction")
    }

    /// `Ann_{Z[G]}(M)` as the lattice of `(x, y)` with `x + y·U ≡ 0` on every
    /// generator, solved one congruence at a time.
    pub fn annihilator_bruteforce(&self, bound: Int) -> Result<GroupRingIdeal> {
        let order = self.order();
        if order > bound {
            return Err(Error::BoundExceeded(order, bound));
        }
        let r = self.rank();
        let d = &self.invariant_factors;
        // (x + yU)·e_j = Σᵢ (x·δᵢⱼ + y·Uᵢⱼ)·eᵢ
        let conditions = (0..r)
            .flat_map(|j| (0..r).map(move |i| (Int::from(i == j), self.tau_action[i][j], d[i])));
        let basis = congruence_kernel(conditions);
        GroupRingIdeal::from_lattice(&basis)
    }

    /// Splits a 2-group so that the order-2 element `m` lies in one cyclic
    /// factor: returns `e₁, …, e_{t−1}, e_t′, e_{t+1}, …, e_r` with
    /// `2^{c_t − 1}·e_t′ = m`, where `t` is the first coordinate where `m` is
    /// nonzero.
    pub fn split_two_group(&self, m: &[Int]) -> Result<Vec<Vec<Int>>> {
        let d = &self.invariant_factors;
        let r = d.len();
        if d.iter().any(|&x| x & (x - 1) != 0) {
            return Err(Error::InvalidModule("not a 2-group".into()));
        }
        if m.len() != r {
            return Err(Error::NotOrderTwo(format!("{m:?} has the wrong length")));
        }
        let m: Vec<Int> = m.iter().zip(d).map(|(x, di)| x.mod_floor(di)).collect();
        if m.iter().all(|&x| x == 0) || m.iter().zip(d).any(|(x, di)| (2 * x) % di != 0) {
            return Err(Error::NotOrderTwo(format!("{m:?}")));
        }
        let exps: Vec<u32> = d.iter().map(|&x| valuation(x, 2)).collect();
        let t = m.iter().position(|&x| x != 0).expect("m is nonzero");
        let mut basis: Vec<Vec<Int>> = (0..r)
            .map(|i| (0..r).map(|j| Int::from(i == j)).collect())
            .collect();
        basis[t] = (0..r)
            .map(|j| match j {
                j if j < t => 0,
                j if j == t => 1,
                j if m[j] != 0 => 1 << (exps[j] - exps[t]),
                _ => 0,
            })
            .collect();
        Ok(basis)
    }
}

/// Kernel lattice in `Z²` of congruences `α·x + β·y ≡ 0 (mod d)`, returned
/// as a list of spanning vectors.
fn congruence_kernel(conditions: impl IntoIterator<Item = (Int, Int, Int)>) -> Vec<(Int, Int)> {
    // columns of the current basis
    let mut b = [(1, 0), (0, 1)];
    for (alpha, beta, d) in conditions {
        let a1 = (alpha * b[0].0 + beta * b[0].1).mod_floor(&d);
        let a2 = (alpha * b[1].0 + beta * b[1].1).mod_floor(&d);
        let (h, s, t) = ext_gcd(a1, a2);
        if h == 0 {
            continue;
        }
        // V = [[s, −a2/h], [t, a1/h]] has det 1 and (a1, a2)·V = (h, 0)
        let v = [(s, t), (-a2 / h, a1 / h)];
        let combine = |w: (Int, Int)| (b[0].0 * w.0 + b[1].0 * w.1, b[0].1 * w.0 + b[1].1 * w.1);
        let step = d / gcd(h, d);
        let c0 = combine(v[0]);
        let c1 = combine(v[1]);
        b = [(c0.0 * step, c0.1 * step), c1];
        b = reduce_basis(b);
    }
    b.to_vec()
}

/// Hermite-reduces a basis of a full-rank lattice in `Z²` to keep entries small.
fn reduce_basis(b: [(Int, Int); 2]) -> [(Int, Int); 2] {
    // rows (x, y): eliminate the first coordinate of one vector
    let [(x0, y0), (x1, y1)] = b;
    if x0 == 0 && x1 == 0 {
        return b;
    }
    let (g, s, t) = ext_gcd(x0, x1);
    let top = (g, s * y0 + t * y1);
    let c = (x1 / g) * y0 - (x0 / g) * y1;
    match c {
        0 => [top, (0, 0)],
        c => [(top.0, top.1.mod_floor(&c.abs())), (0, c.abs())],
    }
}

/// Generators of `Ann_{Z[G]}(W₂(E))` for cyclic `W₂(E)` of order `w_E` with
/// `τ` acting by `u`: `|W^{1+τ}|(1+τ)` and `|W^{1−τ}|(1−τ)` in general, or
/// the single element `|W^{1+τ}|e⁺ + |W^{1−τ}|e⁻` over the first layer.
pub fn prop41_generators(
    w_f: Int,
    w_e: Int,
    u: Int,
    first_layer: bool,
) -> Result<Vec<GroupRingElement>> {
    let bad = |msg: String| Err(Error::InconsistentW2(msg));
    if w_f <= 0 || w_e <= 0 || w_e % w_f != 0 {
        return bad(format!("w_F = {w_f} must divide w_E = {w_e}"));
    }
    if w_f % 8 != 0 {
        return bad(format!("w_F = {w_f} is not divisible by 8"));
    }
    if (u * u - 1).mod_floor(&w_e) != 0 || gcd(u - 1, w_e) != w_f {
        return bad(format!("u = {u} is not a τ-action unit for ({w_f}, {w_e})"));
    }
    let layer_jump = valuation(w_e, 2) > valuation(w_f, 2);
    if layer_jump != first_layer {
        return bad(format!(
            "2-parts of ({w_f}, {w_e}) contradict first_layer = {first_layer}"
        ));
    }
    let image_plus = w_e / gcd(u + 1, w_e);
    let image_minus = w_e / w_f;
    if first_layer {
        Ok(vec![GroupRingElement::from_components(
            ComponentPair::from_ints(image_plus, image_minus),
        )])
    } else {
        Ok(vec![
            GroupRingElement::from_ints(image_plus, image_plus),
            GroupRingElement::from_ints(image_minus, -image_minus),
        ])
    }
}

/// A module record of the line-oriented fixture format:
///
/// ```text
/// module
/// factors = 2 4
/// row = 1 0
/// row = 0 1
/// element = 1 2
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleFixture {
    pub module: AbelianTauModule,
    pub element: Option<Vec<Int>>,
}

impl ModuleFixture {
    pub fn render(&self) -> String {
        let ints = |v: &[Int]| v.iter().map(|x| x.to_string()).join(" ");
        let mut out = String::from("module\n");
        let _ = writeln!(out, "factors = {}", ints(self.module.invariant_factors()));
        for row in self.module.tau_action() {
            let _ = writeln!(out, "row = {}", ints(row));
        }
        if let Some(m) = &self.element {
            let _ = writeln!(out, "element = {}", ints(m));
        }
        out
    }
}

pub fn parse_module_fixtures(text: &str) -> Result<Vec<ModuleFixture>> {
    #[derive(Default)]
    struct Draft {
        factors: Option<Vec<Int>>,
        rows: Vec<Vec<Int>>,
        element: Option<Vec<Int>>,
    }
    fn finish(draft: Draft, out: &mut Vec<ModuleFixture>) -> Result<()> {
        let factors = draft
            .factors
            .ok_or_else(|| Error::parse("module fixture", "missing `factors`"))?;
        let module = AbelianTauModule::new(factors, draft.rows)?;
        out.push(ModuleFixture {
            module,
            element: draft.element,
        });
        Ok(())
    }
    let ints = |s: &str, line: usize| -> Result<Vec<Int>> {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<Int>().map_err(|_| {
                    Error::parse("module fixture", format!("line {line}: bad integer {t:?}"))
                })
            })
            .collect()
    };

    let mut out = Vec::new();
    let mut current: Option<Draft> = None;
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if line == "module" {
            if let Some(d) = current.take() {
                finish(d, &mut out)?;
            }
            current = Some(Draft::default());
            continue;
        }
        let draft = current.as_mut().ok_or_else(|| {
            Error::parse(
                "module fixture",
                format!("line {}: outside a module block", n + 1),
            )
        })?;
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::parse(
                "module fixture",
                format!("line {}: expected key = value", n + 1),
            )
        })?;
        match key.trim() {
            "factors" => draft.factors = Some(ints(value, n + 1)?),
            "row" => draft.rows.push(ints(value, n + 1)?),
            "element" => draft.element = Some(ints(value, n + 1)?),
            other => {
                return Err(Error::parse(
                    "module fixture",
                    format!("line {}: unknown key {other:?}", n + 1),
                ))
            }
        }
    }
    if let Some(d) = current.take() {
        finish(d, &mut out)?;
    }
    Ok(out)
}

/// `|M/M^{1−τ}|·e⁺`, the element whose 2-local membership in the Fitting
/// ideal is asserted when `|H¹| = 2`.
pub fn plus_order_element(module: &AbelianTauModule) -> GroupRingElement {
    GroupRingElement::e_plus().scale(Rational::from(module.sub_orders().fixed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(a: Int, b: Int) -> GroupRingElement {
        GroupRingElement::from_ints(a, b)
    }

    fn ideal(gens: &[(Int, Int)]) -> GroupRingIdeal {
        let gens: Vec<_> = gens.iter().map(|&(a, b)| el(a, b)).collect();
        GroupRingIdeal::from_generators(&gens).unwrap()
    }

    #[test]
    fn module_orders() {
        assert_eq!(AbelianTauModule::cyclic(2, 1).unwrap().order(), 2);
        assert_eq!(AbelianTauModule::cyclic(120, 49).unwrap().order(), 120);
        assert_eq!(AbelianTauModule::trivial(vec![2, 4]).unwrap().order(), 8);
    }

    #[test]
    fn sub_order_examples() {
        let m = AbelianTauModule::cyclic(120, 49).unwrap();
        assert_eq!(
            m.sub_orders(),
            SubOrders {
                fixed: 24,
                minus: 10,
                image_one_minus_tau: 5,
                image_one_plus_tau: 12
            }
        );
        let m = AbelianTauModule::cyclic(48, 25).unwrap();
        assert_eq!(
            m.sub_orders(),
            SubOrders {
                fixed: 24,
                minus: 2,
                image_one_minus_tau: 2,
                image_one_plus_tau: 24
            }
        );
        let m = AbelianTauModule::trivial(vec![2, 12]).unwrap();
        assert_eq!(
            m.sub_orders(),
            SubOrders {
                fixed: 24,
                minus: 4,
                image_one_minus_tau: 1,
                image_one_plus_tau: 6
            }
        );
    }

    #[test]
    fn cohomology_examples() {
        assert_eq!(
            AbelianTauModule::cyclic(120, 49)
                .unwrap()
                .cohomology_orders(),
            (2, 2)
        );
        assert_eq!(
            AbelianTauModule::cyclic(48, 25)
                .unwrap()
                .cohomology_orders(),
            (1, 1)
        );
        assert_eq!(
            AbelianTauModule::cyclic(15, 1).unwrap().cohomology_orders(),
            (1, 1)
        );
        // the regular module Z/4[G] is cohomologically trivial
        let free = AbelianTauModule::new(vec![4, 4], vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(free.cohomology_orders(), (1, 1));
    }

    #[test]
    fn invalid_modules_rejected() {
        assert!(AbelianTauModule::cyclic(1, 1).is_err());
        assert!(AbelianTauModule::cyclic(120, 7).is_err());
        assert!(AbelianTauModule::trivial(vec![4, 6]).is_err());
        // τ(e₁) = e₁ + e₂ would send an element of order 2 to one of order 4
        assert!(AbelianTauModule::new(vec![2, 4], vec![vec![1, 0], vec![1, 1]]).is_err());
    }

    #[test]
    fn fitting_examples() {
        let p = FiniteModulePresentation::new(1, vec![vec![el(7, 0)]]).unwrap();
        assert_eq!(p.fitting_ideal(), Ok(ideal(&[(7, 0)])));
        let p = FiniteModulePresentation::new(1, vec![vec![el(120, 0)], vec![el(-49, 1)]]).unwrap();
        let fit = p.fitting_ideal().unwrap();
        assert_eq!(fit, ideal(&[(120, 0), (-49, 1)]));
        assert_eq!(fit, ideal(&[(12, 12), (5, -5)]));
        let p = FiniteModulePresentation::new(
            2,
            vec![vec![el(2, 0), el(0, 0)], vec![el(0, 0), el(3, 0)]],
        )
        .unwrap();
        assert_eq!(p.fitting_ideal(), Ok(ideal(&[(6, 0)])));
    }

    #[test]
    fn fitting_rejects_infinite_cokernel() {
        let p = FiniteModulePresentation::new(1, vec![vec![el(1, 1)]]).unwrap();
        assert_eq!(p.cokernel_order(), None);
        assert_eq!(p.fitting_ideal(), Err(Error::InfiniteCokernel));
        let big = FiniteModulePresentation::new(5, vec![vec![el(1, 0); 5]; 5]).unwrap();
        assert_eq!(big.fitting_ideal(), Err(Error::TooManyGenerators(5, 4)));
    }

    #[test]
    fn presentation_examples() {
        let p = AbelianTauModule::cyclic(120, 49).unwrap().presentation();
        assert_eq!(p.relation_columns(), &[vec![el(120, 0)], vec![el(-49, 1)]]);
        let p = AbelianTauModule::trivial(vec![2, 4])
            .unwrap()
            .presentation();
        assert_eq!(
            p.relation_columns(),
            &[
                vec![el(2, 0), el(0, 0)],
                vec![el(0, 0), el(4, 0)],
                vec![el(-1, 1), el(0, 0)],
                vec![el(0, 0), el(-1, 1)],
            ]
        );
        let p = AbelianTauModule::cyclic(48, 25).unwrap().presentation();
        assert_eq!(p.relation_columns(), &[vec![el(48, 0)], vec![el(-25, 1)]]);
        assert_eq!(p.cokernel_order(), Some(48));
    }

    #[test]
    fn annihilator_examples() {
        let bound = DEFAULT_ANNIHILATOR_BOUND;
        let ann = AbelianTauModule::cyclic(30, 1)
            .unwrap()
            .annihilator_bruteforce(bound);
        assert_eq!(ann, Ok(ideal(&[(30, 0), (-1, 1)])));
        let ann = AbelianTauModule::cyclic(120, 49)
            .unwrap()
            .annihilator_bruteforce(bound);
        assert_eq!(ann, Ok(ideal(&[(120, 0), (-49, 1)])));
        let ann = AbelianTauModule::cyclic(48, 25)
            .unwrap()
            .annihilator_bruteforce(bound);
        assert_eq!(ann, Ok(ideal(&[(48, 0), (-25, 1)])));
        assert_eq!(ann, Ok(ideal(&[(13, 11)])));
        let err = AbelianTauModule::cyclic(48, 25)
            .unwrap()
            .annihilator_bruteforce(40);
        assert_eq!(err, Err(Error::BoundExceeded(48, 40)));
    }

    #[test]
    fn prop41_examples() {
        assert_eq!(
            prop41_generators(24, 120, 49, false),
            Ok(vec![el(12, 12), el(5, -5)])
        );
        assert_eq!(prop41_generators(24, 48, 25, true), Ok(vec![el(13, 11)]));
        assert_eq!(
            prop41_generators(24, 24, 1, false),
            Ok(vec![el(12, 12), el(1, -1)])
        );
        assert!(prop41_generators(24, 120, 49, true).is_err());
        assert!(prop41_generators(24, 120, 25, false).is_err());
        assert!(prop41_generators(12, 24, 13, false).is_err());
    }

    #[test]
    fn split_examples() {
        let m = AbelianTauModule::trivial(vec![2]).unwrap();
        assert_eq!(m.split_two_group(&[1]), Ok(vec![vec![1]]));
        let m = AbelianTauModule::trivial(vec![2, 4]).unwrap();
        assert_eq!(m.split_two_group(&[1, 2]), Ok(vec![vec![1, 2], vec![0, 1]]));
        let m = AbelianTauModule::trivial(vec![4, 4]).unwrap();
        assert_eq!(m.split_two_group(&[0, 2]), Ok(vec![vec![1, 0], vec![0, 1]]));
        assert!(m.split_two_group(&[1, 0]).is_err());
        assert!(m.split_two_group(&[0, 0]).is_err());
        let odd = AbelianTauModule::trivial(vec![6]).unwrap();
        assert!(odd.split_two_group(&[3]).is_err());
    }

    #[test]
    fn fixture_round_trip() {
        let text = "# two modules\nmodule\nfactors = 2 4\nrow = 1 0\nrow = 0 1\nelement = 1 2\n\nmodule\nfactors = 120\nrow = 49\n";
        let fixtures = parse_module_fixtures(text).unwrap();
        assert_eq!(fixtures.len(), 2);
        assert_eq!(fixtures[0].element, Some(vec![1, 2]));
        assert_eq!(
            fixtures[1].module,
            AbelianTauModule::cyclic(120, 49).unwrap()
        );
        let rendered: String = fixtures.iter().map(|f| f.render()).collect();
        assert_eq!(parse_module_fixtures(&rendered).unwrap(), fixtures);
        assert!(parse_module_fixtures("factors = 2").is_err());
        assert!(parse_module_fixtures("module\nrow = 1").is_err());
        assert!(parse_module_fixtures("module\nfactors = 4\nrow = 2").is_err());
    }
}
