//! Exact free-boson operator algebra.
//!
//! Fields are finite sums of Wick-ordered terms
//!
//! ```text
//! coeff * prod_i d^{k_i} phi_{v_i}(w) * e^{mu.phi(w)}
//! ```
//!
//! where the derivative directions `v` run over the screening-momentum
//! basis and momenta are rational coordinate vectors over that basis; all
//! inner products go through the Gram matrix, so every number stays
//! rational. The OPE of two such fields is computed by Wick's theorem:
//! pairwise contractions, contractions against the exponentials, the
//! `(z-w)^{mu.nu}` prefactor, and Taylor re-expansion of the surviving
//! z-factors around w.
//!
//! The contraction conventions are pinned by
//! `d phi_u(z) d phi_v(w) ~ u.v / (z-w)^2`.

mod verify;

pub use verify::{
    coset_currents, find_unique_primary, octuplet, octuplet_opes, w3_generator, CheckLine,
    CosetReport, OctupletField, OctupletOpeReport, OctupletReport, PrimaryReport, W3Report,
};

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::charge::{solve_xi, ChargeError, GramMatrix, XiSolution};
use crate::exact::{format_rational, rat, ExactMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FreeFieldError {
    #[error("mutual locality exponent {0} is not an integer")]
    NonIntegerExponent(String),
    #[error("screening momenta are degenerate")]
    DegenerateMomenta,
    #[error("residue is not a total derivative: {0}")]
    NotTotalDerivative(String),
    #[error("no primary field in the centralizer at this weight")]
    NoPrimary,
    #[error("primary field is not unique at this weight")]
    NotUnique,
    #[error("structure mismatch: {0}")]
    StructureMismatch(String),
}

impl From<ChargeError> for FreeFieldError {
    fn from(_: ChargeError) -> Self {
        FreeFieldError::DegenerateMomenta
    }
}

/// Momentum in the rational span of the screening momenta.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Momentum(pub Vec<Rational>);

impl Momentum {
    pub fn zero(theta: usize) -> Self {
        Momentum(vec![Rational::zero(); theta])
    }

    pub fn unit(theta: usize, i: usize) -> Self {
        let mut m = Self::zero(theta);
        m.0[i] = Rational::one();
        m
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Momentum(self.0.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        Momentum(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn neg(&self) -> Self {
        Momentum(self.0.iter().map(|x| -x).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }
}

impl fmt::Display for Momentum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Multiset of derivative factors `(direction, order)`, kept sorted.
pub type Monomial = Vec<(usize, u32)>;

fn monomial_weight(m: &Monomial) -> u32 {
    m.iter().map(|&(_, k)| k).sum()
}

fn insert_factor(m: &mut Monomial, f: (usize, u32)) {
    let pos = m.partition_point(|x| *x <= f);
    m.insert(pos, f);
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct TermKey {
    derivs: Monomial,
    momentum: Vec<Rational>,
}

/// Finite sum of Wick-ordered terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Field {
    terms: BTreeMap<TermKey, Rational>,
}

impl Field {
    pub fn zero() -> Self {
        Field::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(coeff: Rational, derivs: Monomial, momentum: Momentum) -> Self {
        let mut derivs = derivs;
        derivs.sort_unstable();
        let mut f = Field::zero();
        f.insert(TermKey { derivs, momentum: momentum.0 }, coeff);
        f
    }

    /// The identity operator scaled: empty monomial at zero momentum.
    pub fn constant(theta: usize, coeff: Rational) -> Self {
        Field::term(coeff, vec![], Momentum::zero(theta))
    }

    pub fn vertex(momentum: Momentum) -> Self {
        Field::term(Rational::one(), vec![], momentum)
    }

    /// `d^order phi_dir`, as a bare derivative field (zero momentum).
    pub fn deriv(theta: usize, dir: usize, order: u32) -> Self {
        Field::term(Rational::one(), vec![(dir, order)], Momentum::zero(theta))
    }

    fn insert(&mut self, key: TermKey, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&rat(-1, 1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Field::zero();
        }
        let mut out = Field::zero();
        for (k, v) in &self.terms {
            out.insert(k.clone(), v * c);
        }
        out
    }

    /// Wick (normal-ordered) product: merge monomials, add momenta.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Field::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut derivs = ka.derivs.clone();
                for f in &kb.derivs {
                    insert_factor(&mut derivs, *f);
                }
                let momentum: Vec<Rational> = ka
                    .momentum
                    .iter()
                    .zip(&kb.momentum)
                    .map(|(a, b)| a + b)
                    .collect();
                out.insert(TermKey { derivs, momentum }, ca * cb);
            }
        }
        out
    }

    /// Formal z-derivative.
    pub fn derivative(&self) -> Self {
        let mut out = Field::zero();
        for (k, c) in &self.terms {
            // product rule over the derivative factors
            for (i, &(dir, ord)) in k.derivs.iter().enumerate() {
                let mut derivs = k.derivs.clone();
                derivs.remove(i);
                insert_factor(&mut derivs, (dir, ord + 1));
                out.insert(TermKey { derivs, momentum: k.momentum.clone() }, c.clone());
            }
            // d e^{mu.phi} = (mu . d phi) e^{mu.phi}
            for (dir, coord) in k.momentum.iter().enumerate() {
                if coord.is_zero() {
                    continue;
                }
                let mut derivs = k.derivs.clone();
                insert_factor(&mut derivs, (dir, 1));
                out.insert(TermKey { derivs, momentum: k.momentum.clone() }, c * coord);
            }
        }
        out
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, derivs: &Monomial, momentum: &Momentum) -> Rational {
        let mut key_derivs = derivs.clone();
        key_derivs.sort_unstable();
        self.terms
            .get(&TermKey { derivs: key_derivs, momentum: momentum.0.clone() })
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The single momentum shared by all terms, if any (`None` for the
    /// zero field or mixed momenta).
    pub fn momentum(&self) -> Option<Momentum> {
        let mut it = self.terms.keys();
        let first = it.next()?.momentum.clone();
        if it.all(|k| k.momentum == first) {
            Some(Momentum(first))
        } else {
            None
        }
    }

    /// Largest derivative weight among the terms (the "order" of the
    /// polynomial prefactor).
    pub fn poly_order(&self) -> u32 {
        self.terms.keys().map(|k| monomial_weight(&k.derivs)).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Momentum, &Rational)> {
        self.terms.iter().map(|(k, c)| (&k.derivs, Momentum(k.momentum.clone()), c))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", format_rational(c))?;
            for &(dir, ord) in &k.derivs {
                if ord == 1 {
                    write!(f, "*dphi{}", dir + 1)?;
                } else {
                    write!(f, "*d^{}phi{}", ord, dir + 1)?;
                }
            }
            if k.momentum.iter().any(|x| !x.is_zero()) {
                write!(f, "*exp({})", Momentum(k.momentum.clone()))?;
            }
        }
        Ok(())
    }
}

impl Serialize for Field {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(1))?;
        map.serialize_entry("terms", &self.terms.iter().map(|(k, c)| {
            serde_json::json!({
                "coeff": format_rational(c),
                "derivs": k.derivs,
                "momentum": k.momentum.iter().map(format_rational).collect::<Vec<_>>(),
            })
        }).collect::<Vec<_>>())?;
        map.end()
    }
}

/// OPE coefficients by pole order: key `n` is the coefficient of
/// `(z-w)^{-n}`, positive orders singular.
#[derive(Debug, Clone, Default)]
pub struct OpeExpansion {
    pub poles: BTreeMap<i64, Field>,
}

impl OpeExpansion {
    fn insert(&mut self, order: i64, field: Field) {
        if field.is_zero() {
            return;
        }
        let entry = self.poles.entry(order).or_default();
        let sum = entry.add(&field);
        if sum.is_zero() {
            self.poles.remove(&order);
        } else {
            *entry = sum;
        }
    }

    pub fn coefficient(&self, order: i64) -> Field {
        self.poles.get(&order).cloned().unwrap_or_default()
    }

    /// Highest pole order with a nonzero coefficient.
    pub fn max_pole(&self) -> Option<i64> {
        self.poles.keys().next_back().copied()
    }
}

/// The free-boson space over a fixed Gram matrix, with the background
/// charge solved once at construction.
pub struct BosonSpace {
    gram: GramMatrix,
    gram_inv: Vec<Vec<Rational>>,
    xi: XiSolution,
}

impl BosonSpace {
    pub fn new(gram: GramMatrix) -> Result<Self, FreeFieldError> {
        let xi = solve_xi(&gram)?;
        let theta = gram.theta();
        let m = gram.to_exact_matrix();
        let mut gram_inv = vec![vec![Rational::zero(); theta]; theta];
        for j in 0..theta {
            let mut e = vec![Rational::zero(); theta];
            e[j] = Rational::one();
            let col = m.solve(&e).map_err(|_| FreeFieldError::DegenerateMomenta)?;
            for i in 0..theta {
                gram_inv[i][j] = col[i].clone();
            }
        }
        Ok(BosonSpace { gram, gram_inv, xi })
    }

    pub fn theta(&self) -> usize {
        self.gram.theta()
    }

    pub fn gram(&self) -> &GramMatrix {
        &self.gram
    }

    pub fn xi(&self) -> &XiSolution {
        &self.xi
    }

    pub fn central_charge(&self) -> &Rational {
        &self.xi.charge
    }

    fn ip(&self, a: &Momentum, b: &Momentum) -> Rational {
        self.gram.inner(&a.0, &b.0)
    }

    fn ip_dir(&self, a: &Momentum, dir: usize) -> Rational {
        let mut acc = Rational::zero();
        for (i, c) in a.0.iter().enumerate() {
            if !c.is_zero() {
                acc += c * self.gram.at(i, dir);
            }
        }
        acc
    }

    /// Conformal weight of a field w.r.t. the background energy-momentum
    /// tensor, when the field is homogeneous: `sum k + mu.mu/2 - xi.mu`.
    pub fn weight(&self, f: &Field) -> Option<Rational> {
        let mut weights = f.terms.iter().map(|(k, _)| {
            let mu = Momentum(k.momentum.clone());
            let quad = self.ip(&mu, &mu) / rat(2, 1);
            let xi_mu: Rational = self
                .xi
                .x
                .iter()
                .enumerate()
                .map(|(j, xj)| xj * self.ip_dir(&mu, j))
                .fold(Rational::zero(), |a, b| a + b);
            rat(monomial_weight(&k.derivs) as i64, 1) + quad - xi_mu
        });
        let first = weights.next()?;
        if weights.all(|w| w == first) {
            Some(first)
        } else {
            None
        }
    }

    /// Energy-momentum tensor `T = (1/2) dphi.dphi + xi.d^2 phi`, written
    /// in the screening basis via the inverse Gram matrix.
    pub fn build_t(&self) -> Field {
        let theta = self.theta();
        let mut t = Field::zero();
        for i in 0..theta {
            for j in i..theta {
                let coeff = if i == j {
                    &self.gram_inv[i][j] / rat(2, 1)
                } else {
                    self.gram_inv[i][j].clone()
                };
                if !coeff.is_zero() {
                    t = t.add(&Field::term(
                        coeff,
                        vec![(i, 1), (j, 1)],
                        Momentum::zero(theta),
                    ));
                }
            }
        }
        for (j, xj) in self.xi.x.iter().enumerate() {
            if !xj.is_zero() {
                t = t.add(&Field::term(xj.clone(), vec![(j, 2)], Momentum::zero(theta)));
            }
        }
        t
    }

    /// Full OPE `A(z) B(w)` down to `regular_depth` orders past the pole
    /// part. Fails when some pair of momenta has a non-integer product.
    pub fn ope(&self, a: &Field, b: &Field, regular_depth: i64) -> Result<OpeExpansion, FreeFieldError> {
        let mut out = OpeExpansion::default();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                self.ope_terms(ka, ca, kb, cb, regular_depth, &mut out)?;
            }
        }
        Ok(out)
    }

    fn ope_terms(
        &self,
        ka: &TermKey,
        ca: &Rational,
        kb: &TermKey,
        cb: &Rational,
        regular_depth: i64,
        out: &mut OpeExpansion,
    ) -> Result<(), FreeFieldError> {
        let mu = Momentum(ka.momentum.clone());
        let nu = Momentum(kb.momentum.clone());
        let exponent = self.ip(&mu, &nu);
        if !exponent.denom().is_one() {
            return Err(FreeFieldError::NonIntegerExponent(format_rational(&exponent)));
        }
        let prefactor: i64 = exponent
            .numer()
            .try_into()
            .map_err(|_| FreeFieldError::NonIntegerExponent(format_rational(&exponent)))?;
        let da = &ka.derivs;
        let db = &kb.derivs;
        let merged = mu.add(&nu);
        let base_coeff = ca * cb;

        // One Taylor series per A-term: the expansion factor of the moved
        // exponential, exp(sum_{m>=1} t^m/m! d^m phi_mu), truncated on use.
        let max_pole_sum: i64 = da.iter().map(|&(_, k)| k as i64).sum::<i64>()
            + db.iter().map(|&(_, k)| k as i64).sum::<i64>();
        let taylor_cap = regular_depth - prefactor + max_pole_sum;
        if taylor_cap < 0 {
            // even the fully contracted scheme sits beyond the window
            return Ok(());
        }
        let exp_series = self.exp_taylor(&mu, taylor_cap as usize);

        // Wick's theorem, aggregated over classes of identical factors:
        // each A factor pairs with a B factor, contracts with B's
        // exponential, or stays; each unused B factor contracts with A's
        // exponential or stays. Identical factors carry identical
        // weights, so schemes are counted with multinomial multiplicities,
        // keyed by (surviving A multiset, surviving B multiset, pole sum).
        let a_classes = group_classes(da);
        let b_classes = group_classes(db);

        let pair_w: Vec<Vec<Rational>> = a_classes
            .iter()
            .map(|&((u, a_k), _)| {
                b_classes
                    .iter()
                    .map(|&((v, b_k), _)| {
                        let sign = if a_k % 2 == 1 { 1 } else { -1 };
                        rat(sign, 1)
                            * rat(factorial((a_k + b_k - 1) as u64), 1)
                            * self.gram.at(u, v)
                    })
                    .collect()
            })
            .collect();
        let a_exp_w: Vec<Rational> = a_classes
            .iter()
            .map(|&((u, a_k), _)| {
                let sign = if a_k % 2 == 1 { 1 } else { -1 };
                rat(sign, 1) * rat(factorial((a_k - 1) as u64), 1) * self.ip_dir(&nu, u)
            })
            .collect();
        let b_exp_w: Vec<Rational> = b_classes
            .iter()
            .map(|&((v, b_k), _)| {
                rat(-1, 1) * rat(factorial((b_k - 1) as u64), 1) * self.ip_dir(&mu, v)
            })
            .collect();

        // Phase A: distribute every A class over stay / exponential /
        // pairings with each B class.
        let b_counts: Vec<u32> = b_classes.iter().map(|&(_, n)| n).collect();
        let mut agg: HashMap<(Vec<u32>, Vec<u32>, i64), Rational> = HashMap::new();
        agg.insert((vec![0; a_classes.len()], b_counts, 0), base_coeff);
        for (i, &((_, a_k), m)) in a_classes.iter().enumerate() {
            let mut next: HashMap<(Vec<u32>, Vec<u32>, i64), Rational> = HashMap::new();
            for ((stay_a, b_rem, poles), coeff) in agg {
                distribute_a_class(
                    &DistributeCtx {
                        class_idx: i,
                        a_ord: a_k,
                        pair_w: &pair_w[i],
                        a_exp_w: &a_exp_w[i],
                        b_orders: &b_classes,
                    },
                    m,
                    &stay_a,
                    &b_rem,
                    poles,
                    &coeff,
                    &mut next,
                );
            }
            agg = next;
        }

        // Phase B: each remaining B factor contracts with A's exponential
        // or stays; fold class by class.
        let mut finals: HashMap<(Vec<u32>, Vec<u32>, i64), Rational> = HashMap::new();
        for ((stay_a, b_rem, poles), coeff) in agg {
            let mut partial: HashMap<(Vec<u32>, i64), Rational> = HashMap::new();
            partial.insert((vec![0; b_classes.len()], poles), coeff);
            for (j, &((_, b_k), _)) in b_classes.iter().enumerate() {
                let n = b_rem[j];
                let mut next: HashMap<(Vec<u32>, i64), Rational> = HashMap::new();
                for ((stay_b, p), c) in partial {
                    let mut weight_pow = Rational::one();
                    for taken in 0..=n {
                        if taken > 0 {
                            if b_exp_w[j].is_zero() {
                                break;
                            }
                            weight_pow *= &b_exp_w[j];
                        }
                        let ways = rat(binomial_i64(n as u64, taken as u64), 1);
                        let mut sb = stay_b.clone();
                        sb[j] = n - taken;
                        let poles_here = p + taken as i64 * b_k as i64;
                        let add = &c * ways * &weight_pow;
                        if add.is_zero() {
                            continue;
                        }
                        *next.entry((sb, poles_here)).or_insert_with(Rational::zero) += add;
                    }
                }
                partial = next;
            }
            for ((stay_b, p), c) in partial {
                if c.is_zero() {
                    continue;
                }
                *finals
                    .entry((stay_a.clone(), stay_b, p))
                    .or_insert_with(Rational::zero) += c;
            }
        }

        // Phase C: Taylor-assemble each aggregate once, in a canonical
        // order; stay-A series are cached per truncation.
        let mut series_cache: HashMap<(Vec<u32>, usize), Vec<Field>> = HashMap::new();
        let mut ordered: Vec<((Vec<u32>, Vec<u32>, i64), Rational)> = finals.into_iter().collect();
        ordered.sort_by(|x, y| x.0.cmp(&y.0));
        for ((stay_a, stay_b, pole_sum), coeff) in ordered {
            if coeff.is_zero() {
                continue;
            }
            let stay_a_monomial: Monomial = a_classes
                .iter()
                .zip(&stay_a)
                .flat_map(|(&(f, _), &cnt)| std::iter::repeat(f).take(cnt as usize))
                .collect();
            let stay_b_monomial: Monomial = b_classes
                .iter()
                .zip(&stay_b)
                .flat_map(|(&(f, _), &cnt)| std::iter::repeat(f).take(cnt as usize))
                .collect();
            self.assemble_scheme(
                coeff,
                pole_sum,
                prefactor,
                regular_depth,
                (&stay_a, &stay_a_monomial),
                &stay_b_monomial,
                &mut series_cache,
                &exp_series,
                &merged,
                out,
            )?;
        }
        Ok(())
    }

    /// Taylor-expand the surviving z-side factors and deposit the scheme
    /// into the expansion.
    #[allow(clippy::too_many_arguments)]
    fn assemble_scheme(
        &self,
        coeff: Rational,
        pole_sum: i64,
        prefactor: i64,
        regular_depth: i64,
        stay_a: (&[u32], &Monomial),
        stay_b: &[(usize, u32)],
        series_cache: &mut HashMap<(Vec<u32>, usize), Vec<Field>>,
        exp_series: &[Field],
        merged: &Momentum,
        out: &mut OpeExpansion,
    ) -> Result<(), FreeFieldError> {
        // lowest power of (z-w) this scheme can produce
        let base = prefactor - pole_sum;
        let cap = regular_depth + pole_sum - prefactor;
        if cap < 0 {
            return Ok(());
        }
        let cap = cap as usize;
        let theta = merged.0.len();
        let (stay_a_counts, stay_a_monomial) = stay_a;

        // series for prod stay_a factors times the exponential Taylor
        // factor, truncated at cap and cached per surviving-A multiset
        let key = (stay_a_counts.to_vec(), cap);
        if !series_cache.contains_key(&key) {
            let mut series: Vec<Field> = vec![Field::constant(theta, Rational::one())];
            for &(u, k) in stay_a_monomial {
                // d^k phi_u(z) = sum_m t^m/m! d^{k+m} phi_u(w)
                let factor_series: Vec<Field> = (0..=cap)
                    .map(|m| {
                        Field::term(
                            rat(1, factorial(m as u64)),
                            vec![(u, k + m as u32)],
                            Momentum::zero(theta),
                        )
                    })
                    .collect();
                series = series_mul(&series, &factor_series, cap);
            }
            if exp_series.len() > 1 {
                series = series_mul(&series, &exp_series[..exp_series.len().min(cap + 1)], cap);
            }
            series_cache.insert(key.clone(), series);
        }
        let series = &series_cache[&key];

        // stay_b factors and the merged exponential
        let mut tail = Field::vertex(merged.clone());
        for &(v, k) in stay_b {
            tail = tail.mul(&Field::deriv(theta, v, k));
        }
        tail = tail.scale(&coeff);
        for (m, coeff_field) in series.iter().enumerate() {
            if coeff_field.is_zero() {
                continue;
            }
            let order = -(base + m as i64);
            if order < -regular_depth {
                continue;
            }
            out.insert(order, coeff_field.mul(&tail));
        }
        Ok(())
    }

    /// Taylor factor of the moved exponential:
    /// `exp(sum_{m>=1} t^m/m! d^m phi_mu(w))` up to `t^cap`.
    fn exp_taylor(&self, mu: &Momentum, cap: usize) -> Vec<Field> {
        let theta = mu.0.len();
        if mu.is_zero() || cap == 0 {
            return vec![Field::constant(theta, Rational::one())];
        }
        // L = sum_{m=1..cap} t^m/m! d^m phi_mu
        let mut log_series: Vec<Field> = vec![Field::zero(); cap + 1];
        for m in 1..=cap {
            let mut f = Field::zero();
            for (dir, c) in mu.0.iter().enumerate() {
                if !c.is_zero() {
                    f = f.add(&Field::term(
                        c / rat(factorial(m as u64), 1),
                        vec![(dir, m as u32)],
                        Momentum::zero(theta),
                    ));
                }
            }
            log_series[m] = f;
        }
        // exp via powers of L
        let mut result: Vec<Field> = vec![Field::zero(); cap + 1];
        result[0] = Field::constant(theta, Rational::one());
        let mut power: Vec<Field> = result.clone();
        let mut k_fact = 1u64;
        for k in 1..=cap {
            power = series_mul(&power, &log_series, cap);
            k_fact *= k as u64;
            let inv = rat(1, k_fact as i64);
            for (m, f) in power.iter().enumerate() {
                if !f.is_zero() {
                    result[m] = result[m].add(&f.scale(&inv));
                }
            }
            if power.iter().all(Field::is_zero) {
                break;
            }
        }
        result
    }

    /// Residue of the screening `oint e^{nu.phi}` acting on X: the
    /// first-order pole of `e^{nu.phi}(z) X(w)`.
    pub fn screening_residue(&self, nu: &Momentum, x: &Field) -> Result<Field, FreeFieldError> {
        let screen = Field::vertex(nu.clone());
        let ope = self.ope(&screen, x, 0)?;
        Ok(ope.coefficient(1))
    }

    /// Mode action `A_n X`: the pole of order `n + h_A`.
    pub fn mode_action(
        &self,
        a: &Field,
        h_a: i64,
        n: i64,
        x: &Field,
    ) -> Result<Field, FreeFieldError> {
        let depth = (-(n + h_a)).max(0);
        let ope = self.ope(a, x, depth)?;
        Ok(ope.coefficient(n + h_a))
    }

    /// All monomial fields of the given derivative weight at momentum
    /// zero, in a fixed deterministic order.
    pub fn weight_monomials(&self, weight: u32) -> Vec<Monomial> {
        let theta = self.theta();
        let mut out = Vec::new();
        let mut current: Monomial = Vec::new();
        // factors (dir, ord) chosen in nonincreasing (ord, dir) order
        fill(theta, weight, None, &mut current, &mut out);
        return out;

        fn fill(
            theta: usize,
            left: u32,
            max_factor: Option<(u32, usize)>,
            current: &mut Monomial,
            out: &mut Vec<Monomial>,
        ) {
            if left == 0 {
                let mut m = current.clone();
                m.sort_unstable();
                out.push(m);
                return;
            }
            for ord in (1..=left).rev() {
                for dir in (0..theta).rev() {
                    if let Some((mo, md)) = max_factor {
                        if (ord, dir) > (mo, md) {
                            continue;
                        }
                    }
                    current.push((dir, ord));
                    fill(theta, left - ord, Some((ord, dir)), current, out);
                    current.pop();
                }
            }
        }
    }

    /// Exact basis of the joint kernel of the screening residues on
    /// momentum-zero differential polynomials of the given weight.
    pub fn centralizer_basis(
        &self,
        weight: u32,
        screenings: &[Momentum],
    ) -> Result<Vec<Field>, FreeFieldError> {
        let theta = self.theta();
        let basis = self.weight_monomials(weight);
        let target_basis = self.weight_monomials(weight.saturating_sub(1));
        let target_index: BTreeMap<Monomial, usize> = target_basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut rows: Vec<Vec<Rational>> = vec![
            vec![Rational::zero(); basis.len()];
            screenings.len() * target_basis.len()
        ];
        for (j, mono) in basis.iter().enumerate() {
            let x = Field::term(Rational::one(), mono.clone(), Momentum::zero(theta));
            for (s_idx, s) in screenings.iter().enumerate() {
                let r = self.screening_residue(s, &x)?;
                for (derivs, momentum, c) in r.terms() {
                    debug_assert_eq!(&momentum, s);
                    let i = target_index[derivs];
                    rows[s_idx * target_basis.len() + i][j] = c.clone();
                }
            }
        }
        let kernel = ExactMatrix::from_rows(rows).nullspace();
        Ok(kernel
            .into_iter()
            .map(|coeffs| {
                let mut f = Field::zero();
                for (j, c) in coeffs.into_iter().enumerate() {
                    if !c.is_zero() {
                        f = f.add(&Field::term(c, basis[j].clone(), Momentum::zero(theta)));
                    }
                }
                f
            })
            .collect())
    }

    /// True iff `L_n X = 0` for `n >= 1` and, for each extra current `(A,
    /// h_A)`, `A_n X = 0` for `n >= 1` (from `n >= 0` when
    /// `include_zero_modes` is set).
    pub fn is_primary(
        &self,
        x: &Field,
        t: &Field,
        extras: &[(Field, i64)],
        include_zero_modes: bool,
    ) -> Result<bool, FreeFieldError> {
        let ope_t = self.ope(t, x, 0)?;
        if ope_t.poles.keys().any(|&n| n >= 3) {
            return Ok(false);
        }
        for (a, h_a) in extras {
            let ope_a = self.ope(a, x, 0)?;
            let floor = if include_zero_modes { *h_a } else { *h_a + 1 };
            if ope_a.poles.keys().any(|&n| n >= floor) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Solves `dY = R` for `Y` in the span of the momentum-compatible
    /// monomials one weight down; `None` when R is not a total derivative.
    pub fn total_derivative_preimage(&self, r: &Field) -> Option<Field> {
        if r.is_zero() {
            return Some(Field::zero());
        }
        let momentum = r.momentum()?;
        // The derivative raises the polynomial weight by exactly one
        // (raising an order, or appending dphi_momentum), so candidates
        // for Y run one weight below R.
        let max_weight = r.poly_order();
        let mut candidates: Vec<Monomial> = Vec::new();
        for w in 0..=max_weight.saturating_sub(1) {
            candidates.extend(self.weight_monomials(w));
        }
        // image basis: monomials appearing in derivatives and in R
        let mut image_index: BTreeMap<Monomial, usize> = BTreeMap::new();
        let mut register = |m: &Monomial| {
            let next = image_index.len();
            image_index.entry(m.clone()).or_insert(next);
        };
        let derivs: Vec<Field> = candidates
            .iter()
            .map(|m| {
                Field::term(Rational::one(), m.clone(), momentum.clone()).derivative()
            })
            .collect();
        for d in &derivs {
            for (m, _, _) in d.terms() {
                register(m);
            }
        }
        for (m, _, _) in r.terms() {
            register(m);
        }
        let rows_n = image_index.len();
        let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(candidates.len());
        for d in &derivs {
            let mut col = vec![Rational::zero(); rows_n];
            for (m, _, c) in d.terms() {
                col[image_index[m]] = c.clone();
            }
            columns.push(col);
        }
        let mut rhs = vec![Rational::zero(); rows_n];
        for (m, _, c) in r.terms() {
            rhs[image_index[m]] = c.clone();
        }
        // least-squares-free exact solve: row-reduce [A | rhs]
        let solution = solve_rectangular(&columns, &rhs)?;
        let mut y = Field::zero();
        for (j, c) in solution.into_iter().enumerate() {
            if !c.is_zero() {
                y = y.add(&Field::term(c, candidates[j].clone(), momentum.clone()));
            }
        }
        Some(y)
    }
}

/// Distinct derivative factors with multiplicities, in monomial order.
fn group_classes(m: &Monomial) -> Vec<((usize, u32), u32)> {
    let mut out: Vec<((usize, u32), u32)> = Vec::new();
    for &f in m {
        match out.last_mut() {
            Some((g, n)) if *g == f => *n += 1,
            _ => out.push((f, 1)),
        }
    }
    out
}

struct DistributeCtx<'a> {
    class_idx: usize,
    a_ord: u32,
    pair_w: &'a [Rational],
    a_exp_w: &'a Rational,
    b_orders: &'a [((usize, u32), u32)],
}

/// Distributes `m` identical A factors over stay / exponential / pairings
/// with each B class, with multinomial multiplicities and falling
/// factorials for the distinct B partners.
fn distribute_a_class(
    ctx: &DistributeCtx<'_>,
    m: u32,
    stay_a: &[u32],
    b_rem: &[u32],
    poles: i64,
    coeff: &Rational,
    out: &mut HashMap<(Vec<u32>, Vec<u32>, i64), Rational>,
) {
    // composition: s stay, e exponential, p_j paired with B class j
    fn rec(
        ctx: &DistributeCtx<'_>,
        j: usize,
        left: u32,
        pairs: &mut Vec<u32>,
        weight: Rational,
        extra_poles: i64,
        stay_a: &[u32],
        b_rem: &[u32],
        poles: i64,
        coeff: &Rational,
        m: u32,
        out: &mut HashMap<(Vec<u32>, Vec<u32>, i64), Rational>,
    ) {
        if weight.is_zero() {
            return;
        }
        if j == ctx.pair_w.len() {
            // remaining `left` factors split into stay and exponential
            let mut exp_pow = Rational::one();
            for e in 0..=left {
                if e > 0 {
                    if ctx.a_exp_w.is_zero() {
                        break;
                    }
                    exp_pow *= ctx.a_exp_w;
                }
                let s = left - e;
                // multinomial m! / (s! e! prod p_j!)
                let mut ways = rat(factorial(m as u64), 1)
                    / (rat(factorial(s as u64), 1) * rat(factorial(e as u64), 1));
                for &p in pairs.iter() {
                    ways /= rat(factorial(p as u64), 1);
                }
                let total = coeff * &weight * &exp_pow * ways;
                if total.is_zero() {
                    continue;
                }
                let mut sa = stay_a.to_vec();
                sa[ctx.class_idx] = s;
                let mut br = b_rem.to_vec();
                for (jj, &p) in pairs.iter().enumerate() {
                    br[jj] -= p;
                }
                let p_total = poles + extra_poles + e as i64 * ctx.a_ord as i64;
                *out.entry((sa, br, p_total)).or_insert_with(Rational::zero) += total;
            }
            return;
        }
        // choose how many pair with B class j
        let ((_, b_ord), _) = ctx.b_orders[j];
        let avail = b_rem[j];
        let mut w = Rational::one();
        for p in 0..=left.min(avail) {
            if p > 0 {
                if ctx.pair_w[j].is_zero() {
                    break;
                }
                // falling factorial over the distinct B partners
                w *= &ctx.pair_w[j] * rat((avail - p + 1) as i64, 1);
            }
            pairs.push(p);
            rec(
                ctx,
                j + 1,
                left - p,
                pairs,
                &weight * &w,
                extra_poles + p as i64 * (ctx.a_ord + b_ord) as i64,
                stay_a,
                b_rem,
                poles,
                coeff,
                m,
                out,
            );
            pairs.pop();
        }
    }
    let mut pairs = Vec::new();
    rec(ctx, 0, m, &mut pairs, Rational::one(), 0, stay_a, b_rem, poles, coeff, m, out);
}

fn binomial_i64(n: u64, k: u64) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1i64;
    let mut den = 1i64;
    for i in 0..k {
        num *= (n - i) as i64;
        den *= (i + 1) as i64;
    }
    num / den
}

/// Truncated product of two field-coefficient power series.
fn series_mul(a: &[Field], b: &[Field], cap: usize) -> Vec<Field> {
    let mut out = vec![Field::zero(); cap + 1];
    for (i, fa) in a.iter().enumerate() {
        if fa.is_zero() || i > cap {
            continue;
        }
        for (j, fb) in b.iter().enumerate() {
            if i + j > cap {
                break;
            }
            if fb.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&fa.mul(fb));
        }
    }
    out
}

fn factorial(n: u64) -> i64 {
    (1..=n).map(|x| x as i64).product::<i64>().max(1)
}

/// Solves `A x = b` for rectangular `A` given by columns; `None` when
/// inconsistent. Free variables are set to zero.
fn solve_rectangular(columns: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let ncols = columns.len();
    let nrows = rhs.len();
    let mut m: Vec<Vec<Rational>> = (0..nrows)
        .map(|i| {
            let mut row: Vec<Rational> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col].clone();
        for j in col..=ncols {
            m[row][j] = &m[row][j] / &pivot;
        }
        for r in 0..nrows {
            if r == row || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in col..=ncols {
                let delta = &f * &m[row][j];
                m[r][j] = &m[r][j] - &delta;
            }
        }
        pivots.push((row, col));
        row += 1;
    }
    // consistency: no row of the form [0 ... 0 | nonzero]
    for r in row..nrows {
        if !m[r][ncols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, c) in pivots {
        x[c] = m[r][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use num_integer::Integer;

    fn gram_2_1(p: i64) -> GramMatrix {
        GramMatrix::rank2(rat(2, p), rat(-1, p), rat(2, p))
    }

    fn space(g: GramMatrix) -> BosonSpace {
        BosonSpace::new(g).unwrap()
    }

    #[test]
    fn dphi_dphi_contraction() {
        let s = space(gram_2_1(3));
        let a = Field::deriv(2, 0, 1);
        let b = Field::deriv(2, 1, 1);
        let ope = s.ope(&a, &b, 0).unwrap();
        // single pole of order 2 with coefficient a.b = -1/3
        assert_eq!(ope.max_pole(), Some(2));
        let c = ope.coefficient(2);
        assert_eq!(c, Field::constant(2, rat(-1, 3)));
        assert!(ope.coefficient(1).is_zero());
    }

    #[test]
    fn t_on_vertex_gives_weight_and_derivative() {
        let s = space(gram_2_1(3));
        let t = s.build_t();
        let mu = Momentum(vec![rat(1, 1), rat(2, 1)]);
        let v = Field::vertex(mu.clone());
        let delta = s.weight(&v).unwrap();
        let ope = s.ope(&t, &v, 0).unwrap();
        assert_eq!(ope.max_pole(), Some(2));
        assert_eq!(ope.coefficient(2), v.scale(&delta));
        assert_eq!(ope.coefficient(1), v.derivative());
    }

    #[test]
    fn tt_ope_is_virasoro_shaped() {
        for g in [
            gram_2_1(3),
            GramMatrix::rank2(rat(1, 1), rat(-1, 5), rat(2, 5)),
            GramMatrix::rank2(rat(2, 5), rat(-2, 5), rat(4, 5)),
        ] {
            let s = space(g);
            let t = s.build_t();
            let ope = s.ope(&t, &t, 0).unwrap();
            let c = s.central_charge().clone();
            assert_eq!(ope.coefficient(4), Field::constant(2, c / rat(2, 1)));
            assert!(ope.coefficient(3).is_zero());
            assert_eq!(ope.coefficient(2), t.scale(&rat(2, 1)));
            assert_eq!(ope.coefficient(1), t.derivative());
            assert!(ope.max_pole() == Some(4));
        }
    }

    #[test]
    fn build_t_on_orthonormal_gram_has_no_background() {
        let s = space(GramMatrix::rank2(rat(2, 1), rat(0, 1), rat(2, 1)));
        let t = s.build_t();
        // xi = 0: pure quadratic part with G^{-1} = diag(1/2, 1/2)
        let expected = Field::term(rat(1, 4), vec![(0, 1), (0, 1)], Momentum::zero(2))
            .add(&Field::term(rat(1, 4), vec![(1, 1), (1, 1)], Momentum::zero(2)));
        assert_eq!(t, expected);
    }

    #[test]
    fn screening_residues_annihilate_t() {
        // screenings have weight one, so Res e^{alpha.phi(z)} T(w) = 0
        for g in [gram_2_1(3), GramMatrix::rank2(rat(1, 1), rat(-1, 5), rat(2, 5))] {
            let s = space(g);
            let t = s.build_t();
            for i in 0..2 {
                let r = s.screening_residue(&Momentum::unit(2, i), &t).unwrap();
                assert!(r.is_zero(), "screening {i} residue {r}");
            }
        }
    }

    #[test]
    fn t_residue_on_screening_is_total_derivative() {
        let s = space(gram_2_1(3));
        let t = s.build_t();
        let v = Field::vertex(Momentum::unit(2, 0));
        // Res T(z) V(w) = dV for a weight-one field
        let r = s.ope(&t, &v, 0).unwrap().coefficient(1);
        assert_eq!(r, v.derivative());
        let y = s.total_derivative_preimage(&r).expect("total derivative");
        assert_eq!(y.derivative(), r);
    }

    #[test]
    fn non_integer_exponent_is_rejected() {
        let s = space(gram_2_1(3));
        let a = Field::vertex(Momentum::unit(2, 0));
        let ope = s.ope(&a, &a, 0);
        // alpha.alpha = 2/3 is not an integer
        assert!(matches!(ope, Err(FreeFieldError::NonIntegerExponent(_))));
    }

    /// Locality: with `A(z)B(w) = sum c_m(w) (z-w)^{-m}`, re-expanding the
    /// swapped product around w gives
    /// `ope(B,A)(n) = (-1)^{mu.nu} sum_{m>=n} (-1)^m d^{m-n} c_m / (m-n)!`
    /// (the extra parity is the mutual statistics of the two vertex
    /// operators).
    pub(crate) fn assert_local_pair(s: &BosonSpace, a: &Field, b: &Field, depth: i64) {
        let mu = a.momentum().expect("definite momentum");
        let nu = b.momentum().expect("definite momentum");
        let pairing = s.ip(&mu, &nu);
        assert!(pairing.denom().is_one());
        let swap_sign = if pairing.numer().is_odd() { -1 } else { 1 };
        let ab = s.ope(a, b, depth).unwrap();
        let ba = s.ope(b, a, depth).unwrap();
        let top = ab.max_pole().unwrap_or(0).max(ba.max_pole().unwrap_or(0));
        for n in -depth..=top {
            let mut expect = Field::zero();
            for m in n..=top {
                let mut c = ab.coefficient(m);
                if c.is_zero() {
                    continue;
                }
                for _ in 0..(m - n) {
                    c = c.derivative();
                }
                let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
                expect = expect.add(&c.scale(&rat(swap_sign * sign, factorial((m - n) as u64))));
            }
            assert_eq!(ba.coefficient(n), expect, "locality fails at order {n}");
        }
    }

    #[test]
    fn locality_reexpansion() {
        let s = space(GramMatrix::rank2(rat(1, 1), rat(0, 1), rat(1, 1)));
        let mu = Momentum(vec![rat(1, 1), rat(0, 1)]);
        let nu = Momentum(vec![rat(1, 1), rat(1, 1)]);
        let a = Field::vertex(mu.clone()).mul(&Field::deriv(2, 0, 2));
        let b = Field::vertex(nu.clone()).mul(&Field::deriv(2, 1, 1));
        assert_local_pair(&s, &a, &b, 3);

        let s = space(gram_2_1(2));
        let t = s.build_t();
        let w = Field::deriv(2, 0, 1).mul(&Field::deriv(2, 1, 2));
        assert_local_pair(&s, &t, &w, 3);
    }

    #[test]
    fn centralizer_weight_two_is_spanned_by_t() {
        let s = space(gram_2_1(3));
        let screenings = [Momentum::unit(2, 0), Momentum::unit(2, 1)];
        let basis = s.centralizer_basis(2, &screenings).unwrap();
        assert_eq!(basis.len(), 1);
        let t = s.build_t();
        // proportional to T: normalize on a shared monomial
        let mono = vec![(0usize, 1u32), (0, 1)];
        let zero = Momentum::zero(2);
        let ratio = t.coefficient(&mono, &zero) / basis[0].coefficient(&mono, &zero);
        assert_eq!(basis[0].scale(&ratio), t);
    }

    #[test]
    fn weight_monomial_count_matches_colored_partitions() {
        let s = space(gram_2_1(3));
        // coefficients of x^w in prod (1 - x^k)^{-2}
        assert_eq!(s.weight_monomials(1).len(), 2);
        assert_eq!(s.weight_monomials(2).len(), 5);
        assert_eq!(s.weight_monomials(3).len(), 10);
        assert_eq!(s.weight_monomials(4).len(), 20);
    }

    #[test]
    fn leibniz_rule() {
        // ope(dA, B) is the formal z-derivative of ope(A, B):
        // d/dz (z-w)^{-n+1} = (1-n)(z-w)^{-n}.
        let s = space(gram_2_1(2));
        let a = Field::deriv(2, 0, 1)
            .mul(&Field::deriv(2, 1, 1))
            .add(&Field::deriv(2, 0, 2).scale(&rat(3, 2)));
        let b = Field::deriv(2, 1, 1).mul(&Field::vertex(Momentum(vec![rat(2, 1), rat(0, 1)])));
        let ope = s.ope(&a, &b, 5).unwrap();
        let ope_da = s.ope(&a.derivative(), &b, 4).unwrap();
        for n in -4..=6i64 {
            let expect = ope.coefficient(n - 1).scale(&rat(1 - n, 1));
            assert_eq!(ope_da.coefficient(n), expect, "order {n}");
        }
    }
}
