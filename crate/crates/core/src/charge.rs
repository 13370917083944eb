//! Central charges from screening momenta.
//!
//! A Gram matrix stores the scalar products `g_{i,j} = alpha_i.alpha_j` of
//! the screening momenta. Requiring every exponential `e^{alpha_i.phi}` to
//! have conformal weight one fixes the background charge `xi = sum x_j
//! alpha_j` through the linear system
//!
//! ```text
//! g_{i,i}/2 - sum_j x_j g_{j,i} = 1,       1 <= i <= theta,
//! ```
//!
//! and the Virasoro central charge is `c = theta - 12 xi.xi`. The whole
//! point of the exercise: `c` is invariant under the logarithmic lift of
//! the Weyl reflections whenever the integer Cartan data lifts to the
//! scalar products (`check_cartan_log` reports which branch holds).

use std::fmt;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::braiding::GeneralizedCartanMatrix;
use crate::catalog::{ItemSpec, Params, SolutionClass};
use crate::exact::{parse_rational, rat, ExactMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChargeError {
    #[error("screening momenta are degenerate (Gram matrix is singular)")]
    DegenerateMomenta,
    #[error("central charge not invariant at k={k}: {original} vs {reflected}")]
    InvarianceFailure { k: usize, original: Rational, reflected: Rational },
    #[error("level at the critical value: k + h_dual = 0")]
    PoleAtCriticalLevel,
    #[error("charge is only defined in closed form for theta = 2")]
    NotRank2,
}

/// Symmetric matrix of exact scalar products of the screening momenta.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GramMatrix {
    g: Vec<Vec<Rational>>,
}

impl GramMatrix {
    pub fn new(g: Vec<Vec<Rational>>) -> Self {
        let theta = g.len();
        assert!(theta > 0, "empty Gram matrix");
        assert!(g.iter().all(|row| row.len() == theta), "Gram matrix must be square");
        for i in 0..theta {
            for j in i + 1..theta {
                assert!(g[i][j] == g[j][i], "Gram matrix must be symmetric");
            }
        }
        GramMatrix { g }
    }

    /// Rank-2 Gram from the three scalar products.
    pub fn rank2(aa: Rational, ab: Rational, bb: Rational) -> Self {
        GramMatrix::new(vec![vec![aa, ab.clone()], vec![ab, bb]])
    }

    pub fn theta(&self) -> usize {
        self.g.len()
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.g[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.g
    }

    pub fn det2(&self) -> Rational {
        assert_eq!(self.theta(), 2);
        self.at(0, 0) * self.at(1, 1) - self.at(0, 1) * self.at(1, 0)
    }

    pub fn to_exact_matrix(&self) -> ExactMatrix<Rational> {
        ExactMatrix::from_rows(self.g.clone())
    }

    /// Inner product of two momenta given by coordinates over the
    /// screening basis.
    pub fn inner(&self, u: &[Rational], v: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                acc += ui * vj * self.at(i, j);
            }
        }
        acc
    }
}

/// Background charge data: coordinates of `xi`, its norm, and the charge.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct XiSolution {
    #[serde(serialize_with = "ser_rational_vec")]
    pub x: Vec<Rational>,
    #[serde(serialize_with = "ser_rational")]
    pub xi_norm: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub charge: Rational,
}

fn ser_rational<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&crate::exact::format_rational(r))
}

fn ser_rational_vec<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    let strings: Vec<String> = v.iter().map(|r| crate::exact::format_rational(r)).collect();
    strings.serialize(s)
}

/// Solves the dimension-one system for `xi` and evaluates the charge
/// `c = theta - 12 xi.xi`.
pub fn solve_xi(g: &GramMatrix) -> Result<XiSolution, ChargeError> {
    let theta = g.theta();
    let m = g.to_exact_matrix();
    let rhs: Vec<Rational> = (0..theta)
        .map(|i| g.at(i, i) / rat(2, 1) - Rational::one())
        .collect();
    let x = m.solve(&rhs).map_err(|_| ChargeError::DegenerateMomenta)?;
    let xi_norm = g.inner(&x, &x);
    let charge = rat(theta as i64, 1) - rat(12, 1) * &xi_norm;
    Ok(XiSolution { x, xi_norm, charge })
}

/// Closed form of the rank-2 central charge, evaluated directly from the
/// three scalar products:
///
/// ```text
/// c = 2 - 3 [ (4 + g11 g22)(g11 - 2 g12 + g22)
///           + 4 (g12 (g11 + g22) - 2 g11 g22) ] / (g11 g22 - g12^2)
/// ```
///
/// (the numerator is `(4 + a.a b.b)(a-b).(a-b) + 4 (a-b).((a.a) b - (b.b) a)`
/// expanded in scalar products). Cross-checked against `solve_xi` on random
/// input by the acceptance suite.
pub fn central_charge_rank2(g: &GramMatrix) -> Result<Rational, ChargeError> {
    if g.theta() != 2 {
        return Err(ChargeError::NotRank2);
    }
    let (g11, g12, g22) = (g.at(0, 0), g.at(0, 1), g.at(1, 1));
    let det = g.det2();
    if det.is_zero() {
        return Err(ChargeError::DegenerateMomenta);
    }
    let four = rat(4, 1);
    let diff_norm = g11 - rat(2, 1) * g12 + g22;
    let cross = g12 * (g11 + g22) - rat(2, 1) * g11 * g22;
    let numer = (&four + g11 * g22) * diff_norm + four * cross;
    Ok(rat(2, 1) - rat(3, 1) * numer / det)
}

/// Logarithmic lift of the Weyl reflection at `k`:
/// `g_{i,j} -> g_{i,j} - a_{k,j} g_{i,k} - a_{k,i} g_{k,j} + a_{k,i} a_{k,j} g_{k,k}`.
pub fn reflect_gram(g: &GramMatrix, a: &GeneralizedCartanMatrix, k: usize) -> GramMatrix {
    let theta = g.theta();
    assert!(k < theta);
    let mut out = vec![vec![Rational::zero(); theta]; theta];
    for i in 0..theta {
        for j in 0..theta {
            let aki = rat(a.at(k, i), 1);
            let akj = rat(a.at(k, j), 1);
            out[i][j] =
                g.at(i, j) - &akj * g.at(i, k) - &aki * g.at(k, j) + aki * akj * g.at(k, k);
        }
    }
    GramMatrix::new(out)
}

/// Which branch of the lifted Cartan condition holds for an ordered pair:
/// first `2 g_{i,j} = a_{i,j} g_{i,i}`, second `(1 - a_{i,j}) g_{i,i} = 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    First,
    Second,
    Both,
    Neither,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Branch::First => "first",
            Branch::Second => "second",
            Branch::Both => "both",
            Branch::Neither => "neither",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchReport {
    /// Entry per ordered pair (i, j), i != j, in lexicographic order.
    pub pairs: Vec<((usize, usize), Branch)>,
}

impl BranchReport {
    pub fn all_satisfied(&self) -> bool {
        self.pairs.iter().all(|(_, b)| *b != Branch::Neither)
    }

    pub fn branch(&self, i: usize, j: usize) -> Branch {
        self.pairs
            .iter()
            .find(|((pi, pj), _)| *pi == i && *pj == j)
            .map(|(_, b)| *b)
            .expect("pair out of range")
    }
}

/// Tests the lifted Cartan condition for every ordered pair.
pub fn check_cartan_log(g: &GramMatrix, a: &GeneralizedCartanMatrix) -> BranchReport {
    let theta = g.theta();
    let mut pairs = Vec::new();
    for i in 0..theta {
        for j in 0..theta {
            if i == j {
                continue;
            }
            let aij = rat(a.at(i, j), 1);
            let first = rat(2, 1) * g.at(i, j) == &aij * g.at(i, i);
            let second = (Rational::one() - aij) * g.at(i, i) == rat(2, 1);
            let b = match (first, second) {
                (true, true) => Branch::Both,
                (true, false) => Branch::First,
                (false, true) => Branch::Second,
                (false, false) => Branch::Neither,
            };
            pairs.push(((i, j), b));
        }
    }
    BranchReport { pairs }
}

/// Outcome of reflecting the charge data at one vertex.
#[derive(Debug, Clone)]
pub struct ReflectionCheck {
    pub k: usize,
    pub charge_after: Rational,
    pub charge_invariant: bool,
    /// Whether the reflected solution differs from the original only in
    /// coordinate `k`, by `y = 1 - 2/g_{k,k} - sum_j x_j a_{k,j}`.
    pub xi_shift_matches: bool,
}

#[derive(Debug, Clone)]
pub struct InvarianceReport {
    pub charge: Rational,
    pub branches: BranchReport,
    /// True when the lifted Cartan condition held, i.e. invariance is the
    /// theorem's claim rather than an accident.
    pub expected_invariant: bool,
    pub reflections: Vec<ReflectionCheck>,
}

impl InvarianceReport {
    pub fn invariant(&self) -> bool {
        self.reflections.iter().all(|r| r.charge_invariant && r.xi_shift_matches)
    }
}

/// Checks charge invariance under every reflection, plus the closed form
/// for the shift of the `xi` solution. When the lifted Cartan condition
/// holds and invariance nevertheless fails, that is a hard error: it
/// signals a broken precondition or an implementation bug.
pub fn verify_invariance(
    g: &GramMatrix,
    a: &GeneralizedCartanMatrix,
) -> Result<InvarianceReport, ChargeError> {
    let base = solve_xi(g)?;
    let branches = check_cartan_log(g, a);
    let expected_invariant = branches.all_satisfied();
    let theta = g.theta();
    let mut reflections = Vec::with_capacity(theta);
    for k in 0..theta {
        let gk = reflect_gram(g, a, k);
        let refl = solve_xi(&gk)?;
        let charge_invariant = refl.charge == base.charge;
        // y-shift: the reflected solution should be x + y e_k.
        let mut y = Rational::one() - rat(2, 1) / g.at(k, k)
            - (0..theta)
                .map(|j| rat(a.at(k, j), 1) * &base.x[j])
                .fold(Rational::zero(), |acc, v| acc + v);
        y += &base.x[k];
        let xi_shift_matches = (0..theta).all(|j| {
            if j == k {
                refl.x[j] == y
            } else {
                refl.x[j] == base.x[j]
            }
        });
        if expected_invariant && !charge_invariant {
            return Err(ChargeError::InvarianceFailure {
                k,
                original: base.charge.clone(),
                reflected: refl.charge,
            });
        }
        reflections.push(ReflectionCheck { k, charge_after: refl.charge, charge_invariant, xi_shift_matches });
    }
    Ok(InvarianceReport { charge: base.charge, branches, expected_invariant, reflections })
}

/// Central charge of the W-algebra obtained by Hamiltonian reduction at
/// level `k`:
///
/// ```text
/// c(k) = rank - 12 [ (k + h)^2 |rho_dual|^2 - 2 (k + h) <rho, rho_dual> + |rho|^2 ] / (k + h)
/// ```
///
/// with `h` the dual Coxeter number.
pub fn fkw_charge(
    rank: u32,
    dual_coxeter: &Rational,
    rho_sq: &Rational,
    rho_dual_sq: &Rational,
    rho_rho_dual: &Rational,
    k: &Rational,
) -> Result<Rational, ChargeError> {
    let shifted = k + dual_coxeter;
    if shifted.is_zero() {
        return Err(ChargeError::PoleAtCriticalLevel);
    }
    let numer = &shifted * &shifted * rho_dual_sq - rat(2, 1) * &shifted * rho_rho_dual + rho_sq;
    Ok(rat(rank as i64, 1) - rat(12, 1) * numer / shifted)
}

/// Integer box for the solution scan.
#[derive(Debug, Clone, Copy)]
pub struct ScanBounds {
    /// `|m|, |n|, |j|, ... <= int_bound` for the parasitic integers.
    pub int_bound: i64,
    /// Root-order parameters run over `order_min <= |p| <= order_max`,
    /// both signs.
    pub order_min: i64,
    pub order_max: i64,
}

impl Default for ScanBounds {
    fn default() -> Self {
        ScanBounds { int_bound: 10, order_min: 2, order_max: 12 }
    }
}

/// One parameter tuple that solves the lifted Cartan condition.
#[derive(Debug, Clone)]
pub struct SolutionRecord {
    pub params: Params,
    pub gram: GramMatrix,
    pub branches: BranchReport,
    /// Family name and class from the catalog, when the tuple matches a
    /// recorded solution family.
    pub class: Option<(String, SolutionClass)>,
    /// Exact charge via `solve_xi`; `None` when the momenta degenerate.
    pub charge: Option<Rational>,
}

/// Scans all integer parameter tuples of an item inside `bounds`, keeping
/// those whose Gram matrix satisfies the lifted Cartan condition for the
/// Cartan matrix inferred from the item's braiding. Output is ordered
/// lexicographically in the scan parameters regardless of evaluation
/// order.
pub fn enumerate_solutions(item: &ItemSpec, bounds: &ScanBounds) -> Vec<SolutionRecord> {
    let mut records = Vec::new();
    let mut tuples = Vec::new();
    enumerate_params(item, bounds, &mut tuples);
    for params in tuples {
        if !item.params_valid(&params) {
            continue;
        }
        let Ok(braiding) = item.braiding(&params) else { continue };
        let Ok(gram) = item.gram(&params) else { continue };
        let Ok(cartan) = crate::braiding::generalized_cartan(&braiding) else { continue };
        let branches = check_cartan_log(&gram, &cartan);
        if !branches.all_satisfied() {
            continue;
        }
        let class = item
            .classify(&params)
            .map(|family| (family.name.to_string(), family.class));
        let charge = solve_xi(&gram).ok().map(|s| s.charge);
        records.push(SolutionRecord { params, gram, branches, class, charge });
    }
    records
}

fn enumerate_params(item: &ItemSpec, bounds: &ScanBounds, out: &mut Vec<Params>) {
    // Orders first, then the parasitic integers, in the item's declared
    // parameter order; all loops ascending, hence lexicographic output.
    let mut order_values: Vec<Vec<i64>> = Vec::new();
    for _ in item.order_params() {
        let mut vals: Vec<i64> = Vec::new();
        for mag in bounds.order_min..=bounds.order_max {
            vals.push(-mag);
            vals.push(mag);
        }
        vals.sort_unstable();
        order_values.push(vals);
    }
    let int_range: Vec<i64> = (-bounds.int_bound..=bounds.int_bound).collect();
    let names: Vec<&str> = item
        .order_params()
        .iter()
        .chain(item.int_params())
        .copied()
        .collect();
    let mut values: Vec<Vec<i64>> = order_values;
    for _ in item.int_params() {
        values.push(int_range.clone());
    }
    let mut current = vec![0i64; names.len()];
    fill(&names, &values, 0, &mut current, out);

    fn fill(names: &[&str], values: &[Vec<i64>], depth: usize, current: &mut Vec<i64>, out: &mut Vec<Params>) {
        if depth == names.len() {
            out.push(Params::from_pairs(
                &names.iter().copied().zip(current.iter().copied()).collect::<Vec<_>>(),
            ));
            return;
        }
        for &v in &values[depth] {
            current[depth] = v;
            fill(names, values, depth + 1, current, out);
        }
    }
}

// JSON form: {"theta": 2, "g": [["2/3","-1/3"],["-1/3","2/3"]]}
impl Serialize for GramMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            theta: usize,
            g: Vec<Vec<String>>,
        }
        Wire {
            theta: self.theta(),
            g: self
                .g
                .iter()
                .map(|row| row.iter().map(|r| crate::exact::format_rational(r)).collect())
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GramMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            theta: usize,
            g: Vec<Vec<String>>,
        }
        let wire = Wire::deserialize(deserializer)?;
        parse_gram_rows(wire.theta, &wire.g).map_err(D::Error::custom)
    }
}

pub(crate) fn parse_gram_rows(theta: usize, rows: &[Vec<String>]) -> Result<GramMatrix, String> {
    if theta == 0 || rows.len() != theta {
        return Err("theta does not match matrix shape".into());
    }
    let mut g = Vec::with_capacity(theta);
    for row in rows {
        if row.len() != theta {
            return Err("ragged Gram matrix".into());
        }
        let parsed: Result<Vec<Rational>, _> = row.iter().map(|s| parse_rational(s)).collect();
        g.push(parsed.map_err(|e| e.to_string())?);
    }
    for i in 0..theta {
        for j in 0..theta {
            if g[i][j] != g[j][i] {
                return Err("Gram matrix must be symmetric".into());
            }
        }
    }
    Ok(GramMatrix { g })
}

/// Parses either the wire form `{"theta":..,"g":[[..]]}` or a bare array
/// of rows `[["2/3","-1/3"],["-1/3","2/3"]]`.
pub fn parse_gram_json(s: &str) -> Result<GramMatrix, String> {
    if let Ok(g) = serde_json::from_str::<GramMatrix>(s) {
        return Ok(g);
    }
    let rows: Vec<Vec<String>> = serde_json::from_str(s).map_err(|e| e.to_string())?;
    parse_gram_rows(rows.len(), &rows)
}

/// `c = 1 - 3 (a - 2)^2 / a` for a single boson with `alpha.alpha = a`.
/// Used by tests as the one-screening reference value.
pub fn single_boson_charge(aa: &Rational) -> Result<Rational, ChargeError> {
    if aa.is_zero() {
        return Err(ChargeError::DegenerateMomenta);
    }
    let shift = aa - rat(2, 1);
    Ok(Rational::one() - rat(3, 1) * &shift * &shift / aa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn a2() -> GeneralizedCartanMatrix {
        GeneralizedCartanMatrix { a: vec![vec![2, -1], vec![-1, 2]] }
    }

    #[test]
    fn solve_xi_examples() {
        // theta = 1, G = [2]: free boson, c = 1
        let g = GramMatrix::new(vec![vec![rat(2, 1)]]);
        let s = solve_xi(&g).unwrap();
        assert_eq!(s.x, vec![rat(0, 1)]);
        assert_eq!(s.charge, rat(1, 1));

        // the two-screening system at p = 3
        let g = GramMatrix::rank2(rat(2, 3), rat(-1, 3), rat(2, 3));
        let s = solve_xi(&g).unwrap();
        assert_eq!(s.x, vec![rat(-2, 1), rat(-2, 1)]);
        assert_eq!(s.charge, rat(-30, 1));

        // theta = 1, G = [2/3]: the (1,3) value
        let g = GramMatrix::new(vec![vec![rat(2, 3)]]);
        assert_eq!(solve_xi(&g).unwrap().charge, rat(-7, 1));
        assert_eq!(single_boson_charge(&rat(2, 3)).unwrap(), rat(-7, 1));
    }

    #[test]
    fn degenerate_momenta_rejected() {
        let g = GramMatrix::rank2(rat(1, 1), rat(1, 1), rat(1, 1));
        assert_eq!(solve_xi(&g), Err(ChargeError::DegenerateMomenta));
        assert_eq!(central_charge_rank2(&g), Err(ChargeError::DegenerateMomenta));
    }

    #[test]
    fn closed_form_examples() {
        let g = GramMatrix::rank2(rat(2, 3), rat(-1, 3), rat(2, 3));
        assert_eq!(central_charge_rank2(&g).unwrap(), rat(-30, 1));

        let g = GramMatrix::rank2(rat(2, 1), rat(0, 1), rat(2, 1));
        assert_eq!(central_charge_rank2(&g).unwrap(), rat(2, 1));

        // coset value at k + 2 = 1/5
        let g = GramMatrix::rank2(rat(1, 1), rat(-1, 5), rat(2, 5));
        assert_eq!(central_charge_rank2(&g).unwrap(), rat(-28, 1));
    }

    #[test]
    fn reflect_gram_fixes_pivot_and_first_branch() {
        let g = GramMatrix::rank2(rat(2, 3), rat(-1, 3), rat(2, 3));
        let r = reflect_gram(&g, &a2(), 0);
        assert_eq!(r.at(0, 0), g.at(0, 0));
        // first branch for (k, .) pairs also fixes the far diagonal entry
        assert_eq!(r.at(1, 1), g.at(1, 1));
        assert_eq!(solve_xi(&r).unwrap().charge, rat(-30, 1));
    }

    #[test]
    fn branch_report_examples() {
        // regular item 2.1 Gram: first branch everywhere
        let g = GramMatrix::rank2(rat(2, 3), rat(-1, 3), rat(2, 3));
        let rep = check_cartan_log(&g, &a2());
        assert!(rep.pairs.iter().all(|(_, b)| *b == Branch::First));

        // fermionic 2.2 Gram: second branch on (0,1), first on (1,0)
        let g = GramMatrix::rank2(rat(1, 1), rat(-1, 5), rat(2, 5));
        let rep = check_cartan_log(&g, &a2());
        assert_eq!(rep.branch(0, 1), Branch::Second);
        assert_eq!(rep.branch(1, 0), Branch::First);

        // generic Gram: neither
        let g = GramMatrix::rank2(rat(5, 7), rat(1, 9), rat(3, 4));
        assert!(!check_cartan_log(&g, &a2()).all_satisfied());
    }

    #[test]
    fn invariance_on_catalog_grams() {
        let g = GramMatrix::rank2(rat(2, 3), rat(-1, 3), rat(2, 3));
        let rep = verify_invariance(&g, &a2()).unwrap();
        assert!(rep.expected_invariant);
        assert!(rep.invariant());
        assert_eq!(rep.charge, rat(-30, 1));

        let g = GramMatrix::rank2(rat(1, 1), rat(-1, 5), rat(2, 5));
        let rep = verify_invariance(&g, &a2()).unwrap();
        assert!(rep.expected_invariant);
        assert!(rep.invariant());
        assert_eq!(rep.charge, rat(-28, 1));
    }

    #[test]
    fn non_invariance_when_condition_fails() {
        let g = GramMatrix::rank2(rat(5, 7), rat(1, 9), rat(3, 4));
        let rep = verify_invariance(&g, &a2()).unwrap();
        assert!(!rep.expected_invariant);
        assert!(rep.reflections.iter().any(|r| !r.charge_invariant));
    }

    #[test]
    fn fkw_b2_and_g2() {
        // B2 data at k = -2: 86 - 60 - 30 = -4
        let c = fkw_charge(2, &rat(3, 1), &rat(5, 2), &rat(5, 1), &rat(7, 2), &rat(-2, 1)).unwrap();
        assert_eq!(c, rat(-4, 1));

        // k + h = 1 gives rank + 24 rho.rho_dual - 12 rho_dual^2 - 12 rho^2
        let c = fkw_charge(2, &rat(3, 1), &rat(5, 2), &rat(5, 1), &rat(7, 2), &rat(-2, 1)).unwrap();
        let direct = rat(2, 1) + rat(24, 1) * rat(7, 2) - rat(12, 1) * rat(5, 1) - rat(12, 1) * rat(5, 2);
        assert_eq!(c, direct);

        // G2 data with the swapped assignment at k = -3
        let c = fkw_charge(2, &rat(4, 1), &rat(14, 3), &rat(14, 1), &rat(8, 1), &rat(-3, 1)).unwrap();
        assert_eq!(c, rat(-30, 1));

        let crit = fkw_charge(2, &rat(3, 1), &rat(5, 2), &rat(5, 1), &rat(7, 2), &rat(-3, 1));
        assert_eq!(crit, Err(ChargeError::PoleAtCriticalLevel));
    }

    #[test]
    fn block_diagonal_charge_is_additive() {
        let g = GramMatrix::new(vec![
            vec![rat(2, 3), rat(0, 1)],
            vec![rat(0, 1), rat(2, 5)],
        ]);
        let c = solve_xi(&g).unwrap().charge;
        let c1 = single_boson_charge(&rat(2, 3)).unwrap();
        let c2 = single_boson_charge(&rat(2, 5)).unwrap();
        assert_eq!(c, c1 + c2);
    }

    #[test]
    fn enumerate_item_2_2_only_regular() {
        let item = catalog::get_item("2.2").unwrap();
        let bounds = ScanBounds { int_bound: 5, order_min: 3, order_max: 9 };
        let records = enumerate_solutions(item, &bounds);
        assert!(!records.is_empty());
        for r in &records {
            assert_eq!(r.params.get("m"), 0, "peculiar m in {:?}", r.params);
            assert_eq!(r.params.get("n"), 0, "peculiar n in {:?}", r.params);
            let (_, class) = r.class.as_ref().expect("unclassified solution");
            assert_eq!(*class, SolutionClass::Regular);
        }
    }

    #[test]
    fn enumerate_item_2_4_1_families() {
        let item = catalog::get_item("2.4.1").unwrap();
        let bounds = ScanBounds { int_bound: 5, order_min: 4, order_max: 7 };
        let records = enumerate_solutions(item, &bounds);
        let mut names: Vec<String> = Vec::new();
        for r in &records {
            let (name, _) = r.class.as_ref().expect("unclassified solution");
            if !names.contains(name) {
                names.push(name.clone());
            }
        }
        names.sort_unstable();
        assert_eq!(names, vec!["peculiar p=-4", "peculiar p=4", "regular"]);
    }

    #[test]
    fn gram_json_round_trip() {
        let g = GramMatrix::rank2(rat(2, 3), rat(-1, 3), rat(2, 3));
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"theta":2,"g":[["2/3","-1/3"],["-1/3","2/3"]]}"#);
        let back: GramMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, g);

        let bare = parse_gram_json(r#"[["2/3","-1/3"],["-1/3","2/3"]]"#).unwrap();
        assert_eq!(bare, g);
        assert!(parse_gram_json(r#"[["1","2"],["3","4"]]"#).is_err());
    }
}
