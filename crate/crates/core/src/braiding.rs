//! Diagonal braiding matrices and the Weyl groupoid acting on them.
//!
//! A braiding matrix holds the scalars `q_{i,j}` with `Psi(F_i ox F_j) =
//! q_{i,j} F_j ox F_i`; every entry is a root of unity. A generalized
//! Cartan matrix is inferred from the diagonal entries and monodromies
//! `q_{i,j} q_{j,i}`, and pseudoreflections act by
//!
//! ```text
//! R_k(q_{i,j}) = q_{i,j} q_{i,k}^{-a_{k,j}} q_{k,j}^{-a_{k,i}} q_{k,k}^{a_{k,i} a_{k,j}}
//! ```
//!
//! Orbits are taken modulo twist equivalence (same diagonal, same
//! monodromies), which both the Cartan inference and the reflections
//! descend to.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exact::RationalAngle;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidingError {
    #[error("no generalized Cartan entry exists for pair ({0}, {1})")]
    NotAdmissible(usize, usize),
    #[error("Weyl orbit exceeded the size cap {0}")]
    OrbitBound(usize),
    #[error("braiding matrix must be square and nonempty")]
    BadShape,
    #[error("entry orders overflow the supported range")]
    OrderOverflow,
}

/// theta x theta matrix of roots of unity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidingMatrix {
    q: Vec<Vec<RationalAngle>>,
}

impl BraidingMatrix {
    pub fn new(q: Vec<Vec<RationalAngle>>) -> Result<Self, BraidingError> {
        let theta = q.len();
        if theta == 0 || q.iter().any(|row| row.len() != theta) {
            return Err(BraidingError::BadShape);
        }
        Ok(BraidingMatrix { q })
    }

    /// Rank-2 matrix from diagonal entries and symmetric off-diagonal ones.
    pub fn rank2(q11: RationalAngle, q12: RationalAngle, q21: RationalAngle, q22: RationalAngle) -> Self {
        BraidingMatrix { q: vec![vec![q11, q12], vec![q21, q22]] }
    }

    pub fn theta(&self) -> usize {
        self.q.len()
    }

    pub fn at(&self, i: usize, j: usize) -> &RationalAngle {
        &self.q[i][j]
    }

    /// Monodromy `q_{i,j} q_{j,i}` for `i != j`.
    pub fn monodromy(&self, i: usize, j: usize) -> RationalAngle {
        self.at(i, j) * self.at(j, i)
    }

    pub fn diagonal(&self) -> Vec<RationalAngle> {
        (0..self.theta()).map(|i| self.at(i, i).clone()).collect()
    }

    /// lcm of the orders of all entries; the natural cyclotomic conductor
    /// for exact computations with this braiding. Panics on overflow;
    /// untrusted input goes through [`BraidingMatrix::try_conductor`].
    pub fn conductor(&self) -> u64 {
        self.try_conductor().expect("conductor exceeds u64")
    }

    pub fn try_conductor(&self) -> Option<u64> {
        let mut n: u64 = 1;
        for row in &self.q {
            for a in row {
                let order = a.try_order()?;
                let g = n.gcd(&order);
                n = n.checked_mul(order / g)?;
            }
        }
        Some(n)
    }

    /// The twist-equivalence invariant: diagonal plus all monodromies.
    pub fn twist_class(&self) -> TwistClass {
        let theta = self.theta();
        let mut monodromies = BTreeMap::new();
        for i in 0..theta {
            for j in i + 1..theta {
                monodromies.insert((i, j), self.monodromy(i, j));
            }
        }
        TwistClass { diagonal: self.diagonal(), monodromies }
    }

    pub fn dynkin_diagram(&self) -> DynkinDiagram {
        let theta = self.theta();
        let mut edges = BTreeMap::new();
        for i in 0..theta {
            for j in i + 1..theta {
                let m = self.monodromy(i, j);
                if !m.is_one() {
                    edges.insert((i, j), m);
                }
            }
        }
        DynkinDiagram { vertices: self.diagonal(), edges }
    }
}

/// Two braidings are twist equivalent iff the diagonals and all pairwise
/// monodromies agree.
pub fn twist_equivalent(b1: &BraidingMatrix, b2: &BraidingMatrix) -> bool {
    b1.theta() == b2.theta() && b1.twist_class() == b2.twist_class()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistClass {
    pub diagonal: Vec<RationalAngle>,
    pub monodromies: BTreeMap<(usize, usize), RationalAngle>,
}

/// Integer matrix with 2 on the diagonal and nonpositive entries off it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneralizedCartanMatrix {
    pub a: Vec<Vec<i64>>,
}

impl GeneralizedCartanMatrix {
    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn theta(&self) -> usize {
        self.a.len()
    }
}

impl fmt::Display for GeneralizedCartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .a
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(i64::to_string).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Generalized Dynkin diagram: vertices carry `q_{i,i}`, edges carry the
/// nontrivial monodromies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub vertices: Vec<RationalAngle>,
    pub edges: BTreeMap<(usize, usize), RationalAngle>,
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vertices.len() == 2 {
            return match self.edges.get(&(0, 1)) {
                Some(m) => write!(f, "{} --{}-- {}", self.vertices[0], m, self.vertices[1]),
                None => write!(f, "{}    {}", self.vertices[0], self.vertices[1]),
            };
        }
        let verts: Vec<String> = self.vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "vertices: {}", verts.join(", "))?;
        for ((i, j), m) in &self.edges {
            write!(f, "; {}--{}: {}", i + 1, j + 1, m)?;
        }
        Ok(())
    }
}

/// Infers the generalized Cartan matrix:
/// `a_{i,j} = -min{ n >= 0 : q_{i,i}^{-n} = q_{i,j} q_{j,i} or q_{i,i}^{n+1} = 1 }`.
///
/// The minimal-witness rule is a convention; the defining property only
/// states existence. The search is bounded by the lcm of the entry orders,
/// beyond which no new power can appear.
pub fn generalized_cartan(b: &BraidingMatrix) -> Result<GeneralizedCartanMatrix, BraidingError> {
    let theta = b.theta();
    let bound = b.try_conductor().ok_or(BraidingError::OrderOverflow)? + 1;
    let mut a = vec![vec![0i64; theta]; theta];
    for i in 0..theta {
        a[i][i] = 2;
        for j in 0..theta {
            if i == j {
                continue;
            }
            let qii = b.at(i, i);
            let m = b.monodromy(i, j);
            let mut found = None;
            for n in 0..=bound {
                let n_i = n as i64;
                if qii.pow(-n_i) == m || qii.pow(n_i + 1).is_one() {
                    found = Some(n_i);
                    break;
                }
            }
            match found {
                Some(n) => a[i][j] = -n,
                None => return Err(BraidingError::NotAdmissible(i, j)),
            }
        }
    }
    Ok(GeneralizedCartanMatrix { a })
}

/// Weyl pseudoreflection at vertex `k` (0-based).
pub fn reflect(b: &BraidingMatrix, k: usize) -> Result<BraidingMatrix, BraidingError> {
    let a = generalized_cartan(b)?;
    Ok(reflect_with_cartan(b, &a, k))
}

pub fn reflect_with_cartan(
    b: &BraidingMatrix,
    a: &GeneralizedCartanMatrix,
    k: usize,
) -> BraidingMatrix {
    let theta = b.theta();
    assert!(k < theta, "reflection index out of range");
    let mut q = vec![vec![RationalAngle::zero(); theta]; theta];
    for i in 0..theta {
        for j in 0..theta {
            q[i][j] = &(&(b.at(i, j) * &b.at(i, k).pow(-a.at(k, j))) * &b.at(k, j).pow(-a.at(k, i)))
                * &b.at(k, k).pow(a.at(k, i) * a.at(k, j));
        }
    }
    BraidingMatrix { q }
}

/// One twist class in a Weyl orbit, with the Cartan matrix attached to the
/// representative that was reached.
#[derive(Debug, Clone)]
pub struct OrbitClass {
    pub representative: BraidingMatrix,
    pub cartan: GeneralizedCartanMatrix,
}

pub const DEFAULT_ORBIT_CAP: usize = 64;

/// Closure of `{b}` under all reflections, modulo twist equivalence.
/// Classes come out in the deterministic order of discovery.
pub fn weyl_orbit(b: &BraidingMatrix, cap: usize) -> Result<Vec<OrbitClass>, BraidingError> {
    let mut classes: Vec<OrbitClass> = Vec::new();
    let mut seen: Vec<TwistClass> = Vec::new();
    let mut queue: Vec<BraidingMatrix> = vec![b.clone()];
    while let Some(m) = queue.pop() {
        let key = m.twist_class();
        if seen.contains(&key) {
            continue;
        }
        if classes.len() == cap {
            return Err(BraidingError::OrbitBound(cap));
        }
        let cartan = generalized_cartan(&m)?;
        for k in 0..m.theta() {
            queue.push(reflect_with_cartan(&m, &cartan, k));
        }
        seen.push(key);
        classes.push(OrbitClass { representative: m, cartan });
    }
    Ok(classes)
}

// JSON form: {"theta": 2, "q": [["1/5","9/10"],["9/10","1/5"]]}
impl Serialize for BraidingMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire {
            theta: usize,
            q: Vec<Vec<String>>,
        }
        let wire = Wire {
            theta: self.theta(),
            q: self
                .q
                .iter()
                .map(|row| row.iter().map(|a| a.to_string()).collect())
                .collect(),
        };
        wire.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BraidingMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Wire {
            theta: usize,
            q: Vec<Vec<String>>,
        }
        let wire = Wire::deserialize(deserializer)?;
        if wire.theta == 0 || wire.q.len() != wire.theta {
            return Err(D::Error::custom("theta does not match matrix shape"));
        }
        let mut q = Vec::with_capacity(wire.theta);
        for row in &wire.q {
            if row.len() != wire.theta {
                return Err(D::Error::custom("ragged braiding matrix"));
            }
            let parsed: Result<Vec<_>, _> = row.iter().map(|s| RationalAngle::parse(s)).collect();
            q.push(parsed.map_err(D::Error::custom)?);
        }
        Ok(BraidingMatrix { q })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::catalog::Params;

    fn item_braiding(id: &str, params: &[(&str, i64)]) -> BraidingMatrix {
        let item = catalog::get_item(id).unwrap();
        item.braiding(&Params::from_pairs(params)).unwrap()
    }

    #[test]
    fn cartan_type_a2_from_item_2_1() {
        // diag (1/5, 1/5), monodromy 4/5
        let b = item_braiding("2.1", &[("m", 0), ("n", 0), ("j", 0), ("p", 5)]);
        assert_eq!(b.at(0, 0), &RationalAngle::from_ratio(1, 5));
        assert_eq!(b.monodromy(0, 1), RationalAngle::from_ratio(4, 5));
        let a = generalized_cartan(&b).unwrap();
        assert_eq!(a.a, vec![vec![2, -1], vec![-1, 2]]);
    }

    #[test]
    fn trivial_monodromy_gives_zero_entries() {
        let b = BraidingMatrix::rank2(
            RationalAngle::from_ratio(1, 3),
            RationalAngle::from_ratio(2, 7),
            RationalAngle::from_ratio(5, 7),
            RationalAngle::half(),
        );
        assert!(b.monodromy(0, 1).is_one());
        let a = generalized_cartan(&b).unwrap();
        assert_eq!(a.a, vec![vec![2, 0], vec![0, 2]]);
    }

    #[test]
    fn cartan_type_b2_from_item_2_4_1() {
        // diag (1/5, 2/5), monodromy 3/5
        let b = item_braiding("2.4.1", &[("m", 0), ("n", 0), ("j", 0), ("p", 5)]);
        assert_eq!(b.at(1, 1), &RationalAngle::from_ratio(2, 5));
        assert_eq!(b.monodromy(0, 1), RationalAngle::from_ratio(3, 5));
        let a = generalized_cartan(&b).unwrap();
        assert_eq!(a.a, vec![vec![2, -2], vec![-1, 2]]);
    }

    #[test]
    fn reflection_fixes_the_pivot_entry() {
        let b = item_braiding("2.2", &[("m", 0), ("n", 0), ("j", 0), ("p", 5)]);
        for k in 0..2 {
            let r = reflect(&b, k).unwrap();
            assert_eq!(r.at(k, k), b.at(k, k));
        }
    }

    #[test]
    fn item_2_2_reflection_lands_on_two_fermions() {
        // q11 = -1, q22 = e^{2 pi i/5}, q12 = q21 = e^{-i pi/5}; reflecting
        // at the fermionic vertex yields diagonal (-1,-1) with monodromy
        // e^{2 pi i/5}, and reflecting at the other vertex fixes the matrix.
        let b = item_braiding("2.2", &[("m", 0), ("n", 0), ("j", 0), ("p", 5)]);
        let r = reflect(&b, 0).unwrap();
        assert_eq!(r.diagonal(), vec![RationalAngle::half(), RationalAngle::half()]);
        assert_eq!(r.monodromy(0, 1), RationalAngle::from_ratio(1, 5));
        let s = reflect(&b, 1).unwrap();
        assert!(twist_equivalent(&s, &b));
    }

    #[test]
    fn item_2_1_is_stable_under_reflections() {
        let b = item_braiding("2.1", &[("m", 0), ("n", 0), ("j", 0), ("p", 5)]);
        for k in 0..2 {
            let r = reflect(&b, k).unwrap();
            assert!(twist_equivalent(&r, &b));
        }
        assert_eq!(weyl_orbit(&b, DEFAULT_ORBIT_CAP).unwrap().len(), 1);
    }

    #[test]
    fn item_2_2_orbit_has_three_classes() {
        let b = item_braiding("2.2", &[("m", 0), ("n", 0), ("j", 0), ("p", 5)]);
        let orbit = weyl_orbit(&b, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(orbit.len(), 3);
        let one_fifth = RationalAngle::from_ratio(1, 5);
        let half = RationalAngle::half();
        let mut diags: Vec<Vec<RationalAngle>> =
            orbit.iter().map(|c| c.representative.diagonal()).collect();
        diags.sort();
        let mut expected = vec![
            vec![half.clone(), one_fifth.clone()],
            vec![half.clone(), half.clone()],
            vec![one_fifth.clone(), half.clone()],
        ];
        expected.sort();
        assert_eq!(diags, expected);
    }

    #[test]
    fn item_2_6_orbit_contains_the_stated_cartan() {
        let b = item_braiding("2.6", &[("m", 0), ("n", 0), ("j", 0), ("r", 1)]);
        let orbit = weyl_orbit(&b, DEFAULT_ORBIT_CAP).unwrap();
        let target = vec![vec![2, -3], vec![-2, 2]];
        assert!(orbit.iter().any(|c| c.cartan.a == target));
    }

    #[test]
    fn twist_equivalence_ignores_off_diagonal_splitting() {
        let b1 = BraidingMatrix::rank2(
            RationalAngle::from_ratio(1, 3),
            RationalAngle::from_ratio(1, 12),
            RationalAngle::from_ratio(7, 12),
            RationalAngle::from_ratio(1, 3),
        );
        let b2 = BraidingMatrix::rank2(
            RationalAngle::from_ratio(1, 3),
            RationalAngle::from_ratio(1, 3),
            RationalAngle::from_ratio(1, 3),
            RationalAngle::from_ratio(1, 3),
        );
        assert!(twist_equivalent(&b1, &b2));
        let b3 = item_braiding("2.1", &[("m", 0), ("n", 0), ("j", 0), ("p", 3)]);
        let b5 = item_braiding("2.1", &[("m", 0), ("n", 0), ("j", 0), ("p", 5)]);
        assert!(!twist_equivalent(&b3, &b5));
    }

    #[test]
    fn double_reflection_returns_to_start() {
        let b = item_braiding("2.4.1", &[("m", 0), ("n", 0), ("j", 0), ("p", 5)]);
        for k in 0..2 {
            let once = reflect(&b, k).unwrap();
            let twice = reflect(&once, k).unwrap();
            assert!(twist_equivalent(&twice, &b));
        }
    }

    #[test]
    fn braiding_json_round_trip() {
        let b = item_braiding("2.1", &[("m", 0), ("n", 0), ("j", 0), ("p", 5)]);
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(json, r#"{"theta":2,"q":[["1/5","9/10"],["9/10","1/5"]]}"#);
        let back: BraidingMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<BraidingMatrix>(r#"{"theta":2,"q":[["1/5"]]}"#).is_err());
    }

    #[test]
    fn dynkin_text_form() {
        let b = item_braiding("2.1", &[("m", 0), ("n", 0), ("j", 0), ("p", 5)]);
        assert_eq!(b.dynkin_diagram().to_string(), "1/5 --4/5-- 1/5");
    }
}
