//! Machine-readable rank-2 catalog.
//!
//! Heckenberger's enumeration of rank-2 finite-dimensional diagonal
//! Nichols algebras, item by item: executable defining conditions on the
//! braiding matrix, parameterized braiding templates and Gram families,
//! the recorded solution families of the lifted Cartan conditions with
//! their closed-form charges, and presentations with dimension formulas
//! where known.
//!
//! Items without recorded solutions or charges are first-class
//! "conditions-only" records: `match_braiding` and the solution scan still
//! run on them, but no charge is ever asserted.

mod items;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::braiding::BraidingMatrix;
use crate::charge::GramMatrix;
use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog item `{0}`")]
    UnknownItem(String),
    #[error("item {0} records no charge for this class/parameters")]
    NoChargeRecorded(String),
    #[error("item {0} has no recorded presentation")]
    NoPresentation(String),
    #[error("parameters outside the validity domain: {0}")]
    OutOfDomain(String),
    #[error("missing parameter `{0}`")]
    MissingParam(String),
    #[error("evaluator hit a pole at these parameters")]
    EvaluatorPole,
}

/// Named integer parameters of a catalog item (`m`, `n`, `j`, `p`, ...).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Params {
    map: BTreeMap<String, i64>,
}

impl Params {
    pub fn from_pairs(pairs: &[(&str, i64)]) -> Self {
        Params { map: pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect() }
    }

    pub fn get(&self, name: &str) -> i64 {
        *self
            .map
            .get(name)
            .unwrap_or_else(|| panic!("parameter `{name}` not supplied"))
    }

    pub fn try_get(&self, name: &str) -> Result<i64, CatalogError> {
        self.map
            .get(name)
            .copied()
            .ok_or_else(|| CatalogError::MissingParam(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.map.keys().map(String::as_str)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, i64)> {
        self.map.iter().map(|(k, v)| (k.as_str(), *v))
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.map.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SolutionClass {
    Regular,
    Peculiar,
}

impl fmt::Display for SolutionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolutionClass::Regular => write!(f, "regular"),
            SolutionClass::Peculiar => write!(f, "peculiar"),
        }
    }
}

/// Closed-form charge with its parameter mapping. `eval_alt`, when
/// present, is the alternate mapping printed alongside the primary one;
/// the two must agree wherever both are defined (tested).
pub struct ChargeEvaluator {
    pub text: &'static str,
    pub eval: fn(&Params) -> Result<Rational, CatalogError>,
    pub eval_alt: Option<fn(&Params) -> Result<Rational, CatalogError>>,
}

/// One recorded family of solutions of the lifted Cartan conditions.
pub struct SolutionFamily {
    pub name: &'static str,
    pub class: SolutionClass,
    pub constraint_text: &'static str,
    pub matches: fn(&Params) -> bool,
    pub charge: Option<ChargeEvaluator>,
}

/// Iterated q-commutator word over the generators F1, F2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BracketWord {
    /// A generator, 0-based (0 = F1, 1 = F2).
    Letter(u8),
    Bracket(Box<BracketWord>, Box<BracketWord>),
}

impl BracketWord {
    pub fn letter(i: u8) -> Self {
        BracketWord::Letter(i)
    }

    pub fn bracket(a: BracketWord, b: BracketWord) -> Self {
        BracketWord::Bracket(Box::new(a), Box::new(b))
    }

    /// Left-nested bracket of a plain word: [a, b, c, ...] = [a, [b, [c, ...]]].
    pub fn left_nested(letters: &[u8]) -> Self {
        assert!(!letters.is_empty());
        if letters.len() == 1 {
            return BracketWord::Letter(letters[0]);
        }
        BracketWord::bracket(
            BracketWord::Letter(letters[0]),
            BracketWord::left_nested(&letters[1..]),
        )
    }

    /// Underlying letters in order.
    pub fn word(&self) -> Vec<u8> {
        match self {
            BracketWord::Letter(l) => vec![*l],
            BracketWord::Bracket(a, b) => {
                let mut w = a.word();
                w.extend(b.word());
                w
            }
        }
    }

    /// All binary bracketings of a letter sequence (Catalan many); used to
    /// probe which nesting of an ambiguous printed word actually vanishes.
    pub fn all_bracketings(letters: &[u8]) -> Vec<BracketWord> {
        assert!(!letters.is_empty());
        if letters.len() == 1 {
            return vec![BracketWord::Letter(letters[0])];
        }
        let mut out = Vec::new();
        for split in 1..letters.len() {
            for left in Self::all_bracketings(&letters[..split]) {
                for right in Self::all_bracketings(&letters[split..]) {
                    out.push(BracketWord::bracket(left.clone(), right.clone()));
                }
            }
        }
        out
    }
}

impl fmt::Display for BracketWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketWord::Letter(l) => write!(f, "F{}", l + 1),
            BracketWord::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// Ideal generator: a bracket word raised to a power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGenerator {
    pub word: BracketWord,
    pub power: u32,
}

impl fmt::Display for IdealGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 1 {
            write!(f, "{}", self.word)
        } else if matches!(self.word, BracketWord::Letter(_)) {
            write!(f, "{}^{}", self.word, self.power)
        } else {
            write!(f, "({})^{}", self.word, self.power)
        }
    }
}

pub struct PresentationCase {
    pub domain_text: &'static str,
    pub domain: fn(&Params) -> bool,
    pub generators: fn(&Params) -> Vec<IdealGenerator>,
    pub dimension_text: &'static str,
    pub dimension: fn(&Params) -> u64,
}

pub struct Presentation {
    pub cases: Vec<PresentationCase>,
}

/// Data for the Hamiltonian-reduction charge formula attached to an item.
pub struct FkwData {
    pub rank: u32,
    pub dual_coxeter: i64,
    /// |rho|^2 and |rho_dual|^2 exactly as printed in the source list.
    pub rho_sq_printed: Rational,
    pub rho_dual_sq_printed: Rational,
    pub rho_rho_dual: Rational,
    /// Level from the scan parameters: returns k such that the reduction
    /// charge at level k should reproduce the item's regular charge.
    pub level: fn(&Params) -> Result<Rational, CatalogError>,
    /// True when only the swapped rho/rho_dual assignment reproduces the
    /// printed closed form; the as-printed assignment is then flagged.
    pub swap_needed: bool,
}

/// One item of the rank-2 list.
pub struct ItemSpec {
    pub id: &'static str,
    pub cartan_label: Option<&'static str>,
    /// Boxed section conditions plus the item's own, as text.
    pub conditions_text: &'static str,
    /// Scalar-product form of the conditions, verbatim where printed.
    pub scalar_conditions_text: Option<&'static str>,
    pub conditions_only: bool,
    matches_fn: fn(&BraidingMatrix) -> bool,
    braiding_fn: Option<fn(&Params) -> BraidingMatrix>,
    gram_fn: Option<fn(&Params) -> GramMatrix>,
    int_params: &'static [&'static str],
    order_params: &'static [&'static str],
    /// Minimal |order| for the order parameters (e.g. |p| >= 3).
    pub order_min_abs: i64,
    validity_fn: fn(&Params) -> bool,
    pub families: Vec<SolutionFamily>,
    pub presentation: Option<Presentation>,
    pub fkw: Option<FkwData>,
    pub notes: &'static str,
}

impl ItemSpec {
    pub fn matches(&self, b: &BraidingMatrix) -> bool {
        b.theta() == 2 && (self.matches_fn)(b)
    }

    pub fn braiding(&self, params: &Params) -> Result<BraidingMatrix, CatalogError> {
        match self.braiding_fn {
            Some(f) => {
                self.check_params(params)?;
                Ok(f(params))
            }
            None => Err(CatalogError::OutOfDomain(format!(
                "item {} has no braiding template",
                self.id
            ))),
        }
    }

    pub fn gram(&self, params: &Params) -> Result<GramMatrix, CatalogError> {
        match self.gram_fn {
            Some(f) => {
                self.check_params(params)?;
                Ok(f(params))
            }
            None => Err(CatalogError::OutOfDomain(format!(
                "item {} has no Gram family",
                self.id
            ))),
        }
    }

    fn check_params(&self, params: &Params) -> Result<(), CatalogError> {
        for name in self.int_params.iter().chain(self.order_params) {
            params.try_get(name)?;
        }
        if !self.params_valid(params) {
            return Err(CatalogError::OutOfDomain(format!(
                "parameters ({params}) violate the conditions of item {}",
                self.id
            )));
        }
        Ok(())
    }

    pub fn int_params(&self) -> &'static [&'static str] {
        self.int_params
    }

    pub fn order_params(&self) -> &'static [&'static str] {
        self.order_params
    }

    /// Coprimality/parity/size constraints on the raw parameters.
    pub fn params_valid(&self, params: &Params) -> bool {
        for name in self.order_params {
            let p = match params.try_get(name) {
                Ok(p) => p,
                Err(_) => return false,
            };
            if p.abs() < self.order_min_abs {
                return false;
            }
        }
        (self.validity_fn)(params)
    }

    /// First recorded family matching the parameters.
    pub fn classify(&self, params: &Params) -> Option<&SolutionFamily> {
        self.families.iter().find(|f| (f.matches)(params))
    }

    pub fn param_names(&self) -> Vec<&'static str> {
        self.order_params.iter().chain(self.int_params).copied().collect()
    }
}

fn catalog() -> &'static Vec<ItemSpec> {
    static CATALOG: OnceLock<Vec<ItemSpec>> = OnceLock::new();
    CATALOG.get_or_init(items::build)
}

pub fn item_ids() -> Vec<&'static str> {
    catalog().iter().map(|i| i.id).collect()
}

pub fn get_item(id: &str) -> Result<&'static ItemSpec, CatalogError> {
    catalog()
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| CatalogError::UnknownItem(id.to_string()))
}

/// All items whose defining conditions the braiding matrix satisfies.
/// Entry orders must stay within the supported (u64) range; matrices
/// beyond it match nothing.
pub fn match_braiding(b: &BraidingMatrix) -> Vec<&'static str> {
    if b.try_conductor().is_none() {
        return Vec::new();
    }
    catalog().iter().filter(|i| i.matches(b)).map(|i| i.id).collect()
}

/// Evaluates the recorded closed-form charge of the matching family.
pub fn expected_charge(
    id: &str,
    class: SolutionClass,
    params: &Params,
) -> Result<Rational, CatalogError> {
    let item = get_item(id)?;
    item.check_params(params)?;
    let family = item
        .families
        .iter()
        .find(|f| f.class == class && (f.matches)(params))
        .ok_or_else(|| CatalogError::NoChargeRecorded(id.to_string()))?;
    let evaluator = family
        .charge
        .as_ref()
        .ok_or_else(|| CatalogError::NoChargeRecorded(id.to_string()))?;
    (evaluator.eval)(params)
}

/// Integer dimension from the recorded presentation.
pub fn expected_dimension(id: &str, params: &Params) -> Result<u64, CatalogError> {
    let item = get_item(id)?;
    let presentation = item
        .presentation
        .as_ref()
        .ok_or_else(|| CatalogError::NoPresentation(id.to_string()))?;
    let case = presentation
        .cases
        .iter()
        .find(|c| (c.domain)(params))
        .ok_or_else(|| CatalogError::OutOfDomain(format!("item {id} at ({params})")))?;
    Ok((case.dimension)(params))
}

/// Presentation generators at concrete parameters.
pub fn presentation_generators(
    id: &str,
    params: &Params,
) -> Result<Vec<IdealGenerator>, CatalogError> {
    let item = get_item(id)?;
    let presentation = item
        .presentation
        .as_ref()
        .ok_or_else(|| CatalogError::NoPresentation(id.to_string()))?;
    let case = presentation
        .cases
        .iter()
        .find(|c| (c.domain)(params))
        .ok_or_else(|| CatalogError::OutOfDomain(format!("item {id} at ({params})")))?;
    Ok((case.generators)(params))
}

/// Wire form of an item for `catalog show --json` and the shipped
/// catalog document.
#[derive(Serialize)]
pub struct ItemRecord {
    pub id: &'static str,
    pub cartan_type: Option<&'static str>,
    pub conditions: &'static str,
    pub scalar_conditions: Option<&'static str>,
    pub conditions_only: bool,
    pub parameters: Vec<&'static str>,
    pub families: Vec<FamilyRecord>,
    pub presentation: Vec<PresentationRecord>,
    pub notes: &'static str,
}

#[derive(Serialize)]
pub struct FamilyRecord {
    pub name: &'static str,
    pub class: SolutionClass,
    pub constraint: &'static str,
    pub charge: Option<&'static str>,
}

#[derive(Serialize)]
pub struct PresentationRecord {
    pub domain: &'static str,
    pub generators: Vec<String>,
    pub dimension: &'static str,
}

/// Sample parameters used to render the generator words of a
/// presentation case in the JSON export.
fn sample_params(item: &ItemSpec, case: &PresentationCase) -> Option<Params> {
    // Try small parameter values until one lands in the domain.
    let names = item.param_names();
    for p in 2..=12 {
        let pairs: Vec<(&str, i64)> = names
            .iter()
            .map(|&n| match n {
                "p" | "p1" | "p2" => (n, p),
                "s" | "r" => (n, 1),
                _ => (n, 0),
            })
            .collect();
        let params = Params::from_pairs(&pairs);
        if item.params_valid(&params) && (case.domain)(&params) {
            return Some(params);
        }
    }
    None
}

pub fn item_record(item: &'static ItemSpec) -> ItemRecord {
    let families = item
        .families
        .iter()
        .map(|f| FamilyRecord {
            name: f.name,
            class: f.class,
            constraint: f.constraint_text,
            charge: f.charge.as_ref().map(|c| c.text),
        })
        .collect();
    let presentation = item
        .presentation
        .as_ref()
        .map(|p| {
            p.cases
                .iter()
                .map(|case| PresentationRecord {
                    domain: case.domain_text,
                    generators: sample_params(item, case)
                        .map(|params| {
                            (case.generators)(&params).iter().map(|g| g.to_string()).collect()
                        })
                        .unwrap_or_default(),
                    dimension: case.dimension_text,
                })
                .collect()
        })
        .unwrap_or_default();
    ItemRecord {
        id: item.id,
        cartan_type: item.cartan_label,
        conditions: item.conditions_text,
        scalar_conditions: item.scalar_conditions_text,
        conditions_only: item.conditions_only,
        parameters: item.param_names(),
        families,
        presentation,
        notes: item.notes,
    }
}

/// The full catalog as one JSON document.
pub fn catalog_json() -> String {
    let records: Vec<ItemRecord> = catalog().iter().map(item_record).collect();
    serde_json::to_string_pretty(&records).expect("catalog serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, RationalAngle};

    fn params(pairs: &[(&str, i64)]) -> Params {
        Params::from_pairs(pairs)
    }

    #[test]
    fn ids_complete() {
        let ids = item_ids();
        assert_eq!(ids.len(), 30);
        for id in [
            "1", "2.1", "2.2", "2.3", "2.4.1", "2.4.2", "2.5", "2.6", "2.7", "3.1", "3.2.1",
            "3.2.2", "3.3", "3.4", "3.5", "3.6", "3.7", "4.1", "4.2", "4.3", "4.4", "4.5", "4.6",
            "4.7", "4.8", "5.1", "5.2", "5.3", "5.4", "5.5",
        ] {
            assert!(ids.contains(&id), "missing {id}");
        }
        assert!(get_item("6.1").is_err());
    }

    #[test]
    fn conditions_only_flags() {
        for id in ["3.3", "3.4", "3.5", "3.6", "3.7", "4.2", "4.8", "5.1", "5.3", "5.5"] {
            let item = get_item(id).unwrap();
            assert!(item.conditions_only, "{id} should be conditions-only");
            assert!(item.families.is_empty());
            assert!(item.presentation.is_none());
        }
        for id in ["2.1", "2.2", "2.4.1", "3.1", "4.1"] {
            assert!(!get_item(id).unwrap().conditions_only);
        }
    }

    #[test]
    fn match_braiding_examples() {
        // diag(1/3, 1/3), monodromy 2/3: item 2.1 at p = 3
        let item = get_item("2.1").unwrap();
        let b = item
            .braiding(&params(&[("m", 0), ("n", 0), ("j", 0), ("p", 3)]))
            .unwrap();
        assert!(match_braiding(&b).contains(&"2.1"));

        // diag(1/2, 1/5), monodromy 4/5: item 2.2 at p = 5
        let b = get_item("2.2")
            .unwrap()
            .braiding(&params(&[("m", 0), ("n", 0), ("j", 0), ("p", 5)]))
            .unwrap();
        let ids = match_braiding(&b);
        assert!(ids.contains(&"2.2"), "{ids:?}");
        assert!(!ids.contains(&"2.1"));

        // trivial monodromy: item 1
        let b = get_item("1")
            .unwrap()
            .braiding(&params(&[("n1", 0), ("n2", 0), ("j", 0), ("p1", 3), ("p2", 5)]))
            .unwrap();
        assert_eq!(match_braiding(&b), vec!["1"]);
    }

    #[test]
    fn expected_charge_examples() {
        // W3 value at p = 3
        let c = expected_charge(
            "2.1",
            SolutionClass::Regular,
            &params(&[("m", 0), ("n", 0), ("j", 0), ("p", 3)]),
        )
        .unwrap();
        assert_eq!(c, rat(-30, 1));

        // the bosonic-string value
        let c = expected_charge(
            "2.5",
            SolutionClass::Regular,
            &params(&[("m", 0), ("n", 0), ("j", 0), ("r", 1)]),
        )
        .unwrap();
        assert_eq!(c, rat(26, 1));

        // item 4.1 at p = 5, j = 0: k = -6, c = -51
        let c = expected_charge(
            "4.1",
            SolutionClass::Regular,
            &params(&[("m", 0), ("n", 0), ("j", 0), ("p", 5)]),
        )
        .unwrap();
        assert_eq!(c, rat(-51, 1));

        assert!(matches!(
            expected_charge("5.3", SolutionClass::Regular, &params(&[])),
            Err(CatalogError::NoChargeRecorded(_))
        ));
    }

    #[test]
    fn expected_dimension_examples() {
        let p21 = |p| params(&[("m", 0), ("n", 0), ("j", 0), ("p", p)]);
        assert_eq!(expected_dimension("2.1", &p21(2)).unwrap(), 8);
        assert_eq!(expected_dimension("2.1", &p21(3)).unwrap(), 27);
        assert_eq!(expected_dimension("2.2", &p21(3)).unwrap(), 12);
        assert_eq!(expected_dimension("2.4.1", &p21(4)).unwrap(), 64);
        assert_eq!(expected_dimension("2.4.1", &p21(5)).unwrap(), 625);
        assert_eq!(
            expected_dimension("3.2.2", &params(&[("m", 0), ("n", 0), ("l", 0), ("s", 1)]))
                .unwrap(),
            36
        );
        assert!(matches!(
            expected_dimension("2.2", &p21(2)),
            Err(CatalogError::OutOfDomain(_))
        ));
        assert!(matches!(
            expected_dimension("2.4.2", &p21(5)),
            Err(CatalogError::NoPresentation(_))
        ));
    }

    #[test]
    fn presentation_words() {
        let gens = presentation_generators(
            "2.1",
            &params(&[("m", 0), ("n", 0), ("j", 0), ("p", 3)]),
        )
        .unwrap();
        let rendered: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
        assert_eq!(
            rendered,
            vec!["[F1,[F1,F2]]", "[[F1,F2],F2]", "F1^3", "([F1,F2])^3", "F2^3"]
        );

        let gens = presentation_generators(
            "3.2.2",
            &params(&[("m", 0), ("n", 0), ("l", 0), ("s", 1)]),
        )
        .unwrap();
        assert_eq!(gens[0].word.word(), vec![0, 0, 1, 0, 1]);
    }

    #[test]
    fn charge_mappings_agree_where_both_apply() {
        for id in ["2.1", "2.3", "2.4.1", "2.4.2", "4.1"] {
            let item = get_item(id).unwrap();
            for family in &item.families {
                let Some(ev) = &family.charge else { continue };
                let Some(alt) = ev.eval_alt else { continue };
                for p in [-7, -5, 4, 5, 7, 9] {
                    for j in -3..=3 {
                        let pr = params(&[("m", 0), ("n", 0), ("j", j), ("p", p), ("s", 1)]);
                        if !item.params_valid(&pr) || !(family.matches)(&pr) {
                            continue;
                        }
                        let (Ok(a), Ok(b)) = ((ev.eval)(&pr), alt(&pr)) else { continue };
                        assert_eq!(a, b, "mappings disagree for {id} at {pr}");
                    }
                }
            }
        }
    }

    #[test]
    fn correspondence_round_trip() {
        // e^{i pi g_ii} must be q_ii and e^{2 i pi g_ij} the monodromy,
        // for every item with both templates, over a small box.
        for item in super::catalog() {
            let (Some(_), Some(_)) = (item.braiding_fn, item.gram_fn) else { continue };
            let names = item.param_names();
            let boxes: Vec<Vec<i64>> = names
                .iter()
                .map(|n| {
                    if item.order_params().contains(n) {
                        vec![-5, -3, 3, 4, 5, 7]
                    } else {
                        vec![-2, -1, 0, 1, 2, 3]
                    }
                })
                .collect();
            let mut stack = vec![Vec::<i64>::new()];
            while let Some(prefix) = stack.pop() {
                if prefix.len() == names.len() {
                    let pairs: Vec<(&str, i64)> =
                        names.iter().copied().zip(prefix.iter().copied()).collect();
                    let pr = params(&pairs);
                    if !item.params_valid(&pr) {
                        continue;
                    }
                    let Ok(b) = item.braiding(&pr) else { continue };
                    let g = item.gram(&pr).unwrap();
                    let half_aa = RationalAngle::new(g.at(0, 0) / rat(2, 1));
                    let half_bb = RationalAngle::new(g.at(1, 1) / rat(2, 1));
                    let mono = RationalAngle::new(g.at(0, 1).clone());
                    assert_eq!(&half_aa, b.at(0, 0), "item {} q11 at {pr}", item.id);
                    assert_eq!(&half_bb, b.at(1, 1), "item {} q22 at {pr}", item.id);
                    assert_eq!(mono, b.monodromy(0, 1), "item {} monodromy at {pr}", item.id);
                    continue;
                }
                for &v in &boxes[prefix.len()] {
                    let mut next = prefix.clone();
                    next.push(v);
                    stack.push(next);
                }
            }
        }
    }

    #[test]
    fn catalog_json_is_stable_and_parses() {
        let doc = catalog_json();
        let parsed: serde_json::Value = serde_json::from_str(&doc).unwrap();
        assert_eq!(parsed.as_array().unwrap().len(), 30);
        assert_eq!(doc, catalog_json());
    }
}
