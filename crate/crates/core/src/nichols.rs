//! Graded dimensions of diagonal Nichols algebras at desk scale.
//!
//! The degree-n component of the Nichols algebra of a braided vector
//! space is the image of the braided symmetrizer `S_n = sum_{s in S_n}
//! T_s`, where `T_s` is the braid-monoid lift of the permutation along any
//! reduced word (well defined by the braid relations). Since the braiding
//! is diagonal, `S_n` preserves multidegree, and its rank on each
//! multidegree block is the graded dimension there.
//!
//! Two independent routes to the same numbers are implemented: the
//! symmetrizer rank, and the rank of the matrix of iterated quantum
//! shuffle products of the letters. The two conventions were fixed
//! independently, so their agreement (checked wholesale by the acceptance
//! suite) validates both.

use std::collections::HashMap;

use thiserror::Error;

use crate::braiding::BraidingMatrix;
use crate::catalog::BracketWord;
use crate::exact::{Cyclotomic, ExactMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NicholsError {
    #[error("total degree {requested} exceeds the degree cap {cap}")]
    DegreeCapExceeded { requested: usize, cap: usize },
    #[error("multidegree component has {size} words, above the cap {cap}")]
    WordCapExceeded { size: usize, cap: usize },
}

/// Word in the letters `0..theta`.
pub type Word = Vec<u8>;

/// Homogeneous element of the tensor algebra: a finite word-to-coefficient
/// map with cyclotomic coefficients (zero coefficients pruned).
#[derive(Debug, Clone, PartialEq)]
pub struct TensorElement {
    conductor: u64,
    terms: HashMap<Word, Cyclotomic>,
}

impl TensorElement {
    pub fn zero(conductor: u64) -> Self {
        TensorElement { conductor, terms: HashMap::new() }
    }

    pub fn from_word(conductor: u64, w: Word) -> Self {
        let mut terms = HashMap::new();
        terms.insert(w, Cyclotomic::one(conductor));
        TensorElement { conductor, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, w: Word, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    e.insert(sum);
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.conductor, other.conductor);
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return TensorElement::zero(self.conductor);
        }
        let mut out = TensorElement::zero(self.conductor);
        for (w, v) in &self.terms {
            out.insert(w.clone(), v.mul(c));
        }
        out
    }

    /// Concatenation product of the tensor algebra.
    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.conductor, other.conductor);
        let mut out = TensorElement::zero(self.conductor);
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.insert(w, cu.mul(cv));
            }
        }
        out
    }

    /// Multidegrees present, each with the words carrying it.
    fn split_by_multidegree(&self, theta: usize) -> HashMap<Vec<usize>, Vec<(&Word, &Cyclotomic)>> {
        let mut out: HashMap<Vec<usize>, Vec<(&Word, &Cyclotomic)>> = HashMap::new();
        for (w, c) in &self.terms {
            out.entry(multidegree(w, theta)).or_default().push((w, c));
        }
        out
    }
}

pub fn multidegree(w: &Word, theta: usize) -> Vec<usize> {
    let mut d = vec![0; theta];
    for &l in w {
        d[l as usize] += 1;
    }
    d
}

pub const DEFAULT_DEGREE_CAP: usize = 12;
pub const DEFAULT_WORD_CAP: usize = 4000;

/// Braided vector space with diagonal braiding, carrying the cyclotomic
/// field all symmetrizer entries live in and the computation caps.
pub struct BraidedSpace {
    braiding: BraidingMatrix,
    conductor: u64,
    q: Vec<Vec<Cyclotomic>>,
    pub degree_cap: usize,
    pub word_cap: usize,
}

/// Outcome of the dimension computation under a degree cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NicholsDimension {
    Finite { total: u64, series: Vec<u64> },
    /// No zero graded piece found below the cap.
    Unbounded { cap: usize, partial: Vec<u64> },
}

impl BraidedSpace {
    pub fn new(braiding: BraidingMatrix) -> Self {
        let conductor = braiding.conductor();
        let theta = braiding.theta();
        let q = (0..theta)
            .map(|i| {
                (0..theta)
                    .map(|j| {
                        Cyclotomic::from_angle(conductor, braiding.at(i, j))
                            .expect("entry order divides the conductor")
                    })
                    .collect()
            })
            .collect();
        BraidedSpace {
            braiding,
            conductor,
            q,
            degree_cap: DEFAULT_DEGREE_CAP,
            word_cap: DEFAULT_WORD_CAP,
        }
    }

    pub fn with_caps(braiding: BraidingMatrix, degree_cap: usize, word_cap: usize) -> Self {
        let mut s = Self::new(braiding);
        s.degree_cap = degree_cap;
        s.word_cap = word_cap;
        s
    }

    pub fn theta(&self) -> usize {
        self.braiding.theta()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn braiding(&self) -> &BraidingMatrix {
        &self.braiding
    }

    fn q_at(&self, a: u8, b: u8) -> &Cyclotomic {
        &self.q[a as usize][b as usize]
    }

    fn check_caps(&self, d: &[usize]) -> Result<(), NicholsError> {
        let total: usize = d.iter().sum();
        if total > self.degree_cap {
            return Err(NicholsError::DegreeCapExceeded { requested: total, cap: self.degree_cap });
        }
        let size = block_size(d);
        if size > self.word_cap {
            return Err(NicholsError::WordCapExceeded { size, cap: self.word_cap });
        }
        Ok(())
    }

    /// dim of the Nichols algebra in one multidegree, as the rank of the
    /// braided symmetrizer restricted to that block.
    pub fn symmetrizer_rank(&self, d: &[usize]) -> Result<usize, NicholsError> {
        self.check_caps(d)?;
        let mut engine = Symmetrizer::new(self);
        let block = engine.block(d);
        if block.words.is_empty() {
            return Ok(0);
        }
        let rows: Vec<Vec<Cyclotomic>> = block.cols.clone();
        Ok(ExactMatrix::from_rows(rows).rank())
    }

    /// Same dimension via the independent quantum-shuffle route: the rank
    /// of the matrix of iterated shuffle products of the letters of every
    /// word of the multidegree.
    pub fn shuffle_rank(&self, d: &[usize]) -> Result<usize, NicholsError> {
        self.check_caps(d)?;
        let words = words_of_multidegree(d);
        if words.is_empty() {
            return Ok(0);
        }
        let index: HashMap<Word, usize> =
            words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let mut rows = Vec::with_capacity(words.len());
        for w in &words {
            // empty product = the unit of the shuffle algebra
            let mut acc = TensorElement::from_word(self.conductor, w[..w.len().min(1)].to_vec());
            for &letter in w.iter().skip(1) {
                acc = self.shuffle_with_letter(&acc, letter);
            }
            let mut row = vec![Cyclotomic::zero(self.conductor); words.len()];
            for (word, c) in acc.terms() {
                row[index[word]] = c.clone();
            }
            rows.push(row);
        }
        Ok(ExactMatrix::from_rows(rows).rank())
    }

    /// Shuffle product `acc * x_b`: insert `b` at every position; when `b`
    /// passes an earlier letter `a` it contributes a factor `q_{b,a}`.
    fn shuffle_with_letter(&self, acc: &TensorElement, b: u8) -> TensorElement {
        let mut out = TensorElement::zero(self.conductor);
        for (w, c) in acc.terms() {
            // walking insertion point right to left, accumulating the
            // product over passed letters
            let mut passed = Cyclotomic::one(self.conductor);
            for pos in (0..=w.len()).rev() {
                let mut t = Vec::with_capacity(w.len() + 1);
                t.extend_from_slice(&w[..pos]);
                t.push(b);
                t.extend_from_slice(&w[pos..]);
                out.insert(t, c.mul(&passed));
                if pos > 0 {
                    passed = passed.mul(self.q_at(b, w[pos - 1]));
                }
            }
        }
        out
    }

    /// Graded dimensions per total degree, `dims[0] = 1`.
    pub fn hilbert_series(&self, cap: usize) -> Result<Vec<u64>, NicholsError> {
        let mut dims = vec![1u64];
        for n in 1..=cap {
            dims.push(self.degree_dimension(n)?);
        }
        Ok(dims)
    }

    fn degree_dimension(&self, n: usize) -> Result<u64, NicholsError> {
        let mut total = 0u64;
        for d in multidegrees_of_total(self.theta(), n) {
            total += self.symmetrizer_rank(&d)? as u64;
        }
        Ok(total)
    }

    /// Total dimension, declared finite as soon as one graded piece
    /// vanishes: the algebra is generated in degree one, so a zero piece
    /// kills everything above it.
    pub fn nichols_dimension(&self, cap: usize) -> Result<NicholsDimension, NicholsError> {
        let mut series = vec![1u64];
        for n in 1..=cap {
            let dim_n = self.degree_dimension(n)?;
            if dim_n == 0 {
                series.push(0);
                let total = series.iter().sum();
                return Ok(NicholsDimension::Finite { total, series });
            }
            series.push(dim_n);
        }
        Ok(NicholsDimension::Unbounded { cap, partial: series })
    }

    /// Evaluates an iterated q-commutator: `[x, y] = xy - q(x,y) yx` with
    /// `q(x,y) = prod q_{i,j}^{deg_i(x) deg_j(y)}`.
    pub fn q_commutator(&self, spec: &BracketWord) -> TensorElement {
        match spec {
            BracketWord::Letter(l) => TensorElement::from_word(self.conductor, vec![*l]),
            BracketWord::Bracket(x, y) => {
                let ex = self.q_commutator(x);
                let ey = self.q_commutator(y);
                let dx = multidegree(&x.word(), self.theta());
                let dy = multidegree(&y.word(), self.theta());
                let mut q = Cyclotomic::one(self.conductor);
                for (i, &di) in dx.iter().enumerate() {
                    for (j, &dj) in dy.iter().enumerate() {
                        let e = (di * dj) as i64;
                        if e > 0 {
                            let angle = self.braiding.at(i, j).pow(e);
                            q = q.mul(
                                &Cyclotomic::from_angle(self.conductor, &angle)
                                    .expect("orders divide the conductor"),
                            );
                        }
                    }
                }
                ex.concat(&ey).add(&ey.concat(&ex).scale(&q.neg()))
            }
        }
    }

    /// `e^power` in the tensor algebra.
    pub fn element_power(&self, e: &TensorElement, power: u32) -> TensorElement {
        assert!(power >= 1);
        let mut acc = e.clone();
        for _ in 1..power {
            acc = acc.concat(e);
        }
        acc
    }

    /// Evaluates an ideal generator `word^power`.
    pub fn generator_element(&self, word: &BracketWord, power: u32) -> TensorElement {
        self.element_power(&self.q_commutator(word), power)
    }

    /// True iff the element lies in the kernel of the symmetrizer on each
    /// of its multidegree components, i.e. vanishes in the Nichols
    /// quotient.
    pub fn vanishes_in_nichols(&self, e: &TensorElement) -> Result<bool, NicholsError> {
        assert_eq!(e.conductor, self.conductor, "element from another braiding");
        for (d, terms) in e.split_by_multidegree(self.theta()) {
            self.check_caps(&d)?;
            let mut engine = Symmetrizer::new(self);
            let block = engine.block(&d);
            let mut image = vec![Cyclotomic::zero(self.conductor); block.words.len()];
            for (w, c) in terms {
                let j = block.index[w];
                for (i, entry) in block.cols[j].iter().enumerate() {
                    if !entry.is_zero() {
                        image[i] = image[i].add(&entry.mul(c));
                    }
                }
            }
            if image.iter().any(|x| !x.is_zero()) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn block_size(d: &[usize]) -> usize {
    // multinomial coefficient (sum d)! / prod d_i!
    let total: usize = d.iter().sum();
    let mut size = 1usize;
    let mut rem = total;
    for &di in d {
        size *= binomial(rem, di);
        rem -= di;
    }
    size
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    (num / den) as usize
}

pub fn words_of_multidegree(d: &[usize]) -> Vec<Word> {
    let total: usize = d.iter().sum();
    let mut out = Vec::new();
    let mut remaining = d.to_vec();
    let mut current = Vec::with_capacity(total);
    fill(&mut remaining, &mut current, total, &mut out);
    return out;

    fn fill(remaining: &mut [usize], current: &mut Word, total: usize, out: &mut Vec<Word>) {
        if current.len() == total {
            out.push(current.clone());
            return;
        }
        for l in 0..remaining.len() {
            if remaining[l] > 0 {
                remaining[l] -= 1;
                current.push(l as u8);
                fill(remaining, current, total, out);
                current.pop();
                remaining[l] += 1;
            }
        }
    }
}

fn multidegrees_of_total(theta: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![0usize; theta];
    fill(theta, n, 0, &mut current, &mut out);
    return out;

    fn fill(theta: usize, left: usize, pos: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == theta - 1 {
            current[pos] = left;
            out.push(current.clone());
            return;
        }
        for v in 0..=left {
            current[pos] = v;
            fill(theta, left - v, pos + 1, current, out);
        }
    }
}

/// Per-block symmetrizer matrices, built by the coset recursion
/// `S_n = (S_{n-1} ox id) . (1 + Psi_{n-1} + Psi_{n-1} Psi_{n-2} + ...)`,
/// which is valid because minimal coset representatives have additive
/// lengths and the braid lift respects reduced products.
struct Symmetrizer<'a> {
    space: &'a BraidedSpace,
    blocks: HashMap<Vec<usize>, Block>,
}

struct Block {
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    /// cols[j] = S_n applied to words[j], as a dense coefficient vector.
    cols: Vec<Vec<Cyclotomic>>,
}

impl<'a> Symmetrizer<'a> {
    fn new(space: &'a BraidedSpace) -> Self {
        Symmetrizer { space, blocks: HashMap::new() }
    }

    fn block(&mut self, d: &[usize]) -> &Block {
        if !self.blocks.contains_key(d) {
            let block = self.compute_block(d);
            self.blocks.insert(d.to_vec(), block);
        }
        &self.blocks[d]
    }

    fn compute_block(&mut self, d: &[usize]) -> Block {
        let conductor = self.space.conductor;
        let words = words_of_multidegree(d);
        let index: HashMap<Word, usize> =
            words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let n: usize = d.iter().sum();
        if n <= 1 {
            let cols = (0..words.len())
                .map(|j| {
                    let mut col = vec![Cyclotomic::zero(conductor); words.len()];
                    col[j] = Cyclotomic::one(conductor);
                    col
                })
                .collect();
            return Block { words, index, cols };
        }
        // make sure all prefix blocks exist before borrowing self.blocks
        for (l, &dl) in d.iter().enumerate() {
            if dl > 0 {
                let mut sub = d.to_vec();
                sub[l] -= 1;
                self.block(&sub);
            }
        }
        let mut cols = Vec::with_capacity(words.len());
        for w in &words {
            let mut col = vec![Cyclotomic::zero(conductor); words.len()];
            // R_n(w): apply Psi_k, Psi_{k+1}, ..., Psi_{n-1} in turn
            // (k = n gives the identity term).
            let mut staged: Vec<(Cyclotomic, Word)> = Vec::with_capacity(n);
            staged.push((Cyclotomic::one(conductor), w.clone()));
            for k in (1..n).rev() {
                // extend the previous chain by one more transposition:
                // T_{gamma_k} = Psi_{n-1} ... Psi_k applied to w equals
                // Psi_{n-1} ... Psi_{k+1} applied to (Psi_k w); build
                // incrementally from the right.
                let (c_prev, w_prev) = {
                    let mut word = w.clone();
                    let mut coeff = Cyclotomic::one(conductor);
                    for i in k..n {
                        let (a, b) = (word[i - 1], word[i]);
                        coeff = coeff.mul(self.space.q_at(a, b));
                        word.swap(i - 1, i);
                    }
                    (coeff, word)
                };
                staged.push((c_prev, w_prev));
            }
            for (coeff, word) in staged {
                let last = *word.last().unwrap();
                let prefix = &word[..n - 1];
                let mut sub = d.to_vec();
                sub[last as usize] -= 1;
                let sub_block = &self.blocks[&sub];
                let j_pref = sub_block.index[prefix];
                for (i_pref, c) in sub_block.cols[j_pref].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut target = sub_block.words[i_pref].clone();
                    target.push(last);
                    let i = index[&target];
                    col[i] = col[i].add(&coeff.mul(c));
                }
            }
            cols.push(col);
        }
        Block { words, index, cols }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{self, Params};
    use crate::exact::RationalAngle;

    fn space_for(id: &str, pairs: &[(&str, i64)]) -> BraidedSpace {
        let item = catalog::get_item(id).unwrap();
        BraidedSpace::new(item.braiding(&Params::from_pairs(pairs)).unwrap())
    }

    fn one_letter_space(t: RationalAngle) -> BraidedSpace {
        BraidedSpace::new(
            crate::braiding::BraidingMatrix::new(vec![vec![t]]).unwrap(),
        )
    }

    #[test]
    fn fermionic_square_dies() {
        let s = one_letter_space(RationalAngle::half());
        assert_eq!(s.symmetrizer_rank(&[2]).unwrap(), 0);
        assert_eq!(s.shuffle_rank(&[2]).unwrap(), 0);
    }

    #[test]
    fn cube_root_boson_has_dimension_three() {
        let s = one_letter_space(RationalAngle::from_ratio(1, 3));
        assert_eq!(s.symmetrizer_rank(&[2]).unwrap(), 1);
        assert_eq!(s.symmetrizer_rank(&[3]).unwrap(), 0);
        assert_eq!(
            s.nichols_dimension(6).unwrap(),
            NicholsDimension::Finite { total: 3, series: vec![1, 1, 1, 0] }
        );
    }

    #[test]
    fn item_2_1_p2_mixed_block() {
        // 2x2 symmetrizer on the words {12, 21}: the hand oracle gives
        // det = 1 - q12 q21 = 1 - (-1) = 2, so the block has rank 2 and
        // the (1,1) component of the algebra is two-dimensional.
        let s = space_for("2.1", &[("m", 0), ("n", 0), ("j", 0), ("p", 2)]);
        assert_eq!(s.symmetrizer_rank(&[1, 1]).unwrap(), 2);
        assert_eq!(s.shuffle_rank(&[1, 1]).unwrap(), 2);
    }

    #[test]
    fn degree_cap_is_enforced() {
        let s = BraidedSpace::with_caps(
            crate::braiding::BraidingMatrix::new(vec![vec![RationalAngle::half()]]).unwrap(),
            4,
            4000,
        );
        assert!(matches!(
            s.symmetrizer_rank(&[5]),
            Err(NicholsError::DegreeCapExceeded { requested: 5, cap: 4 })
        ));
    }

    #[test]
    fn item_2_1_dimensions() {
        let s = space_for("2.1", &[("m", 0), ("n", 0), ("j", 0), ("p", 2)]);
        match s.nichols_dimension(8).unwrap() {
            NicholsDimension::Finite { total, series } => {
                assert_eq!(total, 8);
                assert_eq!(series, vec![1, 2, 2, 2, 1, 0]);
            }
            other => panic!("expected finite, got {other:?}"),
        }

        let s = space_for("2.1", &[("m", 0), ("n", 0), ("j", 0), ("p", 3)]);
        match s.nichols_dimension(10).unwrap() {
            NicholsDimension::Finite { total, .. } => assert_eq!(total, 27),
            other => panic!("expected finite, got {other:?}"),
        }
    }

    #[test]
    fn item_2_2_dimension_and_cross_oracle() {
        let s = space_for("2.2", &[("m", 0), ("n", 0), ("j", 0), ("p", 3)]);
        match s.nichols_dimension(8).unwrap() {
            NicholsDimension::Finite { total, .. } => assert_eq!(total, 12),
            other => panic!("expected finite, got {other:?}"),
        }
        for total in 0..=6usize {
            for a in 0..=total {
                let d = vec![a, total - a];
                assert_eq!(
                    s.symmetrizer_rank(&d).unwrap(),
                    s.shuffle_rank(&d).unwrap(),
                    "oracle mismatch at {d:?}"
                );
            }
        }
    }

    #[test]
    fn q_commutator_golden_expansion() {
        // [F1,[F1,F2]] for item 2.1 at p = 3 collapses to integer
        // coefficients: 112 - 121 + 211.
        let s = space_for("2.1", &[("m", 0), ("n", 0), ("j", 0), ("p", 3)]);
        let e = s.q_commutator(&BracketWord::left_nested(&[0, 0, 1]));
        let one = Cyclotomic::one(s.conductor());
        let expect: Vec<(Word, Cyclotomic)> = vec![
            (vec![0, 0, 1], one.clone()),
            (vec![0, 1, 0], one.neg()),
            (vec![1, 0, 0], one.clone()),
        ];
        assert_eq!(e.num_terms(), 3);
        for (w, c) in expect {
            let found = e.terms().find(|(word, _)| **word == w).expect("term present");
            assert_eq!(found.1, &c, "coefficient of {w:?}");
        }
    }

    #[test]
    fn presentation_generators_vanish_for_2_1_p3() {
        let s = space_for("2.1", &[("m", 0), ("n", 0), ("j", 0), ("p", 3)]);
        let gens = catalog::presentation_generators(
            "2.1",
            &Params::from_pairs(&[("m", 0), ("n", 0), ("j", 0), ("p", 3)]),
        )
        .unwrap();
        for g in gens {
            let e = s.generator_element(&g.word, g.power);
            assert!(
                s.vanishes_in_nichols(&e).unwrap(),
                "generator {g} should vanish"
            );
        }
        // PBW data does not vanish
        for nonzero in [
            TensorElement::from_word(s.conductor(), vec![0]),
            s.q_commutator(&BracketWord::left_nested(&[0, 1])),
            s.element_power(&s.q_commutator(&BracketWord::left_nested(&[0, 1])), 2),
        ] {
            assert!(!s.vanishes_in_nichols(&nonzero).unwrap());
        }
    }

    #[test]
    fn negative_control_2_4_1() {
        // [F1,F1,F2] is a PBW generator for item 2.4.1 at p = 5, not a
        // relation.
        let s = space_for("2.4.1", &[("m", 0), ("n", 0), ("j", 0), ("p", 5)]);
        let e = s.q_commutator(&BracketWord::left_nested(&[0, 0, 1]));
        assert!(!s.vanishes_in_nichols(&e).unwrap());
        // ... while [F1,F2,F2] (Lyndon nesting) is a relation there.
        let rel = s.q_commutator(&catalog::presentation_generators(
            "2.4.1",
            &Params::from_pairs(&[("m", 0), ("n", 0), ("j", 0), ("p", 5)]),
        )
        .unwrap()[1]
            .word
            .clone());
        assert!(s.vanishes_in_nichols(&rel).unwrap());
    }

    #[test]
    fn single_word_block_rank() {
        let s = space_for("2.2", &[("m", 0), ("n", 0), ("j", 0), ("p", 4)]);
        // block with a single word: rank 1 iff the q-factorial factor is
        // nonzero: F2^k for k < p survives, F2^p dies... p = 4: [4]! = 0
        assert_eq!(s.symmetrizer_rank(&[0, 3]).unwrap(), 1);
        assert_eq!(s.symmetrizer_rank(&[0, 4]).unwrap(), 0);
        assert_eq!(s.shuffle_rank(&[0, 3]).unwrap(), 1);
        assert_eq!(s.shuffle_rank(&[0, 4]).unwrap(), 0);
    }
}
