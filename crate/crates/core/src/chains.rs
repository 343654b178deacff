//! Chains of conjugate pairs of positive words and the basis decision
//! procedure built on them.
//!
//! The rewriting step `(cu, cv) → (uc, vc)` moves a common first letter `c`
//! of both words to their ends; it is simultaneous conjugation by `c`. Every
//! pair lies on a unique maximal chain of such steps. A pair `(u, v)` of
//! positive words is a basis of F2 exactly when its maximal chain is finite
//! with `|u| + |v| − 2` arrows; a chain with more arrows is infinite, and
//! then `u` and `v` are powers of a common word.

use std::fmt;

use crate::autos::{AutoName, SturmianWord};
use crate::error::{Error, Result};
use crate::lattice::Quadrant;
use crate::words::{FreeWord, Gen, Letter, PositiveWord};

/// A pair of nonempty positive words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WordPair {
    u: PositiveWord,
    v: PositiveWord,
}

impl WordPair {
    pub fn new(u: FreeWord, v: FreeWord) -> Result<WordPair> {
        if u.is_empty() || v.is_empty() {
            return Err(Error::Precondition("chain pairs need nonempty words".into()));
        }
        Ok(WordPair { u: u.try_into()?, v: v.try_into()? })
    }

    pub fn parse(u: &str, v: &str) -> Result<WordPair> {
        WordPair::new(u.parse()?, v.parse()?)
    }

    pub fn u(&self) -> &FreeWord {
        self.u.as_word()
    }

    pub fn v(&self) -> &FreeWord {
        self.v.as_word()
    }

    pub fn to_words(&self) -> (FreeWord, FreeWord) {
        (self.u().clone(), self.v().clone())
    }

    /// `|u| + |v|`.
    pub fn total_len(&self) -> usize {
        self.u.len() + self.v.len()
    }

    pub fn is_palindromic(&self) -> bool {
        self.u().is_palindrome() && self.v().is_palindrome()
    }

    /// `(cu, cv) → (uc, vc)` when both words start with the same letter `c`.
    pub fn step_forward(&self) -> Option<WordPair> {
        let c = self.u().first()?;
        (self.v().first() == Some(c)).then(|| WordPair { u: rotate(&self.u, 1), v: rotate(&self.v, 1) })
    }

    /// The unique predecessor `(cu, cv)` of `(uc, vc)`.
    pub fn step_backward(&self) -> Option<WordPair> {
        let c = self.u().last()?;
        (self.v().last() == Some(c))
            .then(|| WordPair { u: rotate(&self.u, self.u.len() - 1), v: rotate(&self.v, self.v.len() - 1) })
    }
}

fn rotate(w: &PositiveWord, k: usize) -> PositiveWord {
    let gens: Vec<Gen> = w.gens().collect();
    PositiveWord::from_gens(gens[k..].iter().chain(&gens[..k]).copied())
}

impl fmt::Display for WordPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.u, self.v)
    }
}

/// The maximal chain through a pair, left end first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MaximalChain {
    Finite(Vec<WordPair>),
    Infinite,
}

impl MaximalChain {
    /// Number of arrows, `None` for an infinite chain.
    pub fn length(&self) -> Option<usize> {
        match self {
            MaximalChain::Finite(pairs) => Some(pairs.len() - 1),
            MaximalChain::Infinite => None,
        }
    }

    pub fn pairs(&self) -> Option<&[WordPair]> {
        match self {
            MaximalChain::Finite(pairs) => Some(pairs),
            MaximalChain::Infinite => None,
        }
    }
}

pub fn maximal_chain(start: &WordPair) -> MaximalChain {
    if start.u().commutes_with(start.v()) {
        return MaximalChain::Infinite;
    }
    // A finite chain has at most |u| + |v| − 2 arrows; one more means infinite.
    let cap = start.total_len() - 2;
    let mut left = start.clone();
    let mut back = 0;
    while let Some(prev) = left.step_backward() {
        back += 1;
        if back > cap {
            return MaximalChain::Infinite;
        }
        left = prev;
    }
    let mut pairs = vec![left];
    while let Some(next) = pairs.last().and_then(WordPair::step_forward) {
        if pairs.len() > cap {
            return MaximalChain::Infinite;
        }
        pairs.push(next);
    }
    MaximalChain::Finite(pairs)
}

/// Chain criterion for pairs of positive words.
pub fn is_basis_positive(pair: &WordPair) -> bool {
    maximal_chain(pair).length() == Some(pair.total_len() - 2)
}

/// Whether `(u, v)` is a basis, by the commutator criterion:
/// `uvu⁻¹v⁻¹` is conjugate to `aba⁻¹b⁻¹` or its inverse.
pub fn nielsen_dehn_oracle(u: &FreeWord, v: &FreeWord) -> bool {
    let commutator = u.multiply(v).multiply(&u.inverse()).multiply(&v.inverse());
    let ab: FreeWord = "abAB".parse().expect("literal");
    commutator.is_conjugate_to(&ab) || commutator.is_conjugate_to(&ab.inverse())
}

/// Simultaneous transformation moving a pair into the first quadrant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadrantMap {
    Identity,
    /// Both words inverted.
    Inverse,
    /// `T: a ↦ a, b ↦ b⁻¹` on both words.
    T,
    /// `w ↦ T(w⁻¹)`.
    TInverse,
}

impl QuadrantMap {
    pub fn for_quadrant(q: Quadrant) -> QuadrantMap {
        match q {
            Quadrant::First => QuadrantMap::Identity,
            Quadrant::Second => QuadrantMap::TInverse,
            Quadrant::Third => QuadrantMap::Inverse,
            Quadrant::Fourth => QuadrantMap::T,
        }
    }

    /// All four maps are involutions, so this also undoes itself.
    pub fn apply(self, w: &FreeWord) -> FreeWord {
        let t = |w: &FreeWord| w.map_letters(|l| if l.gen == Gen::B { l.inv() } else { l });
        match self {
            QuadrantMap::Identity => w.clone(),
            QuadrantMap::Inverse => w.inverse(),
            QuadrantMap::T => t(w),
            QuadrantMap::TInverse => t(&w.inverse()),
        }
    }

    fn name(self) -> &'static str {
        match self {
            QuadrantMap::Identity => "id",
            QuadrantMap::Inverse => "inv",
            QuadrantMap::T => "T",
            QuadrantMap::TInverse => "T-inv",
        }
    }
}

/// One move of the normalization performed by [`is_basis`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceStep {
    /// Both words replaced by `c⁻¹ w c`.
    Conjugate(Letter),
    /// The second word replaced by its inverse.
    InvertSecond,
    /// Both words sent through a quadrant map.
    Transform(QuadrantMap),
    /// The maximal chain of the final positive pair, `None` when infinite.
    Chain(Option<usize>),
    Reject(&'static str),
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceStep::Conjugate(c) => write!(f, "step conjugate {c}"),
            TraceStep::InvertSecond => write!(f, "step invert-second"),
            TraceStep::Transform(m) => write!(f, "step transform {}", m.name()),
            TraceStep::Chain(Some(n)) => write!(f, "step chain {n}"),
            TraceStep::Chain(None) => write!(f, "step chain infinite"),
            TraceStep::Reject(why) => write!(f, "step reject {why}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVerdict {
    pub is_basis: bool,
    pub trace: Vec<TraceStep>,
    /// The pair as it stood when the procedure stopped.
    pub reached: (FreeWord, FreeWord),
}

impl BasisVerdict {
    /// Undoes the recorded moves on [`reached`](Self::reached), which
    /// recovers the input pair.
    pub fn replay(&self) -> (FreeWord, FreeWord) {
        let (mut u, mut v) = self.reached.clone();
        for step in self.trace.iter().rev() {
            match step {
                TraceStep::Conjugate(c) => {
                    let c = FreeWord::letter(*c);
                    u = u.conjugate_by(&c);
                    v = v.conjugate_by(&c);
                }
                TraceStep::InvertSecond => v = v.inverse(),
                TraceStep::Transform(m) => {
                    u = m.apply(&u);
                    v = m.apply(&v);
                }
                TraceStep::Chain(_) | TraceStep::Reject(_) => {}
            }
        }
        (u, v)
    }
}

/// Moves a pair to the closed first quadrant: inverts the second word if
/// the images only share a quadrant that way, then applies the quadrant map.
fn normalize_quadrant(
    u: &FreeWord,
    v: &FreeWord,
    trace: &mut Vec<TraceStep>,
) -> std::result::Result<(FreeWord, FreeWord), (FreeWord, FreeWord)> {
    let (pu, mut pv) = (u.abelianize(), v.abelianize());
    let mut v = v.clone();
    if pu.is_zero() || pv.is_zero() {
        trace.push(TraceStep::Reject("zero-abelianization"));
        return Err((u.clone(), v));
    }
    let quadrant = match Quadrant::common(&[pu, pv]) {
        Some(q) => q,
        None => {
            v = v.inverse();
            pv = -pv;
            trace.push(TraceStep::InvertSecond);
            match Quadrant::common(&[pu, pv]) {
                Some(q) => q,
                None => {
                    trace.push(TraceStep::Reject("no-common-quadrant"));
                    return Err((u.clone(), v));
                }
            }
        }
    };
    let map = QuadrantMap::for_quadrant(quadrant);
    trace.push(TraceStep::Transform(map));
    Ok((map.apply(u), map.apply(&v)))
}

/// Decides whether `(u, v)` is a basis of F2: cyclically reduce the pair by
/// single-letter conjugations, move it to the first quadrant, require
/// positive words and apply the chain criterion.
pub fn is_basis(u: &FreeWord, v: &FreeWord) -> BasisVerdict {
    let mut trace = Vec::new();
    let (mut u, mut v) = (u.clone(), v.clone());
    let reject = |trace: Vec<TraceStep>, why, u: FreeWord, v: FreeWord| {
        let mut trace = trace;
        trace.push(TraceStep::Reject(why));
        BasisVerdict { is_basis: false, trace, reached: (u, v) }
    };
    if u.is_empty() || v.is_empty() {
        return reject(trace, "empty-word", u, v);
    }
    while !(u.is_cyclically_reduced() && v.is_cyclically_reduced()) {
        let total = u.len() + v.len();
        let shorter = Letter::ALL.into_iter().find_map(|c| {
            let x = FreeWord::letter(c);
            let (cu, cv) = (u.conjugate_by(&x.inverse()), v.conjugate_by(&x.inverse()));
            (cu.len() + cv.len() < total).then_some((c, cu, cv))
        });
        match shorter {
            Some((c, cu, cv)) => {
                trace.push(TraceStep::Conjugate(c));
                (u, v) = (cu, cv);
            }
            None => return reject(trace, "not-cyclically-reducible", u, v),
        }
        if u.is_empty() || v.is_empty() {
            return reject(trace, "empty-word", u, v);
        }
    }
    let (u, v) = match normalize_quadrant(&u, &v, &mut trace) {
        Ok(pair) => pair,
        Err(reached) => return BasisVerdict { is_basis: false, trace, reached },
    };
    let pair = match WordPair::new(u.clone(), v.clone()) {
        Ok(p) => p,
        Err(_) => return reject(trace, "not-positive", u, v),
    };
    let chain = maximal_chain(&pair);
    trace.push(TraceStep::Chain(chain.length()));
    let is_basis = chain.length() == Some(pair.total_len() - 2);
    BasisVerdict { is_basis, trace, reached: (u, v) }
}

/// Positive form of a cyclically reduced basis together with the way back.
struct Normalized {
    pair: WordPair,
    inverted_second: bool,
    map: QuadrantMap,
}

impl Normalized {
    fn of(u: &FreeWord, v: &FreeWord) -> Result<Normalized> {
        if !(u.is_cyclically_reduced() && v.is_cyclically_reduced()) {
            return Err(Error::NotCyclicallyReduced);
        }
        let mut trace = Vec::new();
        let (nu, nv) = normalize_quadrant(u, v, &mut trace).map_err(|_| Error::NotBasis)?;
        let pair = WordPair::new(nu, nv).map_err(|_| Error::NotBasis)?;
        if !is_basis_positive(&pair) {
            return Err(Error::NotBasis);
        }
        let inverted_second = trace.contains(&TraceStep::InvertSecond);
        let map = trace
            .iter()
            .find_map(|s| match s {
                TraceStep::Transform(m) => Some(*m),
                _ => None,
            })
            .expect("normalization records its quadrant map");
        Ok(Normalized { pair, inverted_second, map })
    }

    fn chain(&self) -> Vec<WordPair> {
        match maximal_chain(&self.pair) {
            MaximalChain::Finite(pairs) => pairs,
            MaximalChain::Infinite => unreachable!("a basis has a finite chain"),
        }
    }

    fn back(&self, p: &WordPair) -> (FreeWord, FreeWord) {
        let u = self.map.apply(p.u());
        let v = self.map.apply(p.v());
        (u, if self.inverted_second { v.inverse() } else { v })
    }
}

/// All cyclically reduced bases conjugate to the cyclically reduced basis
/// `(u, v)`; there are `|u| + |v| − 1` of them.
pub fn conjugate_bases(u: &FreeWord, v: &FreeWord) -> Result<Vec<(FreeWord, FreeWord)>> {
    let n = Normalized::of(u, v)?;
    Ok(n.chain().iter().map(|p| n.back(p)).collect())
}

/// The unique conjugate of a cyclically reduced basis with both words
/// palindromes. Both lengths must be odd.
pub fn palindromize(u: &FreeWord, v: &FreeWord) -> Result<(FreeWord, FreeWord)> {
    if !(u.is_cyclically_reduced() && v.is_cyclically_reduced()) {
        return Err(Error::NotCyclicallyReduced);
    }
    if u.len().is_multiple_of(2) || v.len().is_multiple_of(2) {
        return Err(Error::EvenLength);
    }
    let n = Normalized::of(u, v)?;
    let chain = n.chain();
    let middle = (u.len() + v.len()) / 2 - 1;
    Ok(n.back(&chain[middle]))
}

/// Whether the cyclically reduced pair `(u, v)` lies on the maximal chain
/// of the positive pair `(u', v')`, which is the same as being conjugate to
/// it.
pub fn in_same_chain(u: &FreeWord, v: &FreeWord, other: &WordPair) -> bool {
    let Ok(target) = WordPair::new(u.clone(), v.clone()) else {
        return false;
    };
    match maximal_chain(other) {
        MaximalChain::Finite(pairs) => pairs.contains(&target),
        MaximalChain::Infinite => {
            // Powers of one word: the chain is the orbit of a rotation.
            let mut p = other.clone();
            for _ in 0..other.total_len() {
                if p == target {
                    return true;
                }
                p = p.step_forward().expect("an infinite chain always continues");
            }
            false
        }
    }
}

/// Which strip rules succeeded in [`standard_pair_decompose`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Strip {
    Prefix,
    Suffix,
}

fn strip_to_ab(mut u: Vec<Gen>, mut v: Vec<Gen>, rule: Strip) -> Option<Vec<AutoName>> {
    // Factors are found rightmost first.
    let mut factors = Vec::new();
    loop {
        if u == [Gen::A] && v == [Gen::B] {
            factors.reverse();
            return Some(factors);
        }
        let (long, short, name) = match u.len().cmp(&v.len()) {
            std::cmp::Ordering::Less => (&mut v, &u, if rule == Strip::Prefix { AutoName::G } else { AutoName::Gt }),
            std::cmp::Ordering::Greater => (&mut u, &v, if rule == Strip::Prefix { AutoName::D } else { AutoName::Dt }),
            std::cmp::Ordering::Equal => return None,
        };
        let k = short.len();
        match rule {
            Strip::Prefix if long.starts_with(short) => {
                long.drain(..k);
            }
            Strip::Suffix if long.ends_with(short) => {
                let n = long.len();
                long.truncate(n - k);
            }
            _ => return None,
        }
        factors.push(name);
    }
}

/// Writes the morphism `a ↦ u, b ↦ v` of a standard pair as a product of
/// elementary Sturmian morphisms.
///
/// Strips shorter-word prefixes (recording G or D) down to `(a, b)`; if that
/// fails, tries the swapped pair `(v, u)`, which then contributes a final
/// `E`, and then the same two attempts stripping suffixes (recording G̃ or
/// D̃). The result always satisfies `eval = (a ↦ u, b ↦ v)`.
pub fn standard_pair_decompose(pair: &WordPair) -> Result<SturmianWord> {
    let u: Vec<Gen> = pair.u.gens().collect();
    let v: Vec<Gen> = pair.v.gens().collect();
    for rule in [Strip::Prefix, Strip::Suffix] {
        if let Some(names) = strip_to_ab(u.clone(), v.clone(), rule) {
            return SturmianWord::from_names(names);
        }
        if let Some(mut names) = strip_to_ab(v.clone(), u.clone(), rule) {
            names.push(AutoName::E);
            return SturmianWord::from_names(names);
        }
    }
    Err(Error::NotStandard)
}

/// Location of a positive basis on its maximal chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmianPosition {
    pub left_end: WordPair,
    /// Decomposition of the left end, see [`standard_pair_decompose`].
    pub standard: SturmianWord,
    /// Number of arrows from the left end.
    pub offset: usize,
    /// `w` with `u = w⁻¹ u₀ w` and `v = w⁻¹ v₀ w`.
    pub conjugator: FreeWord,
}

pub fn sturmian_position(pair: &WordPair) -> Result<SturmianPosition> {
    if !is_basis_positive(pair) {
        return Err(Error::NotBasis);
    }
    let mut left = pair.clone();
    let mut offset = 0;
    while let Some(prev) = left.step_backward() {
        left = prev;
        offset += 1;
    }
    let conjugator = FreeWord::reduce(left.u().letters().iter().cycle().take(offset).copied());
    let standard = standard_pair_decompose(&left)?;
    Ok(SturmianPosition { left_end: left, standard, offset, conjugator })
}
