//! Reduced words in the free group on `a`, `b` and in ranked free groups of
//! rank at most four.
//!
//! Text format: `a`, `b` are the generators, `A`, `B` their inverses and `1`
//! is the empty word. Parsing reduces.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;

/// Generator of F2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    A,
    B,
}

/// A generator or the inverse of one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: Gen,
    pub inverse: bool,
}

impl Letter {
    pub const A: Letter = Letter { gen: Gen::A, inverse: false };
    pub const B: Letter = Letter { gen: Gen::B, inverse: false };
    pub const A_INV: Letter = Letter { gen: Gen::A, inverse: true };
    pub const B_INV: Letter = Letter { gen: Gen::B, inverse: true };

    /// All four letters, in the order `a, b, A, B`.
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::A_INV, Letter::B_INV];

    pub fn inv(self) -> Letter {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn is_positive(self) -> bool {
        !self.inverse
    }

    pub fn to_char(self) -> char {
        match (self.gen, self.inverse) {
            (Gen::A, false) => 'a',
            (Gen::B, false) => 'b',
            (Gen::A, true) => 'A',
            (Gen::B, true) => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'b' => Some(Letter::B),
            'A' => Some(Letter::A_INV),
            'B' => Some(Letter::B_INV),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Stack-based free reduction shared by the F2 and ranked words.
fn free_reduce<T, I>(letters: I, inverse: impl Fn(T) -> T) -> Vec<T>
where
    T: Copy + PartialEq,
    I: IntoIterator<Item = T>,
{
    let mut out: Vec<T> = Vec::new();
    for x in letters {
        match out.last() {
            Some(&y) if y == inverse(x) => {
                out.pop();
            }
            _ => out.push(x),
        }
    }
    out
}

/// A reduced element of F2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> FreeWord {
        FreeWord { letters: Vec::new() }
    }

    pub fn a() -> FreeWord {
        FreeWord { letters: vec![Letter::A] }
    }

    pub fn b() -> FreeWord {
        FreeWord { letters: vec![Letter::B] }
    }

    pub fn letter(l: Letter) -> FreeWord {
        FreeWord { letters: vec![l] }
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce<I: IntoIterator<Item = Letter>>(raw: I) -> FreeWord {
        FreeWord { letters: free_reduce(raw, Letter::inv) }
    }

    /// Builds a word from letters the caller knows to be reduced already.
    pub(crate) fn from_reduced(letters: Vec<Letter>) -> FreeWord {
        debug_assert!(letters.windows(2).all(|w| w[0] != w[1].inv()));
        FreeWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// True iff the word lies in the monoid `{a, b}*`.
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    pub fn multiply(&self, other: &FreeWord) -> FreeWord {
        // Only the junction can cancel.
        let mut k = 0;
        let (l, r) = (&self.letters, &other.letters);
        while k < l.len() && k < r.len() && l[l.len() - 1 - k] == r[k].inv() {
            k += 1;
        }
        let mut letters = Vec::with_capacity(l.len() + r.len() - 2 * k);
        letters.extend_from_slice(&l[..l.len() - k]);
        letters.extend_from_slice(&r[k..]);
        FreeWord { letters }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(|l| l.inv()).collect() }
    }

    /// Image under the anti-automorphism fixing `a` and `b`.
    pub fn reverse(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().copied().collect() }
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.letters.len();
        (0..n / 2).all(|i| self.letters[i] == self.letters[n - 1 - i])
    }

    pub fn pow(&self, exponent: i64) -> FreeWord {
        let base = if exponent < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::identity();
        for _ in 0..exponent.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(f), Some(l)) => f != l.inv(),
            _ => true,
        }
    }

    /// Splits the word as `conjugator · core · conjugator⁻¹` with a cyclically
    /// reduced core and the longest possible conjugator.
    pub fn cyclic_reduce(&self) -> (FreeWord, FreeWord) {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k] == self.letters[n - 1 - k].inv() {
            k += 1;
        }
        let core = FreeWord::from_reduced(self.letters[k..n - k].to_vec());
        let conjugator = FreeWord::from_reduced(self.letters[..k].to_vec());
        (core, conjugator)
    }

    /// `x · self · x⁻¹`.
    pub fn conjugate_by(&self, x: &FreeWord) -> FreeWord {
        x.multiply(self).multiply(&x.inverse())
    }

    /// True iff `other` equals `self` read from some starting position.
    pub fn is_rotation_of(&self, other: &FreeWord) -> bool {
        let n = self.len();
        if n != other.len() {
            return false;
        }
        if n == 0 {
            return true;
        }
        (0..n).any(|s| (0..n).all(|i| self.letters[(s + i) % n] == other.letters[i]))
    }

    /// Conjugacy in F2: equal cyclically reduced cores up to rotation.
    pub fn is_conjugate_to(&self, other: &FreeWord) -> bool {
        let (c1, _) = self.cyclic_reduce();
        let (c2, _) = other.cyclic_reduce();
        c1.is_rotation_of(&c2)
    }

    /// Signed letter counts.
    pub fn abelianize(&self) -> LatticeVector {
        let mut v = LatticeVector::new(0, 0);
        for l in &self.letters {
            let s = if l.inverse { -1 } else { 1 };
            match l.gen {
                Gen::A => v.p += s,
                Gen::B => v.q += s,
            }
        }
        v
    }

    pub fn commutes_with(&self, other: &FreeWord) -> bool {
        self.multiply(other) == other.multiply(self)
    }

    /// Applies `f` to every letter and reduces.
    pub fn map_letters(&self, f: impl Fn(Letter) -> Letter) -> FreeWord {
        FreeWord::reduce(self.letters.iter().map(|&l| f(l)))
    }
}

impl Mul for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        self.multiply(rhs)
    }
}

impl Mul for FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: FreeWord) -> FreeWord {
        self.multiply(&rhs)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for FreeWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<FreeWord> {
        if s == "1" {
            return Ok(FreeWord::identity());
        }
        if s.is_empty() {
            return Err(Error::Parse("empty word; write 1 for the identity".into()));
        }
        let letters = s
            .chars()
            .map(|c| Letter::from_char(c).ok_or_else(|| Error::Parse(format!("invalid letter {c:?} in word {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(FreeWord::reduce(letters))
    }
}

/// A word of the monoid `{a, b}*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveWord(FreeWord);

impl PositiveWord {
    pub fn as_word(&self) -> &FreeWord {
        &self.0
    }

    pub fn into_word(self) -> FreeWord {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn gens(&self) -> impl Iterator<Item = Gen> + '_ {
        self.0.letters.iter().map(|l| l.gen)
    }

    pub fn from_gens<I: IntoIterator<Item = Gen>>(gens: I) -> PositiveWord {
        PositiveWord(FreeWord { letters: gens.into_iter().map(|gen| Letter { gen, inverse: false }).collect() })
    }
}

impl TryFrom<FreeWord> for PositiveWord {
    type Error = Error;

    fn try_from(w: FreeWord) -> Result<PositiveWord> {
        if w.is_positive() {
            Ok(PositiveWord(w))
        } else {
            Err(Error::Precondition(format!("{w} is not a positive word")))
        }
    }
}

impl fmt::Display for PositiveWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A reduced word in the free group of rank 2..=4 on `x1, ..., x_rank`.
/// Letters are stored as signed generator indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankedWord {
    rank: u8,
    letters: Vec<i8>,
}

impl RankedWord {
    pub fn identity(rank: u8) -> Result<RankedWord> {
        check_rank(rank)?;
        Ok(RankedWord { rank, letters: Vec::new() })
    }

    pub fn generator(rank: u8, index: u8) -> Result<RankedWord> {
        RankedWord::new(rank, [index as i8])
    }

    /// Validates the letters and reduces.
    pub fn new<I: IntoIterator<Item = i8>>(rank: u8, letters: I) -> Result<RankedWord> {
        check_rank(rank)?;
        let raw: Vec<i8> = letters.into_iter().collect();
        if let Some(&bad) = raw.iter().find(|&&x| x == 0 || x.unsigned_abs() > rank) {
            return Err(Error::Precondition(format!("letter x{bad} out of range for rank {rank}")));
        }
        Ok(RankedWord { rank, letters: free_reduce(raw, |x: i8| -x) })
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn letters(&self) -> &[i8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &RankedWord) -> Result<RankedWord> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(self.concat_unchecked(other))
    }

    pub(crate) fn concat_unchecked(&self, other: &RankedWord) -> RankedWord {
        RankedWord {
            rank: self.rank,
            letters: free_reduce(self.letters.iter().chain(&other.letters).copied(), |x: i8| -x),
        }
    }

    pub fn inverse(&self) -> RankedWord {
        RankedWord { rank: self.rank, letters: self.letters.iter().rev().map(|x| -x).collect() }
    }
}

fn check_rank(rank: u8) -> Result<()> {
    if (2..=4).contains(&rank) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("rank {rank} outside 2..=4")))
    }
}

impl fmt::Display for RankedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.letters.iter().map(|&x| if x > 0 { format!("x{x}") } else { format!("x{}^-1", -x) }).collect();
        write!(f, "{}", parts.join(" "))
    }
}
