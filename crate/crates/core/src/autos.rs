//! Endomorphisms of F2 given by the images of `a` and `b`.
//!
//! Composition follows function notation: `phi.compose(&psi)` is the map
//! `w ↦ phi(psi(w))`, so a product of named generators `X Y Z` is evaluated
//! as `X ∘ Y ∘ Z`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lattice::IntMatrix2;
use crate::words::{FreeWord, Gen, Letter};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct F2Morphism {
    image_a: FreeWord,
    image_b: FreeWord,
}

impl F2Morphism {
    pub fn new(image_a: FreeWord, image_b: FreeWord) -> F2Morphism {
        F2Morphism { image_a, image_b }
    }

    pub fn identity() -> F2Morphism {
        F2Morphism::new(FreeWord::a(), FreeWord::b())
    }

    pub fn image_a(&self) -> &FreeWord {
        &self.image_a
    }

    pub fn image_b(&self) -> &FreeWord {
        &self.image_b
    }

    pub fn image_of(&self, l: Letter) -> FreeWord {
        let img = match l.gen {
            Gen::A => &self.image_a,
            Gen::B => &self.image_b,
        };
        if l.inverse {
            img.inverse()
        } else {
            img.clone()
        }
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        FreeWord::reduce(w.letters().iter().flat_map(|&l| self.image_of(l).letters().to_vec()))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &F2Morphism) -> F2Morphism {
        F2Morphism::new(self.apply(&other.image_a), self.apply(&other.image_b))
    }

    pub fn is_identity(&self) -> bool {
        *self == F2Morphism::identity()
    }

    /// Both images lie in `{a, b}*`.
    pub fn is_positive(&self) -> bool {
        self.image_a.is_positive() && self.image_b.is_positive()
    }

    /// Columns are the abelianized images of `a` and `b`.
    pub fn abelianize(&self) -> IntMatrix2 {
        IntMatrix2::from_columns(self.image_a.abelianize(), self.image_b.abelianize())
    }

    /// The inner automorphism `u ↦ w u w⁻¹`.
    pub fn inner(w: &FreeWord) -> F2Morphism {
        F2Morphism::new(FreeWord::a().conjugate_by(w), FreeWord::b().conjugate_by(w))
    }

    /// Returns the unique `w` with `self = inner(w)`, if there is one.
    pub fn inner_witness(&self) -> Option<FreeWord> {
        // phi(a) = r a r⁻¹ forces w = r a^k; k is read off r⁻¹ phi(b) r = a^k b a^-k.
        let (core, r) = self.image_a.cyclic_reduce();
        if core != FreeWord::a() {
            return None;
        }
        let t = self.image_b.conjugate_by(&r.inverse());
        let letters = t.letters();
        if letters.len().is_multiple_of(2) {
            return None;
        }
        let k = letters.len() / 2;
        let power = match letters.first() {
            _ if k == 0 => 0,
            Some(&l) if l == Letter::A => k as i64,
            Some(&l) if l == Letter::A_INV => -(k as i64),
            _ => return None,
        };
        let w = r.multiply(&FreeWord::a().pow(power));
        (F2Morphism::inner(&w) == *self).then_some(w)
    }
}

impl fmt::Display for F2Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a -> {}, b -> {}", self.image_a, self.image_b)
    }
}

/// The named automorphisms. `Dt` and `Gt` are D̃ and G̃.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AutoName {
    D,
    Dt,
    G,
    Gt,
    E,
    O,
    T,
}

impl AutoName {
    pub const ALL: [AutoName; 7] =
        [AutoName::D, AutoName::Dt, AutoName::G, AutoName::Gt, AutoName::E, AutoName::O, AutoName::T];

    pub fn token(self) -> &'static str {
        match self {
            AutoName::D => "D",
            AutoName::Dt => "Dt",
            AutoName::G => "G",
            AutoName::Gt => "Gt",
            AutoName::E => "E",
            AutoName::O => "O",
            AutoName::T => "T",
        }
    }

    /// Member of the alphabet `{G, Gt, D, Dt, E}` of Sturmian words.
    pub fn is_sturmian(self) -> bool {
        !matches!(self, AutoName::O | AutoName::T)
    }

    pub fn morphism(self) -> F2Morphism {
        let (x, y) = match self {
            AutoName::D => ("ba", "b"),
            AutoName::Dt => ("ab", "b"),
            AutoName::G => ("a", "ab"),
            AutoName::Gt => ("a", "ba"),
            AutoName::E => ("b", "a"),
            AutoName::O => ("A", "b"),
            AutoName::T => ("a", "B"),
        };
        F2Morphism::new(word(x), word(y))
    }

    pub fn inverse_morphism(self) -> F2Morphism {
        let (x, y) = match self {
            AutoName::D => ("Ba", "b"),
            AutoName::Dt => ("aB", "b"),
            AutoName::G => ("a", "Ab"),
            AutoName::Gt => ("a", "bA"),
            AutoName::E => ("b", "a"),
            AutoName::O => ("A", "b"),
            AutoName::T => ("a", "B"),
        };
        F2Morphism::new(word(x), word(y))
    }
}

fn word(s: &str) -> FreeWord {
    s.parse().expect("static word literal")
}

impl fmt::Display for AutoName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for AutoName {
    type Err = Error;

    fn from_str(s: &str) -> Result<AutoName> {
        AutoName::ALL.into_iter().find(|n| n.token() == s).ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

pub fn named_generator(name: &str) -> Result<F2Morphism> {
    Ok(name.parse::<AutoName>()?.morphism())
}

pub fn named_generator_inverse(name: &str) -> Result<F2Morphism> {
    Ok(name.parse::<AutoName>()?.inverse_morphism())
}

/// A named generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NamedLetter {
    pub name: AutoName,
    pub inverse: bool,
}

impl NamedLetter {
    pub fn morphism(self) -> F2Morphism {
        if self.inverse {
            self.name.inverse_morphism()
        } else {
            self.name.morphism()
        }
    }

    pub fn inv(self) -> NamedLetter {
        NamedLetter { name: self.name, inverse: !self.inverse }
    }
}

impl fmt::Display for NamedLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.name, if self.inverse { "'" } else { "" })
    }
}

impl FromStr for NamedLetter {
    type Err = Error;

    fn from_str(tok: &str) -> Result<NamedLetter> {
        let (name, inverse) = match tok.strip_suffix('\'') {
            Some(stem) => (stem, true),
            None => (tok, false),
        };
        Ok(NamedLetter { name: name.parse()?, inverse })
    }
}

fn parse_letters(s: &str) -> Result<Vec<NamedLetter>> {
    s.split_whitespace().map(str::parse).collect()
}

fn fold_compose<I: IntoIterator<Item = NamedLetter>>(letters: I) -> F2Morphism {
    letters.into_iter().fold(F2Morphism::identity(), |acc, l| acc.compose(&l.morphism()))
}

/// Evaluates a whitespace-separated product of any of the seven named
/// generators, e.g. `"E O E Dt"`.
pub fn eval_named(s: &str) -> Result<F2Morphism> {
    Ok(fold_compose(parse_letters(s)?))
}

/// A word over `{G, Gt, D, Dt, E}` with optional inverses.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SturmianWord(Vec<NamedLetter>);

impl SturmianWord {
    pub fn new(letters: Vec<NamedLetter>) -> Result<SturmianWord> {
        if let Some(bad) = letters.iter().find(|l| !l.name.is_sturmian()) {
            return Err(Error::Parse(format!("{} is not a Sturmian generator", bad.name)));
        }
        Ok(SturmianWord(letters))
    }

    pub fn from_names<I: IntoIterator<Item = AutoName>>(names: I) -> Result<SturmianWord> {
        SturmianWord::new(names.into_iter().map(|name| NamedLetter { name, inverse: false }).collect())
    }

    pub fn letters(&self) -> &[NamedLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Uses only `G, Gt, D, Dt`, all with exponent +1.
    pub fn is_st0(&self) -> bool {
        self.0.iter().all(|l| !l.inverse && l.name != AutoName::E)
    }

    pub fn eval(&self) -> F2Morphism {
        fold_compose(self.0.iter().copied())
    }

    pub fn inverse(&self) -> SturmianWord {
        SturmianWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &SturmianWord) -> SturmianWord {
        SturmianWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn push(&mut self, name: AutoName) {
        debug_assert!(name.is_sturmian());
        self.0.push(NamedLetter { name, inverse: false });
    }
}

impl fmt::Display for SturmianWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for SturmianWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<SturmianWord> {
        SturmianWord::new(parse_letters(s)?)
    }
}
