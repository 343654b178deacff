//! Braid groups B3 and B4, the extension of B4 by the involution ω, and
//! their maps to Aut(F2), GL2(Z) and B3.
//!
//! Equality of braids is decided through the Artin action on the free group
//! of rank equal to the number of strands, which is faithful.
//!
//! Braid text format: whitespace-separated signed generator indices, so
//! `1 -2 3 4` is σ1 σ2⁻¹ σ3 σ4. In B4 the index 4 denotes
//! σ4 = σ3⁻¹ σ2⁻¹ σ1 σ2 σ3 and is expanded before any computation.

use std::fmt;
use std::str::FromStr;

use crate::autos::{AutoName, F2Morphism, NamedLetter, SturmianWord};
use crate::error::{Error, Result};
use crate::lattice::IntMatrix2;
use crate::words::{FreeWord, RankedWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BraidGroup {
    B3,
    B4,
}

impl BraidGroup {
    pub fn strands(self) -> u8 {
        match self {
            BraidGroup::B3 => 3,
            BraidGroup::B4 => 4,
        }
    }

    /// Largest generator index accepted in a word, σ4 included for B4.
    fn max_index(self) -> u8 {
        match self {
            BraidGroup::B3 => 2,
            BraidGroup::B4 => 4,
        }
    }
}

impl fmt::Display for BraidGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}", self.strands())
    }
}

const SIGMA4: [i8; 5] = [-3, -2, 1, 2, 3];
const SIGMA4_INV: [i8; 5] = [-3, -2, -1, 2, 3];

/// A word in the generators of B3 or B4, kept freely reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    group: BraidGroup,
    letters: Vec<i8>,
}

fn cancel(letters: impl IntoIterator<Item = i8>) -> Vec<i8> {
    let mut out: Vec<i8> = Vec::new();
    for x in letters {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

impl BraidWord {
    pub fn new<I: IntoIterator<Item = i8>>(group: BraidGroup, letters: I) -> Result<BraidWord> {
        let letters: Vec<i8> = letters.into_iter().collect();
        if let Some(&bad) = letters.iter().find(|&&x| x == 0 || x.unsigned_abs() > group.max_index()) {
            return Err(Error::Parse(format!("generator {bad} not allowed in {group}")));
        }
        Ok(BraidWord { group, letters: cancel(letters) })
    }

    /// Word in B4; panics on an invalid index.
    pub fn b4<I: IntoIterator<Item = i8>>(letters: I) -> BraidWord {
        BraidWord::new(BraidGroup::B4, letters).expect("valid B4 letters")
    }

    /// Word in B3; panics on an invalid index.
    pub fn b3<I: IntoIterator<Item = i8>>(letters: I) -> BraidWord {
        BraidWord::new(BraidGroup::B3, letters).expect("valid B3 letters")
    }

    pub fn identity(group: BraidGroup) -> BraidWord {
        BraidWord { group, letters: Vec::new() }
    }

    pub fn parse(group: BraidGroup, s: &str) -> Result<BraidWord> {
        let letters = s
            .split_whitespace()
            .map(|tok| tok.parse::<i8>().map_err(|_| Error::Parse(format!("invalid braid generator {tok:?}"))))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(group, letters)
    }

    /// δ = σ1σ2σ3 in B4.
    pub fn delta() -> BraidWord {
        BraidWord::b4([1, 2, 3])
    }

    pub fn group(&self) -> BraidGroup {
        self.group
    }

    pub fn letters(&self) -> &[i8] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn multiply(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(self.group, other.group));
        }
        Ok(self.concat(other))
    }

    fn concat(&self, other: &BraidWord) -> BraidWord {
        BraidWord { group: self.group, letters: cancel(self.letters.iter().chain(&other.letters).copied()) }
    }

    /// Product of several words of the same group.
    pub fn product<'a, I: IntoIterator<Item = &'a BraidWord>>(group: BraidGroup, words: I) -> Result<BraidWord> {
        words.into_iter().try_fold(BraidWord::identity(group), |acc, w| acc.multiply(w))
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { group: self.group, letters: self.letters.iter().rev().map(|x| -x).collect() }
    }

    pub fn pow(&self, n: i64) -> BraidWord {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        (0..n.unsigned_abs()).fold(BraidWord::identity(self.group), |acc, _| acc.concat(&base))
    }

    /// `x · self · x⁻¹`.
    pub fn conjugate_by(&self, x: &BraidWord) -> Result<BraidWord> {
        x.multiply(self)?.multiply(&x.inverse())
    }

    /// Replaces every σ4^±1 by its expansion in σ1, σ2, σ3.
    pub fn expand_sigma4(&self) -> BraidWord {
        let letters = self.letters.iter().flat_map(|&x| match x {
            4 => SIGMA4.to_vec(),
            -4 => SIGMA4_INV.to_vec(),
            _ => vec![x],
        });
        BraidWord { group: self.group, letters: cancel(letters) }
    }

    /// Image in Z, the abelianization of the braid group.
    pub fn exponent_sum(&self) -> i64 {
        // σ4 expands to a word of exponent sum +1, so counting it as one letter is exact.
        self.letters.iter().map(|&x| x.signum() as i64).sum()
    }

    /// Automorphism of the free group of rank `strands` induced by the word.
    pub fn artin_action(&self) -> RankedMorphism {
        let rank = self.group.strands();
        self.expand_sigma4().letters.iter().fold(RankedMorphism::identity(rank), |m, &x| m.then_generator(x))
    }

    /// Equality in the braid group.
    pub fn braid_equal(&self, other: &BraidWord) -> Result<bool> {
        Ok(self.multiply(&other.inverse())?.artin_action().is_identity())
    }

    /// Equality in B4 modulo its center, generated by δ⁴.
    pub fn eq_mod_center(&self, other: &BraidWord) -> Result<bool> {
        self.require_b4()?;
        other.require_b4()?;
        let diff = self.exponent_sum() - other.exponent_sum();
        if diff % 12 != 0 {
            return Ok(false);
        }
        let central = BraidWord::delta().pow(4 * (diff / 12));
        self.braid_equal(&other.concat(&central))
    }

    /// The involution ω of B4: σ1 ↦ σ2⁻¹, σ2 ↦ σ1⁻¹, σ3 ↦ σ4⁻¹, σ4 ↦ σ3⁻¹.
    pub fn omega(&self) -> Result<BraidWord> {
        self.require_b4()?;
        let letters = self.letters.iter().map(|&x| {
            let image = match x.abs() {
                1 => -2,
                2 => -1,
                3 => -4,
                _ => -3,
            };
            image * x.signum()
        });
        Ok(BraidWord { group: self.group, letters: cancel(letters) }.expand_sigma4())
    }

    /// The involution inverting each of σ1, σ2, σ3.
    pub fn theta(&self) -> BraidWord {
        let e = self.expand_sigma4();
        BraidWord { group: self.group, letters: e.letters.iter().map(|x| -x).collect() }
    }

    /// Image in Aut(F2) under σ1 ↦ G, σ2 ↦ D⁻¹, σ3 ↦ G̃.
    pub fn f_map(&self) -> Result<F2Morphism> {
        self.require_b4()?;
        Ok(self.expand_sigma4().letters.iter().fold(F2Morphism::identity(), |acc, &x| {
            let name = match x.abs() {
                1 => AutoName::G,
                2 => AutoName::D,
                _ => AutoName::Gt,
            };
            // σ2 goes to D⁻¹, so its sign flips.
            let inverse = if x.abs() == 2 { x > 0 } else { x < 0 };
            acc.compose(&NamedLetter { name, inverse }.morphism())
        }))
    }

    /// Image in GL2(Z): σ1, σ3 ↦ A and σ2 ↦ B⁻¹. On B3 this is the map
    /// σ1 ↦ A, σ2 ↦ B⁻¹.
    pub fn pi_map(&self) -> IntMatrix2 {
        let a_inv = IntMatrix2::A.inverse_unimodular().expect("det A = 1");
        let b = IntMatrix2::B;
        let b_inv = b.inverse_unimodular().expect("det B = 1");
        self.expand_sigma4().letters.iter().fold(IntMatrix2::IDENTITY, |acc, &x| {
            let g = match x {
                1 | 3 => IntMatrix2::A,
                -1 | -3 => a_inv,
                2 => b_inv,
                _ => b,
            };
            acc * g
        })
    }

    /// The map B4 → B3 sending σ1 and σ3 to σ1 and σ2 to σ2.
    pub fn q_map(&self) -> Result<BraidWord> {
        self.require_b4()?;
        let e = self.expand_sigma4();
        let letters = e.letters.iter().map(|&x| if x.abs() == 3 { x.signum() } else { x });
        Ok(BraidWord { group: BraidGroup::B3, letters: cancel(letters) })
    }

    /// Whether the image in Aut(F2) is inner, decided by π(β) = I.
    pub fn is_f_inner(&self) -> Result<bool> {
        self.require_b4()?;
        Ok(self.pi_map() == IntMatrix2::IDENTITY)
    }

    /// The `w` with f(β) = Ad(w), when f(β) is inner.
    pub fn f_inner_witness(&self) -> Result<Option<FreeWord>> {
        Ok(self.f_map()?.inner_witness())
    }

    fn require_b4(&self) -> Result<()> {
        match self.group {
            BraidGroup::B4 => Ok(()),
            g => Err(Error::GroupMismatch(g, BraidGroup::B4)),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses a word of B4.
    fn from_str(s: &str) -> Result<BraidWord> {
        BraidWord::parse(BraidGroup::B4, s)
    }
}

/// Lifts a word over `{G, Gt, D, Dt}` into B4 via G ↦ σ1, G̃ ↦ σ3,
/// D ↦ σ2⁻¹, D̃ ↦ σ4⁻¹.
pub fn st0_embed(s: &SturmianWord) -> Result<BraidWord> {
    if !s.is_st0() {
        return Err(Error::Precondition(format!("{s} is not a word over G, Gt, D, Dt")));
    }
    let letters = s.letters().iter().map(|l| match l.name {
        AutoName::G => 1,
        AutoName::Gt => 3,
        AutoName::D => -2,
        _ => -4,
    });
    BraidWord::new(BraidGroup::B4, letters)
}

/// Automorphism of the free group of rank 3 or 4 given by generator images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RankedMorphism {
    images: Vec<RankedWord>,
}

impl RankedMorphism {
    pub fn identity(rank: u8) -> RankedMorphism {
        let images = (1..=rank).map(|i| RankedWord::generator(rank, i).expect("rank in range")).collect();
        RankedMorphism { images }
    }

    pub fn rank(&self) -> u8 {
        self.images.len() as u8
    }

    pub fn images(&self) -> &[RankedWord] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        *self == RankedMorphism::identity(self.rank())
    }

    pub fn apply(&self, w: &RankedWord) -> Result<RankedWord> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch(w.rank(), self.rank()));
        }
        let mut out = RankedWord::identity(self.rank())?;
        for &x in w.letters() {
            let img = &self.images[x.unsigned_abs() as usize - 1];
            out = out.concat_unchecked(&if x > 0 { img.clone() } else { img.inverse() });
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &RankedMorphism) -> Result<RankedMorphism> {
        let images = other.images.iter().map(|w| self.apply(w)).collect::<Result<Vec<_>>>()?;
        Ok(RankedMorphism { images })
    }

    /// `self ∘ σ`, where σ acts by x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i
    /// (and the inverse action for a negative letter).
    fn then_generator(mut self, letter: i8) -> RankedMorphism {
        let i = letter.unsigned_abs() as usize - 1;
        let (xi, xj) = (self.images[i].clone(), self.images[i + 1].clone());
        if letter > 0 {
            self.images[i] = xi.concat_unchecked(&xj).concat_unchecked(&xi.inverse());
            self.images[i + 1] = xi;
        } else {
            self.images[i] = xj.clone();
            self.images[i + 1] = xj.inverse().concat_unchecked(&xi).concat_unchecked(&xj);
        }
        self
    }
}

/// Element β·ω^e of B4 ⋊ Z/2, with ω acting on B4 by the involution above.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtBraidElement {
    braid: BraidWord,
    omega: bool,
}

impl ExtBraidElement {
    pub fn new(braid: BraidWord, omega: bool) -> Result<ExtBraidElement> {
        braid.require_b4()?;
        Ok(ExtBraidElement { braid, omega })
    }

    pub fn from_braid(braid: BraidWord) -> Result<ExtBraidElement> {
        ExtBraidElement::new(braid, false)
    }

    pub fn identity() -> ExtBraidElement {
        ExtBraidElement { braid: BraidWord::identity(BraidGroup::B4), omega: false }
    }

    pub fn omega() -> ExtBraidElement {
        ExtBraidElement { braid: BraidWord::identity(BraidGroup::B4), omega: true }
    }

    pub fn braid(&self) -> &BraidWord {
        &self.braid
    }

    pub fn has_omega(&self) -> bool {
        self.omega
    }

    /// (β1, e1)(β2, e2) = (β1 ω^e1(β2), e1 + e2).
    pub fn multiply(&self, other: &ExtBraidElement) -> ExtBraidElement {
        let twisted = if self.omega { other.braid.omega().expect("B4 word") } else { other.braid.clone() };
        ExtBraidElement { braid: self.braid.concat(&twisted), omega: self.omega ^ other.omega }
    }

    pub fn inverse(&self) -> ExtBraidElement {
        let inv = self.braid.inverse();
        let braid = if self.omega { inv.omega().expect("B4 word") } else { inv };
        ExtBraidElement { braid, omega: self.omega }
    }

    pub fn pow(&self, n: u32) -> ExtBraidElement {
        (0..n).fold(ExtBraidElement::identity(), |acc, _| acc.multiply(self))
    }

    /// Equality in B4 ⋊ Z/2.
    pub fn ext_equal(&self, other: &ExtBraidElement) -> bool {
        self.omega == other.omega && self.braid.braid_equal(&other.braid).expect("B4 words")
    }

    /// Equality modulo the center of B4, which ω preserves.
    pub fn ext_eq_mod_center(&self, other: &ExtBraidElement) -> bool {
        self.omega == other.omega && self.braid.eq_mod_center(&other.braid).expect("B4 words")
    }

    /// f̃(β ω^e) = f(β) ∘ E^e.
    pub fn f_ext(&self) -> F2Morphism {
        let base = self.braid.f_map().expect("B4 word");
        if self.omega {
            base.compose(&AutoName::E.morphism())
        } else {
            base
        }
    }
}

impl fmt::Display for ExtBraidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]{}", self.braid, if self.omega { " w" } else { "" })
    }
}

/// The section Aut(F2) → (B4 ⋊ Z/2)/Z4 on the generators E, D̃, O:
/// E ↦ ω, D̃ ↦ σ4⁻¹, O ↦ ωσ1σ2σ3.
pub fn g_on_generator(name: AutoName) -> Result<ExtBraidElement> {
    match name {
        AutoName::E => Ok(ExtBraidElement::omega()),
        AutoName::Dt => ExtBraidElement::from_braid(BraidWord::b4([-4])),
        AutoName::O => Ok(ExtBraidElement::omega().multiply(&ExtBraidElement::from_braid(BraidWord::delta())?)),
        other => Err(Error::UnknownName(format!("{other} (expected E, Dt or O)"))),
    }
}

/// Extends [`g_on_generator`] multiplicatively to a word such as `"O E O Dt"`.
pub fn g_on_word(s: &str) -> Result<ExtBraidElement> {
    s.split_whitespace().try_fold(ExtBraidElement::identity(), |acc, tok| {
        let l: NamedLetter = tok.parse()?;
        let g = g_on_generator(l.name)?;
        Ok(acc.multiply(&if l.inverse { g.inverse() } else { g }))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn w(s: &str) -> FreeWord {
        s.parse().unwrap()
    }

    #[test]
    fn sigma4_expansion() {
        assert_eq!(b("4").expand_sigma4().letters(), &[-3, -2, 1, 2, 3]);
        assert_eq!(b("1").expand_sigma4().letters(), &[1]);
        assert_eq!(b("-4").expand_sigma4().letters(), &[-3, -2, -1, 2, 3]);
    }

    #[test]
    fn delta_examples() {
        let d = BraidWord::delta();
        assert_eq!(d.exponent_sum(), 3);
        assert_eq!(d.f_map().unwrap().apply(&w("a")), w("B"));
        let conj = b("3").conjugate_by(&d).unwrap();
        assert!(conj.braid_equal(&b("4")).unwrap());
    }

    #[test]
    fn artin_generators() {
        let m = b("1").artin_action();
        let img: Vec<Vec<i8>> = m.images().iter().map(|x| x.letters().to_vec()).collect();
        assert_eq!(img, vec![vec![1, 2, -1], vec![1], vec![3], vec![4]]);
        assert!(BraidWord::b4([1, -1]).artin_action().is_identity());
        let boundary = RankedWord::new(4, [1, 2, 3, 4]).unwrap();
        let full_twist = BraidWord::delta().pow(4).artin_action();
        assert_eq!(full_twist.apply(&boundary).unwrap(), boundary);
        assert!(!full_twist.is_identity());
    }

    #[test]
    fn braid_relations_hold() {
        assert!(b("1 2 1").braid_equal(&b("2 1 2")).unwrap());
        assert!(b("1 3").braid_equal(&b("3 1")).unwrap());
        assert!(!b("1").braid_equal(&b("2")).unwrap());
        assert!(BraidWord::b3([1, 2, 1]).braid_equal(&BraidWord::b3([2, 1, 2])).unwrap());
        assert!(matches!(BraidWord::b3([1]).braid_equal(&b("1")), Err(Error::GroupMismatch(..))));
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(BraidWord::delta().exponent_sum(), 3);
        assert_eq!(BraidWord::delta().pow(4).exponent_sum(), 12);
        assert_eq!(b("4").exponent_sum(), 1);
        assert_eq!(b("4").expand_sigma4().exponent_sum(), 1);
    }

    #[test]
    fn center() {
        let d4 = BraidWord::delta().pow(4);
        let e = BraidWord::identity(BraidGroup::B4);
        assert!(d4.eq_mod_center(&e).unwrap());
        assert!(!d4.braid_equal(&e).unwrap());
        assert!(b("1").eq_mod_center(&b("1").multiply(&d4).unwrap()).unwrap());
        assert!(!b("1").eq_mod_center(&b("2")).unwrap());
        assert!(BraidWord::b3([1]).eq_mod_center(&BraidWord::b3([1])).is_err());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(b("1").omega().unwrap(), b("-2"));
        for s in ["1", "2", "3", "4", "1 -2 3", "2 2 -3 1 4"] {
            assert!(b(s).omega().unwrap().omega().unwrap().braid_equal(&b(s)).unwrap(), "{s}");
        }
        let d = BraidWord::delta();
        assert!(d.omega().unwrap().braid_equal(&d.inverse()).unwrap());
        assert!(b("4").omega().unwrap().braid_equal(&b("-3")).unwrap());
    }

    #[test]
    fn extension_examples() {
        let om = ExtBraidElement::omega();
        assert!(om.multiply(&om).ext_equal(&ExtBraidElement::identity()));
        let s1 = ExtBraidElement::from_braid(b("1")).unwrap();
        let lhs = om.multiply(&s1).multiply(&om);
        assert!(lhs.ext_equal(&ExtBraidElement::from_braid(b("-2")).unwrap()));
        let d = ExtBraidElement::from_braid(BraidWord::delta()).unwrap();
        let d_inv = ExtBraidElement::from_braid(BraidWord::delta().inverse()).unwrap();
        assert!(om.multiply(&d).ext_eq_mod_center(&d_inv.multiply(&om)));
        let x = ExtBraidElement::new(b("1 -2 3"), true).unwrap();
        assert!(x.multiply(&x.inverse()).ext_equal(&ExtBraidElement::identity()));
    }

    #[test]
    fn f_values() {
        assert_eq!(b("4").f_map().unwrap(), AutoName::Dt.inverse_morphism());
        assert!(BraidWord::delta().pow(4).f_map().unwrap().is_identity());
        assert_eq!(ExtBraidElement::omega().f_ext(), AutoName::E.morphism());
        assert!(BraidWord::b3([1]).f_map().is_err());
    }

    #[test]
    fn pi_values() {
        assert_eq!(b("1").pi_map(), IntMatrix2::A);
        assert_eq!(b("4").pi_map(), IntMatrix2::B.inverse_unimodular().unwrap());
        assert_eq!(BraidWord::delta().pow(4).pi_map(), IntMatrix2::IDENTITY);
        assert_eq!(BraidWord::b3([2]).pi_map(), IntMatrix2::B.inverse_unimodular().unwrap());
    }

    #[test]
    fn q_values() {
        assert!(b("1 -3").q_map().unwrap().braid_equal(&BraidWord::identity(BraidGroup::B3)).unwrap());
        let twist = BraidWord::delta().pow(4).q_map().unwrap();
        assert!(twist.braid_equal(&BraidWord::b3([1, 2]).pow(6)).unwrap());
        assert_eq!(b("2").q_map().unwrap(), BraidWord::b3([2]));
    }

    #[test]
    fn inner_images() {
        assert!(b("1 -3").is_f_inner().unwrap());
        assert_eq!(b("1 -3").f_inner_witness().unwrap(), Some(w("a")));
        assert!(b("2 1 -3 -2").is_f_inner().unwrap());
        assert_eq!(b("2 1 -3 -2").f_inner_witness().unwrap(), Some(w("Ba")));
        assert!(!b("1").is_f_inner().unwrap());
        assert_eq!(b("1").f_inner_witness().unwrap(), None);
    }

    #[test]
    fn st0_embedding() {
        let s: SturmianWord = "G D Gt".parse().unwrap();
        assert_eq!(st0_embed(&s).unwrap(), b("1 -2 3"));
        assert!(st0_embed(&SturmianWord::default()).unwrap().is_empty());
        let x = st0_embed(&"G Gt".parse().unwrap()).unwrap();
        let y = st0_embed(&"Gt G".parse().unwrap()).unwrap();
        assert!(x.braid_equal(&y).unwrap());
        assert!(st0_embed(&"G E".parse().unwrap()).is_err());
        assert!(st0_embed(&"G D'".parse().unwrap()).is_err());
        let s: SturmianWord = "G Dt D Gt Dt".parse().unwrap();
        assert_eq!(st0_embed(&s).unwrap().f_map().unwrap(), s.eval());
    }

    #[test]
    fn section_on_generators() {
        assert_eq!(g_on_generator(AutoName::E).unwrap(), ExtBraidElement::omega());
        assert_eq!(g_on_generator(AutoName::Dt).unwrap(), ExtBraidElement::from_braid(b("-4")).unwrap());
        let o = g_on_generator(AutoName::O).unwrap();
        assert!(o.has_omega());
        assert_eq!(o.braid(), &b("-2 -1 -4").expand_sigma4());
        assert!(g_on_generator(AutoName::G).is_err());
        for n in [AutoName::E, AutoName::Dt, AutoName::O] {
            assert_eq!(g_on_generator(n).unwrap().f_ext(), n.morphism(), "{n}");
        }
    }

    #[test]
    fn parse_errors() {
        assert!("0".parse::<BraidWord>().is_err());
        assert!("5".parse::<BraidWord>().is_err());
        assert!("1 x".parse::<BraidWord>().is_err());
        assert!(BraidWord::parse(BraidGroup::B3, "3").is_err());
        assert!("".parse::<BraidWord>().unwrap().is_empty());
        assert_eq!(b("1 -2 3 4").to_string(), "1 -2 3 4");
    }
}
