//! Named suites of identities between automorphisms of F2 and braids, each
//! checked with the exact equality test of its ambient group.
//!
//! Automorphism sides are products of named generators (`"G D' Gt"`), braid
//! sides are braid text (`"1 -2 3"`), and elements of B4 ⋊ Z/2 use braid
//! text with the extra token `w` for ω.

use std::fmt;

use crate::autos::eval_named;
use crate::braids::{g_on_word, BraidGroup, BraidWord, ExtBraidElement};
use crate::error::{Error, Result};
use crate::lattice::IntMatrix2;
use crate::words::FreeWord;

/// Suite identifiers accepted by [`verify_relation_suite`], `all` excluded.
pub const SUITES: [&str; 14] = [
    "aut-generators",
    "cyclic-braid",
    "sigma4",
    "omega-involution",
    "ext-twist",
    "aut-presentation",
    "sturm-monoid",
    "special-sturm-monoid",
    "st0-braid-lift",
    "omega-theta",
    "section-identity",
    "braid-action",
    "modular",
    "inner-subgroup",
];

pub const DEFAULT_KMAX: u32 = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<RelationCheck>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn passed_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
        }
        write!(f, "{}: {}/{} passed", self.suite, self.passed_count(), self.checks.len())
    }
}

struct Suite {
    checks: Vec<RelationCheck>,
}

impl Suite {
    fn new() -> Suite {
        Suite { checks: Vec::new() }
    }

    fn record(&mut self, name: String, passed: bool) {
        self.checks.push(RelationCheck { name, passed });
    }

    /// Equality in Aut(F2); an empty side is the identity.
    fn aut(&mut self, lhs: &str, rhs: &str) -> Result<()> {
        let passed = eval_named(lhs)? == eval_named(rhs)?;
        self.record(format!("aut: {} = {}", show(lhs), show(rhs)), passed);
        Ok(())
    }

    fn braid(&mut self, lhs: &str, rhs: &str) -> Result<()> {
        let passed = b4(lhs)?.braid_equal(&b4(rhs)?)?;
        self.record(format!("B4: {} = {}", show(lhs), show(rhs)), passed);
        Ok(())
    }

    fn ext(&mut self, lhs: &str, rhs: &str) -> Result<()> {
        let passed = ext(lhs)?.ext_equal(&ext(rhs)?);
        self.record(format!("B4~: {} = {}", show(lhs), show(rhs)), passed);
        Ok(())
    }

    /// Equality of g-images in (B4 ⋊ Z/2)/Z4.
    fn g_mod_center(&mut self, lhs: &str, rhs: &str) -> Result<()> {
        let passed = g_on_word(lhs)?.ext_eq_mod_center(&g_on_word(rhs)?);
        self.record(format!("g mod Z4: {} = {}", show(lhs), show(rhs)), passed);
        Ok(())
    }
}

fn show(side: &str) -> &str {
    if side.trim().is_empty() {
        "1"
    } else {
        side
    }
}

fn b4(s: &str) -> Result<BraidWord> {
    BraidWord::parse(BraidGroup::B4, s)
}

fn ext(s: &str) -> Result<ExtBraidElement> {
    s.split_whitespace().try_fold(ExtBraidElement::identity(), |acc, tok| {
        let factor = if tok == "w" { ExtBraidElement::omega() } else { ExtBraidElement::from_braid(b4(tok)?)? };
        Ok(acc.multiply(&factor))
    })
}

/// `tok` repeated `k` times, space separated.
fn rep(tok: &str, k: u32) -> String {
    vec![tok; k as usize].join(" ")
}

fn cat(parts: &[&str]) -> String {
    parts.iter().filter(|p| !p.is_empty()).copied().collect::<Vec<_>>().join(" ")
}

fn aut_generators(s: &mut Suite) -> Result<()> {
    for (l, r) in [
        ("G D' G", "D' G D'"),
        ("D' Gt D'", "Gt D' Gt"),
        ("G Gt", "Gt G"),
        ("Gt Dt' Gt", "Dt' Gt Dt'"),
        ("Dt' G Dt'", "G Dt' G"),
        ("D Dt", "Dt D"),
        ("G D Gt", "Gt Dt G"),
        ("D G Dt", "Dt Gt D"),
        ("E E", ""),
        ("D", "E G E"),
        ("Dt", "E Gt E"),
    ] {
        s.aut(l, r)?;
    }
    Ok(())
}

fn cyclic_braid(s: &mut Suite) -> Result<()> {
    s.braid("1 2 3 4 -3 -2 -1", "1")?;
    for cyc in ["2 3 4", "3 4 1", "4 1 2"] {
        s.braid(cyc, "1 2 3")?;
    }
    s.braid("2 4", "4 2")?;
    s.braid("3 4 3", "4 3 4")?;
    s.braid("4 1 4", "1 4 1")?;
    s.braid("1 2 3 1 -3 -2 -1", "2")?;
    s.braid("1 2 3 2 -3 -2 -1", "3")?;
    s.braid("1 2 3 3 -3 -2 -1", "4")?;
    s.braid("1 2 3 1 2 3 1 2 3 1 -3 -2 -1 -3 -2 -1 -3 -2 -1", "4")?;
    Ok(())
}

fn sigma4(s: &mut Suite) -> Result<()> {
    s.braid("1 2 1", "2 1 2")?;
    s.braid("2 3 2", "3 2 3")?;
    s.braid("1 3", "3 1")?;
    for expr in ["-3 -2 1 2 3", "-3 1 2 3 -1", "1 2 3 -2 -1"] {
        s.braid("4", expr)?;
    }
    Ok(())
}

fn omega_involution(s: &mut Suite) -> Result<()> {
    for (x, image) in [("1", "-2"), ("2", "-1"), ("3", "-4"), ("4", "-3"), ("1 2 3", "-3 -2 -1")] {
        let passed = b4(x)?.omega()?.braid_equal(&b4(image)?)?;
        s.record(format!("omega({x}) = {image}"), passed);
    }
    for x in ["1", "2", "3", "4", "1 -2 3 4"] {
        let w = b4(x)?;
        let passed = w.omega()?.omega()?.braid_equal(&w)?;
        s.record(format!("omega(omega({x})) = {x}"), passed);
    }
    Ok(())
}

fn ext_twist(s: &mut Suite) -> Result<()> {
    s.ext("w w", "")?;
    s.ext("w 1", "-2 w")?;
    s.ext("w 2", "-1 w")?;
    s.ext("w 3", "-4 w")?;
    s.ext("w 1 2 3", "-3 -2 -1 w")?;
    Ok(())
}

fn aut_presentation(s: &mut Suite) -> Result<()> {
    let relations: [(&str, &str); 6] = [
        ("E E", ""),
        ("O O", ""),
        ("E O E Dt E O E Dt", ""),
        ("O Dt O Dt", "Dt O Dt O"),
        ("E O E O E O E O", ""),
        ("Dt O E Dt O E Dt O E", ""),
    ];
    for (l, r) in relations {
        s.aut(l, r)?;
    }
    for (l, r) in relations {
        s.g_mod_center(l, r)?;
    }
    let witnesses = [("O E O Dt O E O", "1"), ("E Dt E", "3"), ("E", "w")];
    for (word, target) in witnesses {
        let passed = g_on_word(word)?.ext_eq_mod_center(&ext(target)?);
        s.record(format!("g mod Z4: {word} = {target}"), passed);
    }
    Ok(())
}

fn sturm_monoid(s: &mut Suite, kmax: u32) -> Result<()> {
    for k in 0..=kmax {
        s.aut(&cat(&["G E", &rep("G", k), "E Gt"]), &cat(&["Gt E", &rep("Gt", k), "E G"]))?;
    }
    Ok(())
}

fn special_sturm_monoid(s: &mut Suite, kmax: u32) -> Result<()> {
    for k in 0..=kmax {
        s.aut(&cat(&["G", &rep("D", k), "Gt"]), &cat(&["Gt", &rep("Dt", k), "G"]))?;
        s.aut(&cat(&["D", &rep("G", k), "Dt"]), &cat(&["Dt", &rep("Gt", k), "D"]))?;
    }
    Ok(())
}

fn st0_braid_lift(s: &mut Suite, kmax: u32) -> Result<()> {
    for k in 0..=kmax {
        s.braid(&cat(&["1", &rep("-2", k), "3"]), &cat(&["3", &rep("-4", k), "1"]))?;
        s.braid(&cat(&["-2", &rep("1", k), "-4"]), &cat(&["-4", &rep("3", k), "-2"]))?;
    }
    Ok(())
}

/// ω(x) = Δ θ(x) Δ⁻¹ with Δ = σ1σ2σ1.
fn omega_theta(s: &mut Suite) -> Result<()> {
    let big_delta = b4("1 2 1")?;
    for x in ["1", "2", "3", "4", "1 2 3", "2 -1 3 -3 4"] {
        let w = b4(x)?;
        let passed = w.omega()?.braid_equal(&w.theta().conjugate_by(&big_delta)?)?;
        s.record(format!("omega({x}) = Ad(1 2 1) theta({x})"), passed);
    }
    Ok(())
}

/// f̃ ∘ g is the identity on E, D̃ and O.
fn section_identity(s: &mut Suite) -> Result<()> {
    for name in ["E", "Dt", "O"] {
        let passed = g_on_word(name)?.f_ext() == eval_named(name)?;
        s.record(format!("f~(g({name})) = {name}"), passed);
    }
    Ok(())
}

fn braid_action(s: &mut Suite) -> Result<()> {
    let f = |x: &str| b4(x).and_then(|w| w.f_map());
    let word = |x: &str| x.parse::<FreeWord>();
    s.record("f(4) = Dt'".into(), f("4")? == eval_named("Dt'")?);
    let fd = f("1 2 3")?;
    s.record("f(1 2 3)(a) = B".into(), fd.image_a() == &word("B")?);
    s.record("f(1 2 3)(b) = a".into(), fd.image_b() == &word("a")?);
    s.record("f((1 2 3)^4) = 1".into(), f(&rep("1 2 3", 4))?.is_identity());
    for i in ["1", "2", "3"] {
        let w = b4(i)?;
        let e = eval_named("E")?;
        let passed = e.compose(&w.f_map()?) == w.omega()?.f_map()?.compose(&e);
        s.record(format!("E f({i}) = f(omega({i})) E"), passed);
    }
    let x = f("1 -3")?;
    let y = f("2 1 -3 -2")?;
    s.record("f(1 -3) = Ad(a)".into(), x.inner_witness() == Some(word("a")?));
    s.record("f(2 1 -3 -2) = Ad(Ba)".into(), y.inner_witness() == Some(word("Ba")?));
    Ok(())
}

fn modular(s: &mut Suite) -> Result<()> {
    let (a, b_inv) = (IntMatrix2::A, IntMatrix2::B.inverse_unimodular()?);
    s.record("A B' A = B' A B'".into(), a * b_inv * a == b_inv * a * b_inv);
    s.record("(A B' A)^4 = I".into(), (a * b_inv * a).pow(4) == IntMatrix2::IDENTITY);
    for x in ["1", "2", "3", "4", "1 2 3", "-2 1 -4 3"] {
        let w = b4(x)?;
        let passed = w.pi_map() == w.f_map()?.abelianize();
        s.record(format!("pi({x}) = ab(f({x}))"), passed);
    }
    Ok(())
}

/// Kernel of π: products of σ1σ3⁻¹ conjugates and δ⁴ act by inner
/// automorphisms.
fn inner_subgroup(s: &mut Suite) -> Result<()> {
    for x in ["1 -3", "2 1 -3 -2", "-2 1 -3 2", &rep("1 2 3", 4), "1 -3 2 1 -3 -2"] {
        let w = b4(x)?;
        s.record(format!("f({x}) inner"), w.pi_map() == IntMatrix2::IDENTITY && w.is_f_inner()?);
    }
    Ok(())
}

pub fn verify_relation_suite(suite: &str, kmax: u32) -> Result<SuiteReport> {
    let mut s = Suite::new();
    match suite {
        "aut-generators" => aut_generators(&mut s)?,
        "cyclic-braid" => cyclic_braid(&mut s)?,
        "sigma4" => sigma4(&mut s)?,
        "omega-involution" => omega_involution(&mut s)?,
        "ext-twist" => ext_twist(&mut s)?,
        "aut-presentation" => aut_presentation(&mut s)?,
        "sturm-monoid" => sturm_monoid(&mut s, kmax)?,
        "special-sturm-monoid" => special_sturm_monoid(&mut s, kmax)?,
        "st0-braid-lift" => st0_braid_lift(&mut s, kmax)?,
        "omega-theta" => omega_theta(&mut s)?,
        "section-identity" => section_identity(&mut s)?,
        "braid-action" => braid_action(&mut s)?,
        "modular" => modular(&mut s)?,
        "inner-subgroup" => inner_subgroup(&mut s)?,
        "all" => {
            for name in SUITES {
                let report = verify_relation_suite(name, kmax)?;
                s.checks.extend(
                    report
                        .checks
                        .into_iter()
                        .map(|c| RelationCheck { name: format!("[{name}] {}", c.name), passed: c.passed }),
                );
            }
        }
        other => return Err(Error::UnknownName(format!("suite {other}"))),
    }
    Ok(SuiteReport { suite: suite.to_string(), checks: s.checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes() {
        for name in SUITES {
            let report = verify_relation_suite(name, DEFAULT_KMAX).unwrap();
            assert!(!report.checks.is_empty(), "{name}");
            assert!(report.all_passed(), "{report}");
        }
    }

    #[test]
    fn all_collects_every_suite() {
        let all = verify_relation_suite("all", 2).unwrap();
        let total: usize = SUITES.iter().map(|n| verify_relation_suite(n, 2).unwrap().checks.len()).sum();
        assert_eq!(all.checks.len(), total);
    }

    #[test]
    fn kmax_controls_family_size() {
        assert_eq!(verify_relation_suite("sturm-monoid", 3).unwrap().checks.len(), 4);
        assert_eq!(verify_relation_suite("st0-braid-lift", 0).unwrap().checks.len(), 2);
    }

    #[test]
    fn false_identities_fail() {
        let mut s = Suite::new();
        s.aut("G D", "D G").unwrap();
        s.braid("1 2", "2 1").unwrap();
        s.ext("w 1", "1 w").unwrap();
        assert!(s.checks.iter().all(|c| !c.passed));
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(verify_relation_suite("nope", 8), Err(Error::UnknownName(_))));
    }

    #[test]
    fn report_text() {
        let r = verify_relation_suite("modular", 8).unwrap();
        let text = r.to_string();
        assert!(text.starts_with("PASS A B' A = B' A B'\n"));
        assert!(text.ends_with("modular: 8/8 passed"));
    }
}
