//! Reference implementations used to check the library. They work on plain
//! strings over `a b A B` and share no code with the crate.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn inv_char(c: char) -> char {
    if c.is_ascii_lowercase() {
        c.to_ascii_uppercase()
    } else {
        c.to_ascii_lowercase()
    }
}

/// Stack-based free reduction; `1` and the empty string are the identity.
pub fn reduce(w: &str) -> String {
    let mut out: Vec<char> = Vec::new();
    for c in w.chars().filter(|&c| c != '1') {
        if out.last() == Some(&inv_char(c)) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out.into_iter().collect()
}

pub fn inverse(w: &str) -> String {
    w.chars().rev().map(inv_char).collect()
}

pub fn mul(parts: &[&str]) -> String {
    reduce(&parts.concat())
}

/// Cyclically reduced core of a reduced word.
pub fn core(w: &str) -> String {
    let mut c: Vec<char> = reduce(w).chars().collect();
    while c.len() >= 2 && c[0] == inv_char(c[c.len() - 1]) {
        c.remove(0);
        c.pop();
    }
    c.into_iter().collect()
}

pub fn conjugate(x: &str, y: &str) -> bool {
    let (cx, cy) = (core(x), core(y));
    cx.len() == cy.len() && format!("{cx}{cx}").contains(&cy)
}

/// Commutator criterion for bases of F2.
pub fn basis_oracle(u: &str, v: &str) -> bool {
    let c = mul(&[u, v, &inverse(u), &inverse(v)]);
    conjugate(&c, "abAB") || conjugate(&c, "baBA")
}

/// Image of `w` under `a ↦ img_a, b ↦ img_b`.
pub fn substitute(w: &str, img_a: &str, img_b: &str) -> String {
    let mut out = String::new();
    for c in w.chars() {
        out.push_str(&match c {
            'a' => img_a.to_string(),
            'b' => img_b.to_string(),
            'A' => inverse(img_a),
            'B' => inverse(img_b),
            _ => String::new(),
        });
    }
    reduce(&out)
}

/// Every word of length `n` over `{a, b}`.
pub fn positive_words(n: usize) -> Vec<String> {
    (0..1u32 << n).map(|bits| (0..n).map(|i| if bits >> (n - 1 - i) & 1 == 0 { 'a' } else { 'b' }).collect()).collect()
}

/// All positive pairs of nonempty words with `|u| + |v| = total`.
pub fn positive_pairs(total: usize) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for lu in 1..total {
        let vs = positive_words(total - lu);
        for u in positive_words(lu) {
            for v in &vs {
                out.push((u.clone(), v.clone()));
            }
        }
    }
    out
}

/// Lowest lattice path from `(0, 0)` to `(p, q)` staying weakly below the
/// segment: go up whenever that stays below, else go right.
pub fn greedy_christoffel(p: i64, q: i64) -> String {
    let (mut x, mut y) = (0, 0);
    let mut out = String::new();
    while (x, y) != (p, q) {
        if y < q && q * x >= p * (y + 1) {
            y += 1;
            out.push('b');
        } else {
            x += 1;
            out.push('a');
        }
    }
    out
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Lattice points strictly inside the polygon bounded by the path of `w`
/// and the segment back to the origin, by direct counting.
pub fn interior_points(w: &str, p: i64, q: i64) -> i64 {
    let mut top = vec![0i64; p as usize + 1];
    let (mut x, mut y) = (0i64, 0i64);
    for c in w.chars() {
        if c == 'a' {
            x += 1;
        } else {
            y += 1;
        }
        top[x as usize] = top[x as usize].max(y);
    }
    // Interior points of column x: path height < y and p·y < q·x.
    (1..p).map(|x| (top[x as usize] + 1..=q).filter(|&y| p * y < q * x).count() as i64).sum()
}

pub fn random_reduced_word(rng: &mut ChaCha8Rng, max_len: usize) -> String {
    let len = rng.gen_range(0..=max_len);
    let letters = ['a', 'b', 'A', 'B'];
    let mut out: Vec<char> = Vec::new();
    while out.len() < len {
        let c = letters[rng.gen_range(0..4)];
        if out.last() != Some(&inv_char(c)) {
            out.push(c);
        }
    }
    out.into_iter().collect()
}

/// Random braid text over σ1..σ4 and inverses.
pub fn random_braid(rng: &mut ChaCha8Rng, max_len: usize, max_index: i8) -> String {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=max_index);
            if rng.gen_bool(0.5) { i } else { -i }.to_string()
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Whether some `x` satisfies `x u1 x⁻¹ = u2` and `x v1 x⁻¹ = v2`, with
/// `u1` primitive so that its centralizer is generated by its root `u1`.
pub fn simultaneously_conjugate(u1: &str, v1: &str, u2: &str, v2: &str) -> bool {
    if !conjugate(u1, u2) || !conjugate(v1, v2) {
        return false;
    }
    // u1 = c1 r1 c1⁻¹ and u2 = c2 r2 c2⁻¹ with r1, r2 cyclically reduced.
    let split = |w: &str| {
        let w = reduce(w);
        let r = core(&w);
        let k = (w.len() - r.len()) / 2;
        (w[..k].to_string(), r)
    };
    let (c1, r1) = split(u1);
    let (c2, r2) = split(u2);
    let bound = (u1.len() + v1.len() + u2.len() + v2.len()) as i64 + 2;
    for k in 0..r1.len().max(1) {
        // r2 = s⁻¹ r1 s with s the first k letters of r1.
        let s = &r1[..k];
        if reduce(&format!("{}{}{}", inverse(s), r1, s)) != r2 {
            continue;
        }
        let base = mul(&[&c2, &inverse(s), &inverse(&c1)]);
        let root = reduce(u1);
        for m in -bound..=bound {
            let power = if m >= 0 { root.repeat(m as usize) } else { inverse(&root).repeat((-m) as usize) };
            let x = mul(&[&base, &power]);
            if mul(&[&x, v1, &inverse(&x)]) == reduce(v2) && mul(&[&x, u1, &inverse(&x)]) == reduce(u2) {
                return true;
            }
        }
    }
    false
}
