//! Stand-alone evaluator of the orbifold fusion rules for L = Zα, ⟨α,α⟩ = 2.
//!
//! Independent of the library: L°/L = {0, α/2} is encoded by k ∈ {0, 1}
//! (λ = kα/2), and every case of the product is written out in integers.

use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum M {
    D(u8, u8),
    N,
    T(u8, u8),
}

pub fn modules() -> Vec<M> {
    let mut v = Vec::new();
    for k in 0..2 {
        for e in 0..2 {
            v.push(M::D(k, e));
        }
    }
    v.push(M::N);
    for k in 0..2 {
        for e in 0..2 {
            v.push(M::T(k, e));
        }
    }
    v
}

pub fn name(m: M) -> String {
    let k = |k: u8| if k == 0 { "0" } else { "1/2" };
    match m {
        M::D(a, e) => format!("D({};{e})", k(a)),
        M::N => "N(0,1/2)".to_string(),
        M::T(a, e) => format!("T({};{e})", k(a)),
    }
}

/// Moving a twisted representative from (m + 2a)/2·α to m/2·α by β = aα flips
/// ε by ⟨β,β⟩/2 + ⟨m/2·α, β⟩ = a² + am (mod 2).
fn twisted_at(half_units: u8, e: u8) -> M {
    let m = half_units % 2;
    let a = half_units / 2;
    M::T(m, (e + a * a + a * m) % 2)
}

pub fn fuse(x: M, y: M) -> Vec<M> {
    use M::*;
    let mut out = match (x, y) {
        (D(a, e), D(b, f)) => vec![D((a + b) % 2, (e + f) % 2)],
        (D(..), N) | (N, D(..)) => vec![N],
        // λ=0, μ=1/2 against γ=0, δ=1/2: both λ+γ ≡ μ+δ and μ+γ ≡ λ+δ
        (N, N) => vec![D(0, 0), D(0, 1), D(1, 0), D(1, 1)],
        (N, T(g, _)) | (T(g, _), N) => vec![twisted_at(1 + g, 0), twisted_at(1 + g, 1)],
        (D(a, e), T(m, f)) | (T(m, f), D(a, e)) => vec![twisted_at(2 * a + m, e + f)],
        (T(a, e), T(b, f)) => {
            if a == b {
                // 2x ≡ aα (mod L): x ∈ {0, α/2}; β = (a - x)α, flip ⟨β,β⟩/2 + ⟨aα/2, β⟩
                (0..2u8)
                    .map(|xk| {
                        let beta = a as i32 - xk as i32;
                        let flip = (beta * beta + a as i32 * beta).rem_euclid(2) as u8;
                        D(xk, (e + f + flip) % 2)
                    })
                    .collect()
            } else {
                // (λ+μ)/2 = α/4 is not in L°; the only class {0, α/2} pairs up
                vec![N]
            }
        }
    };
    out.sort();
    out
}

/// `a x b = c1 + c2 + ...` lines for every ordered pair.
pub fn table_lines() -> Vec<String> {
    let ms = modules();
    let mut lines = Vec::new();
    for &a in &ms {
        for &b in &ms {
            let terms: Vec<String> = fuse(a, b).into_iter().map(name).collect();
            lines.push(format!("{} x {} = {}", name(a), name(b), terms.join(" + ")));
        }
    }
    lines
}

/// Associativity of the oracle's own table, as an internal consistency check.
pub fn is_associative() -> bool {
    let ms = modules();
    let mul = |xs: &BTreeMap<M, u32>, y: M| {
        let mut out = BTreeMap::new();
        for (&x, &n) in xs {
            for z in fuse(x, y) {
                *out.entry(z).or_insert(0) += n;
            }
        }
        out
    };
    for &a in &ms {
        for &b in &ms {
            for &c in &ms {
                let ab: BTreeMap<M, u32> = fuse(a, b).into_iter().map(|z| (z, 1)).collect();
                let lhs = mul(&ab, c);
                let mut rhs = BTreeMap::new();
                for f in fuse(b, c) {
                    for z in fuse(a, f) {
                        *rhs.entry(z).or_insert(0) += 1;
                    }
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}
