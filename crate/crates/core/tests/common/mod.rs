#![allow(dead_code)]

use milnorhodge::arrangement::{Builtin, LineArrangement};
use milnorhodge::pointcount::PrimeField;
use proptest::prelude::*;
use std::collections::BTreeMap;

/// Counts `A^3(F_q)` by value class of `Q` directly, one point at a time.
///
/// Returns `(class_counts, zero_count)`; classes are found by Euler's criterion.
pub fn brute_force_classes(a: &LineArrangement, q: u64) -> (Vec<u64>, u64) {
    let d = a.degree() as u64;
    let g = PrimeField::new(q).unwrap().generator();
    let pw = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= q;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % q;
            }
            b = b * b % q;
            e >>= 1;
        }
        r
    };
    let g_inv = pw(g, q - 2);
    let eval = |x: u64, y: u64, z: u64| -> u64 {
        match a.as_builtin() {
            Some(Builtin::Ceva) => {
                let (x3, y3, z3) = (pw(x, 3) as i128, pw(y, 3) as i128, pw(z, 3) as i128);
                let qq = q as i128;
                ((x3 - y3) * (x3 - z3) % qq * (y3 - z3)).rem_euclid(qq) as u64
            }
            None => a.lines().unwrap().iter().fold(1i128, |acc, l| {
                let c = l.coeffs();
                let v = (c[0] as i128 * x as i128 + c[1] as i128 * y as i128 + c[2] as i128 * z as i128)
                    .rem_euclid(q as i128);
                acc * v % q as i128
            }) as u64,
        }
    };
    let mut classes = vec![0u64; d as usize];
    let mut zero = 0;
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let v = eval(x, y, z);
                if v == 0 {
                    zero += 1;
                    continue;
                }
                let mut w = v;
                let t = (0..d).find(|_| {
                    let hit = pw(w, (q - 1) / d) == 1;
                    if !hit {
                        w = w * g_inv % q;
                    }
                    hit
                });
                classes[t.unwrap() as usize] += 1;
            }
        }
    }
    (classes, zero)
}

/// A random census `m_k` for `d` lines that covers every pair once (not necessarily realizable).
pub fn weak_census() -> impl Strategy<Value = (usize, BTreeMap<usize, usize>)> {
    (3usize..=12).prop_flat_map(|d| {
        let total = d * (d - 1) / 2;
        (Just(d), prop::collection::vec((3usize..=d, 0usize..3), 0..4)).prop_map(move |(d, picks)| {
            let mut m = BTreeMap::new();
            let mut used = 0;
            for (k, c) in picks {
                for _ in 0..c {
                    let pairs = k * (k - 1) / 2;
                    if used + pairs <= total {
                        used += pairs;
                        *m.entry(k).or_insert(0) += 1;
                    }
                }
            }
            if total > used {
                *m.entry(2).or_insert(0) += total - used;
            }
            (d, m)
        })
    })
}

/// Distinct rational lines with small coefficients.
pub fn small_arrangement() -> impl Strategy<Value = LineArrangement> {
    prop::collection::vec(prop::array::uniform3(-3i64..=3), 3..=6)
        .prop_filter_map("degenerate", |forms| LineArrangement::rational(&forms).ok())
}
