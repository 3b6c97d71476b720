use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::reduce::ReducedArrangement;
use crate::arrangement::LineArrangement;
use crate::error::Result;

/// What is being counted at each twist `lambda^j Frob`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    /// The Milnor fiber `Q = 1`.
    Fiber,
    /// The cone complement `Q != 0` in affine 3-space.
    Complement,
}

impl Target {
    /// Largest possible degree in `q` of the count.
    pub fn degree_bound(self) -> usize {
        match self {
            Target::Fiber => 2,
            Target::Complement => 3,
        }
    }
}

/// Points of `A^3(F_q)` sorted by the value of `Q`.
///
/// `class_counts[t]` counts points with `Q(x) != 0` and `log_g Q(x) = t mod d`;
/// `twisted[j]` is the number of fixed points of `lambda^j Frob` on the fiber.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountTable {
    pub q: u64,
    pub d: usize,
    pub class_counts: Vec<u64>,
    pub zero_count: u64,
    pub twisted: Vec<u64>,
}

impl CountTable {
    pub fn complement(&self) -> u64 {
        self.q.pow(3) - self.zero_count
    }

    /// Per-twist counts for `target`, indexed by `j`.
    pub fn target_counts(&self, target: Target) -> Vec<i64> {
        match target {
            Target::Fiber => self.twisted.iter().map(|&c| c as i64).collect(),
            // lambda^j Frob fixes exactly the F_q-points of the complement for every j
            Target::Complement => vec![self.complement() as i64; self.d],
        }
    }
}

/// Fixed points of `lambda^j Frob` on `Q = 1`.
///
/// They are `x = c y` with `c^{q-1} = zeta^{-j}`, i.e. `y` with `Q(y) = s` where
/// `s^{(q-1)/d} = zeta^j`; every class holds `(q-1)/d` values of `s`, each hit
/// equally often, so the count is `class_counts[j] * d / (q - 1)`.
pub fn twisted_counts(q: u64, class_counts: &[u64]) -> Vec<u64> {
    let d = class_counts.len() as u64;
    class_counts.iter().map(|&c| c * d / (q - 1)).collect()
}

/// Counts `A^3(F_q)` by scanning the projective plane; runs in the current rayon pool.
pub fn count_classes(a: &LineArrangement, q: u64) -> Result<CountTable> {
    let r = ReducedArrangement::new(a, q)?;
    Ok(count_reduced(&r))
}

pub fn count_reduced(r: &ReducedArrangement) -> CountTable {
    let f = r.field();
    let q = f.p();
    let d = r.degree();
    let log = f.log_table();
    let classify = |acc: &mut (Vec<u64>, u64), v: [u64; 3]| {
        let val = r.eval(v);
        if val == 0 {
            acc.1 += q - 1;
        } else {
            acc.0[log[val as usize] as usize % d] += q - 1;
        }
    };
    let merge = |mut a: (Vec<u64>, u64), b: (Vec<u64>, u64)| {
        a.0.iter_mut().zip(&b.0).for_each(|(x, y)| *x += y);
        a.1 += b.1;
        a
    };
    let empty = || (vec![0u64; d], 0u64);

    // [1:y:z] in parallel by y, then [0:1:z] and [0:0:1]
    let (mut classes, mut zero) = (0..q)
        .into_par_iter()
        .map(|y| {
            let mut acc = empty();
            for z in 0..q {
                classify(&mut acc, [1, y, z]);
            }
            acc
        })
        .reduce(empty, merge);
    let mut rest = empty();
    for z in 0..q {
        classify(&mut rest, [0, 1, z]);
    }
    classify(&mut rest, [0, 0, 1]);
    (classes, zero) = merge((classes, zero), rest);
    zero += 1;

    CountTable { q, d, twisted: twisted_counts(q, &classes), class_counts: classes, zero_count: zero }
}

/// Runs `f` on a dedicated pool of `threads` workers (`None`: rayon's default).
pub fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().expect("thread pool").install(f),
        None => f(),
    }
}
