//! Built-in groups used by the instance generator and the CLI.

use super::FiniteGroup;
use crate::error::{Error, Result};

/// Names accepted by [`by_name`], in catalog order.
pub const NAMES: [&str; 11] = ["Z2", "Z3", "Z4", "Z2xZ2", "Z6", "S3", "D4", "Q8", "D6", "Z8", "Z2xZ4"];

fn build(n: usize, mul: impl Fn(usize, usize) -> usize) -> FiniteGroup {
    let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
    FiniteGroup::from_table(&rows).expect("catalog tables are groups")
}

/// `Z/n`, element `k` is the residue `k`.
pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n > 0);
    build(n, |a, b| (a + b) % n)
}

/// `A x B`, element `(a, b)` is `a * |B| + b`.
pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
    let m = b.order();
    build(a.order() * m, |x, y| a.mul(x / m, y / m) * m + b.mul(x % m, y % m))
}

/// Dihedral group of order `2n`; `r^k s^e` is `k + n * e`.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    build(2 * n, |x, y| {
        let (k, e) = (x % n, x / n);
        let (l, f) = (y % n, y / n);
        let rot = if e == 0 { (k + l) % n } else { (k + n - l) % n };
        rot + n * ((e + f) % 2)
    })
}

/// Permutations of three letters in lexicographic order, composed as functions.
pub fn symmetric3() -> FiniteGroup {
    const P: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let idx = |p: [usize; 3]| P.iter().position(|q| *q == p).unwrap();
    build(6, |a, b| {
        let (p, q) = (P[a], P[b]);
        idx([p[q[0]], p[q[1]], p[q[2]]])
    })
}

/// Quaternion group; `+-1, +-i, +-j, +-k` is `unit + 4 * sign`.
pub fn quaternion() -> FiniteGroup {
    // unit products among 1, i, j, k as (unit, sign)
    const M: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    build(8, |x, y| {
        let (u, s) = M[x % 4][y % 4];
        u + 4 * ((s + x / 4 + y / 4) % 2)
    })
}

pub fn by_name(name: &str) -> Result<FiniteGroup> {
    Ok(match name {
        "Z2" => cyclic(2),
        "Z3" => cyclic(3),
        "Z4" => cyclic(4),
        "Z2xZ2" => product(&cyclic(2), &cyclic(2)),
        "Z6" => cyclic(6),
        "S3" => symmetric3(),
        "D4" => dihedral(4),
        "Q8" => quaternion(),
        "D6" => dihedral(6),
        "Z8" => cyclic(8),
        "Z2xZ4" => product(&cyclic(2), &cyclic(4)),
        _ => return Err(Error::UnknownGroup(name.to_string())),
    })
}

/// Every catalog group with its name.
pub fn all() -> Vec<(&'static str, FiniteGroup)> {
    NAMES.iter().map(|&n| (n, by_name(n).unwrap())).collect()
}
