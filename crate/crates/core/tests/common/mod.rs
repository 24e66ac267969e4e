//! Test-only oracles, independent of the library's linear algebra and search.

#![allow(dead_code)]

use rado_core::{Rat, RatMatrix};

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Rank of a small integer matrix by cross-multiplying elimination, each row
/// divided by its content to keep entries small.
pub fn int_rank(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let (nr, nc) = (m.len(), m.first().map_or(0, Vec::len));
    let mut rank = 0;
    for c in 0..nc {
        let Some(p) = (rank..nr).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..nr {
            let (piv, cur) = (m[rank][c], m[i][c]);
            if cur == 0 {
                continue;
            }
            for j in 0..nc {
                m[i][j] = piv * m[i][j] - cur * m[rank][j];
            }
            let g = m[i].iter().fold(0, |g, &x| gcd(g, x));
            if g > 1 {
                m[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

/// Whether `target` lies in the span of the columns listed in `used`.
fn in_span(a: &[Vec<i64>], used: &[usize], target: &[i128]) -> bool {
    let u = a.len();
    let base: Vec<Vec<i128>> = (0..u).map(|i| used.iter().map(|&j| a[i][j] as i128).collect()).collect();
    let aug: Vec<Vec<i128>> = (0..u)
        .map(|i| {
            let mut r = base[i].clone();
            r.push(target[i]);
            r
        })
        .collect();
    int_rank(&base) == int_rank(&aug)
}

/// Enumerates every ordered set partition of the columns, block by block,
/// with no memoization. A partial partition is abandoned as soon as its last
/// block violates the definition.
pub fn naive_columns_condition(a: &[Vec<i64>], v: usize) -> bool {
    fn go(a: &[Vec<i64>], v: usize, used: &mut Vec<usize>) -> bool {
        if used.len() == v {
            return true;
        }
        let rest: Vec<usize> = (0..v).filter(|j| !used.contains(j)).collect();
        for pick in 1u32..1 << rest.len() {
            let block: Vec<usize> = (0..rest.len()).filter(|b| pick >> b & 1 == 1).map(|b| rest[b]).collect();
            let sum: Vec<i128> = (0..a.len())
                .map(|i| block.iter().map(|&j| a[i][j] as i128).sum())
                .collect();
            let ok = if used.is_empty() {
                sum.iter().all(|&s| s == 0)
            } else {
                in_span(a, used, &sum)
            };
            if !ok {
                continue;
            }
            let len = used.len();
            used.extend(&block);
            if go(a, v, used) {
                return true;
            }
            used.truncate(len);
        }
        false
    }
    v > 0 && go(a, v, &mut Vec::new())
}

pub fn to_matrix(a: &[Vec<i64>]) -> RatMatrix {
    RatMatrix::from_rows(a.iter().cloned()).unwrap()
}

pub fn rat(s: &str) -> Rat {
    s.parse().unwrap()
}
