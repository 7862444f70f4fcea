//! Independent reference implementations, deliberately naive and sharing no
//! code with the library.

#![allow(dead_code)]

use std::collections::BTreeMap;

/// All restricted-growth strings of `len` (canonical relabelings).
pub fn restricted_growth_strings(len: usize) -> Vec<Vec<u8>> {
    fn go(prefix: &mut Vec<u8>, next: u8, len: usize, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for s in 0..=next {
            prefix.push(s);
            go(prefix, if s == next { next + 1 } else { next }, len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 0, len, &mut out);
    out
}

/// Both pattern conditions checked literally, quadratic in the length.
pub fn naive_is_capp(seq: &[u8]) -> bool {
    let even_in = |window: &[u8]| {
        window
            .iter()
            .all(|s| window.iter().filter(|t| *t == s).count() % 2 == 0)
    };
    if !even_in(seq) {
        return false;
    }
    for i in 0..seq.len() {
        if let Some(off) = seq[i + 1..].iter().position(|&t| t == seq[i]) {
            if !even_in(&seq[i + 1..i + 1 + off]) {
                return false;
            }
        }
    }
    true
}

/// Walks the pattern on an explicit tree. Returns the edges as vertex pairs in
/// first-traversal order, or `None` if the walk is not a tree walk returning
/// to the root.
pub fn walk_tree(seq: &[u8]) -> Option<Vec<(usize, usize)>> {
    let mut edges: BTreeMap<u8, (usize, usize)> = BTreeMap::new();
    let mut order = Vec::new();
    let mut at = 0usize;
    let mut vertices = 1usize;
    for &s in seq {
        match edges.get(&s) {
            None => {
                edges.insert(s, (at, vertices));
                order.push(s);
                at = vertices;
                vertices += 1;
            }
            Some(&(a, b)) => {
                if at == a {
                    at = b;
                } else if at == b {
                    at = a;
                } else {
                    return None;
                }
            }
        }
    }
    (at == 0).then(|| order.iter().map(|s| edges[s]).collect())
}

pub fn naive_roots(seq: &[u8]) -> Vec<u32> {
    let edges = walk_tree(seq).expect("tree walk");
    (0..edges.len())
        .map(|j| {
            let (a, b) = edges[j];
            edges[..j]
                .iter()
                .filter(|&&(c, e)| c == a || c == b || e == a || e == b)
                .count() as u32
        })
        .collect()
}

/// Sorted multiset of symbol counts.
pub fn naive_class(seq: &[u8]) -> Vec<u32> {
    let mut counts: BTreeMap<u8, u32> = BTreeMap::new();
    for &s in seq {
        *counts.entry(s).or_default() += 1;
    }
    let mut v: Vec<u32> = counts.into_values().collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

pub fn naive_capps(len: usize) -> Vec<Vec<u8>> {
    restricted_growth_strings(len)
        .into_iter()
        .filter(|s| naive_is_capp(s))
        .collect()
}

/// Small exact fraction over `i128`, enough for the orders checked here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Frac {
    pub num: i128,
    pub den: i128,
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl Frac {
    pub fn new(num: i128, den: i128) -> Self {
        let g = gcd(num, den).max(1) * den.signum();
        Frac {
            num: num / g,
            den: den / g,
        }
    }
    pub fn add(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den + o.num * self.den, self.den * o.den)
    }
    pub fn mul(self, o: Frac) -> Frac {
        Frac::new(self.num * o.num, self.den * o.den)
    }
}

fn m_at(roots: &[u32], d: i128) -> i128 {
    roots.iter().map(|&a| d - a as i128).product()
}

/// `sum_pi m_pi(d) prod mu(n_i)` over the naive pattern list.
pub fn naive_expansion(len: usize, d: i128, mu: &dyn Fn(u32) -> Frac, skip_single: bool) -> Frac {
    let mut total = Frac::new(0, 1);
    for p in naive_capps(len) {
        let class = naive_class(&p);
        if skip_single && class.len() == 1 {
            continue;
        }
        let weight = class.iter().fold(Frac::new(1, 1), |acc, &n| acc.mul(mu(n)));
        total = total.add(weight.mul(Frac::new(m_at(&naive_roots(&p), d), 1)));
    }
    total
}

/// Eigenmoments by the direct recursion over the naive pattern lists.
pub fn naive_eigenmoments(d: i128, max_order: usize) -> Vec<Frac> {
    // even[i] = mu(2i)
    let mut even = vec![Frac::new(1, 1), Frac::new(1, 4)];
    for order in (4..=max_order).step_by(2) {
        let known = even.clone();
        let mu = move |n: u32| {
            if n % 2 == 1 {
                Frac::new(0, 1)
            } else {
                known[n as usize / 2]
            }
        };
        let sum = naive_expansion(order, d, &mu, true);
        let k = (order / 2) as u32;
        let scale = d.pow(k) - d;
        even.push(sum.mul(Frac::new(1, scale)));
    }
    even
}

/// Ordered pairs of adjacent edges in all-2 patterns, first-traversal order.
pub fn naive_triple_count(len: usize) -> usize {
    naive_capps(len)
        .iter()
        .filter(|p| naive_class(p).iter().all(|&n| n == 2))
        .map(|p| {
            let edges = walk_tree(p).unwrap();
            let mut count = 0;
            for j in 0..edges.len() {
                for i in 0..j {
                    let (a, b) = edges[i];
                    let (c, e) = edges[j];
                    if a == c || a == e || b == c || b == e {
                        count += 1;
                    }
                }
            }
            count
        })
        .sum()
}

/// `C(n, k)` as `u128`.
pub fn choose(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}
