//! Independent brute-force oracles shared by the integration tests.
//!
//! Nothing here calls into the enumeration or canonical-form code of the
//! crate; tables are plain `Vec<usize>` in row-major order.
#![allow(dead_code)]

use std::collections::BTreeSet;

pub type Table = Vec<usize>;

fn symmetric_tables(n: usize, zero_row: impl Fn(usize) -> usize) -> Vec<Table> {
    let free: Vec<(usize, usize)> = (1..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    let total = n.pow(free.len() as u32);
    for code in 0..total {
        let mut t = vec![0; n * n];
        for a in 0..n {
            t[a] = zero_row(a);
            t[a * n] = zero_row(a);
        }
        let mut c = code;
        for &(a, b) in &free {
            t[a * n + b] = c % n;
            t[b * n + a] = c % n;
            c /= n;
        }
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|d| t[t[a * n + b] * n + d] == t[a * n + t[b * n + d]]))
        });
        if assoc {
            out.push(t);
        }
    }
    out
}

/// Every `(add, mul, one)` on `{0..n-1}` with `0` the additive identity,
/// both operations commutative and associative, `0` absorbing, `·`
/// distributing over `+`, and some multiplicative identity.
pub fn all_labeled(n: usize) -> Vec<(Table, Table, usize)> {
    let adds = symmetric_tables(n, |a| a);
    let muls = symmetric_tables(n, |_| 0);
    let mut out = Vec::new();
    for add in &adds {
        for mul in &muls {
            let distributes = (0..n).all(|a| {
                (0..n).all(|b| {
                    (0..n).all(|c| {
                        mul[a * n + add[b * n + c]] == add[mul[a * n + b] * n + mul[a * n + c]]
                    })
                })
            });
            if !distributes {
                continue;
            }
            if let Some(one) = (0..n).find(|&e| (0..n).all(|a| mul[e * n + a] == a)) {
                out.push((add.clone(), mul.clone(), one));
            }
        }
    }
    out
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Least relabelled `(add ++ mul)` over bijections fixing `0`.
pub fn canonical(n: usize, add: &Table, mul: &Table) -> Vec<usize> {
    let rest: Vec<usize> = (1..n).collect();
    permutations(&rest)
        .into_iter()
        .map(|p| {
            let mut perm = vec![0];
            perm.extend(p);
            let mut inv = vec![0; n];
            for (i, &x) in perm.iter().enumerate() {
                inv[x] = i;
            }
            let mut form = Vec::with_capacity(2 * n * n);
            for t in [add, mul] {
                for a in 0..n {
                    for b in 0..n {
                        form.push(perm[t[inv[a] * n + inv[b]]]);
                    }
                }
            }
            form
        })
        .min()
        .expect("at least the identity permutation")
}

pub fn count_up_to_iso(n: usize) -> usize {
    all_labeled(n)
        .iter()
        .map(|(a, m, _)| canonical(n, a, m))
        .collect::<BTreeSet<_>>()
        .len()
}

/// `√a` by powers, straight from the tables.
pub fn naive_radical(n: usize, mul: &Table, members: &BTreeSet<usize>) -> BTreeSet<usize> {
    (0..n)
        .filter(|&x| {
            let mut p = x;
            (0..n).any(|_| {
                let hit = members.contains(&p);
                p = mul[p * n + x];
                hit
            })
        })
        .collect()
}

/// All ideals of a table pair: nonempty sets containing 0, closed under
/// `+` and absorbing `·`, the whole set included.
pub fn naive_ideals(n: usize, add: &Table, mul: &Table) -> Vec<BTreeSet<usize>> {
    (0u32..(1 << n))
        .filter(|bits| bits & 1 == 1)
        .map(|bits| {
            (0..n)
                .filter(|i| bits >> i & 1 == 1)
                .collect::<BTreeSet<_>>()
        })
        .filter(|s| {
            s.iter()
                .all(|&a| s.iter().all(|&b| s.contains(&add[a * n + b])))
                && s.iter()
                    .all(|&a| (0..n).all(|r| s.contains(&mul[r * n + a])))
        })
        .collect()
}

pub fn naive_is_prime(n: usize, mul: &Table, p: &BTreeSet<usize>) -> bool {
    p.len() < n
        && (0..n).all(|a| {
            (0..n).all(|b| !p.contains(&mul[a * n + b]) || p.contains(&a) || p.contains(&b))
        })
}
