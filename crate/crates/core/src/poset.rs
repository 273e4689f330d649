//! Partial orders on a ground set `0..n` (n ≤ 64) and their lower order ideals.
//!
//! Elements are 0-based in the API. JSON and `Display` output use the
//! conventional labels `1..=n`.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

pub const MAX_POSET_SIZE: usize = 64;

/// A downward-closed subset, stored as a bitset over the ground set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal(u64);

impl Ideal {
    pub const EMPTY: Ideal = Ideal(0);

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn is_subset(self, other: Ideal) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Ideal) -> Ideal {
        Ideal(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.0 >> i & 1 == 1)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "}}")
    }
}

/// Serialized as the sorted 1-based member list.
impl serde::Serialize for Ideal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|i| i + 1))
    }
}

/// A partial order stored as its full down-set table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poset {
    n: usize,
    // down[j] has bit i set iff i ≤ j
    down: Vec<u64>,
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Poset {
    pub fn antichain(n: usize) -> Poset {
        assert!(n <= MAX_POSET_SIZE);
        Poset {
            n,
            down: (0..n).map(|i| 1u64 << i).collect(),
        }
    }

    /// The total order 0 < 1 < .. < n-1.
    pub fn chain(n: usize) -> Poset {
        assert!(n <= MAX_POSET_SIZE);
        Poset {
            n,
            down: (0..n).map(|i| full_mask(i + 1)).collect(),
        }
    }

    /// Reflexive-transitive closure of the given cover pairs `(lower, upper)`.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Poset> {
        if n > MAX_POSET_SIZE {
            return Err(Error::PosetTooLarge(n));
        }
        let mut down: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for &(i, j) in covers {
            for x in [i, j] {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, n });
                }
            }
            if i == j {
                return Err(Error::CycleDetected(i));
            }
            down[j] |= 1 << i;
        }
        // Warshall over bitsets: if k ≤ j then everything below k is below j.
        for k in 0..n {
            for j in 0..n {
                if down[j] >> k & 1 == 1 {
                    down[j] |= down[k];
                }
            }
        }
        for j in 0..n {
            for i in 0..n {
                if i != j && down[j] >> i & 1 == 1 && down[i] >> j & 1 == 1 {
                    return Err(Error::CycleDetected(i.min(j)));
                }
            }
        }
        Ok(Poset { n, down })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// `i ≤ j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.down[j] >> i & 1 == 1
    }

    pub fn down_set(&self, j: usize) -> u64 {
        self.down[j]
    }

    pub fn ground(&self) -> Ideal {
        Ideal(full_mask(self.n))
    }

    /// Cover relations `(i, j)`: i < j with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..self.n {
            let strict = self.down[j] & !(1u64 << j);
            for i in (0..self.n).filter(|&i| strict >> i & 1 == 1) {
                let between = strict & !(1u64 << i);
                let blocked = (0..self.n).any(|c| between >> c & 1 == 1 && self.leq(i, c));
                if !blocked {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&j| self.down[j] == 1u64 << j).collect()
    }

    /// Smallest ideal containing the elements of `mask`.
    pub fn ideal_of_mask(&self, mask: u64) -> Ideal {
        let mut out = 0u64;
        let mut m = mask & full_mask(self.n);
        while m != 0 {
            let j = m.trailing_zeros() as usize;
            out |= self.down[j];
            m &= m - 1;
        }
        Ideal(out)
    }

    /// `{x : x ≤ a for some a in elems}`.
    pub fn ideal_generated<I: IntoIterator<Item = usize>>(&self, elems: I) -> Result<Ideal> {
        let mut mask = 0u64;
        for a in elems {
            if a >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: a,
                    n: self.n,
                });
            }
            mask |= 1 << a;
        }
        Ok(self.ideal_of_mask(mask))
    }

    pub fn is_ideal(&self, mask: u64) -> bool {
        mask & !full_mask(self.n) == 0 && self.ideal_of_mask(mask).0 == mask
    }

    /// Wraps `mask` as an `Ideal` if it is downward closed.
    pub fn ideal(&self, mask: u64) -> Option<Ideal> {
        self.is_ideal(mask).then_some(Ideal(mask))
    }

    /// Every ideal, ascending by bitset value.
    pub fn ideals(&self) -> Vec<Ideal> {
        self.collect_ideals(None)
    }

    /// Every ideal with exactly `k` elements, ascending by bitset value.
    pub fn ideals_of_size(&self, k: usize) -> impl Iterator<Item = Ideal> {
        let v = if k > self.n {
            Vec::new()
        } else {
            self.collect_ideals(Some(k))
        };
        v.into_iter()
    }

    fn collect_ideals(&self, size: Option<usize>) -> Vec<Ideal> {
        // Branch on elements in a linear extension: element j may join only
        // once its strict down-set is present.
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&j| self.down[j].count_ones());
        let mut out = Vec::new();
        self.ideals_rec(&order, 0, 0, size, &mut out);
        out.sort_unstable();
        out
    }

    fn ideals_rec(
        &self,
        order: &[usize],
        pos: usize,
        cur: u64,
        size: Option<usize>,
        out: &mut Vec<Ideal>,
    ) {
        let have = cur.count_ones() as usize;
        if let Some(k) = size {
            if have > k || have + (order.len() - pos) < k {
                return;
            }
        }
        if pos == order.len() {
            if size.is_none_or(|k| k == have) {
                out.push(Ideal(cur));
            }
            return;
        }
        let j = order[pos];
        self.ideals_rec(order, pos + 1, cur, size, out);
        let strict = self.down[j] & !(1u64 << j);
        if strict & !cur == 0 {
            self.ideals_rec(order, pos + 1, cur | 1 << j, size, out);
        }
    }

    /// Every labeled poset on `0..n`, each exactly once (n ≤ 6).
    pub fn all_labeled(n: usize) -> Vec<Poset> {
        assert!(n <= 6, "labeled poset enumeration is limited to n <= 6");
        let mut level = vec![Poset {
            n: 0,
            down: Vec::new(),
        }];
        for k in 0..n {
            let mut next = Vec::new();
            for p in &level {
                let ideals = p.ideals();
                let all = full_mask(k);
                for &below in &ideals {
                    for &rest in &ideals {
                        // Elements above the new one form the filter `all \ rest`.
                        let above = all & !rest.0;
                        if above & below.0 != 0 {
                            continue;
                        }
                        let ok = (0..k)
                            .filter(|&u| above >> u & 1 == 1)
                            .all(|u| below.0 & !p.down[u] == 0);
                        if !ok {
                            continue;
                        }
                        let mut down = p.down.clone();
                        let new_down = below.0 | 1 << k;
                        for (u, d) in down.iter_mut().enumerate() {
                            if above >> u & 1 == 1 {
                                *d |= new_down;
                            }
                        }
                        down.push(new_down);
                        next.push(Poset { n: k + 1, down });
                    }
                }
            }
            level = next;
        }
        level
    }

    /// A random poset: relations are sampled along a random linear order
    /// with a random density, then closed transitively.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Poset {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let density: f64 = rng.random_range(0.0..0.7);
        let mut covers = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.random_bool(density) {
                    covers.push((perm[a], perm[b]));
                }
            }
        }
        Poset::from_covers(n, &covers).expect("relations follow a linear order")
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poset on [{}] with covers [", self.n)?;
        for (k, (i, j)) in self.covers().into_iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}<{}", i + 1, j + 1)?;
        }
        write!(f, "]")
    }
}
