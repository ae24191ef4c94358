//! Brute-force partition oracle.
//!
//! Enumerates constrained partitions, computes hook lengths from the Young
//! diagram, and counts `b_{t,k}(n)` and `d_3(n)` without touching any
//! generating function. Everything here is meant to disagree loudly with
//! [`crate::identities`] if either side is wrong.

use std::fmt;

use thiserror::Error;

/// Default largest `n` for exhaustive enumeration. Unrestricted partition
/// counts reach about 9e4 here; each step up costs roughly 4-5% more.
pub const DEFAULT_ORACLE_CEILING: usize = 45;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive and nonincreasing: {0:?}")]
    NotAPartition(Vec<u32>),
    #[error("{partition} is outside D3(n-1) for some n > 4: {reason}")]
    InvalidDomain { partition: Partition, reason: &'static str },
}

/// Nonincreasing sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p >= 1) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(PartitionError::NotAPartition(parts))
        }
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn largest(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn is_t_regular(&self, t: u32) -> bool {
        self.0.iter().all(|&p| p % t != 0)
    }

    pub fn is_distinct_min(&self, min: u32) -> bool {
        self.0.iter().all(|&p| p >= min) && self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn satisfies(&self, constraint: Constraint) -> bool {
        match constraint {
            Constraint::Unrestricted => true,
            Constraint::TRegular(t) => self.is_t_regular(t),
            Constraint::DistinctMin(m) => self.is_distinct_min(m),
        }
    }

    /// Column lengths of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.largest().unwrap_or(0) as usize;
        let mut cols = vec![0u32; width];
        for &p in &self.0 {
            for c in &mut cols[..p as usize] {
                *c += 1;
            }
        }
        Partition(cols)
    }

    /// Hook length of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for (j, &col) in conj.0[..row as usize].iter().enumerate() {
                let arm = row - j as u32 - 1;
                let leg = col - i as u32 - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    Unrestricted,
    /// No part divisible by `t` (`t >= 2`).
    TRegular(u32),
    /// Distinct parts, each at least `m` (`m >= 1`).
    DistinctMin(u32),
}

impl Constraint {
    fn allows(self, part: u32) -> bool {
        match self {
            Constraint::Unrestricted => part >= 1,
            Constraint::TRegular(t) => part >= 1 && !part.is_multiple_of(t),
            Constraint::DistinctMin(m) => part >= m,
        }
    }

    fn floor(self) -> u32 {
        match self {
            Constraint::DistinctMin(m) => m.max(1),
            _ => 1,
        }
    }

    /// Largest part allowed after choosing `part` with `rest` left to fill.
    fn next_cap(self, part: u32, rest: u32) -> u32 {
        match self {
            Constraint::DistinctMin(_) => (part - 1).min(rest),
            _ => part.min(rest),
        }
    }
}

#[derive(Debug, Clone)]
struct Frame {
    rest: u32,
    cand: u32,
}

/// Depth-first stream over the partitions of `n` meeting a constraint, in
/// lexicographically decreasing order.
#[derive(Debug, Clone)]
pub struct Partitions {
    constraint: Constraint,
    parts: Vec<u32>,
    frames: Vec<Frame>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let floor = self.constraint.floor();
        loop {
            let top = self.frames.last_mut()?;
            if top.rest == 0 {
                let out = Partition(self.parts.clone());
                self.frames.pop();
                self.parts.pop();
                return Some(out);
            }
            let mut c = top.cand;
            while c >= floor && !self.constraint.allows(c) {
                c -= 1;
            }
            if c < floor {
                self.frames.pop();
                self.parts.pop();
                continue;
            }
            top.cand = c - 1;
            let rest = top.rest - c;
            let cand = self.constraint.next_cap(c, rest);
            self.parts.push(c);
            self.frames.push(Frame { rest, cand });
        }
    }
}

pub fn enumerate(n: usize, constraint: Constraint) -> Partitions {
    match constraint {
        Constraint::TRegular(t) => assert!(t >= 2, "t-regular needs t >= 2"),
        Constraint::DistinctMin(m) => assert!(m >= 1, "distinct_min needs m >= 1"),
        Constraint::Unrestricted => {}
    }
    let n = u32::try_from(n).expect("n fits in u32");
    Partitions {
        constraint,
        parts: Vec::new(),
        frames: vec![Frame { rest: n, cand: n }],
    }
}

/// Brute-force values `b_{t,k}(0..=n_max)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookCountTable {
    pub t: u32,
    pub k: u32,
    pub values: Vec<u64>,
}

impl HookCountTable {
    pub fn brute(t: u32, k: u32, n_max: usize) -> Self {
        hook_count_tables(t, &[k], n_max).pop().expect("one table per k")
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }
}

/// One enumeration pass over the t-regular partitions of `0..=n_max`, counting
/// several hook lengths at once.
pub fn hook_count_tables(t: u32, ks: &[u32], n_max: usize) -> Vec<HookCountTable> {
    assert!(ks.iter().all(|&k| k >= 1), "hook lengths start at 1");
    let mut tables: Vec<HookCountTable> = ks
        .iter()
        .map(|&k| HookCountTable {
            t,
            k,
            values: vec![0; n_max + 1],
        })
        .collect();
    for n in 0..=n_max {
        for p in enumerate(n, Constraint::TRegular(t)) {
            for h in p.hook_lengths() {
                for table in tables.iter_mut().filter(|tb| tb.k == h) {
                    table.values[n] += 1;
                }
            }
        }
    }
    tables
}

pub fn count_hooks_brute(t: u32, k: u32, n: usize) -> u64 {
    enumerate(n, Constraint::TRegular(t))
        .map(|p| p.hook_lengths().iter().filter(|&&h| h == k).count() as u64)
        .sum()
}

/// Distinct parts, all at least 3. `d3_brute(0) == 1`.
pub fn d3_brute(n: usize) -> u64 {
    enumerate(n, Constraint::DistinctMin(3)).count() as u64
}

/// Delete the largest part of `p` in `D3(n-1)`; the single-part partition
/// `(n-1)` goes to the empty partition in `D3(0)`.
///
/// Returns `(i, image)` with `image` in `D3(i)`.
pub fn injection(p: &Partition) -> Result<(usize, Partition), PartitionError> {
    if !p.is_distinct_min(3) {
        return Err(PartitionError::InvalidDomain {
            partition: p.clone(),
            reason: "parts must be distinct and at least 3",
        });
    }
    // n > 4 means |p| = n - 1 >= 4
    if p.size() < 4 {
        return Err(PartitionError::InvalidDomain {
            partition: p.clone(),
            reason: "total must be n - 1 with n > 4",
        });
    }
    if p.len() == 1 {
        return Ok((0, Partition::empty()));
    }
    let rest = Partition(p.0[1..].to_vec());
    Ok((rest.size(), rest))
}
