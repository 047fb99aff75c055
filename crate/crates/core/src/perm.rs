//! Permutations in one-line notation, composed left to right.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A bijection on `{1..n}` stored as its one-line images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty image list".into()));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection on 1..{n}")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The transposition `(i, j)` on `{1..n}`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::cycle(n, &[i, j])
    }

    /// The cycle `(c0, c1, ..., cm)`: c0 maps to c1, and so on.
    pub fn cycle(n: usize, points: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n + 1];
        for &p in points {
            if p == 0 || p > n || seen[p] {
                return Err(Error::InvalidPermutation(format!("cycle {points:?} is not a cycle on 1..{n}")));
            }
            seen[p] = true;
        }
        for (idx, &p) in points.iter().enumerate() {
            images[p - 1] = points[(idx + 1) % points.len()];
        }
        Permutation::new(images)
    }

    /// Parses a label such as `2314` or `10,2,3,4,5,6,7,8,9,1`.
    pub fn from_one_line(label: &str) -> Result<Self> {
        let images: Option<Vec<usize>> = if label.contains(',') {
            label.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            label.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let images = images.ok_or_else(|| Error::InvalidPermutation(format!("bad label {label:?}")))?;
        Permutation::new(images)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of point `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// Parity from the cycle decomposition: n minus the number of cycles.
    pub fn parity(&self) -> Parity {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i] - 1;
            }
        }
        if (n - cycles).is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    pub fn label(&self) -> String {
        if self.n() > 9 {
            let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
            parts.join(",")
        } else {
            self.images.iter().map(|v| char::from(b'0' + *v as u8)).collect()
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Applies `a` first, then `b`: the result sends `i` to `b(a(i))`.
pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch { left: a.n(), right: b.n() });
    }
    Ok(compose_unchecked(a, b))
}

fn compose_unchecked(a: &Permutation, b: &Permutation) -> Permutation {
    Permutation { images: a.images.iter().map(|&v| b.images[v - 1]).collect() }
}

/// A Cayley generating set: identity-free, inverse-closed, single ground size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    elements: Vec<Permutation>,
    ground_n: usize,
}

impl GeneratorSet {
    pub fn new(elements: Vec<Permutation>) -> Result<Self> {
        let Some(first) = elements.first() else {
            return Err(Error::InvalidGenerator("empty generating set".into()));
        };
        let ground_n = first.n();
        let mut elements = elements;
        elements.sort();
        elements.dedup();
        for s in &elements {
            if s.n() != ground_n {
                return Err(Error::InvalidGenerator(format!("{s} has ground size {} but expected {ground_n}", s.n())));
            }
            if s.is_identity() {
                return Err(Error::InvalidGenerator("identity is a member".into()));
            }
        }
        for s in &elements {
            if elements.binary_search(&s.inverse()).is_err() {
                return Err(Error::InvalidGenerator(format!("inverse of {s} is missing")));
            }
        }
        Ok(GeneratorSet { elements, ground_n })
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn ground_n(&self) -> usize {
        self.ground_n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }
}

/// All of `Ω_n` in lexicographic order, refusing `n` above `cap`.
pub fn enumerate_symmetric_with_cap(n: usize, cap: usize) -> Result<Vec<Permutation>> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    if n > cap {
        return Err(Error::Budget(format!("symmetric group of degree {n} exceeds cap {cap}")));
    }
    let mut current: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation { images: current.clone() });
        if !next_lexicographic(&mut current) {
            break;
        }
    }
    Ok(out)
}

pub fn enumerate_symmetric(n: usize) -> Result<Vec<Permutation>> {
    enumerate_symmetric_with_cap(n, crate::budget::DEFAULT_MAX_PERM_N)
}

pub fn enumerate_alternating_with_cap(n: usize, cap: usize) -> Result<Vec<Permutation>> {
    if n < 3 {
        return Err(Error::Domain(format!("alternating group needs n >= 3, got {n}")));
    }
    Ok(enumerate_symmetric_with_cap(n, cap)?.into_iter().filter(Permutation::is_even).collect())
}

pub fn enumerate_alternating(n: usize) -> Result<Vec<Permutation>> {
    enumerate_alternating_with_cap(n, crate::budget::DEFAULT_MAX_PERM_N)
}

/// Advances to the next permutation in lexicographic order.
pub(crate) fn next_lexicographic(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Cayley graph: `x ~ y` iff `compose(inverse(x), y)` is a generator, i.e. `y = compose(x, s)`.
pub fn cayley_graph(elements: &[Permutation], s: &GeneratorSet) -> Result<Graph> {
    let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
    if index.len() != elements.len() {
        return Err(Error::Closure("duplicate elements".into()));
    }
    let mut edges = Vec::with_capacity(elements.len() * s.len() / 2);
    for (i, x) in elements.iter().enumerate() {
        if x.n() != s.ground_n() {
            return Err(Error::SizeMismatch { left: x.n(), right: s.ground_n() });
        }
        for g in s.elements() {
            let y = compose_unchecked(x, g);
            let j = *index.get(&y).ok_or_else(|| Error::Closure(format!("{x} * {g} = {y} is not an element")))?;
            if i < j {
                edges.push((i, j));
            }
        }
    }
    let labels = elements.iter().map(Permutation::label).collect();
    Graph::new(labels, edges)
}
