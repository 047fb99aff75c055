//! Fixed-width bitset used for dense adjacency rows.

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(bits: usize) -> Self {
        BitSet { words: vec![0; bits.div_ceil(64)] }
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn intersection(&self, other: &BitSet) -> impl Iterator<Item = usize> + '_ {
        let other = other.words.clone();
        self.words.iter().zip(other).enumerate().flat_map(|(w, (a, b))| {
            let mut bits = a & b;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + t)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intersections() {
        let mut a = BitSet::new(130);
        let mut b = BitSet::new(130);
        for i in [1, 64, 100, 129] {
            a.insert(i);
        }
        for i in [1, 65, 100, 129] {
            b.insert(i);
        }
        assert_eq!(a.intersection_count(&b), 3);
        assert_eq!(a.intersection(&b).collect::<Vec<_>>(), vec![1, 100, 129]);
        assert!(a.contains(64) && !b.contains(64));
    }
}
