use std::fmt;

/// Fixed-universe bit set over `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    universe: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            words: vec![0; universe.div_ceil(64)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self {
            universe,
            words: vec![u64::MAX; universe.div_ceil(64)],
        };
        s.clear_tail();
        s
    }

    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    fn clear_tail(&mut self) {
        let rem = self.universe % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.universe, "bit {i} outside universe {}", self.universe);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.universe {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.universe && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_proper_subset(&self, other: &BitSet) -> bool {
        self.is_subset(other) && self != other
    }

    /// True when both sets agree on every element below `bound`.
    pub fn agrees_below(&self, other: &BitSet, bound: usize) -> bool {
        let bound = bound.min(self.universe);
        let full_words = bound / 64;
        if self.words[..full_words] != other.words[..full_words] {
            return false;
        }
        let rem = bound % 64;
        if rem == 0 {
            return true;
        }
        let mask = (1u64 << rem) - 1;
        (self.words[full_words] ^ other.words[full_words]) & mask == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + tz)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lectic comparison: the smaller set is the one lacking the least
    /// element of the symmetric difference.
    pub fn lectic_cmp(&self, other: &BitSet) -> std::cmp::Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let low = diff & diff.wrapping_neg();
                return if a & low != 0 {
                    std::cmp::Ordering::Greater
                } else {
                    std::cmp::Ordering::Less
                };
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn full_respects_universe() {
        assert_eq!(BitSet::full(70).len(), 70);
        assert_eq!(BitSet::full(0).len(), 0);
        assert_eq!(BitSet::full(64).len(), 64);
    }

    #[test]
    fn lectic_order_on_three_elements() {
        // lectic order of subsets of {0,1,2}: {} < {2} < {1} < {1,2} < {0} < ...
        let s = |v: &[usize]| BitSet::from_indices(3, v.iter().copied());
        let order = [
            s(&[]),
            s(&[2]),
            s(&[1]),
            s(&[1, 2]),
            s(&[0]),
            s(&[0, 2]),
            s(&[0, 1]),
            s(&[0, 1, 2]),
        ];
        for w in order.windows(2) {
            assert_eq!(
                w[0].lectic_cmp(&w[1]),
                std::cmp::Ordering::Less,
                "{:?} < {:?}",
                w[0],
                w[1]
            );
        }
    }

    proptest! {
        #[test]
        fn matches_btreeset(a in prop::collection::btree_set(0usize..130, 0..40),
                            b in prop::collection::btree_set(0usize..130, 0..40),
                            bound in 0usize..131) {
            let sa = BitSet::from_indices(130, a.iter().copied());
            let sb = BitSet::from_indices(130, b.iter().copied());
            prop_assert_eq!(sa.to_vec(), a.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(sa.len(), a.len());
            let inter: BTreeSet<usize> = a.intersection(&b).copied().collect();
            prop_assert_eq!(sa.intersection(&sb).to_vec(), inter.into_iter().collect::<Vec<_>>());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            let below = |s: &BTreeSet<usize>| s.range(..bound).copied().collect::<Vec<_>>();
            prop_assert_eq!(sa.agrees_below(&sb, bound), below(&a) == below(&b));
        }
    }
}
