use std::collections::BTreeMap;
use std::fmt;

/// Finite multiset with positive multiplicities, iterated in key order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multiset<K: Ord> {
    entries: BTreeMap<K, u32>,
}

impl<K: Ord> Default for Multiset<K> {
    fn default() -> Self {
        Self { entries: BTreeMap::new() }
    }
}

impl<K: Ord> Multiset<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(k: K) -> Self {
        let mut m = Self::new();
        m.add(k, 1);
        m
    }

    pub fn add(&mut self, k: K, n: u32) {
        if n > 0 {
            *self.entries.entry(k).or_insert(0) += n;
        }
    }

    pub fn multiplicity(&self, k: &K) -> u32 {
        self.entries.get(k).copied().unwrap_or(0)
    }

    pub fn contains(&self, k: &K) -> bool {
        self.entries.contains_key(k)
    }

    /// Number of distinct keys.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u32 {
        self.entries.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, u32)> {
        self.entries.iter().map(|(k, &n)| (k, n))
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.entries.keys()
    }

    pub fn map_keys<J: Ord>(&self, mut f: impl FnMut(&K) -> J) -> Multiset<J> {
        let mut out = Multiset::new();
        for (k, n) in self.iter() {
            out.add(f(k), n);
        }
        out
    }
}

impl<K: Ord> FromIterator<K> for Multiset<K> {
    fn from_iter<I: IntoIterator<Item = K>>(iter: I) -> Self {
        let mut m = Self::new();
        for k in iter {
            m.add(k, 1);
        }
        m
    }
}

impl<K: Ord> Extend<(K, u32)> for Multiset<K> {
    fn extend<I: IntoIterator<Item = (K, u32)>>(&mut self, iter: I) {
        for (k, n) in iter {
            self.add(k, n);
        }
    }
}

impl<K: Ord + fmt::Display> fmt::Display for Multiset<K> {
    /// `A + 2*B + C`, or `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(k, n)| if n == 1 { k.to_string() } else { format!("{n}*{k}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
