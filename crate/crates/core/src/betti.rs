use serde::Serialize;

/// Betti numbers `b_0, ..., b_{2d}` of a compact space of complex dimension `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BettiTable {
    values: Vec<i64>,
}

impl BettiTable {
    pub fn new(values: Vec<i64>) -> Self {
        debug_assert!(values.iter().all(|&b| b >= 0), "negative Betti number in {values:?}");
        BettiTable { values }
    }

    /// Betti numbers of `P^d`.
    pub fn projective(d: usize) -> Self {
        Self::new((0..=2 * d).map(|k| (k % 2 == 0) as i64).collect())
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, k: usize) -> i64 {
        self.values.get(k).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn euler(&self) -> i64 {
        self.values
            .iter()
            .enumerate()
            .map(|(k, b)| if k % 2 == 0 { *b } else { -*b })
            .sum()
    }

    pub fn total(&self) -> i64 {
        self.values.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.values.iter().eq(self.values.iter().rev())
    }

    /// Sum of `self` and `other` shifted up by `shift` degrees.
    pub fn add_shifted(&self, other: &BettiTable, shift: usize) -> BettiTable {
        let len = self.len().max(other.len() + shift);
        let values = (0..len)
            .map(|k| self.get(k) + if k >= shift { other.get(k - shift) } else { 0 })
            .collect();
        BettiTable::new(values)
    }

    /// Künneth product.
    pub fn product(&self, other: &BettiTable) -> BettiTable {
        if self.is_empty() || other.is_empty() {
            return BettiTable::new(Vec::new());
        }
        let mut values = vec![0; self.len() + other.len() - 1];
        for (i, a) in self.values.iter().enumerate() {
            for (j, b) in other.values.iter().enumerate() {
                values[i + j] += a * b;
            }
        }
        BettiTable::new(values)
    }
}
