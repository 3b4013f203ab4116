use std::fmt;

/// An ultimately periodic sequence `prefix · cycle^ω` of monoid values.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightSeq<V> {
    pub prefix: Vec<V>,
    pub cycle: Vec<V>,
}

impl<V: Clone> WeightSeq<V> {
    /// Panics if `cycle` is empty.
    pub fn new(prefix: Vec<V>, cycle: Vec<V>) -> Self {
        assert!(!cycle.is_empty(), "a weight sequence needs a non-empty cycle");
        WeightSeq { prefix, cycle }
    }

    pub fn constant(v: V) -> Self {
        WeightSeq { prefix: Vec::new(), cycle: vec![v] }
    }

    /// The value at position `i`.
    pub fn at(&self, i: usize) -> &V {
        if i < self.prefix.len() {
            &self.prefix[i]
        } else {
            &self.cycle[(i - self.prefix.len()) % self.cycle.len()]
        }
    }

    /// The suffix starting at position `i`, again as a lasso.
    pub fn suffix(&self, i: usize) -> Self {
        if i <= self.prefix.len() {
            WeightSeq { prefix: self.prefix[i..].to_vec(), cycle: self.cycle.clone() }
        } else {
            let r = (i - self.prefix.len()) % self.cycle.len();
            let mut cycle = self.cycle[r..].to_vec();
            cycle.extend_from_slice(&self.cycle[..r]);
            WeightSeq { prefix: Vec::new(), cycle }
        }
    }

    /// `v` followed by this sequence.
    pub fn prepend(&self, v: V) -> Self {
        let mut prefix = Vec::with_capacity(self.prefix.len() + 1);
        prefix.push(v);
        prefix.extend_from_slice(&self.prefix);
        WeightSeq { prefix, cycle: self.cycle.clone() }
    }

    pub fn map<W: Clone>(&self, f: impl Fn(&V) -> W) -> WeightSeq<W> {
        WeightSeq {
            prefix: self.prefix.iter().map(&f).collect(),
            cycle: self.cycle.iter().map(&f).collect(),
        }
    }

    /// Every value that occurs in the sequence.
    pub fn values(&self) -> impl Iterator<Item = &V> {
        self.prefix.iter().chain(self.cycle.iter())
    }

    /// Positions `0..len()` cover one unrolling of the prefix and cycle.
    pub fn len(&self) -> usize {
        self.prefix.len() + self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl<V: fmt::Display> fmt::Display for WeightSeq<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[V]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "{} | {}", join(&self.prefix), join(&self.cycle))
    }
}
