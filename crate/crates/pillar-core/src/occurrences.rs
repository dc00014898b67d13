//! Arithmetic progressions and canonical occurrence sets.

/// The set `{ first + j·diff : 0 <= j < count }`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ArithmeticProgression {
    pub first: usize,
    pub diff: usize,
    pub count: usize,
}

impl ArithmeticProgression {
    /// A progression; panics if `diff == 0`.
    pub fn new(first: usize, diff: usize, count: usize) -> Self {
        assert!(diff >= 1, "progression difference must be positive");
        ArithmeticProgression { first, diff, count }
    }

    /// The empty progression.
    pub fn empty() -> Self {
        ArithmeticProgression {
            first: 0,
            diff: 1,
            count: 0,
        }
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.count
    }

    /// Whether the progression has no elements.
    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// Largest element, if any.
    pub fn last(&self) -> Option<usize> {
        (self.count > 0).then(|| self.first + (self.count - 1) * self.diff)
    }

    /// Membership test.
    pub fn contains(&self, x: usize) -> bool {
        x >= self.first && (x - self.first).is_multiple_of(self.diff) && (x - self.first) / self.diff < self.count
    }

    /// The elements in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.count).map(move |j| self.first + j * self.diff)
    }

    /// The elements lying in `[lo, hi)`, as a progression with the same
    /// difference.
    pub fn restrict(&self, lo: usize, hi: usize) -> Self {
        if self.count == 0 || hi <= lo {
            return Self::empty();
        }
        let start_j = if lo <= self.first {
            0
        } else {
            (lo - self.first).div_ceil(self.diff)
        };
        let end_j = if hi <= self.first {
            0
        } else {
            ((hi - self.first).div_ceil(self.diff)).min(self.count)
        };
        if start_j >= end_j {
            return Self::empty();
        }
        ArithmeticProgression::new(self.first + start_j * self.diff, self.diff, end_j - start_j)
    }
}

/// A set of positions stored as sorted, disjoint arithmetic progressions.
///
/// The canonical form is produced greedily from the sorted positions: each
/// progression starts at the smallest uncovered position, takes its
/// difference from the next position (1 for a trailing singleton) and is
/// extended while the gaps stay equal. This form is unique for a given set,
/// which makes textual output stable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OccurrenceSet {
    progressions: Vec<ArithmeticProgression>,
    canonical: bool,
}

impl OccurrenceSet {
    /// The empty set.
    pub fn new() -> Self {
        OccurrenceSet {
            progressions: Vec::new(),
            canonical: true,
        }
    }

    /// A canonical set from arbitrary (unsorted, duplicated) positions.
    pub fn from_positions<I: IntoIterator<Item = usize>>(positions: I) -> Self {
        let mut v: Vec<usize> = positions.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self::from_sorted_unique(&v)
    }

    /// A canonical set from arbitrary (possibly overlapping) progressions.
    pub fn from_progressions<I: IntoIterator<Item = ArithmeticProgression>>(progs: I) -> Self {
        let mut builder = OccurrenceSet {
            progressions: progs.into_iter().filter(|p| !p.is_empty()).collect(),
            canonical: false,
        };
        builder.canonicalize();
        builder
    }

    /// A set holding the given progressions verbatim, not yet canonical.
    pub fn raw(progressions: Vec<ArithmeticProgression>) -> Self {
        OccurrenceSet {
            progressions,
            canonical: false,
        }
    }

    fn from_sorted_unique(v: &[usize]) -> Self {
        let mut progressions = Vec::new();
        let mut i = 0;
        while i < v.len() {
            if i + 1 == v.len() {
                progressions.push(ArithmeticProgression::new(v[i], 1, 1));
                break;
            }
            let diff = v[i + 1] - v[i];
            let mut j = i + 1;
            while j + 1 < v.len() && v[j + 1] - v[j] == diff {
                j += 1;
            }
            progressions.push(ArithmeticProgression::new(v[i], diff, j - i + 1));
            i = j + 1;
        }
        OccurrenceSet {
            progressions,
            canonical: true,
        }
    }

    /// Brings the set into canonical form.
    pub fn canonicalize(&mut self) {
        if self.canonical {
            return;
        }
        let positions = self.to_vec_unsorted();
        *self = Self::from_positions(positions);
    }

    /// Whether the set is in canonical form.
    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// The stored progressions.
    pub fn progressions(&self) -> &[ArithmeticProgression] {
        &self.progressions
    }

    fn to_vec_unsorted(&self) -> Vec<usize> {
        let total: usize = self.progressions.iter().map(|p| p.count).sum();
        let mut v = Vec::with_capacity(total);
        for p in &self.progressions {
            v.extend(p.iter());
        }
        v
    }

    /// All positions in increasing order, without duplicates.
    pub fn to_vec(&self) -> Vec<usize> {
        let mut v = self.to_vec_unsorted();
        if !self.canonical {
            v.sort_unstable();
            v.dedup();
        }
        v
    }

    /// Number of distinct positions.
    pub fn len(&self) -> usize {
        if self.canonical {
            self.progressions.iter().map(|p| p.count).sum()
        } else {
            self.to_vec().len()
        }
    }

    /// Whether the set is empty.
    pub fn is_empty(&self) -> bool {
        self.progressions.iter().all(|p| p.is_empty())
    }

    /// Membership test.
    pub fn contains(&self, x: usize) -> bool {
        self.progressions.iter().any(|p| p.contains(x))
    }

    /// Adds all positions of `other` (the result is canonical).
    pub fn union_with(&mut self, other: &OccurrenceSet) {
        let mut v = self.to_vec_unsorted();
        v.extend(other.to_vec_unsorted());
        *self = Self::from_positions(v);
    }

    /// The set `{ x + offset : x ∈ self }`.
    pub fn shifted(&self, offset: usize) -> OccurrenceSet {
        OccurrenceSet {
            progressions: self
                .progressions
                .iter()
                .map(|p| ArithmeticProgression::new(p.first + offset, p.diff, p.count))
                .collect(),
            canonical: self.canonical,
        }
    }

    /// The positions lying in `[lo, hi)` (the result is canonical).
    pub fn restricted(&self, lo: usize, hi: usize) -> OccurrenceSet {
        Self::from_positions(self.to_vec_unsorted().into_iter().filter(|&x| lo <= x && x < hi))
    }
}

impl FromIterator<usize> for OccurrenceSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_positions(iter)
    }
}
