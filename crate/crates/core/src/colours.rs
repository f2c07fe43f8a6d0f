//! Subsets of the colour range `1..=d+1`, stored as bitmasks.

use std::fmt;
use std::str::FromStr;

/// Largest colour representable in a [`ColourSet`].
pub const MAX_COLOUR: usize = 32;

/// A set of colours. Colour `c` (1-based) occupies bit `c - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColourSet(u32);

impl ColourSet {
    pub const EMPTY: ColourSet = ColourSet(0);

    pub const fn from_bits(bits: u32) -> Self {
        ColourSet(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// All colours `1..=colour_count`.
    pub fn full(colour_count: usize) -> Self {
        assert!(colour_count <= MAX_COLOUR, "too many colours");
        if colour_count == MAX_COLOUR {
            ColourSet(u32::MAX)
        } else {
            ColourSet((1u32 << colour_count) - 1)
        }
    }

    pub fn single(colour: usize) -> Self {
        assert!((1..=MAX_COLOUR).contains(&colour), "colour {colour} out of range");
        ColourSet(1 << (colour - 1))
    }

    pub fn from_colours<I: IntoIterator<Item = usize>>(colours: I) -> Self {
        colours
            .into_iter()
            .fold(ColourSet::EMPTY, |acc, c| acc.with(c))
    }

    pub fn contains(self, colour: usize) -> bool {
        (1..=MAX_COLOUR).contains(&colour) && self.0 & (1 << (colour - 1)) != 0
    }

    pub fn with(self, colour: usize) -> Self {
        ColourSet(self.0 | ColourSet::single(colour).0)
    }

    pub fn without(self, colour: usize) -> Self {
        ColourSet(self.0 & !ColourSet::single(colour).0)
    }

    pub fn union(self, other: ColourSet) -> Self {
        ColourSet(self.0 | other.0)
    }

    pub fn intersection(self, other: ColourSet) -> Self {
        ColourSet(self.0 & other.0)
    }

    pub fn difference(self, other: ColourSet) -> Self {
        ColourSet(self.0 & !other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColourSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest colour in the set, if any.
    pub fn max_colour(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    /// Colours in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let c = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(c)
        })
    }

    /// Every subset of `self`, including the empty set and `self`, in
    /// increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = ColourSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(ColourSet(cur))
        })
    }

    /// Subsets of `self` with exactly `size` elements.
    pub fn subsets_of_size(self, size: usize) -> impl Iterator<Item = ColourSet> {
        self.subsets().filter(move |s| s.len() == size)
    }
}

impl fmt::Debug for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid colour list `{0}`: expected comma-separated colours in 1..=32")]
pub struct ParseColourSetError(String);

impl FromStr for ColourSet {
    type Err = ParseColourSetError;

    /// Accepts `1,2,3`, `{1,2,3}` or whitespace-separated colours. An empty
    /// string (or `{}`) is the empty set.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let mut set = ColourSet::EMPTY;
        for tok in inner
            .split(|ch: char| ch == ',' || ch.is_whitespace())
            .filter(|t| !t.is_empty())
        {
            let c: usize = tok.parse().map_err(|_| ParseColourSetError(s.to_string()))?;
            if !(1..=MAX_COLOUR).contains(&c) {
                return Err(ParseColourSetError(s.to_string()));
            }
            set = set.with(c);
        }
        Ok(set)
    }
}
