//! Vertex sets of the Boolean hypercube, stored as packed bitmaps.
//!
//! Vertices of the n-dimensional hypercube are the integers `0..2^n`, and
//! coordinate labels are 1-based: coordinate `i` of a vertex `v` is bit
//! `i - 1` of `v`, so flipping coordinate `i` is `v ^ (1 << (i - 1))`.
//! That convention is fixed here once and shared by every module and by the
//! set file format.
//!
//! Dimensions are capped at [`MAX_DIM`](crate::MAX_DIM) so a set is at most
//! 2 MiB of bitmap and every quantity in the crate fits an `u64` exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::MAX_DIM;

/// Vertex index in `0..2^n`.
pub type Vertex = u32;

/// A set of coordinate labels, stored as a mask with bit `i - 1` standing
/// for coordinate `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CoordSet(u32);

impl CoordSet {
    pub const EMPTY: CoordSet = CoordSet(0);

    /// All coordinates `1..=n`.
    pub fn full(n: usize) -> CoordSet {
        debug_assert!(n <= 32);
        if n == 0 {
            CoordSet(0)
        } else {
            CoordSet(u32::MAX >> (32 - n))
        }
    }

    pub fn singleton(coord: usize) -> CoordSet {
        debug_assert!((1..=32).contains(&coord));
        CoordSet(1 << (coord - 1))
    }

    /// Builds a set from 1-based labels, rejecting zero, duplicates, and
    /// labels above `n`.
    pub fn from_coords(coords: &[usize], n: usize) -> Result<CoordSet> {
        let mut mask = 0u32;
        for &c in coords {
            if c == 0 || c > n {
                return Err(Error::invalid(format!(
                    "coordinate {c} out of range 1..={n}"
                )));
            }
            let bit = 1 << (c - 1);
            if mask & bit != 0 {
                return Err(Error::invalid(format!("duplicate coordinate {c}")));
            }
            mask |= bit;
        }
        Ok(CoordSet(mask))
    }

    pub(crate) fn from_mask(mask: u32) -> CoordSet {
        CoordSet(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, coord: usize) -> bool {
        (1..=32).contains(&coord) && self.0 >> (coord - 1) & 1 == 1
    }

    pub fn union(self, other: CoordSet) -> CoordSet {
        CoordSet(self.0 | other.0)
    }

    pub fn intersection(self, other: CoordSet) -> CoordSet {
        CoordSet(self.0 & other.0)
    }

    pub fn complement(self, n: usize) -> CoordSet {
        CoordSet(CoordSet::full(n).0 & !self.0)
    }

    pub fn is_subset_of(self, other: CoordSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Labels in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                return None;
            }
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b + 1)
        })
    }

    /// Extracts the bits of `v` at this set's positions, packed ascending
    /// (a software `pext`).
    pub fn compact(self, v: u32) -> u32 {
        let mut out = 0u32;
        let mut k = 0;
        let mut mask = self.0;
        while mask != 0 {
            let b = mask.trailing_zeros();
            out |= (v >> b & 1) << k;
            k += 1;
            mask &= mask - 1;
        }
        out
    }

    /// Inverse of [`compact`](Self::compact): spreads the low `len()` bits
    /// of `packed` onto this set's positions (a software `pdep`).
    pub fn spread(self, packed: u32) -> u32 {
        let mut out = 0u32;
        let mut k = 0;
        let mut mask = self.0;
        while mask != 0 {
            let b = mask.trailing_zeros();
            out |= (packed >> k & 1) << b;
            k += 1;
            mask &= mask - 1;
        }
        out
    }
}

impl fmt::Debug for CoordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, c) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

fn check_dim(n: usize) -> Result<()> {
    if n > MAX_DIM {
        return Err(Error::capability(format!(
            "dimension {n} exceeds the supported maximum {MAX_DIM}"
        )));
    }
    Ok(())
}

fn word_count(n: usize) -> usize {
    if n >= 6 {
        1 << (n - 6)
    } else {
        1
    }
}

/// Mask of the valid bits in the final word of an n-dimensional bitmap.
fn tail_mask(n: usize) -> u64 {
    if n >= 6 {
        u64::MAX
    } else {
        (1u64 << (1usize << n)) - 1
    }
}

/// A subset of the vertices of the n-dimensional hypercube.
///
/// Sets are immutable once built; every operation returns a new value.
#[derive(Clone, PartialEq, Eq)]
pub struct CubeSet {
    n: usize,
    words: Vec<u64>,
    size: u64,
}

impl CubeSet {
    pub fn empty(n: usize) -> Result<CubeSet> {
        check_dim(n)?;
        Ok(CubeSet {
            n,
            words: vec![0; word_count(n)],
            size: 0,
        })
    }

    pub fn full(n: usize) -> Result<CubeSet> {
        check_dim(n)?;
        let mut words = vec![u64::MAX; word_count(n)];
        *words.last_mut().unwrap() = tail_mask(n);
        Ok(CubeSet {
            n,
            words,
            size: 1 << n,
        })
    }

    /// Builds a set from an explicit vertex list. Duplicates are fine;
    /// indices at or above `2^n` are an error.
    pub fn from_vertices<I>(n: usize, vertices: I) -> Result<CubeSet>
    where
        I: IntoIterator<Item = Vertex>,
    {
        check_dim(n)?;
        let mut words = vec![0u64; word_count(n)];
        let mut size = 0u64;
        let universe = 1u64 << n;
        for v in vertices {
            if u64::from(v) >= universe {
                return Err(Error::invalid(format!(
                    "vertex {v} out of range for dimension {n}"
                )));
            }
            let w = &mut words[(v >> 6) as usize];
            let bit = 1u64 << (v & 63);
            if *w & bit == 0 {
                *w |= bit;
                size += 1;
            }
        }
        Ok(CubeSet { n, words, size })
    }

    /// Builds a set from its raw bitmap words (vertex `v` is bit `v % 64`
    /// of word `v / 64`). Bits beyond `2^n` must be zero.
    pub fn from_words(n: usize, words: Vec<u64>) -> Result<CubeSet> {
        check_dim(n)?;
        if words.len() != word_count(n) {
            return Err(Error::invalid(format!(
                "expected {} words for dimension {n}, got {}",
                word_count(n),
                words.len()
            )));
        }
        if words.last().unwrap() & !tail_mask(n) != 0 {
            return Err(Error::invalid(
                "bitmap has bits set beyond 2^n".to_string(),
            ));
        }
        let size = words.iter().map(|w| u64::from(w.count_ones())).sum();
        Ok(CubeSet { n, words, size })
    }

    /// Builds a set by evaluating a membership predicate on every vertex in
    /// ascending order.
    pub fn from_fn(n: usize, mut member: impl FnMut(Vertex) -> bool) -> Result<CubeSet> {
        check_dim(n)?;
        let mut words = vec![0u64; word_count(n)];
        let mut size = 0u64;
        for v in 0..(1u64 << n) {
            if member(v as Vertex) {
                words[(v >> 6) as usize] |= 1 << (v & 63);
                size += 1;
            }
        }
        Ok(CubeSet { n, words, size })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertices in the ambient cube, `2^n`.
    pub fn universe(&self) -> u64 {
        1 << self.n
    }

    pub fn len(&self) -> u64 {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn is_full(&self) -> bool {
        self.size == self.universe()
    }

    /// Density `|A| / 2^n`.
    pub fn density(&self) -> f64 {
        self.size as f64 / self.universe() as f64
    }

    pub fn contains(&self, v: Vertex) -> bool {
        debug_assert!(u64::from(v) < self.universe());
        self.words[(v >> 6) as usize] >> (v & 63) & 1 == 1
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Members<'_> {
        Members {
            words: &self.words,
            next_word: 0,
            current: 0,
            base: 0,
        }
    }

    pub fn complement(&self) -> CubeSet {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        *words.last_mut().unwrap() &= tail_mask(self.n);
        CubeSet {
            n: self.n,
            words,
            size: self.universe() - self.size,
        }
    }

    fn check_same_dim(&self, other: &CubeSet) -> Result<()> {
        if self.n != other.n {
            return Err(Error::invalid(format!(
                "dimension mismatch: {} vs {}",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn union(&self, other: &CubeSet) -> Result<CubeSet> {
        self.check_same_dim(other)?;
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a | b)
            .collect();
        let size = words.iter().map(|w| u64::from(w.count_ones())).sum();
        Ok(CubeSet {
            n: self.n,
            words,
            size,
        })
    }

    pub fn intersection(&self, other: &CubeSet) -> Result<CubeSet> {
        self.check_same_dim(other)?;
        let words: Vec<u64> = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a & b)
            .collect();
        let size = words.iter().map(|w| u64::from(w.count_ones())).sum();
        Ok(CubeSet {
            n: self.n,
            words,
            size,
        })
    }

    /// `|A △ B|` without materializing the symmetric difference.
    pub fn sym_diff_count(&self, other: &CubeSet) -> Result<u64> {
        self.check_same_dim(other)?;
        Ok(self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| u64::from((a ^ b).count_ones()))
            .sum())
    }

    /// Number of members agreeing with `pattern` on the coordinates of
    /// `fixed` (both given as vertex-bit masks).
    pub(crate) fn count_matching(&self, fixed: u32, pattern: u32) -> u64 {
        debug_assert!(pattern & !fixed == 0);
        let low_fixed = u64::from(fixed & 63);
        let low_pattern = u64::from(pattern & 63);
        let mut word_mask = 0u64;
        for p in 0..64u64 {
            if p & low_fixed == low_pattern {
                word_mask |= 1 << p;
            }
        }
        let high_fixed = (fixed >> 6) as usize;
        let high_pattern = (pattern >> 6) as usize;
        self.words
            .iter()
            .enumerate()
            .filter(|(k, _)| k & high_fixed == high_pattern)
            .map(|(_, w)| u64::from((w & word_mask).count_ones()))
            .sum()
    }

    /// The unique subcube equal to this set, if there is one.
    pub fn as_subcube(&self) -> Option<SubCube> {
        if self.is_empty() {
            return None;
        }
        let mut and_acc = u32::MAX;
        let mut or_acc = 0u32;
        for v in self.iter() {
            and_acc &= v;
            or_acc |= v;
        }
        let coords = CoordSet::full(self.n).mask();
        // A coordinate is fixed when it is constant across all members.
        let fixed = (and_acc | !or_acc) & coords;
        let pattern = and_acc & fixed;
        let dim = self.n - fixed.count_ones() as usize;
        if self.size == 1 << dim {
            Some(SubCube {
                n: self.n,
                fixed,
                pattern,
            })
        } else {
            None
        }
    }

    /// Restriction of the set to the subcube that assigns `y_bits` on the
    /// complement of `i`, re-indexed to a `|i|`-dimensional set.
    ///
    /// `y_bits` carries its values at the original vertex-bit positions; any
    /// bit inside `i` (or above `n`) is an error. Coordinate `k` of the
    /// result is the k-th smallest coordinate of `i`.
    pub fn section(&self, i: CoordSet, y_bits: u32) -> Result<CubeSet> {
        let all = CoordSet::full(self.n);
        if !i.is_subset_of(all) {
            return Err(Error::invalid(format!(
                "section coordinates {i:?} not within 1..={}",
                self.n
            )));
        }
        let j = i.complement(self.n);
        if y_bits & !j.mask() != 0 {
            return Err(Error::invalid(
                "assignment overlaps the section coordinates".to_string(),
            ));
        }
        let mut out = CubeSet::empty(i.len())?;
        for v in self.iter() {
            if v & j.mask() == y_bits {
                out.set_bit(i.compact(v));
            }
        }
        Ok(out)
    }

    pub(crate) fn set_bit(&mut self, v: Vertex) {
        let w = &mut self.words[(v >> 6) as usize];
        let bit = 1u64 << (v & 63);
        if *w & bit == 0 {
            *w |= bit;
            self.size += 1;
        }
    }

    /// Member with the given rank in ascending order (`rank < len`).
    pub(crate) fn select(&self, rank: u64) -> Vertex {
        debug_assert!(rank < self.size);
        let mut remaining = rank;
        for (k, &w) in self.words.iter().enumerate() {
            let pop = u64::from(w.count_ones());
            if remaining < pop {
                let mut word = w;
                for _ in 0..remaining {
                    word &= word - 1;
                }
                return (k as u32) * 64 + word.trailing_zeros();
            }
            remaining -= pop;
        }
        unreachable!("rank out of range");
    }
}

impl fmt::Debug for CubeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubeSet(n={}, size={})", self.n, self.size)
    }
}

pub struct Members<'a> {
    words: &'a [u64],
    next_word: usize,
    current: u64,
    base: u32,
}

impl Iterator for Members<'_> {
    type Item = Vertex;

    fn next(&mut self) -> Option<Vertex> {
        while self.current == 0 {
            if self.next_word == self.words.len() {
                return None;
            }
            self.current = self.words[self.next_word];
            self.base = (self.next_word as u32) << 6;
            self.next_word += 1;
        }
        let v = self.base + self.current.trailing_zeros();
        self.current &= self.current - 1;
        Some(v)
    }
}

/// The initial segment `{0, 1, ..., m-1}` of the vertex ordering, which by
/// Harper's theorem minimizes the edge boundary among sets of size `m`.
pub fn harper_segment(n: usize, m: u64) -> Result<CubeSet> {
    check_dim(n)?;
    if m > 1 << n {
        return Err(Error::invalid(format!(
            "segment length {m} exceeds 2^{n}"
        )));
    }
    let mut words = vec![0u64; word_count(n)];
    let full_words = (m / 64) as usize;
    for w in words.iter_mut().take(full_words) {
        *w = u64::MAX;
    }
    if m % 64 != 0 {
        words[full_words] = (1u64 << (m % 64)) - 1;
    }
    Ok(CubeSet { n, words, size: m })
}

/// A subcube: the vertices agreeing with `pattern` on a fixed coordinate
/// set. Stored as vertex-bit masks; `pattern` is zero outside `fixed`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubCube {
    n: usize,
    fixed: u32,
    pattern: u32,
}

impl SubCube {
    /// Subcube from `(coordinate, bit)` pairs; the unnamed coordinates stay
    /// free.
    pub fn new(n: usize, assignments: &[(usize, bool)]) -> Result<SubCube> {
        check_dim(n)?;
        let mut fixed = 0u32;
        let mut pattern = 0u32;
        for &(c, b) in assignments {
            if c == 0 || c > n {
                return Err(Error::invalid(format!(
                    "coordinate {c} out of range 1..={n}"
                )));
            }
            let bit = 1 << (c - 1);
            if fixed & bit != 0 {
                return Err(Error::invalid(format!("coordinate {c} fixed twice")));
            }
            fixed |= bit;
            if b {
                pattern |= bit;
            }
        }
        Ok(SubCube { n, fixed, pattern })
    }

    pub fn from_masks(n: usize, fixed: u32, pattern: u32) -> Result<SubCube> {
        check_dim(n)?;
        if fixed & !CoordSet::full(n).mask() != 0 {
            return Err(Error::invalid("fixed mask exceeds dimension".to_string()));
        }
        if pattern & !fixed != 0 {
            return Err(Error::invalid(
                "pattern has bits outside the fixed mask".to_string(),
            ));
        }
        Ok(SubCube { n, fixed, pattern })
    }

    /// The whole cube (nothing fixed).
    pub fn whole(n: usize) -> SubCube {
        SubCube {
            n,
            fixed: 0,
            pattern: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn fixed_mask(&self) -> u32 {
        self.fixed
    }

    pub fn pattern(&self) -> u32 {
        self.pattern
    }

    /// Number of fixed coordinates.
    pub fn codim(&self) -> usize {
        self.fixed.count_ones() as usize
    }

    pub fn dim(&self) -> usize {
        self.n - self.codim()
    }

    pub fn size(&self) -> u64 {
        1 << self.dim()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v & self.fixed == self.pattern
    }

    /// `(coordinate, bit)` pairs in ascending coordinate order.
    pub fn fixed_pairs(&self) -> Vec<(usize, bool)> {
        CoordSet::from_mask(self.fixed)
            .iter()
            .map(|c| (c, self.pattern >> (c - 1) & 1 == 1))
            .collect()
    }

    /// Two subcubes of the same cube are disjoint exactly when they disagree
    /// on a commonly fixed coordinate.
    pub fn is_disjoint(&self, other: &SubCube) -> bool {
        debug_assert_eq!(self.n, other.n);
        (self.fixed & other.fixed) & (self.pattern ^ other.pattern) != 0
    }

    /// The member set, as a `CubeSet`.
    pub fn members(&self) -> CubeSet {
        let free = CoordSet::full(self.n).mask() & !self.fixed;
        let mut out = CubeSet::empty(self.n).expect("dimension already checked");
        // Standard submask walk over the free coordinates.
        let mut s = free;
        loop {
            out.set_bit(self.pattern | s);
            if s == 0 {
                break;
            }
            s = (s - 1) & free;
        }
        out
    }

    /// Re-embeds a subcube of the (n-1)-cube into the n-cube by inserting
    /// coordinate `j` fixed to `bit`; old coordinates at or above `j` shift
    /// up by one.
    pub(crate) fn lift_through(&self, j: usize, bit: bool) -> SubCube {
        debug_assert!(j >= 1 && j <= self.n + 1);
        let low = (1u32 << (j - 1)) - 1;
        let jbit = 1u32 << (j - 1);
        let fixed = (self.fixed & low) | (self.fixed & !low) << 1 | jbit;
        let mut pattern = (self.pattern & low) | (self.pattern & !low) << 1;
        if bit {
            pattern |= jbit;
        }
        SubCube {
            n: self.n + 1,
            fixed,
            pattern,
        }
    }
}

impl fmt::Debug for SubCube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubCube(n={}", self.n)?;
        for (c, b) in self.fixed_pairs() {
            write!(f, ", x{c}={}", u8::from(b))?;
        }
        f.write_str(")")
    }
}

impl Serialize for SubCube {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<(usize, u8)> = self
            .fixed_pairs()
            .into_iter()
            .map(|(c, b)| (c, u8::from(b)))
            .collect();
        let mut s = serializer.serialize_struct("SubCube", 1)?;
        s.serialize_field("fixed", &pairs)?;
        s.end()
    }
}

/// How randomly generated sets are drawn. Every kind is fully determined by
/// its fields; the same spec always produces the same set bit for bit.
#[derive(Clone, Debug, PartialEq)]
pub enum GeneratorSpec {
    /// Union of `cubes` pairwise-disjoint random subcubes with codimensions
    /// drawn uniformly from `codim`, then independent membership flips with
    /// probability `noise`.
    CubeUnion {
        n: usize,
        cubes: usize,
        codim: std::ops::RangeInclusive<usize>,
        noise: f64,
        seed: u64,
    },
    /// One random subcube with membership noise; shorthand for a one-cube
    /// union.
    NoisyCube {
        n: usize,
        codim: std::ops::RangeInclusive<usize>,
        noise: f64,
        seed: u64,
    },
    /// Each vertex included independently with probability `density`.
    DensityRandom { n: usize, density: f64, seed: u64 },
    /// The deterministic initial segment of the given length.
    HarperSegment { n: usize, count: u64 },
}

// ---------------------------------------------------------------------------
// Set files
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct SetFile {
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bits_hex: Option<String>,
}

fn encode_bits_hex(a: &CubeSet) -> String {
    let bytes = a.universe().div_ceil(8) as usize;
    let mut out = String::with_capacity(bytes * 2);
    for k in 0..bytes {
        let byte = (a.words()[k / 8] >> (8 * (k % 8))) & 0xff;
        out.push_str(&format!("{byte:02x}"));
    }
    out
}

fn decode_bits_hex(n: usize, hex: &str) -> Result<CubeSet> {
    let universe = 1u64 << n;
    let bytes = universe.div_ceil(8) as usize;
    if hex.len() != bytes * 2 {
        return Err(Error::Format(format!(
            "bits_hex must be {} hex digits for dimension {n}, got {}",
            bytes * 2,
            hex.len()
        )));
    }
    let mut words = vec![0u64; word_count(n)];
    for k in 0..bytes {
        let byte = u64::from_str_radix(&hex[2 * k..2 * k + 2], 16)
            .map_err(|_| Error::Format(format!("bad hex at byte {k}")))?;
        words[k / 8] |= byte << (8 * (k % 8));
    }
    if words.last().unwrap() & !tail_mask(n) != 0 {
        return Err(Error::Format(
            "bits_hex has bits set beyond 2^n".to_string(),
        ));
    }
    CubeSet::from_words(n, words)
}

/// Renders a set as its JSON file form, with both the vertex list and the
/// little-endian bitmap hex.
pub fn set_to_json(a: &CubeSet) -> serde_json::Value {
    let file = SetFile {
        n: a.n(),
        vertices: Some(a.iter().map(u64::from).collect()),
        bits_hex: Some(encode_bits_hex(a)),
    };
    serde_json::to_value(&file).expect("set file serialization cannot fail")
}

/// Parses the JSON file form. Either representation is accepted; when both
/// are present they must agree.
pub fn set_from_json(text: &str) -> Result<CubeSet> {
    let file: SetFile =
        serde_json::from_str(text).map_err(|e| Error::Format(format!("set file: {e}")))?;
    check_dim(file.n)?;
    let from_vertices = match &file.vertices {
        Some(vs) => {
            let mut narrowed = Vec::with_capacity(vs.len());
            for &v in vs {
                if v >= 1 << file.n {
                    return Err(Error::Format(format!(
                        "vertex {v} out of range for dimension {}",
                        file.n
                    )));
                }
                narrowed.push(v as Vertex);
            }
            Some(CubeSet::from_vertices(file.n, narrowed)?)
        }
        None => None,
    };
    let from_bits = match &file.bits_hex {
        Some(hex) => Some(decode_bits_hex(file.n, hex)?),
        None => None,
    };
    match (from_vertices, from_bits) {
        (Some(a), Some(b)) => {
            if a == b {
                Ok(a)
            } else {
                Err(Error::Format(
                    "vertices and bits_hex describe different sets".to_string(),
                ))
            }
        }
        (Some(a), None) => Ok(a),
        (None, Some(b)) => Ok(b),
        (None, None) => Err(Error::Format(
            "set file needs a vertices list or a bits_hex field".to_string(),
        )),
    }
}

pub fn write_set_file(a: &CubeSet, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(&set_to_json(a)).expect("serialization");
    text.push('\n');
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_set_file(path: &Path) -> Result<CubeSet> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    set_from_json(&text)
}

/// Renders the members of every section in one map, used by the section
/// table below and handy for debugging.
pub(crate) fn section_partition(a: &CubeSet, i: CoordSet) -> BTreeMap<u64, CubeSet> {
    let j = i.complement(a.n());
    let mut out: BTreeMap<u64, CubeSet> = BTreeMap::new();
    for v in a.iter() {
        let key = u64::from(j.compact(v));
        out.entry(key)
            .or_insert_with(|| CubeSet::empty(i.len()).expect("section dimension is valid"))
            .set_bit(i.compact(v));
    }
    out
}
