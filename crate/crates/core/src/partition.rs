//! Set partitions of labeled boundary circles.
//!
//! A morphism `n -> m` lives over the label set `{1, .., n, 1', .., m'}`:
//! bottom circles are unprimed, top circles primed. Partitions are always
//! stored in canonical form so that structural equality is equality of
//! partitions.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    Bottom,
    Top,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Bottom => Side::Top,
            Side::Top => Side::Bottom,
        }
    }
}

/// One boundary circle. Indices are 1-based. The derived order puts every
/// bottom label before every top label.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundaryLabel {
    pub side: Side,
    pub index: usize,
}

impl BoundaryLabel {
    pub fn bottom(index: usize) -> Self {
        BoundaryLabel { side: Side::Bottom, index }
    }

    pub fn top(index: usize) -> Self {
        BoundaryLabel { side: Side::Top, index }
    }

    /// Position in the sequence `1, .., n, 1', .., m'` (0-based).
    pub fn position(self, n: usize) -> usize {
        match self.side {
            Side::Bottom => self.index - 1,
            Side::Top => n + self.index - 1,
        }
    }

    fn from_position(pos: usize, n: usize) -> Self {
        if pos < n {
            BoundaryLabel::bottom(pos + 1)
        } else {
            BoundaryLabel::top(pos - n + 1)
        }
    }
}

impl fmt::Display for BoundaryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::Bottom => write!(f, "{}", self.index),
            Side::Top => write!(f, "{}'", self.index),
        }
    }
}

/// Bound on `n + m` for anything that enumerates partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SizeLimit(pub usize);

impl SizeLimit {
    pub const DEFAULT: SizeLimit = SizeLimit(12);

    pub fn check(self, n: usize, m: usize) -> Result<()> {
        if n + m > self.0 {
            Err(Error::SizeLimit { requested: n + m, limit: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for SizeLimit {
    fn default() -> Self {
        SizeLimit::DEFAULT
    }
}

/// A partition of `N_n^m` in canonical form: labels sorted inside each
/// block, blocks sorted by their minimal label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SetPartition {
    n: usize,
    m: usize,
    blocks: Vec<Vec<BoundaryLabel>>,
}

impl SetPartition {
    /// Validates and canonicalizes `blocks` as a partition of `N_n^m`.
    pub fn new(n: usize, m: usize, blocks: Vec<Vec<BoundaryLabel>>) -> Result<Self> {
        let tagged = blocks.into_iter().map(|b| (b, ())).collect();
        let (p, _) = canonicalize_tagged(n, m, tagged)?;
        Ok(p)
    }

    /// Builds a partition from a block id per position (`1..n` then `1'..m'`).
    /// Ids need not be a restricted growth string.
    pub fn from_block_ids(n: usize, m: usize, ids: &[usize]) -> Self {
        assert_eq!(ids.len(), n + m);
        let mut order: Vec<usize> = Vec::new();
        let mut blocks: Vec<Vec<BoundaryLabel>> = Vec::new();
        for (pos, &id) in ids.iter().enumerate() {
            let slot = match order.iter().position(|&o| o == id) {
                Some(s) => s,
                None => {
                    order.push(id);
                    blocks.push(Vec::new());
                    blocks.len() - 1
                }
            };
            blocks[slot].push(BoundaryLabel::from_position(pos, n));
        }
        // first-appearance order over positions is already canonical
        SetPartition { n, m, blocks }
    }

    pub fn identity(n: usize) -> Self {
        let blocks = (1..=n)
            .map(|i| vec![BoundaryLabel::bottom(i), BoundaryLabel::top(i)])
            .collect();
        SetPartition { n, m: n, blocks }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> &[Vec<BoundaryLabel>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block id of every position, i.e. the restricted growth string.
    pub fn block_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.n + self.m];
        for (b, block) in self.blocks.iter().enumerate() {
            for l in block {
                ids[l.position(self.n)] = b;
            }
        }
        ids
    }

    pub fn block_of(&self, label: BoundaryLabel) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&label))
    }

    /// Applies a label map and re-canonicalizes; `relabel` must be a
    /// bijection onto `N_new_n^new_m`.
    pub(crate) fn relabeled<T: Clone>(
        &self,
        new_n: usize,
        new_m: usize,
        tags: &[T],
        relabel: impl Fn(BoundaryLabel) -> BoundaryLabel,
    ) -> (SetPartition, Vec<T>) {
        let tagged = self
            .blocks
            .iter()
            .zip(tags.iter().cloned())
            .map(|(b, t)| (b.iter().map(|&l| relabel(l)).collect(), t))
            .collect();
        canonicalize_tagged(new_n, new_m, tagged).expect("relabeling is a bijection")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write_block(f, block)?;
        }
        Ok(())
    }
}

pub(crate) fn write_block(f: &mut fmt::Formatter<'_>, block: &[BoundaryLabel]) -> fmt::Result {
    write!(f, "{{")?;
    for (j, l) in block.iter().enumerate() {
        if j > 0 {
            write!(f, ",")?;
        }
        write!(f, "{l}")?;
    }
    write!(f, "}}")
}

/// Validates blocks over `N_n^m` and sorts them canonically, carrying a tag
/// per block along.
pub(crate) fn canonicalize_tagged<T>(
    n: usize,
    m: usize,
    blocks: Vec<(Vec<BoundaryLabel>, T)>,
) -> Result<(SetPartition, Vec<T>)> {
    let mut seen = vec![false; n + m];
    let mut out = Vec::with_capacity(blocks.len());
    for (mut block, tag) in blocks {
        if block.is_empty() {
            return Err(Error::InvalidPartition("empty block".into()));
        }
        for l in &block {
            let bound = match l.side {
                Side::Bottom => n,
                Side::Top => m,
            };
            if l.index == 0 || l.index > bound {
                return Err(Error::InvalidPartition(format!("label {l} out of range")));
            }
            let pos = l.position(n);
            if seen[pos] {
                return Err(Error::InvalidPartition(format!(
                    "circle {l} appears in more than one part"
                )));
            }
            seen[pos] = true;
        }
        block.sort_unstable();
        out.push((block, tag));
    }
    if let Some(pos) = seen.iter().position(|s| !s) {
        let l = BoundaryLabel::from_position(pos, n);
        let side = match l.side {
            Side::Bottom => "bottom",
            Side::Top => "top",
        };
        return Err(Error::InvalidPartition(format!(
            "parts do not cover {side} circle {}",
            l.index
        )));
    }
    out.sort_by(|a, b| a.0[0].cmp(&b.0[0]));
    let (blocks, tags) = out.into_iter().unzip();
    Ok((SetPartition { n, m, blocks }, tags))
}

/// A set partition with a genus (number of handles) on every block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedPartition {
    base: SetPartition,
    genus: Vec<u32>,
}

impl WeightedPartition {
    pub fn new(base: SetPartition, genus: Vec<u32>) -> Result<Self> {
        if genus.len() != base.num_blocks() {
            return Err(Error::InvalidPartition(format!(
                "{} genera given for {} blocks",
                genus.len(),
                base.num_blocks()
            )));
        }
        Ok(WeightedPartition { base, genus })
    }

    pub fn genus_zero(base: SetPartition) -> Self {
        let genus = vec![0; base.num_blocks()];
        WeightedPartition { base, genus }
    }

    /// Builds from unordered `(block, genus)` pairs.
    pub fn from_parts(n: usize, m: usize, parts: Vec<(Vec<BoundaryLabel>, u32)>) -> Result<Self> {
        let (base, genus) = canonicalize_tagged(n, m, parts)?;
        Ok(WeightedPartition { base, genus })
    }

    pub fn base(&self) -> &SetPartition {
        &self.base
    }

    pub fn genus(&self) -> &[u32] {
        &self.genus
    }

    pub(crate) fn genus_mut(&mut self) -> &mut [u32] {
        &mut self.genus
    }

    pub fn n(&self) -> usize {
        self.base.n
    }

    pub fn m(&self) -> usize {
        self.base.m
    }

    /// Whether every genus is below `k`, i.e. membership in `D^m_n(<k)`.
    pub fn is_below(&self, k: u32) -> bool {
        self.genus.iter().all(|&g| g < k)
    }

    pub fn parts(&self) -> impl Iterator<Item = (&[BoundaryLabel], u32)> + '_ {
        self.base.blocks.iter().map(Vec::as_slice).zip(self.genus.iter().copied())
    }

    pub(crate) fn relabeled(
        &self,
        new_n: usize,
        new_m: usize,
        relabel: impl Fn(BoundaryLabel) -> BoundaryLabel,
    ) -> WeightedPartition {
        let (base, genus) = self.base.relabeled(new_n, new_m, &self.genus, relabel);
        WeightedPartition { base, genus }
    }
}

impl fmt::Display for WeightedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.genus.is_empty() {
            return write!(f, "{{}}");
        }
        for (i, (block, g)) in self.parts().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write_block(f, block)?;
            write!(f, "g{g}")?;
        }
        Ok(())
    }
}

/// All partitions of `N_n^m`, in lexicographic order of their restricted
/// growth strings. The first is the one-block partition.
pub fn enumerate_set_partitions(n: usize, m: usize, limit: SizeLimit) -> Result<Vec<SetPartition>> {
    limit.check(n, m)?;
    let k = n + m;
    let mut out = Vec::new();
    let mut rgs = vec![0usize; k];
    // prefix_max[i] = max(rgs[0..=i])
    let mut prefix_max = vec![0usize; k];
    loop {
        out.push(SetPartition::from_block_ids(n, m, &rgs));
        let mut i = k;
        let advanced = loop {
            if i <= 1 {
                break false;
            }
            i -= 1;
            if rgs[i] <= prefix_max[i - 1] {
                rgs[i] += 1;
                prefix_max[i] = prefix_max[i - 1].max(rgs[i]);
                for j in i + 1..k {
                    rgs[j] = 0;
                    prefix_max[j] = prefix_max[i];
                }
                break true;
            }
        };
        if !advanced {
            break;
        }
    }
    Ok(out)
}

/// All elements of `D^m_n(<k)`: base partitions in enumeration order, genus
/// vectors in lexicographic order within each base.
pub fn enumerate_weighted_partitions(
    n: usize,
    m: usize,
    k: u32,
    limit: SizeLimit,
) -> Result<Vec<WeightedPartition>> {
    if k == 0 {
        return Ok(Vec::new());
    }
    let bases = enumerate_set_partitions(n, m, limit)?;
    let mut out = Vec::new();
    for base in bases {
        let len = base.num_blocks();
        let mut genus = vec![0u32; len];
        loop {
            out.push(WeightedPartition { base: base.clone(), genus: genus.clone() });
            // odometer, last entry fastest
            let mut i = len;
            let mut carried = true;
            while i > 0 {
                i -= 1;
                genus[i] += 1;
                if genus[i] < k {
                    carried = false;
                    break;
                }
                genus[i] = 0;
            }
            if carried {
                break;
            }
        }
    }
    Ok(out)
}

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind { parent: (0..len).collect(), size: vec![1; len] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
    }
}

/// One connected class produced by stacking two partitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeClass {
    /// Indices into the lower partition's blocks.
    pub lower_blocks: Vec<usize>,
    /// Indices into the upper partition's blocks.
    pub upper_blocks: Vec<usize>,
    /// Number of distinct middle circles glued inside this class.
    pub glued: usize,
    /// Labels of the composite that belong to this class, sorted.
    pub surviving: Vec<BoundaryLabel>,
}

impl MergeClass {
    pub fn is_middle_only(&self) -> bool {
        self.surviving.is_empty()
    }
}

/// Bookkeeping of a stacking. The first `num_surviving` classes correspond,
/// in order, to the blocks of the composite partition; the remaining ones
/// are middle-only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeReport {
    pub classes: Vec<MergeClass>,
    pub num_surviving: usize,
}

impl MergeReport {
    pub fn middle_only(&self) -> &[MergeClass] {
        &self.classes[self.num_surviving..]
    }

    pub fn middle_only_count(&self) -> usize {
        self.classes.len() - self.num_surviving
    }

    pub fn total_glued(&self) -> usize {
        self.classes.iter().map(|c| c.glued).sum()
    }
}

/// Stacks `upper` (`m -> l`) on top of `lower` (`n -> m`), joining blocks
/// that share a middle circle.
pub fn stack_partitions(
    lower: &SetPartition,
    upper: &SetPartition,
) -> Result<(SetPartition, MergeReport)> {
    if lower.m != upper.n {
        return Err(Error::Arity { left: lower.m, right: upper.n });
    }
    let (n, mid, l) = (lower.n, lower.m, upper.m);
    let na = lower.num_blocks();
    let mut uf = UnionFind::new(na + upper.num_blocks());

    let lower_ids = lower.block_ids();
    let upper_ids = upper.block_ids();
    for i in 0..mid {
        uf.union(lower_ids[n + i], na + upper_ids[i]);
    }

    // class index by root, created in order of first surviving label, then
    // middle-only classes in order of their first middle circle
    let mut class_of_root: Vec<Option<usize>> = vec![None; na + upper.num_blocks()];
    let mut classes: Vec<MergeClass> = Vec::new();
    let mut touch = |root: usize, classes: &mut Vec<MergeClass>| -> usize {
        *class_of_root[root].get_or_insert_with(|| {
            classes.push(MergeClass {
                lower_blocks: Vec::new(),
                upper_blocks: Vec::new(),
                glued: 0,
                surviving: Vec::new(),
            });
            classes.len() - 1
        })
    };
    for (i, &id) in lower_ids[..n].iter().enumerate() {
        let c = touch(uf.find(id), &mut classes);
        classes[c].surviving.push(BoundaryLabel::bottom(i + 1));
    }
    for j in 0..l {
        let c = touch(uf.find(na + upper_ids[mid + j]), &mut classes);
        classes[c].surviving.push(BoundaryLabel::top(j + 1));
    }
    let num_surviving = classes.len();
    for i in 0..mid {
        let c = touch(uf.find(lower_ids[n + i]), &mut classes);
        classes[c].glued += 1;
    }
    for b in 0..na {
        let c = touch(uf.find(b), &mut classes);
        classes[c].lower_blocks.push(b);
    }
    for b in 0..upper.num_blocks() {
        let c = touch(uf.find(na + b), &mut classes);
        classes[c].upper_blocks.push(b);
    }

    // surviving labels were pushed in position order, so blocks are sorted
    // and classes appear by minimal label
    let blocks = classes[..num_surviving].iter().map(|c| c.surviving.clone()).collect();
    let composite = SetPartition { n, m: l, blocks };
    Ok((composite, MergeReport { classes, num_surviving }))
}
