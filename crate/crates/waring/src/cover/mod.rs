//! Rank-two binary forms through three prescribed roots.
//!
//! For each degree d >= 4 there are only finitely many degree-d forms
//! of Waring rank two vanishing at three fixed points, and every one
//! of them is the image of a triple of d-th roots of unity under an
//! explicit cross-ratio construction. This module holds the
//! combinatorial side of that picture — ordered triples of root
//! indices, the dihedral symmetry acting on them, and circular-arc
//! counts — plus, in submodules, the construction itself (`gamma`)
//! and the exact certification steps (`certify`, `report`).

mod certify;
mod gamma;
mod report;

pub use certify::{hyperbolicity_check, power_sum_decomposition, terracini_transversality};
pub use gamma::{
    canonical_frame, cross_ratio, enumerate_rank_two, fibers_by_gamma, form_key, gamma_canonical,
    gamma_general, m_map, mobius_from_three_points, mobius_value, RootsOfUnity,
};
pub use report::{build_cover_report, CoverReport};

use crate::error::{Error, Result};
use std::collections::{BTreeMap, BTreeSet};

/// An ordered triple of pairwise distinct indices into the d-th roots
/// of unity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootTriple {
    d: usize,
    indices: [usize; 3],
}

impl RootTriple {
    pub fn new(d: usize, i: usize, j: usize, k: usize) -> Result<Self> {
        if d < 4 {
            return Err(Error::InvalidTriple(format!(
                "triples need degree >= 4, got {d}"
            )));
        }
        if i >= d || j >= d || k >= d {
            return Err(Error::InvalidTriple(format!(
                "indices ({i}, {j}, {k}) out of range for degree {d}"
            )));
        }
        if i == j || j == k || i == k {
            return Err(Error::InvalidTriple(format!(
                "indices ({i}, {j}, {k}) must be pairwise distinct"
            )));
        }
        Ok(RootTriple {
            d,
            indices: [i, j, k],
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn indices(&self) -> (usize, usize, usize) {
        (self.indices[0], self.indices[1], self.indices[2])
    }
}

/// Every ordered triple of distinct indices, lexicographically; there
/// are d(d-1)(d-2) of them.
pub fn all_triples(d: usize) -> Result<Vec<RootTriple>> {
    if d < 4 {
        return Err(Error::InvalidTriple(format!(
            "triples need degree >= 4, got {d}"
        )));
    }
    let mut out = Vec::with_capacity(d * (d - 1) * (d - 2));
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if i != j && j != k && i != k {
                    out.push(RootTriple {
                        d,
                        indices: [i, j, k],
                    });
                }
            }
        }
    }
    Ok(out)
}

/// A symmetry of the regular d-gon of roots: rotate indices by
/// `rotation` steps, then optionally reflect (negate mod d).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DihedralElement {
    rotation: usize,
    reflected: bool,
}

impl DihedralElement {
    pub fn new(rotation: usize, reflected: bool, d: usize) -> Self {
        DihedralElement {
            rotation: rotation % d,
            reflected,
        }
    }

    pub fn identity() -> Self {
        DihedralElement {
            rotation: 0,
            reflected: false,
        }
    }

    pub fn rotation(&self) -> usize {
        self.rotation
    }

    pub fn reflected(&self) -> bool {
        self.reflected
    }

    pub fn apply_index(&self, t: usize, d: usize) -> usize {
        let shifted = (t + self.rotation) % d;
        if self.reflected {
            (d - shifted) % d
        } else {
            shifted
        }
    }

    pub fn act(&self, xi: &RootTriple) -> RootTriple {
        let d = xi.d();
        RootTriple {
            d,
            indices: [
                self.apply_index(xi.indices[0], d),
                self.apply_index(xi.indices[1], d),
                self.apply_index(xi.indices[2], d),
            ],
        }
    }

    /// The element acting as `self` after `inner`: writing the action
    /// as t -> sign * (t + rotation), signs multiply and the inner
    /// sign twists the outer rotation.
    pub fn compose(&self, inner: &DihedralElement, d: usize) -> DihedralElement {
        let rotation = if inner.reflected {
            (inner.rotation + d - self.rotation % d) % d
        } else {
            (inner.rotation + self.rotation) % d
        };
        DihedralElement {
            rotation,
            reflected: self.reflected ^ inner.reflected,
        }
    }
}

/// All 2d symmetries.
pub fn dihedral_group(d: usize) -> Vec<DihedralElement> {
    let mut out = Vec::with_capacity(2 * d);
    for reflected in [false, true] {
        for rotation in 0..d {
            out.push(DihedralElement {
                rotation,
                reflected,
            });
        }
    }
    out
}

/// The lexicographically smallest image of the triple under the full
/// symmetry group; two triples share it exactly when they share an
/// orbit.
pub fn canonical_representative(xi: &RootTriple) -> RootTriple {
    dihedral_group(xi.d())
        .iter()
        .map(|g| g.act(xi))
        .min()
        .expect("the group is never empty")
}

/// Groups triples by a computed key, blocks ordered by key.
pub fn partition_by_key<K, G>(triples: Vec<RootTriple>, mut key: G) -> Result<Vec<Vec<RootTriple>>>
where
    K: Ord,
    G: FnMut(&RootTriple) -> Result<K>,
{
    let mut map: BTreeMap<K, Vec<RootTriple>> = BTreeMap::new();
    for t in triples {
        map.entry(key(&t)?).or_default().push(t);
    }
    Ok(map.into_values().collect())
}

/// The orbit decomposition of all triples under the dihedral group.
#[derive(Clone, Debug)]
pub struct OrbitPartition {
    d: usize,
    blocks: Vec<Vec<RootTriple>>,
}

impl OrbitPartition {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn blocks(&self) -> &[Vec<RootTriple>] {
        &self.blocks
    }

    pub fn orbit_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

pub fn orbits(d: usize) -> Result<OrbitPartition> {
    let blocks = partition_by_key(all_triples(d)?, |xi| Ok(canonical_representative(xi)))?;
    Ok(OrbitPartition { d, blocks })
}

/// Whether two partitions of the same set of triples have identical
/// blocks (regardless of block or member order).
pub fn partitions_equal(a: &[Vec<RootTriple>], b: &[Vec<RootTriple>]) -> Result<bool> {
    let ground = |p: &[Vec<RootTriple>]| -> BTreeSet<RootTriple> {
        p.iter().flatten().copied().collect()
    };
    if ground(a) != ground(b) {
        return Err(Error::GroundSetMismatch);
    }
    let canon = |p: &[Vec<RootTriple>]| -> BTreeSet<Vec<RootTriple>> {
        p.iter()
            .map(|block| {
                let mut sorted = block.clone();
                sorted.sort();
                sorted
            })
            .collect()
    };
    Ok(canon(a) == canon(b))
}

/// How many roots lie strictly inside each of the three circular arcs
/// cut out by a triple. The components always sum to d - 3.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ArcCounts(pub usize, pub usize, pub usize);

impl ArcCounts {
    pub fn sum(&self) -> usize {
        self.0 + self.1 + self.2
    }
}

/// Indices strictly inside the circular arc from `a` to `b` that does
/// not contain `avoid`, in walking order.
pub(crate) fn open_arc_between(d: usize, a: usize, b: usize, avoid: usize) -> Vec<usize> {
    let ccw: Vec<usize> = (1..(b + d - a) % d).map(|step| (a + step) % d).collect();
    if ccw.contains(&avoid) {
        (1..(a + d - b) % d).map(|step| (b + step) % d).collect()
    } else {
        ccw
    }
}

/// Pure index arithmetic: for ξ = (i, j, k), counts the roots interior
/// to the arcs (i, j), (j, k) and (k, i), each taken on the side
/// avoiding the remaining index.
pub fn arc_counts(xi: &RootTriple) -> ArcCounts {
    let (i, j, k) = xi.indices();
    let d = xi.d();
    ArcCounts(
        open_arc_between(d, i, j, k).len(),
        open_arc_between(d, j, k, i).len(),
        open_arc_between(d, k, i, j).len(),
    )
}

/// Triples grouped by their arc counts.
pub fn fibers_by_arc_counts(d: usize) -> Result<Vec<Vec<RootTriple>>> {
    partition_by_key(all_triples(d)?, |xi| Ok(arc_counts(xi)))
}
