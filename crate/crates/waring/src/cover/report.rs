//! One-degree summary of the whole enumeration pipeline.

use super::certify::{power_sum_decomposition, terracini_transversality};
use super::gamma::{canonical_frame, enumerate_rank_two, fibers_by_gamma, RootsOfUnity};
use super::{all_triples, fibers_by_arc_counts, orbits, partitions_equal};
use crate::error::Result;
use crate::field::CyclotomicField;
use crate::forms::BinaryForm;

/// What the enumeration certifies for a single degree: the census of
/// triples and orbits, the distinct images, whether the three natural
/// partitions of the triples coincide, and whether the tangent-space
/// transversality check passed at every image point.
#[derive(Clone, Debug)]
pub struct CoverReport {
    pub d: usize,
    pub triple_count: usize,
    pub orbit_count: usize,
    pub orbit_sizes: Vec<usize>,
    pub image_size: usize,
    pub forms: Vec<BinaryForm<CyclotomicField>>,
    pub partitions_equal: bool,
    pub transversality_all: bool,
}

/// Runs the pipeline for the standard frame (x+y, x, y): enumerate all
/// images, compare the symmetry orbits against the fibers of the map
/// and of the arc counts, and certify transversality at one
/// representative per image.
pub fn build_cover_report(d: usize) -> Result<CoverReport> {
    let roots = RootsOfUnity::new(d)?;
    let frame = canonical_frame(roots.field());
    let triple_count = all_triples(d)?.len();
    let orbit_partition = orbits(d)?;
    let gamma_fibers = fibers_by_gamma(&roots, &frame)?;
    let arc_fibers = fibers_by_arc_counts(d)?;
    let partitions_ok = partitions_equal(orbit_partition.blocks(), &gamma_fibers)?
        && partitions_equal(&gamma_fibers, &arc_fibers)?;

    let forms = enumerate_rank_two(&roots, &frame)?;
    let mut transversality_all = true;
    for block in &gamma_fibers {
        let (l, t) = power_sum_decomposition(&roots, &frame, &block[0])?;
        if !terracini_transversality(&l, &t, d)? {
            transversality_all = false;
        }
    }

    Ok(CoverReport {
        d,
        triple_count,
        orbit_count: orbit_partition.orbit_count(),
        orbit_sizes: orbit_partition.sizes(),
        image_size: forms.len(),
        forms,
        partitions_equal: partitions_ok,
        transversality_all,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quartic_report() {
        let report = build_cover_report(4).unwrap();
        assert_eq!(report.triple_count, 24);
        assert_eq!(report.orbit_count, 3);
        assert_eq!(report.orbit_sizes, vec![8, 8, 8]);
        assert_eq!(report.image_size, 3);
        assert!(report.partitions_equal);
        assert!(report.transversality_all);
    }

    #[test]
    fn quintic_report() {
        let report = build_cover_report(5).unwrap();
        assert_eq!(report.triple_count, 60);
        assert_eq!(report.orbit_count, 6);
        assert!(report.orbit_sizes.iter().all(|&s| s == 10));
        assert_eq!(report.image_size, 6);
        assert!(report.partitions_equal);
        assert!(report.transversality_all);
    }
}
