//! The standing collection of placed shapes and gluing pairs that the
//! verification suite runs over: straight and skew shapes with up to six
//! boxes, placed with default, stretched, fractional, and multi-page
//! contents.

use num::BigRational;

use crate::combinatorics::{ContentsSpec, Partition, PlacedSkewShape, SkewShape};

fn shape(lambda: &str, mu: &str) -> SkewShape {
    let l = Partition::parse(lambda).expect("valid partition");
    let m = Partition::parse(mu).expect("valid partition");
    SkewShape::new(l, m).expect("mu inside lambda")
}

fn auto(lambda: &str, mu: &str) -> PlacedSkewShape {
    PlacedSkewShape::auto(shape(lambda, mu)).expect("default contents always place")
}

fn explicit(lambda: &str, mu: &str, contents: Vec<BigRational>) -> PlacedSkewShape {
    PlacedSkewShape::from_spec(shape(lambda, mu), &ContentsSpec::Explicit(contents))
        .expect("catalog placement is valid")
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

fn half(n: i64) -> BigRational {
    BigRational::new(n.into(), 2.into())
}

/// Every placed shape the suite exercises, smallest first.
pub fn catalog_shapes() -> Vec<PlacedSkewShape> {
    vec![
        auto("1", ""),
        auto("2", ""),
        auto("1,1", ""),
        auto("3", ""),
        auto("2,1", ""),
        auto("1,1,1", ""),
        auto("2,2", "1"),
        auto("3,2", "2"),
        auto("3,2,1", "2,1"),
        explicit("3,2,1", "2,1", vec![rat(-4), rat(0), rat(4)]),
        explicit("3,1", "2", vec![rat(-1), half(1)]),
        explicit("2,2", "1", vec![half(-1), half(1), half(3)]),
        explicit("3,3,1", "2,2", vec![rat(-2), half(1), half(3)]),
        auto("4", ""),
        auto("2,2", ""),
        auto("3,1", ""),
        auto("2,1,1", ""),
        auto("3,3", "1,1"),
        auto("2,2,1", "1"),
        auto("4,2", "2,1"),
        auto("3,2", ""),
        auto("2,2,1", ""),
        auto("2,2,2", "1"),
        auto("3,3", "1"),
        auto("4,2", "1"),
        auto("3,2,1", ""),
        auto("4,2", ""),
    ]
}

/// Pairs that glue validly in both directions, for the induced-module
/// checks; total box counts stay at six or below.
pub fn catalog_glue_pairs() -> Vec<(PlacedSkewShape, PlacedSkewShape)> {
    vec![
        (explicit("1", "", vec![rat(0)]), explicit("1", "", vec![rat(1)])),
        (explicit("1", "", vec![rat(0)]), explicit("1", "", vec![half(1)])),
        (explicit("2", "", vec![rat(0), rat(1)]), explicit("1", "", vec![rat(2)])),
        (auto("2,1", ""), explicit("1", "", vec![half(9)])),
        (explicit("1,1", "", vec![rat(-1), rat(0)]), explicit("2", "", vec![rat(1), rat(2)])),
        (explicit("2", "", vec![rat(0), rat(1)]), explicit("1,1", "", vec![rat(2), rat(3)])),
        (explicit("1", "", vec![rat(0)]), explicit("2,1", "", vec![half(-1), half(1), half(3)])),
        (auto("2,1", ""), explicit("2,1", "", vec![half(-1), half(1), half(3)])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::induction::glue_shapes;

    #[test]
    fn shapes_are_plentiful_small_and_distinct() {
        let shapes = catalog_shapes();
        assert!(shapes.len() >= 20);
        for p in &shapes {
            assert!((1..=6).contains(&p.n_boxes()));
        }
        for (i, a) in shapes.iter().enumerate() {
            for b in &shapes[i + 1..] {
                assert_ne!(a, b);
            }
        }
    }

    #[test]
    fn shapes_cover_fractional_and_multi_page_placements() {
        let shapes = catalog_shapes();
        assert!(shapes
            .iter()
            .any(|p| p.contents().iter().any(|c| !c.is_integer())));
        assert!(shapes.iter().any(|p| {
            let pages: std::collections::BTreeSet<BigRational> =
                p.contents().iter().map(|c| c - c.floor()).collect();
            pages.len() >= 2
        }));
        assert!(shapes.iter().any(|p| !p.shape().mu().is_empty()));
    }

    #[test]
    fn glue_pairs_glue_and_stay_small() {
        for (theta, phi) in catalog_glue_pairs() {
            assert!(theta.n_boxes() + phi.n_boxes() <= 6);
            let pair = glue_shapes(&theta, &phi)
                .unwrap_or_else(|e| panic!("{} * {}: {}", theta.shape(), phi.shape(), e));
            assert_eq!(
                pair.vertical.n_boxes(),
                theta.n_boxes() + phi.n_boxes()
            );
            assert_eq!(
                pair.horizontal.n_boxes(),
                theta.n_boxes() + phi.n_boxes()
            );
        }
    }
}
