use crate::error::{Error, Result};
use crate::poset::{LinearExtension, Poset};

/// Rearranges an arbitrary vertex ordering into a linear extension: the
/// minimal-removal levels are emitted bottom-up and each level keeps the
/// relative order of `cover_order`. Covers only run between distinct
/// levels, so a rainbow of the output decomposes into at most 2(h−1)
/// level-interval classes, each nesting-ordered exactly as in the input;
/// the max rainbow grows by at most that factor.
///
/// `cover_order` may be any permutation of the elements (build one with
/// [`LinearExtension::permutation`]); it does not have to respect the
/// poset. `levels` must be the minimal-removal partition, bottom level
/// first.
pub fn color_split_extension(
    p: &Poset,
    cover_order: &LinearExtension,
    levels: &[Vec<usize>],
) -> Result<LinearExtension> {
    let canonical = p.min_removal_levels();
    let mut sorted_input: Vec<Vec<usize>> = levels.to_vec();
    let mut sorted_canon: Vec<Vec<usize>> = canonical.clone();
    for l in sorted_input.iter_mut().chain(sorted_canon.iter_mut()) {
        l.sort_unstable();
    }
    if sorted_input != sorted_canon {
        return Err(Error::InvalidLevels(format!(
            "expected the minimal-removal partition into {} levels",
            canonical.len()
        )));
    }
    let mut order: Vec<usize> = Vec::with_capacity(p.n());
    for level in &canonical {
        let mut lvl = level.clone();
        lvl.sort_unstable_by_key(|&v| cover_order.pos(v));
        order.extend(lvl);
    }
    LinearExtension::new(p, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::height2_counterexample;
    use crate::layout::{cover_graph_rainbow, max_rainbow};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn shuffled(n: usize, seed: u64) -> LinearExtension {
        let mut order: Vec<usize> = (0..n).collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        order.shuffle(&mut rng);
        LinearExtension::permutation(n, order).unwrap()
    }

    #[test]
    fn antichain_keeps_input_order() {
        let p = Poset::from_relations::<_, String, String>(["a", "b", "c", "d"], [])
            .unwrap();
        let input = shuffled(4, 7);
        let levels = p.min_removal_levels();
        let out = color_split_extension(&p, &input, &levels).unwrap();
        assert_eq!(out.order(), input.order());
        assert_eq!(max_rainbow(&p, &out).unwrap().0, 0);
    }

    #[test]
    fn chain_has_unique_extension() {
        let p = Poset::from_relations(["a", "b", "c"], [("a", "b"), ("b", "c")]).unwrap();
        let input = LinearExtension::permutation(3, vec![2, 0, 1]).unwrap();
        let out = color_split_extension(&p, &input, &p.min_removal_levels()).unwrap();
        assert_eq!(out.to_labels(&p), ["a", "b", "c"]);
    }

    #[test]
    fn wrong_partition_rejected() {
        let p = Poset::from_relations(["a", "b"], [("a", "b")]).unwrap();
        let input = LinearExtension::permutation(2, vec![0, 1]).unwrap();
        let ab = vec![p.index_of("a").unwrap(), p.index_of("b").unwrap()];
        for bad in [vec![ab.clone()], vec![vec![ab[1]], vec![ab[0]]]] {
            assert!(matches!(
                color_split_extension(&p, &input, &bad),
                Err(Error::InvalidLevels(_))
            ));
        }
    }

    #[test]
    fn rainbow_grows_by_bounded_factor() {
        let (p, _, _) = height2_counterexample();
        let levels = p.min_removal_levels();
        let h = levels.len();
        assert_eq!(h, 2);
        for seed in 0..20 {
            let input = shuffled(p.n(), seed);
            let (k_in, _) = cover_graph_rainbow(&p, &input);
            let out = color_split_extension(&p, &input, &levels).unwrap();
            let (k_out, _) = max_rainbow(&p, &out).unwrap();
            assert!(
                k_out <= 2 * (h - 1) * k_in,
                "seed {seed}: {k_out} > 2(h-1)·{k_in}"
            );
        }
    }

    #[test]
    fn output_is_extension_of_layered_posets() {
        let p = crate::constructions::weak_order(&[2, 3, 2]).unwrap();
        let input = shuffled(p.n(), 42);
        let out = color_split_extension(&p, &input, &p.min_removal_levels()).unwrap();
        assert!(out.is_extension_of(&p));
    }
}
