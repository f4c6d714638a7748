use compat_core::dp::{self, AdjacencyMatrix, Classical, Strassen};
use compat_core::generate::{random_polygon, GeneratorConfig};
use compat_core::oracles::{cubic_dp, recursive_count};
use compat_core::{DecompositionTree, DiagonalFan, Error, IndexPair, Polygon, Triangulation};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(n: usize, density: f64, rng: &mut ChaCha8Rng) -> AdjacencyMatrix {
    let chords: Vec<IndexPair> = (0..n)
        .flat_map(|i| (i + 2..n).map(move |j| (i, j)))
        .filter(|_| rng.gen_bool(density))
        .map(|(i, j)| IndexPair::new(i, j))
        .collect();
    AdjacencyMatrix::from_diagonals(n, &chords).unwrap()
}

#[test]
fn ear_clipping_invariants_on_random_polygons() {
    for seed in 0..1000u64 {
        let n = 3 + (seed as usize * 37) % 298;
        let cfg = if seed % 4 == 0 { GeneratorConfig::new(n).with_reflex_fraction(0.5) } else { GeneratorConfig::new(n) };
        let p = random_polygon(&cfg, seed).unwrap();
        let t = Triangulation::ear_clipping(&p);
        t.check_invariants().unwrap();
        if seed % 10 != 0 {
            continue;
        }
        for d in t.diagonals() {
            assert!(p.is_diagonal(d.lo(), d.hi()).unwrap());
        }
        let fans = DiagonalFan::new(&t);
        assert_eq!(fans.total(), 2 * (n - 3));
        let mut tris: Vec<[usize; 3]> = t.triangles().iter().map(|tr| sorted(*tr)).collect();
        tris.sort_unstable();
        for i in 0..n {
            for w in fans.with_edges(i).windows(2) {
                let tri = sorted([i, (i + w[0]) % n, (i + w[1]) % n]);
                assert!(tris.binary_search(&tri).is_ok(), "fan triangle {tri:?}");
            }
        }
        let tree = DecompositionTree::build(&t);
        assert!(tree.height() as f64 <= 2.0 * (n as f64).log2() + 2.0);
        for (_, node) in tree.internal_nodes() {
            let [a, b] = node.children.unwrap();
            let larger = tree.node(a).triangles.len().max(tree.node(b).triangles.len());
            assert!(larger <= (2 * node.triangles.len()).div_ceil(3));
        }
    }
}

fn sorted(mut t: [usize; 3]) -> [usize; 3] {
    t.sort_unstable();
    t
}

#[test]
fn validation_rejects_simplicity_breaking_transpositions() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut rejected = 0;
    for seed in 0..1000u64 {
        let n = rng.gen_range(5..40);
        let p = random_polygon(&GeneratorConfig::new(n), seed).unwrap();
        assert!(Polygon::validate(p.vertices().to_vec()).is_ok());
        let mut v = p.vertices().to_vec();
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        v.swap(i, j);
        let simple = brute_force_simple(&v);
        match Polygon::validate(v) {
            Ok(_) => assert!(simple),
            Err(Error::NotSimple(..)) => {
                assert!(!simple);
                rejected += 1;
            }
            // a swap can also create collinear neighbours
            Err(_) => {}
        }
    }
    assert!(rejected > 500);
}

/// O(n^2) pairwise edge test with exact integer arithmetic.
fn brute_force_simple(v: &[compat_core::Point]) -> bool {
    use compat_core::geometry::{classify_segments, SegmentRelation};
    let n = v.len();
    for i in 0..n {
        for j in i + 1..n {
            let adjacent = j == i + 1 || (i == 0 && j == n - 1);
            let rel = classify_segments(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]);
            let ok = if adjacent {
                rel == SegmentRelation::EndpointTouch
            } else {
                rel == SegmentRelation::Disjoint
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

#[test]
fn dp_matches_cubic_oracle_and_kernels_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in (3..40).chain([64, 65]) {
        for density in [0.1, 0.5, 1.0] {
            let a = random_graph(n, density, &mut rng);
            let classical = dp::decide(&a, &Classical).unwrap();
            let strassen = dp::decide(&a, &Strassen { cutoff: 2 }).unwrap();
            assert_eq!(classical.bits(), cubic_dp(&a));
            assert_eq!(classical.bits(), strassen.bits());
            let count = dp::count_triangulations(&a).unwrap();
            assert_eq!(classical.bit(0, n - 1), count > 0u8.into());
            if n <= 14 {
                assert_eq!(count, recursive_count(&a));
            }
        }
    }
}

#[test]
fn reduction_recovers_boolean_products() {
    use compat_core::dp::reduction::boolean_product;
    use compat_core::dp::{DPMatrix, Mode};
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..20 {
        let m = rng.gen_range(1..=8);
        let mut mat = || -> Vec<Vec<bool>> { (0..m).map(|_| (0..m).map(|_| rng.gen_bool(0.3)).collect()).collect() };
        let (left, right) = (mat(), mat());
        let want = boolean_product(&left, &right);
        let g = dp::build_reduction_graph(&left, &right);
        let mut counts: DPMatrix<num_bigint::BigInt> = DPMatrix::new(g.adjacency(), Mode::Counting);
        counts.run(&Classical).unwrap();
        let decision = dp::decide(g.adjacency(), &Classical).unwrap();
        for i in 1..=m {
            for j in 1..=m {
                assert_eq!(g.chain_value(&counts, i, j), want[i - 1][j - 1]);
                let closure = (i..=m).any(|a| (1..=j).any(|b| want[a - 1][b - 1]));
                let (x, z) = g.chain_interval(i, j);
                assert_eq!(decision.bit(x, z), closure);
            }
        }
    }
}

proptest! {
    #[test]
    fn diagonal_test_is_symmetric(seed in 0u64..500, n in 4usize..30) {
        let p = random_polygon(&GeneratorConfig::new(n), seed).unwrap();
        for i in 0..n {
            for j in 0..n {
                if i != j && !p.adjacent(i, j) {
                    prop_assert_eq!(p.is_diagonal(i, j).unwrap(), p.is_diagonal(j, i).unwrap());
                }
            }
        }
    }

    #[test]
    fn extraction_returns_a_triangulation(seed in 0u64..1000, n in 3usize..24) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_graph(n, 0.6, &mut rng);
        let m = dp::decide(&a, &Classical).unwrap();
        match dp::extract_triangulation(&m, &a).unwrap() {
            None => prop_assert!(!cubic_dp(&a)[0][n - 1]),
            Some(diags) => {
                prop_assert_eq!(diags.len(), n - 3);
                for d in &diags {
                    prop_assert!(a.get(d.lo(), d.hi()));
                    for e in &diags {
                        prop_assert!(!d.interleaves(e));
                    }
                }
            }
        }
    }
}
