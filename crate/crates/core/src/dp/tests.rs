use super::*;
use crate::oracles::{cubic_dp, recursive_count};

fn diag(pairs: &[(usize, usize)]) -> Vec<IndexPair> {
    pairs.iter().map(|&(a, b)| IndexPair::new(a, b)).collect()
}

#[test]
fn small_decisions() {
    assert!(triangulation_exists(&AdjacencyMatrix::complete(4)).unwrap());
    assert!(!triangulation_exists(&AdjacencyMatrix::from_diagonals(4, &[]).unwrap()).unwrap());
    let hex = AdjacencyMatrix::from_diagonals(6, &diag(&[(0, 3)])).unwrap();
    assert!(!triangulation_exists(&hex).unwrap());
    assert!(triangulation_exists(&AdjacencyMatrix::from_diagonals(3, &[]).unwrap()).unwrap());
}

#[test]
fn missing_boundary_edge_is_rejected() {
    let mut rows = vec![vec![false; 5]; 5];
    for i in 0..5 {
        let j = (i + 1) % 5;
        if i != 2 {
            rows[i][j] = true;
            rows[j][i] = true;
        }
    }
    assert_eq!(AdjacencyMatrix::from_rows(&rows), Err(Error::MissingBoundaryEdge(2)));
}

#[test]
fn base_case_rules() {
    let a = AdjacencyMatrix::from_diagonals(4, &[]).unwrap();
    let mut m: DPMatrix<i64> = DPMatrix::new(&a, Mode::Decision);
    m.compute_block(&Classical, 1, 1, 2).unwrap();
    assert!(m.bit(1, 2));
    m.compute_block(&Classical, 1, 0, 2).unwrap();
    assert!(!m.bit(0, 2));
    assert!(m.compute_block(&Classical, 1, 0, 2).is_err(), "second finalization");
}

#[test]
fn block_update_examples() {
    let a = AdjacencyMatrix::complete(8);
    let mut m: DPMatrix<i64> = DPMatrix::new(&a, Mode::Counting);
    assert_eq!(m.block_update(&Classical, 2, 1, 1, 1), Err(Error::InvalidTriple { u: 1, w: 1, v: 1 }));
    assert_eq!(m.block_update(&Classical, 2, 2, 1, 0), Err(Error::InvalidTriple { u: 2, w: 0, v: 1 }));
}

#[test]
fn block_update_of_ones_adds_block_size() {
    let a = AdjacencyMatrix::complete(8);
    let mut m: DPMatrix<i64> = DPMatrix::new(&a, Mode::Counting);
    for k in 0..2 {
        for l in 0..2 {
            m.set_finalized(k, 2 + l, 1);
            m.set_finalized(2 + k, 6 + l, 1);
        }
    }
    m.block_update(&Classical, 2, 0, 3, 1).unwrap();
    assert!((0..2).all(|i| (6..8).all(|j| *m.get(i, j) == 2)));
    // a zero source block changes nothing
    for k in 0..2 {
        for l in 0..2 {
            m.set_finalized(k, 4 + l, 0);
            m.set_finalized(4 + k, 6 + l, 1);
        }
    }
    m.block_update(&Classical, 2, 0, 3, 2).unwrap();
    assert!((0..2).all(|i| (6..8).all(|j| *m.get(i, j) == 2)));
}

#[test]
fn complete_octagon_matches_oracle() {
    let a = AdjacencyMatrix::complete(8);
    let m = decide(&a, &Classical).unwrap();
    let b = m.bits();
    assert_eq!(b, cubic_dp(&a));
    for i in 0..8 {
        for j in i + 1..8 {
            assert!(b[i][j]);
        }
    }
    assert_eq!(m.stats().finalizations, 36);
}

#[test]
fn extraction_examples() {
    let k4 = AdjacencyMatrix::complete(4);
    let m = decide(&k4, &Classical).unwrap();
    assert_eq!(extract_triangulation(&m, &k4).unwrap(), Some(diag(&[(1, 3)])));
    let tri = AdjacencyMatrix::from_diagonals(3, &[]).unwrap();
    assert_eq!(extract_triangulation(&decide(&tri, &Classical).unwrap(), &tri).unwrap(), Some(vec![]));
    let star = AdjacencyMatrix::from_diagonals(6, &diag(&[(0, 2), (0, 3), (0, 4)])).unwrap();
    let m = decide(&star, &Classical).unwrap();
    assert_eq!(extract_triangulation(&m, &star).unwrap(), Some(diag(&[(0, 2), (0, 3), (0, 4)])));
    let none = AdjacencyMatrix::from_diagonals(4, &[]).unwrap();
    assert_eq!(extract_triangulation(&decide(&none, &Classical).unwrap(), &none).unwrap(), None);
}

#[test]
fn counting_examples() {
    assert_eq!(count_triangulations(&AdjacencyMatrix::complete(6)).unwrap(), BigUint::from(14u8));
    let one = AdjacencyMatrix::from_diagonals(4, &diag(&[(1, 3)])).unwrap();
    assert_eq!(count_triangulations(&one).unwrap(), BigUint::from(1u8));
    assert_eq!(count_triangulations(&AdjacencyMatrix::complete(20)).unwrap(), BigUint::from(477_638_700u64));
    assert_eq!(count_triangulations(&AdjacencyMatrix::from_diagonals(3, &[]).unwrap()).unwrap(), BigUint::from(1u8));
}

#[test]
fn counting_matches_recursive_oracle_on_random_graphs() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(12);
    for _ in 0..20 {
        let n = 12;
        let chords: Vec<IndexPair> = (0..n)
            .flat_map(|i| (i + 2..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(0.6))
            .map(|(i, j)| IndexPair::new(i, j))
            .collect();
        let a = AdjacencyMatrix::from_diagonals(n, &chords).unwrap();
        assert_eq!(count_triangulations(&a).unwrap(), recursive_count(&a));
        assert_eq!(count_with(&a, &Strassen { cutoff: 1 }).unwrap(), recursive_count(&a));
    }
}

#[test]
fn audit_passes_on_padded_instance() {
    let a = AdjacencyMatrix::complete(13);
    let mut m: DPMatrix<i64> = DPMatrix::new(&a, Mode::Decision).with_audit(true);
    m.run(&Classical).unwrap();
    assert!(m.stats().audited_cells > 0);
    assert_eq!(m.padded_size(), 16);
    assert_eq!(m.bits(), cubic_dp(&a));
}

#[test]
fn reduction_small_cases() {
    for (bit, want) in [(true, true), (false, false)] {
        let g = build_reduction_graph(&[vec![bit]], &[vec![true]]);
        assert_eq!(g.adjacency().len(), 7);
        let m = decide(g.adjacency(), &Classical).unwrap();
        let (x, z) = g.chain_interval(1, 1);
        assert_eq!(m.bit(x, z), want);
        assert_eq!(cubic_dp(g.adjacency())[x][z], want);
    }
}

#[test]
fn identical_polygons_are_compatible() {
    use crate::geometry::fixtures::*;
    let sq = square();
    assert_eq!(compatible_fixed_correspondence(&sq, &sq).unwrap(), Some(diag(&[(1, 3)])));
    assert_eq!(compatible_fixed_correspondence(&sq, &dart()).unwrap(), Some(diag(&[(0, 2)])));
    let l = l_hexagon();
    let found = compatible_fixed_correspondence(&l, &l).unwrap().unwrap();
    assert_eq!(found.len(), 3);
    assert_eq!(compatible_fixed_correspondence(&sq, &l), Err(Error::SizeMismatch(4, 6)));
}
