use gendo_core::enumeration::{catalogue, count_classes, CatalogueKind, CodeSpec};
use gendo_core::homdim::dimensions;
use gendo_core::nakayama::gendo_kupisch;
use gendo_core::nakayama::oracle::oracle_dims;
use gendo_core::orbits::walk_gaps;
use gendo_core::presentation::{cartan, gamma_presentation, loewy};
use gendo_core::tree::{make_star, random_tree};
use gendo_core::walk::is_rotation;
use gendo_core::{Dim, HookLabel, SpecialSubset};
use num_bigint::BigUint;

fn star_data(n: usize, m: u32, positions: &[usize]) -> (gendo_core::BrauerTree, SpecialSubset) {
    let t = make_star(n, m).unwrap();
    let w = SpecialSubset::new(&t, positions.iter().map(|j| HookLabel::new(j.to_string(), "c"))).unwrap();
    (t, w)
}

#[test]
fn star_presentations_realize_gendo_kupisch_series() {
    for n in 1..=6 {
        for m in 1..=3u32 {
            for mask in 0u32..1 << n {
                let positions: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                let (t, w) = star_data(n, m, &positions);
                let q = gamma_presentation(&t, &w).unwrap();
                let cycle = q.nakayama_cycle().unwrap_or_else(|| panic!("n={n} m={m} {positions:?}"));
                let c = cartan(&t, &w).unwrap();
                let sums: Vec<usize> = cycle.iter().map(|v| c.row_sum(v).unwrap() as usize).collect();
                let k = gendo_kupisch(n, m as usize, &positions).unwrap();
                assert!(is_rotation(&sums, k.entries()), "n={n} m={m} {positions:?}: {sums:?} vs {k}");
            }
        }
    }
}

#[test]
fn loewy_lengths_are_cartan_row_sums() {
    for seed in 0..40 {
        let t = random_tree(1 + seed % 6, seed as u64).unwrap();
        let v = t.vertices().next().unwrap().clone();
        let t = t.with_exceptional(&v, 1 + (seed % 3) as u32).unwrap();
        let w = SpecialSubset::new(&t, [gendo_core::tree::h_set(&t)[0].clone()]).unwrap();
        let c = cartan(&t, &w).unwrap();
        for (x, shape) in loewy(&t, &w).unwrap() {
            assert_eq!(shape.composition_length() as u64, c.row_sum(&x).unwrap(), "seed {seed}, {x}");
        }
    }
}

#[test]
fn catalogues_cover_every_class_once() {
    for n in 1..=6 {
        let naka = catalogue(n, 2, CatalogueKind::Naka).unwrap();
        assert_eq!(BigUint::from(naka.entries.len()), count_classes(CodeSpec::Binary, n).unwrap());
        let tree = catalogue(n, 2, CatalogueKind::Tree).unwrap();
        assert_eq!(BigUint::from(tree.entries.len()), count_classes(CodeSpec::Special, 2 * n).unwrap());
        for e in &tree.entries {
            if e.positions.is_empty() {
                assert_eq!(e.dims.domdim, Dim::Infinite);
            }
        }
    }
}

#[test]
fn nakayama_catalogue_dims_match_star_walks() {
    for n in 1..=5 {
        for entry in catalogue(n, 1, CatalogueKind::Naka).unwrap().entries {
            let (t, w) = star_data(n, 1, &entry.positions);
            assert_eq!(entry.dims, dimensions(&t, &w).unwrap(), "n={n} {}", entry.word);
            let k = gendo_kupisch(n, 1, &entry.positions).unwrap();
            assert_eq!(entry.dims, oracle_dims(&k));
        }
    }
}

#[test]
fn original_walk_gaps_give_the_dimensions() {
    for seed in 0..60u64 {
        let t = random_tree(1 + (seed % 7) as usize, seed).unwrap();
        let labels = gendo_core::tree::h_set(&t);
        for (i, a) in labels.iter().enumerate() {
            for b in &labels[i + 1..] {
                let Ok(w) = SpecialSubset::new(&t, [a.clone(), b.clone()]) else { continue };
                let gaps = walk_gaps(&t, w.iter()).unwrap();
                let d = dimensions(&t, &w).unwrap();
                assert_eq!(d.domdim, Dim::Finite(*gaps.iter().min().unwrap()));
                assert_eq!(d.gorenstein, Dim::Finite(*gaps.iter().max().unwrap()));
            }
        }
    }
}
