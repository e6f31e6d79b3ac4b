//! Fast paths checked against exhaustive reference implementations on
//! small random inputs.

use bipwqo::graph::{find_bipartition, Graph, GraphBuilder};
use bipwqo::harness::{canonical_key, enumerate_bipartite};
use bipwqo::matcher::{
    are_isomorphic, count_induced_embeddings, find_induced_embedding, path_subgraph_dfs, path_subgraph_dp,
};
use bipwqo::perm::{contains_pattern, find_pattern, verify_occurrence, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Edge probability drawn from `density`, then each pair independently.
fn random_graph(rng: &mut impl Rng, n: usize, density: std::ops::Range<f64>) -> Graph {
    let p = rng.gen_range(density);
    let mut b = GraphBuilder::new(n);
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                b.add_edge(u, v);
            }
        }
    }
    b.build()
}

/// All injective maps `1..=k -> 1..=n`, in lexicographic order.
fn injections(k: usize, n: usize, f: &mut impl FnMut(&[usize])) {
    fn go(k: usize, n: usize, cur: &mut Vec<usize>, used: &mut [bool], f: &mut impl FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for x in 1..=n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                go(k, n, cur, used, f);
                cur.pop();
                used[x] = false;
            }
        }
    }
    go(k, n, &mut Vec::new(), &mut vec![false; n + 1], f);
}

fn brute_embeddings(pattern: &Graph, host: &Graph) -> usize {
    let mut count = 0;
    injections(pattern.n(), host.n(), &mut |m| {
        let ok = (1..=pattern.n())
            .all(|u| (u + 1..=pattern.n()).all(|v| pattern.has_edge(u, v) == host.has_edge(m[u - 1], m[v - 1])));
        count += usize::from(ok);
    });
    count
}

#[test]
fn matcher_agrees_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..400 {
        let hn = rng.gen_range(1..=7);
        let pn = rng.gen_range(1..=hn.min(5));
        let host = random_graph(&mut rng, hn, 0.2..0.8);
        let pattern = random_graph(&mut rng, pn, 0.2..0.8);
        let expected = brute_embeddings(&pattern, &host);
        assert_eq!(count_induced_embeddings(&pattern, &host, usize::MAX), expected);
        match find_induced_embedding(&pattern, &host) {
            Some(e) => assert!(expected > 0 && e.verify(&pattern, &host)),
            None => assert_eq!(expected, 0),
        }
    }
}

fn brute_path(g: &Graph, k: usize) -> bool {
    let mut found = false;
    injections(k, g.n(), &mut |m| {
        found |= m.windows(2).all(|w| g.has_edge(w[0], w[1]));
    });
    found
}

#[test]
fn path_search_agrees_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let n = rng.gen_range(1..=7);
        let g = random_graph(&mut rng, n, 0.15..0.6);
        for k in 1..=n {
            let want = brute_path(&g, k);
            assert_eq!(path_subgraph_dfs(&g, k), want, "dfs k={k}");
            assert_eq!(path_subgraph_dp(&g, k), want, "dp k={k}");
        }
    }
}

fn standardize(values: &[usize]) -> Permutation {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    Permutation::new(values.iter().map(|v| sorted.binary_search(v).unwrap() + 1).collect()).unwrap()
}

fn brute_contains(host: &Permutation, pattern: &Permutation) -> bool {
    let (n, k) = (host.len(), pattern.len());
    (0u32..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .any(|s| {
            let vals: Vec<usize> = (1..=n).filter(|i| s >> (i - 1) & 1 == 1).map(|i| host.apply(i)).collect();
            standardize(&vals) == *pattern
        })
}

#[test]
fn pattern_containment_agrees_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..300 {
        let n = rng.gen_range(1..=9);
        let k = rng.gen_range(1..=n.min(4));
        let mut h: Vec<usize> = (1..=n).collect();
        h.shuffle(&mut rng);
        let mut p: Vec<usize> = (1..=k).collect();
        p.shuffle(&mut rng);
        let (host, pattern) = (Permutation::new(h).unwrap(), Permutation::new(p).unwrap());
        let want = brute_contains(&host, &pattern);
        assert_eq!(contains_pattern(&host, &pattern), want);
        if let Some(pos) = find_pattern(&host, &pattern) {
            assert!(verify_occurrence(&host, &pattern, &pos));
        }
    }
}

fn brute_bipartite(g: &Graph) -> bool {
    (0u32..1 << g.n()).any(|s| g.edges().all(|(u, v)| (s >> (u - 1) & 1) != (s >> (v - 1) & 1)))
}

#[test]
fn bipartition_agrees_with_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..300 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n, 0.1..0.5);
        match find_bipartition(&g) {
            Some(b) => {
                assert!(b.validate(&g).is_ok());
                assert!(brute_bipartite(&g));
            }
            None => assert!(!brute_bipartite(&g)),
        }
    }
}

#[test]
fn canonical_keys_separate_exactly_the_isomorphism_classes() {
    let graphs: Vec<Graph> = enumerate_bipartite(6, false).unwrap().collect();
    for (i, g) in graphs.iter().enumerate() {
        for h in &graphs[i + 1..] {
            assert!(!are_isomorphic(g, h));
            assert_ne!(canonical_key(g), canonical_key(h));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for g in &graphs {
        let mut ids: Vec<usize> = (1..=g.n()).collect();
        ids.shuffle(&mut rng);
        assert_eq!(canonical_key(&g.relabel(&ids).unwrap()), canonical_key(g));
    }
}
