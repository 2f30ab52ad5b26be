// Each integration test target compiles its own copy of this module and
// uses a different slice of it.
#![allow(dead_code)]

//! Brute-force reference implementations used as oracles.
//!
//! Everything here works on raw element sets built by naive multiplication
//! closure — no stabilizer chains, no sifting, no canonical-key machinery —
//! so agreement with the engine is a genuine two-route check.

use std::collections::HashSet;

use strong_closure::Perm;

/// Exhaustive closure of a generating set by repeated multiplication.
pub fn brute_elements(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let mut seen: HashSet<Perm> = HashSet::new();
    let id = Perm::identity(degree);
    seen.insert(id.clone());
    let mut queue = vec![id];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i].clone();
        for g in gens {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
        i += 1;
    }
    queue.sort_unstable();
    queue
}

pub fn brute_contains(elems: &[Perm], p: &Perm) -> bool {
    elems.binary_search(p).is_ok()
}

/// N_G(H) by definition: all g with H^g = H as sets.
pub fn brute_normalizer(g_elems: &[Perm], h_elems: &[Perm]) -> Vec<Perm> {
    let h_set: HashSet<&Perm> = h_elems.iter().collect();
    let mut out: Vec<Perm> = g_elems
        .iter()
        .filter(|g| h_elems.iter().all(|h| h_set.contains(&h.conjugate(g))))
        .cloned()
        .collect();
    out.sort_unstable();
    out
}

/// C_G(H) by definition: all g commuting with every element of H.
pub fn brute_centralizer(g_elems: &[Perm], h_elems: &[Perm]) -> Vec<Perm> {
    let mut out: Vec<Perm> = g_elems
        .iter()
        .filter(|g| h_elems.iter().all(|h| h.compose(g) == g.compose(h)))
        .cloned()
        .collect();
    out.sort_unstable();
    out
}

/// ⟨H^G⟩ by definition: close the set of all conjugates of all of H.
pub fn brute_normal_closure(degree: usize, g_elems: &[Perm], h_elems: &[Perm]) -> Vec<Perm> {
    let mut conjugates: Vec<Perm> = Vec::new();
    for h in h_elems {
        for g in g_elems {
            conjugates.push(h.conjugate(g));
        }
    }
    conjugates.sort_unstable();
    conjugates.dedup();
    brute_elements(degree, &conjugates)
}

/// All subgroups as sorted element sets: every cyclic subgroup, then closure
/// under pairwise joins of anything already found.
pub fn brute_subgroup_sets(degree: usize, g_elems: &[Perm]) -> Vec<Vec<Perm>> {
    let mut found: HashSet<Vec<Perm>> = HashSet::new();
    found.insert(vec![Perm::identity(degree)]);
    for x in g_elems {
        found.insert(brute_elements(degree, std::slice::from_ref(x)));
    }
    loop {
        let snapshot: Vec<Vec<Perm>> = found.iter().cloned().collect();
        let before = found.len();
        for (i, a) in snapshot.iter().enumerate() {
            for b in &snapshot[i + 1..] {
                let a_in_b = a.iter().all(|x| b.binary_search(x).is_ok());
                let b_in_a = b.iter().all(|x| a.binary_search(x).is_ok());
                if a_in_b || b_in_a {
                    continue; // the join is just the bigger one
                }
                let mut gens: Vec<Perm> = a.clone();
                gens.extend(b.iter().cloned());
                found.insert(brute_elements(degree, &gens));
            }
        }
        if found.len() == before {
            break;
        }
    }
    let mut out: Vec<Vec<Perm>> = found.into_iter().collect();
    out.sort_by(|x, y| (x.len(), x.as_slice()).cmp(&(y.len(), y.as_slice())));
    out
}

/// Is the sorted set `h` normal inside the sorted set `k` (h ⊆ k assumed)?
pub fn brute_is_normal_in(h: &[Perm], k: &[Perm]) -> bool {
    k.iter()
        .all(|g| h.iter().all(|x| h.binary_search(&x.conjugate(g)).is_ok()))
}

/// Subnormality by exhaustive chain search over the full subgroup lattice:
/// BFS upward from H along the "normal in" relation until G is reached.
pub fn brute_is_subnormal(degree: usize, g_elems: &[Perm], h_elems: &[Perm]) -> bool {
    let lattice = brute_subgroup_sets(degree, g_elems);
    let start = lattice
        .iter()
        .position(|s| s.as_slice() == h_elems)
        .expect("H is a subgroup of G");
    let goal = lattice.len() - 1; // largest = G itself
    let mut reachable = vec![false; lattice.len()];
    reachable[start] = true;
    let mut frontier = vec![start];
    while let Some(i) = frontier.pop() {
        if i == goal {
            return true;
        }
        for (j, candidate) in lattice.iter().enumerate() {
            if reachable[j] || candidate.len() <= lattice[i].len() {
                continue;
            }
            let contained = lattice[i]
                .iter()
                .all(|x| candidate.binary_search(x).is_ok());
            if contained && brute_is_normal_in(&lattice[i], candidate) {
                reachable[j] = true;
                frontier.push(j);
            }
        }
    }
    false
}
