//! The base group engine: a permutation group given by generators, backed by
//! a lazily built stabilizer chain.
//!
//! The chain is deterministic: base points are chosen as the smallest moved
//! point at the time a level is created, orbits are extended in BFS discovery
//! order, and generators are processed in the order given. Two groups built
//! from the same generator list produce identical chains, orders, witnesses
//! and canonical element lists.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Elements are only materialized for groups of order at most this.
pub const ENUM_BOUND: u64 = 10_000;

/// Default bound for full subgroup-lattice enumeration.
pub const LATTICE_BOUND: u64 = 2_000;

/// Default bound for subgroup-by-order enumeration inside p-groups.
pub const PGROUP_LAYER_BOUND: u64 = 4_096;

#[derive(Clone)]
pub struct Group {
    inner: Arc<Inner>,
}

struct Inner {
    degree: usize,
    gens: Vec<Perm>,
    chain: OnceLock<StabChain>,
    /// Lex-sorted element list, populated lazily or pre-seeded at build time.
    elems: OnceLock<Vec<Perm>>,
    order: OnceLock<u64>,
    classes: OnceLock<Vec<ConjClass>>,
    normals: OnceLock<Vec<Group>>,
    lattice: OnceLock<Vec<Group>>,
}

/// A conjugacy class of group elements. `members` is lex-sorted, so
/// `rep = members[0]` is the canonical representative.
#[derive(Clone)]
pub struct ConjClass {
    pub members: Vec<Perm>,
}

impl ConjClass {
    pub fn rep(&self) -> &Perm {
        &self.members[0]
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }
}

impl Group {
    /// Group generated by `gens` on `degree` points. Identity generators are
    /// dropped; duplicates are kept (harmless to the chain).
    pub fn from_generators(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        let gens: Vec<Perm> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(Group {
            inner: Arc::new(Inner {
                degree,
                gens,
                chain: OnceLock::new(),
                elems: OnceLock::new(),
                order: OnceLock::new(),
                classes: OnceLock::new(),
                normals: OnceLock::new(),
                lattice: OnceLock::new(),
            }),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Group::from_generators(degree, vec![]).expect("trivial group")
    }

    /// Builds a group from a known full element set, pre-seeding the element
    /// cache so no chain is required for membership or enumeration.
    /// `elems` must be the closure of `gens` (not re-verified here; the
    /// engine-oracle tests cross-check all construction paths).
    pub(crate) fn from_elements(degree: usize, gens: Vec<Perm>, mut elems: Vec<Perm>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        let g = Group::from_generators(degree, gens).expect("degrees checked by caller");
        let _ = g.inner.order.set(elems.len() as u64);
        let _ = g.inner.elems.set(elems);
        g
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.inner.gens
    }

    pub fn identity(&self) -> Perm {
        Perm::identity(self.inner.degree)
    }

    pub fn is_trivial(&self) -> bool {
        self.inner.gens.is_empty() || self.order() == 1
    }

    fn chain(&self) -> &StabChain {
        self.inner
            .chain
            .get_or_init(|| StabChain::build(self.inner.degree, &self.inner.gens))
    }

    /// Group order, from the pre-seeded element count or the stabilizer chain.
    pub fn order(&self) -> u64 {
        if let Some(&o) = self.inner.order.get() {
            return o;
        }
        let o = self.chain().order;
        let _ = self.inner.order.set(o);
        o
    }

    /// Membership test: binary search when the element list is materialized,
    /// otherwise sifting through the stabilizer chain.
    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.inner.degree {
            return false;
        }
        if let Some(elems) = self.inner.elems.get() {
            return elems.binary_search(p).is_ok();
        }
        self.chain().sift(p.clone()).is_none()
    }

    /// All elements in lex order on image tables. Refuses above [`ENUM_BOUND`]
    /// rather than truncating.
    pub fn elements(&self) -> Result<&[Perm]> {
        if let Some(elems) = self.inner.elems.get() {
            return Ok(elems);
        }
        let order = self.order();
        if order > ENUM_BOUND {
            return Err(Error::BoundExceeded {
                order,
                bound: ENUM_BOUND,
            });
        }
        let mut elems = self.chain().enumerate(self.inner.degree);
        elems.sort_unstable();
        debug_assert_eq!(elems.len() as u64, order);
        let _ = self.inner.elems.set(elems);
        Ok(self.inner.elems.get().expect("just set"))
    }

    /// Conjugacy classes, each lex-sorted, ordered by their representative.
    pub fn conjugacy_classes(&self) -> Result<&[ConjClass]> {
        if let Some(c) = self.inner.classes.get() {
            return Ok(c);
        }
        let elems = self.elements()?;
        let index: HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut seen = vec![false; elems.len()];
        let mut classes = Vec::new();
        for start in 0..elems.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut members = vec![elems[start].clone()];
            let mut frontier = vec![elems[start].clone()];
            while let Some(x) = frontier.pop() {
                for g in &self.inner.gens {
                    let y = x.conjugate(g);
                    let yi = index[&y];
                    if !seen[yi] {
                        seen[yi] = true;
                        members.push(y.clone());
                        frontier.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjClass { members });
        }
        let _ = self.inner.classes.set(classes);
        Ok(self.inner.classes.get().expect("just set"))
    }

    /// The conjugacy class of `x` as a lex-sorted list, walked with
    /// conjugating witnesses: returns pairs `(y, w)` with `x^w = y`.
    pub fn class_with_witnesses(&self, x: &Perm) -> Vec<(Perm, Perm)> {
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        let id = self.identity();
        seen.insert(x.clone(), ());
        let mut out = vec![(x.clone(), id)];
        let mut i = 0;
        while i < out.len() {
            let (y, w) = out[i].clone();
            for g in &self.inner.gens {
                let z = y.conjugate(g);
                if !seen.contains_key(&z) {
                    seen.insert(z.clone(), ());
                    out.push((z, w.compose(g)));
                }
            }
            i += 1;
        }
        out
    }

    pub(crate) fn normals_cache(&self) -> &OnceLock<Vec<Group>> {
        &self.inner.normals
    }

    pub(crate) fn lattice_cache(&self) -> &OnceLock<Vec<Group>> {
        &self.inner.lattice
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Group(degree {}, {} gens",
            self.inner.degree,
            self.inner.gens.len()
        )?;
        if let Some(o) = self.inner.order.get() {
            write!(f, ", order {o}")?;
        } else if let Some(c) = self.inner.chain.get() {
            write!(f, ", order {}", c.order)?;
        }
        write!(f, ")")
    }
}

/// Closure of `gens` by breadth-first multiplication. Used internally for
/// small spans where building a chain would be overkill.
pub(crate) fn span_elements(degree: usize, gens: &[Perm]) -> Vec<Perm> {
    let mut set: HashMap<Perm, ()> = HashMap::new();
    let id = Perm::identity(degree);
    set.insert(id.clone(), ());
    let mut queue = vec![id];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i].clone();
        for g in gens {
            let y = x.compose(g);
            if !set.contains_key(&y) {
                set.insert(y.clone(), ());
                queue.push(y);
            }
        }
        i += 1;
    }
    queue.sort_unstable();
    queue
}

/// Span of `⟨seed ∪ more⟩`, growing the generator list one missing element
/// of `more` at a time so spans never run with huge generating sets.
/// Returns the element set and the small generating set that produced it.
pub(crate) fn incremental_span(
    degree: usize,
    seed: &[Perm],
    more: &[Perm],
) -> (Vec<Perm>, Vec<Perm>) {
    let mut gens: Vec<Perm> = seed.to_vec();
    let mut elems = span_elements(degree, &gens);
    loop {
        match more.iter().find(|m| elems.binary_search(m).is_err()) {
            Some(m) => {
                gens.push(m.clone());
                elems = span_elements(degree, &gens);
            }
            None => return (elems, gens),
        }
    }
}

/// Greedily picks a small generating set from a lex-sorted element list.
pub(crate) fn reduce_generators(degree: usize, elems: &[Perm]) -> Vec<Perm> {
    let mut gens: Vec<Perm> = Vec::new();
    let mut span: Vec<Perm> = vec![Perm::identity(degree)];
    for e in elems {
        if e.is_identity() || span.binary_search(e).is_ok() {
            continue;
        }
        gens.push(e.clone());
        span = span_elements(degree, &gens);
        if span.len() == elems.len() {
            break;
        }
    }
    gens
}

// ---------------------------------------------------------------------------
// Stabilizer chain
// ---------------------------------------------------------------------------

struct Level {
    /// 0-indexed base point.
    base: u32,
    /// Generators first attached at this level. The stabilizer this level
    /// represents is generated by these together with all deeper levels'
    /// generators (which fix this base and every earlier one).
    gens: Vec<Perm>,
    /// Orbit of `base` under the effective generators, in BFS order.
    orbit: Vec<u32>,
    /// point -> u with base^u = point.
    transversal: HashMap<u32, Perm>,
}

impl Level {
    fn new(base: u32) -> Self {
        Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: HashMap::new(),
        }
    }
}

pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<Level>,
    pub(crate) order: u64,
}

impl StabChain {
    fn build(degree: usize, gens: &[Perm]) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
            order: 1,
        };
        for g in gens {
            chain.add_generator(0, g.clone());
        }
        chain.order = chain
            .levels
            .iter()
            .try_fold(1u64, |acc, l| acc.checked_mul(l.orbit.len() as u64))
            .expect("group order exceeds u64");
        chain
    }

    /// Generators effective at `level`: attached there or deeper.
    fn effective_gens(&self, level: usize) -> Vec<Perm> {
        self.levels[level..]
            .iter()
            .flat_map(|l| l.gens.iter().cloned())
            .collect()
    }

    /// Sifts `g` through levels `from..`; returns the non-identity residue,
    /// or `None` if `g` factors fully through the transversals.
    fn sift_from(&self, from: usize, mut g: Perm) -> Option<Perm> {
        for level in self.levels.iter().skip(from) {
            if g.is_identity() {
                return None;
            }
            let x = g.apply0(level.base);
            match level.transversal.get(&x) {
                Some(t) => g = g.compose(&t.inverse()),
                None => return Some(g),
            }
        }
        if g.is_identity() {
            None
        } else {
            Some(g)
        }
    }

    fn sift(&self, g: Perm) -> Option<Perm> {
        self.sift_from(0, g)
    }

    /// Attaches `g` (which must fix the bases of all levels before `level`)
    /// and restores completeness at this level and below.
    fn add_generator(&mut self, level: usize, g: Perm) {
        if g.is_identity() || self.sift_from(level, g.clone()).is_none() {
            return;
        }
        if level == self.levels.len() {
            let base = g.smallest_moved().expect("non-identity") - 1;
            self.levels.push(Level::new(base));
        }
        self.levels[level].gens.push(g);
        self.complete_level(level);
    }

    /// Fixpoint at one level: rebuild the orbit under the effective
    /// generators and sift every Schreier generator through the deeper
    /// chain, pushing residues down (which recursively completes deeper
    /// levels and may enlarge this level's effective generator set).
    fn complete_level(&mut self, level: usize) {
        loop {
            let gens = self.effective_gens(level);
            self.rebuild_orbit(level, &gens);
            let orbit = self.levels[level].orbit.clone();
            let mut changed = false;
            'pairs: for &x in &orbit {
                let t_x = self.levels[level].transversal[&x].clone();
                for s in &gens {
                    let y = s.apply0(x);
                    let t_y = self.levels[level].transversal[&y].clone();
                    let schreier = t_x.compose(s).compose(&t_y.inverse());
                    if let Some(residue) = self.sift_from(level + 1, schreier) {
                        self.add_generator(level + 1, residue);
                        changed = true;
                        break 'pairs;
                    }
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn rebuild_orbit(&mut self, level: usize, gens: &[Perm]) {
        let base = self.levels[level].base;
        let lv = &mut self.levels[level];
        lv.orbit.clear();
        lv.transversal.clear();
        lv.orbit.push(base);
        lv.transversal.insert(base, Perm::identity(self.degree));
        let mut i = 0;
        while i < lv.orbit.len() {
            let x = lv.orbit[i];
            let t_x = lv.transversal[&x].clone();
            for g in gens {
                let y = g.apply0(x);
                if !lv.transversal.contains_key(&y) {
                    lv.orbit.push(y);
                    lv.transversal.insert(y, t_x.compose(g));
                }
            }
            i += 1;
        }
    }

    /// All group elements as transversal products, deepest level first.
    fn enumerate(&self, degree: usize) -> Vec<Perm> {
        let mut elems = vec![Perm::identity(degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for h in &elems {
                for x in &level.orbit {
                    next.push(h.compose(&level.transversal[x]));
                }
            }
            elems = next;
        }
        elems
    }
}
