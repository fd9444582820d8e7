use super::{GroupError, GroupTable};

/// A sorted set of element indices. `closed` is only ever set by the closure
/// routines, which guarantee the set is a subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementSet {
    elements: Vec<usize>,
    closed: bool,
}

impl ElementSet {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    fn require_closed(&self) -> Result<(), GroupError> {
        if self.closed {
            Ok(())
        } else {
            Err(GroupError::NotClosed)
        }
    }

    fn subgroup(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        ElementSet {
            elements,
            closed: true,
        }
    }
}

/// Wraps raw indices as an (unclosed) element set.
pub fn element_set(g: &GroupTable, elements: &[usize]) -> Result<ElementSet, GroupError> {
    for &x in elements {
        g.check_index(x)?;
    }
    let mut elements = elements.to_vec();
    elements.sort_unstable();
    elements.dedup();
    Ok(ElementSet {
        elements,
        closed: false,
    })
}

/// Incrementally grown subgroup: generators are added only when they fall
/// outside the current closure.
struct Closure<'a> {
    group: &'a GroupTable,
    inside: Vec<bool>,
    members: Vec<usize>,
    gens: Vec<usize>,
}

impl<'a> Closure<'a> {
    fn new(group: &'a GroupTable) -> Self {
        let mut inside = vec![false; group.order()];
        inside[0] = true;
        Closure {
            group,
            inside,
            members: vec![0],
            gens: Vec::new(),
        }
    }

    /// Returns whether `g` was new.
    fn add(&mut self, g: usize) -> bool {
        if self.inside[g] {
            return false;
        }
        self.gens.push(g);
        self.inside[g] = true;
        self.members.push(g);
        let mut i = 0;
        while i < self.members.len() {
            let x = self.members[i];
            for gi in 0..self.gens.len() {
                let y = self.group.mul(x, self.gens[gi]);
                if !self.inside[y] {
                    self.inside[y] = true;
                    self.members.push(y);
                }
            }
            i += 1;
        }
        true
    }

    /// Grows the closure until it is normalized by `by`.
    fn normalize(&mut self, by: &[usize]) {
        let mut i = 0;
        while i < self.gens.len() {
            let s = self.gens[i];
            for &g in by {
                let c = self.group.conjugate(s, g);
                self.add(c);
            }
            i += 1;
        }
    }

    fn finish(self) -> ElementSet {
        ElementSet::subgroup(self.members)
    }
}

fn generating_set(g: &GroupTable, h: &ElementSet) -> Vec<usize> {
    let mut c = Closure::new(g);
    for &x in h.elements() {
        c.add(x);
    }
    c.gens
}

pub fn subgroup_closure(g: &GroupTable, s: &ElementSet) -> Result<ElementSet, GroupError> {
    for &x in s.elements() {
        g.check_index(x)?;
    }
    let mut c = Closure::new(g);
    for &x in s.elements() {
        c.add(x);
    }
    Ok(c.finish())
}

/// Smallest normal subgroup of `g` containing `s`.
pub fn normal_closure(g: &GroupTable, s: &ElementSet) -> Result<ElementSet, GroupError> {
    for &x in s.elements() {
        g.check_index(x)?;
    }
    let mut c = Closure::new(g);
    for &x in s.elements() {
        c.add(x);
    }
    c.normalize(g.generators());
    Ok(c.finish())
}

/// `[x, G]`: the subgroup generated by all `x⁻¹·x^g`.
pub fn commutator_set(g: &GroupTable, x: usize) -> Result<ElementSet, GroupError> {
    g.check_index(x)?;
    let mut c = Closure::new(g);
    for y in 0..g.order() {
        c.add(g.commutator(x, y));
    }
    Ok(c.finish())
}

pub fn is_normal(g: &GroupTable, n: &ElementSet) -> Result<bool, GroupError> {
    n.require_closed()?;
    Ok(n.elements()
        .iter()
        .all(|&x| g.generators().iter().all(|&s| n.contains(g.conjugate(x, s)))))
}

pub fn is_abelian(g: &GroupTable, h: &ElementSet) -> Result<bool, GroupError> {
    h.require_closed()?;
    let gens = generating_set(g, h);
    Ok(gens
        .iter()
        .all(|&a| gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a))))
}

pub fn is_cyclic(g: &GroupTable, h: &ElementSet) -> Result<bool, GroupError> {
    h.require_closed()?;
    let n = h.len();
    Ok(h
        .elements()
        .iter()
        .any(|&x| g.element_order(x).expect("member index") == n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedSeries {
    /// `H ⊋ H' ⊋ H'' ⊋ …` up to (and including) the first term that repeats.
    pub terms: Vec<ElementSet>,
    /// Number of strict steps down to the trivial group; `None` when the
    /// series stalls above it.
    pub derived_length: Option<usize>,
}

impl DerivedSeries {
    pub fn is_solvable(&self) -> bool {
        self.derived_length.is_some()
    }
}

/// Commutator subgroup of `h`, taken inside `g`.
fn derived_subgroup(g: &GroupTable, h: &ElementSet) -> ElementSet {
    let gens = generating_set(g, h);
    let mut c = Closure::new(g);
    for &a in &gens {
        for &b in &gens {
            c.add(g.commutator(a, b));
        }
    }
    c.normalize(&gens);
    c.finish()
}

pub fn derived_series(g: &GroupTable, h: &ElementSet) -> Result<DerivedSeries, GroupError> {
    h.require_closed()?;
    let mut terms = vec![h.clone()];
    loop {
        let last = terms.last().expect("non-empty");
        if last.len() == 1 {
            let steps = terms.len() - 1;
            return Ok(DerivedSeries {
                terms,
                derived_length: Some(steps),
            });
        }
        let next = derived_subgroup(g, last);
        if next.len() == last.len() {
            return Ok(DerivedSeries {
                terms,
                derived_length: None,
            });
        }
        terms.push(next);
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AbelianInvariants {
    /// Invariant factors `d₁ | d₂ | …`, ascending; empty for the trivial group.
    Abelian(Vec<usize>),
    NotAbelian,
}

fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors from element-order statistics: for each prime `p`, the
/// number of elements killed by `p^k` is `p^(Σ min(k, λᵢ))` for the p-part
/// partition `λ`.
pub fn abelian_invariants(g: &GroupTable, h: &ElementSet) -> Result<AbelianInvariants, GroupError> {
    if !is_abelian(g, h)? {
        return Ok(AbelianInvariants::NotAbelian);
    }
    let orders: Vec<usize> = h
        .elements()
        .iter()
        .map(|&x| g.element_order(x).expect("member index"))
        .collect();
    let mut partitions: Vec<(usize, Vec<u32>)> = Vec::new();
    for p in prime_factors(h.len()) {
        let mut p_part = 1;
        while h.len().is_multiple_of(p_part * p) {
            p_part *= p;
        }
        let mut ranks = vec![0u32];
        let mut pk = 1usize;
        loop {
            pk *= p;
            let count = orders.iter().filter(|&&o| pk.is_multiple_of(o)).count();
            let mut rank = 0;
            let mut c = count;
            while c > 1 {
                c /= p;
                rank += 1;
            }
            let done = count == p_part;
            ranks.push(rank);
            if done {
                break;
            }
        }
        // parts of size ≥ k, for k = 1, 2, …
        let at_least: Vec<u32> = ranks.windows(2).map(|w| w[1] - w[0]).collect();
        let parts = at_least[0] as usize;
        let mut lambda = vec![0u32; parts];
        for (i, part) in lambda.iter_mut().enumerate() {
            *part = at_least.iter().filter(|&&c| c as usize > i).count() as u32;
        }
        partitions.push((p, lambda));
    }
    let width = partitions.iter().map(|(_, l)| l.len()).max().unwrap_or(0);
    let mut factors = vec![1usize; width];
    for (p, lambda) in &partitions {
        for (i, &e) in lambda.iter().enumerate() {
            factors[i] *= p.pow(e);
        }
    }
    factors.reverse();
    Ok(AbelianInvariants::Abelian(factors))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ElementaryAbelian {
    pub p: usize,
    pub n: u32,
}

/// `Some` when `h` is abelian, non-trivial, and every non-identity element has
/// the same prime order.
pub fn is_elementary_abelian(
    g: &GroupTable,
    h: &ElementSet,
) -> Result<Option<ElementaryAbelian>, GroupError> {
    if h.len() <= 1 || !is_abelian(g, h)? {
        return Ok(None);
    }
    let p = g.element_order(h.elements()[1])?;
    if prime_factors(p) != vec![p] {
        return Ok(None);
    }
    if !h.elements()[1..]
        .iter()
        .all(|&x| g.element_order(x).expect("member index") == p)
    {
        return Ok(None);
    }
    let mut size = h.len();
    let mut n = 0;
    while size > 1 {
        size /= p;
        n += 1;
    }
    Ok(Some(ElementaryAbelian { p, n }))
}

/// A non-cyclic 2-group with exactly one involution.
pub fn is_generalized_quaternion(g: &GroupTable, h: &ElementSet) -> Result<bool, GroupError> {
    h.require_closed()?;
    if !h.len().is_power_of_two() || h.len() < 8 || is_cyclic(g, h)? {
        return Ok(false);
    }
    let involutions = h
        .elements()
        .iter()
        .filter(|&&x| x != 0 && g.mul(x, x) == 0)
        .count();
    Ok(involutions == 1)
}

/// The group on the cosets `gN`, coset `i` being the `i`-th coset met when
/// scanning elements in index order.
pub fn quotient_group(g: &GroupTable, n: &ElementSet) -> Result<GroupTable, GroupError> {
    n.require_closed()?;
    if !is_normal(g, n)? {
        return Err(GroupError::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for &m in n.elements() {
            coset_of[g.mul(x, m)] = id;
        }
    }
    let order = reps.len();
    let mut mul = vec![0u32; order * order];
    for (a, &ra) in reps.iter().enumerate() {
        for (b, &rb) in reps.iter().enumerate() {
            mul[a * order + b] = coset_of[g.mul(ra, rb)] as u32;
        }
    }
    let generators = g
        .generators()
        .iter()
        .map(|&s| coset_of[s])
        .filter(|&c| c != 0)
        .collect();
    Ok(GroupTable::from_raw(order, mul, generators, None))
}

/// Restricts `g` to the subgroup `h`. Returns the new table and the embedding
/// (new index → old index), which is `h`'s sorted element list.
pub fn subgroup_table(
    g: &GroupTable,
    h: &ElementSet,
) -> Result<(GroupTable, Vec<usize>), GroupError> {
    h.require_closed()?;
    let embed = h.elements().to_vec();
    let mut local = vec![usize::MAX; g.order()];
    for (i, &x) in embed.iter().enumerate() {
        local[x] = i;
    }
    let order = embed.len();
    let mut mul = vec![0u32; order * order];
    for (a, &x) in embed.iter().enumerate() {
        for (b, &y) in embed.iter().enumerate() {
            mul[a * order + b] = local[g.mul(x, y)] as u32;
        }
    }
    let generators = generating_set(g, h).into_iter().map(|x| local[x]).collect();
    let labels = g
        .labels()
        .map(|l| embed.iter().map(|&x| l[x].clone()).collect());
    Ok((GroupTable::from_raw(order, mul, generators, labels), embed))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Simplicity {
    /// No normal subgroups besides `1` and `G` (prime cyclic groups count).
    pub simple: bool,
    pub abelian: bool,
}

impl Simplicity {
    pub fn is_nonabelian_simple(&self) -> bool {
        self.simple && !self.abelian
    }
}

/// Checks that the normal closure of every non-identity element is the whole group.
pub fn is_simple(g: &GroupTable) -> Result<Simplicity, GroupError> {
    if g.order() == 1 {
        return Err(GroupError::TrivialGroup);
    }
    let abelian = g.is_abelian();
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    for x in 1..g.order() {
        if seen[x] {
            continue;
        }
        // mark x's conjugacy class; its members have the same normal closure
        let mut orbit = vec![x];
        seen[x] = true;
        let mut i = 0;
        while i < orbit.len() {
            for &s in g.generators() {
                let y = g.conjugate(orbit[i], s);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        let mut c = Closure::new(g);
        c.add(x);
        c.normalize(g.generators());
        if c.members.len() != g.order() {
            return Ok(Simplicity {
                simple: false,
                abelian,
            });
        }
    }
    Ok(Simplicity {
        simple: true,
        abelian,
    })
}
