use std::collections::{HashMap, HashSet};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{GroupError, Permutation};

/// A fully enumerated finite group. Element `0` is the identity.
///
/// `generators` always generates the whole group; class computations rely on it.
#[derive(Clone, Debug)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl GroupTable {
    /// Validates a raw Cayley table (`table[a][b] = a·b`) whose row 0 is the identity.
    pub fn from_cayley_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::InvalidTable("empty table".into()));
        }
        let mut mul = Vec::with_capacity(order * order);
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::InvalidTable(format!("row {a} has wrong length")));
            }
            for &x in row {
                if x >= order {
                    return Err(GroupError::InvalidTable(format!("entry {x} out of range")));
                }
                mul.push(x as u32);
            }
        }
        let mut inv = vec![u32::MAX; order];
        for a in 0..order {
            if mul[a] as usize != a || mul[a * order] as usize != a {
                return Err(GroupError::InvalidTable("element 0 is not the identity".into()));
            }
            for b in 0..order {
                if mul[a * order + b] == 0 {
                    inv[a] = b as u32;
                }
            }
            if inv[a] == u32::MAX || mul[inv[a] as usize * order + a] != 0 {
                return Err(GroupError::InvalidTable(format!("element {a} has no inverse")));
            }
        }
        let mut group = GroupTable {
            order,
            mul,
            inv,
            generators: Vec::new(),
            labels: None,
        };
        group.generators = group.greedy_generators();
        group.check_associativity(usize::MAX, 0)?;
        Ok(group)
    }

    pub(crate) fn from_raw(
        order: usize,
        mul: Vec<u32>,
        generators: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Self {
        let mut inv = vec![0u32; order];
        for a in 0..order {
            let row = &mul[a * order..(a + 1) * order];
            inv[a] = row.iter().position(|&x| x == 0).expect("group element without inverse") as u32;
        }
        GroupTable {
            order,
            mul,
            inv,
            generators,
            labels,
        }
    }

    pub fn trivial() -> Self {
        GroupTable::from_raw(1, vec![0], Vec::new(), None)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g⁻¹·x·g`
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `x⁻¹·g⁻¹·x·g`
    #[inline]
    pub fn commutator(&self, x: usize, g: usize) -> usize {
        self.mul(self.inv(x), self.conjugate(x, g))
    }

    pub fn pow(&self, x: usize, mut k: usize) -> usize {
        let mut acc = 0;
        let mut base = x;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => format!("g{g}"),
        }
    }

    pub fn check_index(&self, g: usize) -> Result<(), GroupError> {
        if g < self.order {
            Ok(())
        } else {
            Err(GroupError::IndexOutOfRange {
                index: g,
                order: self.order,
            })
        }
    }

    pub fn element_order(&self, g: usize) -> Result<usize, GroupError> {
        self.check_index(g)?;
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        Ok(k)
    }

    /// Orders of all elements, indexed by element.
    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order)
            .map(|g| self.element_order(g).expect("index in range"))
            .collect()
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.element_orders()
            .into_iter()
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Evaluates `g₀^e₀ · g₁^e₁ · …` over the stored generator list.
    pub fn word(&self, exponents: &[usize]) -> Result<usize, GroupError> {
        if exponents.len() != self.generators.len() {
            return Err(GroupError::WordLength {
                expected: self.generators.len(),
                found: exponents.len(),
            });
        }
        Ok(exponents
            .iter()
            .zip(&self.generators)
            .fold(0, |acc, (&e, &g)| self.mul(acc, self.pow(g, e))))
    }

    /// Checks associativity on every triple when `exhaustive_below` exceeds the
    /// order, otherwise on `samples` pseudo-random triples.
    pub fn check_associativity(
        &self,
        exhaustive_below: usize,
        samples: usize,
    ) -> Result<(), GroupError> {
        let n = self.order;
        let bad = || GroupError::InvalidTable("multiplication is not associative".into());
        if n < exhaustive_below {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(bad());
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed);
            let mut next = || rng.random_range(0..n);
            for _ in 0..samples {
                let (a, b, c) = (next(), next(), next());
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return Err(bad());
                }
            }
        }
        Ok(())
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut members = vec![0];
        for g in 1..self.order {
            if inside[g] {
                continue;
            }
            gens.push(g);
            inside[g] = true;
            members.push(g);
            // re-close under right multiplication by all generators so far
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for &s in &gens {
                    let y = self.mul(x, s);
                    if !inside[y] {
                        inside[y] = true;
                        members.push(y);
                    }
                }
                i += 1;
            }
        }
        gens
    }
}

/// Enumerates the closure of permutation generators.
///
/// Elements are discovered breadth-first (right multiplication by the
/// generators); each new layer is sorted lexicographically by image list, so
/// indices are reproducible for a fixed generator list.
pub fn from_permutation_generators(
    gens: &[Permutation],
    cap: usize,
) -> Result<GroupTable, GroupError> {
    let first = gens.first().ok_or(GroupError::EmptyGenerators)?;
    let degree = first.degree();
    if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
        return Err(GroupError::DegreeMismatch {
            expected: degree,
            found: bad.degree(),
        });
    }
    let identity = Permutation::identity(degree);
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    let mut elements = vec![identity.clone()];
    index.insert(identity, 0);
    let mut layer = vec![0usize];
    while !layer.is_empty() {
        let mut fresh: HashSet<Permutation> = HashSet::new();
        for &x in &layer {
            for g in gens {
                let y = elements[x].then(g);
                if !index.contains_key(&y) {
                    fresh.insert(y);
                }
            }
        }
        let mut fresh: Vec<Permutation> = fresh.into_iter().collect();
        fresh.sort();
        layer.clear();
        for p in fresh {
            if elements.len() >= cap {
                return Err(GroupError::OrderCapExceeded { cap });
            }
            index.insert(p.clone(), elements.len());
            layer.push(elements.len());
            elements.push(p);
        }
    }
    let order = elements.len();
    let mut mul = vec![0u32; order * order];
    for (a, pa) in elements.iter().enumerate() {
        for (b, pb) in elements.iter().enumerate() {
            mul[a * order + b] = index[&pa.then(pb)] as u32;
        }
    }
    let generators = gens.iter().map(|g| index[g]).collect();
    let labels = elements.iter().map(|p| p.to_string()).collect();
    Ok(GroupTable::from_raw(order, mul, generators, Some(labels)))
}

/// `Z_n` with `i·j = (i + j) mod n`, generated by `1`.
pub fn construct_cyclic(n: usize, cap: usize) -> Result<GroupTable, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidTable("cyclic group of order 0".into()));
    }
    if n > cap {
        return Err(GroupError::OrderCapExceeded { cap });
    }
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = ((a + b) % n) as u32;
        }
    }
    let generators = if n > 1 { vec![1] } else { Vec::new() };
    Ok(GroupTable::from_raw(n, mul, generators, None))
}

/// Pairs `(a, b)` live at index `a·|B| + b`; generators are those of `A`
/// followed by those of `B`.
pub fn construct_direct_product(
    a: &GroupTable,
    b: &GroupTable,
    cap: usize,
) -> Result<GroupTable, GroupError> {
    let (na, nb) = (a.order(), b.order());
    let order = na.checked_mul(nb).filter(|&n| n <= cap);
    let order = order.ok_or(GroupError::OrderCapExceeded { cap })?;
    let mut mul = vec![0u32; order * order];
    for x in 0..order {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..order {
            let (ya, yb) = (y / nb, y % nb);
            mul[x * order + y] = (a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32;
        }
    }
    let generators = a
        .generators()
        .iter()
        .map(|&g| g * nb)
        .chain(b.generators().iter().copied())
        .collect();
    let labels = match (a.labels(), b.labels()) {
        (None, None) => None,
        _ => Some(
            (0..order)
                .map(|x| format!("({}, {})", a.label(x / nb), b.label(x % nb)))
                .collect(),
        ),
    };
    Ok(GroupTable::from_raw(order, mul, generators, labels))
}

/// Semidirect product `N ⋊ H`.
///
/// `action` lists, for elements of `H` that generate `H`, the automorphism
/// `α_h` of `N` as an image list (`image[n] = α_h(n)`). The multiplication is
///
/// ```text
/// (n1, h1)(n2, h2) = (n1 · α_{h1}(n2), h1·h2)
/// ```
///
/// so `h n h⁻¹ = α_h(n)`. Exponent notation `n^h = h⁻¹nh` therefore
/// corresponds to `α_h = (n ↦ n^h)⁻¹`; use [`crate::workbench`] catalog
/// entries when working from presentations written that way.
///
/// The pair `(n, h)` lives at index `n·|H| + h`; generators are those of `N`
/// followed by the acting elements.
pub fn construct_semidirect_product(
    n: &GroupTable,
    h: &GroupTable,
    action: &[(usize, Vec<usize>)],
    cap: usize,
) -> Result<GroupTable, GroupError> {
    let (nn, nh) = (n.order(), h.order());
    let order = nn.checked_mul(nh).filter(|&o| o <= cap);
    let order = order.ok_or(GroupError::OrderCapExceeded { cap })?;
    for (pos, (hg, image)) in action.iter().enumerate() {
        h.check_index(*hg)?;
        if !is_automorphism(n, image) {
            return Err(GroupError::NotAnAutomorphism { generator: pos });
        }
    }
    // α as a homomorphism H → Aut(N), built by walking H from the identity
    let mut alpha: Vec<Option<Vec<usize>>> = vec![None; nh];
    alpha[0] = Some((0..nn).collect());
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (hg, image) in action {
            let y = h.mul(x, *hg);
            let ax = alpha[x].as_ref().expect("visited");
            // α_{x·g} = α_x ∘ α_g
            let composed: Vec<usize> = image.iter().map(|&m| ax[m]).collect();
            match &alpha[y] {
                Some(existing) if *existing != composed => {
                    return Err(GroupError::ActionInconsistentWithRelations)
                }
                Some(_) => {}
                None => {
                    alpha[y] = Some(composed);
                    queue.push(y);
                }
            }
        }
    }
    if queue.len() != nh {
        return Err(GroupError::DoesNotGenerate);
    }
    let alpha: Vec<Vec<usize>> = alpha.into_iter().map(|a| a.expect("all visited")).collect();
    let mut mul = vec![0u32; order * order];
    for x in 0..order {
        let (xn, xh) = (x / nh, x % nh);
        let ax = &alpha[xh];
        for y in 0..order {
            let (yn, yh) = (y / nh, y % nh);
            mul[x * order + y] = (n.mul(xn, ax[yn]) * nh + h.mul(xh, yh)) as u32;
        }
    }
    let generators = n
        .generators()
        .iter()
        .map(|&g| g * nh)
        .chain(action.iter().map(|(hg, _)| *hg))
        .collect();
    Ok(GroupTable::from_raw(order, mul, generators, None))
}

fn is_automorphism(n: &GroupTable, image: &[usize]) -> bool {
    let order = n.order();
    if image.len() != order {
        return false;
    }
    let mut seen = vec![false; order];
    for &x in image {
        if x >= order || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    (0..order).all(|a| (0..order).all(|b| image[n.mul(a, b)] == n.mul(image[a], image[b])))
}

/// Extends `gens[i] ↦ images[i]` to a homomorphism `src → dst`.
///
/// Every edge `x → x·g` of the Cayley graph is checked, so success means the
/// assignment is well defined on all of `src`.
pub fn extend_to_homomorphism(
    src: &GroupTable,
    gens: &[usize],
    images: &[usize],
    dst: &GroupTable,
) -> Result<Vec<usize>, GroupError> {
    assert_eq!(gens.len(), images.len());
    for &g in gens {
        src.check_index(g)?;
    }
    for &g in images {
        dst.check_index(g)?;
    }
    let mut map: Vec<Option<usize>> = vec![None; src.order()];
    map[0] = Some(0);
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        let fx = map[x].expect("visited");
        for (&g, &fg) in gens.iter().zip(images) {
            let y = src.mul(x, g);
            let fy = dst.mul(fx, fg);
            match map[y] {
                Some(existing) if existing != fy => return Err(GroupError::NotAHomomorphism),
                Some(_) => {}
                None => {
                    map[y] = Some(fy);
                    queue.push(y);
                }
            }
        }
    }
    if queue.len() != src.order() {
        return Err(GroupError::DoesNotGenerate);
    }
    Ok(map.into_iter().map(|m| m.expect("all visited")).collect())
}
