use super::ClassError;
use crate::group::GroupTable;

/// The conjugacy classes of a group.
///
/// Class `0` is `{1}`; the rest are ordered by size, ties broken by smallest
/// element index. Each class is sorted, so its first element is the
/// representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPartition {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    inverse_class: Vec<usize>,
    element_orders: Vec<usize>,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn size(&self, i: usize) -> usize {
        self.classes[i].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn representative(&self, i: usize) -> usize {
        self.classes[i][0]
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn inverse_class(&self, i: usize) -> usize {
        self.inverse_class[i]
    }

    /// Order of the elements in class `i`.
    pub fn element_order(&self, i: usize) -> usize {
        self.element_orders[i]
    }

    pub fn element_orders(&self) -> &[usize] {
        &self.element_orders
    }

    pub fn check_index(&self, i: usize) -> Result<(), ClassError> {
        if i < self.classes.len() {
            Ok(())
        } else {
            Err(ClassError::IndexOutOfRange {
                index: i,
                classes: self.classes.len(),
            })
        }
    }

    /// A class is real when it equals its inverse class.
    pub fn is_real(&self, i: usize) -> Result<bool, ClassError> {
        self.check_index(i)?;
        Ok(self.inverse_class[i] == i)
    }
}

pub fn conjugacy_classes(g: &GroupTable) -> ClassPartition {
    let n = g.order();
    let mut orbit_id = vec![usize::MAX; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        if orbit_id[x] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut orbit = vec![x];
        orbit_id[x] = id;
        let mut i = 0;
        while i < orbit.len() {
            for &s in g.generators() {
                let y = g.conjugate(orbit[i], s);
                if orbit_id[y] == usize::MAX {
                    orbit_id[y] = id;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    // identity first (size 1, smallest element 0), then by size and smallest member
    orbits.sort_by_key(|c| (c.len(), c[0]));
    let mut class_of = vec![0; n];
    for (i, c) in orbits.iter().enumerate() {
        for &x in c {
            class_of[x] = i;
        }
    }
    let inverse_class = orbits
        .iter()
        .map(|c| class_of[g.inv(c[0])])
        .collect();
    let element_orders = orbits
        .iter()
        .map(|c| g.element_order(c[0]).expect("valid index"))
        .collect();
    ClassPartition {
        classes: orbits,
        class_of,
        inverse_class,
        element_orders,
    }
}
