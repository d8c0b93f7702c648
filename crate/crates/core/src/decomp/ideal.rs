use std::collections::VecDeque;

use crate::magma::{ElementId, Magma};

/// Principal two-sided ideal `I_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    pub generator: ElementId,
    members: Vec<bool>,
}

impl Ideal {
    pub fn contains(&self, x: ElementId) -> bool {
        self.members[x.index()]
    }

    /// Members in increasing order.
    pub fn members(&self) -> Vec<ElementId> {
        self.members
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(i, _)| ElementId::new(i))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Smallest subset containing `a` and closed under multiplication by any
/// element on either side, as a breadth-first fixpoint.
pub fn principal_ideal(magma: &Magma, a: ElementId) -> Ideal {
    let n = magma.order();
    let mut members = vec![false; n];
    let mut queue = VecDeque::from([a.index()]);
    members[a.index()] = true;
    while let Some(m) = queue.pop_front() {
        for x in 0..n {
            for p in [magma.op(x, m), magma.op(m, x)] {
                if !members[p] {
                    members[p] = true;
                    queue.push_back(p);
                }
            }
        }
    }
    Ideal {
        generator: a,
        members,
    }
}
