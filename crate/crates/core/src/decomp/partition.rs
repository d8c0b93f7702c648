use crate::error::{Error, Result};
use crate::magma::ElementId;

/// A partition of `0..n` into classes.
///
/// Class indices are `0..k`, assigned in increasing order of each class's
/// smallest member, and each class lists its members in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<Vec<ElementId>>,
}

impl Partition {
    /// Normalizes arbitrary per-element labels: elements sharing a label
    /// share a class.
    pub fn from_labels<L: PartialEq + Copy>(labels: &[L]) -> Self {
        let mut seen: Vec<L> = Vec::new();
        let mut class_of = Vec::with_capacity(labels.len());
        let mut classes: Vec<Vec<ElementId>> = Vec::new();
        for (i, &label) in labels.iter().enumerate() {
            let k = match seen.iter().position(|&l| l == label) {
                Some(k) => k,
                None => {
                    seen.push(label);
                    classes.push(Vec::new());
                    seen.len() - 1
                }
            };
            class_of.push(k);
            classes[k].push(ElementId::new(i));
        }
        Partition { class_of, classes }
    }

    /// Builds a partition from explicit classes, which must be disjoint,
    /// nonempty and cover `0..n`.
    pub fn from_classes(n: usize, classes: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (k, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::MalformedPartition(format!("class {k} is empty")));
            }
            for &x in class {
                if x >= n {
                    return Err(Error::MalformedPartition(format!(
                        "element {x} out of range"
                    )));
                }
                if labels[x] != usize::MAX {
                    return Err(Error::MalformedPartition(format!(
                        "element {x} listed twice"
                    )));
                }
                labels[x] = k;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::MalformedPartition(format!(
                "element {x} not covered"
            )));
        }
        Ok(Partition::from_labels(&labels))
    }

    pub fn identity(n: usize) -> Self {
        let labels: Vec<usize> = (0..n).collect();
        Partition::from_labels(&labels)
    }

    pub fn universal(n: usize) -> Self {
        Partition::from_labels(&vec![0u8; n])
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    #[inline]
    pub fn class_of(&self, x: ElementId) -> usize {
        self.class_of[x.index()]
    }

    pub fn classes(&self) -> &[Vec<ElementId>] {
        &self.classes
    }

    pub fn same_class(&self, a: ElementId, b: ElementId) -> bool {
        self.class_of(a) == self.class_of(b)
    }
}
