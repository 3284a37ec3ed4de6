use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("not a permutation of 0..{len}: {reason}")]
pub struct InvalidOrdering {
    pub len: usize,
    pub reason: String,
}

/// A permutation of qubit lines. `position(i)` is the new index of original
/// line `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineOrdering {
    perm: Vec<usize>,
}

impl LineOrdering {
    pub fn new(perm: Vec<usize>) -> Result<Self, InvalidOrdering> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n {
                return Err(InvalidOrdering { len: n, reason: format!("position {p} out of range") });
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(InvalidOrdering { len: n, reason: format!("position {p} used twice") });
            }
        }
        Ok(LineOrdering { perm })
    }

    pub fn identity(n: usize) -> Self {
        LineOrdering { perm: (0..n).collect() }
    }

    /// Builds the ordering that places `sequence[k]` at position `k`.
    pub fn from_sequence(sequence: &[usize]) -> Result<Self, InvalidOrdering> {
        let inv = LineOrdering::new(sequence.to_vec())?;
        Ok(inv.inverse())
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn position(&self, line: usize) -> usize {
        self.perm[line]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Lines listed by position: `sequence()[k]` is the original line that
    /// ends up at position `k`.
    pub fn sequence(&self) -> Vec<usize> {
        self.inverse().perm
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        LineOrdering { perm: inv }
    }

    /// `self` followed by `next`: line `i` ends at `next.position(self.position(i))`.
    pub fn then(&self, next: &LineOrdering) -> Self {
        assert_eq!(self.len(), next.len(), "orderings differ in length");
        LineOrdering { perm: self.perm.iter().map(|&p| next.perm[p]).collect() }
    }
}

impl fmt::Display for LineOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.perm.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(LineOrdering::new(vec![0, 0]).is_err());
        assert!(LineOrdering::new(vec![0, 2]).is_err());
        assert!(LineOrdering::new(vec![]).is_ok());
    }

    #[test]
    fn sequence_and_inverse() {
        let o = LineOrdering::new(vec![2, 0, 1]).unwrap();
        assert_eq!(o.sequence(), vec![1, 2, 0]);
        assert_eq!(LineOrdering::from_sequence(&[1, 2, 0]).unwrap(), o);
        assert!(o.then(&o.inverse()).is_identity());
    }
}
