use std::fmt;

use serde::Serialize;

/// Strictly increasing 1-based index set `i_1 < ... < i_{k+1}` in `[1, n+1]`.
///
/// Only [`GrassmannContext::symbol`](super::GrassmannContext::symbol) builds
/// these, so a symbol is always valid for the context that made it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SchubertSymbol(pub(crate) Vec<usize>);

impl SchubertSymbol {
    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SchubertSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}
