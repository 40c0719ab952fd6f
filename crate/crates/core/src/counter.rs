use serde::Serialize;

/// Tallies of elementary work done by one evaluation.
///
/// Owned by the caller and threaded through by `&mut`, so evaluations that
/// use distinct counters can run on different threads.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct OpCounter {
    /// Evaluations of `floor(i/j) - floor((i-1)/j)`.
    pub floor_pair_evals: u64,
    /// Multiples marked by the windowed divisor sieve.
    pub multiple_marks: u64,
    /// Evaluations of the prime indicator P(i).
    pub p_evals: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn floor_pair(&mut self) {
        self.floor_pair_evals += 1;
    }

    pub(crate) fn mark(&mut self) {
        self.multiple_marks += 1;
    }

    pub(crate) fn p_eval(&mut self) {
        self.p_evals += 1;
    }
}
