//! Data-parallel map helpers.
//!
//! With the `parallel` feature (default) the hot per-task loops fan out over
//! rayon; without it the same entry points run sequentially. Results are
//! collected in input order either way, so outputs are deterministic and
//! independent of thread count.

/// Execution mode for the data-parallel kernels.
///
/// `Mode::Par` is only available with the `parallel` feature; `Mode::default()`
/// picks the parallel path when compiled in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Seq,
    #[cfg(feature = "parallel")]
    Par,
}

impl Default for Mode {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Mode::Par
    }
    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Mode::Seq
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map_items<T, R, F>(mode: Mode, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    match mode {
        Mode::Seq => items.into_iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Mode::Par => {
            use rayon::prelude::*;
            items.into_par_iter().map(f).collect()
        }
    }
}

/// Maps `f` over `0..n`, preserving order.
pub fn map_range<R, F>(mode: Mode, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match mode {
        Mode::Seq => (0..n).map(f).collect(),
        #[cfg(feature = "parallel")]
        Mode::Par => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seq_and_par_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let seq = map_items(Mode::Seq, items.clone(), |x| x * x + 1);
        #[cfg(feature = "parallel")]
        {
            let par = map_items(Mode::Par, items, |x| x * x + 1);
            assert_eq!(seq, par);
        }
        assert_eq!(seq[10], 101);
    }
}
