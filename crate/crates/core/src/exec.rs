//! Execution mode for independent sweeps: rayon data parallelism when the
//! `parallel` feature is enabled, plain iteration otherwise.

use std::sync::atomic::{AtomicU8, Ordering};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Sequential,
    Parallel,
}

const SEQ: u8 = 0;
const PAR: u8 = 1;

static MODE: AtomicU8 = AtomicU8::new(if cfg!(feature = "parallel") { PAR } else { SEQ });

/// Current process-wide mode.
pub fn mode() -> Mode {
    match MODE.load(Ordering::Relaxed) {
        PAR if cfg!(feature = "parallel") => Mode::Parallel,
        _ => Mode::Sequential,
    }
}

/// Selects the mode; `Parallel` degrades to `Sequential` without the feature.
pub fn set_mode(mode: Mode) {
    let v = match mode {
        Mode::Parallel if cfg!(feature = "parallel") => PAR,
        _ => SEQ,
    };
    MODE.store(v, Ordering::Relaxed);
}

/// Caps the global worker pool. Only the first call has any effect; returns
/// whether the cap was applied.
pub fn configure_threads(n: usize) -> bool {
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()
            .is_ok()
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = n;
        false
    }
}

/// Maps `f` over `items` in the current mode, preserving order.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    map_in(mode(), items, f)
}

pub fn map_in<T, R, F>(mode: Mode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Maps `f` over `0..n` in the current mode.
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    match mode() {
        #[cfg(feature = "parallel")]
        Mode::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        _ => (0..n).map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u64> = (0..200).collect();
        let a = map_in(Mode::Sequential, &xs, |x| x * x + 1);
        let b = map_in(Mode::Parallel, &xs, |x| x * x + 1);
        assert_eq!(a, b);
    }
}
