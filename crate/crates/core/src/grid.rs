//! Grid generation and order-preserving evaluation over grids.
//!
//! With the `parallel` feature (on by default) [`map_grid`] fans out over the
//! rayon pool; without it, or via [`map_grid_sequential`], it runs in order on
//! the calling thread. Output order always follows the input.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// `n` evenly spaced points from `lo` to `hi`, both included.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (n - 1) as f64;
            (0..n)
                .map(|i| if i == n - 1 { hi } else { lo + step * i as f64 })
                .collect()
        }
    }
}

/// `n` logarithmically spaced points from `lo` to `hi`, both included. Both
/// ends must be positive.
pub fn logspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    let mut v: Vec<f64> = linspace(a, b, n).into_iter().map(f64::exp).collect();
    if let Some(first) = v.first_mut() {
        *first = lo;
    }
    if n > 1 {
        v[n - 1] = hi;
    }
    v
}

pub fn map_grid_sequential<T, F>(xs: &[f64], f: F) -> Vec<T>
where
    F: Fn(f64) -> T,
{
    xs.iter().map(|&x| f(x)).collect()
}

#[cfg(feature = "parallel")]
pub fn map_grid<T, F>(xs: &[f64], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(f64) -> T + Sync + Send,
{
    xs.par_iter().map(|&x| f(x)).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_grid<T, F>(xs: &[f64], f: F) -> Vec<T>
where
    T: Send,
    F: Fn(f64) -> T + Sync + Send,
{
    map_grid_sequential(xs, f)
}

/// [`map_grid`] for fallible maps. Returns the error of the lowest index.
pub fn try_map_grid<T, E, F>(xs: &[f64], f: F) -> Result<Vec<T>, E>
where
    T: Send,
    E: Send,
    F: Fn(f64) -> Result<T, E> + Sync + Send,
{
    map_grid(xs, f).into_iter().collect()
}
