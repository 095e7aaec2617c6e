use rayon::prelude::*;

use crate::error::{Error, Result};

/// `(0..n).map(f)` collected in index order, on `threads` workers when `threads > 1`.
pub fn map_indexed<R, F>(n: usize, threads: usize, f: F) -> Result<Vec<R>>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    if threads <= 1 || n <= 1 {
        return Ok((0..n).map(f).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::invalid(format!("cannot start {threads} worker threads: {e}")))?;
    Ok(pool.install(|| (0..n).into_par_iter().map(f).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let seq = map_indexed(1000, 1, |j| j * j).unwrap();
        let par = map_indexed(1000, 8, |j| j * j).unwrap();
        assert_eq!(seq, par);
        assert!(map_indexed(0, 4, |j| j).unwrap().is_empty());
    }
}
