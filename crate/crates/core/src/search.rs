use rayon::prelude::*;

/// Finds the lowest index in `0..count` for which `probe` succeeds.
///
/// With more than one thread the range is searched concurrently, but the
/// result is still the lowest successful index, so the outcome does not
/// depend on `threads`.
pub(crate) fn first_success<T, F>(count: u64, threads: usize, probe: F) -> Option<(u64, T)>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    if threads <= 1 {
        return (0..count).find_map(|i| probe(i).map(|t| (i, t)));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");
    pool.install(|| (0..count).into_par_iter().find_map_first(|i| probe(i).map(|t| (i, t))))
}
