//! First-witness search over an index range.

use crate::error::{Error, Result};

/// How a black-box scan distributes its index range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    #[default]
    Sequential,
    /// `jobs = 0` uses every available core. Without the `parallel` feature
    /// this runs sequentially.
    Parallel { jobs: usize },
}

impl Exec {
    pub fn from_jobs(jobs: usize) -> Self {
        if jobs == 1 {
            Exec::Sequential
        } else {
            Exec::Parallel { jobs }
        }
    }
}

/// Outcome of [`find_first`]: the smallest index whose probe succeeded, and
/// how many indices that accounts for (`index + 1`, or `count` when none).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanResult<W> {
    pub hit: Option<(u128, W)>,
    pub tested: u128,
}

#[cfg(feature = "parallel")]
const BLOCK: u64 = 1 << 12;

/// Smallest `i < count` with `probe(i) = Some(_)`. Parallel runs split the
/// range into consecutive blocks and keep the minimal hit, so the answer
/// never depends on scheduling.
pub fn find_first<W, F>(count: u128, exec: Exec, probe: F) -> Result<ScanResult<W>>
where
    W: Send,
    F: Fn(u128) -> Option<W> + Sync,
{
    let count = u64::try_from(count).map_err(|_| Error::TooLarge(count))?;
    let hit = match exec {
        Exec::Sequential => sequential(0, count, &probe),
        Exec::Parallel { jobs } => parallel(count, jobs, &probe)?,
    };
    let tested = hit.as_ref().map_or(u128::from(count), |(i, _)| i + 1);
    Ok(ScanResult { hit, tested })
}

fn sequential<W, F>(start: u64, end: u64, probe: &F) -> Option<(u128, W)>
where
    F: Fn(u128) -> Option<W>,
{
    (start..end).find_map(|i| probe(u128::from(i)).map(|w| (u128::from(i), w)))
}

#[cfg(feature = "parallel")]
fn parallel<W, F>(count: u64, jobs: usize, probe: &F) -> Result<Option<(u128, W)>>
where
    W: Send,
    F: Fn(u128) -> Option<W> + Sync,
{
    use rayon::prelude::*;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    Ok(pool.install(|| {
        let mut start = 0;
        while start < count {
            let end = count.min(start.saturating_add(BLOCK));
            let hit = (start..end)
                .into_par_iter()
                .find_map_first(|i| probe(u128::from(i)).map(|w| (u128::from(i), w)));
            if hit.is_some() {
                return hit;
            }
            start = end;
        }
        None
    }))
}

#[cfg(not(feature = "parallel"))]
fn parallel<W, F>(count: u64, _jobs: usize, probe: &F) -> Result<Option<(u128, W)>>
where
    F: Fn(u128) -> Option<W>,
{
    Ok(sequential(0, count, probe))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_hit_is_minimal() {
        let probe = |i: u128| (i % 977 == 500 || i == 9000).then_some(i * 2);
        for exec in [Exec::Sequential, Exec::Parallel { jobs: 4 }] {
            let r = find_first(20_000, exec, probe).unwrap();
            assert_eq!(r.hit, Some((500, 1000)));
            assert_eq!(r.tested, 501);
        }
        let none = find_first(10, Exec::Parallel { jobs: 2 }, |_| None::<()>).unwrap();
        assert_eq!(
            none,
            ScanResult {
                hit: None,
                tested: 10
            }
        );
        assert!(find_first(u128::MAX, Exec::Sequential, |_| None::<()>).is_err());
    }
}
