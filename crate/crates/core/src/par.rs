//! Data-parallel helpers. With the `parallel` feature off every call runs
//! sequentially; results are identical and in input order either way.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parallelism {
    Sequential,
    Parallel,
}

impl Default for Parallelism {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Parallelism::Parallel
        } else {
            Parallelism::Sequential
        }
    }
}

impl Parallelism {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Parallelism::Parallel
    }
}

/// Order-preserving map.
pub fn map<T, R, F>(mode: Parallelism, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

/// The first `Some` in input order, regardless of which worker finds it.
pub fn find_map_first<T, R, F>(mode: Parallelism, items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().find_map_first(f);
    }
    let _ = mode;
    items.iter().find_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u32> = (0..1000).collect();
        let seq = map(Parallelism::Sequential, &xs, |x| x * x);
        let par = map(Parallelism::Parallel, &xs, |x| x * x);
        assert_eq!(seq, par);

        let pick = |x: &u32| (x % 97 == 13 && *x > 100).then_some(*x);
        assert_eq!(
            find_map_first(Parallelism::Sequential, &xs, pick),
            Some(110)
        );
        assert_eq!(find_map_first(Parallelism::Parallel, &xs, pick), Some(110));
    }
}
