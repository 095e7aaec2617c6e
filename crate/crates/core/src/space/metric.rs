use crate::error::Result;
use crate::scalar::Scalar;
use crate::space::exhaustion::Exhaustion;
use crate::space::patch::CompactPatch;
use crate::space::target::Evaluable;

/// Grid version of `p_K(f - g) = max_{s in K} |f(s) - g(s)|`.
pub fn sup_distance<T, F, G>(f: &F, g: &G, patch: &CompactPatch<T>) -> Result<T>
where
    T: Scalar,
    F: Evaluable<T> + ?Sized,
    G: Evaluable<T> + ?Sized,
{
    let mut sup = T::zero();
    for &s in patch.grid_points() {
        let at = |e: crate::Error| e.at_point(s.re.as_f64(), s.im.as_f64());
        let gap = (f.eval(s).map_err(at)? - g.eval(s).map_err(at)?).norm();
        sup = sup.max(gap);
    }
    Ok(sup)
}

/// Truncated Fréchet distance and the bound on the omitted tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrechetDistance<T> {
    /// `sum_{n <= depth} 2^{-n} min(1, p_n(f - g))`.
    pub value: T,
    /// `2^{-depth}`, the largest possible contribution of `n > depth`.
    pub tail_bound: T,
}

/// `d(f, g) = sum_n 2^{-n} min(1, p_n(f - g))` over the exhaustion, cut at `depth`.
pub fn frechet_distance<T, F, G>(
    f: &F,
    g: &G,
    exhaustion: &Exhaustion<T>,
    depth: usize,
) -> Result<FrechetDistance<T>>
where
    T: Scalar,
    F: Evaluable<T> + ?Sized,
    G: Evaluable<T> + ?Sized,
{
    if depth == 0 {
        return Err(crate::Error::invalid("Fréchet depth must be at least 1"));
    }
    let half = T::lit(0.5);
    let mut weight = T::one();
    let mut value = T::zero();
    for n in 1..=depth {
        weight = weight * half;
        let p = sup_distance(f, g, &exhaustion.patch(n)?)?;
        value = value + weight * p.min(T::one());
    }
    Ok(FrechetDistance {
        value,
        tail_bound: weight,
    })
}
