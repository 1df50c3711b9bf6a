use crate::error::Result;
use crate::group::{FiniteGroup, IDENTITY};
use crate::subgroup::Subgroup;

/// A Frobenius kernel together with the abelian-ness of the kernel and of a
/// complement. A complement is isomorphic to `G/kernel`, so its flag is read
/// off the quotient.
#[derive(Clone, Debug)]
pub struct FrobeniusData {
    pub kernel: Subgroup,
    pub kernel_abelian: bool,
    pub quotient_abelian: bool,
}

/// `C_G(k) ⊆ K` for every nonidentity `k ∈ K`.
fn is_frobenius_kernel(g: &FiniteGroup, k_sub: &Subgroup) -> bool {
    k_sub
        .members()
        .iter()
        .filter(|&&k| k != IDENTITY)
        .all(|&k| (0..g.order()).all(|x| k_sub.contains(x) || !g.commute(x, k)))
}

/// Finds a proper nontrivial normal subgroup satisfying the Frobenius-kernel
/// centralizer criterion.
pub fn is_frobenius(g: &FiniteGroup) -> Option<FrobeniusData> {
    let kernel = g
        .normal_subgroups()
        .into_iter()
        .filter(|k| !k.is_trivial() && !k.is_whole())
        .find(|k| is_frobenius_kernel(g, k))?;
    let gens = g.generating_set(&kernel);
    let kernel_abelian = gens
        .iter()
        .enumerate()
        .all(|(i, &a)| gens[i + 1..].iter().all(|&b| g.commute(a, b)));
    // |G/K| < |K| for a Frobenius kernel, so this quotient is always small.
    let quotient_abelian = g
        .quotient_group(&kernel)
        .expect("Frobenius kernel is normal and of small index")
        .is_abelian();
    Some(FrobeniusData {
        kernel,
        kernel_abelian,
        quotient_abelian,
    })
}

/// `G/Z(G)` is nontrivial and Frobenius with abelian kernel and complement.
pub fn is_quasi_frobenius_abelian(g: &FiniteGroup) -> Result<bool> {
    Ok(quasi_frobenius_data(g)?.is_some_and(|d| d.kernel_abelian && d.quotient_abelian))
}

pub(crate) fn quasi_frobenius_data(g: &FiniteGroup) -> Result<Option<FrobeniusData>> {
    let z = g.center();
    if z.is_whole() {
        return Ok(None);
    }
    if z.is_trivial() {
        return Ok(is_frobenius(g));
    }
    Ok(is_frobenius(&g.quotient_group(&z)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Family;
    use crate::group::DEFAULT_ORDER_CAP;

    fn build(name: &str) -> FiniteGroup {
        Family::parse(name).unwrap().build(DEFAULT_ORDER_CAP).unwrap()
    }

    #[test]
    fn frobenius_examples() {
        let s3 = is_frobenius(&build("S3")).unwrap();
        assert_eq!(s3.kernel.order(), 3);
        assert!(s3.kernel_abelian && s3.quotient_abelian);

        let a4 = is_frobenius(&build("A4")).unwrap();
        assert_eq!(a4.kernel.order(), 4);
        assert!(a4.kernel_abelian && a4.quotient_abelian);

        assert!(is_frobenius(&build("Q8")).is_none());
        assert!(is_frobenius(&build("S4")).is_none());
        assert!(is_frobenius(&build("C6")).is_none());

        let f20 = is_frobenius(&build("Aff5")).unwrap();
        assert_eq!(f20.kernel.order(), 5);
    }

    #[test]
    fn quasi_frobenius_examples() {
        assert!(is_quasi_frobenius_abelian(&build("S3")).unwrap());
        assert!(!is_quasi_frobenius_abelian(&build("D8")).unwrap());
        assert!(!is_quasi_frobenius_abelian(&build("C12")).unwrap());
        // S3 × C2 has center C2 and quotient S3
        assert!(is_quasi_frobenius_abelian(&build("S3xC2")).unwrap());
        // D10 is Frobenius C5 ⋊ C2
        assert!(is_quasi_frobenius_abelian(&build("D10")).unwrap());
    }
}
